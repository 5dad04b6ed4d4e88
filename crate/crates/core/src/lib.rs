//! Exact counts of `w`-coprime tuples of S-integers and of integral ideals in
//! function fields over finite fields.
//!
//! ```
//! use wcoprime::theorems::thm2_q_exact;
//! use wcoprime::zeta::{CurveSpec, SSpec, SZeta};
//!
//! let z = SZeta::new(&CurveSpec::e2_supersingular(), &SSpec::new(vec![1]).unwrap(), 20).unwrap();
//! assert_eq!(z.value(2).unwrap().to_string(), "9/4");
//! assert_eq!(thm2_q_exact(&z, 2, 2, 1).unwrap(), 61.into());
//! ```

pub mod arith;
pub mod budget;
pub mod cli;
pub mod error;
pub mod field;
mod mask;
pub mod divisor;
pub mod genus0;
pub mod theorems;
pub mod rational;
pub mod series;
pub mod zeta;
