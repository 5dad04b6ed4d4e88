use std::io::Write;

use wcoprime::cli::{emit_report, Format, Report};
use wcoprime::theorems::{implied_constant, thm1_report, thm2_report};
use wcoprime::zeta::{CurveSpec, SSpec, SZeta};

fn main() {
    let z = SZeta::new(&CurveSpec::rational(3), &SSpec::new(vec![1]).unwrap(), 40).unwrap();
    let elements = thm1_report(&z, 2, 1, 1..=8).unwrap();
    let ideals = thm2_report(&z, 2, 1, 1..=8).unwrap();
    eprintln!("implied constants: elements {:?}, ideals {:?}",
        implied_constant(&elements).map(|c| c.to_string()),
        implied_constant(&ideals).map(|c| c.to_string()));

    let mut out = std::io::stdout().lock();
    out.write_all(&emit_report(&Report::Counts(elements), Format::Csv)).unwrap();
    out.write_all(&emit_report(&Report::Counts(ideals), Format::Csv)).unwrap();
}
