//! Integer power series truncated at a fixed order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients `c_0..=c_T` of an integer power series. Reads past `T` fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedIntSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedIntSeries {
    /// Pads or cuts `coeffs` to exactly `truncation + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, truncation: usize) -> Self {
        coeffs.resize(truncation + 1, BigInt::zero());
        TruncatedIntSeries { coeffs }
    }

    pub fn one(truncation: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one()], truncation)
    }

    /// `1 / (1 - ratio * z)`.
    pub fn geometric(ratio: &BigInt, truncation: usize) -> Self {
        let mut coeffs = Vec::with_capacity(truncation + 1);
        let mut c = BigInt::one();
        for _ in 0..=truncation {
            coeffs.push(c.clone());
            c *= ratio;
        }
        TruncatedIntSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::Truncation {
            requested: k,
            truncation: self.truncation(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.truncation().min(other.truncation());
        let mut out = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedIntSeries { coeffs: out }
    }

    /// Multiplies by a polynomial given by its coefficients.
    pub fn mul_poly(&self, poly: &[BigInt]) -> Self {
        self.mul(&Self::from_coeffs(poly.to_vec(), self.truncation()))
    }

    /// Multiplicative inverse; the constant term must be a unit of `Z`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::InvalidArgument(format!(
                "series with constant term {c0} has no integer inverse"
            )));
        }
        let t = self.truncation();
        let mut inv: Vec<BigInt> = Vec::with_capacity(t + 1);
        inv.push(c0.clone());
        for k in 1..=t {
            let s: BigInt = (1..=k).map(|j| &self.coeffs[j] * &inv[k - j]).sum();
            inv.push(-s * c0);
        }
        Ok(TruncatedIntSeries { coeffs: inv })
    }

    /// Running sums `c_0 + ... + c_k`.
    pub fn partial_sums(&self) -> Self {
        let mut acc = BigInt::zero();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect();
        TruncatedIntSeries { coeffs }
    }
}
