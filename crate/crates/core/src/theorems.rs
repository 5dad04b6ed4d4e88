//! Exact counts set against the asymptotic main terms.
//!
//! Every quantity here is an exact integer or rational. A [`CountReport`]
//! row carries the exact count, the main term, their difference and the
//! difference divided by the size of the expected error class, so that the
//! implied constant can be read off as the largest ratio over a range.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::genus0::fast_v_from_series;
use crate::rational::ExactRational;
use crate::zeta::SZeta;

fn ser_opt_bigint<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Shape of the error term a row is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundClass {
    /// `q^{N/w}`, evaluated as `q^{floor(N/w)}`.
    #[serde(rename = "q^(N/w)")]
    ElementsQPow,
    /// `q^{n/w}`, evaluated as `q^{floor(n/w)}`.
    #[serde(rename = "q^(n/w)")]
    IdealsQPow,
    #[serde(rename = "n*q^n")]
    NTimesQPow,
    #[serde(rename = "q^(n(m-1))")]
    QPowMMinusOne,
}

impl fmt::Display for BoundClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundClass::ElementsQPow => "q^(N/w)",
            BoundClass::IdealsQPow => "q^(n/w)",
            BoundClass::NTimesQPow => "n*q^n",
            BoundClass::QPowMMinusOne => "q^(n(m-1))",
        };
        f.write_str(s)
    }
}

impl BoundClass {
    /// The ideal-counting class: `m = 1`, then `m = 2, w = 1`, then everything else.
    pub fn for_ideals(m: u32, w: u32) -> Self {
        match (m, w) {
            (1, _) => BoundClass::IdealsQPow,
            (2, 1) => BoundClass::NTimesQPow,
            _ => BoundClass::QPowMMinusOne,
        }
    }

    pub fn value(&self, q: u64, size: i64, m: u32, w: u32) -> BigInt {
        let q = BigInt::from(q);
        let size = size.max(0);
        match self {
            BoundClass::ElementsQPow | BoundClass::IdealsQPow => q.pow((size / w as i64) as u32),
            BoundClass::NTimesQPow => BigInt::from(size) * q.pow(size as u32),
            BoundClass::QPowMMinusOne => q.pow((size * (m as i64 - 1)) as u32),
        }
    }
}

/// Whether a row counts elements (size `N`) or ideals (size `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SizeKind {
    N,
    #[serde(rename = "n")]
    Lower,
}

impl fmt::Display for SizeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SizeKind::N => "N",
            SizeKind::Lower => "n",
        })
    }
}

/// One verification row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub curve: String,
    pub q: u64,
    pub genus: u32,
    pub s: String,
    pub m: u32,
    pub w: u32,
    pub size_kind: SizeKind,
    pub size: i64,
    /// Absent when no exact count is available (element counts at genus >= 1).
    #[serde(serialize_with = "ser_opt_bigint")]
    pub exact_count: Option<BigInt>,
    pub main_term: ExactRational,
    pub error: Option<ExactRational>,
    pub error_bound_class: BoundClass,
    #[serde(serialize_with = "ser_bigint")]
    pub bound: BigInt,
    /// `|error| / bound`.
    pub ratio: Option<ExactRational>,
    /// Count divided by the number of candidate tuples.
    pub density: Option<ExactRational>,
    /// `1 / zeta_S(wm)`.
    pub limit_density: ExactRational,
    /// Residue-derived `c_S` over the constant `h_K G_S(1/q) q^{1-g} / (q-1)^2`.
    pub constant_ratio: Option<ExactRational>,
}

fn require_wm_at_least_two(m: u32, w: u32) -> Result<()> {
    if m == 0 || w == 0 {
        return Err(Error::InvalidArgument("m and w must be at least 1".into()));
    }
    if m * w < 2 {
        return Err(Error::InvalidArgument(
            "the main term needs wm >= 2 (zeta_S has a pole at 1)".into(),
        ));
    }
    Ok(())
}

/// `q^{m(N + 1 - g)} / zeta_S(wm)`.
pub fn thm1_main(zeta: &SZeta, m: u32, w: u32, n: i64) -> Result<ExactRational> {
    require_wm_at_least_two(m, w)?;
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("N must be positive, got {n}")));
    }
    let q = ExactRational::from_int(zeta.q());
    let exp = m as i64 * (n + 1 - zeta.curve().genus as i64);
    Ok(&q.pow(exp) / &zeta.value((m * w) as i64)?)
}

/// Rows for element counting over `N` in `range`. Exact counts and densities
/// are filled in at genus 0 only.
pub fn thm1_report(zeta: &SZeta, m: u32, w: u32, range: RangeInclusive<i64>) -> Result<Vec<CountReport>> {
    require_wm_at_least_two(m, w)?;
    let curve = zeta.curve();
    let limit = zeta.value((m * w) as i64)?.recip();
    let q = ExactRational::from_int(zeta.q());
    let class = BoundClass::ElementsQPow;
    range
        .map(|n| {
            let main = thm1_main(zeta, m, w, n)?;
            let exact = if curve.genus == 0 {
                Some(fast_v_from_series(zeta, n, m, w)?)
            } else {
                None
            };
            let bound = class.value(zeta.q(), n, m, w);
            let error = exact.as_ref().map(|v| &ExactRational::from_int(v.clone()) - &main);
            let ratio = error.as_ref().map(|e| &e.abs() / &ExactRational::from_int(bound.clone()));
            let density = exact
                .as_ref()
                .map(|v| &ExactRational::from_int(v.clone()) / &q.pow(m as i64 * (n + 1)));
            Ok(CountReport {
                curve: curve.label(),
                q: zeta.q(),
                genus: curve.genus,
                s: zeta.s().to_string(),
                m,
                w,
                size_kind: SizeKind::N,
                size: n,
                exact_count: exact,
                main_term: main,
                error,
                error_bound_class: class,
                bound,
                ratio,
                density,
                limit_density: limit.clone(),
                constant_ratio: None,
            })
        })
        .collect()
}

/// `sum_{k <= n/w} mu_{S,k} j_S(n - wk)^m`: the exact number of `w`-coprime
/// `m`-tuples of integral ideals of degree at most `n`, at any genus.
pub fn thm2_q_exact(zeta: &SZeta, n: i64, m: u32, w: u32) -> Result<BigInt> {
    if m == 0 || w == 0 {
        return Err(Error::InvalidArgument("m and w must be at least 1".into()));
    }
    if n < 0 {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    for k in 0..=(n / w as i64) {
        let mu = zeta.mu(k as usize)?;
        if !mu.is_zero() {
            total += mu * zeta.j(n - w as i64 * k)?.pow(m);
        }
    }
    Ok(total)
}

/// `c_S^m q^{mn} / zeta_S(wm)` with the residue-derived `c_S`.
pub fn thm2_main(zeta: &SZeta, m: u32, w: u32, n: i64) -> Result<ExactRational> {
    require_wm_at_least_two(m, w)?;
    let q = ExactRational::from_int(zeta.q());
    Ok(&(&zeta.leading_constant().pow(m as i64) * &q.pow(m as i64 * n)) / &zeta.value((m * w) as i64)?)
}

/// Rows for ideal counting over `n` in `range`.
pub fn thm2_report(zeta: &SZeta, m: u32, w: u32, range: RangeInclusive<i64>) -> Result<Vec<CountReport>> {
    require_wm_at_least_two(m, w)?;
    let curve = zeta.curve();
    let limit = zeta.value((m * w) as i64)?.recip();
    let constant_ratio = &zeta.leading_constant() / &zeta.printed_constant();
    let class = BoundClass::for_ideals(m, w);
    range
        .map(|n| {
            let exact = thm2_q_exact(zeta, n, m, w)?;
            let main = thm2_main(zeta, m, w, n)?;
            let exact_r = ExactRational::from_int(exact.clone());
            let error = &exact_r - &main;
            let bound = class.value(zeta.q(), n, m, w);
            let ratio = (!bound.is_zero()).then(|| &error.abs() / &ExactRational::from_int(bound.clone()));
            let total = zeta.j(n)?.pow(m);
            let density = (!total.is_zero()).then(|| &exact_r / &ExactRational::from_int(total));
            Ok(CountReport {
                curve: curve.label(),
                q: zeta.q(),
                genus: curve.genus,
                s: zeta.s().to_string(),
                m,
                w,
                size_kind: SizeKind::Lower,
                size: n,
                exact_count: Some(exact),
                main_term: main,
                error: Some(error),
                error_bound_class: class,
                bound,
                ratio,
                density,
                limit_density: limit.clone(),
                constant_ratio: Some(constant_ratio.clone()),
            })
        })
        .collect()
}

/// Largest `ratio` over a set of rows: the empirical implied constant.
pub fn implied_constant(rows: &[CountReport]) -> Option<ExactRational> {
    rows.iter().filter_map(|r| r.ratio.clone()).max()
}

/// Which residue at `z = 1` feeds the bounded remainder of `j_S(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidueCase {
    /// `|S| = 1`: a simple pole at `z = 1` leaves a constant remainder.
    SinglePlace,
    /// `|S| > 1`: no pole at `z = 1`, so the remainder tends to zero.
    SeveralPlaces,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma4Row {
    pub n: i64,
    #[serde(serialize_with = "ser_bigint")]
    pub j: BigInt,
    /// `c_S q^n`.
    pub main: ExactRational,
    /// `j_S(n) - c_S q^n`.
    pub difference: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma4Report {
    pub leading_constant: ExactRational,
    pub printed_constant: ExactRational,
    pub case: ResidueCase,
    /// `h_K deg p_1 / (q - 1)` in the single-place case.
    pub remainder_bound: Option<ExactRational>,
    /// First `n` from which the difference stays constant through the end of the range.
    pub stable_from: Option<i64>,
    pub rows: Vec<Lemma4Row>,
}

pub fn lemma4_report(zeta: &SZeta, range: RangeInclusive<i64>) -> Result<Lemma4Report> {
    let c = zeta.leading_constant();
    let q = ExactRational::from_int(zeta.q());
    let rows = range
        .map(|n| {
            let j = zeta.j(n)?;
            let main = &c * &q.pow(n);
            let difference = &ExactRational::from_int(j.clone()) - &main;
            Ok(Lemma4Row { n, j, main, difference })
        })
        .collect::<Result<Vec<_>>>()?;
    let stable_from = rows.last().map(|last| {
        rows.iter()
            .rev()
            .take_while(|r| r.difference == last.difference)
            .last()
            .map_or(last.n, |r| r.n)
    });
    let case = if zeta.s().len() == 1 { ResidueCase::SinglePlace } else { ResidueCase::SeveralPlaces };
    let remainder_bound = (case == ResidueCase::SinglePlace).then(|| {
        let h = ExactRational::from_int(zeta.curve().class_number());
        let d = ExactRational::from_int(zeta.s().place_degrees[0] as i64);
        &(&h * &d) / &(&q - &ExactRational::one())
    });
    Ok(Lemma4Report {
        leading_constant: c,
        printed_constant: zeta.printed_constant(),
        case,
        remainder_bound,
        stable_from,
        rows,
    })
}

/// Densities of `w`-coprime tuples next to their limit `1 / zeta_S(wm)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub size: i64,
    /// `Q / j_S(n)^m`.
    pub ideal_density: ExactRational,
    /// `V / q^{m(N+1)}` at genus 0.
    pub element_density: Option<ExactRational>,
    pub limit: ExactRational,
}

pub fn density_report(zeta: &SZeta, m: u32, w: u32, range: RangeInclusive<i64>) -> Result<Vec<DensityRow>> {
    require_wm_at_least_two(m, w)?;
    let limit = zeta.value((m * w) as i64)?.recip();
    let q = ExactRational::from_int(zeta.q());
    range
        .map(|n| {
            if n <= 0 {
                return Err(Error::InvalidArgument(format!("sizes must be positive, got {n}")));
            }
            let qn = ExactRational::from_int(thm2_q_exact(zeta, n, m, w)?);
            let ideal_density = &qn / &ExactRational::from_int(zeta.j(n)?.pow(m));
            let element_density = if zeta.curve().genus == 0 {
                let v = ExactRational::from_int(fast_v_from_series(zeta, n, m, w)?);
                Some(&v / &q.pow(m as i64 * (n + 1)))
            } else {
                None
            };
            Ok(DensityRow { size: n, ideal_density, element_density, limit: limit.clone() })
        })
        .collect()
}
