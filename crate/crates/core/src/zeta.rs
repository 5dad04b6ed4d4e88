//! Zeta functions of a function field `K/F_q` described by its Weil polynomial.
//!
//! With `Z_K(z) = P_K(z) / ((1 - z)(1 - qz))` the coefficient `b_k` of `z^k`
//! counts effective divisors of degree `k`. Removing the places of a finite set
//! `S` multiplies by `G_S(z) = prod_j (1 - z^{deg p_j})`, giving `Z_S(z)` whose
//! coefficients `b_{S,k}` count integral ideals of `O_S` of degree `k`, and
//! whose reciprocal carries the signed squarefree counts `mu_{S,k}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{divisors, mobius_int};
use crate::error::{Error, Result};
use crate::field::{prime_power, MAX_ORDER};
use crate::rational::ExactRational;
use crate::series::TruncatedIntSeries;

/// Truncation used when nothing larger is requested.
pub const DEFAULT_TRUNCATION: usize = 50;

/// Truncation order large enough for reads up to `n` on a genus-`genus` curve.
pub fn truncation_for(n: usize, genus: u32) -> usize {
    DEFAULT_TRUNCATION.max(2 * n + 2 * genus as usize)
}

/// A function field given by `q`, its genus and the coefficients `a_0..a_{2g}` of `P_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    pub q: u64,
    pub genus: u32,
    pub weil_coeffs: Vec<BigInt>,
}

impl CurveSpec {
    pub fn new(q: u64, genus: u32, weil_coeffs: Vec<BigInt>) -> Self {
        CurveSpec { q, genus, weil_coeffs }
    }

    /// The rational function field `F_q(X)`: genus 0, `P_K = 1`.
    pub fn rational(q: u64) -> Self {
        CurveSpec::new(q, 0, vec![BigInt::one()])
    }

    /// The supersingular elliptic curve `y^2 + y = x^3` over `F_2`: `P_K = 1 + 2u^2`.
    pub fn e2_supersingular() -> Self {
        CurveSpec::new(2, 1, vec![1.into(), 0.into(), 2.into()])
    }

    /// Looks up a named preset; `q` is required for `rational` and must be 2 (or absent)
    /// for `e2-supersingular`.
    pub fn preset(name: &str, q: Option<u64>) -> Result<Self> {
        match (name, q) {
            ("rational", Some(q)) => Ok(Self::rational(q)),
            ("rational", None) => Err(Error::Config("preset \"rational\" needs q".into())),
            ("e2-supersingular", None | Some(2)) => Ok(Self::e2_supersingular()),
            ("e2-supersingular", Some(q)) => Err(Error::Config(format!(
                "preset \"e2-supersingular\" is defined over q = 2, not {q}"
            ))),
            _ => Err(Error::Config(format!("unknown curve preset {name:?}"))),
        }
    }

    /// `P_K(z)` at an exact rational point.
    pub fn weil_at(&self, z: &ExactRational) -> ExactRational {
        self.weil_coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, a| &(&acc * z) + &ExactRational::from_int(a.clone()))
    }

    /// Preset name when the data matches one, `custom` otherwise.
    pub fn label(&self) -> String {
        if *self == Self::e2_supersingular() {
            "e2-supersingular".into()
        } else if *self == Self::rational(self.q) {
            "rational".into()
        } else {
            "custom".into()
        }
    }

    /// `h_K = P_K(1)`.
    pub fn class_number(&self) -> BigInt {
        self.weil_coeffs.iter().sum()
    }
}

/// The finite nonempty set `S`, recorded by the degrees of its places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSpec {
    pub place_degrees: Vec<u32>,
}

impl SSpec {
    pub fn new(mut place_degrees: Vec<u32>) -> Result<Self> {
        if place_degrees.is_empty() {
            return Err(Error::IncompatibleS("S must be nonempty".into()));
        }
        if place_degrees.contains(&0) {
            return Err(Error::IncompatibleS("place degrees must be at least 1".into()));
        }
        place_degrees.sort_unstable();
        Ok(SSpec { place_degrees })
    }

    pub fn len(&self) -> usize {
        self.place_degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.place_degrees.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.place_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Number of places of `S` of degree `d`.
    pub fn count_of_degree(&self, d: u32) -> u64 {
        self.place_degrees.iter().filter(|&&x| x == d).count() as u64
    }

    /// Coefficients of `G_S(z) = prod_j (1 - z^{d_j})`.
    pub fn g_poly(&self) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for &d in &self.place_degrees {
            let d = d as usize;
            let mut next = poly.clone();
            next.resize(poly.len() + d, BigInt::zero());
            for (i, c) in poly.iter().enumerate() {
                next[i + d] -= c;
            }
            poly = next;
        }
        poly
    }

    pub fn g_at(&self, z: &ExactRational) -> ExactRational {
        self.place_degrees
            .iter()
            .fold(ExactRational::one(), |acc, &d| &acc * &(ExactRational::one() - z.pow(d as i64)))
    }

    /// Checks that `S` fits inside the place counts of the curve.
    pub fn check_compatible(&self, curve: &CurveSpec) -> Result<()> {
        let counts = place_counts(curve, self.max_degree() as usize)?;
        for d in 1..=self.max_degree() {
            let want = self.count_of_degree(d);
            let have = &counts[d as usize - 1];
            if want > 0 && BigInt::from(want) > *have {
                return Err(Error::IncompatibleS(if have.is_zero() {
                    format!("no available place of degree {d}")
                } else {
                    format!("S needs {want} places of degree {d}, the curve has {have}")
                }));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.place_degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(";"))
    }
}

/// One failed necessary condition on Weil data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeilViolation {
    NotPrimePower { q: u64 },
    WrongDegree { expected: usize, found: usize },
    ConstantTerm { found: BigInt },
    Symmetry { index: usize, expected: BigInt, found: BigInt },
    ClassNumber { found: BigInt },
    NegativePointCount { n: usize, count: BigInt },
    HasseWeil { n: usize, count: BigInt },
    PlaceCount { detail: String },
}

impl fmt::Display for WeilViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use WeilViolation::*;
        match self {
            NotPrimePower { q } => write!(f, "q = {q} is not a prime power up to {MAX_ORDER}"),
            WrongDegree { expected, found } => {
                write!(f, "P_K has {found} coefficients, expected {expected} (degree 2g)")
            }
            ConstantTerm { found } => write!(f, "a_0 must be 1, found {found}"),
            Symmetry { index, expected, found } => write!(
                f,
                "functional equation needs a_{index} = {expected}, found {found}"
            ),
            ClassNumber { found } => write!(f, "h_K = P_K(1) = {found} must be at least 1"),
            NegativePointCount { n, count } => write!(f, "N_{n} = {count} is negative"),
            HasseWeil { n, count } => write!(f, "N_{n} = {count} violates the Hasse-Weil bound"),
            PlaceCount { detail } => write!(f, "{detail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilReport {
    pub violations: Vec<WeilViolation>,
    pub class_number: BigInt,
    pub truncation: usize,
}

impl WeilReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            return Ok(());
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        Err(Error::InvalidCurve(msgs.join("; ")))
    }
}

/// Checks the necessary conditions for `c` to be the Weil data of a curve,
/// including point and place counts up to `truncation`.
pub fn validate_weil_to(c: &CurveSpec, truncation: usize) -> WeilReport {
    use WeilViolation::*;
    let mut violations = Vec::new();
    let class_number = c.class_number();
    let report = |violations| WeilReport { violations, class_number: class_number.clone(), truncation };

    if c.q > MAX_ORDER || prime_power(c.q).is_none() {
        violations.push(NotPrimePower { q: c.q });
        return report(violations);
    }
    let expected = 2 * c.genus as usize + 1;
    if c.weil_coeffs.len() != expected {
        violations.push(WrongDegree { expected, found: c.weil_coeffs.len() });
        return report(violations);
    }
    if !c.weil_coeffs[0].is_one() {
        violations.push(ConstantTerm { found: c.weil_coeffs[0].clone() });
    }
    let q = BigInt::from(c.q);
    let g = c.genus as usize;
    for i in 0..=g {
        let want = q.pow((g - i) as u32) * &c.weil_coeffs[i];
        if c.weil_coeffs[2 * g - i] != want {
            violations.push(Symmetry {
                index: 2 * g - i,
                expected: want,
                found: c.weil_coeffs[2 * g - i].clone(),
            });
        }
    }
    if class_number < BigInt::one() {
        violations.push(ClassNumber { found: class_number.clone() });
    }
    if !violations.is_empty() {
        return report(violations);
    }

    let s = power_sums(c, truncation);
    let four_g2 = BigInt::from(4 * c.genus as u64 * c.genus as u64);
    for n in 1..=truncation {
        let qn = q.pow(n as u32);
        let count: BigInt = &qn + 1 - &s[n - 1];
        if count.is_negative() {
            violations.push(NegativePointCount { n, count: count.clone() });
        }
        if &s[n - 1] * &s[n - 1] > &four_g2 * &qn {
            violations.push(HasseWeil { n, count });
        }
    }
    if let Err(Error::InvalidCurve(detail)) = place_counts_checked(c, truncation) {
        violations.push(PlaceCount { detail });
    }
    report(violations)
}

pub fn validate_weil(c: &CurveSpec) -> WeilReport {
    validate_weil_to(c, DEFAULT_TRUNCATION)
}

/// Power sums `s_n = sum_j pi_j^n` of the inverse roots of `P_K`, for `n = 1..=n_max`,
/// by Newton's identities.
pub fn power_sums(c: &CurveSpec, n_max: usize) -> Vec<BigInt> {
    let a = |i: usize| c.weil_coeffs.get(i).cloned().unwrap_or_default();
    let mut s: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut v = -BigInt::from(n) * a(n);
        for i in 1..n {
            v -= a(i) * &s[n - i - 1];
        }
        s.push(v);
    }
    s
}

/// Rational point counts `N_n = q^n + 1 - s_n` for `n = 1..=n_max`.
pub fn point_counts(c: &CurveSpec, n_max: usize) -> Vec<BigInt> {
    let q = BigInt::from(c.q);
    power_sums(c, n_max)
        .into_iter()
        .enumerate()
        .map(|(i, s)| q.pow(i as u32 + 1) + 1 - s)
        .collect()
}

fn place_counts_checked(c: &CurveSpec, d_max: usize) -> Result<Vec<BigInt>> {
    let n = point_counts(c, d_max);
    let mut out = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let total: BigInt = divisors(d as u64)
            .map(|e| BigInt::from(mobius_int(e)) * &n[d / e as usize - 1])
            .sum();
        let (a, r) = total.div_rem(&BigInt::from(d));
        if !r.is_zero() {
            return Err(Error::InvalidCurve(format!(
                "a_{d} = {total}/{d} is not an integer"
            )));
        }
        if a.is_negative() {
            return Err(Error::InvalidCurve(format!("a_{d} = {a} is negative")));
        }
        out.push(a);
    }
    Ok(out)
}

/// Number of places of each degree `1..=d_max`.
pub fn place_counts(c: &CurveSpec, d_max: usize) -> Result<Vec<BigInt>> {
    place_counts_checked(c, d_max)
}

/// Coefficients of `Z_K(z) = P_K(z) / ((1 - z)(1 - qz))` up to `truncation`.
pub fn zeta_series_k(c: &CurveSpec, truncation: usize) -> Result<TruncatedIntSeries> {
    let z = TruncatedIntSeries::geometric(&BigInt::one(), truncation)
        .mul(&TruncatedIntSeries::geometric(&BigInt::from(c.q), truncation))
        .mul_poly(&c.weil_coeffs);
    if let Some(k) = z.coeffs().iter().position(|b| b.is_negative()) {
        return Err(Error::InvalidCurve(format!("b_{k} of Z_K is negative")));
    }
    Ok(z)
}

/// All generating-function data for a pair `(K, S)`, computed once up to a truncation.
#[derive(Debug, Clone)]
pub struct SZeta {
    curve: CurveSpec,
    s: SSpec,
    z_k: TruncatedIntSeries,
    z_s: TruncatedIntSeries,
    mu_s: TruncatedIntSeries,
    j_s: TruncatedIntSeries,
}

impl SZeta {
    /// Validates the curve and `S`, then expands every series to `truncation`.
    pub fn new(curve: &CurveSpec, s: &SSpec, truncation: usize) -> Result<Self> {
        validate_weil_to(curve, truncation.max(s.max_degree() as usize)).into_result()?;
        s.check_compatible(curve)?;
        let z_k = zeta_series_k(curve, truncation)?;
        let z_s = z_k.mul_poly(&s.g_poly());
        if let Some(k) = z_s.coeffs().iter().position(|b| b.is_negative()) {
            return Err(Error::InvalidCurve(format!("b_S,{k} is negative")));
        }
        let mu_s = z_s.inverse()?;
        let j_s = z_s.partial_sums();
        Ok(SZeta { curve: curve.clone(), s: s.clone(), z_k, z_s, mu_s, j_s })
    }

    pub fn with_default_truncation(curve: &CurveSpec, s: &SSpec) -> Result<Self> {
        Self::new(curve, s, DEFAULT_TRUNCATION)
    }

    pub fn curve(&self) -> &CurveSpec {
        &self.curve
    }

    pub fn s(&self) -> &SSpec {
        &self.s
    }

    pub fn q(&self) -> u64 {
        self.curve.q
    }

    pub fn truncation(&self) -> usize {
        self.z_s.truncation()
    }

    pub fn series_k(&self) -> &TruncatedIntSeries {
        &self.z_k
    }

    pub fn series_s(&self) -> &TruncatedIntSeries {
        &self.z_s
    }

    pub fn mobius_series(&self) -> &TruncatedIntSeries {
        &self.mu_s
    }

    /// Number of effective divisors of degree `k` in `Div_K`.
    pub fn b(&self, k: usize) -> Result<&BigInt> {
        self.z_k.get(k)
    }

    /// Number of integral ideals of `O_S` of degree `k`.
    pub fn b_s(&self, k: usize) -> Result<&BigInt> {
        self.z_s.get(k)
    }

    /// Signed count of squarefree ideals of degree `k`.
    pub fn mu(&self, k: usize) -> Result<&BigInt> {
        self.mu_s.get(k)
    }

    /// Number of integral ideals of degree at most `n`; zero for negative `n`.
    pub fn j(&self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        self.j_s.get(n as usize).cloned()
    }

    /// Places of degree `d` outside `S`.
    pub fn places_outside_s(&self, d_max: usize) -> Result<Vec<BigInt>> {
        let mut counts = place_counts(&self.curve, d_max)?;
        for (d, c) in counts.iter_mut().enumerate() {
            *c -= self.s.count_of_degree(d as u32 + 1);
        }
        Ok(counts)
    }

    /// Exact `zeta_S(t) = Z_S(q^{-t})` for integers `t >= 2`.
    pub fn value(&self, t: i64) -> Result<ExactRational> {
        if t < 2 {
            return Err(Error::InvalidArgument(format!(
                "zeta_S(t) is evaluated only for t >= 2, got {t}"
            )));
        }
        let q = ExactRational::from_int(self.curve.q);
        let u = q.pow(-t);
        let num = &self.curve.weil_at(&u) * &self.s.g_at(&u);
        let den = &(ExactRational::one() - u.clone()) * &(ExactRational::one() - &q * &u);
        Ok(&num / &den)
    }

    /// The constant `c_S` with `j_S(n) - c_S q^n` bounded, from the residue of
    /// `Z_S(z) / (1 - z)` at `z = 1/q`: `q^2 P_K(1/q) G_S(1/q) / (q - 1)^2`.
    pub fn leading_constant(&self) -> ExactRational {
        let q = ExactRational::from_int(self.curve.q);
        let inv_q = q.recip();
        let qm1 = &q - &ExactRational::one();
        &(&(&q * &q) * &(&self.curve.weil_at(&inv_q) * &self.s.g_at(&inv_q))) / &(&qm1 * &qm1)
    }

    /// The constant in the form `h_K G_S(1/q) q^{1-g} / (q - 1)^2`.
    ///
    /// This is smaller than [`SZeta::leading_constant`] by a factor of exactly `q`;
    /// reports carry the ratio of the two.
    pub fn printed_constant(&self) -> ExactRational {
        let q = ExactRational::from_int(self.curve.q);
        let qm1 = &q - &ExactRational::one();
        let h = ExactRational::from_int(self.curve.class_number());
        &(&(&h * &self.s.g_at(&q.recip())) * &q.pow(1 - self.curve.genus as i64)) / &(&qm1 * &qm1)
    }

    /// Euler product `prod_{d <= d_max} (1 - q^{-td})^{-a_{S,d}}`.
    pub fn truncated_euler_product(&self, t: i64, d_max: usize) -> Result<ExactRational> {
        let q = ExactRational::from_int(self.curve.q);
        let mut acc = ExactRational::one();
        for (i, a) in self.places_outside_s(d_max)?.iter().enumerate() {
            let factor = ExactRational::one() - q.pow(-t * (i as i64 + 1));
            let e = a.to_i64().ok_or_else(|| Error::InvalidArgument("place count overflow".into()))?;
            acc = &acc * &factor.pow(-e);
        }
        Ok(acc)
    }
}

/// Coefficients `b_{S,k}` of `Z_S(z) = Z_K(z) G_S(z)`.
pub fn zeta_series_s(c: &CurveSpec, s: &SSpec, truncation: usize) -> Result<TruncatedIntSeries> {
    Ok(SZeta::new(c, s, truncation)?.z_s)
}

/// Coefficients `mu_{S,k}` of `1 / Z_S(z)`.
pub fn mobius_coeffs(c: &CurveSpec, s: &SSpec, truncation: usize) -> Result<TruncatedIntSeries> {
    Ok(SZeta::new(c, s, truncation)?.mu_s)
}

/// Number of integral ideals of `O_S` with degree at most `n`.
pub fn j_s(c: &CurveSpec, s: &SSpec, n: i64) -> Result<BigInt> {
    if n < 0 {
        return Ok(BigInt::zero());
    }
    SZeta::new(c, s, truncation_for(n as usize, c.genus))?.j(n)
}

pub fn zeta_s_value(c: &CurveSpec, s: &SSpec, t: i64) -> Result<ExactRational> {
    SZeta::with_default_truncation(c, s)?.value(t)
}

pub fn leading_constant(c: &CurveSpec, s: &SSpec) -> Result<ExactRational> {
    Ok(SZeta::with_default_truncation(c, s)?.leading_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn s1() -> SSpec {
        SSpec::new(vec![1]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_weil(&CurveSpec::rational(2)).is_valid());
        let e = validate_weil(&CurveSpec::e2_supersingular());
        assert!(e.is_valid());
        assert_eq!(e.class_number, BigInt::from(3));
        let bad = CurveSpec::new(2, 1, ints(&[1, 0, 3]));
        let r = validate_weil(&bad);
        assert!(matches!(r.violations[0], WeilViolation::Symmetry { index: 2, .. }));
        assert!(!validate_weil(&CurveSpec::new(6, 0, ints(&[1]))).is_valid());
        assert!(!validate_weil(&CurveSpec::new(2, 1, ints(&[1, 0]))).is_valid());
        // symmetric but far outside the Hasse-Weil range: N_1 = 2 + 1 + 5 = 8 > 3 + 2
        assert!(!validate_weil(&CurveSpec::new(2, 1, ints(&[1, -5, 2]))).is_valid());
    }

    #[test]
    fn power_sum_examples() {
        assert!(power_sums(&CurveSpec::rational(2), 5).iter().all(|s| s.is_zero()));
        assert_eq!(power_sums(&CurveSpec::e2_supersingular(), 2), ints(&[0, -4]));
        let c = CurveSpec::new(2, 1, ints(&[1, -1, 2]));
        assert_eq!(power_sums(&c, 1), ints(&[1]));
    }

    #[test]
    fn place_count_examples() {
        assert_eq!(place_counts(&CurveSpec::rational(2), 3).unwrap(), ints(&[3, 1, 2]));
        assert_eq!(place_counts(&CurveSpec::e2_supersingular(), 2).unwrap(), ints(&[3, 3]));
        assert_eq!(place_counts(&CurveSpec::rational(3), 1).unwrap(), ints(&[4]));
    }

    #[test]
    fn zeta_k_examples() {
        let z = zeta_series_k(&CurveSpec::rational(2), 10).unwrap();
        for k in 0..=10 {
            assert_eq!(z.get(k).unwrap(), &BigInt::from((1i64 << (k + 1)) - 1));
        }
        let z = zeta_series_k(&CurveSpec::e2_supersingular(), 2).unwrap();
        assert_eq!(z.coeffs(), &ints(&[1, 3, 9])[..]);
    }

    #[test]
    fn zeta_s_examples() {
        let z = zeta_series_s(&CurveSpec::rational(2), &s1(), 20).unwrap();
        for k in 0..=20 {
            assert_eq!(z.get(k).unwrap(), &BigInt::from(1i64 << k));
        }
        let z = zeta_series_s(&CurveSpec::e2_supersingular(), &s1(), 20).unwrap();
        assert_eq!(&z.coeffs()[..3], &ints(&[1, 2, 6])[..]);
        for k in 2..=20 {
            assert_eq!(z.get(k).unwrap(), &BigInt::from(3i64 << (k - 1)));
        }
        // all three degree-one places removed from P^1 over F_2
        let all = SSpec::new(vec![1, 1, 1]).unwrap();
        let z = zeta_series_s(&CurveSpec::rational(2), &all, 5).unwrap();
        assert_eq!(z.get(1).unwrap(), &BigInt::zero());
        assert!(SSpec::new(vec![1, 1, 1, 1]).unwrap().check_compatible(&CurveSpec::rational(2)).is_err());
    }

    #[test]
    fn mobius_examples() {
        let mu = mobius_coeffs(&CurveSpec::rational(2), &s1(), 10).unwrap();
        assert_eq!(mu, TruncatedIntSeries::from_coeffs(ints(&[1, -2]), 10));
        let mu = mobius_coeffs(&CurveSpec::e2_supersingular(), &s1(), 5).unwrap();
        assert_eq!(mu.coeffs(), &ints(&[1, -2, -2, 4, 4, -8])[..]);
    }

    #[test]
    fn j_examples() {
        let r = CurveSpec::rational(2);
        assert_eq!(j_s(&r, &s1(), 2).unwrap(), BigInt::from(7));
        assert_eq!(j_s(&r, &s1(), -3).unwrap(), BigInt::zero());
        assert_eq!(j_s(&CurveSpec::e2_supersingular(), &s1(), 2).unwrap(), BigInt::from(9));
        let z = SZeta::new(&r, &s1(), 10).unwrap();
        assert!(matches!(z.j(11), Err(Error::Truncation { .. })));
    }

    #[test]
    fn zeta_value_examples() {
        let r2 = CurveSpec::rational(2);
        assert_eq!(zeta_s_value(&r2, &s1(), 2).unwrap(), ExactRational::from_int(2));
        assert_eq!(
            zeta_s_value(&CurveSpec::e2_supersingular(), &s1(), 2).unwrap(),
            ExactRational::new(9, 4)
        );
        assert_eq!(
            zeta_s_value(&CurveSpec::rational(3), &s1(), 2).unwrap(),
            ExactRational::new(3, 2)
        );
        assert!(zeta_s_value(&r2, &s1(), 1).is_err());
    }

    #[test]
    fn leading_constant_examples() {
        assert_eq!(
            leading_constant(&CurveSpec::rational(2), &s1()).unwrap(),
            ExactRational::from_int(2)
        );
        assert_eq!(
            leading_constant(&CurveSpec::e2_supersingular(), &s1()).unwrap(),
            ExactRational::from_int(3)
        );
        assert_eq!(
            leading_constant(&CurveSpec::rational(3), &s1()).unwrap(),
            ExactRational::new(3, 2)
        );
    }

    #[test]
    fn printed_constant_is_smaller_by_q() {
        for (c, s) in [
            (CurveSpec::rational(2), s1()),
            (CurveSpec::rational(3), SSpec::new(vec![1, 2]).unwrap()),
            (CurveSpec::e2_supersingular(), SSpec::new(vec![1, 2]).unwrap()),
        ] {
            let z = SZeta::with_default_truncation(&c, &s).unwrap();
            assert_eq!(
                &z.leading_constant() / &z.printed_constant(),
                ExactRational::from_int(c.q)
            );
        }
    }
}
