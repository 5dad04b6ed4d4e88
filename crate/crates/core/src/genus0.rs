//! The rational function field `K = F_q(X)`.
//!
//! Places are the monic irreducibles of `F_q[X]` plus the place at infinity.
//! For a divisor `D(N) = sum_j N_j p_j` supported on `S` the Riemann-Roch
//! space `L(D(N))` is enumerated explicitly, which gives a brute-force count of
//! `w`-coprime tuples of S-integers to set against the Möbius-sum formula.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::{Poly, PolyRing};
use crate::mask::MaskTable;
use crate::zeta::{SSpec, SZeta};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalPlace {
    /// A finite place, given by a monic irreducible polynomial.
    Finite(Poly),
    Infinity,
}

impl RationalPlace {
    pub fn degree(&self) -> u32 {
        match self {
            RationalPlace::Finite(p) => p.degree().unwrap_or(0) as u32,
            RationalPlace::Infinity => 1,
        }
    }
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPlace::Finite(p) => write!(f, "({p})"),
            RationalPlace::Infinity => write!(f, "inf"),
        }
    }
}

/// The divisor `D(N) = sum_j N_j p_j` on the places `p_j` forming `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDivisorSpec {
    entries: Vec<(RationalPlace, i64)>,
}

impl SDivisorSpec {
    pub fn new(ring: &PolyRing, entries: Vec<(RationalPlace, i64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::IncompatibleS("S must be nonempty".into()));
        }
        let mut seen = BTreeSet::new();
        for (place, _) in &entries {
            if let RationalPlace::Finite(p) = place {
                if !p.is_monic() || !ring.is_irreducible(p) {
                    return Err(Error::IncompatibleS(format!(
                        "{p} is not a monic irreducible over F_{}",
                        ring.q()
                    )));
                }
            }
            if !seen.insert(place.clone()) {
                return Err(Error::IncompatibleS(format!("place {place} repeated in S")));
            }
        }
        Ok(SDivisorSpec { entries })
    }

    pub fn entries(&self) -> &[(RationalPlace, i64)] {
        &self.entries
    }

    pub fn places(&self) -> impl Iterator<Item = &RationalPlace> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn contains(&self, place: &RationalPlace) -> bool {
        self.places().any(|p| p == place)
    }

    /// `N = deg D(N) = sum_j N_j deg p_j`.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(p, n)| n * p.degree() as i64).sum()
    }

    pub fn s_spec(&self) -> SSpec {
        SSpec::new(self.places().map(RationalPlace::degree).collect())
            .expect("entries are nonempty with positive degrees")
    }

    /// Same places with new multiplicities.
    pub fn with_multiplicities(&self, ns: &[i64]) -> Result<Self> {
        if ns.len() != self.entries.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} multiplicities, got {}",
                self.entries.len(),
                ns.len()
            )));
        }
        let entries = self.places().cloned().zip(ns.iter().copied()).collect();
        Ok(SDivisorSpec { entries })
    }
}

/// An element `num / den` of `F_q(X)`, reduced with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalElement {
    num: Poly,
    den: Poly,
}

impl RationalElement {
    pub fn new(ring: &PolyRing, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = ring.gcd(&num, &den)?;
        let num = ring.div_exact(&num, &g).expect("gcd divides");
        let den = ring.div_exact(&den, &g).expect("gcd divides");
        let lead = den.leading();
        let inv = ring.field().inv(lead).expect("nonzero leading coefficient");
        Ok(RationalElement { num: ring.scale(&num, inv), den: ring.scale(&den, inv) })
    }

    pub fn zero() -> Self {
        RationalElement { num: Poly::zero(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalElement { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for RationalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Valuations of a nonzero element at every place where they are nonzero.
pub fn principal_divisor(
    ring: &PolyRing,
    a: &RationalElement,
    budget: Budget,
) -> Result<BTreeMap<RationalPlace, i64>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("the zero element has no principal divisor".into()));
    }
    let mut out = BTreeMap::new();
    for (f, e) in ring.factor(&a.num, budget)?.factors {
        out.insert(RationalPlace::Finite(f), e as i64);
    }
    for (f, e) in ring.factor(&a.den, budget)?.factors {
        out.insert(RationalPlace::Finite(f), -(e as i64));
    }
    let v_inf = a.den.degree().unwrap_or(0) as i64 - a.num.degree().unwrap_or(0) as i64;
    if v_inf != 0 {
        out.insert(RationalPlace::Infinity, v_inf);
    }
    Ok(out)
}

/// Every element of `L(D(N))`, written as `g / H` with `H` the product of the
/// finite places of `S` raised to their positive multiplicities and `g` running
/// over the multiples of the negative part within the allowed degree.
pub fn rr_space_enumerate(
    ring: &PolyRing,
    spec: &SDivisorSpec,
    budget: Budget,
) -> Result<Vec<RationalElement>> {
    let mut h = Poly::one();
    let mut m = Poly::one();
    let mut n_inf = None;
    for (place, n) in spec.entries() {
        match place {
            RationalPlace::Finite(p) if *n > 0 => h = ring.mul(&h, &ring.pow(p, *n as u32)),
            RationalPlace::Finite(p) => m = ring.mul(&m, &ring.pow(p, n.unsigned_abs() as u32)),
            RationalPlace::Infinity => n_inf = Some(*n),
        }
    }
    let deg_h = h.degree().unwrap_or(0) as i64;
    let deg_m = m.degree().unwrap_or(0) as i64;
    // deg g <= deg H + N_inf keeps v_inf(g/H) >= -N_inf
    let max_deg_g = deg_h + n_inf.unwrap_or(0);
    let free = max_deg_g - deg_m;
    if free < 0 {
        return Ok(vec![RationalElement::zero()]);
    }
    budget.check_pow("Riemann-Roch enumeration", ring.q(), free as u64 + 1)?;
    ring.all_up_to_degree(Some(free as usize))
        .map(|cof| RationalElement::new(ring, ring.mul(&m, &cof), h.clone()))
        .collect()
}

/// Counts `w`-coprime `m`-tuples from `L(D(N))` by walking every tuple. Each
/// entry is reduced to the set of places outside `S` where its valuation is at
/// least `w`; a tuple fails when those sets share a place. The all-zero tuple
/// generates the zero ideal and never counts.
pub fn brute_v(
    ring: &PolyRing,
    spec: &SDivisorSpec,
    m: u32,
    w: u32,
    budget: Budget,
) -> Result<BigInt> {
    if m == 0 || w == 0 {
        return Err(Error::InvalidArgument("m and w must be at least 1".into()));
    }
    let elements = rr_space_enumerate(ring, spec, budget)?;
    budget.check("element tuple enumeration", &BigUint::from(elements.len()).pow(m))?;

    let mut high: Vec<Option<Vec<RationalPlace>>> = Vec::with_capacity(elements.len());
    let mut places = BTreeSet::new();
    for a in &elements {
        if a.is_zero() {
            high.push(None);
            continue;
        }
        let ps: Vec<RationalPlace> = principal_divisor(ring, a, budget)?
            .into_iter()
            .filter(|(p, v)| *v >= w as i64 && !spec.contains(p))
            .map(|(p, _)| p)
            .collect();
        places.extend(ps.iter().cloned());
        high.push(Some(ps));
    }
    let index: BTreeMap<RationalPlace, usize> =
        places.into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let sentinel = index.len();
    let mut masks = MaskTable::new(sentinel + 1);
    for h in &high {
        match h {
            None => masks.push(0..=sentinel),
            Some(ps) => masks.push(ps.iter().map(|p| index[p])),
        }
    }
    Ok(masks.count_tuples_with_empty_meet(m as usize).into())
}

/// `sum_{k <= N/w} mu_{S,k} (q^{m(N - wk + 1)} - 1)`, the genus-0 Möbius-sum
/// count of `w`-coprime `m`-tuples in a Riemann-Roch space of degree `N`.
pub fn fast_v_from_series(zeta: &SZeta, n: i64, m: u32, w: u32) -> Result<BigInt> {
    if zeta.curve().genus != 0 {
        return Err(Error::InvalidArgument(
            "exact element counts are available at genus 0 only".into(),
        ));
    }
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("N must be positive, got {n}")));
    }
    if m == 0 || w == 0 {
        return Err(Error::InvalidArgument("m and w must be at least 1".into()));
    }
    let q = BigInt::from(zeta.q());
    let mut total = BigInt::zero();
    for k in 0..=(n / w as i64) {
        let ell = n - w as i64 * k + 1;
        let mu = zeta.mu(k as usize)?;
        if !mu.is_zero() {
            total += mu * (q.pow((m as i64 * ell) as u32) - 1);
        }
    }
    Ok(total)
}

/// Fast exact count for a concrete `S`; `zeta` must describe the same `q` and
/// place degrees.
pub fn fast_v_genus0(spec: &SDivisorSpec, m: u32, w: u32, zeta: &SZeta) -> Result<BigInt> {
    if spec.s_spec() != *zeta.s() {
        return Err(Error::InvalidArgument(format!(
            "S degrees {} do not match the series data {}",
            spec.s_spec(),
            zeta.s()
        )));
    }
    fast_v_from_series(zeta, spec.degree(), m, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fq;
    use crate::zeta::CurveSpec;

    fn f2() -> PolyRing {
        PolyRing::new(Fq::with_order(2).unwrap())
    }

    fn inf_spec(ring: &PolyRing, n: i64) -> SDivisorSpec {
        SDivisorSpec::new(ring, vec![(RationalPlace::Infinity, n)]).unwrap()
    }

    #[test]
    fn principal_divisor_examples() {
        let r = f2();
        let b = Budget::default();
        let x1 = r.from_ints(&[1, 1]);
        let a = RationalElement::new(&r, Poly::x(), x1.clone()).unwrap();
        let d = principal_divisor(&r, &a, b).unwrap();
        let expected: BTreeMap<_, _> = [
            (RationalPlace::Finite(Poly::x()), 1),
            (RationalPlace::Finite(x1), -1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);

        let one = RationalElement::from_poly(Poly::one());
        assert!(principal_divisor(&r, &one, b).unwrap().is_empty());

        let x2 = RationalElement::from_poly(r.from_ints(&[0, 0, 1]));
        let d = principal_divisor(&r, &x2, b).unwrap();
        assert_eq!(d[&RationalPlace::Finite(Poly::x())], 2);
        assert_eq!(d[&RationalPlace::Infinity], -2);
        assert!(principal_divisor(&r, &RationalElement::zero(), b).is_err());
    }

    #[test]
    fn rr_space_examples() {
        let r = f2();
        let b = Budget::default();
        let l = rr_space_enumerate(&r, &inf_spec(&r, 2), b).unwrap();
        assert_eq!(l.len(), 8);
        assert!(l.iter().all(|a| a.den() == &Poly::one()));

        let spec = SDivisorSpec::new(
            &r,
            vec![(RationalPlace::Finite(Poly::x()), 1), (RationalPlace::Infinity, 0)],
        )
        .unwrap();
        let l: BTreeSet<String> =
            rr_space_enumerate(&r, &spec, b).unwrap().iter().map(|a| a.to_string()).collect();
        let expected: BTreeSet<String> =
            ["0", "(1)/(X)", "1", "(X + 1)/(X)"].iter().map(|s| s.to_string()).collect();
        assert_eq!(l, expected);

        let l = rr_space_enumerate(&r, &inf_spec(&r, -1), b).unwrap();
        assert_eq!(l, vec![RationalElement::zero()]);
    }

    #[test]
    fn brute_v_examples() {
        let r = f2();
        let b = Budget::default();
        assert_eq!(brute_v(&r, &inf_spec(&r, 1), 2, 1, b).unwrap(), BigInt::from(9));
        assert_eq!(brute_v(&r, &inf_spec(&r, 2), 1, 2, b).unwrap(), BigInt::from(5));
        assert_eq!(brute_v(&r, &inf_spec(&r, 2), 1, 1, b).unwrap(), BigInt::from(1));
        assert!(matches!(
            brute_v(&r, &inf_spec(&r, 6), 3, 1, Budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn fast_v_examples() {
        let r = f2();
        let z = SZeta::with_default_truncation(&CurveSpec::rational(2), &SSpec::new(vec![1]).unwrap())
            .unwrap();
        assert_eq!(fast_v_genus0(&inf_spec(&r, 1), 2, 1, &z).unwrap(), BigInt::from(9));
        assert_eq!(fast_v_genus0(&inf_spec(&r, 2), 1, 2, &z).unwrap(), BigInt::from(5));
        assert_eq!(fast_v_genus0(&inf_spec(&r, 2), 1, 1, &z).unwrap(), BigInt::from(1));
        assert!(fast_v_genus0(&inf_spec(&r, 0), 1, 1, &z).is_err());
    }

    #[test]
    fn spec_rejects_bad_places() {
        let r = f2();
        let reducible = r.from_ints(&[1, 0, 1]);
        assert!(SDivisorSpec::new(&r, vec![(RationalPlace::Finite(reducible), 1)]).is_err());
        assert!(SDivisorSpec::new(
            &r,
            vec![(RationalPlace::Infinity, 1), (RationalPlace::Infinity, 2)]
        )
        .is_err());
        assert!(SDivisorSpec::new(&r, vec![]).is_err());
    }
}
