//! Effective divisors supported outside `S`, i.e. integral ideals of `O_S`.
//!
//! Ideal counting depends only on how many places of each degree lie outside
//! `S`, so places here are abstract tokens `(degree, index)` drawn from a
//! [`PlaceTable`]. This works at any genus without a model of the curve.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::mask::MaskTable;
use crate::zeta::SZeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbstractPlace {
    pub degree: u32,
    pub index: u64,
}

impl AbstractPlace {
    pub fn new(degree: u32, index: u64) -> Self {
        AbstractPlace { degree, index }
    }
}

impl fmt::Display for AbstractPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}.{}", self.degree, self.index)
    }
}

/// Number of places outside `S` of each degree `1..=d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceTable {
    counts: Vec<u64>,
}

impl PlaceTable {
    /// `counts[d - 1]` is the number of places of degree `d`.
    pub fn from_counts(counts: Vec<u64>) -> Self {
        PlaceTable { counts }
    }

    /// Place counts of the curve minus those consumed by `S`.
    pub fn from_zeta(zeta: &SZeta, d_max: usize) -> Result<Self> {
        let counts = zeta
            .places_outside_s(d_max)?
            .iter()
            .map(|c| {
                c.to_u64()
                    .ok_or_else(|| Error::InvalidArgument(format!("place count {c} out of range")))
            })
            .collect::<Result<_>>()?;
        Ok(PlaceTable { counts })
    }

    pub fn d_max(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, degree: u32) -> u64 {
        self.counts.get(degree as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, place: &AbstractPlace) -> bool {
        place.degree >= 1 && place.index < self.count(place.degree)
    }

    /// All places of degree at most `d`, in `(degree, index)` order.
    pub fn places_up_to(&self, d: usize) -> Vec<AbstractPlace> {
        (1..=d.min(self.d_max()) as u32)
            .flat_map(|deg| (0..self.count(deg)).map(move |i| AbstractPlace::new(deg, i)))
            .collect()
    }

    /// Number of effective divisors of each degree `0..=n`, from the Euler product.
    pub fn effective_counts(&self, n: usize) -> Vec<BigUint> {
        let mut c = vec![BigUint::zero(); n + 1];
        c[0] = BigUint::from(1u8);
        for d in 1..=n.min(self.d_max()) {
            for _ in 0..self.count(d as u32) {
                // multiply by 1 / (1 - z^d)
                for k in d..=n {
                    let add = c[k - d].clone();
                    c[k] += add;
                }
            }
        }
        c
    }
}

/// An effective divisor: a finite map from places to positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Divisor {
    coeffs: BTreeMap<AbstractPlace, u32>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    /// Builds a divisor, summing repeated places and dropping zero coefficients.
    pub fn from_entries(entries: impl IntoIterator<Item = (AbstractPlace, u32)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (p, c) in entries {
            *coeffs.entry(p).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c > 0);
        Divisor { coeffs }
    }

    pub fn place(p: AbstractPlace) -> Self {
        Self::from_entries([(p, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.coeffs.iter().map(|(p, c)| p.degree as u64 * *c as u64).sum()
    }

    pub fn coeff(&self, p: &AbstractPlace) -> u32 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (AbstractPlace, u32)> + '_ {
        self.coeffs.iter().map(|(p, c)| (*p, *c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        Self::from_entries(self.entries().chain(other.entries()))
    }

    /// `w * self`.
    pub fn scale(&self, w: u32) -> Divisor {
        Self::from_entries(self.entries().map(|(p, c)| (p, c * w)))
    }

    /// `self <= other` coefficientwise.
    pub fn le(&self, other: &Divisor) -> bool {
        self.entries().all(|(p, c)| c <= other.coeff(&p))
    }

    /// Every effective `D'` with `0 <= D' <= self`.
    pub fn sub_divisors(&self) -> Vec<Divisor> {
        let mut out = vec![Divisor::zero()];
        for (p, c) in self.entries() {
            out = out
                .iter()
                .flat_map(|d| (0..=c).map(move |k| d.add(&Divisor::from_entries([(p, k)]))))
                .collect();
        }
        out
    }
}

/// By degree, then lexicographically on `(degree, index, coefficient)` entries.
impl Ord for Divisor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.entries().cmp(other.entries()))
    }
}

impl PartialOrd for Divisor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries()
            .map(|(p, c)| if c == 1 { p.to_string() } else { format!("{c}{p}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Möbius function on effective divisors: `(-1)^t` on squarefree divisors with `t`
/// support places, zero otherwise.
pub fn mobius(d: &Divisor) -> i64 {
    if d.entries().any(|(_, c)| c > 1) {
        return 0;
    }
    if d.support_len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Stream of all effective divisors of degree at most `n`, by increasing degree
/// and lexicographically within a degree. Each degree level is built on demand.
#[derive(Debug)]
pub struct EffectiveDivisors {
    places: Vec<AbstractPlace>,
    max_degree: u64,
    next_degree: u64,
    level: std::vec::IntoIter<Divisor>,
}

impl Iterator for EffectiveDivisors {
    type Item = Divisor;

    fn next(&mut self) -> Option<Divisor> {
        loop {
            if let Some(d) = self.level.next() {
                return Some(d);
            }
            if self.next_degree > self.max_degree {
                return None;
            }
            let mut level = Vec::new();
            let mut entries = Vec::new();
            divisors_of_degree(&self.places, 0, self.next_degree, &mut entries, &mut level);
            level.sort();
            self.level = level.into_iter();
            self.next_degree += 1;
        }
    }
}

fn divisors_of_degree(
    places: &[AbstractPlace],
    start: usize,
    remaining: u64,
    entries: &mut Vec<(AbstractPlace, u32)>,
    out: &mut Vec<Divisor>,
) {
    if remaining == 0 {
        out.push(Divisor::from_entries(entries.iter().copied()));
        return;
    }
    for i in start..places.len() {
        let p = places[i];
        let deg = p.degree as u64;
        if deg > remaining {
            break;
        }
        for c in 1..=remaining / deg {
            entries.push((p, c as u32));
            divisors_of_degree(places, i + 1, remaining - c * deg, entries, out);
            entries.pop();
        }
    }
}

/// Enumerates every effective divisor of degree at most `n` exactly once.
pub fn enumerate_effective(table: &PlaceTable, n: usize, budget: Budget) -> Result<EffectiveDivisors> {
    if table.d_max() < n {
        return Err(Error::InvalidArgument(format!(
            "place table covers degrees up to {}, enumeration needs {n}",
            table.d_max()
        )));
    }
    let total: BigUint = table.effective_counts(n).iter().sum();
    budget.check("effective divisor enumeration", &total)?;
    Ok(EffectiveDivisors {
        places: table.places_up_to(n),
        max_degree: n as u64,
        next_degree: 0,
        level: Vec::new().into_iter(),
    })
}

/// True unless some place appears with coefficient at least `w` in every divisor,
/// i.e. the ideal generated by the tuple lies in `p^w`.
pub fn is_w_coprime(ds: &[Divisor], w: u32) -> Result<bool> {
    let (first, rest) = ds
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("w-coprimality needs a nonempty tuple".into()))?;
    if w == 0 {
        return Err(Error::InvalidArgument("w must be at least 1".into()));
    }
    Ok(!first
        .entries()
        .filter(|&(_, c)| c >= w)
        .any(|(p, _)| rest.iter().all(|d| d.coeff(&p) >= w)))
}

/// Counts `m`-tuples of effective divisors of degree at most `n` that are
/// `w`-coprime, by walking every tuple.
pub fn brute_q(table: &PlaceTable, n: usize, m: u32, w: u32, budget: Budget) -> Result<BigInt> {
    if m == 0 || w == 0 {
        return Err(Error::InvalidArgument("m and w must be at least 1".into()));
    }
    let divisors: Vec<Divisor> = enumerate_effective(table, n, budget)?.collect();
    budget.check("ideal tuple enumeration", &BigUint::from(divisors.len()).pow(m))?;
    let places = table.places_up_to(n);
    let index: BTreeMap<AbstractPlace, usize> =
        places.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut masks = MaskTable::new(places.len());
    for d in &divisors {
        masks.push(d.entries().filter(|&(_, c)| c >= w).map(|(p, _)| index[&p]));
    }
    Ok(masks.count_tuples_with_empty_meet(m as usize).into())
}

/// `sum_{0 <= D' <= d} mu(D')`.
pub fn mobius_inversion_sum(d: &Divisor) -> i64 {
    d.sub_divisors().iter().map(mobius).sum()
}

/// Whether the Möbius sum over `0 <= D' <= d` equals `1` for `d = 0` and `0` otherwise.
pub fn mobius_inversion_check(d: &Divisor) -> bool {
    mobius_inversion_sum(d) == if d.is_zero() { 1 } else { 0 }
}

/// A finite set of items, each carrying the subset of properties it satisfies.
/// Property `j` is attached to the distinct place `places[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyInstance {
    pub places: Vec<AbstractPlace>,
    /// Bit `j` of `memberships[i]` is set when item `i` has property `j`.
    pub memberships: Vec<u16>,
}

/// Both sides of the sieve identity for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveSides {
    pub direct: i64,
    pub sieve: i64,
}

pub const MAX_PROPERTIES: usize = 12;

impl PropertyInstance {
    pub fn new(places: Vec<AbstractPlace>, memberships: Vec<u16>) -> Result<Self> {
        if places.len() > MAX_PROPERTIES {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_PROPERTIES} properties, got {}",
                places.len()
            )));
        }
        let mut sorted = places.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != places.len() {
            return Err(Error::InvalidArgument("property places must be distinct".into()));
        }
        let allowed = (1u32 << places.len()) - 1;
        if memberships.iter().any(|&m| m as u32 & !allowed != 0) {
            return Err(Error::InvalidArgument("membership refers to a missing property".into()));
        }
        Ok(PropertyInstance { places, memberships })
    }

    /// Items with no property, counted directly and by `sum_I mu(D_I) A(I)`.
    pub fn sides(&self) -> SieveSides {
        let direct = self.memberships.iter().filter(|&&m| m == 0).count() as i64;
        let k = self.places.len();
        let sieve = (0u32..1 << k)
            .map(|subset| {
                let d_i = Divisor::from_entries(
                    (0..k).filter(|j| subset >> j & 1 == 1).map(|j| (self.places[j], 1)),
                );
                let a_i = self
                    .memberships
                    .iter()
                    .filter(|&&m| m as u32 & subset == subset)
                    .count() as i64;
                mobius(&d_i) * a_i
            })
            .sum();
        SieveSides { direct, sieve }
    }
}

pub fn inclusion_exclusion_check(instance: &PropertyInstance) -> bool {
    let s = instance.sides();
    s.direct == s.sieve
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{CurveSpec, SSpec};

    fn p(d: u32, i: u64) -> AbstractPlace {
        AbstractPlace::new(d, i)
    }

    fn f2x_table() -> PlaceTable {
        PlaceTable::from_counts(vec![2, 1, 2])
    }

    fn e2_table() -> PlaceTable {
        PlaceTable::from_counts(vec![2, 3])
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(&Divisor::zero()), 1);
        assert_eq!(mobius(&Divisor::from_entries([(p(1, 0), 1), (p(1, 1), 1)])), 1);
        assert_eq!(mobius(&Divisor::from_entries([(p(1, 0), 2)])), 0);
        assert_eq!(mobius(&Divisor::place(p(2, 0))), -1);
    }

    #[test]
    fn enumeration_examples() {
        let b = Budget::default();
        assert_eq!(enumerate_effective(&f2x_table(), 2, b).unwrap().count(), 7);
        let only: Vec<_> = enumerate_effective(&f2x_table(), 0, b).unwrap().collect();
        assert_eq!(only, vec![Divisor::zero()]);
        assert_eq!(enumerate_effective(&e2_table(), 2, b).unwrap().count(), 9);
        assert!(enumerate_effective(&e2_table(), 3, b).is_err());
        assert!(matches!(
            enumerate_effective(&f2x_table(), 3, Budget(5)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_by_degree_then_entries() {
        let all: Vec<_> = enumerate_effective(&f2x_table(), 3, Budget::default()).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[1], Divisor::place(p(1, 0)));
        assert_eq!(all[2], Divisor::place(p(1, 1)));
    }

    #[test]
    fn w_coprime_examples() {
        let z = Divisor::zero();
        assert!(is_w_coprime(&[z.clone(), z.clone()], 3).unwrap());
        let pp = p(1, 0);
        let two_p = Divisor::from_entries([(pp, 2)]);
        let three_p = Divisor::from_entries([(pp, 3)]);
        assert!(!is_w_coprime(&[two_p, three_p], 2).unwrap());
        let pq = Divisor::from_entries([(pp, 1), (p(1, 1), 1)]);
        assert!(!is_w_coprime(&[pq, Divisor::place(pp)], 1).unwrap());
        assert!(is_w_coprime(&[], 1).is_err());
    }

    #[test]
    fn brute_q_examples() {
        let b = Budget::default();
        assert_eq!(brute_q(&f2x_table(), 1, 2, 1, b).unwrap(), BigInt::from(7));
        assert_eq!(brute_q(&f2x_table(), 2, 1, 2, b).unwrap(), BigInt::from(5));
        assert_eq!(brute_q(&e2_table(), 2, 2, 1, b).unwrap(), BigInt::from(61));
    }

    /// Cross-checks the mask-based counter against the plain predicate.
    #[test]
    fn brute_q_agrees_with_predicate() {
        let t = e2_table();
        let ds: Vec<_> = enumerate_effective(&t, 2, Budget::default()).unwrap().collect();
        for w in 1..=2 {
            let mut count = 0;
            for a in &ds {
                for b in &ds {
                    if is_w_coprime(&[a.clone(), b.clone()], w).unwrap() {
                        count += 1;
                    }
                }
            }
            assert_eq!(brute_q(&t, 2, 2, w, Budget::default()).unwrap(), BigInt::from(count));
        }
    }

    #[test]
    fn mobius_inversion_examples() {
        assert!(mobius_inversion_check(&Divisor::zero()));
        assert_eq!(mobius_inversion_sum(&Divisor::zero()), 1);
        let two_p = Divisor::from_entries([(p(1, 0), 2)]);
        assert_eq!(mobius_inversion_sum(&two_p), 0);
        let pq = Divisor::from_entries([(p(1, 0), 1), (p(2, 0), 1)]);
        assert_eq!(mobius_inversion_sum(&pq), 0);
        assert!(mobius_inversion_check(&pq));
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let places = vec![p(1, 0), p(1, 1)];
        let empty = PropertyInstance::new(vec![], vec![0; 5]).unwrap();
        assert_eq!(empty.sides(), SieveSides { direct: 5, sieve: 5 });
        let all = PropertyInstance::new(vec![p(1, 0)], vec![1; 4]).unwrap();
        assert_eq!(all.sides(), SieveSides { direct: 0, sieve: 0 });
        // items with properties {}, {0}, {1}, {0,1}
        let mixed = PropertyInstance::new(places.clone(), vec![0, 1, 2, 3, 0]).unwrap();
        assert!(inclusion_exclusion_check(&mixed));
        assert!(PropertyInstance::new(vec![p(1, 0), p(1, 0)], vec![]).is_err());
        assert!(PropertyInstance::new(places, vec![4]).is_err());
    }

    #[test]
    fn table_from_zeta() {
        let z = SZeta::with_default_truncation(&CurveSpec::rational(2), &SSpec::new(vec![1]).unwrap())
            .unwrap();
        assert_eq!(PlaceTable::from_zeta(&z, 3).unwrap(), f2x_table());
    }
}
