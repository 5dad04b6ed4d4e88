//! Arithmetic in `F_q` and in the polynomial ring `F_q[X]`.
//!
//! Elements of `F_q = F_p[t]/(modulus)` are stored as a single index
//! `c_0 + c_1 p + ... + c_{kappa-1} p^{kappa-1}` where `c_i` are the residues of
//! the coefficient vector. Multiplication in proper extensions goes through
//! discrete log tables built once per field.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Largest field order supported.
pub const MAX_ORDER: u64 = 1 << 16;

/// Description of `F_q` with `q = p^kappa`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub kappa: u32,
    /// Monic irreducible modulus over `F_p`, constant term first; `None` iff `kappa == 1`.
    pub modulus: Option<Vec<u32>>,
}

/// Built-in moduli for small proper extensions, constant term first.
const MODULUS_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),    // t^2 + t + 1
    (2, 3, &[1, 1, 0, 1]), // t^3 + t + 1
    (3, 2, &[1, 0, 1]),    // t^2 + 1
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^kappa`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut kappa = 0;
    while rest % p == 0 {
        rest /= p;
        kappa += 1;
    }
    (rest == 1).then_some((p as u32, kappa))
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn new(p: u32, kappa: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if kappa == 0 {
            return Err(Error::InvalidField("kappa must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(kappa).filter(|&q| q <= MAX_ORDER);
        if q.is_none() {
            return Err(Error::InvalidField(format!(
                "{p}^{kappa} exceeds the supported order {MAX_ORDER}"
            )));
        }
        let spec = FieldSpec { p, kappa, modulus };
        match (&spec.modulus, kappa) {
            (None, 1) => {}
            (Some(_), 1) => {
                return Err(Error::InvalidField("prime fields take no modulus".into()));
            }
            (None, _) => {
                return Err(Error::InvalidField(format!(
                    "order {p}^{kappa} needs an explicit modulus"
                )));
            }
            (Some(m), _) => check_modulus(p, kappa, m)?,
        }
        Ok(spec)
    }

    /// Field of order `q`, using the built-in modulus table for proper extensions.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, kappa) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if kappa == 1 {
            return Self::prime(p);
        }
        let modulus = MODULUS_TABLE
            .iter()
            .find(|(tp, tk, _)| *tp == p && *tk == kappa)
            .map(|(_, _, m)| m.to_vec())
            .ok_or_else(|| {
                Error::InvalidField(format!("no built-in modulus for q = {q}; supply one"))
            })?;
        Self::new(p, kappa, Some(modulus))
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.kappa)
    }
}

fn check_modulus(p: u32, kappa: u32, m: &[u32]) -> Result<()> {
    if m.len() != kappa as usize + 1 || m.last() != Some(&1) {
        return Err(Error::InvalidField(format!(
            "modulus must be monic of degree {kappa}"
        )));
    }
    if m.iter().any(|&c| c >= p) {
        return Err(Error::InvalidField(format!("modulus residues must lie in [0, {p})")));
    }
    let prime = PolyRing::new(Fq::new(FieldSpec { p, kappa: 1, modulus: None }));
    let poly = prime.from_ints(m);
    if !prime.is_irreducible(&poly) {
        return Err(Error::InvalidField(format!(
            "modulus {poly} is reducible over F_{p}"
        )));
    }
    Ok(())
}

/// An element of `F_q`, encoded by its base-`p` coefficient index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Residues `c_0, ..., c_{kappa-1}` of the coefficient vector.
    pub fn coeffs(self, field: &Fq) -> Vec<u32> {
        let p = field.p();
        let mut v = self.0;
        (0..field.kappa())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }
}

#[derive(Debug)]
struct FqTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Debug)]
struct FqInner {
    spec: FieldSpec,
    q: u32,
    tables: Option<FqTables>,
}

/// The finite field `F_q`. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Fq(Arc<FqInner>);

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}
impl Eq for Fq {}

impl Fq {
    /// Builds the field. `spec` is assumed validated (see [`FieldSpec::new`]).
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.order() as u32;
        let tables = spec.modulus.as_ref().map(|m| build_tables(spec.p, m, q));
        Fq(Arc::new(FqInner { spec, q, tables }))
    }

    pub fn with_order(q: u64) -> Result<Self> {
        Ok(Self::new(FieldSpec::with_order(q)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn kappa(&self) -> u32 {
        self.0.spec.kappa
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q()).map(FqElem)
    }

    /// Element from a base-`p` index, rejecting out-of-range values.
    pub fn elem(&self, index: u32) -> Result<FqElem> {
        if index >= self.q() {
            return Err(Error::InvalidArgument(format!(
                "{index} is not an element index of F_{}",
                self.q()
            )));
        }
        Ok(FqElem(index))
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.kappa() == 1 {
            return FqElem((a.0 + b.0) % self.p());
        }
        self.digitwise(a, b, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.kappa() == 1 {
            return FqElem((a.0 + self.p() - b.0) % self.p());
        }
        self.digitwise(a, b, |x, y, p| (x + p - y) % p)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        self.sub(FqElem::ZERO, a)
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.is_zero() || b.is_zero() {
            return FqElem::ZERO;
        }
        match &self.0.tables {
            None => FqElem(((a.0 as u64 * b.0 as u64) % self.p() as u64) as u32),
            Some(t) => {
                let n = self.q() - 1;
                FqElem(t.exp[((t.log[a.0 as usize] + t.log[b.0 as usize]) % n) as usize])
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        if a.is_zero() {
            return None;
        }
        match &self.0.tables {
            None => {
                let p = self.p() as u64;
                Some(FqElem(pow_mod(a.0 as u64, p - 2, p) as u32))
            }
            Some(t) => {
                let n = self.q() - 1;
                Some(FqElem(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
            }
        }
    }

    fn digitwise(&self, a: FqElem, b: FqElem, op: impl Fn(u32, u32, u32) -> u32) -> FqElem {
        let p = self.p();
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.kappa() {
            out += op(x % p, y % p, p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FqElem(out)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Multiplies two residue vectors modulo the monic `modulus` over `F_p`.
fn mulmod_digits(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for i in (k..2 * k).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate().take(k) {
            let idx = i - k + j;
            prod[idx] = (prod[idx] + (p as u64 - m as u64) * c) % p as u64;
        }
        prod[i] = 0;
    }
    prod[..k].iter().map(|&c| c as u32).collect()
}

fn build_tables(p: u32, modulus: &[u32], q: u32) -> FqTables {
    let k = modulus.len() - 1;
    let to_digits = |mut v: u32| -> Vec<u32> {
        (0..k)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    };
    let to_index = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    let n = q - 1;
    for g in 2..q {
        let gd = to_digits(g);
        let mut exp = Vec::with_capacity(n as usize);
        let mut cur = to_digits(1);
        let mut primitive = true;
        for i in 0..n {
            let idx = to_index(&cur);
            if i > 0 && idx == 1 {
                primitive = false;
                break;
            }
            exp.push(idx);
            cur = mulmod_digits(&cur, &gd, modulus, p);
        }
        if primitive {
            let mut log = vec![0u32; q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            return FqTables { exp, log };
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// A polynomial over `F_q`, coefficients constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![FqElem::ONE] }
    }

    /// `X`.
    pub fn x() -> Self {
        Poly { coeffs: vec![FqElem::ZERO, FqElem::ONE] }
    }

    pub fn from_coeffs(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: FqElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` standing for minus infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FqElem::ONE
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }
}

/// Degree first, then coefficients from the leading term down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders with element indices as coefficients, e.g. `X^2 + X + 1` or `2X + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.0 == 1 && i > 0 { String::new() } else { c.0.to_string() };
            match i {
                0 => write!(f, "{}", c.0)?,
                1 => write!(f, "{coef}X")?,
                _ => write!(f, "{coef}X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic factorization `a = unit * prod f_i^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FqElem,
    pub factors: Vec<(Poly, u32)>,
}

/// `F_q[X]` over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: Fq,
}

impl PolyRing {
    pub fn new(field: Fq) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    /// Polynomial from element indices, constant term first.
    pub fn from_ints(&self, coeffs: &[u32]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| FqElem(c % self.field.q())).collect())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.field.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.field.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FqElem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, a: &Poly, c: FqElem) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| self.mul(&acc, a))
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, a: &Poly, b: &Poly) -> Option<(Poly, Poly)> {
        let db = b.degree()?;
        let inv_lead = self.field.inv(b.leading())?;
        let mut rem = a.coeffs.clone();
        let Some(da) = a.degree().filter(|&da| da >= db) else {
            return Some((Poly::zero(), a.clone()));
        };
        let mut quot = vec![FqElem::ZERO; da - db + 1];
        for i in (db..=da).rev() {
            let c = self.field.mul(rem[i], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = self.field.sub(rem[idx], self.field.mul(c, bj));
            }
        }
        rem.truncate(db);
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient when `b` divides `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        let (qt, r) = self.div_rem(a, b)?;
        r.is_zero().then_some(qt)
    }

    pub fn divides(&self, d: &Poly, a: &Poly) -> bool {
        self.div_rem(a, d).is_some_and(|(_, r)| r.is_zero())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, a: &Poly) -> Poly {
        match self.field.inv(a.leading()) {
            Some(inv) => self.scale(a, inv),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = self.div_rem(&x, &y).expect("divisor is nonzero");
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// All polynomials of degree at most `d` (including zero), in index order.
    pub fn all_up_to_degree(&self, d: Option<usize>) -> impl Iterator<Item = Poly> + '_ {
        let len = d.map_or(0, |d| d + 1);
        let total = self.q().pow(len as u32);
        (0..total).map(move |i| self.poly_from_index(i, len))
    }

    /// Monic polynomials of degree exactly `d`, in index order.
    pub fn monic_of_degree(&self, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let total = self.q().pow(d as u32);
        (0..total).map(move |i| {
            let mut p = self.poly_from_index(i, d);
            p.coeffs.resize(d, FqElem::ZERO);
            p.coeffs.push(FqElem::ONE);
            p
        })
    }

    fn poly_from_index(&self, mut i: u64, len: usize) -> Poly {
        let q = self.q();
        let coeffs = (0..len)
            .map(|_| {
                let c = (i % q) as u32;
                i /= q;
                FqElem(c)
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    fn monic_index(&self, a: &Poly) -> usize {
        let q = self.q();
        let d = a.degree().unwrap_or(0);
        a.coeffs[..d].iter().rev().fold(0u64, |acc, c| acc * q + c.0 as u64) as usize
    }

    /// Monic irreducibles of degree `d`, sorted, found by sieving out all
    /// products of lower-degree monic polynomials.
    pub fn irreducibles_of_degree(&self, d: usize, budget: Budget) -> Result<Vec<Poly>> {
        if d == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        budget.check_pow("irreducible sieve", self.q(), d as u64)?;
        let total = self.q().pow(d as u32) as usize;
        let mut reducible = vec![false; total];
        for k in 1..=d / 2 {
            for a in self.monic_of_degree(k) {
                for b in self.monic_of_degree(d - k) {
                    reducible[self.monic_index(&self.mul(&a, &b))] = true;
                }
            }
        }
        Ok(self
            .monic_of_degree(d)
            .enumerate()
            .filter(|(i, _)| !reducible[*i])
            .map(|(_, p)| p)
            .collect())
    }

    pub fn is_irreducible(&self, a: &Poly) -> bool {
        let Some(d) = a.degree().filter(|&d| d >= 1) else {
            return false;
        };
        let a = self.monic(a);
        (1..=d / 2).all(|k| self.monic_of_degree(k).all(|f| !self.divides(&f, &a)))
    }

    /// Factors into monic irreducibles by trial division.
    pub fn factor(&self, a: &Poly, budget: Budget) -> Result<Factorization> {
        let d = a
            .degree()
            .ok_or_else(|| Error::InvalidArgument("cannot factor the zero polynomial".into()))?;
        let unit = a.leading();
        let mut rest = self.monic(a);
        let mut factors = Vec::new();
        for k in 1..=d / 2 {
            if rest.degree().unwrap_or(0) < 2 * k {
                break;
            }
            for f in self.irreducibles_of_degree(k, budget)? {
                let mut e = 0;
                while let Some(qt) = self.div_exact(&rest, &f) {
                    rest = qt;
                    e += 1;
                }
                if e > 0 {
                    factors.push((f, e));
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            factors.push((rest, 1));
        }
        factors.sort();
        Ok(Factorization { unit, factors })
    }

    /// Multiplicity of the irreducible `f` in the nonzero `a`.
    pub fn valuation(&self, f: &Poly, a: &Poly) -> u32 {
        let mut rest = a.clone();
        let mut e = 0;
        while let Some(qt) = self.div_exact(&rest, f) {
            rest = qt;
            e += 1;
        }
        e
    }
}

/// Number of monic irreducibles of degree `d` over `F_q`, by the necklace formula.
pub fn necklace_count(q: u64, d: u64) -> u64 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e == 0 {
            total += crate::arith::mobius_int(e) as i128 * (q as i128).pow((d / e) as u32);
        }
    }
    (total / d as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PolyRing {
        PolyRing::new(Fq::with_order(2).unwrap())
    }

    #[test]
    fn gcd_examples() {
        let r = f2();
        let x = Poly::x();
        let x1 = r.from_ints(&[1, 1]);
        assert_eq!(r.gcd(&x, &x1).unwrap(), Poly::one());
        let x2p1 = r.from_ints(&[1, 0, 1]);
        assert_eq!(r.gcd(&x2p1, &x1).unwrap(), x1);
        assert_eq!(r.gcd(&x2p1, &Poly::zero()).unwrap(), x2p1);
        assert!(r.gcd(&Poly::zero(), &Poly::zero()).is_err());

        let f3 = PolyRing::new(Fq::with_order(3).unwrap());
        let a = f3.from_ints(&[2, 2]); // 2X + 2
        assert_eq!(f3.gcd(&a, &Poly::zero()).unwrap(), f3.from_ints(&[1, 1]));
    }

    #[test]
    fn irreducible_examples() {
        let r = f2();
        let b = Budget::default();
        assert_eq!(
            r.irreducibles_of_degree(1, b).unwrap(),
            vec![Poly::x(), r.from_ints(&[1, 1])]
        );
        assert_eq!(r.irreducibles_of_degree(2, b).unwrap(), vec![r.from_ints(&[1, 1, 1])]);
        let cubics = r.irreducibles_of_degree(3, b).unwrap();
        assert_eq!(cubics, vec![r.from_ints(&[1, 1, 0, 1]), r.from_ints(&[1, 0, 1, 1])]);
        assert!(r.irreducibles_of_degree(0, b).is_err());
        assert!(matches!(
            r.irreducibles_of_degree(10, Budget(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn factor_examples() {
        let r = f2();
        let b = Budget::default();
        let x1 = r.from_ints(&[1, 1]);
        let f = r.factor(&r.from_ints(&[1, 0, 1]), b).unwrap();
        assert_eq!(f.factors, vec![(x1.clone(), 2)]);
        assert!(r.factor(&Poly::one(), b).unwrap().factors.is_empty());
        let f = r.factor(&r.from_ints(&[0, 1, 0, 1]), b).unwrap();
        assert_eq!(f.factors, vec![(Poly::x(), 1), (x1, 2)]);
        assert!(r.factor(&Poly::zero(), b).is_err());
    }

    #[test]
    fn extension_field_is_a_field() {
        for q in [4u64, 8, 9] {
            let f = Fq::with_order(q).unwrap();
            for a in f.elements().skip(1) {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), FqElem::ONE);
                assert_eq!(f.add(a, f.neg(a)), FqElem::ZERO);
            }
            // distributivity on the full table
            for a in f.elements() {
                for b in f.elements() {
                    for c in f.elements() {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn field_spec_rejections() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::with_order(6).is_err());
        assert!(FieldSpec::with_order(16).is_err());
        assert!(FieldSpec::new(2, 17, None).is_err());
        // t^2 + 1 = (t + 1)^2 over F_2
        assert!(FieldSpec::new(2, 2, Some(vec![1, 0, 1])).is_err());
        assert!(FieldSpec::new(2, 4, Some(vec![1, 1, 0, 0, 1])).is_ok());
        assert_eq!(FqElem(5).coeffs(&Fq::with_order(9).unwrap()), vec![2, 1]);
    }

    #[test]
    fn necklace_counts_match_sieve() {
        for q in [2u64, 3, 4] {
            let r = PolyRing::new(Fq::with_order(q).unwrap());
            for d in 1..=6 {
                let n = r.irreducibles_of_degree(d, Budget::default()).unwrap().len();
                assert_eq!(n as u64, necklace_count(q, d as u64), "q={q} d={d}");
            }
        }
    }
}
