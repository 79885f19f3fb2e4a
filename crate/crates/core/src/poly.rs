//! Sparse integer polynomials and Laurent polynomials.
//!
//! A [`Poly`] is a canonical map from exponent vectors to nonzero
//! arbitrary-precision coefficients. The same type serves both
//! `Z[x1..xk]` and `Z[x1^±..xk^±]`; the [`Ring`] it carries decides whether
//! negative exponents are allowed.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Whether exponents are restricted to be nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Polynomial,
    Laurent,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Polynomial => "polynomial",
            Mode::Laurent => "laurent",
        })
    }
}

/// The ambient ring: number of variables and coefficient-free mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    pub nvars: usize,
    pub mode: Mode,
}

impl Ring {
    pub fn new(nvars: usize, mode: Mode) -> Self {
        assert!(nvars >= 1, "a ring needs at least one variable");
        Ring { nvars, mode }
    }

    pub fn polynomial(nvars: usize) -> Self {
        Ring::new(nvars, Mode::Polynomial)
    }

    pub fn laurent(nvars: usize) -> Self {
        Ring::new(nvars, Mode::Laurent)
    }

    /// The polynomial ring in `2k` variables `x1..xk, y1..yk` that a Laurent
    /// ring of `k` variables is lifted into.
    pub fn lifted(&self) -> Ring {
        match self.mode {
            Mode::Polynomial => *self,
            Mode::Laurent => Ring::polynomial(2 * self.nvars),
        }
    }

    pub(crate) fn check_exponent(&self, d: &Exponent) -> Result<()> {
        if d.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: d.len(),
            });
        }
        if self.mode == Mode::Polynomial {
            if let Some((var, &e)) = d.0.iter().enumerate().find(|(_, &e)| e < 0) {
                return Err(Error::NegativeExponentInPolynomialMode {
                    var: var + 1,
                    exponent: e,
                });
            }
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::ModeMismatch(format!(
                "{} ring in {} variables vs {} ring in {} variables",
                self.mode, self.nvars, other.mode, other.nvars
            )));
        }
        Ok(())
    }
}

/// An exponent vector `d = (d1, ..., dk)` standing for the monomial `x^d`.
///
/// Ordered graded-lexicographically: first by L1 norm, then entrywise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<i64>);

impl Exponent {
    pub fn new(entries: Vec<i64>) -> Self {
        Exponent(entries)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    /// The `i`-th unit vector (0-based).
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        Exponent(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    /// `‖d‖ = Σ |d_i|`.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// L1 distance `‖self − other‖`.
    pub fn dist(&self, other: &Exponent) -> u64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).unsigned_abs())
            .sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Exponent {
        Exponent(self.0.iter().map(|a| -a).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// The finite value, with `0` standing in for `−∞`.
    pub fn or_zero(self) -> u64 {
        self.finite().unwrap_or(0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A canonical sparse (Laurent) polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Poly {
    pub fn zero(ring: Ring) -> Self {
        Poly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(ring);
        p.add_term(c.into(), Exponent::zero(ring.nvars));
        p
    }

    pub fn one(ring: Ring) -> Self {
        Poly::constant(ring, 1)
    }

    /// The single term `c·x^d`.
    pub fn monomial(ring: Ring, c: impl Into<BigInt>, d: Exponent) -> Result<Self> {
        ring.check_exponent(&d)?;
        let mut p = Poly::zero(ring);
        p.add_term(c.into(), d);
        Ok(p)
    }

    /// The variable `x_i` (1-based index, as printed).
    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i >= 1 && i <= ring.nvars, "variable index out of range");
        Poly::monomial(ring, 1, Exponent::unit(ring.nvars, i - 1)).expect("unit exponent")
    }

    /// Merges equal exponents and drops zero coefficients.
    pub fn from_terms<C, I>(ring: Ring, raw: I) -> Result<Self>
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (C, Exponent)>,
    {
        let mut p = Poly::zero(ring);
        for (c, d) in raw {
            ring.check_exponent(&d)?;
            p.add_term(c.into(), d);
        }
        Ok(p)
    }

    /// Adds `c·x^d` in place. The caller guarantees `d` is valid for the ring.
    pub(crate) fn add_term(&mut self, c: BigInt, d: Exponent) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn mode(&self) -> Mode {
        self.ring.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order of exponents.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Exponent) -> BigInt {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// The term with the largest exponent in graded-lexicographic order.
    pub fn last_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.last_key_value()
    }

    /// `|g|`: the sum of the absolute values of the coefficients.
    pub fn norm(&self) -> BigUint {
        self.terms.values().map(|c| c.magnitude()).sum()
    }

    /// `deg g`: the largest L1 norm of an exponent in the support.
    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Exponent::norm)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(d, a)| (d.clone(), a * c)).collect(),
        }
    }

    /// `c·x^d·self`.
    pub fn monomial_mul(&self, c: &BigInt, d: &Exponent) -> Result<Poly> {
        if d.len() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars,
                found: d.len(),
            });
        }
        let mut out = Poly::zero(self.ring);
        if c.is_zero() {
            return Ok(out);
        }
        for (e, a) in &self.terms {
            let s = e.add(d);
            self.ring.check_exponent(&s)?;
            out.terms.insert(s, a * c);
        }
        Ok(out)
    }

    /// `self += c·x^d·other`. Panics if the rings differ or a polynomial-mode
    /// exponent would become negative.
    pub(crate) fn add_scaled_shifted(&mut self, c: &BigInt, d: &Exponent, other: &Poly) {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if c.is_zero() {
            return;
        }
        for (e, a) in &other.terms {
            let s = e.add(d);
            debug_assert!(self.ring.check_exponent(&s).is_ok());
            self.add_term(a * c, s);
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self * other)
    }

    /// Replaces every `x_i^{-e}` by `y_i^e`, landing in the polynomial ring
    /// over `x1..xk, y1..yk`. Polynomial-mode inputs are returned unchanged.
    pub fn lift_to_polynomial(&self) -> Poly {
        let k = self.ring.nvars;
        let lifted = self.ring.lifted();
        if self.ring.mode == Mode::Polynomial {
            return self.clone();
        }
        let mut out = Poly::zero(lifted);
        for (d, c) in &self.terms {
            let mut v = vec![0; 2 * k];
            for (i, &e) in d.entries().iter().enumerate() {
                if e >= 0 {
                    v[i] = e;
                } else {
                    v[k + i] = -e;
                }
            }
            out.terms.insert(Exponent(v), c.clone());
        }
        out
    }

    /// Inverse of [`Poly::lift_to_polynomial`] on the level of rings: the
    /// homomorphism `x_i ↦ x_i`, `y_i ↦ x_i^{-1}` into `target`.
    pub fn unlift(&self, target: Ring) -> Result<Poly> {
        if target.mode != Mode::Laurent || self.ring != target.lifted() {
            return Err(Error::ModeMismatch(format!(
                "cannot map a polynomial in {} variables into the laurent ring in {} variables",
                self.ring.nvars, target.nvars
            )));
        }
        let k = target.nvars;
        let mut out = Poly::zero(target);
        for (d, c) in &self.terms {
            let e = d.entries();
            let v: Vec<i64> = (0..k).map(|i| e[i] - e[k + i]).collect();
            out.add_term(c.clone(), Exponent(v));
        }
        Ok(out)
    }

    /// Re-embeds this polynomial into a ring with the same variable count and
    /// a (possibly) different mode.
    pub fn with_mode(&self, mode: Mode) -> Result<Poly> {
        let ring = Ring::new(self.ring.nvars, mode);
        Poly::from_terms(ring, self.terms.iter().map(|(d, c)| (c.clone(), d.clone())))
    }

    /// Sign of the coefficient at the largest exponent; `NoSign` for zero.
    pub fn leading_sign(&self) -> Sign {
        self.last_term().map_or(Sign::NoSign, |(_, c)| c.sign())
    }

    /// `self` or `−self`, whichever has a positive leading coefficient.
    pub fn sign_normalized(&self) -> Poly {
        if self.leading_sign() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(d, c)| d.is_zero() && c.is_one())
    }

    pub fn max_abs_coeff(&self) -> BigUint {
        self.terms
            .values()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap_or_default()
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(c.clone(), d.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(-c, d.clone());
        }
        out
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = Poly::zero(self.ring);
        for (d, c) in &self.terms {
            out.add_scaled_shifted(c, d, rhs);
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        for (d, c) in &rhs.terms {
            self.add_term(c.clone(), d.clone());
        }
    }
}

impl std::ops::SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        for (d, c) in &rhs.terms {
            self.add_term(-c, d.clone());
        }
    }
}

/// Largest pairwise L1 distance in a set of exponents ("diag").
pub fn diameter(set: &BTreeSet<Exponent>) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::EmptySupport);
    }
    let pts: Vec<&Exponent> = set.iter().collect();
    let mut best = 0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            best = best.max(a.dist(b));
        }
    }
    Ok(best)
}

/// Smallest L1 distance between a point of `a` and a point of `b`.
pub fn support_distance(a: &BTreeSet<Exponent>, b: &BTreeSet<Exponent>) -> Result<u64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySupport);
    }
    Ok(a.iter()
        .flat_map(|p| b.iter().map(move |q| p.dist(q)))
        .min()
        .expect("both sets nonempty"))
}
