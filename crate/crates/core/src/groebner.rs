//! Strong Gröbner bases over `Z` with cofactor tracking.
//!
//! The engine works in a polynomial ring. Laurent ideals are handled by the
//! caller ([`crate::ideal::Ideal`]) lifting to `Z[x, y]` and adjoining the
//! relations `x_i·y_i − 1`.
//!
//! Reduction is Euclidean: a term `c·X` is reduced by the basis element whose
//! leading monomial divides `X` and whose (positive) leading coefficient `b`
//! is smallest, replacing `c` by `c mod b ∈ [0, b)`. For a strong basis that
//! `b` generates the leading-coefficient ideal at `X`, so remainders are
//! unique for a fixed basis and order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponent, Mode, Poly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic.
    Lex,
}

/// A monomial order on a fixed number of variables.
///
/// `priority[0]` is the most significant variable (0-based index); the
/// identity permutation gives `x1 > x2 > … > xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = priority.clone();
        seen.sort_unstable();
        if seen != (0..priority.len()).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!(
                "variable priority {priority:?} is not a permutation"
            )));
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// A vector whose lexicographic order realizes this monomial order. The
    /// map is linear in the exponents, so `key(a + b) = key(a) + key(b)`.
    fn key(&self, e: &[i64]) -> Vec<i64> {
        match self.kind {
            OrderKind::Lex => self.priority.iter().map(|&i| e[i]).collect(),
            OrderKind::Grevlex => {
                let mut k = Vec::with_capacity(e.len() + 1);
                k.push(e.iter().sum());
                k.extend(self.priority.iter().rev().map(|&i| -e[i]));
                k
            }
        }
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.key(a.entries()).cmp(&self.key(b.entries()))
    }

    /// Leading exponent and coefficient of `p` under this order.
    pub fn leading_term<'a>(&self, p: &'a Poly) -> Option<(&'a Exponent, &'a BigInt)> {
        p.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
        };
        write!(f, "{name}(")?;
        for (i, v) in self.priority.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        f.write_str(")")
    }
}

/// Monomial carrying its order key. Equality and order go through the key,
/// which is a bijective image of the exponents.
#[derive(Debug, Clone)]
struct Mono {
    key: Vec<i64>,
    exp: Vec<i64>,
}

impl PartialEq for Mono {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for Mono {}
impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl Mono {
    fn one(nvars: usize, order: &MonomialOrder) -> Mono {
        let exp = vec![0; nvars];
        Mono {
            key: order.key(&exp),
            exp,
        }
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            key: self
                .key
                .iter()
                .zip(&other.key)
                .map(|(a, b)| a + b)
                .collect(),
            exp: self
                .exp
                .iter()
                .zip(&other.exp)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller checks divisibility.
    fn quotient_of(&self, other: &Mono) -> Mono {
        Mono {
            key: other
                .key
                .iter()
                .zip(&self.key)
                .map(|(a, b)| a - b)
                .collect(),
            exp: other
                .exp
                .iter()
                .zip(&self.exp)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn lcm(&self, other: &Mono, order: &MonomialOrder) -> Mono {
        let exp: Vec<i64> = self
            .exp
            .iter()
            .zip(&other.exp)
            .map(|(a, b)| *a.max(b))
            .collect();
        Mono {
            key: order.key(&exp),
            exp,
        }
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.exp
            .iter()
            .zip(&other.exp)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Polynomial keyed by order-aware monomials; the leading term is the last.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct IPoly(BTreeMap<Mono, BigInt>);

impl IPoly {
    fn from_poly(p: &Poly, order: &MonomialOrder) -> IPoly {
        IPoly(
            p.terms()
                .map(|(d, c)| {
                    (
                        Mono {
                            key: order.key(d.entries()),
                            exp: d.entries().to_vec(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        )
    }

    fn to_poly(&self, ring: Ring) -> Poly {
        Poly::from_terms(
            ring,
            self.0
                .iter()
                .map(|(m, c)| (c.clone(), Exponent::new(m.exp.clone()))),
        )
        .expect("engine monomials are nonnegative")
    }

    fn monomial(c: BigInt, m: Mono) -> IPoly {
        let mut p = IPoly::default();
        if !c.is_zero() {
            p.0.insert(m, c);
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lt(&self) -> Option<(&Mono, &BigInt)> {
        self.0.last_key_value()
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
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

    /// `self += c·m·g`.
    fn add_mul(&mut self, c: &BigInt, m: &Mono, g: &IPoly) {
        if c.is_zero() {
            return;
        }
        for (gm, gc) in &g.0 {
            self.add_term(gm.mul(m), gc * c);
        }
    }

    /// `self += c·m·(g − LT(g))`.
    fn add_mul_tail(&mut self, c: &BigInt, m: &Mono, g: &IPoly) {
        if c.is_zero() {
            return;
        }
        let n = g.0.len();
        for (gm, gc) in g.0.iter().take(n.saturating_sub(1)) {
            self.add_term(gm.mul(m), gc * c);
        }
    }

    fn neg_in_place(&mut self) {
        for c in self.0.values_mut() {
            *c = -std::mem::take(c);
        }
    }
}

/// Sink notified of every reduction step `h −= c·m·basis[t]`.
trait ReductionSink {
    fn step(&mut self, index: usize, c: &BigInt, m: &Mono);
}

struct NoSink;
impl ReductionSink for NoSink {
    fn step(&mut self, _: usize, _: &BigInt, _: &Mono) {}
}

/// Records quotients per basis element.
struct QuotientSink(Vec<IPoly>);
impl ReductionSink for QuotientSink {
    fn step(&mut self, index: usize, c: &BigInt, m: &Mono) {
        self.0[index].add_term(m.clone(), c.clone());
    }
}

/// Applies each step to a provenance row.
struct ProvenanceSink<'a> {
    row: &'a mut Vec<IPoly>,
    basis_rows: &'a [Vec<IPoly>],
}
impl ReductionSink for ProvenanceSink<'_> {
    fn step(&mut self, index: usize, c: &BigInt, m: &Mono) {
        let neg = -c;
        for (acc, src) in self.row.iter_mut().zip(&self.basis_rows[index]) {
            acc.add_mul(&neg, m, src);
        }
    }
}

/// Fully reduces `h` by `basis`, returning the remainder.
fn reduce(mut h: IPoly, basis: &[IPoly], sink: &mut impl ReductionSink) -> IPoly {
    let mut rem = IPoly::default();
    while let Some((m, c)) = h.0.pop_last() {
        let divisor = basis
            .iter()
            .enumerate()
            .filter_map(|(t, g)| {
                let (gm, gc) = g.lt()?;
                gm.divides(&m).then_some((t, gc))
            })
            .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)));
        match divisor {
            Some((t, b)) => {
                let (q, r) = c.div_mod_floor(b);
                if !q.is_zero() {
                    let (gm, _) = basis[t].lt().expect("nonzero basis element");
                    let shift = gm.quotient_of(&m);
                    h.add_mul_tail(&-&q, &shift, &basis[t]);
                    sink.step(t, &q, &shift);
                }
                if !r.is_zero() {
                    rem.0.insert(m, r);
                }
            }
            None => {
                rem.0.insert(m, c);
            }
        }
    }
    rem
}

/// Result of dividing by a basis: `input = Σ cofactors[j]·basis[j] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub remainder: Poly,
    pub cofactors: Vec<Poly>,
}

#[derive(Debug, Clone)]
pub struct GroebnerOptions {
    pub order: Option<MonomialOrder>,
    /// Maximum number of critical pairs processed before giving up.
    pub max_pairs: usize,
    /// Drop elements whose leading term is a multiple of another's.
    pub minimize: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            order: None,
            max_pairs: 200_000,
            minimize: true,
        }
    }
}

/// A strong Gröbner basis over `Z` together with the transformation matrix
/// expressing every element over the source polynomials.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    sources: Vec<Poly>,
    elements: Vec<Poly>,
    provenance: Vec<Vec<Poly>>,
    engine: Vec<IPoly>,
}

fn check_engine_input(p: &Poly, order: &MonomialOrder) -> Result<()> {
    if p.mode() != Mode::Polynomial {
        return Err(Error::ModeMismatch(
            "the Gröbner engine works in polynomial mode".into(),
        ));
    }
    if p.nvars() != order.nvars() {
        return Err(Error::ModeMismatch(format!(
            "polynomial has {} variables, order has {}",
            p.nvars(),
            order.nvars()
        )));
    }
    Ok(())
}

struct PairData {
    left: (BigInt, Mono),
    right: (BigInt, Mono),
}

/// Multipliers `(u, m_f)`, `(v, m_g)` such that the S-polynomial is
/// `u·m_f·f + v·m_g·g` and the GCD-polynomial likewise, or `None` for the
/// GCD-polynomial when one leading coefficient divides the other.
fn pair_data(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> (PairData, Option<PairData>) {
    let (fm, fc) = f.lt().expect("nonzero");
    let (gm, gc) = g.lt().expect("nonzero");
    let lcm = fm.lcm(gm, order);
    let mf = fm.quotient_of(&lcm);
    let mg = gm.quotient_of(&lcm);
    let l = fc.lcm(gc);
    let s = PairData {
        left: (&l / fc, mf.clone()),
        right: (-(&l / gc), mg.clone()),
    };
    let gpoly = if fc.is_multiple_of(gc) || gc.is_multiple_of(fc) {
        None
    } else {
        let e = fc.extended_gcd(gc);
        Some(PairData {
            left: (e.x, mf),
            right: (e.y, mg),
        })
    };
    (s, gpoly)
}

fn combine(d: &PairData, f: &IPoly, g: &IPoly) -> IPoly {
    let mut out = IPoly::default();
    out.add_mul(&d.left.0, &d.left.1, f);
    out.add_mul(&d.right.0, &d.right.1, g);
    out
}

/// S-polynomial of two nonzero polynomial-mode polynomials: cancels the lcm
/// of the leading terms using the lcm of the leading coefficients.
pub fn s_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Result<Poly> {
    check_engine_input(f, order)?;
    check_engine_input(g, order)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (fi, gi) = (IPoly::from_poly(f, order), IPoly::from_poly(g, order));
    let (s, _) = pair_data(&fi, &gi, order);
    Ok(combine(&s, &fi, &gi).to_poly(f.ring()))
}

/// GCD-polynomial: the Bézout combination whose leading term is
/// `gcd(lc f, lc g)·lcm(lm f, lm g)`.
pub fn gcd_polynomial(f: &Poly, g: &Poly, order: &MonomialOrder) -> Result<Poly> {
    check_engine_input(f, order)?;
    check_engine_input(g, order)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (fi, gi) = (IPoly::from_poly(f, order), IPoly::from_poly(g, order));
    let (fm, fc) = fi.lt().expect("nonzero");
    let (gm, gc) = gi.lt().expect("nonzero");
    let lcm = fm.lcm(gm, order);
    let e = fc.extended_gcd(gc);
    let d = PairData {
        left: (e.x, fm.quotient_of(&lcm)),
        right: (e.y, gm.quotient_of(&lcm)),
    };
    Ok(combine(&d, &fi, &gi).to_poly(f.ring()))
}

struct Builder<'a> {
    order: &'a MonomialOrder,
    nsources: usize,
    polys: Vec<IPoly>,
    rows: Vec<Vec<IPoly>>,
    pairs: BTreeSet<(Mono, usize, usize)>,
}

impl Builder<'_> {
    fn push(&mut self, mut p: IPoly, mut row: Vec<IPoly>) {
        if p.lt().is_some_and(|(_, c)| c.is_negative()) {
            p.neg_in_place();
            row.iter_mut().for_each(IPoly::neg_in_place);
        }
        let j = self.polys.len();
        let (pm, _) = p.lt().expect("nonzero");
        for (i, q) in self.polys.iter().enumerate() {
            let (qm, _) = q.lt().expect("nonzero");
            self.pairs.insert((qm.lcm(pm, self.order), i, j));
        }
        self.polys.push(p);
        self.rows.push(row);
    }

    fn reduce_and_push(&mut self, h: IPoly, mut row: Vec<IPoly>) {
        let r = {
            let mut sink = ProvenanceSink {
                row: &mut row,
                basis_rows: &self.rows,
            };
            reduce(h, &self.polys, &mut sink)
        };
        if !r.is_zero() {
            self.push(r, row);
        }
    }

    fn row_combination(&self, d: &PairData, i: usize, j: usize) -> Vec<IPoly> {
        (0..self.nsources)
            .map(|s| {
                let mut acc = IPoly::default();
                acc.add_mul(&d.left.0, &d.left.1, &self.rows[i][s]);
                acc.add_mul(&d.right.0, &d.right.1, &self.rows[j][s]);
                acc
            })
            .collect()
    }
}

impl GroebnerBasis {
    /// Buchberger's algorithm over `Z` with S- and GCD-polynomials.
    ///
    /// `sources` must be polynomial-mode polynomials in `order.nvars()`
    /// variables; zero sources are allowed and simply contribute nothing.
    pub fn compute(
        sources: Vec<Poly>,
        order: MonomialOrder,
        opts: &GroebnerOptions,
    ) -> Result<Self> {
        let ring = Ring::polynomial(order.nvars());
        for s in &sources {
            check_engine_input(s, &order)?;
        }
        let n = sources.len();
        let one = Mono::one(order.nvars(), &order);
        let mut b = Builder {
            order: &order,
            nsources: n,
            polys: Vec::new(),
            rows: Vec::new(),
            pairs: BTreeSet::new(),
        };
        for (j, s) in sources.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let row = (0..n)
                .map(|t| {
                    if t == j {
                        IPoly::monomial(BigInt::one(), one.clone())
                    } else {
                        IPoly::default()
                    }
                })
                .collect();
            b.push(IPoly::from_poly(s, &order), row);
        }

        let mut processed = 0usize;
        while let Some((_, i, j)) = b.pairs.pop_first() {
            processed += 1;
            if processed > opts.max_pairs {
                return Err(Error::BudgetExceeded(format!(
                    "Gröbner basis computation exceeded {} critical pairs",
                    opts.max_pairs
                )));
            }
            let (s, g) = pair_data(&b.polys[i], &b.polys[j], &order);
            if let Some(gd) = g {
                let h = combine(&gd, &b.polys[i], &b.polys[j]);
                let row = b.row_combination(&gd, i, j);
                b.reduce_and_push(h, row);
            }
            let (fm, fc) = b.polys[i].lt().expect("nonzero");
            let (gm, gc) = b.polys[j].lt().expect("nonzero");
            // coprime leading monomials and coefficients: S reduces to zero
            if fm.coprime(gm) && fc.gcd(gc).is_one() {
                continue;
            }
            let h = combine(&s, &b.polys[i], &b.polys[j]);
            let row = b.row_combination(&s, i, j);
            b.reduce_and_push(h, row);
        }

        let Builder { polys, rows, .. } = b;
        let keep: Vec<usize> = if opts.minimize {
            (0..polys.len())
                .filter(|&i| {
                    let (im, ic) = polys[i].lt().expect("nonzero");
                    !polys.iter().enumerate().any(|(j, q)| {
                        if j == i {
                            return false;
                        }
                        let (jm, jc) = q.lt().expect("nonzero");
                        let divides = jm.divides(im) && ic.is_multiple_of(jc);
                        // of two identical leading terms keep the earlier one
                        divides && !(jm == im && jc == ic && j > i)
                    })
                })
                .collect()
        } else {
            (0..polys.len()).collect()
        };

        let engine: Vec<IPoly> = keep.iter().map(|&i| polys[i].clone()).collect();
        let elements = engine.iter().map(|p| p.to_poly(ring)).collect();
        let provenance = keep
            .iter()
            .map(|&i| rows[i].iter().map(|p| p.to_poly(ring)).collect())
            .collect();
        Ok(GroebnerBasis {
            ring,
            order,
            sources,
            elements,
            provenance,
            engine,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn sources(&self) -> &[Poly] {
        &self.sources
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Row `j` expresses `elements()[j]` over `sources()`.
    pub fn provenance(&self) -> &[Vec<Poly>] {
        &self.provenance
    }

    pub fn normal_form(&self, g: &Poly) -> Result<NormalFormResult> {
        self.ring.check_same(&g.ring())?;
        let mut sink = QuotientSink(vec![IPoly::default(); self.engine.len()]);
        let rem = reduce(IPoly::from_poly(g, &self.order), &self.engine, &mut sink);
        Ok(NormalFormResult {
            remainder: rem.to_poly(self.ring),
            cofactors: sink.0.iter().map(|q| q.to_poly(self.ring)).collect(),
        })
    }

    pub fn reduces_to_zero(&self, g: &Poly) -> Result<bool> {
        self.ring.check_same(&g.ring())?;
        Ok(reduce(IPoly::from_poly(g, &self.order), &self.engine, &mut NoSink).is_zero())
    }

    /// Cofactors of `g` over `sources()`, or `None` when `g` is not in the ideal.
    pub fn source_cofactors(&self, g: &Poly) -> Result<Option<Vec<Poly>>> {
        let nf = self.normal_form(g)?;
        if !nf.remainder.is_zero() {
            return Ok(None);
        }
        let mut out = vec![Poly::zero(self.ring); self.sources.len()];
        for (q, row) in nf.cofactors.iter().zip(&self.provenance) {
            if q.is_zero() {
                continue;
            }
            for (acc, r) in out.iter_mut().zip(row) {
                *acc += &(q * r);
            }
        }
        Ok(Some(out))
    }

    /// Checks the closure property (every S- and GCD-polynomial of a pair
    /// reduces to zero) and that each provenance row reproduces its element.
    pub fn verify(&self) -> std::result::Result<(), String> {
        for (j, (e, row)) in self.elements.iter().zip(&self.provenance).enumerate() {
            let mut acc = Poly::zero(self.ring);
            for (r, s) in row.iter().zip(&self.sources) {
                acc += &(r * s);
            }
            if &acc != e {
                return Err(format!("provenance row {j} does not reproduce its element"));
            }
        }
        for i in 0..self.engine.len() {
            for j in i + 1..self.engine.len() {
                let (f, g) = (&self.engine[i], &self.engine[j]);
                let (fm, fc) = f.lt().expect("nonzero");
                let (gm, gc) = g.lt().expect("nonzero");
                let lcm = fm.lcm(gm, &self.order);
                let e = fc.extended_gcd(gc);
                let gpoly = PairData {
                    left: (e.x, fm.quotient_of(&lcm)),
                    right: (e.y, gm.quotient_of(&lcm)),
                };
                let (s, _) = pair_data(f, g, &self.order);
                for (what, d) in [("S", &s), ("GCD", &gpoly)] {
                    let h = combine(d, f, g);
                    if !reduce(h, &self.engine, &mut NoSink).is_zero() {
                        return Err(format!(
                            "{what}-polynomial of pair ({i}, {j}) does not reduce to 0"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}
