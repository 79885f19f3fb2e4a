//! Exact area of ideal members.
//!
//! The area of `g ∈ I` with respect to `F` is the least `Σ |h_i|` over all
//! representations `g = Σ h_i f_i`. Equivalently it is the least number of
//! signed shifted generators `±x^d·f_i` summing to `g`; an
//! [`AreaCertificate`] is such a multiset.
//!
//! [`area_exact`] deepens on the candidate area `a`, restricting shifts to
//! the degree radius `deg g + 5·D·a` at level `a`. Within a level it branches
//! on the terms able to cancel the largest monomial of the residual, which
//! visits every multiset summing to the residual. [`area_brute_oracle`] is an
//! independent meet-in-the-middle enumeration over a fixed shift pool.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use indexmap::IndexMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Degree, Exponent, Mode, Poly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_int(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One signed shifted generator `ε·x^d·f_i`. `generator` is 0-based.
///
/// Entries order by `(generator, shift, sign)` with shifts in graded
/// lexicographic order and `+` before `−`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CertEntry {
    pub generator: usize,
    pub shift: Exponent,
    pub sign: Sign,
}

/// A multiset of signed shifted generators together with the element it
/// claims to sum to. Entries are kept sorted and free of opposite pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaCertificate {
    target: Poly,
    entries: Vec<CertEntry>,
}

impl AreaCertificate {
    /// Canonicalizes `entries`: opposite pairs `(i, d, +)`, `(i, d, −)` cancel
    /// and the rest is sorted.
    pub fn new(target: Poly, entries: impl IntoIterator<Item = CertEntry>) -> Self {
        let mut net: BTreeMap<(usize, Exponent), i64> = BTreeMap::new();
        for e in entries {
            let v = net.entry((e.generator, e.shift)).or_default();
            *v += match e.sign {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
        }
        let mut out = Vec::new();
        for ((generator, shift), n) in net {
            let sign = if n > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..n.unsigned_abs() {
                out.push(CertEntry {
                    generator,
                    shift: shift.clone(),
                    sign,
                });
            }
        }
        out.sort();
        AreaCertificate {
            target,
            entries: out,
        }
    }

    pub fn target(&self) -> &Poly {
        &self.target
    }

    pub fn entries(&self) -> &[CertEntry] {
        &self.entries
    }

    /// Entry count, which equals `Σ |h_i|`.
    pub fn area(&self) -> usize {
        self.entries.len()
    }

    fn check_shape(&self, ideal: &Ideal) -> bool {
        self.target.ring() == ideal.ring()
            && self
                .entries
                .iter()
                .all(|e| e.generator < ideal.len() && ideal.ring().check_exponent(&e.shift).is_ok())
    }

    /// Aggregated cofactors `h_i = Σ ε·x^d` per generator.
    pub fn cofactors(&self, ideal: &Ideal) -> Result<Vec<Poly>> {
        if !self.check_shape(ideal) {
            return Err(Error::Invalid("certificate does not fit the ideal".into()));
        }
        let ring = ideal.ring();
        let mut hs = vec![Poly::zero(ring); ideal.len()];
        for e in &self.entries {
            hs[e.generator].add_term(e.sign.as_int(), e.shift.clone());
        }
        Ok(hs)
    }

    /// `Σ ε·x^d·f_i` over the entries.
    pub fn expand(&self, ideal: &Ideal) -> Result<Poly> {
        if !self.check_shape(ideal) {
            return Err(Error::Invalid("certificate does not fit the ideal".into()));
        }
        let mut sum = Poly::zero(ideal.ring());
        for e in &self.entries {
            sum.add_scaled_shifted(&e.sign.as_int(), &e.shift, &ideal.generators()[e.generator]);
        }
        Ok(sum)
    }

    pub fn max_cofactor_degree(&self) -> Degree {
        self.entries
            .iter()
            .map(|e| Degree::Finite(e.shift.norm()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Line format: `target: <poly>` then one `i ε d1 … dk` line per entry
    /// (`i` 1-based, `ε` is `+` or `-`).
    pub fn to_text(&self) -> String {
        let mut s = format!("target: {}\n", self.target);
        for e in &self.entries {
            s.push_str(&format!("{} {}", e.generator + 1, e.sign.symbol()));
            for d in e.shift.entries() {
                s.push_str(&format!(" {d}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str, ring: Ring) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Invalid("empty certificate".into()))?;
        let target_src = header
            .trim()
            .strip_prefix("target:")
            .ok_or_else(|| Error::Invalid("certificate must start with 'target:'".into()))?;
        let target = Poly::parse(target_src, ring)?;
        let mut entries = Vec::new();
        for (no, line) in lines {
            let bad = |msg: &str| Error::Invalid(format!("certificate line {}: {msg}", no + 1));
            let mut fields = line.split_whitespace();
            let i: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| bad("expected a generator index >= 1"))?;
            let sign = match fields.next() {
                Some("+") => Sign::Plus,
                Some("-") => Sign::Minus,
                _ => return Err(bad("expected '+' or '-'")),
            };
            let shift = fields
                .map(|t| t.parse::<i64>().map_err(|_| bad("bad exponent")))
                .collect::<Result<Vec<_>>>()?;
            let shift = Exponent::new(shift);
            ring.check_exponent(&shift)?;
            entries.push(CertEntry {
                generator: i - 1,
                shift,
                sign,
            });
        }
        Ok(AreaCertificate::new(target, entries))
    }
}

impl fmt::Display for AreaCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `deg g + 5·D·a`: within this L1 radius some minimal representation of an
/// area-`a` element has all its cofactor terms.
pub fn degree_radius(g: &Poly, area: usize, ideal: &Ideal) -> u64 {
    g.degree().or_zero() + ideal.degree_constant() * area as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    /// The entries sum to the target.
    pub valid: bool,
    /// `max_i deg h_i ≤ deg target + 5·D·area`.
    pub degree_bound_holds: bool,
    pub max_cofactor_degree: Degree,
    pub degree_limit: u64,
}

pub fn verify_certificate(cert: &AreaCertificate, ideal: &Ideal) -> Verification {
    let degree_limit = degree_radius(cert.target(), cert.area(), ideal);
    let max_cofactor_degree = cert.max_cofactor_degree();
    let valid = cert.expand(ideal).is_ok_and(|s| &s == cert.target());
    Verification {
        valid,
        degree_bound_holds: max_cofactor_degree <= Degree::Finite(degree_limit),
        max_cofactor_degree,
        degree_limit,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    None,
    /// Additionally discard residuals with a monomial no admissible
    /// shifted generator can reach.
    Connectivity,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_area: usize,
    /// Added to the degree radius at every level.
    pub radius_slack: u64,
    pub pruning: Pruning,
    /// Cap on memoized search states per level.
    pub memo_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_area: 24,
            radius_slack: 0,
            pruning: Pruning::None,
            memo_limit: 2_000_000,
        }
    }
}

impl SearchConfig {
    pub fn with_max_area(max_area: usize) -> Self {
        SearchConfig {
            max_area,
            ..SearchConfig::default()
        }
    }
}

/// A completion: at most `rem` entries, sorted, that sum to a residual.
type Completion = Option<Vec<CertEntry>>;

struct Search<'a> {
    ideal: &'a Ideal,
    radius: u64,
    gen_degrees: Vec<u64>,
    max_gen_norm: BigUint,
    pruning: Pruning,
    memo: HashMap<(Poly, usize), Completion>,
    memo_limit: usize,
}

impl Search<'_> {
    fn admissible(&self, generator: usize, d: &Exponent) -> bool {
        d.norm() + self.gen_degrees[generator] <= self.radius
            && (self.ideal.ring().mode == Mode::Laurent || d.is_nonnegative())
    }

    /// Shifted generators whose support contains `m`.
    fn covering(&self, m: &Exponent) -> Vec<(usize, Exponent)> {
        let mut out = Vec::new();
        for (i, f) in self.ideal.generators().iter().enumerate() {
            for (e, _) in f.terms() {
                let d = m.sub(e);
                if self.admissible(i, &d) {
                    out.push((i, d));
                }
            }
        }
        out
    }

    fn reachable(&self, r: &Poly) -> bool {
        r.terms().all(|(m, _)| !self.covering(m).is_empty())
    }

    fn best(&mut self, r: &Poly, rem: usize) -> Completion {
        if r.is_zero() {
            return Some(Vec::new());
        }
        if rem == 0 || r.norm() > &self.max_gen_norm * BigUint::from(rem) {
            return None;
        }
        let key = (r.clone(), rem);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        if self.pruning == Pruning::Connectivity && !self.reachable(r) {
            return None;
        }
        let m = r.last_term().expect("nonzero residual").0.clone();
        let mut best: Completion = None;
        for (i, d) in self.covering(&m) {
            for sign in [Sign::Plus, Sign::Minus] {
                let mut next = r.clone();
                next.add_scaled_shifted(&-sign.as_int(), &d, &self.ideal.generators()[i]);
                if let Some(mut tail) = self.best(&next, rem - 1) {
                    let entry = CertEntry {
                        generator: i,
                        shift: d.clone(),
                        sign,
                    };
                    let pos = tail.partition_point(|e| e < &entry);
                    tail.insert(pos, entry);
                    let better = match &best {
                        None => true,
                        Some(b) => (tail.len(), &tail) < (b.len(), b),
                    };
                    if better {
                        best = Some(tail);
                    }
                }
            }
        }
        if self.memo.len() < self.memo_limit {
            self.memo.insert(key, best.clone());
        }
        best
    }
}

/// Minimal-area certificate for `g`, the least one under the entry order
/// when several exist.
pub fn area_exact(g: &Poly, ideal: &Ideal, cfg: &SearchConfig) -> Result<AreaCertificate> {
    ideal.ring().check_same(&g.ring())?;
    if g.is_zero() {
        return Ok(AreaCertificate::new(g.clone(), []));
    }
    if !ideal.is_member(g)? {
        return Err(Error::NotMember);
    }
    let upper = ideal.representation(g)?.area_bound;
    let upper = upper.to_usize().unwrap_or(usize::MAX);
    let limit = upper.min(cfg.max_area);
    let gen_degrees: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|f| f.degree().or_zero())
        .collect();
    let max_gen_norm = ideal
        .generators()
        .iter()
        .map(Poly::norm)
        .max()
        .expect("nonempty");
    for a in 1..=limit {
        let mut search = Search {
            ideal,
            radius: degree_radius(g, a, ideal) + cfg.radius_slack,
            gen_degrees: gen_degrees.clone(),
            max_gen_norm: max_gen_norm.clone(),
            pruning: cfg.pruning,
            memo: HashMap::new(),
            memo_limit: cfg.memo_limit,
        };
        if let Some(entries) = search.best(g, a) {
            return Ok(AreaCertificate::new(g.clone(), entries));
        }
    }
    if upper <= cfg.max_area {
        Err(Error::RadiusExhausted {
            max_area: upper,
            slack: cfg.radius_slack,
        })
    } else {
        Err(Error::BudgetExceeded(format!(
            "no certificate of area <= {}",
            cfg.max_area
        )))
    }
}

/// Sparse sum of pool terms with machine-size coefficients, flattened as
/// `[e_1 … e_k, c]` per term in ascending exponent order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Flat(Vec<i64>);

impl Flat {
    fn from_poly(p: &Poly) -> Result<Flat> {
        let mut v = Vec::with_capacity(p.len() * (p.nvars() + 1));
        for (d, c) in p.terms() {
            v.extend_from_slice(d.entries());
            v.push(
                c.to_i64()
                    .filter(|c| c.unsigned_abs() < 1 << 40)
                    .ok_or_else(|| {
                        Error::Invalid("oracle coefficients must fit in 40 bits".into())
                    })?,
            );
        }
        Ok(Flat(v))
    }

    fn combine(&self, other: &Flat, k: usize, sign: i64) -> Flat {
        let w = k + 1;
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let key = |s: &[i64]| (s.iter().map(|e| e.unsigned_abs()).sum::<u64>(), s.to_vec());
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                key(&a[i..i + k]).cmp(&key(&b[j..j + k]))
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.extend_from_slice(&a[i..i + w]);
                    i += w;
                }
                std::cmp::Ordering::Greater => {
                    out.extend_from_slice(&b[j..j + k]);
                    out.push(sign * b[j + k]);
                    j += w;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i + k] + sign * b[j + k];
                    if c != 0 {
                        out.extend_from_slice(&a[i..i + k]);
                        out.push(c);
                    }
                    i += w;
                    j += w;
                }
            }
        }
        Flat(out)
    }
}

/// Shifts `d` with `‖d‖ ≤ radius` (nonnegative in polynomial mode), in
/// ascending graded-lexicographic order.
pub fn shift_ball(ring: Ring, radius: u64) -> Vec<Exponent> {
    fn rec(k: usize, left: i64, laurent: bool, cur: &mut Vec<i64>, out: &mut Vec<Exponent>) {
        if cur.len() == k {
            out.push(Exponent::new(cur.clone()));
            return;
        }
        let lo = if laurent { -left } else { 0 };
        for v in lo..=left {
            cur.push(v);
            rec(k, left - v.abs(), laurent, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        ring.nvars,
        radius as i64,
        ring.mode == Mode::Laurent,
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// Exhaustive reference: the minimal certificate with at most `a_max`
/// entries drawn from `{ε·x^d·f_i : ‖d‖ ≤ radius}`, or `None`.
///
/// Enumerates the sums of every multiset of `⌈a_max/2⌉` pool terms and
/// matches halves, so the work is `|pool|^⌈a_max/2⌉`.
pub fn area_brute_oracle(
    g: &Poly,
    ideal: &Ideal,
    a_max: usize,
    radius: u64,
) -> Result<Option<AreaCertificate>> {
    ideal.ring().check_same(&g.ring())?;
    if g.is_zero() {
        return Ok(Some(AreaCertificate::new(g.clone(), [])));
    }
    let k = ideal.ring().nvars;
    let mut pool: Vec<(CertEntry, Flat)> = Vec::new();
    for (i, f) in ideal.generators().iter().enumerate() {
        for d in shift_ball(ideal.ring(), radius) {
            let shifted = f.monomial_mul(&BigInt::one(), &d)?;
            for sign in [Sign::Plus, Sign::Minus] {
                let p = shifted.scale(&sign.as_int());
                pool.push((
                    CertEntry {
                        generator: i,
                        shift: d.clone(),
                        sign,
                    },
                    Flat::from_poly(&p)?,
                ));
            }
        }
    }
    pool.sort_by(|a, b| a.0.cmp(&b.0));

    // tables[j]: sum of exactly j pool terms -> first witness found
    let target = Flat::from_poly(g)?;
    let half = a_max.div_ceil(2);
    let mut tables: Vec<IndexMap<Flat, Vec<u32>>> = vec![IndexMap::from([(Flat(vec![]), vec![])])];
    let witness = |w: &[u32], w2: &[u32]| -> AreaCertificate {
        AreaCertificate::new(
            g.clone(),
            w.iter().chain(w2).map(|&t| pool[t as usize].0.clone()),
        )
    };
    for a in 1..=a_max {
        let p = a.div_ceil(2);
        let q = a - p;
        while tables.len() <= p.min(half) {
            let prev = tables.last().expect("table 0 exists");
            let mut next: IndexMap<Flat, Vec<u32>> = IndexMap::new();
            for (s, w) in prev {
                for (t, (_, term)) in pool.iter().enumerate() {
                    let sum = s.combine(term, k, 1);
                    next.entry(sum).or_insert_with(|| {
                        let mut w = w.clone();
                        w.push(t as u32);
                        w.sort_unstable();
                        w
                    });
                }
            }
            tables.push(next);
        }
        for (s, w) in &tables[q] {
            let need = target.combine(s, k, -1);
            if let Some(w2) = tables[p].get(&need) {
                return Ok(Some(witness(w, w2)));
            }
        }
    }
    Ok(None)
}

/// `max_{i,j} |r_{i,j}|` of a conversion matrix.
pub fn conversion_constant(matrix: &[Vec<Poly>]) -> BigUint {
    matrix
        .iter()
        .flatten()
        .map(Poly::norm)
        .max()
        .unwrap_or_default()
}

/// Rewrites a certificate over `from` into one over `to`, given rows with
/// `from_i = Σ_j matrix[i][j]·to_j`. The result has area at most
/// `|to|·C·area`, `C` being [`conversion_constant`].
pub fn convert_representation(
    cert: &AreaCertificate,
    from: &Ideal,
    to: &Ideal,
    matrix: &[Vec<Poly>],
) -> Result<AreaCertificate> {
    let ring = from.ring();
    ring.check_same(&to.ring())?;
    if matrix.len() != from.len() || matrix.iter().any(|row| row.len() != to.len()) {
        return Err(Error::BadConversionMatrix(format!(
            "expected a {}x{} matrix",
            from.len(),
            to.len()
        )));
    }
    for (i, row) in matrix.iter().enumerate() {
        let mut acc = Poly::zero(ring);
        for (r, g) in row.iter().zip(to.generators()) {
            if r.ring() != ring {
                return Err(Error::BadConversionMatrix(format!(
                    "row {} is in another ring",
                    i + 1
                )));
            }
            acc += &(r * g);
        }
        if acc != from.generators()[i] {
            return Err(Error::BadConversionMatrix(format!(
                "row {} does not reproduce generator {}",
                i + 1,
                from.generators()[i]
            )));
        }
    }
    let mut entries = Vec::new();
    for e in cert.entries() {
        if e.generator >= from.len() {
            return Err(Error::Invalid("certificate does not fit the ideal".into()));
        }
        for (j, r) in matrix[e.generator].iter().enumerate() {
            for (shift, c) in r.terms() {
                let sign = if c.is_negative() {
                    e.sign.flip()
                } else {
                    e.sign
                };
                let d = e.shift.add(shift);
                let times = c.magnitude().to_usize().ok_or_else(|| {
                    Error::BadConversionMatrix("conversion coefficient too large".into())
                })?;
                for _ in 0..times {
                    entries.push(CertEntry {
                        generator: j,
                        shift: d.clone(),
                        sign,
                    });
                }
            }
        }
    }
    Ok(AreaCertificate::new(cert.target().clone(), entries))
}
