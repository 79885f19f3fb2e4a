//! Words in the metabelian group `G_I = (R/I) ⋊ Q`, `Q = Z^k`, generated by
//! `a` and `x_1, …, x_k`.
//!
//! Words are collected in the wreath product `Z ≀ Q`: a pair `(f, q)` with
//! `f ∈ Z[Q]` and `q ∈ Q`, multiplied as `(f, q)(f', q') = (f + x^q·f', q + q')`.
//! A word is trivial in `G_I` exactly when it collects to `(f, 0)` with
//! `f ∈ I`, which ties the word problem to ideal membership.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::complexity::{complexity_value, EnumerationBudget};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Exponent, Mode, Poly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    /// 1-based variable index.
    X(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn a(inverse: bool) -> Letter {
        Letter {
            generator: Generator::A,
            inverse,
        }
    }

    pub fn x(i: usize, inverse: bool) -> Letter {
        Letter {
            generator: Generator::X(i),
            inverse,
        }
    }

    pub fn inv(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.generator, self.inverse) {
            (Generator::A, false) => f.write_str("a"),
            (Generator::A, true) => f.write_str("A"),
            (Generator::X(i), false) => write!(f, "x{i}"),
            (Generator::X(i), true) => write!(f, "X{i}"),
        }
    }
}

/// A word over `a^±, x_1^±, …, x_k^±`. Text form: whitespace-separated
/// letters `a`, `A`, `x1`, `X1`, … (capitals are inverses).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    nvars: usize,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty(nvars: usize) -> Self {
        GroupWord {
            nvars,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(nvars: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if let Generator::X(i) = l.generator {
                if i == 0 || i > nvars {
                    return Err(Error::ArityMismatch {
                        expected: nvars,
                        found: i,
                    });
                }
            }
        }
        Ok(GroupWord { nvars, letters })
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            let at = text[pos..].find(tok).map_or(pos, |o| pos + o);
            pos = at + tok.len();
            let bad = |msg: String| Error::Syntax { pos: at, msg };
            let letter = match tok {
                "a" => Letter::a(false),
                "A" => Letter::a(true),
                _ => {
                    let inverse = match tok.as_bytes()[0] {
                        b'x' => false,
                        b'X' => true,
                        _ => return Err(bad(format!("unknown letter '{tok}'"))),
                    };
                    let i: usize = tok[1..]
                        .parse()
                        .map_err(|_| bad(format!("bad variable index in '{tok}'")))?;
                    if i == 0 || i > nvars {
                        return Err(bad(format!("variable x{i} outside x1..x{nvars}")));
                    }
                    Letter::x(i, inverse)
                }
            };
            letters.push(letter);
        }
        Ok(GroupWord { nvars, letters })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord {
            nvars: self.nvars.max(other.nvars),
            letters,
        }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            nvars: self.nvars,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Cancels adjacent letter/inverse pairs until none remain.
    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord {
            nvars: self.nvars,
            letters: out,
        }
    }

    fn push_power(&mut self, generator: Generator, e: i64) {
        let letter = Letter {
            generator,
            inverse: e < 0,
        };
        self.letters
            .extend(std::iter::repeat_n(letter, e.unsigned_abs() as usize));
    }

    fn push_shift(&mut self, delta: &Exponent) {
        for (i, &e) in delta.entries().iter().enumerate() {
            self.push_power(Generator::X(i + 1), e);
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Wreath normal form `(f, q)` with `f` in the Laurent ring over `k` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollectedForm {
    pub f: Poly,
    pub q: Exponent,
}

impl CollectedForm {
    pub fn identity(nvars: usize) -> Self {
        CollectedForm {
            f: Poly::zero(Ring::laurent(nvars)),
            q: Exponent::zero(nvars),
        }
    }

    pub fn mul(&self, other: &CollectedForm) -> CollectedForm {
        let mut f = self.f.clone();
        f.add_scaled_shifted(&BigInt::one(), &self.q, &other.f);
        CollectedForm {
            f,
            q: self.q.add(&other.q),
        }
    }
}

pub fn collect(w: &GroupWord) -> CollectedForm {
    let k = w.nvars;
    let mut f = Poly::zero(Ring::laurent(k));
    let mut q = vec![0i64; k];
    for l in &w.letters {
        match l.generator {
            Generator::X(i) => q[i - 1] += if l.inverse { -1 } else { 1 },
            Generator::A => {
                let c = if l.inverse {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                f.add_term(c, Exponent::new(q.clone()));
            }
        }
    }
    CollectedForm {
        f,
        q: Exponent::new(q),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ordering {
    /// Terms as printed, largest exponent first.
    Input,
    /// Nearest neighbour from the origin, ties to the lexicographically
    /// smaller exponent; never longer than `Input`.
    #[default]
    Greedy,
}

fn visit_order(g: &Poly, ordering: Ordering) -> Vec<(Exponent, BigInt)> {
    let input: Vec<(Exponent, BigInt)> = g
        .terms()
        .rev()
        .map(|(d, c)| (d.clone(), c.clone()))
        .collect();
    match ordering {
        Ordering::Input => input,
        Ordering::Greedy => {
            let mut left = input.clone();
            let mut at = Exponent::zero(g.nvars());
            let mut out = Vec::with_capacity(left.len());
            while !left.is_empty() {
                let j = (0..left.len())
                    .min_by(|&a, &b| {
                        (at.dist(&left[a].0), left[a].0.entries())
                            .cmp(&(at.dist(&left[b].0), left[b].0.entries()))
                    })
                    .expect("nonempty");
                let t = left.swap_remove(j);
                at = t.0.clone();
                out.push(t);
            }
            if tour_length(&out) <= tour_length(&input) {
                out
            } else {
                input
            }
        }
    }
}

fn tour_length(stops: &[(Exponent, BigInt)]) -> u64 {
    let mut at = Exponent::zero(stops.first().map_or(0, |s| s.0.len()));
    let mut total = 0;
    for (d, _) in stops {
        total += at.dist(d);
        at = d.clone();
    }
    total + at.norm()
}

/// The word `Π_j x^{d_j} a^{α_j} x^{-d_j}` for `g = Σ_j α_j x^{d_j}`, with
/// neighbouring conjugators fused into single shifts `x^{d_{j+1} - d_j}`.
pub fn word_from_poly(g: &Poly, ordering: Ordering) -> GroupWord {
    let mut w = GroupWord::empty(g.nvars());
    let mut at = Exponent::zero(g.nvars());
    for (d, c) in visit_order(g, ordering) {
        w.push_shift(&d.sub(&at));
        let e = c.to_i64().expect("word coefficients fit in i64");
        w.push_power(Generator::A, e);
        at = d;
    }
    w.push_shift(&at.neg());
    w
}

/// Coefficient mass plus fused conjugator lengths; equals the word length.
pub fn predicted_length(g: &Poly, ordering: Ordering) -> u64 {
    let stops = visit_order(g, ordering);
    let mass: u64 = stops
        .iter()
        .map(|(_, c)| c.abs().to_u64().unwrap_or(u64::MAX))
        .sum();
    mass + tour_length(&stops)
}

/// Whether `w` is the identity of `G_I`.
pub fn is_trivial(w: &GroupWord, ideal: &Ideal) -> Result<bool> {
    let ring = ideal.ring();
    if ring.mode != Mode::Laurent {
        return Err(Error::ModeMismatch(
            "the metabelian group needs an ideal of the Laurent ring".into(),
        ));
    }
    if ring.nvars != w.nvars {
        return Err(Error::ArityMismatch {
            expected: ring.nvars,
            found: w.nvars,
        });
    }
    let c = collect(w);
    if !c.q.is_zero() {
        return Ok(false);
    }
    ideal.is_member(&c.f)
}

/// A trivial word of length `length` whose polynomial has area `bound`, so
/// the relative Dehn function at `length` is at least `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DehnDatapoint {
    pub m: u64,
    pub n: u64,
    pub length: usize,
    pub bound: usize,
    pub witness: Poly,
    pub word: GroupWord,
    /// False when `bound` is only a lower bound for the complexity value.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DehnRecord {
    pub m: u64,
    pub n: u64,
    #[serde(rename = "L")]
    pub length: usize,
    pub bound: usize,
    pub witness: String,
    pub word: String,
    pub exact: bool,
}

impl From<&DehnDatapoint> for DehnRecord {
    fn from(d: &DehnDatapoint) -> Self {
        DehnRecord {
            m: d.m,
            n: d.n,
            length: d.length,
            bound: d.bound,
            witness: d.witness.to_string(),
            word: d.word.to_string(),
            exact: d.exact,
        }
    }
}

pub fn dehn_datapoint(
    ideal: &Ideal,
    m: u64,
    n: u64,
    budget: &EnumerationBudget,
) -> Result<DehnDatapoint> {
    if ideal.ring().mode != Mode::Laurent {
        return Err(Error::ModeMismatch(
            "the metabelian group needs an ideal of the Laurent ring".into(),
        ));
    }
    let cell = complexity_value(ideal, m, n, budget)?;
    let word = word_from_poly(&cell.witness, Ordering::Greedy);
    Ok(DehnDatapoint {
        m,
        n,
        length: word.len(),
        bound: cell.value,
        witness: cell.witness,
        word,
        exact: cell.exact,
    })
}
