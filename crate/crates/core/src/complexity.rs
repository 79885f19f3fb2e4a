//! The complexity function `C(m, n)`: the largest area of a member with
//! norm at most `m` and degree at most `n`.
//!
//! Members are enumerated exhaustively (supports inside the L1 ball of
//! radius `n`, coefficient mass at most `m`, one of `±g`), so the values are
//! exact whenever no budget is hit. A budget hit never produces a wrong
//! value; the cell is flagged inexact and its value is a lower bound.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::area::{area_exact, shift_ball, AreaCertificate, SearchConfig};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Exponent, Poly, Ring};

#[derive(Debug, Clone)]
pub struct EnumerationBudget {
    pub max_candidates: usize,
    /// Area search budget for each member.
    pub max_area: usize,
    pub wall_clock: Option<Duration>,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_candidates: 2_000_000,
            max_area: 24,
            wall_clock: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    pub candidates: usize,
    pub members: usize,
    pub truncated: bool,
}

/// Calls `visit` on `0` and then on every nonzero `g` with support in the
/// radius-`n` ball and `|g| ≤ m` whose largest term is positive. Stops early
/// when `visit` returns `false`; the return value says whether it finished.
pub fn for_each_candidate(ring: Ring, m: u64, n: u64, mut visit: impl FnMut(Poly) -> bool) -> bool {
    if !visit(Poly::zero(ring)) {
        return false;
    }
    let ball = shift_ball(ring, n);
    let mut support = Vec::new();
    for size in 1..=(m as usize).min(ball.len()) {
        if !subsets(&ball, 0, size, &mut support, &mut |s| {
            coefficients(ring, s, m, &mut visit)
        }) {
            return false;
        }
    }
    true
}

fn subsets(
    ball: &[Exponent],
    from: usize,
    size: usize,
    cur: &mut Vec<Exponent>,
    f: &mut impl FnMut(&[Exponent]) -> bool,
) -> bool {
    if cur.len() == size {
        return f(cur);
    }
    let need = size - cur.len();
    for i in from..=ball.len() - need {
        cur.push(ball[i].clone());
        let go = subsets(ball, i + 1, size, cur, f);
        cur.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Nonzero coefficient vectors on a fixed support with total mass `≤ m`,
/// positive on the last (largest) exponent.
fn coefficients(
    ring: Ring,
    support: &[Exponent],
    m: u64,
    visit: &mut impl FnMut(Poly) -> bool,
) -> bool {
    fn rec(
        ring: Ring,
        support: &[Exponent],
        left: u64,
        coeffs: &mut Vec<i64>,
        visit: &mut impl FnMut(Poly) -> bool,
    ) -> bool {
        let j = coeffs.len();
        if j == support.len() {
            let terms = coeffs.iter().zip(support).map(|(&c, d)| (c, d.clone()));
            return visit(Poly::from_terms(ring, terms).expect("ball respects the ring"));
        }
        let reserve = (support.len() - j - 1) as u64;
        let last = j + 1 == support.len();
        for mag in 1..=left.saturating_sub(reserve) {
            let signs: &[i64] = if last { &[1] } else { &[1, -1] };
            for &s in signs {
                coeffs.push(s * mag as i64);
                let go = rec(ring, support, left - mag, coeffs, visit);
                coeffs.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
    rec(ring, support, m, &mut Vec::new(), visit)
}

/// Streams the members among the candidates of [`for_each_candidate`].
pub fn enumerate_members(
    ideal: &Ideal,
    m: u64,
    n: u64,
    budget: &EnumerationBudget,
    mut visit: impl FnMut(&Poly),
) -> Result<EnumerationStats> {
    let start = Instant::now();
    let mut stats = EnumerationStats::default();
    let mut failure = None;
    for_each_candidate(ideal.ring(), m, n, |g| {
        let out_of_time = budget.wall_clock.is_some_and(|t| start.elapsed() > t);
        if stats.candidates >= budget.max_candidates || out_of_time {
            stats.truncated = true;
            return false;
        }
        stats.candidates += 1;
        match ideal.is_member(&g) {
            Ok(true) => {
                stats.members += 1;
                visit(&g);
                true
            }
            Ok(false) => true,
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(stats),
    }
}

pub fn members(
    ideal: &Ideal,
    m: u64,
    n: u64,
    budget: &EnumerationBudget,
) -> Result<(Vec<Poly>, EnumerationStats)> {
    let mut out = Vec::new();
    let stats = enumerate_members(ideal, m, n, budget, |g| out.push(g.clone()))?;
    Ok((out, stats))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityCell {
    pub m: u64,
    pub n: u64,
    pub value: usize,
    /// A member attaining `value`; `0` when no nonzero member exists.
    pub witness: Poly,
    pub certificate: AreaCertificate,
    /// False when the value is only a lower bound.
    pub exact: bool,
    pub candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityRecord {
    pub m: u64,
    pub n: u64,
    #[serde(rename = "C")]
    pub value: usize,
    pub witness: String,
    pub exact: bool,
    pub candidates: usize,
}

impl From<&ComplexityCell> for ComplexityRecord {
    fn from(c: &ComplexityCell) -> Self {
        ComplexityRecord {
            m: c.m,
            n: c.n,
            value: c.value,
            witness: c.witness.to_string(),
            exact: c.exact,
            candidates: c.candidates,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityTable {
    pub cells: Vec<ComplexityCell>,
}

impl ComplexityTable {
    pub fn get(&self, m: u64, n: u64) -> Option<&ComplexityCell> {
        self.cells.iter().find(|c| c.m == m && c.n == n)
    }

    pub fn records(&self) -> Vec<ComplexityRecord> {
        self.cells.iter().map(ComplexityRecord::from).collect()
    }

    /// CSV with header `m,n,C,witness,exact,candidates`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in self.records() {
            w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.records()).expect("records serialize")
    }
}

struct Scored {
    poly: Poly,
    norm: u64,
    degree: u64,
    /// `None` when the area search ran out of budget.
    cert: Option<AreaCertificate>,
}

fn score(ideal: &Ideal, g: &Poly, budget: &EnumerationBudget) -> Result<Scored> {
    let norm = g.norm().to_u64().unwrap_or(u64::MAX);
    let degree = g.degree().or_zero();
    let cert = match area_exact(g, ideal, &SearchConfig::with_max_area(budget.max_area)) {
        Ok(c) => Some(c),
        Err(Error::BudgetExceeded(_) | Error::RadiusExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Scored {
        poly: g.clone(),
        norm,
        degree,
        cert,
    })
}

/// Evaluates every cell of `cells` from one enumeration at the largest
/// `(m, n)` among them.
fn evaluate(
    ideal: &Ideal,
    cells: &[(u64, u64)],
    budget: &EnumerationBudget,
) -> Result<Vec<ComplexityCell>> {
    let big_m = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let big_n = cells.iter().map(|c| c.1).max().unwrap_or(0);
    let ring = ideal.ring();

    // candidates by (norm, degree), for the per-cell counts
    let mut hist = vec![vec![0usize; big_n as usize + 1]; big_m as usize + 1];
    let mut scored = Vec::new();
    let mut failure = None;
    let start = Instant::now();
    let mut seen = 0usize;
    let mut truncated = false;
    for_each_candidate(ring, big_m, big_n, |g| {
        let out_of_time = budget.wall_clock.is_some_and(|t| start.elapsed() > t);
        if seen >= budget.max_candidates || out_of_time {
            truncated = true;
            return false;
        }
        seen += 1;
        let norm = g.norm().to_usize().expect("bounded by m");
        let degree = g.degree().or_zero() as usize;
        hist[norm][degree] += 1;
        let r = ideal.is_member(&g).and_then(|yes| {
            if yes && !g.is_zero() {
                score(ideal, &g, budget).map(Some)
            } else {
                Ok(None)
            }
        });
        match r {
            Ok(Some(s)) => scored.push(s),
            Ok(None) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let mut out = Vec::new();
    for &(m, n) in cells {
        let mut best: Option<&Scored> = None;
        let mut exact = !truncated;
        for s in scored.iter().filter(|s| s.norm <= m && s.degree <= n) {
            let Some(cert) = &s.cert else {
                exact = false;
                continue;
            };
            let better = match best {
                None => true,
                Some(b) => {
                    let ba = b.cert.as_ref().expect("best has a certificate").area();
                    (cert.area(), std::cmp::Reverse((s.norm, s.degree, &s.poly)))
                        > (ba, std::cmp::Reverse((b.norm, b.degree, &b.poly)))
                }
            };
            if better {
                best = Some(s);
            }
        }
        let candidates = hist
            .iter()
            .take(m as usize + 1)
            .map(|row| row.iter().take(n as usize + 1).sum::<usize>())
            .sum();
        let (value, witness, certificate) = match best {
            Some(s) => {
                let c = s.cert.clone().expect("best has a certificate");
                (c.area(), s.poly.clone(), c)
            }
            None => {
                let z = Poly::zero(ring);
                (0, z.clone(), AreaCertificate::new(z, []))
            }
        };
        out.push(ComplexityCell {
            m,
            n,
            value,
            witness,
            certificate,
            exact,
            candidates,
        });
    }
    Ok(out)
}

/// `C(m, n)` with a witness of largest area (ties go to the smallest
/// `(norm, degree, polynomial)`).
pub fn complexity_value(
    ideal: &Ideal,
    m: u64,
    n: u64,
    budget: &EnumerationBudget,
) -> Result<ComplexityCell> {
    Ok(evaluate(ideal, &[(m, n)], budget)?.remove(0))
}

/// Cells `1 ≤ m ≤ M`, `1 ≤ n ≤ N` in row-major order; `M = 0` gives the
/// all-zero row `m = 0`.
pub fn complexity_table(
    ideal: &Ideal,
    big_m: u64,
    big_n: u64,
    budget: &EnumerationBudget,
) -> Result<ComplexityTable> {
    let ms: Vec<u64> = if big_m == 0 {
        vec![0]
    } else {
        (1..=big_m).collect()
    };
    let cells: Vec<(u64, u64)> = ms
        .iter()
        .flat_map(|&m| (1..=big_n).map(move |n| (m, n)))
        .collect();
    Ok(ComplexityTable {
        cells: evaluate(ideal, &cells, budget)?,
    })
}
