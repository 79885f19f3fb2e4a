//! Support code for the acceptance target: a PASS/FAIL report and seeded
//! random instances.

use std::process::ExitCode;
use std::time::Duration;

use ideal_complexity::{Exponent, Ideal, Mode, Poly, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Default)]
pub struct Report {
    failed: usize,
    total: usize,
}

impl Report {
    /// Prints one `PASS`/`FAIL` line.
    pub fn record(&mut self, id: &str, name: &str, pass: bool, detail: &str) {
        self.total += 1;
        if !pass {
            self.failed += 1;
        }
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} [{id}] {name}: {detail}");
    }

    /// Supplementary lines are printed but do not count.
    pub fn note(&self, id: &str, name: &str, pass: bool, detail: &str) {
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} [{id}] (supplementary) {name}: {detail}");
    }

    pub fn finish(self) -> ExitCode {
        println!(
            "acceptance: {} of {} criteria passed",
            self.total - self.failed,
            self.total
        );
        if self.failed == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        }
    }
}

pub fn seconds(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_exponent(rng: &mut ChaCha8Rng, ring: Ring, max_deg: u64) -> Exponent {
    let lo = if ring.mode == Mode::Laurent {
        -(max_deg as i64)
    } else {
        0
    };
    loop {
        let e = Exponent::new(
            (0..ring.nvars)
                .map(|_| rng.random_range(lo..=max_deg as i64))
                .collect(),
        );
        if e.norm() <= max_deg {
            return e;
        }
    }
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: Ring,
    max_deg: u64,
    max_coef: i64,
    max_terms: usize,
) -> Poly {
    let n = rng.random_range(1..=max_terms);
    let terms: Vec<(i64, Exponent)> = (0..n)
        .map(|_| {
            let mut c = 0;
            while c == 0 {
                c = rng.random_range(-max_coef..=max_coef);
            }
            (c, random_exponent(rng, ring, max_deg))
        })
        .collect();
    Poly::from_terms(ring, terms).expect("exponents respect the ring")
}

fn pow_mod(b: i64, e: i64, p: i64) -> i64 {
    let (b, e) = if e < 0 {
        (pow_mod(b, p - 2, p), -e)
    } else {
        (b.rem_euclid(p), e)
    };
    (0..e).fold(1, |r, _| r * b % p)
}

/// `g(a) mod p`; every `a_i` must be a unit mod the prime `p`.
pub fn eval_mod(g: &Poly, a: &[i64], p: i64) -> i64 {
    let mut acc = 0;
    for (d, c) in g.terms() {
        let c = (c % BigInt::from(p)).to_i64().expect("reduced mod p");
        let mut t = c.rem_euclid(p);
        for (&ai, &e) in a.iter().zip(d.entries()) {
            t = t * pow_mod(ai, e, p) % p;
        }
        acc = (acc + t) % p;
    }
    acc
}

/// An ideal whose generators vanish at `point` modulo `p`.
pub struct ZeroedIdeal {
    pub ideal: Ideal,
    pub p: i64,
    pub point: Vec<i64>,
}

pub fn zeroed_ideal(rng: &mut ChaCha8Rng, ring: Ring, s: usize, max_deg: u64) -> ZeroedIdeal {
    let p = [2i64, 3, 5, 7][rng.random_range(0..4)];
    let point: Vec<i64> = (0..ring.nvars).map(|_| rng.random_range(1..p)).collect();
    let zero = Exponent::zero(ring.nvars);
    let mut gens = Vec::new();
    while gens.len() < s {
        let f = random_poly(rng, ring, max_deg, 3, 3);
        let v = eval_mod(&f, &point, p);
        let c0 = f.coeff(&zero).to_i64().expect("small coefficient");
        // new constant term ≡ c0 - v (mod p), picked in [-3, 3]
        let r = (c0 - v).rem_euclid(p);
        let r = if r > 3 { r - p } else { r };
        let f = &f + &Poly::constant(ring, r - c0);
        if !f.is_zero() && f.max_abs_coeff() <= 3u32.into() {
            gens.push(f);
        }
    }
    ZeroedIdeal {
        ideal: Ideal::new(ring, gens).expect("nonzero generators"),
        p,
        point,
    }
}

pub fn random_combination(
    rng: &mut ChaCha8Rng,
    ideal: &Ideal,
    max_deg: u64,
    max_coef: i64,
) -> Poly {
    let mut g = Poly::zero(ideal.ring());
    for f in ideal.generators() {
        if rng.random_bool(0.8) {
            let h = random_poly(rng, ideal.ring(), max_deg, max_coef, 3);
            g = &g + &(&h * f);
        }
    }
    g
}
