#![allow(dead_code)]

use ideal_complexity::{Exponent, Ideal, Mode, Poly, Ring};
use num_traits::ToPrimitive;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_exponent(rng: &mut ChaCha8Rng, ring: Ring, max_deg: u64) -> Exponent {
    loop {
        let e: Vec<i64> = (0..ring.nvars)
            .map(|_| {
                let lo = if ring.mode == Mode::Laurent {
                    -(max_deg as i64)
                } else {
                    0
                };
                rng.random_range(lo..=max_deg as i64)
            })
            .collect();
        let e = Exponent::new(e);
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
    Poly::from_terms(ring, terms).unwrap()
}

fn pow_mod(b: i64, e: i64, p: i64) -> i64 {
    // negative exponents through the inverse b^(p-2)
    let (b, e) = if e < 0 {
        (pow_mod(b, p - 2, p), -e)
    } else {
        (b.rem_euclid(p), e)
    };
    let mut r = 1i64;
    for _ in 0..e {
        r = r * b % p;
    }
    r
}

/// `g(a) mod p` with every `a_i` a unit mod `p`.
pub fn eval_mod(g: &Poly, a: &[i64], p: i64) -> i64 {
    let mut acc = 0i64;
    for (d, c) in g.terms() {
        let mut t = (c % num_bigint::BigInt::from(p))
            .to_i64()
            .unwrap()
            .rem_euclid(p);
        for (&ai, &e) in a.iter().zip(d.entries()) {
            t = t * pow_mod(ai, e, p) % p;
        }
        acc = (acc + t) % p;
    }
    acc
}

/// Random ideal whose generators all vanish at `a` modulo `p`, so that any
/// `g` with `g(a) ≠ 0 mod p` is provably not a member.
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
        // shift the constant term by -v, choosing the representative in [-3, 3]
        let c0 = f.coeff(&zero).to_i64().unwrap();
        let target = (c0 - v).rem_euclid(p);
        let rep = if target > 3 { target - p } else { target };
        let f = &f + &Poly::constant(ring, rep - c0);
        if !f.is_zero() && f.max_abs_coeff() <= 3u32.into() {
            assert_eq!(eval_mod(&f, &point, p), 0);
            gens.push(f);
        }
    }
    ZeroedIdeal {
        ideal: Ideal::new(ring, gens).unwrap(),
        p,
        point,
    }
}

/// `Σ h_i f_i` with random cofactors.
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

pub fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    let k = rng.random_range(1..=2);
    if rng.random_bool(0.5) {
        Ring::laurent(k)
    } else {
        Ring::polynomial(k)
    }
}
