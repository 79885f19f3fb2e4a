use std::collections::BTreeSet;

use ideal_complexity::area::{area_brute_oracle, degree_radius, shift_ball, verify_certificate};
use ideal_complexity::complexity::{members, ComplexityRecord};
use ideal_complexity::{
    area_exact, complexity_table, complexity_value, EnumerationBudget, Exponent, Ideal, Poly, Ring,
    SearchConfig,
};
use num_bigint::BigInt;

fn x_minus_1(ring: Ring) -> Ideal {
    Ideal::parse(ring, &["x1 - 1"]).unwrap()
}

/// Every g with support in the radius-n ball, |g| ≤ m and g(1) = 0, up to
/// sign, by listing all coefficient vectors in [-m, m]^ball.
fn naive_members_at_one(ring: Ring, m: i64, n: u64) -> BTreeSet<Poly> {
    let ball = shift_ball(ring, n);
    let mut out = BTreeSet::new();
    let mut coeffs = vec![-m; ball.len()];
    loop {
        let mass: i64 = coeffs.iter().map(|c: &i64| c.abs()).sum();
        if mass <= m && coeffs.iter().sum::<i64>() == 0 {
            let g = Poly::from_terms(ring, coeffs.iter().zip(&ball).map(|(&c, d)| (c, d.clone())))
                .unwrap();
            out.insert(g.sign_normalized());
        }
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return out;
            }
            if coeffs[i] < m {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = -m;
            i += 1;
        }
    }
}

#[test]
fn enumeration_matches_naive_listing() {
    for ring in [Ring::laurent(1), Ring::polynomial(1)] {
        let ideal = x_minus_1(ring);
        for (m, n) in [(2, 1), (2, 2), (3, 2), (4, 1)] {
            let (found, stats) = members(&ideal, m, n, &EnumerationBudget::default()).unwrap();
            assert!(!stats.truncated);
            let set: BTreeSet<Poly> = found.iter().cloned().collect();
            assert_eq!(set.len(), found.len(), "duplicates at ({m},{n})");
            assert_eq!(
                set,
                naive_members_at_one(ring, m as i64, n),
                "({m},{n}) {ring:?}"
            );
        }
    }
}

#[test]
fn enumeration_examples() {
    let l = Ring::laurent(1);
    let ideal = x_minus_1(l);
    let (found, _) = members(&ideal, 2, 1, &EnumerationBudget::default()).unwrap();
    let got: BTreeSet<String> = found.iter().map(|g| g.to_string()).collect();
    let want: BTreeSet<String> = ["0", "x1 - 1", "1 - x1^-1", "x1 - x1^-1"]
        .iter()
        .map(|s| Poly::parse(s, l).unwrap().sign_normalized().to_string())
        .collect();
    assert_eq!(got, want);

    let (only_zero, _) = members(&ideal, 0, 3, &EnumerationBudget::default()).unwrap();
    assert_eq!(only_zero, vec![Poly::zero(l)]);

    let unit = Ideal::parse(Ring::polynomial(1), &["1"]).unwrap();
    let (found, _) = members(&unit, 1, 0, &EnumerationBudget::default()).unwrap();
    assert_eq!(found, vec![Poly::zero(unit.ring()), Poly::one(unit.ring())]);
}

fn oracle_value(ideal: &Ideal, m: i64, n: u64) -> usize {
    naive_members_at_one(ideal.ring(), m, n)
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let a_max = 2 * n as usize;
            let r = degree_radius(g, a_max, ideal) + 2 * ideal.max_degree();
            area_brute_oracle(g, ideal, a_max, r)
                .unwrap()
                .unwrap()
                .area()
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn polynomial_ring_values() {
    let ideal = x_minus_1(Ring::polynomial(1));
    let b = EnumerationBudget::default();
    let c = complexity_value(&ideal, 2, 1, &b).unwrap();
    assert_eq!((c.value, c.witness.to_string().as_str()), (1, "x1 - 1"));
    let c = complexity_value(&ideal, 2, 3, &b).unwrap();
    assert_eq!((c.value, c.witness.to_string().as_str()), (3, "x1^3 - 1"));
    for n in 1..=3 {
        assert_eq!(
            complexity_value(&ideal, 2, n, &b).unwrap().value,
            oracle_value(&ideal, 2, n)
        );
    }
}

#[test]
fn laurent_values_follow_the_two_sided_ball() {
    // x^n - x^-n = (x^(n-1) + … + x^-n)(x - 1) has norm 2, degree n, area 2n
    let ideal = x_minus_1(Ring::laurent(1));
    let b = EnumerationBudget::default();
    for n in 1..=3u64 {
        let c = complexity_value(&ideal, 2, n, &b).unwrap();
        assert!(c.exact);
        assert_eq!(c.value, 2 * n as usize);
        assert_eq!(c.value, oracle_value(&ideal, 2, n));
        let d = n as i64;
        let expect = Poly::from_terms(
            ideal.ring(),
            [(1, Exponent::new(vec![d])), (-1, Exponent::new(vec![-d]))],
        )
        .unwrap();
        assert_eq!(c.witness, expect);
    }
}

#[test]
fn zero_mass_cells_are_zero() {
    let ideal = Ideal::parse(Ring::polynomial(2), &["x1 - x2", "3"]).unwrap();
    let c = complexity_value(&ideal, 0, 4, &EnumerationBudget::default()).unwrap();
    assert_eq!(c.value, 0);
    assert!(c.witness.is_zero());
    assert_eq!(c.candidates, 1);
    let t = complexity_table(&ideal, 0, 3, &EnumerationBudget::default()).unwrap();
    assert!(t.cells.iter().all(|c| c.m == 0 && c.value == 0));
}

#[test]
fn unit_ideal_counts_the_unit() {
    let unit = Ideal::parse(Ring::laurent(1), &["1"]).unwrap();
    let t = complexity_table(&unit, 2, 2, &EnumerationBudget::default()).unwrap();
    for c in &t.cells {
        assert!(c.value >= 1);
        assert_eq!(c.value, c.m as usize);
    }
}

#[test]
fn table_is_monotone_and_witnesses_verify() {
    for ideal in [
        x_minus_1(Ring::laurent(1)),
        Ideal::parse(Ring::polynomial(1), &["2", "x1"]).unwrap(),
        Ideal::parse(Ring::laurent(1), &["x1^2 - 1"]).unwrap(),
    ] {
        let t = complexity_table(&ideal, 3, 3, &EnumerationBudget::default()).unwrap();
        assert_eq!(t.cells.len(), 9);
        for c in &t.cells {
            assert!(c.exact);
            for d in &t.cells {
                if c.m <= d.m && c.n <= d.n {
                    assert!(
                        c.value <= d.value,
                        "{ideal}: ({},{}) vs ({},{})",
                        c.m,
                        c.n,
                        d.m,
                        d.n
                    );
                }
            }
            let w = &c.witness;
            assert!(ideal.is_member(w).unwrap());
            assert!(w.norm() <= c.m.into());
            assert!(w.degree().or_zero() <= c.n);
            let v = verify_certificate(&c.certificate, &ideal);
            assert!(v.valid && v.degree_bound_holds);
            assert_eq!(c.certificate.area(), c.value);
            assert_eq!(c.certificate.target(), w);
            // cofactor degrees stay within n + 5D·C
            let cap = c.n + ideal.degree_constant() * c.value as u64;
            assert!(c.certificate.max_cofactor_degree().or_zero() <= cap);
            let again = complexity_value(&ideal, c.m, c.n, &EnumerationBudget::default()).unwrap();
            assert_eq!(&again, c);
        }
    }
}

#[test]
fn sign_and_shift_symmetry() {
    let ideal = x_minus_1(Ring::laurent(1));
    let cfg = SearchConfig::default();
    let (found, _) = members(&ideal, 3, 2, &EnumerationBudget::default()).unwrap();
    for g in found.iter().filter(|g| !g.is_zero()) {
        let a = area_exact(g, &ideal, &cfg).unwrap().area();
        assert_eq!(area_exact(&-g, &ideal, &cfg).unwrap().area(), a);
        for d in [-2i64, 1, 3] {
            let moved = g
                .monomial_mul(&BigInt::from(1), &Exponent::new(vec![d]))
                .unwrap();
            assert_eq!(
                area_exact(&moved, &ideal, &cfg).unwrap().area(),
                a,
                "{g} shifted {d}"
            );
        }
    }
}

#[test]
fn budgets_turn_cells_into_lower_bounds() {
    let ideal = x_minus_1(Ring::laurent(1));
    let tight = EnumerationBudget {
        max_candidates: 5,
        ..EnumerationBudget::default()
    };
    let c = complexity_value(&ideal, 2, 3, &tight).unwrap();
    assert!(!c.exact);
    assert!(c.value <= 6);

    let small_area = EnumerationBudget {
        max_area: 2,
        ..EnumerationBudget::default()
    };
    let c = complexity_value(&ideal, 2, 3, &small_area).unwrap();
    assert!(!c.exact);
    assert!(c.value <= 2);
}

#[test]
fn csv_and_json_mirror_each_other() {
    let ideal = x_minus_1(Ring::polynomial(1));
    let t = complexity_table(&ideal, 2, 2, &EnumerationBudget::default()).unwrap();
    let csv = t.to_csv().unwrap();
    assert!(csv.starts_with("m,n,C,witness,exact,candidates\n"));
    let mut rd = csv::Reader::from_reader(csv.as_bytes());
    let from_csv: Vec<ComplexityRecord> = rd.deserialize().collect::<Result<_, _>>().unwrap();
    let from_json: Vec<ComplexityRecord> = serde_json::from_value(t.to_json()).unwrap();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv, t.records());
    assert!(from_csv.iter().all(|r| !r.witness.is_empty()));
}
