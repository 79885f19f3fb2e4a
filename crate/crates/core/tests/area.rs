use ideal_complexity::area::{
    area_brute_oracle, conversion_constant, convert_representation, degree_radius,
    verify_certificate,
};
use ideal_complexity::{
    area_exact, AreaCertificate, CertEntry, Error, Exponent, Ideal, Poly, Pruning, Ring,
    SearchConfig, Sign,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn laurent_x_minus_1() -> Ideal {
    Ideal::parse(Ring::laurent(1), &["x1 - 1"]).unwrap()
}

fn two_x() -> Ideal {
    Ideal::parse(Ring::polynomial(1), &["2", "x1"]).unwrap()
}

fn p(s: &str, i: &Ideal) -> Poly {
    Poly::parse(s, i.ring()).unwrap()
}

fn generous_radius(g: &Poly, a: usize, i: &Ideal) -> u64 {
    degree_radius(g, a, i) + 2 * i.max_degree()
}

#[test]
fn generator_itself_has_area_one() {
    let i = laurent_x_minus_1();
    let c = area_exact(&p("x1 - 1", &i), &i, &SearchConfig::default()).unwrap();
    assert_eq!(c.area(), 1);
    assert_eq!(
        c.entries(),
        &[CertEntry {
            generator: 0,
            shift: Exponent::zero(1),
            sign: Sign::Plus
        }]
    );
}

#[test]
fn small_examples_match_oracle() {
    let i = laurent_x_minus_1();
    let g = p("x1^2 - 1", &i);
    let c = area_exact(&g, &i, &SearchConfig::default()).unwrap();
    assert_eq!(c.area(), 2);
    let o = area_brute_oracle(&g, &i, 2, generous_radius(&g, 2, &i))
        .unwrap()
        .unwrap();
    assert_eq!(o.area(), 2);

    let j = two_x();
    let g = p("4 + 3*x1", &j);
    let c = area_exact(&g, &j, &SearchConfig::default()).unwrap();
    assert_eq!(c.area(), 4);
    let hs = c.cofactors(&j).unwrap();
    assert_eq!(hs, vec![p("x1 + 2", &j), p("1", &j)]);
    let o = area_brute_oracle(&g, &j, 5, generous_radius(&g, 5, &j))
        .unwrap()
        .unwrap();
    assert_eq!(o.area(), 4);
}

#[test]
fn oracle_examples() {
    let i = laurent_x_minus_1();
    let o = area_brute_oracle(&p("x1^3 - 1", &i), &i, 4, 8)
        .unwrap()
        .unwrap();
    assert_eq!(o.area(), 3);
    assert!(area_brute_oracle(&p("x1^3 - 1", &i), &i, 2, 8)
        .unwrap()
        .is_none());
    assert!(area_brute_oracle(&p("1", &i), &i, 3, 4).unwrap().is_none());
    let z = area_brute_oracle(&Poly::zero(i.ring()), &i, 3, 4)
        .unwrap()
        .unwrap();
    assert_eq!(z.area(), 0);
}

#[test]
fn non_members_fail_fast() {
    let i = laurent_x_minus_1();
    assert_eq!(
        area_exact(&p("1", &i), &i, &SearchConfig::default()),
        Err(Error::NotMember)
    );
    assert!(matches!(
        area_exact(
            &Poly::one(Ring::polynomial(1)),
            &i,
            &SearchConfig::default()
        ),
        Err(Error::ModeMismatch(_))
    ));
}

#[test]
fn budget_exceeded_below_true_area() {
    let i = laurent_x_minus_1();
    let r = area_exact(&p("x1^5 - 1", &i), &i, &SearchConfig::with_max_area(3));
    assert!(matches!(r, Err(Error::BudgetExceeded(_))));
}

#[test]
fn verification_reports() {
    let i = laurent_x_minus_1();
    let g = p("x1^2 - 1", &i);
    let c = area_exact(&g, &i, &SearchConfig::default()).unwrap();
    let v = verify_certificate(&c, &i);
    assert!(v.valid && v.degree_bound_holds);
    assert_eq!(v.degree_limit, 2 + 5 * 2);

    let mut tampered: Vec<CertEntry> = c.entries().to_vec();
    tampered[0].sign = tampered[0].sign.flip();
    let t = AreaCertificate::new(g.clone(), tampered);
    assert!(!verify_certificate(&t, &i).valid);

    let e = AreaCertificate::new(Poly::zero(i.ring()), []);
    assert!(verify_certificate(&e, &i).valid);
}

#[test]
fn canonical_form_cancels_opposite_pairs() {
    let i = laurent_x_minus_1();
    let d = Exponent::new(vec![3]);
    let c = AreaCertificate::new(
        p("x1 - 1", &i),
        [
            CertEntry {
                generator: 0,
                shift: d.clone(),
                sign: Sign::Plus,
            },
            CertEntry {
                generator: 0,
                shift: Exponent::zero(1),
                sign: Sign::Plus,
            },
            CertEntry {
                generator: 0,
                shift: d,
                sign: Sign::Minus,
            },
        ],
    );
    assert_eq!(c.area(), 1);
    assert!(verify_certificate(&c, &i).valid);
}

#[test]
fn text_round_trip() {
    let j = Ideal::parse(Ring::laurent(2), &["x1 - x2", "2*x1*x2^-1 + 1"]).unwrap();
    let g = p("x1^2 - x1*x2 + 4*x1*x2^-1 + 2", &j);
    let c = area_exact(&g, &j, &SearchConfig::default()).unwrap();
    let text = c.to_text();
    assert!(text.starts_with("target: "));
    let back = AreaCertificate::parse_text(&text, j.ring()).unwrap();
    assert_eq!(back, c);
    assert!(AreaCertificate::parse_text("1 + 0", j.ring()).is_err());
    assert!(AreaCertificate::parse_text("target: x1\n0 + 0 0", j.ring()).is_err());
}

#[test]
fn ties_break_to_least_certificate() {
    // x1 - x1^-1 = (1 + x1^-1)(x1 - 1): unique, so the order is forced
    let i = laurent_x_minus_1();
    let c = area_exact(&p("x1 - x1^-1", &i), &i, &SearchConfig::default()).unwrap();
    assert_eq!(c.area(), 2);
    let shifts: Vec<i64> = c.entries().iter().map(|e| e.shift.entries()[0]).collect();
    assert_eq!(shifts, vec![0, -1]);

    // x1 + 4 in (2, x1, x1 + 2): f1 + f3 is the only area-2 certificate
    let k = Ideal::parse(Ring::polynomial(1), &["2", "x1", "x1 + 2"]).unwrap();
    let c = area_exact(&p("x1 + 4", &k), &k, &SearchConfig::default()).unwrap();
    assert_eq!(c.area(), 2);
    let again = area_exact(&p("x1 + 4", &k), &k, &SearchConfig::default()).unwrap();
    assert_eq!(c, again);
    assert_eq!(
        c.entries().iter().map(|e| e.generator).collect::<Vec<_>>(),
        vec![0, 2]
    );
}

#[test]
fn conversion_examples() {
    let l = Ring::laurent(1);
    let f = laurent_x_minus_1();
    let f2 = Ideal::parse(l, &["x1^2 - x1"]).unwrap();
    let g = p("x1^2 - 1", &f);
    let c = area_exact(&g, &f, &SearchConfig::default()).unwrap();
    let m = vec![vec![Poly::parse("x1^-1", l).unwrap()]];
    let c2 = convert_representation(&c, &f, &f2, &m).unwrap();
    assert!(verify_certificate(&c2, &f2).valid);
    assert!(c2.area() <= 2);
    assert_eq!(conversion_constant(&m), BigUint::from(1u32));

    let id = vec![vec![Poly::one(l)]];
    assert_eq!(convert_representation(&c, &f, &f, &id).unwrap(), c);

    let a = two_x();
    let b = Ideal::parse(Ring::polynomial(1), &["2", "x1", "x1 + 2"]).unwrap();
    let r = Ring::polynomial(1);
    let emb = vec![
        vec![Poly::one(r), Poly::zero(r), Poly::zero(r)],
        vec![Poly::zero(r), Poly::one(r), Poly::zero(r)],
    ];
    let g = p("4 + 3*x1", &a);
    let c = area_exact(&g, &a, &SearchConfig::default()).unwrap();
    let c2 = convert_representation(&c, &a, &b, &emb).unwrap();
    assert_eq!(c2.entries(), c.entries());

    let bad = vec![vec![Poly::one(l)]];
    assert!(matches!(
        convert_representation(&c, &f, &f2, &bad),
        Err(Error::BadConversionMatrix(_))
    ));
}

fn tiny_suite() -> Vec<(Ideal, Vec<&'static str>)> {
    vec![
        (
            laurent_x_minus_1(),
            vec![
                "x1^2 - 1",
                "x1^3 - 1",
                "x1 - x1^-1",
                "2*x1 - 2",
                "x1^2 - 2*x1 + 1",
            ],
        ),
        (two_x(), vec!["4 + 3*x1", "x1^2 + 2", "6", "2*x1 + x1^2"]),
        (
            Ideal::parse(Ring::polynomial(2), &["x1 - x2", "x2 + 1"]).unwrap(),
            vec!["x1 + 1", "x1^2 - x2^2", "x1*x2 + x1"],
        ),
        (
            Ideal::parse(Ring::laurent(2), &["x1 - x2"]).unwrap(),
            vec!["x1^2 - x2^2", "x1*x2^-1 - 1"],
        ),
    ]
}

#[test]
fn exact_search_matches_oracle_on_tiny_suite() {
    for (ideal, gs) in tiny_suite() {
        for s in gs {
            let g = p(s, &ideal);
            let c = area_exact(&g, &ideal, &SearchConfig::default()).unwrap();
            let a = c.area();
            let o = area_brute_oracle(&g, &ideal, a, generous_radius(&g, a, &ideal))
                .unwrap()
                .unwrap_or_else(|| panic!("oracle found nothing for {s} in {ideal}"));
            assert_eq!(o.area(), a, "{s} in {ideal}");
            if a > 1 {
                assert!(
                    area_brute_oracle(&g, &ideal, a - 1, generous_radius(&g, a, &ideal))
                        .unwrap()
                        .is_none(),
                    "{s} in {ideal}"
                );
            }
            for cert in [&c, &o] {
                let v = verify_certificate(cert, &ideal);
                assert!(v.valid && v.degree_bound_holds, "{s} in {ideal}");
            }
        }
    }
}

#[test]
fn connectivity_pruning_never_changes_the_area() {
    let cfg = SearchConfig {
        pruning: Pruning::Connectivity,
        ..SearchConfig::default()
    };
    for (ideal, gs) in tiny_suite() {
        for s in gs {
            let g = p(s, &ideal);
            let a = area_exact(&g, &ideal, &SearchConfig::default()).unwrap();
            let b = area_exact(&g, &ideal, &cfg).unwrap();
            assert_eq!(a, b, "{s} in {ideal}");
        }
    }
}

fn small_certificate(ideal: &Ideal) -> impl Strategy<Value = Vec<CertEntry>> {
    let s = ideal.len();
    let laurent = ideal.ring().mode == ideal_complexity::Mode::Laurent;
    let lo = if laurent { -2i64 } else { 0 };
    prop::collection::vec((0..s, lo..=2i64, any::<bool>()), 0..=3).prop_map(|v| {
        v.into_iter()
            .map(|(generator, d, plus)| CertEntry {
                generator,
                shift: Exponent::new(vec![d]),
                sign: if plus { Sign::Plus } else { Sign::Minus },
            })
            .collect()
    })
}

fn element_of(entries: &[CertEntry], ideal: &Ideal) -> Poly {
    let c = AreaCertificate::new(Poly::zero(ideal.ring()), entries.to_vec());
    c.expand(ideal).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn area_is_subadditive(a in small_certificate(&two_x()), b in small_certificate(&two_x())) {
        let ideal = two_x();
        let (g1, g2) = (element_of(&a, &ideal), element_of(&b, &ideal));
        let cfg = SearchConfig::default();
        let area = |g: &Poly| area_exact(g, &ideal, &cfg).unwrap().area();
        prop_assert!(area(&(&g1 + &g2)) <= area(&g1) + area(&g2));
        prop_assert!(area(&g1) <= AreaCertificate::new(g1.clone(), a).area());
    }

    #[test]
    fn unit_monomials_preserve_area(a in small_certificate(&laurent_x_minus_1()), d in -3i64..=3, neg in any::<bool>()) {
        let ideal = laurent_x_minus_1();
        let g = element_of(&a, &ideal);
        let c = if neg { -1 } else { 1 };
        let moved = g.monomial_mul(&c.into(), &Exponent::new(vec![d])).unwrap();
        let cfg = SearchConfig::default();
        prop_assert_eq!(
            area_exact(&g, &ideal, &cfg).unwrap().area(),
            area_exact(&moved, &ideal, &cfg).unwrap().area()
        );
    }

    #[test]
    fn deepening_never_exceeds_a_known_certificate(a in small_certificate(&laurent_x_minus_1())) {
        let ideal = laurent_x_minus_1();
        let known = AreaCertificate::new(element_of(&a, &ideal), a);
        let found = area_exact(known.target(), &ideal, &SearchConfig::default()).unwrap();
        prop_assert!(found.area() <= known.area());
        prop_assert!(verify_certificate(&found, &ideal).valid);
    }
}

#[test]
fn generating_set_sandwich() {
    // F = {x-1} against F' = {x^2-x} in Z[x^±], and {2,x} against {2,x,x+2} in Z[x]
    let l = Ring::laurent(1);
    let f = laurent_x_minus_1();
    let f2 = Ideal::parse(l, &["x1^2 - x1"]).unwrap();
    let to_f2 = vec![vec![Poly::parse("x1^-1", l).unwrap()]];
    let to_f = vec![vec![Poly::parse("x1", l).unwrap()]];
    check_sandwich(
        &f,
        &f2,
        &to_f2,
        &to_f,
        &["x1^2 - 1", "x1^3 - x1", "x1 - x1^-1"],
    );

    let r = Ring::polynomial(1);
    let a = two_x();
    let b = Ideal::parse(r, &["2", "x1", "x1 + 2"]).unwrap();
    let emb = vec![
        vec![Poly::one(r), Poly::zero(r), Poly::zero(r)],
        vec![Poly::zero(r), Poly::one(r), Poly::zero(r)],
    ];
    let back = vec![
        vec![Poly::one(r), Poly::zero(r)],
        vec![Poly::zero(r), Poly::one(r)],
        vec![Poly::one(r), Poly::one(r)],
    ];
    check_sandwich(&a, &b, &emb, &back, &["4 + 3*x1", "x1 + 4", "x1^2 + 2"]);
}

fn check_sandwich(f: &Ideal, g: &Ideal, fg: &[Vec<Poly>], gf: &[Vec<Poly>], elems: &[&str]) {
    let cfg = SearchConfig::default();
    let (l, c) = (g.len(), conversion_constant(fg));
    let (s, c2) = (f.len(), conversion_constant(gf));
    for e in elems {
        let x = p(e, f);
        let af = area_exact(&x, f, &cfg).unwrap();
        let ag = area_exact(&x, g, &cfg).unwrap();
        let conv = convert_representation(&af, f, g, fg).unwrap();
        assert!(verify_certificate(&conv, g).valid);
        let (af, ag) = (BigUint::from(af.area()), BigUint::from(ag.area()));
        assert!(ag <= BigUint::from(l) * &c * &af, "{e}");
        assert!(af <= BigUint::from(s) * &c2 * &ag, "{e}");
    }
}
