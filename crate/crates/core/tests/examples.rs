macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(ring_arithmetic, "ring_arithmetic.rs");
example!(membership, "membership.rs");
example!(minimal_area, "minimal_area.rs");
example!(generating_sets, "generating_sets.rs");
example!(complexity_table, "complexity_table.rs");
example!(word_problem, "word_problem.rs");
example!(dehn_datapoints, "dehn_datapoints.rs");

#[test]
fn ring_arithmetic_cancels() {
    let out = ring_arithmetic::run_example().unwrap();
    assert!(out.contains("difference with itself: 0"), "{out}");
}

#[test]
fn membership_reports_both_outcomes() {
    let out = membership::run_example().unwrap();
    assert!(out.contains("6*x1*x2 is a member"), "{out}");
    assert!(out.contains("x1 + 1 is not a member"), "{out}");
}

#[test]
fn minimal_area_certificate_checks() {
    let out = minimal_area::run_example().unwrap();
    assert!(
        out.starts_with("area 4\n") && out.contains("valid true"),
        "{out}"
    );
}

#[test]
fn generating_sets_convert() {
    let out = generating_sets::run_example().unwrap();
    assert!(out.contains("converted 4 (valid true)"), "{out}");
}

#[test]
fn complexity_table_is_csv() {
    let out = complexity_table::run_example().unwrap();
    assert!(out.starts_with("m,n,C,witness,exact,candidates\n"));
    assert!(out.contains("2,3,3,x1^3 - 1,true,"), "{out}");
}

#[test]
fn word_problem_decides_triviality() {
    let out = word_problem::run_example().unwrap();
    assert!(
        out.contains("x1 - x2: x2 A x1 X2 a X1 (length 6) trivial true"),
        "{out}"
    );
    assert!(out.contains("trivial false"), "{out}");
}

#[test]
fn dehn_datapoints_are_listed() {
    let out = dehn_datapoints::run_example().unwrap();
    assert_eq!(out.lines().count(), 3, "{out}");
}
