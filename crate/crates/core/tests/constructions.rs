mod common;

use common::build;
use nps_core::family::{expected_nps, theorem_catalog, ExpectationKind, FamilySpec, Fraction};
use nps_core::iso::are_isomorphic;
use nps_core::lattice::counts;
use nps_core::Error;

fn spec(text: &str) -> FamilySpec {
    text.parse().unwrap()
}

fn nps(text: &str) -> usize {
    counts(&build(text)).unwrap().nps
}

#[test]
fn validation() {
    use FamilySpec::*;
    assert!(GeneralG { p: 2, n: 1, q: 3, m: 1, r: 2 }.validate().is_ok());
    let err = GeneralG { p: 2, n: 1, q: 5, m: 1, r: 2 }.validate().unwrap_err();
    assert!(matches!(&err, Error::InvalidFamily(msg) if msg.contains("mod 5")), "{err}");
    assert!(F { n: 1, p: 7, r: 2 }.validate().is_ok());
    assert!(F { n: 1, p: 7, r: 3 }.validate().is_err());
    assert!(F { n: 1, p: 5, r: 2 }.validate().is_err());
    assert!(QuasidihedralM { n: 3, p: 2 }.validate().is_err());
    assert!(QuasidihedralM { n: 3, p: 3 }.validate().is_ok());
    assert!(Semidihedral(8).validate().is_err());
    assert!(GeneralizedQuaternion(4).validate().is_err());
    assert!(GeneralG { p: 4, n: 1, q: 3, m: 1, r: 1 }.validate().is_err());
}

#[test]
fn build_orders() {
    for (text, order) in [
        ("C(9)", 9),
        ("D(10)", 10),
        ("G(r=2;p=2,n=2;q=5,m=1)", 20),
        ("B1(2,3)", 81),
        ("B2(3,2)", 32),
        ("A(3)", 108),
        ("SL(2,3)", 24),
        ("X(2,5)", 90),
    ] {
        assert_eq!(build(text).order(), order, "{text}");
        assert_eq!(spec(text).order(), Some(order as u64));
    }
    assert!(matches!(spec("C(5000)").build(), Err(Error::SizeLimit { .. })));
}

#[test]
fn build_identifications() {
    assert!(are_isomorphic(&build("A(1)"), &build("Alt(4)")).unwrap());
    assert!(are_isomorphic(&build("B2(1,2)"), &build("D(8)")).unwrap());
    let b = build("B1(1,3)");
    assert_eq!((b.order(), b.exponent()), (27, 3));
    assert!(are_isomorphic(&b, &build("M(3)")).unwrap());
}

#[test]
fn presentation_and_explicit_paths_agree() {
    for text in ["Q(8)", "Q(32)", "M(3)", "M(5)", "B1(1,3)", "B1(2,2)", "B1(2,3)"] {
        let s = spec(text);
        assert!(s.built_from_presentation(), "{text}");
        let a = s.build().unwrap();
        let b = s.build_explicit().unwrap();
        assert!(are_isomorphic(&a, &b).unwrap(), "{text}");
    }
}

#[test]
fn expected_values() {
    let s16 = expected_nps(&spec("S(16)")).unwrap();
    assert_eq!((s16.kind, s16.value), (ExpectationKind::Exact, Fraction::integer(11)));
    let g = expected_nps(&spec("G(r=2;p=2,n=2;q=5,m=1)")).unwrap();
    assert_eq!((g.kind, g.value), (ExpectationKind::Exact, Fraction::integer(10)));
    let m3 = expected_nps(&spec("M(3)")).unwrap();
    assert_eq!((m3.kind, m3.value), (ExpectationKind::Exact, Fraction::integer(17)));
    let lb = expected_nps(&spec("Q(8)xC(2,2)")).unwrap();
    assert_eq!((lb.kind, lb.value), (ExpectationKind::LowerBound, Fraction::integer(16)));
    let rank_two = expected_nps(&spec("C(3,3)")).unwrap();
    assert_eq!((rank_two.kind, rank_two.value), (ExpectationKind::UnderReview, Fraction::new(11, 2)));
    assert!(matches!(expected_nps(&spec("Sym(5)")), Err(Error::NoCatalogEntry(_))));
}

#[test]
fn catalog_transcription() {
    assert_eq!(theorem_catalog(0).len(), 1);
    assert_eq!(theorem_catalog(0)[0].minimal_instance(), FamilySpec::Cyclic(1));
    assert!(theorem_catalog(1).is_empty() && theorem_catalog(2).is_empty());
    let eleven: Vec<String> = theorem_catalog(11).iter().map(|m| m.minimal_instance().to_string()).collect();
    assert_eq!(
        eleven,
        ["C(2,32)", "C(5,25)", "S(16)", "M(6,2)", "M(3,5)", "SL(2,3)", "G(1,11)", "G(r=3;p=5,n=1;q=11,m=1)"]
    );
    // Side-condition primes take their smallest admissible values.
    let twelve: Vec<String> = theorem_catalog(12).iter().map(|m| m.minimal_instance().to_string()).collect();
    assert!(twelve.contains(&"Q(8)xC(35)".to_string()), "{twelve:?}");
    assert!(twelve.contains(&"G(1,3)xC(35)".to_string()), "{twelve:?}");
}

#[test]
fn small_metacyclic_identifications() {
    let s3 = build("Sym(3)");
    assert!(are_isomorphic(&build("G(1,3)"), &s3).unwrap());
    assert!(are_isomorphic(&build("D(6)"), &s3).unwrap());
    for (g, a) in [
        ("G(r=1;p=2,n=2;q=3,m=1)", "C(4,3)"),
        ("G(r=1;p=3,n=1;q=3,m=2)", "C(3,9)"),
        ("G(r=1;p=5,n=1;q=2,m=3)", "C(5,8)"),
    ] {
        assert!(are_isomorphic(&build(g), &build(a)).unwrap(), "{g}");
    }
}

/// For odd `p`, `G^(r)_{p,n;p,m}` has as many nonpower subgroups as
/// `C_{p^n} x C_{p^m}`. With `m = 1` only `r = 1` is valid, so the
/// nonabelian checks take `m = 2` and `r = 1 + p`.
#[test]
fn same_prime_metacyclic_matches_abelian() {
    for (p, n, m) in [(3u64, 1u32, 1u32), (3, 2, 1), (5, 1, 1)] {
        for r in 2..(p.pow(m) as i64) {
            assert!(FamilySpec::GeneralG { p, n, q: p, m, r }.validate().is_err(), "r = {r}");
        }
    }
    for (p, n, m) in [(3u64, 1u32, 1u32), (3, 2, 1), (5, 1, 1), (3, 1, 2), (3, 2, 2), (5, 1, 2), (3, 3, 2)] {
        let r = if m == 1 { 1 } else { 1 + p as i64 };
        let g = FamilySpec::GeneralG { p, n, q: p, m, r }.build().unwrap();
        let a = FamilySpec::Abelian(vec![p.pow(n), p.pow(m)]).build().unwrap();
        assert_eq!(counts(&g).unwrap().nps, counts(&a).unwrap().nps, "p={p} n={n} m={m}");
        if m > 1 {
            assert!(!g.is_abelian());
        }
    }
}

#[test]
fn values_independent_of_n() {
    for n in 1..=3 {
        assert_eq!(nps(&format!("G({n},5)")), 5);
        assert_eq!(nps(&format!("G({n},3)")), 3);
        assert_eq!(nps(&format!("G({n},9)")), 12);
        assert_eq!(nps(&format!("F({n},7)")), 7);
    }
}

#[test]
fn syntax_round_trip() {
    for text in [
        "Q(8)xC(2)",
        "G(r=-1;p=2,n=2;q=3,m=2)",
        "M(4,3)",
        "B2(2,2)",
        "A(2)",
        "X(2,3)",
        "C(2,2,3)",
        "Sym(3)xC(3)",
        "C3:Q8",
        "Hol(7)",
        "F(2,13)",
    ] {
        let s = spec(text);
        let again: FamilySpec = s.to_string().parse().unwrap();
        assert_eq!(s, again, "{text}");
    }
    assert!(matches!("Q(8)x".parse::<FamilySpec>(), Err(Error::Syntax { .. })));
    assert!(matches!("Foo(3)".parse::<FamilySpec>(), Err(Error::InvalidFamily(_))));
}
