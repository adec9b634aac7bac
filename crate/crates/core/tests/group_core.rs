mod common;

use common::build;
use nps_core::census::export_entry;
use nps_core::group::{direct_product, quotient, semidirect_product, DEFAULT_ORDER_CAP};
use nps_core::iso::are_isomorphic;
use nps_core::lattice::{all_subgroups, counts};
use nps_core::{Error, Group};

fn sym3() -> Group {
    Group::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
}

fn q8() -> Group {
    build("Q(8)")
}

#[test]
fn from_generators() {
    let s3 = sym3();
    assert_eq!(s3.order(), 6);
    assert!(s3.check_axioms());
    assert_eq!(Group::from_permutations(1, &[]).unwrap().order(), 1);

    let regular = export_entry("Q8", &q8());
    assert_eq!(regular.degree, 8);
    let g = regular.build(600).unwrap();
    assert_eq!(g.order(), 8);
    assert!(are_isomorphic(&g, &q8()).unwrap());
}

#[test]
fn from_generators_errors() {
    assert!(matches!(Group::from_permutations(3, &[vec![0, 0, 1]]), Err(Error::InvalidPermutation(_))));
    assert!(matches!(Group::from_permutations(3, &[vec![0, 1]]), Err(Error::InvalidPermutation(_))));
    let cycle: Vec<u32> = (1..8).chain([0]).collect();
    let swap: Vec<u32> = [1, 0].into_iter().chain(2..8).collect();
    assert!(matches!(Group::from_permutations_capped(8, &[cycle, swap], 1000), Err(Error::SizeLimit { .. })));
}

#[test]
fn breadth_first_numbering() {
    let g = sym3();
    assert_eq!(g.generators(), &[1, 2]);
    // Identity first, then the generators in input order.
    assert_eq!(g.mul(0, 1), 1);
    assert_eq!(g.element_order(1).unwrap(), 3);
    assert_eq!(g.element_order(2).unwrap(), 2);
}

#[test]
fn element_orders() {
    let c6 = Group::cyclic(6);
    assert_eq!(c6.element_order(0).unwrap(), 1);
    assert_eq!(c6.element_order(1).unwrap(), 6);
    let q = q8();
    let involutions: Vec<usize> = (0..8).filter(|&x| q.element_order(x).unwrap() == 2).collect();
    assert_eq!(involutions.len(), 1);
    assert!(matches!(q.element_order(8), Err(Error::OutOfRange { .. })));
}

#[test]
fn exponents() {
    assert_eq!(build("C(2,2)").exponent(), 2);
    assert_eq!(q8().exponent(), 4);
    assert_eq!(sym3().exponent(), 6);
}

#[test]
fn centers() {
    let a = build("C(2,6)");
    assert_eq!(a.center().size(), a.order());
    assert!(sym3().center().is_trivial());
    assert_eq!(q8().center().size(), 2);
}

#[test]
fn derived_subgroups() {
    assert!(build("C(4,2)").derived_subgroup().is_trivial());
    assert_eq!(sym3().derived_subgroup().size(), 3);
    assert_eq!(q8().derived_subgroup().size(), 2);
}

#[test]
fn direct_products() {
    let c2 = Group::cyclic(2);
    let v4 = direct_product(&c2, &c2, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!((v4.order(), v4.exponent()), (4, 2));
    let q8c2 = direct_product(&q8(), &c2, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(q8c2.order(), 16);
    assert_eq!(all_subgroups(&q8c2).unwrap().len(), 19);
    let g13c3 = direct_product(&build("G(1,3)"), &Group::cyclic(3), DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(g13c3.order(), 18);
    assert_eq!(counts(&g13c3).unwrap().nps, 10);
    assert!(matches!(direct_product(&Group::cyclic(50), &Group::cyclic(50), 600), Err(Error::SizeLimit { .. })));
}

#[test]
fn semidirect_products() {
    let c3 = Group::cyclic(3);
    let c2 = Group::cyclic(2);
    let identity: Vec<u32> = (0..3).collect();
    let trivial = semidirect_product(&c3, &c2, &[identity], 600).unwrap();
    let direct = direct_product(&c3, &c2, 600).unwrap();
    assert!((0..6).all(|x| (0..6).all(|y| trivial.mul(x, y) == direct.mul(x, y))));

    let s3 = semidirect_product(&c3, &c2, &[vec![0, 2, 1]], 600).unwrap();
    assert!(are_isomorphic(&s3, &sym3()).unwrap());
    assert_eq!(counts(&s3).unwrap().nps, 3);

    // x -> 3x generates Aut(C7).
    let times3: Vec<u32> = (0..7).map(|x| (3 * x) % 7).collect();
    let hol7 = semidirect_product(&Group::cyclic(7), &Group::cyclic(6), &[times3], 600).unwrap();
    assert_eq!(hol7.order(), 42);
    assert_eq!(counts(&hol7).unwrap().nps, 21);
}

#[test]
fn semidirect_errors() {
    let c3 = Group::cyclic(3);
    assert!(matches!(
        semidirect_product(&c3, &Group::cyclic(2), &[vec![1, 2, 0]], 600),
        Err(Error::NotAutomorphism(_))
    ));
    // Inversion has order 2, so it cannot be the image of a generator of C3.
    let c5 = Group::cyclic(5);
    let inversion: Vec<u32> = (0..5).map(|x| (5 - x) % 5).collect();
    assert!(matches!(semidirect_product(&c5, &c3, &[inversion], 600), Err(Error::NotHomomorphism)));
}

#[test]
fn quotients() {
    let q = q8();
    let whole = nps_core::Subgroup::whole(&q);
    assert_eq!(quotient(&q, &whole).unwrap().0.order(), 1);

    let (v, proj) = quotient(&q, &q.center()).unwrap();
    assert!(are_isomorphic(&v, &build("C(2,2)")).unwrap());
    assert!(proj.is_homomorphism(&q, &v));

    let sl = build("SL(2,3)");
    let (a4, _) = quotient(&sl, &sl.center()).unwrap();
    assert_eq!(a4.order(), 12);
    assert_eq!(counts(&a4).unwrap().nps, 7);
    assert!(are_isomorphic(&a4, &build("Alt(4)")).unwrap());

    let s3 = sym3();
    let two = s3.subgroup_generated([2]);
    assert!(matches!(quotient(&s3, &two), Err(Error::NotNormal)));
}

#[test]
fn constructed_groups_satisfy_axioms() {
    for text in [
        "D(12)", "Q(32)", "S(64)", "M(5,2)", "M(5)", "B1(2,3)", "B2(2,2)", "A(2)", "SL(2,3)", "C3:Q8", "X(2,5)",
        "Sym(5)", "Alt(5)",
    ] {
        let g = build(text);
        assert!(g.check_axioms(), "{text}");
    }
}
