use num_rational::BigRational;
use schur_core::algebra::{parse_monomial, SchurAlgebra};
use schur_core::basisgen::*;
use schur_core::ring::SchurScalar;
use schur_core::rootdata::RootOrder;
use schur_core::scalars::RationalFunction;

const GRID: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

fn check_all_forms<S: SchurScalar>(n: usize, d: usize) {
    let alg = SchurAlgebra::<S>::new(n, d).unwrap();
    for side in [Side::Plus, Side::Minus] {
        for placement in [Placement::Left, Placement::Middle, Placement::Right] {
            let b = enumerate_basis(n, d, side, placement, &BasisOrders::default()).unwrap();
            let r = verify_basis(&b.monomials(), &alg).unwrap();
            assert!(r.pass(), "{n} {d} {side:?} {placement:?} {r:?}");
        }
    }
}

#[test]
fn both_forms_are_bases_classically() {
    for (n, d) in GRID {
        check_all_forms::<BigRational>(n, d);
    }
}

#[test]
fn both_forms_are_bases_quantumly() {
    for (n, d) in GRID {
        check_all_forms::<RationalFunction>(n, d);
    }
}

#[test]
fn placements_evaluate_equally() {
    let alg = SchurAlgebra::<RationalFunction>::new(3, 3).unwrap();
    for side in [Side::Plus, Side::Minus] {
        let b = enumerate_basis(3, 3, side, Placement::Right, &BasisOrders::default()).unwrap();
        for e in &b.elements {
            let ops: Vec<_> = [Placement::Left, Placement::Middle, Placement::Right]
                .iter()
                .map(|&p| alg.evaluate(&e.monomial(&b.orders, p).unwrap()).unwrap())
                .collect();
            assert!(!ops[0].is_zero());
            assert_eq!(ops[0], ops[1]);
            assert_eq!(ops[1], ops[2]);
        }
    }
}

#[test]
fn other_orders_still_give_bases() {
    let alg = SchurAlgebra::<RationalFunction>::new(3, 3).unwrap();
    let custom: RootOrder = "custom:13,12,23".parse().unwrap();
    for orders in [
        BasisOrders::uniform(RootOrder::Box),
        BasisOrders::uniform(custom),
        BasisOrders::uniform(RootOrder::ReverseBox),
    ] {
        let b = enumerate_basis(3, 3, Side::Plus, Placement::Right, &orders).unwrap();
        assert!(verify_basis(&b.monomials(), &alg).unwrap().pass());
    }
}

#[test]
fn coordinates_of_small_examples() {
    let alg = SchurAlgebra::<BigRational>::new(2, 2).unwrap();
    let b = enumerate_basis(2, 2, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
    let solver = BasisSolver::new(&alg, b).unwrap();
    let id = solver.express(&alg.identity()).unwrap();
    assert_eq!(id.coords.len(), 3);
    for (k, c) in &id.coords {
        assert!(solver.basis.elements[*k].degree() == 0);
        assert_eq!(c, &BigRational::from_integer(1.into()));
    }
    let m = parse_monomial(
        "F(2,1) E(1,2) 1[1,1]",
        2,
        schur_core::scalars::ScalarRing::Classical,
    )
    .unwrap();
    let v = solver.express(&alg.evaluate(&m).unwrap()).unwrap();
    assert_eq!(v.coords.len(), 1);
    let (&k, c) = v.coords.iter().next().unwrap();
    assert_eq!(c, &BigRational::from_integer(1.into()));
    assert_eq!(solver.basis.monomial(k).to_string(), "E(1,2) F(2,1) 1[1,1]");
    for k in 0..solver.basis.len() {
        let u = solver.express(solver.operator(k)).unwrap();
        assert!(u.integral && u.coords.len() == 1 && u.coords.contains_key(&k));
    }
}

#[test]
fn card_bijection_round_trips() {
    for (n, d) in GRID {
        let b =
            enumerate_basis(n, d, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
        let p = card_index_set(n, d);
        assert_eq!(p.len(), b.len());
        let mut seen = std::collections::HashSet::new();
        for t in &p {
            let e = card_bijection(n, d, t).unwrap();
            assert!(b.position(&e).is_some(), "{t:?}");
            assert_eq!(&card_bijection_inverse(&e).unwrap(), t);
            seen.insert(e);
        }
        assert_eq!(seen.len(), b.len());
    }
}
