use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_core::algebra::{parse_monomial, random_monomial, SchurAlgebra};
use schur_core::basisgen::BasisSolver;
use schur_core::ring::SchurScalar;
use schur_core::scalars::RationalFunction;
use schur_core::straighten::Straightener;

fn oracle<S: SchurScalar>(n: usize, d: usize, samples: usize, seed: u64) {
    let alg = SchurAlgebra::<S>::new(n, d).unwrap();
    let st = Straightener::<S>::new(n, d).unwrap();
    let solver = BasisSolver::new(&alg, st.basis.clone()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut non_strict = 0;
    for _ in 0..samples {
        let m = random_monomial(&mut rng, n, d, S::RING, 6);
        let got = st.straighten(&m).unwrap_or_else(|e| panic!("{m}: {e}"));
        let want = solver.express(&alg.evaluate(&m).unwrap()).unwrap();
        assert_eq!(got.coords, want, "{m}");
        assert!(got.coords.integral, "{m}");
        non_strict += got.stats.non_strict_steps;
    }
    println!("({n},{d}) {}: non-strict steps {non_strict}", S::RING);
}

#[test]
fn matches_linear_algebra_classically() {
    for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        oracle::<BigRational>(n, d, 200, 7);
    }
}

#[test]
fn matches_linear_algebra_quantumly() {
    for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        oracle::<RationalFunction>(n, d, 200, 11);
    }
}

#[test]
fn reversed_pair_leaves_a_cartan_correction() {
    use schur_core::scalars::{quantum_integer, LaurentPolynomial};
    let st = Straightener::<RationalFunction>::new(2, 2).unwrap();
    let m = parse_monomial("F(2,1) E(1,2) 1[0,2]", 2, RationalFunction::RING).unwrap();
    let out = st.straighten(&m).unwrap();
    assert_eq!(out.coords.coords.len(), 1);
    let (&k, c) = out.coords.coords.iter().next().unwrap();
    assert_eq!(st.basis.monomial(k).to_string(), "1[0,2]");
    let two: LaurentPolynomial = quantum_integer(2);
    assert_eq!(*c, RationalFunction::from_laurent(two));
}

#[test]
fn targets_other_sides_and_orders() {
    use schur_core::basisgen::{enumerate_basis, BasisOrders, Placement, Side};
    use schur_core::rootdata::{Root, RootOrder};
    let lex = RootOrder::Custom(vec![Root::new(1, 2), Root::new(1, 3), Root::new(2, 3)]);
    let (n, d) = (3, 3);
    let alg = SchurAlgebra::<RationalFunction>::new(n, d).unwrap();
    for (side, orders) in [
        (Side::Minus, BasisOrders::default()),
        (Side::Plus, BasisOrders::uniform(lex.clone())),
        (Side::Minus, BasisOrders::uniform(lex)),
    ] {
        let basis = enumerate_basis(n, d, side, Placement::Middle, &orders).unwrap();
        let st = Straightener::<RationalFunction>::with_basis(basis.clone()).unwrap();
        let solver = BasisSolver::new(&alg, basis).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let m = random_monomial(&mut rng, n, d, RationalFunction::RING, 6);
            let got = st.straighten(&m).unwrap();
            assert_eq!(
                got.coords,
                solver.express(&alg.evaluate(&m).unwrap()).unwrap(),
                "{m}"
            );
        }
    }
}

#[test]
fn matches_linear_algebra_in_rank_four() {
    oracle::<BigRational>(4, 2, 60, 5);
    oracle::<RationalFunction>(4, 2, 60, 5);
}
