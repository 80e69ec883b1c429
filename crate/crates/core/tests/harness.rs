use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_core::algebra::SchurAlgebra;
use schur_core::basisgen::{enumerate_basis, BasisOrders, ConjectureKind, Placement, Side};
use schur_core::harness::{
    conjecture_report, perturbed_generators, specialization_check, structure_constants,
    verify_idempotent_presentation, verify_presentation, verify_presentation_on, Membership,
};
use schur_core::ring::SchurScalar;
use schur_core::scalars::RationalFunction;

const GRID: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

fn presentations<S: SchurScalar>() {
    for (n, d) in GRID {
        let r = verify_presentation::<S>(n, d).unwrap();
        assert!(r.pass(), "{n},{d}: {:?}", r.failures().collect::<Vec<_>>());
        let r = verify_idempotent_presentation::<S>(n, d).unwrap();
        assert!(r.pass(), "{n},{d}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn presentations_hold_classically() {
    presentations::<BigRational>();
}

#[test]
fn presentations_hold_quantumly() {
    presentations::<RationalFunction>();
}

#[test]
fn perturbed_cartan_breaks_the_ef_commutator() {
    let alg = SchurAlgebra::<BigRational>::new(2, 2).unwrap();
    let bad = SchurAlgebra::from_generators(perturbed_generators(alg.generators()));
    let r = verify_presentation_on(&bad).unwrap();
    let ef = r
        .relations
        .iter()
        .find(|c| c.id == "ef-commutator")
        .unwrap();
    assert!(!ef.pass);
    assert_eq!(ef.witness.as_deref(), Some("e1,f1"));

    let alg = SchurAlgebra::<RationalFunction>::new(2, 2).unwrap();
    let bad = SchurAlgebra::from_generators(perturbed_generators(alg.generators()));
    let r = verify_presentation_on(&bad).unwrap();
    assert!(
        !r.relations
            .iter()
            .find(|c| c.id == "ef-commutator")
            .unwrap()
            .pass
    );
}

#[test]
fn structure_constants_are_integral_associative_and_specialize() {
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let basis =
            enumerate_basis(n, d, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
        let q = structure_constants(
            &SchurAlgebra::<RationalFunction>::new(n, d).unwrap(),
            &basis,
        )
        .unwrap();
        let c =
            structure_constants(&SchurAlgebra::<BigRational>::new(n, d).unwrap(), &basis).unwrap();
        assert!(q.integral() && c.integral());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(q.associativity_check(&mut rng, 100).pass);
        assert!(c.associativity_check(&mut rng, 100).pass);
        assert!(specialization_check(&q, &c).pass);
        // The identity is the sum of the idempotents.
        let idem: Vec<usize> = (0..basis.len())
            .filter(|&k| basis.elements[k].degree() == 0)
            .collect();
        assert_eq!(c.identity.coords.keys().copied().collect::<Vec<_>>(), idem);
        let json = q.to_json();
        assert_eq!(json["schema-version"], 1);
        assert_eq!(json["ring"], "quantum");
    }
}

#[test]
fn idempotent_rows_multiply_diagonally() {
    let basis =
        enumerate_basis(2, 2, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
    let c = structure_constants(&SchurAlgebra::<BigRational>::new(2, 2).unwrap(), &basis).unwrap();
    let idem: Vec<usize> = (0..basis.len())
        .filter(|&k| basis.elements[k].degree() == 0)
        .collect();
    for &a in &idem {
        for &b in &idem {
            let expect = if a == b {
                BigRational::from_integer(1.into())
            } else {
                BigRational::from_integer(0.into())
            };
            assert_eq!(c.coefficient(a, b, a), expect);
        }
    }
}

#[test]
fn conjecture_reports_cover_the_grid() {
    for (n, d) in GRID {
        let q = SchurAlgebra::<RationalFunction>::new(n, d).unwrap();
        let c = SchurAlgebra::<BigRational>::new(n, d).unwrap();
        for kind in ConjectureKind::ALL {
            let r = if kind == ConjectureKind::EKF {
                conjecture_report(&q, kind, 1, &BasisOrders::default()).unwrap()
            } else {
                conjecture_report(&c, kind, 1, &BasisOrders::default()).unwrap()
            };
            if n == 2
                && matches!(
                    kind,
                    ConjectureKind::EHF | ConjectureKind::FHE | ConjectureKind::EKF
                )
            {
                assert!(r.equal(), "{kind} at ({n},{d}): {r:?}");
            }
            println!(
                "{kind} ({n},{d}): count {} rank {} expected {}",
                r.count, r.rank, r.expected
            );
        }
    }
}

#[test]
fn cartan_membership_at_2_2() {
    let c = SchurAlgebra::<BigRational>::new(2, 2).unwrap();
    let r = conjecture_report(
        &c,
        ConjectureKind::CartanSubring,
        1,
        &BasisOrders::default(),
    )
    .unwrap();
    let m = r.membership.unwrap();
    assert!(m.iter().all(|x| x.field));
    for x in &m {
        println!("classical {}: {:?}", x.target, x.integral);
    }
    let q = SchurAlgebra::<RationalFunction>::new(2, 2).unwrap();
    let r = conjecture_report(
        &q,
        ConjectureKind::CartanSubring,
        1,
        &BasisOrders::default(),
    )
    .unwrap();
    for x in r.membership.unwrap() {
        assert!(x.field);
        assert_ne!(x.integral, Membership::NotMember);
        println!("quantum {}: {:?}", x.target, x.integral);
    }
}
