use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use schur_core::scalars::{
    quantum_binomial, quantum_integer, Field, LaurentPolynomial, RationalFunction,
};

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..4).prop_map(|ts| {
        LaurentPolynomial::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPolynomial> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().eval_one(), a.eval_one());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn rational_functions_form_a_field(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = RationalFunction::new(a, b.clone()).unwrap();
        let y = RationalFunction::new(c, b).unwrap();
        prop_assert_eq!(x.div_ref(&y).mul_ref(&y), x.clone());
        prop_assert_eq!(x.add_ref(&y).sub_ref(&y), x.clone());
        prop_assert_eq!(RationalFunction::from_json(&x.to_json()), Some(x));
    }

    #[test]
    fn gaussian_binomials_are_bar_invariant_and_specialize(c in -6i64..=8, t in 0u32..=5) {
        let g = quantum_binomial(c, t).unwrap();
        prop_assert_eq!(g.bar(), g.clone());
        prop_assert_eq!(g.eval_one(), schur_core::scalars::binomial(c, t));
    }
}

#[test]
fn quantum_integers_are_symmetric() {
    for m in -5..=5 {
        let q = quantum_integer(m);
        assert_eq!(q.bar(), q);
        assert_eq!(q.eval_one(), BigInt::from(m));
    }
}
