//! The scalar-ring hooks that let one generic code path serve both the
//! classical and the quantum algebra. The classical ring is treated as the
//! specialization `v = 1` of the quantum one.

use num_rational::BigRational;

use crate::error::Result;
use crate::scalars::{
    binomial, factorial, quantum_binomial, quantum_factorial, quantum_integer, Field,
    LaurentPolynomial, RationalFunction, ScalarRing,
};
use crate::tensorrep::relations::{
    classical_presentation_checks, quantum_presentation_checks, RelationCheck,
};
use crate::tensorrep::{build_classical_generators, build_quantum_generators, GeneratorSet};

pub trait SchurScalar: Field {
    const RING: ScalarRing;

    /// Image of an integral Laurent polynomial; the classical ring evaluates at `v = 1`.
    fn from_laurent(p: &LaurentPolynomial) -> Self;

    fn v_power(e: i64) -> Self {
        Self::from_laurent(&LaurentPolynomial::v_power(e))
    }

    /// `m` or `[m]`.
    fn integer_analogue(m: i64) -> Self;

    /// `m!` or `[m]!`.
    fn factorial_analogue(m: u32) -> Self;

    /// `binom(c, t)` or the Gaussian binomial `[c, t]`.
    fn binomial_analogue(c: i64, t: u32) -> Self;

    /// The ring involution `v -> v^-1`; the identity classically.
    fn bar(&self) -> Self;

    /// The element as a Laurent polynomial, if it is integral.
    fn as_laurent(&self) -> Option<LaurentPolynomial>;

    fn build_generators(n: usize, d: usize) -> Result<GeneratorSet<Self>>;

    fn presentation_checks(g: &GeneratorSet<Self>) -> Vec<RelationCheck>;
}

impl SchurScalar for BigRational {
    const RING: ScalarRing = ScalarRing::Classical;

    fn from_laurent(p: &LaurentPolynomial) -> Self {
        BigRational::from_integer(p.eval_one())
    }
    fn integer_analogue(m: i64) -> Self {
        BigRational::from_integer(m.into())
    }
    fn factorial_analogue(m: u32) -> Self {
        BigRational::from_integer(factorial(m))
    }
    fn binomial_analogue(c: i64, t: u32) -> Self {
        BigRational::from_integer(binomial(c, t))
    }
    fn bar(&self) -> Self {
        self.clone()
    }
    fn as_laurent(&self) -> Option<LaurentPolynomial> {
        self.is_integer()
            .then(|| LaurentPolynomial::constant(self.to_integer()))
    }
    fn build_generators(n: usize, d: usize) -> Result<GeneratorSet<Self>> {
        build_classical_generators(n, d)
    }
    fn presentation_checks(g: &GeneratorSet<Self>) -> Vec<RelationCheck> {
        classical_presentation_checks(g)
    }
}

impl SchurScalar for RationalFunction {
    const RING: ScalarRing = ScalarRing::Quantum;

    fn from_laurent(p: &LaurentPolynomial) -> Self {
        RationalFunction::from_laurent(p.clone())
    }
    fn integer_analogue(m: i64) -> Self {
        RationalFunction::from_laurent(quantum_integer(m))
    }
    fn factorial_analogue(m: u32) -> Self {
        RationalFunction::from_laurent(quantum_factorial(m))
    }
    fn binomial_analogue(c: i64, t: u32) -> Self {
        RationalFunction::from_laurent(
            quantum_binomial(c, t).expect("Gaussian binomials are integral"),
        )
    }
    fn bar(&self) -> Self {
        RationalFunction::bar(self)
    }
    fn as_laurent(&self) -> Option<LaurentPolynomial> {
        RationalFunction::as_laurent(self).cloned()
    }
    fn build_generators(n: usize, d: usize) -> Result<GeneratorSet<Self>> {
        build_quantum_generators(n, d)
    }
    fn presentation_checks(g: &GeneratorSet<Self>) -> Vec<RelationCheck> {
        quantum_presentation_checks(g)
    }
}
