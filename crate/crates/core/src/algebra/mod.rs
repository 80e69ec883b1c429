//! Root vectors, divided powers, Cartan binomials and idempotents, and the
//! evaluation of Kostant monomials to operators on tensor space.

mod monomial;
mod parse;

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{compositions, is_composition_of, Root, Weight};
use crate::scalars::ScalarRing;
use crate::tensorrep::{GeneratorSet, Operator};

pub use monomial::{random_monomial, KostantFactor, KostantMonomial, LinearCombination};
pub use parse::parse_monomial;

/// `S(n, d)` or its quantum analogue realized on tensor space.
pub struct SchurAlgebra<S: SchurScalar> {
    gens: GeneratorSet<S>,
    lambdas: Vec<Weight>,
    roots: Mutex<HashMap<Root, Operator<S>>>,
    factors: Mutex<HashMap<KostantFactor, Operator<S>>>,
}

impl<S: SchurScalar> std::fmt::Debug for SchurAlgebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SchurAlgebra(n={}, d={}, ring={})",
            self.gens.n,
            self.gens.d,
            S::RING
        )
    }
}

impl<S: SchurScalar> SchurAlgebra<S> {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        Ok(Self::from_generators(S::build_generators(n, d)?))
    }

    pub fn from_generators(gens: GeneratorSet<S>) -> Self {
        let lambdas = compositions(gens.n, gens.d);
        SchurAlgebra {
            gens,
            lambdas,
            roots: Mutex::new(HashMap::new()),
            factors: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.gens.n
    }

    pub fn d(&self) -> usize {
        self.gens.d
    }

    pub fn ring(&self) -> ScalarRing {
        S::RING
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn generators(&self) -> &GeneratorSet<S> {
        &self.gens
    }

    /// `Lambda(n, d)` in descending lexicographic order.
    pub fn compositions(&self) -> &[Weight] {
        &self.lambdas
    }

    pub fn identity(&self) -> Operator<S> {
        self.gens.identity()
    }

    fn check_root(&self, root: Root) -> Result<()> {
        if root.i == root.j || !root.in_rank(self.n()) {
            return Err(Error::InvalidArgument(format!(
                "{root:?} is not a root for n = {}",
                self.n()
            )));
        }
        Ok(())
    }

    /// `x_alpha` or `X_alpha`, built by stripping the simple root at the smaller index.
    pub fn root_vector(&self, root: Root) -> Result<Operator<S>> {
        self.check_root(root)?;
        if let Some(op) = self.roots.lock().unwrap().get(&root) {
            return Ok(op.clone());
        }
        let op = if root.is_positive() {
            let i = root.i;
            if root.j == i + 1 {
                self.gens.e(i).clone()
            } else {
                let rest = self.root_vector(Root::new(i + 1, root.j))?;
                let e = self.gens.e(i);
                e.compose(&rest)
                    .scale(&S::v_power(-1))
                    .sub(&rest.compose(e))
            }
        } else {
            let i = root.j;
            if root.i == i + 1 {
                self.gens.f(i).clone()
            } else {
                let rest = self.root_vector(Root::new(root.i, i + 1))?;
                let f = self.gens.f(i);
                rest.compose(f).scale(&S::v_power(1)).sub(&f.compose(&rest))
            }
        };
        self.roots.lock().unwrap().insert(root, op.clone());
        Ok(op)
    }

    /// `a^m / m!` or `a^m / [m]!`.
    pub fn divided_power_of(&self, a: &Operator<S>, m: u32) -> Operator<S> {
        a.pow(m).scale(&S::one().div_ref(&S::factorial_analogue(m)))
    }

    pub fn divided_power(&self, root: Root, m: u32) -> Result<Operator<S>> {
        self.factor(&KostantFactor::root(root, m))
    }

    /// Product over `s = 1..t` of `(h + c - s + 1) / s` classically, or of
    /// `(k v^(c-s+1) - k^-1 v^(-c+s-1)) / (v^s - v^-s)` quantumly.
    fn binomial_of(
        &self,
        h_or_k: &Operator<S>,
        k_inv: Option<&Operator<S>>,
        c: i64,
        t: u32,
    ) -> Operator<S> {
        let mut acc = self.identity();
        for s in 1..=t as i64 {
            let term = match k_inv {
                None => h_or_k
                    .add(&Operator::scalar(self.dim(), S::from_i64(c - s + 1)))
                    .scale(&S::one().div_ref(&S::from_i64(s))),
                Some(kinv) => {
                    let num = h_or_k
                        .scale(&S::v_power(c - s + 1))
                        .sub(&kinv.scale(&S::v_power(-c + s - 1)));
                    num.scale(&S::one().div_ref(&S::v_power(s).sub_ref(&S::v_power(-s))))
                }
            };
            acc = acc.compose(&term);
        }
        acc
    }

    fn cartan_pair(&self, i: usize) -> (Operator<S>, Option<Operator<S>>) {
        match S::RING {
            ScalarRing::Classical => (self.gens.cartan(i).clone(), None),
            ScalarRing::Quantum => (
                self.gens.cartan(i).clone(),
                Some(self.gens.cartan_inv(i).clone()),
            ),
        }
    }

    fn root_cartan_pair(&self, root: Root) -> (Operator<S>, Option<Operator<S>>) {
        match S::RING {
            ScalarRing::Classical => (self.gens.cartan(root.i).sub(self.gens.cartan(root.j)), None),
            ScalarRing::Quantum => (
                self.gens
                    .cartan(root.i)
                    .compose(self.gens.cartan_inv(root.j)),
                Some(
                    self.gens
                        .cartan_inv(root.i)
                        .compose(self.gens.cartan(root.j)),
                ),
            ),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::InvalidArgument(format!(
                "index {i} out of range for n = {}",
                self.n()
            )));
        }
        Ok(())
    }

    /// `1_lambda` as a product of Cartan binomials; zero when `lambda` is not in `Lambda(n, d)`.
    pub fn idempotent(&self, lambda: &[i64]) -> Result<Operator<S>> {
        if lambda.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "composition {lambda:?} needs {} parts",
                self.n()
            )));
        }
        self.factor(&KostantFactor::Idempotent(lambda.to_vec()))
    }

    /// `H_B` or `K_B`: the product of `binom(H_i, B_i)` or `[K_i; 0, B_i]`.
    pub fn cartan_monomial(&self, b: &[u32]) -> Result<Operator<S>> {
        let mut acc = self.identity();
        for (k, &t) in b.iter().enumerate() {
            acc =
                acc.compose(&self.factor(&KostantFactor::CartanBinomial { i: k + 1, c: 0, t })?);
        }
        Ok(acc)
    }

    fn build_factor(&self, f: &KostantFactor) -> Result<Operator<S>> {
        if !f.allowed_in(S::RING) {
            return Err(Error::InvalidArgument(format!(
                "{f} is not available in the {} ring",
                S::RING
            )));
        }
        Ok(match f {
            KostantFactor::DividedRootPower { root, m } => {
                let x = self.root_vector(*root)?;
                self.divided_power_of(&x, *m)
            }
            KostantFactor::CartanBinomial { i, c, t } => {
                self.check_index(*i)?;
                let (h, hinv) = self.cartan_pair(*i);
                self.binomial_of(&h, hinv.as_ref(), *c, *t)
            }
            KostantFactor::RootHBinomial { root, c, t }
            | KostantFactor::RootKBinomial { root, c, t } => {
                self.check_root(*root)?;
                let (h, hinv) = self.root_cartan_pair(*root);
                self.binomial_of(&h, hinv.as_ref(), *c, *t)
            }
            KostantFactor::KPower { i, e } => {
                self.check_index(*i)?;
                let base = if *e >= 0 {
                    self.gens.cartan(*i)
                } else {
                    self.gens.cartan_inv(*i)
                };
                base.pow(e.unsigned_abs() as u32)
            }
            KostantFactor::Idempotent(lambda) => {
                if lambda.len() != self.n() {
                    return Err(Error::InvalidArgument(format!(
                        "composition {lambda:?} needs {} parts",
                        self.n()
                    )));
                }
                if !is_composition_of(lambda, self.d()) {
                    return Ok(Operator::zero(self.dim()));
                }
                let b: Vec<u32> = lambda.iter().map(|&x| x as u32).collect();
                self.cartan_monomial(&b)?
            }
        })
    }

    /// Operator of a single factor, memoized.
    pub fn factor(&self, f: &KostantFactor) -> Result<Operator<S>> {
        if let Some(op) = self.factors.lock().unwrap().get(f) {
            return Ok(op.clone());
        }
        let op = self.build_factor(f)?;
        self.factors.lock().unwrap().insert(f.clone(), op.clone());
        Ok(op)
    }

    /// Left-to-right product of the factors; the empty word is the identity.
    pub fn evaluate(&self, m: &KostantMonomial) -> Result<Operator<S>> {
        let mut acc = self.identity();
        for f in &m.factors {
            acc = acc.compose(&self.factor(f)?);
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn evaluate_combination(&self, lc: &LinearCombination<S>) -> Result<Operator<S>> {
        let mut acc = Operator::zero(self.dim());
        for (m, c) in lc.iter() {
            acc = acc.add(&self.evaluate(m)?.scale(c));
        }
        Ok(acc)
    }

    /// Value of a Cartan-type factor on the weight space `nu`; `None` for root powers.
    pub fn cartan_value(f: &KostantFactor, nu: &[i64]) -> Option<S> {
        Some(match f {
            KostantFactor::CartanBinomial { i, c, t } => S::binomial_analogue(nu[i - 1] + c, *t),
            KostantFactor::RootHBinomial { root, c, t }
            | KostantFactor::RootKBinomial { root, c, t } => {
                S::binomial_analogue(nu[root.i - 1] - nu[root.j - 1] + c, *t)
            }
            KostantFactor::KPower { i, e } => S::v_power(e * nu[i - 1]),
            KostantFactor::Idempotent(lambda) => {
                if lambda.as_slice() == nu {
                    S::one()
                } else {
                    S::zero()
                }
            }
            KostantFactor::DividedRootPower { .. } => return None,
        })
    }

    /// `sum_lambda lambda_j 1_lambda` or `sum_lambda v^(lambda_j) 1_lambda`.
    pub fn reconstruct_cartan(&self, j: usize) -> Result<Operator<S>> {
        self.check_index(j)?;
        let mut acc = Operator::zero(self.dim());
        for lambda in &self.lambdas {
            let c = match S::RING {
                ScalarRing::Classical => S::from_i64(lambda[j - 1]),
                ScalarRing::Quantum => S::v_power(lambda[j - 1]),
            };
            acc = acc.add(&self.idempotent(lambda)?.scale(&c));
        }
        Ok(acc)
    }

    /// Projection of `a` onto the block from weight `mu` to weight `lambda`.
    pub fn block(&self, a: &Operator<S>, lambda: &[i64], mu: &[i64]) -> Operator<S> {
        let space = &self.gens.space;
        a.restrict_columns(|c| space.weight(c).as_slice() == mu)
            .restrict_rows(|r| space.weight(r).as_slice() == lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    use crate::scalars::RationalFunction;

    #[test]
    fn simple_roots_are_generators() {
        let a = SchurAlgebra::<BigRational>::new(3, 2).unwrap();
        assert_eq!(
            &a.root_vector(Root::new(1, 2)).unwrap(),
            a.generators().e(1)
        );
        assert_eq!(
            &a.root_vector(Root::new(3, 2)).unwrap(),
            a.generators().f(2)
        );
        let g = a.generators();
        let x13 = g.e(1).compose(g.e(2)).sub(&g.e(2).compose(g.e(1)));
        assert_eq!(a.root_vector(Root::new(1, 3)).unwrap(), x13);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let a = SchurAlgebra::<RationalFunction>::new(2, 2).unwrap();
        let mut sum = Operator::zero(a.dim());
        for l in a.compositions() {
            let p = a.idempotent(l).unwrap();
            assert_eq!(p.compose(&p), p);
            for m in a.compositions() {
                if m != l {
                    assert!(p.compose(&a.idempotent(m).unwrap()).is_zero());
                }
            }
            sum = sum.add(&p);
        }
        assert_eq!(sum, a.identity());
        assert_eq!(a.idempotent(&[1, 1]).unwrap().nnz(), 2);
    }

    #[test]
    fn cartan_reconstruction() {
        let a = SchurAlgebra::<BigRational>::new(2, 2).unwrap();
        assert_eq!(&a.reconstruct_cartan(1).unwrap(), a.generators().cartan(1));
        let q = SchurAlgebra::<RationalFunction>::new(2, 2).unwrap();
        assert_eq!(&q.reconstruct_cartan(2).unwrap(), q.generators().cartan(2));
    }

    #[test]
    fn divided_powers_vanish_past_d() {
        let a = SchurAlgebra::<BigRational>::new(2, 2).unwrap();
        assert!(a.divided_power(Root::new(1, 2), 3).unwrap().is_zero());
        assert_eq!(a.divided_power(Root::new(1, 2), 0).unwrap(), a.identity());
    }
}
