use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;

use crate::algebra::SchurAlgebra;
use crate::basisgen::{Basis, BasisSolver, CoordinateVector, Placement};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::scalars::RationalFunction;
use crate::tensorrep::relations::RelationCheck;

use super::with_header;

/// `b_i b_j = sum_k c[i][j][k] b_k`, stored sparsely over the nonzero products.
#[derive(Clone, Debug)]
pub struct StructureConstants<S> {
    pub basis: Basis,
    pub products: BTreeMap<(usize, usize), CoordinateVector<S>>,
    pub identity: CoordinateVector<S>,
}

/// Expands every product of basis elements in the basis; fails on a non-integral coefficient.
pub fn structure_constants<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    basis: &Basis,
) -> Result<StructureConstants<S>> {
    let solver = BasisSolver::new(alg, basis.clone())?;
    let mut products = BTreeMap::new();
    for (i, bi) in basis.elements.iter().enumerate() {
        for (j, bj) in basis.elements.iter().enumerate() {
            // b_i ends in 1_mu and b_j starts with its left idempotent.
            if bi.mu != bj.lambda(Placement::Left) {
                continue;
            }
            let prod = solver.operator(i).compose(solver.operator(j));
            if prod.is_zero() {
                continue;
            }
            let cv = solver.express(&prod)?;
            if !cv.integral {
                return Err(Error::IntegralityFailure(format!(
                    "{} * {}",
                    basis.monomial(i),
                    basis.monomial(j)
                )));
            }
            products.insert((i, j), cv);
        }
    }
    let identity = solver.express(&alg.identity())?;
    Ok(StructureConstants {
        basis: basis.clone(),
        products,
        identity,
    })
}

impl<S: SchurScalar> StructureConstants<S> {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> S {
        self.products
            .get(&(i, j))
            .map(|cv| cv.get(k))
            .unwrap_or_else(S::zero)
    }

    pub fn integral(&self) -> bool {
        self.products.values().all(|cv| cv.integral)
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &BTreeMap<usize, S>, b: &BTreeMap<usize, S>) -> BTreeMap<usize, S> {
        let mut out: BTreeMap<usize, S> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                if let Some(cv) = self.products.get(&(*i, *j)) {
                    let xy = x.mul_ref(y);
                    for (k, c) in &cv.coords {
                        let e = out.entry(*k).or_insert_with(S::zero);
                        *e = e.add_ref(&xy.mul_ref(c));
                    }
                }
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    fn unit(k: usize) -> BTreeMap<usize, S> {
        BTreeMap::from([(k, S::one())])
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` on random triples with composable weights.
    pub fn associativity_check<R: Rng>(&self, rng: &mut R, samples: usize) -> RelationCheck {
        let els = &self.basis.elements;
        let mut witness = None;
        if !els.is_empty() {
            for _ in 0..samples {
                let i = rng.gen_range(0..els.len());
                let follow = |a: usize| -> Vec<usize> {
                    (0..els.len())
                        .filter(|&b| els[b].lambda(Placement::Left) == els[a].mu)
                        .collect()
                };
                let js = follow(i);
                let j = js[rng.gen_range(0..js.len())];
                let ks = follow(j);
                let k = ks[rng.gen_range(0..ks.len())];
                let left = self.multiply(
                    &self.multiply(&Self::unit(i), &Self::unit(j)),
                    &Self::unit(k),
                );
                let right = self.multiply(
                    &Self::unit(i),
                    &self.multiply(&Self::unit(j), &Self::unit(k)),
                );
                if left != right {
                    witness = Some(format!("({i}, {j}, {k})"));
                    break;
                }
            }
        }
        RelationCheck {
            id: "associativity".into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .products
            .iter()
            .flat_map(|((i, j), cv)| {
                cv.coords
                    .iter()
                    .map(move |(k, c)| serde_json::json!([i, j, k, c.to_json()]))
            })
            .collect();
        with_header(
            self.basis.n,
            self.basis.d,
            S::RING,
            serde_json::json!({
                "basis": self.basis.monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "integral": self.integral(),
                "identity": self.identity.to_json(),
                "entries": entries,
            }),
        )
    }
}

/// The quantum constants at `v = 1` against the classical ones, on the same basis.
pub fn specialization_check(
    quantum: &StructureConstants<RationalFunction>,
    classical: &StructureConstants<BigRational>,
) -> RelationCheck {
    let fail = |w: String| RelationCheck {
        id: "specialization".into(),
        pass: false,
        witness: Some(w),
    };
    if quantum.basis.elements != classical.basis.elements {
        return fail("bases differ".into());
    }
    let mut keys: Vec<&(usize, usize)> = quantum
        .products
        .keys()
        .chain(classical.products.keys())
        .collect();
    keys.sort();
    keys.dedup();
    for &(i, j) in keys {
        let q = quantum.products.get(&(i, j));
        let c = classical.products.get(&(i, j));
        let q_at_one: BTreeMap<usize, BigRational> = match q {
            Some(cv) => {
                let mut m = BTreeMap::new();
                for (k, x) in &cv.coords {
                    match crate::scalars::Field::specialize_v1(x) {
                        Some(y) if y != BigRational::from_integer(0.into()) => {
                            m.insert(*k, y);
                        }
                        Some(_) => {}
                        None => return fail(format!("({i}, {j}) has a pole at v = 1")),
                    }
                }
                m
            }
            None => BTreeMap::new(),
        };
        let c_map = c.map(|cv| cv.coords.clone()).unwrap_or_default();
        if q_at_one != c_map {
            return fail(format!("({i}, {j})"));
        }
    }
    RelationCheck {
        id: "specialization".into(),
        pass: true,
        witness: None,
    }
}
