use std::collections::BTreeMap;

use crate::algebra::SchurAlgebra;
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::tensorrep::linalg::flatten;
use crate::tensorrep::{Echelon, Operator};

use super::Basis;

/// Coordinates on a basis, keyed by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateVector<S> {
    pub coords: BTreeMap<usize, S>,
    pub integral: bool,
}

impl<S: SchurScalar> CoordinateVector<S> {
    pub fn new(coords: BTreeMap<usize, S>) -> Self {
        let integral = coords.values().all(S::is_integral);
        CoordinateVector { coords, integral }
    }

    pub fn get(&self, k: usize) -> S {
        self.coords.get(&k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `{"index": scalar}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coords
            .iter()
            .map(|(k, x)| (k.to_string(), x.to_json()))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// A basis with its evaluated operators and one echelon form shared by all solves.
///
/// Basis elements in different weight blocks have disjoint supports, so the
/// single echelon form behaves as a block-diagonal one.
pub struct BasisSolver<'a, S: SchurScalar> {
    pub alg: &'a SchurAlgebra<S>,
    pub basis: Basis,
    ops: Vec<Operator<S>>,
    ech: Echelon<S>,
}

impl<'a, S: SchurScalar> BasisSolver<'a, S> {
    /// Fails with `InvalidArgument` if the evaluated basis is dependent.
    pub fn new(alg: &'a SchurAlgebra<S>, basis: Basis) -> Result<Self> {
        let mut ech = Echelon::new(true);
        let mut ops = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let op = alg.evaluate(&basis.monomial(k))?;
            if ech.insert(flatten(&op)).is_err() {
                return Err(Error::InvalidArgument(format!(
                    "basis element {} is dependent",
                    basis.monomial(k)
                )));
            }
            ops.push(op);
        }
        Ok(BasisSolver {
            alg,
            basis,
            ops,
            ech,
        })
    }

    pub fn operator(&self, k: usize) -> &Operator<S> {
        &self.ops[k]
    }

    pub fn operators(&self) -> &[Operator<S>] {
        &self.ops
    }

    pub fn express(&self, a: &Operator<S>) -> Result<CoordinateVector<S>> {
        Ok(CoordinateVector::new(self.ech.express(flatten(a))?))
    }

    /// Operator with the given coordinates.
    pub fn reconstruct(&self, v: &CoordinateVector<S>) -> Operator<S> {
        let mut acc = Operator::zero(self.alg.dim());
        for (k, c) in &v.coords {
            acc = acc.add(&self.ops[*k].scale(c));
        }
        acc
    }
}
