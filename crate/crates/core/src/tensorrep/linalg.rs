use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::scalars::Field;

use super::Operator;

pub type SparseVector<S> = BTreeMap<usize, S>;

/// Flattens an operator to a vector of length `dim^2`, keyed by `row * dim + col`.
pub fn flatten<S: Field>(op: &Operator<S>) -> SparseVector<S> {
    let dim = op.dim();
    op.entries()
        .map(|(r, c, x)| (r * dim + c, x.clone()))
        .collect()
}

fn axpy<S: Field>(target: &mut SparseVector<S>, c: &S, src: &SparseVector<S>) {
    for (k, x) in src {
        let p = c.mul_ref(x);
        match target.get_mut(k) {
            Some(slot) => {
                *slot = slot.sub_ref(&p);
                if slot.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(*k, -p);
            }
        }
    }
}

struct Row<S> {
    vec: SparseVector<S>,
    combo: SparseVector<S>,
}

/// Incremental row echelon form over an exact field.
///
/// Every stored row has its smallest key as pivot, with pivot coefficient one.
/// With tracking enabled each row also records itself as a combination of the
/// inserted vectors, which makes coordinates and dependency relations available.
pub struct Echelon<S> {
    rows: Vec<Row<S>>,
    pivot_of: HashMap<usize, usize>,
    track: bool,
    inserted: usize,
}

impl<S: Field> Echelon<S> {
    pub fn new(track: bool) -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_of: HashMap::new(),
            track,
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(
        &self,
        mut v: SparseVector<S>,
        mut combo: SparseVector<S>,
    ) -> (SparseVector<S>, SparseVector<S>) {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.pivot_of.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let row = &self.rows[self.pivot_of[&k]];
            axpy(&mut v, &c, &row.vec);
            if self.track {
                axpy(&mut combo, &c, &row.combo);
            }
            cursor = k + 1;
        }
        (v, combo)
    }

    /// Inserts the next input vector. Returns `Ok(())` if it was independent,
    /// otherwise `Err(relation)` where `relation` lists coefficients on input
    /// indices (including this one, with coefficient one) summing to zero.
    pub fn insert(&mut self, v: SparseVector<S>) -> std::result::Result<(), SparseVector<S>> {
        let id = self.inserted;
        self.inserted += 1;
        let mut start = SparseVector::new();
        if self.track {
            start.insert(id, S::one());
        }
        let (res, combo) = self.reduce(v, start);
        let Some((&p, lead)) = res.iter().next() else {
            return Err(combo);
        };
        let inv = S::one().div_ref(lead);
        let scale = |m: SparseVector<S>| -> SparseVector<S> {
            m.into_iter().map(|(k, x)| (k, x.mul_ref(&inv))).collect()
        };
        let row = Row {
            vec: scale(res),
            combo: if self.track { scale(combo) } else { combo },
        };
        self.pivot_of.insert(p, self.rows.len());
        self.rows.push(row);
        Ok(())
    }

    /// Coordinates of `v` on the inserted inputs, or `NotInSpan`.
    ///
    /// Meaningful when every inserted vector was independent.
    pub fn express(&self, v: SparseVector<S>) -> Result<SparseVector<S>> {
        assert!(self.track, "express needs combination tracking");
        let (res, combo) = self.reduce(v, SparseVector::new());
        if !res.is_empty() {
            return Err(Error::NotInSpan);
        }
        Ok(combo.into_iter().map(|(k, x)| (k, -x)).collect())
    }

    pub fn contains(&self, v: SparseVector<S>) -> bool {
        let (res, _) = self.reduce(v, SparseVector::new());
        res.is_empty()
    }
}

/// Rank of a family of operators viewed as vectors of length `dim^2`.
///
/// Operators with disjoint supports never interact during elimination, so
/// homogeneous families split into their weight blocks automatically.
pub fn span_rank<S: Field>(ops: &[Operator<S>]) -> usize {
    let mut ech = Echelon::new(false);
    for op in ops {
        let _ = ech.insert(flatten(op));
    }
    ech.rank()
}

/// Monic least-degree polynomial annihilating `a`, coefficients from constant term up.
pub fn minimal_polynomial<S: Field>(a: &Operator<S>, degree_bound: usize) -> Result<Vec<S>> {
    let mut ech = Echelon::new(true);
    let mut power = Operator::identity(a.dim());
    for k in 0..=degree_bound {
        if let Err(rel) = ech.insert(flatten(&power)) {
            let mut coeffs = vec![S::zero(); k + 1];
            for (idx, c) in rel {
                coeffs[idx] = c;
            }
            return Ok(coeffs);
        }
        power = power.compose(a);
    }
    Err(Error::BoundExceeded(format!(
        "no annihilating polynomial of degree <= {degree_bound}"
    )))
}

/// Expands `prod (X - r)` over the given roots, coefficients from constant term up.
pub fn poly_from_roots<S: Field>(roots: &[S]) -> Vec<S> {
    let mut p = vec![S::one()];
    for r in roots {
        let mut next = vec![S::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = next[k + 1].add_ref(c);
            next[k] = next[k].sub_ref(&c.mul_ref(r));
        }
        p = next;
    }
    p
}

/// Evaluates a polynomial at an operator.
pub fn poly_eval<S: Field>(p: &[S], a: &Operator<S>) -> Operator<S> {
    let mut acc = Operator::zero(a.dim());
    for c in p.iter().rev() {
        acc = acc.compose(a).add(&Operator::scalar(a.dim(), c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_relations() {
        let a = Operator::from_entries(2, vec![(0, 0, q(1)), (1, 1, q(2))]);
        let b = Operator::from_entries(2, vec![(0, 1, q(1))]);
        let c = a.scale(&q(3)).add(&b);
        assert_eq!(span_rank(&[a.clone(), b.clone(), c.clone()]), 2);
        let mut ech = Echelon::new(true);
        ech.insert(flatten(&a)).unwrap();
        ech.insert(flatten(&b)).unwrap();
        let coords = ech.express(flatten(&c)).unwrap();
        assert_eq!(coords[&0], q(3));
        assert_eq!(coords[&1], q(1));
        assert!(ech.express(flatten(&Operator::identity(2))).is_err());
    }

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let a = Operator::diagonal(vec![q(0), q(1), q(1), q(2)]);
        let p = minimal_polynomial(&a, 5).unwrap();
        assert_eq!(p, poly_from_roots(&[q(0), q(1), q(2)]));
        assert!(poly_eval(&p, &a).is_zero());
        assert_eq!(
            minimal_polynomial(&Operator::<BigRational>::identity(3), 2).unwrap(),
            vec![q(-1), q(1)]
        );
        assert!(minimal_polynomial(&a, 2).is_err());
    }
}
