//! Integral spans: a Hermite-form lattice over `Z` and a unit-pivot echelon over `Z[v, v^-1]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalars::LaurentPolynomial;

pub type IntVector = BTreeMap<usize, BigInt>;

fn axpy(y: &mut IntVector, a: &BigInt, x: &IntVector) {
    for (k, xv) in x {
        let e = y.entry(*k).or_insert_with(BigInt::zero);
        *e += a * xv;
        if e.is_zero() {
            y.remove(k);
        }
    }
}

fn combine(a: &BigInt, x: &IntVector, b: &BigInt, y: &IntVector) -> IntVector {
    let mut out = IntVector::new();
    axpy(&mut out, a, x);
    axpy(&mut out, b, y);
    out
}

/// A sublattice of `Z^N` in row Hermite form, keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct IntLattice {
    rows: BTreeMap<usize, IntVector>,
}

impl IntLattice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether the lattice grew.
    pub fn insert(&mut self, mut v: IntVector) -> bool {
        let mut grew = false;
        while let Some((&c, lead)) = v.iter().next() {
            let lead = lead.clone();
            let Some(row) = self.rows.get(&c) else {
                if lead.is_negative() {
                    v = v.into_iter().map(|(k, x)| (k, -x)).collect();
                }
                self.rows.insert(c, v);
                return true;
            };
            let p = row[&c].clone();
            if (&lead % &p).is_zero() {
                let q = -(&lead / &p);
                axpy(&mut v, &q, row);
                continue;
            }
            let eg = p.extended_gcd(&lead);
            let g = eg.gcd.clone();
            let new_row = combine(&eg.x, row, &eg.y, &v);
            let rest = combine(&(&lead / &g), row, &-(&p / &g), &v);
            self.rows.insert(c, new_row);
            v = rest;
            grew = true;
        }
        grew
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        let mut v = v.clone();
        while let Some((&c, lead)) = v.iter().next() {
            let Some(row) = self.rows.get(&c) else {
                return false;
            };
            let p = &row[&c];
            if !(lead % p).is_zero() {
                return false;
            }
            let q = -(lead / p);
            axpy(&mut v, &q, row);
        }
        true
    }
}

pub type LaurentVector = BTreeMap<usize, LaurentPolynomial>;

/// Echelon form over `Z[v, v^-1]` that only accepts unit pivots `+-v^k`.
///
/// Reduction by such rows stays inside the integral span, so a vector that
/// reduces to zero is certified to lie in it. Vectors whose leading entry is
/// not a unit are set aside, which makes a failed reduction inconclusive.
#[derive(Clone, Debug, Default)]
pub struct UnitPivotEchelon {
    rows: BTreeMap<usize, LaurentVector>,
    pub set_aside: usize,
}

fn laxpy(y: &mut LaurentVector, a: &LaurentPolynomial, x: &LaurentVector) {
    for (k, xv) in x {
        let e = y.entry(*k).or_insert_with(LaurentPolynomial::zero);
        *e += &(a * xv);
        if e.is_zero() {
            y.remove(k);
        }
    }
}

impl UnitPivotEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: LaurentVector) -> LaurentVector {
        let mut cursor = 0;
        loop {
            let Some((&c, lead)) = v.range(cursor..).next() else {
                return v;
            };
            match self.rows.get(&c) {
                Some(row) => {
                    // Pivots are normalized to 1, so the multiplier is the entry itself.
                    let q = -lead.clone();
                    laxpy(&mut v, &q, row);
                }
                None => cursor = c + 1,
            }
        }
    }

    /// Adds `v`; returns whether a new row was created.
    pub fn insert(&mut self, v: LaurentVector) -> bool {
        let v = self.reduce(v);
        let unit = v
            .iter()
            .find_map(|(&c, x)| x.as_unit().map(|(s, e)| (c, s, e)));
        match unit {
            Some((c, s, e)) => {
                let inv = LaurentPolynomial::monomial(BigInt::from(s), -e);
                let row: LaurentVector = v.iter().map(|(k, x)| (*k, &inv * x)).collect();
                // The reduced vector is zero at every existing pivot; clear the new pivot from the old rows.
                for other in self.rows.values_mut() {
                    if let Some(x) = other.get(&c).cloned() {
                        laxpy(other, &-x, &row);
                    }
                }
                self.rows.insert(c, row);
                true
            }
            _ => {
                if !v.is_empty() {
                    self.set_aside += 1;
                }
                false
            }
        }
    }

    /// `true` certifies membership; `false` means not certified.
    pub fn certifies(&self, v: &LaurentVector) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(pairs: &[(usize, i64)]) -> IntVector {
        pairs.iter().map(|&(k, x)| (k, BigInt::from(x))).collect()
    }

    #[test]
    fn lattice_membership_respects_divisibility() {
        let mut l = IntLattice::new();
        assert!(l.insert(iv(&[(0, 2), (1, 1)])));
        assert!(!l.contains(&iv(&[(0, 1)])));
        assert!(l.contains(&iv(&[(0, 4), (1, 2)])));
        assert!(l.insert(iv(&[(0, 3)])));
        assert!(l.contains(&iv(&[(0, 1), (1, 2)])));
        assert!(!l.contains(&iv(&[(0, 1)])));
        assert!(!l.insert(iv(&[(1, 3)])));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn unit_pivots_certify_integral_combinations() {
        let v = |e| LaurentPolynomial::v_power(e);
        let mut ech = UnitPivotEchelon::new();
        ech.insert([(0, v(1)), (1, v(2))].into_iter().collect());
        let two = LaurentPolynomial::from_i64(2);
        let target: LaurentVector = [(0, &two * &v(0)), (1, &two * &v(1))].into_iter().collect();
        assert!(ech.certifies(&target));
        let not: LaurentVector = [(1, v(0))].into_iter().collect();
        assert!(!ech.certifies(&not));
    }
}
