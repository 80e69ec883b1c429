//! The integral bases `Y_+`, `Y_-` (and their quantum analogues), the
//! candidate sets from the conjectures, and coordinates with respect to a basis.

mod conjecture;
mod solve;

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{KostantFactor, KostantMonomial, SchurAlgebra};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{add_weights, compositions, positive_roots, Root, RootOrder, Weight};
use crate::scalars::binomial;
use crate::tensorrep::span_rank;

pub use conjecture::{
    card_bijection, card_bijection_inverse, card_index_set, enumerate_conjecture_sets,
    ConjectureKind, PbwTriple,
};
pub use solve::{BasisSolver, CoordinateVector};

/// `Plus` is `e_A 1_lambda f_C`, `Minus` is `f_A 1_lambda e_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

/// Where the idempotent sits in the rendered monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Placement {
    Left,
    Middle,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Side::Plus),
            "minus" => Ok(Side::Minus),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

impl FromStr for Placement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Placement::Left),
            "middle" => Ok(Placement::Middle),
            "right" => Ok(Placement::Right),
            _ => Err(Error::Parse(format!("unknown placement `{s}`"))),
        }
    }
}

/// Product orders for the positive-root block and the negative-root block.
/// `f` lists positive roots; the block uses their negatives in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisOrders {
    pub e: RootOrder,
    pub f: RootOrder,
}

impl Default for BasisOrders {
    fn default() -> Self {
        BasisOrders {
            e: RootOrder::Box,
            f: RootOrder::ReverseBox,
        }
    }
}

impl BasisOrders {
    pub fn uniform(order: RootOrder) -> Self {
        BasisOrders {
            e: order.clone(),
            f: order,
        }
    }
}

/// One basis element, stored with its idempotent on the right: the word is
/// `(block A)(block C) 1_mu`, where for `Plus` block A is `e_A` and block C is
/// `f_C`, and for `Minus` the letters are exchanged. `a` and `c` are keyed by positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisElement {
    pub side: Side,
    pub a: BTreeMap<Root, u32>,
    pub c: BTreeMap<Root, u32>,
    pub mu: Weight,
}

fn block_roots(side: Side, first: bool, orders: &BasisOrders, n: usize) -> Result<Vec<Root>> {
    let positive = (side == Side::Plus) == first;
    if positive {
        orders.e.sequence(n)
    } else {
        Ok(orders.f.sequence(n)?.into_iter().map(|r| r.neg()).collect())
    }
}

impl BasisElement {
    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn degree(&self) -> u32 {
        self.a.values().chain(self.c.values()).sum()
    }

    fn block_shift(&self, first: bool) -> Weight {
        let n = self.n();
        let map = if first { &self.a } else { &self.c };
        let sign = if (self.side == Side::Plus) == first {
            1
        } else {
            -1
        };
        let mut w = vec![0; n];
        for (r, &m) in map {
            w[r.i - 1] += sign * m as i64;
            w[r.j - 1] -= sign * m as i64;
        }
        w
    }

    /// Idempotent weight for the given placement.
    pub fn lambda(&self, placement: Placement) -> Weight {
        let middle: Weight = self
            .mu
            .iter()
            .zip(self.block_shift(false))
            .map(|(m, s)| m + s)
            .collect();
        match placement {
            Placement::Right => self.mu.clone(),
            Placement::Middle => middle,
            Placement::Left => add_weights(&middle, &self.block_shift(true)),
        }
    }

    fn block(&self, first: bool, orders: &BasisOrders) -> Result<Vec<KostantFactor>> {
        let map = if first { &self.a } else { &self.c };
        Ok(block_roots(self.side, first, orders, self.n())?
            .into_iter()
            .filter_map(|r| map.get(&r.positive()).map(|&m| KostantFactor::root(r, m)))
            .collect())
    }

    /// The element as a Kostant monomial with its idempotent at `placement`.
    pub fn monomial(&self, orders: &BasisOrders, placement: Placement) -> Result<KostantMonomial> {
        let idem = KostantFactor::Idempotent(self.lambda(placement));
        let mut f = Vec::new();
        if placement == Placement::Left {
            f.push(idem.clone());
        }
        f.extend(self.block(true, orders)?);
        if placement == Placement::Middle {
            f.push(idem.clone());
        }
        f.extend(self.block(false, orders)?);
        if placement == Placement::Right {
            f.push(idem);
        }
        Ok(KostantMonomial::new(f))
    }

    /// The root part of the word, without idempotent.
    pub fn root_word(&self, orders: &BasisOrders) -> Result<KostantMonomial> {
        let mut f = self.block(true, orders)?;
        f.extend(self.block(false, orders)?);
        Ok(KostantMonomial::new(f))
    }

    pub fn to_json(&self, orders: &BasisOrders, placement: Placement) -> serde_json::Value {
        let pairs = |m: &BTreeMap<Root, u32>| -> Vec<serde_json::Value> {
            m.iter()
                .map(|(r, e)| serde_json::json!([[r.i, r.j], e]))
                .collect()
        };
        serde_json::json!({
            "A": pairs(&self.a),
            "lambda": self.lambda(placement),
            "C": pairs(&self.c),
            "side": self.side,
            "placement": placement,
            "word": self.monomial(orders, placement).map(|m| m.to_string()).unwrap_or_default(),
        })
    }
}

/// An enumerated basis together with its rendering options.
#[derive(Clone, Debug)]
pub struct Basis {
    pub n: usize,
    pub d: usize,
    pub side: Side,
    pub placement: Placement,
    pub orders: BasisOrders,
    pub elements: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, e: &BasisElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn monomial(&self, k: usize) -> KostantMonomial {
        self.elements[k]
            .monomial(&self.orders, self.placement)
            .expect("orders validated at enumeration")
    }

    pub fn monomials(&self) -> Vec<KostantMonomial> {
        (0..self.len()).map(|k| self.monomial(k)).collect()
    }

    /// Indices of the elements whose right idempotent is `mu`.
    pub fn piece(&self, mu: &[i64]) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.elements[k].mu.as_slice() == mu)
            .collect()
    }

    pub fn to_json(&self, ring: &str) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "d": self.d,
            "ring": ring,
            "schema-version": 1,
            "elements": self.elements.iter().map(|e| e.to_json(&self.orders, self.placement)).collect::<Vec<_>>(),
        })
    }
}

/// `dim S(n, d) = binom(n^2 + d - 1, d)`.
pub fn schur_dimension(n: usize, d: usize) -> u64 {
    let v = binomial((n * n + d) as i64 - 1, d as u32);
    u64::try_from(v).expect("dimension fits in u64")
}

/// Exponent maps on the roots `(i, j)`, `i != j`, with total degree at most `cap`.
fn column_choices(n: usize, j: usize, cap: i64) -> Vec<Vec<(Root, u32)>> {
    let roots: Vec<Root> = (1..=n)
        .filter(|&i| i != j)
        .map(|i| Root::new(i, j))
        .collect();
    let mut out = Vec::new();
    fn rec(roots: &[Root], left: u32, cur: &mut Vec<(Root, u32)>, out: &mut Vec<Vec<(Root, u32)>>) {
        let Some((&r, rest)) = roots.split_first() else {
            out.push(cur.clone());
            return;
        };
        for m in 0..=left {
            if m > 0 {
                cur.push((r, m));
            }
            rec(rest, left - m, cur, out);
            if m > 0 {
                cur.pop();
            }
        }
    }
    rec(&roots, cap.max(0) as u32, &mut Vec::new(), &mut out);
    out.sort_by_key(|c| c.iter().map(|(_, m)| *m).sum::<u32>());
    out
}

/// Enumerates `Y_+` or `Y_-`: for each `mu` in `Lambda(n, d)`, every word whose
/// right content is at most `mu`, i.e. for each `j` the factors `x_(i,j)` have total
/// degree at most `mu_j`. Pieces are ordered Cartesian products over `j`.
pub fn enumerate_basis(
    n: usize,
    d: usize,
    side: Side,
    placement: Placement,
    orders: &BasisOrders,
) -> Result<Basis> {
    orders.e.sequence(n)?;
    orders.f.sequence(n)?;
    let mut elements = Vec::new();
    for mu in compositions(n, d) {
        let mut partial: Vec<Vec<(Root, u32)>> = vec![Vec::new()];
        for j in 1..=n {
            let choices = column_choices(n, j, mu[j - 1]);
            let mut next = Vec::with_capacity(partial.len() * choices.len());
            for p in &partial {
                for c in &choices {
                    let mut w = p.clone();
                    w.extend(c.iter().copied());
                    next.push(w);
                }
            }
            partial = next;
        }
        for word in partial {
            let mut a = BTreeMap::new();
            let mut c = BTreeMap::new();
            for (r, m) in word {
                // Block A holds the roots whose sign matches the first letter of the side.
                let first = r.is_positive() == (side == Side::Plus);
                if first {
                    a.insert(r.positive(), m);
                } else {
                    c.insert(r.positive(), m);
                }
            }
            elements.push(BasisElement {
                side,
                a,
                c,
                mu: mu.clone(),
            });
        }
    }
    let index = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, e)| (e, k))
        .collect();
    Ok(Basis {
        n,
        d,
        side,
        placement,
        orders: orders.clone(),
        elements,
        index,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub count: usize,
    pub rank: usize,
    pub expected: u64,
    pub independent: bool,
}

impl BasisReport {
    pub fn pass(&self) -> bool {
        self.independent && self.count as u64 == self.expected
    }
}

/// Evaluates every monomial and compares rank, count and `dim S(n, d)`.
pub fn verify_basis<S: SchurScalar>(
    monomials: &[KostantMonomial],
    alg: &SchurAlgebra<S>,
) -> Result<BasisReport> {
    let ops = monomials
        .iter()
        .map(|m| alg.evaluate(m))
        .collect::<Result<Vec<_>>>()?;
    let rank = span_rank(&ops);
    Ok(BasisReport {
        count: ops.len(),
        rank,
        expected: schur_dimension(alg.n(), alg.d()),
        independent: rank == ops.len(),
    })
}

/// Positive roots indexing `A` and `C`.
pub fn root_index(n: usize) -> Vec<Root> {
    positive_roots(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_sizes_match_product_formula() {
        let b =
            enumerate_basis(3, 3, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
        assert_eq!(b.len(), 165);
        for mu in compositions(3, 3) {
            let expect: i64 = mu
                .iter()
                .map(|&m| binomial(m + 2, m as u32).try_into().unwrap_or(0i64))
                .product();
            assert_eq!(b.piece(&mu).len() as i64, expect);
        }
        assert_eq!(b.piece(&[3, 0, 0]).len(), 10);
        assert_eq!(b.piece(&[2, 1, 0]).len(), 18);
        assert_eq!(b.piece(&[1, 1, 1]).len(), 27);
    }

    #[test]
    fn placements_shift_the_idempotent() {
        let b =
            enumerate_basis(2, 2, Side::Plus, Placement::Right, &BasisOrders::default()).unwrap();
        for e in &b.elements {
            let shown = e
                .monomial(&b.orders, Placement::Middle)
                .unwrap()
                .to_string();
            if e.a.is_empty() && !e.c.is_empty() {
                assert!(shown.starts_with("1["), "{shown}");
            }
        }
        assert_eq!(schur_dimension(2, 2), 10);
        assert_eq!(schur_dimension(3, 3), 165);
    }
}
