use std::collections::VecDeque;

use serde::Serialize;

use crate::algebra::{KostantFactor, KostantMonomial, SchurAlgebra};
use crate::basisgen::{
    enumerate_conjecture_sets, schur_dimension, BasisOrders, ConjectureKind, Side,
};
use crate::error::Result;
use crate::ring::SchurScalar;
use crate::scalars::ScalarRing;
use crate::subalg::borel_idempotent_basis;
use crate::tensorrep::linalg::flatten;
use crate::tensorrep::{span_rank, Echelon, Operator};

use super::lattice::{IntLattice, IntVector, LaurentVector, UnitPivotEchelon};
use super::with_header;

/// Rank outcome for one candidate set; never asserted by the harness itself.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub kind: ConjectureKind,
    pub n: usize,
    pub d: usize,
    pub ring: ScalarRing,
    pub i0: usize,
    pub count: usize,
    pub rank: usize,
    /// Dimension of the algebra the set should be a basis of.
    pub expected: usize,
    pub membership: Option<Vec<CartanMembership>>,
}

impl ConjectureReport {
    pub fn independent(&self) -> bool {
        self.rank == self.count
    }

    pub fn spanning(&self) -> bool {
        self.rank == self.expected
    }

    /// Rank, count and expected dimension all agree.
    pub fn equal(&self) -> bool {
        self.independent() && self.spanning()
    }

    pub fn to_json(&self) -> serde_json::Value {
        with_header(
            self.n,
            self.d,
            self.ring,
            serde_json::json!({
                "kind": self.kind,
                "i0": self.i0,
                "count": self.count,
                "rank": self.rank,
                "expected": self.expected,
                "equal": self.equal(),
                "membership": self.membership,
            }),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NotMember,
    /// No integral certificate was found; the quantum search is one-sided.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CartanMembership {
    pub target: String,
    /// In the span over the fraction field.
    pub field: bool,
    pub integral: Membership,
}

pub fn conjecture_report<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    kind: ConjectureKind,
    i0: usize,
    orders: &BasisOrders,
) -> Result<ConjectureReport> {
    let (n, d) = (alg.n(), alg.d());
    if kind == ConjectureKind::CartanSubring {
        let membership = cartan_subring_report(alg)?;
        let count = membership.len();
        let rank = membership
            .iter()
            .filter(|m| m.integral == Membership::Member)
            .count();
        return Ok(ConjectureReport {
            kind,
            n,
            d,
            ring: S::RING,
            i0,
            count,
            rank,
            expected: count,
            membership: Some(membership),
        });
    }
    let set = enumerate_conjecture_sets(n, d, i0, kind, S::RING, orders)?;
    let ops = set
        .iter()
        .map(|m| alg.evaluate(m))
        .collect::<Result<Vec<_>>>()?;
    let expected = match kind {
        ConjectureKind::Borel => borel_idempotent_basis(alg, Side::Plus, orders)?.0.len(),
        _ => schur_dimension(n, d) as usize,
    };
    Ok(ConjectureReport {
        kind,
        n,
        d,
        ring: S::RING,
        i0,
        count: set.len(),
        rank: span_rank(&ops),
        expected,
        membership: None,
    })
}

fn laurent_vector<S: SchurScalar>(op: &Operator<S>) -> Option<LaurentVector> {
    flatten(op)
        .into_iter()
        .map(|(k, x)| x.as_laurent().map(|p| (k, p)))
        .collect()
}

fn int_vector(v: &LaurentVector) -> Option<IntVector> {
    v.iter()
        .map(|(k, p)| p.is_constant().then(|| (*k, p.coeff(0))))
        .collect()
}

/// Whether each `binom(H_i, t)` (or `[K_i; 0, t]`), `1 <= t <= d`, lies in the subring
/// generated by the divided powers of the simple root vectors.
///
/// Field membership is decided exactly. Integral membership is decided by a
/// lattice closure classically; quantumly a unit-pivot search either certifies
/// membership or reports `Inconclusive`.
pub fn cartan_subring_report<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
) -> Result<Vec<CartanMembership>> {
    let (n, d) = (alg.n(), alg.d());
    let gens = enumerate_conjecture_sets(
        n,
        d,
        1,
        ConjectureKind::CartanSubring,
        S::RING,
        &BasisOrders::default(),
    )?
    .iter()
    .map(|m| alg.evaluate(m))
    .collect::<Result<Vec<_>>>()?;

    let mut field = Echelon::new(false);
    let mut queue = VecDeque::from([alg.identity()]);
    let _ = field.insert(flatten(&alg.identity()));
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = g.compose(&x);
            if field.insert(flatten(&y)).is_ok() {
                queue.push_back(y);
            }
        }
    }

    let mut lattice = IntLattice::new();
    let mut unit = UnitPivotEchelon::new();
    let mut integral_ok = true;
    let mut queue = VecDeque::from([alg.identity()]);
    let mut first = true;
    while let Some(x) = queue.pop_front() {
        let candidates = if first {
            vec![x]
        } else {
            gens.iter().map(|g| g.compose(&x)).collect()
        };
        first = false;
        for y in candidates {
            let Some(lv) = laurent_vector(&y) else {
                integral_ok = false;
                continue;
            };
            let grew = match S::RING {
                ScalarRing::Classical => match int_vector(&lv) {
                    Some(iv) => lattice.insert(iv),
                    None => {
                        integral_ok = false;
                        false
                    }
                },
                ScalarRing::Quantum => unit.insert(lv),
            };
            if grew {
                queue.push_back(y);
            }
        }
    }

    let mut out = Vec::new();
    for i in 1..=n {
        for t in 1..=d as u32 {
            let m = KostantMonomial::new(vec![KostantFactor::CartanBinomial { i, c: 0, t }]);
            let op = alg.evaluate(&m)?;
            let in_field = field.contains(flatten(&op));
            let integral = match (laurent_vector(&op), S::RING) {
                (Some(lv), ScalarRing::Classical) if integral_ok => match int_vector(&lv) {
                    Some(iv) if lattice.contains(&iv) => Membership::Member,
                    Some(_) => Membership::NotMember,
                    None => Membership::Inconclusive,
                },
                (Some(lv), ScalarRing::Quantum) if unit.certifies(&lv) => Membership::Member,
                _ => Membership::Inconclusive,
            };
            out.push(CartanMembership {
                target: m.to_string(),
                field: in_field,
                integral,
            });
        }
    }
    Ok(out)
}
