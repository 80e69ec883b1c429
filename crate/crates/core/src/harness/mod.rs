//! Verification suites, structure constants, conjecture reports and JSON export.

mod conjectures;
mod constants;
pub mod lattice;

use std::time::Instant;

use serde::Serialize;

use crate::algebra::SchurAlgebra;
use crate::basisgen::{
    enumerate_basis, schur_dimension, verify_basis, BasisOrders, Placement, Side,
};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{add_scaled_root, is_composition_of, Root};
use crate::scalars::ScalarRing;
use crate::tensorrep::relations::{check_family, RelationCheck};
use crate::tensorrep::{minimal_polynomial, GeneratorSet, Operator};

pub use conjectures::{
    cartan_subring_report, conjecture_report, CartanMembership, ConjectureReport, Membership,
};
pub use constants::{specialization_check, structure_constants, StructureConstants};

pub const SCHEMA_VERSION: u32 = 1;

/// `{"n", "d", "ring", "schema-version"}` plus the given fields.
pub fn with_header(
    n: usize,
    d: usize,
    ring: ScalarRing,
    body: serde_json::Value,
) -> serde_json::Value {
    let mut obj =
        serde_json::json!({"n": n, "d": d, "ring": ring.name(), "schema-version": SCHEMA_VERSION});
    if let (Some(o), serde_json::Value::Object(b)) = (obj.as_object_mut(), body) {
        o.extend(b);
    }
    obj
}

/// Rejects instances beyond the desk grid (`n^d <= 256`, `dim S <= 1000`) unless `allow_large`.
pub fn check_desk_scale(n: usize, d: usize, allow_large: bool) -> Result<()> {
    if allow_large {
        return Ok(());
    }
    let tensor = n.checked_pow(d as u32).unwrap_or(usize::MAX);
    if tensor > 256 || schur_dimension(n, d) > 1000 {
        return Err(Error::BoundExceeded(format!(
            "({n},{d}) is beyond the desk grid; pass the large-instance flag"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub d: usize,
    pub ring: ScalarRing,
    pub relations: Vec<RelationCheck>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.relations.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        with_header(
            self.n,
            self.d,
            self.ring,
            serde_json::json!({
                "suite": self.suite,
                "pass": self.pass(),
                "relations": self.relations,
                "elapsed-ms": self.elapsed_ms,
            }),
        )
    }
}

/// Negative control: `H_1 + 1` classically, `v K_1` quantumly.
pub fn perturbed_generators<S: SchurScalar>(g: &GeneratorSet<S>) -> GeneratorSet<S> {
    let op = match S::RING {
        ScalarRing::Classical => g.cartan(1).add(&g.identity()),
        ScalarRing::Quantum => g.cartan(1).scale(&S::v_power(1)),
    };
    g.with_cartan_replaced(1, op)
}

/// Defining relations, minimality of the Cartan annihilators, and the dimension count.
pub fn verify_presentation_on<S: SchurScalar>(alg: &SchurAlgebra<S>) -> Result<VerificationReport> {
    let start = Instant::now();
    let g = alg.generators();
    let (n, d) = (alg.n(), alg.d());
    let mut relations = S::presentation_checks(g);
    let mut minimal = RelationCheck {
        id: "cartan-minimal-polynomial".into(),
        pass: true,
        witness: None,
    };
    for i in 1..=n {
        let p = minimal_polynomial(g.cartan(i), d + 1)?;
        if p.len() != d + 2 {
            minimal = RelationCheck {
                id: minimal.id,
                pass: false,
                witness: Some(format!(
                    "generator {i} has minimal polynomial of degree {}",
                    p.len() - 1
                )),
            };
            break;
        }
    }
    relations.push(minimal);
    let basis = enumerate_basis(n, d, Side::Plus, Placement::Right, &BasisOrders::default())?;
    let report = verify_basis(&basis.monomials(), alg)?;
    relations.push(RelationCheck {
        id: "dimension".into(),
        pass: report.pass(),
        witness: (!report.pass()).then(|| {
            format!(
                "rank {} of {} elements, expected {}",
                report.rank, report.count, report.expected
            )
        }),
    });
    Ok(VerificationReport {
        suite: "presentation".into(),
        n,
        d,
        ring: S::RING,
        relations,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

pub fn verify_presentation<S: SchurScalar>(n: usize, d: usize) -> Result<VerificationReport> {
    verify_presentation_on(&SchurAlgebra::<S>::new(n, d)?)
}

/// The presentation by `e_i`, `f_i` and the idempotents, with the Serre relations,
/// and the reconstruction of the Cartan generators from idempotents.
pub fn verify_idempotent_presentation<S: SchurScalar>(
    n: usize,
    d: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let alg = SchurAlgebra::<S>::new(n, d)?;
    let g = alg.generators();
    let lambdas = alg.compositions().to_vec();
    let idem = lambdas
        .iter()
        .map(|l| alg.idempotent(l))
        .collect::<Result<Vec<_>>>()?;
    let dim = alg.dim();
    let mut relations = Vec::new();

    let mut cases = Vec::new();
    for (a, la) in lambdas.iter().enumerate() {
        for (b, lb) in lambdas.iter().enumerate() {
            let rhs = if a == b {
                idem[a].clone()
            } else {
                Operator::zero(dim)
            };
            cases.push((format!("1{la:?},1{lb:?}"), idem[a].compose(&idem[b]), rhs));
        }
    }
    relations.push(check_family("idempotent-orthogonality", cases));
    let sum = idem.iter().fold(Operator::zero(dim), |acc, x| acc.add(x));
    relations.push(check_family(
        "idempotent-resolution",
        [("sum 1_lambda".to_string(), sum, g.identity())],
    ));

    let shifted = |l: &[i64], r: Root| -> Result<Operator<S>> {
        let w = add_scaled_root(l, r, 1);
        if is_composition_of(&w, d) {
            alg.idempotent(&w)
        } else {
            Ok(Operator::zero(dim))
        }
    };
    let mut cases = Vec::new();
    for i in 1..n {
        for (a, l) in lambdas.iter().enumerate() {
            let up = shifted(l, Root::simple(i))?;
            cases.push((
                format!("e{i},1{l:?}"),
                g.e(i).compose(&idem[a]),
                up.compose(g.e(i)),
            ));
            let down = shifted(l, Root::simple(i).neg())?;
            cases.push((
                format!("f{i},1{l:?}"),
                g.f(i).compose(&idem[a]),
                down.compose(g.f(i)),
            ));
        }
    }
    relations.push(check_family("idempotent-shift", cases));

    let mut cases = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let lhs = g.e(i).compose(g.f(j)).sub(&g.f(j).compose(g.e(i)));
            let mut rhs = Operator::zero(dim);
            if i == j {
                for (a, l) in lambdas.iter().enumerate() {
                    rhs = rhs.add(&idem[a].scale(&S::integer_analogue(l[i - 1] - l[i])));
                }
            }
            cases.push((format!("e{i},f{j}"), lhs, rhs));
        }
    }
    relations.push(check_family("ef-idempotent", cases));

    relations.extend(
        S::presentation_checks(g)
            .into_iter()
            .filter(|c| c.id.starts_with("serre")),
    );

    let mut cases = Vec::new();
    for j in 1..=n {
        cases.push((
            format!("cartan {j}"),
            alg.reconstruct_cartan(j)?,
            g.cartan(j).clone(),
        ));
    }
    relations.push(check_family("cartan-reconstruction", cases));

    Ok(VerificationReport {
        suite: "idempotent".into(),
        n,
        d,
        ring: S::RING,
        relations,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
