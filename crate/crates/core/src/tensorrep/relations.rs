//! Defining relations of the generator presentations, checked as operator identities.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::scalars::{quantum_integer, Field, RationalFunction};

use super::{GeneratorSet, Operator};

/// Outcome of one family of relations. `witness` names the first failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub id: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Checks `lhs == rhs` for every instance, stopping at the first failure.
pub fn check_family<S, I>(id: &str, cases: I) -> RelationCheck
where
    S: Field,
    I: IntoIterator<Item = (String, Operator<S>, Operator<S>)>,
{
    for (label, lhs, rhs) in cases {
        if lhs != rhs {
            return RelationCheck {
                id: id.to_string(),
                pass: false,
                witness: Some(label),
            };
        }
    }
    RelationCheck {
        id: id.to_string(),
        pass: true,
        witness: None,
    }
}

/// `(e_i, alpha_j)` for the standard pairing.
fn pairing(i: usize, j: usize) -> i64 {
    (i == j) as i64 - (i == j + 1) as i64
}

fn serre_cases<S: Field>(
    n: usize,
    gen: impl Fn(usize) -> Operator<S>,
    middle: S,
    name: &str,
) -> Vec<(String, Operator<S>, Operator<S>)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            let (a, b) = (gen(i), gen(j));
            let label = format!("{name}{i},{name}{j}");
            if i.abs_diff(j) == 1 {
                let aab = a.compose(&a).compose(&b);
                let aba = a.compose(&b).compose(&a).scale(&middle);
                let baa = b.compose(&a).compose(&a);
                let lhs = aab.sub(&aba).add(&baa);
                out.push((label, lhs, Operator::zero(a.dim())));
            } else {
                out.push((label, a.compose(&b), b.compose(&a)));
            }
        }
    }
    out
}

pub fn classical_presentation_checks(g: &GeneratorSet<BigRational>) -> Vec<RelationCheck> {
    let n = g.n;
    let dim = g.dim();
    let q = |k: i64| BigRational::from_integer(k.into());
    let h = |i: usize| g.cartan(i).clone();
    let mut out = Vec::new();

    let mut cases = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            cases.push((
                format!("H{i},H{j}"),
                h(i).compose(&h(j)),
                h(j).compose(&h(i)),
            ));
        }
    }
    out.push(check_family("cartan-commute", cases));

    let mut cases = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let lhs = g.e(i).compose(g.f(j)).sub(&g.f(j).compose(g.e(i)));
            let rhs = if i == j {
                h(j).sub(&h(j + 1))
            } else {
                Operator::zero(dim)
            };
            cases.push((format!("e{i},f{j}"), lhs, rhs));
        }
    }
    out.push(check_family("ef-commutator", cases));

    let mut cases = Vec::new();
    for i in 1..=n {
        for j in 1..n {
            let p = q(pairing(i, j));
            let lhs = h(i).compose(g.e(j)).sub(&g.e(j).compose(&h(i)));
            cases.push((format!("H{i},e{j}"), lhs, g.e(j).scale(&p)));
            let lhs = h(i).compose(g.f(j)).sub(&g.f(j).compose(&h(i)));
            cases.push((format!("H{i},f{j}"), lhs, g.f(j).scale(&-p)));
        }
    }
    out.push(check_family("cartan-weight", cases));

    out.push(check_family(
        "serre-e",
        serre_cases(n, |i| g.e(i).clone(), q(2), "e"),
    ));
    out.push(check_family(
        "serre-f",
        serre_cases(n, |i| g.f(i).clone(), q(2), "f"),
    ));

    let sum = (1..=n).fold(Operator::zero(dim), |acc, i| acc.add(&h(i)));
    out.push(check_family(
        "cartan-sum",
        [(
            "sum H".to_string(),
            sum,
            Operator::scalar(dim, q(g.d as i64)),
        )],
    ));

    let mut cases = Vec::new();
    for i in 1..=n {
        let mut prod = Operator::identity(dim);
        for k in 0..=g.d as i64 {
            prod = prod.compose(&h(i).sub(&Operator::scalar(dim, q(k))));
        }
        cases.push((format!("H{i}"), prod, Operator::zero(dim)));
    }
    out.push(check_family("cartan-annihilator", cases));
    out
}

pub fn quantum_presentation_checks(g: &GeneratorSet<RationalFunction>) -> Vec<RelationCheck> {
    let n = g.n;
    let dim = g.dim();
    let vp = |k: i64| RationalFunction::v_power(k);
    let k = |i: usize| g.cartan(i).clone();
    let kinv = |i: usize| g.cartan_inv(i).clone();
    let mut out = Vec::new();

    let mut cases = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            cases.push((
                format!("K{i},K{j}"),
                k(i).compose(&k(j)),
                k(j).compose(&k(i)),
            ));
        }
        cases.push((
            format!("K{i},K{i}^-1"),
            k(i).compose(&kinv(i)),
            g.identity(),
        ));
        cases.push((
            format!("K{i}^-1,K{i}"),
            kinv(i).compose(&k(i)),
            g.identity(),
        ));
    }
    out.push(check_family("cartan-commute", cases));

    let denom = vp(1).sub_ref(&vp(-1));
    let mut cases = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let lhs = g.e(i).compose(g.f(j)).sub(&g.f(j).compose(g.e(i)));
            let rhs = if i == j {
                let kt = k(i).compose(&kinv(i + 1));
                let kt_inv = kinv(i).compose(&k(i + 1));
                kt.sub(&kt_inv)
                    .scale(&RationalFunction::one().div_ref(&denom))
            } else {
                Operator::zero(dim)
            };
            cases.push((format!("E{i},F{j}"), lhs, rhs));
        }
    }
    out.push(check_family("ef-commutator", cases));

    let mut cases = Vec::new();
    for i in 1..=n {
        for j in 1..n {
            let p = pairing(i, j);
            cases.push((
                format!("K{i},E{j}"),
                k(i).compose(g.e(j)),
                g.e(j).compose(&k(i)).scale(&vp(p)),
            ));
            cases.push((
                format!("K{i},F{j}"),
                k(i).compose(g.f(j)),
                g.f(j).compose(&k(i)).scale(&vp(-p)),
            ));
        }
    }
    out.push(check_family("cartan-weight", cases));

    let two = RationalFunction::from_laurent(quantum_integer(2));
    out.push(check_family(
        "serre-e",
        serre_cases(n, |i| g.e(i).clone(), two.clone(), "E"),
    ));
    out.push(check_family(
        "serre-f",
        serre_cases(n, |i| g.f(i).clone(), two, "F"),
    ));

    let prod = (1..=n).fold(g.identity(), |acc, i| acc.compose(&k(i)));
    out.push(check_family(
        "cartan-product",
        [(
            "prod K".to_string(),
            prod,
            Operator::scalar(dim, vp(g.d as i64)),
        )],
    ));

    let mut cases = Vec::new();
    for i in 1..=n {
        let mut prod = g.identity();
        for e in 0..=g.d as i64 {
            prod = prod.compose(&k(i).sub(&Operator::scalar(dim, vp(e))));
        }
        cases.push((format!("K{i}"), prod, Operator::zero(dim)));
    }
    out.push(check_family("cartan-annihilator", cases));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorrep::{build_classical_generators, build_quantum_generators_with, Convention};

    #[test]
    fn classical_relations_hold() {
        for (n, d) in [(2, 1), (2, 3), (3, 2), (4, 2)] {
            let g = build_classical_generators(n, d).unwrap();
            for c in classical_presentation_checks(&g) {
                assert!(c.pass, "({n},{d}) {} failed at {:?}", c.id, c.witness);
            }
        }
    }

    #[test]
    fn both_quantum_conventions_satisfy_relations() {
        for conv in [Convention::TwistRight, Convention::TwistLeft] {
            let g = build_quantum_generators_with(3, 2, conv).unwrap();
            for c in quantum_presentation_checks(&g) {
                assert!(c.pass, "{conv:?} {} failed at {:?}", c.id, c.witness);
            }
        }
    }

    #[test]
    fn perturbed_cartan_is_caught() {
        let g = build_classical_generators(2, 2).unwrap();
        let bad = g.cartan(1).add(&Operator::identity(g.dim()));
        let g = g.with_cartan_replaced(1, bad);
        let checks = classical_presentation_checks(&g);
        let ef = checks.iter().find(|c| c.id == "ef-commutator").unwrap();
        assert!(!ef.pass);
        assert_eq!(ef.witness.as_deref(), Some("e1,f1"));
    }
}
