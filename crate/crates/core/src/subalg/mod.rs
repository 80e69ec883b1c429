//! Borel subalgebras and the Hecke algebra `1_omega S(d, d) 1_omega`.

use serde::Serialize;

use crate::algebra::{KostantFactor, KostantMonomial, SchurAlgebra};
use crate::basisgen::{enumerate_basis, BasisElement, BasisOrders, Placement, Side};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{bounded_vectors_avoiding, Root, RootOrder, Weight};
use crate::scalars::binomial;
use crate::tensorrep::relations::check_family;
use crate::tensorrep::relations::RelationCheck;
use crate::tensorrep::{span_rank, Operator};

/// `{check, parameters, pass, witness}`.
#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraReport {
    pub check: String,
    pub parameters: serde_json::Value,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub count: usize,
    pub rank: usize,
    pub expected: usize,
}

impl RankReport {
    pub fn pass(&self) -> bool {
        self.count == self.expected && self.rank == self.count
    }
}

fn rank_report<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    set: &[KostantMonomial],
    expected: usize,
) -> Result<RankReport> {
    let ops = set
        .iter()
        .map(|m| alg.evaluate(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankReport {
        count: set.len(),
        rank: span_rank(&ops),
        expected,
    })
}

/// Exponent vectors on `k` variables with total exactly `total`.
fn vectors_of_total(k: usize, total: usize) -> Vec<Vec<u32>> {
    bounded_vectors_avoiding(k, total, None)
        .into_iter()
        .filter(|v| v.iter().sum::<u32>() as usize == total)
        .collect()
}

fn ordered_word(seq: &[Root], exps: &[u32], negate: bool) -> KostantMonomial {
    KostantMonomial::new(
        seq.iter()
            .zip(exps)
            .filter(|(_, &m)| m > 0)
            .map(|(r, &m)| KostantFactor::root(if negate { r.neg() } else { *r }, m))
            .collect(),
    )
}

/// `E_A = 0` and `F_C = 0` whenever `d < |A| <= d + 2`, and some `E_A` with `|A| = d` is nonzero.
pub fn borel_vanishing_check<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    orders: &BasisOrders,
) -> Result<SubalgebraReport> {
    let (n, d) = (alg.n(), alg.d());
    let es = orders.e.sequence(n)?;
    let fs = orders.f.sequence(n)?;
    let zero = Operator::zero(alg.dim());
    let mut witness = None;
    let mut checked = 0;
    'outer: for total in d + 1..=d + 2 {
        for v in vectors_of_total(es.len(), total) {
            for (seq, negate) in [(&es, false), (&fs, true)] {
                let w = ordered_word(seq, &v, negate);
                checked += 1;
                if alg.evaluate(&w)? != zero {
                    witness = Some(format!("{w} is nonzero"));
                    break 'outer;
                }
            }
        }
    }
    let mut top_nonzero = false;
    for v in vectors_of_total(es.len(), d) {
        if alg.evaluate(&ordered_word(&es, &v, false))? != zero {
            top_nonzero = true;
            break;
        }
    }
    if witness.is_none() && !top_nonzero {
        witness = Some(format!("every E_A with |A| = {d} vanishes"));
    }
    Ok(SubalgebraReport {
        check: "borel-vanishing".into(),
        parameters: serde_json::json!({"n": n, "d": d, "ring": alg.ring(), "checked": checked}),
        pass: witness.is_none(),
        witness,
    })
}

/// `{E_A : |A| <= d}` in the given order on the positive roots.
pub fn borel_plus_basis<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    order: &RootOrder,
) -> Result<(Vec<KostantMonomial>, RankReport)> {
    let (n, d) = (alg.n(), alg.d());
    let seq = order.sequence(n)?;
    let set: Vec<KostantMonomial> = bounded_vectors_avoiding(seq.len(), d, None)
        .iter()
        .map(|v| ordered_word(&seq, v, false))
        .collect();
    let expected = binomial((seq.len() + d) as i64, d as u32);
    let report = rank_report(alg, &set, usize::try_from(expected).expect("small count"))?;
    Ok((set, report))
}

/// `{E_A 1_lambda : chi(E_A) <= lambda}` for `Side::Plus`, or the `F_A 1_lambda`
/// set for `Side::Minus`: the elements of the full basis with no second block.
pub fn borel_idempotent_basis<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
    side: Side,
    orders: &BasisOrders,
) -> Result<(Vec<BasisElement>, RankReport)> {
    let full = enumerate_basis(alg.n(), alg.d(), side, Placement::Right, orders)?;
    let elements: Vec<BasisElement> = full
        .elements
        .iter()
        .filter(|e| e.c.is_empty())
        .cloned()
        .collect();
    let set = elements
        .iter()
        .map(|e| e.monomial(orders, Placement::Right))
        .collect::<Result<Vec<_>>>()?;
    let report = rank_report(alg, &set, elements.len())?;
    Ok((elements, report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HeckeForm {
    /// `t_i = 1_omega E_i F_i 1_omega`
    LowercaseT,
    /// `T_i = v^2 1_omega - v t_i`
    UppercaseT,
}

#[derive(Clone)]
pub struct HeckeGenerator<S> {
    pub index: usize,
    pub operator: Operator<S>,
    pub form: HeckeForm,
}

/// The Hecke generators in `S(n, d)` with `omega = (1^d, 0^(n-d))`, and the
/// two presentation suites.
#[derive(Clone)]
pub struct HeckeAlgebra<S> {
    pub d: usize,
    pub omega: Weight,
    pub unit: Operator<S>,
    pub generators: Vec<HeckeGenerator<S>>,
    pub checks: Vec<RelationCheck>,
}

impl<S: SchurScalar> HeckeAlgebra<S> {
    pub fn t(&self, i: usize) -> &Operator<S> {
        &self.by_form(i, HeckeForm::LowercaseT).operator
    }

    pub fn big_t(&self, i: usize) -> &Operator<S> {
        &self.by_form(i, HeckeForm::UppercaseT).operator
    }

    fn by_form(&self, i: usize, form: HeckeForm) -> &HeckeGenerator<S> {
        self.generators
            .iter()
            .find(|g| g.index == i && g.form == form)
            .expect("generator index in range")
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn omega(n: usize, d: usize) -> Weight {
    (0..n).map(|k| (k < d) as i64).collect()
}

fn require_rank<S: SchurScalar>(alg: &SchurAlgebra<S>) -> Result<()> {
    if alg.d() < 2 || alg.n() < alg.d() {
        return Err(Error::InvalidArgument(format!(
            "Hecke extraction needs n >= d >= 2, got n = {}, d = {}",
            alg.n(),
            alg.d()
        )));
    }
    Ok(())
}

/// Builds `t_i`, `T_i` for `1 <= i < d` and checks the quadratic, far-commutation
/// and braid relations in both normalizations.
pub fn hecke_build<S: SchurScalar>(alg: &SchurAlgebra<S>) -> Result<HeckeAlgebra<S>> {
    require_rank(alg)?;
    let d = alg.d();
    let om = omega(alg.n(), d);
    let unit = alg.idempotent(&om)?;
    let q = S::v_power(2);
    let g = alg.generators();
    let mut generators = Vec::new();
    for i in 1..d {
        let t = unit.compose(g.e(i)).compose(g.f(i)).compose(&unit);
        let big = unit.scale(&q).sub(&t.scale(&S::v_power(1)));
        generators.push(HeckeGenerator {
            index: i,
            operator: t,
            form: HeckeForm::LowercaseT,
        });
        generators.push(HeckeGenerator {
            index: i,
            operator: big,
            form: HeckeForm::UppercaseT,
        });
    }
    let mut h = HeckeAlgebra {
        d,
        omega: om,
        unit,
        generators,
        checks: Vec::new(),
    };
    let two = S::integer_analogue(2);
    let q_minus_one = q.sub_ref(&S::one());
    let mut checks = Vec::new();
    checks.push(check_family(
        "hecke-quadratic",
        (1..d).map(|i| (format!("t{i}"), h.t(i).compose(h.t(i)), h.t(i).scale(&two))),
    ));
    checks.push(check_family(
        "hecke-far-commute",
        far_pairs(d).map(|(i, j)| {
            (
                format!("t{i},t{j}"),
                h.t(i).compose(h.t(j)),
                h.t(j).compose(h.t(i)),
            )
        }),
    ));
    checks.push(check_family(
        "hecke-braid",
        (1..d.saturating_sub(1)).map(|i| {
            let (a, b) = (h.t(i), h.t(i + 1));
            (
                format!("t{i},t{}", i + 1),
                a.compose(b).compose(a).sub(a),
                b.compose(a).compose(b).sub(b),
            )
        }),
    ));
    checks.push(check_family(
        "iwahori-quadratic",
        (1..d).map(|i| {
            let t = h.big_t(i);
            (
                format!("T{i}"),
                t.compose(t),
                t.scale(&q_minus_one).add(&h.unit.scale(&q)),
            )
        }),
    ));
    checks.push(check_family(
        "iwahori-far-commute",
        far_pairs(d).map(|(i, j)| {
            (
                format!("T{i},T{j}"),
                h.big_t(i).compose(h.big_t(j)),
                h.big_t(j).compose(h.big_t(i)),
            )
        }),
    ));
    checks.push(check_family(
        "iwahori-braid",
        (1..d.saturating_sub(1)).map(|i| {
            let (a, b) = (h.big_t(i), h.big_t(i + 1));
            (
                format!("T{i},T{}", i + 1),
                a.compose(b).compose(a),
                b.compose(a).compose(b),
            )
        }),
    ));
    h.checks = checks;
    Ok(h)
}

fn far_pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..d).flat_map(move |i| (i + 2..d).map(move |j| (i, j)))
}

/// Elements `e_A 1_lambda f_C` of `Y_+` with both idempotent weights equal to `omega`,
/// with the rank of their evaluations.
pub fn hecke_basis<S: SchurScalar>(
    alg: &SchurAlgebra<S>,
) -> Result<(Vec<BasisElement>, RankReport)> {
    require_rank(alg)?;
    let om = omega(alg.n(), alg.d());
    let orders = BasisOrders::default();
    let full = enumerate_basis(alg.n(), alg.d(), Side::Plus, Placement::Middle, &orders)?;
    let elements: Vec<BasisElement> = full
        .elements
        .into_iter()
        .filter(|e| e.mu == om && e.lambda(Placement::Left) == om)
        .collect();
    let set = elements
        .iter()
        .map(|e| e.monomial(&orders, Placement::Middle))
        .collect::<Result<Vec<_>>>()?;
    let factorial: usize = (1..=alg.d()).product();
    let report = rank_report(alg, &set, factorial)?;
    Ok((elements, report))
}

/// `1_omega E_i F_i 1_omega = 1_omega F_i E_i 1_omega` for all `i < d`.
pub fn hecke_symmetry_check<S: SchurScalar>(alg: &SchurAlgebra<S>) -> Result<RelationCheck> {
    require_rank(alg)?;
    let unit = alg.idempotent(&omega(alg.n(), alg.d()))?;
    let g = alg.generators();
    Ok(check_family(
        "hecke-ef-symmetry",
        (1..alg.d()).map(|i| {
            let ef = unit.compose(g.e(i)).compose(g.f(i)).compose(&unit);
            let fe = unit.compose(g.f(i)).compose(g.e(i)).compose(&unit);
            (format!("i={i}"), ef, fe)
        }),
    ))
}
