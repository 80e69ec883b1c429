//! Commutation rules for pairs of divided root powers.
//!
//! The classical table is Kostant's, valid for any two roots. The quantum
//! table lists the positive/positive and positive/negative cases for an
//! ordered pair of intervals; the remaining cases are derived by solving a
//! listed rule for the reversed product or by applying the anti-automorphism
//! that exchanges positive and negative root vectors and inverts `v`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{KostantFactor, KostantMonomial, LinearCombination, SchurAlgebra};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{root_pairs, root_sum, structure_sign, Configuration, Root, SignPattern};
use crate::scalars::{quantum_factorial, LaurentPolynomial, ScalarRing};

/// How a rule instance was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Derivation {
    /// A rule of the base tables, by id.
    Listed(&'static str),
    /// Solved for the reversed product of the inner rule.
    Solved(Box<Derivation>),
    /// Image of the inner rule under the positive/negative exchange.
    Omega(Box<Derivation>),
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::Listed(id) => f.write_str(id),
            Derivation::Solved(d) => write!(f, "solved({d})"),
            Derivation::Omega(d) => write!(f, "omega({d})"),
        }
    }
}

/// `x y = expansion`, where `x` and `y` are divided root powers.
#[derive(Clone, Debug)]
pub struct Rule<S> {
    pub expansion: LinearCombination<S>,
    pub derivation: Derivation,
}

type Pair = ((Root, u32), (Root, u32));

/// Memoized rule table for one scalar ring.
pub struct RuleTable<S: SchurScalar> {
    cache: Mutex<HashMap<Pair, Arc<Rule<S>>>>,
}

impl<S: SchurScalar> Default for RuleTable<S> {
    fn default() -> Self {
        RuleTable {
            cache: Mutex::new(HashMap::new()),
        }
    }
}

fn lp<S: SchurScalar>(p: LaurentPolynomial) -> S {
    S::from_laurent(&p)
}

fn vp(e: i64) -> LaurentPolynomial {
    LaurentPolynomial::v_power(e)
}

/// Monomial from optional factors, dropping trivial ones.
fn word(parts: Vec<Option<KostantFactor>>) -> KostantMonomial {
    KostantMonomial::new(parts.into_iter().flatten().collect())
}

fn x(root: Root, m: u32) -> Option<KostantFactor> {
    (m > 0).then(|| KostantFactor::root(root, m))
}

fn k_power<S: SchurScalar>(i: usize, e: i64) -> Option<KostantFactor> {
    (e != 0 && S::RING == ScalarRing::Quantum).then_some(KostantFactor::KPower { i, e })
}

fn root_binomial<S: SchurScalar>(root: Root, c: i64, t: u32) -> Option<KostantFactor> {
    if t == 0 {
        return None;
    }
    Some(match S::RING {
        ScalarRing::Classical => KostantFactor::RootHBinomial { root, c, t },
        ScalarRing::Quantum => KostantFactor::RootKBinomial { root, c, t },
    })
}

fn r(i: usize, j: usize) -> Root {
    Root::new(i, j)
}

fn single<S: SchurScalar>(m: KostantMonomial, c: S) -> LinearCombination<S> {
    LinearCombination::single(m, c)
}

fn swapped<S: SchurScalar>(x: (Root, u32), y: (Root, u32), c: S) -> LinearCombination<S> {
    single(KostantMonomial::from_roots(&[y, x]), c)
}

fn omega_image<S: SchurScalar>(lc: &LinearCombination<S>) -> LinearCombination<S> {
    let mut out = LinearCombination::new();
    for (m, c) in lc.iter() {
        out.add_term(m.omega(), c.bar());
    }
    out
}

/// Kostant's formulas, valid for any pair of roots.
fn classical_rule<S: SchurScalar>(x: (Root, u32), y: (Root, u32)) -> Rule<S> {
    let ((a, rr), (b, s)) = (x, y);
    if a == b {
        return Rule {
            expansion: swapped(x, y, S::one()),
            derivation: Derivation::Listed("same-root"),
        };
    }
    if a.neg() == b {
        let mut lc = LinearCombination::new();
        for j in 0..=rr.min(s) {
            let c = 2 * j as i64 - rr as i64 - s as i64;
            lc.add_term(
                word(vec![
                    x_(b, s - j),
                    root_binomial::<S>(a, c, j),
                    x_(a, rr - j),
                ]),
                S::one(),
            );
        }
        return Rule {
            expansion: lc,
            derivation: Derivation::Listed("kostant-opposite"),
        };
    }
    if let Some(g) = root_sum(a, b) {
        let sign = structure_sign(a, b);
        let mut lc = LinearCombination::new();
        for k in 0..=rr.min(s) {
            let c = if sign < 0 && k % 2 == 1 {
                -S::one()
            } else {
                S::one()
            };
            lc.add_term(word(vec![x_(b, s - k), x_(g, k), x_(a, rr - k)]), c);
        }
        return Rule {
            expansion: lc,
            derivation: Derivation::Listed("kostant-sum"),
        };
    }
    Rule {
        expansion: swapped(x, y, S::one()),
        derivation: Derivation::Listed("kostant-commute"),
    }
}

fn x_(root: Root, m: u32) -> Option<KostantFactor> {
    x(root, m)
}

/// The listed positive/positive rules for `X_ij^(M) X_kl^(N)`, `i < j`, `k < l`.
fn quantum_pp_listed<S: SchurScalar>(xx: (Root, u32), yy: (Root, u32)) -> Option<Rule<S>> {
    let ((Root { i, j }, m), (Root { i: k, j: l }, n)) = (xx, yy);
    let (mi, ni) = (m as i64, n as i64);
    if j < k || (k < i && j < l) {
        return Some(Rule {
            expansion: swapped(xx, yy, S::one()),
            derivation: Derivation::Listed("pp-commute"),
        });
    }
    if (i == k && j < l) || (i < k && j == l) {
        return Some(Rule {
            expansion: swapped(xx, yy, S::v_power(-mi * ni)),
            derivation: Derivation::Listed("pp-shared-endpoint"),
        });
    }
    if j == k {
        let mut lc = LinearCombination::new();
        for t in 0..=m.min(n) {
            let ti = t as i64;
            let c = S::v_power((mi - ti) * (ni - ti) + ti);
            lc.add_term(
                word(vec![x(r(k, l), n - t), x(r(i, l), t), x(r(i, j), m - t)]),
                c,
            );
        }
        return Some(Rule {
            expansion: lc,
            derivation: Derivation::Listed("pp-meet"),
        });
    }
    if i < k && k < j && j < l {
        let mut lc = LinearCombination::new();
        for t in 0..=m.min(n) {
            let ti = t as i64;
            let c = &(&vp(-ti * (ti - 1) / 2) * &(&vp(-1) - &vp(1)).pow(t)) * &quantum_factorial(t);
            lc.add_term(
                word(vec![
                    x(r(k, j), t),
                    x(r(k, l), n - t),
                    x(r(i, j), m - t),
                    x(r(i, l), t),
                ]),
                lp::<S>(c),
            );
        }
        return Some(Rule {
            expansion: lc,
            derivation: Derivation::Listed("pp-overlap"),
        });
    }
    None
}

/// The listed positive/negative rules for `X_ij^(M) X_lk^(N)`, `i < j`, `k < l`.
fn quantum_pm_listed<S: SchurScalar>(xx: (Root, u32), yy: (Root, u32)) -> Option<Rule<S>> {
    let ((Root { i, j }, m), (Root { i: l, j: k }, n)) = (xx, yy);
    let (mi, ni) = (m as i64, n as i64);
    let mut lc = LinearCombination::new();
    let id = if j <= k || (k < i && j < l) {
        lc = swapped(xx, yy, S::one());
        "pm-commute"
    } else if i < k && k < j && j == l {
        for t in 0..=m.min(n) {
            let ti = t as i64;
            lc.add_term(
                word(vec![
                    x(r(j, k), n - t),
                    k_power::<S>(k, -ti),
                    k_power::<S>(j, ti),
                    x(r(i, j), m - t),
                    x(r(i, k), t),
                ]),
                S::v_power(ti * (ni - ti - 1)),
            );
        }
        "pm-shared-right"
    } else if i == k && j < l {
        for t in 0..=m.min(n) {
            let ti = t as i64;
            let mut c = S::v_power(ti * (mi - ti));
            if t % 2 == 1 {
                c = -c;
            }
            lc.add_term(
                word(vec![
                    x(r(l, j), t),
                    x(r(l, k), n - t),
                    k_power::<S>(i, -ti),
                    k_power::<S>(j, ti),
                    x(r(i, j), m - t),
                ]),
                c,
            );
        }
        "pm-shared-left"
    } else if i == k && j == l {
        for t in 0..=m.min(n) {
            let c = 2 * t as i64 - mi - ni;
            lc.add_term(
                word(vec![
                    x(r(j, i), n - t),
                    root_binomial::<S>(r(i, j), c, t),
                    x(r(i, j), m - t),
                ]),
                S::one(),
            );
        }
        "pm-coincide"
    } else if i < k && k < j && j < l {
        for t in 0..=m.min(n) {
            let ti = t as i64;
            let xi = &(&vp(ti * (2 * ni - 3 * ti - 1) / 2) * &(&vp(1) - &vp(-1)).pow(t))
                * &quantum_factorial(t);
            lc.add_term(
                word(vec![
                    x(r(l, k), n - t),
                    x(r(l, j), t),
                    k_power::<S>(k, -ti),
                    k_power::<S>(j, ti),
                    x(r(i, j), m - t),
                    x(r(i, k), t),
                ]),
                lp::<S>(xi),
            );
        }
        "pm-overlap"
    } else {
        return None;
    };
    Some(Rule {
        expansion: lc,
        derivation: Derivation::Listed(id),
    })
}

/// `x y` from a rule for `y x` in which `x y` appears with a unit coefficient.
fn solve<S: SchurScalar>(x: (Root, u32), y: (Root, u32), reversed: Rule<S>) -> Result<Rule<S>> {
    let target = KostantMonomial::from_roots(&[x, y]);
    let c0 = reversed.expansion.coefficient(&target);
    if c0.is_zero() {
        return Err(Error::NoRule(format!(
            "{target}: reversed rule lacks the leading term"
        )));
    }
    let inv = S::one().div_ref(&c0);
    let mut lc = LinearCombination::single(KostantMonomial::from_roots(&[y, x]), inv.clone());
    for (m, c) in reversed.expansion.iter() {
        if *m != target {
            lc.add_term(m.clone(), -c.mul_ref(&inv));
        }
    }
    Ok(Rule {
        expansion: lc,
        derivation: Derivation::Solved(Box::new(reversed.derivation)),
    })
}

fn omega_pair(p: (Root, u32)) -> (Root, u32) {
    (p.0.neg(), p.1)
}

fn quantum_rule<S: SchurScalar>(x: (Root, u32), y: (Root, u32)) -> Result<Rule<S>> {
    if x.0 == y.0 {
        return Ok(Rule {
            expansion: swapped(x, y, S::one()),
            derivation: Derivation::Listed("same-root"),
        });
    }
    let no_rule = || Error::NoRule(format!("{:?}^({}) {:?}^({})", x.0, x.1, y.0, y.1));
    match SignPattern::of(x.0, y.0) {
        SignPattern::PlusPlus => match quantum_pp_listed(x, y) {
            Some(rule) => Ok(rule),
            None => solve(x, y, quantum_pp_listed(y, x).ok_or_else(no_rule)?),
        },
        SignPattern::PlusMinus => match quantum_pm_listed(x, y) {
            Some(rule) => Ok(rule),
            None => {
                // Omega(x y) = Omega(y) Omega(x), again positive then negative.
                let inner =
                    quantum_pm_listed::<S>(omega_pair(y), omega_pair(x)).ok_or_else(no_rule)?;
                Ok(Rule {
                    expansion: omega_image(&inner.expansion),
                    derivation: Derivation::Omega(Box::new(inner.derivation)),
                })
            }
        },
        SignPattern::MinusMinus => {
            let inner = quantum_rule::<S>(omega_pair(y), omega_pair(x))?;
            Ok(Rule {
                expansion: omega_image(&inner.expansion),
                derivation: Derivation::Omega(Box::new(inner.derivation)),
            })
        }
        SignPattern::MinusPlus => solve(x, y, quantum_rule(y, x)?),
    }
}

impl<S: SchurScalar> RuleTable<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Expansion of `x y` for divided root powers `x`, `y`.
    pub fn commute_pair(&self, x: (Root, u32), y: (Root, u32)) -> Result<Arc<Rule<S>>> {
        if let Some(rule) = self.cache.lock().unwrap().get(&(x, y)) {
            return Ok(rule.clone());
        }
        let rule = Arc::new(match S::RING {
            ScalarRing::Classical => classical_rule(x, y),
            ScalarRing::Quantum => quantum_rule(x, y)?,
        });
        self.cache.lock().unwrap().insert((x, y), rule.clone());
        Ok(rule)
    }
}

/// One row of the derived rule catalogue.
#[derive(Clone, Debug, Serialize)]
pub struct RuleVariant {
    pub pattern: SignPattern,
    pub configuration: Configuration,
    pub example: (Root, Root),
    pub derivation: String,
}

/// For each sign pattern and ordered interval configuration realizable in rank
/// `n`, the derivation the table uses.
pub fn derive_rule_variants<S: SchurScalar>(
    table: &RuleTable<S>,
    n: usize,
) -> Result<Vec<RuleVariant>> {
    let mut out: Vec<RuleVariant> = Vec::new();
    for (a, b) in root_pairs(n) {
        let pattern = SignPattern::of(a, b);
        let configuration = Configuration::of(a, b);
        if out
            .iter()
            .any(|v| v.pattern == pattern && v.configuration == configuration)
        {
            continue;
        }
        let rule = table.commute_pair((a, 1), (b, 1))?;
        out.push(RuleVariant {
            pattern,
            configuration,
            example: (a, b),
            derivation: rule.derivation.to_string(),
        });
    }
    out.sort_by_key(|v| (v.pattern, v.configuration));
    Ok(out)
}

/// Result of checking one rule instance against the tensor-space action.
#[derive(Clone, Debug, Serialize)]
pub struct RuleCheck {
    pub pair: String,
    pub derivation: String,
    pub pass: bool,
}

/// Checks every rule instance `x^(r) y^(s)` with `1 <= r, s <= max_power` as an operator identity.
pub fn check_rule_soundness<S: SchurScalar>(
    table: &RuleTable<S>,
    alg: &SchurAlgebra<S>,
    max_power: u32,
) -> Result<Vec<RuleCheck>> {
    let mut out = Vec::new();
    for (a, b) in root_pairs(alg.n()) {
        for rr in 1..=max_power {
            for s in 1..=max_power {
                let rule = table.commute_pair((a, rr), (b, s))?;
                let lhs = alg.evaluate(&KostantMonomial::from_roots(&[(a, rr), (b, s)]))?;
                let rhs = alg.evaluate_combination(&rule.expansion)?;
                out.push(RuleCheck {
                    pair: format!("{}", KostantMonomial::from_roots(&[(a, rr), (b, s)])),
                    derivation: rule.derivation.to_string(),
                    pass: lhs == rhs,
                });
            }
        }
    }
    Ok(out)
}
