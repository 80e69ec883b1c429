//! Rewriting Kostant monomials into an integral basis using commutation rules only.
//!
//! A monomial is first split over the weight spaces by moving every Cartan
//! factor and idempotent to the right, where it evaluates to a scalar. Each
//! resulting term is a word of divided root powers followed by `1_mu`. Terms
//! whose right content exceeds `mu` are pushed towards zero by moving the
//! offending factors right; the remaining terms are sorted into the target
//! product order.

pub mod rules;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{KostantFactor, KostantMonomial, SchurAlgebra};
use crate::basisgen::{
    enumerate_basis, Basis, BasisElement, BasisOrders, CoordinateVector, Placement, Side,
};
use crate::error::{Error, Result};
use crate::ring::SchurScalar;
use crate::rootdata::{add_scaled_root, compositions, Root, Weight};

pub use rules::{
    check_rule_soundness, derive_rule_variants, Derivation, Rule, RuleCheck, RuleTable, RuleVariant,
};

/// A word of divided root powers followed by the idempotent `1_mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Term {
    pub word: Vec<(Root, u32)>,
    pub mu: Weight,
}

impl Term {
    pub fn monomial(&self) -> KostantMonomial {
        KostantMonomial::from_roots(&self.word).with(KostantFactor::Idempotent(self.mu.clone()))
    }
}

/// Progress measure, compared lexicographically in field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Measure {
    pub degree: u32,
    /// `sum_j max(0, chi_j - mu_j)` for the right content `chi`.
    pub deviation: i64,
    /// Good factors trapped right of bad factors, for the first violated index.
    pub defect: usize,
    /// Pairs of factors out of target order.
    pub inversions: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StraightenStats {
    pub steps: usize,
    pub content_steps: usize,
    pub order_steps: usize,
    /// Steps producing some term whose measure is not smaller than the input's.
    pub non_strict_steps: usize,
    pub max_terms: usize,
}

#[derive(Clone, Debug)]
pub struct Straightened<S> {
    pub coords: CoordinateVector<S>,
    pub stats: StraightenStats,
}

/// Splits a monomial over the weight spaces, evaluating Cartan factors and
/// idempotents and merging adjacent equal root powers.
pub fn move_idempotents_right<S: SchurScalar>(
    m: &KostantMonomial,
    n: usize,
    d: usize,
) -> Result<Vec<(Term, S)>> {
    if !m.allowed_in(S::RING) {
        return Err(Error::InvalidArgument(format!(
            "{m} contains factors outside the {} ring",
            S::RING
        )));
    }
    let mut out = Vec::new();
    'weights: for mu in compositions(n, d) {
        let mut nu = mu.clone();
        let mut coeff = S::one();
        let mut word = Vec::new();
        for f in m.factors.iter().rev() {
            if let Some((r, e)) = f.as_root() {
                if r.i > n || r.j > n {
                    return Err(Error::InvalidArgument(format!("root {r} outside rank {n}")));
                }
                nu = add_scaled_root(&nu, r, e as i64);
                if nu.iter().any(|&x| x < 0) {
                    continue 'weights;
                }
                word.push((r, e));
            } else {
                if let KostantFactor::Idempotent(l) = f {
                    if l.len() != n {
                        return Err(Error::DimensionMismatch {
                            expected: n,
                            found: l.len(),
                        });
                    }
                }
                let value = SchurAlgebra::<S>::cartan_value(f, &nu).expect("non-root factor");
                if value.is_zero() {
                    continue 'weights;
                }
                coeff = coeff.mul_ref(&value);
            }
        }
        word.reverse();
        if let Some((term, c)) = normalize::<S>(word, mu) {
            out.push((term, coeff.mul_ref(&c)));
        }
    }
    Ok(out)
}

/// Merges adjacent equal roots and drops words that leave the weight lattice.
fn normalize<S: SchurScalar>(word: Vec<(Root, u32)>, mu: Weight) -> Option<(Term, S)> {
    let mut coeff = S::one();
    let mut merged: Vec<(Root, u32)> = Vec::with_capacity(word.len());
    for (r, e) in word {
        if e == 0 {
            continue;
        }
        match merged.last_mut() {
            Some((last, a)) if *last == r => {
                coeff = coeff.mul_ref(&S::binomial_analogue((*a + e) as i64, e));
                *a += e;
            }
            _ => merged.push((r, e)),
        }
    }
    let mut nu = mu.clone();
    for &(r, e) in merged.iter().rev() {
        nu = add_scaled_root(&nu, r, e as i64);
        if nu.iter().any(|&x| x < 0) {
            return None;
        }
    }
    Some((Term { word: merged, mu }, coeff))
}

fn right_content(word: &[(Root, u32)], n: usize) -> Weight {
    let mut w = vec![0; n];
    for &(r, e) in word {
        w[r.j - 1] += e as i64;
    }
    w
}

/// Straightens into a fixed basis; the basis may be in any placement, since
/// all placements of an element are the same operator.
pub struct Straightener<S: SchurScalar> {
    pub n: usize,
    pub d: usize,
    pub basis: Basis,
    pub table: RuleTable<S>,
    pub step_budget: usize,
    key: HashMap<Root, usize>,
}

impl<S: SchurScalar> Straightener<S> {
    /// Targets `Y_+` with the default orders.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        Self::with_basis(enumerate_basis(
            n,
            d,
            Side::Plus,
            Placement::Right,
            &BasisOrders::default(),
        )?)
    }

    pub fn with_basis(basis: Basis) -> Result<Self> {
        let n = basis.n;
        let es = basis.orders.e.sequence(n)?;
        let fs: Vec<Root> = basis
            .orders
            .f
            .sequence(n)?
            .into_iter()
            .map(|r| r.neg())
            .collect();
        let seq: Vec<Root> = match basis.side {
            Side::Plus => es.into_iter().chain(fs).collect(),
            Side::Minus => fs.into_iter().chain(es).collect(),
        };
        let key = seq.into_iter().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(Straightener {
            n,
            d: basis.d,
            basis,
            table: RuleTable::new(),
            step_budget: 1_000_000,
            key,
        })
    }

    fn violated_index(&self, term: &Term) -> Option<usize> {
        let chi = right_content(&term.word, self.n);
        (1..=self.n).find(|&j| chi[j - 1] > term.mu[j - 1])
    }

    pub fn measure(&self, term: &Term) -> Measure {
        let chi = right_content(&term.word, self.n);
        let deviation = chi.iter().zip(&term.mu).map(|(c, m)| (c - m).max(0)).sum();
        let defect = match self.violated_index(term) {
            Some(j) => {
                let mut bad = 0;
                let mut count = 0;
                for &(r, _) in &term.word {
                    if r.j == j {
                        bad += 1;
                    } else {
                        count += bad;
                    }
                }
                count
            }
            None => 0,
        };
        let keys: Vec<usize> = term.word.iter().map(|(r, _)| self.key[r]).collect();
        let mut inversions = 0;
        for a in 0..keys.len() {
            for b in a + 1..keys.len() {
                if keys[a] > keys[b] {
                    inversions += 1;
                }
            }
        }
        let degree = term.word.iter().map(|(_, e)| e).sum();
        Measure {
            degree,
            deviation,
            defect,
            inversions,
        }
    }

    /// Position of the adjacent pair to rewrite, or `None` if the term is a basis word.
    fn choose_pair(&self, term: &Term) -> Result<Option<(usize, bool)>> {
        let w = &term.word;
        if let Some(j) = self.violated_index(term) {
            let mut seen_bad = false;
            for (q, (r, _)) in w.iter().enumerate() {
                if r.j == j {
                    seen_bad = true;
                } else if seen_bad {
                    return Ok(Some((q - 1, true)));
                }
            }
            // All offending factors sit at the right end, so the word vanishes on 1_mu.
            return Err(Error::InvalidArgument(format!(
                "{} survived the weight check",
                term.monomial()
            )));
        }
        Ok((0..w.len().saturating_sub(1))
            .find(|&p| self.key[&w[p].0] > self.key[&w[p + 1].0])
            .map(|p| (p, false)))
    }

    fn basis_index(&self, term: &Term) -> Result<usize> {
        let mut a = BTreeMap::new();
        let mut c = BTreeMap::new();
        for &(r, e) in &term.word {
            let first = r.is_positive() == (self.basis.side == Side::Plus);
            if first {
                a.insert(r.positive(), e)
            } else {
                c.insert(r.positive(), e)
            };
        }
        let elem = BasisElement {
            side: self.basis.side,
            a,
            c,
            mu: term.mu.clone(),
        };
        self.basis.position(&elem).ok_or(Error::NotInSpan)
    }

    /// Rewrites `term` at the pair `(p, p + 1)`.
    fn rewrite(&self, term: &Term, p: usize) -> Result<Vec<(Term, S)>> {
        let w = &term.word;
        let rule = self.table.commute_pair(w[p], w[p + 1])?;
        let mut right = term.mu.clone();
        for &(r, e) in w[p + 2..].iter().rev() {
            right = add_scaled_root(&right, r, e as i64);
        }
        let mut out = Vec::new();
        'terms: for (m, c) in rule.expansion.iter() {
            let mut nu = right.clone();
            let mut coeff = c.clone();
            let mut mid = Vec::new();
            for f in m.factors.iter().rev() {
                if let Some((r, e)) = f.as_root() {
                    nu = add_scaled_root(&nu, r, e as i64);
                    if nu.iter().any(|&x| x < 0) {
                        continue 'terms;
                    }
                    mid.push((r, e));
                } else {
                    let value = SchurAlgebra::<S>::cartan_value(f, &nu).expect("non-root factor");
                    coeff = coeff.mul_ref(&value);
                }
            }
            if coeff.is_zero() {
                continue;
            }
            mid.reverse();
            let mut word = w[..p].to_vec();
            word.extend(mid);
            word.extend_from_slice(&w[p + 2..]);
            if let Some((t, k)) = normalize::<S>(word, term.mu.clone()) {
                out.push((t, coeff.mul_ref(&k)));
            }
        }
        Ok(out)
    }

    pub fn straighten(&self, m: &KostantMonomial) -> Result<Straightened<S>> {
        self.straighten_terms(move_idempotents_right::<S>(m, self.n, self.d)?)
    }

    pub fn straighten_terms(&self, terms: Vec<(Term, S)>) -> Result<Straightened<S>> {
        let mut stats = StraightenStats::default();
        let mut work: BTreeMap<(Measure, Term), S> = BTreeMap::new();
        let push = |work: &mut BTreeMap<(Measure, Term), S>, t: Term, c: S| {
            let key = (self.measure(&t), t);
            let entry = work.entry(key).or_insert_with(S::zero);
            *entry = entry.add_ref(&c);
        };
        for (t, c) in terms {
            push(&mut work, t, c);
        }
        let mut coords: BTreeMap<usize, S> = BTreeMap::new();
        while let Some(((measure, term), c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            stats.max_terms = stats.max_terms.max(work.len() + 1);
            match self.choose_pair(&term)? {
                None => {
                    let k = self.basis_index(&term)?;
                    let entry = coords.entry(k).or_insert_with(S::zero);
                    *entry = entry.add_ref(&c);
                }
                Some((p, content)) => {
                    stats.steps += 1;
                    if stats.steps > self.step_budget {
                        return Err(Error::NonTermination { steps: stats.steps });
                    }
                    if content {
                        stats.content_steps += 1;
                    } else {
                        stats.order_steps += 1;
                    }
                    let mut strict = true;
                    for (t, k) in self.rewrite(&term, p)? {
                        if self.measure(&t) >= measure {
                            strict = false;
                        }
                        push(&mut work, t, c.mul_ref(&k));
                    }
                    if !strict {
                        stats.non_strict_steps += 1;
                    }
                }
            }
        }
        coords.retain(|_, x| !x.is_zero());
        Ok(Straightened {
            coords: CoordinateVector::new(coords),
            stats,
        })
    }
}
