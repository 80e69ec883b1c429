//! Tensor space `V^{(x) d}` with `dim V = n`, the generator operators acting on
//! it, and the exact linear algebra used to compare and decompose operators.

pub mod linalg;
mod operator;
pub mod relations;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::scalars::{Field, LaurentPolynomial, RationalFunction, ScalarRing};

pub use linalg::{minimal_polynomial, span_rank, Echelon, SparseVector};
pub use operator::Operator;

/// A basis word `v_{a_1} (x) ... (x) v_{a_d}` with 1-based letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    pub word: Vec<usize>,
}

/// Indexing data for the `n^d` basis words: index = base-`n` encoding with the
/// first letter most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    dim: usize,
    weights: Vec<Weight>,
}

impl TensorSpace {
    pub fn new(n: usize, d: usize) -> Self {
        let dim = n.pow(d as u32);
        let mut space = TensorSpace {
            n,
            d,
            dim,
            weights: Vec::with_capacity(dim),
        };
        for idx in 0..dim {
            let mut w = vec![0i64; n];
            for a in space.word(idx).word {
                w[a - 1] += 1;
            }
            space.weights.push(w);
        }
        space
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word(&self, mut idx: usize) -> TensorIndex {
        let mut word = vec![0; self.d];
        for p in (0..self.d).rev() {
            word[p] = idx % self.n + 1;
            idx /= self.n;
        }
        TensorIndex { word }
    }

    pub fn index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &a| acc * self.n + (a - 1))
    }

    /// Letter counts of the word with this index.
    pub fn weight(&self, idx: usize) -> &Weight {
        &self.weights[idx]
    }
}

/// Which side of the tensor product carries the Cartan twist in the coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `E -> E (x) K_i K_{i+1}^-1 + 1 (x) E`, `F -> F (x) 1 + K_i^-1 K_{i+1} (x) F`.
    TwistRight,
    /// `E -> E (x) 1 + K_i K_{i+1}^-1 (x) E`, `F -> F (x) K_i^-1 K_{i+1} + 1 (x) F`.
    TwistLeft,
}

/// Generator operators for one `(n, d)` and one scalar ring.
///
/// Classically `cartan[i]` is `H_i`; quantumly it is `K_i` and `cartan_inv[i]` is `K_i^-1`.
#[derive(Clone)]
pub struct GeneratorSet<S> {
    pub n: usize,
    pub d: usize,
    pub ring: ScalarRing,
    pub space: TensorSpace,
    pub convention: Option<Convention>,
    e: Vec<Operator<S>>,
    f: Vec<Operator<S>>,
    cartan: Vec<Operator<S>>,
    cartan_inv: Vec<Operator<S>>,
}

impl<S> std::fmt::Debug for GeneratorSet<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GeneratorSet(n={}, d={}, ring={}, convention={:?})",
            self.n, self.d, self.ring, self.convention
        )
    }
}

impl<S: Field> GeneratorSet<S> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `e_i` or `E_i`, `1 <= i < n`.
    pub fn e(&self, i: usize) -> &Operator<S> {
        &self.e[i - 1]
    }

    /// `f_i` or `F_i`, `1 <= i < n`.
    pub fn f(&self, i: usize) -> &Operator<S> {
        &self.f[i - 1]
    }

    /// `H_i` or `K_i`, `1 <= i <= n`.
    pub fn cartan(&self, i: usize) -> &Operator<S> {
        &self.cartan[i - 1]
    }

    /// `K_i^-1`; panics on a classical set.
    pub fn cartan_inv(&self, i: usize) -> &Operator<S> {
        assert!(
            self.ring == ScalarRing::Quantum,
            "K_i^-1 exists only in the quantum ring"
        );
        &self.cartan_inv[i - 1]
    }

    pub fn identity(&self) -> Operator<S> {
        Operator::identity(self.dim())
    }

    /// Replaces one Cartan generator; used by negative controls.
    pub fn with_cartan_replaced(&self, i: usize, op: Operator<S>) -> Self {
        let mut g = self.clone();
        g.cartan[i - 1] = op;
        g
    }
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 2 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    if n.checked_pow(d as u32).is_none_or(|dim| dim > 1 << 16) {
        return Err(Error::BoundExceeded(format!(
            "tensor space of dimension {n}^{d} is too large"
        )));
    }
    Ok(())
}

fn count_before(word: &[usize], p: usize, a: usize) -> i64 {
    word[..p].iter().filter(|&&x| x == a).count() as i64
}

fn count_after(word: &[usize], p: usize, a: usize) -> i64 {
    word[p + 1..].iter().filter(|&&x| x == a).count() as i64
}

/// `e_i` sends `v_{i+1}` to `v_i` and `f_i` sends `v_i` to `v_{i+1}`, both acting as derivations;
/// `H_i` counts the letters equal to `i`.
pub fn build_classical_generators(n: usize, d: usize) -> Result<GeneratorSet<BigRational>> {
    check_params(n, d)?;
    let space = TensorSpace::new(n, d);
    let one = BigRational::from_integer(1.into());
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..n {
        let mut ee = Vec::new();
        let mut ff = Vec::new();
        for idx in 0..space.dim() {
            let w = space.word(idx).word;
            for p in 0..d {
                let mut w2 = w.clone();
                if w[p] == i + 1 {
                    w2[p] = i;
                    ee.push((space.index(&w2), idx, one.clone()));
                } else if w[p] == i {
                    w2[p] = i + 1;
                    ff.push((space.index(&w2), idx, one.clone()));
                }
            }
        }
        e.push(Operator::from_entries(space.dim(), ee));
        f.push(Operator::from_entries(space.dim(), ff));
    }
    let cartan = (1..=n)
        .map(|i| {
            Operator::diagonal(
                (0..space.dim())
                    .map(|idx| BigRational::from_integer(space.weight(idx)[i - 1].into()))
                    .collect(),
            )
        })
        .collect();
    Ok(GeneratorSet {
        n,
        d,
        ring: ScalarRing::Classical,
        space,
        convention: None,
        e,
        f,
        cartan,
        cartan_inv: Vec::new(),
    })
}

/// Quantum generators for a fixed coproduct convention, without validation.
pub fn build_quantum_generators_with(
    n: usize,
    d: usize,
    conv: Convention,
) -> Result<GeneratorSet<RationalFunction>> {
    check_params(n, d)?;
    let space = TensorSpace::new(n, d);
    let vp = |k: i64| RationalFunction::from_laurent(LaurentPolynomial::v_power(k));
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..n {
        let mut ee = Vec::new();
        let mut ff = Vec::new();
        for idx in 0..space.dim() {
            let w = space.word(idx).word;
            for p in 0..d {
                // Exponent of K_i K_{i+1}^-1 over the positions carrying the twist.
                let twist_after = count_after(&w, p, i) - count_after(&w, p, i + 1);
                let twist_before = count_before(&w, p, i) - count_before(&w, p, i + 1);
                let mut w2 = w.clone();
                if w[p] == i + 1 {
                    w2[p] = i;
                    let k = match conv {
                        Convention::TwistRight => twist_after,
                        Convention::TwistLeft => twist_before,
                    };
                    ee.push((space.index(&w2), idx, vp(k)));
                } else if w[p] == i {
                    w2[p] = i + 1;
                    let k = match conv {
                        Convention::TwistRight => -twist_before,
                        Convention::TwistLeft => -twist_after,
                    };
                    ff.push((space.index(&w2), idx, vp(k)));
                }
            }
        }
        e.push(Operator::from_entries(space.dim(), ee));
        f.push(Operator::from_entries(space.dim(), ff));
    }
    let diag = |i: usize, sign: i64| {
        Operator::diagonal(
            (0..space.dim())
                .map(|idx| vp(sign * space.weight(idx)[i - 1]))
                .collect(),
        )
    };
    let cartan = (1..=n).map(|i| diag(i, 1)).collect();
    let cartan_inv = (1..=n).map(|i| diag(i, -1)).collect();
    Ok(GeneratorSet {
        n,
        d,
        ring: ScalarRing::Quantum,
        space,
        convention: Some(conv),
        e,
        f,
        cartan,
        cartan_inv,
    })
}

/// Quantum generators, validated against the defining relations. The twist-right
/// convention is tried first and the twist-left one only if it fails.
pub fn build_quantum_generators(n: usize, d: usize) -> Result<GeneratorSet<RationalFunction>> {
    let mut failures = Vec::new();
    for conv in [Convention::TwistRight, Convention::TwistLeft] {
        let g = build_quantum_generators_with(n, d, conv)?;
        let bad: Vec<String> = relations::quantum_presentation_checks(&g)
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| c.id)
            .collect();
        if bad.is_empty() {
            return Ok(g);
        }
        failures.push(format!("{conv:?}: {}", bad.join(", ")));
    }
    Err(Error::ConventionFailure(failures.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn word_indexing_round_trips() {
        let s = TensorSpace::new(3, 2);
        assert_eq!(s.dim(), 9);
        for idx in 0..9 {
            assert_eq!(s.index(&s.word(idx).word), idx);
        }
        assert_eq!(s.word(5).word, vec![2, 3]);
        assert_eq!(s.weight(5), &vec![0, 1, 1]);
    }

    #[test]
    fn classical_action_on_small_words() {
        let g = build_classical_generators(2, 2).unwrap();
        let s = &g.space;
        let e = g.e(1);
        let src = s.index(&[2, 2]);
        assert_eq!(e.get(s.index(&[1, 2]), src), BigRational::one());
        assert_eq!(e.get(s.index(&[2, 1]), src), BigRational::one());
        assert_eq!(e.column(src).len(), 2);
    }

    #[test]
    fn quantum_action_on_small_words() {
        let g = build_quantum_generators(2, 2).unwrap();
        assert_eq!(g.convention, Some(Convention::TwistRight));
        let s = &g.space;
        let src = s.index(&[2, 2]);
        assert_eq!(
            g.e(1).get(s.index(&[1, 2]), src),
            RationalFunction::v_power(-1)
        );
        assert_eq!(g.e(1).get(s.index(&[2, 1]), src), RationalFunction::one());
        let g1 = build_quantum_generators(2, 1).unwrap();
        assert_eq!(g1.cartan(1).get(0, 0), RationalFunction::v_power(1));
        assert_eq!(g1.cartan(1).get(1, 1), RationalFunction::one());
    }
}
