use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootdata::{content_of, ContentKind, Root, Weight};
use crate::scalars::{Field, ScalarRing};

/// One letter of a Kostant monomial.
///
/// `CartanBinomial { i, c, t }` is `binom(H_i + c, t)` classically and
/// `[K_i; c, t]` quantumly. The root-indexed binomials use `H_alpha = H_i - H_j`
/// and `K_alpha = K_i K_j^-1` for `alpha = (i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KostantFactor {
    DividedRootPower { root: Root, m: u32 },
    CartanBinomial { i: usize, c: i64, t: u32 },
    RootHBinomial { root: Root, c: i64, t: u32 },
    RootKBinomial { root: Root, c: i64, t: u32 },
    KPower { i: usize, e: i64 },
    Idempotent(Weight),
}

impl KostantFactor {
    pub fn root(root: Root, m: u32) -> Self {
        KostantFactor::DividedRootPower { root, m }
    }

    pub fn as_root(&self) -> Option<(Root, u32)> {
        match self {
            KostantFactor::DividedRootPower { root, m } => Some((*root, *m)),
            _ => None,
        }
    }

    /// Whether the factor makes sense in the given ring.
    pub fn allowed_in(&self, ring: ScalarRing) -> bool {
        match self {
            KostantFactor::RootKBinomial { .. } | KostantFactor::KPower { .. } => {
                ring == ScalarRing::Quantum
            }
            KostantFactor::RootHBinomial { .. } => ring == ScalarRing::Classical,
            _ => true,
        }
    }

    /// Image under the anti-automorphism exchanging positive and negative root
    /// vectors; Cartan letters other than `K^e` are fixed.
    pub fn omega(&self) -> Self {
        match self {
            KostantFactor::DividedRootPower { root, m } => KostantFactor::DividedRootPower {
                root: root.neg(),
                m: *m,
            },
            KostantFactor::KPower { i, e } => KostantFactor::KPower { i: *i, e: -*e },
            other => other.clone(),
        }
    }
}

impl fmt::Display for KostantFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KostantFactor::DividedRootPower { root, m } => {
                let letter = if root.is_positive() { 'E' } else { 'F' };
                write!(f, "{letter}({},{})", root.i, root.j)?;
                if *m != 1 {
                    write!(f, "^({m})")?;
                }
                Ok(())
            }
            KostantFactor::CartanBinomial { i, c, t } => write!(f, "H({i};{c}|{t})"),
            KostantFactor::RootHBinomial { root, c, t } => {
                write!(f, "H({},{};{c}|{t})", root.i, root.j)
            }
            KostantFactor::RootKBinomial { root, c, t } => {
                write!(f, "K({},{};{c}|{t})", root.i, root.j)
            }
            KostantFactor::KPower { i, e } => write!(f, "K({i})^{e}"),
            KostantFactor::Idempotent(w) => {
                write!(f, "1[")?;
                for (k, x) in w.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// An ordered word of [`KostantFactor`]s, read left to right as an operator product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KostantMonomial {
    pub factors: Vec<KostantFactor>,
}

impl KostantMonomial {
    pub fn new(factors: Vec<KostantFactor>) -> Self {
        KostantMonomial { factors }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_roots(roots: &[(Root, u32)]) -> Self {
        KostantMonomial {
            factors: roots
                .iter()
                .map(|&(r, m)| KostantFactor::root(r, m))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        KostantMonomial { factors }
    }

    pub fn with(mut self, f: KostantFactor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn root_factors(&self) -> impl Iterator<Item = (Root, u32)> + '_ {
        self.factors.iter().filter_map(KostantFactor::as_root)
    }

    /// Total divided-power degree.
    pub fn degree(&self) -> u32 {
        self.root_factors().map(|(_, m)| m).sum()
    }

    /// `chi`: each `x_alpha^(m)` contributes `m e_max(i,j)`.
    pub fn content(&self, n: usize) -> Weight {
        content_of(self.root_factors(), n, ContentKind::Max)
    }

    /// `chi_L`: each `x_alpha^(m)` contributes `m e_i`.
    pub fn content_left(&self, n: usize) -> Weight {
        content_of(self.root_factors(), n, ContentKind::Left)
    }

    /// `chi_R`: each `x_alpha^(m)` contributes `m e_j`.
    pub fn content_right(&self, n: usize) -> Weight {
        content_of(self.root_factors(), n, ContentKind::Right)
    }

    pub fn allowed_in(&self, ring: ScalarRing) -> bool {
        self.factors.iter().all(|f| f.allowed_in(ring))
    }

    /// Image under the order-reversing involution exchanging `E` and `F`.
    pub fn omega(&self) -> Self {
        KostantMonomial {
            factors: self
                .factors
                .iter()
                .rev()
                .map(KostantFactor::omega)
                .collect(),
        }
    }
}

impl fmt::Display for KostantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Finitely supported combination of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination<S> {
    terms: BTreeMap<KostantMonomial, S>,
}

impl<S: Field> Default for LinearCombination<S> {
    fn default() -> Self {
        LinearCombination {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Field> LinearCombination<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(m: KostantMonomial, c: S) -> Self {
        let mut lc = Self::new();
        lc.add_term(m, c);
        lc
    }

    pub fn add_term(&mut self, m: KostantMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.add_ref(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.mul_ref(c));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&KostantMonomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &KostantMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }
}

impl<S: Field> fmt::Display for LinearCombination<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {m}")?;
        }
        Ok(())
    }
}

/// A random monomial with at most `max_len` factors, mostly divided root powers,
/// with occasional Cartan factors and idempotents of the given ring.
pub fn random_monomial<R: rand::Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    ring: ScalarRing,
    max_len: usize,
) -> KostantMonomial {
    let roots = crate::rootdata::roots(n);
    let lambdas = crate::rootdata::compositions(n, d);
    let len = rng.gen_range(1..=max_len.max(1));
    let mut factors = Vec::with_capacity(len);
    for _ in 0..len {
        let roll = rng.gen_range(0..20);
        let root = roots[rng.gen_range(0..roots.len())];
        let i = rng.gen_range(1..=n);
        let c = rng.gen_range(-2..=2);
        let t = rng.gen_range(1..=2);
        let f = match roll {
            0..=13 => KostantFactor::DividedRootPower {
                root,
                m: rng.gen_range(1..=d.max(1) as u32),
            },
            14 | 15 => KostantFactor::CartanBinomial { i, c, t },
            16 => match ring {
                ScalarRing::Classical => KostantFactor::RootHBinomial { root, c, t },
                ScalarRing::Quantum => KostantFactor::RootKBinomial { root, c, t },
            },
            17 if ring == ScalarRing::Quantum => KostantFactor::KPower {
                i,
                e: rng.gen_range(-2..=2),
            },
            _ => KostantFactor::Idempotent(lambdas[rng.gen_range(0..lambdas.len())].clone()),
        };
        factors.push(f);
    }
    KostantMonomial::new(factors)
}
