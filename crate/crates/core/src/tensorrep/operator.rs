use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Field;

/// Sparse square matrix stored by columns. Each column is sorted by row and
/// holds no zero entries, so derived equality is entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator<S> {
    dim: usize,
    cols: Vec<Vec<(usize, S)>>,
}

impl<S: Field> Operator<S> {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn scalar(dim: usize, c: S) -> Self {
        if c.is_zero() {
            return Self::zero(dim);
        }
        Operator {
            dim,
            cols: (0..dim).map(|k| vec![(k, c.clone())]).collect(),
        }
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let dim = entries.len();
        let cols = entries
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(k, c)]
                }
            })
            .collect();
        Operator { dim, cols }
    }

    /// Builds from `(row, col, value)` triples, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, S)>>(dim: usize, entries: I) -> Self {
        let mut acc: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); dim];
        for (r, c, x) in entries {
            assert!(
                r < dim && c < dim,
                "entry ({r},{c}) out of range for dimension {dim}"
            );
            match acc[c].get_mut(&r) {
                Some(slot) => *slot = slot.add_ref(&x),
                None => {
                    acc[c].insert(r, x);
                }
            }
        }
        let cols = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Operator { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &[(usize, S)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.cols[c].binary_search_by_key(&r, |(row, _)| *row) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => S::zero(),
        }
    }

    /// Nonzero entries as `(row, col, value)`, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn try_compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut cols = Vec::with_capacity(self.dim);
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for col in &other.cols {
            acc.clear();
            for (k, b) in col {
                for (r, a) in &self.cols[*k] {
                    let p = a.mul_ref(b);
                    match acc.get_mut(r) {
                        Some(slot) => *slot = slot.add_ref(&p),
                        None => {
                            acc.insert(*r, p);
                        }
                    }
                }
            }
            cols.push(
                std::mem::take(&mut acc)
                    .into_iter()
                    .filter(|(_, x)| !x.is_zero())
                    .collect(),
            );
        }
        Ok(Operator {
            dim: self.dim,
            cols,
        })
    }

    pub fn compose(&self, other: &Self) -> Self {
        self.try_compose(other).expect("operator dimensions agree")
    }

    fn combine(&self, other: &Self, sign: bool) -> Result<Self> {
        self.check_dim(other)?;
        let mut cols = Vec::with_capacity(self.dim);
        for (a, b) in self.cols.iter().zip(&other.cols) {
            let mut out = Vec::with_capacity(a.len() + b.len());
            let (mut p, mut q) = (0, 0);
            while p < a.len() || q < b.len() {
                let take_a = q >= b.len() || (p < a.len() && a[p].0 < b[q].0);
                let take_b = p >= a.len() || (q < b.len() && b[q].0 < a[p].0);
                if take_a {
                    out.push(a[p].clone());
                    p += 1;
                } else if take_b {
                    let x = if sign {
                        b[q].1.clone()
                    } else {
                        -b[q].1.clone()
                    };
                    out.push((b[q].0, x));
                    q += 1;
                } else {
                    let x = if sign {
                        a[p].1.add_ref(&b[q].1)
                    } else {
                        a[p].1.sub_ref(&b[q].1)
                    };
                    if !x.is_zero() {
                        out.push((a[p].0, x));
                    }
                    p += 1;
                    q += 1;
                }
            }
            cols.push(out);
        }
        Ok(Operator {
            dim: self.dim,
            cols,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("operator dimensions agree")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("operator dimensions agree")
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, x)| (*r, x.mul_ref(c))).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, x)| (*r, -x.clone())).collect())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Keeps only the columns whose index satisfies `keep` (right multiplication by a projection).
    pub fn restrict_columns(&self, keep: impl Fn(usize) -> bool) -> Self {
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .enumerate()
                .map(|(c, col)| if keep(c) { col.clone() } else { Vec::new() })
                .collect(),
        }
    }

    /// Keeps only the rows whose index satisfies `keep` (left multiplication by a projection).
    pub fn restrict_rows(&self, keep: impl Fn(usize) -> bool) -> Self {
        Operator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().filter(|(r, _)| keep(*r)).cloned().collect())
                .collect(),
        }
    }

    pub fn map_entries<T: Field>(&self, f: impl Fn(&S) -> T) -> Operator<T> {
        Operator::from_entries(self.dim, self.entries().map(|(r, c, x)| (r, c, f(x))))
    }

    /// `{"dim": N, "entries": [[row, col, scalar], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "entries": self
                .entries()
                .map(|(r, c, x)| serde_json::json!([r, c, x.to_json()]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        let dim = value.get("dim")?.as_u64()? as usize;
        let mut entries = Vec::new();
        for e in value.get("entries")?.as_array()? {
            let e = e.as_array()?;
            if e.len() != 3 {
                return None;
            }
            let r = e[0].as_u64()? as usize;
            let c = e[1].as_u64()? as usize;
            if r >= dim || c >= dim {
                return None;
            }
            entries.push((r, c, S::from_json(&e[2])?));
        }
        Some(Self::from_entries(dim, entries))
    }
}

impl<S: fmt::Display> fmt::Debug for Operator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator(dim={}", self.dim)?;
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col {
                write!(f, ", [{r},{c}]={x}")?;
            }
        }
        write!(f, ")")
    }
}
