//! Type `A_{n-1}` root data on `Z^n`: roots `e_i - e_j`, weights, the
//! compositions `Lambda(n, d)`, orderings of the positive roots, and the
//! interval configurations used to index commutation rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight in `Z^n`, stored with 0-based positions.
pub type Weight = Vec<i64>;

/// The root `e_i - e_j` with 1-based `i != j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1, "invalid root ({i},{j})");
        Root { i, j }
    }

    /// The simple root `e_i - e_{i+1}`.
    pub fn simple(i: usize) -> Self {
        Root::new(i, i + 1)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn neg(&self) -> Root {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// The positive root among `self` and `-self`.
    pub fn positive(&self) -> Root {
        if self.is_positive() {
            *self
        } else {
            self.neg()
        }
    }

    pub fn height(&self) -> usize {
        self.i.abs_diff(self.j)
    }

    /// Smaller and larger index: the interval `[lo, hi]` spanned by the root.
    pub fn interval(&self) -> (usize, usize) {
        (self.i.min(self.j), self.i.max(self.j))
    }

    pub fn weight(&self, n: usize) -> Weight {
        let mut w = vec![0; n];
        w[self.i - 1] += 1;
        w[self.j - 1] -= 1;
        w
    }

    /// Image under the longest Weyl group element, `k -> n + 1 - k`.
    pub fn flip(&self, n: usize) -> Root {
        Root {
            i: n + 1 - self.i,
            j: n + 1 - self.j,
        }
    }

    pub fn in_rank(&self, n: usize) -> bool {
        self.i <= n && self.j <= n
    }

    /// Index carrying the content of `x_root^(m)`: the larger of `i, j`.
    pub fn content_index(&self) -> usize {
        self.i.max(self.j)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}{}", self.i, self.j)
    }
}

/// `alpha + beta` when it is a root.
pub fn root_sum(alpha: Root, beta: Root) -> Option<Root> {
    if alpha.j == beta.i && alpha.i != beta.j {
        Some(Root::new(alpha.i, beta.j))
    } else if beta.j == alpha.i && beta.i != alpha.j {
        Some(Root::new(beta.i, alpha.j))
    } else {
        None
    }
}

/// Structure sign `c` with `[x_alpha, x_beta] = c x_{alpha+beta}` for matrix units.
pub fn structure_sign(alpha: Root, beta: Root) -> i64 {
    if alpha.j == beta.i && alpha.i != beta.j {
        1
    } else if alpha.i == beta.j && alpha.j != beta.i {
        -1
    } else {
        0
    }
}

/// Positive roots in lexicographic order `(1,2), (1,3), ..., (n-1,n)`.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root::new(i, j));
        }
    }
    out
}

/// All roots: positive roots followed by their negatives.
pub fn roots(n: usize) -> Vec<Root> {
    let pos = positive_roots(n);
    let neg: Vec<Root> = pos.iter().map(|r| r.neg()).collect();
    pos.into_iter().chain(neg).collect()
}

/// `Lambda(n, d)`: compositions of `d` into `n` nonnegative parts, in
/// decreasing lexicographic order.
pub fn compositions(n: usize, d: usize) -> Vec<Weight> {
    fn rec(n: usize, d: i64, prefix: &mut Weight, out: &mut Vec<Weight>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d as i64, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Elements of `N^n` with total at most `d` and zero entry at 1-based position `i0`.
pub fn bounded_vectors_avoiding(n: usize, d: usize, i0: Option<usize>) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(pos: usize, left: u32, i0: Option<usize>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        let max = if i0 == Some(pos + 1) { 0 } else { left };
        for k in 0..=max {
            cur[pos] = k;
            rec(pos + 1, left - k, i0, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, d as u32, i0, &mut cur, &mut out);
    out
}

/// Componentwise order on `Z^n`.
pub fn weight_leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn is_composition_of(w: &[i64], d: usize) -> bool {
    w.iter().all(|&x| x >= 0) && w.iter().sum::<i64>() == d as i64
}

pub fn add_weights(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn add_scaled_root(w: &[i64], r: Root, m: i64) -> Weight {
    let mut out = w.to_vec();
    out[r.i - 1] += m;
    out[r.j - 1] -= m;
    out
}

/// Sort key for box order: `alpha` precedes `beta` iff `box_key(alpha) > box_key(beta)`.
fn box_key(r: Root) -> (usize, usize) {
    (r.j, r.i)
}

/// `alpha` strictly precedes `beta` in box order.
pub fn box_precedes(alpha: Root, beta: Root) -> bool {
    box_key(alpha) > box_key(beta)
}

/// Box order: `Greater` means `alpha` is above `beta`.
pub fn box_compare(alpha: Root, beta: Root) -> std::cmp::Ordering {
    box_key(beta).cmp(&box_key(alpha))
}

/// `lambda + alpha` if it is still a composition.
pub fn shift_composition(lambda: &[i64], alpha: Root) -> Option<Weight> {
    let w = add_scaled_root(lambda, alpha, 1);
    if w.iter().all(|&x| x >= 0) {
        Some(w)
    } else {
        None
    }
}

/// Which index of a root carries the content of its divided powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContentKind {
    /// `max(i, j)`
    Max,
    /// `i`
    Left,
    /// `j`
    Right,
    /// `min(i, j)`
    Min,
}

/// Content of a word of divided root powers `x_root^(m)`; other factors contribute nothing.
pub fn content_of<I>(factors: I, n: usize, kind: ContentKind) -> Weight
where
    I: IntoIterator<Item = (Root, u32)>,
{
    let mut w = vec![0; n];
    for (r, m) in factors {
        let k = match kind {
            ContentKind::Max => r.i.max(r.j),
            ContentKind::Left => r.i,
            ContentKind::Right => r.j,
            ContentKind::Min => r.i.min(r.j),
        };
        w[k - 1] += m as i64;
    }
    w
}

/// Left-to-right product order for a family of positive root factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootOrder {
    /// Ascending in box order, e.g. `(2,3), (1,3), (1,2)` for `n = 3`.
    Box,
    /// The reverse of `Box`.
    ReverseBox,
    /// Explicit permutation of the positive roots.
    Custom(Vec<Root>),
}

impl RootOrder {
    pub fn sequence(&self, n: usize) -> Result<Vec<Root>> {
        let mut pos = positive_roots(n);
        match self {
            RootOrder::Box => {
                pos.sort_by_key(|r| std::cmp::Reverse(box_key(*r)));
                Ok(pos)
            }
            RootOrder::ReverseBox => {
                pos.sort_by_key(|r| box_key(*r));
                Ok(pos)
            }
            RootOrder::Custom(list) => {
                let mut sorted = list.clone();
                sorted.sort();
                if sorted != pos {
                    return Err(Error::InvalidArgument(format!(
                        "custom order must list each positive root of rank {n} once"
                    )));
                }
                Ok(list.clone())
            }
        }
    }

    pub fn reversed(&self, n: usize) -> Result<RootOrder> {
        Ok(match self {
            RootOrder::Box => RootOrder::ReverseBox,
            RootOrder::ReverseBox => RootOrder::Box,
            RootOrder::Custom(_) => {
                let mut s = self.sequence(n)?;
                s.reverse();
                RootOrder::Custom(s)
            }
        })
    }
}

impl FromStr for RootOrder {
    type Err = Error;

    /// `box`, `revbox`, or `custom:12,13,23` (digits `ij`, or `i-j` for larger ranks).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "box" => Ok(RootOrder::Box),
            "revbox" => Ok(RootOrder::ReverseBox),
            _ => {
                let list = s
                    .strip_prefix("custom:")
                    .ok_or_else(|| Error::Parse(format!("unknown order `{s}`")))?;
                let mut roots = Vec::new();
                for item in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    let (a, b) = match item.split_once('-') {
                        Some(p) => p,
                        None if item.len() == 2 => item.split_at(1),
                        None => return Err(Error::Parse(format!("bad root `{item}`"))),
                    };
                    let i: usize = a
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad root `{item}`")))?;
                    let j: usize = b
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad root `{item}`")))?;
                    if i == 0 || j == 0 || i >= j {
                        return Err(Error::Parse(format!("`{item}` is not a positive root")));
                    }
                    roots.push(Root::new(i, j));
                }
                Ok(RootOrder::Custom(roots))
            }
        }
    }
}

/// How the intervals `[a1, a2]` of `x` and `[b1, b2]` of `y` sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntervalRelation {
    Disjoint,
    StrictlyNested,
    NestedSharedEndpoint,
    Coincide,
    Adjacent,
    Overlap,
}

impl IntervalRelation {
    pub const ALL: [IntervalRelation; 6] = [
        IntervalRelation::Disjoint,
        IntervalRelation::StrictlyNested,
        IntervalRelation::NestedSharedEndpoint,
        IntervalRelation::Coincide,
        IntervalRelation::Adjacent,
        IntervalRelation::Overlap,
    ];
}

/// Ordered refinement of [`IntervalRelation`] for a pair `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Configuration {
    /// `a2 < b1`
    DisjointLeft,
    /// `b2 < a1`
    DisjointRight,
    /// `b1 < a1 < a2 < b2`
    InsideStrict,
    /// `a1 < b1 < b2 < a2`
    ContainsStrict,
    /// `a1 = b1 < a2 < b2`
    InsideSharedLeft,
    /// `b1 < a1 < a2 = b2`
    InsideSharedRight,
    /// `a1 = b1 < b2 < a2`
    ContainsSharedLeft,
    /// `a1 < b1 < b2 = a2`
    ContainsSharedRight,
    Coincide,
    /// `a2 = b1`
    MeetLeft,
    /// `b2 = a1`
    MeetRight,
    /// `a1 < b1 < a2 < b2`
    OverlapLeft,
    /// `b1 < a1 < b2 < a2`
    OverlapRight,
}

impl Configuration {
    pub const ALL: [Configuration; 13] = [
        Configuration::DisjointLeft,
        Configuration::DisjointRight,
        Configuration::InsideStrict,
        Configuration::ContainsStrict,
        Configuration::InsideSharedLeft,
        Configuration::InsideSharedRight,
        Configuration::ContainsSharedLeft,
        Configuration::ContainsSharedRight,
        Configuration::Coincide,
        Configuration::MeetLeft,
        Configuration::MeetRight,
        Configuration::OverlapLeft,
        Configuration::OverlapRight,
    ];

    pub fn of(x: Root, y: Root) -> Configuration {
        use Configuration::*;
        let (a1, a2) = x.interval();
        let (b1, b2) = y.interval();
        if a2 < b1 {
            DisjointLeft
        } else if b2 < a1 {
            DisjointRight
        } else if a2 == b1 {
            MeetLeft
        } else if b2 == a1 {
            MeetRight
        } else if a1 == b1 && a2 == b2 {
            Coincide
        } else if a1 == b1 {
            if a2 < b2 {
                InsideSharedLeft
            } else {
                ContainsSharedLeft
            }
        } else if a2 == b2 {
            if b1 < a1 {
                InsideSharedRight
            } else {
                ContainsSharedRight
            }
        } else if b1 < a1 && a2 < b2 {
            InsideStrict
        } else if a1 < b1 && b2 < a2 {
            ContainsStrict
        } else if a1 < b1 {
            OverlapLeft
        } else {
            OverlapRight
        }
    }

    pub fn relation(&self) -> IntervalRelation {
        use Configuration::*;
        match self {
            DisjointLeft | DisjointRight => IntervalRelation::Disjoint,
            InsideStrict | ContainsStrict => IntervalRelation::StrictlyNested,
            InsideSharedLeft | InsideSharedRight | ContainsSharedLeft | ContainsSharedRight => {
                IntervalRelation::NestedSharedEndpoint
            }
            Coincide => IntervalRelation::Coincide,
            MeetLeft | MeetRight => IntervalRelation::Adjacent,
            OverlapLeft | OverlapRight => IntervalRelation::Overlap,
        }
    }

    /// The configuration of `(y, x)`.
    pub fn swapped(&self) -> Configuration {
        use Configuration::*;
        match self {
            DisjointLeft => DisjointRight,
            DisjointRight => DisjointLeft,
            InsideStrict => ContainsStrict,
            ContainsStrict => InsideStrict,
            InsideSharedLeft => ContainsSharedLeft,
            ContainsSharedLeft => InsideSharedLeft,
            InsideSharedRight => ContainsSharedRight,
            ContainsSharedRight => InsideSharedRight,
            Coincide => Coincide,
            MeetLeft => MeetRight,
            MeetRight => MeetLeft,
            OverlapLeft => OverlapRight,
            OverlapRight => OverlapLeft,
        }
    }
}

/// Sign pattern of an ordered pair of roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignPattern {
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl SignPattern {
    pub const ALL: [SignPattern; 4] = [
        SignPattern::PlusPlus,
        SignPattern::PlusMinus,
        SignPattern::MinusPlus,
        SignPattern::MinusMinus,
    ];

    pub fn of(x: Root, y: Root) -> SignPattern {
        match (x.is_positive(), y.is_positive()) {
            (true, true) => SignPattern::PlusPlus,
            (true, false) => SignPattern::PlusMinus,
            (false, true) => SignPattern::MinusPlus,
            (false, false) => SignPattern::MinusMinus,
        }
    }
}

/// Every ordered pair of roots of rank `n`.
pub fn root_pairs(n: usize) -> Vec<(Root, Root)> {
    let all = roots(n);
    let mut out = Vec::with_capacity(all.len() * all.len());
    for &x in &all {
        for &y in &all {
            out.push((x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(i: usize, j: usize) -> Root {
        Root::new(i, j)
    }

    #[test]
    fn composition_counts() {
        // binom(n + d - 1, d)
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(4, 3).len(), 20);
    }

    #[test]
    fn box_order_sequences() {
        assert_eq!(
            RootOrder::Box.sequence(3).unwrap(),
            vec![r(2, 3), r(1, 3), r(1, 2)]
        );
        assert_eq!(
            RootOrder::Box.sequence(4).unwrap(),
            vec![r(3, 4), r(2, 4), r(1, 4), r(2, 3), r(1, 3), r(1, 2)]
        );
        assert_eq!(
            RootOrder::ReverseBox.sequence(3).unwrap(),
            vec![r(1, 2), r(1, 3), r(2, 3)]
        );
        assert!(box_precedes(r(2, 3), r(1, 2)));
        assert_eq!(
            "custom:12,23,13"
                .parse::<RootOrder>()
                .unwrap()
                .sequence(3)
                .unwrap(),
            vec![r(1, 2), r(2, 3), r(1, 3)]
        );
        assert!("custom:12,23"
            .parse::<RootOrder>()
            .unwrap()
            .sequence(3)
            .is_err());
    }

    #[test]
    fn box_order_is_convex() {
        // alpha, beta, alpha + beta: the sum sits between its summands.
        for n in 2..=5 {
            let seq = RootOrder::Box.sequence(n).unwrap();
            let pos = |x: Root| seq.iter().position(|&y| y == x).unwrap();
            for &a in &seq {
                for &b in &seq {
                    if let Some(c) = root_sum(a, b) {
                        let (lo, hi) = (pos(a).min(pos(b)), pos(a).max(pos(b)));
                        assert!(lo < pos(c) && pos(c) < hi);
                    }
                }
            }
        }
    }

    #[test]
    fn configurations_cover_all_pairs() {
        let mut seen = std::collections::HashSet::new();
        for (x, y) in root_pairs(4) {
            let c = Configuration::of(x, y);
            assert_eq!(Configuration::of(y, x), c.swapped());
            seen.insert(c);
        }
        assert_eq!(seen.len(), Configuration::ALL.len());
    }

    #[test]
    fn sums_and_signs() {
        assert_eq!(root_sum(r(1, 2), r(2, 3)), Some(r(1, 3)));
        assert_eq!(root_sum(r(2, 3), r(1, 2)), Some(r(1, 3)));
        assert_eq!(root_sum(r(1, 2), r(2, 1)), None);
        assert_eq!(structure_sign(r(1, 2), r(2, 3)), 1);
        assert_eq!(structure_sign(r(2, 3), r(1, 2)), -1);
        assert_eq!(bounded_vectors_avoiding(3, 2, Some(2)).len(), 6);
    }

    #[test]
    fn compare_and_shift() {
        use std::cmp::Ordering;
        assert_eq!(box_compare(r(1, 2), r(1, 3)), Ordering::Greater);
        assert_eq!(box_compare(r(1, 3), r(1, 3)), Ordering::Equal);
        assert_eq!(shift_composition(&[1, 1], r(1, 2)), Some(vec![2, 0]));
        assert_eq!(shift_composition(&[2, 0], r(1, 2)), None);
        assert_eq!(shift_composition(&[0, 2], r(1, 2)), Some(vec![1, 1]));
        let word = [(r(2, 1), 2u32)];
        assert_eq!(content_of(word, 2, ContentKind::Right), vec![2, 0]);
        assert_eq!(content_of(word, 2, ContentKind::Max), vec![0, 2]);
    }
}
