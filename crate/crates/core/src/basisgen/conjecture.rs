use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{KostantFactor, KostantMonomial};
use crate::error::{Error, Result};
use crate::rootdata::{bounded_vectors_avoiding, positive_roots, Root, Weight};
use crate::scalars::ScalarRing;

use super::{BasisElement, BasisOrders, Side};

/// Candidate sets tested by the conjecture harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjectureKind {
    /// Ordinary monomials in root vectors and all but one Cartan generator.
    #[serde(rename = "pbw")]
    Pbw,
    #[serde(rename = "eHf")]
    EHF,
    #[serde(rename = "fHe")]
    FHE,
    /// `E_A K_B F_C` with Gaussian binomials in the `K_i`; quantum only.
    #[serde(rename = "EKF")]
    EKF,
    /// Membership of the Cartan binomials in the ring generated by divided powers.
    #[serde(rename = "cartan-subring")]
    CartanSubring,
    /// `E_A H_B` in the non-negative Borel subalgebra.
    #[serde(rename = "borel")]
    Borel,
}

impl ConjectureKind {
    pub const ALL: [ConjectureKind; 6] = [
        ConjectureKind::Pbw,
        ConjectureKind::EHF,
        ConjectureKind::FHE,
        ConjectureKind::EKF,
        ConjectureKind::CartanSubring,
        ConjectureKind::Borel,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ConjectureKind::Pbw => "pbw",
            ConjectureKind::EHF => "eHf",
            ConjectureKind::FHE => "fHe",
            ConjectureKind::EKF => "EKF",
            ConjectureKind::CartanSubring => "cartan-subring",
            ConjectureKind::Borel => "borel",
        }
    }
}

impl fmt::Display for ConjectureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConjectureKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown conjecture kind `{s}`")))
    }
}

/// An index `e_A H_B f_C` of the truncated PBW set `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwTriple {
    pub a: BTreeMap<Root, u32>,
    pub b: Vec<u32>,
    pub c: BTreeMap<Root, u32>,
}

impl PbwTriple {
    pub fn size(&self) -> u32 {
        self.a.values().sum::<u32>() + self.b.iter().sum::<u32>() + self.c.values().sum::<u32>()
    }
}

fn exponent_map(roots: &[Root], v: &[u32]) -> BTreeMap<Root, u32> {
    roots
        .iter()
        .zip(v)
        .filter(|(_, &m)| m > 0)
        .map(|(r, &m)| (*r, m))
        .collect()
}

/// All `(A, B, C)` with `B_1 = 0` and `|A| + |B| + |C| <= d`.
pub fn card_index_set(n: usize, d: usize) -> Vec<PbwTriple> {
    let pos = positive_roots(n);
    let p = pos.len();
    bounded_vectors_avoiding(2 * p + n, d, Some(p + 1))
        .into_iter()
        .map(|v| PbwTriple {
            a: exponent_map(&pos, &v[..p]),
            b: v[p..p + n].to_vec(),
            c: exponent_map(&pos, &v[p + n..]),
        })
        .collect()
}

/// `chi(e_A f_C)`: both `x_(i,j)` and `x_(j,i)` with `i < j` contribute to index `j`.
fn max_content(a: &BTreeMap<Root, u32>, c: &BTreeMap<Root, u32>, n: usize) -> Weight {
    let mut w = vec![0; n];
    for (r, &m) in a.iter().chain(c.iter()) {
        w[r.j - 1] += m as i64;
    }
    w
}

/// `e_A H_B f_C -> e_A 1_lambda f_C` with `lambda = (d - |A| - |B| - |C|) e_1 + B + chi(e_A f_C)`.
pub fn card_bijection(n: usize, d: usize, p: &PbwTriple) -> Result<BasisElement> {
    if p.b.len() != n || p.b[0] != 0 || p.size() as usize > d {
        return Err(Error::InvalidArgument(
            "triple outside the index set".into(),
        ));
    }
    let chi = max_content(&p.a, &p.c, n);
    let mut lambda: Weight = (0..n).map(|k| p.b[k] as i64 + chi[k]).collect();
    lambda[0] += d as i64 - p.size() as i64;
    let mut mu = lambda;
    for (r, &m) in &p.c {
        mu[r.i - 1] += m as i64;
        mu[r.j - 1] -= m as i64;
    }
    Ok(BasisElement {
        side: Side::Plus,
        a: p.a.clone(),
        c: p.c.clone(),
        mu,
    })
}

/// `e_A 1_lambda f_C -> e_A H_B f_C` with `B = lambda - chi(e_A f_C) - lambda_1 e_1`.
pub fn card_bijection_inverse(e: &BasisElement) -> Result<PbwTriple> {
    if e.side != Side::Plus {
        return Err(Error::InvalidArgument(
            "the bijection is defined on the plus form".into(),
        ));
    }
    let n = e.n();
    let lambda = e.lambda(super::Placement::Middle);
    let chi = max_content(&e.a, &e.c, n);
    let mut b = Vec::with_capacity(n);
    for k in 0..n {
        let x = if k == 0 { 0 } else { lambda[k] - chi[k] };
        if x < 0 {
            return Err(Error::InvalidArgument("content condition fails".into()));
        }
        b.push(x as u32);
    }
    Ok(PbwTriple {
        a: e.a.clone(),
        b,
        c: e.c.clone(),
    })
}

fn root_block(seq: &[Root], exps: &[u32], divided: bool) -> Vec<KostantFactor> {
    let mut out = Vec::new();
    for (r, &m) in seq.iter().zip(exps) {
        if m == 0 {
            continue;
        }
        if divided {
            out.push(KostantFactor::root(*r, m));
        } else {
            out.extend(std::iter::repeat_n(KostantFactor::root(*r, 1), m as usize));
        }
    }
    out
}

fn cartan_block(b: &[u32], skip: usize, ordinary: Option<ScalarRing>) -> Vec<KostantFactor> {
    let mut out = Vec::new();
    let idx = (1..=b.len() + 1).filter(|&i| i != skip);
    for (i, &t) in idx.zip(b) {
        if t == 0 {
            continue;
        }
        match ordinary {
            None => out.push(KostantFactor::CartanBinomial { i, c: 0, t }),
            Some(ScalarRing::Quantum) => out.push(KostantFactor::KPower { i, e: t as i64 }),
            Some(ScalarRing::Classical) => out.extend(std::iter::repeat_n(
                KostantFactor::CartanBinomial { i, c: 0, t: 1 },
                t as usize,
            )),
        }
    }
    out
}

/// Candidate monomials for a conjecture kind, all with total degree at most `d`.
///
/// For `CartanSubring` the result is the generating set `E_i^(m), F_i^(m)`, `1 <= m <= d`.
pub fn enumerate_conjecture_sets(
    n: usize,
    d: usize,
    i0: usize,
    kind: ConjectureKind,
    ring: ScalarRing,
    orders: &BasisOrders,
) -> Result<Vec<KostantMonomial>> {
    if i0 == 0 || i0 > n {
        return Err(Error::InvalidArgument(format!(
            "i0 = {i0} out of range for n = {n}"
        )));
    }
    if kind == ConjectureKind::EKF && ring != ScalarRing::Quantum {
        return Err(Error::InvalidArgument(
            "EKF sets live in the quantum algebra".into(),
        ));
    }
    let es = orders.e.sequence(n)?;
    let fs: Vec<Root> = orders.f.sequence(n)?.into_iter().map(|r| r.neg()).collect();
    let p = es.len();
    let h = n - 1;
    let mut out = Vec::new();
    match kind {
        ConjectureKind::CartanSubring => {
            for i in 1..n {
                for m in 1..=d as u32 {
                    out.push(KostantMonomial::new(vec![KostantFactor::root(
                        Root::simple(i),
                        m,
                    )]));
                    out.push(KostantMonomial::new(vec![KostantFactor::root(
                        Root::simple(i).neg(),
                        m,
                    )]));
                }
            }
        }
        ConjectureKind::Borel => {
            for v in bounded_vectors_avoiding(p + h, d, None) {
                let mut f = root_block(&es, &v[..p], true);
                f.extend(cartan_block(&v[p..], i0, None));
                out.push(KostantMonomial::new(f));
            }
        }
        _ => {
            for v in bounded_vectors_avoiding(2 * p + h, d, None) {
                let (x, rest) = v.split_at(p);
                let (b, y) = rest.split_at(h);
                let f = match kind {
                    ConjectureKind::Pbw => {
                        let mut f = root_block(&es, x, false);
                        f.extend(cartan_block(b, i0, Some(ring)));
                        f.extend(root_block(&fs, y, false));
                        f
                    }
                    ConjectureKind::FHE => {
                        let mut f = root_block(&fs, x, true);
                        f.extend(cartan_block(b, i0, None));
                        f.extend(root_block(&es, y, true));
                        f
                    }
                    _ => {
                        let mut f = root_block(&es, x, true);
                        f.extend(cartan_block(b, i0, None));
                        f.extend(root_block(&fs, y, true));
                        f
                    }
                };
                out.push(KostantMonomial::new(f));
            }
        }
    }
    Ok(out)
}
