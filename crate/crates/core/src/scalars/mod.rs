//! Exact scalars: rationals, Laurent polynomials in `v`, rational functions in
//! `v`, and the quantum integers, factorials and binomials built from them.

mod laurent;
mod rational_function;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use laurent::LaurentPolynomial;
pub use rational_function::RationalFunction;

/// Which of the two scalar rings an algebra instance lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarRing {
    Classical,
    Quantum,
}

impl ScalarRing {
    pub fn name(&self) -> &'static str {
        match self {
            ScalarRing::Classical => "classical",
            ScalarRing::Quantum => "quantum",
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ScalarRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(ScalarRing::Classical),
            "quantum" => Ok(ScalarRing::Quantum),
            _ => Err(Error::Parse(format!("unknown ring `{s}`"))),
        }
    }
}

/// Exact field arithmetic shared by the classical and quantum scalar rings.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.clone() / other.clone()
    }

    /// Membership in the integral form: `Z` for rationals, `Z[v, v^-1]` for rational functions.
    fn is_integral(&self) -> bool;

    /// Value at `v = 1`. Rationals are returned unchanged.
    fn specialize_v1(&self) -> Option<BigRational>;

    fn to_json(&self) -> serde_json::Value;

    fn from_json(value: &serde_json::Value) -> Option<Self>;
}

impl Field for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn specialize_v1(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format!("{}/{}", self.numer(), self.denom()))
    }
    fn from_json(value: &serde_json::Value) -> Option<Self> {
        let s = value.as_str()?;
        match s.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(n.trim().parse().ok()?, d))
            }
            None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
        }
    }
}

impl Field for RationalFunction {
    fn from_bigint(n: BigInt) -> Self {
        RationalFunction::from_integer(n)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn is_integral(&self) -> bool {
        RationalFunction::is_integral(self)
    }
    fn specialize_v1(&self) -> Option<BigRational> {
        RationalFunction::specialize_v1(self)
    }
    fn to_json(&self) -> serde_json::Value {
        RationalFunction::to_json(self)
    }
    fn from_json(value: &serde_json::Value) -> Option<Self> {
        RationalFunction::from_json(value)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Generalized binomial `c(c-1)...(c-t+1) / t!`, valid for negative `c`.
pub fn binomial(c: i64, t: u32) -> BigInt {
    let mut num = BigInt::one();
    for s in 0..t as i64 {
        num *= BigInt::from(c - s);
    }
    num / factorial(t)
}

/// Quantum integer `[m] = (v^m - v^-m) / (v - v^-1)`, for any integer `m`.
pub fn quantum_integer(m: i64) -> LaurentPolynomial {
    let a = m.abs();
    let p = LaurentPolynomial::from_terms((0..a).map(|k| (a - 1 - 2 * k, BigInt::one())));
    if m < 0 {
        -p
    } else {
        p
    }
}

/// `[m]! = [1][2]...[m]`.
pub fn quantum_factorial(m: u32) -> LaurentPolynomial {
    (1..=m as i64).fold(LaurentPolynomial::one(), |acc, k| {
        &acc * &quantum_integer(k)
    })
}

fn gaussian_cache() -> &'static Mutex<HashMap<(i64, u32), LaurentPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, u32), LaurentPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gaussian binomial `[c, t] = [c][c-1]...[c-t+1] / [t]!`, valid for negative `c`.
///
/// The division is carried out exactly in `Z[v, v^-1]`; a nonzero remainder is
/// reported as [`Error::InexactDivision`].
pub fn quantum_binomial(c: i64, t: u32) -> Result<LaurentPolynomial> {
    if let Some(p) = gaussian_cache().lock().unwrap().get(&(c, t)) {
        return Ok(p.clone());
    }
    let mut num = LaurentPolynomial::one();
    for s in 0..t as i64 {
        num = &num * &quantum_integer(c - s);
    }
    let den = quantum_factorial(t);
    let p = num
        .div_exact(&den)
        .ok_or_else(|| Error::InexactDivision(format!("[{c}, {t}]")))?;
    gaussian_cache().lock().unwrap().insert((c, t), p.clone());
    Ok(p)
}

/// Image of a Laurent polynomial under `v -> 1`.
pub fn specialize_v1(p: &LaurentPolynomial) -> BigInt {
    p.eval_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers_match_definition() {
        // (v^m - v^-m) = (v - v^-1) [m]
        let d = &LaurentPolynomial::v() - &LaurentPolynomial::v_power(-1);
        for m in -6..=6 {
            let lhs = &LaurentPolynomial::v_power(m) - &LaurentPolynomial::v_power(-m);
            assert_eq!(lhs, &d * &quantum_integer(m), "m = {m}");
        }
    }

    #[test]
    fn gaussian_binomials_specialize_to_binomials() {
        for c in -5..=7 {
            for t in 0..=5 {
                let g = quantum_binomial(c, t).unwrap();
                assert_eq!(specialize_v1(&g), binomial(c, t), "c = {c}, t = {t}");
                assert_eq!(g.bar(), g);
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(
            quantum_binomial(4, 2).unwrap().to_string(),
            "v^4 + v^2 + 2 + v^-2 + v^-4"
        );
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(quantum_binomial(3, 5).unwrap(), LaurentPolynomial::zero());
    }

    #[test]
    fn rational_json_round_trip() {
        let q = BigRational::new(BigInt::from(-3), BigInt::from(6));
        assert_eq!(q.to_json(), serde_json::json!("-1/2"));
        assert_eq!(<BigRational as Field>::from_json(&q.to_json()).unwrap(), q);
    }
}
