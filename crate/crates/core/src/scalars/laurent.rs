use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Element of `Z[v, v^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `v^(low + k)`. The first and
/// last stored coefficients are nonzero, and the zero polynomial has no
/// coefficients and `low == 0`, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    fn from_raw(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_raw(0, vec![c])
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::from_raw(exp, vec![c])
    }

    /// `v^exp`.
    pub fn v_power(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn v() -> Self {
        Self::v_power(1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let Some((&low, _)) = acc.iter().next() else {
            return Self::zero();
        };
        let high = *acc.keys().next_back().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in acc {
            coeffs[(e - low) as usize] = c;
        }
        Self::from_raw(low, coeffs)
    }

    /// Lowest and highest exponent with a nonzero coefficient.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some((self.low, self.low + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.low == 0)
    }

    /// Multiply by `v^k`.
    pub fn shift(mut self, k: i64) -> Self {
        if !self.coeffs.is_empty() {
            self.low += k;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        match self.degree_range() {
            None => Self::zero(),
            Some((_, high)) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPolynomial { low: -high, coeffs }
            }
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `Some((sign, k))` when the polynomial is `sign * v^k` with `sign = +-1`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.is_one() {
            Some((1, self.low))
        } else if (-c).is_one() {
            Some((-1, self.low))
        } else {
            None
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn divide_content(&self, c: &BigInt) -> Self {
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Exact quotient in `Z[v, v^-1]`, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly_div_exact(&self.coeffs, &other.coeffs)?;
        Some(Self::from_raw(self.low - other.low, q))
    }

    /// Greatest common divisor, normalized to have lowest exponent zero and a
    /// positive constant term. Unit factors `+-v^k` are ignored, so this is a gcd
    /// in `Z[v, v^-1]`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_associate();
        }
        if other.is_zero() {
            return self.normalized_associate();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let g = poly_gcd_primitive(
            &self.divide_content(&ca).coeffs,
            &other.divide_content(&cb).coeffs,
        );
        Self::from_raw(0, g).scale(&c).normalized_associate()
    }

    fn normalized_associate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = LaurentPolynomial {
            low: 0,
            coeffs: self.coeffs.clone(),
        };
        if p.coeffs[0].is_negative() {
            p = -p;
        }
        p
    }

    /// Split into `(k, p)` with `self = v^k p` and `p` having nonzero constant term.
    pub(crate) fn split_low(&self) -> (i64, Self) {
        (
            self.low,
            LaurentPolynomial {
                low: 0,
                coeffs: self.coeffs.clone(),
            },
        )
    }

    pub(crate) fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub(crate) fn divide_integer(&self, c: &BigInt) -> Self {
        self.divide_content(c)
    }

    /// `[[exp, "coef"], ...]` in increasing exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(e, c)| serde_json::json!([e, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        let arr = value.as_array()?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let pair = t.as_array()?;
            if pair.len() != 2 {
                return None;
            }
            let e = pair[0].as_i64()?;
            let c: BigInt = pair[1].as_str()?.parse().ok()?;
            terms.push((e, c));
        }
        Some(Self::from_terms(terms))
    }
}

// Dense polynomials over Z, constant term first.

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    // Lowest coefficients of both are nonzero, so Laurent exactness is polynomial exactness.
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (t, bc) in b.iter().enumerate() {
            r[k + t] -= &qc * bc;
        }
        q[k] = qc;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn poly_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn poly_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = poly_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

fn poly_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (t, bc) in b.iter().enumerate() {
            r[dr - db + t] -= &lr * bc;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (poly_primitive(a), poly_primitive(b));
    poly_trim(&mut a);
    poly_trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = poly_pseudo_rem(&a, &b);
        a = b;
        b = poly_primitive(&r);
    }
    a
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        Self::from_i64(1)
    }
    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

fn add_signed(a: &LaurentPolynomial, b: &LaurentPolynomial, negate_b: bool) -> LaurentPolynomial {
    let (Some((al, ah)), Some((bl, bh))) = (a.degree_range(), b.degree_range()) else {
        return if a.is_zero() {
            if negate_b {
                -b.clone()
            } else {
                b.clone()
            }
        } else {
            a.clone()
        };
    };
    let low = al.min(bl);
    let high = ah.max(bh);
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(al - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        if negate_b {
            coeffs[(bl - low) as usize + k] -= c;
        } else {
            coeffs[(bl - low) as usize + k] += c;
        }
    }
    LaurentPolynomial::from_raw(low, coeffs)
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        add_signed(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        add_signed(self, rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_raw(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = &*self - rhs;
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -self.clone()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (idx, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                write!(f, "v")?;
            } else if *e != 0 {
                write!(f, "v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn canonical_zero_after_cancellation() {
        let a = lp(&[(-2, 1), (3, 4)]);
        assert_eq!(&a - &a, LaurentPolynomial::zero());
        assert_eq!((&a - &a).degree_range(), None);
    }

    #[test]
    fn product_and_exact_division() {
        let a = lp(&[(-1, 1), (1, 1)]);
        let b = lp(&[(-3, 2), (0, -1), (2, 5)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert!(lp(&[(0, 1), (1, 1)]).div_exact(&lp(&[(0, 2)])).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = lp(&[(0, 1), (1, 1)]);
        let g = lp(&[(0, 1), (2, 1)]);
        let h = lp(&[(0, -2), (1, 3)]);
        let a = &f * &g;
        let b = (&f * &h).shift(4);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn bar_and_display() {
        let a = lp(&[(-1, 1), (2, -3)]);
        assert_eq!(a.bar(), lp(&[(1, 1), (-2, -3)]));
        assert_eq!(a.to_string(), "-3v^2 + v^-1");
        assert_eq!(LaurentPolynomial::from_json(&a.to_json()).unwrap(), a);
    }
}
