use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LaurentPolynomial;

/// Element of `Q(v)` kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no nonunit common factor in
/// `Z[v, v^-1]` and have coprime integer content, the denominator has lowest
/// exponent zero and a positive constant term. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    /// Reduces `num / den`. Returns `None` when `den` is zero.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nlow, mut np) = num.split_low();
        let (dlow, mut dp) = den.split_low();
        if !dp.is_constant() {
            let g = np.gcd(&dp);
            if !g.is_one() {
                np = np.div_exact(&g).expect("gcd divides numerator");
                dp = dp.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = np.content().gcd(&dp.content());
        if !c.is_one() {
            np = np.divide_integer(&c);
            dp = dp.divide_integer(&c);
        }
        if dp.lowest_coeff().is_some_and(|c| c.is_negative()) {
            np = -np;
            dp = -dp;
        }
        RationalFunction {
            num: np.shift(nlow - dlow),
            den: dp,
        }
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }

    pub fn from_integer(c: BigInt) -> Self {
        Self::from_laurent(LaurentPolynomial::constant(c))
    }

    pub fn v_power(exp: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::v_power(exp))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    /// The Laurent polynomial this equals, when the reduced denominator is a unit.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// True when the value lies in `Z[v, v^-1]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    /// Value at `v = 1`, or `None` if the denominator vanishes there.
    pub fn specialize_v1(&self) -> Option<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval_one(), d))
    }

    pub fn to_json(&self) -> serde_json::Value {
        if self.is_integral() {
            self.num.to_json()
        } else {
            serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        if value.is_array() {
            return Some(Self::from_laurent(LaurentPolynomial::from_json(value)?));
        }
        let num = LaurentPolynomial::from_json(value.get("num")?)?;
        let den = LaurentPolynomial::from_json(value.get("den")?)?;
        Self::new(num, den)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: LaurentPolynomial::zero(),
            den: LaurentPolynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_laurent(LaurentPolynomial::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_laurent(&self.num + &rhs.num);
            }
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::canonical(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -self.clone()
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
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
    fn reduces_common_factors() {
        // (v^2 - 1) / (2v - 2) = (v + 1) / 2
        let r = RationalFunction::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 2), (0, -2)])).unwrap();
        assert_eq!(r.numerator(), &lp(&[(1, 1), (0, 1)]));
        assert_eq!(r.denominator(), &lp(&[(0, 2)]));
    }

    #[test]
    fn unit_denominators_are_absorbed() {
        let r = RationalFunction::new(lp(&[(0, 3)]), lp(&[(2, -1)])).unwrap();
        assert!(r.is_integral());
        assert_eq!(r.numerator(), &lp(&[(-2, -3)]));
    }

    #[test]
    fn field_identities() {
        let a = RationalFunction::new(lp(&[(0, 1), (1, 1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        let b = RationalFunction::new(lp(&[(-1, 2)]), lp(&[(0, 1), (2, 1)])).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(a.bar().bar(), a);
        assert_eq!(a.specialize_v1(), None);
        assert_eq!(
            b.specialize_v1(),
            Some(BigRational::from_integer(BigInt::from(1)))
        );
    }
}
