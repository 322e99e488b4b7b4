//! The fraction field Q(t), represented as reduced fractions of integer
//! Laurent polynomials.
//!
//! Canonical form: the denominator is an ordinary polynomial (lowest
//! exponent 0) with positive leading coefficient, the fraction is reduced
//! (polynomial gcd 1 after clearing t-powers) and the pair of integer
//! contents is coprime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // clear the t-power of the denominator into the numerator
        let dlo = den.min_exp().unwrap();
        let mut num = num.shifted(-dlo);
        let mut den = den.shifted(-dlo);
        // reduce by the polynomial gcd
        let g = num.gcd(&den);
        if !g.is_one() {
            // gcd is an ordinary polynomial; division is exact
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        // coprime integer contents, positive leading denominator coefficient
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact(&LaurentPoly::from_int(c.clone()));
            den = den.div_exact(&LaurentPoly::from_int(c));
        }
        // keep the denominator based at exponent 0 (gcd/content steps preserve it)
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::t_pow(e))
    }

    /// (-t^3)^e
    pub fn twist_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::twist_pow(e))
    }

    /// -(t^2 + t^-2)
    pub fn circle() -> Self {
        Self::from_laurent(LaurentPoly::circle())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    /// Parse `num / den` (den optional).
    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once('/') {
            None => Ok(Self::from_laurent(LaurentPoly::parse(s)?)),
            Some((n, d)) => {
                let num = LaurentPoly::parse(n.trim())?;
                let den = LaurentPoly::parse(d.trim())?;
                Self::new(num, den)
            }
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $m:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
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
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
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

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn inverse_of_t2_plus_tm2() {
        let x = rf("t^-2 + t^2");
        let inv = x.inverse().unwrap();
        // canonical denominator is based at exponent 0
        assert_eq!(inv.to_string(), "t^2 / t^0 + t^4");
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn reduction_verified_by_multiplying_back() {
        // (t^8 - 1)/(t^4 - 1) = t^4 + 1, checked via (t^4+1)(t^4-1)
        let q = rf("-t^0 + t^8") / rf("-t^0 + t^4");
        assert_eq!(q, rf("t^0 + t^4"));
        assert_eq!(&q * &rf("-t^0 + t^4"), rf("-t^0 + t^8"));
    }

    #[test]
    fn additive_inverse() {
        let a = rf("t^-3 + 5*t^2") / rf("3*t^0 + t^1");
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(SkeinError::DivisionByZero)
        ));
        assert!(RationalFunction::zero().inverse().is_err());
    }

    #[test]
    fn self_division_is_one() {
        let a = rf("-2*t^-1 + t^3") / rf("7*t^0 + t^2");
        assert!((&a / &a).is_one());
    }
}
