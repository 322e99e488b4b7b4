//! Laurent polynomials in `t` with arbitrary-precision integer coefficients.
//!
//! The canonical text form lists signed terms in strictly increasing
//! exponent order, e.g. `-t^-4 + 2*t^0 - t^4`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SkeinError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    /// exponent of t -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::t_pow(0)
    }

    /// t^e
    pub fn t_pow(e: i64) -> Self {
        Self::term(BigInt::one(), e)
    }

    /// c * t^e
    pub fn term(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0)
    }

    /// -(t^2 + t^-2), the value of a free loop.
    pub fn circle() -> Self {
        -(LaurentPoly::t_pow(2) + LaurentPoly::t_pow(-2))
    }

    /// (-t^3)^e, the twist unit.
    pub fn twist_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::term(sign, 3 * e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(terms: &mut BTreeMap<i64, BigInt>, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by t^e.
    pub fn shifted(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// gcd of the integer coefficients (non-negative); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading coefficient at the highest exponent of t.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficient vector of the ordinary polynomial obtained by dividing
    /// out t^{min_exp}; empty for zero.
    pub fn ordinary_coeffs(&self) -> Vec<BigInt> {
        let Some(lo) = self.min_exp() else {
            return vec![];
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_ordinary(v: &[BigInt], base: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(base + i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }

    /// Polynomial gcd after clearing negative exponents; the result is an
    /// ordinary polynomial (lowest exponent 0), primitive with positive
    /// leading coefficient. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_ordinary();
        }
        if other.is_zero() {
            return self.normalized_ordinary();
        }
        let a = self.ordinary_coeffs();
        let b = other.ordinary_coeffs();
        let g = poly_gcd(&a, &b);
        LaurentPoly::from_ordinary(&g, 0)
    }

    /// The same polynomial with t-powers cleared, primitive, positive lead.
    fn normalized_ordinary(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut v = self.ordinary_coeffs();
        let mut content = BigInt::zero();
        for c in &v {
            content = content.gcd(c);
        }
        if v.last().unwrap().is_negative() {
            content = -content;
        }
        for c in &mut v {
            *c = &*c / &content;
        }
        LaurentPoly::from_ordinary(&v, 0)
    }

    /// Exact division; panics if `d` does not divide `self`.
    /// Used only on paths where divisibility is an invariant.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let base = self.min_exp().unwrap() - d.min_exp().unwrap();
        let a = self.ordinary_coeffs();
        let b = d.ordinary_coeffs();
        let q = poly_div_exact(&a, &b).expect("exact division failed");
        LaurentPoly::from_ordinary(&q, base)
    }

    /// Evaluate at a rational t; the test-utility escape hatch.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = pow_rational(t, *e);
            acc += BigRational::from(c.clone()) * p;
        }
        acc
    }

    /// Parse the canonical text form (also accepts small variations such as
    /// omitted `^` powers of one and bare integer constants).
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = LaurentPoly::zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(out);
        }
        // split into signed summands
        let mut pieces: Vec<(i32, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = 1;
        let mut first = true;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !first && !cur.ends_with('^') {
                pieces.push((sign, cur.clone()));
                cur.clear();
                sign = if ch == '-' { -1 } else { 1 };
            } else if ch == '-' && first {
                sign = -1;
            } else if ch == '+' && first {
            } else {
                cur.push(ch);
            }
            first = false;
        }
        pieces.push((sign, cur));
        for (i, (sg, p)) in pieces.into_iter().enumerate() {
            let (coeff_str, exp_str) = if let Some(pos) = p.find('t') {
                let c = p[..pos].trim_end_matches('*').to_string();
                let rest = &p[pos + 1..];
                let e = if let Some(stripped) = rest.strip_prefix('^') {
                    stripped.to_string()
                } else if rest.is_empty() {
                    "1".to_string()
                } else {
                    return Err(SkeinError::ParseError {
                        position: i,
                        message: format!("bad term `{p}`"),
                    });
                };
                (c, e)
            } else {
                (p.clone(), "0".to_string())
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|_| SkeinError::ParseError {
                    position: i,
                    message: format!("bad coefficient `{coeff_str}`"),
                })?
            };
            let exp: i64 = exp_str.parse().map_err(|_| SkeinError::ParseError {
                position: i,
                message: format!("bad exponent `{exp_str}`"),
            })?;
            Self::insert_add(&mut out.terms, exp, coeff * sg);
        }
        Ok(out)
    }
}

fn pow_rational(t: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let b = if e >= 0 { t.clone() } else { t.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Primitive gcd of ordinary polynomials over Z via the subresultant PRS.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    fn trim(v: &mut Vec<BigInt>) {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    }
    fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
        let mut content = BigInt::zero();
        for c in &v {
            content = content.gcd(c);
        }
        if content.is_zero() {
            return v;
        }
        if v.last().unwrap().is_negative() {
            content = -content;
        }
        for c in &mut v {
            *c = &*c / &content;
        }
        v
    }
    // pseudo-remainder
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r: Vec<BigInt> = a.to_vec();
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        while r.len() >= b.len() {
            let dr = r.len() - 1;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            let shift = dr - db;
            for (i, bc) in b.iter().enumerate() {
                let sub = bc * &lr;
                r[shift + i] -= sub;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }
    let mut p = primitive(a.to_vec());
    let mut q = primitive(b.to_vec());
    trim(&mut p);
    trim(&mut q);
    if p.is_empty() {
        return q;
    }
    if q.is_empty() {
        return p;
    }
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q);
        if r.is_empty() {
            return primitive(q);
        }
        p = q;
        q = primitive(r);
    }
}

/// Exact division of ordinary polynomials; None if not divisible.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() < b.len() {
        return if r.iter().all(|c| c.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    let lb = b.last().unwrap();
    for i in (0..q.len()).rev() {
        let lr = r[i + b.len() - 1].clone();
        if lr.is_zero() {
            continue;
        }
        let (qq, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        q[i] = qq.clone();
        for (j, bc) in b.iter().enumerate() {
            let sub = bc * &qq;
            r[i + j] -= sub;
        }
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            LaurentPoly::insert_add(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            LaurentPoly::insert_add(&mut terms, *e, -c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                LaurentPoly::insert_add(&mut terms, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { terms }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "t^{e}")?;
            } else {
                write!(f, "{abs}*t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = lp("t^-1 + t^1");
        let b = lp("-t^-1 + t^1");
        assert_eq!(&a * &b, lp("-t^-2 + t^2"));
    }

    #[test]
    fn absorbing_zero() {
        let x = lp("3*t^-5 + t^0 - 7*t^2");
        assert!((&x * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn twist_units_cancel() {
        // (-t^3)(-t^-3) = 1
        let a = LaurentPoly::term(-1, 3);
        let b = LaurentPoly::term(-1, -3);
        assert!((&a * &b).is_one());
        assert_eq!(LaurentPoly::twist_pow(1), a);
        assert_eq!(LaurentPoly::twist_pow(-1), b);
        assert!((LaurentPoly::twist_pow(5) * LaurentPoly::twist_pow(-5)).is_one());
    }

    #[test]
    fn canonical_text_round_trip() {
        let x = lp("-t^-4 + 2*t^0 - t^4");
        assert_eq!(x.to_string(), "-t^-4 + 2*t^0 - t^4");
        assert_eq!(LaurentPoly::parse(&x.to_string()).unwrap(), x);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = lp("-t^0 + t^8"); // t^8 - 1
        let b = lp("-t^0 + t^4"); // t^4 - 1
        let g = a.gcd(&b);
        assert_eq!(g, b);
        assert_eq!(a.div_exact(&b), lp("t^0 + t^4"));
    }

    #[test]
    fn eval_matches_symbolic() {
        let a = lp("t^-2 + 3*t^1");
        let t = BigRational::new(2.into(), 3.into());
        let v = a.eval(&t);
        // (3/2)^2 + 3*(2/3) = 9/4 + 2 = 17/4
        assert_eq!(v, BigRational::new(17.into(), 4.into()));
    }
}
