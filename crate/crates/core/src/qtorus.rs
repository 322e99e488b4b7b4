//! The quantum torus on lambda, mu with lambda mu = t^2 mu lambda, its
//! inversion involution, the symmetric boundary generators and Chebyshev
//! polynomials.
//!
//! Elements are kept normal-ordered with mu powers left of lambda powers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::rational::RationalFunction;

/// Normal-ordered element: map (mu exponent b, lambda exponent a) -> coeff,
/// standing for sum c * mu^b lambda^a.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTorusElement {
    terms: BTreeMap<(i64, i64), RationalFunction>,
}

impl QTorusElement {
    pub fn zero() -> Self {
        QTorusElement::default()
    }

    pub fn one() -> Self {
        Self::monomial(RationalFunction::one(), 0, 0)
    }

    /// c * mu^b lambda^a
    pub fn monomial(c: RationalFunction, b: i64, a: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((b, a), c);
        }
        QTorusElement { terms }
    }

    pub fn lambda(a: i64) -> Self {
        Self::monomial(RationalFunction::one(), 0, a)
    }

    pub fn mu(b: i64) -> Self {
        Self::monomial(RationalFunction::one(), b, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: i64, a: i64) -> RationalFunction {
        self.terms
            .get(&(b, a))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(terms: &mut BTreeMap<(i64, i64), RationalFunction>, k: (i64, i64), c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Self::insert_add(&mut terms, *k, c.clone());
        }
        QTorusElement { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Self::insert_add(&mut terms, *k, -c);
        }
        QTorusElement { terms }
    }

    pub fn neg(&self) -> Self {
        QTorusElement {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTorusElement {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Product, normal-ordered with lambda^a mu^b = t^{2ab} mu^b lambda^a.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for ((b1, a1), c1) in &self.terms {
            for ((b2, a2), c2) in &other.terms {
                let twist = RationalFunction::t_pow(2 * a1 * b2);
                let c = &(c1 * c2) * &twist;
                Self::insert_add(&mut terms, (b1 + b2, a1 + a2), c);
            }
        }
        QTorusElement { terms }
    }

    /// Minimal and maximal lambda exponents present.
    pub fn lambda_range(&self) -> Option<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &(_, a) in self.terms.keys() {
            lo = lo.min(a);
            hi = hi.max(a);
        }
        if lo == i64::MAX {
            None
        } else {
            Some((lo, hi))
        }
    }

    pub fn mu_range(&self) -> Option<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &(b, _) in self.terms.keys() {
            lo = lo.min(b);
            hi = hi.max(b);
        }
        if lo == i64::MAX {
            None
        } else {
            Some((lo, hi))
        }
    }

    /// Coefficient of lambda^a as a map b -> coeff.
    pub fn lambda_slice(&self, a: i64) -> BTreeMap<i64, RationalFunction> {
        self.terms
            .iter()
            .filter(|((_, aa), _)| *aa == a)
            .map(|((b, _), c)| (*b, c.clone()))
            .collect()
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for ((b, a), c) in &self.terms {
            let cs = c.to_string();
            let coeff = if c.is_one() {
                String::new()
            } else if c.numerator().num_terms() > 1 || !c.is_polynomial() {
                format!("({cs}) * ")
            } else {
                format!("{cs} * ")
            };
            let mono = match (*b, *a) {
                (0, 0) => "1".to_string(),
                (b, 0) => format!("m^{b}"),
                (0, a) => format!("l^{a}"),
                (b, a) => format!("m^{b} l^{a}"),
            };
            if coeff.is_empty() && mono == "1" {
                parts.push("1".to_string());
            } else if mono == "1" {
                parts.push(cs);
            } else {
                parts.push(format!("{coeff}{mono}"));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for QTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl fmt::Debug for QTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The inversion involution: lambda -> lambda^-1, mu -> mu^-1 on
/// normal-ordered monomials. An algebra automorphism.
pub fn theta(u: &QTorusElement) -> QTorusElement {
    let mut out = QTorusElement::zero();
    for ((b, a), c) in u.terms() {
        out = out.add(&QTorusElement::monomial(c.clone(), -b, -a));
    }
    out
}

/// The symmetric boundary generators
///   x_l  = -lambda - lambda^-1,
///   x_m  = -mu - mu^-1,
///   x_lm = t (lambda mu^-1 + lambda^-1 mu),
/// each invariant under the inversion involution.
pub fn boundary_generators() -> (QTorusElement, QTorusElement, QTorusElement) {
    let x_l = QTorusElement::lambda(1).add(&QTorusElement::lambda(-1)).neg();
    let x_m = QTorusElement::mu(1).add(&QTorusElement::mu(-1)).neg();
    let t = RationalFunction::t_pow(1);
    let lm = QTorusElement::lambda(1)
        .mul(&QTorusElement::mu(-1))
        .add(&QTorusElement::lambda(-1).mul(&QTorusElement::mu(1)));
    let x_lm = lm.scale(&t);
    (x_l, x_m, x_lm)
}

/// Coefficients of the Chebyshev-like polynomials T_n:
/// T_n = x T_{n-1} - T_{n-2}, T_0 = 1, T_1 = x.
pub fn chebyshev(n: usize) -> Vec<BigInt> {
    crate::bracket::chebyshev_coeffs(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rf(e: i64) -> RationalFunction {
        RationalFunction::t_pow(e)
    }

    #[test]
    fn defining_relation() {
        // lambda mu = t^2 mu lambda
        let l = QTorusElement::lambda(1);
        let m = QTorusElement::mu(1);
        let lm = l.mul(&m);
        assert_eq!(lm, QTorusElement::monomial(rf(2), 1, 1));
    }

    #[test]
    fn inverses_cancel() {
        let ml = QTorusElement::mu(1).mul(&QTorusElement::lambda(1));
        let inv = QTorusElement::lambda(-1).mul(&QTorusElement::mu(-1));
        assert_eq!(ml.mul(&inv), QTorusElement::one());
    }

    #[test]
    fn iterated_swap_oracle() {
        // lambda^2 mu^3 = t^12 mu^3 lambda^2, cross-checked by swapping one
        // power at a time
        let l2 = QTorusElement::lambda(2);
        let m3 = QTorusElement::mu(3);
        let direct = l2.mul(&m3);
        let mut single = QTorusElement::one();
        for _ in 0..2 {
            single = single.mul(&QTorusElement::lambda(1));
        }
        for _ in 0..3 {
            single = single.mul(&QTorusElement::mu(1));
        }
        assert_eq!(direct, single);
        assert_eq!(direct, QTorusElement::monomial(rf(12), 3, 2));
    }

    #[test]
    fn random_associativity_and_distributivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rand_elem = |rng: &mut ChaCha8Rng| {
            let mut e = QTorusElement::zero();
            for _ in 0..rng.gen_range(1..4) {
                e = e.add(&QTorusElement::monomial(
                    rf(rng.gen_range(-3..4)),
                    rng.gen_range(-3..4),
                    rng.gen_range(-3..4),
                ));
            }
            e
        };
        for _ in 0..300 {
            let a = rand_elem(&mut rng);
            let b = rand_elem(&mut rng);
            let c = rand_elem(&mut rng);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }

    #[test]
    fn theta_is_an_involutive_algebra_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let rand_elem = |rng: &mut ChaCha8Rng| {
            let mut e = QTorusElement::zero();
            for _ in 0..rng.gen_range(1..4) {
                e = e.add(&QTorusElement::monomial(
                    rf(rng.gen_range(-3..4)),
                    rng.gen_range(-3..4),
                    rng.gen_range(-3..4),
                ));
            }
            e
        };
        assert_eq!(theta(&QTorusElement::lambda(1)), QTorusElement::lambda(-1));
        for _ in 0..100 {
            let a = rand_elem(&mut rng);
            let b = rand_elem(&mut rng);
            assert_eq!(theta(&theta(&a)), a);
            assert_eq!(theta(&a.mul(&b)), theta(&a).mul(&theta(&b)));
        }
    }

    #[test]
    fn boundary_generators_are_theta_invariant() {
        let (x_l, x_m, x_lm) = boundary_generators();
        assert_eq!(theta(&x_l), x_l);
        assert_eq!(theta(&x_m), x_m);
        assert_eq!(theta(&x_lm), x_lm);
        // normal-ordered form of x_lm: t^-1 (mu^-1 lambda + mu lambda^-1)
        assert_eq!(x_lm.coeff(-1, 1), rf(-1));
        assert_eq!(x_lm.coeff(1, -1), rf(-1));
        assert_eq!(x_lm.num_terms(), 2);
    }

    #[test]
    fn chebyshev_identity_on_lambda() {
        // T_n(-lambda - lambda^-1) = (-1)^n (lambda^n + lambda^{n-2} + ... + lambda^-n)
        let (x_l, _, _) = boundary_generators();
        for n in 0..=8usize {
            let coeffs = chebyshev(n);
            let mut val = QTorusElement::zero();
            let mut pow = QTorusElement::one();
            for c in &coeffs {
                if !c.is_zero() {
                    val = val.add(&pow.scale(&RationalFunction::from_int(c.clone())));
                }
                pow = pow.mul(&x_l);
            }
            let mut expect = QTorusElement::zero();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let mut a = -(n as i64);
            while a <= n as i64 {
                expect = expect.add(&QTorusElement::monomial(
                    RationalFunction::from_int(sign),
                    0,
                    a,
                ));
                a += 2;
            }
            assert_eq!(val, expect, "n = {n}");
        }
    }
}
