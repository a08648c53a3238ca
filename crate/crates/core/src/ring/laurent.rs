use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// An exact Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept in canonical form: no stored coefficient is zero, so two
/// values compare equal exactly when they denote the same polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The class of the affine line.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(coeff: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `q^exp` with coefficient one.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, integer coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        terms
            .iter()
            .map(|&(k, c)| (k, BigRational::from_integer(BigInt::from(c))))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when no negative power of `q` occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|k| k >= 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents are only defined for monomials, the
    /// units of the Laurent ring.
    pub fn pow_signed(&self, n: i64) -> Result<Self, RingError> {
        if n >= 0 {
            let n = u32::try_from(n).map_err(|_| RingError::ExponentTooLarge(n))?;
            return Ok(self.pow(n));
        }
        if !self.is_monomial() {
            return Err(RingError::NonInvertible(self.to_string()));
        }
        let (k, c) = self.terms().next().expect("monomial has one term");
        let m = n.unsigned_abs();
        let m32 = u32::try_from(m).map_err(|_| RingError::ExponentTooLarge(n))?;
        let inv = c.recip();
        let coeff = num_traits::pow::pow(inv, m32 as usize);
        Ok(Self::monomial(coeff, k * n))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Units of the Laurent ring are the monomials, so both sides are first
    /// normalised to polynomials with nonzero constant term; then ordinary long
    /// division over the rationals must leave no remainder.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let a_shift = self.min_exp().unwrap();
        let b_shift = divisor.min_exp().unwrap();
        let mut rem = dense(self, a_shift);
        let den = dense(divisor, b_shift);
        let den_deg = den.len() - 1;
        let lead_inv = den[den_deg].recip();
        if rem.len() < den.len() {
            return Err(RingError::InexactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        let quot_len = rem.len() - den_deg;
        let mut quot = vec![BigRational::zero(); quot_len];
        for i in (0..quot_len).rev() {
            let c = &rem[i + den_deg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(RingError::InexactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        let base = a_shift - b_shift;
        Ok(quot
            .into_iter()
            .enumerate()
            .map(|(i, c)| (base + i as i64, c))
            .collect())
    }

    /// Evaluates at a rational point.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational, RingError> {
        if q0.is_zero() {
            if self.min_exp().is_some_and(|k| k < 0) {
                return Err(RingError::EvaluationAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (k, c) in self.terms() {
            let p = if k >= 0 {
                num_traits::pow::pow(q0.clone(), k as usize)
            } else {
                num_traits::pow::pow(q0.recip(), k.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn evaluate_at_int(&self, q0: i64) -> Result<BigRational, RingError> {
        self.evaluate_at(&BigRational::from_integer(BigInt::from(q0)))
    }

    fn insert_add(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }
}

fn dense(p: &LaurentPoly, shift: i64) -> Vec<BigRational> {
    let top = (p.max_exp().unwrap() - shift) as usize;
    let mut v = vec![BigRational::zero(); top + 1];
    for (k, c) in p.terms() {
        v[(k - shift) as usize] = c.clone();
    }
    v
}

impl FromIterator<(i64, BigRational)> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.insert_add(k, c);
        }
        p
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in rhs.terms() {
            self.insert_add(k, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in rhs.terms() {
            self.insert_add(k, -c.clone());
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.insert_add(i + j, a * b);
            }
        }
        out
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Shorthand used throughout the formula tables: `a·q + b`.
pub(crate) fn lin(a: i64, b: i64) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(1, a), (0, b)])
}

pub(crate) fn is_negative(c: &BigRational) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels() {
        assert_eq!(p("q - 1") + p("q + 1"), p("2*q"));
        assert!((p("q^2 - 3") - p("q^2 - 3")).is_zero());
    }

    #[test]
    fn sl2_class_factorisation() {
        let q = LaurentPoly::q();
        assert_eq!(&q * &(p("q - 1") * p("q + 1")), p("q^3 - q"));
    }

    #[test]
    fn square_of_torus() {
        assert_eq!(p("q - 1").pow(2), p("q^2 - 2*q + 1"));
        assert_eq!(p("q - 1").pow(0), LaurentPoly::one());
    }

    #[test]
    fn signed_power() {
        assert_eq!(p("2*q").pow_signed(-2).unwrap(), p("1/4*q^-2"));
        assert_eq!(p("q + 1").pow_signed(3).unwrap(), p("q + 1").pow(3));
        assert!(matches!(
            p("q - 1").pow_signed(-1),
            Err(RingError::NonInvertible(_))
        ));
        assert!(matches!(
            LaurentPoly::zero().pow_signed(-1),
            Err(RingError::NonInvertible(_))
        ));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("q^3 - q").divide_exact(&p("q^2 - 1")).unwrap(), p("q"));
        assert_eq!(
            p("q^3 - q").divide_exact(&p("q^3 - q")).unwrap(),
            LaurentPoly::one()
        );
        let err = p("q^2 + 1").divide_exact(&p("q - 1")).unwrap_err();
        assert!(err.to_string().contains("inexact division"));
        assert!(matches!(
            p("q").divide_exact(&LaurentPoly::zero()),
            Err(RingError::DivisionByZero)
        ));
    }

    #[test]
    fn laurent_division_through_units() {
        // (q^2 - 1)/(q^3 - q) = q^-1
        assert_eq!(p("q^2 - 1").divide_exact(&p("q^3 - q")).unwrap(), p("q^-1"));
        assert_eq!(
            p("q^-1 - q^-3").divide_exact(&p("q^2 - 1")).unwrap(),
            p("q^-3")
        );
        assert!(p("1").divide_exact(&p("q + 1")).is_err());
    }

    #[test]
    fn evaluation() {
        let sl2 = p("q^3 - q");
        assert_eq!(
            sl2.evaluate_at_int(3).unwrap(),
            BigRational::from_integer(24.into())
        );
        assert_eq!(
            sl2.evaluate_at_int(5).unwrap(),
            BigRational::from_integer(120.into())
        );
        let half = p("q - 1").pow(2) + p("q + 1").pow(2);
        let half = half.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(
            half.evaluate_at_int(3).unwrap(),
            BigRational::from_integer(10.into())
        );
        assert!(matches!(
            p("q^-1").evaluate_at_int(0),
            Err(RingError::EvaluationAtZero)
        ));
        assert_eq!(
            p("q + 7").evaluate_at_int(0).unwrap(),
            BigRational::from_integer(7.into())
        );
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a: LaurentPoly = vec![(2, BigRational::zero()), (1, BigRational::one())]
            .into_iter()
            .collect();
        assert_eq!(a.num_terms(), 1);
        assert_eq!(a, LaurentPoly::q());
    }
}
