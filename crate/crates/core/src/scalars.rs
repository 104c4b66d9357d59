//! Exact scalars: arbitrary-precision rationals and the ring `Q[w]/(w^2+w+1)`
//! holding the two primitive cube roots of unity.
//!
//! `w` plays the role of the root `(-1 + i*sqrt(3))/2`; its conjugate (and
//! square, and inverse) is `-1 - w`. Nothing here is ever approximated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// True when the denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        let d = self.denom();
        (d & (d - BigInt::one())).is_zero()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }
}

/// `2^n` for any integer `n`; negative exponents give `1 / 2^|n|`.
pub fn pow2(n: i64) -> Rational {
    let shift = n.unsigned_abs() as usize;
    let p = BigInt::one() << shift;
    if n >= 0 {
        Rational::from_integer(p)
    } else {
        Rational(BigRational::new(BigInt::one(), p))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => Ok(Rational::from_integer(
                s.trim().parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
forward_binop!(Rational, Add, add, |x, y| Rational(&x.0 + &y.0));
forward_binop!(Rational, Sub, sub, |x, y| Rational(&x.0 - &y.0));
forward_binop!(Rational, Mul, mul, |x, y| Rational(&x.0 * &y.0));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// An element `one + om*w` of `Q[w]/(w^2 + w + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycloScalar {
    pub one: Rational,
    pub om: Rational,
}

impl CycloScalar {
    pub fn new(one: impl Into<Rational>, om: impl Into<Rational>) -> Self {
        CycloScalar {
            one: one.into(),
            om: om.into(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloScalar {
            one: r,
            om: Rational::zero(),
        }
    }

    /// The primitive cube root `w`.
    pub fn omega() -> Self {
        CycloScalar::new(0, 1)
    }

    /// `w^n`, reduced to one of `1`, `w`, `-1 - w`.
    pub fn omega_pow(n: i64) -> Self {
        match n.rem_euclid(3) {
            0 => CycloScalar::new(1, 0),
            1 => CycloScalar::new(0, 1),
            _ => CycloScalar::new(-1, -1),
        }
    }

    /// The automorphism `w -> w^2 = -1 - w`.
    pub fn conjugate(&self) -> Self {
        CycloScalar {
            one: &self.one - &self.om,
            om: -&self.om,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    pub fn rational_part(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.one.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Field norm `x * conj(x) = a^2 - ab + b^2`.
    pub fn norm(&self) -> Rational {
        self.one.square() - &self.one * &self.om + self.om.square()
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        let c = self.conjugate();
        Ok(CycloScalar {
            one: c.one.checked_div(&n)?,
            om: c.om.checked_div(&n)?,
        })
    }

    pub fn checked_div(&self, rhs: &CycloScalar) -> Result<Self> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CycloScalar {
            one: &self.one * s,
            om: &self.om * s,
        }
    }
}

impl From<Rational> for CycloScalar {
    fn from(r: Rational) -> Self {
        CycloScalar::from_rational(r)
    }
}

impl From<i64> for CycloScalar {
    fn from(n: i64) -> Self {
        CycloScalar::from_rational(n.into())
    }
}

forward_binop!(CycloScalar, Add, add, |x, y| CycloScalar {
    one: &x.one + &y.one,
    om: &x.om + &y.om,
});
forward_binop!(CycloScalar, Sub, sub, |x, y| CycloScalar {
    one: &x.one - &y.one,
    om: &x.om - &y.om,
});
// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
forward_binop!(CycloScalar, Mul, mul, |x, y| {
    let bd = &x.om * &y.om;
    CycloScalar {
        one: &x.one * &y.one - &bd,
        om: &x.one * &y.om + &x.om * &y.one - bd,
    }
});

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            one: -self.one,
            om: -self.om,
        }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            one: -&self.one,
            om: -&self.om,
        }
    }
}

impl Zero for CycloScalar {
    fn zero() -> Self {
        CycloScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.one.is_zero() && self.om.is_zero()
    }
}

impl One for CycloScalar {
    fn one() -> Self {
        CycloScalar::new(1, 0)
    }
}

/// `a` when rational, otherwise `a+b*w` (or `a-b*w`).
impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.one);
        }
        if self.om.is_negative() {
            write!(f, "{}-{}*w", self.one, self.om.abs())
        } else {
            write!(f, "{}+{}*w", self.one, self.om)
        }
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CycloScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn w() -> CycloScalar {
        CycloScalar::omega()
    }

    #[test]
    fn rational_basic_ops() {
        assert_eq!(q(1, 2) + q(1, 2), q(1, 1));
        assert_eq!(q(3, 1) * q(1, 2), q(3, 2));
        assert_eq!(q(7, 1).checked_div(&q(3, 1)).unwrap(), q(7, 3));
        assert_eq!(-q(2, 3), q(-2, 3));
    }

    #[test]
    fn rational_division_by_zero() {
        assert_eq!(q(1, 1).checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_canonical_form() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(q(0, -5).denom(), &BigInt::from(1));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("10/-4".parse::<Rational>().unwrap(), q(-5, 2));
    }

    #[test]
    fn pow2_values() {
        assert_eq!(pow2(0), q(1, 1));
        assert_eq!(pow2(5), q(32, 1));
        assert_eq!(pow2(-1), q(1, 2));
        assert_eq!(pow2(-10), q(1, 1024));
        assert!(pow2(-7).is_dyadic());
        assert!(!q(1, 6).is_dyadic());
    }

    #[test]
    fn cyclo_mul_and_add() {
        assert_eq!(w() * w(), CycloScalar::new(-1, -1));
        assert_eq!(w() * CycloScalar::new(-1, -1), CycloScalar::new(1, 0));
        assert_eq!(w() + CycloScalar::new(-1, -1), CycloScalar::new(-1, 0));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(CycloScalar::omega_pow(3), CycloScalar::one());
        assert_eq!(CycloScalar::omega_pow(-1), CycloScalar::new(-1, -1));
        assert_eq!(CycloScalar::omega_pow(4), w());
        for n in -30..=30 {
            let p = CycloScalar::omega_pow(n) * CycloScalar::omega_pow(-n);
            assert_eq!(p, CycloScalar::one(), "n = {n}");
        }
    }

    #[test]
    fn omega_powers_match_repeated_multiplication() {
        let mut acc = CycloScalar::one();
        for n in 0..12 {
            assert_eq!(CycloScalar::omega_pow(n), acc);
            acc = acc * w();
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(w().conjugate(), CycloScalar::new(-1, -1));
        assert_eq!(CycloScalar::from(5).conjugate(), CycloScalar::from(5));
        let x = CycloScalar::new(1, 2);
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn rationality() {
        let s = w() + w().conjugate();
        assert!(s.is_rational());
        assert_eq!(s.rational_part().unwrap(), q(-1, 1));
        assert!(!w().is_rational());
        assert!(matches!(w().rational_part(), Err(Error::NotRational(_))));
        let m2 = CycloScalar::omega_pow(2) + CycloScalar::omega_pow(4);
        assert_eq!(m2.rational_part().unwrap(), q(-1, 1));
    }

    #[test]
    fn inverse() {
        let x = CycloScalar::new(1, 2);
        assert_eq!(&x * &x.checked_inv().unwrap(), CycloScalar::one());
        assert_eq!(CycloScalar::zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(CycloScalar::from(q(3, 2)).to_string(), "3/2");
        assert_eq!(CycloScalar::new(-1, -1).to_string(), "-1-1*w");
        assert_eq!(CycloScalar::new(0, q(1, 3)).to_string(), "0+1/3*w");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[derive(Debug, Clone)]
    enum Op {
        Add(i64, i64),
        Mul(i64, i64),
        Neg,
        Div(i64, i64),
    }

    fn op() -> impl Strategy<Value = Op> {
        prop_oneof![
            (-50i64..50, 1i64..30).prop_map(|(p, q)| Op::Add(p, q)),
            (-50i64..50, 1i64..30).prop_map(|(p, q)| Op::Mul(p, q)),
            Just(Op::Neg),
            (-50i64..50, 1i64..30).prop_map(|(p, q)| Op::Div(p, q)),
        ]
    }

    proptest! {
        #[test]
        fn stays_canonical(ops in proptest::collection::vec(op(), 1..20)) {
            let mut x = Rational::from(1);
            for o in ops {
                x = match o {
                    Op::Add(p, q) => x + Rational::new(p, q).unwrap(),
                    Op::Mul(p, q) => x * Rational::new(p, q).unwrap(),
                    Op::Neg => -x,
                    Op::Div(p, q) => match x.checked_div(&Rational::new(p, q).unwrap()) {
                        Ok(v) => v,
                        Err(e) => { prop_assert_eq!(p, 0); prop_assert_eq!(e, Error::DivisionByZero); x }
                    },
                };
                prop_assert!(x.denom() > &BigInt::zero());
                prop_assert!(x.numer().gcd(x.denom()).is_one());
            }
        }
    }
}
