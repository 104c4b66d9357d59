//! Hamilton quaternions over a commutative scalar ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, Rational};

/// A commutative ring usable as quaternion coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Splits into a sign and the text of the magnitude, for `a - b*I` style output.
    fn signed_text(&self) -> (bool, String);
}

impl Scalar for Rational {
    fn signed_text(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl Scalar for CycloScalar {
    fn signed_text(&self) -> (bool, String) {
        if self.is_rational() {
            self.one.signed_text()
        } else {
            (false, format!("({self})"))
        }
    }
}

/// `r + i*I + j*J + k*K`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<S> {
    pub r: S,
    pub i: S,
    pub j: S,
    pub k: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(r: S, i: S, j: S, k: S) -> Self {
        Quaternion { r, i, j, k }
    }

    pub fn scalar(r: S) -> Self {
        Quaternion::new(r, S::zero(), S::zero(), S::zero())
    }

    pub fn unit_i() -> Self {
        Quaternion::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn unit_j() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn unit_k() -> Self {
        Quaternion::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.r, &self.i, &self.j, &self.k]
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.r.clone(),
            -self.i.clone(),
            -self.j.clone(),
            -self.k.clone(),
        )
    }

    /// `q * conj(q)`, checked to be a pure scalar.
    pub fn norm(&self) -> Result<S> {
        let p = self * &self.conj();
        if p.i.is_zero() && p.j.is_zero() && p.k.is_zero() {
            Ok(p.r)
        } else {
            Err(Error::NonScalarNorm(p.to_string()))
        }
    }

    /// `r^2 + i^2 + j^2 + k^2`, without going through the product.
    pub fn sum_of_squares(&self) -> S {
        self.components()
            .into_iter()
            .fold(S::zero(), |acc, c| acc + &(c.clone() * c))
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.clone() * s)
    }

    pub fn map<T>(&self, mut f: impl FnMut(&S) -> T) -> Quaternion<T> {
        Quaternion {
            r: f(&self.r),
            i: f(&self.i),
            j: f(&self.j),
            k: f(&self.k),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl Quaternion<Rational> {
    pub fn from_ints(r: i64, i: i64, j: i64, k: i64) -> Self {
        Quaternion::new(r.into(), i.into(), j.into(), k.into())
    }

    pub fn lift(&self) -> Quaternion<CycloScalar> {
        self.map(|c| CycloScalar::from_rational(c.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.components().iter().all(|c| c.is_integer())
    }
}

impl Quaternion<CycloScalar> {
    /// Drops the `w` parts, failing if any is nonzero.
    pub fn to_rational(&self) -> Result<Quaternion<Rational>> {
        if self.components().iter().all(|c| c.is_rational()) {
            Ok(self.map(|c| c.one.clone()))
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Applies `w -> w^2` to every coefficient.
    pub fn conjugate_scalars(&self) -> Self {
        self.map(CycloScalar::conjugate)
    }
}

impl<'a, S: Scalar> Add<&'a Quaternion<S>> for &'a Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: &'a Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.r.clone() + &rhs.r,
            self.i.clone() + &rhs.i,
            self.j.clone() + &rhs.j,
            self.k.clone() + &rhs.k,
        )
    }
}

impl<'a, S: Scalar> Sub<&'a Quaternion<S>> for &'a Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: &'a Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.r.clone() - &rhs.r,
            self.i.clone() - &rhs.i,
            self.j.clone() - &rhs.j,
            self.k.clone() - &rhs.k,
        )
    }
}

// i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
impl<'a, S: Scalar> Mul<&'a Quaternion<S>> for &'a Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, q: &'a Quaternion<S>) -> Quaternion<S> {
        let p = self;
        let m = |x: &S, y: &S| x.clone() * y;
        Quaternion::new(
            m(&p.r, &q.r) - &m(&p.i, &q.i) - &m(&p.j, &q.j) - &m(&p.k, &q.k),
            m(&p.r, &q.i) + &m(&p.i, &q.r) + &m(&p.j, &q.k) - &m(&p.k, &q.j),
            m(&p.r, &q.j) - &m(&p.i, &q.k) + &m(&p.j, &q.r) + &m(&p.k, &q.i),
            m(&p.r, &q.k) + &m(&p.i, &q.j) - &m(&p.j, &q.i) + &m(&p.k, &q.r),
        )
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<S: Scalar> $trait for Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: Quaternion<S>) -> Quaternion<S> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, S: Scalar> $trait<&'a Quaternion<S>> for Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: &'a Quaternion<S>) -> Quaternion<S> {
                (&self).$method(rhs)
            }
        }
        impl<'a, S: Scalar> $trait<Quaternion<S>> for &'a Quaternion<S> {
            type Output = Quaternion<S>;
            fn $method(self, rhs: Quaternion<S>) -> Quaternion<S> {
                self.$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion::new(-self.r, -self.i, -self.j, -self.k)
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        -self.clone()
    }
}

impl<S: Scalar> Zero for Quaternion<S> {
    fn zero() -> Self {
        Quaternion::scalar(S::zero())
    }
    fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }
}

/// Renders `r + i*I + j*J + k*K`, with subtraction for negative coefficients
/// and zero vector terms omitted (e.g. `3 + 10*I`, `-1/2 + 3*I + 1*J + 3*K`).
impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.r.is_zero() {
            let (neg, text) = self.r.signed_text();
            write!(f, "{}{}", if neg { "-" } else { "" }, text)?;
            wrote = true;
        }
        for (c, unit) in [(&self.i, "I"), (&self.j, "J"), (&self.k, "K")] {
            if c.is_zero() {
                continue;
            }
            let (neg, text) = c.signed_text();
            match (wrote, neg) {
                (false, false) => write!(f, "{text}*{unit}")?,
                (false, true) => write!(f, "-{text}*{unit}")?,
                (true, false) => write!(f, " + {text}*{unit}")?,
                (true, true) => write!(f, " - {text}*{unit}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: Scalar> Serialize for Quaternion<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}
