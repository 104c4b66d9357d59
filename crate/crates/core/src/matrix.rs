//! The 3x3 quaternion matrix generator
//!
//! ```text
//! J_n = [ QK_(n+3)  QK_(n+4) - QK_(n+3)  2 QK_(n+2) ]
//!       [ QK_(n+2)  QK_(n+3) - QK_(n+2)  2 QK_(n+1) ]
//!       [ QK_(n+1)  QK_(n+2) - QK_(n+1)  2 QK_n     ]
//! ```
//!
//! and the identity `J_n = J_0 A^n` for the companion matrix
//! `A = [[1,1,2],[1,0,0],[0,1,0]]` of `x^3 = x^2 + x + 2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalars::Rational;
use crate::unrestricted::{qk, qm, OffsetTriple};

type Q = Quaternion<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix3<T>(pub [[T; 3]; 3]);

impl<T> Matrix3<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Matrix3(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn entry(&self, r: usize, c: usize) -> &T {
        &self.0[r][c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.0.iter().enumerate() {
            let sep = if r == 0 { "" } else { "; " };
            write!(f, "{sep}{}, {}, {}", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

pub type IntMatrix3 = Matrix3<BigInt>;
pub type QMatrix3 = Matrix3<Q>;

impl IntMatrix3 {
    pub fn identity() -> Self {
        Matrix3::from_fn(|r, c| if r == c { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Matrix3::from_fn(|r, c| BigInt::from(rows[r][c]))
    }

    /// `[[1,1,2],[1,0,0],[0,1,0]]`.
    pub fn companion() -> Self {
        IntMatrix3::from_ints([[1, 1, 2], [1, 0, 0], [0, 1, 0]])
    }

    pub fn mul(&self, rhs: &IntMatrix3) -> IntMatrix3 {
        Matrix3::from_fn(|r, c| (0..3).map(|k| &self.0[r][k] * &rhs.0[k][c]).sum())
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u32) -> IntMatrix3 {
        let mut base = self.clone();
        let mut acc = IntMatrix3::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }
}

/// `A^n` for the companion matrix `A`.
pub fn companion_power(n: u32) -> IntMatrix3 {
    IntMatrix3::companion().pow(n)
}

impl QMatrix3 {
    /// Right multiplication by an integer matrix; integer entries are central.
    pub fn mul_int(&self, rhs: &IntMatrix3) -> QMatrix3 {
        Matrix3::from_fn(|r, c| {
            (0..3).fold(Q::from_ints(0, 0, 0, 0), |acc, k| {
                acc + self.0[r][k].scale(&Rational::from(rhs.0[k][c].clone()))
            })
        })
    }
}

/// The generator layout filled from an arbitrary quaternion sequence.
pub fn generator(n: i64, seq: impl Fn(i64) -> Q) -> QMatrix3 {
    let two = Rational::from(2);
    Matrix3::from_fn(|r, c| {
        let top = n + 3 - r as i64;
        match c {
            0 => seq(top),
            1 => seq(top + 1) - seq(top),
            _ => seq(top - 1).scale(&two),
        }
    })
}

pub fn jmatrix(n: i64, t: &OffsetTriple) -> Result<QMatrix3> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("matrix index must be >= 0, got {n}")));
    }
    Ok(generator(n, |m| qk(m, t)))
}

/// The same layout at `n = 0` filled with `QM` instead of `QK`.
pub fn jmatrix_qm0(t: &OffsetTriple) -> QMatrix3 {
    generator(0, |m| qm(m, t))
}

/// Which matrix seeds the power identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum J0Variant {
    /// `J_0` built from `QK`; the identity holds.
    Qk,
    /// `J_0` built from `QM`, as the identity is printed; fails already at `n = 0`.
    Qm,
}

pub fn j0(t: &OffsetTriple, variant: J0Variant) -> QMatrix3 {
    match variant {
        J0Variant::Qk => generator(0, |m| qk(m, t)),
        J0Variant::Qm => jmatrix_qm0(t),
    }
}

/// `J_n == J_0 A^n`, entrywise exact.
pub fn matrix_identity_check(n: i64, t: &OffsetTriple, variant: J0Variant) -> Result<bool> {
    let lhs = jmatrix(n, t)?;
    let power = u32::try_from(n)
        .map_err(|_| Error::InvalidArgument(format!("matrix index out of range: {n}")))?;
    Ok(lhs == j0(t, variant).mul_int(&companion_power(power)))
}
