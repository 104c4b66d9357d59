//! The scalar sequences: `M`, `X`, the modified third-order Jacobsthal
//! numbers `K` and the third-order Jacobsthal numbers `J3`.
//!
//! Everything is evaluated in closed form: a power of two plus a period-3
//! table. Negative indices are allowed and give dyadic rationals for `K` and
//! `J3`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{pow2, CycloScalar, Rational};

/// `M_n`: 2 when `3 | n`, otherwise -1. Equals `w^n + w^(-n)`.
pub fn m_val(n: i64) -> Rational {
    match n.rem_euclid(3) {
        0 => Rational::from(2),
        _ => Rational::from(-1),
    }
}

/// `X_n`: 0, 1, -1 for `n = 0, 1, 2 (mod 3)`.
pub fn x_val(n: i64) -> Rational {
    Rational::from([0, 1, -1][n.rem_euclid(3) as usize])
}

/// `K_n = 2^n + M_n`; `K_0, K_1, K_2 = 3, 1, 3`.
pub fn k_val(n: i64) -> Rational {
    pow2(n) + m_val(n)
}

/// `J3_n = (2^(n+1) - V_n) / 7` with `V` the period-3 table `2, -3, 1`.
///
/// Seeds are `J3_0, J3_1, J3_2 = 0, 1, 1` with
/// `J3_(n+3) = J3_(n+2) + J3_(n+1) + 2 J3_n`.
pub fn j3_val(n: i64) -> Rational {
    let v = Rational::from([2, -3, 1][n.rem_euclid(3) as usize]);
    (pow2(n + 1) - v)
        .checked_div(&Rational::from(7))
        .expect("nonzero divisor")
}

/// Coefficients `(c2, c1, c0)` of the recurrence satisfied by `J3` along the
/// progression `a*n + r`:
/// `J3_(a(n+3)+r) = c2 J3_(a(n+2)+r) + c1 J3_(a(n+1)+r) + c0 J3_(an+r)`.
pub fn progression_coeffs(a: i64) -> Result<(Rational, Rational, Rational)> {
    if a < 1 {
        return Err(Error::InvalidArgument(format!(
            "progression step must be >= 1, got {a}"
        )));
    }
    let wa = CycloScalar::omega_pow(a);
    let trace = (&wa + &wa.conjugate()).rational_part()?;
    let p = pow2(a);
    let c2 = &p + &trace;
    let c1 = -(&p * &trace + Rational::from(1));
    Ok((c2, c1, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeqName {
    K,
    M,
    X,
    J3,
}

impl SeqName {
    pub fn eval(self, n: i64) -> Rational {
        match self {
            SeqName::K => k_val(n),
            SeqName::M => m_val(n),
            SeqName::X => x_val(n),
            SeqName::J3 => j3_val(n),
        }
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqName::K => "K",
            SeqName::M => "M",
            SeqName::X => "X",
            SeqName::J3 => "J3",
        })
    }
}

impl FromStr for SeqName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" => Ok(SeqName::K),
            "M" | "m" => Ok(SeqName::M),
            "X" | "x" => Ok(SeqName::X),
            "J3" | "j3" => Ok(SeqName::J3),
            other => Err(Error::InvalidArgument(format!(
                "unknown sequence {other:?} (expected K, M, X or J3)"
            ))),
        }
    }
}

/// Values of one sequence over `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqTable {
    pub name: SeqName,
    pub lo: i64,
    pub hi: i64,
    pub values: Vec<Rational>,
}

#[derive(Serialize)]
struct Row<'a> {
    n: i64,
    value: &'a Rational,
}

impl SeqTable {
    pub fn build(name: SeqName, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
        }
        let values = (lo..=hi).map(|n| name.eval(n)).collect();
        Ok(SeqTable { name, lo, hi, values })
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, &Rational)> {
        (self.lo..=self.hi).zip(&self.values)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.rows() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Row> = self.rows().map(|(n, value)| Row { n, value }).collect();
        serde_json::to_string_pretty(&rows).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    /// `s_(n+3) = s_(n+2) + s_(n+1) + 2 s_n`, run forward and backward from three seeds.
    fn by_recurrence(seeds: [i64; 3], n: i64) -> Rational {
        let mut w: [Rational; 3] = seeds.map(Rational::from);
        if n >= 0 {
            for _ in 0..n {
                let next = &w[2] + &w[1] + Rational::from(2) * &w[0];
                w = [w[1].clone(), w[2].clone(), next];
            }
        } else {
            for _ in 0..(-n) {
                let prev = (&w[2] - &w[1] - &w[0])
                    .checked_div(&Rational::from(2))
                    .unwrap();
                w = [prev, w[0].clone(), w[1].clone()];
            }
        }
        w[0].clone()
    }

    #[test]
    fn m_and_x_tables() {
        assert_eq!(m_val(0), q(2, 1));
        assert_eq!(m_val(1), q(-1, 1));
        assert_eq!(m_val(-4), q(-1, 1));
        assert_eq!(x_val(1), q(1, 1));
        assert_eq!(x_val(2), q(-1, 1));
        assert_eq!(x_val(-1), q(-1, 1));
        assert_eq!(x_val(0), q(0, 1));
    }

    #[test]
    fn k_values() {
        let first: Vec<_> = (0..9).map(k_val).collect();
        let expect = [3, 1, 3, 10, 15, 31, 66, 127, 255].map(Rational::from).to_vec();
        assert_eq!(first, expect);
        assert_eq!(k_val(-1), q(-1, 2));
        assert_eq!(k_val(-2), q(-3, 4));
        assert_eq!(k_val(-3), q(17, 8));
    }

    #[test]
    fn k_agrees_with_recurrence_both_directions() {
        for n in -30..=40 {
            assert_eq!(k_val(n), by_recurrence([3, 1, 3], n), "n = {n}");
        }
    }

    #[test]
    fn j3_values() {
        let first: Vec<_> = (0..5).map(j3_val).collect();
        assert_eq!(first, [0, 1, 1, 2, 5].map(Rational::from).to_vec());
        assert_eq!(j3_val(-1), q(0, 1));
        assert_eq!(j3_val(-2), q(1, 2));
        for n in -30..=40 {
            assert_eq!(j3_val(n), by_recurrence([0, 1, 1], n), "n = {n}");
        }
        let rel = j3_val(2) + Rational::from(2) * j3_val(1) + Rational::from(6) * j3_val(0);
        assert_eq!(rel, k_val(2));
    }

    #[test]
    fn j3_seeds_forced_by_k_relation() {
        // with J3_(-2), J3_(-1), J3_0 = 1/2, 0, 0 the relation
        // K_n = J_n + 2J_(n-1) + 6J_(n-2) pins J3_1 = J3_2 = 1
        let two = Rational::from(2);
        let six = Rational::from(6);
        assert_eq!(k_val(0), &six * j3_val(-2));
        let j1 = k_val(1) - &two * j3_val(0) - &six * j3_val(-1);
        let j2 = k_val(2) - &two * &j1 - &six * j3_val(0);
        assert_eq!(j1, Rational::from(1));
        assert_eq!(j2, Rational::from(1));
    }

    #[test]
    fn k_recurrences() {
        for n in -30..=30 {
            assert_eq!(k_val(n + 3), k_val(n) + Rational::from(7) * pow2(n));
        }
        for n in -30..=27 {
            let rhs = k_val(n + 2) + k_val(n + 1) + Rational::from(2) * k_val(n);
            assert_eq!(k_val(n + 3), rhs);
        }
    }

    #[test]
    fn m_x_identities() {
        for n in -15..=15 {
            assert_eq!(m_val(n).square(), m_val(2 * n) + Rational::from(2));
            assert_eq!(m_val(-n), m_val(n));
            assert_eq!(x_val(-n), -x_val(n));
        }
        for n in -12..=12 {
            for m in -12..=12 {
                let rhs = x_val(m + 1) * m_val(n) - x_val(m) * m_val(n - 1);
                assert_eq!(m_val(n + m), rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn m_and_x_from_roots_of_unity() {
        let w = CycloScalar::omega();
        let diff = &w - &w.conjugate();
        for n in -30..=30 {
            let p = CycloScalar::omega_pow(n);
            assert_eq!((&p + &p.conjugate()).rational_part().unwrap(), m_val(n));
            let x = (&p - &p.conjugate()).checked_div(&diff).unwrap();
            assert_eq!(x.rational_part().unwrap(), x_val(n));
        }
    }

    #[test]
    fn k_to_j3_relation() {
        for n in -10..=20 {
            let rhs = j3_val(n)
                + Rational::from(2) * j3_val(n - 1)
                + Rational::from(6) * j3_val(n - 2);
            assert_eq!(k_val(n), rhs, "n = {n}");
        }
    }

    #[test]
    fn progression_coefficients() {
        let c = |a| progression_coeffs(a).unwrap();
        assert_eq!(c(1), (q(1, 1), q(1, 1), q(2, 1)));
        assert_eq!(c(2), (q(3, 1), q(3, 1), q(4, 1)));
        assert_eq!(c(3), (q(10, 1), q(-17, 1), q(8, 1)));
        assert!(progression_coeffs(0).is_err());
    }

    #[test]
    fn progression_recurrence() {
        for a in 1..=5 {
            let (c2, c1, c0) = progression_coeffs(a).unwrap();
            for r in 0..a {
                for n in 0..=6 {
                    let lhs = j3_val(a * (n + 3) + r);
                    let rhs = &c2 * j3_val(a * (n + 2) + r)
                        + &c1 * j3_val(a * (n + 1) + r)
                        + &c0 * j3_val(a * n + r);
                    assert_eq!(lhs, rhs, "a={a} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn integrality_and_dyadic_denominators() {
        for n in 0..=40 {
            assert!(k_val(n).is_integer() && j3_val(n).is_integer());
            assert!(k_val(n) > Rational::from(0));
        }
        for n in -40..0 {
            assert!(k_val(n).is_dyadic() && j3_val(n).is_dyadic());
        }
        assert_eq!(k_val(-5).denom(), &(BigInt::one() << 5));
    }

    #[test]
    fn tables() {
        let t = SeqTable::build(SeqName::K, -3, -1).unwrap();
        assert_eq!(t.to_csv(), "n,value\n-3,17/8\n-2,-3/4\n-1,-1/2\n");
        let m = SeqTable::build(SeqName::M, 0, 5).unwrap();
        assert_eq!(m.values, [2, -1, -1, 2, -1, -1].map(Rational::from).to_vec());
        assert!(SeqTable::build(SeqName::X, 3, 2).is_err());
        assert!("Q".parse::<SeqName>().is_err());
        let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json[0]["n"], -3);
        assert_eq!(json[0]["value"], "17/8");
    }
}
