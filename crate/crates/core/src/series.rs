//! Truncated power series with quaternion coefficients, used to check the
//! rational generating function of `QK_n`:
//!
//! ```text
//! sum QK_j x^j = N(x) / (1 - x - x^2 - 2x^3)
//! N(x) = Theta (1 + x + x^2) + Phi1 (1 + (w1 - 1) x + 2 w2 x^2) + Phi2 (1 + (w2 - 1) x + 2 w1 x^2)
//! ```

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalars::{CycloScalar, Rational};
use crate::unrestricted::{basis, qk, OffsetTriple};

type QW = Quaternion<CycloScalar>;

/// Polynomial with `Quaternion<CycloScalar>` coefficients, lowest degree
/// first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<QW>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<QW>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QW] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^d` (zero past the degree).
    pub fn coeff(&self, d: usize) -> QW {
        self.coeffs.get(d).cloned().unwrap_or_else(QW::zero)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    /// `q(x) * s(x)` for a polynomial `s` with central coefficients.
    pub fn mul_central(&self, s: &[CycloScalar]) -> QPoly {
        if self.coeffs.is_empty() || s.is_empty() {
            return QPoly::default();
        }
        let mut out = vec![QW::zero(); self.coeffs.len() + s.len() - 1];
        for (i, q) in self.coeffs.iter().enumerate() {
            for (j, c) in s.iter().enumerate() {
                out[i + j] = &out[i + j] + &q.scale(c);
            }
        }
        QPoly::new(out)
    }
}

/// `1 - x - x^2 - 2x^3`.
pub fn gf_denominator() -> Vec<CycloScalar> {
    [1, -1, -1, -2].map(CycloScalar::from).to_vec()
}

pub fn gf_numerator(t: &OffsetTriple) -> QPoly {
    let b = basis(t);
    let one = CycloScalar::from(1);
    let two = CycloScalar::from(2);
    let w1 = CycloScalar::omega_pow(1);
    let w2 = CycloScalar::omega_pow(-1);
    let theta_row = QPoly::new(vec![b.theta.lift()]).mul_central(&[one.clone(), one.clone(), one.clone()]);
    let phi1_row = QPoly::new(vec![b.phi1]).mul_central(&[one.clone(), &w1 - &one, &two * &w2]);
    let phi2_row = QPoly::new(vec![b.phi2]).mul_central(&[one.clone(), &w2 - &one, &two * &w1]);
    theta_row.add(&phi1_row).add(&phi2_row)
}

/// `QK_0 + QK_1 x + ... + QK_depth x^depth`.
pub fn series_prefix(t: &OffsetTriple, depth: usize) -> QPoly {
    QPoly::new((0..=depth as i64).map(|j| qk(j, t).lift()).collect())
}

/// `(1 - x - x^2 - 2x^3)` times the truncated series.
pub fn series_product(prefix: &QPoly) -> QPoly {
    prefix.mul_central(&gf_denominator())
}

/// Degrees `0..=2` of the product must equal the numerator and degrees
/// `3..=depth` must vanish; degrees past `depth` mix in the truncation and
/// are not inspected.
pub fn product_matches(product: &QPoly, numerator: &QPoly, depth: usize) -> bool {
    (0..=2).all(|d| product.coeff(d) == numerator.coeff(d))
        && (3..=depth).all(|d| product.coeff(d).is_zero())
}

fn check_depth(depth: usize) -> Result<()> {
    if depth < 3 {
        return Err(Error::InvalidArgument(format!("series depth must be >= 3, got {depth}")));
    }
    Ok(())
}

pub fn gf_series_check(t: &OffsetTriple, depth: usize) -> Result<bool> {
    check_depth(depth)?;
    let product = series_product(&series_prefix(t, depth));
    Ok(product_matches(&product, &gf_numerator(t), depth))
}

/// As [`gf_series_check`], with `1` added to the series coefficient of `x^index`.
pub fn gf_series_check_perturbed(t: &OffsetTriple, depth: usize, index: usize) -> Result<bool> {
    check_depth(depth)?;
    let mut coeffs = series_prefix(t, depth).coeffs().to_vec();
    coeffs.resize(depth + 1, QW::zero());
    if let Some(c) = coeffs.get_mut(index) {
        c.r = &c.r + &CycloScalar::from(1);
    }
    let product = series_product(&QPoly::new(coeffs));
    Ok(product_matches(&product, &gf_numerator(t), depth))
}

/// The numerator coefficients as rational quaternions where every `w` part cancels.
pub fn rationalized(poly: &QPoly) -> Vec<std::result::Result<Quaternion<Rational>, QW>> {
    poly.coeffs()
        .iter()
        .map(|c| c.to_rational().map_err(|_| c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const T123: OffsetTriple = OffsetTriple::new(1, 2, 3);

    fn qi(r: i64, i: i64, j: i64, k: i64) -> Quaternion<Rational> {
        Quaternion::from_ints(r, i, j, k)
    }

    #[test]
    fn numerator_coefficients() {
        let n = gf_numerator(&T123);
        assert_eq!(n.degree(), Some(2));
        assert_eq!(n.coeff(0).to_rational().unwrap(), qi(3, 1, 3, 10));
        assert_eq!(n.coeff(1).to_rational().unwrap(), qi(-2, 2, 7, 5));
        assert_eq!(n.coeff(2).to_rational().unwrap(), qi(-1, 6, 2, 6));
        assert_eq!(n.coeff(2).to_rational().unwrap(), qk(-1, &T123).scale(&Rational::from(2)));
        assert!(rationalized(&n).iter().all(|c| c.is_ok()));
    }

    #[test]
    fn series_checks() {
        assert!(gf_series_check(&T123, 16).unwrap());
        assert!(gf_series_check(&OffsetTriple::new(0, 0, 0), 8).unwrap());
        assert!(gf_series_check(&T123, 3).unwrap());
        assert!(gf_series_check(&T123, 2).is_err());
    }

    #[test]
    fn forced_nonzero_product_coefficient_fails() {
        let depth = 16;
        let numerator = gf_numerator(&T123);
        let mut coeffs = series_product(&series_prefix(&T123, depth)).coeffs().to_vec();
        coeffs[5] = qi(0, 1, 0, 0).lift();
        assert!(!product_matches(&QPoly::new(coeffs), &numerator, depth));
    }

    #[test]
    fn perturbed_series_fails() {
        for index in 0..=16 {
            assert!(!gf_series_check_perturbed(&T123, 16, index).unwrap(), "index {index}");
        }
    }

    #[test]
    fn truncation_edge_is_ignored() {
        let depth = 10;
        let product = series_product(&series_prefix(&T123, depth));
        assert_eq!(product.degree(), Some(depth + 3));
        assert!((depth + 1..=depth + 3).any(|d| !product.coeff(d).is_zero()));
    }

    #[test]
    fn qpoly_trims() {
        let p = QPoly::new(vec![qi(1, 0, 0, 0).lift(), QW::zero(), QW::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(QPoly::new(vec![QW::zero()]).degree(), None);
    }
}
