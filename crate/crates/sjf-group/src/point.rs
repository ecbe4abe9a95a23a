//! Points `z = (τ, w)` of `ℋ_{n,l}`.

use crate::error::GroupError;
use crate::numeric::{imag_part, min_eigenvalue, CMatrix};
use crate::tol::EPS_PD;
use num_complex::Complex64;

/// Working precision of numeric evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Binary64,
}

/// `τ ∈ ℍ_n` (complex symmetric, `Im τ > 0`) and `w ∈ M_{l,n}(ℂ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiPoint {
    tau: CMatrix,
    w: CMatrix,
    precision: Precision,
}

impl JacobiPoint {
    /// Validates shapes, symmetry of `τ` and `λ_min(Im τ) ≥ ε_pd`.
    pub fn new(tau: CMatrix, w: CMatrix) -> Result<Self, GroupError> {
        let n = tau.nrows();
        if tau.ncols() != n || w.ncols() != n {
            return Err(GroupError::DimensionMismatch(format!(
                "τ is {}x{}, w is {}x{}",
                tau.nrows(),
                tau.ncols(),
                w.nrows(),
                w.ncols()
            )));
        }
        let asym = (&tau - tau.transpose()).iter().map(|x| x.norm()).fold(0.0, f64::max);
        let scale = tau.iter().map(|x| x.norm()).fold(1.0, f64::max);
        if asym > 1e-12 * scale {
            return Err(GroupError::DimensionMismatch("τ is not symmetric".into()));
        }
        let lam = min_eigenvalue(&imag_part(&tau));
        if !(lam >= EPS_PD) {
            return Err(GroupError::NotPositiveDefinite(lam));
        }
        Ok(JacobiPoint { tau, w, precision: Precision::Binary64 })
    }

    /// Degree one and `l = w.len()`.
    pub fn deg1(tau: Complex64, w: &[Complex64]) -> Result<Self, GroupError> {
        Self::new(CMatrix::from_element(1, 1, tau), CMatrix::from_column_slice(w.len(), 1, w))
    }

    /// The distinguished point `(i·1_n, 0)`.
    pub fn base(n: usize, l: usize) -> Self {
        JacobiPoint {
            tau: CMatrix::identity(n, n) * Complex64::i(),
            w: CMatrix::zeros(l, n),
            precision: Precision::Binary64,
        }
    }

    pub fn n(&self) -> usize {
        self.tau.nrows()
    }

    pub fn l(&self) -> usize {
        self.w.nrows()
    }

    pub fn tau(&self) -> &CMatrix {
        &self.tau
    }

    pub fn w(&self) -> &CMatrix {
        &self.w
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// `λ_min(Im τ)`.
    pub fn min_imag_eigenvalue(&self) -> f64 {
        min_eigenvalue(&imag_part(&self.tau))
    }

    /// `δ(τ) = det Im τ`.
    pub fn delta(&self) -> f64 {
        imag_part(&self.tau).determinant()
    }

    /// Largest entrywise relative distance to another point.
    pub fn distance(&self, other: &Self) -> f64 {
        let d = |a: &CMatrix, b: &CMatrix| {
            a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm() / x.norm().max(1.0)).fold(0.0, f64::max)
        };
        d(&self.tau, &other.tau).max(d(&self.w, &other.w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_degenerate_points() {
        let z = JacobiPoint::deg1(Complex64::new(0.0, 1e-14), &[Complex64::new(0.0, 0.0)]);
        assert!(matches!(z, Err(GroupError::NotPositiveDefinite(_))));
        let z = JacobiPoint::deg1(Complex64::new(0.3, 1.0), &[Complex64::new(0.5, 0.0)]).unwrap();
        assert_eq!(z.n(), 1);
        assert_eq!(z.l(), 1);
        assert!((z.delta() - 1.0).abs() < 1e-15);
    }
}
