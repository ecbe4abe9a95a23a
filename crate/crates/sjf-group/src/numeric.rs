//! Complex matrix helpers.

use crate::error::GroupError;
use crate::tol::MAX_CONDITION;
use nalgebra::DMatrix;
use num_complex::Complex64;
use sjf_exact::RatMatrix;

pub type CMatrix = DMatrix<Complex64>;

pub fn to_complex(m: &RatMatrix) -> CMatrix {
    let v = m.to_f64_vec();
    CMatrix::from_fn(m.rows(), m.cols(), |i, j| Complex64::new(v[i * m.cols() + j], 0.0))
}

pub fn to_real(m: &RatMatrix) -> DMatrix<f64> {
    let v = m.to_f64_vec();
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| v[i * m.cols() + j])
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// `e(x) = exp(2πi x)`.
pub fn e(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * x).exp()
}

fn norm1(m: &CMatrix) -> f64 {
    (0..m.ncols()).map(|j| m.column(j).iter().map(|x| x.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Inverse with a condition-number guard.
pub fn inverse_checked(m: &CMatrix) -> Result<CMatrix, GroupError> {
    let inv = m.clone().try_inverse().ok_or(GroupError::NearSingular(f64::INFINITY))?;
    let cond = norm1(m) * norm1(&inv);
    if !cond.is_finite() || cond > MAX_CONDITION {
        return Err(GroupError::NearSingular(cond));
    }
    Ok(inv)
}

pub fn symmetrize(m: &CMatrix) -> CMatrix {
    (m + m.transpose()) * Complex64::new(0.5, 0.0)
}

pub fn real_part(m: &CMatrix) -> DMatrix<f64> {
    m.map(|x| x.re)
}

pub fn imag_part(m: &CMatrix) -> DMatrix<f64> {
    m.map(|x| x.im)
}

/// Smallest eigenvalue of a real symmetric matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        return f64::INFINITY;
    }
    let sym = (m + m.transpose()) * 0.5;
    sym.symmetric_eigenvalues().iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Integer power of a complex number, negative exponents allowed.
pub fn powi(z: Complex64, k: i64) -> Complex64 {
    if k >= 0 {
        z.powu(k as u32)
    } else {
        z.powu((-k) as u32).inv()
    }
}
