//! The matrix Gaussian integral in closed form.

use crate::error::LfError;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `∫_{ℝ^{l×n}} exp(a tr(−S[X]A + RXA)) dX
///  = (det A)^{−l/2} (π/a)^{nl/2} (det S)^{−n/2} exp((a/4) tr(S⁻¹[ᵗR] A))`
/// for `S` (`l × l`) positive definite, `R` (`n × l`), `A` (`n × n`)
/// symmetric with positive-definite real part and `Re a > 0`.
///
/// Powers of `det A` and `π/a` use the principal branch.
pub fn gauss_integral(s: &DMatrix<f64>, r: &DMatrix<Complex64>, a_mat: &DMatrix<Complex64>, a: Complex64) -> Result<Complex64, LfError> {
    let l = s.nrows();
    let n = a_mat.nrows();
    if s.ncols() != l || a_mat.ncols() != n || r.nrows() != n || r.ncols() != l {
        return Err(LfError::InvalidInput("shapes must be S: l×l, R: n×l, A: n×n".into()));
    }
    if a.re <= 0.0 {
        return Err(LfError::InvalidInput("Re a must be positive".into()));
    }
    if (s - s.transpose()).norm() > 1e-12 * s.norm() || s.clone().cholesky().is_none() {
        return Err(LfError::InvalidInput("S must be symmetric positive definite".into()));
    }
    if (a_mat - a_mat.transpose()).norm() > 1e-12 * a_mat.norm() {
        return Err(LfError::InvalidInput("A must be symmetric".into()));
    }
    let re_a = a_mat.map(|z| z.re);
    if re_a.cholesky().is_none() {
        return Err(LfError::InvalidInput("Re A must be positive definite".into()));
    }
    let s_inv = s.clone().try_inverse().ok_or_else(|| LfError::InvalidInput("S is singular".into()))?;
    let s_inv_c = s_inv.map(|x| Complex64::new(x, 0.0));
    let quad = r * s_inv_c * r.transpose() * a_mat;
    let (lf, nf) = (l as f64, n as f64);
    let det_a = a_mat.determinant();
    let v = det_a.powc(Complex64::new(-lf / 2.0, 0.0))
        * (Complex64::new(PI, 0.0) / a).powc(Complex64::new(nf * lf / 2.0, 0.0))
        * s.determinant().powf(-nf / 2.0)
        * (a / 4.0 * quad.trace()).exp();
    Ok(v)
}
