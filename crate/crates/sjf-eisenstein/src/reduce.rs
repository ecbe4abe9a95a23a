//! Reduction of degree-one points by the full Jacobi modular group.

use crate::error::EisError;
use sjf_exact::RatMatrix;
use num_complex::Complex64;
use sjf_group::factor::factor_j;
use sjf_group::{act, JacobiElement, JacobiPoint, WeightIndex};
use sjf_hecke::{Evaluator, HeckeOperator};

const MAX_STEPS: usize = 10_000;

/// `γ ∈ SL₂(ℤ)` with `γτ` in the standard fundamental domain
/// `|Re τ| ≤ 1/2`, `|τ| ≥ 1`, as `[a, b, c, d]`.
pub fn reduce_tau(tau: num_complex::Complex64) -> Result<[i64; 4], EisError> {
    let mut m = [1i64, 0, 0, 1];
    let mut t = tau;
    for _ in 0..MAX_STEPS {
        let n = t.re.round();
        if n != 0.0 {
            t -= n;
            let n = n as i64;
            // T^{−n}·m
            m = [m[0] - n * m[2], m[1] - n * m[3], m[2], m[3]];
        }
        if t.norm_sqr() < 1.0 - 1e-13 {
            t = -t.inv();
            // S·m with S = [[0, −1], [1, 0]]
            m = [-m[2], -m[3], m[0], m[1]];
        } else {
            return Ok(m);
        }
    }
    Err(EisError::InvalidInput(format!("reduction of τ = {tau} did not terminate")))
}

/// `x ∈ SL₂(ℤ) ⋉ H(ℤ)` and `xz` with `τ` in the fundamental domain and
/// `|Im w_i| ≤ Im τ/2`, `|Re w_i| ≤ 1/2`.
pub fn reduce_point(z: &JacobiPoint) -> Result<(JacobiElement, JacobiPoint), EisError> {
    let l = z.l();
    let m = reduce_tau(z.tau()[(0, 0)])?;
    let g = JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &m), l)?;
    let z1 = act(&g, z)?;
    let tau = z1.tau()[(0, 0)];
    let lam: Vec<i64> = z1.w().iter().map(|w| -(w.im / tau.im).round() as i64).collect();
    let mu: Vec<i64> = z1.w().iter().zip(&lam).map(|(w, &x)| -(w + tau * x as f64).re.round() as i64).collect();
    if lam.iter().chain(&mu).all(|&v| v == 0) {
        return Ok((g, z1));
    }
    let col = |v: &[i64]| RatMatrix::from_i64(l, 1, v);
    let h = JacobiElement::heisenberg(col(&lam), col(&mu), RatMatrix::zeros(l, l))?;
    let x = h.compose(&g)?;
    let z0 = act(&x, z)?;
    Ok((x, z0))
}

/// `f(z)` for a level-one form `f`, evaluated at the reduced point.
pub fn reduced_value(f: &Evaluator<'_>, wi: &WeightIndex, z: &JacobiPoint) -> Result<Complex64, EisError> {
    let (x, z0) = reduce_point(z)?;
    Ok(f(&z0)? / factor_j(&x, z, wi)?)
}

/// `(f|T)(z)` for a level-one form `f`.
///
/// Each term `f(αz)/J(α, z)` is evaluated as `f(xαz)/J(xα, z)` with `xαz`
/// reduced, so the automorphy factor is formed once at its final size
/// rather than as a quotient of two factors that may overflow.
pub fn reduced_hecke_at(op: &HeckeOperator, f: &Evaluator<'_>, z: &JacobiPoint) -> Result<Complex64, EisError> {
    let mut total = Complex64::new(0.0, 0.0);
    for (alpha, phase) in op.terms() {
        let (x, z0) = reduce_point(&act(alpha, z)?)?;
        let xa = x.compose(alpha)?;
        total += phase * f(&z0)? / factor_j(&xa, z, op.weight_index())?;
    }
    Ok(total)
}
