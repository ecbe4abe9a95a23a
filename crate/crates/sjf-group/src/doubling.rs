//! The doubling maps `ι_A`, `τ_r`, `η_r` and the diagonal embedding.

use crate::element::{blocks, from_blocks, JacobiElement};
use crate::error::GroupError;
use crate::factor::{factor_j, WeightIndex};
use crate::numeric::{e, inverse_checked, powi, trace, CMatrix};
use crate::parabolic::omega_r;
use crate::point::JacobiPoint;
use num_complex::Complex64;
use sjf_exact::RatMatrix;

/// `ι_S(g × g′) = [[a,0,b,0],[0,a′,0,b′],[c,0,d,0],[0,c′,0,d′]]`.
pub fn iota_s(g: &RatMatrix, h: &RatMatrix) -> RatMatrix {
    let (a, b, c, d) = blocks(g);
    let (a2, b2, c2, d2) = blocks(h);
    let diag = |x: &RatMatrix, y: &RatMatrix| {
        let z1 = RatMatrix::zeros(x.rows(), y.cols());
        let z2 = RatMatrix::zeros(y.rows(), x.cols());
        RatMatrix::from_blocks(&[&[x, &z1], &[&z2, y]]).expect("block sizes")
    };
    from_blocks(&diag(&a, &a2), &diag(&b, &b2), &diag(&c, &c2), &diag(&d, &d2))
}

/// `ι_A((λ,μ,κ)g × (λ′,μ′,κ′)g′) = ((λ λ′), (μ μ′), κ+κ′)ι_S(g × g′)`.
pub fn iota_a(x: &JacobiElement, y: &JacobiElement) -> Result<JacobiElement, GroupError> {
    if x.l() != y.l() {
        return Err(GroupError::DimensionMismatch(format!("l = {} vs {}", x.l(), y.l())));
    }
    JacobiElement::new(
        x.lambda().hstack(y.lambda())?,
        x.mu().hstack(y.mu())?,
        x.kappa() + y.kappa(),
        iota_s(x.g(), y.g()),
    )
}

/// `e_r = [[1_r, 0], [0, 0]] ∈ M_{m,n}`.
pub fn e_r(m: usize, n: usize, r: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(m, n);
    for i in 0..r {
        e.set(i, i, sjf_exact::rational::one());
    }
    e
}

/// `τ_r = [[1, 0], [f_r, 1]]` with `f_r = [[0, e_r], [ᵗe_r, 0]]`, as a
/// Jacobi element of degree `m + n` with trivial Heisenberg part.
pub fn tau_r(m: usize, n: usize, r: usize, l: usize) -> Result<JacobiElement, GroupError> {
    if r > n || n > m {
        return Err(GroupError::DimensionMismatch(format!("τ_r needs r ≤ n ≤ m, got r = {r}, n = {n}, m = {m}")));
    }
    let e = e_r(m, n, r);
    let f = RatMatrix::from_blocks(&[&[&RatMatrix::zeros(m, m), &e], &[&e.transpose(), &RatMatrix::zeros(n, n)]])?;
    let one = RatMatrix::identity(m + n);
    let g = from_blocks(&one, &RatMatrix::zeros(m + n, m + n), &f, &one);
    JacobiElement::symplectic(g, l)
}

/// `η_r = [[0, −1_r], [1_r, 0]]` with trivial Heisenberg part.
pub fn eta_r(r: usize, l: usize) -> JacobiElement {
    JacobiElement::symplectic(crate::element::j_matrix(r), l).expect("J_r is symplectic")
}

/// `diag[z₁, z₂] = (diag[τ₁, τ₂], (w₁ w₂))`.
pub fn diag_point(z1: &JacobiPoint, z2: &JacobiPoint) -> Result<JacobiPoint, GroupError> {
    if z1.l() != z2.l() {
        return Err(GroupError::DimensionMismatch(format!("l = {} vs {}", z1.l(), z2.l())));
    }
    let (m, n, l) = (z1.n(), z2.n(), z1.l());
    let mut tau = CMatrix::zeros(m + n, m + n);
    tau.view_mut((0, 0), (m, m)).copy_from(z1.tau());
    tau.view_mut((m, m), (n, n)).copy_from(z2.tau());
    let mut w = CMatrix::zeros(l, m + n);
    w.view_mut((0, 0), (l, m)).copy_from(z1.w());
    w.view_mut((0, m), (l, n)).copy_from(z2.w());
    JacobiPoint::new(tau, w)
}

/// Closed form for `J_{k,S}(τ_r, diag[z₁, z₂])`:
/// `e(−tr(S[ω(w₂)ω(τ₂)⁻¹ − ω(w₁)](ω(τ₂)⁻¹ − ω(τ₁))⁻¹)) · J_{k,S}(η_r, ω_r(z₂))
/// · det(ω(τ₁) − ω(τ₂)⁻¹)^k`.
///
/// This equals the direct factor times `(−1)^{rk}`; see [`diag_factor_sign`].
pub fn diag_factor_formula(z1: &JacobiPoint, z2: &JacobiPoint, r: usize, wi: &WeightIndex) -> Result<Complex64, GroupError> {
    if r == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let p1 = omega_r(z1, r)?;
    let p2 = omega_r(z2, r)?;
    let t2i = inverse_checked(p2.tau())?;
    let diff = &t2i - p1.tau();
    let diff_inv = inverse_checked(&diff)?;
    let s = crate::numeric::to_complex(wi.s.matrix());
    let u = p2.w() * &t2i - p1.w();
    let phase = -trace(&(u.transpose() * &s * &u * &diff_inv));
    let eta = factor_j(&eta_r(r, z1.l()), &p2, wi)?;
    let det = (p1.tau() - &t2i).determinant();
    Ok(e(phase) * eta * powi(det, wi.k))
}

/// The sign relating the closed form to the direct factor:
/// `diag_factor_formula = (−1)^{rk} · J_{k,S}(τ_r, diag[z₁, z₂])`.
pub fn diag_factor_sign(r: usize, k: i64) -> f64 {
    if (r as i64 * k).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_j;
    use sjf_exact::SymMatrix;

    #[test]
    fn trivial_cases() {
        let id = iota_a(&JacobiElement::identity(2, 1), &JacobiElement::identity(1, 1)).unwrap();
        assert!(id.is_identity());
        assert!(tau_r(2, 1, 0, 1).unwrap().is_identity());
    }

    #[test]
    fn closed_form_without_w() {
        let wi = WeightIndex::level_one(4, SymMatrix::from_i64(1, &[3]).unwrap()).unwrap();
        let z1 = JacobiPoint::deg1(Complex64::new(0.2, 1.1), &[Complex64::new(0.0, 0.0)]).unwrap();
        let z2 = JacobiPoint::deg1(Complex64::new(-0.4, 0.7), &[Complex64::new(0.0, 0.0)]).unwrap();
        let t = tau_r(1, 1, 1, 1).unwrap();
        let direct = factor_j(&t, &diag_point(&z1, &z2).unwrap(), &wi).unwrap();
        let closed = diag_factor_formula(&z1, &z2, 1, &wi).unwrap();
        let sym = (Complex64::new(1.0, 0.0) - z1.tau()[(0, 0)] * z2.tau()[(0, 0)]).powu(4);
        assert!((direct - sym).norm() < 1e-12 * sym.norm());
        assert!((closed - direct).norm() < 1e-12 * direct.norm());
    }
}
