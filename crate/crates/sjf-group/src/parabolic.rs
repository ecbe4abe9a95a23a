//! The Klingen parabolic `𝐏^{n,r}` and its restriction maps.

use crate::element::{from_blocks, JacobiElement};
use crate::error::GroupError;
use crate::point::JacobiPoint;
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;

fn not_in(r: usize, reason: &str) -> GroupError {
    GroupError::NotInParabolic { r, reason: reason.into() }
}

/// Checks `a ∈ 𝐏^{n,r}`: `λ = (λ₁ 0)`, and the symplectic part has the
/// shape `[[a₁,0,b₁,b₂],[a₃,a₄,b₃,b₄],[c₁,0,d₁,d₂],[0,0,0,d₄]]`.
pub fn check_parabolic(a: &JacobiElement, r: usize) -> Result<(), GroupError> {
    let n = a.n();
    if r > n {
        return Err(not_in(r, "r exceeds the degree"));
    }
    let q = n - r;
    if q == 0 {
        return Ok(());
    }
    if !a.lambda().block(0, r, a.l(), q).is_zero() {
        return Err(not_in(r, "λ has nonzero entries beyond the first r columns"));
    }
    let (ga, _, gc, gd) = a.blocks();
    if !ga.block(0, r, r, q).is_zero() {
        return Err(not_in(r, "a₂ ≠ 0"));
    }
    if !gc.block(0, r, r, q).is_zero() || !gc.block(r, 0, q, n).is_zero() {
        return Err(not_in(r, "c has nonzero entries outside c₁"));
    }
    if !gd.block(r, 0, q, r).is_zero() {
        return Err(not_in(r, "d₃ ≠ 0"));
    }
    Ok(())
}

pub fn in_parabolic(a: &JacobiElement, r: usize) -> bool {
    check_parabolic(a, r).is_ok()
}

/// `ω_r(τ, w) = (τ₁, w₁)`: the upper-left `r × r` corner and the first
/// `r` columns.
pub fn omega_r(z: &JacobiPoint, r: usize) -> Result<JacobiPoint, GroupError> {
    if r == 0 || r > z.n() {
        return Err(GroupError::DimensionMismatch(format!("ω_r needs 0 < r ≤ n, got r = {r}, n = {}", z.n())));
    }
    let tau = z.tau().view((0, 0), (r, r)).into_owned();
    let w = z.w().view((0, 0), (z.l(), r)).into_owned();
    JacobiPoint::new(tau, w)
}

/// `π_r((λ,μ,κ)g) = (λ₁, μ₁, κ)[[a₁, b₁], [c₁, d₁]]`.
pub fn pi_r(a: &JacobiElement, r: usize) -> Result<JacobiElement, GroupError> {
    check_parabolic(a, r)?;
    if r == 0 {
        return Err(GroupError::DimensionMismatch("π_r needs r > 0".into()));
    }
    let l = a.l();
    let (ga, gb, gc, gd) = a.blocks();
    let g = from_blocks(&ga.block(0, 0, r, r), &gb.block(0, 0, r, r), &gc.block(0, 0, r, r), &gd.block(0, 0, r, r));
    JacobiElement::new(a.lambda().block(0, 0, l, r), a.mu().block(0, 0, l, r), a.kappa().clone(), g)
}

/// `λ_r(a) = det d₄`, with `λ_n = 1`.
pub fn lambda_r(a: &JacobiElement, r: usize) -> Result<Rational, GroupError> {
    check_parabolic(a, r)?;
    let n = a.n();
    if r == n {
        return Ok(Rational::from_integer(1.into()));
    }
    let (_, _, _, gd) = a.blocks();
    Ok(gd.block(r, r, n - r, n - r).det()?)
}

/// `diag[1_r, t⁻¹ 1_{n−r}, 1_r, t 1_{n−r}]`, an element of `P^{n,r}`
/// with `λ_r = t^{n−r}`.
pub fn levi_scaling(n: usize, r: usize, t: &Rational) -> RatMatrix {
    let ti = t.recip();
    let mut g = RatMatrix::identity(2 * n);
    for i in r..n {
        g.set(i, i, ti.clone());
        g.set(n + i, n + i, t.clone());
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::CMatrix;
    use num_complex::Complex64;
    use sjf_exact::rational::rat;

    #[test]
    fn top_level_is_identity() {
        let z = JacobiPoint::base(2, 1);
        assert_eq!(omega_r(&z, 2).unwrap(), z);
        let a = JacobiElement::symplectic(levi_scaling(2, 1, &rat(3, 1)), 1).unwrap();
        assert_eq!(lambda_r(&a, 2).unwrap(), rat(1, 1));
        assert_eq!(lambda_r(&a, 1).unwrap(), rat(3, 1));
        assert_eq!(lambda_r(&a, 0).unwrap(), rat(3, 1));
    }

    #[test]
    fn block_diagonal_projection() {
        let g1 = RatMatrix::from_i64(2, 2, &[1, 2, 1, 3]);
        let g2 = RatMatrix::from_i64(2, 2, &[0, -1, 1, 0]);
        let (a1, b1, c1, d1) = crate::element::blocks(&g1);
        let (a2, b2, c2, d2) = crate::element::blocks(&g2);
        let z = RatMatrix::zeros(1, 1);
        let blk = |x: &RatMatrix, y: &RatMatrix| RatMatrix::from_blocks(&[&[x, &z], &[&z, y]]).unwrap();
        let g = from_blocks(&blk(&a1, &a2), &blk(&b1, &b2), &blk(&c1, &c2), &blk(&d1, &d2));
        let a = JacobiElement::symplectic(g, 1).unwrap();
        // c₄ ≠ 0 puts this outside 𝐏^{2,1}; the first-factor copy is inside.
        assert!(!in_parabolic(&a, 1));
        let g = from_blocks(&blk(&a1, &RatMatrix::identity(1)), &blk(&b1, &z), &blk(&c1, &z), &blk(&d1, &RatMatrix::identity(1)));
        let a = JacobiElement::symplectic(g, 1).unwrap();
        assert_eq!(pi_r(&a, 1).unwrap().g(), &g1);
        let tau = CMatrix::from_row_slice(2, 2, &[Complex64::new(0.1, 1.0), Complex64::new(0.2, 0.1), Complex64::new(0.2, 0.1), Complex64::new(0.0, 2.0)]);
        let w = CMatrix::from_row_slice(1, 2, &[Complex64::new(0.3, 0.0), Complex64::new(0.4, 0.5)]);
        let p = omega_r(&JacobiPoint::new(tau, w).unwrap(), 1).unwrap();
        assert_eq!(p.tau()[(0, 0)], Complex64::new(0.1, 1.0));
        assert_eq!(p.w()[(0, 0)], Complex64::new(0.3, 0.0));
    }
}
