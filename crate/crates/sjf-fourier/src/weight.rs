//! The Petersson weight `Δ_{S,k}`.

use crate::error::FourierError;
use sjf_group::numeric::{imag_part, to_real};
use sjf_group::{JacobiPoint, WeightIndex};

/// `Δ_{S,k}(z) = det(y)^k · exp(−4π tr(ᵗv S v y⁻¹))` for `τ = x + iy`,
/// `w = u + iv`.
pub fn petersson_weight(z: &JacobiPoint, wi: &WeightIndex) -> Result<f64, FourierError> {
    let y = imag_part(z.tau());
    let v = imag_part(z.w());
    let yi = y.clone().try_inverse().ok_or_else(|| FourierError::InvalidMeta("Im τ is singular".into()))?;
    let s = to_real(wi.s.matrix());
    let tr = (v.transpose() * s * v * yi).trace();
    Ok(y.determinant().powi(wi.k as i32) * (-4.0 * std::f64::consts::PI * tr).exp())
}
