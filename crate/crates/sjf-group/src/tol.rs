//! Numerical tolerances shared by the numeric checks.

/// Minimal eigenvalue of `Im τ` accepted as positive definite.
pub const EPS_PD: f64 = 1e-12;

/// Relative tolerance for identities between automorphy factors.
pub const REL_IDENTITY: f64 = 1e-9;

/// Relative tolerance for the group-action identity.
pub const REL_ACTION: f64 = 1e-10;

/// Largest accepted condition estimate of `cτ + d`.
pub const MAX_CONDITION: f64 = 1e12;

/// `|a − b| / max(|a|, |b|, tiny)`.
pub fn rel_diff(a: num_complex::Complex64, b: num_complex::Complex64) -> f64 {
    let scale = a.norm().max(b.norm()).max(f64::MIN_POSITIVE);
    (a - b).norm() / scale
}
