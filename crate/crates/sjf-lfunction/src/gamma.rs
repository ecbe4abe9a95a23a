//! Complex Gamma, the Siegel Gamma function and the Gamma factors built on it.

use crate::error::LfError;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use sjf_exact::rational::{to_f64, Rational};
use sjf_exact::RatMatrix;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `ln Γ(z)` for `Re z ≥ 1/2` by the Lanczos approximation.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + a.ln()
}

/// `Γ(z)`, with the reflection formula left of `Re z = 1/2`.
pub fn gamma(z: Complex64) -> Result<Complex64, LfError> {
    if is_pole(z) {
        return Err(LfError::GammaPole(format!("{z}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        return Ok(PI / (s * gamma(1.0 - z)?));
    }
    Ok(ln_gamma_right(z).exp())
}

/// `Γ_n(s) = π^{n(n−1)/4} Π_{j=0}^{n−1} Γ(s − j/2)`.
pub fn gamma_n(n: usize, s: Complex64) -> Result<Complex64, LfError> {
    let mut v = Complex64::new(PI.powf((n * n.saturating_sub(1)) as f64 / 4.0), 0.0);
    for j in 0..n {
        v *= gamma(s - j as f64 / 2.0)?;
    }
    Ok(v)
}

fn floor_i64(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().expect("small rational")
}

/// The factor `γ(s, h)` for `h ≥ 0`, chosen by the position of `h`
/// relative to `n/2`, the integrality of `h` and the parity of `n`.
pub fn gamma_case(s: Complex64, h: &Rational, n: usize) -> Result<Complex64, LfError> {
    if h.is_negative() || !(h * Rational::from_integer(2.into())).is_integer() {
        return Err(LfError::InvalidInput(format!("h = {h} must be a nonnegative half-integer")));
    }
    let hf = to_f64(h);
    let half_n = Rational::new(n.into(), 2.into());
    let h_int = h.is_integer();
    let n_even = n % 2 == 0;
    let shifted = s + hf / 2.0;
    if h_int && n_even && *h >= half_n {
        let q = floor_i64(&((h * Rational::from_integer(2.into()) + Rational::from_integer(n.into())) / Rational::from_integer(4.into())));
        return Ok(gamma(shifted - q as f64)? * gamma_n(n, shifted)?);
    }
    if h_int && !n_even && *h > half_n {
        return gamma_n(n, shifted);
    }
    if h_int && *h < half_n {
        let hi = floor_i64(h);
        let mut v = gamma_n(2 * hi as usize + 1, shifted)?;
        for i in (hi + 1)..=(n as i64 / 2) {
            v *= gamma(2.0 * s - i as f64)?;
        }
        return Ok(v);
    }
    if !h_int && !n_even && *h > half_n {
        let q = floor_i64(&((h * Rational::from_integer(2.into()) + Rational::from_integer(n.into()) - Rational::from_integer(2.into())) / Rational::from_integer(4.into())));
        return Ok(gamma(s + (hf - 1.0) / 2.0 - q as f64)? * gamma_n(n, shifted)?);
    }
    // Half-integral h above n/2 with n even.
    if !h_int && n_even && *h > half_n {
        return gamma_n(n, shifted);
    }
    if !h_int && h.is_positive() && *h <= half_n {
        let hi = floor_i64(h);
        let dim = (2.0 * hf + 1.0).round() as usize;
        let mut v = gamma_n(dim, shifted)?;
        for i in (hi + 1)..=((n as i64 - 1) / 2) {
            v *= gamma(2.0 * s - i as f64 - 0.5)?;
        }
        return Ok(v);
    }
    Err(LfError::Unsupported(format!("no Gamma case for h = {h}, n = {n}")))
}

/// `𝒢_{k,n}(s) = γ(s, |k|)` over the rationals.
pub fn g_kn(s: Complex64, k: &Rational, n: usize) -> Result<Complex64, LfError> {
    gamma_case(s, &k.abs(), n)
}

/// The reproducing-kernel constant
/// `det(2S)^{−n} (−1)^{n(l+k/2)} 2^{n(n+3)/2−4s−nk} π^{n(n+1)/2}
/// Γ_n(s+k−l/2−(n+1)/2) / Γ_n(s+k−l/2)`.
///
/// `(−1)^x` for half-integral `x` is `e^{iπx}`.
pub fn kernel_constant(s: Complex64, k: i64, index: &RatMatrix, n: usize) -> Result<Complex64, LfError> {
    if !index.is_square() || !index.is_positive_definite() {
        return Err(LfError::InvalidInput("the index must be positive definite".into()));
    }
    let l = index.rows();
    let det2s = to_f64(&index.scale(&Rational::from_integer(2.into())).det()?);
    let nf = n as f64;
    let (lf, kf) = (l as f64, k as f64);
    let sign = Complex64::from_polar(1.0, PI * nf * (lf + kf / 2.0));
    let two = Complex64::new(2.0, 0.0).powc(Complex64::new(nf * (nf + 3.0) / 2.0 - nf * kf, 0.0) - 4.0 * s);
    let base = s + kf - lf / 2.0;
    let ratio = gamma_n(n, base - (nf + 1.0) / 2.0)? / gamma_n(n, base)?;
    Ok(det2s.powf(-nf) * sign * two * PI.powf(nf * (nf + 1.0) / 2.0) * ratio)
}
