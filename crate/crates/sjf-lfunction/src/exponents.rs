//! Transcendence exponents of critical L-values and of Eisenstein values,
//! with their admissibility conditions.

use crate::error::LfError;
use num_traits::Signed;
use sjf_exact::rational::Rational;

/// Side conditions on characters and level, over `F = ℚ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithmeticFlags {
    /// The level `𝔠` is trivial.
    pub level_one: bool,
    /// `χ² = 1`.
    pub chi_squared_trivial: bool,
    /// `χ ψ_S = 1`.
    pub chi_psi_s_trivial: bool,
    /// The class number is one (always true over `ℚ`).
    pub class_number_one: bool,
}

impl Default for ArithmeticFlags {
    /// Trivial `χ` at level one with nontrivial `ψ_S`.
    fn default() -> Self {
        ArithmeticFlags { level_one: true, chi_squared_trivial: true, chi_psi_s_trivial: false, class_number_one: true }
    }
}

/// A failed condition, named for machine consumption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub message: String,
}

fn q(a: i64) -> Rational {
    Rational::from_integer(a.into())
}

fn half(a: i64) -> Rational {
    Rational::new(a.into(), 2.into())
}

fn is_even(x: &Rational) -> bool {
    (x / q(2)).is_integer()
}

fn violation(condition: &'static str, message: String) -> Violation {
    Violation { condition, message }
}

/// `e` and `e_σ = n(k − l + σ) − e` for a critical value at `σ/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents {
    pub e: Rational,
    pub e_sigma: Rational,
}

/// `e = n² + n − σ + l/2` when `2σ − l` is even and `σ ≥ 2n + l/2`, else `n²`.
pub fn exponents(k: i64, l: i64, n: i64, sigma: i64) -> Exponents {
    let e = if (2 * sigma - l) % 2 == 0 && q(sigma) >= q(2 * n) + half(l) {
        q(n * n + n - sigma) + half(l)
    } else {
        q(n * n)
    };
    let e_sigma = q(n * (k - l + sigma)) - &e;
    Exponents { e, e_sigma }
}

/// Hypotheses on the cusp form: `n > 1` over `ℚ` and `k > 2n + l + 1`.
pub fn form_hypotheses(k: i64, l: i64, n: i64) -> Vec<Violation> {
    let mut out = Vec::new();
    if n <= 1 {
        out.push(violation("degree", format!("n = {n} requires n > 1 over the rationals")));
    }
    if k <= 2 * n + l + 1 {
        out.push(violation("weight_bound", format!("k = {k} must exceed 2n + l + 1 = {}", 2 * n + l + 1)));
    }
    out
}

/// Conditions on `σ` for the algebraicity of `Λ(σ/2)`.
pub fn sigma_violations(k: i64, l: i64, n: i64, sigma: i64, flags: &ArithmeticFlags) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = q(sigma) - half(l);
    let kk = q(k) - half(l);
    let centre = half(2 * n + 1);
    if !(q(2 * n + 1) - &kk <= s && s <= kk) {
        out.push(violation("sigma_range", format!("need 2n+1−(k−l/2) ≤ σ−l/2 ≤ k−l/2, got σ−l/2 = {s}")));
    }
    let dist = (&s - &centre).abs();
    let parity = &dist + &centre - &kk;
    if !is_even(&parity) {
        out.push(violation("sigma_parity", format!("|σ−l/2−(2n+1)/2| + (2n+1)/2 − (k−l/2) = {parity} is not an even integer")));
    }
    let margin = half(l) + q(n) * (q(1) + &kk - &dist - &centre);
    if q(k) <= margin {
        out.push(violation("weight_margin", format!("k must exceed {margin}")));
    }
    if q(sigma) == q(n + 1) + half(l) && flags.chi_squared_trivial {
        out.push(violation("excluded_centre", "σ = n+1+l/2 with χ² = 1".into()));
    }
    if q(sigma) == half(l) && flags.level_one && flags.chi_psi_s_trivial {
        out.push(violation("excluded_edge", "σ = l/2 at level one with χψ_S = 1".into()));
    }
    if s > q(0) && s <= q(n) && flags.level_one && flags.chi_squared_trivial {
        out.push(violation("excluded_strip", "0 < σ−l/2 ≤ n at level one with χ² = 1".into()));
    }
    if !flags.class_number_one && sigma <= l + n {
        out.push(violation("class_number", "σ ≤ l+n with class number above one".into()));
    }
    out
}

fn first_error(v: Vec<Violation>) -> Result<(), LfError> {
    match v.into_iter().next() {
        Some(v) => Err(LfError::Inadmissible { condition: v.condition.into(), message: v.message }),
        None => Ok(()),
    }
}

/// `exponents` after checking the conditions on `σ`.
pub fn admissible_exponents(k: i64, l: i64, n: i64, sigma: i64, flags: &ArithmeticFlags) -> Result<Exponents, LfError> {
    first_error(sigma_violations(k, l, n, sigma, flags))?;
    Ok(exponents(k, l, n, sigma))
}

/// Nearly-holomorphic order `r`, the power `β` of `π` and `e` for the
/// Eisenstein value at `μ/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisExponents {
    pub r: Rational,
    pub beta: Rational,
    pub e: Rational,
}

/// Conditions on `μ` for the algebraicity of `D(μ/2)`.
pub fn mu_violations(k: i64, l: i64, n: i64, mu: i64, flags: &ArithmeticFlags) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = q(mu) - half(l);
    let kk = q(k) - half(l);
    let centre = half(n + 1);
    if !(q(n + 1) - &kk <= m && m <= kk) {
        out.push(violation("mu_range", format!("need n+1−(k−l/2) ≤ μ−l/2 ≤ k−l/2, got μ−l/2 = {m}")));
    }
    let parity = (&m - &centre).abs() + &centre - &kk;
    if !is_even(&parity) {
        out.push(violation("mu_parity", format!("|μ−l/2−(n+1)/2| + (n+1)/2 − k + l/2 = {parity} is not an even integer")));
    }
    if q(mu) == half(n + 2) + half(l) && flags.chi_squared_trivial {
        out.push(violation("excluded_centre", "μ = (n+2)/2 + l/2 with χ² = 1".into()));
    }
    if q(mu) == half(l) && flags.level_one && flags.chi_psi_s_trivial {
        out.push(violation("excluded_edge", "μ = l/2 at level one with χψ_S = 1".into()));
    }
    if m > q(0) && m <= half(n) && flags.level_one && flags.chi_squared_trivial {
        out.push(violation("excluded_strip", "0 < μ−l/2 ≤ n/2 at level one with χ² = 1".into()));
    }
    if !flags.class_number_one && mu <= l + n {
        out.push(violation("class_number", "μ ≤ l+n with class number above one".into()));
    }
    out
}

/// `r`, `β = (n/2)(k − l + μ) − e` and `e` after checking the conditions on `μ`.
pub fn eis_exponents(k: i64, l: i64, n: i64, mu: i64, flags: &ArithmeticFlags) -> Result<EisExponents, LfError> {
    first_error(mu_violations(k, l, n, mu, flags))?;
    let centre = half(n + 1);
    let r = if q(mu) == half(n + 2) + half(l) && flags.chi_squared_trivial {
        half(n * (k - mu + 2))
    } else if n == 1 && q(mu) == q(2) + half(l) && flags.chi_psi_s_trivial {
        half(k) - Rational::new(l.into(), 4.into())
    } else {
        half(n) * (q(k) - half(l) - (q(mu) - half(l) - &centre).abs() - &centre)
    };
    let e = if (2 * mu - l + n) % 2 == 0 && q(mu) >= q(n) + half(l) {
        q((n + 1) * (n + 1) / 4 - mu) + half(l)
    } else {
        q(n * n / 4)
    };
    let beta = half(n) * q(k - l + mu) - &e;
    Ok(EisExponents { r, beta, e })
}
