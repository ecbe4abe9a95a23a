//! Local Euler factors, Siegel-series normalizers and twisted Euler products.

use crate::error::LfError;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use sjf_exact::rational::{valuation, Rational};
use sjf_exact::RatMatrix;
use sjf_hecke::{CharacterModN, SatakeData};
use std::collections::BTreeMap;

/// Coefficients of a polynomial in `X`, constant term first.
pub type Poly = Vec<Complex64>;

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Poly {
    let mut out = vec![Complex64::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_eval(a: &[Complex64], x: Complex64) -> Complex64 {
    a.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c)
}

/// Power series of `num/den` to order `order` (inclusive); `den(0)` ≠ 0.
fn series_quotient(num: &[Complex64], den: &[Complex64], order: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); order + 1];
    for j in 0..=order {
        let mut c = num.get(j).copied().unwrap_or_default();
        for i in 1..=j.min(den.len().saturating_sub(1)) {
            c -= den[i] * out[j - i];
        }
        out[j] = c / den[0];
    }
    out
}

fn one_minus(c: Complex64, power: usize) -> Poly {
    let mut p = vec![Complex64::zero(); power + 1];
    p[0] = Complex64::one();
    p[power] -= c;
    p
}

/// A local factor `L_p(X)` with constant term 1.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor {
    pub p: u64,
    pub degree_bound: usize,
    pub coeffs: Poly,
}

impl LocalFactor {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        poly_eval(&self.coeffs, x)
    }

    /// Largest deviation from `X^{2n} L(1/X) = L(X)`.
    pub fn palindrome_defect(&self) -> f64 {
        let d = self.coeffs.len() - 1;
        (0..=d).map(|i| (self.coeffs[i] - self.coeffs[d - i]).norm()).fold(0.0, f64::max)
    }

    /// Coefficients of `1/L_p(X)` to order `order`.
    pub fn inverse_series(&self, order: usize) -> Vec<Complex64> {
        series_quotient(&[Complex64::one()], &self.coeffs, order)
    }
}

/// `Π_i (1 − μ_i X)(1 − μ_i⁻¹ X)` at a good prime.
pub fn euler_factor_good(satake: &SatakeData) -> Result<LocalFactor, LfError> {
    let mut poly = vec![Complex64::one()];
    for (i, mu) in satake.mu.iter().enumerate() {
        if mu.norm() == 0.0 {
            return Err(LfError::ZeroSatake(i));
        }
        poly = poly_mul(&poly, &[Complex64::one(), -(mu + 1.0 / mu), Complex64::one()]);
    }
    Ok(LocalFactor { p: satake.p, degree_bound: 2 * satake.n(), coeffs: poly })
}

/// `Π_i (1 − μ_i X)` at a prime dividing `𝔢⁻¹𝔠`; zero parameters are allowed.
pub fn euler_factor_bad(p: u64, mu: &[Complex64]) -> LocalFactor {
    let mut poly = vec![Complex64::one()];
    for m in mu {
        poly = poly_mul(&poly, &[Complex64::one(), -m]);
    }
    LocalFactor { p, degree_bound: mu.len(), coeffs: poly }
}

/// The exact good factor for rational Satake parameters.
pub fn euler_factor_good_exact(mu: &[Rational]) -> Result<Vec<Rational>, LfError> {
    let mut poly = vec![Rational::one()];
    for (i, m) in mu.iter().enumerate() {
        if m.is_zero() {
            return Err(LfError::ZeroSatake(i));
        }
        let mid = -(m + m.recip());
        let mut next = vec![Rational::zero(); poly.len() + 2];
        for (j, c) in poly.iter().enumerate() {
            next[j] += c;
            next[j + 1] += c * &mid;
            next[j + 2] += c;
        }
        poly = next;
    }
    Ok(poly)
}

/// `num(X)/den(X)` with `X = p^{−s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn one() -> Self {
        RationalFunction { num: vec![Complex64::one()], den: vec![Complex64::one()] }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        poly_eval(&self.num, x) / poly_eval(&self.den, x)
    }

    pub fn series(&self, order: usize) -> Vec<Complex64> {
        series_quotient(&self.num, &self.den, order)
    }

    pub fn is_one(&self, tol: f64) -> bool {
        let s = self.series(8);
        (s[0] - 1.0).norm() <= tol && s[1..].iter().all(|c| c.norm() <= tol)
    }
}

fn p_value(chi: &CharacterModN, p: u64) -> Complex64 {
    chi.value(&BigInt::from(p))
}

/// Exponents `2n − 2i` (`l` even) or `2n − 2i + 1` (`l` odd), `i = 1, …, n`.
fn frak_exponents(n: usize, l: usize) -> Vec<i32> {
    (1..=n).map(|i| (2 * n - 2 * i + l % 2) as i32).collect()
}

/// `𝔏_p = G_p · Π_{i=1}^n L_p(2s + e_i, χ²)` as a rational function in `X`.
pub fn frak_l_factor(chi: &CharacterModN, p: u64, n: usize, l: usize, g_ratio: &RationalFunction) -> Result<RationalFunction, LfError> {
    if chi.modulus() % p == 0 {
        return Err(LfError::Ramified { p, level: chi.modulus() });
    }
    let c2 = p_value(chi, p).powu(2);
    let mut den = g_ratio.den.clone();
    for e in frak_exponents(n, l) {
        den = poly_mul(&den, &one_minus(c2 * (p as f64).powi(-e), 2));
    }
    Ok(RationalFunction { num: g_ratio.num.clone(), den })
}

/// Regularity at `p`: `2S` is `p`-integral and `det 2S` is a unit (`l` even)
/// or twice a unit (`l` odd).
pub fn is_regular(index: &RatMatrix, p: u64) -> Result<bool, LfError> {
    let two_s = index.scale(&Rational::from_integer(2.into()));
    for x in two_s.data() {
        if !x.is_zero() && valuation(x, p)? < 0 {
            return Ok(false);
        }
    }
    let d = two_s.det()?;
    if d.is_zero() {
        return Ok(false);
    }
    let want = if index.rows() % 2 == 0 { 0 } else { valuation(&Rational::from_integer(2.into()), p)? };
    Ok(valuation(&d, p)? == want)
}

/// `α_S(s, χ) = (1 − χ(p)X) Π_{i=1}^{[l/2]} (1 − χ²(p) p^{2i} X²)` for regular `S`.
pub fn siegel_series_regular(index: &RatMatrix, chi: &CharacterModN, p: u64) -> Result<RationalFunction, LfError> {
    if !is_regular(index, p)? {
        return Err(LfError::NonRegular(p));
    }
    let c = p_value(chi, p);
    let mut num = one_minus(c, 1);
    for i in 1..=index.rows() / 2 {
        num = poly_mul(&num, &one_minus(c * c * (p as f64).powi(2 * i as i32), 2));
    }
    Ok(RationalFunction { num, den: vec![Complex64::one()] })
}

/// `G_p = g_S(s+n+l/2, χ)/g_S(s+l/2, χ)`, which is `1` for regular `S`.
pub fn g_p_ratio(index: &RatMatrix, _chi: &CharacterModN, p: u64, _n: usize, l: usize) -> Result<RationalFunction, LfError> {
    if index.rows() != l {
        return Err(LfError::InvalidInput(format!("index has size {} but l = {l}", index.rows())));
    }
    if !is_regular(index, p)? {
        return Err(LfError::NonRegular(p));
    }
    Ok(RationalFunction::one())
}

/// `λ(p^j)` for `j ≤ order` from Satake parameters, trivial `χ` and
/// `G_p = 1`: the series of `L_p(X)⁻¹ / Π_i (1 − p^{−e_i} X²)⁻¹` carries
/// `λ(p^j) p^{−j(n+l/2)}` at `X^j`.
pub fn hecke_eigenvalues_from_satake(satake: &SatakeData, l: usize, order: usize) -> Result<Vec<Complex64>, LfError> {
    let lp = euler_factor_good(satake)?;
    let mut num = vec![Complex64::one()];
    for e in frak_exponents(satake.n(), l) {
        num = poly_mul(&num, &one_minus(Complex64::new((satake.p as f64).powi(-e), 0.0), 2));
    }
    let series = series_quotient(&num, &lp.coeffs, order);
    let shift = satake.n() as f64 + l as f64 / 2.0;
    Ok(series.into_iter().enumerate().map(|(j, c)| c * (satake.p as f64).powf(j as f64 * shift)).collect())
}

/// Degree-one Satake data recovered from `λ(p)` and the resulting `λ(p²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakePrediction {
    pub mu: Complex64,
    pub predicted_lambda_p2: Complex64,
}

/// Solves `μ + μ⁻¹ = λ(p) p^{−(1+l/2)}` (root with `|μ| ≥ 1`, and
/// `Im μ ≥ 0` on the unit circle) and predicts
/// `λ(p²) = p^{2+l} (μ² + 1 + μ⁻² − c)` with `c = p⁻¹` for odd `l`, `1` for even.
pub fn satake_solve_and_predict(lambda_p: Complex64, p: u64, l: usize) -> SatakePrediction {
    let pf = p as f64;
    let x = lambda_p * pf.powf(-(1.0 + l as f64 / 2.0));
    let disc = (x * x - 4.0).sqrt();
    let mut mu = (x + disc) / 2.0;
    if mu.norm() < 1.0 - 1e-12 || ((mu.norm() - 1.0).abs() <= 1e-12 && mu.im < 0.0) {
        mu = 1.0 / mu;
    }
    let c = if l % 2 == 1 { 1.0 / pf } else { 1.0 };
    let predicted = pf.powi(2 + l as i32) * (mu * mu + 1.0 + 1.0 / (mu * mu) - c);
    SatakePrediction { mu, predicted_lambda_p2: predicted }
}

/// A finite Euler product `Π_p L_p(t_p p^{−s})⁻¹` with twist
/// `t_p = χ(p)ψ(p)` for `p ∤ 𝔠`, `t_p = χ(p)` for `p | 𝔠`, and the primes
/// dividing `𝔵` removed. `𝔠` is the modulus of `ψ`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerProduct {
    factors: BTreeMap<u64, (LocalFactor, Complex64)>,
}

pub fn twisted_l_assemble(factors: BTreeMap<u64, LocalFactor>, chi: &CharacterModN, psi: &CharacterModN, x: u64) -> EulerProduct {
    let c = psi.modulus();
    let mut out = BTreeMap::new();
    for (p, f) in factors {
        if x != 0 && x % p == 0 {
            continue;
        }
        let t = if c % p == 0 { p_value(chi, p) } else { p_value(chi, p) * p_value(psi, p) };
        out.insert(p, (f, t));
    }
    EulerProduct { factors: out }
}

impl EulerProduct {
    pub fn primes(&self) -> Vec<u64> {
        self.factors.keys().copied().collect()
    }

    /// The twist `t_p` at a retained prime.
    pub fn twist(&self, p: u64) -> Option<Complex64> {
        self.factors.get(&p).map(|(_, t)| *t)
    }

    /// The value of the finite product at `s`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.factors.iter().fold(Complex64::one(), |acc, (p, (f, t))| {
            let x = t * (-s * (*p as f64).ln()).exp();
            acc / f.eval(x)
        })
    }

    /// Dirichlet coefficients `a(m)` for `1 ≤ m ≤ max`, index `0` unused.
    pub fn dirichlet_coefficients(&self, max: usize) -> Vec<Complex64> {
        let mut a = vec![Complex64::zero(); max + 1];
        if max == 0 {
            return a;
        }
        a[1] = Complex64::one();
        for (p, (f, t)) in &self.factors {
            let p = *p as usize;
            let mut order = 0;
            let mut pk = 1usize;
            while pk.saturating_mul(p) <= max {
                pk *= p;
                order += 1;
            }
            let inv = f.inverse_series(order);
            let mut next = vec![Complex64::zero(); max + 1];
            for m in 1..=max {
                if a[m] == Complex64::zero() {
                    continue;
                }
                let mut q = 1usize;
                for c in inv.iter().take(order + 1).enumerate().map(|(j, c)| c * t.powu(j as u32)) {
                    if m.saturating_mul(q) > max {
                        break;
                    }
                    next[m * q] += a[m] * c;
                    q = q.saturating_mul(p);
                }
            }
            a = next;
        }
        a
    }
}
