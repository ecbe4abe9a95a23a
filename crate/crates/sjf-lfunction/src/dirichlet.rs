//! Dirichlet L-functions through the Hurwitz zeta function, and the
//! normalizing product `Λ^n_{k,𝔠}`.

use crate::error::LfError;
use num_bigint::BigInt;
use num_complex::Complex64;
use sjf_hecke::CharacterModN;

/// `B_{2j}/(2j)!` for `j = 1, …, 15`.
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
    854_513.0 / 138.0 / 1.124_000_727_777_607_7e21,
    -236_364_091.0 / 2730.0 / 6.204_484_017_332_394e23,
    8_553_103.0 / 6.0 / 4.032_914_611_266_056_4e26,
    -23_749_461_029.0 / 870.0 / 3.048_883_446_117_138_4e29,
    8_615_841_276_005.0 / 14_322.0 / 2.652_528_598_121_910_3e32,
];

/// `Σ_{k=0}^{M−1} (k+a)^{−s}` plus the Euler–Maclaurin tail, with the
/// `(M+a)^{1−s}/(s−1)` term left to the caller.
fn hurwitz_parts(s: Complex64, a: f64) -> (Complex64, f64) {
    let m = (s.norm().ceil() as usize + 20).max(30);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..m {
        sum += (-s * (k as f64 + a).ln()).exp();
    }
    let x = m as f64 + a;
    let lx = x.ln();
    sum += 0.5 * (-s * lx).exp();
    let mut poch = s;
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let e = -s - (2 * j + 1) as f64;
        sum += b * poch * (e * lx).exp();
        poch *= (s + (2 * j + 1) as f64) * (s + (2 * j + 2) as f64);
    }
    (sum, x)
}

/// The Hurwitz zeta function `ζ(s, a)` for `a > 0`, `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64, LfError> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(LfError::InvalidInput("pole of ζ(s, a) at s = 1".into()));
    }
    if a <= 0.0 {
        return Err(LfError::InvalidInput("Hurwitz parameter must be positive".into()));
    }
    let (sum, x) = hurwitz_parts(s, a);
    Ok(sum + (-(s - 1.0) * x.ln()).exp() / (s - 1.0))
}

/// `L(s, χ) = N^{−s} Σ_{a=1}^{N} χ(a) ζ(s, a/N)`, analytically continued.
pub fn dirichlet_l(s: Complex64, chi: &CharacterModN) -> Result<Complex64, LfError> {
    let n = chi.modulus();
    let nf = n as f64;
    let at_one = s == Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut mass = Complex64::new(0.0, 0.0);
    for a in 1..=n {
        let c = chi.value(&BigInt::from(a));
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        mass += c;
        let af = a as f64 / nf;
        if at_one {
            // With Σ χ(a) = 0 the pole terms combine to −Σ χ(a) ln(M + a/N).
            let (sum, x) = hurwitz_parts(s, af);
            total += c * (sum - x.ln());
        } else {
            total += c * hurwitz_zeta(s, af)?;
        }
    }
    if at_one && mass.norm() > 1e-9 {
        return Err(LfError::InvalidInput("pole of L(s, χ) at s = 1 for principal χ".into()));
    }
    Ok((-s * nf.ln()).exp() * total)
}

fn prime_divisors(mut c: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= c {
        if c % q == 0 {
            out.push(q);
            while c % q == 0 {
                c /= q;
            }
        }
        q += 1;
    }
    if c > 1 {
        out.push(c);
    }
    out
}

/// `L_𝔠(s, χ)`: the Euler factors at primes dividing `c` removed.
pub fn dirichlet_l_c(s: Complex64, chi: &CharacterModN, c: u64) -> Result<Complex64, LfError> {
    let mut v = dirichlet_l(s, chi)?;
    for p in prime_divisors(c) {
        let x = chi.value(&BigInt::from(p));
        v *= 1.0 - x * (-s * (p as f64).ln()).exp();
    }
    Ok(v)
}

/// `Λ^n_{k,𝔠}(s, χ)`: `L_𝔠(2s,χ) Π_{i ≤ [n/2]} L_𝔠(4s−2i, χ²)` for integral
/// weight and `Π_{i ≤ [(n+1)/2]} L_𝔠(4s−2i+1, χ²)` otherwise.
pub fn lambda_norm(s: Complex64, chi: &CharacterModN, integral_weight: bool, n: usize, c: u64) -> Result<Complex64, LfError> {
    let chi2 = chi.power(2);
    if integral_weight {
        let mut v = dirichlet_l_c(2.0 * s, chi, c)?;
        for i in 1..=n / 2 {
            v *= dirichlet_l_c(4.0 * s - 2.0 * i as f64, &chi2, c)?;
        }
        Ok(v)
    } else {
        let mut v = Complex64::new(1.0, 0.0);
        for i in 1..=(n + 1) / 2 {
            v *= dirichlet_l_c(4.0 * s - 2.0 * i as f64 + 1.0, &chi2, c)?;
        }
        Ok(v)
    }
}
