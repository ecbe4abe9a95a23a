//! Jacobi theta sums `Θ_S(τ, w) = Σ_{λ ∈ ℤ^l} e(S[λ]τ + 2ᵗλSw)` for
//! `n = 1`, `l ≤ 2`, summed over a window around the dominant term.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Log-magnitude drop below the dominant term at which terms are dropped.
pub const CUT: f64 = 40.0;

/// `e(x) = exp(2πi x)`.
pub fn e(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * x).exp()
}

/// `Σ_{n ∈ ℤ} e(a n² + b n + c)` for `Im a > 0`, over the terms within
/// `CUT` of the largest in log-magnitude.
pub fn quadratic_sum(a: Complex64, b: Complex64, c: Complex64) -> Complex64 {
    quadratic_sum_clipped(a, b, c, None)
}

/// As [`quadratic_sum`], restricted to `|n| ≤ clip` when a clip is given.
pub fn quadratic_sum_clipped(a: Complex64, b: Complex64, c: Complex64, clip: Option<i64>) -> Complex64 {
    let ya = a.im;
    let centre = -b.im / (2.0 * ya);
    let half = (CUT / (2.0 * PI * ya)).sqrt() + 1.0;
    let mut lo = (centre - half).floor() as i64;
    let mut hi = (centre + half).ceil() as i64;
    if let Some(m) = clip {
        lo = lo.max(-m);
        hi = hi.min(m);
    }
    if lo > hi {
        return Complex64::new(0.0, 0.0);
    }
    let n0 = (centre.round() as i64).clamp(lo, hi);
    let x0 = n0 as f64;
    let q2 = e(a * 2.0);
    let t0 = e(a * (x0 * x0) + b * x0 + c);
    let mut total = t0;
    // t_{n+1} / t_n = e(a(2n+1) + b)
    let mut t = t0;
    let mut r = e(a * (2.0 * x0 + 1.0) + b);
    for _ in n0..hi {
        t *= r;
        r *= q2;
        total += t;
    }
    // t_{n−1} / t_n = e(a(1−2n) − b)
    let mut t = t0;
    let mut r = e(a * (1.0 - 2.0 * x0) - b);
    for _ in lo..n0 {
        t *= r;
        r *= q2;
        total += t;
    }
    total
}

/// A real positive definite index of size one or two, stored as
/// `[s11, s12, s22]` (with `s12 = s22 = 0` for `l = 1`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexF64 {
    pub l: usize,
    pub s: [f64; 3],
}

impl IndexF64 {
    pub fn new(entries: &[f64]) -> Option<Self> {
        match entries.len() {
            1 if entries[0] > 0.0 => Some(IndexF64 { l: 1, s: [entries[0], 0.0, 0.0] }),
            4 => {
                let (s11, s12, s22) = (entries[0], entries[1], entries[3]);
                if (entries[1] - entries[2]).abs() > 1e-15 || s11 <= 0.0 || s11 * s22 - s12 * s12 <= 0.0 {
                    return None;
                }
                Some(IndexF64 { l: 2, s: [s11, s12, s22] })
            }
            _ => None,
        }
    }

    /// `S[w] = ᵗwSw`.
    pub fn quad(&self, w: &[Complex64]) -> Complex64 {
        match self.l {
            1 => w[0] * w[0] * self.s[0],
            _ => w[0] * w[0] * self.s[0] + w[0] * w[1] * (2.0 * self.s[1]) + w[1] * w[1] * self.s[2],
        }
    }

    /// `Sw`.
    pub fn apply(&self, w: &[Complex64]) -> [Complex64; 2] {
        match self.l {
            1 => [w[0] * self.s[0], Complex64::new(0.0, 0.0)],
            _ => [w[0] * self.s[0] + w[1] * self.s[1], w[0] * self.s[1] + w[1] * self.s[2]],
        }
    }
}

/// `Θ_S(τ, w)` over `λ ∈ ℤ^l`.
pub fn jacobi_theta(s: &IndexF64, tau: Complex64, w: &[Complex64]) -> Complex64 {
    jacobi_theta_clipped(s, tau, w, None)
}

/// `Θ_S(τ, w)` over `λ ∈ ℤ^l`, restricted to `|λ|_∞ ≤ clip` when given.
pub fn jacobi_theta_clipped(s: &IndexF64, tau: Complex64, w: &[Complex64], clip: Option<i64>) -> Complex64 {
    let u = s.apply(w);
    let zero = Complex64::new(0.0, 0.0);
    match s.l {
        1 => quadratic_sum_clipped(tau * s.s[0], u[0] * 2.0, zero, clip),
        _ => {
            let [s11, s12, s22] = s.s;
            let y = tau.im;
            // Dominant λ is −Im(w)/Im(τ); its λ₁ marginal has curvature
            // y·det(S)/s22.
            let centre = -w[0].im / y;
            let det = s11 * s22 - s12 * s12;
            let half = (CUT * s22 / (2.0 * PI * y * det)).sqrt() + 1.0;
            let mut lo = (centre - half).floor() as i64;
            let mut hi = (centre + half).ceil() as i64;
            if let Some(m) = clip {
                lo = lo.max(-m);
                hi = hi.min(m);
            }
            let a = tau * s22;
            let mut total = zero;
            for l1 in lo..=hi {
                let x = l1 as f64;
                let b = tau * (2.0 * s12 * x) + u[1] * 2.0;
                let c = tau * (s11 * x * x) + u[0] * (2.0 * x);
                total += quadratic_sum_clipped(a, b, c, clip);
            }
            total
        }
    }
}

/// The genus-one theta `Θ₀(τ) = Σ_n e(n²τ/2)`.
pub fn theta_null(tau: Complex64) -> Complex64 {
    quadratic_sum(tau * 0.5, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
}

/// `θ_{m,μ}(τ, w) = Σ_{r ≡ μ (2m)} e(r²τ/4m + rw)` for `μ = 0..2m`; the
/// `μ = 0` entry is `Θ_{(m)}`.
pub fn theta_vector(m: usize, tau: Complex64, w: Complex64) -> Vec<Complex64> {
    let mf = m as f64;
    (0..2 * m)
        .map(|mu| {
            let x = mu as f64;
            quadratic_sum(tau * mf, tau * x + w * (2.0 * mf), tau * (x * x / (4.0 * mf)) + w * x)
        })
        .collect()
}

/// Generators of `SL₂(ℤ)`: `T^q` and `S = [[0, −1], [1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    T(i64),
    S,
}

/// A word `g₁⋯g_r` in `T^q` and `S` equal to `[[a, b], [c, d]]`.
pub fn sl2_word(a: i64, b: i64, c: i64, d: i64) -> Vec<Generator> {
    let (mut a, mut b, mut c, mut d) = (a, b, c, d);
    let mut out = Vec::new();
    while c != 0 {
        // M = T^q S M′ with M′ = S⁻¹T^{−q}M.
        let q = (a as f64 / c as f64).round() as i64;
        a -= q * c;
        b -= q * d;
        if q != 0 {
            out.push(Generator::T(q));
        }
        out.push(Generator::S);
        (a, b, c, d) = (c, d, -a, -b);
    }
    if a == 1 {
        if b != 0 {
            out.push(Generator::T(b));
        }
    } else {
        // −T^{−b} = S²T^{−b}
        out.push(Generator::S);
        out.push(Generator::S);
        if b != 0 {
            out.push(Generator::T(-b));
        }
    }
    out
}

/// The Weil representation data of `θ_{m,·}`: `e(r/4m)` and `e(−r/2m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeilData {
    m: usize,
    quarter: Vec<Complex64>,
    fourier: Vec<Complex64>,
}

impl WeilData {
    pub fn new(m: usize) -> Self {
        let mf = m as f64;
        let quarter = (0..4 * m).map(|r| e(Complex64::new(r as f64 / (4.0 * mf), 0.0))).collect();
        let fourier = (0..2 * m).map(|r| e(Complex64::new(-(r as f64) / (2.0 * mf), 0.0))).collect();
        WeilData { m, quarter, fourier }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `(s, v)` with `θ_{m,0}(γτ, w/j) = s · e(cm w²/j) · Σ_ν v_ν θ_{m,ν}(τ, w)`
    /// for `γ` given as a word, from `θ(τ+q, w) = diag(e(qμ²/4m)) θ(τ, w)` and
    /// `θ(−1/τ, w/τ) = √(τ/2mi) e(mw²/τ) (e(−μν/2m))_{μν} θ(τ, w)`.
    pub fn transform(&self, word: &[Generator], tau: Complex64) -> (Complex64, Vec<Complex64>) {
        let m = self.m;
        let n = 2 * m;
        let two_mi = Complex64::new(0.0, 2.0 * m as f64);
        let mut s = Complex64::new(1.0, 0.0);
        let mut t = tau;
        for g in word.iter().rev() {
            match *g {
                Generator::T(q) => t += q as f64,
                Generator::S => {
                    s *= (t / two_mi).sqrt();
                    t = -t.inv();
                }
            }
        }
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[0] = Complex64::new(1.0, 0.0);
        let mut scratch = vec![Complex64::new(0.0, 0.0); n];
        for g in word {
            match *g {
                Generator::T(q) => {
                    for (nu, x) in v.iter_mut().enumerate() {
                        *x *= self.quarter[(q as i128 * (nu * nu) as i128).rem_euclid(4 * m as i128) as usize];
                    }
                }
                Generator::S => {
                    for (nu, out) in scratch.iter_mut().enumerate() {
                        *out = v.iter().enumerate().map(|(mu, x)| x * self.fourier[(mu * nu) % n]).sum();
                    }
                    std::mem::swap(&mut v, &mut scratch);
                }
            }
        }
        (s, v)
    }
}
