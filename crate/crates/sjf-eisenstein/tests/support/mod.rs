#![allow(dead_code)]

#[path = "../../../sjf-hecke/tests/support/cohen.rs"]
pub mod cohen;

use num_complex::Complex64;
use sjf_exact::rational::to_f64;
use sjf_group::{GroupError, JacobiPoint};
use std::f64::consts::PI;

/// `E_{k,1}(τ, w) = Σ e_{k,1}(n, r) e(nτ + rw)` from exact coefficients,
/// `n ≤ t_max`.
pub struct CohenSeries {
    terms: Vec<(f64, f64, f64)>,
}

impl CohenSeries {
    pub fn new(k: usize, t_max: i64) -> Self {
        let terms = cohen::eisenstein_index_one(k, t_max).into_iter().map(|((n, r), c)| (n as f64, r as f64, to_f64(&c))).collect();
        CohenSeries { terms }
    }

    pub fn value(&self, tau: Complex64, w: Complex64) -> Complex64 {
        let i2pi = Complex64::new(0.0, 2.0 * PI);
        self.terms.iter().map(|&(n, r, c)| (i2pi * (tau * n + w * r)).exp() * c).sum()
    }

    pub fn eval(&self, z: &JacobiPoint) -> Result<Complex64, GroupError> {
        Ok(self.value(z.tau()[(0, 0)], z.w()[(0, 0)]))
    }
}

pub fn point(x: f64, y: f64, u: f64, v: f64) -> JacobiPoint {
    JacobiPoint::deg1(Complex64::new(x, y), &[Complex64::new(u, v)]).unwrap()
}
