//! Adaptive Simpson quadrature for complex integrands, used as an oracle.

#![allow(dead_code)]

use num_complex::Complex64;

fn simpson(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn recurse(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64, whole: Complex64, tol: f64, depth: u32) -> Complex64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.norm() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// `∫_a^b f` to absolute tolerance `tol`, over 16 initial panels.
pub fn integrate(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    let panels = 16;
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let (x0, x1) = (a + i as f64 * h, a + (i + 1) as f64 * h);
            let (f0, fm, f1) = (f(x0), f(0.5 * (x0 + x1)), f(x1));
            recurse(f, x0, x1, f0, fm, f1, simpson(x0, x1, f0, fm, f1), tol / panels as f64, 40)
        })
        .sum()
}

/// `∫∫ f(x, y)` over the square `[a, b]²` by nested adaptive Simpson.
pub fn integrate_2d(f: &dyn Fn(f64, f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    let inner = |x: f64| integrate(&|y| f(x, y), a, b, tol / (b - a));
    integrate(&inner, a, b, tol)
}
