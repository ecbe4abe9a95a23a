//! Seeded random elements with bounded conditioning.

use crate::element::{from_blocks, j_matrix, JacobiElement};
use crate::numeric::CMatrix;
use crate::parabolic::levi_scaling;
use crate::point::JacobiPoint;
use num_complex::Complex64;
use rand::Rng;
use sjf_exact::rational::{int, rat, Rational};
use sjf_exact::RatMatrix;

/// Elementary symplectic generators, words of length at most this.
pub const MAX_WORD: usize = 6;

fn translation(s: &RatMatrix) -> RatMatrix {
    let n = s.rows();
    from_blocks(&RatMatrix::identity(n), s, &RatMatrix::zeros(n, n), &RatMatrix::identity(n))
}

/// `[[u, 0], [0, ᵗu⁻¹]]`.
pub fn levi(u: &RatMatrix) -> RatMatrix {
    let n = u.rows();
    let ui = u.inverse().expect("u invertible").transpose();
    from_blocks(u, &RatMatrix::zeros(n, n), &RatMatrix::zeros(n, n), &ui)
}

fn random_sym_int<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatMatrix {
    let mut s = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = int(rng.gen_range(-bound..=bound));
            s.set(i, j, v.clone());
            s.set(j, i, v);
        }
    }
    s
}

/// `1 + x E_{ij}` with `i ≠ j`, or a sign flip of one coordinate.
fn random_elementary<R: Rng>(rng: &mut R, n: usize, lower_only_from: Option<usize>) -> RatMatrix {
    let mut u = RatMatrix::identity(n);
    if n == 1 || rng.gen_bool(0.25) {
        let i = rng.gen_range(0..n);
        u.set(i, i, int(-1));
        return u;
    }
    loop {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        // For the parabolic, `a₂` must stay zero: no entry with i < r ≤ j.
        if let Some(r) = lower_only_from {
            if i < r && j >= r {
                continue;
            }
        }
        u.set(i, j, int(if rng.gen_bool(0.5) { 1 } else { -1 }));
        return u;
    }
}

/// Product of at most [`MAX_WORD`] generators of `Sp_n(ℤ)`.
pub fn random_symplectic<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    let len = rng.gen_range(1..=MAX_WORD);
    let mut g = RatMatrix::identity(2 * n);
    for _ in 0..len {
        let x = match rng.gen_range(0..3) {
            0 => translation(&random_sym_int(rng, n, 2)),
            1 => levi(&random_elementary(rng, n, None)),
            _ => j_matrix(n),
        };
        g = &g * &x;
    }
    g
}

fn quarter<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-8..=8), 4)
}

fn random_rat_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| quarter(rng))
}

fn random_sym_quarter<R: Rng>(rng: &mut R, l: usize) -> RatMatrix {
    let mut k = RatMatrix::zeros(l, l);
    for i in 0..l {
        for j in i..l {
            let v = quarter(rng);
            k.set(i, j, v.clone());
            k.set(j, i, v);
        }
    }
    k
}

/// Heisenberg part with entries in `¼ℤ ∩ [−2, 2]` times a random
/// symplectic word.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, l: usize) -> JacobiElement {
    let g = random_symplectic(rng, n);
    JacobiElement::new(random_rat_matrix(rng, l, n), random_rat_matrix(rng, l, n), random_sym_quarter(rng, l), g)
        .expect("generated element is valid")
}

/// A random Heisenberg element with entries in `¼ℤ ∩ [−2, 2]`.
pub fn random_heisenberg<R: Rng>(rng: &mut R, n: usize, l: usize) -> JacobiElement {
    JacobiElement::heisenberg(random_rat_matrix(rng, l, n), random_rat_matrix(rng, l, n), random_sym_quarter(rng, l))
        .expect("generated element is valid")
}

/// A random element of `𝐏^{n,r}`, including Levi scalings so that
/// `λ_r` is not always `±1`.
pub fn random_parabolic<R: Rng>(rng: &mut R, n: usize, l: usize, r: usize) -> JacobiElement {
    let len = rng.gen_range(1..=MAX_WORD);
    let mut g = RatMatrix::identity(2 * n);
    for _ in 0..len {
        let x = match rng.gen_range(0..4) {
            0 => translation(&random_sym_int(rng, n, 2)),
            1 => levi(&random_elementary(rng, n, Some(r))),
            2 => {
                // Inversion in the first r coordinates.
                let mut a = RatMatrix::identity(n);
                let mut b = RatMatrix::zeros(n, n);
                let mut c = RatMatrix::zeros(n, n);
                let mut d = RatMatrix::identity(n);
                for i in 0..r {
                    a.set(i, i, int(0));
                    d.set(i, i, int(0));
                    b.set(i, i, int(-1));
                    c.set(i, i, int(1));
                }
                from_blocks(&a, &b, &c, &d)
            }
            _ => {
                let t = [rat(2, 1), rat(1, 2), rat(-3, 1)][rng.gen_range(0..3)].clone();
                levi_scaling(n, r, &t)
            }
        };
        g = &g * &x;
    }
    let mut lam = random_rat_matrix(rng, l, n);
    for i in 0..l {
        for j in r..n {
            lam.set(i, j, int(0));
        }
    }
    JacobiElement::new(lam, random_rat_matrix(rng, l, n), random_sym_quarter(rng, l), g).expect("generated element is valid")
}

/// A random point with `Im τ = ᵗA A + 1/2` for a random `A`, so that
/// `λ_min(Im τ) ≥ 1/2`.
pub fn random_point<R: Rng>(rng: &mut R, n: usize, l: usize) -> JacobiPoint {
    let a = nalgebra::DMatrix::<f64>::from_fn(n, n, |_, _| rng.gen_range(-0.7..0.7));
    let im = a.transpose() * &a + nalgebra::DMatrix::<f64>::identity(n, n) * 0.5;
    let mut re = nalgebra::DMatrix::<f64>::from_fn(n, n, |_, _| rng.gen_range(-0.5..0.5));
    re = (&re + re.transpose()) * 0.5;
    let tau = CMatrix::from_fn(n, n, |i, j| Complex64::new(re[(i, j)], im[(i, j)]));
    let w = CMatrix::from_fn(l, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.3..0.3)));
    JacobiPoint::new(tau, w).expect("generated point is valid")
}
