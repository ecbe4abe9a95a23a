//! Left cosets `E\EξE` for `E = GL_n(ℤ)`, as Hermite normal forms.

use crate::error::HeckeError;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use sjf_exact::lattice::{elementary_divisors, int_det, IntRow};
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;

/// All upper-triangular Hermite forms `d` (positive diagonal,
/// `0 ≤ d_ij < d_jj` above it) with the elementary divisors of `ξ`.
pub fn gl_coset_reps(xi: &RatMatrix) -> Result<Vec<RatMatrix>, HeckeError> {
    let rows = integral_rows(xi)?;
    let n = rows.len();
    let det = int_det(&rows).abs();
    if det.is_zero() {
        return Err(HeckeError::InvalidXi);
    }
    let target = elementary_divisors(&rows);
    let det = det.to_u64().ok_or_else(|| HeckeError::Unsupported("determinant too large to enumerate".into()))?;
    let mut out = Vec::new();
    for diag in ordered_factorizations(det, n) {
        let mut frame: Vec<IntRow> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::from(diag[i]) } else { BigInt::zero() }).collect())
            .collect();
        fill_above(&mut frame, &diag, 0, 1, &target, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Integer rows of a square matrix with nonzero determinant.
pub(crate) fn integral_rows(xi: &RatMatrix) -> Result<Vec<IntRow>, HeckeError> {
    if !xi.is_square() {
        return Err(HeckeError::InvalidXi);
    }
    xi.to_integer_rows().ok_or(HeckeError::InvalidXi)
}

fn ordered_factorizations(m: u64, n: usize) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for d in 1..=m {
        if m % d == 0 {
            for mut rest in ordered_factorizations(m / d, n - 1) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

fn fill_above(frame: &mut Vec<IntRow>, diag: &[u64], i: usize, j: usize, target: &[BigInt], out: &mut Vec<RatMatrix>) {
    let n = diag.len();
    if j >= n {
        if i + 1 >= n {
            if elementary_divisors(frame) == target {
                out.push(to_matrix(frame));
            }
            return;
        }
        return fill_above(frame, diag, i + 1, i + 2, target, out);
    }
    for v in 0..diag[j] {
        frame[i][j] = BigInt::from(v);
        fill_above(frame, diag, i, j + 1, target, out);
    }
    frame[i][j] = BigInt::zero();
}

fn to_matrix(rows: &[IntRow]) -> RatMatrix {
    RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect())
}

/// The diagonal of an upper-triangular integral matrix as exponents of a
/// single prime `p`, or an error when some entry is not a power of `p`.
pub fn prime_power_exponents(d: &RatMatrix, p: u64) -> Result<Vec<u32>, HeckeError> {
    let pb = BigInt::from(p);
    (0..d.rows())
        .map(|i| {
            let x = d.get(i, i);
            if !x.is_integer() || !x.is_positive() {
                return Err(HeckeError::NotPrimePower(x.to_string()));
            }
            let mut v = x.to_integer();
            let mut e = 0;
            while (&v % &pb).is_zero() {
                v /= &pb;
                e += 1;
            }
            if v.is_one() {
                Ok(e)
            } else {
                Err(HeckeError::NotPrimePower(x.to_string()))
            }
        })
        .collect()
}

/// The unique prime dividing every diagonal entry, if the diagonal consists
/// of powers of one prime.
pub fn diagonal_prime(d: &RatMatrix) -> Result<Option<u64>, HeckeError> {
    let mut prime: Option<u64> = None;
    for i in 0..d.rows() {
        let x = d.get(i, i);
        if !x.is_integer() || !x.is_positive() {
            return Err(HeckeError::NotPrimePower(x.to_string()));
        }
        let v = x.to_integer().to_u64().ok_or_else(|| HeckeError::NotPrimePower(x.to_string()))?;
        if v == 1 {
            continue;
        }
        let q = smallest_prime_factor(v);
        match prime {
            None => prime = Some(q),
            Some(p) if p != q => return Err(HeckeError::NotPrimePower(x.to_string())),
            _ => {}
        }
    }
    Ok(prime)
}

pub(crate) fn smallest_prime_factor(v: u64) -> u64 {
    let mut q = 2;
    while q * q <= v {
        if v % q == 0 {
            return q;
        }
        q += 1;
    }
    v
}

/// Distinct prime factors of a positive integer.
pub(crate) fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= v {
        if v % q == 0 {
            out.push(q);
            while v % q == 0 {
                v /= q;
            }
        }
        q += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

pub(crate) fn is_squarefree(v: u64) -> bool {
    prime_factors(v).iter().all(|q| (v / q) % q != 0)
}
