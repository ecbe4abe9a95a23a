//! Integer lattices: Hermite and Smith normal forms, coset enumeration.

use crate::error::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntRow = Vec<BigInt>;

/// Extended gcd: `(g, x, y)` with `x a + y b = g ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form of a matrix whose rows span a full-rank
/// lattice in `ℤ^m`.
///
/// Returns the `m × m` upper-triangular basis `H` of the row span with
/// positive diagonal and `0 ≤ H[i][j] < H[j][j]` for `i < j`.
pub fn row_hnf(rows: &[IntRow]) -> Result<Vec<IntRow>, ExactError> {
    let Some(m) = rows.first().map(|r| r.len()) else {
        return Err(ExactError::Singular);
    };
    let mut a: Vec<IntRow> = rows.to_vec();
    let mut basis: Vec<IntRow> = Vec::with_capacity(m);
    for col in 0..m {
        // Collapse column `col` of all remaining rows onto one pivot row.
        let mut pivot: Option<IntRow> = None;
        let mut rest = Vec::with_capacity(a.len());
        for row in a.into_iter() {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let (g, x, y) = ext_gcd(&p[col], &row[col]);
                    let u = &p[col] / &g;
                    let v = &row[col] / &g;
                    let new_p: IntRow = p.iter().zip(&row).map(|(s, t)| &x * s + &y * t).collect();
                    let other: IntRow = p.iter().zip(&row).map(|(s, t)| &u * t - &v * s).collect();
                    pivot = Some(new_p);
                    rest.push(other);
                }
            }
        }
        let mut p = pivot.ok_or(ExactError::Singular)?;
        if p[col].is_negative() {
            p.iter_mut().for_each(|x| *x = -&*x);
        }
        basis.push(p);
        a = rest;
    }
    for j in 0..m {
        for i in 0..j {
            let q = basis[i][j].div_floor(&basis[j][j]);
            if !q.is_zero() {
                let pj = basis[j].clone();
                for (x, y) in basis[i].iter_mut().zip(&pj) {
                    *x -= &q * y;
                }
            }
        }
    }
    Ok(basis)
}

/// Reduces `v` modulo the row lattice of an upper-triangular Hermite basis.
pub fn reduce_mod(v: &[BigInt], hnf: &[IntRow]) -> IntRow {
    let mut v = v.to_vec();
    for (i, h) in hnf.iter().enumerate() {
        let q = v[i].div_floor(&h[i]);
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(h) {
                *x -= &q * y;
            }
        }
    }
    v
}

/// Canonical representatives of `ℤ^m / L` where `L` is the row span of
/// `generators`; the representatives are `0 ≤ v_i < H_ii`.
pub fn quotient_reps(generators: &[IntRow]) -> Result<Vec<IntRow>, ExactError> {
    let h = row_hnf(generators)?;
    let diag: Vec<BigInt> = (0..h.len()).map(|i| h[i][i].clone()).collect();
    let mut out: Vec<IntRow> = vec![Vec::new()];
    for d in &diag {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = BigInt::zero();
            while &x < d {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
                x += 1;
            }
        }
        out = next;
    }
    Ok(out)
}

/// Index `[ℤ^m : L]` of the row span of `generators`.
pub fn index(generators: &[IntRow]) -> Result<BigInt, ExactError> {
    let h = row_hnf(generators)?;
    Ok((0..h.len()).map(|i| h[i][i].clone()).product())
}

/// Elementary divisors `d_1 | d_2 | …` of a square integer matrix.
pub fn elementary_divisors(m: &[IntRow]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<IntRow> = m.to_vec();
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = (t..n)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            out.extend(std::iter::repeat(BigInt::zero()).take(n - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_mod_floor(&a[t][t]);
                let rt = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(&rt) {
                    *x -= &q * y;
                }
                if !r.is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_mod_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !r.is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let ri = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&ri) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

/// Determinant of a square integer matrix via the Bareiss algorithm.
pub fn int_det(m: &[IntRow]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<IntRow> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Converts small integers into a row of big integers.
pub fn int_row(xs: &[i64]) -> IntRow {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> Vec<IntRow> {
        r.iter().map(|x| int_row(x)).collect()
    }

    #[test]
    fn hnf_basic() {
        let h = row_hnf(&rows(&[&[2, 4], &[3, 1]])).unwrap();
        assert_eq!(h, rows(&[&[1, 7], &[0, 10]]));
        assert_eq!(index(&rows(&[&[2, 4], &[3, 1]])).unwrap(), BigInt::from(10));
        assert!(row_hnf(&rows(&[&[1, 1], &[2, 2]])).is_err());
    }

    #[test]
    fn quotient_enumeration_is_complete() {
        let gens = rows(&[&[2, 1], &[0, 3], &[4, 4]]);
        let reps = quotient_reps(&gens).unwrap();
        let h = row_hnf(&gens).unwrap();
        assert_eq!(reps.len() as i64, 2);
        for v in &reps {
            assert_eq!(&reduce_mod(v, &h), v);
        }
        let mut seen: Vec<IntRow> = Vec::new();
        for x in -4..4 {
            for y in -4..4 {
                let r = reduce_mod(&int_row(&[x, y]), &h);
                assert!(reps.contains(&r));
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn smith_and_det() {
        let m = rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(elementary_divisors(&m), int_row(&[1, 6]));
        let m = rows(&[&[1, 1], &[0, 2]]);
        assert_eq!(elementary_divisors(&m), int_row(&[1, 2]));
        let m = rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(elementary_divisors(&m), int_row(&[2, 6, 12]));
        assert_eq!(int_det(&m), BigInt::from(-144));
        assert_eq!(int_det(&rows(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }
}
