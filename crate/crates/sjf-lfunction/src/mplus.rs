//! The local maximality condition on the index at a prime.

use crate::error::LfError;
use num_traits::Zero;
use sjf_exact::rational::{is_prime, valuation, Rational};
use sjf_exact::RatMatrix;

/// Search cap on the number of coset representatives examined.
const SEARCH_CAP: u64 = 1 << 22;

fn integral_at(x: &Rational, p: u64) -> bool {
    x.is_zero() || valuation(x, p).map(|v| v >= 0).unwrap_or(false)
}

fn bracket(s: &RatMatrix, x: &[Rational]) -> Rational {
    let l = x.len();
    let mut v = Rational::zero();
    for i in 0..l {
        for j in 0..l {
            v += &x[i] * s.get(i, j) * &x[j];
        }
    }
    v
}

fn bilinear(s: &RatMatrix, x: &[Rational], y: &[Rational]) -> Rational {
    bracket(s, &x.iter().zip(y).map(|(a, b)| a + b).collect::<Vec<_>>()) - bracket(s, x) - bracket(s, y)
}

/// `S[y] ∈ ℤ_p` on the lattice spanned by `basis`.
fn integral_lattice(s: &RatMatrix, basis: &[Vec<Rational>], p: u64) -> bool {
    basis.iter().all(|b| integral_at(&bracket(s, b), p))
        && (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| integral_at(&bilinear(s, &basis[i], &basis[j]), p)))
}

fn unit_vector(l: usize, i: usize) -> Vec<Rational> {
    (0..l).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect()
}

/// All vectors in `{0, …, m−1}^l` scaled by `1/m`.
fn box_points(l: usize, m: u64) -> impl Iterator<Item = Vec<Rational>> {
    let total = m.pow(l as u32);
    (0..total).map(move |mut c| {
        (0..l)
            .map(|_| {
                let d = c % m;
                c /= m;
                Rational::new((d as i64).into(), (m as i64).into())
            })
            .collect()
    })
}

/// Decides `M_p⁺` for `L = ℤ_p^l`:
/// (a) no index-`p` overlattice `L + (1/p)xℤ_p` keeps `S[y]` integral, and
/// (b) `L′ = {x ∈ (2S)⁻¹L : p·S[x] ∈ ℤ_p}` equals `L`.
pub fn m_plus_check(index: &RatMatrix, p: u64) -> Result<bool, LfError> {
    if !is_prime(p) {
        return Err(LfError::InvalidInput(format!("{p} is not prime")));
    }
    if !index.is_square() || !index.is_symmetric() || !index.is_positive_definite() {
        return Err(LfError::InvalidInput("the index must be symmetric positive definite".into()));
    }
    let l = index.rows();
    let basis: Vec<Vec<Rational>> = (0..l).map(|i| unit_vector(l, i)).collect();
    if !integral_lattice(index, &basis, p) {
        return Ok(false);
    }
    if p.checked_pow(l as u32).is_none_or(|c| c > SEARCH_CAP) {
        return Err(LfError::Unsupported(format!("overlattice search p^l too large for p = {p}, l = {l}")));
    }
    // (a): x runs over nonzero residues; with x_j a unit the overlattice has
    // basis {e_i : i ≠ j} ∪ {x/p}.
    for x in box_points(l, p).skip(1) {
        let j = x.iter().position(|c| !c.is_zero()).expect("nonzero");
        let mut b: Vec<Vec<Rational>> = (0..l).filter(|&i| i != j).map(|i| unit_vector(l, i)).collect();
        b.push(x);
        if integral_lattice(index, &b, p) {
            return Ok(false);
        }
    }
    // (b): L ⊆ (2S)⁻¹L means 2S is p-integral; the p-part of (2S)⁻¹L/L is
    // killed by p^e with e = v_p(det 2S). Each class is tested once: p·S[x]
    // mod ℤ_p is constant on classes.
    let two_s = index.scale(&Rational::from_integer(2.into()));
    if !two_s.data().iter().all(|x| integral_at(x, p)) {
        return Ok(false);
    }
    let e = valuation(&two_s.det()?, p)?.max(0) as u32;
    if e == 0 {
        return Ok(true);
    }
    let m = p.checked_pow(e).filter(|m| m.checked_pow(l as u32).is_some_and(|c| c <= SEARCH_CAP));
    let m = m.ok_or_else(|| LfError::Unsupported(format!("dual-lattice search too large for p = {p}")))?;
    let pq = Rational::from_integer((p as i64).into());
    for x in box_points(l, m).skip(1) {
        let in_dual = (0..l).all(|i| integral_at(&(0..l).map(|j| two_s.get(i, j) * &x[j]).sum::<Rational>(), p));
        let in_l = x.iter().all(|c| integral_at(c, p));
        if in_dual && !in_l && integral_at(&(&pq * bracket(index, &x)), p) {
            return Ok(false);
        }
    }
    Ok(true)
}
