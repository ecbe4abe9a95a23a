//! Theta series `Θ_{S,L,h}(τ, w) = Σ_{y ∈ h+L} e(tr(S(½ yτᵗy + yᵗw)))`.

use crate::error::ThetaError;
use crate::lattice::Lattice;
use num_traits::Zero;
use sjf_exact::rational::{rat, to_f64, Rational};
use sjf_exact::RatMatrix;
use sjf_fourier::{ExpansionMeta, FourierExpansion, FourierKey};

/// The data `(S, L, h)` of a theta series of degree `n = h.cols()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub form: RatMatrix,
    pub lattice: Lattice,
    pub h: RatMatrix,
}

impl ThetaSpec {
    pub fn new(form: RatMatrix, lattice: Lattice, h: RatMatrix) -> Result<Self, ThetaError> {
        if !form.is_symmetric() || !form.is_positive_definite() {
            return Err(ThetaError::NotPositiveDefinite);
        }
        if lattice.l() != form.rows() || h.rows() != form.rows() {
            return Err(ThetaError::Shape(format!("S is {0}x{0}, lattice rank {1}, h has {2} rows", form.rows(), lattice.l(), h.rows())));
        }
        Ok(ThetaSpec { form, lattice, h })
    }

    pub fn n(&self) -> usize {
        self.h.cols()
    }

    pub fn l(&self) -> usize {
        self.h.rows()
    }
}

/// Vectors `x ∈ ℤ^l` with `q(x) = ½ ᵗ(x₀+Px) S (x₀+Px) ≤ bound`, returned
/// as the points `x₀ + Px` together with `q`.
fn short_vectors(form: &RatMatrix, basis: &RatMatrix, x0: &RatMatrix, bound: &Rational) -> Vec<(RatMatrix, Rational)> {
    let l = basis.rows();
    let half = rat(1, 2);
    let gram = (&(&basis.transpose() * form) * basis).scale(&half);
    let ginv = gram.inverse().expect("positive definite");
    let c0 = &basis.inverse().expect("invertible") * x0;
    let b = to_f64(bound).max(0.0);
    let ranges: Vec<(i64, i64)> = (0..l)
        .map(|i| {
            let r = (b * to_f64(ginv.get(i, i))).sqrt() + 1e-9;
            let c = to_f64(c0.get(i, 0));
            ((-c - r).floor() as i64, (-c + r).ceil() as i64)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        let x = RatMatrix::from_fn(l, 1, |i, _| Rational::from_integer(cur[i].into()));
        let y = x0 + &(basis * &x);
        let q = form.bracket(&y).expect("shapes").get(0, 0) * &half;
        if &q <= bound {
            out.push((y, q));
        }
        let mut i = 0;
        loop {
            if i == l {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= ranges[i].1 {
                break;
            }
            cur[i] = ranges[i].0;
            i += 1;
        }
    }
}

/// The truncated expansion of `Θ_{S,L,h}` with keys `t = ½ ᵗy S y`,
/// `r = S y` and `tr(t) ≤ trunc`. Metadata: weight `l/2`, index `S/2`.
pub fn theta_characteristic(spec: &ThetaSpec, trunc: &Rational) -> Result<FourierExpansion, ThetaError> {
    let (l, n) = (spec.l(), spec.n());
    let columns: Vec<Vec<(RatMatrix, Rational)>> = (0..n)
        .map(|j| short_vectors(&spec.form, spec.lattice.basis(), &spec.h.block(0, j, l, 1), trunc))
        .collect();
    let mut terms = Vec::new();
    let mut stack: Vec<(RatMatrix, Rational)> = vec![(RatMatrix::zeros(l, 0), Rational::zero())];
    for col in &columns {
        let mut next = Vec::new();
        for (prefix, q) in &stack {
            for (v, qv) in col {
                let total = q + qv;
                if &total <= trunc {
                    next.push((prefix.hstack(v).expect("rows"), total));
                }
            }
        }
        stack = next;
    }
    let half = rat(1, 2);
    for (y, _) in stack {
        let t = spec.form.bracket(&y)?.scale(&half);
        let r = &spec.form * &y;
        terms.push((FourierKey::new(t, r)?, Rational::from_integer(1.into())));
    }
    let meta = ExpansionMeta {
        n,
        l,
        weight: rat(l as i64, 2),
        index: spec.form.scale(&half),
        level_b: Rational::from_integer(1.into()),
        level_c: 1,
    };
    Ok(FourierExpansion::new(meta, trunc.clone(), terms)?)
}
