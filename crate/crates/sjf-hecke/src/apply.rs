//! Application of Hecke operators to evaluators and to degree-one
//! expansions, and eigenvalue extraction.

use crate::character::{phase_to_complex, CharacterModN};
use crate::cosets::CosetSet;
use crate::error::HeckeError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use sjf_exact::rational::{from_f64, to_f64, Rational};
use sjf_exact::{RatMatrix, RootSum};
use sjf_fourier::{FourierExpansion, FourierKey};
use sjf_group::factor::slash_at;
use sjf_group::{Complex64, GroupError, JacobiElement, JacobiPoint, WeightIndex};
use std::collections::BTreeMap;

/// A pointwise evaluator of a function on `ℋ_{n,l}`.
pub type Evaluator<'a> = dyn Fn(&JacobiPoint) -> Result<Complex64, GroupError> + Sync + 'a;

/// `f|T = Σ_α ψ_𝔠(det a_α)⁻¹ f|_{k,S} α` over a coset set.
#[derive(Clone, Debug)]
pub struct HeckeOperator {
    cosets: CosetSet,
    wi: WeightIndex,
    psi: CharacterModN,
    phases: Vec<Rational>,
}

impl HeckeOperator {
    /// Checks `ψ(−1) = (−1)^k` and that `ψ` is defined modulo the level.
    pub fn new(cosets: CosetSet, wi: WeightIndex, psi: CharacterModN) -> Result<Self, HeckeError> {
        psi.check_parity(wi.k)?;
        if wi.level_c % psi.modulus() != 0 {
            return Err(HeckeError::InvalidCharacter(format!("modulus {} does not divide the level {}", psi.modulus(), wi.level_c)));
        }
        if cosets.l() != wi.l() {
            return Err(HeckeError::Unsupported("coset set and index have different l".into()));
        }
        let phases = cosets
            .reps()
            .iter()
            .map(|r| Ok(psi.phase_c_inverse(&r.blocks().0.det()?)))
            .collect::<Result<Vec<_>, HeckeError>>()?;
        Ok(HeckeOperator { cosets, wi, psi, phases })
    }

    pub fn cosets(&self) -> &CosetSet {
        &self.cosets
    }

    pub fn weight_index(&self) -> &WeightIndex {
        &self.wi
    }

    pub fn character(&self) -> &CharacterModN {
        &self.psi
    }

    /// Representatives paired with their character weights.
    pub fn terms(&self) -> impl Iterator<Item = (&JacobiElement, Complex64)> {
        self.cosets.reps().iter().zip(self.phases.iter().map(phase_to_complex))
    }

    /// `(f|T)(z)`; representatives are evaluated in parallel and summed in
    /// their fixed order.
    pub fn apply_at(&self, f: &Evaluator<'_>, z: &JacobiPoint) -> Result<Complex64, HeckeError> {
        let reps = self.cosets.reps();
        let parts: Vec<Complex64> = reps
            .par_iter()
            .zip(self.phases.par_iter())
            .map(|(a, ph)| Ok(slash_at(f, a, &self.wi, z)? * phase_to_complex(ph)))
            .collect::<Result<Vec<_>, GroupError>>()?;
        Ok(parts.into_iter().sum())
    }

    /// `f|T` as an evaluator.
    pub fn apply<'a>(&'a self, f: &'a Evaluator<'a>) -> impl Fn(&JacobiPoint) -> Result<Complex64, GroupError> + Sync + 'a {
        move |z| self.apply_at(f, z).map_err(|e| GroupError::Evaluation(e.to_string()))
    }

    /// Exact action on a degree-one expansion of a form invariant under the
    /// level group.
    ///
    /// Each representative is written `h·g` with `h = (λ, μ, κ)` and
    /// `g = [[A, B], [0, D]]`. The term `c e(tτ + ᵗrw)` maps to
    /// `D^{−k} c e(tr(Sκ) + ᵗrμ + t′B/D) e((t′/D²)τ + ᵗ(r′/D)w)` with
    /// `t′ = t + ᵗrλ + S[λ]` and `r′ = r + 2Sλ`. The result is truncated
    /// where every contributing source key lies inside the input truncation
    /// `T`: a target key `t_o` draws on sources with
    /// `t ≤ (D√t_o + √S[λ])²`.
    pub fn apply_expansion(&self, f: &FourierExpansion) -> Result<FourierExpansion, HeckeError> {
        let meta = f.meta();
        if meta.n != 1 {
            return Err(HeckeError::Unsupported("expansion-level Hecke action needs n = 1".into()));
        }
        let s = self.wi.s.matrix();
        if meta.weight != Rational::from_integer(BigInt::from(self.wi.k)) || &meta.index != s {
            return Err(HeckeError::Unsupported("expansion weight/index differ from the operator's".into()));
        }
        let k = self.wi.k;
        let mut acc: BTreeMap<FourierKey, RootSum> = BTreeMap::new();
        let t_in = to_f64(f.trunc()).max(0.0);
        let mut t_out: Option<Rational> = None;
        for (rep, ph) in self.cosets.reps().iter().zip(&self.phases) {
            // f is Γ-invariant, so the rep may be moved by an integral
            // translation (−⌊λ⌋, 0, 0) to shrink S[λ] and widen the output.
            let shift = JacobiElement::heisenberg(rep.lambda().map(|x| -x.floor()), RatMatrix::zeros(rep.l(), 1), RatMatrix::zeros(rep.l(), rep.l()))?;
            let rep = &shift.compose(rep)?;
            let (_, gb, gc, gd) = rep.blocks();
            if !gc.is_zero() {
                return Err(HeckeError::Unsupported("expansion-level action needs upper-triangular representatives".into()));
            }
            let a_b = gb.get(0, 0).clone();
            let dd = gd.get(0, 0).clone();
            let lam = rep.lambda();
            let mu = rep.mu();
            let s_lam = s.bracket(lam)?.get(0, 0).clone();
            let two_s_lam = (s * lam).scale(&Rational::from_integer(2.into()));
            let kappa_phase = (s * rep.kappa()).trace();
            let scale = rational_pow(&dd, -k);
            let inv_d = Rational::one() / &dd;
            // Exact when the shift is trivial, otherwise a safe rational floor.
            let bound = if s_lam.is_zero() {
                f.trunc() * &inv_d * &inv_d
            } else {
                let b = ((t_in.sqrt() - to_f64(&s_lam).max(0.0).sqrt()) / to_f64(&dd.abs())).max(0.0);
                floor_to_rational(b * b)
            };
            t_out = Some(match t_out {
                Some(t) if t <= bound => t,
                _ => bound,
            });
            for (key, c) in f.iter() {
                let r = &key.r;
                let rl = (&r.transpose() * lam).get(0, 0).clone();
                let t1 = key.t.get(0, 0) + &rl + &s_lam;
                let r1 = r + &two_s_lam;
                let rmu = (&r.transpose() * mu).get(0, 0).clone();
                let phase = &kappa_phase + &rmu + &t1 * &a_b * &inv_d + ph;
                let t_new = &t1 * &inv_d * &inv_d;
                let r_new = r1.scale(&inv_d);
                let nk = FourierKey { t: RatMatrix::scalar(t_new), r: r_new };
                acc.entry(nk).or_default().add_term(&phase, &(c * &scale));
            }
        }
        let trunc = t_out.unwrap_or_else(|| f.trunc().clone());
        let mut out = Vec::new();
        for (key, sum) in acc {
            if key.t.get(0, 0) > &trunc {
                continue;
            }
            match sum.to_rational() {
                Some(c) if c.is_zero() => {}
                Some(c) => out.push((FourierKey::new(key.t, key.r)?, c)),
                None => return Err(HeckeError::NotRational(format!("t = {}, r = {}", key.t, key.r))),
            }
        }
        Ok(FourierExpansion::new(meta.clone(), trunc, out)?)
    }
}

fn rational_pow(x: &Rational, k: i64) -> Rational {
    let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
    if k >= 0 {
        p
    } else {
        Rational::one() / p
    }
}

/// A rational `≤ x` with denominator `2^20`, safe against rounding.
fn floor_to_rational(x: f64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let den = 1u64 << 20;
    let num = ((x * (1.0 - 1e-12)) * den as f64).floor();
    from_f64(num).unwrap_or_else(Rational::zero) / Rational::from_integer(BigInt::from(den))
}

/// Estimated eigenvalue and its consistency across probe points.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenEstimate {
    /// Componentwise median of `(f|T)(z)/f(z)`.
    pub lambda: Complex64,
    /// `max |ratio − λ| / |λ|` over the probe points used.
    pub residual: f64,
    pub ratios: Vec<Complex64>,
}

impl EigenEstimate {
    pub fn is_eigen(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Relative floor below which `|f(z)|` counts as vanishing.
pub const VANISHING: f64 = 1e-12;

/// Ratios `(f|T)(z)/f(z)` from precomputed values.
pub fn eigenvalue_from_values(f_values: &[Complex64], tf_values: &[Complex64]) -> Result<EigenEstimate, HeckeError> {
    let scale = f_values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(HeckeError::VanishingProbe);
    }
    let ratios: Vec<Complex64> = f_values
        .iter()
        .zip(tf_values)
        .filter(|(f, _)| f.norm() > VANISHING * scale)
        .map(|(f, tf)| tf / f)
        .collect();
    if ratios.is_empty() {
        return Err(HeckeError::VanishingProbe);
    }
    let lambda = Complex64::new(median(ratios.iter().map(|r| r.re).collect()), median(ratios.iter().map(|r| r.im).collect()));
    let denom = if lambda.norm() > 0.0 { lambda.norm() } else { 1.0 };
    let residual = ratios.iter().map(|r| (r - lambda).norm() / denom).fold(0.0, f64::max);
    Ok(EigenEstimate { lambda, residual, ratios })
}

/// Eigenvalue of `f` under `T` from probe points.
pub fn eigenvalue_extract(f: &Evaluator<'_>, op: &HeckeOperator, points: &[JacobiPoint]) -> Result<EigenEstimate, HeckeError> {
    let mut fv = Vec::with_capacity(points.len());
    let mut tv = Vec::with_capacity(points.len());
    for z in points {
        fv.push(f(z)?);
        tv.push(op.apply_at(f, z)?);
    }
    eigenvalue_from_values(&fv, &tv)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

