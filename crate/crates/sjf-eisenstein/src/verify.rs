//! End-to-end check of the degree-one Euler factor: the eigenvalue of `E`
//! at `T(p)` fixes the Satake parameter, which predicts the eigenvalue at
//! `T(p²)`; both are measured on the numerically summed series.

use crate::error::EisError;
use crate::reduce::{reduced_hecke_at, reduced_value};
use crate::series::{EisensteinSeries, EisensteinSpec};
use num_complex::Complex64;
use sjf_group::{JacobiPoint, WeightIndex};
use sjf_hecke::{eigenvalue_from_values, full_coset_reps, CharacterModN, EigenEstimate, Evaluator, HeckeOperator};
use sjf_lfunction::satake_solve_and_predict;

/// Measurements at one coset bound.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerRung {
    pub b: u64,
    pub lambda_p: Complex64,
    pub residual_p: f64,
    pub mu: Complex64,
    pub predicted_p2: Complex64,
    pub lambda_p2: Complex64,
    pub residual_p2: f64,
    /// `|measured − predicted| / |predicted|` for `λ(p²)`.
    pub gap: f64,
    /// Largest truncation estimate of `E` over the probe points.
    pub error_proxy: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerReport {
    pub k: i64,
    pub p: u64,
    pub rungs: Vec<EulerRung>,
}

impl EulerReport {
    /// Whether the `T(p)` residual and the gap decrease along the rungs.
    pub fn monotone(&self) -> bool {
        self.rungs.windows(2).all(|w| w[1].residual_p < w[0].residual_p && w[1].gap < w[0].gap)
    }

    /// The rung at bound `b`.
    pub fn at(&self, b: u64) -> Option<&EulerRung> {
        self.rungs.iter().find(|r| r.b == b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub points: Vec<JacobiPoint>,
    /// Abort when the `T(p)` residual exceeds this.
    pub abort_residual: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { points: default_points(), abort_residual: 1e-2 }
    }
}

/// Probe points in general position for `l = 1`.
pub fn default_points() -> Vec<JacobiPoint> {
    let raw = [((0.11, 1.07), (0.21, 0.13)), ((-0.27, 1.21), (-0.08, 0.31)), ((0.36, 0.98), (0.3, -0.17)), ((-0.05, 1.42), (0.17, 0.45))];
    raw.iter()
        .map(|&((x, y), (u, v))| JacobiPoint::deg1(Complex64::new(x, y), &[Complex64::new(u, v)]).expect("valid probe point"))
        .collect()
}

/// `λ(p)`, the Satake prediction for `λ(p²)`, and the measured `λ(p²)` of
/// an evaluator `f` of weight and index `wi` at level one. Every point is
/// reduced before `f` is called.
pub fn euler_check(f: &Evaluator<'_>, wi: &WeightIndex, p: u64, points: &[JacobiPoint]) -> Result<(EigenEstimate, Complex64, Complex64, EigenEstimate), EisError> {
    let trivial = CharacterModN::trivial(1);
    let tp = HeckeOperator::new(full_coset_reps(p, wi)?, wi.clone(), trivial.clone())?;
    let tp2 = HeckeOperator::new(full_coset_reps(p * p, wi)?, wi.clone(), trivial)?;
    let mut fv = Vec::with_capacity(points.len());
    let mut t1 = Vec::with_capacity(points.len());
    let mut t2 = Vec::with_capacity(points.len());
    for z in points {
        fv.push(reduced_value(f, wi, z)?);
        t1.push(reduced_hecke_at(&tp, f, z)?);
        t2.push(reduced_hecke_at(&tp2, f, z)?);
    }
    let e1 = eigenvalue_from_values(&fv, &t1)?;
    let pred = satake_solve_and_predict(e1.lambda, p, wi.l());
    let e2 = eigenvalue_from_values(&fv, &t2)?;
    Ok((e1, pred.mu, pred.predicted_lambda_p2, e2))
}

/// One rung of the pipeline for `E_{k,1}` at coset bound `b`.
pub fn euler_rung(k: i64, p: u64, b: u64, opts: &VerifyOptions) -> Result<EulerRung, EisError> {
    let series = EisensteinSeries::new(EisensteinSpec::level_one(k, 1, b)?)?;
    let f = series.raw_evaluator();
    let (e1, mu, predicted, e2) = euler_check(&f, series.weight_index(), p, &opts.points)?;
    if e1.residual > opts.abort_residual {
        return Err(EisError::NotEigen { m: p, residual: e1.residual, limit: opts.abort_residual });
    }
    let mut error_proxy = 0.0f64;
    for z in &opts.points {
        error_proxy = error_proxy.max(series.eval_reduced(z)?.error_proxy);
    }
    Ok(EulerRung {
        b,
        lambda_p: e1.lambda,
        residual_p: e1.residual,
        mu,
        predicted_p2: predicted,
        lambda_p2: e2.lambda,
        residual_p2: e2.residual,
        gap: (e2.lambda - predicted).norm() / predicted.norm(),
        error_proxy,
    })
}

/// The pipeline on the ladder `⌊B/2⌋, B, 2B` for even `k ≥ 6`, `p ∈ {2, 3}`.
pub fn hecke_euler_verify(k: i64, p: u64, b: u64, opts: &VerifyOptions) -> Result<EulerReport, EisError> {
    if k < 6 || k % 2 != 0 {
        return Err(EisError::InvalidInput(format!("weight must be even and at least 6, got {k}")));
    }
    if p != 2 && p != 3 {
        return Err(EisError::Unsupported(format!("p = {p}; the pipeline is set up for p ∈ {{2, 3}}")));
    }
    if b < 2 {
        return Err(EisError::InvalidInput("coset bound must be at least 2".into()));
    }
    let rungs = [b / 2, b, 2 * b].iter().map(|&bb| euler_rung(k, p, bb, opts)).collect::<Result<Vec<_>, _>>()?;
    Ok(EulerReport { k, p, rungs })
}
