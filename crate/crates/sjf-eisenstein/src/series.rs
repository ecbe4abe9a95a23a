//! The degree-one Siegel-type Jacobi Eisenstein series
//! `E(z, s) = Σ_{γ ∈ P∩Γ₀(N)\Γ₀(N)} χ(d_γ) j(γ,τ)^{−k} δ(γτ)^{s−k/2}
//! e(−c S[w]/(cτ+d)) Θ_S(γτ, w/(cτ+d))`, truncated to `max(|c|,|d|) ≤ B`.

use crate::cosets::{siegel_cosets_deg1, CosetRep};
use crate::error::EisError;
use crate::reduce::reduce_point;
use crate::theta::{e, jacobi_theta_clipped, sl2_word, theta_vector, Generator, IndexF64, WeilData};
use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;
use sjf_exact::SymMatrix;
use sjf_group::numeric::powi;
use sjf_group::{factor_j, GroupError, JacobiPoint, WeightIndex};
use sjf_hecke::CharacterModN;

/// Truncation of the coset sum and, optionally, of the lattice sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Cosets with `max(|c|, |d|) ≤ b_cd`.
    pub b_cd: u64,
    /// `|λ|_∞ ≤ b_lam`; `None` sums every term within the magnitude cut.
    pub b_lam: Option<u64>,
}

impl Bounds {
    pub fn adaptive(b_cd: u64) -> Self {
        Bounds { b_cd, b_lam: None }
    }

    /// The fixed schedule `⌈√B⌉ / λ_min(Im τ)`.
    pub fn scheduled(b_cd: u64, min_imag: f64) -> Self {
        let b = ((b_cd as f64).sqrt().ceil() / min_imag).ceil() as u64;
        Bounds { b_cd, b_lam: Some(b) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinSpec {
    pub k: i64,
    pub index: SymMatrix,
    pub level: u64,
    pub chi: CharacterModN,
    pub s: Complex64,
    pub bounds: Bounds,
}

impl EisensteinSpec {
    /// The holomorphic point `s = k/2`.
    pub fn holomorphic(k: i64, index: SymMatrix, level: u64, chi: CharacterModN, b_cd: u64) -> Self {
        EisensteinSpec { k, index, level, chi, s: Complex64::new(k as f64 / 2.0, 0.0), bounds: Bounds::adaptive(b_cd) }
    }

    /// Index `(m)`, level one, trivial character, holomorphic point.
    pub fn level_one(k: i64, m: i64, b_cd: u64) -> Result<Self, EisError> {
        let index = SymMatrix::from_i64(1, &[m])?;
        Ok(Self::holomorphic(k, index, 1, CharacterModN::trivial(1), b_cd))
    }

    pub fn l(&self) -> usize {
        self.index.dim()
    }

    /// Checks `Re(2s) > n + r + l + 1` with `n = 1`, `r = 0`,
    /// `χ(−1) = (−1)^k`, `l ≤ 2`, and that `χ` is defined modulo `N`.
    pub fn validate(&self) -> Result<(), EisError> {
        let l = self.l();
        if l == 0 || l > 2 {
            return Err(EisError::Unsupported(format!("index size l = {l}; only l ≤ 2 is implemented")));
        }
        if self.level == 0 || self.bounds.b_cd == 0 {
            return Err(EisError::InvalidInput("level and coset bound must be positive".into()));
        }
        if self.level % self.chi.modulus() != 0 {
            return Err(EisError::InvalidInput(format!("character modulus {} does not divide N = {}", self.chi.modulus(), self.level)));
        }
        let bound = (l + 2) as f64;
        let value = 2.0 * self.s.re;
        if !(value > bound) {
            return Err(EisError::Convergence { bound, value });
        }
        let sign = self.chi.sign();
        if sign != if self.k % 2 == 0 { 1 } else { -1 } {
            return Err(EisError::Parity { chi_minus_one: sign, k: self.k });
        }
        Ok(())
    }

    pub fn weight_index(&self) -> Result<WeightIndex, EisError> {
        Ok(WeightIndex::new(self.k, self.index.clone(), sjf_exact::rational::one(), self.level)?)
    }

    pub(crate) fn index_f64(&self) -> Result<IndexF64, EisError> {
        IndexF64::new(&self.index.matrix().to_f64_vec()).ok_or_else(|| EisError::InvalidInput("index is not positive definite".into()))
    }
}

/// A value with the truncation estimate `|E_B − E_{⌊B/2⌋}|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EisValue {
    pub value: Complex64,
    pub error_proxy: f64,
}

/// How the lattice sum of each summand is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMethod {
    /// Direct summation over `λ` at every transformed point.
    Direct,
    /// `Θ_{(m)}(γz)` from `θ_{m,·}(z)` by the theta transformation law
    /// along a word for `γ` in `T` and `S`; `l = 1`, integral `m`, no
    /// lattice clip.
    Transformation,
}

/// An evaluator of `E` with its coset representatives precomputed.
#[derive(Clone, Debug)]
pub struct EisensteinSeries {
    spec: EisensteinSpec,
    index: IndexF64,
    reps: Vec<CosetRep>,
    inner: u64,
    chi: Vec<Complex64>,
    shift: Complex64,
    wi: WeightIndex,
    method: ThetaMethod,
    weil: Option<WeilData>,
    words: Vec<Vec<Generator>>,
}

const CHUNK: usize = 2048;

impl EisensteinSeries {
    pub fn new(spec: EisensteinSpec) -> Result<Self, EisError> {
        spec.validate()?;
        let index = spec.index_f64()?;
        let reps = siegel_cosets_deg1(spec.level, spec.bounds.b_cd);
        let n = spec.level as usize;
        let chi = (0..n).map(|d| spec.chi.value(&BigInt::from(d))).collect();
        let shift = spec.s - Complex64::new(spec.k as f64 / 2.0, 0.0);
        let wi = spec.weight_index()?;
        let mut out = EisensteinSeries { inner: spec.bounds.b_cd / 2, spec, index, reps, chi, shift, wi, method: ThetaMethod::Direct, weil: None, words: Vec::new() };
        if out.transformation_index().is_some() {
            out = out.with_method(ThetaMethod::Transformation)?;
        }
        Ok(out)
    }

    /// `m` when `S = (m)` with `m` a positive integer and `λ` is unclipped.
    fn transformation_index(&self) -> Option<usize> {
        if self.spec.l() != 1 || self.spec.bounds.b_lam.is_some() {
            return None;
        }
        let m = self.spec.index.matrix().get(0, 0);
        if !m.is_integer() {
            return None;
        }
        usize::try_from(m.to_integer()).ok()
    }

    /// Selects the lattice-sum method; `Transformation` needs `l = 1`, an
    /// integral index and no lattice clip.
    pub fn with_method(mut self, method: ThetaMethod) -> Result<Self, EisError> {
        match method {
            ThetaMethod::Direct => {
                self.weil = None;
                self.words = Vec::new();
            }
            ThetaMethod::Transformation => {
                let m = self.transformation_index().ok_or_else(|| EisError::Unsupported("the transformation method needs l = 1, integral S and no λ clip".into()))?;
                self.weil = Some(WeilData::new(m));
                self.words = self.reps.iter().map(|g| sl2_word(g.a, g.b, g.c, g.d)).collect();
            }
        }
        self.method = method;
        Ok(self)
    }

    pub fn method(&self) -> ThetaMethod {
        self.method
    }

    pub fn spec(&self) -> &EisensteinSpec {
        &self.spec
    }

    pub fn cosets(&self) -> &[CosetRep] {
        &self.reps
    }

    pub fn weight_index(&self) -> &WeightIndex {
        &self.wi
    }

    fn check_point(&self, z: &JacobiPoint) -> Result<(), EisError> {
        if z.n() != 1 || z.l() != self.spec.l() {
            return Err(EisError::InvalidInput(format!("point has (n, l) = ({}, {}), expected (1, {})", z.n(), z.l(), self.spec.l())));
        }
        Ok(())
    }

    /// The summand of one coset at `(τ, w)`.
    pub fn summand(&self, g: &CosetRep, tau: Complex64, w: &[Complex64]) -> Complex64 {
        let (a, b, c, d) = (g.a as f64, g.b as f64, g.c as f64, g.d as f64);
        let j = tau * c + d;
        let jinv = j.inv();
        let gtau = (tau * a + b) * jinv;
        let wp: Vec<Complex64> = w.iter().map(|x| x * jinv).collect();
        let clip = self.spec.bounds.b_lam.map(|m| m as i64);
        let theta = jacobi_theta_clipped(&self.index, gtau, &wp, clip);
        let phase = if g.c == 0 { Complex64::new(1.0, 0.0) } else { e(-self.index.quad(w) * c * jinv) };
        let mut term = powi(j, -self.spec.k) * phase * theta;
        if self.shift != Complex64::new(0.0, 0.0) {
            term *= (self.shift * gtau.im.ln()).exp();
        }
        let dm = g.d.rem_euclid(self.spec.level as i64) as usize;
        term * self.chi[dm]
    }

    /// The summand of coset `i` from the theta vector `theta = θ_{m,·}(z)`:
    /// the index factors cancel and `χ(d) j^{−k} δ(γτ)^{s−k/2} s Σ v_ν θ_ν` remains.
    fn summand_transformed(&self, i: usize, tau: Complex64, theta: &[Complex64]) -> Complex64 {
        let g = &self.reps[i];
        let weil = self.weil.as_ref().expect("transformation data");
        let (s, v) = weil.transform(&self.words[i], tau);
        let j = tau * g.c as f64 + g.d as f64;
        let mut term = powi(j, -self.spec.k) * s * v.iter().zip(theta).map(|(a, b)| a * b).sum::<Complex64>();
        if self.shift != Complex64::new(0.0, 0.0) {
            let y = tau.im / j.norm_sqr();
            term *= (self.shift * y.ln()).exp();
        }
        let dm = g.d.rem_euclid(self.spec.level as i64) as usize;
        term * self.chi[dm]
    }

    /// Truncated coset sum at `z` as given, without any change of point.
    pub fn eval(&self, z: &JacobiPoint) -> Result<EisValue, EisError> {
        self.check_point(z)?;
        let tau = z.tau()[(0, 0)];
        let w: Vec<Complex64> = z.w().iter().cloned().collect();
        let zero = Complex64::new(0.0, 0.0);
        let theta = match self.method {
            ThetaMethod::Transformation => theta_vector(self.weil.as_ref().expect("transformation data").m(), tau, w[0]),
            ThetaMethod::Direct => Vec::new(),
        };
        let idx: Vec<usize> = (0..self.reps.len()).collect();
        let parts: Vec<(Complex64, Complex64)> = idx
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut full = zero;
                let mut inner = zero;
                for &i in chunk {
                    let g = &self.reps[i];
                    let t = match self.method {
                        ThetaMethod::Direct => self.summand(g, tau, &w),
                        ThetaMethod::Transformation => self.summand_transformed(i, tau, &theta),
                    };
                    full += t;
                    if g.height() <= self.inner {
                        inner += t;
                    }
                }
                (full, inner)
            })
            .collect();
        let (full, inner) = parts.into_iter().fold((zero, zero), |(f, i), (a, b)| (f + a, i + b));
        Ok(EisValue { value: full, error_proxy: (full - inner).norm() })
    }

    /// `E(z) = J(x, z)⁻¹ E(xz)` with `xz` reduced to the standard
    /// fundamental domain and `w` reduced modulo `ℤτ + ℤ`. Level one only.
    pub fn eval_reduced(&self, z: &JacobiPoint) -> Result<EisValue, EisError> {
        self.check_point(z)?;
        if self.spec.level != 1 {
            return Err(EisError::Unsupported("reduction uses the full modular group; level must be one".into()));
        }
        let (x, z0) = reduce_point(z)?;
        let j = factor_j(&x, z, &self.wi)?;
        let v = self.eval(&z0)?;
        Ok(EisValue { value: v.value / j, error_proxy: v.error_proxy / j.norm() })
    }

    /// `z ↦ E(z)` evaluated after reduction, as a Hecke evaluator.
    pub fn reduced_evaluator(&self) -> impl Fn(&JacobiPoint) -> Result<Complex64, GroupError> + Sync + '_ {
        move |z| self.eval_reduced(z).map(|v| v.value).map_err(|e| GroupError::Evaluation(e.to_string()))
    }

    /// `z ↦ E(z)` by direct summation.
    pub fn raw_evaluator(&self) -> impl Fn(&JacobiPoint) -> Result<Complex64, GroupError> + Sync + '_ {
        move |z| self.eval(z).map(|v| v.value).map_err(|e| GroupError::Evaluation(e.to_string()))
    }
}

/// One-shot evaluation by direct summation.
pub fn eval_e(spec: &EisensteinSpec, z: &JacobiPoint) -> Result<EisValue, EisError> {
    EisensteinSeries::new(spec.clone())?.eval(z)
}
