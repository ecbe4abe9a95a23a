//! Truncated Fourier expansions with exact coefficients.

use crate::error::FourierError;
use crate::key::FourierKey;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use sjf_exact::rational::{lcm, to_f64, Rational};
use sjf_exact::{RatMatrix, SymMatrix};
use sjf_group::numeric::{e, imag_part, min_eigenvalue, to_complex, trace};
use sjf_group::{JacobiPoint, WeightIndex};
use std::collections::BTreeMap;

/// Weight, index and level attached to an expansion. The weight may be
/// half-integral and the index may vanish (scalar components).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMeta {
    pub n: usize,
    pub l: usize,
    pub weight: Rational,
    pub index: RatMatrix,
    pub level_b: Rational,
    pub level_c: u64,
}

impl ExpansionMeta {
    pub fn from_weight_index(n: usize, wi: &WeightIndex) -> Self {
        ExpansionMeta {
            n,
            l: wi.l(),
            weight: Rational::from_integer(wi.k.into()),
            index: wi.s.matrix().clone(),
            level_b: wi.level_b.clone(),
            level_c: wi.level_c,
        }
    }

    /// Weight zero, index zero, level one.
    pub fn trivial(n: usize, l: usize) -> Self {
        ExpansionMeta { n, l, weight: Rational::zero(), index: RatMatrix::zeros(l, l), level_b: Rational::one(), level_c: 1 }
    }

    fn validate(&self) -> Result<(), FourierError> {
        if self.index.rows() != self.l || !self.index.is_symmetric() {
            return Err(FourierError::InvalidMeta(format!("index must be a symmetric {0}x{0} matrix", self.l)));
        }
        if !self.level_b.is_positive() || self.level_c == 0 {
            return Err(FourierError::InvalidMeta("level must be positive".into()));
        }
        Ok(())
    }

    /// The weight and index as a [`WeightIndex`], when the weight is
    /// integral and the index positive definite.
    pub fn weight_index(&self) -> Result<WeightIndex, FourierError> {
        if !self.weight.is_integer() {
            return Err(FourierError::InvalidMeta(format!("weight {} is not integral", self.weight)));
        }
        let k: i64 = self.weight.to_integer().try_into().map_err(|_| FourierError::InvalidMeta("weight out of range".into()))?;
        let s = SymMatrix::new(self.index.clone())?;
        Ok(WeightIndex::new(k, s, self.level_b.clone(), self.level_c)?)
    }

    fn same_level(&self, other: &Self) -> Result<(), FourierError> {
        if self.n != other.n || self.l != other.l {
            return Err(FourierError::Incompatible(format!("(n, l) = ({}, {}) vs ({}, {})", self.n, self.l, other.n, other.l)));
        }
        if self.level_b != other.level_b || self.level_c != other.level_c {
            return Err(FourierError::Incompatible("levels differ".into()));
        }
        Ok(())
    }
}

/// A numeric value with a heuristic bound on the truncated tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub tail_estimate: f64,
}

/// `Σ c(t, r) e(tr(tτ)) e(tr(ᵗr w))` over keys with `tr(t) ≤ trunc`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierExpansion {
    meta: ExpansionMeta,
    trunc: Rational,
    coeffs: BTreeMap<FourierKey, Rational>,
}

fn denominator_of(m: &RatMatrix) -> BigInt {
    m.denominator()
}

impl FourierExpansion {
    /// Validates every key against `(n, l)` and drops zero coefficients.
    /// Keys with `tr(t) > trunc` are rejected.
    pub fn new(meta: ExpansionMeta, trunc: Rational, coeffs: impl IntoIterator<Item = (FourierKey, Rational)>) -> Result<Self, FourierError> {
        meta.validate()?;
        let mut map = BTreeMap::new();
        for (k, c) in coeffs {
            if k.n() != meta.n || k.l() != meta.l {
                return Err(FourierError::InvalidKey(format!("key of shape ({}, {}) in an expansion of shape ({}, {})", k.n(), k.l(), meta.n, meta.l)));
            }
            if k.t.trace() > trunc {
                return Err(FourierError::InvalidKey(format!("tr(t) = {} exceeds the truncation {}", k.t.trace(), trunc)));
            }
            let entry = map.entry(k).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        Ok(FourierExpansion { meta, trunc, coeffs: map })
    }

    /// Like [`FourierExpansion::new`] but silently drops keys beyond `trunc`.
    pub fn new_truncating(meta: ExpansionMeta, trunc: Rational, coeffs: impl IntoIterator<Item = (FourierKey, Rational)>) -> Result<Self, FourierError> {
        let t = trunc.clone();
        Self::new(meta, trunc, coeffs.into_iter().filter(|(k, _)| k.t.trace() <= t))
    }

    pub fn zero(meta: ExpansionMeta, trunc: Rational) -> Self {
        FourierExpansion { meta, trunc, coeffs: BTreeMap::new() }
    }

    /// The constant `1`: weight zero, index zero, level one.
    pub fn one(n: usize, l: usize, trunc: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(FourierKey::zero(n, l), Rational::one());
        FourierExpansion { meta: ExpansionMeta::trivial(n, l), trunc, coeffs }
    }

    pub fn meta(&self) -> &ExpansionMeta {
        &self.meta
    }

    pub fn with_meta(mut self, meta: ExpansionMeta) -> Result<Self, FourierError> {
        meta.validate()?;
        if meta.n != self.meta.n || meta.l != self.meta.l {
            return Err(FourierError::Incompatible("shape change".into()));
        }
        self.meta = meta;
        Ok(self)
    }

    pub fn trunc(&self) -> &Rational {
        &self.trunc
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FourierKey, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeffs(&self) -> &BTreeMap<FourierKey, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, key: &FourierKey) -> Rational {
        self.coeffs.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Least common denominator of all `t` entries.
    pub fn denom_t(&self) -> BigInt {
        self.coeffs.keys().fold(BigInt::one(), |acc, k| lcm(&acc, &denominator_of(&k.t)))
    }

    /// Least common denominator of all `r` entries.
    pub fn denom_r(&self) -> BigInt {
        self.coeffs.keys().fold(BigInt::one(), |acc, k| lcm(&acc, &denominator_of(&k.r)))
    }

    /// Restriction to `tr(t) ≤ t_max` (no-op if `t_max ≥ trunc`).
    pub fn truncate(&self, t_max: &Rational) -> Self {
        let t = if t_max < &self.trunc { t_max.clone() } else { self.trunc.clone() };
        let coeffs = self.coeffs.iter().filter(|(k, _)| k.t.trace() <= t).map(|(k, c)| (k.clone(), c.clone())).collect();
        FourierExpansion { meta: self.meta.clone(), trunc: t, coeffs }
    }

    fn check_same(&self, other: &Self) -> Result<(), FourierError> {
        self.meta.same_level(&other.meta)?;
        if self.meta.weight != other.meta.weight || self.meta.index != other.meta.index {
            return Err(FourierError::Incompatible("weights or indices differ".into()));
        }
        Ok(())
    }

    fn min_trunc(&self, other: &Self) -> Rational {
        if self.trunc < other.trunc {
            self.trunc.clone()
        } else {
            other.trunc.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FourierError> {
        self.check_same(other)?;
        let t = self.min_trunc(other);
        let terms = self.coeffs.iter().chain(other.coeffs.iter()).map(|(k, c)| (k.clone(), c.clone()));
        Self::new_truncating(self.meta.clone(), t, terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FourierError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.meta.clone(), self.trunc.clone());
        }
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        FourierExpansion { meta: self.meta.clone(), trunc: self.trunc.clone(), coeffs }
    }

    /// Cauchy product truncated to `min(T_f, T_g)`; weights and indices add.
    pub fn mul(&self, other: &Self) -> Result<Self, FourierError> {
        let trivial = |m: &ExpansionMeta| m.level_b.is_one() && m.level_c == 1 && m.index.is_zero() && m.weight.is_zero();
        if !(trivial(&self.meta) || trivial(&other.meta)) {
            self.meta.same_level(&other.meta)?;
        } else if self.meta.n != other.meta.n || self.meta.l != other.meta.l {
            return Err(FourierError::Incompatible("shapes differ".into()));
        }
        let base = if trivial(&self.meta) { &other.meta } else { &self.meta };
        let meta = ExpansionMeta {
            n: self.meta.n,
            l: self.meta.l,
            weight: &self.meta.weight + &other.meta.weight,
            index: &self.meta.index + &other.meta.index,
            level_b: base.level_b.clone(),
            level_c: base.level_c,
        };
        let t = self.min_trunc(other);
        let mut out: BTreeMap<FourierKey, Rational> = BTreeMap::new();
        for (k1, c1) in &self.coeffs {
            if k1.t.trace() > t {
                continue;
            }
            for (k2, c2) in &other.coeffs {
                let k = k1.add(k2);
                if k.t.trace() > t {
                    continue;
                }
                *out.entry(k).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(FourierExpansion { meta, trunc: t, coeffs: out })
    }

    /// Exact equality of coefficients up to `tr(t) ≤ bound`.
    pub fn agrees_up_to(&self, other: &Self, bound: &Rational) -> bool {
        self.truncate(bound).coeffs == other.truncate(bound).coeffs
    }

    /// Evaluates the finite sum. The tail estimate is heuristic: the
    /// largest term on the outer unit shell times `q / (1 − q)` with
    /// `q = exp(−2π λ_min(Im τ))`.
    pub fn evaluate(&self, z: &JacobiPoint) -> Result<Evaluation, FourierError> {
        if z.n() != self.meta.n || z.l() != self.meta.l {
            return Err(FourierError::Incompatible(format!("point of shape ({}, {})", z.n(), z.l())));
        }
        let tau = z.tau();
        let w = z.w();
        let mut value = Complex64::zero();
        let mut shell = 0.0f64;
        let outer = &self.trunc - Rational::one();
        for (k, c) in &self.coeffs {
            let phase = trace(&(to_complex(&k.t) * tau)) + trace(&(to_complex(&k.r).transpose() * w));
            let term = e(phase) * to_f64(c);
            value += term;
            if k.t.trace() > outer {
                shell = shell.max(term.norm());
            }
        }
        let lam = min_eigenvalue(&imag_part(tau));
        let q = (-2.0 * std::f64::consts::PI * lam).exp();
        Ok(Evaluation { value, tail_estimate: shell * q / (1.0 - q) })
    }
}
