//! The decomposition `f(τ, w) = Σ_{h ∈ Λ₁/Λ₂} f_h(τ) Θ_{2S,Λ₂,h}(τ, w)`.
//!
//! A key `(t, r)` of `f` belongs to the class `h ≡ (2S)⁻¹r mod Λ₂` and
//! contributes to `f_h` at `t₂ = t − ¼ ᵗr S⁻¹ r`.

use crate::error::ThetaError;
use crate::lattice::{build_lattices, Lattice, LatticeData};
use crate::series::{theta_characteristic, ThetaSpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use sjf_exact::rational::{rat, Rational};
use sjf_exact::RatMatrix;
use sjf_fourier::key::is_positive_semidefinite;
use sjf_fourier::{ExpansionMeta, FourierExpansion, FourierKey};
use std::collections::BTreeMap;

/// Choice of the lattice pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `Λ₁ = A·M(ℤ)`, `Λ₂ = 2 diag[s_i⁻¹]·M(ℤ)` from `A S ᵗA = diag[s_i]`.
    /// Falls back to `Classical` when `Λ₂ ⊄ Λ₁`.
    Diagonalized,
    /// `Λ₁ = (2S)⁻¹·M(ℤ)`, `Λ₂ = M(ℤ)`: the classes of `r mod 2S·M(ℤ)`.
    Classical,
}

/// Lattice pair and quotient representatives for index `S` and degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSetup {
    s: RatMatrix,
    n: usize,
    requested: Convention,
    convention: Convention,
    data: LatticeData,
    lambda1: Lattice,
    lambda2: Lattice,
    reps: Vec<RatMatrix>,
}

impl ThetaSetup {
    pub fn new(s: &RatMatrix, n: usize, convention: Convention) -> Result<Self, ThetaError> {
        let data = build_lattices(s)?;
        let l = s.rows();
        let used = if convention == Convention::Diagonalized && data.contained { Convention::Diagonalized } else { Convention::Classical };
        let (lambda1, lambda2) = match used {
            Convention::Diagonalized => (data.lambda1.clone(), data.lambda2.clone()),
            Convention::Classical => {
                let two_s_inv = s.scale(&Rational::from_integer(2.into())).inverse()?;
                (Lattice::new(two_s_inv)?, Lattice::integral(l))
            }
        };
        let reps = lambda1.quotient_reps(&lambda2, n)?;
        Ok(ThetaSetup { s: s.clone(), n, requested: convention, convention: used, data, lambda1, lambda2, reps })
    }

    /// The classical pair, valid for every Jacobi form with integral `r`.
    pub fn classical(s: &RatMatrix, n: usize) -> Result<Self, ThetaError> {
        Self::new(s, n, Convention::Classical)
    }

    pub fn s(&self) -> &RatMatrix {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.s.rows()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Whether a diagonalized pair was requested but not contained.
    pub fn fell_back(&self) -> bool {
        self.requested != self.convention
    }

    pub fn lattice_data(&self) -> &LatticeData {
        &self.data
    }

    pub fn lambda1(&self) -> &Lattice {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &Lattice {
        &self.lambda2
    }

    pub fn reps(&self) -> &[RatMatrix] {
        &self.reps
    }

    pub fn index(&self) -> BigInt {
        BigInt::from(self.reps.len())
    }

    /// `Θ_{2S,Λ₂,h}` truncated at `trunc`.
    pub fn theta(&self, h: &RatMatrix, trunc: &Rational) -> Result<FourierExpansion, ThetaError> {
        let spec = ThetaSpec::new(self.s.scale(&Rational::from_integer(2.into())), self.lambda2.clone(), h.clone())?;
        theta_characteristic(&spec, trunc)
    }

    /// The class `h` of `r` and the shifted exponent `t₂ = t − ¼ ᵗr S⁻¹ r`.
    pub fn classify(&self, key: &FourierKey) -> Result<(RatMatrix, RatMatrix), ThetaError> {
        let sinv = self.s.inverse()?;
        let y = &sinv * &key.r.scale(&rat(1, 2));
        if !self.lambda1.contains(&y) {
            return Err(ThetaError::NotInLattice(y.to_string()));
        }
        let h = self.lambda2.reduce(&y);
        let t2 = &key.t - &(&(&key.r.transpose() * &sinv) * &key.r).scale(&rat(1, 4));
        if !is_positive_semidefinite(&t2) {
            return Err(ThetaError::SupportViolation { t: key.t.to_string(), r: key.r.to_string() });
        }
        Ok((h, t2))
    }
}

/// Scalar components `f_h` in the order of [`ThetaSetup::reps`], each of
/// weight `k − l/2`, index zero and keys `(t₂, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaComponents {
    setup: ThetaSetup,
    components: Vec<FourierExpansion>,
}

impl ThetaComponents {
    pub fn new(setup: ThetaSetup, components: Vec<FourierExpansion>) -> Result<Self, ThetaError> {
        if components.len() != setup.reps.len() {
            return Err(ThetaError::Shape(format!("{} components for {} classes", components.len(), setup.reps.len())));
        }
        for c in &components {
            let m = c.meta();
            if m.n != setup.n || m.l != setup.l() || !m.index.is_zero() {
                return Err(ThetaError::Shape("components must have index zero and matching (n, l)".into()));
            }
            if c.iter().any(|(k, _)| !k.r.is_zero()) {
                return Err(ThetaError::Shape("component keys must have r = 0".into()));
            }
            if m.weight != components[0].meta().weight || m.level_b != components[0].meta().level_b || m.level_c != components[0].meta().level_c {
                return Err(ThetaError::Shape("component weights or levels differ".into()));
            }
        }
        Ok(ThetaComponents { setup, components })
    }

    pub fn setup(&self) -> &ThetaSetup {
        &self.setup
    }

    pub fn components(&self) -> &[FourierExpansion] {
        &self.components
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RatMatrix, &FourierExpansion)> {
        self.setup.reps.iter().zip(self.components.iter())
    }

    pub fn component(&self, h: &RatMatrix) -> Option<&FourierExpansion> {
        let h = self.setup.lambda2.reduce(h);
        self.setup.reps.iter().position(|x| *x == h).map(|i| &self.components[i])
    }
}

fn min_theta_trace(theta: &FourierExpansion) -> Option<Rational> {
    theta.iter().map(|(k, _)| k.t.trace()).min()
}

fn component_meta(setup: &ThetaSetup, f: &ExpansionMeta) -> ExpansionMeta {
    ExpansionMeta {
        n: setup.n,
        l: setup.l(),
        weight: &f.weight - rat(setup.l() as i64, 2),
        index: RatMatrix::zeros(setup.l(), setup.l()),
        level_b: f.level_b.clone(),
        level_c: f.level_c,
    }
}

/// Splits `f` into its theta components and checks that reassembling
/// them reproduces `f` up to its truncation.
pub fn decompose(f: &FourierExpansion, setup: &ThetaSetup) -> Result<ThetaComponents, ThetaError> {
    let meta = f.meta();
    if meta.n != setup.n || meta.l != setup.l() || meta.index != setup.s {
        return Err(ThetaError::Shape("expansion does not match the theta setup".into()));
    }
    let trunc = f.trunc().clone();
    let mut per_class: Vec<BTreeMap<FourierKey, Rational>> = vec![BTreeMap::new(); setup.reps.len()];
    let mut truncs = Vec::with_capacity(setup.reps.len());
    for h in &setup.reps {
        let th = setup.theta(h, &trunc)?;
        truncs.push(match min_theta_trace(&th) {
            Some(m) => &trunc - m,
            None => Rational::zero(),
        });
    }
    let zero_r = RatMatrix::zeros(setup.l(), setup.n);
    for (key, c) in f.iter() {
        let (h, t2) = setup.classify(key)?;
        let i = setup.reps.iter().position(|x| *x == h).ok_or_else(|| ThetaError::NotInLattice(h.to_string()))?;
        if t2.trace() > truncs[i] {
            continue;
        }
        let k2 = FourierKey::new(t2, zero_r.clone())?;
        match per_class[i].get(&k2) {
            Some(existing) if existing != c => {
                return Err(ThetaError::Inconsistent { h: h.to_string(), t2: k2.t.to_string() });
            }
            Some(_) => {}
            None => {
                per_class[i].insert(k2, c.clone());
            }
        }
    }
    let cmeta = component_meta(setup, meta);
    let components = per_class
        .into_iter()
        .zip(truncs)
        .map(|(m, t)| FourierExpansion::new(cmeta.clone(), t, m))
        .collect::<Result<Vec<_>, _>>()?;
    let out = ThetaComponents::new(setup.clone(), components)?;
    let back = assemble(&out, &trunc)?;
    if let Some((k, _)) = f.iter().find(|(k, c)| back.coeff(k) != **c).or_else(|| back.iter().find(|(k, c)| f.coeff(k) != **c)) {
        let (h, t2) = setup.classify(k)?;
        return Err(ThetaError::Inconsistent { h: h.to_string(), t2: t2.to_string() });
    }
    Ok(out)
}

/// `Σ_h f_h Θ_{2S,Λ₂,h}` up to `tr(t) ≤ trunc`, further limited by how
/// far each component is known.
pub fn assemble(c: &ThetaComponents, trunc: &Rational) -> Result<FourierExpansion, ThetaError> {
    let setup = &c.setup;
    let cmeta = c.components.first().map(|x| x.meta().clone()).unwrap_or_else(|| ExpansionMeta::trivial(setup.n, setup.l()));
    let meta = ExpansionMeta {
        n: setup.n,
        l: setup.l(),
        weight: &cmeta.weight + rat(setup.l() as i64, 2),
        index: setup.s.clone(),
        level_b: cmeta.level_b.clone(),
        level_c: cmeta.level_c,
    };
    let mut thetas = Vec::with_capacity(setup.reps.len());
    let mut valid = trunc.clone();
    for (h, comp) in c.iter() {
        let th = setup.theta(h, trunc)?;
        if let Some(m) = min_theta_trace(&th) {
            let reach = comp.trunc() + m;
            if reach < valid {
                valid = reach;
            }
        }
        thetas.push(th);
    }
    let mut out: BTreeMap<FourierKey, Rational> = BTreeMap::new();
    for (th, comp) in thetas.iter().zip(c.components.iter()) {
        for (k2, c2) in comp.iter() {
            for (k1, c1) in th.iter() {
                let k = k1.add(k2);
                if k.t.trace() <= valid {
                    *out.entry(k).or_insert_with(Rational::zero) += c1 * c2;
                }
            }
        }
    }
    Ok(FourierExpansion::new(meta, valid, out)?)
}

/// Whether every component is supported on positive definite `t₂`.
pub fn property_a(c: &ThetaComponents) -> bool {
    c.components.iter().all(|f| f.iter().all(|(k, _)| k.t.is_positive_definite()))
}

/// Components `f_0 = 1`, all others zero, with the given truncation.
pub fn unit_components(setup: &ThetaSetup, weight: Rational, trunc: &Rational) -> Result<ThetaComponents, ThetaError> {
    let l = setup.l();
    let meta = ExpansionMeta {
        n: setup.n,
        l,
        weight,
        index: RatMatrix::zeros(l, l),
        level_b: Rational::one(),
        level_c: 1,
    };
    let zero_h = RatMatrix::zeros(l, setup.n);
    let comps = setup
        .reps
        .iter()
        .map(|h| {
            let terms = if *h == zero_h { vec![(FourierKey::zero(setup.n, l), Rational::one())] } else { vec![] };
            FourierExpansion::new(meta.clone(), trunc.clone(), terms)
        })
        .collect::<Result<Vec<_>, _>>()?;
    ThetaComponents::new(setup.clone(), comps)
}
