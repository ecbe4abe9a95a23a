//! Coset representatives of Jacobi Hecke double cosets.

use crate::canonical::CosetKeyer;
use crate::error::HeckeError;
use crate::glcosets::{gl_coset_reps, integral_rows};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use sjf_exact::lattice::{elementary_divisors, int_det, quotient_reps, IntRow};
use sjf_exact::rational::Rational;
use sjf_exact::RatMatrix;
use sjf_group::element::from_blocks;
use sjf_group::{JacobiElement, WeightIndex};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Which double coset a [`CosetSet`] decomposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CosetSource {
    /// `𝐃 diag[ξ̃, ξ] 𝐃` with the upper-triangular decomposition valid at
    /// primes dividing the level.
    UpperTriangular { xi: RatMatrix },
    /// The full double coset of `diag[m⁻¹, m]` for `n = 1` at `m` prime to
    /// the level.
    Full { m: u64 },
}

/// Representatives of `Γ\ΓαΓ` with their canonical keys.
#[derive(Clone, Debug)]
pub struct CosetSet {
    source: CosetSource,
    n: usize,
    l: usize,
    reps: Vec<JacobiElement>,
    keys: Vec<Vec<u8>>,
    keyer: CosetKeyer,
}

impl CosetSet {
    fn build(source: CosetSource, n: usize, l: usize, reps: Vec<JacobiElement>, mut keyer: CosetKeyer) -> Result<Self, HeckeError> {
        let keys = reps.iter().map(|r| keyer.key(r)).collect::<Result<Vec<_>, _>>()?;
        Ok(CosetSet { source, n, l, reps, keys, keyer })
    }

    pub fn source(&self) -> &CosetSource {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn reps(&self) -> &[JacobiElement] {
        &self.reps
    }

    pub fn keys(&self) -> &[Vec<u8>] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Disjointness certificate: the canonical keys are pairwise distinct.
    pub fn is_disjoint(&self) -> bool {
        let set: HashSet<&Vec<u8>> = self.keys.iter().collect();
        set.len() == self.keys.len()
    }

    /// The keyer that produced the keys; keys of further elements computed
    /// with it are comparable with [`CosetSet::keys`].
    pub fn keyer_mut(&mut self) -> &mut CosetKeyer {
        &mut self.keyer
    }

    pub fn keyer(&self) -> &CosetKeyer {
        &self.keyer
    }

    /// Index of the representative of the coset `Γx`, if any.
    pub fn locate(&mut self, x: &JacobiElement) -> Result<Option<usize>, HeckeError> {
        let k = self.keyer.key(x)?;
        Ok(self.keys.iter().position(|y| *y == k))
    }
}

/// `diag[ξ̃, ξ]` with `ξ̃ = ᵗξ⁻¹`.
pub fn diag_element(xi: &RatMatrix, l: usize) -> Result<JacobiElement, HeckeError> {
    let xt = xi.transpose().inverse()?;
    let n = xi.rows();
    let z = RatMatrix::zeros(n, n);
    Ok(JacobiElement::symplectic(from_blocks(&xt, &z, &z, xi), l)?)
}

fn to_rat(rows: &[IntRow]) -> RatMatrix {
    RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect())
}

/// Coordinates `(x_ij)_{i ≤ j}` of a symmetric matrix.
fn sym_coords(m: &RatMatrix) -> IntRow {
    let n = m.rows();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            out.push(m.get(i, j).to_integer());
        }
    }
    out
}

fn sym_from_coords(n: usize, v: &[BigInt]) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    let mut it = v.iter();
    for i in 0..n {
        for j in i..n {
            let x = Rational::from_integer(it.next().expect("coordinate count").clone());
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

/// Representatives of `Sym_n(ℤ) / ᵗd Sym_n(ℤ) d`.
pub fn sym_quotient_reps(d: &RatMatrix) -> Result<Vec<RatMatrix>, HeckeError> {
    let n = d.rows();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut e = RatMatrix::zeros(n, n);
            e.set(i, j, Rational::one());
            e.set(j, i, Rational::one());
            gens.push(sym_coords(&(&(&d.transpose() * &e) * d)));
        }
    }
    Ok(quotient_reps(&gens)?.iter().map(|v| sym_from_coords(n, v)).collect())
}

/// Representatives of `ℤ^n d⁻¹ / ℤ^n` as rows `v d⁻¹`.
pub fn row_quotient_reps(d: &RatMatrix) -> Result<Vec<RatMatrix>, HeckeError> {
    let rows = integral_rows(d)?;
    let dinv = d.inverse()?;
    Ok(quotient_reps(&rows)?.iter().map(|v| &to_rat(std::slice::from_ref(v)) * &dinv).collect())
}

/// All `l × n` matrices whose rows run independently over `rows`.
fn matrices_from_rows(rows: &[RatMatrix], l: usize, n: usize) -> Vec<RatMatrix> {
    let mut out = vec![RatMatrix::zeros(0, n)];
    for _ in 0..l {
        let mut next = Vec::with_capacity(out.len() * rows.len());
        for prefix in &out {
            for r in rows {
                next.push(prefix.vstack(r).expect("row width"));
            }
        }
        out = next;
    }
    out
}

/// Upper-triangular decomposition
/// `𝐃 diag[ξ̃, ξ] 𝐃 = ⊔ 𝐃 (0, μ, 0)[[d̃, d̃b], [0, d]]` with
/// `d ∈ E\EξE`, `b ∈ Sym(𝔟⁻¹)/ᵗd Sym(𝔟⁻¹) d` and
/// `μ ∈ M_{l,n}(𝔟⁻¹)d⁻¹ / M_{l,n}(𝔟⁻¹)`.
pub fn jacobi_coset_reps(xi: &RatMatrix, wi: &WeightIndex) -> Result<CosetSet, HeckeError> {
    let n = xi.rows();
    let l = wi.l();
    let binv = Rational::one() / &wi.level_b;
    let mut reps = Vec::new();
    for d in gl_coset_reps(xi)? {
        let dt = d.transpose().inverse()?;
        let bs = sym_quotient_reps(&d)?;
        let mus = matrices_from_rows(&row_quotient_reps(&d)?, l, n);
        for b in &bs {
            let g = from_blocks(&dt, &(&dt * &b.scale(&binv)), &RatMatrix::zeros(n, n), &d);
            for mu in &mus {
                reps.push(JacobiElement::new(RatMatrix::zeros(l, n), mu.scale(&binv), RatMatrix::zeros(l, l), g.clone())?);
            }
        }
    }
    let keyer = CosetKeyer::for_index(n, wi)?;
    CosetSet::build(CosetSource::UpperTriangular { xi: xi.clone() }, n, l, reps, keyer)
}

/// The expected count `Σ_d [Sym : ᵗd Sym d]·[M d⁻¹ : M] = Σ_d |det d|^{n+1+l}`.
pub fn expected_count(xi: &RatMatrix, l: usize) -> Result<BigInt, HeckeError> {
    let n = xi.rows();
    let mut total = BigInt::zero();
    for d in gl_coset_reps(xi)? {
        let det = d.det()?.to_integer();
        total += num_traits::pow(det, n + 1 + l);
    }
    Ok(total)
}

/// Full decomposition of `Γ diag[m⁻¹, m] Γ` for `n = 1` and
/// `gcd(m, N) = 1`: the symplectic cosets `M/m` for primitive Hermite
/// forms `M` of determinant `m²`, each followed by the integral Heisenberg
/// translations `(λ, μ, 0)` that give distinct cosets.
pub fn full_coset_reps(m: u64, wi: &WeightIndex) -> Result<CosetSet, HeckeError> {
    if m == 0 {
        return Err(HeckeError::InvalidXi);
    }
    if m.gcd(&wi.level_c) != 1 {
        return Err(HeckeError::Unsupported(format!("the full decomposition needs gcd(m, N) = 1, got m = {m}, N = {}", wi.level_c)));
    }
    let l = wi.l();
    let mut keyer = CosetKeyer::for_index(1, wi)?;
    let binv = Rational::one() / &wi.level_b;
    let mr = Rational::from_integer(BigInt::from(m));
    let shape = RatMatrix::diag(&[Rational::one(), &mr * &mr]);
    let box_rows: Vec<RatMatrix> = (0..m).map(|v| RatMatrix::from_i64(1, 1, &[v as i64])).collect();
    let lambdas = matrices_from_rows(&box_rows, l, 1);
    let mut reps = Vec::new();
    let mut seen = HashSet::new();
    for hm in gl_coset_reps(&shape)? {
        // M/m is symplectic of determinant one; conjugate b into 𝔟⁻¹.
        let mut g = hm.scale(&(Rational::one() / &mr));
        g.set(0, 1, g.get(0, 1) * &binv);
        let alpha = JacobiElement::symplectic(g, l)?;
        for lam in &lambdas {
            for mu in &lambdas {
                let h = JacobiElement::heisenberg(lam.clone(), mu.scale(&binv), RatMatrix::zeros(l, l))?;
                let x = alpha.compose(&h)?;
                if seen.insert(keyer.key(&x)?) {
                    reps.push(x);
                }
            }
        }
    }
    CosetSet::build(CosetSource::Full { m }, 1, l, reps, keyer)
}

/// Elementary-divisor sequences `e₁ | e₂ | … | e_n` with product `det`.
fn divisor_chains(det: &BigInt, n: usize, lower: &BigInt) -> Vec<Vec<BigInt>> {
    if n == 0 {
        return if det.is_one() { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut e = lower.clone();
    while &e <= det {
        if (det % &e).is_zero() {
            for mut rest in divisor_chains(&(det / &e), n - 1, &e) {
                if rest.first().map_or(true, |f| (f % &e).is_zero()) {
                    rest.insert(0, e.clone());
                    out.push(rest);
                }
            }
        }
        e += 1;
    }
    out
}

/// Result of [`bad_closure_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    /// Number of products `αβ` examined.
    pub products: usize,
    /// Products whose coset lies outside every family member.
    pub outside: usize,
    /// Hits per family member, keyed by its elementary divisors.
    pub hits: BTreeMap<Vec<BigInt>, usize>,
    /// Distinct product cosets found in each family member against its size.
    pub coverage: BTreeMap<Vec<BigInt>, (usize, usize)>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.outside == 0
    }
}

/// Multiplies all representatives of the `ξ₁` and `ξ₂` decompositions and
/// reduces every product to canonical form against the family of
/// upper-triangular decompositions `diag[ξ̃, ξ]` with
/// `det ξ = det ξ₁ det ξ₂`.
pub fn bad_closure_check(xi1: &RatMatrix, xi2: &RatMatrix, wi: &WeightIndex) -> Result<ClosureReport, HeckeError> {
    let n = xi1.rows();
    if xi2.rows() != n {
        return Err(HeckeError::InvalidXi);
    }
    let a = jacobi_coset_reps(xi1, wi)?;
    let b = jacobi_coset_reps(xi2, wi)?;
    let det = int_det(&integral_rows(xi1)?) * int_det(&integral_rows(xi2)?);
    let det = num_traits::sign::abs(det);
    let mut keyer = CosetKeyer::for_index(n, wi)?;
    let mut owner: HashMap<Vec<u8>, Vec<BigInt>> = HashMap::new();
    let mut sizes = BTreeMap::new();
    for chain in divisor_chains(&det, n, &BigInt::one()) {
        let xi = RatMatrix::diag(&chain.iter().map(|e| Rational::from_integer(e.clone())).collect::<Vec<_>>());
        debug_assert_eq!(elementary_divisors(&integral_rows(&xi)?), chain);
        let fam = jacobi_coset_reps(&xi, wi)?;
        for r in fam.reps() {
            owner.insert(keyer.key(r)?, chain.clone());
        }
        sizes.insert(chain, fam.len());
    }
    let mut report = ClosureReport { products: 0, outside: 0, hits: BTreeMap::new(), coverage: BTreeMap::new() };
    let mut distinct: HashMap<Vec<BigInt>, HashSet<Vec<u8>>> = HashMap::new();
    for x in a.reps() {
        for y in b.reps() {
            let k = keyer.key(&x.compose(y)?)?;
            report.products += 1;
            match owner.get(&k) {
                Some(chain) => {
                    *report.hits.entry(chain.clone()).or_insert(0) += 1;
                    distinct.entry(chain.clone()).or_default().insert(k);
                }
                None => report.outside += 1,
            }
        }
    }
    for (chain, size) in sizes {
        let found = distinct.get(&chain).map_or(0, |s| s.len());
        report.coverage.insert(chain, (found, size));
    }
    Ok(report)
}
