//! Lattices `P · M_{l,n}(ℤ)` in `M_{l,n}(ℚ)`.

use crate::error::ThetaError;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use sjf_exact::lattice::{index, quotient_reps};
use sjf_exact::rational::{frac, Rational};
use sjf_exact::RatMatrix;

/// The lattice `P · M_{l,n}(ℤ)` for an invertible `l × l` matrix `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: RatMatrix,
    inverse: RatMatrix,
}

impl Lattice {
    pub fn new(basis: RatMatrix) -> Result<Self, ThetaError> {
        let inverse = basis.inverse().map_err(|_| ThetaError::SingularLattice)?;
        Ok(Lattice { basis, inverse })
    }

    pub fn integral(l: usize) -> Self {
        Lattice { basis: RatMatrix::identity(l), inverse: RatMatrix::identity(l) }
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn l(&self) -> usize {
        self.basis.rows()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Lattice::new(self.basis.scale(c)).expect("nonzero scale")
    }

    /// Coordinates `P⁻¹y`.
    pub fn coordinates(&self, y: &RatMatrix) -> RatMatrix {
        &self.inverse * y
    }

    pub fn contains(&self, y: &RatMatrix) -> bool {
        self.coordinates(y).is_integral()
    }

    /// Whether `other ⊆ self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        (&self.inverse * &other.basis).is_integral()
    }

    /// The canonical representative `P · frac(P⁻¹y)` of `y + L`.
    pub fn reduce(&self, y: &RatMatrix) -> RatMatrix {
        &self.basis * &self.coordinates(y).map(frac)
    }

    /// Representatives of `self / sub` in `M_{l,n}`, for `sub ⊆ self`.
    pub fn quotient_reps(&self, sub: &Lattice, n: usize) -> Result<Vec<RatMatrix>, ThetaError> {
        let q = self.relative(sub)?;
        let column_reps: Vec<RatMatrix> = quotient_reps(&q)?
            .into_iter()
            .map(|v| {
                let x = RatMatrix::from_fn(v.len(), 1, |i, _| Rational::from_integer(v[i].clone()));
                sub.reduce(&(&self.basis * &x))
            })
            .collect();
        let l = self.l();
        let mut out = vec![RatMatrix::zeros(l, 0)];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * column_reps.len());
            for prefix in &out {
                for c in &column_reps {
                    next.push(prefix.hstack(c).expect("same row count"));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// `[self : sub]` for `M_{l,n}`.
    pub fn index_of(&self, sub: &Lattice, n: usize) -> Result<BigInt, ThetaError> {
        let per_column = index(&self.relative(sub)?)?;
        Ok(num_traits::pow(per_column.abs(), n))
    }

    /// Rows of `ᵗ(P⁻¹P_sub)`, which span the coordinates of `sub`.
    fn relative(&self, sub: &Lattice) -> Result<Vec<Vec<BigInt>>, ThetaError> {
        if !self.contains_lattice(sub) {
            return Err(ThetaError::NotContained);
        }
        let q = (&self.inverse * &sub.basis).transpose();
        Ok(q.to_integer_rows().expect("integral by containment"))
    }
}

/// Congruence diagonalization `A S ᵗA = diag[s₁, …, s_l]`, the lattice
/// pair `Λ₁ = A·M(ℤ)`, `Λ₂ = 2 diag[s_i⁻¹]·M(ℤ)`, whether `Λ₂ ⊆ Λ₁`, and
/// the least positive integer `c` with `cΛ₂ ⊆ Λ₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub a: RatMatrix,
    pub diagonal: Vec<Rational>,
    pub lambda1: Lattice,
    pub lambda2: Lattice,
    pub contained: bool,
    pub rescale: BigInt,
}

pub fn build_lattices(s: &RatMatrix) -> Result<LatticeData, ThetaError> {
    if !s.is_symmetric() || !s.is_positive_definite() {
        return Err(ThetaError::NotPositiveDefinite);
    }
    let l = s.rows();
    // Symmetric elimination: row operations applied to both A and the
    // working copy, with the matching column operations on the copy.
    let mut m = s.clone();
    let mut a = RatMatrix::identity(l);
    for k in 0..l {
        let pivot = m.get(k, k).clone();
        for i in (k + 1)..l {
            let f = m.get(i, k) / &pivot;
            if f == Rational::from_integer(0.into()) {
                continue;
            }
            for j in 0..l {
                let v = m.get(i, j) - &f * m.get(k, j);
                m.set(i, j, v);
                let v = a.get(i, j) - &f * a.get(k, j);
                a.set(i, j, v);
            }
            for j in 0..l {
                let v = m.get(j, i) - &f * m.get(j, k);
                m.set(j, i, v);
            }
        }
    }
    let diagonal: Vec<Rational> = (0..l).map(|i| m.get(i, i).clone()).collect();
    let two = Rational::from_integer(2.into());
    let d = RatMatrix::diag(&diagonal.iter().map(|x| &two / x).collect::<Vec<_>>());
    let lambda1 = Lattice::new(a.clone())?;
    let lambda2 = Lattice::new(d)?;
    let contained = lambda1.contains_lattice(&lambda2);
    let rescale = if contained { BigInt::one() } else { (&lambda1.inverse * &lambda2.basis).denominator() };
    Ok(LatticeData { a, diagonal, lambda1, lambda2, contained, rescale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sjf_exact::rational::int;

    #[test]
    fn lattice_pairs_and_indices() {
        let d = build_lattices(&RatMatrix::from_i64(1, 1, &[1])).unwrap();
        assert!(d.contained);
        assert_eq!(d.lambda1.index_of(&d.lambda2, 1).unwrap(), BigInt::from(2));
        assert_eq!(d.lambda1.index_of(&d.lambda2, 3).unwrap(), BigInt::from(8));
        let d = build_lattices(&RatMatrix::from_i64(2, 2, &[1, 0, 0, 1])).unwrap();
        assert_eq!(d.lambda2.basis(), &RatMatrix::from_i64(2, 2, &[2, 0, 0, 2]));
        assert_eq!(d.lambda1.index_of(&d.lambda2, 2).unwrap(), BigInt::from(16));
        let d = build_lattices(&RatMatrix::from_i64(1, 1, &[3])).unwrap();
        assert!(!d.contained);
        assert_eq!(d.rescale, BigInt::from(3));
        assert!(d.lambda1.contains_lattice(&d.lambda2.scale(&int(3))));
    }

    #[test]
    fn diagonalization() {
        let s = RatMatrix::from_i64(2, 2, &[2, 1, 1, 2]);
        let d = build_lattices(&s).unwrap();
        let diag = &(&d.a * &s) * &d.a.transpose();
        assert_eq!(diag, RatMatrix::diag(&d.diagonal));
        assert_eq!(d.diagonal, vec![int(2), sjf_exact::rational::rat(3, 2)]);
    }

    #[test]
    fn reduction_and_reps() {
        let big = Lattice::integral(1);
        let small = Lattice::new(RatMatrix::from_i64(1, 1, &[3])).unwrap();
        let reps = big.quotient_reps(&small, 2).unwrap();
        assert_eq!(reps.len(), 9);
        assert_eq!(small.reduce(&RatMatrix::from_i64(1, 2, &[-1, 7])), RatMatrix::from_i64(1, 2, &[2, 1]));
    }
}
