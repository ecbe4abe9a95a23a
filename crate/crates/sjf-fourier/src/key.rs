//! Fourier keys `(t, r)` and the cusp-support predicate.

use crate::error::FourierError;
use num_traits::Signed;
use sjf_exact::RatMatrix;

/// A key `(t, r)` with `t` symmetric `n × n` and `r` of size `l × n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourierKey {
    pub t: RatMatrix,
    pub r: RatMatrix,
}

impl FourierKey {
    /// Validates shapes, symmetry and positive semidefiniteness of `t`.
    pub fn new(t: RatMatrix, r: RatMatrix) -> Result<Self, FourierError> {
        if !t.is_square() || r.cols() != t.rows() {
            return Err(FourierError::InvalidKey(format!("t is {}x{}, r is {}x{}", t.rows(), t.cols(), r.rows(), r.cols())));
        }
        if !t.is_symmetric() {
            return Err(FourierError::InvalidKey("t is not symmetric".into()));
        }
        if !is_positive_semidefinite(&t) {
            return Err(FourierError::InvalidKey(format!("t = {t} is not positive semidefinite")));
        }
        Ok(FourierKey { t, r })
    }

    pub fn zero(n: usize, l: usize) -> Self {
        FourierKey { t: RatMatrix::zeros(n, n), r: RatMatrix::zeros(l, n) }
    }

    pub fn n(&self) -> usize {
        self.t.rows()
    }

    pub fn l(&self) -> usize {
        self.r.rows()
    }

    /// Sum of keys: the exponent of a product of two terms.
    pub fn add(&self, other: &Self) -> Self {
        FourierKey { t: &self.t + &other.t, r: &self.r + &other.r }
    }

    /// Canonical byte encoding.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.t.encode(&mut out);
        self.r.encode(&mut out);
        out
    }
}

/// All principal minors are nonnegative.
pub fn is_positive_semidefinite(t: &RatMatrix) -> bool {
    let n = t.rows();
    if n > 16 {
        return false;
    }
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = RatMatrix::from_fn(idx.len(), idx.len(), |i, j| t.get(idx[i], idx[j]).clone());
        match sub.det() {
            Ok(d) if d.is_negative() => return false,
            Ok(_) => {}
            Err(_) => return false,
        }
    }
    true
}

/// Whether `[[S, r], [ᵗr, t]]` is positive definite.
pub fn is_cusp_support(t: &RatMatrix, r: &RatMatrix, s: &RatMatrix) -> bool {
    let block = RatMatrix::from_blocks(&[&[s, r], &[&r.transpose(), t]]);
    match block {
        Ok(b) => b.is_positive_definite(),
        Err(_) => false,
    }
}

/// The cusp condition `4t − ᵗr S⁻¹ r > 0` for expansions whose `r`
/// shifts by `2Sλ` under `w ↦ w + λτ`. Equals [`is_cusp_support`] at
/// `(t, r/2)`.
pub fn is_strict_support(t: &RatMatrix, r: &RatMatrix, s: &RatMatrix) -> bool {
    is_cusp_support(t, &r.scale(&sjf_exact::rational::rat(1, 2)), s)
}
