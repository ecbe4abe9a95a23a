//! Exact elements `(λ, μ, κ)g` of the Jacobi group.

use crate::error::GroupError;
use sjf_exact::RatMatrix;
use std::fmt;

/// `(λ, μ, κ)g` with `λ, μ` of size `l × n`, `κ` symmetric `l × l` and
/// `g ∈ Sp_n(ℚ)` of size `2n × 2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiElement {
    n: usize,
    l: usize,
    lambda: RatMatrix,
    mu: RatMatrix,
    kappa: RatMatrix,
    g: RatMatrix,
}

/// `J_n = [[0, −1_n], [1_n, 0]]`.
pub fn j_matrix(n: usize) -> RatMatrix {
    let one = RatMatrix::identity(n);
    let zero = RatMatrix::zeros(n, n);
    RatMatrix::from_blocks(&[&[&zero, &(-&one)], &[&one, &zero]]).expect("block sizes")
}

/// `ᵗg J_n g = J_n`.
pub fn is_symplectic(g: &RatMatrix) -> bool {
    if !g.is_square() || g.rows() % 2 != 0 {
        return false;
    }
    let j = j_matrix(g.rows() / 2);
    &(&g.transpose() * &j) * g == j
}

/// The blocks `(a, b, c, d)` of a `2n × 2n` matrix.
pub fn blocks(g: &RatMatrix) -> (RatMatrix, RatMatrix, RatMatrix, RatMatrix) {
    let n = g.rows() / 2;
    (g.block(0, 0, n, n), g.block(0, n, n, n), g.block(n, 0, n, n), g.block(n, n, n, n))
}

/// Reassembles `[[a, b], [c, d]]`.
pub fn from_blocks(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix, d: &RatMatrix) -> RatMatrix {
    RatMatrix::from_blocks(&[&[a, b], &[c, d]]).expect("block sizes")
}

/// Inverse of a symplectic matrix: `[[ᵗd, −ᵗb], [−ᵗc, ᵗa]]`.
pub fn symplectic_inverse(g: &RatMatrix) -> RatMatrix {
    let (a, b, c, d) = blocks(g);
    from_blocks(&d.transpose(), &(-&b.transpose()), &(-&c.transpose()), &a.transpose())
}

impl JacobiElement {
    /// Validates shapes, symmetry of `κ` and that `g` is symplectic.
    pub fn new(
        lambda: RatMatrix,
        mu: RatMatrix,
        kappa: RatMatrix,
        g: RatMatrix,
    ) -> Result<Self, GroupError> {
        let l = lambda.rows();
        let n = lambda.cols();
        if mu.rows() != l || mu.cols() != n {
            return Err(GroupError::DimensionMismatch(format!("μ is {}x{}, expected {l}x{n}", mu.rows(), mu.cols())));
        }
        if kappa.rows() != l || kappa.cols() != l {
            return Err(GroupError::DimensionMismatch(format!("κ is {}x{}, expected {l}x{l}", kappa.rows(), kappa.cols())));
        }
        if g.rows() != 2 * n || g.cols() != 2 * n {
            return Err(GroupError::DimensionMismatch(format!("g is {}x{}, expected {}x{}", g.rows(), g.cols(), 2 * n, 2 * n)));
        }
        if !kappa.is_symmetric() {
            return Err(GroupError::KappaNotSymmetric);
        }
        if !is_symplectic(&g) {
            return Err(GroupError::NotSymplectic);
        }
        Ok(JacobiElement { n, l, lambda, mu, kappa, g })
    }

    fn new_unchecked(lambda: RatMatrix, mu: RatMatrix, kappa: RatMatrix, g: RatMatrix) -> Self {
        JacobiElement { n: lambda.cols(), l: lambda.rows(), lambda, mu, kappa, g }
    }

    pub fn identity(n: usize, l: usize) -> Self {
        Self::new_unchecked(RatMatrix::zeros(l, n), RatMatrix::zeros(l, n), RatMatrix::zeros(l, l), RatMatrix::identity(2 * n))
    }

    /// The Heisenberg element `(λ, μ, κ)1_{2n}`.
    pub fn heisenberg(lambda: RatMatrix, mu: RatMatrix, kappa: RatMatrix) -> Result<Self, GroupError> {
        let n = lambda.cols();
        Self::new(lambda, mu, kappa, RatMatrix::identity(2 * n))
    }

    /// The symplectic element `(0, 0, 0)g`.
    pub fn symplectic(g: RatMatrix, l: usize) -> Result<Self, GroupError> {
        let n = g.rows() / 2;
        Self::new(RatMatrix::zeros(l, n), RatMatrix::zeros(l, n), RatMatrix::zeros(l, l), g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn lambda(&self) -> &RatMatrix {
        &self.lambda
    }

    pub fn mu(&self) -> &RatMatrix {
        &self.mu
    }

    pub fn kappa(&self) -> &RatMatrix {
        &self.kappa
    }

    pub fn g(&self) -> &RatMatrix {
        &self.g
    }

    pub fn blocks(&self) -> (RatMatrix, RatMatrix, RatMatrix, RatMatrix) {
        blocks(&self.g)
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_zero() && self.mu.is_zero() && self.kappa.is_zero() && self.g.is_identity()
    }

    /// The Heisenberg factor `(λ, μ, κ)1`.
    pub fn heisenberg_part(&self) -> Self {
        Self::new_unchecked(self.lambda.clone(), self.mu.clone(), self.kappa.clone(), RatMatrix::identity(2 * self.n))
    }

    /// The symplectic factor `(0, 0, 0)g`.
    pub fn symplectic_part(&self) -> Self {
        Self::new_unchecked(RatMatrix::zeros(self.l, self.n), RatMatrix::zeros(self.l, self.n), RatMatrix::zeros(self.l, self.l), self.g.clone())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GroupError> {
        if self.n != other.n || self.l != other.l {
            return Err(GroupError::DimensionMismatch(format!(
                "(n, l) = ({}, {}) vs ({}, {})",
                self.n, self.l, other.n, other.l
            )));
        }
        Ok(())
    }

    /// The group law
    /// `(λ,μ,κ)g · (λ′,μ′,κ′)g′ = (λ+λ̃, μ+μ̃, κ+κ′+λᵗμ̃+μ̃ᵗλ+λ̃ᵗμ̃−λ′ᵗμ′)gg′`
    /// with `(λ̃ μ̃) = (λ′ μ′)g⁻¹`.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_compatible(other)?;
        let (a, b, c, d) = self.blocks();
        let lt = &(&other.lambda * &d.transpose()) - &(&other.mu * &c.transpose());
        let mt = &(&other.mu * &a.transpose()) - &(&other.lambda * &b.transpose());
        let cross = &(&(&self.lambda * &mt.transpose()) + &(&mt * &self.lambda.transpose()))
            + &(&(&lt * &mt.transpose()) - &(&other.lambda * &other.mu.transpose()));
        let kappa = &(&self.kappa + &other.kappa) + &cross;
        Ok(Self::new_unchecked(&self.lambda + &lt, &self.mu + &mt, kappa, &self.g * &other.g))
    }

    /// The inverse element.
    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = self.blocks();
        // (λ*, μ*) = −(λ, μ)g, so that (λ*, μ*)g⁻¹ = −(λ, μ).
        let ls = -&(&(&self.lambda * &a) + &(&self.mu * &c));
        let ms = -&(&(&self.lambda * &b) + &(&self.mu * &d));
        let kappa = &(&(-&self.kappa) + &(&self.mu * &self.lambda.transpose())) + &(&ls * &ms.transpose());
        Self::new_unchecked(ls, ms, kappa, symplectic_inverse(&self.g))
    }

    /// Image in `Sp_{l+n}(ℚ)`, as the product of
    /// `[[1, λ, κ−μᵗλ, μ], [0, 1, ᵗμ, 0], [0, 0, 1, 0], [0, 0, −ᵗλ, 1]]` and
    /// `[[1, 0, 0, 0], [0, a, 0, b], [0, 0, 1, 0], [0, c, 0, d]]`
    /// in blocks of sizes `(l, n, l, n)`.
    pub fn embed_symplectic(&self) -> RatMatrix {
        let (l, n) = (self.l, self.n);
        let il = RatMatrix::identity(l);
        let inn = RatMatrix::identity(n);
        let zll = RatMatrix::zeros(l, l);
        let zln = RatMatrix::zeros(l, n);
        let znl = RatMatrix::zeros(n, l);
        let znn = RatMatrix::zeros(n, n);
        let k = &self.kappa - &(&self.mu * &self.lambda.transpose());
        let mut_t = self.mu.transpose();
        let lam_t = -&self.lambda.transpose();
        let h = RatMatrix::from_blocks(&[
            &[&il, &self.lambda, &k, &self.mu],
            &[&znl, &inn, &mut_t, &znn],
            &[&zll, &zln, &il, &zln],
            &[&znl, &znn, &lam_t, &inn],
        ])
        .expect("block sizes");
        let (a, b, c, d) = self.blocks();
        let s = RatMatrix::from_blocks(&[
            &[&il, &zln, &zll, &zln],
            &[&znl, &a, &znl, &b],
            &[&zll, &zln, &il, &zln],
            &[&znl, &c, &znl, &d],
        ])
        .expect("block sizes");
        &h * &s
    }

    /// `(λ, μ, κ)g ↦ (λ, −μ, −κ)εgε` with `ε = diag[1_n, −1_n]`.
    pub fn epsilon_conjugate(&self) -> Self {
        let (a, b, c, d) = self.blocks();
        Self::new_unchecked(self.lambda.clone(), -&self.mu, -&self.kappa, from_blocks(&a, &(-&b), &(-&c), &d))
    }

    /// Canonical byte encoding.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for m in [&self.lambda, &self.mu, &self.kappa, &self.g] {
            m.encode(&mut out);
        }
        out
    }
}

impl fmt::Display for JacobiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}){}", self.lambda, self.mu, self.kappa, self.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sjf_exact::rational::int;

    fn e11(lam: i64, mu: i64, kap: i64) -> JacobiElement {
        JacobiElement::heisenberg(
            RatMatrix::from_i64(1, 1, &[lam]),
            RatMatrix::from_i64(1, 1, &[mu]),
            RatMatrix::from_i64(1, 1, &[kap]),
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_product() {
        // (1,0,0)·(0,1,0): λ̃ = 0, μ̃ = 1, κ = λμ̃ + μ̃λ = 2.
        let x = e11(1, 0, 0).compose(&e11(0, 1, 0)).unwrap();
        assert_eq!(x, e11(1, 1, 2));
        let y = e11(0, 1, 0).compose(&e11(1, 0, 0)).unwrap();
        assert_eq!(y, e11(1, 1, 0));
    }

    #[test]
    fn identity_and_inverse() {
        let e = JacobiElement::identity(1, 1);
        let x = e11(1, 2, 3);
        assert_eq!(e.compose(&x).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        assert!(e.inverse().is_identity());
        let s = JacobiElement::symplectic(RatMatrix::from_i64(2, 2, &[0, -1, 1, 0]), 1).unwrap();
        assert_eq!(s.inverse().g(), &symplectic_inverse(s.g()));
    }

    #[test]
    fn embedding_of_kappa() {
        let x = e11(0, 0, 5);
        let m = x.embed_symplectic();
        let mut expected = RatMatrix::identity(4);
        expected.set(0, 2, int(5));
        assert_eq!(m, expected);
        assert!(is_symplectic(&m));
        assert!(JacobiElement::identity(2, 1).embed_symplectic().is_identity());
    }

    #[test]
    fn validation() {
        let bad = RatMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(JacobiElement::symplectic(bad, 1), Err(GroupError::NotSymplectic));
        let k = RatMatrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(
            JacobiElement::heisenberg(RatMatrix::zeros(2, 1), RatMatrix::zeros(2, 1), k),
            Err(GroupError::KappaNotSymmetric)
        );
        let a = JacobiElement::identity(1, 1);
        let b = JacobiElement::identity(2, 1);
        assert!(matches!(a.compose(&b), Err(GroupError::DimensionMismatch(_))));
    }
}
