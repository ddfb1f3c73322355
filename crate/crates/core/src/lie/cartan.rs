use num_traits::{One, Zero};

use super::{LieAlgebraBasis, LieError};
use crate::algebra::Algebra;
use crate::linalg::{self, Rational, RationalMatrix};
use crate::random::{random_coeffs, seeded_rng};

/// An order-two automorphism of a structure-constant algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    matrix: RationalMatrix,
}

impl Involution {
    /// Checks `σ² = 1` and `σ(e_i e_j) = σ(e_i) σ(e_j)` for all basis pairs.
    pub fn new<A: Algebra + ?Sized>(algebra: &A, matrix: RationalMatrix) -> Result<Self, LieError> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(LieError::InvalidInvolution(format!(
                "{}x{} matrix on a {n}-dimensional algebra",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.mul(&matrix)? != RationalMatrix::identity(n) {
            return Err(LieError::InvalidInvolution("σ² ≠ 1".into()));
        }
        if !is_automorphism(algebra, &matrix) {
            return Err(LieError::InvalidInvolution(format!("not an automorphism of {}", algebra.name())));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }
}

fn is_automorphism<A: Algebra + ?Sized>(algebra: &A, sigma: &RationalMatrix) -> bool {
    let t = algebra.table();
    let n = t.dim();
    let st = sigma.transpose();
    let img: Vec<Vec<Rational>> = (0..n).map(|i| st.dense_row(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![Rational::zero(); n];
            for (k, c) in t.product(i, j) {
                for (l, v) in lhs.iter_mut().zip(&img[*k]) {
                    *l += c * v;
                }
            }
            if lhs != t.mul(&img[i], &img[j]) {
                return false;
            }
        }
    }
    true
}

/// The map `D ↦ σ D σ⁻¹` on the derivation algebra `l` of `algebra`,
/// as a matrix on the basis coordinates of `l`.
pub fn induced_involution<A: Algebra + ?Sized>(
    algebra: &A,
    sigma: &Involution,
    l: &LieAlgebraBasis,
) -> Result<RationalMatrix, LieError> {
    let n = algebra.dim();
    if l.ambient_dim() != n || sigma.matrix.rows() != n {
        return Err(LieError::Dimension(format!(
            "algebra of dimension {n}, derivations on {}, involution on {}",
            l.ambient_dim(),
            sigma.matrix.rows()
        )));
    }
    if !is_automorphism(algebra, &sigma.matrix) {
        return Err(LieError::InvalidInvolution(format!("not an automorphism of {}", algebra.name())));
    }
    let d = l.dim();
    let mut columns = Vec::with_capacity(d);
    for (a, basis) in l.basis().iter().enumerate() {
        // σ⁻¹ = σ
        let conj = sigma.matrix.mul(basis)?.mul(&sigma.matrix)?;
        let coords = l
            .coordinates(&conj)
            .map_err(|_| LieError::InvalidInvolution(format!("σ D_{a} σ⁻¹ is not a derivation")))?;
        columns.push(coords);
    }
    let theta = RationalMatrix::from_rows(columns)?.transpose();
    if d > 0 && theta.mul(&theta)? != RationalMatrix::identity(d) {
        return Err(LieError::InvalidInvolution("induced map does not square to 1".into()));
    }
    Ok(if d == 0 { RationalMatrix::zeros(0, 0) } else { theta })
}

/// A decomposition `l = k ⊕ p` into the ±1 eigenspaces of an involutive
/// automorphism, with `[k,k] ⊆ k`, `[k,p] ⊆ p` and `[p,p] ⊆ k` verified.
#[derive(Clone, Debug)]
pub struct CartanPair {
    /// Basis of the fixed subspace, in coordinates of the ambient Lie algebra.
    pub k_basis: Vec<Vec<Rational>>,
    /// Basis of the anti-fixed subspace.
    pub p_basis: Vec<Vec<Rational>>,
    /// Dimension of the span of `[p, p]`.
    pub pp_span_dim: usize,
}

impl CartanPair {
    pub fn dims(&self) -> (usize, usize) {
        (self.k_basis.len(), self.p_basis.len())
    }

    /// Whether `[p, p]` is all of `k`.
    pub fn pp_spans_k(&self) -> bool {
        self.pp_span_dim == self.k_basis.len()
    }

    /// Rank of the symmetric space: the minimum over seeded random `x ∈ p` of
    /// `dim {y ∈ p : [x, y] = 0}`, which for generic `x` is the dimension of a
    /// maximal abelian subspace of `p`.
    pub fn rank(&self, l: &LieAlgebraBasis, trials: usize, seed: u64) -> Result<usize, LieError> {
        let dp = self.p_basis.len();
        if dp == 0 {
            return Ok(0);
        }
        let mut rng = seeded_rng(seed);
        let mut best = dp;
        for _ in 0..trials.max(1) {
            let c = random_coeffs(&mut rng, dp);
            let x = combination(&c, &self.p_basis, l.dim());
            let cols: Vec<Vec<Rational>> = self.p_basis.iter().map(|y| l.bracket_coords(&x, y)).collect();
            let m = RationalMatrix::from_rows(cols)?.transpose();
            best = best.min(dp - linalg::rank(&m)?);
        }
        Ok(best)
    }
}

fn combination(coeffs: &[Rational], vectors: &[Vec<Rational>], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

fn eigenspace(theta: &RationalMatrix, eigenvalue: i64) -> Result<Vec<Vec<Rational>>, LieError> {
    let shifted = theta.sub(&RationalMatrix::identity(theta.rows()).scale(&linalg::int(eigenvalue)))?;
    Ok(linalg::nullspace_basis(&shifted)?)
}

/// Splits `l` into the fixed and anti-fixed subspaces of `theta`.
pub fn cartan_split(l: &LieAlgebraBasis, theta: &RationalMatrix) -> Result<CartanPair, LieError> {
    let d = l.dim();
    if theta.rows() != d || theta.cols() != d {
        return Err(LieError::Dimension(format!(
            "{}x{} map on a {d}-dimensional Lie algebra",
            theta.rows(),
            theta.cols()
        )));
    }
    if d == 0 {
        return Ok(CartanPair {
            k_basis: Vec::new(),
            p_basis: Vec::new(),
            pp_span_dim: 0,
        });
    }
    if theta.mul(theta)? != RationalMatrix::identity(d) {
        return Err(LieError::InvalidInvolution("θ² ≠ 1".into()));
    }
    let tt = theta.transpose();
    let images: Vec<Vec<Rational>> = (0..d).map(|a| tt.dense_row(a)).collect();
    for a in 0..d {
        for b in a + 1..d {
            let lhs = theta.mul_vec(&l.bracket_coords(&unit(d, a), &unit(d, b)))?;
            if lhs != l.bracket_coords(&images[a], &images[b]) {
                return Err(LieError::InvalidInvolution(format!(
                    "θ does not preserve the bracket of basis elements {a} and {b}"
                )));
            }
        }
    }

    let k_basis = eigenspace(theta, 1)?;
    let p_basis = eigenspace(theta, -1)?;
    if k_basis.len() + p_basis.len() != d {
        return Err(LieError::InvalidInvolution("eigenspaces do not span".into()));
    }

    let in_space = |w: &[Rational], sign: i64| -> Result<bool, LieError> {
        let tw = theta.mul_vec(w)?;
        Ok(tw.iter().zip(w).all(|(a, b)| *a == b * linalg::int(sign)))
    };
    let check = |xs: &[Vec<Rational>], ys: &[Vec<Rational>], sign: i64, what: &str| -> Result<Vec<Vec<Rational>>, LieError> {
        let mut out = Vec::new();
        for (i, x) in xs.iter().enumerate() {
            for y in &ys[if std::ptr::eq(xs, ys) { i + 1 } else { 0 }..] {
                let w = l.bracket_coords(x, y);
                if !in_space(&w, sign)? {
                    return Err(LieError::InvalidInvolution(format!("{what} fails")));
                }
                out.push(w);
            }
        }
        Ok(out)
    };
    check(&k_basis, &k_basis, 1, "[k,k] ⊆ k")?;
    check(&k_basis, &p_basis, -1, "[k,p] ⊆ p")?;
    let pp = check(&p_basis, &p_basis, 1, "[p,p] ⊆ k")?;
    let pp_span_dim = linalg::rref(&pp).len();
    Ok(CartanPair {
        k_basis,
        p_basis,
        pp_span_dim,
    })
}

fn unit(d: usize, a: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[a] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteAlgebra;
    use crate::cancel::CancelToken;
    use crate::lie::derivation_algebra;
    use crate::linalg::int;

    fn quaternion_sigma() -> RationalMatrix {
        // Fixes span{e0, e1}, negates span{e2, e3}: conjugation by e1.
        RationalMatrix::diagonal(&[int(1), int(1), int(-1), int(-1)])
    }

    #[test]
    fn identity_involution_gives_trivial_split() {
        let h = FiniteAlgebra::quaternions();
        let l = derivation_algebra(&h, &CancelToken::never()).unwrap();
        let sigma = Involution::new(&h, RationalMatrix::identity(4)).unwrap();
        let theta = induced_involution(&h, &sigma, &l).unwrap();
        assert_eq!(theta, RationalMatrix::identity(3));
        let pair = cartan_split(&l, &theta).unwrap();
        assert_eq!(pair.dims(), (3, 0));
    }

    #[test]
    fn so3_splits_into_so2_and_sphere() {
        let h = FiniteAlgebra::quaternions();
        let l = derivation_algebra(&h, &CancelToken::never()).unwrap();
        let sigma = Involution::new(&h, quaternion_sigma()).unwrap();
        let theta = induced_involution(&h, &sigma, &l).unwrap();
        let pair = cartan_split(&l, &theta).unwrap();
        assert_eq!(pair.dims(), (1, 2));
        assert!(pair.pp_spans_k());
        assert_eq!(pair.rank(&l, 5, 3).unwrap(), 1);
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let h = FiniteAlgebra::quaternions();
        let bad = RationalMatrix::diagonal(&[int(1), int(-1), int(-1), int(-1)]);
        assert!(matches!(Involution::new(&h, bad), Err(LieError::InvalidInvolution(_))));
        let not_order_two = RationalMatrix::diagonal(&[int(1), int(2), int(1), int(1)]);
        assert!(matches!(Involution::new(&h, not_order_two), Err(LieError::InvalidInvolution(_))));
    }

    #[test]
    fn theta_must_be_involutive_and_a_lie_automorphism() {
        let h = FiniteAlgebra::quaternions();
        let l = derivation_algebra(&h, &CancelToken::never()).unwrap();
        assert!(matches!(
            cartan_split(&l, &RationalMatrix::identity(3).scale(&int(2))),
            Err(LieError::InvalidInvolution(_))
        ));
        // -1 squares to 1 but does not preserve brackets.
        assert!(matches!(
            cartan_split(&l, &RationalMatrix::identity(3).scale(&int(-1))),
            Err(LieError::InvalidInvolution(_))
        ));
    }
}
