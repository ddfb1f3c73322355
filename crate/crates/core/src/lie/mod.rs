//! Lie algebras of derivations: bracket structure constants, Killing forms,
//! generic ranks and Cartan decompositions under involutions.

mod cartan;
mod derivation;
mod killing;

use num_traits::Zero;
use thiserror::Error;

use crate::cancel::CancelToken;
use crate::linalg::{self, LinalgError, Rational, RationalMatrix};

pub use cartan::{cartan_split, induced_involution, CartanPair, Involution};
pub use derivation::{derivation_algebra, derivation_constraints, is_derivation, MAX_DERIVATION_DIM};
pub use killing::{generic_rank, is_negative_definite, killing_form, DEFAULT_RANK_TRIALS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Linalg(LinalgError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("basis matrices are linearly dependent")]
    LinearlyDependent,
    #[error("bracket of basis elements {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("not a derivation: {0}")]
    NotDerivation(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("algebra dimension {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("computation cancelled")]
    Cancelled,
}

impl From<LinalgError> for LieError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Cancelled => LieError::Cancelled,
            other => LieError::Linalg(other),
        }
    }
}

/// A Lie algebra of `n × n` matrices with a canonical basis.
///
/// The basis is in reduced echelon form when the matrices are flattened
/// row-major: basis element `a` has entry 1 at flat position `lead[a]`, where
/// every other basis element vanishes. Coordinates of any element of the span
/// can therefore be read off at the lead positions.
#[derive(Clone, Debug)]
pub struct LieAlgebraBasis {
    ambient_dim: usize,
    basis: Vec<RationalMatrix>,
    lead: Vec<usize>,
    /// `[D_a, D_b]` in basis coordinates, sparse, indexed `a * dim + b`.
    brackets: Vec<Vec<(usize, Rational)>>,
}

/// Matrix commutator `xy − yx`.
pub fn bracket(x: &RationalMatrix, y: &RationalMatrix) -> Result<RationalMatrix, LieError> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(LieError::Dimension(format!(
            "{}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(x.commutator(y)?)
}

fn sparse(v: Vec<Rational>) -> Vec<(usize, Rational)> {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

impl LieAlgebraBasis {
    /// Spans the given matrices, replacing them by the canonical basis of
    /// their span. Fails if they are dependent or the span is not closed
    /// under the bracket.
    pub fn from_matrices(ambient_dim: usize, matrices: &[RationalMatrix]) -> Result<Self, LieError> {
        if matrices.iter().any(|m| m.rows() != ambient_dim || m.cols() != ambient_dim) {
            return Err(LieError::Dimension(format!("expected {ambient_dim}x{ambient_dim} matrices")));
        }
        let flat: Vec<Vec<Rational>> = matrices.iter().map(RationalMatrix::to_dense).collect();
        let canonical = linalg::rref(&flat);
        if canonical.len() != matrices.len() {
            return Err(LieError::LinearlyDependent);
        }
        Self::from_canonical(ambient_dim, canonical, &CancelToken::never())
    }

    /// Builds from flattened vectors already in reduced row echelon form.
    pub(crate) fn from_canonical(
        ambient_dim: usize,
        vectors: Vec<Vec<Rational>>,
        cancel: &CancelToken,
    ) -> Result<Self, LieError> {
        let n = ambient_dim;
        let lead: Vec<usize> = vectors
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis vector"))
            .collect();
        let basis: Vec<RationalMatrix> = vectors
            .into_iter()
            .map(|v| RationalMatrix::from_vec(n, n, v))
            .collect::<Result<_, _>>()?;
        let mut l = Self {
            ambient_dim,
            basis,
            lead,
            brackets: Vec::new(),
        };
        let d = l.dim();
        let mut brackets = vec![Vec::new(); d * d];
        for a in 0..d {
            cancel.check().map_err(|_| LieError::Cancelled)?;
            for b in a + 1..d {
                let c = l.basis[a].commutator(&l.basis[b])?;
                let coords = l.coordinates(&c).map_err(|_| LieError::NotClosed(a, b))?;
                brackets[b * d + a] = sparse(coords.iter().map(|x| -x).collect());
                brackets[a * d + b] = sparse(coords);
            }
        }
        l.brackets = brackets;
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[RationalMatrix] {
        &self.basis
    }

    /// Nonzero structure constants of `[D_a, D_b]`.
    pub fn structure(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.brackets[a * self.dim() + b]
    }

    /// `f[a][b][c]` with `[D_a, D_b] = Σ_c f[a][b][c] D_c`.
    pub fn bracket_constant(&self, a: usize, b: usize, c: usize) -> Rational {
        self.structure(a, b)
            .iter()
            .find(|(k, _)| *k == c)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    /// Coordinates of `m` in the basis; errors if `m` is not in the span.
    pub fn coordinates(&self, m: &RationalMatrix) -> Result<Vec<Rational>, LieError> {
        let n = self.ambient_dim;
        if m.rows() != n || m.cols() != n {
            return Err(LieError::Dimension(format!("expected a {n}x{n} matrix")));
        }
        let coords: Vec<Rational> = self.lead.iter().map(|&p| m.get(p / n, p % n)).collect();
        if self.element(&coords)? != *m {
            return Err(LieError::NotClosed(usize::MAX, usize::MAX));
        }
        Ok(coords)
    }

    /// The matrix `Σ_a coords[a] D_a`.
    pub fn element(&self, coords: &[Rational]) -> Result<RationalMatrix, LieError> {
        if coords.len() != self.dim() {
            return Err(LieError::Dimension(format!(
                "{} coordinates for a {}-dimensional algebra",
                coords.len(),
                self.dim()
            )));
        }
        let n = self.ambient_dim;
        let mut acc = RationalMatrix::zeros(n, n);
        for (c, d) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.combine(d, c)?;
            }
        }
        Ok(acc)
    }

    /// Bracket of two elements given in coordinates.
    pub fn bracket_coords(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let uv = ua * vb;
                for (c, f) in self.structure(a, b) {
                    out[*c] += &uv * f;
                }
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, ·]` in the basis, for `x` given in coordinates.
    pub fn ad(&self, x: &[Rational]) -> RationalMatrix {
        let d = self.dim();
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for b in 0..d {
                for (c, f) in self.structure(a, b) {
                    rows[*c].push((b, xa * f));
                }
            }
        }
        RationalMatrix::from_sparse_rows(d, rows).expect("columns in range")
    }

    /// `ad` of the basis element `a`.
    pub fn ad_basis(&self, a: usize) -> RationalMatrix {
        let mut e = vec![Rational::zero(); self.dim()];
        e[a] = Rational::from_integer(1.into());
        self.ad(&e)
    }
}
