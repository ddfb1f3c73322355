//! 3×3 hermitian matrices over a composition algebra under the Jordan
//! product `x ∘ y = (xy + yx)/2`.
//!
//! A hermitian matrix is stored by its free coordinates:
//!
//! ```text
//! | α   a   b |
//! | ā   β   c |      coordinates: α, β, γ, then a, b, c each expanded
//! | b̄   c̄   γ |      over the coefficient-algebra basis
//! ```
//!
//! so `dim J3(K) = 3 + 3·dim K`.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError, FiniteAlgebra, StructureTable};
use crate::linalg::{int, Rational, RationalMatrix};
use crate::random::random_coeffs;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error("matrices have different coefficient algebras")]
    Mismatch,
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Off-diagonal slots in coordinate order: (1,2), (1,3), (2,3).
const OFF_POSITIONS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn jordan_dim(k: &FiniteAlgebra) -> usize {
    3 + 3 * k.dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix3 {
    algebra: Arc<FiniteAlgebra>,
    diag: [Rational; 3],
    off: [AlgebraElement; 3],
}

impl HermitianMatrix3 {
    pub fn new(
        algebra: Arc<FiniteAlgebra>,
        diag: [Rational; 3],
        off: [AlgebraElement; 3],
    ) -> Result<Self, JordanError> {
        if off.iter().any(|x| **x.algebra() != *algebra) {
            return Err(JordanError::Mismatch);
        }
        Ok(Self { algebra, diag, off })
    }

    pub fn zero(algebra: Arc<FiniteAlgebra>) -> Self {
        let z = AlgebraElement::zero(Arc::clone(&algebra));
        Self {
            algebra,
            diag: [Rational::zero(), Rational::zero(), Rational::zero()],
            off: [z.clone(), z.clone(), z],
        }
    }

    pub fn diagonal(algebra: Arc<FiniteAlgebra>, diag: [Rational; 3]) -> Self {
        Self { diag, ..Self::zero(algebra) }
    }

    pub fn identity(algebra: Arc<FiniteAlgebra>) -> Self {
        Self::diagonal(algebra, [Rational::one(), Rational::one(), Rational::one()])
    }

    pub fn from_coords(algebra: Arc<FiniteAlgebra>, coords: &[Rational]) -> Result<Self, JordanError> {
        let n = algebra.dim();
        if coords.len() != 3 + 3 * n {
            return Err(JordanError::Length {
                expected: 3 + 3 * n,
                got: coords.len(),
            });
        }
        let block = |b: usize| AlgebraElement::new(Arc::clone(&algebra), coords[3 + b * n..3 + (b + 1) * n].to_vec());
        let off = [block(0)?, block(1)?, block(2)?];
        let diag = [coords[0].clone(), coords[1].clone(), coords[2].clone()];
        Ok(Self { algebra, diag, off })
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.diag
            .iter()
            .cloned()
            .chain(self.off.iter().flat_map(|x| x.coeffs().iter().cloned()))
            .collect()
    }

    pub fn coefficient_algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn diag(&self) -> &[Rational; 3] {
        &self.diag
    }

    pub fn off(&self) -> &[AlgebraElement; 3] {
        &self.off
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Zero::is_zero) && self.off.iter().all(AlgebraElement::is_zero)
    }

    /// Entry `(i, j)` of the full matrix.
    pub fn entry(&self, i: usize, j: usize) -> AlgebraElement {
        if i == j {
            return AlgebraElement::scalar(Arc::clone(&self.algebra), self.diag[i].clone());
        }
        let slot = OFF_POSITIONS
            .iter()
            .position(|&p| p == (i.min(j), i.max(j)))
            .expect("off-diagonal position");
        if i < j {
            self.off[slot].clone()
        } else {
            self.off[slot].conjugate()
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), JordanError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(JordanError::Mismatch)
        }
    }

    fn zip_coords(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self, JordanError> {
        self.check_same(other)?;
        let coords: Vec<Rational> = self.coords().iter().zip(other.coords().iter()).map(|(a, b)| f(a, b)).collect();
        Self::from_coords(Arc::clone(&self.algebra), &coords)
    }

    pub fn add(&self, other: &Self) -> Result<Self, JordanError> {
        self.zip_coords(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, JordanError> {
        self.zip_coords(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let coords: Vec<Rational> = self.coords().iter().map(|x| x * s).collect();
        Self::from_coords(Arc::clone(&self.algebra), &coords).expect("same shape")
    }

    /// `(xy + yx)/2`, each matrix product taken entrywise with the
    /// coefficient-algebra product (no associativity is assumed).
    pub fn jordan_product(&self, other: &Self) -> Result<Self, JordanError> {
        self.check_same(other)?;
        let x: Vec<Vec<AlgebraElement>> = (0..3).map(|i| (0..3).map(|j| self.entry(i, j)).collect()).collect();
        let y: Vec<Vec<AlgebraElement>> = (0..3).map(|i| (0..3).map(|j| other.entry(i, j)).collect()).collect();
        let half = Rational::new(1.into(), 2.into());
        let sym = |i: usize, k: usize| -> Result<AlgebraElement, JordanError> {
            let mut acc = AlgebraElement::zero(Arc::clone(&self.algebra));
            for j in 0..3 {
                acc = acc.add(&x[i][j].mul(&y[j][k])?)?;
                acc = acc.add(&y[i][j].mul(&x[j][k])?)?;
            }
            Ok(acc.scale(&half))
        };
        let mut diag = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, d) in diag.iter_mut().enumerate() {
            let z = sym(i, i)?;
            debug_assert!(z.is_scalar(), "diagonal of a symmetrized product is real");
            *d = z.real_part().clone();
        }
        let off = [sym(0, 1)?, sym(0, 2)?, sym(1, 2)?];
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            diag,
            off,
        })
    }

    pub fn square(&self) -> Self {
        self.jordan_product(self).expect("same algebra")
    }

    pub fn trace(&self) -> Rational {
        self.diag.iter().sum()
    }

    /// `x − (tr x / 3)·1`.
    pub fn traceless_projection(&self) -> Self {
        let shift = self.trace() / int(3);
        let mut out = self.clone();
        for d in out.diag.iter_mut() {
            *d -= &shift;
        }
        out
    }

    /// `x² ∘ (x ∘ y) − x ∘ (x² ∘ y)`, zero for every pair in a Jordan algebra.
    pub fn jordan_identity_defect(&self, y: &Self) -> Result<Self, JordanError> {
        let x2 = self.square();
        let left = x2.jordan_product(&self.jordan_product(y)?)?;
        let right = self.jordan_product(&x2.jordan_product(y)?)?;
        left.sub(&right)
    }

    pub fn random<R: Rng + ?Sized>(algebra: Arc<FiniteAlgebra>, rng: &mut R) -> Self {
        let n = 3 + 3 * algebra.dim();
        Self::from_coords(algebra, &random_coeffs(rng, n)).expect("correct length")
    }
}

/// `J3(K)` as a structure-constant algebra over the coordinate basis.
#[derive(Clone, Debug)]
pub struct JordanAlgebra {
    coefficient_algebra: Arc<FiniteAlgebra>,
    table: StructureTable,
}

impl JordanAlgebra {
    pub fn new(coefficient_algebra: Arc<FiniteAlgebra>) -> Self {
        let n = jordan_dim(&coefficient_algebra);
        let basis: Vec<HermitianMatrix3> = (0..n)
            .map(|k| {
                let mut coords = vec![Rational::zero(); n];
                coords[k] = Rational::one();
                HermitianMatrix3::from_coords(Arc::clone(&coefficient_algebra), &coords).expect("basis")
            })
            .collect();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                products.push(basis[i].jordan_product(&basis[j]).expect("same algebra").coords());
            }
        }
        Self {
            coefficient_algebra,
            table: StructureTable::from_products(n, products),
        }
    }

    pub fn coefficient_algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.coefficient_algebra
    }

    pub fn element(&self, coords: &[Rational]) -> Result<HermitianMatrix3, JordanError> {
        HermitianMatrix3::from_coords(Arc::clone(&self.coefficient_algebra), coords)
    }

    /// Gram matrix of the trace form `(x, y) ↦ tr(x ∘ y)` on the coordinate basis.
    pub fn trace_form(&self) -> RationalMatrix {
        let n = self.dim();
        let mut g = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let tr: Rational = self
                    .table
                    .product(i, j)
                    .iter()
                    .filter(|(k, _)| *k < 3)
                    .map(|(_, c)| c.clone())
                    .sum();
                g.set(i, j, tr);
            }
        }
        g
    }

    /// Sign-flip automorphism induced by conjugating with `diag(s0, s1, s2)`,
    /// `s_i = ±1`: the off-diagonal block at `(i, j)` is multiplied by `s_i s_j`.
    pub fn diagonal_conjugation(&self, signs: [i64; 3]) -> RationalMatrix {
        let n = self.coefficient_algebra.dim();
        let mut diag = vec![int(1); 3];
        for &(i, j) in &OFF_POSITIONS {
            diag.extend(std::iter::repeat(int(signs[i] * signs[j])).take(n));
        }
        RationalMatrix::diagonal(&diag)
    }
}

impl Algebra for JordanAlgebra {
    fn table(&self) -> &StructureTable {
        &self.table
    }

    fn unit(&self) -> Vec<Rational> {
        HermitianMatrix3::identity(Arc::clone(&self.coefficient_algebra)).coords()
    }

    fn name(&self) -> String {
        format!("J3({})", self.coefficient_algebra.name())
    }
}

/// Searches seeded random pairs for a violation of the Jordan identity.
pub fn find_jordan_identity_failure<R: Rng + ?Sized>(
    algebra: &Arc<FiniteAlgebra>,
    rng: &mut R,
    max_tries: usize,
) -> Option<(HermitianMatrix3, HermitianMatrix3)> {
    (0..max_tries).find_map(|_| {
        let x = HermitianMatrix3::random(Arc::clone(algebra), rng);
        let y = HermitianMatrix3::random(Arc::clone(algebra), rng);
        let defect = x.jordan_identity_defect(&y).ok()?;
        (!defect.is_zero()).then_some((x, y))
    })
}

/// Coordinates of a pair in J3(S) (sedenion entries) violating the Jordan
/// identity, found by [`find_jordan_identity_failure`] (seed 1, first draw)
/// and kept as a fixture.
pub const SEDENION_JORDAN_WITNESS: ([i64; 51], [i64; 51]) = (
    [
        -8, 2, -5, -4, 4, 4, 0, -4, -4, 8, -7, -3, 0, -2, -9, -6, -4, 4, -7, 2, 4, -5, 9, -7, 3, 6, 2, 8, -2, 0, 8,
        -3, -4, -5, -3, 8, 3, 3, 2, -8, -5, 2, -4, 3, -5, 1, -4, -2, -8, 7, 9,
    ],
    [
        -7, -9, 2, 9, 5, -1, -1, 3, 6, 6, -9, 7, 1, 7, 6, -1, -8, 1, -2, -7, -3, -4, 5, -5, 7, 7, 0, 8, 5, 8, 2, 1,
        7, 2, -4, -3, 3, -7, 3, 6, -4, -6, 5, -8, -6, -8, -1, 1, 3, 2, 1,
    ],
);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::leading_principal_minors;

    fn alg(dim: usize) -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::tower(dim))
    }

    #[test]
    fn dimensions() {
        assert_eq!(jordan_dim(&FiniteAlgebra::real()), 6);
        assert_eq!(jordan_dim(&FiniteAlgebra::complex()), 9);
        assert_eq!(jordan_dim(&FiniteAlgebra::quaternions()), 15);
        assert_eq!(jordan_dim(&FiniteAlgebra::octonions()), 27);
        assert_eq!(JordanAlgebra::new(alg(8)).dim(), 27);
    }

    #[test]
    fn identity_is_a_unit() {
        let o = alg(8);
        let mut rng = crate::random::seeded_rng(3);
        let x = HermitianMatrix3::random(o.clone(), &mut rng);
        let one = HermitianMatrix3::identity(o);
        assert_eq!(one.jordan_product(&x).unwrap(), x);
        assert_eq!(x.jordan_product(&one).unwrap(), x);
    }

    #[test]
    fn orthogonal_idempotents() {
        let o = alg(8);
        let e11 = HermitianMatrix3::diagonal(o.clone(), [int(1), int(0), int(0)]);
        let e22 = HermitianMatrix3::diagonal(o, [int(0), int(1), int(0)]);
        assert!(e11.jordan_product(&e22).unwrap().is_zero());
        assert_eq!(e11.square(), e11);
    }

    #[test]
    fn trace_and_traceless_projection() {
        let h = alg(4);
        let one = HermitianMatrix3::identity(h.clone());
        assert_eq!(one.trace(), int(3));
        assert!(one.traceless_projection().is_zero());
        let mut rng = crate::random::seeded_rng(9);
        let x = HermitianMatrix3::random(h, &mut rng);
        let p = x.traceless_projection();
        assert_eq!(p.trace(), int(0));
        assert_eq!(p.traceless_projection(), p);
    }

    #[test]
    fn structure_table_is_symmetric_with_unit() {
        for dim in [1, 2, 4, 8] {
            let j = JordanAlgebra::new(alg(dim));
            assert!(j.table().is_commutative());
            let unit = j.unit();
            for k in 0..j.dim() {
                let mut e = vec![int(0); j.dim()];
                e[k] = int(1);
                assert_eq!(j.table().mul(&unit, &e), e);
            }
        }
    }

    #[test]
    fn trace_form_is_positive_definite() {
        for dim in [1, 2, 4, 8] {
            let g = JordanAlgebra::new(alg(dim)).trace_form();
            assert!(g.is_symmetric());
            let minors = leading_principal_minors(&g).unwrap();
            assert_eq!(minors.len(), g.rows());
            assert!(minors.iter().all(|m| *m > int(0)), "dim {dim}");
        }
    }

    #[test]
    fn diagonal_conjugation_flips_first_row_blocks() {
        let j = JordanAlgebra::new(alg(8));
        let s = j.diagonal_conjugation([-1, 1, 1]);
        let signs: Vec<Rational> = (0..27).map(|i| s.get(i, i).clone()).collect();
        assert!(signs[..3].iter().all(|x| *x == int(1)));
        assert!(signs[3..19].iter().all(|x| *x == int(-1)));
        assert!(signs[19..].iter().all(|x| *x == int(1)));
    }

    #[test]
    fn mismatched_coefficient_algebras() {
        let x = HermitianMatrix3::identity(alg(4));
        let y = HermitianMatrix3::identity(alg(8));
        assert_eq!(x.jordan_product(&y), Err(JordanError::Mismatch));
        assert!(matches!(
            HermitianMatrix3::from_coords(alg(2), &[int(1)]),
            Err(JordanError::Length { expected: 9, got: 1 })
        ));
    }

    #[test]
    fn stored_sedenion_witness_breaks_jordan_identity() {
        let s = alg(16);
        let (xs, ys) = SEDENION_JORDAN_WITNESS;
        let to = |v: &[i64]| v.iter().map(|&c| int(c)).collect::<Vec<_>>();
        let x = HermitianMatrix3::from_coords(s.clone(), &to(&xs)).unwrap();
        let y = HermitianMatrix3::from_coords(s, &to(&ys)).unwrap();
        assert!(!x.jordan_identity_defect(&y).unwrap().is_zero());
    }
}
