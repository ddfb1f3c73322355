use num_traits::Zero;

use super::{LieAlgebraBasis, LieError};
use crate::algebra::{Algebra, StructureTable};
use crate::cancel::CancelToken;
use crate::linalg::{self, Rational, RationalMatrix};

/// Largest algebra dimension accepted by [`derivation_algebra`].
pub const MAX_DERIVATION_DIM: usize = 32;

/// The linear system whose nullspace is the derivation algebra.
///
/// Unknowns are the entries `d[a][b]` of `D` (with `D e_b = Σ_a d[a][b] e_a`)
/// in row-major order. Each basis pair `(i, j)` contributes `n` rows, the
/// components of `D(e_i e_j) − D(e_i) e_j − e_i D(e_j)`. For a commutative
/// table the pair `(j, i)` repeats the equations of `(i, j)`, so only
/// `i ≤ j` is assembled.
pub fn derivation_constraints<A: Algebra + ?Sized>(a: &A) -> RationalMatrix {
    let t = a.table();
    let n = t.dim();
    let commutative = t.is_commutative();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in if commutative { i } else { 0 }..n {
            let mut block: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
            // D(e_i e_j): Σ_m c[i][j][m] d[k][m]
            for (m, c) in t.product(i, j) {
                for (k, row) in block.iter_mut().enumerate() {
                    row.push((k * n + m, c.clone()));
                }
            }
            for r in 0..n {
                // D(e_i) e_j: Σ_r d[r][i] c[r][j][k]
                for (k, c) in t.product(r, j) {
                    block[*k].push((r * n + i, -c));
                }
                // e_i D(e_j): Σ_r d[r][j] c[i][r][k]
                for (k, c) in t.product(i, r) {
                    block[*k].push((r * n + j, -c));
                }
            }
            rows.extend(block);
        }
    }
    RationalMatrix::from_sparse_rows(n * n, rows).expect("columns in range")
}

/// Columns of `d` as dense vectors: `columns[i] = D e_i`.
fn images(d: &RationalMatrix) -> Vec<Vec<Rational>> {
    let t = d.transpose();
    (0..t.rows()).map(|i| t.dense_row(i)).collect()
}

/// Checks the Leibniz rule on every ordered basis pair.
pub fn is_derivation(t: &StructureTable, d: &RationalMatrix) -> bool {
    let n = t.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let img = images(d);
    let unit_vec = |k: usize| {
        let mut v = vec![Rational::zero(); n];
        v[k] = Rational::from_integer(1.into());
        v
    };
    let basis: Vec<Vec<Rational>> = (0..n).map(unit_vec).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![Rational::zero(); n];
            for (m, c) in t.product(i, j) {
                for (l, v) in lhs.iter_mut().zip(&img[*m]) {
                    if !v.is_zero() {
                        *l += c * v;
                    }
                }
            }
            let r1 = t.mul(&img[i], &basis[j]);
            let r2 = t.mul(&basis[i], &img[j]);
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (a, b))| *l != a + b) {
                return false;
            }
        }
    }
    true
}

/// All derivations of `a`, as a Lie algebra with canonical basis.
///
/// Every basis element is re-checked against the Leibniz rule on all ordered
/// basis pairs and shown to kill the unit before it is returned.
pub fn derivation_algebra<A: Algebra + ?Sized>(
    a: &A,
    cancel: &CancelToken,
) -> Result<LieAlgebraBasis, LieError> {
    let n = a.dim();
    if n > MAX_DERIVATION_DIM {
        return Err(LieError::TooLarge(n));
    }
    let system = derivation_constraints(a);
    let null = linalg::nullspace_basis_with_cancel(&system, cancel)?;
    let unit = a.unit();
    for (idx, v) in null.iter().enumerate() {
        cancel.check().map_err(|_| LieError::Cancelled)?;
        let d = RationalMatrix::from_vec(n, n, v.clone())?;
        if !is_derivation(a.table(), &d) {
            return Err(LieError::NotDerivation(format!("basis element {idx} of Der({})", a.name())));
        }
        if d.mul_vec(&unit)?.iter().any(|x| !x.is_zero()) {
            return Err(LieError::NotDerivation(format!(
                "basis element {idx} of Der({}) does not kill the unit",
                a.name()
            )));
        }
    }
    LieAlgebraBasis::from_canonical(n, null, cancel)
}
