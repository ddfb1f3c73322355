//! Fraction-free elimination over the integers.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{clear_denominators, LinalgError, Rational, RationalMatrix};
use crate::cancel::CancelToken;

/// Row echelon form: `rows[i]` has its first nonzero entry at `pivots[i]`,
/// with `pivots` strictly increasing.
pub(crate) struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pub(crate) pivots: Vec<usize>,
    cols: usize,
}

/// Echelon form in which every pivot column is zero outside its pivot row.
pub(crate) struct Reduced(Echelon);

/// Divides a row by the gcd of its entries and makes the leading entry positive.
fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let negate = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if negate { -g } else { g };
    if !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `target <- (p/g) target - (a/g) pivot_row` where `a = target[col]`,
/// `p = pivot_row[col]`, then content-normalizes `target`.
fn eliminate(target: &mut [BigInt], pivot_row: &[BigInt], col: usize) {
    let a = target[col].clone();
    if a.is_zero() {
        return;
    }
    let p = &pivot_row[col];
    let g = a.gcd(p);
    let (ps, as_) = (p / &g, &a / &g);
    for c in col..target.len() {
        let pv = &pivot_row[c];
        if pv.is_zero() {
            if !target[c].is_zero() && !ps.is_one() {
                target[c] = &target[c] * &ps;
            }
        } else {
            target[c] = &target[c] * &ps - &as_ * pv;
        }
    }
    if !ps.is_one() {
        // Entries left of `col` are zero in echelon use, but not during back
        // substitution; they must be scaled too.
        for c in 0..col {
            if !target[c].is_zero() {
                target[c] = &target[c] * &ps;
            }
        }
    }
    normalize(target);
}

/// Forward elimination. Zero rows are skipped and duplicate rows (after
/// content normalization) are dropped before elimination starts. The pivot
/// in each column is the entry of smallest bit length, ties to the lowest row.
pub(crate) fn echelon(
    input: &[Vec<BigInt>],
    cols: usize,
    cancel: &CancelToken,
) -> Result<Echelon, LinalgError> {
    let mut seen = HashSet::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for row in input {
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut row = row.clone();
        normalize(&mut row);
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }

    let mut pivots = Vec::new();
    let mut cur = 0;
    for col in 0..cols {
        if cur == rows.len() {
            break;
        }
        cancel.check().map_err(|_| LinalgError::Cancelled)?;
        let best = rows[cur..]
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(i, r)| (r[col].bits(), *i))
            .map(|(i, _)| i + cur);
        let Some(best) = best else { continue };
        rows.swap(cur, best);
        let (head, tail) = rows.split_at_mut(cur + 1);
        let pivot_row = &head[cur];
        for row in tail.iter_mut() {
            eliminate(row, pivot_row, col);
        }
        pivots.push(col);
        cur += 1;
    }
    rows.truncate(cur);
    Ok(Echelon { rows, pivots, cols })
}

/// Clears every pivot column above its pivot.
pub(crate) fn back_substitute(mut ech: Echelon, cancel: &CancelToken) -> Result<Reduced, LinalgError> {
    for i in (0..ech.rows.len()).rev() {
        cancel.check().map_err(|_| LinalgError::Cancelled)?;
        let col = ech.pivots[i];
        let (head, tail) = ech.rows.split_at_mut(i);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            eliminate(row, pivot_row, col);
        }
    }
    Ok(Reduced(ech))
}

impl Reduced {
    /// One nullspace vector per free column `f`: 1 at `f`, 0 at the other
    /// free columns.
    pub(crate) fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = &self.0;
        let mut is_pivot = vec![false; ech.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..ech.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); ech.cols];
                v[f] = Rational::one();
                for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                    if !row[f].is_zero() {
                        v[pc] = -Rational::new(row[f].clone(), row[pc].clone());
                    }
                }
                v
            })
            .collect()
    }

    /// Rows divided by their pivots.
    pub(crate) fn into_rational_rows(self) -> Vec<Vec<Rational>> {
        let ech = self.0;
        ech.rows
            .into_iter()
            .zip(ech.pivots)
            .map(|(row, pc)| {
                let p = row[pc].clone();
                row.into_iter()
                    .map(|x| {
                        if x.is_zero() {
                            Rational::zero()
                        } else {
                            Rational::new(x, p.clone())
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Reduced row echelon form of a set of row vectors, zero rows dropped.
///
/// The result is the unique RREF basis of the span, so it serves as a
/// canonical basis for a subspace.
pub fn rref(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let ints: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v).0).collect();
    let never = CancelToken::never();
    let ech = echelon(&ints, cols, &never).expect("never cancelled");
    back_substitute(ech, &never)
        .expect("never cancelled")
        .into_rational_rows()
}

/// Leading principal minors `det(m[..k, ..k])` for `k = 1..=n`, computed by
/// Bareiss elimination without pivoting.
///
/// Stops after the first zero minor, since the elimination cannot continue
/// past it; a shorter result therefore ends in zero.
pub fn leading_principal_minors(m: &RationalMatrix) -> Result<Vec<Rational>, LinalgError> {
    m.check_nonempty()?;
    if !m.is_square() {
        return Err(LinalgError::Dimension(format!(
            "minors of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|r| m.dense_row(r)).collect();
    let mut prev = Rational::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    Ok(minors)
}
