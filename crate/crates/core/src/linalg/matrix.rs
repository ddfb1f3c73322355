use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{clear_denominators, LinalgError, Rational};

/// Exact rational matrix.
///
/// Rows are stored as column-sorted lists of nonzero entries; explicit zeros
/// are never stored, so structural equality is value equality. Derivation
/// constraint systems are mostly zeros, which is what this layout is for.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Rational::one(); n])
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut it = entries.into_iter();
        let data = (0..rows)
            .map(|_| {
                (0..cols)
                    .zip(it.by_ref())
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from dense rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Self::from_vec(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from `(column, value)` lists. Columns may repeat
    /// (values are summed) and appear in any order.
    pub fn from_sparse_rows(cols: usize, rows: Vec<Vec<(usize, Rational)>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len());
        for mut row in rows {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
            for (c, v) in row {
                if c >= cols {
                    return Err(LinalgError::Dimension(format!("column {c} out of range {cols}")));
                }
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            data.push(merged);
        }
        Ok(Self {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let data = diag
            .iter()
            .enumerate()
            .map(|(i, d)| if d.is_zero() { Vec::new() } else { vec![(i, d.clone())] })
            .collect();
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        let row = &self.data[r];
        row.binary_search_by_key(&c, |(k, _)| *k)
            .map_or_else(|_| Rational::zero(), |i| row[i].1.clone())
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(c < self.cols, "column {c} out of range");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(k, _)| *k) {
            Ok(i) if value.is_zero() => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = value,
            Err(_) if value.is_zero() => {}
            Err(i) => row.insert(i, (c, value)),
        }
    }

    /// Nonzero entries of row `r`, sorted by column.
    pub fn row_entries(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn dense_row(&self, r: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols];
        for (c, v) in &self.data[r] {
            out[*c] = v.clone();
        }
        out
    }

    /// Row-major entries, zeros included.
    pub fn to_dense(&self) -> Vec<Rational> {
        (0..self.rows).flat_map(|r| self.dense_row(r)).collect()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    /// All nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub(crate) fn check_nonempty(&self) -> Result<(), LinalgError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(LinalgError::Dimension(format!(
                "empty {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, c, v) in self.nonzeros() {
            data[c].push((r, v.clone()));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        let mut acc = vec![Rational::zero(); other.cols];
        let mut touched = vec![false; other.cols];
        for row in &self.data {
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    acc[*c] += a * b;
                    touched[*c] = true;
                }
            }
            let mut out_row = Vec::new();
            for c in 0..other.cols {
                if touched[c] {
                    touched[c] = false;
                    let v = std::mem::replace(&mut acc[c], Rational::zero());
                    if !v.is_zero() {
                        out_row.push((c, v));
                    }
                }
            }
            data.push(out_row);
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| !v[*c].is_zero())
                    .map(|(c, a)| a * &v[*c])
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.combine(other, &-Rational::one())
    }

    /// `self + s·other`.
    pub fn combine(&self, other: &Self, s: &Rational) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rows = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                a.iter()
                    .cloned()
                    .chain(b.iter().map(|(c, v)| (*c, v * s)))
                    .collect()
            })
            .collect();
        Self::from_sparse_rows(self.cols, rows)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                .collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Rows scaled to integers (each row by the lcm of its denominators).
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.integer_rows_sparse()
            .into_iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for (c, v) in row {
                    dense[c] = v;
                }
                dense
            })
            .collect()
    }

    /// Like [`Self::integer_rows`] but keeps only nonzero entries.
    pub(crate) fn integer_rows_sparse(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.data
            .iter()
            .map(|row| {
                let values: Vec<Rational> = row.iter().map(|(_, v)| v.clone()).collect();
                let (ints, _) = clear_denominators(&values);
                row.iter().map(|(c, _)| *c).zip(ints).collect()
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.dense_row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
