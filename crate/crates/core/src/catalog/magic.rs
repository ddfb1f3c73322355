//! The 4×4 magic squares of Lie algebras indexed by pairs of normed
//! division algebras.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::groups::label_dim;
use super::CatalogError;
use crate::algebra::FiniteAlgebra;
use crate::cancel::CancelToken;
use crate::jordan::JordanAlgebra;
use crate::lie::{derivation_algebra, LieError};

pub const DIVISION_LABELS: [&str; 4] = ["R", "C", "H", "O"];
const DIVISION_DIMS: [usize; 4] = [1, 2, 4, 8];

/// Derivation algebra dimensions of R, C, H, O and of the four `J3(K)`,
/// computed by the Lie engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationDims {
    pub composition: [usize; 4],
    pub jordan: [usize; 4],
}

impl DerivationDims {
    pub fn compute(cancel: &CancelToken) -> Result<Self, LieError> {
        let mut composition = [0; 4];
        let mut jordan = [0; 4];
        for (i, &d) in DIVISION_DIMS.iter().enumerate() {
            let k = Arc::new(FiniteAlgebra::tower(d));
            composition[i] = derivation_algebra(k.as_ref(), cancel)?.dim();
            jordan[i] = derivation_algebra(&JordanAlgebra::new(k), cancel)?.dim();
        }
        Ok(Self { composition, jordan })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicCell {
    pub row: String,
    pub col: String,
    pub dim: u64,
    /// Group whose Lie algebra sits in this cell.
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicSquare {
    pub level: u8,
    pub cells: Vec<Vec<MagicCell>>,
}

impl MagicSquare {
    pub fn dims(&self) -> Vec<Vec<u64>> {
        self.cells.iter().map(|row| row.iter().map(|c| c.dim).collect()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dims();
        (0..d.len()).all(|i| (0..d.len()).all(|j| d[i][j] == d[j][i]))
    }

    /// Cells whose label does not resolve to the cell's dimension.
    pub fn label_mismatches(&self) -> Result<Vec<String>, CatalogError> {
        let mut out = Vec::new();
        for cell in self.cells.iter().flatten() {
            let resolved = label_dim(&cell.label)?;
            if resolved != cell.dim {
                out.push(format!("({}, {}) {}: {} ≠ {}", cell.row, cell.col, cell.label, resolved, cell.dim));
            }
        }
        Ok(out)
    }
}

fn square(level: u8, dims: [[u64; 4]; 4], labels: [[&str; 4]; 4], note: impl Fn(usize, usize) -> Option<String>) -> MagicSquare {
    let cells = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| MagicCell {
                    row: DIVISION_LABELS[i].into(),
                    col: DIVISION_LABELS[j].into(),
                    dim: dims[i][j],
                    label: labels[i][j].into(),
                    note: note(i, j),
                })
                .collect()
        })
        .collect();
    MagicSquare { level, cells }
}

/// The level-2 square, whose corner is `Spin(16)`.
pub fn magic_square_level2() -> MagicSquare {
    let dims = [[1, 4, 10, 36], [4, 8, 16, 45], [10, 16, 28, 66], [36, 45, 66, 120]];
    let labels = [
        ["O(2)", "U(2)", "Sq(2)", "Spin(9)"],
        ["U(2)", "U(2)^2", "U(4)", "Spin(10)"],
        ["Sq(2)", "U(4)", "O(8)", "Spin(12)"],
        ["Spin(9)", "Spin(10)", "Spin(12)", "Spin(16)"],
    ];
    square(2, dims, labels, |_, _| None)
}

/// The level-3 square from the Tits construction
/// `dim = dim Der(A) + dim Der(J3(B)) + (dim A − 1)(dim J3(B) − 1)`
/// with `A` indexing rows and `B` columns.
pub fn magic_square_level3(der: &DerivationDims) -> MagicSquare {
    let mut dims = [[0u64; 4]; 4];
    for (i, &a) in DIVISION_DIMS.iter().enumerate() {
        for (j, &b) in DIVISION_DIMS.iter().enumerate() {
            let j3 = 3 + 3 * b;
            let total = der.composition[i] + der.jordan[j] + (a - 1) * (j3 - 1);
            dims[i][j] = total as u64;
        }
    }
    let labels = [
        ["SO(3)", "SU(3)", "Sq(3)", "F4"],
        ["SU(3)", "SU(3)×SU(3)", "SU(6)", "E6"],
        ["Sq(3)", "SU(6)", "SO(12)", "E7"],
        ["F4", "E6", "E7", "E8"],
    ];
    // The traditional table writes unitary groups; their Lie algebras in the
    // square have no centre.
    let note = |i: usize, j: usize| match labels[i][j] {
        "SU(3)" => Some("often written U(3); the cell is su(3)".to_string()),
        "SU(3)×SU(3)" => Some("often written U(3)^2; the cell is su(3)⊕su(3)".to_string()),
        "SU(6)" => Some("often written U(6); the cell is su(6)".to_string()),
        _ => None,
    };
    square(3, dims, labels, note)
}

pub fn magic_square(level: u8, der: &DerivationDims) -> Result<MagicSquare, CatalogError> {
    match level {
        2 => Ok(magic_square_level2()),
        3 => Ok(magic_square_level3(der)),
        other => Err(CatalogError::InvalidParams(format!("magic square level {other}"))),
    }
}
