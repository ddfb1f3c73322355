//! Catalog of compact Lie groups, symmetric spaces, magic squares and the
//! supergravity chain, each record checkable against the others.

mod chains;
mod groups;
mod magic;
mod spaces;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chains::{supergravity_chain, verify_chain, ChainRecord, ChainReport};
pub use groups::{
    catalog_groups, classical_group_dim, exponent_differences, exponents_check, label_dim, palindrome_check,
    resolve_group, ExponentCheck, GroupRecord,
};
pub use magic::{
    magic_square, magic_square_level2, magic_square_level3, DerivationDims, MagicCell, MagicSquare, DIVISION_LABELS,
};
pub use spaces::{
    exceptional_atlas, families, family_instance, family_space_dim, projective_spaces, sphere_identities,
    verify_record, FamilyParams, FamilyRecord, RankSource, RecordReport, SymmetricSpaceRecord, FAMILY_LABELS,
    PROJECTIVE_MAX_N,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown group series {0:?}")]
    UnknownSeries(String),
    #[error("unresolvable label {0:?}")]
    UnknownLabel(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0} has no exponent data")]
    MissingExponents(String),
    #[error("json: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicSquares {
    pub level2: MagicSquare,
    pub level3: MagicSquare,
}

/// The whole catalog as one document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub groups: Vec<GroupRecord>,
    pub families: Vec<FamilyRecord>,
    pub exceptional_spaces: Vec<SymmetricSpaceRecord>,
    pub magic_squares: MagicSquares,
    pub chains: Vec<ChainRecord>,
}

impl Atlas {
    pub fn build(der: &DerivationDims) -> Self {
        Self {
            groups: catalog_groups(),
            families: families(),
            exceptional_spaces: exceptional_atlas(),
            magic_squares: MagicSquares {
                level2: magic_square_level2(),
                level3: magic_square_level3(der),
            },
            chains: supergravity_chain(),
        }
    }

    /// Pretty-printed JSON with keys in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("atlas serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CatalogError> {
        serde_json::from_str(s).map_err(|e| CatalogError::Json(e.to_string()))
    }
}
