use serde::{Deserialize, Serialize};

use crate::context::{Context, Target};
use crate::render::Format;
use crate::report::CheckError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeriveOutput {
    pub algebra: String,
    pub dim: usize,
    /// Canonical echelon basis; each matrix is row-major with entries
    /// written as `p` or `p/q`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<Vec<Vec<Vec<String>>>>,
}

pub fn derive(ctx: &Context, target: Target, emit_basis: bool) -> Result<DeriveOutput, CheckError> {
    let l = ctx.derivations(target)?;
    let basis = emit_basis.then(|| {
        l.basis()
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| m.dense_row(r).iter().map(ToString::to_string).collect())
                    .collect()
            })
            .collect()
    });
    Ok(DeriveOutput {
        algebra: target.label().into(),
        dim: l.dim(),
        basis,
    })
}

impl DeriveOutput {
    pub fn render(&self, format: Format) -> String {
        match (format, &self.basis) {
            (Format::Json, _) | (_, Some(_)) => serde_json::to_string_pretty(self).expect("serializes") + "\n",
            (_, None) => format!("dim Der({}) = {}\n", self.algebra, self.dim),
        }
    }
}
