//! Scalar manifolds `G/K` of maximal supergravity in dimensions 3 to 7, where
//! `G` is the split real form and `K` its maximal compact subgroup.

use serde::{Deserialize, Serialize};

use super::groups::{resolve_group, GroupRecord};
use super::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub spacetime_dim: u32,
    /// Real form as usually written, e.g. `E7(+7)` or `SL(5,R)`.
    pub split_form: String,
    /// The compact group of the same complex type.
    pub group: GroupRecord,
    pub compact_subgroup: Vec<GroupRecord>,
    /// Claimed number of scalars, `dim G − dim K`.
    pub scalars: u64,
}

impl ChainRecord {
    pub fn compact_label(&self) -> String {
        let names: Vec<&str> = self.compact_subgroup.iter().map(|g| g.name.as_str()).collect();
        if names.len() > 1 && names.windows(2).all(|w| w[0] == w[1]) {
            format!("{}^{}", names[0], names.len())
        } else {
            names.join("×")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub spacetime_dim: u32,
    pub expected_scalars: u64,
    pub computed_scalars: u64,
    pub compact_dim: u64,
    /// `(dim G − rank G)/2`: the number of positive roots, which is the
    /// dimension of the maximal compact subgroup of the split form.
    pub max_compact_dim: u64,
    pub passed: bool,
}

pub fn supergravity_chain() -> Vec<ChainRecord> {
    let rows: [(u32, &str, &str, &[&str], u64); 5] = [
        (3, "E8(+8)", "E8", &["SO(16)"], 128),
        (4, "E7(+7)", "E7", &["SU(8)"], 70),
        (5, "E6(+6)", "E6", &["Sq(4)"], 42),
        (6, "SO(5,5)", "D5", &["Sq(2)", "Sq(2)"], 25),
        (7, "SL(5,R)", "A4", &["Sq(2)"], 14),
    ];
    rows.iter()
        .map(|(d, form, ty, k, scalars)| ChainRecord {
            spacetime_dim: *d,
            split_form: (*form).into(),
            group: resolve_group(ty).expect("chain labels resolve"),
            compact_subgroup: k.iter().map(|l| resolve_group(l).expect("chain labels resolve")).collect(),
            scalars: *scalars,
        })
        .collect()
}

pub fn verify_chain(record: &ChainRecord) -> Result<ChainReport, CatalogError> {
    let g = resolve_group(&record.group.name)?;
    let mut k_dim = 0;
    for k in &record.compact_subgroup {
        k_dim += resolve_group(&k.name)?.dim;
    }
    let computed = g.dim.saturating_sub(k_dim);
    let max_compact = (g.dim - u64::from(g.rank)) / 2;
    Ok(ChainReport {
        spacetime_dim: record.spacetime_dim,
        expected_scalars: record.scalars,
        computed_scalars: computed,
        compact_dim: k_dim,
        max_compact_dim: max_compact,
        passed: computed == record.scalars && k_dim == max_compact && g.dim == record.group.dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_scalars() {
        let chain = supergravity_chain();
        let scalars: Vec<u64> = chain.iter().map(|c| c.scalars).collect();
        assert_eq!(scalars, vec![128, 70, 42, 25, 14]);
        for c in &chain {
            let r = verify_chain(c).unwrap();
            assert!(r.passed, "{r:?}");
            // Scalars of a split form number the noncompact generators: (dim + rank)/2.
            assert_eq!(r.computed_scalars, (c.group.dim + u64::from(c.group.rank)) / 2);
        }
        assert_eq!(chain[3].compact_label(), "Sq(2)^2");
        assert_eq!(chain[0].compact_label(), "SO(16)");
    }

    #[test]
    fn wrong_compact_subgroup_fails() {
        let mut c = supergravity_chain().remove(1);
        c.compact_subgroup = vec![resolve_group("SU(7)").unwrap()];
        c.scalars = 133 - 48;
        let r = verify_chain(&c).unwrap();
        assert!(!r.passed);
        assert_eq!(r.max_compact_dim, 63);
    }
}
