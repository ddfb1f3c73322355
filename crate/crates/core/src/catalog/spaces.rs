//! Symmetric spaces `G/K`: the classical families, the twelve compact
//! exceptional spaces and the rank-one projective spaces.

use serde::{Deserialize, Serialize};

use super::groups::{resolve_group, GroupRecord};
use super::CatalogError;

/// Where a recorded rank comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankSource {
    /// Taken from the standard classification tables.
    External,
    /// Taken from the tables and reproduced by the Lie engine.
    ExternalCrossChecked,
    /// Follows from the construction (projective spaces).
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSpaceRecord {
    pub label: String,
    pub numerator: GroupRecord,
    pub denominator: Vec<GroupRecord>,
    /// Dimension of the central torus of `K` not accounted for by the
    /// listed factors, e.g. the `U(1)` in `SO(10)×U(1)`.
    pub abelian_dim: u64,
    /// Claimed dimension of `G/K`.
    pub dim: u64,
    pub rank: Option<u32>,
    pub rank_source: Option<RankSource>,
}

impl SymmetricSpaceRecord {
    fn build(label: &str, numerator: &str, denominator: &[&str], abelian_dim: u64, dim: u64) -> Result<Self, CatalogError> {
        Ok(Self {
            label: label.into(),
            numerator: resolve_group(numerator)?,
            denominator: denominator.iter().map(|d| resolve_group(d)).collect::<Result<_, _>>()?,
            abelian_dim,
            dim,
            rank: None,
            rank_source: None,
        })
    }

    fn with_rank(mut self, rank: u32, source: RankSource) -> Self {
        self.rank = Some(rank);
        self.rank_source = Some(source);
        self
    }

    /// `K` written as a product, e.g. `SO(10)×U(1)`.
    pub fn denominator_label(&self) -> String {
        let mut parts: Vec<String> = self.denominator.iter().map(|g| g.name.clone()).collect();
        match self.abelian_dim {
            0 => {}
            1 => parts.push("U(1)".into()),
            k => parts.push(format!("U(1)^{k}")),
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("×")
        }
    }

    pub fn quotient_label(&self) -> String {
        format!("{}/{}", self.numerator.name, self.denominator_label())
    }
}

/// Outcome of recomputing a record's dimension from its groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub label: String,
    pub quotient: String,
    pub expected_dim: u64,
    /// `dim G − Σ dim K_i − abelian_dim`, from the catalog's own group data.
    pub computed_dim: Option<u64>,
    pub passed: bool,
    /// Empty when the record passes.
    pub detail: String,
}

/// Re-resolves every group label of the record and recomputes the quotient
/// dimension. Group data stored in the record must agree with the resolver.
pub fn verify_record(record: &SymmetricSpaceRecord) -> Result<RecordReport, CatalogError> {
    let mut problems = Vec::new();
    let mut resolved_dim = |g: &GroupRecord| -> Result<u64, CatalogError> {
        let fresh = resolve_group(&g.name)?;
        if fresh.dim != g.dim {
            problems.push(format!("{} recorded with dim {} but resolves to {}", g.name, g.dim, fresh.dim));
        }
        Ok(fresh.dim)
    };
    let g_dim = resolved_dim(&record.numerator)?;
    let mut k_dim = record.abelian_dim;
    for k in &record.denominator {
        k_dim += resolved_dim(k)?;
    }
    let computed = g_dim.checked_sub(k_dim);
    match computed {
        None => problems.push(format!("dim K = {k_dim} exceeds dim G = {g_dim}")),
        Some(c) if c != record.dim => problems.push(format!(
            "dim G − dim K = {g_dim} − {k_dim} = {c}, recorded {}",
            record.dim
        )),
        Some(_) => {}
    }
    if let (Some(rank), Some(c)) = (record.rank, computed) {
        if u64::from(rank) > c {
            problems.push(format!("rank {rank} exceeds dimension {c}"));
        }
    }
    Ok(RecordReport {
        label: record.label.clone(),
        quotient: record.quotient_label(),
        expected_dim: record.dim,
        computed_dim: computed,
        passed: problems.is_empty(),
        detail: problems.join("; "),
    })
}

/// The twelve compact exceptional symmetric spaces with their ranks.
pub fn exceptional_atlas() -> Vec<SymmetricSpaceRecord> {
    use RankSource::{External, ExternalCrossChecked};
    let rows: [(&str, &str, &[&str], u64, u64, u32, RankSource); 12] = [
        ("G", "G2", &["SO(4)"], 0, 8, 2, ExternalCrossChecked),
        ("FI", "F4", &["Sq(3)", "Sq(1)"], 0, 28, 4, External),
        ("FII", "F4", &["Spin(9)"], 0, 16, 1, ExternalCrossChecked),
        ("EI", "E6", &["Sq(4)"], 0, 42, 6, External),
        ("EII", "E6", &["SU(6)", "SU(2)"], 0, 40, 4, External),
        ("EIII", "E6", &["SO(10)"], 1, 32, 2, External),
        ("EIV", "E6", &["F4"], 0, 26, 2, External),
        ("EV", "E7", &["SU(8)"], 0, 70, 7, External),
        ("EVI", "E7", &["SO(12)", "Sq(1)"], 0, 64, 4, External),
        ("EVII", "E7", &["E6"], 1, 54, 3, External),
        ("EVIII", "E8", &["SO(16)"], 0, 128, 8, External),
        ("EIX", "E8", &["E7", "Sq(1)"], 0, 112, 4, External),
    ];
    rows.iter()
        .map(|(label, g, k, ab, dim, rank, src)| {
            SymmetricSpaceRecord::build(label, g, k, *ab, *dim)
                .expect("exceptional labels resolve")
                .with_rank(*rank, *src)
        })
        .collect()
}

/// Parameters of a classical family: `n`, or `(p, q)` for Grassmannian-type
/// families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyParams {
    N(u64),
    PQ(u64, u64),
}

/// One classical family of compact symmetric spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub label: String,
    pub quotient: String,
    pub dim_formula: String,
    pub params: String,
}

pub const FAMILY_LABELS: [&str; 7] = ["AI", "AII", "AIII", "BDI", "CI", "CII", "DIII"];

pub fn families() -> Vec<FamilyRecord> {
    let rows = [
        ("AI", "SU(n)/SO(n)", "(n−1)(n+2)/2", "n"),
        ("AII", "SU(2n)/Sq(n)", "(2n+1)(n−1)", "n"),
        ("AIII", "SU(p+q)/S(U(p)×U(q))", "2pq", "p,q"),
        ("BDI", "SO(p+q)/SO(p)×SO(q)", "pq", "p,q"),
        ("CI", "Sq(n)/U(n)", "n(n+1)", "n"),
        ("CII", "Sq(p+q)/Sq(p)×Sq(q)", "4pq", "p,q"),
        ("DIII", "SO(2n)/U(n)", "n(n−1)", "n"),
    ];
    rows.iter()
        .map(|(label, quotient, formula, params)| FamilyRecord {
            label: (*label).into(),
            quotient: (*quotient).into(),
            dim_formula: (*formula).into(),
            params: (*params).into(),
        })
        .collect()
}

fn check_params(label: &str, params: FamilyParams) -> Result<(), CatalogError> {
    let bad = || Err(CatalogError::InvalidParams(format!("{label} with {params:?}")));
    match (label, params) {
        ("AI" | "AII" | "CI" | "DIII", FamilyParams::N(n)) if n >= 1 => Ok(()),
        ("AIII" | "BDI" | "CII", FamilyParams::PQ(p, q)) if p >= 1 && q >= 1 => Ok(()),
        (l, _) if FAMILY_LABELS.contains(&l) => bad(),
        (l, _) => Err(CatalogError::UnknownLabel(l.into())),
    }
}

/// Closed-form dimension of a classical family member.
pub fn family_space_dim(label: &str, params: FamilyParams) -> Result<u64, CatalogError> {
    check_params(label, params)?;
    Ok(match (label, params) {
        ("AI", FamilyParams::N(n)) => (n - 1) * (n + 2) / 2,
        ("AII", FamilyParams::N(n)) => (2 * n + 1) * (n - 1),
        ("CI", FamilyParams::N(n)) => n * (n + 1),
        ("DIII", FamilyParams::N(n)) => n * (n - 1),
        ("AIII", FamilyParams::PQ(p, q)) => 2 * p * q,
        ("BDI", FamilyParams::PQ(p, q)) => p * q,
        ("CII", FamilyParams::PQ(p, q)) => 4 * p * q,
        _ => unreachable!("parameters checked"),
    })
}

/// The family member as an explicit quotient of groups, with the closed-form
/// dimension as its claimed value, so that [`verify_record`] cross-checks
/// the formula against group dimensions.
pub fn family_instance(label: &str, params: FamilyParams) -> Result<SymmetricSpaceRecord, CatalogError> {
    let dim = family_space_dim(label, params)?;
    let name = match params {
        FamilyParams::N(n) => format!("{label}({n})"),
        FamilyParams::PQ(p, q) => format!("{label}({p},{q})"),
    };
    let build = |g: String, k: Vec<String>, ab: u64| {
        let k: Vec<&str> = k.iter().map(String::as_str).collect();
        SymmetricSpaceRecord::build(&name, &g, &k, ab, dim)
    };
    match (label, params) {
        ("AI", FamilyParams::N(n)) => build(format!("SU({n})"), vec![format!("SO({n})")], 0),
        ("AII", FamilyParams::N(n)) => build(format!("SU({})", 2 * n), vec![format!("Sq({n})")], 0),
        ("CI", FamilyParams::N(n)) => build(format!("Sq({n})"), vec![format!("U({n})")], 0),
        ("DIII", FamilyParams::N(n)) => build(format!("SO({})", 2 * n), vec![format!("U({n})")], 0),
        ("AIII", FamilyParams::PQ(p, q)) => build(format!("SU({})", p + q), vec![format!("SU({p})"), format!("SU({q})")], 1),
        ("BDI", FamilyParams::PQ(p, q)) => build(format!("SO({})", p + q), vec![format!("SO({p})"), format!("SO({q})")], 0),
        ("CII", FamilyParams::PQ(p, q)) => build(format!("Sq({})", p + q), vec![format!("Sq({p})"), format!("Sq({q})")], 0),
        _ => unreachable!("parameters checked"),
    }
}

/// Largest `n` for which [`projective_spaces`] lists `RPⁿ`, `CPⁿ` and `HPⁿ`.
pub const PROJECTIVE_MAX_N: u64 = 4;

/// `RPⁿ`, `CPⁿ`, `HPⁿ` for `1 ≤ n ≤ PROJECTIVE_MAX_N`, then `OP¹` and `OP²`.
/// All have rank one.
pub fn projective_spaces() -> Vec<SymmetricSpaceRecord> {
    let mut out = Vec::new();
    let rank_one = |r: SymmetricSpaceRecord| r.with_rank(1, RankSource::Structural);
    for n in 1..=PROJECTIVE_MAX_N {
        let records = [
            SymmetricSpaceRecord::build(&format!("RP^{n}"), &format!("SO({})", n + 1), &[&format!("SO({n})")], 0, n),
            SymmetricSpaceRecord::build(&format!("CP^{n}"), &format!("SU({})", n + 1), &[&format!("SU({n})")], 1, 2 * n),
            SymmetricSpaceRecord::build(
                &format!("HP^{n}"),
                &format!("Sq({})", n + 1),
                &[&format!("Sq({n})"), "Sq(1)"],
                0,
                4 * n,
            ),
        ];
        out.extend(records.into_iter().map(|r| rank_one(r.expect("projective labels resolve"))));
    }
    out.push(rank_one(SymmetricSpaceRecord::build("OP^1", "Spin(9)", &["Spin(8)"], 0, 8).expect("resolves")));
    out.push(rank_one(SymmetricSpaceRecord::build("OP^2", "F4", &["Spin(9)"], 0, 16).expect("resolves")));
    out
}

/// A homogeneous-space dimension count that is not a symmetric space,
/// such as the seven-sphere `Spin(7)/G2`.
pub fn sphere_identities() -> Vec<SymmetricSpaceRecord> {
    vec![
        SymmetricSpaceRecord::build("S^7", "Spin(7)", &["G2"], 0, 7).expect("resolves"),
        SymmetricSpaceRecord::build("S^6", "G2", &["SU(3)"], 0, 6).expect("resolves"),
        SymmetricSpaceRecord::build("S^2", "Sq(1)", &[], 1, 2).expect("resolves"),
    ]
}
