//! Compact Lie groups: dimensions, ranks and exponents.

use serde::{Deserialize, Serialize};

use super::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    /// Cartan series letter (A, B, C, D, E, F, G) or `U` for unitary groups.
    pub series: String,
    pub dim: u64,
    pub rank: u32,
    /// Present for semisimple groups; the rational cohomology is that of a
    /// product of spheres of dimensions `2e + 1`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponents: Option<Vec<u32>>,
}

impl GroupRecord {
    fn new(name: impl Into<String>, series: &str, dim: u64, rank: u32, exponents: Option<Vec<u32>>) -> Self {
        Self {
            name: name.into(),
            series: series.into(),
            dim,
            rank,
            exponents,
        }
    }
}

/// Dimension of a classical compact group.
///
/// `SO`/`O`/`Spin`: n(n−1)/2, `SU`: n²−1, `U`: n², `Sq`/`Sp`: n(2n+1).
pub fn classical_group_dim(series: &str, n: u64) -> Result<u64, CatalogError> {
    if n == 0 {
        return Err(CatalogError::InvalidParams(format!("{series}(0)")));
    }
    match series {
        "SO" | "O" | "Spin" => Ok(n * (n - 1) / 2),
        "SU" => Ok(n * n - 1),
        "U" => Ok(n * n),
        "Sq" | "Sp" => Ok(n * (2 * n + 1)),
        other => Err(CatalogError::UnknownSeries(other.into())),
    }
}

fn odd_exponents(count: u32) -> Vec<u32> {
    (0..count).map(|i| 2 * i + 1).collect()
}

fn orthogonal(name: String, n: u64) -> GroupRecord {
    let dim = n * (n - 1) / 2;
    let rank = (n / 2) as u32;
    if n % 2 == 1 {
        let exps = (n >= 3).then(|| odd_exponents(rank));
        GroupRecord::new(name, "B", dim, rank, exps)
    } else if n >= 4 {
        let mut exps = odd_exponents(rank - 1);
        exps.push(rank - 1);
        exps.sort_unstable();
        GroupRecord::new(name, "D", dim, rank, Some(exps))
    } else {
        // SO(2) is a circle.
        GroupRecord::new(name, "D", dim, rank, None)
    }
}

fn exceptional(label: &str) -> Option<GroupRecord> {
    let (dim, exps): (u64, &[u32]) = match label {
        "G2" => (14, &[1, 5]),
        "F4" => (52, &[1, 5, 7, 11]),
        "E6" => (78, &[1, 4, 5, 7, 8, 11]),
        "E7" => (133, &[1, 5, 7, 9, 11, 13, 17]),
        "E8" => (248, &[1, 7, 11, 13, 17, 19, 23, 29]),
        _ => return None,
    };
    Some(GroupRecord::new(label, &label[..1], dim, exps.len() as u32, Some(exps.to_vec())))
}

/// Splits `"Name(n)"` into `("Name", n)`.
fn parse_indexed(label: &str) -> Option<(&str, u64)> {
    let open = label.find('(')?;
    let inner = label[open + 1..].strip_suffix(')')?;
    Some((&label[..open], inner.parse().ok()?))
}

/// Resolves a single group label such as `SO(10)`, `Sq(3)`, `E6`, `E6(+6)`
/// (a split real form resolves to its compact form, which has the same
/// dimension) or a Cartan type `A4`, `D5`.
pub fn resolve_group(label: &str) -> Result<GroupRecord, CatalogError> {
    let unknown = || CatalogError::UnknownLabel(label.into());
    let trimmed = label.trim();
    // Real-form suffix such as E6(+6) or E8(-248).
    let base = match trimmed.find("(+").or_else(|| trimmed.find("(-")) {
        Some(i) => &trimmed[..i],
        None => trimmed,
    };
    if let Some(g) = exceptional(base) {
        return Ok(GroupRecord { name: trimmed.into(), ..g });
    }
    if let Some((series, n)) = parse_indexed(base) {
        if n == 0 {
            return Err(unknown());
        }
        let name = trimmed.to_string();
        return Ok(match series {
            "SO" | "O" | "Spin" => orthogonal(name, n),
            "SU" => GroupRecord::new(name, "A", n * n - 1, (n - 1) as u32, (n >= 2).then(|| (1..n as u32).collect())),
            "U" => GroupRecord::new(name, "U", n * n, n as u32, None),
            "Sq" | "Sp" => GroupRecord::new(name, "C", n * (2 * n + 1), n as u32, Some(odd_exponents(n as u32))),
            _ => return Err(unknown()),
        });
    }
    // Cartan types: A_n = SU(n+1), B_n = SO(2n+1), C_n = Sq(n), D_n = SO(2n).
    let mut chars = base.chars();
    let letter = chars.next().ok_or_else(unknown)?;
    let n: u64 = chars.as_str().parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    let via = match letter {
        'A' => format!("SU({})", n + 1),
        'B' => format!("SO({})", 2 * n + 1),
        'C' => format!("Sq({n})"),
        'D' => format!("SO({})", 2 * n),
        _ => return Err(unknown()),
    };
    Ok(GroupRecord {
        name: trimmed.into(),
        ..resolve_group(&via)?
    })
}

/// Dimension of a product label such as `SU(6)×SU(2)` or `U(2)^2`.
pub fn label_dim(label: &str) -> Result<u64, CatalogError> {
    label
        .split('×')
        .map(|factor| {
            let factor = factor.trim();
            let (base, power) = match factor.rsplit_once('^') {
                Some((b, p)) => (b, p.parse::<u64>().map_err(|_| CatalogError::UnknownLabel(label.into()))?),
                None => (factor, 1),
            };
            Ok(resolve_group(base)?.dim * power)
        })
        .sum()
}

/// Result of checking `dim = Σ (2e + 1)` and `rank = #exponents`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentCheck {
    pub group: String,
    pub sphere_dims: Vec<u32>,
    pub sphere_dim_sum: u64,
    pub dim: u64,
    pub rank: u32,
    pub passed: bool,
}

pub fn exponents_check(g: &GroupRecord) -> Result<ExponentCheck, CatalogError> {
    let exps = g
        .exponents
        .as_ref()
        .ok_or_else(|| CatalogError::MissingExponents(g.name.clone()))?;
    let sphere_dims: Vec<u32> = exps.iter().map(|e| 2 * e + 1).collect();
    let sum: u64 = sphere_dims.iter().map(|&s| u64::from(s)).sum();
    Ok(ExponentCheck {
        group: g.name.clone(),
        passed: sum == g.dim && exps.len() == g.rank as usize,
        sphere_dims,
        sphere_dim_sum: sum,
        dim: g.dim,
        rank: g.rank,
    })
}

/// Consecutive differences of an exponent list.
pub fn exponent_differences(exponents: &[u32]) -> Vec<i64> {
    exponents.windows(2).map(|w| i64::from(w[1]) - i64::from(w[0])).collect()
}

/// Whether the consecutive differences read the same in both directions.
/// Fewer than two exponents pass trivially.
pub fn palindrome_check(exponents: &[u32]) -> bool {
    let diffs = exponent_differences(exponents);
    diffs.iter().eq(diffs.iter().rev())
}

/// Every group the catalog keeps exponent data for.
pub fn catalog_groups() -> Vec<GroupRecord> {
    let mut labels: Vec<String> = Vec::new();
    labels.extend((2..=8).map(|n| format!("SU({n})")));
    labels.extend((1..=4).map(|n| format!("Sq({n})")));
    labels.extend((3..=16).map(|n| format!("SO({n})")));
    labels.extend((7..=10).chain([12, 16]).map(|n| format!("Spin({n})")));
    labels.extend(["G2", "F4", "E6", "E7", "E8"].map(String::from));
    labels
        .iter()
        .map(|l| resolve_group(l).expect("catalog labels resolve"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dims() {
        assert_eq!(classical_group_dim("Sq", 3).unwrap(), 21);
        assert_eq!(classical_group_dim("Sq", 1).unwrap(), 3);
        assert_eq!(52 - 21 - 3, 28);
        assert_eq!(classical_group_dim("Spin", 9).unwrap(), 36);
        assert_eq!(classical_group_dim("SO", 4).unwrap(), 6);
        assert_eq!(classical_group_dim("SU", 8).unwrap(), 63);
        assert_eq!(classical_group_dim("U", 3).unwrap(), 9);
        assert!(matches!(classical_group_dim("Xyz", 3), Err(CatalogError::UnknownSeries(_))));
        assert!(classical_group_dim("SO", 0).is_err());
    }

    #[test]
    fn resolution() {
        assert_eq!(resolve_group("E6(+6)").unwrap().dim, 78);
        assert_eq!(resolve_group("D5").unwrap().dim, 45);
        assert_eq!(resolve_group("A4").unwrap().dim, 24);
        assert_eq!(resolve_group("Spin(10)").unwrap().exponents, Some(vec![1, 3, 4, 5, 7]));
        assert_eq!(resolve_group("SO(4)").unwrap().exponents, Some(vec![1, 1]));
        assert_eq!(resolve_group("SO(2)").unwrap().exponents, None);
        assert!(resolve_group("Foo(3)").is_err());
        assert!(resolve_group("X7").is_err());
        assert!(resolve_group("SO(0)").is_err());
        assert_eq!(label_dim("SU(6)×SU(2)").unwrap(), 38);
        assert_eq!(label_dim("U(2)^2").unwrap(), 8);
        assert_eq!(label_dim("Sq(2)^2").unwrap(), 20);
    }

    #[test]
    fn exponent_examples() {
        let spin10 = resolve_group("Spin(10)").unwrap();
        let c = exponents_check(&spin10).unwrap();
        assert_eq!(c.sphere_dims, vec![3, 7, 9, 11, 15]);
        assert_eq!(c.sphere_dim_sum, 45);
        assert!(c.passed);
        let f4 = exponents_check(&resolve_group("F4").unwrap()).unwrap();
        assert_eq!(f4.sphere_dims, vec![3, 11, 15, 23]);
        assert!(f4.passed && f4.dim == 52);
        assert!(exponents_check(&resolve_group("SU(2)").unwrap()).unwrap().sphere_dim_sum == 3);
        assert!(exponents_check(&resolve_group("U(2)").unwrap()).is_err());
        let mut broken = resolve_group("G2").unwrap();
        broken.dim = 15;
        assert!(!exponents_check(&broken).unwrap().passed);
    }

    #[test]
    fn palindromes() {
        assert_eq!(exponent_differences(&[1, 3, 4, 5, 7]), vec![2, 1, 1, 2]);
        assert!(palindrome_check(&[1, 3, 4, 5, 7]));
        assert_eq!(exponent_differences(&[1, 3, 5, 7, 11]), vec![2, 2, 2, 4]);
        assert!(!palindrome_check(&[1, 3, 5, 7, 11]));
        assert_eq!(exponent_differences(&[1, 5, 7, 11]), vec![4, 2, 4]);
        assert!(palindrome_check(&[1, 5, 7, 11]));
        assert!(palindrome_check(&[1]));
        assert!(palindrome_check(&[]));
    }

    #[test]
    fn every_catalog_group_passes() {
        for g in catalog_groups() {
            let c = exponents_check(&g).unwrap();
            assert!(c.passed, "{}", g.name);
            assert!(palindrome_check(g.exponents.as_ref().unwrap()), "{}", g.name);
        }
    }
}
