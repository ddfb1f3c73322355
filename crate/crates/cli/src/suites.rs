//! Verification suites. Each suite is a fixed list of checks; output order
//! never depends on timing.

use std::collections::BTreeMap;
use std::sync::Arc;

use atlas_core::algebra::{
    associator, find_composition_failure, Algebra, AlgebraElement, FiniteAlgebra, SEDENION_COMPOSITION_WITNESS,
};
use atlas_core::catalog::{
    catalog_groups, exceptional_atlas, exponent_differences, exponents_check, family_instance, magic_square_level2,
    magic_square_level3, palindrome_check, projective_spaces, sphere_identities, supergravity_chain, verify_chain,
    verify_record, Atlas, FamilyParams, MagicSquare, SymmetricSpaceRecord, FAMILY_LABELS,
};
use atlas_core::jordan::{HermitianMatrix3, JordanAlgebra, SEDENION_JORDAN_WITNESS};
use atlas_core::lie::{
    cartan_split, generic_rank, induced_involution, is_negative_definite, killing_form, Involution,
    DEFAULT_RANK_TRIALS,
};
use atlas_core::linalg::{int, RationalMatrix};
use atlas_core::random::{random_coeffs, seeded_rng, SeededRng};
use clap::ValueEnum;

use crate::context::{Context, Target};
use crate::report::{failed, run_check, Check, CheckError, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    Algebras,
    Derivations,
    MagicSquare,
    Atlas,
    Chains,
    Exponents,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Algebras => "algebras",
            Scope::Derivations => "derivations",
            Scope::MagicSquare => "magic-square",
            Scope::Atlas => "atlas",
            Scope::Chains => "chains",
            Scope::Exponents => "exponents",
        }
    }
}

const SUITES: [Scope; 6] = [
    Scope::Algebras,
    Scope::Derivations,
    Scope::MagicSquare,
    Scope::Atlas,
    Scope::Chains,
    Scope::Exponents,
];

pub fn verify(ctx: &Context, scope: Scope) -> VerificationReport {
    let checks = match scope {
        Scope::All => SUITES.iter().flat_map(|s| suite(ctx, *s)).collect(),
        s => suite(ctx, s),
    };
    VerificationReport::new(scope.name(), ctx.seed, checks)
}

fn suite(ctx: &Context, scope: Scope) -> Vec<Check> {
    match scope {
        Scope::All => unreachable!("expanded by verify"),
        Scope::Algebras => algebras(ctx),
        Scope::Derivations => derivations(ctx),
        Scope::MagicSquare => magic(ctx),
        Scope::Atlas => atlas(ctx),
        Scope::Chains => chains(),
        Scope::Exponents => exponents(),
    }
}

fn element(a: &Arc<FiniteAlgebra>, rng: &mut SeededRng) -> AlgebraElement {
    AlgebraElement::new(Arc::clone(a), random_coeffs(rng, a.dim())).expect("length matches")
}

fn algebras(ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    let pairs = ctx.trials;
    for (dim, name) in [(1, "R"), (2, "C"), (4, "H"), (8, "O")] {
        let a = Arc::new(FiniteAlgebra::tower(dim));
        checks.push(run_check(
            format!("composition.{name}"),
            format!("N(xy) = N(x)N(y) on {pairs} pairs"),
            || {
                let mut rng = seeded_rng(ctx.seed);
                let mut held = 0;
                for _ in 0..pairs {
                    let x = element(&a, &mut rng);
                    let y = element(&a, &mut rng);
                    let xy = x.mul(&y).map_err(failed)?;
                    if xy.norm() == x.norm() * y.norm() {
                        held += 1;
                    }
                }
                Ok((held == pairs, format!("{held}/{pairs} pairs")))
            },
        ));
    }

    let sedenions = Arc::new(FiniteAlgebra::sedenions());
    checks.push(run_check("composition.S.witness", "N(xy) ≠ N(x)N(y)", || {
        let (x, y) = SEDENION_COMPOSITION_WITNESS;
        let x = AlgebraElement::from_ints(Arc::clone(&sedenions), &x).map_err(failed)?;
        let y = AlgebraElement::from_ints(Arc::clone(&sedenions), &y).map_err(failed)?;
        let lhs = x.mul(&y).map_err(failed)?.norm();
        let rhs = x.norm() * y.norm();
        Ok((lhs != rhs, format!("N(xy) = {lhs}, N(x)N(y) = {rhs}")))
    }));
    checks.push(run_check("composition.S.search", "a failing pair is found", || {
        let mut rng = seeded_rng(ctx.seed);
        let found = find_composition_failure(&sedenions, &mut rng, pairs.max(1)).is_some();
        Ok((found, if found { "found".into() } else { format!("none in {pairs} draws") }))
    }));

    let octonions = Arc::new(FiniteAlgebra::octonions());
    checks.push(run_check("alternativity.O", format!("(x,x,y) = (y,x,x) = 0 on {pairs} pairs"), || {
        let mut rng = seeded_rng(ctx.seed);
        let mut held = 0;
        for _ in 0..pairs {
            let x = element(&octonions, &mut rng);
            let y = element(&octonions, &mut rng);
            let left = associator(&x, &x, &y).map_err(failed)?;
            let right = associator(&y, &x, &x).map_err(failed)?;
            if left.is_zero() && right.is_zero() {
                held += 1;
            }
        }
        Ok((held == pairs, format!("{held}/{pairs} pairs")))
    }));
    checks.push(run_check("associativity.O", "some associator is nonzero", || {
        let e = |k| AlgebraElement::basis(Arc::clone(&octonions), k);
        let a = associator(&e(1), &e(2), &e(4)).map_err(failed)?;
        Ok((!a.is_zero(), format!("(e1,e2,e4) = {:?}", nonzero_coords(&a))))
    }));

    let jordan_pairs = (pairs / 2).max(1);
    for (dim, name) in [(1, "R"), (2, "C"), (4, "H"), (8, "O")] {
        let k = Arc::new(FiniteAlgebra::tower(dim));
        checks.push(run_check(
            format!("jordan-identity.J3({name})"),
            format!("x²∘(x∘y) = x∘(x²∘y) on {jordan_pairs} pairs"),
            || {
                let mut rng = seeded_rng(ctx.seed);
                let mut held = 0;
                for _ in 0..jordan_pairs {
                    let x = HermitianMatrix3::random(Arc::clone(&k), &mut rng);
                    let y = HermitianMatrix3::random(Arc::clone(&k), &mut rng);
                    if x.jordan_identity_defect(&y).map_err(failed)?.is_zero() {
                        held += 1;
                    }
                }
                Ok((held == jordan_pairs, format!("{held}/{jordan_pairs} pairs")))
            },
        ));
    }
    checks.push(run_check("jordan-identity.J3(S).witness", "nonzero defect", || {
        let (x, y) = SEDENION_JORDAN_WITNESS;
        let j = JordanAlgebra::new(Arc::clone(&sedenions));
        let x = j.element(&x.map(int)).map_err(failed)?;
        let y = j.element(&y.map(int)).map_err(failed)?;
        let defect = x.jordan_identity_defect(&y).map_err(failed)?;
        Ok((!defect.is_zero(), if defect.is_zero() { "zero".into() } else { "nonzero".into() }))
    }));
    checks
}

fn nonzero_coords(a: &AlgebraElement) -> Vec<(usize, String)> {
    a.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != int(0))
        .map(|(k, c)| (k, c.to_string()))
        .collect()
}

/// The reference ranks of the two spaces the Lie engine cross-checks.
fn atlas_rank(label: &str) -> u32 {
    exceptional_atlas()
        .into_iter()
        .find(|r| r.label == label)
        .and_then(|r| r.rank)
        .expect("recorded rank")
}

fn derivations(ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    let expected = [0, 0, 3, 14, 3, 8, 21, 52];
    for (t, e) in Target::ALL.iter().zip(expected) {
        checks.push(run_check(format!("der.{}", t.label()), format!("dim {e}"), || {
            let d = ctx.derivations(*t)?.dim();
            Ok((d == e, format!("dim {d}")))
        }));
    }
    for t in [Target::Quaternions, Target::Octonions, Target::J3o] {
        checks.push(run_check(format!("killing.Der({})", t.label()), "negative definite", || {
            let l = ctx.derivations(t)?;
            let ok = is_negative_definite(&killing_form(&l))?;
            Ok((ok, if ok { "negative definite".into() } else { "not negative definite".into() }))
        }));
    }
    for (t, e) in [(Target::Octonions, 2), (Target::J3o, 4)] {
        checks.push(run_check(
            format!("rank.Der({})", t.label()),
            format!("rank {e} ({DEFAULT_RANK_TRIALS} trials)"),
            || {
                let r = generic_rank(&*ctx.derivations(t)?, DEFAULT_RANK_TRIALS, ctx.seed)?;
                Ok((r == e, format!("rank {r}")))
            },
        ));
    }

    // g2 under the automorphism fixing the quaternion subalgebra of O, and
    // f4 under conjugation by diag(-1, 1, 1) on J3(O).
    let octonion_sigma = RationalMatrix::diagonal(&[1, 1, 1, 1, -1, -1, -1, -1].map(int));
    let j3o = JordanAlgebra::new(Arc::new(FiniteAlgebra::octonions()));
    let f4_sigma = j3o.diagonal_conjugation([-1, 1, 1]);
    let cases = [
        ("G", Target::Octonions, octonion_sigma, (6, 8)),
        ("FII", Target::J3o, f4_sigma, (36, 16)),
    ];
    for (space, target, sigma, dims) in cases {
        let mut pair = None;
        checks.push(run_check(
            format!("split.{space}"),
            format!("(dim k, dim p) = {dims:?}, all inclusions, [p,p] = k"),
            || {
                let l = ctx.derivations(target)?;
                let algebra = target.algebra();
                let sigma = Involution::new(algebra.as_ref(), sigma)?;
                let theta = induced_involution(algebra.as_ref(), &sigma, &l)?;
                let split = cartan_split(&l, &theta)?;
                let ok = split.dims() == dims && split.pp_spans_k();
                let computed = format!("{:?}, dim [p,p] = {}", split.dims(), split.pp_span_dim);
                pair = Some((l, split));
                Ok((ok, computed))
            },
        ));
        let expected_rank = atlas_rank(space);
        checks.push(run_check(
            format!("space-rank.{space}"),
            format!("rank {expected_rank}"),
            || {
                let (l, split) = pair.as_ref().ok_or(CheckError::Budget)?;
                let r = split.rank(l, DEFAULT_RANK_TRIALS, ctx.seed)?;
                Ok((r == expected_rank as usize, format!("rank {r}")))
            },
        ));
    }
    checks
}

fn dims_string(sq: &MagicSquare) -> String {
    sq.dims()
        .iter()
        .map(|row| row.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" / ")
}

const LEVEL3: &str = "3,8,21,52 / 8,16,35,78 / 21,35,66,133 / 52,78,133,248";

fn magic(ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut level3 = None;
    checks.push(run_check("magic.level3", LEVEL3, || {
        let sq = magic_square_level3(&ctx.derivation_dims()?);
        let computed = dims_string(&sq);
        level3 = Some(sq);
        Ok((computed == LEVEL3, computed))
    }));
    let level3 = level3.as_ref();
    checks.push(run_check("magic.level3.symmetric", "symmetric", || {
        let sq = level3.ok_or(CheckError::Budget)?;
        Ok((sq.is_symmetric(), sq.is_symmetric().to_string()))
    }));
    checks.push(run_check("magic.level3.labels", "labels resolve to cell dims", || {
        let bad = level3.ok_or(CheckError::Budget)?.label_mismatches()?;
        Ok((bad.is_empty(), if bad.is_empty() { "all match".into() } else { bad.join("; ") }))
    }));
    checks.push(run_check("magic.level3.bottom-row", "F4 E6 E7 E8 = 52 78 133 248", || {
        let sq = level3.ok_or(CheckError::Budget)?;
        let row = &sq.cells[3];
        let computed = format!(
            "{} = {}",
            row.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join(" "),
            row.iter().map(|c| c.dim.to_string()).collect::<Vec<_>>().join(" ")
        );
        Ok((computed == "F4 E6 E7 E8 = 52 78 133 248", computed))
    }));
    let level2 = magic_square_level2();
    checks.push(run_check("magic.level2.symmetric", "symmetric", || {
        Ok((level2.is_symmetric(), level2.is_symmetric().to_string()))
    }));
    checks.push(run_check("magic.level2.labels", "labels resolve to cell dims", || {
        let bad = level2.label_mismatches()?;
        Ok((bad.is_empty(), if bad.is_empty() { "all match".into() } else { bad.join("; ") }))
    }));
    checks.push(run_check("magic.e8-decomposition", "248 = 120 + 128", || {
        let sq = level3.ok_or(CheckError::Budget)?;
        let spin16 = level2.cells[3][3].dim;
        let evi = exceptional_atlas().into_iter().find(|r| r.label == "EVIII").expect("EVIII").dim;
        let e8 = sq.cells[3][3].dim;
        Ok((e8 == spin16 + evi, format!("{e8} = {spin16} + {evi}")))
    }));
    checks
}

fn record_check(prefix: &str, r: &SymmetricSpaceRecord) -> Check {
    run_check(format!("{prefix}.{}", r.label), format!("{} = {}", r.quotient_label(), r.dim), || {
        let report = verify_record(r)?;
        let computed = match report.computed_dim {
            Some(d) if report.passed => d.to_string(),
            _ => report.detail,
        };
        Ok((report.passed, computed))
    })
}

fn atlas(ctx: &Context) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut records = exceptional_atlas();
    if ctx.inject_corrupted_record {
        records[1].dim += 2;
    }
    checks.push(run_check("atlas.count", "12", || Ok((records.len() == 12, records.len().to_string()))));
    checks.push(run_check("atlas.partition", "G2:1 F4:2 E6:4 E7:3 E8:2", || {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for r in &records {
            *counts.entry(r.numerator.name.as_str()).or_default() += 1;
        }
        let computed = ["G2", "F4", "E6", "E7", "E8"]
            .iter()
            .map(|g| format!("{g}:{}", counts.get(g).copied().unwrap_or(0)))
            .collect::<Vec<_>>()
            .join(" ");
        Ok((computed == "G2:1 F4:2 E6:4 E7:3 E8:2", computed))
    }));
    checks.extend(records.iter().map(|r| record_check("atlas", r)));
    for label in FAMILY_LABELS {
        checks.push(run_check(
            format!("family.{label}"),
            "closed form = dim G − dim K for parameters 1..=8",
            || {
                let mut tested = 0;
                for a in 1..=8 {
                    for b in 1..=8 {
                        let params = match label {
                            "AIII" | "BDI" | "CII" => FamilyParams::PQ(a, b),
                            _ if b == 1 => FamilyParams::N(a),
                            _ => continue,
                        };
                        let report = verify_record(&family_instance(label, params)?)?;
                        if !report.passed {
                            return Ok((false, format!("{params:?}: {}", report.detail)));
                        }
                        tested += 1;
                    }
                }
                Ok((true, format!("{tested} instances agree")))
            },
        ));
    }
    checks.extend(projective_spaces().iter().map(|r| {
        let mut c = record_check("projective", r);
        if r.rank != Some(1) {
            c.status = Status::Fail;
            c.computed = format!("rank {:?}", r.rank);
        }
        c
    }));
    checks.extend(sphere_identities().iter().map(|r| record_check("identity", r)));
    checks.push(run_check("atlas.json-round-trip", "parse(emit(atlas)) = atlas", || {
        let atlas = Atlas::build(&ctx.derivation_dims()?);
        let back = Atlas::from_json(&atlas.to_json())?;
        Ok((back == atlas, if back == atlas { "identical".into() } else { "differs".into() }))
    }));
    checks
}

fn chains() -> Vec<Check> {
    supergravity_chain()
        .iter()
        .map(|c| {
            run_check(
                format!("chain.d{}", c.spacetime_dim),
                format!("{}/{}: {} scalars", c.split_form, c.compact_label(), c.scalars),
                || {
                    let r = verify_chain(c)?;
                    Ok((
                        r.passed,
                        format!(
                            "{} − {} = {}; max compact {}",
                            c.group.dim, r.compact_dim, r.computed_scalars, r.max_compact_dim
                        ),
                    ))
                },
            )
        })
        .collect()
}

fn exponents() -> Vec<Check> {
    let mut checks: Vec<Check> = catalog_groups()
        .iter()
        .map(|g| {
            let exps = g.exponents.clone().unwrap_or_default();
            run_check(
                format!("exponents.{}", g.name),
                format!("{exps:?}: dim {}, rank {}, palindromic", g.dim, g.rank),
                || {
                    let c = exponents_check(g)?;
                    let pal = palindrome_check(&exps);
                    Ok((
                        c.passed && pal,
                        format!(
                            "Σ(2e+1) = {}, {} exponents, diffs {:?}",
                            c.sphere_dim_sum,
                            exps.len(),
                            exponent_differences(&exps)
                        ),
                    ))
                },
            )
        })
        .collect();
    for (exps, expect) in [(&[1u32, 3, 5, 7, 11][..], false), (&[1, 5, 7, 11][..], true), (&[1, 3, 4, 5, 7][..], true)] {
        let word = |b: bool| if b { "palindromic" } else { "not palindromic" };
        checks.push(run_check(format!("palindrome.{exps:?}"), word(expect), || {
            let got = palindrome_check(exps);
            Ok((got == expect, format!("{}, diffs {:?}", word(got), exponent_differences(exps))))
        }));
    }
    checks
}
