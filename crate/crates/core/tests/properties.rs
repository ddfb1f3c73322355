//! Algebraic invariants checked on generated inputs.

use std::sync::Arc;

use atlas_core::algebra::{associator, Algebra, AlgebraElement, FiniteAlgebra};
use atlas_core::catalog::{family_instance, family_space_dim, verify_record, FamilyParams};
use atlas_core::jordan::HermitianMatrix3;
use atlas_core::linalg::{int, nullspace_basis, rank, rank_modular_probe, Rational, RationalMatrix};
use num_traits::Zero;
use proptest::collection::vec;
use proptest::prelude::*;

fn elem(a: &Arc<FiniteAlgebra>, coeffs: &[i64]) -> AlgebraElement {
    AlgebraElement::from_ints(Arc::clone(a), &coeffs[..a.dim()]).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    vec(-20i64..=20, 16)
}

fn composition_holds(dim: usize, x: &[i64], y: &[i64]) -> bool {
    let a = Arc::new(FiniteAlgebra::tower(dim));
    let (x, y) = (elem(&a, x), elem(&a, y));
    x.mul(&y).unwrap().norm() == x.norm() * y.norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn composition_law_reals(x in coeffs(), y in coeffs()) {
        prop_assert!(composition_holds(1, &x, &y));
    }

    #[test]
    fn composition_law_complex(x in coeffs(), y in coeffs()) {
        prop_assert!(composition_holds(2, &x, &y));
    }

    #[test]
    fn composition_law_quaternions(x in coeffs(), y in coeffs()) {
        prop_assert!(composition_holds(4, &x, &y));
    }

    #[test]
    fn composition_law_octonions(x in coeffs(), y in coeffs()) {
        prop_assert!(composition_holds(8, &x, &y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn octonions_are_alternative_and_the_associator_alternates(x in coeffs(), y in coeffs(), z in coeffs()) {
        let o = Arc::new(FiniteAlgebra::octonions());
        let (x, y, z) = (elem(&o, &x), elem(&o, &y), elem(&o, &z));
        prop_assert!(associator(&x, &x, &y).unwrap().is_zero());
        prop_assert!(associator(&x, &y, &y).unwrap().is_zero());
        prop_assert!(associator(&x, &y, &x).unwrap().is_zero());
        let xyz = associator(&x, &y, &z).unwrap();
        prop_assert_eq!(associator(&y, &x, &z).unwrap(), xyz.neg());
        prop_assert_eq!(associator(&x, &z, &y).unwrap(), xyz.neg());
        prop_assert_eq!(associator(&z, &x, &y).unwrap(), xyz);
    }

    #[test]
    fn small_algebras_are_associative(dim_pow in 0usize..3, x in coeffs(), y in coeffs(), z in coeffs()) {
        let a = Arc::new(FiniteAlgebra::tower(1 << dim_pow));
        let (x, y, z) = (elem(&a, &x), elem(&a, &y), elem(&a, &z));
        prop_assert!(associator(&x, &y, &z).unwrap().is_zero());
    }

    #[test]
    fn conjugation_is_an_anti_involution(dim_pow in 0usize..5, x in coeffs(), y in coeffs()) {
        let a = Arc::new(FiniteAlgebra::tower(1 << dim_pow));
        let (x, y) = (elem(&a, &x), elem(&a, &y));
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(x.mul(&y).unwrap().conjugate(), y.conjugate().mul(&x.conjugate()).unwrap());
        let xbar_x = x.conjugate().mul(&x).unwrap();
        prop_assert!(xbar_x.is_scalar());
        prop_assert_eq!(xbar_x.real_part().clone(), x.norm());
    }

    #[test]
    fn nonzero_elements_have_two_sided_inverses(dim_pow in 0usize..4, x in coeffs()) {
        let a = Arc::new(FiniteAlgebra::tower(1 << dim_pow));
        let x = elem(&a, &x);
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        let one = AlgebraElement::one(Arc::clone(&a));
        prop_assert_eq!(x.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&x).unwrap(), one);
    }
}

fn jordan_identity_holds(dim: usize, x: &[i64], y: &[i64]) -> bool {
    let k = Arc::new(FiniteAlgebra::tower(dim));
    let n = 3 + 3 * dim;
    let x = HermitianMatrix3::from_coords(Arc::clone(&k), &x[..n].iter().map(|&v| int(v)).collect::<Vec<_>>()).unwrap();
    let y = HermitianMatrix3::from_coords(k, &y[..n].iter().map(|&v| int(v)).collect::<Vec<_>>()).unwrap();
    x.jordan_product(&y).unwrap() == y.jordan_product(&x).unwrap() && x.jordan_identity_defect(&y).unwrap().is_zero()
}

fn jordan_coeffs() -> impl Strategy<Value = Vec<i64>> {
    vec(-9i64..=9, 27)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn jordan_identity_real(x in jordan_coeffs(), y in jordan_coeffs()) {
        prop_assert!(jordan_identity_holds(1, &x, &y));
    }

    #[test]
    fn jordan_identity_complex(x in jordan_coeffs(), y in jordan_coeffs()) {
        prop_assert!(jordan_identity_holds(2, &x, &y));
    }

    #[test]
    fn jordan_identity_quaternions(x in jordan_coeffs(), y in jordan_coeffs()) {
        prop_assert!(jordan_identity_holds(4, &x, &y));
    }

    #[test]
    fn jordan_identity_octonions(x in jordan_coeffs(), y in jordan_coeffs()) {
        prop_assert!(jordan_identity_holds(8, &x, &y));
    }
}

/// Small integer matrices with many zeros, so that rank deficiency is common.
fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| vec(vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rank_plus_nullity_is_the_column_count(m in matrix()) {
        let a = to_matrix(&m);
        let null = nullspace_basis(&a).unwrap();
        prop_assert_eq!(rank(&a).unwrap() + null.len(), a.cols());
        for v in &null {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        if !null.is_empty() {
            prop_assert_eq!(rank(&RationalMatrix::from_rows(null.clone()).unwrap()).unwrap(), null.len());
        }
    }

    #[test]
    fn rank_ignores_row_order_scaling_and_transposition(m in matrix(), shift in 0usize..7, scale in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let a = to_matrix(&m);
        let r = rank(&a).unwrap();
        let mut rows = m.clone();
        let len = rows.len();
        rows.rotate_left(shift % len);
        rows.reverse();
        prop_assert_eq!(rank(&to_matrix(&rows)).unwrap(), r);
        let scaled = RationalMatrix::from_rows(
            (0..a.rows())
                .map(|i| a.dense_row(i).into_iter().map(|x| x * Rational::new(scale.into(), (i as i64 + 2).into())).collect())
                .collect(),
        )
        .unwrap();
        prop_assert_eq!(rank(&scaled).unwrap(), r);
        prop_assert_eq!(rank(&a.transpose()).unwrap(), r);
    }

    #[test]
    fn modular_probe_never_exceeds_the_rank(m in matrix(), mask in vec(any::<bool>(), 6)) {
        const P: i64 = 2_147_483_647;
        let a = to_matrix(&m);
        prop_assert_eq!(rank_modular_probe(&a, P as u64).unwrap(), rank(&a).unwrap());
        // Rows that are multiples of the prime vanish modulo it, so the probe
        // can only undercount.
        let multiplied: Vec<Vec<i64>> = m
            .iter()
            .zip(mask.iter().cycle())
            .map(|(row, &hit)| row.iter().map(|&v| if hit { v * P } else { v }).collect())
            .collect();
        let b = to_matrix(&multiplied);
        prop_assert!(rank_modular_probe(&b, P as u64).unwrap() <= rank(&b).unwrap());
    }

    #[test]
    fn family_formulas_match_group_differences(label_idx in 0usize..7, p in 1u64..40, q in 1u64..40) {
        let label = atlas_core::catalog::FAMILY_LABELS[label_idx];
        let params = match label {
            "AIII" | "BDI" | "CII" => FamilyParams::PQ(p, q),
            _ => FamilyParams::N(p),
        };
        let record = family_instance(label, params).unwrap();
        prop_assert_eq!(record.dim, family_space_dim(label, params).unwrap());
        let report = verify_record(&record).unwrap();
        prop_assert!(report.passed, "{}", report.detail);
    }
}
