//! Published dimensions and identities, checked through the public API.

use std::sync::Arc;

use atlas_core::algebra::FiniteAlgebra;
use atlas_core::cancel::CancelToken;
use atlas_core::catalog::*;
use atlas_core::jordan::JordanAlgebra;
use atlas_core::lie::{cartan_split, derivation_algebra, generic_rank, induced_involution, Involution};
use atlas_core::linalg::{int, RationalMatrix};

#[test]
fn exceptional_spaces() {
    let atlas = exceptional_atlas();
    let by_label = |l: &str| atlas.iter().find(|r| r.label == l).unwrap();
    for (label, dim) in [("EIV", 26), ("EII", 40), ("EIII", 32), ("EVII", 54), ("EVI", 64), ("EIX", 112), ("EVIII", 128)] {
        assert_eq!(by_label(label).dim, dim);
    }
    assert_eq!(by_label("EI").dim, 42);
    assert_eq!(by_label("EV").dim, 70);
    assert_eq!(by_label("FII").quotient_label(), "F4/Spin(9)");
    assert_eq!(by_label("EIII").abelian_dim, 1);
    for r in &atlas {
        assert!(verify_record(r).unwrap().passed, "{}", r.label);
    }
}

#[test]
fn magic_square_corners_and_symmetry() {
    let der = DerivationDims::compute(&CancelToken::never()).unwrap();
    let sq = magic_square(3, &der).unwrap();
    // (O, C): 14 + 8 + 7·8 and (C, O): 0 + 52 + 1·26.
    assert_eq!(sq.cells[3][1].dim, 78);
    assert_eq!(sq.cells[1][3].dim, 78);
    assert_eq!(sq.cells[3][3].dim, 14 + 52 + 7 * 26);
    assert_eq!(sq.cells[0][0].dim, 3);
    let bottom: Vec<&str> = sq.cells[3].iter().map(|c| c.label.as_str()).collect();
    assert_eq!(bottom, ["F4", "E6", "E7", "E8"]);
    let level2 = magic_square(2, &der).unwrap();
    assert_eq!(level2.cells[3].iter().map(|c| c.label.as_str()).collect::<Vec<_>>(), ["Spin(9)", "Spin(10)", "Spin(12)", "Spin(16)"]);
    assert_eq!(level2.cells[3][3].dim + 128, 248);
}

#[test]
fn group_identities() {
    assert_eq!(classical_group_dim("Spin", 7).unwrap() - resolve_group("G2").unwrap().dim, 7);
    assert_eq!(classical_group_dim("Sq", 1).unwrap() - classical_group_dim("U", 1).unwrap(), 2);
    assert_eq!(classical_group_dim("Sq", 4).unwrap(), 36);
    assert_eq!(resolve_group("E6").unwrap().dim, 36 + 42);
    let f4 = exponents_check(&resolve_group("F4").unwrap()).unwrap();
    assert_eq!((f4.sphere_dim_sum, f4.rank), (52, 4));
    assert!(exponents_check(&resolve_group("Spin(10)").unwrap()).unwrap().passed);
    assert!(!palindrome_check(&[1, 3, 5, 7, 11]));
    assert!(palindrome_check(&[1, 5, 7, 11]));
}

#[test]
fn supergravity_scalars() {
    let computed: Vec<u64> = supergravity_chain().iter().map(|c| verify_chain(c).unwrap().computed_scalars).collect();
    assert_eq!(computed, vec![128, 70, 42, 25, 14]);
}

#[test]
fn rank_one_planes() {
    let ps = projective_spaces();
    let dim = |l: &str| verify_record(ps.iter().find(|r| r.label == l).unwrap()).unwrap().computed_dim;
    assert_eq!(dim("OP^1"), Some(8));
    assert_eq!(dim("OP^2"), Some(16));
    assert_eq!(dim("CP^1"), Some(2));
}

#[test]
fn g2_and_f4_symmetric_pairs() {
    let o = FiniteAlgebra::octonions();
    let g2 = derivation_algebra(&o, &CancelToken::never()).unwrap();
    assert_eq!(g2.dim(), 14);
    assert_eq!(generic_rank(&g2, 5, 1).unwrap(), 2);
    let sigma = Involution::new(&o, RationalMatrix::diagonal(&[1, 1, 1, 1, -1, -1, -1, -1].map(int))).unwrap();
    let pair = cartan_split(&g2, &induced_involution(&o, &sigma, &g2).unwrap()).unwrap();
    assert_eq!(pair.dims(), (6, 8));
    assert!(pair.pp_spans_k());
    assert_eq!(pair.rank(&g2, 5, 1).unwrap(), 2);

    let j = JordanAlgebra::new(Arc::new(o));
    let f4 = derivation_algebra(&j, &CancelToken::never()).unwrap();
    let sigma = Involution::new(&j, j.diagonal_conjugation([-1, 1, 1])).unwrap();
    let pair = cartan_split(&f4, &induced_involution(&j, &sigma, &f4).unwrap()).unwrap();
    assert_eq!(pair.dims(), (36, 16));
    assert!(pair.pp_spans_k());
    assert_eq!(pair.rank(&f4, 5, 1).unwrap(), 1);
}
