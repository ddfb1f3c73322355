//! Results of the engine compared with independent computations.

use std::sync::Arc;

use atlas_core::algebra::{Algebra, AlgebraElement, FiniteAlgebra};
use atlas_core::cancel::CancelToken;
use atlas_core::jordan::JordanAlgebra;
use atlas_core::lie::{derivation_algebra, derivation_constraints, killing_form, LieAlgebraBasis};
use atlas_core::linalg::{int, nullspace_basis, rank, rank_modular_probe, rat, rref, Rational, RationalMatrix};
use atlas_core::random::{random_coeffs, seeded_rng};
use num_traits::{One, Zero};
use rand::Rng;

const BIG_PRIME: u64 = 2_147_483_647;

/// Textbook Gauss–Jordan on dense rows; returns the nonzero rows of the
/// reduced echelon form.
fn naive_rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn dense_rows(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|r| m.dense_row(r)).collect()
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> RationalMatrix {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)) } else { int(0) })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(data).unwrap()
}

#[test]
fn rank_and_nullspace_agree_with_textbook_elimination() {
    let mut rng = seeded_rng(3);
    for trial in 0..60 {
        let (r, c) = (rng.gen_range(1..12), rng.gen_range(1..12));
        let m = random_matrix(&mut rng, r, c, if trial % 2 == 0 { 0.3 } else { 0.8 });
        let reduced = naive_rref(dense_rows(&m));
        assert_eq!(rank(&m).unwrap(), reduced.len());
        let null = nullspace_basis(&m).unwrap();
        assert_eq!(null.len(), c - reduced.len());
        // The nullspace is the orthogonal complement of the row space.
        for v in &null {
            for row in &reduced {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}

#[test]
fn tall_systems_take_the_modular_path_and_agree() {
    let mut rng = seeded_rng(4);
    // Rows are combinations of 9 hidden rows, so the rank is at most 9.
    let basis = random_matrix(&mut rng, 9, 14, 0.6);
    let rows: Vec<Vec<Rational>> = (0..2300)
        .map(|_| {
            let coeffs = random_coeffs(&mut rng, 9);
            (0..14)
                .map(|col| coeffs.iter().enumerate().map(|(i, c)| c * basis.get(i, col)).sum())
                .collect()
        })
        .collect();
    let m = RationalMatrix::from_rows(rows).unwrap();
    let expected = naive_rref(dense_rows(&basis));
    assert_eq!(rank(&m).unwrap(), expected.len());
    let null = nullspace_basis(&m).unwrap();
    let from_naive = naive_rref(
        nullspace_basis(&RationalMatrix::from_rows(expected.clone()).unwrap()).unwrap(),
    );
    assert_eq!(rref(&null), from_naive);
}

fn left_mult(table: &dyn Algebra, a: &[Rational]) -> RationalMatrix {
    let n = table.dim();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            table.table().mul(a, &e)
        })
        .collect();
    RationalMatrix::from_rows(cols).unwrap().transpose()
}

fn span_dim(ms: &[RationalMatrix]) -> usize {
    rref(&ms.iter().map(RationalMatrix::to_dense).collect::<Vec<_>>()).len()
}

#[test]
fn quaternion_derivations_are_the_inner_derivations() {
    let h = Arc::new(FiniteAlgebra::quaternions());
    let der = derivation_algebra(h.as_ref(), &CancelToken::never()).unwrap();
    // x ↦ e_k x − x e_k, built from element multiplication.
    let inner: Vec<RationalMatrix> = (1..4)
        .map(|k| {
            let a = AlgebraElement::basis(Arc::clone(&h), k);
            let cols: Vec<Vec<Rational>> = (0..4)
                .map(|j| {
                    let x = AlgebraElement::basis(Arc::clone(&h), j);
                    a.mul(&x).unwrap().sub(&x.mul(&a).unwrap()).unwrap().coeffs().to_vec()
                })
                .collect();
            RationalMatrix::from_rows(cols).unwrap().transpose()
        })
        .collect();
    assert_eq!(span_dim(&inner), 3);
    for d in &inner {
        der.coordinates(d).unwrap();
    }
}

/// For a Jordan algebra every `[L_a, L_b]` is a derivation; for J3(K) they
/// span all of them.
fn check_inner_jordan_derivations(dim: usize, expected: usize) -> LieAlgebraBasis {
    let j = JordanAlgebra::new(Arc::new(FiniteAlgebra::tower(dim)));
    let n = j.dim();
    let der = derivation_algebra(&j, &CancelToken::never()).unwrap();
    assert_eq!(der.dim(), expected);
    let ls: Vec<RationalMatrix> = (0..n)
        .map(|a| {
            let mut e = vec![Rational::zero(); n];
            e[a] = Rational::one();
            left_mult(&j, &e)
        })
        .collect();
    let mut inner = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = ls[a].commutator(&ls[b]).unwrap();
            if !c.is_zero() {
                der.coordinates(&c).unwrap();
                inner.push(c);
            }
        }
    }
    assert_eq!(span_dim(&inner), expected);
    der
}

#[test]
fn jordan_derivations_are_spanned_by_commutators_of_multiplications() {
    check_inner_jordan_derivations(1, 3);
    check_inner_jordan_derivations(2, 8);
    check_inner_jordan_derivations(4, 21);
}

#[test]
fn f4_is_spanned_by_commutators_of_multiplications() {
    let der = check_inner_jordan_derivations(8, 52);
    // Derivations preserve the trace form: G D + Dᵀ G = 0.
    let j = JordanAlgebra::new(Arc::new(FiniteAlgebra::octonions()));
    let g = j.trace_form();
    for d in der.basis() {
        assert!(g.mul(d).unwrap().add(&d.transpose().mul(&g).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn derivation_dimensions_from_a_modular_rank() {
    let o = FiniteAlgebra::octonions();
    let sys = derivation_constraints(&o);
    assert_eq!(sys.cols() - rank_modular_probe(&sys, BIG_PRIME).unwrap(), 14);
    let j = JordanAlgebra::new(Arc::new(o));
    let sys = derivation_constraints(&j);
    assert_eq!((sys.rows(), sys.cols()), (10206, 729));
    assert_eq!(sys.cols() - rank_modular_probe(&sys, BIG_PRIME).unwrap(), 52);
}

#[test]
fn octonion_derivations_are_skew_and_kill_the_unit() {
    let o = FiniteAlgebra::octonions();
    let der = derivation_algebra(&o, &CancelToken::never()).unwrap();
    for d in der.basis() {
        assert_eq!(d.transpose(), d.scale(&int(-1)));
        assert!(d.dense_row(0).iter().all(Zero::is_zero));
    }
}

/// `B(X, Y) / tr(XY)` on the defining representation, checked to be one
/// constant over all basis pairs.
fn killing_to_trace_ratio(l: &LieAlgebraBasis) -> Rational {
    let b = killing_form(l);
    let mut ratio = None;
    for x in 0..l.dim() {
        for y in 0..l.dim() {
            let tr = l.basis()[x].mul(&l.basis()[y]).unwrap().trace();
            let k = b.get(x, y);
            if tr.is_zero() {
                assert!(k.is_zero());
                continue;
            }
            let r = k / tr;
            assert_eq!(ratio.get_or_insert_with(|| r.clone()), &r);
        }
    }
    ratio.unwrap()
}

#[test]
fn killing_forms_are_multiples_of_trace_forms() {
    let h = derivation_algebra(&FiniteAlgebra::quaternions(), &CancelToken::never()).unwrap();
    assert_eq!(killing_to_trace_ratio(&h), int(1));
    let o = derivation_algebra(&FiniteAlgebra::octonions(), &CancelToken::never()).unwrap();
    assert_eq!(killing_to_trace_ratio(&o), int(4));
    let j = JordanAlgebra::new(Arc::new(FiniteAlgebra::octonions()));
    let f4 = derivation_algebra(&j, &CancelToken::never()).unwrap();
    assert_eq!(killing_to_trace_ratio(&f4), int(3));
}

fn flat_nullity(columns: &[RationalMatrix]) -> usize {
    // Dimension of {c : Σ c_a M_a = 0}.
    let rows: Vec<Vec<Rational>> = columns.iter().map(RationalMatrix::to_dense).collect();
    let m = RationalMatrix::from_rows(rows).unwrap().transpose();
    nullspace_basis(&m).unwrap().len()
}

#[test]
fn g2_fixed_subalgebra_and_centralizers_from_matrices() {
    let o = FiniteAlgebra::octonions();
    let der = derivation_algebra(&o, &CancelToken::never()).unwrap();
    let sigma = RationalMatrix::diagonal(&[1, 1, 1, 1, -1, -1, -1, -1].map(int));
    // k = {D : σDσ = D}, the kernel of D ↦ σDσ − D.
    let shifted: Vec<RationalMatrix> = der
        .basis()
        .iter()
        .map(|d| sigma.mul(d).unwrap().mul(&sigma).unwrap().sub(d).unwrap())
        .collect();
    assert_eq!(flat_nullity(&shifted), 6);

    // Centralizer of a random element, from matrix commutators.
    let mut rng = seeded_rng(9);
    let x = der.element(&random_coeffs(&mut rng, 14)).unwrap();
    let brackets: Vec<RationalMatrix> = der.basis().iter().map(|d| x.commutator(d).unwrap()).collect();
    assert_eq!(flat_nullity(&brackets), 2);
}
