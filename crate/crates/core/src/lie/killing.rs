use num_traits::{Signed, Zero};

use super::{LieAlgebraBasis, LieError};
use crate::linalg::{self, Rational, RationalMatrix};
use crate::random::{random_coeffs, seeded_rng};

pub const DEFAULT_RANK_TRIALS: usize = 5;

/// `B(a, b) = tr(ad_a ∘ ad_b)` on the basis.
pub fn killing_form(l: &LieAlgebraBasis) -> RationalMatrix {
    let d = l.dim();
    let ads: Vec<RationalMatrix> = (0..d).map(|a| l.ad_basis(a)).collect();
    let mut b = RationalMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            // tr(XY) = Σ_{r,c} X[r][c] Y[c][r]
            let tr: Rational = ads[i]
                .nonzeros()
                .map(|(r, c, x)| {
                    let y = ads[j].get(c, r);
                    if y.is_zero() { y } else { x * y }
                })
                .sum();
            b.set(j, i, tr.clone());
            b.set(i, j, tr);
        }
    }
    b
}

/// Negative definiteness by the signs of the leading principal minors,
/// which must alternate starting negative. An empty form counts as definite.
pub fn is_negative_definite(m: &RationalMatrix) -> Result<bool, LieError> {
    if m.rows() == 0 && m.cols() == 0 {
        return Ok(true);
    }
    if !m.is_symmetric() {
        return Ok(false);
    }
    let minors = linalg::leading_principal_minors(m)?;
    Ok(minors.len() == m.rows()
        && minors
            .iter()
            .enumerate()
            .all(|(k, minor)| if k % 2 == 0 { minor.is_negative() } else { minor.is_positive() }))
}

/// Minimum over seeded random elements `x` of `dim ker ad_x`.
///
/// Trials are drawn from one seeded stream, so a run with more trials sees a
/// superset of the samples and can only report a smaller or equal value.
pub fn generic_rank(l: &LieAlgebraBasis, trials: usize, seed: u64) -> Result<usize, LieError> {
    if trials < 3 {
        return Err(LieError::InvalidArgument(format!("generic_rank needs at least 3 trials, got {trials}")));
    }
    let d = l.dim();
    if d == 0 {
        return Ok(0);
    }
    let mut rng = seeded_rng(seed);
    let mut best = d;
    for _ in 0..trials {
        let x = random_coeffs(&mut rng, d);
        let kernel = d - linalg::rank(&l.ad(&x))?;
        best = best.min(kernel);
    }
    Ok(best)
}
