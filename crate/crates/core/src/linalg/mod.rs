//! Exact linear algebra over the rationals.
//!
//! Small systems are eliminated fraction-free over the integers. Systems with
//! more than [`MODULAR_ROW_THRESHOLD`] rows are first solved modulo a random
//! 31-bit prime; the candidate nullspace is lifted by rational reconstruction
//! and certified by exact substitution, falling back to full exact
//! elimination when certification fails.

mod exact;
mod matrix;
mod modular;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use exact::{leading_principal_minors, rref};
pub use matrix::RationalMatrix;
pub use modular::{is_prime, random_prime, rank_modular_probe, rational_reconstruction};

use crate::cancel::CancelToken;

/// Exact rational scalar. Always normalized (lowest terms, positive denominator).
pub type Rational = BigRational;

/// Row count above which the modular probe is tried before exact elimination.
pub const MODULAR_ROW_THRESHOLD: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("prime {prime} divides a denominator; retry with another prime")]
    PrimeDividesDenominator { prime: u64 },
    #[error("{0} is not a prime above 2^30")]
    InvalidPrime(u64),
    #[error("nullspace certification failed: {0}")]
    Certification(String),
    #[error("computation cancelled")]
    Cancelled,
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rank of `m` over the rationals.
pub fn rank(m: &RationalMatrix) -> Result<usize, LinalgError> {
    rank_with_cancel(m, &CancelToken::never())
}

pub fn rank_with_cancel(m: &RationalMatrix, cancel: &CancelToken) -> Result<usize, LinalgError> {
    m.check_nonempty()?;
    if m.rows() > MODULAR_ROW_THRESHOLD {
        // The certified nullspace pins the rank exactly.
        let basis = nullspace_basis_with_cancel(m, cancel)?;
        return Ok(m.cols() - basis.len());
    }
    Ok(exact::echelon(&m.integer_rows(), m.cols(), cancel)?.pivots.len())
}

/// Basis of the right nullspace `{v : m v = 0}`.
///
/// The basis is returned in reduced row echelon form (each vector has a
/// leading 1 in a column where every other basis vector is 0), so the result
/// depends only on the nullspace itself. Every vector is checked by exact
/// substitution before return.
pub fn nullspace_basis(m: &RationalMatrix) -> Result<Vec<Vec<Rational>>, LinalgError> {
    nullspace_basis_with_cancel(m, &CancelToken::never())
}

pub fn nullspace_basis_with_cancel(
    m: &RationalMatrix,
    cancel: &CancelToken,
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    m.check_nonempty()?;
    if m.rows() > MODULAR_ROW_THRESHOLD {
        match modular::certified_nullspace(m, cancel) {
            Ok(basis) => return Ok(basis),
            Err(LinalgError::Cancelled) => return Err(LinalgError::Cancelled),
            Err(_) => {}
        }
    }
    let basis = exact_nullspace(m, cancel)?;
    certify_nullspace(m, &basis)?;
    Ok(basis)
}

/// Nullspace through exact elimination only, whatever the matrix size.
pub fn nullspace_basis_exact(m: &RationalMatrix) -> Result<Vec<Vec<Rational>>, LinalgError> {
    m.check_nonempty()?;
    let basis = exact_nullspace(m, &CancelToken::never())?;
    certify_nullspace(m, &basis)?;
    Ok(basis)
}

fn exact_nullspace(
    m: &RationalMatrix,
    cancel: &CancelToken,
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    let ech = exact::echelon(&m.integer_rows(), m.cols(), cancel)?;
    let reduced = exact::back_substitute(ech, cancel)?;
    let raw = reduced.nullspace();
    Ok(rref(&raw))
}

/// Checks `m v = 0` for every vector exactly.
pub fn certify_nullspace(m: &RationalMatrix, basis: &[Vec<Rational>]) -> Result<(), LinalgError> {
    let rows = m.integer_rows_sparse();
    for (idx, v) in basis.iter().enumerate() {
        if v.len() != m.cols() {
            return Err(LinalgError::Certification(format!(
                "vector {idx} has length {} but matrix has {} columns",
                v.len(),
                m.cols()
            )));
        }
        let (scaled, _) = clear_denominators(v);
        for (r, row) in rows.iter().enumerate() {
            let dot: BigInt = row.iter().map(|(c, a)| a * &scaled[*c]).sum();
            if dot != BigInt::from(0) {
                return Err(LinalgError::Certification(format!(
                    "vector {idx} fails row {r}"
                )));
            }
        }
    }
    Ok(())
}

/// Scales a rational vector to a primitive-free integer vector; returns the
/// integers and the common denominator used.
pub(crate) fn clear_denominators(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    (ints, lcm)
}
