//! Seeded generation of random test elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{int, Rational};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Coefficients are drawn uniformly from the integers in this range.
pub const COEFF_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coeffs<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| int(rng.gen_range(COEFF_RANGE))).collect()
}

/// Like [`random_coeffs`] but never the zero vector.
pub fn random_nonzero_coeffs<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    loop {
        let v = random_coeffs(rng, len);
        if v.iter().any(|x| *x != int(0)) {
            return v;
        }
    }
}
