//! Elimination modulo a word-sized prime, used as a fast probe whose answers
//! are only trusted after exact certification.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{certify_nullspace, exact, int, rat, LinalgError, Rational, RationalMatrix};
use crate::cancel::CancelToken;

const MIN_PRIME: u64 = 1 << 30;
const MAX_PRIME: u64 = 1 << 32;
const PRIME_ATTEMPTS: usize = 3;
/// Fixed so that the probe, and any fallback it triggers, is reproducible.
const PROBE_SEED: u64 = 0x0c7a_0d1c_5eed;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform random prime in `(2^30, 2^31)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(MIN_PRIME..MIN_PRIME << 1) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn check_prime(m: &RationalMatrix, prime: u64) -> Result<(), LinalgError> {
    if !(MIN_PRIME..MAX_PRIME).contains(&prime) || !is_prime(prime) {
        return Err(LinalgError::InvalidPrime(prime));
    }
    let bp = BigInt::from(prime);
    if m.nonzeros().any(|(_, _, x)| (x.denom() % &bp).is_zero()) {
        return Err(LinalgError::PrimeDividesDenominator { prime });
    }
    Ok(())
}

/// Incrementally maintained reduced row echelon form modulo `p`.
///
/// Pivot rows are monic and vanish on every other pivot column, so reducing
/// an incoming row only needs the incoming row's own entries at pivot columns.
struct ModularEchelon {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivot_cols: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl ModularEchelon {
    fn new(cols: usize, p: u64) -> Self {
        Self {
            p,
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn push(&mut self, sparse: &[(usize, u64)]) {
        let p = self.p;
        let mut dense = vec![0u64; self.cols];
        for &(c, v) in sparse {
            dense[c] = v;
        }
        for &(c, v) in sparse {
            if v == 0 {
                continue;
            }
            if let Some(k) = self.pivot_of_col[c] {
                let factor = p - v;
                for (d, &r) in dense.iter_mut().zip(&self.rows[k]) {
                    if r != 0 {
                        *d = (*d + factor * r) % p;
                    }
                }
            }
        }
        let Some(lead) = dense.iter().position(|&x| x != 0) else {
            return;
        };
        let inv = inv_mod(dense[lead], p);
        for d in dense.iter_mut() {
            *d = mul_mod(*d, inv, p);
        }
        for row in &mut self.rows {
            let v = row[lead];
            if v != 0 {
                let factor = p - v;
                for (x, &d) in row.iter_mut().zip(&dense) {
                    if d != 0 {
                        *x = (*x + factor * d) % p;
                    }
                }
            }
        }
        self.pivot_of_col[lead] = Some(self.rows.len());
        self.pivot_cols.push(lead);
        self.rows.push(dense);
    }

    fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        (0..self.cols)
            .filter(|&f| self.pivot_of_col[f].is_none())
            .map(|f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
                    v[pc] = (p - row[f]) % p;
                }
                v
            })
            .collect()
    }
}

fn modular_echelon(
    m: &RationalMatrix,
    p: u64,
    cancel: &CancelToken,
) -> Result<ModularEchelon, LinalgError> {
    let mut ech = ModularEchelon::new(m.cols(), p);
    for (i, row) in m.integer_rows_sparse().iter().enumerate() {
        if i % 256 == 0 {
            cancel.check().map_err(|_| LinalgError::Cancelled)?;
        }
        if row.is_empty() {
            continue;
        }
        let reduced: Vec<(usize, u64)> = row.iter().map(|(c, x)| (*c, reduce(x, p))).collect();
        ech.push(&reduced);
        if ech.rank() == m.cols() {
            break;
        }
    }
    Ok(ech)
}

/// Rank of `m` reduced modulo `prime`. Never exceeds the rational rank.
pub fn rank_modular_probe(m: &RationalMatrix, prime: u64) -> Result<usize, LinalgError> {
    m.check_nonempty()?;
    check_prime(m, prime)?;
    Ok(modular_echelon(m, prime, &CancelToken::never())?.rank())
}

/// Recovers `n/d` with `|n|, d <= sqrt(p/2)` from `a = n/d mod p`.
pub fn rational_reconstruction(a: u64, p: u64) -> Option<(i64, i64)> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    if num_integer::gcd(n, d) != 1 {
        return None;
    }
    Some((n as i64, d as i64))
}

fn lift(v: &[u64], p: u64) -> Option<Vec<Rational>> {
    v.iter()
        .map(|&x| match x {
            0 => Some(int(0)),
            _ => rational_reconstruction(x, p).map(|(n, d)| rat(n, d)),
        })
        .collect()
}

/// Nullspace computed modulo random primes, lifted to the rationals and
/// certified exactly. The returned basis is in canonical reduced echelon form.
///
/// The lifted vectors are independent and lie in the rational nullspace, and
/// there are exactly as many as the nullity modulo `p`, which bounds the
/// rational nullity from above, so a certified lift is the full nullspace.
pub(crate) fn certified_nullspace(
    m: &RationalMatrix,
    cancel: &CancelToken,
) -> Result<Vec<Vec<Rational>>, LinalgError> {
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut last_err = LinalgError::Certification("no prime attempted".into());
    for _ in 0..PRIME_ATTEMPTS {
        let p = random_prime(&mut rng);
        if let Err(e) = check_prime(m, p) {
            last_err = e;
            continue;
        }
        let ech = modular_echelon(m, p, cancel)?;
        let null_mod = ech.nullspace();
        if null_mod.is_empty() {
            // Full column rank mod p implies full column rank over Q.
            return Ok(Vec::new());
        }
        let canonical = rref_mod(null_mod, p);
        let Some(lifted) = canonical.iter().map(|v| lift(v, p)).collect::<Option<Vec<_>>>() else {
            last_err = LinalgError::Certification(format!("rational reconstruction failed mod {p}"));
            continue;
        };
        cancel.check().map_err(|_| LinalgError::Cancelled)?;
        match certify_nullspace(m, &lifted) {
            Ok(()) => return Ok(exact::rref(&lifted)),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Reduced row echelon form modulo `p`, zero rows dropped, rows ordered by pivot.
fn rref_mod(vectors: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut ech = ModularEchelon::new(cols, p);
    for v in &vectors {
        let sparse: Vec<(usize, u64)> = v.iter().copied().enumerate().filter(|(_, x)| *x != 0).collect();
        ech.push(&sparse);
    }
    let mut rows: Vec<(usize, Vec<u64>)> = ech.pivot_cols.into_iter().zip(ech.rows).collect();
    rows.sort_by_key(|(c, _)| *c);
    rows.into_iter().map(|(_, r)| r).collect()
}
