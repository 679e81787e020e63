//! Equal-degree splitting of a reducible Q-transform into its reciprocal
//! pair of irreducible degree-n factors.
//!
//! Exactly two conjugate factors of known equal degree exist, so no
//! distinct-degree stage is needed: draw a random residue u mod g, form
//! the trace map T(u) = sum of u^(2^i) for i < n, and take gcd(g, T(u)).
//! Modulo each factor the trace is 0 or 1, so a draw separates the
//! factors with probability 1/2.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::gf2poly::{mod_square, BitPoly};
use crate::irreducibility::is_irreducible;

/// Hard cap on random draws. Each draw succeeds with probability 1/2 on
/// valid input, so reaching the cap means the input violated the
/// contract in a way the cheaper checks did not catch.
pub const DRAW_CAP: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("expected degree {expected}, got {actual:?}")]
    BadDegree {
        expected: usize,
        actual: Option<usize>,
    },
    #[error("input is irreducible and cannot be split")]
    NotSplittable,
    #[error("no separating trace found in {DRAW_CAP} draws (invalid input?)")]
    DrawCapExceeded,
    #[error("input is not a product of a reciprocal pair of irreducible degree-n polynomials")]
    NotReciprocalPair,
}

/// A reciprocal pair of irreducible factors, ordered canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalPair {
    pub g1: BitPoly,
    pub g2: BitPoly,
    /// g1 is the hex-lexicographically smaller factor.
    pub canonical: bool,
}

/// Splits g = f^Q (f irreducible of degree n > 1, not of type (A,n))
/// into its reciprocal pair, with g1 the hex-smaller factor. The result
/// is independent of rng_seed thanks to the canonical ordering.
pub fn split_reciprocal_pair(
    g: &BitPoly,
    n: usize,
    rng_seed: u64,
) -> Result<ReciprocalPair, SplitError> {
    split_with_draw_count(g, n, rng_seed).map(|(pair, _)| pair)
}

/// Same as `split_reciprocal_pair`, also reporting how many random
/// draws were needed.
pub(crate) fn split_with_draw_count(
    g: &BitPoly,
    n: usize,
    rng_seed: u64,
) -> Result<(ReciprocalPair, usize), SplitError> {
    if n == 0 || g.degree() != Some(2 * n) {
        return Err(SplitError::BadDegree {
            expected: 2 * n,
            actual: g.degree(),
        });
    }
    if is_irreducible(g) {
        return Err(SplitError::NotSplittable);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for draws in 1..=DRAW_CAP {
        let u = random_residue(&mut rng, 2 * n);
        let t = trace_map(&u, n, g);
        let d = match t.is_zero() {
            true => continue, // gcd would be g itself
            false => g.gcd(&t).expect("g nonzero"),
        };
        let d_deg = d.degree().expect("gcd of nonzero");
        if d_deg == 0 || d_deg == 2 * n {
            continue;
        }
        // A proper divisor came out; on contract-violating input it can
        // still fail the pair shape, which we surface explicitly.
        if d_deg != n {
            return Err(SplitError::NotReciprocalPair);
        }
        let (quotient, remainder) = g.divrem(&d).expect("d nonzero");
        debug_assert!(remainder.is_zero());
        let reversed = d.reciprocal().expect("d nonzero");
        if quotient != reversed || quotient == d || !is_irreducible(&d) {
            return Err(SplitError::NotReciprocalPair);
        }
        let (g1, g2) = if d < quotient {
            (d, quotient)
        } else {
            (quotient, d)
        };
        return Ok((
            ReciprocalPair {
                g1,
                g2,
                canonical: true,
            },
            draws,
        ));
    }
    Err(SplitError::DrawCapExceeded)
}

/// T(u) = sum of u^(2^i) for 0 <= i < n, reduced mod g.
fn trace_map(u: &BitPoly, n: usize, g: &BitPoly) -> BitPoly {
    let mut acc = u.clone();
    let mut power = u.clone();
    for _ in 1..n {
        power = mod_square(&power, g);
        acc = acc.add(&power);
    }
    acc
}

/// Uniform residue of degree < bits.
fn random_residue(rng: &mut ChaCha8Rng, bits: usize) -> BitPoly {
    let words = bits.div_ceil(64);
    let mut limbs = vec![0u64; words];
    for limb in &mut limbs {
        *limb = rng.next_u64();
    }
    let top = bits % 64;
    if top != 0 {
        limbs[words - 1] &= (1u64 << top) - 1;
    }
    BitPoly::from_limbs(limbs)
}
