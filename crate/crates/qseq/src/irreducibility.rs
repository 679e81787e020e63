//! Irreducibility testing over the two-element field.
//!
//! Two routes are provided on purpose: the Rabin test is the production
//! path, and exhaustive trial division is the independent oracle used to
//! cross-validate it at small degree. The two must agree everywhere both
//! are defined.

use thiserror::Error;

use crate::gf2poly::{frobenius_power, BitPoly};

/// Trial division is exponential in the degree; it exists only for
/// cross-checks, so it is capped hard.
pub const NAIVE_DEGREE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrreducibilityError {
    #[error("irreducibility is undefined for constant polynomials")]
    DegreeZero,
    #[error("degree {degree} exceeds the trial-division cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
}

/// Which test produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rabin,
    Naive,
}

/// Outcome of an irreducibility test. A witness (a nontrivial factor) is
/// only ever produced by the trial-division oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub witness: Option<BitPoly>,
    pub method: Method,
}

/// Rabin's test: f of degree n is irreducible iff x^(2^n) = x (mod f)
/// and gcd(x^(2^(n/q)) - x, f) = 1 for every prime q dividing n.
pub fn is_irreducible_rabin(f: &BitPoly) -> Result<IrreducibilityVerdict, IrreducibilityError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(IrreducibilityError::DegreeZero)?;
    let verdict = |irreducible| IrreducibilityVerdict {
        irreducible,
        witness: None,
        method: Method::Rabin,
    };

    let x_mod_f = BitPoly::x().rem(f).expect("nonzero modulus");
    if frobenius_power(n, f) != x_mod_f {
        return Ok(verdict(false));
    }
    for q in prime_divisors(n) {
        let h = frobenius_power(n / q, f).add(&x_mod_f);
        // h = 0 means x^(2^(n/q)) = x mod f, so gcd(h, f) = f != 1.
        if !h.gcd(f).expect("f nonzero").is_one() {
            return Ok(verdict(false));
        }
    }
    Ok(verdict(true))
}

/// Trial division by every polynomial of degree 1..=deg/2, in increasing
/// hex order. Returns the least witness when the input is reducible.
pub fn is_irreducible_naive(f: &BitPoly) -> Result<IrreducibilityVerdict, IrreducibilityError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(IrreducibilityError::DegreeZero)?;
    if n > NAIVE_DEGREE_CAP {
        return Err(IrreducibilityError::DegreeTooLarge {
            degree: n,
            cap: NAIVE_DEGREE_CAP,
        });
    }
    for bits in 2u64..(2u64 << (n / 2)) {
        let candidate = BitPoly::from_u64(bits);
        if f.rem(&candidate).expect("nonzero divisor").is_zero() {
            return Ok(IrreducibilityVerdict {
                irreducible: false,
                witness: Some(candidate),
                method: Method::Naive,
            });
        }
    }
    Ok(IrreducibilityVerdict {
        irreducible: true,
        witness: None,
        method: Method::Naive,
    })
}

/// Convenience wrapper: Rabin verdict as a bare bool.
///
/// Requires deg f >= 1.
pub fn is_irreducible(f: &BitPoly) -> bool {
    is_irreducible_rabin(f)
        .expect("degree >= 1 required")
        .irreducible
}

/// All monic irreducible polynomials of the given degree, in increasing
/// hex order. Enumeration is by bit pattern, so the degree must fit u64.
pub fn irreducibles_of_degree(degree: usize) -> Vec<BitPoly> {
    assert!(
        (1..=32).contains(&degree),
        "exhaustive enumeration supports degrees 1..=32"
    );
    if degree == 1 {
        return vec![BitPoly::x(), "x+1".parse().unwrap()];
    }
    let lo = 1u64 << degree;
    // Degree >= 2: the constant term must be 1 (else x divides f) and the
    // weight must be odd (else x+1 divides f).
    (lo..2 * lo)
        .filter(|bits| bits & 1 == 1 && bits.count_ones() % 2 == 1)
        .map(BitPoly::from_u64)
        .filter(is_irreducible)
        .collect()
}

/// Distinct prime divisors of n by trial division; n here is a polynomial
/// degree, so it is small.
fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}
