//! Shared test oracles, kept independent of the production code paths
//! they are used to check.

use qseq::gf2poly::BitPoly;

/// A Laurent polynomial over the two-element field: `bits * x^low`,
/// normalized so that `bits` has a nonzero constant term (or is zero).
#[derive(Clone, Debug)]
pub struct Laurent {
    low: i64,
    bits: BitPoly,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            bits: BitPoly::zero(),
        }
    }

    pub fn new(low: i64, bits: BitPoly) -> Self {
        Laurent { low, bits }.normalized()
    }

    fn normalized(self) -> Self {
        let Some(deg) = self.bits.degree() else {
            return Laurent::zero();
        };
        let shift = (0..=deg).find(|&i| self.bits.coeff(i)).expect("nonzero");
        if shift == 0 {
            return self;
        }
        let (quotient, rem) = self.bits.divrem(&BitPoly::monomial(shift)).unwrap();
        assert!(rem.is_zero());
        Laurent {
            low: self.low + shift as i64,
            bits: quotient,
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.bits.is_zero() {
            return other.clone();
        }
        if other.bits.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let a = self.bits.shl((self.low - low) as usize);
        let b = other.bits.shl((other.low - low) as usize);
        Laurent {
            low,
            bits: a.add(&b),
        }
        .normalized()
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        Laurent {
            low: self.low + other.low,
            bits: self.bits.mul(&other.bits),
        }
        .normalized()
    }
}

/// Independent route for the degree-doubling transform: expand
/// f(x + 1/x) over Laurent polynomials, then shift by x^n. The
/// production path stays in plain polynomial arithmetic instead.
pub fn q_transform_oracle(f: &BitPoly) -> BitPoly {
    let n = f.degree().expect("degree >= 1");
    let base = Laurent::new(-1, "x^2+1".parse().unwrap()); // x + 1/x
    let mut power = Laurent::new(0, BitPoly::one());
    let mut acc = Laurent::zero();
    for i in 0..=n {
        if f.coeff(i) {
            acc = acc.add(&power);
        }
        power = power.mul(&base);
    }
    let low = acc.low + n as i64;
    assert!(low >= 0, "transform left the polynomial ring");
    acc.bits.shl(low as usize)
}

/// Trial-division factoring of a product of exactly two nontrivial
/// factors: the least divisor in hex order and its cofactor.
pub fn split_by_trial_division(g: &BitPoly) -> (BitPoly, BitPoly) {
    let verdict = qseq::is_irreducible_naive(g).expect("degree in oracle range");
    let witness = verdict.witness.expect("input must be reducible");
    let (cofactor, rem) = g.divrem(&witness).unwrap();
    assert!(rem.is_zero());
    (witness, cofactor)
}
