//! Arithmetic in a binary extension field realized as residues modulo a
//! fixed irreducible polynomial, plus the projective line point type.
//!
//! This reuses the packed polynomial arithmetic with reduction after
//! every multiplication; inversion is by the extended Euclidean
//! algorithm.

use crate::gf2poly::{mod_mul, mod_square, BitPoly};
use crate::irreducibility::is_irreducible;

use super::ThetaGraphError;

/// An element of a degree-n extension field: a residue of degree < n.
/// The modulus lives in the enclosing `Field`, which all operations
/// take as context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    residue: BitPoly,
}

impl FieldElem {
    pub fn residue(&self) -> &BitPoly {
        &self.residue
    }

    /// The residue's bit pattern; total for the desk-scale fields here.
    pub fn to_bits(&self) -> u64 {
        self.residue.to_u64().expect("residue fits one limb")
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
}

/// A point of the projective line: a field element or the point at
/// infinity. A field of degree n has exactly 2^n + 1 of these.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(FieldElem),
    Infinity,
}

/// A binary field of degree n with a fixed irreducible modulus.
#[derive(Debug, Clone)]
pub struct Field {
    n: usize,
    modulus: BitPoly,
}

impl Field {
    /// Field with the default modulus: the hex-lexicographically
    /// smallest irreducible of degree n (any irreducible modulus gives
    /// an isomorphic field, this one makes runs reproducible).
    pub fn new(n: usize) -> Result<Field, ThetaGraphError> {
        if n == 0 || n > 63 {
            return Err(ThetaGraphError::DegreeTooLarge { n, cap: 63 });
        }
        Ok(Field {
            n,
            modulus: smallest_irreducible(n),
        })
    }

    /// Field with an explicit modulus, which must be irreducible.
    pub fn with_modulus(modulus: BitPoly) -> Result<Field, ThetaGraphError> {
        let Some(n) = modulus.degree().filter(|&d| d >= 1) else {
            return Err(ThetaGraphError::BadModulus {
                modulus,
                reason: "degree must be at least 1",
            });
        };
        if !is_irreducible(&modulus) {
            return Err(ThetaGraphError::BadModulus {
                modulus,
                reason: "reducible",
            });
        }
        Ok(Field { n, modulus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &BitPoly {
        &self.modulus
    }

    /// Number of elements, 2^n.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            residue: BitPoly::zero(),
        }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem {
            residue: BitPoly::one(),
        }
    }

    /// Element from a residue bit pattern < 2^n.
    pub fn elem_from_bits(&self, bits: u64) -> FieldElem {
        assert!(bits < self.order(), "residue out of range");
        FieldElem {
            residue: BitPoly::from_u64(bits),
        }
    }

    /// Element from an arbitrary polynomial, reduced modulo the modulus.
    pub fn elem_from_poly(&self, p: &BitPoly) -> FieldElem {
        FieldElem {
            residue: p.rem(&self.modulus).expect("nonzero modulus"),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            residue: a.residue.add(&b.residue),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            residue: mod_mul(&a.residue, &b.residue, &self.modulus),
        }
    }

    pub fn square(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            residue: mod_square(&a.residue, &self.modulus),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        a.residue
            .inv_mod(&self.modulus)
            .map(|residue| FieldElem { residue })
    }

    /// The map alpha -> alpha + 1/alpha on the projective line, with 0
    /// and infinity both sent to infinity.
    pub fn theta(&self, p: &ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Infinity => ProjPoint::Infinity,
            ProjPoint::Finite(a) => match self.inv(a) {
                None => ProjPoint::Infinity,
                Some(inv) => ProjPoint::Finite(self.add(a, &inv)),
            },
        }
    }

    /// Absolute trace: the sum of alpha^(2^i) for 0 <= i < n, always 0
    /// or 1.
    pub fn trace(&self, a: &FieldElem) -> bool {
        let mut acc = a.clone();
        let mut power = a.clone();
        for _ in 1..self.n {
            power = self.square(&power);
            acc = self.add(&acc, &power);
        }
        debug_assert!(acc.residue.is_zero() || acc.residue.is_one());
        acc.residue.is_one()
    }

    /// Evaluates a binary polynomial at a field element (Horner).
    pub fn eval(&self, f: &BitPoly, at: &FieldElem) -> FieldElem {
        let Some(deg) = f.degree() else {
            return self.zero();
        };
        let mut acc = self.zero();
        for i in (0..=deg).rev() {
            acc = self.mul(&acc, at);
            if f.coeff(i) {
                acc = self.add(&acc, &self.one());
            }
        }
        acc
    }

    /// Minimal polynomial of an element: the product of x + c over the
    /// distinct Frobenius conjugates c of the element. Its degree
    /// divides n, with equality exactly when the element generates the
    /// field over the prime field.
    pub fn min_poly(&self, a: &FieldElem) -> BitPoly {
        let mut conjugates = vec![a.clone()];
        let mut next = self.square(a);
        while next != *a {
            conjugates.push(next.clone());
            next = self.square(&next);
        }
        // Multiply out with coefficients in the field; the result is
        // fixed by Frobenius, so every coefficient lands in {0, 1}.
        let mut coeffs = vec![self.one()];
        for c in &conjugates {
            let mut out = vec![self.zero(); coeffs.len() + 1];
            for (i, k) in coeffs.iter().enumerate() {
                out[i + 1] = self.add(&out[i + 1], k);
                let prod = self.mul(c, k);
                out[i] = self.add(&out[i], &prod);
            }
            coeffs = out;
        }
        let mut limbs = vec![0u64; coeffs.len() / 64 + 1];
        for (i, k) in coeffs.iter().enumerate() {
            if k.residue.is_one() {
                limbs[i / 64] |= 1 << (i % 64);
            } else {
                assert!(
                    k.residue.is_zero(),
                    "minimal polynomial left the prime field"
                );
            }
        }
        BitPoly::from_limbs(limbs)
    }

    /// All field elements in residue bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|bits| self.elem_from_bits(bits))
    }
}

/// The hex-lexicographically smallest irreducible of degree n.
pub fn smallest_irreducible(n: usize) -> BitPoly {
    assert!((1..=63).contains(&n));
    (1u64 << n..2u64 << n)
        .map(BitPoly::from_u64)
        .find(is_irreducible)
        .expect("irreducibles exist in every degree")
}
