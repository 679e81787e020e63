//! The Q-transform f -> x^n * f(x + 1/x) and the four-letter type
//! classification of monic irreducible polynomials.
//!
//! For f of degree n the transform has degree 2n and is always
//! self-reciprocal. The type letter is read off the coefficients of
//! x^(n-1) and x: (1,1) -> A, (0,1) -> B, (1,0) -> C, (0,0) -> D.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::gf2poly::BitPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QTransformError {
    #[error("operation requires degree >= 1")]
    DegreeZero,
    #[error(
        "coefficient identity violated for {f}: a_(n-1)={a_subleading}, \
         b_(2n-1)={b_subleading}, b_1={b_linear} (implementation bug)"
    )]
    LemmaViolated {
        f: BitPoly,
        a_subleading: bool,
        b_subleading: bool,
        b_linear: bool,
    },
}

/// Type letter determined by the coefficient pair (a_(n-1), a_1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLetter::A => write!(f, "A"),
            TypeLetter::B => write!(f, "B"),
            TypeLetter::C => write!(f, "C"),
            TypeLetter::D => write!(f, "D"),
        }
    }
}

/// Classification of a degree-n polynomial, with the degree profile
/// n = 2^l * m (m odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolyType {
    pub letter: TypeLetter,
    pub n: usize,
    pub l: u32,
    pub m: usize,
}

impl fmt::Display for PolyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.letter, self.n)
    }
}

/// Report for the b_(2n-1) = b_1 = a_(n-1) coefficient identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientLemmaReport {
    /// a_(n-1) of the input.
    pub a_subleading: bool,
    /// b_(2n-1) of the transform.
    pub b_subleading: bool,
    /// b_1 of the transform.
    pub b_linear: bool,
}

/// x^n * f(x + 1/x), built as sum of a_i * (x^2+1)^i * x^(n-i) with an
/// incrementally maintained power of x^2+1. The Laurent expansion route
/// is kept out of the production path and lives in the test oracles.
pub fn q_transform(f: &BitPoly) -> Result<BitPoly, QTransformError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(QTransformError::DegreeZero)?;
    let base: BitPoly = "x^2+1".parse().expect("constant");
    let mut acc = BitPoly::zero();
    let mut power = BitPoly::one();
    for i in 0..=n {
        if f.coeff(i) {
            acc = acc.add(&power.shl(n - i));
        }
        if i < n {
            power = power.mul(&base);
        }
    }
    debug_assert_eq!(acc.degree(), Some(2 * n));
    Ok(acc)
}

/// Reads the coefficients of x^(n-1) and x and returns the matching
/// letter plus the (l, m) profile of n.
///
/// For n = 1 the two indices address bits 0 and 1, so x+1 comes out as
/// (A,1) and x as (B,1); for n = 2 they are the same bit, so only A and
/// D occur. Both are consequences of the definition, not extra rules.
pub fn classify(f: &BitPoly) -> Result<PolyType, QTransformError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(QTransformError::DegreeZero)?;
    let letter = match (f.coeff(n - 1), f.coeff(1)) {
        (true, true) => TypeLetter::A,
        (false, true) => TypeLetter::B,
        (true, false) => TypeLetter::C,
        (false, false) => TypeLetter::D,
    };
    let l = n.trailing_zeros();
    Ok(PolyType {
        letter,
        n,
        l,
        m: n >> l,
    })
}

/// Computes g = f^Q and checks b_(2n-1) = b_1 = a_(n-1), returning the
/// coefficient triple. A violation signals an implementation bug, since
/// the identity is a theorem.
pub fn check_coefficient_lemma(f: &BitPoly) -> Result<CoefficientLemmaReport, QTransformError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(QTransformError::DegreeZero)?;
    let g = q_transform(f)?;
    let report = CoefficientLemmaReport {
        a_subleading: f.coeff(n - 1),
        b_subleading: g.coeff(2 * n - 1),
        b_linear: g.coeff(1),
    };
    if report.b_subleading != report.a_subleading || report.b_linear != report.a_subleading {
        return Err(QTransformError::LemmaViolated {
            f: f.clone(),
            a_subleading: report.a_subleading,
            b_subleading: report.b_subleading,
            b_linear: report.b_linear,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::irreducibles_of_degree;

    fn p(s: &str) -> BitPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_transform_examples() {
        assert_eq!(q_transform(&p("x")).unwrap(), p("x^2+1"));
        assert_eq!(q_transform(&p("x^2+x+1")).unwrap(), p("x^4+x^3+x^2+x+1"));
        assert_eq!(q_transform(&p("x^3+x+1")).unwrap(), p("x^6+x^3+1"));
        assert_eq!(q_transform(&p("x^3+x^2+1")).unwrap(), p("0x7f"));
        assert_eq!(
            q_transform(&BitPoly::one()),
            Err(QTransformError::DegreeZero)
        );
    }

    #[test]
    fn classify_examples() {
        let t = classify(&p("x^3+x+1")).unwrap();
        assert_eq!((t.letter, t.n, t.l, t.m), (TypeLetter::B, 3, 0, 3));
        let t = classify(&p("x^3+x^2+1")).unwrap();
        assert_eq!((t.letter, t.n, t.l, t.m), (TypeLetter::C, 3, 0, 3));
        let t = classify(&p("x^6+x^3+1")).unwrap();
        assert_eq!((t.letter, t.n, t.l, t.m), (TypeLetter::D, 6, 1, 3));
        let t = classify(&p("x^2+x+1")).unwrap();
        assert_eq!((t.letter, t.n, t.l, t.m), (TypeLetter::A, 2, 1, 1));
        // Degree 1: x+1 is (A,1) and x is (B,1).
        assert_eq!(classify(&p("x+1")).unwrap().letter, TypeLetter::A);
        assert_eq!(classify(&p("x")).unwrap().letter, TypeLetter::B);
    }

    #[test]
    fn degree_two_only_types_a_and_d() {
        for bits in 4u64..8 {
            let t = classify(&BitPoly::from_u64(bits)).unwrap();
            assert!(matches!(t.letter, TypeLetter::A | TypeLetter::D));
        }
    }

    #[test]
    fn coefficient_lemma_examples() {
        let r = check_coefficient_lemma(&p("x^3+x^2+1")).unwrap();
        assert_eq!(
            (r.a_subleading, r.b_subleading, r.b_linear),
            (true, true, true)
        );
        let r = check_coefficient_lemma(&p("x^3+x+1")).unwrap();
        assert_eq!(
            (r.a_subleading, r.b_subleading, r.b_linear),
            (false, false, false)
        );
        let r = check_coefficient_lemma(&p("x+1")).unwrap();
        assert_eq!(
            (r.a_subleading, r.b_subleading, r.b_linear),
            (true, true, true)
        );
    }

    #[test]
    fn transform_doubles_degree_and_is_self_reciprocal() {
        for bits in 2u64..2048 {
            let f = BitPoly::from_u64(bits);
            let g = q_transform(&f).unwrap();
            assert_eq!(g.degree(), Some(2 * f.degree().unwrap()));
            assert!(g.is_self_reciprocal(), "f = {}", f.to_hex_string());
        }
    }

    #[test]
    fn type_a_transforms_stay_irreducible_small() {
        // The type-A doubling step at desk scale; the exhaustive sweep
        // lives in the verify suites.
        use crate::irreducibility::is_irreducible;
        for d in 2..=8usize {
            for f in irreducibles_of_degree(d) {
                if classify(&f).unwrap().letter == TypeLetter::A {
                    let g = q_transform(&f).unwrap();
                    assert!(is_irreducible(&g));
                    assert!(g.is_self_reciprocal());
                }
            }
        }
    }
}
