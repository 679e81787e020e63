//! Exhaustive empirical verification of the type/transform theorems and
//! the sequence bound, over every irreducible polynomial up to a given
//! degree.
//!
//! Every suite returns its counterexamples (sorted by hex encoding, so
//! reports are order-independent even though candidates are checked in
//! parallel). A green run across all suites is the acceptance gate for
//! the whole construction.

use rayon::prelude::*;

use crate::gf2poly::BitPoly;
use crate::irreducibility::{irreducibles_of_degree, is_irreducible};
use crate::qtransform::{check_coefficient_lemma, classify, q_transform, TypeLetter};
use crate::recsplit::split_reciprocal_pair;
use crate::seqgen::initial_segment;

/// Outcome of one exhaustive suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Candidates actually exercised (skipped types are not counted).
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

enum Check {
    Skipped,
    Passed,
    Failed(String),
}

/// Runs `check` over every irreducible polynomial of degree 2..=max.
fn sweep(
    name: &'static str,
    max_degree: usize,
    check: impl Fn(&BitPoly) -> Check + Sync,
) -> SuiteReport {
    let mut checked = 0;
    let mut failures: Vec<(BitPoly, String)> = Vec::new();
    for degree in 2..=max_degree {
        let outcomes: Vec<(BitPoly, Check)> = irreducibles_of_degree(degree)
            .into_par_iter()
            .map(|f| {
                let outcome = check(&f);
                (f, outcome)
            })
            .collect();
        for (f, outcome) in outcomes {
            match outcome {
                Check::Skipped => {}
                Check::Passed => checked += 1,
                Check::Failed(msg) => {
                    checked += 1;
                    failures.push((f, msg));
                }
            }
        }
    }
    failures.sort_by(|a, b| a.0.cmp(&b.0));
    SuiteReport {
        name,
        checked,
        counterexamples: failures.into_iter().map(|(_, msg)| msg).collect(),
    }
}

/// The transform of an irreducible f (constant term 1) is irreducible
/// exactly when a_1 = 1.
pub fn transform_irreducibility(max_degree: usize) -> SuiteReport {
    sweep("transform_irreducible_iff_a1", max_degree, |f| {
        let got = is_irreducible(&q_transform(f).expect("degree >= 1"));
        let want = f.coeff(1);
        if got == want {
            Check::Passed
        } else {
            Check::Failed(format!(
                "{}: a_1={} but transform irreducible={got}",
                f.to_hex_string(),
                want as u8
            ))
        }
    })
}

/// Type-A inputs transform to self-reciprocal irreducibles of twice the
/// degree.
pub fn type_a_doubling(max_degree: usize) -> SuiteReport {
    sweep("type_a_doubling", max_degree, |f| {
        let t = classify(f).expect("degree >= 1");
        if t.letter != TypeLetter::A {
            return Check::Skipped;
        }
        let g = q_transform(f).expect("degree >= 1");
        if !is_irreducible(&g) {
            Check::Failed(format!("{}: transform is reducible", f.to_hex_string()))
        } else if !g.is_self_reciprocal() {
            Check::Failed(format!(
                "{}: transform is not self-reciprocal",
                f.to_hex_string()
            ))
        } else if g.degree() != Some(2 * t.n) {
            Check::Failed(format!(
                "{}: transform degree is not doubled",
                f.to_hex_string()
            ))
        } else {
            Check::Passed
        }
    })
}

/// b_(2n-1) = b_1 = a_(n-1) for every transform.
pub fn transform_coefficients(max_degree: usize) -> SuiteReport {
    sweep(
        "transform_outer_coefficients",
        max_degree,
        |f| match check_coefficient_lemma(f) {
            Ok(_) => Check::Passed,
            Err(e) => Check::Failed(e.to_string()),
        },
    )
}

/// Coefficient pattern of every successful split: with b_(2n-1) = b_1
/// = 0 each factor has a_(n-1) = a_1, with 1 the factor types are
/// {B, C}.
pub fn split_pattern(max_degree: usize, rng_seed: u64) -> SuiteReport {
    sweep("split_coefficient_pattern", max_degree, move |f| {
        let t = classify(f).expect("degree >= 1");
        if !matches!(t.letter, TypeLetter::C | TypeLetter::D) {
            return Check::Skipped; // those transforms do not split
        }
        let g = q_transform(f).expect("degree >= 1");
        let pair = match split_reciprocal_pair(&g, t.n, rng_seed) {
            Ok(pair) => pair,
            Err(e) => return Check::Failed(format!("{}: split failed: {e}", f.to_hex_string())),
        };
        let b = g.coeff(1);
        if g.coeff(2 * t.n - 1) != b {
            return Check::Failed(format!(
                "{}: transform has unequal outer coefficients",
                f.to_hex_string()
            ));
        }
        if b {
            let letters = [
                classify(&pair.g1).expect("degree >= 1").letter,
                classify(&pair.g2).expect("degree >= 1").letter,
            ];
            if !(letters.contains(&TypeLetter::B) && letters.contains(&TypeLetter::C)) {
                return Check::Failed(format!(
                    "{}: b=1 but factor types are {}/{}",
                    f.to_hex_string(),
                    letters[0],
                    letters[1]
                ));
            }
        } else {
            for factor in [&pair.g1, &pair.g2] {
                let d = factor.degree().expect("degree n");
                if factor.coeff(d - 1) != factor.coeff(1) {
                    return Check::Failed(format!(
                        "{}: b=0 but factor {} has a_(n-1) != a_1",
                        f.to_hex_string(),
                        factor.to_hex_string()
                    ));
                }
            }
        }
        Check::Passed
    })
}

/// Type-B inputs (degree > 1) transform to type (D, 2n) irreducibles.
pub fn type_b_outcome(max_degree: usize) -> SuiteReport {
    sweep("type_b_transform_is_type_d", max_degree, |f| {
        let t = classify(f).expect("degree >= 1");
        if t.letter != TypeLetter::B {
            return Check::Skipped;
        }
        let g = q_transform(f).expect("degree >= 1");
        if !is_irreducible(&g) {
            return Check::Failed(format!("{}: transform is reducible", f.to_hex_string()));
        }
        let gt = classify(&g).expect("degree >= 1");
        if gt.letter != TypeLetter::D || gt.n != 2 * t.n {
            Check::Failed(format!(
                "{}: transform has type {gt}, expected (D,{})",
                f.to_hex_string(),
                2 * t.n
            ))
        } else {
            Check::Passed
        }
    })
}

/// Type-C transforms split into a reciprocal pair of types {B, C}.
pub fn type_c_outcome(max_degree: usize, rng_seed: u64) -> SuiteReport {
    sweep("type_c_split_types", max_degree, move |f| {
        let t = classify(f).expect("degree >= 1");
        if t.letter != TypeLetter::C {
            return Check::Skipped;
        }
        let g = q_transform(f).expect("degree >= 1");
        let pair = match split_reciprocal_pair(&g, t.n, rng_seed) {
            Ok(pair) => pair,
            Err(e) => return Check::Failed(format!("{}: split failed: {e}", f.to_hex_string())),
        };
        let mut letters = [
            classify(&pair.g1).expect("degree >= 1").letter,
            classify(&pair.g2).expect("degree >= 1").letter,
        ];
        letters.sort();
        if letters != [TypeLetter::B, TypeLetter::C] {
            return Check::Failed(format!(
                "{}: factor types {}/{}, expected B/C",
                f.to_hex_string(),
                letters[0],
                letters[1]
            ));
        }
        if pair.g2 != pair.g1.reciprocal().expect("nonzero") || pair.g1.mul(&pair.g2) != g {
            return Check::Failed(format!(
                "{}: factors are not a reciprocal pair recomposing the transform",
                f.to_hex_string()
            ));
        }
        Check::Passed
    })
}

/// Type-D transforms split into a reciprocal pair that is {A, A} or
/// {D, D}.
pub fn type_d_outcome(max_degree: usize, rng_seed: u64) -> SuiteReport {
    sweep("type_d_split_types", max_degree, move |f| {
        let t = classify(f).expect("degree >= 1");
        if t.letter != TypeLetter::D {
            return Check::Skipped;
        }
        let g = q_transform(f).expect("degree >= 1");
        let pair = match split_reciprocal_pair(&g, t.n, rng_seed) {
            Ok(pair) => pair,
            Err(e) => return Check::Failed(format!("{}: split failed: {e}", f.to_hex_string())),
        };
        let letters = (
            classify(&pair.g1).expect("degree >= 1").letter,
            classify(&pair.g2).expect("degree >= 1").letter,
        );
        let both_a = letters == (TypeLetter::A, TypeLetter::A);
        let both_d = letters == (TypeLetter::D, TypeLetter::D);
        if !(both_a || both_d) {
            return Check::Failed(format!(
                "{}: factor types {}/{}, expected A/A or D/D",
                f.to_hex_string(),
                letters.0,
                letters.1
            ));
        }
        if pair.g2 != pair.g1.reciprocal().expect("nonzero") || pair.g1.mul(&pair.g2) != g {
            return Check::Failed(format!(
                "{}: factors are not a reciprocal pair recomposing the transform",
                f.to_hex_string()
            ));
        }
        Check::Passed
    })
}

/// Every seed reaches type A within the degree-profile bound, all terms
/// are irreducible, and degrees double from the break index on.
pub fn sequence_bound(max_degree: usize, rng_seed: u64) -> SuiteReport {
    sweep("sequence_break_bound", max_degree, move |f| {
        let t = classify(f).expect("degree >= 1");
        let record = match initial_segment(f, rng_seed) {
            Ok(record) => record,
            Err(e) => {
                return Check::Failed(format!("{}: construction failed: {e}", f.to_hex_string()))
            }
        };
        let l = t.l as usize;
        let bound = match t.letter {
            TypeLetter::A => 0,
            TypeLetter::B => l + 2,
            TypeLetter::C => l + 3,
            TypeLetter::D => l + 2,
        };
        if record.s > bound {
            return Check::Failed(format!(
                "{}: type {} reached A at s={}, bound {bound}",
                f.to_hex_string(),
                t.letter,
                record.s
            ));
        }
        debug_assert!(record.s <= l + 3);
        if t.n % 2 == 1 && record.s > 3 {
            return Check::Failed(format!(
                "{}: odd degree but s={} > 3",
                f.to_hex_string(),
                record.s
            ));
        }
        if record.terms[record.s].poly_type.letter != TypeLetter::A {
            return Check::Failed(format!(
                "{}: term at the break index is not type A",
                f.to_hex_string()
            ));
        }
        for term in &record.terms {
            if !is_irreducible(&term.poly) {
                return Check::Failed(format!(
                    "{}: emitted term {} is reducible",
                    f.to_hex_string(),
                    term.poly.to_hex_string()
                ));
            }
        }
        // Two doubling steps past the break index.
        let mut prev = record.terms.last().expect("nonempty").poly.clone();
        for _ in 0..2 {
            let next = q_transform(&prev).expect("degree >= 1");
            if next.degree() != prev.degree().map(|d| 2 * d) {
                return Check::Failed(format!(
                    "{}: doubling step did not double the degree",
                    f.to_hex_string()
                ));
            }
            if !is_irreducible(&next) {
                return Check::Failed(format!(
                    "{}: doubled term {} is reducible",
                    f.to_hex_string(),
                    next.to_hex_string()
                ));
            }
            prev = next;
        }
        Check::Passed
    })
}

/// All suites in report order.
pub fn run_all(max_degree: usize, rng_seed: u64) -> Vec<SuiteReport> {
    vec![
        transform_irreducibility(max_degree),
        type_a_doubling(max_degree),
        transform_coefficients(max_degree),
        split_pattern(max_degree, rng_seed),
        type_b_outcome(max_degree),
        type_c_outcome(max_degree, rng_seed),
        type_d_outcome(max_degree, rng_seed),
        sequence_bound(max_degree, rng_seed),
    ]
}
