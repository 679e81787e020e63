//! Construction of infinite sequences of binary irreducible polynomials
//! by repeated application of the transform f(x) -> x^n * f(x + 1/x),
//! together with the machinery to verify, at desk scale, every
//! structural fact the construction rests on.
//!
//! Starting from any irreducible seed of degree n = 2^l * m (m odd),
//! the generator produces an initial segment of at most l+3 steps and
//! then doubles the degree forever. The crate provides:
//!
//! - [`gf2poly`]: bit-packed arithmetic for binary polynomials, with
//!   interchangeable text encodings ("x^6+x^3+1" and "0x49");
//! - [`irreducibility`]: the Rabin test plus an independent
//!   trial-division oracle;
//! - [`qtransform`]: the degree-doubling transform and the four-letter
//!   type classification read off the coefficients of x^(n-1) and x;
//! - [`recsplit`]: trace-map splitting of a reducible transform into
//!   its reciprocal pair of equal-degree irreducible factors;
//! - [`seqgen`]: the sequence construction itself;
//! - [`thetagraph`]: the functional graph of alpha -> alpha + 1/alpha
//!   on the projective line, whose tree structure explains the bound;
//! - [`verify`]: exhaustive theorem suites used by the `qseq verify`
//!   subcommand and the acceptance tests.
//!
//! All values are immutable and all operations pure; everything can be
//! shared across threads freely.

pub mod gf2poly;
pub mod irreducibility;
pub mod qtransform;
pub mod recsplit;
pub mod seqgen;
pub mod thetagraph;
pub mod verify;

pub use gf2poly::BitPoly;
pub use irreducibility::{is_irreducible_naive, is_irreducible_rabin, IrreducibilityVerdict};
pub use qtransform::{classify, q_transform, PolyType, TypeLetter};
pub use recsplit::{split_reciprocal_pair, ReciprocalPair};
pub use seqgen::{initial_segment, run_procedure, sequence_stream, SequenceRecord};
pub use thetagraph::{build_graph, ThetaGraph};
