//! Exact integer combinatorics of Hilbert functions for codimension-3
//! Artinian graded algebras.
//!
//! The crate computes, from degree data alone:
//!
//! * Hilbert functions of complete intersections ([`CiTriple`]), of
//!   Gorenstein algebras presented by admissible generator-degree lists
//!   ([`DegreeSequence`]), and of arbitrary Artinian monomial quotients of
//!   `k[x, y, z]` by brute-force counting ([`MonomialIdeal`]);
//! * difference sequences, Macaulay growth bounds, and the Weak Lefschetz
//!   sequence test ([`HilbertFunction::wls`]);
//! * liaison arithmetic: the residual of a Gorenstein ideal inside a
//!   complete intersection, its Hilbert function, crossing degree, and
//!   normalized generator degrees ([`link`]);
//! * an exhaustive verification sweep ([`sweep`]) that checks the whole
//!   family of structural inequalities — every admissible pair up to
//!   configurable bounds, in parallel, with deterministic reports.
//!
//! Everything is exact `i64` arithmetic; no floating point anywhere.
//!
//! # Examples
//!
//! The `examples/` directory is the guided tour; each one runs standalone:
//!
//! ```text
//! cargo run --example ci_hilbert         Hilbert data of complete intersections
//! cargo run --example gorenstein_family  degree sequences, index sets, ghost pairs
//! cargo run --example linkage            residuals, tau, normalized degrees
//! cargo run --example wls_check          Weak Lefschetz verdicts on raw sequences
//! cargo run --example monomial_quotient  the brute-force monomial oracle
//! cargo run --example theorem_sweep      a full verification sweep, summarized
//! ```
//!
//! The same functionality is scriptable through the `lefschetz` binary; see
//! `lefschetz --help`.

pub mod ci;
pub mod cli;
pub mod error;
pub mod gorenstein;
pub mod hilbert;
pub mod liaison;
pub mod monomial;
pub mod verify;

pub use ci::CiTriple;
pub use error::{Error, Result};
pub use gorenstein::{regor_nonempty, DegreeSequence, MciData};
pub use hilbert::{
    binomial, is_o_sequence, macaulay_bound, DifferenceSequence, HilbertFunction, WlsVerdict,
};
pub use liaison::{link, tau, AciDegrees, LinkedPair};
pub use monomial::MonomialIdeal;
pub use verify::{
    check_pair, enumerate_deltas, required_checks, sweep, sweep_detailed, CheckOutcome,
    PairVerdict, SweepConfig, SweepReport,
};
