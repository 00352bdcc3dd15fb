//! Circuit codes in the hypercube: induced cycles whose cycle distance and
//! Hamming distance agree for every pair of vertices closer than the spread.
//!
//! The crate covers three things:
//!
//!  - **Code model and oracles** ([`CircuitCode`], [`has_spread`]). Codes are
//!    given by transition sequences starting at the all-zeros vertex and are
//!    checked by exhaustive pairwise scans.
//!  - **Sequence rewrites** ([`construct7`], [`klee_padding`],
//!    [`naive_insertion`]). The first turns a spread-`k` code into a
//!    spread-`k+1` code with `ceil(log2 q) + 1` extra coordinates.
//!  - **Lower-bound tables** ([`bounds`]). Seeds and construction arithmetic
//!    propagated to a fixpoint, with the derivation of every entry.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use circuit_core::{construct7, has_spread, CircuitCode};
//!
//! let hexagon = CircuitCode::from_elements(3, 2, vec![2, 1, 3, 2, 1, 3]).unwrap();
//! let report = construct7(&hexagon).unwrap();
//! assert_eq!(report.output.sequence().elements(), &[2, 1, 3, 4, 2, 1, 3, 4]);
//! assert!(has_spread(&report.output, 3).holds);
//! ```
#![no_std]

extern crate alloc;

pub mod bounds;
mod code;
mod construct;
mod error;
mod spread;
mod vertex;

pub use code::{cycle_distance, is_simple_cycle, vertices_of, CircuitCode, TransitionSequence};
pub use construct::{
    construct7, construct7_plan, klee_padding, klee_padding_plan, naive_insertion, ruler_label,
    segment_count, segments, CodeParams, Construct7Plan, ConstructionReport, Insertion,
    NaiveOffset, Segment,
};
pub use error::CodeError;
pub use spread::{
    check_consecutive_distinct, chord_count, has_spread, is_isometric, max_spread, SpreadVerdict,
    Witness,
};
pub use vertex::{hypercube_distance, project_vertex, Vertex};

/// Largest supported dimension; vertices are single machine words.
pub const MAX_DIMENSION: usize = 64;
