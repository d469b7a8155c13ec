//! Polyhex nanotube graphs and degree-based topological indices.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! - [`graph`]: an immutable undirected simple graph and its degree-based
//!   edge partition.
//! - [`nanotube`]: builders for armchair (`TUAC6[m, n]`) and zigzag
//!   (`TUZC6[m, n]`) polyhex nanotubes.
//! - [`rational`]: a reduced, overflow-checked `i128` fraction.
//! - [`index`]: Randić, ABC and Augmented Zagreb indices, edgewise or from a
//!   partition.
//! - [`closed_form`]: closed forms `a·mn + b·m`, exact fitting against the
//!   brute-force oracle and grid verification of published coefficients.
#![no_std]
#![deny(missing_docs)]

extern crate alloc;

pub mod closed_form;
pub mod graph;
pub mod index;
pub mod nanotube;
pub mod rational;

pub use closed_form::{
    fit_closed_form, fit_points, oracle_value, paper_forms, verify_forms, verify_paper_forms,
    ClosedForm, ClosedFormError, DiscrepancyReport, FormReport, GridPoint, Provenance, Sample,
    Verdict, DEFAULT_FIT_SAMPLES,
};
pub use graph::{edge_partition, DegreePair, EdgePartition, Graph, GraphError, VertexId};
pub use index::{
    abc, abc_term, azi, azi_term, edgewise, index_from_partition, nanotube_index, randic,
    randic_term, EdgeFunction, Index, IndexError, IndexValue, Term,
};
pub use nanotube::{build_nanotube, InvalidSpec, NanotubeKind, NanotubeSpec};
pub use rational::{Rational, RationalError};
