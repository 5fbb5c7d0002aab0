//! Exact-arithmetic analysis of the two graphical sequences that come with a
//! graph: the distance profile (valencies) around a vertex, and the
//! multiplicities of an association scheme.
//!
//! The crate builds graphs (named families, Cartesian products), linear codes
//! over small finite fields (weight distributions, coset graphs), and
//! association-scheme spectra (eigenmatrices, Krein parameters), and checks
//! log-concavity, unimodality, and the related monotonicity conditions with
//! exact big-integer / big-rational arithmetic wherever the data is rational.

pub mod code;
pub mod field;
pub mod forms;
pub mod graph;
pub mod scheme;
pub mod seq;

pub use graph::Graph;
pub use seq::{IntPolynomial, RatSequence, Verdict};
