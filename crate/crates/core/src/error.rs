//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Precondition violations are reported as errors, not panics, so callers
/// (e.g. an experiment harness) can record them instead of dying.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vertex id is not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Two graphs that must share a vertex count do not.
    SizeMismatch { left: usize, right: usize },
    /// An edge is a self-loop.
    SelfLoop { vertex: usize },
    /// The same edge was supplied twice.
    DuplicateEdge { u: usize, v: usize },
    /// `subtract` was asked to remove an edge the host graph does not have.
    NotSubgraph { u: usize, v: usize },
    /// Two vertex sets that must be disjoint share a vertex.
    OverlappingSets { vertex: usize },
    /// A vertex is missing from, or repeated across, a claimed partition.
    NotAPartition { vertex: usize },
    /// An ordering that must be a permutation of `0..n` is not.
    NotAPermutation { vertex: usize },
    /// A probability is outside `[0, 1]`.
    InvalidProbability(f64),
    /// A parameter violates a documented precondition.
    InvalidParameter(&'static str),
    /// An instance exceeds a documented size cap for an exact routine.
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// A rejection-sampling loop exhausted its attempt budget.
    GenerationExhausted { attempts: usize },
    /// The graph is not regular but the operation requires it.
    NotRegular,
    /// A spectral profile does not describe the graph it was paired with.
    ProfileMismatch(&'static str),
    /// A degree budget was exceeded; reports one offending vertex.
    BudgetExceeded {
        vertex: usize,
        degree: usize,
        budget: usize,
    },
    /// Edge-list text could not be parsed; `line` is 1-based.
    Parse { line: usize, message: String },
    /// An iterative numerical routine failed to converge.
    NumericalFailure(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "vertex count mismatch: {left} vs {right}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            Error::NotSubgraph { u, v } => {
                write!(f, "edge {u}-{v} is not present in the host graph")
            }
            Error::OverlappingSets { vertex } => {
                write!(f, "sets must be disjoint but both contain vertex {vertex}")
            }
            Error::NotAPartition { vertex } => {
                write!(f, "vertex {vertex} is not covered exactly once by the partition")
            }
            Error::NotAPermutation { vertex } => {
                write!(f, "ordering is not a permutation: vertex {vertex} misplaced")
            }
            Error::InvalidProbability(p) => write!(f, "probability {p} outside [0, 1]"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SizeCapExceeded { what, size, cap } => {
                write!(f, "{what}: size {size} exceeds cap {cap}")
            }
            Error::GenerationExhausted { attempts } => {
                write!(f, "generation failed after {attempts} attempts")
            }
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::ProfileMismatch(msg) => write!(f, "spectral profile mismatch: {msg}"),
            Error::BudgetExceeded {
                vertex,
                degree,
                budget,
            } => write!(
                f,
                "vertex {vertex} has degree {degree}, exceeding budget {budget}"
            ),
            Error::Parse { line, message } => write!(f, "parse error on line {line}: {message}"),
            Error::NumericalFailure(msg) => write!(f, "numerical failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
