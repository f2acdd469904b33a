use thiserror::Error;

use crate::incidence::Diagnostic;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("facet {facet}: vertex index {vertex} out of range (n = {n})")]
    VertexOutOfRange { facet: usize, vertex: usize, n: usize },

    #[error("facet {facet}: vertex {vertex} listed twice")]
    DuplicateVertex { facet: usize, vertex: usize },

    #[error("empty incidence structure (m = {m}, n = {n})")]
    Empty { m: usize, n: usize },

    #[error("incidence structure failed validation: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),

    #[error("vertex {vertex} lies on {degree} facets, expected {expected} for a simple polytope")]
    NotSimple {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("facet {facet} has {size} vertices, expected {expected} for a simplicial polytope")]
    NotSimplicial {
        facet: usize,
        size: usize,
        expected: usize,
    },

    /// The input passed validation but the run produced something no polytope
    /// (or oriented matroid) can produce.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("sign vectors have lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid sign character {0:?}")]
    BadSign(char),

    #[error("sign vector {0} is not a composition of conforming cocircuits")]
    NotCovector(String),

    #[error("{0}")]
    Unsupported(String),
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
