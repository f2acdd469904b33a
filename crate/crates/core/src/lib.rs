//! Hasse diagrams of polytope face lattices from vertex-facet incidences.
//!
//! The main entry point is [`build_face_lattice`], which constructs the
//! diagram bottom-up in O(min{n,m}·α·φ) time (n vertices, m facets, α
//! incidences, φ faces). [`variants`] holds the faster simple/simplicial
//! builders, k-skeleta and a low-memory depth-first face enumerator; [`om`]
//! builds big face lattices of oriented matroids from their cocircuits.
//! [`oracle`] contains independent brute-force references and generators.

pub mod closure;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod facetree;
pub mod incidence;
pub mod om;
pub mod oracle;
pub mod variants;

pub use closure::{closure, facets_of, intersect_sorted, vertices_of};
pub use diagram::{CanonicalForm, Format, HasseDiagram, Node};
pub use enumerate::{
    build_face_lattice, build_face_lattice_with_stats, candidates, f_vector, minimal_faces,
    write_face_lattice, BuildOptions, BuildStats, FaceLattice, LabelMode,
};
pub use error::{Error, Result};
pub use facetree::{canonical_spanning_set, FaceTree, NodeId};
pub use incidence::{dualize, parse_incidence, Diagnostic, FacetSet, Incidence, VertexSet};
pub use om::{
    build_covector_lattice, canonical_index_set, compose, join_covectors, parse_cocircuits,
    separation_set, write_covector_lattice, Cocircuits, Covector, CovectorLattice, Sign,
    SignVector,
};
pub use variants::{
    build_k_skeleton, build_simple_lattice, build_simplicial_lattice, canonical_facet,
    enumerate_faces_dfs, polytope_graph, DfsStats,
};
