//! Bottom-up construction of the face lattice's Hasse diagram.
//!
//! Faces are expanded in FIFO order from ∅. For a face H the candidate
//! covers are H(v) = cl(H ∪ {v}); the inclusion-minimal ones are the covers
//! of H, found by the candidate/minimal labeling below in O(n²). Each cover
//! is looked up in the face tree and created on first sight.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::closure::{self, extend_closure, facets_of_counted};
use crate::diagram::{write_canonical, Format, HasseDiagram, RenderedNode};
use crate::error::{Error, Result};
use crate::facetree::{FaceTree, NodeId};
use crate::incidence::{write_list, Incidence, VertexSet};

/// A polytope's face lattice; every node is labeled by its vertex set.
pub type FaceLattice = HasseDiagram<VertexSet>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Only try vertices on facets through H when forming candidates.
    pub restrict: bool,
    /// Run on the transpose when there are fewer facets than vertices.
    pub auto_dualize: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            restrict: true,
            auto_dualize: true,
        }
    }
}

/// What node labels to serialize. Vertex sets are always kept in memory.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LabelMode {
    #[default]
    Vertices,
    Facets,
    Dim,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// The run used the transposed matrix.
    pub dualized: bool,
    pub tree_nodes: usize,
    pub tree_depth: usize,
    /// Closure computations, one per candidate.
    pub closures: usize,
    /// List elements touched by intersections.
    pub work: usize,
}

/// The sets H(v) = cl(H ∪ {v}) for v ∉ H, in increasing order of v.
///
/// With `restrict`, v only ranges over vertices on some facet through H.
/// When that range is empty H is a facet and its single cover is the whole
/// polytope, which every unrestricted v produces; the unrestricted range is
/// used instead in that case.
pub fn candidates(inc: &Incidence, h: &[usize], restrict: bool) -> Vec<(usize, VertexSet)> {
    let mut bits = FixedBitSet::with_capacity(inc.vertex_count());
    bits.extend(h.iter().copied());
    let facets_h = closure::facets_of(inc, h);
    candidates_with(inc, h, &bits, &facets_h, restrict, &mut 0)
}

fn candidates_with(
    inc: &Incidence,
    h: &[usize],
    h_bits: &FixedBitSet,
    facets_h: &[usize],
    restrict: bool,
    work: &mut usize,
) -> Vec<(usize, VertexSet)> {
    let n = inc.vertex_count();
    let mut range: Vec<usize> = Vec::new();
    if restrict {
        let mut reach = FixedBitSet::with_capacity(n);
        for &f in facets_h {
            reach.extend(inc.facet(f).iter().copied());
            *work += inc.facet(f).len();
        }
        reach.difference_with(h_bits);
        range.extend(reach.ones());
    }
    if range.is_empty() {
        range.extend((0..n).filter(|&v| !h_bits.contains(v)));
    }
    range
        .into_iter()
        .map(|v| (v, extend_closure(inc, facets_h, h.len(), v, work).1))
        .collect()
}

/// The distinct inclusion-minimal sets among the candidates.
///
/// Every candidate vertex starts labeled *candidate*. Taking the candidates
/// in order, v loses its label if H(v) ∖ {v} contains a vertex still labeled
/// *candidate* or *minimal* (such a w has H(w) ⊆ H(v)); otherwise v becomes
/// *minimal*. Vertices of H carry no label. Among vertices with equal sets
/// only the last one processed survives, so each minimal set appears once.
pub fn minimal_faces(n: usize, h: &[usize], cands: &[(usize, VertexSet)]) -> Vec<VertexSet> {
    minimal_indices(n, h, cands)
        .into_iter()
        .map(|i| cands[i].1.clone())
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    None,
    Candidate,
    Minimal,
}

fn minimal_indices(n: usize, h: &[usize], cands: &[(usize, VertexSet)]) -> Vec<usize> {
    let mut mark = vec![Mark::None; n];
    for &(v, _) in cands {
        mark[v] = Mark::Candidate;
    }
    debug_assert!(h.iter().all(|&v| mark[v] == Mark::None));
    for (v, set) in cands {
        let dominated = set.iter().any(|&w| w != *v && mark[w] != Mark::None);
        mark[*v] = if dominated { Mark::None } else { Mark::Minimal };
    }
    cands
        .iter()
        .enumerate()
        .filter(|(_, (v, _))| mark[*v] == Mark::Minimal)
        .map(|(i, _)| i)
        .collect()
}

/// Builds the whole diagram, ∅ through P, after validating `inc`.
pub fn build_face_lattice(inc: &Incidence, opts: &BuildOptions) -> Result<FaceLattice> {
    build_face_lattice_with_stats(inc, opts).map(|(d, _)| d)
}

pub fn build_face_lattice_with_stats(
    inc: &Incidence,
    opts: &BuildOptions,
) -> Result<(FaceLattice, BuildStats)> {
    ensure_valid(inc)?;
    if opts.auto_dualize && inc.facet_count() < inc.vertex_count() {
        let dual = inc.dual();
        let (diagram, mut stats) = run(&dual, opts.restrict, None)?;
        stats.dualized = true;
        Ok((undualize(diagram, inc), stats))
    } else {
        run(inc, opts.restrict, None)
    }
}

pub(crate) fn ensure_valid(inc: &Incidence) -> Result<()> {
    let diags = inc.validate();
    if diags.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(diags))
    }
}

/// The main loop. With `max_dim = Some(k)`, faces of dimension k are
/// recorded but never expanded.
pub(crate) fn run(
    inc: &Incidence,
    restrict: bool,
    max_dim: Option<i32>,
) -> Result<(FaceLattice, BuildStats)> {
    let n = inc.vertex_count();
    let mut diagram = FaceLattice::with_root(Vec::new());
    let mut tree = FaceTree::new(diagram.root);
    let mut stats = BuildStats::default();
    let mut queue: VecDeque<(NodeId, FixedBitSet)> = VecDeque::new();
    queue.push_back((diagram.root, FixedBitSet::with_capacity(n)));

    while let Some((h_id, h_bits)) = queue.pop_front() {
        let h: VertexSet = h_bits.ones().collect();
        if h.len() == n {
            diagram.top = Some(h_id);
            continue;
        }
        let h_dim = diagram.nodes[h_id].dim;
        let facets_h = facets_of_counted(inc, &h, &mut stats.work);
        let cands = candidates_with(inc, &h, &h_bits, &facets_h, restrict, &mut stats.work);
        stats.closures += cands.len();
        for i in minimal_indices(n, &h, &cands) {
            let g = &cands[i].1;
            debug_assert_eq!(&closure::closure(inc, g), g);
            let (g_id, created) = tree.locate_or_create(inc, g, || {
                diagram.push_node(h_dim + 1, g.clone())
            });
            if created {
                if max_dim.is_none_or(|k| h_dim + 1 < k) {
                    let mut bits = FixedBitSet::with_capacity(n);
                    bits.extend(g.iter().copied());
                    queue.push_back((g_id, bits));
                } else if g.len() == n {
                    diagram.top = Some(g_id);
                }
            } else if diagram.nodes[g_id].dim != h_dim + 1 {
                return Err(Error::Contract(format!(
                    "face {:?} reached at dimensions {} and {}; the input is not a polytope",
                    g,
                    diagram.nodes[g_id].dim,
                    h_dim + 1
                )));
            }
            diagram.arcs.push((h_id, g_id));
        }
    }
    if max_dim.is_none() && diagram.top.is_none() {
        return Err(Error::Contract("the full vertex set was never reached".into()));
    }
    stats.tree_nodes = tree.len();
    stats.tree_depth = tree.depth();
    Ok((diagram, stats))
}

/// Converts a diagram built on the transpose back: a node labeled by the
/// facet set T becomes the face Vertices(T), dimensions are mirrored, arcs
/// reversed, bottom and top swapped.
pub(crate) fn undualize(dual: FaceLattice, inc: &Incidence) -> FaceLattice {
    let d = dual.dim();
    let old_root = dual.root;
    let old_top = dual.top;
    let mut out = dual.map_labels(|t| closure::vertices_of(inc, &t));
    for node in &mut out.nodes {
        node.dim = d - 1 - node.dim;
    }
    for arc in &mut out.arcs {
        *arc = (arc.1, arc.0);
    }
    out.root = old_top.expect("complete diagram has a top");
    out.top = Some(old_root);
    out
}

/// Face counts by dimension, (f_0, …, f_{d-1}).
pub fn f_vector(diagram: &FaceLattice) -> Vec<usize> {
    diagram.f_vector()
}

/// Canonical serialization of a face lattice. Facet labels are computed
/// here from the vertex labels.
pub fn write_face_lattice(
    diagram: &FaceLattice,
    inc: &Incidence,
    labels: LabelMode,
    format: Format,
) -> String {
    write_canonical(diagram, format, |vs| match labels {
        LabelMode::Vertices => RenderedNode {
            text: list_field('v', vs),
            json: json_field("vertices", vs),
        },
        LabelMode::Facets => {
            let fs = closure::facets_of(inc, vs);
            RenderedNode {
                text: list_field('f', &fs),
                json: json_field("facets", &fs),
            }
        }
        LabelMode::Dim => RenderedNode {
            text: String::new(),
            json: serde_json::Map::new(),
        },
    })
}

pub(crate) fn list_field(tag: char, items: &[usize]) -> String {
    let mut s = String::from(tag);
    if !items.is_empty() {
        s.push(' ');
        write_list(&mut s, items).unwrap();
    }
    s
}

fn json_field(key: &str, items: &[usize]) -> serde_json::Map<String, serde_json::Value> {
    let mut map = serde_json::Map::new();
    map.insert(key.to_string(), json!(items));
    map
}
