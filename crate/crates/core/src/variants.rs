//! Specialized builders: simple and simplicial polytopes, k-skeleta, and a
//! depth-first enumerator that lists faces without storing the diagram.

use std::collections::VecDeque;

use crate::closure::{self, retain_common};
use crate::enumerate::{self, ensure_valid, FaceLattice};
use crate::error::{Error, Result};
use crate::facetree::{FaceTree, NodeId};
use crate::incidence::{FacetSet, Incidence, VertexSet};

fn check_simple(inc: &Incidence, d: usize) -> Result<()> {
    for v in 0..inc.vertex_count() {
        let degree = inc.vertex(v).len();
        if degree != d {
            return Err(Error::NotSimple {
                vertex: v,
                degree,
                expected: d,
            });
        }
    }
    Ok(())
}

/// Edges of a simple d-polytope: vertex pairs sharing exactly d−1 facets.
/// Pairs come out sorted, `v < w`.
pub fn polytope_graph(inc: &Incidence, d: usize) -> Result<Vec<(usize, usize)>> {
    check_simple(inc, d)?;
    let n = inc.vertex_count();
    let mut edges = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if closure::intersect_sorted(inc.vertex(v), inc.vertex(w)).len() + 1 == d {
                edges.push((v, w));
            }
        }
    }
    Ok(edges)
}

/// Face lattice of a simple d-polytope without the minimal-set step.
///
/// Vertex nodes are seeded directly. For a face H with w = min(H), each
/// graph neighbor v ∉ H of w gives a cover cl(H ∪ {v}), and all covers arise
/// this way. The queue holds Facets(H) rather than H.
pub fn build_simple_lattice(inc: &Incidence, d: usize) -> Result<FaceLattice> {
    ensure_valid(inc)?;
    let n = inc.vertex_count();
    let mut neighbors = vec![Vec::new(); n];
    for (v, w) in polytope_graph(inc, d)? {
        neighbors[v].push(w);
        neighbors[w].push(v);
    }

    let mut diagram = FaceLattice::with_root(Vec::new());
    let mut tree = FaceTree::new(diagram.root);
    let mut queue: VecDeque<(NodeId, FacetSet)> = VecDeque::new();
    for v in 0..n {
        let (id, _) = tree.locate_or_create(inc, &[v], || diagram.push_node(0, vec![v]));
        diagram.arcs.push((diagram.root, id));
        queue.push_back((id, inc.vertex(v).to_vec()));
    }

    let mut seen = Vec::new();
    while let Some((h_id, facets_h)) = queue.pop_front() {
        let h = closure::vertices_of(inc, &facets_h);
        if h.len() == n {
            diagram.top = Some(h_id);
            continue;
        }
        let h_dim = diagram.nodes[h_id].dim;
        let w = h[0];
        seen.clear();
        for &v in &neighbors[w] {
            if h.binary_search(&v).is_ok() {
                continue;
            }
            let mut t = facets_h.clone();
            retain_common(&mut t, inc.vertex(v), &mut 0);
            let g = closure::vertices_of(inc, &t);
            let (g_id, created) =
                tree.locate_or_create(inc, &g, || diagram.push_node(h_dim + 1, g.clone()));
            if created {
                queue.push_back((g_id, t));
            } else if diagram.nodes[g_id].dim != h_dim + 1 {
                return Err(Error::Contract(format!(
                    "face {g:?} reached at dimensions {} and {}",
                    diagram.nodes[g_id].dim,
                    h_dim + 1
                )));
            }
            if !seen.contains(&g_id) {
                seen.push(g_id);
                diagram.arcs.push((h_id, g_id));
            }
        }
    }
    if diagram.top.is_none() {
        return Err(Error::Contract("the full vertex set was never reached".into()));
    }
    Ok(diagram)
}

/// Face lattice of a simplicial d-polytope, via the simple builder on the
/// transpose.
pub fn build_simplicial_lattice(inc: &Incidence, d: usize) -> Result<FaceLattice> {
    for f in 0..inc.facet_count() {
        let size = inc.facet(f).len();
        if size != d {
            return Err(Error::NotSimplicial {
                facet: f,
                size,
                expected: d,
            });
        }
    }
    ensure_valid(inc)?;
    let dual = build_simple_lattice(&inc.dual(), d)?;
    Ok(enumerate::undualize(dual, inc))
}

/// All faces of dimension at most `k` with the covers among them. Faces of
/// dimension k are recorded but not expanded. For k ≥ d this is the whole
/// lattice.
pub fn build_k_skeleton(inc: &Incidence, k: usize, restrict: bool) -> Result<FaceLattice> {
    ensure_valid(inc)?;
    let k = i32::try_from(k).unwrap_or(i32::MAX);
    enumerate::run(inc, restrict, Some(k)).map(|(d, _)| d)
}

/// The canonical facet of a nonempty face G: D(G) is grown from ∅ by the
/// smallest g ∈ G whose addition enlarges the closure without reaching G;
/// H′ = cl(D(G)) is then a facet of G. Returns (D(G), H′).
///
/// Closures are tracked through facet sets: cl(D ∪ {g}) grows iff the
/// running Facets(D) shrinks, and equals G iff it shrinks to Facets(G).
pub fn canonical_facet(inc: &Incidence, g: &[usize]) -> (VertexSet, VertexSet) {
    let facets_g = closure::facets_of(inc, g);
    let mut d = Vec::new();
    let mut running: FacetSet = (0..inc.facet_count()).collect();
    for &x in g {
        let mut next = running.clone();
        retain_common(&mut next, inc.vertex(x), &mut 0);
        if next.len() < running.len() && next.len() > facets_g.len() {
            d.push(x);
            running = next;
        }
    }
    let facet = closure::vertices_of(inc, &running);
    (d, facet)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DfsStats {
    pub visited: usize,
    /// Largest number of faces on the stack at once.
    pub max_stack: usize,
    /// Covers generated whose canonical facet was not the parent.
    pub rejected: usize,
}

/// Visits every face once with its dimension, depth first. A cover G of H
/// is pushed only when H is G's canonical facet, so neither a face tree
/// nor the arcs are kept.
pub fn enumerate_faces_dfs(
    inc: &Incidence,
    mut visitor: impl FnMut(&[usize], i32),
) -> Result<DfsStats> {
    ensure_valid(inc)?;
    let n = inc.vertex_count();
    let mut stats = DfsStats::default();
    let mut stack: Vec<(VertexSet, i32)> = vec![(Vec::new(), -1)];
    stats.max_stack = 1;
    while let Some((h, dim)) = stack.pop() {
        visitor(&h, dim);
        stats.visited += 1;
        if h.len() == n {
            continue;
        }
        let cands = enumerate::candidates(inc, &h, true);
        for g in enumerate::minimal_faces(n, &h, &cands) {
            let (_, facet) = canonical_facet(inc, &g);
            if facet == h {
                stack.push((g, dim + 1));
            } else {
                stats.rejected += 1;
            }
        }
        stats.max_stack = stats.max_stack.max(stack.len());
    }
    Ok(stats)
}

/// Uniform vertex degree, i.e. d for a simple polytope.
pub fn simple_dimension(inc: &Incidence) -> Option<usize> {
    let d = inc.vertex(0).len();
    (0..inc.vertex_count())
        .all(|v| inc.vertex(v).len() == d)
        .then_some(d)
}

/// Uniform facet size, i.e. d for a simplicial polytope.
pub fn simplicial_dimension(inc: &Incidence) -> Option<usize> {
    let d = inc.facet(0).len();
    (0..inc.facet_count())
        .all(|f| inc.facet(f).len() == d)
        .then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{build_face_lattice, BuildOptions};
    use crate::incidence::parse_incidence;
    use crate::oracle;

    fn square() -> Incidence {
        parse_incidence("4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap()
    }

    #[test]
    fn graphs() {
        let cube = oracle::gen_cube(3).unwrap();
        let edges = polytope_graph(&cube, 3).unwrap();
        assert_eq!(edges.len(), 12);
        let nbrs: Vec<usize> = edges
            .iter()
            .filter_map(|&(a, b)| (a == 0).then_some(b))
            .collect();
        assert_eq!(nbrs, vec![1, 2, 4]);

        assert_eq!(
            polytope_graph(&square(), 2).unwrap(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
        assert_eq!(polytope_graph(&oracle::gen_simplex(2).unwrap(), 2).unwrap().len(), 3);

        let pyramid = parse_incidence("5 5\n0 1 2 3\n0 1 4\n1 2 4\n2 3 4\n0 3 4\n").unwrap();
        assert!(matches!(
            polytope_graph(&pyramid, 3),
            Err(Error::NotSimple { vertex: 4, degree: 4, expected: 3 })
        ));
    }

    #[test]
    fn simple_matches_general() {
        let opts = BuildOptions::default();
        for inc in [oracle::gen_cube(3).unwrap(), square(), oracle::gen_simplex(3).unwrap()] {
            let d = simple_dimension(&inc).unwrap();
            let fast = build_simple_lattice(&inc, d).unwrap();
            let full = build_face_lattice(&inc, &opts).unwrap();
            assert_eq!(fast.canonical_form(), full.canonical_form());
        }
    }

    #[test]
    fn simplicial_matches_general() {
        let cross = oracle::gen_cross(3).unwrap();
        let d = build_simplicial_lattice(&cross, 3).unwrap();
        assert_eq!(d.node_count(), 28);
        assert_eq!(d.f_vector(), vec![6, 12, 8]);
        let full = build_face_lattice(&cross, &BuildOptions::default()).unwrap();
        assert_eq!(d.canonical_form(), full.canonical_form());
        assert_eq!(
            build_simplicial_lattice(&oracle::gen_simplex(3).unwrap(), 3)
                .unwrap()
                .node_count(),
            16
        );
        assert!(matches!(
            build_simplicial_lattice(&oracle::gen_cube(3).unwrap(), 3),
            Err(Error::NotSimplicial { .. })
        ));
    }

    #[test]
    fn skeleta() {
        let sq = square();
        let d = build_k_skeleton(&sq, 1, true).unwrap();
        assert_eq!((d.node_count(), d.arc_count()), (9, 12));
        assert_eq!(d.top(), None);

        let cube = oracle::gen_cube(3).unwrap();
        assert_eq!(build_k_skeleton(&cube, 1, true).unwrap().node_count(), 21);
        let full = build_face_lattice(&cube, &BuildOptions::default()).unwrap();
        let k3 = build_k_skeleton(&cube, 3, true).unwrap();
        assert_eq!(k3.canonical_form(), full.canonical_form());
        assert_eq!(build_k_skeleton(&cube, 0, false).unwrap().node_count(), 9);
    }

    #[test]
    fn canonical_facets_of_square() {
        let sq = square();
        assert_eq!(canonical_facet(&sq, &[0, 1, 2, 3]), (vec![0, 1], vec![0, 1]));
        assert_eq!(canonical_facet(&sq, &[0, 1]), (vec![0], vec![0]));
        assert_eq!(canonical_facet(&sq, &[0]), (vec![], vec![]));
    }

    #[test]
    fn dfs_visits_each_face_once() {
        let sq = square();
        let mut seen = Vec::new();
        enumerate_faces_dfs(&sq, |f, dim| seen.push((dim, f.to_vec()))).unwrap();
        let mut dims: Vec<i32> = seen.iter().map(|s| s.0).collect();
        dims.sort();
        assert_eq!(dims, vec![-1, 0, 0, 0, 0, 1, 1, 1, 1, 2]);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 10);

        let mut count = 0;
        enumerate_faces_dfs(&oracle::gen_cube(3).unwrap(), |_, _| count += 1).unwrap();
        assert_eq!(count, 28);
    }
}
