//! The closure operator cl(S) = Vertices(Facets(S)) over sorted sparse lists.

use crate::incidence::{FacetSet, Incidence, VertexSet};

/// Intersection of two strictly increasing lists in O(|a| + |b|).
pub fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = a.to_vec();
    retain_common(&mut out, b, &mut 0);
    out
}

/// Keeps the elements of `acc` that also occur in `other`.
pub(crate) fn retain_common(acc: &mut Vec<usize>, other: &[usize], work: &mut usize) {
    *work += acc.len() + other.len();
    let mut j = 0;
    let mut keep = 0;
    for i in 0..acc.len() {
        let x = acc[i];
        while j < other.len() && other[j] < x {
            j += 1;
        }
        if j == other.len() {
            break;
        }
        if other[j] == x {
            acc[keep] = x;
            keep += 1;
            j += 1;
        }
    }
    acc.truncate(keep);
}

/// Intersects the lists shortest first. An empty family yields `0..universe`.
/// Stops early once the running result has `floor` elements, for callers that
/// know the answer contains at least that many.
fn fold_intersection(
    mut lists: Vec<&[usize]>,
    universe: usize,
    floor: usize,
    work: &mut usize,
) -> Vec<usize> {
    if lists.is_empty() {
        return (0..universe).collect();
    }
    lists.sort_by_key(|l| l.len());
    let mut acc = lists[0].to_vec();
    *work += acc.len();
    for list in &lists[1..] {
        if acc.len() <= floor {
            break;
        }
        retain_common(&mut acc, list, work);
    }
    acc
}

/// Facets containing every vertex of `s`. Facets(∅) is every facet.
pub fn facets_of(inc: &Incidence, s: &[usize]) -> FacetSet {
    facets_of_counted(inc, s, &mut 0)
}

/// Vertices lying on every facet of `t`. Vertices(∅) is every vertex.
pub fn vertices_of(inc: &Incidence, t: &[usize]) -> VertexSet {
    vertices_of_counted(inc, t, 0, &mut 0)
}

/// Smallest face containing `s`.
pub fn closure(inc: &Incidence, s: &[usize]) -> VertexSet {
    closure_counted(inc, s, &mut 0)
}

pub(crate) fn facets_of_counted(inc: &Incidence, s: &[usize], work: &mut usize) -> FacetSet {
    let lists = s.iter().map(|&v| inc.vertex(v)).collect();
    fold_intersection(lists, inc.facet_count(), 0, work)
}

pub(crate) fn vertices_of_counted(
    inc: &Incidence,
    t: &[usize],
    floor: usize,
    work: &mut usize,
) -> VertexSet {
    let lists = t.iter().map(|&f| inc.facet(f)).collect();
    fold_intersection(lists, inc.vertex_count(), floor, work)
}

pub(crate) fn closure_counted(inc: &Incidence, s: &[usize], work: &mut usize) -> VertexSet {
    let t = facets_of_counted(inc, s, work);
    // cl(S) ⊇ S, so the intersection can stop once it is down to |S|.
    vertices_of_counted(inc, &t, s.len(), work)
}

/// cl(H ∪ {v}) given Facets(H), which the caller reuses across all v.
pub(crate) fn extend_closure(
    inc: &Incidence,
    facets_h: &[usize],
    h_len: usize,
    v: usize,
    work: &mut usize,
) -> (FacetSet, VertexSet) {
    let mut t = facets_h.to_vec();
    retain_common(&mut t, inc.vertex(v), work);
    let g = vertices_of_counted(inc, &t, h_len + 1, work);
    (t, g)
}
