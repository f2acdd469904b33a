//! Test instances shared by the integration and acceptance suites.
#![allow(dead_code)]

use facelattice::oracle::{gen_cross, gen_cube, gen_cyclic, gen_simplex};
use facelattice::{parse_cocircuits, parse_incidence, Cocircuits, Incidence};

pub const SQUARE: &str = include_str!("../fixtures/square.inc");

pub fn fixtures() -> Vec<(String, Incidence)> {
    [
        ("pentagon", include_str!("../fixtures/pentagon.inc")),
        ("segment", include_str!("../fixtures/segment.inc")),
        ("prism", include_str!("../fixtures/prism.inc")),
        ("pyramid", include_str!("../fixtures/pyramid.inc")),
        ("dodecahedron", include_str!("../fixtures/dodecahedron.inc")),
    ]
    .into_iter()
    .map(|(name, text)| (name.to_string(), parse_incidence(text).unwrap()))
    .collect()
}

/// Simplices, cubes and cross-polytopes up to dimension 3, every cyclic
/// polytope with at most 8 vertices, and the hand-built fixtures.
pub fn oracle_instances() -> Vec<(String, Incidence)> {
    let mut out = Vec::new();
    for d in 1..=3 {
        out.push((format!("simplex({d})"), gen_simplex(d).unwrap()));
        out.push((format!("cube({d})"), gen_cube(d).unwrap()));
        out.push((format!("cross({d})"), gen_cross(d).unwrap()));
    }
    for n in 3..=8 {
        for d in 2..n {
            out.push((format!("cyclic({d},{n})"), gen_cyclic(d, n).unwrap()));
        }
    }
    out.extend(fixtures());
    out
}

pub fn om_fixtures() -> Vec<(String, Cocircuits)> {
    [
        ("collinear3", include_str!("../fixtures/collinear3.cc")),
        ("single", include_str!("../fixtures/single.cc")),
        ("uniform_rank2_4", include_str!("../fixtures/uniform_rank2_4.cc")),
        ("square_points", include_str!("../fixtures/square_points.cc")),
    ]
    .into_iter()
    .map(|(name, text)| (name.to_string(), parse_cocircuits(text).unwrap()))
    .collect()
}

/// Vertices(Facets(S)) straight from the matrix definition.
pub fn dense_closure(inc: &Incidence, s: &[usize]) -> Vec<usize> {
    let facets: Vec<usize> = (0..inc.facet_count())
        .filter(|&f| s.iter().all(|&v| inc.contains(f, v)))
        .collect();
    (0..inc.vertex_count())
        .filter(|&v| facets.iter().all(|&f| inc.contains(f, v)))
        .collect()
}

/// Lexicographically least generating subset of the face `s` among those
/// listed so that no element lies in the closure of the ones before it,
/// found by trying all 2^|s| subsets.
pub fn brute_force_spanning_set(inc: &Incidence, s: &[usize]) -> Vec<usize> {
    let k = s.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << k {
        let x: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
        if dense_closure(inc, &x) != s {
            continue;
        }
        let irredundant =
            (0..x.len()).all(|i| !dense_closure(inc, &x[..i]).contains(&x[i]));
        if irredundant && best.as_ref().is_none_or(|b| x < *b) {
            best = Some(x);
        }
    }
    best.expect("a face generates itself")
}
