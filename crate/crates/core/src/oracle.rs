//! Brute-force reference implementations and instance generators.
//!
//! Nothing here calls into `closure`, `enumerate`, `facetree`, `variants`
//! or the lattice code of `om`: faces are found by testing every subset
//! against a dense bitmask matrix, covers by pairwise comparison, and
//! covectors by a fixed-point join closure with its own sign arithmetic.
//! Only the plain data types (`Incidence`, `SignVector`, `HasseDiagram`)
//! are shared.

use itertools::Itertools;

use crate::diagram::{HasseDiagram, Node};
use crate::error::{Error, Result};
use crate::incidence::{Incidence, VertexSet};
use crate::om::{Covector, Sign, SignVector};

/// Largest vertex count `brute_force_faces` accepts.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 24;

/// Every S ⊆ V with Vertices(Facets(S)) = S, in increasing bitmask order.
pub fn brute_force_faces(inc: &Incidence) -> Result<Vec<VertexSet>> {
    let n = inc.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::Unsupported(format!(
            "brute force over 2^{n} subsets (limit {MAX_BRUTE_FORCE_VERTICES} vertices)"
        )));
    }
    let masks: Vec<u32> = (0..inc.facet_count())
        .map(|f| {
            (0..n)
                .filter(|&v| inc.contains(f, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect();
    let all = (1u32 << n) - 1;
    let mut faces = Vec::new();
    for s in 0..=all {
        let mut closure = all;
        for &m in &masks {
            if m & s == s {
                closure &= m;
            }
        }
        if closure == s {
            faces.push((0..n).filter(|&v| s >> v & 1 == 1).collect());
        }
    }
    Ok(faces)
}

/// Hasse diagram of a finite poset by pairwise comparison: `lt(a, b)` is the
/// strict order. Dimensions are longest-chain lengths from the minimum,
/// shifted so the minimum has dimension −1.
pub fn poset_hasse<L: Clone>(elements: &[L], lt: impl Fn(&L, &L) -> bool) -> HasseDiagram<L> {
    let n = elements.len();
    let less: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && lt(&elements[a], &elements[b])).collect())
        .collect();
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                arcs.push((a, b));
            }
        }
    }
    // elements with fewer predecessors first is a linear extension
    let below: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| less[a][b]).count()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| below[i]);
    let mut height = vec![0i32; n];
    for &b in &order {
        for &(x, y) in &arcs {
            if y == b {
                height[b] = height[b].max(height[x] + 1);
            }
        }
    }
    let root = (0..n).find(|&i| below[i] == 0).unwrap_or(0);
    let maximal: Vec<usize> = (0..n).filter(|&a| !(0..n).any(|b| less[a][b])).collect();
    let top = (maximal.len() == 1).then(|| maximal[0]);
    let nodes = elements
        .iter()
        .zip(&height)
        .map(|(e, &h)| Node {
            dim: h - 1,
            label: e.clone(),
        })
        .collect();
    HasseDiagram::from_parts(nodes, arcs, root, top)
}

/// Covers among the given faces, ordered by strict inclusion.
pub fn brute_force_hasse(faces: &[VertexSet]) -> HasseDiagram<VertexSet> {
    poset_hasse(faces, |a, b| {
        a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
    })
}

/// Face lattice of `inc` from first principles.
pub fn brute_force_lattice(inc: &Incidence) -> Result<HasseDiagram<VertexSet>> {
    Ok(brute_force_hasse(&brute_force_faces(inc)?))
}

/// The d-simplex: facet i omits vertex i.
pub fn gen_simplex(d: usize) -> Result<Incidence> {
    if d == 0 {
        return Err(Error::Unsupported("simplex dimension must be at least 1".into()));
    }
    let rows = (0..=d).map(|i| (0..=d).filter(|&v| v != i).collect()).collect();
    Incidence::from_facets(d + 1, rows)
}

/// Largest cube dimension the generators accept.
pub const MAX_CUBE_DIM: usize = 20;

/// The d-cube on {0,1}^d; vertex v has coordinate i equal to bit i of v.
/// Facet 2i is x_i = 0 and facet 2i+1 is x_i = 1.
pub fn gen_cube(d: usize) -> Result<Incidence> {
    if d == 0 || d > MAX_CUBE_DIM {
        return Err(Error::Unsupported(format!(
            "cube dimension must be in 1..={MAX_CUBE_DIM}"
        )));
    }
    let n = 1usize << d;
    let mut rows = Vec::with_capacity(2 * d);
    for i in 0..d {
        rows.push((0..n).filter(|v| v >> i & 1 == 0).collect());
        rows.push((0..n).filter(|v| v >> i & 1 == 1).collect());
    }
    Incidence::from_facets(n, rows)
}

/// The d-dimensional cross-polytope, as the transpose of the cube.
pub fn gen_cross(d: usize) -> Result<Incidence> {
    Ok(gen_cube(d)?.dual())
}

/// Largest vertex count for cyclic polytopes.
pub const MAX_CYCLIC_VERTICES: usize = 40;

/// Whether the d-subset `s` of 0..n satisfies Gale's evenness condition:
/// every maximal run of members not touching either end has even length.
pub fn gale_evenness(s: &[usize], n: usize) -> bool {
    let mut i = 0;
    while i < s.len() {
        let start = s[i];
        let mut j = i;
        while j + 1 < s.len() && s[j + 1] == s[j] + 1 {
            j += 1;
        }
        let end = s[j];
        let interior = start > 0 && end + 1 < n;
        if interior && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

/// The cyclic polytope C(d, n): vertices 0..n on the moment curve, facets
/// the d-subsets satisfying Gale evenness, in lexicographic order.
pub fn gen_cyclic(d: usize, n: usize) -> Result<Incidence> {
    if d < 2 || n <= d || n > MAX_CYCLIC_VERTICES {
        return Err(Error::Unsupported(format!(
            "cyclic polytope needs n > d >= 2 and n <= {MAX_CYCLIC_VERTICES} (got d = {d}, n = {n})"
        )));
    }
    let rows = (0..n)
        .combinations(d)
        .filter(|s| gale_evenness(s, n))
        .collect();
    Incidence::from_facets(n, rows)
}

fn to_i8(v: &SignVector) -> Vec<i8> {
    v.signs()
        .iter()
        .map(|s| match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Zero => 0,
        })
        .collect()
}

fn from_i8(v: &[i8]) -> SignVector {
    SignVector::new(
        v.iter()
            .map(|&x| match x {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                _ => Sign::Zero,
            })
            .collect(),
    )
}

/// Closure of {0} ∪ cocircuits under conformal joins (compositions of
/// pairs with nothing separating them), by fixed-point iteration. Sorted.
pub fn brute_force_covectors(ground: usize, cocircuits: &[SignVector]) -> Vec<SignVector> {
    let mut set: Vec<Vec<i8>> = vec![vec![0; ground]];
    for c in cocircuits {
        let c = to_i8(c);
        if !set.contains(&c) {
            set.push(c);
        }
    }
    loop {
        let mut fresh = Vec::new();
        for a in &set {
            for b in &set {
                if a.iter().zip(b).any(|(&x, &y)| x * y < 0) {
                    continue;
                }
                let j: Vec<i8> = a.iter().zip(b).map(|(&x, &y)| if x != 0 { x } else { y }).collect();
                if !set.contains(&j) && !fresh.contains(&j) {
                    fresh.push(j);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    let mut out: Vec<SignVector> = set.iter().map(|v| from_i8(v)).collect();
    out.sort();
    out
}

/// Big face lattice by pairwise comparison of all covectors plus 1̂.
pub fn brute_force_covector_lattice(
    ground: usize,
    cocircuits: &[SignVector],
) -> HasseDiagram<Covector> {
    let mut elements: Vec<Covector> = brute_force_covectors(ground, cocircuits)
        .into_iter()
        .map(Covector::Vector)
        .collect();
    elements.push(Covector::Top);
    poset_hasse(&elements, |a, b| match (a, b) {
        (_, Covector::Top) => a != b,
        (Covector::Top, _) => false,
        (Covector::Vector(x), Covector::Vector(y)) => {
            let (x, y) = (to_i8(x), to_i8(y));
            x != y && x.iter().zip(&y).all(|(&p, &q)| p == 0 || p == q)
        }
    })
}
