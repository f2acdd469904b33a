//! Big face lattices of oriented matroids, built from cocircuits.
//!
//! Same loop as the polytope case with covectors in place of vertex sets:
//! atoms are the cocircuits, the candidate covers of H are the joins H ⋁ C
//! for cocircuits C ⋠ H, and the minimal ones are found by pairwise
//! comparison. The face tree is keyed by index sets into the cocircuit
//! list.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::diagram::{write_canonical, Format, HasseDiagram, RenderedNode};
use crate::error::{Error, Result};
use crate::facetree::{FaceTree, NodeId};
use crate::incidence::{data_lines, parse_header};

/// Variant order follows the characters' byte order, so sign vectors sort
/// like their strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            other => Err(Error::BadSign(other)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![Sign::Zero; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Zero)
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|s| s.negate()).collect())
    }

    /// The conformal order: self ⪯ other iff every nonzero entry of self
    /// agrees with other. Vectors of different lengths are incomparable.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(&a, &b)| a == Sign::Zero || a == b)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            fmt::Write::write_char(f, s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Sign::from_char).collect::<Result<_>>().map(Self)
    }
}

fn same_length(v: &SignVector, w: &SignVector) -> Result<()> {
    if v.len() == w.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        })
    }
}

/// Indices where one vector is + and the other −.
pub fn separation_set(v: &SignVector, w: &SignVector) -> Result<Vec<usize>> {
    same_length(v, w)?;
    Ok(v.0
        .iter()
        .zip(&w.0)
        .enumerate()
        .filter(|(_, (&a, &b))| a != Sign::Zero && b == a.negate() && b != Sign::Zero)
        .map(|(i, _)| i)
        .collect())
}

/// (v∘w)_i = v_i if v_i ≠ 0, else w_i.
pub fn compose(v: &SignVector, w: &SignVector) -> Result<SignVector> {
    same_length(v, w)?;
    Ok(SignVector(
        v.0.iter()
            .zip(&w.0)
            .map(|(&a, &b)| if a == Sign::Zero { b } else { a })
            .collect(),
    ))
}

/// An element of the big face lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Covector {
    Vector(SignVector),
    /// The adjoined maximum 1̂.
    Top,
}

impl Covector {
    pub fn as_vector(&self) -> Option<&SignVector> {
        match self {
            Covector::Vector(v) => Some(v),
            Covector::Top => None,
        }
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Covector::Vector(v) => v.fmt(f),
            Covector::Top => f.write_str("top"),
        }
    }
}

/// The join of two covectors: their composition if nothing separates them,
/// 1̂ otherwise. O(k).
pub fn join_covectors(v: &SignVector, w: &SignVector) -> Result<Covector> {
    same_length(v, w)?;
    let mut out = Vec::with_capacity(v.len());
    for (&a, &b) in v.0.iter().zip(&w.0) {
        if a != Sign::Zero && b != Sign::Zero && a != b {
            return Ok(Covector::Top);
        }
        out.push(if a == Sign::Zero { b } else { a });
    }
    Ok(Covector::Vector(SignVector(out)))
}

/// A cocircuit list over a ground set of fixed size. The list order is the
/// one used to key the face tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocircuits {
    ground: usize,
    vectors: Vec<SignVector>,
}

impl Cocircuits {
    /// Checks lengths and appends −C for every C whose negation is missing.
    /// Returns the completed set and the appended vectors.
    pub fn new(ground: usize, vectors: Vec<SignVector>) -> Result<(Self, Vec<SignVector>)> {
        for v in &vectors {
            if v.len() != ground {
                return Err(Error::LengthMismatch {
                    left: ground,
                    right: v.len(),
                });
            }
        }
        let mut vectors = vectors;
        let mut added = Vec::new();
        for i in 0..vectors.len() {
            let neg = vectors[i].negate();
            if !vectors.contains(&neg) {
                added.push(neg.clone());
                vectors.push(neg);
            }
        }
        if !added.is_empty() {
            log::warn!(
                "cocircuit set was not closed under negation; added {} vectors",
                added.len()
            );
        }
        Ok((Self { ground, vectors }, added))
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn vectors(&self) -> &[SignVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Parses `n k` followed by n sign strings of length k.
pub fn parse_cocircuits(text: &str) -> Result<Cocircuits> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header".into(),
    })?;
    let (count, ground) = parse_header(hl, header)?;
    let mut vectors = Vec::with_capacity(count);
    for (line, body) in lines {
        if vectors.len() == count {
            return Err(Error::Parse {
                line,
                message: format!("more than {count} cocircuit lines"),
            });
        }
        let v: SignVector = body.parse()?;
        if v.len() != ground {
            return Err(Error::LengthMismatch {
                left: ground,
                right: v.len(),
            });
        }
        vectors.push(v);
    }
    if vectors.len() != count {
        return Err(Error::Parse {
            line: hl,
            message: format!("expected {count} cocircuit lines, found {}", vectors.len()),
        });
    }
    Cocircuits::new(ground, vectors).map(|(c, _)| c)
}

/// Indices of the cocircuits C_i ⪯ S at which the running join of
/// C_{i1}, C_{i2}, … strictly grows. O(n·k).
pub fn canonical_index_set(cocircuits: &[SignVector], s: &SignVector) -> Result<Vec<usize>> {
    let mut running = SignVector::zero(s.len());
    let mut out = Vec::new();
    for (i, c) in cocircuits.iter().enumerate() {
        same_length(c, s)?;
        if !c.conforms_to(s) || c.conforms_to(&running) {
            continue;
        }
        // c and running both conform to s, so nothing separates them
        running = compose(&running, c)?;
        out.push(i);
    }
    if running != *s {
        return Err(Error::NotCovector(s.to_string()));
    }
    Ok(out)
}

/// The big face lattice: covectors ordered conformally, plus 1̂.
pub type CovectorLattice = HasseDiagram<Covector>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmStats {
    pub tree_depth: usize,
    pub tree_nodes: usize,
}

pub fn build_covector_lattice(cocircuits: &Cocircuits) -> Result<CovectorLattice> {
    build_covector_lattice_with_stats(cocircuits).map(|(l, _)| l)
}

pub fn build_covector_lattice_with_stats(
    cocircuits: &Cocircuits,
) -> Result<(CovectorLattice, OmStats)> {
    let k = cocircuits.ground_size();
    let atoms = cocircuits.vectors();
    let mut lattice = CovectorLattice::with_root(Covector::Vector(SignVector::zero(k)));
    let mut tree = FaceTree::new(lattice.root);
    let mut queue: VecDeque<(NodeId, SignVector)> = VecDeque::new();
    queue.push_back((lattice.root, SignVector::zero(k)));
    let mut maximal = Vec::new();

    while let Some((h_id, h)) = queue.pop_front() {
        let h_dim = lattice.nodes[h_id].dim;
        let mut joins: Vec<SignVector> = Vec::new();
        for c in atoms {
            if c.conforms_to(&h) {
                continue;
            }
            if let Covector::Vector(j) = join_covectors(&h, c)? {
                if !joins.contains(&j) {
                    joins.push(j);
                }
            }
        }
        if joins.is_empty() {
            maximal.push(h_id);
            continue;
        }
        let minimal: Vec<&SignVector> = joins
            .iter()
            .filter(|j| !joins.iter().any(|o| o != *j && o.conforms_to(j)))
            .collect();
        for g in minimal {
            let key = canonical_index_set(atoms, g)?;
            let (g_id, created) = tree.locate_or_create_key(&key, || {
                lattice.push_node(h_dim + 1, Covector::Vector(g.clone()))
            });
            if created {
                queue.push_back((g_id, g.clone()));
            } else if lattice.nodes[g_id].dim != h_dim + 1 {
                return Err(Error::Contract(format!(
                    "covector {g} reached at ranks {} and {}; the cocircuits do not form an oriented matroid",
                    lattice.nodes[g_id].dim,
                    h_dim + 1
                )));
            }
            lattice.arcs.push((h_id, g_id));
        }
    }

    let top_dim = maximal
        .iter()
        .map(|&id| lattice.nodes[id].dim)
        .max()
        .unwrap_or(-1)
        + 1;
    let top = lattice.push_node(top_dim, Covector::Top);
    for id in maximal {
        lattice.arcs.push((id, top));
    }
    lattice.top = Some(top);
    let stats = OmStats {
        tree_depth: tree.depth(),
        tree_nodes: tree.len(),
    };
    Ok((lattice, stats))
}

/// Canonical serialization with sign-string labels; 1̂ is written `top`.
pub fn write_covector_lattice(lattice: &CovectorLattice, format: Format) -> String {
    write_canonical(lattice, format, |c| match c {
        Covector::Vector(v) => {
            let mut map = serde_json::Map::new();
            map.insert("signs".into(), json!(v.to_string()));
            RenderedNode {
                text: format!("s {v}"),
                json: map,
            }
        }
        Covector::Top => {
            let mut map = serde_json::Map::new();
            map.insert("top".into(), json!(true));
            RenderedNode {
                text: "top".into(),
                json: map,
            }
        }
    })
}

/// Topes: the covectors covered by 1̂.
pub fn topes(lattice: &CovectorLattice) -> Vec<&SignVector> {
    let Some(top) = lattice.top() else {
        return Vec::new();
    };
    lattice
        .arcs()
        .iter()
        .filter(|&&(_, p)| p == top)
        .filter_map(|&(c, _)| lattice.node(c).label.as_vector())
        .collect()
}
