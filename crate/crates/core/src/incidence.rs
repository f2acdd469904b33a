//! Vertex-facet incidence matrices.
//!
//! An [`Incidence`] stores the m×n 0/1 matrix three ways: sorted vertex lists
//! per facet (rows), sorted facet lists per vertex (columns), and a dense bit
//! matrix for O(1) membership. All three are built once and never mutated.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::closure;
use crate::error::{Error, Result};

/// Sorted, strictly increasing vertex indices.
pub type VertexSet = Vec<usize>;
/// Sorted, strictly increasing facet indices.
pub type FacetSet = Vec<usize>;

#[derive(Clone, PartialEq, Eq)]
pub struct Incidence {
    n: usize,
    rows: Vec<VertexSet>,
    cols: Vec<FacetSet>,
    dense: Vec<FixedBitSet>,
    alpha: usize,
}

impl Incidence {
    /// Builds the structure from one vertex list per facet. Lists may be in
    /// any order; they are sorted here.
    pub fn from_facets(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let m = facets.len();
        if m == 0 || n == 0 {
            return Err(Error::Empty { m, n });
        }
        let mut rows = facets;
        for (f, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            for pair in row.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::DuplicateVertex {
                        facet: f,
                        vertex: pair[0],
                    });
                }
            }
            if let Some(&v) = row.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { facet: f, vertex: v, n });
                }
            }
        }
        Ok(Self::from_sorted_rows(n, rows))
    }

    fn from_sorted_rows(n: usize, rows: Vec<VertexSet>) -> Self {
        let mut cols = vec![Vec::new(); n];
        let mut dense = Vec::with_capacity(rows.len());
        let mut alpha = 0;
        // Facets are visited in increasing order, so every column comes out sorted.
        for (f, row) in rows.iter().enumerate() {
            let mut bits = FixedBitSet::with_capacity(n);
            for &v in row {
                cols[v].push(f);
                bits.insert(v);
            }
            alpha += row.len();
            dense.push(bits);
        }
        Self {
            n,
            rows,
            cols,
            dense,
            alpha,
        }
    }

    /// Number of facets, m.
    pub fn facet_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of vertices, n.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of vertex-facet incidences.
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Vertices({f}).
    pub fn facet(&self, f: usize) -> &[usize] {
        &self.rows[f]
    }

    /// Facets({v}).
    pub fn vertex(&self, v: usize) -> &[usize] {
        &self.cols[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn cols(&self) -> &[FacetSet] {
        &self.cols
    }

    pub fn contains(&self, f: usize, v: usize) -> bool {
        self.dense[f].contains(v)
    }

    /// The transpose: vertices become facets and facets become vertices.
    pub fn dual(&self) -> Self {
        Self::from_sorted_rows(self.rows.len(), self.cols.clone())
    }

    /// Checks necessary conditions for a polytope's incidences. An empty
    /// result does not prove the matrix comes from a polytope.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let empty_closure = closure::closure(self, &[]);
        if !empty_closure.is_empty() {
            out.push(Diagnostic::EmptySetNotClosed {
                closure: empty_closure,
            });
        }
        for v in 0..self.n {
            let cl = closure::closure(self, &[v]);
            if cl.len() != 1 {
                out.push(Diagnostic::AtomNotClosed { vertex: v, closure: cl });
            }
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by(|&a, &b| self.rows[a].cmp(&self.rows[b]).then(a.cmp(&b)));
        for pair in order.windows(2) {
            if self.rows[pair[0]] == self.rows[pair[1]] {
                out.push(Diagnostic::DuplicateFacet {
                    first: pair[0],
                    second: pair[1],
                });
            }
        }
        for (f, row) in self.rows.iter().enumerate() {
            if row.len() == self.n {
                out.push(Diagnostic::FullFacet { facet: f });
            }
        }
        out
    }
}

impl fmt::Debug for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Incidence")
            .field("m", &self.rows.len())
            .field("n", &self.n)
            .field("alpha", &self.alpha)
            .field("rows", &self.rows)
            .finish()
    }
}

/// A failed necessary condition, naming the offending index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// cl({v}) ≠ {v}.
    AtomNotClosed { vertex: usize, closure: VertexSet },
    DuplicateFacet { first: usize, second: usize },
    FullFacet { facet: usize },
    /// cl(∅) ≠ ∅, i.e. some vertex lies on every facet.
    EmptySetNotClosed { closure: VertexSet },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::AtomNotClosed { vertex, closure } => {
                write!(f, "vertex {vertex} is not closed (closure {closure:?})")
            }
            Diagnostic::DuplicateFacet { first, second } => {
                write!(f, "facets {first} and {second} have identical vertex sets")
            }
            Diagnostic::FullFacet { facet } => write!(f, "facet {facet} contains every vertex"),
            Diagnostic::EmptySetNotClosed { closure } => {
                write!(f, "closure of the empty set is {closure:?}, not empty")
            }
        }
    }
}

/// Data lines of a text file: comments and blank lines dropped, 1-based line
/// numbers kept for error messages.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header(line: usize, text: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        message: format!("expected header with two counts, found {text:?}"),
    };
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

pub fn parse_incidence(text: &str) -> Result<Incidence> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header".into(),
    })?;
    let (m, n) = parse_header(hl, header)?;
    if m == 0 || n == 0 {
        return Err(Error::Empty { m, n });
    }
    let mut facets = Vec::with_capacity(m);
    let mut last_line = hl;
    for (line, body) in lines {
        if facets.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than {m} facet lines"),
            });
        }
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex index {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(row);
        last_line = line;
    }
    if facets.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {m} facet lines, found {}", facets.len()),
        });
    }
    Incidence::from_facets(n, facets)
}

pub fn dualize(inc: &Incidence) -> Incidence {
    inc.dual()
}

impl FromStr for Incidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_incidence(s)
    }
}

/// Serializes in the input format: header, then one sorted line per facet.
impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows.len(), self.n)?;
        for row in &self.rows {
            write_list(f, row)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn write_list(out: &mut impl fmt::Write, items: &[usize]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            out.write_char(' ')?;
        }
        write!(out, "{x}")?;
    }
    Ok(())
}
