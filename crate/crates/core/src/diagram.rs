//! Hasse diagrams and their canonical serialization.

use std::fmt::Write;

use serde::Serialize;

use crate::facetree::NodeId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node<L> {
    /// -1 for the bottom element.
    pub dim: i32,
    pub label: L,
}

/// Cover relations of a graded lattice, bottom to top. Arcs run from the
/// smaller element to the larger.
#[derive(Clone, Debug)]
pub struct HasseDiagram<L> {
    pub(crate) nodes: Vec<Node<L>>,
    pub(crate) arcs: Vec<(NodeId, NodeId)>,
    pub(crate) root: NodeId,
    pub(crate) top: Option<NodeId>,
}

impl<L> HasseDiagram<L> {
    pub(crate) fn with_root(label: L) -> Self {
        Self {
            nodes: vec![Node { dim: -1, label }],
            arcs: Vec::new(),
            root: 0,
            top: None,
        }
    }

    pub(crate) fn push_node(&mut self, dim: i32, label: L) -> NodeId {
        self.nodes.push(Node { dim, label });
        self.nodes.len() - 1
    }

    /// Assembles a diagram from parts; used by oracles and conversions.
    pub fn from_parts(
        nodes: Vec<Node<L>>,
        arcs: Vec<(NodeId, NodeId)>,
        root: NodeId,
        top: Option<NodeId>,
    ) -> Self {
        Self {
            nodes,
            arcs,
            root,
            top,
        }
    }

    pub fn nodes(&self) -> &[Node<L>] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node<L> {
        &self.nodes[id]
    }

    pub fn arcs(&self) -> &[(NodeId, NodeId)] {
        &self.arcs
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// The top element, absent for truncated diagrams.
    pub fn top(&self) -> Option<NodeId> {
        self.top
    }

    /// Dimension of the top element, or the largest dimension present when
    /// the diagram is truncated.
    pub fn dim(&self) -> i32 {
        match self.top {
            Some(t) => self.nodes[t].dim,
            None => self.nodes.iter().map(|n| n.dim).max().unwrap_or(-1),
        }
    }

    /// Element counts by dimension, (f_0, …, f_{d-1}); bottom and top are
    /// left out. For truncated diagrams the list runs up to the largest
    /// dimension present.
    pub fn f_vector(&self) -> Vec<usize> {
        let upper = match self.top {
            Some(t) => self.nodes[t].dim,
            None => self.dim() + 1,
        };
        let mut f = vec![0; upper.max(0) as usize];
        for (id, node) in self.nodes.iter().enumerate() {
            if id == self.root || Some(id) == self.top {
                continue;
            }
            if node.dim >= 0 && node.dim < upper {
                f[node.dim as usize] += 1;
            }
        }
        f
    }

    /// The subdiagram on elements of dimension at most `max_dim`.
    pub fn restrict_to_dim(&self, max_dim: i32) -> Self
    where
        L: Clone,
    {
        let mut remap = vec![None; self.nodes.len()];
        let mut nodes = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            if node.dim <= max_dim {
                remap[id] = Some(nodes.len());
                nodes.push(node.clone());
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter_map(|&(c, p)| Some((remap[c]?, remap[p]?)))
            .collect();
        Self {
            nodes,
            arcs,
            root: remap[self.root].expect("bottom always kept"),
            top: self.top.and_then(|t| remap[t]),
        }
    }

    /// Node ids in canonical order: by dimension, then by label.
    pub fn canonical_order(&self) -> Vec<NodeId>
    where
        L: Ord,
    {
        let mut order: Vec<NodeId> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&self.nodes[a], &self.nodes[b]);
            x.dim.cmp(&y.dim).then_with(|| x.label.cmp(&y.label))
        });
        order
    }

    /// Nodes and arcs re-indexed canonically; two diagrams are isomorphic as
    /// labeled graphs iff their canonical forms are equal.
    pub fn canonical_form(&self) -> CanonicalForm<L>
    where
        L: Ord + Clone,
    {
        let order = self.canonical_order();
        let mut new_id = vec![0; order.len()];
        for (i, &old) in order.iter().enumerate() {
            new_id[old] = i;
        }
        let nodes = order.iter().map(|&old| self.nodes[old].clone()).collect();
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(c, p)| (new_id[c], new_id[p])).collect();
        arcs.sort_unstable();
        CanonicalForm { nodes, arcs }
    }

    /// Checks acyclicity-by-grading: every arc raises dimension by one and,
    /// if a top is present, every non-top node has an out-arc and every
    /// non-root node an in-arc.
    pub fn check_graded(&self) -> Result<(), String> {
        let mut has_out = vec![false; self.nodes.len()];
        let mut has_in = vec![false; self.nodes.len()];
        for &(c, p) in &self.arcs {
            if self.nodes[p].dim != self.nodes[c].dim + 1 {
                return Err(format!(
                    "arc {c}->{p} joins dimensions {} and {}",
                    self.nodes[c].dim, self.nodes[p].dim
                ));
            }
            has_out[c] = true;
            has_in[p] = true;
        }
        if self.nodes[self.root].dim != -1 {
            return Err("bottom element does not have dimension -1".into());
        }
        for id in 0..self.nodes.len() {
            if id != self.root && !has_in[id] {
                return Err(format!("node {id} has no in-arc"));
            }
            if self.top.is_some() && Some(id) != self.top && !has_out[id] {
                return Err(format!("node {id} has no out-arc"));
            }
        }
        Ok(())
    }

    pub(crate) fn map_labels<M>(self, mut f: impl FnMut(L) -> M) -> HasseDiagram<M> {
        HasseDiagram {
            nodes: self
                .nodes
                .into_iter()
                .map(|n| Node {
                    dim: n.dim,
                    label: f(n.label),
                })
                .collect(),
            arcs: self.arcs,
            root: self.root,
            top: self.top,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm<L> {
    pub nodes: Vec<Node<L>>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// One rendered node label: a list of text fields plus the JSON fields.
pub(crate) struct RenderedNode {
    pub text: String,
    pub json: serde_json::Map<String, serde_json::Value>,
}

#[derive(Serialize)]
struct JsonNode {
    id: usize,
    dim: i32,
    #[serde(flatten)]
    fields: serde_json::Map<String, serde_json::Value>,
}

#[derive(Serialize)]
struct JsonDiagram {
    face_count: usize,
    arc_count: usize,
    dim: i32,
    nodes: Vec<JsonNode>,
    arcs: Vec<(usize, usize)>,
}

/// Writes `diagram` in canonical order, rendering each label with `render`.
pub(crate) fn write_canonical<L: Ord>(
    diagram: &HasseDiagram<L>,
    format: Format,
    mut render: impl FnMut(&L) -> RenderedNode,
) -> String {
    let order = diagram.canonical_order();
    let mut new_id = vec![0; order.len()];
    for (i, &old) in order.iter().enumerate() {
        new_id[old] = i;
    }
    let mut arcs: Vec<(usize, usize)> = diagram
        .arcs
        .iter()
        .map(|&(c, p)| (new_id[c], new_id[p]))
        .collect();
    arcs.sort_unstable();

    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "faces {} arcs {} dim {}",
                diagram.node_count(),
                arcs.len(),
                diagram.dim()
            )
            .unwrap();
            for (i, &old) in order.iter().enumerate() {
                let node = &diagram.nodes[old];
                let rendered = render(&node.label);
                write!(out, "{} {}", i, node.dim).unwrap();
                if !rendered.text.is_empty() {
                    write!(out, " {}", rendered.text).unwrap();
                }
                out.push('\n');
            }
            for (c, p) in arcs {
                writeln!(out, "{c} {p}").unwrap();
            }
            out
        }
        Format::Json => {
            let nodes = order
                .iter()
                .enumerate()
                .map(|(i, &old)| JsonNode {
                    id: i,
                    dim: diagram.nodes[old].dim,
                    fields: render(&diagram.nodes[old].label).json,
                })
                .collect();
            let doc = JsonDiagram {
                face_count: diagram.node_count(),
                arc_count: arcs.len(),
                dim: diagram.dim(),
                nodes,
                arcs,
            };
            let mut s = serde_json::to_string(&doc).expect("diagram serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> HasseDiagram<Vec<usize>> {
        // ∅ < {0} < {0,1}, built out of canonical order
        HasseDiagram::from_parts(
            vec![
                Node { dim: 1, label: vec![0, 1] },
                Node { dim: -1, label: vec![] },
                Node { dim: 0, label: vec![0] },
            ],
            vec![(2, 0), (1, 2)],
            1,
            Some(0),
        )
    }

    #[test]
    fn canonical_reindexing() {
        let form = chain().canonical_form();
        assert_eq!(form.nodes[0].label, Vec::<usize>::new());
        assert_eq!(form.arcs, vec![(0, 1), (1, 2)]);
        assert_eq!(chain().f_vector(), vec![1]);
        assert!(chain().check_graded().is_ok());
    }

    #[test]
    fn restriction_drops_upper_layers() {
        let r = chain().restrict_to_dim(0);
        assert_eq!(r.node_count(), 2);
        assert_eq!(r.arc_count(), 1);
        assert_eq!(r.top(), None);
        assert_eq!(r.dim(), 0);
    }

    #[test]
    fn grading_violation_detected() {
        let mut d = chain();
        d.arcs.push((1, 0));
        assert!(d.check_graded().is_err());
    }
}
