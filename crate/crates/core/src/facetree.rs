//! The face tree: a trie over canonical spanning sets, used to find the
//! diagram node of a face that may already have been seen.
//!
//! Children are kept in a sorted vector and searched by label. A balanced
//! tree per node (or one global search tree keyed by spanning set) would
//! lower the per-step search cost to logarithmic without changing the
//! overall bound.

use crate::closure::retain_common;
use crate::incidence::{Incidence, VertexSet};

/// Index of a node in a [`crate::HasseDiagram`].
pub type NodeId = usize;

#[derive(Clone, Debug, Default)]
struct TreeNode {
    children: Vec<(usize, usize)>,
    diagram: Option<NodeId>,
}

#[derive(Clone, Debug)]
pub struct FaceTree {
    nodes: Vec<TreeNode>,
    depth: usize,
}

/// The lexicographically first generating subset of the closed set `s`, in
/// the order of a greedy scan: each element is kept iff it enlarges the
/// closure of the elements kept before it.
///
/// Runs on the running intersection Facets({s1}) ∩ … ∩ Facets({si}); an
/// element is kept exactly when that intersection shrinks.
pub fn canonical_spanning_set(inc: &Incidence, s: &[usize]) -> VertexSet {
    debug_assert_eq!(crate::closure::closure(inc, s), s, "input face is not closed");
    if s.len() <= 2 {
        return s.to_vec();
    }
    let mut running = inc.vertex(s[0]).to_vec();
    retain_common(&mut running, inc.vertex(s[1]), &mut 0);
    let mut out = vec![s[0], s[1]];
    for &v in &s[2..] {
        let before = running.len();
        retain_common(&mut running, inc.vertex(v), &mut 0);
        if running.len() < before {
            out.push(v);
        }
    }
    out
}

impl FaceTree {
    /// A tree whose root stands for the empty face, mapped to `root`.
    pub fn new(root: NodeId) -> Self {
        Self {
            nodes: vec![TreeNode {
                children: Vec::new(),
                diagram: Some(root),
            }],
            depth: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length of the longest root-to-node path.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Locates the face with spanning set `key` (strictly increasing), or
    /// creates it. Missing intermediate tree nodes get no diagram node; a
    /// terminal node without one gets `make_node()` and reports `true`.
    pub fn locate_or_create_key(
        &mut self,
        key: &[usize],
        make_node: impl FnOnce() -> NodeId,
    ) -> (NodeId, bool) {
        let mut at = 0;
        for (depth, &label) in key.iter().enumerate() {
            at = match self.nodes[at]
                .children
                .binary_search_by_key(&label, |&(l, _)| l)
            {
                Ok(i) => self.nodes[at].children[i].1,
                Err(i) => {
                    let child = self.nodes.len();
                    self.nodes.push(TreeNode::default());
                    self.nodes[at].children.insert(i, (label, child));
                    self.depth = self.depth.max(depth + 1);
                    child
                }
            };
        }
        match self.nodes[at].diagram {
            Some(id) => (id, false),
            None => {
                let id = make_node();
                self.nodes[at].diagram = Some(id);
                (id, true)
            }
        }
    }

    /// Locates or creates the node for the nonempty face `s`.
    pub fn locate_or_create(
        &mut self,
        inc: &Incidence,
        s: &[usize],
        make_node: impl FnOnce() -> NodeId,
    ) -> (NodeId, bool) {
        let key = canonical_spanning_set(inc, s);
        self.locate_or_create_key(&key, make_node)
    }

    /// Diagram node stored at the end of `key`, if the path exists.
    pub fn get(&self, key: &[usize]) -> Option<NodeId> {
        let mut at = 0;
        for &label in key {
            let children = &self.nodes[at].children;
            let i = children.binary_search_by_key(&label, |&(l, _)| l).ok()?;
            at = children[i].1;
        }
        self.nodes[at].diagram
    }

    /// Checks the structural invariants by traversal: distinct child labels,
    /// labels increasing along paths, recorded depth exact. Returns the
    /// number of nodes without a diagram reference.
    pub fn check_invariants(&self) -> Result<usize, String> {
        let mut stack = vec![(0usize, None::<usize>, 0usize)];
        let mut seen = 0;
        let mut max_depth = 0;
        let mut nil = 0;
        while let Some((at, parent_label, depth)) = stack.pop() {
            seen += 1;
            max_depth = max_depth.max(depth);
            let node = &self.nodes[at];
            if node.diagram.is_none() {
                nil += 1;
            }
            for pair in node.children.windows(2) {
                if pair[0].0 >= pair[1].0 {
                    return Err(format!("tree node {at}: child labels not strictly sorted"));
                }
            }
            for &(label, child) in &node.children {
                if parent_label.is_some_and(|p| p >= label) {
                    return Err(format!("tree node {child}: label {label} does not increase"));
                }
                stack.push((child, Some(label), depth + 1));
            }
        }
        if seen != self.nodes.len() {
            return Err(format!("{} tree nodes unreachable", self.nodes.len() - seen));
        }
        if max_depth != self.depth {
            return Err(format!("depth {} recorded as {}", max_depth, self.depth));
        }
        Ok(nil)
    }
}
