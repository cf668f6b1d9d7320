//! Undirected simple graphs, graph operations, and graph modification.

mod bst;
mod dimacs;
mod pattern;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::order::{Atom, OpSet};

pub use bst::{min_bst, min_bst_with_stats, ModificationProblem};
pub use dimacs::{parse_graph, write_graph};
pub use pattern::{find_forbidden, AllowedOps, ForbiddenSet, Occurrence};

pub type Vertex = u32;

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// # Panics
    ///
    /// On a self-loop.
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        assert_ne!(u, v, "self-loop {u}-{u}");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

/// One graph operation. Variant order is the canonical opcode order:
/// vertex deletions, then edge deletions, then edge additions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphOperation {
    DeleteVertex(Vertex),
    DeleteEdge(Edge),
    AddEdge(Edge),
}

impl GraphOperation {
    pub fn delete_vertex(v: Vertex) -> Self {
        GraphOperation::DeleteVertex(v)
    }

    pub fn delete_edge(u: Vertex, v: Vertex) -> Self {
        GraphOperation::DeleteEdge(Edge::new(u, v))
    }

    pub fn add_edge(u: Vertex, v: Vertex) -> Self {
        GraphOperation::AddEdge(Edge::new(u, v))
    }

    fn opcode(self) -> u8 {
        match self {
            GraphOperation::DeleteVertex(_) => 0,
            GraphOperation::DeleteEdge(_) => 1,
            GraphOperation::AddEdge(_) => 2,
        }
    }

    pub fn edge(self) -> Option<Edge> {
        match self {
            GraphOperation::DeleteVertex(_) => None,
            GraphOperation::DeleteEdge(e) | GraphOperation::AddEdge(e) => Some(e),
        }
    }
}

impl Atom for GraphOperation {
    fn encode(&self, out: &mut Vec<u8>) {
        let (a, b) = match *self {
            GraphOperation::DeleteVertex(v) => (v, 0),
            GraphOperation::DeleteEdge(e) | GraphOperation::AddEdge(e) => e.endpoints(),
        };
        out.push(self.opcode());
        out.extend_from_slice(&a.to_be_bytes());
        out.extend_from_slice(&b.to_be_bytes());
    }

    fn op_name(&self) -> &'static str {
        match self {
            GraphOperation::DeleteVertex(_) => "delv",
            GraphOperation::DeleteEdge(_) => "del",
            GraphOperation::AddEdge(_) => "add",
        }
    }

    fn operands(&self) -> Vec<u32> {
        match *self {
            GraphOperation::DeleteVertex(v) => vec![v],
            GraphOperation::DeleteEdge(e) | GraphOperation::AddEdge(e) => {
                let (u, v) = e.endpoints();
                vec![u, v]
            }
        }
    }
}

impl fmt::Display for GraphOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = self.operands();
        match args.as_slice() {
            [v] => write!(f, "{}({v})", self.op_name()),
            [u, v] => write!(f, "{}({u},{v})", self.op_name()),
            _ => unreachable!(),
        }
    }
}

pub type OperationSet = OpSet<GraphOperation>;

/// Undirected simple graph over arbitrary vertex ids.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Vertices `1..=n` and the given edges.
    ///
    /// # Panics
    ///
    /// If an edge is a self-loop or names a vertex outside `1..=n`.
    pub fn from_edges(n: u32, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut g = Graph::with_vertices(1..=n);
        for &(u, v) in edges {
            assert!(g.has_vertex(u) && g.has_vertex(v), "edge {u}-{v} outside 1..={n}");
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = Vertex>) -> Graph {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    /// Empty graph on `1..=n`.
    pub fn empty(n: u32) -> Graph {
        Graph::with_vertices(1..=n)
    }

    pub fn complete(n: u32) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u32) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: u32) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n, 1);
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds both endpoints if missing. Returns `false` if the edge existed.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert_ne!(u, v, "self-loop {u}-{u}");
        self.adj.entry(v).or_default().insert(u);
        self.adj.entry(u).or_default().insert(v)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let a = self.adj.get_mut(&u).is_some_and(|n| n.remove(&v));
        let b = self.adj.get_mut(&v).is_some_and(|n| n.remove(&u));
        a && b
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for u in nbrs {
                    if let Some(n) = self.adj.get_mut(&u) {
                        n.remove(&v);
                    }
                }
                true
            }
            None => false,
        }
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Neighbours in increasing id order; empty for an absent vertex.
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn neighbour_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    /// Edges in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    /// Vertex pairs that are not edges, in increasing order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let vs: Vec<Vertex> = self.vertices().collect();
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbours(u) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on the given vertices (absent ones are ignored).
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let keep: BTreeSet<Vertex> = vertices.iter().copied().filter(|v| self.has_vertex(*v)).collect();
        Graph {
            adj: keep
                .iter()
                .map(|&v| (v, self.adj[&v].intersection(&keep).copied().collect()))
                .collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<_> = self.vertices().collect();
        let es: Vec<_> = self.edges().map(|e| e.endpoints()).collect();
        f.debug_struct("Graph").field("vertices", &vs).field("edges", &es).finish()
    }
}

/// Checks both consistency clauses: no edge is both added and deleted, and no
/// deleted vertex is touched by an edge operation.
pub fn is_consistent(ops: &OperationSet) -> bool {
    let deleted: BTreeSet<Vertex> = ops
        .iter()
        .filter_map(|op| match op {
            GraphOperation::DeleteVertex(v) => Some(*v),
            _ => None,
        })
        .collect();
    ops.iter().all(|op| match *op {
        GraphOperation::DeleteVertex(_) => true,
        GraphOperation::DeleteEdge(e) => {
            let (u, v) = e.endpoints();
            !ops.contains(&GraphOperation::AddEdge(e)) && !deleted.contains(&u) && !deleted.contains(&v)
        }
        GraphOperation::AddEdge(e) => {
            let (u, v) = e.endpoints();
            !deleted.contains(&u) && !deleted.contains(&v)
        }
    })
}

/// Whether a single operation has a valid target in `g`.
pub fn is_applicable(g: &Graph, op: GraphOperation) -> bool {
    match op {
        GraphOperation::DeleteVertex(v) => g.has_vertex(v),
        GraphOperation::DeleteEdge(e) => {
            let (u, v) = e.endpoints();
            g.has_edge(u, v)
        }
        GraphOperation::AddEdge(e) => {
            let (u, v) = e.endpoints();
            g.has_vertex(u) && g.has_vertex(v) && !g.has_edge(u, v)
        }
    }
}

/// Applies one operation in place, without checks.
pub(crate) fn apply_one(g: &mut Graph, op: GraphOperation) {
    match op {
        GraphOperation::DeleteVertex(v) => {
            g.remove_vertex(v);
        }
        GraphOperation::DeleteEdge(e) => {
            let (u, v) = e.endpoints();
            g.remove_edge(u, v);
        }
        GraphOperation::AddEdge(e) => {
            let (u, v) = e.endpoints();
            g.add_edge(u, v);
        }
    }
}

/// The graph `S(G)`. Surviving vertices keep their ids.
pub fn apply_ops(g: &Graph, ops: &OperationSet) -> Result<Graph> {
    if !is_consistent(ops) {
        return Err(Error::InconsistentSet(ops.to_string()));
    }
    if let Some(op) = ops.iter().find(|op| !is_applicable(g, **op)) {
        return Err(Error::InapplicableOperation(op.to_string()));
    }
    let mut out = g.clone();
    // Edge operations first; consistency keeps them away from deleted vertices.
    for op in ops.iter().rev() {
        apply_one(&mut out, *op);
    }
    Ok(out)
}

/// Whether every operation of `ops` is applicable to `g` and the set is
/// consistent, i.e. whether `apply_ops` would succeed.
pub fn is_valid_for(g: &Graph, ops: &OperationSet) -> bool {
    is_consistent(ops) && ops.iter().all(|op| is_applicable(g, *op))
}

/// All applicable operations of the allowed kinds, in canonical order.
pub fn operation_universe(g: &Graph, allowed: AllowedOps) -> Vec<GraphOperation> {
    let mut out = Vec::new();
    if allowed.delete_vertex {
        out.extend(g.vertices().map(GraphOperation::DeleteVertex));
    }
    if allowed.delete_edge {
        out.extend(g.edges().map(GraphOperation::DeleteEdge));
    }
    if allowed.add_edge {
        out.extend(g.non_edges().into_iter().map(GraphOperation::AddEdge));
    }
    out
}
