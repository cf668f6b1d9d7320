use crate::error::{Error, Result};

use super::{Graph, Vertex};

/// Which operation kinds a modification problem may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AllowedOps {
    pub delete_vertex: bool,
    pub delete_edge: bool,
    pub add_edge: bool,
}

impl AllowedOps {
    pub const ALL: AllowedOps = AllowedOps { delete_vertex: true, delete_edge: true, add_edge: true };
    pub const EDGE_EDITS: AllowedOps = AllowedOps { delete_vertex: false, delete_edge: true, add_edge: true };
    pub const EDGE_ADDITION: AllowedOps = AllowedOps { delete_vertex: false, delete_edge: false, add_edge: true };
    pub const EDGE_DELETION: AllowedOps = AllowedOps { delete_vertex: false, delete_edge: true, add_edge: false };
    pub const VERTEX_DELETION: AllowedOps = AllowedOps { delete_vertex: true, delete_edge: false, add_edge: false };
}

/// A finite family of forbidden induced subgraphs plus the operations allowed
/// to destroy them.
#[derive(Debug, Clone)]
pub struct ForbiddenSet {
    patterns: Vec<Pattern>,
    allowed: AllowedOps,
}

#[derive(Debug, Clone)]
struct Pattern {
    graph: Graph,
    /// Pattern vertices in matching order; each connects to an earlier one
    /// whenever its component allows.
    order: Vec<Vertex>,
    /// For `order[i]`, an index `j < i` with `order[j]` adjacent to it.
    anchor: Vec<Option<usize>>,
}

impl Pattern {
    fn new(graph: Graph) -> Pattern {
        let mut order: Vec<Vertex> = Vec::new();
        let mut anchor = Vec::new();
        let mut remaining: Vec<Vertex> = graph.vertices().collect();
        while !remaining.is_empty() {
            // Start each component at its highest-degree vertex.
            let start = *remaining
                .iter()
                .max_by_key(|&&v| (graph.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            let mut queue = std::collections::VecDeque::from([(start, None)]);
            remaining.retain(|&v| v != start);
            while let Some((v, parent)) = queue.pop_front() {
                order.push(v);
                anchor.push(parent);
                let idx = order.len() - 1;
                for w in graph.neighbours(v) {
                    if let Some(pos) = remaining.iter().position(|&r| r == w) {
                        remaining.remove(pos);
                        queue.push_back((w, Some(idx)));
                    }
                }
            }
        }
        Pattern { graph, order, anchor }
    }

    fn len(&self) -> usize {
        self.order.len()
    }
}

/// An induced copy of pattern `pattern`: `vertices[i]` is the image of the
/// pattern's `i`-th vertex (in the pattern's own id order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub pattern: usize,
    pub vertices: Vec<Vertex>,
}

impl ForbiddenSet {
    pub fn new(patterns: Vec<Graph>, allowed: AllowedOps) -> Result<ForbiddenSet> {
        if let Some(i) = patterns.iter().position(|p| p.vertex_count() == 0) {
            return Err(Error::InvariantViolation(format!("forbidden pattern {i} has no vertices")));
        }
        Ok(ForbiddenSet {
            patterns: patterns.into_iter().map(Pattern::new).collect(),
            allowed,
        })
    }

    /// Clusters: no induced path on three vertices; edge edits only.
    pub fn cluster() -> ForbiddenSet {
        ForbiddenSet::new(vec![Graph::path(3)], AllowedOps::EDGE_EDITS).unwrap()
    }

    /// Triangle-free graphs by vertex deletion.
    pub fn triangles() -> ForbiddenSet {
        ForbiddenSet::new(vec![Graph::complete(3)], AllowedOps::VERTEX_DELETION).unwrap()
    }

    pub fn allowed(&self) -> AllowedOps {
        self.allowed
    }

    pub fn with_allowed(mut self, allowed: AllowedOps) -> ForbiddenSet {
        self.allowed = allowed;
        self
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.patterns.iter().map(|p| &p.graph)
    }

    /// Largest pattern size (the constant `c` of the search-tree bound).
    pub fn max_pattern_size(&self) -> usize {
        self.patterns.iter().map(Pattern::len).max().unwrap_or(0)
    }
}

/// First induced occurrence of a forbidden pattern, or `None` if `g` has the
/// property. Patterns are tried in order; within a pattern, candidates are
/// scanned in increasing vertex id.
pub fn find_forbidden(g: &Graph, f: &ForbiddenSet) -> Option<Occurrence> {
    for (idx, pattern) in f.patterns.iter().enumerate() {
        let mut image = Vec::with_capacity(pattern.len());
        if extend(g, pattern, &mut image) {
            // Re-index from matching order to pattern id order.
            let mut pairs: Vec<(Vertex, Vertex)> =
                pattern.order.iter().copied().zip(image.iter().copied()).collect();
            pairs.sort_unstable();
            return Some(Occurrence {
                pattern: idx,
                vertices: pairs.into_iter().map(|(_, v)| v).collect(),
            });
        }
    }
    None
}

fn extend(g: &Graph, p: &Pattern, image: &mut Vec<Vertex>) -> bool {
    let i = image.len();
    if i == p.len() {
        return true;
    }
    let pv = p.order[i];
    let need = p.graph.degree(pv);
    let try_candidate = |cand: Vertex, image: &mut Vec<Vertex>| -> bool {
        if image.contains(&cand) || g.degree(cand) < need {
            return false;
        }
        let fits = (0..i).all(|j| p.graph.has_edge(pv, p.order[j]) == g.has_edge(cand, image[j]));
        if !fits {
            return false;
        }
        image.push(cand);
        if extend(g, p, image) {
            return true;
        }
        image.pop();
        false
    };
    match p.anchor[i] {
        Some(j) => {
            let host = image[j];
            let cands: Vec<Vertex> = g.neighbours(host).collect();
            cands.into_iter().any(|c| try_candidate(c, image))
        }
        None => {
            let cands: Vec<Vertex> = g.vertices().collect();
            cands.into_iter().any(|c| try_candidate(c, image))
        }
    }
}
