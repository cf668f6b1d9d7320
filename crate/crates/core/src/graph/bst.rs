use crate::error::Result;
use crate::order::{inclusion_minimal, OpSet};
use crate::problem::{MinimalSolutions, Problem};
use crate::search::SearchStats;

use super::{
    apply_one, apply_ops, find_forbidden, is_consistent, is_valid_for, operation_universe, ForbiddenSet, Graph,
    GraphOperation, OperationSet,
};

/// All inclusion-minimal solutions of `(g, k)` for the property "no pattern
/// of `f` occurs as an induced subgraph".
pub fn min_bst(g: &Graph, k: usize, f: &ForbiddenSet) -> Vec<OperationSet> {
    min_bst_with_stats(g, k, f).0
}

/// [`min_bst`] plus search-tree counters.
///
/// Each node looks for a forbidden occurrence `H` in the current graph. With
/// none left, the accumulated set is recorded. Otherwise the node branches on
/// every allowed operation inside `V(H)` that keeps the set consistent: delete
/// a vertex of `H`, delete an edge of `H`, or add a missing edge of `H`. Depth
/// is at most `k` and the width at most `c + c(c-1)` for patterns of at most
/// `c` vertices. A recorded set may contain a recorded set from another branch,
/// so the family is reduced to its inclusion-minimal members at the end.
pub fn min_bst_with_stats(g: &Graph, k: usize, f: &ForbiddenSet) -> (Vec<OperationSet>, SearchStats) {
    let mut search = Search { f, k, found: Vec::new(), stats: SearchStats::default() };
    let mut ops = OpSet::new();
    search.run(g, &mut ops);
    (inclusion_minimal(search.found), search.stats)
}

struct Search<'a> {
    f: &'a ForbiddenSet,
    k: usize,
    found: Vec<OperationSet>,
    stats: SearchStats,
}

impl Search<'_> {
    fn run(&mut self, current: &Graph, ops: &mut OperationSet) {
        self.stats.visit(ops.len());
        let Some(occ) = find_forbidden(current, self.f) else {
            self.found.push(ops.clone());
            self.stats.leaf();
            return;
        };
        if ops.len() >= self.k {
            self.stats.leaf();
            return;
        }
        let branches = self.branches(current, ops, &occ.vertices);
        if branches.is_empty() {
            self.stats.leaf();
            return;
        }
        for t in branches {
            let mut next = current.clone();
            apply_one(&mut next, t);
            ops.insert(t);
            self.run(&next, ops);
            ops.remove(&t);
        }
    }

    fn branches(&self, current: &Graph, ops: &OperationSet, occ: &[u32]) -> Vec<GraphOperation> {
        let allowed = self.f.allowed();
        let mut vs = occ.to_vec();
        vs.sort_unstable();
        let mut out = Vec::new();
        if allowed.delete_vertex {
            out.extend(vs.iter().map(|&v| GraphOperation::DeleteVertex(v)));
        }
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if current.has_edge(u, v) {
                    if allowed.delete_edge {
                        out.push(GraphOperation::delete_edge(u, v));
                    }
                } else if allowed.add_edge {
                    out.push(GraphOperation::add_edge(u, v));
                }
            }
        }
        out.retain(|t| !ops.contains(t) && is_consistent(&ops.with(*t)));
        out
    }
}

/// A graph modification instance `(G, k)` for a forbidden-set property.
///
/// Plugging a new property into the ordered enumerator needs nothing more
/// than its [`ForbiddenSet`]: the generic neighbourhood does the rest.
#[derive(Debug, Clone)]
pub struct ModificationProblem {
    graph: Graph,
    k: usize,
    forbidden: ForbiddenSet,
}

impl ModificationProblem {
    pub fn new(graph: Graph, k: usize, forbidden: ForbiddenSet) -> ModificationProblem {
        ModificationProblem { graph, k, forbidden }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forbidden(&self) -> &ForbiddenSet {
        &self.forbidden
    }

    /// Operation kinds, applicability, and consistency, without the property.
    pub fn is_admissible(&self, ops: &OperationSet) -> bool {
        let allowed = self.forbidden.allowed();
        ops.iter().all(|op| match op {
            GraphOperation::DeleteVertex(_) => allowed.delete_vertex,
            GraphOperation::DeleteEdge(_) => allowed.delete_edge,
            GraphOperation::AddEdge(_) => allowed.add_edge,
        }) && is_valid_for(&self.graph, ops)
    }
}

impl Problem for ModificationProblem {
    type Atom = GraphOperation;

    fn parameter(&self) -> usize {
        self.k
    }

    fn universe(&self) -> Vec<GraphOperation> {
        operation_universe(&self.graph, self.forbidden.allowed())
    }

    fn is_consistent(&self, set: &OperationSet) -> bool {
        is_consistent(set)
    }

    fn is_solution(&self, set: &OperationSet) -> bool {
        set.len() <= self.k
            && self.is_admissible(set)
            && apply_ops(&self.graph, set).is_ok_and(|h| find_forbidden(&h, &self.forbidden).is_none())
    }
}

impl MinimalSolutions for ModificationProblem {
    fn minimal_extensions(&self, applied: &OperationSet, budget: usize) -> Result<Vec<OperationSet>> {
        let residual = apply_ops(&self.graph, applied)?;
        Ok(min_bst(&residual, budget, &self.forbidden))
    }
}
