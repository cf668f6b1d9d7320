//! Triangle deletion: remove at most `k` vertices to leave a triangle-free
//! graph.
//!
//! This problem is nothing more than a [`ForbiddenSet`] of one pattern with
//! vertex deletion allowed; search and enumeration come from the generic
//! graph-modification machinery.

use crate::enumerate::build_neighbourhood;
use crate::error::Result;
use crate::graph::{min_bst_with_stats, ForbiddenSet, Graph, GraphOperation, ModificationProblem, OperationSet};
use crate::order::sort_dedup;
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

/// Checks every vertex triple.
pub fn is_triangle_free(g: &Graph) -> bool {
    let vs: Vec<_> = g.vertices().collect();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            if vs[j + 1..].iter().any(|&c| g.has_edge(a, c) && g.has_edge(b, c)) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct TriangleDeletion {
    inner: ModificationProblem,
}

impl TriangleDeletion {
    pub fn new(graph: Graph, k: usize) -> TriangleDeletion {
        TriangleDeletion { inner: ModificationProblem::new(graph, k, ForbiddenSet::triangles()) }
    }

    pub fn graph(&self) -> &Graph {
        self.inner.graph()
    }

    pub fn k(&self) -> usize {
        self.inner.parameter()
    }
}

pub fn min_triangle_deletion(g: &Graph, k: usize) -> Vec<OperationSet> {
    min_triangle_deletion_with_stats(g, k).0
}

pub fn min_triangle_deletion_with_stats(g: &Graph, k: usize) -> (Vec<OperationSet>, SearchStats) {
    let (found, stats) = min_bst_with_stats(g, k, &ForbiddenSet::triangles());
    (sort_dedup(found), stats)
}

impl Problem for TriangleDeletion {
    type Atom = GraphOperation;

    fn parameter(&self) -> usize {
        self.k()
    }

    fn universe(&self) -> Vec<GraphOperation> {
        self.inner.universe()
    }

    fn is_consistent(&self, set: &OperationSet) -> bool {
        self.inner.is_consistent(set)
    }

    fn is_solution(&self, set: &OperationSet) -> bool {
        set.len() <= self.k()
            && self.inner.is_admissible(set)
            && crate::graph::apply_ops(self.graph(), set).is_ok_and(|h| is_triangle_free(&h))
    }
}

impl MinimalSolutions for TriangleDeletion {
    fn minimal_extensions(&self, applied: &OperationSet, budget: usize) -> Result<Vec<OperationSet>> {
        self.inner.minimal_extensions(applied, budget)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VertexRemoval<'a> {
    instance: &'a TriangleDeletion,
}

impl<'a> VertexRemoval<'a> {
    pub fn new(instance: &'a TriangleDeletion) -> Self {
        VertexRemoval { instance }
    }
}

impl Neighbourhood for VertexRemoval<'_> {
    type Atom = GraphOperation;

    fn neighbours(&self, input: NeighbourhoodInput<'_, GraphOperation>) -> Result<Vec<OperationSet>> {
        build_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_all;

    fn delv(vs: &[u32]) -> OperationSet {
        vs.iter().map(|&v| GraphOperation::delete_vertex(v)).collect()
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(min_triangle_deletion(&Graph::cycle(5), 0), vec![delv(&[])]);
        assert_eq!(min_triangle_deletion(&Graph::complete(3), 1), vec![delv(&[1]), delv(&[2]), delv(&[3])]);
        assert!(min_triangle_deletion(&Graph::complete(4), 1).is_empty());
        assert_eq!(min_triangle_deletion(&Graph::complete(4), 2).len(), 6);
    }

    #[test]
    fn triangle_free_check() {
        assert!(is_triangle_free(&Graph::cycle(4)));
        assert!(!is_triangle_free(&Graph::complete(3)));
        assert!(is_triangle_free(&Graph::empty(3)));
    }

    #[test]
    fn all_mode_on_k3() {
        let x = TriangleDeletion::new(Graph::complete(3), 2);
        let all = enumerate_all(&VertexRemoval::new(&x)).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|s| s.iter().all(|op| matches!(op, GraphOperation::DeleteVertex(_)))));
    }
}
