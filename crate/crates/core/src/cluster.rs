//! Cluster editing: make every connected component a clique by adding and
//! deleting at most `k` edges.

use crate::error::Result;
use crate::graph::{
    apply_ops, is_consistent, min_bst_with_stats, ForbiddenSet, Graph, GraphOperation, ModificationProblem,
    OperationSet, Vertex,
};
use crate::order::sort_dedup;
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

/// Whether every connected component is a clique (equivalently, no induced P3).
pub fn is_cluster(g: &Graph) -> bool {
    g.components()
        .iter()
        .all(|comp| comp.iter().all(|&v| g.degree(v) == comp.len() - 1))
}

#[derive(Debug, Clone)]
pub struct ClusterInstance {
    inner: ModificationProblem,
}

impl ClusterInstance {
    pub fn new(graph: Graph, k: usize) -> ClusterInstance {
        ClusterInstance {
            inner: ModificationProblem::new(graph, k, ForbiddenSet::cluster()),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.inner.graph()
    }

    pub fn k(&self) -> usize {
        self.inner.parameter()
    }
}

/// Inclusion-minimal edit sets, sorted.
pub fn min_cluster_edit(x: &ClusterInstance) -> Vec<OperationSet> {
    min_cluster_edit_with_stats(x).0
}

pub fn min_cluster_edit_with_stats(x: &ClusterInstance) -> (Vec<OperationSet>, SearchStats) {
    let (found, stats) = min_bst_with_stats(x.graph(), x.k(), x.inner.forbidden());
    (sort_dedup(found), stats)
}

impl Problem for ClusterInstance {
    type Atom = GraphOperation;

    fn parameter(&self) -> usize {
        self.k()
    }

    fn universe(&self) -> Vec<GraphOperation> {
        self.inner.universe()
    }

    fn is_consistent(&self, set: &OperationSet) -> bool {
        is_consistent(set)
    }

    fn is_solution(&self, set: &OperationSet) -> bool {
        set.len() <= self.k()
            && self.inner.is_admissible(set)
            && apply_ops(self.graph(), set).is_ok_and(|h| is_cluster(&h))
    }
}

impl MinimalSolutions for ClusterInstance {
    fn minimal_extensions(&self, applied: &OperationSet, budget: usize) -> Result<Vec<OperationSet>> {
        self.inner.minimal_extensions(applied, budget)
    }
}

/// Merge/split neighbourhood.
///
/// The seed maps to the minimal edit sets. A solution `S` maps to every
/// consistent superset obtained by merging two cliques of `S(G)` (adding all
/// `i·j` edges between them) or by splitting one clique into two parts
/// (deleting the `a·(ℓ−a) >= ℓ−1` edges across), within the budget `k − |S|`.
pub fn ce_neighbourhood(x: &ClusterInstance, input: NeighbourhoodInput<'_, GraphOperation>) -> Result<Vec<OperationSet>> {
    let s = match input {
        NeighbourhoodInput::Seed => return Ok(min_cluster_edit(x)),
        NeighbourhoodInput::Solution(s) => s,
    };
    if s.len() >= x.k() {
        return Ok(Vec::new());
    }
    let room = x.k() - s.len();
    let cliques = apply_ops(x.graph(), s)?.components();
    let mut out = Vec::new();

    for (i, a) in cliques.iter().enumerate() {
        for b in &cliques[i + 1..] {
            if a.len() * b.len() > room {
                continue;
            }
            let mut next = s.clone();
            for &u in a {
                for &v in b {
                    next.insert(GraphOperation::add_edge(u, v));
                }
            }
            if is_consistent(&next) {
                out.push(next);
            }
        }
    }

    for clique in cliques.iter().filter(|c| c.len() >= 2 && c.len() <= room + 1) {
        for (left, right) in bipartitions(clique) {
            if left.len() * right.len() > room {
                continue;
            }
            let mut next = s.clone();
            for &u in &left {
                for &v in &right {
                    next.insert(GraphOperation::delete_edge(u, v));
                }
            }
            if is_consistent(&next) {
                out.push(next);
            }
        }
    }
    Ok(sort_dedup(out))
}

/// Proper bipartitions `{A, C∖A}` of `c`, each listed once (`c[0] ∈ A`).
fn bipartitions(c: &[Vertex]) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let rest = &c[1..];
    let full = (1u64 << rest.len()) - 1;
    (0..full)
        .map(|mask| {
            let mut left = vec![c[0]];
            let mut right = Vec::new();
            for (i, &v) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(v);
                } else {
                    right.push(v);
                }
            }
            (left, right)
        })
        .collect()
}

/// [`ce_neighbourhood`] as a [`Neighbourhood`].
#[derive(Debug, Clone, Copy)]
pub struct MergeSplit<'a> {
    instance: &'a ClusterInstance,
}

impl<'a> MergeSplit<'a> {
    pub fn new(instance: &'a ClusterInstance) -> Self {
        MergeSplit { instance }
    }
}

impl Neighbourhood for MergeSplit<'_> {
    type Atom = GraphOperation;

    fn neighbours(&self, input: NeighbourhoodInput<'_, GraphOperation>) -> Result<Vec<OperationSet>> {
        ce_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OpSet;

    fn set(ops: &[GraphOperation]) -> OperationSet {
        ops.iter().copied().collect()
    }

    #[test]
    fn cluster_recognition() {
        assert!(is_cluster(&Graph::complete(3)));
        assert!(!is_cluster(&Graph::path(3)));
        let two_cliques = Graph::from_edges(5, &[(1, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(is_cluster(&two_cliques));
    }

    #[test]
    fn p4_needs_its_middle_edge_removed() {
        let one = min_cluster_edit(&ClusterInstance::new(Graph::path(4), 1));
        assert_eq!(one, vec![[GraphOperation::delete_edge(2, 3)].into_iter().collect()]);
        assert!(min_cluster_edit(&ClusterInstance::new(Graph::cycle(5), 1)).is_empty());
    }

    #[test]
    fn cluster_input_minimal_is_empty_set() {
        for k in 0..3 {
            assert_eq!(min_cluster_edit(&ClusterInstance::new(Graph::complete(4), k)), vec![OpSet::new()]);
        }
    }

    #[test]
    fn seed_on_triangle() {
        let x = ClusterInstance::new(Graph::complete(3), 2);
        assert_eq!(ce_neighbourhood(&x, NeighbourhoodInput::Seed).unwrap(), vec![OpSet::new()]);
    }

    #[test]
    fn triangle_splits_into_edge_and_vertex() {
        let x = ClusterInstance::new(Graph::complete(3), 2);
        let empty = OpSet::new();
        let got = ce_neighbourhood(&x, NeighbourhoodInput::Solution(&empty)).unwrap();
        let d = GraphOperation::delete_edge;
        assert_eq!(got, vec![set(&[d(1, 2), d(1, 3)]), set(&[d(1, 2), d(2, 3)]), set(&[d(1, 3), d(2, 3)])]);
    }

    #[test]
    fn two_singletons_merge() {
        let x = ClusterInstance::new(Graph::empty(2), 1);
        let empty = OpSet::new();
        let got = ce_neighbourhood(&x, NeighbourhoodInput::Solution(&empty)).unwrap();
        assert_eq!(got, vec![set(&[GraphOperation::add_edge(1, 2)])]);
    }

    #[test]
    fn merge_that_undoes_a_deletion_is_dropped() {
        // Deleting 1-2 splits K2; merging back would re-add 1-2.
        let x = ClusterInstance::new(Graph::complete(2), 3);
        let s = set(&[GraphOperation::delete_edge(1, 2)]);
        assert!(ce_neighbourhood(&x, NeighbourhoodInput::Solution(&s)).unwrap().is_empty());
    }

    #[test]
    fn full_budget_has_no_neighbours() {
        let x = ClusterInstance::new(Graph::path(3), 1);
        let s = set(&[GraphOperation::add_edge(1, 3)]);
        assert!(ce_neighbourhood(&x, NeighbourhoodInput::Solution(&s)).unwrap().is_empty());
    }

    #[test]
    fn merge_costs_product_and_split_at_least_l_minus_one() {
        // K2 ∪ K3: one merge of 2·3 additions, one split of K2 (1 deletion),
        // three splits of K3 (2 deletions each).
        let x = ClusterInstance::new(Graph::from_edges(5, &[(1, 2), (3, 4), (4, 5), (3, 5)]), 6);
        let empty = OpSet::new();
        let mut sizes: Vec<(usize, usize)> = ce_neighbourhood(&x, NeighbourhoodInput::Solution(&empty))
            .unwrap()
            .iter()
            .map(|n| {
                let adds = n.iter().filter(|op| matches!(op, GraphOperation::AddEdge(_))).count();
                (adds, n.len() - adds)
            })
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(0, 1), (0, 2), (0, 2), (0, 2), (6, 0)]);
    }

    #[test]
    fn bipartitions_of_three() {
        assert_eq!(bipartitions(&[1, 2, 3]).len(), 3);
        assert_eq!(bipartitions(&[7]).len(), 0);
    }
}
