//! Chordal completion: add at most `k` edges so that every cycle of length
//! four or more has a chord.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::enumerate::build_neighbourhood;
use crate::error::Result;
use crate::graph::{apply_ops, is_consistent, Graph, GraphOperation, OperationSet, Vertex};
use crate::order::{inclusion_minimal, sort_dedup, OpSet};
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

/// A set of edge additions.
pub type Triangulation = OperationSet;

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let order = mcs_order(g);
    let position: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (i, &v) in order.iter().enumerate() {
        let earlier: Vec<Vertex> = g.neighbours(v).filter(|w| position[w] < i).collect();
        let Some(&parent) = earlier.iter().max_by_key(|w| position[w]) else {
            continue;
        };
        if earlier.iter().any(|&w| w != parent && !g.has_edge(w, parent)) {
            return false;
        }
    }
    true
}

/// Visit order of maximum cardinality search; ties go to the smaller id.
fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let mut weight: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut order = Vec::with_capacity(weight.len());
    while let Some((&v, _)) = weight.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))) {
        weight.remove(&v);
        order.push(v);
        for w in g.neighbours(v) {
            if let Some(c) = weight.get_mut(&w) {
                *c += 1;
            }
        }
    }
    order
}

/// A chordless cycle of length at least four, or `None` if `g` is chordal.
///
/// For the first vertex `v` (by id) with two non-adjacent neighbours `u < w`
/// that stay connected once the rest of `N[v]` is removed, the cycle is `v`
/// followed by a shortest `u`–`w` path in that subgraph. Shortest paths are
/// induced and avoid `N(v)` inside, so the cycle has no chord.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    for v in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbours(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked: BTreeSet<Vertex> =
                    nbrs.iter().copied().filter(|&x| x != u && x != w).chain([v]).collect();
                if let Some(path) = shortest_path(g, u, w, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: Vertex, to: Vertex, blocked: &BTreeSet<Vertex>) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    parent.insert(from, from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbours(x) {
            if !blocked.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    None
}

/// All inclusion-minimal sets of at most `k` added edges that make `g` chordal.
pub fn min_k_triangulations(g: &Graph, k: usize) -> Vec<Triangulation> {
    min_k_triangulations_with_stats(g, k).0
}

/// Bounded search: find a chordless cycle `C`; every triangulation adds a
/// chord of `C` and needs at least `|C| − 3` of them, so prune when that
/// exceeds the budget and otherwise branch on each of the `|C|(|C|−3)/2`
/// chords. Recorded sets are reduced to the inclusion-minimal ones.
pub fn min_k_triangulations_with_stats(g: &Graph, k: usize) -> (Vec<Triangulation>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    let mut added = OpSet::new();
    triangulate(g, k, &mut added, &mut found, &mut stats);
    (inclusion_minimal(found), stats)
}

fn triangulate(
    current: &Graph,
    k: usize,
    added: &mut Triangulation,
    found: &mut Vec<Triangulation>,
    stats: &mut SearchStats,
) {
    stats.visit(added.len());
    let Some(cycle) = find_chordless_cycle(current) else {
        found.push(added.clone());
        stats.leaf();
        return;
    };
    if cycle.len() - 3 > k - added.len() {
        stats.leaf();
        return;
    }
    let n = cycle.len();
    for i in 0..n {
        // Skip the cycle edge (n-1, 0) when i == 0.
        let last = if i == 0 { n - 1 } else { n };
        for j in i + 2..last {
            let (u, v) = (cycle[i], cycle[j]);
            let mut next = current.clone();
            next.add_edge(u, v);
            let t = GraphOperation::add_edge(u, v);
            added.insert(t);
            triangulate(&next, k, added, found, stats);
            added.remove(&t);
        }
    }
}

#[derive(Debug, Clone)]
pub struct ChordalInstance {
    graph: Graph,
    k: usize,
}

impl ChordalInstance {
    pub fn new(graph: Graph, k: usize) -> ChordalInstance {
        ChordalInstance { graph, k }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Problem for ChordalInstance {
    type Atom = GraphOperation;

    fn parameter(&self) -> usize {
        self.k
    }

    fn universe(&self) -> Vec<GraphOperation> {
        self.graph.non_edges().into_iter().map(GraphOperation::AddEdge).collect()
    }

    fn is_consistent(&self, set: &OperationSet) -> bool {
        is_consistent(set)
    }

    fn is_solution(&self, set: &OperationSet) -> bool {
        set.len() <= self.k
            && set.iter().all(|op| matches!(op, GraphOperation::AddEdge(_)))
            && apply_ops(&self.graph, set).is_ok_and(|h| is_chordal(&h))
    }
}

impl MinimalSolutions for ChordalInstance {
    fn minimal_extensions(&self, applied: &OperationSet, budget: usize) -> Result<Vec<Triangulation>> {
        let residual = apply_ops(&self.graph, applied)?;
        Ok(min_k_triangulations(&residual, budget))
    }
}

/// The seed maps to the minimal `k`-triangulations; a solution `S` maps to
/// `S ∪ {uv} ∪ T` for every non-edge `uv` of `G + S` and every minimal
/// `(k − |S| − 1)`-triangulation `T` of `G + S + uv`.
pub fn cc_neighbourhood(x: &ChordalInstance, input: NeighbourhoodInput<'_, GraphOperation>) -> Result<Vec<Triangulation>> {
    build_neighbourhood(x, input).map(sort_dedup)
}

#[derive(Debug, Clone, Copy)]
pub struct FillIn<'a> {
    instance: &'a ChordalInstance,
}

impl<'a> FillIn<'a> {
    pub fn new(instance: &'a ChordalInstance) -> Self {
        FillIn { instance }
    }
}

impl Neighbourhood for FillIn<'_> {
    type Atom = GraphOperation;

    fn neighbours(&self, input: NeighbourhoodInput<'_, GraphOperation>) -> Result<Vec<Triangulation>> {
        cc_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn add(u: u32, v: u32) -> GraphOperation {
        GraphOperation::add_edge(u, v)
    }

    fn set(ops: &[GraphOperation]) -> Triangulation {
        ops.iter().copied().collect()
    }

    /// Any induced cycle of length >= 4, by scanning vertex subsets.
    fn has_long_induced_cycle(g: &Graph) -> bool {
        let vs: Vec<Vertex> = g.vertices().collect();
        (4..=vs.len()).any(|size| {
            vs.iter().copied().combinations(size).any(|sub| {
                let h = g.induced(&sub);
                h.vertices().all(|v| h.degree(v) == 2) && h.components().len() == 1
            })
        })
    }

    fn is_chordless_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
        let n = cycle.len();
        n >= 4
            && cycle.iter().all_unique()
            && (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let adjacent_in_cycle = j == i + 1 || (i == 0 && j == n - 1);
                    g.has_edge(cycle[i], cycle[j]) == adjacent_in_cycle
                })
            })
    }

    #[test]
    fn trees_are_chordal() {
        let star = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (4, 5)]);
        assert!(is_chordal(&star));
        assert!(is_chordal(&Graph::path(6)));
    }

    #[test]
    fn cycles() {
        assert!(!is_chordal(&Graph::cycle(4)));
        let mut c4 = Graph::cycle(4);
        c4.add_edge(1, 3);
        assert!(is_chordal(&c4));
        assert!(is_chordal(&Graph::complete(5)));
    }

    #[test]
    fn witness_cycles() {
        assert_eq!(find_chordless_cycle(&Graph::cycle(4)).unwrap().len(), 4);
        assert_eq!(find_chordless_cycle(&Graph::complete(4)), None);
        let c5 = find_chordless_cycle(&Graph::cycle(5)).unwrap();
        assert!(is_chordless_cycle(&Graph::cycle(5), &c5));
        assert_eq!(c5.len(), 5);
    }

    #[test]
    fn c4_one_edge() {
        assert_eq!(min_k_triangulations(&Graph::cycle(4), 1), vec![set(&[add(1, 3)]), set(&[add(2, 4)])]);
    }

    #[test]
    fn c5_fans() {
        let got = min_k_triangulations(&Graph::cycle(5), 2);
        assert_eq!(got.len(), 5);
        // Each fan is two chords sharing an apex.
        for t in &got {
            let ends: Vec<u32> = t.iter().flat_map(|op| op.edge().map(|e| [e.endpoints().0, e.endpoints().1])).flatten().collect();
            assert_eq!(ends.len(), 4);
            assert!(ends.iter().any(|v| ends.iter().filter(|w| *w == v).count() == 2));
        }
    }

    #[test]
    fn long_cycle_beyond_budget() {
        assert!(min_k_triangulations(&Graph::cycle(7), 3).is_empty());
        assert_eq!(min_k_triangulations(&Graph::cycle(7), 4).len(), 42);
    }

    #[test]
    fn chordal_input() {
        assert_eq!(min_k_triangulations(&Graph::complete(3), 2), vec![OpSet::new()]);
    }

    #[test]
    fn neighbourhood_examples() {
        let x = ChordalInstance::new(Graph::cycle(4), 3);
        assert_eq!(
            cc_neighbourhood(&x, NeighbourhoodInput::Seed).unwrap(),
            vec![set(&[add(1, 3)]), set(&[add(2, 4)])]
        );
        let x = ChordalInstance::new(Graph::cycle(4), 2);
        let diag = set(&[add(1, 3)]);
        assert_eq!(
            cc_neighbourhood(&x, NeighbourhoodInput::Solution(&diag)).unwrap(),
            vec![set(&[add(1, 3), add(2, 4)])]
        );
        let both = set(&[add(1, 3), add(2, 4)]);
        assert!(cc_neighbourhood(&x, NeighbourhoodInput::Solution(&both)).unwrap().is_empty());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (4u32..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), (n * (n - 1) / 2) as usize).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut bits = bits.into_iter();
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn chordality_matches_induced_cycle_scan(g in arb_graph()) {
            prop_assert_eq!(is_chordal(&g), !has_long_induced_cycle(&g));
            match find_chordless_cycle(&g) {
                Some(c) => prop_assert!(is_chordless_cycle(&g, &c)),
                None => prop_assert!(is_chordal(&g)),
            }
        }
    }
}
