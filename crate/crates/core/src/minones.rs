//! Satisfying assignments of bounded weight.
//!
//! An assignment is identified with its true-set `T`; its weight is `|T|`.
//! Minimality is by inclusion of true-sets.

use std::collections::BTreeSet;

use crate::cnf::CnfFormula;
use crate::enumerate::build_neighbourhood;
use crate::error::Result;
use crate::order::{inclusion_minimal, sort_dedup, OpSet, Var};
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

/// The variables set to true.
pub type TrueSet = OpSet<Var>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinOnes {
    phi: CnfFormula,
    k: usize,
}

impl MinOnes {
    pub fn new(phi: CnfFormula, k: usize) -> MinOnes {
        MinOnes { phi, k }
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.phi
    }

    pub fn is_model(&self, t: &TrueSet) -> bool {
        self.phi.satisfied_by_ones(t.as_set())
    }
}

/// Inclusion-minimal models of weight at most `k`.
///
/// Starts from all-false and repeatedly picks the first clause the current
/// assignment falsifies. Its negative literals are over true variables, so a
/// model extending the current true-set must turn on one of its positive
/// variables; those are the branches.
pub fn min_minones(phi: &CnfFormula, k: usize) -> Vec<TrueSet> {
    min_minones_with_stats(phi, k).0
}

pub fn min_minones_with_stats(phi: &CnfFormula, k: usize) -> (Vec<TrueSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let found = minimal_from(phi, &BTreeSet::new(), k, &mut stats);
    (found, stats)
}

/// Minimal `T` disjoint from `fixed`, `|T| <= budget`, with `fixed ∪ T` a model.
fn minimal_from(phi: &CnfFormula, fixed: &BTreeSet<Var>, budget: usize, stats: &mut SearchStats) -> Vec<TrueSet> {
    let mut found = Vec::new();
    let mut ones = fixed.clone();
    search(phi, fixed.len(), budget, &mut ones, &mut found, stats);
    inclusion_minimal(found)
}

fn search(
    phi: &CnfFormula,
    base: usize,
    budget: usize,
    ones: &mut BTreeSet<Var>,
    found: &mut Vec<TrueSet>,
    stats: &mut SearchStats,
) {
    let depth = ones.len() - base;
    stats.visit(depth);
    let falsified = phi
        .clauses()
        .iter()
        .find(|c| !c.lits().iter().any(|l| l.holds(ones.contains(&l.var()))));
    let Some(clause) = falsified else {
        found.push(ones.iter().copied().collect());
        stats.leaf();
        return;
    };
    if depth >= budget {
        stats.leaf();
        return;
    }
    let branch: Vec<Var> = clause.lits().iter().filter(|l| l.is_positive()).map(|l| l.var()).collect();
    if branch.is_empty() {
        stats.leaf();
    }
    for v in branch {
        ones.insert(v);
        search(phi, base, budget, ones, found, stats);
        ones.remove(&v);
    }
}

impl Problem for MinOnes {
    type Atom = Var;

    fn parameter(&self) -> usize {
        self.k
    }

    fn universe(&self) -> Vec<Var> {
        self.phi.variables()
    }

    fn is_consistent(&self, _: &TrueSet) -> bool {
        true
    }

    fn is_solution(&self, t: &TrueSet) -> bool {
        t.len() <= self.k && self.is_model(t)
    }
}

impl MinimalSolutions for MinOnes {
    fn minimal_extensions(&self, applied: &TrueSet, budget: usize) -> Result<Vec<TrueSet>> {
        let found = minimal_from(&self.phi, applied.as_set(), budget, &mut SearchStats::default());
        Ok(sort_dedup(found.into_iter().map(|t| t.difference(applied)).collect()))
    }
}

pub fn minones_neighbourhood(x: &MinOnes, input: NeighbourhoodInput<'_, Var>) -> Result<Vec<TrueSet>> {
    build_neighbourhood(x, input)
}

#[derive(Debug, Clone, Copy)]
pub struct OnesExtension<'a> {
    instance: &'a MinOnes,
}

impl<'a> OnesExtension<'a> {
    pub fn new(instance: &'a MinOnes) -> Self {
        OnesExtension { instance }
    }
}

impl Neighbourhood for OnesExtension<'_> {
    type Atom = Var;

    fn neighbours(&self, input: NeighbourhoodInput<'_, Var>) -> Result<Vec<TrueSet>> {
        minones_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_all;

    fn cnf(n: u32, cs: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_ints(n, cs).unwrap()
    }

    fn ones(vs: &[u32]) -> TrueSet {
        vs.iter().map(|&v| Var(v)).collect()
    }

    #[test]
    fn minimal_examples() {
        let zero_model = cnf(2, &[&[-1, 2], &[-2]]);
        assert_eq!(min_minones(&zero_model, 0), vec![ones(&[])]);
        let phi = cnf(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(min_minones(&phi, 2), vec![ones(&[1]), ones(&[2, 3])]);
        assert_eq!(min_minones(&phi, 1), vec![ones(&[1])]);
        assert!(min_minones(&cnf(1, &[&[1], &[-1]]), 3).is_empty());
    }

    #[test]
    fn negative_literals_block_branches() {
        // x1 forces x2, and x2 is forbidden: no model with x1.
        let phi = cnf(3, &[&[1, 3], &[-1, 2], &[-2]]);
        assert_eq!(min_minones(&phi, 3), vec![ones(&[3])]);
    }

    #[test]
    fn neighbourhood_examples() {
        let x = MinOnes::new(cnf(2, &[&[1, 2]]), 2);
        let full = ones(&[1, 2]);
        assert!(minones_neighbourhood(&x, NeighbourhoodInput::Solution(&full)).unwrap().is_empty());
        let empty = ones(&[]);
        let next = minones_neighbourhood(&x, NeighbourhoodInput::Solution(&empty)).unwrap();
        assert_eq!(next, vec![ones(&[1]), ones(&[2])]);
        assert_eq!(enumerate_all(&OnesExtension::new(&x)).unwrap(), vec![ones(&[1]), ones(&[2]), full]);

        let tautology = MinOnes::new(cnf(1, &[]), 1);
        assert_eq!(minones_neighbourhood(&tautology, NeighbourhoodInput::Seed).unwrap(), vec![ones(&[])]);
    }

    #[test]
    fn depth_bounded_by_k() {
        let phi = cnf(6, &[&[1, 2, 3], &[4, 5, 6], &[1, 4]]);
        for k in 0..4 {
            let (found, stats) = min_minones_with_stats(&phi, k);
            assert!(stats.max_depth <= k);
            assert!(found.iter().all(|t| t.len() <= k && phi.satisfied_by_ones(t.as_set())));
        }
    }
}
