//! The ordered enumeration driver and the generic neighbourhood construction.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::Result;
use crate::order::{sort_dedup, OpSet};
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput};
use crate::queue::SolutionQueue;

/// Counters from one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub emitted: usize,
    pub neighbourhood_calls: usize,
    pub max_queue_len: usize,
    /// `true` if the sink stopped the run early.
    pub truncated: bool,
}

/// Emits every solution reachable from the seed, in increasing key order.
///
/// The queue starts with the seed neighbourhood. Each round extracts the
/// least queued solution, hands it to `sink`, then queues its neighbours. The
/// work between two emissions is therefore one neighbourhood evaluation, its
/// insertions, and one extraction. Neighbours are strictly larger than the
/// solution they came from, so nothing already emitted can be queued again.
///
/// Returning `ControlFlow::Break` from the sink ends the run. An error from
/// the neighbourhood function ends the run before anything else is emitted.
pub fn enumerate_ordered<N, F>(nbf: &N, mut sink: F) -> Result<RunSummary>
where
    N: Neighbourhood,
    F: FnMut(&OpSet<N::Atom>) -> ControlFlow<()>,
{
    let mut summary = RunSummary::default();
    let mut queue = SolutionQueue::new();
    summary.neighbourhood_calls += 1;
    for s in nbf.neighbours(NeighbourhoodInput::Seed)? {
        queue.insert(s);
    }
    summary.max_queue_len = queue.len();

    while let Some(current) = queue.pop_min() {
        summary.emitted += 1;
        if sink(&current).is_break() {
            summary.truncated = true;
            break;
        }
        summary.neighbourhood_calls += 1;
        for s in nbf.neighbours(NeighbourhoodInput::Solution(&current))? {
            queue.insert(s);
        }
        summary.max_queue_len = summary.max_queue_len.max(queue.len());
    }
    Ok(summary)
}

/// Collects the whole ordered stream.
pub fn enumerate_all<N: Neighbourhood>(nbf: &N) -> Result<Vec<OpSet<N::Atom>>> {
    let mut out = Vec::new();
    enumerate_ordered(nbf, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Minimal solutions, sorted by key.
pub fn enumerate_minimal<P: MinimalSolutions>(problem: &P) -> Result<Vec<OpSet<P::Atom>>> {
    Ok(sort_dedup(problem.minimal_solutions()?))
}

/// Neighbourhood built from a minimal-solution enumerator.
///
/// The seed maps to the minimal solutions. A solution `S` maps to every
/// `S ∪ {t} ∪ R` where `t ∉ S` keeps `S ∪ {t}` consistent and `R` is a minimal
/// solution of the residual instance `(S ∪ {t})(x)` with budget
/// `κ(x) − |S| − 1`. Only consistent unions that solve `x` are kept.
///
/// Every non-minimal solution `T` is reached this way: take a largest
/// solution `S ⊊ T` and any `t ∈ T ∖ S`; then `T ∖ S ∖ {t}` is minimal for
/// the residual instance, or some solution would sit strictly between `S`
/// and `T`.
pub fn build_neighbourhood<P: MinimalSolutions>(
    problem: &P,
    input: NeighbourhoodInput<'_, P::Atom>,
) -> Result<Vec<OpSet<P::Atom>>> {
    let current = match input {
        NeighbourhoodInput::Seed => return enumerate_minimal(problem),
        NeighbourhoodInput::Solution(s) => s,
    };
    let k = problem.parameter();
    if current.len() >= k {
        return Ok(Vec::new());
    }
    let budget = k - current.len() - 1;

    let mut found = BTreeSet::new();
    for t in problem.universe() {
        if current.contains(&t) {
            continue;
        }
        let base = current.with(t);
        if !problem.is_consistent(&base) {
            continue;
        }
        for rest in sort_dedup(problem.minimal_extensions(&base, budget)?) {
            let candidate = base.union(&rest);
            if candidate.len() <= k
                && problem.is_consistent(&candidate)
                && problem.is_solution(&candidate)
            {
                found.insert(candidate);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// [`build_neighbourhood`] packaged as a [`Neighbourhood`].
#[derive(Debug, Clone, Copy)]
pub struct GenericNeighbourhood<'p, P> {
    problem: &'p P,
}

impl<'p, P: MinimalSolutions> GenericNeighbourhood<'p, P> {
    pub fn new(problem: &'p P) -> Self {
        GenericNeighbourhood { problem }
    }
}

impl<P: MinimalSolutions> Neighbourhood for GenericNeighbourhood<'_, P> {
    type Atom = P::Atom;

    fn neighbours(&self, input: NeighbourhoodInput<'_, P::Atom>) -> Result<Vec<OpSet<P::Atom>>> {
        build_neighbourhood(self.problem, input)
    }
}

/// Emits solutions in order until the sink asks to stop; a convenience over
/// [`enumerate_ordered`] with [`GenericNeighbourhood`].
pub fn enumerate_generic<P, F>(problem: &P, sink: F) -> Result<RunSummary>
where
    P: MinimalSolutions,
    F: FnMut(&OpSet<P::Atom>) -> ControlFlow<()>,
{
    enumerate_ordered(&GenericNeighbourhood::new(problem), sink)
}
