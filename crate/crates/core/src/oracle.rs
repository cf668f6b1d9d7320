//! Exhaustive ground truth: every candidate set up to the parameter, tested
//! against the problem's solution predicate.
//!
//! Nothing here touches the search trees or neighbourhoods; it only needs
//! [`Problem`].

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::order::{OpSet, Atom};
use crate::problem::Problem;

pub const MAX_UNIVERSE: usize = 40;
pub const MAX_PARAMETER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<A: Atom> {
    /// Every solution, in enumeration order.
    pub all: Vec<OpSet<A>>,
    /// The inclusion-minimal members of `all`, in the same order.
    pub minimal: Vec<OpSet<A>>,
}

/// Fails with [`Error::InstanceTooLarge`] beyond 40 atoms or parameter 5.
pub fn brute_force<P: Problem>(problem: &P) -> Result<OracleResult<P::Atom>> {
    let universe = problem.universe();
    let k = problem.parameter();
    if universe.len() > MAX_UNIVERSE || k > MAX_PARAMETER {
        return Err(Error::InstanceTooLarge { universe: universe.len(), parameter: k });
    }
    let mut all = Vec::new();
    for size in 0..=k.min(universe.len()) {
        for combo in universe.iter().cloned().combinations(size) {
            let set: OpSet<P::Atom> = combo.into_iter().collect();
            if problem.is_consistent(&set) && problem.is_solution(&set) {
                all.push(set);
            }
        }
    }
    all.sort();
    all.dedup();
    let members: HashSet<&OpSet<P::Atom>> = all.iter().collect();
    let minimal = all
        .iter()
        .filter(|s| !proper_subsets(s).any(|sub| members.contains(&sub)))
        .cloned()
        .collect();
    Ok(OracleResult { all, minimal })
}

fn proper_subsets<A: Atom>(s: &OpSet<A>) -> impl Iterator<Item = OpSet<A>> + '_ {
    let atoms: Vec<&A> = s.iter().collect();
    let n = atoms.len();
    (0u64..(1 << n) - 1).map(move |mask| {
        atoms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| (*a).clone()).collect()
    })
}
