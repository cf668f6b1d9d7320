//! Duplicate-free priority queue of solutions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::order::{Atom, OpSet, SolutionKey};

/// Balanced-tree priority queue keyed by [`SolutionKey`].
///
/// The key carries the canonical bytes, so the map doubles as the membership
/// index: inserting a solution that is already queued does nothing.
#[derive(Debug, Clone)]
pub struct SolutionQueue<A: Atom> {
    entries: BTreeMap<SolutionKey, OpSet<A>>,
}

impl<A: Atom> SolutionQueue<A> {
    pub fn new() -> Self {
        SolutionQueue {
            entries: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, solution: &OpSet<A>) -> bool {
        self.entries.contains_key(&solution.key())
    }

    /// Returns `false` if the solution was already queued.
    pub fn insert(&mut self, solution: OpSet<A>) -> bool {
        let key = solution.key();
        if self.entries.contains_key(&key) {
            return false;
        }
        self.entries.insert(key, solution);
        true
    }

    pub fn pop_min(&mut self) -> Option<OpSet<A>> {
        self.entries.pop_first().map(|(_, s)| s)
    }

    pub fn extract_min(&mut self) -> Result<OpSet<A>> {
        self.pop_min().ok_or(Error::QueueEmpty)
    }
}

impl<A: Atom> Default for SolutionQueue<A> {
    fn default() -> Self {
        Self::new()
    }
}
