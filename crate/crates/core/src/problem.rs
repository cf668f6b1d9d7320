//! The contracts a problem implements to plug into the enumeration engine.

use crate::error::Result;
use crate::order::{Atom, OpSet};

/// A parameterized problem whose solutions are sets of atoms.
pub trait Problem {
    type Atom: Atom;

    /// The parameter; no solution has more than this many atoms.
    fn parameter(&self) -> usize;

    /// Every atom that may appear in a solution of this instance.
    fn universe(&self) -> Vec<Self::Atom>;

    fn is_consistent(&self, set: &OpSet<Self::Atom>) -> bool;

    /// Full solution predicate, including the size bound and consistency.
    fn is_solution(&self, set: &OpSet<Self::Atom>) -> bool;
}

/// A problem that can list its inclusion-minimal solutions.
///
/// `minimal_extensions(applied, budget)` answers the question for the residual
/// instance obtained by applying `applied` to this one: it returns the
/// inclusion-minimal solutions `R` of that residual instance with
/// `|R| <= budget`. They never contain an atom of `applied`, but `applied ∪ R`
/// may still be inconsistent (a graph edit can undo an earlier one); callers
/// check the union. With `applied = ∅` and `budget = parameter()` these are the
/// minimal solutions of the instance itself.
pub trait MinimalSolutions: Problem {
    fn minimal_extensions(
        &self,
        applied: &OpSet<Self::Atom>,
        budget: usize,
    ) -> Result<Vec<OpSet<Self::Atom>>>;

    fn minimal_solutions(&self) -> Result<Vec<OpSet<Self::Atom>>> {
        self.minimal_extensions(&OpSet::new(), self.parameter())
    }
}

/// Argument of a neighbourhood function: the seed or a known solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighbourhoodInput<'a, A: Atom> {
    Seed,
    Solution(&'a OpSet<A>),
}

/// A neighbourhood function over the solutions of one fixed instance.
///
/// Requirements, checked by the test suite for every implementation:
/// the seed maps to the empty set exactly when there are no solutions;
/// every neighbour of `S` is a solution strictly larger than `S`;
/// every solution is reachable from the seed.
pub trait Neighbourhood {
    type Atom: Atom;

    fn neighbours(&self, input: NeighbourhoodInput<'_, Self::Atom>)
        -> Result<Vec<OpSet<Self::Atom>>>;
}
