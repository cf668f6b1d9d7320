//! Solutions as finite sets of atomic operations, and the total order on them.
//!
//! Every problem in this crate represents a solution as a set of atoms: graph
//! operations, bit positions, or propositional variables. Sets are ordered
//! first by cardinality and then lexicographically by their canonical byte
//! encoding, which refines the cardinality preorder into a total order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;

/// An atomic operation that solutions are built from.
///
/// Implementations must keep `Ord` in agreement with the byte order of
/// [`Atom::encode`], and all atoms of one type must encode to the same width.
/// Under those two rules, comparing sorted atom sequences element-wise gives
/// the same answer as comparing their concatenated encodings.
pub trait Atom: Clone + Ord + Hash + fmt::Debug + fmt::Display {
    /// Appends the canonical encoding of this atom.
    fn encode(&self, out: &mut Vec<u8>);

    /// Short operation name used by the text and JSON output formats.
    fn op_name(&self) -> &'static str;

    /// Numeric operands, in canonical order.
    fn operands(&self) -> Vec<u32>;
}

/// Sort key of a solution: cardinality first, then canonical bytes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionKey {
    pub cardinality: usize,
    pub bytes: Vec<u8>,
}

/// A finite set of atoms. This is the solution object of every problem.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpSet<A: Atom> {
    items: BTreeSet<A>,
}

impl<A: Atom> OpSet<A> {
    pub fn new() -> Self {
        OpSet {
            items: BTreeSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, atom: &A) -> bool {
        self.items.contains(atom)
    }

    /// Returns `true` if the atom was not present.
    pub fn insert(&mut self, atom: A) -> bool {
        self.items.insert(atom)
    }

    pub fn remove(&mut self, atom: &A) -> bool {
        self.items.remove(atom)
    }

    /// Atoms in canonical order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &A> + ExactSizeIterator + '_ {
        self.items.iter()
    }

    pub fn with(&self, atom: A) -> Self {
        let mut out = self.clone();
        out.insert(atom);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        OpSet {
            items: self.items.union(&other.items).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        OpSet {
            items: self.items.difference(&other.items).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.items.is_subset(&other.items)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.items.is_disjoint(&other.items)
    }

    pub fn as_set(&self) -> &BTreeSet<A> {
        &self.items
    }

    /// Concatenated encodings of the atoms in sorted order.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for atom in &self.items {
            atom.encode(&mut out);
        }
        out
    }

    pub fn key(&self) -> SolutionKey {
        SolutionKey {
            cardinality: self.len(),
            bytes: self.canonical_bytes(),
        }
    }
}

impl<A: Atom> Default for OpSet<A> {
    fn default() -> Self {
        Self::new()
    }
}

impl<A: Atom> FromIterator<A> for OpSet<A> {
    fn from_iter<I: IntoIterator<Item = A>>(iter: I) -> Self {
        OpSet {
            items: iter.into_iter().collect(),
        }
    }
}

impl<A: Atom> IntoIterator for OpSet<A> {
    type Item = A;
    type IntoIter = std::collections::btree_set::IntoIter<A>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter()
    }
}

impl<'a, A: Atom> IntoIterator for &'a OpSet<A> {
    type Item = &'a A;
    type IntoIter = std::collections::btree_set::Iter<'a, A>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

// Same order as `key()`, without materialising the bytes.
impl<A: Atom> Ord for OpSet<A> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.items.iter().cmp(other.items.iter()))
    }
}

impl<A: Atom> PartialOrd for OpSet<A> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<A: Atom> fmt::Debug for OpSet<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.items.iter()).finish()
    }
}

/// `{op(a,b),op(c)}` with atoms in canonical order; `{}` for the empty set.
impl<A: Atom> fmt::Display for OpSet<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, atom) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{atom}")?;
        }
        f.write_str("}")
    }
}

/// Compares two solutions by cardinality, then by canonical bytes.
pub fn compare_solutions<A: Atom>(a: &OpSet<A>, b: &OpSet<A>) -> Ordering {
    a.key().cmp(&b.key())
}

/// Sorts by [`SolutionKey`] and drops duplicates.
pub fn sort_dedup<A: Atom>(mut family: Vec<OpSet<A>>) -> Vec<OpSet<A>> {
    family.sort();
    family.dedup();
    family
}

/// Keeps the inclusion-minimal members of a family, sorted and deduplicated.
pub fn inclusion_minimal<A: Atom>(family: Vec<OpSet<A>>) -> Vec<OpSet<A>> {
    let family = sort_dedup(family);
    // Sorted by cardinality, so any strict subset of `s` appears before it.
    let mut kept: Vec<OpSet<A>> = Vec::new();
    for s in family {
        if !kept.iter().any(|m| m.len() < s.len() && m.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// A bit position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position(pub u32);

impl Atom for Position {
    fn encode(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.0.to_be_bytes());
    }

    fn op_name(&self) -> &'static str {
        "flip"
    }

    fn operands(&self) -> Vec<u32> {
        vec![self.0]
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "flip({})", self.0)
    }
}

/// A propositional variable, 1-based as in DIMACS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Atom for Var {
    fn encode(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.0.to_be_bytes());
    }

    fn op_name(&self) -> &'static str {
        "var"
    }

    fn operands(&self) -> Vec<u32> {
        vec![self.0]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "var({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vars(ids: &[u32]) -> OpSet<Var> {
        ids.iter().map(|&i| Var(i)).collect()
    }

    #[test]
    fn smaller_cardinality_first() {
        assert_eq!(compare_solutions(&vars(&[9]), &vars(&[1, 2])), Ordering::Less);
        assert_eq!(compare_solutions(&vars(&[]), &vars(&[])), Ordering::Equal);
    }

    #[test]
    fn display_empty_and_nonempty() {
        assert_eq!(vars(&[]).to_string(), "{}");
        assert_eq!(vars(&[3, 1]).to_string(), "{var(1),var(3)}");
    }

    #[test]
    fn minimal_filter_keeps_antichain() {
        let fam = vec![vars(&[1, 2]), vars(&[1]), vars(&[2, 3]), vars(&[1]), vars(&[3, 4, 2])];
        assert_eq!(inclusion_minimal(fam), vec![vars(&[1]), vars(&[2, 3])]);
    }

    proptest! {
        #[test]
        fn set_order_matches_key_order(
            a in proptest::collection::btree_set(0u32..300, 0..5),
            b in proptest::collection::btree_set(0u32..300, 0..5),
        ) {
            let a: OpSet<Var> = a.into_iter().map(Var).collect();
            let b: OpSet<Var> = b.into_iter().map(Var).collect();
            prop_assert_eq!(a.cmp(&b), compare_solutions(&a, &b));
            prop_assert_eq!(a == b, a.key() == b.key());
        }
    }
}
