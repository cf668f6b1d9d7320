//! Weak and strong backdoors into clause-defined base classes.
//!
//! A base class `C` is clause-defined when a formula belongs to it exactly
//! when each of its clauses does on its own. For such classes a variable set
//! `S` is a strong backdoor (every assignment `θ` over `S` puts `θ(φ)` in `C`)
//! exactly when deleting `S` from `φ` lands in `C`, which is what the strong
//! search works with. A weak backdoor only needs one assignment `θ` with
//! `θ(φ) ∈ C` and satisfiable.

use std::fmt;

use crate::cnf::{all_assignments, apply_assignment, delete_vars, Assignment, Clause, CnfFormula};
use crate::enumerate::build_neighbourhood;
use crate::error::{Error, Result};
use crate::order::{inclusion_minimal, sort_dedup, OpSet, Var};
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

pub type BackdoorSet = OpSet<Var>;

/// A clause-defined class of CNF formulas with polynomial satisfiability.
pub trait BaseClass: fmt::Debug {
    fn name(&self) -> &'static str;

    fn contains_clause(&self, clause: &Clause) -> bool;

    /// Decides satisfiability of a formula already known to lie in the class.
    fn is_satisfiable(&self, phi: &CnfFormula) -> bool;

    /// Whether dropping literals from a member clause keeps it a member.
    fn closed_under_literal_removal(&self) -> bool;
}

pub fn is_in_class<C: BaseClass + ?Sized>(phi: &CnfFormula, class: &C) -> bool {
    phi.clauses().iter().all(|c| class.contains_clause(c))
}

/// At most one positive literal per clause.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Horn;

impl BaseClass for Horn {
    fn name(&self) -> &'static str {
        "horn"
    }

    fn contains_clause(&self, clause: &Clause) -> bool {
        clause.positive_count() <= 1
    }

    /// Computes the least model by unit propagation from all-false.
    fn is_satisfiable(&self, phi: &CnfFormula) -> bool {
        let mut truth = vec![false; phi.num_vars() as usize + 1];
        loop {
            let mut changed = false;
            for c in phi.clauses() {
                if c.lits().iter().any(|l| l.holds(truth[l.var().0 as usize])) {
                    continue;
                }
                match c.lits().iter().find(|l| l.is_positive()) {
                    None => return false,
                    Some(l) => {
                        truth[l.var().0 as usize] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn closed_under_literal_removal(&self) -> bool {
        true
    }
}

/// At most two literals per clause.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwoCnf;

impl BaseClass for TwoCnf {
    fn name(&self) -> &'static str {
        "2cnf"
    }

    fn contains_clause(&self, clause: &Clause) -> bool {
        clause.len() <= 2
    }

    /// Implication graph; unsatisfiable iff some `x` and `¬x` share a
    /// strongly connected component.
    fn is_satisfiable(&self, phi: &CnfFormula) -> bool {
        let n = phi.num_vars() as usize;
        let node = |l: crate::cnf::Lit| 2 * (l.var().0 as usize - 1) + usize::from(!l.is_positive());
        let mut succ = vec![Vec::new(); 2 * n];
        for c in phi.clauses() {
            match *c.lits() {
                [] => return false,
                [a] => succ[node(a.negated())].push(node(a)),
                [a, b] => {
                    succ[node(a.negated())].push(node(b));
                    succ[node(b.negated())].push(node(a));
                }
                _ => panic!("clause of width {} is not 2CNF", c.len()),
            }
        }
        let comp = strongly_connected(&succ);
        (0..n).all(|v| comp[2 * v] != comp[2 * v + 1])
    }

    fn closed_under_literal_removal(&self) -> bool {
        true
    }
}

/// Kosaraju's algorithm, iteratively. Returns a component id per node.
fn strongly_connected(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut pred = vec![Vec::new(); n];
    for (u, vs) in succ.iter().enumerate() {
        for &v in vs {
            pred[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0)];
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if let Some(&v) = succ[u].get(*i) {
                *i += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                finish.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &root in finish.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = next;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &v in &pred[u] {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    comp
}

fn vars_vec(s: &BackdoorSet) -> Vec<Var> {
    s.iter().copied().collect()
}

/// Some assignment over `s` leaves a satisfiable member of the class.
pub fn is_weak_backdoor<C: BaseClass + ?Sized>(phi: &CnfFormula, s: &BackdoorSet, class: &C) -> bool {
    all_assignments(&vars_vec(s)).any(|theta| {
        let rest = apply_assignment(phi, &theta);
        is_in_class(&rest, class) && class.is_satisfiable(&rest)
    })
}

/// Every assignment over `s` leaves a member of the class, checked through
/// `φ − s`.
pub fn is_strong_backdoor<C: BaseClass + ?Sized>(phi: &CnfFormula, s: &BackdoorSet, class: &C) -> bool {
    is_in_class(&delete_vars(phi, s.as_set()), class)
}

/// The same predicate checked literally, over all `2^|s|` assignments.
pub fn is_strong_backdoor_by_assignments<C: BaseClass + ?Sized>(
    phi: &CnfFormula,
    s: &BackdoorSet,
    class: &C,
) -> bool {
    all_assignments(&vars_vec(s)).all(|theta| is_in_class(&apply_assignment(phi, &theta), class))
}

fn require_closure<C: BaseClass + ?Sized>(class: &C) -> Result<()> {
    if class.closed_under_literal_removal() {
        Ok(())
    } else {
        Err(Error::UnsupportedClass(class.name().into()))
    }
}

/// Inclusion-minimal weak backdoors of size at most `k`.
///
/// The search extends a partial assignment `θ`. While `θ(φ)` has a clause
/// outside the class, that clause is unchanged by every extension that
/// leaves its variables alone, so any weak backdoor extending the current
/// branch assigns one of them: the branches are the (variable, value) pairs
/// of that clause. Once `θ(φ)` is in the class the branch either records the
/// domain of `θ` (satisfiable) or dies (unsatisfiable, as is every further
/// restriction).
pub fn min_weak_backdoors<C: BaseClass + ?Sized>(phi: &CnfFormula, k: usize, class: &C) -> Result<Vec<BackdoorSet>> {
    min_weak_backdoors_with_stats(phi, k, class).map(|(found, _)| found)
}

pub fn min_weak_backdoors_with_stats<C: BaseClass + ?Sized>(
    phi: &CnfFormula,
    k: usize,
    class: &C,
) -> Result<(Vec<BackdoorSet>, SearchStats)> {
    require_closure(class)?;
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    weak_search(phi, k, class, &mut Assignment::new(), &mut found, &mut stats);
    Ok((inclusion_minimal(found), stats))
}

fn weak_search<C: BaseClass + ?Sized>(
    phi: &CnfFormula,
    k: usize,
    class: &C,
    theta: &mut Assignment,
    found: &mut Vec<BackdoorSet>,
    stats: &mut SearchStats,
) {
    stats.visit(theta.len());
    let rest = apply_assignment(phi, theta);
    let Some(outside) = rest.clauses().iter().find(|c| !class.contains_clause(c)) else {
        if class.is_satisfiable(&rest) {
            found.push(theta.keys().copied().collect());
        }
        stats.leaf();
        return;
    };
    if theta.len() >= k {
        stats.leaf();
        return;
    }
    for v in outside.vars() {
        for value in [false, true] {
            theta.insert(v, value);
            weak_search(phi, k, class, theta, found, stats);
            theta.remove(&v);
        }
    }
}

/// Inclusion-minimal strong backdoors of size at most `k`.
///
/// Branches on the variables of the first clause of `φ − S` outside the
/// class; with clauses of width at most three the tree has at most `3^k`
/// leaves.
pub fn min_strong_backdoors<C: BaseClass + ?Sized>(phi: &CnfFormula, k: usize, class: &C) -> Vec<BackdoorSet> {
    min_strong_backdoors_with_stats(phi, k, class).0
}

pub fn min_strong_backdoors_with_stats<C: BaseClass + ?Sized>(
    phi: &CnfFormula,
    k: usize,
    class: &C,
) -> (Vec<BackdoorSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    strong_search(phi, k, class, &mut BackdoorSet::new(), &mut found, &mut stats);
    (inclusion_minimal(found), stats)
}

fn strong_search<C: BaseClass + ?Sized>(
    phi: &CnfFormula,
    k: usize,
    class: &C,
    s: &mut BackdoorSet,
    found: &mut Vec<BackdoorSet>,
    stats: &mut SearchStats,
) {
    stats.visit(s.len());
    let outside = phi
        .clauses()
        .iter()
        .map(|c| Clause::new(c.lits().iter().copied().filter(|l| !s.contains(&l.var())).collect()).unwrap())
        .find(|c| !class.contains_clause(c));
    let Some(outside) = outside else {
        found.push(s.clone());
        stats.leaf();
        return;
    };
    if s.len() >= k {
        stats.leaf();
        return;
    }
    for v in outside.vars() {
        s.insert(v);
        strong_search(phi, k, class, s, found, stats);
        s.remove(&v);
    }
}

/// Weak backdoor enumeration instance `(φ, k, C)`.
#[derive(Debug, Clone)]
pub struct WeakBackdoors<C> {
    phi: CnfFormula,
    k: usize,
    class: C,
}

impl<C: BaseClass> WeakBackdoors<C> {
    pub fn new(phi: CnfFormula, k: usize, class: C) -> Result<Self> {
        require_closure(&class)?;
        Ok(WeakBackdoors { phi, k, class })
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.phi
    }

    pub fn class(&self) -> &C {
        &self.class
    }
}

impl<C: BaseClass> Problem for WeakBackdoors<C> {
    type Atom = Var;

    fn parameter(&self) -> usize {
        self.k
    }

    fn universe(&self) -> Vec<Var> {
        self.phi.variables()
    }

    fn is_consistent(&self, _: &BackdoorSet) -> bool {
        true
    }

    fn is_solution(&self, s: &BackdoorSet) -> bool {
        s.len() <= self.k && is_weak_backdoor(&self.phi, s, &self.class)
    }
}

impl<C: BaseClass> MinimalSolutions for WeakBackdoors<C> {
    /// Union over every `θ` on `applied` of the minimal weak backdoors of
    /// `θ(φ)`. The families are not merged into one antichain: a set that is
    /// minimal for one `θ` may extend `applied` into a solution that no other
    /// `θ` reaches.
    fn minimal_extensions(&self, applied: &BackdoorSet, budget: usize) -> Result<Vec<BackdoorSet>> {
        let mut out = Vec::new();
        for theta in all_assignments(&vars_vec(applied)) {
            out.extend(min_weak_backdoors(&apply_assignment(&self.phi, &theta), budget, &self.class)?);
        }
        Ok(sort_dedup(out))
    }
}

/// Strong backdoor enumeration instance `(φ, k, C)`.
#[derive(Debug, Clone)]
pub struct StrongBackdoors<C> {
    phi: CnfFormula,
    k: usize,
    class: C,
}

impl<C: BaseClass> StrongBackdoors<C> {
    pub fn new(phi: CnfFormula, k: usize, class: C) -> Self {
        StrongBackdoors { phi, k, class }
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.phi
    }

    pub fn class(&self) -> &C {
        &self.class
    }
}

impl<C: BaseClass> Problem for StrongBackdoors<C> {
    type Atom = Var;

    fn parameter(&self) -> usize {
        self.k
    }

    fn universe(&self) -> Vec<Var> {
        self.phi.variables()
    }

    fn is_consistent(&self, _: &BackdoorSet) -> bool {
        true
    }

    fn is_solution(&self, s: &BackdoorSet) -> bool {
        s.len() <= self.k && is_strong_backdoor(&self.phi, s, &self.class)
    }
}

impl<C: BaseClass> MinimalSolutions for StrongBackdoors<C> {
    fn minimal_extensions(&self, applied: &BackdoorSet, budget: usize) -> Result<Vec<BackdoorSet>> {
        let rest = delete_vars(&self.phi, applied.as_set());
        Ok(sort_dedup(min_strong_backdoors(&rest, budget, &self.class)))
    }
}

pub fn weak_neighbourhood<C: BaseClass>(
    x: &WeakBackdoors<C>,
    input: NeighbourhoodInput<'_, Var>,
) -> Result<Vec<BackdoorSet>> {
    build_neighbourhood(x, input)
}

pub fn strong_neighbourhood<C: BaseClass>(
    x: &StrongBackdoors<C>,
    input: NeighbourhoodInput<'_, Var>,
) -> Result<Vec<BackdoorSet>> {
    build_neighbourhood(x, input)
}

#[derive(Debug, Clone, Copy)]
pub struct WeakExtension<'a, C> {
    instance: &'a WeakBackdoors<C>,
}

impl<'a, C: BaseClass> WeakExtension<'a, C> {
    pub fn new(instance: &'a WeakBackdoors<C>) -> Self {
        WeakExtension { instance }
    }
}

impl<C: BaseClass> Neighbourhood for WeakExtension<'_, C> {
    type Atom = Var;

    fn neighbours(&self, input: NeighbourhoodInput<'_, Var>) -> Result<Vec<BackdoorSet>> {
        weak_neighbourhood(self.instance, input)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct StrongExtension<'a, C> {
    instance: &'a StrongBackdoors<C>,
}

impl<'a, C: BaseClass> StrongExtension<'a, C> {
    pub fn new(instance: &'a StrongBackdoors<C>) -> Self {
        StrongExtension { instance }
    }
}

impl<C: BaseClass> Neighbourhood for StrongExtension<'_, C> {
    type Atom = Var;

    fn neighbours(&self, input: NeighbourhoodInput<'_, Var>) -> Result<Vec<BackdoorSet>> {
        strong_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_all;
    use proptest::prelude::*;

    fn cnf(n: u32, cs: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_ints(n, cs).unwrap()
    }

    fn vars(vs: &[u32]) -> BackdoorSet {
        vs.iter().map(|&v| Var(v)).collect()
    }

    fn brute_sat(phi: &CnfFormula) -> bool {
        let all = phi.variables();
        (0u32..1 << all.len()).any(|mask| {
            let ones = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            phi.satisfied_by_ones(&ones)
        })
    }

    #[test]
    fn class_membership() {
        assert!(is_in_class(&cnf(2, &[&[-1, 2], &[-2]]), &Horn));
        assert!(!is_in_class(&cnf(2, &[&[1, 2]]), &Horn));
        assert!(!is_in_class(&cnf(3, &[&[1, 2, 3]]), &TwoCnf));
        assert!(is_in_class(&cnf(3, &[&[1, 2], &[3]]), &TwoCnf));
    }

    #[test]
    fn weak_examples() {
        let horn_sat = cnf(2, &[&[-1, 2], &[1]]);
        for k in 0..3 {
            assert_eq!(min_weak_backdoors(&horn_sat, k, &Horn).unwrap(), vec![vars(&[])]);
        }
        let xy = cnf(2, &[&[1, 2]]);
        assert_eq!(min_weak_backdoors(&xy, 1, &Horn).unwrap(), vec![vars(&[1]), vars(&[2])]);
        let contradiction = cnf(1, &[&[1], &[-1]]);
        assert!(min_weak_backdoors(&contradiction, 1, &Horn).unwrap().is_empty());
    }

    #[test]
    fn strong_examples() {
        let xy = cnf(2, &[&[1, 2]]);
        assert_eq!(min_strong_backdoors(&xy, 1, &Horn), vec![vars(&[1]), vars(&[2])]);
        assert_eq!(min_strong_backdoors(&cnf(3, &[&[1, 2, 3]]), 1, &TwoCnf), vec![vars(&[1]), vars(&[2]), vars(&[3])]);
        assert!(min_strong_backdoors(&cnf(3, &[&[1, 2, 3]]), 1, &Horn).is_empty());
    }

    #[derive(Debug)]
    struct ExactlyTwo;

    impl BaseClass for ExactlyTwo {
        fn name(&self) -> &'static str {
            "exactly-two"
        }
        fn contains_clause(&self, c: &Clause) -> bool {
            c.len() == 2
        }
        fn is_satisfiable(&self, phi: &CnfFormula) -> bool {
            TwoCnf.is_satisfiable(phi)
        }
        fn closed_under_literal_removal(&self) -> bool {
            false
        }
    }

    #[test]
    fn unsupported_class_rejected() {
        let phi = cnf(2, &[&[1, 2]]);
        assert_eq!(min_weak_backdoors(&phi, 1, &ExactlyTwo), Err(Error::UnsupportedClass("exactly-two".into())));
        assert!(WeakBackdoors::new(phi, 1, ExactlyTwo).is_err());
    }

    #[test]
    fn neighbourhood_examples() {
        let phi = cnf(2, &[&[1, 2], &[-1, -2]]);
        let weak = WeakBackdoors::new(phi, 2, Horn).unwrap();
        let empty = vars(&[]);
        let full = vars(&[1, 2]);
        assert!(weak_neighbourhood(&weak, NeighbourhoodInput::Solution(&full)).unwrap().is_empty());
        // ∅ is not a weak backdoor here, but its neighbourhood is still defined.
        let from_empty = weak_neighbourhood(&weak, NeighbourhoodInput::Solution(&empty)).unwrap();
        assert!(from_empty.contains(&vars(&[1])) && from_empty.contains(&vars(&[2])));

        let strong = StrongBackdoors::new(cnf(2, &[&[1, 2]]), 2, Horn);
        let seeds = strong_neighbourhood(&strong, NeighbourhoodInput::Seed).unwrap();
        assert_eq!(seeds, vec![vars(&[1]), vars(&[2])]);
        let one = vars(&[1]);
        assert_eq!(strong_neighbourhood(&strong, NeighbourhoodInput::Solution(&one)).unwrap(), vec![full.clone()]);
        assert!(strong_neighbourhood(&strong, NeighbourhoodInput::Solution(&full)).unwrap().is_empty());
        assert_eq!(enumerate_all(&StrongExtension::new(&strong)).unwrap(), vec![vars(&[1]), vars(&[2]), full]);
    }

    fn small_cnf() -> impl Strategy<Value = CnfFormula> {
        let lit = (1u32..=5, any::<bool>()).prop_map(|(v, p)| if p { v as i32 } else { -(v as i32) });
        let clause = prop::collection::vec(lit, 0..=3).prop_map(|mut ls| {
            ls.sort_by_key(|l: &i32| l.unsigned_abs());
            ls.dedup_by_key(|l| l.unsigned_abs());
            ls
        });
        prop::collection::vec(clause, 0..=6).prop_map(|cs| {
            let refs: Vec<&[i32]> = cs.iter().map(Vec::as_slice).collect();
            CnfFormula::from_ints(5, &refs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn strong_matches_assignment_definition(phi in small_cnf(), mask in 0u32..32) {
            let s: BackdoorSet = (1..=5).filter(|v| mask >> (v - 1) & 1 == 1).map(Var).collect();
            prop_assume!(s.len() <= 4);
            prop_assert_eq!(is_strong_backdoor(&phi, &s, &Horn), is_strong_backdoor_by_assignments(&phi, &s, &Horn));
            prop_assert_eq!(is_strong_backdoor(&phi, &s, &TwoCnf), is_strong_backdoor_by_assignments(&phi, &s, &TwoCnf));
        }

        #[test]
        fn class_sat_matches_brute_force(phi in small_cnf()) {
            if is_in_class(&phi, &Horn) {
                prop_assert_eq!(Horn.is_satisfiable(&phi), brute_sat(&phi));
            }
            if is_in_class(&phi, &TwoCnf) {
                prop_assert_eq!(TwoCnf.is_satisfiable(&phi), brute_sat(&phi));
            }
        }

        #[test]
        fn minimal_weak_hit_every_outside_clause(phi in small_cnf(), k in 0usize..=3) {
            for s in min_weak_backdoors(&phi, k, &Horn).unwrap() {
                for c in phi.clauses().iter().filter(|c| !Horn.contains_clause(c)) {
                    prop_assert!(c.vars().any(|v| s.contains(&v)));
                }
            }
        }

        #[test]
        fn strong_tree_leaves_bounded(phi in small_cnf(), k in 0usize..=3) {
            let (_, stats) = min_strong_backdoors_with_stats(&phi, k, &Horn);
            prop_assert!(stats.leaves <= 3u64.pow(k as u32));
            prop_assert!(stats.internal() <= 3u64.pow(k as u32));
        }
    }
}
