//! Propositional CNF formulas and partial assignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::order::Var;

/// A signed variable: `Lit(3)` is `x3`, `Lit(-3)` is `¬x3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(i32);

impl Lit {
    pub fn pos(v: u32) -> Lit {
        Lit(v as i32)
    }

    pub fn neg(v: u32) -> Lit {
        Lit(-(v as i32))
    }

    /// # Panics
    ///
    /// On zero, which DIMACS reserves as the clause terminator.
    pub fn from_dimacs(x: i32) -> Lit {
        assert_ne!(x, 0);
        Lit(x)
    }

    pub fn var(self) -> Var {
        Var(self.0.unsigned_abs())
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Lit {
        Lit(-self.0)
    }

    pub fn dimacs(self) -> i32 {
        self.0
    }

    /// Truth value under `value` for the variable.
    pub fn holds(self, value: bool) -> bool {
        value == self.is_positive()
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.0)
        } else {
            write!(f, "¬x{}", -self.0)
        }
    }
}

/// Literals sorted by variable; no variable occurs twice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause(Vec<Lit>);

impl Clause {
    pub fn new(mut lits: Vec<Lit>) -> Result<Clause> {
        lits.sort_by_key(|l| (l.var(), l.is_positive()));
        if let Some(w) = lits.windows(2).find(|w| w[0].var() == w[1].var()) {
            return Err(Error::InvariantViolation(format!("variable {} occurs twice in a clause", w[0].var().0)));
        }
        Ok(Clause(lits))
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_positive()).count()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|l| l.var())
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("□");
        }
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// A CNF formula over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

/// Partial assignment; its domain is the key set.
pub type Assignment = BTreeMap<Var, bool>;

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<CnfFormula> {
        for c in &clauses {
            if let Some(l) = c.lits().iter().find(|l| l.var().0 == 0 || l.var().0 > num_vars) {
                return Err(Error::InvariantViolation(format!("literal {} outside 1..={num_vars}", l.dimacs())));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Builds a formula from DIMACS-style integer clauses.
    ///
    /// ```
    /// use enumfpt::cnf::CnfFormula;
    /// let phi = CnfFormula::from_ints(2, &[&[1, 2], &[-1, -2]]).unwrap();
    /// assert_eq!(phi.to_string(), "(x1 ∨ x2) ∧ (¬x1 ∨ ¬x2)");
    /// ```
    pub fn from_ints(num_vars: u32, clauses: &[&[i32]]) -> Result<CnfFormula> {
        let clauses = clauses
            .iter()
            .map(|c| {
                if c.contains(&0) {
                    return Err(Error::InvariantViolation("literal 0".into()));
                }
                Clause::new(c.iter().map(|&x| Lit::from_dimacs(x)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        CnfFormula::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Declared variables `1..=num_vars`.
    pub fn variables(&self) -> Vec<Var> {
        (1..=self.num_vars).map(Var).collect()
    }

    /// Variables that occur in some clause.
    pub fn occurring_vars(&self) -> BTreeSet<Var> {
        self.clauses.iter().flat_map(|c| c.vars()).collect()
    }

    pub fn max_clause_width(&self) -> usize {
        self.clauses.iter().map(Clause::len).max().unwrap_or(0)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    /// Evaluates under the total assignment "true exactly on `ones`".
    pub fn satisfied_by_ones(&self, ones: &BTreeSet<Var>) -> bool {
        self.clauses
            .iter()
            .all(|c| c.lits().iter().any(|l| l.holds(ones.contains(&l.var()))))
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("⊤");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∧ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `θ(φ)`: drops clauses satisfied by `theta` and falsified literals from the
/// rest. A clause whose literals are all falsified stays as the empty clause.
pub fn apply_assignment(phi: &CnfFormula, theta: &Assignment) -> CnfFormula {
    let clauses = phi
        .clauses
        .iter()
        .filter(|c| !c.lits().iter().any(|l| theta.get(&l.var()).is_some_and(|&v| l.holds(v))))
        .map(|c| Clause(c.lits().iter().copied().filter(|l| !theta.contains_key(&l.var())).collect()))
        .collect();
    CnfFormula { num_vars: phi.num_vars, clauses }
}

/// `φ − V`: removes every literal over a variable of `vars`. Clauses are kept
/// even when they become empty.
pub fn delete_vars(phi: &CnfFormula, vars: &BTreeSet<Var>) -> CnfFormula {
    let clauses = phi
        .clauses
        .iter()
        .map(|c| Clause(c.lits().iter().copied().filter(|l| !vars.contains(&l.var())).collect()))
        .collect();
    CnfFormula { num_vars: phi.num_vars, clauses }
}

/// All `2^|vars|` total assignments over `vars`, in binary counting order
/// (all-false first).
pub fn all_assignments(vars: &[Var]) -> impl Iterator<Item = Assignment> + '_ {
    assert!(vars.len() < 32, "too many variables to enumerate assignments");
    (0u32..1 << vars.len()).map(move |mask| {
        vars.iter().enumerate().map(|(i, &v)| (v, mask >> i & 1 == 1)).collect()
    })
}

/// Parses DIMACS CNF: `p cnf <vars> <clauses>`, then zero-terminated clauses
/// that may span lines; `c` lines are comments. A trailing `%` line (as in
/// SATLIB files) ends the input.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<Lit> = Vec::new();
    let mut pending_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if line.starts_with('p') {
            let f: Vec<&str> = line.split_whitespace().collect();
            let ["p", "cnf", v, c] = f.as_slice() else {
                return Err(err(format!("bad problem line {line:?}")));
            };
            if header.is_some() {
                return Err(err("duplicate problem line".into()));
            }
            let v = v.parse().map_err(|_| err(format!("bad variable count {v:?}")))?;
            let c = c.parse().map_err(|_| err(format!("bad clause count {c:?}")))?;
            header = Some((v, c));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(err("clause before problem line".into()));
        };
        for tok in line.split_whitespace() {
            let x: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
            if x == 0 {
                let clause = Clause::new(std::mem::take(&mut pending))
                    .map_err(|e| Error::InvariantViolation(format!("line {pending_line}: {e}")))?;
                clauses.push(clause);
                continue;
            }
            if x.unsigned_abs() > num_vars {
                return Err(Error::InvariantViolation(format!("line {line_no}: literal {x} outside 1..={num_vars}")));
            }
            if pending.is_empty() {
                pending_line = line_no;
            }
            pending.push(Lit(x));
        }
    }
    let (num_vars, declared) = header.ok_or(Error::Parse { line: 0, message: "missing `p cnf` line".into() })?;
    if !pending.is_empty() {
        return Err(Error::Parse { line: pending_line, message: "clause not terminated by 0".into() });
    }
    if clauses.len() != declared {
        return Err(Error::Parse { line: 0, message: format!("header declares {declared} clauses, found {}", clauses.len()) });
    }
    CnfFormula::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: u32, cs: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_ints(n, cs).unwrap()
    }

    fn theta(pairs: &[(u32, bool)]) -> Assignment {
        pairs.iter().map(|&(v, b)| (Var(v), b)).collect()
    }

    #[test]
    fn assignment_examples() {
        let phi = cnf(2, &[&[1, 2]]);
        assert_eq!(apply_assignment(&phi, &Assignment::new()), phi);
        assert!(apply_assignment(&phi, &theta(&[(1, true)])).clauses().is_empty());
        assert_eq!(apply_assignment(&phi, &theta(&[(1, false)])), cnf(2, &[&[2]]));
        let unit = cnf(1, &[&[1]]);
        assert!(apply_assignment(&unit, &theta(&[(1, false)])).has_empty_clause());
    }

    #[test]
    fn deletion_examples() {
        let phi = cnf(3, &[&[1, 2, 3]]);
        assert_eq!(delete_vars(&phi, &BTreeSet::new()), phi);
        assert_eq!(delete_vars(&phi, &[Var(3)].into()), cnf(3, &[&[1, 2]]));
        let two = cnf(2, &[&[1, 2]]);
        let gone = delete_vars(&two, &[Var(1), Var(2)].into());
        assert_eq!(gone.clauses().len(), 1);
        assert!(gone.has_empty_clause());
    }

    #[test]
    fn assignments_enumerated() {
        let all: Vec<Assignment> = all_assignments(&[Var(1), Var(2)]).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], theta(&[(1, false), (2, false)]));
        assert_eq!(all_assignments(&[]).count(), 1);
    }

    #[test]
    fn parse_spans_lines() {
        let phi = parse_cnf("c demo\np cnf 3 2\n1 -2\n 0 2 3 0\n").unwrap();
        assert_eq!(phi, cnf(3, &[&[1, -2], &[2, 3]]));
        assert_eq!(parse_cnf("p cnf 2 1\n1 2 0\n").unwrap(), cnf(2, &[&[1, 2]]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cnf("p cnf 2 1\n1 3 0\n"), Err(Error::InvariantViolation(_))));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 -1 0\n"), Err(Error::InvariantViolation(_))));
        assert!(matches!(parse_cnf("p cnf 2 2\n1 2 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 x 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cnf("1 2 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn evaluation() {
        let phi = cnf(3, &[&[1, 2], &[-1, 3]]);
        assert!(!phi.satisfied_by_ones(&BTreeSet::new()));
        assert!(phi.satisfied_by_ones(&[Var(2)].into()));
        assert!(!phi.satisfied_by_ones(&[Var(1)].into()));
        assert!(phi.satisfied_by_ones(&[Var(1), Var(3)].into()));
    }
}
