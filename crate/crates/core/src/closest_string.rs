//! Binary closest string, parameterized by the distance bound `d`.
//!
//! A solution is a set of positions to flip in the first string so that the
//! result lies within Hamming distance `d` of every input string. Because the
//! first string is itself an input, a solution never flips more than `d` bits.

use std::fmt;

use crate::enumerate::build_neighbourhood;
use crate::error::{Error, Result};
use crate::order::{inclusion_minimal, sort_dedup, OpSet, Position};
use crate::problem::{MinimalSolutions, Neighbourhood, NeighbourhoodInput, Problem};
use crate::search::SearchStats;

pub type FlipSet = OpSet<Position>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryString(Vec<bool>);

impl BinaryString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }
}

impl std::str::FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvariantViolation(format!("{other:?} is not a binary digit"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryString)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn hamming(a: &BinaryString, b: &BinaryString) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// Flips the 1-based positions in `s`.
pub fn apply_flips(w: &BinaryString, s: &FlipSet) -> Result<BinaryString> {
    let mut out = w.clone();
    for &Position(p) in s {
        let p = p as usize;
        if p == 0 || p > w.len() {
            return Err(Error::PositionOutOfRange { position: p, len: w.len() });
        }
        out.0[p - 1] = !out.0[p - 1];
    }
    Ok(out)
}

/// Strings `s_1, ..., s_k` of equal length `n` and a distance bound `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringInstance {
    strings: Vec<BinaryString>,
    d: usize,
}

impl StringInstance {
    pub fn new(strings: Vec<BinaryString>, d: usize) -> Result<StringInstance> {
        let Some(first) = strings.first() else {
            return Err(Error::InvariantViolation("closest string needs at least one string".into()));
        };
        if let Some(bad) = strings.iter().find(|s| s.len() != first.len()) {
            return Err(Error::LengthMismatch { left: first.len(), right: bad.len() });
        }
        Ok(StringInstance { strings, d })
    }

    /// Convenience constructor from `"0101"`-style literals.
    pub fn parse(strings: &[&str], d: usize) -> Result<StringInstance> {
        let strings = strings.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
        StringInstance::new(strings, d)
    }

    pub fn strings(&self) -> &[BinaryString] {
        &self.strings
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.strings[0].len()
    }

    pub fn with_d(&self, d: usize) -> StringInstance {
        StringInstance { strings: self.strings.clone(), d }
    }

    /// Largest distance from `S(s_1)` to an input string.
    pub fn radius(&self, s: &FlipSet) -> Result<usize> {
        let center = apply_flips(&self.strings[0], s)?;
        self.strings
            .iter()
            .map(|t| hamming(&center, t))
            .try_fold(0, |m, d| d.map(|d| m.max(d)))
    }
}

/// Parses `<k> <n> <d>` followed by `k` lines of `n` binary digits.
pub fn parse_strings(text: &str) -> Result<StringInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, message: "empty input".into() })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|f| f.parse().map_err(|_| Error::Parse { line: hline, message: format!("bad number {f:?}") }))
        .collect::<Result<_>>()?;
    let [k, n, d] = nums[..] else {
        return Err(Error::Parse { line: hline, message: "expected `<k> <n> <d>`".into() });
    };
    let mut strings = Vec::with_capacity(k);
    for (line, raw) in lines {
        if strings.len() == k {
            return Err(Error::Parse { line, message: "more strings than declared".into() });
        }
        let s: BinaryString = raw.parse().map_err(|e: Error| Error::Parse { line, message: e.to_string() })?;
        if s.len() != n {
            return Err(Error::InvariantViolation(format!("line {line}: length {} but n = {n}", s.len())));
        }
        strings.push(s);
    }
    if strings.len() != k {
        return Err(Error::Parse { line: 0, message: format!("declared {k} strings, found {}", strings.len()) });
    }
    StringInstance::new(strings, d)
}

/// Inclusion-minimal flip sets.
pub fn min_closest_string(x: &StringInstance) -> Vec<FlipSet> {
    min_closest_string_with_stats(x).0
}

pub fn min_closest_string_with_stats(x: &StringInstance) -> (Vec<FlipSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let found = minimal_from(x, &OpSet::new(), x.d, &mut stats);
    (found, stats)
}

/// Minimal sets `T`, disjoint from `frozen` with `|T| <= budget`, such that
/// `frozen ∪ T` is a solution.
///
/// If some `s_i` is farther than `d` from the current center, a solution must
/// agree with `s_i` on at least one of any `d + 1` positions where the center
/// and `s_i` differ. Flipped positions cannot be flipped back, so the branch
/// set is the first `d + 1` mismatches outside the current set. Depth is
/// bounded by the budget and width by `d + 1`.
fn minimal_from(x: &StringInstance, frozen: &FlipSet, budget: usize, stats: &mut SearchStats) -> Vec<FlipSet> {
    let center = apply_flips(&x.strings[0], frozen).expect("frozen positions in range");
    let mut search = Search { x, frozen, budget, found: Vec::new(), stats };
    search.run(center, &mut OpSet::new());
    inclusion_minimal(search.found)
}

struct Search<'a> {
    x: &'a StringInstance,
    frozen: &'a FlipSet,
    budget: usize,
    found: Vec<FlipSet>,
    stats: &'a mut SearchStats,
}

impl Search<'_> {
    fn run(&mut self, center: BinaryString, chosen: &mut FlipSet) {
        self.stats.visit(chosen.len());
        let d = self.x.d;
        let violated = self.x.strings.iter().find(|s| hamming(&center, s).unwrap() > d);
        let Some(target) = violated else {
            self.found.push(chosen.clone());
            self.stats.leaf();
            return;
        };
        if chosen.len() >= self.budget {
            self.stats.leaf();
            return;
        }
        let branch: Vec<Position> = (0..center.len())
            .filter(|&i| center.bit(i) != target.bit(i))
            .map(|i| Position(i as u32 + 1))
            .filter(|p| !self.frozen.contains(p) && !chosen.contains(p))
            .take(d + 1)
            .collect();
        if branch.is_empty() {
            self.stats.leaf();
            return;
        }
        for p in branch {
            let mut next = center.clone();
            let i = p.0 as usize - 1;
            next.0[i] = !next.0[i];
            chosen.insert(p);
            self.run(next, chosen);
            chosen.remove(&p);
        }
    }
}

impl Problem for StringInstance {
    type Atom = Position;

    fn parameter(&self) -> usize {
        self.d
    }

    fn universe(&self) -> Vec<Position> {
        (1..=self.n() as u32).map(Position).collect()
    }

    fn is_consistent(&self, _: &FlipSet) -> bool {
        true
    }

    fn is_solution(&self, set: &FlipSet) -> bool {
        self.radius(set).is_ok_and(|r| r <= self.d)
    }
}

impl MinimalSolutions for StringInstance {
    fn minimal_extensions(&self, applied: &FlipSet, budget: usize) -> Result<Vec<FlipSet>> {
        apply_flips(&self.strings[0], applied)?;
        Ok(minimal_from(self, applied, budget, &mut SearchStats::default()))
    }
}

/// The seed maps to the minimal flip sets. A solution `S` maps to `S' ∪ T`
/// for every position `i ∉ S`, `S' = S ∪ {i}`, and every minimal `T` disjoint
/// from `S'` with `|T| <= d − |S| − 1` such that `S' ∪ T` is a solution.
pub fn cs_neighbourhood(x: &StringInstance, input: NeighbourhoodInput<'_, Position>) -> Result<Vec<FlipSet>> {
    build_neighbourhood(x, input).map(sort_dedup)
}

#[derive(Debug, Clone, Copy)]
pub struct FlipExtension<'a> {
    instance: &'a StringInstance,
}

impl<'a> FlipExtension<'a> {
    pub fn new(instance: &'a StringInstance) -> Self {
        FlipExtension { instance }
    }
}

impl Neighbourhood for FlipExtension<'_> {
    type Atom = Position;

    fn neighbours(&self, input: NeighbourhoodInput<'_, Position>) -> Result<Vec<FlipSet>> {
        cs_neighbourhood(self.instance, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BinaryString {
        s.parse().unwrap()
    }

    fn flips(ps: &[u32]) -> FlipSet {
        ps.iter().map(|&p| Position(p)).collect()
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(&bs("00"), &bs("00")).unwrap(), 0);
        assert_eq!(hamming(&bs("00"), &bs("11")).unwrap(), 2);
        assert_eq!(hamming(&bs("0101"), &bs("0110")).unwrap(), 2);
        assert_eq!(hamming(&bs("0"), &bs("01")), Err(Error::LengthMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(apply_flips(&bs("00"), &flips(&[])).unwrap(), bs("00"));
        assert_eq!(apply_flips(&bs("00"), &flips(&[1])).unwrap(), bs("10"));
        assert_eq!(apply_flips(&bs("0101"), &flips(&[1, 4])).unwrap(), bs("1100"));
        assert!(matches!(apply_flips(&bs("00"), &flips(&[3])), Err(Error::PositionOutOfRange { .. })));
        assert!(matches!(apply_flips(&bs("00"), &flips(&[0])), Err(Error::PositionOutOfRange { .. })));
    }

    #[test]
    fn flipping_twice_is_identity() {
        let w = bs("0110101");
        let s = flips(&[2, 3, 7]);
        assert_eq!(apply_flips(&apply_flips(&w, &s).unwrap(), &s).unwrap(), w);
    }

    #[test]
    fn minimal_examples() {
        let same = StringInstance::parse(&["0110", "0110", "0110"], 0).unwrap();
        assert_eq!(min_closest_string(&same), vec![flips(&[])]);
        let x = StringInstance::parse(&["00", "11"], 1).unwrap();
        assert_eq!(min_closest_string(&x), vec![flips(&[1]), flips(&[2])]);
        let x = StringInstance::parse(&["000", "111"], 1).unwrap();
        assert!(min_closest_string(&x).is_empty());
    }

    #[test]
    fn neighbourhood_examples() {
        let same = StringInstance::parse(&["01", "01"], 2).unwrap();
        assert_eq!(cs_neighbourhood(&same, NeighbourhoodInput::Seed).unwrap(), vec![flips(&[])]);
        let x = StringInstance::parse(&["00", "00"], 1).unwrap();
        let empty = flips(&[]);
        assert_eq!(
            cs_neighbourhood(&x, NeighbourhoodInput::Solution(&empty)).unwrap(),
            vec![flips(&[1]), flips(&[2])]
        );
        let one = flips(&[1]);
        assert!(cs_neighbourhood(&x, NeighbourhoodInput::Solution(&one)).unwrap().is_empty());
    }

    #[test]
    fn search_width_is_d_plus_one() {
        let x = StringInstance::parse(&["000000", "111111", "110000"], 3).unwrap();
        let (_, stats) = min_closest_string_with_stats(&x);
        assert!(stats.nodes <= (0..=3).map(|i| 4u64.pow(i)).sum::<u64>());
        assert!(stats.max_depth <= 3);
    }

    #[test]
    fn parse_examples() {
        let x = parse_strings("2 2 1\n00\n11\n").unwrap();
        assert_eq!(x, StringInstance::parse(&["00", "11"], 1).unwrap());
        assert!(matches!(parse_strings("2 2 1\n00\n1\n"), Err(Error::InvariantViolation(_))));
        assert!(matches!(parse_strings("2 2 1\n00\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_strings("2 2 1\n00\n1x\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn unequal_lengths_rejected() {
        assert!(matches!(StringInstance::parse(&["00", "1"], 1), Err(Error::LengthMismatch { .. })));
    }
}
