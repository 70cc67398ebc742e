//! Per-candidate consensus scores: Maximin, insertion, deletion (Young),
//! replacement and Dodgson.
//!
//! Maximin and insertion are closed-form over the pairwise tally. Deletion,
//! replacement and Dodgson are NP-hard in general and are solved exactly by
//! branch-and-bound after collapsing interchangeable voters into types.

mod deletion;
mod dodgson;
mod multicover;
mod types;

use std::fmt;

use crate::election::{Candidate, Election, PairwiseTally};

pub use multicover::{min_multicover, CoverType};
pub use types::{voter_types, VoterType};

/// Which score a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScoreKind {
    Maximin,
    Insertion,
    Deletion,
    Replacement,
    Dodgson,
}

impl ScoreKind {
    pub const ALL: [ScoreKind; 5] = [
        Self::Maximin,
        Self::Insertion,
        Self::Deletion,
        Self::Replacement,
        Self::Dodgson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Maximin => "maximin",
            Self::Insertion => "insertion",
            Self::Deletion => "deletion",
            Self::Replacement => "replacement",
            Self::Dodgson => "dodgson",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Exact score of `c`.
    pub fn score(self, e: &Election, c: Candidate) -> Score {
        match self {
            Self::Maximin => Score::Finite(maximin_score(e, c)),
            Self::Insertion => Score::Finite(insertion_score(e, c)),
            Self::Deletion => deletion_score(e, c),
            Self::Replacement => replacement_score(e, c),
            Self::Dodgson => dodgson_score(e, c),
        }
    }

    /// Exact score if it is at most `cap`, `None` otherwise.
    pub fn score_at_most(self, e: &Election, c: Candidate, cap: u64) -> Option<u64> {
        match self {
            Self::Maximin | Self::Insertion => self.score(e, c).finite().filter(|&v| v <= cap),
            Self::Deletion => deletion::solve(e, c, Some(cap)),
            Self::Replacement => replacement_at_most(e, c, Some(cap)),
            Self::Dodgson => dodgson::solve(e, c, Some(cap)),
        }
    }

    /// A cheap lower bound on the score, never above the exact value.
    /// Meaningless for Maximin, where higher is better.
    pub fn lower_bound(self, e: &Election, c: Candidate) -> u64 {
        let deficits = DeficitVector::new(&e.tally(), c);
        match self {
            Self::Maximin => maximin_score(e, c),
            Self::Insertion => insertion_score(e, c),
            Self::Replacement | Self::Dodgson => deficits.max(),
            // each deletion moves a margin by at most one
            Self::Deletion => deficits
                .margins()
                .map(|m| (m + 1).max(0) as u64)
                .max()
                .unwrap_or(0),
        }
    }
}

impl fmt::Display for ScoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A score value. Only deletion scores are `Infinite` on non-empty
/// elections. `Above(b)` records that the exact value was not computed but
/// is known to exceed `b`; winner computations emit it for candidates pruned
/// by bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Score {
    Finite(u64),
    Above(u64),
    Infinite,
}

impl Score {
    pub fn finite(self) -> Option<u64> {
        match self {
            Self::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Self::Infinite
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Above(v) => write!(f, ">{v}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// One score per candidate, indexed by candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreTable {
    pub kind: ScoreKind,
    pub values: Vec<Score>,
}

impl ScoreTable {
    /// Exact scores of every candidate.
    pub fn compute(kind: ScoreKind, e: &Election) -> Self {
        Self {
            kind,
            values: e.candidates().map(|c| kind.score(e, c)).collect(),
        }
    }

    pub fn get(&self, c: Candidate) -> Score {
        self.values[c.index()]
    }
}

/// Per-opponent number of `c`-favouring ballot flips needed for `c` to beat
/// that opponent by strict majority: `max(0, ⌈(against − for + 1)/2⌉)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficitVector {
    candidate: Candidate,
    // indexed by opponent; entry for `candidate` itself is 0
    margins: Vec<i64>,
}

impl DeficitVector {
    pub fn new(tally: &PairwiseTally, c: Candidate) -> Self {
        let margins = (0..tally.num_candidates())
            .map(Candidate)
            .map(|d| if d == c { i64::MIN } else { tally.margin(d, c) })
            .collect();
        Self {
            candidate: c,
            margins,
        }
    }

    pub fn candidate(&self) -> Candidate {
        self.candidate
    }

    /// `against − for` for each opponent.
    pub fn margins(&self) -> impl Iterator<Item = i64> + '_ {
        self.margins.iter().copied().filter(|&m| m != i64::MIN)
    }

    pub fn margin(&self, opponent: Candidate) -> Option<i64> {
        Some(self.margins[opponent.index()]).filter(|&m| m != i64::MIN)
    }

    pub fn get(&self, opponent: Candidate) -> u64 {
        match self.margin(opponent) {
            Some(m) if m >= 0 => (m as u64 + 2) / 2,
            _ => 0,
        }
    }

    /// Deficits indexed by candidate (0 for `c` itself).
    pub fn to_vec(&self) -> Vec<u64> {
        (0..self.margins.len()).map(|d| self.get(Candidate(d))).collect()
    }

    pub fn max(&self) -> u64 {
        self.to_vec().into_iter().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.max() == 0
    }
}

/// Worst pairwise support: `min_{c'≠c} #{i : c ≻_i c'}`; `n` when `c` has
/// no opponents.
pub fn maximin_score(e: &Election, c: Candidate) -> u64 {
    let t = e.tally();
    e.candidates()
        .filter(|&d| d != c)
        .map(|d| u64::from(t.get(c, d)))
        .min()
        .unwrap_or(e.num_voters() as u64)
}

/// Fewest added voters making `c` the Condorcet winner:
/// `max(0, n − 2·s_M(c) + 1)`.
pub fn insertion_score(e: &Election, c: Candidate) -> u64 {
    let n = e.num_voters() as i64;
    (n - 2 * maximin_score(e, c) as i64 + 1).max(0) as u64
}

/// Fewest deleted voters making `c` the Condorcet winner of the remaining
/// election, or `Infinite` if no subset works.
pub fn deletion_score(e: &Election, c: Candidate) -> Score {
    deletion::solve(e, c, None).map_or(Score::Infinite, Score::Finite)
}

/// Fewest ballot replacements making `c` the Condorcet winner. `Infinite`
/// only for an election without voters.
pub fn replacement_score(e: &Election, c: Candidate) -> Score {
    replacement_at_most(e, c, None).map_or(Score::Infinite, Score::Finite)
}

/// Fewest adjacent swaps making `c` the Condorcet winner. `Infinite` only
/// for an election without voters.
pub fn dodgson_score(e: &Election, c: Candidate) -> Score {
    dodgson::solve(e, c, None).map_or(Score::Infinite, Score::Finite)
}

/// Replacing a voter by a `c`-first ballot turns every contest the voter
/// had `c` losing into one `c` wins, so the cheapest replacement set is a
/// multicover: for every opponent `c'`, at least `deficit[c']` replaced
/// voters must have ranked `c'` above `c`.
fn replacement_at_most(e: &Election, c: Candidate, cap: Option<u64>) -> Option<u64> {
    if e.num_voters() == 0 {
        return None;
    }
    let deficits = DeficitVector::new(&e.tally(), c).to_vec();
    let types: Vec<CoverType> = voter_types(e, c)
        .into_iter()
        .map(|t| CoverType {
            set: t.above,
            count: t.count,
        })
        .collect();
    min_multicover(&types, &deficits, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn named(e: &Election, s: &str) -> Candidate {
        e.candidate(s).unwrap()
    }

    #[test]
    fn fixture_maximin_and_insertion() {
        let e = fixtures::replacement_vs_young();
        let sm: Vec<u64> = ["a", "b", "c", "d"]
            .iter()
            .map(|s| maximin_score(&e, named(&e, s)))
            .collect();
        assert_eq!(sm, vec![13, 11, 10, 9]);
        assert_eq!(insertion_score(&e, named(&e, "a")), 4);
    }

    #[test]
    fn fixture_replacement_and_deletion() {
        let e = fixtures::replacement_vs_young();
        let sr = |s| replacement_score(&e, named(&e, s));
        let sd = |s| deletion_score(&e, named(&e, s));
        assert_eq!(sr("a"), Score::Finite(3));
        assert_eq!(sr("b"), Score::Finite(4));
        assert_eq!(sr("c"), Score::Finite(5));
        assert_eq!(sr("d"), Score::Finite(6));
        assert_eq!(sd("b"), Score::Finite(8));
        assert_eq!(sd("c"), Score::Finite(10));
        assert_eq!(sd("a"), Score::Finite(12));
        assert!(matches!(sd("d"), Score::Finite(v) if v >= 12));
    }

    #[test]
    fn trivial_elections() {
        let top: &[&str] = &["a", "b", "c"];
        let e = Election::from_named_ballots(&["a", "b", "c"], &[top; 5]).unwrap();
        let a = named(&e, "a");
        assert_eq!(maximin_score(&e, a), 5);
        for kind in ScoreKind::ALL.into_iter().filter(|k| *k != ScoreKind::Maximin) {
            assert_eq!(kind.score(&e, a), Score::Finite(0), "{kind}");
        }
        // c ranked last by everyone
        assert_eq!(deletion_score(&e, named(&e, "c")), Score::Infinite);

        let empty = Election::from_named_ballots(&["a", "b", "c"], &[]).unwrap();
        assert_eq!(maximin_score(&empty, a), 0);
        assert_eq!(insertion_score(&empty, a), 1);
        assert_eq!(replacement_score(&empty, a), Score::Infinite);

        let single = Election::from_named_ballots(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert_eq!(insertion_score(&single, named(&single, "c")), 2);
    }

    #[test]
    fn single_candidate() {
        let e = Election::from_named_ballots(&["a"], &[&["a"], &["a"]]).unwrap();
        let a = Candidate(0);
        assert_eq!(maximin_score(&e, a), 2);
        for kind in ScoreKind::ALL.into_iter().filter(|k| *k != ScoreKind::Maximin) {
            assert_eq!(kind.score(&e, a), Score::Finite(0));
        }
    }

    #[test]
    fn dodgson_small() {
        let e = Election::from_named_ballots(&["a", "b"], &[&["b", "a"], &["b", "a"], &["a", "b"]])
            .unwrap();
        assert_eq!(dodgson_score(&e, Candidate(0)), Score::Finite(1));
        assert_eq!(dodgson_score(&e, Candidate(1)), Score::Finite(0));
    }

    #[test]
    fn deficits_use_strict_majority() {
        // 2 voters b>a: margin 2 -> need 2 flips; tie -> need 1
        let e = Election::from_named_ballots(&["a", "b"], &[&["b", "a"], &["b", "a"]]).unwrap();
        assert_eq!(DeficitVector::new(&e.tally(), Candidate(0)).get(Candidate(1)), 2);
        let tie = Election::from_named_ballots(&["a", "b"], &[&["b", "a"], &["a", "b"]]).unwrap();
        let d = DeficitVector::new(&tie.tally(), Candidate(0));
        assert_eq!(d.get(Candidate(1)), 1);
        assert!(!d.is_zero());
    }

    #[test]
    fn bounded_queries() {
        let e = fixtures::replacement_vs_young();
        let b = named(&e, "b");
        assert_eq!(ScoreKind::Replacement.score_at_most(&e, b, 3), None);
        assert_eq!(ScoreKind::Replacement.score_at_most(&e, b, 4), Some(4));
        assert_eq!(ScoreKind::Deletion.score_at_most(&e, b, 7), None);
        assert_eq!(ScoreKind::Deletion.score_at_most(&e, b, 100), Some(8));
        assert!(ScoreKind::Deletion.lower_bound(&e, named(&e, "d")) <= 12);
    }
}
