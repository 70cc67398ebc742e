//! Winner sets for Plurality, Condorcet, Dodgson, Young, Maximin and the
//! voter replacement rule.
//!
//! Rules return every tied winner; no tie-breaking is applied.

use std::fmt;

use crate::election::{Candidate, Election};
use crate::scores::{Score, ScoreKind, ScoreTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Plurality,
    Condorcet,
    Dodgson,
    Young,
    Maximin,
    Replacement,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Self::Plurality,
        Self::Condorcet,
        Self::Dodgson,
        Self::Young,
        Self::Maximin,
        Self::Replacement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Plurality => "plurality",
            Self::Condorcet => "condorcet",
            Self::Dodgson => "dodgson",
            Self::Young => "young",
            Self::Maximin => "maximin",
            Self::Replacement => "replacement",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == name)
    }

    pub fn winners(self, e: &Election) -> WinnerSet {
        match self {
            Self::Plurality => plurality_winners(e),
            Self::Condorcet => condorcet_rule(e),
            Self::Dodgson => dodgson_winners(e),
            Self::Young => young_winners(e),
            Self::Maximin => maximin_winners(e),
            Self::Replacement => replacement_winners(e),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The winners of one rule on one election, sorted by candidate index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinnerSet {
    pub rule: Rule,
    pub winners: Vec<Candidate>,
    /// The scores the winners were selected by, when the rule has any.
    pub scores: Option<ScoreTable>,
}

impl WinnerSet {
    pub fn contains(&self, c: Candidate) -> bool {
        self.winners.contains(&c)
    }

    pub fn names<'a>(&self, e: &'a Election) -> Vec<&'a str> {
        self.winners.iter().map(|&c| e.name(c)).collect()
    }
}

/// Candidates ranked first most often. Every candidate wins an election
/// without voters.
pub fn plurality_winners(e: &Election) -> WinnerSet {
    let mut firsts = vec![0usize; e.num_candidates()];
    for o in e.profile() {
        firsts[o.top().index()] += 1;
    }
    let top = firsts.iter().copied().max().unwrap_or(0);
    WinnerSet {
        rule: Rule::Plurality,
        winners: e.candidates().filter(|c| firsts[c.index()] == top).collect(),
        scores: None,
    }
}

/// The Condorcet winner alone, or nobody.
pub fn condorcet_rule(e: &Election) -> WinnerSet {
    WinnerSet {
        rule: Rule::Condorcet,
        winners: e.condorcet_winner().into_iter().collect(),
        scores: None,
    }
}

/// Candidates with the highest Maximin score.
pub fn maximin_winners(e: &Election) -> WinnerSet {
    let table = ScoreTable::compute(ScoreKind::Maximin, e);
    let best = table.values.iter().filter_map(|s| s.finite()).max();
    WinnerSet {
        rule: Rule::Maximin,
        winners: e
            .candidates()
            .filter(|&c| table.get(c).finite() == best)
            .collect(),
        scores: Some(table),
    }
}

/// Candidates with the lowest deletion score; infinite scores never win
/// while some candidate has a finite one.
pub fn young_winners(e: &Election) -> WinnerSet {
    min_score_winners(Rule::Young, ScoreKind::Deletion, e)
}

/// Candidates with the lowest replacement score.
pub fn replacement_winners(e: &Election) -> WinnerSet {
    min_score_winners(Rule::Replacement, ScoreKind::Replacement, e)
}

/// Candidates with the lowest Dodgson score.
pub fn dodgson_winners(e: &Election) -> WinnerSet {
    min_score_winners(Rule::Dodgson, ScoreKind::Dodgson, e)
}

/// Argmin of an expensive score without computing every score exactly.
///
/// Candidates are visited by increasing lower bound. Once some exact score
/// `b` is known, the rest are only solved up to `b`; candidates whose bound
/// already exceeds `b` are not solved at all. Those entries read
/// `Score::Above(b)`.
fn min_score_winners(rule: Rule, kind: ScoreKind, e: &Election) -> WinnerSet {
    let mut order: Vec<(u64, Candidate)> = e
        .candidates()
        .map(|c| (kind.lower_bound(e, c), c))
        .collect();
    order.sort();

    let mut values = vec![Score::Infinite; e.num_candidates()];
    let mut best: Option<u64> = None;
    for (lb, c) in order {
        values[c.index()] = match best {
            Some(b) if lb > b => Score::Above(b),
            Some(b) => kind
                .score_at_most(e, c, b)
                .map_or(Score::Above(b), Score::Finite),
            None => kind.score(e, c),
        };
        if let Score::Finite(v) = values[c.index()] {
            best = Some(best.map_or(v, |b| b.min(v)));
        }
    }
    let winners = match best {
        Some(b) => e
            .candidates()
            .filter(|c| values[c.index()] == Score::Finite(b))
            .collect(),
        None => e.candidates().collect(),
    };
    WinnerSet {
        rule,
        winners,
        scores: Some(ScoreTable { kind, values }),
    }
}
