//! Voter-level distances, their votewise lift to elections, and the election
//! metrics built from inserting and deleting voters.
//!
//! All election distances return an [`ExtendedDistance`]: an exact
//! non-negative rational or `+∞`. Elections over different candidate sets are
//! at distance `+∞`.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use num_rational::Ratio;

use crate::election::{Election, PreferenceOrder, VoterId};

/// A value in `ℚ≥0 ∪ {+∞}`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedDistance {
    Finite(Ratio<u64>),
    Infinite,
}

impl ExtendedDistance {
    pub const ZERO: Self = Self::Finite(Ratio::new_raw(0, 1));

    pub fn int(v: u64) -> Self {
        Self::Finite(Ratio::from_integer(v))
    }

    pub fn ratio(num: u64, den: u64) -> Self {
        Self::Finite(Ratio::new(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn finite(&self) -> Option<Ratio<u64>> {
        match self {
            Self::Finite(r) => Some(*r),
            Self::Infinite => None,
        }
    }

    /// Integer value, if finite and integral.
    pub fn as_integer(&self) -> Option<u64> {
        self.finite().filter(Ratio::is_integer).map(|r| r.to_integer())
    }
}

impl Ord for ExtendedDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.cmp(b),
            (Self::Finite(_), Self::Infinite) => Ordering::Less,
            (Self::Infinite, Self::Finite(_)) => Ordering::Greater,
            (Self::Infinite, Self::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtendedDistance {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a + b),
            _ => Self::Infinite,
        }
    }
}

impl std::iter::Sum for ExtendedDistance {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl From<u64> for ExtendedDistance {
    fn from(v: u64) -> Self {
        Self::int(v)
    }
}

/// Integers print plainly, other rationals as `p/q`, infinity as `inf`.
impl fmt::Display for ExtendedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinite => f.write_str("inf"),
            Self::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Self::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Per-ballot distances that can be lifted votewise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VoterDistanceKind {
    Discrete,
    Swap,
}

impl VoterDistanceKind {
    pub fn distance(self, o1: &PreferenceOrder, o2: &PreferenceOrder) -> ExtendedDistance {
        match self {
            Self::Discrete => discrete(o1, o2),
            Self::Swap => swap(o1, o2),
        }
    }
}

/// 0 for identical rankings, 1 otherwise.
pub fn discrete(o1: &PreferenceOrder, o2: &PreferenceOrder) -> ExtendedDistance {
    if o1.len() != o2.len() {
        return ExtendedDistance::Infinite;
    }
    ExtendedDistance::int(u64::from(o1 != o2))
}

/// Number of candidate pairs ranked in opposite order (Kendall tau).
pub fn swap(o1: &PreferenceOrder, o2: &PreferenceOrder) -> ExtendedDistance {
    if o1.len() != o2.len() {
        return ExtendedDistance::Infinite;
    }
    ExtendedDistance::int(kendall_tau(o1, o2))
}

/// Discordant pair count between two orders over the same roster.
pub fn kendall_tau(o1: &PreferenceOrder, o2: &PreferenceOrder) -> u64 {
    debug_assert_eq!(o1.len(), o2.len());
    // walk o1 top-down; count pairs whose o2 positions are inverted
    let seq: Vec<usize> = o1.iter().map(|c| o2.position(c)).collect();
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions
}

/// `e2` with its candidates reordered to match `e1`'s roster, or `None` if
/// the two candidate sets differ.
fn aligned<'a>(e1: &Election, e2: &'a Election) -> Option<Cow<'a, Election>> {
    if e1.names() == e2.names() {
        return Some(Cow::Borrowed(e2));
    }
    if e1.num_candidates() != e2.num_candidates() {
        return None;
    }
    let perm = e1
        .names()
        .iter()
        .map(|n| e2.candidate(n).map(|c| c.index()))
        .collect::<Option<Vec<_>>>()?;
    Some(Cow::Owned(e2.relabel(&perm)))
}

/// How two voter sets overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Overlap {
    only_first: usize,
    only_second: usize,
    /// Shared voters with identical ballots.
    agreeing: usize,
    /// Shared voters whose ballots differ.
    disagreeing: usize,
}

fn overlap(e1: &Election, e2: &Election) -> Option<Overlap> {
    let e2 = aligned(e1, e2)?;
    let second: HashMap<VoterId, &PreferenceOrder> = e2.ballots().collect();
    let mut agreeing = 0;
    let mut disagreeing = 0;
    for (v, o) in e1.ballots() {
        match second.get(&v) {
            Some(o2) if *o2 == o => agreeing += 1,
            Some(_) => disagreeing += 1,
            None => {}
        }
    }
    let shared = agreeing + disagreeing;
    Some(Overlap {
        only_first: e1.num_voters() - shared,
        only_second: e2.num_voters() - shared,
        agreeing,
        disagreeing,
    })
}

/// Votewise lift: sum of ballot distances over the common voters, provided
/// both elections have the same candidates and the same voters.
pub fn votewise(kind: VoterDistanceKind, e1: &Election, e2: &Election) -> ExtendedDistance {
    let Some(e2) = aligned(e1, e2) else {
        return ExtendedDistance::Infinite;
    };
    if e1.num_voters() != e2.num_voters() {
        return ExtendedDistance::Infinite;
    }
    let second: HashMap<VoterId, &PreferenceOrder> = e2.ballots().collect();
    e1.ballots()
        .map(|(v, o)| match second.get(&v) {
            Some(o2) => kind.distance(o, o2),
            None => ExtendedDistance::Infinite,
        })
        .sum()
}

/// Hamming distance: number of voters whose ballots differ.
pub fn hamming(e1: &Election, e2: &Election) -> ExtendedDistance {
    votewise(VoterDistanceKind::Discrete, e1, e2)
}

/// Sum of per-voter swap distances.
pub fn lifted_swap(e1: &Election, e2: &Election) -> ExtendedDistance {
    votewise(VoterDistanceKind::Swap, e1, e2)
}

/// Insertion metric: `|V ∖ V'| + |V' ∖ V|` when shared voters agree.
pub fn insertion(e1: &Election, e2: &Election) -> ExtendedDistance {
    match overlap(e1, e2) {
        Some(o) if o.disagreeing == 0 => ExtendedDistance::int((o.only_first + o.only_second) as u64),
        _ => ExtendedDistance::Infinite,
    }
}

/// Insertion quasidistance: `|V' ∖ V|` when `V ⊆ V'` and shared voters agree.
pub fn insertion_quasi(e1: &Election, e2: &Election) -> ExtendedDistance {
    match overlap(e1, e2) {
        Some(o) if o.disagreeing == 0 && o.only_first == 0 => {
            ExtendedDistance::int(o.only_second as u64)
        }
        _ => ExtendedDistance::Infinite,
    }
}

/// Deletion quasidistance: `|V ∖ V'|` when `V' ⊆ V` and shared voters agree.
pub fn deletion_quasi(e1: &Election, e2: &Election) -> ExtendedDistance {
    insertion_quasi(e2, e1)
}

/// Cost of one insertion-or-deletion step between nested voter sets:
/// `2 - 1/(k + M² + 1)` with `k` the size difference and `M` the larger size.
pub fn nested_step_cost(smaller: usize, larger: usize) -> ExtendedDistance {
    debug_assert!(smaller < larger);
    let k = (larger - smaller) as u64;
    let m = larger as u64;
    let q = k + m * m + 1;
    ExtendedDistance::ratio(2 * q - 1, q)
}

/// One-step deletion distance: 0 for equal elections, the nested step cost
/// when one voter set strictly contains the other (shared ballots agreeing),
/// `+∞` otherwise. Not a metric on its own.
pub fn deletion_step(e1: &Election, e2: &Election) -> ExtendedDistance {
    let Some(o) = overlap(e1, e2) else {
        return ExtendedDistance::Infinite;
    };
    if o.disagreeing > 0 {
        return ExtendedDistance::Infinite;
    }
    let (n1, n2) = (e1.num_voters(), e2.num_voters());
    match (o.only_first, o.only_second) {
        (0, 0) => ExtendedDistance::ZERO,
        (0, _) => nested_step_cost(n1, n2),
        (_, 0) => nested_step_cost(n2, n1),
        _ => ExtendedDistance::Infinite,
    }
}

/// Deletion metric: shortest-path closure of [`deletion_step`] over all
/// elections with the same candidates.
///
/// Every step costs at least `5/3`, so a path of three or more steps costs at
/// least 5 while any path of one or two steps costs less than 4. When a
/// single step exists it is the shortest path. Otherwise the cheapest
/// two-step path goes down to the largest common sub-election (voters shared
/// with identical ballots) and back up; going up through a union first is
/// always dearer because it raises the larger-size term of both steps.
pub fn deletion(e1: &Election, e2: &Election) -> ExtendedDistance {
    let Some(o) = overlap(e1, e2) else {
        return ExtendedDistance::Infinite;
    };
    let (n1, n2) = (e1.num_voters(), e2.num_voters());
    if o.disagreeing == 0 && (o.only_first == 0 || o.only_second == 0) {
        return match (o.only_first, o.only_second) {
            (0, 0) => ExtendedDistance::ZERO,
            (0, _) => nested_step_cost(n1, n2),
            _ => nested_step_cost(n2, n1),
        };
    }
    let common = o.agreeing;
    nested_step_cost(common, n1) + nested_step_cost(common, n2)
}

/// Election distances exposed by name (CLI and oracle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElectionMetric {
    Hamming,
    LiftedSwap,
    Insertion,
    Deletion,
    InsertionQuasi,
    DeletionQuasi,
}

impl ElectionMetric {
    pub const ALL: [ElectionMetric; 6] = [
        Self::Hamming,
        Self::LiftedSwap,
        Self::Insertion,
        Self::Deletion,
        Self::InsertionQuasi,
        Self::DeletionQuasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hamming => "hamming",
            Self::LiftedSwap => "lifted_swap",
            Self::Insertion => "d_i",
            Self::Deletion => "d_d",
            Self::InsertionQuasi => "d_prime_i",
            Self::DeletionQuasi => "d_prime_d",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }

    pub fn is_symmetric(self) -> bool {
        !matches!(self, Self::InsertionQuasi | Self::DeletionQuasi)
    }

    pub fn distance(self, e1: &Election, e2: &Election) -> ExtendedDistance {
        match self {
            Self::Hamming => hamming(e1, e2),
            Self::LiftedSwap => lifted_swap(e1, e2),
            Self::Insertion => insertion(e1, e2),
            Self::Deletion => deletion(e1, e2),
            Self::InsertionQuasi => insertion_quasi(e1, e2),
            Self::DeletionQuasi => deletion_quasi(e1, e2),
        }
    }
}
