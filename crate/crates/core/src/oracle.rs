//! Brute-force `(C, d)`-winners: for every candidate, the distance from an
//! election to the nearest election over the same candidates in which that
//! candidate is the Condorcet winner, found by enumerating elections.
//!
//! Nothing here calls into [`crate::scores`]; the oracle exists to check
//! those solvers.
//!
//! Votewise metrics (`hamming`, `lifted_swap`) only relate elections with the
//! same voters, so the search runs over all `(m!)^n` profiles. Membership
//! metrics (`d_i`, `d_d` and the quasidistances) relate elections whose voter
//! sets differ; the search keeps any subset of the voters and adds up to
//! `max_added` fresh voters with arbitrary ballots. Anything beyond the
//! addition budget is bounded below by the distance to the election with
//! every voter kept and `max_added + 1` voters added, which is the cheapest
//! unsearched election for every membership metric. A candidate whose best
//! found distance exceeds that bound gets [`OracleScore::AtLeast`], and
//! winners are only reported when the bounds settle the minimum.

use thiserror::Error;

use crate::distance::{ElectionMetric, ExtendedDistance, VoterDistanceKind};
use crate::election::{Candidate, Election, PreferenceOrder, VoterId};

/// Which ballots the oracle may give to added voters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddedBallots {
    /// All `m!` orders.
    AnyOrder,
    /// Only orders that rank the target candidate first. Sound because
    /// moving the target to the top of an added ballot never hurts it.
    TargetFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `(m!)^n` the votewise search will enumerate.
    pub max_profiles: u64,
    /// Largest `2^n` the membership search will enumerate.
    pub max_kept_subsets: u64,
    /// Most voters added; `None` means `n + 1`, enough for any candidate to
    /// become the Condorcet winner by insertion alone.
    pub max_added: Option<usize>,
    pub added_ballots: AddedBallots,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_profiles: 1 << 20,
            max_kept_subsets: 1 << 12,
            max_added: None,
            added_ballots: AddedBallots::AnyOrder,
        }
    }
}

/// Distance from the election to the nearest consensus election won by one
/// candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleScore {
    Exact(ExtendedDistance),
    /// Not certified; the true value is at least this.
    AtLeast(ExtendedDistance),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle inconclusive: {reason}")]
pub struct Inconclusive {
    pub reason: String,
}

impl Inconclusive {
    fn new(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleWinners {
    pub metric: ElectionMetric,
    pub winners: Vec<Candidate>,
    pub scores: Vec<OracleScore>,
}

/// The `(C, metric)`-winners of `e`.
pub fn dr_winners_oracle(
    e: &Election,
    metric: ElectionMetric,
    budget: &OracleBudget,
) -> Result<OracleWinners, Inconclusive> {
    let scores = consensus_scores(e, metric, budget)?;
    let best = scores
        .iter()
        .filter_map(|s| match s {
            OracleScore::Exact(d) => Some(*d),
            OracleScore::AtLeast(_) => None,
        })
        .min();
    let Some(best) = best else {
        return Err(Inconclusive::new("no candidate's distance was certified"));
    };
    for (c, s) in scores.iter().enumerate() {
        if let OracleScore::AtLeast(lb) = s {
            if *lb <= best {
                return Err(Inconclusive::new(format!(
                    "candidate {} is only known to be at least {lb}, not above the minimum {best}",
                    e.name(Candidate(c))
                )));
            }
        }
    }
    let winners = e
        .candidates()
        .filter(|c| scores[c.index()] == OracleScore::Exact(best))
        .collect();
    Ok(OracleWinners {
        metric,
        winners,
        scores,
    })
}

/// Per-candidate distance to the nearest election that candidate wins as
/// Condorcet winner.
pub fn consensus_scores(
    e: &Election,
    metric: ElectionMetric,
    budget: &OracleBudget,
) -> Result<Vec<OracleScore>, Inconclusive> {
    match metric {
        ElectionMetric::Hamming => votewise_scores(e, VoterDistanceKind::Discrete, budget),
        ElectionMetric::LiftedSwap => votewise_scores(e, VoterDistanceKind::Swap, budget),
        _ => membership_scores(e, metric, budget),
    }
}

/// Flat `m × m` pairwise counts.
#[derive(Clone)]
struct FlatTally {
    m: usize,
    counts: Vec<u32>,
    n: usize,
}

impl FlatTally {
    fn new(m: usize) -> Self {
        Self {
            m,
            counts: vec![0; m * m],
            n: 0,
        }
    }

    fn of(o: &PreferenceOrder) -> Self {
        let m = o.len();
        let mut t = Self::new(m);
        for x in 0..m {
            for y in 0..m {
                if x != y && o.prefers(Candidate(x), Candidate(y)) {
                    t.counts[x * m + y] = 1;
                }
            }
        }
        t.n = 1;
        t
    }

    fn add(&mut self, other: &Self, times: u32) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b * times;
        }
        self.n += other.n * times as usize;
    }

    fn sub(&mut self, other: &Self, times: u32) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a -= b * times;
        }
        self.n -= other.n * times as usize;
    }

    fn winner_with(&self, extra: &Self) -> Option<usize> {
        let n = self.n + extra.n;
        if n == 0 {
            return None;
        }
        let m = self.m;
        (0..m).find(|&c| {
            (0..m).all(|d| {
                d == c || 2 * (self.counts[c * m + d] + extra.counts[c * m + d]) as usize > n
            })
        })
    }
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base))
}

fn votewise_scores(
    e: &Election,
    kind: VoterDistanceKind,
    budget: &OracleBudget,
) -> Result<Vec<OracleScore>, Inconclusive> {
    let (m, n) = (e.num_candidates(), e.num_voters());
    let orders = PreferenceOrder::all(m);
    let profiles = checked_pow(orders.len() as u64, n);
    if profiles.is_none_or(|p| p > budget.max_profiles) {
        return Err(Inconclusive::new(format!(
            "{}^{n} profiles exceed the budget of {}",
            orders.len(),
            budget.max_profiles
        )));
    }
    let mut best = vec![ExtendedDistance::Infinite; m];
    if n > 0 {
        let tallies: Vec<FlatTally> = orders.iter().map(FlatTally::of).collect();
        let dist: Vec<Vec<u64>> = e
            .profile()
            .iter()
            .map(|o| {
                orders
                    .iter()
                    .map(|p| kind.distance(o, p).as_integer().expect("same roster"))
                    .collect()
            })
            .collect();
        let empty = FlatTally::new(m);
        let mut choice = vec![0usize; n];
        loop {
            let mut t = FlatTally::new(m);
            for &p in &choice {
                t.add(&tallies[p], 1);
            }
            if let Some(w) = t.winner_with(&empty) {
                let d = ExtendedDistance::int(choice.iter().enumerate().map(|(i, &p)| dist[i][p]).sum());
                best[w] = best[w].min(d);
            }
            // odometer, last voter fastest: lexicographic over profiles
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(best.into_iter().map(OracleScore::Exact).collect());
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < orders.len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }
    Ok(best.into_iter().map(OracleScore::Exact).collect())
}

fn membership_scores(
    e: &Election,
    metric: ElectionMetric,
    budget: &OracleBudget,
) -> Result<Vec<OracleScore>, Inconclusive> {
    let (m, n) = (e.num_candidates(), e.num_voters());
    if checked_pow(2, n).is_none_or(|s| s > budget.max_kept_subsets) {
        return Err(Inconclusive::new(format!(
            "2^{n} voter subsets exceed the budget of {}",
            budget.max_kept_subsets
        )));
    }
    let max_added = match metric {
        ElectionMetric::DeletionQuasi => 0,
        _ => budget.max_added.unwrap_or(n + 1),
    };
    let full = (1usize << n) - 1;
    let masks: Vec<usize> = match metric {
        ElectionMetric::InsertionQuasi => vec![full],
        _ => (0..=full).collect(),
    };

    // pairwise counts of every kept subset
    let ballots: Vec<FlatTally> = e.profile().iter().map(FlatTally::of).collect();
    let mut kept = vec![FlatTally::new(m); full + 1];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let mut t = kept[mask & (mask - 1)].clone();
        t.add(&ballots[low], 1);
        kept[mask] = t;
    }

    let mut memo = DistanceMemo::new(e, metric, max_added);
    let orders = PreferenceOrder::all(m);
    let mut best = vec![ExtendedDistance::Infinite; m];
    match budget.added_ballots {
        AddedBallots::AnyOrder => {
            let pool: Vec<FlatTally> = orders.iter().map(FlatTally::of).collect();
            for_each_multiset(&pool, max_added, m, &mut |added, count| {
                for &mask in &masks {
                    if let Some(w) = kept[mask].winner_with(added) {
                        let d = memo.get(mask.count_ones() as usize, count);
                        best[w] = best[w].min(d);
                    }
                }
            });
        }
        AddedBallots::TargetFirst => {
            for c in 0..m {
                let pool: Vec<FlatTally> = orders
                    .iter()
                    .filter(|o| o.top() == Candidate(c))
                    .map(FlatTally::of)
                    .collect();
                for_each_multiset(&pool, max_added, m, &mut |added, count| {
                    for &mask in &masks {
                        if kept[mask].winner_with(added) == Some(c) {
                            let d = memo.get(mask.count_ones() as usize, count);
                            best[c] = best[c].min(d);
                        }
                    }
                });
            }
        }
    }

    let beyond = (metric != ElectionMetric::DeletionQuasi).then(|| memo.get(n, max_added + 1));
    Ok(best
        .into_iter()
        .map(|d| match beyond {
            Some(lb) if d > lb => OracleScore::AtLeast(lb),
            _ => OracleScore::Exact(d),
        })
        .collect())
}

/// Calls `f(tally, size)` for every multiset of at most `max` ballots from
/// `pool`, including the empty one.
fn for_each_multiset(pool: &[FlatTally], max: usize, m: usize, f: &mut dyn FnMut(&FlatTally, usize)) {
    fn rec(
        pool: &[FlatTally],
        from: usize,
        left: usize,
        size: usize,
        acc: &mut FlatTally,
        f: &mut dyn FnMut(&FlatTally, usize),
    ) {
        f(acc, size);
        if left == 0 {
            return;
        }
        for p in from..pool.len() {
            acc.add(&pool[p], 1);
            rec(pool, p, left - 1, size + 1, acc, f);
            acc.sub(&pool[p], 1);
        }
    }
    let mut acc = FlatTally::new(m);
    rec(pool, 0, max, 0, &mut acc, f);
}

/// Membership distances depend only on how many voters are kept and how
/// many are added, so each size pair is evaluated once on a representative
/// election through the metric itself.
struct DistanceMemo<'a> {
    e: &'a Election,
    metric: ElectionMetric,
    table: Vec<Vec<Option<ExtendedDistance>>>,
}

impl<'a> DistanceMemo<'a> {
    fn new(e: &'a Election, metric: ElectionMetric, max_added: usize) -> Self {
        Self {
            e,
            metric,
            table: vec![vec![None; max_added + 2]; e.num_voters() + 1],
        }
    }

    fn get(&mut self, kept: usize, added: usize) -> ExtendedDistance {
        if let Some(d) = self.table[kept][added] {
            return d;
        }
        let e = self.e;
        let base = e.retain_voters(|i, _| i < kept);
        let first = e.fresh_voter_id().0;
        let filler = PreferenceOrder::identity(e.num_candidates());
        let other = base
            .with_added_voters((0..added as u32).map(|k| (VoterId(first + k), filler.clone())))
            .expect("fresh voter ids");
        let d = self.metric.distance(e, &other);
        self.table[kept][added] = Some(d);
        d
    }
}
