//! End-to-end check of the vertex-cover reduction on one graph.

use std::fmt;

use crate::election::Candidate;
use crate::rules::replacement_winners;
use crate::scores::ScoreKind;

use super::construct::{build_election, CyclicClass, ReductionElection};
use super::graph::VcInstance;
use super::restrict::restrict;
use super::vc::vc_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// Shape of the restricted graph and the built election.
    Structure,
    /// `s_r(z) = k'`.
    Calibration,
    /// `s_r(p) ≤ k'` iff the restricted graph has a cover of size `k'`.
    Distinguished,
    /// Every other candidate scores above `k'`.
    Others,
    /// `p` wins iff the original instance is a yes-instance.
    Winner,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Structure => "structure",
            Self::Calibration => "(i) s_r(z) = k'",
            Self::Distinguished => "(ii) s_r(p) <= k' iff cover <= k'",
            Self::Others => "(iii) s_r(x) > k' for x in {a,b,c} and Y",
            Self::Winner => "(iv) p wins iff yes-instance",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("clause {clause} failed{}: {detail}", candidate.as_ref().map(|c| format!(" at {c}")).unwrap_or_default())]
pub struct VerificationFailure {
    pub clause: Clause,
    pub candidate: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub original_cover: usize,
    pub original_budget: usize,
    pub restricted_cover: usize,
    pub padded_budget: usize,
    /// More than one star was needed because the budget was below 1.
    pub extra_padding: bool,
    pub num_candidates: usize,
    pub num_voters: usize,
    pub score_z: u64,
    /// `None` when `s_r(p) > k'`.
    pub score_p: Option<u64>,
    /// Proven lower bound on the scores of `a`, `b` and `c`.
    pub gadget_bound: u64,
    pub winners: Vec<String>,
    pub yes_instance: bool,
}

impl ReductionReport {
    pub fn p_wins(&self) -> bool {
        self.winners.iter().any(|w| w == "p")
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cover {} vs budget {}: {}", self.original_cover, self.original_budget,
            if self.yes_instance { "yes" } else { "no" })?;
        writeln!(f, "restricted cover {} vs budget {}{}", self.restricted_cover, self.padded_budget,
            if self.extra_padding { " (budget padded to 2)" } else { "" })?;
        writeln!(f, "election: {} candidates, {} voters", self.num_candidates, self.num_voters)?;
        writeln!(f, "s_r(z) = {}", self.score_z)?;
        match self.score_p {
            Some(s) => writeln!(f, "s_r(p) = {s}")?,
            None => writeln!(f, "s_r(p) > {}", self.padded_budget)?,
        }
        writeln!(f, "s_r(a), s_r(b), s_r(c) >= {}", self.gadget_bound)?;
        write!(f, "replacement winners: {}", self.winners.join(" "))
    }
}

fn fail(clause: Clause, candidate: Option<&str>, detail: impl Into<String>) -> VerificationFailure {
    VerificationFailure {
        clause,
        candidate: candidate.map(str::to_owned),
        detail: detail.into(),
    }
}

fn structural(cond: bool, detail: impl FnOnce() -> String) -> Result<(), VerificationFailure> {
    if cond {
        Ok(())
    } else {
        Err(fail(Clause::Structure, None, detail()))
    }
}

/// Checks the tallies the hardness argument relies on.
pub fn check_structure(re: &ReductionElection) -> Result<(), VerificationFailure> {
    let e = &re.election;
    let n = re.num_vertices;
    let k = re.budget;
    let m = re.edges.len();
    let t = e.num_voters();
    structural(e.num_candidates() == m + 5, || format!("{} candidates, expected {}", e.num_candidates(), m + 5))?;
    structural(t == 2 * n - 3, || format!("{t} voters, expected {}", 2 * n - 3))?;

    let tally = e.tally();
    for (j, &y) in re.edges.iter().enumerate() {
        let vertex_voters = e.profile()[..n].iter().filter(|o| o.prefers(y, re.p)).count();
        structural(vertex_voters == 2, || format!("{vertex_voters} vertex voters rank y{} above p", j + 1))?;
        let (over, under) = (tally.get(y, re.p), tally.get(re.p, y));
        structural(over as usize == n - 1 && under as usize == n - 2, || {
            format!("y{} over p {over}, p over y{} {under}", j + 1, j + 1)
        })?;
        let prev = re.edges[(j + m - 1) % m];
        let rising = tally.get(y, prev);
        structural(m < 2 || rising <= 6, || format!("{rising} voters prefer y{} to its predecessor", j + 1))?;
    }

    let mut counts = [0usize; 3];
    for o in e.profile() {
        let class = match (o.prefers(re.a, re.b), o.prefers(re.b, re.c), o.prefers(re.c, re.a)) {
            (true, true, false) => CyclicClass::Abc,
            (false, true, true) => CyclicClass::Bca,
            (true, false, true) => CyclicClass::Cab,
            _ => return Err(fail(Clause::Structure, None, "ballot with a non-cyclic a/b/c order")),
        };
        counts[class as usize] += 1;
    }
    structural(counts.iter().all(|&c| 3 * c == t), || format!("cyclic classes {counts:?} of {t}"))?;

    let first = e.profile().iter().filter(|o| o.top() == re.z).count();
    let last = e.profile().iter().filter(|o| o.at(o.len() - 1) == re.z).count();
    structural(first == n - k - 1 && last == n + k - 2, || {
        format!("z first in {first} ballots, last in {last}")
    })
}

fn replacement_at_most(re: &ReductionElection, c: Candidate, cap: u64) -> Option<u64> {
    ScoreKind::Replacement.score_at_most(&re.election, c, cap)
}

/// Restricts `g`, builds the election and checks every clause of the
/// correspondence between covers and replacement scores.
pub fn verify_reduction(g: &VcInstance) -> Result<ReductionReport, VerificationFailure> {
    let r = restrict(g);
    let re = build_election(&r).map_err(|e| fail(Clause::Structure, None, e.to_string()))?;
    check_structure(&re)?;
    let e = &re.election;
    let k = r.budget() as u64;

    let original_cover = vc_exact(g);
    let restricted_cover = vc_exact(&r.instance);
    structural(restricted_cover == original_cover + r.budget_shift(), || {
        format!("restricted cover {restricted_cover}, original {original_cover} plus {}", r.budget_shift())
    })?;
    let yes_instance = original_cover <= g.budget;

    let score_z = match replacement_at_most(&re, re.z, k) {
        Some(s) if s == k => s,
        Some(s) => return Err(fail(Clause::Calibration, Some("z"), format!("s_r(z) = {s}, k' = {k}"))),
        None => return Err(fail(Clause::Calibration, Some("z"), format!("s_r(z) > k' = {k}"))),
    };

    let score_p = replacement_at_most(&re, re.p, k);
    if score_p.is_some() != (restricted_cover as u64 <= k) {
        let shown = score_p.map_or(format!("> {k}"), |s| s.to_string());
        return Err(fail(
            Clause::Distinguished,
            Some("p"),
            format!("s_r(p) = {shown} but cover {restricted_cover} vs k' = {k}"),
        ));
    }

    let gadget_bound = (e.num_voters() as u64).div_ceil(6);
    for x in [re.a, re.b, re.c] {
        if let Some(s) = replacement_at_most(&re, x, gadget_bound - 1) {
            return Err(fail(Clause::Others, Some(e.name(x)), format!("s_r = {s} < {gadget_bound}")));
        }
    }
    if gadget_bound <= k {
        return Err(fail(Clause::Others, None, format!("bound {gadget_bound} not above k' = {k}")));
    }
    for &y in &re.edges {
        if let Some(s) = replacement_at_most(&re, y, k) {
            return Err(fail(Clause::Others, Some(e.name(y)), format!("s_r = {s} <= k' = {k}")));
        }
    }

    let winners = replacement_winners(e);
    let p_wins = winners.contains(re.p);
    if p_wins != yes_instance {
        return Err(fail(
            Clause::Winner,
            Some("p"),
            format!(
                "p {} but cover {original_cover} vs k = {}",
                if p_wins { "wins" } else { "loses" },
                g.budget
            ),
        ));
    }

    Ok(ReductionReport {
        original_cover,
        original_budget: g.budget,
        restricted_cover,
        padded_budget: r.budget(),
        extra_padding: r.stars.len() > 1,
        num_candidates: e.num_candidates(),
        num_voters: e.num_voters(),
        score_z,
        score_p,
        gadget_bound,
        winners: winners.names(e).into_iter().map(str::to_owned).collect(),
        yes_instance,
    })
}
