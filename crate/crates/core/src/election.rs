//! Elections, ballots, pairwise tallies and Condorcet-consensus membership.

use std::collections::HashSet;
use std::fmt;

use crate::error::ElectionError;

/// Index of a candidate in an election's roster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate(pub usize);

impl Candidate {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// Opaque voter identity. Two elections share a voter iff they contain the
/// same `VoterId`; ballots play no part in identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VoterId(pub u32);

impl fmt::Display for VoterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A strict, complete ranking of the candidates, best first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PreferenceOrder {
    ranking: Box<[u32]>,
    // position[c] = rank of candidate c (0 = top)
    position: Box<[u32]>,
}

impl PreferenceOrder {
    /// Builds an order from candidate indices, best first. The indices must
    /// form a permutation of `0..m`.
    pub fn new(ranking: Vec<usize>) -> Result<Self, ElectionError> {
        let m = ranking.len();
        let mut position = vec![u32::MAX; m];
        for (rank, &c) in ranking.iter().enumerate() {
            if c >= m {
                return Err(ElectionError::UnknownCandidate(c));
            }
            if position[c] != u32::MAX {
                return Err(ElectionError::DuplicateInBallot(c));
            }
            position[c] = rank as u32;
        }
        Ok(Self {
            ranking: ranking.into_iter().map(|c| c as u32).collect(),
            position: position.into_boxed_slice(),
        })
    }

    /// The identity order `0 ≻ 1 ≻ … ≻ m-1`.
    pub fn identity(m: usize) -> Self {
        Self::new((0..m).collect()).expect("identity is a permutation")
    }

    /// All `m!` orders over `m` candidates, in lexicographic order.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            out.push(Self::new(perm.clone()).expect("permutation"));
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| perm[i - 1] < perm[i]) else {
                return out;
            };
            let j = (i..m).rev().find(|&j| perm[j] > perm[i - 1]).expect("exists");
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    /// Candidate at `rank` (0 = most preferred).
    #[inline]
    pub fn at(&self, rank: usize) -> Candidate {
        Candidate(self.ranking[rank] as usize)
    }

    #[inline]
    pub fn position(&self, c: Candidate) -> usize {
        self.position[c.0] as usize
    }

    #[inline]
    pub fn prefers(&self, x: Candidate, y: Candidate) -> bool {
        self.position[x.0] < self.position[y.0]
    }

    pub fn top(&self) -> Candidate {
        self.at(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Candidate> + '_ {
        self.ranking.iter().map(|&c| Candidate(c as usize))
    }

    /// Ranking as plain indices, best first.
    pub fn indices(&self) -> Vec<usize> {
        self.ranking.iter().map(|&c| c as usize).collect()
    }

    /// Same order with `c` moved to the top; others keep their relative order.
    pub fn with_first(&self, c: Candidate) -> Self {
        let mut ranking = Vec::with_capacity(self.len());
        ranking.push(c.0);
        ranking.extend(self.iter().filter(|&x| x != c).map(Candidate::index));
        Self::new(ranking).expect("still a permutation")
    }
}

impl fmt::Debug for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranking.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(">"))
    }
}

/// An election `(C, V, O)`: a candidate roster, voter identities, and one
/// ballot per voter, aligned by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    voters: Vec<VoterId>,
    profile: Vec<PreferenceOrder>,
}

impl Election {
    /// Election with voters numbered `0..n` in profile order.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        profile: Vec<PreferenceOrder>,
    ) -> Result<Self, ElectionError> {
        let voters = (0..profile.len() as u32).map(VoterId).collect();
        Self::with_voters(names, voters, profile)
    }

    pub fn with_voters<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        voters: Vec<VoterId>,
        profile: Vec<PreferenceOrder>,
    ) -> Result<Self, ElectionError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(ElectionError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(ElectionError::DuplicateCandidate(name.clone()));
            }
        }
        if voters.len() != profile.len() {
            return Err(ElectionError::VoterCountMismatch {
                voters: voters.len(),
                ballots: profile.len(),
            });
        }
        let mut ids = HashSet::new();
        for v in &voters {
            if !ids.insert(*v) {
                return Err(ElectionError::DuplicateVoter(*v));
            }
        }
        for ballot in &profile {
            if ballot.len() != names.len() {
                return Err(ElectionError::BallotLength {
                    expected: names.len(),
                    found: ballot.len(),
                });
            }
        }
        Ok(Self {
            names,
            voters,
            profile,
        })
    }

    /// Convenience constructor from candidate names and ballots spelled out
    /// by name, best first.
    pub fn from_named_ballots<S: AsRef<str>>(
        names: &[S],
        ballots: &[&[&str]],
    ) -> Result<Self, ElectionError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let profile = ballots
            .iter()
            .map(|b| {
                let ranking = b
                    .iter()
                    .map(|n| {
                        names
                            .iter()
                            .position(|x| x == n)
                            .ok_or_else(|| ElectionError::UnknownName((*n).to_owned()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if ranking.len() != names.len() {
                    return Err(ElectionError::BallotLength {
                        expected: names.len(),
                        found: ranking.len(),
                    });
                }
                PreferenceOrder::new(ranking)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(names, profile)
    }

    /// Number of candidates `m`.
    pub fn num_candidates(&self) -> usize {
        self.names.len()
    }

    /// Number of voters `n`.
    pub fn num_voters(&self) -> usize {
        self.voters.len()
    }

    pub fn candidates(&self) -> impl Iterator<Item = Candidate> {
        (0..self.names.len()).map(Candidate)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: Candidate) -> &str {
        &self.names[c.0]
    }

    pub fn candidate(&self, name: &str) -> Option<Candidate> {
        self.names.iter().position(|n| n == name).map(Candidate)
    }

    pub fn voters(&self) -> &[VoterId] {
        &self.voters
    }

    pub fn profile(&self) -> &[PreferenceOrder] {
        &self.profile
    }

    /// Iterator over `(voter, ballot)` pairs.
    pub fn ballots(&self) -> impl Iterator<Item = (VoterId, &PreferenceOrder)> {
        self.voters.iter().copied().zip(self.profile.iter())
    }

    /// Ballot of voter `v`, if present.
    pub fn ballot_of(&self, v: VoterId) -> Option<&PreferenceOrder> {
        self.voters
            .iter()
            .position(|&x| x == v)
            .map(|i| &self.profile[i])
    }

    /// Same candidates, keeping only the voters for which `keep` is true.
    pub fn retain_voters(&self, mut keep: impl FnMut(usize, VoterId) -> bool) -> Election {
        let (voters, profile) = self
            .ballots()
            .enumerate()
            .filter(|(i, (v, _))| keep(*i, *v))
            .map(|(_, (v, o))| (v, o.clone()))
            .unzip();
        Election {
            names: self.names.clone(),
            voters,
            profile,
        }
    }

    /// Same candidates with extra voters appended. Fails on identity clashes.
    pub fn with_added_voters(
        &self,
        added: impl IntoIterator<Item = (VoterId, PreferenceOrder)>,
    ) -> Result<Election, ElectionError> {
        let mut voters = self.voters.clone();
        let mut profile = self.profile.clone();
        for (v, o) in added {
            voters.push(v);
            profile.push(o);
        }
        Election::with_voters(self.names.clone(), voters, profile)
    }

    /// Smallest voter id not used in this election.
    pub fn fresh_voter_id(&self) -> VoterId {
        VoterId(self.voters.iter().map(|v| v.0 + 1).max().unwrap_or(0))
    }

    /// Same election with candidates renamed by `perm`: candidate `c` of the
    /// result carries the ballots' positions of `perm[c]`'s name, so every
    /// ballot is rewritten through the relabeling.
    pub fn relabel(&self, perm: &[usize]) -> Election {
        assert_eq!(perm.len(), self.num_candidates());
        let names = perm.iter().map(|&c| self.names[c].clone()).collect();
        let mut inverse = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let profile = self
            .profile
            .iter()
            .map(|o| {
                PreferenceOrder::new(o.iter().map(|c| inverse[c.0]).collect())
                    .expect("relabeling preserves permutations")
            })
            .collect();
        Election {
            names,
            voters: self.voters.clone(),
            profile,
        }
    }

    /// Pairwise majority counts.
    pub fn tally(&self) -> PairwiseTally {
        PairwiseTally::from_election(self)
    }

    /// The Condorcet winner, if any: the candidate preferred to every rival
    /// by a strict majority.
    pub fn condorcet_winner(&self) -> Option<Candidate> {
        self.tally().condorcet_winner()
    }

    /// Membership in the Condorcet consensus class: at least one voter and a
    /// Condorcet winner.
    pub fn is_consensus(&self) -> bool {
        self.num_voters() >= 1 && self.condorcet_winner().is_some()
    }
}

/// `counts[j][k]` = number of voters ranking `c_j` above `c_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseTally {
    m: usize,
    n: usize,
    counts: Vec<u32>,
}

impl PairwiseTally {
    pub fn empty(m: usize) -> Self {
        Self {
            m,
            n: 0,
            counts: vec![0; m * m],
        }
    }

    pub fn from_election(e: &Election) -> Self {
        let mut t = Self::empty(e.num_candidates());
        for o in e.profile() {
            t.add_ballot(o);
        }
        t
    }

    pub fn add_ballot(&mut self, o: &PreferenceOrder) {
        self.add_ballot_times(o, 1);
    }

    pub fn add_ballot_times(&mut self, o: &PreferenceOrder, times: u32) {
        let m = self.m;
        for hi in 0..m {
            let x = o.at(hi).0;
            for lo in hi + 1..m {
                let y = o.at(lo).0;
                self.counts[x * m + y] += times;
            }
        }
        self.n += times as usize;
    }

    /// Removes one copy of `o`. The ballot must have been counted before.
    pub fn remove_ballot(&mut self, o: &PreferenceOrder) {
        let m = self.m;
        for hi in 0..m {
            let x = o.at(hi).0;
            for lo in hi + 1..m {
                let y = o.at(lo).0;
                self.counts[x * m + y] -= 1;
            }
        }
        self.n -= 1;
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    pub fn num_voters(&self) -> usize {
        self.n
    }

    /// Voters ranking `x` above `y`.
    #[inline]
    pub fn get(&self, x: Candidate, y: Candidate) -> u32 {
        self.counts[x.0 * self.m + y.0]
    }

    /// `#{i : x ≻_i y} - #{i : y ≻_i x}`.
    #[inline]
    pub fn margin(&self, x: Candidate, y: Candidate) -> i64 {
        self.get(x, y) as i64 - self.get(y, x) as i64
    }

    /// True iff `x` is ranked above `y` by a strict majority.
    #[inline]
    pub fn beats(&self, x: Candidate, y: Candidate) -> bool {
        2 * self.get(x, y) as usize > self.n
    }

    pub fn condorcet_winner(&self) -> Option<Candidate> {
        if self.n == 0 {
            return None;
        }
        let mut winner = None;
        for c in (0..self.m).map(Candidate) {
            if (0..self.m)
                .map(Candidate)
                .all(|d| d == c || self.beats(c, d))
            {
                debug_assert!(winner.is_none(), "two Condorcet winners");
                winner = Some(c);
            }
        }
        winner
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn abc(ballots: &[&[&str]]) -> Election {
        Election::from_named_ballots(&["a", "b", "c"], ballots).unwrap()
    }

    #[test]
    fn thm35_tally_matches_published_table() {
        let e = fixtures::replacement_vs_young();
        let t = e.tally();
        let c = |s: &str| e.candidate(s).unwrap();
        let expected = [
            ("a", "b", 13),
            ("b", "a", 16),
            ("b", "c", 19),
            ("c", "b", 10),
            ("b", "d", 11),
            ("d", "b", 18),
            ("c", "d", 20),
            ("d", "c", 9),
            ("a", "c", 13),
            ("c", "a", 16),
            ("a", "d", 13),
            ("d", "a", 16),
        ];
        for (x, y, count) in expected {
            assert_eq!(t.get(c(x), c(y)), count, "{x}>{y}");
        }
        assert_eq!(e.condorcet_winner(), None);
        assert!(!e.is_consensus());
    }

    #[test]
    fn empty_election_tally_is_zero() {
        let e = abc(&[]);
        let t = e.tally();
        for x in e.candidates() {
            for y in e.candidates() {
                assert_eq!(t.get(x, y), 0);
            }
        }
        assert_eq!(e.condorcet_winner(), None);
        assert!(!e.is_consensus());
    }

    #[test]
    fn single_ballot_tally() {
        let e = abc(&[&["a", "b", "c"]]);
        let t = e.tally();
        let (a, b, c) = (Candidate(0), Candidate(1), Candidate(2));
        assert_eq!((t.get(a, b), t.get(a, c), t.get(b, c)), (1, 1, 1));
        assert_eq!((t.get(b, a), t.get(c, a), t.get(c, b)), (0, 0, 0));
        assert!(e.is_consensus());
        assert_eq!(e.condorcet_winner(), Some(a));
    }

    #[test]
    fn unanimity_and_ties() {
        let abc_ = ["a", "b", "c"];
        assert_eq!(
            abc(&[&abc_, &abc_, &abc_]).condorcet_winner(),
            Some(Candidate(0))
        );
        let e = Election::from_named_ballots(&["a", "b"], &[&["a", "b"], &["b", "a"]]).unwrap();
        assert_eq!(e.condorcet_winner(), None);
    }

    #[test]
    fn single_candidate_is_vacuous_winner() {
        let e = Election::from_named_ballots(&["a"], &[&["a"]]).unwrap();
        assert_eq!(e.condorcet_winner(), Some(Candidate(0)));
        let empty = Election::from_named_ballots(&["a"], &[]).unwrap();
        assert!(!empty.is_consensus());
    }

    #[test]
    fn rejects_bad_ballots() {
        assert!(matches!(
            PreferenceOrder::new(vec![0, 0, 1]),
            Err(ElectionError::DuplicateInBallot(0))
        ));
        assert!(PreferenceOrder::new(vec![0, 3, 1]).is_err());
        assert!(Election::from_named_ballots(&["a", "b", "c"], &[&["a", "b"]]).is_err());
        assert!(Election::from_named_ballots(&["a", "a"], &[]).is_err());
        let o = PreferenceOrder::identity(2);
        assert!(Election::with_voters(["a", "b"], vec![VoterId(1), VoterId(1)], vec![o.clone(), o])
            .is_err());
    }

    #[test]
    fn with_first_keeps_relative_order() {
        let o = PreferenceOrder::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(o.with_first(Candidate(3)).indices(), vec![3, 2, 0, 1]);
    }
}
