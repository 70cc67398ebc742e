//! The election built from a restricted vertex-cover instance `(Γ, k)` with
//! `N` vertices and `M` edges.
//!
//! Candidates are the edges `y1..yM`, three cyclic gadget candidates
//! `a b c`, the distinguished candidate `p` and a calibration candidate `z`.
//! There are `2N − 3` voters:
//!
//! * vertex voter `i` ranks `a b c` on top, then the edges incident to
//!   vertex `i`, then `p`, then the other edges, then `z`;
//! * the remaining `N − 3` tail voters rank every edge above `a b c p`:
//!   `k−2` with `a>p>b>c`, `k−2` with `b>p>c>a`, `k−2` with `c>p>a>b`,
//!   and `N − 3k + 3` with `p` above `a b c`. `N − k − 1` of them put `z`
//!   first, the other `k − 2` put `z` last.
//!
//! Edges inside each block follow a rotating base order, so that few voters
//! rank any edge above its predecessor. The three cyclic orders of `a b c`
//! each appear in exactly a third of the ballots.

use std::fmt;

use crate::election::{Candidate, Election, PreferenceOrder};
use crate::error::ReductionError;

use super::restrict::RestrictedVcInstance;

/// One of the three rotations of `a b c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclicClass {
    Abc,
    Bca,
    Cab,
}

impl CyclicClass {
    const ALL: [CyclicClass; 3] = [Self::Abc, Self::Bca, Self::Cab];

    fn order(self, a: usize, b: usize, c: usize) -> [usize; 3] {
        match self {
            Self::Abc => [a, b, c],
            Self::Bca => [b, c, a],
            Self::Cab => [c, a, b],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VoterRole {
    /// Voter for the vertex with this (0-based) index.
    Vertex(usize),
    /// `a > p > b > c`
    PatternA,
    /// `b > p > c > a`
    PatternB,
    /// `c > p > a > b`
    PatternC,
    /// `p` above `a b c`
    PTop,
}

impl fmt::Display for VoterRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Vertex(i) => write!(f, "vertex x{}", i + 1),
            Self::PatternA => f.write_str("tail a>p>b>c"),
            Self::PatternB => f.write_str("tail b>p>c>a"),
            Self::PatternC => f.write_str("tail c>p>a>b"),
            Self::PTop => f.write_str("tail p-top"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionElection {
    pub election: Election,
    /// Edge candidates `y1..yM`, in edge order.
    pub edges: Vec<Candidate>,
    pub a: Candidate,
    pub b: Candidate,
    pub c: Candidate,
    pub p: Candidate,
    pub z: Candidate,
    pub voter_roles: Vec<VoterRole>,
    pub classes: Vec<CyclicClass>,
    pub z_first: Vec<bool>,
    /// Rotating base order over edge indices for each voter.
    pub base_orders: Vec<Vec<usize>>,
    pub num_vertices: usize,
    pub budget: usize,
}

/// Base order of voter `i` (1-based) restricted to the edges:
/// `y_{M-i'+2} > … > y_M > y_1 > … > y_{M-i'+1}` where `i'` is `i`'s
/// position within its block of `M` voters. Returns 0-based edge indices.
pub fn base_order(voter: usize, num_edges: usize) -> Vec<usize> {
    let m = num_edges;
    let pos = (voter - 1) % m + 1;
    // start index y_{M - pos + 2}, wrapping y_{M+1} to y_1
    let start = (m - pos + 1) % m;
    (0..m).map(|k| (start + k) % m).collect()
}

pub fn build_election(r: &RestrictedVcInstance) -> Result<ReductionElection, ReductionError> {
    let g = &r.instance;
    let problems = RestrictedVcInstance::violations(g);
    if !problems.is_empty() {
        return Err(ReductionError::NotRestricted(problems.join("; ")));
    }
    let n = g.num_vertices();
    let m = g.num_edges();
    let k = g.budget;
    let voters = 2 * n - 3;

    let (a, b, c, p, z) = (m, m + 1, m + 2, m + 3, m + 4);
    let mut names: Vec<String> = (1..=m).map(|j| format!("y{j}")).collect();
    names.extend(["a", "b", "c", "p", "z"].map(String::from));

    let mut roles: Vec<VoterRole> = (0..n).map(VoterRole::Vertex).collect();
    roles.extend(std::iter::repeat_n(VoterRole::PatternA, k - 2));
    roles.extend(std::iter::repeat_n(VoterRole::PatternB, k - 2));
    roles.extend(std::iter::repeat_n(VoterRole::PatternC, k - 2));
    roles.extend(std::iter::repeat_n(VoterRole::PTop, n + 3 - 3 * k));
    debug_assert_eq!(roles.len(), voters);

    // the pattern voters' classes are forced; vertex and p-top voters take
    // the remaining thirds round-robin
    let mut next = 0;
    let classes: Vec<CyclicClass> = roles
        .iter()
        .map(|role| match role {
            VoterRole::PatternA => CyclicClass::Abc,
            VoterRole::PatternB => CyclicClass::Bca,
            VoterRole::PatternC => CyclicClass::Cab,
            VoterRole::Vertex(_) | VoterRole::PTop => {
                let class = CyclicClass::ALL[next % 3];
                next += 1;
                class
            }
        })
        .collect();

    // z first: every p-top voter, then pattern voters in order until
    // N - k - 1 are placed
    let mut z_first = vec![false; voters];
    let mut z_first_left = n - k - 1;
    for (i, role) in roles.iter().enumerate() {
        if *role == VoterRole::PTop {
            z_first[i] = true;
            z_first_left -= 1;
        }
    }
    for (i, role) in roles.iter().enumerate() {
        if z_first_left == 0 {
            break;
        }
        if matches!(role, VoterRole::PatternA | VoterRole::PatternB | VoterRole::PatternC) {
            z_first[i] = true;
            z_first_left -= 1;
        }
    }

    let base_orders: Vec<Vec<usize>> = (1..=voters).map(|i| base_order(i, m)).collect();
    let mut profile = Vec::with_capacity(voters);
    for (i, role) in roles.iter().enumerate() {
        let base = &base_orders[i];
        let mut ranking = Vec::with_capacity(m + 5);
        match role {
            VoterRole::Vertex(v) => {
                let incident = g.incident(*v);
                ranking.extend(classes[i].order(a, b, c));
                ranking.extend(base.iter().copied().filter(|y| incident.contains(y)));
                ranking.push(p);
                ranking.extend(base.iter().copied().filter(|y| !incident.contains(y)));
                ranking.push(z);
            }
            tail => {
                if z_first[i] {
                    ranking.push(z);
                }
                ranking.extend(base.iter().copied());
                match tail {
                    VoterRole::PatternA => ranking.extend([a, p, b, c]),
                    VoterRole::PatternB => ranking.extend([b, p, c, a]),
                    VoterRole::PatternC => ranking.extend([c, p, a, b]),
                    _ => {
                        ranking.push(p);
                        ranking.extend(classes[i].order(a, b, c));
                    }
                }
                if !z_first[i] {
                    ranking.push(z);
                }
            }
        }
        profile.push(PreferenceOrder::new(ranking).expect("construction yields a permutation"));
    }

    let election = Election::new(names, profile).expect("construction yields a valid election");
    Ok(ReductionElection {
        election,
        edges: (0..m).map(Candidate).collect(),
        a: Candidate(a),
        b: Candidate(b),
        c: Candidate(c),
        p: Candidate(p),
        z: Candidate(z),
        voter_roles: roles,
        classes,
        z_first,
        base_orders,
        num_vertices: n,
        budget: k,
    })
}

impl ReductionElection {
    /// Comment lines documenting candidate and voter roles, for the profile
    /// writer.
    pub fn role_comments(&self, r: &RestrictedVcInstance) -> Vec<String> {
        let g = &r.instance;
        let mut out = vec![
            format!(
                "vertex-cover reduction: {} vertices, {} edges, budget {}",
                g.num_vertices(),
                g.num_edges(),
                g.budget
            ),
            "candidates: y<j> = edge j; a b c = cyclic gadget; p = distinguished; z = calibration"
                .to_owned(),
        ];
        for (j, (u, v)) in g.edges().iter().enumerate() {
            let tag = |x: usize| match r.origin[x] {
                Some(o) => format!("x{} (input vertex {})", x + 1, o + 1),
                None => format!("x{} (padding)", x + 1),
            };
            out.push(format!("edge y{} = {{{}, {}}}", j + 1, tag(*u), tag(*v)));
        }
        let mut start = 0;
        while start < self.voter_roles.len() {
            let role = self.voter_roles[start];
            let same = |x: &VoterRole| match (x, &role) {
                (VoterRole::Vertex(_), VoterRole::Vertex(_)) => true,
                _ => *x == role,
            };
            let len = self.voter_roles[start..].iter().take_while(|x| same(x)).count();
            let label = match role {
                VoterRole::Vertex(_) => "vertex voters (voter i = vertex xi)".to_owned(),
                other => other.to_string(),
            };
            out.push(format!("voters {}..{}: {label}", start + 1, start + len));
            start += len;
        }
        let z_first = self.z_first.iter().filter(|&&f| f).count();
        out.push(format!(
            "z ranked first by {z_first} voters, last by {}",
            self.election.num_voters() - z_first
        ));
        out
    }
}
