//! Exact deletion (Young) score.
//!
//! Deleting a voter who ranks opponent `d` above `c` shrinks `d`'s margin
//! over `c` by one; deleting any other voter grows it by one. With
//! `need[d] = against − for + 1`, a deletion set works iff it lowers every
//! `need[d]` to zero or below. Search branches like the multicover solver:
//! pick a positive `need`, choose which type pays for it, forbid earlier
//! choices in later branches. A type is skipped when an earlier open type
//! ranks a superset of opponents above `c`, since it is better on every
//! coordinate.

use std::cmp::Reverse;

use crate::election::{Candidate, Election};

use super::types::voter_types;

pub(super) fn solve(e: &Election, c: Candidate, cap: Option<u64>) -> Option<u64> {
    if e.num_voters() == 0 {
        return None;
    }
    let tally = e.tally();
    let opponents: Vec<Candidate> = e.candidates().filter(|&d| d != c).collect();
    let need: Vec<i64> = opponents.iter().map(|&d| tally.margin(d, c) + 1).collect();
    let types = voter_types(e, c);
    let covers: Vec<Vec<bool>> = types
        .iter()
        .map(|t| opponents.iter().map(|d| t.above.contains(d.index())).collect())
        .collect();
    let mut search = Search {
        covers,
        avail: types.iter().map(|t| t.count).collect(),
        forbidden: vec![false; types.len()],
        need,
        best: cap.map_or(u64::MAX, |c| c.saturating_add(1)),
        found: false,
    };
    search.dfs(0);
    search.found.then_some(search.best)
}

struct Search {
    // covers[t][k]: type t ranks opponent k above the candidate
    covers: Vec<Vec<bool>>,
    avail: Vec<u64>,
    forbidden: Vec<bool>,
    need: Vec<i64>,
    best: u64,
    found: bool,
}

impl Search {
    fn open(&self, t: usize) -> bool {
        self.avail[t] > 0 && !self.forbidden[t]
    }

    fn delete(&mut self, t: usize, sign: i64) {
        self.avail[t] = (self.avail[t] as i64 - sign) as u64;
        for (k, &above) in self.covers[t].iter().enumerate() {
            self.need[k] += if above { -sign } else { sign };
        }
    }

    fn dfs(&mut self, used: u64) {
        let lb = self.need.iter().copied().max().unwrap_or(0);
        if lb <= 0 {
            if used < self.best {
                self.best = used;
                self.found = true;
            }
            return;
        }
        if used + lb as u64 >= self.best {
            return;
        }

        let mut pick: Option<(u64, Reverse<i64>, usize)> = None;
        for k in (0..self.need.len()).filter(|&k| self.need[k] > 0) {
            let supply: u64 = (0..self.covers.len())
                .filter(|&t| self.open(t) && self.covers[t][k])
                .map(|t| self.avail[t])
                .sum();
            if (supply as i64) < self.need[k] {
                return;
            }
            let key = (supply, Reverse(self.need[k]), k);
            if pick.is_none_or(|p| key < p) {
                pick = Some(key);
            }
        }
        let k = pick.expect("some need is positive").2;

        let width = |t: usize| self.covers[t].iter().filter(|&&b| b).count();
        let mut coverers: Vec<usize> = (0..self.covers.len())
            .filter(|&t| self.open(t) && self.covers[t][k])
            .collect();
        coverers.sort_by_key(|&t| (Reverse(width(t)), t));

        let mut newly_forbidden = Vec::new();
        for (i, &t) in coverers.iter().enumerate() {
            let dominated = coverers[..i].iter().any(|&u| {
                self.covers[t]
                    .iter()
                    .zip(&self.covers[u])
                    .all(|(&a, &b)| !a || b)
            });
            if !dominated {
                self.delete(t, 1);
                self.dfs(used + 1);
                self.delete(t, -1);
            }
            self.forbidden[t] = true;
            newly_forbidden.push(t);
        }
        for t in newly_forbidden {
            self.forbidden[t] = false;
        }
    }
}
