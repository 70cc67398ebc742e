//! Exact Dodgson score by search over per-voter lift amounts.
//!
//! Only swaps that move `c` upwards help, so an optimal solution lifts `c`
//! some number of places in each ballot; lifting by `j` passes the `j`
//! candidates directly above it. Voters with the same candidates above `c`
//! (in the same order) are interchangeable, and their lifts are enumerated
//! in non-increasing order.

use crate::election::{Candidate, Election};

use super::DeficitVector;

pub(super) fn solve(e: &Election, c: Candidate, cap: Option<u64>) -> Option<u64> {
    if e.num_voters() == 0 {
        return None;
    }
    let deficits = DeficitVector::new(&e.tally(), c);
    if deficits.is_zero() {
        return Some(0);
    }
    // candidates above c, nearest first
    let mut above: Vec<Vec<usize>> = e
        .profile()
        .iter()
        .map(|o| (0..o.position(c)).rev().map(|r| o.at(r).index()).collect())
        .filter(|a: &Vec<usize>| !a.is_empty())
        .collect();
    above.sort();
    let same_as_prev: Vec<bool> = (0..above.len())
        .map(|i| i > 0 && above[i] == above[i - 1])
        .collect();
    let everything: u64 = above.iter().map(|a| a.len() as u64).sum();

    let mut search = Search {
        residual: deficits.to_vec().into_iter().map(|d| d as i64).collect(),
        lifts: vec![0; above.len()],
        above,
        same_as_prev,
        best: cap.map_or(u64::MAX, |c| c.saturating_add(1)),
        found: false,
    };
    // lifting c to the top everywhere always works
    if everything < search.best {
        search.best = everything;
        search.found = true;
    }
    search.dfs(0, 0);
    search.found.then_some(search.best)
}

struct Search {
    above: Vec<Vec<usize>>,
    same_as_prev: Vec<bool>,
    residual: Vec<i64>,
    lifts: Vec<usize>,
    best: u64,
    found: bool,
}

impl Search {
    /// For each opponent still short, the cheapest way to pass it often
    /// enough using voters `from..`; the maximum over opponents.
    fn lower_bound(&self, from: usize) -> Option<u64> {
        let mut bound = 0;
        for (d, &need) in self.residual.iter().enumerate() {
            if need <= 0 {
                continue;
            }
            let mut costs: Vec<u64> = self.above[from..]
                .iter()
                .filter_map(|a| a.iter().position(|&x| x == d).map(|p| p as u64 + 1))
                .collect();
            if (costs.len() as i64) < need {
                return None;
            }
            costs.sort_unstable();
            bound = bound.max(costs[..need as usize].iter().sum());
        }
        Some(bound)
    }

    fn dfs(&mut self, i: usize, used: u64) {
        if self.residual.iter().all(|&r| r <= 0) {
            if used < self.best {
                self.best = used;
                self.found = true;
            }
            return;
        }
        if i == self.above.len() {
            return;
        }
        match self.lower_bound(i) {
            Some(lb) if used + lb < self.best => {}
            _ => return,
        }
        let mut max_lift = self.above[i].len();
        if self.same_as_prev[i] {
            max_lift = max_lift.min(self.lifts[i - 1]);
        }
        for lift in (0..=max_lift).rev() {
            if used + lift as u64 >= self.best {
                continue;
            }
            for k in 0..lift {
                self.residual[self.above[i][k]] -= 1;
            }
            self.lifts[i] = lift;
            self.dfs(i + 1, used + lift as u64);
            for k in 0..lift {
                self.residual[self.above[i][k]] += 1;
            }
        }
        self.lifts[i] = 0;
    }
}
