//! Exact minimum-cardinality set multicover.
//!
//! Elements carry integer demands; each item type covers a set of elements
//! and comes in a bounded number of copies. We want the fewest copies whose
//! coverage meets every demand.
//!
//! Search branches on the open element with the smallest remaining supply
//! and on which type covers it. In branch `i` the types tried in branches
//! `0..i` are forbidden for the whole subtree, so every multiset is reached
//! once. A type is skipped when an earlier, still-open type covers a
//! superset of its open elements: swapping it for that type never hurts.

use std::cmp::Reverse;

use fixedbitset::FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverType {
    pub set: FixedBitSet,
    pub count: u64,
}

/// Minimum number of copies meeting every demand, if that minimum is at most
/// `cap` (or exists at all, without a cap).
pub fn min_multicover(types: &[CoverType], demand: &[u64], cap: Option<u64>) -> Option<u64> {
    let mut search = Search::new(types, demand);
    if search.active.is_clear() {
        return Some(0);
    }
    search.best = cap.map_or(u64::MAX, |c| c.saturating_add(1));
    if let Some(g) = search.greedy() {
        if g < search.best {
            search.best = g;
            search.found = true;
        }
    }
    search.dfs(0);
    search.found.then_some(search.best)
}

struct Search<'a> {
    types: &'a [CoverType],
    avail: Vec<u64>,
    forbidden: Vec<bool>,
    demand: Vec<u64>,
    active: FixedBitSet,
    best: u64,
    found: bool,
}

impl<'a> Search<'a> {
    fn new(types: &'a [CoverType], demand: &[u64]) -> Self {
        let mut active = FixedBitSet::with_capacity(demand.len());
        for (e, &d) in demand.iter().enumerate() {
            if d > 0 {
                active.insert(e);
            }
        }
        Self {
            types,
            avail: types.iter().map(|t| t.count).collect(),
            forbidden: vec![false; types.len()],
            demand: demand.to_vec(),
            active,
            best: u64::MAX,
            found: false,
        }
    }

    fn open(&self, t: usize) -> bool {
        self.avail[t] > 0 && !self.forbidden[t]
    }

    fn useful(&self, t: usize) -> usize {
        self.types[t].set.intersection_count(&self.active)
    }

    fn take(&mut self, t: usize) -> Vec<usize> {
        self.avail[t] -= 1;
        let hit: Vec<usize> = self.types[t].set.intersection(&self.active).collect();
        for &e in &hit {
            self.demand[e] -= 1;
            if self.demand[e] == 0 {
                self.active.set(e, false);
            }
        }
        hit
    }

    fn untake(&mut self, t: usize, hit: &[usize]) {
        self.avail[t] += 1;
        for &e in hit {
            self.demand[e] += 1;
            self.active.insert(e);
        }
    }

    fn lower_bound(&self) -> u64 {
        let max_demand = self.active.ones().map(|e| self.demand[e]).max().unwrap_or(0);
        let total: u64 = self.active.ones().map(|e| self.demand[e]).sum();
        let best_cover = (0..self.types.len())
            .filter(|&t| self.open(t))
            .map(|t| self.useful(t) as u64)
            .max()
            .unwrap_or(0);
        if best_cover == 0 {
            return u64::MAX / 2;
        }
        max_demand.max(total.div_ceil(best_cover))
    }

    fn greedy(&mut self) -> Option<u64> {
        let mut taken = Vec::new();
        let result = loop {
            if self.active.is_clear() {
                break Some(taken.len() as u64);
            }
            let pick = (0..self.types.len())
                .filter(|&t| self.open(t))
                .max_by_key(|&t| (self.useful(t), Reverse(t)));
            match pick {
                Some(t) if self.useful(t) > 0 => {
                    let hit = self.take(t);
                    taken.push((t, hit));
                }
                _ => break None,
            }
        };
        for (t, hit) in taken.into_iter().rev() {
            self.untake(t, &hit);
        }
        result
    }

    fn dfs(&mut self, used: u64) {
        if self.active.is_clear() {
            if used < self.best {
                self.best = used;
                self.found = true;
            }
            return;
        }
        if used.saturating_add(self.lower_bound()) >= self.best {
            return;
        }

        let mut pick: Option<(u64, Reverse<u64>, usize)> = None;
        for e in self.active.ones() {
            let supply: u64 = (0..self.types.len())
                .filter(|&t| self.open(t) && self.types[t].set.contains(e))
                .map(|t| self.avail[t])
                .sum();
            if supply < self.demand[e] {
                return;
            }
            let key = (supply, Reverse(self.demand[e]), e);
            if pick.is_none_or(|p| key < p) {
                pick = Some(key);
            }
        }
        let e = pick.expect("active set is non-empty").2;

        let mut coverers: Vec<usize> = (0..self.types.len())
            .filter(|&t| self.open(t) && self.types[t].set.contains(e))
            .collect();
        coverers.sort_by_key(|&t| (Reverse(self.useful(t)), t));
        let restricted: Vec<FixedBitSet> = coverers
            .iter()
            .map(|&t| {
                let mut s = self.types[t].set.clone();
                s.intersect_with(&self.active);
                s
            })
            .collect();

        let mut newly_forbidden = Vec::new();
        for (i, &t) in coverers.iter().enumerate() {
            let dominated = (0..i).any(|j| restricted[i].is_subset(&restricted[j]));
            if !dominated {
                let hit = self.take(t);
                self.dfs(used + 1);
                self.untake(t, &hit);
            }
            self.forbidden[t] = true;
            newly_forbidden.push(t);
        }
        for t in newly_forbidden {
            self.forbidden[t] = false;
        }
    }
}
