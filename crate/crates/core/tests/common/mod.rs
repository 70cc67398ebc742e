#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use condorcet_dr::reduction::VcInstance;
use condorcet_dr::{Candidate, Election, PreferenceOrder};
use rand::seq::SliceRandom;
use rand::Rng;

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub fn election(m: usize, profile: Vec<PreferenceOrder>) -> Election {
    Election::new(NAMES[..m].iter().copied(), profile).unwrap()
}

pub fn random_order(rng: &mut impl Rng, m: usize) -> PreferenceOrder {
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(rng);
    PreferenceOrder::new(v).unwrap()
}

pub fn random_election(rng: &mut impl Rng, m: usize, n: usize) -> Election {
    election(m, (0..n).map(|_| random_order(rng, m)).collect())
}

/// Every profile of `n` ballots over `m` candidates, lexicographically.
pub fn all_elections(m: usize, n: usize) -> Vec<Election> {
    let orders = PreferenceOrder::all(m);
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        out.push(election(m, choice.iter().map(|&i| orders[i].clone()).collect()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
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

/// Condorcet winner straight from the ballots.
pub fn cw(m: usize, profile: &[&PreferenceOrder]) -> Option<usize> {
    if profile.is_empty() {
        return None;
    }
    (0..m).find(|&c| {
        (0..m).all(|d| {
            d == c
                || 2 * profile
                    .iter()
                    .filter(|o| o.position(Candidate(c)) < o.position(Candidate(d)))
                    .count()
                    > profile.len()
        })
    })
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize == k)
}

/// Fewest voters whose removal leaves `c` the Condorcet winner.
pub fn brute_deletion(e: &Election, c: usize) -> Option<u64> {
    let (m, n) = (e.num_candidates(), e.num_voters());
    (0..=n).find_map(|k| {
        subsets_of_size(n, k)
            .any(|removed| {
                let rest: Vec<_> = (0..n).filter(|i| removed >> i & 1 == 0).map(|i| &e.profile()[i]).collect();
                cw(m, &rest) == Some(c)
            })
            .then_some(k as u64)
    })
}

/// Fewest voters whose ballots must be rewritten, to anything at all, for
/// `c` to become the Condorcet winner.
pub fn brute_replacement(e: &Election, c: usize) -> Option<u64> {
    let (m, n) = (e.num_candidates(), e.num_voters());
    let orders = PreferenceOrder::all(m);
    (0..=n).find_map(|k| {
        subsets_of_size(n, k)
            .any(|replaced| {
                let idx: Vec<usize> = (0..n).filter(|i| replaced >> i & 1 == 1).collect();
                let mut choice = vec![0usize; k];
                loop {
                    let mut profile: Vec<&PreferenceOrder> = e.profile().iter().collect();
                    for (j, &i) in idx.iter().enumerate() {
                        profile[i] = &orders[choice[j]];
                    }
                    if cw(m, &profile) == Some(c) {
                        return true;
                    }
                    let mut j = k;
                    loop {
                        if j == 0 {
                            return false;
                        }
                        j -= 1;
                        choice[j] += 1;
                        if choice[j] < orders.len() {
                            break;
                        }
                        choice[j] = 0;
                    }
                }
            })
            .then_some(k as u64)
    })
}

/// Fewest added ballots, of any kind, for `c` to become the Condorcet
/// winner. Searches multisets of up to `limit` additions.
pub fn brute_insertion(e: &Election, c: usize, limit: usize) -> Option<u64> {
    let m = e.num_candidates();
    let orders = PreferenceOrder::all(m);
    let base: Vec<&PreferenceOrder> = e.profile().iter().collect();
    fn rec<'a>(
        orders: &'a [PreferenceOrder],
        from: usize,
        left: usize,
        profile: &mut Vec<&'a PreferenceOrder>,
        m: usize,
        c: usize,
    ) -> bool {
        if left == 0 {
            return cw(m, profile) == Some(c);
        }
        (from..orders.len()).any(|p| {
            profile.push(&orders[p]);
            let hit = rec(orders, p, left - 1, profile, m, c);
            profile.pop();
            hit
        })
    }
    (0..=limit).find_map(|k| {
        let mut profile = base.clone();
        rec(&orders, 0, k, &mut profile, m, c).then_some(k as u64)
    })
}

/// Fewest adjacent swaps, over all ballots, for `c` to become the Condorcet
/// winner: breadth-first search over profiles.
pub fn brute_dodgson(e: &Election, c: usize) -> u64 {
    let m = e.num_candidates();
    let start: Vec<Vec<usize>> = e.profile().iter().map(|o| o.indices()).collect();
    let mut dist: HashMap<Vec<Vec<usize>>, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        let orders: Vec<PreferenceOrder> = p.iter().map(|r| PreferenceOrder::new(r.clone()).unwrap()).collect();
        if cw(m, &orders.iter().collect::<Vec<_>>()) == Some(c) {
            return d;
        }
        for v in 0..p.len() {
            for i in 0..m - 1 {
                let mut q = p.clone();
                q[v].swap(i, i + 1);
                if !dist.contains_key(&q) {
                    dist.insert(q.clone(), d + 1);
                    queue.push_back(q);
                }
            }
        }
    }
    unreachable!("putting c on top of every ballot always works")
}

/// Minimum vertex cover by trying every vertex subset.
pub fn brute_cover(g: &VcInstance) -> usize {
    (0u32..1 << g.num_vertices())
        .filter(|s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    PreferenceOrder::all(n).iter().map(|o| o.indices()).collect()
}

/// One representative of every connected graph on `n` vertices up to
/// isomorphism, as edge lists.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = VcInstance::new(n, edges.iter().copied(), 0).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                edges.iter().fold(0u32, |acc, &(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    acc | 1 << index[&(a, b)]
                })
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect::<Vec<_>>()
            .into_iter()
            .filter(|_| rng.gen_bool(p))
            .collect();
        if VcInstance::new(n, edges.iter().copied(), 0).unwrap().is_connected() {
            return edges;
        }
    }
}
