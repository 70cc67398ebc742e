mod common;

use std::collections::{HashMap, VecDeque};

use condorcet_dr::distance::{self, ElectionMetric, ExtendedDistance};
use condorcet_dr::{Election, PreferenceOrder, VoterId};
use proptest::prelude::*;

/// Every election over {a, b} whose voters are drawn from ids `0..ids`.
fn membership_universe(ids: u32) -> Vec<Election> {
    let orders = PreferenceOrder::all(2);
    let mut out = Vec::new();
    for code in 0..3usize.pow(ids) {
        let (mut voters, mut profile) = (Vec::new(), Vec::new());
        let mut rest = code;
        for v in 0..ids {
            let digit = rest % 3;
            rest /= 3;
            if digit > 0 {
                voters.push(VoterId(v));
                profile.push(orders[digit - 1].clone());
            }
        }
        out.push(Election::with_voters(["a", "b"], voters, profile).unwrap());
    }
    out
}

#[test]
fn deletion_metric_is_the_shortest_path_over_single_steps() {
    let universe = membership_universe(5);
    let n = universe.len();
    let step: Vec<Vec<ExtendedDistance>> = universe
        .iter()
        .map(|x| universe.iter().map(|y| distance::deletion_step(x, y)).collect())
        .collect();
    for source in 0..n {
        let mut dist = vec![ExtendedDistance::Infinite; n];
        let mut done = vec![false; n];
        dist[source] = ExtendedDistance::ZERO;
        for _ in 0..n {
            let Some(u) = (0..n).filter(|&i| !done[i]).min_by_key(|&i| dist[i]) else {
                break;
            };
            done[u] = true;
            for v in 0..n {
                let via = dist[u] + step[u][v];
                if via < dist[v] {
                    dist[v] = via;
                }
            }
        }
        for target in 0..n {
            assert_eq!(
                distance::deletion(&universe[source], &universe[target]),
                dist[target],
                "{:?} -> {:?}",
                universe[source],
                universe[target]
            );
        }
    }
}

#[test]
fn deletion_metric_examples() {
    let e = Election::from_named_ballots(&["a", "b"], &[&["a", "b"], &["b", "a"], &["a", "b"]]).unwrap();
    let smaller = e.retain_voters(|i, _| i == 0);
    // two deleted out of three: 2 - 1/(2 + 9 + 1)
    assert_eq!(distance::deletion(&e, &smaller), ExtendedDistance::ratio(23, 12));
    assert!(distance::deletion(&e, &smaller) < ExtendedDistance::int(2));
    let other = smaller
        .with_added_voters([(VoterId(7), PreferenceOrder::identity(2))])
        .unwrap();
    assert!(distance::deletion(&e, &other) > ExtendedDistance::int(2));
}

#[test]
fn swap_distance_is_the_adjacent_transposition_count() {
    for m in 1..=4 {
        let orders = PreferenceOrder::all(m);
        for start in &orders {
            let mut dist: HashMap<Vec<usize>, u64> = HashMap::from([(start.indices(), 0)]);
            let mut queue = VecDeque::from([start.indices()]);
            while let Some(p) = queue.pop_front() {
                for i in 0..m.saturating_sub(1) {
                    let mut q = p.clone();
                    q.swap(i, i + 1);
                    if !dist.contains_key(&q) {
                        dist.insert(q.clone(), dist[&p] + 1);
                        queue.push_back(q);
                    }
                }
            }
            for o in &orders {
                assert_eq!(distance::swap(start, o), ExtendedDistance::int(dist[&o.indices()]));
            }
        }
    }
}

#[test]
fn rosters_must_match() {
    let ab = Election::from_named_ballots(&["a", "b"], &[&["a", "b"]]).unwrap();
    let ac = Election::from_named_ballots(&["a", "c"], &[&["a", "c"]]).unwrap();
    for metric in ElectionMetric::ALL {
        assert_eq!(metric.distance(&ab, &ac), ExtendedDistance::Infinite, "{metric:?}");
    }
    let ba = Election::from_named_ballots(&["b", "a"], &[&["a", "b"]]).unwrap();
    for metric in ElectionMetric::ALL {
        assert_eq!(metric.distance(&ab, &ba), ExtendedDistance::ZERO, "{metric:?}");
    }
}

fn membership_election() -> impl Strategy<Value = Election> {
    proptest::collection::vec(proptest::option::of(0usize..2), 4).prop_map(|slots| {
        let orders = PreferenceOrder::all(3);
        let mut voters = Vec::new();
        let mut profile = Vec::new();
        for (v, slot) in slots.into_iter().enumerate() {
            if let Some(i) = slot {
                voters.push(VoterId(v as u32));
                profile.push(orders[(v + 3 * i) % 6].clone());
            }
        }
        Election::with_voters(["a", "b", "c"], voters, profile).unwrap()
    })
}

proptest! {
    #[test]
    fn insertion_is_at_most_its_quasidistance(x in membership_election(), y in membership_election()) {
        prop_assert!(distance::insertion(&x, &y) <= distance::insertion_quasi(&x, &y));
        prop_assert!(distance::insertion(&x, &y) <= distance::deletion_quasi(&x, &y));
    }

    #[test]
    fn deletion_metric_separates_nested_from_crossing(x in membership_election(), y in membership_election()) {
        let d = distance::deletion(&x, &y);
        let nested = distance::insertion_quasi(&x, &y).is_finite() || distance::deletion_quasi(&x, &y).is_finite();
        if nested {
            prop_assert!(d < ExtendedDistance::int(2));
        } else {
            prop_assert!(d > ExtendedDistance::int(2));
        }
    }

    #[test]
    fn votewise_lifts_sum_per_voter(seed in any::<u64>(), n in 0usize..6) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let x = common::random_election(&mut rng, 4, n);
        let y = common::random_election(&mut rng, 4, n);
        let swaps: u64 = x.profile().iter().zip(y.profile()).map(|(a, b)| distance::kendall_tau(a, b)).sum();
        let changed = x.profile().iter().zip(y.profile()).filter(|(a, b)| a != b).count() as u64;
        prop_assert_eq!(distance::lifted_swap(&x, &y), ExtendedDistance::int(swaps));
        prop_assert_eq!(distance::hamming(&x, &y), ExtendedDistance::int(changed));
    }
}
