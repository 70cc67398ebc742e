mod common;

use condorcet_dr::scores::{deletion_score, dodgson_score, maximin_score, replacement_score};
use condorcet_dr::{Candidate, Election, PreferenceOrder, Score, ScoreKind};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn deletion_matches_subset_search() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..400 {
        let m = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=11);
        let e = common::random_election(&mut rng, m, n);
        for c in e.candidates() {
            assert_eq!(deletion_score(&e, c).finite(), common::brute_deletion(&e, c.index()), "{e:?} {c:?}");
        }
    }
}

#[test]
fn replacement_matches_unrestricted_rewrites() {
    for n in 1..=4 {
        for e in common::all_elections(3, n) {
            for c in e.candidates() {
                assert_eq!(replacement_score(&e, c).finite(), common::brute_replacement(&e, c.index()), "{e:?}");
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..60 {
        let n = rng.gen_range(1..=4);
        let e = common::random_election(&mut rng, 4, n);
        for c in e.candidates() {
            assert_eq!(replacement_score(&e, c).finite(), common::brute_replacement(&e, c.index()), "{e:?}");
        }
    }
}

#[test]
fn dodgson_matches_swap_search() {
    for n in 1..=3 {
        for e in common::all_elections(3, n) {
            for c in e.candidates() {
                assert_eq!(dodgson_score(&e, c), Score::Finite(common::brute_dodgson(&e, c.index())), "{e:?}");
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..40 {
        let (m, n) = (rng.gen_range(3..=4), rng.gen_range(3..=5));
        let e = common::random_election(&mut rng, m, n);
        let c = Candidate(rng.gen_range(0..m));
        if common::brute_dodgson(&e, c.index()) <= 6 {
            assert_eq!(dodgson_score(&e, c), Score::Finite(common::brute_dodgson(&e, c.index())), "{e:?}");
        }
    }
}

#[test]
fn larger_elections_stay_consistent() {
    let mut rng = StdRng::seed_from_u64(24);
    for _ in 0..30 {
        let m = rng.gen_range(4..=7);
        let n = rng.gen_range(20..=60);
        let e = common::random_election(&mut rng, m, n);
        for c in e.candidates() {
            let sr = replacement_score(&e, c).finite().unwrap();
            let sd = deletion_score(&e, c);
            let lb = ScoreKind::Replacement.lower_bound(&e, c);
            assert!(lb <= sr);
            if let Some(sd) = sd.finite() {
                assert!(sr <= sd, "{e:?}");
            }
            assert_eq!(ScoreKind::Replacement.score_at_most(&e, c, sr), Some(sr));
            if sr > 0 {
                assert_eq!(ScoreKind::Replacement.score_at_most(&e, c, sr - 1), None);
            }
        }
    }
}

fn election_strategy() -> impl Strategy<Value = Election> {
    (2usize..=4, 1usize..=9).prop_flat_map(|(m, n)| {
        proptest::collection::vec(Just((0..m).collect::<Vec<_>>()).prop_shuffle(), n).prop_map(move |rows| {
            common::election(m, rows.into_iter().map(|r| PreferenceOrder::new(r).unwrap()).collect())
        })
    })
}

const BOUNDED: [ScoreKind; 4] = [ScoreKind::Insertion, ScoreKind::Deletion, ScoreKind::Replacement, ScoreKind::Dodgson];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_score_iff_condorcet_winner(e in election_strategy()) {
        let winner = e.condorcet_winner();
        for kind in BOUNDED {
            for c in e.candidates() {
                prop_assert_eq!(kind.score(&e, c) == Score::Finite(0), winner == Some(c), "{}", kind);
            }
        }
    }

    #[test]
    fn lower_bounds_hold(e in election_strategy()) {
        for kind in BOUNDED {
            for c in e.candidates() {
                let lb = kind.lower_bound(&e, c);
                prop_assert!(kind.score(&e, c).finite().is_none_or(|s| lb <= s), "{}", kind);
            }
        }
    }

    #[test]
    fn replacement_is_at_most_deletion_and_dodgson(e in election_strategy()) {
        for c in e.candidates() {
            let sr = replacement_score(&e, c).finite().unwrap();
            prop_assert!(deletion_score(&e, c).finite().is_none_or(|sd| sr <= sd));
            prop_assert!(sr <= dodgson_score(&e, c).finite().unwrap());
        }
    }

    #[test]
    fn raising_a_candidate_never_hurts(e in election_strategy(), voter in any::<prop::sample::Index>(), cand in any::<prop::sample::Index>()) {
        let c = Candidate(cand.index(e.num_candidates()));
        let v = voter.index(e.num_voters());
        let mut profile = e.profile().to_vec();
        let pos = profile[v].position(c);
        if pos > 0 {
            let mut r = profile[v].indices();
            r.swap(pos - 1, pos);
            profile[v] = PreferenceOrder::new(r).unwrap();
        }
        let raised = Election::new(e.names().to_vec(), profile).unwrap();
        prop_assert!(maximin_score(&raised, c) >= maximin_score(&e, c));
        for kind in BOUNDED {
            let (before, after) = (kind.score(&e, c), kind.score(&raised, c));
            let key = |s: Score| s.finite().unwrap_or(u64::MAX);
            prop_assert!(key(after) <= key(before), "{}: {} then {}", kind, before, after);
        }
    }

    #[test]
    fn scores_are_neutral_and_ignore_voter_order(e in election_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = StdRng::seed_from_u64(seed);
        let m = e.num_candidates();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut rng);
        let relabeled = e.relabel(&perm);
        let mut profile = e.profile().to_vec();
        profile.shuffle(&mut rng);
        let shuffled = Election::new(e.names().to_vec(), profile).unwrap();
        for kind in ScoreKind::ALL {
            for (new, &old) in perm.iter().enumerate() {
                prop_assert_eq!(kind.score(&relabeled, Candidate(new)), kind.score(&e, Candidate(old)));
            }
            for c in e.candidates() {
                prop_assert_eq!(kind.score(&shuffled, c), kind.score(&e, c));
            }
        }
    }
}
