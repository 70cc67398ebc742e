//! Distance rationalization of voting rules over the Condorcet consensus.
//!
//! A rule is rationalized by a distance when its winners are exactly the
//! candidates closest to being Condorcet winners. This crate provides the
//! elections and preference orders, the distances, the consensus scores they
//! induce (Maximin, insertion, Young, voter replacement, Dodgson), the
//! resulting winner sets, exhaustive oracles for checking all of those on
//! small inputs, and the reduction from Vertex Cover showing that replacement
//! winners are hard to find.

pub mod distance;
pub mod election;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod profile;
pub mod reduction;
pub mod rules;
pub mod scores;

pub use distance::{ElectionMetric, ExtendedDistance, VoterDistanceKind};
pub use election::{Candidate, Election, PairwiseTally, PreferenceOrder, VoterId};
pub use error::{ElectionError, GraphError, ProfileError, ProfileErrorKind, ReductionError};
pub use oracle::{dr_winners_oracle, Inconclusive, OracleBudget, OracleScore, OracleWinners};
pub use profile::{parse_profile, serialize_profile, serialize_profile_with_comments};
pub use reduction::{verify_reduction, ReductionElection, ReductionReport, VcInstance};
pub use rules::{Rule, WinnerSet};
pub use scores::{DeficitVector, Score, ScoreKind, ScoreTable};
