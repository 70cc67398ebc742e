//! Reduction from Vertex Cover to replacement-score winner determination,
//! with an independent exact cover solver for checking it.

mod construct;
mod graph;
mod restrict;
mod vc;
mod verify;

pub use construct::{base_order, build_election, CyclicClass, ReductionElection, VoterRole};
pub use graph::VcInstance;
pub use restrict::{restrict, RestrictedVcInstance};
pub use vc::vc_exact;
pub use verify::{check_structure, verify_reduction, Clause, ReductionReport, VerificationFailure};
