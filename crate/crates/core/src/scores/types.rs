use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::election::{Candidate, Election};

/// Voters that rank the same set of opponents above a fixed candidate.
///
/// For replacement and deletion only this set matters, so voters of one
/// type are interchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoterType {
    /// Opponents ranked above the candidate.
    pub above: FixedBitSet,
    pub count: u64,
    /// Profile indices of the voters, in profile order.
    pub members: Vec<usize>,
}

/// Groups the voters of `e` by the set of candidates they rank above `c`,
/// in order of first appearance.
pub fn voter_types(e: &Election, c: Candidate) -> Vec<VoterType> {
    let m = e.num_candidates();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut types: Vec<VoterType> = Vec::new();
    for (i, o) in e.profile().iter().enumerate() {
        let mut above = FixedBitSet::with_capacity(m);
        for rank in 0..o.position(c) {
            above.insert(o.at(rank).index());
        }
        match index.get(&above) {
            Some(&t) => {
                types[t].count += 1;
                types[t].members.push(i);
            }
            None => {
                index.insert(above.clone(), types.len());
                types.push(VoterType {
                    above,
                    count: 1,
                    members: vec![i],
                });
            }
        }
    }
    types
}
