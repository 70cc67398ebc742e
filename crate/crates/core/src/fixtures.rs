//! Named elections used in tests, benchmarks and the `fixture` command.

use crate::election::Election;

/// The 29-voter, four-candidate election on which the voter replacement rule
/// elects `a` while Young's rule elects `b`.
///
/// Five `a`-top ballots (2 `a>b>c>d`, 2 `a>c>d>b`, 1 `a>b>d>c`), then eight
/// each of `b>c>a>d`, `c>d>a>b` and `d>b>a>c`.
pub fn replacement_vs_young() -> Election {
    let groups: [(usize, [&str; 4]); 6] = [
        (2, ["a", "b", "c", "d"]),
        (2, ["a", "c", "d", "b"]),
        (1, ["a", "b", "d", "c"]),
        (8, ["b", "c", "a", "d"]),
        (8, ["c", "d", "a", "b"]),
        (8, ["d", "b", "a", "c"]),
    ];
    let ballots: Vec<&[&str]> = groups
        .iter()
        .flat_map(|(count, b)| std::iter::repeat_n(&b[..], *count))
        .collect();
    Election::from_named_ballots(&["a", "b", "c", "d"], &ballots).expect("fixture is well formed")
}

/// Fixture names accepted by [`by_name`].
pub const NAMES: &[&str] = &["thm35"];

pub fn by_name(name: &str) -> Option<Election> {
    match name {
        "thm35" => Some(replacement_vs_young()),
        _ => None,
    }
}
