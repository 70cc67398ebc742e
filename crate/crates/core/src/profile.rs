//! Plain-text preference profiles.
//!
//! ```text
//! # comments start with '#'
//! 3
//! a b c
//! 2: a > b > c
//! 1: c > b > a
//! ```
//!
//! The first line holds the number of candidates, the second their names.
//! Each further line is `count: ranking`, best first. Voters are numbered
//! from 0 in file order, copies of a line taking consecutive numbers. Blank
//! lines and comments may appear anywhere.

use crate::election::{Election, PreferenceOrder};
use crate::error::{ProfileError, ProfileErrorKind};

fn err(line: usize, kind: ProfileErrorKind) -> ProfileError {
    ProfileError { line, kind }
}

pub fn parse_profile(text: &str) -> Result<Election, ProfileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or_else(|| err(1, ProfileErrorKind::MissingHeader))?;
    let m: usize = header
        .parse()
        .map_err(|_| err(line, ProfileErrorKind::BadCandidateCount(header.to_owned())))?;

    let (roster_line, roster) = lines
        .next()
        .ok_or_else(|| err(line + 1, ProfileErrorKind::RosterLength { expected: m, found: 0 }))?;
    let names: Vec<&str> = roster.split_whitespace().collect();
    if names.len() != m {
        return Err(err(
            roster_line,
            ProfileErrorKind::RosterLength {
                expected: m,
                found: names.len(),
            },
        ));
    }
    // validates names before any ballot is read
    Election::new(names.iter().copied(), Vec::new()).map_err(|e| err(roster_line, e.into()))?;

    let mut profile = Vec::new();
    for (line, text) in lines {
        let (count, ranking) = text
            .split_once(':')
            .ok_or_else(|| err(line, ProfileErrorKind::MalformedBallot))?;
        let count = count.trim();
        let count: i64 = count
            .parse()
            .map_err(|_| err(line, ProfileErrorKind::BadCount(count.to_owned())))?;
        if count <= 0 {
            return Err(err(line, ProfileErrorKind::ZeroCount));
        }
        let order = parse_ranking(ranking, &names).map_err(|k| err(line, k))?;
        profile.extend(std::iter::repeat_n(order, count as usize));
    }
    Election::new(names, profile).map_err(|e| err(roster_line, e.into()))
}

fn parse_ranking(text: &str, names: &[&str]) -> Result<PreferenceOrder, ProfileErrorKind> {
    let mut seen = vec![false; names.len()];
    let mut ranking = Vec::with_capacity(names.len());
    for token in text.split('>').map(str::trim) {
        if token.is_empty() {
            return Err(ProfileErrorKind::MalformedBallot);
        }
        let c = names
            .iter()
            .position(|n| *n == token)
            .ok_or_else(|| ProfileErrorKind::UnknownCandidate(token.to_owned()))?;
        if std::mem::replace(&mut seen[c], true) {
            return Err(ProfileErrorKind::DuplicateCandidate(token.to_owned()));
        }
        ranking.push(c);
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(ProfileErrorKind::MissingCandidate(names[missing].to_owned()));
    }
    Ok(PreferenceOrder::new(ranking)?)
}

/// Writes `e` in profile format, merging runs of identical consecutive
/// ballots into one counted line. Voter identities are not written.
pub fn serialize_profile(e: &Election) -> String {
    serialize_profile_with_comments(e, &[])
}

/// Like [`serialize_profile`], preceded by `# `-prefixed comment lines.
pub fn serialize_profile_with_comments(e: &Election, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{}\n{}\n", e.num_candidates(), e.names().join(" ")));
    let profile = e.profile();
    let mut i = 0;
    while i < profile.len() {
        let run = profile[i..].iter().take_while(|o| **o == profile[i]).count();
        let names: Vec<&str> = profile[i].iter().map(|c| e.name(c)).collect();
        out.push_str(&format!("{run}: {}\n", names.join(" > ")));
        i += run;
    }
    out
}
