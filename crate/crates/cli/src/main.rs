use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use condorcet_dr::oracle::{dr_winners_oracle, OracleBudget};
use condorcet_dr::reduction::{build_election, restrict, vc_exact, verify_reduction, VcInstance};
use condorcet_dr::{
    fixtures, parse_profile, serialize_profile, serialize_profile_with_comments, Election, ElectionMetric, Rule,
    Score, ScoreKind,
};

const EXIT_INPUT: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;

/// Condorcet-consensus voting rules, their distances and scores.
///
/// Profiles are text files: the candidate count, the candidate names, then
/// lines of the form `count: a > b > c`. Use `-` to read from stdin.
#[derive(Parser)]
#[command(name = "condorcet-dr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the winners of a rule, one per line.
    ///
    /// Rules: plurality, condorcet, dodgson, young, maximin, replacement.
    Winners { rule: String, file: PathBuf },
    /// Print `candidate<TAB>score` for every candidate, or just one.
    ///
    /// Kinds: maximin, insertion, deletion, replacement, dodgson.
    Score {
        kind: String,
        file: PathBuf,
        candidate: Option<String>,
    },
    /// Print the distance between two elections over the same candidates.
    ///
    /// Metrics: hamming, lifted_swap, d_i, d_d, d_prime_i, d_prime_d.
    /// Voters are matched by their position in each file.
    Distance {
        metric: String,
        first: PathBuf,
        second: PathBuf,
    },
    /// Winners under a metric found by exhaustive search over nearby
    /// elections. Exits with status 2 if the search budget cannot settle
    /// them.
    Rationalize {
        metric: String,
        file: PathBuf,
        /// Most voters the search may add (membership metrics).
        #[arg(long)]
        max_added: Option<usize>,
        /// Largest number of profiles the votewise search may visit.
        #[arg(long, default_value_t = OracleBudget::default().max_profiles)]
        max_profiles: u64,
    },
    /// Build the replacement-rule election for a vertex-cover instance given
    /// as a DIMACS edge list (`p edge N M`, then `e u v` lines).
    Reduce {
        graph: PathBuf,
        k: usize,
        /// Also compute the scores and check every clause of the reduction.
        #[arg(long)]
        verify: bool,
    },
    /// Print a built-in election.
    Fixture { name: String },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_election(path: &Path) -> Result<Election> {
    let text = read_input(path)?;
    parse_profile(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_name<T>(kind: &str, name: &str, lookup: impl Fn(&str) -> Option<T>, known: &[&str]) -> Result<T> {
    lookup(name).ok_or_else(|| anyhow!("unknown {kind} `{name}` (expected one of: {})", known.join(", ")))
}

fn rule(name: &str) -> Result<Rule> {
    let known: Vec<&str> = Rule::ALL.iter().map(|r| r.name()).collect();
    parse_name("rule", name, Rule::from_name, &known)
}

fn score_kind(name: &str) -> Result<ScoreKind> {
    let known: Vec<&str> = ScoreKind::ALL.iter().map(|k| k.name()).collect();
    parse_name("score kind", name, ScoreKind::from_name, &known)
}

fn metric(name: &str) -> Result<ElectionMetric> {
    let known: Vec<&str> = ElectionMetric::ALL.iter().map(|m| m.name()).collect();
    parse_name("metric", name, ElectionMetric::from_name, &known)
}

fn score_value(s: Score) -> String {
    match s {
        Score::Finite(v) => v.to_string(),
        Score::Infinite => "inf".to_owned(),
        Score::Above(b) => format!(">{b}"),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Winners { rule: name, file } => {
            let rule = rule(&name)?;
            let e = read_election(&file)?;
            for w in rule.winners(&e).names(&e) {
                writeln!(out, "{w}")?;
            }
        }
        Command::Score { kind, file, candidate } => {
            let kind = score_kind(&kind)?;
            let e = read_election(&file)?;
            let candidates: Vec<_> = match candidate {
                Some(name) => vec![e.candidate(&name).ok_or_else(|| anyhow!("no candidate named `{name}`"))?],
                None => e.candidates().collect(),
            };
            for c in candidates {
                writeln!(out, "{}\t{}", e.name(c), score_value(kind.score(&e, c)))?;
            }
        }
        Command::Distance { metric: name, first, second } => {
            let metric = metric(&name)?;
            let (a, b) = (read_election(&first)?, read_election(&second)?);
            writeln!(out, "{}", metric.distance(&a, &b))?;
        }
        Command::Rationalize {
            metric: name,
            file,
            max_added,
            max_profiles,
        } => {
            let metric = metric(&name)?;
            let e = read_election(&file)?;
            let budget = OracleBudget {
                max_added,
                max_profiles,
                ..OracleBudget::default()
            };
            match dr_winners_oracle(&e, metric, &budget) {
                Ok(w) => {
                    for c in w.winners {
                        writeln!(out, "{}", e.name(c))?;
                    }
                }
                Err(err) => {
                    writeln!(out, "inconclusive")?;
                    eprintln!("{err}");
                    return Ok(ExitCode::from(EXIT_INCONCLUSIVE));
                }
            }
        }
        Command::Reduce { graph, k, verify } => {
            let text = read_input(&graph)?;
            let g = VcInstance::from_dimacs(&text, k).with_context(|| format!("parsing {}", graph.display()))?;
            if g.num_vertices() > 30 {
                bail!("graphs above 30 vertices are not supported by the exact cover solver");
            }
            let r = restrict(&g);
            let re = build_election(&r)?;
            let cover = vc_exact(&g);
            let mut comments = re.role_comments(&r);
            comments.push(format!(
                "expected: minimum cover {cover} {} budget {k}, so p {} a replacement winner",
                if cover <= k { "<=" } else { ">" },
                if cover <= k { "is" } else { "is not" }
            ));
            if verify {
                let report = verify_reduction(&g).map_err(|f| anyhow!("reduction check failed: {f}"))?;
                comments.push("verified:".to_owned());
                comments.extend(report.to_string().lines().map(|l| format!("  {l}")));
            }
            write!(out, "{}", serialize_profile_with_comments(&re.election, &comments))?;
        }
        Command::Fixture { name } => {
            let e = fixtures::by_name(&name)
                .ok_or_else(|| anyhow!("unknown fixture `{name}` (expected one of: {})", fixtures::NAMES.join(", ")))?;
            write!(out, "{}", serialize_profile(&e))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err:#}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if let Err(err) = out.flush() {
        eprintln!("error: {err}");
        return ExitCode::from(EXIT_INPUT);
    }
    code
}
