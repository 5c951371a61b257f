//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use multilayer_order::pattern::{
    enumerate_ideals, enumerate_patterns_capped, ideal_witnesses, parse_pattern, realize,
    IdealDefinition, PatternSpace, ENUMERATION_CAP,
};
use multilayer_order::poset::props::check_map_props;
use multilayer_order::{ExceptionMap, Layer};
use serde_json::json;

use crate::dot::hasse_dot;
use crate::formats::{layer_to_json, layers_to_json, parse_layer, parse_poset, PosetFile};
use crate::suites::{self, Suite};

const ABOUT: &str = "Concatenation patterns of colored multigraph layers.

Patterns are written with `.` for the merge ⊙ and `*` for the juxtaposition ⊗;
`.` binds tighter, so `1.2*3` is G1⊙G2⊗G3. Indices name positions in the
fixed list of k layers.";

#[derive(Debug, Parser)]
#[command(name = "mlorder", version, about = ABOUT)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Closed under defined joins.
    V1,
    /// Down-closed and upward directed.
    V2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every pattern over k layers as JSON.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Hasse diagram of the pattern poset.
    Hasse {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two patterns: LESS, GREATER, EQUAL or INCOMPARABLE.
    Order {
        x: String,
        y: String,
        /// Number of layers; defaults to the largest index used.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a law suite and write a JSON report. Exits with 1 on any violation.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Overrides the largest k allowed for the suite.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate ideals, or test one set with --set.
    Ideals {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        k: usize,
        /// Comma-separated patterns to test instead of enumerating.
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Merge layer files with ⊙.
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a pattern to k layer files: one merged layer per block.
    Realize {
        pattern: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Load a poset file and classify an exception map on it.
    Poset {
        file: PathBuf,
        /// Exception pairs as `a:b,a:b` (element indices).
        #[arg(long, default_value = "")]
        map: String,
    },
    /// Write a seeded random layer.
    RandomLayer {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_layer(path: &Path) -> anyhow::Result<Layer> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_layer(&text).with_context(|| format!("in {}", path.display()))
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_pairs(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (a, b) = s.split_once(':').context("pairs are written a:b")?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

/// Runs the command. `Ok(false)` means a check found violations.
pub fn execute(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Enumerate { k, cap, out } => {
            let patterns = enumerate_patterns_capped(k, cap)?;
            let body = json!({ "k": k, "count": patterns.len(), "patterns": patterns });
            emit(&pretty(&body), out.as_deref())?;
        }
        Command::Hasse { k, format, cap, out } => {
            let space = PatternSpace::with_cap(k, cap)?;
            let text = match format {
                Format::Dot => hasse_dot(&space),
                Format::Json => {
                    let names = space.patterns().iter().map(ToString::to_string).collect();
                    let mut s = serde_json::to_string_pretty(&PosetFile::from_poset(space.poset(), names))?;
                    s.push('\n');
                    s
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Order { x, y, k } => {
            let px = parse_pattern(&x, k).with_context(|| format!("pattern {x:?}"))?;
            let k = k.unwrap_or(px.k());
            let py = parse_pattern(&y, Some(k)).with_context(|| format!("pattern {y:?}"))?;
            println!("{}", px.compare(&py)?);
        }
        Command::Check { suite, k, seed, cap, out } => {
            let report = suites::run(suite, k, seed, cap)?;
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            emit(&text, out.as_deref())?;
            return Ok(report.passed);
        }
        Command::Ideals { which, k, set, out } => {
            let def = match which {
                Which::V1 => IdealDefinition::JoinClosed,
                Which::V2 => IdealDefinition::DownDirected,
            };
            match set {
                Some(set) => {
                    let members = set
                        .split(',')
                        .map(|t| parse_pattern(t, Some(k)).with_context(|| format!("pattern {t:?}")))
                        .collect::<anyhow::Result<Vec<_>>>()?;
                    let witnesses = ideal_witnesses(&members, def)?;
                    let body = json!({ "isIdeal": witnesses.is_empty(), "witnesses": witnesses });
                    emit(&pretty(&body), out.as_deref())?;
                }
                None => {
                    let ideals = enumerate_ideals(k, def)?;
                    let body = json!({ "k": k, "count": ideals.len(), "ideals": ideals });
                    emit(&pretty(&body), out.as_deref())?;
                }
            }
        }
        Command::Merge { files, out } => {
            let mut layers = files.iter().map(|f| read_layer(f));
            let mut acc = layers.next().expect("at least one file")?;
            for l in layers {
                acc = acc.merge(&l?)?;
            }
            emit(&layer_to_json(&acc), out.as_deref())?;
        }
        Command::Realize { pattern, files, out } => {
            let p = parse_pattern(&pattern, Some(files.len()))
                .with_context(|| format!("pattern {pattern:?} over {} layers", files.len()))?;
            let layers = files.iter().map(|f| read_layer(f)).collect::<anyhow::Result<Vec<_>>>()?;
            emit(&layers_to_json(&realize(&p, &layers)?), out.as_deref())?;
        }
        Command::Poset { file, map } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let p = parse_poset(&text)?;
            let f = ExceptionMap::new(p.len(), parse_pairs(&map)?)?;
            let props: Vec<_> = check_map_props(&p, &f)
                .into_iter()
                .map(|(prop, o)| json!({ "prop": prop.name(), "hypothesis": o.hypothesis, "conclusion": o.conclusion }))
                .collect();
            let body = json!({
                "elements": p.len(),
                "hasse": p.hasse_edges(),
                "bottom": p.bottom(),
                "top": p.top(),
                "monotone": f.is_monotone(&p),
                "strictlyMonotone": f.is_strictly_monotone(&p),
                "interior": f.is_interior(&p),
                "closure": f.is_closure(&p),
                "props": props,
            });
            print!("{}", pretty(&body));
        }
        Command::RandomLayer { seed, out } => {
            let layer = crate::random::random_layer(&mut crate::random::rng(seed), &crate::random::universe());
            emit(&layer_to_json(&layer), out.as_deref())?;
        }
    }
    Ok(true)
}

/// Exit codes: 0 success, 1 violation found, 2 usage or input error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
