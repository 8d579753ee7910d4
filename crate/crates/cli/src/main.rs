use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use gm_core::census::{builtin_catalogue, count_index_subgroups, hom_census, Budget, DEFAULT_BUDGET};
use gm_core::decider::{check_homeomorphic, check_profinite_iso, Verdict};
use gm_core::genus::profinite_genus;
use gm_core::invariants::{fiber_flip, twist_move, TwistTarget};
use gm_core::model::{mirror, validate, EndSide, GraphManifold};
use gm_core::presentation::build_presentation;
use gm_cli::document::{decode_manifold, manifold_to_value, parse_manifold};
use gm_cli::report::{census_report, genus_report, homeo_report, info_report, validation_report, verdict_report};
use gm_cli::{format_presentation, render, Format};
use num_bigint::BigInt;
use serde_json::Value;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT: u8 = 2;
const RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "gmtool", version, about = "Homeomorphism and profinite equivalence for graph manifolds")]
struct Cli {
    /// Suppress report output; the exit code still carries the result.
    #[arg(long, global = true)]
    quiet: bool,
    /// Search node budget for each census count.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Homeo,
    Profinite,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document against the structural rules.
    Validate { file: PathBuf },
    /// Slopes, Euler characteristics and bipartition.
    Info {
        file: PathBuf,
        /// Add a residually-p column for this prime.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Decide homeomorphism or profinite equivalence.
    Compare {
        #[arg(long, value_enum, default_value_t = Mode::Profinite)]
        mode: Mode,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Representatives of the profinite genus.
    Genus { file: PathBuf },
    /// Finite quotient counts.
    Census {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_index: usize,
    },
    /// Apply fibre flips, twists and mirroring; prints the new document.
    #[command(group(ArgGroup::new("move").required(true).multiple(true).args(["flip", "twist", "mirror"])))]
    Moves {
        file: PathBuf,
        /// Vertex whose fibre is reversed.
        #[arg(long)]
        flip: Vec<String>,
        /// VERTEX:TARGET:TARGET:K with targets `cI` (cone I) or `EDGE@from` / `EDGE@to`.
        #[arg(long)]
        twist: Vec<String>,
        #[arg(long)]
        mirror: bool,
    },
    /// Presentation of the fundamental group in line format.
    Presentation { file: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: INPUT, message: message.into() }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| input_error(format!("IO: stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| input_error(format!("IO: {}: {e}", path.display())))
    }
}

fn load(path: &PathBuf) -> Result<GraphManifold, Failure> {
    parse_manifold(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn parse_target(s: &str) -> Result<TwistTarget, Failure> {
    if let Some((edge, side)) = s.rsplit_once('@') {
        let side = match side {
            "from" => EndSide::From,
            "to" => EndSide::To,
            _ => return Err(input_error(format!("bad edge end {s:?}"))),
        };
        return Ok(TwistTarget::EdgeEnd { edge: edge.into(), side });
    }
    s.strip_prefix('c')
        .and_then(|i| i.parse().ok())
        .map(TwistTarget::Cone)
        .ok_or_else(|| input_error(format!("bad twist target {s:?}")))
}

fn apply_twist(m: &GraphManifold, spec: &str) -> Result<GraphManifold, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [v, a, b, k] = parts[..] else {
        return Err(input_error(format!("twist {spec:?}: expected VERTEX:TARGET:TARGET:K")));
    };
    let k: BigInt = k.parse().map_err(|_| input_error(format!("twist {spec:?}: bad integer {k:?}")))?;
    twist_move(m, v, &parse_target(a)?, &parse_target(b)?, &k).map_err(|e| input_error(format!("twist {spec:?}: {e}")))
}

fn run(cli: &Cli) -> Result<(Value, u8), Failure> {
    let budget = Budget { nodes: cli.budget };
    let resource = |e: &dyn std::fmt::Display| Failure { code: RESOURCE, message: e.to_string() };
    match &cli.command {
        Command::Validate { file } => {
            let m = decode_manifold(&read(file)?).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            let r = validate(&m);
            Ok((validation_report(&r), if r.ok { OK } else { NEGATIVE }))
        }
        Command::Info { file, prime } => {
            if prime.is_some_and(|p| p < 2) {
                return Err(input_error("--prime must be at least 2"));
            }
            Ok((info_report(&load(file)?, *prime), OK))
        }
        Command::Compare { mode, file1, file2 } => {
            let (a, b) = (load(file1)?, load(file2)?);
            match mode {
                Mode::Homeo => {
                    let w = check_homeomorphic(&a, &b);
                    let code = if w.is_some() { OK } else { NEGATIVE };
                    Ok((homeo_report(&a, &b, w.as_ref()), code))
                }
                Mode::Profinite => {
                    let v = check_profinite_iso(&a, &b).map_err(|e| resource(&e))?;
                    let code = if matches!(v, Verdict::Distinct) { NEGATIVE } else { OK };
                    Ok((verdict_report(&a, &b, &v), code))
                }
            }
        }
        Command::Genus { file } => {
            let m = load(file)?;
            let g = profinite_genus(&m).map_err(|e| resource(&e))?;
            Ok((genus_report(&m, &g), if g.rigid { OK } else { NEGATIVE }))
        }
        Command::Census { file, groups, max_index } => {
            let m = load(file)?;
            let mut catalogue = builtin_catalogue();
            if !groups.is_empty() {
                if let Some(g) = groups.iter().find(|g| !catalogue.iter().any(|s| &s.name == *g)) {
                    return Err(input_error(format!("unknown group {g:?}")));
                }
                catalogue.retain(|s| groups.contains(&s.name));
            }
            let census = hom_census(&m, &catalogue, budget);
            let p = build_presentation(&m);
            let subgroups: Vec<_> = (1..=*max_index).map(|n| (n, count_index_subgroups(&p, n, budget))).collect();
            let exhausted =
                census.entries.iter().any(|e| e.count.is_err()) || subgroups.iter().any(|(_, c)| c.is_err());
            Ok((census_report(&m, &census, &subgroups), if exhausted { RESOURCE } else { OK }))
        }
        Command::Moves { file, flip, twist, mirror: mirrored } => {
            let mut m = load(file)?;
            for v in flip {
                if !m.vertices.contains_key(v) {
                    return Err(input_error(format!("unknown vertex {v:?}")));
                }
                m = fiber_flip(&m, v);
            }
            for t in twist {
                m = apply_twist(&m, t)?;
            }
            if *mirrored {
                m = mirror(&m);
            }
            Ok((manifold_to_value(&m), OK))
        }
        Command::Presentation { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let outcome = match &cli.command {
        Command::Presentation { file } => load(file).map(|m| (format_presentation(&build_presentation(&m)), OK)),
        _ => run(&cli).map(|(v, code)| (render(&v, format) + "\n", code)),
    };
    match outcome {
        Ok((text, code)) => {
            if !cli.quiet {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("gmtool: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
