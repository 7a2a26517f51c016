use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use matsemi::cones::{self, dual, extreme_rays, properness};
use matsemi::diagsim::diag_sim_nonneg;
use matsemi::harness::{self, sign_search_oracle, subset_invariance_oracle};
use matsemi::io::{cone_from_json, cone_to_value, generators_from_json, matrix_from_json};
use matsemi::semigroup::{algebra_dimension, generate_closure};
use matsemi::spectral::{self, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use matsemi::structure::classify_decomposability;
use matsemi::{Caps, Cone, Matrix};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "matsemi",
    version,
    about = "Diagonal similarity, cones and matrix semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entry signs, rank, zero-pattern decomposition and diagonal similarity of one matrix.
    Analyze { matrix: PathBuf },
    /// Polyhedral cone queries.
    Cone {
        op: ConeOp,
        rays: PathBuf,
        /// Matrix for the `invariant` query.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Semigroup generated by a set of matrices, up to positive scaling.
    Closure {
        generators: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Burnside irreducibility of a generator set.
    Irreducible { generators: PathBuf },
    /// Perron root and vectors of a nonnegative matrix.
    Perron {
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
        max_iters: usize,
    },
    /// Checks a theorem's hypotheses on a generator set and tests its conclusion.
    Verify {
        theorem: Theorem,
        generators: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Runs the built-in worked examples.
    Fixtures {
        #[arg(long)]
        filter: Option<String>,
        /// Only print the names of the fixtures.
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive reference searches.
    Oracle { kind: OracleKind, input: PathBuf },
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, default_value_t = Caps::default().max_elements)]
    max_elements: usize,
    #[arg(long, default_value_t = Caps::default().max_word_length)]
    max_word_length: usize,
}

impl From<&CapArgs> for Caps {
    fn from(c: &CapArgs) -> Self {
        Caps {
            max_elements: c.max_elements,
            max_word_length: c.max_word_length,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConeOp {
    Dual,
    Extreme,
    Proper,
    Invariant,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Group,
    Semigroup,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Signs,
    Subsets,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse<T>(path: &Path, f: fn(&str) -> matsemi::Result<T>) -> Result<T> {
    f(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_matrix(path: &Path) -> Result<Matrix> {
    parse(path, matrix_from_json)
}

fn load_generators(path: &Path) -> Result<Vec<Matrix>> {
    parse(path, generators_from_json)
}

fn load_cone(path: &Path) -> Result<Cone> {
    parse(path, cone_from_json)
}

/// A generator file or a bare matrix.
fn load_collection(path: &Path) -> Result<Vec<Matrix>> {
    load_generators(path).or_else(|_| Ok(vec![load_matrix(path)?]))
}

fn analyze(m: &Matrix) -> Result<Value> {
    let n = m.require_square()?;
    let decomposition = classify_decomposability(m)?;
    let witness = diag_sim_nonneg(m)?;
    let mut out = json!({
        "order": n,
        "rank": m.rank(),
        "entries": m.classify_entries(),
        "decomposition": decomposition,
        "diagonally_similar_to_nonnegative": witness.is_some(),
        "witness": witness,
    });
    if m.is_real() && m.is_nonnegative() {
        out["primitive"] = json!(spectral::is_primitive(m)?);
    }
    if m.rank() == 1 {
        let (x, y) = m.rank_one_factor()?;
        out["rank_one_factor"] = json!({ "x": x, "y": y });
    }
    Ok(out)
}

fn cone_query(op: ConeOp, k: &Cone, matrix: Option<&Path>) -> Result<Value> {
    Ok(match op {
        ConeOp::Dual => cone_to_value(&dual(k)),
        ConeOp::Extreme => cone_to_value(&Cone::from_rays(k.dim(), extreme_rays(k)?)),
        ConeOp::Proper => json!(properness(k)),
        ConeOp::Invariant => {
            let path = matrix.context("`cone invariant` needs --matrix")?;
            json!({ "invariant": cones::is_invariant(&load_matrix(path)?, k)? })
        }
    })
}

fn run(cli: Cli) -> Result<(Value, bool)> {
    let ok = |v: Value| Ok((v, true));
    match cli.command {
        Command::Analyze { matrix } => ok(analyze(&load_matrix(&matrix)?)?),
        Command::Cone { op, rays, matrix } => {
            ok(cone_query(op, &load_cone(&rays)?, matrix.as_deref())?)
        }
        Command::Closure { generators, caps } => {
            let c = generate_closure(&load_generators(&generators)?, (&caps).into())?;
            ok(json!({
                "size": c.len(),
                "truncated": c.truncated,
                "caps": c.caps,
                "elements": c.elements,
            }))
        }
        Command::Irreducible { generators } => {
            let gens = load_generators(&generators)?;
            let n = gens.first().map_or(0, Matrix::rows);
            let dim = algebra_dimension(&gens)?;
            ok(
                json!({ "irreducible": n >= 2 && dim == n * n, "algebra_dimension": dim, "order": n }),
            )
        }
        Command::Perron {
            matrix,
            tol,
            max_iters,
        } => ok(json!(spectral::perron(
            &load_matrix(&matrix)?,
            tol,
            max_iters
        )?)),
        Command::Verify {
            theorem,
            generators,
            caps,
        } => {
            let gens = load_generators(&generators)?;
            let report = match theorem {
                Theorem::Group => harness::verify_group_theorem(&gens, (&caps).into())?,
                Theorem::Semigroup => harness::verify_semigroup_theorem(&gens, (&caps).into())?,
            };
            let falsified = report.falsified();
            Ok((json!(report), !falsified))
        }
        Command::Fixtures { filter, list } => {
            if list {
                return ok(json!(harness::fixtures::fixture_names()));
            }
            let summary = harness::run_fixtures(filter.as_deref());
            let passed = summary.all_passed();
            Ok((json!(summary), passed))
        }
        Command::Oracle { kind, input } => match kind {
            OracleKind::Signs => {
                let found = sign_search_oracle(&load_collection(&input)?)?;
                ok(json!({
                    "feasible": found.is_some(),
                    "signs": found.as_ref().map(|s| s.signs().to_vec()),
                }))
            }
            OracleKind::Subsets => ok(json!(subset_invariance_oracle(&load_matrix(&input)?)?)),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((value, passed)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("json output")
            );
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
