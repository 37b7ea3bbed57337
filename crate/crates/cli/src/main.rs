//! Command-line front end for the exact semilinear CSP toolkit.
//!
//! Subcommands: `solve`, `hull`, `opt`, `cone`, `analyze`, `reduce-nae`,
//! `rescale`, `oracle`. Output is line-oriented and deterministic.
//! Exit codes: 0 yes/success, 1 no/unsatisfiable, 2 usage or parse
//! error, 3 precondition error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semilin_core::analysis::{language_report, syntactic_cone};
use semilin_core::consistency::{
    affine_consistency, parse_instance, parse_nae, reduce_nae, CspInstance,
};
use semilin_core::error::Error;
use semilin_core::hull::{alg2_hull, subspace_constraints, RowSource};
use semilin_core::integer::{scale_to_integer, solve_with_integrality};
use semilin_core::numeric::{AffineSubspace, QVec, Rational};
use semilin_core::optimize::{direct_route_applies, opt_affine, opt_direct, OptAnswer};
use semilin_core::relation::{
    builtin_relations, format_constraint, format_rational, parse_relations, SemilinearRelation,
};

#[derive(Parser)]
#[command(
    name = "semilin",
    about = "Exact constraint satisfaction, optimisation, and integer solving over semilinear relations on the rationals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Auto,
    Direct,
    Affine,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance by affine consistency.
    Solve {
        /// Instance file (.csp).
        file: PathBuf,
        /// Also require integer values on the instance's `int` variables.
        #[arg(long)]
        int: bool,
        /// Print one line per hull application.
        #[arg(long)]
        trace: bool,
    },
    /// Affine hull of a relation (against the full space).
    Hull {
        /// Relation file (.rel).
        file: PathBuf,
        /// Relation name to use; defaults to the first in the file.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Maximise the instance objective over the solution set.
    Opt {
        /// Instance file (.csp) with a `maximize` statement.
        file: PathBuf,
        /// Route selection; `auto` prefers the direct LP route.
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// Print the syntactic cone of a relation.
    Cone {
        /// Relation file (.rel).
        file: PathBuf,
        /// Relation name to use; defaults to the first in the file.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Language report with optional unary probes.
    Analyze {
        /// Relation file (.rel) listing the language.
        file: PathBuf,
        /// Names of arity-1 relations in the file to probe.
        #[arg(long = "probe")]
        probes: Vec<String>,
    },
    /// Reduce a NAE-3SAT instance to a CSP instance.
    #[command(name = "reduce-nae")]
    ReduceNae {
        /// NAE file (.nae).
        file: PathBuf,
        /// Relation file providing the unary gadget relation.
        #[arg(long)]
        gadget: PathBuf,
        /// Gadget relation name; defaults to the first in the file.
        #[arg(long)]
        gadget_name: Option<String>,
        /// Write the instance here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Scale a rational solution to an integral one.
    Rescale {
        /// Instance file (.csp).
        file: PathBuf,
        /// Solution file: one rational per line.
        #[arg(long)]
        solution: PathBuf,
    },
    /// Exact solution-set hull by disjunct expansion (test support).
    Oracle {
        /// Instance file (.csp).
        file: PathBuf,
        /// Cap on the product of disjunct counts.
        #[arg(long, default_value_t = semilin_core::consistency::DEFAULT_ORACLE_CAP)]
        oracle_cap: u128,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::UnknownRelation(_)
        | Error::ArityMismatch(_)
        | Error::Shape => 2,
        _ => 3,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            code: exit_code_for(&err),
            message: err.to_string(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {}", path.display(), e),
    })
}

fn load_instance(path: &Path) -> Result<CspInstance, Failure> {
    Ok(parse_instance(&read_file(path)?)?)
}

/// Relations from a file plus the built-ins (file definitions shadow).
fn load_relations(path: &Path) -> Result<Vec<SemilinearRelation>, Failure> {
    let mut rels = parse_relations(&read_file(path)?)?;
    for b in builtin_relations() {
        if !rels.iter().any(|r| r.name() == b.name()) {
            rels.push(b);
        }
    }
    Ok(rels)
}

fn pick_relation<'a>(
    rels: &'a [SemilinearRelation],
    name: &Option<String>,
) -> Result<&'a SemilinearRelation, Failure> {
    match name {
        None => rels.first().ok_or(Failure {
            code: 2,
            message: "relation file is empty".to_string(),
        }),
        Some(n) => rels.iter().find(|r| r.name() == n).ok_or_else(|| Failure {
            code: 2,
            message: format!("relation `{}` not found in file", n),
        }),
    }
}

fn print_subspace(a: &AffineSubspace) {
    println!("dim {}", a.dim());
    for c in subspace_constraints(a) {
        println!("eq {}", format_constraint(&c));
    }
}

fn parse_solution_file(text: &str) -> Result<QVec, Failure> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let q: Rational = parse_rational_str(line).ok_or(Failure {
            code: 2,
            message: format!("solution line {}: expected a rational, got `{}`", i + 1, line),
        })?;
        out.push(q);
    }
    Ok(out)
}

fn parse_rational_str(s: &str) -> Option<Rational> {
    let mut parts = s.splitn(2, '/');
    let numer: num_bigint::BigInt = parts.next()?.trim().parse().ok()?;
    match parts.next() {
        None => Some(Rational::from_integer(numer)),
        Some(d) => {
            let denom: num_bigint::BigInt = d.trim().parse().ok()?;
            if denom <= 0.into() {
                None
            } else {
                Some(Rational::new(numer, denom))
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve { file, int, trace } => {
            let inst = load_instance(&file)?;
            if int {
                let yes = solve_with_integrality(&inst)?;
                println!("{}", if yes { "YES" } else { "NO" });
                return Ok(if yes { 0 } else { 1 });
            }
            let (answer, t) = affine_consistency(&inst)?;
            if trace {
                for (k, step) in t.steps.iter().enumerate() {
                    println!(
                        "step {} constraint {} dim {} -> {}",
                        k,
                        step.constraint,
                        step.before.dim(),
                        step.after.dim()
                    );
                }
            }
            println!("{}", if answer { "YES" } else { "NO" });
            print_subspace(&t.final_subspace);
            Ok(if answer { 0 } else { 1 })
        }
        Command::Hull { file, relation } => {
            let rels = load_relations(&file)?;
            let rel = pick_relation(&rels, &relation)?;
            let full = AffineSubspace::full(rel.arity());
            let res = alg2_hull(rel, &full);
            println!("relation {}", rel.name());
            match res.chosen_disjunct {
                None => println!("empty"),
                Some(d) => println!("disjunct {}", d),
            }
            print_subspace(&res.hull);
            println!("retained {}", res.retained.len());
            for row in &res.retained {
                let origin = match row.source {
                    RowSource::Relation { disjunct, row } => {
                        format!("disjunct {} row {}", disjunct, row)
                    }
                    RowSource::Subspace { row } => format!("subspace row {}", row),
                };
                println!("row {}: {}", origin, format_constraint(&row.constraint));
            }
            if res.union_span != res.hull {
                println!("union dim {}", res.union_span.dim());
            }
            Ok(0)
        }
        Command::Opt { file, route } => {
            let inst = load_instance(&file)?;
            let use_direct = match route {
                Route::Direct => true,
                Route::Affine => false,
                Route::Auto => direct_route_applies(&inst),
            };
            let answer = if use_direct {
                println!("route direct");
                opt_direct(&inst)?
            } else {
                println!("route affine (exact when the language closure has no bnu)");
                opt_affine(&inst)?
            };
            match answer {
                OptAnswer::Unsatisfiable => {
                    println!("UNSATISFIABLE");
                    Ok(1)
                }
                OptAnswer::Unbounded => {
                    println!("UNBOUNDED");
                    Ok(0)
                }
                OptAnswer::Optimum { value, witness } => {
                    println!("OPTIMUM {}", format_rational(&value));
                    if let Some(w) = witness {
                        let parts: Vec<String> = w.iter().map(format_rational).collect();
                        println!("witness {}", parts.join(" "));
                    }
                    Ok(0)
                }
                OptAnswer::Approaches { value } => {
                    println!("APPROACHES {}", format_rational(&value));
                    Ok(0)
                }
            }
        }
        Command::Cone { file, relation } => {
            let rels = load_relations(&file)?;
            let rel = pick_relation(&rels, &relation)?;
            println!("{}", syntactic_cone(rel).to_grammar());
            Ok(0)
        }
        Command::Analyze { file, probes } => {
            let rels = parse_relations(&read_file(&file)?)?;
            let mut probe_rels = Vec::new();
            for name in &probes {
                let rel = rels
                    .iter()
                    .find(|r| r.name() == name)
                    .ok_or_else(|| Failure {
                        code: 2,
                        message: format!("probe `{}` not found in file", name),
                    })?;
                probe_rels.push(rel.clone());
            }
            let report = language_report(&rels, &probe_rels)?;
            print!("{}", report.to_text());
            Ok(0)
        }
        Command::ReduceNae {
            file,
            gadget,
            gadget_name,
            output,
        } => {
            let nae = parse_nae(&read_file(&file)?)?;
            let gadget_rels = parse_relations(&read_file(&gadget)?)?;
            let t = pick_relation(&gadget_rels, &gadget_name)?;
            let inst = reduce_nae(&nae, t)?;
            let text = inst.to_grammar();
            match output {
                None => print!("{}", text),
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| Failure {
                        code: 2,
                        message: format!("cannot write {}: {}", path.display(), e),
                    })?;
                    println!("wrote {}", path.display());
                }
            }
            Ok(0)
        }
        Command::Rescale { file, solution } => {
            let inst = load_instance(&file)?;
            let s = parse_solution_file(&read_file(&solution)?)?;
            let scaled = scale_to_integer(&inst, &s)?;
            for q in &scaled {
                println!("{}", format_rational(q));
            }
            Ok(0)
        }
        Command::Oracle { file, oracle_cap } => {
            let inst = load_instance(&file)?;
            let hull = semilin_core::consistency::expansion_oracle(&inst, oracle_cap)?;
            print_subspace(&hull);
            Ok(if hull.is_empty() { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
