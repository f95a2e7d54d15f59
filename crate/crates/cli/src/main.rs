//! Command-line front end for the split-quaternion quadratic solver.
//!
//! Exit codes: 0 ok, 1 input error, 2 empty/unsolvable (or failed check),
//! 3 companion polynomial identically zero.

use splitquat_cli::json;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use splitquat::algebra::scalar::{int, parse_scalar};
use splitquat::algebra::SplitQuaternion;
use splitquat::companion::{self, CompanionOutcome};
use splitquat::corpus;
use splitquat::solver::{self, Family, PureStatus, QuadEquation, SolutionSet};
use splitquat::verify::{self, GridSpec};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_EMPTY: u8 = 2;
const EXIT_INAPPLICABLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "splitquat",
    about = "Solve quadratic equations a x^2 + b x + c = 0 over the split quaternions \
             when the leading coefficient is a zero divisor",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an equation document and print the complete solution set.
    Solve {
        /// Path to a JSON document ("-" or omitted reads stdin).
        input: Option<PathBuf>,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
        /// For equations without a linear term: also list the square roots
        /// delivered by this witness (quaternion, e.g. "1" or "0,0,1,0").
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Evaluate semi-explicit families at these free coordinates
        /// "x2,x3" and list the resulting points.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Run the companion-polynomial route and print each divisor step.
    Companion {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check the solver output against the exhaustive grid oracle.
    Verify {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Grid as "lo:hi:step" (rationals), applied to all coordinates.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Samples drawn per family for the soundness side.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Run the built-in worked cases and print a pass/fail table.
    Corpus {
        #[arg(long)]
        json: bool,
        /// Run a single case id (e.g. 3.5).
        #[arg(long)]
        only: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve {
            input,
            json,
            y,
            params,
        } => cmd_solve(input, json, y, params),
        Command::Companion { input, json } => cmd_companion(input, json),
        Command::Verify {
            input,
            json,
            grid,
            samples,
        } => cmd_verify(input, json, grid, samples),
        Command::Corpus { json, only } => cmd_corpus(json, only),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

type CmdResult = Result<u8, String>;

fn read_document(input: Option<PathBuf>) -> Result<QuadEquation, String> {
    let raw = match input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        }
    };
    let value: Value = serde_json::from_str(&raw).map_err(|e| format!("invalid JSON: {e}"))?;
    json::equation_from_value(&value)
}

fn print_set_text(set: &SolutionSet) {
    if set.is_empty() {
        println!("no solutions");
        return;
    }
    if !set.points.is_empty() {
        println!("points:");
        for p in &set.points {
            match p {
                solver::SolutionPoint::Exact(q) => println!("  {q}"),
                solver::SolutionPoint::Approx(v) => println!(
                    "  {:.9} + {:.9} i + {:.9} j + {:.9} k  (float)",
                    v[0], v[1], v[2], v[3]
                ),
            }
        }
    }
    for f in &set.families {
        let (comps, constraints) = json::family_components(f);
        println!(
            "family [{}] in ({}):",
            f.shape_name(),
            f.param_names().join(", ")
        );
        for (name, comp) in ["x0", "x1", "x2", "x3"].iter().zip(&comps) {
            println!("  {name} = {comp}");
        }
        for c in &constraints {
            println!("  where {c}");
        }
    }
}

fn cmd_solve(
    input: Option<PathBuf>,
    as_json: bool,
    y: Option<String>,
    params: Option<String>,
) -> CmdResult {
    let eq = read_document(input)?;
    let set = solver::solve(&eq).map_err(|e| e.to_string())?;

    // optional witness oracle for the no-linear-term form
    let witness_roots = match y {
        None => None,
        Some(raw) => {
            let y: SplitQuaternion = raw
                .parse()
                .map_err(|_| format!("cannot parse witness quaternion {raw:?}"))?;
            let norm = solver::normalize(&eq.a, &eq.b, &eq.c).map_err(|e| e.to_string())?;
            if !norm.b.is_zero() {
                eprintln!("note: --y applies only when the linear term vanishes; ignored");
                None
            } else {
                match solver::solve_pure(&norm).map_err(|e| e.to_string())? {
                    PureStatus::Unsolvable => Some(SolutionSet::empty()),
                    PureStatus::Solvable(pq) => {
                        let mut roots = pq.roots_for(&y);
                        roots.translate_x0(&-norm.shift.clone());
                        Some(roots)
                    }
                }
            }
        }
    };

    // evaluation of semi-explicit families: at the given coordinates, or by
    // default at (1,1) plus a small grid
    let has_semi = set
        .families
        .iter()
        .any(|f| matches!(f, Family::SemiExplicit(_)));
    let assignments: Vec<(splitquat::Scalar, splitquat::Scalar)> = match &params {
        Some(raw) => {
            let parts: Vec<&str> = raw.split(',').collect();
            if parts.len() != 2 {
                return Err("--params expects \"x2,x3\"".into());
            }
            vec![(
                parse_scalar(parts[0]).map_err(|e| e.to_string())?,
                parse_scalar(parts[1]).map_err(|e| e.to_string())?,
            )]
        }
        None => {
            let mut grid = vec![(int(1), int(1))];
            for x2 in -1..=1 {
                for x3 in -1..=1 {
                    if (x2, x3) != (1, 1) {
                        grid.push((int(x2), int(x3)));
                    }
                }
            }
            grid
        }
    };
    let param_points = if params.is_some() || has_semi {
        let mut points = Vec::new();
        for f in &set.families {
            if let Family::SemiExplicit(s) = f {
                for (x2, x3) in &assignments {
                    if let Some(pts) = s.evaluate(x2, x3) {
                        points.extend(pts);
                    }
                }
            }
        }
        (params.is_some() || !points.is_empty()).then_some(points)
    } else {
        None
    };

    if as_json {
        let mut out = json!({
            "equation": json::equation_to_value(&eq),
            "solutions": json::set_to_value(&set),
        });
        if let Some(roots) = &witness_roots {
            out["witness_roots"] = json::set_to_value(roots);
        }
        if let Some(points) = &param_points {
            out["params_points"] = Value::Array(points.iter().map(json::point_to_value).collect());
        }
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        print_set_text(&set);
        if let Some(roots) = &witness_roots {
            println!("roots delivered by the witness:");
            print_set_text(roots);
        }
        if let Some(points) = &param_points {
            println!("semi-explicit family samples:");
            for p in points {
                match p {
                    solver::SolutionPoint::Exact(q) => println!("  {q}"),
                    solver::SolutionPoint::Approx(v) => println!(
                        "  {:.9} + {:.9} i + {:.9} j + {:.9} k  (float)",
                        v[0], v[1], v[2], v[3]
                    ),
                }
            }
        }
    }
    Ok(if set.is_empty() { EXIT_EMPTY } else { EXIT_OK })
}

fn cmd_companion(input: Option<PathBuf>, as_json: bool) -> CmdResult {
    let eq = read_document(input)?;
    match companion::solve_via_companion(&eq) {
        CompanionOutcome::Inapplicable => {
            if as_json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "equation": json::equation_to_value(&eq),
                        "inapplicable": true,
                        "reason": "companion polynomial identically zero",
                    }))
                    .unwrap()
                );
            } else {
                println!("companion polynomial identically zero");
            }
            Ok(EXIT_INAPPLICABLE)
        }
        CompanionOutcome::Solved(report) => {
            if as_json {
                let steps: Vec<Value> = report
                    .steps
                    .iter()
                    .map(|s| {
                        let mut v = json!({
                            "trace": json::real_to_value(&s.trace),
                            "norm": json::real_to_value(&s.norm),
                            "intersection": json::set_to_value(&s.contribution),
                        });
                        if let Some(lin) = &s.linear {
                            v["linear"] = json::linear_to_value(lin);
                        }
                        v
                    })
                    .collect();
                let out = json!({
                    "equation": json::equation_to_value(&eq),
                    "companion_poly": report.poly.to_string(),
                    "coefficients": report
                        .poly
                        .coeffs()
                        .iter()
                        .map(json::scalar_to_value)
                        .collect::<Vec<_>>(),
                    "divisors": steps,
                    "union": json::set_to_value(&report.union),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("companion polynomial: {}", report.poly);
                for s in &report.steps {
                    println!("divisor x^2 - ({}) x + ({}):", s.trace, s.norm);
                    match &s.linear {
                        Some(splitquat::LinearSolutionSet::Empty) => {
                            println!("  linear equation unsolvable")
                        }
                        Some(splitquat::LinearSolutionSet::Point(p)) => {
                            println!("  linear set: point {p}")
                        }
                        Some(splitquat::LinearSolutionSet::Affine { base, rank, .. }) => {
                            println!("  linear set: rank-{rank} affine set through {base}")
                        }
                        None => println!("  numeric divisor (direct reconstruction)"),
                    }
                    print_set_text(&s.contribution);
                }
                println!("union:");
                print_set_text(&report.union);
            }
            Ok(if report.union.is_empty() {
                EXIT_EMPTY
            } else {
                EXIT_OK
            })
        }
    }
}

fn parse_grid(raw: Option<String>) -> Result<GridSpec, String> {
    let Some(raw) = raw else {
        return Ok(GridSpec::standard());
    };
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err("--grid expects lo:hi:step".into());
    }
    let lo = parse_scalar(parts[0]).map_err(|e| e.to_string())?;
    let hi = parse_scalar(parts[1]).map_err(|e| e.to_string())?;
    let step = parse_scalar(parts[2]).map_err(|e| e.to_string())?;
    GridSpec::new([
        (lo.clone(), hi.clone(), step.clone()),
        (lo.clone(), hi.clone(), step.clone()),
        (lo.clone(), hi.clone(), step.clone()),
        (lo, hi, step),
    ])
    .map_err(|e| e.to_string())
}

fn cmd_verify(
    input: Option<PathBuf>,
    as_json: bool,
    grid: Option<String>,
    samples: usize,
) -> CmdResult {
    let eq = read_document(input)?;
    let grid = parse_grid(grid)?;
    let set = solver::solve(&eq).map_err(|e| e.to_string())?;
    let report =
        verify::check_solution_set(&eq, &set, &grid, samples).map_err(|e| e.to_string())?;
    if as_json {
        let out = json!({
            "equation": json::equation_to_value(&eq),
            "sound": report.sound,
            "complete": report.complete,
            "passed": report.passed(),
            "grid_points": grid.len(),
            "grid_hits": report.grid_hits,
            "samples_checked": report.samples_checked,
            "unsound": report.unsound,
            "missing": report
                .missing
                .iter()
                .map(json::quat_to_value)
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "soundness: {} ({} samples)",
            if report.sound { "ok" } else { "FAILED" },
            report.samples_checked
        );
        println!(
            "grid completeness: {} ({} roots on {} grid points)",
            if report.complete { "ok" } else { "FAILED" },
            report.grid_hits,
            grid.len()
        );
        for u in &report.unsound {
            println!("  unsound: {u}");
        }
        for m in &report.missing {
            println!("  missing: {m}");
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_EMPTY })
}

fn cmd_corpus(as_json: bool, only: Option<String>) -> CmdResult {
    let reports = match only {
        Some(id) => vec![corpus::run_case(&id).ok_or(format!("unknown case id {id}"))?],
        None => corpus::run_all(),
    };
    let all_pass = reports.iter().all(|r| r.passed);
    if as_json {
        let out: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "details": r.details,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "cases": out, "passed": all_pass })).unwrap()
        );
    } else {
        println!("{:<6} {:<8} title", "case", "status");
        for r in &reports {
            println!(
                "{:<6} {:<8} {}",
                r.id,
                if r.passed { "pass" } else { "FAIL" },
                r.title
            );
            if !r.passed {
                for d in &r.details {
                    println!("       {d}");
                }
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_EMPTY })
}
