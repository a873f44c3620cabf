//! Command-line driver: closed-form values, solver cross-checks, extremal
//! colorings, coloring validation, certificate replay, and reproducible
//! sweeps.
//!
//! Exit codes: 0 success/valid/agree, 1 mismatch/invalid/failed certificate,
//! 2 usage or parse error, 3 cap exceeded.

mod render;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rado_core::certificates::certify_upper_bound;
use rado_core::coloring::{parse_discrete, validate_discrete, write_discrete};
use rado_core::equation::RadoResult;
use rado_core::extremal::{
    lower_bound_coloring_continuous, lower_bound_coloring_discrete, parity_coloring,
    LowerBoundRecipe,
};
use rado_core::formulas::{branch_of, rado_formula_continuous, rado_formula_discrete, Branch};
use rado_core::intervals::{parse_interval, validate_interval, write_interval};
use rado_core::rational::{parse_rational, rat_u32, to_u32, Rational};
use rado_core::search::min_rado_discrete;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rado",
    about = "Two-color off-diagonal Rado numbers for x+y+c=z (red) and x+y+k=z (blue)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Rado number; --verify cross-checks with the solver
    Compute {
        #[arg(long)]
        c: String,
        #[arg(long)]
        k: String,
        /// Left endpoint of the continuous setting; omit for the discrete one
        #[arg(long)]
        alpha: Option<String>,
        /// Recompute the discrete value with the backtracking solver
        #[arg(long)]
        verify: bool,
        /// Largest n the solver may scan (default 40)
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Formula, solver, lower bound, and certificate over a (c, k) grid; CSV out
    Sweep {
        #[arg(long = "c-max")]
        c_max: u32,
        #[arg(long = "k-max")]
        k_max: u32,
        #[arg(long, default_value_t = 40)]
        cap: u32,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (overrides RADO_JOBS; default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Replay the bundled upper-bound certificate at (c, k[, alpha])
    Certify {
        #[arg(long)]
        c: String,
        #[arg(long)]
        k: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Validate a coloring file (discrete or continuous format)
    CheckColoring {
        #[arg(long)]
        file: PathBuf,
        /// Cross-check against the c recorded in the file header
        #[arg(long)]
        c: Option<String>,
        /// Cross-check against the k recorded in the file header
        #[arg(long)]
        k: Option<String>,
    },
    /// Write an extremal coloring to a file
    ExportColoring {
        #[arg(long)]
        c: String,
        #[arg(long)]
        k: String,
        /// Produce the continuous interval coloring for this left endpoint
        #[arg(long)]
        alpha: Option<String>,
        /// Range size for the parity coloring (different-parity pairs only)
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure that already knows its exit code.
struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<rado_core::RadoError> for CmdError {
    fn from(err: rado_core::RadoError) -> Self {
        CmdError::usage(err.to_string())
    }
}

impl From<std::io::Error> for CmdError {
    fn from(err: std::io::Error) -> Self {
        CmdError { code: EXIT_USAGE, message: format!("io error: {err}") }
    }
}

fn parse_flag_rational(name: &str, text: &str) -> Result<Rational, CmdError> {
    parse_rational(text).map_err(|e| CmdError::usage(format!("--{name}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { c, k, alpha, verify, cap } => cmd_compute(&c, &k, alpha.as_deref(), verify, cap),
        Command::Sweep { c_max, k_max, cap, out, jobs } => sweep::cmd_sweep(c_max, k_max, cap, &out, jobs),
        Command::Certify { c, k, alpha } => cmd_certify(&c, &k, alpha.as_deref()),
        Command::CheckColoring { file, c, k } => cmd_check_coloring(&file, c.as_deref(), k.as_deref()),
        Command::ExportColoring { c, k, alpha, n, out } => cmd_export_coloring(&c, &k, alpha.as_deref(), n, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn cmd_compute(
    c_text: &str,
    k_text: &str,
    alpha_text: Option<&str>,
    verify: bool,
    cap: Option<u32>,
) -> Result<u8, CmdError> {
    let c = parse_flag_rational("c", c_text)?;
    let k = parse_flag_rational("k", k_text)?;

    if let Some(alpha_text) = alpha_text {
        if verify {
            return Err(CmdError::usage("--verify applies to the discrete setting only"));
        }
        let alpha = parse_flag_rational("alpha", alpha_text)?;
        let branch = branch_of(&c, &k)?;
        let value = rado_formula_continuous(&c, &k, &alpha)?;
        println!("setting: continuous on [{alpha}, N]");
        println!("branch: {branch}");
        println!("formula: {}", value.result);
        if value.parity_indeterminate {
            println!("note: parity-indeterminate (c and k are not both integers; the infinite case is undefined for them)");
        }
        return Ok(EXIT_OK);
    }

    let (ci, ki) = match (to_u32(&c), to_u32(&k)) {
        (Some(ci), Some(ki)) => (ci, ki),
        _ => {
            return Err(CmdError::usage(
                "the discrete setting needs integer c and k; pass --alpha for the continuous one",
            ))
        }
    };
    let branch = branch_of(&c, &k)?;
    let formula = rado_formula_discrete(ci, ki)?;
    println!("setting: discrete on [1, N]");
    println!("branch: {branch}");
    println!("formula: {formula}");

    if !verify {
        return Ok(EXIT_OK);
    }
    let cap = cap.unwrap_or(40);
    let search = min_rado_discrete(ci, ki, cap).map_err(|e| CmdError {
        code: EXIT_CAP,
        message: e.to_string(),
    })?;
    println!("search (cap {cap}): {search}");
    match (&formula, &search) {
        (RadoResult::Finite(f), RadoResult::Finite(s)) if f == s => {
            println!("verdict: AGREE");
            Ok(EXIT_OK)
        }
        (RadoResult::Finite(_), RadoResult::Finite(_)) => {
            println!("verdict: MISMATCH");
            Ok(EXIT_FAIL)
        }
        (RadoResult::Infinite, RadoResult::ExceededCap(_)) => {
            println!("verdict: CONSISTENT (formula predicts infinite; search exhausted its cap)");
            Ok(EXIT_CAP)
        }
        (RadoResult::Finite(_), RadoResult::ExceededCap(_)) => {
            println!("verdict: INCONCLUSIVE (cap below the formula value)");
            Ok(EXIT_CAP)
        }
        (RadoResult::Infinite, RadoResult::Finite(_)) => {
            println!("verdict: MISMATCH (search found a finite value for a parity-infinite pair)");
            Ok(EXIT_FAIL)
        }
        _ => Ok(EXIT_FAIL),
    }
}

fn cmd_certify(c_text: &str, k_text: &str, alpha_text: Option<&str>) -> Result<u8, CmdError> {
    let c = parse_flag_rational("c", c_text)?;
    let k = parse_flag_rational("k", k_text)?;
    let alpha = alpha_text
        .map(|t| parse_flag_rational("alpha", t))
        .transpose()?;
    if branch_of(&c, &k)? == Branch::ParityInfinite {
        return Err(CmdError::usage(format!(
            "c={c}, k={k} is parity-infinite: there is no finite upper bound to certify"
        )));
    }
    let report = certify_upper_bound(&c, &k, alpha.as_ref())?;
    print!("{}", render::render_report(&report));
    if report.run.outcome.is_certified() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_FAIL)
    }
}

fn cmd_check_coloring(
    path: &PathBuf,
    c_text: Option<&str>,
    k_text: Option<&str>,
) -> Result<u8, CmdError> {
    let text = std::fs::read_to_string(path)?;
    let first_word = text.split_whitespace().next().unwrap_or("");
    let flag_c = c_text.map(|t| parse_flag_rational("c", t)).transpose()?;
    let flag_k = k_text.map(|t| parse_flag_rational("k", t)).transpose()?;

    let cross_check = |name: &str, header: &Rational, flag: Option<&Rational>| -> Result<(), CmdError> {
        match flag {
            Some(value) if value != header => Err(CmdError::usage(format!(
                "--{name} {value} disagrees with the file header ({header})"
            ))),
            _ => Ok(()),
        }
    };

    match first_word {
        "discrete" => {
            let (coloring, c, k) = parse_discrete(&text)?;
            cross_check("c", &rat_u32(c), flag_c.as_ref())?;
            cross_check("k", &rat_u32(k), flag_k.as_ref())?;
            match validate_discrete(&coloring, c, k) {
                None => {
                    println!("VALID");
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    let (x, y, z) = v.triple;
                    println!("INVALID ({x}, {y}, {z}) {}", v.color);
                    Ok(EXIT_FAIL)
                }
            }
        }
        "continuous" => {
            let (coloring, c, k) = parse_interval(&text)?;
            cross_check("c", &c, flag_c.as_ref())?;
            cross_check("k", &k, flag_k.as_ref())?;
            match validate_interval(&coloring, &c, &k) {
                None => {
                    println!("VALID");
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    println!("INVALID ({}, {}, {}) {}", v.x, v.y, v.z, v.color);
                    Ok(EXIT_FAIL)
                }
            }
        }
        other => Err(CmdError::usage(format!(
            "unknown coloring format `{other}` (expected a `discrete` or `continuous` header)"
        ))),
    }
}

fn cmd_export_coloring(
    c_text: &str,
    k_text: &str,
    alpha_text: Option<&str>,
    n: Option<u32>,
    out: &PathBuf,
) -> Result<u8, CmdError> {
    let c = parse_flag_rational("c", c_text)?;
    let k = parse_flag_rational("k", k_text)?;

    let alpha = alpha_text
        .map(|t| parse_flag_rational("alpha", t))
        .transpose()?;
    let recipe = LowerBoundRecipe::new(c.clone(), k.clone(), alpha)?;

    let contents = if let Some(alpha) = &recipe.alpha {
        let coloring = lower_bound_coloring_continuous(&c, &k, alpha)?;
        println!(
            "continuous lower-bound coloring of [{}, {}) for c={c}, k={k}",
            coloring.alpha, coloring.n
        );
        write_interval(&coloring, &c, &k)
    } else {
        let (ci, ki) = match (to_u32(&c), to_u32(&k)) {
            (Some(ci), Some(ki)) => (ci, ki),
            _ => {
                return Err(CmdError::usage(
                    "discrete colorings need integer c and k; pass --alpha for an interval coloring",
                ))
            }
        };
        if recipe.branch == Branch::ParityInfinite {
            let n = n.ok_or_else(|| {
                CmdError::usage("different-parity pairs need --n for the parity coloring")
            })?;
            let coloring = parity_coloring(ci, ki, n)?;
            println!("parity coloring of [1, {n}] for c={ci}, k={ki}");
            write_discrete(&coloring, ci, ki)
        } else {
            let coloring = lower_bound_coloring_discrete(ci, ki)?;
            println!(
                "discrete lower-bound coloring of [1, {}] for c={ci}, k={ki}",
                coloring.n()
            );
            write_discrete(&coloring, ci, ki)
        }
    };
    std::fs::write(out, contents)?;
    println!("wrote {}", out.display());
    Ok(EXIT_OK)
}
