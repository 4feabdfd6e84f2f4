use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lhc::format::{
    format_transversal, load_cube, parse_lambda, read_lhc, read_text, serialize_lhc, write_text,
};
use lhc::lhc_core::algebra::{gen_iterated_group, GroupKind, Permutation, TransformSpec};
use lhc::lhc_core::semilinear::{
    brindled_count_closed, census_recurrence, count_transversals_formula, count_twin,
    gen_semilinear, zero_sum_brindled, BooleanFn,
};
use lhc::lhc_core::transversal::enumerate_transversals;
use lhc::lhc_core::LatinHypercube;
use lhc::sexpr::{parse_permutation, parse_spec};
use lhc::{classify, parallel, verify, Error, Result};

#[derive(Parser)]
#[command(
    name = "lhc",
    version,
    about = "Latin hypercubes, n-ary quasigroups and their transversals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a cube and write it as `.lhc`.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; standard output when absent.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check the structure and the latin property of a `.lhc` file.
    Validate { path: PathBuf },
    /// Report latinity, semilinearity and reducibility.
    Classify { path: PathBuf },
    /// Count or list transversals.
    Transversals {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
        /// Stop listing after this many transversals.
        #[arg(long)]
        limit: Option<usize>,
        /// Count on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Apply an isotopy and/or a parastrophe.
    Apply {
        path: PathBuf,
        /// Symbol permutation such as `0,2,1,3`. Give it once for every
        /// role, or n+1 times (roles 0..n in order).
        #[arg(long)]
        isotopy: Vec<String>,
        /// Permutation of the roles 0..n.
        #[arg(long)]
        parastrophe: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Print the transversal counts before and after.
        #[arg(long)]
        counts: bool,
    },
    /// Quadruple statistics and the formula count for an orientation function.
    Quadruples {
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Run the reproduction claims.
    Verify {
        /// Run only this claim (repeatable).
        #[arg(long = "claim")]
        claims: Vec<u32>,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Corrupt the fixture of one claim; that claim must then fail.
        #[arg(long)]
        inject_fault: Option<u32>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// `x_0 = x_1 * ... * x_n` in a group.
    Iterated {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        q: usize,
    },
    /// Standardly semilinear cube of order 4.
    Semilinear {
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Evaluate a composition tree.
    Compose {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LambdaArg {
    /// Truth table as a bit string, e.g. `0111`.
    #[arg(long)]
    lambda: Option<String>,
    /// File holding the truth table.
    #[arg(long)]
    lambda_file: Option<PathBuf>,
}

impl LambdaArg {
    fn get(&self) -> Result<BooleanFn> {
        match (&self.lambda, &self.lambda_file) {
            (Some(bits), _) => Ok(parse_lambda(bits)?),
            (_, Some(path)) => parse_lambda(&read_text(path)?).map_err(|source| Error::Parse {
                path: path.clone(),
                source,
            }),
            _ => unreachable!("clap requires one"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Z4,
    Z22,
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Count,
    List,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn count_line(cube: &LatinHypercube, sequential: bool) -> Result<String> {
    let stats = if sequential {
        parallel::count_timed(cube)?
    } else {
        parallel::count_parallel(cube)?
    };
    Ok(format!(
        "{}\nnodes visited: {}\nelapsed: {:.3} s\n",
        stats.transversals_found,
        stats.nodes_visited,
        stats.elapsed.as_secs_f64()
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { kind, out } => {
            let cube = match kind {
                GenKind::Iterated { group, n, q } => {
                    let kind = match group {
                        Group::Z4 if q == 4 => GroupKind::Z4,
                        Group::Z22 if q == 4 => GroupKind::Z2x2,
                        Group::Cyclic => GroupKind::CyclicZq,
                        _ => return Err(Error::Usage("z4 and z22 need --q 4".into())),
                    };
                    gen_iterated_group(kind, n, q)?
                }
                GenKind::Semilinear { lambda } => gen_semilinear(&lambda.get()?)?,
                GenKind::Compose { spec } => parse_spec(&read_text(&spec)?)
                    .map_err(|source| Error::Parse {
                        path: spec.clone(),
                        source,
                    })?
                    .compose()?,
            };
            emit(out.as_deref(), &serialize_lhc(&cube))?;
        }
        Command::Validate { path } => {
            let cube = read_lhc(&path)?;
            let report = cube.validate_latin();
            if report.is_ok() {
                println!("ok: n = {}, q = {}", cube.arity(), cube.order());
            } else {
                println!("not latin: {} violating lines", report.violations.len());
                for line in report.violations.iter().take(20) {
                    println!("  axis {} fixed {:?}", line.axis, line.fixed);
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Classify { path } => {
            let cube = read_lhc(&path)?;
            print!("{}", classify::classify(&cube)?);
        }
        Command::Transversals {
            path,
            mode,
            limit,
            sequential,
        } => {
            let cube = load_cube(&path)?;
            match mode {
                Mode::Count => print!("{}", count_line(&cube, sequential)?),
                Mode::List => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    for t in enumerate_transversals(&cube, limit)? {
                        if writeln!(lock, "{}", format_transversal(&t)).is_err() {
                            break;
                        }
                    }
                }
            }
        }
        Command::Apply {
            path,
            isotopy,
            parastrophe,
            out,
            counts,
        } => {
            let cube = load_cube(&path)?;
            let (n, q) = (cube.arity(), cube.order());
            let perm = |s: &str| parse_permutation(s).map_err(Error::Usage);
            let isotopy = match isotopy.len() {
                0 => None,
                1 => Some(vec![perm(&isotopy[0])?; n + 1]),
                _ => Some(
                    isotopy
                        .iter()
                        .map(|s| perm(s))
                        .collect::<Result<Vec<Permutation>>>()?,
                ),
            };
            let parastrophe = parastrophe.as_deref().map(perm).transpose()?;
            if let Some(p) = isotopy
                .as_ref()
                .and_then(|v| v.iter().find(|p| p.len() != q))
            {
                return Err(Error::Usage(format!(
                    "isotopy permutation of length {} for order {q}",
                    p.len()
                )));
            }
            let image = TransformSpec {
                isotopy,
                parastrophe,
            }
            .apply(&cube)
            .map_err(|e| Error::Usage(e.to_string()))?;
            if counts {
                eprint!("before: {}", count_line(&cube, false)?);
                eprint!("after: {}", count_line(&image, false)?);
            }
            emit(out.as_deref(), &serialize_lhc(&image))?;
        }
        Command::Quadruples { lambda } => {
            let lambda = lambda.get()?;
            let n = lambda.arity();
            let census = census_recurrence(n);
            println!("lambda: {lambda}");
            println!("twin quadruples: {}", count_twin(n));
            println!("brindled quadruples: {}", brindled_count_closed(n));
            println!(
                "census: A00 {} A01 {} A11 {} B00 {} B01 {} B11 {} W {}",
                census.a00, census.a01, census.a11, census.b00, census.b01, census.b11, census.w
            );
            println!(
                "zero-sum brindled quadruples: {}",
                zero_sum_brindled(&lambda)
            );
            println!(
                "formula transversal count: {}",
                count_transversals_formula(&lambda)
            );
        }
        Command::Verify {
            claims,
            json,
            inject_fault,
        } => {
            let report = verify::run(&verify::Options {
                only: claims,
                inject_fault,
            })?;
            for claim in &report.claims {
                println!("{}", claim.line());
            }
            if let Some(path) = json {
                write_text(&path, &report.to_json())?;
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
