//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, file, parse or domain error, 2 search budget
//! exhausted, 3 illegal derivation step, 4 failed check (table violations,
//! table build failure or a residual above tolerance).

use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotline::{data, io as kio, report};
use knotline_core::analytic::{
    density_terms, euler_product, explicit_formula_residual, mellin_check, theta,
    theta_eta_identity_residual, CharacterSpec, EulerKind, PrimeTable, SplittingSpec, ZeroList,
};
use knotline_core::arith::{verify_table, Table};
use knotline_core::kz::{central_charge, CasimirTensor, Convention, LieBasis, MonodromyMatrix};
use knotline_core::wilson::{
    check_derivation, encode_wilson, reduce, Budget, CheckError, ReduceError,
};
use num_complex::Complex64;
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "knotline",
    version,
    about = "Wilson-word knot invariants, classification tables and analytic checks"
)]
struct Cli {
    /// Worker threads for batch work; defaults to the number of cores.
    #[arg(long, global = true, env = "KNOTLINE_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce diagrams to normal form and print m with the derivation.
    Invariant(InvariantArgs),
    /// Replay a derivation script against a diagram.
    Check { diagram: PathBuf, script: PathBuf },
    /// Build or verify the classification table.
    #[command(subcommand)]
    Table(TableCommand),
    /// Numeric checks of the analytic identities and the monodromy.
    #[command(subcommand)]
    Analytic(AnalyticCommand),
}

#[derive(Args)]
struct InvariantArgs {
    /// Diagram files; several are reduced in parallel.
    #[arg(required = true)]
    diagrams: Vec<PathBuf>,
    /// Rotate the crossing sequence by this many places first.
    #[arg(long, default_value_t = 0)]
    rotate: usize,
    /// Maximum number of words expanded by the search.
    #[arg(long, env = "KNOTLINE_MAX_EXPANSIONS", default_value_t = Budget::default().expansions)]
    max_expansions: usize,
    /// Words may grow at most this many factors beyond the start.
    #[arg(long, env = "KNOTLINE_EXTRA_LEN", default_value_t = Budget::default().extra_len)]
    extra_len: usize,
    /// Bound on the sum of absolute monodromy exponents.
    #[arg(long, env = "KNOTLINE_POWER_BOUND", default_value_t = Budget::default().power_bound)]
    power_bound: i64,
    /// Print only m.
    #[arg(long)]
    quiet: bool,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Build the table through position N and print it as CSV.
    Build {
        /// Last position to build.
        n: u64,
        /// Write the CSV here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the chains of transition to stderr.
        #[arg(long)]
        chains: bool,
    },
    /// Verify a table CSV; defaults to the bundled golden table.
    Verify {
        /// Table CSV to verify.
        path: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PrimeArgs {
    /// Prime limit P.
    #[arg(long = "P", env = "KNOTLINE_PRIME_LIMIT", default_value_t = 1_000_000)]
    p: u64,
}

#[derive(Args)]
struct ZeroArgs {
    /// Zero-ordinate file; defaults to the bundled list.
    #[arg(long, env = "KNOTLINE_ZEROS")]
    zeros: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerChoice {
    Riemann,
    Character,
    Dedekind,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Hermitian,
    AbsorbedI,
}

#[derive(Subcommand)]
enum AnalyticCommand {
    /// Compare smooth + fluctuation with the number of zeros up to T.
    Count {
        /// Heights T.
        #[arg(long = "T", num_args = 1.., required = true)]
        t: Vec<f64>,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        zeros: ZeroArgs,
        /// Allowed gap between the rounded estimate and the count.
        #[arg(long, default_value_t = 2.0)]
        tolerance: f64,
    },
    /// Average part and per-prime amplitudes of the zero density at T.
    Density {
        /// Height T.
        #[arg(long = "T")]
        t: f64,
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Residual of the explicit formula at s.
    Explicit {
        /// Real part of s.
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        /// Imaginary part of s.
        #[arg(long, default_value_t = 0.0)]
        s_im: f64,
        #[command(flatten)]
        primes: PrimeArgs,
        /// Number of zero pairs used.
        #[arg(long = "Z", default_value_t = 100)]
        z: usize,
        #[command(flatten)]
        zeros: ZeroArgs,
        /// Largest accepted residual modulus.
        #[arg(long, default_value_t = 1e-2)]
        tolerance: f64,
    },
    /// Truncated Euler product at s.
    Euler {
        /// Which product to evaluate.
        #[arg(long, value_enum, default_value = "riemann")]
        kind: EulerChoice,
        /// Real part of s.
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        /// Imaginary part of s.
        #[arg(long, default_value_t = 0.0)]
        s_im: f64,
        /// Fundamental discriminant for the character and the quadratic field.
        #[arg(long, default_value_t = -4, allow_negative_numbers = true)]
        discriminant: i64,
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Theta at real t, or the theta/eta identity residual at τ.
    Theta {
        /// Evaluate theta at this real t.
        #[arg(long, conflicts_with_all = ["tau_re", "tau_im"])]
        t: Option<f64>,
        /// Real part of τ.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tau_re: f64,
        /// Imaginary part of τ.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        tau_im: f64,
        /// Largest accepted identity residual.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Both sides of the Mellin identity at real s.
    Mellin {
        /// Real s.
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        /// Largest accepted residual.
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Absolute tolerance of the adaptive quadrature.
        #[arg(long, default_value_t = 1e-12)]
        quad_tol: f64,
    },
    /// Casimir tensor, monodromy and central charge at level k.
    Monodromy {
        /// Level k.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Output format.
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Generator convention.
        #[arg(long, value_enum, default_value = "hermitian")]
        convention: ConventionArg,
    },
}

/// A failed command with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(e: impl Display) -> Failure {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
    fn check(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match cli.command {
        Command::Invariant(args) => cmd_invariant(&args),
        Command::Check { diagram, script } => cmd_check(&diagram, &script),
        Command::Table(t) => cmd_table(t),
        Command::Analytic(a) => cmd_analytic(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_invariant(args: &InvariantArgs) -> Outcome {
    let budget = Budget {
        expansions: args.max_expansions,
        extra_len: args.extra_len,
        power_bound: args.power_bound,
        ..Budget::default()
    };
    let results: Vec<Result<String, Failure>> = args
        .diagrams
        .par_iter()
        .map(|path| {
            let d = kio::read_diagram(path).map_err(Failure::input)?;
            let d = if args.rotate == 0 {
                d
            } else {
                d.rotate_basepoint(args.rotate).map_err(Failure::input)?
            };
            match reduce(&encode_wilson(&d), &budget) {
                Ok((nf, _)) if args.quiet => Ok(format!("{}\n", nf.m)),
                Ok((nf, der)) => Ok(format!("{}: m = {}\n{der}", path.display(), nf.m)),
                Err(e @ ReduceError::BudgetExhausted { .. }) => Err(Failure {
                    code: 2,
                    message: format!("{}: {e}", path.display()),
                }),
                Err(e) => Err(Failure::input(format!("{}: {e}", path.display()))),
            }
        })
        .collect();
    let mut first_failure = None;
    for r in results {
        match r {
            Ok(text) => print!("{text}"),
            Err(f) => {
                eprintln!("error: {}", f.message);
                first_failure.get_or_insert(f);
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(f) => Err(Failure {
            message: "some diagrams failed".into(),
            ..f
        }),
    }
}

fn cmd_check(diagram: &Path, script: &Path) -> Outcome {
    let d = kio::read_diagram(diagram).map_err(Failure::input)?;
    let s = kio::read_script(script).map_err(Failure::input)?;
    match check_derivation(&encode_wilson(&d), &s) {
        Ok(nf) => {
            println!("OK, m = {}", nf.m);
            Ok(())
        }
        Err(e @ (CheckError::StepIllegal { .. } | CheckError::NonNormalFinal(_))) => Err(Failure {
            code: 3,
            message: e.to_string(),
        }),
        Err(e) => Err(Failure::input(e)),
    }
}

fn cmd_table(cmd: TableCommand) -> Outcome {
    match cmd {
        TableCommand::Build { n, output, chains } => {
            let table = Table::build_to(n).map_err(|e| Failure::check(e.to_string()))?;
            if chains {
                for step in &table.steps {
                    for c in &step.chains {
                        eprintln!("step {}: {c}", step.n);
                    }
                }
            }
            match output {
                Some(path) => {
                    let file = std::fs::File::create(&path)
                        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    kio::write_table(file, table.rows(n)).map_err(Failure::input)
                }
                None => {
                    kio::write_table(io::stdout().lock(), table.rows(n)).map_err(Failure::input)
                }
            }
        }
        TableCommand::Verify { path } => {
            let path = path.unwrap_or_else(data::golden_table_path);
            let rows = kio::read_table(&path).map_err(Failure::input)?;
            let violations = verify_table(&rows);
            for v in &violations {
                println!("{v}");
            }
            if violations.is_empty() {
                println!("{} rows verified, no violations", rows.len());
                Ok(())
            } else {
                Err(Failure::check(format!("{} violations", violations.len())))
            }
        }
    }
}

fn load_zeros(args: &ZeroArgs) -> Result<ZeroList, Failure> {
    let path = args.zeros.clone().unwrap_or_else(data::zeros_path);
    kio::read_zeros(&path).map_err(Failure::input)
}

fn within(value: f64, tolerance: f64, what: &str) -> Outcome {
    if value <= tolerance {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "{what} {value:e} exceeds tolerance {tolerance:e}"
        )))
    }
}

fn cmd_analytic(cmd: AnalyticCommand) -> Outcome {
    let mut out = io::stdout().lock();
    match cmd {
        AnalyticCommand::Count {
            t,
            primes,
            zeros,
            tolerance,
        } => {
            let table = PrimeTable::sieve(primes.p);
            let zeros = load_zeros(&zeros)?;
            let rows = report::count_rows(&t, &table, &zeros).map_err(Failure::input)?;
            report::write_count_csv(&mut out, &rows).map_err(Failure::input)?;
            let worst = rows
                .iter()
                .map(|r| (r.estimate().round() - r.count as f64).abs())
                .fold(0.0, f64::max);
            within(worst, tolerance, "count gap")
        }
        AnalyticCommand::Density { t, primes } => {
            let d = density_terms(t, &PrimeTable::sieve(primes.p)).map_err(Failure::input)?;
            report::write_amplitudes_csv(&mut out, &d).map_err(Failure::input)
        }
        AnalyticCommand::Explicit {
            s,
            s_im,
            primes,
            z,
            zeros,
            tolerance,
        } => {
            let zeros = load_zeros(&zeros)?.truncated(z);
            let r = explicit_formula_residual(
                Complex64::new(s, s_im),
                &PrimeTable::sieve(primes.p),
                &zeros,
            )
            .map_err(Failure::input)?;
            writeln!(out, "residual,{},{}", r.residual.re, r.residual.im)
                .map_err(Failure::input)?;
            writeln!(out, "zero_tail,{}", r.zero_tail).map_err(Failure::input)?;
            writeln!(out, "prime_tail,{}", r.prime_tail).map_err(Failure::input)?;
            within(r.residual.norm(), tolerance, "explicit-formula residual")
        }
        AnalyticCommand::Euler {
            kind,
            s,
            s_im,
            discriminant,
            primes,
        } => {
            let table = PrimeTable::sieve(primes.p);
            let s = Complex64::new(s, s_im);
            let value = match kind {
                EulerChoice::Riemann => euler_product(EulerKind::Riemann, s, &table),
                EulerChoice::Character => {
                    let chi = CharacterSpec::kronecker(discriminant).map_err(Failure::input)?;
                    euler_product(EulerKind::Character(&chi), s, &table)
                }
                EulerChoice::Dedekind => {
                    let spec = SplittingSpec::Quadratic { discriminant };
                    euler_product(EulerKind::Splitting(&spec), s, &table)
                }
            }
            .map_err(Failure::input)?;
            writeln!(out, "{},{}", value.re, value.im).map_err(Failure::input)
        }
        AnalyticCommand::Theta { t: Some(t), .. } => {
            let v = theta(t).map_err(Failure::input)?;
            writeln!(out, "{v}").map_err(Failure::input)
        }
        AnalyticCommand::Theta {
            t: None,
            tau_re,
            tau_im,
            tolerance,
        } => {
            let r = theta_eta_identity_residual(Complex64::new(tau_re, tau_im))
                .map_err(Failure::input)?;
            writeln!(out, "residual,{},{}", r.re, r.im).map_err(Failure::input)?;
            within(r.norm(), tolerance, "theta/eta residual")
        }
        AnalyticCommand::Mellin {
            s,
            tolerance,
            quad_tol,
        } => {
            let m = mellin_check(s, quad_tol, 100_000).map_err(Failure::input)?;
            writeln!(out, "series,{}", m.series).map_err(Failure::input)?;
            writeln!(out, "integral,{}", m.integral).map_err(Failure::input)?;
            writeln!(out, "residual,{}", m.residual()).map_err(Failure::input)?;
            within(m.residual().abs(), tolerance, "Mellin residual")
        }
        AnalyticCommand::Monodromy {
            k,
            format,
            convention,
        } => {
            let convention = match convention {
                ConventionArg::Hermitian => Convention::Hermitian,
                ConventionArg::AbsorbedI => Convention::AbsorbedI,
            };
            let basis = LieBasis::new(k, convention).map_err(Failure::input)?;
            let t = CasimirTensor::from_basis(&basis);
            let r = MonodromyMatrix::from_casimir(&t);
            let c = central_charge(k).map_err(Failure::input)?;
            match format {
                Format::Csv => {
                    report::write_monodromy_csv(&mut out, &t, &r).map_err(Failure::input)?;
                    writeln!(out, "central-charge,,,{c},0").map_err(Failure::input)
                }
                Format::Json => {
                    let mut j = report::monodromy_json(&t, &r);
                    j["central_charge"] = serde_json::Value::String(c.to_string());
                    writeln!(out, "{j:#}").map_err(Failure::input)
                }
            }
        }
    }
}
