//! `lrc`: build, inspect and verify locally repairable codes, and tabulate their bounds.
//!
//! Exit status: 0 success or pass, 1 verification failure, 2 usage or input
//! error, 3 infeasible construction parameters.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lrc_core::bounds::{compare_t3_bounds, BoundsReport, KRule};
use lrc_core::gf2::min_distance;
use lrc_core::recovery::VerifyOptions;
use lrc_core::tables;
use lrc_core::{
    check_parallel, BitMatrix, BuiltCode, CodeReport, ConstructionSpec, LinearCode, LrcError,
    RecoveryMode,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lrc", version, about = "Locally repairable code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a spec string and print its report.
    Construct {
        spec: String,
        /// Write the parity-check matrix here in pchk-v1 format.
        #[arg(long)]
        out: Option<PathBuf>,
        /// What to print on stdout.
        #[arg(long, value_enum, default_value_t = ConstructFormat::Json)]
        format: ConstructFormat,
    },
    /// Report n, k, rate and (when feasible) the minimum distance.
    Inspect {
        /// Spec string or path to a pchk-v1 file.
        input: String,
        /// Largest dimension for which the minimum distance is enumerated.
        #[arg(long, default_value_t = 26)]
        d_cap: usize,
    },
    /// Check an (r, t) recovery claim exhaustively, by sampling, or structurally.
    Verify {
        /// Spec string or path to a pchk-v1 file.
        input: String,
        /// Locality; defaults to the construction's claim.
        #[arg(long)]
        r: Option<usize>,
        /// Erasures to recover; defaults to the construction's claim.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Check this many random patterns instead of all of them.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Refuse exhaustive runs over more patterns than this.
        #[arg(long)]
        pattern_cap: Option<u64>,
        /// Failing patterns kept in the report.
        #[arg(long, default_value_t = 100)]
        max_failures: usize,
    },
    /// Evaluate length and rate bounds.
    Bounds {
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: Option<u64>,
        /// Only the rate caps.
        #[arg(long)]
        rate: bool,
        /// Only the minimum length of a parallel-recovery code.
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = BoundsFormat::Text)]
        format: BoundsFormat,
    },
    /// Emit a comparison table as CSV.
    Compare {
        #[arg(value_enum)]
        kind: CompareKind,
        #[arg(long, default_value_t = 50)]
        r_max: u64,
        /// Exponent `a/b` of the largest `k` (`floor(r^(a/b)) - 1`) in the t3bounds sweep.
        #[arg(long, default_value = "9/5")]
        k_exp: String,
        #[arg(long, default_value_t = 50)]
        beta_max: u64,
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructFormat {
    Json,
    Pchk,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundsFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Seq,
    Par,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompareKind {
    #[value(name = "table1")]
    RateTable,
    T3bounds,
    #[value(name = "pg_rate")]
    PgRate,
    #[value(name = "sts_rate")]
    StsRate,
    #[value(name = "fig2_gap")]
    HypergraphGap,
}

const MAX_PG_S: u32 = 12;
const MAX_STS_S: u32 = 31;
const MAX_BETA: u64 = 100_000;

enum Failure {
    Usage(String),
    Infeasible(String),
}

impl From<LrcError> for Failure {
    fn from(e: LrcError) -> Self {
        if e.is_infeasible_construction() {
            Failure::Infeasible(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Infeasible(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Construct { spec, out, format } => construct(&spec, out.as_deref(), format),
        Command::Inspect { input, d_cap } => inspect(&input, d_cap),
        Command::Verify {
            input,
            r,
            t,
            mode,
            samples,
            seed,
            workers,
            pattern_cap,
            max_failures,
        } => {
            let mut opts = VerifyOptions {
                workers,
                max_failures,
                ..VerifyOptions::default()
            };
            if let Some(cap) = pattern_cap {
                opts.pattern_cap = cap;
            }
            if workers == Some(0) {
                return Err(usage("--workers must be positive"));
            }
            verify(&input, r, t, mode, samples.map(|s| (s, seed)), &opts)
        }
        Command::Bounds {
            k,
            r,
            t,
            rate,
            parallel,
            format,
        } => bounds(k, r, t, rate, parallel, format),
        Command::Compare {
            kind,
            r_max,
            k_exp,
            beta_max,
            s_max,
            out,
        } => compare(kind, r_max, &k_exp, beta_max, s_max, out.as_deref()),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// A code from either a readable pchk-v1 file or a spec string.
enum Input {
    File { path: String, code: LinearCode },
    Built(Box<BuiltCode>),
}

impl Input {
    fn load(input: &str) -> CliResult<Input> {
        let path = Path::new(input);
        if path.is_file() {
            let text =
                fs::read_to_string(path).map_err(|e| usage(format!("cannot read {input}: {e}")))?;
            let h = BitMatrix::from_pchk(&text)?;
            return Ok(Input::File {
                path: input.to_owned(),
                code: LinearCode::from_parity_check(h),
            });
        }
        let spec: ConstructionSpec = input.parse()?;
        Ok(Input::Built(Box::new(spec.build()?)))
    }

    fn code(&self) -> &LinearCode {
        match self {
            Input::File { code, .. } => code,
            Input::Built(b) => &b.code,
        }
    }

    fn source(&self) -> String {
        match self {
            Input::File { path, .. } => path.clone(),
            Input::Built(b) => b.spec.to_string(),
        }
    }

    fn report(&self) -> CodeReport {
        match self {
            Input::File { path, code } => CodeReport {
                spec: Some(path.clone()),
                ..CodeReport::new(code)
            },
            Input::Built(b) => b.report(),
        }
    }
}

fn construct(spec: &str, out: Option<&Path>, format: ConstructFormat) -> CliResult<ExitCode> {
    let spec: ConstructionSpec = spec.parse()?;
    let built = spec.build()?;
    let pchk = built.code.parity_check().to_pchk();
    if let Some(path) = out {
        write_file(path, &pchk)?;
    }
    match format {
        ConstructFormat::Json => print_json(&built.report()),
        ConstructFormat::Pchk => print!("{pchk}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn inspect(input: &str, d_cap: usize) -> CliResult<ExitCode> {
    let input = Input::load(input)?;
    let mut report = input.report();
    let code = input.code();
    if code.k() == 0 {
        eprintln!("note: zero-dimensional code has no minimum distance");
    } else if code.k() <= d_cap {
        report.d = Some(min_distance(code, d_cap)?);
    } else {
        eprintln!(
            "note: k = {} exceeds --d-cap {d_cap}; minimum distance not enumerated",
            code.k()
        );
    }
    print_json(&report);
    Ok(ExitCode::SUCCESS)
}

fn verify(
    input: &str,
    r: Option<usize>,
    t: Option<usize>,
    mode: Option<Mode>,
    sampling: Option<(u64, u64)>,
    opts: &VerifyOptions,
) -> CliResult<ExitCode> {
    let input = Input::load(input)?;
    let claim = match &input {
        Input::Built(b) => Some(b.claim),
        Input::File { .. } => None,
    };
    let missing = |flag: &str| usage(format!("{flag} is required when the input has no claim"));
    let r = r.or(claim.map(|c| c.r)).ok_or_else(|| missing("--r"))?;
    let t = t.or(claim.map(|c| c.t)).ok_or_else(|| missing("--t"))?;
    let mode = match mode {
        Some(Mode::Seq) => RecoveryMode::Sequential,
        Some(Mode::Par) => RecoveryMode::Parallel,
        None => claim.map_or(RecoveryMode::Sequential, |c| c.mode),
    };
    let code = input.code();
    let report = match (mode, sampling) {
        (RecoveryMode::Parallel, Some(_)) => {
            return Err(usage("--samples applies to sequential verification only"))
        }
        (RecoveryMode::Parallel, None) => check_parallel(code, r, t),
        (RecoveryMode::Sequential, None) => {
            lrc_core::recovery::verify_sequential_with(code, r, t, opts)?
        }
        (RecoveryMode::Sequential, Some((samples, seed))) => {
            lrc_core::recovery::verify_sequential_sampled_with(code, r, t, samples, seed, opts)?
        }
    };
    let report = report.with_source(input.source());
    print_json(&report);
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn bounds(
    k: Option<u64>,
    r: u64,
    t: Option<u64>,
    rate_only: bool,
    parallel_only: bool,
    format: BoundsFormat,
) -> CliResult<ExitCode> {
    if r == 0 {
        return Err(usage("--r must be positive"));
    }
    if parallel_only && t.is_none() {
        return Err(usage("--parallel needs --t"));
    }
    let report = BoundsReport::evaluate(k, r, t);
    if let BoundsFormat::Json = format {
        print_json(&report);
        return Ok(ExitCode::SUCCESS);
    }
    let all = !rate_only && !parallel_only;
    let mut lines = Vec::new();
    if all {
        lines.push(format!("r {r}"));
        lines.extend(k.map(|k| format!("k {k}")));
        lines.extend(t.map(|t| format!("t {t}")));
    }
    if all || parallel_only {
        if let Some(p) = &report.parallel {
            let tag = if p.exact { "attained" } else { "not attained" };
            lines.push(format!("n_min {} ({tag})", p.n_min));
            lines.push(format!("m_min {}", p.m_min));
        }
    }
    if all {
        lines.extend(report.n_min_seq_t2.map(|n| format!("seq_t2 {n}")));
        lines.extend(report.n_song_t3.map(|n| format!("song {n}")));
        lines.extend(
            report
                .n_new_t3
                .map(|b| format!("new {} (s1 {}, f1 {}, f2 {})", b.n, b.s1, b.f1, b.f2)),
        );
    }
    if all || rate_only {
        if let Some(cap) = &report.rate_cap_availability {
            lines.push(format!("rate_cap {} ({})", cap.decimal, cap.fraction));
        }
        let cap = &report.rate_cap_t2;
        lines.push(format!("rate_cap_t2 {} ({})", cap.decimal, cap.fraction));
    }
    for line in lines {
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_k_exp(s: &str) -> CliResult<KRule> {
    let bad = || {
        usage(format!(
            "--k-exp must look like a/b with a, b positive, got {s:?}"
        ))
    };
    let (a, b) = s.split_once('/').ok_or_else(bad)?;
    let exp_num: u32 = a.trim().parse().map_err(|_| bad())?;
    let exp_den: u32 = b.trim().parse().map_err(|_| bad())?;
    if exp_num == 0 || exp_den == 0 {
        return Err(bad());
    }
    Ok(KRule { exp_num, exp_den })
}

fn compare(
    kind: CompareKind,
    r_max: u64,
    k_exp: &str,
    beta_max: u64,
    s_max: u32,
    out: Option<&Path>,
) -> CliResult<ExitCode> {
    let csv = match kind {
        CompareKind::RateTable => tables::r2_rate_table_csv()?,
        CompareKind::T3bounds => {
            if r_max == 0 {
                return Err(usage("--r-max must be positive"));
            }
            compare_t3_bounds(r_max, parse_k_exp(k_exp)?).to_csv()
        }
        CompareKind::PgRate => {
            if !(2..=MAX_PG_S).contains(&s_max) {
                return Err(usage(format!("pg_rate: --s-max must be in 2..={MAX_PG_S}")));
            }
            tables::rate_rows_csv(&tables::pg_rate_rows(s_max))
        }
        CompareKind::StsRate => {
            if !(3..=MAX_STS_S).contains(&s_max) {
                return Err(usage(format!(
                    "sts_rate: --s-max must be in 3..={MAX_STS_S}"
                )));
            }
            tables::rate_rows_csv(&tables::sts_rate_rows(s_max))
        }
        CompareKind::HypergraphGap => {
            if !(1..=MAX_BETA).contains(&beta_max) {
                return Err(usage(format!("--beta-max must be in 1..={MAX_BETA}")));
            }
            tables::gap_rows_csv(&tables::hypergraph_gap_rows(beta_max))
        }
    };
    match out {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
