mod equiv;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use xagdepth_core::{
    estimate_only, map_to_circuit, optimize_to_fixpoint, parse_netlist, write_native, write_qc, EsopCost,
    ResynthChoice, Schedule, Strategy, Xag,
};

/// Multiplicative-depth optimization of XOR-AND graphs and quantum
/// resource estimation.
#[derive(Parser)]
#[command(name = "xagdepth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print inputs, gates, MC, MD and gate depth of each netlist.
    Stats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reduce multiplicative depth by cut-based balancing.
    Balance(BalanceArgs),
    /// Map netlists to reversible circuits and report T-count, T-depth and qubits.
    Map(MapArgs),
    /// Compare two netlists by simulation.
    CheckEquiv(EquivArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Esop,
    Espp,
}

#[derive(Clone, Copy, ValueEnum)]
enum CostArg {
    Cubes,
    Literals,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Asap,
    Alap,
}

#[derive(Args)]
struct BalanceArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long, default_value_t = 6)]
    cut_size: usize,
    #[arg(long, default_value_t = 25)]
    cut_limit: usize,
    #[arg(long, value_enum, default_value = "esop")]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 100)]
    max_rounds: usize,
    #[arg(long, value_enum, default_value = "cubes")]
    esop_cost: CostArg,
    /// Reshaping passes of the ESOP minimizer.
    #[arg(long, default_value_t = 4)]
    effort: usize,
    /// Output file, or directory when several inputs are given.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the post-optimization equivalence check.
    #[arg(long)]
    no_verify: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct MapArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "asap")]
    schedule: ScheduleArg,
    /// Circuit listing file, or directory when several inputs are given.
    #[arg(long)]
    qc_out: Option<PathBuf>,
    /// Add a column with the peak number of control-copy qubits.
    #[arg(long)]
    report_copies: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct EquivArgs {
    file_a: PathBuf,
    file_b: PathBuf,
    #[arg(long, default_value_t = 12)]
    exhaustive_max: usize,
    #[arg(long, default_value_t = 10000)]
    vectors: usize,
    #[arg(long, env = "XAGDEPTH_SEED", default_value_t = 1)]
    seed: u64,
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }

    fn internal(error: anyhow::Error) -> Self {
        Failure { code: 3, error }
    }
}

type Outcome<T> = Result<T, Failure>;

fn name_of(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn load(path: &Path) -> Outcome<Xag> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::input)?;
    parse_netlist(&text)
        .with_context(|| format!("{}", path.display()))
        .map_err(Failure::input)
}

/// Where to write the artifact for `input`: `dest` itself for a single
/// input, else `dest/<stem>.<ext>`.
fn destination(dest: &Path, input: &Path, many: bool, ext: &str) -> PathBuf {
    if many {
        dest.join(format!("{}.{ext}", name_of(input)))
    } else {
        dest.to_path_buf()
    }
}

fn write(path: &Path, text: &str) -> Outcome<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))
            .map_err(Failure::input)?;
    }
    fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::input)
}

/// Runs `job` on every file, in parallel when `jobs > 1`, and prints the
/// rows in input order under `header`.
fn batch(files: &[PathBuf], jobs: usize, header: &str, job: impl Fn(&Path) -> Outcome<String> + Sync) -> ExitCode {
    let run = || files.par_iter().map(|f| job(f)).collect::<Vec<_>>();
    let results = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{header}");
    let mut code = 0;
    for r in results {
        match r {
            Ok(row) => println!("{row}"),
            Err(f) => {
                eprintln!("error: {:#}", f.error);
                code = code.max(f.code);
            }
        }
    }
    ExitCode::from(code)
}

fn stats(path: &Path) -> Outcome<String> {
    let net = load(path)?;
    let live = net.sweep_dead();
    Ok(format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        name_of(path),
        live.num_inputs(),
        live.num_gates(),
        live.mult_complexity(),
        live.mult_depth(),
        live.general_depth()
    ))
}

fn balance(args: &BalanceArgs, path: &Path) -> Outcome<String> {
    let net = load(path)?;
    let choice = ResynthChoice {
        strategy: match args.strategy {
            StrategyArg::Esop => Strategy::Esop,
            StrategyArg::Espp => Strategy::Espp,
        },
        effort: args.effort,
        cost: match args.esop_cost {
            CostArg::Cubes => EsopCost::Cubes,
            CostArg::Literals => EsopCost::Literals,
        },
        cut_size: args.cut_size,
        cut_limit: args.cut_limit,
        max_rounds: args.max_rounds,
    };
    let start = Instant::now();
    let (opt, rounds) = optimize_to_fixpoint(&net, &choice).map_err(|e| Failure::input(e.into()))?;
    let secs = start.elapsed().as_secs_f64();
    if !args.no_verify {
        if let equiv::Verdict::Different(c) = equiv::check(&net, &opt, 12, 1000, 0) {
            return Err(Failure::internal(anyhow!(
                "{}: optimized network differs on inputs {}",
                path.display(),
                bit_string(&c.inputs)
            )));
        }
    }
    if let Some(dest) = &args.out {
        write(
            &destination(dest, path, args.files.len() > 1, "xag"),
            &write_native(&opt),
        )?;
    }
    Ok(format!(
        "{}\t{} ({})\t{} ({})\t{rounds}\t{secs:.2}",
        name_of(path),
        opt.mult_complexity(),
        net.mult_complexity(),
        opt.mult_depth(),
        net.mult_depth()
    ))
}

fn map(args: &MapArgs, path: &Path) -> Outcome<String> {
    let net = load(path)?.propagate_inverters();
    let schedule = match args.schedule {
        ScheduleArg::Asap => Schedule::Asap,
        ScheduleArg::Alap => Schedule::Alap,
    };
    let est = match &args.qc_out {
        Some(dest) => {
            let (circuit, est) = map_to_circuit(&net, schedule).map_err(|e| Failure::internal(e.into()))?;
            write(
                &destination(dest, path, args.files.len() > 1, "qc"),
                &write_qc(&circuit),
            )?;
            est
        }
        None => estimate_only(&net, schedule).map_err(|e| Failure::internal(e.into()))?,
    };
    let mut row = format!(
        "{}\t{}\t{}\t{}\t{}",
        name_of(path),
        est.t_count,
        est.t_depth,
        est.qubits,
        est.schedule
    );
    if args.report_copies {
        row += &format!("\t{}", est.copies);
    }
    Ok(row)
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn check_equiv(args: &EquivArgs) -> Outcome<u8> {
    let a = load(&args.file_a)?;
    let b = load(&args.file_b)?;
    if (a.num_inputs(), a.num_outputs()) != (b.num_inputs(), b.num_outputs()) {
        return Err(Failure::input(anyhow!(
            "arity mismatch: {} has {} inputs and {} outputs, {} has {} and {}",
            args.file_a.display(),
            a.num_inputs(),
            a.num_outputs(),
            args.file_b.display(),
            b.num_inputs(),
            b.num_outputs()
        )));
    }
    match equiv::check(&a, &b, args.exhaustive_max, args.vectors, args.seed) {
        equiv::Verdict::Equivalent { method, vectors } => {
            match method {
                equiv::Method::Exhaustive => println!("equivalent\texhaustive\t{vectors}"),
                equiv::Method::Random { seed, .. } => println!("equivalent\trandom\t{vectors}\tseed={seed}"),
            }
            Ok(0)
        }
        equiv::Verdict::Different(c) => {
            println!(
                "different\tinputs={}\ta={}\tb={}",
                bit_string(&c.inputs),
                bit_string(&c.left),
                bit_string(&c.right)
            );
            Ok(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Stats { files, jobs } => batch(&files, jobs, "name\tinputs\tgates\tMC\tMD\tdepth", stats),
        Command::Balance(args) => batch(
            &args.files,
            args.jobs,
            "name\tMC (before)\tMD (before)\trounds\truntime",
            |p| balance(&args, p),
        ),
        Command::Map(args) => {
            let header = if args.report_copies {
                "name\tT-count\tT-depth\tqubits\tschedule\tcopies"
            } else {
                "name\tT-count\tT-depth\tqubits\tschedule"
            };
            batch(&args.files, args.jobs, header, |p| map(&args, p))
        }
        Command::CheckEquiv(args) => match check_equiv(&args) {
            Ok(code) => ExitCode::from(code),
            Err(f) => {
                eprintln!("error: {:#}", f.error);
                ExitCode::from(f.code)
            }
        },
    }
}
