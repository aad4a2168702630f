use std::io::{stderr, stdout};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use limsat::harness::{
    self, cmd_bench, cmd_convert, cmd_oracle, cmd_solve, cmd_ssp, OutputFormat, RunConfig,
};
use limsat::ilp::ModelForm;
use limsat::ssp::DEFAULT_VALUE_LIMIT;

#[derive(Parser)]
#[command(name = "limsat", version, about = "SAT to subset-sum and 0-1 ILP transformer and solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SolveOpts {
    /// Wall-clock limit for the solve call, in seconds
    #[arg(long, default_value_t = harness::DEFAULT_TIMEOUT_S)]
    timeout: f64,

    /// Model form: twoblock or combined
    #[arg(long, default_value = "twoblock", value_parser = parse_form)]
    form: ModelForm,
}

#[derive(Subcommand)]
enum Command {
    /// Write the 0-1 ILP model of a CNF file in LP or MPS format
    Convert {
        input: PathBuf,
        /// Output format: lp or mps
        #[arg(long, default_value = "lp")]
        format: String,
        /// Output path (stdout if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "twoblock", value_parser = parse_form)]
        form: ModelForm,
        /// Append experimental clause upper-bound rows with this rhs
        #[arg(long)]
        b3: Option<i64>,
    },
    /// Solve one CNF file with the built-in feasibility engine
    Solve {
        input: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Append experimental clause upper-bound rows with this rhs
        #[arg(long)]
        b3: Option<i64>,
    },
    /// Solve every .cnf file in a directory and emit a result table
    Bench {
        directory: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Parallel instances (one solver per worker)
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Output format: csv, json or table
        #[arg(long, default_value = "csv", value_parser = parse_output_format)]
        format: OutputFormat,
        /// Output path (stdout if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render the subset-sum digit table; optionally run the DP solver
    Ssp {
        input: PathBuf,
        /// Digit radix (default: large enough that no column carries)
        #[arg(long)]
        radix: Option<u32>,
        /// Also solve the instance by dynamic programming
        #[arg(long)]
        dp: bool,
        /// Largest target value the DP solver accepts
        #[arg(long, default_value_t = DEFAULT_VALUE_LIMIT)]
        value_limit: u128,
    },
    /// Brute-force 2^n enumeration, the ground-truth oracle
    Oracle {
        input: PathBuf,
        /// Refuse formulas with more variables than this
        #[arg(long, default_value_t = harness::default_max_vars())]
        max_vars: u32,
    },
}

fn parse_form(s: &str) -> Result<ModelForm, String> {
    ModelForm::parse(s).ok_or_else(|| format!("unknown form `{s}` (twoblock or combined)"))
}

fn parse_output_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::parse(s).ok_or_else(|| format!("unknown format `{s}` (csv, json or table)"))
}

fn main() {
    let cli = Cli::parse();
    let mut out = stdout();
    let mut err = stderr();
    let code = match cli.command {
        Command::Convert {
            input,
            format,
            out: out_path,
            form,
            b3,
        } => cmd_convert(&input, &format, out_path.as_deref(), form, b3, &mut err),
        Command::Solve { input, opts, b3 } => {
            let config = RunConfig {
                timeout_s: opts.timeout,
                form: opts.form,
                ..RunConfig::default()
            };
            cmd_solve(&input, &config, b3, &mut out, &mut err)
        }
        Command::Bench {
            directory,
            opts,
            workers,
            format,
            out: out_path,
        } => {
            let config = RunConfig {
                timeout_s: opts.timeout,
                form: opts.form,
                workers,
                format,
                ..RunConfig::default()
            };
            match out_path {
                Some(path) => match std::fs::File::create(&path) {
                    Ok(mut file) => cmd_bench(&directory, &config, &mut file, &mut err),
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        harness::EXIT_ERROR
                    }
                },
                None => cmd_bench(&directory, &config, &mut out, &mut err),
            }
        }
        Command::Ssp {
            input,
            radix,
            dp,
            value_limit,
        } => cmd_ssp(&input, radix, dp, value_limit, &mut out, &mut err),
        Command::Oracle { input, max_vars } => cmd_oracle(&input, max_vars, &mut out, &mut err),
    };
    std::process::exit(code);
}
