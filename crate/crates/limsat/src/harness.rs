//! CLI orchestration: convert, solve, benchmark directories, render the
//! subset-sum table, and run the brute-force oracle.
//!
//! Exit codes follow the SAT-competition convention: 10 satisfiable,
//! 20 unsatisfiable, 30 timeout, 2 usage or input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::Serialize;

use crate::cnf::{self, CnfFormula, SatStatus, DEFAULT_BRUTE_FORCE_LIMIT};
use crate::ilp::{self, ModelForm};
use crate::solver::{self, SolveStatus};
use crate::ssp;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_SAT: i32 = 10;
pub const EXIT_UNSAT: i32 = 20;
pub const EXIT_TIMEOUT: i32 = 30;

pub const DEFAULT_TIMEOUT_S: f64 = 5000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Table,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            "table" => Some(OutputFormat::Table),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub timeout_s: f64,
    pub radix: Option<u32>,
    pub form: ModelForm,
    pub workers: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            timeout_s: DEFAULT_TIMEOUT_S,
            radix: None,
            form: ModelForm::TwoBlock,
            workers: 1,
            format: OutputFormat::Csv,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), String> {
        if self.workers < 1 {
            return Err("workers must be >= 1".into());
        }
        if !(self.timeout_s > 0.0) {
            return Err("timeout must be > 0".into());
        }
        Ok(())
    }

    fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout_s)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BenchRecord {
    pub filename: String,
    pub variables: u32,
    pub clauses: usize,
    pub result: String,
    pub time_s: f64,
}

fn load_formula(input: &Path) -> Result<CnfFormula, String> {
    let text = fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let name = input
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| input.display().to_string());
    cnf::parse_dimacs(&text, &name).map_err(|e| format!("{}: {e}", input.display()))
}

fn build_model(f: &CnfFormula, form: ModelForm, b3: Option<i64>) -> Result<ilp::IlpModel, String> {
    let (normalized, report) = cnf::normalize(f);
    if report.has_empty_clause {
        return Err("formula contains an empty clause (trivially UNSAT)".into());
    }
    let (a1, a2) = ilp::build_matrices(&normalized).map_err(|e| e.to_string())?;
    ilp::build_limsat_model_with(&a1, &a2, form, b3).map_err(|e| e.to_string())
}

/// `limsat convert`: write the model in LP or MPS form.
pub fn cmd_convert(
    input: &Path,
    format: &str,
    output: Option<&Path>,
    form: ModelForm,
    b3: Option<i64>,
    err: &mut dyn std::io::Write,
) -> i32 {
    let run = || -> Result<(), String> {
        let f = load_formula(input)?;
        let model = build_model(&f, form, b3)?;
        let text = match format {
            "lp" => ilp::export_lp(&model),
            "mps" => ilp::export_mps(&model),
            other => return Err(format!("unknown format `{other}` (expected lp or mps)")),
        };
        match output {
            Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
            None => print!("{text}"),
        }
        Ok(())
    };
    match run() {
        Ok(()) => EXIT_OK,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

/// `limsat solve`: build the model, run the built-in engine, print the
/// verdict with a DIMACS-style `v` witness line.
pub fn cmd_solve(
    input: &Path,
    config: &RunConfig,
    b3: Option<i64>,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32 {
    if let Err(message) = config.validate() {
        let _ = writeln!(err, "error: {message}");
        return EXIT_ERROR;
    }
    let (f, model) = match load_formula(input).and_then(|f| {
        let (normalized, report) = cnf::normalize(&f);
        if report.has_empty_clause {
            return Ok((normalized, None));
        }
        let model = build_model(&f, config.form, b3)?;
        Ok((normalized, Some(model)))
    }) {
        Ok(pair) => pair,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_ERROR;
        }
    };
    // an empty clause makes the formula UNSAT without solving
    let Some(model) = model else {
        let _ = writeln!(out, "UNSAT");
        return EXIT_UNSAT;
    };
    let outcome = solver::solve(&model, config.timeout());
    match outcome.status {
        SolveStatus::Feasible(x) => {
            let assignment = match ilp::solution_to_assignment(&model, &x, &f) {
                Ok(a) => a,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_ERROR;
                }
            };
            let _ = writeln!(out, "SAT");
            let _ = writeln!(out, "{}", witness_line(&assignment));
            let _ = writeln!(out, "c solve_time_s {:.2}", outcome.elapsed);
            EXIT_SAT
        }
        SolveStatus::Infeasible => {
            let _ = writeln!(out, "UNSAT");
            let _ = writeln!(out, "c solve_time_s {:.2}", outcome.elapsed);
            EXIT_UNSAT
        }
        SolveStatus::TimedOut => {
            let _ = writeln!(out, "TIMEOUT");
            EXIT_TIMEOUT
        }
    }
}

fn witness_line(a: &cnf::Assignment) -> String {
    let mut line = String::from("v");
    for (i, value) in a.values.iter().enumerate() {
        let var = i as i64 + 1;
        match value {
            Some(true) => write!(line, " {var}").unwrap(),
            // unassigned variables are reported false
            _ => write!(line, " -{var}").unwrap(),
        }
    }
    line.push_str(" 0");
    line
}

/// `limsat bench`: solve every `.cnf` file in a directory, one record per
/// file ordered by filename, with a solved/total summary.
pub fn cmd_bench(
    directory: &Path,
    config: &RunConfig,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32 {
    if let Err(message) = config.validate() {
        let _ = writeln!(err, "error: {message}");
        return EXIT_ERROR;
    }
    let mut files: Vec<PathBuf> = match fs::read_dir(directory) {
        Ok(entries) => entries
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "cnf"))
            .collect(),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", directory.display());
            return EXIT_ERROR;
        }
    };
    if files.is_empty() {
        let _ = writeln!(err, "error: no .cnf files in {}", directory.display());
        return EXIT_ERROR;
    }
    files.sort();

    let records = run_bench(&files, config);
    let solved = records
        .iter()
        .filter(|r| r.result == "sat" || r.result == "unsat")
        .count();

    match config.format {
        OutputFormat::Csv => {
            let _ = writeln!(out, "filename,variables,clauses,result,time_s");
            for r in &records {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{:.2}",
                    r.filename, r.variables, r.clauses, r.result, r.time_s
                );
            }
        }
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&records).unwrap());
        }
        OutputFormat::Table => {
            let _ = writeln!(
                out,
                "{:<30} {:>9} {:>8} {:>8} {:>8}",
                "filename", "variables", "clauses", "result", "time_s"
            );
            for r in &records {
                let _ = writeln!(
                    out,
                    "{:<30} {:>9} {:>8} {:>8} {:>8.2}",
                    r.filename, r.variables, r.clauses, r.result, r.time_s
                );
            }
        }
    }
    let _ = writeln!(out, "c solved {solved}/{}", records.len());
    EXIT_OK
}

/// Solve a list of files with a worker pool; results come back in input
/// order regardless of scheduling.
pub fn run_bench(files: &[PathBuf], config: &RunConfig) -> Vec<BenchRecord> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<BenchRecord>>> = Mutex::new(vec![None; files.len()]);
    let workers = config.workers.min(files.len()).max(1);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::SeqCst);
                if idx >= files.len() {
                    break;
                }
                let record = bench_one(&files[idx], config);
                slots.lock().unwrap()[idx] = Some(record);
            });
        }
    });

    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every file produces a record"))
        .collect()
}

fn bench_one(path: &Path, config: &RunConfig) -> BenchRecord {
    let filename = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let error_record = |n, k| BenchRecord {
        filename: filename.clone(),
        variables: n,
        clauses: k,
        result: "error".into(),
        time_s: 0.0,
    };
    let Ok(f) = load_formula(path) else {
        return error_record(0, 0);
    };
    let (normalized, report) = cnf::normalize(&f);
    if report.has_empty_clause {
        return BenchRecord {
            filename,
            variables: f.n,
            clauses: f.num_clauses(),
            result: "unsat".into(),
            time_s: 0.0,
        };
    }
    let Ok(model) = build_model(&normalized, config.form, None) else {
        return error_record(f.n, f.num_clauses());
    };
    let outcome = solver::solve(&model, config.timeout());
    let result = match outcome.status {
        SolveStatus::Feasible(_) => "sat",
        SolveStatus::Infeasible => "unsat",
        SolveStatus::TimedOut => "timeout",
    };
    BenchRecord {
        filename,
        variables: f.n,
        clauses: f.num_clauses(),
        result: result.into(),
        time_s: outcome.elapsed,
    }
}

/// `limsat ssp`: print the digit table; with `dp`, also solve and decode.
pub fn cmd_ssp(
    input: &Path,
    radix: Option<u32>,
    dp: bool,
    value_limit: u128,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32 {
    let mut run = || -> Result<i32, String> {
        let f = load_formula(input)?;
        let (normalized, report) = cnf::normalize(&f);
        if report.has_empty_clause {
            return Err("formula contains an empty clause (trivially UNSAT)".into());
        }
        let radix = radix.unwrap_or_else(|| ssp::default_radix(&normalized));
        let inst = ssp::reduce_to_ssp(&normalized, radix).map_err(|e| e.to_string())?;
        let _ = write!(out, "{}", ssp::render_table(&inst));
        if !dp {
            return Ok(EXIT_OK);
        }
        match ssp::ssp_dp_solve(&inst, value_limit).map_err(|e| e.to_string())? {
            Some(selection) => {
                let labels: Vec<String> =
                    selection.chosen.iter().map(|l| l.render()).collect();
                let _ = writeln!(out, "subset: {}", labels.join(" "));
                let assignment = ssp::selection_to_assignment(&inst, &selection)
                    .map_err(|e| e.to_string())?;
                let _ = writeln!(out, "{}", witness_line(&assignment));
                Ok(EXIT_SAT)
            }
            None => {
                let _ = writeln!(out, "no subset");
                Ok(EXIT_UNSAT)
            }
        }
    };
    match run() {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

/// `limsat oracle`: brute-force enumeration ground truth.
pub fn cmd_oracle(
    input: &Path,
    max_vars: u32,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32 {
    let mut run = || -> Result<i32, String> {
        let f = load_formula(input)?;
        let verdict = cnf::brute_force_sat(&f, max_vars).map_err(|e| e.to_string())?;
        match verdict.status {
            SatStatus::Sat(a) => {
                let _ = writeln!(out, "SAT");
                let _ = writeln!(out, "{}", witness_line(&a));
                Ok(EXIT_SAT)
            }
            SatStatus::Unsat => {
                let _ = writeln!(out, "UNSAT");
                Ok(EXIT_UNSAT)
            }
            SatStatus::Unknown => Err("oracle returned unknown".into()),
        }
    };
    match run() {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

pub fn default_max_vars() -> u32 {
    DEFAULT_BRUTE_FORCE_LIMIT
}
