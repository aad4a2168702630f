//! CNF formulas: DIMACS parsing, normalization, evaluation and a
//! brute-force satisfiability oracle.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("non-integer token `{0}`")]
    NonIntegerToken(String),
    #[error("literal references variable {var} but header declares only {declared}")]
    VariableOutOfRange { var: u32, declared: u32 },
    #[error("header declares {declared} clauses but input contains {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("assignment has length {got}, formula has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("formula has {n} variables, exceeding the brute-force limit of {limit}")]
    TooManyVariables { n: u32, limit: u32 },
}

/// A variable `x_i` or its negation, `i` in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: u32,
    positive: bool,
}

impl Literal {
    pub fn new(var: u32, positive: bool) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        Literal { var, positive }
    }

    /// Build from a signed DIMACS literal (nonzero).
    pub fn from_dimacs(lit: i64) -> Self {
        assert!(lit != 0);
        Literal {
            var: lit.unsigned_abs() as u32,
            positive: lit > 0,
        }
    }

    pub fn var(&self) -> u32 {
        self.var
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negated(&self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn to_dimacs(&self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

/// A disjunction of literals. Order is preserved as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    pub fn width(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// True if the clause contains both a literal and its negation.
    pub fn is_tautology(&self) -> bool {
        self.literals
            .iter()
            .any(|l| self.literals.contains(&l.negated()))
    }
}

/// A CNF formula over variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub n: u32,
    pub clauses: Vec<Clause>,
    pub source_name: String,
}

/// Ternary valuation of the `n` variables; `None` is unassigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn unassigned(n: usize) -> Self {
        Assignment {
            values: vec![None; n],
        }
    }

    pub fn from_bools(values: &[bool]) -> Self {
        Assignment {
            values: values.iter().map(|&b| Some(b)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value of a literal: `Some(true)` if satisfied, `Some(false)` if
    /// falsified, `None` if the variable is unassigned.
    pub fn literal_value(&self, lit: Literal) -> Option<bool> {
        self.values[(lit.var() - 1) as usize].map(|v| v == lit.is_positive())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Satisfied,
    Falsified,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatStatus {
    Sat(Assignment),
    Unsat,
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SatVerdict {
    pub status: SatStatus,
    pub elapsed: f64,
}

/// What `normalize` changed or flagged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizeReport {
    /// Indices (in the input clause list) of clauses dropped as tautologies.
    pub tautologies_dropped: Vec<usize>,
    /// Indices of clauses that lost duplicate literals, with removal counts.
    pub duplicates_removed: Vec<(usize, usize)>,
    pub has_empty_clause: bool,
}

impl NormalizeReport {
    pub fn is_clean(&self) -> bool {
        self.tautologies_dropped.is_empty()
            && self.duplicates_removed.is_empty()
            && !self.has_empty_clause
    }
}

impl CnfFormula {
    pub fn new(n: u32, clauses: Vec<Clause>, source_name: impl Into<String>) -> Self {
        let f = CnfFormula {
            n,
            clauses,
            source_name: source_name.into(),
        };
        debug_assert!(f
            .clauses
            .iter()
            .flat_map(|c| &c.literals)
            .all(|l| l.var() <= f.n));
        f
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn max_clause_width(&self) -> usize {
        self.clauses.iter().map(Clause::width).max().unwrap_or(0)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    /// Canonical DIMACS text, one clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p cnf {} {}", self.n, self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for lit in &clause.literals {
                write!(out, "{} ", lit.to_dimacs()).unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parse DIMACS CNF. Comments (`c`), one `p cnf n k` header, clauses
/// terminated by `0` and possibly spanning lines. A SATLIB-style `%`
/// trailer ends the clause section; anything after it is ignored.
pub fn parse_dimacs(text: &str, source_name: &str) -> Result<CnfFormula, CnfError> {
    let mut declared: Option<(u32, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();

    'lines: for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let mut parts = trimmed.split_whitespace();
            let (_, kind) = (parts.next(), parts.next());
            if kind != Some("cnf") {
                return Err(CnfError::MissingHeader);
            }
            let n: u32 = parse_token(parts.next().ok_or(CnfError::MissingHeader)?)?;
            let k: usize = parse_token(parts.next().ok_or(CnfError::MissingHeader)?)?;
            declared = Some((n, k));
            continue;
        }
        let (n, _) = declared.ok_or(CnfError::MissingHeader)?;
        for token in trimmed.split_whitespace() {
            if token == "%" {
                break 'lines;
            }
            let lit: i64 = parse_token(token)?;
            if lit == 0 {
                clauses.push(Clause::new(std::mem::take(&mut current)));
                continue;
            }
            let var = lit.unsigned_abs();
            if var > n as u64 {
                return Err(CnfError::VariableOutOfRange {
                    var: var as u32,
                    declared: n,
                });
            }
            current.push(Literal::from_dimacs(lit));
        }
    }

    let (n, k) = declared.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        // unterminated final clause; accept it
        clauses.push(Clause::new(current));
    }
    if clauses.len() != k {
        return Err(CnfError::ClauseCountMismatch {
            declared: k,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula::new(n, clauses, source_name))
}

fn parse_token<T: std::str::FromStr>(token: &str) -> Result<T, CnfError> {
    token
        .parse()
        .map_err(|_| CnfError::NonIntegerToken(token.to_string()))
}

/// Remove duplicate literals within clauses and drop tautological clauses.
/// Empty clauses are kept and flagged in the report.
pub fn normalize(f: &CnfFormula) -> (CnfFormula, NormalizeReport) {
    let mut report = NormalizeReport::default();
    let mut clauses = Vec::with_capacity(f.clauses.len());
    for (idx, clause) in f.clauses.iter().enumerate() {
        if clause.is_tautology() {
            report.tautologies_dropped.push(idx);
            continue;
        }
        let mut seen = Vec::with_capacity(clause.width());
        let mut removed = 0usize;
        for &lit in &clause.literals {
            if seen.contains(&lit) {
                removed += 1;
            } else {
                seen.push(lit);
            }
        }
        if removed > 0 {
            report.duplicates_removed.push((idx, removed));
        }
        if seen.is_empty() {
            report.has_empty_clause = true;
        }
        clauses.push(Clause::new(seen));
    }
    (
        CnfFormula::new(f.n, clauses, f.source_name.clone()),
        report,
    )
}

/// Evaluate a formula under a (possibly partial) assignment.
pub fn evaluate(f: &CnfFormula, a: &Assignment) -> Result<ClauseStatus, CnfError> {
    if a.len() != f.n as usize {
        return Err(CnfError::LengthMismatch {
            expected: f.n as usize,
            got: a.len(),
        });
    }
    let mut all_satisfied = true;
    for clause in &f.clauses {
        let mut any_true = false;
        let mut all_false = true;
        for &lit in &clause.literals {
            match a.literal_value(lit) {
                Some(true) => {
                    any_true = true;
                    all_false = false;
                    break;
                }
                Some(false) => {}
                None => all_false = false,
            }
        }
        if clause.is_empty() {
            all_false = true;
        }
        if all_false {
            return Ok(ClauseStatus::Falsified);
        }
        if !any_true {
            all_satisfied = false;
        }
    }
    Ok(if all_satisfied {
        ClauseStatus::Satisfied
    } else {
        ClauseStatus::Undetermined
    })
}

pub const DEFAULT_BRUTE_FORCE_LIMIT: u32 = 25;

/// Exhaustive 2^n enumeration, the ground-truth oracle. Returns the first
/// satisfying assignment in lexicographic order (false before true).
pub fn brute_force_sat(f: &CnfFormula, max_vars: u32) -> Result<SatVerdict, CnfError> {
    if f.n > max_vars {
        return Err(CnfError::TooManyVariables {
            n: f.n,
            limit: max_vars,
        });
    }
    let start = Instant::now();
    let n = f.n as usize;
    let mut values = vec![false; n];
    loop {
        let a = Assignment::from_bools(&values);
        if evaluate(f, &a)? == ClauseStatus::Satisfied {
            return Ok(SatVerdict {
                status: SatStatus::Sat(a),
                elapsed: start.elapsed().as_secs_f64(),
            });
        }
        // lexicographic increment, most significant variable first
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(SatVerdict {
                    status: SatStatus::Unsat,
                    elapsed: start.elapsed().as_secs_f64(),
                });
            }
            i -= 1;
            if !values[i] {
                values[i] = true;
                values[i + 1..].iter_mut().for_each(|v| *v = false);
                break;
            }
        }
    }
}
