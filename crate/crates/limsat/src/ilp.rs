//! The 0-1 integer linear programming model of a CNF formula.
//!
//! Each variable `x_i` contributes two binaries: `p_i` (positive literal
//! chosen) and `q_i` (negative literal chosen). The literal-row incidence
//! matrix splits into `A1` (2n x n, variable columns) and `A2` (2n x k,
//! clause columns). Feasibility of `xA1 <= 1` and `xA2 >= 1` over binary
//! `x` is equivalent to satisfiability of the formula.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cnf::{Assignment, CnfFormula};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IlpError {
    #[error("formula contains an empty clause; it is trivially unsatisfiable")]
    EmptyClause,
    #[error("A1 has {a1_rows} rows but A2 has {a2_rows}")]
    DimensionMismatch { a1_rows: usize, a2_rows: usize },
    #[error("LP parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("witness violates constraint {index}")]
    InfeasibleWitness { index: usize },
}

/// Integer matrix in sorted triplet form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, i64)>) -> Self {
        entries.sort_by_key(|&(r, c, _)| (r, c));
        debug_assert!(entries.windows(2).all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1)));
        debug_assert!(entries.iter().all(|&(r, c, _)| r < rows && c < cols));
        SparseMatrix { rows, cols, entries }
    }

    /// Entries of one column as (row, coefficient), in row order.
    pub fn column(&self, col: usize) -> Vec<(usize, i64)> {
        self.entries
            .iter()
            .filter(|&&(_, c, _)| c == col)
            .map(|&(r, _, v)| (r, v))
            .collect()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

/// One linear constraint over the 2n binaries, terms sorted by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(usize, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModelForm {
    /// n constraints `xA1 <= 1` plus k constraints `xA2 >= 1`.
    #[default]
    TwoBlock,
    /// n + k constraints, all `<=`, the clause block negated with rhs -1.
    Combined,
}

impl ModelForm {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "twoblock" => Some(ModelForm::TwoBlock),
            "combined" => Some(ModelForm::Combined),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    /// 2n binaries; index 2i-2 is `p_i`, index 2i-1 is `q_i`.
    pub num_binaries: usize,
    pub constraints: Vec<Constraint>,
    /// Kept for exchange-format export; the model is solved as feasibility.
    pub objective: Vec<i64>,
}

/// Candidate solution: 0/1 value per binary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySolution {
    pub values: Vec<u8>,
}

impl BinarySolution {
    pub fn from_bits(bits: u64, len: usize) -> Self {
        BinarySolution {
            values: (0..len).map(|i| ((bits >> i) & 1) as u8).collect(),
        }
    }
}

impl IlpModel {
    /// Index of the first constraint a solution violates, if any.
    pub fn violated_constraint(&self, x: &BinarySolution) -> Option<usize> {
        self.constraints.iter().position(|c| {
            let lhs: i64 = c
                .terms
                .iter()
                .map(|&(i, coeff)| coeff * x.values[i] as i64)
                .sum();
            match c.sense {
                Sense::Le => lhs > c.rhs,
                Sense::Ge => lhs < c.rhs,
            }
        })
    }

    pub fn is_feasible(&self, x: &BinarySolution) -> bool {
        self.violated_constraint(x).is_none()
    }
}

/// Name of binary `index`: `p_i` for positive literals, `q_i` for negative.
pub fn binary_name(index: usize) -> String {
    let var = index / 2 + 1;
    if index % 2 == 0 {
        format!("p_{var}")
    } else {
        format!("q_{var}")
    }
}

fn parse_binary_name(name: &str) -> Option<usize> {
    let (kind, var) = name.split_once('_')?;
    let var: usize = var.parse().ok()?;
    if var == 0 {
        return None;
    }
    match kind {
        "p" => Some((var - 1) * 2),
        "q" => Some((var - 1) * 2 + 1),
        _ => None,
    }
}

/// Build the literal-row incidence blocks: `A1[2i-2][i-1] = A1[2i-1][i-1] = 1`;
/// `A2[2i-2][j-1] = 1` iff `x_i` is in clause j, `A2[2i-1][j-1] = 1` iff
/// `-x_i` is. Works for general CNF, not just 3-CNF.
pub fn build_matrices(f: &CnfFormula) -> Result<(SparseMatrix, SparseMatrix), IlpError> {
    if f.has_empty_clause() {
        return Err(IlpError::EmptyClause);
    }
    let n = f.n as usize;
    let k = f.num_clauses();

    let mut a1 = Vec::with_capacity(2 * n);
    for i in 0..n {
        a1.push((2 * i, i, 1));
        a1.push((2 * i + 1, i, 1));
    }

    let mut a2 = Vec::new();
    for (j, clause) in f.clauses.iter().enumerate() {
        for lit in &clause.literals {
            let i = (lit.var() - 1) as usize;
            let row = if lit.is_positive() { 2 * i } else { 2 * i + 1 };
            a2.push((row, j, 1));
        }
    }

    Ok((
        SparseMatrix::new(2 * n, n, a1),
        SparseMatrix::new(2 * n, k, a2),
    ))
}

/// Assemble the feasibility model from the two blocks.
pub fn build_limsat_model(
    a1: &SparseMatrix,
    a2: &SparseMatrix,
    form: ModelForm,
) -> Result<IlpModel, IlpError> {
    build_limsat_model_with(a1, a2, form, None)
}

/// Like [`build_limsat_model`], optionally appending `xA2 <= bound` rows
/// (the experimental clause upper bounds, off by default).
pub fn build_limsat_model_with(
    a1: &SparseMatrix,
    a2: &SparseMatrix,
    form: ModelForm,
    clause_upper_bound: Option<i64>,
) -> Result<IlpModel, IlpError> {
    if a1.rows != a2.rows {
        return Err(IlpError::DimensionMismatch {
            a1_rows: a1.rows,
            a2_rows: a2.rows,
        });
    }
    let num_binaries = a1.rows;
    let mut constraints = Vec::with_capacity(a1.cols + a2.cols);
    for j in 0..a1.cols {
        constraints.push(Constraint {
            name: format!("var_{}", j + 1),
            terms: a1.column(j),
            sense: Sense::Le,
            rhs: 1,
        });
    }
    for j in 0..a2.cols {
        let terms = a2.column(j);
        constraints.push(match form {
            ModelForm::TwoBlock => Constraint {
                name: format!("cl_{}", j + 1),
                terms,
                sense: Sense::Ge,
                rhs: 1,
            },
            ModelForm::Combined => Constraint {
                name: format!("cl_{}", j + 1),
                terms: terms.into_iter().map(|(i, c)| (i, -c)).collect(),
                sense: Sense::Le,
                rhs: -1,
            },
        });
    }
    if let Some(bound) = clause_upper_bound {
        for j in 0..a2.cols {
            constraints.push(Constraint {
                name: format!("ub_{}", j + 1),
                terms: a2.column(j),
                sense: Sense::Le,
                rhs: bound,
            });
        }
    }
    Ok(IlpModel {
        num_binaries,
        constraints,
        objective: vec![1; num_binaries],
    })
}

fn write_terms(out: &mut String, terms: &[(usize, i64)]) {
    for (pos, &(i, coeff)) in terms.iter().enumerate() {
        let name = binary_name(i);
        if pos == 0 {
            match coeff {
                1 => write!(out, "{name}"),
                -1 => write!(out, "- {name}"),
                c => write!(out, "{c} {name}"),
            }
            .unwrap();
        } else {
            let sign = if coeff < 0 { '-' } else { '+' };
            match coeff.abs() {
                1 => write!(out, " {sign} {name}"),
                c => write!(out, " {sign} {c} {name}"),
            }
            .unwrap();
        }
    }
}

/// CPLEX-style LP text: objective, named constraints, `Binary` section.
/// Byte-deterministic for a given model.
pub fn export_lp(m: &IlpModel) -> String {
    let mut out = String::from("Minimize\n obj: ");
    let obj_terms: Vec<(usize, i64)> = m
        .objective
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    write_terms(&mut out, &obj_terms);
    out.push_str("\nSubject To\n");
    for c in &m.constraints {
        write!(out, " {}: ", c.name).unwrap();
        write_terms(&mut out, &c.terms);
        let sense = match c.sense {
            Sense::Le => "<=",
            Sense::Ge => ">=",
        };
        writeln!(out, " {} {}", sense, c.rhs).unwrap();
    }
    out.push_str("Binary\n");
    for i in 0..m.num_binaries {
        writeln!(out, " {}", binary_name(i)).unwrap();
    }
    out.push_str("End\n");
    out
}

/// Parse LP text produced by [`export_lp`]. Not a general LP reader.
pub fn import_lp(text: &str) -> Result<IlpModel, IlpError> {
    #[derive(PartialEq)]
    enum Section {
        Start,
        Objective,
        Constraints,
        Binary,
        Done,
    }
    let err = |line: usize, message: &str| IlpError::ParseError {
        line,
        message: message.to_string(),
    };

    let mut section = Section::Start;
    let mut objective_terms: Vec<(usize, i64)> = Vec::new();
    let mut constraints: Vec<Constraint> = Vec::new();
    let mut binaries: Vec<usize> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "Minimize" => {
                section = Section::Objective;
                continue;
            }
            "Subject To" => {
                section = Section::Constraints;
                continue;
            }
            "Binary" => {
                section = Section::Binary;
                continue;
            }
            "End" => {
                section = Section::Done;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Start | Section::Done => return Err(err(lineno + 1, "unexpected line")),
            Section::Objective => {
                let body = line
                    .strip_prefix("obj:")
                    .ok_or_else(|| err(lineno + 1, "missing obj label"))?;
                objective_terms = parse_terms(body, lineno + 1)?;
            }
            Section::Constraints => {
                let (name, rest) = line
                    .split_once(':')
                    .ok_or_else(|| err(lineno + 1, "missing constraint name"))?;
                let (sense, parts) = if let Some((lhs, rhs)) = rest.split_once("<=") {
                    (Sense::Le, (lhs, rhs))
                } else if let Some((lhs, rhs)) = rest.split_once(">=") {
                    (Sense::Ge, (lhs, rhs))
                } else {
                    return Err(err(lineno + 1, "missing sense"));
                };
                let terms = parse_terms(parts.0, lineno + 1)?;
                let rhs: i64 = parts
                    .1
                    .trim()
                    .parse()
                    .map_err(|_| err(lineno + 1, "bad rhs"))?;
                constraints.push(Constraint {
                    name: name.trim().to_string(),
                    terms,
                    sense,
                    rhs,
                });
            }
            Section::Binary => {
                let idx = parse_binary_name(line)
                    .ok_or_else(|| err(lineno + 1, "bad binary name"))?;
                binaries.push(idx);
            }
        }
    }
    if section != Section::Done {
        return Err(err(text.lines().count(), "missing End"));
    }

    let num_binaries = binaries.iter().map(|&i| i + 1).max().unwrap_or(0);
    let mut objective = vec![0i64; num_binaries];
    for (i, c) in objective_terms {
        if i >= num_binaries {
            return Err(err(0, "objective references undeclared binary"));
        }
        objective[i] = c;
    }
    Ok(IlpModel {
        num_binaries,
        constraints,
        objective,
    })
}

fn parse_terms(body: &str, lineno: usize) -> Result<Vec<(usize, i64)>, IlpError> {
    let err = |message: &str| IlpError::ParseError {
        line: lineno,
        message: message.to_string(),
    };
    let mut terms = Vec::new();
    let mut sign: i64 = 1;
    let mut coeff: Option<i64> = None;
    for token in body.split_whitespace() {
        match token {
            "+" => sign = 1,
            "-" => sign = -1,
            _ => {
                if let Ok(c) = token.parse::<i64>() {
                    if coeff.is_some() {
                        return Err(err("two coefficients in a row"));
                    }
                    coeff = Some(c);
                } else {
                    let idx = parse_binary_name(token).ok_or_else(|| err("bad variable"))?;
                    terms.push((idx, sign * coeff.take().unwrap_or(1)));
                    sign = 1;
                }
            }
        }
    }
    if coeff.is_some() {
        return Err(err("dangling coefficient"));
    }
    terms.sort_by_key(|&(i, _)| i);
    Ok(terms)
}

/// Fixed-format MPS text with BV bounds for every binary.
pub fn export_mps(m: &IlpModel) -> String {
    let mut out = String::new();
    writeln!(out, "NAME          LIMSAT").unwrap();
    out.push_str("ROWS\n");
    out.push_str(" N  COST\n");
    for c in &m.constraints {
        let tag = match c.sense {
            Sense::Le => 'L',
            Sense::Ge => 'G',
        };
        writeln!(out, " {}  {}", tag, c.name).unwrap();
    }
    out.push_str("COLUMNS\n");
    for i in 0..m.num_binaries {
        let name = binary_name(i);
        if m.objective[i] != 0 {
            writeln!(out, "    {:<10}{:<10}{}", name, "COST", m.objective[i]).unwrap();
        }
        for c in &m.constraints {
            if let Some(&(_, coeff)) = c.terms.iter().find(|&&(t, _)| t == i) {
                writeln!(out, "    {:<10}{:<10}{}", name, c.name, coeff).unwrap();
            }
        }
    }
    out.push_str("RHS\n");
    for c in &m.constraints {
        if c.rhs != 0 {
            writeln!(out, "    {:<10}{:<10}{}", "RHS", c.name, c.rhs).unwrap();
        }
    }
    out.push_str("BOUNDS\n");
    for i in 0..m.num_binaries {
        writeln!(out, " BV {:<10}{}", "BND", binary_name(i)).unwrap();
    }
    out.push_str("ENDATA\n");
    out
}

/// Map a feasible solution back to variable values: `p_i = 1` means true,
/// `q_i = 1` means false, both zero defaults to false.
pub fn solution_to_assignment(
    m: &IlpModel,
    x: &BinarySolution,
    f: &CnfFormula,
) -> Result<Assignment, IlpError> {
    if let Some(index) = m.violated_constraint(x) {
        return Err(IlpError::InfeasibleWitness { index });
    }
    let values = (0..f.n as usize)
        .map(|i| {
            if x.values[2 * i] == 1 {
                Some(true)
            } else {
                Some(false)
            }
        })
        .collect();
    Ok(Assignment { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{brute_force_sat, evaluate, parse_dimacs, ClauseStatus, SatStatus};
    use crate::gen::{demo_formula, random_3cnf};

    fn demo_model(form: ModelForm) -> IlpModel {
        let f = demo_formula();
        let (a1, a2) = build_matrices(&f).unwrap();
        build_limsat_model(&a1, &a2, form).unwrap()
    }

    #[test]
    fn matrices_match_known_rows() {
        let f = demo_formula();
        let (a1, a2) = build_matrices(&f).unwrap();
        assert_eq!(a1.rows, 6);
        assert_eq!(a1.cols, 3);
        assert_eq!(a2.cols, 4);
        // row 0 is p_1: x1 in C1 and C4; row 3 is q_2: -x2 in C1, C2, C3
        assert_eq!(a2.column(0), vec![(0, 1), (3, 1), (5, 1)]);
        let row3: Vec<usize> = a2
            .entries
            .iter()
            .filter(|&&(r, _, _)| r == 3)
            .map(|&(_, c, _)| c)
            .collect();
        assert_eq!(row3, vec![0, 1, 2]);
    }

    #[test]
    fn matrices_of_unit_clause() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n", "unit").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        assert_eq!(a1.entries, vec![(0, 0, 1), (1, 0, 1)]);
        assert_eq!(a2.entries, vec![(0, 0, 1)]);
    }

    #[test]
    fn sparsity_matches_literal_count() {
        let f = random_3cnf(20, 91, 3);
        let (a1, a2) = build_matrices(&f).unwrap();
        assert_eq!(a1.num_entries(), 40);
        let widths: usize = f.clauses.iter().map(|c| c.width()).sum();
        assert_eq!(a2.num_entries(), widths);
        assert_eq!(widths, 273);
    }

    #[test]
    fn rejects_empty_clause() {
        let f = parse_dimacs("p cnf 1 1\n0\n", "empty").unwrap();
        assert_eq!(build_matrices(&f), Err(IlpError::EmptyClause));
    }

    #[test]
    fn two_block_model_shape() {
        let m = demo_model(ModelForm::TwoBlock);
        assert_eq!(m.num_binaries, 6);
        assert_eq!(m.constraints.len(), 7);
        let le: Vec<_> = m.constraints.iter().filter(|c| c.sense == Sense::Le).collect();
        let ge: Vec<_> = m.constraints.iter().filter(|c| c.sense == Sense::Ge).collect();
        assert_eq!(le.len(), 3);
        assert_eq!(ge.len(), 4);
        assert!(le.iter().all(|c| c.rhs == 1));
        assert!(ge.iter().all(|c| c.rhs == 1));
    }

    #[test]
    fn combined_model_shape() {
        let m = demo_model(ModelForm::Combined);
        assert_eq!(m.constraints.len(), 7);
        assert!(m.constraints.iter().all(|c| c.sense == Sense::Le));
        let rhs: Vec<i64> = m.constraints.iter().map(|c| c.rhs).collect();
        assert_eq!(rhs, vec![1, 1, 1, -1, -1, -1, -1]);
    }

    #[test]
    fn known_solution_is_feasible_in_both_forms() {
        // choose p_1, q_2, p_3
        let x = BinarySolution {
            values: vec![1, 0, 0, 1, 1, 0],
        };
        assert!(demo_model(ModelForm::TwoBlock).is_feasible(&x));
        assert!(demo_model(ModelForm::Combined).is_feasible(&x));
    }

    #[test]
    fn form_equivalence_exhaustive() {
        for seed in 0..10u64 {
            let f = random_3cnf(4, 6, seed);
            let (a1, a2) = build_matrices(&f).unwrap();
            let two = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
            let comb = build_limsat_model(&a1, &a2, ModelForm::Combined).unwrap();
            for bits in 0u64..(1 << two.num_binaries) {
                let x = BinarySolution::from_bits(bits, two.num_binaries);
                assert_eq!(two.is_feasible(&x), comb.is_feasible(&x), "seed {seed} bits {bits}");
            }
        }
    }

    #[test]
    fn feasibility_matches_oracle() {
        for seed in 0..40u64 {
            let f = random_3cnf(6, 26, seed);
            let (a1, a2) = build_matrices(&f).unwrap();
            let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
            let feasible = (0u64..(1 << m.num_binaries))
                .any(|bits| m.is_feasible(&BinarySolution::from_bits(bits, m.num_binaries)));
            let sat = matches!(
                brute_force_sat(&f, 25).unwrap().status,
                SatStatus::Sat(_)
            );
            assert_eq!(feasible, sat, "seed {seed}");
        }
    }

    #[test]
    fn lp_export_contains_expected_lines() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n", "unit").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
        let lp = export_lp(&m);
        assert!(lp.contains("p_1 + q_1 <= 1"));
        assert!(lp.contains("p_1 >= 1"));
    }

    #[test]
    fn lp_export_names_clause_constraints() {
        let lp = export_lp(&demo_model(ModelForm::TwoBlock));
        assert!(lp.contains("cl_2: q_1 + q_2 + q_3 >= 1"));
    }

    #[test]
    fn lp_round_trip() {
        for form in [ModelForm::TwoBlock, ModelForm::Combined] {
            let m = demo_model(form);
            assert_eq!(import_lp(&export_lp(&m)).unwrap(), m);
        }
    }

    #[test]
    fn lp_round_trip_empty_model() {
        let f = parse_dimacs("p cnf 0 0\n", "void").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
        assert_eq!(import_lp(&export_lp(&m)).unwrap(), m);
    }

    #[test]
    fn import_rejects_garbage() {
        assert!(matches!(
            import_lp("this is not an lp file"),
            Err(IlpError::ParseError { .. })
        ));
    }

    #[test]
    fn mps_export_shape() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n", "unit").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
        let mps = export_mps(&m);
        assert!(mps.contains(" BV BND       p_1"));
        let demo = export_mps(&demo_model(ModelForm::TwoBlock));
        let row_lines = demo
            .lines()
            .skip_while(|l| *l != "ROWS")
            .skip(1)
            .take_while(|l| *l != "COLUMNS")
            .count();
        assert_eq!(row_lines, 8); // objective + 7 constraints
    }

    #[test]
    fn mps_export_empty_model() {
        let f = parse_dimacs("p cnf 0 0\n", "void").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
        let mps = export_mps(&m);
        for section in ["NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "ENDATA"] {
            assert!(mps.contains(section));
        }
    }

    #[test]
    fn solution_maps_to_satisfying_assignment() {
        let f = demo_formula();
        let m = demo_model(ModelForm::TwoBlock);
        let x = BinarySolution {
            values: vec![1, 0, 0, 1, 1, 0],
        };
        let a = solution_to_assignment(&m, &x, &f).unwrap();
        assert_eq!(a.values, vec![Some(true), Some(false), Some(true)]);
        assert_eq!(evaluate(&f, &a).unwrap(), ClauseStatus::Satisfied);
    }

    #[test]
    fn infeasible_witness_rejected() {
        let f = demo_formula();
        let m = demo_model(ModelForm::TwoBlock);
        let x = BinarySolution {
            values: vec![1, 1, 0, 1, 1, 0],
        };
        assert!(matches!(
            solution_to_assignment(&m, &x, &f),
            Err(IlpError::InfeasibleWitness { .. })
        ));
    }

    #[test]
    fn unused_variable_defaults_to_false() {
        let f = parse_dimacs("p cnf 2 1\n1 0\n", "gap").unwrap();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model(&a1, &a2, ModelForm::TwoBlock).unwrap();
        let x = BinarySolution {
            values: vec![1, 0, 0, 0],
        };
        let a = solution_to_assignment(&m, &x, &f).unwrap();
        assert_eq!(a.values[1], Some(false));
    }

    #[test]
    fn clause_upper_bound_flag_appends_rows() {
        let f = demo_formula();
        let (a1, a2) = build_matrices(&f).unwrap();
        let m = build_limsat_model_with(&a1, &a2, ModelForm::TwoBlock, Some(3)).unwrap();
        assert_eq!(m.constraints.len(), 11);
        assert!(m.constraints.iter().any(|c| c.name == "ub_4" && c.rhs == 3));
    }
}
