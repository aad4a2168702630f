//! Reduction from CNF to Subset-Sum via the classic digit construction,
//! plus a pseudo-polynomial solver and back-mapping to assignments.
//!
//! Numbers are digit vectors in an explicit radix: the `n` most significant
//! digits are labeled by variables, the `k` least significant by clauses.
//! The radix is chosen large enough that no column can carry, so digit-wise
//! reasoning about subset sums is exact.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::cnf::{Assignment, CnfFormula};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SspError {
    #[error("formula contains an empty clause; it is trivially unsatisfiable")]
    EmptyClause,
    #[error("radix {radix} is too small; need at least {needed} to avoid carries")]
    RadixTooSmall { radix: u32, needed: u32 },
    #[error("target value {value} exceeds the solver limit {limit}")]
    TargetTooLarge { value: u128, limit: u128 },
    #[error("selection is invalid: {0}")]
    InvalidSelection(String),
}

/// A non-negative number written as `n + k` digits in a fixed radix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitVector {
    pub radix: u32,
    pub digits: Vec<u32>,
}

impl DigitVector {
    pub fn zeros(radix: u32, len: usize) -> Self {
        DigitVector {
            radix,
            digits: vec![0; len],
        }
    }

    /// Integer value, or `None` on overflow of u128.
    pub fn value(&self) -> Option<u128> {
        let mut acc: u128 = 0;
        for &d in &self.digits {
            acc = acc.checked_mul(self.radix as u128)?;
            acc = acc.checked_add(d as u128)?;
        }
        Some(acc)
    }
}

/// Row identity in the subset-sum instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowLabel {
    /// `v_i`: choosing it sets variable `i` true.
    V(u32),
    /// `v'_i`: choosing it sets variable `i` false.
    Vneg(u32),
    /// `s_j`: slack worth 1 in clause column `j`.
    S(u32),
    /// `s'_j`: slack worth 2 in clause column `j`.
    Sneg2(u32),
}

impl RowLabel {
    pub fn render(&self) -> String {
        match self {
            RowLabel::V(i) => format!("v_{i}"),
            RowLabel::Vneg(i) => format!("v'_{i}"),
            RowLabel::S(j) => format!("s_{j}"),
            RowLabel::Sneg2(j) => format!("s'_{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SspInstance {
    pub radix: u32,
    pub n: u32,
    pub k: u32,
    pub rows: Vec<(RowLabel, DigitVector)>,
    pub target: DigitVector,
}

/// A subset of rows whose digit-wise sum hits the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSelection {
    pub chosen: Vec<RowLabel>,
}

/// Smallest radix guaranteeing no column carries: each clause column can
/// reach at most (clause width) literal ones plus 3 from slack.
pub fn default_radix(f: &CnfFormula) -> u32 {
    (f.max_clause_width() as u32 + 4).max(10)
}

/// Build the subset-sum instance: 2n variable rows, 2k slack rows, target
/// with 1 in each variable digit and 4 in each clause digit.
pub fn reduce_to_ssp(f: &CnfFormula, radix: u32) -> Result<SspInstance, SspError> {
    if f.has_empty_clause() {
        return Err(SspError::EmptyClause);
    }
    let needed = default_radix(f);
    if radix < needed {
        return Err(SspError::RadixTooSmall { radix, needed });
    }
    let n = f.n as usize;
    let k = f.num_clauses();
    let width = n + k;

    let mut rows = Vec::with_capacity(2 * (n + k));
    for i in 1..=f.n {
        let mut pos = DigitVector::zeros(radix, width);
        let mut neg = DigitVector::zeros(radix, width);
        pos.digits[(i - 1) as usize] = 1;
        neg.digits[(i - 1) as usize] = 1;
        for (j, clause) in f.clauses.iter().enumerate() {
            for lit in &clause.literals {
                if lit.var() == i {
                    if lit.is_positive() {
                        pos.digits[n + j] = 1;
                    } else {
                        neg.digits[n + j] = 1;
                    }
                }
            }
        }
        rows.push((RowLabel::V(i), pos));
        rows.push((RowLabel::Vneg(i), neg));
    }
    for j in 1..=k as u32 {
        let mut s1 = DigitVector::zeros(radix, width);
        let mut s2 = DigitVector::zeros(radix, width);
        s1.digits[n + (j - 1) as usize] = 1;
        s2.digits[n + (j - 1) as usize] = 2;
        rows.push((RowLabel::S(j), s1));
        rows.push((RowLabel::Sneg2(j), s2));
    }

    let mut target = DigitVector::zeros(radix, width);
    target.digits[..n].iter_mut().for_each(|d| *d = 1);
    target.digits[n..].iter_mut().for_each(|d| *d = 4);

    Ok(SspInstance {
        radix,
        n: f.n,
        k: k as u32,
        rows,
        target,
    })
}

pub const DEFAULT_VALUE_LIMIT: u128 = 100_000_000;

/// Find a subset of rows summing exactly to the target, or `None`.
///
/// Depth-first over rows in label order, exploring "skip" before "take",
/// with memoization of (row, remaining) states known to fail. The first
/// subset found in that order is returned, so results are deterministic.
pub fn ssp_dp_solve(
    inst: &SspInstance,
    value_limit: u128,
) -> Result<Option<SubsetSelection>, SspError> {
    let target = inst
        .target
        .value()
        .ok_or(SspError::TargetTooLarge {
            value: u128::MAX,
            limit: value_limit,
        })?;
    if target > value_limit {
        return Err(SspError::TargetTooLarge {
            value: target,
            limit: value_limit,
        });
    }

    let values: Vec<u128> = inst
        .rows
        .iter()
        .map(|(_, dv)| dv.value().expect("row value fits if target does"))
        .collect();
    // suffix sums bound what the remaining rows can still contribute
    let mut suffix = vec![0u128; values.len() + 1];
    for i in (0..values.len()).rev() {
        suffix[i] = suffix[i + 1] + values[i];
    }

    let mut dead: HashSet<(usize, u128)> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    if search(&values, &suffix, 0, target, &mut chosen, &mut dead) {
        let labels = chosen.iter().map(|&i| inst.rows[i].0).collect();
        let sel = SubsetSelection { chosen: labels };
        debug_assert!(selection_sum(inst, &sel) == Some(inst.target.digits.clone()));
        Ok(Some(sel))
    } else {
        Ok(None)
    }
}

fn search(
    values: &[u128],
    suffix: &[u128],
    i: usize,
    remaining: u128,
    chosen: &mut Vec<usize>,
    dead: &mut HashSet<(usize, u128)>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    if i == values.len() || suffix[i] < remaining || dead.contains(&(i, remaining)) {
        return false;
    }
    if search(values, suffix, i + 1, remaining, chosen, dead) {
        return true;
    }
    if values[i] <= remaining {
        chosen.push(i);
        if search(values, suffix, i + 1, remaining - values[i], chosen, dead) {
            return true;
        }
        chosen.pop();
    }
    dead.insert((i, remaining));
    false
}

/// Digit-wise sum of the selected rows, or `None` if a label is unknown.
fn selection_sum(inst: &SspInstance, sel: &SubsetSelection) -> Option<Vec<u32>> {
    let mut sum = vec![0u32; inst.target.digits.len()];
    for label in &sel.chosen {
        let (_, dv) = inst.rows.iter().find(|(l, _)| l == label)?;
        for (acc, &d) in sum.iter_mut().zip(&dv.digits) {
            *acc += d;
        }
    }
    Some(sum)
}

/// Decode a valid selection: `v_i` chosen means true, `v'_i` false.
pub fn selection_to_assignment(
    inst: &SspInstance,
    sel: &SubsetSelection,
) -> Result<Assignment, SspError> {
    let sum = selection_sum(inst, sel)
        .ok_or_else(|| SspError::InvalidSelection("unknown row label".into()))?;
    if sum != inst.target.digits {
        return Err(SspError::InvalidSelection(
            "selected rows do not sum to the target".into(),
        ));
    }
    let mut values = vec![None; inst.n as usize];
    for label in &sel.chosen {
        match label {
            RowLabel::V(i) => {
                if values[(i - 1) as usize].is_some() {
                    return Err(SspError::InvalidSelection(format!(
                        "variable {i} chosen twice"
                    )));
                }
                values[(i - 1) as usize] = Some(true);
            }
            RowLabel::Vneg(i) => {
                if values[(i - 1) as usize].is_some() {
                    return Err(SspError::InvalidSelection(format!(
                        "variable {i} chosen twice"
                    )));
                }
                values[(i - 1) as usize] = Some(false);
            }
            RowLabel::S(_) | RowLabel::Sneg2(_) => {}
        }
    }
    if values.iter().any(Option::is_none) {
        return Err(SspError::InvalidSelection(
            "some variable has neither row chosen".into(),
        ));
    }
    Ok(Assignment { values })
}

/// Render the instance as an aligned grid: columns `X1..Xn C1..Ck`,
/// rows `v_1, v'_1, ..., s_1, s'_1, ..., t`.
pub fn render_table(inst: &SspInstance) -> String {
    let mut header: Vec<String> = vec![String::new()];
    header.extend((1..=inst.n).map(|i| format!("X{i}")));
    header.extend((1..=inst.k).map(|j| format!("C{j}")));

    let mut grid: Vec<Vec<String>> = vec![header];
    for (label, dv) in &inst.rows {
        let mut row = vec![label.render()];
        row.extend(dv.digits.iter().map(u32::to_string));
        grid.push(row);
    }
    let mut trow = vec!["t".to_string()];
    trow.extend(inst.target.digits.iter().map(u32::to_string));
    grid.push(trow);

    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            write!(out, "{:>width$}", cell, width = widths[c]).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Line-oriented machine-readable dump: `<label> <d_1> ... <d_{n+k}>`.
pub fn dump_rows(inst: &SspInstance) -> String {
    let mut out = String::new();
    for (label, dv) in &inst.rows {
        out.push_str(&label.render());
        for d in &dv.digits {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    out.push('t');
    for d in &inst.target.digits {
        write!(out, " {d}").unwrap();
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{brute_force_sat, evaluate, parse_dimacs, ClauseStatus, SatStatus};
    use crate::gen::demo_formula;

    #[test]
    fn demo_instance_matches_known_rows() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        assert_eq!(inst.rows.len(), 14);
        let row = |label: RowLabel| {
            inst.rows
                .iter()
                .find(|(l, _)| *l == label)
                .map(|(_, dv)| dv.digits.clone())
                .unwrap()
        };
        assert_eq!(row(RowLabel::V(1)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(row(RowLabel::Vneg(2)), vec![0, 1, 0, 1, 1, 1, 0]);
        assert_eq!(inst.target.digits, vec![1, 1, 1, 4, 4, 4, 4]);
    }

    #[test]
    fn demo_target_value_in_radix_10() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        assert_eq!(inst.target.value(), Some(1_114_444));
    }

    #[test]
    fn single_clause_instance() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n", "unit").unwrap();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let digits: Vec<(RowLabel, Vec<u32>)> = inst
            .rows
            .iter()
            .map(|(l, dv)| (*l, dv.digits.clone()))
            .collect();
        assert_eq!(
            digits,
            vec![
                (RowLabel::V(1), vec![1, 1]),
                (RowLabel::Vneg(1), vec![1, 0]),
                (RowLabel::S(1), vec![0, 1]),
                (RowLabel::Sneg2(1), vec![0, 2]),
            ]
        );
        assert_eq!(inst.target.digits, vec![1, 4]);
    }

    #[test]
    fn rejects_small_radix() {
        let f = demo_formula();
        assert_eq!(
            reduce_to_ssp(&f, 7),
            Err(SspError::RadixTooSmall {
                radix: 7,
                needed: 10
            })
        );
    }

    #[test]
    fn rejects_empty_clause() {
        let f = parse_dimacs("p cnf 1 1\n0\n", "empty").unwrap();
        assert_eq!(reduce_to_ssp(&f, 10), Err(SspError::EmptyClause));
    }

    #[test]
    fn no_carry_invariant() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, default_radix(&f)).unwrap();
        for col in 0..inst.target.digits.len() {
            let max_sum: u32 = inst.rows.iter().map(|(_, dv)| dv.digits[col]).sum();
            assert!(max_sum < inst.radix, "column {col} could carry");
        }
    }

    #[test]
    fn dp_solves_demo_instance() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let sel = ssp_dp_solve(&inst, DEFAULT_VALUE_LIMIT).unwrap().unwrap();
        let a = selection_to_assignment(&inst, &sel).unwrap();
        assert_eq!(evaluate(&f, &a).unwrap(), ClauseStatus::Satisfied);
    }

    #[test]
    fn dp_reports_no_subset_for_contradiction() {
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n", "contra").unwrap();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        assert_eq!(ssp_dp_solve(&inst, DEFAULT_VALUE_LIMIT).unwrap(), None);
    }

    #[test]
    fn dp_empty_formula_yields_empty_selection() {
        let f = parse_dimacs("p cnf 0 0\n", "void").unwrap();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let sel = ssp_dp_solve(&inst, DEFAULT_VALUE_LIMIT).unwrap().unwrap();
        assert!(sel.chosen.is_empty());
        let a = selection_to_assignment(&inst, &sel).unwrap();
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn dp_guards_target_value() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        assert_eq!(
            ssp_dp_solve(&inst, 1000),
            Err(SspError::TargetTooLarge {
                value: 1_114_444,
                limit: 1000
            })
        );
    }

    #[test]
    fn decode_known_selection() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let sel = SubsetSelection {
            chosen: vec![
                RowLabel::V(1),
                RowLabel::Vneg(2),
                RowLabel::V(3),
                RowLabel::Sneg2(1),
                RowLabel::S(2),
                RowLabel::Sneg2(2),
                RowLabel::Sneg2(3),
                RowLabel::Sneg2(4),
            ],
        };
        let a = selection_to_assignment(&inst, &sel).unwrap();
        assert_eq!(a.values, vec![Some(true), Some(false), Some(true)]);
        assert_eq!(evaluate(&f, &a).unwrap(), ClauseStatus::Satisfied);
    }

    #[test]
    fn decode_rejects_double_choice() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let sel = SubsetSelection {
            chosen: vec![RowLabel::V(1), RowLabel::Vneg(1)],
        };
        assert!(matches!(
            selection_to_assignment(&inst, &sel),
            Err(SspError::InvalidSelection(_))
        ));
    }

    #[test]
    fn table_layout() {
        let f = demo_formula();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        let table = render_table(&inst);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 16); // header + 14 rows + t
        assert!(lines[0].contains("X1") && lines[0].contains("C4"));
        let t = lines.last().unwrap();
        assert!(t.trim_start().starts_with('t'));
        assert_eq!(
            t.split_whitespace().skip(1).collect::<Vec<_>>(),
            vec!["1", "1", "1", "4", "4", "4", "4"]
        );
    }

    #[test]
    fn table_single_clause_has_five_rows() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n", "unit").unwrap();
        let inst = reduce_to_ssp(&f, 10).unwrap();
        // header + 4 rows + t
        assert_eq!(render_table(&inst).lines().count(), 6);
    }

    #[test]
    fn dp_agrees_with_oracle_on_small_formulas() {
        use crate::gen::random_3cnf;
        for seed in 0..30u64 {
            let f = random_3cnf(5, 7, seed);
            let inst = reduce_to_ssp(&f, default_radix(&f)).unwrap();
            let sel = ssp_dp_solve(&inst, u128::MAX >> 1).unwrap();
            let verdict = brute_force_sat(&f, 25).unwrap();
            match (sel, verdict.status) {
                (Some(sel), SatStatus::Sat(_)) => {
                    let a = selection_to_assignment(&inst, &sel).unwrap();
                    assert_eq!(evaluate(&f, &a).unwrap(), ClauseStatus::Satisfied);
                }
                (None, SatStatus::Unsat) => {}
                (sel, status) => panic!("seed {seed}: dp={sel:?} oracle={status:?}"),
            }
        }
    }
}
