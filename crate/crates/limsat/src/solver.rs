//! Built-in 0-1 feasibility engine: bound propagation over constraint
//! activities plus depth-first branch-and-bound with a wall-clock timeout.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::ilp::{BinarySolution, IlpModel, Sense};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("no free binary left to branch on")]
    NoFreeBinary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Feasible(BinarySolution),
    Infeasible,
    TimedOut,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub propagations: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub elapsed: f64,
    pub stats: SolveStats,
}

/// Partial fixing of the binaries plus per-constraint activity bounds.
///
/// For every constraint, `min_act` is the smallest achievable left-hand
/// side given the current fixing (free binaries with negative coefficients
/// counted in) and `max_act` the largest.
#[derive(Debug, Clone)]
pub struct SearchState {
    pub fixed: Vec<Option<u8>>,
    min_act: Vec<i64>,
    max_act: Vec<i64>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum PropagateResult {
    Fixpoint,
    Conflict,
}

impl SearchState {
    pub fn new(m: &IlpModel) -> Self {
        let mut min_act = Vec::with_capacity(m.constraints.len());
        let mut max_act = Vec::with_capacity(m.constraints.len());
        for c in &m.constraints {
            let neg: i64 = c.terms.iter().map(|&(_, v)| v.min(0)).sum();
            let pos: i64 = c.terms.iter().map(|&(_, v)| v.max(0)).sum();
            min_act.push(neg);
            max_act.push(pos);
        }
        SearchState {
            fixed: vec![None; m.num_binaries],
            min_act,
            max_act,
        }
    }

    pub fn num_free(&self) -> usize {
        self.fixed.iter().filter(|f| f.is_none()).count()
    }

    /// Fix one binary, updating activities. Records the move on the trail.
    fn fix(&mut self, m: &IlpModel, occ: &Occurrences, index: usize, value: u8, trail: &mut Vec<usize>) {
        debug_assert!(self.fixed[index].is_none());
        self.fixed[index] = Some(value);
        trail.push(index);
        for &(ci, coeff) in &occ.per_binary[index] {
            if coeff > 0 {
                if value == 1 {
                    self.min_act[ci] += coeff;
                } else {
                    self.max_act[ci] -= coeff;
                }
            } else if value == 1 {
                self.max_act[ci] += coeff;
            } else {
                self.min_act[ci] -= coeff;
            }
        }
        let _ = m;
    }

    fn unfix(&mut self, occ: &Occurrences, index: usize) {
        let value = self.fixed[index].take().expect("unfix of free binary");
        for &(ci, coeff) in &occ.per_binary[index] {
            if coeff > 0 {
                if value == 1 {
                    self.min_act[ci] -= coeff;
                } else {
                    self.max_act[ci] += coeff;
                }
            } else if value == 1 {
                self.max_act[ci] -= coeff;
            } else {
                self.min_act[ci] += coeff;
            }
        }
    }

    fn constraint_entailed(&self, m: &IlpModel, ci: usize) -> bool {
        match m.constraints[ci].sense {
            Sense::Le => self.max_act[ci] <= m.constraints[ci].rhs,
            Sense::Ge => self.min_act[ci] >= m.constraints[ci].rhs,
        }
    }

    fn constraint_violated(&self, m: &IlpModel, ci: usize) -> bool {
        match m.constraints[ci].sense {
            Sense::Le => self.min_act[ci] > m.constraints[ci].rhs,
            Sense::Ge => self.max_act[ci] < m.constraints[ci].rhs,
        }
    }
}

/// Constraint occurrence lists per binary, built once per solve.
struct Occurrences {
    per_binary: Vec<Vec<(usize, i64)>>,
}

impl Occurrences {
    fn new(m: &IlpModel) -> Self {
        let mut per_binary = vec![Vec::new(); m.num_binaries];
        for (ci, c) in m.constraints.iter().enumerate() {
            for &(i, coeff) in &c.terms {
                per_binary[i].push((ci, coeff));
            }
        }
        Occurrences { per_binary }
    }
}

/// Run bound propagation to fixpoint. Fixings forced by one constraint are
/// fed back into the others until nothing changes or a constraint becomes
/// unsatisfiable under every completion.
pub fn propagate(state: &mut SearchState, m: &IlpModel) -> PropagateResult {
    let occ = Occurrences::new(m);
    let mut trail = Vec::new();
    let mut stats = SolveStats::default();
    propagate_inner(state, m, &occ, &mut trail, &mut stats)
}

fn propagate_inner(
    state: &mut SearchState,
    m: &IlpModel,
    occ: &Occurrences,
    trail: &mut Vec<usize>,
    stats: &mut SolveStats,
) -> PropagateResult {
    loop {
        let mut changed = false;
        for (ci, c) in m.constraints.iter().enumerate() {
            if state.constraint_violated(m, ci) {
                return PropagateResult::Conflict;
            }
            match c.sense {
                Sense::Le => {
                    let slack = c.rhs - state.min_act[ci];
                    for &(i, coeff) in &c.terms {
                        if state.fixed[i].is_some() {
                            continue;
                        }
                        if coeff > 0 && coeff > slack {
                            state.fix(m, occ, i, 0, trail);
                            stats.propagations += 1;
                            changed = true;
                        } else if coeff < 0 && -coeff > slack {
                            state.fix(m, occ, i, 1, trail);
                            stats.propagations += 1;
                            changed = true;
                        }
                    }
                }
                Sense::Ge => {
                    let surplus = state.max_act[ci] - c.rhs;
                    for &(i, coeff) in &c.terms {
                        if state.fixed[i].is_some() {
                            continue;
                        }
                        if coeff > 0 && coeff > surplus {
                            state.fix(m, occ, i, 1, trail);
                            stats.propagations += 1;
                            changed = true;
                        } else if coeff < 0 && -coeff > surplus {
                            state.fix(m, occ, i, 0, trail);
                            stats.propagations += 1;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return PropagateResult::Fixpoint;
        }
    }
}

/// Pick the free binary covering the most not-yet-entailed `>=` constraints;
/// ties go to the lowest index. Branch value 1 is explored first by `solve`.
pub fn choose_branch(state: &SearchState, m: &IlpModel) -> Result<usize, SolverError> {
    let mut best: Option<(usize, usize)> = None; // (count, index)
    let mut counts = vec![0usize; m.num_binaries];
    for (ci, c) in m.constraints.iter().enumerate() {
        if c.sense == Sense::Ge && !state.constraint_entailed(m, ci) {
            for &(i, coeff) in &c.terms {
                if coeff > 0 && state.fixed[i].is_none() {
                    counts[i] += 1;
                }
            }
        }
    }
    for (i, fixing) in state.fixed.iter().enumerate() {
        if fixing.is_none() {
            let count = counts[i];
            if best.map_or(true, |(bc, _)| count > bc) {
                best = Some((count, i));
            }
        }
    }
    best.map(|(_, i)| i).ok_or(SolverError::NoFreeBinary)
}

const TIMEOUT_CHECK_INTERVAL: u64 = 1024;

/// Depth-first feasibility search. Deterministic for a fixed model when no
/// timeout fires; the returned witness is re-verified against the raw
/// constraints before being reported.
pub fn solve(m: &IlpModel, timeout: Duration) -> SolveOutcome {
    let start = Instant::now();
    let mut stats = SolveStats::default();
    let occ = Occurrences::new(m);
    let mut state = SearchState::new(m);

    if start.elapsed() >= timeout {
        return SolveOutcome {
            status: SolveStatus::TimedOut,
            elapsed: start.elapsed().as_secs_f64(),
            stats,
        };
    }

    let mut trail = Vec::new();
    let status = if propagate_inner(&mut state, m, &occ, &mut trail, &mut stats)
        == PropagateResult::Conflict
    {
        SolveStatus::Infeasible
    } else {
        match dfs(&mut state, m, &occ, start, timeout, &mut stats) {
            DfsResult::Found => {
                let witness = complete(&state);
                debug_assert!(m.is_feasible(&witness));
                if m.is_feasible(&witness) {
                    SolveStatus::Feasible(witness)
                } else {
                    // propagation bug guard; exhaustive search would be wrong too
                    SolveStatus::Infeasible
                }
            }
            DfsResult::Exhausted => SolveStatus::Infeasible,
            DfsResult::TimedOut => SolveStatus::TimedOut,
        }
    };
    SolveOutcome {
        status,
        elapsed: start.elapsed().as_secs_f64(),
        stats,
    }
}

enum DfsResult {
    Found,
    Exhausted,
    TimedOut,
}

fn dfs(
    state: &mut SearchState,
    m: &IlpModel,
    occ: &Occurrences,
    start: Instant,
    timeout: Duration,
    stats: &mut SolveStats,
) -> DfsResult {
    stats.nodes += 1;
    if stats.nodes % TIMEOUT_CHECK_INTERVAL == 0 && start.elapsed() >= timeout {
        return DfsResult::TimedOut;
    }
    if (0..m.constraints.len()).all(|ci| state.constraint_entailed(m, ci)) {
        return DfsResult::Found;
    }
    let Ok(index) = choose_branch(state, m) else {
        // all binaries fixed and some constraint not entailed: dead end
        return DfsResult::Exhausted;
    };
    for value in [1u8, 0u8] {
        let mut trail = Vec::new();
        state.fix(m, occ, index, value, &mut trail);
        let propagated = propagate_inner(state, m, occ, &mut trail, stats);
        if propagated == PropagateResult::Fixpoint {
            match dfs(state, m, occ, start, timeout, stats) {
                DfsResult::Exhausted => {}
                other => return other,
            }
        }
        for i in trail.into_iter().rev() {
            state.unfix(occ, i);
        }
    }
    DfsResult::Exhausted
}

/// Complete a partial fixing: every free binary goes to 0, which is safe
/// because completion only happens once all constraints are entailed.
fn complete(state: &SearchState) -> BinarySolution {
    BinarySolution {
        values: state.fixed.iter().map(|f| f.unwrap_or(0)).collect(),
    }
}
