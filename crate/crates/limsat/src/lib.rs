//! limsat: transform SAT instances (DIMACS CNF) into subset-sum and 0-1
//! integer linear programming feasibility models, solve them with built-in
//! engines, or export them to LP/MPS exchange formats.

pub mod cnf;
pub mod gen;
pub mod harness;
pub mod ilp;
pub mod solver;
pub mod ssp;
