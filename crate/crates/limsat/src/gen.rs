//! Formula generators: seeded random 3-CNF, planted satisfiable 3-CNF,
//! pigeonhole instances, and the worked 3-variable demo formula.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Clause, CnfFormula, Literal};

/// The classic 3-variable, 4-clause textbook reduction example:
/// (x1 v -x2 v -x3) (-x1 v -x2 v -x3) (-x1 v -x2 v x3) (x1 v x2 v x3).
pub fn demo_formula() -> CnfFormula {
    let clauses = [
        [1, -2, -3],
        [-1, -2, -3],
        [-1, -2, 3],
        [1, 2, 3],
    ];
    let clauses = clauses
        .iter()
        .map(|c| Clause::new(c.iter().map(|&l| Literal::from_dimacs(l)).collect()))
        .collect();
    CnfFormula::new(3, clauses, "demo3x4")
}

/// Uniform random 3-CNF: each clause picks 3 distinct variables and random
/// polarities. Already normalized by construction.
pub fn random_3cnf(n: u32, k: u32, seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars: Vec<u32> = (1..=n).collect();
    let clauses = (0..k)
        .map(|_| random_clause(&vars, &mut rng))
        .collect();
    CnfFormula::new(n, clauses, format!("random-{n}-{k}-{seed}"))
}

/// Random 3-CNF guaranteed satisfiable: clauses falsified by a hidden
/// random assignment are rejected and redrawn.
pub fn planted_3cnf(n: u32, k: u32, seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hidden: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let vars: Vec<u32> = (1..=n).collect();
    let mut clauses = Vec::with_capacity(k as usize);
    while clauses.len() < k as usize {
        let clause = random_clause(&vars, &mut rng);
        let satisfied = clause
            .literals
            .iter()
            .any(|l| hidden[(l.var() - 1) as usize] == l.is_positive());
        if satisfied {
            clauses.push(clause);
        }
    }
    CnfFormula::new(n, clauses, format!("planted-{n}-{k}-{seed}"))
}

fn random_clause(vars: &[u32], rng: &mut ChaCha8Rng) -> Clause {
    let picked: Vec<u32> = vars.choose_multiple(rng, 3.min(vars.len())).copied().collect();
    Clause::new(
        picked
            .into_iter()
            .map(|v| Literal::new(v, rng.gen()))
            .collect(),
    )
}

/// Pigeonhole formula PHP(pigeons, holes): variable `x_{i,j}` says pigeon
/// `i` sits in hole `j`. Unsatisfiable whenever pigeons > holes.
pub fn pigeonhole(pigeons: u32, holes: u32) -> CnfFormula {
    let var = |pigeon: u32, hole: u32| Literal::new((pigeon - 1) * holes + hole, true);
    let mut clauses = Vec::new();
    // every pigeon gets some hole
    for i in 1..=pigeons {
        clauses.push(Clause::new((1..=holes).map(|j| var(i, j)).collect()));
    }
    // no hole holds two pigeons
    for j in 1..=holes {
        for i1 in 1..=pigeons {
            for i2 in (i1 + 1)..=pigeons {
                clauses.push(Clause::new(vec![
                    var(i1, j).negated(),
                    var(i2, j).negated(),
                ]));
            }
        }
    }
    CnfFormula::new(pigeons * holes, clauses, format!("php-{pigeons}-{holes}"))
}
