//! Exhaustive hamiltonian-cycle search for small circulant digraphs.
//!
//! This is the ground truth the rest of the crate is validated against, so
//! it stays deliberately simple: depth-first backtracking from vertex 0
//! with two sound prunes (an unvisited vertex with no remaining in-arc or
//! out-arc kills the branch) and one sound propagation (a vertex whose only
//! remaining in-arc leaves the current vertex must be visited next).
//! Because circulants are vertex-transitive, fixing the start at 0 does not
//! affect the verdict.

use crate::cert::CycleCert;
use crate::instance::Instance;

/// Default node budget for a single search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A cycle found by the search: the start vertex and the step residues
/// taken, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundCycle {
    pub start: i64,
    pub steps: Vec<i64>,
}

impl FoundCycle {
    /// Wraps the raw cycle as a certificate of `inst`. The caller is
    /// responsible for the search having used exactly `inst.steps()`.
    pub fn to_cert(&self, inst: &Instance) -> CycleCert {
        CycleCert::new(*inst, self.start, self.steps.clone())
    }
}

/// Three-valued search outcome. `NoneExhaustive` is only reported when the
/// whole search tree was explored within budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Found(FoundCycle),
    NoneExhaustive,
    BudgetExceeded { nodes: u64 },
}

/// Searches `Circ(n; steps)` for a hamiltonian cycle through vertex 0.
/// `steps` must reduce to distinct nonzero residues mod `n`. Steps are
/// tried in ascending residue order, so a `Found` result is reproducible.
pub fn solve(n: i64, steps: &[i64], budget: u64) -> OracleResult {
    solve_from(n, steps, 0, budget)
}

fn solve_from(n: i64, steps: &[i64], start: i64, budget: u64) -> OracleResult {
    assert!(n > 0, "n must be positive");
    let n = n as usize;
    let mut residues: Vec<usize> = steps
        .iter()
        .map(|&s| s.rem_euclid(n as i64) as usize)
        .collect();
    residues.sort_unstable();
    residues.dedup();
    assert_eq!(
        residues.len(),
        steps.len(),
        "steps must be distinct residues mod n"
    );
    assert!(
        residues.iter().all(|&s| s != 0),
        "steps must be nonzero residues mod n"
    );

    let start = start.rem_euclid(n as i64) as usize;
    let mut search = Search {
        n,
        steps: residues,
        start,
        visited: vec![false; n],
        visited_count: 1,
        chosen: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    search.visited[start] = true;
    match search.dfs(start) {
        Outcome::Found => OracleResult::Found(FoundCycle {
            start: start as i64,
            steps: search.chosen.iter().map(|&s| s as i64).collect(),
        }),
        Outcome::Exhausted => OracleResult::NoneExhaustive,
        Outcome::Budget => OracleResult::BudgetExceeded {
            nodes: search.nodes,
        },
    }
}

enum Outcome {
    Found,
    Exhausted,
    Budget,
}

struct Search {
    n: usize,
    steps: Vec<usize>,
    start: usize,
    visited: Vec<bool>,
    visited_count: usize,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn succ(&self, v: usize, s: usize) -> usize {
        let t = v + s;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn pred(&self, v: usize, s: usize) -> usize {
        let t = v + self.n - s;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn dfs(&mut self, v: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::Budget;
        }

        if self.visited_count == self.n {
            for &s in &self.steps {
                if self.succ(v, s) == self.start {
                    self.chosen.push(s);
                    return Outcome::Found;
                }
            }
            return Outcome::Exhausted;
        }

        // Feasibility scan. Every unvisited vertex still needs an in-arc
        // from {v} ∪ unvisited and an out-arc into unvisited ∪ {start};
        // a vertex whose only possible predecessor is v forces the move.
        let mut forced: Option<usize> = None;
        for u in 0..self.n {
            if self.visited[u] {
                continue;
            }
            let mut ins = 0;
            let mut from_current = false;
            let mut outs = 0;
            for &s in &self.steps {
                let p = self.pred(u, s);
                if p == v {
                    ins += 1;
                    from_current = true;
                } else if !self.visited[p] {
                    ins += 1;
                }
                let q = self.succ(u, s);
                if !self.visited[q] || q == self.start {
                    outs += 1;
                }
            }
            if ins == 0 || outs == 0 {
                return Outcome::Exhausted;
            }
            if ins == 1 && from_current {
                if forced.is_some() {
                    // Two vertices both demand v as their predecessor.
                    return Outcome::Exhausted;
                }
                forced = Some(u);
            }
        }
        // The start vertex still needs the closing in-arc.
        {
            let mut ins = 0;
            for &s in &self.steps {
                let p = self.pred(self.start, s);
                if p == v || !self.visited[p] {
                    ins += 1;
                }
            }
            if ins == 0 {
                return Outcome::Exhausted;
            }
        }

        if let Some(u) = forced {
            for i in 0..self.steps.len() {
                let s = self.steps[i];
                if self.succ(v, s) == u {
                    return self.try_move(u, s);
                }
            }
            unreachable!("forced vertex is a successor of the current vertex");
        }

        for i in 0..self.steps.len() {
            let s = self.steps[i];
            let u = self.succ(v, s);
            if !self.visited[u] {
                match self.try_move(u, s) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }
        Outcome::Exhausted
    }

    fn try_move(&mut self, u: usize, s: usize) -> Outcome {
        self.visited[u] = true;
        self.visited_count += 1;
        self.chosen.push(s);
        match self.dfs(u) {
            Outcome::Exhausted => {
                self.visited[u] = false;
                self.visited_count -= 1;
                self.chosen.pop();
                Outcome::Exhausted
            }
            other => other,
        }
    }
}
