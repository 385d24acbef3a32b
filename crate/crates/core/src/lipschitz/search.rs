//! Backtracking enumeration of φ-Lipschitz self-maps, plus a brute-force
//! filter over all `|W|^|W|` tables for small groups.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{LipschitzCondition, LipschitzError, SelfMap};
use crate::coxeter::{CoxeterSystem, ElementId};

/// Largest group order `enumerate_lipschitz` accepts unless told otherwise.
pub const DEFAULT_SEARCH_BOUND: usize = 48;

/// One instance of the condition: `τ(target) ∈ {τ(source), σ·τ(source)}`.
#[derive(Clone, Copy)]
struct Edge {
    source: usize,
    sigma: usize,
    target: usize,
}

/// Dense group data for the search: full multiplication table over indices.
struct Problem {
    n: usize,
    mul: Vec<u32>,
    edges: Vec<Edge>,
}

impl Problem {
    fn new(sys: &CoxeterSystem, cond: &LipschitzCondition) -> Self {
        let n = sys.order();
        let mut mul = Vec::with_capacity(n * n);
        for a in sys.elements() {
            for b in sys.elements() {
                mul.push(sys.mul(a, b).index() as u32);
            }
        }
        let mut edges = Vec::new();
        for theta in sys.elements() {
            for &sigma in cond.sigmas(sys, theta) {
                edges.push(Edge { source: theta.index(), sigma: sigma.index(), target: sys.mul(sigma, theta).index() });
            }
        }
        Problem { n, mul, edges }
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    fn holds(&self, e: &Edge, table: &[usize]) -> bool {
        let image = table[e.source];
        let moved = table[e.target];
        moved == image || moved == self.mul(e.sigma, image)
    }
}

/// Assignment order for the backtracking search. Each position either has a
/// tree parent (at most two candidate values) or is a root (all of `W`).
struct Plan {
    order: Vec<usize>,
    /// `(parent, σ)` for tree edges; `None` for roots.
    parent: Vec<Option<(usize, usize)>>,
    /// Edges to verify once position `i` is assigned (both endpoints at `<= i`).
    checks: Vec<Vec<Edge>>,
}

impl Plan {
    fn new(sys: &CoxeterSystem, cond: &LipschitzCondition, problem: &Problem) -> Self {
        let n = problem.n;
        // Tree edges: simple generators when the condition contains them,
        // otherwise the condition's own edges (traversable both ways since
        // every σ is an involution).
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        if cond.contains_simple() {
            for theta in sys.elements() {
                for (s, &gen) in sys.simple_reflections().iter().enumerate() {
                    adjacency[theta.index()].push((sys.gen_mul(s, theta).index(), gen.index()));
                }
            }
        } else {
            for e in &problem.edges {
                adjacency[e.source].push((e.target, e.sigma));
                adjacency[e.target].push((e.source, e.sigma));
            }
        }

        let mut position = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut parent = Vec::with_capacity(n);
        for root in 0..n {
            if position[root] != usize::MAX {
                continue;
            }
            position[root] = order.len();
            order.push(root);
            parent.push(None);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, sigma) in &adjacency[u] {
                    if position[v] == usize::MAX {
                        position[v] = order.len();
                        order.push(v);
                        parent.push(Some((u, sigma)));
                        queue.push_back(v);
                    }
                }
            }
        }

        let mut checks = vec![Vec::new(); n];
        for e in &problem.edges {
            checks[position[e.source].max(position[e.target])].push(*e);
        }
        Plan { order, parent, checks }
    }
}

fn extend(problem: &Problem, plan: &Plan, depth: usize, table: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if depth == problem.n {
        out.push(table.to_vec());
        return;
    }
    let elem = plan.order[depth];
    let try_value = |value: usize, table: &mut [usize], out: &mut Vec<Vec<usize>>| {
        table[elem] = value;
        if plan.checks[depth].iter().all(|e| problem.holds(e, table)) {
            extend(problem, plan, depth + 1, table, out);
        }
    };
    match plan.parent[depth] {
        Some((p, sigma)) => {
            let base = table[p];
            try_value(base, table, out);
            try_value(problem.mul(sigma, base), table, out);
        }
        None => {
            for value in 0..problem.n {
                try_value(value, table, out);
            }
        }
    }
}

fn into_maps(mut tables: Vec<Vec<usize>>) -> Vec<SelfMap> {
    tables.sort_unstable();
    tables.dedup();
    tables
        .into_iter()
        .map(|t| SelfMap::from_table_unchecked(t.into_iter().map(ElementId::from_index).collect()))
        .collect()
}

/// All self-maps passing the condition, found by backtracking along a
/// spanning tree and pruning on every fully assigned condition edge.
/// Results are sorted by table.
pub fn enumerate_lipschitz(
    sys: &CoxeterSystem,
    cond: &LipschitzCondition,
    bound: usize,
) -> Result<Vec<SelfMap>, LipschitzError> {
    if sys.order() > bound {
        return Err(LipschitzError::SearchBoundExceeded { order: sys.order(), bound });
    }
    cond.validate(sys)?;
    let problem = Problem::new(sys, cond);
    let plan = Plan::new(sys, cond, &problem);
    let n = problem.n;
    let root = plan.order[0];
    // Branch on the value of the first root in parallel.
    let tables: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|value| {
            let mut table = vec![usize::MAX; n];
            table[root] = value;
            let mut out = Vec::new();
            if plan.checks[0].iter().all(|e| problem.holds(e, &table)) {
                extend(&problem, &plan, 1, &mut table, &mut out);
            }
            out
        })
        .collect();
    Ok(into_maps(tables))
}

#[derive(Clone, Debug)]
pub struct ExhaustiveResult {
    /// `|W|^|W|`, the number of tables examined.
    pub candidates: u64,
    pub passing: Vec<SelfMap>,
}

/// Tests every self-map of the group against the condition. Refuses when
/// `|W|^|W|` exceeds `max_candidates`.
pub fn exhaustive_lipschitz(
    sys: &CoxeterSystem,
    cond: &LipschitzCondition,
    max_candidates: u64,
) -> Result<ExhaustiveResult, LipschitzError> {
    let n = sys.order();
    let candidates = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(n as u64));
    let candidates = match candidates {
        Some(c) if c <= max_candidates => c,
        _ => return Err(LipschitzError::SearchBoundExceeded { order: n, bound: bound_order(max_candidates) }),
    };
    cond.validate(sys)?;
    let problem = Problem::new(sys, cond);
    // Odometer over tables; the last coordinate varies fastest. Split the
    // space on the first coordinate across workers.
    let tables: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut table = vec![0usize; n];
            table[0] = first;
            let mut out = Vec::new();
            loop {
                if problem.edges.iter().all(|e| problem.holds(e, &table)) {
                    out.push(table.clone());
                }
                let mut i = n - 1;
                loop {
                    if i == 0 {
                        return out;
                    }
                    table[i] += 1;
                    if table[i] < n {
                        break;
                    }
                    table[i] = 0;
                    i -= 1;
                }
            }
        })
        .collect();
    Ok(ExhaustiveResult { candidates, passing: into_maps(tables) })
}

/// Largest `n` with `n^n <= max_candidates`.
fn bound_order(max_candidates: u64) -> usize {
    (1..).take_while(|&n: &u64| n.checked_pow(n as u32).is_some_and(|c| c <= max_candidates)).last().unwrap_or(0)
        as usize
}
