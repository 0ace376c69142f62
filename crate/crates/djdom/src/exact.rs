//! Optimal solvers used as oracles: minimum b-disjunctive domination,
//! domination, 2-domination, and vertex cover.
//!
//! All four problems reduce to one covering model: candidate sets are
//! vertices, each element carries a requirement, and a chosen vertex
//! contributes a fixed multiplicity toward an element. A vertex at distance
//! one (or the vertex itself) contributes `b` toward its disjunctive
//! requirement of `b`, a vertex at distance two contributes 1; the other
//! problems use the analogous unit encodings.
//!
//! The exhaustive strategy enumerates vertex subsets in ascending cardinality
//! and lexicographic order and accepts the first subset the corresponding
//! verifier approves, so its output is the lexicographically least optimal
//! set by construction. Branch and bound searches the covering model directly
//! and returns a deterministic optimal set. Disconnected inputs are solved
//! per component. Every searched node draws on a configurable budget.

use crate::error::{Error, Result};
use crate::graph::{
    is_disjunctive_dominating, is_dominating, is_two_dominating, is_vertex_cover,
    second_neighborhood, Graph, VertexSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    BranchAndBound,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub node_budget: u64,
}

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { strategy: Strategy::BranchAndBound, node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl SearchConfig {
    pub fn exhaustive() -> Self {
        SearchConfig { strategy: Strategy::Exhaustive, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy)]
enum Problem {
    Disjunctive(u32),
    Domination,
    TwoDomination,
    VertexCover,
}

/// Minimum b-disjunctive dominating set.
pub fn exact_disjunctive(g: &Graph, b: u32, cfg: &SearchConfig) -> Result<VertexSet> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    solve(g, Problem::Disjunctive(b), cfg)
}

/// Minimum dominating set.
pub fn exact_domination(g: &Graph, cfg: &SearchConfig) -> Result<VertexSet> {
    solve(g, Problem::Domination, cfg)
}

/// Minimum 2-dominating set (every outside vertex has two neighbors inside).
pub fn exact_two_domination(g: &Graph, cfg: &SearchConfig) -> Result<VertexSet> {
    solve(g, Problem::TwoDomination, cfg)
}

/// Minimum vertex cover.
pub fn exact_vertex_cover(g: &Graph, cfg: &SearchConfig) -> Result<VertexSet> {
    solve(g, Problem::VertexCover, cfg)
}

struct Budget {
    remaining: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { remaining: limit, limit }
    }

    fn spend(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded(self.limit));
        }
        self.remaining -= 1;
        Ok(())
    }
}

fn solve(g: &Graph, problem: Problem, cfg: &SearchConfig) -> Result<VertexSet> {
    let mut budget = Budget::new(cfg.node_budget);
    let mut result = VertexSet::new();
    for comp in g.components() {
        let (sub, back) = g.induced(&comp);
        let local = match cfg.strategy {
            Strategy::Exhaustive => solve_exhaustive(&sub, problem, &mut budget)?,
            Strategy::BranchAndBound => solve_branch_and_bound(&sub, problem, &mut budget)?,
        };
        for v in local {
            result.insert(back[v]);
        }
    }
    Ok(result)
}

fn verifies(g: &Graph, s: &VertexSet, problem: Problem) -> bool {
    match problem {
        Problem::Disjunctive(b) => is_disjunctive_dominating(g, s, b),
        Problem::Domination => is_dominating(g, s),
        Problem::TwoDomination => is_two_dominating(g, s),
        Problem::VertexCover => is_vertex_cover(g, s),
    }
    .expect("solver candidates are in range")
}

/// Subsets in ascending cardinality, lexicographic within a cardinality; the
/// first verified subset is the lexicographically least optimum.
fn solve_exhaustive(g: &Graph, problem: Problem, budget: &mut Budget) -> Result<Vec<usize>> {
    let n = g.n();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            budget.spend()?;
            let candidate = VertexSet::from_members(combo.clone());
            if verifies(g, &candidate, problem) {
                return Ok(combo);
            }
            // Advance to the next k-combination of 0..n.
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] != i + n - k {
                    combo[i] += 1;
                    for j in (i + 1)..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if k == 0 || combo.is_empty() {
                break;
            }
        }
    }
    unreachable!("the full vertex set satisfies every supported problem");
}

/// Covering model: per element a requirement and contributor list.
struct CoverProblem {
    num_sets: usize,
    /// Per candidate set: the (element, multiplicity) pairs it contributes.
    sets: Vec<Vec<(usize, u32)>>,
    /// Per element: contributors as (set, multiplicity), ascending by set.
    contribs: Vec<Vec<(usize, u32)>>,
    reqs: Vec<u32>,
}

fn cover_problem(g: &Graph, problem: Problem) -> CoverProblem {
    let n = g.n();
    let mut contribs: Vec<Vec<(usize, u32)>>;
    let reqs: Vec<u32>;
    match problem {
        Problem::Disjunctive(b) => {
            reqs = vec![b; n];
            contribs = Vec::with_capacity(n);
            for v in 0..n {
                let mut c: Vec<(usize, u32)> = vec![(v, b)];
                c.extend(g.neighbors(v).iter().map(|&u| (u, b)));
                let second = second_neighborhood(g, v).expect("vertex in range");
                c.extend(second.iter().map(|&u| (u, 1)));
                c.sort_unstable();
                contribs.push(c);
            }
        }
        Problem::Domination => {
            reqs = vec![1; n];
            contribs = (0..n)
                .map(|v| {
                    let mut c: Vec<(usize, u32)> = vec![(v, 1)];
                    c.extend(g.neighbors(v).iter().map(|&u| (u, 1)));
                    c.sort_unstable();
                    c
                })
                .collect();
        }
        Problem::TwoDomination => {
            reqs = vec![2; n];
            contribs = (0..n)
                .map(|v| {
                    let mut c: Vec<(usize, u32)> = vec![(v, 2)];
                    c.extend(g.neighbors(v).iter().map(|&u| (u, 1)));
                    c.sort_unstable();
                    c
                })
                .collect();
        }
        Problem::VertexCover => {
            let edges = g.edges();
            reqs = vec![1; edges.len()];
            contribs = edges.iter().map(|&(u, v)| vec![(u, 1), (v, 1)]).collect();
        }
    }
    let mut sets: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for (e, c) in contribs.iter().enumerate() {
        for &(u, mult) in c {
            sets[u].push((e, mult));
        }
    }
    CoverProblem { num_sets: n, sets, contribs, reqs }
}

const INFEASIBLE: u64 = u64::MAX / 2;

struct Search<'a> {
    p: &'a CoverProblem,
    chosen: Vec<bool>,
    excluded: Vec<bool>,
    stack: Vec<usize>,
    residual: Vec<u32>,
    /// Per element: total multiplicity still offered by unchosen, unexcluded
    /// contributors. Feasibility requires `avail[e] >= residual[e]`.
    avail: Vec<u64>,
    unsat: usize,
    best: Option<Vec<usize>>,
    mark: Vec<usize>,
    epoch: usize,
}

impl<'a> Search<'a> {
    fn new(p: &'a CoverProblem) -> Self {
        let avail: Vec<u64> = p
            .contribs
            .iter()
            .map(|c| c.iter().map(|&(_, m)| m as u64).sum())
            .collect();
        let unsat = p.reqs.iter().filter(|&&r| r > 0).count();
        Search {
            chosen: vec![false; p.num_sets],
            excluded: vec![false; p.num_sets],
            stack: Vec::new(),
            residual: p.reqs.clone(),
            avail,
            unsat,
            best: None,
            mark: vec![usize::MAX; p.num_sets],
            epoch: 0,
            p,
        }
    }

    fn choose(&mut self, u: usize, undo: &mut Vec<(usize, u32)>) {
        self.chosen[u] = true;
        self.stack.push(u);
        for &(e, mult) in &self.p.sets[u] {
            let old = self.residual[e];
            undo.push((e, old));
            let new = old.saturating_sub(mult);
            if old > 0 && new == 0 {
                self.unsat -= 1;
            }
            self.residual[e] = new;
            self.avail[e] -= mult as u64;
        }
    }

    fn unchoose(&mut self, u: usize, undo: &[(usize, u32)]) {
        self.chosen[u] = false;
        self.stack.pop();
        for &(e, old) in undo.iter().rev() {
            if self.residual[e] == 0 && old > 0 {
                self.unsat += 1;
            }
            self.residual[e] = old;
        }
        for &(e, mult) in &self.p.sets[u] {
            self.avail[e] += mult as u64;
        }
    }

    fn exclude(&mut self, u: usize) {
        self.excluded[u] = true;
        for &(e, mult) in &self.p.sets[u] {
            self.avail[e] -= mult as u64;
        }
    }

    fn unexclude(&mut self, u: usize) {
        self.excluded[u] = false;
        for &(e, mult) in &self.p.sets[u] {
            self.avail[e] += mult as u64;
        }
    }

    fn available(&self, u: usize) -> bool {
        !self.chosen[u] && !self.excluded[u]
    }

    /// Lower bound and branch element. The bound greedily packs unsatisfied
    /// elements whose available contributor sets are pairwise disjoint (each
    /// needs its own picks), charging `ceil(residual / max multiplicity)` per
    /// packed element. Elements are visited tightest-first, which also yields
    /// the branching choice.
    fn analyze(&mut self) -> (u64, usize) {
        let mut items: Vec<(u32, usize, u32)> = Vec::new();
        for e in 0..self.residual.len() {
            let res = self.residual[e];
            if res == 0 {
                continue;
            }
            if self.avail[e] < res as u64 {
                return (INFEASIBLE, 0);
            }
            let mut cnt = 0u32;
            let mut maxmult = 0u32;
            for &(u, mult) in &self.p.contribs[e] {
                if self.available(u) {
                    cnt += 1;
                    maxmult = maxmult.max(mult);
                }
            }
            items.push((cnt, e, maxmult));
        }
        items.sort_unstable();
        let branch = items[0].1;
        self.epoch += 1;
        let mut lb = 0u64;
        'pack: for &(_, e, maxmult) in &items {
            for &(u, _) in &self.p.contribs[e] {
                if self.available(u) && self.mark[u] == self.epoch {
                    continue 'pack;
                }
            }
            for &(u, _) in &self.p.contribs[e] {
                if self.available(u) {
                    self.mark[u] = self.epoch;
                }
            }
            lb += self.residual[e].div_ceil(maxmult) as u64;
        }
        (lb, branch)
    }

    fn recurse(&mut self, budget: &mut Budget) -> Result<()> {
        budget.spend()?;
        if self.unsat == 0 {
            if self.best.as_ref().map_or(true, |b| self.stack.len() < b.len()) {
                let mut sol = self.stack.clone();
                sol.sort_unstable();
                self.best = Some(sol);
            }
            return Ok(());
        }
        let (lb, elem) = self.analyze();
        if lb >= INFEASIBLE {
            return Ok(());
        }
        if let Some(best) = &self.best {
            if self.stack.len() as u64 + lb >= best.len() as u64 {
                return Ok(());
            }
        }
        // Any feasible completion picks some remaining contributor of `elem`;
        // partition on its least such pick, ascending by index.
        let options: Vec<usize> = self.p.contribs[elem]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| self.available(u))
            .collect();
        let mut undo = Vec::new();
        let mut shut = Vec::new();
        for u in options {
            undo.clear();
            self.choose(u, &mut undo);
            let r = self.recurse(budget);
            self.unchoose(u, &undo);
            if r.is_err() {
                for &x in &shut {
                    self.unexclude(x);
                }
                return r;
            }
            self.exclude(u);
            shut.push(u);
            if self.avail[elem] < self.residual[elem] as u64 {
                break;
            }
        }
        for &x in &shut {
            self.unexclude(x);
        }
        Ok(())
    }
}

fn solve_branch_and_bound(
    g: &Graph,
    problem: Problem,
    budget: &mut Budget,
) -> Result<Vec<usize>> {
    let p = cover_problem(g, problem);
    let mut search = Search::new(&p);
    search.recurse(budget)?;
    let best = search.best.expect("the full vertex set is always feasible");
    debug_assert!(verifies(g, &VertexSet::from_members(best.clone()), problem));
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_connected, gen_tree, path, star};

    fn both(g: &Graph, b: u32) -> (VertexSet, VertexSet) {
        let ex = exact_disjunctive(g, b, &SearchConfig::exhaustive()).unwrap();
        let bb = exact_disjunctive(g, b, &SearchConfig::default()).unwrap();
        (ex, bb)
    }

    #[test]
    fn frozen_small_disjunctive_values() {
        assert_eq!(exact_disjunctive(&star(3), 2, &SearchConfig::default()).unwrap().len(), 1);
        assert_eq!(exact_disjunctive(&path(4), 2, &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_disjunctive(&cycle(4), 2, &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_disjunctive(&path(5), 2, &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_disjunctive(&path(7), 2, &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_disjunctive(&complete(5), 2, &SearchConfig::default()).unwrap().len(), 1);
    }

    #[test]
    fn frozen_companion_problem_values() {
        assert_eq!(exact_domination(&path(4), &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_two_domination(&cycle(4), &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_two_domination(&path(2), &SearchConfig::default()).unwrap().len(), 2);
        assert_eq!(exact_vertex_cover(&complete(4), &SearchConfig::default()).unwrap().len(), 3);
        assert_eq!(exact_vertex_cover(&star(4), &SearchConfig::default()).unwrap().len(), 1);
    }

    #[test]
    fn exhaustive_returns_lexicographically_least_optimum() {
        let ex = exact_disjunctive(&path(5), 2, &SearchConfig::exhaustive()).unwrap();
        assert_eq!(ex.members(), &[0, 3]);
        let ex = exact_disjunctive(&cycle(6), 2, &SearchConfig::exhaustive()).unwrap();
        assert_eq!(ex.members(), &[0, 2]);
        let ex = exact_domination(&path(3), &SearchConfig::exhaustive()).unwrap();
        assert_eq!(ex.members(), &[1]);
    }

    #[test]
    fn singleton_and_empty_graphs() {
        let g1 = Graph::new(1);
        assert_eq!(exact_disjunctive(&g1, 2, &SearchConfig::default()).unwrap().members(), &[0]);
        assert_eq!(exact_vertex_cover(&g1, &SearchConfig::default()).unwrap().len(), 0);
        let g0 = Graph::new(0);
        assert!(exact_disjunctive(&g0, 2, &SearchConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn disconnected_graphs_solve_per_component() {
        // Two copies of P3: centers of both.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let d = exact_disjunctive(&g, 2, &SearchConfig::exhaustive()).unwrap();
        assert_eq!(d.members(), &[1, 4]);
        let d = exact_domination(&g, &SearchConfig::default()).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig { strategy: Strategy::Exhaustive, node_budget: 3 };
        assert!(matches!(
            exact_disjunctive(&path(6), 2, &cfg),
            Err(Error::BudgetExceeded(3))
        ));
        let cfg = SearchConfig { strategy: Strategy::BranchAndBound, node_budget: 2 };
        assert!(matches!(
            exact_disjunctive(&path(9), 2, &cfg),
            Err(Error::BudgetExceeded(2))
        ));
    }

    #[test]
    fn invalid_b_is_rejected() {
        assert!(exact_disjunctive(&path(3), 0, &SearchConfig::default()).is_err());
    }

    #[test]
    fn branch_and_bound_matches_exhaustive() {
        for seed in 0..60 {
            let g = gen_connected(8, 0.35, seed).unwrap();
            for b in [1u32, 2, 3] {
                let (ex, bb) = both(&g, b);
                assert_eq!(ex.len(), bb.len(), "b={b} seed={seed}");
                assert!(is_disjunctive_dominating(&g, &bb, b).unwrap());
                assert!(is_disjunctive_dominating(&g, &ex, b).unwrap());
            }
            let ex = exact_domination(&g, &SearchConfig::exhaustive()).unwrap();
            let bb = exact_domination(&g, &SearchConfig::default()).unwrap();
            assert_eq!(ex.len(), bb.len());
            assert!(is_dominating(&g, &bb).unwrap());
            let ex = exact_two_domination(&g, &SearchConfig::exhaustive()).unwrap();
            let bb = exact_two_domination(&g, &SearchConfig::default()).unwrap();
            assert_eq!(ex.len(), bb.len());
            assert!(is_two_dominating(&g, &bb).unwrap());
            let ex = exact_vertex_cover(&g, &SearchConfig::exhaustive()).unwrap();
            let bb = exact_vertex_cover(&g, &SearchConfig::default()).unwrap();
            assert_eq!(ex.len(), bb.len());
            assert!(is_vertex_cover(&g, &bb).unwrap());
        }
    }

    #[test]
    fn size_one_iff_universal_vertex() {
        for seed in 0..80 {
            let g = gen_connected(6, 0.5, seed).unwrap();
            let opt = exact_disjunctive(&g, 2, &SearchConfig::default()).unwrap();
            let universal = (0..g.n()).any(|v| g.degree(v) == g.n() - 1);
            assert_eq!(opt.len() == 1, universal);
        }
    }

    #[test]
    fn diameter_two_needs_at_most_two() {
        let mut found = 0;
        for seed in 0..200 {
            let g = gen_connected(7, 0.5, seed).unwrap();
            if g.diameter() == Some(2) {
                found += 1;
                let opt = exact_disjunctive(&g, 2, &SearchConfig::default()).unwrap();
                assert!(opt.len() <= 2);
            }
        }
        assert!(found > 20);
    }

    #[test]
    fn split_graphs_need_at_most_two() {
        // Clique 0..k, independent set k..n, seeded cross edges.
        use crate::generators::SplitMix64;
        for seed in 0..50u64 {
            let mut rng = SplitMix64::new(seed);
            let k = 2 + rng.below(3) as usize;
            let n = k + 1 + rng.below(4) as usize;
            let mut g = Graph::new(n);
            for u in 0..k {
                for v in (u + 1)..k {
                    g.add_edge(u, v).unwrap();
                }
            }
            for v in k..n {
                let c = rng.below(k as u64) as usize;
                g.add_edge(v, c).unwrap();
                for u in 0..k {
                    if u != c && rng.below(2) == 1 {
                        g.add_edge(v, u).unwrap();
                    }
                }
            }
            let opt = exact_disjunctive(&g, 2, &SearchConfig::default()).unwrap();
            assert!(opt.len() <= 2, "seed {seed}");
        }
    }

    #[test]
    fn tree_domination_versus_disjunctive_bound() {
        for seed in 0..40 {
            let t = gen_tree(10, seed).unwrap();
            let dom = exact_domination(&t, &SearchConfig::default()).unwrap().len();
            let dis = exact_disjunctive(&t, 2, &SearchConfig::default()).unwrap().len();
            assert!(dom <= 2 * dis - 1, "seed {seed}: {dom} > 2*{dis}-1");
        }
    }

    #[test]
    fn requirement_grows_with_b() {
        for seed in 0..25 {
            let g = gen_connected(7, 0.4, seed).unwrap();
            let mut prev = 0;
            for b in 1..=3 {
                let size = exact_disjunctive(&g, b, &SearchConfig::default()).unwrap().len();
                assert!(size >= prev);
                prev = size;
            }
        }
    }
}
