//! Greedy b-disjunctive domination on general graphs via constrained
//! multiset multicover.
//!
//! Each vertex x is an element with requirement b. Choosing a vertex v
//! supplies b units to every element of N[v] and one unit to every element
//! at distance exactly two, so a selection meets all requirements exactly
//! when the chosen vertices form a b-disjunctive dominating set. The greedy
//! rule picks the set with the largest residual benefit (summed over
//! elements, capped at their remaining requirement), breaking ties toward
//! the lowest index, which gives the classic 1 + ln(max multiset size)
//! guarantee; multiset sizes here are at most Δ² + Δ + 2 when b = 2.

use crate::error::{Error, Result};
use crate::graph::{second_neighborhood, Graph, VertexSet};

/// A multiset multicover instance: cover every element `x` at least
/// `requirements[x]` times using whole sets from `family`, where a set
/// contributes its per-element multiplicity each time it is taken (sets may
/// be taken at most once).
#[derive(Debug, Clone)]
pub struct MulticoverInstance {
    pub requirements: Vec<u32>,
    /// Per set: (element, multiplicity) pairs, ascending by element.
    pub family: Vec<Vec<(usize, u32)>>,
    /// Maps a set index back to the vertex it stands for.
    pub origin: Vec<usize>,
}

impl MulticoverInstance {
    /// True when the selected sets jointly meet every requirement.
    pub fn covers(&self, selection: &[usize]) -> bool {
        let mut got = vec![0u64; self.requirements.len()];
        for &i in selection {
            for &(x, m) in &self.family[i] {
                got[x] += m as u64;
            }
        }
        got.iter()
            .zip(&self.requirements)
            .all(|(&have, &need)| have >= need as u64)
    }
}

/// Encode b-disjunctive domination of `g` as multiset multicover.
pub fn build_cmsmc(g: &Graph, b: u32) -> Result<MulticoverInstance> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    let n = g.n();
    let mut family = Vec::with_capacity(n);
    for v in 0..n {
        let mut s: Vec<(usize, u32)> = vec![(v, b)];
        s.extend(g.neighbors(v).iter().map(|&u| (u, b)));
        let two = second_neighborhood(g, v)?;
        s.extend(two.iter().map(|&u| (u, 1)));
        s.sort_unstable();
        family.push(s);
    }
    Ok(MulticoverInstance {
        requirements: vec![b; n],
        family,
        origin: (0..n).collect(),
    })
}

/// Greedy multicover. Returns chosen set indices in selection order, or
/// [`Error::Uncoverable`] when the family cannot meet the requirements.
pub fn greedy_multicover(inst: &MulticoverInstance) -> Result<Vec<usize>> {
    let ne = inst.requirements.len();
    let mut avail = vec![0u64; ne];
    for s in &inst.family {
        for &(x, m) in s {
            if x >= ne {
                return Err(Error::InvalidParameter(format!(
                    "set entry references element {x} of {ne}"
                )));
            }
            avail[x] += m as u64;
        }
    }
    for x in 0..ne {
        if avail[x] < inst.requirements[x] as u64 {
            return Err(Error::Uncoverable);
        }
    }

    let mut residual = inst.requirements.clone();
    let mut unsat = residual.iter().filter(|&&r| r > 0).count();
    let mut taken = vec![false; inst.family.len()];
    let mut selection = Vec::new();
    while unsat > 0 {
        let mut best = 0u64;
        let mut best_i = usize::MAX;
        for (i, s) in inst.family.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let benefit: u64 = s.iter().map(|&(x, m)| m.min(residual[x]) as u64).sum();
            if benefit > best {
                best = benefit;
                best_i = i;
            }
        }
        debug_assert!(best > 0, "feasible instances always admit progress");
        taken[best_i] = true;
        selection.push(best_i);
        for &(x, m) in &inst.family[best_i] {
            let old = residual[x];
            let new = old.saturating_sub(m);
            if old > 0 && new == 0 {
                unsat -= 1;
            }
            residual[x] = new;
        }
    }
    Ok(selection)
}

/// Greedy b-disjunctive dominating set of an arbitrary graph.
pub fn approx_disjunctive(g: &Graph, b: u32) -> Result<VertexSet> {
    let inst = build_cmsmc(g, b)?;
    let picks = greedy_multicover(&inst)?;
    Ok(picks.into_iter().map(|i| inst.origin[i]).collect())
}
