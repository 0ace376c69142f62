//! Elimination orderings and proper interval graph recognition.
//!
//! An ordering is a perfect elimination ordering (PEO) when every vertex's
//! later neighbors form a clique. A bi-compatible elimination ordering (BCO)
//! is an ordering that is a PEO in both directions; a graph admits one exactly
//! when it is a proper interval graph. For a connected graph a BCO places each
//! closed neighborhood on contiguous positions, which the interval solvers
//! rely on.

use crate::error::{Error, Result};
use crate::graph::{FlatAdjacency, Graph};

const NONE: usize = usize::MAX;
const NONE32: u32 = u32::MAX;

/// Vertex permutation stored with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// Validates that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![NONE; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != NONE {
                return Err(Error::NotPermutation);
            }
            position[v] = i;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertex at each position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of each vertex.
    pub fn position(&self) -> &[usize] {
        &self.position
    }

    pub fn reversed(&self) -> VertexOrdering {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        VertexOrdering::new(order).expect("reverse of a permutation is a permutation")
    }
}

/// True iff every vertex's later neighbors form a clique. Uses the standard
/// linear-time reduction: with `u` the earliest later neighbor of `v`, it
/// suffices that the remaining later neighbors of `v` are adjacent to `u`.
pub fn is_peo(g: &Graph, ord: &VertexOrdering) -> Result<bool> {
    if ord.len() != g.n() {
        return Err(Error::NotPermutation);
    }
    Ok(is_peo_flat(&g.flat_adjacency(), ord))
}

fn is_peo_flat(fa: &FlatAdjacency, ord: &VertexOrdering) -> bool {
    let pos = ord.position();
    let n = fa.n();
    // pending[u] = vertices that must be adjacent to u, flattened: counting
    // pass sizes the buckets, fill pass populates them.
    let mut earliest = vec![NONE32; n];
    let mut start = vec![0u32; n + 1];
    for v in 0..n {
        let mut e = NONE32;
        let mut later = 0u32;
        for &w in fa.neighbors(v) {
            if pos[w as usize] > pos[v] {
                later += 1;
                if e == NONE32 || pos[w as usize] < pos[e as usize] {
                    e = w;
                }
            }
        }
        earliest[v] = e;
        if e != NONE32 {
            start[e as usize + 1] += later - 1;
        }
    }
    for u in 0..n {
        start[u + 1] += start[u];
    }
    let mut pending = vec![0u32; start[n] as usize];
    let mut cursor = start.clone();
    for v in 0..n {
        let e = earliest[v];
        if e == NONE32 {
            continue;
        }
        for &w in fa.neighbors(v) {
            if pos[w as usize] > pos[v] && w != e {
                pending[cursor[e as usize] as usize] = w;
                cursor[e as usize] += 1;
            }
        }
    }
    let mut mark = vec![NONE32; n];
    for u in 0..n {
        if start[u] == start[u + 1] {
            continue;
        }
        for &w in fa.neighbors(u) {
            mark[w as usize] = u as u32;
        }
        let claims = &pending[start[u] as usize..start[u + 1] as usize];
        if claims.iter().any(|&w| mark[w as usize] != u as u32) {
            return false;
        }
    }
    true
}

/// True iff `ord` and its reverse are both perfect elimination orderings.
pub fn is_bco(g: &Graph, ord: &VertexOrdering) -> Result<bool> {
    if ord.len() != g.n() {
        return Err(Error::NotPermutation);
    }
    let fa = g.flat_adjacency();
    Ok(is_peo_flat(&fa, ord) && is_peo_flat(&fa, &ord.reversed()))
}

/// True iff every closed neighborhood occupies contiguous positions, i.e. the
/// ordering is an umbrella ordering.
pub(crate) fn is_contiguous(g: &Graph, ord: &VertexOrdering) -> bool {
    is_contiguous_flat(&g.flat_adjacency(), ord)
}

fn is_contiguous_flat(fa: &FlatAdjacency, ord: &VertexOrdering) -> bool {
    let pos = ord.position();
    (0..fa.n()).all(|v| {
        let mut lo = pos[v];
        let mut hi = pos[v];
        for &w in fa.neighbors(v) {
            lo = lo.min(pos[w as usize]);
            hi = hi.max(pos[w as usize]);
        }
        hi - lo == fa.degree(v)
    })
}

/// One lexicographic BFS sweep. Ties inside the lexicographically largest
/// label class are broken toward the smallest `rank`; neighbors are injected
/// into new label classes in ascending `rank`, keeping every class a
/// rank-sorted list so selection is O(1).
fn lexbfs_by_rank(fa: &FlatAdjacency, rank: &[u32]) -> Vec<u32> {
    let n = fa.n();
    if n == 0 {
        return Vec::new();
    }
    let mut vertex_by_rank = vec![0u32; n];
    for v in 0..n {
        vertex_by_rank[rank[v] as usize] = v as u32;
    }
    // Flattened adjacency with each vertex's neighbors in ascending rank:
    // adj[astart[v]..astart[v + 1]].
    let mut astart = vec![0u32; n + 1];
    for v in 0..n {
        astart[v + 1] = astart[v] + fa.degree(v) as u32;
    }
    let mut adj = vec![0u32; astart[n] as usize];
    let mut cursor = astart.clone();
    for r in 0..n {
        let u = vertex_by_rank[r];
        for &w in fa.neighbors(u as usize) {
            adj[cursor[w as usize] as usize] = u;
            cursor[w as usize] += 1;
        }
    }

    // Intrusive lists: vertices chain within a slice, slices chain in label
    // order. `stamp`/`split` reuse one freshly created predecessor slice per
    // (slice, pivot) pair.
    let mut nxt = vec![NONE32; n];
    let mut prv = vec![NONE32; n];
    let mut slice_of = vec![0u32; n];
    for i in 0..n {
        let v = vertex_by_rank[i] as usize;
        if i + 1 < n {
            nxt[v] = vertex_by_rank[i + 1];
        }
        if i > 0 {
            prv[v] = vertex_by_rank[i - 1];
        }
    }
    let mut head = vec![vertex_by_rank[0]];
    let mut tail = vec![vertex_by_rank[n - 1]];
    let mut next_s = vec![NONE32];
    let mut prev_s = vec![NONE32];
    let mut stamp = vec![NONE32];
    let mut split = vec![NONE32];
    let mut first_slice = 0u32;

    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);

    for step in 0..n as u32 {
        let s = first_slice as usize;
        let v = head[s];
        head[s] = nxt[v as usize];
        if head[s] == NONE32 {
            first_slice = next_s[s];
            if first_slice != NONE32 {
                prev_s[first_slice as usize] = NONE32;
            }
        } else {
            prv[head[s] as usize] = NONE32;
        }
        visited[v as usize] = true;
        order.push(v);

        for idx in astart[v as usize]..astart[v as usize + 1] {
            let u = adj[idx as usize] as usize;
            if visited[u] {
                continue;
            }
            let su = slice_of[u] as usize;
            if stamp[su] != step {
                // New empty slice directly before `su`.
                let sp = head.len() as u32;
                head.push(NONE32);
                tail.push(NONE32);
                next_s.push(su as u32);
                prev_s.push(prev_s[su]);
                stamp.push(NONE32);
                split.push(NONE32);
                if prev_s[su] != NONE32 {
                    next_s[prev_s[su] as usize] = sp;
                } else {
                    first_slice = sp;
                }
                prev_s[su] = sp;
                stamp[su] = step;
                split[su] = sp;
            }
            let sp = split[su] as usize;
            // Unlink `u` from `su`; drop `su` from the slice list if emptied.
            if prv[u] != NONE32 {
                nxt[prv[u] as usize] = nxt[u];
            } else {
                head[su] = nxt[u];
            }
            if nxt[u] != NONE32 {
                prv[nxt[u] as usize] = prv[u];
            } else {
                tail[su] = prv[u];
            }
            if head[su] == NONE32 {
                let p = prev_s[su];
                let q = next_s[su];
                if p != NONE32 {
                    next_s[p as usize] = q;
                } else {
                    first_slice = q;
                }
                if q != NONE32 {
                    prev_s[q as usize] = p;
                }
            }
            // Append `u` to `sp`; arrival order is ascending rank.
            if head[sp] == NONE32 {
                head[sp] = u as u32;
                prv[u] = NONE32;
            } else {
                nxt[tail[sp] as usize] = u as u32;
                prv[u] = tail[sp];
            }
            nxt[u] = NONE32;
            tail[sp] = u as u32;
            slice_of[u] = sp as u32;
        }
    }
    order
}

/// Computes a bi-compatible elimination ordering of a connected proper
/// interval graph via three lexicographic BFS sweeps (each later sweep breaks
/// ties toward the vertex latest in the previous sweep), then certifies the
/// candidate. Rejects graphs outside the class.
pub fn compute_bco(g: &Graph) -> Result<VertexOrdering> {
    Ok(compute_bco_canonical(g)?.ord)
}

/// A certified ordering together with the graph relabeled so that vertex `p`
/// is the vertex at position `p`. Consumers walking the ordering should
/// traverse the canonical copy: its neighbor runs sit close to the diagonal,
/// so whole-graph passes stay cache-resident at large sizes.
pub(crate) struct BcoComputation {
    pub ord: VertexOrdering,
    pub canonical: FlatAdjacency,
}

pub(crate) fn compute_bco_canonical(g: &Graph) -> Result<BcoComputation> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("graph is empty".into()));
    }
    let fa = g.flat_adjacency();
    if !fa.is_connected() {
        return Err(Error::NotConnected);
    }
    // Three sweeps; each relabels to the position space of the sweep before,
    // so ranks reduce to the fixed reversal permutation and the adjacency
    // rebuild of the next sweep reads sequentially.
    let identity: Vec<u32> = (0..n as u32).collect();
    let reversal: Vec<u32> = (0..n as u32).rev().collect();
    let order1 = lexbfs_by_rank(&fa, &identity);
    let fa1 = fa.relabeled(&order1);
    let order2 = lexbfs_by_rank(&fa1, &reversal);
    let fa2 = fa1.relabeled(&order2);
    let order3 = lexbfs_by_rank(&fa2, &reversal);
    let canonical = fa2.relabeled(&order3);

    let absolute: Vec<usize> = order3
        .iter()
        .map(|&p3| order1[order2[p3 as usize] as usize] as usize)
        .collect();
    let ord = VertexOrdering::new(absolute)?;
    let id_ord = VertexOrdering::new((0..n).collect())?;
    if is_contiguous_flat(&canonical, &id_ord)
        && is_peo_flat(&canonical, &id_ord)
        && is_peo_flat(&canonical, &id_ord.reversed())
    {
        Ok(BcoComputation { ord, canonical })
    } else {
        Err(Error::NotProperInterval)
    }
}
