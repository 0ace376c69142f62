//! Undirected simple graphs, vertex sets, verifiers, and edge-list I/O.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted and symmetric; no
//! self-loops or parallel edges. The text format is a header `p <n> <m>`
//! followed by `m` lines `e <u> <v>` with 0-based endpoints; `#` starts a
//! comment line.

use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let pu = self.adj[u].partition_point(|&x| x < v);
        self.adj[u].insert(pu, v);
        let pv = self.adj[v].partition_point(|&x| x < u);
        self.adj[v].insert(pv, u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; `UNREACHABLE` marks other components.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `verts` (must be sorted and distinct). Returns the
    /// subgraph and the map from new indices back to original vertices.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && index[w] != usize::MAX {
                    g.add_edge(i, index[w]).expect("induced edges are valid");
                }
            }
        }
        (g, verts.to_vec())
    }

    /// Two-colorability check via BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Largest finite eccentricity; `None` for empty or disconnected graphs.
    pub fn diameter(&self) -> Option<u32> {
        if self.n() == 0 || !self.is_connected() {
            return None;
        }
        let mut diam = 0;
        for v in 0..self.n() {
            let d = self.bfs_distances(v);
            diam = diam.max(*d.iter().max().unwrap());
        }
        Some(diam)
    }

    /// Copies the adjacency lists into one contiguous buffer. Traversals that
    /// sweep the whole graph several times should build this once; on large
    /// inputs the per-vertex heap blocks dominate runtime through cache
    /// misses.
    pub fn flat_adjacency(&self) -> FlatAdjacency {
        let n = self.n();
        assert!(n < u32::MAX as usize, "vertex indices must fit in u32");
        let mut start = Vec::with_capacity(n + 1);
        start.push(0u32);
        let mut list = Vec::with_capacity(2 * self.m);
        for v in 0..n {
            list.extend(self.adj[v].iter().map(|&w| w as u32));
            start.push(list.len() as u32);
        }
        FlatAdjacency { start, list }
    }
}

/// Read-only adjacency in compressed sparse row form: the neighbors of `v`
/// occupy `list[start[v]..start[v + 1]]`. Runs are ascending when built by
/// [`Graph::flat_adjacency`]; [`FlatAdjacency::relabeled`] leaves them in
/// arbitrary order.
pub struct FlatAdjacency {
    start: Vec<u32>,
    list: Vec<u32>,
}

impl FlatAdjacency {
    pub fn n(&self) -> usize {
        self.start.len() - 1
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.start[v + 1] - self.start[v]) as usize
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.list[self.start[v] as usize..self.start[v + 1] as usize]
    }

    /// The same graph with the vertex at `order[p]` renamed to `p`. Renaming
    /// to the position space of a traversal ordering turns later whole-graph
    /// sweeps into near-sequential memory passes.
    pub fn relabeled(&self, order: &[u32]) -> FlatAdjacency {
        let n = self.n();
        debug_assert_eq!(order.len(), n);
        let mut posn = vec![0u32; n];
        for (p, &v) in order.iter().enumerate() {
            posn[v as usize] = p as u32;
        }
        let mut start = Vec::with_capacity(n + 1);
        start.push(0u32);
        let mut list = Vec::with_capacity(self.list.len());
        for &v in order {
            list.extend(self.neighbors(v as usize).iter().map(|&w| posn[w as usize]));
            start.push(list.len() as u32);
        }
        FlatAdjacency { start, list }
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u as usize) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }
}

/// Sorted set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { members: Vec::new() }
    }

    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.members.insert(i, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(i) => {
                self.members.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_members(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// All-pairs BFS distance table.
pub struct DistanceOracle {
    dist: Vec<Vec<u32>>,
}

impl DistanceOracle {
    pub fn new(g: &Graph) -> Self {
        let dist = (0..g.n()).map(|v| g.bfs_distances(v)).collect();
        DistanceOracle { dist }
    }

    /// `None` when `u` and `v` lie in different components.
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u][v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

fn check_members(g: &Graph, s: &VertexSet) -> Result<()> {
    for &v in s.iter() {
        check_vertex(g, v)?;
    }
    Ok(())
}

/// Closed neighborhood `N[v]`.
pub fn neighbors_closed(g: &Graph, v: usize) -> Result<VertexSet> {
    check_vertex(g, v)?;
    let mut members = g.neighbors(v).to_vec();
    members.push(v);
    Ok(VertexSet::from_members(members))
}

/// Vertices at distance exactly two from `v`.
pub fn second_neighborhood(g: &Graph, v: usize) -> Result<VertexSet> {
    check_vertex(g, v)?;
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    for &u in g.neighbors(v) {
        seen[u] = true;
    }
    for &u in g.neighbors(v) {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    Ok(VertexSet::from_members(out))
}

/// True iff every vertex outside `d` has a neighbor in `d` or at least `b`
/// members of `d` at distance exactly two.
pub fn is_disjunctive_dominating(g: &Graph, d: &VertexSet, b: u32) -> Result<bool> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    check_members(g, d)?;
    let mut in_d = vec![false; g.n()];
    for &v in d.iter() {
        in_d[v] = true;
    }
    let mut mark = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        if in_d[v] {
            continue;
        }
        if g.neighbors(v).iter().any(|&u| in_d[u]) {
            continue;
        }
        // Count D-vertices at distance exactly two of v.
        mark[v] = v;
        for &u in g.neighbors(v) {
            mark[u] = v;
        }
        let mut count = 0u32;
        'outer: for &u in g.neighbors(v) {
            for &w in g.neighbors(u) {
                if mark[w] != v {
                    mark[w] = v;
                    if in_d[w] {
                        count += 1;
                        if count >= b {
                            break 'outer;
                        }
                    }
                }
            }
        }
        if count < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_members(g, s)?;
    let mut in_s = vec![false; g.n()];
    for &v in s.iter() {
        in_s[v] = true;
    }
    for v in 0..g.n() {
        if !in_s[v] && !g.neighbors(v).iter().any(|&u| in_s[u]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every vertex outside `s` has at least two neighbors in `s`.
pub fn is_two_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_members(g, s)?;
    let mut in_s = vec![false; g.n()];
    for &v in s.iter() {
        in_s[v] = true;
    }
    for v in 0..g.n() {
        if !in_s[v] && g.neighbors(v).iter().filter(|&&u| in_s[u]).count() < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every edge has at least one endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_members(g, s)?;
    let mut in_s = vec![false; g.n()];
    for &v in s.iter() {
        in_s[v] = true;
    }
    for (u, v) in g.edges() {
        if !in_s[u] && !in_s[v] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parses the `p <n> <m>` / `e <u> <v>` edge-list format. `#` lines are
/// comments and blank lines are skipped. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut seen_m = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().unwrap();
        let parse_err = |msg: String| Error::Parse { line, msg };
        match tag {
            "p" => {
                if g.is_some() {
                    return Err(parse_err("duplicate header".into()));
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err("malformed header, expected `p <n> <m>`".into()))?;
                let m: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err("malformed header, expected `p <n> <m>`".into()))?;
                if tokens.next().is_some() {
                    return Err(parse_err("trailing tokens after header".into()));
                }
                g = Some(Graph::new(n));
                declared_m = m;
            }
            "e" => {
                let g = g
                    .as_mut()
                    .ok_or_else(|| parse_err("edge before `p` header".into()))?;
                let u: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err("malformed edge, expected `e <u> <v>`".into()))?;
                let v: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err("malformed edge, expected `e <u> <v>`".into()))?;
                if tokens.next().is_some() {
                    return Err(parse_err("trailing tokens after edge".into()));
                }
                g.add_edge(u, v).map_err(|e| parse_err(e.to_string()))?;
                seen_m += 1;
            }
            other => {
                return Err(parse_err(format!("unknown line type `{other}`")));
            }
        }
    }
    let g = g.ok_or(Error::Parse { line: last_line + 1, msg: "missing `p` header".into() })?;
    if seen_m != declared_m {
        return Err(Error::Parse {
            line: last_line + 1,
            msg: format!("header declares {declared_m} edges, found {seen_m}"),
        });
    }
    Ok(g)
}

/// Canonical text form: header then edges sorted with `u < v`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
