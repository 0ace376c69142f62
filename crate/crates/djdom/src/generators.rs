//! Seeded deterministic instance generators.
//!
//! All randomness flows through [`SplitMix64`], so a `(family, n, seed)`
//! triple produces a byte-identical graph on every platform and in any
//! reimplementation that follows the documented sampling order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// SplitMix64 generator (Steele, Lea & Flood; the `java.util.SplittableRandom`
/// output function). State update is `s += 0x9E3779B97F4A7C15`; the output is
/// the mixed previous state. Derived values, in the order generators consume
/// them:
/// * `next_u64` — raw output;
/// * `below(k)` — `next_u64() % k` (modulo reduction, kept for portability);
/// * `unit_f64` — `(next_u64() >> 11) as f64 * 2^-53`, uniform in `[0, 1)`;
/// * `shuffle` — Fisher–Yates from the top index down, using `below(i + 1)`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        debug_assert!(k > 0);
        self.next_u64() % k
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

const MAX_ATTEMPTS: usize = 10_000;

/// Connected proper interval graph from a unit-interval model: left endpoints
/// are laid out with successive gaps drawn uniformly from `[0.05, 0.95)`, so
/// consecutive intervals always overlap; vertices `i < j` are adjacent iff
/// `l_j - l_i <= 1`. Vertex labels are then shuffled.
pub fn gen_proper_interval(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut left = Vec::with_capacity(n);
    let mut x = 0.0f64;
    for _ in 0..n {
        left.push(x);
        x += 0.05 + 0.9 * rng.unit_f64();
    }
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    let mut g = Graph::new(n);
    let mut lo = 0usize;
    for j in 1..n {
        while left[j] - left[lo] > 1.0 {
            lo += 1;
        }
        for i in lo..j {
            g.add_edge(label[i], label[j]).expect("model edges are simple");
        }
    }
    debug_assert!(g.is_connected());
    Ok(g)
}

/// Connected Erdős–Rényi graph: each pair independently with probability `p`
/// (pairs scanned in lexicographic order), resampled until connected.
pub fn gen_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("p must lie in [0, 1]".into()));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.unit_f64() < p {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected sample for n={n}, p={p} after {MAX_ATTEMPTS} attempts"
    )))
}

/// Uniform random labeled tree via a Prüfer sequence.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n == 1 {
        return Ok(Graph::new(1));
    }
    let mut rng = SplitMix64::new(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut g = Graph::new(n);
    for &v in &prufer {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, v).unwrap();
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    g.add_edge(a, b).unwrap();
    Ok(g)
}

/// Connected 3-regular graph via the pairing model: three stubs per vertex are
/// shuffled and paired consecutively; samples with loops, parallel edges, or
/// disconnection are rejected. Requires `n` even, `n >= 4`.
pub fn gen_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidParameter("cubic graphs need even n >= 4".into()));
    }
    let mut rng = SplitMix64::new(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut stubs: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        rng.shuffle(&mut stubs);
        let mut g = Graph::new(n);
        for pair in stubs.chunks(2) {
            if g.add_edge(pair[0], pair[1]).is_err() {
                continue 'attempt;
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no simple connected cubic sample for n={n} after {MAX_ATTEMPTS} attempts"
    )))
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need n >= 3");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).expect("cycle edges are simple")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete edges are simple")
}

/// Star `K_{1,leaves}` with the center at index 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
}

pub fn claw() -> Graph {
    star(3)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are simple")
}

/// Small named graphs: `pN`, `cN`, `kN`, `starN` (N leaves), `claw`,
/// `petersen`.
pub fn named(name: &str) -> Result<Graph> {
    let bad = || Error::InvalidParameter(format!("unknown graph name `{name}`"));
    match name {
        "claw" => return Ok(claw()),
        "petersen" => return Ok(petersen()),
        _ => {}
    }
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let (prefix, digits) = name.split_at(split);
    let k: usize = digits.parse().map_err(|_| bad())?;
    match prefix {
        "p" if k >= 1 => Ok(path(k)),
        "c" if k >= 3 => Ok(cycle(k)),
        "k" if k >= 1 => Ok(complete(k)),
        "star" if k >= 1 => Ok(star(k)),
        _ => Err(bad()),
    }
}
