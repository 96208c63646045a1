//! Ground-truth girth by breadth-first search on a finite window of the
//! semi-infinite Tanner graph.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{SyndromeFormer, WindowMatrix};
use crate::parallel;

/// Outcome of a capped girth computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    /// Length of the shortest cycle.
    Exact(u32),
    /// No cycle of length `<= cap` exists.
    AboveCap(u32),
}

impl Girth {
    /// True when every cycle is at least `g` long.
    pub fn at_least(self, g: u32) -> bool {
        match self {
            Girth::Exact(x) => x >= g,
            // Cycles are even, so none up to `cap` means none below `cap + 2`.
            Girth::AboveCap(cap) => cap + 2 >= g,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            Girth::Exact(x) => Some(x),
            Girth::AboveCap(_) => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Exact(g) => write!(f, "{g}"),
            Girth::AboveCap(cap) => write!(f, ">{cap}"),
        }
    }
}

/// Bipartite graph with checks `0..n_checks` and variables `0..n_vars`.
/// Internally node `k < n_checks` is a check and `n_checks + v` is variable `v`.
#[derive(Debug, Clone)]
pub struct TannerGraph {
    n_checks: usize,
    adj: Vec<Vec<u32>>,
}

impl TannerGraph {
    pub fn from_window(w: &WindowMatrix) -> Self {
        Self::from_columns(w.n_checks(), w.columns())
    }

    /// `columns[v]` lists the checks adjacent to variable `v`.
    pub fn from_columns(n_checks: usize, columns: &[Vec<u32>]) -> Self {
        let mut adj = vec![Vec::new(); n_checks + columns.len()];
        for (v, col) in columns.iter().enumerate() {
            let vn = (n_checks + v) as u32;
            for &r in col {
                adj[r as usize].push(vn);
                adj[vn as usize].push(r);
            }
        }
        TannerGraph { n_checks, adj }
    }

    /// Builds the graph of a dense 0/1 matrix (rows are checks).
    pub fn from_dense(m: &[Vec<u8>]) -> Self {
        let n_vars = m.first().map_or(0, Vec::len);
        let columns: Vec<Vec<u32>> = (0..n_vars)
            .map(|v| {
                (0..m.len())
                    .filter(|&r| m[r][v] != 0)
                    .map(|r| r as u32)
                    .collect()
            })
            .collect();
        Self::from_columns(m.len(), &columns)
    }

    pub fn n_checks(&self) -> usize {
        self.n_checks
    }

    pub fn n_vars(&self) -> usize {
        self.adj.len() - self.n_checks
    }

    pub fn n_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj[..self.n_checks].iter().map(Vec::len).sum()
    }

    pub fn neighbors(&self, node: usize) -> &[u32] {
        &self.adj[node]
    }

    pub fn var_node(&self, v: usize) -> usize {
        self.n_checks + v
    }
}

/// Reusable BFS buffers; `stamp` avoids clearing between sources.
struct Bfs {
    dist: Vec<u32>,
    parent: Vec<u32>,
    seen: Vec<u32>,
    stamp: u32,
    queue: VecDeque<u32>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs {
            dist: vec![0; n],
            parent: vec![0; n],
            seen: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    /// Shortest closed walk through `src` detected by BFS, bounded by `best`.
    /// Any value returned is the length of some cycle in the graph.
    fn shortest_through(&mut self, g: &TannerGraph, src: usize, best: u32) -> u32 {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.seen[src] = stamp;
        self.dist[src] = 0;
        self.parent[src] = u32::MAX;
        self.queue.push_back(src as u32);
        let mut best = best;
        while let Some(x) = self.queue.pop_front() {
            let x = x as usize;
            let dx = self.dist[x];
            // Non-tree edges met from depth dx close cycles of length >= 2·dx + 2.
            if 2 * dx + 2 > best {
                break;
            }
            for &y in &g.adj[x] {
                if y == self.parent[x] {
                    continue;
                }
                let y = y as usize;
                if self.seen[y] == stamp {
                    best = best.min(dx + self.dist[y] + 1);
                } else {
                    self.seen[y] = stamp;
                    self.dist[y] = dx + 1;
                    self.parent[y] = x as u32;
                    self.queue.push_back(y as u32);
                }
            }
        }
        best
    }
}

/// Girth over BFS runs from `sources` only; exact when some shortest cycle
/// passes through a source.
pub fn girth_from_sources(g: &TannerGraph, sources: &[usize], cap: u32, workers: usize) -> Girth {
    let sentinel = cap + 1;
    let best = if workers <= 1 {
        let mut bfs = Bfs::new(g.n_nodes());
        let mut best = sentinel;
        for &s in sources {
            best = bfs.shortest_through(g, s, best);
            if best == 4 {
                break;
            }
        }
        best
    } else {
        parallel::install(workers, || {
            sources
                .par_chunks(sources.len().div_ceil(workers * 4).max(1))
                .map_init(
                    || Bfs::new(g.n_nodes()),
                    |bfs, chunk| {
                        let mut best = sentinel;
                        for &s in chunk {
                            best = bfs.shortest_through(g, s, best);
                        }
                        best
                    },
                )
                .min()
                .unwrap_or(sentinel)
        })
    };
    if best <= cap {
        Girth::Exact(best)
    } else {
        Girth::AboveCap(cap)
    }
}

/// Girth of an arbitrary Tanner graph, BFS from every node.
pub fn tanner_girth(g: &TannerGraph, cap: u32) -> Girth {
    let sources: Vec<usize> = (0..g.n_nodes()).collect();
    girth_from_sources(g, &sources, cap, 1)
}

/// Default limit on window nodes for [`conv_girth`].
pub const DEFAULT_NODE_BUDGET: usize = 20_000_000;

/// Number of block columns that contains a translate of every cycle of
/// length `<= cap`.
pub fn window_blocks(m_h: u32, cap: u32) -> u32 {
    (cap / 2) * m_h + 1
}

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub node_budget: usize,
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            workers: 1,
        }
    }
}

/// Girth of the semi-infinite code, capped at `cap`.
///
/// Expands `(cap/2)·m_h + 1` block columns. Consecutive variables on a cycle
/// lie at most `m_h` blocks apart, so any cycle of length `<= cap` has a
/// translate starting in block 0 whose checks all fall inside the window.
/// Windows are submatrices of `H`, so they never create spurious cycles.
/// By time invariance it suffices to search from the block-0 variables.
pub fn conv_girth(hs: &SyndromeFormer, cap: u32) -> Result<Girth> {
    conv_girth_with(hs, cap, OracleConfig::default())
}

pub fn conv_girth_with(hs: &SyndromeFormer, cap: u32, cfg: OracleConfig) -> Result<Girth> {
    let cap = cap & !1;
    if cap < 4 {
        return Ok(Girth::AboveCap(cap));
    }
    let blocks = window_blocks(hs.m_h(), cap);
    let nodes = (hs.a() as usize + hs.c() as usize) * blocks as usize;
    if nodes > cfg.node_budget {
        return Err(Error::ResourceLimit {
            nodes,
            budget: cfg.node_budget,
        });
    }
    let g = TannerGraph::from_window(&hs.expand_window(blocks));
    let sources: Vec<usize> = (0..hs.a() as usize).map(|v| g.var_node(v)).collect();
    Ok(girth_from_sources(&g, &sources, cap, cfg.workers))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_2x2() {
        let g = TannerGraph::from_dense(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(tanner_girth(&g, 20), Girth::Exact(4));
    }

    #[test]
    fn forest_has_no_cycles() {
        let g = TannerGraph::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(tanner_girth(&g, 4), Girth::AboveCap(4));
        assert_eq!(tanner_girth(&g, 100), Girth::AboveCap(100));
    }

    #[test]
    fn hexagon() {
        // Three checks, three variables, one 6-cycle.
        let g = TannerGraph::from_dense(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(tanner_girth(&g, 12), Girth::Exact(6));
        assert_eq!(tanner_girth(&g, 4), Girth::AboveCap(4));
        assert_eq!(g.n_edges(), 6);
    }

    #[test]
    fn at_least() {
        assert!(Girth::Exact(8).at_least(8));
        assert!(!Girth::Exact(6).at_least(8));
        assert!(Girth::AboveCap(6).at_least(8));
        assert!(!Girth::AboveCap(4).at_least(8));
    }

    #[test]
    fn single_row_c1_has_short_cycles() {
        let hs = SyndromeFormer::new(1, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(conv_girth(&hs, 12).unwrap(), Girth::Exact(4));
    }

    #[test]
    fn node_budget() {
        let hs = SyndromeFormer::new(1, 50, vec![vec![0, 49], vec![0, 1]]).unwrap();
        let cfg = OracleConfig {
            node_budget: 100,
            workers: 1,
        };
        assert!(matches!(
            conv_girth_with(&hs, 12, cfg),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
