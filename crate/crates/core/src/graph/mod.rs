//! Undirected loop-free graphs on `0..n` with bitset adjacency.

mod export;
mod families;
mod reduced;

use std::collections::VecDeque;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

pub use export::{to_dot, GraphJson};
pub use families::{build_graph, build_graph_with, GraphFamily};
pub use reduced::{reduced_graph, ReducedGraph};

use crate::error::{Error, Result};

/// Hop-count distance used for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop counts, row-major.
#[derive(Debug, Clone)]
pub struct Distances {
    n: usize,
    d: Vec<u32>,
}

impl Distances {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

#[derive(Debug, Clone, Default)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
    dist: OnceLock<Distances>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            dist: OnceLock::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adj[u].insert_range(..);
            g.adj[u].set(u, false);
        }
        g
    }

    /// Star with centre 0.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vcount: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.dist = OnceLock::new();
    }

    pub fn vcount(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vcount();
        self.adj.iter().all(|r| r.count_ones(..) + 1 == n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vcount() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vcount: self.vcount(),
            })
        }
    }

    /// `N[v]`: the neighbours of `v` together with `v`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<FixedBitSet> {
        self.check_vertex(v)?;
        let mut set = self.adj[v].clone();
        set.insert(v);
        Ok(set)
    }

    /// All-pairs distances by breadth-first search, computed once.
    pub fn distances(&self) -> &Distances {
        self.dist.get_or_init(|| {
            let n = self.vcount();
            let mut d = vec![UNREACHABLE; n * n];
            let mut queue = VecDeque::with_capacity(n);
            for s in 0..n {
                let row = &mut d[s * n..(s + 1) * n];
                row[s] = 0;
                queue.push_back(s);
                while let Some(u) = queue.pop_front() {
                    let next = row[u] + 1;
                    for v in self.adj[u].ones() {
                        if row[v] == UNREACHABLE {
                            row[v] = next;
                            queue.push_back(v);
                        }
                    }
                }
            }
            Distances { n, d }
        })
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<u32> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances().get(u, v))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vcount();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.is_full()
    }

    /// Every vertex within distance two of every other, checked on
    /// neighbourhood bitsets without building the distance table.
    pub fn within_distance_two(&self) -> bool {
        let n = self.vcount();
        (0..n).all(|u| {
            let mut reach = self.adj[u].clone();
            reach.insert(u);
            for v in self.adj[u].ones() {
                if reach.is_full() {
                    break;
                }
                reach.union_with(&self.adj[v]);
            }
            reach.is_full()
        })
    }

    /// Largest distance, or `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        let n = self.vcount();
        let dist = self.distances();
        Some(
            (0..n)
                .flat_map(|u| dist.row(u).iter().copied())
                .max()
                .unwrap_or(0),
        )
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vcount();
        let mut g = Self::empty(n);
        for u in 0..n {
            let mut row = self.adj[u].clone();
            row.toggle_range(..);
            row.set(u, false);
            g.adj[u] = row;
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        Self::from_predicate(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    /// Every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_spanning_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vcount() == other.vcount()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for SimpleGraph {}
