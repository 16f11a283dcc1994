//! Exact maximum clique by branch and bound with greedy colouring bounds,
//! plus Bron–Kerbosch enumeration of maximal cliques.

use fixedbitset::FixedBitSet;

use super::SearchLimits;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    /// Vertices of a maximum clique, ascending.
    pub members: Vec<usize>,
}

pub fn clique_number(graph: &SimpleGraph, limits: &SearchLimits) -> Result<usize> {
    max_clique(graph, limits).map(|c| c.size)
}

/// Repeatedly removes a minimum-degree vertex (smallest index on ties) and
/// returns the removal order reversed, so dense cores come first.
fn degeneracy_order(graph: &SimpleGraph) -> Vec<usize> {
    let n = graph.vcount();
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for u in graph.neighbors(v).ones() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

struct Search {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// Greedy colouring of `candidates` in position order; returns vertices
    /// with their colour number, colours non-decreasing.
    fn colour(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                uncoloured.set(v, false);
                q.difference_with(&self.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut candidates: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Capacity {
                what: "clique search node budget".into(),
                limit: self.budget as usize,
                best: Some(self.best.len()),
            });
        }
        let coloured = self.colour(&candidates);
        for &(v, colour) in coloured.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            candidates.set(v, false);
        }
        Ok(())
    }
}

pub fn max_clique(graph: &SimpleGraph, limits: &SearchLimits) -> Result<Clique> {
    let n = graph.vcount();
    if n > limits.clique_cap {
        return Err(Error::Capacity {
            what: format!("clique search on {n} vertices"),
            limit: limits.clique_cap,
            best: None,
        });
    }
    if n == 0 {
        return Ok(Clique {
            size: 0,
            members: Vec::new(),
        });
    }
    let order = degeneracy_order(graph);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<FixedBitSet> = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            for u in graph.neighbors(v).ones() {
                row.insert(position[u]);
            }
            row
        })
        .collect();
    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: limits.node_budget,
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all)?;
    let mut members: Vec<usize> = search.best.iter().map(|&p| order[p]).collect();
    members.sort_unstable();
    Ok(Clique {
        size: members.len(),
        members,
    })
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each ascending,
/// in discovery order. Fails once more than `limit` cliques are found.
pub fn maximal_cliques(graph: &SimpleGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    fn recurse(
        graph: &SimpleGraph,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        if p.is_clear() {
            if x.is_clear() {
                if out.len() == limit {
                    return Err(Error::Capacity {
                        what: "maximal clique enumeration".into(),
                        limit,
                        best: None,
                    });
                }
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return Ok(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| {
                (
                    p.intersection_count(graph.neighbors(u)),
                    std::cmp::Reverse(u),
                )
            })
            .unwrap();
        let mut branch = p.clone();
        branch.difference_with(graph.neighbors(pivot));
        for v in branch.ones() {
            let nv = graph.neighbors(v);
            let mut p2 = p.clone();
            p2.intersect_with(nv);
            let mut x2 = x.clone();
            x2.intersect_with(nv);
            r.push(v);
            recurse(graph, r, p2, x2, out, limit)?;
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
        Ok(())
    }

    let n = graph.vcount();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    recurse(
        graph,
        &mut Vec::new(),
        p,
        FixedBitSet::with_capacity(n),
        &mut out,
        limit,
    )?;
    Ok(out)
}
