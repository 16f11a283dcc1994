use super::{Method, SdimResult, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{Distances, SimpleGraph};

#[inline]
fn resolves(d: &Distances, w: usize, u: usize, v: usize) -> bool {
    let (wu, wv, uv) = (d.get(w, u) as u64, d.get(w, v) as u64, d.get(u, v) as u64);
    wu == wv + uv || wv == wu + uv
}

/// `w` strongly resolves `u` and `v` when one of them lies on a shortest
/// path from `w` to the other.
pub fn strongly_resolves(graph: &SimpleGraph, w: usize, u: usize, v: usize) -> Result<bool> {
    for x in [w, u, v] {
        graph.check_vertex(x)?;
    }
    if u == v {
        return Err(Error::Precondition(
            "a resolved pair needs two distinct vertices".into(),
        ));
    }
    Ok(resolves(graph.distances(), w, u, v))
}

/// Every pair of distinct vertices is strongly resolved by a member of `set`.
/// Out-of-range members are ignored.
pub fn is_strong_resolving_set(graph: &SimpleGraph, set: &[usize]) -> bool {
    let n = graph.vcount();
    let d = graph.distances();
    let members: Vec<usize> = set.iter().copied().filter(|&w| w < n).collect();
    (0..n).all(|u| (u + 1..n).all(|v| members.iter().any(|&w| resolves(d, w, u, v))))
}

fn require_connected(graph: &SimpleGraph) -> Result<()> {
    if graph.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Minimum strong resolving set by exhaustive search.
///
/// Supersets of resolving sets resolve, so the search grows the set of
/// excluded vertices one size at a time and stops at the first size where
/// every choice leaves some pair unresolved.
pub fn sdim_subset_oracle(graph: &SimpleGraph, limits: &SearchLimits) -> Result<SdimResult> {
    let n = graph.vcount();
    let cap = limits.oracle_cap.min(SearchLimits::ORACLE_HARD_CAP);
    if n > cap {
        return Err(Error::Capacity {
            what: format!(
                "subset oracle on {n} vertices (use the vertex-cover method for larger graphs)"
            ),
            limit: cap,
            best: None,
        });
    }
    require_connected(graph)?;
    let d = graph.distances();
    // resolver mask of each unordered pair
    let mut pair_masks: Vec<u64> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let mask = (0..n)
                .filter(|&w| resolves(d, w, u, v))
                .fold(0u64, |m, w| m | 1 << w);
            pair_masks.push(mask);
        }
    }
    // a set of excluded vertices is allowed when no pair has all its resolvers there
    let allowed = |excluded: u64| pair_masks.iter().all(|&m| m & !excluded != 0);

    let mut best_excluded = 0u64;
    'sizes: for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if allowed(mask) {
                best_excluded = mask;
                continue 'sizes;
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| combo[i] < n - size + i) else {
                break 'sizes;
            };
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&v| best_excluded >> v & 1 == 0).collect();
    Ok(SdimResult {
        value: witness.len(),
        method: Method::SubsetOracle,
        witness: Some(witness),
        omega_reduced: None,
    })
}

/// Edges join mutually maximally distant pairs: `u, v` such that no
/// neighbour of `v` is farther from `u`, and no neighbour of `u` is farther
/// from `v`.
pub fn strong_resolving_graph(graph: &SimpleGraph) -> SimpleGraph {
    let d = graph.distances();
    let farthest_from = |u: usize, v: usize| {
        let duv = d.get(u, v);
        graph.neighbors(v).ones().all(|w| d.get(u, w) <= duv)
    };
    SimpleGraph::from_predicate(graph.vcount(), |u, v| {
        farthest_from(u, v) && farthest_from(v, u)
    })
}
