use super::clique::max_clique;
use super::resolve::strong_resolving_graph;
use super::{Method, SdimResult, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{reduced_graph, SimpleGraph};

/// Minimum vertex cover of the strong resolving graph, found as the
/// complement of a maximum independent set (a maximum clique of the
/// complement). Vertices that are mutually maximally distant from nothing
/// are never needed in the cover.
pub fn sdim_vertex_cover(graph: &SimpleGraph, limits: &SearchLimits) -> Result<SdimResult> {
    let n = graph.vcount();
    if n > limits.cover_cap {
        return Err(Error::Capacity {
            what: format!("vertex-cover search on {n} vertices"),
            limit: limits.cover_cap,
            best: None,
        });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let srg = strong_resolving_graph(graph);
    let independent = max_clique(&srg.complement(), limits).map_err(|e| match e {
        Error::Capacity { what, limit, best } => Error::Capacity {
            what,
            limit,
            // a large independent set bounds the cover from above
            best: best.map(|b| n - b),
        },
        other => other,
    })?;
    let mut keep = vec![true; n];
    for &v in &independent.members {
        keep[v] = false;
    }
    let witness: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    Ok(SdimResult {
        value: witness.len(),
        method: Method::VertexCover,
        witness: Some(witness),
        omega_reduced: None,
    })
}

/// For a connected graph of diameter two, `n - omega(R)` where `R` is the
/// quotient by closed-neighbourhood equality; complete graphs give `n - 1`.
pub fn sdim_diameter2(graph: &SimpleGraph, limits: &SearchLimits) -> Result<SdimResult> {
    let n = graph.vcount();
    if graph.is_complete() {
        return Ok(SdimResult {
            value: n.saturating_sub(1),
            method: Method::Diameter2Clique,
            witness: Some((0..n.saturating_sub(1)).collect()),
            omega_reduced: Some(1.min(n)),
        });
    }
    if !graph.within_distance_two() {
        return Err(match graph.diameter() {
            None => Error::Disconnected,
            Some(d) => Error::Precondition(format!(
                "diameter {d} exceeds 2; use the vertex-cover or subset-oracle method"
            )),
        });
    }
    let reduced = reduced_graph(graph);
    let clique = max_clique(&reduced.quotient, limits)?;
    let mut keep = vec![true; n];
    for &c in &clique.members {
        keep[reduced.reps[c]] = false;
    }
    Ok(SdimResult {
        value: n - clique.size,
        method: Method::Diameter2Clique,
        witness: Some((0..n).filter(|&v| keep[v]).collect()),
        omega_reduced: Some(clique.size),
    })
}
