//! Exact strong metric dimension.
//!
//! Three independent routes are provided: enumeration straight from the
//! definition, minimum vertex cover of the strong resolving graph, and the
//! clique number of the neighbourhood quotient for graphs of diameter two.

mod clique;
mod cover;
mod resolve;

use serde::Serialize;

pub use clique::{clique_number, max_clique, maximal_cliques, Clique};
pub use cover::{sdim_diameter2, sdim_vertex_cover};
pub use resolve::{
    is_strong_resolving_set, sdim_subset_oracle, strong_resolving_graph, strongly_resolves,
};

use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SubsetOracle,
    VertexCover,
    Diameter2Clique,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SubsetOracle => "subset_oracle",
            Method::VertexCover => "vertex_cover",
            Method::Diameter2Clique => "diameter2_clique",
            Method::ClosedForm => "closed_form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdimResult {
    pub value: usize,
    pub method: Method,
    /// A strong resolving set of size `value`, ascending.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_reduced: Option<usize>,
}

/// Caps for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest graph the subset oracle enumerates (at most 64).
    pub oracle_cap: usize,
    /// Largest graph handed to the vertex-cover route.
    pub cover_cap: usize,
    /// Largest graph handed to the clique solver.
    pub clique_cap: usize,
    /// Branch-and-bound nodes per search.
    pub node_budget: u64,
}

impl SearchLimits {
    pub const ORACLE_HARD_CAP: usize = 64;
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            oracle_cap: 16,
            cover_cap: 128,
            clique_cap: 1024,
            node_budget: 20_000_000,
        }
    }
}

/// Orders are pairwise distinct and totally ordered by divisibility.
pub fn is_proper_order_chain(group: &FiniteGroup, elements: &[usize]) -> bool {
    let mut orders: Vec<u64> = elements.iter().map(|&a| group.element_order(a)).collect();
    orders.sort_unstable();
    orders.windows(2).all(|w| w[0] != w[1] && w[1] % w[0] == 0)
}
