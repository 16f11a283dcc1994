use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::group::{CyclicLattice, ElementOrderProfile, FiniteGroup};

/// The graphs on a group's elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFamily {
    /// One element is a power of the other.
    Power,
    /// The two elements generate a cyclic subgroup.
    Enhanced,
    /// One element order divides the other.
    Supergraph,
    /// One generated cyclic subgroup properly contains the other.
    ReducedPower,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 4] = [
        GraphFamily::Supergraph,
        GraphFamily::Enhanced,
        GraphFamily::ReducedPower,
        GraphFamily::Power,
    ];

    /// Families with a closed-form strong metric dimension.
    pub const WITH_CLOSED_FORM: [GraphFamily; 3] = [
        GraphFamily::Supergraph,
        GraphFamily::Enhanced,
        GraphFamily::ReducedPower,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphFamily::Power => "power",
            GraphFamily::Enhanced => "enhanced",
            GraphFamily::Supergraph => "supergraph",
            GraphFamily::ReducedPower => "reduced_power",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(GraphFamily::Power),
            "enhanced" => Ok(GraphFamily::Enhanced),
            "supergraph" | "order_supergraph" => Ok(GraphFamily::Supergraph),
            "reduced" | "reduced_power" => Ok(GraphFamily::ReducedPower),
            other => Err(Error::Precondition(format!(
                "unknown graph family `{other}`"
            ))),
        }
    }
}

pub fn build_graph(group: &FiniteGroup, family: GraphFamily) -> SimpleGraph {
    let lattice = group.cyclic_lattice();
    let profile = group.profile();
    build_graph_with(group, &lattice, &profile, family)
}

/// Vertex `i` is group element `i`.
pub fn build_graph_with(
    group: &FiniteGroup,
    lattice: &CyclicLattice,
    profile: &ElementOrderProfile,
    family: GraphFamily,
) -> SimpleGraph {
    let n = group.order();
    match family {
        GraphFamily::Power => SimpleGraph::from_predicate(n, |x, y| {
            lattice.cyclic_of(y).contains(x) || lattice.cyclic_of(x).contains(y)
        }),
        GraphFamily::Enhanced => SimpleGraph::from_predicate(n, |x, y| lattice.share_maximal(x, y)),
        GraphFamily::Supergraph => SimpleGraph::from_predicate(n, |x, y| {
            let (a, b) = (profile.order_of(x), profile.order_of(y));
            a % b == 0 || b % a == 0
        }),
        GraphFamily::ReducedPower => SimpleGraph::from_predicate(n, |x, y| {
            lattice.strictly_below(x, y) || lattice.strictly_below(y, x)
        }),
    }
}
