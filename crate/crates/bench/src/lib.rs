//! Fixtures for the solver benchmarks.

use grpdim_core::{build_graph, FiniteGroup, GraphFamily, SimpleGraph};

/// Builds `family` on the group named by `descriptor`.
pub fn fixture(descriptor: &str, family: GraphFamily) -> (FiniteGroup, SimpleGraph) {
    let group = FiniteGroup::from_descriptor(descriptor).expect("fixture descriptor");
    let graph = build_graph(&group, family);
    (group, graph)
}
