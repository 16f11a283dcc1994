//! Finite groups, the graphs defined on their elements, and the strong
//! metric dimension of those graphs.
//!
//! Groups are dense Cayley tables ([`FiniteGroup`]). From a group we build
//! the order supergraph, enhanced power graph, reduced power graph and power
//! graph ([`build_graph`]), and compute strong metric dimension three ways:
//! an exhaustive oracle, a vertex cover of the strong resolving graph, and
//! the clique number of the neighbourhood quotient ([`sdim`]). The
//! [`closed_forms`] module evaluates the known formulas so every route can be
//! checked against every other.

pub mod arith;
pub mod catalog;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod group;
pub mod sdim;

pub use arith::big_omega;
pub use closed_forms::{closed_form, FormulaReport};
pub use error::{Error, Result};
pub use graph::{build_graph, reduced_graph, GraphFamily, ReducedGraph, SimpleGraph};
pub use group::{ClassFlags, CyclicLattice, ElementOrderProfile, FiniteGroup, GroupDescriptor};
pub use sdim::{
    clique_number, is_proper_order_chain, is_strong_resolving_set, sdim_diameter2,
    sdim_subset_oracle, sdim_vertex_cover, strong_resolving_graph, strongly_resolves, Method,
    SdimResult, SearchLimits,
};
