use std::time::Instant;

use grpdim_core::closed_forms::Branch;
use grpdim_core::{
    closed_form, sdim_diameter2, sdim_subset_oracle, sdim_vertex_cover, Error, FiniteGroup,
    GraphFamily, SearchLimits, SimpleGraph,
};

use crate::args::Engine;

/// One method's answer.
pub struct Computed {
    pub value: usize,
    pub branch: Option<Branch>,
    pub omega_reduced: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub millis: f64,
}

/// Whether `engine` can run at all on this input; inapplicable methods are
/// skipped rather than reported as errors.
pub fn applicable(engine: Engine, family: GraphFamily, n: usize, limits: &SearchLimits) -> bool {
    match engine {
        Engine::Formula => family != GraphFamily::Power,
        Engine::Oracle => n <= limits.oracle_cap,
        Engine::Diameter2 | Engine::Vertexcover => true,
    }
}

pub fn run(
    engine: Engine,
    group: &FiniteGroup,
    graph: &SimpleGraph,
    family: GraphFamily,
    limits: &SearchLimits,
) -> Result<Computed, Error> {
    let start = Instant::now();
    let mut out = match engine {
        Engine::Formula => {
            let r = closed_form(group, family)?;
            Computed {
                value: r.value,
                branch: Some(r.branch),
                omega_reduced: Some(r.omega_reduced),
                witness: None,
                millis: 0.0,
            }
        }
        Engine::Diameter2 | Engine::Vertexcover | Engine::Oracle => {
            let r = match engine {
                Engine::Diameter2 => sdim_diameter2(graph, limits)?,
                Engine::Vertexcover => sdim_vertex_cover(graph, limits)?,
                _ => sdim_subset_oracle(graph, limits)?,
            };
            Computed {
                value: r.value,
                branch: None,
                omega_reduced: r.omega_reduced,
                witness: r.witness,
                millis: 0.0,
            }
        }
    };
    out.millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(out)
}
