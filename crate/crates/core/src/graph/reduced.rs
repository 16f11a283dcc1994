use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Quotient of a graph by closed-neighbourhood equality.
#[derive(Debug, Clone)]
pub struct ReducedGraph {
    /// Classes ordered by their smallest vertex; each class is ascending.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Smallest vertex of each class.
    pub reps: Vec<usize>,
    /// Graph on class indices; adjacent iff the representatives are.
    pub quotient: SimpleGraph,
}

impl ReducedGraph {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Source vertices of the classes in `class_ids`, ascending.
    pub fn union_of_classes(&self, class_ids: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = class_ids
            .iter()
            .flat_map(|&c| self.classes[c].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn reduced_graph(graph: &SimpleGraph) -> ReducedGraph {
    let n = graph.vcount();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for v in 0..n {
        let mut closed = graph.neighbors(v).clone();
        closed.insert(v);
        let id = *index.entry(closed).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
        class_of.push(id);
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let quotient = graph.induced(&reps);
    ReducedGraph {
        classes,
        class_of,
        reps,
        quotient,
    }
}
