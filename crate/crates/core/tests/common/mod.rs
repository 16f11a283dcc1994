#![allow(dead_code)]

use grpdim_core::catalog::catalog;
use grpdim_core::graph::build_graph_with;
use grpdim_core::{CyclicLattice, ElementOrderProfile, FiniteGroup, GraphFamily, SimpleGraph};

pub struct Fixture {
    pub group: FiniteGroup,
    pub profile: ElementOrderProfile,
    pub lattice: CyclicLattice,
}

impl Fixture {
    pub fn new(group: FiniteGroup) -> Self {
        let profile = group.profile();
        let lattice = group.cyclic_lattice();
        Fixture {
            group,
            profile,
            lattice,
        }
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn n(&self) -> usize {
        self.group.order()
    }

    pub fn graph(&self, family: GraphFamily) -> SimpleGraph {
        build_graph_with(&self.group, &self.lattice, &self.profile, family)
    }
}

pub fn fixtures(max_order: usize) -> Vec<Fixture> {
    catalog(max_order)
        .iter()
        .map(|d| Fixture::new(d.build().expect("catalog group builds")))
        .collect()
}

/// Closed neighbourhood equality, straight from adjacency.
pub fn twins(g: &SimpleGraph, x: usize, y: usize) -> bool {
    let mut a = g.neighbors(x).clone();
    a.insert(x);
    let mut b = g.neighbors(y).clone();
    b.insert(y);
    a == b
}

/// Isomorphism test by extending an assignment of generator images along the
/// Cayley graph of `h`. Exponential in the number of generators; fine for
/// the small groups it is used on.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let n = g.order();
    if n != h.order() || g.order_counts() != h.order_counts() {
        return false;
    }
    // greedy generating set of h, largest orders first
    let mut by_order: Vec<usize> = h.elements().collect();
    by_order.sort_by_key(|&a| std::cmp::Reverse(h.element_order(a)));
    let mut gens = Vec::new();
    let mut span = vec![0];
    for a in by_order {
        if span.len() == n {
            break;
        }
        if !span.contains(&a) {
            gens.push(a);
            span = h.generated_subgroup(&gens);
        }
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            g.elements()
                .filter(|&a| g.element_order(a) == h.element_order(s))
                .collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    search(g, h, &gens, &candidates, &mut images, 0)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return extends_to_isomorphism(g, h, gens, images);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if search(g, h, gens, candidates, images, depth + 1) {
            return true;
        }
    }
    false
}

fn extends_to_isomorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = h.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(a) = queue.pop() {
        for (&s, &img) in gens.iter().zip(images) {
            let b = h.mul(a, s);
            let target = g.mul(map[a], img);
            if map[b] == usize::MAX {
                map[b] = target;
                queue.push(b);
            } else if map[b] != target {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if m == usize::MAX || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[h.mul(a, b)] == g.mul(map[a], map[b])))
}
