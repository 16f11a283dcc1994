//! Catalog-wide invariants of groups, lattices and the four graph families.

mod common;

use common::{fixtures, isomorphic, twins};
use grpdim_core::arith::totient;
use grpdim_core::closed_forms::sdim_order_supergraph;
use grpdim_core::sdim::maximal_cliques;
use grpdim_core::{
    is_strong_resolving_set, sdim_diameter2, sdim_vertex_cover, FiniteGroup, GraphFamily,
    SearchLimits,
};

#[test]
fn element_counts_are_multiples_of_totient() {
    for f in fixtures(64) {
        for (d, count) in f.group.order_counts() {
            assert_eq!(count as u64 % totient(d), 0, "{} order {d}", f.name());
        }
    }
}

#[test]
fn quaternion_structure() {
    for m in 2..=16 {
        let g = FiniteGroup::from_descriptor(&format!("Q{}", 4 * m)).unwrap();
        let gen_x = 1;
        let cyclic_part = g.powers(gen_x);
        assert_eq!(cyclic_part.len(), 2 * m);
        let outside_order_four = g
            .elements()
            .filter(|a| !cyclic_part.contains(a) && g.element_order(*a) == 4)
            .count();
        assert_eq!(outside_order_four, 2 * m, "Q{}", 4 * m);
        assert!(g.profile().flags.unique_involution.is_some(), "Q{}", 4 * m);
    }
}

#[test]
fn generalized_quaternion_flag_matches_isomorphism_oracle() {
    let mut checked = 0;
    for f in fixtures(32) {
        if f.profile.flags.prime != Some(2) || f.n() < 8 {
            continue;
        }
        let q = FiniteGroup::from_descriptor(&format!("Q{}", f.n())).unwrap();
        let iso = isomorphic(&f.group, &q);
        assert_eq!(
            f.profile.flags.generalized_quaternion.is_some(),
            iso,
            "{}",
            f.name()
        );
        checked += 1;
    }
    assert!(checked > 20);
}

#[test]
fn isomorphism_oracle_sanity() {
    let g = |s: &str| FiniteGroup::from_descriptor(s).unwrap();
    assert!(isomorphic(&g("D6"), &g("S3")));
    assert!(isomorphic(&g("Z2xZ3"), &g("Z6")));
    assert!(isomorphic(&g("E2^2"), &g("D4")));
    assert!(!isomorphic(&g("D8"), &g("Q8")));
    assert!(!isomorphic(&g("Z4xZ4"), &g("Z2xZ8")));
}

#[test]
fn families_nest_as_spanning_subgraphs() {
    for f in fixtures(32) {
        let reduced = f.graph(GraphFamily::ReducedPower);
        let power = f.graph(GraphFamily::Power);
        let enhanced = f.graph(GraphFamily::Enhanced);
        let supergraph = f.graph(GraphFamily::Supergraph);
        assert!(reduced.is_spanning_subgraph_of(&power), "{}", f.name());
        assert!(power.is_spanning_subgraph_of(&enhanced), "{}", f.name());
        assert!(power.is_spanning_subgraph_of(&supergraph), "{}", f.name());
    }
}

#[test]
fn graphs_are_connected_with_small_diameter() {
    for f in fixtures(32) {
        for family in GraphFamily::ALL {
            let g = f.graph(family);
            let d = g.diameter().expect("connected");
            assert!(d <= 2, "{} {family}", f.name());
            if f.n() > 1 {
                assert_eq!(g.degree(0), f.n() - 1);
            }
        }
    }
}

#[test]
fn supergraph_adjacency_depends_only_on_orders() {
    for f in fixtures(24) {
        let g = f.graph(GraphFamily::Supergraph);
        let o = &f.profile.orders;
        for x in f.group.elements() {
            for y in f.group.elements() {
                for x2 in f.group.elements().filter(|&a| o[a] == o[x] && a != x) {
                    if y != x && y != x2 {
                        assert_eq!(g.has_edge(x, y), g.has_edge(x2, y), "{}", f.name());
                    }
                }
            }
        }
    }
}

#[test]
fn reduced_power_graph_is_power_graph_minus_same_cyclic_edges() {
    for f in fixtures(32) {
        let power = f.graph(GraphFamily::Power);
        let reduced = f.graph(GraphFamily::ReducedPower);
        for (u, v) in power.edges() {
            let same = f.lattice.generated[u] == f.lattice.generated[v];
            assert_eq!(reduced.has_edge(u, v), !same, "{}", f.name());
        }
        assert!(reduced.edges().all(|(u, v)| power.has_edge(u, v)));
    }
}

#[test]
fn witnesses_are_strong_resolving_sets() {
    let limits = SearchLimits::default();
    for f in fixtures(24) {
        for family in GraphFamily::ALL {
            let g = f.graph(family);
            for r in [
                sdim_diameter2(&g, &limits).unwrap(),
                sdim_vertex_cover(&g, &limits).unwrap(),
            ] {
                let w = r.witness.unwrap();
                assert_eq!(w.len(), r.value);
                assert!(is_strong_resolving_set(&g, &w), "{} {family}", f.name());
            }
        }
    }
}

#[test]
fn quotient_clique_matches_pairwise_distinct_neighbourhood_cliques() {
    // a clique of the quotient lifts to a clique of the source with pairwise
    // distinct closed neighbourhoods, and every such clique descends
    let limits = SearchLimits::default();
    for f in fixtures(16) {
        for family in GraphFamily::ALL {
            let g = f.graph(family);
            let r = grpdim_core::reduced_graph(&g);
            let omega_q = grpdim_core::clique_number(&r.quotient, &limits).unwrap();
            let best = maximal_cliques(&g, 100_000)
                .unwrap()
                .iter()
                .map(|c| {
                    let mut classes: Vec<usize> = c.iter().map(|&v| r.class_of[v]).collect();
                    classes.sort();
                    classes.dedup();
                    classes.len()
                })
                .max()
                .unwrap();
            assert_eq!(omega_q, best, "{} {family}", f.name());
            for (i, &u) in r.reps.iter().enumerate() {
                for &v in &r.reps[i + 1..] {
                    assert!(!twins(&g, u, v));
                }
            }
        }
    }
}

#[test]
fn corrected_supergraph_characterization() {
    // sdim(S(G)) = n - 2 exactly for Z_pq, CP-groups with two or more prime
    // divisors, and non-CP groups with an element of order exp(G) and lambda 2
    let limits = SearchLimits::default();
    for f in fixtures(32).into_iter().filter(|f| f.n() >= 3) {
        let n = f.n();
        let sdim = sdim_diameter2(&f.graph(GraphFamily::Supergraph), &limits)
            .unwrap()
            .value;
        let flags = &f.profile.flags;
        let primes = f.profile.prime_divisors();
        let zpq =
            flags.is_cyclic && primes.len() == 2 && primes.iter().product::<u64>() == n as u64;
        let cp = flags.is_cp_group && primes.len() >= 2;
        let realized = !flags.is_cp_group
            && !flags.is_cyclic
            && f.profile.exponent_realized()
            && f.profile.lambda == Some(2);
        assert_eq!(sdim == n - 2, zpq || cp || realized, "{}", f.name());
        assert_eq!(sdim, sdim_order_supergraph(&f.group).value, "{}", f.name());
    }
}

#[test]
fn quaternion_groups_enhanced_value() {
    for m in 2..=12 {
        let g = FiniteGroup::from_descriptor(&format!("Q{}", 4 * m)).unwrap();
        let graph = grpdim_core::build_graph(&g, GraphFamily::Enhanced);
        let v = sdim_diameter2(&graph, &SearchLimits::default())
            .unwrap()
            .value;
        assert_eq!(v, 4 * m - 2);
    }
}
