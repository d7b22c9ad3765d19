mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use pedigree_core::cycle::{replay_history, CycleEdge, InsertionHistory, LinkedCycle, Node, Tour};
use pedigree_core::graph::{build, is_vertex, isolated_oracle, new_edges, segment_edge_oracle};
use pedigree_core::{pedigree_adjacent, EdgeType, PedigreeGraph};

use common::{correlated_pair, history_pair};

fn node(k: usize) -> Node {
    Node::new(k as u32).unwrap()
}

// components by plain traversal over the edge list
fn traversal_components(g: &PedigreeGraph) -> usize {
    let mut adj: BTreeMap<Node, Vec<Node>> = g.vertices().iter().map(|&v| (v, Vec::new())).collect();
    for e in g.edges() {
        adj.get_mut(&e.lo).unwrap().push(e.hi);
        adj.get_mut(&e.hi).unwrap().push(e.lo);
    }
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &start in adj.keys() {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn typed_edges(g: &PedigreeGraph, swap: bool) -> BTreeSet<(Node, Node, EdgeType)> {
    g.edges()
        .iter()
        .flat_map(|e| e.types.iter().map(move |t| (e.lo, e.hi, if swap { t.swapped() } else { t })))
        .collect()
}

fn extended(h: &InsertionHistory, e: CycleEdge) -> InsertionHistory {
    let mut edges = h.edges().to_vec();
    edges.push(e);
    InsertionHistory::new(edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_bounds_and_endpoints((ha, hb, n) in correlated_pair(120)) {
        let g = build(&ha, &hb, n).unwrap();
        for &v in g.vertices() {
            prop_assert!(g.degree(v) <= 6);
            prop_assert!(g.lower_degree(v) <= 2);
        }
        for e in g.edges() {
            prop_assert!(e.lo < e.hi);
            prop_assert!(g.contains_vertex(e.lo) && g.contains_vertex(e.hi));
            prop_assert!(!e.types.is_empty());
        }
        for k in 4..=n {
            prop_assert_eq!(g.contains_vertex(node(k)), ha.nu(k) != hb.nu(k));
        }
    }

    #[test]
    fn components_match_traversal((ha, hb, n) in correlated_pair(80)) {
        let g = build(&ha, &hb, n).unwrap();
        prop_assert_eq!(g.component_count(), traversal_components(&g));
        let listed = g.components();
        prop_assert_eq!(listed.len(), g.component_count());
        prop_assert_eq!(listed.iter().map(Vec::len).sum::<usize>(), g.vertices().len());
    }

    #[test]
    fn earlier_graphs_are_induced((ha, hb, n) in history_pair(80), cut in 3usize..80) {
        let m = 3 + cut % (n - 2);
        let big = build(&ha, &hb, n).unwrap();
        let small = build(&ha, &hb, m).unwrap();
        let verts: Vec<Node> = big.vertices().iter().copied().filter(|&v| v <= node(m)).collect();
        prop_assert_eq!(verts.as_slice(), small.vertices());
        let kept: Vec<_> = big.edges().iter().copied().filter(|e| e.hi <= node(m)).collect();
        prop_assert_eq!(kept.as_slice(), small.edges());
    }

    #[test]
    fn exchanging_players_swaps_types((ha, hb, n) in correlated_pair(80)) {
        let ab = build(&ha, &hb, n).unwrap();
        let ba = build(&hb, &ha, n).unwrap();
        prop_assert_eq!(ab.vertices(), ba.vertices());
        prop_assert_eq!(typed_edges(&ab, false), typed_edges(&ba, true));
        prop_assert_eq!(ab.component_count(), ba.component_count());
    }

    #[test]
    fn rules_agree_with_segment_oracles((ha, hb, n) in correlated_pair(120)) {
        for k in 4..=n {
            let v = node(k);
            let (ha_k, hb_k) = (ha.truncated(k), hb.truncated(k));
            if !is_vertex(&ha, &hb, v).unwrap() {
                prop_assert!(!isolated_oracle(&ha_k, &hb_k, k).unwrap());
                continue;
            }
            let rules = new_edges(&ha, &hb, v).unwrap();
            let forward: BTreeSet<_> = segment_edge_oracle(&ha_k, &hb_k, k).unwrap().into_iter().collect();
            let backward: BTreeSet<_> = segment_edge_oracle(&hb_k, &ha_k, k)
                .unwrap()
                .into_iter()
                .map(|(x, t)| (x, t.swapped()))
                .collect();
            let a_to_b: BTreeSet<_> = rules.iter().copied().filter(|(_, t)| t.is_a_to_b()).collect();
            let b_to_a: BTreeSet<_> = rules.iter().copied().filter(|(_, t)| !t.is_a_to_b()).collect();
            prop_assert_eq!(&a_to_b, &forward);
            prop_assert_eq!(&b_to_a, &backward);
            prop_assert!(a_to_b.len() <= 1 && b_to_a.len() <= 1);
            prop_assert_eq!(rules.is_empty(), isolated_oracle(&ha_k, &hb_k, k).unwrap());
        }
    }

    #[test]
    fn adjacency_ignores_presentation((ha, hb, n) in history_pair(30), shift in 0usize..30, flip: bool) {
        let (a, b) = (replay_history(&ha, n).unwrap(), replay_history(&hb, n).unwrap());
        prop_assume!(a != b);
        let mut order = b.order().to_vec();
        order.rotate_left(shift % n);
        if flip {
            order.reverse();
        }
        let b2 = Tour::new(order).unwrap();
        let v1 = pedigree_adjacent(&a, &b).unwrap();
        prop_assert_eq!(v1.adjacent, pedigree_adjacent(&a, &b2).unwrap().adjacent);
        prop_assert_eq!(v1.adjacent, pedigree_adjacent(&b, &a).unwrap().adjacent);
        prop_assert_eq!(v1.adjacent, v1.witness.component_count() <= 1);
    }

    // for every component of G_{n-1} some member k can be reached by Bob
    // whatever Alice plays at time n
    #[test]
    fn bob_can_always_extend_a_component((ha, hb, n) in correlated_pair(14)) {
        let g = build(&ha, &hb, n).unwrap();
        let next = node(n + 1);
        let a_cycle = LinkedCycle::from_tour(&replay_history(&ha, n).unwrap());
        let b_cycle = LinkedCycle::from_tour(&replay_history(&hb, n).unwrap());
        // reach[alice edge] = vertices that some Bob reply joins to n + 1
        let reach: Vec<BTreeSet<Node>> = a_cycle
            .edges_positive()
            .map(|ea| {
                let ha2 = extended(&ha, ea);
                b_cycle
                    .edges_positive()
                    .filter(|&eb| eb != ea)
                    .flat_map(|eb| new_edges(&ha2, &extended(&hb, eb), next).unwrap())
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        for comp in g.components() {
            let ok = comp.iter().any(|k| reach.iter().all(|r| r.contains(k)));
            prop_assert!(ok, "component {:?} cannot be forced", comp);
        }
    }
}
