//! The pedigree graph of two insertion histories.
//!
//! Vertices are nodes `k >= 4` that the two histories insert into different
//! cycle-edges. When vertex `n` appears it is joined to earlier vertices by
//! the rules below, where "A to B" rules read `nu_A(n)` against history B
//! and the "B to A" rules are the mirror image:
//!
//! * type-1: to the `k < n` with `nu_B(k) = nu_A(n)`, if there is one;
//! * type-2: to `l = max nu_A(n)`, unless `nu_B(l)` meets `nu_A(n)`.
//!
//! Edges only ever attach the newest vertex to older ones, so `G_{n-1}` is
//! the subgraph of `G_n` induced on `[n-1]` and components can be tracked
//! with a forward-only disjoint-set forest.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cycle::{replay_history, segment_between, CycleEdge, InsertionHistory, Lineage, Node};
use crate::dsu::DisjointSets;
use crate::error::{PedigreeError, Result};

/// Which rule produced a pedigree-graph edge, and in which direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    T1AtoB,
    T1BtoA,
    T2AtoB,
    T2BtoA,
}

impl EdgeType {
    pub const ALL: [EdgeType; 4] = [EdgeType::T1AtoB, EdgeType::T1BtoA, EdgeType::T2AtoB, EdgeType::T2BtoA];

    pub fn name(self) -> &'static str {
        match self {
            EdgeType::T1AtoB => "T1_AtoB",
            EdgeType::T1BtoA => "T1_BtoA",
            EdgeType::T2AtoB => "T2_AtoB",
            EdgeType::T2BtoA => "T2_BtoA",
        }
    }

    pub fn is_a_to_b(self) -> bool {
        matches!(self, EdgeType::T1AtoB | EdgeType::T2AtoB)
    }

    pub fn is_type_one(self) -> bool {
        matches!(self, EdgeType::T1AtoB | EdgeType::T1BtoA)
    }

    /// The same rule with the roles of A and B exchanged.
    pub fn swapped(self) -> Self {
        match self {
            EdgeType::T1AtoB => EdgeType::T1BtoA,
            EdgeType::T1BtoA => EdgeType::T1AtoB,
            EdgeType::T2AtoB => EdgeType::T2BtoA,
            EdgeType::T2BtoA => EdgeType::T2AtoB,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for EdgeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Set of [`EdgeType`]s carried by one undirected edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeTypes(u8);

impl EdgeTypes {
    pub fn contains(self, t: EdgeType) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn insert(&mut self, t: EdgeType) {
        self.0 |= t.bit();
    }

    pub fn iter(self) -> impl Iterator<Item = EdgeType> {
        EdgeType::ALL.into_iter().filter(move |&t| self.contains(t))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl Serialize for EdgeTypes {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// An undirected pedigree-graph edge between an older and a newer vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PedigreeEdge {
    pub lo: Node,
    pub hi: Node,
    pub types: EdgeTypes,
}

impl Serialize for PedigreeEdge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PedigreeEdge", 3)?;
        st.serialize_field("u", &self.lo)?;
        st.serialize_field("v", &self.hi)?;
        st.serialize_field("types", &self.types)?;
        st.end()
    }
}

/// Typed edges incident on a new vertex (at most four rule firings).
#[derive(Debug, Clone, Copy)]
pub struct IncidentEdges {
    items: [(Node, EdgeType); 4],
    len: u8,
}

impl IncidentEdges {
    fn new() -> Self {
        IncidentEdges {
            items: [(Node::raw(1), EdgeType::T1AtoB); 4],
            len: 0,
        }
    }

    fn push(&mut self, k: Node, t: EdgeType) {
        self.items[self.len as usize] = (k, t);
        self.len += 1;
    }
}

impl Deref for IncidentEdges {
    type Target = [(Node, EdgeType)];

    fn deref(&self) -> &Self::Target {
        &self.items[..self.len as usize]
    }
}

/// Applies the edge rules to a prospective vertex `n` inserted into `nu_a`
/// by A and `nu_b` by B. Only nodes `< n` of the lineages are consulted.
/// Returns `None` when `n` is not a vertex.
pub(crate) fn rule_edges(a: &Lineage, nu_a: CycleEdge, b: &Lineage, nu_b: CycleEdge, n: Node) -> Option<IncidentEdges> {
    if nu_a == nu_b {
        return None;
    }
    let mut out = IncidentEdges::new();
    if let Some(k) = b.inserter_of(nu_a).filter(|&k| k < n) {
        out.push(k, EdgeType::T1AtoB);
    }
    if let Some(k) = a.inserter_of(nu_b).filter(|&k| k < n) {
        out.push(k, EdgeType::T1BtoA);
    }
    let l = nu_a.hi();
    if !b.nu_meets(l, nu_a) {
        out.push(l, EdgeType::T2AtoB);
    }
    let l = nu_b.hi();
    if !a.nu_meets(l, nu_b) {
        out.push(l, EdgeType::T2BtoA);
    }
    Some(out)
}

/// The pedigree graph `G_n` of two histories, with component tracking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PedigreeGraph {
    n: usize,
    is_vertex: Vec<bool>,
    vertices: Vec<Node>,
    edges: Vec<PedigreeEdge>,
    degree: Vec<u8>,
    lower_degree: Vec<u8>,
    dsu: DisjointSets,
    components: usize,
}

/// What happened to the graph when one node was added.
#[derive(Debug, Clone, Copy)]
pub struct Extension {
    pub vertex: bool,
    pub edges: Option<IncidentEdges>,
    /// Change in the number of components.
    pub delta_components: i32,
}

impl Extension {
    pub fn isolated(&self) -> bool {
        self.vertex && self.edges.map_or(false, |e| e.is_empty())
    }
}

impl PedigreeGraph {
    /// `G_3`: no vertices.
    pub fn empty() -> Self {
        Self::with_capacity(3)
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut g = PedigreeGraph {
            n: 3,
            is_vertex: Vec::with_capacity(n + 1),
            vertices: Vec::new(),
            edges: Vec::new(),
            degree: Vec::with_capacity(n + 1),
            lower_degree: Vec::with_capacity(n + 1),
            dsu: DisjointSets::new(0),
            components: 0,
        };
        g.is_vertex.resize(4, false);
        g.degree.resize(4, 0);
        g.lower_degree.resize(4, 0);
        g.dsu.grow_to(4);
        g
    }

    /// Current time: the graph is `G_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Node] {
        &self.vertices
    }

    pub fn edges(&self) -> &[PedigreeEdge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: Node) -> bool {
        self.is_vertex.get(v.index()).copied().unwrap_or(false)
    }

    /// Number of connected components (`T`); 0 for the vertexless graph.
    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Connected in the sense used for adjacency: at most one component.
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    pub fn degree(&self, v: Node) -> usize {
        self.degree.get(v.index()).map_or(0, |&d| d as usize)
    }

    /// Number of edges from `v` to smaller vertices.
    pub fn lower_degree(&self, v: Node) -> usize {
        self.lower_degree.get(v.index()).map_or(0, |&d| d as usize)
    }

    /// Component representative of a vertex.
    pub fn component_of(&self, v: Node) -> usize {
        self.dsu.root(v.index())
    }

    /// Vertex sets of the components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Node>> {
        let mut groups: BTreeMap<usize, Vec<Node>> = BTreeMap::new();
        for &v in &self.vertices {
            groups.entry(self.dsu.root(v.index())).or_default().push(v);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Change in component count that adding vertex `n` with `edges` would
    /// cause, without modifying the graph.
    pub(crate) fn delta_for(&self, edges: &IncidentEdges) -> i32 {
        let mut roots = [usize::MAX; 4];
        let mut distinct = 0;
        for &(k, _) in edges.iter() {
            let r = self.dsu.root(k.index());
            if !roots[..distinct].contains(&r) {
                roots[distinct] = r;
                distinct += 1;
            }
        }
        1 - distinct as i32
    }

    /// Adds node `n + 1` given the rule outcome for it.
    pub(crate) fn push_node(&mut self, rule: Option<IncidentEdges>) -> Extension {
        self.n += 1;
        let n = self.n;
        self.is_vertex.push(rule.is_some());
        self.degree.push(0);
        self.lower_degree.push(0);
        self.dsu.grow_to(n + 1);
        let Some(incident) = rule else {
            return Extension {
                vertex: false,
                edges: None,
                delta_components: 0,
            };
        };
        let delta = self.delta_for(&incident);
        let new = Node::raw(n as u32);
        self.vertices.push(new);
        let first = self.edges.len();
        for &(k, t) in incident.iter() {
            debug_assert!(self.is_vertex[k.index()], "edge to non-vertex {k}");
            if let Some(existing) = self.edges[first..].iter_mut().find(|e| e.lo == k) {
                existing.types.insert(t);
                continue;
            }
            let mut types = EdgeTypes::default();
            types.insert(t);
            self.edges.push(PedigreeEdge { lo: k, hi: new, types });
            self.degree[k.index()] += 1;
            self.degree[n] += 1;
            self.lower_degree[n] += 1;
            self.dsu.union(k.index(), n);
        }
        self.components = (self.components as i32 + delta) as usize;
        Extension {
            vertex: true,
            edges: Some(incident),
            delta_components: delta,
        }
    }

    /// Extends `G_{n-1}` to `G_n` for the lineages of the two histories.
    pub fn extend(&mut self, a: &Lineage, b: &Lineage) -> Result<Extension> {
        let next = self.n + 1;
        let horizon = a.horizon().min(b.horizon());
        if next > horizon {
            return Err(PedigreeError::TimeOutOfRange { requested: next, horizon });
        }
        let node = Node::raw(next as u32);
        let rule = rule_edges(a, a.nu(node), b, b.nu(node), node);
        Ok(self.push_node(rule))
    }
}

impl Serialize for PedigreeGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PedigreeGraph", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &self.edges)?;
        st.serialize_field("components", &self.components())?;
        st.end()
    }
}

fn check_time(n: usize, ha: &InsertionHistory, hb: &InsertionHistory) -> Result<()> {
    let horizon = ha.horizon().min(hb.horizon());
    if n > horizon || n < 3 {
        return Err(PedigreeError::TimeOutOfRange { requested: n, horizon });
    }
    Ok(())
}

/// Whether `k` is a vertex: `nu_A(k) != nu_B(k)`. Nodes below 4 never are.
pub fn is_vertex(ha: &InsertionHistory, hb: &InsertionHistory, k: Node) -> Result<bool> {
    if k.index() < 4 {
        return Ok(false);
    }
    check_time(k.index(), ha, hb)?;
    Ok(ha.nu(k.index()) != hb.nu(k.index()))
}

/// All typed edges joining vertex `n` to earlier vertices.
pub fn new_edges(ha: &InsertionHistory, hb: &InsertionHistory, n: Node) -> Result<Vec<(Node, EdgeType)>> {
    check_time(n.index(), ha, hb)?;
    if !is_vertex(ha, hb, n)? {
        return Err(PedigreeError::NotAVertex(n.label()));
    }
    let (a, b) = (Lineage::from_history(ha), Lineage::from_history(hb));
    Ok(new_edges_in(&a, &b, n).expect("checked vertex").to_vec())
}

/// Lineage form of [`new_edges`]; `None` when `n` is not a vertex.
pub fn new_edges_in(a: &Lineage, b: &Lineage, n: Node) -> Option<IncidentEdges> {
    if n.index() < 4 {
        return None;
    }
    rule_edges(a, a.nu(n), b, b.nu(n), n)
}

/// `G_n` folded from `G_3` one node at a time.
pub fn build(ha: &InsertionHistory, hb: &InsertionHistory, n: usize) -> Result<PedigreeGraph> {
    check_time(n, ha, hb)?;
    build_from_lineages(&Lineage::from_history(ha), &Lineage::from_history(hb), n)
}

pub fn build_from_lineages(a: &Lineage, b: &Lineage, n: usize) -> Result<PedigreeGraph> {
    let mut g = PedigreeGraph::with_capacity(n);
    while g.n() < n {
        g.extend(a, b)?;
    }
    Ok(g)
}

/// Independent isolation test: `n` is an isolated vertex of `G_n` iff it is
/// a vertex, `nu_A(n)` is a cycle-edge of `B_n`, and `nu_B(n)` is a
/// cycle-edge of `A_n`. Evaluated on replayed tours.
pub fn isolated_oracle(ha: &InsertionHistory, hb: &InsertionHistory, n: usize) -> Result<bool> {
    check_time(n, ha, hb)?;
    if n < 4 {
        return Ok(false);
    }
    let (nu_a, nu_b) = (ha.nu(n).unwrap(), hb.nu(n).unwrap());
    if nu_a == nu_b {
        return Ok(false);
    }
    let (tour_a, tour_b) = (replay_history(ha, n)?, replay_history(hb, n)?);
    Ok(tour_b.contains_edge(nu_a) && tour_a.contains_edge(nu_b))
}

/// Independent recomputation of the "A to B" edge at `n` from the segment
/// of `B_{n-1}` between the endpoints of `nu_A(n)`:
///
/// * if `nu_A(n)` is a cycle-edge of `B_{n-1}`: no edge;
/// * else if every segment node exceeds both endpoints: a type-1 edge to the
///   segment minimum;
/// * else a type-2 edge to `max nu_A(n)`.
///
/// For the "B to A" direction call it with the histories exchanged and read
/// the result with [`EdgeType::swapped`].
pub fn segment_edge_oracle(ha: &InsertionHistory, hb: &InsertionHistory, n: usize) -> Result<Option<(Node, EdgeType)>> {
    check_time(n, ha, hb)?;
    if n < 4 {
        return Ok(None);
    }
    let nu_a = ha.nu(n).unwrap();
    let tour_b = replay_history(hb, n - 1)?;
    if tour_b.contains_edge(nu_a) {
        return Ok(None);
    }
    let seg = segment_between(&tour_b, nu_a.lo(), nu_a.hi())?;
    let min = seg.iter().copied().min().expect("non-adjacent endpoints leave a nonempty segment");
    if min > nu_a.hi() {
        Ok(Some((min, EdgeType::T1AtoB)))
    } else {
        Ok(Some((nu_a.hi(), EdgeType::T2AtoB)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{alice_example, bob_example, e};

    fn node(l: u32) -> Node {
        Node::new(l).unwrap()
    }

    fn sorted_edges(mut v: Vec<(Node, EdgeType)>) -> Vec<(u32, EdgeType)> {
        v.sort();
        v.into_iter().map(|(k, t)| (k.label(), t)).collect()
    }

    #[test]
    fn vertex_rule_on_example() {
        let (a, b) = (alice_example(), bob_example());
        assert!(!is_vertex(&a, &b, node(6)).unwrap());
        assert!(is_vertex(&a, &b, node(4)).unwrap());
        assert!(!is_vertex(&a, &a, node(7)).unwrap());
        assert!(!is_vertex(&a, &b, node(3)).unwrap());
    }

    #[test]
    fn edge_rules_on_example() {
        let (a, b) = (alice_example(), bob_example());
        assert_eq!(
            sorted_edges(new_edges(&a, &b, node(5)).unwrap()),
            vec![(4, EdgeType::T1BtoA), (4, EdgeType::T2AtoB)]
        );
        assert!(new_edges(&a, &b, node(8)).unwrap().is_empty());
        assert_eq!(
            sorted_edges(new_edges(&a, &b, node(9)).unwrap()),
            vec![(4, EdgeType::T1AtoB), (8, EdgeType::T2BtoA)]
        );
        assert_eq!(
            sorted_edges(new_edges(&a, &b, node(7)).unwrap()),
            vec![(4, EdgeType::T2BtoA), (5, EdgeType::T2AtoB)]
        );
        assert_eq!(sorted_edges(new_edges(&a, &b, node(10)).unwrap()), vec![(9, EdgeType::T2AtoB)]);
        assert_eq!(new_edges(&a, &b, node(6)), Err(PedigreeError::NotAVertex(6)));
    }

    #[test]
    fn extend_tracks_components() {
        let (ha, hb) = (alice_example(), bob_example());
        let (a, b) = (Lineage::from_history(&ha), Lineage::from_history(&hb));
        let mut g = build(&ha, &hb, 5).unwrap();
        let g5 = g.clone();
        g.extend(&a, &b).unwrap();
        assert_eq!(g.vertices(), g5.vertices());
        assert_eq!(g.edges(), g5.edges());
        g.extend(&a, &b).unwrap();
        assert_eq!(g.component_count(), 1);
        let x = g.extend(&a, &b).unwrap();
        assert!(x.isolated());
        assert_eq!(g.component_count(), 2);
        let x = g.extend(&a, &b).unwrap();
        assert_eq!(x.delta_components, -1);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn full_example_graph() {
        let g = build(&alice_example(), &bob_example(), 10).unwrap();
        let v: Vec<u32> = g.vertices().iter().map(|v| v.label()).collect();
        assert_eq!(v, vec![4, 5, 7, 8, 9, 10]);
        let pairs: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.lo.label(), e.hi.label())).collect();
        assert_eq!(pairs, vec![(4, 5), (5, 7), (4, 7), (4, 9), (8, 9), (9, 10)]);
        assert_eq!(g.edges()[0].types.len(), 2);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn identical_histories_give_empty_graph() {
        let a = alice_example();
        let g = build(&a, &a, 10).unwrap();
        assert!(g.vertices().is_empty());
        assert_eq!(g.component_count(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn two_isolated_vertices() {
        let ha = InsertionHistory::new(vec![e(1, 2), e(2, 3)]).unwrap();
        let hb = InsertionHistory::new(vec![e(1, 3), e(1, 4)]).unwrap();
        let g = build(&ha, &hb, 5).unwrap();
        assert_eq!(g.vertices().len(), 2);
        assert!(g.edges().is_empty());
        assert_eq!(g.component_count(), 2);
    }

    #[test]
    fn oracles_on_example() {
        let (a, b) = (alice_example(), bob_example());
        assert!(isolated_oracle(&a, &b, 8).unwrap());
        assert!(!isolated_oracle(&a, &b, 9).unwrap());
        assert!(!isolated_oracle(&a, &a, 4).unwrap());
        assert_eq!(segment_edge_oracle(&a, &b, 7).unwrap(), Some((node(5), EdgeType::T2AtoB)));
        assert_eq!(segment_edge_oracle(&a, &b, 9).unwrap(), Some((node(4), EdgeType::T1AtoB)));
        assert_eq!(segment_edge_oracle(&a, &b, 8).unwrap(), None);
    }

    #[test]
    fn dump_has_expected_fields() {
        let g = build(&alice_example(), &bob_example(), 10).unwrap();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["n"], 10);
        assert_eq!(v["edges"][0]["types"], serde_json::json!(["T1_BtoA", "T2_AtoB"]));
        assert_eq!(v["components"], serde_json::json!([[4, 5, 7, 8, 9, 10]]));
    }
}
