//! Finite undirected multigraphs with loops and parallel edges.
//!
//! A `MultiGraph` is the combinatorial stand-in for the geometric 1-complex
//! it spans: every edge is a copy of the unit interval glued to its endpoints,
//! and a loop is a circle attached at a single vertex. All topological
//! operations used elsewhere (subdivision, degree-2 suppression, puncturing)
//! are expressed on this structure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Identifier of a vertex, stable within one graph and its derivations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

/// Identifier of an edge. Never reused after a deletion in the same
/// derivation chain, so provenance maps stay unambiguous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    UnknownVertex(VertexId),
    UnknownEdge(EdgeId),
    EmptyPointConfig,
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            GraphError::EmptyPointConfig => write!(f, "point configuration must mark at least one point"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A finite multiset of marked points on edge interiors, stored as a count
/// per edge. Point positions within an edge are irrelevant up to
/// homeomorphism, so the counts carry all the information.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointConfig {
    counts: BTreeMap<EdgeId, usize>,
}

impl PointConfig {
    pub fn new(counts: BTreeMap<EdgeId, usize>) -> Result<PointConfig, GraphError> {
        let counts: BTreeMap<EdgeId, usize> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        if counts.is_empty() {
            return Err(GraphError::EmptyPointConfig);
        }
        Ok(PointConfig { counts })
    }

    /// One marked point on a single edge.
    pub fn single(edge: EdgeId) -> PointConfig {
        PointConfig { counts: BTreeMap::from([(edge, 1)]) }
    }

    /// `count` marked points on every edge of `g`.
    pub fn uniform(g: &MultiGraph, count: usize) -> Result<PointConfig, GraphError> {
        PointConfig::new(g.edge_ids().map(|e| (e, count)).collect())
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn counts(&self) -> impl Iterator<Item = (EdgeId, usize)> + '_ {
        self.counts.iter().map(|(&e, &c)| (e, c))
    }

    pub fn count_on(&self, edge: EdgeId) -> usize {
        self.counts.get(&edge).copied().unwrap_or(0)
    }
}

impl fmt::Display for PointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.counts {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Result of subdividing a graph at a point configuration.
///
/// `chains` maps every subdivided edge to the full vertex chain that replaced
/// it, endpoints included; the interior entries are the marked vertices in
/// order from the lower-id endpoint (for a loop, from its base vertex).
#[derive(Clone, Debug)]
pub struct Subdivided {
    pub graph: MultiGraph,
    pub marked: Vec<VertexId>,
    pub chains: BTreeMap<EdgeId, Vec<VertexId>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: BTreeSet<VertexId>,
    // endpoints stored with the smaller id first
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    next_vertex: u32,
    next_edge: u32,
}

impl MultiGraph {
    pub fn new() -> MultiGraph {
        MultiGraph::default()
    }

    /// Builds a graph on `n` fresh vertices with the given endpoint pairs
    /// (indices into `0..n`). Loops and repeated pairs are allowed.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> MultiGraph {
        let mut g = MultiGraph::new();
        let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
        for &(u, v) in pairs {
            g.add_edge(vs[u], vs[v]);
        }
        g
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.insert(v);
        v
    }

    /// Adds an edge between existing vertices; `u == v` makes a loop.
    ///
    /// Panics if an endpoint does not exist: graphs are constructed by code,
    /// not parsed input, so a missing endpoint is a programming error.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(self.vertices.contains(&u), "add_edge: unknown vertex {u}");
        assert!(self.vertices.contains(&v), "add_edge: unknown vertex {v}");
        let e = EdgeId(self.next_edge);
        self.next_edge += 1;
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edges.insert(e, (a, b));
        e
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.remove(&e)
    }

    /// Removes a vertex together with all incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) {
        self.vertices.remove(&v);
        self.edges.retain(|_, &mut (a, b)| a != v && b != v);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges.get(&e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(&e), Some((u, v)) if u == v)
    }

    /// Number of edge-ends at `v`; a loop contributes two.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut d = 0;
        for &(a, b) in self.edges.values() {
            if a == v {
                d += 1;
            }
            if b == v {
                d += 1;
            }
        }
        Ok(d)
    }

    /// For every vertex, its incident edge-ends as `(edge, other endpoint)`;
    /// a loop at `v` appears twice as `(e, v)`.
    pub fn incidence(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut inc: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&e, &(u, v)) in &self.edges {
            inc.get_mut(&u).unwrap().push((e, v));
            inc.get_mut(&v).unwrap().push((e, u));
        }
        inc
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(u, v) in self.edges.values() {
            if u == v || !seen.insert((u, v)) {
                return false;
            }
        }
        true
    }

    pub fn loop_count(&self) -> usize {
        self.edges.values().filter(|(u, v)| u == v).count()
    }

    /// Connected components as sorted vertex classes, ordered by their
    /// smallest member. Isolated vertices form their own class.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp: BTreeMap<VertexId, usize> = BTreeMap::new();
        let inc = self.incidence();
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        for &start in &self.vertices {
            if comp.contains_key(&start) {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            comp.insert(start, id);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(_, w) in &inc[&v] {
                    if let std::collections::btree_map::Entry::Vacant(e) = comp.entry(w) {
                        e.insert(id);
                        class.push(w);
                        stack.push(w);
                    }
                }
            }
            class.sort();
            classes.push(class);
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Inserts `cfg.count_on(e)` fresh degree-2 vertices into each configured
    /// edge, splitting it into a chain; the result is homeomorphic to `self`.
    pub fn subdivide(&self, cfg: &PointConfig) -> Result<Subdivided, GraphError> {
        for (e, _) in cfg.counts() {
            if !self.contains_edge(e) {
                return Err(GraphError::UnknownEdge(e));
            }
        }
        let mut g = self.clone();
        let mut marked = Vec::new();
        let mut chains = BTreeMap::new();
        for (e, k) in cfg.counts() {
            let (u, v) = g.endpoints(e)?;
            g.remove_edge(e);
            let mut chain = vec![u];
            let mut prev = u;
            for _ in 0..k {
                let m = g.add_vertex();
                g.add_edge(prev, m);
                marked.push(m);
                chain.push(m);
                prev = m;
            }
            g.add_edge(prev, v);
            chain.push(v);
            chains.insert(e, chain);
        }
        Ok(Subdivided { graph: g, marked, chains })
    }

    /// Subdivides every edge `count` times. `count >= 1`.
    pub fn subdivide_uniform(&self, count: usize) -> Subdivided {
        assert!(count >= 1);
        if self.edge_count() == 0 {
            return Subdivided { graph: self.clone(), marked: Vec::new(), chains: BTreeMap::new() };
        }
        let cfg = PointConfig::uniform(self, count).expect("at least one edge");
        self.subdivide(&cfg).expect("edges exist")
    }

    /// Suppresses every degree-2 vertex by merging its two distinct incident
    /// edges. A vertex whose two edge-ends come from a single loop is kept:
    /// a pure cycle stabilises as one vertex carrying one loop. The returned
    /// map sends every original edge to the merged edge containing it.
    pub fn suppress_degree2(&self) -> (MultiGraph, BTreeMap<EdgeId, EdgeId>) {
        let mut g = self.clone();
        let mut prov: BTreeMap<EdgeId, EdgeId> = g.edge_ids().map(|e| (e, e)).collect();
        // reverse map: current edge -> the originals it absorbed
        let mut absorbed: BTreeMap<EdgeId, Vec<EdgeId>> =
            g.edge_ids().map(|e| (e, vec![e])).collect();
        let mut ends: BTreeMap<VertexId, Vec<EdgeId>> =
            g.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&e, &(a, b)) in &g.edges {
            ends.get_mut(&a).unwrap().push(e);
            ends.get_mut(&b).unwrap().push(e);
        }
        let mut queue: Vec<VertexId> = g.vertices.iter().copied().collect();
        while let Some(v) = queue.pop() {
            let Some(incident) = ends.get(&v) else { continue };
            if incident.len() != 2 || incident[0] == incident[1] {
                continue;
            }
            let (e1, e2) = (incident[0], incident[1]);
            let (a1, b1) = g.endpoints(e1).unwrap();
            let (a2, b2) = g.endpoints(e2).unwrap();
            let x = if a1 == v { b1 } else { a1 };
            let y = if a2 == v { b2 } else { a2 };
            g.remove_edge(e1);
            g.remove_edge(e2);
            g.vertices.remove(&v);
            ends.remove(&v);
            let f = g.add_edge(x, y);
            let mut sources = absorbed.remove(&e1).unwrap();
            sources.extend(absorbed.remove(&e2).unwrap());
            for &old in &sources {
                prov.insert(old, f);
            }
            absorbed.insert(f, sources);
            for w in [x, y] {
                let list = ends.get_mut(&w).expect("endpoint survives");
                list.retain(|&e| e != e1 && e != e2);
            }
            // x == y makes f a loop with both ends at x
            ends.get_mut(&x).unwrap().push(f);
            ends.get_mut(&y).unwrap().push(f);
            queue.push(x);
            if y != x {
                queue.push(y);
            }
        }
        (g, prov)
    }

    /// Number of connected components of the 1-complex after deleting the
    /// points `s`. Equivalent to deleting `s` from the once-subdivided graph:
    /// an edge with both endpoints removed keeps its open interior as a
    /// component of its own, and so does a loop at a removed vertex.
    pub fn puncture_count(&self, s: &BTreeSet<VertexId>) -> usize {
        for v in s {
            assert!(self.vertices.contains(v), "puncture_count: unknown vertex {v}");
        }
        let mut rest = self.clone();
        for &v in s {
            rest.remove_vertex(v);
        }
        let interiors = self
            .edges
            .values()
            .filter(|(u, v)| s.contains(u) && s.contains(v))
            .count();
        rest.components().len() + interiors
    }

    /// Subgraph spanned by the given edges, preserving vertex and edge ids.
    /// Vertices are exactly the endpoints of the chosen edges.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> MultiGraph {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeMap::new();
        for &e in edge_ids {
            let (u, v) = self.endpoints(e).expect("edge_subgraph: unknown edge");
            vertices.insert(u);
            vertices.insert(v);
            edges.insert(e, (u, v));
        }
        MultiGraph { vertices, edges, next_vertex: self.next_vertex, next_edge: self.next_edge }
    }

    /// Copy with the listed vertices (and incident edges) removed.
    pub fn without_vertices(&self, s: &BTreeSet<VertexId>) -> MultiGraph {
        let mut g = self.clone();
        for &v in s {
            g.remove_vertex(v);
        }
        g
    }

    /// Sorted `(degree, loop-ends)` pairs, an isomorphism invariant.
    pub fn degree_signature(&self) -> Vec<(usize, usize)> {
        let mut sig: Vec<(usize, usize)> = self
            .vertices
            .iter()
            .map(|&v| {
                let mut d = 0;
                let mut l = 0;
                for &(a, b) in self.edges.values() {
                    if a == v {
                        d += 1;
                    }
                    if b == v {
                        d += 1;
                    }
                    if a == v && b == v {
                        l += 2;
                    }
                }
                (d, l)
            })
            .collect();
        sig.sort();
        sig
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn degree_counts_loops_twice() {
        let mut g = MultiGraph::new();
        let v = g.add_vertex();
        g.add_edge(v, v);
        assert_eq!(g.degree(v), Ok(2));

        let g = k4();
        for v in g.vertex_ids() {
            assert_eq!(g.degree(v), Ok(3));
        }

        // figure-eight hub: two loops
        let mut g = MultiGraph::new();
        let v = g.add_vertex();
        g.add_edge(v, v);
        g.add_edge(v, v);
        assert_eq!(g.degree(v), Ok(4));
    }

    #[test]
    fn degree_unknown_vertex_errors() {
        let g = k4();
        assert_eq!(g.degree(VertexId(99)), Err(GraphError::UnknownVertex(VertexId(99))));
    }

    #[test]
    fn components_basic() {
        assert_eq!(k4().components().len(), 1);

        let mut g = k4();
        let vs: Vec<VertexId> = (0..4).map(|_| g.add_vertex()).collect();
        g.add_edge(vs[0], vs[1]);
        g.add_edge(vs[0], vs[2]);
        g.add_edge(vs[0], vs[3]);
        g.add_edge(vs[1], vs[2]);
        g.add_edge(vs[1], vs[3]);
        g.add_edge(vs[2], vs[3]);
        assert_eq!(g.components().len(), 2);

        assert_eq!(MultiGraph::new().components().len(), 0);
    }

    #[test]
    fn subdivide_single_edge() {
        let mut g = MultiGraph::new();
        let u = g.add_vertex();
        let v = g.add_vertex();
        let e = g.add_edge(u, v);
        let sub = g.subdivide(&PointConfig::single(e)).unwrap();
        assert_eq!(sub.marked.len(), 1);
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edge_count(), 2);
        assert_eq!(sub.graph.degree(sub.marked[0]), Ok(2));
    }

    #[test]
    fn subdivide_loop_twice_gives_cycle() {
        let mut g = MultiGraph::new();
        let v = g.add_vertex();
        let e = g.add_edge(v, v);
        let cfg = PointConfig::new(BTreeMap::from([(e, 2)])).unwrap();
        let sub = g.subdivide(&cfg).unwrap();
        assert_eq!(sub.marked.len(), 2);
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
        assert!(sub.graph.edges().all(|(_, a, b)| a != b));
    }

    #[test]
    fn subdivide_k4_everywhere() {
        let g = k4();
        let sub = g.subdivide(&PointConfig::uniform(&g, 1).unwrap()).unwrap();
        assert_eq!(sub.graph.vertex_count(), 10);
        assert_eq!(sub.graph.edge_count(), 12);
    }

    #[test]
    fn subdivide_unknown_edge_errors() {
        let g = k4();
        let bad = EdgeId(77);
        assert_eq!(
            g.subdivide(&PointConfig::single(bad)).unwrap_err(),
            GraphError::UnknownEdge(bad)
        );
    }

    #[test]
    fn suppress_subdivided_k4() {
        let g = k4();
        let sub = g.subdivide(&PointConfig::uniform(&g, 1).unwrap()).unwrap();
        let (h, prov) = sub.graph.suppress_degree2();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 6);
        assert!(crate::iso::is_isomorphic(&h, &g));
        // both halves of a split edge land on the same merged edge
        for chain in sub.chains.values() {
            assert_eq!(chain.len(), 3);
        }
        assert_eq!(prov.len(), 12);
    }

    #[test]
    fn suppress_cycle_to_loop() {
        let g = atlas::cycle(5);
        let (h, _) = g.suppress_degree2();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.loop_count(), 1);
    }

    #[test]
    fn suppress_path_to_edge() {
        let g = atlas::path(3);
        let (h, _) = g.suppress_degree2();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.loop_count(), 0);
    }

    #[test]
    fn suppress_is_idempotent() {
        for g in [atlas::cycle(6), atlas::path(5), k4(), atlas::named("lollipop").unwrap()] {
            let (h, _) = g.suppress_degree2();
            let (h2, _) = h.suppress_degree2();
            assert!(crate::iso::is_isomorphic(&h, &h2));
        }
    }

    #[test]
    fn puncture_cycle_and_figure_eight() {
        let g = atlas::cycle(6);
        let vs: Vec<VertexId> = g.vertex_ids().collect();
        let s = BTreeSet::from([vs[0], vs[3]]);
        assert_eq!(g.puncture_count(&s), 2);
        // adjacent pair on a 4-cycle still cuts the circle into two arcs
        let g = atlas::cycle(4);
        let vs: Vec<VertexId> = g.vertex_ids().collect();
        let s = BTreeSet::from([vs[0], vs[1]]);
        assert_eq!(g.puncture_count(&s), 2);

        let mut g = MultiGraph::new();
        let v = g.add_vertex();
        g.add_edge(v, v);
        g.add_edge(v, v);
        assert_eq!(g.puncture_count(&BTreeSet::from([v])), 2);
    }

    #[test]
    fn puncture_k5_minus_edge_triple() {
        let g = atlas::named("k5_minus_edge").unwrap();
        // the three vertices of degree 4
        let s: BTreeSet<VertexId> = g
            .vertex_ids()
            .filter(|&v| g.degree(v).unwrap() == 4)
            .collect();
        assert_eq!(s.len(), 3);
        assert_eq!(g.puncture_count(&s), 5);
        // oracle route: one barycentric subdivision, then ordinary deletion
        let sub = g.subdivide_uniform(1);
        let rest = sub.graph.without_vertices(&s);
        assert_eq!(rest.components().len(), 5);
    }

    #[test]
    fn puncture_empty_set_is_component_count() {
        for g in [k4(), atlas::cycle(4), atlas::path(4)] {
            assert_eq!(g.puncture_count(&BTreeSet::new()), g.components().len());
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [k4(), atlas::named("figure_eight").unwrap(), atlas::named("baguette").unwrap()] {
            let sum: usize = g.vertex_ids().map(|v| g.degree(v).unwrap()).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }
}
