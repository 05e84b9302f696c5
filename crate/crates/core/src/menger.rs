//! Independent path systems between vertex sets, grown one path at a time
//! by alternating-walk augmentation.
//!
//! Paths here are *independent*: no path contains an inner vertex of
//! another, so distinct paths may share source or target vertices but
//! nothing else. An alternating walk with respect to a system starts at a
//! source vertex along an unused edge, never repeats an edge, repeats
//! vertices only on system paths, traverses system edges backwards only,
//! and after hitting the interior of a system path it follows that path
//! backwards for at least one edge. If some walk reaches the target set,
//! the symmetric difference of the system's edges and the walk's edges
//! forms a system with one more path; if none does, the system is maximum
//! and a cut of equal size certifies it.
//!
//! Because endpoints are shareable, the dual cut consists of vertices off
//! the endpoint sets plus direct source–target edges (a direct edge can
//! only be blocked by itself), plus any vertex lying in both endpoint sets.

use crate::graph::{EdgeId, MultiGraph, VertexId};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MengerError {
    MalformedSystem(String),
}

impl fmt::Display for MengerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MengerError::MalformedSystem(msg) => write!(f, "malformed path system: {msg}"),
        }
    }
}

impl std::error::Error for MengerError {}

/// One path of a system: `vertices[i]`–`vertices[i+1]` runs along
/// `edges[i]`. A single vertex with no edges is a trivial path (its vertex
/// lies in both endpoint sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl SystemPath {
    pub fn first(&self) -> VertexId {
        *self.vertices.first().expect("paths are nonempty")
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

/// Pairwise independent paths from `source` to `target`: each path meets
/// `source` exactly at its first vertex and `target` exactly at its last,
/// and no two paths share a vertex outside the endpoint sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub source: BTreeSet<VertexId>,
    pub target: BTreeSet<VertexId>,
    pub paths: Vec<SystemPath>,
}

impl PathSystem {
    pub fn empty(source: BTreeSet<VertexId>, target: BTreeSet<VertexId>) -> PathSystem {
        PathSystem { source, target, paths: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect()
    }
}

/// A mixed cut meeting every source–target path: interior vertices (or
/// vertices lying in both endpoint sets) and direct source–target edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Separator {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Separator {
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        for e in &self.edges {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkStep {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
    /// True when the step runs backwards along a system path.
    pub on_system: bool,
}

/// A recorded alternating walk; empty when the augmentation added a trivial
/// path at a vertex lying in both endpoint sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingWalk {
    pub start: VertexId,
    pub steps: Vec<WalkStep>,
}

impl AlternatingWalk {
    pub fn end(&self) -> VertexId {
        self.steps.last().map(|s| s.to).unwrap_or(self.start)
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.steps.iter().map(|s| s.edge).collect()
    }

    pub fn free_edge_count(&self) -> usize {
        self.steps.iter().filter(|s| !s.on_system).count()
    }
}

#[derive(Clone, Debug)]
pub enum Augmented {
    /// The system grew by one path; `walk` is a minimal alternating walk
    /// whose symmetric difference with the old system produced it.
    Larger { system: PathSystem, walk: AlternatingWalk },
    /// No alternating walk reaches the target set: `separator` has exactly
    /// one element per system path and meets every source–target path.
    Blocked { separator: Separator },
}

pub fn validate_system(g: &MultiGraph, sys: &PathSystem) -> Result<(), MengerError> {
    let a = &sys.source;
    let b = &sys.target;
    #[derive(PartialEq)]
    enum Role {
        Start,
        End,
        Interior,
        Trivial,
    }
    let mut uses: BTreeMap<VertexId, Vec<Role>> = BTreeMap::new();
    for (i, p) in sys.paths.iter().enumerate() {
        if p.vertices.is_empty() {
            return Err(MengerError::MalformedSystem(format!("path {i} is empty")));
        }
        if p.edges.len() + 1 != p.vertices.len() {
            return Err(MengerError::MalformedSystem(format!(
                "path {i}: edge/vertex count mismatch"
            )));
        }
        for (j, &e) in p.edges.iter().enumerate() {
            let (x, y) = g
                .endpoints(e)
                .map_err(|err| MengerError::MalformedSystem(format!("path {i}: {err}")))?;
            let (u, v) = (p.vertices[j], p.vertices[j + 1]);
            if (x, y) != (u.min(v), u.max(v)) {
                return Err(MengerError::MalformedSystem(format!(
                    "path {i}: edge {e} does not join {u} and {v}"
                )));
            }
        }
        let distinct: BTreeSet<VertexId> = p.vertices.iter().copied().collect();
        if distinct.len() != p.vertices.len() {
            return Err(MengerError::MalformedSystem(format!("path {i} repeats a vertex")));
        }
        if !a.contains(&p.first()) {
            return Err(MengerError::MalformedSystem(format!(
                "path {i} does not start in the source set"
            )));
        }
        if !b.contains(&p.last()) {
            return Err(MengerError::MalformedSystem(format!(
                "path {i} does not end in the target set"
            )));
        }
        for &v in p.interior() {
            if a.contains(&v) || b.contains(&v) {
                return Err(MengerError::MalformedSystem(format!(
                    "path {i}: interior vertex {v} lies in an endpoint set"
                )));
            }
        }
        if p.vertices.len() > 1 {
            if b.contains(&p.first()) {
                return Err(MengerError::MalformedSystem(format!(
                    "path {i} starts inside the target set"
                )));
            }
            if a.contains(&p.last()) {
                return Err(MengerError::MalformedSystem(format!(
                    "path {i} ends inside the source set"
                )));
            }
        }
        if p.vertices.len() == 1 {
            uses.entry(p.first()).or_default().push(Role::Trivial);
        } else {
            uses.entry(p.first()).or_default().push(Role::Start);
            uses.entry(p.last()).or_default().push(Role::End);
            for &v in p.interior() {
                uses.entry(v).or_default().push(Role::Interior);
            }
        }
    }
    for (v, roles) in uses {
        let ok = match roles.len() {
            0 | 1 => true,
            // sharing is confined to endpoints: all-starts or all-ends
            _ => roles.iter().all(|r| *r == Role::Start) || roles.iter().all(|r| *r == Role::End),
        };
        if !ok {
            return Err(MengerError::MalformedSystem(format!(
                "vertex {v} is shared beyond endpoint roles"
            )));
        }
    }
    Ok(())
}

/// Walk head states: at a vertex off the system (`Free`) or on the interior
/// of a system path having just moved backwards along it (`Back`). Hitting
/// a path interior via a free edge forces an immediate backward step, so
/// hits appear only inside composite transitions, never as states. Arrivals
/// at the target set end the walk; arrivals at the source set are illegal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Kind {
    Free,
    Back,
}

type State = (VertexId, Kind);

struct WalkBfs<'a> {
    g: &'a MultiGraph,
    sys: &'a PathSystem,
    /// Interior path vertices only; endpoints are shareable and never
    /// hold walk states.
    on_interior: BTreeMap<VertexId, (usize, usize)>,
    system_edges: BTreeSet<EdgeId>,
    inc: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    dist: BTreeMap<State, usize>,
    parent: BTreeMap<State, (Option<State>, Vec<WalkStep>)>,
    touched: BTreeSet<VertexId>,
    deque: VecDeque<(usize, State)>,
    success: Option<(usize, Option<State>, Vec<WalkStep>)>,
}

impl<'a> WalkBfs<'a> {
    fn new(g: &'a MultiGraph, sys: &'a PathSystem) -> WalkBfs<'a> {
        WalkBfs {
            g,
            sys,
            on_interior: sys
                .paths
                .iter()
                .enumerate()
                .flat_map(|(pi, p)| {
                    (1..p.vertices.len().saturating_sub(1))
                        .map(move |pos| (p.vertices[pos], (pi, pos)))
                })
                .collect(),
            system_edges: sys.edge_set(),
            inc: g.incidence(),
            dist: BTreeMap::new(),
            parent: BTreeMap::new(),
            touched: BTreeSet::new(),
            deque: VecDeque::new(),
            success: None,
        }
    }

    /// Previous vertex and edge along the path, unless that would leave the
    /// interior into the source endpoint of a two-edge prefix.
    fn backward(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        let &(pi, pos) = self.on_interior.get(&v)?;
        if pos <= 1 {
            // the previous vertex is the path's source endpoint
            return None;
        }
        let p = &self.sys.paths[pi];
        Some((p.vertices[pos - 1], p.edges[pos - 1]))
    }

    fn forced_step(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        let &(pi, pos) = self.on_interior.get(&v)?;
        let p = &self.sys.paths[pi];
        let prev = p.vertices[pos - 1];
        if self.sys.source.contains(&prev) {
            return None;
        }
        Some((prev, p.edges[pos - 1]))
    }

    fn relax(&mut self, state: State, cost: usize, from: Option<State>, steps: Vec<WalkStep>, zero: bool) {
        if self.dist.get(&state).map(|&d| d <= cost).unwrap_or(false) {
            return;
        }
        self.dist.insert(state, cost);
        self.parent.insert(state, (from, steps));
        self.touched.insert(state.0);
        if zero {
            self.deque.push_front((cost, state));
        } else {
            self.deque.push_back((cost, state));
        }
    }

    /// A free-edge move from `v` to `w` at total `cost`.
    fn free_move(&mut self, from: Option<State>, v: VertexId, e: EdgeId, w: VertexId, cost: usize) {
        let step = WalkStep { edge: e, from: v, to: w, on_system: false };
        if self.sys.target.contains(&w) {
            if self.success.as_ref().map(|(c, _, _)| cost < *c).unwrap_or(true) {
                self.success = Some((cost, from, vec![step]));
            }
            return;
        }
        if self.on_interior.contains_key(&w) {
            // hit: forced to follow the path backwards at least one edge
            let Some((pv, pe)) = self.forced_step(w) else { return };
            let state = (pv, Kind::Back);
            if self.dist.get(&state).map(|&d| d <= cost).unwrap_or(false) {
                return;
            }
            self.touched.insert(w);
            let back = WalkStep { edge: pe, from: w, to: pv, on_system: true };
            self.relax(state, cost, from, vec![step, back], false);
            return;
        }
        self.relax((w, Kind::Free), cost, from, vec![step], false);
    }

    fn expand(&mut self, state: State, cost: usize) {
        let (v, kind) = state;
        if kind == Kind::Back {
            if let Some((pv, pe)) = self.backward(v) {
                let back = WalkStep { edge: pe, from: v, to: pv, on_system: true };
                self.relax((pv, Kind::Back), cost, Some(state), vec![back], true);
            }
        }
        let ends = self.inc[&v].clone();
        for (e, w) in ends {
            if w == v || self.system_edges.contains(&e) || self.sys.source.contains(&w) {
                continue;
            }
            self.free_move(Some(state), v, e, w, cost + 1);
        }
    }

    fn run(&mut self) {
        let trivial: BTreeSet<VertexId> = self
            .sys
            .paths
            .iter()
            .filter(|p| p.vertices.len() == 1)
            .map(|p| p.first())
            .collect();
        let starts: Vec<VertexId> = self
            .sys
            .source
            .iter()
            .filter(|v| {
                self.g.contains_vertex(**v)
                    && !self.sys.target.contains(*v)
                    && !trivial.contains(*v)
            })
            .copied()
            .collect();
        for a in starts {
            let ends = self.inc[&a].clone();
            for (e, w) in ends {
                if w == a || self.system_edges.contains(&e) || self.sys.source.contains(&w) {
                    continue;
                }
                self.free_move(None, a, e, w, 1);
            }
        }
        while let Some((cost, state)) = self.deque.pop_front() {
            if self.dist.get(&state) != Some(&cost) {
                continue;
            }
            if let Some((c, _, _)) = &self.success {
                if *c <= cost {
                    break;
                }
            }
            self.expand(state, cost);
        }
    }

    fn reconstruct(&self) -> Option<AlternatingWalk> {
        let (_, from, last) = self.success.as_ref()?;
        let mut parts = vec![last.clone()];
        let mut cursor = *from;
        while let Some(state) = cursor {
            let (prev, steps) = self.parent.get(&state).expect("reached states have parents");
            parts.push(steps.clone());
            cursor = *prev;
        }
        let steps: Vec<WalkStep> = parts.into_iter().rev().flatten().collect();
        let start = steps.first().expect("successful walks are nonempty").from;
        Some(AlternatingWalk { start, steps })
    }
}

/// Either grows the system by one path or certifies maximality with a
/// separator of matching size.
pub fn augment(g: &MultiGraph, sys: &PathSystem) -> Result<Augmented, MengerError> {
    validate_system(g, sys)?;

    // a vertex in both endpoint sets and not yet used is a trivial path
    let trivial_done: BTreeSet<VertexId> = sys
        .paths
        .iter()
        .filter(|p| p.vertices.len() == 1)
        .map(|p| p.first())
        .collect();
    if let Some(&v) = sys
        .source
        .intersection(&sys.target)
        .find(|v| !trivial_done.contains(v) && g.contains_vertex(**v))
    {
        let mut system = sys.clone();
        system.paths.push(SystemPath { vertices: vec![v], edges: Vec::new() });
        return Ok(Augmented::Larger {
            system,
            walk: AlternatingWalk { start: v, steps: Vec::new() },
        });
    }

    let mut bfs = WalkBfs::new(g, sys);
    bfs.run();

    if let Some(walk) = bfs.reconstruct() {
        let system = apply_walk(g, sys, &walk);
        Ok(Augmented::Larger { system, walk })
    } else {
        let mut separator = Separator::default();
        for p in &sys.paths {
            if p.vertices.len() == 1 {
                separator.vertices.push(p.first());
            } else if let Some(&v) = p.interior().iter().rev().find(|v| bfs.touched.contains(v)) {
                separator.vertices.push(v);
            } else if p.edges.len() == 1 {
                // a direct source-target edge can only be cut by itself
                separator.edges.push(p.edges[0]);
            } else {
                // untouched longer path: its first interior vertex lies on
                // every source-target path entering through this start edge
                separator.vertices.push(p.vertices[1]);
            }
        }
        separator.vertices.sort();
        separator.edges.sort();
        debug_assert!(separates(g, &sys.source, &sys.target, &separator));
        Ok(Augmented::Blocked { separator })
    }
}

/// Symmetric difference of the system's edge set and the walk's edge set,
/// re-traced into a path system with one more path.
fn apply_walk(g: &MultiGraph, sys: &PathSystem, walk: &AlternatingWalk) -> PathSystem {
    let old_edges = sys.edge_set();
    let walk_edges: Vec<EdgeId> = walk.edge_ids();
    {
        let distinct: BTreeSet<EdgeId> = walk_edges.iter().copied().collect();
        assert_eq!(distinct.len(), walk_edges.len(), "alternating walk repeated an edge");
    }
    let walk_set: BTreeSet<EdgeId> = walk_edges.into_iter().collect();
    let delta: BTreeSet<EdgeId> = old_edges.symmetric_difference(&walk_set).copied().collect();

    let mut adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> = BTreeMap::new();
    for &e in &delta {
        let (u, v) = g.endpoints(e).unwrap();
        adj.entry(u).or_default().push((e, v));
        adj.entry(v).or_default().push((e, u));
    }
    let mut paths: Vec<SystemPath> =
        sys.paths.iter().filter(|p| p.edges.is_empty()).cloned().collect();
    let mut used: BTreeSet<EdgeId> = BTreeSet::new();
    for &a in &sys.source {
        let Some(ends) = adj.get(&a) else { continue };
        // each difference edge at a source vertex starts its own path
        for &(e0, v0) in ends.iter() {
            if used.contains(&e0) {
                continue;
            }
            let mut vertices = vec![a];
            let mut edges = Vec::new();
            let (mut e, mut v) = (e0, v0);
            loop {
                assert!(used.insert(e), "difference edge {e} traced twice");
                edges.push(e);
                vertices.push(v);
                if sys.target.contains(&v) {
                    break;
                }
                assert!(
                    !sys.source.contains(&v),
                    "difference trace re-entered the source set at {v}"
                );
                let next = adj[&v]
                    .iter()
                    .copied()
                    .find(|&(f, _)| f != e && !used.contains(&f))
                    .unwrap_or_else(|| panic!("difference trace stuck at {v}"));
                e = next.0;
                v = next.1;
            }
            paths.push(SystemPath { vertices, edges });
        }
    }
    assert_eq!(used.len(), delta.len(), "every difference edge must belong to a traced path");
    let out = PathSystem { source: sys.source.clone(), target: sys.target.clone(), paths };
    assert_eq!(out.len(), sys.len() + 1, "augmentation must add exactly one path");
    validate_system(g, &out).expect("augmented system is valid");
    out
}

/// True iff every source–target path meets the cut (uses one of its edges
/// or passes through one of its vertices).
pub fn separates(
    g: &MultiGraph,
    source: &BTreeSet<VertexId>,
    target: &BTreeSet<VertexId>,
    cut: &Separator,
) -> bool {
    let xv: BTreeSet<VertexId> = cut.vertices.iter().copied().collect();
    let xe: BTreeSet<EdgeId> = cut.edges.iter().copied().collect();
    for v in source.intersection(target) {
        if g.contains_vertex(*v) && !xv.contains(v) {
            return false;
        }
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (e, u, v) in g.edges() {
        if xe.contains(&e) || xv.contains(&u) || xv.contains(&v) {
            continue;
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut queue: VecDeque<VertexId> = source
        .iter()
        .filter(|v| g.contains_vertex(**v) && !xv.contains(v))
        .copied()
        .collect();
    seen.extend(queue.iter().copied());
    while let Some(v) = queue.pop_front() {
        if target.contains(&v) {
            return false;
        }
        for &w in adj.get(&v).into_iter().flatten() {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    true
}

/// Maximum system of independent source–target paths together with a
/// minimum cut of the same size, built by repeated augmentation from the
/// empty system.
pub fn max_disjoint_paths(
    g: &MultiGraph,
    source: &BTreeSet<VertexId>,
    target: &BTreeSet<VertexId>,
) -> (PathSystem, Separator) {
    let mut sys = PathSystem::empty(source.clone(), target.clone());
    loop {
        match augment(g, &sys).expect("internally built systems are valid") {
            Augmented::Larger { system, .. } => sys = system,
            Augmented::Blocked { separator } => return (sys, separator),
        }
    }
}

/// Reference implementation: a smallest cut by exhaustive subset search
/// over the legal elements (vertices outside the endpoint sets, vertices in
/// both, and direct source–target edges). Exponential; small graphs only.
pub fn minimum_separator_exhaustive(
    g: &MultiGraph,
    source: &BTreeSet<VertexId>,
    target: &BTreeSet<VertexId>,
) -> Separator {
    #[derive(Clone, Copy)]
    enum Element {
        V(VertexId),
        E(EdgeId),
    }
    let mut pool: Vec<Element> = Vec::new();
    for v in g.vertex_ids() {
        let in_a = source.contains(&v);
        let in_b = target.contains(&v);
        if (!in_a && !in_b) || (in_a && in_b) {
            pool.push(Element::V(v));
        }
    }
    for (e, u, v) in g.edges() {
        if (source.contains(&u) && target.contains(&v))
            || (source.contains(&v) && target.contains(&u))
        {
            pool.push(Element::E(e));
        }
    }

    fn assemble(chosen: &[Element]) -> Separator {
        let mut sep = Separator::default();
        for el in chosen {
            match el {
                Element::V(v) => sep.vertices.push(*v),
                Element::E(e) => sep.edges.push(*e),
            }
        }
        sep.vertices.sort();
        sep.edges.sort();
        sep
    }

    fn search(
        g: &MultiGraph,
        source: &BTreeSet<VertexId>,
        target: &BTreeSet<VertexId>,
        pool: &[Element],
        from: usize,
        remaining: usize,
        chosen: &mut Vec<Element>,
    ) -> Option<Separator> {
        if remaining == 0 {
            let sep = assemble(chosen);
            if separates(g, source, target, &sep) {
                return Some(sep);
            }
            return None;
        }
        for i in from..pool.len() {
            if pool.len() - i < remaining {
                break;
            }
            chosen.push(pool[i]);
            let hit = search(g, source, target, pool, i + 1, remaining - 1, chosen);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    for size in 0..=pool.len() {
        let mut chosen = Vec::new();
        if let Some(found) = search(g, source, target, &pool, 0, size, &mut chosen) {
            return found;
        }
    }
    unreachable!("removing every legal element leaves no source-target path");
}

/// A graph is `k`-connected when it is simple, has more than `k` vertices,
/// and no vertex set of size below `k` disconnects it. Decided by maximum
/// independent path systems over nonadjacent pairs. Multigraphs with loops
/// or parallel edges are never considered `k`-connected.
pub fn is_k_connected(g: &MultiGraph, k: usize) -> bool {
    assert!(k >= 1);
    if !g.is_simple() {
        return false;
    }
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    if vs.len() <= k {
        return false;
    }
    let mut adjacent: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for (_, u, v) in g.edges() {
        adjacent.insert((u, v));
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if adjacent.contains(&(u, v)) {
                continue;
            }
            let (sys, _) =
                max_disjoint_paths(g, &BTreeSet::from([u]), &BTreeSet::from([v]));
            if sys.len() < k {
                return false;
            }
        }
    }
    true
}

/// Every two points of the 1-complex lie on a common circle. Decided on the
/// twice-subdivided graph, which is simple with at least three vertices:
/// there the property is plain 2-connectedness, i.e. a single block.
pub fn is_cyclically_connected(g: &MultiGraph) -> bool {
    if !g.is_connected() || g.edge_count() == 0 {
        return false;
    }
    let sub = g.subdivide_uniform(2);
    match crate::decompose::blocks(&sub.graph) {
        Ok(dec) => dec.blocks.len() == 1,
        Err(_) => false,
    }
}

/// Checks the alternating-walk conditions of `walk` against `sys`.
/// Returns a description of the first violation, if any.
pub fn check_alternating(
    g: &MultiGraph,
    sys: &PathSystem,
    walk: &AlternatingWalk,
) -> Result<(), String> {
    let on_interior: BTreeMap<VertexId, usize> = sys
        .paths
        .iter()
        .enumerate()
        .flat_map(|(pi, p)| p.interior().iter().map(move |&v| (v, pi)))
        .collect();
    // system edge -> (path, index) for the backwards check
    let edge_pos: BTreeMap<EdgeId, (usize, usize)> = sys
        .paths
        .iter()
        .enumerate()
        .flat_map(|(pi, p)| p.edges.iter().enumerate().map(move |(j, &e)| (e, (pi, j))))
        .collect();
    let trivial: BTreeSet<VertexId> = sys
        .paths
        .iter()
        .filter(|p| p.vertices.len() == 1)
        .map(|p| p.first())
        .collect();

    if walk.steps.is_empty() {
        if sys.source.contains(&walk.start) && sys.target.contains(&walk.start) {
            return Ok(());
        }
        return Err("empty walk must sit at a source-and-target vertex".into());
    }
    if !sys.source.contains(&walk.start)
        || sys.target.contains(&walk.start)
        || trivial.contains(&walk.start)
    {
        return Err(format!("walk must start at a plain source vertex, not {}", walk.start));
    }
    if walk.steps[0].on_system {
        return Err("walk must leave the source along a free edge".into());
    }
    let mut edge_seen = BTreeSet::new();
    let mut at = walk.start;
    for (i, s) in walk.steps.iter().enumerate() {
        if s.from != at {
            return Err(format!("step {i} starts at {} but the walk is at {at}", s.from));
        }
        if !edge_seen.insert(s.edge) {
            return Err(format!("edge {} repeated", s.edge));
        }
        let (x, y) = g.endpoints(s.edge).map_err(|e| e.to_string())?;
        if (x, y) != (s.from.min(s.to), s.from.max(s.to)) {
            return Err(format!(
                "step {i}: edge {} does not join {} and {}",
                s.edge, s.from, s.to
            ));
        }
        if s.on_system != edge_pos.contains_key(&s.edge) {
            return Err(format!("step {i}: system flag is wrong for edge {}", s.edge));
        }
        if s.on_system {
            let (pi, j) = edge_pos[&s.edge];
            let p = &sys.paths[pi];
            if !(s.from == p.vertices[j + 1] && s.to == p.vertices[j]) {
                return Err(format!("step {i}: system edge {} not traversed backwards", s.edge));
            }
        }
        at = s.to;
        let last = i + 1 == walk.steps.len();
        if !s.on_system && on_interior.contains_key(&s.to) {
            // a hit must be followed by a backward step on that path
            if last {
                return Err(format!("walk ends on a hit at {}", s.to));
            }
            let next = &walk.steps[i + 1];
            if !(next.on_system && next.from == s.to) {
                return Err(format!("hit at {} not followed backwards", s.to));
            }
        }
        if !last {
            if sys.source.contains(&s.to) {
                return Err(format!("walk re-enters the source set at {}", s.to));
            }
            if sys.target.contains(&s.to) {
                return Err(format!("walk passes a target vertex {} without ending", s.to));
            }
        }
    }
    let end = walk.end();
    if !sys.target.contains(&end) {
        return Err(format!("walk must end in the target set, not at {end}"));
    }
    // vertices repeated only on system paths
    let on_any_path: BTreeSet<VertexId> =
        sys.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
    let mut visits: BTreeMap<VertexId, usize> = BTreeMap::new();
    *visits.entry(walk.start).or_insert(0) += 1;
    for s in &walk.steps {
        *visits.entry(s.to).or_insert(0) += 1;
    }
    for (v, count) in visits {
        if count > 1 && !on_any_path.contains(&v) {
            return Err(format!("vertex {v} repeated off the system"));
        }
    }
    Ok(())
}
