//! Ground-truth arc/circle connectivity by exhaustive search.
//!
//! Marked points live on edge interiors only; a configuration of point
//! counts per edge captures everything up to homeomorphism. Each
//! configuration is realized by subdividing the graph and searching for a
//! simple path (or cycle) through the marked vertices, so an answer here is
//! a statement about the 1-complex itself, independent of the combinatorial
//! characterizations it is used to check.

use crate::graph::{EdgeId, MultiGraph, PointConfig, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The node-expansion budget ran out; the question is unanswered.
    BudgetExceeded { limit: u64 },
    TooLarge { vertices: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { limit } => {
                write!(f, "search budget of {limit} node expansions exceeded")
            }
            OracleError::TooLarge { vertices } => {
                write!(f, "graph too large for the oracle ({vertices} vertices, max 128)")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Node-expansion counter. Exhausting it is an error, never a wrong answer.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn charge(&mut self, amount: u64) -> Result<(), OracleError> {
        self.used += amount;
        if self.used > self.limit {
            Err(OracleError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(200_000_000)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Holds,
    /// The lexicographically first configuration admitting no witness.
    Fails(PointConfig),
}

impl OracleVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, OracleVerdict::Holds)
    }
}

/// A simple path in a subdivided graph covering all marked vertices; both
/// endpoints are marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPath {
    pub vertices: Vec<VertexId>,
}

impl WitnessPath {
    pub fn covers(&self, marked: &BTreeSet<VertexId>) -> bool {
        marked.iter().all(|m| self.vertices.contains(m))
    }

    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<&VertexId> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }
}

/// A simple closed curve: a loop, a parallel pair, or a cycle of length
/// three or more, given by its edges and the vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Enumerates all configurations of exactly `n` marked points over the edge
/// set in lexicographic order of count vectors (edges in id order).
fn for_each_config<F>(g: &MultiGraph, n: usize, mut f: F) -> Result<Option<PointConfig>, OracleError>
where
    F: FnMut(&PointConfig) -> Result<bool, OracleError>,
{
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    assert!(!edges.is_empty(), "oracle needs at least one edge");
    let mut counts = vec![0usize; edges.len()];
    let m = edges.len();

    // lexicographic compositions of n into m parts
    fn next(counts: &mut [usize], n: usize) -> bool {
        let m = counts.len();
        // find rightmost position before the last that can give to the tail
        let mut i = m - 1;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if counts[i] > 0 {
                break;
            }
        }
        // move one unit from position i to position i+1, reset the tail
        let tail: usize = counts[i + 1..].iter().sum();
        counts[i] -= 1;
        for c in counts[i + 1..].iter_mut() {
            *c = 0;
        }
        counts[i + 1] = tail + 1;
        let _ = n;
        true
    }

    counts[0] = n;
    loop {
        let cfg = PointConfig::new(
            edges
                .iter()
                .zip(&counts)
                .filter(|&(_, &c)| c > 0)
                .map(|(&e, &c)| (e, c))
                .collect::<BTreeMap<_, _>>(),
        )
        .expect("n >= 1 marks at least one point");
        if !f(&cfg)? {
            return Ok(Some(cfg));
        }
        if m == 1 || !next(&mut counts, n) {
            return Ok(None);
        }
    }
}

/// Every configuration of `n` points lies on an arc. On failure, reports the
/// first failing configuration in deterministic edge order.
pub fn oracle_n_ac(g: &MultiGraph, n: usize, budget: &mut Budget) -> Result<OracleVerdict, OracleError> {
    assert!(n >= 1);
    assert!(g.edge_count() > 0, "oracle needs at least one edge");
    let failing = for_each_config(g, n, |cfg| {
        budget.charge(1)?;
        let sub = g.subdivide(cfg).expect("configuration refers to existing edges");
        let marked: BTreeSet<VertexId> = sub.marked.iter().copied().collect();
        Ok(path_through_vertices(&sub.graph, &marked, budget)?.is_some())
    })?;
    Ok(match failing {
        None => OracleVerdict::Holds,
        Some(cfg) => OracleVerdict::Fails(cfg),
    })
}

/// Every configuration of `n` points lies on a simple closed curve.
pub fn oracle_n_cc(g: &MultiGraph, n: usize, budget: &mut Budget) -> Result<OracleVerdict, OracleError> {
    assert!(n >= 1);
    assert!(g.edge_count() > 0, "oracle needs at least one edge");
    let failing = for_each_config(g, n, |cfg| {
        budget.charge(1)?;
        let sub = g.subdivide(cfg).expect("configuration refers to existing edges");
        let marked: BTreeSet<VertexId> = sub.marked.iter().copied().collect();
        Ok(cycle_through_vertices(&sub.graph, &marked, budget)?.is_some())
    })?;
    Ok(match failing {
        None => OracleVerdict::Holds,
        Some(cfg) => OracleVerdict::Fails(cfg),
    })
}

/// Dense adjacency over the simple support of the graph: parallel edges
/// collapse and loops disappear, neither can help a simple path.
struct Support {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Support {
    fn build(g: &MultiGraph) -> Result<Support, OracleError> {
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        if ids.len() > 128 {
            return Err(OracleError::TooLarge { vertices: ids.len() });
        }
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ids.len()];
        for (_, u, v) in g.edges() {
            if u != v {
                let (i, j) = (index[&u], index[&v]);
                sets[i].insert(j);
                sets[j].insert(i);
            }
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Support { ids, adj })
    }
}

/// All still-needed marks reachable from `at` through unvisited vertices.
fn marks_reachable(adj: &[Vec<usize>], visited: u128, at: usize, needed: u128) -> bool {
    if needed == 0 {
        return true;
    }
    let mut seen: u128 = 1 << at;
    let mut stack = vec![at];
    let mut found: u128 = needed & (1 << at);
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if visited & (1 << w) != 0 || seen & (1 << w) != 0 {
                continue;
            }
            seen |= 1 << w;
            found |= needed & (1 << w);
            if found == needed {
                return true;
            }
            stack.push(w);
        }
    }
    found == needed
}

/// A simple path containing all marked vertices, if one exists. Backtracking
/// over the simple support with reachability pruning; endpoints are
/// normalized to marked vertices, which is no loss of generality.
pub fn path_through_vertices(
    g: &MultiGraph,
    marked: &BTreeSet<VertexId>,
    budget: &mut Budget,
) -> Result<Option<WitnessPath>, OracleError> {
    if marked.is_empty() {
        return Ok(Some(WitnessPath { vertices: Vec::new() }));
    }
    let sup = Support::build(g)?;
    let index: BTreeMap<VertexId, usize> =
        sup.ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for m in marked {
        assert!(index.contains_key(m), "marked vertex {m} not in graph");
    }
    let mark_mask: u128 = marked.iter().map(|m| 1u128 << index[m]).sum();

    for &start in marked {
        let s = index[&start];
        let mut trail = vec![s];
        if dfs_path(&sup.adj, 1 << s, s, mark_mask & !(1 << s), &mut trail, budget)? {
            return Ok(Some(WitnessPath {
                vertices: trail.into_iter().map(|i| sup.ids[i]).collect(),
            }));
        }
    }
    Ok(None)
}

fn dfs_path(
    adj: &[Vec<usize>],
    visited: u128,
    at: usize,
    needed: u128,
    trail: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, OracleError> {
    if needed == 0 {
        return Ok(true);
    }
    budget.charge(1)?;
    if !marks_reachable(adj, visited & !(1 << at), at, needed) {
        return Ok(false);
    }
    for &w in &adj[at] {
        if visited & (1 << w) != 0 {
            continue;
        }
        trail.push(w);
        let found =
            dfs_path(adj, visited | (1 << w), w, needed & !(1 << w), trail, budget)?;
        if found {
            return Ok(true);
        }
        trail.pop();
    }
    Ok(false)
}

/// A simple closed curve through all marked vertices: a loop, a pair of
/// parallel edges, or a longer cycle.
pub fn cycle_through_vertices(
    g: &MultiGraph,
    marked: &BTreeSet<VertexId>,
    budget: &mut Budget,
) -> Result<Option<WitnessCycle>, OracleError> {
    assert!(!marked.is_empty());
    let start = *marked.iter().next().unwrap();
    // a loop is a circle through its base vertex alone
    if marked.len() == 1 {
        if let Some((e, _, _)) = g.edges().find(|&(_, u, v)| u == v && u == start) {
            return Ok(Some(WitnessCycle { vertices: vec![start], edges: vec![e] }));
        }
    }

    let ids: Vec<VertexId> = g.vertex_ids().collect();
    if ids.len() > 128 {
        return Err(OracleError::TooLarge { vertices: ids.len() });
    }
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); ids.len()];
    for (e, u, v) in g.edges() {
        if u != v {
            adj[index[&u]].push((e, index[&v]));
            adj[index[&v]].push((e, index[&u]));
        }
    }
    for a in adj.iter_mut() {
        a.sort();
    }
    let s = index[&start];
    let needed: u128 = marked.iter().map(|m| 1u128 << index[m]).sum::<u128>() & !(1u128 << s);

    let mut vtrail = vec![s];
    let mut etrail = Vec::new();
    if dfs_cycle(&adj, s, 1 << s, s, None, needed, &mut vtrail, &mut etrail, budget)? {
        return Ok(Some(WitnessCycle {
            vertices: vtrail.into_iter().map(|i| ids[i]).collect(),
            edges: etrail,
        }));
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycle(
    adj: &[Vec<(EdgeId, usize)>],
    s: usize,
    visited: u128,
    at: usize,
    first_edge: Option<EdgeId>,
    needed: u128,
    vtrail: &mut Vec<usize>,
    etrail: &mut Vec<EdgeId>,
    budget: &mut Budget,
) -> Result<bool, OracleError> {
    budget.charge(1)?;
    if at != s && needed == 0 {
        // try to close up
        if let Some(&(e, _)) = adj[at].iter().find(|&&(e, w)| w == s && Some(e) != first_edge) {
            etrail.push(e);
            return Ok(true);
        }
    }
    // prune: remaining marks and the start must stay reachable
    if !cycle_feasible(adj, s, visited, at, needed) {
        return Ok(false);
    }
    for &(e, w) in &adj[at] {
        if at != s && w == s && Some(e) != first_edge && needed == 0 {
            etrail.push(e);
            return Ok(true);
        }
        if visited & (1 << w) != 0 {
            continue;
        }
        vtrail.push(w);
        etrail.push(e);
        let fe = first_edge.or(Some(e));
        if dfs_cycle(adj, s, visited | (1 << w), w, fe, needed & !(1 << w), vtrail, etrail, budget)? {
            return Ok(true);
        }
        vtrail.pop();
        etrail.pop();
    }
    Ok(false)
}

fn cycle_feasible(adj: &[Vec<(EdgeId, usize)>], s: usize, visited: u128, at: usize, needed: u128) -> bool {
    // flood from `at` through unvisited vertices (start allowed as endpoint)
    let mut seen: u128 = 1 << at;
    let mut stack = vec![at];
    let mut found = needed & (1 << at);
    let mut start_ok = at == s;
    while let Some(v) = stack.pop() {
        for &(_, w) in &adj[v] {
            if w == s {
                start_ok = true;
            }
            if visited & (1 << w) != 0 || seen & (1 << w) != 0 {
                continue;
            }
            seen |= 1 << w;
            found |= needed & (1 << w);
            stack.push(w);
        }
    }
    start_ok && found == needed
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Cycle,
    Theta,
}

/// A subgraph homeomorphic to a circle or a theta curve containing all
/// marked vertices, when one exists. The theta search enumerates branch
/// vertex pairs and grows three internally disjoint connecting paths that
/// jointly cover the marks.
pub fn exists_cycle_or_theta_through(
    g: &MultiGraph,
    marked: &BTreeSet<VertexId>,
    budget: &mut Budget,
) -> Result<Option<(CurveKind, Vec<EdgeId>)>, OracleError> {
    assert!(!marked.is_empty());
    if let Some(cycle) = cycle_through_vertices(g, marked, budget)? {
        return Ok(Some((CurveKind::Cycle, cycle.edges)));
    }

    let ids: Vec<VertexId> = g.vertex_ids().collect();
    if ids.len() > 128 {
        return Err(OracleError::TooLarge { vertices: ids.len() });
    }
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); ids.len()];
    for (e, u, v) in g.edges() {
        if u != v {
            adj[index[&u]].push((e, index[&v]));
            adj[index[&v]].push((e, index[&u]));
        }
    }
    for a in adj.iter_mut() {
        a.sort();
    }
    let needed_full: u128 = marked.iter().map(|m| 1u128 << index[m]).sum();

    for a in 0..ids.len() {
        if adj[a].len() < 3 {
            continue;
        }
        for b in a + 1..ids.len() {
            if adj[b].len() < 3 {
                continue;
            }
            let base = 1u128 << a | 1u128 << b;
            let needed = needed_full & !base;
            let mut paths: Vec<Vec<EdgeId>> = Vec::new();
            if theta_paths(&adj, a, b, base, needed, 0, &mut paths, budget)? {
                let edges: Vec<EdgeId> = paths.into_iter().flatten().collect();
                return Ok(Some((CurveKind::Theta, edges)));
            }
        }
    }
    Ok(None)
}

/// Grows the `k`-th of three internally disjoint a–b paths; `visited` holds
/// interior vertices of earlier paths plus `a`, `b`. Marks left in `needed`
/// must be covered by the remaining paths.
#[allow(clippy::too_many_arguments)]
fn theta_paths(
    adj: &[Vec<(EdgeId, usize)>],
    a: usize,
    b: usize,
    visited: u128,
    needed: u128,
    k: usize,
    paths: &mut Vec<Vec<EdgeId>>,
    budget: &mut Budget,
) -> Result<bool, OracleError> {
    if k == 3 {
        return Ok(needed == 0);
    }
    let mut vtrail = vec![a];
    let mut etrail: Vec<EdgeId> = Vec::new();
    path_extend(adj, a, b, visited, needed, k, paths, &mut vtrail, &mut etrail, budget)
}

#[allow(clippy::too_many_arguments)]
fn path_extend(
    adj: &[Vec<(EdgeId, usize)>],
    at: usize,
    b: usize,
    visited: u128,
    needed: u128,
    k: usize,
    paths: &mut Vec<Vec<EdgeId>>,
    vtrail: &mut Vec<usize>,
    etrail: &mut Vec<EdgeId>,
    budget: &mut Budget,
) -> Result<bool, OracleError> {
    budget.charge(1)?;
    let a = vtrail[0];
    for &(e, w) in &adj[at] {
        if w == b {
            // a parallel a-b edge may serve as at most one path, and the
            // edge must be new
            if paths.iter().any(|p| p.len() == 1 && p[0] == e) {
                continue;
            }
            if etrail.contains(&e) {
                continue;
            }
            etrail.push(e);
            let covered: u128 = vtrail.iter().skip(1).map(|&v| 1u128 << v).sum();
            let interior: u128 = vtrail.iter().skip(1).map(|&v| 1u128 << v).sum();
            paths.push(etrail.clone());
            let done = theta_paths(
                adj,
                a,
                b,
                visited | interior,
                needed & !covered,
                k + 1,
                paths,
                budget,
            )?;
            if done {
                return Ok(true);
            }
            paths.pop();
            etrail.pop();
            continue;
        }
        if visited & (1 << w) != 0 || w == a {
            continue;
        }
        vtrail.push(w);
        etrail.push(e);
        let done = path_extend(adj, w, b, visited | (1 << w), needed, k, paths, vtrail, etrail, budget)?;
        if done {
            return Ok(true);
        }
        vtrail.pop();
        etrail.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::graph::PointConfig;
    use crate::shape::{recognize_shape, Shape};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn many_points_on_a_cycle() {
        let g = atlas::cycle(4);
        let verdict = oracle_n_ac(&g, 50, &mut budget()).unwrap();
        assert!(verdict.holds());
    }

    #[test]
    fn k4_fails_at_six_with_one_point_per_edge() {
        let g = atlas::named("k4").unwrap();
        match oracle_n_ac(&g, 6, &mut budget()).unwrap() {
            OracleVerdict::Fails(cfg) => {
                assert_eq!(cfg.total(), 6);
                assert!(g.edge_ids().all(|e| cfg.count_on(e) == 1), "one point per edge");
            }
            OracleVerdict::Holds => panic!("K4 is not 6-arc-connected"),
        }
        assert!(oracle_n_ac(&g, 5, &mut budget()).unwrap().holds());
    }

    #[test]
    fn star_fails_at_three() {
        let g = atlas::star(3);
        match oracle_n_ac(&g, 3, &mut budget()).unwrap() {
            OracleVerdict::Fails(cfg) => {
                assert!(g.edge_ids().all(|e| cfg.count_on(e) == 1));
            }
            OracleVerdict::Holds => panic!("a tripod blocks three points"),
        }
    }

    #[test]
    fn path_witness_examples() {
        let g = atlas::path(4);
        let all: BTreeSet<VertexId> = g.vertex_ids().collect();
        let w = path_through_vertices(&g, &all, &mut budget()).unwrap().unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.is_simple() && w.covers(&all));

        let star = atlas::star(3);
        let leaves: BTreeSet<VertexId> =
            star.vertex_ids().filter(|&v| star.degree(v).unwrap() == 1).collect();
        assert!(path_through_vertices(&star, &leaves, &mut budget()).unwrap().is_none());

        let c6 = atlas::cycle(6);
        let all: BTreeSet<VertexId> = c6.vertex_ids().collect();
        let w = path_through_vertices(&c6, &all, &mut budget()).unwrap().unwrap();
        assert_eq!(w.vertices.len(), 6);
    }

    #[test]
    fn cc_oracle_on_cycles_and_theta() {
        let c5 = atlas::cycle(5);
        assert!(oracle_n_cc(&c5, 7, &mut budget()).unwrap().holds());

        let theta = atlas::named("theta").unwrap();
        match oracle_n_cc(&theta, 3, &mut budget()).unwrap() {
            OracleVerdict::Fails(cfg) => {
                assert!(theta.edge_ids().all(|e| cfg.count_on(e) == 1));
            }
            OracleVerdict::Holds => panic!("one point per theta edge fits on no circle"),
        }
        assert!(oracle_n_cc(&theta, 2, &mut budget()).unwrap().holds());
    }

    #[test]
    fn cycle_witness_uses_parallel_edges_and_loops() {
        let double = atlas::named("double_edge").unwrap();
        let marks: BTreeSet<VertexId> = double.vertex_ids().collect();
        let w = cycle_through_vertices(&double, &marks, &mut budget()).unwrap().unwrap();
        assert_eq!(w.edges.len(), 2);
        assert_ne!(w.edges[0], w.edges[1]);

        let lp = atlas::named("loop").unwrap();
        let marks: BTreeSet<VertexId> = lp.vertex_ids().collect();
        let w = cycle_through_vertices(&lp, &marks, &mut budget()).unwrap().unwrap();
        assert_eq!(w.edges.len(), 1);
    }

    #[test]
    fn cycle_or_theta_in_k33() {
        let g = atlas::named("k33").unwrap();
        let sub = g.subdivide(&PointConfig::uniform(&g, 1).unwrap()).unwrap();
        let marks: BTreeSet<VertexId> = sub.marked.iter().take(4).copied().collect();
        let hit = exists_cycle_or_theta_through(&sub.graph, &marks, &mut budget()).unwrap();
        let (kind, edges) = hit.expect("four points of K3,3 lie on a circle or theta");
        let piece = sub.graph.edge_subgraph(&edges);
        let shape = recognize_shape(&piece);
        match kind {
            CurveKind::Cycle => assert_eq!(shape, Shape::Cycle),
            CurveKind::Theta => assert_eq!(shape, Shape::Theta),
        }
    }

    #[test]
    fn six_midpoints_of_k4_fit_no_cycle_or_theta() {
        let g = atlas::named("k4").unwrap();
        let sub = g.subdivide(&PointConfig::uniform(&g, 1).unwrap()).unwrap();
        let marks: BTreeSet<VertexId> = sub.marked.iter().copied().collect();
        assert_eq!(marks.len(), 6);
        assert!(exists_cycle_or_theta_through(&sub.graph, &marks, &mut budget())
            .unwrap()
            .is_none());
    }

    #[test]
    fn cycle_or_theta_on_plain_cycle() {
        let g = atlas::cycle(6);
        let marks: BTreeSet<VertexId> = g.vertex_ids().collect();
        let (kind, edges) =
            exists_cycle_or_theta_through(&g, &marks, &mut budget()).unwrap().unwrap();
        assert_eq!(kind, CurveKind::Cycle);
        assert_eq!(edges.len(), 6);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = atlas::named("k4").unwrap();
        let mut tiny = Budget::new(3);
        assert!(matches!(
            oracle_n_ac(&g, 4, &mut tiny),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oracle_is_monotone_in_the_point_count() {
        for g in atlas::enumerate_connected_multigraphs(3).unwrap() {
            let mut b = budget();
            let mut previous = true;
            for n in 1..=5usize {
                let holds = oracle_n_ac(&g, n, &mut b).unwrap().holds();
                assert!(previous || !holds, "coverable at {n} but not below");
                previous = holds;
            }
            let mut previous = true;
            for n in 1..=4usize {
                let holds = oracle_n_cc(&g, n, &mut b).unwrap().holds();
                assert!(previous || !holds, "circled at {n} but not below");
                previous = holds;
            }
        }
    }

    #[test]
    fn coverable_configurations_cover_their_subconfigurations() {
        for g in atlas::enumerate_connected_multigraphs(3).unwrap() {
            let edges: Vec<_> = g.edge_ids().collect();
            let cfg = PointConfig::new(edges.iter().map(|&e| (e, 2)).collect()).unwrap();
            let sub = g.subdivide(&cfg).unwrap();
            let marked: BTreeSet<VertexId> = sub.marked.iter().copied().collect();
            let Some(w) = path_through_vertices(&sub.graph, &marked, &mut budget()).unwrap()
            else {
                continue;
            };
            // the same witness covers every subset of the marks
            for drop in &sub.marked {
                let fewer: BTreeSet<VertexId> =
                    marked.iter().copied().filter(|m| m != drop).collect();
                assert!(w.covers(&fewer));
            }
        }
    }
}
