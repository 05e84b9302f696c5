//! Named graph catalogue, exhaustive small-multigraph and cubic-graph
//! enumeration, and seeded random graph generation.

use crate::graph::{MultiGraph, VertexId};
use crate::iso::is_isomorphic;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtlasError {
    UnknownName(String),
    OddVertexCount(usize),
    BudgetExceeded(String),
    InfeasibleDegreeSequence,
}

impl fmt::Display for AtlasError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtlasError::UnknownName(n) => write!(f, "unknown graph name '{n}'"),
            AtlasError::OddVertexCount(n) => {
                write!(f, "no 3-regular graph on an odd number of vertices ({n})")
            }
            AtlasError::BudgetExceeded(what) => write!(f, "enumeration budget exceeded: {what}"),
            AtlasError::InfeasibleDegreeSequence => write!(f, "degree sequence has odd sum"),
        }
    }
}

impl std::error::Error for AtlasError {}

/// Path with `edges` edges (`edges + 1` vertices).
pub fn path(edges: usize) -> MultiGraph {
    assert!(edges >= 1);
    let pairs: Vec<(usize, usize)> = (0..edges).map(|i| (i, i + 1)).collect();
    MultiGraph::from_edges(edges + 1, &pairs)
}

/// Cycle on `n >= 3` vertices (use `named("loop")` for the 1-vertex circle).
pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 3);
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::from_edges(n, &pairs)
}

pub fn complete(n: usize) -> MultiGraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    MultiGraph::from_edges(n, &pairs)
}

pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in 0..b {
            pairs.push((i, a + j));
        }
    }
    MultiGraph::from_edges(a + b, &pairs)
}

pub fn star(leaves: usize) -> MultiGraph {
    let pairs: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
    MultiGraph::from_edges(leaves + 1, &pairs)
}

fn wagner() -> MultiGraph {
    // K3,3 with two disjoint edges subdivided and their midpoints joined
    let mut g = complete_bipartite(3, 3);
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    // sides {0,1,2} and {3,4,5}; edges (0,3) and (1,4) are non-adjacent
    let e1 = g
        .edges()
        .find(|&(_, u, v)| (u, v) == (vs[0], vs[3]))
        .map(|(e, _, _)| e)
        .unwrap();
    let e2 = g
        .edges()
        .find(|&(_, u, v)| (u, v) == (vs[1], vs[4]))
        .map(|(e, _, _)| e)
        .unwrap();
    g.remove_edge(e1);
    g.remove_edge(e2);
    let m1 = g.add_vertex();
    let m2 = g.add_vertex();
    g.add_edge(vs[0], m1);
    g.add_edge(m1, vs[3]);
    g.add_edge(vs[1], m2);
    g.add_edge(m2, vs[4]);
    g.add_edge(m1, m2);
    g
}

fn cube() -> MultiGraph {
    let mut pairs = Vec::new();
    for v in 0..8usize {
        for bit in [1usize, 2, 4] {
            let w = v ^ bit;
            if v < w {
                pairs.push((v, w));
            }
        }
    }
    MultiGraph::from_edges(8, &pairs)
}

pub const NAMED: &[&str] = &[
    "arc",
    "loop",
    "double_edge",
    "triangle",
    "c4",
    "c5",
    "theta",
    "figure_eight",
    "dumbbell",
    "lollipop",
    "happy_face",
    "baguette",
    "star3",
    "k4",
    "k5",
    "k5_minus_edge",
    "k33",
    "prism",
    "cube",
    "wagner",
    "square_ring",
    "four_spoke",
    "anchored_rings",
    "thick_ring",
];

/// Builds a catalogue graph by name. Builders are deterministic.
pub fn named(name: &str) -> Result<MultiGraph, AtlasError> {
    let g = match name {
        "arc" => path(1),
        "loop" => MultiGraph::from_edges(1, &[(0, 0)]),
        "double_edge" => MultiGraph::from_edges(2, &[(0, 1), (0, 1)]),
        "triangle" => cycle(3),
        "c4" => cycle(4),
        "c5" => cycle(5),
        "theta" => MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]),
        "figure_eight" => MultiGraph::from_edges(1, &[(0, 0), (0, 0)]),
        "dumbbell" => {
            // two triangles joined by an edge
            MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
        }
        "lollipop" => MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]),
        "happy_face" => {
            // triangles 0-1-2 and 0-3-4 sharing 0, arc 1-3
            MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 3)])
        }
        "baguette" => {
            // triangles 0-1-2 and 3-4-5, arcs 0-3 and 1-4
            MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)])
        }
        "star3" => star(3),
        "k4" => complete(4),
        "k5" => complete(5),
        "k5_minus_edge" => {
            // remove one edge between what become the two degree-3 vertices
            MultiGraph::from_edges(
                5,
                &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
            )
        }
        "k33" => complete_bipartite(3, 3),
        "prism" => MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        "cube" => cube(),
        "wagner" => wagner(),
        "square_ring" => {
            // three 4-cycles glued pairwise at corners 0, 1, 2
            MultiGraph::from_edges(
                9,
                &[
                    (0, 3),
                    (3, 1),
                    (1, 4),
                    (4, 0),
                    (1, 5),
                    (5, 2),
                    (2, 6),
                    (6, 1),
                    (2, 7),
                    (7, 0),
                    (0, 8),
                    (8, 2),
                ],
            )
        }
        "four_spoke" => {
            // four internally disjoint two-edge paths between one pair
            MultiGraph::from_edges(6, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 1)])
        }
        "anchored_rings" => {
            // three 4-cycles hung between anchors 0 and 1, one of them
            // doubly attached at both anchors; puncturing any three points
            // leaves at most four pieces and no ring of three links forms,
            // so only the two-anchor split rules it out
            MultiGraph::from_edges(
                14,
                &[
                    // ring 2-3-4-5 attached by 0-2 and 1-4
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 2),
                    (0, 2),
                    (1, 4),
                    // ring 6-7-8-9 attached by 0-6 and 1-8
                    (6, 7),
                    (7, 8),
                    (8, 9),
                    (9, 6),
                    (0, 6),
                    (1, 8),
                    // ring 10-11-12-13 attached by 0-10, 0-11, 1-12, 1-13
                    (10, 11),
                    (11, 12),
                    (12, 13),
                    (13, 10),
                    (0, 10),
                    (0, 11),
                    (1, 12),
                    (1, 13),
                ],
            )
        }
        "thick_ring" => {
            // ring of three links on anchors 0,1,2; each link is two
            // two-edge paths with a chord joining their midpoints, so
            // removing the anchors keeps every link in one piece
            MultiGraph::from_edges(
                9,
                &[
                    // link between 0 and 1, midpoints 3,4
                    (0, 3),
                    (3, 1),
                    (0, 4),
                    (4, 1),
                    (3, 4),
                    // link between 0 and 2, midpoints 5,6
                    (0, 5),
                    (5, 2),
                    (0, 6),
                    (6, 2),
                    (5, 6),
                    // link between 1 and 2, midpoints 7,8
                    (1, 7),
                    (7, 2),
                    (1, 8),
                    (8, 2),
                    (7, 8),
                ],
            )
        }
        other => return Err(AtlasError::UnknownName(other.to_string())),
    };
    Ok(g)
}

/// Stores one representative per isomorphism class, bucketed by a cheap
/// structural key so most membership tests reduce to a couple of
/// `is_isomorphic` calls.
pub struct GraphSet {
    reps: Vec<MultiGraph>,
    buckets: HashMap<Vec<u64>, Vec<usize>>,
}

impl GraphSet {
    pub fn new() -> GraphSet {
        GraphSet { reps: Vec::new(), buckets: HashMap::new() }
    }

    fn key(g: &MultiGraph) -> Vec<u64> {
        let mut key = vec![
            g.vertex_count() as u64,
            g.edge_count() as u64,
            g.loop_count() as u64,
        ];
        for (d, l) in g.degree_signature() {
            key.push(((d as u64) << 8) | l as u64);
        }
        key
    }

    /// Inserts unless an isomorphic representative is already present.
    /// Returns true when the graph was new.
    pub fn insert(&mut self, g: MultiGraph) -> bool {
        let key = Self::key(&g);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if is_isomorphic(&self.reps[i], &g) {
                return false;
            }
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn into_vec(self) -> Vec<MultiGraph> {
        self.reps
    }
}

impl Default for GraphSet {
    fn default() -> Self {
        GraphSet::new()
    }
}

/// One representative per isomorphism class of connected multigraphs
/// (loops and parallel edges allowed) with `1..=max_edges` edges, grouped in
/// ascending edge count. `max_edges <= 7`.
pub fn enumerate_connected_multigraphs(max_edges: usize) -> Result<Vec<MultiGraph>, AtlasError> {
    if max_edges > 7 {
        return Err(AtlasError::BudgetExceeded(format!(
            "connected multigraphs capped at 7 edges, requested {max_edges}"
        )));
    }
    let mut all = Vec::new();
    let mut level: Vec<MultiGraph> = {
        let mut set = GraphSet::new();
        set.insert(path(1));
        set.insert(named("loop").unwrap());
        set.into_vec()
    };
    all.extend(level.iter().cloned());
    for _ in 2..=max_edges {
        let mut next = GraphSet::new();
        for g in &level {
            let vs: Vec<VertexId> = g.vertex_ids().collect();
            // new edge between existing vertices, loops included
            for i in 0..vs.len() {
                for j in i..vs.len() {
                    let mut h = g.clone();
                    h.add_edge(vs[i], vs[j]);
                    next.insert(h);
                }
            }
            // new edge to a fresh vertex
            for &v in &vs {
                let mut h = g.clone();
                let w = h.add_vertex();
                h.add_edge(v, w);
                next.insert(h);
            }
        }
        level = next.into_vec();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

/// All connected simple 3-regular graphs on `n` vertices, up to isomorphism.
/// `n` must be even; capped at 14 vertices.
pub fn enumerate_cubic(n: usize) -> Result<Vec<MultiGraph>, AtlasError> {
    if !n.is_multiple_of(2) {
        return Err(AtlasError::OddVertexCount(n));
    }
    if n > 14 {
        return Err(AtlasError::BudgetExceeded(format!(
            "cubic enumeration capped at 14 vertices, requested {n}"
        )));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    // Backtracking over adjacency rows in a breadth-first labeling: vertex 0
    // is adjacent to {1,2,3}, every later vertex has an earlier neighbor, and
    // unseen vertices are introduced with consecutive indices. Each class is
    // produced at least once; GraphSet removes the duplicates.
    let mut set = GraphSet::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in 1..=3 {
        adj[0].push(w);
        adj[w].push(0);
    }
    let mut touched_hi = 3usize;
    fill_rows(1, n, &mut adj, &mut touched_hi, &mut set);
    Ok(set.into_vec())
}

fn fill_rows(
    row: usize,
    n: usize,
    adj: &mut Vec<Vec<usize>>,
    touched_hi: &mut usize,
    out: &mut GraphSet,
) {
    if row == n {
        if *touched_hi == n - 1 {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
                .collect();
            out.insert(MultiGraph::from_edges(n, &pairs));
        }
        return;
    }
    if row > *touched_hi {
        // row has no earlier neighbor, so no breadth-first labeling exists
        return;
    }
    let need = 3 - adj[row].len();
    let old_candidates: Vec<usize> =
        (row + 1..=*touched_hi).filter(|&w| adj[w].len() < 3).collect();
    // choose how many fresh vertices this row introduces
    for fresh in 0..=need {
        let old_pick = need - fresh;
        if old_pick > old_candidates.len() || *touched_hi + fresh > n - 1 {
            continue;
        }
        let mut choice = vec![0usize; old_pick];
        pick_old(
            &old_candidates,
            0,
            0,
            &mut choice,
            row,
            fresh,
            n,
            adj,
            touched_hi,
            out,
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn pick_old(
    cands: &[usize],
    from: usize,
    k: usize,
    choice: &mut Vec<usize>,
    row: usize,
    fresh: usize,
    n: usize,
    adj: &mut Vec<Vec<usize>>,
    touched_hi: &mut usize,
    out: &mut GraphSet,
) {
    if k == choice.len() {
        let base = *touched_hi;
        for &w in choice.iter() {
            adj[row].push(w);
            adj[w].push(row);
        }
        for i in 0..fresh {
            let w = base + 1 + i;
            adj[row].push(w);
            adj[w].push(row);
        }
        *touched_hi = base + fresh;
        fill_rows(row + 1, n, adj, touched_hi, out);
        *touched_hi = base;
        for i in (0..fresh).rev() {
            let w = base + 1 + i;
            adj[row].pop();
            adj[w].pop();
        }
        for &w in choice.iter().rev() {
            adj[row].pop();
            adj[w].pop();
        }
        return;
    }
    for i in from..cands.len() {
        choice[k] = cands[i];
        pick_old(cands, i + 1, k + 1, choice, row, fresh, n, adj, touched_hi, out);
    }
}

/// Exhaustive labeled enumeration with no symmetry breaking, deduplicated by
/// canonical form. Independent of `enumerate_cubic`; used to cross-check its
/// class counts at small sizes.
pub fn enumerate_cubic_reference(n: usize) -> Result<Vec<MultiGraph>, AtlasError> {
    if !n.is_multiple_of(2) {
        return Err(AtlasError::OddVertexCount(n));
    }
    if n > 8 {
        return Err(AtlasError::BudgetExceeded(format!(
            "reference cubic enumeration capped at 8 vertices, requested {n}"
        )));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut found: BTreeMap<crate::iso::CanonicalForm, MultiGraph> = BTreeMap::new();
    let mut adj = vec![Vec::new(); n];
    labeled_rows(0, n, &mut adj, &mut found);
    Ok(found.into_values().collect())
}

fn labeled_rows(
    row: usize,
    n: usize,
    adj: &mut Vec<Vec<usize>>,
    found: &mut BTreeMap<crate::iso::CanonicalForm, MultiGraph>,
) {
    if row == n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
            .collect();
        let g = MultiGraph::from_edges(n, &pairs);
        if g.is_connected() {
            found.entry(crate::iso::canonical_form(&g)).or_insert(g);
        }
        return;
    }
    let need = 3usize.saturating_sub(adj[row].len());
    if adj[row].len() > 3 {
        return;
    }
    let cands: Vec<usize> = (row + 1..n).filter(|&w| adj[w].len() < 3).collect();
    if need > cands.len() {
        return;
    }
    let mut choice = vec![0usize; need];
    labeled_pick(&cands, 0, 0, &mut choice, row, n, adj, found);
}

#[allow(clippy::too_many_arguments)]
fn labeled_pick(
    cands: &[usize],
    from: usize,
    k: usize,
    choice: &mut Vec<usize>,
    row: usize,
    n: usize,
    adj: &mut Vec<Vec<usize>>,
    found: &mut BTreeMap<crate::iso::CanonicalForm, MultiGraph>,
) {
    if k == choice.len() {
        for &w in choice.iter() {
            adj[row].push(w);
            adj[w].push(row);
        }
        labeled_rows(row + 1, n, adj, found);
        for &w in choice.iter().rev() {
            adj[row].pop();
            adj[w].pop();
        }
        return;
    }
    for i in from..cands.len() {
        choice[k] = cands[i];
        labeled_pick(cands, i + 1, k + 1, choice, row, n, adj, found);
    }
}

/// splitmix64: tiny deterministic generator, stable across platforms.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn gen_range(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    pub fn gen_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.gen_range(i + 1));
        }
    }
}

#[derive(Clone, Debug)]
pub enum RandomModel {
    /// Each unordered pair of distinct vertices gets an edge independently.
    EdgeProbability(f64),
    /// Exactly this many edges drawn uniformly over vertex pairs with
    /// replacement; loops and parallel edges can occur.
    EdgeCount(usize),
    /// Configuration model on the given degree sequence.
    DegreeSequence(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct RandomGraphParams {
    pub vertices: usize,
    pub model: RandomModel,
}

/// Deterministic per seed: the same seed and parameters always produce the
/// identical graph.
pub fn random_graph(seed: u64, params: &RandomGraphParams) -> Result<MultiGraph, AtlasError> {
    let mut rng = Rng::new(seed);
    let n = params.vertices;
    let mut g = MultiGraph::new();
    let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
    match &params.model {
        RandomModel::EdgeProbability(p) => {
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_f64() < *p {
                        g.add_edge(vs[i], vs[j]);
                    }
                }
            }
        }
        RandomModel::EdgeCount(m) => {
            for _ in 0..*m {
                let u = rng.gen_range(n);
                let v = rng.gen_range(n);
                g.add_edge(vs[u], vs[v]);
            }
        }
        RandomModel::DegreeSequence(degrees) => {
            assert_eq!(degrees.len(), n, "degree sequence length must match vertex count");
            if degrees.iter().sum::<usize>() % 2 != 0 {
                return Err(AtlasError::InfeasibleDegreeSequence);
            }
            let mut stubs: Vec<usize> = Vec::new();
            for (i, &d) in degrees.iter().enumerate() {
                stubs.extend(std::iter::repeat_n(i, d));
            }
            rng.shuffle(&mut stubs);
            for pair in stubs.chunks(2) {
                g.add_edge(vs[pair[0]], vs[pair[1]]);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::canonical_form;

    #[test]
    fn named_graphs_sanity() {
        let k33 = named("k33").unwrap();
        assert_eq!(k33.vertex_count(), 6);
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.vertex_ids().all(|v| k33.degree(v).unwrap() == 3));

        let w = named("wagner").unwrap();
        assert_eq!(w.vertex_count(), 8);
        assert_eq!(w.edge_count(), 12);
        assert!(w.vertex_ids().all(|v| w.degree(v).unwrap() == 3));
        assert!(w.is_simple());
        assert!(w.is_connected());

        let b = named("baguette").unwrap();
        let (bs, _) = b.suppress_degree2();
        assert_eq!(bs.vertex_count(), 4);
        assert_eq!(bs.edge_count(), 6);

        let k5e = named("k5_minus_edge").unwrap();
        assert_eq!(k5e.edge_count(), 9);
        let mut degs: Vec<usize> = k5e.vertex_ids().map(|v| k5e.degree(v).unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![3, 3, 4, 4, 4]);

        assert!(named("no_such_graph").is_err());

        for name in NAMED {
            let g = named(name).unwrap();
            assert!(g.is_connected(), "{name} should be connected");
            assert!(g.edge_count() > 0, "{name} should have edges");
        }
    }

    #[test]
    fn multigraph_enumeration_small_counts() {
        let one = enumerate_connected_multigraphs(1).unwrap();
        assert_eq!(one.len(), 2);

        let two = enumerate_connected_multigraphs(2).unwrap();
        let level2: Vec<&MultiGraph> = two.iter().filter(|g| g.edge_count() == 2).collect();
        // path, double edge, two loops at one vertex, loop plus pendant edge
        assert_eq!(level2.len(), 4);
        let double = named("double_edge").unwrap();
        let p2 = path(2);
        assert!(level2.iter().any(|g| is_isomorphic(g, &double)));
        assert!(level2.iter().any(|g| is_isomorphic(g, &p2)));

        let mut prev = 0;
        for m in 1..=4 {
            let classes = enumerate_connected_multigraphs(m).unwrap();
            let this_level = classes.iter().filter(|g| g.edge_count() == m).count();
            assert!(this_level > prev, "class counts should grow with edges");
            prev = this_level;
        }
    }

    #[test]
    fn enumeration_has_no_isomorphic_duplicates() {
        let graphs = enumerate_connected_multigraphs(4).unwrap();
        let mut forms = std::collections::BTreeSet::new();
        for g in &graphs {
            assert!(g.is_connected());
            assert!(forms.insert(canonical_form(g)), "duplicate class in enumeration");
        }
    }

    #[test]
    fn cubic_counts_small() {
        assert_eq!(enumerate_cubic(4).unwrap().len(), 1);
        let six = enumerate_cubic(6).unwrap();
        assert_eq!(six.len(), 2);
        assert!(six.iter().any(|g| is_isomorphic(g, &named("k33").unwrap())));
        assert!(six.iter().any(|g| is_isomorphic(g, &named("prism").unwrap())));
        assert_eq!(enumerate_cubic(8).unwrap().len(), 5);
        assert!(enumerate_cubic(7).is_err());
        assert!(enumerate_cubic(16).is_err());
    }

    #[test]
    fn cubic_matches_reference_backtracker() {
        for n in [4usize, 6, 8] {
            let fast = enumerate_cubic(n).unwrap();
            let slow = enumerate_cubic_reference(n).unwrap();
            assert_eq!(fast.len(), slow.len(), "n = {n}");
            for g in &fast {
                assert!(g.is_connected());
                assert!(g.is_simple());
                assert!(g.vertex_ids().all(|v| g.degree(v).unwrap() == 3));
                assert!(slow.iter().any(|h| is_isomorphic(g, h)));
            }
        }
    }

    #[test]
    fn random_graph_is_deterministic() {
        let params = RandomGraphParams { vertices: 9, model: RandomModel::EdgeCount(12) };
        let a = random_graph(42, &params).unwrap();
        let b = random_graph(42, &params).unwrap();
        assert_eq!(a, b);
        let c = random_graph(43, &params).unwrap();
        assert!(a != c || is_isomorphic(&a, &c));
    }

    #[test]
    fn random_graph_models() {
        let zero = random_graph(
            7,
            &RandomGraphParams { vertices: 5, model: RandomModel::EdgeProbability(0.0) },
        )
        .unwrap();
        assert_eq!(zero.edge_count(), 0);

        let reg = random_graph(
            11,
            &RandomGraphParams { vertices: 8, model: RandomModel::DegreeSequence(vec![3; 8]) },
        )
        .unwrap();
        assert!(reg.vertex_ids().all(|v| reg.degree(v).unwrap() == 3));

        let odd = random_graph(
            11,
            &RandomGraphParams { vertices: 3, model: RandomModel::DegreeSequence(vec![1, 1, 1]) },
        );
        assert_eq!(odd.unwrap_err(), AtlasError::InfeasibleDegreeSequence);
    }
}
