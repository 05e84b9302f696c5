//! Block-cutvertex decomposition, chain recognition, and the structural
//! patterns that obstruct five- and six-point arc connectivity.

use crate::graph::{EdgeId, MultiGraph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    Disconnected,
    PreconditionViolated(String),
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::Disconnected => write!(f, "graph is not connected"),
            DecomposeError::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl std::error::Error for DecomposeError {}

/// An inclusion-maximal 2-connected subgraph. A bridge, a loop, and a
/// parallel pair each form a block of their own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl Block {
    pub fn is_bridge(&self, g: &MultiGraph) -> bool {
        self.edges.len() == 1 && !g.is_loop(self.edges[0])
    }

    pub fn is_loop(&self, g: &MultiGraph) -> bool {
        self.edges.len() == 1 && g.is_loop(self.edges[0])
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Vertices lying in two or more blocks, sorted.
    pub cutvertices: Vec<VertexId>,
}

impl BlockDecomposition {
    /// Degree of a cut-vertex in the bipartite block graph.
    pub fn cutvertex_degree(&self, v: VertexId) -> usize {
        self.blocks.iter().filter(|b| b.vertices.contains(&v)).count()
    }

    /// Degree of a block node in the block graph.
    pub fn block_degree(&self, i: usize) -> usize {
        self.blocks[i]
            .vertices
            .iter()
            .filter(|v| self.cutvertices.contains(v))
            .count()
    }

    /// The block graph is connected and acyclic for every connected input;
    /// exposed so tests can verify it directly.
    pub fn block_graph_is_tree(&self) -> bool {
        let b = self.blocks.len();
        let c = self.cutvertices.len();
        if b == 0 {
            return c == 0;
        }
        let mut edges = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            for (j, &cv) in self.cutvertices.iter().enumerate() {
                if block.vertices.contains(&cv) {
                    edges.push((i, b + j));
                }
            }
        }
        // connected + |E| = |V| - 1
        if edges.len() != b + c - 1 {
            return false;
        }
        let mut adj = vec![Vec::new(); b + c];
        for &(x, y) in &edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut seen = vec![false; b + c];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == b + c
    }
}

/// Computes the blocks of a connected multigraph via a depth-first search
/// with an edge stack. Parallel edges are genuine cycles (the second copy is
/// a back edge), and every loop is split off as its own single-edge block.
pub fn blocks(g: &MultiGraph) -> Result<BlockDecomposition, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let mut block_edges: Vec<Vec<EdgeId>> = Vec::new();
    for (e, u, v) in g.edges() {
        if u == v {
            block_edges.push(vec![e]);
        }
    }

    let inc = g.incidence();
    let vertices: Vec<VertexId> = g.vertex_ids().collect();
    if let Some(&root) = vertices.first() {
        let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut timer = 0usize;
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut used_edge: BTreeSet<EdgeId> = BTreeSet::new();

        // iterative DFS frame: (vertex, incoming edge, next incidence index)
        let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc.insert(root, timer);
        low.insert(root, timer);
        timer += 1;

        while let Some(&mut (v, via, ref mut idx)) = frames.last_mut() {
            let ends = &inc[&v];
            if *idx < ends.len() {
                let (e, w) = ends[*idx];
                *idx += 1;
                if v == w || Some(e) == via {
                    continue;
                }
                if used_edge.contains(&e) {
                    continue;
                }
                if let Some(&dw) = disc.get(&w) {
                    // back edge
                    used_edge.insert(e);
                    edge_stack.push(e);
                    if dw < low[&v] {
                        low.insert(v, dw);
                    }
                } else {
                    used_edge.insert(e);
                    edge_stack.push(e);
                    disc.insert(w, timer);
                    low.insert(w, timer);
                    timer += 1;
                    frames.push((w, Some(e), 0));
                }
            } else {
                frames.pop();
                if let Some(&mut (p, _, _)) = frames.last_mut() {
                    let lv = low[&v];
                    if lv < low[&p] {
                        low.insert(p, lv);
                    }
                    if lv >= disc[&p] {
                        // everything above the tree edge p-v is one block
                        let mut es = Vec::new();
                        while let Some(&top) = edge_stack.last() {
                            let (a, b) = g.endpoints(top).unwrap();
                            let d_top = disc[&a].max(disc[&b]);
                            if d_top >= disc[&v] {
                                es.push(edge_stack.pop().unwrap());
                            } else {
                                break;
                            }
                        }
                        // the tree edge itself
                        if let Some(&top) = edge_stack.last() {
                            let (a, b) = g.endpoints(top).unwrap();
                            if (a == p && b == v) || (a == v && b == p) {
                                es.push(edge_stack.pop().unwrap());
                            }
                        }
                        if !es.is_empty() {
                            block_edges.push(es);
                        }
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty());
    }

    let mut blocks: Vec<Block> = block_edges
        .into_iter()
        .map(|mut es| {
            es.sort();
            let mut vs = BTreeSet::new();
            for &e in &es {
                let (u, v) = g.endpoints(e).unwrap();
                vs.insert(u);
                vs.insert(v);
            }
            Block { edges: es, vertices: vs.into_iter().collect() }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);

    let mut membership: BTreeMap<VertexId, usize> = BTreeMap::new();
    for b in &blocks {
        for &v in &b.vertices {
            *membership.entry(v).or_insert(0) += 1;
        }
    }
    let cutvertices: Vec<VertexId> = membership
        .into_iter()
        .filter(|&(_, k)| k >= 2)
        .map(|(v, _)| v)
        .collect();

    Ok(BlockDecomposition { blocks, cutvertices })
}

/// A linear arrangement of the blocks: only consecutive links meet, in a
/// single linking vertex.
#[derive(Clone, Debug)]
pub struct ChainDecomposition {
    pub links: Vec<Block>,
    pub linking_vertices: Vec<VertexId>,
}

/// Present iff the block graph is a path, i.e. no block contains three
/// cut-vertices and no cut-vertex lies in three blocks. Links come back in
/// path order.
pub fn chain_decomposition(g: &MultiGraph) -> Result<Option<ChainDecomposition>, DecomposeError> {
    let dec = blocks(g)?;
    if dec.blocks.is_empty() {
        // a single vertex: a chain with no links
        return Ok(Some(ChainDecomposition { links: Vec::new(), linking_vertices: Vec::new() }));
    }
    for &cv in &dec.cutvertices {
        if dec.cutvertex_degree(cv) > 2 {
            return Ok(None);
        }
    }
    for i in 0..dec.blocks.len() {
        if dec.block_degree(i) > 2 {
            return Ok(None);
        }
    }
    // walk the path from a deterministic end block
    let mut ends: Vec<usize> = (0..dec.blocks.len())
        .filter(|&i| dec.block_degree(i) <= 1)
        .collect();
    ends.sort_by_key(|&i| dec.blocks[i].edges[0]);
    let start = ends.first().copied().unwrap_or(0);

    let mut links = Vec::new();
    let mut linking = Vec::new();
    let mut current = start;
    let mut via: Option<VertexId> = None;
    loop {
        links.push(dec.blocks[current].clone());
        let next_cv = dec.blocks[current]
            .vertices
            .iter()
            .copied()
            .find(|v| dec.cutvertices.contains(v) && Some(*v) != via);
        let Some(cv) = next_cv else { break };
        let next_block = (0..dec.blocks.len()).find(|&j| {
            j != current && dec.blocks[j].vertices.contains(&cv)
        });
        let Some(j) = next_block else { break };
        linking.push(cv);
        via = Some(cv);
        current = j;
        if links.len() > dec.blocks.len() {
            unreachable!("chain walk exceeded block count");
        }
    }
    if links.len() != dec.blocks.len() {
        return Ok(None);
    }
    Ok(Some(ChainDecomposition { links, linking_vertices: linking }))
}

/// The pieces of `g` at an anchor set: connected components of the graph
/// minus the anchors, plus every edge whose endpoints both lie in the anchor
/// set (each such edge, loops included, is a piece of its own).
pub struct Piece {
    /// Anchors this piece attaches to.
    pub attachment: BTreeSet<VertexId>,
    /// Component vertices; empty for a direct anchor-anchor edge.
    pub vertices: Vec<VertexId>,
    /// The direct edge, when the piece is one.
    pub direct_edge: Option<EdgeId>,
}

pub fn pieces_at(g: &MultiGraph, anchors: &BTreeSet<VertexId>) -> Vec<Piece> {
    let rest = g.without_vertices(anchors);
    let mut pieces = Vec::new();
    for comp in rest.components() {
        let in_comp: BTreeSet<VertexId> = comp.iter().copied().collect();
        let mut attachment = BTreeSet::new();
        for (_, u, v) in g.edges() {
            if anchors.contains(&u) && in_comp.contains(&v) {
                attachment.insert(u);
            }
            if anchors.contains(&v) && in_comp.contains(&u) {
                attachment.insert(v);
            }
        }
        pieces.push(Piece { attachment, vertices: comp, direct_edge: None });
    }
    for (e, u, v) in g.edges() {
        if anchors.contains(&u) && anchors.contains(&v) {
            pieces.push(Piece {
                attachment: BTreeSet::from([u, v]),
                vertices: Vec::new(),
                direct_edge: Some(e),
            });
        }
    }
    pieces
}

/// Witness that the graph is a ring of three links whose shared vertex has
/// two edge-ends in each of its two links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLinkCycleWitness {
    pub apex: VertexId,
    pub coanchors: (VertexId, VertexId),
}

/// Scans all vertex triples with a degree-4 apex. A triple qualifies when
/// every piece at the triple attaches to exactly one of the three anchor
/// pairs, all three pair-buckets are inhabited, and the apex's four edge-ends
/// split two and two between its buckets.
pub fn detect_condition3(g: &MultiGraph) -> Option<ThreeLinkCycleWitness> {
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    let deg: BTreeMap<VertexId, usize> =
        vs.iter().map(|&v| (v, g.degree(v).unwrap())).collect();
    for &v in &vs {
        if deg[&v] != 4 {
            continue;
        }
        for (i, &u) in vs.iter().enumerate() {
            if u == v {
                continue;
            }
            for &w in &vs[i + 1..] {
                if w == v || w == u {
                    continue;
                }
                if let Some(witness) = check_triple(g, v, u, w) {
                    return Some(witness);
                }
            }
        }
    }
    None
}

fn check_triple(g: &MultiGraph, v: VertexId, u: VertexId, w: VertexId) -> Option<ThreeLinkCycleWitness> {
    let anchors = BTreeSet::from([v, u, w]);
    let pieces = pieces_at(g, &anchors);
    let pair_vu = BTreeSet::from([v, u]);
    let pair_vw = BTreeSet::from([v, w]);
    let pair_uw = BTreeSet::from([u, w]);
    let mut bucket_counts = [0usize; 3];
    let mut membership: Vec<usize> = Vec::with_capacity(pieces.len());
    for p in &pieces {
        let b = if p.attachment == pair_vu {
            0
        } else if p.attachment == pair_vw {
            1
        } else if p.attachment == pair_uw {
            2
        } else {
            return None;
        };
        bucket_counts[b] += 1;
        membership.push(b);
    }
    if bucket_counts.contains(&0) {
        return None;
    }
    // count the apex's edge-ends per bucket
    let mut ends = [0usize; 3];
    for (e, a, b) in g.edges() {
        let other = if a == v && b != v {
            b
        } else if b == v && a != v {
            a
        } else {
            continue;
        };
        let bucket = if other == u {
            // direct v-u edge
            Some(0)
        } else if other == w {
            Some(1)
        } else {
            pieces
                .iter()
                .zip(&membership)
                .find(|(p, _)| p.vertices.contains(&other))
                .map(|(_, &b)| b)
        };
        match bucket {
            Some(b) if b < 2 => ends[b] += 1,
            // an apex edge-end reaching the far bucket contradicts the
            // attachment analysis
            _ => return None,
        }
        let _ = e;
    }
    if ends[0] == 2 && ends[1] == 2 {
        Some(ThreeLinkCycleWitness { apex: v, coanchors: (u, w) })
    } else {
        None
    }
}

/// Witness that some degree-4 vertex forms, with a second anchor, at least
/// three pieces: the two-anchor split pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoAnchorSplitWitness {
    pub apex: VertexId,
    pub anchor: VertexId,
    pub piece_count: usize,
}

pub fn detect_condition4(g: &MultiGraph) -> Option<TwoAnchorSplitWitness> {
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    for &v in &vs {
        if g.degree(v).unwrap() != 4 {
            continue;
        }
        for &a in &vs {
            if a == v {
                continue;
            }
            let rest = g.without_vertices(&BTreeSet::from([v, a]));
            let comps = rest.components().len();
            let direct = g
                .edges()
                .filter(|&(_, x, y)| (x, y) == (v.min(a), v.max(a)))
                .count();
            let pieces = comps + direct;
            if pieces >= 3 {
                return Some(TwoAnchorSplitWitness { apex: v, anchor: a, piece_count: pieces });
            }
        }
    }
    None
}

/// A partition of the vertices into four nonempty connected parts with
/// exactly one edge between every pair of parts.
pub type InflationPartition = [Vec<VertexId>; 4];

/// Searches for an inflated-K4 partition of a simple 3-regular 3-connected
/// graph. Recursive part assignment in vertex order with cross-edge pruning;
/// part connectivity is checked on completion.
pub fn inflated_k4(g: &MultiGraph) -> Result<Option<InflationPartition>, DecomposeError> {
    if !g.is_simple() {
        return Err(DecomposeError::PreconditionViolated("graph must be simple".into()));
    }
    if g.vertex_ids().any(|v| g.degree(v).unwrap() != 3) {
        return Err(DecomposeError::PreconditionViolated("graph must be 3-regular".into()));
    }
    if !crate::menger::is_k_connected(g, 3) {
        return Err(DecomposeError::PreconditionViolated("graph must be 3-connected".into()));
    }
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    let n = vs.len();
    let index: BTreeMap<VertexId, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); n];
    for (_, u, v) in g.edges() {
        adj[index[&u]].push(index[&v]);
        adj[index[&v]].push(index[&u]);
    }
    let mut part = vec![usize::MAX; n];
    let mut cross = [[0u8; 4]; 4];
    let mut sizes = [0usize; 4];
    if assign(0, n, &adj, &mut part, &mut cross, &mut sizes) {
        let mut out: InflationPartition = Default::default();
        for (i, &p) in part.iter().enumerate() {
            out[p].push(vs[i]);
        }
        return Ok(Some(out));
    }
    Ok(None)
}

fn assign(
    v: usize,
    n: usize,
    adj: &[Vec<usize>],
    part: &mut [usize],
    cross: &mut [[u8; 4]; 4],
    sizes: &mut [usize; 4],
) -> bool {
    if v == n {
        if sizes.contains(&0) {
            return false;
        }
        for (i, row) in cross.iter().enumerate() {
            for (j, &count) in row.iter().enumerate() {
                if j > i && count != 1 {
                    return false;
                }
            }
        }
        return parts_connected(n, adj, part);
    }
    // not enough vertices left to populate the remaining empty parts
    let empty = sizes.iter().filter(|&&s| s == 0).count();
    if n - v < empty {
        return false;
    }
    let max_used = part[..v].iter().copied().filter(|&p| p != usize::MAX).max();
    let limit = match max_used {
        None => 0,
        Some(m) => (m + 1).min(3),
    };
    for p in 0..=limit {
        let mut ok = true;
        let mut touched = Vec::new();
        for &w in &adj[v] {
            if w < v {
                let q = part[w];
                if q != p {
                    let (a, b) = (p.min(q), p.max(q));
                    cross[a][b] += 1;
                    touched.push((a, b));
                    if cross[a][b] > 1 {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if ok {
            part[v] = p;
            sizes[p] += 1;
            if assign(v + 1, n, adj, part, cross, sizes) {
                return true;
            }
            sizes[p] -= 1;
            part[v] = usize::MAX;
        }
        for (a, b) in touched {
            cross[a][b] -= 1;
        }
    }
    false
}

fn parts_connected(n: usize, adj: &[Vec<usize>], part: &[usize]) -> bool {
    for p in 0..4 {
        let members: Vec<usize> = (0..n).filter(|&v| part[v] == p).collect();
        if members.is_empty() {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if part[y] == p && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != members.len() {
            return false;
        }
    }
    true
}

/// Exhaustive scan: is there a set of `remove` edges whose deletion leaves at
/// least `min_components` components? Retained as the slow cross-check for
/// the partition search.
pub fn edge_removal_scan(
    g: &MultiGraph,
    remove: usize,
    min_components: usize,
) -> Option<Vec<EdgeId>> {
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    let mut subset = Vec::new();
    scan_subsets(g, &edges, 0, remove, min_components, &mut subset)
}

fn scan_subsets(
    g: &MultiGraph,
    edges: &[EdgeId],
    from: usize,
    remaining: usize,
    min_components: usize,
    subset: &mut Vec<EdgeId>,
) -> Option<Vec<EdgeId>> {
    if remaining == 0 {
        let mut h = g.clone();
        for &e in subset.iter() {
            h.remove_edge(e);
        }
        if h.components().len() >= min_components {
            return Some(subset.clone());
        }
        return None;
    }
    for i in from..edges.len() {
        if edges.len() - i < remaining {
            break;
        }
        subset.push(edges[i]);
        let hit = scan_subsets(g, edges, i + 1, remaining - 1, min_components, subset);
        subset.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}
