//! Multigraph isomorphism for small graphs: backtracking with
//! degree-refinement pruning, plus a canonical edge-list encoding used to
//! deduplicate enumeration output.

use crate::graph::{MultiGraph, VertexId};
use std::collections::BTreeMap;

/// Dense view of a multigraph: vertices renumbered `0..n`, adjacency stored
/// as multiplicity counts. Loops are counted separately (a loop adds 2 to
/// the degree but is not a neighbor entry).
struct Dense {
    n: usize,
    mult: Vec<Vec<u32>>,
    loops: Vec<u32>,
}

impl Dense {
    fn build(g: &MultiGraph) -> Dense {
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let mut mult = vec![vec![0u32; n]; n];
        let mut loops = vec![0u32; n];
        for (_, u, v) in g.edges() {
            let (i, j) = (index[&u], index[&v]);
            if i == j {
                loops[i] += 1;
            } else {
                mult[i][j] += 1;
                mult[j][i] += 1;
            }
        }
        Dense { n, mult, loops }
    }

    fn degree(&self, v: usize) -> u32 {
        self.mult[v].iter().sum::<u32>() + 2 * self.loops[v]
    }
}

type Signature = (u64, Vec<(u64, u32)>);

/// Iterated neighborhood refinement. Returns a stable coloring where equal
/// colors are a necessary condition for two vertices to correspond under an
/// isomorphism. Colors are comparable across graphs because classes are
/// keyed by structural signatures, not by discovery order.
fn refine(d: &Dense) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..d.n)
        .map(|v| ((d.degree(v) as u64) << 16) | d.loops[v] as u64)
        .collect();
    for _ in 0..d.n {
        let mut sigs: Vec<Signature> = Vec::with_capacity(d.n);
        for v in 0..d.n {
            let mut nb: Vec<(u64, u32)> = (0..d.n)
                .filter(|&w| d.mult[v][w] > 0)
                .map(|w| (colors[w], d.mult[v][w]))
                .collect();
            nb.sort();
            sigs.push((colors[v], nb));
        }
        // color ids follow the sorted order of signatures, so equal
        // structures get equal ids in different graphs
        let ordered: std::collections::BTreeSet<&Signature> = sigs.iter().collect();
        let palette: BTreeMap<&Signature, u64> = ordered
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i as u64))
            .collect();
        let new_colors: Vec<u64> = sigs.iter().map(|s| palette[s]).collect();
        if new_colors == colors {
            break;
        }
        colors = new_colors;
    }
    colors
}

fn color_histogram(colors: &[u64]) -> Vec<(u64, usize)> {
    let mut hist: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in colors {
        *hist.entry(c).or_insert(0) += 1;
    }
    hist.into_iter().collect()
}

/// True iff the two multigraphs are isomorphic, respecting loops and
/// edge multiplicities. Intended for small graphs.
pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.loop_count() != h.loop_count()
        || g.degree_signature() != h.degree_signature()
    {
        return false;
    }
    let dg = Dense::build(g);
    let dh = Dense::build(h);
    if dg.n == 0 {
        return true;
    }
    let cg = refine(&dg);
    let ch = refine(&dh);
    if color_histogram(&cg) != color_histogram(&ch) {
        return false;
    }

    // match vertices in order of ascending class size, rarest classes first
    let hist = color_histogram(&cg);
    let class_size: BTreeMap<u64, usize> = hist.into_iter().collect();
    let mut order: Vec<usize> = (0..dg.n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));

    let mut matcher = Matcher {
        dg: &dg,
        dh: &dh,
        cg: &cg,
        ch: &ch,
        order: &order,
        mapping: vec![usize::MAX; dg.n],
        used: vec![false; dh.n],
    };
    matcher.descend(0)
}

struct Matcher<'a> {
    dg: &'a Dense,
    dh: &'a Dense,
    cg: &'a [u64],
    ch: &'a [u64],
    order: &'a [usize],
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        'cand: for w in 0..self.dh.n {
            if self.used[w] || self.ch[w] != self.cg[v] || self.dh.loops[w] != self.dg.loops[v] {
                continue;
            }
            for &p in &self.order[..depth] {
                if self.dg.mult[v][p] != self.dh.mult[w][self.mapping[p]] {
                    continue 'cand;
                }
            }
            self.mapping[v] = w;
            self.used[w] = true;
            if self.descend(depth + 1) {
                return true;
            }
            self.mapping[v] = usize::MAX;
            self.used[w] = false;
        }
        false
    }
}

/// Canonical encoding: the lexicographically smallest row-major adjacency
/// code over all relabelings that list refinement classes in canonical
/// class order. The segment a vertex contributes when it receives label `k`
/// is `[loop count, multiplicity to label 0, ..., multiplicity to label
/// k-1]`, so the code grows append-only and prefix pruning is sound.
/// Two multigraphs have equal encodings iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub code: Vec<u32>,
}

pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    let d = Dense::build(g);
    if d.n == 0 {
        return CanonicalForm { vertices: 0, code: Vec::new() };
    }
    let colors = refine(&d);

    // canonical class order: classes sorted by (size, color id); color ids
    // are structural, so this order is isomorphism-invariant
    let hist = color_histogram(&colors);
    let class_size: BTreeMap<u64, usize> = hist.into_iter().collect();
    let mut class_rank: Vec<(usize, u64)> = class_size.iter().map(|(&c, &s)| (s, c)).collect();
    class_rank.sort();
    let rank_of: BTreeMap<u64, usize> =
        class_rank.iter().enumerate().map(|(i, &(_, c))| (c, i)).collect();

    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); class_rank.len()];
    for v in 0..d.n {
        slots[rank_of[&colors[v]]].push(v);
    }
    let class_of_slot: Vec<usize> = slots
        .iter()
        .enumerate()
        .flat_map(|(i, s)| std::iter::repeat_n(i, s.len()))
        .collect();

    let mut search = CanonSearch {
        d: &d,
        colors: &colors,
        rank_of,
        class_of_slot,
        label_to_vertex: Vec::new(),
        taken: vec![false; d.n],
        prefix: Vec::new(),
        best: None,
    };
    search.rec(0);
    CanonicalForm { vertices: d.n, code: search.best.unwrap_or_default() }
}

struct CanonSearch<'a> {
    d: &'a Dense,
    colors: &'a [u64],
    rank_of: BTreeMap<u64, usize>,
    class_of_slot: Vec<usize>,
    label_to_vertex: Vec<usize>,
    taken: Vec<bool>,
    prefix: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl<'a> CanonSearch<'a> {
    fn rec(&mut self, depth: usize) {
        if depth == self.d.n {
            if self.best.as_ref().map(|b| self.prefix < *b).unwrap_or(true) {
                self.best = Some(self.prefix.clone());
            }
            return;
        }
        let class = self.class_of_slot[depth];
        for v in 0..self.d.n {
            if self.taken[v] || self.rank_of[&self.colors[v]] != class {
                continue;
            }
            let mut seg: Vec<u32> = Vec::with_capacity(depth + 1);
            seg.push(self.d.loops[v]);
            for &w in &self.label_to_vertex {
                seg.push(self.d.mult[v][w]);
            }
            // prune only while the prefix still matches the best code:
            // from there a greater segment can never reach a smaller leaf
            if let Some(best) = &self.best {
                let at = self.prefix.len();
                if self.prefix.as_slice() == &best[..at]
                    && seg.as_slice() > &best[at..at + seg.len()]
                {
                    continue;
                }
            }
            self.taken[v] = true;
            self.label_to_vertex.push(v);
            let keep = self.prefix.len();
            self.prefix.extend_from_slice(&seg);
            self.rec(depth + 1);
            self.prefix.truncate(keep);
            self.label_to_vertex.pop();
            self.taken[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::graph::MultiGraph;

    #[test]
    fn k4_relabeled_is_isomorphic() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let h = MultiGraph::from_edges(4, &[(2, 3), (1, 3), (0, 3), (1, 2), (0, 2), (0, 1)]);
        assert!(is_isomorphic(&g, &h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn cycle_vs_disjoint_triangles() {
        let c6 = atlas::cycle(6);
        let two_triangles =
            MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&c6, &two_triangles));
        assert_ne!(canonical_form(&c6), canonical_form(&two_triangles));
    }

    #[test]
    fn multiplicity_is_respected() {
        let double = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]);
        let p3 = atlas::path(2);
        assert!(!is_isomorphic(&double, &p3));
    }

    #[test]
    fn loop_vs_edge() {
        let mut lp = MultiGraph::new();
        let v = lp.add_vertex();
        lp.add_edge(v, v);
        let edge = atlas::path(1);
        assert!(!is_isomorphic(&lp, &edge));
    }

    #[test]
    fn cube_vs_wagner() {
        let cube = atlas::named("cube").unwrap();
        let wagner = atlas::named("wagner").unwrap();
        assert!(!is_isomorphic(&cube, &wagner));
        assert!(is_isomorphic(&cube, &cube));
        assert_ne!(canonical_form(&cube), canonical_form(&wagner));
    }

    #[test]
    fn canonical_matches_isomorphism_on_shuffles() {
        let graphs = [
            atlas::named("happy_face").unwrap(),
            atlas::named("baguette").unwrap(),
            atlas::named("k33").unwrap(),
        ];
        for g in &graphs {
            // relabel by reversing vertex insertion order
            let ids: Vec<_> = g.vertex_ids().collect();
            let mut h = MultiGraph::new();
            let fresh: Vec<_> = ids.iter().map(|_| h.add_vertex()).collect();
            let pos: std::collections::BTreeMap<_, _> =
                ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            for (_, u, v) in g.edges() {
                h.add_edge(fresh[ids.len() - 1 - pos[&u]], fresh[ids.len() - 1 - pos[&v]]);
            }
            assert!(is_isomorphic(g, &h));
            assert_eq!(canonical_form(g), canonical_form(&h));
        }
    }
}
