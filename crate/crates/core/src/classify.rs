//! The decision procedures: for each `n` (or ω), is every set of at most
//! `n` points of the 1-complex covered by an arc, and is every set covered
//! by a circle. Each verdict names the deciding clause and carries a
//! certificate that an independent checker can confirm.

use crate::decompose::{
    blocks, chain_decomposition, detect_condition3, detect_condition4, inflated_k4, pieces_at,
    ChainDecomposition,
};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::menger::{is_cyclically_connected, max_disjoint_paths};
use crate::shape::{recognize_shape, Shape, OMEGA_SHAPES};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    /// A one-point space contains no arc; edgeless graphs are rejected.
    Edgeless,
    /// A decider contradicted monotonicity; this is an internal bug.
    Inconsistent(String),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Edgeless => write!(f, "graph has no edges"),
            ClassifyError::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for ClassifyError {}

/// Number of points in a query: a positive integer or ω (all of them).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NValue {
    Finite(u32),
    Omega,
}

impl fmt::Display for NValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NValue::Finite(n) => write!(f, "{n}"),
            NValue::Omega => write!(f, "omega"),
        }
    }
}

impl NValue {
    pub fn parse(text: &str) -> Option<NValue> {
        match text {
            "omega" | "w" | "ω" => Some(NValue::Omega),
            _ => text.parse::<u32>().ok().filter(|&n| n >= 1).map(NValue::Finite),
        }
    }
}

/// The clause of the characterization that settled a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    EdgePresent,
    Connected,
    Disconnected,
    BlockChain,
    BlockGraphBranches,
    PairCutsBounded,
    PairCutTooDeep,
    ChainFourAc,
    NotAChain,
    InteriorLinkNotAnArc,
    LinkDegreeAtCut,
    LinkNotFourAc,
    FiveAcShape,
    FiveAcShapeMismatch,
    DegreeTooHigh,
    TripleCutTooDeep,
    ThreeLinkCycleFound,
    TwoAnchorSplitFound,
    FiveAcCyclicCriteria,
    OmegaShape,
    NotOmegaShape,
    SixAcCubicCriteria,
    SuppressedNotSimple,
    SuppressedNotCubic,
    SuppressedNotThreeConnected,
    InflatedKFourFound,
    CyclicallyConnected,
    NotCyclicallyConnected,
    CycleShape,
    NotCycleShape,
    EveryEdgeOnCircle,
    BridgeBlocksCircle,
}

impl Clause {
    pub fn name(&self) -> &'static str {
        match self {
            Clause::EdgePresent => "edge-present",
            Clause::Connected => "connected",
            Clause::Disconnected => "disconnected",
            Clause::BlockChain => "block-chain",
            Clause::BlockGraphBranches => "block-branch",
            Clause::PairCutsBounded => "pair-cuts-bounded",
            Clause::PairCutTooDeep => "pair-cut",
            Clause::ChainFourAc => "chain-4ac",
            Clause::NotAChain => "not-chain",
            Clause::InteriorLinkNotAnArc => "interior-link",
            Clause::LinkDegreeAtCut => "link-degree",
            Clause::LinkNotFourAc => "link-not-4ac",
            Clause::FiveAcShape => "5ac-shape",
            Clause::FiveAcShapeMismatch => "5ac-shape-mismatch",
            Clause::DegreeTooHigh => "5ac-condition-1",
            Clause::TripleCutTooDeep => "5ac-condition-2",
            Clause::ThreeLinkCycleFound => "5ac-condition-3",
            Clause::TwoAnchorSplitFound => "5ac-condition-4",
            Clause::FiveAcCyclicCriteria => "5ac-criteria",
            Clause::OmegaShape => "omega-shape",
            Clause::NotOmegaShape => "not-omega-shape",
            Clause::SixAcCubicCriteria => "6ac-cubic",
            Clause::SuppressedNotSimple => "not-simple",
            Clause::SuppressedNotCubic => "not-cubic",
            Clause::SuppressedNotThreeConnected => "not-3-connected",
            Clause::InflatedKFourFound => "inflated-k4",
            Clause::CyclicallyConnected => "cyclically-connected",
            Clause::NotCyclicallyConnected => "not-cyclically-connected",
            Clause::CycleShape => "cycle-shape",
            Clause::NotCycleShape => "not-cycle-shape",
            Clause::EveryEdgeOnCircle => "bridgeless",
            Clause::BridgeBlocksCircle => "bridge",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Clause::EdgePresent => "any point lies on an arc inside an edge",
            Clause::Connected => "the space is connected",
            Clause::Disconnected => "the space is disconnected",
            Clause::BlockChain => "the blocks form a chain",
            Clause::BlockGraphBranches => "the block graph branches",
            Clause::PairCutsBounded => "no two points cut the space into four or more parts",
            Clause::PairCutTooDeep => "condition (2): two points cut the space into four or more parts",
            Clause::ChainFourAc => "chain with arc interior links and tame linking degrees",
            Clause::NotAChain => "the block graph branches",
            Clause::InteriorLinkNotAnArc => "an interior link is not an arc",
            Clause::LinkDegreeAtCut => "a linking vertex has three or more edge-ends in one link",
            Clause::LinkNotFourAc => "a link fails the two-point cut bound",
            Clause::FiveAcShape => "the space is an arc, lollipop, dumbbell, or figure-eight",
            Clause::FiveAcShapeMismatch => {
                "not cyclically connected and not an arc, lollipop, dumbbell, or figure-eight"
            }
            Clause::DegreeTooHigh => "condition (1): a vertex has degree five or more",
            Clause::TripleCutTooDeep => {
                "condition (2): three points cut the space into five or more parts"
            }
            Clause::ThreeLinkCycleFound => {
                "condition (3): a ring of three links with a two-by-two linking vertex"
            }
            Clause::TwoAnchorSplitFound => {
                "condition (4): two anchors carve out three or more pieces"
            }
            Clause::FiveAcCyclicCriteria => "all four five-point conditions hold",
            Clause::OmegaShape => "one of the six shapes connectable through any point count",
            Clause::NotOmegaShape => "not one of the six unboundedly connectable shapes",
            Clause::SixAcCubicCriteria => {
                "suppressed form is cubic, 3-connected, and not an inflated K4"
            }
            Clause::SuppressedNotSimple => "suppressed form keeps a loop or parallel edge",
            Clause::SuppressedNotCubic => "suppressed form is not 3-regular",
            Clause::SuppressedNotThreeConnected => "suppressed form is not 3-connected",
            Clause::InflatedKFourFound => "suppressed form is an inflated K4",
            Clause::CyclicallyConnected => "every two points lie on a common circle",
            Clause::NotCyclicallyConnected => "two points lie on no common circle",
            Clause::CycleShape => "the space is a circle",
            Clause::NotCycleShape => "the space is not a circle",
            Clause::EveryEdgeOnCircle => "every point lies on a circle",
            Clause::BridgeBlocksCircle => "a bridge point lies on no circle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    None,
    Shape(Shape),
    ComponentCount(usize),
    BranchCutVertex(VertexId),
    BranchBlock(Vec<EdgeId>),
    CutSet { vertices: Vec<VertexId>, pieces: usize },
    HighDegreeVertex { vertex: VertexId, degree: usize },
    ThreeLinkCycle { apex: VertexId, coanchors: (VertexId, VertexId) },
    TwoAnchorSplit { apex: VertexId, anchor: VertexId, pieces: usize },
    /// Partition of the suppressed graph's vertices.
    InflatedKFour(Vec<Vec<VertexId>>),
    InteriorLink { link_index: usize, edges: Vec<EdgeId> },
    LinkDegree { vertex: VertexId, link_index: usize, degree: usize },
    LinkCut { link_index: usize, vertices: Vec<VertexId>, pieces: usize },
    /// A loop or duplicated edge of the suppressed graph.
    NotSimpleEdge(EdgeId),
    /// A wrongly-degreed vertex of the suppressed graph.
    WrongDegree { vertex: VertexId, degree: usize },
    /// A separating set of the suppressed graph with fewer than 3 vertices.
    SmallSeparator(Vec<VertexId>),
    Bridge(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub clause: Clause,
    pub certificate: Certificate,
}

impl Verdict {
    fn yes(clause: Clause, certificate: Certificate) -> Verdict {
        Verdict { answer: true, clause, certificate }
    }

    fn no(clause: Clause, certificate: Certificate) -> Verdict {
        Verdict { answer: false, clause, certificate }
    }
}

/// First vertex subset of size `1..=max_size` (in size-then-lex order) whose
/// removal leaves at least `threshold` pieces of the 1-complex.
fn small_cut_violation(
    g: &MultiGraph,
    max_size: usize,
    threshold: usize,
) -> Option<(Vec<VertexId>, usize)> {
    let vs: Vec<VertexId> = g.vertex_ids().collect();
    for size in 1..=max_size.min(vs.len()) {
        let mut subset = Vec::new();
        if let Some(found) = cut_search(g, &vs, 0, size, threshold, &mut subset) {
            return Some(found);
        }
    }
    None
}

fn cut_search(
    g: &MultiGraph,
    vs: &[VertexId],
    from: usize,
    remaining: usize,
    threshold: usize,
    subset: &mut Vec<VertexId>,
) -> Option<(Vec<VertexId>, usize)> {
    if remaining == 0 {
        let s: BTreeSet<VertexId> = subset.iter().copied().collect();
        let pieces = g.puncture_count(&s);
        if pieces >= threshold {
            return Some((subset.clone(), pieces));
        }
        return None;
    }
    for i in from..vs.len() {
        if vs.len() - i < remaining {
            break;
        }
        subset.push(vs[i]);
        let hit = cut_search(g, vs, i + 1, remaining - 1, threshold, subset);
        subset.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Witness for a branching block graph: a cut-vertex in three blocks, or a
/// block holding three cut-vertices.
fn branch_witness(g: &MultiGraph) -> Certificate {
    let dec = blocks(g).expect("caller guarantees connectivity");
    for &cv in &dec.cutvertices {
        if dec.cutvertex_degree(cv) >= 3 {
            return Certificate::BranchCutVertex(cv);
        }
    }
    for (i, b) in dec.blocks.iter().enumerate() {
        if dec.block_degree(i) >= 3 {
            return Certificate::BranchBlock(b.edges.clone());
        }
    }
    Certificate::None
}

fn link_end_count(g: &MultiGraph, edges: &[EdgeId], v: VertexId) -> usize {
    let mut d = 0;
    for &e in edges {
        let (a, b) = g.endpoints(e).unwrap();
        if a == v {
            d += 1;
        }
        if b == v {
            d += 1;
        }
    }
    d
}

/// Four-point decider for connected graphs with at least one edge.
pub fn is_4ac(g: &MultiGraph) -> Verdict {
    if is_cyclically_connected(g) {
        if let Some((vertices, pieces)) = small_cut_violation(g, 2, 4) {
            return Verdict::no(Clause::PairCutTooDeep, Certificate::CutSet { vertices, pieces });
        }
        return Verdict::yes(Clause::PairCutsBounded, Certificate::None);
    }
    let Some(chain) = chain_decomposition(g).expect("caller guarantees connectivity") else {
        return Verdict::no(Clause::NotAChain, branch_witness(g));
    };
    // links are blocks, hence 2-connected; each must also pass the
    // cyclic four-point test (single edges and loops pass outright)
    for (i, link) in chain.links.iter().enumerate() {
        if link.edges.len() == 1 {
            continue;
        }
        let sub = g.edge_subgraph(&link.edges);
        if let Some((vertices, pieces)) = small_cut_violation(&sub, 2, 4) {
            return Verdict::no(
                Clause::LinkNotFourAc,
                Certificate::LinkCut { link_index: i, vertices, pieces },
            );
        }
    }
    // interior links must be arcs
    for i in 1..chain.links.len().saturating_sub(1) {
        if !chain.links[i].is_bridge(g) {
            return Verdict::no(
                Clause::InteriorLinkNotAnArc,
                Certificate::InteriorLink { link_index: i, edges: chain.links[i].edges.clone() },
            );
        }
    }
    // every linking vertex uses at most two edge-ends per link
    for &v in &chain.linking_vertices {
        for (i, link) in chain.links.iter().enumerate() {
            if !link.vertices.contains(&v) {
                continue;
            }
            let d = link_end_count(g, &link.edges, v);
            if d > 2 {
                return Verdict::no(
                    Clause::LinkDegreeAtCut,
                    Certificate::LinkDegree { vertex: v, link_index: i, degree: d },
                );
            }
        }
    }
    Verdict::yes(Clause::ChainFourAc, Certificate::None)
}

const FIVE_AC_SHAPES: [Shape; 4] = [Shape::Arc, Shape::Lollipop, Shape::Dumbbell, Shape::FigureEight];

/// Five-point decider for connected graphs with at least one edge.
pub fn is_5ac(g: &MultiGraph) -> Verdict {
    if !is_cyclically_connected(g) {
        let s = recognize_shape(g);
        return if FIVE_AC_SHAPES.contains(&s) {
            Verdict::yes(Clause::FiveAcShape, Certificate::Shape(s))
        } else {
            Verdict::no(Clause::FiveAcShapeMismatch, Certificate::Shape(s))
        };
    }
    // conditions are ordered; the pattern detectors assume (1) and (2)
    for v in g.vertex_ids() {
        let d = g.degree(v).unwrap();
        if d >= 5 {
            return Verdict::no(
                Clause::DegreeTooHigh,
                Certificate::HighDegreeVertex { vertex: v, degree: d },
            );
        }
    }
    if let Some((vertices, pieces)) = small_cut_violation(g, 3, 5) {
        return Verdict::no(Clause::TripleCutTooDeep, Certificate::CutSet { vertices, pieces });
    }
    if let Some(w) = detect_condition3(g) {
        return Verdict::no(
            Clause::ThreeLinkCycleFound,
            Certificate::ThreeLinkCycle { apex: w.apex, coanchors: w.coanchors },
        );
    }
    if let Some(w) = detect_condition4(g) {
        return Verdict::no(
            Clause::TwoAnchorSplitFound,
            Certificate::TwoAnchorSplit { apex: w.apex, anchor: w.anchor, pieces: w.piece_count },
        );
    }
    Verdict::yes(Clause::FiveAcCyclicCriteria, Certificate::None)
}

/// Finds a separating set with fewer than 3 vertices in a simple cubic
/// connected graph, if any.
fn three_connectivity_witness(h: &MultiGraph) -> Option<Vec<VertexId>> {
    let vs: Vec<VertexId> = h.vertex_ids().collect();
    let mut adjacent: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for (_, u, v) in h.edges() {
        adjacent.insert((u, v));
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if adjacent.contains(&(u, v)) {
                continue;
            }
            let (sys, sep) =
                max_disjoint_paths(h, &BTreeSet::from([u]), &BTreeSet::from([v]));
            if sys.len() < 3 {
                // nonadjacent endpoints, so the cut is vertices only
                debug_assert!(sep.edges.is_empty());
                return Some(sep.vertices);
            }
        }
    }
    None
}

/// Six-point decider for connected graphs with at least one edge.
pub fn is_6ac(g: &MultiGraph) -> Verdict {
    let s = recognize_shape(g);
    if OMEGA_SHAPES.contains(&s) {
        return Verdict::yes(Clause::OmegaShape, Certificate::Shape(s));
    }
    let (h, _) = g.suppress_degree2();
    // simplicity of the suppressed form
    let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for (e, u, v) in h.edges() {
        if u == v || !seen.insert((u, v)) {
            return Verdict::no(Clause::SuppressedNotSimple, Certificate::NotSimpleEdge(e));
        }
    }
    for v in h.vertex_ids() {
        let d = h.degree(v).unwrap();
        if d != 3 {
            return Verdict::no(
                Clause::SuppressedNotCubic,
                Certificate::WrongDegree { vertex: v, degree: d },
            );
        }
    }
    if let Some(sep) = three_connectivity_witness(&h) {
        return Verdict::no(Clause::SuppressedNotThreeConnected, Certificate::SmallSeparator(sep));
    }
    match inflated_k4(&h).expect("simple cubic 3-connected established") {
        Some(parts) => Verdict::no(
            Clause::InflatedKFourFound,
            Certificate::InflatedKFour(parts.into_iter().collect()),
        ),
        None => Verdict::yes(Clause::SixAcCubicCriteria, Certificate::None),
    }
}

fn omega_verdict(g: &MultiGraph) -> Verdict {
    let s = recognize_shape(g);
    if OMEGA_SHAPES.contains(&s) {
        Verdict::yes(Clause::OmegaShape, Certificate::Shape(s))
    } else {
        Verdict::no(Clause::NotOmegaShape, Certificate::Shape(s))
    }
}

/// Is every set of at most `n` points contained in an arc?
pub fn is_n_ac(g: &MultiGraph, n: NValue) -> Result<Verdict, ClassifyError> {
    if g.edge_count() == 0 {
        return Err(ClassifyError::Edgeless);
    }
    if let NValue::Finite(k) = n {
        assert!(k >= 1, "point count must be positive");
        if k == 1 {
            return Ok(Verdict::yes(Clause::EdgePresent, Certificate::None));
        }
    }
    if !g.is_connected() {
        return Ok(Verdict::no(
            Clause::Disconnected,
            Certificate::ComponentCount(g.components().len()),
        ));
    }
    if let NValue::Finite(2) = n {
        return Ok(Verdict::yes(Clause::Connected, Certificate::None));
    }
    // the six unbounded shapes pass every n; this also keeps large
    // subdivisions of the shapes cheap to classify
    let s = recognize_shape(g);
    if OMEGA_SHAPES.contains(&s) {
        return Ok(Verdict::yes(Clause::OmegaShape, Certificate::Shape(s)));
    }
    // all questions are about the 1-complex, so they may be decided on the
    // suppressed form; its vertices keep their identities, which keeps
    // vertex certificates valid for the input graph
    let (h, _) = g.suppress_degree2();
    let target = if h.vertex_count() < g.vertex_count() { &h } else { g };
    Ok(match n {
        NValue::Finite(3) => match chain_decomposition(target).expect("connected") {
            Some(_) => Verdict::yes(Clause::BlockChain, Certificate::None),
            None => Verdict::no(Clause::BlockGraphBranches, branch_witness(target)),
        },
        NValue::Finite(4) => is_4ac(target),
        NValue::Finite(5) => is_5ac(target),
        NValue::Finite(6) => is_6ac(target),
        NValue::Finite(_) | NValue::Omega => omega_verdict(target),
    })
}

/// Is every set of at most `n` points contained in a simple closed curve?
pub fn is_n_cc(g: &MultiGraph, n: u32) -> Result<Verdict, ClassifyError> {
    assert!(n >= 1, "point count must be positive");
    if g.edge_count() == 0 {
        return Err(ClassifyError::Edgeless);
    }
    if !g.is_connected() {
        return Ok(Verdict::no(
            Clause::Disconnected,
            Certificate::ComponentCount(g.components().len()),
        ));
    }
    Ok(match n {
        1 => {
            let dec = blocks(g).expect("connected");
            match dec.blocks.iter().find(|b| b.is_bridge(g)) {
                Some(b) => {
                    Verdict::no(Clause::BridgeBlocksCircle, Certificate::Bridge(b.edges[0]))
                }
                None => Verdict::yes(Clause::EveryEdgeOnCircle, Certificate::None),
            }
        }
        2 => {
            if is_cyclically_connected(g) {
                Verdict::yes(Clause::CyclicallyConnected, Certificate::None)
            } else {
                Verdict::no(Clause::NotCyclicallyConnected, two_cc_witness(g))
            }
        }
        _ => {
            let s = recognize_shape(g);
            if s == Shape::Cycle {
                Verdict::yes(Clause::CycleShape, Certificate::Shape(s))
            } else {
                Verdict::no(Clause::NotCycleShape, Certificate::Shape(s))
            }
        }
    })
}

/// A point witnessing the failure of circle-connectivity: a vertex whose
/// removal splits the space, or a bridge.
fn two_cc_witness(g: &MultiGraph) -> Certificate {
    for v in g.vertex_ids() {
        let pieces = g.puncture_count(&BTreeSet::from([v]));
        if pieces >= 2 {
            return Certificate::CutSet { vertices: vec![v], pieces };
        }
    }
    if let Ok(dec) = blocks(g) {
        if let Some(b) = dec.blocks.iter().find(|b| b.is_bridge(g)) {
            return Certificate::Bridge(b.edges[0]);
        }
    }
    Certificate::None
}

/// How far the arc-connectivity reaches: the largest workable `n`, or ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcLevel {
    Finite(u32),
    Omega,
}

impl fmt::Display for AcLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcLevel::Finite(n) => write!(f, "{n}"),
            AcLevel::Omega => write!(f, "omega"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcClass {
    None,
    TwoCc,
    OmegaCc,
}

impl fmt::Display for CcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CcClass::None => write!(f, "none"),
            CcClass::TwoCc => write!(f, "2cc"),
            CcClass::OmegaCc => write!(f, "omega-cc"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    /// Verdicts for n = 1..=7, in order.
    pub finite: Vec<Verdict>,
    pub omega: Verdict,
    pub max_ac: AcLevel,
    pub cc_class: CcClass,
}

impl Classification {
    pub fn verdict(&self, n: NValue) -> &Verdict {
        match n {
            NValue::Finite(k) if (1..=7).contains(&k) => &self.finite[(k - 1) as usize],
            NValue::Finite(_) | NValue::Omega => &self.omega,
        }
    }
}

/// Runs every decider, checks that the answers are monotone in `n`, and
/// aggregates the levels.
pub fn classify(g: &MultiGraph) -> Result<Classification, ClassifyError> {
    if g.edge_count() == 0 {
        return Err(ClassifyError::Edgeless);
    }
    let finite: Vec<Verdict> = (1..=7)
        .map(|n| is_n_ac(g, NValue::Finite(n)))
        .collect::<Result<_, _>>()?;
    let omega = is_n_ac(g, NValue::Omega)?;
    for n in 1..7 {
        if finite[n].answer && !finite[n - 1].answer {
            return Err(ClassifyError::Inconsistent(format!(
                "{}-point connectivity holds but {}-point fails",
                n + 1,
                n
            )));
        }
    }
    if omega.answer != finite[6].answer {
        return Err(ClassifyError::Inconsistent(
            "seven-point and omega answers differ".into(),
        ));
    }
    let max_ac = if omega.answer {
        AcLevel::Omega
    } else {
        let top = finite.iter().rposition(|v| v.answer).map(|i| i as u32 + 1).unwrap_or(0);
        AcLevel::Finite(top)
    };
    let cc_class = if is_n_cc(g, 3)?.answer {
        CcClass::OmegaCc
    } else if is_n_cc(g, 2)?.answer {
        CcClass::TwoCc
    } else {
        CcClass::None
    };
    Ok(Classification { finite, omega, max_ac, cc_class })
}

/// Re-checks a verdict's certificate directly against the graph.
pub fn verify_certificate(g: &MultiGraph, verdict: &Verdict) -> bool {
    use Certificate as C;
    match (&verdict.clause, &verdict.certificate) {
        (_, C::None) => true,
        (Clause::Disconnected, C::ComponentCount(k)) => {
            *k >= 2 && g.components().len() == *k
        }
        (Clause::PairCutTooDeep, C::CutSet { vertices, pieces }) => {
            vertices.len() <= 2
                && *pieces >= 4
                && g.puncture_count(&vertices.iter().copied().collect()) == *pieces
        }
        (Clause::TripleCutTooDeep, C::CutSet { vertices, pieces }) => {
            vertices.len() <= 3
                && *pieces >= 5
                && g.puncture_count(&vertices.iter().copied().collect()) == *pieces
        }
        (Clause::NotCyclicallyConnected, C::CutSet { vertices, pieces }) => {
            *pieces >= 2 && g.puncture_count(&vertices.iter().copied().collect()) == *pieces
        }
        (Clause::NotCyclicallyConnected, C::Bridge(e)) | (Clause::BridgeBlocksCircle, C::Bridge(e)) => {
            let mut h = g.clone();
            let before = h.components().len();
            h.remove_edge(*e);
            h.components().len() > before
        }
        (Clause::DegreeTooHigh, C::HighDegreeVertex { vertex, degree }) => {
            *degree >= 5 && g.degree(*vertex) == Ok(*degree)
        }
        (Clause::ThreeLinkCycleFound, C::ThreeLinkCycle { apex, coanchors }) => {
            verify_three_link(g, *apex, coanchors.0, coanchors.1)
        }
        (Clause::TwoAnchorSplitFound, C::TwoAnchorSplit { apex, anchor, pieces }) => {
            if g.degree(*apex) != Ok(4) || *pieces < 3 {
                return false;
            }
            let rest = g.without_vertices(&BTreeSet::from([*apex, *anchor]));
            let direct = g
                .edges()
                .filter(|&(_, x, y)| (x, y) == ((*apex).min(*anchor), (*apex).max(*anchor)))
                .count();
            rest.components().len() + direct == *pieces
        }
        (Clause::InflatedKFourFound, C::InflatedKFour(parts)) => {
            let (h, _) = g.suppress_degree2();
            verify_inflation(&h, parts)
        }
        (Clause::SuppressedNotSimple, C::NotSimpleEdge(e)) => {
            let (h, _) = g.suppress_degree2();
            match h.endpoints(*e) {
                Ok((u, v)) => {
                    u == v
                        || h.edges().any(|(f, x, y)| f != *e && (x, y) == (u, v))
                }
                Err(_) => false,
            }
        }
        (Clause::SuppressedNotCubic, C::WrongDegree { vertex, degree }) => {
            let (h, _) = g.suppress_degree2();
            *degree != 3 && h.degree(*vertex) == Ok(*degree)
        }
        (Clause::SuppressedNotThreeConnected, C::SmallSeparator(sep)) => {
            let (h, _) = g.suppress_degree2();
            if sep.len() >= 3 {
                return false;
            }
            let rest = h.without_vertices(&sep.iter().copied().collect());
            rest.components().len() >= 2
        }
        (Clause::BlockGraphBranches, C::BranchCutVertex(v))
        | (Clause::NotAChain, C::BranchCutVertex(v)) => match blocks(g) {
            Ok(dec) => dec.cutvertex_degree(*v) >= 3,
            Err(_) => false,
        },
        (Clause::BlockGraphBranches, C::BranchBlock(edges))
        | (Clause::NotAChain, C::BranchBlock(edges)) => {
            // block certificates use the suppressed form's edge ids
            let (h, _) = g.suppress_degree2();
            match blocks(&h) {
                Ok(dec) => dec
                    .blocks
                    .iter()
                    .position(|b| b.edges == *edges)
                    .map(|i| dec.block_degree(i) >= 3)
                    .unwrap_or(false),
                Err(_) => false,
            }
        }
        (Clause::InteriorLinkNotAnArc, C::InteriorLink { link_index, edges }) => {
            let (h, _) = g.suppress_degree2();
            with_chain(&h, |chain| {
                chain
                    .links
                    .get(*link_index)
                    .map(|l| {
                        l.edges == *edges
                            && *link_index > 0
                            && *link_index + 1 < chain.links.len()
                            && !l.is_bridge(&h)
                    })
                    .unwrap_or(false)
            })
        }
        (Clause::LinkDegreeAtCut, C::LinkDegree { vertex, link_index, degree }) => {
            let (h, _) = g.suppress_degree2();
            with_chain(&h, |chain| {
                chain
                    .links
                    .get(*link_index)
                    .map(|l| *degree > 2 && link_end_count(&h, &l.edges, *vertex) == *degree)
                    .unwrap_or(false)
            })
        }
        (Clause::LinkNotFourAc, C::LinkCut { link_index, vertices, pieces }) => {
            let (h, _) = g.suppress_degree2();
            with_chain(&h, |chain| {
                chain
                    .links
                    .get(*link_index)
                    .map(|l| {
                        let sub = h.edge_subgraph(&l.edges);
                        vertices.len() <= 2
                            && *pieces >= 4
                            && sub.puncture_count(&vertices.iter().copied().collect()) == *pieces
                    })
                    .unwrap_or(false)
            })
        }
        (clause, C::Shape(s)) => {
            let actual = recognize_shape(g);
            if actual != *s {
                return false;
            }
            match clause {
                Clause::OmegaShape => OMEGA_SHAPES.contains(s),
                Clause::NotOmegaShape => !OMEGA_SHAPES.contains(s),
                Clause::FiveAcShape => FIVE_AC_SHAPES.contains(s),
                Clause::FiveAcShapeMismatch => !FIVE_AC_SHAPES.contains(s),
                Clause::CycleShape => *s == Shape::Cycle,
                Clause::NotCycleShape => *s != Shape::Cycle,
                _ => true,
            }
        }
        _ => false,
    }
}

fn with_chain(g: &MultiGraph, f: impl FnOnce(&ChainDecomposition) -> bool) -> bool {
    match chain_decomposition(g) {
        Ok(Some(chain)) => f(&chain),
        _ => false,
    }
}

fn verify_three_link(g: &MultiGraph, v: VertexId, u: VertexId, w: VertexId) -> bool {
    if v == u || v == w || u == w || g.degree(v) != Ok(4) {
        return false;
    }
    let anchors = BTreeSet::from([v, u, w]);
    let pieces = pieces_at(g, &anchors);
    let pair_vu = BTreeSet::from([v, u]);
    let pair_vw = BTreeSet::from([v, w]);
    let pair_uw = BTreeSet::from([u, w]);
    let mut buckets = [0usize; 3];
    for p in &pieces {
        if p.attachment == pair_vu {
            buckets[0] += 1;
        } else if p.attachment == pair_vw {
            buckets[1] += 1;
        } else if p.attachment == pair_uw {
            buckets[2] += 1;
        } else {
            return false;
        }
    }
    if buckets.contains(&0) {
        return false;
    }
    let mut ends = [0usize; 2];
    for (_, a, b) in g.edges() {
        let other = if a == v && b != v {
            b
        } else if b == v && a != v {
            a
        } else {
            continue;
        };
        let idx = if other == u {
            0
        } else if other == w {
            1
        } else {
            match pieces.iter().find(|p| p.vertices.contains(&other)) {
                Some(p) if p.attachment == pair_vu => 0,
                Some(p) if p.attachment == pair_vw => 1,
                _ => return false,
            }
        };
        ends[idx] += 1;
    }
    ends == [2, 2]
}

fn verify_inflation(h: &MultiGraph, parts: &[Vec<VertexId>]) -> bool {
    if parts.len() != 4 || parts.iter().any(|p| p.is_empty()) {
        return false;
    }
    let mut all: BTreeSet<VertexId> = BTreeSet::new();
    for p in parts {
        for &v in p {
            if !all.insert(v) {
                return false;
            }
        }
    }
    if all != h.vertex_ids().collect() {
        return false;
    }
    let part_of = |v: VertexId| parts.iter().position(|p| p.contains(&v)).unwrap();
    let mut cross = [[0usize; 4]; 4];
    for (_, u, v) in h.edges() {
        let (a, b) = (part_of(u), part_of(v));
        if a != b {
            cross[a.min(b)][a.max(b)] += 1;
        }
    }
    for (i, row) in cross.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            if j > i && count != 1 {
                return false;
            }
        }
    }
    for p in parts {
        let keep: BTreeSet<VertexId> = p.iter().copied().collect();
        let drop: BTreeSet<VertexId> =
            h.vertex_ids().filter(|v| !keep.contains(v)).collect();
        if h.without_vertices(&drop).components().len() != 1 {
            return false;
        }
    }
    true
}
