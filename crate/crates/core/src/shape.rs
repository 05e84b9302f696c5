//! Homeomorphism-type recognition against the fixed catalogue of small
//! curve shapes. Recognition suppresses all degree-2 vertices first, so it
//! is invariant under subdivision.

use crate::graph::MultiGraph;
use crate::iso::is_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// A single edge: homeomorphic to the closed unit interval.
    Arc,
    /// A single circle.
    Cycle,
    /// A circle with a pendant arc.
    Lollipop,
    /// Two vertices joined by three internally disjoint arcs.
    Theta,
    /// Two circles sharing one point.
    FigureEight,
    /// Two circles joined by an arc.
    Dumbbell,
    /// Two circles and an arc forming a ring of three links.
    HappyFace,
    /// Two circles and two arcs alternating around a ring.
    Baguette,
    Other,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Arc => "arc",
            Shape::Cycle => "cycle",
            Shape::Lollipop => "lollipop",
            Shape::Theta => "theta",
            Shape::FigureEight => "figure-eight",
            Shape::Dumbbell => "dumbbell",
            Shape::HappyFace => "happy-face",
            Shape::Baguette => "baguette",
            Shape::Other => "other",
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The six shapes whose 1-complex stays arc-connectable for every number of
/// points.
pub const OMEGA_SHAPES: [Shape; 6] = [
    Shape::Arc,
    Shape::Cycle,
    Shape::Lollipop,
    Shape::Theta,
    Shape::FigureEight,
    Shape::Dumbbell,
];

fn catalogue() -> Vec<(Shape, MultiGraph)> {
    vec![
        (Shape::Arc, MultiGraph::from_edges(2, &[(0, 1)])),
        (Shape::Cycle, MultiGraph::from_edges(1, &[(0, 0)])),
        (Shape::Lollipop, MultiGraph::from_edges(2, &[(0, 0), (0, 1)])),
        (Shape::Theta, MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])),
        (Shape::FigureEight, MultiGraph::from_edges(1, &[(0, 0), (0, 0)])),
        (Shape::Dumbbell, MultiGraph::from_edges(2, &[(0, 0), (1, 1), (0, 1)])),
        (Shape::HappyFace, MultiGraph::from_edges(3, &[(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)])),
        (Shape::Baguette, MultiGraph::from_edges(4, &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])),
    ]
}

/// Recognizes the homeomorphism type of a connected graph with at least one
/// edge. Returns `Other` when the suppressed form matches no catalogue entry.
pub fn recognize_shape(g: &MultiGraph) -> Shape {
    debug_assert!(g.is_connected());
    debug_assert!(g.edge_count() > 0);
    let (h, _) = g.suppress_degree2();
    for (shape, model) in catalogue() {
        if h.vertex_count() == model.vertex_count()
            && h.edge_count() == model.edge_count()
            && is_isomorphic(&h, &model)
        {
            return shape;
        }
    }
    Shape::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::graph::PointConfig;

    #[test]
    fn large_cycle_is_a_cycle() {
        assert_eq!(recognize_shape(&atlas::cycle(100)), Shape::Cycle);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(recognize_shape(&g), Shape::FigureEight);
    }

    #[test]
    fn k4_is_other() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(recognize_shape(&k4), Shape::Other);
    }

    #[test]
    fn named_graphs_have_their_shape() {
        for (name, shape) in [
            ("arc", Shape::Arc),
            ("triangle", Shape::Cycle),
            ("lollipop", Shape::Lollipop),
            ("theta", Shape::Theta),
            ("figure_eight", Shape::FigureEight),
            ("dumbbell", Shape::Dumbbell),
            ("happy_face", Shape::HappyFace),
            ("baguette", Shape::Baguette),
            ("k4", Shape::Other),
            ("k33", Shape::Other),
        ] {
            assert_eq!(recognize_shape(&atlas::named(name).unwrap()), shape, "{name}");
        }
    }

    #[test]
    fn recognition_is_subdivision_invariant() {
        for name in ["theta", "dumbbell", "happy_face", "baguette", "k4", "lollipop"] {
            let g = atlas::named(name).unwrap();
            let base = recognize_shape(&g);
            let sub = g.subdivide(&PointConfig::uniform(&g, 2).unwrap()).unwrap();
            assert_eq!(recognize_shape(&sub.graph), base, "{name}");
            let first = g.edge_ids().next().unwrap();
            let sub2 = g.subdivide(&PointConfig::single(first)).unwrap();
            assert_eq!(recognize_shape(&sub2.graph), base, "{name}");
        }
    }
}
