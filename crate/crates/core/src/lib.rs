//! Decides, for a finite multigraph `G` and any `n`, whether every set of at
//! most `n` points of the geometric realization `|G|` lies on a common arc
//! (`n`-arc-connected) or on a common simple closed curve
//! (`n`-circle-connected), using combinatorial characterizations, and checks
//! every decision procedure against a brute-force topological oracle.

pub mod atlas;
pub mod classify;
pub mod decompose;
pub mod graph;
pub mod iso;
pub mod menger;
pub mod oracle;
pub mod shape;

pub use graph::{EdgeId, GraphError, MultiGraph, PointConfig, VertexId};
pub use shape::Shape;
