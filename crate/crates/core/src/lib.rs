//! Discrete curves and surfaces on simple graphs.
//!
//! A [`CellComplex`] is a connected simple graph together with a chosen set
//! of chordless cycles, the surface-cells. On top of it the crate decides
//! whether paths are discrete curves, whether points are regular and have a
//! simple neighbourhood, whether a cycle deforms to a point by cell moves,
//! and how a closed curve separates a surface.
//!
//! ```
//! use dtopo::{fixtures, SurfaceView};
//! use dtopo::jordan::{separation_check, SeparationMode};
//!
//! let cx = fixtures::grid(5).unwrap().into_complex().unwrap();
//! let view = SurfaceView::whole(&cx).unwrap();
//! let square = cx.cell(dtopo::CellId(5)).clone();
//! let report = separation_check(&view, &square, SeparationMode::PseudoPoints).unwrap();
//! assert_eq!(report.components.len(), 2);
//! ```

pub mod classify;
pub mod complex;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod homotopy;
pub mod jordan;

pub use classify::{
    build_orientation_atlas, is_discrete_curve, is_regular_point, is_semi_curve,
    is_simple_surface_point, neighborhood, ClassifyError, NeighborhoodDisk, OrientationAtlas,
    Side, SurfaceView,
};
pub use complex::{
    default_u2, validate_u2, validate_u3, CellComplex, CellId, ComplexError, SurfaceRegion,
    U3Options,
};
pub use format::{ComplexDocument, FormatError};
pub use graph::{
    Edge, Graph, GraphBuilder, GraphError, Vertex, VertexCycle, VertexPath, VertexSet,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs-and-cycles.md")]
    mod graphs_and_cycles {}
    #[doc = include_str!("../../../book/src/cell-complexes.md")]
    mod cell_complexes {}
    #[doc = include_str!("../../../book/src/curves-and-points.md")]
    mod curves_and_points {}
    #[doc = include_str!("../../../book/src/homotopy.md")]
    mod homotopy {}
    #[doc = include_str!("../../../book/src/jordan.md")]
    mod jordan {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
