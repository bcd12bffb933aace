//! Monotone grid classes drawn on {-1, 0, 1} matrices.

mod geom;
mod graph;
mod matrix;

pub use geom::{
    centro_geom_counts, centro_gridded_bijection, centro_gridding_split, gridding_count_formulas, BijectionRow, GriddingCountReport, GriddingCountRow, double_drawing, enumerate_geom, enumerate_gridded,
    griddings_of, has_centrosymmetric_gridding, max_griddings, merge_griddings, CentroGridding,
    GeomClass, GriddedPermutation,
};
pub use graph::{rc_component_pairing, split_xy, CellGraph, PairingReport, Split};
pub use matrix::{Cell, GridMatrix, Orientation};
