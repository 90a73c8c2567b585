//! Minimum r-guard placement for orthogonal path polygons.
//!
//! A point `q` r-sees `p` when the axis-aligned rectangle spanned by the two
//! points lies inside the polygon. For polygons whose vertical decomposition
//! has a path as its dual graph, [`plan_guards`] computes a minimum guard set
//! in linear time (after sorting the vertical edges):
//!
//! 1. [`vertical_decompose`] splits the polygon into slabs ordered along the path.
//! 2. [`partition_balanced`] cuts the slab chain into parts that each contain
//!    a horizontal corridor joining their leftmost and rightmost walls.
//! 3. Each tooth edge of a part yields a placement rectangle (its shadow
//!    clipped to the corridor); minimum interval stabbing merges them.
//!
//! [`oracle`] is an exact brute-force solver used to check the result on
//! small instances, and [`gen`] produces seeded test polygons.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod gen;
pub mod geom;
pub mod guards;
pub mod oracle;
pub mod partition;
pub mod vdecomp;

pub use error::{Error, Result};
pub use geom::{Edge, EdgeClass, EdgeKind, HalfPoint, Normal, Orientation, OrthoPolygon, Point, Rect};
pub use guards::{guard_parts, merge_positions, plan_guards, plan_guards_with, tooth_positions, GuardPlan, PosRegion};
pub use partition::{partition_balanced, partition_with, BalancedPart, CutPolicy, CutReport};
pub use vdecomp::{is_path_polygon, local_minima, pixel_grid, vertical_decompose, PixelGrid, SlabSeries};

/// Validates a raw vertex ring; see [`OrthoPolygon::new`].
pub fn validate_polygon(raw: alloc::vec::Vec<Point>) -> Result<OrthoPolygon> {
    OrthoPolygon::new(raw)
}
