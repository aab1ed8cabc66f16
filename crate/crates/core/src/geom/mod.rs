//! Exact rational geometry kernel. Every decision in the pipeline goes
//! through these predicates; there are no tolerances.

mod hull;
mod point;
mod predicates;
mod rat;

pub use hull::{closed_connected_surface, convex_hull, segment_meets_interior, tetra_volume, volume, HullFacets};
pub use point::{sign, Plane, Point};
pub use predicates::{open_segments_cross, orient, orient_det, orient_in_plane, strictly_inside_polygon};
pub use rat::{half, int, parse_rat, pow_half, rat, to_f64, ParseRatError, Rat};
