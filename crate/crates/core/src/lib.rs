//! Exact subdivision of balanced simplicial 3-polytopes into octahedra.
//!
//! All geometry runs over arbitrary-precision rationals; every predicate is
//! decided exactly and every produced cell is certified before it is
//! returned.

pub mod balance;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod geom;
pub mod io;
pub mod subdivide;
pub mod verify;

pub use balance::{
    cone_triangulate, match_bipyramids, three_color, Coloring, ConeTriangulation, Frame, GeneralizedBipyramid,
};
pub use complex::{
    is_cross_polytope, meets_properly, validate_complex, CellType, CrossPolytopalComplex, OctaCell, SimplicialPolytope,
    ValidationLevel,
};
pub use error::{Error, GeomError, Result};
pub use geom::{Point, Rat};
pub use subdivide::{
    octahedralize, octahedralize_with, schlegel_24cell_reference, subdivide_tetrahedron, SearchConfig, TetraFlag,
};
pub use verify::{verify_complex, Check, VerificationReport};
