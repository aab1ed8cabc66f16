//! The single-tetrahedron variant and the fixed-parameter reference block
//! inside the regular octahedron.

use crate::balance::Frame;
use crate::complex::{is_cross_polytope, CrossPolytopalComplex};
use crate::error::{Error, Result};
use crate::geom::{half, int, Point, Rat};

use super::search::{edges, halving, InnerCrossPolytope};
use super::{assemble_cells, certify_block, Block, BlockParams, EdgePoints, SearchConfig};

/// Flag `{A} ⊂ {A, B} ⊂ {A, B, C}` on a tetrahedron, by vertex position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TetraFlag {
    pub vertex: usize,
    pub edge: usize,
    pub triangle: usize,
}

impl Default for TetraFlag {
    fn default() -> Self {
        TetraFlag {
            vertex: 0,
            edge: 1,
            triangle: 2,
        }
    }
}

/// Frame of a tetrahedron `ABCD` for the given flag: center at the centroid,
/// `X = (D, C, A)`, `Y = (G, M, B)` with `G` the barycenter of `ABC` and `M`
/// the midpoint of `AB`.
pub fn tetrahedron_frame(vertices: &[Point; 4], flag: TetraFlag) -> Result<Frame> {
    let TetraFlag { vertex, edge, triangle } = flag;
    let ids = [vertex, edge, triangle];
    if ids.iter().any(|&i| i > 3) || vertex == edge || edge == triangle || vertex == triangle {
        return Err(Error::Precondition("flag must name three distinct vertices".into()));
    }
    let d = (0..4).find(|i| !ids.contains(i)).expect("fourth vertex");
    let [a, b, c, d] = [vertex, edge, triangle, d].map(|i| vertices[i].clone());
    if crate::geom::orient(&a, &b, &c, &d) == 0 {
        return Err(Error::Precondition("tetrahedron is flat".into()));
    }
    let g = Point::centroid([&a, &b, &c]);
    let m = a.midpoint(&b);
    let frame = Frame {
        center: Point::centroid(vertices.iter()),
        x: [d, c, a],
        y: [g, m, b],
    };
    frame.check_preconditions()?;
    Ok(frame)
}

/// Subdivides one tetrahedron into 23 octahedra.
pub fn subdivide_tetrahedron(vertices: &[Point; 4], flag: TetraFlag) -> Result<CrossPolytopalComplex> {
    let frame = tetrahedron_frame(vertices, flag)?;
    super::subdivide_frame(&frame, &SearchConfig::from_env())?.complex()
}

/// The reference block in `conv(±e_i)`, with the cuboctahedral edge points
/// `λ(±e_i ± e_j)` and the core `μ conv(±e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchlegelReference {
    pub lambda: Rat,
    pub mu: Rat,
    pub block: Block,
}

fn unit_frame() -> Frame {
    Frame {
        center: Point::origin(),
        x: [
            Point::from_ints(1, 0, 0),
            Point::from_ints(0, 1, 0),
            Point::from_ints(0, 0, 1),
        ],
        y: [
            Point::from_ints(-1, 0, 0),
            Point::from_ints(0, -1, 0),
            Point::from_ints(0, 0, -1),
        ],
    }
}

fn reference_parts(frame: &Frame, lambda: &Rat) -> (InnerCrossPolytope, EdgePoints) {
    let t = lambda * int(2);
    let inner = InnerCrossPolytope::from_scales(frame, [t.clone(), t.clone(), t]);
    let points = edges().map(|[u, v]| inner.vertex(u).midpoint(inner.vertex(v)));
    let half_ = half(&int(1));
    (inner, EdgePoints::from_points([half_.clone(), half_], points))
}

/// Builds the reference: `λ` halves from `1/2` until the outer cells are
/// convex, then `μ` halves from `1/4` until the whole block certifies.
pub fn schlegel_24cell_reference() -> Result<SchlegelReference> {
    let cfg = SearchConfig::from_env();
    let frame = unit_frame();
    let (lambda, ()) = halving(half(&int(1)), &cfg, "schlegel_lambda", |lambda| {
        let (inner, ep) = reference_parts(&frame, lambda);
        let (points, cells) = assemble_cells(&frame, &inner, &ep, &int(1));
        cells[..8]
            .iter()
            .all(|c| is_cross_polytope(&c.points(&points), [(0, 1), (2, 3), (4, 5)]))
            .then_some(())
    })?;
    let (inner, ep) = reference_parts(&frame, &lambda);
    let two_lambda = &lambda * int(2);
    let (mu, (points, cells)) = halving(half(&half(&int(1))), &cfg, "schlegel_mu", |mu| {
        let eps = mu / &two_lambda;
        let (points, cells) = assemble_cells(&frame, &inner, &ep, &eps);
        certify_block(&frame, &points, &cells).ok().map(|()| (points, cells))
    })?;
    let params = BlockParams {
        t: inner.t.clone(),
        sigma: ep.sigma.clone(),
        eps: &mu / &two_lambda,
        round: 0,
    };
    Ok(SchlegelReference {
        lambda,
        mu,
        block: Block { points, cells, params },
    })
}
