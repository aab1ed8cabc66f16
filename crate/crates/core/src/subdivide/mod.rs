//! The 23-cell subdivision of a framed region and its global assembly over a
//! balanced simplicial polytope.

mod reference;
mod search;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::balance::{cone_triangulate, match_bipyramids, three_color, Frame, GeneralizedBipyramid};
use crate::complex::{
    tri_key, validate_complex, CellType, CrossPolytopalComplex, OctaCell, SimplicialPolytope, ValidationLevel,
};
use crate::error::{Error, Result};
use crate::geom::{Point, Rat};

pub use reference::{
    schlegel_24cell_reference, subdivide_tetrahedron, tetrahedron_frame, SchlegelReference, TetraFlag,
};
pub use search::{choose_epsilon, edge_points, edges, inner_cross_polytope, vid, EdgePoints, InnerCrossPolytope};

/// Limits for the halving searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Halvings allowed per search before `SearchExhausted`.
    pub cap: u32,
    /// Joint restarts with every search seed halved once more.
    pub retries: u32,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: 64, retries: 16 }
    }
}

impl SearchConfig {
    /// Defaults, with the cap overridden by `OCTA_SEARCH_CAP` when set.
    pub fn from_env() -> Self {
        let mut cfg = SearchConfig::default();
        if let Some(cap) = std::env::var("OCTA_SEARCH_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            cfg.cap = cap;
        }
        cfg
    }
}

/// Chosen construction parameters of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockParams {
    pub t: [Rat; 3],
    pub sigma: [Rat; 2],
    pub eps: Rat,
    pub round: u32,
}

/// The 23 octahedra subdividing one framed region, over 24 local points:
/// the six outer vertices, the six scaled inner vertices, then the twelve
/// edge points in [`edges`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub points: Vec<Point>,
    pub cells: Vec<OctaCell>,
    pub params: BlockParams,
}

impl Block {
    pub fn complex(&self) -> Result<CrossPolytopalComplex> {
        CrossPolytopalComplex::new(self.points.clone(), self.cells.clone())
    }
}

const OUTER: usize = 0;
const CORE: usize = 6;
const EDGE: usize = 12;

/// Lays out the 23 cells for the given parameters without checking them.
pub fn assemble_cells(
    frame: &Frame,
    inner: &InnerCrossPolytope,
    ep: &EdgePoints,
    eps: &Rat,
) -> (Vec<Point>, Vec<OctaCell>) {
    let mut points = Vec::with_capacity(24);
    points.extend((0..6).map(|u| frame.outer(u / 2, u % 2).clone()));
    points.extend(inner.scaled(&frame.center, eps));
    points.extend(ep.points().iter().cloned());
    (points, block_cells())
}

fn block_cells() -> Vec<OctaCell> {
    let e = |u: usize, v: usize| EDGE + search::edge_slot(u, v);
    let mut cells = Vec::with_capacity(23);
    for base in [OUTER, CORE] {
        let kind = if base == OUTER {
            CellType::Outer
        } else {
            CellType::Inner
        };
        for m in 0..8 {
            let z: [usize; 3] = std::array::from_fn(|i| vid(i, (m >> i) & 1));
            cells.push(OctaCell::new(
                [
                    base + z[0],
                    e(z[1], z[2]),
                    base + z[1],
                    e(z[0], z[2]),
                    base + z[2],
                    e(z[0], z[1]),
                ],
                Some(kind),
            ));
        }
    }
    for u in 0..6 {
        let [a, b] = search::other_pairs(u);
        cells.push(OctaCell::new(
            [
                OUTER + u,
                CORE + u,
                e(u, vid(a, 0)),
                e(u, vid(a, 1)),
                e(u, vid(b, 0)),
                e(u, vid(b, 1)),
            ],
            Some(CellType::Axial),
        ));
    }
    cells.push(OctaCell::new(std::array::from_fn(|k| CORE + k), Some(CellType::Core)));
    cells
}

/// Certifies a block: every cell convex with its pairing, all pairs meeting
/// properly, boundary equal to the eight frame triangles and volume equal to
/// the frame's.
pub fn certify_block(frame: &Frame, points: &[Point], cells: &[OctaCell]) -> Result<()> {
    let fail = |m: String| Err(Error::CellCertificationFailed(m));
    let complex = CrossPolytopalComplex::new(points.to_vec(), cells.to_vec())?;
    let report = validate_complex(&complex, ValidationLevel::Full);
    if let Some(bad) = report.failures().next() {
        return fail(format!("{}: {}", bad.name, bad.detail));
    }
    let boundary: BTreeSet<[usize; 3]> = complex.boundary().iter().map(|t| tri_key(*t)).collect();
    let expected: BTreeSet<[usize; 3]> = (0..8)
        .map(|m| tri_key(std::array::from_fn(|i| OUTER + vid(i, (m >> i) & 1))))
        .collect();
    if boundary != expected {
        return fail("block boundary differs from the frame triangles".into());
    }
    if complex.total_volume() != frame.volume() {
        return fail("cell volumes do not add up to the frame volume".into());
    }
    Ok(())
}

/// Runs the three searches and assembles a certified 23-cell block, retrying
/// with halved seeds when certification fails.
pub fn subdivide_frame(frame: &Frame, cfg: &SearchConfig) -> Result<Block> {
    frame.check_preconditions()?;
    let mut last = None;
    for round in 0..=cfg.retries {
        let inner = inner_cross_polytope(frame, cfg, round)?;
        let ep = edge_points(frame, &inner, cfg, round)?;
        let eps = choose_epsilon(frame, &inner, &ep, cfg, round)?;
        let (points, cells) = assemble_cells(frame, &inner, &ep, &eps);
        match certify_block(frame, &points, &cells) {
            Ok(()) => {
                return Ok(Block {
                    points,
                    cells,
                    params: BlockParams {
                        t: inner.t,
                        sigma: ep.sigma,
                        eps,
                        round,
                    },
                })
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one round"))
}

/// Subdivides a balanced simplicial 3-polytope into `23 (f0 - 2)` octahedra.
pub fn octahedralize(p: &SimplicialPolytope) -> Result<CrossPolytopalComplex> {
    octahedralize_with(p, &SearchConfig::from_env()).map(|o| o.complex)
}

/// Everything produced along the way, for inspection.
#[derive(Debug, Clone)]
pub struct Octahedralization {
    pub complex: CrossPolytopalComplex,
    pub bipyramids: Vec<GeneralizedBipyramid>,
    pub blocks: Vec<Block>,
}

pub fn octahedralize_with(p: &SimplicialPolytope, cfg: &SearchConfig) -> Result<Octahedralization> {
    let coloring = three_color(p)?;
    let cone = cone_triangulate(p, &coloring);
    let bipyramids = match_bipyramids(p, &cone)?;
    let blocks = bipyramids
        .par_iter()
        .map(|b| subdivide_frame(&b.frame, cfg).map_err(|e| e.in_bipyramid(b.id)))
        .collect::<Result<Vec<_>>>()?;

    let mut pool: Vec<Point> = p.vertices().to_vec();
    pool.push(cone.apex.clone());
    let mut index: HashMap<Point, usize> = pool.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let mut cells = Vec::with_capacity(23 * blocks.len());
    for block in &blocks {
        let local: Vec<usize> = block
            .points
            .iter()
            .map(|q| {
                *index.entry(q.clone()).or_insert_with(|| {
                    pool.push(q.clone());
                    pool.len() - 1
                })
            })
            .collect();
        cells.extend(
            block
                .cells
                .iter()
                .map(|c| OctaCell::new(c.verts.map(|v| local[v]), c.kind)),
        );
    }
    let complex = CrossPolytopalComplex::new(pool, cells)?;
    let boundary: BTreeSet<[usize; 3]> = complex.boundary().iter().map(|t| tri_key(*t)).collect();
    let facets: BTreeSet<[usize; 3]> = p.facets().iter().map(|t| tri_key(*t)).collect();
    if boundary != facets {
        return Err(Error::CellCertificationFailed(
            "assembled boundary differs from the input facets".into(),
        ));
    }
    Ok(Octahedralization {
        complex,
        bipyramids,
        blocks,
    })
}
