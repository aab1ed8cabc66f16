//! Parameter searches for the inner cross-polytope, the edge points and the
//! shrink factor. Each search starts at a fixed seed and halves until an exact
//! test passes.

use num_traits::Signed;

use crate::balance::Frame;
use crate::complex::{is_cross_polytope, meets_properly};
use crate::error::{Error, Result};
use crate::geom::{half, open_segments_cross, pow_half, sign, strictly_inside_polygon, Point, Rat};

use super::SearchConfig;

/// Local id of the vertex on side `side` of pair `pair`.
pub fn vid(pair: usize, side: usize) -> usize {
    2 * pair + side
}

/// The twelve non-antipodal vertex pairs `u < v` of a cross-polytope, in
/// lexicographic order.
pub fn edges() -> [[usize; 2]; 12] {
    let mut out = [[0; 2]; 12];
    let mut k = 0;
    for u in 0..6 {
        for v in (u + 1)..6 {
            if u / 2 != v / 2 {
                out[k] = [u, v];
                k += 1;
            }
        }
    }
    out
}

pub fn edge_slot(u: usize, v: usize) -> usize {
    let key = [u.min(v), u.max(v)];
    edges()
        .iter()
        .position(|e| *e == key)
        .expect("not a cross-polytope edge")
}

pub(crate) fn halving<T>(
    start: Rat,
    cfg: &SearchConfig,
    stage: &'static str,
    mut accept: impl FnMut(&Rat) -> Option<T>,
) -> Result<(Rat, T)> {
    let mut r = start;
    for _ in 0..=cfg.cap {
        if let Some(found) = accept(&r) {
            return Ok((r, found));
        }
        r = half(&r);
    }
    Err(Error::SearchExhausted { stage, bipyramid: None })
}

/// The inner cross-polytope `C`: `v[i] = [O + t_i (X_i - O), O + t_i (Y_i - O)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCrossPolytope {
    pub t: [Rat; 3],
    pub v: [[Point; 2]; 3],
}

impl InnerCrossPolytope {
    pub fn from_scales(frame: &Frame, t: [Rat; 3]) -> Self {
        let o = &frame.center;
        let v = std::array::from_fn(|i| [o.lerp(&frame.x[i], &t[i]), o.lerp(&frame.y[i], &t[i])]);
        InnerCrossPolytope { t, v }
    }

    pub fn vertex(&self, id: usize) -> &Point {
        &self.v[id / 2][id % 2]
    }

    pub fn points(&self) -> [Point; 6] {
        std::array::from_fn(|id| self.vertex(id).clone())
    }

    pub fn scaled(&self, center: &Point, eps: &Rat) -> [Point; 6] {
        std::array::from_fn(|id| center.lerp(self.vertex(id), eps))
    }
}

/// Places `C` nested in the flats: `t1 = 1/2`, then `t2` and `t3` halve until
/// `V2W2` crosses `V1W1` inside `L2` and `V3W3` pierces the quadrilateral
/// `V1 V2 W1 W2`.
pub fn inner_cross_polytope(frame: &Frame, cfg: &SearchConfig, round: u32) -> Result<InnerCrossPolytope> {
    let o = &frame.center;
    let n = frame.l2_normal();
    let t1 = half(&Rat::from_integer(1.into()));
    let v1 = o.lerp(&frame.x[0], &t1);
    let w1 = o.lerp(&frame.y[0], &t1);
    let (t2, (v2, w2)) = halving(half(&t1) * pow_half(round), cfg, "inner_cross_polytope", |t| {
        let v2 = o.lerp(&frame.x[1], t);
        let w2 = o.lerp(&frame.y[1], t);
        open_segments_cross(&n, &v1, &w1, &v2, &w2).then_some((v2, w2))
    })?;
    let quad = [v1.clone(), v2.clone(), w1.clone(), w2.clone()];
    let (t3, _) = halving(half(&t2) * pow_half(round), cfg, "inner_cross_polytope", |t| {
        let v3 = o.lerp(&frame.x[2], t);
        let w3 = o.lerp(&frame.y[2], t);
        let (hv, hw) = (n.dot(&(&v3 - o)), n.dot(&(&w3 - o)));
        if sign(&hv) * sign(&hw) != -1 {
            return None;
        }
        let pierce = v3.lerp(&w3, &(&hv / (&hv - &hw)));
        strictly_inside_polygon(&n, &quad, &pierce).then_some(())
    })?;
    let c = InnerCrossPolytope::from_scales(frame, [t1, t2, t3]);
    if !is_cross_polytope(&c.points(), [(0, 1), (2, 3), (4, 5)]) {
        return Err(Error::CellCertificationFailed(
            "inner cross-polytope is not convex".into(),
        ));
    }
    Ok(c)
}

/// One interior point on each of the twelve edges of `C`, placed on parallel
/// slices near the vertices of pairs 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePoints {
    /// Slice offsets as fractions of the nearer vertex height, for pairs 2 and 3.
    pub sigma: [Rat; 2],
    points: [Point; 12],
}

impl EdgePoints {
    pub fn from_points(sigma: [Rat; 2], points: [Point; 12]) -> Self {
        EdgePoints { sigma, points }
    }

    pub fn get(&self, u: usize, v: usize) -> &Point {
        &self.points[edge_slot(u, v)]
    }

    pub fn points(&self) -> &[Point; 12] {
        &self.points
    }

    /// Vertex figure `Q_U` of `C` at `u`: the pairs `(U, O)` and the two
    /// antipodal pairs of edge points on the remaining pairs.
    pub fn vertex_figure(&self, inner: &InnerCrossPolytope, center: &Point, u: usize) -> [Point; 6] {
        let [a, b] = other_pairs(u);
        [
            inner.vertex(u).clone(),
            center.clone(),
            self.get(u, vid(a, 0)).clone(),
            self.get(u, vid(a, 1)).clone(),
            self.get(u, vid(b, 0)).clone(),
            self.get(u, vid(b, 1)).clone(),
        ]
    }
}

pub(crate) fn other_pairs(u: usize) -> [usize; 2] {
    match u / 2 {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

struct Height {
    normal: Point,
    origin: Point,
}

impl Height {
    fn new(normal: Point, origin: &Point, positive: &Point) -> Self {
        let normal = if sign(&normal.dot(&(positive - origin))) < 0 {
            -&normal
        } else {
            normal
        };
        Height {
            normal,
            origin: origin.clone(),
        }
    }

    fn at(&self, p: &Point) -> Rat {
        self.normal.dot(&(p - &self.origin))
    }
}

fn slice_points(
    inner: &InnerCrossPolytope,
    h: &Height,
    sigma: &Rat,
    lower: std::ops::Range<usize>,
    upper: [usize; 2],
    out: &mut [Option<Point>; 12],
) {
    let hv = h.at(inner.vertex(upper[0]));
    let hw = -h.at(inner.vertex(upper[1]));
    let delta = sigma * if hv < hw { &hv } else { &hw };
    for u in lower {
        for v in upper {
            let top = inner.vertex(v);
            let s = &delta / h.at(top).abs();
            out[edge_slot(u, v)] = Some(inner.vertex(u).lerp(top, &s));
        }
    }
}

/// Runs both slice searches: pair-2 slices certified by the planar vertex
/// figures in `L2`, then pair-3 slices certified by all six vertex figures.
pub fn edge_points(frame: &Frame, inner: &InnerCrossPolytope, cfg: &SearchConfig, round: u32) -> Result<EdgePoints> {
    let o = &frame.center;
    let n = frame.l2_normal();
    let h2 = Height::new(n.cross(&(&frame.x[0] - o)), o, &frame.x[1]);
    let h3 = Height::new(n.clone(), o, &frame.x[2]);
    let seed = || half(&Rat::from_integer(1.into())) * pow_half(round);

    let (sigma2, stage2) = halving(seed(), cfg, "edge_points", |sigma| {
        let mut pts: [Option<Point>; 12] = Default::default();
        slice_points(inner, &h2, sigma, 0..2, [2, 3], &mut pts);
        let get = |u: usize, v: usize| pts[edge_slot(u, v)].as_ref().unwrap();
        let ok = (0..2).all(|u| open_segments_cross(&n, inner.vertex(u), o, get(u, 2), get(u, 3)))
            && (2..4).all(|u| open_segments_cross(&n, inner.vertex(u), o, get(0, u), get(1, u)));
        ok.then_some(pts)
    })?;
    let (sigma3, points) = halving(seed(), cfg, "edge_points", |sigma| {
        let mut pts = stage2.clone();
        slice_points(inner, &h3, sigma, 0..4, [4, 5], &mut pts);
        let ep = EdgePoints::from_points([sigma2.clone(), sigma.clone()], pts.map(Option::unwrap));
        (0..6)
            .all(|u| is_cross_polytope(&ep.vertex_figure(inner, o, u), [(0, 1), (2, 3), (4, 5)]))
            .then_some(ep.points)
    })?;
    Ok(EdgePoints::from_points([sigma2, sigma3], points))
}

/// The outer-vertex cell at `u`: `(Z_U, eps U)` plus the ring of edge points.
pub(crate) fn axial_points(
    frame: &Frame,
    inner: &InnerCrossPolytope,
    ep: &EdgePoints,
    eps: &Rat,
    u: usize,
) -> [Point; 6] {
    let mut pts = ep.vertex_figure(inner, &frame.center, u);
    pts[0] = frame.outer(u / 2, u % 2).clone();
    pts[1] = frame.center.lerp(inner.vertex(u), eps);
    pts
}

/// Shrink factor for the core cell: halves from `1/2` until all six axial
/// cells are convex and the core meets each of them only in its vertex.
pub fn choose_epsilon(
    frame: &Frame,
    inner: &InnerCrossPolytope,
    ep: &EdgePoints,
    cfg: &SearchConfig,
    round: u32,
) -> Result<Rat> {
    let seed = half(&Rat::from_integer(1.into())) * pow_half(round);
    let (eps, ()) = halving(seed, cfg, "choose_epsilon", |eps| {
        let core = inner.scaled(&frame.center, eps);
        (0..6)
            .all(|u| {
                let axial = axial_points(frame, inner, ep, eps, u);
                is_cross_polytope(&axial, [(0, 1), (2, 3), (4, 5)])
                    && meets_properly(&core, &axial, std::slice::from_ref(&core[u]))
            })
            .then_some(())
    })?;
    Ok(eps)
}
