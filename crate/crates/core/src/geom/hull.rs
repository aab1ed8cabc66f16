//! Exact convex hulls of small point sets, plus segment and volume queries
//! on them.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::point::{sign, Point};
use super::predicates::{orient, orient_det, orient_in_plane};
use super::rat::{int, Rat};
use crate::error::GeomError;

/// Boundary of a 3-dimensional convex hull, triangulated, with every facet
/// oriented so that `orient(a, b, c, q) < 0` for points `q` inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullFacets {
    pub points: Vec<Point>,
    pub facets: Vec<[usize; 3]>,
}

impl HullFacets {
    /// Indices of input points that are hull vertices.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.facets.iter().flatten().copied().collect()
    }

    /// Checks the supporting-plane property of every facet (points off the
    /// facet plane strictly inside) and that the facets close into a
    /// connected surface.
    pub fn is_valid(&self) -> bool {
        for f in &self.facets {
            let [a, b, c] = f.map(|i| &self.points[i]);
            let mut off_plane = 0;
            for q in &self.points {
                match orient(a, b, c, q) {
                    1 => return false,
                    -1 => off_plane += 1,
                    _ => {}
                }
            }
            if off_plane == 0 {
                return false;
            }
        }
        closed_connected_surface(&self.facets)
    }
}

/// Every undirected edge in exactly two triangles, each directed edge once,
/// and the triangles connected through shared edges.
pub fn closed_connected_surface(tris: &[[usize; 3]]) -> bool {
    if tris.is_empty() {
        return false;
    }
    let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
    for (t, tri) in tris.iter().enumerate() {
        for k in 0..3 {
            let e = (tri[k], tri[(k + 1) % 3]);
            if directed.insert(e, t).is_some() {
                return false;
            }
        }
    }
    for &(a, b) in directed.keys() {
        if !directed.contains_key(&(b, a)) {
            return false;
        }
    }
    let mut seen = vec![false; tris.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        let tri = tris[t];
        for k in 0..3 {
            let nb = directed[&(tri[(k + 1) % 3], tri[k])];
            if !seen[nb] {
                seen[nb] = true;
                stack.push(nb);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Exact convex hull by brute-force enumeration of supporting planes.
///
/// Non-triangular faces are fan-triangulated over their extreme points.
/// Points that are not hull vertices (interior, or inside a face or edge)
/// appear in no facet. Intended for the tiny inputs (at most a few dozen
/// points) that occur here.
pub fn convex_hull(points: &[Point]) -> Result<HullFacets, GeomError> {
    let n = points.len();
    if n < 4 {
        return Err(GeomError::DegenerateInput(format!("{n} points")));
    }
    // Exact duplicates keep only their first occurrence.
    let mut first_index: HashMap<&Point, usize> = HashMap::new();
    let reps: Vec<usize> = (0..n)
        .filter(|&i| *first_index.entry(&points[i]).or_insert(i) == i)
        .collect();
    if !spans_space(points, &reps) {
        return Err(GeomError::DegenerateInput("points are coplanar".into()));
    }

    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut face_normals: Vec<(Vec<usize>, [usize; 3])> = Vec::new();
    for (ii, &i) in reps.iter().enumerate() {
        for (jj, &j) in reps.iter().enumerate().skip(ii + 1) {
            for &k in reps.iter().skip(jj + 1) {
                let (a, b, c) = (&points[i], &points[j], &points[k]);
                if (b - a).cross(&(c - a)).is_zero() {
                    continue;
                }
                let mut pos = false;
                let mut neg = false;
                let mut on: Vec<usize> = Vec::new();
                for &q in &reps {
                    match orient(a, b, c, &points[q]) {
                        1 => pos = true,
                        -1 => neg = true,
                        _ => on.push(q),
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                if faces.insert(on.clone()) {
                    let tri = if pos { [i, k, j] } else { [i, j, k] };
                    face_normals.push((on, tri));
                }
            }
        }
    }

    let mut facets = Vec::new();
    for (on, tri) in face_normals {
        if on.len() == 3 {
            facets.push(tri);
            continue;
        }
        let [a, b, c] = tri.map(|i| &points[i]);
        let normal = (b - a).cross(&(c - a));
        let ring = planar_hull(points, &on, &normal);
        for w in 1..ring.len() - 1 {
            facets.push([ring[0], ring[w], ring[w + 1]]);
        }
    }
    facets.sort();
    Ok(HullFacets {
        points: points.to_vec(),
        facets,
    })
}

fn spans_space(points: &[Point], idx: &[usize]) -> bool {
    if idx.len() < 4 {
        return false;
    }
    let a = &points[idx[0]];
    let Some(&j) = idx.iter().find(|&&j| points[j] != *a) else {
        return false;
    };
    let b = &points[j];
    let Some(&k) = idx.iter().find(|&&k| !(b - a).cross(&(&points[k] - a)).is_zero()) else {
        return false;
    };
    let c = &points[k];
    idx.iter().any(|&l| orient(a, b, c, &points[l]) != 0)
}

/// Extreme points of a coplanar set in counter-clockwise order seen from the
/// tip of `normal` (gift wrapping, collinear points dropped).
fn planar_hull(points: &[Point], on: &[usize], normal: &Point) -> Vec<usize> {
    let start = *on
        .iter()
        .min_by(|&&a, &&b| points[a].cmp(&points[b]))
        .expect("non-empty face");
    let mut ring = vec![start];
    let mut current = start;
    loop {
        let mut next = if on[0] == current { on[1] } else { on[0] };
        for &cand in on {
            if cand == current || cand == next {
                continue;
            }
            let s = orient_in_plane(normal, &points[current], &points[next], &points[cand]);
            let farther = || {
                let d_next = &points[next] - &points[current];
                let d_cand = &points[cand] - &points[current];
                d_cand.dot(&d_cand) > d_next.dot(&d_next)
            };
            if s < 0 || (s == 0 && farther()) {
                next = cand;
            }
        }
        if next == start {
            break;
        }
        ring.push(next);
        current = next;
        assert!(ring.len() <= on.len(), "planar hull failed to close");
    }
    ring
}

/// True iff the open segment `(a, b)` contains a point strictly inside the
/// hull.
pub fn segment_meets_interior(hull: &HullFacets, a: &Point, b: &Point) -> bool {
    // Feasible parameter interval, open on both ends.
    let mut lo = int(0);
    let mut hi = int(1);
    for f in &hull.facets {
        let [p, q, r] = f.map(|i| &hull.points[i]);
        let fa = orient_det(p, q, r, a);
        let fb = orient_det(p, q, r, b);
        let slope = &fb - &fa;
        match sign(&slope) {
            0 => {
                if !fa.is_negative() {
                    return false;
                }
            }
            s => {
                let root = -&fa / &slope;
                if s > 0 {
                    if root < hi {
                        hi = root;
                    }
                } else if root > lo {
                    lo = root;
                }
            }
        }
        if lo >= hi {
            return false;
        }
    }
    lo < hi
}

/// Exact volume, as a sum of tetrahedra from the input centroid.
pub fn volume(hull: &HullFacets) -> Rat {
    let reference = Point::centroid(&hull.points);
    let six = int(6);
    hull.facets
        .iter()
        .map(|f| {
            let [p, q, r] = f.map(|i| &hull.points[i]);
            -orient_det(p, q, r, &reference)
        })
        .fold(Rat::zero(), |acc, v| acc + v)
        / six
}

/// Volume of the tetrahedron `abcd`.
pub fn tetra_volume(a: &Point, b: &Point, c: &Point, d: &Point) -> Rat {
    orient_det(a, b, c, d).abs() / int(6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat::rat;

    fn p(x: i64, y: i64, z: i64) -> Point {
        Point::from_ints(x, y, z)
    }

    fn octahedron() -> Vec<Point> {
        vec![
            p(1, 0, 0),
            p(-1, 0, 0),
            p(0, 1, 0),
            p(0, -1, 0),
            p(0, 0, 1),
            p(0, 0, -1),
        ]
    }

    fn unit_tetra() -> Vec<Point> {
        vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]
    }

    #[test]
    fn octahedron_has_one_facet_per_sign_vector() {
        let h = convex_hull(&octahedron()).unwrap();
        assert_eq!(h.facets.len(), 8);
        assert!(h.is_valid());
        let mut signs = BTreeSet::new();
        for f in &h.facets {
            let s = Point::centroid(f.iter().map(|&i| &h.points[i]));
            signs.insert((sign(&s.x), sign(&s.y), sign(&s.z)));
        }
        assert_eq!(signs.len(), 8);
    }

    #[test]
    fn tetrahedron_hull() {
        let h = convex_hull(&unit_tetra()).unwrap();
        assert_eq!(h.facets.len(), 4);
        assert!(h.is_valid());
    }

    #[test]
    fn centroid_is_not_a_vertex() {
        let mut pts = unit_tetra();
        pts.push(Point::centroid(&unit_tetra()));
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.facets.len(), 4);
        assert!(!h.vertices().contains(&4));
        // the oracle: every facet supports with all other points strictly inside
        for f in &h.facets {
            let [a, b, c] = f.map(|i| &pts[i]);
            for (q, pt) in pts.iter().enumerate() {
                if !f.contains(&q) {
                    assert_eq!(orient(a, b, c, pt), -1);
                }
            }
        }
    }

    #[test]
    fn cube_faces_are_triangulated() {
        let mut pts = Vec::new();
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    pts.push(p(x, y, z));
                }
            }
        }
        pts.push(Point::new(rat(1, 2), rat(1, 2), int(0))); // face center
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.facets.len(), 12);
        assert!(!h.vertices().contains(&8));
        assert!(closed_connected_surface(&h.facets));
        assert_eq!(volume(&h), int(1));
    }

    #[test]
    fn coplanar_input_is_degenerate() {
        let pts = vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(1, 1, 0)];
        assert!(matches!(convex_hull(&pts), Err(GeomError::DegenerateInput(_))));
        let pts = vec![p(0, 0, 0), p(1, 0, 0), p(2, 0, 0), p(3, 0, 0)];
        assert!(convex_hull(&pts).is_err());
    }

    #[test]
    fn segment_queries_on_octahedron() {
        let h = convex_hull(&octahedron()).unwrap();
        assert!(segment_meets_interior(&h, &p(0, 0, -1), &p(0, 0, 1)));
        assert!(!segment_meets_interior(&h, &p(2, 2, 2), &p(3, 3, 3)));
        assert!(!segment_meets_interior(&h, &p(1, 0, 0), &p(0, 1, 0)));
        assert!(segment_meets_interior(&h, &p(-5, 0, 0), &p(5, 0, 0)));
    }

    #[test]
    fn volumes() {
        assert_eq!(volume(&convex_hull(&unit_tetra()).unwrap()), rat(1, 6));
        let oct = octahedron();
        assert_eq!(volume(&convex_hull(&oct).unwrap()), rat(4, 3));
        let halved: Vec<Point> = oct.iter().map(|q| q.scale(&rat(1, 2))).collect();
        assert_eq!(volume(&convex_hull(&halved).unwrap()), rat(4, 3) * rat(1, 8));
    }
}
