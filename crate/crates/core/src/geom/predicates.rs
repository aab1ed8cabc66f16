//! Exact orientation predicates.

use super::point::{sign, Point};
use super::rat::Rat;

/// Determinant of `(q - p, r - p, s - p)`: six times the signed volume of
/// the tetrahedron `pqrs`.
pub fn orient_det(p: &Point, q: &Point, r: &Point, s: &Point) -> Rat {
    let a = q - p;
    let b = r - p;
    let c = s - p;
    a.cross(&b).dot(&c)
}

/// Sign of [`orient_det`]; zero iff the four points are coplanar.
pub fn orient(p: &Point, q: &Point, r: &Point, s: &Point) -> i8 {
    sign(&orient_det(p, q, r, s))
}

/// Orientation of `abc` seen from the tip of `normal`, for points lying in a
/// common plane with that normal.
pub fn orient_in_plane(normal: &Point, a: &Point, b: &Point, c: &Point) -> i8 {
    sign(&normal.dot(&(b - a).cross(&(c - a))))
}

/// True iff the open segments `ab` and `cd` cross in a single point interior
/// to both. The four points must be coplanar in a plane with `normal`.
pub fn open_segments_cross(normal: &Point, a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let s1 = orient_in_plane(normal, a, b, c);
    let s2 = orient_in_plane(normal, a, b, d);
    let s3 = orient_in_plane(normal, c, d, a);
    let s4 = orient_in_plane(normal, c, d, b);
    s1 * s2 == -1 && s3 * s4 == -1
}

/// True iff `p` lies strictly inside the convex polygon `poly` (given in
/// cyclic order, coplanar with `p`, plane normal `normal`).
pub fn strictly_inside_polygon(normal: &Point, poly: &[Point], p: &Point) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let mut expected = 0i8;
    for i in 0..n {
        let s = orient_in_plane(normal, &poly[i], &poly[(i + 1) % n], p);
        if s == 0 {
            return false;
        }
        if expected == 0 {
            expected = s;
        } else if s != expected {
            return false;
        }
    }
    true
}
