//! Independent oracles: brute-force face lattices and combinatorial checks
//! that share no code with the library's predicates.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use octa_core::geom::Point;

type Q = BigRational;

fn det3(a: [&Q; 3], b: [&Q; 3], c: [&Q; 3]) -> Q {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn diff(p: &Point, q: &Point) -> [Q; 3] {
    [&p.x - &q.x, &p.y - &q.y, &p.z - &q.z]
}

/// Sign of the volume of `(q - p, r - p, s - p)`, by cofactor expansion.
pub fn side(p: &Point, q: &Point, r: &Point, s: &Point) -> i32 {
    let (a, b, c) = (diff(q, p), diff(r, p), diff(s, p));
    let d = det3([&a[0], &a[1], &a[2]], [&b[0], &b[1], &b[2]], [&c[0], &c[1], &c[2]]);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

/// Faces of the convex hull of `pts` that are supported by a plane through
/// three of the points, as the full set of points on that plane.
pub fn hull_faces(pts: &[Point]) -> BTreeSet<BTreeSet<usize>> {
    let n = pts.len();
    let mut faces = BTreeSet::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let signs: Vec<i32> = (0..n).map(|q| side(&pts[i], &pts[j], &pts[k], &pts[q])).collect();
                if signs.iter().all(|&s| s == 0) {
                    continue;
                }
                let pos = signs.iter().any(|&s| s > 0);
                let neg = signs.iter().any(|&s| s < 0);
                if pos && neg {
                    continue;
                }
                let on: BTreeSet<usize> = (0..n).filter(|&q| signs[q] == 0).collect();
                // collinear triples give a line, not a plane
                let line = {
                    let (a, b) = (diff(&pts[j], &pts[i]), diff(&pts[k], &pts[i]));
                    (&a[1] * &b[2] - &a[2] * &b[1]).is_zero()
                        && (&a[2] * &b[0] - &a[0] * &b[2]).is_zero()
                        && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero()
                };
                if !line {
                    faces.insert(on);
                }
            }
        }
    }
    faces
}

/// Six points span a cross-polytope with the given pairing iff the hull has
/// exactly eight facets, each a triangle with no antipodal pair.
pub fn oracle_cross_polytope(pts: &[Point; 6], pairs: [(usize, usize); 3]) -> bool {
    let faces = hull_faces(pts);
    faces.len() == 8
        && faces
            .iter()
            .all(|f| f.len() == 3 && pairs.iter().all(|&(a, b)| !(f.contains(&a) && f.contains(&b))))
}

/// Whether a triangle list is combinatorially the boundary of an octahedron.
pub fn is_octahedral_sphere(tris: &[[usize; 3]]) -> bool {
    let verts: BTreeSet<usize> = tris.iter().flatten().copied().collect();
    if tris.len() != 8 || verts.len() != 6 {
        return false;
    }
    let mut nbrs: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for t in tris {
        for &a in t {
            for &b in t {
                if a != b {
                    nbrs.entry(a).or_default().insert(b);
                }
            }
        }
    }
    let mut partner = BTreeMap::new();
    for &v in &verts {
        let missing: Vec<usize> = verts
            .iter()
            .copied()
            .filter(|&w| w != v && !nbrs[&v].contains(&w))
            .collect();
        if missing.len() != 1 {
            return false;
        }
        partner.insert(v, missing[0]);
    }
    let distinct: BTreeSet<BTreeSet<usize>> = tris.iter().map(|t| t.iter().copied().collect()).collect();
    distinct.len() == 8 && distinct.iter().all(|t| t.iter().all(|v| !t.contains(&partner[v])))
}

/// `2/3` times the shoelace area of a polygon in the `z = 0` plane: the volume
/// of the bipyramid over it with apexes at height `±1`.
pub fn bipyramid_volume(equator: &[Point]) -> Q {
    let n = equator.len();
    let mut twice_area = Q::zero();
    for i in 0..n {
        let (p, q) = (&equator[i], &equator[(i + 1) % n]);
        twice_area += &p.x * &q.y - &q.x * &p.y;
    }
    twice_area.abs() / Q::from_integer(BigInt::from(3))
}
