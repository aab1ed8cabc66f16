//! Exact test polytopes.

use crate::complex::SimplicialPolytope;
use crate::geom::{convex_hull, int, rat, Point, Rat};

fn hull_polytope(points: Vec<Point>) -> SimplicialPolytope {
    let hull = convex_hull(&points).expect("fixture points span space");
    SimplicialPolytope::new(points, hull.facets).expect("fixture hull is a simplicial polytope")
}

/// `conv(±e_i)`.
pub fn octahedron() -> SimplicialPolytope {
    let v = vec![
        Point::from_ints(1, 0, 0),
        Point::from_ints(-1, 0, 0),
        Point::from_ints(0, 1, 0),
        Point::from_ints(0, -1, 0),
        Point::from_ints(0, 0, 1),
        Point::from_ints(0, 0, -1),
    ];
    hull_polytope(v)
}

/// The unit tetrahedron `A = 0, B = e1, C = e2, D = e3`.
pub fn unit_tetrahedron_points() -> [Point; 4] {
    [
        Point::origin(),
        Point::from_ints(1, 0, 0),
        Point::from_ints(0, 1, 0),
        Point::from_ints(0, 0, 1),
    ]
}

pub fn tetrahedron() -> SimplicialPolytope {
    hull_polytope(unit_tetrahedron_points().to_vec())
}

/// Pyritohedral icosahedron on `(0, ±1, ±8/5)` and its cyclic permutations.
pub fn icosahedron() -> SimplicialPolytope {
    let a = rat(8, 5);
    let mut v = Vec::with_capacity(12);
    for s in [1, -1] {
        for t in [1, -1] {
            let (p, q) = (int(s), &a * int(t));
            v.push(Point::new(int(0), p.clone(), q.clone()));
            v.push(Point::new(q.clone(), int(0), p.clone()));
            v.push(Point::new(p, q, int(0)));
        }
    }
    hull_polytope(v)
}

/// Rational point on the unit circle near angle `theta`, via the rational
/// tangent half-angle parametrization.
fn circle_point(theta: f64) -> (Rat, Rat) {
    let mut theta = theta.rem_euclid(std::f64::consts::TAU);
    if theta > std::f64::consts::PI {
        theta -= std::f64::consts::TAU;
    }
    let t = rat(((theta / 2.0).tan() * 1000.0).round() as i64, 1000);
    let one = int(1);
    let d = &one + &t * &t;
    ((&one - &t * &t) / &d, (int(2) * &t) / d)
}

/// Bipyramid over a regular `2k`-gon: equator vertices on the unit circle at
/// angles `π(2j+1)/(2k)`, apexes `(0, 0, ±1)`. Balanced for every `k ≥ 2`.
pub fn bipyramid(k: usize) -> SimplicialPolytope {
    assert!(k >= 2, "bipyramid needs k >= 2");
    let n = 2 * k;
    let mut v: Vec<Point> = (0..n)
        .map(|j| {
            let (x, y) = circle_point(std::f64::consts::PI * (2 * j + 1) as f64 / n as f64);
            Point::new(x, y, int(0))
        })
        .collect();
    v.push(Point::from_ints(0, 0, 1));
    v.push(Point::from_ints(0, 0, -1));
    let mut facets = Vec::with_capacity(2 * n);
    for j in 0..n {
        let next = (j + 1) % n;
        facets.push([j, next, n]);
        facets.push([next, j, n + 1]);
    }
    SimplicialPolytope::new(v, facets).expect("bipyramid is a simplicial polytope")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        assert_eq!(octahedron().f_vector(), [6, 12, 8]);
        assert_eq!(tetrahedron().f_vector(), [4, 6, 4]);
        assert_eq!(icosahedron().f_vector(), [12, 30, 20]);
        for k in 2..=6 {
            assert_eq!(bipyramid(k).f_vector(), [2 * k + 2, 6 * k, 4 * k]);
        }
    }

    #[test]
    fn equator_lies_on_the_unit_circle() {
        let p = bipyramid(5);
        for q in &p.vertices()[..10] {
            assert_eq!(&q.x * &q.x + &q.y * &q.y, int(1));
        }
    }
}
