//! Exact test that two convex cells meet in (a subset of) their common
//! vertices' hull.
//!
//! Separating-axis search over the finite candidate set of the Minkowski
//! difference's facet normals. A weakly separating plane `H` gives
//! `A ∩ B = (A ∩ H) ∩ (B ∩ H)`, so the problem recurses on the two supporting
//! faces inside `H`, then inside a line.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::geom::Point;

type IVec = [BigInt; 3];

/// True iff `conv(a) ∩ conv(b) ⊆ conv(shared)`.
///
/// `shared` are the points common to both vertex sets; callers check
/// separately that they span a face of each cell.
pub fn meets_properly(a: &[Point], b: &[Point], shared: &[Point]) -> bool {
    // Scale everything to a common denominator; the test is invariant under
    // uniform scaling and integer arithmetic skips the gcd normalizations.
    let mut l = BigInt::one();
    for p in a.iter().chain(b).chain(shared) {
        for c in p.coords() {
            l = l.lcm(c.denom());
        }
    }
    let lift = |pts: &[Point]| -> Vec<IVec> {
        pts.iter()
            .map(|p| p.coords().map(|c| c.numer() * (&l / c.denom())))
            .collect()
    };
    recurse(&lift(a), &lift(b), &lift(shared), &mut Vec::new())
}

fn sub(p: &IVec, q: &IVec) -> IVec {
    [&p[0] - &q[0], &p[1] - &q[1], &p[2] - &q[2]]
}

fn neg(p: &IVec) -> IVec {
    [-&p[0], -&p[1], -&p[2]]
}

fn dot(p: &IVec, q: &IVec) -> BigInt {
    &p[0] * &q[0] + &p[1] * &q[1] + &p[2] * &q[2]
}

fn cross(p: &IVec, q: &IVec) -> IVec {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

fn is_zero(p: &IVec) -> bool {
    p.iter().all(Zero::is_zero)
}

fn subset_of(s: &[IVec], of: &[IVec]) -> bool {
    s.iter().all(|p| of.contains(p))
}

enum Verdict {
    Separated,
    Touching(IVec),
    Undecided,
}

fn try_normal(a: &[IVec], b: &[IVec], n: &IVec) -> Verdict {
    if is_zero(n) {
        return Verdict::Undecided;
    }
    for dir in [n.clone(), neg(n)] {
        let max_a = a.iter().map(|p| dot(&dir, p)).max().expect("nonempty");
        let min_b = b.iter().map(|p| dot(&dir, p)).min().expect("nonempty");
        if max_a < min_b {
            return Verdict::Separated;
        }
        if max_a == min_b {
            return Verdict::Touching(dir);
        }
    }
    Verdict::Undecided
}

fn recurse(a: &[IVec], b: &[IVec], shared: &[IVec], fixed: &mut Vec<IVec>) -> bool {
    if subset_of(a, shared) || subset_of(b, shared) {
        return true;
    }
    if fixed.len() == 3 {
        return false;
    }
    let mut found = None;
    for_each_candidate(a, b, fixed, |n| match try_normal(a, b, &n) {
        Verdict::Undecided => false,
        v => {
            found = Some(v);
            true
        }
    });
    match found {
        Some(Verdict::Separated) => true,
        Some(Verdict::Touching(dir)) => {
            let level = |pts: &[IVec], max: bool| {
                let vals: Vec<BigInt> = pts.iter().map(|p| dot(&dir, p)).collect();
                let best = if max { vals.iter().max() } else { vals.iter().min() }
                    .expect("nonempty")
                    .clone();
                pts.iter()
                    .zip(&vals)
                    .filter(|(_, v)| **v == best)
                    .map(|(p, _)| p.clone())
                    .collect::<Vec<_>>()
            };
            let (face_a, face_b) = (level(a, true), level(b, false));
            fixed.push(dir);
            let ok = recurse(&face_a, &face_b, shared, fixed);
            fixed.pop();
            ok
        }
        _ => false,
    }
}

fn diffs(pts: &[IVec]) -> Vec<IVec> {
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            out.push(sub(&pts[j], &pts[i]));
        }
    }
    out
}

/// Feeds candidate normals of the Minkowski difference, restricted to the
/// orthogonal complement of `fixed`, until `stop` returns true.
fn for_each_candidate(a: &[IVec], b: &[IVec], fixed: &[IVec], mut stop: impl FnMut(IVec) -> bool) {
    match fixed.len() {
        0 => {
            // triangle normals of each set first; they settle most pairs
            for pts in [a, b] {
                let n = pts.len();
                for i in 0..n {
                    for j in (i + 1)..n {
                        for l in (j + 1)..n {
                            if stop(cross(&sub(&pts[j], &pts[i]), &sub(&pts[l], &pts[i]))) {
                                return;
                            }
                        }
                    }
                }
            }
            let db = diffs(b);
            for u in diffs(a) {
                for v in &db {
                    if stop(cross(&u, v)) {
                        return;
                    }
                }
            }
        }
        1 => {
            let m = &fixed[0];
            let mut dirs = diffs(a);
            dirs.extend(diffs(b));
            for p in a {
                for q in b {
                    dirs.push(sub(q, p));
                }
            }
            for d in dirs {
                if stop(cross(m, &d)) || stop(d) {
                    return;
                }
            }
        }
        _ => {
            stop(cross(&fixed[0], &fixed[1]));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    fn p(x: i64, y: i64, z: i64) -> Point {
        Point::from_ints(x, y, z)
    }

    fn tetra(offset: i64) -> Vec<Point> {
        vec![p(offset, 0, 0), p(offset + 1, 0, 0), p(offset, 1, 0), p(offset, 0, 1)]
    }

    #[test]
    fn disjoint_cells() {
        assert!(meets_properly(&tetra(0), &tetra(5), &[]));
    }

    #[test]
    fn shared_vertex_only() {
        // second tetra mirrored through the origin vertex
        let a = tetra(0);
        let b: Vec<Point> = a.iter().map(|q| -q).collect();
        assert!(meets_properly(&a, &b, &[p(0, 0, 0)]));
    }

    #[test]
    fn overlapping_cells() {
        let a = tetra(0);
        let b: Vec<Point> = a
            .iter()
            .map(|q| q + &Point::new(rat(1, 4), rat(1, 4), rat(1, 4)))
            .collect();
        assert!(!meets_properly(&a, &b, &[]));
    }

    #[test]
    fn common_facet() {
        let a = tetra(0);
        let b = vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, -1)];
        let shared = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0)];
        assert!(meets_properly(&a, &b, &shared));
        // claiming only an edge is shared must fail: the triangle is common
        assert!(!meets_properly(&a, &b, &shared[..2]));
    }

    #[test]
    fn coplanar_facets_across_an_edge() {
        // two tetrahedra with coplanar facets on either side of a shared edge,
        // on opposite sides of that plane
        let a = vec![p(0, 0, 0), p(2, 0, 0), p(1, 1, 0), p(1, 0, 1)];
        let b = vec![p(0, 0, 0), p(2, 0, 0), p(1, -1, 0), p(1, 0, -1)];
        assert!(meets_properly(&a, &b, &[p(0, 0, 0), p(2, 0, 0)]));
    }

    #[test]
    fn touching_without_shared_vertex_is_improper() {
        // b's vertex lies in the middle of a's facet
        let a = tetra(0);
        let b = vec![
            Point::new(rat(1, 4), rat(1, 4), rat(0, 1)),
            p(0, 0, -1),
            p(1, 0, -1),
            p(0, 1, -1),
        ];
        assert!(!meets_properly(&a, &b, &[]));
    }
}
