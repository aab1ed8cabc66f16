use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{intersect::meets_properly, CrossPolytopalComplex};
use crate::geom::{closed_connected_surface, orient, Point, Rat};
use crate::verify::{Check, VerificationReport};

/// How much of the complex axiom to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValidationLevel {
    /// Cell certificates, face-incidence counts and shared-face geometry.
    #[default]
    Fast,
    /// Everything in `Fast` plus an exact proper-intersection test on every
    /// pair of cells with overlapping bounding boxes.
    Full,
}

impl std::str::FromStr for ValidationLevel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(ValidationLevel::Fast),
            "full" => Ok(ValidationLevel::Full),
            other => Err(format!("unknown validation level `{other}`")),
        }
    }
}

const MAX_LISTED: usize = 5;

fn listing<T: std::fmt::Debug>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().take(MAX_LISTED).map(|i| format!("{i:?}")).collect();
    let more = items.len().saturating_sub(MAX_LISTED);
    if more > 0 {
        format!("{} (+{more} more)", shown.join(", "))
    } else {
        shown.join(", ")
    }
}

pub fn validate_complex(c: &CrossPolytopalComplex, level: ValidationLevel) -> VerificationReport {
    let mut report = VerificationReport::default();
    let pool = c.vertices();

    let uncertified: Vec<usize> = c
        .cells()
        .par_iter()
        .enumerate()
        .filter(|(_, cell)| !cell.is_certified(pool))
        .map(|(i, _)| i)
        .collect();
    report.push(if uncertified.is_empty() {
        Check::pass(
            "cells_certified",
            format!("{} cells pass is_cross_polytope", c.cells().len()),
        )
    } else {
        Check::fail(
            "cells_certified",
            format!("is_cross_polytope fails for cells {}", listing(&uncertified)),
        )
    });

    let incidence = c.triangle_incidence();
    let overfull: Vec<_> = incidence
        .iter()
        .filter(|(_, cs)| cs.len() > 2)
        .map(|(t, _)| *t)
        .collect();
    let interior = incidence.values().filter(|cs| cs.len() == 2).count();
    let boundary = incidence.values().filter(|cs| cs.len() == 1).count();
    report.push(if overfull.is_empty() {
        Check::pass(
            "face_incidence",
            format!("{interior} interior triangles in 2 cells, {boundary} boundary triangles in 1"),
        )
    } else {
        Check::fail(
            "face_incidence",
            format!("triangles in more than 2 cells: {}", listing(&overfull)),
        )
    });

    // Two cells sharing a triangle must lie on opposite sides of it.
    let mut same_side = Vec::new();
    for (t, cs) in &incidence {
        if cs.len() != 2 {
            continue;
        }
        let [a, b, p] = t.map(|i| &pool[i]);
        let side = |ci: usize| {
            let cell = &c.cells()[ci];
            let off = cell.verts.iter().find(|v| !t.contains(v)).expect("vertex off facet");
            orient(a, b, p, &pool[*off])
        };
        let (s0, s1) = (side(cs[0]), side(cs[1]));
        if s0 == 0 || s0 != -s1 {
            same_side.push(*t);
        }
    }
    report.push(if same_side.is_empty() {
        Check::pass("shared_face_sides", "every shared triangle separates its two cells")
    } else {
        Check::fail(
            "shared_face_sides",
            format!("cells on the same side of {}", listing(&same_side)),
        )
    });

    report.push(if closed_connected_surface(c.boundary()) {
        Check::pass(
            "boundary_closed",
            format!("{} boundary triangles form a closed surface", c.boundary().len()),
        )
    } else {
        Check::fail(
            "boundary_closed",
            "boundary triangles do not close up into a connected surface",
        )
    });

    if level == ValidationLevel::Full {
        let bad = improper_pairs(c);
        report.push(if bad.is_empty() {
            Check::pass("pairwise_intersection", "all cell pairs meet in a common face")
        } else {
            Check::fail(
                "pairwise_intersection",
                format!("NonFaceIntersection for cell pairs {}", listing(&bad)),
            )
        });
    }
    report
}

struct BBox {
    lo: [Rat; 3],
    hi: [Rat; 3],
}

fn bbox(pts: &[Point]) -> BBox {
    let mut lo = [pts[0].x.clone(), pts[0].y.clone(), pts[0].z.clone()];
    let mut hi = lo.clone();
    for p in &pts[1..] {
        for (k, v) in p.coords().into_iter().enumerate() {
            if *v < lo[k] {
                lo[k] = v.clone();
            }
            if *v > hi[k] {
                hi[k] = v.clone();
            }
        }
    }
    BBox { lo, hi }
}

fn boxes_touch(a: &BBox, b: &BBox) -> bool {
    (0..3).all(|k| a.lo[k] <= b.hi[k] && b.lo[k] <= a.hi[k])
}

/// Pairs of cells whose intersection is not a common face.
pub(crate) fn improper_pairs(c: &CrossPolytopalComplex) -> Vec<(usize, usize)> {
    let pool = c.vertices();
    let cells = c.cells();
    let pts: Vec<[Point; 6]> = cells.iter().map(|cell| cell.points(pool)).collect();
    let boxes: Vec<BBox> = pts.iter().map(|p| bbox(p)).collect();
    let mut bad: Vec<(usize, usize)> = (0..cells.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let pts = &pts;
            let boxes = &boxes;
            ((i + 1)..cells.len()).filter_map(move |j| {
                if !boxes_touch(&boxes[i], &boxes[j]) {
                    return None;
                }
                let vi: BTreeSet<usize> = cells[i].verts.iter().copied().collect();
                let shared: Vec<usize> = cells[j].verts.iter().copied().filter(|v| vi.contains(v)).collect();
                let face_of = |cell: &super::OctaCell| {
                    shared.len() <= 3
                        && shared
                            .iter()
                            .enumerate()
                            .all(|(x, &u)| shared[x + 1..].iter().all(|&w| !cell.antipodal(u, w)))
                };
                if !face_of(&cells[i]) || !face_of(&cells[j]) {
                    return Some((i, j));
                }
                let shared_pts: Vec<Point> = shared.iter().map(|&v| pool[v].clone()).collect();
                if meets_properly(&pts[i], &pts[j], &shared_pts) {
                    None
                } else {
                    Some((i, j))
                }
            })
        })
        .collect();
    bad.sort_unstable();
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{CellType, OctaCell};
    use crate::geom::{int, rat};

    fn p(x: i64, y: i64, z: i64) -> Point {
        Point::from_ints(x, y, z)
    }

    fn octa_points(shift: &Point) -> Vec<Point> {
        [
            p(1, 0, 0),
            p(-1, 0, 0),
            p(0, 1, 0),
            p(0, -1, 0),
            p(0, 0, 1),
            p(0, 0, -1),
        ]
        .iter()
        .map(|q| q + shift)
        .collect()
    }

    #[test]
    fn single_cell_is_valid() {
        let c = CrossPolytopalComplex::new(
            octa_points(&Point::origin()),
            vec![OctaCell::new([0, 1, 2, 3, 4, 5], Some(CellType::Core))],
        )
        .unwrap();
        let r = validate_complex(&c, ValidationLevel::Full);
        assert!(r.passed(), "{}", r.to_tsv());
        assert_eq!(c.boundary().len(), 8);
    }

    #[test]
    fn overlapping_translates_fail_full_validation() {
        // translate by half an edge length along e1 - e2 direction
        let shift = Point::new(rat(1, 2), rat(-1, 2), int(0));
        let mut verts = octa_points(&Point::origin());
        verts.extend(octa_points(&shift));
        let cells = vec![
            OctaCell::new([0, 1, 2, 3, 4, 5], None),
            OctaCell::new([6, 7, 8, 9, 10, 11], None),
        ];
        let c = CrossPolytopalComplex::new(verts, cells).unwrap();
        let fast = validate_complex(&c, ValidationLevel::Fast);
        assert!(fast.get("pairwise_intersection").is_none());
        let full = validate_complex(&c, ValidationLevel::Full);
        assert!(!full.passed());
        assert!(!full.get("pairwise_intersection").unwrap().passed);
    }

    #[test]
    fn face_sharing_octahedra_are_valid() {
        // two octahedra glued along the facet (e1, e2, e3) via reflection
        let base = octa_points(&Point::origin());
        let mut verts = base.clone();
        // reflection through the plane x + y + z = 1 maps the far vertices
        let reflect = |q: &Point| {
            let s = (&q.x + &q.y + &q.z - int(1)) * rat(2, 3);
            Point::new(&q.x - &s, &q.y - &s, &q.z - &s)
        };
        for q in [&base[1], &base[3], &base[5]] {
            verts.push(reflect(q));
        }
        let cells = vec![
            OctaCell::new([0, 1, 2, 3, 4, 5], None),
            OctaCell::new([0, 6, 2, 7, 4, 8], None),
        ];
        let c = CrossPolytopalComplex::new(verts, cells).unwrap();
        let r = validate_complex(&c, ValidationLevel::Full);
        assert!(r.passed(), "{}", r.to_tsv());
        assert_eq!(c.boundary().len(), 14);
        assert_eq!(c.f_vector(), [9, 21, 15, 2]);
    }
}
