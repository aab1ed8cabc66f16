//! Coloring, cone triangulation and the matching of cone tetrahedra into
//! flagged generalized bipyramids.

use std::collections::{BTreeMap, VecDeque};

use crate::complex::SimplicialPolytope;
use crate::error::{Error, Result};
use crate::geom::{orient, orient_in_plane, sign, tetra_volume, Point, Rat};

/// Color in `1..=3` for every polytope vertex; the cone apex gets color 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
}

pub const APEX_COLOR: u8 = 4;

impl Coloring {
    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn is_proper_on(&self, p: &SimplicialPolytope) -> bool {
        p.edges().iter().all(|&[a, b]| self.colors[a] != self.colors[b])
    }
}

/// Proper 3-coloring by forced propagation across the dual graph, seeded by
/// coloring the sorted vertices of facet 0 with `1, 2, 3`.
pub fn three_color(p: &SimplicialPolytope) -> Result<Coloring> {
    three_color_seeded(p, [1, 2, 3])
}

/// As [`three_color`], with the colors given to facet 0's sorted vertices.
pub fn three_color_seeded(p: &SimplicialPolytope, seed: [u8; 3]) -> Result<Coloring> {
    let facets = p.facets();
    let mut sorted_seed = seed;
    sorted_seed.sort_unstable();
    assert_eq!(sorted_seed, [1, 2, 3], "seed must be a permutation of 1, 2, 3");

    let mut by_edge: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (f[k], f[(k + 1) % 3]);
            by_edge.entry([a.min(b), a.max(b)]).or_default().push(fi);
        }
    }
    let mut colors = vec![0u8; p.vertices().len()];
    let mut first = facets[0];
    first.sort_unstable();
    for (v, c) in first.iter().zip(seed) {
        colors[*v] = c;
    }
    let mut seen = vec![false; facets.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(fi) = queue.pop_front() {
        let f = facets[fi];
        for k in 0..3 {
            let (a, b) = (f[k], f[(k + 1) % 3]);
            let forced = 6 - colors[a] - colors[b];
            for &nb in &by_edge[&[a.min(b), a.max(b)]] {
                if seen[nb] {
                    continue;
                }
                let w = *facets[nb].iter().find(|&&v| v != a && v != b).expect("third vertex");
                if colors[w] == 0 {
                    colors[w] = forced;
                } else if colors[w] != forced {
                    return Err(Error::NotBalanced(format!(
                        "color propagation contradicts itself at vertex {w}"
                    )));
                }
                seen[nb] = true;
                queue.push_back(nb);
            }
        }
    }
    let coloring = Coloring { colors };
    if !coloring.is_proper_on(p) {
        return Err(Error::NotBalanced("propagated coloring is not proper".into()));
    }
    Ok(coloring)
}

/// Cone over every facet from the vertex centroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeTriangulation {
    pub apex: Point,
    /// One tetrahedron per facet: the facet's vertex triple, coned to `apex`.
    pub tetrahedra: Vec<[usize; 3]>,
    pub coloring: Coloring,
}

pub fn cone_triangulate(p: &SimplicialPolytope, coloring: &Coloring) -> ConeTriangulation {
    ConeTriangulation {
        apex: p.centroid(),
        tetrahedra: p.facets().to_vec(),
        coloring: coloring.clone(),
    }
}

/// Labelled boundary vertices of a degenerate cross-polytope: a center `O`
/// and three antipodal pairs `(x[i], y[i])`, together with the nested flats
/// `L1 = aff(X1, Y1) ⊂ L2 = aff(X1, Y1, X2, Y2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub center: Point,
    pub x: [Point; 3],
    pub y: [Point; 3],
}

impl Frame {
    /// `x[i]` for side 0, `y[i]` for side 1.
    pub fn outer(&self, pair: usize, side: usize) -> &Point {
        if side == 0 {
            &self.x[pair]
        } else {
            &self.y[pair]
        }
    }

    /// The eight boundary triangles, one vertex per pair; bit `i` of the index
    /// selects the side of pair `i`.
    pub fn boundary_triangles(&self) -> [[Point; 3]; 8] {
        std::array::from_fn(|m| std::array::from_fn(|i| self.outer(i, (m >> i) & 1).clone()))
    }

    /// Normal of the plane `L2`.
    pub fn l2_normal(&self) -> Point {
        (&self.x[0] - &self.center).cross(&(&self.x[1] - &self.center))
    }

    /// Volume of the star-shaped region coned from the center over the eight
    /// boundary triangles.
    pub fn volume(&self) -> Rat {
        self.boundary_triangles()
            .iter()
            .map(|[a, b, c]| tetra_volume(a, b, c, &self.center))
            .sum()
    }

    /// The nested-flat and separation conditions the inner cross-polytope
    /// construction relies on.
    pub fn check_preconditions(&self) -> Result<()> {
        let o = &self.center;
        let fail = |m: &str| Err(Error::Precondition(m.to_string()));
        let d1 = &self.x[0] - o;
        let d2 = &self.y[0] - o;
        if d1.is_zero() || d2.is_zero() || !d1.cross(&d2).is_zero() || sign(&d1.dot(&d2)) >= 0 {
            return fail("center is not strictly between X1 and Y1");
        }
        let n = self.l2_normal();
        if n.is_zero() {
            return fail("X2 lies on the line L1");
        }
        if sign(&n.dot(&(&self.y[1] - o))) != 0 {
            return fail("Y2 is not in the plane L2");
        }
        if orient_in_plane(&n, &self.x[0], &self.y[0], &self.x[1])
            * orient_in_plane(&n, &self.x[0], &self.y[0], &self.y[1])
            != -1
        {
            return fail("X2 and Y2 are not on opposite sides of L1");
        }
        let s3 = sign(&n.dot(&(&self.x[2] - o)));
        let t3 = sign(&n.dot(&(&self.y[2] - o)));
        if s3 * t3 != -1 {
            return fail("X3 and Y3 are not strictly on opposite sides of L2");
        }
        for tri in self.boundary_triangles() {
            if orient(&tri[0], &tri[1], &tri[2], o) == 0 {
                return fail("center is coplanar with a boundary triangle");
            }
        }
        Ok(())
    }
}

/// Two cone tetrahedra glued along their `{2,3,4}`-colored triangle, with
/// flag `F0 = apex` (color 4) inside `F1 = apex – color-3 vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedBipyramid {
    pub id: usize,
    /// Source facets of the two tetrahedra, lower index first.
    pub facets: [usize; 2],
    /// Equator `[F0 vertex, other F1 vertex, remaining vertex]`.
    pub equator: [Point; 3],
    /// Off-equator vertices of the two tetrahedra.
    pub tips: [Point; 2],
    pub frame: Frame,
}

impl GeneralizedBipyramid {
    pub fn from_parts(id: usize, facets: [usize; 2], equator: [Point; 3], tips: [Point; 2]) -> Self {
        let [f0, f1_other, rest] = &equator;
        let frame = Frame {
            center: Point::centroid(equator.iter()),
            x: [rest.clone(), f1_other.clone(), tips[0].clone()],
            y: [f0.midpoint(f1_other), f0.clone(), tips[1].clone()],
        };
        GeneralizedBipyramid {
            id,
            facets,
            equator,
            tips,
            frame,
        }
    }

    /// `vol(S1) + vol(S2)`.
    pub fn volume(&self) -> Rat {
        let [a, b, c] = &self.equator;
        tetra_volume(a, b, c, &self.tips[0]) + tetra_volume(a, b, c, &self.tips[1])
    }
}

/// Pairs the cone tetrahedra across their `{2,3,4}`-colored triangles.
pub fn match_bipyramids(p: &SimplicialPolytope, cone: &ConeTriangulation) -> Result<Vec<GeneralizedBipyramid>> {
    let col = &cone.coloring;
    let mut by_equator: BTreeMap<[usize; 2], Vec<(usize, usize)>> = BTreeMap::new();
    for (fi, tet) in cone.tetrahedra.iter().enumerate() {
        let find = |c: u8| tet.iter().copied().filter(|&v| col.color(v) == c).collect::<Vec<_>>();
        let (c1, c2, c3) = (find(1), find(2), find(3));
        if c1.len() != 1 || c2.len() != 1 || c3.len() != 1 {
            return Err(Error::MatchingFailure(format!(
                "facet {fi} does not have exactly one {{2,3}}-colored edge"
            )));
        }
        by_equator.entry([c2[0], c3[0]]).or_default().push((fi, c1[0]));
    }
    // (equator edge, [(facet, tip); 2])
    type Matched = ([usize; 2], [(usize, usize); 2]);
    let mut pairs: Vec<Matched> = Vec::with_capacity(by_equator.len());
    for (edge, tets) in by_equator {
        if tets.len() != 2 {
            return Err(Error::MatchingFailure(format!(
                "equatorial triangle on edge {edge:?} lies in {} tetrahedra",
                tets.len()
            )));
        }
        let mut tets = [tets[0], tets[1]];
        tets.sort_unstable();
        pairs.push((edge, tets));
    }
    pairs.sort_by_key(|(_, t)| t[0].0);
    let verts = p.vertices();
    Ok(pairs
        .into_iter()
        .enumerate()
        .map(|(id, ([v2, v3], [(fa, ta), (fb, tb)]))| {
            GeneralizedBipyramid::from_parts(
                id,
                [fa, fb],
                [cone.apex.clone(), verts[v3].clone(), verts[v2].clone()],
                [verts[ta].clone(), verts[tb].clone()],
            )
        })
        .collect())
}
