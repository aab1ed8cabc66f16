//! Simplicial polytopes, octahedral cells and cross-polytopal complexes.

mod intersect;
mod validate;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geom::{closed_connected_surface, orient, tetra_volume, Point, Rat};

pub use intersect::meets_properly;
pub use validate::{validate_complex, ValidationLevel};

/// Sorted vertex triple, the identity of a triangle in a complex.
pub type TriKey = [usize; 3];

pub fn tri_key(mut t: [usize; 3]) -> TriKey {
    t.sort_unstable();
    t
}

/// A convex simplicial 3-polytope with outward-oriented triangular facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPolytope {
    vertices: Vec<Point>,
    facets: Vec<[usize; 3]>,
}

impl SimplicialPolytope {
    /// Validates the input and orients every facet outward.
    ///
    /// Rejects anything that is not the boundary of a strictly convex
    /// simplicial 3-polytope: bad indices, surfaces that are not closed
    /// connected 2-spheres, vertices in fewer than three facets, facets whose
    /// plane does not strictly support the remaining vertices.
    pub fn new(vertices: Vec<Point>, facets: Vec<[usize; 3]>) -> Result<Self> {
        let n = vertices.len();
        if n < 4 {
            return Err(Error::InvalidPolytope(format!("only {n} vertices")));
        }
        let mut oriented = Vec::with_capacity(facets.len());
        for (fi, f) in facets.iter().enumerate() {
            if f.iter().any(|&i| i >= n) {
                return Err(Error::InvalidPolytope(format!("facet {fi} has an out-of-range index")));
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::InvalidPolytope(format!("facet {fi} repeats a vertex")));
            }
            let [a, b, c] = f.map(|i| &vertices[i]);
            let mut side = 0i8;
            for (q, p) in vertices.iter().enumerate() {
                if f.contains(&q) {
                    continue;
                }
                let s = orient(a, b, c, p);
                if s == 0 || (side != 0 && s != side) {
                    return Err(Error::InvalidPolytope(format!(
                        "facet {fi} does not strictly support vertex {q}"
                    )));
                }
                side = s;
            }
            oriented.push(if side > 0 { [f[0], f[2], f[1]] } else { *f });
        }
        if !closed_connected_surface(&oriented) {
            return Err(Error::InvalidPolytope("facets do not form a closed 2-sphere".into()));
        }
        let mut degree = vec![0usize; n];
        for f in &oriented {
            for &i in f {
                degree[i] += 1;
            }
        }
        if let Some(v) = degree.iter().position(|&d| d < 3) {
            return Err(Error::InvalidPolytope(format!(
                "vertex {v} lies in fewer than 3 facets"
            )));
        }
        let p = SimplicialPolytope {
            vertices,
            facets: oriented,
        };
        let [f0, f1, f2] = p.f_vector();
        if f0 as i64 - f1 as i64 + f2 as i64 != 2 || f2 != 2 * (f0 - 2) {
            return Err(Error::InvalidPolytope(format!(
                "f-vector ({f0}, {f1}, {f2}) violates the Euler relation"
            )));
        }
        Ok(p)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[[usize; 3]] {
        &self.facets
    }

    pub fn edges(&self) -> BTreeSet<[usize; 2]> {
        let mut edges = BTreeSet::new();
        for f in &self.facets {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                edges.insert([a.min(b), a.max(b)]);
            }
        }
        edges
    }

    pub fn f_vector(&self) -> [usize; 3] {
        [self.vertices.len(), self.edges().len(), self.facets.len()]
    }

    pub fn centroid(&self) -> Point {
        Point::centroid(&self.vertices)
    }

    pub fn volume(&self) -> Rat {
        let g = self.centroid();
        self.facets.iter().fold(Rat::zero(), |acc, f| {
            let [a, b, c] = f.map(|i| &self.vertices[i]);
            acc + tetra_volume(a, b, c, &g)
        })
    }
}

/// Position of a cell in the four-type taxonomy of the 23-cell building block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellType {
    /// Outer boundary triangle plus three edge points.
    Outer = 1,
    /// Inner-octahedron facet plus three edge points.
    Inner = 2,
    /// Outer vertex, inner vertex and the four surrounding edge points.
    Axial = 3,
    /// The inner octahedron itself.
    Core = 4,
}

impl CellType {
    pub fn tag(self) -> u8 {
        self as u8
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            1 => Some(CellType::Outer),
            2 => Some(CellType::Inner),
            3 => Some(CellType::Axial),
            4 => Some(CellType::Core),
            _ => None,
        }
    }
}

/// An octahedral cell: six vertex-pool references in pairing order, so that
/// `(v[0], v[1])`, `(v[2], v[3])` and `(v[4], v[5])` are the antipodal pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OctaCell {
    pub verts: [usize; 6],
    pub kind: Option<CellType>,
}

impl OctaCell {
    pub fn new(verts: [usize; 6], kind: Option<CellType>) -> Self {
        OctaCell { verts, kind }
    }

    pub fn pairs(&self) -> [(usize, usize); 3] {
        let v = &self.verts;
        [(v[0], v[1]), (v[2], v[3]), (v[4], v[5])]
    }

    /// The eight one-vertex-per-pair triangles (unoriented).
    pub fn facets(&self) -> [[usize; 3]; 8] {
        let v = &self.verts;
        std::array::from_fn(|m| [v[m & 1], v[2 + ((m >> 1) & 1)], v[4 + ((m >> 2) & 1)]])
    }

    /// The twelve edges: every pair of vertices that is not antipodal.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        let v = &self.verts;
        let mut out = Vec::with_capacity(12);
        for i in 0..6 {
            for j in (i + 1)..6 {
                if i / 2 != j / 2 {
                    out.push([v[i].min(v[j]), v[i].max(v[j])]);
                }
            }
        }
        out
    }

    pub fn points(&self, pool: &[Point]) -> [Point; 6] {
        self.verts.map(|i| pool[i].clone())
    }

    /// Whether `i` and `j` (pool indices) are antipodal in this cell.
    pub fn antipodal(&self, i: usize, j: usize) -> bool {
        self.pairs().iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    pub fn is_certified(&self, pool: &[Point]) -> bool {
        let pts = self.points(pool);
        is_cross_polytope(&pts, [(0, 1), (2, 3), (4, 5)])
    }

    pub fn volume(&self, pool: &[Point]) -> Rat {
        octahedron_volume(&self.points(pool), [(0, 1), (2, 3), (4, 5)])
    }
}

/// Volume of a certified octahedron, summed over its eight facets from the
/// vertex centroid.
pub fn octahedron_volume(points: &[Point; 6], pairs: [(usize, usize); 3]) -> Rat {
    let g = Point::centroid(points.iter());
    one_per_pair(pairs).iter().fold(Rat::zero(), |acc, t| {
        acc + tetra_volume(&points[t[0]], &points[t[1]], &points[t[2]], &g)
    })
}

fn one_per_pair(pairs: [(usize, usize); 3]) -> [[usize; 3]; 8] {
    let pick = |p: (usize, usize), bit: usize| if bit == 0 { p.0 } else { p.1 };
    std::array::from_fn(|m| {
        [
            pick(pairs[0], m & 1),
            pick(pairs[1], (m >> 1) & 1),
            pick(pairs[2], (m >> 2) & 1),
        ]
    })
}

/// Whether six points with a proposed antipodal pairing span a convex
/// octahedron with exactly that pairing.
///
/// Holds iff each of the eight triangles taking one point from every pair
/// has the remaining three points strictly on one side of its plane. Those
/// eight triangles then close up into the whole hull boundary, so all six
/// points are vertices, the hull is simplicial and no pair is an edge.
pub fn is_cross_polytope(points: &[Point; 6], pairs: [(usize, usize); 3]) -> bool {
    let mut seen = [false; 6];
    for &(a, b) in &pairs {
        if a >= 6 || b >= 6 || seen[a] || seen[b] || a == b {
            return false;
        }
        seen[a] = true;
        seen[b] = true;
    }
    for tri in one_per_pair(pairs) {
        let [a, b, c] = tri.map(|i| &points[i]);
        let mut side = 0i8;
        for (q, p) in points.iter().enumerate() {
            if tri.contains(&q) {
                continue;
            }
            let s = orient(a, b, c, p);
            if s == 0 || (side != 0 && s != side) {
                return false;
            }
            side = s;
        }
    }
    true
}

/// A geometric complex of octahedra over a shared vertex pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossPolytopalComplex {
    vertices: Vec<Point>,
    cells: Vec<OctaCell>,
    boundary: Vec<[usize; 3]>,
}

impl CrossPolytopalComplex {
    /// Builds the complex and derives its boundary. Cell vertex references
    /// must be in range; geometric validity is checked separately by
    /// [`validate_complex`].
    pub fn new(vertices: Vec<Point>, cells: Vec<OctaCell>) -> Result<Self> {
        for (ci, c) in cells.iter().enumerate() {
            if c.verts.iter().any(|&v| v >= vertices.len()) {
                return Err(Error::InvalidPolytope(format!("cell {ci} references a missing vertex")));
            }
            let distinct: BTreeSet<_> = c.verts.iter().collect();
            if distinct.len() != 6 {
                return Err(Error::InvalidPolytope(format!("cell {ci} repeats a vertex")));
            }
        }
        let boundary = derive_boundary(&vertices, &cells);
        Ok(CrossPolytopalComplex {
            vertices,
            cells,
            boundary,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn cells(&self) -> &[OctaCell] {
        &self.cells
    }

    /// Triangles lying in exactly one cell, oriented away from that cell.
    pub fn boundary(&self) -> &[[usize; 3]] {
        &self.boundary
    }

    /// Map from each triangle to the cells containing it.
    pub fn triangle_incidence(&self) -> BTreeMap<TriKey, Vec<usize>> {
        let mut inc: BTreeMap<TriKey, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.cells.iter().enumerate() {
            for f in c.facets() {
                inc.entry(tri_key(f)).or_default().push(ci);
            }
        }
        inc
    }

    /// `(f0, f1, f2, f3)` after identification of shared faces.
    pub fn f_vector(&self) -> [usize; 4] {
        let mut verts = BTreeSet::new();
        let mut edges = BTreeSet::new();
        let mut tris = BTreeSet::new();
        for c in &self.cells {
            verts.extend(c.verts);
            edges.extend(c.edges());
            tris.extend(c.facets().map(tri_key));
        }
        [verts.len(), edges.len(), tris.len(), self.cells.len()]
    }

    pub fn type_census(&self) -> [usize; 4] {
        let mut census = [0; 4];
        for c in &self.cells {
            if let Some(k) = c.kind {
                census[k.tag() as usize - 1] += 1;
            }
        }
        census
    }

    pub fn total_volume(&self) -> Rat {
        self.cells
            .iter()
            .fold(Rat::zero(), |acc, c| acc + c.volume(&self.vertices))
    }

    /// Index of the vertex at exactly this point, if any.
    pub fn vertex_index(&self) -> HashMap<&Point, usize> {
        let mut idx = HashMap::with_capacity(self.vertices.len());
        for (i, p) in self.vertices.iter().enumerate() {
            idx.entry(p).or_insert(i);
        }
        idx
    }
}

fn derive_boundary(vertices: &[Point], cells: &[OctaCell]) -> Vec<[usize; 3]> {
    let mut inc: BTreeMap<TriKey, (usize, [usize; 3], u32)> = BTreeMap::new();
    for (ci, c) in cells.iter().enumerate() {
        for f in c.facets() {
            let e = inc.entry(tri_key(f)).or_insert((ci, f, 0));
            e.2 += 1;
        }
    }
    let mut out = Vec::new();
    for (_, (ci, f, count)) in inc {
        if count != 1 {
            continue;
        }
        let cell = &cells[ci];
        let inner = cell
            .verts
            .iter()
            .find(|v| !f.contains(v))
            .expect("octahedron has vertices off every facet");
        let [a, b, c] = f.map(|i| &vertices[i]);
        let s = orient(a, b, c, &vertices[*inner]);
        out.push(if s > 0 { [f[0], f[2], f[1]] } else { f });
    }
    out
}
