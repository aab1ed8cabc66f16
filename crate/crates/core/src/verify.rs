//! Independent post-hoc certification of a finished complex.
//!
//! Nothing here reuses the construction code; the checks only read the
//! complex (and optionally the input polytope) through the exact predicates.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::complex::{tri_key, validate_complex, CrossPolytopalComplex, SimplicialPolytope, ValidationLevel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Every executed check, passed or not, in execution order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check: `name \t pass|fail \t detail`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let detail = c.detail.replace(['\t', '\n'], " ");
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                c.name,
                if c.passed { "pass" } else { "fail" },
                detail
            ));
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}

/// Proper 3-coloring of the skeleton by forced propagation across triangles
/// sharing an edge. Within an edge-connected family of triangles the
/// coloring is unique up to permutation, so propagation is exact.
pub fn check_balanced_skeleton(c: &CrossPolytopalComplex) -> Check {
    const NAME: &str = "balanced_skeleton";
    let tris: Vec<[usize; 3]> = c
        .cells()
        .iter()
        .flat_map(|cell| cell.facets().map(tri_key))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if tris.is_empty() {
        return Check::fail(NAME, "empty complex");
    }
    let mut by_edge: HashMap<[usize; 2], Vec<usize>> = HashMap::new();
    for (t, tri) in tris.iter().enumerate() {
        for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            by_edge.entry([a, b]).or_default().push(t);
        }
    }
    let mut color: HashMap<usize, u8> = HashMap::new();
    let mut seen = vec![false; tris.len()];
    seen[0] = true;
    for (k, &v) in tris[0].iter().enumerate() {
        color.insert(v, k as u8 + 1);
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        let tri = tris[t];
        for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            let forced = 6 - color[&a] - color[&b];
            for &nb in &by_edge[&[a, b]] {
                if seen[nb] {
                    continue;
                }
                let w = *tris[nb].iter().find(|&&v| v != a && v != b).expect("third vertex");
                match color.get(&w) {
                    Some(&cw) if cw != forced => {
                        return Check::fail(
                            NAME,
                            format!("propagation contradiction at vertex {w} (triangle {:?})", tris[nb]),
                        );
                    }
                    Some(_) => {}
                    None => {
                        color.insert(w, forced);
                    }
                }
                seen[nb] = true;
                queue.push_back(nb);
            }
        }
    }
    if let Some(t) = seen.iter().position(|s| !s) {
        return Check::fail(
            NAME,
            format!("skeleton triangles are not edge-connected (triangle {:?})", tris[t]),
        );
    }
    // Every edge lies in some triangle, but re-check edges explicitly.
    for tri in &tris {
        let cs = tri.map(|v| color[&v]);
        if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
            return Check::fail(NAME, format!("improperly colored triangle {tri:?}"));
        }
    }
    Check::pass(NAME, format!("3-coloring of {} vertices found", color.len()))
}

/// Stellar-subdivide every cell at its vertex average and require every
/// interior edge of the resulting triangulation to have an even cycle as
/// link: a 4-cycle for edges through a cell center, a 2k-cycle for an
/// original edge lying in k cells.
pub fn check_even_links(c: &CrossPolytopalComplex) -> Check {
    const NAME: &str = "even_links";
    let base = c.vertices().len();
    let mut links: BTreeMap<[usize; 2], Vec<[usize; 2]>> = BTreeMap::new();
    let mut cells_on_edge: HashMap<[usize; 2], usize> = HashMap::new();
    for (ci, cell) in c.cells().iter().enumerate() {
        let center = base + ci;
        for e in cell.edges() {
            *cells_on_edge.entry(e).or_default() += 1;
        }
        for f in cell.facets() {
            let tet = [center, f[0], f[1], f[2]];
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let rest: Vec<usize> = (0..4).filter(|&k| k != i && k != j).map(|k| tet[k]).collect();
                    let e = [tet[i].min(tet[j]), tet[i].max(tet[j])];
                    links.entry(e).or_default().push([rest[0], rest[1]]);
                }
            }
        }
    }
    let boundary_edges: BTreeSet<[usize; 2]> = c
        .boundary()
        .iter()
        .flat_map(|t| [[t[0], t[1]], [t[1], t[2]], [t[0], t[2]]])
        .map(|[a, b]| [a.min(b), a.max(b)])
        .collect();
    let mut checked = 0usize;
    for (edge, link) in &links {
        if boundary_edges.contains(edge) {
            continue;
        }
        let expected = if edge[1] >= base {
            4
        } else {
            2 * cells_on_edge.get(edge).copied().unwrap_or(0)
        };
        match cycle_length(link) {
            Some(len) if len == expected && len % 2 == 0 => checked += 1,
            Some(len) => {
                return Check::fail(
                    NAME,
                    format!("edge {edge:?}: link is a {len}-cycle, expected {expected}"),
                );
            }
            None => return Check::fail(NAME, format!("edge {edge:?}: link is not a single cycle")),
        }
    }
    Check::pass(NAME, format!("{checked} interior edges have even-cycle links"))
}

/// Length of the cycle formed by `edges`, if they form exactly one simple
/// cycle.
fn cycle_length(edges: &[[usize; 2]]) -> Option<usize> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &[a, b] in edges {
        if a == b {
            return None;
        }
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() != 2) || edges.len() < 3 {
        return None;
    }
    let start = *adj.keys().min()?;
    let (mut prev, mut cur) = (start, adj[&start][0]);
    let mut len = 1;
    while cur != start {
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
        len += 1;
        if len > edges.len() {
            return None;
        }
    }
    (len == edges.len()).then_some(len)
}

/// The complex's boundary equals the polytope's facet complex, with vertices
/// identified by exact point equality.
pub fn check_proper(c: &CrossPolytopalComplex, p: &SimplicialPolytope) -> Check {
    const NAME: &str = "proper";
    let index = c.vertex_index();
    let mut mapped = Vec::with_capacity(p.vertices().len());
    for (i, v) in p.vertices().iter().enumerate() {
        match index.get(v) {
            Some(&j) => mapped.push(j),
            None => return Check::fail(NAME, format!("polytope vertex {i} {v} is not a complex vertex")),
        }
    }
    let expected: BTreeSet<[usize; 3]> = p.facets().iter().map(|f| tri_key(f.map(|i| mapped[i]))).collect();
    let actual: BTreeSet<[usize; 3]> = c.boundary().iter().map(|&t| tri_key(t)).collect();
    if expected == actual {
        Check::pass(NAME, format!("boundary equals the {} input facets", expected.len()))
    } else {
        let extra = actual.difference(&expected).count();
        let missing = expected.difference(&actual).count();
        Check::fail(
            NAME,
            format!("{extra} boundary triangles not in the input, {missing} input facets missing"),
        )
    }
}

/// Cell count `23 (f0 - 2)`, the Euler count `f2 = 2 (f0 - 2)`, and exact
/// volume conservation.
pub fn check_counts_and_volume(c: &CrossPolytopalComplex, p: &SimplicialPolytope) -> Check {
    const NAME: &str = "counts_and_volume";
    let [f0, _, f2] = p.f_vector();
    let f3 = c.cells().len();
    let expected = 23 * (f0 - 2);
    if f3 != expected {
        return Check::fail(NAME, format!("f3 = {f3}, expected 23 (f0 - 2) = {expected}"));
    }
    if f2 != 2 * (f0 - 2) || f2 % 2 != 0 {
        return Check::fail(NAME, format!("f2 = {f2} with f0 = {f0}"));
    }
    let vc = c.total_volume();
    let vp = p.volume();
    if vc != vp {
        return Check::fail(NAME, format!("cell volumes sum to {vc}, polytope volume is {vp}"));
    }
    Check::pass(NAME, format!("f3 = {f3} = 23 ({f0} - 2); volume {vp} conserved"))
}

/// The full battery: complex validation, balanced skeleton, even links, and
/// when the input polytope is known, properness plus counts and volume.
pub fn verify_complex(
    c: &CrossPolytopalComplex,
    against: Option<&SimplicialPolytope>,
    level: ValidationLevel,
) -> VerificationReport {
    let mut report = validate_complex(c, level);
    let (skeleton, links) = rayon::join(|| check_balanced_skeleton(c), || check_even_links(c));
    report.push(skeleton);
    report.push(links);
    if let Some(p) = against {
        report.push(check_proper(c, p));
        report.push(check_counts_and_volume(c, p));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{CellType, OctaCell};
    use crate::geom::Point;

    fn octa(shift: i64) -> Vec<Point> {
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
            .iter()
            .map(|&(x, y, z)| Point::from_ints(x + shift, y, z))
            .collect()
    }

    fn single() -> CrossPolytopalComplex {
        CrossPolytopalComplex::new(octa(0), vec![OctaCell::new([0, 1, 2, 3, 4, 5], Some(CellType::Core))]).unwrap()
    }

    /// Brute-force 3-colorability of the cell graph.
    fn three_colorable(c: &CrossPolytopalComplex) -> bool {
        let verts: Vec<usize> = c
            .cells()
            .iter()
            .flat_map(|cl| cl.verts)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<[usize; 2]> = c.cells().iter().flat_map(|cl| cl.edges()).collect();
        let n = verts.len();
        (0..3usize.pow(n as u32)).any(|mut code| {
            let mut col = vec![0; n];
            for slot in col.iter_mut() {
                *slot = code % 3;
                code /= 3;
            }
            edges.iter().all(|[a, b]| col[pos[a]] != col[pos[b]])
        })
    }

    #[test]
    fn single_cell_passes_both_necessity_checks() {
        let c = single();
        assert!(check_balanced_skeleton(&c).passed);
        let links = check_even_links(&c);
        assert!(links.passed, "{}", links.detail);
        // 6 center edges, every original edge is on the boundary
        assert!(links.detail.starts_with("6 "), "{}", links.detail);
    }

    #[test]
    fn antipodal_edge_breaks_balance() {
        // second cell uses A's antipodal vertices 0 and 1 as an edge
        let mut verts = octa(0);
        verts.extend(octa(10).into_iter().skip(2));
        let cells = vec![
            OctaCell::new([0, 1, 2, 3, 4, 5], None),
            OctaCell::new([0, 6, 1, 7, 8, 9], None),
        ];
        let c = CrossPolytopalComplex::new(verts, cells).unwrap();
        assert!(!three_colorable(&c));
        assert!(!check_balanced_skeleton(&c).passed);
        assert!(three_colorable(&single()));
    }

    #[test]
    fn cycle_detection() {
        assert_eq!(cycle_length(&[[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]]), Some(6));
        assert_eq!(cycle_length(&[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]]), None);
        assert_eq!(cycle_length(&[[0, 1], [1, 2]]), None);
    }

    #[test]
    fn single_cell_is_proper_against_itself() {
        let c = single();
        let poly = SimplicialPolytope::new(octa(0), c.boundary().to_vec()).unwrap();
        assert!(check_proper(&c, &poly).passed);
        // counts fail: one cell is not 23 (6 - 2)
        assert!(!check_counts_and_volume(&c, &poly).passed);
    }

    #[test]
    fn tsv_has_one_line_per_check() {
        let r = verify_complex(&single(), None, ValidationLevel::Full);
        assert!(r.passed(), "{r}");
        let tsv = r.to_tsv();
        assert_eq!(tsv.lines().count(), r.checks.len());
        assert!(tsv.lines().all(|l| l.split('\t').count() == 3));
    }
}
