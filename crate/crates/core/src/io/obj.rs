use std::fmt::Write;

use crate::complex::CrossPolytopalComplex;
use crate::geom::{orient, to_f64};

/// Triangle soup of every cell facet, oriented away from its cell, with
/// coordinates rounded to `f64`.
pub fn write_obj(c: &CrossPolytopalComplex) -> String {
    let mut out = String::new();
    for v in c.vertices() {
        let _ = writeln!(out, "v {} {} {}", to_f64(&v.x), to_f64(&v.y), to_f64(&v.z));
    }
    let pts = c.vertices();
    for cell in c.cells() {
        for f in cell.facets() {
            let inner = cell
                .verts
                .iter()
                .find(|v| !f.contains(v))
                .expect("vertex off the facet");
            let [a, b, t] = if orient(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[*inner]) > 0 {
                [f[0], f[2], f[1]]
            } else {
                f
            };
            let _ = writeln!(out, "f {} {} {}", a + 1, b + 1, t + 1);
        }
    }
    out
}
