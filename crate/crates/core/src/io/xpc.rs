use std::fmt::Write;

use crate::complex::{CellType, CrossPolytopalComplex, OctaCell};
use crate::error::{Error, Result};
use crate::geom::{parse_rat, Point};

use super::content_lines;

/// Serializes a complex:
///
/// ```text
/// xpc 1
/// vertices N
/// x y z            (exact rationals, one vertex per line)
/// cells M
/// v0 v1 v2 v3 v4 v5 [tag]   (antipodal pairs v0v1, v2v3, v4v5)
/// boundary K
/// a b c            (outward-oriented boundary triangles)
/// ```
pub fn write_xpc(c: &CrossPolytopalComplex) -> String {
    let mut out = String::from("xpc 1\n");
    let _ = writeln!(out, "vertices {}", c.vertices().len());
    for v in c.vertices() {
        let _ = writeln!(out, "{} {} {}", v.x, v.y, v.z);
    }
    let _ = writeln!(out, "cells {}", c.cells().len());
    for cell in c.cells() {
        let v = cell.verts;
        let _ = write!(out, "{} {} {} {} {} {}", v[0], v[1], v[2], v[3], v[4], v[5]);
        if let Some(kind) = cell.kind {
            let _ = write!(out, " {}", kind.tag());
        }
        out.push('\n');
    }
    let _ = writeln!(out, "boundary {}", c.boundary().len());
    for [a, b, t] in c.boundary() {
        let _ = writeln!(out, "{a} {b} {t}");
    }
    out
}

fn section<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    last: usize,
    keyword: &str,
) -> Result<(usize, usize)> {
    let (no, l) = lines
        .next()
        .ok_or_else(|| Error::parse(last, format!("missing `{keyword}` section")))?;
    let mut toks = l.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(Error::parse(no, format!("expected `{keyword} <count>`")));
    }
    let n = toks
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|_| toks.next().is_none())
        .ok_or_else(|| Error::parse(no, format!("expected `{keyword} <count>`")))?;
    Ok((no, n))
}

fn index(no: usize, tok: &str, bound: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::parse(no, format!("invalid index `{tok}`")))?;
    if i >= bound {
        return Err(Error::parse(no, format!("index {i} out of range")));
    }
    Ok(i)
}

/// Parses the format written by [`write_xpc`]. A boundary block, when present,
/// must match the boundary derived from the cells.
pub fn parse_xpc(text: &str) -> Result<CrossPolytopalComplex> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "xpc 1")) => {}
        Some((no, _)) => return Err(Error::parse(no, "expected header `xpc 1`")),
        None => return Err(Error::parse(1, "empty file")),
    }
    let (mut last, nv) = section(&mut lines, 1, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (no, l) = lines.next().ok_or_else(|| Error::parse(last, "too few vertices"))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(no, "expected 3 coordinates"));
        }
        let c = toks
            .iter()
            .map(|t| parse_rat(t).map_err(|e| Error::parse(no, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let [x, y, z]: [_; 3] = c.try_into().expect("three coordinates");
        vertices.push(Point::new(x, y, z));
        last = no;
    }
    let (no, nc) = section(&mut lines, last, "cells")?;
    last = no;
    let mut cells = Vec::with_capacity(nc);
    for _ in 0..nc {
        let (no, l) = lines.next().ok_or_else(|| Error::parse(last, "too few cells"))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 6 && toks.len() != 7 {
            return Err(Error::parse(no, "expected 6 vertex indices and an optional type tag"));
        }
        let mut verts = [0usize; 6];
        for (slot, tok) in verts.iter_mut().zip(&toks) {
            *slot = index(no, tok, nv)?;
        }
        let kind = match toks.get(6) {
            None => None,
            Some(t) => Some(
                t.parse()
                    .ok()
                    .and_then(CellType::from_tag)
                    .ok_or_else(|| Error::parse(no, format!("unknown cell type `{t}`")))?,
            ),
        };
        cells.push(OctaCell::new(verts, kind));
        last = no;
    }
    let boundary = match lines.next() {
        None => None,
        Some((no, l)) => {
            let mut once = std::iter::once((no, l)).chain(&mut lines);
            let (no, nb) = section(&mut once, last, "boundary")?;
            last = no;
            let mut tris = Vec::with_capacity(nb);
            for _ in 0..nb {
                let (no, l) = once
                    .next()
                    .ok_or_else(|| Error::parse(last, "too few boundary triangles"))?;
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(Error::parse(no, "expected 3 vertex indices"));
                }
                tris.push([
                    index(no, toks[0], nv)?,
                    index(no, toks[1], nv)?,
                    index(no, toks[2], nv)?,
                ]);
                last = no;
            }
            if let Some((no, _)) = once.next() {
                return Err(Error::parse(no, "unexpected trailing content"));
            }
            Some(tris)
        }
    };
    let complex = CrossPolytopalComplex::new(vertices, cells).map_err(|e| match e {
        Error::InvalidPolytope(m) => Error::parse(last, m),
        other => other,
    })?;
    if let Some(tris) = boundary {
        if tris != complex.boundary() {
            return Err(Error::parse(last, "boundary block does not match the cells"));
        }
    }
    Ok(complex)
}
