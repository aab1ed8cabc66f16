use std::fmt::Write;

use crate::complex::SimplicialPolytope;
use crate::error::{Error, Result};
use crate::geom::{parse_rat, Point};

use super::content_lines;

fn parse_count(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

/// Parses an OFF file of triangles. Coordinates may be decimals (read as
/// exact base-10 rationals) or `p/q` tokens. Facets are reoriented outward.
pub fn parse_off(text: &str) -> Result<SimplicialPolytope> {
    let mut lines = content_lines(text).peekable();
    let (first_no, first) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let mut header: Vec<&str> = first.split_whitespace().collect();
    let mut header_line = first_no;
    if header[0] == "OFF" {
        header.remove(0);
        if header.is_empty() {
            let (n, l) = lines
                .next()
                .ok_or_else(|| Error::parse(first_no, "missing counts after OFF"))?;
            header = l.split_whitespace().collect();
            header_line = n;
        }
    } else if header[0].starts_with("OFF") || header[0].chars().next().is_some_and(char::is_alphabetic) {
        return Err(Error::parse(first_no, format!("unsupported header `{}`", header[0])));
    }
    let mut it = header.iter().copied();
    let nv = parse_count(header_line, it.next(), "vertex count")?;
    let nf = parse_count(header_line, it.next(), "facet count")?;

    let mut vertices = Vec::with_capacity(nv);
    for k in 0..nv {
        let (no, l) = lines
            .next()
            .ok_or_else(|| Error::parse(header_line, format!("expected {nv} vertices, found {k}")))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(
                no,
                format!("expected 3 coordinates, found {}", toks.len()),
            ));
        }
        let c = toks
            .iter()
            .map(|t| parse_rat(t).map_err(|e| Error::parse(no, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let [x, y, z]: [_; 3] = c.try_into().expect("three coordinates");
        vertices.push(Point::new(x, y, z));
    }
    let mut facets = Vec::with_capacity(nf);
    for k in 0..nf {
        let (no, l) = lines
            .next()
            .ok_or_else(|| Error::parse(header_line, format!("expected {nf} facets, found {k}")))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let arity = parse_count(no, toks.first().copied(), "facet size")?;
        if arity != 3 {
            return Err(Error::parse(
                no,
                format!("facet has {arity} vertices, only triangles are supported"),
            ));
        }
        if toks.len() < 4 {
            return Err(Error::parse(no, "facet lists fewer than 3 indices"));
        }
        let mut f = [0usize; 3];
        for (slot, tok) in f.iter_mut().zip(&toks[1..4]) {
            *slot = parse_count(no, Some(tok), "vertex index")?;
            if *slot >= nv {
                return Err(Error::parse(no, format!("vertex index {slot} out of range")));
            }
        }
        facets.push(f);
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, "unexpected trailing content"));
    }
    SimplicialPolytope::new(vertices, facets)
}

/// Writes exact coordinates as rational tokens.
pub fn write_off(p: &SimplicialPolytope) -> String {
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} 0", p.vertices().len(), p.facets().len());
    for v in p.vertices() {
        let _ = writeln!(out, "{} {} {}", v.x, v.y, v.z);
    }
    for [a, b, c] in p.facets() {
        let _ = writeln!(out, "3 {a} {b} {c}");
    }
    out
}
