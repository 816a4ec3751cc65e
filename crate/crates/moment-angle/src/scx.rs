//! The `.scx` text format for simplicial complexes.
//!
//! ```text
//! # comment to end of line
//! vertices 5
//! f 1 2
//! f 2 3
//! ```
//!
//! The first nonblank line declares the vertex count, each following
//! nonblank line one facet (1-indexed, any order). The writer is canonical:
//! facets sorted lexicographically with ascending vertices, LF endings, no
//! comments — reading the writer's output and writing again is bit-exact.

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Parses the `.scx` format. Errors carry the 1-based line number.
pub fn read_str(input: &str) -> Result<SimplicialComplex> {
    let mut m: Option<u32> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().expect("nonempty line");
        match m {
            None => {
                if head != "vertices" {
                    return Err(Error::input(format!(
                        "line {line_no}: expected `vertices <m>`, found {head:?}"
                    )));
                }
                let count = parts
                    .next()
                    .ok_or_else(|| Error::input(format!("line {line_no}: missing vertex count")))?;
                let count: u32 = count.parse().map_err(|_| {
                    Error::input(format!("line {line_no}: bad vertex count {count:?}"))
                })?;
                if parts.next().is_some() {
                    return Err(Error::input(format!(
                        "line {line_no}: trailing tokens after vertex count"
                    )));
                }
                m = Some(count);
            }
            Some(_) => {
                if head != "f" {
                    return Err(Error::input(format!(
                        "line {line_no}: expected `f <v1> <v2> ...`, found {head:?}"
                    )));
                }
                let mut facet = Vec::new();
                for tok in parts {
                    let v: u32 = tok.parse().map_err(|_| {
                        Error::input(format!("line {line_no}: bad vertex index {tok:?}"))
                    })?;
                    facet.push(v);
                }
                if facet.is_empty() {
                    return Err(Error::input(format!(
                        "line {line_no}: facet line without vertices"
                    )));
                }
                facets.push(facet);
            }
        }
    }
    let m = m.ok_or_else(|| Error::input("empty input: missing `vertices <m>` line"))?;
    SimplicialComplex::from_facets(m, &facets)
        .map_err(|e| match e {
            Error::Input(msg) => Error::input(format!("facet list: {msg}")),
            other => other,
        })
}

/// Canonical `.scx` text for a complex: facets sorted lexicographically,
/// vertices ascending within each facet.
pub fn write_string(k: &SimplicialComplex) -> String {
    let mut out = format!("vertices {}\n", k.vertex_count());
    let mut facets: Vec<Vec<u32>> =
        k.facets().iter().map(|f| f.vertices().to_vec()).collect();
    facets.sort();
    for facet in facets {
        if facet.is_empty() {
            continue;
        }
        let verts: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("f {}\n", verts.join(" ")));
    }
    out
}
