//! Finite cell complexes with integer boundary matrices.
//!
//! Cells are graded by dimension and carry structured labels (cubical
//! sign-vectors, corner-chamber pairs, subdivision states, product tuples,
//! chamber pairs). Boundaries are stored in sparse column form; `∂∂ = 0` is
//! checked by [`CellComplex::validate`]. Complexes are immutable after
//! construction, so concurrent reads need no synchronization.

use crate::error::{Error, Result};
use crate::simplicial::{FlagWitness, SimplicialComplex};
use crate::snf::IntMatrix;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap, HashSet};

/// One coordinate of a cell of the interval `[-1,1]` subdivided at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoordState {
    /// The vertex -1.
    Neg,
    /// The vertex 0.
    Zero,
    /// The vertex +1.
    Pos,
    /// The edge [-1, 0].
    NegEdge,
    /// The edge [0, +1].
    PosEdge,
}

impl CoordState {
    pub fn token(self) -> &'static str {
        match self {
            CoordState::Neg => "m",
            CoordState::Zero => "z",
            CoordState::Pos => "p",
            CoordState::NegEdge => "mz",
            CoordState::PosEdge => "zp",
        }
    }

    pub fn is_edge(self) -> bool {
        matches!(self, CoordState::NegEdge | CoordState::PosEdge)
    }

    /// Reflection of the coordinate under the sign flip of `[-1,1]`.
    pub fn flipped(self) -> Self {
        match self {
            CoordState::Neg => CoordState::Pos,
            CoordState::Pos => CoordState::Neg,
            CoordState::Zero => CoordState::Zero,
            CoordState::NegEdge => CoordState::PosEdge,
            CoordState::PosEdge => CoordState::NegEdge,
        }
    }
}

/// Structured tag attached to a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellLabel {
    /// Cubical cell of `[-1,1]^m`: free coordinates `free`, and a sign for
    /// every other coordinate, in coordinate order.
    Cubical { free: Vec<u32>, signs: Vec<(u32, i8)> },
    /// Cell of the chamber `cc(K)` in `[0,1]^m`: free coordinates, the
    /// coordinates pinned at 0, everything else pinned at 1.
    Corner { free: Vec<u32>, zeros: Vec<u32> },
    /// Cell of the coordinatewise subdivision of `[-1,1]^m`, one state per
    /// coordinate.
    Subdivided(Vec<CoordState>),
    /// Product of factor cells, one id per coordinate.
    Product(Vec<String>),
    /// Copy of a chamber cell inside a basic construction.
    Chamber { element: String, cell: String },
    Anonymous,
}

/// A single cell: stable id, dimension, and label.
#[derive(Clone, Debug)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub label: CellLabel,
}

/// A finite cell complex with integer boundary matrices in sparse column
/// form. Within each dimension, cells are sorted by id.
#[derive(Clone, Debug)]
pub struct CellComplex {
    cells: Vec<Vec<Cell>>,
    /// `boundary[d][col]` lists `(row, coeff)` pairs into dimension `d - 1`,
    /// sorted by row; `boundary[0]` holds empty columns.
    boundary: Vec<Vec<Vec<(usize, i64)>>>,
    index: HashMap<String, (usize, usize)>,
}

/// A pending cell: id, label, and faces by id with coefficients.
type PendingCell = (String, CellLabel, Vec<(String, i64)>);

/// Incremental builder; add cells bottom-up (faces before cofaces).
#[derive(Default)]
pub struct CellComplexBuilder {
    cells: Vec<Vec<PendingCell>>,
}

impl CellComplexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a cell; `faces` lists (face id, incidence coefficient) pairs into
    /// dimension `dim - 1`.
    pub fn add_cell(
        &mut self,
        dim: usize,
        id: impl Into<String>,
        label: CellLabel,
        faces: Vec<(String, i64)>,
    ) {
        while self.cells.len() <= dim {
            self.cells.push(Vec::new());
        }
        self.cells[dim].push((id.into(), label, faces));
    }

    pub fn finalize(self) -> Result<CellComplex> {
        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(self.cells.len());
        let mut index: HashMap<String, (usize, usize)> = HashMap::new();
        for (dim, layer) in self.cells.iter().enumerate() {
            let mut sorted: Vec<&PendingCell> = layer.iter().collect();
            sorted.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Vec::with_capacity(sorted.len());
            for (idx, (id, label, _)) in sorted.into_iter().enumerate() {
                if index.insert(id.clone(), (dim, idx)).is_some() {
                    return Err(Error::structure(format!("duplicate cell id {id}")));
                }
                out.push(Cell { id: id.clone(), dim, label: label.clone() });
            }
            cells.push(out);
        }
        let mut boundary: Vec<Vec<Vec<(usize, i64)>>> = Vec::with_capacity(cells.len());
        for (dim, layer) in self.cells.iter().enumerate() {
            let mut cols = vec![Vec::new(); layer.len()];
            for (id, _, faces) in layer {
                let (_, col) = index[id];
                let mut entries: BTreeMap<usize, i64> = BTreeMap::new();
                for (face_id, coeff) in faces {
                    let Some(&(fdim, fidx)) = index.get(face_id) else {
                        return Err(Error::structure(format!(
                            "cell {id}: unknown face {face_id}"
                        )));
                    };
                    if fdim + 1 != dim {
                        return Err(Error::structure(format!(
                            "cell {id} (dim {dim}) has face {face_id} of dim {fdim}"
                        )));
                    }
                    *entries.entry(fidx).or_insert(0) += coeff;
                }
                entries.retain(|_, c| *c != 0);
                cols[col] = entries.into_iter().collect();
            }
            boundary.push(cols);
        }
        Ok(CellComplex { cells, boundary, index })
    }
}

/// Report from [`CellComplex::validate`]; empty `violations` means the
/// complex is well formed.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Outcome of the Gromov link condition check.
#[derive(Clone, Debug)]
pub enum GromovVerdict {
    /// Every vertex link is flag.
    Pass { vertices_checked: usize },
    /// Some vertex link has a missing face.
    Fail { vertex: String, witness: FlagWitness },
}

impl GromovVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, GromovVerdict::Pass { .. })
    }
}

/// The link of a vertex in a cubical complex: a simplicial complex with one
/// j-simplex per incident (j+1)-cell.
#[derive(Clone, Debug)]
pub struct LinkComplex {
    pub complex: SimplicialComplex,
    /// Link vertex `j` (1-based) corresponds to this incident edge.
    pub edge_of_vertex: Vec<String>,
    /// Every nonempty simplex of the link, mapped to its incident cell.
    pub cell_of_simplex: BTreeMap<Vec<u32>, String>,
}

impl CellComplex {
    pub fn empty() -> Self {
        CellComplexBuilder::new().finalize().expect("empty complex")
    }

    /// Highest dimension that carries a cell; -1 for the empty complex.
    pub fn dim(&self) -> i32 {
        (0..self.cells.len())
            .rev()
            .find(|&d| !self.cells[d].is_empty())
            .map_or(-1, |d| d as i32)
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, |layer| layer.len())
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(|layer| layer.len()).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(|layer| layer.len()).sum()
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells.get(dim).map_or(&[], |layer| layer.as_slice())
    }

    pub fn cell(&self, id: &str) -> Option<&Cell> {
        self.index.get(id).map(|&(d, i)| &self.cells[d][i])
    }

    pub fn contains_cell(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    /// Faces of the cell with this id, as (face id, coefficient) pairs.
    pub fn faces_of(&self, id: &str) -> Result<Vec<(String, i64)>> {
        let &(dim, idx) = self
            .index
            .get(id)
            .ok_or_else(|| Error::domain(format!("no cell with id {id}")))?;
        if dim == 0 {
            return Ok(Vec::new());
        }
        Ok(self.boundary[dim][idx]
            .iter()
            .map(|&(row, c)| (self.cells[dim - 1][row].id.clone(), c))
            .collect())
    }

    pub(crate) fn boundary_columns(&self, dim: usize) -> &[Vec<(usize, i64)>] {
        self.boundary.get(dim).map_or(&[], |cols| cols.as_slice())
    }

    /// Alternating sum of cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, layer)| {
                let n = layer.len() as i64;
                if d % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Dense boundary matrix from dimension `d` into dimension `d - 1`.
    /// Rows are (d-1)-cells, columns are d-cells, both in stored order.
    pub fn boundary_matrix(&self, d: usize) -> IntMatrix {
        let rows = if d == 0 { 0 } else { self.cell_count(d - 1) };
        let cols = self.cell_count(d);
        let mut m = IntMatrix::zeros(rows, cols);
        if d == 0 {
            return m;
        }
        for (col, entries) in self.boundary_columns(d).iter().enumerate() {
            for &(row, coeff) in entries {
                m.set(row, col, coeff);
            }
        }
        m
    }

    /// Confirms `∂∂ = 0` and grading consistency; the report lists every
    /// violation with the degree and column where it occurs.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for d in 0..self.cells.len() {
            let n_below = if d == 0 { 0 } else { self.cells[d - 1].len() };
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                if d == 0 && !entries.is_empty() {
                    report
                        .violations
                        .push(format!("0-cell {} has boundary entries", self.cells[0][col].id));
                    continue;
                }
                for &(row, coeff) in entries {
                    if row >= n_below {
                        report.violations.push(format!(
                            "dim {d} column {} references row {row} out of range",
                            self.cells[d][col].id
                        ));
                    }
                    if coeff == 0 {
                        report.violations.push(format!(
                            "dim {d} column {} stores a zero coefficient",
                            self.cells[d][col].id
                        ));
                    }
                }
            }
        }
        for d in 2..self.cells.len() {
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, c1) in entries {
                    for &(row, c2) in &self.boundary[d - 1][mid] {
                        *acc.entry(row).or_insert(0) += c1 * c2;
                    }
                }
                if let Some((&row, &c)) = acc.iter().find(|&(_, &c)| c != 0) {
                    report.violations.push(format!(
                        "∂∂ ≠ 0 at dim {d} column {} (row {}, value {c})",
                        self.cells[d][col].id, self.cells[d - 2][row].id
                    ));
                }
            }
        }
        report
    }

    /// Checks the cubical incidence pattern: every d-cell has exactly `2d`
    /// distinct facets, all with coefficient ±1 summing to zero.
    pub fn check_cubical(&self) -> Result<()> {
        for d in 1..self.cells.len() {
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                let id = &self.cells[d][col].id;
                if entries.len() != 2 * d {
                    return Err(Error::structure(format!(
                        "cell {id} has {} facets, a {d}-cube needs {}",
                        entries.len(),
                        2 * d
                    )));
                }
                let mut sum = 0i64;
                for &(_, c) in entries {
                    if c != 1 && c != -1 {
                        return Err(Error::structure(format!(
                            "cell {id} has facet coefficient {c}, cubical cells need ±1"
                        )));
                    }
                    sum += c;
                }
                if sum != 0 {
                    return Err(Error::structure(format!(
                        "cell {id} facet coefficients sum to {sum}, expected 0"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The link of a 0-cell in a cubical complex: one j-simplex for each
    /// incident (j+1)-cell, with the face relation induced by incidence.
    pub fn vertex_link(&self, vertex_id: &str) -> Result<LinkComplex> {
        self.check_cubical()?;
        let &(vdim, vidx) = self
            .index
            .get(vertex_id)
            .ok_or_else(|| Error::domain(format!("no cell with id {vertex_id}")))?;
        if vdim != 0 {
            return Err(Error::domain(format!("{vertex_id} is not a 0-cell")));
        }

        // Incident edges, in id order, become the link vertices.
        let mut edge_ids: Vec<usize> = Vec::new();
        for (col, entries) in self.boundary_columns(1).iter().enumerate() {
            if entries.iter().any(|&(row, _)| row == vidx) {
                edge_ids.push(col);
            }
        }
        let edge_of_vertex: Vec<String> =
            edge_ids.iter().map(|&e| self.cells[1][e].id.clone()).collect();
        let link_index: HashMap<usize, u32> = edge_ids
            .iter()
            .enumerate()
            .map(|(j, &e)| (e, j as u32 + 1))
            .collect();

        // incident[d] maps cell index -> set of incident edges (as link vertices).
        let mut incident: Vec<HashMap<usize, Vec<u32>>> = vec![HashMap::new(), HashMap::new()];
        for &e in &edge_ids {
            incident[1].insert(e, vec![link_index[&e]]);
        }
        let mut cell_of_simplex: BTreeMap<Vec<u32>, String> = BTreeMap::new();
        for (&e, verts) in &incident[1] {
            cell_of_simplex.insert(verts.clone(), self.cells[1][e].id.clone());
        }
        let mut facet_masks: Vec<Vec<u32>> = incident[1].values().cloned().collect();

        for d in 2..self.cells.len() {
            let mut layer: HashMap<usize, Vec<u32>> = HashMap::new();
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                let mut verts: HashSet<u32> = HashSet::new();
                let mut touches = false;
                for &(row, _) in entries {
                    if let Some(vs) = incident[d - 1].get(&row) {
                        touches = true;
                        verts.extend(vs.iter().copied());
                    }
                }
                if !touches {
                    continue;
                }
                let mut verts: Vec<u32> = verts.into_iter().collect();
                verts.sort_unstable();
                let id = &self.cells[d][col].id;
                if verts.len() != d {
                    return Err(Error::structure(format!(
                        "cell {id} meets vertex {vertex_id} in {} edges, a {d}-cube corner needs {d}",
                        verts.len()
                    )));
                }
                if let Some(prev) = cell_of_simplex.insert(verts.clone(), id.clone()) {
                    return Err(Error::structure(format!(
                        "cells {prev} and {id} span the same link simplex at {vertex_id}"
                    )));
                }
                facet_masks.push(verts.clone());
                layer.insert(col, verts);
            }
            incident.push(layer);
        }

        let k = edge_ids.len() as u32;
        let masks: Vec<u64> = facet_masks
            .iter()
            .map(|vs| vs.iter().fold(0u64, |a, &v| a | 1u64 << (v - 1)))
            .collect();
        let complex = SimplicialComplex::from_masks(k, masks);
        // The correspondence must be a bijection onto incident cells:
        // every nonempty member of the link must name an incident cell.
        for mask in complex.member_masks() {
            if mask == 0 {
                continue;
            }
            let verts: Vec<u32> = (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            if !cell_of_simplex.contains_key(&verts) {
                return Err(Error::structure(format!(
                    "link of {vertex_id} is not induced by cell incidence (missing {verts:?})"
                )));
            }
        }
        Ok(LinkComplex { complex, edge_of_vertex, cell_of_simplex })
    }

    /// Gromov link condition: every vertex link is a flag simplicial complex.
    /// Cubical complexes satisfying it are nonpositively curved.
    pub fn gromov_link_condition(&self) -> Result<GromovVerdict> {
        let mut checked = 0;
        for cell in self.cells(0) {
            let link = self.vertex_link(&cell.id)?;
            if let Err(witness) = link.complex.is_flag() {
                return Ok(GromovVerdict::Fail { vertex: cell.id.clone(), witness });
            }
            checked += 1;
        }
        Ok(GromovVerdict::Pass { vertices_checked: checked })
    }

    /// For each cell, the ids of the 0-cells in its closure.
    pub fn vertex_sets(&self) -> HashMap<String, Vec<String>> {
        let mut out: HashMap<String, Vec<String>> = HashMap::new();
        let mut prev: Vec<HashSet<usize>> = Vec::new();
        for (idx, cell) in self.cells(0).iter().enumerate() {
            out.insert(cell.id.clone(), vec![cell.id.clone()]);
            prev.push(HashSet::from([idx]));
        }
        let mut below = prev;
        for d in 1..self.cells.len() {
            let mut layer: Vec<HashSet<usize>> = Vec::with_capacity(self.cells[d].len());
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                let mut verts: HashSet<usize> = HashSet::new();
                for &(row, _) in entries {
                    verts.extend(below[row].iter().copied());
                }
                let mut ids: Vec<String> =
                    verts.iter().map(|&v| self.cells[0][v].id.clone()).collect();
                ids.sort();
                out.insert(self.cells[d][col].id.clone(), ids);
                layer.push(verts);
            }
            below = layer;
        }
        out
    }

    /// Deterministic JSON export: dimensions ascending, cell ids sorted
    /// lexicographically, boundary columns keyed by cell id.
    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .enumerate()
            .map(|(d, layer)| {
                json!({
                    "dim": d,
                    "ids": layer.iter().map(|c| c.id.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut boundary: Vec<Value> = Vec::new();
        for d in 1..self.cells.len() {
            let mut columns = serde_json::Map::new();
            for (col, entries) in self.boundary_columns(d).iter().enumerate() {
                let faces: Vec<Value> = entries
                    .iter()
                    .map(|&(row, c)| json!([self.cells[d - 1][row].id, c]))
                    .collect();
                columns.insert(self.cells[d][col].id.clone(), Value::Array(faces));
            }
            boundary.push(json!({ "dim": d, "columns": columns }));
        }
        json!({
            "cell_counts": self.cells.iter().map(|l| l.len()).collect::<Vec<_>>(),
            "cells": cells,
            "boundary": boundary,
        })
    }
}

const ISO_MAX_VERTICES: u32 = 16;
const ISO_NODE_BUDGET: usize = 4_000_000;

/// Exact isomorphism test between two simplicial complexes, via canonical
/// labeling with individualization and refinement. Intended for small
/// complexes; inputs above 16 vertices draw a capacity error.
pub fn isomorphic_to(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() {
        return Ok(false);
    }
    if a.face_counts() != b.face_counts() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Canonical encoding of a complex: the lexicographically least relabeled
/// facet list over all vertex orders compatible with iterated color
/// refinement.
pub fn canonical_form(k: &SimplicialComplex) -> Result<Vec<u64>> {
    let m = k.vertex_count();
    if m > ISO_MAX_VERTICES {
        return Err(Error::capacity(format!(
            "canonical form limited to {ISO_MAX_VERTICES} vertices, got {m}"
        )));
    }
    if m == 0 {
        return Ok(vec![0]);
    }
    let n = m as usize;
    // Initial invariant: per-vertex profile of member sizes.
    let members = k.member_masks();
    let mut profile: Vec<Vec<usize>> = vec![vec![0; n + 1]; n];
    for &mask in &members {
        let size = mask.count_ones() as usize;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                profile[v][size] += 1;
            }
        }
    }
    let adj: Vec<u64> = (1..=m)
        .map(|i| {
            (1..=m)
                .filter(|&j| j != i && k.has_edge(i, j))
                .fold(0u64, |acc, j| acc | 1u64 << (j - 1))
        })
        .collect();
    let mut colors: Vec<u32> = rank_signatures(&profile.iter().map(|p| (0u32, p.clone())).collect::<Vec<_>>());
    refine(&adj, &mut colors);

    let facet_masks: Vec<u64> = k.facet_masks().to_vec();
    let mut best: Option<Vec<u64>> = None;
    let mut budget = ISO_NODE_BUDGET;
    search(&adj, &facet_masks, colors, &mut best, &mut budget)?;
    Ok(best.expect("search visits at least one leaf"))
}

fn rank_signatures<S: Ord + Clone>(sigs: &[(u32, S)]) -> Vec<u32> {
    let mut ranks: BTreeMap<&(u32, S), u32> = BTreeMap::new();
    for s in sigs {
        ranks.entry(s).or_insert(0);
    }
    let mut next = 0u32;
    for r in ranks.values_mut() {
        *r = next;
        next += 1;
    }
    sigs.iter().map(|s| ranks[s]).collect()
}

fn refine(adj: &[u64], colors: &mut Vec<u32>) {
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..adj.len())
            .map(|v| {
                let mut nb: Vec<u32> = (0..adj.len())
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let new_colors = rank_signatures(&sigs);
        if new_colors == *colors {
            return;
        }
        *colors = new_colors;
    }
}

fn search(
    adj: &[u64],
    facets: &[u64],
    colors: Vec<u32>,
    best: &mut Option<Vec<u64>>,
    budget: &mut usize,
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::capacity(
            "canonical form search budget exhausted; complex too symmetric or too large",
        ));
    }
    *budget -= 1;
    let n = adj.len();
    // Target cell: the smallest color value carried by more than one vertex.
    let mut class_of: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        class_of.entry(c).or_default().push(v);
    }
    let target = class_of.values().find(|vs| vs.len() > 1).cloned();
    match target {
        None => {
            // Discrete coloring: position of v = rank of its color.
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| colors[v]);
            let mut position = vec![0usize; n];
            for (pos, &v) in order.iter().enumerate() {
                position[v] = pos;
            }
            let mut encoded: Vec<u64> = facets
                .iter()
                .map(|&f| {
                    let mut out = 0u64;
                    for v in 0..n {
                        if f >> v & 1 == 1 {
                            out |= 1u64 << position[v];
                        }
                    }
                    out
                })
                .collect();
            encoded.sort_unstable_by_key(|&f| (f.count_ones(), f));
            if best.as_ref().map(|b| encoded < *b).unwrap_or(true) {
                *best = Some(encoded);
            }
            Ok(())
        }
        Some(vs) => {
            let fresh = colors.iter().max().unwrap() + 1;
            for v in vs {
                let mut child = colors.clone();
                child[v] = fresh;
                refine(adj, &mut child);
                search(adj, facets, child, best, budget)?;
            }
            Ok(())
        }
    }
}
