//! Polyhedral products as explicit cell complexes.
//!
//! For a simplicial complex `K` on `{1, ..., m}` and a CW pair `(A, B)`, the
//! polyhedral product `Z_K(A, B)` is the union over simplices `I ∈ K` of the
//! products with `A`-factors at coordinates in `I` and `B`-factors elsewhere.
//! Its cells are m-tuples of cells of `A` whose set of non-`B` coordinates is
//! a simplex of `K`, with the graded product boundary.
//!
//! Three builders produce the moment-angle family:
//!
//! - [`build_rk`] — the real moment-angle complex `R_K = Z_K(D^1, S^0)` with
//!   native cubical labels `(I | ε)` inside `[-1,1]^m`;
//! - [`build_cc`] — the chamber `cc(K)` in `[0,1]^m`, the quotient of `R_K`
//!   by the coordinatewise sign action, with its mirror structure;
//! - [`build_rk_subdivided`] — `R_K` with every interval split at 0, the
//!   smallest cubical structure in which the mirrors and the sign action are
//!   cellular.

use crate::cellcx::{CellComplex, CellComplexBuilder, CellLabel, CoordState};
use crate::error::{Error, Result};
use crate::limits;
use crate::simplicial::{mask_vertices, SimplicialComplex};
use std::collections::BTreeMap;

/// One cell of a CW pair model `(A, B)`.
#[derive(Clone, Debug)]
pub struct PairCell {
    pub id: String,
    pub dim: usize,
    pub in_b: bool,
    /// Boundary in `A`, as (cell id, coefficient) pairs one dimension down.
    pub boundary: Vec<(String, i64)>,
}

/// A finite CW model of a pair `(A, B)`: the cells of `A` with integer
/// boundaries, and a marking of the subcomplex `B`.
#[derive(Clone, Debug)]
pub struct CWPairModel {
    pub name: String,
    pub cells: Vec<PairCell>,
}

impl CWPairModel {
    /// `(D^1, S^0)`: the interval `[-1,1]` with its two boundary points.
    pub fn real() -> Self {
        CWPairModel {
            name: "real".into(),
            cells: vec![
                PairCell { id: "m".into(), dim: 0, in_b: true, boundary: vec![] },
                PairCell { id: "p".into(), dim: 0, in_b: true, boundary: vec![] },
                PairCell {
                    id: "d".into(),
                    dim: 1,
                    in_b: false,
                    boundary: vec![("p".into(), 1), ("m".into(), -1)],
                },
            ],
        }
    }

    /// `(D^2, S^1)`: disk on one vertex, one loop edge, one 2-cell attached
    /// along the loop with degree one.
    pub fn complex_pair() -> Self {
        CWPairModel {
            name: "complex".into(),
            cells: vec![
                PairCell { id: "v".into(), dim: 0, in_b: true, boundary: vec![] },
                PairCell { id: "e".into(), dim: 1, in_b: true, boundary: vec![] },
                PairCell { id: "f".into(), dim: 2, in_b: false, boundary: vec![("e".into(), 1)] },
            ],
        }
    }

    /// `(D^4, S^3)`: the minimal model with one 0-cell, one 3-cell for `S^3`,
    /// and one 4-cell with `∂c4 = c3`.
    pub fn quaternionic() -> Self {
        CWPairModel {
            name: "quaternionic".into(),
            cells: vec![
                PairCell { id: "v".into(), dim: 0, in_b: true, boundary: vec![] },
                PairCell { id: "c3".into(), dim: 3, in_b: true, boundary: vec![] },
                PairCell {
                    id: "c4".into(),
                    dim: 4,
                    in_b: false,
                    boundary: vec![("c3".into(), 1)],
                },
            ],
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "real" => Ok(Self::real()),
            "complex" => Ok(Self::complex_pair()),
            "quaternionic" => Ok(Self::quaternionic()),
            other => Err(Error::input(format!(
                "unknown pair {other}; expected real, complex, or quaternionic"
            ))),
        }
    }

    /// Checks id uniqueness, that `B` is a subcomplex, and `∂∂ = 0` in `A`.
    pub fn validate(&self) -> Result<()> {
        let mut by_id: BTreeMap<&str, &PairCell> = BTreeMap::new();
        for c in &self.cells {
            if by_id.insert(&c.id, c).is_some() {
                return Err(Error::structure(format!(
                    "pair {}: duplicate cell id {}",
                    self.name, c.id
                )));
            }
        }
        for c in &self.cells {
            for (fid, _) in &c.boundary {
                let f = by_id.get(fid.as_str()).ok_or_else(|| {
                    Error::structure(format!("pair {}: unknown face {fid}", self.name))
                })?;
                if f.dim + 1 != c.dim {
                    return Err(Error::structure(format!(
                        "pair {}: cell {} of dim {} has face {} of dim {}",
                        self.name, c.id, c.dim, fid, f.dim
                    )));
                }
                if c.in_b && !f.in_b {
                    return Err(Error::structure(format!(
                        "pair {}: B is not a subcomplex ({} is in B, its face {} is not)",
                        self.name, c.id, fid
                    )));
                }
            }
        }
        // ∂∂ = 0 via the generic validator.
        let mut b = CellComplexBuilder::new();
        for c in &self.cells {
            b.add_cell(c.dim, c.id.clone(), CellLabel::Anonymous, c.boundary.clone());
        }
        let complex = b.finalize()?;
        let report = complex.validate();
        if !report.ok() {
            return Err(Error::structure(format!(
                "pair {}: {}",
                self.name, report.violations[0]
            )));
        }
        Ok(())
    }

    fn b_cells(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&i| self.cells[i].in_b).collect()
    }

    fn interior_cells(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&i| !self.cells[i].in_b).collect()
    }
}

fn guard_ambient(m: u32) -> Result<()> {
    if m > limits::MAX_AMBIENT_VERTICES {
        return Err(Error::capacity(format!(
            "m = {m} exceeds the construction cap of {} coordinates",
            limits::MAX_AMBIENT_VERTICES
        )));
    }
    Ok(())
}

fn guard_cell_count(count: u128, what: &str) -> Result<()> {
    let cap = limits::max_cells() as u128;
    if count > cap {
        return Err(Error::capacity(format!(
            "{what} would have {count} cells, above the cap of {cap}"
        )));
    }
    Ok(())
}

/// Builds the polyhedral product `Z_K(A, B)` for one pair used at every
/// coordinate. Cells carry product-tuple labels.
pub fn build_polyhedral_product(k: &SimplicialComplex, pair: &CWPairModel) -> Result<CellComplex> {
    pair.validate()?;
    let m = k.vertex_count();
    guard_ambient(m)?;
    let members = k.member_masks();
    let b_cells = pair.b_cells();
    let int_cells = pair.interior_cells();
    let mut predicted: u128 = 0;
    for &mask in &members {
        let s = mask.count_ones();
        predicted += (int_cells.len() as u128).pow(s) * (b_cells.len() as u128).pow(m - s);
    }
    guard_cell_count(predicted, "polyhedral product")?;

    let mut builder = CellComplexBuilder::new();
    let mut tuple: Vec<usize> = vec![0; m as usize];
    for &mask in &members {
        enumerate_tuples(pair, &b_cells, &int_cells, mask, 0, &mut tuple, &mut builder);
    }
    builder.finalize()
}

fn tuple_id(pair: &CWPairModel, tuple: &[usize]) -> String {
    let parts: Vec<&str> = tuple.iter().map(|&c| pair.cells[c].id.as_str()).collect();
    format!("({})", parts.join(","))
}

fn enumerate_tuples(
    pair: &CWPairModel,
    b_cells: &[usize],
    int_cells: &[usize],
    support: u64,
    coord: usize,
    tuple: &mut Vec<usize>,
    builder: &mut CellComplexBuilder,
) {
    if coord == tuple.len() {
        let dim: usize = tuple.iter().map(|&c| pair.cells[c].dim).sum();
        let id = tuple_id(pair, tuple);
        let label =
            CellLabel::Product(tuple.iter().map(|&c| pair.cells[c].id.clone()).collect());
        // Graded product rule: the sign of coordinate i is (-1)^(sum of the
        // dimensions of the earlier factors).
        let mut faces: Vec<(String, i64)> = Vec::new();
        let mut dim_before = 0usize;
        for i in 0..tuple.len() {
            let c = tuple[i];
            let sign = if dim_before % 2 == 0 { 1i64 } else { -1 };
            for (fid, coeff) in pair.cells[c].boundary.clone() {
                let fidx = pair.cells.iter().position(|pc| pc.id == fid).expect("validated");
                tuple[i] = fidx;
                faces.push((tuple_id(pair, tuple), sign * coeff));
                tuple[i] = c;
            }
            dim_before += pair.cells[c].dim;
        }
        builder.add_cell(dim, id, label, faces);
        return;
    }
    let choices = if support >> coord & 1 == 1 { int_cells } else { b_cells };
    for &c in choices {
        tuple[coord] = c;
        enumerate_tuples(pair, b_cells, int_cells, support, coord + 1, tuple, builder);
    }
}

/// Renders the cubical label `(I | ε)`: the free coordinates, then one sign
/// per remaining coordinate in coordinate order.
pub fn cubical_id(m: u32, free_mask: u64, sign_mask: u64) -> String {
    let free: Vec<String> = mask_vertices(free_mask).iter().map(|v| v.to_string()).collect();
    let mut signs = String::new();
    for i in 0..m {
        if free_mask >> i & 1 == 0 {
            signs.push(if sign_mask >> i & 1 == 1 { '+' } else { '-' });
        }
    }
    format!("({}|{})", free.join(","), signs)
}

/// Builds the real moment-angle complex `R_K` as a cubical subcomplex of
/// `[-1,1]^m`: one cell `(I, ε)` for each member `I` of `K` and each sign
/// vector `ε` on the complementary coordinates.
pub fn build_rk(k: &SimplicialComplex) -> Result<CellComplex> {
    let m = k.vertex_count();
    guard_ambient(m)?;
    let members = k.member_masks();
    let mut predicted: u128 = 0;
    for &mask in &members {
        predicted += 1u128 << (m - mask.count_ones());
    }
    guard_cell_count(predicted, "real moment-angle complex")?;

    let mut builder = CellComplexBuilder::new();
    for &free in &members {
        let dim = free.count_ones() as usize;
        let fixed: Vec<u32> = (0..m).filter(|i| free >> i & 1 == 0).collect();
        // Iterate over sign assignments on the fixed coordinates.
        let combos = 1u64 << fixed.len();
        for combo in 0..combos {
            let mut sign_mask = 0u64;
            for (bit, &coord) in fixed.iter().enumerate() {
                if combo >> bit & 1 == 1 {
                    sign_mask |= 1u64 << coord;
                }
            }
            let id = cubical_id(m, free, sign_mask);
            let label = CellLabel::Cubical {
                free: mask_vertices(free),
                signs: fixed
                    .iter()
                    .map(|&c| (c + 1, if sign_mask >> c & 1 == 1 { 1i8 } else { -1 }))
                    .collect(),
            };
            // Face pair in the j-th free direction carries sign (-1)^(j-1),
            // with the +1 face minus the -1 face.
            let mut faces: Vec<(String, i64)> = Vec::new();
            let mut j = 0;
            for i in 0..m {
                if free >> i & 1 == 1 {
                    let sub_free = free & !(1u64 << i);
                    let sign = if j % 2 == 0 { 1i64 } else { -1 };
                    faces.push((cubical_id(m, sub_free, sign_mask | 1u64 << i), sign));
                    faces.push((cubical_id(m, sub_free, sign_mask), -sign));
                    j += 1;
                }
            }
            builder.add_cell(dim, id, label, faces);
        }
    }
    builder.finalize()
}

/// The chamber `cc(K)` with its mirror structure. Cells are pairs
/// `(F, Z)` of disjoint coordinate sets with `F ∪ Z ∈ K`: coordinates in `F`
/// are free in `[0,1]`, coordinates in `Z` are pinned at 0, all others are
/// pinned at 1. The mirror `C_i` consists of the cells with `i ∈ Z`, i.e.
/// the locus `x_i = 0`; the cone point `(∅, ∅)` lies in no mirror.
#[derive(Clone, Debug)]
pub struct CcComplex {
    pub complex: CellComplex,
    /// For each cell id, the bitmask of mirrors containing the cell.
    pub mirror_mask: BTreeMap<String, u64>,
    pub vertex_count: u32,
}

impl CcComplex {
    /// The cells of the mirror `C_i` (1-based generator index).
    pub fn mirror(&self, i: u32) -> Vec<String> {
        let bit = 1u64 << (i - 1);
        self.mirror_mask
            .iter()
            .filter(|(_, &mask)| mask & bit != 0)
            .map(|(id, _)| id.clone())
            .collect()
    }
}

pub fn cc_id(free: u64, zeros: u64) -> String {
    let f: Vec<String> = mask_vertices(free).iter().map(|v| v.to_string()).collect();
    let z: Vec<String> = mask_vertices(zeros).iter().map(|v| v.to_string()).collect();
    format!("({}|{})", f.join(","), z.join(","))
}

pub fn build_cc(k: &SimplicialComplex) -> Result<CcComplex> {
    let m = k.vertex_count();
    guard_ambient(m)?;
    let members = k.member_masks();
    let mut predicted: u128 = 0;
    for &mask in &members {
        predicted += 1u128 << mask.count_ones();
    }
    guard_cell_count(predicted, "chamber cc(K)")?;

    let mut builder = CellComplexBuilder::new();
    let mut mirror_mask: BTreeMap<String, u64> = BTreeMap::new();
    for &member in &members {
        // Split the member into free coordinates and zero-pinned coordinates.
        let mut sub = member;
        loop {
            let free = sub;
            let zeros = member & !free;
            let id = cc_id(free, zeros);
            let label = CellLabel::Corner {
                free: mask_vertices(free),
                zeros: mask_vertices(zeros),
            };
            let dim = free.count_ones() as usize;
            let mut faces: Vec<(String, i64)> = Vec::new();
            let mut j = 0;
            for i in 0..m {
                if free >> i & 1 == 1 {
                    let sub_free = free & !(1u64 << i);
                    let sign = if j % 2 == 0 { 1i64 } else { -1 };
                    // Pinning at 1 drops the coordinate entirely; pinning at
                    // 0 moves it into the zero set.
                    faces.push((cc_id(sub_free, zeros), sign));
                    faces.push((cc_id(sub_free, zeros | 1u64 << i), -sign));
                    j += 1;
                }
            }
            builder.add_cell(dim, id.clone(), label, faces);
            mirror_mask.insert(id, zeros);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & member;
        }
    }
    Ok(CcComplex { complex: builder.finalize()?, mirror_mask, vertex_count: m })
}

/// Renders the id of a subdivided cell: one state token per coordinate.
pub fn subdivided_id(states: &[CoordState]) -> String {
    let parts: Vec<&str> = states.iter().map(|s| s.token()).collect();
    format!("({})", parts.join(","))
}

/// `R_K` with each coordinate interval `[-1,1]` split at 0. Same homology as
/// [`build_rk`], but the mirrors `x_i = 0` and the sign action are cellular.
pub fn build_rk_subdivided(k: &SimplicialComplex) -> Result<CellComplex> {
    let m = k.vertex_count();
    guard_ambient(m)?;
    let members = k.member_masks();
    let mut predicted: u128 = 0;
    for &mask in &members {
        let s = mask.count_ones();
        predicted += 3u128.pow(s) * (1u128 << (m - s));
    }
    guard_cell_count(predicted, "subdivided moment-angle complex")?;

    let mut builder = CellComplexBuilder::new();
    let mut states: Vec<CoordState> = vec![CoordState::Pos; m as usize];
    for &member in &members {
        enumerate_subdivided(member, 0, &mut states, &mut builder);
    }
    builder.finalize()
}

fn enumerate_subdivided(
    member: u64,
    coord: usize,
    states: &mut Vec<CoordState>,
    builder: &mut CellComplexBuilder,
) {
    if coord == states.len() {
        let dim = states.iter().filter(|s| s.is_edge()).count();
        let id = subdivided_id(states);
        let label = CellLabel::Subdivided(states.clone());
        let mut faces: Vec<(String, i64)> = Vec::new();
        let mut j = 0;
        for i in 0..states.len() {
            if states[i].is_edge() {
                let sign = if j % 2 == 0 { 1i64 } else { -1 };
                let (head, tail) = match states[i] {
                    CoordState::NegEdge => (CoordState::Zero, CoordState::Neg),
                    CoordState::PosEdge => (CoordState::Pos, CoordState::Zero),
                    _ => unreachable!(),
                };
                let saved = states[i];
                states[i] = head;
                faces.push((subdivided_id(states), sign));
                states[i] = tail;
                faces.push((subdivided_id(states), -sign));
                states[i] = saved;
                j += 1;
            }
        }
        builder.add_cell(dim, id, label, faces);
        return;
    }
    let choices: &[CoordState] = if member >> coord & 1 == 1 {
        &[CoordState::Zero, CoordState::NegEdge, CoordState::PosEdge]
    } else {
        &[CoordState::Neg, CoordState::Pos]
    };
    for &c in choices {
        states[coord] = c;
        enumerate_subdivided(member, coord + 1, states, builder);
    }
}

/// Closed-form Euler characteristic of `R_K`: the sum over members `I`
/// (including the empty simplex) of `(-1)^{|I|} 2^{m-|I|}`.
pub fn euler_formula(k: &SimplicialComplex) -> i64 {
    let m = k.vertex_count();
    let mut total = 0i128;
    for mask in k.member_masks() {
        let s = mask.count_ones();
        let count = 1i128 << (m - s);
        total += if s % 2 == 0 { count } else { -count };
    }
    i64::try_from(total).expect("Euler characteristic exceeds the i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellcx::CoordState;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 1]],
        )
        .unwrap()
    }

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn pair_models_validate() {
        CWPairModel::real().validate().unwrap();
        CWPairModel::complex_pair().validate().unwrap();
        CWPairModel::quaternionic().validate().unwrap();
        assert!(CWPairModel::by_name("octonionic").is_err());
    }

    #[test]
    fn invalid_pair_detected() {
        // B not a subcomplex: a B-cell with a non-B face.
        let bad = CWPairModel {
            name: "bad".into(),
            cells: vec![
                PairCell { id: "v".into(), dim: 0, in_b: false, boundary: vec![] },
                PairCell { id: "e".into(), dim: 1, in_b: true, boundary: vec![("v".into(), 1), ("v".into(), -1)] },
            ],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn square_from_two_points() {
        // Z_K(D^1, S^0) for K = two points is the boundary of the square.
        let z = build_polyhedral_product(&two_points(), &CWPairModel::real()).unwrap();
        assert_eq!(z.cell_counts(), vec![4, 4]);
        assert!(z.validate().ok());
        assert_eq!(z.euler_characteristic(), 0);
    }

    #[test]
    fn interval_from_point() {
        let k = SimplicialComplex::from_facets(1, &[vec![1]]).unwrap();
        let z = build_polyhedral_product(&k, &CWPairModel::real()).unwrap();
        assert_eq!(z.cell_counts(), vec![2, 1]);
    }

    #[test]
    fn rk_matches_generic_product() {
        use crate::homology::{homology, Coefficients};
        for k in [pentagon(), two_points()] {
            let rk = build_rk(&k).unwrap();
            let z = build_polyhedral_product(&k, &CWPairModel::real()).unwrap();
            assert_eq!(rk.cell_counts(), z.cell_counts());
            assert!(rk.validate().ok());
            assert!(z.validate().ok());
            let h_rk = homology(&rk, Coefficients::Integer).unwrap();
            let h_z = homology(&z, Coefficients::Integer).unwrap();
            assert_eq!(h_rk.degrees, h_z.degrees);
        }
    }

    #[test]
    fn rk_census_examples() {
        // K = m disjoint points: the 1-skeleton of the m-cube.
        for m in 1..=5u32 {
            let k = SimplicialComplex::from_facets(m, &[]).unwrap();
            let rk = build_rk(&k).unwrap();
            assert_eq!(rk.cell_count(0), 1 << m);
            assert_eq!(rk.cell_count(1) as u32, m * (1 << (m - 1)));
        }
        // K = sk_i of the simplex: the (i+1)-skeleton of the cube.
        let full = SimplicialComplex::from_facets(4, &[vec![1, 2, 3, 4]]).unwrap();
        for i in 0..=3i32 {
            let k = full.skeleton(i).unwrap();
            let rk = build_rk(&k).unwrap();
            for d in 0..=(i + 1) as usize {
                let expect = binomial(4, d) * (1usize << (4 - d));
                assert_eq!(rk.cell_count(d), expect, "i={i} d={d}");
            }
            assert_eq!(rk.cell_count((i + 2) as usize), 0);
        }
        // K = boundary of the simplex: boundary of the cube.
        for m in 2..=5u32 {
            let full = SimplicialComplex::from_facets(m, &[(1..=m).collect()]).unwrap();
            let k = full.skeleton(m as i32 - 2).unwrap();
            let rk = build_rk(&k).unwrap();
            let expect = 1 + if m % 2 == 0 { -1i64 } else { 1 };
            assert_eq!(rk.euler_characteristic(), expect);
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn euler_formula_examples() {
        let two = two_points();
        assert_eq!(euler_formula(&two), 0);
        let bd2 = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(euler_formula(&bd2), 2);
        assert_eq!(euler_formula(&pentagon()), -8);
    }

    #[test]
    fn euler_formula_matches_construction() {
        let mut state = 0xabcdu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let m = 1 + (next() % 8) as u32;
            let nf = 1 + (next() % 4) as usize;
            let facets: Vec<Vec<u32>> = (0..nf)
                .map(|_| {
                    let size = 1 + (next() % 3) as usize;
                    (0..size).map(|_| 1 + (next() % m as u64) as u32).collect()
                })
                .collect();
            let k = SimplicialComplex::from_facets(m, &facets).unwrap();
            let rk = build_rk(&k).unwrap();
            assert_eq!(euler_formula(&k), rk.euler_characteristic());
            assert!(rk.validate().ok());
        }
    }

    #[test]
    fn cc_for_a_point_is_the_interval() {
        let k = SimplicialComplex::from_facets(1, &[vec![1]]).unwrap();
        let cc = build_cc(&k).unwrap();
        assert_eq!(cc.complex.cell_counts(), vec![2, 1]);
        // The mirror C_1 is the endpoint x_1 = 0.
        assert_eq!(cc.mirror(1), vec!["(|1)".to_string()]);
        assert!(cc.complex.validate().ok());
    }

    #[test]
    fn cc_for_two_points_brute_force() {
        // Members: {}, {1}, {2}. Pairs (F, Z) with F ∪ Z a member:
        // (∅,∅), (∅,{1}), (∅,{2}), ({1},∅), ({2},∅) — five cells.
        let cc = build_cc(&two_points()).unwrap();
        assert_eq!(cc.complex.cell_counts(), vec![3, 2]);
        assert_eq!(cc.mirror(1), vec!["(|1)".to_string()]);
        assert_eq!(cc.mirror(2), vec!["(|2)".to_string()]);
        assert!(cc.complex.validate().ok());
    }

    #[test]
    fn mirrors_are_face_closed() {
        let mut state = 0x77u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..30 {
            let m = 1 + (next() % 6) as u32;
            let facets: Vec<Vec<u32>> = (0..1 + (next() % 4) as usize)
                .map(|_| {
                    (0..1 + (next() % 3) as usize)
                        .map(|_| 1 + (next() % m as u64) as u32)
                        .collect()
                })
                .collect();
            let k = SimplicialComplex::from_facets(m, &facets).unwrap();
            let cc = build_cc(&k).unwrap();
            for (id, &mask) in &cc.mirror_mask {
                for (face, _) in cc.complex.faces_of(id).unwrap() {
                    let fmask = cc.mirror_mask[&face];
                    assert_eq!(fmask & mask, mask, "face {face} of {id} left a mirror");
                }
            }
        }
    }

    #[test]
    fn subdivided_preserves_euler() {
        for k in [pentagon(), two_points()] {
            let plain = build_rk(&k).unwrap();
            let sub = build_rk_subdivided(&k).unwrap();
            assert!(sub.validate().ok());
            assert_eq!(plain.euler_characteristic(), sub.euler_characteristic());
        }
    }

    #[test]
    fn sign_orbit_census_matches_cc() {
        // Orbits of subdivided cells under the coordinatewise sign action
        // biject with cells of cc(K), dimension by dimension.
        for k in [pentagon(), two_points()] {
            let sub = build_rk_subdivided(&k).unwrap();
            let cc = build_cc(&k).unwrap();
            for d in 0..=sub.dim().max(0) as usize {
                let mut reps: std::collections::HashSet<Vec<CoordState>> =
                    std::collections::HashSet::new();
                for cell in sub.cells(d) {
                    if let CellLabel::Subdivided(states) = &cell.label {
                        // Canonical orbit representative: flip every
                        // coordinate into its nonnegative state.
                        let rep: Vec<CoordState> = states
                            .iter()
                            .map(|&s| match s {
                                CoordState::Neg => CoordState::Pos,
                                CoordState::NegEdge => CoordState::PosEdge,
                                other => other,
                            })
                            .collect();
                        reps.insert(rep);
                    } else {
                        panic!("subdivided complex with foreign label");
                    }
                }
                assert_eq!(reps.len(), cc.complex.cell_count(d), "dim {d}");
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        // K ⊆ K' on the same vertex set gives a cellwise inclusion of R_K.
        let mut state = 0xbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..25 {
            let m = 2 + (next() % 5) as u32;
            let facets: Vec<Vec<u32>> = (0..1 + (next() % 3) as usize)
                .map(|_| {
                    (0..1 + (next() % 3) as usize)
                        .map(|_| 1 + (next() % m as u64) as u32)
                        .collect()
                })
                .collect();
            let k = SimplicialComplex::from_facets(m, &facets).unwrap();
            let mut bigger = facets.clone();
            bigger.push(
                (0..2 + (next() % 2) as usize)
                    .map(|_| 1 + (next() % m as u64) as u32)
                    .collect(),
            );
            let kp = SimplicialComplex::from_facets(m, &bigger).unwrap();
            let small = build_rk(&k).unwrap();
            let big = build_rk(&kp).unwrap();
            for d in 0..=small.dim().max(0) as usize {
                for cell in small.cells(d) {
                    assert!(big.contains_cell(&cell.id), "{}", cell.id);
                }
            }
        }
    }

    #[test]
    fn capacity_guard() {
        let k = SimplicialComplex::from_facets(21, &[vec![1]]).unwrap();
        assert!(matches!(build_rk(&k), Err(Error::Capacity(_))));
    }

    #[test]
    fn quaternionic_product_over_two_points_is_s7() {
        use crate::homology::{homology, Coefficients};
        let z = build_polyhedral_product(&two_points(), &CWPairModel::quaternionic()).unwrap();
        assert!(z.validate().ok());
        let h = homology(&z, Coefficients::Integer).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn degenerate_empty_complex_pipeline() {
        // The complex on zero vertices (only the empty simplex): the empty
        // product is a single point everywhere.
        let k = SimplicialComplex::from_facets(0, &[]).unwrap();
        let rk = build_rk(&k).unwrap();
        assert_eq!(rk.cell_counts(), vec![1]);
        assert_eq!(euler_formula(&k), 1);
        let cc = build_cc(&k).unwrap();
        assert_eq!(cc.complex.cell_counts(), vec![1]);
        let sub = build_rk_subdivided(&k).unwrap();
        assert_eq!(sub.cell_counts(), vec![1]);
    }
}
