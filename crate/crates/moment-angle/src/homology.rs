//! Exact cellular and simplicial homology.
//!
//! Integral homology comes from Smith normal forms of the boundary matrices:
//! in degree d the betti number is `n_d - rank ∂_d - rank ∂_{d+1}` and the
//! torsion coefficients are the invariant factors of `∂_{d+1}` exceeding 1.
//! Mod-2 homology uses bitset Gaussian elimination and reports ranks only.
//!
//! [`hochster_cross_check`] recomputes the mod-2 homology of `R_K` through
//! the decomposition into reduced homologies of full subcomplexes,
//! `H̃_i(R_K) ≅ ⊕_{∅≠J⊆[m]} H̃_{i-1}(K_J)`, entirely independently of the
//! cubical chain complex, and reports per-degree agreement.

use crate::cellcx::CellComplex;
use crate::error::{Error, Result};
use crate::polyprod::build_rk;
use crate::simplicial::{mask_vertices, SimplicialComplex};
use crate::snf::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Coefficient system for a homology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// Integral homology: betti numbers and torsion coefficients.
    Integer,
    /// Mod-2 homology: ranks only.
    Mod2,
}

impl Coefficients {
    pub fn as_str(self) -> &'static str {
        match self {
            Coefficients::Integer => "integer",
            Coefficients::Mod2 => "mod2",
        }
    }
}

/// Homology in a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub degree: i32,
    pub betti: usize,
    /// Invariant factors greater than 1; empty for mod-2 coefficients.
    pub torsion: Vec<BigInt>,
}

/// Homology of a complex, listed by ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    pub degrees: Vec<DegreeData>,
}

impl HomologyResult {
    pub fn betti(&self, degree: i32) -> usize {
        self.degrees
            .iter()
            .find(|d| d.degree == degree)
            .map_or(0, |d| d.betti)
    }

    /// Betti numbers from degree 0 upward (degree -1 omitted).
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .filter(|d| d.degree >= 0)
            .map(|d| d.betti)
            .collect()
    }

    pub fn torsion(&self, degree: i32) -> Vec<BigInt> {
        self.degrees
            .iter()
            .find(|d| d.degree == degree)
            .map_or(Vec::new(), |d| d.torsion.clone())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|d| d.torsion.is_empty())
    }

    /// Alternating sum of betti numbers over degrees >= 0.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .filter(|d| d.degree >= 0)
            .map(|d| {
                let b = d.betti as i64;
                if d.degree % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    /// Fixed-layout JSON: coefficient tag, then degrees ascending.
    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .degrees
            .iter()
            .map(|d| {
                let torsion: Vec<Value> = d.torsion.iter().map(torsion_json).collect();
                json!({ "d": d.degree, "betti": d.betti, "torsion": torsion })
            })
            .collect();
        json!({ "coeffs": self.coefficients.as_str(), "degrees": degrees })
    }
}

fn torsion_json(t: &BigInt) -> Value {
    match u64::try_from(t) {
        Ok(v) => json!(v),
        Err(_) => json!(t.to_string()),
    }
}

/// Cellular homology of a cell complex. The complex must pass
/// [`CellComplex::validate`].
pub fn homology(c: &CellComplex, coefficients: Coefficients) -> Result<HomologyResult> {
    let report = c.validate();
    if !report.ok() {
        return Err(Error::structure(format!(
            "complex fails validation: {}",
            report.violations[0]
        )));
    }
    let top = c.dim();
    if top < 0 {
        return Ok(HomologyResult { coefficients, degrees: Vec::new() });
    }
    let top = top as usize;
    let matrices: Vec<IntMatrix> = (1..=top).map(|d| c.boundary_matrix(d)).collect();
    let counts: Vec<usize> = (0..=top).map(|d| c.cell_count(d)).collect();
    Ok(homology_from_matrices(&counts, &matrices, 0, coefficients))
}

/// Shared core: `counts[i]` cells in degree `offset + i`, `matrices[i]` the
/// boundary map from degree `offset + i + 1` down.
fn homology_from_matrices(
    counts: &[usize],
    matrices: &[IntMatrix],
    offset: i32,
    coefficients: Coefficients,
) -> HomologyResult {
    let n = counts.len();
    let mut ranks = vec![0usize; n + 1];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); n + 1];
    for (i, m) in matrices.iter().enumerate() {
        match coefficients {
            Coefficients::Integer => {
                let d = smith_normal_form(m);
                ranks[i + 1] = d.rank;
                torsion[i + 1] = d.torsion_factors();
            }
            Coefficients::Mod2 => {
                ranks[i + 1] = rank_mod2(m);
            }
        }
    }
    let degrees = (0..n)
        .map(|i| DegreeData {
            degree: offset + i as i32,
            betti: counts[i] - ranks[i] - ranks[i + 1],
            torsion: match coefficients {
                Coefficients::Integer => torsion[i + 1].clone(),
                Coefficients::Mod2 => Vec::new(),
            },
        })
        .collect();
    HomologyResult { coefficients, degrees }
}

/// Rank of an integer matrix over GF(2), by bitset elimination.
pub fn rank_mod2(m: &IntMatrix) -> usize {
    let words = m.rows().div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for j in 0..m.cols() {
        let mut col = vec![0u64; words];
        for i in 0..m.rows() {
            if m.get(i, j).rem_euclid(2) == 1 {
                col[i / 64] |= 1u64 << (i % 64);
            }
        }
        for (prow, pcol) in &pivots {
            if col[prow / 64] >> (prow % 64) & 1 == 1 {
                for (w, p) in col.iter_mut().zip(pcol.iter()) {
                    *w ^= p;
                }
            }
        }
        if let Some(w) = col.iter().position(|&x| x != 0) {
            let row = w * 64 + col[w].trailing_zeros() as usize;
            pivots.push((row, col));
        }
    }
    pivots.len()
}

/// Reduced simplicial homology of `K`, computed from the augmented chain
/// complex (the empty simplex sits in degree -1, so the empty complex has
/// `H̃_{-1}` of rank 1, reported explicitly).
pub fn reduced_simplicial_homology(
    k: &SimplicialComplex,
    coefficients: Coefficients,
) -> HomologyResult {
    let members = k.member_masks();
    let top = k.dim();
    // Layer i holds members of cardinality i, i.e. degree i - 1.
    let mut layers: Vec<Vec<u64>> = vec![Vec::new(); (top + 2) as usize];
    for &mask in &members {
        layers[mask.count_ones() as usize].push(mask);
    }
    let index: Vec<std::collections::HashMap<u64, usize>> = layers
        .iter()
        .map(|layer| layer.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let counts: Vec<usize> = layers.iter().map(|l| l.len()).collect();
    let mut matrices: Vec<IntMatrix> = Vec::new();
    for card in 1..layers.len() {
        let mut m = IntMatrix::zeros(counts[card - 1], counts[card]);
        for (col, &mask) in layers[card].iter().enumerate() {
            let verts = mask_vertices(mask);
            for (i, &v) in verts.iter().enumerate() {
                let face = mask & !(1u64 << (v - 1));
                let row = index[card - 1][&face];
                m.set(row, col, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        matrices.push(m);
    }
    homology_from_matrices(&counts, &matrices, -1, coefficients)
}

/// Nonzero reduced mod-2 ranks of one full subcomplex: the vertex subset and
/// its (degree, rank) pairs.
pub type SubcomplexRanks = (Vec<u32>, Vec<(i32, usize)>);

/// Per-degree comparison of the two mod-2 computations of `H̃(R_K)`.
#[derive(Clone, Debug)]
pub struct HochsterReport {
    pub degrees: Vec<HochsterDegree>,
    /// Mod-2 reduced homology ranks of each full subcomplex, keyed by the
    /// vertex subset.
    pub subcomplex_ranks: Vec<SubcomplexRanks>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterDegree {
    pub degree: i32,
    /// Rank of reduced `H_i(R_K; F_2)` from the cubical chain complex.
    pub rank_complex: usize,
    /// `Σ_J rank H̃_{i-1}(K_J; F_2)` over nonempty vertex subsets `J`.
    pub rank_decomposition: usize,
}

impl HochsterReport {
    pub fn agrees(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.rank_complex == d.rank_decomposition)
    }
}

/// Computes reduced mod-2 homology of `R_K` along two independent routes and
/// reports agreement degree by degree. Limited to m <= 12 (2^m subcomplexes).
pub fn hochster_cross_check(k: &SimplicialComplex) -> Result<HochsterReport> {
    let m = k.vertex_count();
    if m > 12 {
        return Err(Error::capacity(format!(
            "decomposition cross-check limited to 12 vertices, got {m}"
        )));
    }
    // Route one: the cubical chain complex of R_K, reduced.
    let rk = build_rk(k)?;
    let h = homology(&rk, Coefficients::Mod2)?;
    let top = rk.dim().max(0);
    let mut lhs: Vec<usize> = vec![0; (top + 1) as usize];
    for d in &h.degrees {
        let mut rank = d.betti;
        if d.degree == 0 {
            rank -= 1; // R_K is nonempty; reduce degree 0.
        }
        lhs[d.degree as usize] = rank;
    }
    // Route two: reduced homologies of full subcomplexes, shifted up by one.
    let mut rhs: Vec<usize> = vec![0; (top + 1) as usize];
    let mut subcomplex_ranks = Vec::new();
    for j_mask in 1u64..(1 << m) {
        let verts = mask_vertices(j_mask);
        let sub = k.full_subcomplex(&verts)?;
        let hj = reduced_simplicial_homology(&sub.complex, Coefficients::Mod2);
        let mut ranks = Vec::new();
        for d in &hj.degrees {
            if d.betti > 0 {
                ranks.push((d.degree, d.betti));
                let target = d.degree + 1;
                if target >= 0 && (target as usize) < rhs.len() {
                    rhs[target as usize] += d.betti;
                }
            }
        }
        if !ranks.is_empty() {
            subcomplex_ranks.push((verts, ranks));
        }
    }
    let degrees = (0..=top)
        .map(|d| HochsterDegree {
            degree: d,
            rank_complex: lhs[d as usize],
            rank_decomposition: rhs[d as usize],
        })
        .collect();
    Ok(HochsterReport { degrees, subcomplex_ranks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 1]],
        )
        .unwrap()
    }

    fn boundary_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
    }

    #[test]
    fn sphere_from_boundary_triangle() {
        let rk = build_rk(&boundary_triangle()).unwrap();
        let h = homology(&rk, Coefficients::Integer).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn pentagon_surface() {
        let rk = build_rk(&pentagon()).unwrap();
        let h = homology(&rk, Coefficients::Integer).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 10, 1]);
        assert!(h.is_torsion_free());
        assert_eq!(h.euler_characteristic(), -8);
    }

    #[test]
    fn three_points_graph() {
        let k = SimplicialComplex::from_facets(3, &[vec![1], vec![2], vec![3]]).unwrap();
        let rk = build_rk(&k).unwrap();
        let h = homology(&rk, Coefficients::Integer).unwrap();
        // 1-skeleton of the 3-cube: b1 = 12 - 8 + 1.
        assert_eq!(h.betti_numbers(), vec![1, 5]);
    }

    #[test]
    fn s3_from_complex_pair() {
        use crate::polyprod::{build_polyhedral_product, CWPairModel};
        let k = SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap();
        let z = build_polyhedral_product(&k, &CWPairModel::complex_pair()).unwrap();
        let h = homology(&z, Coefficients::Integer).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 0, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn reduced_homology_examples() {
        let h = reduced_simplicial_homology(&pentagon(), Coefficients::Integer);
        assert_eq!(h.betti(-1), 0);
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 1);

        let two = SimplicialComplex::from_facets(2, &[vec![1], vec![2]]).unwrap();
        let h = reduced_simplicial_homology(&two, Coefficients::Integer);
        assert_eq!(h.betti(0), 1);

        // Edge plus isolated vertex.
        let k = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        let h = reduced_simplicial_homology(&k, Coefficients::Integer);
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 0);

        // The empty complex carries its rank in degree -1.
        let empty = SimplicialComplex::from_facets(0, &[]).unwrap();
        let h = reduced_simplicial_homology(&empty, Coefficients::Integer);
        assert_eq!(h.betti(-1), 1);
    }

    #[test]
    fn mod2_matches_integral_when_torsion_free() {
        let rk = build_rk(&pentagon()).unwrap();
        let hz = homology(&rk, Coefficients::Integer).unwrap();
        let h2 = homology(&rk, Coefficients::Mod2).unwrap();
        assert_eq!(hz.betti_numbers(), h2.betti_numbers());
    }

    #[test]
    fn mod2_detects_torsion() {
        // The 6-vertex triangulation of the projective plane: Z/2 torsion in
        // degree 1 integrally, extra mod-2 ranks in degrees 1 and 2.
        let rp2 = SimplicialComplex::from_facets(
            6,
            &[
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![1, 5, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
                vec![2, 5, 6],
                vec![3, 4, 5],
                vec![3, 4, 6],
            ],
        )
        .unwrap();
        let hz = reduced_simplicial_homology(&rp2, Coefficients::Integer);
        assert_eq!(hz.betti(1), 0);
        assert_eq!(hz.betti(2), 0);
        assert_eq!(hz.torsion(1), vec![BigInt::from(2)]);
        let h2 = reduced_simplicial_homology(&rp2, Coefficients::Mod2);
        assert_eq!(h2.betti(1), 1);
        assert_eq!(h2.betti(2), 1);
    }

    #[test]
    fn hochster_pentagon_detail() {
        let report = hochster_cross_check(&pentagon()).unwrap();
        assert!(report.agrees());
        let d1 = report.degrees.iter().find(|d| d.degree == 1).unwrap();
        assert_eq!(d1.rank_complex, 10);
        let d2 = report.degrees.iter().find(|d| d.degree == 2).unwrap();
        assert_eq!(d2.rank_complex, 1);
        // Ten contributing subsets in degree 1: five non-edges (two isolated
        // points) and five triples inducing exactly one edge.
        let pairs = report
            .subcomplex_ranks
            .iter()
            .filter(|(j, _)| j.len() == 2)
            .count();
        let triples = report
            .subcomplex_ranks
            .iter()
            .filter(|(j, _)| j.len() == 3)
            .count();
        assert_eq!(pairs, 5);
        assert_eq!(triples, 5);
        // Degree 2 comes only from the full vertex set (the pentagon itself).
        let full: Vec<_> = report
            .subcomplex_ranks
            .iter()
            .filter(|(j, ranks)| j.len() == 5 && ranks.iter().any(|&(d, _)| d == 1))
            .collect();
        assert_eq!(full.len(), 1);
    }

    #[test]
    fn hochster_triangle_and_point() {
        let report = hochster_cross_check(&boundary_triangle()).unwrap();
        assert!(report.agrees());
        let d2 = report.degrees.iter().find(|d| d.degree == 2).unwrap();
        assert_eq!(d2.rank_complex, 1);
        // The only contributing subset is the full vertex set (the hollow
        // triangle, a circle); every proper full subcomplex is contractible
        // or connected, so the other reduced homologies vanish.
        assert_eq!(report.subcomplex_ranks.len(), 1);
        assert_eq!(report.subcomplex_ranks[0].0, vec![1, 2, 3]);
        assert_eq!(report.subcomplex_ranks[0].1, vec![(1, 1)]);

        let point = SimplicialComplex::from_facets(1, &[vec![1]]).unwrap();
        let report = hochster_cross_check(&point).unwrap();
        assert!(report.agrees());
        assert!(report.degrees.iter().all(|d| d.degree == 0 || d.rank_complex == 0));
    }

    #[test]
    fn hochster_capacity() {
        let k = SimplicialComplex::from_facets(13, &[vec![1]]).unwrap();
        assert!(matches!(hochster_cross_check(&k), Err(Error::Capacity(_))));
    }
}
