//! Finite abstract simplicial complexes on the vertex set `{1, ..., m}`.
//!
//! A complex is stored by its facets (inclusion-maximal members) as bitmasks,
//! so membership is a subset test. Every declared vertex counts as a member:
//! a vertex index in `1..=m` that appears in no listed facet is kept as an
//! isolated 0-simplex. This keeps the ambient vertex set fixed, which the
//! polyhedral-product constructions rely on. Consequently the complex whose
//! only member is the empty simplex exists only with `m = 0`.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;

/// Largest supported ambient vertex count (members are stored as `u64` masks).
pub const MAX_VERTICES: u32 = 64;

/// A simplex: a strictly increasing sequence of vertex indices in `1..=m`.
///
/// The empty simplex is a valid value and is a member of every complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// Builds a simplex from the given vertices, sorting and deduplicating.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex { vertices }
    }

    pub fn empty() -> Self {
        Simplex { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of vertices (`dim + 1`).
    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    /// Geometric dimension; the empty simplex has dimension -1.
    pub fn dim(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }

    pub(crate) fn mask(&self) -> u64 {
        self.vertices.iter().fold(0u64, |acc, &v| acc | 1u64 << (v - 1))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Simplex { vertices: mask_vertices(mask) }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn mask_vertices(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Witness that a complex is not flag: a set of pairwise adjacent vertices
/// that does not span a simplex, minimal by cardinality and then
/// lexicographically least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagWitness {
    pub missing_face: Simplex,
}

/// A finite abstract simplicial complex, downward closed, with a fixed
/// ambient vertex set `{1, ..., m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: u32,
    /// Inclusion-maximal members as bitmasks, sorted by (cardinality, value).
    /// Exactly `[0]` when `m = 0` (the empty complex).
    facets: Vec<u64>,
}

/// A complex together with the order-preserving relabeling that produced it;
/// `vertex_map[new - 1]` is the original index of the new vertex `new`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    pub vertex_map: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds the complex whose members are exactly the subsets of the listed
    /// facets (plus every declared vertex as an isolated member).
    /// Inclusion-redundant facets are absorbed.
    pub fn from_facets(m: u32, facets: &[Vec<u32>]) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "vertex count {m} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut masks: Vec<u64> = Vec::with_capacity(facets.len() + m as usize);
        for f in facets {
            let mut mask = 0u64;
            for &v in f {
                if v == 0 || v > m {
                    return Err(Error::input(format!(
                        "vertex index {v} out of range 1..={m}"
                    )));
                }
                mask |= 1u64 << (v - 1);
            }
            masks.push(mask);
        }
        // Ghost vertices become isolated members.
        for v in 0..m {
            masks.push(1u64 << v);
        }
        Ok(Self::from_masks(m, masks))
    }

    pub(crate) fn from_masks(m: u32, mut masks: Vec<u64>) -> Self {
        if m == 0 {
            return SimplicialComplex { m: 0, facets: vec![0] };
        }
        masks.sort_unstable_by_key(|&f| (f.count_ones(), f));
        masks.dedup();
        let mut antichain: Vec<u64> = Vec::new();
        for &f in masks.iter().rev() {
            if !antichain.iter().any(|&g| g & f == f) {
                antichain.push(f);
            }
        }
        antichain.sort_unstable_by_key(|&f| (f.count_ones(), mask_vertices(f)));
        SimplicialComplex { m, facets: antichain }
    }

    /// Ambient vertex count `m`.
    pub fn vertex_count(&self) -> u32 {
        self.m
    }

    /// The inclusion-maximal members.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.m == 0 {
            return vec![Simplex::empty()];
        }
        self.facets.iter().map(|&f| Simplex::from_mask(f)).collect()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Membership: true iff the simplex is a subset of some facet.
    pub fn contains(&self, simplex: &Simplex) -> bool {
        if simplex.vertices().last().is_some_and(|&v| v > self.m) {
            return false;
        }
        self.contains_mask(simplex.mask())
    }

    pub(crate) fn contains_mask(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// Dimension of the complex: the largest dimension of a member
    /// (-1 for the empty complex).
    pub fn dim(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// True iff `{i, j}` is a member.
    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        if i == j {
            return false;
        }
        self.contains_mask(1u64 << (i - 1) | 1u64 << (j - 1))
    }

    /// All edges `{i, j}`, i < j.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Every member, as a bitmask, sorted by (cardinality, vertex list).
    /// Includes the empty simplex (mask 0).
    pub(crate) fn member_masks(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        seen.insert(0);
        for &f in &self.facets {
            // Enumerate subsets of each facet.
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable_by_key(|&s| (s.count_ones(), mask_vertices(s)));
        out
    }

    /// Every member, sorted by (cardinality, vertex list), starting with the
    /// empty simplex.
    pub fn members(&self) -> Vec<Simplex> {
        self.member_masks().into_iter().map(Simplex::from_mask).collect()
    }

    /// Number of members of each cardinality `0..=dim+1`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2).max(1) as usize];
        for mask in self.member_masks() {
            counts[mask.count_ones() as usize] += 1;
        }
        counts
    }

    /// Flagness: every set of pairwise adjacent vertices spans a simplex.
    /// On failure returns the minimal witness (smallest cardinality, then
    /// lexicographically least vertex set).
    pub fn is_flag(&self) -> std::result::Result<(), FlagWitness> {
        // Adjacency masks of the 1-skeleton.
        let adj: Vec<u64> = (1..=self.m)
            .map(|i| {
                (1..=self.m)
                    .filter(|&j| j != i && self.has_edge(i, j))
                    .fold(0u64, |acc, j| acc | 1u64 << (j - 1))
            })
            .collect();
        // Search cliques level by level; within a level the recursive
        // extension enumerates vertex sets in lexicographic order, so the
        // first non-member found is the canonical witness.
        let max_size = self.m as usize;
        for size in 3..=max_size {
            let mut witness: Option<Vec<u32>> = None;
            let mut stack: Vec<u32> = Vec::new();
            self.clique_scan(&adj, &mut stack, 0, size, &mut witness);
            if let Some(w) = witness {
                return Err(FlagWitness { missing_face: Simplex::new(w) });
            }
        }
        Ok(())
    }

    fn clique_scan(
        &self,
        adj: &[u64],
        stack: &mut Vec<u32>,
        common: u64,
        size: usize,
        witness: &mut Option<Vec<u32>>,
    ) {
        if witness.is_some() {
            return;
        }
        if stack.len() == size {
            let mask = stack.iter().fold(0u64, |acc, &v| acc | 1u64 << (v - 1));
            if !self.contains_mask(mask) {
                *witness = Some(stack.clone());
            }
            return;
        }
        let start = stack.last().map_or(1, |&v| v + 1);
        for v in start..=self.m {
            let bit = 1u64 << (v - 1);
            if stack.is_empty() || common & bit == bit {
                let next_common = if stack.is_empty() {
                    adj[(v - 1) as usize]
                } else {
                    common & adj[(v - 1) as usize]
                };
                stack.push(v);
                self.clique_scan(adj, stack, next_common, size, witness);
                stack.pop();
                if witness.is_some() {
                    return;
                }
            }
        }
    }

    /// The full subcomplex on the vertex set `J`: members of the complex
    /// contained in `J`, re-indexed to `1..=|J|` order-preservingly.
    pub fn full_subcomplex(&self, j: &[u32]) -> Result<Relabeled> {
        let mut vertex_map: Vec<u32> = j.to_vec();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        for &v in &vertex_map {
            if v == 0 || v > self.m {
                return Err(Error::input(format!(
                    "vertex index {v} out of range 1..={}",
                    self.m
                )));
            }
        }
        let jmask = vertex_map.iter().fold(0u64, |acc, &v| acc | 1u64 << (v - 1));
        let relabel = |mask: u64| -> u64 {
            let mut out = 0u64;
            for (new_idx, &old) in vertex_map.iter().enumerate() {
                if mask >> (old - 1) & 1 == 1 {
                    out |= 1u64 << new_idx;
                }
            }
            out
        };
        let masks: Vec<u64> = self
            .facets
            .iter()
            .map(|&f| relabel(f & jmask))
            .collect();
        Ok(Relabeled {
            complex: SimplicialComplex::from_masks(vertex_map.len() as u32, masks),
            vertex_map,
        })
    }

    /// The link of a member: `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, re-indexed to the
    /// support of the link.
    pub fn link(&self, simplex: &Simplex) -> Result<Relabeled> {
        if !self.contains(simplex) {
            return Err(Error::domain(format!(
                "link of {simplex}: not a member of the complex"
            )));
        }
        let smask = simplex.mask();
        // Maximal link members are facet \ σ for facets containing σ.
        let masks: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & smask == smask)
            .map(|&f| f & !smask)
            .collect();
        let mut support = 0u64;
        for &t in &masks {
            support |= t;
        }
        let vertex_map = mask_vertices(support);
        let relabel = |mask: u64| -> u64 {
            let mut out = 0u64;
            for (new_idx, &old) in vertex_map.iter().enumerate() {
                if mask >> (old - 1) & 1 == 1 {
                    out |= 1u64 << new_idx;
                }
            }
            out
        };
        let relabeled: Vec<u64> = masks.iter().map(|&t| relabel(t)).collect();
        Ok(Relabeled {
            complex: SimplicialComplex::from_masks(vertex_map.len() as u32, relabeled),
            vertex_map,
        })
    }

    /// The i-skeleton: members of dimension at most `i`. For `i = -1` this is
    /// the empty complex (on zero vertices); for `i >= 0` the ambient vertex
    /// set is preserved.
    pub fn skeleton(&self, i: i32) -> Result<SimplicialComplex> {
        if i < -1 {
            return Err(Error::domain(format!("skeleton index {i} below -1")));
        }
        if i == -1 {
            return Ok(SimplicialComplex { m: 0, facets: vec![0] });
        }
        let card = (i + 1) as u32;
        let mut masks: Vec<u64> = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= card {
                masks.push(f);
            } else {
                masks.extend(subsets_of_size(f, card));
            }
        }
        Ok(SimplicialComplex::from_masks(self.m, masks))
    }

    /// True iff `v` is joined by an edge to every other vertex.
    pub fn is_conelike(&self, v: u32) -> Result<bool> {
        if v == 0 || v > self.m {
            return Err(Error::input(format!(
                "vertex index {v} out of range 1..={}",
                self.m
            )));
        }
        Ok((1..=self.m).all(|w| w == v || self.has_edge(v, w)))
    }

    /// Connectivity of the 1-skeleton (all declared vertices considered).
    pub fn is_connected(&self) -> bool {
        if self.m == 0 {
            return true;
        }
        let mut seen = vec![false; self.m as usize];
        let mut stack = vec![1u32];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 1..=self.m {
                if !seen[(w - 1) as usize] && self.has_edge(v, w) {
                    seen[(w - 1) as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Euler characteristic of the complex (empty simplex excluded).
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for mask in self.member_masks() {
            let c = mask.count_ones();
            if c > 0 {
                chi += if c % 2 == 1 { 1 } else { -1 };
            }
        }
        chi
    }
}

fn subsets_of_size(mask: u64, size: u32) -> Vec<u64> {
    let verts = mask_vertices(mask);
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(verts: &[u32], start: usize, size: u32, chosen: &mut Vec<u32>, out: &mut Vec<u64>) {
        if chosen.len() as u32 == size {
            out.push(chosen.iter().fold(0u64, |a, &v| a | 1u64 << (v - 1)));
            return;
        }
        for idx in start..verts.len() {
            chosen.push(verts[idx]);
            rec(verts, idx + 1, size, chosen, out);
            chosen.pop();
        }
    }
    rec(&verts, 0, size, &mut chosen, &mut out);
    out
}

/// Outcome of a sphere-triangulation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereVerdict {
    Yes { tier: SphereTier, reason: String },
    No { reason: String },
    Unknown { reason: String },
}

/// How strong the positive verdict is. Recognizing spheres is undecidable in
/// general, so positive answers in dimension >= 3 only certify that every
/// homological test a sphere must satisfy has passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereTier {
    /// Decided exactly (dimension <= 2, where closed surfaces are classified).
    Exact,
    /// Pseudomanifold with the homology of a sphere, all simplex links
    /// included; a genuine sphere in most practical cases but not certified.
    HomologyCertified,
}

impl SphereVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, SphereVerdict::Yes { .. })
    }
}

/// Decides whether the complex triangulates a sphere.
///
/// Exact in dimensions at most 2 (S^-1 is the empty complex, S^0 is two
/// points, S^1 a single cycle, S^2 a closed connected surface with Euler
/// characteristic 2). In dimension >= 3 the verdict is `Yes` only at the
/// homology-certified tier: pure pseudomanifold, strongly connected, and the
/// integral homology of the complex and of every simplex link matches the
/// sphere of the appropriate dimension. Definite obstructions yield `No`.
pub fn is_sphere_triangulation(k: &SimplicialComplex) -> SphereVerdict {
    let dim = k.dim();
    match dim {
        -1 => SphereVerdict::Yes {
            tier: SphereTier::Exact,
            reason: "empty complex, the (-1)-sphere".to_string(),
        },
        0 => {
            if k.vertex_count() == 2 {
                SphereVerdict::Yes {
                    tier: SphereTier::Exact,
                    reason: "exactly two points".to_string(),
                }
            } else {
                SphereVerdict::No {
                    reason: format!("{} points, S^0 needs exactly 2", k.vertex_count()),
                }
            }
        }
        1 => check_circle(k),
        2 => check_surface_sphere(k),
        _ => check_homology_sphere(k),
    }
}

fn is_pure(k: &SimplicialComplex) -> bool {
    let top = k.dim() + 1;
    k.facet_masks().iter().all(|f| f.count_ones() as i32 == top)
}

fn check_circle(k: &SimplicialComplex) -> SphereVerdict {
    if !is_pure(k) {
        return SphereVerdict::No {
            reason: "not pure of dimension 1 (isolated vertex present)".to_string(),
        };
    }
    for v in 1..=k.vertex_count() {
        let deg = (1..=k.vertex_count()).filter(|&w| k.has_edge(v, w)).count();
        if deg != 2 {
            return SphereVerdict::No {
                reason: format!("vertex {v} has degree {deg}, a cycle needs 2"),
            };
        }
    }
    if !k.is_connected() {
        return SphereVerdict::No {
            reason: "disjoint union of cycles, not a single circle".to_string(),
        };
    }
    SphereVerdict::Yes {
        tier: SphereTier::Exact,
        reason: "single cycle".to_string(),
    }
}

fn check_surface_sphere(k: &SimplicialComplex) -> SphereVerdict {
    if !is_pure(k) {
        return SphereVerdict::No { reason: "not pure of dimension 2".to_string() };
    }
    // Every edge must lie in exactly two triangles and every vertex link must
    // be a single cycle; then the complex is a closed surface, and chi = 2
    // picks out the sphere.
    for (i, j) in k.edges() {
        let e = Simplex::new(vec![i, j]);
        let lk = match k.link(&e) {
            Ok(l) => l,
            Err(_) => return SphereVerdict::No { reason: "edge link failure".to_string() },
        };
        let pts = lk.complex.vertex_count();
        if pts != 2 || lk.complex.dim() != 0 {
            return SphereVerdict::No {
                reason: format!("edge {{{i},{j}}} lies in {pts} triangles, need 2"),
            };
        }
    }
    for v in 1..=k.vertex_count() {
        let lk = k.link(&Simplex::new(vec![v])).expect("vertex is a member");
        if !matches!(check_circle(&lk.complex), SphereVerdict::Yes { .. }) {
            return SphereVerdict::No {
                reason: format!("link of vertex {v} is not a single cycle"),
            };
        }
    }
    if !k.is_connected() {
        return SphereVerdict::No { reason: "not connected".to_string() };
    }
    let chi = k.euler_characteristic();
    if chi != 2 {
        return SphereVerdict::No {
            reason: format!("closed surface with Euler characteristic {chi}, sphere needs 2"),
        };
    }
    SphereVerdict::Yes {
        tier: SphereTier::Exact,
        reason: "closed connected surface with Euler characteristic 2".to_string(),
    }
}

fn check_homology_sphere(k: &SimplicialComplex) -> SphereVerdict {
    let dim = k.dim();
    if k.member_masks().len() > 1 << 22 {
        return SphereVerdict::Unknown {
            reason: "complex too large for the homology certificate".to_string(),
        };
    }
    if !is_pure(k) {
        return SphereVerdict::No { reason: format!("not pure of dimension {dim}") };
    }
    // Pseudomanifold: every ridge in exactly two facets.
    let facets = k.facet_masks().to_vec();
    let mut ridge_count: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for &f in &facets {
        for ridge in subsets_of_size(f, dim as u32) {
            *ridge_count.entry(ridge).or_insert(0) += 1;
        }
    }
    if let Some((&r, &c)) = ridge_count.iter().find(|&(_, &c)| c != 2) {
        return SphereVerdict::No {
            reason: format!(
                "ridge {} lies in {c} facets, a pseudomanifold needs 2",
                Simplex::from_mask(r)
            ),
        };
    }
    // Strong connectivity of the facet adjacency graph.
    if !facets.is_empty() {
        let mut seen = vec![false; facets.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..facets.len() {
                if !seen[j] && (facets[i] & facets[j]).count_ones() as i32 == dim {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if !seen.into_iter().all(|b| b) {
            return SphereVerdict::No { reason: "facet graph not strongly connected".to_string() };
        }
    }
    // Homology of the complex and of every nonempty simplex link must match
    // the sphere of the appropriate dimension.
    if let Some(reason) = homology_mismatch(k, dim) {
        return SphereVerdict::No { reason };
    }
    for mask in k.member_masks() {
        if mask == 0 {
            continue;
        }
        let sigma = Simplex::from_mask(mask);
        let lk = k.link(&sigma).expect("member");
        let expect = dim - sigma.cardinality() as i32;
        if lk.complex.dim() != expect {
            return SphereVerdict::No {
                reason: format!("link of {sigma} has dimension {}, expected {expect}", lk.complex.dim()),
            };
        }
        if let Some(reason) = homology_mismatch(&lk.complex, expect) {
            return SphereVerdict::No { reason: format!("link of {sigma}: {reason}") };
        }
    }
    SphereVerdict::Yes {
        tier: SphereTier::HomologyCertified,
        reason: format!(
            "pseudomanifold of dimension {dim} with the integral homology of S^{dim}, all links included"
        ),
    }
}

/// Reduced integral homology compared against the sphere of dimension `d`:
/// everything vanishes except one free rank in degree `d`.
fn homology_mismatch(k: &SimplicialComplex, d: i32) -> Option<String> {
    let h = crate::homology::reduced_simplicial_homology(k, crate::homology::Coefficients::Integer);
    for deg in &h.degrees {
        let expect = usize::from(deg.degree == d);
        if deg.betti != expect || !deg.torsion.is_empty() {
            return Some(format!(
                "reduced homology in degree {} has rank {} and {} torsion factors, S^{d} needs rank {expect} and none",
                deg.degree,
                deg.betti,
                deg.torsion.len()
            ));
        }
    }
    None
}
