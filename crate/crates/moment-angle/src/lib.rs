//! Real moment-angle complexes and the combinatorics around them, computed exactly.
//!
//! Given a finite simplicial complex `K` on the vertex set `{1, ..., m}`, this
//! crate builds the polyhedral product `Z_K(A, B)` as an explicit cell complex
//! with integer boundary matrices. The main instance is the real moment-angle
//! complex `R_K = Z_K(D^1, S^0)`, a cubical subcomplex of the cube `[-1,1]^m`,
//! together with its chamber `cc(K)` in `[0,1]^m` and the complex and
//! quaternionic variants `Z_K(D^2, S^1)` and `Z_K(D^4, S^3)`.
//!
//! On top of the constructions sit exact invariants and certificates:
//!
//! - [`simplicial`] — abstract simplicial complexes, flagness with minimal
//!   witnesses, links, skeleta, full subcomplexes, sphere-triangulation checks.
//! - [`cellcx`] — generic finite cell complexes, `∂∂ = 0` validation, cubical
//!   vertex links, the Gromov link condition, and exact isomorphism testing.
//! - [`polyprod`] — polyhedral products, `R_K`, the chamber `cc(K)` with its
//!   mirror structure, and the closed-form Euler characteristic.
//! - [`homology`] — integral and mod-2 cellular homology via Smith normal
//!   form, with replayable row/column operations, plus an independent
//!   full-subcomplex decomposition used as a cross-check.
//! - [`asphericity`] — the asphericity criterion for polyhedral products over
//!   the real, complex, and quaternionic disk pairs.
//! - [`coxeter`] — the right-angled Coxeter group `W_K`: normal forms solving
//!   the word problem, the sign homomorphism onto `(Z/2)^m`, parabolic
//!   membership, and growth enumeration.
//! - [`davis`] — the basic construction `U(W, X)` over mirrored chambers,
//!   finite Davis-complex balls, the covering map onto `R_K`, nonpositive
//!   curvature certificates, and fundamental-group presentations.
//! - [`catalog`] / [`scx`] / [`cli`] — named example complexes, the `.scx`
//!   text format, and the `moma` command-line front end.
//!
//! All arithmetic is exact: boundary matrices are integral and homology is
//! computed by Smith normal form with arbitrary-precision fallback. Every
//! value is immutable after construction, so complexes may be shared freely
//! across threads.
//!
//! ```
//! use moment_angle::simplicial::SimplicialComplex;
//! use moment_angle::polyprod::build_rk;
//! use moment_angle::homology::{homology, Coefficients};
//!
//! // The pentagon boundary is the smallest flag triangulation of a circle.
//! let k = SimplicialComplex::from_facets(5, &[vec![1,2], vec![2,3], vec![3,4], vec![4,5], vec![5,1]]).unwrap();
//! let rk = build_rk(&k).unwrap();
//! // R_K is a closed orientable surface of genus 5.
//! let h = homology(&rk, Coefficients::Integer).unwrap();
//! assert_eq!(h.betti_numbers(), vec![1, 10, 1]);
//! ```

pub mod asphericity;
pub mod catalog;
pub mod cellcx;
pub mod cli;
pub mod coxeter;
pub mod davis;
pub mod error;
pub mod homology;
mod limits;
pub mod polyprod;
pub mod scx;
pub mod simplicial;
pub mod snf;

pub use error::{Error, Result};
