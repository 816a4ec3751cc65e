//! The asphericity criterion for polyhedral products.
//!
//! A polyhedral product `Z_K(A, B)` is aspherical exactly when three
//! conditions hold: (i) `A` and every path component of `B` are aspherical,
//! (ii) the inclusion induces an injection on fundamental groups, and
//! (iii) `K` is a flag complex. The homotopical facts about the builtin disk
//! pairs are audited constants (computing homotopy groups is out of scope);
//! this module contributes the rule logic and the flagness computation.
//!
//! The negative verdicts for the complex and quaternionic pairs rest on
//! lemmas that require at least one non-conelike vertex (over a cone every
//! coordinate factor is a full disk and the product is contractible
//! regardless of the pair). When every vertex is conelike and only pair
//! conditions fail, the engine refuses to extrapolate and answers
//! `NotApplicable`.

use crate::error::{Error, Result};
use crate::simplicial::{FlagWitness, SimplicialComplex};
use serde_json::{json, Value};

/// The homotopical facts about a pair `(A, B)` consumed by the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDescriptor {
    pub name: String,
    /// `A` is aspherical.
    pub a_aspherical: bool,
    /// Every path component of `B` is aspherical.
    pub b_components_aspherical: bool,
    /// `π1(B) -> π1(A)` is injective.
    pub pi1_injective: bool,
    /// Where the stored facts come from.
    pub provenance: String,
}

/// The builtin descriptors.
///
/// - `real` `(D^1, S^0)`: interval contractible, two points discrete hence
///   aspherical with trivial fundamental group — all three flags true.
/// - `complex` `(D^2, S^1)`: both aspherical, but `π1(S^1) ≅ Z -> 0` is not
///   injective.
/// - `quaternionic` `(D^4, S^3)`: `S^3` is not aspherical since
///   `π3(S^3) ≅ Z`; the recorded injectivity flag is irrelevant.
pub fn builtin_pair(name: &str) -> Result<PairDescriptor> {
    match name {
        "real" => Ok(PairDescriptor {
            name: "real".into(),
            a_aspherical: true,
            b_components_aspherical: true,
            pi1_injective: true,
            provenance: "D^1 contractible; S^0 discrete, aspherical, trivial π1".into(),
        }),
        "complex" => Ok(PairDescriptor {
            name: "complex".into(),
            a_aspherical: true,
            b_components_aspherical: true,
            pi1_injective: false,
            provenance: "π1(S^1) ≅ Z maps to π1(D^2) = 0, not injective".into(),
        }),
        "quaternionic" => Ok(PairDescriptor {
            name: "quaternionic".into(),
            a_aspherical: true,
            b_components_aspherical: false,
            pi1_injective: true,
            provenance: "S^3 is not aspherical: π3(S^3) ≅ Z".into(),
        }),
        other => Err(Error::input(format!(
            "unknown pair {other}; expected real, complex, or quaternionic"
        ))),
    }
}

/// The three conditions of the criterion, in the grouping used by the
/// negative lemmas: `I` bundles the asphericity requirements on `A` and the
/// components of `B`, `II` is π1-injectivity, `III` is flagness of `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    I,
    II,
    III,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Aspherical,
    NotAspherical,
    /// The pair conditions fail but every vertex is conelike, so the
    /// negative lemmas do not apply.
    NotApplicable,
}

/// Verdict of the criterion, with the failed conditions, a witness when
/// flagness fails, and hypothesis notes.
#[derive(Clone, Debug)]
pub struct AsphericityVerdict {
    pub outcome: Outcome,
    pub failed_conditions: Vec<Condition>,
    pub witness: Option<FlagWitness>,
    pub notes: Vec<String>,
}

impl AsphericityVerdict {
    pub fn to_json(&self) -> Value {
        let failed: Vec<&str> = self.failed_conditions.iter().map(|c| c.as_str()).collect();
        let witness: Value = match &self.witness {
            Some(w) => json!(w.missing_face.vertices()),
            None => Value::Null,
        };
        json!({
            "outcome": match self.outcome {
                Outcome::Aspherical => "Aspherical",
                Outcome::NotAspherical => "NotAspherical",
                Outcome::NotApplicable => "NotApplicable",
            },
            "failed": failed,
            "witness": witness,
            "notes": self.notes,
        })
    }
}

/// Evaluates the asphericity criterion for `Z_K(A, B)`.
pub fn davis_criterion(k: &SimplicialComplex, pair: &PairDescriptor) -> AsphericityVerdict {
    let mut failed = Vec::new();
    let mut notes = Vec::new();
    if !(pair.a_aspherical && pair.b_components_aspherical) {
        failed.push(Condition::I);
    }
    if !pair.pi1_injective {
        failed.push(Condition::II);
    }
    let witness = match k.is_flag() {
        Ok(()) => None,
        Err(w) => {
            failed.push(Condition::III);
            Some(w)
        }
    };
    if failed.is_empty() {
        return AsphericityVerdict {
            outcome: Outcome::Aspherical,
            failed_conditions: failed,
            witness,
            notes,
        };
    }
    // Flagness failures refute asphericity outright. Pure pair failures rest
    // on the lemma hypothesis of a non-conelike vertex.
    if !failed.contains(&Condition::III) {
        let all_conelike =
            (1..=k.vertex_count()).all(|v| k.is_conelike(v).expect("vertex in range"));
        if all_conelike {
            notes.push(
                "every vertex is conelike, so the non-asphericity lemmas do not apply \
                 (the product is a cone of disks)"
                    .to_string(),
            );
            return AsphericityVerdict {
                outcome: Outcome::NotApplicable,
                failed_conditions: failed,
                witness,
                notes,
            };
        }
    }
    AsphericityVerdict { outcome: Outcome::NotAspherical, failed_conditions: failed, witness, notes }
}

/// `R_K` is aspherical iff `K` is flag; the verdict wraps the witness.
pub fn rk_aspherical(k: &SimplicialComplex) -> (bool, AsphericityVerdict) {
    let verdict = davis_criterion(k, &builtin_pair("real").expect("builtin"));
    (verdict.outcome == Outcome::Aspherical, verdict)
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
    fn real_pair_tracks_flagness() {
        let v = davis_criterion(&pentagon(), &builtin_pair("real").unwrap());
        assert_eq!(v.outcome, Outcome::Aspherical);
        assert!(v.failed_conditions.is_empty());

        let v = davis_criterion(&boundary_triangle(), &builtin_pair("real").unwrap());
        assert_eq!(v.outcome, Outcome::NotAspherical);
        assert_eq!(v.failed_conditions, vec![Condition::III]);
        assert_eq!(v.witness.unwrap().missing_face.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn complex_pair_fails_injectivity() {
        let v = davis_criterion(&pentagon(), &builtin_pair("complex").unwrap());
        assert_eq!(v.outcome, Outcome::NotAspherical);
        assert_eq!(v.failed_conditions, vec![Condition::II]);
        assert!(v.witness.is_none());
    }

    #[test]
    fn quaternionic_pair_fails_asphericity() {
        let v = davis_criterion(&pentagon(), &builtin_pair("quaternionic").unwrap());
        assert_eq!(v.outcome, Outcome::NotAspherical);
        assert_eq!(v.failed_conditions, vec![Condition::I]);
    }

    #[test]
    fn conelike_complex_is_not_applicable() {
        // The full 4-simplex: every vertex conelike, lemma hypothesis fails.
        let d4 = SimplicialComplex::from_facets(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let v = davis_criterion(&d4, &builtin_pair("complex").unwrap());
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert_eq!(v.failed_conditions, vec![Condition::II]);
        assert!(!v.notes.is_empty());
        // A non-flag all-conelike complex still fails through flagness.
        let v = davis_criterion(&boundary_triangle(), &builtin_pair("complex").unwrap());
        assert_eq!(v.outcome, Outcome::NotAspherical);
        assert_eq!(v.failed_conditions, vec![Condition::II, Condition::III]);
    }

    #[test]
    fn rk_aspherical_examples() {
        assert!(rk_aspherical(&pentagon()).0);
        let bd3 = SimplicialComplex::from_facets(4, &[vec![1, 2, 3, 4]])
            .unwrap()
            .skeleton(2)
            .unwrap();
        assert!(!rk_aspherical(&bd3).0);
        let full = SimplicialComplex::from_facets(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert!(rk_aspherical(&full).0);
    }

    #[test]
    fn builtin_pairs() {
        let r = builtin_pair("real").unwrap();
        assert!(r.a_aspherical && r.b_components_aspherical && r.pi1_injective);
        let c = builtin_pair("complex").unwrap();
        assert!(c.a_aspherical && c.b_components_aspherical && !c.pi1_injective);
        let q = builtin_pair("quaternionic").unwrap();
        assert!(q.a_aspherical && !q.b_components_aspherical);
        assert!(builtin_pair("real-projective").is_err());
    }

    #[test]
    fn outcome_aspherical_iff_no_failures() {
        let mut state = 0xc0deu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let m = 1 + (next() % 7) as u32;
            let facets: Vec<Vec<u32>> = (0..1 + (next() % 4) as usize)
                .map(|_| {
                    (0..1 + (next() % 4) as usize)
                        .map(|_| 1 + (next() % m as u64) as u32)
                        .collect()
                })
                .collect();
            let k = SimplicialComplex::from_facets(m, &facets).unwrap();
            let pair = match next() % 3 {
                0 => builtin_pair("real"),
                1 => builtin_pair("complex"),
                _ => builtin_pair("quaternionic"),
            }
            .unwrap();
            let v = davis_criterion(&k, &pair);
            assert_eq!(v.outcome == Outcome::Aspherical, v.failed_conditions.is_empty());
            // Pair failures on a complex with a non-conelike vertex always
            // yield a negative verdict, regardless of flagness.
            let non_conelike = (1..=m).any(|vx| !k.is_conelike(vx).unwrap());
            if pair.name != "real" && non_conelike {
                assert_eq!(v.outcome, Outcome::NotAspherical);
            }
        }
    }
}
