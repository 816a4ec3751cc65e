//! Property tests over randomized inputs.

use moment_angle::coxeter::{self, RacgPresentation, Word};
use moment_angle::homology::{homology, Coefficients};
use moment_angle::polyprod::{build_rk, euler_formula};
use moment_angle::simplicial::{Simplex, SimplicialComplex};
use moment_angle::snf::{smith_normal_form, IntMatrix};
use proptest::prelude::*;

prop_compose! {
    fn arb_complex(max_m: u32)
        (m in 1..=max_m)
        (m in Just(m), facets in prop::collection::vec(
            prop::collection::vec(1..=m, 1..=4usize), 0..=6usize))
        -> SimplicialComplex
    {
        SimplicialComplex::from_facets(m, &facets).expect("indices in range")
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_downward_closed(k in arb_complex(8)) {
        for member in k.members() {
            let verts = member.vertices();
            for skip in 0..verts.len() {
                let sub: Vec<u32> = verts.iter().enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                prop_assert!(k.contains(&Simplex::new(sub)));
            }
        }
    }

    #[test]
    fn flag_matches_clique_enumeration(k in arb_complex(8)) {
        let m = k.vertex_count();
        let mut brute = true;
        for mask in 0u64..(1 << m) {
            if mask.count_ones() < 3 { continue; }
            let verts: Vec<u32> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let clique = verts.iter().enumerate().all(|(a, &va)|
                verts[a + 1..].iter().all(|&vb| k.has_edge(va, vb)));
            if clique && !k.contains(&Simplex::new(verts)) {
                brute = false;
                break;
            }
        }
        prop_assert_eq!(k.is_flag().is_ok(), brute);
    }

    #[test]
    fn euler_formula_matches_cell_census(k in arb_complex(7)) {
        let rk = build_rk(&k).expect("within caps");
        prop_assert_eq!(euler_formula(&k), rk.euler_characteristic());
    }

    #[test]
    fn betti_alternating_sum_is_euler(k in arb_complex(5)) {
        let rk = build_rk(&k).expect("within caps");
        let h = homology(&rk, Coefficients::Integer).expect("valid");
        prop_assert_eq!(h.euler_characteristic(), rk.euler_characteristic());
        // Mod-2 ranks dominate the rational ones degreewise.
        let h2 = homology(&rk, Coefficients::Mod2).expect("valid");
        for (z, two) in h.betti_numbers().iter().zip(h2.betti_numbers()) {
            prop_assert!(two >= *z);
        }
    }

    #[test]
    fn normal_form_is_canonical(
        edges in prop::collection::vec((1..=5u32, 1..=5u32), 0..=10),
        letters in prop::collection::vec(1..=5u32, 0..=10),
    ) {
        let pairs: Vec<(u32, u32)> = edges.into_iter().filter(|(a, b)| a != b).collect();
        let p = RacgPresentation::new(5, &pairs).expect("valid pairs");
        let w = Word(letters);
        let nf = coxeter::normal_form(&p, &w);
        // Idempotent.
        prop_assert_eq!(&coxeter::normal_form(&p, &nf.as_word()), &nf);
        // Inverse cancels.
        let inv = coxeter::invert(&p, &nf);
        prop_assert!(coxeter::multiply(&p, &nf, &inv).is_empty());
        // The sign vector is preserved by normalization.
        prop_assert_eq!(
            coxeter::lambda_map(5, w.0.as_slice()).mask(),
            coxeter::lambda_map(5, nf.letters()).mask()
        );
    }

    #[test]
    fn snf_replay_and_divisibility(
        rows in 1..=10usize,
        cols in 1..=10usize,
        entries in prop::collection::vec(-9..=9i64, 100),
    ) {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, entries[i * 10 + j]);
            }
        }
        let d = smith_normal_form(&m);
        prop_assert!(d.verify_replay(&m));
        for w in d.diagonal.windows(2) {
            if w[0] == num_bigint::BigInt::ZERO {
                prop_assert_eq!(&w[1], &num_bigint::BigInt::ZERO);
            } else {
                prop_assert_eq!(&w[1] % &w[0], num_bigint::BigInt::ZERO);
            }
        }
    }
}
