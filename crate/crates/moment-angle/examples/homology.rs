//! Exact homology: Smith normal form, betti numbers, torsion, and the
//! independent decomposition cross-check.
//!
//! ```sh
//! cargo run --example homology
//! ```

use moment_angle::catalog;
use moment_angle::homology::{
    hochster_cross_check, homology, reduced_simplicial_homology, Coefficients,
};
use moment_angle::polyprod::build_rk;
use moment_angle::simplicial::SimplicialComplex;
use moment_angle::snf::{smith_normal_form, IntMatrix};

fn main() {
    // R over the pentagon is a closed orientable surface of genus 5.
    let pentagon = catalog::get("pentagon").unwrap();
    let rk = build_rk(&pentagon).unwrap();
    let h = homology(&rk, Coefficients::Integer).unwrap();
    println!("H_*(R_pentagon): betti {:?}, torsion-free: {}", h.betti_numbers(), h.is_torsion_free());
    println!("as JSON: {}", h.to_json());

    // The six-vertex projective plane shows torsion.
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
    println!(
        "reduced H_1 of the projective plane: rank {}, torsion {:?}",
        hz.betti(1),
        hz.torsion(1)
    );
    let h2 = reduced_simplicial_homology(&rp2, Coefficients::Mod2);
    println!("mod-2 ranks: {:?}", h2.betti_numbers());

    // A Smith normal form with its replayable transcript.
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    let d = smith_normal_form(&m);
    println!(
        "SNF diagonal {:?} via {} elementary operations; replay exact: {}",
        d.diagonal,
        d.ops.len(),
        d.verify_replay(&m)
    );

    // The mod-2 homology of R_K recomputed through full subcomplexes.
    let report = hochster_cross_check(&pentagon).unwrap();
    println!("decomposition cross-check agrees: {}", report.agrees());
    for deg in &report.degrees {
        println!(
            "  degree {}: cubical rank {}, decomposition rank {}",
            deg.degree, deg.rank_complex, deg.rank_decomposition
        );
    }
}
