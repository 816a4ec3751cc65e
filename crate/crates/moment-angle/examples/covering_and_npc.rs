//! The covering map from Davis balls onto R_K, and nonpositive-curvature
//! certificates through the Gromov link condition.
//!
//! ```sh
//! cargo run --example covering_and_npc
//! ```

use moment_angle::catalog;
use moment_angle::cellcx::GromovVerdict;
use moment_angle::davis::{covering_check, npc_certificate, NpcCertificate};
use moment_angle::polyprod::build_rk;

fn main() {
    // The covering-map report: well-definedness on classes, surjectivity
    // once the radius reaches m, link isomorphisms at interior vertices.
    for name in ["simplex:2", "boundary-simplex:1", "pentagon"] {
        let k = catalog::get(name).unwrap();
        let report = covering_check(&k, 3).unwrap();
        println!(
            "cover {name} (radius 3): well-defined {}, surjective {} (required: {}), \
             interior links {} over {} vertices",
            report.well_defined,
            report.surjective,
            report.surjectivity_required,
            report.links_isomorphic,
            report.interior_vertex_count
        );
    }

    // The Gromov link condition on the cubical complex R_K.
    for name in ["pentagon", "boundary-simplex:2", "simplex:3"] {
        let k = catalog::get(name).unwrap();
        let rk = build_rk(&k).unwrap();
        match rk.gromov_link_condition().unwrap() {
            GromovVerdict::Pass { vertices_checked } => {
                println!("link condition on R({name}): pass ({vertices_checked} vertices)");
            }
            GromovVerdict::Fail { vertex, witness } => {
                println!(
                    "link condition on R({name}): fails at {vertex}, missing face {}",
                    witness.missing_face
                );
            }
        }
    }

    // Certificates record exactly what was checked.
    for name in ["pentagon", "boundary-simplex:2"] {
        let k = catalog::get(name).unwrap();
        match npc_certificate(&k).unwrap() {
            NpcCertificate::Issued {
                rk_vertices_checked,
                ball_interior_vertices_checked,
                ..
            } => println!(
                "npc {name}: issued ({rk_vertices_checked} R_K links, \
                 {ball_interior_vertices_checked} ball links checked)"
            ),
            NpcCertificate::Refused { witness, reason } => {
                println!("npc {name}: refused — {reason} (witness {})", witness.missing_face);
            }
        }
    }
}
