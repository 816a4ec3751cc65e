//! The basic construction: mirrored chambers, the sign-group reconstruction
//! of R_K, finite Davis-complex balls, and fundamental-group evidence.
//!
//! ```sh
//! cargo run --example davis_complex
//! ```

use moment_angle::catalog;
use moment_angle::cellcx::isomorphic_to;
use moment_angle::davis::{
    basic_construction, davis_ball, mirrored_chamber, pi1_presentation,
    simply_connected_evidence, GroupSpec,
};
use moment_angle::homology::{homology, Coefficients};
use moment_angle::polyprod::build_rk;

fn main() {
    let pentagon = catalog::get("pentagon").unwrap();

    // The chamber cc(K) with its mirror structure.
    let chamber = mirrored_chamber(&pentagon).unwrap();
    println!("chamber cell counts: {:?}", chamber.complex.cell_counts());
    println!("mirror C_1: {:?}", chamber.mirror(1));

    // Gluing 2^m mirrored chambers along the sign group reconstructs R_K.
    let sign = basic_construction(&pentagon, GroupSpec::SignGroup).unwrap();
    let rk = build_rk(&pentagon).unwrap();
    let h_sign = homology(&sign.complex, Coefficients::Integer).unwrap();
    let h_rk = homology(&rk, Coefficients::Integer).unwrap();
    println!(
        "U((Z/2)^5, cc): χ = {} vs R_K χ = {}; homology equal: {}",
        sign.complex.euler_characteristic(),
        rk.euler_characteristic(),
        h_sign.degrees == h_rk.degrees
    );

    // A radius-3 ball of the Davis complex (the universal cover of R_K).
    let ball = davis_ball(&pentagon, 3).unwrap();
    println!(
        "davis ball(3): {} chambers, {} cells, {} interior cells",
        ball.chamber_count,
        ball.complex.total_cells(),
        ball.interior.len()
    );

    // Interior chamber-center vertices have links isomorphic to K.
    let centers = ball.interior_center_vertices(&chamber);
    let v = &centers[0];
    let link = ball.complex.vertex_link(v).unwrap();
    println!(
        "link of the center {v}: {} vertices, isomorphic to the pentagon: {}",
        link.complex.vertex_count(),
        isomorphic_to(&link.complex, &pentagon).unwrap()
    );

    // Fundamental-group presentations from the 2-skeleton.
    let pres = pi1_presentation(&rk).unwrap();
    println!(
        "π1(R_pentagon): {} generators, {} relators, abelianization rank {}",
        pres.generator_count(),
        pres.relators.len(),
        pres.abelianization.rank
    );

    // The full construction over a finite group is simply connected.
    let cube = davis_ball(&catalog::get("simplex:2").unwrap(), 3).unwrap();
    let evidence = simply_connected_evidence(&cube.complex, 4000).unwrap();
    println!(
        "full (Z/2)^3 construction: abelianization trivial: {}, coset enumeration: {:?}",
        evidence.abelianization_trivial, evidence.enumeration
    );
}
