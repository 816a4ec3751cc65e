//! Building real moment-angle complexes and polyhedral products.
//!
//! ```sh
//! cargo run --example moment_angle
//! ```

use moment_angle::catalog;
use moment_angle::polyprod::{
    build_cc, build_polyhedral_product, build_rk, build_rk_subdivided, euler_formula, CWPairModel,
};

fn main() {
    // R_K for the boundary of the triangle is the boundary of the 3-cube.
    let k = catalog::get("boundary-simplex:2").unwrap();
    let rk = build_rk(&k).unwrap();
    println!("R(∂Δ²) cell counts: {:?}", rk.cell_counts());
    println!("χ = {} (closed formula {})", rk.euler_characteristic(), euler_formula(&k));
    println!("∂∂ = 0: {}", rk.validate().ok());

    // The same space through the generic polyhedral product.
    let z = build_polyhedral_product(&k, &CWPairModel::real()).unwrap();
    println!("Z_K(D¹,S⁰) cell counts: {:?} (same space)", z.cell_counts());

    // Complex and quaternionic variants over two points: S³ and S⁷ models.
    let two = catalog::get("boundary-simplex:1").unwrap();
    let zc = build_polyhedral_product(&two, &CWPairModel::complex_pair()).unwrap();
    println!("Z_K(D²,S¹) over two points: cell counts {:?}", zc.cell_counts());
    let zq = build_polyhedral_product(&two, &CWPairModel::quaternionic()).unwrap();
    println!("Z_K(D⁴,S³) over two points: cell counts {:?}", zq.cell_counts());

    // The chamber cc(K) and its mirrors; the pentagon chamber is the cone on
    // the pentagon, with one mirror per vertex.
    let pentagon = catalog::get("pentagon").unwrap();
    let cc = build_cc(&pentagon).unwrap();
    println!("cc(pentagon) cell counts: {:?}", cc.complex.cell_counts());
    for i in 1..=2 {
        println!("mirror C_{i}: {:?}", cc.mirror(i));
    }

    // The subdivided model splits every interval at 0; the sign action is
    // cellular there and the quotient census matches cc(K).
    let sub = build_rk_subdivided(&pentagon).unwrap();
    println!(
        "subdivided R(pentagon): {:?} cells, χ = {}",
        sub.cell_counts(),
        sub.euler_characteristic()
    );

    // Cells carry structured labels; the JSON export is deterministic.
    let small = build_rk(&two).unwrap();
    println!("JSON of R over two points:\n{}", serde_json::to_string_pretty(&small.to_json()).unwrap());
}
