//! The asphericity criterion across the real, complex, and quaternionic
//! disk pairs.
//!
//! ```sh
//! cargo run --example asphericity
//! ```

use moment_angle::asphericity::{builtin_pair, davis_criterion, rk_aspherical};
use moment_angle::catalog;

fn main() {
    let pentagon = catalog::get("pentagon").unwrap();
    let triangle = catalog::get("boundary-simplex:2").unwrap();
    let simplex = catalog::get("simplex:4").unwrap();

    // Over the real pair, asphericity is exactly flagness.
    for (name, k) in [("pentagon", &pentagon), ("∂Δ²", &triangle), ("Δ⁴", &simplex)] {
        let (aspherical, verdict) = rk_aspherical(k);
        println!("R over {name} aspherical: {aspherical} ({:?})", verdict.failed_conditions);
    }

    // The complex pair fails π1-injectivity, the quaternionic pair fails
    // asphericity of the boundary sphere; a single non-conelike vertex makes
    // the verdict negative regardless of flagness.
    for pair_name in ["real", "complex", "quaternionic"] {
        let pair = builtin_pair(pair_name).unwrap();
        let v = davis_criterion(&pentagon, &pair);
        println!(
            "Z_pentagon over {pair_name}: {:?}, failed {:?}",
            v.outcome, v.failed_conditions
        );
    }

    // Over a cone every factor is a full disk: the lemmas do not apply and
    // the engine refuses to extrapolate.
    let v = davis_criterion(&simplex, &builtin_pair("complex").unwrap());
    println!("Z over the full simplex, complex pair: {:?}", v.outcome);
    for note in &v.notes {
        println!("  note: {note}");
    }

    println!("verdict JSON: {}", davis_criterion(&pentagon, &builtin_pair("complex").unwrap()).to_json());
}
