//! Flagness, links, skeleta, and sphere recognition on small complexes.
//!
//! ```sh
//! cargo run --example flagness
//! ```

use moment_angle::catalog;
use moment_angle::simplicial::{is_sphere_triangulation, Simplex, SimplicialComplex};

fn main() {
    // The pentagon boundary is flag; the hollow triangle is not.
    let pentagon = catalog::get("pentagon").unwrap();
    println!("pentagon is flag: {}", pentagon.is_flag().is_ok());

    let triangle = catalog::get("boundary-simplex:2").unwrap();
    match triangle.is_flag() {
        Ok(()) => println!("hollow triangle is flag"),
        Err(w) => println!("hollow triangle misses the face {}", w.missing_face),
    }

    // Skeleta of a simplex: the proper middle skeleta always miss a face.
    let full = catalog::get("simplex:4").unwrap();
    for i in 0..=4 {
        let sk = full.skeleton(i).unwrap();
        let verdict = match sk.is_flag() {
            Ok(()) => "flag".to_string(),
            Err(w) => format!("missing face {}", w.missing_face),
        };
        println!("sk_{i} of the 4-simplex: {verdict}");
    }

    // Links and full subcomplexes re-index to their support.
    let lk = pentagon.link(&Simplex::new(vec![1])).unwrap();
    println!(
        "link of vertex 1 in the pentagon: {} vertices (originally {:?})",
        lk.complex.vertex_count(),
        lk.vertex_map
    );
    let sub = pentagon.full_subcomplex(&[1, 3, 5]).unwrap();
    println!(
        "full subcomplex on {{1,3,5}}: face counts {:?}",
        sub.complex.face_counts()
    );

    // Sphere recognition is exact through dimension 2 and homology-certified
    // above.
    for name in ["pentagon", "boundary-simplex:2", "boundary-simplex:4", "points:3"] {
        let k = catalog::get(name).unwrap();
        println!("sphere-check {name}: {:?}", is_sphere_triangulation(&k));
    }

    // Complexes can also be built directly from facet lists.
    let custom = SimplicialComplex::from_facets(6, &[vec![1, 2, 3], vec![3, 4], vec![4, 5, 6]])
        .unwrap();
    println!(
        "custom complex: dim {}, face counts {:?}, connected: {}",
        custom.dim(),
        custom.face_counts(),
        custom.is_connected()
    );
}
