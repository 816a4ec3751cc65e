//! The word problem in right-angled Coxeter groups: canonical forms, the
//! sign homomorphism, parabolic membership, growth, and the exhaustive
//! rewriting oracle.
//!
//! ```sh
//! cargo run --example word_problem
//! ```

use moment_angle::catalog;
use moment_angle::coxeter::{
    ball, brute_equal, invert, lambda_map, multiply, normal_form, parabolic_membership,
    sphere_sizes, BruteVerdict, RacgPresentation, Word, DEFAULT_BRUTE_BUDGET,
};

fn main() {
    // W for the pentagon: five involutions, cyclically commuting.
    let pentagon = catalog::get("pentagon").unwrap();
    let p = RacgPresentation::from_complex(&pentagon);
    println!("generators: {}, commuting pairs: {:?}", p.generators(), p.commuting_pairs());

    // Canonical forms are reduced and lexicographically least.
    for letters in [vec![1, 1], vec![2, 1], vec![3, 1, 3, 2, 2, 3]] {
        let w = Word(letters);
        let nf = normal_form(&p, &w);
        println!("nf({w}) = {nf} (length {})", nf.len());
    }

    // Group arithmetic on normal forms.
    let a = normal_form(&p, &Word(vec![1, 3, 5]));
    let b = normal_form(&p, &Word(vec![5, 3]));
    println!("{a} * {b} = {}", multiply(&p, &a, &b));
    println!("{a} * {a}⁻¹ = {}", multiply(&p, &a, &invert(&p, &a)));

    // The sign homomorphism onto (Z/2)^5 and parabolic membership.
    println!("λ(1,3,1,4) = {}", lambda_map(5, &[1, 3, 1, 4]));
    let w = normal_form(&p, &Word(vec![2, 4]));
    println!("{} in W_{{2,4}}: {}", w, parabolic_membership(&w, 0b01010));
    println!("{} in W_{{2}}:   {}", w, parabolic_membership(&w, 0b00010));

    // Growth: sphere sizes of the ball, here exponential.
    println!("pentagon sphere sizes up to radius 5: {:?}", sphere_sizes(&p, 5).unwrap());
    let b4 = ball(&p, 2).unwrap();
    println!("ball(2) has {} elements; length-2 sphere starts with:", b4.len());
    for w in b4.spheres()[2].iter().take(5) {
        println!("  {w}");
    }

    // The strategy-free oracle agrees with the canonical forms.
    let w1 = Word(vec![1, 2, 3, 2]);
    let w2 = Word(vec![2, 1, 2, 3]);
    let oracle = brute_equal(&p, &w1, &w2, DEFAULT_BRUTE_BUDGET).unwrap();
    let canonical = normal_form(&p, &w1) == normal_form(&p, &w2);
    println!("oracle({w1} = {w2}): {:?}; canonical forms equal: {canonical}", oracle);
    assert_eq!(oracle == BruteVerdict::Equal, canonical);
}
