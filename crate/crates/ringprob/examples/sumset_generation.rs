//! Sumset generation in abelian groups: a symmetric subset X ∋ 0 reaches
//! its span within 3r rounds, r minimal with (r+1)|X| > |G|. The checker
//! verifies the identity by iterated frontier sumsets.
//!
//!     cargo run --example sumset_generation

use ringprob::extraction::eberhard_generation;
use ringprob::ring::GroupShape;

fn main() {
    let cases: Vec<(Vec<u64>, Vec<u64>)> = vec![
        (vec![5], vec![0, 1, 4]),
        (vec![7], vec![0, 1, 6]),
        (vec![7], vec![0, 1, 2, 5, 6]),
        (vec![12], vec![0, 4, 8]),
        (vec![2, 8], vec![0, 1, 3, 5, 13, 15]),
        (vec![3, 3], vec![0, 1, 2]),
    ];
    for (orders, x) in cases {
        let shape = GroupShape::new(orders.clone()).unwrap();
        let out = eberhard_generation(&shape, &x).unwrap();
        println!(
            "G = Z{orders:?} (order {:>3}), |X| = {:>2}: r = {}, span = {:>3}, reached in {} rounds, verified = {}",
            out.group_order, out.x_size, out.r, out.span_order, out.rounds_to_span, out.verified
        );
    }

    // An asymmetric set is rejected up front.
    let shape = GroupShape::new(vec![5]).unwrap();
    match eberhard_generation(&shape, &[0, 1]) {
        Err(e) => println!("\nasymmetric X rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
