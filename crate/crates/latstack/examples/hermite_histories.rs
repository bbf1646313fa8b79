//! Weighted Dyck paths (Hermite histories) encode fixed-point-free
//! involutions: each up-step node is paired with a chosen down-step node to
//! its right, working right to left and counting choices from the right.

use latstack::{
    enumerate_fpf_involutions, enumerate_histories, history_to_involution, odd_double_factorial,
    HermiteHistory,
};
use num_bigint::BigUint;

fn main() {
    println!("n | histories | involutions | (2n-1)!!");
    for n in 0..=5 {
        let histories = enumerate_histories(n);
        let mut images: Vec<_> = histories
            .iter()
            .map(|h| history_to_involution(h).unwrap())
            .collect();
        images.sort_unstable();
        images.dedup();
        let involutions = enumerate_fpf_involutions(n);
        assert_eq!(images, involutions);
        assert_eq!(BigUint::from(histories.len()), odd_double_factorial(n));
        println!(
            "{n} | {:>9} | {:>11} | {}",
            histories.len(),
            involutions.len(),
            odd_double_factorial(n)
        );
    }

    // The worked 14-node example: ups at 1,3,4,6,7,8,11 with choices
    // 1,1,1,2,1,3,1 pair into seven arcs.
    let mut path = vec![false; 14];
    for p in [1, 3, 4, 6, 7, 8, 11] {
        path[p - 1] = true;
    }
    let history = HermiteHistory::new(path, vec![1, 1, 1, 2, 1, 3, 1]).unwrap();
    let pairing = history_to_involution(&history).unwrap();
    println!("\npairing of the 14-node example:");
    for block in pairing.blocks() {
        println!("  {} -- {}", block[0], block[1]);
    }
}
