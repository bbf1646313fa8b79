//! Stack the hypercubes C^0_1 -> C^1_1 -> ... -> C^n_1 and count maximal
//! chains three independent ways: dynamic programming over the lax sum,
//! the weighted Dyck-path sum, and the odd double factorial.

use latstack::{
    column_series, count_maximal_chains, iterate_stacking, odd_double_factorial, weighted_dyck_sum,
    HeightSequence, DEFAULT_ELEMENT_BUDGET,
};

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    println!("n | elements | dp count | dyck sum | (2n-1)!!");
    for n in 0..=6 {
        let (stage0, maps) = column_series(n, 1, budget).unwrap();
        let stacked = iterate_stacking(stage0, &maps, 1, budget).unwrap();
        let dp = count_maximal_chains(&stacked).unwrap();
        let dyck = weighted_dyck_sum(n);
        let double_fact = odd_double_factorial(n);
        assert_eq!(dp, dyck);
        assert_eq!(dp, double_fact);
        println!(
            "{n} | {:8} | {dp:>8} | {dyck:>8} | {double_fact:>8}",
            stacked.size()
        );
    }

    // One particular exit-height profile and its falling-factorial weight.
    let heights = HeightSequence::new(vec![0, 0, 0, 1, 1, 4, 6, 7]).unwrap();
    println!(
        "\nweight of the height sequence {:?}: {}",
        heights.heights(),
        heights.weight()
    );
}
