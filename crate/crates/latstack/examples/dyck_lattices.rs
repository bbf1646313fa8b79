//! The Dyck lattices: stacking the chains C_0 -> C_1 -> ... -> C_m gives a
//! triangle-shaped lattice whose maximal chains are counted by the Catalan
//! numbers. The same lattice reappears as the weakly-increasing-pair
//! sublattice of C^2_m.

use latstack::{
    count_maximal_chains, export_dot, iterate_stacking, row_series, row_star_sublattice,
    DEFAULT_ELEMENT_BUDGET,
};
use num_bigint::BigUint;

fn catalan(m: u64) -> BigUint {
    let fact = |n: u64| (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i);
    fact(2 * m) / (fact(m) * fact(m + 1))
}

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    println!("m | stacked chains | catalan");
    for m in 0..=7 {
        let (stage0, maps) = row_series(1, m, budget).unwrap();
        let stacked = iterate_stacking(stage0, &maps, 1, budget).unwrap();
        let count = count_maximal_chains(&stacked).unwrap();
        assert_eq!(count, catalan(m as u64));
        println!("{m} | {count:>14} | {}", catalan(m as u64));
    }

    // The m = 3 instance drawn as a Hasse diagram (weakly increasing pairs).
    let rep = row_star_sublattice(1, 1, 3, budget).unwrap();
    println!("\nDOT of the 4th Dyck lattice ({} elements):", rep.len());
    print!("{}", export_dot(&rep.poset));
}
