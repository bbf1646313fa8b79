//! Maximal chains of the stacked squares Σ_m C^2_m are Kreweras walks:
//! closed first-quadrant walks with NE, W and S steps. This example counts
//! them against the closed formula and prints the sixteen walks at m = 2.

use latstack::{
    chain_to_walk, count_maximal_chains, enumerate_maximal_chains, kreweras, row_star_sublattice,
    walk_to_chain, WalkStep, DEFAULT_ELEMENT_BUDGET,
};

fn step_name(s: &WalkStep) -> &'static str {
    match s {
        WalkStep::Diag => "NE",
        WalkStep::Down(1) => "W",
        WalkStep::Down(_) => "S",
    }
}

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    println!("m | chains of Σ_m C^2_m | (3m)! 4^m / ((m+1)!(2m+1)!)");
    for m in 0..=5 {
        let rep = row_star_sublattice(2, 1, m, budget).unwrap();
        let count = count_maximal_chains(&rep.poset).unwrap();
        assert_eq!(count, kreweras(m));
        println!("{m} | {count:>19} | {}", kreweras(m));
    }

    let rep = row_star_sublattice(2, 1, 2, budget).unwrap();
    println!("\nthe 16 Kreweras walks of length 6:");
    for chain in enumerate_maximal_chains(&rep.poset, 100).unwrap() {
        let walk = chain_to_walk(&rep, &chain).unwrap();
        assert_eq!(walk_to_chain(&walk, &rep).unwrap(), chain);
        let names: Vec<&str> = walk.steps().iter().map(step_name).collect();
        println!("  {}", names.join(" "));
    }
}
