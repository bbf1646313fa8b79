//! Maximal chains of the single-stacked powers Σ_n C^n_{m-1} are in
//! bijection with m-partitions of {1, ..., mn}: number the descent steps
//! from the top and group them by the coordinate they decrement.

use latstack::{
    chain_to_partition, count_maximal_chains, enumerate_maximal_chains, enumerate_mpartitions,
    m_partition_count, partition_to_chain, star_sublattice, DEFAULT_ELEMENT_BUDGET,
};
use num_bigint::BigUint;

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    println!("(m, n) | chains | (mn)!/((m!)^n n!)");
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let rep = star_sublattice(1, n, m - 1, budget).unwrap();
        let count = count_maximal_chains(&rep.poset).unwrap();
        assert_eq!(count, m_partition_count(m, n));
        println!("({m}, {n}) | {count:>6} | {}", m_partition_count(m, n));
    }

    // 2-partitions are fixed-point-free involutions; show all ten at n = 2,
    // m = 3 alongside their chains.
    let (m, n) = (3usize, 2usize);
    let rep = star_sublattice(1, n, m - 1, budget).unwrap();
    let chains = enumerate_maximal_chains(&rep.poset, 100).unwrap();
    let partitions = enumerate_mpartitions(m, n);
    assert_eq!(BigUint::from(chains.len()), m_partition_count(m, n));
    assert_eq!(chains.len(), partitions.len());
    println!("\nchains of Σ_2 C^2_2 and their 3-partitions of {{1..6}}:");
    for chain in &chains {
        let p = chain_to_partition(&rep, chain).unwrap();
        assert_eq!(&partition_to_chain(&p, &rep).unwrap(), chain);
        let tuples: Vec<&str> = chain
            .iter()
            .map(|&id| rep.poset.label(id).unwrap())
            .collect();
        println!("  {}  <->  {:?}", tuples.join(" "), p.blocks());
    }
}
