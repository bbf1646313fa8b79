//! Maximal chains of the k-fold stacked hypercubes Σ^k_n C^n_1 correspond
//! to words in which each of n letters occurs k+1 times and no later letter
//! ever overtakes an earlier one. The chain is read from the top: each
//! descent step decrements one coordinate and emits that letter.

use latstack::{
    chain_to_word, count_maximal_chains, enumerate_maximal_chains, enumerate_stack_words,
    star_sublattice, word_to_chain, DEFAULT_ELEMENT_BUDGET,
};

fn main() {
    let budget = DEFAULT_ELEMENT_BUDGET;
    println!("(k, n) | chains of Σ^k_n C^n_1 | valid words");
    for (k, n) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let rep = star_sublattice(k, n, 1, budget).unwrap();
        let chains = count_maximal_chains(&rep.poset).unwrap();
        let words = enumerate_stack_words(k, n);
        println!("({k}, {n}) | {chains:>21} | {}", words.len());
    }

    let rep = star_sublattice(2, 2, 1, budget).unwrap();
    println!("\nall 7 chains of Σ^2_2 C^2_1 with their words:");
    for chain in enumerate_maximal_chains(&rep.poset, 100).unwrap() {
        let word = chain_to_word(&rep, &chain).unwrap();
        assert_eq!(word_to_chain(&word, &rep).unwrap(), chain);
        let tuples: Vec<&str> = chain
            .iter()
            .map(|&id| rep.poset.label(id).unwrap())
            .collect();
        let letters: Vec<String> = word.letters().iter().map(|l| format!("a{l}")).collect();
        println!("  {}  <->  {}", tuples.join(" "), letters.join(" "));
    }
}
