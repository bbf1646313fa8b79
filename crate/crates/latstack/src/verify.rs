//! Self-verification suites behind the CLI `verify` subcommand: cross-checks
//! between the dynamic-programming counts, the closed formulas, the lax-sum
//! constructions, and the bijections, at desk scale.

use num_bigint::BigUint;

use crate::biject;
use crate::chains::{
    catalan_kdim, count_maximal_chains, enumerate_maximal_chains, hypercube_count, kreweras,
    m_partition_count, odd_double_factorial, weighted_dyck_sum,
};
use crate::error::Result;
use crate::hypercube::{column_series, row_star_sublattice, star_sublattice};
use crate::lax::stacking_trace;

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Structure,
    Bijections,
    All,
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, result: Result<(bool, String)>) {
    let name = name.into();
    match result {
        Ok((pass, detail)) => out.push(Check { name, pass, detail }),
        Err(e) => out.push(Check {
            name,
            pass: false,
            detail: format!("error: {e}"),
        }),
    }
}

fn eq_counts(actual: BigUint, expected: BigUint) -> (bool, String) {
    let pass = actual == expected;
    let detail = if pass {
        format!("{actual}")
    } else {
        format!("got {actual}, want {expected}")
    };
    (pass, detail)
}

fn formulas(budget: usize, out: &mut Vec<Check>) {
    for k in 0..=3usize {
        for n in 0..=4usize {
            let name = format!("catalan: dp(star k={k} n={n} m=0) vs formula");
            check(
                out,
                name,
                (|| {
                    let rep = star_sublattice(k, n, 0, budget)?;
                    let dp = count_maximal_chains(&rep.poset)?;
                    let expected = if k == 0 {
                        BigUint::from(1u32)
                    } else {
                        catalan_kdim(k, n)
                    };
                    Ok(eq_counts(dp, expected))
                })(),
            );
        }
    }
    for n in 0..=4usize {
        let name = format!("double factorial: dp(star k=1 n={n} m=1) vs (2n-1)!!");
        check(
            out,
            name,
            (|| {
                let rep = star_sublattice(1, n, 1, budget)?;
                Ok(eq_counts(
                    count_maximal_chains(&rep.poset)?,
                    odd_double_factorial(n),
                ))
            })(),
        );
    }
    for m in 0..=2usize {
        for n in 0..=3usize {
            let name = format!("m-partitions: dp(star k=1 n={n} m={m}) vs formula");
            check(
                out,
                name,
                (|| {
                    let rep = star_sublattice(1, n, m, budget)?;
                    Ok(eq_counts(
                        count_maximal_chains(&rep.poset)?,
                        m_partition_count(m + 1, n),
                    ))
                })(),
            );
            let name = format!("hypercube: dp(star k=0 n={n} m={m}) vs (mn)!/(m!)^n");
            check(
                out,
                name,
                (|| {
                    let rep = star_sublattice(0, n, m, budget)?;
                    Ok(eq_counts(
                        count_maximal_chains(&rep.poset)?,
                        hypercube_count(m, n),
                    ))
                })(),
            );
        }
    }
    for m in 0..=4usize {
        let name = format!("kreweras: dp(row n=2 k=1 m={m}) vs formula");
        check(
            out,
            name,
            (|| {
                let rep = row_star_sublattice(2, 1, m, budget)?;
                Ok(eq_counts(count_maximal_chains(&rep.poset)?, kreweras(m)))
            })(),
        );
    }
    for n in 0..=7usize {
        let name = format!("weighted dyck sum n={n} vs (2n-1)!!");
        check(
            out,
            name,
            Ok(eq_counts(weighted_dyck_sum(n), odd_double_factorial(n))),
        );
    }
    for (k, n, m) in [(1usize, 2usize, 1usize), (2, 2, 0), (2, 2, 1), (1, 3, 1)] {
        let name = format!("representation independence: k={k} n={n} m={m}");
        check(
            out,
            name,
            (|| {
                let (stage0, maps) = column_series(n, m, budget)?;
                let stacked = crate::lax::iterate_stacking(stage0, &maps, k, budget)?;
                let rep = star_sublattice(k, n, m, budget)?;
                Ok(eq_counts(
                    count_maximal_chains(&stacked)?,
                    count_maximal_chains(&rep.poset)?,
                ))
            })(),
        );
    }
}

fn structure(budget: usize, out: &mut Vec<Check>) {
    for (k, n, m) in [(1usize, 2usize, 1usize), (2, 2, 0), (2, 3, 0), (2, 2, 1)] {
        let name = format!("stacked lattice k={k} n={n} m={m} distributive");
        check(
            out,
            name,
            (|| {
                let (stage0, maps) = column_series(n, m, budget)?;
                let trace = stacking_trace(stage0, &maps, k, budget)?;
                let p = &trace.result;
                let lattice = p.is_lattice();
                let distributive = lattice && p.is_distributive()?;
                let squares = trace.squares.iter().all(crate::lax::PushoutSquare::verify);
                let pass = lattice && distributive && squares;
                Ok((
                    pass,
                    format!(
                    "size {}, lattice {lattice}, distributive {distributive}, squares {squares}",
                    p.size()
                ),
                ))
            })(),
        );
    }
    for (k, n, m) in [(1usize, 3usize, 1usize), (2, 2, 1), (3, 2, 0)] {
        let name = format!("closure: star k={k} n={n} m={m}");
        check(
            out,
            name,
            (|| {
                let rep = star_sublattice(k, n, m, budget)?;
                let closed = rep.verify_meet_join_closure();
                let unit_covers = rep.covers_increment_one_coordinate();
                Ok((
                    closed && unit_covers,
                    format!("meet/join closure {closed}, unit cover steps {unit_covers}"),
                ))
            })(),
        );
    }
    for (n, k, m) in [(2usize, 1usize, 2usize), (1, 2, 2), (2, 2, 1)] {
        let name = format!("closure: row-star n={n} k={k} m={m}");
        check(
            out,
            name,
            (|| {
                let rep = row_star_sublattice(n, k, m, budget)?;
                let closed = rep.verify_meet_join_closure();
                let lattice = rep.poset.is_lattice();
                Ok((
                    closed && lattice,
                    format!("meet/join closure {closed}, lattice {lattice}"),
                ))
            })(),
        );
    }
}

fn bijections(budget: usize, out: &mut Vec<Check>) {
    for (k, n) in [(1usize, 2usize), (2, 2), (1, 3)] {
        let name = format!("words k={k} n={n}: count and round trip");
        check(
            out,
            name,
            (|| {
                let rep = star_sublattice(k, n, 1, budget)?;
                let chains = enumerate_maximal_chains(&rep.poset, 100_000)?;
                let words = biject::enumerate_stack_words(k, n);
                let mut pass = words.len() == chains.len();
                for chain in &chains {
                    let word = biject::chain_to_word(&rep, chain)?;
                    pass &= &biject::word_to_chain(&word, &rep)? == chain;
                }
                Ok((pass, format!("{} words", words.len())))
            })(),
        );
    }
    for (m, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let name = format!("m-partitions m={m} n={n}: count and round trip");
        check(
            out,
            name,
            (|| {
                let rep = star_sublattice(1, n, m - 1, budget)?;
                let chains = enumerate_maximal_chains(&rep.poset, 100_000)?;
                let partitions = biject::enumerate_mpartitions(m, n);
                let mut pass = partitions.len() == chains.len()
                    && BigUint::from(partitions.len()) == m_partition_count(m, n);
                for chain in &chains {
                    let p = biject::chain_to_partition(&rep, chain)?;
                    pass &= &biject::partition_to_chain(&p, &rep)? == chain;
                }
                Ok((pass, format!("{} partitions", partitions.len())))
            })(),
        );
    }
    for (n, m) in [(1usize, 2usize), (2, 2), (2, 3)] {
        let name = format!("walks n={n} m={m}: count and round trip");
        check(
            out,
            name,
            (|| {
                let rep = row_star_sublattice(n, 1, m, budget)?;
                let chains = enumerate_maximal_chains(&rep.poset, 100_000)?;
                let walks = biject::enumerate_walks(n, m);
                let mut pass = walks.len() == chains.len();
                for chain in &chains {
                    let w = biject::chain_to_walk(&rep, chain)?;
                    pass &= &biject::walk_to_chain(&w, &rep)? == chain;
                }
                Ok((pass, format!("{} walks", walks.len())))
            })(),
        );
    }
    for n in 0..=4usize {
        let name = format!("hermite histories n={n} onto involutions");
        check(
            out,
            name,
            (|| {
                let histories = biject::enumerate_histories(n);
                let mut images: Vec<_> = histories
                    .iter()
                    .map(biject::history_to_involution)
                    .collect::<Result<_>>()?;
                images.sort_unstable();
                images.dedup();
                let all = biject::enumerate_fpf_involutions(n);
                let pass =
                    images == all && BigUint::from(histories.len()) == odd_double_factorial(n);
                Ok((pass, format!("{} histories", histories.len())))
            })(),
        );
    }
}

/// Run a verification suite; every check is reported, none short-circuits.
pub fn run_suite(suite: Suite, budget: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Formulas | Suite::All) {
        formulas(budget, &mut out);
    }
    if matches!(suite, Suite::Structure | Suite::All) {
        structure(budget, &mut out);
    }
    if matches!(suite, Suite::Bijections | Suite::All) {
        bijections(budget, &mut out);
    }
    out
}
