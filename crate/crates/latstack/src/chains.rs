//! Exact maximal-chain counting, the closed-form count families, and the
//! column/row sequence grids.
//!
//! All counts are arbitrary-precision from the start; the tables reach
//! magnitudes around 10^17 within the published ranges and grow
//! superexponentially beyond them.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hypercube::{row_star_sublattice, star_sublattice};
use crate::poset::Poset;

/// Number of saturated chains from the bottom to the top, by dynamic
/// programming over the cover digraph in topological order.
pub fn count_maximal_chains(p: &Poset) -> Result<BigUint> {
    let (bottom, top) = p.bottom_top()?;
    let covers = p.covers();
    let preds = covers.predecessors();
    let order = covers.topological_order();
    let mut paths = vec![BigUint::from(0u32); p.size()];
    paths[bottom] = BigUint::from(1u32);
    for x in order {
        if x == bottom {
            continue;
        }
        let mut acc = BigUint::from(0u32);
        for &y in &preds[x] {
            acc += &paths[y];
        }
        paths[x] = acc;
    }
    Ok(paths[top].clone())
}

/// Every maximal chain as an id sequence from bottom to top, lexicographic
/// by cover choice. Fails (reporting the exact count) when more than `cap`
/// chains exist.
pub fn enumerate_maximal_chains(p: &Poset, cap: usize) -> Result<Vec<Vec<usize>>> {
    let count = count_maximal_chains(p)?;
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count, cap });
    }
    let (bottom, top) = p.bottom_top()?;
    let adj = p.covers().adjacency();
    let mut chains = Vec::new();
    let mut path = vec![bottom];
    fn dfs(
        x: usize,
        top: usize,
        adj: &[Vec<usize>],
        path: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
    ) {
        if x == top {
            chains.push(path.clone());
            return;
        }
        for &y in &adj[x] {
            path.push(y);
            dfs(y, top, adj, path, chains);
            path.pop();
        }
    }
    dfs(bottom, top, &adj, &mut path, &mut chains);
    Ok(chains)
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// `k`-dimensional Catalan number
/// `(kn)! · 0!1!…(k−1)! / (n!(n+1)!…(n+k−1)!)` — the count of standard
/// Young tableaux of rectangular shape `k × n` — counting maximal chains of
/// `Σ^k_n C_0`. Requires `k ≥ 1`.
pub fn catalan_kdim(k: usize, n: usize) -> BigUint {
    assert!(k >= 1, "k-dimensional Catalan numbers need k >= 1");
    let (k, n) = (k as u64, n as u64);
    let mut numer = factorial(k * n);
    let mut denom = BigUint::from(1u32);
    for j in 0..k {
        numer *= factorial(j);
        denom *= factorial(n + j);
    }
    numer / denom
}

/// Odd double factorial `(2n−1)!! = (2n)!/(2^n n!)`, with `(−1)!! = 1`.
pub fn odd_double_factorial(n: usize) -> BigUint {
    (0..n).fold(BigUint::from(1u32), |acc, i| acc * (2 * i as u64 + 1))
}

/// Number of m-partitions of an mn-element set, `(mn)!/((m!)^n n!)`,
/// counting maximal chains of `Σ_n C^n_{m−1}`. Requires `m ≥ 1`.
pub fn m_partition_count(m: usize, n: usize) -> BigUint {
    assert!(m >= 1, "m-partitions need m >= 1");
    let (m, n) = (m as u64, n as u64);
    factorial(m * n) / (factorial(m).pow(n as u32) * factorial(n))
}

/// Number of maximal chains of the chain power `C^n_m`, `(mn)!/(m!)^n`.
pub fn hypercube_count(m: usize, n: usize) -> BigUint {
    let (m, n) = (m as u64, n as u64);
    factorial(m * n) / factorial(m).pow(n as u32)
}

/// Number of Kreweras walks of length 3m, `(3m)! 4^m / ((m+1)!(2m+1)!)`.
pub fn kreweras(m: usize) -> BigUint {
    let m = m as u64;
    factorial(3 * m) * BigUint::from(4u32).pow(m as u32) / (factorial(m + 1) * factorial(2 * m + 1))
}

/// A Dyck-path height sequence `0 = i_0 ≤ i_1 ≤ … ≤ i_n = n` with
/// `i_j ≤ j`, weighting chain counts through falling factorials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightSequence {
    heights: Vec<usize>,
}

impl HeightSequence {
    pub fn new(heights: Vec<usize>) -> Result<HeightSequence> {
        let n = heights.len().saturating_sub(1);
        if heights.is_empty() || heights[0] != 0 || heights[n] != n {
            return Err(Error::Parse(
                "height sequence must start at 0 and end at its length".into(),
            ));
        }
        for j in 0..=n {
            if heights[j] > j || (j > 0 && heights[j] < heights[j - 1]) {
                return Err(Error::Parse(format!(
                    "height sequence violates the Dyck condition at index {j}"
                )));
            }
        }
        Ok(HeightSequence { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// The product of falling factorials
    /// `∏_j (j+1−i_j)^(falling i_{j+1}−i_j)`: the number of maximal chains
    /// that exit each stacked cube at the prescribed heights.
    pub fn weight(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for j in 0..self.heights.len() - 1 {
            let base = (j + 1 - self.heights[j]) as u64;
            let steps = (self.heights[j + 1] - self.heights[j]) as u64;
            for s in 0..steps {
                acc *= base - s;
            }
        }
        acc
    }

    /// All height sequences for a given `n`.
    pub fn enumerate(n: usize) -> Vec<HeightSequence> {
        let mut out = Vec::new();
        let mut cur = vec![0usize];
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HeightSequence>) {
            let j = cur.len() - 1;
            if j == n {
                if cur[j] == n {
                    out.push(HeightSequence {
                        heights: cur.clone(),
                    });
                }
                return;
            }
            for next in cur[j]..=(j + 1).min(n) {
                cur.push(next);
                rec(n, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }
}

/// The weighted Dyck-path sum for the stacked-hypercube chain count: the sum
/// of [`HeightSequence::weight`] over all height sequences of length `n`.
/// Equals `(2n−1)!!`.
pub fn weighted_dyck_sum(n: usize) -> BigUint {
    HeightSequence::enumerate(n)
        .iter()
        .map(HeightSequence::weight)
        .fold(BigUint::from(0u32), |acc, w| acc + w)
}

/// Which family of stacked lattices a grid ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// `Σ^k_n C^n_m`: column stacking, tabulated over `n` per `(m, k)`.
    Column,
    /// `Σ^k_m C^n_m`: row stacking, tabulated over `m` per `(n, k)`.
    Row,
}

impl Axis {
    pub fn as_str(&self) -> &'static str {
        match self {
            Axis::Column => "column",
            Axis::Row => "row",
        }
    }
}

/// Requested parameter ranges for a sequence grid (all bounds inclusive).
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub axis: Axis,
    pub k: (usize, usize),
    pub n: (usize, usize),
    pub m: (usize, usize),
    pub budget: usize,
}

/// One table cell: an exact count, or a marker for cells whose ambient
/// lattice exceeds the element budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridCell {
    Exact(BigUint),
    OverBudget,
}

/// A rendered-ready table of maximal-chain counts: `cells[outer][inner]`
/// lists the counts along the sequence parameter (`n` for the column axis,
/// `m` for the row axis), grouped by the outer parameter and `k`.
#[derive(Clone, Debug)]
pub struct SequenceGrid {
    pub axis: Axis,
    /// `m` values (column axis) or `n` values (row axis).
    pub outer: Vec<usize>,
    /// `k` values.
    pub inner: Vec<usize>,
    /// `n` values (column axis) or `m` values (row axis).
    pub seq: Vec<usize>,
    pub cells: Vec<Vec<Vec<GridCell>>>,
}

/// Compute a sequence grid cell by cell. Cells over the element budget are
/// marked and the run continues; any other construction failure aborts.
pub fn grid(spec: &GridSpec) -> Result<SequenceGrid> {
    let range = |(lo, hi): (usize, usize)| (lo..=hi).collect::<Vec<_>>();
    let (outer, seq) = match spec.axis {
        Axis::Column => (range(spec.m), range(spec.n)),
        Axis::Row => (range(spec.n), range(spec.m)),
    };
    let inner = range(spec.k);
    let mut cells = Vec::with_capacity(outer.len());
    for &o in &outer {
        let mut per_k = Vec::with_capacity(inner.len());
        for &k in &inner {
            let mut row = Vec::with_capacity(seq.len());
            for &s in &seq {
                let poset = match spec.axis {
                    Axis::Column => star_sublattice(k, s, o, spec.budget).map(|x| x.poset),
                    Axis::Row => row_star_sublattice(o, k, s, spec.budget).map(|x| x.poset),
                };
                match poset {
                    Ok(p) => row.push(GridCell::Exact(count_maximal_chains(&p)?)),
                    Err(Error::Size { .. }) => row.push(GridCell::OverBudget),
                    Err(e) => return Err(e),
                }
            }
            per_k.push(row);
        }
        cells.push(per_k);
    }
    Ok(SequenceGrid {
        axis: spec.axis,
        outer,
        inner,
        seq,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::{chain, power};
    use crate::lax::{iterate_stacking, LaxSum};
    use crate::poset::DEFAULT_ELEMENT_BUDGET;

    const B: usize = DEFAULT_ELEMENT_BUDGET;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn singleton_and_chain_counts() {
        assert_eq!(count_maximal_chains(&chain(0).poset).unwrap(), big(1));
        assert_eq!(count_maximal_chains(&chain(2).poset).unwrap(), big(1));
    }

    #[test]
    fn cube_has_six_chains() {
        let cube = power(1, 3, B).unwrap();
        assert_eq!(count_maximal_chains(&cube.poset).unwrap(), big(6));
        assert_eq!(enumerate_maximal_chains(&cube.poset, 100).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_matches_dp_on_products() {
        for (m, n) in [(1, 2), (2, 2), (1, 3)] {
            let p = power(m, n, B).unwrap().poset;
            let dp = count_maximal_chains(&p).unwrap();
            let listed = enumerate_maximal_chains(&p, 10_000).unwrap();
            assert_eq!(dp, big(listed.len() as u64));
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_capped() {
        let p = power(1, 2, B).unwrap().poset;
        let chains = enumerate_maximal_chains(&p, 10).unwrap();
        assert_eq!(chains, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        let err = enumerate_maximal_chains(&p, 1).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                count: big(2),
                cap: 1
            }
        );
    }

    #[test]
    fn stacked_squares_have_three_chains() {
        // Σ_2 C^2_1 = lax sum of C^0_1 -> C^1_1 -> C^2_1: 7 elements, 3 chains.
        let (stage0, maps) = crate::hypercube::column_series(2, 1, B).unwrap();
        let sum = LaxSum::build(stage0, &maps).unwrap();
        assert_eq!(sum.carrier().size(), 7);
        assert_eq!(count_maximal_chains(sum.carrier()).unwrap(), big(3));
        let chains = enumerate_maximal_chains(sum.carrier(), 10).unwrap();
        assert_eq!(chains.len(), 3);
    }

    #[test]
    fn iterated_stacking_matches_published_cells() {
        // Σ^2_4 C_0 -> 14 (Catalan), Σ^2_2 C^2_1 -> 7.
        let (s0, maps) = crate::hypercube::column_series(4, 0, B).unwrap();
        let p = iterate_stacking(s0, &maps, 2, B).unwrap();
        assert_eq!(count_maximal_chains(&p).unwrap(), big(14));
        let (s0, maps) = crate::hypercube::column_series(2, 1, B).unwrap();
        let p = iterate_stacking(s0, &maps, 2, B).unwrap();
        assert_eq!(count_maximal_chains(&p).unwrap(), big(7));
    }

    #[test]
    fn dp_equals_formula_on_representations() {
        let s = star_sublattice(2, 4, 0, B).unwrap();
        assert_eq!(count_maximal_chains(&s.poset).unwrap(), big(14));
        let s = star_sublattice(1, 3, 1, B).unwrap();
        assert_eq!(count_maximal_chains(&s.poset).unwrap(), big(15));
        let s = star_sublattice(2, 2, 1, B).unwrap();
        assert_eq!(count_maximal_chains(&s.poset).unwrap(), big(7));
        let r = row_star_sublattice(2, 1, 2, B).unwrap();
        assert_eq!(count_maximal_chains(&r.poset).unwrap(), big(16));
    }

    #[test]
    fn closed_forms_match_published_values() {
        assert_eq!(catalan_kdim(2, 4), big(14));
        assert_eq!(catalan_kdim(3, 3), big(42));
        assert_eq!(catalan_kdim(3, 4), big(462));
        assert_eq!(catalan_kdim(1, 9), big(1));
        assert_eq!(odd_double_factorial(0), big(1));
        assert_eq!(odd_double_factorial(3), big(15));
        assert_eq!(odd_double_factorial(7), big(135135));
        assert_eq!(m_partition_count(3, 2), big(10));
        assert_eq!(m_partition_count(1, 5), big(1));
        for n in 0..8 {
            assert_eq!(m_partition_count(2, n), odd_double_factorial(n));
        }
        assert_eq!(hypercube_count(1, 4), big(24));
        assert_eq!(hypercube_count(2, 3), big(90));
        assert_eq!(hypercube_count(5, 0), big(1));
        assert_eq!(kreweras(0), big(1));
        assert_eq!(kreweras(2), big(16));
        assert_eq!(kreweras(5), big(46592));
    }

    #[test]
    fn dyck_weights_and_sum() {
        let h = HeightSequence::new(vec![0, 0, 0, 1, 1, 4, 6, 7]).unwrap();
        assert_eq!(h.weight(), big(144));
        assert_eq!(weighted_dyck_sum(0), big(1));
        assert_eq!(weighted_dyck_sum(5), big(945));
        for n in 0..=8 {
            assert_eq!(weighted_dyck_sum(n), odd_double_factorial(n), "n={n}");
        }
    }

    #[test]
    fn height_sequence_validation() {
        assert!(HeightSequence::new(vec![0, 0, 2]).is_ok());
        assert!(HeightSequence::new(vec![0, 2, 2]).is_err()); // i_1 > 1
        assert!(HeightSequence::new(vec![0, 1, 0]).is_err()); // not monotone
        assert!(HeightSequence::new(vec![1, 1]).is_err()); // i_0 != 0
    }

    #[test]
    fn grid_cells_match_figure_rows() {
        let g = grid(&GridSpec {
            axis: Axis::Column,
            k: (2, 2),
            n: (0, 4),
            m: (2, 2),
            budget: B,
        })
        .unwrap();
        let expected = [1u64, 1, 25, 2305, 482825];
        for (cell, want) in g.cells[0][0].iter().zip(expected) {
            assert_eq!(*cell, GridCell::Exact(big(want)));
        }

        let g = grid(&GridSpec {
            axis: Axis::Row,
            k: (1, 1),
            n: (3, 3),
            m: (0, 3),
            budget: B,
        })
        .unwrap();
        let expected = [1u64, 6, 288, 24444];
        for (cell, want) in g.cells[0][0].iter().zip(expected) {
            assert_eq!(*cell, GridCell::Exact(big(want)));
        }
    }

    #[test]
    fn degenerate_grid_is_a_single_unit_cell() {
        for axis in [Axis::Column, Axis::Row] {
            let g = grid(&GridSpec {
                axis,
                k: (0, 0),
                n: (0, 0),
                m: (0, 0),
                budget: B,
            })
            .unwrap();
            assert_eq!(g.cells, vec![vec![vec![GridCell::Exact(big(1))]]]);
        }
    }

    #[test]
    fn over_budget_cells_are_marked() {
        let g = grid(&GridSpec {
            axis: Axis::Column,
            k: (0, 0),
            n: (0, 8),
            m: (3, 3),
            budget: 5000,
        })
        .unwrap();
        assert_eq!(g.cells[0][0][4], GridCell::Exact(hypercube_count(3, 4)));
        assert_eq!(g.cells[0][0][8], GridCell::OverBudget);
    }

    #[test]
    fn representation_independence_on_small_cells() {
        for (k, n, m) in [(1, 2, 1), (2, 2, 0), (2, 3, 0), (1, 2, 2), (3, 2, 1)] {
            let (s0, maps) = crate::hypercube::column_series(n, m, B).unwrap();
            let stacked = iterate_stacking(s0, &maps, k, B).unwrap();
            let rep = star_sublattice(k, n, m, B).unwrap();
            assert_eq!(
                count_maximal_chains(&stacked).unwrap(),
                count_maximal_chains(&rep.poset).unwrap(),
                "k={k} n={n} m={m}"
            );
        }
        for (k, n, m) in [(1, 2, 2), (2, 1, 2), (1, 3, 1)] {
            let (s0, maps) = crate::hypercube::row_series(n, m, B).unwrap();
            let stacked = iterate_stacking(s0, &maps, k, B).unwrap();
            let rep = row_star_sublattice(n, k, m, B).unwrap();
            assert_eq!(
                count_maximal_chains(&stacked).unwrap(),
                count_maximal_chains(&rep.poset).unwrap(),
                "k={k} n={n} m={m}"
            );
        }
    }

    #[test]
    fn lax_sum_meet_join_agrees_on_a_stacked_square() {
        let (stage0, maps) = crate::hypercube::column_series(2, 1, B).unwrap();
        let series = crate::lax::LatticeSeries::new(stage0, &maps).unwrap();
        let sum = series.partial_sum(2).unwrap();
        let p = sum.carrier();
        for a in 0..p.size() {
            for b in 0..p.size() {
                assert_eq!(
                    crate::lax::lax_sum_meet_join(&sum, a, b).unwrap(),
                    p.meet_join(a, b).unwrap()
                );
            }
        }
    }
}
