//! Round-trip-verified bijections between maximal chains and combinatorial
//! families: restricted words, m-partitions, first-quadrant lattice walks,
//! and Hermite histories.
//!
//! Chains are stored bottom→top everywhere; the word and partition
//! bijections read them top→down (each step of the descent decrements one
//! coordinate), which is the direction their bookkeeping is phrased in.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercube::{Coords, RowStarSublattice, StarSublattice};

/// A word over the alphabet `a_1 … a_n` (letters stored 1-based) in which
/// every letter occurs exactly `k+1` times and every prefix satisfies the
/// stack condition: once `a_i` occurs, it keeps at least as many
/// occurrences as every later letter `a_j` (`j > i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackWord {
    pub k: usize,
    pub n: usize,
    letters: Vec<usize>,
}

impl StackWord {
    pub fn new(letters: Vec<usize>, k: usize, n: usize) -> Result<StackWord> {
        if letters.len() != (k + 1) * n {
            return Err(Error::InvalidWord {
                prefix_len: letters.len(),
            });
        }
        let mut counts = vec![0usize; n + 1];
        for (pos, &letter) in letters.iter().enumerate() {
            if letter == 0 || letter > n {
                return Err(Error::InvalidWord {
                    prefix_len: pos + 1,
                });
            }
            counts[letter] += 1;
            if counts[letter] > k + 1 {
                return Err(Error::InvalidWord {
                    prefix_len: pos + 1,
                });
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    if counts[i] > 0 && counts[i] < counts[j] {
                        return Err(Error::InvalidWord {
                            prefix_len: pos + 1,
                        });
                    }
                }
            }
        }
        if counts[1..].iter().any(|&c| c != k + 1) {
            return Err(Error::InvalidWord {
                prefix_len: letters.len(),
            });
        }
        Ok(StackWord { k, n, letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

/// A partition of `{1, …, mn}` into `n` blocks of size `m`, kept in the
/// canonical form: each block ascending, blocks ordered by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MPartition {
    pub m: usize,
    pub n: usize,
    blocks: Vec<Vec<usize>>,
}

impl MPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>, m: usize, n: usize) -> Result<MPartition> {
        if blocks.len() != n {
            return Err(Error::InvalidPartition(format!(
                "expected {n} blocks, found {}",
                blocks.len()
            )));
        }
        let mut seen = vec![false; m * n + 1];
        for block in &mut blocks {
            block.sort_unstable();
            if block.len() != m {
                return Err(Error::InvalidPartition(format!(
                    "block {block:?} does not have size {m}"
                )));
            }
            for &e in block.iter() {
                if e == 0 || e > m * n || seen[e] {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} repeated or out of range"
                    )));
                }
                seen[e] = true;
            }
        }
        blocks.sort_unstable();
        Ok(MPartition { m, n, blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// One step of a first-quadrant lattice walk in the box `C^n_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WalkStep {
    /// The diagonal step `(1, 1, …, 1)`.
    Diag,
    /// `−1` in the given coordinate (1-based).
    Down(usize),
}

/// A closed walk of length `(n+1)m` in the box `C^n_m`, starting and ending
/// at the origin and never leaving the nonnegative orthant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticeWalk {
    pub n: usize,
    pub m: usize,
    steps: Vec<WalkStep>,
}

impl LatticeWalk {
    pub fn new(steps: Vec<WalkStep>, n: usize, m: usize) -> Result<LatticeWalk> {
        if steps.len() != (n + 1) * m {
            return Err(Error::InvalidWalk {
                step: steps.len(),
                reason: format!("length must be (n+1)m = {}", (n + 1) * m),
            });
        }
        let mut pos = vec![0i64; n];
        for (idx, step) in steps.iter().enumerate() {
            match step {
                WalkStep::Diag => pos.iter_mut().for_each(|p| *p += 1),
                WalkStep::Down(i) => {
                    if *i == 0 || *i > n {
                        return Err(Error::InvalidWalk {
                            step: idx + 1,
                            reason: format!("coordinate {i} out of range"),
                        });
                    }
                    pos[i - 1] -= 1;
                    if pos[i - 1] < 0 {
                        return Err(Error::InvalidWalk {
                            step: idx + 1,
                            reason: "walk leaves the nonnegative orthant".into(),
                        });
                    }
                }
            }
        }
        if pos.iter().any(|&p| p != 0) {
            return Err(Error::InvalidWalk {
                step: steps.len(),
                reason: "walk does not return to the origin".into(),
            });
        }
        Ok(LatticeWalk { n, m, steps })
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }
}

/// A weighted Dyck path: an up/down step sequence of length 2n together
/// with a choice at each up-step, bounded by the height reached there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteHistory {
    /// `true` for an up-step.
    path: Vec<bool>,
    /// One choice per up-step, left to right, each in `1..=height`.
    choices: Vec<usize>,
}

impl HermiteHistory {
    pub fn new(path: Vec<bool>, choices: Vec<usize>) -> Result<HermiteHistory> {
        if !path.len().is_multiple_of(2) {
            return Err(Error::Parse("Dyck path must have even length".into()));
        }
        let mut height = 0i64;
        let mut ups = 0usize;
        for (pos, &up) in path.iter().enumerate() {
            height += if up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse(format!(
                    "path drops below zero at position {}",
                    pos + 1
                )));
            }
            if up {
                if ups >= choices.len() {
                    return Err(Error::Parse("missing choice for an up-step".into()));
                }
                let (choice, bound) = (choices[ups], height as usize);
                if choice == 0 || choice > bound {
                    return Err(Error::ChoiceOutOfRange {
                        position: pos + 1,
                        choice,
                        bound,
                    });
                }
                ups += 1;
            }
        }
        if height != 0 {
            return Err(Error::Parse("path does not return to zero".into()));
        }
        if ups != choices.len() {
            return Err(Error::Parse("too many choices for the path".into()));
        }
        Ok(HermiteHistory { path, choices })
    }

    pub fn path(&self) -> &[bool] {
        &self.path
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }
}

/// Validate that `chain` is a maximal bottom→top chain of the given tuple
/// family and return the tuples along it.
fn chain_tuples<'a>(
    tuples: impl Fn(usize) -> &'a [u32],
    size: usize,
    expected_len: usize,
    chain: &[usize],
) -> Result<Vec<&'a [u32]>> {
    if chain.len() != expected_len {
        return Err(Error::NotMaximal(format!(
            "chain has {} points, a maximal chain has {expected_len}",
            chain.len()
        )));
    }
    for &id in chain {
        if id >= size {
            return Err(Error::Range { id, size });
        }
    }
    let ts: Vec<&[u32]> = chain.iter().map(|&id| tuples(id)).collect();
    for w in ts.windows(2) {
        if increment_coordinate(w[0], w[1]).is_none() {
            return Err(Error::NotMaximal(format!(
                "consecutive points {:?} and {:?} are not a cover step",
                w[0], w[1]
            )));
        }
    }
    let dim = ts[0].len();
    if ts[0].iter().any(|&c| c != 0) {
        return Err(Error::NotMaximal(
            "chain does not start at the bottom".into(),
        ));
    }
    let top = ts[expected_len - 1];
    if (0..dim).any(|i| top[i] != top[0]) {
        return Err(Error::NotMaximal("chain does not end at the top".into()));
    }
    Ok(ts)
}

/// The unique coordinate raised by exactly one, if the pair is such a step.
fn increment_coordinate(a: &[u32], b: &[u32]) -> Option<usize> {
    let mut found = None;
    for (i, (&x, &y)) in a.iter().zip(b).enumerate() {
        if y == x + 1 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        } else if y != x {
            return None;
        }
    }
    found
}

/// Read a maximal chain of `C^{n∗}_{k+1}` (the `m = 1` column
/// representation of `Σ^k_n C^n_1`) top→down, emitting letter `a_i` for
/// each decrement of coordinate `i`.
pub fn chain_to_word(rep: &StarSublattice, chain: &[usize]) -> Result<StackWord> {
    if rep.m != 1 {
        return Err(Error::Composition(
            "the word bijection uses the m = 1 representation".into(),
        ));
    }
    let (k, n) = (rep.k, rep.n);
    let ts = chain_tuples(|id| rep.tuple(id), rep.len(), (k + 1) * n + 1, chain)?;
    let letters = ts
        .windows(2)
        .rev()
        .map(|w| increment_coordinate(w[0], w[1]).unwrap() + 1)
        .collect();
    StackWord::new(letters, k, n)
}

/// Inverse of [`chain_to_word`]: descend from the all-`k+1` tuple along the
/// word's letters and return the chain bottom→top. Every visited tuple
/// satisfies condition (∗), so membership lookups cannot fail.
pub fn word_to_chain(word: &StackWord, rep: &StarSublattice) -> Result<Vec<usize>> {
    if rep.m != 1 || rep.k != word.k || rep.n != word.n {
        return Err(Error::Composition(
            "representation parameters do not match the word".into(),
        ));
    }
    let mut tuple: Coords = vec![(word.k + 1) as u32; word.n];
    let mut ids = vec![rep.member_of(&tuple).expect("the top tuple satisfies (*)")];
    for &letter in &word.letters {
        tuple[letter - 1] -= 1;
        ids.push(
            rep.member_of(&tuple)
                .expect("descent along a valid word stays inside (*)"),
        );
    }
    ids.reverse();
    Ok(ids)
}

/// Read a maximal chain of `C^{n∗}_m` with `k = 1` (so `Σ_n C^n_{m'}` with
/// `m' = m − 1` and blocks of size `m' + 1`) top→down, grouping the
/// descent steps by the coordinate they decrement.
pub fn chain_to_partition(rep: &StarSublattice, chain: &[usize]) -> Result<MPartition> {
    if rep.k != 1 {
        return Err(Error::Composition(
            "the partition bijection uses the k = 1 representation".into(),
        ));
    }
    let (n, block_size) = (rep.n, rep.m + 1);
    let ts = chain_tuples(|id| rep.tuple(id), rep.len(), block_size * n + 1, chain)?;
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (t, w) in ts.windows(2).rev().enumerate() {
        let coord = increment_coordinate(w[0], w[1]).unwrap();
        blocks.entry(coord).or_default().push(t + 1);
    }
    MPartition::new(blocks.into_values().collect(), block_size, n)
}

/// Inverse of [`chain_to_partition`]. Blocks ranked by their maxima drive
/// coordinates `1..=n` in that order: the coordinate that bottoms out first
/// during the descent is the leftmost one.
pub fn partition_to_chain(partition: &MPartition, rep: &StarSublattice) -> Result<Vec<usize>> {
    if rep.k != 1 || rep.n != partition.n || rep.m + 1 != partition.m {
        return Err(Error::Composition(
            "representation parameters do not match the partition".into(),
        ));
    }
    let (n, m) = (partition.n, partition.m);
    let mut ranked: Vec<&Vec<usize>> = partition.blocks.iter().collect();
    ranked.sort_by_key(|block| *block.last().unwrap());
    let mut coordinate_of_time = vec![0usize; m * n + 1];
    for (coord, block) in ranked.iter().enumerate() {
        for &t in block.iter() {
            coordinate_of_time[t] = coord;
        }
    }
    let mut tuple: Coords = vec![m as u32; n];
    let mut ids = vec![rep.member_of(&tuple).expect("the top tuple satisfies (*)")];
    for t in 1..=m * n {
        tuple[coordinate_of_time[t]] -= 1;
        ids.push(
            rep.member_of(&tuple)
                .expect("max-ranked blocks keep the zeros in a prefix"),
        );
    }
    ids.reverse();
    Ok(ids)
}

/// Read a maximal chain of `C^{(n+1)⋆}_m` (the `k = 1` row representation
/// of `Σ_m C^n_m`) bottom→top: an increment of coordinate `i ≤ n` becomes
/// the step `−e_i` and an increment of the last coordinate the diagonal
/// step.
pub fn chain_to_walk(rep: &RowStarSublattice, chain: &[usize]) -> Result<LatticeWalk> {
    if rep.k != 1 {
        return Err(Error::Composition(
            "the walk bijection uses the k = 1 representation".into(),
        ));
    }
    let (n, m) = (rep.n, rep.m);
    let ts = chain_tuples(|id| rep.tuple(id), rep.len(), (n + 1) * m + 1, chain)?;
    let steps = ts
        .windows(2)
        .map(|w| match increment_coordinate(w[0], w[1]).unwrap() {
            i if i == n => WalkStep::Diag,
            i => WalkStep::Down(i + 1),
        })
        .collect();
    LatticeWalk::new(steps, n, m)
}

/// Inverse of [`chain_to_walk`].
pub fn walk_to_chain(walk: &LatticeWalk, rep: &RowStarSublattice) -> Result<Vec<usize>> {
    if rep.k != 1 || rep.n != walk.n || rep.m != walk.m {
        return Err(Error::Composition(
            "representation parameters do not match the walk".into(),
        ));
    }
    let (n, _m) = (walk.n, walk.m);
    let mut tuple: Coords = vec![0; n + 1];
    let mut ids = vec![rep.member_of(&tuple).expect("the origin satisfies (⋆)")];
    for step in &walk.steps {
        match step {
            WalkStep::Diag => tuple[n] += 1,
            WalkStep::Down(i) => tuple[i - 1] += 1,
        }
        ids.push(
            rep.member_of(&tuple)
                .expect("orthant-respecting walks stay inside (⋆)"),
        );
    }
    Ok(ids)
}

/// Pair each up-step node with its chosen down-step node: up-steps are
/// processed right to left, and a choice of `c` picks the `c`-th available
/// down-step to the right, counting from the right. The result is a
/// fixed-point-free involution presented as a 2-partition.
pub fn history_to_involution(history: &HermiteHistory) -> Result<MPartition> {
    let len = history.path.len();
    let n = len / 2;
    let up_positions: Vec<usize> = (0..len).filter(|&p| history.path[p]).collect();
    let mut available: Vec<usize> = (0..len).filter(|&p| !history.path[p]).collect();
    let mut blocks = Vec::with_capacity(n);
    for (&p, &choice) in up_positions.iter().rev().zip(history.choices.iter().rev()) {
        let right_of_p = available.iter().filter(|&&d| d > p).count();
        debug_assert!(choice <= right_of_p, "validated at construction");
        let idx = available.len() - choice;
        let d = available.remove(idx);
        blocks.push(vec![p + 1, d + 1]);
    }
    MPartition::new(blocks, 2, n)
}

/// All valid stack words for the given `k` and `n`, in lexicographic order.
pub fn enumerate_stack_words(k: usize, n: usize) -> Vec<StackWord> {
    let total = (k + 1) * n;
    let mut out = Vec::new();
    let mut counts = vec![0usize; n + 1];
    let mut letters = Vec::with_capacity(total);
    fn rec(
        k: usize,
        n: usize,
        total: usize,
        counts: &mut Vec<usize>,
        letters: &mut Vec<usize>,
        out: &mut Vec<StackWord>,
    ) {
        if letters.len() == total {
            out.push(StackWord {
                k,
                n,
                letters: letters.clone(),
            });
            return;
        }
        'letters: for letter in 1..=n {
            if counts[letter] == k + 1 {
                continue;
            }
            counts[letter] += 1;
            for i in 1..=n {
                for j in i + 1..=n {
                    if counts[i] > 0 && counts[i] < counts[j] {
                        counts[letter] -= 1;
                        continue 'letters;
                    }
                }
            }
            letters.push(letter);
            rec(k, n, total, counts, letters, out);
            letters.pop();
            counts[letter] -= 1;
        }
    }
    if n == 0 {
        return vec![StackWord {
            k,
            n,
            letters: Vec::new(),
        }];
    }
    rec(k, n, total, &mut counts, &mut letters, &mut out);
    out
}

/// All m-partitions of `{1, …, mn}`, canonical blocks, deterministic order.
pub fn enumerate_mpartitions(m: usize, n: usize) -> Vec<MPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        next: usize,
        m: usize,
        n: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<MPartition>,
    ) {
        if next > m * n {
            out.push(MPartition {
                m,
                n,
                blocks: blocks.clone(),
            });
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].len() < m {
                blocks[b].push(next);
                rec(next + 1, m, n, blocks, out);
                blocks[b].pop();
            }
        }
        if blocks.len() < n {
            blocks.push(vec![next]);
            rec(next + 1, m, n, blocks, out);
            blocks.pop();
        }
    }
    rec(1, m, n, &mut blocks, &mut out);
    // The smallest unassigned element always opens or joins in order, so the
    // generated block lists are already canonical.
    out
}

/// All fixed-point-free involutions of `{1, …, 2n}` as 2-partitions.
pub fn enumerate_fpf_involutions(n: usize) -> Vec<MPartition> {
    let mut out = Vec::new();
    let free: Vec<usize> = (1..=2 * n).collect();
    let mut blocks = Vec::new();
    fn rec(free: &[usize], blocks: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<MPartition>) {
        let Some(&a) = free.first() else {
            out.push(MPartition {
                m: 2,
                n,
                blocks: blocks.clone(),
            });
            return;
        };
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest = free[1..].to_vec();
            rest.remove(idx - 1);
            blocks.push(vec![a, b]);
            rec(&rest, blocks, n, out);
            blocks.pop();
        }
    }
    rec(&free, &mut blocks, n, &mut out);
    out.iter_mut().for_each(|p| p.blocks.sort_unstable());
    out.sort_unstable();
    out
}

/// All closed orthant walks of length `(n+1)m` in the box `C^n_m`.
pub fn enumerate_walks(n: usize, m: usize) -> Vec<LatticeWalk> {
    let total = (n + 1) * m;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(total);
    let mut pos = vec![0usize; n];
    fn rec(
        n: usize,
        m: usize,
        total: usize,
        diags: usize,
        pos: &mut Vec<usize>,
        steps: &mut Vec<WalkStep>,
        out: &mut Vec<LatticeWalk>,
    ) {
        if steps.len() == total {
            if pos.iter().all(|&p| p == 0) {
                out.push(LatticeWalk {
                    n,
                    m,
                    steps: steps.clone(),
                });
            }
            return;
        }
        if diags < m {
            pos.iter_mut().for_each(|p| *p += 1);
            steps.push(WalkStep::Diag);
            rec(n, m, total, diags + 1, pos, steps, out);
            steps.pop();
            pos.iter_mut().for_each(|p| *p -= 1);
        }
        for i in 1..=n {
            if pos[i - 1] > 0 {
                pos[i - 1] -= 1;
                steps.push(WalkStep::Down(i));
                rec(n, m, total, diags, pos, steps, out);
                steps.pop();
                pos[i - 1] += 1;
            }
        }
    }
    rec(n, m, total, 0, &mut pos, &mut steps, &mut out);
    out
}

/// All Hermite histories over `2n` steps.
pub fn enumerate_histories(n: usize) -> Vec<HermiteHistory> {
    let mut paths = Vec::new();
    let mut path = Vec::with_capacity(2 * n);
    fn paths_rec(len: usize, height: usize, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if path.len() == len {
            out.push(path.clone());
            return;
        }
        let remaining = len - path.len();
        if height < remaining {
            path.push(true);
            paths_rec(len, height + 1, path, out);
            path.pop();
        }
        if height > 0 {
            path.push(false);
            paths_rec(len, height - 1, path, out);
            path.pop();
        }
    }
    paths_rec(2 * n, 0, &mut path, &mut paths);

    let mut out = Vec::new();
    for path in paths {
        let mut bounds = Vec::new();
        let mut height = 0usize;
        for &up in &path {
            if up {
                height += 1;
                bounds.push(height);
            } else {
                height -= 1;
            }
        }
        let mut choices: Vec<usize> = vec![1; bounds.len()];
        loop {
            out.push(HermiteHistory {
                path: path.clone(),
                choices: choices.clone(),
            });
            let mut pos = bounds.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if choices[pos] < bounds[pos] {
                    choices[pos] += 1;
                    break;
                }
                choices[pos] = 1;
            }
            if choices.iter().all(|&c| c == 1) {
                break;
            }
        }
    }
    out
}
