//! Chain powers `C^n_m` and the sublattice representations of stacked
//! lattices.
//!
//! The column representation realizes `Σ^k_n C^n_m` inside `C^n_{k+m}` as the
//! tuples satisfying condition (∗): whenever `x_{i+1} < k`, also
//! `x_i ≤ x_{i+1}`. The row representation realizes `Σ^k_m C^n_m` inside
//! `C^{n+k}_m` as the tuples satisfying condition (⋆): the last `k`
//! coordinates weakly increase and dominate the first `n`. Both sublattices
//! are closed under ambient meets and joins, so their lattice structure is
//! induced componentwise.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use crate::poset::{BitMatrix, IsoWitness, Poset, MAX_POSET_SIZE};

/// Tuple coordinates of an element of `C^n_m`.
pub type Coords = Vec<u32>;

pub(crate) fn tuple_label(t: &[u32], height: u32) -> String {
    if t.is_empty() {
        "()".to_string()
    } else if height <= 9 {
        t.iter().map(|c| c.to_string()).collect()
    } else {
        let parts: Vec<String> = t.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }
}

fn ambient_size(height: usize, dim: usize) -> u128 {
    (height as u128 + 1).pow(dim as u32)
}

fn check_budget(height: usize, dim: usize, budget: usize) -> Result<()> {
    let required = ambient_size(height, dim);
    if required > budget as u128 {
        return Err(Error::Size {
            required,
            limit: budget,
        });
    }
    Ok(())
}

fn decode(mut id: usize, height: usize, dim: usize) -> Coords {
    let base = height + 1;
    let mut t = vec![0u32; dim];
    for i in (0..dim).rev() {
        t[i] = (id % base) as u32;
        id /= base;
    }
    t
}

fn encode(t: &[u32], height: usize) -> usize {
    let base = height + 1;
    t.iter().fold(0usize, |acc, &c| acc * base + c as usize)
}

fn componentwise_leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Build the induced poset of a tuple family under componentwise order.
fn poset_of_tuples(tuples: &[Coords], height: usize) -> Result<Arc<Poset>> {
    let n = tuples.len();
    if n > MAX_POSET_SIZE {
        return Err(Error::Size {
            required: n as u128,
            limit: MAX_POSET_SIZE,
        });
    }
    let mut leq = BitMatrix::new(n);
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            if componentwise_leq(a, b) {
                leq.set(i, j);
            }
        }
    }
    let labels = tuples
        .iter()
        .map(|t| tuple_label(t, height as u32))
        .collect();
    Ok(Poset::from_rows(leq, Some(labels))?.into_arc())
}

/// The chain power `C^n_m` with its base-(m+1) positional encoding.
#[derive(Clone)]
pub struct HypercubeLattice {
    pub n: usize,
    pub m: usize,
    pub poset: Arc<Poset>,
    tuples: Vec<Coords>,
}

impl HypercubeLattice {
    pub fn tuples(&self) -> &[Coords] {
        &self.tuples
    }

    pub fn tuple(&self, id: usize) -> &[u32] {
        &self.tuples[id]
    }

    pub fn id_of(&self, t: &[u32]) -> usize {
        encode(t, self.m)
    }
}

/// The chain `C_m` (one-dimensional hypercube).
pub fn chain(m: usize) -> HypercubeLattice {
    power(m, 1, MAX_POSET_SIZE).expect("chain height exceeds the poset size cap")
}

/// The chain power `C^n_m` under componentwise order; `n = 0` is the
/// singleton.
pub fn power(m: usize, n: usize, budget: usize) -> Result<HypercubeLattice> {
    check_budget(m, n, budget)?;
    let size = ambient_size(m, n) as usize;
    let tuples: Vec<Coords> = (0..size).map(|id| decode(id, m, n)).collect();
    let poset = poset_of_tuples(&tuples, m)?;
    Ok(HypercubeLattice {
        n,
        m,
        poset,
        tuples,
    })
}

/// Condition (∗) for the column representation: `x_{i+1} ∈ {0,…,k−1}`
/// forces `x_i ≤ x_{i+1}`.
pub fn satisfies_star(t: &[u32], k: usize) -> bool {
    t.windows(2).all(|w| w[1] as usize >= k || w[0] <= w[1])
}

/// Condition (⋆) for the row representation on tuples of length `n + k`:
/// the last `k` coordinates weakly increase and dominate the first `n`.
pub fn satisfies_row_star(t: &[u32], n: usize, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    t[..n].iter().all(|&x| x <= t[n]) && t[n..].windows(2).all(|w| w[0] <= w[1])
}

/// Condition (∗′) over the ambient `C^n_{k+1}`: each coordinate either
/// equals `k+1` or is dominated by every coordinate to its right.
pub fn check_star_prime(t: &[u32], k: usize) -> bool {
    (0..t.len()).all(|i| t[i] as usize == k + 1 || t[i + 1..].iter().all(|&xj| t[i] <= xj))
}

/// The sublattice of `C^n_{k+m}` cut out by condition (∗), isomorphic to
/// `Σ^k_n C^n_m`.
#[derive(Clone)]
pub struct StarSublattice {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub poset: Arc<Poset>,
    tuples: Vec<Coords>,
    parent_ids: Vec<usize>,
}

/// The sublattice of `C^{n+k}_m` cut out by condition (⋆), isomorphic to
/// `Σ^k_m C^n_m`.
#[derive(Clone)]
pub struct RowStarSublattice {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub poset: Arc<Poset>,
    tuples: Vec<Coords>,
    parent_ids: Vec<usize>,
}

macro_rules! sublattice_accessors {
    ($ty:ident) => {
        impl $ty {
            pub fn len(&self) -> usize {
                self.tuples.len()
            }

            pub fn is_empty(&self) -> bool {
                self.tuples.is_empty()
            }

            pub fn tuples(&self) -> &[Coords] {
                &self.tuples
            }

            pub fn tuple(&self, member: usize) -> &[u32] {
                &self.tuples[member]
            }

            /// Ids of the members inside the ambient hypercube.
            pub fn parent_ids(&self) -> &[usize] {
                &self.parent_ids
            }

            fn member_of_ambient(&self, ambient: usize) -> Option<usize> {
                self.parent_ids.binary_search(&ambient).ok()
            }

            /// Member index of a tuple, if it satisfies the membership rule.
            pub fn member_of(&self, t: &[u32]) -> Option<usize> {
                self.member_of_ambient(encode(t, self.ambient_height()))
            }

            /// Ambient meets and joins of members are again members.
            pub fn verify_meet_join_closure(&self) -> bool {
                let dim = self.tuples.first().map_or(0, |t| t.len());
                let mut meet = vec![0u32; dim];
                let mut join = vec![0u32; dim];
                for (i, a) in self.tuples.iter().enumerate() {
                    for b in &self.tuples[i + 1..] {
                        for (c, (&x, &y)) in a.iter().zip(b).enumerate() {
                            meet[c] = x.min(y);
                            join[c] = x.max(y);
                        }
                        if self.member_of(&meet).is_none() || self.member_of(&join).is_none() {
                            return false;
                        }
                    }
                }
                true
            }

            /// Every cover edge raises exactly one coordinate by exactly 1.
            /// This is checked, never assumed: the poset's covers come from
            /// a full transitive reduction.
            pub fn covers_increment_one_coordinate(&self) -> bool {
                self.poset.covers().edges.iter().all(|&(x, y)| {
                    let (a, b) = (&self.tuples[x], &self.tuples[y]);
                    let mut raised = 0;
                    for (&p, &q) in a.iter().zip(b) {
                        if q == p + 1 {
                            raised += 1;
                        } else if q != p {
                            return false;
                        }
                    }
                    raised == 1
                })
            }
        }
    };
}

sublattice_accessors!(StarSublattice);
sublattice_accessors!(RowStarSublattice);

impl StarSublattice {
    fn ambient_height(&self) -> usize {
        self.k + self.m
    }
}

impl RowStarSublattice {
    fn ambient_height(&self) -> usize {
        self.m
    }
}

/// Column representation `C^{n∗}_{k+m}` of `Σ^k_n C^n_m`.
pub fn star_sublattice(k: usize, n: usize, m: usize, budget: usize) -> Result<StarSublattice> {
    let height = k + m;
    check_budget(height, n, budget)?;
    let ambient = ambient_size(height, n) as usize;
    let mut tuples = Vec::new();
    let mut parent_ids = Vec::new();
    for id in 0..ambient {
        let t = decode(id, height, n);
        if satisfies_star(&t, k) {
            tuples.push(t);
            parent_ids.push(id);
        }
    }
    let poset = poset_of_tuples(&tuples, height)?;
    let sub = StarSublattice {
        k,
        n,
        m,
        poset,
        tuples,
        parent_ids,
    };
    debug_assert!(sub.verify_meet_join_closure());
    Ok(sub)
}

/// Row representation `C^{n+k⋆}_m` of `Σ^k_m C^n_m`.
pub fn row_star_sublattice(
    n: usize,
    k: usize,
    m: usize,
    budget: usize,
) -> Result<RowStarSublattice> {
    check_budget(m, n + k, budget)?;
    let ambient = ambient_size(m, n + k) as usize;
    let mut tuples = Vec::new();
    let mut parent_ids = Vec::new();
    for id in 0..ambient {
        let t = decode(id, m, n + k);
        if satisfies_row_star(&t, n, k) {
            tuples.push(t);
            parent_ids.push(id);
        }
    }
    let poset = poset_of_tuples(&tuples, m)?;
    let sub = RowStarSublattice {
        n,
        k,
        m,
        poset,
        tuples,
        parent_ids,
    };
    debug_assert!(sub.verify_meet_join_closure());
    Ok(sub)
}

/// Map every source tuple through `via` and resolve the images to member
/// indices of the target sublattice; fails if any image leaves it.
fn resolve_images(
    src_tuples: &[Coords],
    via: impl Fn(&[u32]) -> Coords,
    lookup: impl Fn(&[u32]) -> Option<usize>,
    what: &str,
) -> Result<Vec<usize>> {
    src_tuples
        .iter()
        .map(|t| lookup(&via(t)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Composition(format!("{what} image leaves the sublattice")))
}

/// The two embeddings out of the column representation: `vertical` shifts
/// every coordinate up by one into `C^{n∗}_{k+1+m}`, `horizontal` prepends a
/// zero into `C^{(n+1)∗}_{k+m}`. Both provably preserve (∗); membership of
/// every image point is still looked up rather than assumed.
pub fn column_embeddings(
    k: usize,
    n: usize,
    m: usize,
    budget: usize,
) -> Result<(MonotoneMap, MonotoneMap)> {
    let src = star_sublattice(k, n, m, budget)?;
    let up = star_sublattice(k + 1, n, m, budget)?;
    let wide = star_sublattice(k, n + 1, m, budget)?;
    let plus_one = |t: &[u32]| t.iter().map(|&c| c + 1).collect::<Coords>();
    let prepend_zero = |t: &[u32]| {
        let mut v = Vec::with_capacity(t.len() + 1);
        v.push(0);
        v.extend_from_slice(t);
        v
    };
    let vertical_assign = resolve_images(src.tuples(), plus_one, |t| up.member_of(t), "vertical")?;
    let horizontal_assign = resolve_images(
        src.tuples(),
        prepend_zero,
        |t| wide.member_of(t),
        "horizontal",
    )?;
    let vertical = MonotoneMap::new(src.poset.clone(), up.poset.clone(), vertical_assign)?;
    let horizontal = MonotoneMap::new(src.poset.clone(), wide.poset.clone(), horizontal_assign)?;
    Ok((vertical, horizontal))
}

/// The two embeddings out of the row representation: `append` adds a final
/// coordinate equal to `m` into `C^{(n+k+1)⋆}_m`, `lift` keeps the
/// coordinates and raises the ambient height into `C^{(n+k)⋆}_{m+1}`.
pub fn row_embeddings(
    n: usize,
    k: usize,
    m: usize,
    budget: usize,
) -> Result<(MonotoneMap, MonotoneMap)> {
    let src = row_star_sublattice(n, k, m, budget)?;
    let longer = row_star_sublattice(n, k + 1, m, budget)?;
    let taller = row_star_sublattice(n, k, m + 1, budget)?;
    let append_m = |t: &[u32]| {
        let mut v = t.to_vec();
        v.push(m as u32);
        v
    };
    let keep = |t: &[u32]| t.to_vec();
    let append_assign = resolve_images(src.tuples(), append_m, |t| longer.member_of(t), "append")?;
    let lift_assign = resolve_images(src.tuples(), keep, |t| taller.member_of(t), "lift")?;
    let append = MonotoneMap::new(src.poset.clone(), longer.poset.clone(), append_assign)?;
    let lift = MonotoneMap::new(src.poset.clone(), taller.poset.clone(), lift_assign)?;
    Ok((append, lift))
}

/// The representation square on the column side:
/// span `horizontal : C^{n∗}_{k+m} → C^{(n+1)∗}_{k+m}` (top),
/// `vertical : C^{n∗}_{k+m} → C^{n∗}_{k+1+m}` (left), legs
/// `horizontal` again (bottom) and `vertical` again (right).
pub fn column_square(
    k: usize,
    n: usize,
    m: usize,
    budget: usize,
) -> Result<crate::lax::PushoutSquare> {
    let (vertical, horizontal) = column_embeddings(k, n, m, budget)?;
    let (_, lower) = column_embeddings(k + 1, n, m, budget)?;
    let (upper, _) = column_embeddings(k, n + 1, m, budget)?;
    Ok(crate::lax::PushoutSquare {
        f: horizontal,
        g: vertical,
        lower,
        upper,
    })
}

/// The representation square on the row side, built from [`row_embeddings`].
pub fn row_square(
    n: usize,
    k: usize,
    m: usize,
    budget: usize,
) -> Result<crate::lax::PushoutSquare> {
    let (append, lift) = row_embeddings(n, k, m, budget)?;
    let (_, lower) = row_embeddings(n, k + 1, m, budget)?;
    let (upper, _) = row_embeddings(n, k, m + 1, budget)?;
    Ok(crate::lax::PushoutSquare {
        f: lift,
        g: append,
        lower,
        upper,
    })
}

/// The column series `C^0_m → C^1_m → … → C^n_m` along prepend-zero
/// embeddings, ready for [`crate::lax::iterate_stacking`].
pub fn column_series(n: usize, m: usize, budget: usize) -> Result<(Arc<Poset>, Vec<MonotoneMap>)> {
    let cubes: Vec<HypercubeLattice> = (0..=n)
        .map(|j| power(m, j, budget))
        .collect::<Result<Vec<_>>>()?;
    let maps = cubes
        .windows(2)
        .map(|w| {
            let assign = w[0]
                .tuples()
                .iter()
                .map(|t| {
                    let mut v = Vec::with_capacity(t.len() + 1);
                    v.push(0);
                    v.extend_from_slice(t);
                    w[1].id_of(&v)
                })
                .collect();
            MonotoneMap::new(w[0].poset.clone(), w[1].poset.clone(), assign)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((cubes[0].poset.clone(), maps))
}

/// The row series `C^n_0 → C^n_1 → … → C^n_m` along coordinate-identity
/// inclusions.
pub fn row_series(n: usize, m: usize, budget: usize) -> Result<(Arc<Poset>, Vec<MonotoneMap>)> {
    let cubes: Vec<HypercubeLattice> = (0..=m)
        .map(|j| power(j, n, budget))
        .collect::<Result<Vec<_>>>()?;
    let maps = cubes
        .windows(2)
        .map(|w| {
            let assign = w[0].tuples().iter().map(|t| w[1].id_of(t)).collect();
            MonotoneMap::new(w[0].poset.clone(), w[1].poset.clone(), assign)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((cubes[0].poset.clone(), maps))
}

/// The canonical isomorphism `d_{k,n,m} : Σ^k_n C^n_m → C^{n∗}_{k+m}`,
/// realized by structural recursion on the lax-pushout mediating maps:
/// `d_{0,n,m}` and `d_{k,0,m}` are identities, and each `d_{k+1,n+1,m}`
/// sends the lower part through `d_{k+1,n,m}` followed by the prepend-zero
/// leg and the upper part through `d_{k,n+1,m}` followed by the shift-up
/// leg.
///
/// The forward table maps ids of the concrete iterated lax sum (as produced
/// by [`crate::lax::iterate_stacking`] over [`column_series`]) to member
/// indices of [`star_sublattice`].
pub fn canonical_iso(k: usize, n: usize, m: usize, budget: usize) -> Result<IsoWitness> {
    let mut subs: Vec<Vec<StarSublattice>> = Vec::with_capacity(k + 1);
    for kk in 0..=k {
        let row = (0..=n)
            .map(|nn| star_sublattice(kk, nn, m, budget))
            .collect::<Result<Vec<_>>>()?;
        subs.push(row);
    }
    let mut d: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n + 1]; k + 1];
    for nn in 0..=n {
        d[0][nn] = (0..subs[0][nn].len()).collect();
    }
    for row in d.iter_mut() {
        row[0] = vec![0];
    }
    for kk in 1..=k {
        for nn in 1..=n {
            let target = &subs[kk][nn];
            assert_eq!(
                subs[kk][nn - 1].len() + subs[kk - 1][nn].len(),
                target.len(),
                "pushout parts must partition the target sublattice"
            );
            let mut forward = Vec::with_capacity(target.len());
            for &member in &d[kk][nn - 1] {
                let t = subs[kk][nn - 1].tuple(member);
                let mut image = Vec::with_capacity(t.len() + 1);
                image.push(0);
                image.extend_from_slice(t);
                forward.push(
                    target
                        .member_of(&image)
                        .expect("prepend-zero image is a member"),
                );
            }
            for &member in &d[kk - 1][nn] {
                let t = subs[kk - 1][nn].tuple(member);
                let image: Coords = t.iter().map(|&c| c + 1).collect();
                forward.push(
                    target
                        .member_of(&image)
                        .expect("shift-up image is a member"),
                );
            }
            d[kk][nn] = forward;
        }
    }
    Ok(IsoWitness::from_forward(d[k][n].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lax::iterate_stacking;
    use crate::poset::{verify_iso, DEFAULT_ELEMENT_BUDGET};

    const B: usize = DEFAULT_ELEMENT_BUDGET;

    #[test]
    fn chains_of_small_heights() {
        assert_eq!(chain(0).poset.size(), 1);
        let c2 = chain(2);
        assert_eq!(c2.poset.size(), 3);
        let c4 = chain(4);
        let covers = c4.poset.covers();
        assert_eq!(covers.edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn cube_and_grid_sizes() {
        assert_eq!(power(1, 3, B).unwrap().poset.size(), 8);
        assert_eq!(power(2, 2, B).unwrap().poset.size(), 9);
        assert_eq!(power(5, 0, B).unwrap().poset.size(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(power(9, 10, 1000), Err(Error::Size { .. })));
    }

    #[test]
    fn star_condition_examples() {
        // k = 2 over height 2: (1,0), (2,0), (2,1) are the non-members of C^2_2.
        let s = star_sublattice(2, 2, 0, B).unwrap();
        assert_eq!(s.len(), 6);
        let labels: Vec<&str> = (0..6).map(|i| s.poset.label(i).unwrap()).collect();
        assert_eq!(labels, vec!["00", "01", "02", "11", "12", "22"]);
        assert!(s.covers_increment_one_coordinate());
        assert!(s.verify_meet_join_closure());
    }

    #[test]
    fn star_with_k_zero_is_everything() {
        let s = star_sublattice(0, 3, 2, B).unwrap();
        assert_eq!(s.len(), 27);
    }

    #[test]
    fn row_star_examples() {
        let s = row_star_sublattice(2, 1, 1, B).unwrap();
        assert_eq!(s.len(), 5);
        let s0 = row_star_sublattice(3, 0, 2, B).unwrap();
        assert_eq!(s0.len(), 27);
        // n = 0 keeps the weakly increasing chain on the last k coordinates.
        let d2 = row_star_sublattice(0, 2, 2, B).unwrap();
        assert_eq!(d2.len(), 6);
    }

    #[test]
    fn star_prime_examples() {
        assert!(check_star_prime(&[3, 0], 2));
        assert!(!satisfies_star(&[3, 0], 2));
        assert!(check_star_prime(&[0, 0, 0], 3));
        // (∗) implies (∗′) pointwise.
        for k in 0..=3usize {
            let height = k + 1;
            for id in 0..ambient_size(height, 3) as usize {
                let t = decode(id, height, 3);
                if satisfies_star(&t, k) {
                    assert!(check_star_prime(&t, k));
                }
            }
        }
    }

    #[test]
    fn star_region_is_the_chain_core_of_star_prime() {
        // Points of the (∗′) region that lie on a maximal chain staying in
        // the region are exactly the (∗) points.
        for n in 1..=3usize {
            for k in 1..=3usize {
                let height = k + 1;
                let ambient = ambient_size(height, n) as usize;
                let members: Vec<bool> = (0..ambient)
                    .map(|id| check_star_prime(&decode(id, height, n), k))
                    .collect();
                // Reachable from bottom through the region by single increments.
                let mut up = vec![false; ambient];
                up[0] = true;
                for id in 0..ambient {
                    if !up[id] || !members[id] {
                        continue;
                    }
                    let t = decode(id, height, n);
                    for i in 0..n {
                        if (t[i] as usize) < height {
                            let mut next = t.clone();
                            next[i] += 1;
                            up[encode(&next, height)] |= true;
                        }
                    }
                }
                let mut down = vec![false; ambient];
                down[ambient - 1] = true;
                for id in (0..ambient).rev() {
                    if !down[id] || !members[id] {
                        continue;
                    }
                    let t = decode(id, height, n);
                    for i in 0..n {
                        if t[i] > 0 {
                            let mut prev = t.clone();
                            prev[i] -= 1;
                            down[encode(&prev, height)] |= true;
                        }
                    }
                }
                for id in 0..ambient {
                    let on_chain = members[id] && up[id] && down[id];
                    let star = satisfies_star(&decode(id, height, n), k);
                    assert_eq!(on_chain, star, "n={n} k={k} id={id}");
                }
            }
        }
    }

    #[test]
    fn column_embeddings_preserve_star() {
        let (vertical, horizontal) = column_embeddings(1, 1, 0, B).unwrap();
        assert_eq!(vertical.source().size(), 2);
        // horizontal sends (0) to (0,0) and (1) to (0,1)
        let wide = star_sublattice(1, 2, 0, B).unwrap();
        assert_eq!(wide.tuple(horizontal.apply(0)), &[0, 0]);
        assert_eq!(wide.tuple(horizontal.apply(1)), &[0, 1]);
    }

    #[test]
    fn representation_squares_are_lax_pushouts() {
        for (k, n, m) in [(0, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1), (1, 2, 1)] {
            assert!(
                column_square(k, n, m, B).unwrap().verify(),
                "column {k},{n},{m}"
            );
        }
        for (n, k, m) in [(1, 0, 1), (1, 1, 1), (2, 1, 1), (1, 1, 2)] {
            assert!(row_square(n, k, m, B).unwrap().verify(), "row {n},{k},{m}");
        }
    }

    #[test]
    fn row_append_example() {
        let (append, _) = row_embeddings(1, 0, 1, B).unwrap();
        let longer = row_star_sublattice(1, 1, 1, B).unwrap();
        assert_eq!(longer.tuple(append.apply(0)), &[0, 1]);
        assert_eq!(longer.tuple(append.apply(1)), &[1, 1]);
    }

    #[test]
    fn canonical_iso_is_an_isomorphism() {
        for (k, n, m) in [
            (0, 2, 1),
            (1, 2, 1),
            (2, 2, 0),
            (2, 2, 1),
            (1, 3, 1),
            (3, 2, 0),
        ] {
            let (stage0, maps) = column_series(n, m, B).unwrap();
            let stacked = iterate_stacking(stage0, &maps, k, B).unwrap();
            let rep = star_sublattice(k, n, m, B).unwrap();
            let w = canonical_iso(k, n, m, B).unwrap();
            assert!(verify_iso(&stacked, &rep.poset, &w), "d_{{{k},{n},{m}}}");
        }
    }

    #[test]
    fn canonical_iso_base_cases_are_identities() {
        let w = canonical_iso(0, 2, 2, B).unwrap();
        assert_eq!(w.forward, (0..9).collect::<Vec<_>>());
        let w = canonical_iso(3, 0, 1, B).unwrap();
        assert_eq!(w.forward, vec![0]);
    }

    #[test]
    fn stacked_cube_element_counts() {
        // |Σ_n C^n_1| = 2^0 + 2^1 + … + 2^n.
        for n in 0..=4usize {
            let (stage0, maps) = column_series(n, 1, B).unwrap();
            let p = iterate_stacking(stage0, &maps, 1, B).unwrap();
            assert_eq!(p.size(), (1 << (n + 1)) - 1);
        }
    }

    #[test]
    fn pushout_of_embeddings_reproduces_the_next_sublattice() {
        use crate::lax::lax_pushout;
        for (k, n, m) in [(1usize, 1usize, 0usize), (1, 1, 1), (2, 1, 1), (1, 2, 1)] {
            let (vertical, horizontal) = column_embeddings(k, n, m, B).unwrap();
            let po = lax_pushout(&horizontal, &vertical).unwrap();
            let next = star_sublattice(k + 1, n + 1, m, B).unwrap();
            assert_eq!(po.carrier.size(), next.len());
            // The mediating map: lower part through prepend-zero, upper part
            // through shift-up.
            let lower_size = vertical.target().size();
            let taller = star_sublattice(k + 1, n, m, B).unwrap();
            let wider = star_sublattice(k, n + 1, m, B).unwrap();
            let forward: Vec<usize> = (0..po.carrier.size())
                .map(|z| {
                    if z < lower_size {
                        let mut t = vec![0u32];
                        t.extend_from_slice(taller.tuple(z));
                        next.member_of(&t).unwrap()
                    } else {
                        let t: Vec<u32> =
                            wider.tuple(z - lower_size).iter().map(|&c| c + 1).collect();
                        next.member_of(&t).unwrap()
                    }
                })
                .collect();
            let witness = IsoWitness::from_forward(forward);
            assert!(
                verify_iso(&po.carrier, &next.poset, &witness),
                "pushout carrier differs from the sublattice at k={k} n={n} m={m}"
            );
        }
    }

    #[test]
    fn sigma_2_of_squares_is_a_distributive_lattice() {
        let (stage0, maps) = column_series(2, 1, B).unwrap();
        let p = iterate_stacking(stage0, &maps, 2, B).unwrap();
        assert!(p.is_lattice());
        assert!(p.is_distributive().unwrap());
    }

    #[test]
    fn m_zero_star_count_is_binomial() {
        fn binom(a: usize, b: usize) -> usize {
            let mut r = 1usize;
            for i in 0..b {
                r = r * (a - i) / (i + 1);
            }
            r
        }
        for n in 0..=6usize {
            for k in 0..=6usize {
                if ambient_size(k, n) > (1 << 20) {
                    continue;
                }
                let s = star_sublattice(k, n, 0, 1 << 20).unwrap();
                assert_eq!(s.len(), binom(n + k, k), "n={n} k={k}");
            }
        }
    }
}
