//! Finite posets as first-class values.
//!
//! A [`Poset`] stores the full order relation of a finite poset as a boolean
//! matrix (one bit row per element, together with the transposed matrix for
//! fast down-set queries). Elements are dense ids `0..size`, optionally
//! carrying label strings. All operations are pure; a constructed poset is
//! immutable and can be shared freely across threads.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on poset size: the order relation is kept as a size x size bit
/// matrix, which stays reasonable up to 2^15 elements.
pub const MAX_POSET_SIZE: usize = 1 << 15;

/// Default ambient element budget for lattice constructions (overridable via
/// the CLI `--budget` flag or the `LATSTACK_BUDGET` environment variable).
pub const DEFAULT_ELEMENT_BUDGET: usize = 1 << 20;

/// Square bit matrix with u64-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub(crate) fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub(crate) fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    pub(crate) fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for r in 0..self.n {
            for c in ones(self.row(r)) {
                t.set(c, r);
            }
        }
        t
    }
}

/// Iterate over the set bit positions of a packed row.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &bits)| {
        std::iter::successors(Some(bits), |&b| Some(b & b.wrapping_sub(1)))
            .take_while(|&b| b != 0)
            .map(move |b| w * 64 + b.trailing_zeros() as usize)
    })
}

/// A finite partially ordered set.
#[derive(Clone)]
pub struct Poset {
    size: usize,
    leq: BitMatrix,
    geq: BitMatrix,
    labels: Option<Vec<String>>,
}

/// The transitive reduction of a poset's strict order: `(x, y)` means `y`
/// covers `x`. Edges are sorted ascending, so the digraph is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDigraph {
    pub edges: Vec<(usize, usize)>,
    size: usize,
}

impl CoverDigraph {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Successor lists indexed by source element, targets ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.size];
        for &(x, y) in &self.edges {
            adj[x].push(y);
        }
        adj
    }

    /// Predecessor lists indexed by target element.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.size];
        for &(x, y) in &self.edges {
            pred[y].push(x);
        }
        pred
    }

    /// A topological order of the elements along cover edges.
    pub fn topological_order(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut indeg = vec![0usize; self.size];
        for &(_, y) in &self.edges {
            indeg[y] += 1;
        }
        let mut queue: Vec<usize> = (0..self.size).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(self.size);
        while let Some(x) = queue.pop() {
            order.push(x);
            for &y in &adj[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
        debug_assert_eq!(order.len(), self.size);
        order
    }
}

impl Poset {
    /// Build a poset as the reflexive-transitive closure of generating pairs.
    ///
    /// Rejects out-of-range ids and closures that violate antisymmetry.
    pub fn from_relation(size: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if size > MAX_POSET_SIZE {
            return Err(Error::Size {
                required: size as u128,
                limit: MAX_POSET_SIZE,
            });
        }
        let mut adj = vec![Vec::new(); size];
        for &(x, y) in pairs {
            for id in [x, y] {
                if id >= size {
                    return Err(Error::Range { id, size });
                }
            }
            adj[x].push(y);
        }
        let mut leq = BitMatrix::new(size);
        let mut stack = Vec::new();
        for x in 0..size {
            // DFS reachability gives the reflexive-transitive closure row.
            stack.push(x);
            while let Some(v) = stack.pop() {
                if leq.get(x, v) {
                    continue;
                }
                leq.set(x, v);
                stack.extend(adj[v].iter().copied());
            }
        }
        for x in 0..size {
            for y in ones(leq.row(x)) {
                if y != x && leq.get(y, x) {
                    return Err(Error::Cycle { a: x, b: y });
                }
            }
        }
        let geq = leq.transpose();
        Ok(Poset {
            size,
            leq,
            geq,
            labels: None,
        })
    }

    /// Internal constructor from precomputed closure rows. The caller is
    /// responsible for the order axioms; tests re-verify via `check_axioms`.
    pub(crate) fn from_rows(leq: BitMatrix, labels: Option<Vec<String>>) -> Result<Poset> {
        let size = leq.n;
        if size > MAX_POSET_SIZE {
            return Err(Error::Size {
                required: size as u128,
                limit: MAX_POSET_SIZE,
            });
        }
        let geq = leq.transpose();
        Ok(Poset {
            size,
            leq,
            geq,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
        self
    }

    /// Structural equality of the order relations (labels ignored).
    pub fn same_order(&self, other: &Poset) -> bool {
        self.size == other.size && self.leq == other.leq
    }

    /// Verify reflexivity, antisymmetry and transitivity of the stored
    /// relation. Intended for tests and document loading.
    pub fn check_axioms(&self) -> Result<()> {
        for x in 0..self.size {
            if !self.leq.get(x, x) {
                return Err(Error::Parse(format!("relation not reflexive at {x}")));
            }
            for y in ones(self.leq.row(x)) {
                if y != x && self.leq.get(y, x) {
                    return Err(Error::Cycle { a: x, b: y });
                }
                // Transitivity: the up-set of y must sit inside the up-set of x.
                let (rx, ry) = (self.leq.row(x), self.leq.row(y));
                if ry.iter().zip(rx).any(|(w_y, w_x)| w_y & !w_x != 0) {
                    let z = ones(ry).find(|&z| !self.leq.get(x, z)).unwrap();
                    return Err(Error::Parse(format!(
                        "relation not transitive: {x} <= {y} <= {z} but not {x} <= {z}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The exact transitive reduction of the strict order.
    pub fn covers(&self) -> CoverDigraph {
        let mut edges = Vec::new();
        for x in 0..self.size {
            for y in ones(self.leq.row(x)) {
                if y == x {
                    continue;
                }
                // y covers x iff nothing lies strictly between them.
                let strictly_between = self.leq.row(x).iter().zip(self.geq.row(y)).enumerate().any(
                    |(w, (up_x, down_y))| {
                        let mut both = up_x & down_y;
                        for e in [x, y] {
                            if e / 64 == w {
                                both &= !(1 << (e % 64));
                            }
                        }
                        both != 0
                    },
                );
                if !strictly_between {
                    edges.push((x, y));
                }
            }
        }
        edges.sort_unstable();
        CoverDigraph {
            edges,
            size: self.size,
        }
    }

    /// The unique minimum and maximum, if both exist.
    pub fn bottom_top(&self) -> Result<(usize, usize)> {
        let mut bottom = None;
        for x in 0..self.size {
            if ones(self.leq.row(x)).count() == self.size {
                if bottom.is_some() {
                    return Err(Error::NoExtremum { what: "minimum" });
                }
                bottom = Some(x);
            }
        }
        let mut top = None;
        for y in 0..self.size {
            if ones(self.geq.row(y)).count() == self.size {
                if top.is_some() {
                    return Err(Error::NoExtremum { what: "maximum" });
                }
                top = Some(y);
            }
        }
        match (bottom, top) {
            (Some(b), Some(t)) => Ok((b, t)),
            (None, _) => Err(Error::NoExtremum { what: "minimum" }),
            (_, None) => Err(Error::NoExtremum { what: "maximum" }),
        }
    }

    fn bound(&self, x: usize, y: usize, lower: bool) -> Result<usize> {
        let (m, what) = if lower {
            (&self.geq, "meet")
        } else {
            (&self.leq, "join")
        };
        // Candidates: common lower (resp. upper) bounds of x and y.
        let candidates: Vec<u64> = m.row(x).iter().zip(m.row(y)).map(|(a, b)| a & b).collect();
        let mut extremum = None;
        for z in ones(&candidates) {
            // z is maximal among lower bounds iff no other bound lies above it
            // (dually for upper bounds).
            let beyond = if lower { &self.leq } else { &self.geq };
            let dominated = beyond
                .row(z)
                .iter()
                .zip(&candidates)
                .enumerate()
                .any(|(w, (b, c))| {
                    let mut v = b & c;
                    if z / 64 == w {
                        v &= !(1 << (z % 64));
                    }
                    v != 0
                });
            if !dominated {
                if extremum.is_some() {
                    return Err(Error::NotLattice { x, y, what });
                }
                extremum = Some(z);
            }
        }
        extremum.ok_or(Error::NotLattice { x, y, what })
    }

    /// Greatest lower bound and least upper bound of a pair.
    pub fn meet_join(&self, x: usize, y: usize) -> Result<(usize, usize)> {
        for id in [x, y] {
            if id >= self.size {
                return Err(Error::Range {
                    id,
                    size: self.size,
                });
            }
        }
        Ok((self.bound(x, y, true)?, self.bound(x, y, false)?))
    }

    /// Meet and join tables for all pairs, or the offending pair.
    pub fn lattice_tables(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let n = self.size;
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let (m, j) = self.meet_join(x, y)?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        Ok((meet, join))
    }

    /// True iff every pair of elements has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        self.lattice_tables().is_ok()
    }

    /// True iff the median identity
    /// `(x∧y)∨(y∧z)∨(z∧x) = (x∨y)∧(y∨z)∧(z∨x)` holds for all triples.
    pub fn is_distributive(&self) -> Result<bool> {
        let n = self.size;
        let (meet, join) = self.lattice_tables()?;
        let m = |a: usize, b: usize| meet[a * n + b];
        let j = |a: usize, b: usize| join[a * n + b];
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    let lhs = j(j(m(x, y), m(y, z)), m(z, x));
                    let rhs = m(m(j(x, y), j(y, z)), j(z, x));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The textbook distributive law `x∧(y∨z) = (x∧y)∨(x∧z)` over all
    /// triples. Must agree with [`Poset::is_distributive`] on every lattice.
    pub fn satisfies_distributive_law(&self) -> Result<bool> {
        let n = self.size;
        let (meet, join) = self.lattice_tables()?;
        let m = |a: usize, b: usize| meet[a * n + b];
        let j = |a: usize, b: usize| join[a * n + b];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Cartesian product with componentwise order; labels are pair labels.
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        let size = self
            .size
            .checked_mul(other.size)
            .filter(|&s| s <= MAX_POSET_SIZE)
            .ok_or(Error::Size {
                required: self.size as u128 * other.size as u128,
                limit: MAX_POSET_SIZE,
            })?;
        let mut leq = BitMatrix::new(size);
        for a in 0..self.size {
            for b in ones(self.leq.row(a)) {
                for c in 0..other.size {
                    for d in ones(other.leq.row(c)) {
                        leq.set(a * other.size + c, b * other.size + d);
                    }
                }
            }
        }
        let name = |p: &Poset, i: usize| {
            p.label(i)
                .map(str::to_owned)
                .unwrap_or_else(|| i.to_string())
        };
        let labels = (0..self.size)
            .flat_map(|a| {
                (0..other.size).map(move |c| format!("({},{})", name(self, a), name(other, c)))
            })
            .collect();
        Poset::from_rows(leq, Some(labels))
    }

    /// Share the poset behind an `Arc` (the usual currency between modules).
    pub fn into_arc(self) -> Arc<Poset> {
        Arc::new(self)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers().edges)
            .finish()
    }
}

/// A claimed isomorphism between two posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> IsoWitness {
        IsoWitness {
            forward: (0..n).collect(),
            backward: (0..n).collect(),
        }
    }

    /// Build the witness from a forward bijection, deriving the inverse.
    pub fn from_forward(forward: Vec<usize>) -> IsoWitness {
        let mut backward = vec![usize::MAX; forward.len()];
        for (x, &y) in forward.iter().enumerate() {
            if y < backward.len() {
                backward[y] = x;
            }
        }
        IsoWitness { forward, backward }
    }
}

/// Check that `w` is a genuine order isomorphism from `a` to `b`.
pub fn verify_iso(a: &Poset, b: &Poset, w: &IsoWitness) -> bool {
    let n = a.size();
    if b.size() != n || w.forward.len() != n || w.backward.len() != n {
        return false;
    }
    for x in 0..n {
        let y = w.forward[x];
        if y >= n || w.backward[y] != x || w.forward[w.backward[x]] != x {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if a.leq(x, y) != b.leq(w.forward[x], w.forward[y]) {
                return false;
            }
        }
    }
    true
}

/// Closure of a cover-edge list back into a full order; used to confirm that
/// covers regenerate exactly the relation they were reduced from.
pub fn closure_of_covers(size: usize, edges: &[(usize, usize)]) -> Result<Poset> {
    Poset::from_relation(size, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain_poset(m: usize) -> Poset {
        let pairs: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
        Poset::from_relation(m + 1, &pairs).unwrap()
    }

    #[test]
    fn singleton_from_empty_relation() {
        let p = Poset::from_relation(1, &[]).unwrap();
        assert_eq!(p.size(), 1);
        assert!(p.leq(0, 0));
        assert_eq!(p.bottom_top().unwrap(), (0, 0));
    }

    #[test]
    fn three_chain_by_transitivity() {
        let p = Poset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers().edges, vec![(0, 1), (1, 2)]);
        assert_eq!(p.bottom_top().unwrap(), (0, 2));
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = Poset::from_relation(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }));
    }

    #[test]
    fn out_of_range_id_is_rejected() {
        let err = Poset::from_relation(2, &[(0, 2)]).unwrap_err();
        assert_eq!(err, Error::Range { id: 2, size: 2 });
    }

    #[test]
    fn empty_poset_is_constructible_but_has_no_extrema() {
        let p = Poset::from_relation(0, &[]).unwrap();
        assert_eq!(p.size(), 0);
        assert!(p.bottom_top().is_err());
    }

    #[test]
    fn antichain_has_no_extrema_and_is_not_a_lattice() {
        let p = Poset::from_relation(2, &[]).unwrap();
        assert!(matches!(p.bottom_top(), Err(Error::NoExtremum { .. })));
        assert!(!p.is_lattice());
        assert!(matches!(p.meet_join(0, 1), Err(Error::NotLattice { .. })));
    }

    #[test]
    fn diamond_product_of_two_chains() {
        let c1 = chain_poset(1);
        let p = c1.product(&c1).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.covers().edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        // meet((0,1),(1,0)) = (0,0), join = (1,1)
        assert_eq!(p.meet_join(1, 2).unwrap(), (0, 3));
        assert!(p.is_lattice());
        assert!(p.is_distributive().unwrap());
    }

    #[test]
    fn chains_are_lattices() {
        for m in 0..5 {
            assert!(chain_poset(m).is_lattice());
        }
    }

    #[test]
    fn m3_is_not_distributive() {
        // bottom 0, incomparable middles 1,2,3, top 4
        let p = Poset::from_relation(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(p.is_lattice());
        assert!(!p.is_distributive().unwrap());
        assert!(!p.satisfies_distributive_law().unwrap());
    }

    #[test]
    fn cube_is_distributive() {
        let c1 = chain_poset(1);
        let cube = c1.product(&c1).unwrap().product(&c1).unwrap();
        assert!(cube.is_distributive().unwrap());
        assert!(cube.satisfies_distributive_law().unwrap());
    }

    #[test]
    fn product_unit_law_up_to_iso() {
        let c2 = chain_poset(2);
        let c0 = chain_poset(0);
        let p = c2.product(&c0).unwrap();
        assert!(verify_iso(&c2, &p, &IsoWitness::identity(3)));
    }

    #[test]
    fn identity_witness_verifies_and_reversal_fails() {
        let c2 = chain_poset(2);
        assert!(verify_iso(&c2, &c2, &IsoWitness::identity(3)));
        let rev = IsoWitness::from_forward(vec![2, 1, 0]);
        assert!(!verify_iso(&c2, &c2, &rev));
    }

    #[test]
    fn covers_regenerate_the_order() {
        let c1 = chain_poset(1);
        let p = c1.product(&c1).unwrap().product(&chain_poset(2)).unwrap();
        let covers = p.covers();
        let again = closure_of_covers(p.size(), &covers.edges).unwrap();
        assert!(again.same_order(&p));
    }

    #[test]
    fn meet_join_in_c2_squared() {
        let c2 = chain_poset(2);
        let p = c2.product(&c2).unwrap();
        // ids are (x1, x2) -> 3*x1 + x2: (2,0) = 6, (1,2) = 5
        let (m, j) = p.meet_join(6, 5).unwrap();
        assert_eq!(m, 3); // (1,0)
        assert_eq!(j, 8); // (2,2)
    }

    #[test]
    fn axioms_hold_for_constructed_posets() {
        let c2 = chain_poset(2);
        let p = c2.product(&c2).unwrap();
        p.check_axioms().unwrap();
    }

    #[test]
    fn topological_order_respects_covers() {
        let c2 = chain_poset(2);
        let p = c2.product(&c2).unwrap();
        let covers = p.covers();
        let order = covers.topological_order();
        let mut pos = vec![0; p.size()];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        for &(x, y) in &covers.edges {
            assert!(pos[x] < pos[y]);
        }
    }
}
