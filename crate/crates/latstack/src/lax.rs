//! Lax sums of monotone-map sequences, lax pushouts, lattice series with the
//! transport calculus, and iterated stacking.
//!
//! The concrete lax sum of `M_0 -f_0-> M_1 -> ... -> M_n` has as elements the
//! tagged pairs `(x, j)` with `x ∈ M_j`, ordered by
//! `(x, j) ≤ (y, j+i)  ⟺  (f_{j+i-1} ∘ … ∘ f_j)(x) ≤ y`.
//! Element ids are `offset(j) + x` where `offset` is the prefix sum of stage
//! sizes, so earlier partial sums sit as prefixes of later ones.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use crate::poset::{BitMatrix, Poset};

/// The concrete lax sum of a finite sequence of monotone maps.
#[derive(Clone)]
pub struct LaxSum {
    carrier: Arc<Poset>,
    stages: Vec<Arc<Poset>>,
    maps: Vec<MonotoneMap>,
    offsets: Vec<usize>,
    stage_of: Vec<usize>,
    inner_of: Vec<usize>,
    injections: Vec<MonotoneMap>,
}

impl LaxSum {
    /// Stack `stage0 -maps[0]-> ... -> M_n`. An empty map list yields a
    /// carrier isomorphic to `stage0` itself.
    pub fn build(stage0: Arc<Poset>, maps: &[MonotoneMap]) -> Result<LaxSum> {
        let mut stages = vec![stage0];
        for (i, f) in maps.iter().enumerate() {
            if !f.source().same_order(stages.last().unwrap()) {
                return Err(Error::Composition(format!(
                    "source of map {i} does not match the previous stage"
                )));
            }
            stages.push(f.target().clone());
        }
        let n = maps.len();
        let mut offsets = Vec::with_capacity(n + 2);
        let mut total = 0usize;
        for s in &stages {
            offsets.push(total);
            total += s.size();
        }
        offsets.push(total);

        // transport[j][d] sends M_j into M_{j+d} along the composite map.
        let mut transport: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n + 1);
        for (j, stage) in stages.iter().enumerate() {
            let mut rows = vec![(0..stage.size()).collect::<Vec<_>>()];
            for f in &maps[j..] {
                let next = rows.last().unwrap().iter().map(|&x| f.apply(x)).collect();
                rows.push(next);
            }
            transport.push(rows);
        }

        let mut leq = BitMatrix::new(total);
        for j in 0..=n {
            for l in j..=n {
                let fwd = &transport[j][l - j];
                let tgt = &stages[l];
                for (x, &fx) in fwd.iter().enumerate() {
                    for y in 0..tgt.size() {
                        if tgt.leq(fx, y) {
                            leq.set(offsets[j] + x, offsets[l] + y);
                        }
                    }
                }
            }
        }

        let mut labels = Vec::with_capacity(total);
        let mut stage_of = Vec::with_capacity(total);
        let mut inner_of = Vec::with_capacity(total);
        for (j, s) in stages.iter().enumerate() {
            for x in 0..s.size() {
                let inner = s
                    .label(x)
                    .map(str::to_owned)
                    .unwrap_or_else(|| x.to_string());
                labels.push(format!("({inner},{j})"));
                stage_of.push(j);
                inner_of.push(x);
            }
        }
        let carrier = Poset::from_rows(leq, Some(labels))?.into_arc();

        let injections = stages
            .iter()
            .enumerate()
            .map(|(j, s)| {
                MonotoneMap::new(
                    s.clone(),
                    carrier.clone(),
                    (0..s.size()).map(|x| offsets[j] + x).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(LaxSum {
            carrier,
            stages,
            maps: maps.to_vec(),
            offsets,
            stage_of,
            inner_of,
            injections,
        })
    }

    pub fn carrier(&self) -> &Arc<Poset> {
        &self.carrier
    }

    /// Number of stages, i.e. `n + 1` for a sum over `n` maps.
    pub fn stage_count(&self) -> usize {
        self.stages.len()
    }

    pub fn stage_posets(&self) -> &[Arc<Poset>] {
        &self.stages
    }

    pub fn maps(&self) -> &[MonotoneMap] {
        &self.maps
    }

    /// The injections `ι^n_j : M_j → Σ_n M_n`.
    pub fn injections(&self) -> &[MonotoneMap] {
        &self.injections
    }

    pub fn stage_of(&self, id: usize) -> usize {
        self.stage_of[id]
    }

    pub fn inner_of(&self, id: usize) -> usize {
        self.inner_of[id]
    }

    pub fn id_of(&self, stage: usize, inner: usize) -> usize {
        self.offsets[stage] + inner
    }

    /// Transport an element of stage `j` up to stage `l` along the maps.
    fn up(&self, j: usize, x: usize, l: usize) -> usize {
        (j..l).fold(x, |v, s| self.maps[s].apply(v))
    }

    /// Unique preimage of a stage-`l` element down at stage `j`, if any.
    fn down(&self, l: usize, y: usize, j: usize) -> Result<usize> {
        let mut v = y;
        for s in (j..l).rev() {
            match (0..self.stages[s].size()).find(|&x| self.maps[s].apply(x) == v) {
                Some(x) => v = x,
                None => {
                    return Err(Error::NotInImage {
                        element: y,
                        stage: l,
                        to: j,
                    })
                }
            }
        }
        Ok(v)
    }

    /// Extend the sum by one more map, returning the longer sum and the
    /// induced map `f'_n : Σ_n M_n → Σ_{n+1} M_{n+1}`, which sends every
    /// tagged pair to itself.
    pub fn extend(&self, f: &MonotoneMap) -> Result<(LaxSum, MonotoneMap)> {
        if !f.source().same_order(self.stages.last().unwrap()) {
            return Err(Error::Composition(
                "extension map does not start at the last stage".into(),
            ));
        }
        let mut maps = self.maps.clone();
        maps.push(f.clone());
        let next = LaxSum::build(self.stages[0].clone(), &maps)?;
        let induced = MonotoneMap::new(
            self.carrier.clone(),
            next.carrier.clone(),
            (0..self.carrier.size()).collect(),
        )?;
        Ok((next, induced))
    }
}

impl std::fmt::Debug for LaxSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LaxSum")
            .field("stages", &self.stages.len())
            .field("size", &self.carrier.size())
            .finish()
    }
}

/// Meet and join inside a lax sum over a lattice series, computed by the
/// stage-wise formulas
/// `(x,j) ∨ (y,k) = (x^k ∨ y, k)` and `(x,j) ∧ (y,k) = ((x^k ∧ y)^{-j}, j)`
/// for `j ≤ k`. Fails with a series-axiom error when the downward transport
/// in the meet formula is undefined (which cannot happen over a valid
/// lattice series).
pub fn lax_sum_meet_join(sum: &LaxSum, a: usize, b: usize) -> Result<(usize, usize)> {
    let size = sum.carrier().size();
    for id in [a, b] {
        if id >= size {
            return Err(Error::Range { id, size });
        }
    }
    let (mut j, mut x) = (sum.stage_of(a), sum.inner_of(a));
    let (mut k, mut y) = (sum.stage_of(b), sum.inner_of(b));
    if j > k {
        std::mem::swap(&mut j, &mut k);
        std::mem::swap(&mut x, &mut y);
    }
    let xk = sum.up(j, x, k);
    let (m, jn) = sum.stages[k].meet_join(xk, y)?;
    let meet_inner = sum.down(k, m, j).map_err(|_| {
        Error::SeriesAxiom(format!(
            "meet {m} at stage {k} has no preimage at stage {j}"
        ))
    })?;
    Ok((sum.id_of(j, meet_inner), sum.id_of(k, jn)))
}

/// A sequence of lattices and join/bottom-preserving, order-reflecting,
/// down-closed-image homomorphisms. These axioms are exactly what the meet
/// and join formulas for lax sums rely on, so they are checked eagerly.
#[derive(Clone)]
pub struct LatticeSeries {
    stages: Vec<Arc<Poset>>,
    maps: Vec<MonotoneMap>,
}

impl LatticeSeries {
    pub fn new(stage0: Arc<Poset>, maps: &[MonotoneMap]) -> Result<LatticeSeries> {
        let mut stages = vec![stage0];
        for (i, f) in maps.iter().enumerate() {
            if !f.source().same_order(stages.last().unwrap()) {
                return Err(Error::Composition(format!(
                    "source of map {i} does not match the previous stage"
                )));
            }
            stages.push(f.target().clone());
        }
        for (j, s) in stages.iter().enumerate() {
            if !s.is_lattice() {
                return Err(Error::SeriesAxiom(format!("stage {j} is not a lattice")));
            }
        }
        for (i, f) in maps.iter().enumerate() {
            let props = f.properties()?;
            if !props.order_reflecting {
                return Err(Error::SeriesAxiom(format!(
                    "map {i} is not order-reflecting"
                )));
            }
            if !props.down_closed_image {
                return Err(Error::SeriesAxiom(format!(
                    "map {i} does not have a down-closed image"
                )));
            }
            if !props.join_preserving {
                return Err(Error::SeriesAxiom(format!(
                    "map {i} does not preserve joins"
                )));
            }
            if !props.bottom_preserving {
                return Err(Error::SeriesAxiom(format!(
                    "map {i} does not preserve the bottom element"
                )));
            }
        }
        Ok(LatticeSeries {
            stages,
            maps: maps.to_vec(),
        })
    }

    pub fn stages(&self) -> &[Arc<Poset>] {
        &self.stages
    }

    pub fn maps(&self) -> &[MonotoneMap] {
        &self.maps
    }

    /// The lax sum of the series truncated after `n` maps.
    pub fn partial_sum(&self, n: usize) -> Result<LaxSum> {
        LaxSum::build(self.stages[0].clone(), &self.maps[..n])
    }

    /// Transport `x ∈ M_stage` to another stage: upward transports compose
    /// the maps (`x^k`); downward transports invert them (`x^{-j}`), which is
    /// defined only when `x` lies in the image of the composite.
    pub fn transport(&self, stage: usize, x: usize, to: usize) -> Result<usize> {
        if stage >= self.stages.len() || to >= self.stages.len() {
            return Err(Error::Range {
                id: stage.max(to),
                size: self.stages.len(),
            });
        }
        if x >= self.stages[stage].size() {
            return Err(Error::Range {
                id: x,
                size: self.stages[stage].size(),
            });
        }
        if to >= stage {
            Ok((stage..to).fold(x, |v, s| self.maps[s].apply(v)))
        } else {
            let mut v = x;
            for s in (to..stage).rev() {
                match (0..self.stages[s].size()).find(|&a| self.maps[s].apply(a) == v) {
                    Some(a) => v = a,
                    None => {
                        return Err(Error::NotInImage {
                            element: x,
                            stage,
                            to,
                        })
                    }
                }
            }
            Ok(v)
        }
    }
}

/// A lax pushout over a span `f : K → M`, `g : K → N`: the carrier stacks
/// `N` below `M`, with `(a,1) ≤ (b,2)` exactly when some `c ∈ K` satisfies
/// `a ≤ g(c)` and `f(c) ≤ b`.
#[derive(Clone)]
pub struct LaxPushout {
    pub carrier: Arc<Poset>,
    /// Leg from `N` (image is down-closed in the carrier).
    pub lower_leg: MonotoneMap,
    /// Leg from `M`.
    pub upper_leg: MonotoneMap,
    /// The span `(f, g)` the pushout was built over.
    pub span: (MonotoneMap, MonotoneMap),
}

/// Construct the concrete lax pushout of `f : K → M` and `g : K → N`.
pub fn lax_pushout(f: &MonotoneMap, g: &MonotoneMap) -> Result<LaxPushout> {
    if !f.source().same_order(g.source()) {
        return Err(Error::Composition(
            "span maps do not share their source".into(),
        ));
    }
    let (k_size, m, n) = (f.source().size(), f.target(), g.target());
    let total = n.size() + m.size();
    let mut leq = BitMatrix::new(total);
    for a in 0..n.size() {
        for a2 in 0..n.size() {
            if n.leq(a, a2) {
                leq.set(a, a2);
            }
        }
    }
    for b in 0..m.size() {
        for b2 in 0..m.size() {
            if m.leq(b, b2) {
                leq.set(n.size() + b, n.size() + b2);
            }
        }
    }
    for a in 0..n.size() {
        for b in 0..m.size() {
            let witnessed = (0..k_size).any(|c| n.leq(a, g.apply(c)) && m.leq(f.apply(c), b));
            if witnessed {
                leq.set(a, n.size() + b);
            }
        }
    }
    let name = |p: &Poset, i: usize| {
        p.label(i)
            .map(str::to_owned)
            .unwrap_or_else(|| i.to_string())
    };
    let labels = (0..n.size())
        .map(|a| format!("({},1)", name(n, a)))
        .chain((0..m.size()).map(|b| format!("({},2)", name(m, b))))
        .collect();
    let carrier = Poset::from_rows(leq, Some(labels))?.into_arc();
    let lower_leg = MonotoneMap::new(n.clone(), carrier.clone(), (0..n.size()).collect())?;
    let upper_leg = MonotoneMap::new(
        m.clone(),
        carrier.clone(),
        (0..m.size()).map(|b| n.size() + b).collect(),
    )?;
    Ok(LaxPushout {
        carrier,
        lower_leg,
        upper_leg,
        span: (f.clone(), g.clone()),
    })
}

/// Decide whether a square of monotone maps is a lax pushout.
///
/// The square consists of a span `f : K → M`, `g : K → N` and two legs
/// `lower : N → L`, `upper : M → L`. The five defining conditions are
/// checked exhaustively: both legs order-reflecting, disjoint images whose
/// union is all of `L`, the lower image down-closed, and the existential
/// characterization of cross-leg order.
pub fn verify_lax_pushout(
    f: &MonotoneMap,
    g: &MonotoneMap,
    lower: &MonotoneMap,
    upper: &MonotoneMap,
) -> bool {
    if !f.source().same_order(g.source())
        || !lower.source().same_order(g.target())
        || !upper.source().same_order(f.target())
        || !lower.target().same_order(upper.target())
    {
        return false;
    }
    let l = lower.target();
    if !lower.is_order_reflecting() || !upper.is_order_reflecting() {
        return false;
    }
    let mut owner = vec![0u8; l.size()];
    for &z in lower.assignment() {
        owner[z] |= 1;
    }
    for &z in upper.assignment() {
        owner[z] |= 2;
    }
    if owner.iter().any(|&o| o == 0 || o == 3) {
        return false;
    }
    if !lower.has_down_closed_image() {
        return false;
    }
    // (a,1) ≤ (b,2) ⟺ ∃ c ∈ K with a ≤ g(c) and f(c) ≤ b, via bitsets over K.
    let k_size = f.source().size();
    let words = k_size.div_ceil(64).max(1);
    let (n, m) = (g.target(), f.target());
    let mut below_g: Vec<u64> = vec![0; n.size() * words];
    for a in 0..n.size() {
        for c in 0..k_size {
            if n.leq(a, g.apply(c)) {
                below_g[a * words + c / 64] |= 1 << (c % 64);
            }
        }
    }
    let mut above_f: Vec<u64> = vec![0; m.size() * words];
    for b in 0..m.size() {
        for c in 0..k_size {
            if m.leq(f.apply(c), b) {
                above_f[b * words + c / 64] |= 1 << (c % 64);
            }
        }
    }
    for a in 0..n.size() {
        for b in 0..m.size() {
            let witnessed =
                (0..words).any(|w| below_g[a * words + w] & above_f[b * words + w] != 0);
            let related = l.leq(lower.apply(a), upper.apply(b));
            if witnessed != related {
                return false;
            }
        }
    }
    true
}

/// One construction square encountered while iterating lax sums: the span
/// `f : M_j → M_{j+1}`, `g = ι^j_j : M_j → Σ_j M_j`, with legs
/// `lower = f'_j : Σ_j M_j → Σ_{j+1} M_{j+1}` and `upper = ι^{j+1}_{j+1}`.
#[derive(Clone)]
pub struct PushoutSquare {
    pub f: MonotoneMap,
    pub g: MonotoneMap,
    pub lower: MonotoneMap,
    pub upper: MonotoneMap,
}

impl PushoutSquare {
    pub fn verify(&self) -> bool {
        verify_lax_pushout(&self.f, &self.g, &self.lower, &self.upper)
    }
}

/// The full record of an iterated stacking run.
pub struct StackingTrace {
    /// `Σ^k_n L_n`, the final carrier.
    pub result: Arc<Poset>,
    /// Partial sums per round: `sums[r][j] = Σ_j` of the round-`r` series.
    pub sums: Vec<Vec<LaxSum>>,
    /// Every construction square, in build order.
    pub squares: Vec<PushoutSquare>,
}

/// Iterate stacking `k` times over the series `stage0 -> ... -> M_n` and
/// return `Σ^k_n M_n` (`k = 0` returns `M_n` unchanged).
pub fn iterate_stacking(
    stage0: Arc<Poset>,
    maps: &[MonotoneMap],
    k: usize,
    budget: usize,
) -> Result<Arc<Poset>> {
    Ok(stacking_trace(stage0, maps, k, budget)?.result)
}

/// Like [`iterate_stacking`], but keeps every partial sum and construction
/// square for structural verification.
pub fn stacking_trace(
    stage0: Arc<Poset>,
    maps: &[MonotoneMap],
    k: usize,
    budget: usize,
) -> Result<StackingTrace> {
    let mut cur_stage0 = stage0;
    let mut cur_maps = maps.to_vec();
    let mut squares = Vec::new();
    let mut rounds = Vec::new();
    for _ in 0..k {
        let mut sums = Vec::with_capacity(cur_maps.len() + 1);
        let mut sum = LaxSum::build(cur_stage0.clone(), &[])?;
        let mut next_maps = Vec::with_capacity(cur_maps.len());
        for f in &cur_maps {
            let (next, induced) = sum.extend(f)?;
            if next.carrier().size() > budget {
                return Err(Error::Size {
                    required: next.carrier().size() as u128,
                    limit: budget,
                });
            }
            squares.push(PushoutSquare {
                f: f.clone(),
                g: sum.injections().last().unwrap().clone(),
                lower: induced.clone(),
                upper: next.injections().last().unwrap().clone(),
            });
            next_maps.push(induced);
            sums.push(sum);
            sum = next;
        }
        sums.push(sum);
        cur_stage0 = sums[0].carrier().clone();
        cur_maps = next_maps
            .iter()
            .zip(sums.windows(2))
            .map(|(induced, w)| {
                // Reanchor the induced map onto the round's carriers so the
                // next round's stages and maps share poset instances.
                MonotoneMap::new(
                    w[0].carrier().clone(),
                    w[1].carrier().clone(),
                    induced.assignment().to_vec(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        rounds.push(sums);
    }
    let result = match rounds.last() {
        Some(sums) => sums.last().unwrap().carrier().clone(),
        None => match cur_maps.last() {
            Some(f) => f.target().clone(),
            None => cur_stage0,
        },
    };
    Ok(StackingTrace {
        result,
        sums: rounds,
        squares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(m: usize) -> Arc<Poset> {
        let pairs: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
        Poset::from_relation(m + 1, &pairs).unwrap().into_arc()
    }

    fn bottom_inclusion(src: Arc<Poset>, tgt: Arc<Poset>) -> MonotoneMap {
        let assign = (0..src.size()).collect();
        MonotoneMap::new(src, tgt, assign).unwrap()
    }

    /// C_0 -> C_1 -> C_2 along bottom-segment inclusions.
    fn chain_series(n: usize) -> (Arc<Poset>, Vec<MonotoneMap>) {
        let stages: Vec<_> = (0..=n).map(chain).collect();
        let maps = stages
            .windows(2)
            .map(|w| bottom_inclusion(w[0].clone(), w[1].clone()))
            .collect();
        (stages[0].clone(), maps)
    }

    #[test]
    fn empty_sum_is_the_stage_itself() {
        let c2 = chain(2);
        let sum = LaxSum::build(c2.clone(), &[]).unwrap();
        assert!(sum.carrier().same_order(&c2));
    }

    #[test]
    fn stacking_singletons_gives_a_chain() {
        let c0 = chain(0);
        let id = MonotoneMap::identity(c0.clone());
        let sum = LaxSum::build(c0, &[id.clone(), id]).unwrap();
        assert!(sum.carrier().same_order(&chain(2)));
        assert_eq!(sum.carrier().bottom_top().unwrap(), (0, 2));
    }

    #[test]
    fn injection_squares_lax_commute() {
        let (stage0, maps) = chain_series(3);
        let sum = LaxSum::build(stage0, &maps).unwrap();
        let iota = sum.injections();
        for (j, f) in sum.maps().iter().enumerate() {
            for x in 0..sum.stage_posets()[j].size() {
                let lo = iota[j].apply(x);
                let hi = iota[j + 1].apply(f.apply(x));
                assert!(sum.carrier().leq(lo, hi));
            }
        }
    }

    #[test]
    fn induced_map_is_reflecting_with_down_closed_image() {
        let (stage0, maps) = chain_series(3);
        let sum = LaxSum::build(stage0, &maps[..2]).unwrap();
        let (_, induced) = sum.extend(&maps[2]).unwrap();
        let props = induced.properties().unwrap();
        assert!(props.order_reflecting);
        assert!(props.down_closed_image);
    }

    #[test]
    fn composition_mismatch_is_rejected() {
        let (c0, c2) = (chain(0), chain(2));
        let wrong = bottom_inclusion(c0.clone(), c2);
        let sum = LaxSum::build(chain(1), &[]).unwrap();
        assert!(matches!(sum.extend(&wrong), Err(Error::Composition(_))));
    }

    #[test]
    fn meet_join_formula_agrees_with_the_carrier() {
        let (stage0, maps) = chain_series(3);
        let series = LatticeSeries::new(stage0.clone(), &maps).unwrap();
        let sum = series.partial_sum(3).unwrap();
        let p = sum.carrier();
        for a in 0..p.size() {
            for b in 0..p.size() {
                assert_eq!(
                    lax_sum_meet_join(&sum, a, b).unwrap(),
                    p.meet_join(a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn transport_rules_hold_on_a_chain_series() {
        let (stage0, maps) = chain_series(4);
        let series = LatticeSeries::new(stage0, &maps).unwrap();
        let s = &series;
        let n = s.stages().len();
        // x^j = x
        for j in 0..n {
            for x in 0..s.stages()[j].size() {
                assert_eq!(s.transport(j, x, j).unwrap(), x);
            }
        }
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    for x in 0..s.stages()[i].size() {
                        let xj = s.transport(i, x, j).unwrap();
                        let xk = s.transport(i, x, k).unwrap();
                        // (x^j)^k = x^k
                        assert_eq!(s.transport(j, xj, k).unwrap(), xk);
                        // (x^k)^{-j} = x^j
                        assert_eq!(s.transport(k, xk, j).unwrap(), xj);
                    }
                }
            }
        }
        // Downward transport of an element outside the image fails.
        assert!(matches!(
            s.transport(1, 1, 0),
            Err(Error::NotInImage { .. })
        ));
    }

    #[test]
    fn pushout_of_identities_on_the_singleton_is_a_two_chain() {
        let c0 = chain(0);
        let id = MonotoneMap::identity(c0);
        let po = lax_pushout(&id, &id).unwrap();
        assert!(po.carrier.same_order(&chain(1)));
        assert!(verify_lax_pushout(&id, &id, &po.lower_leg, &po.upper_leg));
    }

    #[test]
    fn pushout_of_bottom_inclusions_has_an_incomparable_pair() {
        let (c0, c1) = (chain(0), chain(1));
        let f = bottom_inclusion(c0.clone(), c1.clone());
        let po = lax_pushout(&f, &f).unwrap();
        let p = po.carrier.clone();
        assert_eq!(p.size(), 4);
        // (0,1) sits below both stage-2 elements; (1,1) below neither.
        assert!(p.leq(0, 2) && p.leq(0, 3));
        assert!(!p.leq(1, 2) && !p.leq(1, 3));
        assert!(verify_lax_pushout(&f, &f, &po.lower_leg, &po.upper_leg));
    }

    #[test]
    fn non_injective_leg_fails_verification() {
        let (c0, c1) = (chain(0), chain(1));
        let f = bottom_inclusion(c0.clone(), c1.clone());
        let po = lax_pushout(&f, &f).unwrap();
        let squash = MonotoneMap::new(c1, po.carrier.clone(), vec![0, 0]).unwrap();
        assert!(!verify_lax_pushout(&f, &f, &po.lower_leg, &squash));
    }

    #[test]
    fn stacking_squares_are_lax_pushouts() {
        let (stage0, maps) = chain_series(3);
        let trace = stacking_trace(stage0, &maps, 2, 10_000).unwrap();
        assert!(!trace.squares.is_empty());
        for square in &trace.squares {
            assert!(square.verify());
        }
    }

    #[test]
    fn zero_iterations_return_the_last_stage() {
        let (stage0, maps) = chain_series(3);
        let p = iterate_stacking(stage0, &maps, 0, 10_000).unwrap();
        assert!(p.same_order(&chain(3)));
    }

    #[test]
    fn mediating_map_is_forced_and_monotone() {
        // Universal property at desk scale: a cocone determines exactly one
        // mediating map, namely the one forced on injection images.
        let (stage0, maps) = chain_series(2);
        let sum = LaxSum::build(stage0.clone(), &maps).unwrap();
        let target = chain(4);
        // Cocone: embed stage j at height j + x (satisfies ι'_j ≤ ι'_{j+1} ∘ f_j).
        let cocone: Vec<MonotoneMap> = (0..3)
            .map(|j| {
                MonotoneMap::new(
                    sum.stage_posets()[j].clone(),
                    target.clone(),
                    (0..=j).map(|x| j + x).collect(),
                )
                .unwrap()
            })
            .collect();
        for j in 0..2 {
            for x in 0..sum.stage_posets()[j].size() {
                let here = cocone[j].apply(x);
                let there = cocone[j + 1].apply(maps[j].apply(x));
                assert!(target.leq(here, there));
            }
        }
        // The forced assignment u(x, j) = ι'_j(x).
        let forced: Vec<usize> = (0..sum.carrier().size())
            .map(|id| cocone[sum.stage_of(id)].apply(sum.inner_of(id)))
            .collect();
        let u = MonotoneMap::new(sum.carrier().clone(), target.clone(), forced.clone()).unwrap();
        for (j, leg) in cocone.iter().enumerate() {
            for x in 0..sum.stage_posets()[j].size() {
                assert_eq!(u.apply(sum.id_of(j, x)), leg.apply(x));
            }
        }
        // Exhaustive search over all candidate maps confirms uniqueness.
        let total = sum.carrier().size();
        let mut found = 0;
        let mut assign = vec![0usize; total];
        'candidates: loop {
            let factors_through = (0..3).all(|j| {
                (0..sum.stage_posets()[j].size())
                    .all(|x| assign[sum.id_of(j, x)] == cocone[j].apply(x))
            });
            if factors_through
                && MonotoneMap::new(sum.carrier().clone(), target.clone(), assign.clone()).is_ok()
            {
                found += 1;
                assert_eq!(assign, forced);
            }
            for slot in assign.iter_mut() {
                *slot += 1;
                if *slot < target.size() {
                    continue 'candidates;
                }
                *slot = 0;
            }
            break;
        }
        assert_eq!(found, 1);
    }
}
