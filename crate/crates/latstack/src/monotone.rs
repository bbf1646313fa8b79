//! Monotone maps between posets, with checkable side-properties.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// An order-preserving assignment between two posets.
///
/// Monotonicity is verified at construction; the map is immutable afterwards.
#[derive(Clone)]
pub struct MonotoneMap {
    source: Arc<Poset>,
    target: Arc<Poset>,
    assign: Vec<usize>,
}

/// Side-properties of a monotone map, each established by exhaustive check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapProperties {
    pub order_reflecting: bool,
    pub down_closed_image: bool,
    pub join_preserving: bool,
    pub bottom_preserving: bool,
}

impl MonotoneMap {
    /// Build a map from a per-source-element target assignment.
    pub fn new(source: Arc<Poset>, target: Arc<Poset>, assign: Vec<usize>) -> Result<MonotoneMap> {
        if assign.len() != source.size() {
            return Err(Error::Composition(format!(
                "assignment length {} does not match source size {}",
                assign.len(),
                source.size()
            )));
        }
        for &id in &assign {
            if id >= target.size() {
                return Err(Error::Range {
                    id,
                    size: target.size(),
                });
            }
        }
        for x in 0..source.size() {
            for y in 0..source.size() {
                if source.leq(x, y) && !target.leq(assign[x], assign[y]) {
                    return Err(Error::NotMonotone { x, y });
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            assign,
        })
    }

    pub fn identity(p: Arc<Poset>) -> MonotoneMap {
        let assign = (0..p.size()).collect();
        MonotoneMap {
            source: p.clone(),
            target: p,
            assign,
        }
    }

    pub fn source(&self) -> &Arc<Poset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Poset> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.assign[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    /// Composite `other ∘ self`; the inner target must match the outer source.
    pub fn then(&self, other: &MonotoneMap) -> Result<MonotoneMap> {
        if !self.target.same_order(&other.source) {
            return Err(Error::Composition(
                "target of the first map differs from source of the second".into(),
            ));
        }
        let assign = self.assign.iter().map(|&x| other.assign[x]).collect();
        Ok(MonotoneMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assign,
        })
    }

    /// `f(x) ≤ f(y)` forces `x ≤ y`.
    pub fn is_order_reflecting(&self) -> bool {
        let n = self.source.size();
        (0..n).all(|x| {
            (0..n)
                .all(|y| !self.target.leq(self.assign[x], self.assign[y]) || self.source.leq(x, y))
        })
    }

    /// Anything below an image point is itself an image point.
    pub fn has_down_closed_image(&self) -> bool {
        let mut in_image = vec![false; self.target.size()];
        for &y in &self.assign {
            in_image[y] = true;
        }
        (0..self.target.size()).all(|b| {
            !in_image
                .iter()
                .enumerate()
                .any(|(y, &im)| im && self.target.leq(b, y))
                || in_image[b]
        })
    }

    /// All four checkable flags; the join and bottom checks need lattice
    /// structure on both endpoints.
    pub fn properties(&self) -> Result<MapProperties> {
        let (src_meet_join, tgt_meet_join) =
            (self.source.lattice_tables(), self.target.lattice_tables());
        let (_, src_join) = src_meet_join?;
        let (_, tgt_join) = tgt_meet_join?;
        let n = self.source.size();
        let tn = self.target.size();
        let mut join_preserving = true;
        'outer: for x in 0..n {
            for y in 0..n {
                let lhs = self.assign[src_join[x * n + y]];
                let rhs = tgt_join[self.assign[x] * tn + self.assign[y]];
                if lhs != rhs {
                    join_preserving = false;
                    break 'outer;
                }
            }
        }
        let (src_bottom, _) = self.source.bottom_top()?;
        let (tgt_bottom, _) = self.target.bottom_top()?;
        Ok(MapProperties {
            order_reflecting: self.is_order_reflecting(),
            down_closed_image: self.has_down_closed_image(),
            join_preserving,
            bottom_preserving: self.assign[src_bottom] == tgt_bottom,
        })
    }
}

impl std::fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MonotoneMap")
            .field("source_size", &self.source.size())
            .field("target_size", &self.target.size())
            .field("assign", &self.assign)
            .finish()
    }
}
