//! Maximal independent set enumeration.
//!
//! Bron–Kerbosch with pivoting, run on the complement graph so that cliques
//! there are independent sets here. Candidate vertices are tried in
//! descending degree order (ties by ascending index). The pivot is the
//! vertex `u` of `P ∪ X` minimizing `|P ∩ N[u]|`, the first such vertex in
//! that same order; only the members of `P ∩ N[u]` are branched on.

use super::{closed_masks, guard};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

struct Frame {
    chosen: u64,
    candidates: u64,
    excluded: u64,
    todo: u64,
}

/// Iterator over maximal independent sets as vertex bitmasks.
pub struct MaximalIndependentSets {
    closed: Vec<u64>,
    order: Vec<usize>,
    stack: Vec<Frame>,
    pending_empty: bool,
}

impl MaximalIndependentSets {
    pub(crate) fn from_closed(closed: Vec<u64>) -> Self {
        let n = closed.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(closed[v].count_ones()), v));
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut it = MaximalIndependentSets {
            closed,
            order,
            stack: Vec::new(),
            pending_empty: n == 0,
        };
        if n > 0 {
            let todo = it.pivot_branches(all, 0);
            it.stack.push(Frame {
                chosen: 0,
                candidates: all,
                excluded: 0,
                todo,
            });
        }
        it
    }

    fn pivot_branches(&self, candidates: u64, excluded: u64) -> u64 {
        let pool = candidates | excluded;
        let mut best = candidates;
        let mut best_count = u32::MAX;
        for &u in &self.order {
            if pool >> u & 1 == 1 {
                let b = candidates & self.closed[u];
                let c = b.count_ones();
                if c < best_count {
                    best = b;
                    best_count = c;
                }
            }
        }
        best
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(0);
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.todo == 0 {
                self.stack.pop();
                continue;
            }
            let v = *self
                .order
                .iter()
                .find(|&&v| frame.todo >> v & 1 == 1)
                .expect("todo is non-empty");
            let bit = 1u64 << v;
            frame.todo &= !bit;
            let chosen = frame.chosen | bit;
            let candidates = frame.candidates & !self.closed[v];
            let excluded = frame.excluded & !self.closed[v];
            frame.candidates &= !bit;
            frame.excluded |= bit;

            if candidates == 0 {
                if excluded == 0 {
                    return Some(chosen);
                }
                continue;
            }
            let todo = self.pivot_branches(candidates, excluded);
            self.stack.push(Frame {
                chosen,
                candidates,
                excluded,
                todo,
            });
        }
    }
}

pub(crate) fn mis_masks(g: &Graph) -> MaximalIndependentSets {
    MaximalIndependentSets::from_closed(closed_masks(g))
}

/// Every maximal independent set of `g`, each exactly once, in a fixed
/// deterministic order.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<impl Iterator<Item = VertexSet>> {
    if g.order() > 0 {
        guard(g)?;
    }
    Ok(mis_masks(g).map(VertexSet::from_mask))
}
