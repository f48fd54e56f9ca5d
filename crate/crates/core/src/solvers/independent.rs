use super::mis::{mis_masks, MaximalIndependentSets};
use super::{closed_masks, guard, Solution};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::labelings::{ColorSet, DrLabeling, R2Labeling, RainbowLabeling};

/// Members of `s` that are the unique `s`-neighbor of some vertex outside `s`.
fn forced_mask(closed: &[u64], s: u64) -> u64 {
    let mut forced = 0;
    for (v, &nb) in closed.iter().enumerate() {
        if s >> v & 1 == 0 {
            let hits = nb & s;
            if hits.count_ones() == 1 {
                forced |= hits;
            }
        }
    }
    forced
}

/// For a maximal independent set `s`, the members that must carry 3 in any
/// independent double Roman dominating function whose positive set is `s`.
pub fn forced_threes(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    if !g.is_maximal_independent(s) {
        return Err(Error::NotMaximalIndependent);
    }
    if g.order() > super::HARD_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            order: g.order(),
            limit: super::HARD_SIZE_LIMIT,
        });
    }
    Ok(VertexSet::from_mask(forced_mask(
        &closed_masks(g),
        s.to_mask(),
    )))
}

/// Tracks the minimum `(cost, positive set)` with lexicographically smallest
/// positive set among ties.
struct Best {
    cost: u64,
    set: Option<VertexSet>,
    mask: u64,
}

impl Best {
    fn new() -> Self {
        Best {
            cost: u64::MAX,
            set: None,
            mask: 0,
        }
    }

    fn offer(&mut self, cost: u64, mask: u64) -> bool {
        if cost > self.cost {
            return false;
        }
        let set = VertexSet::from_mask(mask);
        if cost == self.cost && self.set.as_ref().is_some_and(|s| *s <= set) {
            return false;
        }
        self.cost = cost;
        self.set = Some(set);
        self.mask = mask;
        true
    }
}

fn min_over_mis(g: &Graph, cost: impl Fn(u64, u64) -> u64) -> Result<(u64, u64, u64)> {
    guard(g)?;
    let closed = closed_masks(g);
    let mut best = Best::new();
    for s in MaximalIndependentSets::from_closed(closed.clone()) {
        let forced = forced_mask(&closed, s);
        best.offer(cost(s, forced), s);
    }
    let forced = forced_mask(&closed, best.mask);
    Ok((best.cost, best.mask, forced))
}

fn popcount(m: u64) -> u64 {
    u64::from(m.count_ones())
}

/// Independent double Roman domination number with a witness.
///
/// Isolated vertices belong to every maximal independent set and are never
/// forced, so they receive 2.
pub fn idrdn(g: &Graph) -> Result<Solution<DrLabeling>> {
    let (value, s, forced) = min_over_mis(g, |s, f| 2 * popcount(s) + popcount(f))?;
    let witness = DrLabeling::from_sets(
        g.order(),
        &VertexSet::from_mask(s),
        &VertexSet::from_mask(forced),
    );
    Ok(Solution { value, witness })
}

/// Independent domination number with a minimum maximal independent set.
pub fn idn(g: &Graph) -> Result<Solution<VertexSet>> {
    let (value, s, _) = min_over_mis(g, |s, _| popcount(s))?;
    Ok(Solution {
        value,
        witness: VertexSet::from_mask(s),
    })
}

/// Independent Roman {2}-domination number with a witness.
pub fn ir2dn(g: &Graph) -> Result<Solution<R2Labeling>> {
    let (value, s, forced) = min_over_mis(g, |s, f| popcount(s) + popcount(f))?;
    let witness = R2Labeling::from_sets(
        g.order(),
        &VertexSet::from_mask(s),
        &VertexSet::from_mask(forced),
    );
    Ok(Solution { value, witness })
}

/// Independent 2-rainbow domination number with a witness.
///
/// Per maximal independent set `S`: forced members get `{1,2}`. The other
/// members get `{1}`, `{2}` or `{1,2}`, and each outside vertex whose
/// `S`-neighbors are all unforced must see both colors. Backtracking
/// minimizes the number of `{1,2}` upgrades.
pub fn i2rdn(g: &Graph) -> Result<Solution<RainbowLabeling>> {
    guard(g)?;
    let n = g.order();
    let closed = closed_masks(g);
    let mut best_cost = u64::MAX;
    let mut best: Option<(VertexSet, Vec<ColorSet>)> = None;

    for s in mis_masks(g) {
        let forced = forced_mask(&closed, s);
        let base = popcount(s) + popcount(forced);
        if base > best_cost {
            continue;
        }
        let set = VertexSet::from_mask(s);
        if base == best_cost && best.as_ref().is_some_and(|(b, _)| *b <= set) {
            continue;
        }
        let budget = best_cost.saturating_sub(base);
        if let Some((extra, colors)) = color_unforced(&closed, s, forced, budget) {
            let cost = base + extra;
            let better = cost < best_cost || best.as_ref().is_none_or(|(b, _)| set < *b);
            if better {
                best_cost = cost;
                let mut labels = vec![ColorSet::EMPTY; n];
                for v in set.iter() {
                    labels[v] = if forced >> v & 1 == 1 {
                        ColorSet::BOTH
                    } else {
                        colors[v]
                    };
                }
                best = Some((set, labels));
            }
        }
    }
    let (_, labels) = best.expect("every non-empty graph has a maximal independent set");
    Ok(Solution {
        value: best_cost,
        witness: RainbowLabeling::new(labels),
    })
}

/// Minimum number of `{1,2}` upgrades among the unforced members of `s`,
/// at most `budget`, with the coloring attaining it.
fn color_unforced(
    closed: &[u64],
    s: u64,
    forced: u64,
    budget: u64,
) -> Option<(u64, Vec<ColorSet>)> {
    let n = closed.len();
    let free: Vec<usize> = (0..n).filter(|&v| (s & !forced) >> v & 1 == 1).collect();
    let mut slot = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        slot[v] = i;
    }
    // constraint masks, grouped by the slot of their highest member
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); free.len()];
    for (v, &nb) in closed.iter().enumerate() {
        if s >> v & 1 == 1 {
            continue;
        }
        let hits = nb & s;
        if hits & forced != 0 || hits.count_ones() < 2 {
            continue;
        }
        let last = 63 - hits.leading_zeros() as usize;
        closing[slot[last]].push(hits);
    }

    struct Search<'a> {
        free: &'a [usize],
        closing: &'a [Vec<u64>],
        ones: u64,
        twos: u64,
        colors: Vec<ColorSet>,
        best: Option<(u64, Vec<ColorSet>)>,
        limit: u64,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize, extra: u64) {
            if extra > self.limit || self.best.as_ref().is_some_and(|(b, _)| extra >= *b) {
                return;
            }
            if i == self.free.len() {
                self.best = Some((extra, self.colors.clone()));
                return;
            }
            let v = self.free[i];
            let bit = 1u64 << v;
            // The first free vertex never needs {2}: swapping colors globally
            // maps any solution to one where it holds {1} or {1,2}.
            let choices: &[ColorSet] = if i == 0 {
                &[ColorSet::ONE, ColorSet::BOTH]
            } else {
                &[ColorSet::ONE, ColorSet::TWO, ColorSet::BOTH]
            };
            for &c in choices {
                let (o, t) = (self.ones, self.twos);
                if c.bits() & 1 != 0 {
                    self.ones |= bit;
                }
                if c.bits() & 2 != 0 {
                    self.twos |= bit;
                }
                let ok = self.closing[i]
                    .iter()
                    .all(|&m| m & self.ones != 0 && m & self.twos != 0);
                if ok {
                    self.colors[v] = c;
                    let cost = extra + u64::from(c == ColorSet::BOTH);
                    self.run(i + 1, cost);
                }
                self.ones = o;
                self.twos = t;
                if self.best.as_ref().is_some_and(|(b, _)| *b == 0) {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        free: &free,
        closing: &closing,
        ones: 0,
        twos: 0,
        colors: vec![ColorSet::EMPTY; n],
        best: None,
        limit: budget,
    };
    search.run(0, 0);
    search.best
}

/// Packing number: the largest vertex set with pairwise disjoint closed
/// neighborhoods, i.e. a maximum independent set of the square graph.
pub fn packing_number(g: &Graph) -> Result<Solution<VertexSet>> {
    guard(g)?;
    let closed = closed_masks(g);
    let square: Vec<u64> = closed
        .iter()
        .map(|&nb| {
            let mut reach = nb;
            let mut m = nb;
            while m != 0 {
                reach |= closed[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            reach
        })
        .collect();
    let mut best: Option<VertexSet> = None;
    for s in MaximalIndependentSets::from_closed(square) {
        let set = VertexSet::from_mask(s);
        let better = match &best {
            None => true,
            Some(b) => set.len() > b.len() || (set.len() == b.len() && set < *b),
        };
        if better {
            best = Some(set);
        }
    }
    let witness = best.expect("non-empty graph");
    Ok(Solution {
        value: witness.len() as u64,
        witness,
    })
}
