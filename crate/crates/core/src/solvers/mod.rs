//! Exact solvers for the domination invariants.
//!
//! The independent invariants (`i`, `i_dR`, `i_R2`, `i_r2`) and the packing
//! number all reduce to a scan over maximal independent sets:
//!
//! * An independent double Roman dominating function never uses the value 1
//!   (a 1-vertex needs a positive neighbor, which independence forbids).
//! * Its positive set is independent and dominating, i.e. a maximal
//!   independent set `S`.
//! * Given `S`, a vertex outside `S` whose only neighbor in `S` is `u`
//!   forces `u` to 3; every other member of `S` can take 2.
//!
//! Hence `i_dR(G) = min_S 2|S| + |forced(S)|`, and likewise
//! `i_R2(G) = min_S |S| + |forced(S)|`. The rainbow variant additionally
//! has to 2-color the unforced members of `S`, which is done by backtracking.
//!
//! The non-independent invariants (`γ`, `γ_R2`, `γ_dR`) use a branch-and-bound
//! over per-vertex labels. Maximum matching uses Edmonds' blossom algorithm
//! and trees have linear-time dynamic programs.

mod domination;
mod independent;
mod matching;
mod mis;
mod table;
mod tree;

pub use domination::{domination_number, gamma_dr, gamma_r2};
pub use independent::{forced_threes, i2rdn, idn, idrdn, ir2dn, packing_number};
pub use matching::{max_matching, min_edge_cover};
pub use mis::{enumerate_maximal_independent_sets, MaximalIndependentSets};
pub use table::{compute_invariants, Entry, Invariant, InvariantTable, Witness};
pub use tree::{tree_idn, tree_idrdn};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Environment variable overriding the exact-solver vertex limit.
pub const SIZE_LIMIT_ENV: &str = "IDRD_SIZE_LIMIT";
pub const DEFAULT_SIZE_LIMIT: usize = 24;
/// Solvers work on `u64` vertex masks.
pub const HARD_SIZE_LIMIT: usize = 64;

/// An optimal value together with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<W> {
    pub value: u64,
    pub witness: W,
}

/// Current vertex limit for the exponential solvers: `IDRD_SIZE_LIMIT` when
/// set to a valid integer, otherwise 24, never above 64.
pub fn size_limit() -> usize {
    std::env::var(SIZE_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_SIZE_LIMIT)
        .min(HARD_SIZE_LIMIT)
}

pub(crate) fn guard(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = size_limit();
    if g.order() > limit {
        return Err(Error::SizeLimit {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Closed-neighborhood bitmasks.
pub(crate) fn closed_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.adjacent(v).iter().fold(1u64 << v, |acc, &w| acc | 1 << w))
        .collect()
}
