//! Linear-time dynamic programs on trees, rooted at vertex 0.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const INF: u64 = u64::MAX / 4;

/// Addition saturating at `INF`; operands never exceed `INF`.
fn add(a: u64, b: u64) -> u64 {
    (a + b).min(INF)
}

/// Children lists and a post-order (children before parents).
fn rooted(t: &Graph) -> Result<(Vec<Vec<Vertex>>, Vec<Vertex>)> {
    if !t.is_tree()? {
        return Err(Error::NotATree);
    }
    let order = t.bfs_order_from(0);
    let mut parent = vec![usize::MAX; t.order()];
    let mut children = vec![Vec::new(); t.order()];
    for &v in &order {
        for &w in t.adjacent(v) {
            if w != parent[v] {
                parent[w] = v;
                children[v].push(w);
            }
        }
    }
    Ok((children, order.into_iter().rev().collect()))
}

/// Per-vertex costs of the independent double Roman DP.
#[derive(Debug, Clone, Copy)]
struct DrStates {
    /// labeled 2
    two: u64,
    /// labeled 3
    three: u64,
    /// labeled 0, already defended by its children
    zero_sat: u64,
    /// labeled 0, exactly one 2-child and no 3-child: needs a positive parent
    zero_need2: u64,
    /// labeled 0, no positive child: needs a parent labeled 3
    zero_need3: u64,
}

/// Independent double Roman domination number of a tree.
pub fn tree_idrdn(t: &Graph) -> Result<u64> {
    let (children, post) = rooted(t)?;
    let mut st = vec![
        DrStates {
            two: INF,
            three: INF,
            zero_sat: INF,
            zero_need2: INF,
            zero_need3: INF,
        };
        t.order()
    ];
    for v in post {
        let mut two = 2;
        let mut three = 3;
        // zero[c][h]: min cost over children so far with c = min(#2-children, 2)
        // and h = whether some child is labeled 3
        let mut zero = [[INF; 2]; 3];
        zero[0][0] = 0;
        for &c in &children[v] {
            let s = st[c];
            two = add(two, s.zero_sat.min(s.zero_need2));
            three = add(three, s.zero_sat.min(s.zero_need2).min(s.zero_need3));

            let mut next = [[INF; 2]; 3];
            for (cnt, row) in zero.iter().enumerate() {
                for (has3, &base) in row.iter().enumerate() {
                    if base >= INF {
                        continue;
                    }
                    let mut relax = |c2: usize, h3: usize, extra: u64| {
                        let slot = &mut next[c2.min(2)][h3];
                        *slot = (*slot).min(add(base, extra));
                    };
                    relax(cnt, has3, s.zero_sat);
                    relax(cnt + 1, has3, s.two);
                    relax(cnt, 1, s.three);
                }
            }
            zero = next;
        }
        let zero_sat = zero[2][0].min(zero[0][1]).min(zero[1][1]).min(zero[2][1]);
        st[v] = DrStates {
            two,
            three,
            zero_sat,
            zero_need2: zero[1][0],
            zero_need3: zero[0][0],
        };
    }
    let root = st[0];
    Ok(root.two.min(root.three).min(root.zero_sat))
}

/// Independent domination number of a tree.
pub fn tree_idn(t: &Graph) -> Result<u64> {
    let (children, post) = rooted(t)?;
    // (in the set, outside and dominated by a child, outside and undominated)
    let mut st = vec![(INF, INF, INF); t.order()];
    for v in post {
        let mut inside = 1;
        let mut undominated = 0;
        // best cost with all children in {in, out-dominated}, split on whether
        // at least one child is in the set
        let mut none_in = 0u64;
        let mut some_in = INF;
        for &c in &children[v] {
            let (ci, cd, cu) = st[c];
            inside = add(inside, cd.min(cu));
            undominated = add(undominated, cd);
            some_in = add(some_in, ci.min(cd)).min(add(none_in, ci));
            none_in = add(none_in, cd);
        }
        st[v] = (inside, some_in, undominated);
    }
    let (i, d, _) = st[0];
    Ok(i.min(d))
}
