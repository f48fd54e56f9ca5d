//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n^3)) and minimum edge covers derived from it.

use super::Solution;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Breadth-first search for an augmenting path from `root`; returns its
    /// free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.adjacent(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn solve(mut self) -> Vec<usize> {
        for root in self.g.vertices() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_path(root) {
                while u != NONE {
                    let pv = self.parent[u];
                    let next = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = next;
                }
            }
        }
        self.mate
    }
}

/// Maximum matching `α'(G)`; the witness lists matched edges with `u < v`,
/// sorted.
pub fn max_matching(g: &Graph) -> Solution<Vec<(Vertex, Vertex)>> {
    let mate = Blossom::new(g).solve();
    let edges: Vec<_> = g
        .vertices()
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Solution {
        value: edges.len() as u64,
        witness: edges,
    }
}

/// Minimum edge cover `β'(G) = n − α'(G)`. The witness extends a maximum
/// matching by one edge per unmatched vertex.
pub fn min_edge_cover(g: &Graph) -> Result<Solution<Vec<(Vertex, Vertex)>>> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let matching = max_matching(g).witness;
    let value = (g.order() - matching.len()) as u64;
    let mut covered = vec![false; g.order()];
    for &(u, v) in &matching {
        covered[u] = true;
        covered[v] = true;
    }
    let mut edges = matching;
    for v in g.vertices().filter(|&v| !covered[v]) {
        let w = g.adjacent(v)[0];
        edges.push((v.min(w), v.max(w)));
    }
    edges.sort_unstable();
    debug_assert_eq!(edges.len() as u64, value);
    Ok(Solution {
        value,
        witness: edges,
    })
}
