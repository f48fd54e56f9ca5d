//! Immutable simple graphs on dense vertex labels `0..n`.

mod io;
mod random;

pub use io::{parse_edge_list, serialize_edge_list};
pub use random::{prufer_decode, random_graph, random_tree};
pub(crate) use random::{random_graph_with, random_tree_with};

use crate::error::{Error, Result};
use std::collections::VecDeque;

pub type Vertex = usize;

/// Undirected simple graph. Neighbor lists are sorted ascending and the
/// edge list holds each edge once as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges in either orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: normalized,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Sorted open neighborhood; panics on an out-of-range vertex.
    pub fn adjacent(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.adj[v].is_empty())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.adj[u].iter().all(|&w| !s.contains(w)))
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.vertices()
            .all(|v| s.contains(v) || self.adj[v].iter().any(|&w| s.contains(w)))
    }

    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| v < self.n) && self.is_independent(s) && self.is_dominating(s)
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.bfs_order_from(0).len() == self.n)
    }

    pub fn is_tree(&self) -> Result<bool> {
        Ok(self.is_connected()? && self.edges.len() + 1 == self.n)
    }

    /// Vertices reachable from `root` in breadth-first order.
    pub fn bfs_order_from(&self, root: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }
}

/// A sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(out)
    }

    pub(crate) fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| acc | 1 << v)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.size(), 0);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(path(3).neighbors(1).unwrap(), VertexSet::from([0, 2]));
        assert!(Graph::empty(1).neighbors(0).unwrap().is_empty());
        assert_eq!(cycle(4).neighbors(0).unwrap(), VertexSet::from([1, 3]));
        assert!(path(3).neighbors(3).is_err());
    }

    #[test]
    fn degrees() {
        let c5 = cycle(5);
        assert_eq!((c5.max_degree().unwrap(), c5.min_degree().unwrap()), (2, 2));
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(
            (star.max_degree().unwrap(), star.min_degree().unwrap()),
            (4, 1)
        );
        let e3 = Graph::empty(3);
        assert_eq!((e3.max_degree().unwrap(), e3.min_degree().unwrap()), (0, 0));
        assert_eq!(Graph::empty(0).max_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn independence_and_domination() {
        let c4 = cycle(4);
        assert!(c4.is_independent(&VertexSet::from([0, 2])));
        assert!(!c4.is_independent(&VertexSet::from([0, 1])));
        assert!(c4.is_independent(&VertexSet::new()));
        let p3 = path(3);
        assert!(p3.is_dominating(&VertexSet::from([1])));
        assert!(!p3.is_dominating(&VertexSet::from([0])));
        assert!(!Graph::empty(2).is_dominating(&VertexSet::from([0])));
    }

    #[test]
    fn connectivity() {
        assert_eq!(
            (path(5).is_connected(), path(5).is_tree()),
            (Ok(true), Ok(true))
        );
        assert_eq!(
            (cycle(5).is_connected(), cycle(5).is_tree()),
            (Ok(true), Ok(false))
        );
        let e2 = Graph::empty(2);
        assert_eq!((e2.is_connected(), e2.is_tree()), (Ok(false), Ok(false)));
        assert_eq!(Graph::empty(0).is_tree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::from([5, 0, 3, 3]);
        assert_eq!(s.as_slice(), &[0, 3, 5]);
        assert_eq!(VertexSet::from_mask(s.to_mask()), s);
    }
}
