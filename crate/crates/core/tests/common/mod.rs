//! Brute-force reference implementations. Nothing here calls the solvers or
//! the labeling validators of the library.

#![allow(dead_code)]

use idrd::Graph;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Calls `visit` with every vector in `{0, .., base-1}^n`.
pub fn for_each_vector(n: usize, base: u8, mut visit: impl FnMut(&[u8])) {
    let mut v = vec![0u8; n];
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            v[i] += 1;
            if v[i] < base {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn positive_independent(g: &Graph, f: &[u8]) -> bool {
    g.edges().iter().all(|&(u, v)| f[u] == 0 || f[v] == 0)
}

pub fn is_drdf(g: &Graph, f: &[u8]) -> bool {
    g.vertices().all(|v| {
        let nb = g.adjacent(v);
        let threes = nb.iter().filter(|&&w| f[w] == 3).count();
        let twos = nb.iter().filter(|&&w| f[w] == 2).count();
        match f[v] {
            0 => threes >= 1 || twos >= 2,
            1 => threes + twos >= 1,
            _ => true,
        }
    })
}

pub fn is_idrdf(g: &Graph, f: &[u8]) -> bool {
    is_drdf(g, f) && positive_independent(g, f)
}

pub fn is_r2df(g: &Graph, f: &[u8]) -> bool {
    g.vertices()
        .all(|v| f[v] != 0 || g.adjacent(v).iter().map(|&w| u32::from(f[w])).sum::<u32>() >= 2)
}

/// `f` holds colour sets as 2-bit masks.
pub fn is_2rdf(g: &Graph, f: &[u8]) -> bool {
    g.vertices()
        .all(|v| f[v] != 0 || g.adjacent(v).iter().fold(0, |acc, &w| acc | f[w]) == 0b11)
}

fn weight(f: &[u8]) -> u64 {
    f.iter().map(|&x| u64::from(x)).sum()
}

fn colour_weight(f: &[u8]) -> u64 {
    f.iter().map(|&x| u64::from(x.count_ones())).sum()
}

fn minimum(n: usize, base: u8, ok: impl Fn(&[u8]) -> bool, w: impl Fn(&[u8]) -> u64) -> u64 {
    let mut best = u64::MAX;
    for_each_vector(n, base, |f| {
        let x = w(f);
        if x < best && ok(f) {
            best = x;
        }
    });
    best
}

pub fn idrdn(g: &Graph) -> u64 {
    minimum(g.order(), 4, |f| is_idrdf(g, f), weight)
}

/// Optimum over labelings that never use the value 1.
pub fn idrdn_without_ones(g: &Graph) -> u64 {
    minimum(g.order(), 4, |f| !f.contains(&1) && is_idrdf(g, f), weight)
}

pub fn gamma_dr(g: &Graph) -> u64 {
    minimum(g.order(), 4, |f| is_drdf(g, f), weight)
}

pub fn ir2dn(g: &Graph) -> u64 {
    minimum(
        g.order(),
        3,
        |f| is_r2df(g, f) && positive_independent(g, f),
        weight,
    )
}

pub fn gamma_r2(g: &Graph) -> u64 {
    minimum(g.order(), 3, |f| is_r2df(g, f), weight)
}

pub fn i2rdn(g: &Graph) -> u64 {
    minimum(
        g.order(),
        4,
        |f| is_2rdf(g, f) && positive_independent(g, f),
        colour_weight,
    )
}

fn dominating(g: &Graph, f: &[u8]) -> bool {
    g.vertices()
        .all(|v| f[v] == 1 || g.adjacent(v).iter().any(|&w| f[w] == 1))
}

pub fn gamma(g: &Graph) -> u64 {
    minimum(g.order(), 2, |f| dominating(g, f), weight)
}

pub fn idn(g: &Graph) -> u64 {
    minimum(
        g.order(),
        2,
        |f| dominating(g, f) && positive_independent(g, f),
        weight,
    )
}

/// Largest set of vertices with pairwise disjoint closed neighborhoods.
pub fn packing(g: &Graph) -> u64 {
    let n = g.order();
    let mut best = 0;
    for_each_vector(n, 2, |f| {
        let mut hits = vec![0u8; n];
        for v in g.vertices().filter(|&v| f[v] == 1) {
            hits[v] += 1;
            for &w in g.adjacent(v) {
                hits[w] += 1;
            }
        }
        if hits.iter().all(|&h| h <= 1) {
            best = best.max(weight(f));
        }
    });
    best
}

/// Largest set of pairwise disjoint edges.
pub fn matching(g: &Graph) -> u64 {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>) -> u64 {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let mut best = go(rest, used);
                if !used[u] && !used[v] {
                    used[u] = true;
                    used[v] = true;
                    best = best.max(1 + go(rest, used));
                    used[u] = false;
                    used[v] = false;
                }
                best
            }
        }
    }
    go(g.edges(), &mut vec![false; g.order()])
}

/// Smallest set of edges covering every vertex; `None` with an isolated
/// vertex. Tries every subset of size 0, 1, 2, ... in turn.
pub fn edge_cover(g: &Graph) -> Option<u64> {
    fn exists(edges: &[(usize, usize)], k: usize, covered: u64, full: u64) -> bool {
        if covered == full {
            return true;
        }
        if k == 0 {
            return false;
        }
        (0..edges.len()).any(|i| {
            let (u, v) = edges[i];
            exists(&edges[i + 1..], k - 1, covered | 1 << u | 1 << v, full)
        })
    }
    if g.isolated_vertex().is_some() {
        return None;
    }
    let full = (1u64 << g.order()) - 1;
    (0..=g.size())
        .find(|&k| exists(g.edges(), k, 0, full))
        .map(|k| k as u64)
}

/// Every labeled tree on `n >= 2` vertices, via all Prüfer sequences.
pub fn all_trees(n: usize, mut visit: impl FnMut(Graph)) {
    assert!(n >= 2);
    let mut seq = vec![0usize; n - 2];
    loop {
        visit(idrd::graph::prufer_decode(n, &seq).unwrap());
        let mut i = 0;
        loop {
            if i == seq.len() {
                return;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}
