//! Branch-and-bound for the non-independent invariants `γ`, `γ_R2`, `γ_dR`.
//!
//! Vertices are labeled one at a time in breadth-first order (per component,
//! starting from a maximum-degree vertex). A vertex's constraint is checked
//! as soon as its whole closed neighborhood is labeled. The lower bound
//! charges every vertex a residual demand: the least total label weight the
//! still-unlabeled part of its closed neighborhood must carry. A label of
//! weight `x` serves at most `Δ + 1` closed neighborhoods, so the remaining
//! cost is at least `ceil(total demand / (Δ + 1))`.

use super::{guard, Solution};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::labelings::{DrLabeling, R2Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    Domination,
    RomanTwo,
    DoubleRoman,
}

impl Rule {
    fn labels(self) -> &'static [u8] {
        match self {
            Rule::Domination => &[1, 0],
            Rule::RomanTwo => &[2, 1, 0],
            Rule::DoubleRoman => &[3, 2, 1, 0],
        }
    }

    /// Residual demand of a vertex with label `own` (`None` if unlabeled)
    /// given the counts of labeled neighbors per value.
    fn demand(self, own: Option<u8>, seen: &[u8; 4]) -> u32 {
        let [_, ones, twos, threes] = seen.map(u32::from);
        match self {
            Rule::Domination => match own {
                Some(1) => 0,
                _ => u32::from(ones + twos + threes == 0),
            },
            Rule::RomanTwo => {
                let around = ones + 2 * twos;
                match own {
                    Some(0) => 2u32.saturating_sub(around),
                    Some(_) => 0,
                    None => u32::from(around < 2),
                }
            }
            Rule::DoubleRoman => {
                let defended = threes >= 1 || twos >= 2;
                match own {
                    Some(0) if defended => 0,
                    Some(0) if twos == 1 => 2,
                    Some(0) => 3,
                    Some(1) if twos + threes >= 1 => 0,
                    Some(1) => 2,
                    Some(_) => 0,
                    None if defended => 0,
                    None if twos == 1 => 1,
                    None => 2,
                }
            }
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    rule: Rule,
    order: Vec<Vertex>,
    /// vertices whose closed neighborhood is complete once position i is set
    closing: Vec<Vec<Vertex>>,
    label: Vec<Option<u8>>,
    seen: Vec<[u8; 4]>,
    span: u32,
    best: u64,
    best_labels: Vec<u8>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, rule: Rule) -> Self {
        let n = g.order();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut by_degree: Vec<Vertex> = g.vertices().collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for root in by_degree {
            if !placed[root] {
                for v in g.bfs_order_from(root) {
                    placed[v] = true;
                    order.push(v);
                }
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closing = vec![Vec::new(); n];
        for v in g.vertices() {
            let last = g
                .adjacent(v)
                .iter()
                .map(|&w| pos[w])
                .fold(pos[v], usize::max);
            closing[last].push(v);
        }
        let span = g.max_degree().unwrap_or(0) as u32 + 1;

        let mut search = Search {
            g,
            rule,
            order,
            closing,
            label: vec![None; n],
            seen: vec![[0; 4]; n],
            span,
            best: u64::MAX,
            best_labels: Vec::new(),
        };
        search.seed_with_greedy();
        search
    }

    /// Greedy dominating set scaled to the rule's cheapest "full" label.
    fn seed_with_greedy(&mut self) {
        let g = self.g;
        let n = g.order();
        let mut dominated = vec![false; n];
        let mut pick = vec![false; n];
        while let Some(v) = g
            .vertices()
            .filter(|&v| !pick[v])
            .map(|v| {
                let gain = std::iter::once(v)
                    .chain(g.adjacent(v).iter().copied())
                    .filter(|&w| !dominated[w])
                    .count();
                (gain, v)
            })
            .filter(|&(gain, _)| gain > 0)
            .max_by_key(|&(gain, v)| (gain, std::cmp::Reverse(v)))
            .map(|(_, v)| v)
        {
            pick[v] = true;
            dominated[v] = true;
            for &w in g.adjacent(v) {
                dominated[w] = true;
            }
        }
        let full = *self.rule.labels().first().unwrap();
        self.best_labels = pick.iter().map(|&p| if p { full } else { 0 }).collect();
        self.best = self.best_labels.iter().map(|&x| u64::from(x)).sum();
    }

    fn lower_bound(&self) -> u64 {
        let total: u32 = self
            .g
            .vertices()
            .map(|v| self.rule.demand(self.label[v], &self.seen[v]))
            .sum();
        u64::from(total.div_ceil(self.span))
    }

    fn set(&mut self, v: Vertex, x: u8) {
        self.label[v] = Some(x);
        for &w in self.g.adjacent(v) {
            self.seen[w][x as usize] += 1;
        }
    }

    fn unset(&mut self, v: Vertex, x: u8) {
        self.label[v] = None;
        for &w in self.g.adjacent(v) {
            self.seen[w][x as usize] -= 1;
        }
    }

    fn run(&mut self, i: usize, cost: u64) {
        if cost + self.lower_bound() >= self.best {
            return;
        }
        if i == self.order.len() {
            self.best = cost;
            self.best_labels = self.label.iter().map(|x| x.unwrap()).collect();
            return;
        }
        let v = self.order[i];
        for &x in self.rule.labels() {
            self.set(v, x);
            let ok = self.closing[i]
                .iter()
                .all(|&u| self.rule.demand(self.label[u], &self.seen[u]) == 0);
            if ok {
                self.run(i + 1, cost + u64::from(x));
            }
            self.unset(v, x);
        }
    }
}

fn solve(g: &Graph, rule: Rule) -> Result<(u64, Vec<u8>)> {
    guard(g)?;
    let mut search = Search::new(g, rule);
    search.run(0, 0);
    Ok((search.best, search.best_labels))
}

/// Domination number `γ` with a minimum dominating set as witness.
pub fn domination_number(g: &Graph) -> Result<Solution<crate::graph::VertexSet>> {
    let (value, labels) = solve(g, Rule::Domination)?;
    let witness = (0..labels.len()).filter(|&v| labels[v] == 1).collect();
    Ok(Solution { value, witness })
}

/// Roman {2}-domination number `γ_R2`.
pub fn gamma_r2(g: &Graph) -> Result<Solution<R2Labeling>> {
    let (value, labels) = solve(g, Rule::RomanTwo)?;
    Ok(Solution {
        value,
        witness: R2Labeling::new(labels).expect("labels drawn from {0,1,2}"),
    })
}

/// Double Roman domination number `γ_dR`.
pub fn gamma_dr(g: &Graph) -> Result<Solution<DrLabeling>> {
    let (value, labels) = solve(g, Rule::DoubleRoman)?;
    Ok(Solution {
        value,
        witness: DrLabeling::new(labels).expect("labels drawn from {0,1,2,3}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelings::{is_drdf, is_r2df};

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Minimum weight over all labelings in `values^n` accepted by `valid`.
    fn brute(n: usize, values: &[u8], valid: impl Fn(&[u8]) -> bool) -> u64 {
        let k = values.len();
        let mut best = u64::MAX;
        for code in 0..k.pow(n as u32) {
            let mut c = code;
            let labels: Vec<u8> = (0..n)
                .map(|_| {
                    let x = values[c % k];
                    c /= k;
                    x
                })
                .collect();
            let w: u64 = labels.iter().map(|&x| u64::from(x)).sum();
            if w < best && valid(&labels) {
                best = w;
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(domination_number(&path(7)).unwrap().value, 3);
        let p5 = gamma_dr(&path(5)).unwrap();
        assert_eq!(p5.value, 6);
        assert_eq!(p5.value, super::super::idrdn(&path(5)).unwrap().value);
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..50 {
            let n = 1 + seed as usize % 7;
            let g = crate::graph::random_graph(n, 0.3 + 0.1 * (seed % 4) as f64, seed).unwrap();

            let gamma = domination_number(&g).unwrap();
            assert!(g.is_dominating(&gamma.witness));
            assert_eq!(gamma.witness.len() as u64, gamma.value);
            let oracle = brute(n, &[0, 1], |l| {
                g.is_dominating(&(0..n).filter(|&v| l[v] == 1).collect())
            });
            assert_eq!(gamma.value, oracle, "gamma seed {seed}");

            let r2 = gamma_r2(&g).unwrap();
            assert!(is_r2df(&g, &r2.witness));
            assert_eq!(r2.witness.weight(), r2.value);
            let oracle = brute(n, &[0, 1, 2], |l| {
                is_r2df(&g, &R2Labeling::new(l.to_vec()).unwrap())
            });
            assert_eq!(r2.value, oracle, "gamma_r2 seed {seed}");

            let dr = gamma_dr(&g).unwrap();
            assert!(is_drdf(&g, &dr.witness));
            assert_eq!(dr.witness.weight(), dr.value);
            let oracle = brute(n, &[0, 1, 2, 3], |l| {
                is_drdf(&g, &DrLabeling::new(l.to_vec()).unwrap())
            });
            assert_eq!(dr.value, oracle, "gamma_dr seed {seed}");
        }
    }
}
