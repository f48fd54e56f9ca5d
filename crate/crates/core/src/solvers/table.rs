use super::{
    domination_number, gamma_dr, gamma_r2, i2rdn, idn, idrdn, ir2dn, max_matching, min_edge_cover,
    packing_number, size_limit, tree_idn, tree_idrdn,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::labelings::{
    is_drdf, is_i2rdf, is_idrdf, is_ir2df, is_r2df, DrLabeling, R2Labeling, RainbowLabeling,
};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Gamma,
    Idn,
    GammaR2,
    Ir2dn,
    I2rdn,
    GammaDr,
    Idrdn,
    Packing,
    MaxMatching,
    MinEdgeCover,
    MaxDegree,
    MinDegree,
    Order,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::Gamma,
        Invariant::Idn,
        Invariant::GammaR2,
        Invariant::Ir2dn,
        Invariant::I2rdn,
        Invariant::GammaDr,
        Invariant::Idrdn,
        Invariant::Packing,
        Invariant::MaxMatching,
        Invariant::MinEdgeCover,
        Invariant::MaxDegree,
        Invariant::MinDegree,
        Invariant::Order,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::Idn => "idn",
            Invariant::GammaR2 => "gamma_r2",
            Invariant::Ir2dn => "ir2dn",
            Invariant::I2rdn => "i2rdn",
            Invariant::GammaDr => "gamma_dr",
            Invariant::Idrdn => "idrdn",
            Invariant::Packing => "packing",
            Invariant::MaxMatching => "max_matching",
            Invariant::MinEdgeCover => "min_edge_cover",
            Invariant::MaxDegree => "max_degree",
            Invariant::MinDegree => "min_degree",
            Invariant::Order => "order",
        }
    }

    /// Whether computing this invariant runs an exponential solver.
    pub fn is_exponential(self) -> bool {
        !matches!(
            self,
            Invariant::MaxMatching
                | Invariant::MinEdgeCover
                | Invariant::MaxDegree
                | Invariant::MinDegree
                | Invariant::Order
        )
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownInvariant(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Value(u64),
    NotApplicable(String),
}

impl Entry {
    pub fn value(&self) -> Option<u64> {
        match self {
            Entry::Value(v) => Some(*v),
            Entry::NotApplicable(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Dr(DrLabeling),
    R2(R2Labeling),
    Rainbow(RainbowLabeling),
    Vertices(VertexSet),
    Edges(Vec<(Vertex, Vertex)>),
}

impl Witness {
    /// One line per vertex (`v value`, `v {1,2}`), or per member/edge for
    /// sets.
    pub fn to_text(&self) -> String {
        match self {
            Witness::Dr(f) => f.witness_text(),
            Witness::R2(f) => f.witness_text(),
            Witness::Rainbow(f) => f.witness_text(),
            Witness::Vertices(s) => s.iter().map(|v| format!("{v}\n")).collect(),
            Witness::Edges(e) => e.iter().map(|(u, v)| format!("{u} {v}\n")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTable {
    pub order: usize,
    pub entries: BTreeMap<Invariant, Entry>,
    pub witnesses: BTreeMap<Invariant, Witness>,
}

impl InvariantTable {
    pub fn get(&self, inv: Invariant) -> Option<u64> {
        self.entries.get(&inv).and_then(Entry::value)
    }

    /// Checks every witness against its invariant's definition and reported
    /// value; returns the first invariant that fails.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Invariant> {
        if self.order != g.order() {
            return Err(Invariant::Order);
        }
        for (&inv, w) in &self.witnesses {
            let value = self.get(inv).ok_or(inv)?;
            let ok = match (inv, w) {
                (Invariant::Idrdn, Witness::Dr(f)) => is_idrdf(g, f) && f.weight() == value,
                (Invariant::GammaDr, Witness::Dr(f)) => is_drdf(g, f) && f.weight() == value,
                (Invariant::Ir2dn, Witness::R2(f)) => is_ir2df(g, f) && f.weight() == value,
                (Invariant::GammaR2, Witness::R2(f)) => is_r2df(g, f) && f.weight() == value,
                (Invariant::I2rdn, Witness::Rainbow(f)) => is_i2rdf(g, f) && f.weight() == value,
                (Invariant::Gamma, Witness::Vertices(s)) => {
                    g.is_dominating(s) && s.len() as u64 == value
                }
                (Invariant::Idn, Witness::Vertices(s)) => {
                    g.is_maximal_independent(s) && s.len() as u64 == value
                }
                (Invariant::Packing, Witness::Vertices(s)) => {
                    is_packing(g, s) && s.len() as u64 == value
                }
                (Invariant::MaxMatching, Witness::Edges(e)) => {
                    is_matching(g, e) && e.len() as u64 == value
                }
                (Invariant::MinEdgeCover, Witness::Edges(e)) => {
                    is_edge_cover(g, e) && e.len() as u64 == value
                }
                _ => false,
            };
            if !ok {
                return Err(inv);
            }
        }
        Ok(())
    }
}

fn is_packing(g: &Graph, s: &VertexSet) -> bool {
    let mut owner = vec![None; g.order()];
    for x in s.iter() {
        for w in std::iter::once(x).chain(g.adjacent(x).iter().copied()) {
            if owner[w].is_some() {
                return false;
            }
            owner[w] = Some(x);
        }
    }
    true
}

fn is_matching(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let mut used = vec![false; g.order()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

fn is_edge_cover(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let mut covered = vec![false; g.order()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Computes the requested invariants exactly.
///
/// Exponential solvers refuse graphs above [`size_limit`], except that the
/// independent domination and IDRD numbers of a tree fall back to the
/// linear-time tree programs (without witnesses). `min_edge_cover` is
/// recorded as not applicable when the graph has an isolated vertex.
pub fn compute_invariants(g: &Graph, which: &[Invariant]) -> Result<InvariantTable> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut table = InvariantTable {
        order: g.order(),
        entries: BTreeMap::new(),
        witnesses: BTreeMap::new(),
    };
    let large = g.order() > size_limit();
    let large_tree = large && g.is_tree()?;

    for &inv in which {
        if table.entries.contains_key(&inv) {
            continue;
        }
        if large
            && inv.is_exponential()
            && !(large_tree && matches!(inv, Invariant::Idn | Invariant::Idrdn))
        {
            return Err(Error::SizeLimit {
                order: g.order(),
                limit: size_limit(),
            });
        }
        let (entry, witness) = match inv {
            Invariant::Order => (Entry::Value(g.order() as u64), None),
            Invariant::MaxDegree => (Entry::Value(g.max_degree()? as u64), None),
            Invariant::MinDegree => (Entry::Value(g.min_degree()? as u64), None),
            Invariant::Idn if large_tree => (Entry::Value(tree_idn(g)?), None),
            Invariant::Idrdn if large_tree => (Entry::Value(tree_idrdn(g)?), None),
            Invariant::Idn => {
                let s = idn(g)?;
                (Entry::Value(s.value), Some(Witness::Vertices(s.witness)))
            }
            Invariant::Idrdn => {
                let s = idrdn(g)?;
                (Entry::Value(s.value), Some(Witness::Dr(s.witness)))
            }
            Invariant::Ir2dn => {
                let s = ir2dn(g)?;
                (Entry::Value(s.value), Some(Witness::R2(s.witness)))
            }
            Invariant::I2rdn => {
                let s = i2rdn(g)?;
                (Entry::Value(s.value), Some(Witness::Rainbow(s.witness)))
            }
            Invariant::Gamma => {
                let s = domination_number(g)?;
                (Entry::Value(s.value), Some(Witness::Vertices(s.witness)))
            }
            Invariant::GammaR2 => {
                let s = gamma_r2(g)?;
                (Entry::Value(s.value), Some(Witness::R2(s.witness)))
            }
            Invariant::GammaDr => {
                let s = gamma_dr(g)?;
                (Entry::Value(s.value), Some(Witness::Dr(s.witness)))
            }
            Invariant::Packing => {
                let s = packing_number(g)?;
                (Entry::Value(s.value), Some(Witness::Vertices(s.witness)))
            }
            Invariant::MaxMatching => {
                let s = max_matching(g);
                (Entry::Value(s.value), Some(Witness::Edges(s.witness)))
            }
            Invariant::MinEdgeCover => match min_edge_cover(g) {
                Ok(s) => (Entry::Value(s.value), Some(Witness::Edges(s.witness))),
                Err(Error::IsolatedVertex(v)) => (
                    Entry::NotApplicable(format!("vertex {v} is isolated")),
                    None,
                ),
                Err(e) => return Err(e),
            },
        };
        table.entries.insert(inv, entry);
        if let Some(w) = witness {
            table.witnesses.insert(inv, w);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for inv in Invariant::ALL {
            assert_eq!(inv.name().parse::<Invariant>().unwrap(), inv);
        }
        assert_eq!(
            "nope".parse::<Invariant>(),
            Err(Error::UnknownInvariant("nope".into()))
        );
    }

    #[test]
    fn path_seven() {
        let t = compute_invariants(&path(7), &[Invariant::Idn, Invariant::Idrdn]).unwrap();
        assert_eq!(t.get(Invariant::Idn), Some(3));
        assert_eq!(t.get(Invariant::Idrdn), Some(8));
        assert_eq!(t.entries.len(), 2);
        assert!(t.validate(&path(7)).is_ok());
    }

    #[test]
    fn complete_five() {
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let t = compute_invariants(&k5, &Invariant::ALL).unwrap();
        assert_eq!(t.get(Invariant::Gamma), Some(1));
        assert_eq!(t.get(Invariant::Idn), Some(1));
        assert_eq!(t.get(Invariant::Idrdn), Some(3));
        assert_eq!(t.get(Invariant::Packing), Some(1));
        assert_eq!(t.get(Invariant::Order), Some(5));
        assert!(t.validate(&k5).is_ok());
    }

    #[test]
    fn edge_cover_not_applicable_with_isolated_vertices() {
        let t = compute_invariants(&Graph::empty(2), &Invariant::ALL).unwrap();
        assert!(matches!(
            t.entries[&Invariant::MinEdgeCover],
            Entry::NotApplicable(_)
        ));
        assert!(t.validate(&Graph::empty(2)).is_ok());
    }

    #[test]
    fn large_trees_use_dynamic_programs() {
        let g = path(40);
        let t =
            compute_invariants(&g, &[Invariant::Idrdn, Invariant::Idn, Invariant::Order]).unwrap();
        assert_eq!(t.get(Invariant::Idrdn), Some(41));
        assert_eq!(t.get(Invariant::Idn), Some(14));
        assert!(matches!(
            compute_invariants(&g, &[Invariant::Gamma]),
            Err(Error::SizeLimit { order: 40, .. })
        ));
    }

    #[test]
    fn validate_catches_bad_witness() {
        let g = path(3);
        let mut t = compute_invariants(&g, &[Invariant::Idrdn]).unwrap();
        t.witnesses.insert(
            Invariant::Idrdn,
            Witness::Dr(DrLabeling::new(vec![3, 0, 0]).unwrap()),
        );
        assert_eq!(t.validate(&g), Err(Invariant::Idrdn));
    }
}
