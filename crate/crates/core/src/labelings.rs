//! Vertex labelings and validators for the Roman-type function classes.
//!
//! * [`DrLabeling`] — values in `{0,1,2,3}`: double Roman dominating
//!   functions (DRDF) and their independent variant (IDRDF).
//! * [`R2Labeling`] — values in `{0,1,2}`: Roman {2}-dominating functions
//!   (R2DF, IR2DF).
//! * [`RainbowLabeling`] — subsets of `{1,2}`: 2-rainbow dominating
//!   functions (2RDF, I2RDF).
//!
//! Every validator reports the first violating vertex together with the
//! clause it broke, scanning vertices in ascending order.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    /// The labeling was built for a graph of a different order.
    OrderMismatch { labeling: usize, graph: usize },
    /// DRDF: a 0-vertex has neither a 3-neighbor nor two 2-neighbors.
    ZeroUndefended,
    /// DRDF: a 1-vertex has no neighbor labeled 2 or 3.
    OneUnsupported,
    /// R2DF: a 0-vertex has neighborhood weight below 2.
    ZeroUnderweight,
    /// 2RDF: an empty-set vertex does not see both colors.
    RainbowIncomplete,
    /// Independent variants: two positively labeled vertices are adjacent.
    AdjacentPositive { neighbor: Vertex },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Option<Vertex>,
    pub clause: Clause,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertex {
            Some(v) => write!(f, "vertex {v}: {:?}", self.clause),
            None => write!(f, "{:?}", self.clause),
        }
    }
}

pub type Validity = std::result::Result<(), Violation>;

fn check_order(g: &Graph, len: usize) -> Validity {
    if g.order() == len {
        Ok(())
    } else {
        Err(Violation {
            vertex: None,
            clause: Clause::OrderMismatch {
                labeling: len,
                graph: g.order(),
            },
        })
    }
}

fn check_independent(g: &Graph, positive: impl Fn(Vertex) -> bool) -> Validity {
    for &(u, v) in g.edges() {
        if positive(u) && positive(v) {
            return Err(Violation {
                vertex: Some(u),
                clause: Clause::AdjacentPositive { neighbor: v },
            });
        }
    }
    Ok(())
}

fn fail(v: Vertex, clause: Clause) -> Validity {
    Err(Violation {
        vertex: Some(v),
        clause,
    })
}

fn numeric_labels(values: &[u8], max: u8) -> Result<()> {
    match values.iter().position(|&x| x > max) {
        Some(vertex) => Err(Error::InvalidLabel {
            vertex,
            value: values[vertex],
        }),
        None => Ok(()),
    }
}

fn numeric_witness(values: &[u8]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(v, x)| format!("{v} {x}\n"))
        .collect()
}

/// A function `V -> {0,1,2,3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DrLabeling {
    values: Vec<u8>,
}

impl DrLabeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        numeric_labels(&values, 3)?;
        Ok(DrLabeling { values })
    }

    /// Labels every member of `threes` with 3, every other member of
    /// `positive` with 2, and the rest 0.
    pub fn from_sets(n: usize, positive: &VertexSet, threes: &VertexSet) -> Self {
        let mut values = vec![0u8; n];
        for v in positive.iter() {
            values[v] = 2;
        }
        for v in threes.iter() {
            values[v] = 3;
        }
        DrLabeling { values }
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&x| u64::from(x)).sum()
    }

    /// The class `V_i` for `i` in `0..=3`.
    pub fn class(&self, i: u8) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == i)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn positive_set(&self) -> VertexSet {
        (0..self.len()).filter(|&v| self.values[v] > 0).collect()
    }

    pub fn witness_text(&self) -> String {
        numeric_witness(&self.values)
    }
}

pub fn check_drdf(g: &Graph, f: &DrLabeling) -> Validity {
    check_order(g, f.len())?;
    for v in g.vertices() {
        let (mut twos, mut big) = (0, 0);
        for &w in g.adjacent(v) {
            match f.values[w] {
                2 => twos += 1,
                3 => big += 1,
                _ => {}
            }
        }
        match f.values[v] {
            0 if big == 0 && twos < 2 => return fail(v, Clause::ZeroUndefended),
            1 if big == 0 && twos == 0 => return fail(v, Clause::OneUnsupported),
            _ => {}
        }
    }
    Ok(())
}

pub fn check_idrdf(g: &Graph, f: &DrLabeling) -> Validity {
    check_drdf(g, f)?;
    check_independent(g, |v| f.values[v] > 0)
}

pub fn is_drdf(g: &Graph, f: &DrLabeling) -> bool {
    check_drdf(g, f).is_ok()
}

pub fn is_idrdf(g: &Graph, f: &DrLabeling) -> bool {
    check_idrdf(g, f).is_ok()
}

/// A function `V -> {0,1,2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct R2Labeling {
    values: Vec<u8>,
}

impl R2Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        numeric_labels(&values, 2)?;
        Ok(R2Labeling { values })
    }

    pub fn from_sets(n: usize, positive: &VertexSet, twos: &VertexSet) -> Self {
        let mut values = vec![0u8; n];
        for v in positive.iter() {
            values[v] = 1;
        }
        for v in twos.iter() {
            values[v] = 2;
        }
        R2Labeling { values }
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn positive_set(&self) -> VertexSet {
        (0..self.len()).filter(|&v| self.values[v] > 0).collect()
    }

    pub fn witness_text(&self) -> String {
        numeric_witness(&self.values)
    }
}

pub fn check_r2df(g: &Graph, f: &R2Labeling) -> Validity {
    check_order(g, f.len())?;
    for v in g.vertices() {
        if f.values[v] == 0 {
            let around: u32 = g.adjacent(v).iter().map(|&w| u32::from(f.values[w])).sum();
            if around < 2 {
                return fail(v, Clause::ZeroUnderweight);
            }
        }
    }
    Ok(())
}

pub fn check_ir2df(g: &Graph, f: &R2Labeling) -> Validity {
    check_r2df(g, f)?;
    check_independent(g, |v| f.values[v] > 0)
}

pub fn is_r2df(g: &Graph, f: &R2Labeling) -> bool {
    check_r2df(g, f).is_ok()
}

pub fn is_ir2df(g: &Graph, f: &R2Labeling) -> bool {
    check_ir2df(g, f).is_ok()
}

/// A subset of `{1, 2}`, stored as a two-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ONE: ColorSet = ColorSet(0b01);
    pub const TWO: ColorSet = ColorSet(0b10);
    pub const BOTH: ColorSet = ColorSet(0b11);

    pub fn from_bits(bits: u8) -> Option<ColorSet> {
        (bits <= 0b11).then_some(ColorSet(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> u64 {
        u64::from(self.0.count_ones())
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match *self {
            ColorSet::EMPTY => "{}",
            ColorSet::ONE => "{1}",
            ColorSet::TWO => "{2}",
            _ => "{1,2}",
        };
        f.write_str(s)
    }
}

/// A function `V -> P({1,2})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RainbowLabeling {
    values: Vec<ColorSet>,
}

impl RainbowLabeling {
    pub fn new(values: Vec<ColorSet>) -> Self {
        RainbowLabeling { values }
    }

    pub fn values(&self) -> &[ColorSet] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().map(|c| c.len()).sum()
    }

    pub fn positive_set(&self) -> VertexSet {
        (0..self.len())
            .filter(|&v| !self.values[v].is_empty())
            .collect()
    }

    pub fn witness_text(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{v} {c}\n"))
            .collect()
    }
}

pub fn check_2rdf(g: &Graph, f: &RainbowLabeling) -> Validity {
    check_order(g, f.len())?;
    for v in g.vertices() {
        if f.values[v].is_empty() {
            let seen = g
                .adjacent(v)
                .iter()
                .fold(ColorSet::EMPTY, |acc, &w| acc.union(f.values[w]));
            if seen != ColorSet::BOTH {
                return fail(v, Clause::RainbowIncomplete);
            }
        }
    }
    Ok(())
}

pub fn check_i2rdf(g: &Graph, f: &RainbowLabeling) -> Validity {
    check_2rdf(g, f)?;
    check_independent(g, |v| !f.values[v].is_empty())
}

pub fn is_2rdf(g: &Graph, f: &RainbowLabeling) -> bool {
    check_2rdf(g, f).is_ok()
}

pub fn is_i2rdf(g: &Graph, f: &RainbowLabeling) -> bool {
    check_i2rdf(g, f).is_ok()
}
