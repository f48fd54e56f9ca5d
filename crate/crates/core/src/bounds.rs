//! Inequalities relating `i_dR` to the other invariants, evaluated exactly on
//! a graph, plus a seeded fuzzer over random graphs and trees.
//!
//! Fractional statements are checked with cleared denominators: the
//! `3/2 · i_R2 <= i_dR` bound as `3 i_R2 <= 2 i_dR` and the degree bound
//! `i_dR >= 2n/Δ + (Δ-2)/Δ · i` as `2n + (Δ-2) i <= Δ i_dR`.

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{random_graph_with, random_tree_with, serialize_edge_list, Graph};
use crate::solvers::{
    i2rdn, idn, idrdn, ir2dn, max_matching, min_edge_cover, packing_number, size_limit,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    Any,
    Connected,
    NoIsolatedVertices,
    MaxDegreePositive,
    TreeOrderTwo,
    OrderTwo,
}

impl Applicability {
    fn describe(self) -> &'static str {
        match self {
            Applicability::Any => "any graph",
            Applicability::Connected => "connected graphs",
            Applicability::NoIsolatedVertices => "graphs without isolated vertices",
            Applicability::MaxDegreePositive => "graphs with at least one edge",
            Applicability::TreeOrderTwo => "trees of order at least 2",
            Applicability::OrderTwo => "graphs of order at least 2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Evaluated {
        lhs: i64,
        rhs: i64,
        holds: bool,
        tight: bool,
    },
    Skipped,
}

/// One inequality instantiated on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: &'static str,
    /// The statement being checked, in plain notation.
    pub statement: &'static str,
    pub applicability: Applicability,
    pub relation: Relation,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Evaluated { holds: true, .. } | Outcome::Skipped
        )
    }

    pub fn is_tight(&self) -> bool {
        matches!(self.outcome, Outcome::Evaluated { tight: true, .. })
    }

    pub fn is_skipped(&self) -> bool {
        self.outcome == Outcome::Skipped
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            Outcome::Skipped => write!(
                f,
                "{:<10} skipped (needs {})  {}",
                self.name,
                self.applicability.describe(),
                self.statement
            ),
            Outcome::Evaluated {
                lhs,
                rhs,
                holds,
                tight,
            } => write!(
                f,
                "{:<10} {:>4} {:<2} {:<4} {}{}  {}",
                self.name,
                lhs,
                self.relation.symbol(),
                rhs,
                if holds { "ok" } else { "VIOLATED" },
                if tight { " tight" } else { "" },
                self.statement
            ),
        }
    }
}

/// Every invariant the bound records need, computed once.
#[derive(Debug, Clone)]
struct Profile {
    n: i64,
    max_degree: i64,
    min_degree: i64,
    connected: bool,
    tree: bool,
    isolated: bool,
    idrdn: i64,
    idn: i64,
    ir2dn: i64,
    i2rdn: i64,
    packing: i64,
    matching: i64,
    edge_cover: Option<i64>,
}

impl Profile {
    fn compute(g: &Graph) -> Result<Self> {
        let to_i = |x: u64| x as i64;
        Ok(Profile {
            n: g.order() as i64,
            max_degree: g.max_degree()? as i64,
            min_degree: g.min_degree()? as i64,
            connected: g.is_connected()?,
            tree: g.is_tree()?,
            isolated: g.isolated_vertex().is_some(),
            idrdn: to_i(idrdn(g)?.value),
            idn: to_i(idn(g)?.value),
            ir2dn: to_i(ir2dn(g)?.value),
            i2rdn: to_i(i2rdn(g)?.value),
            packing: to_i(packing_number(g)?.value),
            matching: to_i(max_matching(g).value),
            edge_cover: min_edge_cover(g).ok().map(|s| to_i(s.value)),
        })
    }

    fn applies(&self, a: Applicability) -> bool {
        match a {
            Applicability::Any => true,
            Applicability::Connected => self.connected,
            Applicability::NoIsolatedVertices => !self.isolated,
            Applicability::MaxDegreePositive => self.max_degree >= 1,
            Applicability::TreeOrderTwo => self.tree && self.n >= 2,
            Applicability::OrderTwo => self.n >= 2,
        }
    }
}

type Sides = fn(&Profile) -> (i64, i64);

struct BoundDef {
    name: &'static str,
    statement: &'static str,
    applicability: Applicability,
    relation: Relation,
    sides: Sides,
}

const BOUNDS: &[BoundDef] = &[
    BoundDef {
        name: "B1-lower",
        statement: "3/2 i_R2(G) <= i_dR(G)",
        applicability: Applicability::Any,
        relation: Relation::Le,
        sides: |p| (3 * p.ir2dn, 2 * p.idrdn),
    },
    BoundDef {
        name: "B1-upper",
        statement: "i_dR(G) <= 2 i_R2(G)",
        applicability: Applicability::Any,
        relation: Relation::Le,
        sides: |p| (p.idrdn, 2 * p.ir2dn),
    },
    BoundDef {
        name: "B2",
        statement: "i_R2(G) < i_dR(G)",
        applicability: Applicability::Any,
        relation: Relation::Lt,
        sides: |p| (p.ir2dn, p.idrdn),
    },
    BoundDef {
        name: "B3",
        statement: "i_dR(G) <= 2 i_r2(G)",
        applicability: Applicability::Any,
        relation: Relation::Le,
        sides: |p| (p.idrdn, 2 * p.i2rdn),
    },
    BoundDef {
        name: "B4",
        statement: "i_R2(G) + i(G) <= i_dR(G), G connected",
        applicability: Applicability::Connected,
        relation: Relation::Le,
        sides: |p| (p.ir2dn + p.idn, p.idrdn),
    },
    BoundDef {
        name: "B5",
        statement: "i_dR(G) <= i_R2(G) + beta'(G), no isolated vertices",
        applicability: Applicability::NoIsolatedVertices,
        relation: Relation::Le,
        sides: |p| (p.idrdn, p.ir2dn + p.edge_cover.unwrap_or(0)),
    },
    BoundDef {
        name: "B6-lower",
        statement: "2 i(G) <= i_dR(G)",
        applicability: Applicability::Any,
        relation: Relation::Le,
        sides: |p| (2 * p.idn, p.idrdn),
    },
    BoundDef {
        name: "B6-upper",
        statement: "i_dR(G) <= 3 i(G)",
        applicability: Applicability::Any,
        relation: Relation::Le,
        sides: |p| (p.idrdn, 3 * p.idn),
    },
    BoundDef {
        name: "B7",
        statement: "i_dR(G) + (2 delta - 1) rho(G) <= 2n, G connected",
        applicability: Applicability::Connected,
        relation: Relation::Le,
        sides: |p| (p.idrdn + (2 * p.min_degree - 1) * p.packing, 2 * p.n),
    },
    BoundDef {
        name: "B8",
        statement: "i_dR(G) >= 2n/Delta + (Delta - 2)/Delta i(G)",
        applicability: Applicability::MaxDegreePositive,
        relation: Relation::Le,
        sides: |p| (2 * p.n + (p.max_degree - 2) * p.idn, p.max_degree * p.idrdn),
    },
    BoundDef {
        name: "B9",
        statement: "i(T) + 1 <= i_R2(T), T a tree of order >= 2",
        applicability: Applicability::TreeOrderTwo,
        relation: Relation::Le,
        sides: |p| (p.idn + 1, p.ir2dn),
    },
    BoundDef {
        name: "B10-lower",
        statement: "2 i(T) + 1 <= i_dR(T), T a tree of order >= 2",
        applicability: Applicability::TreeOrderTwo,
        relation: Relation::Le,
        sides: |p| (2 * p.idn + 1, p.idrdn),
    },
    BoundDef {
        name: "B10-upper",
        statement: "i_dR(T) <= 3 i(T), T a tree of order >= 2",
        applicability: Applicability::TreeOrderTwo,
        relation: Relation::Le,
        sides: |p| (p.idrdn, 3 * p.idn),
    },
    BoundDef {
        name: "B11",
        statement: "alpha'(G) + beta'(G) = n, no isolated vertices",
        applicability: Applicability::NoIsolatedVertices,
        relation: Relation::Eq,
        sides: |p| (p.matching + p.edge_cover.unwrap_or(0), p.n),
    },
    BoundDef {
        name: "B12",
        statement: "i_dR(G) = 3 iff Delta(G) = n - 1, order >= 2",
        applicability: Applicability::OrderTwo,
        relation: Relation::Eq,
        sides: |p| (i64::from(p.idrdn == 3), i64::from(p.max_degree == p.n - 1)),
    },
];

/// Names of all bound records, in evaluation order.
pub fn bound_names() -> Vec<&'static str> {
    BOUNDS.iter().map(|b| b.name).collect()
}

/// Evaluates every bound record on `g`. Records whose applicability
/// predicate fails are returned as skipped.
pub fn check_bounds(g: &Graph) -> Result<Vec<BoundCheck>> {
    let profile = Profile::compute(g)?;
    Ok(BOUNDS
        .iter()
        .map(|b| {
            let outcome = if profile.applies(b.applicability) {
                let (lhs, rhs) = (b.sides)(&profile);
                let holds = b.relation.holds(lhs, rhs);
                Outcome::Evaluated {
                    lhs,
                    rhs,
                    holds,
                    tight: b.relation == Relation::Le && lhs == rhs,
                }
            } else {
                Outcome::Skipped
            };
            BoundCheck {
                name: b.name,
                statement: b.statement,
                applicability: b.applicability,
                relation: b.relation,
                outcome,
            }
        })
        .collect())
}

/// A graph on which a `<=` bound is attained with equality.
#[derive(Debug, Clone)]
pub struct TightnessWitness {
    pub bound: &'static str,
    pub family: String,
    pub graph: Graph,
}

/// One sharp instance for each bound that has a known tight family.
pub fn tightness_witnesses() -> Vec<TightnessWitness> {
    let from_spec = |bound, spec: FamilySpec| TightnessWitness {
        bound,
        family: spec.to_string(),
        graph: generate(&spec).expect("valid family"),
    };
    vec![
        // any graph with a vertex adjacent to all others
        from_spec("B1-lower", FamilySpec::Star(4)),
        TightnessWitness {
            bound: "B1-upper",
            family: "edgeless:4".into(),
            graph: Graph::empty(4),
        },
        from_spec("B3", FamilySpec::CompleteMultipartite(vec![2, 3])),
        from_spec("B4", FamilySpec::Complete(5)),
        from_spec("B5", FamilySpec::CompleteMultipartite(vec![3, 3])),
        from_spec("B6-lower", FamilySpec::CompleteMultipartite(vec![2, 2])),
        from_spec("B6-upper", FamilySpec::Complete(5)),
        from_spec("B7", FamilySpec::Complete(5)),
        from_spec("B8", FamilySpec::Cycle(6)),
        from_spec("B10-lower", FamilySpec::Path(4)),
        from_spec("B10-upper", FamilySpec::Star(5)),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    General,
    Connected,
    Tree,
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(GraphClass::General),
            "connected" => Ok(GraphClass::Connected),
            "tree" => Ok(GraphClass::Tree),
            other => Err(Error::InvalidFuzz(format!("unknown graph class `{other}`"))),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::General => "general",
            GraphClass::Connected => "connected",
            GraphClass::Tree => "tree",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub class: GraphClass,
    /// Orders are drawn uniformly from `1..=max_n`.
    pub max_n: usize,
    pub trials: usize,
    /// Edge probabilities are drawn uniformly from this interval (ignored
    /// for trees).
    pub p_range: (f64, f64),
    pub seed: u64,
}

/// Rejection-sampling cap for the connected class.
const CONNECT_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzViolation {
    pub edge_list: String,
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub class: GraphClass,
    pub seed: u64,
    pub trials: usize,
    pub violations: Vec<FuzzViolation>,
    pub tight_counts: BTreeMap<String, u64>,
    pub skipped_counts: BTreeMap<String, u64>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Draws the instance for one trial. Trial `t` reads stream `t` of the
/// ChaCha8 generator seeded with `seed`, so trials are independent of
/// evaluation order.
pub fn fuzz_instance(cfg: &FuzzConfig, trial: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    let n = rng.gen_range(1..=cfg.max_n);
    let (lo, hi) = cfg.p_range;
    match cfg.class {
        GraphClass::Tree => random_tree_with(n, &mut rng),
        GraphClass::General => {
            let p = lo + (hi - lo) * rng.gen::<f64>();
            random_graph_with(n, p, &mut rng)
        }
        GraphClass::Connected => {
            let p = lo + (hi - lo) * rng.gen::<f64>();
            for _ in 0..CONNECT_ATTEMPTS {
                let g = random_graph_with(n, p, &mut rng)?;
                if g.is_connected()? {
                    return Ok(g);
                }
            }
            Err(Error::InvalidFuzz(format!(
                "no connected sample of order {n} at p = {p:.3} after {CONNECT_ATTEMPTS} attempts"
            )))
        }
    }
}

/// Runs `check_bounds` on `trials` seeded instances. Trials run in parallel
/// and are merged in trial order, so the report depends only on `cfg`.
pub fn fuzz(cfg: &FuzzConfig) -> Result<FuzzReport> {
    let (lo, hi) = cfg.p_range;
    if cfg.trials == 0 {
        return Err(Error::InvalidFuzz("trials must be at least 1".into()));
    }
    if cfg.max_n == 0 || cfg.max_n > size_limit() {
        return Err(Error::InvalidFuzz(format!(
            "max_n must be in 1..={}, got {}",
            size_limit(),
            cfg.max_n
        )));
    }
    if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
        return Err(Error::InvalidFuzz(format!(
            "bad probability range [{lo}, {hi}]"
        )));
    }

    let results: Vec<(Graph, Vec<BoundCheck>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let g = fuzz_instance(cfg, t)?;
            let checks = check_bounds(&g)?;
            Ok((g, checks))
        })
        .collect::<Result<_>>()?;

    let mut report = FuzzReport {
        class: cfg.class,
        seed: cfg.seed,
        trials: cfg.trials,
        violations: Vec::new(),
        tight_counts: BTreeMap::new(),
        skipped_counts: BTreeMap::new(),
    };
    for b in BOUNDS {
        report.skipped_counts.insert(b.name.to_string(), 0);
        if b.relation == Relation::Le {
            report.tight_counts.insert(b.name.to_string(), 0);
        }
    }
    for (g, checks) in results {
        for c in checks {
            if !c.holds() {
                report.violations.push(FuzzViolation {
                    edge_list: serialize_edge_list(&g),
                    bound: c.name.to_string(),
                });
            }
            if c.is_tight() {
                *report.tight_counts.get_mut(c.name).unwrap() += 1;
            }
            if c.is_skipped() {
                *report.skipped_counts.get_mut(c.name).unwrap() += 1;
            }
        }
    }
    Ok(report)
}
