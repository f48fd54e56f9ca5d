//! Named graph families, closed-form `i_dR` values, recognition of the
//! subdivided-star and subdivided-double-star tree families, and trees
//! realizing a prescribed `(i, i_dR)` pair.
//!
//! Canonical vertex numbering (stable across releases):
//!
//! | family | numbering |
//! |---|---|
//! | `path:n` | `0 - 1 - ... - n-1` |
//! | `cycle:n` | path plus edge `n-1 - 0` |
//! | `kpartite:m1,...,mr` | parts occupy consecutive index ranges in order |
//! | `star:s` | center 0, leaves `1..=s` |
//! | `doublestar:r,s` | centers 0 and 1; leaves of 0 are `2..r+2`, leaves of 1 follow |
//! | `subdivstar:k,j` | center 0; branch `i < j` is `2i+1` (middle), `2i+2` (leaf); then the `k-1-2j` plain leaves |
//! | `subdivdoublestar:r,s` | centers 0, 1 and their shared middle 2; then `r` branches of 0 as (middle, leaf) pairs, then `s` branches of 1 |
//! | `coronastar:t` | star `0..=t` (center 0), pendant of vertex `i` is `t+1+i` |
//!
//! `subdivstar:k,j` has order `k`: it is the star `K_{1,k-1-j}` with `j`
//! edges subdivided once, which needs `k >= 2j+1`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    DoubleStar(usize, usize),
    SubdividedStar { order: usize, subdivided: usize },
    SubdividedDoubleStar(usize, usize),
    CoronaOfStar(usize),
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteMultipartite(_) => "kpartite",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleStar(..) => "doublestar",
            FamilySpec::SubdividedStar { .. } => "subdivstar",
            FamilySpec::SubdividedDoubleStar(..) => "subdivdoublestar",
            FamilySpec::CoronaOfStar(_) => "coronastar",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => vec![*n],
            FamilySpec::Star(s) | FamilySpec::CoronaOfStar(s) => vec![*s],
            FamilySpec::CompleteMultipartite(parts) => parts.clone(),
            FamilySpec::DoubleStar(r, s) | FamilySpec::SubdividedDoubleStar(r, s) => vec![*r, *s],
            FamilySpec::SubdividedStar { order, subdivided } => vec![*order, *subdivided],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n == 0 => {
                bad(format!("{} needs at least one vertex", self.kind()))
            }
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.len() < 2 {
                    bad("kpartite needs at least two parts".into())
                } else if parts.contains(&0) {
                    bad("kpartite part sizes must be positive".into())
                } else if parts.windows(2).any(|w| w[0] > w[1]) {
                    bad("kpartite part sizes must be sorted ascending".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Star(s) | FamilySpec::CoronaOfStar(s) if *s == 0 => {
                bad(format!("{} needs a positive parameter", self.kind()))
            }
            FamilySpec::DoubleStar(r, s) | FamilySpec::SubdividedDoubleStar(r, s)
                if *r == 0 || r > s =>
            {
                bad(format!(
                    "{} needs 1 <= r <= s, got r={r}, s={s}",
                    self.kind()
                ))
            }
            FamilySpec::SubdividedStar { order, subdivided } => {
                if *order < 2 {
                    bad(format!("subdivstar needs k >= 2, got {order}"))
                } else if *order < 2 * subdivided + 1 {
                    bad(format!(
                        "subdivstar needs k >= 2j+1, got k={order}, j={subdivided}"
                    ))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.kind(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind:p1,p2,...`, e.g. `path:7`, `kpartite:2,2,5`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("expected `kind:params`, got `{s}`")))?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFamily(format!("bad parameter `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match kind {
            "path" => arity(1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => arity(1).map(|_| FamilySpec::Cycle(params[0])),
            "complete" => arity(1).map(|_| FamilySpec::Complete(params[0])),
            "kpartite" => Ok(FamilySpec::CompleteMultipartite(params)),
            "star" => arity(1).map(|_| FamilySpec::Star(params[0])),
            "doublestar" => arity(2).map(|_| FamilySpec::DoubleStar(params[0], params[1])),
            "subdivstar" => arity(2).map(|_| FamilySpec::SubdividedStar {
                order: params[0],
                subdivided: params[1],
            }),
            "subdivdoublestar" => {
                arity(2).map(|_| FamilySpec::SubdividedDoubleStar(params[0], params[1]))
            }
            "coronastar" => arity(1).map(|_| FamilySpec::CoronaOfStar(params[0])),
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

/// Corona `G ∘ K_1`: vertex `v` of `g` gets the pendant `n + v`.
pub fn corona(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges().iter().copied().chain((0..n).map(|v| (v, n + v)));
    Graph::new(2 * n, edges).expect("corona edges are in range")
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let n = match *spec {
        FamilySpec::Path(n) => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FamilySpec::Cycle(n) => {
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        FamilySpec::Complete(n) => {
            edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
            n
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let n = part_of.len();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
        FamilySpec::Star(s) => {
            edges.extend((1..=s).map(|i| (0, i)));
            s + 1
        }
        FamilySpec::DoubleStar(r, s) => {
            edges.push((0, 1));
            edges.extend((2..r + 2).map(|i| (0, i)));
            edges.extend((r + 2..r + s + 2).map(|i| (1, i)));
            r + s + 2
        }
        FamilySpec::SubdividedStar { order, subdivided } => {
            for i in 0..subdivided {
                edges.push((0, 2 * i + 1));
                edges.push((2 * i + 1, 2 * i + 2));
            }
            edges.extend((2 * subdivided + 1..order).map(|v| (0, v)));
            order
        }
        FamilySpec::SubdividedDoubleStar(r, s) => {
            edges.push((0, 2));
            edges.push((2, 1));
            let mut next = 3;
            for (center, count) in [(0, r), (1, s)] {
                for _ in 0..count {
                    edges.push((center, next));
                    edges.push((next, next + 1));
                    next += 2;
                }
            }
            next
        }
        FamilySpec::CoronaOfStar(t) => return Ok(corona(&generate(&FamilySpec::Star(t))?)),
    };
    Graph::new(n, edges)
}

/// Closed-form independent double Roman domination number.
///
/// * paths: `n` if `n ≡ 0 (mod 3)`, else `n + 1`;
/// * cycles: `n` if `n ≡ 0, 2, 3, 4 (mod 6)`, else `n + 1`;
/// * complete graphs (`n >= 2`): 3;
/// * complete multipartite `K_{m1 <= ... <= mr}`: 3 if `m1 = 1`, else `2 m1`.
pub fn formula_idrdn(spec: &FamilySpec) -> Result<u64> {
    spec.validate()?;
    match *spec {
        FamilySpec::Path(n) => Ok(if n % 3 == 0 { n } else { n + 1 } as u64),
        FamilySpec::Cycle(n) => Ok(if matches!(n % 6, 0 | 2 | 3 | 4) {
            n
        } else {
            n + 1
        } as u64),
        FamilySpec::Complete(1) => Err(Error::InvalidFamily(
            "the complete-graph closed form needs n >= 2".into(),
        )),
        FamilySpec::Complete(_) => Ok(3),
        FamilySpec::CompleteMultipartite(ref parts) => Ok(if parts[0] == 1 {
            3
        } else {
            2 * parts[0] as u64
        }),
        _ => Err(Error::NoClosedForm(spec.kind().to_string())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    SubdividedStar,
    SubdividedDoubleStar,
    Neither,
}

/// Membership of a tree in the subdivided-star family `T_{k,j}` and the
/// subdivided-double-star family `F_{r,s}`. A tree may belong to both (P_7)
/// and may match several `(k, j)` (P_3 is `T_{3,0}` and `T_{3,1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeClass {
    /// Every `(k, j)` with the tree isomorphic to `T_{k,j}`, sorted.
    pub subdivided_star: Vec<(usize, usize)>,
    /// `(r, s)` with `r <= s` when the tree is `F_{r,s}`.
    pub subdivided_double_star: Option<(usize, usize)>,
}

impl TreeClass {
    /// The reported family; the subdivided star wins when both match.
    pub fn membership(&self) -> Membership {
        if !self.subdivided_star.is_empty() {
            Membership::SubdividedStar
        } else if self.subdivided_double_star.is_some() {
            Membership::SubdividedDoubleStar
        } else {
            Membership::Neither
        }
    }

    pub fn is_member(&self) -> bool {
        self.membership() != Membership::Neither
    }
}

/// Lengths of the branches hanging off `root` (ignoring `skip`), provided
/// each is a path entered at one of its ends.
fn branch_lengths(t: &Graph, root: Vertex, skip: Option<Vertex>) -> Option<Vec<usize>> {
    let mut lengths = Vec::new();
    for &start in t.adjacent(root) {
        if Some(start) == skip {
            continue;
        }
        let (mut prev, mut cur, mut len) = (root, start, 1);
        while t.degree(cur) == 2 {
            let next = t.adjacent(cur).iter().copied().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        if t.degree(cur) != 1 {
            return None;
        }
        lengths.push(len);
    }
    Some(lengths)
}

/// Recognizes `T_{k,j}` and `F_{r,s}` by their branch structure.
pub fn classify_tree(t: &Graph) -> Result<TreeClass> {
    if !t.is_tree()? {
        return Err(Error::NotATree);
    }
    if t.order() < 2 {
        return Err(Error::InvalidFamily(
            "classification needs order >= 2".into(),
        ));
    }
    let n = t.order();

    let mut stars: Vec<(usize, usize)> = t
        .vertices()
        .filter_map(|c| branch_lengths(t, c, None))
        .filter(|legs| legs.iter().all(|&l| l <= 2))
        .map(|legs| (n, legs.iter().filter(|&&l| l == 2).count()))
        .filter(|&(k, j)| k > 2 * j)
        .collect();
    stars.sort_unstable();
    stars.dedup();

    let double = t.vertices().filter(|&m| t.degree(m) == 2).find_map(|m| {
        let (a, b) = (t.adjacent(m)[0], t.adjacent(m)[1]);
        let side = |c: Vertex| {
            branch_lengths(t, c, Some(m))
                .filter(|legs| !legs.is_empty() && legs.iter().all(|&l| l == 2))
                .map(|legs| legs.len())
        };
        let (r, s) = (side(a)?, side(b)?);
        Some((r.min(s), r.max(s)))
    });

    Ok(TreeClass {
        subdivided_star: stars,
        subdivided_double_star: double,
    })
}

/// A tree with independent domination number `a` and independent double
/// Roman domination number `b`, for `1 <= a` and `2a + 1 <= b <= 3a`.
///
/// * `a = 1`: the single edge `K_{1,1}`.
/// * `b = 2a + 1`, `a >= 2`: the corona of the star `K_{1,a-1}`.
/// * `b >= 2a + 2`: the star `K_{1,a}` with every edge subdivided, where
///   the first `b - 2a - 2` branches get one more vertex past their leaf
///   (numbered `2a + 1` onwards).
pub fn realize(a: usize, b: usize) -> Result<Graph> {
    let (lo, hi) = (2 * a + 1, 3 * a);
    if a == 0 || b < lo || b > hi {
        return Err(Error::NotRealizable {
            a: a as i64,
            b: b as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    if a == 1 {
        return generate(&FamilySpec::Star(1));
    }
    if b == lo {
        return generate(&FamilySpec::CoronaOfStar(a - 1));
    }
    let extended = b - (2 * a + 2);
    let base = generate(&FamilySpec::SubdividedStar {
        order: 2 * a + 1,
        subdivided: a,
    })?;
    let edges = base
        .edges()
        .iter()
        .copied()
        .chain((0..extended).map(|i| (2 * i + 2, 2 * a + 1 + i)));
    Graph::new(2 * a + 1 + extended, edges)
}
