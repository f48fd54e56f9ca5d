//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! A criterion whose literal statement is refuted by exhaustive search is
//! reported as UNATTAINABLE together with the counterexamples; the parts of
//! it that do hold are still checked and fail the run if they break.

mod common;

use idrd::bounds::{
    check_bounds, fuzz, fuzz_instance, tightness_witnesses, FuzzConfig, GraphClass,
};
use idrd::families::{classify_tree, formula_idrdn, generate, realize, FamilySpec};
use idrd::graph::{random_graph, random_tree};
use idrd::labelings::{is_idrdf, DrLabeling};
use idrd::solvers::{idn, idrdn, ir2dn, max_matching, min_edge_cover, tree_idn, tree_idrdn};
use idrd::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Unattainable,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    let status = if ok { Status::Pass } else { Status::Fail };
    Outcome {
        status,
        detail: detail.into(),
    }
}

fn path_cycle_formulas() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let specs = (1..=15)
        .map(FamilySpec::Path)
        .chain((3..=15).map(FamilySpec::Cycle));
    let mut count = 0;
    for spec in specs {
        count += 1;
        let got = idrdn(&generate(&spec).unwrap()).unwrap().value;
        let want = formula_idrdn(&spec).unwrap();
        if got != want {
            mismatches.push(format!("{spec}: solver {got}, formula {want}"));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(10),
        format!(
            "{count} graphs, {} mismatches, {elapsed:.2?} (limit 10 s) {mismatches:?}",
            mismatches.len()
        ),
    )
}

fn multipartite_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut mismatches = Vec::new();
    for _ in 0..50 {
        let parts = loop {
            let r = rng.gen_range(2..=4);
            let mut parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=6)).collect();
            if parts.iter().sum::<usize>() <= 12 {
                parts.sort_unstable();
                break parts;
            }
        };
        let spec = FamilySpec::CompleteMultipartite(parts);
        let got = idrdn(&generate(&spec).unwrap()).unwrap().value;
        let want = if spec.params()[0] == 1 {
            3
        } else {
            2 * spec.params()[0] as u64
        };
        if got != want {
            mismatches.push(format!("{spec}: solver {got}, formula {want}"));
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("50 vectors, {} mismatches {mismatches:?}", mismatches.len()),
    )
}

/// Minimum weight over all `{0,1,2,3}^n` labelings accepted by `is_idrdf`,
/// and the minimum over those avoiding the value 1.
fn brute_idrdn(g: &Graph) -> (u64, u64) {
    let (mut all, mut no_ones) = (u64::MAX, u64::MAX);
    common::for_each_vector(g.order(), 4, |f| {
        let w: u64 = f.iter().map(|&x| u64::from(x)).sum();
        if w >= all && (f.contains(&1) || w >= no_ones) {
            return;
        }
        if is_idrdf(g, &DrLabeling::new(f.to_vec()).unwrap()) {
            all = all.min(w);
            if !f.contains(&1) {
                no_ones = no_ones.min(w);
            }
        }
    });
    (all, no_ones)
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut mismatches, mut beaten) = (0, 0);
    for i in 0..200u64 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen::<f64>();
        let g = random_graph(n, p, 3_000 + i).unwrap();
        let (all, no_ones) = brute_idrdn(&g);
        if idrdn(&g).unwrap().value != all || common::idrdn(&g) != all {
            mismatches += 1;
        }
        if all < no_ones {
            beaten += 1;
        }
    }
    outcome(
        mismatches == 0 && beaten == 0,
        format!("200 graphs, {mismatches} mismatches, {beaten} where value 1 helps"),
    )
}

fn tree_dp_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut mismatches = 0;
    let mut slowest = Duration::ZERO;
    for i in 0..300u64 {
        let t = random_tree(rng.gen_range(1..=16), 4_000 + i).unwrap();
        // best of five, to keep scheduler noise out of a per-tree bound
        let mut best = Duration::MAX;
        let (mut dr, mut i_) = (0, 0);
        for _ in 0..5 {
            let start = Instant::now();
            (dr, i_) = (tree_idrdn(&t).unwrap(), tree_idn(&t).unwrap());
            best = best.min(start.elapsed());
        }
        slowest = slowest.max(best);
        if dr != idrdn(&t).unwrap().value || i_ != idn(&t).unwrap().value {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0 && slowest < Duration::from_millis(1),
        format!("300 trees, {mismatches} mismatches, slowest DP {slowest:.2?} (limit 1 ms)"),
    )
}

fn fuzz_configs() -> [FuzzConfig; 2] {
    [
        FuzzConfig {
            class: GraphClass::Connected,
            max_n: 10,
            trials: 500,
            p_range: (0.2, 0.8),
            seed: 5,
        },
        FuzzConfig {
            class: GraphClass::Tree,
            max_n: 12,
            trials: 300,
            p_range: (0.0, 1.0),
            seed: 6,
        },
    ]
}

fn bound_fuzz() -> Outcome {
    let mut violations = Vec::new();
    for cfg in fuzz_configs() {
        let report = fuzz(&cfg).unwrap();
        violations.extend(report.violations);
    }
    let mut not_tight = Vec::new();
    let witnesses = tightness_witnesses();
    for w in &witnesses {
        let checks = check_bounds(&w.graph).unwrap();
        let exhibited = checks.iter().any(|c| c.name == w.bound && c.is_tight());
        if !exhibited || !checks.iter().all(|c| c.holds()) {
            not_tight.push(format!("{} on {}", w.bound, w.family));
        }
    }
    outcome(
        violations.is_empty() && not_tight.is_empty(),
        format!(
            "800 instances, {} violations {violations:?}; {}/{} tightness witnesses exhibited {not_tight:?}",
            violations.len(),
            witnesses.len() - not_tight.len(),
            witnesses.len()
        ),
    )
}

/// The "only if" half fails from order 6 on: double stars `S_{r,s}` with
/// `r, s >= 2` (and some trees obtained from them by subdividing edges at one
/// centre) have `i_R2 = i + 1` yet lie outside both families. Everything
/// else is checked strictly: `i_R2 >= i + 1` on every tree and gap exactly 1
/// on every member.
fn characterization() -> Outcome {
    let start = Instant::now();
    let mut trees = 0u64;
    let mut broken = Vec::new();
    let mut only_if = Vec::new();
    for n in 2..=7 {
        common::all_trees(n, |t| {
            trees += 1;
            let (r2, i) = (ir2dn(&t).unwrap().value, idn(&t).unwrap().value);
            let member = classify_tree(&t).unwrap().is_member();
            if r2 < i + 1 || (member && r2 != i + 1) {
                broken.push(idrd::graph::serialize_edge_list(&t));
            } else if r2 == i + 1 && !member {
                only_if.push(t);
            }
        });
    }
    let elapsed = start.elapsed();
    let s22 = generate(&FamilySpec::DoubleStar(2, 2)).unwrap();
    let s22_gap = ir2dn(&s22).unwrap().value - idn(&s22).unwrap().value;
    let s22_member = classify_tree(&s22).unwrap().is_member();
    let sound = trees == 1 + 3 + 16 + 125 + 1296 + 16807
        && broken.is_empty()
        && elapsed < Duration::from_secs(300);
    let detail = format!(
        "{trees} labeled trees, {elapsed:.2?} (limit 5 min); gap >= 1 everywhere and gap = 1 on \
         every member: {} failures; gap = 1 outside the families: {} trees \
         (e.g. double star S_2,2: gap {s22_gap}, member {s22_member})",
        broken.len(),
        only_if.len()
    );
    let status = match (sound, only_if.is_empty()) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::Unattainable,
    };
    Outcome { status, detail }
}

fn realizability() -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for a in 1..=5usize {
        for b in 2 * a + 1..=3 * a {
            pairs += 1;
            let ok = realize(a, b).is_ok_and(|t| {
                idn(&t).unwrap().value == a as u64 && idrdn(&t).unwrap().value == b as u64
            });
            if !ok {
                failures.push((a, b));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rejected = 0;
    while rejected < 20 {
        let a = rng.gen_range(0..=8usize);
        let b = rng.gen_range(0..=30usize);
        if a >= 1 && (2 * a + 1..=3 * a).contains(&b) {
            continue;
        }
        if realize(a, b).is_ok() {
            failures.push((a, b));
        }
        rejected += 1;
    }
    outcome(
        failures.is_empty(),
        format!(
            "{pairs} admissible and 20 inadmissible pairs, {} failures {failures:?}",
            failures.len()
        ),
    )
}

fn gallai() -> Outcome {
    let mut configs = fuzz_configs().to_vec();
    configs.push(FuzzConfig {
        class: GraphClass::General,
        max_n: 10,
        trials: 300,
        p_range: (0.0, 1.0),
        seed: 8,
    });
    let (mut checked, mut violations) = (0, 0);
    for cfg in &configs {
        for t in 0..cfg.trials {
            let g = fuzz_instance(cfg, t).unwrap();
            if g.isolated_vertex().is_some() {
                continue;
            }
            checked += 1;
            let sum = max_matching(&g).value + min_edge_cover(&g).unwrap().value;
            if sum != g.order() as u64 {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{checked} instances without isolated vertices, {violations} violations"),
    )
}

fn delta_characterization() -> Outcome {
    let cfg = FuzzConfig {
        class: GraphClass::Connected,
        max_n: 8,
        trials: usize::MAX,
        p_range: (0.1, 0.9),
        seed: 9,
    };
    let (mut samples, mut trial, mut full, mut counterexamples) = (0, 0, 0, 0);
    while samples < 200 {
        let g = fuzz_instance(&cfg, trial).unwrap();
        trial += 1;
        if g.order() < 2 {
            continue;
        }
        samples += 1;
        let spanning = g.max_degree().unwrap() == g.order() - 1;
        full += usize::from(spanning);
        if (idrdn(&g).unwrap().value == 3) != spanning {
            counterexamples += 1;
        }
    }
    outcome(
        counterexamples == 0,
        format!("200 connected graphs (order 2..8, {full} with a dominating vertex), {counterexamples} counterexamples"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("path and cycle closed forms", path_cycle_formulas),
        ("complete multipartite closed form", multipartite_formula),
        ("MIS reduction vs brute force", oracle_equivalence),
        ("tree DP vs exact solvers", tree_dp_equivalence),
        ("bound fuzz and tightness witnesses", bound_fuzz),
        ("tree characterization", characterization),
        ("realizability", realizability),
        ("Gallai identity", gallai),
        ("dominating vertex characterization", delta_characterization),
    ];
    let mut tally = [0usize; 3];
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let label = match o.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unattainable => "UNATTAINABLE",
        };
        println!("{label} {}. {name}: {}", i + 1, o.detail);
        tally[o.status as usize] += 1;
    }
    let [passed, failed, unattainable] = tally;
    println!("acceptance: {passed} passed, {failed} failed, {unattainable} unattainable as stated");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
