//! `idrd`: exact independent double Roman domination from the command line.
//!
//! Exit codes: 0 success, 1 fuzz found a bound violation, 2 input error,
//! 3 graph above the exact-solver size limit, 4 domain error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use idrd::bounds::{check_bounds, fuzz, FuzzConfig, GraphClass};
use idrd::families::{classify_tree, formula_idrdn, generate, realize, FamilySpec, Membership};
use idrd::graph::{parse_edge_list, serialize_edge_list};
use idrd::solvers::{compute_invariants, Entry, Invariant, Witness, SIZE_LIMIT_ENV};
use idrd::{Error, Graph};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "idrd",
    version,
    about = "Exact independent double Roman domination toolkit"
)]
#[command(
    after_help = "Environment:\n  IDRD_SIZE_LIMIT  vertex limit for the exponential solvers (default 24, at most 64)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of a graph given as an edge list
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated invariant names (default: all)
        #[arg(long, value_delimiter = ',', value_parser = parse_invariant)]
        invariants: Vec<Invariant>,
        /// Also print an optimal labeling or set for each invariant
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a family's closed form and/or solve a generated member
    Family {
        /// Family spec such as path:7, cycle:8, kpartite:2,2,5, subdivstar:12,4
        spec: String,
        #[arg(long, value_enum, default_value_t = FamilyMode::Both)]
        mode: FamilyMode,
        #[arg(long)]
        json: bool,
    },
    /// Test a tree for membership in the subdivided star / double star families
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build a tree with independent domination number A and IDRD number B
    Realize {
        a: usize,
        b: usize,
        /// Write the edge list here instead of printing it
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every bound on a graph
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check every bound on seeded random graphs; exits 1 on a violation
    Fuzz {
        #[arg(long, value_enum, default_value_t = ClassArg::Connected)]
        class: ClassArg,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lower end of the edge-probability range
        #[arg(long, default_value_t = 0.2)]
        p_min: f64,
        /// Upper end of the edge-probability range
        #[arg(long, default_value_t = 0.8)]
        p_max: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file, or `-` for stdin
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyMode {
    Formula,
    Solve,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    General,
    Connected,
    Tree,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::General => GraphClass::General,
            ClassArg::Connected => GraphClass::Connected,
            ClassArg::Tree => GraphClass::Tree,
        }
    }
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } => 3,
            Error::NotATree
            | Error::NotRealizable { .. }
            | Error::NoClosedForm(_)
            | Error::IsolatedVertex(_)
            | Error::NotMaximalIndependent => 4,
            _ => 2,
        };
        let mut message = e.to_string();
        if code == 3 {
            message.push_str(&format!(" (raise it with {SIZE_LIMIT_ENV}, at most 64)"));
        }
        Failure { code, message }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

type Outcome<T> = Result<T, Failure>;

/// What a subcommand produced: the JSON payload, its table rendering, and
/// the process exit code.
struct Report {
    command: &'static str,
    digest: Option<String>,
    payload: Value,
    table: String,
    code: u8,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: &'static str,
    command: &'a str,
    input_digest: Option<&'a str>,
    payload: &'a Value,
}

fn read_graph(input: &InputArgs) -> Outcome<(Graph, String)> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| input_failure(format!("reading {}: {e}", input.input)))?
    };
    let g = parse_edge_list(&text)?;
    let digest = hex::encode(Sha256::digest(serialize_edge_list(&g).as_bytes()));
    Ok((g, digest))
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Dr(f) => json!(f.values()),
        Witness::R2(f) => json!(f.values()),
        Witness::Rainbow(f) => {
            let sets: Vec<Vec<u8>> = f
                .values()
                .iter()
                .map(|c| {
                    [1u8, 2]
                        .into_iter()
                        .filter(|&k| c.bits() & k != 0)
                        .collect()
                })
                .collect();
            json!(sets)
        }
        Witness::Vertices(s) => json!(s.as_slice()),
        Witness::Edges(e) => json!(e),
    }
}

fn solve(input: &InputArgs, which: &[Invariant], witness: bool) -> Outcome<Report> {
    let (g, digest) = read_graph(input)?;
    let which = if which.is_empty() {
        Invariant::ALL.to_vec()
    } else {
        which.to_vec()
    };
    let table = compute_invariants(&g, &which)?;

    let mut values = serde_json::Map::new();
    let mut text = String::new();
    for (inv, entry) in &table.entries {
        match entry {
            Entry::Value(v) => {
                values.insert(inv.name().into(), json!(v));
                text.push_str(&format!("{:<16}{v}\n", inv.name()));
            }
            Entry::NotApplicable(why) => {
                values.insert(inv.name().into(), json!({ "not_applicable": why }));
                text.push_str(&format!("{:<16}n/a ({why})\n", inv.name()));
            }
        }
    }
    let mut payload = json!({ "order": g.order(), "invariants": values });
    if witness {
        let mut ws = serde_json::Map::new();
        for (inv, w) in &table.witnesses {
            ws.insert(inv.name().into(), witness_json(w));
            text.push_str(&format!("\n# witness {}\n{}", inv.name(), w.to_text()));
        }
        payload["witnesses"] = Value::Object(ws);
    }
    Ok(Report {
        command: "solve",
        digest: Some(digest),
        payload,
        table: text,
        code: 0,
    })
}

fn family(spec_text: &str, mode: FamilyMode) -> Outcome<Report> {
    let spec: FamilySpec = spec_text.parse()?;
    spec.validate()?;
    let formula = match mode {
        FamilyMode::Formula => Some(formula_idrdn(&spec)?),
        FamilyMode::Both => match formula_idrdn(&spec) {
            Ok(v) => Some(v),
            Err(Error::NoClosedForm(_)) => None,
            Err(e) => return Err(e.into()),
        },
        FamilyMode::Solve => None,
    };
    let solver = match mode {
        FamilyMode::Formula => None,
        _ => {
            let g = generate(&spec)?;
            compute_invariants(&g, &[Invariant::Idrdn])?.get(Invariant::Idrdn)
        }
    };
    let agree = match (mode, formula, solver) {
        (FamilyMode::Both, Some(f), Some(s)) => Some(f == s),
        _ => None,
    };
    let mut text = format!("family   {spec}\n");
    if let Some(f) = formula {
        text.push_str(&format!("formula  {f}\n"));
    } else if !matches!(mode, FamilyMode::Solve) {
        text.push_str("formula  none (no closed form)\n");
    }
    if let Some(s) = solver {
        text.push_str(&format!("solver   {s}\n"));
    }
    if let Some(a) = agree {
        text.push_str(&format!("agree    {a}\n"));
    }
    Ok(Report {
        command: "family",
        digest: None,
        payload: json!({
            "family": spec.to_string(),
            "formula": formula,
            "solver": solver,
            "agree": agree,
        }),
        table: text,
        code: 0,
    })
}

fn classify(input: &InputArgs) -> Outcome<Report> {
    let (t, digest) = read_graph(input)?;
    let class = classify_tree(&t)?;
    let inv = compute_invariants(&t, &[Invariant::Idn, Invariant::Ir2dn])?;
    let idn = inv.get(Invariant::Idn).expect("computed");
    let ir2dn = inv.get(Invariant::Ir2dn).expect("computed");
    let membership = match class.membership() {
        Membership::SubdividedStar => "T_family",
        Membership::SubdividedDoubleStar => "F_family",
        Membership::Neither => "neither",
    };
    let mut text = format!("membership  {membership}\n");
    for (k, j) in &class.subdivided_star {
        text.push_str(&format!("T_{{k,j}}     k={k} j={j}\n"));
    }
    if let Some((r, s)) = class.subdivided_double_star {
        text.push_str(&format!("F_{{r,s}}     r={r} s={s}\n"));
    }
    text.push_str(&format!("ir2dn - idn {}\n", ir2dn - idn));
    Ok(Report {
        command: "classify",
        digest: Some(digest),
        payload: json!({
            "membership": membership,
            "subdivided_star": class.subdivided_star,
            "subdivided_double_star": class.subdivided_double_star,
            "idn": idn,
            "ir2dn": ir2dn,
            "ir2dn_minus_idn": ir2dn - idn,
        }),
        table: text,
        code: 0,
    })
}

fn realize_cmd(a: usize, b: usize, out: Option<&PathBuf>) -> Outcome<Report> {
    let t = realize(a, b)?;
    let inv = compute_invariants(&t, &[Invariant::Idn, Invariant::Idrdn])?;
    let (idn, idrdn) = (inv.get(Invariant::Idn), inv.get(Invariant::Idrdn));
    let edge_list = serialize_edge_list(&t);
    let verified = idn == Some(a as u64) && idrdn == Some(b as u64);
    if let Some(path) = out {
        std::fs::write(path, &edge_list)
            .map_err(|e| input_failure(format!("writing {}: {e}", path.display())))?;
    }
    let mut text = String::new();
    if out.is_none() {
        text.push_str(&edge_list);
    }
    text.push_str(&format!(
        "# order {}, idn {}, idrdn {}, verified {verified}\n",
        t.order(),
        idn.unwrap_or_default(),
        idrdn.unwrap_or_default()
    ));
    Ok(Report {
        command: "realize",
        digest: None,
        payload: json!({
            "a": a,
            "b": b,
            "order": t.order(),
            "edge_list": edge_list,
            "verification": { "idn": idn, "idrdn": idrdn },
            "verified": verified,
        }),
        table: text,
        code: if verified { 0 } else { 4 },
    })
}

fn bounds(input: &InputArgs) -> Outcome<Report> {
    let (g, digest) = read_graph(input)?;
    let checks = check_bounds(&g)?;
    let text = checks.iter().map(|c| format!("{c}\n")).collect();
    Ok(Report {
        command: "bounds",
        digest: Some(digest),
        payload: json!({ "checks": checks }),
        table: text,
        code: 0,
    })
}

fn fuzz_cmd(cfg: FuzzConfig) -> Outcome<Report> {
    let report = fuzz(&cfg)?;
    let mut text = format!(
        "class {}  seed {}  trials {}  violations {}\n",
        report.class,
        report.seed,
        report.trials,
        report.violations.len()
    );
    for (name, count) in &report.tight_counts {
        text.push_str(&format!("tight {name:<10} {count}\n"));
    }
    for v in &report.violations {
        text.push_str(&format!("\nviolates {}:\n{}", v.bound, v.edge_list));
    }
    Ok(Report {
        command: "fuzz",
        digest: None,
        payload: serde_json::to_value(&report).expect("report serializes"),
        table: text,
        code: if report.passed() { 0 } else { 1 },
    })
}

fn run(cli: &Cli) -> Outcome<(Report, bool)> {
    Ok(match &cli.command {
        Command::Solve {
            input,
            invariants,
            witness,
            json,
        } => (solve(input, invariants, *witness)?, *json),
        Command::Family { spec, mode, json } => (family(spec, *mode)?, *json),
        Command::Classify { input, json } => (classify(input)?, *json),
        Command::Realize { a, b, out, json } => (realize_cmd(*a, *b, out.as_ref())?, *json),
        Command::Bounds { input, json } => (bounds(input)?, *json),
        Command::Fuzz {
            class,
            max_n,
            trials,
            seed,
            p_min,
            p_max,
            json,
        } => {
            let cfg = FuzzConfig {
                class: (*class).into(),
                max_n: *max_n,
                trials: *trials,
                p_range: (*p_min, *p_max),
                seed: *seed,
            };
            (fuzz_cmd(cfg)?, *json)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, as_json)) => {
            let text = if as_json {
                let envelope = Envelope {
                    schema_version: SCHEMA_VERSION,
                    command: report.command,
                    input_digest: report.digest.as_deref(),
                    payload: &report.payload,
                };
                serde_json::to_string_pretty(&envelope).expect("envelope serializes") + "\n"
            } else {
                report.table
            };
            // a closed pipe is not worth a panic
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
