//! Command implementations behind the `symloc` binary.
//!
//! Every command renders its whole output to a `String` so the binary and
//! the tests share one code path. JSON keys keep insertion order.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use symloc::analysis::reuse_report;
use symloc::bruhat::{self, bruhat_leq, successors, CoverMode};
use symloc::chainfind::chain_find;
use symloc::labeling::{check_el, check_good, label, EdgeLabel, FeasibilitySpec, LabelScheme};
use symloc::trace_cache::{self, hit_vector, hits_at, lru_oracle, stack_distances, Scope, TraceSpec};
use symloc::{CoveringEdge, Permutation};

/// Largest `m` for the `delta` check.
pub const DELTA_CHECK_CAP: usize = 6;
/// Largest `m` for the `bruhat-equiv` check.
pub const BRUHAT_EQUIV_CAP: usize = 5;
/// Largest `m` for the `oracle` check.
pub const ORACLE_CHECK_CAP: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "symloc", version, about = "Locality of permuted data re-traversals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stack distances, hit vector and miss ratios of one re-traversal.
    Hits(HitsArgs),
    /// Greedy chain of covers from a starting re-traversal.
    Chain(ChainArgs),
    /// Covering graph of S_m in DOT format.
    Graph(GraphArgs),
    /// Exhaustive property checks.
    Verify(VerifyArgs),
    /// Total reuse distance of cyclic vs sawtooth matrix re-traversal.
    Reuse(ReuseArgs),
}

#[derive(Args, Debug)]
pub struct HitsArgs {
    /// Re-traversal in one-line notation, e.g. 3,1,2.
    #[arg(long)]
    pub perm: String,
    /// Cache sizes to report miss ratios for (default: all).
    #[arg(long, value_delimiter = ',')]
    pub c: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ScopeArg::BOnly)]
    pub scope: ScopeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScopeArg {
    /// Only the re-traversal B.
    BOnly,
    /// The whole trace A B.
    FullTrace,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Weak,
    Bruhat,
}

impl From<ModeArg> for CoverMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Weak => CoverMode::Weak,
            ModeArg::Bruhat => CoverMode::Bruhat,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabelingArg {
    Std,
    Feasible,
    Hit,
    Ranked,
}

/// Flags that select and parameterize a labeling.
#[derive(Args, Debug, Clone)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub labeling: Option<LabelingArg>,
    /// Cache size for the hit labeling.
    #[arg(long)]
    pub c: Option<usize>,
    /// Ranking of cache sizes for the ranked labeling (default: identity).
    #[arg(long)]
    pub rank_order: Option<String>,
    /// Constraints file: one "a b" per line, a accessed before b.
    #[arg(long)]
    pub constraints: Option<PathBuf>,
}

impl SchemeArgs {
    fn build(&self, m: usize, default: LabelingArg) -> Result<LabelScheme> {
        let kind = self.labeling.unwrap_or(default);
        let feasibility = match &self.constraints {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading constraints file {}", path.display()))?;
                FeasibilitySpec::parse(m, &text)?
            }
            None => FeasibilitySpec::unconstrained(m),
        };
        if kind == LabelingArg::Std && !feasibility.is_empty() {
            bail!("--constraints needs a feasibility-aware labeling (feasible, hit or ranked)");
        }
        let scheme = match kind {
            LabelingArg::Std => LabelScheme::InverseStandard,
            LabelingArg::Feasible => LabelScheme::Feasible(feasibility),
            LabelingArg::Hit => {
                let Some(c) = self.c else {
                    bail!("--labeling hit requires --c");
                };
                LabelScheme::HitFeasible { c, feasibility }
            }
            LabelingArg::Ranked => {
                let order = match &self.rank_order {
                    Some(text) => text.parse::<Permutation>()?,
                    None => Permutation::identity(m)?,
                };
                LabelScheme::RankedHitFeasible { order, feasibility }
            }
        };
        scheme.validate(m)?;
        Ok(scheme)
    }
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    /// Number of elements (defaults to the length of --start).
    #[arg(long)]
    pub m: Option<usize>,
    /// Starting re-traversal (default: identity).
    #[arg(long)]
    pub start: Option<String>,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
    #[arg(long)]
    pub max_steps: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum AnnotateArg {
    #[default]
    None,
    Hits,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t)]
    pub annotate: AnnotateArg,
    #[command(flatten)]
    pub scheme: SchemeArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Good,
    El,
    Delta,
    BruhatEquiv,
    Oracle,
}

impl CheckArg {
    fn name(self) -> &'static str {
        match self {
            CheckArg::Good => "good",
            CheckArg::El => "el",
            CheckArg::Delta => "delta",
            CheckArg::BruhatEquiv => "bruhat-equiv",
            CheckArg::Oracle => "oracle",
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub check: Vec<CheckArg>,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
    /// Report good-labeling violations of the ranked labeling without failing.
    #[arg(long)]
    pub expect_known_violations: bool,
}

#[derive(Args, Debug)]
pub struct ReuseArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub rows: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub cols: u64,
}

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Hits(a) => cmd_hits(a).map(Outcome::ok),
        Command::Chain(a) => cmd_chain(a).map(Outcome::ok),
        Command::Graph(a) => cmd_graph(a).map(Outcome::ok),
        Command::Verify(a) => cmd_verify(a),
        Command::Reuse(a) => cmd_reuse(a).map(Outcome::ok),
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn perm_json(p: &Permutation) -> Value {
    json!(p.image())
}

pub fn label_json(l: &EdgeLabel) -> Value {
    let y = |f: bool| u8::from(f);
    match l {
        EdgeLabel::Std(t) => json!({"swap": [t.a(), t.b()]}),
        EdgeLabel::Feas { feasible, swap } => {
            json!({"feasible": y(*feasible), "swap": [swap.a(), swap.b()]})
        }
        EdgeLabel::HitFeas { feasible, hits, swap } => {
            json!({"feasible": y(*feasible), "hits": hits, "swap": [swap.a(), swap.b()]})
        }
        EdgeLabel::Ranked { feasible, ranked_hits, swap } => json!({
            "feasible": y(*feasible),
            "ranked_hits": ranked_hits,
            "tiebreak": [swap.a(), swap.b()],
        }),
    }
}

pub fn cmd_hits(a: &HitsArgs) -> Result<String> {
    let sigma: Permutation = a.perm.parse()?;
    let m = sigma.m();
    let spec = TraceSpec::new(sigma.clone());
    let scope = match a.scope {
        ScopeArg::BOnly => Scope::ReTraversal,
        ScopeArg::FullTrace => Scope::FullTrace,
    };
    let sizes: Vec<usize> = if a.c.is_empty() { (1..=m).collect() } else { a.c.clone() };
    let mut ratios = Map::new();
    for c in sizes {
        let r = trace_cache::miss_ratio(&spec, c, scope)?;
        ratios.insert(c.to_string(), json!(*r.numer() as f64 / *r.denom() as f64));
    }
    Ok(render(&json!({
        "m": m,
        "perm": perm_json(&sigma),
        "distances": stack_distances(&spec).0,
        "hits": hit_vector(&spec).0,
        "miss_ratio": ratios,
    })))
}

pub fn cmd_chain(a: &ChainArgs) -> Result<String> {
    let start = match (&a.start, a.m) {
        (Some(text), m) => {
            let p: Permutation = text.parse()?;
            if let Some(m) = m {
                if m != p.m() {
                    bail!("--start has {} elements but --m is {m}", p.m());
                }
            }
            p
        }
        (None, Some(m)) => Permutation::identity(m)?,
        (None, None) => bail!("chain needs --m or --start"),
    };
    let m = start.m();
    let scheme = a.scheme.build(m, LabelingArg::Std)?;
    let chain = chain_find(&start, &scheme, a.mode.into(), a.max_steps)?;
    let steps: Vec<Value> = chain
        .steps
        .iter()
        .skip(1)
        .zip(&chain.labels)
        .map(|(p, l)| {
            json!({
                "perm": perm_json(p),
                "label": label_json(l),
                "hits": hit_vector(&TraceSpec::new(p.clone())).0,
            })
        })
        .collect();
    Ok(render(&json!({
        "start": perm_json(chain.start()),
        "steps": steps,
        "terminated": chain.terminated.as_str(),
    })))
}

fn node_id(p: &Permutation) -> String {
    p.image().iter().map(|v| v.to_string()).collect()
}

pub fn cmd_graph(a: &GraphArgs) -> Result<String> {
    let graph = bruhat::build_graph(a.m, a.mode.into())?;
    let scheme = match a.scheme.labeling {
        Some(_) => Some(a.scheme.build(a.m, LabelingArg::Std)?),
        None => None,
    };
    let mut out = String::new();
    writeln!(out, "digraph covering {{")?;
    for p in graph.nodes() {
        let id = node_id(p);
        match a.annotate {
            AnnotateArg::None => writeln!(out, "  \"{id}\";")?,
            AnnotateArg::Hits => {
                let h = hit_vector(&TraceSpec::new(p.clone()));
                let shown: Vec<String> = h.0.iter().map(|x| x.to_string()).collect();
                writeln!(out, "  \"{id}\" [label=\"{id}\\n({})\"];", shown.join(","))?;
            }
        }
    }
    for e in graph.edges() {
        let mut text = e.swap.to_string();
        if let Some(s) = &scheme {
            write!(text, " {}", label(s, e)?)?;
        }
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{text}\"];",
            node_id(&e.src),
            node_id(&e.dst)
        )?;
    }
    writeln!(out, "}}")?;
    Ok(out)
}

struct CheckResult {
    holds: bool,
    known_violation: bool,
    witnesses: Vec<Value>,
}

fn check_cap(check: CheckArg, m: usize, cap: usize) -> Result<()> {
    if m > cap {
        bail!("check {} supports m <= {cap}, got {m}", check.name());
    }
    Ok(())
}

fn run_check(check: CheckArg, m: usize, scheme: &LabelScheme, mode: CoverMode) -> Result<CheckResult> {
    let plain = |holds: bool, witnesses: Vec<Value>| CheckResult {
        holds,
        known_violation: false,
        witnesses,
    };
    Ok(match check {
        CheckArg::Good => {
            let r = check_good(scheme, m, mode)?;
            CheckResult {
                holds: r.holds,
                known_violation: !r.holds && matches!(scheme, LabelScheme::RankedHitFeasible { .. }),
                witnesses: r
                    .witnesses
                    .iter()
                    .map(|w| {
                        json!({
                            "source": perm_json(&w.source),
                            "first": perm_json(&w.first),
                            "second": perm_json(&w.second),
                            "label": label_json(&w.label),
                        })
                    })
                    .collect(),
            }
        }
        CheckArg::El => {
            let r = check_el(scheme, m, mode)?;
            plain(
                r.holds,
                r.witnesses
                    .iter()
                    .map(|w| {
                        json!({
                            "bottom": perm_json(&w.bottom),
                            "top": perm_json(&w.top),
                            "chains": w.chains,
                            "increasing": w.increasing,
                            "increasing_is_minimal": w.increasing_is_minimal,
                        })
                    })
                    .collect(),
            )
        }
        CheckArg::Delta => {
            check_cap(check, m, DELTA_CHECK_CAP)?;
            let mut witnesses = Vec::new();
            for s in Permutation::all(m)? {
                let before = hit_vector(&TraceSpec::new(s.clone()));
                for CoveringEdge { dst, .. } in successors(&s, mode) {
                    let after = hit_vector(&TraceSpec::new(dst.clone()));
                    for c in 1..=m {
                        if before.at(c).abs_diff(after.at(c)) > 1 {
                            witnesses.push(json!({
                                "src": perm_json(&s),
                                "dst": perm_json(&dst),
                                "c": c,
                                "before": before.at(c),
                                "after": after.at(c),
                            }));
                        }
                    }
                }
            }
            plain(witnesses.is_empty(), witnesses)
        }
        CheckArg::BruhatEquiv => {
            check_cap(check, m, BRUHAT_EQUIV_CAP)?;
            let graph = bruhat::build_graph(m, CoverMode::Bruhat)?;
            let mut witnesses = Vec::new();
            for u in graph.nodes() {
                let reach = graph.reachable_from(u);
                for (j, w) in graph.nodes().iter().enumerate() {
                    let prefix = bruhat_leq(u, w)?;
                    if prefix != reach[j] {
                        witnesses.push(json!({
                            "u": perm_json(u),
                            "w": perm_json(w),
                            "prefix": prefix,
                            "reachable": reach[j],
                        }));
                    }
                }
            }
            plain(witnesses.is_empty(), witnesses)
        }
        CheckArg::Oracle => {
            check_cap(check, m, ORACLE_CHECK_CAP)?;
            let mut witnesses = Vec::new();
            for s in Permutation::all(m)? {
                let spec = TraceSpec::new(s.clone());
                for c in 1..=m {
                    let (h, o) = (hits_at(&spec, c)?, lru_oracle(&spec, c)?);
                    if h != o {
                        witnesses.push(json!({"perm": perm_json(&s), "c": c, "hits": h, "oracle": o}));
                    }
                }
            }
            plain(witnesses.is_empty(), witnesses)
        }
    })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let m = a.m;
    if m == 0 {
        bail!(symloc::Error::InvalidSize(0));
    }
    let scheme = a.scheme.build(m, LabelingArg::Std)?;
    let mode: CoverMode = a.mode.into();
    let mut checks = Vec::new();
    let mut pass = true;
    for &check in &a.check {
        let r = run_check(check, m, &scheme, mode)?;
        let expected = a.expect_known_violations && r.known_violation;
        if !r.holds && !expected {
            pass = false;
        }
        let mut entry = Map::new();
        entry.insert("check".into(), json!(check.name()));
        entry.insert("holds".into(), json!(r.holds));
        if r.known_violation {
            entry.insert("known_violation".into(), json!(true));
        }
        entry.insert("witnesses".into(), Value::Array(r.witnesses));
        checks.push(Value::Object(entry));
    }
    let stdout = render(&json!({
        "m": m,
        "labeling": scheme.name(),
        "mode": match mode { CoverMode::Weak => "weak", CoverMode::Bruhat => "bruhat" },
        "checks": checks,
        "pass": pass,
    }));
    Ok(Outcome {
        stdout,
        code: if pass { 0 } else { 1 },
    })
}

pub fn cmd_reuse(a: &ReuseArgs) -> Result<String> {
    let r = reuse_report(a.rows, a.cols)?;
    Ok(render(&json!({
        "rows": a.rows,
        "cols": a.cols,
        "cyclic": r.cyclic,
        "sawtooth": r.sawtooth,
        "ratio": r.ratio_f64(),
    })))
}
