//! The `sfactor` command line.
//!
//! Exit codes: 0 success, 1 unstable verdict under `--fail-on-unstable` (or
//! a failed self-check in `verify-lemmas` / `cross-validate`), 2 usage
//! error, 3 cap or budget exceeded, 4 invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sfactor_core::cayley::{boundary_set, cayley_graph, complement_set, delta_graph, CayleyError};
use sfactor_core::clique::{EngineError, DEFAULT_CAP};
use sfactor_core::constructions::{
    case_analysis_with_retry, delta_bridge, greedy_construct_a, verify_exponent2_quotient, verify_order32_lemma,
    witness_cube, witness_infinite_cyclic, witness_involution, witness_noncube, CaseTag, ConstructionError,
    QuotientOutcome, WitnessF,
};
use sfactor_core::group::{cyclic_subgroup, finite_catalog, generated_subgroup, involutions, squares_set, BuiltGroup};
use sfactor_core::stability::{
    cross_validate_correspondence, examine_subset, normalize_subset, scan_group_stability, with_identity,
    Combinations, SIndexReport, ScanOptions, StabilityError, Verdict, CROSS_VALIDATE_MAX,
};
use sfactor_core::{EnumerableGroup, FiniteGroup, Graph, Group, Mode, Order, SetKind, SymSet};

use crate::export::{graph_json, to_dot};
use crate::parallel;
use crate::report::{case_json, extremal_json, greedy_json, set_labels, sindex_json, stability_json, witness_json};
use crate::source::{enumerable_elements, finite_elements, GroupSource, LoadedGroup, SourceError};

#[derive(Parser, Debug)]
#[command(name = "sfactor", version, about = "s-factor stability of group subsets via Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the relevant graph in DOT format to this path.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Maximum number of maximal sets enumerated per graph.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Maximum number of subsets examined by scans.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Greedy construction steps.
    #[arg(long, global = true, default_value_t = 10)]
    steps: usize,
    /// Enumeration prefix for infinite groups.
    #[arg(long, global = true)]
    prefix: Option<usize>,
    #[arg(long, global = true)]
    fail_on_unstable: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Single-threaded, with timings reported as 0, for byte-identical output.
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, elements and element orders of a group.
    GroupInfo {
        #[arg(long)]
        group: String,
    },
    /// Lower and upper s-indices of a subset.
    Sindex {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subset: String,
    },
    /// Whether a subset is stable, with two s-factors of different sizes if not.
    StableSubset {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subset: String,
    },
    /// Whether every subset of a finite group is stable.
    StableGroup {
        #[arg(long)]
        group: String,
        /// Seed for the random scan used above order 24.
        #[arg(long, default_value_t = ScanOptions::default().seed)]
        seed: u64,
    },
    /// Stability of every catalog group up to an order.
    Scan {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// The graph Δ(F) and its clique numbers, for F given directly or as G \ A⁻¹A.
    Delta {
        #[arg(long)]
        group: String,
        /// Connection set F (symmetric, without the identity).
        #[arg(long, conflicts_with = "subset", required_unless_present = "subset")]
        set: Option<String>,
        /// Subset A; uses F = G \ A⁻¹A (finite groups only).
        #[arg(long)]
        subset: Option<String>,
    },
    /// A connection set F with ι(Δ(F)) < ω(Δ(F)).
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = ["involution", "noncube", "cube", "infinite-cyclic", "auto"])]
        case: String,
        /// Generators of the finite subgroup H.
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        f: Option<String>,
        /// Element of infinite order (default: first one enumerated).
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 7)]
        m: u32,
    },
    /// Greedy construction of A with A⁻¹A avoiding F.
    Construct {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
    },
    /// Built-in checks on concrete finite groups.
    VerifyLemmas {
        /// Largest catalog order for the Δ(F) / Cay(G, ∂A) comparison.
        #[arg(long, default_value_t = 8)]
        bridge_max_order: usize,
    },
    /// Compare definition-level s-factors with maximal independent sets.
    CrossValidate {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Limit(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Limit(_) => 3,
            Failure::Input(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Limit(m) | Failure::Input(m) => m,
        }
    }
}

impl From<SourceError> for Failure {
    fn from(e: SourceError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<CayleyError> for Failure {
    fn from(e: CayleyError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::CapExceeded { .. } => Failure::Limit(e.to_string()),
            EngineError::TooLarge { .. } => Failure::Input(e.to_string()),
        }
    }
}

impl From<StabilityError> for Failure {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Engine(e) => e.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Engine(e) => e.into(),
            ConstructionError::SearchExhausted { .. } | ConstructionError::StepsExhausted { .. } => {
                Failure::Limit(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// A command's result: the JSON document, its text rendering and the exit
/// code when it succeeded.
struct Outcome {
    doc: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(doc: Value, text: String) -> Self {
        Outcome { doc, text, code: 0 }
    }
}

struct Ctx {
    cap: usize,
    budget: Option<u64>,
    steps: usize,
    prefix: Option<usize>,
    fail_on_unstable: bool,
    deterministic: bool,
    dot: Option<PathBuf>,
}

impl Ctx {
    fn write_dot(&self, g: &Graph, name: &str) -> Result<(), Failure> {
        if let Some(path) = &self.dot {
            std::fs::write(path, to_dot(g, name))
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(())
    }

    fn elapsed(&self, start: Instant) -> u64 {
        if self.deterministic {
            0
        } else {
            start.elapsed().as_millis() as u64
        }
    }

    fn unstable_code(&self, unstable: bool) -> i32 {
        if unstable && self.fail_on_unstable {
            1
        } else {
            0
        }
    }
}

/// Runs the CLI on `args` (program name first), writing the document to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let threads = if cli.deterministic { Some(1) } else { cli.threads };
    if threads == Some(0) {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return 2;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 2;
        }
    };
    let ctx = Ctx {
        cap: cli.cap,
        budget: cli.budget,
        steps: cli.steps,
        prefix: cli.prefix,
        fail_on_unstable: cli.fail_on_unstable,
        deterministic: cli.deterministic,
        dot: cli.dot.clone(),
    };
    if ctx.cap == 0 {
        let _ = writeln!(err, "error: --cap must be at least 1");
        return 2;
    }
    match pool.install(|| dispatch(&cli.command, &ctx)) {
        Ok(o) => {
            let printed = match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.doc).expect("documents serialize")),
                Format::Text => write!(out, "{}", o.text),
            };
            if printed.is_err() {
                return 2;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Outcome, Failure> {
    match cmd {
        Command::GroupInfo { group } => group_info(&load(group)?, ctx),
        Command::Sindex { group, subset } => sindex(&load(group)?, subset, ctx),
        Command::StableSubset { group, subset } => stable_subset(&load(group)?, subset, ctx),
        Command::StableGroup { group, seed } => stable_group(&load(group)?, *seed, ctx),
        Command::Scan { max_order } => scan(*max_order, ctx),
        Command::Delta { group, set, subset } => delta(&load(group)?, set.as_deref(), subset.as_deref(), ctx),
        Command::Witness { family, case, h, f, s, n, m } => {
            let args = WitnessArgs { case, h: h.as_deref(), f: f.as_deref(), s: s.as_deref(), n: *n, m: *m };
            witness(&load(family)?, &args, ctx)
        }
        Command::Construct { group, set } => construct(&load(group)?, set, ctx),
        Command::VerifyLemmas { bridge_max_order } => verify_lemmas(*bridge_max_order, ctx),
        Command::CrossValidate { group, subset, seed } => cross_validate(&load(group)?, subset.as_deref(), *seed, ctx),
    }
}

fn load(arg: &str) -> Result<LoadedGroup, Failure> {
    Ok(arg.parse::<GroupSource>()?.load()?)
}

fn require_finite<'a>(g: &'a LoadedGroup, what: &str) -> Result<&'a FiniteGroup, Failure> {
    g.finite()
        .ok_or_else(|| Failure::Input(format!("{what} needs a finite group, `{}` is infinite", g.label)))
}

fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.name(x).to_string()).collect()
}

fn braces(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

/// Elements of either kind of group parsed from a comma-separated list.
trait CliGroup: Group {
    fn parse_list(&self, list: &str) -> Result<Vec<Self::Elem>, Failure>;

    fn parse_one(&self, token: &str) -> Result<Self::Elem, Failure> {
        let mut v = self.parse_list(token)?;
        if v.len() != 1 {
            return Err(Failure::Input(format!("expected one element, got `{token}`")));
        }
        Ok(v.remove(0))
    }
}

impl CliGroup for FiniteGroup {
    fn parse_list(&self, list: &str) -> Result<Vec<usize>, Failure> {
        Ok(finite_elements(self, list)?)
    }
}

impl CliGroup for EnumerableGroup {
    fn parse_list(&self, list: &str) -> Result<Vec<Self::Elem>, Failure> {
        Ok(enumerable_elements(*self, list)?)
    }
}

fn group_info(lg: &LoadedGroup, ctx: &Ctx) -> Result<Outcome, Failure> {
    fn listing<G: Group>(g: &G, limit: usize) -> (Vec<Value>, Vec<String>) {
        g.elements()
            .take(limit)
            .enumerate()
            .map(|(i, x)| {
                let order = g.order_of(&x);
                let order_json = match order {
                    Order::Finite(k) => json!(k),
                    Order::Infinite => json!("infinite"),
                };
                let label = g.label(&x);
                (json!({"index": i, "name": label, "order": order_json}), format!("  {i}: {label} (order {order})"))
            })
            .unzip()
    }
    let (doc, text) = match &lg.group {
        BuiltGroup::Finite(g) => {
            let (elems, lines) = listing(g, usize::MAX);
            let inv = involutions(g).len();
            let sq = squares_set(g).len();
            let doc = json!({
                "group": lg.label,
                "finite": true,
                "order": g.order(),
                "elements": elems,
                "involutions": inv,
                "squares": sq,
            });
            let text = format!(
                "group: {}\norder: {}\ninvolutions: {inv}\nsquares: {sq}\nelements:\n{}\n",
                lg.label,
                g.order(),
                lines.join("\n")
            );
            (doc, text)
        }
        BuiltGroup::Enumerable(g) => {
            let (elems, lines) = listing(g, ctx.prefix.unwrap_or(16));
            let doc = json!({
                "group": lg.label,
                "finite": false,
                "order": null,
                "elements": elems,
                "involutions": null,
                "squares": null,
            });
            let text = format!("group: {}\norder: infinite\nfirst elements:\n{}\n", lg.label, lines.join("\n"));
            (doc, text)
        }
    };
    Ok(Outcome::ok(doc, text))
}

fn sindex(lg: &LoadedGroup, subset: &str, ctx: &Ctx) -> Result<Outcome, Failure> {
    let g = require_finite(lg, "sindex")?;
    let a = g.parse_list(subset)?;
    let gamma = cayley_graph(g, &boundary_set(g, &a)?);
    ctx.write_dot(&gamma, "cayley")?;
    let r = parallel::extremal_numbers(&gamma, SetKind::Independent, Mode::Exhaustive, ctx.cap)?;
    let rep = SIndexReport {
        lower: r.min_maximal_size,
        upper: r.max_size,
        stable: r.all_same_size(),
        witness_min: r.witness_min,
        witness_max: r.witness_max,
        count: r.count,
    };
    let doc = sindex_json(&lg.label, g, &a, &rep);
    let text = format!(
        "group: {}\nsubset: {}\nlower s-index: {}\nupper s-index: {}\nstable: {}\nsmallest s-factor: {}\nlargest s-factor: {}\ns-factors: {}\n",
        lg.label,
        braces(&names(g, &a)),
        rep.lower,
        rep.upper,
        rep.stable,
        braces(&names(g, &rep.witness_min)),
        braces(&names(g, &rep.witness_max)),
        rep.count
    );
    Ok(Outcome { doc, text, code: ctx.unstable_code(!rep.stable) })
}

fn stable_subset(lg: &LoadedGroup, subset: &str, ctx: &Ctx) -> Result<Outcome, Failure> {
    let g = require_finite(lg, "stable-subset")?;
    let a = g.parse_list(subset)?;
    let normalized = normalize_subset(g, &a)?;
    let gamma = cayley_graph(g, &boundary_set(g, &normalized)?);
    ctx.write_dot(&gamma, "cayley")?;
    let found = examine_subset(g, &normalized, ctx.cap)?;
    let w = found.as_ref();
    let doc = json!({
        "group": lg.label,
        "subset": names(g, &a),
        "normalized": names(g, &normalized),
        "stable": found.is_none(),
        "lower": w.map(|w| w.lower),
        "upper": w.map(|w| w.upper),
        "small_sfactor": w.map(|w| names(g, &w.small)),
        "large_sfactor": w.map(|w| names(g, &w.large)),
    });
    let mut text = format!(
        "group: {}\nsubset: {}\nnormalized: {}\nstable: {}\n",
        lg.label,
        braces(&names(g, &a)),
        braces(&names(g, &normalized)),
        found.is_none()
    );
    if let Some(w) = w {
        text.push_str(&format!(
            "s-indices: {} < {}\nsmall s-factor: {}\nlarge s-factor: {}\n",
            w.lower,
            w.upper,
            braces(&names(g, &w.small)),
            braces(&names(g, &w.large))
        ));
    }
    Ok(Outcome { doc, text, code: ctx.unstable_code(found.is_some()) })
}

fn scan_one(label: &str, g: &FiniteGroup, seed: u64, ctx: &Ctx) -> Result<(Value, String, Verdict), Failure> {
    let opts = ScanOptions { budget: ctx.budget, cap: ctx.cap, seed };
    let start = Instant::now();
    let r = if ctx.deterministic { scan_group_stability(g, &opts)? } else { parallel::scan_group(g, &opts)? };
    let doc = stability_json(label, g, &r, ctx.elapsed(start));
    let mut text = format!("{label}: {} ({} subsets", r.verdict.as_str(), r.subsets_scanned);
    if let Some(w) = &r.witness {
        text.push_str(&format!(
            ", A = {} has s-factors of sizes {} and {}",
            braces(&names(g, &w.subset)),
            w.lower,
            w.upper
        ));
    }
    text.push_str(")\n");
    Ok((doc, text, r.verdict))
}

fn verdict_code(v: Verdict, ctx: &Ctx) -> i32 {
    match v {
        Verdict::Unknown => 3,
        Verdict::Unstable => ctx.unstable_code(true),
        Verdict::Stable => 0,
    }
}

fn stable_group(lg: &LoadedGroup, seed: u64, ctx: &Ctx) -> Result<Outcome, Failure> {
    let g = require_finite(lg, "stable-group")?;
    let (doc, text, verdict) = scan_one(&lg.label, g, seed, ctx)?;
    Ok(Outcome { doc, text, code: verdict_code(verdict, ctx) })
}

fn scan(max_order: usize, ctx: &Ctx) -> Result<Outcome, Failure> {
    let mut docs = Vec::new();
    let mut text = String::new();
    let mut code = 0;
    for d in finite_catalog(max_order) {
        let g = d.build_finite().map_err(|e| Failure::Input(e.to_string()))?;
        let (doc, line, verdict) = scan_one(&d.to_string(), &g, ScanOptions::default().seed, ctx)?;
        docs.push(doc);
        text.push_str(&line);
        code = code.max(verdict_code(verdict, ctx));
    }
    Ok(Outcome { doc: json!({ "max_order": max_order, "groups": docs }), text, code })
}

fn delta_doc<G: Group>(label: &str, g: &G, f: &SymSet<G::Elem>, ctx: &Ctx) -> Result<Outcome, Failure> {
    let graph = delta_graph(g, f);
    ctx.write_dot(&graph, "delta")?;
    let r = parallel::extremal_numbers(&graph, SetKind::Clique, Mode::Exhaustive, ctx.cap)?;
    let labels = set_labels(g, f);
    let doc = json!({
        "group": label,
        "F": labels,
        "graph": graph_json(&graph),
        "report": extremal_json(&r),
    });
    let pick = |xs: &[usize]| braces(&xs.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>());
    let text = format!(
        "group: {label}\nF: {}\nedges: {}\nomega: {}\niota: {}\nlargest clique: {}\nsmallest maximal clique: {}\n",
        braces(&labels),
        graph.edge_count(),
        r.max_size,
        r.min_maximal_size,
        pick(&r.witness_max),
        pick(&r.witness_min)
    );
    Ok(Outcome::ok(doc, text))
}

fn delta(lg: &LoadedGroup, set: Option<&str>, subset: Option<&str>, ctx: &Ctx) -> Result<Outcome, Failure> {
    match (&lg.group, set, subset) {
        (BuiltGroup::Finite(g), None, Some(a)) => {
            let f = complement_set(g, &g.parse_list(a)?)?;
            delta_doc(&lg.label, g, &f, ctx)
        }
        (BuiltGroup::Finite(g), Some(s), _) => delta_doc(&lg.label, g, &SymSet::new(g, g.parse_list(s)?)?, ctx),
        (BuiltGroup::Enumerable(g), Some(s), _) => delta_doc(&lg.label, g, &SymSet::new(g, g.parse_list(s)?)?, ctx),
        (BuiltGroup::Enumerable(_), None, _) => Err(Failure::Input("--subset needs a finite group; give --set".into())),
        (_, None, None) => Err(Failure::Usage("give --set or --subset".into())),
    }
}

struct WitnessArgs<'a> {
    case: &'a str,
    h: Option<&'a str>,
    f: Option<&'a str>,
    s: Option<&'a str>,
    n: u32,
    m: u32,
}

fn subgroup_from<G: CliGroup>(g: &G, gens: &str) -> Result<Vec<G::Elem>, Failure> {
    let gens = g.parse_list(gens)?;
    if let [x] = gens.as_slice() {
        if g.order_of(x).is_finite() {
            return cyclic_subgroup(g, x).map_err(|e| Failure::Input(e.to_string()));
        }
    }
    generated_subgroup(g, &gens, 4096)
        .map(|s| s.into_iter().collect())
        .ok_or_else(|| Failure::Input("the generated subgroup is infinite or larger than 4096".into()))
}

fn build_witness<G: CliGroup>(g: &G, args: &WitnessArgs, ctx: &Ctx) -> Result<WitnessF<G::Elem>, Failure> {
    let case = CaseTag::parse(args.case).ok_or_else(|| Failure::Usage(format!("unknown case `{}`", args.case)))?;
    if case == CaseTag::InfiniteCyclic {
        let s = match args.s {
            Some(tok) => g.parse_one(tok)?,
            None => g
                .elements()
                .take(ctx.prefix.unwrap_or(512))
                .find(|x| g.order_of(x) == Order::Infinite)
                .ok_or_else(|| Failure::Input("no element of infinite order in the enumeration prefix".into()))?,
        };
        return Ok(witness_infinite_cyclic(g, &s, args.n, args.m)?);
    }
    let (Some(h), Some(f)) = (args.h, args.f) else {
        return Err(Failure::Usage(format!("case {} needs --h and --f", case.as_str())));
    };
    let h = subgroup_from(g, h)?;
    let f = g.parse_one(f)?;
    Ok(match case {
        CaseTag::Involution => witness_involution(g, &h, &f)?,
        CaseTag::NonCube => witness_noncube(g, &h, &f)?,
        CaseTag::Cube => witness_cube(g, &h, &f)?,
        CaseTag::InfiniteCyclic => unreachable!(),
    })
}

fn witness_text<G: Group>(label: &str, g: &G, w: &WitnessF<G::Elem>) -> String {
    let mut text = format!(
        "group: {label}\ncase: {}\nF: {}\niota: {}\nomega: {}\n",
        w.case.as_str(),
        braces(&set_labels(g, &w.f)),
        w.iota(),
        w.omega()
    );
    if let Some(v) = &w.isolated_vertex {
        text.push_str(&format!("isolated vertex: {}\n", g.label(v)));
    }
    text
}

fn witness_for<G: CliGroup>(label: &str, g: &G, args: &WitnessArgs, ctx: &Ctx) -> Result<Outcome, Failure> {
    let w = build_witness(g, args, ctx)?;
    ctx.write_dot(&w.delta, "delta")?;
    Ok(Outcome::ok(witness_json(label, g, &w), witness_text(label, g, &w)))
}

fn witness(lg: &LoadedGroup, args: &WitnessArgs, ctx: &Ctx) -> Result<Outcome, Failure> {
    if args.case == "auto" {
        let Some(g) = lg.enumerable() else {
            return Err(Failure::Input("--case auto needs an infinite catalog group".into()));
        };
        let r = case_analysis_with_retry(&g, ctx.prefix)?;
        ctx.write_dot(&r.witness.delta, "delta")?;
        let text = format!("branch: {}\nprefix: {}\n{}", r.branch.as_str(), r.prefix, witness_text(&lg.label, &g, &r.witness));
        return Ok(Outcome::ok(case_json(&lg.label, &g, &r), text));
    }
    match &lg.group {
        BuiltGroup::Finite(g) => witness_for(&lg.label, g, args, ctx),
        BuiltGroup::Enumerable(g) => witness_for(&lg.label, g, args, ctx),
    }
}

fn construct_for<G: CliGroup>(label: &str, g: &G, set: &str, ctx: &Ctx) -> Result<Outcome, Failure> {
    let f = SymSet::new(g, g.parse_list(set)?)?;
    if ctx.steps == 0 {
        return Err(Failure::Usage("--steps must be at least 1".into()));
    }
    let s = greedy_construct_a(g, &f, ctx.steps)?;
    let doc = greedy_json(label, g, &f, &s);
    let a: Vec<String> = s.a.iter().map(|x| g.label(x)).collect();
    let text = format!(
        "group: {label}\nF: {}\nsteps: {}\nA: {}\ninvariants hold: {}\n",
        braces(&set_labels(g, &f)),
        s.steps,
        braces(&a),
        doc["invariant_ok"]
    );
    Ok(Outcome::ok(doc, text))
}

fn construct(lg: &LoadedGroup, set: &str, ctx: &Ctx) -> Result<Outcome, Failure> {
    match &lg.group {
        BuiltGroup::Finite(g) => construct_for(&lg.label, g, set, ctx),
        BuiltGroup::Enumerable(g) => construct_for(&lg.label, g, set, ctx),
    }
}

fn verify_lemmas(bridge_max_order: usize, ctx: &Ctx) -> Result<Outcome, Failure> {
    let o32 = verify_order32_lemma();
    let order32 = json!({
        "C32": {"involutions": o32.cyclic_involutions, "squares": o32.cyclic_squares},
        "Q32": {"involutions": o32.quaternion_involutions, "squares": o32.quaternion_squares},
        "pass": o32.holds(),
    });

    let q8 = FiniteGroup::generalized_quaternion(8).map_err(|e| Failure::Input(e.to_string()))?;
    let d4 = FiniteGroup::dihedral(4).map_err(|e| Failure::Input(e.to_string()))?;
    let q8_center: Vec<usize> = (0..8).filter(|&x| q8.element_order(x) <= 2).collect();
    let d4_rot2 = vec![0, d4.resolve("r^2").expect("D4 names r^2")];
    let mut quotient = Vec::new();
    let mut quotient_pass = true;
    for (name, g, h) in [("quaternion:8", &q8, q8_center), ("dihedral:4", &d4, d4_rot2)] {
        let outcome = verify_exponent2_quotient(g, &h)?;
        quotient_pass &= outcome == QuotientOutcome::Verified;
        quotient.push(json!({"group": name, "H": names(g, &h), "outcome": outcome.as_str()}));
    }
    // No cyclic subgroup of a small catalog group may violate the quotient claim.
    let mut violations = 0usize;
    let mut applicable = 0usize;
    for d in finite_catalog(16) {
        let g = d.build_finite().map_err(|e| Failure::Input(e.to_string()))?;
        for x in 0..g.order() {
            let h = cyclic_subgroup(&g, &x).map_err(|e| Failure::Input(e.to_string()))?;
            match verify_exponent2_quotient(&g, &h)? {
                QuotientOutcome::Violated => violations += 1,
                QuotientOutcome::Verified => applicable += 1,
                QuotientOutcome::NotApplicable => {}
            }
        }
    }
    quotient_pass &= violations == 0;

    let mut groups = 0usize;
    let mut subsets = 0u64;
    let mut failures = Vec::new();
    for d in finite_catalog(bridge_max_order) {
        let g = d.build_finite().map_err(|e| Failure::Input(e.to_string()))?;
        groups += 1;
        let n = g.order();
        for mask in 0u64..1 << (n - 1) {
            let a: Vec<usize> = std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)).collect();
            subsets += 1;
            if !delta_bridge(&g, &a, ctx.cap)?.holds() {
                failures.push(json!({"group": d.to_string(), "A": names(&g, &a)}));
            }
        }
    }
    let bridge_pass = failures.is_empty();
    let pass = o32.holds() && quotient_pass && bridge_pass;
    let doc = json!({
        "order32": order32,
        "exponent2_quotient": {
            "examples": quotient,
            "cyclic_subgroups_verified": applicable,
            "violations": violations,
            "pass": quotient_pass,
        },
        "bridge": {
            "max_order": bridge_max_order,
            "groups": groups,
            "subsets": subsets,
            "failures": failures,
            "pass": bridge_pass,
        },
        "pass": pass,
    });
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    let text = format!(
        "order-32 lemma: {} (C32: {} involution, |S| = {}; Q32: {} involution, |S| = {})\n\
         exponent-2 quotient: {} (Q8, D4; {applicable} applicable cyclic subgroups, {violations} violations)\n\
         Δ(F) bridge: {} ({groups} groups up to order {bridge_max_order}, {subsets} subsets)\n",
        verdict(o32.holds()),
        o32.cyclic_involutions,
        o32.cyclic_squares,
        o32.quaternion_involutions,
        o32.quaternion_squares,
        verdict(quotient_pass),
        verdict(bridge_pass),
    );
    Ok(Outcome { doc, text, code: if pass { 0 } else { 1 } })
}

/// Subsets checked by `cross-validate` without `--subset` on orders 13 to 16.
const SAMPLED_SUBSETS: u64 = 100;
/// Largest order checked over every subset containing `e`.
const EXHAUSTIVE_CROSS_MAX: usize = 12;

fn cross_validate(lg: &LoadedGroup, subset: Option<&str>, seed: u64, ctx: &Ctx) -> Result<Outcome, Failure> {
    let g = require_finite(lg, "cross-validate")?;
    let n = g.order();
    if n > CROSS_VALIDATE_MAX {
        return Err(Failure::Input(format!("cross-validate supports orders up to {CROSS_VALIDATE_MAX}, got {n}")));
    }
    let subsets: Vec<Vec<usize>> = match subset {
        Some(s) => vec![g.parse_list(s)?],
        None if n <= EXHAUSTIVE_CROSS_MAX => std::iter::once(vec![0])
            .chain((1..n).flat_map(|k| Combinations::new(n, k).map(|rest| with_identity(&rest))))
            .collect(),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let count = ctx.budget.unwrap_or(SAMPLED_SUBSETS);
            (0..count)
                .map(|_| std::iter::once(0).chain((1..n).filter(|_| rng.gen_bool(0.5))).collect())
                .collect()
        }
    };
    let mut mismatches = Vec::new();
    for a in &subsets {
        if !cross_validate_correspondence(g, a, ctx.cap)? {
            mismatches.push(names(g, a));
        }
    }
    let pass = mismatches.is_empty();
    let doc = json!({
        "group": lg.label,
        "subsets_checked": subsets.len(),
        "exhaustive": subset.is_none() && n <= EXHAUSTIVE_CROSS_MAX,
        "mismatches": mismatches,
        "pass": pass,
    });
    let text = format!(
        "group: {}\nsubsets checked: {}\nfamilies agree: {}\n",
        lg.label,
        subsets.len(),
        if pass { "yes" } else { "NO" }
    );
    Ok(Outcome { doc, text, code: if pass { 0 } else { 1 } })
}
