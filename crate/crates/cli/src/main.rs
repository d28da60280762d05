use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use preradical::adjunction::AdjunctionSpec;
use preradical::category::Category;
use preradical::galois::InducedGalois;
use preradical::labels::{a2_name, display_label, resolve, LabelDictionary};
use preradical::lattice::{build_poset, to_dot, DotStyle, Hasse};
use preradical::linalg::FieldSpec;
use preradical::preradical::{alpha, enumerate_preradicals, join, meet, omega, Preradical, PreradicalJson};
use preradical::quiver::Quiver;
use preradical::report::Report;
use preradical::rep::RepMorphism;
use preradical::verify::{default_quivers, quiver_name, run_suite, Suite, VerifyOptions};
use preradical::{Error, Limits};

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

const EXIT_INPUT: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "preradical", version, about = "Preradical lattices of type-A quiver representations")]
struct Cli {
    /// Quiver JSON file, or inline JSON; defaults to A2 (0→1)
    #[arg(long, global = true)]
    quiver: Option<String>,
    /// Prime field characteristic
    #[arg(long, global = true, default_value_t = 2)]
    field: u32,
    /// Work-bound JSON file (overrides PRERADICAL_LIMITS)
    #[arg(long, global = true)]
    limits: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Print per-check failure details
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Only {
    Idempotent,
    Radical,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Product,
    Coproduct,
    Join,
    Meet,
    Alpha,
    Omega,
    Delta,
}

#[derive(Subcommand)]
enum Command {
    /// List every preradical of the quiver's category
    Enumerate,
    /// Hasse diagram of the preradical lattice
    Lattice {
        #[arg(long, value_enum)]
        only: Option<Only>,
        /// DOT style JSON file
        #[arg(long)]
        style: Option<PathBuf>,
    },
    /// Apply one operation to preradicals given by name, table or JSON
    Op {
        #[arg(value_enum)]
        operation: OpName,
        operands: Vec<String>,
        /// For alpha/omega: the identity of this indecomposable
        #[arg(long)]
        identity: Option<String>,
        /// For alpha/omega: basis morphism FROM,TO,INDEX between indecomposables
        #[arg(long)]
        hom: Option<String>,
    },
    /// Check the Galois connection induced by an adjunction
    Galois {
        #[arg(long, default_value = "lan-res:0")]
        adjunction: String,
        /// Use the opposite adjunction between the opposite categories
        #[arg(long)]
        opposite: bool,
    },
    /// Run a verification suite on the quiver and on equioriented A3
    Verify {
        /// order, delta, alpha-omega, joins, galois or all
        suite: String,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() { EXIT_CAPACITY } else { EXIT_INPUT })
        }
    }
}

struct Context {
    quiver: Quiver,
    explicit_quiver: bool,
    field: FieldSpec,
    limits: Limits,
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn inline_or_file(arg: &str) -> std::result::Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        read_text(Path::new(arg))
    }
}

fn context(cli: &Cli) -> std::result::Result<Context, Failure> {
    let field = FieldSpec::new(cli.field)?;
    let limits = match (&cli.limits, std::env::var("PRERADICAL_LIMITS")) {
        (Some(path), _) => Limits::from_json(&read_text(path)?)?,
        (None, Ok(env)) if !env.trim().is_empty() => Limits::from_json(&inline_or_file(&env)?)?,
        _ => Limits::default(),
    };
    let (quiver, explicit_quiver) = match &cli.quiver {
        Some(arg) => (Quiver::from_json_str(&inline_or_file(arg)?)?, true),
        None => (Quiver::linear(2), false),
    };
    Ok(Context { quiver, explicit_quiver, field, limits })
}

fn run(cli: &Cli) -> Outcome {
    let ctx = context(cli)?;
    match &cli.command {
        Command::Enumerate => enumerate(cli, &ctx),
        Command::Lattice { only, style } => lattice(cli, &ctx, *only, style.as_deref()),
        Command::Op { operation, operands, identity, hom } => op(cli, &ctx, *operation, operands, identity.as_deref(), hom.as_deref()),
        Command::Galois { adjunction, opposite } => galois(cli, &ctx, adjunction, *opposite),
        Command::Verify { suite, seed } => verify(cli, &ctx, suite, *seed),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ascii_name(pr: &Preradical) -> String {
    a2_name(pr).map(|(a, _)| a.to_string()).unwrap_or_else(|| "-".into())
}

fn describe(pr: &Preradical) -> Value {
    json!({
        "name": a2_name(pr).map(|(a, _)| a),
        "symbol": a2_name(pr).map(|(_, s)| s),
        "label": display_label(pr),
        "idempotent": pr.is_idempotent(),
        "radical": pr.is_radical(),
        "value": pr.to_json(),
    })
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn enumerate(cli: &Cli, ctx: &Context) -> Outcome {
    let cat = Category::type_a(ctx.quiver.clone(), ctx.field)?;
    let prs = enumerate_preradicals(&cat, &ctx.limits)?;
    match cli.format {
        Format::Json => print_json(&json!({
            "quiver": quiver_name(&ctx.quiver),
            "field": ctx.field.p(),
            "count": prs.len(),
            "preradicals": prs.iter().map(describe).collect::<Vec<_>>(),
        })),
        Format::Dot => return Err(Failure::Usage("enumerate has no dot output".into())),
        Format::Table => {
            outln!("{} preradicals on {} over F_{}", prs.len(), quiver_name(&ctx.quiver), ctx.field.p());
            let labels: Vec<String> = prs.iter().map(display_label).collect();
            let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(5);
            outln!("{:>3}  {:<8}  {:<width$}  {:<10}  radical", "#", "name", "table", "idempotent");
            for (i, (p, l)) in prs.iter().zip(&labels).enumerate() {
                outln!("{i:>3}  {:<8}  {l:<width$}  {:<10}  {}", ascii_name(p), yes_no(p.is_idempotent()), yes_no(p.is_radical()));
            }
        }
    }
    Ok(())
}

fn lattice(cli: &Cli, ctx: &Context, only: Option<Only>, style: Option<&Path>) -> Outcome {
    let cat = Category::type_a(ctx.quiver.clone(), ctx.field)?;
    let full = build_poset(&enumerate_preradicals(&cat, &ctx.limits)?)?;
    let h: Hasse = match only {
        None => full,
        Some(Only::Idempotent) => full.idempotent_part(),
        Some(Only::Radical) => full.radical_part(),
    };
    match cli.format {
        Format::Json => print_json(&serde_json::to_value(h.to_json()).map_err(Error::from)?),
        Format::Dot => {
            let style: DotStyle = match style {
                Some(path) => serde_json::from_str(&read_text(path)?).map_err(Error::from)?,
                None => DotStyle::default(),
            };
            out!("{}", to_dot(&h, &style));
        }
        Format::Table => {
            outln!("{} nodes, {} covers", h.len(), h.covers().len());
            for i in 0..h.len() {
                let mut marks = Vec::new();
                if h.is_idempotent(i) {
                    marks.push("idempotent");
                }
                if h.is_radical(i) {
                    marks.push("radical");
                }
                outln!("{i:>3}  {:<3} {}  {}", h.symbol(i).unwrap_or("-"), h.label(i), marks.join(","));
            }
            for &(a, b) in h.covers() {
                outln!("{a} ⋖ {b}");
            }
        }
    }
    Ok(())
}

fn operand(cat: &Arc<Category>, text: &str, limits: &Limits) -> std::result::Result<Preradical, Failure> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || (text.ends_with(".json") && Path::new(text).exists()) {
        let json: PreradicalJson = serde_json::from_str(&inline_or_file(text)?).map_err(Error::from)?;
        return Ok(Preradical::from_json(cat, &json)?);
    }
    Ok(resolve(cat, text, limits)?)
}

fn indecomposable(cat: &Category, name: &str) -> std::result::Result<usize, Failure> {
    LabelDictionary::structural(cat)
        .index_of(name)
        .or_else(|| cat.position_of_name(name))
        .ok_or_else(|| Failure::Lib(Error::Label(format!("no indecomposable is called {name:?}"))))
}

fn morphism(cat: &Category, identity: Option<&str>, hom: Option<&str>) -> std::result::Result<RepMorphism, Failure> {
    match (identity, hom) {
        (Some(name), None) => Ok(cat.rep(indecomposable(cat, name)?).identity()),
        (None, Some(spec)) => {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let [from, to, index] = parts[..] else {
                return Err(Failure::Usage("--hom expects FROM,TO,INDEX".into()));
            };
            let (i, j) = (indecomposable(cat, from)?, indecomposable(cat, to)?);
            let k: usize = index.parse().map_err(|_| Failure::Usage(format!("bad basis index {index:?}")))?;
            cat.hom(i, j)
                .get(k)
                .cloned()
                .ok_or_else(|| Failure::Usage(format!("Hom({from},{to}) has dimension {}", cat.hom(i, j).len())))
        }
        _ => Err(Failure::Usage("alpha and omega need exactly one of --identity or --hom".into())),
    }
}

fn op(cli: &Cli, ctx: &Context, operation: OpName, operands: &[String], identity: Option<&str>, hom: Option<&str>) -> Outcome {
    let cat = Category::type_a(ctx.quiver.clone(), ctx.field)?;
    let args = operands.iter().map(|t| operand(&cat, t, &ctx.limits)).collect::<std::result::Result<Vec<_>, _>>()?;
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(Failure::Usage(format!("expected {n} operand(s), got {}", args.len())))
        }
    };
    let result = match operation {
        OpName::Product => {
            arity(2)?;
            args[0].product(&args[1])?
        }
        OpName::Coproduct => {
            arity(2)?;
            args[0].coproduct(&args[1])?
        }
        OpName::Join => join(&cat, &args)?,
        OpName::Meet => meet(&cat, &args)?,
        OpName::Alpha => {
            arity(0)?;
            alpha(&cat, &morphism(&cat, identity, hom)?)?
        }
        OpName::Omega => {
            arity(0)?;
            omega(&cat, &morphism(&cat, identity, hom)?)?
        }
        OpName::Delta => {
            arity(1)?;
            args[0].delta()
        }
    };
    let on = quiver_name(result.category().quiver());
    match cli.format {
        Format::Json => {
            let mut v = describe(&result);
            v["quiver"] = json!(on);
            print_json(&v);
        }
        Format::Dot => return Err(Failure::Usage("op has no dot output".into())),
        Format::Table => {
            outln!("{}", display_label(&result));
            if let Some((a, s)) = a2_name(&result) {
                outln!("name: {a} ({s})");
            }
            if matches!(operation, OpName::Delta) {
                outln!("category: opposite, {on}");
            }
            outln!("idempotent: {}", yes_no(result.is_idempotent()));
            outln!("radical: {}", yes_no(result.is_radical()));
        }
    }
    Ok(())
}

fn print_report(cli: &Cli, report: &Report) {
    for c in &report.checks {
        if c.passed() {
            outln!("PASS  {}", c.name);
        } else {
            outln!("FAIL  {} ({} failure(s))", c.name, c.failures.len());
            let shown = if cli.verbose { c.failures.len() } else { c.failures.len().min(3) };
            for f in &c.failures[..shown] {
                outln!("        {f}");
            }
        }
    }
}

fn galois(cli: &Cli, ctx: &Context, spec: &str, opposite: bool) -> Outcome {
    let spec = AdjunctionSpec::parse(&inline_or_file(spec).unwrap_or_else(|_| spec.to_string()))?;
    let adj = spec.build(Some(&ctx.quiver))?;
    let equivalence = adj.is_equivalence();
    let mut g = InducedGalois::type_a(adj, ctx.field)?;
    if opposite {
        g = g.opposite();
    }
    let pa = enumerate_preradicals(g.source(), &ctx.limits)?;
    let pb = enumerate_preradicals(g.target(), &ctx.limits)?;
    let mut report = g.check_on(&pa, &pb)?;
    report.extend(g.check_alpha_omega_transport()?);
    report.extend(g.check_opposite_squares(&pa, &pb)?);
    let mut inverse = None;
    if equivalence {
        let mut bad = Vec::new();
        for (i, t) in pa.iter().enumerate() {
            if g.psi(&g.phi(t)?)? != *t {
                bad.push(format!("source #{i}"));
            }
        }
        for (i, s) in pb.iter().enumerate() {
            if g.phi(&g.psi(s)?)? != *s {
                bad.push(format!("target #{i}"));
            }
        }
        inverse = Some(bad.is_empty());
        report.push("φ and ψ are mutually inverse", bad);
    }
    let phi_table: Vec<Value> = pa
        .iter()
        .map(|t| Ok(json!({"tau": display_label(t), "phi": display_label(&g.phi(t)?)})))
        .collect::<preradical::Result<_>>()?;
    let psi_table: Vec<Value> = pb
        .iter()
        .map(|s| Ok(json!({"sigma": display_label(s), "psi": display_label(&g.psi(s)?)})))
        .collect::<preradical::Result<_>>()?;
    match cli.format {
        Format::Json => print_json(&json!({
            "adjunction": g.adjunction().describe(),
            "source": {"quiver": quiver_name(g.source().quiver()), "size": pa.len()},
            "target": {"quiver": quiver_name(g.target().quiver()), "size": pb.len()},
            "phi": phi_table,
            "psi": psi_table,
            "passed": report.all_passed(),
            "checks": report.checks,
        })),
        Format::Dot => return Err(Failure::Usage("galois has no dot output".into())),
        Format::Table => {
            outln!("adjunction: {}", g.adjunction().describe());
            outln!("source: {} ({} preradicals)", quiver_name(g.source().quiver()), pa.len());
            outln!("target: {} ({} preradicals)", quiver_name(g.target().quiver()), pb.len());
            for row in &phi_table {
                outln!("φ {} = {}", row["tau"].as_str().unwrap_or(""), row["phi"].as_str().unwrap_or(""));
            }
            for row in &psi_table {
                outln!("ψ {} = {}", row["sigma"].as_str().unwrap_or(""), row["psi"].as_str().unwrap_or(""));
            }
            print_report(cli, &report);
            if inverse == Some(true) {
                outln!("note: φ = ψ⁻¹ (lattice isomorphism)");
            }
            let failed = report.failed().count();
            outln!("{} of {} checks passed", report.checks.len() - failed, report.checks.len());
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(cli: &Cli, ctx: &Context, suite: &str, seed: u64) -> Outcome {
    let suite: Suite = suite.parse()?;
    let quivers = default_quivers(ctx.explicit_quiver.then_some(&ctx.quiver));
    let opts = VerifyOptions { field: ctx.field, limits: ctx.limits, seed, ..VerifyOptions::default() };
    let start = std::time::Instant::now();
    let report = run_suite(suite, &quivers, &opts)?;
    let elapsed = start.elapsed().as_secs_f64();
    let failed = report.failed().count();
    let names: Vec<String> = quivers.iter().map(quiver_name).collect();
    match cli.format {
        Format::Json => print_json(&json!({
            "suite": suite.name(),
            "quivers": names,
            "field": ctx.field.p(),
            "checks": report.checks,
            "failed": failed,
            "passed": failed == 0,
            "seconds": elapsed,
        })),
        Format::Dot => return Err(Failure::Usage("verify has no dot output".into())),
        Format::Table => {
            print_report(cli, &report);
            outln!(
                "suite={} quivers={} checks={} failed={} result={} seconds={elapsed:.2}",
                suite.name(),
                names.join(";"),
                report.checks.len(),
                failed,
                if failed == 0 { "pass" } else { "fail" }
            );
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
