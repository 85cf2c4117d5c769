//! The `frobcat` command line: argument parsing, target resolution, reports
//! and exit statuses. `main` only prints what [`run`] returns.

use std::ffi::OsString;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{ideal_generated, AlgObj, Side, WeakIdeal};
use crate::constructions::{
    builtin, clifford_algebra, etingof_ostrik_min, exterior_algebra, representing_algebra,
    representing_dim8, truncated_poly, vec_hopf, BilinearFormData,
};
use crate::doc::{matrix_json, mult_json, vec_json, Document};
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix};
use crate::filtration::{
    check_filtered_algebra, connectedness_failure, gr, gr_well_defined, graded_quotient_commutes,
    FilteredAlg, FilteredIdeal, FilteredObj, GradedAlg,
};
use crate::frobenius::{
    bongale_lift, frobenius_detect, graded_frobenius_structure_check, DetectOptions, ModeChoice, Verdict,
};
use crate::repcat::{hom_invariants, validate_hopf, Obj};
use crate::report::ValidationReport;

pub const EXIT_OK: i32 = 0;
/// A check failed, or the algebra is not Frobenius.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_NOT_CONNECTED: i32 = 4;
pub const EXIT_CAPACITY: i32 = 5;
pub const EXIT_INTERNAL: i32 = 6;

pub const DEMOS: &[&str] = &[
    "theorem-7-3-min",
    "theorem-7-3-dim8",
    "lemma-6-3-exterior",
    "cor-4-6-quotient",
];

#[derive(Parser, Debug)]
#[command(
    name = "frobcat",
    version,
    about = "Exact Frobenius and filtered-algebra computations in Rep(H)"
)]
struct Cli {
    /// How to decide Frobenius-ness.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest Gram matrix given to the symbolic determinant.
    #[arg(long = "symbolic-capacity", global = true, default_value_t = 6)]
    symbolic_capacity: usize,
    /// Largest sample height in randomized mode.
    #[arg(long = "max-height", global = true, default_value_t = 64)]
    max_height: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Json)]
    output: OutputArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Exact,
    Randomized,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Summary,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of everything named in a document or built-in.
    Validate { target: String },
    /// Decide whether an algebra is Frobenius and emit a certificate.
    Frobenius {
        target: String,
        /// Which algebra of a document (default: the first by name).
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Associated graded algebra of a filtered algebra.
    Gr {
        target: String,
        #[arg(long)]
        filtration: Option<String>,
    },
    /// Lift a Frobenius form from gr(A) to a connected filtered algebra A.
    Bongale {
        target: String,
        #[arg(long)]
        filtration: Option<String>,
    },
    /// Run a named example end to end.
    Demo { name: String },
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    body: Map<String, Value>,
    summary: Vec<String>,
}

impl Report {
    fn new(code: i32, summary: impl Into<String>) -> Report {
        Report {
            code,
            body: Map::new(),
            summary: vec![summary.into()],
        }
    }

    fn set(&mut self, key: &str, v: Value) {
        self.body.insert(key.into(), v);
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_INPUT,
        Error::NotConnected(_) => EXIT_NOT_CONNECTED,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_FAILED,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Shape(_) => "shape",
        Error::Invalid(_) => "invalid",
        Error::CategoryMismatch => "category-mismatch",
        Error::Precondition(_) => "precondition",
        Error::Capacity { .. } => "capacity",
        Error::NotConnected(_) => "not-connected",
        Error::Unsupported(_) => "unsupported",
        Error::Parse { .. } => "parse",
        Error::Internal(_) => "internal",
    }
}

fn error_report(e: &Error) -> Report {
    let mut r = Report::new(exit_code(e), format!("error: {e}"));
    let mut err = json!({ "kind": error_kind(e), "message": e.to_string() });
    match e {
        Error::Parse { context, .. } => err["context"] = json!(context),
        Error::Capacity { what, size, limit } => {
            err["capacity"] = json!({ "what": what, "size": size, "limit": limit })
        }
        _ => {}
    }
    r.set("error", err);
    r
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let start = Instant::now();
    let opts = DetectOptions {
        mode: match cli.mode {
            ModeArg::Auto => ModeChoice::Auto,
            ModeArg::Exact => ModeChoice::Exact,
            ModeArg::Randomized => ModeChoice::Randomized,
        },
        seed: cli.seed,
        symbolic_capacity: cli.symbolic_capacity,
        max_height: cli.max_height,
        ..DetectOptions::default()
    };
    let (name, target, result) = match &cli.command {
        Command::Validate { target } => ("validate", target.clone(), cmd_validate(target)),
        Command::Frobenius { target, algebra } => (
            "frobenius",
            target.clone(),
            cmd_frobenius(target, algebra.as_deref(), &opts),
        ),
        Command::Gr { target, filtration } => (
            "gr",
            target.clone(),
            cmd_gr(target, filtration.as_deref(), cli.seed),
        ),
        Command::Bongale { target, filtration } => (
            "bongale",
            target.clone(),
            cmd_bongale(target, filtration.as_deref(), &opts),
        ),
        Command::Demo { name } => ("demo", name.clone(), cmd_demo(name, &opts)),
    };
    let mut report = result.unwrap_or_else(|e| error_report(&e));
    report.set(
        "command",
        json!({
            "name": name,
            "target": target,
            "mode": format!("{:?}", cli.mode).to_lowercase(),
            "symbolic_capacity": cli.symbolic_capacity,
            "max_height": cli.max_height,
        }),
    );
    report.set("seed", json!(cli.seed));
    report.set("exit_status", json!(report.code));
    let elapsed = start.elapsed();
    let mut summary = report.summary.join("\n");
    summary.push('\n');
    let timing = format!("wall time: {:.3} ms\n", elapsed.as_secs_f64() * 1e3);
    let (stdout, stderr) = match cli.output {
        OutputArg::Json => {
            let mut s = serde_json::to_string_pretty(&Value::Object(report.body)).expect("values serialize");
            s.push('\n');
            (s, format!("{summary}{timing}"))
        }
        OutputArg::Summary => (summary, timing),
    };
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}

enum Target {
    Builtin(crate::constructions::Builtin),
    Document(Document),
}

fn resolve(target: &str) -> Result<Target> {
    let path = Path::new(target);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::parse(target, e.to_string()))?;
        return Ok(Target::Document(Document::parse(&text)?));
    }
    if target.ends_with(".json") || target.contains('/') {
        return Err(Error::parse(target, "no such file"));
    }
    Ok(Target::Builtin(builtin(target)?))
}

fn pick<'a, V>(map: &'a std::collections::BTreeMap<String, V>, want: Option<&str>, what: &str) -> Result<(String, &'a V)> {
    match want {
        Some(n) => map
            .get(n)
            .map(|v| (n.to_string(), v))
            .ok_or_else(|| Error::parse(what, format!("document has no {what} named {n:?}"))),
        None => map
            .iter()
            .next()
            .map(|(k, v)| (k.clone(), v))
            .ok_or_else(|| Error::parse(what, format!("document defines no {what}"))),
    }
}

fn report_json(name: &str, rep: &ValidationReport) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed }))
        .collect();
    json!({ "name": name, "passed": rep.passed(), "checks": checks })
}

fn cmd_validate(target: &str) -> Result<Report> {
    let mut sections: Vec<(String, ValidationReport)> = Vec::new();
    match resolve(target)? {
        Target::Builtin(b) => {
            sections.push(("hopf".into(), validate_hopf(b.algebra.carrier().hopf())));
            sections.push(("objects.carrier".into(), b.algebra.carrier().validate()));
            sections.push((format!("algebras.{target}"), crate::algebra::check_algebra(&b.algebra)));
            sections.push((format!("filtrations.{target}"), check_filtered_algebra(&b.filtered)));
        }
        Target::Document(doc) => {
            let l = doc.load()?;
            sections.push(("hopf".into(), validate_hopf(&l.hopf)));
            for (k, o) in &l.objects {
                sections.push((format!("objects.{k}"), o.validate()));
            }
            for (k, a) in &l.algebras {
                sections.push((format!("algebras.{k}"), crate::algebra::check_algebra(a)));
            }
            for (k, f) in &l.filtrations {
                sections.push((format!("filtrations.{k}"), check_filtered_algebra(f)));
            }
        }
    }
    let failures: Vec<String> = sections
        .iter()
        .flat_map(|(s, r)| r.failures().into_iter().map(move |f| format!("{s}: {f}")))
        .collect();
    let passed = failures.is_empty();
    let total: usize = sections.iter().map(|(_, r)| r.checks.len()).sum();
    let mut r = Report::new(
        if passed { EXIT_OK } else { EXIT_FAILED },
        format!("validate {target}: {} of {total} checks passed", total - failures.len()),
    );
    r.summary.extend(failures.iter().map(|f| format!("  failed: {f}")));
    r.set(
        "sections",
        Value::Array(sections.iter().map(|(s, rep)| report_json(s, rep)).collect()),
    );
    r.set("failures", json!(failures));
    r.set("passed", json!(passed));
    Ok(r)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Frobenius => EXIT_OK,
        Verdict::NotFrobenius => EXIT_FAILED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn cmd_frobenius(target: &str, which: Option<&str>, opts: &DetectOptions) -> Result<Report> {
    let (name, a) = match resolve(target)? {
        Target::Builtin(b) => (target.to_string(), b.algebra),
        Target::Document(doc) => {
            let l = doc.load()?;
            let (n, a) = pick(&l.algebras, which, "algebras")?;
            (n, a.clone())
        }
    };
    let cert = frobenius_detect(&a, opts)?;
    let d = hom_invariants(a.carrier()).rows();
    let mut r = Report::new(
        verdict_code(cert.verdict),
        format!(
            "frobenius {name}: {} ({}), dim {}, {d} invariant functionals",
            cert.verdict.as_str(),
            cert.mode.as_str(),
            a.dim()
        ),
    );
    r.set("algebra", json!(name));
    r.set("dim", json!(a.dim()));
    r.set("invariant_functionals", json!(d));
    r.set("certificate", cert.to_json());
    Ok(r)
}

fn filtered_target(target: &str, which: Option<&str>) -> Result<(String, FilteredAlg)> {
    match resolve(target)? {
        Target::Builtin(b) => Ok((target.to_string(), b.filtered)),
        Target::Document(doc) => {
            let l = doc.load()?;
            let (n, f) = pick(&l.filtrations, which, "filtrations")?;
            Ok((n, f.clone()))
        }
    }
}

fn require_valid(fa: &FilteredAlg) -> Result<()> {
    let rep = check_filtered_algebra(fa);
    if rep.passed() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("invalid filtered algebra: {}", rep.failures().join(", "))))
    }
}

/// `m_{i,j}` as `t[a][b][c]` over the bases of `B_i`, `B_j`, `B_{i+j}`.
fn block_json(block: &Matrix, di: usize, dj: usize) -> Value {
    Value::Array(
        (0..di)
            .map(|a| Value::Array((0..dj).map(|b| vec_json(&block.column_vec(a * dj + b))).collect()))
            .collect(),
    )
}

fn graded_json(g: &GradedAlg) -> Value {
    let dims = g.dims();
    let n = g.top_degree();
    let mut blocks = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            if dims[i] > 0 && dims[j] > 0 && dims[i + j] > 0 {
                blocks.push(json!({
                    "degrees": [i, j],
                    "m": block_json(&g.mult_block(i, j), dims[i], dims[j]),
                }));
            }
        }
    }
    json!({
        "components": dims,
        "unit": vec_json(g.to_algebra().unit()),
        "m": mult_json(g.to_algebra().mult()),
        "blocks": blocks,
    })
}

fn cmd_gr(target: &str, which: Option<&str>, seed: u64) -> Result<Report> {
    let (name, fa) = filtered_target(target, which)?;
    require_valid(&fa)?;
    let res = gr(&fa)?;
    let well_defined = gr_well_defined(&fa, seed)?;
    let dims = res.graded.dims().to_vec();
    let conserved = dims.iter().sum::<usize>() == fa.algebra().dim();
    let ok = conserved && well_defined;
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILED },
        format!("gr {name}: components {dims:?}, dimension conserved: {conserved}, well defined: {well_defined}"),
    );
    r.set("filtration", json!(name));
    r.set("filtration_dims", json!(fa.filtered().dims()));
    r.set("dimension_conserved", json!(conserved));
    r.set("well_defined", json!(well_defined));
    r.set("graded", graded_json(&res.graded));
    Ok(r)
}

fn cmd_bongale(target: &str, which: Option<&str>, opts: &DetectOptions) -> Result<Report> {
    let (name, fa) = filtered_target(target, which)?;
    require_valid(&fa)?;
    if let Some(why) = connectedness_failure(&fa) {
        return Err(Error::NotConnected(why));
    }
    let res = bongale_lift(&fa, opts)?;
    let gv = res.gr_certificate.verdict;
    let lifted = res.certificate.as_ref().is_some_and(|c| c.is_frobenius());
    let (code, conclusion) = match gv {
        Verdict::Frobenius if lifted => (EXIT_OK, "lifted"),
        Verdict::Frobenius => (EXIT_INTERNAL, "lift-failed"),
        Verdict::NotFrobenius => (EXIT_FAILED, "no-conclusion"),
        Verdict::Inconclusive => (EXIT_INCONCLUSIVE, "no-conclusion"),
    };
    let mut r = Report::new(
        code,
        format!("bongale {name}: gr(A) {}, conclusion {conclusion}", gv.as_str()),
    );
    r.set("filtration", json!(name));
    r.set("gr_components", json!(res.gr.graded.dims()));
    r.set("gr_certificate", res.gr_certificate.to_json());
    r.set("eta", res.eta.as_deref().map_or(Value::Null, vec_json));
    r.set(
        "certificate",
        res.certificate.as_ref().map_or(Value::Null, |c| c.to_json()),
    );
    r.set("conclusion", json!(conclusion));
    Ok(r)
}

fn cmd_demo(name: &str, opts: &DetectOptions) -> Result<Report> {
    match name {
        "theorem-7-3-min" => demo_representing(name, etingof_ostrik_min(), 4, opts),
        "theorem-7-3-dim8" => demo_representing(name, representing_dim8(), 8, opts),
        "lemma-6-3-exterior" => demo_exterior(opts),
        "cor-4-6-quotient" => demo_quotient(),
        _ => Err(Error::parse(
            "demo",
            format!("unknown demo {name:?}; available: {}", DEMOS.join(", ")),
        )),
    }
}

fn demo_representing(
    name: &str,
    input: crate::constructions::RepresentingInput,
    expected_dim: usize,
    opts: &DetectOptions,
) -> Result<Report> {
    let rep = representing_algebra(&input)?;
    let cert = frobenius_detect(&rep.algebra, opts)?;
    let dim = rep.algebra.dim();
    let ok = cert.is_frobenius() && dim == expected_dim;
    let mut r = Report::new(
        if ok { EXIT_OK } else { verdict_code(cert.verdict).max(EXIT_FAILED) },
        format!("demo {name}: representing algebra of dim {dim} is {}", cert.verdict.as_str()),
    );
    let stages: Vec<Value> = rep
        .stages
        .iter()
        .map(|(s, d)| json!({ "stage": s, "dim": d }))
        .collect();
    r.set("stages", Value::Array(stages));
    r.set("dim", json!(dim));
    r.set("expected_dim", json!(expected_dim));
    r.set("certificate", cert.to_json());
    r.set("passed", json!(ok));
    Ok(r)
}

fn demo_exterior(opts: &DetectOptions) -> Result<Report> {
    let ext = exterior_algebra(&Obj::trivial(&vec_hopf(), 3))?;
    let cert = if ext.certificate.is_frobenius() {
        ext.certificate.clone()
    } else {
        frobenius_detect(ext.graded.to_algebra(), opts)?
    };
    if !cert.is_frobenius() {
        let mut r = Report::new(verdict_code(cert.verdict), "demo lemma-6-3-exterior: exterior algebra not certified");
        r.set("certificate", cert.to_json());
        r.set("passed", json!(false));
        return Ok(r);
    }
    let rep = graded_frobenius_structure_check(&ext.graded, &cert)?;
    let ok = rep.passed() && rep.dims == [1, 3, 3, 1] && rep.block_ranks == [1, 3, 3, 1];
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILED },
        format!(
            "demo lemma-6-3-exterior: dims {:?}, block ranks {:?}",
            rep.dims, rep.block_ranks
        ),
    );
    r.set("dims", json!(rep.dims));
    r.set("top_degree", json!(rep.top_degree));
    r.set("top_dim", json!(rep.top_dim));
    r.set("block_ranks", json!(rep.block_ranks));
    r.set(
        "clauses",
        json!({
            "top_is_unit": rep.top_is_unit,
            "top_projection_nondegenerate": rep.top_projection_nondegenerate,
            "blocks_perfect": rep.blocks_perfect,
        }),
    );
    r.set("certificate", cert.to_json());
    r.set("passed", json!(ok));
    Ok(r)
}

fn quotient_case(label: &str, fa: &FilteredAlg, gens: &Matrix) -> Result<(bool, Value)> {
    let s = ideal_generated(fa.algebra(), gens, Side::Bi);
    let ideal = WeakIdeal::from_subspace(fa.algebra(), &s.basis(), Side::Bi)?;
    let fi = FilteredIdeal::induced(fa, ideal)?;
    let cmp = graded_quotient_commutes(fa, &fi)?;
    let ok = cmp.iso.is_some();
    Ok((
        ok,
        json!({
            "example": label,
            "ideal_dims": fi.filtered().dims(),
            "gr_quotient_components": cmp.graded_quotient.dims(),
            "quotient_gr_components": cmp.quotient_graded.dims(),
            "isomorphic": ok,
            "iso": cmp.iso.as_ref().map_or(Value::Null, matrix_json),
        }),
    ))
}

fn demo_quotient() -> Result<Report> {
    let t = truncated_poly(3)?;
    let a: &AlgObj = t.to_algebra();
    let f = FilteredObj::by_degree(a.carrier(), &t.degrees())?;
    let poly = FilteredAlg::new(a.clone(), f)?;
    let x2 = Matrix::from_ints(&[&[0], &[0], &[1]]);
    let (ok1, v1) = quotient_case("(x^2) in k[x]/(x^3)", &poly, &x2)?;

    let w = Obj::trivial(&vec_hopf(), 2);
    let b = BilinearFormData::new(w.clone(), Matrix::diagonal(&[q(0), q(1)]))?;
    let cl = clifford_algebra(&w, &b)?;
    // basis 1, x1, x2, x1 x2
    let x1 = Matrix::from_ints(&[&[0], &[1], &[0], &[0]]);
    let (ok2, v2) = quotient_case("(x1) in Cl(k^2, diag(0, 1))", &cl.filtered, &x1)?;

    let ok = ok1 && ok2;
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILED },
        format!("demo cor-4-6-quotient: isomorphic {ok1} and {ok2}"),
    );
    r.set("examples", json!([v1, v2]));
    r.set("passed", json!(ok));
    Ok(r)
}
