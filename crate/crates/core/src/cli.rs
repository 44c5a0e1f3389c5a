//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success (any verdict), 1 input error, 2 non-terminating
//! closure, 3 unsupported algebra class or strategy mismatch.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{close_presentation, load_presentation, AlgebraError, AlgebraTable};
use crate::frobenius::{find_frobenius_form, FrobeniusError};
use crate::linalg::{Field, FieldSpec};
use crate::module::io::ModuleFile;
use crate::module::{ModuleError, ModuleRep};
use crate::repcert::{
    certify_factor_rule, certify_wild_lemma, certify_wild_theorem, corpus_algebra, corpus_presentation, family_member,
    over_field, scan_family, trivial, verify_trail, Certificate, FamilyKind, FamilyReport, RepCertError, ScanOptions,
};
use crate::resolution::{complexity_estimate, hilbert_growth, periodicity_in, resolve, IsoOptions, ResolutionError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NONTERMINATING: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    LemmaFamily,
    TheoremGrowth,
    Factor,
}

#[derive(Debug, Parser)]
#[command(name = "reptype", version, about = "Homological invariants and representation-type certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Field `p` or `p,e`; repeat to scan several fields.
    #[arg(long = "field", global = true, value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub cutoff: u32,
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub dmax: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 16)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Recompute every evidence item of emitted certificates.
    #[arg(long, global = true)]
    pub verify_trail: bool,
}

#[derive(Debug, Args)]
pub struct ModuleChoice {
    /// Module file (JSON/TOML); defaults to the trivial module.
    #[arg(long, conflicts_with_all = ["family", "regular"])]
    pub module: Option<PathBuf>,
    /// A family member instead of a file.
    #[arg(long, value_enum, requires = "lambda")]
    pub family: Option<FamilyKind>,
    /// Field-element index of λ (Σ c_i p^i).
    #[arg(long)]
    pub lambda: Option<u32>,
    /// The regular module.
    #[arg(long)]
    pub regular: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Close a presentation and report its structure.
    AlgebraCheck { algebra: String },
    /// Minimal projective resolution table.
    Resolve {
        algebra: Option<String>,
        #[command(flatten)]
        module: ModuleChoice,
    },
    /// Complexity estimate, periodicity and growth.
    Complexity {
        algebra: Option<String>,
        #[command(flatten)]
        module: ModuleChoice,
    },
    /// Emit a representation-type certificate.
    Certify {
        algebra: String,
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = FamilyKind::M)]
        family: FamilyKind,
        /// Ideal generators (factor strategy).
        #[arg(long = "ideal")]
        ideal: Vec<String>,
        /// The quotient algebra to certify first (factor strategy).
        #[arg(long)]
        quotient: Option<String>,
        #[arg(long, value_enum, default_value_t = Strategy::LemmaFamily)]
        quotient_strategy: Strategy,
    },
    /// Scan a one-parameter family over the given fields.
    Scan {
        algebra: String,
        #[arg(long, value_enum, default_value_t = FamilyKind::M)]
        family: FamilyKind,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let spec = FieldSpec::parse(s)?;
    Field::new(&spec).map_err(|e| e.to_string())?;
    Ok(spec)
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_INPUT, message: message.into() }
    }

    fn unsupported(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_UNSUPPORTED, message: message.into() }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> CliError {
        let code = match e {
            AlgebraError::NonTerminating { .. } => EXIT_NONTERMINATING,
            AlgebraError::UnsupportedClass(_) => EXIT_UNSUPPORTED,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> CliError {
        match e {
            ModuleError::Algebra(a) => a.into(),
            ModuleError::UnsupportedSize(_) => CliError::unsupported(e.to_string()),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<ResolutionError> for CliError {
    fn from(e: ResolutionError) -> CliError {
        match e {
            ResolutionError::Module(m) => m.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<FrobeniusError> for CliError {
    fn from(e: FrobeniusError) -> CliError {
        match e {
            FrobeniusError::Module(m) => m.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<RepCertError> for CliError {
    fn from(e: RepCertError) -> CliError {
        match e {
            RepCertError::Algebra(a) => a.into(),
            RepCertError::Module(m) => m.into(),
            RepCertError::Resolution(r) => r.into(),
            RepCertError::Frobenius(f) => f.into(),
            other @ (RepCertError::QuotientMismatch(_) | RepCertError::NotWild(_)) => {
                CliError::unsupported(other.to_string())
            }
        }
    }
}

/// Algebras loaded in this run, by name, for resolving certificate trails.
#[derive(Default)]
struct Registry {
    loaded: Mutex<HashMap<String, Arc<AlgebraTable>>>,
}

impl Registry {
    fn load(&self, reference: &str, field: Option<&FieldSpec>) -> Result<Arc<AlgebraTable>, CliError> {
        let table = if let Some(name) = reference.strip_prefix("corpus:") {
            match field {
                None => corpus_algebra(name)?,
                Some(spec) => {
                    let f = Field::new(spec).map_err(AlgebraError::from)?;
                    let base = corpus_algebra(name)?;
                    if f.p() == base.field().p() {
                        over_field(&base, &f)?
                    } else {
                        Arc::new(close_presentation(&corpus_presentation(name)?.over(&f)?)?)
                    }
                }
            }
        } else {
            let p = load_presentation(Path::new(reference))?;
            let p = match field {
                Some(spec) => p.over(&Field::new(spec).map_err(AlgebraError::from)?)?,
                None => p,
            };
            Arc::new(close_presentation(&p)?)
        };
        self.loaded.lock().unwrap().insert(table.name().to_string(), table.clone());
        Ok(table)
    }

    fn resolve(&self, name: &str) -> Result<Arc<AlgebraTable>, AlgebraError> {
        if let Some(a) = self.loaded.lock().unwrap().get(name) {
            return Ok(a.clone());
        }
        corpus_algebra(name.strip_prefix("corpus:").unwrap_or(name))
    }
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("outputs serialise");
    s.push('\n');
    s
}

struct Ctx {
    global: Global,
    registry: Registry,
}

impl Ctx {
    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            cutoff: self.global.cutoff as usize,
            dmax: self.global.dmax as usize,
            seed: self.global.seed,
            trials: self.global.trials,
        }
    }

    fn base_field(&self) -> Option<&FieldSpec> {
        self.global.fields.first()
    }

    /// Scan fields: the given ones, else `F_p, F_{p²}, F_{p³}`.
    fn scan_fields(&self, a: &AlgebraTable) -> Result<Vec<Field>, CliError> {
        let specs: Vec<FieldSpec> = if self.global.fields.is_empty() {
            (1..=3).map(|e| FieldSpec::extension(a.field().p(), e)).collect()
        } else {
            self.global.fields.clone()
        };
        specs
            .iter()
            .map(|s| {
                if s.p != a.field().p() {
                    return Err(CliError::input(format!("field {s} has the wrong characteristic for {}", a.name())));
                }
                Field::new(s).map_err(|e| CliError::input(e.to_string()))
            })
            .collect()
    }

    fn module(&self, algebra: Option<&str>, choice: &ModuleChoice) -> Result<ModuleRep, CliError> {
        let file = match &choice.module {
            Some(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                Some(ModuleFile::parse(&text)?)
            }
            None => None,
        };
        let reference = algebra
            .map(str::to_string)
            .or_else(|| file.as_ref().and_then(|f| f.algebra_ref.clone()))
            .ok_or_else(|| CliError::input("no algebra given (positional argument or algebra_ref)"))?;
        let a = self.registry.load(&reference, self.base_field())?;
        if let Some(file) = file {
            return Ok(file.build(&a)?);
        }
        if let Some(kind) = choice.family {
            let idx = choice.lambda.unwrap_or(0);
            let l = a.field().from_index(idx).ok_or_else(|| CliError::input(format!("λ index {idx} out of range")))?;
            return family_member(&a, kind, l).map_err(|e| match e {
                ModuleError::Shape(m) => CliError::unsupported(m),
                other => other.into(),
            });
        }
        if choice.regular {
            return Ok(ModuleRep::regular(&a));
        }
        Ok(trivial(&a)?)
    }
}

/// Parses arguments and runs, returning the exit code and output streams.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let out_path = cli.global.out.clone();
    let ctx = Ctx { global: cli.global, registry: Registry::default() };
    let result = match &cli.command {
        Command::AlgebraCheck { algebra } => algebra_check(&ctx, algebra),
        Command::Resolve { algebra, module } => cmd_resolve(&ctx, algebra.as_deref(), module),
        Command::Complexity { algebra, module } => cmd_complexity(&ctx, algebra.as_deref(), module),
        Command::Certify { algebra, strategy, family, ideal, quotient, quotient_strategy } => {
            cmd_certify(&ctx, algebra, *strategy, *family, ideal, quotient.as_deref(), *quotient_strategy)
        }
        Command::Scan { algebra, family } => cmd_scan(&ctx, algebra, *family),
    };
    match result {
        Ok(text) => match out_path {
            Some(p) => match std::fs::write(&p, &text) {
                Ok(()) => Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() },
                Err(e) => {
                    Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("{}: {e}\n", p.display()) }
                }
            },
            None => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
        },
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let o = execute(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    o.code
}

#[derive(Serialize)]
struct AlgebraReport {
    name: String,
    field: String,
    dim: usize,
    basis: Vec<String>,
    generators: Vec<String>,
    class: String,
    radical_dim: Option<usize>,
    radical_layers: Vec<usize>,
    content_hash: String,
    canonical_hash: String,
    frobenius: serde_json::Value,
}

/// `dim rad^i / rad^{i+1}`.
fn radical_layers(a: &AlgebraTable) -> Vec<usize> {
    let Ok(rad) = a.radical() else { return Vec::new() };
    let gens = rad.basis_vectors();
    let mut layers = vec![a.dim() - rad.dim()];
    let mut power = rad.clone();
    while power.dim() > 0 {
        let prods: Vec<_> = power
            .basis_vectors()
            .iter()
            .flat_map(|p| gens.iter().map(move |g| (p.clone(), g.clone())))
            .map(|(p, g)| a.mul(&p, &g))
            .collect();
        let next = crate::linalg::Subspace::span(a.field(), a.dim(), &prods);
        layers.push(power.dim() - next.dim());
        power = next;
    }
    layers
}

fn algebra_check(ctx: &Ctx, reference: &str) -> Result<String, CliError> {
    let a = ctx.registry.load(reference, ctx.base_field())?;
    let frobenius = match find_frobenius_form(&a, ctx.global.seed, ctx.global.trials) {
        Ok(fd) => serde_json::to_value(fd.summary()).unwrap(),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let r = AlgebraReport {
        name: a.name().to_string(),
        field: a.field().spec().to_string(),
        dim: a.dim(),
        basis: a.labels().to_vec(),
        generators: a.generator_names(),
        class: format!("{:?}", a.class()),
        radical_dim: a.radical().ok().map(|r| r.dim()),
        radical_layers: radical_layers(&a),
        content_hash: a.content_hash(),
        canonical_hash: a.canonical_hash(),
        frobenius,
    };
    Ok(match ctx.global.format {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut s = String::from("key,value\n");
            for (k, v) in [
                ("name", r.name.clone()),
                ("field", r.field.clone()),
                ("dim", r.dim.to_string()),
                ("class", r.class.clone()),
                ("radical_dim", r.radical_dim.map(|d| d.to_string()).unwrap_or_default()),
                ("canonical_hash", r.canonical_hash.clone()),
            ] {
                let _ = writeln!(s, "{k},{v}");
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "algebra {} over {}", r.name, r.field);
            let _ = writeln!(s, "dimension {}", r.dim);
            let _ = writeln!(s, "basis {}", r.basis.join(" "));
            let _ = writeln!(s, "class {} (radical dim {:?}, layers {:?})", r.class, r.radical_dim, r.radical_layers);
            let _ = writeln!(s, "frobenius {}", r.frobenius);
            s
        }
    })
}

fn cmd_resolve(ctx: &Ctx, algebra: Option<&str>, choice: &ModuleChoice) -> Result<String, CliError> {
    let m = ctx.module(algebra, choice)?;
    let opts = ctx.scan_options();
    let res = resolve(&m, opts.cutoff.max(opts.dmax))?;
    let periodicity = periodicity_in(&res, opts.dmax, opts.iso())?;
    let mut table = res.table.clone();
    table.rows.truncate(opts.cutoff + 1);
    table.cutoff = opts.cutoff;
    let summary = match periodicity.period {
        Some(d) => format!("periodic d={d}"),
        None if periodicity.vanishes_at.is_some() => "finite projective dimension".to_string(),
        None => format!("no period ≤ {}", opts.dmax),
    };
    Ok(match ctx.global.format {
        Format::Json => to_json(&json!({ "table": table, "periodicity": periodicity, "summary": summary })),
        Format::Csv => table.to_csv(),
        Format::Text => format!("{}# {summary}\n", table.to_csv()),
    })
}

fn cmd_complexity(ctx: &Ctx, algebra: Option<&str>, choice: &ModuleChoice) -> Result<String, CliError> {
    let m = ctx.module(algebra, choice)?;
    let opts = ctx.scan_options();
    let res = resolve(&m, opts.cutoff.max(opts.dmax))?;
    let periodicity = periodicity_in(&res, opts.dmax, IsoOptions { seed: opts.seed, trials: opts.trials })?;
    let mut table = res.table.clone();
    table.rows.truncate(opts.cutoff + 1);
    table.cutoff = opts.cutoff;
    let estimate = complexity_estimate(&table, Some(&periodicity))?;
    let growth = hilbert_growth(&table.betti()).ok();
    Ok(match ctx.global.format {
        Format::Json => to_json(&json!({
            "betti": table.betti(),
            "periodicity": periodicity,
            "complexity": estimate,
            "hilbert_growth": growth,
        })),
        Format::Csv => {
            let mut s = String::from("c,max_ratio,passes\n");
            for d in &estimate.diagnostics {
                let _ = writeln!(s, "{},{:.6},{}", d.c, d.max_ratio, d.passes);
            }
            s
        }
        Format::Text => format!(
            "c_hat {:?} (heuristic); certified lower bound {}; periodic {:?}\nfacts: {}\n",
            estimate.c_hat,
            estimate.certified_lower,
            estimate.periodic,
            estimate.certified_facts.join("; ")
        ),
    })
}

fn lemma_certificate(
    ctx: &Ctx,
    a: &Arc<AlgebraTable>,
    kind: FamilyKind,
) -> Result<(FamilyReport, Certificate), CliError> {
    // the family must make sense on this algebra at all
    family_member(a, kind, a.field().one())
        .map_err(|e| CliError::unsupported(format!("family {kind} does not apply to {}: {e}", a.name())))?;
    let fields = ctx.scan_fields(a)?;
    let report = scan_family(a, kind, &fields, &ctx.scan_options())?;
    let cert = certify_wild_lemma(a, &report);
    Ok((report, cert))
}

fn certificate(
    ctx: &Ctx,
    a: &Arc<AlgebraTable>,
    strategy: Strategy,
    kind: FamilyKind,
) -> Result<Certificate, CliError> {
    match strategy {
        Strategy::LemmaFamily => Ok(lemma_certificate(ctx, a, kind)?.1),
        Strategy::TheoremGrowth => Ok(certify_wild_theorem(a, &ctx.scan_options())?),
        Strategy::Factor => Err(CliError::unsupported("the factor strategy needs a quotient strategy")),
    }
}

fn cmd_certify(
    ctx: &Ctx,
    reference: &str,
    strategy: Strategy,
    kind: FamilyKind,
    ideal: &[String],
    quotient: Option<&str>,
    quotient_strategy: Strategy,
) -> Result<String, CliError> {
    let a = ctx.registry.load(reference, None)?;
    let cert = match strategy {
        Strategy::Factor => {
            let (Some(q), false) = (quotient, ideal.is_empty()) else {
                return Err(CliError::unsupported("the factor strategy needs --ideal and --quotient"));
            };
            let qa = ctx.registry.load(q, None)?;
            let known = certificate(ctx, &qa, quotient_strategy, kind)?;
            certify_factor_rule(&a, ideal, &known)?
        }
        s => certificate(ctx, &a, s, kind)?,
    };
    let trail = ctx.global.verify_trail.then(|| verify_trail(&cert, &|n: &str| ctx.registry.resolve(n)));
    Ok(match ctx.global.format {
        Format::Json => match &trail {
            Some(t) => to_json(&json!({ "certificate": cert, "trail_check": {
                "items": t.len(),
                "all_ok": t.iter().all(|c| c.ok),
                "failures": t.iter().filter(|c| !c.ok).collect::<Vec<_>>(),
            }})),
            None => to_json(&cert),
        },
        Format::Csv => {
            let mut s = String::from("index,kind,summary\n");
            for (i, e) in cert.evidence.iter().enumerate() {
                let v = serde_json::to_value(e).unwrap();
                let _ = writeln!(s, "{i},{},{}", v["kind"].as_str().unwrap_or(""), cert_line(&v));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "verdict {:?} for {} ({})", cert.verdict, cert.algebra, cert.strategy);
            let _ = writeln!(s, "evidence items {}", cert.evidence.len());
            for h in &cert.unverified_hypotheses {
                let _ = writeln!(s, "hypothesis: {h}");
            }
            for n in &cert.notes {
                let _ = writeln!(s, "note: {n}");
            }
            if let Some(t) = &trail {
                let _ = writeln!(s, "trail re-verified: {}/{} ok", t.iter().filter(|c| c.ok).count(), t.len());
            }
            s
        }
    })
}

fn cert_line(v: &serde_json::Value) -> String {
    let field = v.get("field").and_then(|x| x.as_str()).unwrap_or("");
    let lambda = v.get("lambda").map(|x| x.to_string()).unwrap_or_default();
    format!("{field} {lambda}").trim().replace(',', ";")
}

fn cmd_scan(ctx: &Ctx, reference: &str, kind: FamilyKind) -> Result<String, CliError> {
    let a = ctx.registry.load(reference, None)?;
    let (report, cert) = lemma_certificate(ctx, &a, kind)?;
    Ok(match ctx.global.format {
        Format::Json => to_json(&json!({ "report": report, "verdict": cert.verdict })),
        Format::Csv => {
            let mut s = String::from(
                "field,lambda,indecomposability,iso_class,period,growth_evidence,tau_fixed,flagged,betti\n",
            );
            for scan in &report.fields {
                for m in &scan.members {
                    let betti: Vec<String> = m.betti.iter().map(|b| b.to_string()).collect();
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{},{},{},{}",
                        scan.field,
                        m.lambda_display,
                        m.indecomposability,
                        m.iso_class,
                        m.periodicity.period.map(|d| d.to_string()).unwrap_or_default(),
                        m.complexity.growth_evidence,
                        m.tau_fixed.map(|t| t.to_string()).unwrap_or_default(),
                        m.flagged.is_some(),
                        betti.join(" ")
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for scan in &report.fields {
                let _ = writeln!(
                    s,
                    "{} over {}: {} classes among {} members",
                    kind,
                    scan.field,
                    scan.classes,
                    scan.members.len()
                );
            }
            let _ = writeln!(s, "verdict {:?}", cert.verdict);
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        execute(std::iter::once("reptype").chain(args.iter().copied()))
    }

    #[test]
    fn algebra_check_reports_dimension() {
        let o = run(&["algebra-check", "corpus:dihedral8"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["dim"], 8);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["algebra-check", "corpus:missing"]).code, EXIT_INPUT);
        assert_eq!(run(&["algebra-check", "/nonexistent/file.toml"]).code, EXIT_INPUT);
        assert_eq!(run(&["resolve", "corpus:kleinfour", "--cutoff", "0"]).code, EXIT_INPUT);
        assert_eq!(run(&["certify", "corpus:poly_trunc_2", "--strategy", "lemma-family"]).code, EXIT_UNSUPPORTED);
    }

    #[test]
    fn resolve_csv() {
        let o = run(&["resolve", "corpus:poly_trunc_2", "--format", "text", "--cutoff", "8", "--dmax", "3"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("periodic d=1"), "{}", o.stdout);
        let o = run(&["resolve", "corpus:kleinfour", "--regular", "--format", "csv", "--cutoff", "3", "--dmax", "2"]);
        assert!(o.stdout.contains("\n1,0,0,0\n"), "{}", o.stdout);
    }
}
