//! `trias`: verify, analyse and build BiHom-associative trialgebras from
//! structure-constant documents.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use trias_core::algebra::{full_report, parse_algebra, parse_operator, serialize_algebra, serialize_operator, AxiomReport};
use trias_core::catalog::{
    catalog, catalog_get, catalog_verify, catalog_verify_all, verify_isomorphism, CatalogReport, EntryReport,
};
use trias_core::centroids::centroid_analysis;
use trias_core::derivations::{derivation_space, matrix_strings};
use trias_core::quadric::Component;
use trias_core::transforms::{
    direct_sum, is_morphism, rota_baxter_check, serialize_bihom_algebra, total_sum, transport, RotaBaxterData,
};
use trias_core::{AxiomId, BiHomTrialgebra, Error, LinearMap, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Parser)]
#[command(name = "trias", version, about = "Exact computations for BiHom-associative trialgebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Exit with status 1 when a check fails.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Axiom and multiplicativity report for an algebra document.
    Verify { file: PathBuf },
    /// Derivation space.
    Der { file: PathBuf },
    /// Centroid analysis.
    Cent { file: PathBuf },
    /// The built-in classification catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Check that a map is an isomorphism between two algebras.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Build a new algebra document.
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Rota–Baxter operators.
    Rb {
        #[command(subcommand)]
        action: RbCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    /// Print the canonical document of an entry.
    Get { id: String },
    /// Verify one entry, or every entry with --all.
    Verify {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    DirectSum {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    TotalSum {
        a: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    Transport {
        a: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum RbCmd {
    Verify {
        a: PathBuf,
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        weight: String,
    },
}

/// Input problems; reported on one line with exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    text: String,
    structured: String,
    clean: bool,
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<BiHomTrialgebra, InputError> {
    parse_algebra(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path, dim: usize) -> Result<LinearMap, InputError> {
    parse_operator(&read(path)?, Some(dim)).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, contents: &str) -> Result<(), InputError> {
    std::fs::write(path, contents).map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn structural_ok(r: &AxiomReport) -> bool {
    AxiomId::STRUCTURAL.iter().all(|id| r.holds(*id))
}

fn axiom_lines(out: &mut String, r: &AxiomReport) {
    for res in &r.results {
        let tag = if res.holds { "PASS" } else { "FAIL" };
        let _ = write!(out, "  {tag} {:<4} {}", res.axiom.to_string(), res.axiom.equation());
        if let Some(w) = res.witnesses.first() {
            let _ = write!(
                out,
                "  [basis {:?}: {} vs {}; {} failing]",
                w.indices,
                vector(&w.lhs),
                vector(&w.rhs),
                res.witnesses.len()
            );
        }
        out.push('\n');
    }
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    algebra: &'a str,
    dim: usize,
    axioms_hold: bool,
    multiplicative: bool,
    report: &'a AxiomReport,
}

fn cmd_verify(file: &Path) -> Result<Outcome, InputError> {
    let a = load_algebra(file)?;
    let report = full_report(&a);
    let axioms_hold = structural_ok(&report);
    let multiplicative = AxiomId::MULTIPLICATIVE.iter().all(|id| report.holds(*id));
    let mut text = format!("{} (dim {})\n", a.name, a.dim);
    axiom_lines(&mut text, &report);
    let _ = writeln!(text, "axioms: {}", if axioms_hold { "all hold" } else { "violated" });
    let _ = writeln!(text, "multiplicative: {}", if multiplicative { "yes" } else { "no" });
    let structured = json(&VerifyOut { algebra: &a.name, dim: a.dim, axioms_hold, multiplicative, report: &report });
    Ok(Outcome { text, structured, clean: axioms_hold })
}

#[derive(Serialize)]
struct DerOut {
    algebra: String,
    dim: usize,
    basis: Vec<Vec<Vec<String>>>,
}

fn cmd_der(file: &Path) -> Result<Outcome, InputError> {
    let a = load_algebra(file)?;
    let space = derivation_space(&a);
    let mut text = format!("{}: dim Der = {}\n", a.name, space.dim);
    for d in &space.basis {
        let _ = writeln!(text, "  {}", d.describe());
    }
    let structured = json(&DerOut {
        algebra: a.name.clone(),
        dim: space.dim,
        basis: space.basis.iter().map(matrix_strings).collect(),
    });
    Ok(Outcome { text, structured, clean: true })
}

#[derive(Serialize)]
struct CentOut {
    algebra: String,
    linear_dim: usize,
    linear_basis: Vec<Vec<Vec<String>>>,
    obstruction: Vec<String>,
    identically_zero: bool,
    solution: Option<Vec<Component>>,
    dim: Option<usize>,
}

fn component_text(c: &Component) -> String {
    match c {
        Component::Everything => "every t".into(),
        Component::Line { equation, .. } => format!("line {equation}"),
        Component::Conic { equation, .. } => format!("conic {equation}"),
        Component::Point { t } => format!("point ({})", t.join(", ")),
        Component::Algebraic { t1_poly, t2_poly } => match t2_poly {
            Some(p) => format!("algebraic points with {t1_poly} = 0, {p} = 0"),
            None => format!("algebraic points with {t1_poly} = 0"),
        },
    }
}

fn cmd_cent(file: &Path) -> Result<Outcome, InputError> {
    let a = load_algebra(file)?;
    let s = centroid_analysis(&a);
    let mut text = format!("{}: linear part has dim {}\n", a.name, s.parameters());
    for (i, b) in s.linear_basis.iter().enumerate() {
        let _ = writeln!(text, "  t{}: {}", i + 1, b.describe());
    }
    if s.identically_zero {
        text.push_str("obstruction: identically zero\n");
    } else {
        let polys: Vec<String> = s.obstruction.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "obstruction: {}", polys.join(", "));
    }
    if let Some(sol) = &s.solution {
        let parts: Vec<String> = sol.iter().map(component_text).collect();
        let _ = writeln!(text, "zero set: {}", parts.join("; "));
    }
    match s.dim {
        Some(d) => {
            let _ = writeln!(text, "dim Cent = {d}");
        }
        None => {
            let _ = writeln!(text, "dim Cent: unresolved ({} parameters)", s.parameters());
        }
    }
    let structured = json(&CentOut {
        algebra: a.name.clone(),
        linear_dim: s.parameters(),
        linear_basis: s.linear_basis.iter().map(matrix_strings).collect(),
        obstruction: s.obstruction.iter().map(ToString::to_string).collect(),
        identically_zero: s.identically_zero,
        solution: s.solution.clone(),
        dim: s.dim,
    });
    Ok(Outcome { text, structured, clean: s.dim.is_some() })
}

fn entry_text(out: &mut String, e: &EntryReport) {
    let passes: Vec<String> = e
        .readings
        .iter()
        .map(|r| format!("{} {}", r.name, if r.passes { "ok" } else { "FAILS" }))
        .collect();
    let _ = writeln!(
        out,
        "{}: axioms [{}], paths {}, der {} ({}), cent {} ({}), errata {}",
        e.id,
        passes.join(", "),
        if e.readings.iter().all(|r| r.paths_agree) { "agree" } else { "DISAGREE" },
        e.derivation.computed_dim,
        e.derivation.status.as_str(),
        e.centroid.computed_dim.map_or("?".into(), |d| d.to_string()),
        e.centroid.status.as_str(),
        e.errata.len()
    );
    for r in &e.errata {
        let _ = writeln!(out, "  {:?} {}: expected {}, computed {}", r.kind, r.check, r.expected, r.computed);
    }
}

fn cmd_catalog(action: &CatalogCmd) -> Result<Outcome, InputError> {
    match action {
        CatalogCmd::List => {
            let ids: Vec<&str> = catalog().iter().map(|e| e.id.as_str()).collect();
            let mut text = String::new();
            for e in catalog() {
                let _ = writeln!(text, "{}\tdim {}", e.id, e.algebra.dim);
            }
            Ok(Outcome { text, structured: json(&ids), clean: true })
        }
        CatalogCmd::Get { id } => {
            let e = catalog_get(id)?;
            let doc = serialize_algebra(&e.algebra);
            Ok(Outcome { text: doc.clone(), structured: doc, clean: true })
        }
        CatalogCmd::Verify { id, all } => {
            let report = match (id, all) {
                (_, true) => catalog_verify_all(),
                (Some(id), false) => {
                    let e = catalog_verify(id)?;
                    let errata = e.errata.clone();
                    CatalogReport { entries: vec![e], errata }
                }
                (None, false) => return Err(InputError("catalog verify needs an id or --all".into())),
            };
            let mut text = String::new();
            for e in &report.entries {
                entry_text(&mut text, e);
            }
            let _ = writeln!(text, "{} entries, {} errata records", report.entries.len(), report.errata.len());
            let clean = report.errata.is_empty();
            Ok(Outcome { text, structured: json(&report), clean })
        }
    }
}

#[derive(Serialize)]
struct IsoOut<'a> {
    a: &'a str,
    b: &'a str,
    invertible: bool,
    isomorphism: bool,
    violations: Vec<String>,
}

fn cmd_iso(a: &Path, b: &Path, map: &Path) -> Result<Outcome, InputError> {
    let (a, b) = (load_algebra(a)?, load_algebra(b)?);
    let psi = load_map(map, a.dim)?;
    let iso = verify_isomorphism(&a, &b, &psi)?;
    let morph = is_morphism(&psi, &a, &b)?;
    let invertible = psi.rank() == a.dim;
    let violations: Vec<String> = morph
        .violations
        .iter()
        .map(|v| format!("{} at {:?}: {} vs {}", v.condition, v.witness.indices, vector(&v.witness.lhs), vector(&v.witness.rhs)))
        .collect();
    let mut text = format!(
        "{} -> {}: {}\n",
        a.name,
        b.name,
        if iso { "isomorphism" } else { "not an isomorphism" }
    );
    if !invertible {
        text.push_str("  map is singular\n");
    }
    for v in &violations {
        let _ = writeln!(text, "  {v}");
    }
    let structured = json(&IsoOut { a: &a.name, b: &b.name, invertible, isomorphism: iso, violations });
    Ok(Outcome { text, structured, clean: iso })
}

#[derive(Serialize)]
struct ConstructOut<'a> {
    output: String,
    name: &'a str,
    dim: usize,
    holds: bool,
}

fn cmd_construct(kind: &ConstructCmd) -> Result<Outcome, InputError> {
    let (path, name, dim, doc, holds, what) = match kind {
        ConstructCmd::DirectSum { a, b, output } => {
            let s = direct_sum(&load_algebra(a)?, &load_algebra(b)?);
            let ok = structural_ok(&full_report(&s));
            (output, s.name.clone(), s.dim, serialize_algebra(&s), ok, "axioms hold")
        }
        ConstructCmd::TotalSum { a, output } => {
            let t = total_sum(&load_algebra(a)?);
            let ok = t.is_bihom_associative();
            (output, t.name.clone(), t.dim, serialize_bihom_algebra(&t), ok, "BiHom-associative")
        }
        ConstructCmd::Transport { a, map, output } => {
            let a = load_algebra(a)?;
            let psi = load_map(map, a.dim)?;
            let t = transport(&a, &psi)?;
            let ok = structural_ok(&full_report(&t));
            (output, t.name.clone(), t.dim, serialize_algebra(&t), ok, "axioms hold")
        }
    };
    write_out(path, &doc)?;
    let text = format!("wrote {} ({name}, dim {dim}); {what}: {}\n", path.display(), if holds { "yes" } else { "no" });
    let structured = json(&ConstructOut { output: path.display().to_string(), name: &name, dim, holds });
    Ok(Outcome { text, structured, clean: holds })
}

#[derive(Serialize)]
struct RbOut<'a> {
    algebra: &'a str,
    weight: String,
    operator: String,
    holds: bool,
    violations: &'a [trias_core::algebra::Violation],
}

fn cmd_rb(action: &RbCmd) -> Result<Outcome, InputError> {
    let RbCmd::Verify { a, op, weight } = action;
    let a = load_algebra(a)?;
    let r = load_map(op, a.dim)?;
    let weight: Scalar = weight.parse()?;
    let rb = RotaBaxterData { r, weight };
    let report = rota_baxter_check(&a, &rb)?;
    let mut text = format!(
        "{}: {} is {}a Rota–Baxter operator of weight {}\n",
        a.name,
        rb.r.describe(),
        if report.holds { "" } else { "not " },
        rb.weight
    );
    for v in &report.violations {
        let _ = writeln!(
            text,
            "  {} at {:?}: {} vs {}",
            v.condition,
            v.witness.indices,
            vector(&v.witness.lhs),
            vector(&v.witness.rhs)
        );
    }
    let structured = json(&RbOut {
        algebra: &a.name,
        weight: rb.weight.to_string(),
        operator: serialize_operator(&rb.r).trim_end().to_string(),
        holds: report.holds,
        violations: &report.violations,
    });
    Ok(Outcome { text, structured, clean: report.holds })
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Verify { file } => cmd_verify(file),
        Command::Der { file } => cmd_der(file),
        Command::Cent { file } => cmd_cent(file),
        Command::Catalog { action } => cmd_catalog(action),
        Command::Iso { a, b, map } => cmd_iso(a, b, map),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Rb { action } => cmd_rb(action),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", if cli.format == Format::Structured { &out.structured } else { &out.text });
            if cli.strict && !out.clean {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg.lines().next().unwrap_or_default());
            ExitCode::from(2)
        }
    }
}
