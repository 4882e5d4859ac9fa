//! Command-line front end.
//!
//! Exit status: 0 when every requested check passes, 1 when one fails or is
//! not certified, 2 on unreadable or malformed input.

pub mod document;
pub mod report;

pub use document::{DefinitionDocument, DocumentError, Loaded};
pub use report::{Entry, Report};

use crate::algebra::{StructureConstantAlgebra, EXHAUSTIVE_LIMIT};
use crate::corpus::{self, CorpusError};
use crate::crossed::{build_unchecked, extract_crossed_system, CrossedProduct, CrossedSystem};
use crate::graded::{GradedAlgebra, ObjectUnits};
use crate::groupoid::FiniteGroupoid;
use crate::report::{ValidationReport, Verdict, Violation};
use crate::scalar::{poly_irreducible, Elem, Field, Irreducibility};
use crate::separability::{
    casimir_construct, casimir_verify, exhaustive_casimir_count, separability_of_crossed, separability_of_graded,
    trace_solution_from_casimir, CasimirFamily, SectionData, Sections, SeparabilityReport,
};
use clap::{Parser, Subcommand, ValueEnum};
use document::ScalarValue;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

/// Random trials per arrow when searching for object-invertible elements.
const UNIT_TRIALS: usize = 64;
/// Largest tensor-family space enumerated next to the Casimir construction.
const CASIMIR_ENUMERATION_LIMIT: u128 = 1 << 16;

#[derive(Debug, Parser)]
#[command(name = "gcross", version, about = "Groupoid-graded rings, object crossed products and separability")]
pub struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Record wall time per check (excluded otherwise, so reports stay
    /// byte-identical across runs).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Grading,
    ObjectUnital,
    StronglyGraded,
    CrossedProduct,
    Skew,
    Twisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    TraceForm,
    Exhaustive,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the schema and every axiom of a definition file.
    Validate { path: PathBuf },
    /// Run one structural check.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Decide separability of R over its degree-zero part.
    Separability {
        path: PathBuf,
        /// Also build and verify the Casimir family.
        #[arg(long)]
        construct_casimir: bool,
        /// Report verdicts and witnesses only, without solutions or families.
        #[arg(long)]
        verify_only: bool,
        /// Recover trace solutions from the constructed Casimir family.
        #[arg(long)]
        from_casimir: bool,
    },
    /// Decide whether the algebra is simple.
    Simplicity {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Write a corpus example as a definition file.
    Example {
        name: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Render a saved structured report.
    Report { path: PathBuf },
}

/// What a run prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 }
    }
}

/// Parses arguments and runs one verb without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Example { name, emit } => return cmd_example(cli, name, emit.as_ref()),
        Command::Report { path } => return cmd_report(cli, path),
        Command::Validate { path } => read_document(path).map(|doc| cmd_validate(cli, &doc, path)),
        Command::Check { path, property } => read_document(path).map(|doc| cmd_check(cli, &doc, path, *property)),
        Command::Separability { path, construct_casimir, verify_only, from_casimir } => read_document(path).map(|doc| {
            let flags = SeparabilityFlags { construct_casimir: *construct_casimir, verify_only: *verify_only, from_casimir: *from_casimir };
            cmd_separability(cli, &doc, path, flags)
        }),
        Command::Simplicity { path, method } => read_document(path).map(|doc| cmd_simplicity(cli, &doc, path, *method)),
    };
    match result.and_then(|r| r) {
        Ok(report) => render(cli.format, &report),
        Err(e) => Outcome::input_error(e),
    }
}

fn render(format: Format, report: &Report) -> Outcome {
    let stdout = match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_structured(),
    };
    Outcome { stdout, stderr: String::new(), code: report.exit_status }
}

fn read_document(path: &PathBuf) -> Result<DefinitionDocument, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|e| DocumentError::Syntax(format!("{}: {e}", path.display())))?;
    DefinitionDocument::parse(&text)
}

fn input_name(doc: &DefinitionDocument, path: &std::path::Path) -> Option<String> {
    if doc.metadata.name.is_empty() {
        path.file_name().map(|n| n.to_string_lossy().into_owned())
    } else {
        Some(doc.metadata.name.clone())
    }
}

/// Runs `f` and records its wall time on the entry when asked.
fn timed(timings: bool, f: impl FnOnce() -> Entry) -> Entry {
    let t = Instant::now();
    let mut e = f();
    if timings {
        e.timing_us = Some(t.elapsed().as_micros() as u64);
    }
    e
}

pub fn vector_json(v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|c| serde_json::to_value(ScalarValue::from_elem(c)).expect("plain data")).collect())
}

/// A document that passed validation.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Subject {
    Crossed(CrossedProduct),
    Graded(GradedAlgebra),
}

impl Subject {
    pub fn graded(&self) -> &GradedAlgebra {
        match self {
            Subject::Crossed(cp) => cp.graded(),
            Subject::Graded(r) => r,
        }
    }

    pub fn algebra(&self) -> &StructureConstantAlgebra {
        self.graded().algebra()
    }
}

/// Entries, warnings, and the subject when every stage passed.
pub type Validated = (Vec<Entry>, Vec<String>, Option<Subject>);

/// Every axiom check applicable to the document, in order, and the subject
/// when all of them pass. Stops at the first failing stage since later
/// stages assume earlier ones.
pub fn validate_document(doc: &DefinitionDocument, timings: bool) -> Result<Validated, DocumentError> {
    let loaded = doc.load()?;
    let mut entries = Vec::new();
    let mut warnings = Vec::new();
    let field = doc.field.to_field()?;
    if let Some(e) = field_entry(&field, doc.metadata.assertions.irreducible) {
        let ok = e.verdict.is_pass();
        entries.push(e);
        if !ok {
            return Ok((entries, warnings, None));
        }
    }
    let groupoid = match &loaded {
        Loaded::System { groupoid, .. } | Loaded::Graded { groupoid, .. } => groupoid,
    };
    let ge = timed(timings, || Entry::from_validation("groupoid", groupoid.validate()));
    let ok = ge.verdict.is_pass();
    entries.push(ge);
    if !ok {
        return Ok((entries, warnings, None));
    }
    match loaded {
        Loaded::System { groupoid, fibers, action, cocycle } => {
            let fe = timed(timings, || {
                let mut r = ValidationReport::new();
                for (&e, a) in &fibers {
                    r.extend_prefixed(&format!("fiber {e}: "), a.validate());
                    if a.unit().is_none() && !r.has("unit") {
                        r.push("unit", vec![e], format!("fiber at {e} has no identity"));
                    }
                }
                Entry::from_validation("fibers", r)
            });
            let ok = fe.verdict.is_pass();
            entries.push(fe);
            if !ok {
                return Ok((entries, warnings, None));
            }
            let sys = CrossedSystem::new(groupoid, fibers, action, cocycle)?;
            let se = timed(timings, || Entry::from_validation("crossed-system", sys.validate()));
            let ok = se.verdict.is_pass();
            entries.push(se);
            if !ok {
                return Ok((entries, warnings, None));
            }
            let cp = build_unchecked(&sys)?;
            let ae = timed(timings, || Entry::from_validation("associativity", cp.algebra().validate()));
            let ok = ae.verdict.is_pass();
            entries.push(ae);
            Ok((entries, warnings, ok.then_some(Subject::Crossed(cp))))
        }
        Loaded::Graded { groupoid, algebra, degrees } => {
            let ae = timed(timings, || Entry::from_validation("algebra", algebra.validate()));
            let ok = ae.verdict.is_pass();
            entries.push(ae);
            if !ok {
                return Ok((entries, warnings, None));
            }
            let r = GradedAlgebra::new(groupoid, algebra, degrees)?;
            let ge = timed(timings, || Entry::from_validation("grading", r.check_grading()));
            let ok = ge.verdict.is_pass();
            entries.push(ge);
            if !ok {
                return Ok((entries, warnings, None));
            }
            let (r, warning) = r.auto_restrict()?;
            warnings.extend(warning);
            Ok((entries, warnings, Some(Subject::Graded(r))))
        }
    }
}

/// Irreducibility of every extension modulus in the tower; `None` for ℚ
/// and prime fields.
fn field_entry(field: &Field, asserted: Option<bool>) -> Option<Entry> {
    let mut f = field;
    let mut worst = Irreducibility::Yes;
    let mut any = false;
    while let (Some(base), Some(m)) = (f.base(), f.modulus()) {
        any = true;
        match poly_irreducible(base, m) {
            Ok(Irreducibility::No) | Err(_) => worst = Irreducibility::No,
            Ok(Irreducibility::Asserted) if worst == Irreducibility::Yes => worst = Irreducibility::Asserted,
            _ => {}
        }
        f = base;
    }
    if !any {
        return None;
    }
    Some(match (worst, asserted) {
        (Irreducibility::Yes, _) => Entry::new("field", Verdict::Pass).detail("modulus certified irreducible"),
        (Irreducibility::No, _) => Entry::new("field", Verdict::Fail).detail("modulus is reducible"),
        (Irreducibility::Asserted, Some(true)) => Entry::new("field", Verdict::Pass).detail("modulus irreducibility asserted"),
        (Irreducibility::Asserted, _) => {
            Entry::new("field", Verdict::Undecided).detail("modulus irreducibility could not be certified and is not asserted")
        }
    })
}

/// Validation for verbs that need a valid subject: failing entries go into
/// the report and `None` is returned.
fn prepare(cli: &Cli, doc: &DefinitionDocument, report: &mut Report) -> Result<Option<Subject>, DocumentError> {
    let (entries, warnings, subject) = validate_document(doc, cli.timings)?;
    report.warnings.extend(warnings);
    if subject.is_none() {
        for e in entries.into_iter().filter(|e| !e.verdict.is_pass()) {
            report.push(e);
        }
    }
    Ok(subject)
}

fn cmd_validate(cli: &Cli, doc: &DefinitionDocument, path: &std::path::Path) -> Result<Report, DocumentError> {
    let mut report = Report::new("validate", input_name(doc, path), cli.seed);
    let (entries, warnings, _) = validate_document(doc, cli.timings)?;
    report.warnings = warnings;
    for e in entries {
        report.push(e);
    }
    Ok(report)
}

fn units_json(g: &FiniteGroupoid, units: &BTreeMap<usize, Vec<Elem>>) -> Value {
    Value::Object(units.iter().map(|(&s, u)| (g.label(s).to_string(), vector_json(u))).collect())
}

fn object_units_entry(r: &GradedAlgebra) -> (Entry, ObjectUnits) {
    let (units, mut rep) = r.object_units_report();
    let objects = r.groupoid().objects().to_vec();
    if rep.is_ok() {
        for (a, &e) in objects.iter().enumerate() {
            for &f in &objects[a + 1..] {
                match r.check_restricted_unit(&units, &[e, f]) {
                    Ok(sub) => rep.violations.extend(sub.violations),
                    Err(err) => rep.push("restricted-unit", vec![e, f], err.to_string()),
                }
            }
        }
    }
    let e = Entry::from_validation("object-unital", rep).data(json!({ "units": units_json(r.groupoid(), &units.units) }));
    (e, units)
}

fn cmd_check(cli: &Cli, doc: &DefinitionDocument, path: &std::path::Path, property: Property) -> Result<Report, DocumentError> {
    let name = property.to_possible_value().expect("named").get_name().to_string();
    let mut report = Report::new(&format!("check {name}"), input_name(doc, path), cli.seed);
    let Some(subject) = prepare(cli, doc, &mut report)? else {
        return Ok(report);
    };
    let r = subject.graded();
    let g = r.groupoid();
    let entry = timed(cli.timings, || match property {
        Property::Grading => Entry::from_validation("grading", r.check_grading()),
        Property::ObjectUnital => object_units_entry(r).0,
        Property::StronglyGraded => {
            let (ue, units) = object_units_entry(r);
            if !ue.verdict.is_pass() {
                return Entry::new("strongly-graded", Verdict::Fail).detail("not object unital");
            }
            let sg = r.is_strongly_graded(&units);
            let mut e = Entry::new("strongly-graded", sg.verdict);
            for s in sg.failing() {
                e.witnesses.push(Violation::new(
                    "strongly-graded",
                    vec![s],
                    format!("1 of {} is not in R_{} R_{}", g.label(g.dst(s)), g.label(s), g.label(g.inv(s))),
                ));
            }
            e
        }
        Property::CrossedProduct => crossed_product_entry(cli, &subject),
        Property::Skew | Property::Twisted => presentation_entry(cli, &subject, property),
    });
    report.push(entry);
    Ok(report)
}

/// Verdict, units by arrow, and arrows left without a unit.
type FoundUnits = (Verdict, BTreeMap<usize, Vec<Elem>>, Vec<usize>);

/// Units `u_σ` of an object crossed-product presentation, found by the
/// bounded search on graded inputs.
fn find_units(cli: &Cli, subject: &Subject) -> Result<FoundUnits, String> {
    match subject {
        Subject::Crossed(cp) => Ok((Verdict::Pass, cp.canonical_units(), Vec::new())),
        Subject::Graded(r) => {
            let units = r.object_units().map_err(|e| e.to_string())?;
            let sec = r.is_object_crossed_product(&units, cli.seed, UNIT_TRIALS).map_err(|e| e.to_string())?;
            let us = sec.units.into_iter().map(|(s, (u, _))| (s, u)).collect();
            Ok((sec.verdict, us, sec.missing))
        }
    }
}

fn crossed_product_entry(cli: &Cli, subject: &Subject) -> Entry {
    let g = subject.graded().groupoid();
    match find_units(cli, subject) {
        Err(msg) => Entry::new("crossed-product", Verdict::Fail).detail(msg),
        Ok((verdict, units, missing)) => {
            let mut e = Entry::new("crossed-product", verdict).data(json!({ "units": units_json(g, &units) }));
            if !missing.is_empty() {
                let labels: Vec<&str> = missing.iter().map(|&s| g.label(s)).collect();
                e.detail = format!("no object-invertible element found in degrees {labels:?}");
                for s in missing {
                    e.witnesses.push(Violation::new("crossed-product", vec![s], "no object-invertible element found"));
                }
            }
            e
        }
    }
}

/// A crossed-product presentation: the document's own, or one extracted
/// from units found by search.
fn presentation(cli: &Cli, subject: &Subject) -> Result<CrossedProduct, (Verdict, String)> {
    match subject {
        Subject::Crossed(cp) => Ok(cp.clone()),
        Subject::Graded(r) => {
            let (verdict, units, _) = find_units(cli, subject).map_err(|m| (Verdict::Fail, m))?;
            if !verdict.is_pass() {
                return Err((Verdict::NotCertified, "no object crossed-product presentation found".into()));
            }
            extract_crossed_system(r, &units).map(|x| x.product).map_err(|e| (Verdict::Fail, e.to_string()))
        }
    }
}

fn presentation_entry(cli: &Cli, subject: &Subject, property: Property) -> Entry {
    let check = if property == Property::Skew { "skew" } else { "twisted" };
    let cp = match presentation(cli, subject) {
        Ok(cp) => cp,
        Err((v, msg)) => return Entry::new(check, v).detail(msg),
    };
    let sys = cp.system();
    let ok = if property == Property::Skew { sys.has_trivial_cocycle() } else { sys.has_trivial_action() && sys.has_central_cocycle() };
    let what = if property == Property::Skew { "trivial cocycle" } else { "trivial action and central cocycle" };
    match (ok, subject) {
        (true, _) => Entry::new(check, Verdict::Pass).detail(format!("presentation has {what}")),
        (false, Subject::Crossed(_)) => Entry::new(check, Verdict::Fail).detail(format!("presentation lacks {what}")),
        // another choice of units might still work
        (false, Subject::Graded(_)) => Entry::new(check, Verdict::NotCertified).detail(format!("found presentation lacks {what}")),
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct SeparabilityFlags {
    construct_casimir: bool,
    verify_only: bool,
    from_casimir: bool,
}

fn separability_entry(g: &FiniteGroupoid, rep: &SeparabilityReport, verify_only: bool) -> Entry {
    let mut e = Entry::new("separability", rep.verdict);
    let mut objects = Vec::new();
    for o in &rep.objects {
        if !o.verdict.is_pass() {
            e.witnesses.push(Violation::new("separability", vec![o.object], o.detail.clone()));
        }
        let mut v = json!({
            "object": g.label(o.object),
            "isotropy_size": o.isotropy_size,
            "center_dim": o.center_dim,
            "trace_rank": o.trace_rank,
            "verdict": o.verdict,
            "detail": o.detail,
        });
        if let (Some(z), false) = (&o.trace_solution, verify_only) {
            v["trace_solution"] = vector_json(z);
        }
        objects.push(v);
    }
    e.data = json!({ "objects": objects });
    e
}

fn fast_paths_entry(g: &FiniteGroupoid, rep: &SeparabilityReport, verify_only: bool) -> Option<Entry> {
    let fp = rep.fast_paths.as_ref()?;
    let mut e = Entry::new("fast-paths", Verdict::from_bool(fp.disagreements.is_empty()));
    for d in &fp.disagreements {
        e.witnesses.push(Violation::new("fast-paths", vec![], d.clone()));
    }
    let alpha: serde_json::Map<String, Value> = fp
        .alpha_sum
        .iter()
        .map(|(&o, a)| {
            let v = match a {
                Some(a) if !verify_only => vector_json(a),
                Some(_) => Value::Bool(true),
                None => Value::Bool(false),
            };
            (g.label(o).to_string(), v)
        })
        .collect();
    let mut data = json!({ "alpha_sum": alpha });
    if let Some(iso) = &fp.isotropy_order_unit {
        data["isotropy_order_unit"] = Value::Object(iso.iter().map(|(&o, &b)| (g.label(o).to_string(), Value::Bool(b))).collect());
    }
    Some(e.data(data))
}

pub fn family_json(cp: &CrossedProduct, fam: &CasimirFamily) -> Value {
    let g = cp.groupoid();
    let elements: serde_json::Map<String, Value> = fam
        .elements
        .iter()
        .map(|(&e, x)| {
            let terms: Vec<Value> = x
                .coeffs
                .iter()
                .filter(|(_, c)| !crate::scalar::vector::is_zero(cp.field(), c))
                .map(|(&(s, t), c)| json!({ "left": g.label(s), "right": g.label(t), "coefficient": vector_json(c) }))
                .collect();
            (g.label(e).to_string(), Value::Array(terms))
        })
        .collect();
    Value::Object(elements)
}

fn cmd_separability(
    cli: &Cli,
    doc: &DefinitionDocument,
    path: &std::path::Path,
    flags: SeparabilityFlags,
) -> Result<Report, DocumentError> {
    let mut report = Report::new("separability", input_name(doc, path), cli.seed);
    let Some(subject) = prepare(cli, doc, &mut report)? else {
        return Ok(report);
    };
    let cp = match &subject {
        Subject::Crossed(cp) => Some(cp.clone()),
        Subject::Graded(_) => presentation(cli, &subject).ok(),
    };
    let g = subject.graded().groupoid().clone();
    let t = Instant::now();
    let sep = match &cp {
        Some(cp) => separability_of_crossed(cp).map(|r| (None, r)),
        None => {
            let r = subject.graded();
            match r.object_units() {
                Ok(units) => separability_of_graded(r, &units).map(|(d, rep)| (Some(d), rep)),
                Err(e) => {
                    report.push(Entry::new("separability", Verdict::Fail).detail(e.to_string()));
                    return Ok(report);
                }
            }
        }
    };
    let rep = match sep {
        Ok((_, rep)) => rep,
        Err(e) => {
            report.push(Entry::new("separability", Verdict::Fail).detail(e.to_string()));
            return Ok(report);
        }
    };
    let mut e = separability_entry(&g, &rep, flags.verify_only);
    if cli.timings {
        e.timing_us = Some(t.elapsed().as_micros() as u64);
    }
    report.push(e);
    if let Some(fe) = fast_paths_entry(&g, &rep, flags.verify_only) {
        report.push(fe);
    }
    if !(flags.construct_casimir || flags.from_casimir) {
        return Ok(report);
    }
    let Some(cp) = cp else {
        report.push(Entry::new("casimir", Verdict::Undecided).detail("Casimir construction needs a crossed-product presentation"));
        return Ok(report);
    };
    let t = Instant::now();
    let family = casimir_construct(&cp, &rep);
    let count = exhaustive_casimir_count(&cp, CASIMIR_ENUMERATION_LIMIT);
    let mut ce = match &family {
        Ok(fam) => {
            let mut ce = Entry::from_validation("casimir", casimir_verify(&cp, fam));
            if !flags.verify_only {
                ce.data = json!({ "family": family_json(&cp, fam) });
            }
            ce
        }
        Err(err) => Entry::new("casimir", Verdict::Fail).detail(format!("no family constructed: {err}")),
    };
    if let Some(n) = count {
        if ce.data.is_null() {
            ce.data = json!({});
        }
        ce.data["enumerated_families"] = json!(n);
        if (n > 0) != family.is_ok() {
            ce.verdict = Verdict::Fail;
            ce.witnesses.push(Violation::new("casimir-enumeration", vec![], format!("{n} families found by enumeration")));
        }
    }
    if cli.timings {
        ce.timing_us = Some(t.elapsed().as_micros() as u64);
    }
    let separable = rep.verdict.is_pass();
    if flags.construct_casimir || !separable {
        // without a family there is nothing to derive from; the entry
        // records why
        report.push(ce);
    }
    if flags.from_casimir {
        let fe = timed(cli.timings, || match &family {
            Err(err) => Entry::new("casimir-trace", Verdict::Fail).detail(format!("no family: {err}")),
            Ok(fam) => match trace_solution_from_casimir(&cp, fam) {
                Err(err) => Entry::new("casimir-trace", Verdict::Fail).detail(err.to_string()),
                Ok(ds) => {
                    let units = cp.object_units();
                    let data = SectionData::canonical(&cp);
                    let sec = Sections::new(cp.graded(), &units, &data);
                    let mut rep = ValidationReport::new();
                    for (&o, d) in &ds {
                        if sec.trace(o, d).ok().as_deref() != Some(units.get(o)) {
                            rep.push("casimir-trace", vec![o], "tr(d) != 1");
                        }
                    }
                    let mut e = Entry::from_validation("casimir-trace", rep);
                    if !flags.verify_only {
                        let m: serde_json::Map<String, Value> = ds.iter().map(|(&o, d)| (g.label(o).to_string(), vector_json(d))).collect();
                        e.data = json!({ "trace_solutions": m });
                    }
                    e
                }
            },
        });
        report.push(fe);
    }
    Ok(report)
}

fn cmd_simplicity(cli: &Cli, doc: &DefinitionDocument, path: &std::path::Path, method: Method) -> Result<Report, DocumentError> {
    let mut report = Report::new("simplicity", input_name(doc, path), cli.seed);
    let Some(subject) = prepare(cli, doc, &mut report)? else {
        return Ok(report);
    };
    let a = subject.algebra();
    let e = timed(cli.timings, || {
        let s = match method {
            Method::Auto => a.is_simple(cli.seed),
            Method::TraceForm => a.is_simple_trace_form(cli.seed, 64),
            Method::Exhaustive => a.is_simple_exhaustive(EXHAUSTIVE_LIMIT),
        };
        let mut data = json!({ "method": s.method });
        let put = |data: &mut Value, k: &str, v: Value| data[k] = v;
        if let Some(d) = s.radical_dim {
            put(&mut data, "radical_dim", json!(d));
        }
        if let Some(d) = s.center_dim {
            put(&mut data, "center_dim", json!(d));
        }
        if let Some(v) = &s.generator {
            put(&mut data, "central_generator", vector_json(v));
        }
        if let Some(v) = &s.minimal_polynomial {
            put(&mut data, "minimal_polynomial", vector_json(v));
        }
        if let Some(i) = s.irreducibility {
            put(&mut data, "irreducibility", json!(i));
        }
        if let Some(w) = &s.witness_ideal {
            put(&mut data, "witness_ideal", Value::Array(w.iter().map(|v| vector_json(v)).collect()));
        }
        if let Some(n) = s.lines_checked {
            put(&mut data, "lines_checked", json!(n));
        }
        Entry::new("simplicity", s.verdict).detail(s.detail).data(data)
    });
    report.push(e);
    Ok(report)
}

/// The definition document of a corpus example.
pub fn example_document(name: &str) -> Result<DefinitionDocument, CorpusError> {
    let ex = corpus::example(name)?;
    let mut doc = DefinitionDocument::from_example(name, &ex);
    doc.metadata.description = match name {
        "cbrt2" => "conjugates of Q(cbrt 2) inside Q[x]/(x^6 + 108), one isomorphism per ordered pair".into(),
        "klein-galois" => "Q(sqrt 2, sqrt 3) with its Galois group".into(),
        "quaternion" => "rational quaternions as a twisted Klein-four ring".into(),
        "non-strong" => "Q[x]/(x^2) graded by C2 with x of odd degree".into(),
        "zero-fiber" => "M2(Q) graded by a union whose C2 part has zero fiber".into(),
        _ => String::new(),
    };
    Ok(doc)
}

fn cmd_example(cli: &Cli, name: &str, emit: Option<&PathBuf>) -> Outcome {
    let doc = match example_document(name) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(e),
    };
    let text = doc.to_json();
    let Some(path) = emit else {
        return Outcome { stdout: text, stderr: String::new(), code: 0 };
    };
    if let Err(e) = std::fs::write(path, &text) {
        return Outcome::input_error(format!("{}: {e}", path.display()));
    }
    let mut report = Report::new("example", Some(name.to_string()), cli.seed);
    report.push(Entry::new("emit", Verdict::Pass).detail(format!("wrote {}", path.display())));
    render(cli.format, &report)
}

fn cmd_report(cli: &Cli, path: &PathBuf) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
    };
    match Report::parse(&text) {
        Ok(r) => render(cli.format, &r),
        Err(e) => Outcome::input_error(format!("malformed report: {e}")),
    }
}
