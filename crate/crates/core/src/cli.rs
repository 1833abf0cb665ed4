//! The `toric-contact` command line.
//!
//! Every subcommand reads one document (a path, or `@name` for a corpus
//! entry) and prints a JSON report; `--format table` renders the same report
//! as text. Exit codes: 0 success, 2 pipelines disagree, 64 unparsable input
//! or arguments, 65 input that fails validation, 66 a Reeb vector that is not
//! generic enough.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::contact::{
    contact_betti_direct, contact_betti_from_delta, default_direction, orbit_families, validate_diagram, c1_order, C1Order,
    ContactError, ReebVector, ToricDiagram,
};
use crate::corpus;
use crate::document::{parse_document, parse_triangulation, DocumentError, Shape};
use crate::ehrhart::{check_reciprocity, delta_vector, quasipolynomial, reflexivity};
use crate::exactlat::{gcd_all, Int, Rat};
use crate::format::{parse_int_list, parse_rat, parse_rat_list, rat_to_string};
use crate::graded::{GradedDimension, Window};
use crate::polytope::{LabelledPolytope, PolytopeError, Region};
use crate::prequant::{
    diagram_from_labelled, hc_by_period, hc_from_quotient, hc_smooth_base, is_good_cone, orbifold_cohomology_of_base,
    prequantization, quotient_polytope, PrequantError, QuotientData,
};
use crate::resolution::{
    box_elements, fan_over, hc_contributions, hc_from_resolution, is_strictly_convex, moment_polyhedron, orbifold_poincare,
    crepant_star_points, star_triangulation, stapledon_check, support_function, trivial_triangulation, validate_triangulation, ResolutionError,
    SupportFunction, Triangulation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_PARSE: i32 = 64;
pub const EXIT_VALIDATION: i32 = 65;
pub const EXIT_GENERICITY: i32 = 66;

/// Perturbation parameters used by `crosscheck` for its generic Reeb vectors.
const CROSSCHECK_PERTURBATIONS: [(i64, i64); 3] = [(1, 11), (1, 7), (-2, 13)];

#[derive(Debug, Parser)]
#[command(name = "toric-contact", version, about = "Exact invariants of toric contact manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a document is a toric diagram or a good labelled polytope.
    Validate(Common),
    /// Ehrhart quasi-polynomial and δ-vector.
    Ehrhart(Common),
    /// δ-vector only.
    Delta(Common),
    /// Contact Betti numbers from the δ-vector and/or Reeb orbit enumeration.
    Cb(CbArgs),
    /// Reeb orbit families and the degrees of their iterates.
    Orbits(ReebArgs),
    /// Triangulation, fan, support function and box elements of a resolution.
    Resolve(ResolveArgs),
    /// Orbifold cohomology of a resolution.
    Orbifold(ResolveArgs),
    /// Base orbifold of a Reeb circle action and its twisted sectors.
    Quotient(QuotientArgs),
    /// Contact homology from a resolution (diagrams) or from the base (labelled polytopes).
    Hc(HcArgs),
    /// Run every applicable pipeline and compare.
    Crosscheck(WindowArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pipeline {
    Delta,
    Direct,
    Both,
}

#[derive(Debug, Args)]
struct Common {
    /// Document path, or @name for a built-in example.
    input: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct WindowArgs {
    #[command(flatten)]
    common: Common,
    /// Degree window lo:hi (default: -2+2/m : 2n+6).
    #[arg(long)]
    window: Option<String>,
}

#[derive(Debug, Args)]
struct ReebArgs {
    #[command(flatten)]
    window: WindowArgs,
    /// Base point of the Reeb vector in the diagram, "p/q,p/q,...".
    #[arg(long)]
    reeb: Option<String>,
    /// Perturbation t; the Reeb vector moves along (1, t, t^2, ...).
    #[arg(long, default_value = "1/11")]
    perturb: String,
}

#[derive(Debug, Args)]
struct CbArgs {
    #[command(flatten)]
    reeb: ReebArgs,
    #[arg(long, value_enum, default_value = "both")]
    pipeline: Pipeline,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct TriangulationSource {
    /// Triangulation document (path or @name); indices run over the
    /// document's vertices followed by the extra points.
    #[arg(long)]
    triangulation: Option<String>,
    /// Star triangulation from an interior point "p/q,p/q,...".
    #[arg(long)]
    star: Option<String>,
    /// The diagram itself, or a pulling triangulation without new vertices.
    #[arg(long)]
    trivial: bool,
}

#[derive(Debug, Args)]
struct ResolveArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    source: TriangulationSource,
    /// Support function values on the rays, "a,b,..." in point order.
    #[arg(long)]
    ray_values: Option<String>,
}

#[derive(Debug, Args)]
struct QuotientArgs {
    #[command(flatten)]
    window: WindowArgs,
    /// Integral Reeb vector "w1,...,wn,r".
    #[arg(long)]
    reeb: Option<String>,
}

#[derive(Debug, Args)]
struct HcArgs {
    #[command(flatten)]
    window: WindowArgs,
    #[command(flatten)]
    source: TriangulationSource,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Validation(String),
    Genericity(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Validation(_) => EXIT_VALIDATION,
            Failure::Genericity(_) => EXIT_GENERICITY,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Validation(m) | Failure::Genericity(m) => m,
        }
    }
}

impl From<ContactError> for Failure {
    fn from(e: ContactError) -> Self {
        match e {
            ContactError::GenericityFailure { .. } => Failure::Genericity(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<PolytopeError> for Failure {
    fn from(e: PolytopeError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Syntax(m) => Failure::Parse(m),
            DocumentError::Polytope(p) => p.into(),
        }
    }
}

impl From<ResolutionError> for Failure {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::Contact(c) => c.into(),
            e => Failure::Validation(e.to_string()),
        }
    }
}

impl From<PrequantError> for Failure {
    fn from(e: PrequantError) -> Self {
        match e {
            PrequantError::Contact(c) => c.into(),
            e => Failure::Validation(e.to_string()),
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.command.format();
    match dispatch(cli.command) {
        Ok((report, agreed)) => {
            let stdout = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("JSON values serialize")),
                Format::Table => render_table(&report),
            };
            let code = if agreed { EXIT_OK } else { EXIT_MISMATCH };
            let stderr = if agreed { String::new() } else { "pipelines disagree\n".to_string() };
            Outcome { code, stdout, stderr }
        }
        Err(f) => Outcome { code: f.code(), stdout: String::new(), stderr: format!("error: {}\n", f.message()) },
    }
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Validate(c) | Command::Ehrhart(c) | Command::Delta(c) => c.format,
            Command::Cb(a) => a.reeb.window.common.format,
            Command::Orbits(a) => a.window.common.format,
            Command::Resolve(a) | Command::Orbifold(a) => a.common.format,
            Command::Quotient(a) => a.window.common.format,
            Command::Hc(a) => a.window.common.format,
            Command::Crosscheck(a) => a.common.format,
        }
    }
}

fn dispatch(command: Command) -> Result<(Value, bool), Failure> {
    let plain = |v: Value| Ok((v, true));
    match command {
        Command::Validate(c) => plain(validate(&load(&c.input)?)?),
        Command::Ehrhart(c) => plain(ehrhart(&load(&c.input)?, true)?),
        Command::Delta(c) => plain(ehrhart(&load(&c.input)?, false)?),
        Command::Cb(a) => cb(&a),
        Command::Orbits(a) => plain(orbits(&a)?),
        Command::Resolve(a) => plain(resolve(&a)?),
        Command::Orbifold(a) => plain(orbifold(&a)?),
        Command::Quotient(a) => plain(quotient(&a)?),
        Command::Hc(a) => hc(&a),
        Command::Crosscheck(a) => crosscheck(&a),
    }
}

struct Loaded {
    name: Option<String>,
    shape: Shape,
    /// Document point order mapped to diagram vertex indices.
    vertex_map: Option<Vec<Option<usize>>>,
}

fn read_source(input: &str) -> Result<String, Failure> {
    if let Some(name) = input.strip_prefix('@') {
        return corpus::text(name).map(str::to_string).ok_or_else(|| {
            Failure::Parse(format!("no built-in document {name:?}; available: {}", corpus::names().collect::<Vec<_>>().join(", ")))
        });
    }
    std::fs::read_to_string(input).map_err(|e| Failure::Parse(format!("cannot read {input}: {e}")))
}

fn load(input: &str) -> Result<Loaded, Failure> {
    let doc = parse_document(&read_source(input)?)?;
    let vertex_map = match &doc.shape {
        Shape::Polytope { points, polytope, .. } => Some(points.iter().map(|p| polytope.vertex_index(p)).collect()),
        Shape::Labelled(_) => None,
    };
    Ok(Loaded { name: doc.name, shape: doc.shape, vertex_map })
}

impl Loaded {
    fn diagram(&self) -> Result<ToricDiagram, Failure> {
        match &self.shape {
            Shape::Polytope { polytope, .. } => Ok(validate_diagram(polytope)?),
            Shape::Labelled(l) => Ok(diagram_from_labelled(l)?),
        }
    }

    fn labelled(&self) -> Option<&LabelledPolytope> {
        match &self.shape {
            Shape::Labelled(l) => Some(l),
            Shape::Polytope { .. } => None,
        }
    }

    fn reeb(&self) -> Option<&Vec<Int>> {
        match &self.shape {
            Shape::Polytope { reeb, .. } => reeb.as_ref(),
            Shape::Labelled(_) => None,
        }
    }
}

fn s(x: &Rat) -> Value {
    Value::String(rat_to_string(x))
}

fn int_json(x: &Int) -> Value {
    // Integers stay JSON numbers when they fit, which is always the case for
    // the inputs this tool is meant for.
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

fn ints_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

fn rats_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

/// Every degree of the grid in the window, zeros included.
fn graded_json(g: &GradedDimension, step: &Rat) -> Value {
    Value::Array(g.on_grid(step).iter().map(|(d, k)| json!({"degree": rat_to_string(d), "dim": k})).collect())
}

/// Non-zero degrees only.
fn sparse_json(g: &GradedDimension) -> Value {
    Value::Array(g.iter().map(|(d, k)| json!({"degree": rat_to_string(d), "dim": k})).collect())
}

fn window_for(arg: &Option<String>, diagram: &ToricDiagram) -> Result<Window, Failure> {
    match arg {
        Some(text) => text.parse().map_err(Failure::Parse),
        None => Ok(diagram.default_window()),
    }
}

fn window_json(w: &Window) -> Value {
    Value::String(format!("{}:{}", rat_to_string(&w.lo), rat_to_string(&w.hi)))
}

fn validate(doc: &Loaded) -> Result<Value, Failure> {
    match &doc.shape {
        Shape::Polytope { .. } => {
            let d = doc.diagram()?;
            let c1 = match c1_order(d.normals()) {
                C1Order::Torsion { order, .. } => json!({"torsion": true, "order": int_json(&order)}),
                C1Order::NonTorsion => json!({"torsion": false}),
            };
            Ok(json!({
                "kind": "diagram",
                "valid": true,
                "dimension": d.dim(),
                "m": int_json(d.order()),
                "vertices": d.polytope().vertices().iter().map(|v| rats_json(v)).collect::<Vec<_>>(),
                "facets": d.polytope().facets().iter().map(|f| json!(f.vertices)).collect::<Vec<_>>(),
                "normals": d.normals().iter().map(|v| ints_json(v)).collect::<Vec<_>>(),
                "c1": c1,
            }))
        }
        Shape::Labelled(l) => {
            let normals: Vec<Vec<Int>> =
                l.normals().iter().zip(l.offsets()).map(|(v, b)| v.iter().cloned().chain([b.clone()]).collect()).collect();
            is_good_cone(&normals)?;
            let r = crate::prequant::gorenstein_r(l);
            Ok(json!({
                "kind": "labelled",
                "valid": true,
                "dimension": l.dim(),
                "labels": ints_json(&l.labels()),
                "isotropy": ints_json(&l.isotropy_orders()),
                "smooth": l.is_smooth(),
                "r": r.as_ref().map(|(r, _)| int_json(r)),
                "w": r.as_ref().map(|(_, w)| ints_json(w)),
            }))
        }
    }
}

fn ehrhart(doc: &Loaded, branches: bool) -> Result<Value, Failure> {
    let polytope = match &doc.shape {
        Shape::Polytope { polytope, .. } => polytope.clone(),
        Shape::Labelled(_) => doc.diagram()?.polytope().clone(),
    };
    let delta = delta_vector(&polytope)?;
    let mut out = Map::new();
    out.insert("m".into(), json!(delta.order()));
    out.insert("delta".into(), json!(delta.coeffs()));
    if branches {
        let q = quasipolynomial(&delta);
        out.insert("branches".into(), Value::Array(q.branches().iter().map(|b| rats_json(b.coeffs())).collect()));
        let t_max = 3 * delta.order() as u64;
        out.insert("reciprocity".into(), json!(check_reciprocity(&polytope, &q, t_max).is_ok()));
        out.insert("reflexive".into(), json!(reflexivity(&polytope)?.is_reflexive()));
    }
    Ok(Value::Object(out))
}

fn reeb_vector(diagram: &ToricDiagram, args: &ReebArgs) -> Result<ReebVector, Failure> {
    let t = parse_rat(&args.perturb).map_err(Failure::Parse)?;
    match &args.reeb {
        Some(text) => {
            let base = parse_rat_list(text).map_err(Failure::Parse)?;
            Ok(ReebVector::new(diagram, base, default_direction(diagram.dim(), &t))?)
        }
        None => Ok(ReebVector::generic(diagram, &t)?),
    }
}

fn cb(args: &CbArgs) -> Result<(Value, bool), Failure> {
    let doc = load(&args.reeb.window.common.input)?;
    let diagram = doc.diagram()?;
    let window = window_for(&args.reeb.window.window, &diagram)?;
    let step = diagram.degree_step();
    let from_delta = match args.pipeline {
        Pipeline::Delta | Pipeline::Both => Some(contact_betti_from_delta(&diagram, &window)?),
        Pipeline::Direct => None,
    };
    let direct = match args.pipeline {
        Pipeline::Direct | Pipeline::Both => {
            let reeb = reeb_vector(&diagram, &args.reeb)?;
            Some(contact_betti_direct(&diagram, &reeb, &window)?)
        }
        Pipeline::Delta => None,
    };
    let agreement = match (&from_delta, &direct) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let mut out = Map::new();
    out.insert("m".into(), int_json(diagram.order()));
    out.insert("window".into(), window_json(&window));
    let primary = from_delta.as_ref().or(direct.as_ref()).expect("one pipeline runs");
    out.insert("cb".into(), graded_json(primary, &step));
    if !agreement {
        out.insert("cb_direct".into(), graded_json(direct.as_ref().expect("both ran"), &step));
    }
    out.insert("agreement".into(), json!(agreement));
    Ok((Value::Object(out), agreement))
}

fn jet_json(j: &crate::exactlat::Jet) -> Value {
    json!({"value": rat_to_string(&j.value), "slope": rat_to_string(&j.slope)})
}

fn orbits(args: &ReebArgs) -> Result<Value, Failure> {
    let doc = load(&args.window.common.input)?;
    let diagram = doc.diagram()?;
    let window = window_for(&args.window.window, &diagram)?;
    let reeb = reeb_vector(&diagram, args)?;
    let families = orbit_families(&diagram, &reeb)?;
    let mut list = Vec::new();
    for f in &families {
        let orbits: Vec<Value> = f
            .degrees_up_to(&window.hi)?
            .iter()
            .filter(|(_, d)| window.contains(d))
            .map(|(n, d)| Ok(json!({"iterate": n, "cz": rat_to_string(&f.cz_index(*n)?), "degree": rat_to_string(d)})))
            .collect::<Result<_, ContactError>>()?;
        list.push(json!({
            "facet": f.vertices,
            "eta": ints_json(&f.eta),
            "coeffs": f.coeffs.iter().map(jet_json).collect::<Vec<_>>(),
            "b": jet_json(&f.b),
            "at_infinity": f.is_at_infinity(),
            "orbits": orbits,
        }));
    }
    Ok(json!({
        "m": int_json(diagram.order()),
        "window": window_json(&window),
        "reeb": {"base": rats_json(reeb.base()), "direction": rats_json(reeb.direction())},
        "families": list,
    }))
}

fn triangulation(doc: &Loaded, diagram: &ToricDiagram, source: &TriangulationSource) -> Result<Triangulation, Failure> {
    if let Some(point) = &source.star {
        let p = parse_rat_list(point).map_err(Failure::Parse)?;
        return Ok(star_triangulation(diagram, p)?);
    }
    let Some(path) = &source.triangulation else {
        return Ok(trivial_triangulation(diagram));
    };
    let t = parse_triangulation(&read_source(path)?)?;
    // Document indices: the document's points, then the extra points.
    let k = diagram.polytope().vertices().len();
    let doc_points: Vec<Option<usize>> = match &doc.vertex_map {
        Some(map) => map.clone(),
        None => (0..k).map(Some).collect(),
    };
    let extra_start = doc_points.len();
    let map = |i: usize| -> Result<usize, Failure> {
        if i < extra_start {
            doc_points[i].ok_or_else(|| Failure::Validation(format!("document point {i} is not a vertex of the diagram")))
        } else if i - extra_start < t.points.len() {
            Ok(k + i - extra_start)
        } else {
            Err(Failure::Validation(format!("cell index {i} is out of range")))
        }
    };
    let cells = t.cells.iter().map(|c| c.iter().map(|&i| map(i)).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
    Ok(Triangulation::from_cells(diagram, t.points, cells))
}

fn resolve(args: &ResolveArgs) -> Result<Value, Failure> {
    let doc = load(&args.common.input)?;
    let diagram = doc.diagram()?;
    let t = triangulation(&doc, &diagram, &args.source)?;
    let report = validate_triangulation(&diagram, &t)?;
    let fan = fan_over(&t);
    let support = match &args.ray_values {
        Some(text) => {
            let values = parse_rat_list(text).map_err(Failure::Parse)?;
            let phi = SupportFunction::from_ray_values(&fan, values)?;
            if !is_strictly_convex(&fan, &phi) {
                return Err(Failure::Validation(ResolutionError::NotStrictlyConvex.to_string()));
            }
            Ok(phi)
        }
        None => support_function(&fan),
    };
    let support = match support {
        Ok(phi) => {
            let poly = moment_polyhedron(&fan, &phi)?;
            json!({
                "ray_values": rats_json(phi.ray_values()),
                "cartier": phi.cartier_data().iter().map(|v| rats_json(v)).collect::<Vec<_>>(),
                "halfspaces": poly.halfspaces.iter().map(|(u, a)| json!({"normal": ints_json(u), "bound": s(a)})).collect::<Vec<_>>(),
            })
        }
        Err(e) => json!({"error": e.to_string()}),
    };
    let boxes: Vec<Value> = (0..fan.cones().len())
        .flat_map(|c| box_elements(&fan, c))
        .filter(|b| !fan.cones()[b.cone].is_empty())
        .map(|b| json!({"cone": fan.cones()[b.cone], "point": ints_json(&b.point), "coeffs": rats_json(&b.coeffs), "psi": s(&b.shift)}))
        .collect();
    Ok(json!({
        "points": t.points().iter().map(|p| rats_json(p)).collect::<Vec<_>>(),
        "cells": t.cells(),
        "unimodular": report.unimodular,
        "crepant": fan.is_crepant(),
        "rays": fan.rays().iter().map(|r| ints_json(r)).collect::<Vec<_>>(),
        "support_function": support,
        "box": boxes,
    }))
}

fn orbifold(args: &ResolveArgs) -> Result<Value, Failure> {
    let doc = load(&args.common.input)?;
    let diagram = doc.diagram()?;
    let t = triangulation(&doc, &diagram, &args.source)?;
    let report = validate_triangulation(&diagram, &t)?;
    let fan = fan_over(&t);
    Ok(json!({
        "H_orb": sparse_json(&orbifold_poincare(&fan)),
        "crepant": fan.is_crepant(),
        "unimodular": report.unimodular,
    }))
}

fn quotient_data(doc: &Loaded, reeb: &Option<String>) -> Result<QuotientData, Failure> {
    let nu = match reeb {
        Some(text) => Some(parse_int_list(text).map_err(Failure::Parse)?),
        None => doc.reeb().cloned(),
    };
    match (doc.labelled(), nu) {
        (Some(l), None) => Ok(prequantization(l)?),
        (_, Some(nu)) => Ok(quotient_polytope(&doc.diagram()?, &nu)?),
        (None, None) => Err(Failure::Parse("no Reeb vector: pass --reeb w1,...,wn,r".into())),
    }
}

fn sectors_json(q: &QuotientData) -> Value {
    Value::Array(
        q.sectors()
            .iter()
            .map(|sec| {
                json!({
                    "T": rat_to_string(&sec.period),
                    "components": sec.components.iter().map(|c| json!({
                        "face": c.face,
                        "cT": rat_to_string(&c.shift),
                        "h": ints_json(c.h.coeffs()),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn quotient(args: &QuotientArgs) -> Result<Value, Failure> {
    let doc = load(&args.window.common.input)?;
    let q = quotient_data(&doc, &args.reeb)?;
    let window = match &args.window.window {
        Some(text) => text.parse().map_err(Failure::Parse)?,
        None => Window::contact_default(q.dim(), &Int::one()),
    };
    let two = Rat::from_integer(Int::from(2));
    let hc = match hc_from_quotient(&q, &window) {
        Ok(g) => graded_json(&g, &two),
        Err(PrequantError::QGorenstein) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(json!({
        "reeb": ints_json(q.reeb()),
        "r": q.r().map(int_json),
        "smooth": q.is_smooth(),
        "base": {
            "normals": q.base().normals().iter().map(|v| ints_json(v)).collect::<Vec<_>>(),
            "offsets": ints_json(q.base().offsets()),
            "isotropy": ints_json(&q.base().isotropy_orders()),
        },
        "sectors": sectors_json(&q),
        "H_orb": sparse_json(&orbifold_cohomology_of_base(&q)),
        "window": window_json(&window),
        "HC": hc,
    }))
}

fn hc(args: &HcArgs) -> Result<(Value, bool), Failure> {
    let doc = load(&args.window.common.input)?;
    let explicit_source = args.source.star.is_some() || args.source.triangulation.is_some() || args.source.trivial;
    if let (Some(l), false) = (doc.labelled(), explicit_source) {
        let q = prequantization(l)?;
        let window = match &args.window.window {
            Some(text) => text.parse().map_err(Failure::Parse)?,
            None => Window::contact_default(q.dim(), &Int::one()),
        };
        let two = Rat::from_integer(Int::from(2));
        let total = hc_from_quotient(&q, &window)?;
        let bourgeois = match hc_smooth_base(&q, &window) {
            Ok(g) => Some(g),
            Err(PrequantError::BaseNotSmooth) => None,
            Err(e) => return Err(e.into()),
        };
        let agreement = bourgeois.as_ref().is_none_or(|b| *b == total);
        let periods: Vec<Value> = hc_by_period(&q, &window)?
            .iter()
            .map(|(t, g)| json!({"T": rat_to_string(t), "HC": graded_json(g, &two)}))
            .collect();
        let out = json!({
            "r": q.r().map(int_json),
            "window": window_json(&window),
            "HC": graded_json(&total, &two),
            "periods": periods,
            "smooth_base": bourgeois.as_ref().map(|g| graded_json(g, &two)),
            "agreement": agreement,
        });
        return Ok((out, agreement));
    }
    let diagram = doc.diagram()?;
    let window = window_for(&args.window.window, &diagram)?;
    let t = triangulation(&doc, &diagram, &args.source)?;
    let step = diagram.degree_step();
    let total = hc_from_resolution(&diagram, &t, &window)?;
    let fan = fan_over(&t);
    let sectors: Vec<Value> = hc_contributions(&diagram, &t, &window)?
        .iter()
        .map(|(sec, g)| {
            json!({
                "cone": fan.cones()[sec.element.cone],
                "point": ints_json(&sec.element.point),
                "psi": s(&sec.element.shift),
                "HC": graded_json(g, &step),
            })
        })
        .collect();
    Ok((json!({"m": int_json(diagram.order()), "window": window_json(&window), "HC": graded_json(&total, &step), "sectors": sectors}), true))
}

/// An interior point `w/r` of the diagram with `(w, r)` primitive and `r`
/// as small as possible.
fn interior_reeb(diagram: &ToricDiagram) -> Option<Vec<Int>> {
    let p = diagram.polytope();
    (1..=12i64).find_map(|r| {
        p.lattice_points(&Int::from(r), Region::Interior).into_iter().find_map(|w| {
            let nu: Vec<Int> = w.into_iter().chain([Int::from(r)]).collect();
            gcd_all(&nu).is_one().then_some(nu)
        })
    })
}

fn crosscheck(args: &WindowArgs) -> Result<(Value, bool), Failure> {
    let doc = load(&args.common.input)?;
    let diagram = doc.diagram()?;
    let window = window_for(&args.window, &diagram)?;
    let step = diagram.degree_step();
    let reference = contact_betti_from_delta(&diagram, &window)?;
    let mut pipelines: Vec<(String, Result<GradedDimension, String>)> = vec![("delta".into(), Ok(reference.clone()))];
    for (p, q) in CROSSCHECK_PERTURBATIONS {
        let t = Rat::new(Int::from(p), Int::from(q));
        let reeb = ReebVector::generic(&diagram, &t)?;
        pipelines.push((format!("direct t={}", rat_to_string(&t)), Ok(contact_betti_direct(&diagram, &reeb, &window)?)));
    }
    let mut triangulations = vec![("trivial".to_string(), trivial_triangulation(&diagram))];
    if let Some(p) = crepant_star_points(&diagram).into_iter().next() {
        let label = format!("star {}", p.iter().map(rat_to_string).collect::<Vec<_>>().join(","));
        triangulations.push((label, star_triangulation(&diagram, p)?));
    }
    let mut stapledon = Vec::new();
    for (label, t) in &triangulations {
        pipelines.push((format!("resolution {label}"), Ok(hc_from_resolution(&diagram, t, &window)?)));
        stapledon.push(json!({"triangulation": label, "ok": stapledon_check(&diagram, t).is_ok()}));
    }
    if diagram.order().is_one() {
        let quotient = match doc.labelled() {
            Some(l) => Some(prequantization(l)?),
            None => match doc.reeb().cloned().or_else(|| interior_reeb(&diagram)) {
                Some(nu) => Some(quotient_polytope(&diagram, &nu)?),
                None => None,
            },
        };
        if let Some(q) = quotient {
            let label = format!("quotient reeb={}", q.reeb().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            pipelines.push((label, hc_from_quotient(&q, &window).map_err(|e| e.to_string())));
            if q.is_smooth() {
                pipelines.push(("smooth base".into(), hc_smooth_base(&q, &window).map_err(|e| e.to_string())));
            }
        }
    }
    let polytope = diagram.polytope();
    let delta = delta_vector(polytope)?;
    let reciprocity = check_reciprocity(polytope, &quasipolynomial(&delta), 3 * delta.order() as u64).is_ok();
    let mut agreement = reciprocity && stapledon.iter().all(|v| v["ok"] == json!(true));
    let list: Vec<Value> = pipelines
        .iter()
        .map(|(name, result)| match result {
            Ok(g) => {
                let agrees = *g == reference;
                agreement &= agrees;
                json!({"pipeline": name, "agrees": agrees, "cb": graded_json(g, &step)})
            }
            Err(e) => {
                agreement = false;
                json!({"pipeline": name, "agrees": false, "error": e})
            }
        })
        .collect();
    let out = json!({
        "document": doc.name,
        "m": int_json(diagram.order()),
        "window": window_json(&window),
        "delta": delta.coeffs(),
        "reciprocity": reciprocity,
        "stapledon": stapledon,
        "pipelines": list,
        "agreement": agreement,
    });
    Ok((out, agreement))
}

/// Text rendering of a report: scalars as `key: value`, graded dimensions
/// as a degree row over a dimension row, other nesting indented.
pub fn render_table(report: &Value) -> String {
    let mut out = String::new();
    render_value(&mut out, "", report, 0);
    out
}

fn is_graded(v: &Value) -> bool {
    v.as_array().is_some_and(|a| {
        !a.is_empty() && a.iter().all(|e| e.as_object().is_some_and(|o| o.len() == 2 && o.contains_key("degree") && o.contains_key("dim")))
    })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|e| !e.is_array() && !e.is_object()) => {
            Some(format!("[{}]", a.iter().map(|e| scalar(e).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|e| e.as_array().is_some_and(|r| r.iter().all(|x| !x.is_array() && !x.is_object()))) => {
            Some(format!("[{}]", a.iter().map(|e| scalar(e).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = if key.is_empty() { String::new() } else { format!("{key}: ") };
    if is_graded(v) {
        let entries = v.as_array().expect("graded is an array");
        let cells: Vec<(String, String)> = entries
            .iter()
            .map(|e| (e["degree"].as_str().unwrap_or_default().to_string(), e["dim"].to_string()))
            .collect();
        let width = cells.iter().map(|(d, k)| d.len().max(k.len())).max().unwrap_or(1);
        let _ = writeln!(out, "{pad}{key}");
        let row = |f: &dyn Fn(&(String, String)) -> &String| cells.iter().map(|c| format!("{:>width$}", f(c))).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{pad}  degree | {}", row(&|c| &c.0));
        let _ = writeln!(out, "{pad}  dim    | {}", row(&|c| &c.1));
        return;
    }
    if let Some(text) = scalar(v) {
        let _ = writeln!(out, "{pad}{label}{text}");
        return;
    }
    match v {
        Value::Object(map) => {
            let inner = if key.is_empty() {
                depth
            } else {
                let _ = writeln!(out, "{pad}{key}");
                depth + 1
            };
            for (k, x) in map {
                render_value(out, k, x, inner);
            }
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{key}");
            for (i, x) in items.iter().enumerate() {
                render_value(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Applies `TORIC_CONTACT_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<(), String> {
    let Ok(text) = std::env::var("TORIC_CONTACT_THREADS") else { return Ok(()) };
    let n: usize = text.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| format!("TORIC_CONTACT_THREADS={text:?} is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("toric-contact").chain(args.iter().copied()))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", o.stdout, o.stderr))
    }

    #[test]
    fn cb_on_the_lens_space() {
        let o = run_args(&["cb", "@lens", "--pipeline", "both", "--window", "0:8"]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        let v = json_of(&o);
        assert_eq!(v["agreement"], json!(true));
        let dims: Vec<u64> = v["cb"].as_array().unwrap().iter().map(|e| e["dim"].as_u64().unwrap()).collect();
        assert_eq!(dims, vec![1, 2, 3, 3, 3]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["validate", "@nothing"]).code, EXIT_PARSE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_PARSE);
        assert_eq!(run_args(&["cb", "@lens", "--window", "3"]).code, EXIT_PARSE);
        assert_eq!(run_args(&["cb", "@lens", "--reeb", "0,0", "--perturb", "0"]).code, EXIT_GENERICITY);
        assert_eq!(run_args(&["cb", "@lens", "--reeb", "5,5"]).code, EXIT_VALIDATION);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn table_rendering() {
        let o = run_args(&["cb", "@order3", "--format", "table", "--pipeline", "delta"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("degree |"), "{}", o.stdout);
        assert!(o.stdout.contains("agreement: true"));
    }
}
