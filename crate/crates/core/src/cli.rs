//! Analysis requests, their execution and the JSON report.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::blowup::{
    gradient_linear_type, jacobian_linear_type, rees_ideal, relevant_ideal, symmetric_ideal,
    LinearTypeOptions, LinearTypeVerdict, PresentationIdeal,
};
use crate::error::{Error, Result};
use crate::groebner::{syzygies, SyzygyMatrix};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};
use crate::singularity::{
    analyze_point, genus, singular_locus_dimension, singular_points, HypersurfaceInput, Setting,
    SingularLocus, SingularPointReport,
};
use crate::text::{identifiers, parse_document, parse_polynomial};

/// Bumped on every change to the report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// The report schema shipped with the crate.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Analyze,
    Milnor,
    Tjurina,
    Eulerian,
    Classify,
    Syzygy,
    Sym,
    Rees,
    LinearType,
    Genus,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Analyze,
        Command::Milnor,
        Command::Tjurina,
        Command::Eulerian,
        Command::Classify,
        Command::Syzygy,
        Command::Sym,
        Command::Rees,
        Command::LinearType,
        Command::Genus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Milnor => "milnor",
            Command::Tjurina => "tjurina",
            Command::Eulerian => "eulerian",
            Command::Classify => "classify",
            Command::Syzygy => "syzygy",
            Command::Sym => "sym",
            Command::Rees => "rees",
            Command::LinearType => "linear-type",
            Command::Genus => "genus",
        }
    }

    fn needs_points(&self) -> bool {
        matches!(
            self,
            Command::Analyze | Command::Milnor | Command::Tjurina | Command::Eulerian | Command::Classify | Command::Genus
        )
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown command `{s}`")))
    }
}

impl FromStr for Setting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "affine" => Ok(Setting::Affine),
            "projective" => Ok(Setting::Projective),
            _ => Err(Error::Precondition(format!("unknown setting `{s}`"))),
        }
    }
}

/// Where the polynomial comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// A `ring ...; name = ...;` file; `name` picks the polynomial.
    File { path: PathBuf, name: Option<String> },
    /// A single expression; the ring is inferred when not given.
    Inline { expr: String, ring: Option<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub source: Source,
    pub setting: Setting,
    pub commands: Vec<Command>,
    pub direct_rees: bool,
    pub assert_irreducible: bool,
    /// Variable whose standard chart is preferred for projective points.
    pub chart: Option<String>,
}

impl AnalysisRequest {
    pub fn new(source: Source, setting: Setting, commands: impl IntoIterator<Item = Command>) -> Self {
        AnalysisRequest {
            source,
            setting,
            commands: commands.into_iter().collect(),
            direct_rees: false,
            assert_irreducible: false,
            chart: None,
        }
    }

    pub fn inline(expr: &str, setting: Setting, commands: impl IntoIterator<Item = Command>) -> Self {
        Self::new(
            Source::Inline {
                expr: expr.to_string(),
                ring: None,
            },
            setting,
            commands,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub source: String,
    pub name: Option<String>,
    pub polynomial: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub point: String,
    pub coordinates: Vec<String>,
    pub chart: Option<String>,
    pub residue_degree: u32,
    pub multiplicity: u32,
    pub milnor: u64,
    pub tjurina: u64,
    pub locally_eulerian: bool,
    pub socle_cyclic: bool,
    pub jacobian_generators: usize,
    pub locally_complete_intersection: bool,
    pub ade: Option<String>,
    pub delta: Option<u32>,
    pub branches: Option<u32>,
}

impl PointRecord {
    fn new(r: &SingularPointReport, ring: &Ring) -> Result<Self> {
        r.validate()?;
        Ok(PointRecord {
            point: r.point.to_string(),
            coordinates: r.point.coord_strings(),
            chart: r.chart.map(|i| ring.name(i).to_string()),
            residue_degree: r.residue_degree,
            multiplicity: r.multiplicity,
            milnor: r.milnor,
            tjurina: r.tjurina,
            locally_eulerian: r.locally_eulerian,
            socle_cyclic: r.socle_cyclic,
            jacobian_generators: r.jacobian_generators,
            locally_complete_intersection: r.locally_complete_intersection(),
            ade: r.ade.map(|t| t.to_string()),
            delta: r.delta,
            branches: r.branches,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftoverRecord {
    /// `dim_k` of the residual zero-dimensional scheme.
    pub length: Option<u64>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyRecord {
    pub rows: usize,
    pub columns: usize,
    /// Row-major entries.
    pub matrix: Vec<Vec<String>>,
}

impl From<&SyzygyMatrix> for SyzygyRecord {
    fn from(m: &SyzygyMatrix) -> Self {
        SyzygyRecord {
            rows: m.num_rows(),
            columns: m.num_columns(),
            matrix: (0..m.num_rows())
                .map(|r| (0..m.num_columns()).map(|c| m.entry(r, c).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub t_degrees: Vec<Option<u32>>,
}

impl From<&PresentationIdeal> for PresentationRecord {
    fn from(p: &PresentationIdeal) -> Self {
        PresentationRecord {
            ring: p.ambient().names().to_vec(),
            generators: p.generators().iter().map(ToString::to_string).collect(),
            t_degrees: p.generators().iter().map(|g| p.t_degree(g)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub verdict: bool,
    pub methods: Vec<String>,
    pub witness: Option<String>,
    pub failing_point: Option<String>,
    pub evidence: Vec<PointRecord>,
    pub caveats: Vec<String>,
}

impl VerdictRecord {
    fn new(v: &LinearTypeVerdict, ring: &Ring) -> Result<Self> {
        Ok(VerdictRecord {
            verdict: v.verdict,
            methods: v.methods.iter().map(|m| m.tag().to_string()).collect(),
            witness: v.witness.as_ref().map(ToString::to_string),
            failing_point: v.failing_point.as_ref().map(ToString::to_string),
            evidence: v
                .evidence
                .iter()
                .map(|r| PointRecord::new(r, ring))
                .collect::<Result<Vec<_>>>()?,
            caveats: v.caveats.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub input: InputRecord,
    pub setting: String,
    pub ring: Vec<String>,
    pub commands: Vec<Command>,
    pub singular_locus_dimension: Option<i64>,
    pub singular_points: Option<Vec<PointRecord>>,
    pub leftover: Option<LeftoverRecord>,
    pub syzygies: Option<SyzygyRecord>,
    pub symmetric_ideal: Option<PresentationRecord>,
    pub rees_ideal: Option<PresentationRecord>,
    pub linear_type: Option<VerdictRecord>,
    pub genus: Option<u32>,
    pub error: Option<ErrorRecord>,
    pub exit_code: i32,
    pub warnings: Vec<String>,
    /// Milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    fn empty(req: &AnalysisRequest) -> Report {
        let (source, name) = match &req.source {
            Source::File { path, name } => (path.display().to_string(), name.clone()),
            Source::Inline { .. } => ("inline".to_string(), None),
        };
        Report {
            schema_version: SCHEMA_VERSION,
            input: InputRecord {
                source,
                name,
                polynomial: None,
            },
            setting: req.setting.to_string(),
            ring: Vec::new(),
            commands: req.commands.clone(),
            singular_locus_dimension: None,
            singular_points: None,
            leftover: None,
            syzygies: None,
            symmetric_ideal: None,
            rees_ideal: None,
            linear_type: None,
            genus: None,
            error: None,
            exit_code: 0,
            warnings: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON value with the timings block removed.
    pub fn comparable(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(o) = v.as_object_mut() {
            o.remove("timings");
        }
        v
    }

    /// Plain text rendering for terminals.
    pub fn summary(&self) -> String {
        let mut out = Vec::new();
        let name = self.input.name.as_deref().unwrap_or("f");
        if let Some(p) = &self.input.polynomial {
            out.push(format!("{name} = {p}  ({}, ring {})", self.setting, self.ring.join(",")));
        }
        if let Some(d) = self.singular_locus_dimension {
            out.push(format!("singular locus dimension: {d}"));
        }
        if let Some(pts) = &self.singular_points {
            out.push(format!("singular points: {}", pts.len()));
            for p in pts {
                out.push(format!("  {}", point_line(p)));
            }
        }
        if let Some(l) = &self.leftover {
            let len = l.length.map_or("?".to_string(), |n| n.to_string());
            out.push(format!("non-rational singular points: length {len}"));
        }
        if let Some(s) = &self.syzygies {
            out.push(format!("syzygies: {} x {}", s.rows, s.columns));
            for row in &s.matrix {
                out.push(format!("  [{}]", row.join(", ")));
            }
        }
        for (label, p) in [("symmetric ideal", &self.symmetric_ideal), ("rees ideal", &self.rees_ideal)] {
            if let Some(p) = p {
                out.push(format!("{label} in {}:", p.ring.join(",")));
                for g in &p.generators {
                    out.push(format!("  {g}"));
                }
            }
        }
        if let Some(v) = &self.linear_type {
            out.push(format!("linear type: {} [{}]", v.verdict, v.methods.join(", ")));
            if let Some(w) = &v.witness {
                out.push(format!("  witness: {w}"));
            }
            if let Some(p) = &v.failing_point {
                out.push(format!("  failing point: {p}"));
            }
            for c in &v.caveats {
                out.push(format!("  caveat: {c}"));
            }
        }
        if let Some(g) = self.genus {
            out.push(format!("genus: {g}"));
        }
        for w in &self.warnings {
            out.push(format!("warning: {w}"));
        }
        if let Some(e) = &self.error {
            out.push(format!("error ({}): {}", e.kind, e.message));
        }
        out.join("\n")
    }
}

fn point_line(p: &PointRecord) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut s = format!(
        "{}: mult {}, mu {}, tau {}, eulerian {}, socle cyclic {}, CI {}",
        p.point,
        p.multiplicity,
        p.milnor,
        p.tjurina,
        yn(p.locally_eulerian),
        yn(p.socle_cyclic),
        yn(p.locally_complete_intersection)
    );
    if let Some(c) = &p.chart {
        s.push_str(&format!(", chart {c}"));
    }
    if let Some(t) = &p.ade {
        s.push_str(&format!(", type {t}"));
    }
    if let (Some(d), Some(r)) = (p.delta, p.branches) {
        s.push_str(&format!(", delta {d}, branches {r}"));
    }
    s
}

/// Variables in conventional order: `x, y, z, w` first, then the rest sorted.
fn infer_ring(expr: &str) -> Vec<String> {
    let mut ids = identifiers(expr);
    let rank = |s: &str| ["x", "y", "z", "w"].iter().position(|&c| c == s).unwrap_or(4);
    ids.sort_by(|a, b| rank(a).cmp(&rank(b)).then_with(|| a.cmp(b)));
    ids
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: msg.into(),
    }
}

fn load(req: &AnalysisRequest) -> Result<(Ring, Option<String>, Polynomial)> {
    match &req.source {
        Source::Inline { expr, ring } => {
            let names = ring.clone().unwrap_or_else(|| infer_ring(expr));
            let ring = RingContext::new(names)?;
            let f = parse_polynomial(expr, &ring)?;
            Ok((ring, None, f))
        }
        Source::File { path, name } => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let doc = parse_document(&text)?;
            let (n, f) = match name {
                Some(n) => doc
                    .polynomials
                    .iter()
                    .find(|(m, _)| m == n)
                    .ok_or_else(|| usage(format!("no polynomial named `{n}`")))?,
                None => doc
                    .polynomials
                    .iter()
                    .find(|(m, _)| m == "f")
                    .or_else(|| doc.polynomials.first())
                    .ok_or_else(|| usage("file defines no polynomial"))?,
            };
            Ok((doc.ring.clone(), Some(n.clone()), f.clone()))
        }
    }
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, stage: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let t = Instant::now();
    let out = f();
    *timings.entry(stage.to_string()).or_insert(0.0) += t.elapsed().as_secs_f64() * 1e3;
    out
}

/// Execute a request. Errors end the pipeline and are recorded in the
/// report; partial results are kept.
pub fn run(req: &AnalysisRequest) -> (Report, i32) {
    let mut report = Report::empty(req);
    if let Err(e) = execute(req, &mut report) {
        report.exit_code = e.exit_code();
        report.error = Some(ErrorRecord {
            kind: e.kind().to_string(),
            message: e.to_string(),
        });
    }
    let code = report.exit_code;
    (report, code)
}

fn execute(req: &AnalysisRequest, report: &mut Report) -> Result<()> {
    if req.commands.is_empty() {
        return Err(usage("no command given"));
    }
    let (ring, name, f) = timed(&mut report.timings, "parse", || load(req))?;
    report.input.name = name;
    report.input.polynomial = Some(f.to_string());
    report.ring = ring.names().to_vec();
    if req.setting == Setting::Projective && !f.is_homogeneous() {
        return Err(usage("projective setting needs a homogeneous polynomial"));
    }
    let chart = match &req.chart {
        None => None,
        Some(v) if req.setting == Setting::Projective => {
            Some(ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.clone()))?)
        }
        Some(_) => return Err(usage("--chart applies to the projective setting only")),
    };
    let h = HypersurfaceInput::new(f, req.setting, req.assert_irreducible)?;
    let has = |c: Command| req.commands.contains(&c);
    let analyze = has(Command::Analyze);
    let opts = LinearTypeOptions {
        direct_rees: req.direct_rees,
    };

    let mut reports: Vec<SingularPointReport> = Vec::new();
    let mut locus: Option<SingularLocus> = None;
    if req.commands.iter().any(Command::needs_points) {
        let dim = timed(&mut report.timings, "singular_locus_dimension", || singular_locus_dimension(&h))?;
        report.singular_locus_dimension = Some(dim);
        let only_analyze = req.commands.iter().filter(|c| c.needs_points()).all(|&c| c == Command::Analyze);
        if dim > 0 && only_analyze && req.setting == Setting::Projective {
            report
                .warnings
                .push(format!("singular locus has dimension {dim}; no point analysis"));
        } else {
            let l = timed(&mut report.timings, "singular_points", || singular_points(&h))?;
            let mut records = Vec::new();
            for sp in &l.points {
                let mut sp = sp.clone();
                if let Some(c) = chart {
                    if sp.point.coords()[c].is_zero() {
                        report.warnings.push(format!(
                            "{} is not in chart {}; using chart {}",
                            sp.point,
                            ring.name(c),
                            sp.chart.map_or("?", |i| ring.name(i))
                        ));
                    } else {
                        sp.chart = Some(c);
                    }
                }
                let r = timed(&mut report.timings, "point_analysis", || analyze_point(&h, &sp))?;
                records.push(PointRecord::new(&r, &ring)?);
                reports.push(r);
            }
            report.singular_points = Some(records);
            if let Some(rest) = &l.leftover {
                report.leftover = Some(LeftoverRecord {
                    length: rest.quotient_dimension()?.finite(),
                    generators: rest.generators().iter().map(ToString::to_string).collect(),
                });
                report
                    .warnings
                    .push("some singular points are not rational and were not analyzed".into());
            }
            locus = Some(l);
        }
    }

    let ideal = relevant_ideal(&h);
    if has(Command::Syzygy) {
        let m = timed(&mut report.timings, "syzygies", || syzygies(ideal.generators(), &MonomialOrder::DegRevLex))?;
        report.syzygies = Some(SyzygyRecord::from(&m));
    }
    if has(Command::Sym) {
        let s = timed(&mut report.timings, "symmetric_ideal", || symmetric_ideal(&ideal))?;
        report.symmetric_ideal = Some(PresentationRecord::from(&s));
    }
    if has(Command::Rees) {
        let r = timed(&mut report.timings, "rees_ideal", || rees_ideal(&ideal))?;
        report.rees_ideal = Some(PresentationRecord::from(&r));
    }
    if analyze || has(Command::LinearType) {
        let v = timed(&mut report.timings, "linear_type", || match req.setting {
            Setting::Affine => jacobian_linear_type(&h.f, opts),
            Setting::Projective => gradient_linear_type(&h.f, opts),
        })?;
        report.linear_type = Some(VerdictRecord::new(&v, &ring)?);
    }
    let plane_curve = req.setting == Setting::Projective && ring.nvars() == 3;
    if has(Command::Genus) || (analyze && plane_curve && req.assert_irreducible) {
        let leftover = locus.as_ref().and_then(|l| l.leftover.as_ref());
        match genus(&h, &reports, leftover) {
            Ok(g) => report.genus = Some(g),
            Err(e) if !has(Command::Genus) => report.warnings.push(format!("genus not computed: {e}")),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sextic_report() {
        let req = AnalysisRequest::inline("(x^2-y^2)^3 - x^2*y^2*z^2", Setting::Projective, [Command::Analyze]);
        let (r, code) = run(&req);
        assert_eq!(code, 0, "{}", r.summary());
        let pts = r.singular_points.as_ref().unwrap();
        assert_eq!(pts.len(), 3);
        let top = pts.iter().find(|p| p.point == "[0:0:1]").unwrap();
        assert_eq!((top.milnor, top.tjurina), (13, 12));
        assert_eq!(top.chart.as_deref(), Some("z"));
        assert!(!r.linear_type.as_ref().unwrap().verdict);
        assert!(r.to_json().contains("\"schema_version\": 1"));
    }

    #[test]
    fn affine_non_eulerian() {
        let req = AnalysisRequest::inline("x^5 - y^6 + x^3*y^4", Setting::Affine, [Command::Analyze]);
        let (r, code) = run(&req);
        assert_eq!(code, 0);
        let p = &r.singular_points.unwrap()[0];
        assert_eq!(p.point, "(0, 0)");
        assert!(!p.locally_eulerian);
    }

    #[test]
    fn fermat_linear_type() {
        let req = AnalysisRequest::inline("x^4+y^4+z^4", Setting::Projective, [Command::LinearType]);
        let (r, code) = run(&req);
        assert_eq!(code, 0);
        assert!(r.linear_type.unwrap().verdict);
    }

    #[test]
    fn exit_codes() {
        let (r, code) = run(&AnalysisRequest::inline("x^", Setting::Affine, [Command::Milnor]));
        assert_eq!(code, 1);
        assert_eq!(r.error.unwrap().kind, "parse");
        let (_, code) = run(&AnalysisRequest::inline("x^2+y", Setting::Projective, [Command::Milnor]));
        assert_eq!(code, 1);
        let (r, code) = run(&AnalysisRequest::inline("x^2*y^2", Setting::Affine, [Command::Milnor]));
        assert_eq!(code, 2, "{}", r.summary());
        let (r, code) = run(&AnalysisRequest::inline("x^3+y^3", Setting::Affine, []));
        assert_eq!(code, 1);
        assert!(r.error.is_some());
    }

    #[test]
    fn chart_override() {
        let mut req = AnalysisRequest::inline("(x^2-y^2)^3 - x^2*y^2*z^2", Setting::Projective, [Command::Milnor]);
        req.chart = Some("y".into());
        let (r, code) = run(&req);
        assert_eq!(code, 0);
        let pts = r.singular_points.unwrap();
        let charts: Vec<_> = pts.iter().map(|p| p.chart.clone().unwrap()).collect();
        assert_eq!(charts, ["y", "y", "z"]);
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(pts[2].milnor, 13);
    }

    #[test]
    fn genus_of_irreducible_quartic() {
        let mut req = AnalysisRequest::inline("x^4+y^4+x^2*z^2-y^2*z^2", Setting::Projective, [Command::Analyze]);
        req.assert_irreducible = true;
        let (r, code) = run(&req);
        assert_eq!(code, 0, "{}", r.summary());
        assert_eq!(r.genus, Some(2));
        let (r, _) = run(&AnalysisRequest::inline("x^4+y^4+z^4", Setting::Projective, [Command::Genus]));
        assert_eq!(r.error.unwrap().kind, "precondition");
    }

    #[test]
    fn inferred_ring_order() {
        assert_eq!(infer_ring("w*y + a*x + z"), ["x", "y", "z", "w", "a"]);
    }
}
