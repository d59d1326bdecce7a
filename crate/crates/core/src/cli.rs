//! Command dispatch and report serialization for the `surfsat` binary.
//!
//! Every report is a JSON object with sorted keys; each verdict carries the
//! criterion tag it was decided by. Human output flattens the same object into
//! `key: value` lines.

use crate::config::{Configuration, Divisor, NodeSet};
use crate::elliptic::{Obstruction, TorsionStatus};
use crate::fibre::{
    check_disjoint_pair, classify_fibre_type, proportionality, validate_false_fibre_claims, validate_zariski,
    ClaimCheck, PairCheck, Proportionality, ZariskiStatus,
};
use crate::input::{InputDocument, InputError, Problem};
use crate::mumford::contract;
use crate::rational::{format_rational, Rational};
use crate::saturation::{
    affinisation_dimension, apply_plan, criterion, is_saturated, saturation_plan, scheme_saturation_check, AffDim,
    CompactifiedSurface, SaturationError, SchemeVerdict,
};
use serde_json::{json, Map, Value};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Analyze,
    Saturate,
    Affdim,
    Fibre,
    Mumford,
    Hironaka,
    Validate,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Saturate => "saturate",
            Command::Affdim => "affdim",
            Command::Fibre => "fibre",
            Command::Mumford => "mumford",
            Command::Hironaka => "hironaka",
            Command::Validate => "validate",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        <Self as clap::ValueEnum>::from_str(name, true).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Human,
    Json,
}

#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub input: PathBuf,
    pub command: Command,
    pub format: OutputFormat,
}

/// 0: definite verdict; 1: input error or inconsistent data; 2: undecided verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Definite = 0,
    Error = 1,
    Undecided = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn worst(self, other: ExitStatus) -> ExitStatus {
        use ExitStatus::*;
        match (self, other) {
            (Error, _) | (_, Error) => Error,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Definite,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: ExitStatus,
    pub report: Value,
}

impl Outcome {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(&self.report).expect("report serializes") + "\n",
            OutputFormat::Human => render_human(&self.report),
        }
    }
}

pub fn run(request: &AnalysisRequest) -> Outcome {
    match InputDocument::from_path(&request.input) {
        Ok(doc) => run_document(request.command, &doc),
        Err(e) => input_error(request.command, &e),
    }
}

pub fn run_json(command: Command, text: &str) -> Outcome {
    match InputDocument::from_json(text) {
        Ok(doc) => run_document(command, &doc),
        Err(e) => input_error(command, &e),
    }
}

pub fn run_document(command: Command, doc: &InputDocument) -> Outcome {
    let problem = match doc.to_problem() {
        Ok(p) => p,
        Err(e) => return input_error(command, &e),
    };
    log::debug!(
        "{}: {} curves, boundary {:?}",
        command.name(),
        problem.surface.ambient.len(),
        problem.surface.boundary
    );
    let result = match command {
        Command::Analyze => analyze(&problem),
        Command::Saturate => saturate(&problem.surface),
        Command::Affdim => affdim(&problem.surface),
        Command::Fibre => fibre(&problem),
        Command::Mumford => mumford(&problem),
        Command::Hironaka => hironaka(&problem),
        Command::Validate => validate(&problem),
    };
    match result {
        Ok((status, mut body)) => {
            body.insert("command".into(), json!(command.name()));
            Outcome { status, report: Value::Object(body) }
        }
        Err(e) => failure(command, e),
    }
}

type Report = Result<(ExitStatus, Map<String, Value>), SaturationError>;

fn input_error(command: Command, e: &InputError) -> Outcome {
    let mut error = Map::new();
    error.insert("kind".into(), json!("input"));
    error.insert("message".into(), json!(e.to_string()));
    if let Some(path) = e.path() {
        error.insert("path".into(), json!(path));
    }
    Outcome { status: ExitStatus::Error, report: json!({ "command": command.name(), "error": error }) }
}

fn failure(command: Command, e: SaturationError) -> Outcome {
    let error = match &e {
        SaturationError::Inconsistent { criterion, detail } => {
            json!({ "kind": "inconsistent", "criterion": criterion, "witness": detail, "message": e.to_string() })
        }
        _ => json!({ "kind": "invalid", "message": e.to_string() }),
    };
    Outcome { status: ExitStatus::Error, report: json!({ "command": command.name(), "error": error }) }
}

fn names(config: &Configuration, set: &NodeSet) -> Value {
    json!(config.names_of(set))
}

fn rational(q: &Rational) -> Value {
    json!(format_rational(q))
}

fn divisor(config: &Configuration, d: &Divisor) -> Value {
    Value::Object(d.terms().map(|(i, c)| (config.nodes()[i].name.clone(), rational(c))).collect())
}

fn gram(config: &Configuration) -> Value {
    let n = config.len();
    json!((0..n).map(|i| (0..n).map(|j| rational(config.gram().get(i, j))).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn affdim_label(v: AffDim) -> &'static str {
    match v {
        AffDim::Two => "Two",
        AffDim::One => "One",
        AffDim::Zero => "Zero",
        AffDim::OneOrZero => "OneOrZero",
    }
}

fn saturation_body(s: &CompactifiedSurface) -> Report {
    let verdict = is_saturated(s);
    let plan = saturation_plan(s)?;
    let sat = apply_plan(s, &plan)?;
    let cfg = &s.ambient;
    let mut body = Map::new();
    body.insert("saturated".into(), json!(verdict.saturated));
    body.insert("criterion".into(), json!(verdict.criterion));
    body.insert(
        "negative_definite_components".into(),
        json!(verdict.negative_definite_components.iter().map(|c| names(cfg, c)).collect::<Vec<_>>()),
    );
    body.insert("isolated_boundary_points".into(), json!(verdict.isolated_points));
    body.insert(
        "plan".into(),
        json!({
            "criterion": criterion::SATURATION_RECIPE,
            "contract": plan.d_minus.iter().map(|c| names(cfg, c)).collect::<Vec<_>>(),
            "keep": plan.d_plus.iter().map(|c| names(cfg, c)).collect::<Vec<_>>(),
            "points_to_remove": plan.points_to_remove,
            "result_saturated": plan.resulting_boundary_ok,
        }),
    );
    body.insert(
        "saturation".into(),
        json!({
            "boundary": names(&sat.surface.ambient, &sat.surface.boundary),
            "singular_points": sat.singular_points,
            "gram": gram(&sat.surface.ambient),
            "curves": sat.surface.ambient.nodes().iter().map(|n| n.name.clone()).collect::<Vec<_>>(),
        }),
    );
    Ok((ExitStatus::Definite, body))
}

fn saturate(s: &CompactifiedSurface) -> Report {
    saturation_body(s)
}

fn affdim(s: &CompactifiedSurface) -> Report {
    let mut body = Map::new();
    let verdict = is_saturated(s);
    let target = if verdict.saturated {
        s.clone()
    } else {
        let plan = saturation_plan(s)?;
        log::info!("surface not saturated; contracting {} component(s) first", plan.d_minus.len());
        apply_plan(s, &plan)?.surface
    };
    body.insert("saturation_applied".into(), json!(!verdict.saturated));
    let report = affinisation_dimension(&target)?;
    let status = if report.verdict.is_definite() { ExitStatus::Definite } else { ExitStatus::Undecided };
    body.insert("verdict".into(), json!(affdim_label(report.verdict)));
    body.insert(
        "criterion".into(),
        json!(report.reasons.last().map(|r| r.criterion).unwrap_or(criterion::NO_NEGATIVE_DEFINITE_COMPONENT)),
    );
    body.insert("reasons".into(), json!(report.reasons));
    body.insert("missing_certificates".into(), json!(report.missing_certificates));
    Ok((status, body))
}

fn fibre(p: &Problem) -> Report {
    let s = &p.surface;
    let cfg = &s.ambient;
    let components = s.boundary_components();
    let mut entries = Vec::new();
    let mut kernels = Vec::new();
    for c in &components {
        let report = classify_fibre_type(cfg, c).map_err(SaturationError::from)?;
        let zariski = if report.is_fibre_type() {
            match validate_zariski(cfg, c).map_err(SaturationError::from)? {
                ZariskiStatus::Ok { subsets_checked } => json!({ "status": "ok", "subsets_checked": subsets_checked }),
                ZariskiStatus::Violations(v) => json!({ "status": "violations", "violations": v }),
                ZariskiStatus::Skipped { n } => json!({ "status": "skipped", "size": n }),
            }
        } else {
            Value::Null
        };
        if let Some(k) = &report.kernel {
            kernels.push((c.clone(), k.clone()));
        }
        entries.push(json!({
            "component": names(cfg, c),
            "verdict": report.verdict,
            "criterion": "fibre-type-semidefinite-not-definite",
            "kernel": report.kernel.as_ref().map(|k| divisor(cfg, k)),
            "zariski": zariski,
        }));
    }
    let probes: Vec<Divisor> = (0..cfg.len()).map(Divisor::prime).collect();
    let mut pairs = Vec::new();
    let mut status = ExitStatus::Definite;
    for a in 0..kernels.len() {
        for b in (a + 1)..kernels.len() {
            let prop = proportionality(cfg, &kernels[a].1, &kernels[b].1, &probes).map_err(SaturationError::from)?;
            let (verdict, detail) = match prop {
                Proportionality::Proportional { c } => ("proportional", rational(&c)),
                Proportionality::NotProportional { witness } => {
                    if p.complete_surface {
                        status = ExitStatus::Error;
                    }
                    ("not_proportional", json!(cfg.nodes()[witness].name))
                }
                Proportionality::Undetermined => ("undetermined", Value::Null),
            };
            pairs.push(json!({
                "pair": [names(cfg, &kernels[a].0), names(cfg, &kernels[b].0)],
                "verdict": verdict,
                "detail": detail,
                "criterion": "disjoint-fibre-type-numerically-proportional",
            }));
        }
    }
    if p.complete_surface {
        for (d1, _) in &kernels {
            for d2 in &components {
                if d1 == d2 {
                    continue;
                }
                if let Ok(PairCheck::Violation { d2_verdict }) = check_disjoint_pair(cfg, d1, d2, true) {
                    status = ExitStatus::Error;
                    pairs.push(json!({
                        "pair": [names(cfg, d1), names(cfg, d2)],
                        "verdict": "hodge_index_violation",
                        "detail": d2_verdict,
                        "criterion": "disjoint-from-fibre-type-is-fibre-type",
                    }));
                }
            }
        }
    }
    let claims = claims_value(s)?;
    if claims["verdict"] == "contradiction" {
        status = ExitStatus::Error;
    }
    let mut body = Map::new();
    body.insert("components".into(), json!(entries));
    body.insert("pairs".into(), json!(pairs));
    body.insert("claims".into(), claims);
    Ok((status, body))
}

fn claims_value(s: &CompactifiedSurface) -> Result<Value, SaturationError> {
    let cfg = &s.ambient;
    Ok(match validate_false_fibre_claims(&s.false_fibre_claims, cfg)? {
        ClaimCheck::Ok => json!({
            "verdict": "ok",
            "count": s.false_fibre_claims.len(),
            "criterion": criterion::THREE_DISJOINT_FIBRE_TYPE,
        }),
        ClaimCheck::Contradiction { triple } => json!({
            "verdict": "contradiction",
            "witness": triple.iter().map(|t| names(cfg, t)).collect::<Vec<_>>(),
            "criterion": criterion::THREE_DISJOINT_FIBRE_TYPE,
        }),
    })
}

fn mumford(p: &Problem) -> Report {
    let s = &p.surface;
    let parts = if p.contract.is_empty() { is_saturated(s).negative_definite_components } else { p.contract.clone() };
    let out = contract(&s.ambient, &parts)?;
    let ctx_union: NodeSet = parts.iter().flatten().copied().collect();
    let ctx = crate::mumford::ContractionContext::new(&s.ambient, ctx_union)?;
    let pullbacks: Vec<Value> = out
        .surviving
        .iter()
        .map(|&i| {
            let pb = ctx.pullback(&Divisor::prime(i))?;
            Ok(json!({ "curve": s.ambient.nodes()[i].name, "pullback": divisor(&s.ambient, &pb) }))
        })
        .collect::<Result<_, SaturationError>>()?;
    let mut body = Map::new();
    body.insert("criterion".into(), json!("mumford-pullback"));
    body.insert("contracted".into(), json!(parts.iter().map(|c| names(&s.ambient, c)).collect::<Vec<_>>()));
    body.insert("singular_points".into(), json!(out.points));
    body.insert("curves".into(), json!(out.config.nodes().iter().map(|n| n.name.clone()).collect::<Vec<_>>()));
    body.insert("gram".into(), gram(&out.config));
    body.insert("pullbacks".into(), json!(pullbacks));
    Ok((ExitStatus::Definite, body))
}

fn obstruction_value(o: &Obstruction) -> Value {
    match o {
        Obstruction::ObstructionFound { sum } => json!({
            "verdict": "obstruction_found",
            "sum": sum.to_string(),
            "criterion": "weighted-sum-non-torsion",
        }),
        Obstruction::Inconclusive { sum, order } => json!({
            "verdict": "inconclusive",
            "sum": sum.to_string(),
            "order": order,
            "criterion": "weighted-sum-torsion-necessary-not-sufficient",
        }),
    }
}

fn hironaka(p: &Problem) -> Report {
    let Some(build) = &p.hironaka else {
        return Err(SaturationError::Inconsistent {
            criterion: "hironaka-input",
            detail: "document has no \"elliptic\" section".into(),
        });
    };
    let s = &p.surface;
    let mut status = if build.obstruction.found() { ExitStatus::Definite } else { ExitStatus::Undecided };
    let mut body = Map::new();
    body.insert("n".into(), json!(build.n));
    body.insert("self_intersection".into(), json!(build.self_intersection()));
    body.insert("criterion".into(), json!("cubic-transform-self-intersection-9-minus-n"));
    body.insert(
        "boundary_class".into(),
        json!({ "name": build.boundary_class.name, "class": build.boundary_class.class, "genus": build.boundary_class.genus }),
    );
    body.insert("obstruction".into(), obstruction_value(&build.obstruction));
    body.insert("unit_sum_obstruction".into(), obstruction_value(&build.unit_obstruction));
    if let Some(ss) = &build.same_sign {
        body.insert(
            "same_sign_multiples".into(),
            json!({
                "generator": ss.generator.to_string(),
                "coefficients": ss.coefficients,
                "criterion": "no-positive-relation-among-points",
            }),
        );
    }
    let sat = is_saturated(s);
    body.insert("saturated".into(), json!(sat.saturated));
    if sat.saturated {
        let r = affinisation_dimension(s)?;
        if !r.verdict.is_definite() {
            status = status.worst(ExitStatus::Undecided);
        }
        body.insert(
            "affdim".into(),
            json!({
                "verdict": affdim_label(r.verdict),
                "criterion": r.reasons.last().map(|x| x.criterion),
                "reasons": r.reasons,
            }),
        );
    } else {
        let report = scheme_saturation_check(s, &p.oracle)?;
        if report.verdict == SchemeVerdict::Unknown {
            status = status.worst(ExitStatus::Undecided);
        }
        body.insert(
            "scheme_saturation".into(),
            json!({
                "verdict": report.verdict,
                "criterion": report.reasons.first().map(|r| r.criterion),
                "reasons": report.reasons,
            }),
        );
        let plan = saturation_plan(s)?;
        body.insert(
            "plan".into(),
            json!({
                "criterion": criterion::SATURATION_RECIPE,
                "contract": plan.d_minus.iter().map(|c| names(&s.ambient, c)).collect::<Vec<_>>(),
            }),
        );
    }
    let torsion = |o: &Obstruction| match o {
        Obstruction::ObstructionFound { .. } => TorsionStatus::NonTorsion,
        Obstruction::Inconclusive { order, .. } => TorsionStatus::Torsion(*order),
    };
    body.insert("sum_torsion".into(), json!(torsion(&build.obstruction)));
    Ok((status, body))
}

fn validate(p: &Problem) -> Report {
    let s = &p.surface;
    let mut checks = Vec::new();
    let claims = claims_value(s)?;
    if claims["verdict"] == "contradiction" {
        return Err(SaturationError::Inconsistent {
            criterion: criterion::THREE_DISJOINT_FIBRE_TYPE,
            detail: format!("pairwise disjoint false-fibre claims {}", claims["witness"]),
        });
    }
    checks
        .push(json!({ "check": "false_fibre_claims", "criterion": criterion::THREE_DISJOINT_FIBRE_TYPE, "ok": true }));
    let (fibre_status, fibre_body) = fibre(p)?;
    if fibre_status == ExitStatus::Error {
        return Err(SaturationError::Inconsistent {
            criterion: "disjoint-fibre-type-numerically-proportional",
            detail: format!("{}", Value::Array(fibre_body["pairs"].as_array().cloned().unwrap_or_default())),
        });
    }
    checks.push(
        json!({ "check": "fibre_type_components", "criterion": "fibre-type-semidefinite-not-definite", "ok": true }),
    );
    let (_, aff) = affdim(s)?;
    checks.push(json!({ "check": "affinisation_consistency", "criterion": aff["criterion"], "ok": true }));
    if !p.oracle.is_empty() {
        scheme_saturation_check(s, &p.oracle)?;
        checks.push(
            json!({ "check": "contractibility_oracle", "criterion": criterion::SCHEME_CONTRACTIBILITY, "ok": true }),
        );
    }
    let mut body = Map::new();
    body.insert("valid".into(), json!(true));
    body.insert("criterion".into(), json!("schema-and-consistency"));
    body.insert("checks".into(), json!(checks));
    Ok((ExitStatus::Definite, body))
}

fn analyze(p: &Problem) -> Report {
    let (_, saturation) = saturation_body(&p.surface)?;
    let (aff_status, aff) = affdim(&p.surface)?;
    let (fibre_status, fib) = fibre(p)?;
    let mut body = Map::new();
    body.insert("criterion".into(), aff["criterion"].clone());
    body.insert("verdict".into(), aff["verdict"].clone());
    body.insert("saturation".into(), Value::Object(saturation));
    body.insert("affdim".into(), Value::Object(aff));
    body.insert("fibre".into(), Value::Object(fib));
    Ok((aff_status.worst(fibre_status), body))
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(items) => {
            out.push(format!("{prefix}: [{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_human(report: &Value) -> String {
    let mut lines = Vec::new();
    flatten("", report, &mut lines);
    lines.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_text(command: Command, text: &str) -> Outcome {
        run_json(command, text)
    }

    const SERRE_LIKE: &str =
        r#"{"schema_version": 1, "curves": [{"name": "D", "genus": 1, "self": 0}], "boundary": ["D"]}"#;

    #[test]
    fn exit_codes() {
        let o = run_text(Command::Affdim, SERRE_LIKE);
        assert_eq!(o.status, ExitStatus::Undecided);
        assert_eq!(o.report["verdict"], "OneOrZero");
        let o = run_text(Command::Saturate, SERRE_LIKE);
        assert_eq!(o.status, ExitStatus::Definite);
        let o = run_text(Command::Affdim, "{");
        assert_eq!(o.status, ExitStatus::Error);
        assert_eq!(o.report["error"]["kind"], "input");
    }

    #[test]
    fn three_disjoint_claims_exit_one() {
        let text = r#"{"schema_version": 1,
            "curves": [{"name": "A", "self": 0}, {"name": "B", "self": 0}, {"name": "C", "self": 0}],
            "boundary": ["A", "B", "C"],
            "false_fibre_claims": [
                {"subject": ["A"], "certificate": "user_asserted"},
                {"subject": ["B"], "certificate": "user_asserted"},
                {"subject": ["C"], "certificate": "user_asserted"}]}"#;
        for cmd in [Command::Affdim, Command::Validate] {
            let o = run_text(cmd, text);
            assert_eq!(o.status, ExitStatus::Error, "{cmd:?}");
            assert_eq!(o.report["error"]["kind"], "inconsistent");
        }
        assert_eq!(run_text(Command::Fibre, text).status, ExitStatus::Error);
    }

    #[test]
    fn human_output_is_line_oriented() {
        let o = run_text(Command::Affdim, SERRE_LIKE);
        let text = o.render(OutputFormat::Human);
        assert!(text.lines().any(|l| l == "verdict: OneOrZero"));
        assert!(text.lines().any(|l| l == "command: affdim"));
    }
}
