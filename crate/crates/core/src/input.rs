//! The JSON input document shared by every command.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "curves": [{ "name": "C", "genus": 1, "self": 0, "proper": true }],
//!   "intersections": [["C", "E1", 1]],
//!   "boundary": ["C"],
//!   "isolated_boundary_points": 0,
//!   "false_fibre_claims": [{ "subject": ["C"], "certificate": "user_asserted" }],
//!   "fibration_asserted": false
//! }
//! ```
//!
//! Curves are referenced by name or by index. Rationals are integers or `"p/q"`
//! strings. Unlisted pairs intersect in 0.

use crate::config::{Configuration, NodeSet};
use crate::elliptic::{ECPoint, WeierstrassCurve};
use crate::fibre::{Certificate, FalseFibreClaim};
use crate::hironaka::{hironaka_build, HironakaBuild, HironakaError, HironakaInput};
use crate::linalg::SymmetricMatrix;
use crate::rational::{format_rational, JsonRational};
use crate::saturation::{CompactifiedSurface, Contractibility};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

impl InputError {
    fn at(path: impl Into<String>, message: impl std::fmt::Display) -> Self {
        InputError::Schema { path: path.into(), message: message.to_string() }
    }

    pub fn path(&self) -> Option<&str> {
        match self {
            InputError::Schema { path, .. } => Some(path),
            InputError::Io { .. } => None,
        }
    }
}

/// A curve referenced by its name or its position in `curves`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub name: String,
    #[serde(default)]
    pub genus: u32,
    #[serde(rename = "self")]
    pub self_intersection: JsonRational,
    #[serde(default = "yes")]
    pub proper: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimSpec {
    pub subject: Vec<CurveRef>,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContractibilitySpec {
    pub component: Vec<CurveRef>,
    pub verdict: Contractibility,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub x: JsonRational,
    pub y: JsonRational,
    #[serde(default = "unit_multiplicity")]
    pub m: u32,
}

fn unit_multiplicity() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffinePointSpec {
    pub x: JsonRational,
    pub y: JsonRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipticSpec {
    pub curve: WeierstrassCurve,
    pub points: Vec<PointSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<AffinePointSpec>,
    /// Name of the cubic's strict transform among `curves`; only used when `curves` is nonempty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    #[serde(default)]
    pub curves: Vec<CurveSpec>,
    #[serde(default)]
    pub intersections: Vec<(CurveRef, CurveRef, JsonRational)>,
    #[serde(default)]
    pub boundary: Vec<CurveRef>,
    #[serde(default)]
    pub isolated_boundary_points: u32,
    #[serde(default)]
    pub false_fibre_claims: Vec<ClaimSpec>,
    #[serde(default)]
    pub fibration_asserted: bool,
    /// The supplied curves are all curves of interest on a complete surface.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_surface: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scheme_contractibility: Vec<ContractibilitySpec>,
    /// Curve sets to contract for the `mumford` command.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contract: Vec<Vec<CurveRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elliptic: Option<EllipticSpec>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: InputDocument = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            InputError::at(if path == "." { "$".to_string() } else { format!("$.{path}") }, e.inner())
        })?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(InputError::at(
                "$.schema_version",
                format!("unsupported schema version {} (expected {SCHEMA_VERSION})", doc.schema_version),
            ));
        }
        Ok(doc)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    fn resolve(&self, r: &CurveRef, path: &str) -> Result<usize, InputError> {
        match r {
            CurveRef::Index(i) if *i < self.curves.len() => Ok(*i),
            CurveRef::Index(i) => Err(InputError::at(path, format!("curve index {i} out of range"))),
            CurveRef::Name(name) => self
                .curves
                .iter()
                .position(|c| &c.name == name)
                .ok_or_else(|| InputError::at(path, format!("unknown curve {name:?}"))),
        }
    }

    fn resolve_set(&self, refs: &[CurveRef], path: &str) -> Result<NodeSet, InputError> {
        refs.iter().enumerate().map(|(k, r)| self.resolve(r, &format!("{path}[{k}]"))).collect()
    }

    pub fn configuration(&self) -> Result<Configuration, InputError> {
        let n = self.curves.len();
        let mut gram = SymmetricMatrix::zeros(n);
        let mut seen = BTreeMap::new();
        for (i, c) in self.curves.iter().enumerate() {
            if self.curves[..i].iter().any(|d| d.name == c.name) {
                return Err(InputError::at(
                    format!("$.curves[{i}].name"),
                    format!("duplicate curve name {:?}", c.name),
                ));
            }
            gram.set(i, i, c.self_intersection.0.clone());
        }
        for (k, (a, b, value)) in self.intersections.iter().enumerate() {
            let path = format!("$.intersections[{k}]");
            let i = self.resolve(a, &format!("{path}[0]"))?;
            let j = self.resolve(b, &format!("{path}[1]"))?;
            if i == j {
                return Err(InputError::at(path, "self-intersections belong in the curve's \"self\" field"));
            }
            if value.0 < crate::rational::zero() {
                return Err(InputError::at(
                    format!("{path}[2]"),
                    format!("distinct curves meet non-negatively, got {}", format_rational(&value.0)),
                ));
            }
            let key = (i.min(j), i.max(j));
            if let Some(previous) = seen.insert(key, value.0.clone()) {
                if previous != value.0 {
                    return Err(InputError::at(path, "conflicts with an earlier entry for the same pair"));
                }
            }
            gram.set(i, j, value.0.clone());
        }
        Configuration::new(self.curves.iter().map(|c| (c.name.clone(), c.genus, c.proper)).collect(), gram)
            .map_err(|e| InputError::at("$.curves", e))
    }

    fn hironaka_input(&self) -> Result<Option<HironakaInput>, InputError> {
        let Some(spec) = &self.elliptic else { return Ok(None) };
        let c = &spec.curve;
        let curve = WeierstrassCurve::new(c.a1.clone(), c.a2.clone(), c.a3.clone(), c.a4.clone(), c.a6.clone())
            .map_err(|e| InputError::at("$.elliptic.curve", e))?;
        let mut points = Vec::new();
        for (k, p) in spec.points.iter().enumerate() {
            let point = ECPoint::affine(p.x.0.clone(), p.y.0.clone());
            curve.check(&point).map_err(|e| InputError::at(format!("$.elliptic.points[{k}]"), e))?;
            points.push((point, p.m));
        }
        let generator = match &spec.generator {
            Some(g) => {
                let point = ECPoint::affine(g.x.0.clone(), g.y.0.clone());
                curve.check(&point).map_err(|e| InputError::at("$.elliptic.generator", e))?;
                Some(point)
            }
            None => None,
        };
        Ok(Some(HironakaInput { curve, points, generator, fibration_asserted: self.fibration_asserted }))
    }

    /// Validates the document and builds the objects the commands work on.
    pub fn to_problem(&self) -> Result<Problem, InputError> {
        let hironaka = self.hironaka_input()?;
        let build = match &hironaka {
            Some(h) => Some(hironaka_build(h).map_err(|e| match e {
                HironakaError::Elliptic(inner) => InputError::at("$.elliptic.points", inner),
                other => InputError::at("$.elliptic", other),
            })?),
            None => None,
        };

        if self.curves.is_empty() {
            if let Some(build) = build {
                return self.problem_from_build(build);
            }
        }
        let ambient = self.configuration()?;
        let boundary = self.resolve_set(&self.boundary, "$.boundary")?;
        let mut claims = Vec::new();
        for (k, c) in self.false_fibre_claims.iter().enumerate() {
            let subject = self.resolve_set(&c.subject, &format!("$.false_fibre_claims[{k}].subject"))?;
            claims.push(FalseFibreClaim { subject, certificate: c.certificate.clone() });
        }
        let mut oracle = BTreeMap::new();
        for (k, c) in self.scheme_contractibility.iter().enumerate() {
            let component = self.resolve_set(&c.component, &format!("$.scheme_contractibility[{k}].component"))?;
            oracle.insert(component, c.verdict);
        }
        if let Some(build) = &build {
            let name = self.elliptic.as_ref().and_then(|e| e.cubic.clone()).unwrap_or_else(|| "C".to_string());
            let id = self.resolve(&CurveRef::Name(name.clone()), "$.elliptic.cubic")?;
            let expected = crate::rational::int(build.self_intersection());
            if ambient.gram().get(id, id) != &expected {
                return Err(InputError::at(
                    "$.elliptic.cubic",
                    format!(
                        "curve {name:?} has self-intersection {} but blowing up {} points of a cubic gives {}",
                        format_rational(ambient.gram().get(id, id)),
                        build.n,
                        expected
                    ),
                ));
            }
            let cubic: NodeSet = [id].into_iter().collect();
            for claim in &build.surface.false_fibre_claims {
                claims.push(FalseFibreClaim { subject: cubic.clone(), certificate: claim.certificate.clone() });
            }
            for verdict in build.oracle.values() {
                oracle.entry(cubic.clone()).or_insert(*verdict);
            }
        }
        let interior = ambient.all_nodes().difference(&boundary).copied().collect();
        let surface = CompactifiedSurface::with_parts(
            ambient,
            boundary,
            interior,
            self.isolated_boundary_points,
            claims,
            self.fibration_asserted,
        )
        .map_err(|e| InputError::at("$", e))?;
        let contract = self
            .contract
            .iter()
            .enumerate()
            .map(|(k, part)| self.resolve_set(part, &format!("$.contract[{k}]")))
            .collect::<Result<_, _>>()?;
        Ok(Problem {
            surface,
            complete_surface: self.complete_surface.unwrap_or(false),
            oracle,
            contract,
            hironaka: build,
        })
    }

    fn problem_from_build(&self, build: HironakaBuild) -> Result<Problem, InputError> {
        let refs_unused = !self.boundary.is_empty()
            || !self.false_fibre_claims.is_empty()
            || !self.scheme_contractibility.is_empty()
            || !self.contract.is_empty()
            || !self.intersections.is_empty();
        if refs_unused {
            return Err(InputError::at(
                "$",
                "without \"curves\" the surface is generated from \"elliptic\"; curve references are not allowed",
            ));
        }
        let mut surface = build.surface.clone();
        surface.isolated_boundary_points = self.isolated_boundary_points;
        Ok(Problem {
            surface,
            complete_surface: self.complete_surface.unwrap_or(false),
            oracle: build.oracle.clone(),
            contract: Vec::new(),
            hironaka: Some(build),
        })
    }
}

/// A validated input, ready for analysis.
#[derive(Debug, Clone)]
pub struct Problem {
    pub surface: CompactifiedSurface,
    pub complete_surface: bool,
    pub oracle: BTreeMap<NodeSet, Contractibility>,
    pub contract: Vec<NodeSet>,
    pub hironaka: Option<HironakaBuild>,
}

/// The input document for a Hironaka surface given only by its points.
pub fn hironaka_document(
    curve: &WeierstrassCurve,
    points: &[(ECPoint, u32)],
    generator: Option<&ECPoint>,
    fibration_asserted: bool,
) -> InputDocument {
    let affine = |p: &ECPoint| match p {
        ECPoint::Affine { x, y } => (JsonRational(x.clone()), JsonRational(y.clone())),
        ECPoint::Infinity => panic!("blown-up points are affine"),
    };
    InputDocument {
        schema_version: SCHEMA_VERSION,
        curves: Vec::new(),
        intersections: Vec::new(),
        boundary: Vec::new(),
        isolated_boundary_points: 0,
        false_fibre_claims: Vec::new(),
        fibration_asserted,
        complete_surface: None,
        scheme_contractibility: Vec::new(),
        contract: Vec::new(),
        elliptic: Some(EllipticSpec {
            curve: curve.clone(),
            points: points
                .iter()
                .map(|(p, m)| {
                    let (x, y) = affine(p);
                    PointSpec { x, y, m: *m }
                })
                .collect(),
            generator: generator.map(|g| {
                let (x, y) = affine(g);
                AffinePointSpec { x, y }
            }),
            cubic: None,
        }),
    }
}
