//! Saturation of an open surface `X = X̄ ∖ D` read off from the boundary `D`,
//! and the dimension of its affinisation.
//!
//! `X` is saturated exactly when `D` has no isolated points and no negative
//! definite connected component. The saturation itself is obtained by
//! contracting the negative definite components and forgetting isolated points.

use crate::config::{ConfigError, Configuration, NodeSet};
use crate::fibre::{
    classify_fibre_type, validate_false_fibre_claims, ClaimCheck, FalseFibreClaim, FibreError, FibreVerdict,
};
use crate::linalg::{inertia, is_negative_definite};
use crate::mumford::{contract, MumfordError, SingularPoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub mod criterion {
    //! Tags naming the criterion behind each verdict.
    pub const NO_NEGATIVE_DEFINITE_COMPONENT: &str = "no-negative-definite-component";
    pub const ISOLATED_BOUNDARY_POINTS: &str = "isolated-boundary-points";
    pub const SATURATION_RECIPE: &str = "contract-negative-definite-components";
    pub const PROPER_SURFACE: &str = "empty-boundary-proper-surface";
    pub const NOT_SEMIDEFINITE: &str = "not-negative-semidefinite";
    pub const ALL_FIBRE_TYPE: &str = "every-component-fibre-type";
    pub const FIBRATION_ASSERTED: &str = "boundary-supports-fibres";
    pub const THREE_DISJOINT_FIBRE_TYPE: &str = "at-most-two-disjoint-false-fibres";
    pub const FALSE_FIBRE_COVER: &str = "sum-of-disjoint-false-fibres";
    pub const FALSE_FIBRE_PROPAGATION: &str = "disjoint-fibre-type-inherits-false-fibre";
    pub const MISSING_CERTIFICATE: &str = "false-fibre-certificate-missing";
    pub const RELATIVE_TO_SUPPLIED: &str = "relative-to-supplied-curves";
    pub const SCHEME_CONTRACTIBILITY: &str = "negative-definite-components-not-scheme-contractible";
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SaturationError {
    #[error("curve {0:?} is both boundary and interior")]
    Overlap(String),
    #[error("curve {0:?} is neither boundary nor interior")]
    Unassigned(String),
    #[error("curve {0:?} of the compactification is not proper")]
    ImproperNode(String),
    #[error("surface is not saturated; apply the saturation plan first (offending components: {0:?})")]
    NotSaturated(Vec<Vec<String>>),
    #[error("inconsistent data ({criterion}): {detail}")]
    Inconsistent { criterion: &'static str, detail: String },
    #[error("contractibility oracle does not cover negative definite component {0:?}")]
    OracleIncomplete(Vec<String>),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Fibre(#[from] FibreError),
    #[error(transparent)]
    Mumford(#[from] MumfordError),
}

/// A proper surface `X̄` with boundary `D`; the open surface is `X = X̄ ∖ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactifiedSurface {
    pub ambient: Configuration,
    pub boundary: NodeSet,
    pub isolated_boundary_points: u32,
    pub interior_curves: NodeSet,
    pub false_fibre_claims: Vec<FalseFibreClaim>,
    pub fibration_asserted: bool,
}

impl CompactifiedSurface {
    /// Every ambient curve not in `boundary` is interior.
    pub fn new(ambient: Configuration, boundary: NodeSet) -> Result<Self, SaturationError> {
        ambient.check_subset(&boundary)?;
        let interior = ambient.all_nodes().difference(&boundary).copied().collect();
        Self::with_parts(ambient, boundary, interior, 0, Vec::new(), false)
    }

    pub fn with_parts(
        ambient: Configuration,
        boundary: NodeSet,
        interior_curves: NodeSet,
        isolated_boundary_points: u32,
        false_fibre_claims: Vec<FalseFibreClaim>,
        fibration_asserted: bool,
    ) -> Result<Self, SaturationError> {
        ambient.check_subset(&boundary)?;
        ambient.check_subset(&interior_curves)?;
        if let Some(&i) = boundary.intersection(&interior_curves).next() {
            return Err(SaturationError::Overlap(ambient.nodes()[i].name.clone()));
        }
        for node in ambient.nodes() {
            if !boundary.contains(&node.id) && !interior_curves.contains(&node.id) {
                return Err(SaturationError::Unassigned(node.name.clone()));
            }
            if !node.proper {
                return Err(SaturationError::ImproperNode(node.name.clone()));
            }
        }
        for claim in &false_fibre_claims {
            ambient.check_subset(&claim.subject)?;
        }
        Ok(CompactifiedSurface {
            ambient,
            boundary,
            isolated_boundary_points,
            interior_curves,
            false_fibre_claims,
            fibration_asserted,
        })
    }

    pub fn boundary_components(&self) -> Vec<NodeSet> {
        self.ambient.connected_components(&self.boundary).expect("boundary ids validated")
    }

    /// Interior curves disjoint from the boundary, i.e. the proper curves of `X` among those supplied.
    pub fn proper_interior_curves(&self) -> NodeSet {
        self.interior_curves
            .iter()
            .copied()
            .filter(|&i| self.boundary.iter().all(|&b| !self.ambient.adjacent(i, b)))
            .collect()
    }

    fn names(&self, set: &NodeSet) -> Vec<String> {
        self.ambient.names_of(set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationVerdict {
    pub saturated: bool,
    pub negative_definite_components: Vec<NodeSet>,
    pub isolated_points: u32,
    pub criterion: &'static str,
}

pub fn is_saturated(s: &CompactifiedSurface) -> SaturationVerdict {
    let negative_definite_components: Vec<NodeSet> = s
        .boundary_components()
        .into_iter()
        .filter(|c| is_negative_definite(&s.ambient.subset_gram(c).expect("validated")))
        .collect();
    SaturationVerdict {
        saturated: s.isolated_boundary_points == 0 && negative_definite_components.is_empty(),
        negative_definite_components,
        isolated_points: s.isolated_boundary_points,
        criterion: criterion::NO_NEGATIVE_DEFINITE_COMPONENT,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationPlan {
    /// Negative definite boundary components, each contracted to a point.
    pub d_minus: Vec<NodeSet>,
    pub d_plus: Vec<NodeSet>,
    pub points_to_remove: u32,
    /// Whether the surface obtained by applying the plan passes the saturation criterion.
    pub resulting_boundary_ok: bool,
}

impl SaturationPlan {
    pub fn is_empty(&self) -> bool {
        self.d_minus.is_empty() && self.points_to_remove == 0
    }
}

pub fn saturation_plan(s: &CompactifiedSurface) -> Result<SaturationPlan, SaturationError> {
    let (d_minus, d_plus): (Vec<NodeSet>, Vec<NodeSet>) = s
        .boundary_components()
        .into_iter()
        .partition(|c| is_negative_definite(&s.ambient.subset_gram(c).expect("validated")));
    let mut plan =
        SaturationPlan { d_minus, d_plus, points_to_remove: s.isolated_boundary_points, resulting_boundary_ok: false };
    plan.resulting_boundary_ok = is_saturated(&apply_plan(s, &plan)?.surface).saturated;
    Ok(plan)
}

/// The saturation: negative definite components contracted, isolated points filled in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturated {
    pub surface: CompactifiedSurface,
    pub singular_points: Vec<SingularPoint>,
}

pub fn apply_plan(s: &CompactifiedSurface, plan: &SaturationPlan) -> Result<Saturated, SaturationError> {
    let contraction = contract(&s.ambient, &plan.d_minus)?;
    let new_id: BTreeMap<usize, usize> =
        contraction.surviving.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let remap = |set: &NodeSet| -> Option<NodeSet> { set.iter().map(|i| new_id.get(i).copied()).collect() };
    let boundary = plan.d_plus.iter().flat_map(|c| remap(c).expect("d_plus survives")).collect();
    let interior = remap(&s.interior_curves).expect("interior survives");
    let claims = s
        .false_fibre_claims
        .iter()
        .filter_map(|c| {
            remap(&c.subject).map(|subject| FalseFibreClaim { subject, certificate: c.certificate.clone() })
        })
        .collect();
    let surface =
        CompactifiedSurface::with_parts(contraction.config, boundary, interior, 0, claims, s.fibration_asserted)?;
    Ok(Saturated { surface, singular_points: contraction.points })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffDim {
    Two,
    One,
    Zero,
    OneOrZero,
}

impl AffDim {
    pub fn is_definite(self) -> bool {
        self != AffDim::OneOrZero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub criterion: &'static str,
    pub evidence: String,
}

impl Reason {
    fn new(criterion: &'static str, evidence: impl Into<String>) -> Self {
        Reason { criterion, evidence: evidence.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffDimReport {
    pub verdict: AffDim,
    pub reasons: Vec<Reason>,
    /// Boundary components still lacking a false-fibre certificate (only for `OneOrZero`).
    pub missing_certificates: Vec<Vec<String>>,
}

fn inconsistent(criterion: &'static str, detail: String) -> SaturationError {
    SaturationError::Inconsistent { criterion, detail }
}

/// Dimension of `H⁰(X, O_X)` for a saturated `X`.
///
/// Conclusions that depend on which proper curves `X` contains are drawn only
/// from the supplied interior curves and are labelled as such.
pub fn affinisation_dimension(s: &CompactifiedSurface) -> Result<AffDimReport, SaturationError> {
    use criterion::*;
    let sat = is_saturated(s);
    if !sat.saturated {
        let mut offending: Vec<Vec<String>> = sat.negative_definite_components.iter().map(|c| s.names(c)).collect();
        if sat.isolated_points > 0 {
            offending.push(vec![format!("{} isolated point(s)", sat.isolated_points)]);
        }
        return Err(SaturationError::NotSaturated(offending));
    }
    let mut reasons = Vec::new();
    if s.boundary.is_empty() {
        reasons.push(Reason::new(PROPER_SURFACE, "boundary is empty, so X is proper and H⁰(X, O) = k"));
        return Ok(AffDimReport { verdict: AffDim::Zero, reasons, missing_certificates: vec![] });
    }

    let components = s.boundary_components();
    let boundary_signs = inertia(&s.ambient.subset_gram(&s.boundary)?);
    if boundary_signs.positive > 0 {
        if components.len() > 1 {
            return Err(inconsistent(
                NOT_SEMIDEFINITE,
                format!(
                    "boundary is not negative semidefinite but has {} connected components; \
                     by the Hodge index theorem it would have to be connected",
                    components.len()
                ),
            ));
        }
        reasons.push(Reason::new(
            NOT_SEMIDEFINITE,
            format!("boundary intersection matrix has {} positive eigenvalue(s)", boundary_signs.positive),
        ));
        return Ok(AffDimReport { verdict: AffDim::Two, reasons, missing_certificates: vec![] });
    }

    for c in &components {
        let report = classify_fibre_type(&s.ambient, c)?;
        if report.verdict != FibreVerdict::FibreType {
            return Err(inconsistent(
                ALL_FIBRE_TYPE,
                format!("saturated boundary component {:?} is {:?}", s.names(c), report.verdict),
            ));
        }
    }
    reasons
        .push(Reason::new(ALL_FIBRE_TYPE, format!("{} boundary component(s), each of fibre type", components.len())));

    let interior = s.proper_interior_curves();
    let mut interior_fibre_type = Vec::new();
    for c in s.ambient.connected_components(&interior)? {
        let report = classify_fibre_type(&s.ambient, &c)?;
        match report.verdict {
            FibreVerdict::FibreType => interior_fibre_type.push(c),
            FibreVerdict::NegativeDefinite => {}
            verdict => {
                return Err(inconsistent(
                    NOT_SEMIDEFINITE,
                    format!(
                        "proper curves {:?} inside X are {verdict:?}; a connected divisor disjoint from a \
                         fibre-type boundary must be negative definite or of fibre type",
                        s.names(&c)
                    ),
                ))
            }
        }
    }

    let mut certified = Vec::new();
    for claim in &s.false_fibre_claims {
        let is_boundary_component = components.contains(&claim.subject);
        let is_interior_divisor = interior_fibre_type.contains(&claim.subject);
        if !is_boundary_component && !is_interior_divisor {
            return Err(inconsistent(
                FALSE_FIBRE_COVER,
                format!(
                    "false-fibre claim {:?} is neither a boundary component nor a fibre-type divisor inside X",
                    s.names(&claim.subject)
                ),
            ));
        }
        certified.push(claim);
    }
    if let ClaimCheck::Contradiction { triple } = validate_false_fibre_claims(&s.false_fibre_claims, &s.ambient)? {
        return Err(inconsistent(
            THREE_DISJOINT_FIBRE_TYPE,
            format!(
                "false-fibre claims {:?} contradict the bound",
                triple.iter().map(|t| s.names(t)).collect::<Vec<_>>()
            ),
        ));
    }

    let disjoint_count = components.len() + interior_fibre_type.len();
    let forces_fibration = s.fibration_asserted || disjoint_count >= 3;
    if forces_fibration && !certified.is_empty() {
        return Err(inconsistent(
            FALSE_FIBRE_COVER,
            format!(
                "a fibration is forced ({}) but false-fibre claims {:?} are present",
                if s.fibration_asserted { "asserted" } else { "three disjoint fibre-type divisors" },
                certified.iter().map(|c| s.names(&c.subject)).collect::<Vec<_>>()
            ),
        ));
    }
    if s.fibration_asserted {
        reasons.push(Reason::new(FIBRATION_ASSERTED, "boundary asserted to support fibres of a fibration"));
        return Ok(AffDimReport { verdict: AffDim::One, reasons, missing_certificates: vec![] });
    }
    if disjoint_count >= 3 {
        reasons.push(Reason::new(
            THREE_DISJOINT_FIBRE_TYPE,
            format!(
                "{} boundary and {} interior pairwise disjoint fibre-type divisors; they cannot all be false fibres",
                components.len(),
                interior_fibre_type.len()
            ),
        ));
        return Ok(AffDimReport { verdict: AffDim::One, reasons, missing_certificates: vec![] });
    }
    if let Some(first) = certified.first() {
        reasons.push(Reason::new(
            FALSE_FIBRE_COVER,
            format!("{:?} is a false fibre ({})", s.names(&first.subject), first.certificate.tag()),
        ));
        let uncovered: Vec<Vec<String>> =
            components.iter().filter(|c| !certified.iter().any(|cl| &cl.subject == *c)).map(|c| s.names(c)).collect();
        if !uncovered.is_empty() || !components.contains(&first.subject) {
            reasons.push(Reason::new(
                FALSE_FIBRE_PROPAGATION,
                format!("fibre-type divisors disjoint from a false fibre are false fibres: {uncovered:?}"),
            ));
        }
        return Ok(AffDimReport { verdict: AffDim::Zero, reasons, missing_certificates: vec![] });
    }
    reasons.push(Reason::new(
        MISSING_CERTIFICATE,
        "numerical data cannot distinguish a fibre from a false fibre; no certificate supplied",
    ));
    reasons.push(Reason::new(
        RELATIVE_TO_SUPPLIED,
        format!("{} fibre-type divisor(s) found among the supplied interior curves", interior_fibre_type.len()),
    ));
    Ok(AffDimReport {
        verdict: AffDim::OneOrZero,
        reasons,
        missing_certificates: components.iter().map(|c| s.names(c)).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Contractibility {
    SchemeContractible,
    NotSchemeContractible,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeVerdict {
    SchemeSaturated,
    NotSchemeSaturated,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSaturationReport {
    pub verdict: SchemeVerdict,
    pub saturated: bool,
    pub reasons: Vec<Reason>,
}

/// Saturation within schematic surfaces: a negative definite boundary component
/// only obstructs if it contracts to a scheme.
pub fn scheme_saturation_check(
    s: &CompactifiedSurface,
    oracle: &BTreeMap<NodeSet, Contractibility>,
) -> Result<SchemeSaturationReport, SaturationError> {
    let sat = is_saturated(s);
    let mut reasons = Vec::new();
    let mut verdict = SchemeVerdict::SchemeSaturated;
    for c in &sat.negative_definite_components {
        let answer = oracle.get(c).ok_or_else(|| SaturationError::OracleIncomplete(s.names(c)))?;
        let evidence = format!("{:?}: {answer:?}", s.names(c));
        match answer {
            Contractibility::SchemeContractible => verdict = SchemeVerdict::NotSchemeSaturated,
            Contractibility::Unknown if verdict == SchemeVerdict::SchemeSaturated => verdict = SchemeVerdict::Unknown,
            _ => {}
        }
        reasons.push(Reason::new(criterion::SCHEME_CONTRACTIBILITY, evidence));
    }
    if sat.isolated_points > 0 && verdict == SchemeVerdict::SchemeSaturated {
        verdict = SchemeVerdict::Unknown;
        reasons.push(Reason::new(
            criterion::ISOLATED_BOUNDARY_POINTS,
            format!(
                "{} isolated boundary point(s); schematicity of the filled-in surface is not modelled",
                sat.isolated_points
            ),
        ));
    }
    if reasons.is_empty() {
        reasons.push(Reason::new(criterion::NO_NEGATIVE_DEFINITE_COMPONENT, "saturated, hence scheme-saturated"));
    }
    Ok(SchemeSaturationReport { verdict, saturated: sat.saturated, reasons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibre::Certificate;
    use crate::lattice::cubic_through_points;
    use crate::linalg::SymmetricMatrix;

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::new(
            (0..rows.len()).map(|i| (format!("N{i}"), 0, true)).collect(),
            SymmetricMatrix::from_i64(rows).unwrap(),
        )
        .unwrap()
    }

    fn set(ids: &[usize]) -> NodeSet {
        ids.iter().copied().collect()
    }

    fn surface(rows: &[&[i64]], boundary: &[usize]) -> CompactifiedSurface {
        CompactifiedSurface::new(cfg(rows), set(boundary)).unwrap()
    }

    #[test]
    fn saturation_examples() {
        assert!(is_saturated(&surface(&[&[0]], &[0])).saturated);

        let (lat, c) = cubic_through_points(10);
        let conf = lat.configuration_from_classes(&[c]).unwrap();
        let s = CompactifiedSurface::new(conf, set(&[0])).unwrap();
        let v = is_saturated(&s);
        assert!(!v.saturated);
        assert_eq!(v.negative_definite_components, vec![set(&[0])]);

        let proper = CompactifiedSurface::new(Configuration::empty(), NodeSet::new()).unwrap();
        assert!(is_saturated(&proper).saturated);

        let mut pts = surface(&[&[0]], &[0]);
        pts.isolated_boundary_points = 2;
        assert!(!is_saturated(&pts).saturated);
    }

    #[test]
    fn plan_examples() {
        let s = surface(&[&[-1, 0], &[0, 0]], &[0, 1]);
        let plan = saturation_plan(&s).unwrap();
        assert_eq!(plan.d_minus, vec![set(&[0])]);
        assert_eq!(plan.d_plus, vec![set(&[1])]);
        assert!(plan.resulting_boundary_ok);

        let already = surface(&[&[0]], &[0]);
        assert!(saturation_plan(&already).unwrap().is_empty());

        let a2 = surface(&[&[-2, 1], &[1, -2]], &[0, 1]);
        let plan = saturation_plan(&a2).unwrap();
        assert_eq!(plan.d_minus, vec![set(&[0, 1])]);
        let sat = apply_plan(&a2, &plan).unwrap();
        assert!(sat.surface.boundary.is_empty());
        assert!(is_saturated(&sat.surface).saturated);
        assert_eq!(sat.singular_points.len(), 1);
    }

    #[test]
    fn affdim_examples() {
        let line = surface(&[&[1]], &[0]);
        assert_eq!(affinisation_dimension(&line).unwrap().verdict, AffDim::Two);

        let zero_curve = surface(&[&[0]], &[0]);
        let r = affinisation_dimension(&zero_curve).unwrap();
        assert_eq!(r.verdict, AffDim::OneOrZero);
        assert_eq!(r.missing_certificates, vec![vec!["N0".to_string()]]);

        let mut fib = zero_curve.clone();
        fib.fibration_asserted = true;
        assert_eq!(affinisation_dimension(&fib).unwrap().verdict, AffDim::One);

        let mut ff = zero_curve.clone();
        ff.false_fibre_claims.push(FalseFibreClaim { subject: set(&[0]), certificate: Certificate::UserAsserted });
        assert_eq!(affinisation_dimension(&ff).unwrap().verdict, AffDim::Zero);

        let proper = CompactifiedSurface::new(Configuration::empty(), NodeSet::new()).unwrap();
        assert_eq!(affinisation_dimension(&proper).unwrap().verdict, AffDim::Zero);

        assert!(matches!(affinisation_dimension(&surface(&[&[-1]], &[0])), Err(SaturationError::NotSaturated(_))));
    }

    #[test]
    fn affdim_uses_interior_fibre_type_divisors() {
        // boundary N0, interior 0-curves N1, N2, all disjoint
        let s = surface(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]], &[0]);
        let r = affinisation_dimension(&s).unwrap();
        assert_eq!(r.verdict, AffDim::One);
        assert_eq!(r.reasons.last().unwrap().criterion, criterion::THREE_DISJOINT_FIBRE_TYPE);

        // one interior false fibre propagates to the boundary
        let mut s = surface(&[&[0, 0], &[0, 0]], &[0]);
        s.false_fibre_claims.push(FalseFibreClaim { subject: set(&[1]), certificate: Certificate::UserAsserted });
        let r = affinisation_dimension(&s).unwrap();
        assert_eq!(r.verdict, AffDim::Zero);
        assert!(r.reasons.iter().any(|x| x.criterion == criterion::FALSE_FIBRE_PROPAGATION));
    }

    #[test]
    fn affdim_inconsistencies() {
        // disconnected boundary that is not semidefinite
        let s = surface(&[&[1, 0], &[0, 0]], &[0, 1]);
        assert!(matches!(affinisation_dimension(&s), Err(SaturationError::Inconsistent { .. })));
        // fibration asserted together with a false-fibre claim
        let mut s = surface(&[&[0]], &[0]);
        s.fibration_asserted = true;
        s.false_fibre_claims.push(FalseFibreClaim { subject: set(&[0]), certificate: Certificate::UserAsserted });
        assert!(matches!(affinisation_dimension(&s), Err(SaturationError::Inconsistent { .. })));
        // interior curve with positive square disjoint from a fibre-type boundary
        let s = surface(&[&[0, 0], &[0, 1]], &[0]);
        assert!(matches!(affinisation_dimension(&s), Err(SaturationError::Inconsistent { .. })));
    }

    #[test]
    fn scheme_saturation() {
        let (lat, c) = cubic_through_points(10);
        let s = CompactifiedSurface::new(lat.configuration_from_classes(&[c]).unwrap(), set(&[0])).unwrap();
        let oracle = BTreeMap::from([(set(&[0]), Contractibility::NotSchemeContractible)]);
        let r = scheme_saturation_check(&s, &oracle).unwrap();
        assert_eq!(r.verdict, SchemeVerdict::SchemeSaturated);
        assert!(!r.saturated);

        let unknown = BTreeMap::from([(set(&[0]), Contractibility::Unknown)]);
        assert_eq!(scheme_saturation_check(&s, &unknown).unwrap().verdict, SchemeVerdict::Unknown);
        assert!(matches!(scheme_saturation_check(&s, &BTreeMap::new()), Err(SaturationError::OracleIncomplete(_))));

        let fine = surface(&[&[0]], &[0]);
        let r = scheme_saturation_check(&fine, &BTreeMap::new()).unwrap();
        assert_eq!(r.verdict, SchemeVerdict::SchemeSaturated);
        assert!(r.saturated);
    }
}
