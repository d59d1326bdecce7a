//! Divisors of fibre type, their kernel divisors, and false-fibre bookkeeping.
//!
//! A reduced connected divisor is of fibre type when its intersection matrix is
//! negative semidefinite but not negative definite. Such a divisor supports a
//! unique (up to multiples) effective divisor `F` with `F² = 0` and
//! `F·C = 0` for every component `C`. Whether it actually supports a fibre of a
//! fibration is not a numerical question, so "false fibre" status is only ever
//! carried by an explicit certificate.

use crate::config::{ConfigError, Configuration, Divisor, NodeId, NodeSet};
use crate::linalg::{inertia, is_negative_definite, kernel_basis};
use crate::rational::{format_rational, Rational};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest subject for which the exhaustive sub-support check runs.
pub const ZARISKI_EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibreError {
    #[error("subject is empty")]
    EmptySubject,
    #[error("curve {0:?} is not proper")]
    ImproperNode(String),
    #[error(
        "connected negative semidefinite set {subject:?} has a {dim}-dimensional kernel; \
         a fibre-type divisor has a one-dimensional one (kernel-unique-up-to-multiples)"
    )]
    KernelNotUnique { subject: Vec<String>, dim: usize },
    #[error("kernel vector of {0:?} is not strictly positive")]
    KernelNotPositive(Vec<String>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FibreVerdict {
    FibreType,
    NegativeDefinite,
    NotSemidefinite,
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreTypeReport {
    pub subject: NodeSet,
    pub verdict: FibreVerdict,
    /// Present iff the verdict is `FibreType`: primitive integral, effective, full support.
    pub kernel: Option<Divisor>,
}

impl FibreTypeReport {
    pub fn is_fibre_type(&self) -> bool {
        self.verdict == FibreVerdict::FibreType
    }
}

fn check_subject(config: &Configuration, subject: &NodeSet) -> Result<(), FibreError> {
    if subject.is_empty() {
        return Err(FibreError::EmptySubject);
    }
    config.check_subset(subject)?;
    if let Some(&bad) = subject.iter().find(|&&i| !config.nodes()[i].proper) {
        return Err(FibreError::ImproperNode(config.nodes()[bad].name.clone()));
    }
    Ok(())
}

pub fn classify_fibre_type(config: &Configuration, subject: &NodeSet) -> Result<FibreTypeReport, FibreError> {
    check_subject(config, subject)?;
    let report = |verdict, kernel| FibreTypeReport { subject: subject.clone(), verdict, kernel };
    if !config.is_connected(subject)? {
        return Ok(report(FibreVerdict::Disconnected, None));
    }
    let gram = config.subset_gram(subject)?;
    let signs = inertia(&gram);
    if signs.positive > 0 {
        return Ok(report(FibreVerdict::NotSemidefinite, None));
    }
    if signs.zero == 0 {
        return Ok(report(FibreVerdict::NegativeDefinite, None));
    }
    let mut basis = kernel_basis(&gram);
    if basis.len() != 1 {
        return Err(FibreError::KernelNotUnique { subject: config.names_of(subject), dim: basis.len() });
    }
    let v = basis.remove(0);
    if !v.iter().all(|x| x.is_positive()) {
        return Err(FibreError::KernelNotPositive(config.names_of(subject)));
    }
    let kernel = Divisor::from_terms(subject.iter().zip(v).map(|(&i, c)| (i, Rational::from_integer(c))));
    Ok(report(FibreVerdict::FibreType, Some(kernel)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZariskiViolation {
    NotFibreType { verdict: FibreVerdict },
    SubsetNotNegativeDefinite { subset: Vec<String> },
    KernelDimension { dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZariskiStatus {
    Ok { subsets_checked: usize },
    Violations(Vec<ZariskiViolation>),
    Skipped { n: usize },
}

/// Exhaustive check that every proper nonempty sub-support of a fibre-type
/// subject is negative definite and that its kernel is one-dimensional.
///
/// Violations are reported in lexicographic order of the offending subsets.
pub fn validate_zariski(config: &Configuration, subject: &NodeSet) -> Result<ZariskiStatus, FibreError> {
    check_subject(config, subject)?;
    let report = classify_fibre_type(config, subject);
    let report = match report {
        Ok(r) => r,
        Err(FibreError::KernelNotUnique { dim, .. }) => {
            return Ok(ZariskiStatus::Violations(vec![ZariskiViolation::KernelDimension { dim }]))
        }
        Err(e) => return Err(e),
    };
    if !report.is_fibre_type() {
        return Ok(ZariskiStatus::Violations(vec![ZariskiViolation::NotFibreType { verdict: report.verdict }]));
    }
    let n = subject.len();
    if n > ZARISKI_EXHAUSTIVE_LIMIT {
        return Ok(ZariskiStatus::Skipped { n });
    }
    let ids: Vec<NodeId> = subject.iter().copied().collect();
    let gram = config.gram();
    let full: u32 = (1u32 << n) - 1;
    let mut bad: Vec<Vec<NodeId>> = (1..full)
        .into_par_iter()
        .filter_map(|mask| {
            let sub: Vec<NodeId> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| ids[b]).collect();
            (!is_negative_definite(&gram.principal(&sub))).then_some(sub)
        })
        .collect();
    bad.sort();
    if bad.is_empty() {
        Ok(ZariskiStatus::Ok { subsets_checked: (full - 1) as usize })
    } else {
        Ok(ZariskiStatus::Violations(
            bad.iter().map(|s| ZariskiViolation::SubsetNotNegativeDefinite { subset: config.names_of(s) }).collect(),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Proportionality {
    /// `F1·P = c·(F2·P)` for every probe.
    Proportional { c: Rational },
    /// The probe at this index breaks proportionality.
    NotProportional { witness: usize },
    /// Every probe pairs to zero with both divisors.
    Undetermined,
}

/// Checks that `divisor` is a nonzero multiple of the kernel divisor of its support.
fn kernel_support(config: &Configuration, divisor: &Divisor, label: &str) -> Result<NodeSet, FibreError> {
    let support = divisor.support();
    if support.is_empty() {
        return Err(FibreError::Precondition(format!("{label} is zero")));
    }
    let report = classify_fibre_type(config, &support)?;
    let Some(kernel) = report.kernel else {
        return Err(FibreError::Precondition(format!("support of {label} is {:?}, not of fibre type", report.verdict)));
    };
    let (lead, _) = kernel.terms().next().expect("kernel has full support");
    let scale = divisor.coefficient(lead) / kernel.coefficient(lead);
    if kernel.scaled(&scale) != *divisor {
        return Err(FibreError::Precondition(format!(
            "{label} is not a multiple of the kernel divisor of its support"
        )));
    }
    Ok(support)
}

/// Numerical proportionality of the kernel divisors of two disjoint fibre-type supports,
/// tested against the supplied probe divisors.
pub fn proportionality(
    config: &Configuration,
    f1: &Divisor,
    f2: &Divisor,
    probes: &[Divisor],
) -> Result<Proportionality, FibreError> {
    let s1 = kernel_support(config, f1, "F1")?;
    let s2 = kernel_support(config, f2, "F2")?;
    if !config.disjoint(&s1, &s2) {
        return Err(FibreError::Precondition("supports of F1 and F2 are not disjoint".into()));
    }
    let mut c: Option<Rational> = None;
    for (k, p) in probes.iter().enumerate() {
        let a = config.intersection_number(f1, p)?;
        let b = config.intersection_number(f2, p)?;
        if b.is_zero() {
            if !a.is_zero() {
                return Ok(Proportionality::NotProportional { witness: k });
            }
            continue;
        }
        let ratio = a / b;
        if ratio.is_zero() {
            return Ok(Proportionality::NotProportional { witness: k });
        }
        match &c {
            None => c = Some(ratio),
            Some(existing) if *existing != ratio => return Ok(Proportionality::NotProportional { witness: k }),
            Some(_) => {}
        }
    }
    Ok(match c {
        Some(c) => Proportionality::Proportional { c },
        None => Proportionality::Undetermined,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairCheck {
    Ok,
    /// `D2` should be of fibre type; the data contradicts the Hodge index theorem.
    Violation {
        d2_verdict: FibreVerdict,
    },
}

/// For a fibre-type `d1` and a disjoint, connected, not negative definite `d2`
/// on a complete configuration, `d2` must also be of fibre type.
pub fn check_disjoint_pair(
    config: &Configuration,
    d1: &NodeSet,
    d2: &NodeSet,
    complete_surface: bool,
) -> Result<PairCheck, FibreError> {
    if !complete_surface {
        return Err(FibreError::Precondition("configuration is not flagged as a complete surface".into()));
    }
    if !classify_fibre_type(config, d1)?.is_fibre_type() {
        return Err(FibreError::Precondition("D1 is not of fibre type".into()));
    }
    check_subject(config, d2)?;
    if !config.disjoint(d1, d2) {
        return Err(FibreError::Precondition("D1 and D2 are not disjoint".into()));
    }
    if !config.is_connected(d2)? {
        return Err(FibreError::Precondition("D2 is not connected".into()));
    }
    if is_negative_definite(&config.subset_gram(d2)?) {
        return Err(FibreError::Precondition("D2 is negative definite".into()));
    }
    let report = classify_fibre_type(config, d2)?;
    Ok(if report.is_fibre_type() { PairCheck::Ok } else { PairCheck::Violation { d2_verdict: report.verdict } })
}

/// Evidence that a fibre-type divisor supports no fibre of any fibration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// The curve has a non-torsion normal bundle of degree 0.
    NormalBundleNonTorsion,
    /// A group-law computation on an elliptic curve rules out every fibre structure.
    GroupLawObstruction(String),
    UserAsserted,
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::NormalBundleNonTorsion => "normal-bundle-non-torsion",
            Certificate::GroupLawObstruction(_) => "group-law-obstruction",
            Certificate::UserAsserted => "user-asserted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FalseFibreClaim {
    pub subject: NodeSet,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimCheck {
    Ok,
    /// None of the three claimed false fibres meets both of the others.
    Contradiction {
        triple: [NodeSet; 3],
    },
}

/// Among any three false fibres, one meets the other two. Claims are checked
/// against that; identical subjects are merged first.
pub fn validate_false_fibre_claims(
    claims: &[FalseFibreClaim],
    config: &Configuration,
) -> Result<ClaimCheck, FibreError> {
    let mut subjects: Vec<NodeSet> = Vec::new();
    for claim in claims {
        let report = classify_fibre_type(config, &claim.subject)?;
        if !report.is_fibre_type() {
            return Err(FibreError::Precondition(format!(
                "claimed false fibre {:?} is {:?}, not of fibre type",
                config.names_of(&claim.subject),
                report.verdict
            )));
        }
        if !subjects.contains(&claim.subject) {
            subjects.push(claim.subject.clone());
        }
    }
    subjects.sort();
    let meets = |a: &NodeSet, b: &NodeSet| !config.disjoint(a, b);
    let k = subjects.len();
    for i in 0..k {
        for j in (i + 1)..k {
            for l in (j + 1)..k {
                let (a, b, c) = (&subjects[i], &subjects[j], &subjects[l]);
                let hub = (meets(a, b) && meets(a, c)) || (meets(b, a) && meets(b, c)) || (meets(c, a) && meets(c, b));
                if !hub {
                    return Ok(ClaimCheck::Contradiction { triple: [a.clone(), b.clone(), c.clone()] });
                }
            }
        }
    }
    Ok(ClaimCheck::Ok)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalBundleOutcome {
    Certificate(Certificate),
    /// Degree 0 but no non-torsion information: a trivial or torsion normal bundle decides nothing.
    Inconclusive,
    Rejected(String),
}

/// A smooth fibre-type curve with a non-torsion normal bundle is a false fibre.
pub fn normal_bundle_certificate(degree: &Rational, nontorsion: bool) -> NormalBundleOutcome {
    if !degree.is_zero() {
        return NormalBundleOutcome::Rejected(format!(
            "deg N = C² = {} must vanish for fibre type",
            format_rational(degree)
        ));
    }
    if nontorsion {
        NormalBundleOutcome::Certificate(Certificate::NormalBundleNonTorsion)
    } else {
        NormalBundleOutcome::Inconclusive
    }
}
