//! Hironaka-style surfaces: `P²` blown up at `n` distinct points of a smooth
//! cubic `C̄`, with boundary the strict transform `C = 3L − ΣEᵢ`, `C² = 9 − n`.
//!
//! For `n = 9` a non-torsion sum `p₁ + … + p₉` shows that no multiple of `C`
//! is a fibre, so `C` is a false fibre. For `n ≥ 10` a scheme contraction of
//! `C` needs positive `mᵢ` with `Σ mᵢpᵢ = 0`; when every point is a positive
//! (or every point a negative) multiple of one non-torsion point, no such
//! `mᵢ` exist and the contraction is only an algebraic space.

use crate::config::NodeSet;
use crate::elliptic::{sum_obstruction, ECPoint, EllipticError, Obstruction, TorsionStatus, WeierstrassCurve};
use crate::fibre::{Certificate, FalseFibreClaim};
use crate::lattice::{cubic_through_points, ClassRecord, LatticeError, NsLattice};
use crate::saturation::{CompactifiedSurface, Contractibility, SaturationError};
use std::collections::BTreeMap;

/// Search bound for expressing a blown-up point as a multiple of a generator.
pub const DISCRETE_LOG_BOUND: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HironakaError {
    #[error("at least one point must be blown up")]
    NoPoints,
    #[error("the point at infinity cannot be blown up as an affine point")]
    PointAtInfinity,
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Saturation(#[from] SaturationError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HironakaInput {
    pub curve: WeierstrassCurve,
    /// Blown-up points with the multiplicities used for the weighted-sum test.
    pub points: Vec<(ECPoint, u32)>,
    /// Non-torsion point to express the `pᵢ` in; when absent each listed point is tried.
    pub generator: Option<ECPoint>,
    pub fibration_asserted: bool,
}

impl HironakaInput {
    pub fn unit(curve: WeierstrassCurve, points: Vec<ECPoint>) -> Self {
        HironakaInput {
            curve,
            points: points.into_iter().map(|p| (p, 1)).collect(),
            generator: None,
            fibration_asserted: false,
        }
    }
}

/// Evidence that every positive combination `Σ mᵢpᵢ` is non-torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameSignMultiples {
    pub generator: ECPoint,
    pub coefficients: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HironakaBuild {
    pub n: usize,
    pub lattice: NsLattice,
    pub boundary_class: ClassRecord,
    /// Ambient curves `C, E1, …, En`; boundary `{C}`.
    pub surface: CompactifiedSurface,
    /// `Σ mᵢpᵢ` for the supplied multiplicities.
    pub obstruction: Obstruction,
    /// `Σ pᵢ`, which decides the false-fibre certificate when `n = 9`.
    pub unit_obstruction: Obstruction,
    pub same_sign: Option<SameSignMultiples>,
    /// Scheme contractibility of `{C}`, only when `C` is negative definite.
    pub oracle: BTreeMap<NodeSet, Contractibility>,
}

impl HironakaBuild {
    pub fn self_intersection(&self) -> i64 {
        self.lattice.pairing(&self.boundary_class.class, &self.boundary_class.class)
    }

    pub fn boundary(&self) -> &NodeSet {
        &self.surface.boundary
    }
}

fn same_sign_multiples(input: &HironakaInput) -> Result<Option<SameSignMultiples>, HironakaError> {
    let candidates: Vec<&ECPoint> = match &input.generator {
        Some(g) => vec![g],
        None => input.points.iter().map(|(p, _)| p).collect(),
    };
    for g in candidates {
        if input.curve.is_torsion(g)? != TorsionStatus::NonTorsion {
            continue;
        }
        let mut coefficients = Vec::with_capacity(input.points.len());
        for (p, _) in &input.points {
            match input.curve.discrete_log(g, p, DISCRETE_LOG_BOUND)? {
                Some(k) => coefficients.push(k),
                None => break,
            }
        }
        if coefficients.len() == input.points.len()
            && (coefficients.iter().all(|&k| k > 0) || coefficients.iter().all(|&k| k < 0))
        {
            return Ok(Some(SameSignMultiples { generator: g.clone(), coefficients }));
        }
    }
    Ok(None)
}

pub fn hironaka_build(input: &HironakaInput) -> Result<HironakaBuild, HironakaError> {
    let n = input.points.len();
    if n == 0 {
        return Err(HironakaError::NoPoints);
    }
    if input.points.iter().any(|(p, _)| p.is_infinity()) {
        return Err(HironakaError::PointAtInfinity);
    }
    let obstruction = sum_obstruction(&input.curve, &input.points)?;
    let unit: Vec<(ECPoint, u32)> = input.points.iter().map(|(p, _)| (p.clone(), 1)).collect();
    let unit_obstruction = sum_obstruction(&input.curve, &unit)?;

    let (lattice, cubic) = cubic_through_points(n);
    let mut records = vec![cubic.clone()];
    records.extend((1..=n).map(|i| ClassRecord::new(format!("E{i}"), lattice.basis_class(i), 0)));
    let ambient = lattice.configuration_from_classes(&records)?;
    let boundary: NodeSet = [0].into_iter().collect();
    let interior: NodeSet = (1..=n).collect();

    let mut claims = Vec::new();
    let mut same_sign = None;
    let mut oracle = BTreeMap::new();
    match n.cmp(&9) {
        std::cmp::Ordering::Equal if unit_obstruction.found() => claims.push(FalseFibreClaim {
            subject: boundary.clone(),
            certificate: Certificate::GroupLawObstruction(format!(
                "p1 + ... + p9 = {} is non-torsion",
                unit_obstruction.sum()
            )),
        }),
        std::cmp::Ordering::Greater => {
            same_sign = same_sign_multiples(input)?;
            let verdict =
                if same_sign.is_some() { Contractibility::NotSchemeContractible } else { Contractibility::Unknown };
            oracle.insert(boundary.clone(), verdict);
        }
        _ => {}
    }
    let surface = CompactifiedSurface::with_parts(ambient, boundary, interior, 0, claims, input.fibration_asserted)?;
    Ok(HironakaBuild { n, lattice, boundary_class: cubic, surface, obstruction, unit_obstruction, same_sign, oracle })
}
