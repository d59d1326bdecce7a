//! Mumford's rational pullback along the contraction of a negative definite
//! curve set, and the intersection product it induces on the contracted surface.

use crate::config::{ConfigError, Configuration, Divisor, NodeSet};
use crate::linalg::{is_negative_definite, solve, SymmetricMatrix};
use crate::rational::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MumfordError {
    #[error("exceptional set {0:?} is not negative definite")]
    NotNegativeDefinite(Vec<String>),
    #[error(
        "part {0:?} is not negative definite; only negative definite connected sets are contractible \
         (no-negative-definite-component)"
    )]
    PartNotContractible(Vec<String>),
    #[error("part {0:?} is not connected")]
    PartDisconnected(Vec<String>),
    #[error("parts overlap at curve {0:?}")]
    PartsOverlap(String),
    #[error("divisor has exceptional curve {0:?} in its support")]
    SupportMeetsExceptional(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// An ambient configuration with a negative definite exceptional set `E`.
#[derive(Debug, Clone)]
pub struct ContractionContext<'a> {
    ambient: &'a Configuration,
    exceptional: NodeSet,
    /// Connected components of `E` with their gram matrices.
    blocks: Vec<(Vec<usize>, SymmetricMatrix)>,
}

impl<'a> ContractionContext<'a> {
    pub fn new(ambient: &'a Configuration, exceptional: NodeSet) -> Result<Self, MumfordError> {
        let gram = ambient.subset_gram(&exceptional)?;
        if !is_negative_definite(&gram) {
            return Err(MumfordError::NotNegativeDefinite(ambient.names_of(&exceptional)));
        }
        let blocks = ambient
            .connected_components(&exceptional)?
            .into_iter()
            .map(|c| {
                let ids: Vec<usize> = c.into_iter().collect();
                let m = ambient.gram().principal(&ids);
                (ids, m)
            })
            .collect();
        Ok(ContractionContext { ambient, exceptional, blocks })
    }

    pub fn ambient(&self) -> &Configuration {
        self.ambient
    }

    pub fn exceptional(&self) -> &NodeSet {
        &self.exceptional
    }

    /// `strict + Σ aᵢEᵢ` with `(strict + Σ aᵢEᵢ)·Eⱼ = 0` for every exceptional `Eⱼ`.
    pub fn pullback(&self, strict: &Divisor) -> Result<Divisor, MumfordError> {
        self.ambient.check_subset(&strict.support())?;
        if let Some(&bad) = strict.support().intersection(&self.exceptional).next() {
            return Err(MumfordError::SupportMeetsExceptional(self.ambient.nodes()[bad].name.clone()));
        }
        let mut out = strict.clone();
        for (ids, gram) in &self.blocks {
            let rhs: Vec<Rational> = ids
                .iter()
                .map(|&e| self.ambient.intersection_number(strict, &Divisor::prime(e)).map(|v| -v))
                .collect::<Result<_, _>>()?;
            if rhs.iter().all(Zero::is_zero) {
                continue;
            }
            let coeffs =
                solve(gram, &rhs).expect("block dimensions agree").expect("negative definite blocks are nonsingular");
            for (&e, a) in ids.iter().zip(coeffs) {
                out.add_term(e, a);
            }
        }
        Ok(out)
    }

    /// `D·D' = π*D · π*D'` on the contracted surface.
    pub fn induced_product(&self, d: &Divisor, e: &Divisor) -> Result<Rational, MumfordError> {
        let pd = self.pullback(d)?;
        let pe = self.pullback(e)?;
        Ok(self.ambient.intersection_number(&pd, &pe)?)
    }
}

/// A point produced by contracting a connected negative definite curve set.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SingularPoint {
    pub name: String,
    pub contracted: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    /// Configuration of the surviving curves with the induced product.
    pub config: Configuration,
    /// `surviving[new_id]` is the id of that curve in the original configuration.
    pub surviving: Vec<usize>,
    pub points: Vec<SingularPoint>,
}

/// Contracts each of `parts` (disjoint, connected, negative definite) to a point.
pub fn contract(config: &Configuration, parts: &[NodeSet]) -> Result<Contraction, MumfordError> {
    let mut union = NodeSet::new();
    for part in parts {
        config.check_subset(part)?;
        if let Some(&dup) = part.intersection(&union).next() {
            return Err(MumfordError::PartsOverlap(config.nodes()[dup].name.clone()));
        }
        if !part.is_empty() && !config.is_connected(part)? {
            return Err(MumfordError::PartDisconnected(config.names_of(part)));
        }
        if !is_negative_definite(&config.subset_gram(part)?) {
            return Err(MumfordError::PartNotContractible(config.names_of(part)));
        }
        union.extend(part.iter().copied());
    }
    let ctx = ContractionContext::new(config, union.clone())?;
    let surviving: Vec<usize> = (0..config.len()).filter(|i| !union.contains(i)).collect();
    let pullbacks: Vec<Divisor> =
        surviving.iter().map(|&i| ctx.pullback(&Divisor::prime(i))).collect::<Result<_, _>>()?;
    let k = surviving.len();
    let mut gram = SymmetricMatrix::zeros(k);
    for a in 0..k {
        for b in a..k {
            gram.set(a, b, config.intersection_number(&pullbacks[a], &pullbacks[b])?);
        }
    }
    let nodes = surviving
        .iter()
        .map(|&i| {
            let n = &config.nodes()[i];
            (n.name.clone(), n.genus, n.proper)
        })
        .collect();
    let points = parts
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| {
            let names = config.names_of(p);
            SingularPoint { name: format!("q[{}]", names.join("+")), contracted: names }
        })
        .collect();
    Ok(Contraction { config: Configuration::new(nodes, gram)?, surviving, points })
}
