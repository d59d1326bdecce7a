//! Exact intersection theory for open algebraic surfaces.
//!
//! A surface is presented as a proper surface `X̄` together with a boundary
//! divisor `D`; everything here is decided from the weighted dual graph of the
//! supplied curves, in exact rational arithmetic:
//!
//! * [`linalg`]: symmetric rational matrices, solve, kernel, inertia;
//! * [`config`]: curve configurations and divisors;
//! * [`lattice`]: Néron–Severi lattices of blowups of `P²`;
//! * [`mumford`]: rational pullback and contraction of negative definite sets;
//! * [`fibre`]: fibre-type divisors, kernel divisors, false-fibre bookkeeping;
//! * [`saturation`]: the saturation criterion, plan, and `dim X^aff`;
//! * [`elliptic`] and [`hironaka`]: group-law obstructions on plane cubics.

pub mod cli;
pub mod config;
pub mod elliptic;
pub mod fibre;
pub mod hironaka;
pub mod input;
pub mod lattice;
pub mod linalg;
pub mod mumford;
pub mod rational;

pub mod saturation;

pub use config::{Configuration, Divisor, NodeId, NodeSet};
pub use linalg::{inertia, kernel_basis, solve, Inertia, SymmetricMatrix};
pub use rational::Rational;
pub use saturation::{affinisation_dimension, is_saturated, saturation_plan, AffDim, CompactifiedSurface};
