//! Elliptic curves over ℚ in long Weierstrass form
//! `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`, with the chord–tangent group law.
//!
//! Torsion is decided by Mazur's bound: a rational torsion point has order in
//! `{1,…,10,12}`, so twelve scalar multiplications settle the question.

use crate::rational::{int, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Largest possible order of a rational torsion point.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EllipticError {
    #[error("singular Weierstrass equation (discriminant 0)")]
    Singular,
    #[error("point ({x}, {y}) is not on the curve")]
    NotOnCurve { x: String, y: String },
    #[error("point {0} is listed twice; blown-up points must be distinct")]
    RepeatedPoint(String),
    #[error("multiplicity of point {0} must be at least 1")]
    ZeroMultiplicity(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassCurve {
    #[serde(with = "crate::rational::serde_rational", default = "crate::rational::zero")]
    pub a1: Rational,
    #[serde(with = "crate::rational::serde_rational", default = "crate::rational::zero")]
    pub a2: Rational,
    #[serde(with = "crate::rational::serde_rational", default = "crate::rational::zero")]
    pub a3: Rational,
    #[serde(with = "crate::rational::serde_rational", default = "crate::rational::zero")]
    pub a4: Rational,
    #[serde(with = "crate::rational::serde_rational", default = "crate::rational::zero")]
    pub a6: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl ECPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        ECPoint::Affine { x: int(x), y: int(y) }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }
}

impl std::fmt::Display for ECPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "order", rename_all = "snake_case")]
pub enum TorsionStatus {
    Torsion(u32),
    NonTorsion,
}

impl WeierstrassCurve {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self, EllipticError> {
        let c = WeierstrassCurve { a1, a2, a3, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(c)
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self, EllipticError> {
        Self::new(int(a[0]), int(a[1]), int(a[2]), int(a[3]), int(a[4]))
    }

    pub fn discriminant(&self) -> Rational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + int(4) * a2;
        let b4 = int(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + int(4) * a6;
        let b8 = a1 * a1 * a6 + int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -(&b2 * &b2 * &b8) - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6 + int(9) * &b2 * &b4 * &b6
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => {
                let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
                let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    pub fn check(&self, p: &ECPoint) -> Result<(), EllipticError> {
        match p {
            ECPoint::Affine { x, y } if !self.contains(p) => {
                Err(EllipticError::NotOnCurve { x: x.to_string(), y: y.to_string() })
            }
            _ => Ok(()),
        }
    }

    /// `−(x, y) = (x, −y − a1·x − a3)`.
    pub fn negate(&self, p: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.add(p, p)
    }

    pub fn scalar_mul(&self, n: i64, p: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.check(p)?;
        Ok(self.mul_unchecked(n, p))
    }

    fn neg_unchecked(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::Affine { x: x.clone(), y: -y - &self.a1 * x - &self.a3 },
        }
    }

    fn add_unchecked(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else {
            // same x: either Q = −P or Q = P
            let denom = int(2) * y1 + &self.a1 * x1 + &self.a3;
            if y1 != y2 || denom.is_zero() {
                return ECPoint::Infinity;
            }
            (int(3) * x1 * x1 + int(2) * &self.a2 * x1 + &self.a4 - &self.a1 * y1) / denom
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -(&lambda + &self.a1) * &x3 - nu - &self.a3;
        ECPoint::Affine { x: x3, y: y3 }
    }

    fn mul_unchecked(&self, n: i64, p: &ECPoint) -> ECPoint {
        let base = if n < 0 { self.neg_unchecked(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.add_unchecked(&pow, &pow);
            }
        }
        acc
    }

    pub fn has_integral_coefficients(&self) -> bool {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6].iter().all(|a| a.is_integer())
    }

    /// `Torsion(n)` for the least `n ≥ 1` with `n·P = O`, else `NonTorsion`.
    ///
    /// On an integral model every torsion point has `4x` and `8y` integral
    /// (Nagell–Lutz, in Cassels' form for long Weierstrass equations), so a
    /// multiple violating that ends the search early.
    pub fn is_torsion(&self, p: &ECPoint) -> Result<TorsionStatus, EllipticError> {
        self.check(p)?;
        let screen = self.has_integral_coefficients();
        let mut multiple = p.clone();
        for n in 1..=MAZUR_BOUND {
            match &multiple {
                ECPoint::Infinity => return Ok(TorsionStatus::Torsion(n)),
                ECPoint::Affine { x, y } if screen && (!(x * int(4)).is_integer() || !(y * int(8)).is_integer()) => {
                    return Ok(TorsionStatus::NonTorsion)
                }
                _ => {}
            }
            multiple = self.add_unchecked(&multiple, p);
        }
        Ok(TorsionStatus::NonTorsion)
    }

    /// `k` with `k·G = P` and `|k| ≤ bound`, if any (least `|k|`, positive first).
    ///
    /// The search also stops once `x(kG)` is four times taller than `x(P)`;
    /// naive heights grow like `k²`, so on small-coefficient models no solution is skipped.
    pub fn discrete_log(&self, generator: &ECPoint, p: &ECPoint, bound: u32) -> Result<Option<i64>, EllipticError> {
        self.check(generator)?;
        self.check(p)?;
        if p.is_infinity() {
            return Ok(Some(0));
        }
        let neg = self.neg_unchecked(generator);
        // x(kG) has denominator growing like exp(c·k²); once it dwarfs P's, P is not reached
        let cutoff = 4 * height_bits(p) + 64;
        let (mut up, mut down) = (ECPoint::Infinity, ECPoint::Infinity);
        for k in 1..=i64::from(bound) {
            if k > 4 && height_bits(&up) > cutoff {
                return Ok(None);
            }
            up = self.add_unchecked(&up, generator);
            if &up == p {
                return Ok(Some(k));
            }
            down = self.add_unchecked(&down, &neg);
            if &down == p {
                return Ok(Some(-k));
            }
        }
        Ok(None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// `Σ mᵢpᵢ` is non-torsion: no curve meets the cubic exactly in the `pᵢ` with these multiplicities.
    ObstructionFound { sum: ECPoint },
    /// `Σ mᵢpᵢ` is torsion; necessary for contractibility but not sufficient.
    Inconclusive { sum: ECPoint, order: u32 },
}

impl Obstruction {
    pub fn found(&self) -> bool {
        matches!(self, Obstruction::ObstructionFound { .. })
    }

    pub fn sum(&self) -> &ECPoint {
        match self {
            Obstruction::ObstructionFound { sum } | Obstruction::Inconclusive { sum, .. } => sum,
        }
    }
}

pub fn weighted_sum(curve: &WeierstrassCurve, points: &[(ECPoint, u32)]) -> Result<ECPoint, EllipticError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut sum = ECPoint::Infinity;
    for (p, m) in points {
        curve.check(p)?;
        if *m == 0 {
            return Err(EllipticError::ZeroMultiplicity(p.to_string()));
        }
        if !seen.insert(p) {
            return Err(EllipticError::RepeatedPoint(p.to_string()));
        }
        sum = curve.add_unchecked(&sum, &curve.mul_unchecked(i64::from(*m), p));
    }
    Ok(sum)
}

pub fn sum_obstruction(curve: &WeierstrassCurve, points: &[(ECPoint, u32)]) -> Result<Obstruction, EllipticError> {
    let sum = weighted_sum(curve, points)?;
    Ok(match curve.is_torsion(&sum)? {
        TorsionStatus::NonTorsion => Obstruction::ObstructionFound { sum },
        TorsionStatus::Torsion(order) => Obstruction::Inconclusive { sum, order },
    })
}

/// Affine points of small height used in examples and tests.
pub mod catalog {
    use super::*;

    /// `y² + y = x³ − x` (conductor 37, rank 1, trivial torsion), generator `(0, 0)`.
    pub fn rank_one() -> (WeierstrassCurve, ECPoint) {
        (WeierstrassCurve::from_i64([0, 0, 1, -1, 0]).expect("nonsingular"), ECPoint::from_i64(0, 0))
    }

    /// `y² = x³ + 1`, with `(2, 3)` of order 6.
    pub fn order_six() -> (WeierstrassCurve, ECPoint) {
        (WeierstrassCurve::from_i64([0, 0, 0, 0, 1]).expect("nonsingular"), ECPoint::from_i64(2, 3))
    }

    /// `y² = x³ − x` and its three points of order 2.
    pub fn two_torsion() -> (WeierstrassCurve, [ECPoint; 3]) {
        (
            WeierstrassCurve::from_i64([0, 0, 0, -1, 0]).expect("nonsingular"),
            [ECPoint::from_i64(-1, 0), ECPoint::from_i64(0, 0), ECPoint::from_i64(1, 0)],
        )
    }

    /// `{k·G : k ∈ ks}` on `curve`.
    pub fn multiples(curve: &WeierstrassCurve, g: &ECPoint, ks: &[i64]) -> Vec<ECPoint> {
        ks.iter().map(|&k| curve.scalar_mul(k, g).expect("generator on curve")).collect()
    }
}

/// Bit length of the larger of numerator and denominator of `x(P)`.
fn height_bits(p: &ECPoint) -> u64 {
    match p {
        ECPoint::Infinity => 0,
        ECPoint::Affine { x, .. } => x.numer().bits().max(x.denom().bits()),
    }
}

pub fn is_integral(p: &ECPoint) -> bool {
    match p {
        ECPoint::Infinity => true,
        ECPoint::Affine { x, y } => x.denom().is_one() && y.denom().is_one(),
    }
}
