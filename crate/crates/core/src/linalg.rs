//! Exact symmetric-matrix analysis over the rationals.
//!
//! Everything here is pure Gaussian elimination on [`Rational`] entries; no
//! eigenvalues are ever computed. Inertia is obtained from a symmetric
//! congruence reduction (Sylvester's law of inertia).

use crate::rational::{primitive_integral, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("dimension mismatch: matrix is {expected}x{expected}, vector has length {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense symmetric matrix with rational entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| crate::rational::format_rational(self.get(i, j))).collect())
            .collect();
        write!(f, "SymmetricMatrix{rows:?}")
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia { positive, negative, zero }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(LinalgError::NotSquare { row, len: r.len(), expected: n });
            }
        }
        for (i, r) in rows.iter().enumerate() {
            for j in (i + 1)..n {
                if r[j] != rows[j][i] {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymmetricMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| crate::rational::int(x)).collect()).collect())
    }

    pub fn diagonal(values: Vec<Rational>) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * m.n + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.n + j] = value.clone();
        self.entries[j * self.n + i] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal(&self, indices: &[usize]) -> SymmetricMatrix {
        let k = indices.len();
        let mut out = SymmetricMatrix::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.entries[a * k + b] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.check_len(x.len())?;
        Ok((0..self.n).map(|i| (0..self.n).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &x[j])).collect())
    }

    /// The bilinear form `xᵀ M y`.
    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, LinalgError> {
        let my = self.mul_vec(y)?;
        self.check_len(x.len())?;
        Ok(x.iter().zip(&my).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    fn check_len(&self, len: usize) -> Result<(), LinalgError> {
        if len != self.n {
            return Err(LinalgError::DimensionMismatch { expected: self.n, found: len });
        }
        Ok(())
    }

    /// Reduced row echelon form of `[M | rhs]`; returns the pivot columns.
    #[allow(clippy::needless_range_loop)]
    fn rref(&self, rhs: Option<&[Rational]>) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let n = self.n;
        let width = if rhs.is_some() { n + 1 } else { n };
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| self.get(i, j).clone()).collect();
                if let Some(b) = rhs {
                    row.push(b[i].clone());
                }
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for c in col..width {
                a[row][c] = &a[row][c] * &inv;
            }
            for r in 0..n {
                if r != row && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in col..width {
                        let delta = &factor * &a[row][c];
                        a[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        (a, pivots)
    }

    /// Rational basis of the kernel in reduced-echelon form (one vector per free column).
    fn echelon_kernel(&self) -> Vec<Vec<Rational>> {
        let (a, pivots) = self.rref(None);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.n];
                v[f] = crate::rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -a[r][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Solves `M x = b` exactly.
///
/// Returns `Ok(None)` when `b` is not in the column space. When the system is
/// underdetermined the returned solution is the unique one orthogonal to the
/// kernel of `M` (equivalently, the one lying in the column space of `M`).
pub fn solve(m: &SymmetricMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    m.check_len(b.len())?;
    let n = m.dim();
    let (a, pivots) = m.rref(Some(b));
    for row in a.iter().skip(pivots.len()) {
        if !row[n].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = a[r][n].clone();
    }
    let kernel = m.echelon_kernel();
    if !kernel.is_empty() {
        x = project_out(&x, &kernel);
    }
    Ok(Some(x))
}

/// Removes from `x` its component along span(`basis`) with respect to the standard dot product.
fn project_out(x: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    let k = basis.len();
    let dot = |u: &[Rational], v: &[Rational]| u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    let gram_rows: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect()).collect();
    let gram = SymmetricMatrix::from_rows(gram_rows).expect("gram of a basis is symmetric");
    let rhs: Vec<Rational> = basis.iter().map(|v| dot(v, x)).collect();
    let coeffs = solve_nonsingular(&gram, &rhs);
    let mut out = x.to_vec();
    for (c, v) in coeffs.iter().zip(basis) {
        for (o, vi) in out.iter_mut().zip(v) {
            *o -= c * vi;
        }
    }
    out
}

fn solve_nonsingular(m: &SymmetricMatrix, b: &[Rational]) -> Vec<Rational> {
    let (a, pivots) = m.rref(Some(b));
    debug_assert_eq!(pivots.len(), m.dim());
    a.iter().map(|row| row[m.dim()].clone()).collect()
}

/// Basis of `{x : M x = 0}`, each vector primitive integral with positive leading entry.
///
/// The vectors come from the reduced echelon form, so the output is deterministic.
pub fn kernel_basis(m: &SymmetricMatrix) -> Vec<Vec<BigInt>> {
    m.echelon_kernel().iter().map(|v| primitive_integral(v)).collect()
}

/// Sylvester inertia by exact symmetric elimination.
///
/// Diagonal pivots are used whenever one is nonzero; otherwise an off-diagonal
/// `[[0, a], [a, 0]]` block is eliminated at once, contributing one positive and
/// one negative square.
pub fn inertia(m: &SymmetricMatrix) -> Inertia {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = m.rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut result = Inertia::new(0, 0, 0);

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = a[p][p].clone();
            if d.is_positive() {
                result.positive += 1;
            } else {
                result.negative += 1;
            }
            for &j in &active {
                if a[j][p].is_zero() {
                    continue;
                }
                let f = &a[j][p] / &d;
                for &k in &active {
                    let delta = &f * &a[p][k];
                    a[j][k] -= delta;
                }
            }
            continue;
        }

        let pair = active
            .iter()
            .enumerate()
            .find_map(|(x, &i)| active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else {
            result.zero += active.len();
            break;
        };
        active.retain(|&k| k != i && k != j);
        result.positive += 1;
        result.negative += 1;
        // Schur complement of the block [[0, b], [b, 0]]: its inverse is [[0, 1/b], [1/b, 0]].
        let b_inv = a[i][j].recip();
        let col_i: Vec<Rational> = active.iter().map(|&k| a[k][i].clone()).collect();
        let col_j: Vec<Rational> = active.iter().map(|&k| a[k][j].clone()).collect();
        for (x, &k) in active.iter().enumerate() {
            for (y, &l) in active.iter().enumerate() {
                let delta = (&col_i[x] * &col_j[y] + &col_j[x] * &col_i[y]) * &b_inv;
                a[k][l] -= delta;
            }
        }
    }
    result
}

/// Negative definite iff the inertia is `(0, n, 0)`; the empty matrix counts as negative definite.
pub fn is_negative_definite(m: &SymmetricMatrix) -> bool {
    let i = inertia(m);
    i.positive == 0 && i.zero == 0
}

pub fn is_negative_semidefinite(m: &SymmetricMatrix) -> bool {
    inertia(m).positive == 0
}
