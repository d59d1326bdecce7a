//! Reference implementations used to cross-check the library. Nothing here
//! shares code with the elimination routines under test.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use surfsat::config::{Configuration, NodeSet};
use surfsat::linalg::{Inertia, SymmetricMatrix};
use surfsat::rational::{int, ratio, Rational};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn dense(m: &SymmetricMatrix) -> Vec<Vec<Rational>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j).clone()).collect()).collect()
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier; `c[k]` is the coefficient of `x^k`.
pub fn char_poly(a: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    s += &a[i][l] * &m[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        m = next;
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &m[l][i];
            }
        }
        c[n - k] = -tr / int(k as i64);
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = Rational>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial. All roots are real, so Descartes'
/// rule of signs counts positive and negative roots exactly.
pub fn inertia_oracle(m: &SymmetricMatrix) -> Inertia {
    let c = char_poly(&dense(m));
    let zero = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    let positive = sign_changes(c.iter().cloned());
    let negative = sign_changes(c.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() }));
    Inertia::new(positive, negative, zero)
}

/// Determinant by cofactor expansion along the first row (small matrices only).
pub fn det_cofactor(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = Rational::zero();
    for col in 0..n {
        if a[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][col] * det_cofactor(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bareiss(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn principal(a: &[Vec<Rational>], idx: &[usize]) -> Vec<Vec<Rational>> {
    idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect()
}

fn negated(m: &SymmetricMatrix) -> Vec<Vec<Rational>> {
    dense(m).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect()
}

/// Sylvester: `−M` positive definite iff all leading principal minors are positive.
pub fn negative_definite_oracle(m: &SymmetricMatrix) -> bool {
    let a = negated(m);
    (1..=a.len()).all(|k| det_cofactor(&principal(&a, &(0..k).collect::<Vec<_>>())).is_positive())
}

/// `−M` positive semidefinite iff every principal minor is non-negative.
pub fn negative_semidefinite_oracle(m: &SymmetricMatrix) -> bool {
    let a = negated(m);
    let n = a.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        !det_cofactor(&principal(&a, &idx)).is_negative()
    })
}

/// Solution of a nonsingular system by Cramer's rule.
pub fn cramer(a: &[Vec<Rational>], b: &[Rational]) -> Vec<Rational> {
    let d = det_cofactor(a);
    assert!(!d.is_zero(), "cramer needs a nonsingular matrix");
    (0..a.len())
        .map(|col| {
            let replaced: Vec<Vec<Rational>> = a
                .iter()
                .zip(b)
                .map(|(row, bi)| {
                    row.iter().enumerate().map(|(j, x)| if j == col { bi.clone() } else { x.clone() }).collect()
                })
                .collect();
            det_cofactor(&replaced) / &d
        })
        .collect()
}

/// Connected components by depth-first search over positive entries.
pub fn components_oracle(m: &SymmetricMatrix, subset: &NodeSet) -> Vec<NodeSet> {
    let mut left: Vec<usize> = subset.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(start) = left.first().copied() {
        let mut comp = NodeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !comp.insert(v) {
                continue;
            }
            for &w in subset {
                if w != v && !comp.contains(&w) && m.get(v, w).is_positive() {
                    stack.push(w);
                }
            }
        }
        left.retain(|v| !comp.contains(v));
        out.push(comp);
    }
    out
}

pub fn random_symmetric_int(r: &mut StdRng, n: usize, lo: i64, hi: i64, offdiag_nonneg: bool) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let low = if i != j && offdiag_nonneg { lo.max(0) } else { lo };
            m.set(i, j, int(r.gen_range(low..=hi)));
        }
    }
    m
}

pub fn random_symmetric_rational(r: &mut StdRng, n: usize) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = if r.gen_bool(0.2) { Rational::zero() } else { ratio(r.gen_range(-9..=9), r.gen_range(1..=5)) };
            m.set(i, j, v);
        }
    }
    m
}

/// Random negative definite matrix with non-negative off-diagonal entries, by rejection.
pub fn random_negative_definite(r: &mut StdRng, k: usize) -> SymmetricMatrix {
    loop {
        let mut m = SymmetricMatrix::zeros(k);
        for i in 0..k {
            m.set(i, i, int(-r.gen_range(1..=4)));
            for j in i + 1..k {
                m.set(i, j, int(if r.gen_bool(0.4) { 1 } else { 0 }));
            }
        }
        if negative_definite_oracle(&m) {
            return m;
        }
    }
}

pub fn configuration(m: SymmetricMatrix) -> Configuration {
    Configuration::new((0..m.dim()).map(|i| (format!("N{i}"), 0, true)).collect(), m).unwrap()
}

pub fn set(ids: &[usize]) -> NodeSet {
    ids.iter().copied().collect()
}

/// Cycle of `n` (−2)-curves (Kodaira `I_n`); `I_2` is two curves meeting twice.
pub fn kodaira_cycle(n: usize) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, int(-2));
    }
    if n == 2 {
        m.set(0, 1, int(2));
    } else {
        for i in 0..n {
            m.set(i, (i + 1) % n, int(1));
        }
    }
    m
}

/// Sylvester's criterion with Bareiss determinants, for integer matrices of any size.
pub fn negative_definite_int_oracle(m: &SymmetricMatrix) -> bool {
    let n = m.dim();
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = m.get(i, j);
                    assert!(x.is_integer(), "integer matrix expected");
                    -x.to_integer()
                })
                .collect()
        })
        .collect();
    (1..=n).all(|k| {
        let lead: Vec<Vec<BigInt>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_bareiss(&lead).is_positive()
    })
}
