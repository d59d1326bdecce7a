//! Néron–Severi lattices of blowups of the projective plane.
//!
//! A lattice starts as `⟨L⟩` with `L² = 1`, `K = −3L`. Each blowup appends an
//! exceptional class `E` with `E² = −1`, orthogonal to everything before, and
//! replaces `K` by `K + E`. Tracked curve classes are updated to their strict
//! transforms `C − mE`, where `m` is the multiplicity of `C` at the center.

use crate::config::Configuration;
use crate::linalg::{inertia, Inertia, SymmetricMatrix};
use crate::rational::{int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("class {name:?} has length {found}, lattice rank is {rank}")]
    RankMismatch { name: String, found: usize, rank: usize },
    #[error("negative multiplicity {multiplicity} for class {name:?}")]
    NegativeMultiplicity { name: String, multiplicity: i64 },
    #[error("classes {a:?} and {b:?} pair to {value} < 0; distinct curves cannot meet negatively")]
    NegativePairing { a: String, b: String, value: i64 },
    #[error(transparent)]
    Config(#[from] crate::config::ConfigError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsLattice {
    basis_names: Vec<String>,
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
}

/// A named curve class together with its geometric genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub name: String,
    pub class: Vec<i64>,
    pub genus: u32,
}

impl ClassRecord {
    pub fn new(name: impl Into<String>, class: Vec<i64>, genus: u32) -> Self {
        ClassRecord { name: name.into(), class, genus }
    }
}

impl NsLattice {
    /// `NS(P²) = ℤL`, `L² = 1`, `K = −3L`.
    pub fn projective_plane() -> Self {
        NsLattice { basis_names: vec!["L".to_string()], gram: vec![vec![1]], canonical: vec![-3] }
    }

    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn gram_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_rows(self.gram.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("lattice gram is symmetric")
    }

    pub fn inertia(&self) -> Inertia {
        inertia(&self.gram_matrix())
    }

    /// Basis vector `i` as a class.
    pub fn basis_class(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                total += ai * bj * self.gram[i][j];
            }
        }
        total
    }

    fn check_class(&self, name: &str, class: &[i64]) -> Result<(), LatticeError> {
        if class.len() != self.rank() {
            return Err(LatticeError::RankMismatch { name: name.to_string(), found: class.len(), rank: self.rank() });
        }
        Ok(())
    }

    /// Blows up one point. `passing` lists the tracked classes through the
    /// point with their multiplicities there; they are returned as strict
    /// transforms, in the same order. The new exceptional class is the last
    /// basis vector, named `E{k}`.
    pub fn blowup(&self, passing: &[(ClassRecord, i64)]) -> Result<(NsLattice, Vec<ClassRecord>), LatticeError> {
        for (record, m) in passing {
            self.check_class(&record.name, &record.class)?;
            if *m < 0 {
                return Err(LatticeError::NegativeMultiplicity { name: record.name.clone(), multiplicity: *m });
            }
        }
        let rank = self.rank();
        let mut gram: Vec<Vec<i64>> = self
            .gram
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(0);
                r
            })
            .collect();
        let mut last = vec![0; rank + 1];
        last[rank] = -1;
        gram.push(last);
        let mut basis_names = self.basis_names.clone();
        basis_names.push(format!("E{rank}"));
        let mut canonical = self.canonical.clone();
        canonical.push(1);
        let lattice = NsLattice { basis_names, gram, canonical };

        let transforms = passing
            .iter()
            .map(|(record, m)| {
                let mut class = record.class.clone();
                class.push(-m);
                ClassRecord { name: record.name.clone(), class, genus: record.genus }
            })
            .collect();
        Ok((lattice, transforms))
    }

    /// Extends a class on a smaller lattice by zeros (total transform).
    pub fn lift(&self, class: &[i64]) -> Vec<i64> {
        let mut v = class.to_vec();
        v.resize(self.rank(), 0);
        v
    }

    /// Arithmetic genus `½·c·(c + K) + 1`.
    pub fn adjunction_genus(&self, class: &[i64]) -> Rational {
        let cc = self.pairing(class, class);
        let ck = self.pairing(class, &self.canonical);
        ratio(cc + ck, 2) + int(1)
    }

    /// Configuration whose gram is the pairing of `records`; all nodes proper.
    pub fn configuration_from_classes(&self, records: &[ClassRecord]) -> Result<Configuration, LatticeError> {
        for r in records {
            self.check_class(&r.name, &r.class)?;
        }
        let n = records.len();
        let mut gram = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let value = self.pairing(&records[i].class, &records[j].class);
                if i != j && value < 0 {
                    return Err(LatticeError::NegativePairing {
                        a: records[i].name.clone(),
                        b: records[j].name.clone(),
                        value,
                    });
                }
                gram.set(i, j, int(value));
            }
        }
        Ok(Configuration::new(records.iter().map(|r| (r.name.clone(), r.genus, true)).collect(), gram)?)
    }
}

/// Blows up `P²` at `n` distinct points of a smooth cubic and returns the lattice with the
/// strict transform `3L − ΣEᵢ` of the cubic.
pub fn cubic_through_points(n: usize) -> (NsLattice, ClassRecord) {
    let mut lattice = NsLattice::projective_plane();
    let mut cubic = ClassRecord::new("C", vec![3], 1);
    for _ in 0..n {
        let (next, mut updated) = lattice.blowup(&[(cubic, 1)]).expect("multiplicity 1 is valid");
        lattice = next;
        cubic = updated.remove(0);
    }
    (lattice, cubic)
}
