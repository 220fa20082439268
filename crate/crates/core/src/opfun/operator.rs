use num_complex::Complex64;

use crate::params::{sector_constants, SectorGeometry};
use crate::{Error, Result};

/// Sector the numerical range of an operator is claimed to lie in.
///
/// `rho_n` is measured in units of `vertex`, matching
/// [`crate::params::SectorGeometry`]. `beta` is `None` when unknown.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorClaim {
    pub beta: Option<f64>,
    pub vertex: f64,
    pub rho_n: Option<f64>,
}

impl SectorClaim {
    /// Sector constants for this claim; fails when `beta` is unknown.
    pub fn geometry(&self) -> Result<SectorGeometry> {
        let beta = self
            .beta
            .ok_or_else(|| Error::invalid("beta", "sector angle not known for this operator"))?;
        let mut g = sector_constants(beta)?.with_vertex(self.vertex)?;
        if let Some(r) = self.rho_n {
            g = g.with_radius(r)?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    sub: Vec<Complex64>,
    diag: Vec<Complex64>,
    sup: Vec<Complex64>,
}

impl Tridiagonal {
    pub fn new(sub: Vec<Complex64>, diag: Vec<Complex64>, sup: Vec<Complex64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::invalid("diag", "empty tridiagonal matrix"));
        }
        let off = diag.len() - 1;
        for len in [sub.len(), sup.len()] {
            if len != off {
                return Err(Error::Dimension {
                    expected: off,
                    got: len,
                });
            }
        }
        Ok(Self { sub, diag, sup })
    }

    pub fn sub(&self) -> &[Complex64] {
        &self.sub
    }

    pub fn diag(&self) -> &[Complex64] {
        &self.diag
    }

    pub fn sup(&self) -> &[Complex64] {
        &self.sup
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn new(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "empty dense matrix"));
        }
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                got: data.len(),
            });
        }
        Ok(Self { n, data })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.n + j] = value;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Storage {
    Diagonal(Vec<Complex64>),
    Tridiagonal(Tridiagonal),
    Dense(DenseMatrix),
}

/// A square complex matrix plus an optional sector claim.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorRep {
    storage: Storage,
    sector: Option<SectorClaim>,
}

impl OperatorRep {
    pub fn diagonal(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("entries", "empty diagonal matrix"));
        }
        Ok(Self {
            storage: Storage::Diagonal(entries),
            sector: None,
        })
    }

    pub fn tridiagonal(
        sub: Vec<Complex64>,
        diag: Vec<Complex64>,
        sup: Vec<Complex64>,
    ) -> Result<Self> {
        Ok(Self {
            storage: Storage::Tridiagonal(Tridiagonal::new(sub, diag, sup)?),
            sector: None,
        })
    }

    pub fn dense(matrix: DenseMatrix) -> Self {
        Self {
            storage: Storage::Dense(matrix),
            sector: None,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal(vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn with_sector(mut self, claim: SectorClaim) -> Self {
        self.sector = Some(claim);
        self
    }

    pub fn storage(&self) -> &Storage {
        &self.storage
    }

    pub fn sector(&self) -> Option<&SectorClaim> {
        self.sector.as_ref()
    }

    pub fn dim(&self) -> usize {
        match &self.storage {
            Storage::Diagonal(d) => d.len(),
            Storage::Tridiagonal(t) => t.dim(),
            Storage::Dense(m) => m.dim(),
        }
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        let n = self.dim();
        if len != n {
            return Err(Error::Dimension {
                expected: n,
                got: len,
            });
        }
        Ok(())
    }

    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(x.len())?;
        Ok(match &self.storage {
            Storage::Diagonal(d) => d.iter().zip(x).map(|(a, b)| a * b).collect(),
            Storage::Tridiagonal(t) => {
                let n = t.dim();
                (0..n)
                    .map(|i| {
                        let mut s = t.diag[i] * x[i];
                        if i > 0 {
                            s += t.sub[i - 1] * x[i - 1];
                        }
                        if i + 1 < n {
                            s += t.sup[i] * x[i + 1];
                        }
                        s
                    })
                    .collect()
            }
            Storage::Dense(m) => (0..m.n)
                .map(|i| {
                    m.data[i * m.n..(i + 1) * m.n]
                        .iter()
                        .zip(x)
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        })
    }

    pub fn to_dense(&self) -> DenseMatrix {
        match &self.storage {
            Storage::Dense(m) => m.clone(),
            Storage::Diagonal(d) => {
                let mut m = DenseMatrix::zeros(d.len());
                for (i, &v) in d.iter().enumerate() {
                    m.set(i, i, v);
                }
                m
            }
            Storage::Tridiagonal(t) => {
                let n = t.dim();
                let mut m = DenseMatrix::zeros(n);
                for i in 0..n {
                    m.set(i, i, t.diag[i]);
                    if i + 1 < n {
                        m.set(i + 1, i, t.sub[i]);
                        m.set(i, i + 1, t.sup[i]);
                    }
                }
                m
            }
        }
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        match &self.storage {
            Storage::Diagonal(d) => d.iter().map(|z| z.norm()).fold(0.0, f64::max),
            Storage::Tridiagonal(t) => {
                let n = t.dim();
                (0..n)
                    .map(|i| {
                        let mut s = t.diag[i].norm();
                        if i > 0 {
                            s += t.sub[i - 1].norm();
                        }
                        if i + 1 < n {
                            s += t.sup[i].norm();
                        }
                        s
                    })
                    .fold(0.0, f64::max)
            }
            Storage::Dense(m) => m
                .data
                .chunks(m.n)
                .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
                .fold(0.0, f64::max),
        }
    }
}
