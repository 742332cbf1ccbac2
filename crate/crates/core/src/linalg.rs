//! Dense square matrices over exact rationals.
//!
//! Column `j` holds the image of basis vector `j`, so `(M x)_i = sum_j M[i][j] x_j`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("matrix must be square ({n} rows)")));
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds the matrix whose column `j` is `f(j)`.
    pub fn from_columns(n: usize, mut f: impl FnMut(usize) -> Vec<Scalar>) -> Self {
        let mut m = Self::zeros(n);
        for j in 0..n {
            let col = f(j);
            debug_assert_eq!(col.len(), n);
            for (i, c) in col.into_iter().enumerate() {
                m.entries[i * n + j] = c;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        (0..self.n)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, xj) in x.iter().enumerate() {
                    let m = self.get(i, j);
                    if !m.is_zero() && !xj.is_zero() {
                        acc += m * xj;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Matrix::from_columns(self.n, |j| self.apply(&other.column(j)))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^k` by repeated multiplication.
    pub fn power(&self, k: u32) -> Matrix {
        let mut out = Matrix::identity(self.n);
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.n, other.n);
        let mut out = Matrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..m {
                    for q in 0..m {
                        out.set(i * m + p, j * m + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut a = self.rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Exact Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Matrix::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        Matrix::from_rows(inv)
    }
}
