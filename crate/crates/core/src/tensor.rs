//! Dense multilinear maps built by composing structure constants.
//!
//! A [`Bilinear`] stores the vector `B(e_i, e_j)` for every basis pair and a
//! [`Trilinear`] stores `T(e_i, e_j, e_k)` for every triple. Identities are
//! assembled as expressions over these tensors (pre-/post-composition with
//! linear maps, nesting, argument permutation, per-tuple scaling), then read
//! off tuple by tuple.

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear {
    n: usize,
    data: Vec<Scalar>,
}

impl Bilinear {
    pub fn zeros(n: usize) -> Self {
        Bilinear {
            n,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.n + j) * self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.n]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut [Scalar] {
        let o = self.offset(i, j);
        &mut self.data[o..o + self.n]
    }

    /// `(x, y) -> B(f x, y)` when `slot == 0`, `B(x, f y)` when `slot == 1`.
    pub fn precompose_slot(&self, slot: usize, f: &Matrix) -> Bilinear {
        if f.is_identity() {
            return self.clone();
        }
        let n = self.n;
        let mut out = Bilinear::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = vec![Scalar::zero(); n];
                let free = if slot == 0 { i } else { j };
                for a in 0..n {
                    let c = f.get(a, free);
                    let src = if slot == 0 {
                        self.get(a, j)
                    } else {
                        self.get(i, a)
                    };
                    axpy(&mut acc, c, src);
                }
                out.get_mut(i, j).clone_from_slice(&acc);
            }
        }
        out
    }

    /// `(x, y) -> B(f x, g y)`.
    pub fn precompose(&self, f: &Matrix, g: &Matrix) -> Bilinear {
        self.precompose_slot(0, f).precompose_slot(1, g)
    }

    /// `(x, y) -> h(B(x, y))`.
    pub fn postcompose(&self, h: &Matrix) -> Bilinear {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = h.apply(self.get(i, j));
                out.get_mut(i, j).clone_from_slice(&v);
            }
        }
        out
    }

    /// `(x, y) -> B(y, x)`.
    pub fn swap(&self) -> Bilinear {
        let mut out = Bilinear::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.get_mut(i, j).clone_from_slice(self.get(j, i));
            }
        }
        out
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        Bilinear {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Bilinear) -> Bilinear {
        Bilinear {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        Bilinear {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies the value on each basis pair by `f(i, j)`.
    pub fn scale_pairs(&self, f: impl Fn(usize, usize) -> Scalar) -> Bilinear {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let c = f(i, j);
                for v in out.get_mut(i, j) {
                    *v *= &c;
                }
            }
        }
        out
    }

    /// `(x, y, z) -> B(x, inner(y, z))`.
    pub fn nest_right(&self, inner: &Bilinear) -> Trilinear {
        let n = self.n;
        let mut out = Trilinear::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Scalar::zero(); n];
                    for (m, c) in inner.get(j, k).iter().enumerate() {
                        axpy(&mut acc, c, self.get(i, m));
                    }
                    out.get_mut(i, j, k).clone_from_slice(&acc);
                }
            }
        }
        out
    }

    /// `(x, y, z) -> B(inner(x, y), z)`.
    pub fn nest_left(&self, inner: &Bilinear) -> Trilinear {
        let n = self.n;
        let mut out = Trilinear::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Scalar::zero(); n];
                    for (m, c) in inner.get(i, j).iter().enumerate() {
                        axpy(&mut acc, c, self.get(m, k));
                    }
                    out.get_mut(i, j, k).clone_from_slice(&acc);
                }
            }
        }
        out
    }

    /// Evaluates on arbitrary coefficient vectors by multilinear extension.
    pub fn contract(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                axpy(&mut acc, &(xi * yj), self.get(i, j));
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trilinear {
    n: usize,
    data: Vec<Scalar>,
}

impl Trilinear {
    pub fn zeros(n: usize) -> Self {
        Trilinear {
            n,
            data: vec![Scalar::zero(); n * n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.n + j) * self.n + k) * self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = self.offset(i, j, k);
        &self.data[o..o + self.n]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut [Scalar] {
        let o = self.offset(i, j, k);
        &mut self.data[o..o + self.n]
    }

    /// Substitutes `f x` for the argument in position `slot`.
    pub fn precompose_slot(&self, slot: usize, f: &Matrix) -> Trilinear {
        if f.is_identity() {
            return self.clone();
        }
        let n = self.n;
        let mut out = Trilinear::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Scalar::zero(); n];
                    let idx = [i, j, k];
                    for a in 0..n {
                        let c = f.get(a, idx[slot]);
                        let mut src = idx;
                        src[slot] = a;
                        axpy(&mut acc, c, self.get(src[0], src[1], src[2]));
                    }
                    out.get_mut(i, j, k).clone_from_slice(&acc);
                }
            }
        }
        out
    }

    /// `T'(x0, x1, x2) = T(x[p0], x[p1], x[p2])`.
    pub fn permute(&self, p: [usize; 3]) -> Trilinear {
        let n = self.n;
        let mut out = Trilinear::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = [i, j, k];
                    out.get_mut(i, j, k)
                        .clone_from_slice(self.get(idx[p[0]], idx[p[1]], idx[p[2]]));
                }
            }
        }
        out
    }

    pub fn scale_triples(&self, f: impl Fn(usize, usize, usize) -> Scalar) -> Trilinear {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let c = f(i, j, k);
                    for v in out.get_mut(i, j, k) {
                        *v *= &c;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Trilinear) -> Trilinear {
        Trilinear {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Trilinear) -> Trilinear {
        Trilinear {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn contract(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    axpy(&mut acc, &(&xy * zk), self.get(i, j, k));
                }
            }
        }
        acc
    }
}
