//! Dense exact linear algebra over a [`Scalar`] field.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C>,
}

impl<C: Scalar> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "matrix shapes {}x{} and {}x{} do not compose",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the left factor indexes the most significant
    /// digit.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols).mul(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }

    pub fn rank(&self) -> usize {
        rank(self.rows, self.cols, self.data.clone())
    }

    pub fn det(&self) -> Result<C> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        Ok(det(self.rows, self.data.clone()))
    }
}

/// Rank by Gaussian elimination on a row-major buffer.
pub fn rank<C: Scalar>(rows: usize, cols: usize, mut a: Vec<C>) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = C::one().checked_div(&a[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j].mul(&inv);
        }
        for i in r + 1..rows {
            let f = a[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = a[i * cols + j].sub(&f.mul(&a[r * cols + j]));
                a[i * cols + j] = v;
            }
        }
        r += 1;
    }
    r
}

/// A basis of `{x : A x = 0}` for a row-major `rows × cols` matrix.
pub fn nullspace<C: Scalar>(rows: usize, cols: usize, mut a: Vec<C>) -> Vec<Vec<C>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = C::one().checked_div(&a[r * cols + c]).expect("pivot is nonzero");
        for j in 0..cols {
            a[r * cols + j] = a[r * cols + j].mul(&inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = a[i * cols + j].sub(&f.mul(&a[r * cols + j]));
                a[i * cols + j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![C::zero(); cols];
            v[fc] = C::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = a[pr * cols + fc].neg();
            }
            v
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant; every division is exact, which
/// keeps polynomial entries polynomial.
pub fn det<C: Scalar>(n: usize, mut a: Vec<C>) -> C {
    if n == 0 {
        return C::one();
    }
    let mut sign = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return C::zero();
            };
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            sign = !sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = pivot.mul(&a[i * n + j]).sub(&a[i * n + k].mul(&a[k * n + j]));
                a[i * n + j] = v.checked_div(&prev).expect("previous pivot is nonzero");
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}
