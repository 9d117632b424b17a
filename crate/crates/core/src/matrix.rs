//! Dense complex square matrices.
//!
//! [`ComplexMatrix`] is an immutable value: every operation returns a fresh
//! matrix. All entries are finite; constructors reject NaN and infinities and
//! products that overflow report [`MatrixError::NonFinite`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Sub};

use num_complex::Complex64;
// Inherent f64 methods shadow these whenever std is linked.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;
use thiserror::Error;

use crate::tolerance;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

/// Dense `n × n` complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    order: usize,
    data: Vec<Complex64>,
}

fn check_finite(order: usize, data: &[Complex64]) -> Result<(), MatrixError> {
    match data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(k) => Err(MatrixError::NonFinite {
            row: k / order,
            col: k % order,
        }),
        None => Ok(()),
    }
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_row_major(order: usize, data: Vec<Complex64>) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::Empty);
        }
        if data.len() != order * order {
            let row = data.len() / order;
            return Err(MatrixError::NotSquare {
                row,
                expected: order,
                found: data.len() % order,
            });
        }
        check_finite(order, &data)?;
        Ok(Self { order, data })
    }

    pub fn from_fn<F>(order: usize, mut f: F) -> Result<Self, MatrixError>
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        if order == 0 {
            return Err(MatrixError::Empty);
        }
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        Self::from_row_major(order, data)
    }

    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let order = rows.len();
        if order == 0 {
            return Err(MatrixError::Empty);
        }
        let mut data = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(MatrixError::NotSquare {
                    row: i,
                    expected: order,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(order, data)
    }

    /// Builds a matrix with zero imaginary parts.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// # Panics
    ///
    /// If `order` is zero.
    pub fn zeros(order: usize) -> Self {
        assert!(order > 0, "matrix order must be at least 1");
        Self {
            order,
            data: vec![ZERO; order * order],
        }
    }

    /// # Panics
    ///
    /// If `order` is zero.
    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = ONE;
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> Result<Self, MatrixError> {
        Self::from_fn(entries.len(), |i, j| if i == j { entries[i] } else { ZERO })
    }

    pub fn real_diagonal(entries: &[f64]) -> Result<Self, MatrixError> {
        let entries: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diagonal(&entries)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.order + col]
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.data[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> + '_ {
        self.data.chunks_exact(self.order)
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.order;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.data[j * n + i].conj());
            }
        }
        Self { order: n, data }
    }

    fn ensure_same_order(&self, other: &Self) -> Result<(), MatrixError> {
        if self.order != other.order {
            return Err(MatrixError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    fn zip_with<F>(&self, other: &Self, f: F) -> Result<Self, MatrixError>
    where
        F: Fn(Complex64, Complex64) -> Complex64,
    {
        self.ensure_same_order(other)?;
        let data: Vec<Complex64> = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        check_finite(self.order, &data)?;
        Ok(Self {
            order: self.order,
            data,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: Complex64) -> Result<Self, MatrixError> {
        let data: Vec<Complex64> = self.data.iter().map(|&z| z * factor).collect();
        check_finite(self.order, &data)?;
        Ok(Self {
            order: self.order,
            data,
        })
    }

    /// Standard matrix product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, MatrixError> {
        self.ensure_same_order(other)?;
        let data = product(self.order, &self.data, &other.data);
        check_finite(self.order, &data)?;
        Ok(Self {
            order: self.order,
            data,
        })
    }

    /// `self^k` by repeated multiplication; `self^0` is the identity.
    pub fn power(&self, k: u32) -> Result<Self, MatrixError> {
        let mut acc = Self::identity(self.order);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.order).map(|i| self.data[i * self.order + i]).sum()
    }

    /// Frobenius norm, accumulated with scaling so that large entries do not
    /// overflow the intermediate sum of squares.
    pub fn frobenius_norm(&self) -> f64 {
        frobenius(&self.data)
    }

    /// `‖self‖_F ≤ tol`.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.frobenius_norm() <= tol
    }

    /// [`is_zero`](Self::is_zero) at `1e-10 · max(1, ‖self‖_F)`.
    pub fn is_zero_default(&self) -> bool {
        let norm = self.frobenius_norm();
        norm <= tolerance::ZERO_REL * tolerance::scale(norm)
    }

    /// `‖self - self*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.order;
        let mut diff = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                diff.push(self.data[i * n + j] - self.data[j * n + i].conj());
            }
        }
        frobenius(&diff)
    }

    /// Largest modulus on the diagonal (the spectral radius of a triangular
    /// matrix).
    pub fn max_abs_diagonal(&self) -> f64 {
        (0..self.order)
            .map(|i| self.data[i * self.order + i].norm())
            .fold(0.0, f64::max)
    }

    /// `T = A + iB` with `A = (T + T*)/2` and `B = (T - T*)/(2i)`.
    ///
    /// Both parts are Hermitian bit-for-bit: entry `(j, i)` is computed from
    /// the same two operands as `(i, j)`, in an order that only flips signs.
    pub fn cartesian_decompose(&self) -> CartesianDecomposition {
        let n = self.order;
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let t = self.data[i * n + j];
                let s = self.data[j * n + i];
                // t + conj(s) and t - conj(s), written so that swapping i and
                // j yields exactly the conjugate.
                re.push(Complex64::new((t.re + s.re) / 2.0, (t.im - s.im) / 2.0));
                // (t - conj(s)) / (2i) = ((t.im + s.im) / 2, (s.re - t.re) / 2);
                // the subtraction order keeps real diagonals at +0, not -0.
                im.push(Complex64::new((t.im + s.im) / 2.0, (s.re - t.re) / 2.0));
            }
        }
        CartesianDecomposition {
            re: Self { order: n, data: re },
            im: Self { order: n, data: im },
        }
    }

    /// `self* · self`, with the lower triangle mirrored from the upper so the
    /// result is exactly Hermitian.
    pub fn gram(&self) -> Self {
        let n = self.order;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += self.data[k * n + i].conj() * self.data[k * n + j];
                }
                if i == j {
                    acc.im = 0.0;
                }
                out[i * n + j] = acc;
                out[j * n + i] = acc.conj();
            }
        }
        Self { order: n, data: out }
    }
}

/// Row-major product that skips zero entries and, for each row of the right
/// factor, only visits its nonzero column span. Triangular operands cost
/// roughly a sixth of a dense product.
pub(crate) fn product<T>(n: usize, x: &[T], y: &[T]) -> Vec<T>
where
    T: Copy + PartialEq + Zero + Mul<Output = T> + AddAssign,
{
    let zero = T::zero();
    let spans: Vec<(usize, usize)> = y
        .chunks_exact(n)
        .map(|row| match row.iter().position(|z| *z != zero) {
            Some(lo) => {
                let hi = n - row.iter().rev().position(|z| *z != zero).unwrap_or(0);
                (lo, hi)
            }
            None => (0, 0),
        })
        .collect();
    let mut out = vec![zero; n * n];
    for i in 0..n {
        let out_row = &mut out[i * n..(i + 1) * n];
        for k in 0..n {
            let a = x[i * n + k];
            if a == zero {
                continue;
            }
            let (lo, hi) = spans[k];
            let y_row = &y[k * n..(k + 1) * n];
            for j in lo..hi {
                out_row[j] += a * y_row[j];
            }
        }
    }
    out
}

pub(crate) fn frobenius(data: &[Complex64]) -> f64 {
    let big = data.iter().map(|z| z.re.abs().max(z.im.abs())).fold(0.0, f64::max);
    if big == 0.0 {
        return 0.0;
    }
    if big < 1e150 && big > 1e-150 {
        return data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    }
    let sum: f64 = data
        .iter()
        .map(|z| {
            let (a, b) = (z.re / big, z.im / big);
            a * a + b * b
        })
        .sum();
    big * sum.sqrt()
}

/// The pair `(A, B)` with `T = A + iB`, both Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianDecomposition {
    /// `Re T = (T + T*)/2`.
    pub re: ComplexMatrix,
    /// `Im T = (T - T*)/(2i)`.
    pub im: ComplexMatrix,
}

impl CartesianDecomposition {
    /// `A + iB`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let data = self
            .re
            .data
            .iter()
            .zip(&self.im.data)
            .map(|(&a, &b)| a + Complex64::new(-b.im, b.re))
            .collect();
        ComplexMatrix {
            order: self.re.order,
            data,
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.order, self.order)?;
        for row in self.rows() {
            write!(f, " ")?;
            for z in row {
                write!(f, " {}{:+}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// # Panics
    ///
    /// On order mismatch or overflow; use [`ComplexMatrix::multiply`] to
    /// handle those.
    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.multiply(rhs).expect("matrix product")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: Self) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}
