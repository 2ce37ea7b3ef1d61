//! Small dense matrices over exact rings, plus exact inertia of symmetric
//! matrices over ordered fields.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quadratic::QuadraticSurd;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Row-major `rows × cols` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntegerMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<Rational>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!("row {bad} has {} entries, expected {c}", rows[bad].len())));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a * c)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j) + &(a * o.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum `self ⊕ o`.
    pub fn block_diag(&self, o: &Self) -> Self {
        let n = self.rows + o.rows;
        let m = self.cols + o.cols;
        let mut out = Self::zeros(n, m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        out
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }
}

impl IntegerMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination; `det` of the 0×0 matrix is 1.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }
}

impl RationalMatrix {
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= &a[k][k];
            for i in k + 1..n {
                let f = &a[i][k] / &a[k][k];
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = RationalMatrix::identity(n).to_rows();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, k);
            inv.swap(p, k);
            let piv = a[k][k].recip();
            for j in 0..n {
                a[k][j] = &a[k][j] * &piv;
                inv[k][j] = &inv[k][j] * &piv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&f * &a[k][j]);
                    inv[i][j] = &inv[i][j] - &(&f * &inv[k][j]);
                }
            }
        }
        Matrix::from_rows(inv)
    }

    /// Exact `M^k` by repeated squaring; negative `k` inverts first.
    pub fn power(&self, k: i64) -> Result<RationalMatrix> {
        self.require_square()?;
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = RationalMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// String rows with entries as `a` or `a/b`.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.to_rows().iter().map(|r| r.iter().map(rational::format).collect()).collect()
    }
}

/// `matrix_power` accepting an integer matrix.
pub fn matrix_power(m: &IntegerMatrix, k: i64) -> Result<RationalMatrix> {
    m.to_rational().power(k)
}

impl<T: fmt::Display + Clone> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Scalars with exact field operations and an exact sign, as needed by
/// symmetric elimination.
pub trait OrderedField: Clone {
    fn is_zero_value(&self) -> bool;
    fn sign(&self) -> Ordering;
    fn f_add(&self, o: &Self) -> Self;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    fn f_div(&self, o: &Self) -> Self;
}

impl OrderedField for Rational {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn sign(&self) -> Ordering {
        self.cmp(&Rational::zero())
    }
    fn f_add(&self, o: &Self) -> Self {
        self + o
    }
    fn f_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn f_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn f_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl OrderedField for QuadraticSurd {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn sign(&self) -> Ordering {
        self.signum()
    }
    fn f_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn f_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn f_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn f_div(&self, o: &Self) -> Self {
        self.div(o)
    }
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Exact inertia by symmetric Gaussian elimination (an LDLᵀ with 1×1 and 2×2
/// pivots). Congruence preserves inertia (Sylvester), so counting signs of the
/// pivots is exact.
pub fn inertia<T: OrderedField>(matrix: &[Vec<T>]) -> Inertia {
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut out = Inertia::default();
    loop {
        let n = a.len();
        if n == 0 {
            return out;
        }
        // 1×1 pivot on any non-zero diagonal entry.
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero_value()) {
            let piv = a[p][p].clone();
            match piv.sign() {
                Ordering::Greater => out.positive += 1,
                _ => out.negative += 1,
            }
            let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
            let next = rest
                .iter()
                .map(|&i| {
                    let f = a[i][p].f_div(&piv);
                    rest.iter().map(|&j| a[i][j].f_sub(&f.f_mul(&a[p][j]))).collect()
                })
                .collect();
            a = next;
            continue;
        }
        // Zero diagonal: pivot on a 2×2 block [[0, c], [c, 0]], inertia (1, 1).
        let Some((p, q)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero_value()) else {
            out.zero += n;
            return out;
        };
        out.positive += 1;
        out.negative += 1;
        let c = a[p][q].clone();
        let rest: Vec<usize> = (0..n).filter(|&i| i != p && i != q).collect();
        // With B = [[0, c], [c, 0]], B⁻¹ = [[0, 1/c], [1/c, 0]]; Schur complement
        // S_ij = a_ij - (a_ip a_qj + a_iq a_pj) / c.
        let next = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| {
                        let t = a[i][p].f_mul(&a[q][j]).f_add(&a[i][q].f_mul(&a[p][j]));
                        a[i][j].f_sub(&t.f_div(&c))
                    })
                    .collect()
            })
            .collect();
        a = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn rm(rows: &[&[i64]]) -> RationalMatrix {
        IntegerMatrix::from_i64_rows(rows).unwrap().to_rational()
    }

    #[test]
    fn power_examples() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]).unwrap();
        assert_eq!(matrix_power(&m, 2).unwrap(), rm(&[&[5, 3], &[3, 2]]));
        assert_eq!(matrix_power(&m, 0).unwrap(), RationalMatrix::identity(2));
        assert_eq!(matrix_power(&m, -1).unwrap(), rm(&[&[1, -1], &[-1, 2]]));
        let singular = IntegerMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(matrix_power(&singular, -1), Err(Error::Singular));
        let rect = IntegerMatrix::from_i64_rows(&[&[1, 2, 3]]).unwrap();
        assert!(matches!(matrix_power(&rect, 2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn determinants_agree() {
        let m = IntegerMatrix::from_i64_rows(&[&[0, 2, 1], &[3, -1, 4], &[1, 1, 0]]).unwrap();
        let d = m.det().unwrap();
        assert_eq!(Rational::from_integer(d.clone()), m.to_rational().det().unwrap());
        assert_eq!(d, BigInt::from(12));
        assert_eq!(IntegerMatrix::from_rows(vec![]).unwrap().det().unwrap(), BigInt::one());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = rm(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
    }

    #[test]
    fn inertia_counts() {
        let a: Vec<Vec<Rational>> = vec![vec![int(-2), int(1)], vec![int(1), int(-2)]];
        assert_eq!(inertia(&a), Inertia { positive: 0, negative: 2, zero: 0 });
        let hyperbolic: Vec<Vec<Rational>> = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(inertia(&hyperbolic).signature(), 0);
        let degenerate: Vec<Vec<Rational>> = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
        assert_eq!(inertia(&degenerate), Inertia { positive: 1, negative: 0, zero: 1 });
        let mixed: Vec<Vec<Rational>> = vec![
            vec![int(0), int(0), int(3)],
            vec![int(0), int(0), int(0)],
            vec![int(3), int(0), rat(1, 2)],
        ];
        assert_eq!(inertia(&mixed), Inertia { positive: 1, negative: 1, zero: 1 });
    }
}
