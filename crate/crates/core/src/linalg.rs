//! Small dense matrices over exact fields (rationals and rational functions).

use std::fmt;

use crate::arith::{Rat, RatFunc};

/// The field operations the dense routines need.
pub trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Field for Rat {
    fn zero_like(&self) -> Rat {
        Rat::zero()
    }
    fn one_like(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, other: &Rat) -> Rat {
        self + other
    }
    fn sub(&self, other: &Rat) -> Rat {
        self - other
    }
    fn mul(&self, other: &Rat) -> Rat {
        self * other
    }
    fn neg(&self) -> Rat {
        -self
    }
    fn inv(&self) -> Option<Rat> {
        self.recip()
    }
}

impl Field for RatFunc {
    fn zero_like(&self) -> RatFunc {
        RatFunc::zero(self.nvars())
    }
    fn one_like(&self) -> RatFunc {
        RatFunc::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> RatFunc {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Option<RatFunc> {
        RatFunc::inv(self).ok()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Mat<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize, one: &T) -> Mat<T> {
        let zero = one.zero_like();
        Mat::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Field>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Field, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Mat<U>, E> {
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat<T> {
        Mat::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn without_columns(&self, cols: &[usize]) -> Mat<T> {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        self.select_columns(&keep)
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).zero_like();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat<T>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let one = self.data[0].one_like();
        let mut a = self.clone();
        let mut inv = Mat::identity(n, &one);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let s = a.get(c, c).inv()?;
            a.scale_row(c, &s);
            inv.scale_row(c, &s);
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, c, &f);
                inv.axpy_row(r, c, &f);
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-field elimination.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            panic!("determinant of an empty matrix has no prototype element");
        }
        let mut a = self.clone();
        let mut det = self.data[0].one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return det.zero_like();
            };
            if p != c {
                a.swap_rows(c, p);
                det = det.neg();
            }
            let piv = a.get(c, c).clone();
            det = det.mul(&piv);
            let s = piv.inv().unwrap();
            for r in c + 1..n {
                let f = a.get(r, c).mul(&s);
                if !f.is_zero() {
                    a.axpy_row(r, c, &f);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let s = a.get(rank, c).inv().unwrap();
            for r in rank + 1..self.rows {
                let f = a.get(r, c).mul(&s);
                if !f.is_zero() {
                    a.axpy_row(r, rank, &f);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn stack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &T) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(s);
            self.set(r, j, v);
        }
    }

    /// `row[r] -= f * row[src]`.
    fn axpy_row(&mut self, r: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, j).sub(&f.mul(s));
            self.set(r, j, v);
        }
    }
}

impl<T: Field + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Field + fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
