//! Block-partitioned supermatrices.
//!
//! [`SMatrix`] is a plain container with a row split `k|l` and a column split
//! `r|s`; rows `0..k` and columns `0..r` are even. Column surgery (minors,
//! moving columns across the divider, omitting columns) is generic so the
//! same code serves the symbolic labels and the concrete matrices. Products
//! and inversion work on [`Entry`], which adds the formal odd unit `1v` to
//! the superalgebra.

use std::fmt;

use crate::atlas::{ChartIndex, GrassSpec};
use crate::error::{Error, Result};
use crate::grassmann::{NuStructure, SuperElem};

/// Entry types that know which block parity they may occupy.
pub trait SlotParity {
    /// True if the value may sit in a slot of the given parity.
    fn fits(&self, odd_slot: bool) -> bool;
}

#[derive(Clone, PartialEq)]
pub struct SMatrix<T> {
    row_split: (usize, usize),
    col_split: (usize, usize),
    data: Vec<T>,
}

impl<T: Clone> SMatrix<T> {
    pub fn from_fn(row_split: (usize, usize), col_split: (usize, usize), mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = row_split.0 + row_split.1;
        let cols = col_split.0 + col_split.1;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        SMatrix { row_split, col_split, data }
    }

    pub fn from_rows(row_split: (usize, usize), col_split: (usize, usize), rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = row_split.0 + row_split.1;
        let ncols = col_split.0 + col_split.1;
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch(format!(
                "expected {}|{} x {}|{} entries",
                row_split.0, row_split.1, col_split.0, col_split.1
            )));
        }
        Ok(SMatrix { row_split, col_split, data: rows.into_iter().flatten().collect() })
    }

    pub fn row_split(&self) -> (usize, usize) {
        self.row_split
    }

    pub fn col_split(&self) -> (usize, usize) {
        self.col_split
    }

    pub fn nrows(&self) -> usize {
        self.row_split.0 + self.row_split.1
    }

    pub fn ncols(&self) -> usize {
        self.col_split.0 + self.col_split.1
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let c = self.ncols();
        self.data[i * c + j] = v;
    }

    pub fn row_is_odd(&self, i: usize) -> bool {
        i >= self.row_split.0
    }

    pub fn col_is_odd(&self, j: usize) -> bool {
        j >= self.col_split.0
    }

    /// Parity of slot `(i, j)`: odd exactly in the off-diagonal blocks.
    pub fn slot_is_odd(&self, i: usize, j: usize) -> bool {
        self.row_is_odd(i) != self.col_is_odd(j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let c = self.ncols();
        self.data.iter().enumerate().map(move |(n, v)| (n / c, n % c, v))
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> SMatrix<U> {
        SMatrix { row_split: self.row_split, col_split: self.col_split, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn try_map<U: Clone>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<SMatrix<U>> {
        Ok(SMatrix {
            row_split: self.row_split,
            col_split: self.col_split,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// The columns at the given absolute positions, which must be ascending
    /// and list all even columns before the odd ones.
    pub fn select_columns(&self, cols: &[usize]) -> Result<SMatrix<T>> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.ncols()) {
            return Err(Error::IndexOutOfRange(format!("column {} of {}", bad + 1, self.ncols())));
        }
        if cols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexOutOfRange(format!("columns {cols:?} are not strictly ascending")));
        }
        let even = cols.iter().filter(|&&c| !self.col_is_odd(c)).count();
        Ok(SMatrix::from_fn(self.row_split, (even, cols.len() - even), |i, j| self.get(i, cols[j]).clone()))
    }

    /// Drops the given columns, keeping the rest in order and on their side.
    pub fn without_columns(&self, cols: &[usize]) -> Result<SMatrix<T>> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.ncols()) {
            return Err(Error::IndexOutOfRange(format!("column {} of {}", bad + 1, self.ncols())));
        }
        let keep: Vec<usize> = (0..self.ncols()).filter(|c| !cols.contains(c)).collect();
        self.select_columns(&keep)
    }

    /// Moves the flagged columns across the divider, applying `nu` to each
    /// of their entries. Even columns land at the left edge of the odd side
    /// and odd columns at the right edge of the even side; relative order is
    /// kept within each group.
    pub fn move_columns(&self, flagged: &[bool], nu: impl Fn(&T) -> Result<T>) -> Result<SMatrix<T>> {
        if flagged.len() != self.ncols() {
            return Err(Error::ShapeMismatch(format!("{} flags for {} columns", flagged.len(), self.ncols())));
        }
        let r = self.col_split.0;
        let stay_even = (0..r).filter(|&j| !flagged[j]);
        let to_even = (r..self.ncols()).filter(|&j| flagged[j]);
        let to_odd = (0..r).filter(|&j| flagged[j]);
        let stay_odd = (r..self.ncols()).filter(|&j| !flagged[j]);
        let order: Vec<usize> = stay_even.chain(to_even).chain(to_odd).chain(stay_odd).collect();
        let even = (0..self.ncols()).filter(|&j| self.col_is_odd(j) == flagged[j]).count();
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.nrows() {
            for &j in &order {
                let v = self.get(i, j);
                data.push(if flagged[j] { nu(v)? } else { v.clone() });
            }
        }
        Ok(SMatrix { row_split: self.row_split, col_split: (even, self.ncols() - even), data })
    }
}

impl<T: Clone + SlotParity> SMatrix<T> {
    /// Checks that every entry fits the parity of its block.
    pub fn check_well_formed(&self) -> Result<()> {
        for (i, j, v) in self.entries() {
            if !v.fits(self.slot_is_odd(i, j)) {
                return Err(Error::IllFormed(format!(
                    "entry ({}, {}) does not fit its {} slot",
                    i + 1,
                    j + 1,
                    if self.slot_is_odd(i, j) { "odd" } else { "even" }
                )));
            }
        }
        Ok(())
    }
}

impl<T: Clone + fmt::Display> SMatrix<T> {
    /// Block layout: padded columns, ` | ` at the column divider and a rule
    /// under the even rows.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> =
            (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j).to_string()).collect()).collect();
        let widths: Vec<usize> = (0..self.ncols())
            .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let (r, s) = self.col_split;
        let side = |row: &[String], range: std::ops::Range<usize>| -> String {
            range.map(|j| format!("{:<w$}", row[j], w = widths[j])).collect::<Vec<_>>().join(" ")
        };
        let mut lines = Vec::new();
        for (i, row) in cells.iter().enumerate() {
            if i == self.row_split.0 && self.row_split.0 > 0 && self.row_split.1 > 0 {
                let left: usize = widths[..r].iter().sum::<usize>() + r.saturating_sub(1);
                let right: usize = widths[r..].iter().sum::<usize>() + s.saturating_sub(1);
                let rule = match (r > 0, s > 0) {
                    (true, true) => format!("{}-+-{}", "-".repeat(left), "-".repeat(right)),
                    (true, false) => "-".repeat(left),
                    _ => "-".repeat(right),
                };
                lines.push(rule);
            }
            let line = match (r > 0, s > 0) {
                (true, true) => format!("{} | {}", side(row, 0..r), side(row, r..r + s)),
                (true, false) => side(row, 0..r),
                (false, true) => format!("| {}", side(row, 0..s)),
                (false, false) => String::new(),
            };
            lines.push(line.trim_end().to_string());
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

impl<T: Clone + fmt::Display> fmt::Display for SMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<T: Clone + fmt::Display> fmt::Debug for SMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{} x {}|{}\n{}", self.row_split.0, self.row_split.1, self.col_split.0, self.col_split.1, self)
    }
}

/// A superalgebra element or the formal odd unit `1v`.
#[derive(Clone)]
pub enum Entry {
    El(SuperElem),
    NuOne,
}

impl Entry {
    pub fn is_zero(&self) -> bool {
        matches!(self, Entry::El(a) if a.is_zero())
    }

    pub fn as_elem(&self) -> Option<&SuperElem> {
        match self {
            Entry::El(a) => Some(a),
            Entry::NuOne => None,
        }
    }
}

impl PartialEq for Entry {
    fn eq(&self, other: &Entry) -> bool {
        match (self, other) {
            (Entry::El(a), Entry::El(b)) => a.equals(b),
            (Entry::NuOne, Entry::NuOne) => true,
            _ => false,
        }
    }
}

impl SlotParity for Entry {
    fn fits(&self, odd_slot: bool) -> bool {
        match self {
            Entry::El(a) => a.has_parity(odd_slot),
            Entry::NuOne => odd_slot,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::El(a) => fmt::Display::fmt(a, f),
            Entry::NuOne => f.write_str("1v"),
        }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Arithmetic context for [`Entry`] matrices: the number of even variables
/// and the involution.
#[derive(Clone, Copy)]
pub struct Alg<'a> {
    pub alpha: usize,
    pub nu: &'a NuStructure,
}

impl<'a> Alg<'a> {
    pub fn new(alpha: usize, nu: &'a NuStructure) -> Alg<'a> {
        Alg { alpha, nu }
    }

    pub fn beta(&self) -> usize {
        self.nu.beta()
    }

    pub fn zero(&self) -> SuperElem {
        SuperElem::zero(self.alpha, self.beta())
    }

    pub fn one(&self) -> SuperElem {
        SuperElem::one(self.alpha, self.beta())
    }

    pub fn nu(&self, a: &SuperElem) -> Result<SuperElem> {
        self.nu.apply(a)
    }

    /// `ν` on entries, with `ν(1v) = 1`.
    pub fn nu_entry(&self, a: &Entry) -> Result<Entry> {
        match a {
            Entry::El(x) => Ok(Entry::El(self.nu(x)?)),
            Entry::NuOne => Ok(Entry::El(self.one())),
        }
    }

    /// Entry product: `z·1v = ν(z)`, `1v·z = ν(z)`, `1v·1v = 1`.
    pub fn entry_mul(&self, a: &Entry, b: &Entry) -> Result<SuperElem> {
        match (a, b) {
            (Entry::El(x), Entry::El(y)) => x.try_mul(y),
            (Entry::El(x), Entry::NuOne) | (Entry::NuOne, Entry::El(x)) => {
                if x.is_zero() {
                    Ok(self.zero())
                } else {
                    self.nu(x)
                }
            }
            (Entry::NuOne, Entry::NuOne) => Ok(self.one()),
        }
    }

    pub fn entry_add(&self, a: &Entry, b: &Entry) -> Result<Entry> {
        match (a, b) {
            (Entry::El(x), Entry::El(y)) => Ok(Entry::El(x.try_add(y)?)),
            (Entry::NuOne, other) | (other, Entry::NuOne) if other.is_zero() => Ok(Entry::NuOne),
            _ => Err(Error::NuOneSum),
        }
    }

    pub fn identity(&self, split: (usize, usize)) -> SMatrix<Entry> {
        SMatrix::from_fn(split, split, |i, j| Entry::El(if i == j { self.one() } else { self.zero() }))
    }

    /// Lifts a matrix of superalgebra elements.
    pub fn lift(&self, m: &SMatrix<SuperElem>) -> SMatrix<Entry> {
        m.map(|a| Entry::El(a.clone()))
    }

    pub fn smat_mul(&self, a: &SMatrix<Entry>, b: &SMatrix<Entry>) -> Result<SMatrix<Entry>> {
        if a.col_split() != b.row_split() {
            return Err(Error::ShapeMismatch(format!(
                "columns {:?} against rows {:?}",
                a.col_split(),
                b.row_split()
            )));
        }
        let mut data = Vec::with_capacity(a.nrows() * b.ncols());
        for i in 0..a.nrows() {
            for j in 0..b.ncols() {
                let mut acc = self.zero();
                for t in 0..a.ncols() {
                    let (x, y) = (a.get(i, t), b.get(t, j));
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&self.entry_mul(x, y)?)?;
                }
                data.push(Entry::El(acc));
            }
        }
        Ok(SMatrix { row_split: a.row_split(), col_split: b.col_split(), data })
    }

    pub fn smat_add(&self, a: &SMatrix<Entry>, b: &SMatrix<Entry>) -> Result<SMatrix<Entry>> {
        if a.row_split() != b.row_split() || a.col_split() != b.col_split() {
            return Err(Error::ShapeMismatch("summands have different block shapes".into()));
        }
        let data = a.data.iter().zip(&b.data).map(|(x, y)| self.entry_add(x, y)).collect::<Result<_>>()?;
        Ok(SMatrix { row_split: a.row_split(), col_split: a.col_split(), data })
    }

    /// `ν` applied to every entry.
    pub fn nu_matrix(&self, a: &SMatrix<Entry>) -> Result<SMatrix<Entry>> {
        a.try_map(|x| self.nu_entry(x))
    }

    /// Gauss-Jordan inverse over the superalgebra.
    ///
    /// A pivot is admissible when its body is nonzero, or when it is `1v`
    /// (the row is then multiplied on the left by `1v`, which applies `ν`).
    /// The first admissible row is taken. The result is checked against
    /// both products with the input.
    pub fn smat_inv(&self, a: &SMatrix<Entry>) -> Result<SMatrix<Entry>> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::ShapeMismatch(format!("{}x{} matrix is not square", n, a.ncols())));
        }
        let mut left: Vec<Vec<Entry>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
        let mut right: Vec<Vec<Entry>> = (0..n)
            .map(|i| (0..n).map(|j| Entry::El(if i == j { self.one() } else { self.zero() })).collect())
            .collect();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| match &left[r][c] {
                    Entry::NuOne => true,
                    Entry::El(x) => !x.body().is_zero(),
                })
                .ok_or(Error::Singular { column: c })?;
            left.swap(c, p);
            right.swap(c, p);
            let scale = match &left[c][c] {
                Entry::NuOne => Entry::NuOne,
                Entry::El(x) => Entry::El(x.invert_unit()?),
            };
            for row in [&mut left[c], &mut right[c]] {
                for v in row.iter_mut() {
                    if !v.is_zero() {
                        *v = Entry::El(self.entry_mul(&scale, v)?);
                    }
                }
            }
            for r in 0..n {
                if r == c || left[r][c].is_zero() {
                    continue;
                }
                let f = left[r][c].clone();
                for j in 0..n {
                    left[r][j] = self.axpy(&left[r][j], &f, &left[c][j])?;
                    right[r][j] = self.axpy(&right[r][j], &f, &right[c][j])?;
                }
            }
        }
        let inv = SMatrix {
            row_split: a.col_split(),
            col_split: a.row_split(),
            data: right.into_iter().flatten().collect(),
        };
        if self.smat_mul(a, &inv)? != self.identity(a.row_split()) {
            return Err(Error::InverseCheck("A * inv(A) is not the identity".into()));
        }
        if self.smat_mul(&inv, a)? != self.identity(a.col_split()) {
            return Err(Error::InverseCheck("inv(A) * A is not the identity".into()));
        }
        Ok(inv)
    }

    /// `v - f·w`.
    fn axpy(&self, v: &Entry, f: &Entry, w: &Entry) -> Result<Entry> {
        if w.is_zero() {
            return Ok(v.clone());
        }
        let fw = self.entry_mul(f, w)?;
        self.entry_add(v, &Entry::El(fw.neg()))
    }

    /// Body matrix of an entry matrix, `1v` read as 1; its determinant
    /// certifies invertibility at a point.
    pub fn body_matrix(&self, a: &SMatrix<Entry>) -> crate::linalg::Mat<crate::arith::RatFunc> {
        crate::linalg::Mat::from_fn(a.nrows(), a.ncols(), |i, j| match a.get(i, j) {
            Entry::El(x) => x.body(),
            Entry::NuOne => crate::arith::RatFunc::one(self.alpha),
        })
    }
}

/// The minor `M_{J|S}(A)`: the columns of `A` named by the target index.
pub fn minor_m<T: Clone>(a: &SMatrix<T>, space: &GrassSpec, target: &ChartIndex) -> Result<SMatrix<T>> {
    check_label_shape(a, space, target)?;
    a.select_columns(&target.columns(space))
}

/// `M'_{J|S}(A)`: the minor with every column where the target's
/// non-standard identity has `1v` moved across the divider and `ν` applied
/// to its entries. Equal to the minor for standard targets.
pub fn m_prime<T: Clone>(
    a: &SMatrix<T>,
    space: &GrassSpec,
    target: &ChartIndex,
    nu: impl Fn(&T) -> Result<T>,
) -> Result<SMatrix<T>> {
    minor_m(a, space, target)?.move_columns(&target.nu_columns(space), nu)
}

/// `D_{J|S}(A)`: `A` with the target's columns removed.
pub fn d_omit<T: Clone>(a: &SMatrix<T>, space: &GrassSpec, target: &ChartIndex) -> Result<SMatrix<T>> {
    check_label_shape(a, space, target)?;
    a.without_columns(&target.columns(space))
}

fn check_label_shape<T: Clone>(a: &SMatrix<T>, space: &GrassSpec, target: &ChartIndex) -> Result<()> {
    if a.col_split() != (space.m, space.n) {
        return Err(Error::ShapeMismatch(format!("expected {}|{} label columns", space.m, space.n)));
    }
    target.validate(space).map_err(|e| Error::IndexOutOfRange(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RatFunc;

    const A: usize = 2;
    const B: usize = 3;

    fn x(i: usize) -> SuperElem {
        SuperElem::even_var(A, B, i)
    }

    fn e(j: usize) -> SuperElem {
        SuperElem::odd_gen(A, B, j)
    }

    fn el(a: SuperElem) -> Entry {
        Entry::El(a)
    }

    #[test]
    fn diagonal_inverse() {
        let nu = NuStructure::identity(B);
        let alg = Alg::new(A, &nu);
        let m = SMatrix::from_rows((1, 1), (1, 1), vec![vec![el(x(0)), el(alg.zero())], vec![el(alg.zero()), el(x(1))]])
            .unwrap();
        let inv = alg.smat_inv(&m).unwrap();
        assert_eq!(inv.get(0, 0), &el(SuperElem::scalar(B, RatFunc::var(A, 0).inv().unwrap())));
        assert_eq!(inv.get(1, 1), &el(SuperElem::scalar(B, RatFunc::var(A, 1).inv().unwrap())));
        assert!(inv.get(0, 1).is_zero());
    }

    #[test]
    fn unitriangular_inverse() {
        let nu = NuStructure::identity(B);
        let alg = Alg::new(A, &nu);
        let m = SMatrix::from_rows((1, 1), (1, 1), vec![vec![el(alg.one()), el(e(0))], vec![el(alg.zero()), el(alg.one())]])
            .unwrap();
        let inv = alg.smat_inv(&m).unwrap();
        assert_eq!(inv.get(0, 1), &el(e(0).neg()));
        inv.check_well_formed().unwrap();
    }

    #[test]
    fn nu_one_rules() {
        let nu = NuStructure::identity(B);
        let alg = Alg::new(A, &nu);
        let one = SMatrix::from_rows((1, 0), (0, 1), vec![vec![Entry::NuOne]]).unwrap();
        let other = SMatrix::from_rows((0, 1), (1, 0), vec![vec![Entry::NuOne]]).unwrap();
        let prod = alg.smat_mul(&one, &other).unwrap();
        assert_eq!(prod.get(0, 0), &el(alg.one()));
        // column times a 1v unit column applies nu
        let col = SMatrix::from_rows((1, 1), (0, 1), vec![vec![el(e(1))], vec![el(x(0))]]).unwrap();
        let unit = SMatrix::from_rows((0, 1), (1, 0), vec![vec![Entry::NuOne]]).unwrap();
        let out = alg.smat_mul(&col, &unit).unwrap();
        assert_eq!(out.get(0, 0), &el(nu.apply(&e(1)).unwrap()));
        assert_eq!(out.get(1, 0), &el(nu.apply(&x(0)).unwrap()));
        out.check_well_formed().unwrap();
        assert!(matches!(alg.entry_add(&Entry::NuOne, &el(x(0))), Err(Error::NuOneSum)));
    }

    #[test]
    fn nu_one_pivot() {
        let nu = NuStructure::identity(B);
        let alg = Alg::new(A, &nu);
        let m = SMatrix::from_rows((1, 0), (0, 1), vec![vec![Entry::NuOne]]).unwrap();
        let inv = alg.smat_inv(&m).unwrap();
        assert_eq!(inv.get(0, 0), &el(nu.apply(&alg.one()).unwrap()));
        inv.check_well_formed().unwrap();
    }

    #[test]
    fn singular_detected() {
        let nu = NuStructure::identity(B);
        let alg = Alg::new(A, &nu);
        let m = SMatrix::from_rows((1, 1), (1, 1), vec![vec![el(x(0)), el(e(0))], vec![el(e(1)), el(e(0).mul(&e(1)))]])
            .unwrap();
        assert!(matches!(alg.smat_inv(&m), Err(Error::Singular { column: 1 })));
    }

    #[test]
    fn move_columns_layout() {
        let m = SMatrix::from_rows((1, 0), (2, 2), vec![vec!["a", "b", "c", "d"]]).unwrap();
        let moved = m.move_columns(&[false, true, true, false], |s| Ok(*s)).unwrap();
        assert_eq!(moved.col_split(), (2, 2));
        assert_eq!((0..4).map(|j| *moved.get(0, j)).collect::<String>(), "acbd");
        assert_eq!(moved.render(), "a c | b d\n");
    }
}
