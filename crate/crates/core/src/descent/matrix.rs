//! Dense matrices over an exact field, with Gaussian elimination.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::field::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    zero: F,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, template: &F) -> Self {
        let zero = template.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, template: &F) -> Self {
        let mut m = Self::zeros(n, n, template);
        for i in 0..n {
            m.set(i, i, template.one_like());
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n, &c);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, template: &F) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
            zero: template.zero_like(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], rows: usize, template: &F) -> Self {
        let mut m = Self::zeros(rows, columns.len(), template);
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn zero_elem(&self) -> &F {
        &self.zero
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Scalar>(&self, template: &G, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: template.zero_like(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = c.clone() * x.clone();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero_elem)
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn scalar_value(&self) -> Option<F> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            self.zero.clone()
        } else {
            self.get(0, 0).clone()
        };
        let ok = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    self.get(i, j) == &c
                } else {
                    self.get(i, j).is_zero_elem()
                }
            })
        });
        ok.then_some(c)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(self.zero.clone(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let x = inv.clone() * m.get(r, j).clone();
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero.clone(); self.cols];
                v[f] = self.zero.one_like();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.zero.one_like());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `self * X = rhs`, returning one solution if the system is consistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let (n, k) = (self.cols, rhs.cols);
        let mut aug = Self::zeros(self.rows, n + k, &self.zero);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..k {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Self::zeros(n, k, &self.zero);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, r.get(row, n + j).clone());
            }
        }
        Some(x)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.rows, &self.zero), |acc, _| &acc * self)
    }
}

impl<'a, F: Scalar> Mul for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "matrix shapes do not compose");
        let mut m = Matrix::zeros(self.rows, o.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..o.cols {
                    let x = m.get(i, j).clone() + a.clone() * o.get(k, j).clone();
                    m.set(i, j, x);
                }
            }
        }
        m
    }
}

impl<'a, F: Scalar> Add for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, o: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&o.data) {
            *x = x.clone() + y.clone();
        }
        m
    }
}

impl<'a, F: Scalar> Sub for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, o: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&o.data) {
            *x = x.clone() - y.clone();
        }
        m
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Linear combination `sum c_k m_k`.
pub fn combine<F: Scalar>(coeffs: &[F], mats: &[Matrix<F>]) -> Matrix<F> {
    let first = &mats[0];
    let mut acc = Matrix::zeros(first.rows(), first.cols(), first.zero_elem());
    for (c, m) in coeffs.iter().zip(mats) {
        if !c.is_zero_elem() {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

/// Columns are the flattened matrices; used to solve for coefficients.
pub fn flatten_columns<F: Scalar>(mats: &[Matrix<F>]) -> Matrix<F> {
    let first = &mats[0];
    let cols: Vec<Vec<F>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    Matrix::from_columns(&cols, first.rows() * first.cols(), first.zero_elem())
}
