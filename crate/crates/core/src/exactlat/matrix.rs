use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::{rat_from_int, solve_rat, Int, Rat};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Int>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_a <- x*row_a + y*row_b ; row_b <- z*row_a + w*row_b (simultaneously).
    pub(crate) fn combine_rows(&mut self, a: usize, b: usize, x: &Int, y: &Int, z: &Int, w: &Int) {
        for j in 0..self.cols {
            let ra = self[(a, j)].clone();
            let rb = self[(b, j)].clone();
            self[(a, j)] = x * &ra + y * &rb;
            self[(b, j)] = z * &ra + w * &rb;
        }
    }

    /// col_a <- x*col_a + y*col_b ; col_b <- z*col_a + w*col_b (simultaneously).
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, x: &Int, y: &Int, z: &Int, w: &Int) {
        for i in 0..self.rows {
            let ca = self[(i, a)].clone();
            let cb = self[(i, b)].clone();
            self[(i, a)] = x * &ca + y * &cb;
            self[(i, b)] = z * &ca + w * &cb;
        }
    }

    /// row_a <- row_a - q*row_b
    pub(crate) fn sub_row_multiple(&mut self, a: usize, b: usize, q: &Int) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] -= t;
        }
    }

    pub(crate) fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            self[(a, j)] = -self[(a, j)].clone();
        }
    }

    fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).iter().map(rat_from_int).collect()).collect()
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let d = super::det_rat(&self.to_rat_rows());
        debug_assert!(d.is_integer());
        d.to_integer()
    }

    pub fn rank(&self) -> usize {
        super::rank_rat(&self.to_rat_rows())
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && {
            let d = self.det();
            d == Int::one() || d == -Int::one()
        }
    }

    /// Inverse of a unimodular matrix; `None` if the matrix is not unimodular.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if !self.is_unimodular() {
            return None;
        }
        let n = self.rows;
        let a = self.to_rat_rows();
        let mut inv = Self::zeros(n, n);
        for j in 0..n {
            let e: Vec<Rat> = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
            let x = solve_rat(&a, &e)?;
            for i in 0..n {
                debug_assert!(x[i].is_integer());
                inv[(i, j)] = x[i].to_integer();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>())).finish()
    }
}
