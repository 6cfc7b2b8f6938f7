//! Dense exact matrices over ℚ: rank, determinant and inverse by fraction
//! Gaussian elimination.

use num_traits::{One, Zero};

use crate::algebra::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Row echelon form in place; returns the pivot columns and the number
    /// of row swaps.
    fn eliminate(&mut self, companion: &mut Option<&mut Matrix>) -> (Vec<usize>, usize) {
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                if let Some(m) = companion.as_deref_mut() {
                    m.swap_rows(p, r);
                }
                swaps += 1;
            }
            let pivot = self[(r, col)].clone();
            for i in 0..self.rows {
                if i == r || self[(i, col)].is_zero() {
                    continue;
                }
                let factor = &self[(i, col)] / &pivot;
                for j in col..self.cols {
                    let v = &factor * &self[(r, j)];
                    self[(i, j)] -= v;
                }
                if let Some(m) = companion.as_deref_mut() {
                    for j in 0..m.cols {
                        let v = &factor * &m[(r, j)];
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(&mut None).0.len()
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let (pivots, swaps) = m.eliminate(&mut None);
        if pivots.len() < self.rows {
            return Rational::zero();
        }
        let mut det: Rational = (0..self.rows).map(|i| m[(i, i)].clone()).product();
        if swaps % 2 == 1 {
            det = -det;
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let mut m = self.clone();
        let mut inv = Matrix::identity(self.rows);
        let (pivots, _) = m.eliminate(&mut Some(&mut inv));
        if pivots.len() < self.rows {
            return None;
        }
        for i in 0..self.rows {
            let d = m[(i, i)].clone();
            for j in 0..inv.cols {
                inv[(i, j)] /= &d;
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rank_and_determinant() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.determinant(), rat(0));
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant(), rat(-1));
        let c = m(&[&[1, 2, 0], &[0, 1, 0], &[2, 5, 1]]);
        assert_eq!(c.determinant(), rat(1));
    }

    #[test]
    fn inverse_round_trip() {
        let c = m(&[&[1, 2, 0], &[0, 1, 0], &[2, 5, 1]]);
        let inv = c.inverse().unwrap();
        assert!(inv.is_integral());
        for i in 0..3 {
            for j in 0..3 {
                let s: Rational = (0..3).map(|k| &c[(i, k)] * &inv[(k, j)]).sum();
                assert_eq!(s, if i == j { rat(1) } else { rat(0) });
            }
        }
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
