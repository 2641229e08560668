use std::ops::{Index, IndexMut};

use super::field::Field;
use super::rational::Rational;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatrixQ = Matrix<Rational>;

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from its rows; `cols` is needed to describe the
    /// shape of a matrix with zero rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| F::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_rational(m: &MatrixQ) -> Self {
        m.map(F::from_rational)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.plus(&a.times(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn plus(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        self.map(|a| a.times(c))
    }

    pub fn negated(&self) -> Matrix<F> {
        self.map(Field::negated)
    }

    pub fn pow(&self, k: usize) -> Matrix<F> {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn commutator(&self, other: &Matrix<F>) -> Matrix<F> {
        self.mul(other).minus(&other.mul(self))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// `exp(N)` for nilpotent `N`, as an exact finite sum.
    pub fn exp_nilpotent(&self) -> Matrix<F> {
        let n = self.rows;
        let mut out = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n + 1 {
            term = term.mul(self).scale(&F::from_rational(&Rational::new(1.into(), (k as i64).into())));
            if term.is_zero() {
                break;
            }
            out = out.plus(&term);
        }
        out
    }

    /// `log(T)` for unipotent `T`, as an exact finite sum.
    pub fn log_unipotent(&self) -> Matrix<F> {
        let n = self.rows;
        let x = self.minus(&Matrix::identity(n));
        let mut out = Matrix::zeros(n, n);
        let mut power = Matrix::identity(n);
        for k in 1..=n + 1 {
            power = power.mul(&x);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.plus(&power.scale(&F::from_rational(&Rational::new(sign.into(), (k as i64).into()))));
        }
        out
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row-echelon form, restricting pivot search to the first
    /// `pivot_cols` columns. Pivots are taken in column order, first nonzero
    /// row first.
    pub fn rref_limited(&self, pivot_cols: usize) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(m.cols) {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse();
            if !inv.is_one() {
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(r, j)] = m[(r, j)].times(&inv);
                    }
                }
            }
            let pivot_row: Vec<(usize, F)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    m[(i, *j)] = m[(i, *j)].minus(&factor.times(v));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        self.rref_limited(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis read off the reduced echelon form, one vector per free
    /// column, in increasing column order.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = r[(i, f)].negated();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref_limited(n);
        if pivots.len() < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Gauss–Jordan solve with free variables set to zero.
    pub fn solve_gauss(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let aug = self.hstack(&Matrix::from_rows(1, b.iter().map(|x| vec![x.clone()]).collect()));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }
}

impl Matrix<Rational> {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix::from_fn(rows, cols, |i, j| Rational::from_integer(entries[i * cols + j].into()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|q| q.is_integer())
    }
}

/// Precomputed left-inverse data for a fixed rational matrix `T`.
///
/// Solves `Tv = x` for vectors over any field containing ℚ, returning the
/// canonical solution (free variables zero), and tests membership in `im T`.
#[derive(Clone, Debug)]
pub struct ImageSolver {
    rows: usize,
    cols: usize,
    pivots: Vec<usize>,
    /// `transform · T` is the reduced echelon form of `T`.
    transform: MatrixQ,
}

impl ImageSolver {
    pub fn new(t: &MatrixQ) -> Self {
        let aug = t.hstack(&MatrixQ::identity(t.rows()));
        let (r, pivots) = aug.rref_limited(t.cols());
        let idx: Vec<usize> = (0..t.rows()).collect();
        let right: Vec<usize> = (t.cols()..t.cols() + t.rows()).collect();
        ImageSolver {
            rows: t.rows(),
            cols: t.cols(),
            transform: r.submatrix(&idx, &right),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn apply<F: Field>(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let nz: Vec<usize> = (0..x.len()).filter(|&j| !x[j].is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for &j in &nz {
                    let e = &self.transform[(i, j)];
                    if !Field::is_zero(e) {
                        acc = acc.plus(&x[j].scale_by(e));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn contains<F: Field>(&self, x: &[F]) -> bool {
        self.solve(x).is_some()
    }

    pub fn solve<F: Field>(&self, x: &[F]) -> Option<Vec<F>> {
        let y = self.apply(x);
        if y[self.rank()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut v = vec![F::zero(); self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            v[p] = y[i].clone();
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rational_frac, rational_int};

    #[test]
    fn rref_and_kernel_of_jordan_block() {
        let a = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        let k = a.kernel();
        assert_eq!(k, vec![vec![rational_int(0), rational_int(1)]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn solve_gauss_examples() {
        let a = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        let x = a.solve_gauss(&[rational_int(0), rational_int(1)]).unwrap();
        assert_eq!(x, vec![rational_int(1), rational_int(0)]);
        assert!(a.solve_gauss(&[rational_int(1), rational_int(0)]).is_none());
        let id = MatrixQ::identity(3);
        let b = vec![rational_frac(1, 2), rational_int(-3), rational_int(7)];
        assert_eq!(id.solve_gauss(&b).unwrap(), b);
    }

    #[test]
    fn inverses() {
        let a = MatrixQ::from_i64(2, 2, &[2, 1, 1, 1]);
        assert_eq!(a.inverse().unwrap(), MatrixQ::from_i64(2, 2, &[1, -1, -1, 2]));
        assert!(MatrixQ::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert!(MatrixQ::zeros(2, 3).inverse().is_none());
    }

    #[test]
    fn exp_and_log_are_inverse_on_nilpotents() {
        let n = MatrixQ::from_i64(3, 3, &[0, 0, 0, 2, 0, 0, 1, 3, 0]);
        let t = n.exp_nilpotent();
        assert_eq!(t.log_unipotent(), n);
        assert_eq!(t[(2, 0)], rational_int(1) + rational_int(3));
    }

    #[test]
    fn image_solver_matches_gauss() {
        let t = MatrixQ::from_i64(3, 3, &[1, 2, 0, 2, 4, 0, 0, 0, 0]);
        let s = ImageSolver::new(&t);
        assert_eq!(s.rank(), 1);
        let x = vec![rational_int(3), rational_int(6), rational_int(0)];
        let v = s.solve(&x).unwrap();
        assert_eq!(t.mul_vec(&v), x);
        assert!(!s.contains(&[rational_int(1), rational_int(0), rational_int(0)]));
    }
}
