//! Dense row-major matrices over a [`Field`].

use std::fmt;

use super::field::Field;
use super::subspace::{EchelonBuilder, SubspaceBasis};
use super::LinalgError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(d: &[F]) -> Self {
        let n = d.len();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Builds from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if let Some(bad) = rows.iter().find(|x| x.len() != c) {
            return Err(LinalgError::DimensionMismatch { expected: c, found: bad.len() });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from column vectors.
    pub fn from_cols(cols: &[Vec<F>], nrows: usize) -> Self {
        let mut m = Matrix::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
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

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    out.data[i * rhs.cols + j].add_mul_assign(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![F::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                o.add_mul_assign(c, a);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&F, &F) -> F) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the matrix equals `c·Id`.
    pub fn scalar_value(&self) -> Option<F> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { F::one() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Row space in canonical form.
    pub fn row_space(&self) -> SubspaceBasis<F> {
        SubspaceBasis::from_spanning(self.cols, self.row_vectors())
    }

    /// Column space in canonical form.
    pub fn image(&self) -> SubspaceBasis<F> {
        self.transpose().row_space()
    }

    pub fn rank(&self) -> usize {
        let mut b = EchelonBuilder::new(self.cols);
        for i in 0..self.rows {
            if b.is_full() {
                break;
            }
            b.insert(self.row(i).to_vec());
        }
        b.rank()
    }

    /// Null space {x : Mx = 0} in canonical form.
    pub fn kernel(&self) -> SubspaceBasis<F> {
        self.row_space().annihilator()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut b = EchelonBuilder::new(2 * n);
        for i in 0..n {
            let mut v = self.row(i).to_vec();
            v.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            b.insert(v);
        }
        let s = b.finish();
        if s.pivots().iter().take(n).enumerate().any(|(i, &p)| p != i) || s.dim() < n {
            return None;
        }
        let rows: Vec<Vec<F>> = s.vectors().iter().take(n).map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(rows).ok()
    }

    /// Some solution of Mx = b, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut eb = EchelonBuilder::new(self.cols + 1);
        for i in 0..self.rows {
            let mut v = self.row(i).to_vec();
            v.push(b[i].clone());
            eb.insert(v);
        }
        let s = eb.finish();
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in s.vectors().iter().zip(s.pivots()) {
            if p == self.cols {
                return None;
            }
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn pow(&self, mut e: u64) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
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

    /// Least n in 1..=cap with Mⁿ = Id.
    pub fn order(&self, cap: u64) -> Option<u64> {
        if !self.is_square() {
            return None;
        }
        let mut p = self.clone();
        for n in 1..=cap {
            if p.is_identity() {
                return Some(n);
            }
            p = p.mul(self).ok()?;
        }
        None
    }

    /// Restriction of an endomorphism to an invariant subspace, in the
    /// subspace's echelon coordinates; `None` if the subspace is not invariant.
    pub fn restrict(&self, s: &SubspaceBasis<F>) -> Option<Self> {
        let cols: Option<Vec<Vec<F>>> = s.vectors().iter().map(|v| s.coordinates(&self.mul_vec(v))).collect();
        Some(Matrix::from_cols(&cols?, s.dim()))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Preimage {x : Mx ∈ W}.
pub fn preimage<F: Field>(m: &Matrix<F>, w: &SubspaceBasis<F>) -> Result<SubspaceBasis<F>, LinalgError> {
    if w.ambient_dim() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: w.ambient_dim() });
    }
    let q = w.annihilator();
    let rows: Vec<Vec<F>> = q.vectors().iter().map(|f| m.vec_mul(f)).collect();
    Ok(SubspaceBasis::from_spanning(m.cols(), rows).annihilator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect())
            .unwrap()
    }

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| Rational::from_integer(a)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Rational>::identity(3).kernel().is_zero());
        assert_eq!(Matrix::<Rational>::zeros(2, 2).kernel(), SubspaceBasis::full(2));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).kernel(), SubspaceBasis::from_spanning(2, vec![v(&[1, -1])]));
    }

    #[test]
    fn preimage_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(preimage(&a, &SubspaceBasis::full(2)).unwrap(), SubspaceBasis::full(2));
        assert!(preimage(&a, &SubspaceBasis::zero(2)).unwrap().is_zero());
        let proj = m(&[&[1, 0]]);
        assert_eq!(preimage(&proj, &SubspaceBasis::zero(1)).unwrap(), SubspaceBasis::from_spanning(2, vec![v(&[0, 1])]));
        assert!(preimage(&proj, &SubspaceBasis::zero(2)).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = a.solve(&v(&[3, 11])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[3, 11]));
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&v(&[0, 1])).is_none());
    }

    #[test]
    fn order_of_permutation() {
        let p = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(p.order(10), Some(3));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).order(50), None);
    }
}
