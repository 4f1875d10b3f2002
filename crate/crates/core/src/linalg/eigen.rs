//! Eigendecomposition of matrices some power of which is scalar.

use super::field::Field;
use super::matrix::Matrix;
use super::subspace::SubspaceBasis;
use super::LinalgError;

/// Default cap on the searched order: 4·n².
pub fn default_order_cap(n: usize) -> u64 {
    (4 * n * n).max(4) as u64
}

/// Least n ≤ cap with Mⁿ = c·Id, together with c.
pub fn scalar_power<F: Field>(m: &Matrix<F>, cap: u64) -> Option<(u64, F)> {
    if !m.is_square() {
        return None;
    }
    let mut p = m.clone();
    for n in 1..=cap {
        if let Some(c) = p.scalar_value() {
            return Some((n, c));
        }
        p = p.mul(m).ok()?;
    }
    None
}

/// Eigenvalues (sorted by the field's total order) with eigenspaces of a
/// matrix satisfying Mⁿ = c·Id for some n ≤ cap.
pub fn finite_order_eigendecomposition<F: Field>(
    m: &Matrix<F>,
    cap: u64,
) -> Result<Vec<(F, SubspaceBasis<F>)>, LinalgError> {
    finite_order_eigendecomposition_in(m, cap, 1)
}

/// As [`finite_order_eigendecomposition`], searching eigenvalues in
/// Q(ζ_field_order) as well as the field of the entries.
pub fn finite_order_eigendecomposition_in<F: Field>(
    m: &Matrix<F>,
    cap: u64,
    field_order: u32,
) -> Result<Vec<(F, SubspaceBasis<F>)>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let size = m.rows();
    let (n, c) = scalar_power(m, cap).ok_or(LinalgError::NotFiniteOrder { cap })?;
    let mut poly = vec![F::zero(); n as usize + 1];
    poly[0] = c.neg_ref();
    poly[n as usize] = F::one();
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in F::roots(&poly, field_order) {
        let shifted = m.sub(&Matrix::scalar(size, &lambda))?;
        let space = shifted.kernel();
        if !space.is_zero() {
            total += space.dim();
            out.push((lambda, space));
        }
    }
    if total != size {
        return Err(LinalgError::EigenvaluesNotInField);
    }
    Ok(out)
}

/// Change of basis whose columns are the eigenvectors, in eigenvalue order.
pub fn eigenbasis<F: Field>(decomp: &[(F, SubspaceBasis<F>)]) -> (Matrix<F>, Vec<F>) {
    let n = decomp.first().map_or(0, |(_, s)| s.ambient_dim());
    let mut cols = Vec::new();
    let mut vals = Vec::new();
    for (l, s) in decomp {
        for v in s.vectors() {
            cols.push(v.clone());
            vals.push(l.clone());
        }
    }
    (Matrix::from_cols(&cols, n), vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cyclotomic::CycNumber;
    use num_traits::{One, Zero};

    fn c(x: i64) -> CycNumber {
        CycNumber::from_int(x)
    }

    #[test]
    fn identity_has_single_eigenspace() {
        let d = finite_order_eigendecomposition(&Matrix::<CycNumber>::identity(3), 10).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].0.is_one());
        assert_eq!(d[0].1.dim(), 3);
    }

    #[test]
    fn diagonal_roots_of_unity() {
        let z = CycNumber::root_of_unity(3, 1);
        let m = Matrix::diagonal(&[z.clone(), z.mul_ref(&z)]);
        let d = finite_order_eigendecomposition(&m, 36).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|(_, s)| s.dim() == 1));
    }

    #[test]
    fn swap_matrix() {
        let m = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        let d = finite_order_eigendecomposition(&m, 16).unwrap();
        let vals: Vec<CycNumber> = d.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(vals, vec![c(-1), c(1)]);
        assert_eq!(d[0].1, SubspaceBasis::from_spanning(2, vec![vec![c(1), c(-1)]]));
        assert_eq!(d[1].1, SubspaceBasis::from_spanning(2, vec![vec![c(1), c(1)]]));
        let (p, vals) = eigenbasis(&d);
        let back = p.inverse().unwrap().mul(&m).unwrap().mul(&p).unwrap();
        assert_eq!(back, Matrix::diagonal(&vals));
    }

    #[test]
    fn unipotent_is_not_finite_order() {
        let m = Matrix::from_rows(vec![vec![c(1), c(1)], vec![c(0), c(1)]]).unwrap();
        assert_eq!(finite_order_eigendecomposition(&m, 20), Err(LinalgError::NotFiniteOrder { cap: 20 }));
        let _ = CycNumber::zero();
    }

    #[test]
    fn eigenvalues_outside_field() {
        // Rotation by 90 degrees over Q(ζ_3): M² = -Id but ±i are not in Q(ζ_3).
        let z3 = |x: i64| CycNumber::from_int(x).embed(3);
        let m = Matrix::from_rows(vec![vec![z3(0), z3(-1)], vec![z3(1), z3(0)]]).unwrap();
        assert_eq!(finite_order_eigendecomposition(&m, 20), Err(LinalgError::EigenvaluesNotInField));
    }
}
