//! A coalgebra projection onto the coradical with coideal kernel.
//!
//! Matrix units of A_0 = A/J are lifted to a subalgebra S ⊆ A = C* with
//! A = S ⊕ J. The algebra projection P onto S along J is an algebra map, so
//! its transpose π is a coalgebra map C → D_0 with kernel S^⊥.

use crate::linalg::{Field, Matrix, SubspaceBasis};

use super::algebra::AlgebraSC;
use super::coradical::SimpleDecomposition;
use super::{CoalgebraError, CoalgebraSC};

/// Newton iteration e ← 3e² − 2e³ to an exact idempotent.
fn lift_idempotent<F: Field>(a: &AlgebraSC<F>, x: &[F]) -> Vec<F> {
    let three = F::from_i64(3);
    let two = F::from_i64(2);
    let mut e = x.to_vec();
    for _ in 0..=2 * a.dim() + 2 {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = a.mul(&e2, &e);
        e = a.sub(&a.scale(&e2, &three), &a.scale(&e3, &two));
    }
    e
}

/// Functional on C whose restriction to D_0 has the given A_0 coordinates.
fn lift<F: Field>(n: usize, d0: &SubspaceBasis<F>, y: &[F]) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (c, &p) in y.iter().zip(d0.pivots()) {
        v[p] = c.clone();
    }
    v
}

/// The projection π as an n×n matrix acting on column vectors of C.
pub fn coideal_projection<F: Field>(
    c: &CoalgebraSC<F>,
    dec: &SimpleDecomposition<F>,
) -> Result<Matrix<F>, CoalgebraError> {
    let n = c.dim();
    let d0 = &dec.coradical;
    if d0.dim() == n {
        return Ok(Matrix::identity(n));
    }
    let a = c.dual_algebra();
    let j = d0.annihilator();
    let one = a.unit().to_vec();

    // Orthogonal idempotents lifting every diagonal unit, in order.
    let diag: Vec<(usize, usize)> =
        dec.units.iter().enumerate().flat_map(|(b, u)| (0..u.len()).map(move |i| (b, i))).collect();
    let mut lifted_diag: Vec<Vec<Vec<F>>> = dec.units.iter().map(|u| vec![Vec::new(); u.len()]).collect();
    let mut s = vec![F::zero(); n];
    for (k, &(b, i)) in diag.iter().enumerate() {
        let e = if k + 1 == diag.len() {
            a.sub(&one, &s)
        } else {
            let rest = a.sub(&one, &s);
            let x = a.mul(&a.mul(&rest, &lift(n, d0, &dec.units[b][i][i])), &rest);
            lift_idempotent(&a, &x)
        };
        s = a.add(&s, &e);
        lifted_diag[b][i] = e;
    }

    let mut s_vectors: Vec<Vec<F>> = Vec::new();
    for (b, units) in dec.units.iter().enumerate() {
        let d = units.len();
        let f = &lifted_diag[b];
        let mut row0 = vec![f[0].clone()];
        let mut col0 = vec![f[0].clone()];
        for i in 1..d {
            let u = a.mul(&a.mul(&f[0], &lift(n, d0, &units[0][i])), &f[i]);
            let v = a.mul(&a.mul(&f[i], &lift(n, d0, &units[i][0])), &f[0]);
            let uv = a.mul(&u, &v);
            let w = a
                .corner_inverse(&uv, &f[0])
                .ok_or_else(|| CoalgebraError::InternalMismatch("lifted unit is not invertible in its corner".into()))?;
            row0.push(u);
            col0.push(a.mul(&v, &w));
        }
        for i in 0..d {
            for jj in 0..d {
                let e = if i == 0 {
                    row0[jj].clone()
                } else if jj == 0 {
                    col0[i].clone()
                } else {
                    a.mul(&col0[i], &row0[jj])
                };
                s_vectors.push(e);
            }
        }
    }

    // T = [S | J] as columns; P = T·diag(1..1, 0..0)·T⁻¹, π = Pᵀ.
    let k = s_vectors.len();
    let mut cols = s_vectors;
    cols.extend(j.vectors().iter().cloned());
    let t = Matrix::from_cols(&cols, n);
    let tinv = t
        .inverse()
        .ok_or_else(|| CoalgebraError::InternalMismatch("lifted semisimple part is not a complement of the radical".into()))?;
    let mut d = vec![F::zero(); n];
    for x in d.iter_mut().take(k) {
        *x = F::one();
    }
    let p = t.mul(&Matrix::diagonal(&d))?.mul(&tinv)?;
    let pi = p.transpose();
    verify_projection(c, d0, &pi)?;
    Ok(pi)
}

/// π² = π, image D_0, ε∘π = ε, π a coalgebra map (hence a coideal kernel).
pub fn verify_projection<F: Field>(c: &CoalgebraSC<F>, d0: &SubspaceBasis<F>, pi: &Matrix<F>) -> Result<(), CoalgebraError> {
    let n = c.dim();
    let bad = |s: &str| Err(CoalgebraError::InternalMismatch(format!("projection check failed: {s}")));
    if pi.mul(pi)? != *pi {
        return bad("not idempotent");
    }
    if pi.image() != *d0 {
        return bad("image is not the coradical");
    }
    if pi.vec_mul(c.eps()) != c.eps() {
        return bad("does not preserve the counit");
    }
    let pt = pi.transpose();
    for i in 0..n {
        let col = pi.col(i);
        // Δπ(b_i) against (π⊗π)Δ(b_i) = π·Δ(b_i)·πᵀ.
        let lhs = c.delta_of(&col);
        let rhs = pi.mul(&c.delta_of(&c.basis_vector(i)))?.mul(&pt)?;
        if lhs != rhs {
            return bad("not a coalgebra map");
        }
    }
    let kernel = pi.kernel();
    for x in kernel.vectors() {
        let m = c.delta_of(x);
        // Δx ∈ I⊗C + C⊗I ⇔ (π⊗π)Δx = 0.
        if !pi.mul(&m)?.mul(&pt)?.data().iter().all(|v| v.is_zero()) {
            return bad("kernel is not a coideal");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::coradical::simple_decomposition;
    use crate::linalg::CycNumber;
    use num_traits::{One, Zero};

    type C = CoalgebraSC<CycNumber>;

    /// Sweedler's coalgebra: basis 1, g, x, gx with Δx = x⊗1 + g⊗x.
    fn sweedler() -> C {
        let o = CycNumber::one;
        let quads = vec![
            (0, 0, 0, o()),
            (1, 1, 1, o()),
            (2, 2, 0, o()),
            (2, 1, 2, o()),
            (3, 3, 1, o()),
            (3, 0, 3, o()),
        ];
        let z = CycNumber::zero;
        C::new(4, quads, vec![o(), o(), z(), z()], vec![], 1).unwrap()
    }

    #[test]
    fn cosemisimple_gives_identity() {
        let c = C::grouplike_coalgebra(3, 3);
        let d = simple_decomposition(&c).unwrap();
        assert!(coideal_projection(&c, &d).unwrap().is_identity());
    }

    #[test]
    fn sweedler_projection_kills_skew_primitives() {
        let c = sweedler();
        let d = simple_decomposition(&c).unwrap();
        assert_eq!(d.coradical.dim(), 2);
        let pi = coideal_projection(&c, &d).unwrap();
        assert_eq!(pi.rank(), 2);
        assert!(verify_projection(&c, &d.coradical, &pi).is_ok());
    }
}
