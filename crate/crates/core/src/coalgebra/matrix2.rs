//! Images of the 2×2 comatrix coalgebra under coalgebra maps.

use crate::linalg::{Field, Matrix, SubspaceBasis};

use super::coradical::grouplikes;
use super::{CoalgebraError, CoalgebraSC};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matrix2Image<F: Field> {
    /// Injective: the images of e_ij form a multiplicative matrix.
    Comatrix { e: Vec<Vec<Vec<F>>> },
    /// Basis {g, h, u} with Δu = g⊗u + u⊗h.
    SkewPrimitive { g: Vec<F>, h: Vec<F>, u: Vec<F> },
    /// Basis of grouplikes.
    Grouplikes { elements: Vec<Vec<F>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2Classification<F: Field> {
    pub image_dim: usize,
    pub image: SubspaceBasis<F>,
    pub kind: Matrix2Image<F>,
}

/// Checks that `f` (dim C × 4, columns the images of e11, e12, e21, e22)
/// is a coalgebra map M*(2) → C.
pub fn check_matrix2_map<F: Field>(c: &CoalgebraSC<F>, f: &Matrix<F>) -> Result<(), CoalgebraError> {
    if f.rows() != c.dim() || f.cols() != 4 {
        return Err(CoalgebraError::ShapeMismatch(format!("map is {}×{}, expected {}×4", f.rows(), f.cols(), c.dim())));
    }
    let m2 = CoalgebraSC::<F>::comatrix(2, c.field_order());
    let ft = f.transpose();
    for b in 0..4 {
        let img = f.col(b);
        let lhs = c.delta_of(&img);
        let rhs = f.mul(&m2.delta_of(&m2.basis_vector(b)))?.mul(&ft)?;
        if lhs != rhs {
            return Err(CoalgebraError::NotCoalgebraMap(format!("Δ is not preserved on {}", m2.labels()[b])));
        }
        if c.eps_of(&img) != m2.eps()[b] {
            return Err(CoalgebraError::NotCoalgebraMap(format!("ε is not preserved on {}", m2.labels()[b])));
        }
    }
    Ok(())
}

pub fn classify_matrix2_image<F: Field>(
    c: &CoalgebraSC<F>,
    f: &Matrix<F>,
) -> Result<Matrix2Classification<F>, CoalgebraError> {
    check_matrix2_map(c, f)?;
    let image = f.image();
    let image_dim = image.dim();
    let sub = c.restrict(&image)?;
    let to_c = |v: &[F]| image.combine(v);
    let kind = match image_dim {
        4 => Matrix2Image::Comatrix { e: (0..2).map(|i| (0..2).map(|j| f.col(i * 2 + j)).collect()).collect() },
        3 => {
            let gs = grouplikes(&sub);
            if gs.len() != 2 {
                return Err(CoalgebraError::InternalMismatch(format!("3-dim image has {} grouplikes", gs.len())));
            }
            let (a, b) = (&gs[0], &gs[1]);
            let (g, h, p) = {
                let p_ab = sub.skew_primitives(a, b)?;
                if p_ab.dim() == 2 {
                    (a, b, p_ab)
                } else {
                    (b, a, sub.skew_primitives(b, a)?)
                }
            };
            if p.dim() != 2 {
                return Err(CoalgebraError::InternalMismatch("3-dim image has no nontrivial skew-primitive".into()));
            }
            let trivial = SubspaceBasis::from_spanning(3, [sub_vec(g, h)]);
            let u = p.vectors().iter().find(|v| !trivial.contains(v)).expect("dim 2 exceeds trivial line").clone();
            Matrix2Image::SkewPrimitive { g: to_c(g), h: to_c(h), u: to_c(&u) }
        }
        _ => {
            let gs = grouplikes(&sub);
            if gs.len() != image_dim {
                return Err(CoalgebraError::InternalMismatch(format!(
                    "{image_dim}-dim image has {} grouplikes",
                    gs.len()
                )));
            }
            Matrix2Image::Grouplikes { elements: gs.iter().map(|g| to_c(g)).collect() }
        }
    };
    Ok(Matrix2Classification { image_dim, image, kind })
}

fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.sub_ref(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CycNumber;
    use num_traits::{One, Zero};

    type C = CoalgebraSC<CycNumber>;

    #[test]
    fn identity_is_comatrix() {
        let c = C::comatrix(2, 1);
        let r = classify_matrix2_image(&c, &Matrix::identity(4)).unwrap();
        assert_eq!(r.image_dim, 4);
        assert!(matches!(r.kind, Matrix2Image::Comatrix { .. }));
    }

    #[test]
    fn diagonal_collapse_is_grouplike() {
        let c = C::grouplike_coalgebra(1, 1);
        let f = Matrix::from_rows(vec![vec![CycNumber::one(), CycNumber::zero(), CycNumber::zero(), CycNumber::one()]]).unwrap();
        let r = classify_matrix2_image(&c, &f).unwrap();
        assert_eq!(r.image_dim, 1);
        assert_eq!(r.kind, Matrix2Image::Grouplikes { elements: vec![vec![CycNumber::one()]] });
    }

    #[test]
    fn non_map_rejected() {
        let c = C::grouplike_coalgebra(4, 1);
        let err = classify_matrix2_image(&c, &Matrix::identity(4)).unwrap_err();
        assert!(matches!(err, CoalgebraError::NotCoalgebraMap(_)));
    }

    #[test]
    fn upper_triangular_quotient_is_skew_primitive() {
        // Basis g, h, u with Δu = g⊗u + u⊗h; e11 ↦ g, e12 ↦ u, e21 ↦ 0, e22 ↦ h.
        let o = CycNumber::one;
        let z = CycNumber::zero;
        let quads = vec![(0, 0, 0, o()), (1, 1, 1, o()), (2, 0, 2, o()), (2, 2, 1, o())];
        let c = C::new(3, quads, vec![o(), o(), z()], vec![], 1).unwrap();
        let f = Matrix::from_rows(vec![vec![o(), z(), z(), z()], vec![z(), z(), z(), o()], vec![z(), o(), z(), z()]]).unwrap();
        let r = classify_matrix2_image(&c, &f).unwrap();
        assert_eq!(r.image_dim, 3);
        match r.kind {
            Matrix2Image::SkewPrimitive { g, h, u } => {
                assert_eq!(g, c.basis_vector(0));
                assert_eq!(h, c.basis_vector(1));
                let p = c.skew_primitives(&g, &h).unwrap();
                assert!(p.contains(&u));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
