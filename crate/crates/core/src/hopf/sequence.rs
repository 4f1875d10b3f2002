//! Hopf maps, coinvariants and exact sequences A ↪ H ↠ B.

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, Matrix, SubspaceBasis};

use super::{HopfAlgebraSC, HopfError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Checks that `f` (dim target × dim source) respects μ, 1, Δ, ε and S.
pub fn check_hopf_map<F: Field>(
    source: &HopfAlgebraSC<F>,
    f: &Matrix<F>,
    target: &HopfAlgebraSC<F>,
) -> Result<(), HopfError> {
    let (n, m) = (source.dim(), target.dim());
    if f.rows() != m || f.cols() != n {
        return Err(HopfError::NotHopfMap(format!("matrix is {}×{}, expected {m}×{n}", f.rows(), f.cols())));
    }
    let cols: Vec<Vec<F>> = (0..n).map(|i| f.col(i)).collect();
    if f.mul_vec(source.unit()) != target.unit() {
        return Err(HopfError::NotHopfMap("unit not preserved".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(&source.mul(&source.basis_vector(i), &source.basis_vector(j)));
            if lhs != target.mul(&cols[i], &cols[j]) {
                return Err(HopfError::NotHopfMap(format!("product of basis elements {i}, {j} not preserved")));
            }
        }
    }
    let ft = f.transpose();
    for (i, col) in cols.iter().enumerate() {
        if target.eps_of(col) != source.eps()[i] {
            return Err(HopfError::NotHopfMap(format!("ε not preserved at {i}")));
        }
        let lhs = target.delta_of(col);
        let rhs = f.mul(&source.delta_of(&source.basis_vector(i)))?.mul(&ft)?;
        if lhs != rhs {
            return Err(HopfError::NotHopfMap(format!("Δ not preserved at {i}")));
        }
        if target.apply_antipode(col) != f.mul_vec(&source.antipode().col(i)) {
            return Err(HopfError::NotHopfMap(format!("S not preserved at {i}")));
        }
    }
    Ok(())
}

/// Right coinvariants {x : (id⊗π)Δx = x⊗1} or left {x : (π⊗id)Δx = 1⊗x}.
pub fn coinvariants<F: Field>(
    h: &HopfAlgebraSC<F>,
    pi: &Matrix<F>,
    b: &HopfAlgebraSC<F>,
    side: Side,
) -> Result<SubspaceBasis<F>, HopfError> {
    check_hopf_map(h, pi, b)?;
    let n = h.dim();
    let m = b.dim();
    // Linear map x ↦ (id⊗π)Δx − x⊗1 into F^{n·m} (or the mirrored one).
    let mut rows = vec![vec![F::zero(); n]; n * m];
    for i in 0..n {
        for (j, k, c) in h.coalgebra().delta_sparse(i) {
            let (keep, proj) = match side {
                Side::Right => (*j, *k),
                Side::Left => (*k, *j),
            };
            for r in 0..m {
                let p = pi.get(r, proj);
                if !p.is_zero() {
                    rows[keep * m + r][i].add_mul_assign(c, p);
                }
            }
        }
        for (r, u) in b.unit().iter().enumerate() {
            if !u.is_zero() {
                rows[i * m + r][i] = rows[i * m + r][i].sub_ref(u);
            }
        }
    }
    Ok(SubspaceBasis::from_spanning(n, rows).annihilator())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceReport {
    pub iota_injective: bool,
    pub pi_surjective: bool,
    pub pi_iota_trivial: bool,
    pub kernel_is_augmentation_ideal: bool,
    pub a_is_coinvariants: bool,
    pub dim_h: usize,
    pub dim_coinvariants: usize,
    pub dim_b: usize,
    pub dimension_identity: bool,
    pub witnesses: Vec<String>,
}

impl ExactSequenceReport {
    pub fn is_exact(&self) -> bool {
        self.iota_injective
            && self.pi_surjective
            && self.pi_iota_trivial
            && self.kernel_is_augmentation_ideal
            && self.a_is_coinvariants
    }
}

/// Evaluates conditions (i)–(v) for A →ι H →π B and dim H = dim H^{co π}·dim B.
pub fn check_exact_sequence<F: Field>(
    a: &HopfAlgebraSC<F>,
    iota: &Matrix<F>,
    h: &HopfAlgebraSC<F>,
    pi: &Matrix<F>,
    b: &HopfAlgebraSC<F>,
) -> Result<ExactSequenceReport, HopfError> {
    check_hopf_map(a, iota, h)?;
    check_hopf_map(h, pi, b)?;
    let n = h.dim();
    let mut witnesses = Vec::new();

    let iota_injective = iota.rank() == a.dim();
    if !iota_injective {
        witnesses.push(format!("(i) ι has rank {} < {}", iota.rank(), a.dim()));
    }
    let pi_surjective = pi.rank() == b.dim();
    if !pi_surjective {
        witnesses.push(format!("(ii) π has rank {} < {}", pi.rank(), b.dim()));
    }
    let composite = pi.mul(iota)?;
    let mut trivial = true;
    for i in 0..a.dim() {
        let want: Vec<F> = b.unit().iter().map(|u| u.mul_ref(&a.eps()[i])).collect();
        if composite.col(i) != want {
            witnesses.push(format!("(iii) πι(a_{i}) ≠ ε(a_{i})·1"));
            trivial = false;
            break;
        }
    }
    let aug = SubspaceBasis::from_spanning(a.dim(), [a.eps().to_vec()]).annihilator();
    let a_plus_h = SubspaceBasis::from_spanning(
        n,
        aug.vectors().iter().flat_map(|x| {
            let ix = iota.mul_vec(x);
            (0..n).map(move |j| h.mul(&ix, &h.basis_vector(j))).collect::<Vec<_>>()
        }),
    );
    let ker = pi.kernel();
    let kernel_is_augmentation_ideal = ker == a_plus_h;
    if !kernel_is_augmentation_ideal {
        witnesses.push(format!("(iv) dim ker π = {}, dim A⁺H = {}", ker.dim(), a_plus_h.dim()));
    }
    let co = coinvariants(h, pi, b, Side::Right)?;
    let image = iota.image();
    let a_is_coinvariants = co == image;
    if !a_is_coinvariants {
        witnesses.push(format!("(v) dim H^co π = {}, dim ι(A) = {}", co.dim(), image.dim()));
    }
    Ok(ExactSequenceReport {
        iota_injective,
        pi_surjective,
        pi_iota_trivial: trivial,
        kernel_is_augmentation_ideal,
        a_is_coinvariants,
        dim_h: n,
        dim_coinvariants: co.dim(),
        dim_b: b.dim(),
        dimension_identity: n == co.dim() * b.dim(),
        witnesses,
    })
}
