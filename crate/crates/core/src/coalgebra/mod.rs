//! Structure-constant coalgebras and their coradical theory.

pub mod algebra;
pub mod coradical;
pub mod filtration;
pub mod matrix2;
pub mod projection;

use std::collections::HashMap;

use crate::linalg::{Field, LinalgError, Matrix, SubspaceBasis};

pub use algebra::AlgebraSC;
pub use coradical::{
    central_blocks, coradical, grouplikes, simple_decomposition, simple_decomposition_escalating, suggest_field_order,
    CentralBlock, SimpleBlock, SimpleDecomposition,
};
pub use matrix2::{classify_matrix2_image, Matrix2Classification, Matrix2Image};
pub use projection::{coideal_projection, verify_projection};
pub use filtration::{
    delta_respects_stages, full_filtration, full_filtration_with, isotypic_dimensions, nichols_layers, wedge_filtration,
    Filtration, IsotypicKey,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoalgebraError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not coassociative at basis element {index}, component {component:?}")]
    NotCoassociative { index: usize, component: (usize, usize, usize) },
    #[error("counit law fails at basis element {index}")]
    CounitFails { index: usize },
    #[error("element is not grouplike")]
    NotGrouplike,
    #[error("simple block of dimension {block_dim} has center of dimension {center_dim}; retry over a larger cyclotomic field{}", suggested_order.map(|m| format!(" (try m = {m})")).unwrap_or_default())]
    NotSplit { block_dim: usize, center_dim: usize, suggested_order: Option<u32> },
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("not a coalgebra map: {0}")]
    NotCoalgebraMap(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Δ(b_i) = Σ Δ_i^{jk} b_j⊗b_k stored sparsely per i.
#[derive(Clone, Debug)]
pub struct CoalgebraSC<F: Field> {
    dim: usize,
    field_order: u32,
    delta: Vec<Vec<(usize, usize, F)>>,
    eps: Vec<F>,
    labels: Vec<String>,
}

impl<F: Field> PartialEq for CoalgebraSC<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.delta == other.delta && self.eps == other.eps
    }
}

pub(crate) fn sparse_from_quads<F: Field>(
    dim: usize,
    quads: impl IntoIterator<Item = (usize, usize, usize, F)>,
) -> Result<Vec<Vec<(usize, usize, F)>>, CoalgebraError> {
    let mut acc: Vec<HashMap<(usize, usize), F>> = vec![HashMap::new(); dim];
    for (i, j, k, c) in quads {
        if i >= dim || j >= dim || k >= dim {
            return Err(CoalgebraError::ShapeMismatch(format!("index ({i},{j},{k}) out of range for dim {dim}")));
        }
        if c.is_zero() {
            continue;
        }
        let e = acc[i].entry((j, k)).or_insert_with(F::zero);
        *e = e.add_ref(&c);
    }
    Ok(acc
        .into_iter()
        .map(|m| {
            let mut v: Vec<(usize, usize, F)> =
                m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect();
            v.sort_by_key(|(j, k, _)| (*j, *k));
            v
        })
        .collect())
}

impl<F: Field> CoalgebraSC<F> {
    /// Validated construction from quads (i, j, k, Δ_i^{jk}).
    pub fn new(
        dim: usize,
        delta: impl IntoIterator<Item = (usize, usize, usize, F)>,
        eps: Vec<F>,
        labels: Vec<String>,
        field_order: u32,
    ) -> Result<Self, CoalgebraError> {
        let c = Self::new_unchecked(dim, delta, eps, labels, field_order)?;
        c.validate()?;
        Ok(c)
    }

    /// Construction with shape checks only.
    pub fn new_unchecked(
        dim: usize,
        delta: impl IntoIterator<Item = (usize, usize, usize, F)>,
        eps: Vec<F>,
        labels: Vec<String>,
        field_order: u32,
    ) -> Result<Self, CoalgebraError> {
        if eps.len() != dim {
            return Err(CoalgebraError::ShapeMismatch(format!("eps has length {}, expected {dim}", eps.len())));
        }
        let labels = if labels.is_empty() { (0..dim).map(|i| format!("b{i}")).collect() } else { labels };
        if labels.len() != dim {
            return Err(CoalgebraError::ShapeMismatch(format!("{} labels for dim {dim}", labels.len())));
        }
        let delta = sparse_from_quads(dim, delta)?;
        Ok(CoalgebraSC { dim, field_order, delta, eps, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    /// Same structure constants, read over Q(ζ_m).
    pub fn with_field_order(mut self, m: u32) -> Self {
        self.field_order = m.max(1);
        self
    }

    pub fn eps(&self) -> &[F] {
        &self.eps
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta_sparse(&self, i: usize) -> &[(usize, usize, F)] {
        &self.delta[i]
    }

    pub fn delta_quads(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for (i, terms) in self.delta.iter().enumerate() {
            for (j, k, c) in terms {
                out.push((i, *j, *k, c.clone()));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    /// Δ(x) as a dim×dim coefficient matrix (row = left factor).
    pub fn delta_of(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim;
        let mut m: Matrix<F> = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.delta[i] {
                let v = m.get(*j, *k).add_ref(&xi.mul_ref(c));
                m.set(*j, *k, v);
            }
        }
        m
    }

    pub fn eps_of(&self, x: &[F]) -> F {
        let mut s = F::zero();
        for (a, b) in x.iter().zip(&self.eps) {
            s.add_mul_assign(a, b);
        }
        s
    }

    /// Coassociativity and counit checks with witnesses.
    pub fn validate(&self) -> Result<(), CoalgebraError> {
        self.check_coassociative()?;
        self.check_counit()
    }

    pub fn check_coassociative(&self) -> Result<(), CoalgebraError> {
        let n = self.dim;
        let n2 = n * n;
        let mut lhs: Vec<F> = vec![F::zero(); n * n2];
        let mut rhs: Vec<F> = vec![F::zero(); n * n2];
        for i in 0..n {
            for x in lhs.iter_mut().chain(rhs.iter_mut()) {
                if !x.is_zero() {
                    *x = F::zero();
                }
            }
            for (j, k, c) in &self.delta[i] {
                for (a, b, d) in &self.delta[*j] {
                    lhs[a * n2 + b * n + k].add_mul_assign(c, d);
                }
                for (a, b, d) in &self.delta[*k] {
                    rhs[j * n2 + a * n + b].add_mul_assign(c, d);
                }
            }
            if let Some(pos) = (0..n * n2).find(|&p| lhs[p] != rhs[p]) {
                return Err(CoalgebraError::NotCoassociative {
                    index: i,
                    component: (pos / n2, (pos / n) % n, pos % n),
                });
            }
        }
        Ok(())
    }

    pub fn check_counit(&self) -> Result<(), CoalgebraError> {
        let n = self.dim;
        for i in 0..n {
            let mut left = vec![F::zero(); n];
            let mut right = vec![F::zero(); n];
            for (j, k, c) in &self.delta[i] {
                left[*k].add_mul_assign(&self.eps[*j], c);
                right[*j].add_mul_assign(&self.eps[*k], c);
            }
            let b = self.basis_vector(i);
            if left != b || right != b {
                return Err(CoalgebraError::CounitFails { index: i });
            }
        }
        Ok(())
    }

    /// The dual algebra: m^k_{ij} = Δ_k^{ij}, unit ε.
    pub fn dual_algebra(&self) -> AlgebraSC<F> {
        let quads = self
            .delta
            .iter()
            .enumerate()
            .flat_map(|(k, terms)| terms.iter().map(move |(i, j, c)| (*i, *j, k, c.clone())));
        AlgebraSC::from_quads(self.dim, quads, self.eps.clone()).with_field_order(self.field_order)
    }

    /// Whether Δ(S) ⊆ S⊗S.
    pub fn is_subcoalgebra(&self, s: &SubspaceBasis<F>) -> bool {
        s.vectors().iter().all(|v| self.delta_in_tensor(v, s, s))
    }

    /// Whether Δ(x) ∈ A⊗B: every column of the Δ matrix lies in A and every row in B.
    pub fn delta_in_tensor(&self, x: &[F], a: &SubspaceBasis<F>, b: &SubspaceBasis<F>) -> bool {
        let m = self.delta_of(x);
        (0..self.dim).all(|k| a.contains(&m.col(k))) && (0..self.dim).all(|j| b.contains(m.row(j)))
    }

    pub fn is_grouplike(&self, g: &[F]) -> bool {
        if g.len() != self.dim || !self.eps_of(g).is_one() {
            return false;
        }
        let m = self.delta_of(g);
        (0..self.dim).all(|j| (0..self.dim).all(|k| *m.get(j, k) == g[j].mul_ref(&g[k])))
    }

    /// Solutions of Δ(x) = g⊗x + x⊗h (the space P_{h,g}).
    pub fn skew_primitives(&self, g: &[F], h: &[F]) -> Result<SubspaceBasis<F>, CoalgebraError> {
        if !self.is_grouplike(g) || !self.is_grouplike(h) {
            return Err(CoalgebraError::NotGrouplike);
        }
        let n = self.dim;
        // Linear map x ↦ Δx − g⊗x − x⊗h into F^{n²}; rows are output coordinates.
        let mut rows: Vec<Vec<F>> = vec![vec![F::zero(); n]; n * n];
        for i in 0..n {
            for (j, k, c) in &self.delta[i] {
                rows[j * n + k][i] = rows[j * n + k][i].add_ref(c);
            }
            for j in 0..n {
                if !g[j].is_zero() {
                    rows[j * n + i][i] = rows[j * n + i][i].sub_ref(&g[j]);
                }
                if !h[j].is_zero() {
                    rows[i * n + j][i] = rows[i * n + j][i].sub_ref(&h[j]);
                }
            }
        }
        Ok(SubspaceBasis::from_spanning(n, rows).annihilator())
    }

    /// Subcoalgebra restricted to a subspace, in its echelon coordinates.
    pub fn restrict(&self, s: &SubspaceBasis<F>) -> Result<CoalgebraSC<F>, CoalgebraError> {
        let d = s.dim();
        let piv = s.pivots().to_vec();
        let mut quads = Vec::new();
        for (t, v) in s.vectors().iter().enumerate() {
            let m = self.delta_of(v);
            for (u, &pu) in piv.iter().enumerate() {
                for (w, &pw) in piv.iter().enumerate() {
                    let c = m.get(pu, pw);
                    if !c.is_zero() {
                        quads.push((t, u, w, c.clone()));
                    }
                }
            }
            if !self.delta_in_tensor(v, s, s) {
                return Err(CoalgebraError::ShapeMismatch("subspace is not a subcoalgebra".into()));
            }
        }
        let eps = s.vectors().iter().map(|v| self.eps_of(v)).collect();
        CoalgebraSC::new_unchecked(d, quads, eps, Vec::new(), self.field_order)
    }

    /// Δ contracted with functionals on both legs: row_i = (α⊗β)(Δ b_i).
    pub fn pair_row(&self, alpha: &[F], beta: &[F]) -> Vec<F> {
        self.delta
            .iter()
            .map(|terms| {
                let mut s = F::zero();
                for (j, k, c) in terms {
                    if alpha[*j].is_zero() || beta[*k].is_zero() {
                        continue;
                    }
                    s.add_mul_assign(&alpha[*j].mul_ref(&beta[*k]), c);
                }
                s
            })
            .collect()
    }

    /// {x : (α⊗β)Δx = 0 for all α ∈ A, β ∈ B} for functional families.
    pub fn delta_preimage_of_pairs(&self, pairs: &[(&[Vec<F>], &[Vec<F>])]) -> SubspaceBasis<F> {
        let n = self.dim;
        let mut b = crate::linalg::subspace::EchelonBuilder::new(n);
        'outer: for (aa, bb) in pairs {
            for alpha in aa.iter() {
                // T[i][k] = Σ_j α_j Δ_i^{jk}; row for β is T·β.
                let t: Vec<Vec<(usize, F)>> = self
                    .delta
                    .iter()
                    .map(|terms| {
                        let mut acc: Vec<(usize, F)> = Vec::new();
                        for (j, k, c) in terms {
                            if alpha[*j].is_zero() {
                                continue;
                            }
                            let v = alpha[*j].mul_ref(c);
                            match acc.iter_mut().find(|(kk, _)| kk == k) {
                                Some((_, x)) => *x = x.add_ref(&v),
                                None => acc.push((*k, v)),
                            }
                        }
                        acc
                    })
                    .collect();
                for beta in bb.iter() {
                    if b.is_full() {
                        break 'outer;
                    }
                    let row: Vec<F> = t
                        .iter()
                        .map(|ti| {
                            let mut s = F::zero();
                            for (k, v) in ti {
                                s.add_mul_assign(v, &beta[*k]);
                            }
                            s
                        })
                        .collect();
                    b.insert(row);
                }
            }
        }
        b.finish().annihilator()
    }

    /// Direct sum of coalgebras (block-diagonal structure constants).
    pub fn direct_sum(&self, other: &CoalgebraSC<F>) -> CoalgebraSC<F> {
        let n = self.dim;
        let mut quads = self.delta_quads();
        quads.extend(other.delta_quads().into_iter().map(|(i, j, k, c)| (i + n, j + n, k + n, c)));
        let mut eps = self.eps.clone();
        eps.extend(other.eps.iter().cloned());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        CoalgebraSC::new_unchecked(n + other.dim, quads, eps, labels, self.field_order.max(other.field_order))
            .expect("consistent shapes")
    }

    /// Group-like coalgebra on `n` basis elements.
    pub fn grouplike_coalgebra(n: usize, field_order: u32) -> CoalgebraSC<F> {
        let quads = (0..n).map(|i| (i, i, i, F::one()));
        CoalgebraSC::new_unchecked(n, quads, vec![F::one(); n], (0..n).map(|i| format!("g{i}")).collect(), field_order)
            .expect("consistent shapes")
    }

    /// The comatrix coalgebra M*(d) with basis e_ij at index i·d + j.
    pub fn comatrix(d: usize, field_order: u32) -> CoalgebraSC<F> {
        let mut quads = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    quads.push((i * d + j, i * d + l, l * d + j, F::one()));
                }
            }
        }
        let eps = (0..d * d).map(|x| if x / d == x % d { F::one() } else { F::zero() }).collect();
        let labels = (0..d * d).map(|x| format!("e{}{}", x / d + 1, x % d + 1)).collect();
        CoalgebraSC::new_unchecked(d * d, quads, eps, labels, field_order).expect("consistent shapes")
    }
}
