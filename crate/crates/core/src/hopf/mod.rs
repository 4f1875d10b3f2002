//! Hopf algebras given by structure constants.

pub mod group;
pub mod sequence;

use crate::coalgebra::{
    coradical, grouplikes, AlgebraSC, CoalgebraError, CoalgebraSC, SimpleDecomposition,
};
use crate::linalg::{Field, LinalgError, Matrix, SubspaceBasis};

pub use group::GroupStructure;
pub use sequence::{check_exact_sequence, check_hopf_map, coinvariants, ExactSequenceReport, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails at basis element {0}")]
    UnitFails(usize),
    #[error("Δ is not multiplicative at ({0}, {1})")]
    DeltaNotMultiplicative(usize, usize),
    #[error("ε is not multiplicative at ({0}, {1})")]
    CounitNotMultiplicative(usize, usize),
    #[error("Δ(1) ≠ 1⊗1 or ε(1) ≠ 1")]
    UnitNotGrouplike,
    #[error("antipode axiom fails at basis element {0}")]
    AntipodeAxiomFails(usize),
    #[error("antipode order exceeds cap {0}")]
    ExceedsCap(u64),
    #[error("seed is not a subcoalgebra")]
    NotSubcoalgebra,
    #[error("grouplikes not closed: {0}")]
    NotClosed(String),
    #[error("not a Hopf map: {0}")]
    NotHopfMap(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    UnitGrouplike,
    CounitMultiplicative,
    DeltaMultiplicative,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::UnitGrouplike,
        Axiom::CounitMultiplicative,
        Axiom::DeltaMultiplicative,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::UnitGrouplike => "unit grouplike",
            Axiom::CounitMultiplicative => "counit multiplicative",
            Axiom::DeltaMultiplicative => "Δ multiplicative",
            Axiom::Antipode => "antipode",
        }
    }
}

/// (|G(H)|, |G(H*)|).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct HopfType {
    pub g_count: usize,
    pub g_dual_count: usize,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebraSC<F: Field> {
    coalgebra: CoalgebraSC<F>,
    algebra: AlgebraSC<F>,
    antipode: Matrix<F>,
}

impl<F: Field> PartialEq for HopfAlgebraSC<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coalgebra == other.coalgebra
            && self.algebra.quads() == other.algebra.quads()
            && self.algebra.unit() == other.algebra.unit()
            && self.antipode == other.antipode
    }
}

impl<F: Field> HopfAlgebraSC<F> {
    /// Validated construction. `mu` holds (i, j, k, m^k_{ij}) and `delta`
    /// holds (i, j, k, Δ_i^{jk}); `antipode` acts on column vectors.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        mu: impl IntoIterator<Item = (usize, usize, usize, F)>,
        unit: Vec<F>,
        delta: impl IntoIterator<Item = (usize, usize, usize, F)>,
        eps: Vec<F>,
        antipode: Matrix<F>,
        labels: Vec<String>,
        field_order: u32,
    ) -> Result<Self, HopfError> {
        let h = Self::new_unchecked(dim, mu, unit, delta, eps, antipode, labels, field_order)?;
        h.validate()?;
        Ok(h)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn new_unchecked(
        dim: usize,
        mu: impl IntoIterator<Item = (usize, usize, usize, F)>,
        unit: Vec<F>,
        delta: impl IntoIterator<Item = (usize, usize, usize, F)>,
        eps: Vec<F>,
        antipode: Matrix<F>,
        labels: Vec<String>,
        field_order: u32,
    ) -> Result<Self, HopfError> {
        let coalgebra = CoalgebraSC::new_unchecked(dim, delta, eps, labels, field_order)?;
        if unit.len() != dim {
            return Err(HopfError::ShapeMismatch(format!("unit has length {}, expected {dim}", unit.len())));
        }
        let mu: Vec<(usize, usize, usize, F)> = mu.into_iter().collect();
        if let Some((i, j, k, _)) = mu.iter().find(|(i, j, k, _)| *i >= dim || *j >= dim || *k >= dim) {
            return Err(HopfError::ShapeMismatch(format!("mu index ({i},{j},{k}) out of range for dim {dim}")));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(HopfError::ShapeMismatch(format!(
                "antipode is {}×{}, expected {dim}×{dim}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let algebra = AlgebraSC::from_quads(dim, mu, unit).with_field_order(field_order);
        Ok(HopfAlgebraSC { coalgebra, algebra, antipode })
    }

    pub fn from_parts(coalgebra: CoalgebraSC<F>, algebra: AlgebraSC<F>, antipode: Matrix<F>) -> Result<Self, HopfError> {
        let h = HopfAlgebraSC { coalgebra, algebra, antipode };
        h.validate()?;
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn field_order(&self) -> u32 {
        self.coalgebra.field_order()
    }

    /// Same structure constants, read over Q(ζ_m).
    pub fn with_field_order(self, m: u32) -> Self {
        HopfAlgebraSC {
            coalgebra: self.coalgebra.with_field_order(m),
            algebra: self.algebra.with_field_order(m),
            antipode: self.antipode,
        }
    }

    pub fn labels(&self) -> &[String] {
        self.coalgebra.labels()
    }

    pub fn coalgebra(&self) -> &CoalgebraSC<F> {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &AlgebraSC<F> {
        &self.algebra
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    pub fn eps(&self) -> &[F] {
        self.coalgebra.eps()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        self.coalgebra.basis_vector(i)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.algebra.mul(x, y)
    }

    pub fn pow(&self, x: &[F], e: u32) -> Vec<F> {
        (0..e).fold(self.unit().to_vec(), |acc, _| self.mul(&acc, x))
    }

    pub fn apply_antipode(&self, x: &[F]) -> Vec<F> {
        self.antipode.mul_vec(x)
    }

    pub fn delta_of(&self, x: &[F]) -> Matrix<F> {
        self.coalgebra.delta_of(x)
    }

    pub fn eps_of(&self, x: &[F]) -> F {
        self.coalgebra.eps_of(x)
    }

    /// Checks every axiom and reports the first violation.
    pub fn validate(&self) -> Result<(), HopfError> {
        for axiom in Axiom::ALL {
            self.check_axiom(axiom)?;
        }
        Ok(())
    }

    /// Every axiom checked independently, in [`Axiom::ALL`] order.
    pub fn axiom_report(&self) -> Vec<(Axiom, Result<(), HopfError>)> {
        Axiom::ALL.into_iter().map(|a| (a, self.check_axiom(a))).collect()
    }

    pub fn check_axiom(&self, axiom: Axiom) -> Result<(), HopfError> {
        match axiom {
            Axiom::Associativity => match self.algebra.associativity_witness() {
                Some(w) => Err(HopfError::NotAssociative(w.0, w.1, w.2)),
                None => Ok(()),
            },
            Axiom::Unit => match self.algebra.unit_witness() {
                Some(i) => Err(HopfError::UnitFails(i)),
                None => Ok(()),
            },
            Axiom::Coassociativity => Ok(self.coalgebra.check_coassociative()?),
            Axiom::Counit => Ok(self.coalgebra.check_counit()?),
            Axiom::UnitGrouplike => {
                if self.coalgebra.is_grouplike(self.unit()) {
                    Ok(())
                } else {
                    Err(HopfError::UnitNotGrouplike)
                }
            }
            Axiom::CounitMultiplicative => self.check_counit_multiplicative(),
            Axiom::DeltaMultiplicative => self.check_delta_multiplicative(),
            Axiom::Antipode => self.check_antipode(),
        }
    }

    fn check_counit_multiplicative(&self) -> Result<(), HopfError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                if self.eps_of(&prod) != self.eps()[i].mul_ref(&self.eps()[j]) {
                    return Err(HopfError::CounitNotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_delta_multiplicative(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let deltas: Vec<Vec<(usize, usize, F)>> = (0..n).map(|i| self.coalgebra.delta_sparse(i).to_vec()).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                let lhs = self.delta_of(&prod);
                let mut rhs: Matrix<F> = Matrix::zeros(n, n);
                for (a, b, c) in &deltas[i] {
                    for (a2, b2, c2) in &deltas[j] {
                        let coeff = c.mul_ref(c2);
                        for (l, x) in self.algebra.basis_product(*a, *a2) {
                            let lx = coeff.mul_ref(x);
                            for (r, y) in self.algebra.basis_product(*b, *b2) {
                                let v = rhs.get(*l, *r).add_ref(&lx.mul_ref(y));
                                rhs.set(*l, *r, v);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(HopfError::DeltaNotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_antipode(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let one = self.unit().to_vec();
        for i in 0..n {
            let mut left = vec![F::zero(); n];
            let mut right = vec![F::zero(); n];
            for (a, b, c) in self.coalgebra.delta_sparse(i) {
                let sa = self.antipode.col(*a);
                let sb = self.antipode.col(*b);
                let l = self.mul(&sa, &self.basis_vector(*b));
                let r = self.mul(&self.basis_vector(*a), &sb);
                for k in 0..n {
                    left[k].add_mul_assign(c, &l[k]);
                    right[k].add_mul_assign(c, &r[k]);
                }
            }
            let want: Vec<F> = one.iter().map(|u| u.mul_ref(&self.eps()[i])).collect();
            if left != want || right != want {
                return Err(HopfError::AntipodeAxiomFails(i));
            }
        }
        Ok(())
    }

    /// H* in the dual basis: Δ* = mᵀ, m* = Δᵀ, unit ε, counit 1, S* = Sᵀ.
    pub fn dual(&self) -> HopfAlgebraSC<F> {
        let n = self.dim();
        let mu_quads: Vec<(usize, usize, usize, F)> = self.coalgebra.delta_quads().into_iter().map(|(k, i, j, c)| (i, j, k, c)).collect();
        let delta_quads: Vec<(usize, usize, usize, F)> = self.algebra.quads().into_iter().map(|(i, j, k, c)| (k, i, j, c)).collect();
        let labels = self.labels().iter().map(|l| format!("{l}*")).collect();
        let coalgebra = CoalgebraSC::new_unchecked(n, delta_quads, self.unit().to_vec(), labels, self.field_order())
            .expect("transposed shapes");
        let algebra = AlgebraSC::from_quads(n, mu_quads, self.eps().to_vec()).with_field_order(self.field_order());
        HopfAlgebraSC { coalgebra, algebra, antipode: self.antipode.transpose() }
    }

    /// H⊗K with basis b_i⊗c_j at index i·dim K + j.
    pub fn tensor(&self, other: &HopfAlgebraSC<F>) -> HopfAlgebraSC<F> {
        let (n, m) = (self.dim(), other.dim());
        let idx = |i: usize, j: usize| i * m + j;
        let mut mu = Vec::new();
        let aq = self.algebra.quads();
        let bq = other.algebra.quads();
        for (i, j, k, c) in &aq {
            for (i2, j2, k2, c2) in &bq {
                mu.push((idx(*i, *i2), idx(*j, *j2), idx(*k, *k2), c.mul_ref(c2)));
            }
        }
        let mut delta = Vec::new();
        let dq = self.coalgebra.delta_quads();
        let eq = other.coalgebra.delta_quads();
        for (i, j, k, c) in &dq {
            for (i2, j2, k2, c2) in &eq {
                delta.push((idx(*i, *i2), idx(*j, *j2), idx(*k, *k2), c.mul_ref(c2)));
            }
        }
        let kron = |a: &[F], b: &[F]| -> Vec<F> { a.iter().flat_map(|x| b.iter().map(move |y| x.mul_ref(y))).collect() };
        let unit = kron(self.unit(), other.unit());
        let eps = kron(self.eps(), other.eps());
        let mut s: Matrix<F> = Matrix::zeros(n * m, n * m);
        for r in 0..n {
            for c in 0..n {
                let x = self.antipode.get(r, c);
                if x.is_zero() {
                    continue;
                }
                for r2 in 0..m {
                    for c2 in 0..m {
                        let y = other.antipode.get(r2, c2);
                        if !y.is_zero() {
                            s.set(idx(r, r2), idx(c, c2), x.mul_ref(y));
                        }
                    }
                }
            }
        }
        let labels = self
            .labels()
            .iter()
            .flat_map(|a| other.labels().iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let order = {
            use num_integer::Integer;
            self.field_order().lcm(&other.field_order())
        };
        HopfAlgebraSC::new_unchecked(n * m, mu, unit, delta, eps, s, labels, order).expect("consistent shapes")
    }

    /// Least n ≥ 1 with Sⁿ = id.
    pub fn antipode_order(&self, cap: u64) -> Result<u64, HopfError> {
        self.antipode.order(cap).ok_or(HopfError::ExceedsCap(cap))
    }

    /// Default cap 4·dim.
    pub fn antipode_order_default(&self) -> Result<u64, HopfError> {
        self.antipode_order(4 * self.dim() as u64)
    }

    pub fn is_semisimple(&self) -> bool {
        self.antipode.mul(&self.antipode).map(|s2| s2.is_identity()).unwrap_or(false)
    }

    pub fn grouplikes(&self) -> Vec<Vec<F>> {
        grouplikes(&self.coalgebra)
    }

    pub fn grouplike_group(&self) -> Result<GroupStructure<F>, HopfError> {
        GroupStructure::of(self)
    }

    pub fn hopf_type(&self) -> HopfType {
        HopfType { g_count: self.grouplikes().len(), g_dual_count: self.dual().grouplikes().len() }
    }

    /// Coradical spanned by grouplikes.
    pub fn is_pointed(&self) -> bool {
        coradical(&self.coalgebra).dim() == self.grouplikes().len()
    }

    pub fn is_copointed(&self) -> bool {
        self.dual().is_pointed()
    }

    /// Pointed and not cosemisimple.
    pub fn is_pointed_nontrivial(&self) -> bool {
        self.is_pointed() && coradical(&self.coalgebra).dim() < self.dim()
    }

    pub fn left_multiplication(&self, h: &[F]) -> Matrix<F> {
        self.algebra.left_matrix(h)
    }

    pub fn right_multiplication(&self, h: &[F]) -> Matrix<F> {
        self.algebra.right_matrix(h)
    }

    /// ad_l(h)(x) = h_1 x S(h_2) or ad_r(h)(x) = S(h_1) x h_2.
    pub fn adjoint_action(&self, h: &[F], side: Side) -> Matrix<F> {
        let n = self.dim();
        let dh = self.delta_of(h);
        let mut cols = vec![vec![F::zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let c = dh.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let (left, right) = match side {
                    Side::Left => (self.basis_vector(a), self.antipode.col(b)),
                    Side::Right => (self.antipode.col(a), self.basis_vector(b)),
                };
                for (x, col) in cols.iter_mut().enumerate() {
                    let v = self.mul(&self.mul(&left, &self.basis_vector(x)), &right);
                    for (o, y) in col.iter_mut().zip(&v) {
                        o.add_mul_assign(c, y);
                    }
                }
            }
        }
        Matrix::from_cols(&cols, n)
    }

    /// Closure of seed ∪ {1} under multiplication; verified S-stable.
    pub fn subalgebra_generated(&self, seed: &SubspaceBasis<F>) -> Result<SubspaceBasis<F>, HopfError> {
        if !self.coalgebra.is_subcoalgebra(seed) {
            return Err(HopfError::NotSubcoalgebra);
        }
        let n = self.dim();
        let mut span = seed.sum(&SubspaceBasis::from_spanning(n, [self.unit().to_vec()]))?;
        loop {
            let prods = span
                .vectors()
                .iter()
                .flat_map(|x| seed.vectors().iter().map(move |y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .collect::<Vec<_>>();
            let next = span.sum(&SubspaceBasis::from_spanning(n, prods))?;
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        for v in span.vectors() {
            if !span.contains(&self.apply_antipode(v)) {
                return Err(HopfError::InternalMismatch("generated sub-bialgebra is not stable under S".into()));
            }
        }
        Ok(span)
    }

    /// Whether the subspace is a sub-Hopf algebra.
    pub fn is_sub_hopf(&self, s: &SubspaceBasis<F>) -> bool {
        s.contains(self.unit())
            && self.coalgebra.is_subcoalgebra(s)
            && s.vectors().iter().all(|x| s.vectors().iter().all(|y| s.contains(&self.mul(x, y))))
            && s.vectors().iter().all(|x| s.contains(&self.apply_antipode(x)))
    }

    /// Index permutation of coradical blocks under x ↦ S(x).
    pub fn antipode_block_permutation(&self, dec: &SimpleDecomposition<F>) -> Result<Vec<usize>, HopfError> {
        self.block_permutation(dec, |x| self.apply_antipode(x))
    }

    /// Block permutation under left (or right) multiplication by a grouplike.
    pub fn translation_block_permutation(&self, dec: &SimpleDecomposition<F>, g: &[F], side: Side) -> Result<Vec<usize>, HopfError> {
        self.block_permutation(dec, |x| match side {
            Side::Left => self.mul(g, x),
            Side::Right => self.mul(x, g),
        })
    }

    fn block_permutation(&self, dec: &SimpleDecomposition<F>, f: impl Fn(&[F]) -> Vec<F>) -> Result<Vec<usize>, HopfError> {
        dec.blocks
            .iter()
            .map(|b| {
                let y = f(&b.basis.vectors()[0]);
                dec.block_of(&y).ok_or_else(|| HopfError::InternalMismatch("image of a simple block is not a block".into()))
            })
            .collect()
    }
}
