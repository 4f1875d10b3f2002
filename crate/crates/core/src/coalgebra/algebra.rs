//! Finite-dimensional associative algebras given by structure constants.
//!
//! Used for dual algebras of coalgebras: radicals, centers, idempotents and
//! matrix units are all computed here.

use crate::linalg::subspace::EchelonBuilder;
use crate::linalg::{poly, Field, Matrix, SubspaceBasis};

/// Associative algebra with basis b_0..b_{n-1}; `table[i*n+j]` is the
/// sparse expansion of b_i·b_j.
#[derive(Clone, Debug)]
pub struct AlgebraSC<F: Field> {
    dim: usize,
    table: Vec<Vec<(usize, F)>>,
    unit: Vec<F>,
    field_order: u32,
}

/// Witness of a failed associativity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityWitness(pub usize, pub usize, pub usize);

impl<F: Field> AlgebraSC<F> {
    pub fn new(dim: usize, table: Vec<Vec<(usize, F)>>, unit: Vec<F>) -> Self {
        assert_eq!(table.len(), dim * dim, "product table shape");
        assert_eq!(unit.len(), dim, "unit length");
        AlgebraSC { dim, table, unit, field_order: 1 }
    }

    /// From quads (i, j, k, c) meaning b_i·b_j has coefficient c on b_k.
    pub fn from_quads(dim: usize, quads: impl IntoIterator<Item = (usize, usize, usize, F)>, unit: Vec<F>) -> Self {
        let mut table: Vec<Vec<(usize, F)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in quads {
            if c.is_zero() {
                continue;
            }
            let slot = &mut table[i * dim + j];
            match slot.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, v)) => *v = v.add_ref(&c),
                None => slot.push((k, c)),
            }
        }
        for slot in table.iter_mut() {
            slot.retain(|(_, c)| !c.is_zero());
            slot.sort_by_key(|(k, _)| *k);
        }
        AlgebraSC { dim, table, unit, field_order: 1 }
    }

    /// Root searches (idempotent splitting) also range over Q(ζ_m).
    pub fn with_field_order(mut self, m: u32) -> Self {
        self.field_order = m.max(1);
        self
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim + j]
    }

    pub fn quads(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul_ref(yj);
                for (k, t) in &self.table[i * n + j] {
                    out[*k].add_mul_assign(&c, t);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[F], y: &[F]) -> Vec<F> {
        x.iter().zip(y).map(|(a, b)| a.add_ref(b)).collect()
    }

    pub fn sub(&self, x: &[F], y: &[F]) -> Vec<F> {
        x.iter().zip(y).map(|(a, b)| a.sub_ref(b)).collect()
    }

    pub fn scale(&self, x: &[F], c: &F) -> Vec<F> {
        x.iter().map(|a| a.mul_ref(c)).collect()
    }

    /// Matrix of y ↦ x·y.
    pub fn left_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// Matrix of y ↦ y·x.
    pub fn right_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<AssociativityWitness> {
        let n = self.dim;
        for i in 0..n {
            let bi = self.basis_vector(i);
            for j in 0..n {
                let bij = self.mul(&bi, &self.basis_vector(j));
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let lhs = self.mul(&bij, &bk);
                    let rhs = self.mul(&bi, &self.mul(&self.basis_vector(j), &bk));
                    if lhs != rhs {
                        return Some(AssociativityWitness(i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis index where the unit fails to act as identity.
    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        })
    }

    /// t_k = trace of left multiplication by b_k.
    pub fn trace_functional(&self) -> Vec<F> {
        let n = self.dim;
        (0..n)
            .map(|k| {
                let mut t = F::zero();
                for j in 0..n {
                    for (l, c) in &self.table[k * n + j] {
                        if *l == j {
                            t = t.add_ref(c);
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Jacobson radical via the trace form (characteristic zero).
    pub fn radical(&self) -> SubspaceBasis<F> {
        let n = self.dim;
        let t = self.trace_functional();
        let rows = (0..n).map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = F::zero();
                    for (k, c) in &self.table[i * n + j] {
                        s.add_mul_assign(c, &t[*k]);
                    }
                    s
                })
                .collect::<Vec<F>>()
        });
        SubspaceBasis::from_spanning(n, rows).annihilator()
    }

    pub fn center(&self) -> SubspaceBasis<F> {
        let n = self.dim;
        let mut b = EchelonBuilder::new(n);
        'outer: for j in 0..n {
            for k in 0..n {
                if b.is_full() {
                    break 'outer;
                }
                let row: Vec<F> = (0..n)
                    .map(|i| {
                        let mut s = F::zero();
                        for (kk, c) in &self.table[i * n + j] {
                            if *kk == k {
                                s = s.add_ref(c);
                            }
                        }
                        for (kk, c) in &self.table[j * n + i] {
                            if *kk == k {
                                s = s.sub_ref(c);
                            }
                        }
                        s
                    })
                    .collect();
                b.insert(row);
            }
        }
        b.finish().annihilator()
    }

    /// Minimal polynomial of `x` inside a subalgebra with identity `e`
    /// (constant term first, monic).
    pub fn min_poly(&self, x: &[F], e: &[F]) -> Vec<F> {
        let n = self.dim;
        let cap = n + 1;
        let mut builder = EchelonBuilder::new(n + cap + 1);
        let mut p = e.to_vec();
        for k in 0..=cap {
            let mut aug = p.clone();
            aug.extend((0..=cap).map(|j| if j == k { F::one() } else { F::zero() }));
            let mut probe = aug.clone();
            builder.reduce(&mut probe);
            if probe[..n].iter().all(|c| c.is_zero()) {
                let rel: Vec<F> = probe[n..n + k + 1].to_vec();
                return poly::monic(&rel);
            }
            builder.insert(aug);
            p = self.mul(&p, x);
        }
        unreachable!("minimal polynomial degree exceeds algebra dimension")
    }

    /// Evaluate a polynomial at `x` with `e` as the identity.
    pub fn eval_poly(&self, coeffs: &[F], x: &[F], e: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); self.dim];
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            for (a, ei) in acc.iter_mut().zip(e) {
                a.add_mul_assign(c, ei);
            }
        }
        acc
    }

    /// Splits the idempotent `e` using the generalized eigenspaces of `x`
    /// (an element of eAe). Returns a nontrivial idempotent E ≤ e, if the
    /// minimal polynomial of x has a root in the field and another factor.
    pub fn split_by(&self, x: &[F], e: &[F]) -> Option<Vec<F>> {
        let mu = self.min_poly(x, e);
        if poly::degree(&mu).unwrap_or(0) < 2 {
            return None;
        }
        for lambda in F::roots(&mu, self.field_order) {
            let lin = vec![lambda.neg_ref(), F::one()];
            let mut f = vec![F::one()];
            let mut g = mu.clone();
            loop {
                let (q, r) = poly::divrem(&g, &lin);
                if !r.is_empty() {
                    break;
                }
                f = poly::mul(&f, &lin);
                g = q;
            }
            if poly::degree(&g).unwrap_or(0) == 0 {
                continue;
            }
            let (_, _, t) = poly::ext_gcd(&f, &g);
            let proj = poly::mul(&t, &g);
            let idem = self.eval_poly(&proj, x, e);
            return Some(idem);
        }
        None
    }

    /// dim of the subspace x·A·y.
    pub fn sandwich_dim(&self, x: &[F], y: &[F]) -> usize {
        self.sandwich_space(x, y).dim()
    }

    pub fn sandwich_space(&self, x: &[F], y: &[F]) -> SubspaceBasis<F> {
        let vecs = (0..self.dim).map(|i| self.mul(&self.mul(x, &self.basis_vector(i)), y));
        SubspaceBasis::from_spanning(self.dim, vecs)
    }

    /// Inverse of an invertible element of the corner eAe (identity `e`).
    pub fn corner_inverse(&self, x: &[F], e: &[F]) -> Option<Vec<F>> {
        let mu = self.min_poly(x, e);
        if mu.first().is_none_or(|c| c.is_zero()) {
            return None;
        }
        // x·q(x) = -μ(0)·e where μ = x·q + μ(0).
        let c0 = mu[0].clone();
        let q: Vec<F> = mu[1..].to_vec();
        let qx = self.eval_poly(&q, x, e);
        let s = c0.neg_ref().inv()?;
        Some(self.scale(&qx, &s))
    }
}

/// Deterministic stream of test elements: basis vectors, pairwise sums,
/// pairwise products, then small pseudo-random integer combinations.
pub(crate) struct TestElements<'a, F: Field> {
    alg: &'a AlgebraSC<F>,
    stage: usize,
    i: usize,
    j: usize,
    state: u64,
    remaining_random: usize,
}

impl<'a, F: Field> TestElements<'a, F> {
    pub(crate) fn new(alg: &'a AlgebraSC<F>, random: usize) -> Self {
        TestElements { alg, stage: 0, i: 0, j: 1, state: 0x9E37_79B9_7F4A_7C15, remaining_random: random }
    }

    fn next_small(&mut self) -> i64 {
        self.state = self.state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((self.state >> 33) % 7) as i64 - 3
    }
}

impl<F: Field> Iterator for TestElements<'_, F> {
    type Item = Vec<F>;

    fn next(&mut self) -> Option<Vec<F>> {
        let n = self.alg.dim;
        loop {
            match self.stage {
                0 => {
                    if self.i < n {
                        self.i += 1;
                        return Some(self.alg.basis_vector(self.i - 1));
                    }
                    self.stage = 1;
                    self.i = 0;
                    self.j = 1;
                }
                1 | 2 => {
                    if self.j >= n {
                        self.i += 1;
                        self.j = self.i + 1;
                    }
                    if self.i + 1 >= n {
                        self.stage += 1;
                        self.i = 0;
                        self.j = 1;
                        continue;
                    }
                    let (bi, bj) = (self.alg.basis_vector(self.i), self.alg.basis_vector(self.j));
                    self.j += 1;
                    return Some(if self.stage == 1 { self.alg.add(&bi, &bj) } else { self.alg.mul(&bi, &bj) });
                }
                _ => {
                    if self.remaining_random == 0 {
                        return None;
                    }
                    self.remaining_random -= 1;
                    let v: Vec<F> = (0..n).map(|_| F::from_i64(self.next_small())).collect();
                    return Some(v);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;
    use num_traits::{One, Zero};

    fn q(x: i64) -> Rational {
        Rational::from_integer(x)
    }

    /// 2×2 matrices with basis E11, E12, E21, E22.
    fn mat2() -> AlgebraSC<Rational> {
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut quads = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    quads.push((idx(i, j), idx(j, l), idx(i, l), q(1)));
                }
            }
        }
        AlgebraSC::from_quads(4, quads, vec![q(1), q(0), q(0), q(1)])
    }

    /// Upper triangular 2×2 matrices: basis E11, E12, E22.
    fn upper() -> AlgebraSC<Rational> {
        let quads = vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))];
        AlgebraSC::from_quads(3, quads, vec![q(1), q(0), q(1)])
    }

    #[test]
    fn matrix_algebra_is_semisimple_with_scalar_center() {
        let a = mat2();
        assert!(a.associativity_witness().is_none());
        assert!(a.unit_witness().is_none());
        assert!(a.radical().is_zero());
        assert_eq!(a.center(), SubspaceBasis::from_spanning(4, vec![a.unit().to_vec()]));
    }

    #[test]
    fn triangular_radical() {
        let a = upper();
        assert_eq!(a.radical(), SubspaceBasis::from_spanning(3, vec![vec![q(0), q(1), q(0)]]));
    }

    #[test]
    fn min_poly_and_split() {
        let a = mat2();
        let e12 = vec![q(0), q(1), q(0), q(0)];
        assert_eq!(a.min_poly(&e12, a.unit()), vec![q(0), q(0), q(1)]);
        let d = vec![q(2), q(0), q(0), q(5)];
        let idem = a.split_by(&d, a.unit()).unwrap();
        assert_eq!(a.mul(&idem, &idem), idem);
        assert!(idem == vec![q(1), q(0), q(0), q(0)] || idem == vec![q(0), q(0), q(0), q(1)]);
        assert!(a.split_by(&e12, a.unit()).is_none());
    }

    #[test]
    fn corner_inverse_works() {
        let a = upper();
        let x = vec![q(2), q(3), q(1)];
        let inv = a.corner_inverse(&x, a.unit()).unwrap();
        assert_eq!(a.mul(&x, &inv), a.unit().to_vec());
        assert!(!Rational::zero().is_one());
    }
}
