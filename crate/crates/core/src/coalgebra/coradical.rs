//! Coradical, its simple blocks, and grouplike elements.
//!
//! Everything is computed in A_0 = D_0*, the dual of the coradical. Its basis
//! is dual to the echelon rows d_t of D_0, so a functional a ∈ A_0 is the
//! vector (a(d_t))_t and products are read off Δ(d_t) at pivot columns.

use crate::linalg::{Field, Matrix, SubspaceBasis};

use super::algebra::{AlgebraSC, TestElements};
use super::{CoalgebraError, CoalgebraSC};

/// A simple subcoalgebra D_τ ≅ M*(d_τ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBlock<F: Field> {
    pub comodule_dim: usize,
    pub basis: SubspaceBasis<F>,
    /// e_ij with Δ(e_ij) = Σ_l e_il⊗e_lj and ε(e_ij) = δ_ij.
    pub multiplicative_matrix: Option<Vec<Vec<Vec<F>>>>,
}

impl<F: Field> SimpleBlock<F> {
    pub fn is_grouplike_block(&self) -> bool {
        self.comodule_dim == 1
    }

    /// The grouplike of a 1-dimensional block.
    pub fn grouplike(&self) -> Option<&[F]> {
        match &self.multiplicative_matrix {
            Some(m) if self.comodule_dim == 1 => Some(&m[0][0]),
            _ => None,
        }
    }
}

/// Split decomposition D_0 = ⊕ D_τ.
#[derive(Clone, Debug)]
pub struct SimpleDecomposition<F: Field> {
    pub coradical: SubspaceBasis<F>,
    pub blocks: Vec<SimpleBlock<F>>,
    /// Matrix units of A_0 per block, dual to the multiplicative matrices.
    pub(crate) units: Vec<Vec<Vec<Vec<F>>>>,
}

impl<F: Field> SimpleDecomposition<F> {
    /// Indices of 1-dimensional blocks.
    pub fn grouplike_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].comodule_dim == 1).collect()
    }

    /// Multiset of comodule dimensions, ascending.
    pub fn profile(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.comodule_dim).collect()
    }

    /// Block containing the given element, if any.
    pub fn block_of(&self, x: &[F]) -> Option<usize> {
        self.blocks.iter().position(|b| b.basis.contains(x))
    }
}

/// A block of the coradical cut out by a central primitive idempotent of
/// A_0, split or not.
#[derive(Clone, Debug)]
pub struct CentralBlock<F: Field> {
    pub basis: SubspaceBasis<F>,
    pub center_dim: usize,
}

impl<F: Field> CentralBlock<F> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// D_0 = J^⊥ for J the radical of the dual algebra.
pub fn coradical<F: Field>(c: &CoalgebraSC<F>) -> SubspaceBasis<F> {
    c.dual_algebra().radical().annihilator()
}

/// A_0 = D_0* in the basis dual to the echelon rows of D_0.
pub(crate) fn coradical_dual<F: Field>(c: &CoalgebraSC<F>, d0: &SubspaceBasis<F>) -> AlgebraSC<F> {
    let piv = d0.pivots();
    let mut quads = Vec::new();
    for (t, v) in d0.vectors().iter().enumerate() {
        let m = c.delta_of(v);
        for (u, &pu) in piv.iter().enumerate() {
            for (w, &pw) in piv.iter().enumerate() {
                let x = m.get(pu, pw);
                if !x.is_zero() {
                    quads.push((u, w, t, x.clone()));
                }
            }
        }
    }
    let unit = d0.vectors().iter().map(|v| c.eps_of(v)).collect();
    AlgebraSC::from_quads(d0.dim(), quads, unit).with_field_order(c.field_order())
}

/// Central idempotents with their center dimensions. A center dimension above
/// one means the block could not be split over the declared field.
fn central_idempotents<F: Field>(a0: &AlgebraSC<F>) -> Vec<(Vec<F>, usize)> {
    let n = a0.dim();
    let z = a0.center();
    let mut done = Vec::new();
    let mut work = vec![a0.unit().to_vec()];
    while let Some(e) = work.pop() {
        let ez = SubspaceBasis::from_spanning(n, z.vectors().iter().map(|v| a0.mul(&e, v)));
        if ez.dim() <= 1 {
            done.push((e, ez.dim()));
            continue;
        }
        let mut candidates: Vec<Vec<F>> = ez.vectors().to_vec();
        for i in 0..ez.dim() {
            for j in i + 1..ez.dim() {
                candidates.push(a0.add(&ez.vectors()[i], &ez.vectors()[j]));
            }
        }
        let mut state: u64 = 0x2545_F491_4F6C_DD1D;
        for _ in 0..8 {
            let coords: Vec<F> = (0..ez.dim())
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    F::from_i64(((state >> 33) % 9) as i64 - 4)
                })
                .collect();
            candidates.push(ez.combine(&coords));
        }
        match candidates.iter().find_map(|x| a0.split_by(x, &e)) {
            Some(f) => {
                work.push(a0.sub(&e, &f));
                work.push(f);
            }
            None => done.push((e.clone(), ez.dim())),
        }
    }
    done
}

/// The subspace of D_0 (in coordinates of C) on which the idempotent acts as
/// the identity: the annihilator of (1 − e)A_0.
fn block_subspace<F: Field>(a0: &AlgebraSC<F>, d0: &SubspaceBasis<F>, e: &[F]) -> SubspaceBasis<F> {
    let n = a0.dim();
    let one_minus = a0.sub(a0.unit(), e);
    let rows = SubspaceBasis::from_spanning(n, (0..n).map(|i| a0.mul(&one_minus, &a0.basis_vector(i))));
    let coords = rows.annihilator();
    SubspaceBasis::from_spanning(d0.ambient_dim(), coords.vectors().iter().map(|y| d0.combine(y)))
}

/// All blocks of the coradical, without requiring them to split.
pub fn central_blocks<F: Field>(c: &CoalgebraSC<F>) -> Vec<CentralBlock<F>> {
    let d0 = coradical(c);
    let a0 = coradical_dual(c, &d0);
    let mut out: Vec<CentralBlock<F>> = central_idempotents(&a0)
        .into_iter()
        .map(|(e, center_dim)| CentralBlock { basis: block_subspace(&a0, &d0, &e), center_dim })
        .collect();
    out.sort_by(|x, y| (x.dim(), x.basis.vectors()).cmp(&(y.dim(), y.basis.vectors())));
    out
}

/// All grouplike elements, one per 1-dimensional block, sorted.
pub fn grouplikes<F: Field>(c: &CoalgebraSC<F>) -> Vec<Vec<F>> {
    let mut gs: Vec<Vec<F>> = central_blocks(c)
        .into_iter()
        .filter(|b| b.dim() == 1)
        .filter_map(|b| {
            let v = &b.basis.vectors()[0];
            let s = c.eps_of(v).inv()?;
            Some(v.iter().map(|x| x.mul_ref(&s)).collect())
        })
        .collect();
    gs.sort();
    gs
}

/// Q(ζ_m) = Q(ζ_2m) for odd m; this picks the representative order.
fn canonical_order(m: u32) -> u32 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

/// Multiples k·m (k ≥ 2, ≤ 4·dim) giving fields different from Q(ζ_m), ascending.
fn larger_orders(m: u32, dim: usize) -> impl Iterator<Item = u32> {
    let m = m.max(1);
    let base = canonical_order(m);
    (2..).map(move |k| k * m).take_while(move |&mm| mm as usize <= 4 * dim.max(1)).filter(move |&mm| canonical_order(mm) != base)
}

/// Smallest m′ = k·m (m′ ≤ 4·dim) giving a strictly larger field.
pub fn suggest_field_order(m: u32, dim: usize) -> Option<u32> {
    larger_orders(m, dim).next()
}

fn not_split<F: Field>(c: &CoalgebraSC<F>, block_dim: usize, center_dim: usize) -> CoalgebraError {
    CoalgebraError::NotSplit { block_dim, center_dim, suggested_order: suggest_field_order(c.field_order(), c.dim()) }
}

/// Primitive idempotents summing to the central idempotent `e` of a simple
/// block, or `None` if some corner does not split.
fn primitive_idempotents<F: Field>(a0: &AlgebraSC<F>, e: &[F]) -> Option<Vec<Vec<F>>> {
    let mut prim = Vec::new();
    let mut work = vec![e.to_vec()];
    while let Some(f) = work.pop() {
        if a0.sandwich_dim(&f, &f) == 1 {
            prim.push(f);
            continue;
        }
        let found = TestElements::new(a0, 64).find_map(|x| {
            let y = a0.mul(&a0.mul(&f, &x), &f);
            if y.iter().all(|c| c.is_zero()) {
                return None;
            }
            a0.split_by(&y, &f)
        });
        let g = found?;
        work.push(a0.sub(&f, &g));
        work.push(g);
    }
    prim.sort();
    Some(prim)
}

fn first_nonzero_in_corner<F: Field>(a0: &AlgebraSC<F>, x: &[F], y: &[F]) -> Option<Vec<F>> {
    (0..a0.dim()).map(|i| a0.mul(&a0.mul(x, &a0.basis_vector(i)), y)).find(|v| v.iter().any(|c| !c.is_zero()))
}

/// Matrix units E_ij of a split simple block with primitive idempotents f_i.
fn matrix_units<F: Field>(a0: &AlgebraSC<F>, f: &[Vec<F>]) -> Option<Vec<Vec<Vec<F>>>> {
    let d = f.len();
    let mut row0 = vec![f[0].clone()];
    let mut col0 = vec![f[0].clone()];
    for i in 1..d {
        let u = first_nonzero_in_corner(a0, &f[0], &f[i])?;
        let v = first_nonzero_in_corner(a0, &f[i], &f[0])?;
        // u·v = c·f_0 since f_0 A f_0 is one-dimensional.
        let uv = a0.mul(&u, &v);
        let k = f[0].iter().position(|x| !x.is_zero())?;
        let c = uv[k].div_ref(&f[0][k])?;
        let v = a0.scale(&v, &c.inv()?);
        row0.push(u);
        col0.push(v);
    }
    let mut units = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            units[i][j] = if i == 0 { row0[j].clone() } else if j == 0 { col0[i].clone() } else { a0.mul(&col0[i], &row0[j]) };
        }
    }
    Some(units)
}

/// Central blocks, primitive idempotents and matrix units of the coradical.
/// Fails with `NotSplit` when some block is not a full matrix coalgebra over
/// the declared field.
pub fn simple_decomposition<F: Field>(c: &CoalgebraSC<F>) -> Result<SimpleDecomposition<F>, CoalgebraError> {
    let d0 = coradical(c);
    let a0 = coradical_dual(c, &d0);
    let mut centrals: Vec<(Vec<F>, usize, SubspaceBasis<F>)> = central_idempotents(&a0)
        .into_iter()
        .map(|(e, cd)| {
            let b = block_subspace(&a0, &d0, &e);
            (e, cd, b)
        })
        .collect();
    centrals.sort_by(|x, y| (x.2.dim(), x.2.vectors()).cmp(&(y.2.dim(), y.2.vectors())));

    let mut all_units: Vec<Vec<Vec<Vec<F>>>> = Vec::new();
    for (e, center_dim, b) in &centrals {
        if *center_dim != 1 {
            return Err(not_split(c, b.dim(), *center_dim));
        }
        let prim = primitive_idempotents(&a0, e).ok_or_else(|| not_split(c, b.dim(), 1))?;
        if prim.len() * prim.len() != b.dim() {
            return Err(not_split(c, b.dim(), 1));
        }
        let units = matrix_units(&a0, &prim).ok_or_else(|| not_split(c, b.dim(), 1))?;
        all_units.push(units);
    }

    // Dualize: the stacked unit functionals form an invertible matrix M on
    // D_0, and the columns of M⁻¹ give the multiplicative matrices.
    let flat: Vec<Vec<F>> = all_units.iter().flat_map(|u| u.iter().flat_map(|r| r.iter().cloned())).collect();
    let m = Matrix::from_rows(flat)?;
    let minv = m
        .inverse()
        .ok_or_else(|| CoalgebraError::InternalMismatch("matrix units do not form a basis of the coradical dual".into()))?;
    let mut blocks = Vec::new();
    let mut s = 0;
    for units in &all_units {
        let d = units.len();
        let mut mm = vec![vec![Vec::new(); d]; d];
        for row in mm.iter_mut() {
            for slot in row.iter_mut() {
                *slot = d0.combine(&minv.col(s));
                s += 1;
            }
        }
        let basis = SubspaceBasis::from_spanning(c.dim(), mm.iter().flat_map(|r| r.iter().cloned()));
        check_multiplicative(c, &mm)?;
        blocks.push(SimpleBlock { comodule_dim: d, basis, multiplicative_matrix: Some(mm) });
    }
    Ok(SimpleDecomposition { coradical: d0, blocks, units: all_units })
}

/// Retries `simple_decomposition` over successively larger cyclotomic fields
/// Q(ζ_m′), m′ a multiple of the declared order and m′ ≤ 4·dim. Returns the
/// order that worked.
pub fn simple_decomposition_escalating<F: Field>(
    c: &CoalgebraSC<F>,
) -> Result<(SimpleDecomposition<F>, u32), CoalgebraError> {
    let m = c.field_order().max(1);
    let first = simple_decomposition(c);
    let err = match first {
        Ok(d) => return Ok((d, m)),
        Err(e @ CoalgebraError::NotSplit { .. }) => e,
        Err(e) => return Err(e),
    };
    for mm in larger_orders(m, c.dim()) {
        match simple_decomposition(&c.clone().with_field_order(mm)) {
            Ok(d) => return Ok((d, mm)),
            Err(CoalgebraError::NotSplit { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(err)
}

pub(crate) fn check_multiplicative<F: Field>(c: &CoalgebraSC<F>, mm: &[Vec<Vec<F>>]) -> Result<(), CoalgebraError> {
    let d = mm.len();
    let n = c.dim();
    for i in 0..d {
        for j in 0..d {
            let got = c.delta_of(&mm[i][j]);
            let mut want: Matrix<F> = Matrix::zeros(n, n);
            for l in 0..d {
                for (a, x) in mm[i][l].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in mm[l][j].iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let v = want.get(a, b).add_ref(&x.mul_ref(y));
                        want.set(a, b, v);
                    }
                }
            }
            let e = c.eps_of(&mm[i][j]);
            let e_ok = if i == j { e.is_one() } else { e.is_zero() };
            if got != want || !e_ok {
                return Err(CoalgebraError::InternalMismatch(format!("multiplicative matrix fails at ({i},{j})")));
            }
        }
    }
    Ok(())
}
