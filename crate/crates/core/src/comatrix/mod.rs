//! Normal forms of finite-order automorphisms and anti-automorphisms of the
//! comatrix coalgebra M*(d).
//!
//! Maps act on the standard basis e_ij (index i·d + j). An automorphism is
//! f(e) = U e U⁻¹ entrywise, an anti-automorphism f(e) = Ã eᵀ Ã⁻¹. A new
//! multiplicative matrix U·e·U⁻¹ turns these matrices into U·B·U⁻¹ and
//! U·Ã·Uᵀ respectively.

use serde::{Deserialize, Serialize};

use crate::coalgebra::{CoalgebraError, CoalgebraSC, SimpleBlock};
use crate::hopf::HopfAlgebraSC;
use crate::linalg::eigen::{default_order_cap, finite_order_eigendecomposition_in, scalar_power};
use crate::linalg::{Field, LinalgError, Matrix, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComatrixError {
    #[error("not a coalgebra map: {0}")]
    NotCoalgebraMap(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("no power up to {0} is a scalar matrix")]
    NotFiniteOrder(u64),
    #[error("ord(f²) = 1: outside the hypothesis of the anti-automorphism normal form")]
    OrderOne,
    #[error("the antipode does not map the block to itself")]
    NotStable,
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapKind {
    Automorphism,
    AntiAutomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComatrixMap<F: Field> {
    pub d: usize,
    pub kind: MapKind,
    /// d²×d², column i·d + j is f(e_ij).
    pub matrix: Matrix<F>,
    pub declared_order_hint: Option<u64>,
    /// Eigenvalues are sought in Q(ζ_field_order).
    pub field_order: u32,
}

fn idx(d: usize, i: usize, j: usize) -> usize {
    i * d + j
}

impl<F: Field> ComatrixMap<F> {
    /// Validated construction: Δ, ε preserved (reversed for anti) and invertible.
    pub fn new(d: usize, kind: MapKind, matrix: Matrix<F>, field_order: u32) -> Result<Self, ComatrixError> {
        let n = d * d;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(ComatrixError::NotCoalgebraMap(format!("matrix is {}×{}, expected {n}×{n}", matrix.rows(), matrix.cols())));
        }
        let c = CoalgebraSC::<F>::comatrix(d, field_order);
        let ft = matrix.transpose();
        for b in 0..n {
            let img = matrix.col(b);
            let lhs = c.delta_of(&img);
            let mut rhs = matrix.mul(&c.delta_of(&c.basis_vector(b)))?.mul(&ft)?;
            if kind == MapKind::AntiAutomorphism {
                rhs = rhs.transpose();
            }
            if lhs != rhs {
                return Err(ComatrixError::NotCoalgebraMap(format!("Δ is not preserved on {}", c.labels()[b])));
            }
            if c.eps_of(&img) != c.eps()[b] {
                return Err(ComatrixError::NotCoalgebraMap(format!("ε is not preserved on {}", c.labels()[b])));
            }
        }
        if matrix.rank() != n {
            return Err(ComatrixError::NotInvertible);
        }
        Ok(ComatrixMap { d, kind, matrix, declared_order_hint: None, field_order })
    }

    pub fn with_order_hint(mut self, n: u64) -> Self {
        self.declared_order_hint = Some(n);
        self
    }

    /// The map e ↦ U e U⁻¹ or e ↦ U eᵀ U⁻¹.
    pub fn from_conjugator(u: &Matrix<F>, kind: MapKind, field_order: u32) -> Result<Self, ComatrixError> {
        let d = u.rows();
        let ui = u.inverse().ok_or(ComatrixError::NotInvertible)?;
        let mut m = Matrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let c = u.get(i, k).mul_ref(ui.get(l, j));
                        if c.is_zero() {
                            continue;
                        }
                        let row = match kind {
                            MapKind::Automorphism => idx(d, k, l),
                            MapKind::AntiAutomorphism => idx(d, l, k),
                        };
                        m.set(row, idx(d, i, j), c);
                    }
                }
            }
        }
        Ok(ComatrixMap { d, kind, matrix: m, declared_order_hint: None, field_order })
    }

    fn cap(&self) -> u64 {
        self.declared_order_hint.unwrap_or_else(|| default_order_cap(self.d * self.d))
    }
}

/// U (automorphism, f(e)U = Ue) or Ã (anti, f(e)Ã = Ãeᵀ), normalised so
/// that the first nonzero entry is 1.
pub fn recover_conjugator<F: Field>(f: &ComatrixMap<F>) -> Result<Matrix<F>, ComatrixError> {
    let d = f.d;
    let n = d * d;
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..d {
        for j in 0..d {
            for coord in 0..n {
                let mut row = vec![F::zero(); n];
                for l in 0..d {
                    let c = f.matrix.get(coord, idx(d, i, l));
                    if !c.is_zero() {
                        row[idx(d, l, j)] = row[idx(d, l, j)].add_ref(c);
                    }
                }
                for k in 0..d {
                    let target = match f.kind {
                        MapKind::Automorphism => idx(d, k, j),
                        MapKind::AntiAutomorphism => idx(d, j, k),
                    };
                    if target == coord {
                        row[idx(d, i, k)] = row[idx(d, i, k)].sub_ref(&F::one());
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = SubspaceBasis::from_spanning(n, rows).annihilator();
    if sol.dim() != 1 {
        return Err(ComatrixError::NotCoalgebraMap(format!("conjugator space has dimension {}", sol.dim())));
    }
    let v = sol.vectors()[0].clone();
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero solution").inv().expect("nonzero");
    let v: Vec<F> = v.iter().map(|x| x.mul_ref(&lead)).collect();
    let u = Matrix::new(d, d, v)?;
    if u.rank() != d {
        return Err(ComatrixError::NotInvertible);
    }
    Ok(u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiBlocks<F: Field> {
    pub a_plus: usize,
    pub a_minus: usize,
    /// (a_j, λ_j), j = 1..s.
    pub pairs: Vec<(usize, F)>,
    /// The matrix A of f in the new basis, anti-diagonal block layout.
    pub assembled: Matrix<F>,
    /// d = 3, n > 2: the λ with A = A_λ.
    pub a_lambda: Option<F>,
    /// d = 2: ω with f(e12) = ω⁻¹e12, f(e21) = ωe21, f(e11) = e22.
    pub stefan_omega: Option<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormResult<F: Field> {
    pub kind: MapKind,
    /// ord f for automorphisms, ord f² for anti-automorphisms.
    pub order: u64,
    /// U with new multiplicative matrix U·e·U⁻¹.
    pub basis_change: Matrix<F>,
    /// New e_ij as coordinate vectors in the standard basis.
    pub multiplicative_matrix: Vec<Vec<Vec<F>>>,
    /// f(e_ij) = ω_iω_j⁻¹e_ij (automorphism) or f²(e_ij) = ω_iω_j⁻¹e_ij (anti).
    pub omegas: Vec<F>,
    pub anti: Option<AntiBlocks<F>>,
}

impl<F: Field> NormalFormResult<F> {
    /// Sorted multiset {ω_iω_j⁻¹ : 1 ≤ i, j ≤ d}.
    pub fn ratio_multiset(&self) -> Vec<F> {
        ratio_multiset(&self.omegas)
    }
}

pub fn ratio_multiset<F: Field>(omegas: &[F]) -> Vec<F> {
    let mut out: Vec<F> = omegas
        .iter()
        .flat_map(|a| omegas.iter().map(move |b| a.mul_ref(&b.inv().expect("nonzero eigenvalue"))))
        .collect();
    out.sort();
    out
}

fn new_basis<F: Field>(u: &Matrix<F>) -> Result<(Vec<Vec<Vec<F>>>, Matrix<F>), ComatrixError> {
    let d = u.rows();
    let ui = u.inverse().ok_or(ComatrixError::NotInvertible)?;
    let mut e = vec![vec![vec![F::zero(); d * d]; d]; d];
    let mut cols = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    e[i][j][idx(d, k, l)] = u.get(i, k).mul_ref(ui.get(l, j));
                }
            }
            cols.push(e[i][j].clone());
        }
    }
    Ok((e, Matrix::from_cols(&cols, d * d)))
}

/// f in the basis given by the columns of `e`.
fn in_basis<F: Field>(f: &Matrix<F>, e: &Matrix<F>) -> Result<Matrix<F>, ComatrixError> {
    let ei = e.inverse().ok_or(ComatrixError::NotInvertible)?;
    Ok(ei.mul(f)?.mul(e)?)
}

fn is_root_of_unity_of<F: Field>(x: &F, n: u64) -> bool {
    x.pow(n) == F::one()
}

pub fn automorphism_normal_form<F: Field>(f: &ComatrixMap<F>) -> Result<NormalFormResult<F>, ComatrixError> {
    if f.kind != MapKind::Automorphism {
        return Err(ComatrixError::NotCoalgebraMap("expected an automorphism".into()));
    }
    let d = f.d;
    let u0 = recover_conjugator(f)?;
    let (order, _) = scalar_power(&u0, f.cap()).ok_or(ComatrixError::NotFiniteOrder(f.cap()))?;
    let eig = finite_order_eigendecomposition_in(&u0, f.cap(), f.field_order)?;
    let mut cols = Vec::new();
    let mut mus = Vec::new();
    for (mu, space) in &eig {
        for v in space.vectors() {
            cols.push(v.clone());
            mus.push(mu.clone());
        }
    }
    let p = Matrix::from_cols(&cols, d);
    let u = p.inverse().ok_or_else(|| ComatrixError::InternalMismatch("eigenvectors dependent".into()))?;
    let first_inv = mus[0].inv().expect("nonzero eigenvalue");
    let omegas: Vec<F> = mus.iter().map(|m| m.mul_ref(&first_inv)).collect();
    let (e, emat) = new_basis(&u)?;
    let g = in_basis(&f.matrix, &emat)?;
    let mut want = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let r = omegas[i].mul_ref(&omegas[j].inv().expect("nonzero"));
            if !is_root_of_unity_of(&r, order) {
                return Err(ComatrixError::InternalMismatch(format!("ω_{i}/ω_{j} is not an {order}-th root of unity")));
            }
            want.set(idx(d, i, j), idx(d, i, j), r);
        }
    }
    if g != want {
        return Err(ComatrixError::InternalMismatch("f is not diagonal in the new basis".into()));
    }
    Ok(NormalFormResult { kind: MapKind::Automorphism, order, basis_change: u, multiplicative_matrix: e, omegas, anti: None })
}

pub fn antiautomorphism_normal_form<F: Field>(f: &ComatrixMap<F>) -> Result<NormalFormResult<F>, ComatrixError> {
    if f.kind != MapKind::AntiAutomorphism {
        return Err(ComatrixError::NotCoalgebraMap("expected an anti-automorphism".into()));
    }
    let d = f.d;
    let a0 = recover_conjugator(f)?;
    let a0_inv = a0.inverse().ok_or(ComatrixError::NotInvertible)?;
    let b = a0.mul(&a0_inv.transpose())?;
    let (order, _) = scalar_power(&b, f.cap()).ok_or(ComatrixError::NotFiniteOrder(f.cap()))?;
    if order == 1 {
        return if d == 2 { involutive_stefan(f, &a0) } else { Err(ComatrixError::OrderOne) };
    }
    let eig = finite_order_eigendecomposition_in(&b, f.cap(), f.field_order)?;
    let one = F::one();
    let minus_one = one.neg_ref();
    let space_of = |w: &F| eig.iter().find(|(x, _)| x == w).map(|(_, s)| s.clone());
    let mut lambdas: Vec<F> = Vec::new();
    for (w, _) in &eig {
        if *w == one || *w == minus_one {
            continue;
        }
        let wi = w.inv().expect("nonzero eigenvalue");
        let rep = if *w <= wi { w.clone() } else { wi };
        if !lambdas.contains(&rep) {
            lambdas.push(rep);
        }
    }
    lambdas.sort();
    let mut cols: Vec<Vec<F>> = Vec::new();
    let mut omegas: Vec<F> = Vec::new();
    let mut pairs = Vec::new();
    let mut push = |w: &F, s: &SubspaceBasis<F>| {
        for v in s.vectors() {
            cols.push(v.clone());
            omegas.push(w.clone());
        }
    };
    for l in &lambdas {
        let s_plus = space_of(l).unwrap_or_else(|| SubspaceBasis::zero(d));
        let s_minus = space_of(&l.inv().expect("nonzero")).unwrap_or_else(|| SubspaceBasis::zero(d));
        if s_plus.dim() != s_minus.dim() {
            return Err(ComatrixError::InternalMismatch(format!("|I_+| = {} ≠ |I_−| = {}", s_plus.dim(), s_minus.dim())));
        }
        pairs.push((s_plus.dim(), l.clone()));
        push(l, &s_plus);
    }
    let s_p = space_of(&one).unwrap_or_else(|| SubspaceBasis::zero(d));
    let s_m = space_of(&minus_one).unwrap_or_else(|| SubspaceBasis::zero(d));
    let (a_plus, a_minus) = (s_p.dim(), s_m.dim());
    push(&one, &s_p);
    push(&minus_one, &s_m);
    for l in lambdas.iter().rev() {
        let li = l.inv().expect("nonzero");
        let s = space_of(&li).expect("paired eigenspace");
        push(&li, &s);
    }
    if d != a_plus + a_minus + 2 * pairs.iter().map(|(a, _)| a).sum::<usize>() {
        return Err(ComatrixError::InternalMismatch("block dimensions do not add up to d".into()));
    }
    let p = Matrix::from_cols(&cols, d);
    let mut u = p.inverse().ok_or_else(|| ComatrixError::InternalMismatch("eigenvectors dependent".into()))?;
    let mut a = u.mul(&a0)?.mul(&u.transpose())?;

    // d = 3, n > 2: A = [[0,0,λa],[0,p,0],[a,0,0]]; diag(1, 1, p/a) gives p·A_λ.
    let mut a_lambda = None;
    if d == 3 && order > 2 && a_plus == 1 && pairs.len() == 1 {
        let (lo, pp) = (a.get(2, 0).clone(), a.get(1, 1).clone());
        let scale = pp.div_ref(&lo).ok_or_else(|| ComatrixError::InternalMismatch("A_1 vanishes".into()))?;
        let dm = Matrix::diagonal(&[F::one(), F::one(), scale]);
        u = dm.mul(&u)?;
        a = u.mul(&a0)?.mul(&u.transpose())?;
        a_lambda = Some(pairs[0].1.clone());
    }
    // A is determined up to a scalar; make the first nonzero entry of the last row 1.
    let lead = a.row(d - 1).iter().find(|x| !x.is_zero()).expect("invertible").inv().expect("nonzero");
    let a = a.scale(&lead);

    for i in 0..d {
        for j in 0..d {
            if *a.get(i, j) != omegas[i].mul_ref(a.get(j, i)) {
                return Err(ComatrixError::InternalMismatch(format!("a_{i}{j} ≠ ω_{i}·a_{j}{i}")));
            }
        }
    }
    let off = pairs.iter().map(|(x, _)| x).sum::<usize>();
    for i in 0..a_plus {
        for j in 0..a_plus {
            if a.get(off + i, off + j) != a.get(off + j, off + i) {
                return Err(ComatrixError::InternalMismatch("A_+ is not symmetric".into()));
            }
        }
    }
    let off_m = off + a_plus;
    for i in 0..a_minus {
        for j in 0..a_minus {
            if *a.get(off_m + i, off_m + j) != a.get(off_m + j, off_m + i).neg_ref() {
                return Err(ComatrixError::InternalMismatch("A_− is not antisymmetric".into()));
            }
        }
    }
    for (_, li) in &pairs {
        if !is_root_of_unity_of(&li.mul_ref(li), order) {
            return Err(ComatrixError::InternalMismatch("(a): λ² is not an n-th root of unity".into()));
        }
        for (_, lj) in &pairs {
            let ok = is_root_of_unity_of(&li.mul_ref(&lj.inv().expect("nonzero")), order)
                && is_root_of_unity_of(&li.mul_ref(lj), order);
            if !ok {
                return Err(ComatrixError::InternalMismatch("(a) fails".into()));
            }
        }
        if a_plus > 0 && !is_root_of_unity_of(li, order) {
            return Err(ComatrixError::InternalMismatch("(b) fails".into()));
        }
        if a_minus > 0 && !is_root_of_unity_of(&li.neg_ref(), order) {
            return Err(ComatrixError::InternalMismatch("(c) fails".into()));
        }
    }

    let (e, emat) = new_basis(&u)?;
    let g = in_basis(&f.matrix, &emat)?;
    let expected = ComatrixMap::from_conjugator(&a, MapKind::AntiAutomorphism, f.field_order)?;
    if g != expected.matrix {
        return Err(ComatrixError::InternalMismatch("f is not afforded by A in the new basis".into()));
    }
    if let Some(l) = &a_lambda {
        let mut want = Matrix::zeros(3, 3);
        want.set(0, 2, l.clone());
        want.set(1, 1, F::one());
        want.set(2, 0, F::one());
        if a != want {
            return Err(ComatrixError::InternalMismatch("A is not A_λ".into()));
        }
        let g2 = g.mul(&g)?;
        for i in 0..3 {
            for j in 0..3 {
                let k = idx(3, i, j);
                let want = pow_signed(l, j as i64 - i as i64);
                if *g2.get(k, k) != want {
                    return Err(ComatrixError::InternalMismatch(format!("f²(e_{i}{j}) ≠ λ^(j−i) e_{i}{j}")));
                }
            }
        }
    }
    let stefan_omega = if d == 2 {
        // A = [[0, λ], [1, 0]]: f(e12) = λe12, f(e21) = λ⁻¹e21, f(e11) = e22.
        let w = pairs[0].1.inv().expect("nonzero");
        let ok = *g.get(idx(2, 0, 1), idx(2, 0, 1)) == w.inv().expect("nonzero")
            && *g.get(idx(2, 1, 0), idx(2, 1, 0)) == w
            && *g.get(idx(2, 1, 1), idx(2, 0, 0)) == F::one()
            && *g.get(idx(2, 0, 0), idx(2, 1, 1)) == F::one();
        if !ok {
            return Err(ComatrixError::InternalMismatch("d = 2 form differs from Stefan's".into()));
        }
        Some(w)
    } else {
        None
    };
    Ok(NormalFormResult {
        kind: MapKind::AntiAutomorphism,
        order,
        basis_change: u,
        multiplicative_matrix: e,
        omegas,
        anti: Some(AntiBlocks { a_plus, a_minus, pairs, assembled: a, a_lambda, stefan_omega }),
    })
}

/// d = 2 with f² = id: A is symmetric (ω = 1) or skew (ω = −1). The
/// symmetric case needs an isotropic vector in the field; without one the
/// map stays `OrderOne`.
fn involutive_stefan<F: Field>(f: &ComatrixMap<F>, a0: &Matrix<F>) -> Result<NormalFormResult<F>, ComatrixError> {
    let symmetric = *a0 == a0.transpose();
    let (u, w) = if symmetric {
        let (a, b, c) = (a0.get(0, 0).clone(), a0.get(0, 1).clone(), a0.get(1, 1).clone());
        let iso = if a.is_zero() {
            vec![F::one(), F::zero()]
        } else {
            let two_b = b.add_ref(&b);
            let t = F::roots(&[c, two_b, a], f.field_order).into_iter().next().ok_or(ComatrixError::OrderOne)?;
            vec![t, F::one()]
        };
        let form = |x: &[F], y: &[F]| a0.mul_vec(y).iter().zip(x).fold(F::zero(), |s, (p, q)| s.add_ref(&p.mul_ref(q)));
        let k = (0..2).find(|&k| !form(&iso, &Matrix::<F>::identity(2).col(k)).is_zero()).ok_or(ComatrixError::NotInvertible)?;
        let mut v = Matrix::<F>::identity(2).col(k);
        let s = form(&iso, &v).inv().expect("nonzero");
        v = v.iter().map(|x| x.mul_ref(&s)).collect();
        let half = form(&v, &v).div_ref(&F::from_i64(2)).expect("characteristic zero");
        let v: Vec<F> = v.iter().zip(&iso).map(|(x, y)| x.sub_ref(&half.mul_ref(y))).collect();
        (Matrix::from_rows(vec![iso, v]).map_err(|_| ComatrixError::NotInvertible)?, F::one())
    } else {
        (Matrix::identity(2), F::one().neg_ref())
    };
    let a = u.mul(a0)?.mul(&u.transpose())?;
    let lead = a.row(1).iter().find(|x| !x.is_zero()).ok_or(ComatrixError::NotInvertible)?.inv().expect("nonzero");
    let a = a.scale(&lead);
    let mut want = Matrix::zeros(2, 2);
    want.set(0, 1, w.clone());
    want.set(1, 0, F::one());
    if a != want {
        return Err(ComatrixError::InternalMismatch("involutive form differs from Stefan's".into()));
    }
    let (e, emat) = new_basis(&u)?;
    let g = in_basis(&f.matrix, &emat)?;
    if g != ComatrixMap::from_conjugator(&a, MapKind::AntiAutomorphism, f.field_order)?.matrix {
        return Err(ComatrixError::InternalMismatch("f is not afforded by A in the new basis".into()));
    }
    let ok = *g.get(idx(2, 0, 1), idx(2, 0, 1)) == w
        && *g.get(idx(2, 1, 0), idx(2, 1, 0)) == w
        && *g.get(idx(2, 1, 1), idx(2, 0, 0)) == F::one()
        && *g.get(idx(2, 0, 0), idx(2, 1, 1)) == F::one();
    if !ok {
        return Err(ComatrixError::InternalMismatch("d = 2 form differs from Stefan's".into()));
    }
    let (a_plus, a_minus) = if symmetric { (2, 0) } else { (0, 2) };
    Ok(NormalFormResult {
        kind: MapKind::AntiAutomorphism,
        order: 1,
        basis_change: u,
        multiplicative_matrix: e,
        omegas: vec![w.clone(), w.clone()],
        anti: Some(AntiBlocks { a_plus, a_minus, pairs: Vec::new(), assembled: a, a_lambda: None, stefan_omega: Some(w) }),
    })
}

fn pow_signed<F: Field>(x: &F, e: i64) -> F {
    if e >= 0 {
        x.pow(e as u64)
    } else {
        x.inv().expect("nonzero").pow((-e) as u64)
    }
}

/// Normal form of a map given in either kind.
pub fn normal_form<F: Field>(f: &ComatrixMap<F>) -> Result<NormalFormResult<F>, ComatrixError> {
    match f.kind {
        MapKind::Automorphism => automorphism_normal_form(f),
        MapKind::AntiAutomorphism => antiautomorphism_normal_form(f),
    }
}

/// Which of the two maps could be inferred from a raw matrix.
pub fn detect_kind<F: Field>(d: usize, matrix: &Matrix<F>, field_order: u32) -> Result<ComatrixMap<F>, ComatrixError> {
    match ComatrixMap::new(d, MapKind::Automorphism, matrix.clone(), field_order) {
        Ok(f) => Ok(f),
        Err(ComatrixError::NotCoalgebraMap(_)) => ComatrixMap::new(d, MapKind::AntiAutomorphism, matrix.clone(), field_order),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAntipodeReport<F: Field> {
    pub comodule_dim: usize,
    pub antipode_order_on_block: u64,
    /// Normal form of S²|_block.
    pub square: NormalFormResult<F>,
    /// Normal form of S|_block, or `Err(OrderOne)` when S² is the identity there.
    pub antipode: Result<NormalFormResult<F>, ComatrixError>,
}

/// Normal forms of S and S² restricted to an S-stable simple block.
pub fn verify_antipode_on_block<F: Field>(
    h: &HopfAlgebraSC<F>,
    block: &SimpleBlock<F>,
) -> Result<BlockAntipodeReport<F>, ComatrixError> {
    let d = block.comodule_dim;
    let e = block
        .multiplicative_matrix
        .as_ref()
        .ok_or_else(|| ComatrixError::InternalMismatch("block has no multiplicative matrix".into()))?;
    let cols: Vec<Vec<F>> = e.iter().flat_map(|r| r.iter().cloned()).collect();
    let basis = SubspaceBasis::from_spanning(h.dim(), cols.clone());
    let s = h.antipode();
    if cols.iter().any(|v| !basis.contains(&s.mul_vec(v))) {
        return Err(ComatrixError::NotStable);
    }
    let emat = Matrix::from_cols(&cols, h.dim());
    let coords: Vec<Vec<F>> = cols
        .iter()
        .map(|v| emat.solve(&s.mul_vec(v)).ok_or_else(|| ComatrixError::InternalMismatch("coordinates".into())))
        .collect::<Result<_, _>>()?;
    let sm = Matrix::from_cols(&coords, d * d);
    let order = sm.order(default_order_cap(h.dim())).ok_or(ComatrixError::NotFiniteOrder(default_order_cap(h.dim())))?;
    let field = h.field_order();
    let s2 = ComatrixMap::new(d, MapKind::Automorphism, sm.mul(&sm)?, field)?;
    let square = automorphism_normal_form(&s2)?;
    let anti = ComatrixMap::new(d, MapKind::AntiAutomorphism, sm, field)?;
    let antipode = antiautomorphism_normal_form(&anti);
    Ok(BlockAntipodeReport { comodule_dim: d, antipode_order_on_block: order, square, antipode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CycNumber;
    use num_traits::{One, Zero};

    fn c(n: i64) -> CycNumber {
        CycNumber::from_int(n)
    }

    #[test]
    fn identity_conjugator() {
        let f = ComatrixMap::new(2, MapKind::Automorphism, Matrix::<CycNumber>::identity(4), 1).unwrap();
        assert_eq!(recover_conjugator(&f).unwrap(), Matrix::identity(2));
        let nf = automorphism_normal_form(&f).unwrap();
        assert_eq!(nf.order, 1);
        assert!(nf.omegas.iter().all(|w| w.is_one()));
    }

    #[test]
    fn diagonal_conjugation() {
        let z = CycNumber::root_of_unity(3, 1);
        let u = Matrix::diagonal(&[CycNumber::one(), z.clone()]);
        let f = ComatrixMap::from_conjugator(&u, MapKind::Automorphism, 3).unwrap();
        let f = ComatrixMap::new(2, MapKind::Automorphism, f.matrix, 3).unwrap();
        assert_eq!(recover_conjugator(&f).unwrap(), u);
        let nf = automorphism_normal_form(&f).unwrap();
        assert_eq!(nf.order, 3);
        let mut want = vec![CycNumber::one(), CycNumber::one(), z.clone(), z.inv().unwrap()];
        want.sort();
        assert_eq!(nf.ratio_multiset(), want);
    }

    #[test]
    fn transpose_is_anti_with_identity_conjugator() {
        let f = ComatrixMap::from_conjugator(&Matrix::<CycNumber>::identity(2), MapKind::AntiAutomorphism, 1).unwrap();
        let f = ComatrixMap::new(2, MapKind::AntiAutomorphism, f.matrix, 1).unwrap();
        assert_eq!(recover_conjugator(&f).unwrap(), Matrix::identity(2));
        // x² + y² has no isotropic vector over Q.
        assert_eq!(antiautomorphism_normal_form(&f).unwrap_err(), ComatrixError::OrderOne);
        assert!(ComatrixMap::new(2, MapKind::Automorphism, f.matrix.clone(), 1).is_err());
    }

    #[test]
    fn transpose_over_gaussian_field_is_stefan_with_trivial_omega() {
        let f = ComatrixMap::from_conjugator(&Matrix::<CycNumber>::identity(2), MapKind::AntiAutomorphism, 4).unwrap();
        let nf = antiautomorphism_normal_form(&f).unwrap();
        assert_eq!(nf.order, 1);
        assert_eq!(nf.anti.unwrap().stefan_omega, Some(CycNumber::one()));
        let skew = Matrix::from_rows(vec![vec![CycNumber::zero(), CycNumber::from_int(3)], vec![CycNumber::from_int(-3), CycNumber::zero()]]).unwrap();
        let f = ComatrixMap::from_conjugator(&skew, MapKind::AntiAutomorphism, 1).unwrap();
        let anti = antiautomorphism_normal_form(&f).unwrap().anti.unwrap();
        assert_eq!((anti.a_minus, anti.stefan_omega), (2, Some(CycNumber::from_int(-1))));
    }

    #[test]
    fn stefan_two_by_two() {
        // Ã = [[0,1],[-1/ω... ]] built from A = [[0, λ], [1, 0]] with λ = ζ_3.
        let l = CycNumber::root_of_unity(3, 1);
        let a = Matrix::from_rows(vec![vec![CycNumber::zero(), l.clone()], vec![CycNumber::one(), CycNumber::zero()]]).unwrap();
        let v = Matrix::from_rows(vec![vec![c(1), c(2)], vec![c(1), c(3)]]).unwrap();
        let at = v.mul(&a).unwrap().mul(&v.transpose()).unwrap();
        let f = ComatrixMap::from_conjugator(&at, MapKind::AntiAutomorphism, 3).unwrap();
        let nf = antiautomorphism_normal_form(&f).unwrap();
        let anti = nf.anti.unwrap();
        assert_eq!(anti.a_plus + anti.a_minus, 0);
        assert_eq!(anti.pairs.len(), 1);
        let w = anti.stefan_omega.unwrap();
        assert!(w == l || w == l.inv().unwrap());
    }
}
