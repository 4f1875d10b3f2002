//! Coradical (wedge) filtration, Nichols layers P_n and their isotypic
//! bicomodule components.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, Matrix, SubspaceBasis};

use super::coradical::{simple_decomposition, SimpleDecomposition};
use super::projection::coideal_projection;
use super::{CoalgebraError, CoalgebraSC};

/// Isotypic type (τ, γ): left and right block indices of the coradical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IsotypicKey {
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug)]
pub struct Filtration<F: Field> {
    /// D_0 ⊆ D_1 ⊆ …, the last one the whole space.
    pub stages: Vec<SubspaceBasis<F>>,
    /// P_0 = 0, P_1, …, one per stage (empty until Nichols layers are built).
    pub layers: Vec<SubspaceBasis<F>>,
    pub projection: Option<Matrix<F>>,
    /// For each n, nonzero dims of P_n^{τ,γ}.
    pub isotypic: Vec<BTreeMap<IsotypicKey, usize>>,
    /// For each n, the types with P_n^{τ,γ} ⊄ P_{n−1}.
    pub nondegenerate: Vec<BTreeSet<IsotypicKey>>,
}

impl<F: Field> Filtration<F> {
    pub fn stage_dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.dim()).collect()
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(|s| s.dim()).collect()
    }

    /// Coradical length: index of the last stage.
    pub fn length(&self) -> usize {
        self.stages.len().saturating_sub(1)
    }

    pub fn isotypic_dim(&self, n: usize, key: IsotypicKey) -> usize {
        self.isotypic.get(n).and_then(|m| m.get(&key)).copied().unwrap_or(0)
    }
}

/// D_n = Δ⁻¹(D_0⊗C + C⊗D_{n−1}), whose annihilator is spanned by the
/// contractions with J⊗D_{n−1}^⊥.
pub fn wedge_filtration<F: Field>(c: &CoalgebraSC<F>) -> Result<Filtration<F>, CoalgebraError> {
    let n = c.dim();
    let d0 = super::coradical::coradical(c);
    let j = d0.annihilator();
    let mut stages = vec![d0];
    while stages.last().expect("nonempty").dim() < n {
        let prev = stages.last().expect("nonempty");
        let prev_perp = prev.annihilator();
        let next = c.delta_preimage_of_pairs(&[(j.vectors(), prev_perp.vectors())]);
        if next.dim() <= prev.dim() || stages.len() > n {
            return Err(CoalgebraError::InternalMismatch(format!(
                "wedge filtration stalls at dimension {} of {n}",
                prev.dim()
            )));
        }
        stages.push(next);
    }
    Ok(Filtration { stages, layers: Vec::new(), projection: None, isotypic: Vec::new(), nondegenerate: Vec::new() })
}

/// Whether Δ(D_n) ⊆ Σ_i D_i⊗D_{n−i} for every stage (dense check in C⊗C).
pub fn delta_respects_stages<F: Field>(c: &CoalgebraSC<F>, stages: &[SubspaceBasis<F>]) -> bool {
    let n = c.dim();
    stages.iter().enumerate().all(|(k, dk)| {
        let span = SubspaceBasis::from_spanning(
            n * n,
            (0..=k).flat_map(|i| {
                stages[i].vectors().iter().flat_map(move |a| {
                    stages[k - i].vectors().iter().map(move |b| {
                        a.iter().flat_map(|x| b.iter().map(move |y| x.mul_ref(y))).collect::<Vec<F>>()
                    })
                })
            }),
        );
        dk.vectors().iter().all(|x| span.contains(c.delta_of(x).data()))
    })
}

/// P_n computed recursively and compared with D_n ∩ I, I = ker π.
pub fn nichols_layers<F: Field>(
    c: &CoalgebraSC<F>,
    wedge: &Filtration<F>,
    pi: &Matrix<F>,
) -> Result<Vec<SubspaceBasis<F>>, CoalgebraError> {
    let n = c.dim();
    let i_space = pi.kernel();
    let d0 = &wedge.stages[0];
    let s_space = i_space.annihilator();
    let j_space = d0.annihilator();
    let mut layers = vec![SubspaceBasis::zero(n)];
    if wedge.stages.len() == 1 {
        return Ok(layers);
    }

    // P_1 = Δ⁻¹(D_0⊗I + I⊗D_0), annihilated by I^⊥⊗I^⊥ and J⊗J.
    let p1 = c.delta_preimage_of_pairs(&[(s_space.vectors(), s_space.vectors()), (j_space.vectors(), j_space.vectors())]);
    layers.push(p1);

    let pt = pi.transpose();
    for level in 2..wedge.stages.len() {
        let prev = layers.last().expect("nonempty").clone();
        // Basis adapted to D_0 ⊕ P_1 ⊂ … ⊂ P_{n−1} ⊂ I, with levels.
        let mut basis: Vec<Vec<F>> = Vec::new();
        let mut lvl: Vec<usize> = Vec::new();
        for v in d0.vectors() {
            basis.push(v.clone());
            lvl.push(0);
        }
        let mut acc = SubspaceBasis::zero(n);
        for (k, p) in layers.iter().enumerate().skip(1) {
            for v in extend_basis(&acc, p) {
                basis.push(v);
                lvl.push(k);
            }
            acc = p.clone();
        }
        let complement = extend_basis(&prev, &i_space);
        for v in &complement {
            basis.push(v.clone());
            lvl.push(level);
        }
        let b = Matrix::from_cols(&basis, n);
        let phi = b
            .inverse()
            .ok_or_else(|| CoalgebraError::InternalMismatch("adapted basis is singular (π kernel meets the coradical)".into()))?;
        let phit = phi.transpose();
        let forbidden: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |w| (u, w)))
            .filter(|&(u, w)| lvl[u] == 0 || lvl[w] == 0 || lvl[u] + lvl[w] > level)
            .collect();
        let coeff: Vec<Matrix<F>> = complement
            .iter()
            .map(|x| {
                let m = c.delta_of(x);
                let pm = pi.mul(&m).expect("square");
                let mp = m.mul(&pt).expect("square");
                let dprime = m.sub(&pm).and_then(|t| t.sub(&mp)).expect("square");
                phi.mul(&dprime).and_then(|t| t.mul(&phit)).expect("square")
            })
            .collect();
        let rows = forbidden.iter().map(|&(u, w)| coeff.iter().map(|t| t.get(u, w).clone()).collect::<Vec<F>>());
        let sol = SubspaceBasis::from_spanning(complement.len(), rows).annihilator();
        let new_vectors = sol.vectors().iter().map(|y| {
            let mut v = vec![F::zero(); n];
            for (yk, ck) in y.iter().zip(&complement) {
                for (o, x) in v.iter_mut().zip(ck) {
                    o.add_mul_assign(yk, x);
                }
            }
            v
        });
        let pn = prev.sum(&SubspaceBasis::from_spanning(n, new_vectors))?;
        layers.push(pn);
    }

    for (k, (p, d)) in layers.iter().zip(&wedge.stages).enumerate() {
        let via_wedge = d.intersect(&i_space)?;
        if *p != via_wedge {
            return Err(CoalgebraError::InternalMismatch(format!(
                "P_{k}: recursive definition gives dim {}, D_{k} ∩ I gives dim {}",
                p.dim(),
                via_wedge.dim()
            )));
        }
        if !d0.is_direct_sum_to(p, d) {
            return Err(CoalgebraError::InternalMismatch(format!("D_{k} is not D_0 ⊕ P_{k}")));
        }
    }
    Ok(layers)
}

/// Vectors extending a basis of `sub` to a basis of `sup` (sub ⊆ sup).
fn extend_basis<F: Field>(sub: &SubspaceBasis<F>, sup: &SubspaceBasis<F>) -> Vec<Vec<F>> {
    let mut b = crate::linalg::subspace::EchelonBuilder::new(sup.ambient_dim());
    for v in sub.vectors() {
        b.insert(v.clone());
    }
    sup.vectors().iter().filter(|v| b.insert((*v).clone())).cloned().collect()
}

/// Idempotents f_τ ∈ C* lifting the block idempotents through π.
fn block_functionals<F: Field>(dec: &SimpleDecomposition<F>, pi: &Matrix<F>) -> Vec<Vec<F>> {
    let n = pi.rows();
    let d0 = &dec.coradical;
    let pt = pi.transpose();
    dec.units
        .iter()
        .map(|u| {
            let mut e = vec![F::zero(); d0.dim()];
            for (i, row) in u.iter().enumerate() {
                for (x, y) in e.iter_mut().zip(&row[i]) {
                    *x = x.add_ref(y);
                }
            }
            let mut lifted = vec![F::zero(); n];
            for (c, &p) in e.iter().zip(d0.pivots()) {
                lifted[p] = c.clone();
            }
            pt.mul_vec(&lifted)
        })
        .collect()
}

/// x ↦ (f⊗id)Δx (left) or (id⊗f)Δx (right).
fn contraction<F: Field>(c: &CoalgebraSC<F>, f: &[F], left: bool) -> Matrix<F> {
    let n = c.dim();
    let mut m: Matrix<F> = Matrix::zeros(n, n);
    for i in 0..n {
        for (j, k, x) in c.delta_sparse(i) {
            let (a, out) = if left { (*j, *k) } else { (*k, *j) };
            if f[a].is_zero() {
                continue;
            }
            let v = m.get(out, i).add_ref(&f[a].mul_ref(x));
            m.set(out, i, v);
        }
    }
    m
}

/// dim P_n^{τ,γ} = dim L_τ R_γ(P_n) for every n, with nondegeneracy flags.
pub fn isotypic_dimensions<F: Field>(
    c: &CoalgebraSC<F>,
    dec: &SimpleDecomposition<F>,
    pi: &Matrix<F>,
    layers: &[SubspaceBasis<F>],
) -> Result<(Vec<BTreeMap<IsotypicKey, usize>>, Vec<BTreeSet<IsotypicKey>>), CoalgebraError> {
    let n = c.dim();
    let fs = block_functionals(dec, pi);
    let ls: Vec<Matrix<F>> = fs.iter().map(|f| contraction(c, f, true)).collect();
    let rs: Vec<Matrix<F>> = fs.iter().map(|f| contraction(c, f, false)).collect();
    let mut tables = Vec::new();
    let mut flags = Vec::new();
    for (k, p) in layers.iter().enumerate() {
        let mut table = BTreeMap::new();
        let mut nd = BTreeSet::new();
        if !p.is_zero() {
            let mut total = 0;
            for (t, l) in ls.iter().enumerate() {
                for (g, r) in rs.iter().enumerate() {
                    let img = SubspaceBasis::from_spanning(n, p.vectors().iter().map(|v| l.mul_vec(&r.mul_vec(v))));
                    if img.is_zero() {
                        continue;
                    }
                    let key = IsotypicKey { left: t, right: g };
                    if k > 0 && !img.is_subspace_of(&layers[k - 1]) {
                        nd.insert(key);
                    }
                    total += img.dim();
                    table.insert(key, img.dim());
                }
            }
            if total != p.dim() {
                return Err(CoalgebraError::InternalMismatch(format!(
                    "isotypic components of P_{k} sum to {total}, expected {}",
                    p.dim()
                )));
            }
        }
        tables.push(table);
        flags.push(nd);
    }
    Ok((tables, flags))
}

/// Wedge filtration, coideal projection, Nichols layers and isotypic tables.
pub fn full_filtration<F: Field>(c: &CoalgebraSC<F>) -> Result<(Filtration<F>, SimpleDecomposition<F>), CoalgebraError> {
    let dec = simple_decomposition(c)?;
    full_filtration_with(c, dec)
}

pub fn full_filtration_with<F: Field>(
    c: &CoalgebraSC<F>,
    dec: SimpleDecomposition<F>,
) -> Result<(Filtration<F>, SimpleDecomposition<F>), CoalgebraError> {
    let mut filt = wedge_filtration(c)?;
    let pi = coideal_projection(c, &dec)?;
    let layers = nichols_layers(c, &filt, &pi)?;
    let (iso, nd) = isotypic_dimensions(c, &dec, &pi, &layers)?;
    filt.layers = layers;
    filt.projection = Some(pi);
    filt.isotypic = iso;
    filt.nondegenerate = nd;
    Ok((filt, dec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CycNumber;
    use num_traits::{One, Zero};

    type C = CoalgebraSC<CycNumber>;

    /// Divided-power coalgebra: Δc_n = Σ c_i⊗c_{n−i}, n < len.
    fn divided_power(len: usize) -> C {
        let mut quads = Vec::new();
        for n in 0..len {
            for i in 0..=n {
                quads.push((n, i, n - i, CycNumber::one()));
            }
        }
        let eps = (0..len).map(|i| if i == 0 { CycNumber::one() } else { CycNumber::zero() }).collect();
        C::new(len, quads, eps, vec![], 1).unwrap()
    }

    #[test]
    fn cosemisimple_has_single_stage() {
        let c = C::grouplike_coalgebra(3, 3);
        let (f, _) = full_filtration(&c).unwrap();
        assert_eq!(f.stage_dims(), vec![3]);
        assert_eq!(f.layer_dims(), vec![0]);
        assert!(f.isotypic.iter().all(|m| m.is_empty()));
    }

    #[test]
    fn divided_powers_grow_by_one() {
        let c = divided_power(4);
        let (f, dec) = full_filtration(&c).unwrap();
        assert_eq!(f.stage_dims(), vec![1, 2, 3, 4]);
        assert_eq!(f.layer_dims(), vec![0, 1, 2, 3]);
        assert_eq!(dec.profile(), vec![1]);
        let key = IsotypicKey { left: 0, right: 0 };
        assert_eq!(f.isotypic_dim(3, key), 3);
        assert!(f.nondegenerate[3].contains(&key));
    }

    #[test]
    fn wedge_stages_satisfy_delta_bound() {
        let c = divided_power(5);
        let f = wedge_filtration(&c).unwrap();
        assert!(delta_respects_stages(&c, &f.stages));
    }
}
