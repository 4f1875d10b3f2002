//! Subspaces in canonical reduced row echelon form.

use super::field::Field;
use super::LinalgError;

/// Incremental reduced-echelon accumulator. Each inserted vector is reduced
/// against the rows so far; new pivots are cleared from existing rows, so the
/// rows stay fully reduced and sorting them by pivot yields the RREF.
#[derive(Clone, Debug)]
pub struct EchelonBuilder<F: Field> {
    ncols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBuilder<F> {
    pub fn new(ncols: usize) -> Self {
        EchelonBuilder { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Residue of `v` modulo the current row space.
    pub fn reduce(&self, v: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, rj) in row.iter().enumerate() {
                if !rj.is_zero() {
                    v[j] = v[j].sub_ref(&c.mul_ref(rj));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    row[j] = row[j].sub_ref(&c.mul_ref(vj));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn finish(self) -> SubspaceBasis<F> {
        let mut pairs: Vec<(usize, Vec<F>)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, rows) = pairs.into_iter().unzip();
        SubspaceBasis { ambient: self.ncols, rows, pivots }
    }
}

/// A subspace of F^n stored as its unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        SubspaceBasis { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_spanning<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let mut b = EchelonBuilder::new(ambient);
        for v in vectors {
            if b.is_full() {
                break;
            }
            b.insert(v);
        }
        b.finish()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn builder(&self) -> EchelonBuilder<F> {
        EchelonBuilder { ncols: self.ambient, rows: self.rows.clone(), pivots: self.pivots.clone() }
    }

    pub fn residue(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (j, rj) in row.iter().enumerate() {
                if !rj.is_zero() {
                    w[j] = w[j].sub_ref(&c.mul_ref(rj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.residue(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates with respect to the echelon rows, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                o.add_mul_assign(c, r);
            }
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        let mut b = self.builder();
        for r in &other.rows {
            if b.is_full() {
                break;
            }
            b.insert(r.clone());
        }
        Ok(b.finish())
    }

    /// Orthogonal complement under the standard pairing (the annihilator in the dual).
    pub fn annihilator(&self) -> Self {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let vecs = (0..self.ambient).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = vec![F::zero(); self.ambient];
            v[f] = F::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = row[f].neg_ref();
                }
            }
            v
        });
        SubspaceBasis::from_spanning(self.ambient, vecs)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        if self.is_subspace_of(other) {
            return Ok(self.clone());
        }
        if other.is_subspace_of(self) {
            return Ok(other.clone());
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Whether `self ∩ other = 0` and `self + other` equals `target`.
    pub fn is_direct_sum_to(&self, other: &Self, target: &Self) -> bool {
        match self.sum(other) {
            Ok(s) => s == *target && s.dim() == self.dim() + other.dim(),
            Err(_) => false,
        }
    }

    /// Extends this basis by standard vectors to a basis of the whole space;
    /// returns only the added vectors.
    pub fn complement_standard(&self) -> Vec<Vec<F>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.ambient];
                v[f] = F::one();
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::Rational;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| Rational::from_integer(a)).collect()
    }

    #[test]
    fn canonical_regardless_of_spanning_set() {
        let a = SubspaceBasis::from_spanning(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = SubspaceBasis::from_spanning(3, vec![v(&[1, 3, 4]), v(&[2, 5, 7]), v(&[1, 2, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.vectors(), &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
    }

    #[test]
    fn intersect_examples() {
        let u = SubspaceBasis::from_spanning(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let w = SubspaceBasis::from_spanning(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.intersect(&w).unwrap(), SubspaceBasis::from_spanning(3, vec![v(&[0, 1, 0])]));
        let l1 = SubspaceBasis::from_spanning(2, vec![v(&[1, 0])]);
        let l2 = SubspaceBasis::from_spanning(2, vec![v(&[1, 1])]);
        assert!(l1.intersect(&l2).unwrap().is_zero());
        assert!(matches!(u.intersect(&l1), Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn annihilator_pairs_to_zero() {
        let u = SubspaceBasis::from_spanning(4, vec![v(&[1, 2, 0, -1]), v(&[0, 1, 1, 1])]);
        let a = u.annihilator();
        assert_eq!(a.dim(), 2);
        for x in u.vectors() {
            for y in a.vectors() {
                let dot = x.iter().zip(y).fold(Rational::from_integer(0), |s, (p, q)| s.add_r(&p.mul_r(q)));
                assert_eq!(dot, Rational::from_integer(0));
            }
        }
        assert_eq!(a.annihilator(), u);
    }

    #[test]
    fn coordinates_round_trip() {
        let u = SubspaceBasis::from_spanning(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 7, 9]);
        let c = u.coordinates(&x).unwrap();
        assert_eq!(u.combine(&c), x);
        assert!(u.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
