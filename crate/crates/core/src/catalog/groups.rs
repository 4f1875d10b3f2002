//! Group algebras from explicit multiplication tables.

use num_traits::{One, Zero};

use crate::hopf::{HopfAlgebraSC, HopfError};
use crate::linalg::{CycNumber, Matrix};

/// A finite group: `table[a][b]` is the index of a·b, element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("group table has inverses")
    }

    pub fn exponent(&self) -> u32 {
        use num_integer::Integer;
        (0..self.order())
            .map(|a| {
                let (mut x, mut k) = (a, 1u32);
                while x != 0 {
                    x = self.table[x][a];
                    k += 1;
                }
                k
            })
            .fold(1, |acc, k| acc.lcm(&k))
    }

    /// C_{n_1} × … × C_{n_r}, elements in mixed radix.
    pub fn abelian(moduli: &[usize]) -> GroupTable {
        let n: usize = moduli.iter().product();
        let digits = |mut i: usize| -> Vec<usize> {
            let mut d = vec![0; moduli.len()];
            for k in (0..moduli.len()).rev() {
                d[k] = i % moduli[k];
                i /= moduli[k];
            }
            d
        };
        let index = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (x, m)| acc * m + x);
        let table = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let s: Vec<usize> = digits(b).iter().zip(&da).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n).map(|i| format!("{:?}", digits(i))).collect();
        let name = moduli.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x");
        GroupTable { name, labels, table }
    }

    /// Upper unitriangular 3×3 matrices over F_3: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
    pub fn heisenberg27() -> GroupTable {
        let elems: Vec<[usize; 3]> = (0..27).map(|i| [i / 9, (i / 3) % 3, i % 3]).collect();
        let index = |e: [usize; 3]| e[0] * 9 + e[1] * 3 + e[2];
        let table = elems
            .iter()
            .map(|x| {
                elems
                    .iter()
                    .map(|y| index([(x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3]))
                    .collect()
            })
            .collect();
        let labels = elems.iter().map(|e| format!("({},{},{})", e[0], e[1], e[2])).collect();
        GroupTable { name: "Heis27".into(), labels, table }
    }

    /// C_9 ⋊ C_3 with the generator of C_3 acting by a ↦ 4a: (a,b)(a',b') = (a + 4^b a', b + b').
    pub fn c9_semidirect_c3() -> GroupTable {
        let elems: Vec<[usize; 2]> = (0..27).map(|i| [i / 3, i % 3]).collect();
        let pow4 = [1, 4, 7];
        let table = elems
            .iter()
            .map(|x| {
                elems
                    .iter()
                    .map(|y| ((x[0] + pow4[x[1]] * y[0]) % 9) * 3 + (x[1] + y[1]) % 3)
                    .collect()
            })
            .collect();
        let labels = elems.iter().map(|e| format!("({},{})", e[0], e[1])).collect();
        GroupTable { name: "C9sdC3".into(), labels, table }
    }

    /// kG over Q(ζ_m) with m the exponent of G, so that k^G splits.
    pub fn group_algebra(&self) -> Result<HopfAlgebraSC<CycNumber>, HopfError> {
        let n = self.order();
        let m = self.exponent();
        let one = CycNumber::one().embed(m);
        let zero = CycNumber::zero().embed(m);
        let mut mu = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mu.push((a, b, self.table[a][b], one.clone()));
            }
        }
        let delta: Vec<_> = (0..n).map(|a| (a, a, a, one.clone())).collect();
        let mut unit = vec![zero.clone(); n];
        unit[0] = one.clone();
        let mut s = Matrix::zeros(n, n);
        for a in 0..n {
            s.set(self.inverse(a), a, one.clone());
        }
        HopfAlgebraSC::new(n, mu, unit, delta, vec![one; n], s, self.labels.clone(), m)
    }
}
