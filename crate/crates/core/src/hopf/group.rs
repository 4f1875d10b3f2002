//! The group of grouplike elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Field;

use super::{HopfAlgebraSC, HopfError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStructure<F: Field> {
    pub elements: Vec<Vec<F>>,
    /// table[a][b] = index of elements[a]·elements[b].
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub orders: Vec<u64>,
    pub abelian: bool,
    /// Invariant factors d_1 | d_2 | … when abelian.
    pub invariant_factors: Option<Vec<u64>>,
}

impl<F: Field> GroupStructure<F> {
    pub fn of(h: &HopfAlgebraSC<F>) -> Result<Self, HopfError> {
        let elements = h.grouplikes();
        let n = elements.len();
        let find = |v: &Vec<F>| elements.iter().position(|e| e == v);
        let identity = find(&h.unit().to_vec()).ok_or_else(|| HopfError::NotClosed("1 is not among the grouplikes".into()))?;
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let p = h.mul(&elements[a], &elements[b]);
                table[a][b] = find(&p).ok_or_else(|| HopfError::NotClosed(format!("product of grouplikes {a} and {b}")))?;
            }
            let s = h.apply_antipode(&elements[a]);
            let inv = find(&s).ok_or_else(|| HopfError::NotClosed(format!("S of grouplike {a}")))?;
            if table[a][inv] != identity {
                return Err(HopfError::NotClosed(format!("S of grouplike {a} is not its inverse")));
            }
        }
        let orders = (0..n)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != identity {
                    x = table[x][a];
                    k += 1;
                }
                k
            })
            .collect();
        let abelian = (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]));
        let mut g = GroupStructure { elements, table, identity, orders, abelian, invariant_factors: None };
        if abelian {
            g.invariant_factors = Some(g.compute_invariant_factors());
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orders {
            *m.entry(*o).or_insert(0) += 1;
        }
        m
    }

    /// For each prime p, #{x : x^{p^k} = 1} = p^{c_k}; c_k − c_{k−1} counts
    /// cyclic p-factors of order ≥ p^k.
    fn compute_invariant_factors(&self) -> Vec<u64> {
        let n = self.order() as u64;
        if n == 1 {
            return Vec::new();
        }
        let mut primes = Vec::new();
        let mut r = n;
        let mut p = 2;
        while p * p <= r {
            if r.is_multiple_of(p) {
                primes.push(p);
                while r.is_multiple_of(p) {
                    r /= p;
                }
            }
            p += 1;
        }
        if r > 1 {
            primes.push(r);
        }
        // Per prime: exponents of the cyclic p-factors, descending.
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &p in &primes {
            let mut e_max = 0;
            while self.exponent().is_multiple_of(p.pow(e_max + 1)) {
                e_max += 1;
            }
            let c: Vec<u32> = (0..=e_max)
                .map(|k| {
                    let pk = p.pow(k);
                    let mut cnt = self.orders.iter().filter(|&&o| pk % o == 0).count() as u64;
                    let mut e = 0;
                    while cnt > 1 {
                        cnt /= p;
                        e += 1;
                    }
                    e
                })
                .collect();
            let ge: Vec<u32> = (1..=e_max as usize).map(|k| c[k] - c[k - 1]).collect();
            let mut exps = Vec::new();
            for (k, &num) in ge.iter().enumerate() {
                let next = ge.get(k + 1).copied().unwrap_or(0);
                exps.extend(std::iter::repeat_n(k as u32 + 1, (num - next) as usize));
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push((p, exps));
        }
        let len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| per_prime.iter().map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x))).product())
            .collect();
        factors.reverse();
        factors
    }
}

impl<F: Field> fmt::Display for GroupStructure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.invariant_factors {
            Some(fs) if fs.is_empty() => write!(f, "1"),
            Some(fs) => {
                let parts: Vec<String> = fs.iter().map(|d| format!("C_{d}")).collect();
                write!(f, "{}", parts.join(" × "))
            }
            None => write!(f, "nonabelian of order {}, exponent {}", self.order(), self.exponent()),
        }
    }
}
