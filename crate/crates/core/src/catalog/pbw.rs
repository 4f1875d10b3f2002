//! Straightening of products in the monomial basis {g^a x^b y^c}.
//!
//! A presentation has one grouplike generator g of finite order, up to two
//! generators x, y with g x g⁻¹ = λ_x x, g y g⁻¹ = λ_y y, power relations
//! x^{N_x} = P_x, y^{N_y} = P_y, and (with two generators) y x = x y + r.
//! The coproduct, counit and antipode are given on generators and extended
//! (anti)multiplicatively.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::hopf::{HopfAlgebraSC, HopfError};
use crate::linalg::{CycNumber, Field, Matrix};

pub type Mono = [usize; 3];
pub type Elem = BTreeMap<Mono, CycNumber>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    G,
    X,
    Y,
}

#[derive(Clone, Debug)]
pub struct NilGenerator {
    pub conj: CycNumber,
    pub order: usize,
    /// Right-hand side of the power relation, in normal form.
    pub power: Elem,
    /// Δ as a sum of c·(m ⊗ m').
    pub delta: Vec<(Mono, Mono, CycNumber)>,
    pub antipode: Elem,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub g_order: usize,
    pub x: Option<NilGenerator>,
    pub y: Option<NilGenerator>,
    /// r in y x = x y + r.
    pub yx_correction: Elem,
    pub field_order: u32,
}

pub fn mono(a: usize, b: usize, c: usize) -> Mono {
    [a, b, c]
}

pub fn single(m: Mono, c: CycNumber) -> Elem {
    let mut e = Elem::new();
    if !c.is_zero() {
        e.insert(m, c);
    }
    e
}

fn add_into(acc: &mut Elem, e: &Elem, scale: &CycNumber) {
    for (m, c) in e {
        let v = c.mul_ref(scale);
        let slot = acc.entry(*m).or_insert_with(CycNumber::zero);
        *slot = slot.add_ref(&v);
        if slot.is_zero() {
            acc.remove(m);
        }
    }
}

impl Presentation {
    fn nx(&self) -> usize {
        self.x.as_ref().map_or(1, |x| x.order)
    }

    fn ny(&self) -> usize {
        self.y.as_ref().map_or(1, |y| y.order)
    }

    pub fn dim(&self) -> usize {
        self.g_order * self.nx() * self.ny()
    }

    pub fn index(&self, m: Mono) -> usize {
        (m[0] * self.nx() + m[1]) * self.ny() + m[2]
    }

    pub fn monomial(&self, i: usize) -> Mono {
        let (nx, ny) = (self.nx(), self.ny());
        [i / (nx * ny), (i / ny) % nx, i % ny]
    }

    pub fn label(&self, m: Mono) -> String {
        let part = |s: &str, e: usize| match e {
            0 => String::new(),
            1 => s.to_string(),
            _ => format!("{s}^{e}"),
        };
        let l = format!("{}{}{}", part("g", m[0]), part("x", m[1]), part("y", m[2]));
        if l.is_empty() {
            "1".into()
        } else {
            l
        }
    }

    fn word(m: Mono) -> Vec<Gen> {
        let mut w = vec![Gen::G; m[0]];
        w.extend(std::iter::repeat_n(Gen::X, m[1]));
        w.extend(std::iter::repeat_n(Gen::Y, m[2]));
        w
    }

    /// m · gen in normal form.
    pub fn mul_gen(&self, m: Mono, gen: Gen) -> Elem {
        let [a, b, c] = m;
        match gen {
            Gen::G => {
                // x g = λ_x⁻¹ g x.
                let mut coeff = CycNumber::one();
                if let Some(x) = &self.x {
                    coeff = coeff.mul_ref(&x.conj.inv().expect("root of unity").pow(b as u64));
                }
                if let Some(y) = &self.y {
                    coeff = coeff.mul_ref(&y.conj.inv().expect("root of unity").pow(c as u64));
                }
                single([(a + 1) % self.g_order, b, c], coeff)
            }
            Gen::Y => {
                let y = self.y.as_ref().expect("presentation has y");
                if c + 1 < y.order {
                    single([a, b, c + 1], CycNumber::one())
                } else {
                    self.mul_elem(&single([a, b, 0], CycNumber::one()), &y.power)
                }
            }
            Gen::X => {
                let x = self.x.as_ref().expect("presentation has x");
                if c > 0 {
                    let base = [a, b, c - 1];
                    let mut out = self.mul_gen_elem(&self.mul_gen(base, Gen::X), Gen::Y);
                    let corr = self.mul_elem(&single(base, CycNumber::one()), &self.yx_correction);
                    add_into(&mut out, &corr, &CycNumber::one());
                    out
                } else if b + 1 < x.order {
                    single([a, b + 1, 0], CycNumber::one())
                } else {
                    self.mul_elem(&single([a, 0, 0], CycNumber::one()), &x.power)
                }
            }
        }
    }

    fn mul_gen_elem(&self, e: &Elem, gen: Gen) -> Elem {
        let mut out = Elem::new();
        for (m, c) in e {
            add_into(&mut out, &self.mul_gen(*m, gen), c);
        }
        out
    }

    pub fn mul_elem(&self, lhs: &Elem, rhs: &Elem) -> Elem {
        let mut out = Elem::new();
        for (m2, c2) in rhs {
            let mut acc = lhs.clone();
            for g in Self::word(*m2) {
                acc = self.mul_gen_elem(&acc, g);
            }
            add_into(&mut out, &acc, c2);
        }
        out
    }

    /// The last generator of a nonempty monomial and the monomial before it.
    fn split_last(m: Mono) -> Option<(Mono, Gen)> {
        let [a, b, c] = m;
        if c > 0 {
            Some(([a, b, c - 1], Gen::Y))
        } else if b > 0 {
            Some(([a, b - 1, 0], Gen::X))
        } else if a > 0 {
            Some(([a - 1, 0, 0], Gen::G))
        } else {
            None
        }
    }

    /// Builds and validates the Hopf algebra.
    pub fn build(&self) -> Result<HopfAlgebraSC<CycNumber>, HopfError> {
        let n = self.dim();
        let to_vec = |e: &Elem| -> Vec<(usize, CycNumber)> { e.iter().map(|(m, c)| (self.index(*m), c.clone())).collect() };
        let table: Vec<Vec<Vec<(usize, CycNumber)>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let p = self.mul_elem(&single(self.monomial(i), CycNumber::one()), &single(self.monomial(j), CycNumber::one()));
                        to_vec(&p)
                    })
                    .collect()
            })
            .collect();

        let gen_delta = |g: Gen| -> BTreeMap<(usize, usize), CycNumber> {
            match g {
                Gen::G => [((self.index([1 % self.g_order, 0, 0]), self.index([1 % self.g_order, 0, 0])), CycNumber::one())].into(),
                Gen::X | Gen::Y => {
                    let nil = if g == Gen::X { &self.x } else { &self.y };
                    nil.as_ref()
                        .expect("generator present")
                        .delta
                        .iter()
                        .map(|(l, r, c)| ((self.index(*l), self.index(*r)), c.clone()))
                        .collect()
                }
            }
        };
        let tensor_mul = |u: &BTreeMap<(usize, usize), CycNumber>, v: &BTreeMap<(usize, usize), CycNumber>| {
            let mut out: BTreeMap<(usize, usize), CycNumber> = BTreeMap::new();
            for ((i, j), c) in u {
                for ((k, l), d) in v {
                    let cd = c.mul_ref(d);
                    for (p, e) in &table[*i][*k] {
                        for (q, f) in &table[*j][*l] {
                            let slot = out.entry((*p, *q)).or_insert_with(CycNumber::zero);
                            *slot = slot.add_ref(&cd.mul_ref(&e.mul_ref(f)));
                        }
                    }
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };

        let mut deltas: Vec<BTreeMap<(usize, usize), CycNumber>> = Vec::with_capacity(n);
        let mut antipode: Vec<Elem> = Vec::with_capacity(n);
        for i in 0..n {
            let m = self.monomial(i);
            match Self::split_last(m) {
                None => {
                    deltas.push([((i, i), CycNumber::one())].into());
                    antipode.push(single(m, CycNumber::one()));
                }
                Some((prefix, g)) => {
                    let p = self.index(prefix);
                    deltas.push(tensor_mul(&deltas[p], &gen_delta(g)));
                    let s_gen = match g {
                        Gen::G => single([self.g_order - 1, 0, 0], CycNumber::one()),
                        Gen::X => self.x.as_ref().expect("x").antipode.clone(),
                        Gen::Y => self.y.as_ref().expect("y").antipode.clone(),
                    };
                    antipode.push(self.mul_elem(&s_gen, &antipode[p]));
                }
            }
        }

        let mut mu = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                mu.extend(terms.iter().map(|(k, c)| (i, j, *k, c.clone())));
            }
        }
        let delta: Vec<(usize, usize, usize, CycNumber)> = deltas
            .iter()
            .enumerate()
            .flat_map(|(i, d)| d.iter().map(move |((j, k), c)| (i, j.to_owned(), k.to_owned(), c.clone())))
            .collect();
        let eps: Vec<CycNumber> = (0..n)
            .map(|i| {
                let m = self.monomial(i);
                if m[1] == 0 && m[2] == 0 {
                    CycNumber::one()
                } else {
                    CycNumber::zero()
                }
            })
            .collect();
        let mut unit = vec![CycNumber::zero(); n];
        unit[0] = CycNumber::one();
        let mut s: Matrix<CycNumber> = Matrix::zeros(n, n);
        for (i, e) in antipode.iter().enumerate() {
            for (m, c) in e {
                s.set(self.index(*m), i, c.embed(self.field_order));
            }
        }
        let labels = (0..n).map(|i| self.label(self.monomial(i))).collect();
        let embed = |c: CycNumber| c.embed(self.field_order);
        HopfAlgebraSC::new(
            n,
            mu.into_iter().map(|(i, j, k, c)| (i, j, k, embed(c))),
            unit.into_iter().map(embed).collect(),
            delta.into_iter().map(|(i, j, k, c)| (i, j, k, embed(c))),
            eps.into_iter().map(embed).collect(),
            s,
            labels,
            self.field_order,
        )
    }
}
