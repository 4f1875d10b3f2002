//! Dense univariate polynomials over a [`Field`], constant term first.

use super::field::Field;

/// Drop trailing zero coefficients.
pub fn trim<F: Field>(p: &mut Vec<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<F: Field>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out: Vec<F> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add_ref(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => F::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let nb: Vec<F> = b.iter().map(|c| c.neg_ref()).collect();
    add(a, &nb)
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul_assign(x, y);
        }
    }
    trim(&mut out);
    out
}

pub fn scale<F: Field>(a: &[F], c: &F) -> Vec<F> {
    let mut out: Vec<F> = a.iter().map(|x| x.mul_ref(c)).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder. Panics if `b` is zero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut r: Vec<F> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].mul_ref(&lead_inv);
        let shift = dr - db;
        for (j, bj) in b[..=db].iter().enumerate() {
            let t = c.mul_ref(bj);
            r[shift + j] = r[shift + j].sub_ref(&t);
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn monic<F: Field>(a: &[F]) -> Vec<F> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => scale(a, &a[d].inv().expect("nonzero")),
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = r0[d].inv().expect("nonzero");
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn derivative<F: Field>(a: &[F]) -> Vec<F> {
    let mut out: Vec<F> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul_ref(&F::from_i64(i as i64)))
        .collect();
    trim(&mut out);
    out
}

pub fn eval<F: Field>(a: &[F], x: &F) -> F {
    a.iter().rev().fold(F::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
}

/// Squarefree part `a / gcd(a, a')`, monic. Valid in characteristic zero.
pub fn squarefree<F: Field>(a: &[F]) -> Vec<F> {
    let g = gcd(a, &derivative(a));
    let (q, _) = divrem(a, &g);
    monic(&q)
}
