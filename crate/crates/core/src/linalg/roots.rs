//! Roots in Q(ζ_m) of polynomials with coefficients in Q(ζ_m).
//!
//! Roots are located numerically under every complex embedding, candidate
//! coordinate vectors are recovered from matched embedding values, and each
//! candidate is confirmed by exact evaluation. Numerics only propose; exact
//! arithmetic decides.

use num_complex::Complex64;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cyclotomic::{euler_phi, CycNumber};
use super::field::Field;
use super::poly;
use super::rational::{lcm_denominators, Rational};

/// Upper bound on matched embedding tuples tried per polynomial.
const MAX_COMBINATIONS: u64 = 4_000_000;

pub(crate) fn cyclotomic_roots(coeffs: &[CycNumber], field_order: u32) -> Vec<CycNumber> {
    let mut f: Vec<CycNumber> = coeffs.to_vec();
    poly::trim(&mut f);
    let deg = match poly::degree(&f) {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let m = f.iter().fold(field_order.max(1), |acc, c| acc.lcm(&c.order()));
    let f: Vec<CycNumber> = f.iter().map(|c| c.embed(m)).collect();
    let f = poly::squarefree(&f);
    let mut roots = Vec::new();
    if deg == 1 || poly::degree(&f) == Some(1) {
        roots.push(f[0].neg_ref());
    } else {
        roots = numeric_then_exact(&f, m);
    }
    roots.sort();
    roots.dedup();
    roots
}

fn units(m: u32) -> Vec<u32> {
    if m <= 2 {
        return vec![1];
    }
    (1..m).filter(|k| k.gcd(&m) == 1).collect()
}

fn numeric_then_exact(f: &[CycNumber], m: u32) -> Vec<CycNumber> {
    let phi = euler_phi(m) as usize;
    let us = units(m);
    // Representatives modulo complex conjugation k ~ m - k.
    let reps: Vec<u32> = us.iter().copied().filter(|&k| m <= 2 || k < m - k).collect();
    let complex_roots: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|&k| {
            let cf: Vec<Complex64> = f.iter().map(|c| c.to_complex(k)).collect();
            aberth(&cf)
        })
        .collect();
    let r = complex_roots[0].len();
    if r == 0 {
        return Vec::new();
    }
    let combos = (r as u64).saturating_pow(reps.len() as u32 - 1);
    if combos > MAX_COMBINATIONS {
        return Vec::new();
    }
    let vinv = vandermonde_inverse(m, &us, phi);
    let d = integrality_scale(f);
    let d_f64 = Rational::from_bigints(d.clone(), One::one()).to_f64();
    let d_rat = Rational::from_bigints(d, One::one());
    let d_inv = d_rat.recip().expect("positive");

    let mut found: Vec<CycNumber> = Vec::new();
    let mut idx = vec![0usize; reps.len()];
    loop {
        let mut vals = vec![Complex64::zero(); us.len()];
        for (ri, &k) in reps.iter().enumerate() {
            let z = complex_roots[ri][idx[ri]];
            let pos = us.iter().position(|&u| u == k).expect("unit");
            vals[pos] = z;
            if m > 2 {
                let cpos = us.iter().position(|&u| u == m - k).expect("unit");
                vals[cpos] = z.conj();
            }
        }
        if let Some(cand) = recover(&vinv, &vals, phi, d_f64, &d_inv, m) {
            if !found.contains(&cand) && poly::eval(f, &cand).is_zero() {
                found.push(cand);
            }
        }
        if found.len() == poly::degree(f).unwrap_or(0) {
            break;
        }
        // Odometer over all representative choices.
        let mut i = 0;
        loop {
            if i == idx.len() {
                return found;
            }
            idx[i] += 1;
            if idx[i] < complex_roots[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
    found
}

/// D with D^k·a_{n−k} ∈ Z[ζ] for every k, so Dα ∈ Z[ζ] for α a root of the
/// monic f = Σ a_i x^i. Small primes get the least exponent; any leftover
/// cofactor r = s^j (j maximal) contributes s^⌈j/k⌉.
fn integrality_scale(f: &[CycNumber]) -> BigInt {
    let n = f.len() - 1;
    let mut exps: BTreeMap<u64, u32> = BTreeMap::new();
    let mut rest = BigInt::one();
    for (i, c) in f.iter().enumerate().take(n) {
        let k = (n - i) as u32;
        let mut den = lcm_denominators(c.coeffs().iter());
        let mut p = 2u64;
        while p < 10_000 && !den.is_one() {
            let bp = BigInt::from(p);
            let mut v = 0u32;
            while (&den % &bp).is_zero() {
                den /= &bp;
                v += 1;
            }
            if v > 0 {
                let e = exps.entry(p).or_insert(0);
                *e = (*e).max(v.div_ceil(k));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        rest = rest.lcm(&least_kth_multiple_root(&den, k));
    }
    exps.iter().fold(rest, |acc, (p, e)| acc * BigInt::from(*p).pow(*e))
}

fn least_kth_multiple_root(r: &BigInt, k: u32) -> BigInt {
    if r.is_one() {
        return BigInt::one();
    }
    let bits = r.bits() as u32;
    for j in (2..=bits).rev() {
        let s = r.nth_root(j);
        if s.pow(j) == *r {
            return s.pow(j.div_ceil(k));
        }
    }
    r.clone()
}

fn recover(vinv: &[Vec<Complex64>], vals: &[Complex64], phi: usize, d: f64, d_inv: &Rational, m: u32) -> Option<CycNumber> {
    let mut coords = Vec::with_capacity(phi);
    for row in vinv.iter().take(phi) {
        let c: Complex64 = row.iter().zip(vals).map(|(a, b)| a * b).sum();
        let scaled = c.re * d;
        let rounded = scaled.round();
        if (scaled - rounded).abs() > 0.25 || c.im.abs() * d > 0.25 {
            return None;
        }
        coords.push(Rational::round_f64(rounded)?.mul_r(d_inv));
    }
    Some(CycNumber::new(m, &coords))
}

/// Inverse of V[u][j] = ω^{u j} over units u and j < φ, via Gauss–Jordan.
fn vandermonde_inverse(m: u32, us: &[u32], phi: usize) -> Vec<Vec<Complex64>> {
    let n = phi;
    let mut a: Vec<Vec<Complex64>> = us
        .iter()
        .map(|&u| {
            (0..n)
                .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (u as f64) * (j as f64) / m as f64))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<Complex64>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Complex64::one() } else { Complex64::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).expect("nonempty");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let factor = a[r][col];
                if factor.norm() != 0.0 {
                    for j in 0..n {
                        let (ac, ic) = (a[col][j], inv[col][j]);
                        a[r][j] -= factor * ac;
                        inv[r][j] -= factor * ic;
                    }
                }
            }
        }
    }
    inv
}

/// All complex roots of a polynomial (constant first) by Aberth–Ehrlich
/// iteration followed by Newton polishing.
pub fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for a in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::one() / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::one() - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                max_step = max_step.max(w.norm());
            }
        }
        if max_step < 1e-15 * radius {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                let step = p / dp;
                if step.is_finite() {
                    *zi -= step;
                }
            }
        }
    }
    z
}
