//! Elements of the cyclotomic field Q(ζ_m) in the power basis.
//!
//! Values carry their own order `m`; binary operations on different orders
//! embed both sides into Q(ζ_lcm). Rational-valued operands never force an
//! embedding because the constant coordinate is the same in every order.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::Field;
use super::poly;
use super::rational::Rational;
use super::LinalgError;

thread_local! {
    static CYCLO_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Integer coefficients of the m-th cyclotomic polynomial, constant first.
pub fn cyclotomic_poly(m: u32) -> Rc<Vec<i64>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLO_CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    // x^m - 1 divided by every Φ_d with d a proper divisor of m.
    let mut num: Vec<i64> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let den = cyclotomic_poly(d);
            num = int_exact_div(&num, &den);
        }
    }
    let rc = Rc::new(num);
    CYCLO_CACHE.with(|c| c.borrow_mut().insert(m, rc.clone()));
    rc
}

fn int_exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for k in (db..a.len()).rev() {
        let c = r[k];
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[k - db + j] -= c * bj;
            }
            q[k - db] = c;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// An exact element of Q(ζ_m).
#[derive(Clone)]
pub struct CycNumber {
    order: u32,
    /// Power-basis coordinates with trailing zeros removed; length < φ(m).
    coeffs: Vec<Rational>,
}

/// Reduce a raw coefficient sequence modulo the m-th cyclotomic polynomial.
pub fn cyc_reduce(raw: &[Rational], m: u32) -> CycNumber {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut folded: Vec<Rational> = vec![Rational::zero(); raw.len().min(m as usize)];
    for (i, c) in raw.iter().enumerate() {
        if !c.is_zero() {
            let k = i % m as usize;
            folded[k] = folded[k].add_r(c);
        }
    }
    CycNumber::from_folded(folded, m)
}

impl CycNumber {
    fn from_folded(mut c: Vec<Rational>, m: u32) -> CycNumber {
        let phi = euler_phi(m) as usize;
        if c.len() > phi {
            let cp = cyclotomic_poly(m);
            for k in (phi..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::take(&mut c[k]);
                for (j, pj) in cp[..phi].iter().enumerate() {
                    if *pj != 0 {
                        c[k - phi + j] = c[k - phi + j].sub_r(&lead.mul_int(*pj));
                    }
                }
            }
            c.truncate(phi);
        }
        poly::trim(&mut c);
        CycNumber { order: m, coeffs: c }
    }

    pub fn new(m: u32, raw: &[Rational]) -> CycNumber {
        cyc_reduce(raw, m)
    }

    pub fn from_rational(r: Rational) -> CycNumber {
        let coeffs = if r.is_zero() { Vec::new() } else { vec![r] };
        CycNumber { order: 1, coeffs }
    }

    pub fn from_int(n: i64) -> CycNumber {
        CycNumber::from_rational(Rational::from_integer(n))
    }

    /// ζ_m^k.
    pub fn root_of_unity(m: u32, k: i64) -> CycNumber {
        let e = k.rem_euclid(m as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        cyc_reduce(&raw, m)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coordinates padded to length φ(m).
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        c.resize(euler_phi(self.order) as usize, Rational::zero());
        c
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Image in Q(ζ_target); `target` must be a multiple of the current order.
    pub fn embed(&self, target: u32) -> CycNumber {
        assert!(target.is_multiple_of(self.order), "cannot embed order {} into {}", self.order, target);
        if target == self.order {
            return self.clone();
        }
        if self.is_rational() {
            return CycNumber { order: target, coeffs: self.coeffs.clone() };
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        CycNumber::from_folded(raw, target)
    }

    fn align(&self, other: &CycNumber) -> (CycNumber, CycNumber) {
        let l = self.order.lcm(&other.order);
        (self.embed(l), other.embed(l))
    }

    pub fn try_inverse(&self) -> Result<CycNumber, LinalgError> {
        if self.coeffs.is_empty() {
            return Err(LinalgError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNumber { order: self.order, coeffs: vec![r.recip().expect("nonzero")] });
        }
        let phi: Vec<Rational> = cyclotomic_poly(self.order).iter().map(|&c| Rational::from_integer(c)).collect();
        let (g, s, _) = poly::ext_gcd(&self.coeffs, &phi);
        debug_assert_eq!(g, vec![Rational::one()]);
        Ok(CycNumber::from_folded(s, self.order))
    }

    /// Least n ≥ 1 with selfⁿ = 1, or `None` when no n ≤ 2m² works.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.coeffs.is_empty() {
            return None;
        }
        let m = self.order as u64;
        let cap = (2 * m * m).max(2);
        let one = CycNumber::one();
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc == one {
                return Some(n);
            }
            acc = acc.mul_ref(self);
        }
        None
    }

    /// Complex value under the embedding ζ_m ↦ exp(2πik/m).
    pub fn to_complex(&self, k: u32) -> Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / m;
                Complex64::from_polar(c.to_f64(), theta)
            })
            .sum()
    }

    /// Canonical text in the power basis of Q(ζ_target), e.g. `-1-z`, `1/2*z^2`.
    pub fn to_string_in(&self, target: u32) -> String {
        self.embed(target).to_string()
    }

    /// Parse a polynomial in `z` (meaning ζ_m) such as `1-z+2/3*z^4`.
    pub fn parse_in(s: &str, m: u32) -> Result<CycNumber, LinalgError> {
        let err = || LinalgError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let bytes = t.as_bytes();
        let mut raw: Vec<Rational> = Vec::new();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut neg = false;
            match bytes[pos] {
                b'+' | b'-' => {
                    neg = bytes[pos] == b'-';
                    pos += 1;
                }
                _ if !first => return Err(err()),
                _ => {}
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let mut coeff = if pos > start {
                t[start..pos].parse::<Rational>().map_err(|_| err())?
            } else {
                Rational::one()
            };
            let mut exp = 0usize;
            let has_num = pos > start;
            if has_num && pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                if pos >= bytes.len() || bytes[pos] != b'z' {
                    return Err(err());
                }
            }
            if pos < bytes.len() && bytes[pos] == b'z' {
                if has_num && bytes[pos - 1] != b'*' {
                    return Err(err());
                }
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = t[es..pos].parse::<usize>().map_err(|_| err())?;
                }
            } else if !has_num {
                return Err(err());
            }
            if neg {
                coeff = -coeff;
            }
            let e = exp % m as usize;
            if raw.len() <= e {
                raw.resize(e + 1, Rational::zero());
            }
            raw[e] = raw[e].add_r(&coeff);
        }
        Ok(cyc_reduce(&raw, m))
    }

    fn add_impl(&self, rhs: &CycNumber) -> CycNumber {
        if rhs.coeffs.is_empty() {
            return self.with_order_at_least(rhs.order);
        }
        if self.coeffs.is_empty() {
            return rhs.with_order_at_least(self.order);
        }
        if self.order == rhs.order || self.is_rational() || rhs.is_rational() {
            let order = if self.order == rhs.order {
                self.order
            } else if self.is_rational() && rhs.is_rational() {
                self.order.lcm(&rhs.order)
            } else if self.is_rational() {
                rhs.order
            } else {
                self.order
            };
            let mut c = poly::add(&self.coeffs, &rhs.coeffs);
            poly::trim(&mut c);
            return CycNumber { order, coeffs: c };
        }
        let (a, b) = self.align(rhs);
        a.add_impl(&b)
    }

    fn with_order_at_least(&self, other: u32) -> CycNumber {
        if self.order.is_multiple_of(other) {
            self.clone()
        } else if self.is_rational() {
            CycNumber { order: self.order.lcm(&other), coeffs: self.coeffs.clone() }
        } else {
            self.embed(self.order.lcm(&other))
        }
    }

    fn mul_impl(&self, rhs: &CycNumber) -> CycNumber {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return CycNumber { order: 1, coeffs: Vec::new() };
        }
        if let Some(r) = self.as_rational() {
            let order = if rhs.is_rational() { self.order.lcm(&rhs.order) } else { rhs.order };
            return CycNumber { order, coeffs: rhs.coeffs.iter().map(|c| c.mul_r(&r)).collect() };
        }
        if let Some(r) = rhs.as_rational() {
            return CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c.mul_r(&r)).collect() };
        }
        if self.order != rhs.order {
            let (a, b) = self.align(rhs);
            return a.mul_impl(&b);
        }
        let mut raw = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = raw[i + j].add_r(&x.mul_r(y));
                }
            }
        }
        CycNumber::from_folded(raw, self.order)
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order || (self.is_rational() && other.is_rational()) {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() != other.is_rational() {
            // A non-rational power-basis vector stays non-rational under embedding.
            return false;
        }
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl PartialOrd for CycNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycNumber {
    /// Lexicographic on power-basis coordinates after embedding into the
    /// common field; deterministic, not an ordered-field order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = if self.order == other.order { (self.clone(), other.clone()) } else { self.align(other) };
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = Rational::zero();
        for i in 0..n {
            let x = a.coeffs.get(i).unwrap_or(&zero);
            let y = b.coeffs.get(i).unwrap_or(&zero);
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl Zero for CycNumber {
    fn zero() -> Self {
        CycNumber { order: 1, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycNumber {
    fn one() -> Self {
        CycNumber { order: 1, coeffs: vec![Rational::one()] }
    }
}

impl Default for CycNumber {
    fn default() -> Self {
        CycNumber::zero()
    }
}

impl From<Rational> for CycNumber {
    fn from(r: Rational) -> Self {
        CycNumber::from_rational(r)
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        CycNumber::from_int(n)
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        self.add_impl(&rhs)
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        self.add_impl(&rhs.neg_ref())
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        self.mul_impl(&rhs)
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        self.neg_ref()
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[m={}]", self, self.order)
    }
}

impl Field for CycNumber {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg_ref(&self) -> Self {
        CycNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c.neg_r()).collect() }
    }
    fn inv(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
    fn from_i64(n: i64) -> Self {
        CycNumber::from_int(n)
    }
    fn roots(coeffs: &[Self], field_order: u32) -> Vec<Self> {
        super::roots::cyclotomic_roots(coeffs, field_order)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return;
        }
        let p = a.mul_impl(b);
        *self = self.add_impl(&p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> CycNumber {
        CycNumber::root_of_unity(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() as u32 - 1, euler_phi(105));
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn reduce_examples() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x)).collect::<Vec<_>>();
        assert_eq!(cyc_reduce(&r(&[0, 0, 0, 1]), 3), CycNumber::one());
        assert_eq!(cyc_reduce(&r(&[0, 0, 1]), 4), CycNumber::from_int(-1));
        assert_eq!(cyc_reduce(&r(&[0, 0, 1]), 3).to_string(), "-1-z");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycNumber::one().try_inverse().unwrap(), CycNumber::one());
        assert_eq!(z(3, 1).try_inverse().unwrap(), z(3, 2));
        let a = CycNumber::one() + z(4, 1);
        let expect = (CycNumber::one() - z(4, 1)).mul_ref(&CycNumber::from_rational(Rational::new(1, 2)));
        assert_eq!(a.try_inverse().unwrap(), expect);
        assert_eq!(CycNumber::zero().try_inverse(), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn root_orders() {
        assert_eq!(CycNumber::one().root_of_unity_order(), Some(1));
        assert_eq!(z(9, 3).root_of_unity_order(), Some(3));
        assert_eq!(z(9, 1).root_of_unity_order(), Some(9));
        assert_eq!(z(9, 1).neg_ref().root_of_unity_order(), Some(18));
        assert_eq!(CycNumber::from_int(2).root_of_unity_order(), None);
        assert_eq!(CycNumber::zero().root_of_unity_order(), None);
    }

    #[test]
    fn mixed_orders_embed() {
        assert_eq!(z(9, 3), z(3, 1));
        assert_eq!(z(9, 3).mul_ref(&z(3, 2)), CycNumber::one());
        assert_eq!(z(2, 1), CycNumber::from_int(-1));
        let s = z(4, 1).add_ref(&z(3, 1));
        assert_eq!(s.order(), 12);
        assert_eq!(s.sub_ref(&z(3, 1)), z(4, 1));
        assert_ne!(z(9, 1), z(3, 1));
    }

    #[test]
    fn parse_print_round_trip() {
        for (s, m) in [("0", 3), ("-1-z", 3), ("1/2*z^2", 9), ("z", 5), ("-3/7+z^3-z^5", 9)] {
            let x = CycNumber::parse_in(s, m).unwrap();
            assert_eq!(x.to_string_in(m), s);
        }
        assert_eq!(CycNumber::parse_in("z^2", 3).unwrap().to_string(), "-1-z");
        assert_eq!(CycNumber::parse_in("2*z + 1", 3).unwrap().to_string(), "1+2*z");
        for bad in ["", "z*", "2z", "1++z", "1/0", "*z", "z^"] {
            assert!(CycNumber::parse_in(bad, 3).is_err(), "{bad}");
        }
    }

    #[test]
    fn complex_embedding() {
        let w = z(3, 1).to_complex(1);
        assert!((w - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)).norm() < 1e-12);
    }
}
