//! The scalar abstraction shared by every exact routine.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;

/// An exact field with a fixed total order (used only for deterministic
/// tie-breaking, not compatible with arithmetic).
///
/// Arithmetic is by reference to avoid cloning coefficient vectors in
/// inner loops.
pub trait Field:
    Clone + PartialEq + Eq + Ord + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;

    /// Distinct roots of the polynomial with the given coefficients
    /// (constant term first), sorted by the total order. Roots are sought in
    /// the smallest field containing the coefficients and, for cyclotomic
    /// scalars, Q(ζ_field_order).
    fn roots(coeffs: &[Self], field_order: u32) -> Vec<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }

    /// `self += a * b`, the elimination hot path.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Field for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_r(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub_r(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_r(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg_r()
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn roots(coeffs: &[Self], _field_order: u32) -> Vec<Self> {
        use super::cyclotomic::CycNumber;
        let lifted: Vec<CycNumber> = coeffs.iter().map(|c| CycNumber::from_rational(c.clone())).collect();
        CycNumber::roots(&lifted, 1)
            .into_iter()
            .filter_map(|r| r.as_rational())
            .collect()
    }
}
