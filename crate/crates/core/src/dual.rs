//! Dual numbers `a + b·ε` with `ε² = 0`.
//!
//! Evaluating a computation at `x + ε` yields the value at `x` together
//! with the exact first derivative, which gives an oracle for implicit
//! derivatives that does not go through symbolic differentiation.

use num_traits::Zero;

use crate::poly::Scalar;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(re: T, eps: T) -> Self {
        Dual { re, eps }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn add_ref(&self, o: &Self) -> Self {
        Dual::new(self.re.add_ref(&o.re), self.eps.add_ref(&o.eps))
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Dual::new(self.re.sub_ref(&o.re), self.eps.sub_ref(&o.eps))
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Dual::new(
            self.re.mul_ref(&o.re),
            self.re.mul_ref(&o.eps).add_ref(&self.eps.mul_ref(&o.re)),
        )
    }
    fn is_zero_value(&self) -> bool {
        self.re.is_zero_value() && self.eps.is_zero_value()
    }
}

impl Dual<Rational> {
    pub fn constant(re: Rational) -> Self {
        Dual {
            re,
            eps: Rational::zero(),
        }
    }

    /// `re + ε`, the seed for differentiating with respect to this input.
    pub fn variable(re: Rational) -> Self {
        Dual {
            re,
            eps: num_traits::One::one(),
        }
    }

    /// `None` when the real part vanishes.
    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        if o.re.is_zero() {
            return None;
        }
        let re = &self.re / &o.re;
        let eps = (&self.eps * &o.re - &self.re * &o.eps) / (&o.re * &o.re);
        Some(Dual { re, eps })
    }
}

impl From<Rational> for Dual<Rational> {
    fn from(r: Rational) -> Self {
        Dual::constant(r)
    }
}
