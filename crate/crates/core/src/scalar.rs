use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{rat_pow, RatFunc, Rational};
use crate::{Error, Result};

/// Coefficient field for Hom spaces: either Q(t) itself, or Q after
/// specializing `t` to a rational value.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, k: u32) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    fn from_rational(r: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(crate::exactnum::int(n))
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, k: u32) -> Self {
        RatFunc::pow(self, k)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        RatFunc::checked_div(self, rhs)
    }
    fn from_rational(r: Rational) -> Self {
        RatFunc::from_rational(r)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, k: u32) -> Self {
        rat_pow(self, k)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}
