use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::fmt_int_poly;
use super::{BigInt, Poly, Rational};
use crate::{Error, Result};

/// Element of Q(t) in canonical form: `gcd(num, den) = 1` and `den` monic,
/// so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::t_pow(1))
    }

    pub fn t_pow(k: u32) -> Self {
        Self::from_poly(Poly::t_pow(k as usize))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_rational(super::int(c))
    }

    /// Builds `num/den` and normalizes.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.coeffs()[0].clone();
            return if c.is_one() {
                RatFunc { num, den }
            } else {
                RatFunc { num: num.scale(&c.recip()), den: Poly::one() }
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lc = den.leading().expect("nonzero").recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole(super::fmt_rational(t0)));
        }
        Ok(self.num.eval(t0) / d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Substitutes `t -> -t`.
    pub fn negate_var(&self) -> Self {
        Self::normalized(self.num.negate_var(), self.den.negate_var())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Integer-coefficient numerator and denominator with coprime content and
    /// positive leading denominator coefficient.
    fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let l = self.num.denom_lcm().lcm(&self.den.denom_lcm());
        let n = self.num.integer_coeffs(&l);
        let d = self.den.integer_coeffs(&l);
        let g = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if g.is_zero() { BigInt::one() } else { g };
        (n.into_iter().map(|c| c / &g).collect(), d.into_iter().map(|c| c / &g).collect())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{}", super::fmt_rational(&c));
        }
        let (n, d) = self.integer_form();
        if d.len() == 1 && d[0].is_one() {
            return fmt_int_poly(&n, f);
        }
        write!(f, "(")?;
        fmt_int_poly(&n, f)?;
        write!(f, ")/(")?;
        fmt_int_poly(&d, f)?;
        write!(f, ")")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalized(num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $atr<&RatFunc> for RatFunc {
            fn $am(&mut self, rhs: &RatFunc) { *self = (&*self).$m(rhs); }
        }
        impl $atr for RatFunc {
            fn $am(&mut self, rhs: RatFunc) { *self = (&*self).$m(&rhs); }
        }
    )*};
}
forward_owned!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn p(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_i64(c))
    }

    #[test]
    fn inverse_pair() {
        let t = RatFunc::t();
        assert_eq!(&t * &t.recip().unwrap(), RatFunc::one());
    }

    #[test]
    fn factor_cancellation() {
        let q = p(&[-1, 0, 1]).checked_div(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(q.is_polynomial());
    }

    #[test]
    fn subtraction_with_rational_coefficients() {
        let a = p(&[0, 1, 1]).scale(&rat(1, 2));
        let b = RatFunc::t();
        assert_eq!(&a - &b, p(&[0, -1, 1]).scale(&rat(1, 2)));
    }

    #[test]
    fn eval_and_pole() {
        let f = p(&[0, -3, 1]).scale(&rat(1, 2));
        assert_eq!(f.eval(&int(4)).unwrap(), int(2));
        assert_eq!(p(&[-1, 1]).eval(&int(1)).unwrap(), int(0));
        assert!(matches!(RatFunc::t().recip().unwrap().eval(&int(0)), Err(Error::Pole(_))));
        assert_eq!(RatFunc::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = RatFunc::new(Poly::from_i64(&[2]), Poly::from_i64(&[0, 4])).unwrap();
        assert_eq!(f.denom(), &Poly::t_pow(1));
        assert_eq!(f.numer(), &Poly::constant(rat(1, 2)));
        assert_eq!(f.to_string(), "(1)/(2*t)");
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, -3, 1]).scale(&rat(1, 2)).to_string(), "(t^2 - 3*t)/(2)");
        assert_eq!(p(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(RatFunc::from_rational(rat(-3, 2)).to_string(), "-3/2");
        assert_eq!(RatFunc::t().recip().unwrap().to_string(), "(1)/(t)");
    }
}
