//! Text syntax for rational functions: any arithmetic expression in `t` with
//! rational constants, `+ - * /`, `^` with a nonnegative integer exponent and
//! parentheses. This covers `"(num)/(den)"`, sparse `c0 + c1*t + c2*t^2`,
//! integers and plain rationals.

use num_traits::Zero;

use super::{BigInt, RatFunc, Rational};
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser { src: s, bytes: s.as_bytes(), pos: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc *= self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                // implicit multiplication such as `3t` or `2(t+1)`
                Some(b't') | Some(b'(') => acc *= self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::t())
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(RatFunc::from_rational(Rational::from_integer(n)))
            }
            _ => Err(self.err("expected number, 't' or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let n: BigInt = self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))?;
        debug_assert!(!n.is_zero() || self.src[start..self.pos].chars().all(|c| c == '0'));
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Poly};

    #[test]
    fn accepted_forms() {
        let half = RatFunc::from_poly(Poly::from_i64(&[0, -3, 1])).scale(&rat(1, 2));
        assert_eq!(parse_ratfunc("(t^2 - 3*t)/(2)").unwrap(), half);
        assert_eq!(parse_ratfunc("0 + -3/2*t + 1/2*t^2").unwrap(), half);
        assert_eq!(parse_ratfunc("7").unwrap(), RatFunc::from_i64(7));
        assert_eq!(parse_ratfunc("-3/2").unwrap(), RatFunc::from_rational(rat(-3, 2)));
        assert_eq!(parse_ratfunc("(1)/(t)").unwrap(), RatFunc::t().recip().unwrap());
        assert_eq!(parse_ratfunc("2t").unwrap(), RatFunc::from_poly(Poly::from_i64(&[0, 2])));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("t +").is_err());
        assert!(parse_ratfunc("x").is_err());
        assert!(parse_ratfunc("(t").is_err());
        assert_eq!(parse_ratfunc("1/(t-t)"), Err(Error::DivisionByZero));
    }
}
