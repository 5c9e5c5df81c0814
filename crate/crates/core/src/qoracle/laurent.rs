use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// An element q^e · P(q)/Q(q) of ℚ(q), kept in the unique form with
/// P(0) ≠ 0, Q(0) ≠ 0, Q monic and gcd(P, Q) = 1. Zero is P = 0, e = 0, Q = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentRational {
    exp: i64,
    num: Poly,
    den: Poly,
}

impl LaurentRational {
    pub fn zero() -> Self {
        Self { exp: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self { exp: 0, num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(c: BigRational) -> Self {
        Self::from_parts(0, Poly::constant(c), Poly::one())
    }

    /// q^e.
    pub fn q_pow(e: i64) -> Self {
        Self { exp: e, num: Poly::one(), den: Poly::one() }
    }

    /// Σ c_k q^k over the given (exponent, coefficient) terms.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        let mut acc = Self::zero();
        for &(e, c) in terms {
            acc = &acc + &(&Self::int(c) * &Self::q_pow(e));
        }
        acc
    }

    fn from_parts(exp: i64, mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut exp = exp;
        let lo = num.low_order();
        num.shift_down(lo);
        exp += lo as i64;
        let lo = den.low_order();
        den.shift_down(lo);
        exp -= lo as i64;
        if !den.is_one() && den.deg() > 0 {
            let g = num.gcd(&den);
            if g.deg() > 0 {
                num = num.divrem(&g).0;
                den = den.divrem(&g).0;
            }
        }
        let l = den.lc();
        if !l.is_one() {
            let inv = l.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { exp, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value lies in ℚ[q, q⁻¹].
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// (exponent shift, numerator coefficients, denominator coefficients).
    pub fn parts(&self) -> (i64, &[BigRational], &[BigRational]) {
        (self.exp, &self.num.0, &self.den.0)
    }

    /// Leading coefficient and degree as q → ∞; None for zero.
    pub fn leading_term(&self) -> Option<(BigRational, i64)> {
        if self.is_zero() {
            return None;
        }
        Some((self.num.lc(), self.exp + self.num.deg() as i64 - self.den.deg() as i64))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(-self.exp, self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    /// self / o when both are Laurent polynomials and o divides self there.
    pub(crate) fn div_exact(&self, o: &Self) -> Option<Self> {
        if o.is_zero() || !self.den.is_one() || !o.den.is_one() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = self.num.divrem(&o.num);
        if !r.is_zero() {
            return None;
        }
        Some(Self::from_parts(self.exp - o.exp, q, Poly::one()))
    }

    /// The value at a nonzero rational q, None where the denominator vanishes.
    pub fn eval_at(&self, q: &BigRational) -> Option<BigRational> {
        let horner = |p: &Poly| p.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c);
        let den = horner(&self.den);
        if den.is_zero() || q.is_zero() {
            return None;
        }
        let e = self.exp.unsigned_abs() as usize;
        let pw = num_traits::pow(q.clone(), e);
        let v = horner(&self.num) / den;
        Some(if self.exp >= 0 { v * pw } else { v / pw })
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The substitution q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        let flip = |p: &Poly| {
            let mut c = p.0.clone();
            c.reverse();
            Poly(c)
        };
        let (dn, dd) = (self.num.deg() as i64, self.den.deg() as i64);
        Self::from_parts(-self.exp - dn + dd, flip(&self.num), flip(&self.den))
    }
}

impl Add for &LaurentRational {
    type Output = LaurentRational;
    fn add(self, o: &LaurentRational) -> LaurentRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = self.num.shift_up((self.exp - e) as usize);
        let b = o.num.shift_up((o.exp - e) as usize);
        if self.den == o.den {
            return LaurentRational::from_parts(e, a.add(&b), self.den.clone());
        }
        LaurentRational::from_parts(e, a.mul(&o.den).add(&b.mul(&self.den)), self.den.mul(&o.den))
    }
}

impl Neg for &LaurentRational {
    type Output = LaurentRational;
    fn neg(self) -> LaurentRational {
        LaurentRational { exp: self.exp, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Sub for &LaurentRational {
    type Output = LaurentRational;
    fn sub(self, o: &LaurentRational) -> LaurentRational {
        self + &(-o)
    }
}

impl Mul for &LaurentRational {
    type Output = LaurentRational;
    fn mul(self, o: &LaurentRational) -> LaurentRational {
        if self.is_zero() || o.is_zero() {
            return LaurentRational::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return LaurentRational { exp: self.exp + o.exp, num: self.num.mul(&o.num), den: Poly::one() };
        }
        LaurentRational::from_parts(self.exp + o.exp, self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

fn fmt_poly(exp: i64, p: &Poly) -> String {
    let mut out = String::new();
    for (k, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = exp + k as i64;
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => String::from("q"),
            _ => format!("q^{{{e}}}"),
        };
        if a.is_one() && !mono.is_empty() {
            out.push_str(&mono);
        } else if mono.is_empty() {
            out.push_str(&format!("{a}"));
        } else {
            out.push_str(&format!("{a}{mono}"));
        }
    }
    out
}

/// LaTeX-ish text, e.g. `q^{2} + q^{-2}` or `\frac{q}{q^{2} + 1}`.
impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.den.is_one() {
            return write!(f, "{}", fmt_poly(self.exp, &self.num));
        }
        write!(f, "\\frac{{{}}}{{{}}}", fmt_poly(self.exp, &self.num), fmt_poly(0, &self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentRational {
        LaurentRational::q_pow(e)
    }

    #[test]
    fn normal_form_is_unique() {
        // (q² − 1)/(q − 1) = q + 1
        let a = (&q(2) - &LaurentRational::one()).checked_div(&(&q(1) - &LaurentRational::one())).unwrap();
        assert_eq!(a, &q(1) + &LaurentRational::one());
        // q⁻¹ · q = 1
        assert!((&q(-1) * &q(1)).is_one());
        let x = (&q(3) + &q(-2)).checked_div(&(&q(1) + &LaurentRational::int(2))).unwrap();
        let y = &(&x * &LaurentRational::int(3)) - &(&x * &LaurentRational::int(2));
        assert_eq!(x, y);
        assert_eq!(x.leading_term(), Some((BigRational::one(), 2)));
    }

    #[test]
    fn bar_and_display() {
        let a = &q(2) + &LaurentRational::int(-3);
        assert_eq!(a.bar(), &q(-2) + &LaurentRational::int(-3));
        assert_eq!(alloc::format!("{a}"), "q^{2} - 3");
        assert!(LaurentRational::zero().recip().is_err());
    }
}
