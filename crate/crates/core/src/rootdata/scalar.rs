use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The exact number (a + b√2)/2^k, kept with minimal k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sqrt2Scalar {
    a: i64,
    b: i64,
    k: u32,
}

impl Sqrt2Scalar {
    pub const ZERO: Self = Self { a: 0, b: 0, k: 0 };
    pub const ONE: Self = Self { a: 1, b: 0, k: 0 };
    /// 1/√2 = √2/2.
    pub const INV_SQRT2: Self = Self { a: 0, b: 1, k: 1 };

    pub fn new(a: i64, b: i64, k: u32) -> Self {
        let (mut a, mut b, mut k) = (a, b, k);
        if a == 0 && b == 0 {
            return Self::ZERO;
        }
        while k > 0 && a % 2 == 0 && b % 2 == 0 {
            a /= 2;
            b /= 2;
            k -= 1;
        }
        Self { a, b, k }
    }

    pub fn int(a: i64) -> Self {
        Self::new(a, 0, 0)
    }

    pub fn parts(self) -> (i64, i64, u32) {
        (self.a, self.b, self.k)
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    pub fn to_f64(self) -> f64 {
        (self.a as f64 + self.b as f64 * core::f64::consts::SQRT_2) / (1u64 << self.k) as f64
    }

    fn shifted(x: i64, by: u32) -> i64 {
        x.checked_mul(1i64.checked_shl(by).filter(|m| *m > 0).expect("Sqrt2Scalar overflow"))
            .expect("Sqrt2Scalar overflow")
    }

    /// Sign of the real value: -1, 0 or 1.
    pub fn signum(self) -> i32 {
        // compare a against -b√2 via squares
        let (a, b) = (self.a as i128, self.b as i128);
        if a >= 0 && b >= 0 {
            return if a == 0 && b == 0 { 0 } else { 1 };
        }
        if a <= 0 && b <= 0 {
            return -1;
        }
        let lhs = a * a;
        let rhs = 2 * b * b;
        if a > 0 {
            if lhs > rhs { 1 } else { -1 }
        } else if rhs > lhs {
            1
        } else {
            -1
        }
    }

    /// sign · √p when that lies in ℤ[1/√2].
    pub fn signed_sqrt(sign: i32, p: &BigRational) -> Option<Self> {
        if p.is_negative() {
            return None;
        }
        if p.is_zero() || sign == 0 {
            return Some(Self::ZERO);
        }
        let two = BigInt::from(2);
        let (mut u, mut v) = (p.numer().clone(), p.denom().clone());
        let mut e: i64 = 0;
        while (&u % &two).is_zero() {
            u /= &two;
            e += 1;
        }
        while (&v % &two).is_zero() {
            v /= &two;
            e -= 1;
        }
        if !v.is_one() {
            return None;
        }
        let r = u.sqrt();
        if &r * &r != u {
            return None;
        }
        let r = r.to_i64()? * i64::from(sign.signum());
        let (a, b, half) = if e % 2 == 0 { (r, 0, e / 2) } else { (0, r, (e - 1) / 2) };
        Some(if half >= 0 {
            Self::new(Self::shifted(a, half as u32), Self::shifted(b, half as u32), 0)
        } else {
            Self::new(a, b, (-half) as u32)
        })
    }

    /// The value as an exact rational when b = 0.
    pub fn to_rational(self) -> Option<BigRational> {
        if self.b != 0 {
            return None;
        }
        Some(BigRational::new(BigInt::from(self.a), BigInt::from(2).pow(self.k)))
    }

    /// Compact exact text, e.g. `1`, `-1`, `√2/2`, `(1+√2)/4`.
    pub fn pretty(self) -> String {
        let num = match (self.a, self.b) {
            (a, 0) => format!("{a}"),
            (0, b) => coef_sqrt2(b),
            (a, b) => {
                let sb = if b > 0 { format!("+{}", coef_sqrt2(b)) } else { coef_sqrt2(b) };
                if self.k > 0 { format!("({a}{sb})") } else { format!("{a}{sb}") }
            }
        };
        if self.k == 0 {
            num
        } else {
            format!("{num}/{}", 1u64 << self.k)
        }
    }
}

fn coef_sqrt2(b: i64) -> String {
    match b {
        1 => "√2".into(),
        -1 => "-√2".into(),
        b => format!("{b}√2"),
    }
}

impl Add for Sqrt2Scalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let k = self.k.max(o.k);
        let (s1, s2) = (k - self.k, k - o.k);
        let a = Self::shifted(self.a, s1).checked_add(Self::shifted(o.a, s2)).expect("Sqrt2Scalar overflow");
        let b = Self::shifted(self.b, s1).checked_add(Self::shifted(o.b, s2)).expect("Sqrt2Scalar overflow");
        Self::new(a, b, k)
    }
}

impl Neg for Sqrt2Scalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, k: self.k }
    }
}

impl Sub for Sqrt2Scalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Sqrt2Scalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let m = |x: i64, y: i64| x.checked_mul(y).expect("Sqrt2Scalar overflow");
        let a = m(self.a, o.a).checked_add(m(2, m(self.b, o.b))).expect("Sqrt2Scalar overflow");
        let b = m(self.a, o.b).checked_add(m(self.b, o.a)).expect("Sqrt2Scalar overflow");
        Self::new(a, b, self.k + o.k)
    }
}

impl fmt::Display for Sqrt2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Default for Sqrt2Scalar {
    fn default() -> Self {
        Self::ZERO
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_identities() {
        let h = Sqrt2Scalar::INV_SQRT2;
        assert_eq!(h * h, Sqrt2Scalar::new(1, 0, 1));
        assert_eq!(h + h, Sqrt2Scalar::new(0, 1, 0));
        assert_eq!(Sqrt2Scalar::new(0, 2, 2), h);
        assert_eq!(Sqrt2Scalar::new(4, 6, 1), Sqrt2Scalar::new(2, 3, 0));
        assert_eq!(h.pretty(), "√2/2");
        assert_eq!(Sqrt2Scalar::new(1, -1, 2).pretty(), "(1-√2)/4");
        assert_eq!(Sqrt2Scalar::int(-1).pretty(), "-1");
        assert_eq!(Sqrt2Scalar::new(1, 1, 0).signum(), 1);
        assert_eq!(Sqrt2Scalar::new(1, -1, 0).signum(), -1);
        assert_eq!(Sqrt2Scalar::new(-3, 2, 0).signum(), -1);
    }

    #[test]
    fn square_roots_of_rationals() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(Sqrt2Scalar::signed_sqrt(1, &r(1, 2)), Some(Sqrt2Scalar::INV_SQRT2));
        assert_eq!(Sqrt2Scalar::signed_sqrt(-1, &r(2, 1)), Some(Sqrt2Scalar::new(0, -1, 0)));
        assert_eq!(Sqrt2Scalar::signed_sqrt(1, &r(9, 4)), Some(Sqrt2Scalar::new(3, 0, 1)));
        assert_eq!(Sqrt2Scalar::signed_sqrt(1, &r(1, 8)), Some(Sqrt2Scalar::new(0, 1, 2)));
        assert_eq!(Sqrt2Scalar::signed_sqrt(1, &r(1, 3)), None);
        assert_eq!(Sqrt2Scalar::signed_sqrt(1, &r(3, 1)), None);
    }

    fn arb() -> impl Strategy<Value = Sqrt2Scalar> {
        (-50i64..50, -50i64..50, 0u32..5).prop_map(|(a, b, k)| Sqrt2Scalar::new(a, b, k))
    }

    proptest! {
        #[test]
        fn ring_laws_agree_with_floats(x in arb(), y in arb(), z in arb()) {
            let lhs = x * (y + z);
            let rhs = x * y + x * z;
            prop_assert_eq!(lhs, rhs);
            prop_assert!((lhs.to_f64() - x.to_f64() * (y.to_f64() + z.to_f64())).abs() < 1e-9);
            prop_assert_eq!(x - x, Sqrt2Scalar::ZERO);
        }

        #[test]
        fn normal_form_is_unique(a in -200i64..200, b in -200i64..200, k in 0u32..6, j in 0u32..4) {
            let x = Sqrt2Scalar::new(a, b, k);
            let (xa, xb, xk) = x.parts();
            prop_assert_eq!(Sqrt2Scalar::new(xa, xb, xk), x);
            // scaling numerator and denominator by 2^j changes nothing
            prop_assert_eq!(Sqrt2Scalar::new(a << j, b << j, k + j), x);
            // equality matches cross-multiplied comparison
            let y = Sqrt2Scalar::new(b, a, k);
            let (ya, yb, yk) = y.parts();
            let cross = (xa as i128) << yk == (ya as i128) << xk && (xb as i128) << yk == (yb as i128) << xk;
            prop_assert_eq!(x == y, cross);
        }
    }
}
