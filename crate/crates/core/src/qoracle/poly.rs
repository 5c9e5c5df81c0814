use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// c₀ + c₁q + … over ℚ, with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Poly(pub(crate) Vec<BigRational>);

impl Poly {
    pub(crate) fn zero() -> Self {
        Poly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    pub(crate) fn constant(c: BigRational) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial has none.
    pub(crate) fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lc(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// The largest k with q^k dividing self (0 for zero).
    pub(crate) fn low_order(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub(crate) fn shift_down(&mut self, k: usize) {
        self.0.drain(..k);
    }

    pub(crate) fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.0.iter().cloned());
        Poly(c)
    }

    pub(crate) fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.0.get(k);
            let b = o.0.get(k);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = Poly(c);
        p.trim();
        p
    }

    pub(crate) fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn scale(&self, s: &BigRational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|c| c * s).collect())
    }

    pub(crate) fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        let mut p = Poly(c);
        p.trim();
        p
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub(crate) fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (Poly::zero(), r);
        }
        let dl = d.lc();
        let mut q = vec![BigRational::zero(); r.0.len() - d.0.len() + 1];
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let f = r.lc() / &dl;
            for (k, c) in d.0.iter().enumerate() {
                r.0[shift + k] -= c * &f;
            }
            q[shift] = f;
            r.trim();
        }
        let mut q = Poly(q);
        q.trim();
        (q, r)
    }

    pub(crate) fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.lc();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Monic gcd.
    pub(crate) fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Poly {
        let mut x = Poly(c.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect());
        x.trim();
        x
    }

    #[test]
    fn division_and_gcd() {
        // (q+1)(q−1) and (q+1)(q+2)
        let a = p(&[-1, 0, 1]);
        let b = p(&[2, 3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        let (q, r) = b.divrem(&p(&[1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.mul(&b).divrem(&b).0, a);
    }
}
