//! Exact rank over ℚ(√2), used to decide whether a linear map is invertible.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rootdata::Sqrt2Scalar;

/// p + q√2 with rational p, q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Q2 {
    p: BigRational,
    q: BigRational,
}

impl Q2 {
    pub(crate) fn zero() -> Self {
        Self { p: BigRational::zero(), q: BigRational::zero() }
    }

    pub(crate) fn from_scalar(z: Sqrt2Scalar) -> Self {
        let (a, b, k) = z.parts();
        let den = BigRational::from_integer((num_bigint::BigInt::one()) << k);
        Self { p: BigRational::from_integer(a.into()) / &den, q: BigRational::from_integer(b.into()) / den }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        let two = BigRational::from_integer(2.into());
        Self { p: &self.p * &o.p + two * &self.q * &o.q, q: &self.p * &o.q + &self.q * &o.p }
    }

    fn sub(&self, o: &Self) -> Self {
        Self { p: &self.p - &o.p, q: &self.q - &o.q }
    }

    /// Inverse via the conjugate; the norm p² − 2q² vanishes only at zero.
    fn inv(&self) -> Self {
        let two = BigRational::from_integer(2.into());
        let norm = &self.p * &self.p - two * &self.q * &self.q;
        Self { p: &self.p / &norm, q: -(&self.q / norm) }
    }
}

/// Rank of a dense matrix given row by row.
pub(crate) fn rank(mut m: Vec<Vec<Q2>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&x| !m[x][c].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = m[r][c].inv();
        for x in (r + 1)..rows {
            if m[x][c].is_zero() {
                continue;
            }
            let f = m[x][c].mul(&inv);
            for y in c..cols {
                let t = f.mul(&m[r][y]);
                m[x][y] = m[x][y].sub(&t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, k: u32) -> Q2 {
        Q2::from_scalar(Sqrt2Scalar::new(a, b, k))
    }

    #[test]
    fn hadamard_type_matrix_is_invertible() {
        let h = || s(0, 1, 1);
        let mh = || s(0, -1, 1);
        assert_eq!(rank(alloc::vec![alloc::vec![h(), h()], alloc::vec![h(), mh()]]), 2);
        assert_eq!(rank(alloc::vec![alloc::vec![h(), h()], alloc::vec![h(), h()]]), 1);
    }

    #[test]
    fn irrational_dependence_is_detected() {
        // second row is √2 times the first
        let m = alloc::vec![alloc::vec![s(1, 0, 0), s(0, 1, 0)], alloc::vec![s(0, 1, 0), s(2, 0, 0)]];
        assert_eq!(rank(m), 1);
    }
}
