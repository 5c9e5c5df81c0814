use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// ℤ ∪ {−∞} with −∞ below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
}

impl ExtInt {
    pub fn fin(self) -> Option<i64> {
        match self {
            ExtInt::Fin(a) => Some(a),
            ExtInt::NegInf => None,
        }
    }

    pub fn is_fin(self) -> bool {
        matches!(self, ExtInt::Fin(_))
    }

    pub fn add(self, a: i64) -> ExtInt {
        match self {
            ExtInt::Fin(x) => ExtInt::Fin(x + a),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(a: i64) -> Self {
        ExtInt::Fin(a)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Fin(a) => write!(f, "{a}"),
            ExtInt::NegInf => write!(f, "-inf"),
        }
    }
}

/// ℤ ∪ {−∞, −∞_ev, −∞_odd}, the value set of β_i.
///
/// −∞ < −∞_ev, −∞_odd < n. The two parity infinities are not comparable with
/// each other; [`IExtInt::try_cmp`] reports that case as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IExtInt {
    NegInf,
    NegInfEven,
    NegInfOdd,
    Fin(i64),
}

impl IExtInt {
    fn rank(self) -> u8 {
        match self {
            IExtInt::NegInf => 0,
            IExtInt::NegInfEven | IExtInt::NegInfOdd => 1,
            IExtInt::Fin(_) => 2,
        }
    }

    pub fn try_cmp(self, o: IExtInt) -> Result<Ordering> {
        match (self, o) {
            (IExtInt::Fin(a), IExtInt::Fin(b)) => Ok(a.cmp(&b)),
            (IExtInt::NegInfEven, IExtInt::NegInfOdd) | (IExtInt::NegInfOdd, IExtInt::NegInfEven) => {
                Err(Error::IncomparableInfinities)
            }
            _ => Ok(self.rank().cmp(&o.rank())),
        }
    }

    pub fn gt(self, o: IExtInt) -> Result<bool> {
        Ok(self.try_cmp(o)? == Ordering::Greater)
    }

    pub fn le(self, o: IExtInt) -> Result<bool> {
        Ok(self.try_cmp(o)? != Ordering::Greater)
    }

    pub fn max(self, o: IExtInt) -> Result<IExtInt> {
        Ok(if self.try_cmp(o)? == Ordering::Less { o } else { self })
    }

    /// Adds an integer; a parity infinity flips with odd a.
    pub fn add(self, a: i64) -> IExtInt {
        match self {
            IExtInt::Fin(x) => IExtInt::Fin(x + a),
            IExtInt::NegInf => IExtInt::NegInf,
            IExtInt::NegInfEven if a % 2 != 0 => IExtInt::NegInfOdd,
            IExtInt::NegInfOdd if a % 2 != 0 => IExtInt::NegInfEven,
            p => p,
        }
    }

    /// Parity of a finite value or of a parity infinity.
    pub fn parity(self) -> Option<u8> {
        match self {
            IExtInt::Fin(x) => Some(x.rem_euclid(2) as u8),
            IExtInt::NegInfEven => Some(0),
            IExtInt::NegInfOdd => Some(1),
            IExtInt::NegInf => None,
        }
    }

    pub fn fin(self) -> Option<i64> {
        match self {
            IExtInt::Fin(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_fin(self) -> bool {
        matches!(self, IExtInt::Fin(_))
    }
}

impl From<ExtInt> for IExtInt {
    fn from(e: ExtInt) -> Self {
        match e {
            ExtInt::Fin(a) => IExtInt::Fin(a),
            ExtInt::NegInf => IExtInt::NegInf,
        }
    }
}

impl From<i64> for IExtInt {
    fn from(a: i64) -> Self {
        IExtInt::Fin(a)
    }
}

impl fmt::Display for IExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IExtInt::Fin(a) => write!(f, "{a}"),
            IExtInt::NegInf => write!(f, "-inf"),
            IExtInt::NegInfEven => write!(f, "-inf_ev"),
            IExtInt::NegInfOdd => write!(f, "-inf_odd"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_infinity_addition_table() {
        for a in -4..=4i64 {
            let flip = a % 2 != 0;
            let ev = IExtInt::NegInfEven.add(a);
            let od = IExtInt::NegInfOdd.add(a);
            assert_eq!(ev, if flip { IExtInt::NegInfOdd } else { IExtInt::NegInfEven });
            assert_eq!(od, if flip { IExtInt::NegInfEven } else { IExtInt::NegInfOdd });
            // parity(−∞_ev + a) = parity(a), parity(−∞_odd + a) = parity(1 + a)
            assert_eq!(ev.parity(), Some(a.rem_euclid(2) as u8));
            assert_eq!(od.parity(), Some((a + 1).rem_euclid(2) as u8));
            assert_eq!(IExtInt::NegInf.add(a), IExtInt::NegInf);
        }
    }

    #[test]
    fn ordering() {
        use IExtInt::*;
        assert_eq!(NegInf.try_cmp(NegInfEven), Ok(Ordering::Less));
        assert_eq!(NegInfOdd.try_cmp(Fin(-100)), Ok(Ordering::Less));
        assert_eq!(NegInf.try_cmp(NegInf), Ok(Ordering::Equal));
        assert_eq!(NegInfEven.try_cmp(NegInfOdd), Err(Error::IncomparableInfinities));
        assert!(ExtInt::NegInf < ExtInt::Fin(i64::MIN));
    }
}
