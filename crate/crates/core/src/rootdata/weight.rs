use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use super::datum::{CartanSatakeDatum, OrbitKind};

/// A weight, stored as its pairings (⟨h_i, λ⟩)_i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(alloc::vec![0; rank])
    }

    /// The simple root α_i, whose coordinates are the column (a_{j,i})_j.
    pub fn simple_root(datum: &CartanSatakeDatum, i: usize) -> Self {
        Weight((0..datum.rank()).map(|j| datum.a(j, i)).collect())
    }

    /// The fundamental weight ϖ_i.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// τ(λ), i.e. ⟨h_i, τλ⟩ = ⟨h_{τ(i)}, λ⟩.
    pub fn twist(&self, datum: &CartanSatakeDatum) -> Self {
        Weight((0..self.rank()).map(|i| self.0[datum.tau(i)]).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        Weight(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// One coordinate of an ı-weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IEntry {
    /// ⟨h_i − h_{τ(i)}, ζ⟩ on a split orbit.
    Signed(i64),
    /// ⟨h_i, ζ⟩ mod 2 on a fixed point.
    Parity(u8),
}

impl IEntry {
    pub fn add(self, o: IEntry) -> IEntry {
        match (self, o) {
            (IEntry::Signed(a), IEntry::Signed(b)) => IEntry::Signed(a + b),
            (IEntry::Parity(a), IEntry::Parity(b)) => IEntry::Parity((a + b) % 2),
            _ => panic!("mixing signed and parity ı-weight entries"),
        }
    }

    pub fn neg(self) -> IEntry {
        match self {
            IEntry::Signed(a) => IEntry::Signed(-a),
            p => p,
        }
    }

    /// The signed value; panics on a parity entry.
    pub fn signed(self) -> i64 {
        match self {
            IEntry::Signed(a) => a,
            IEntry::Parity(_) => panic!("parity entry used as an integer"),
        }
    }

    pub fn parity(self) -> u8 {
        match self {
            IEntry::Parity(p) => p,
            IEntry::Signed(a) => a.rem_euclid(2) as u8,
        }
    }
}

/// An element of X^ı, one entry per τ-orbit in the order of `i_tau`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IWeight(pub Vec<IEntry>);

impl IWeight {
    pub fn zero(datum: &CartanSatakeDatum) -> Self {
        project_weight(&Weight::zero(datum.rank()), datum)
    }

    /// wt^ı_i(ζ): the signed pairing with h_i − h_{τ(i)}, or the parity at a fixed point.
    pub fn at(&self, datum: &CartanSatakeDatum, i: usize) -> IEntry {
        let e = self.0[datum.orbit(i)];
        if datum.in_i_tau(i) {
            e
        } else {
            e.neg()
        }
    }

    /// ᾱ_i.
    pub fn simple_root(datum: &CartanSatakeDatum, i: usize) -> Self {
        project_weight(&Weight::simple_root(datum, i), datum)
    }

    pub fn add(&self, o: &IWeight) -> IWeight {
        IWeight(self.0.iter().zip(&o.0).map(|(a, b)| a.add(*b)).collect())
    }

    pub fn sub(&self, o: &IWeight) -> IWeight {
        IWeight(self.0.iter().zip(&o.0).map(|(a, b)| a.add(b.neg())).collect())
    }
}

impl fmt::Display for IWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match x {
                IEntry::Signed(a) => write!(f, "{a}")?,
                IEntry::Parity(p) => write!(f, "{p}̄")?,
            }
        }
        write!(f, ")")
    }
}

/// The image of λ in X^ı = X / {μ + τμ}.
pub fn project_weight(lambda: &Weight, datum: &CartanSatakeDatum) -> IWeight {
    IWeight(
        datum
            .i_tau()
            .iter()
            .map(|&i| match datum.kind(i) {
                OrbitKind::Fixed => IEntry::Parity(lambda.get(i).rem_euclid(2) as u8),
                _ => IEntry::Signed(lambda.get(i) - lambda.get(datum.tau(i))),
            })
            .collect(),
    )
}

/// Format helper used by reports.
pub fn fmt_word(datum: &CartanSatakeDatum, word: &[usize]) -> String {
    let mut s = String::from("[");
    for (k, &i) in word.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(datum.label(i));
    }
    s.push(']');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn projection_examples() {
        let a1 = CartanSatakeDatum::a1(0);
        assert_eq!(project_weight(&Weight(vec![4]), &a1), IWeight(vec![IEntry::Parity(0)]));
        let d = CartanSatakeDatum::a1xa1();
        assert_eq!(project_weight(&Weight(vec![3, 1]), &d), IWeight(vec![IEntry::Signed(2)]));
    }

    #[test]
    fn projection_is_additive_and_kills_twisted_sums() {
        for d in [CartanSatakeDatum::a1(1), CartanSatakeDatum::a1xa1(), CartanSatakeDatum::a2_flip(1)] {
            let n = d.rank();
            let range = -3..=3i64;
            let mut ws = vec![];
            for x in range.clone() {
                for y in range.clone() {
                    let w = if n == 1 { Weight(vec![x]) } else { Weight(vec![x, y]) };
                    ws.push(w);
                }
            }
            for l in &ws {
                let tl = l.twist(&d);
                assert_eq!(project_weight(&(l + &tl), &d), IWeight::zero(&d));
                for m in &ws {
                    let lhs = project_weight(&(l + m), &d);
                    let rhs = project_weight(l, &d).add(&project_weight(m, &d));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn coordinate_at_non_representative_is_negated() {
        let d = CartanSatakeDatum::a2_flip(1);
        let z = project_weight(&Weight(vec![2, -1]), &d);
        assert_eq!(z.at(&d, 0), IEntry::Signed(3));
        assert_eq!(z.at(&d, 1), IEntry::Signed(-3));
        // ᾱ_i pairs to 3 against h_i − h_τ(i).
        assert_eq!(IWeight::simple_root(&d, 0).at(&d, 0), IEntry::Signed(3));
    }
}
