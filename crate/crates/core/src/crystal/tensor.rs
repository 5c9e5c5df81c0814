use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Crystal, CrystalData, CrystalGraph};
use crate::error::{Error, Result};
use crate::rootdata::{CartanSatakeDatum, ExtInt, Weight};

/// B1 ⊗ B2 evaluated lazily. Ẽ acts on the left factor iff ε(b1) > φ(b2),
/// F̃ acts on the right factor iff ε(b1) < φ(b2).
#[derive(Debug, Clone, Copy)]
pub struct TensorPair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> TensorPair<A, B> {
    pub fn new(left: A, right: B) -> Result<Self> {
        if left.datum() != right.datum() {
            return Err(Error::DatumMismatch);
        }
        Ok(Self { left, right })
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorPair<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn datum(&self) -> &CartanSatakeDatum {
        self.left.datum()
    }
    fn wt(&self, b: &Self::Elem) -> Weight {
        &self.left.wt(&b.0) + &self.right.wt(&b.1)
    }
    fn wt_i(&self, b: &Self::Elem, i: usize) -> i64 {
        self.left.wt_i(&b.0, i) + self.right.wt_i(&b.1, i)
    }
    fn eps(&self, b: &Self::Elem, i: usize) -> ExtInt {
        let e1 = self.left.eps(&b.0, i).add(-self.right.wt_i(&b.1, i));
        e1.max(self.right.eps(&b.1, i))
    }
    fn phi(&self, b: &Self::Elem, i: usize) -> ExtInt {
        let p2 = self.right.phi(&b.1, i).add(self.left.wt_i(&b.0, i));
        self.left.phi(&b.0, i).max(p2)
    }
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.eps(&b.0, i) > self.right.phi(&b.1, i) {
            Some((self.left.e(&b.0, i)?, b.1.clone()))
        } else {
            Some((b.0.clone(), self.right.e(&b.1, i)?))
        }
    }
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.eps(&b.0, i) < self.right.phi(&b.1, i) {
            Some((b.0.clone(), self.right.f(&b.1, i)?))
        } else {
            Some((self.left.f(&b.0, i)?, b.1.clone()))
        }
    }
    fn name(&self, b: &Self::Elem) -> String {
        format!("{}⊗{}", self.left.name(&b.0), self.right.name(&b.1))
    }
}

/// An iterated tensor product x_1 ⊗ (x_2 ⊗ (… ⊗ x_n)) of explicit crystals.
#[derive(Debug, Clone)]
pub struct TensorPower {
    datum: CartanSatakeDatum,
    factors: Vec<CrystalGraph>,
    slots: Vec<usize>,
}

impl TensorPower {
    /// `slots[k]` selects which entry of `factors` sits in position k.
    pub fn new(datum: CartanSatakeDatum, factors: Vec<CrystalGraph>, slots: Vec<usize>) -> Result<Self> {
        if factors.iter().any(|f| *f.datum_ref() != datum) {
            return Err(Error::DatumMismatch);
        }
        if slots.is_empty() || slots.iter().any(|&s| s >= factors.len()) {
            return Err(Error::InvalidParameter("tensor power needs at least one valid slot".into()));
        }
        Ok(Self { datum, factors, slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn factor(&self, k: usize) -> &CrystalGraph {
        &self.factors[self.slots[k]]
    }

    /// φ_i of every suffix x_k ⊗ … ⊗ x_n.
    fn suffix_phi(&self, b: &[usize], i: usize) -> Vec<ExtInt> {
        let n = b.len();
        let mut out = alloc::vec![ExtInt::NegInf; n];
        for k in (0..n).rev() {
            let g = self.factor(k);
            let p = g.phi(&b[k], i);
            out[k] = if k + 1 == n { p } else { p.max(out[k + 1].add(g.wt_i(&b[k], i))) };
        }
        out
    }
}

impl Crystal for TensorPower {
    type Elem = Vec<usize>;

    fn datum(&self) -> &CartanSatakeDatum {
        &self.datum
    }
    fn wt(&self, b: &Vec<usize>) -> Weight {
        let mut w = Weight::zero(self.datum.rank());
        for (k, x) in b.iter().enumerate() {
            w = &w + &self.factor(k).data().wt[*x];
        }
        w
    }
    fn wt_i(&self, b: &Vec<usize>, i: usize) -> i64 {
        b.iter().enumerate().map(|(k, x)| self.factor(k).wt_i(x, i)).sum()
    }
    fn eps(&self, b: &Vec<usize>, i: usize) -> ExtInt {
        let n = b.len();
        let mut e = self.factor(n - 1).eps(&b[n - 1], i);
        let mut w = self.factor(n - 1).wt_i(&b[n - 1], i);
        for k in (0..n - 1).rev() {
            let g = self.factor(k);
            e = g.eps(&b[k], i).add(-w).max(e);
            w += g.wt_i(&b[k], i);
        }
        e
    }
    fn phi(&self, b: &Vec<usize>, i: usize) -> ExtInt {
        self.suffix_phi(b, i)[0]
    }
    fn e(&self, b: &Vec<usize>, i: usize) -> Option<Vec<usize>> {
        let sp = self.suffix_phi(b, i);
        let n = b.len();
        let k = (0..n).find(|&k| k + 1 == n || self.factor(k).eps(&b[k], i) > sp[k + 1])?;
        let mut out = b.clone();
        out[k] = self.factor(k).e(&b[k], i)?;
        Some(out)
    }
    fn f(&self, b: &Vec<usize>, i: usize) -> Option<Vec<usize>> {
        let sp = self.suffix_phi(b, i);
        let n = b.len();
        let k = (0..n).find(|&k| k + 1 == n || self.factor(k).eps(&b[k], i) >= sp[k + 1])?;
        let mut out = b.clone();
        out[k] = self.factor(k).f(&b[k], i)?;
        Some(out)
    }
    fn name(&self, b: &Vec<usize>) -> String {
        let parts: Vec<String> = b.iter().enumerate().map(|(k, x)| self.factor(k).name(x)).collect();
        parts.join("⊗")
    }
}

/// Turns a closed finite set of elements of a lazy crystal into a graph whose
/// handles follow the order of `elems`.
pub fn materialize<C: Crystal>(c: &C, elems: &[C::Elem]) -> Result<CrystalGraph> {
    let index: BTreeMap<&C::Elem, usize> = elems.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let r = c.datum().rank();
    let look = |y: Option<C::Elem>| -> Result<Option<usize>> {
        match y {
            None => Ok(None),
            Some(y) => index
                .get(&y)
                .copied()
                .map(Some)
                .ok_or_else(|| Error::InvalidParameter(format!("element set not closed at {}", c.name(&y)))),
        }
    };
    let mut data = CrystalData {
        names: Vec::with_capacity(elems.len()),
        wt: Vec::with_capacity(elems.len()),
        eps: Vec::with_capacity(elems.len()),
        phi: Vec::with_capacity(elems.len()),
        e: Vec::with_capacity(elems.len()),
        f: Vec::with_capacity(elems.len()),
    };
    for x in elems {
        data.names.push(c.name(x));
        data.wt.push(c.wt(x));
        data.eps.push((0..r).map(|i| c.eps(x, i)).collect());
        data.phi.push((0..r).map(|i| c.phi(x, i)).collect());
        data.e.push((0..r).map(|i| look(c.e(x, i))).collect::<Result<_>>()?);
        data.f.push((0..r).map(|i| look(c.f(x, i))).collect::<Result<_>>()?);
    }
    CrystalGraph::from_data(c.datum().clone(), data)
}

/// B1 ⊗ B2 as an explicit graph; the pair (b1, b2) has handle b1·|B2| + b2.
pub fn tensor_crystals(b1: &CrystalGraph, b2: &CrystalGraph) -> Result<CrystalGraph> {
    let t = TensorPair::new(b1, b2)?;
    let elems: Vec<(usize, usize)> = b1.elements().flat_map(|x| b2.elements().map(move |y| (x, y))).collect();
    materialize(&t, &elems)
}
