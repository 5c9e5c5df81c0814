use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Crystal;
use crate::error::{Error, Result};
use crate::rootdata::{CartanSatakeDatum, ExtInt, Weight};

/// Raw tables of an explicit crystal, indexed `[element][i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalData {
    pub names: Vec<String>,
    pub wt: Vec<Weight>,
    pub eps: Vec<Vec<ExtInt>>,
    pub phi: Vec<Vec<ExtInt>>,
    pub e: Vec<Vec<Option<usize>>>,
    pub f: Vec<Vec<Option<usize>>>,
}

/// A finite crystal with elements `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    datum: CartanSatakeDatum,
    data: CrystalData,
}

impl CrystalGraph {
    /// Wraps tables after checking their shapes. Axioms are not checked here.
    pub fn from_data(datum: CartanSatakeDatum, data: CrystalData) -> Result<Self> {
        let n = data.names.len();
        let r = datum.rank();
        let shape_ok = data.wt.len() == n
            && data.eps.len() == n
            && data.phi.len() == n
            && data.e.len() == n
            && data.f.len() == n
            && data.wt.iter().all(|w| w.rank() == r)
            && data.eps.iter().chain(&data.phi).all(|v| v.len() == r)
            && data.e.iter().chain(&data.f).all(|v| v.len() == r && v.iter().flatten().all(|&t| t < n));
        if !shape_ok {
            return Err(Error::InvalidParameter("crystal tables have inconsistent shapes".into()));
        }
        Ok(Self { datum, data })
    }

    /// Builds a seminormal crystal from its F̃-edges; Ẽ is the inverse and
    /// ε, φ are string lengths.
    pub fn seminormal_from_f(
        datum: CartanSatakeDatum,
        names: Vec<String>,
        wt: Vec<Weight>,
        f: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let n = names.len();
        let r = datum.rank();
        let mut e = alloc::vec![alloc::vec![None; r]; n];
        for (b, row) in f.iter().enumerate() {
            for (i, t) in row.iter().enumerate() {
                if let Some(t) = *t {
                    if t >= n || e[t][i].is_some() {
                        return Err(Error::InvalidParameter(format!("F̃_{} is not injective", i + 1)));
                    }
                    e[t][i] = Some(b);
                }
            }
        }
        let string = |m: &Vec<Vec<Option<usize>>>, b: usize, i: usize| {
            let (mut k, mut x) = (0i64, b);
            while let Some(y) = m[x][i] {
                k += 1;
                x = y;
                if k as usize > n {
                    break;
                }
            }
            ExtInt::Fin(k)
        };
        let eps = (0..n).map(|b| (0..r).map(|i| string(&e, b, i)).collect()).collect();
        let phi = (0..n).map(|b| (0..r).map(|i| string(&f, b, i)).collect()).collect();
        Self::from_data(datum, CrystalData { names, wt, eps, phi, e, f })
    }

    pub fn datum_ref(&self) -> &CartanSatakeDatum {
        &self.datum
    }

    pub fn len(&self) -> usize {
        self.data.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn data(&self) -> &CrystalData {
        &self.data
    }

    pub fn into_data(self) -> CrystalData {
        self.data
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.len()
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    /// Elements with ε_i = 0 for every i.
    pub fn highest_elements(&self) -> Vec<usize> {
        self.elements()
            .filter(|&b| self.data.eps[b].iter().all(|&x| x == ExtInt::Fin(0)))
            .collect()
    }
}

impl Crystal for CrystalGraph {
    type Elem = usize;

    fn datum(&self) -> &CartanSatakeDatum {
        &self.datum
    }
    fn wt(&self, b: &usize) -> Weight {
        self.data.wt[*b].clone()
    }
    fn eps(&self, b: &usize, i: usize) -> ExtInt {
        self.data.eps[*b][i]
    }
    fn phi(&self, b: &usize, i: usize) -> ExtInt {
        self.data.phi[*b][i]
    }
    fn e(&self, b: &usize, i: usize) -> Option<usize> {
        self.data.e[*b][i]
    }
    fn f(&self, b: &usize, i: usize) -> Option<usize> {
        self.data.f[*b][i]
    }
    fn name(&self, b: &usize) -> String {
        self.data.names[*b].clone()
    }
    fn wt_i(&self, b: &usize, i: usize) -> i64 {
        self.data.wt[*b].get(i)
    }
}
