use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ICrystal, Vector};
use crate::error::{Error, Result};
use crate::rootdata::{CartanSatakeDatum, IExtInt, IWeight, Sqrt2Scalar};

/// Raw tables of an explicit ıcrystal, indexed `[element][i]`. Each B̃ row is
/// a list of (target, amplitude) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICrystalData {
    pub names: Vec<String>,
    pub wti: Vec<IWeight>,
    pub beta: Vec<Vec<IExtInt>>,
    pub btil: Vec<Vec<Vec<(usize, Sqrt2Scalar)>>>,
}

/// A finite ıcrystal with elements `0..len()` forming an orthonormal basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICrystalGraph {
    datum: CartanSatakeDatum,
    data: ICrystalData,
}

impl ICrystalGraph {
    /// Wraps tables after checking shapes; rows are sorted and zero entries dropped.
    pub fn from_data(datum: CartanSatakeDatum, mut data: ICrystalData) -> Result<Self> {
        let n = data.names.len();
        let r = datum.rank();
        let orbits = datum.i_tau().len();
        let shape_ok = data.wti.len() == n
            && data.beta.len() == n
            && data.btil.len() == n
            && data.wti.iter().all(|w| w.0.len() == orbits)
            && data.beta.iter().all(|v| v.len() == r)
            && data.btil.iter().all(|v| v.len() == r);
        if !shape_ok {
            return Err(Error::InvalidParameter("ıcrystal tables have inconsistent shapes".into()));
        }
        for row in data.btil.iter_mut().flatten() {
            row.retain(|(_, z)| !z.is_zero());
            row.sort_by_key(|(t, _)| *t);
            if row.iter().any(|(t, _)| *t >= n) || row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidParameter("B̃ row has a bad or repeated target".into()));
            }
        }
        Ok(Self { datum, data })
    }

    /// Builds B̃ from graph edges (b, i, b′, z) with i ∈ I_τ; the remaining
    /// operators follow from (B̃_i b, b′) = (b, B̃_{τ(i)} b′).
    pub fn from_graph_edges(
        datum: CartanSatakeDatum,
        names: Vec<String>,
        wti: Vec<IWeight>,
        beta: Vec<Vec<IExtInt>>,
        edges: &[(usize, usize, usize, Sqrt2Scalar)],
    ) -> Result<Self> {
        let n = names.len();
        let mut btil = alloc::vec![alloc::vec![Vec::new(); datum.rank()]; n];
        for &(b, i, t, z) in edges {
            if i >= datum.rank() || !datum.in_i_tau(i) {
                return Err(Error::InvalidParameter(format!("edge label {} is not in I_τ", i + 1)));
            }
            if b >= n || t >= n {
                return Err(Error::InvalidParameter("edge endpoint out of range".into()));
            }
            btil[b][i].push((t, z));
            let ti = datum.tau(i);
            if ti != i {
                btil[t][ti].push((b, z));
            }
        }
        Self::from_data(datum, ICrystalData { names, wti, beta, btil })
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

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.len()
    }

    pub fn data(&self) -> &ICrystalData {
        &self.data
    }

    pub fn into_data(self) -> ICrystalData {
        self.data
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    pub fn row(&self, b: usize, i: usize) -> &[(usize, Sqrt2Scalar)] {
        &self.data.btil[b][i]
    }

    pub fn beta_at(&self, b: usize, i: usize) -> IExtInt {
        self.data.beta[b][i]
    }

    pub fn wti_at(&self, b: usize) -> &IWeight {
        &self.data.wti[b]
    }

    /// (B̃_i b, b′).
    pub fn entry(&self, b: usize, i: usize, t: usize) -> Sqrt2Scalar {
        self.data.btil[b][i].iter().find(|(x, _)| *x == t).map_or(Sqrt2Scalar::ZERO, |(_, z)| *z)
    }

    pub fn btil_vec(&self, b: usize, i: usize) -> Vector<usize> {
        self.data.btil[b][i].iter().copied().collect()
    }

    /// Graph edges (b, i, b′, z) for i ∈ I_τ, ordered by (b, i, b′).
    pub fn graph_edges(&self) -> Vec<(usize, usize, usize, Sqrt2Scalar)> {
        let mut out = Vec::new();
        for b in self.elements() {
            for &i in self.datum.i_tau() {
                for &(t, z) in &self.data.btil[b][i] {
                    out.push((b, i, t, z));
                }
            }
        }
        out
    }
}

impl ICrystal for ICrystalGraph {
    type Elem = usize;
    fn datum(&self) -> &CartanSatakeDatum {
        &self.datum
    }
    fn wti(&self, b: &usize) -> IWeight {
        self.data.wti[*b].clone()
    }
    fn beta(&self, b: &usize, i: usize) -> Result<IExtInt> {
        Ok(self.data.beta[*b][i])
    }
    fn btil(&self, b: &usize, i: usize) -> Result<Vector<usize>> {
        Ok(self.btil_vec(*b, i))
    }
    fn name(&self, b: &usize) -> String {
        self.data.names[*b].clone()
    }
}

/// Turns a closed finite set of elements of a lazy ıcrystal into a graph.
pub fn materialize_icrystal<C: ICrystal>(c: &C, elems: &[C::Elem]) -> Result<ICrystalGraph> {
    let index: BTreeMap<&C::Elem, usize> = elems.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let r = c.datum().rank();
    let n = elems.len();
    let mut data = ICrystalData {
        names: Vec::with_capacity(n),
        wti: Vec::with_capacity(n),
        beta: Vec::with_capacity(n),
        btil: Vec::with_capacity(n),
    };
    for x in elems {
        data.names.push(c.name(x));
        data.wti.push(c.wti(x));
        data.beta.push((0..r).map(|i| c.beta(x, i)).collect::<Result<_>>()?);
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let mut row = Vec::new();
            for (y, z) in c.btil(x, i)? {
                let t = index
                    .get(&y)
                    .copied()
                    .ok_or_else(|| Error::InvalidParameter(format!("element set not closed at {}", c.name(&y))))?;
                row.push((t, z));
            }
            rows.push(row);
        }
        data.btil.push(rows);
    }
    ICrystalGraph::from_data(c.datum().clone(), data)
}

/// B1 ⊔ B2; elements of B2 are shifted by |B1|.
pub fn disjoint_union(a: &ICrystalGraph, b: &ICrystalGraph) -> Result<ICrystalGraph> {
    if a.datum_ref() != b.datum_ref() {
        return Err(Error::DatumMismatch);
    }
    let shift = a.len();
    let mut data = a.data.clone();
    let o = b.data.clone();
    data.names.extend(o.names);
    data.wti.extend(o.wti);
    data.beta.extend(o.beta);
    data.btil.extend(
        o.btil
            .into_iter()
            .map(|rows| rows.into_iter().map(|row| row.into_iter().map(|(t, z)| (t + shift, z)).collect()).collect()),
    );
    ICrystalGraph::from_data(a.datum_ref().clone(), data)
}
