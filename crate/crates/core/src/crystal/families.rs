use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{highest_weight_component, Crystal, CrystalData, CrystalGraph, TensorPower};
use crate::error::{Error, Result};
use crate::rootdata::{CartanSatakeDatum, ExtInt, Weight};

/// B(n) over a rank one datum: wt = n − 2k, ε = k, φ = n − k.
pub fn b_n(datum: &CartanSatakeDatum, n: i64) -> Result<CrystalGraph> {
    if datum.rank() != 1 {
        return Err(Error::InvalidParameter("B(n) needs a rank one datum".into()));
    }
    if n < 0 {
        return Err(Error::InvalidParameter(format!("B(n) needs n ≥ 0, got {n}")));
    }
    let m = n as usize;
    let names = (0..=m).map(|k| format!("b_{k}")).collect();
    let wt = (0..=n).map(|k| Weight(alloc::vec![n - 2 * k])).collect();
    let f = (0..=m).map(|k| alloc::vec![if k < m { Some(k + 1) } else { None }]).collect();
    CrystalGraph::seminormal_from_f(datum.clone(), names, wt, f)
}

/// T_λ: a single element with ε = φ = −∞.
pub fn t_lambda(datum: &CartanSatakeDatum, lambda: &Weight) -> Result<CrystalGraph> {
    let r = datum.rank();
    if lambda.rank() != r {
        return Err(Error::InvalidParameter("weight has the wrong rank".into()));
    }
    CrystalGraph::from_data(
        datum.clone(),
        CrystalData {
            names: alloc::vec![format!("t_{lambda}")],
            wt: alloc::vec![lambda.clone()],
            eps: alloc::vec![alloc::vec![ExtInt::NegInf; r]],
            phi: alloc::vec![alloc::vec![ExtInt::NegInf; r]],
            e: alloc::vec![alloc::vec![None; r]],
            f: alloc::vec![alloc::vec![None; r]],
        },
    )
}

/// Nodes of each connected component of the Dynkin diagram, ordered along the
/// path when the component is of type A (starting from its smallest endpoint).
fn type_a_path(datum: &CartanSatakeDatum, start_node: usize) -> Result<Vec<usize>> {
    let n = datum.rank();
    let adj = |i: usize| (0..n).filter(move |&j| j != i && datum.a(i, j) != 0);
    let mut comp = alloc::vec![start_node];
    let mut k = 0;
    while k < comp.len() {
        for j in adj(comp[k]) {
            if !comp.contains(&j) {
                comp.push(j);
            }
        }
        k += 1;
    }
    let not_a = || Error::InvalidParameter("highest weight crystals are available for type A components only".into());
    let mut edges = 0;
    for &i in &comp {
        let deg = adj(i).count();
        if deg > 2 {
            return Err(not_a());
        }
        for j in adj(i) {
            if datum.a(i, j) != -1 || datum.a(j, i) != -1 {
                return Err(not_a());
            }
            edges += 1;
        }
    }
    if edges / 2 + 1 != comp.len() {
        return Err(not_a());
    }
    let start = comp.iter().copied().filter(|&i| adj(i).count() <= 1).min().ok_or_else(not_a)?;
    let mut path = alloc::vec![start];
    while path.len() < comp.len() {
        let last = *path.last().unwrap();
        let next = adj(last).find(|j| !path.contains(j)).ok_or_else(not_a)?;
        path.push(next);
    }
    Ok(path)
}

/// The one-row crystal b_0 → b_1 → … → b_m along a path p_1, …, p_m of nodes,
/// with F̃_{p_k} b_{k−1} = b_k. For m = 2 the elements are named b_{-1}, b_0, b_1.
pub fn one_row(datum: &CartanSatakeDatum, path: &[usize]) -> Result<CrystalGraph> {
    let r = datum.rank();
    let m = path.len();
    if m == 0 || path.iter().any(|&p| p >= r) {
        return Err(Error::InvalidParameter("one-row crystal needs a non-empty path".into()));
    }
    let offset: i64 = if m == 2 { -1 } else { 0 };
    let names = (0..=m).map(|k| format!("b_{}", k as i64 + offset)).collect();
    let mut wt = alloc::vec![Weight::fundamental(r, path[0])];
    for k in 0..m {
        let w = &wt[k] - &Weight::simple_root(datum, path[k]);
        wt.push(w);
    }
    let mut f = alloc::vec![alloc::vec![None; r]; m + 1];
    for k in 0..m {
        f[k][path[k]] = Some(k + 1);
    }
    CrystalGraph::seminormal_from_f(datum.clone(), names, wt, f)
}

/// The natural crystal of a connected type A datum; for A2 with the flip this
/// is b_{-1} →(i) b_0 →(τ(i)) b_1 with i the orbit representative.
pub fn natural(datum: &CartanSatakeDatum) -> Result<CrystalGraph> {
    let path = type_a_path(datum, 0)?;
    if path.len() != datum.rank() {
        return Err(Error::InvalidParameter("natural crystal needs a connected datum".into()));
    }
    one_row(datum, &path)
}

/// B(ϖ_j), as the highest component of a tensor power of a one-row crystal.
pub fn fundamental(datum: &CartanSatakeDatum, j: usize) -> Result<CrystalGraph> {
    let path = type_a_path(datum, j)?;
    let row = one_row(datum, &path)?;
    let pos = path.iter().position(|&p| p == j).unwrap() + 1;
    if pos == 1 {
        return Ok(row);
    }
    let power = TensorPower::new(datum.clone(), alloc::vec![row.clone()], alloc::vec![0; pos])?;
    let target = Weight::fundamental(datum.rank(), j);
    let mut tuple = alloc::vec![0usize; pos];
    loop {
        if power.wt(&tuple) == target && (0..datum.rank()).all(|i| power.eps(&tuple, i) == ExtInt::Fin(0)) {
            let comp = highest_weight_component(&power, tuple, crate::DEFAULT_CAP)?;
            return Ok(comp.graph);
        }
        // odometer step over all tuples
        let mut k = pos;
        loop {
            if k == 0 {
                return Err(Error::InvalidParameter(format!("no highest element of weight {target}")));
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < row.len() {
                break;
            }
            tuple[k] = 0;
        }
    }
}

/// B(λ) realised lazily inside ⊗_j B(ϖ_j)^{⊗λ_j}, seeded at the tensor of
/// highest elements.
#[derive(Debug, Clone)]
pub struct HighestWeightModel {
    datum: CartanSatakeDatum,
    lambda: Weight,
    power: Option<TensorPower>,
}

impl HighestWeightModel {
    pub fn new(datum: &CartanSatakeDatum, lambda: &Weight) -> Result<Self> {
        if lambda.rank() != datum.rank() {
            return Err(Error::InvalidParameter("weight has the wrong rank".into()));
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(format!("{lambda}")));
        }
        let mut factors = Vec::new();
        let mut slots = Vec::new();
        for j in 0..datum.rank() {
            if lambda.get(j) > 0 {
                factors.push(fundamental(datum, j)?);
                slots.extend(core::iter::repeat_n(factors.len() - 1, lambda.get(j) as usize));
            }
        }
        let power = if slots.is_empty() { None } else { Some(TensorPower::new(datum.clone(), factors, slots)?) };
        Ok(Self { datum: datum.clone(), lambda: lambda.clone(), power })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn highest(&self) -> Vec<usize> {
        alloc::vec![0; self.power.as_ref().map_or(0, |p| p.len())]
    }

    /// F̃_{i_r} ⋯ F̃_{i_1} b_λ, or None once a step leaves the crystal.
    pub fn apply_word(&self, word: &[usize]) -> Option<Vec<usize>> {
        let mut b = self.highest();
        for &i in word {
            b = self.f(&b, i)?;
        }
        Some(b)
    }

    /// The whole component as an explicit graph.
    pub fn explicit(&self, cap: usize) -> Result<BLambda> {
        let comp = highest_weight_component(self, self.highest(), cap)?;
        let index = comp.elems.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        Ok(BLambda { lambda: self.lambda.clone(), graph: comp.graph, tuples: comp.elems, index })
    }
}

impl Crystal for HighestWeightModel {
    type Elem = Vec<usize>;
    fn datum(&self) -> &CartanSatakeDatum {
        &self.datum
    }
    fn wt(&self, b: &Vec<usize>) -> Weight {
        self.power.as_ref().map_or_else(|| Weight::zero(self.datum.rank()), |p| p.wt(b))
    }
    fn wt_i(&self, b: &Vec<usize>, i: usize) -> i64 {
        self.power.as_ref().map_or(0, |p| p.wt_i(b, i))
    }
    fn eps(&self, b: &Vec<usize>, i: usize) -> ExtInt {
        self.power.as_ref().map_or(ExtInt::Fin(0), |p| p.eps(b, i))
    }
    fn phi(&self, b: &Vec<usize>, i: usize) -> ExtInt {
        self.power.as_ref().map_or(ExtInt::Fin(0), |p| p.phi(b, i))
    }
    fn e(&self, b: &Vec<usize>, i: usize) -> Option<Vec<usize>> {
        self.power.as_ref().and_then(|p| p.e(b, i))
    }
    fn f(&self, b: &Vec<usize>, i: usize) -> Option<Vec<usize>> {
        self.power.as_ref().and_then(|p| p.f(b, i))
    }
    fn name(&self, b: &Vec<usize>) -> String {
        match &self.power {
            Some(p) => p.name(b),
            None => String::from("b_0"),
        }
    }
}

/// An explicit B(λ) with handle 0 the highest element.
#[derive(Debug, Clone)]
pub struct BLambda {
    pub lambda: Weight,
    pub graph: CrystalGraph,
    pub tuples: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl BLambda {
    pub fn handle(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Follows a word of F̃ steps from the highest element inside the graph.
    pub fn apply_word(&self, word: &[usize]) -> Option<usize> {
        let mut b = 0;
        for &i in word {
            b = self.graph.f(&b, i)?;
        }
        Some(b)
    }

    /// One F̃-word per element, read off a breadth-first spanning tree.
    pub fn covering_words(&self) -> Vec<Vec<usize>> {
        let n = self.graph.len();
        let r = self.graph.datum_ref().rank();
        let mut words: Vec<Option<Vec<usize>>> = alloc::vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = alloc::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for i in 0..r {
                if let Some(y) = self.graph.f(&x, i) {
                    if words[y].is_none() {
                        let mut w = words[x].clone().unwrap();
                        w.push(i);
                        words[y] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
        }
        words.into_iter().map(|w| w.expect("B(λ) is F̃-connected from its highest element")).collect()
    }

    /// For every element, the words w·i over all in-edges F̃_i b' = b, with w
    /// the covering word of b′ (the highest element gets the empty word).
    pub fn in_edge_words(&self) -> Vec<Vec<Vec<usize>>> {
        let cover = self.covering_words();
        let r = self.graph.datum_ref().rank();
        let mut out: Vec<Vec<Vec<usize>>> = alloc::vec![Vec::new(); self.graph.len()];
        out[0].push(Vec::new());
        for x in self.graph.elements() {
            for i in 0..r {
                if let Some(y) = self.graph.f(&x, i) {
                    let mut w = cover[x].clone();
                    w.push(i);
                    out[y].push(w);
                }
            }
        }
        out
    }
}
