use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::linalg::{rank, Q2};
use super::{as_basis, vec_add, ICrystalGraph, Vector};
use crate::error::{Error, Result};
use crate::rootdata::Sqrt2Scalar;

/// A linear map V₁ → V₂ given by the image of each basis element of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICrystalMorphism {
    pub cols: Vec<Vector<usize>>,
}

impl ICrystalMorphism {
    pub fn identity(n: usize) -> Self {
        Self { cols: (0..n).map(|b| [(b, Sqrt2Scalar::ONE)].into_iter().collect()).collect() }
    }

    /// self ∘ first.
    pub fn compose(&self, first: &ICrystalMorphism) -> ICrystalMorphism {
        ICrystalMorphism { cols: first.cols.iter().map(|c| self.apply(c)).collect() }
    }

    /// μ applied to a vector of the source.
    pub fn apply(&self, v: &Vector<usize>) -> Vector<usize> {
        let mut out = Vector::new();
        for (&b, &z) in v {
            for (&t, &w) in &self.cols[b] {
                vec_add(&mut out, t, z * w);
            }
        }
        out
    }
}

/// The strongest class a map belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IMorphismKind {
    NotAMorphism,
    Morphism,
    Strict,
    VeryStrict,
    Equivalence,
    Isomorphism,
}

/// Every property of a candidate morphism; `morphism` carries the first
/// failing witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMorphismClass {
    pub morphism: core::result::Result<(), String>,
    pub strict: bool,
    pub very_strict: bool,
    pub equivalence: bool,
    pub isomorphism: bool,
}

impl IMorphismClass {
    pub fn kind(&self) -> IMorphismKind {
        if self.morphism.is_err() {
            IMorphismKind::NotAMorphism
        } else if self.isomorphism {
            IMorphismKind::Isomorphism
        } else if self.equivalence {
            IMorphismKind::Equivalence
        } else if self.very_strict {
            IMorphismKind::VeryStrict
        } else if self.strict {
            IMorphismKind::Strict
        } else {
            IMorphismKind::Morphism
        }
    }
}

fn btil_of(g: &ICrystalGraph, v: &Vector<usize>, i: usize) -> Vector<usize> {
    let mut out = Vector::new();
    for (&b, &z) in v {
        for &(t, w) in g.row(b, i) {
            vec_add(&mut out, t, z * w);
        }
    }
    out
}

fn morphism_witness(src: &ICrystalGraph, tgt: &ICrystalGraph, m: &ICrystalMorphism) -> core::result::Result<(), String> {
    let names = |g: &ICrystalGraph, b: usize| g.data().names[b].clone();
    for b1 in src.elements() {
        for &b2 in m.cols[b1].keys() {
            if src.wti_at(b1) != tgt.wti_at(b2) {
                return Err(format!("(1) ı-weights differ at {} -> {}", names(src, b1), names(tgt, b2)));
            }
            for i in 0..src.datum_ref().rank() {
                if src.beta_at(b1, i) != tgt.beta_at(b2, i) {
                    return Err(format!("(1) β_{} differs at {} -> {}", i + 1, names(src, b1), names(tgt, b2)));
                }
            }
        }
    }
    for b1 in src.elements() {
        if m.cols[b1].is_empty() {
            continue;
        }
        for i in 0..src.datum_ref().rank() {
            let Some(b1p) = as_basis(&src.btil_vec(b1, i)) else { continue };
            if m.cols[b1p].is_empty() {
                continue;
            }
            if m.cols[b1p] != btil_of(tgt, &m.cols[b1], i) {
                return Err(format!("(2) μ(B̃_{} {}) ≠ B̃_{} μ({})", i + 1, names(src, b1), i + 1, names(src, b1)));
            }
        }
    }
    Ok(())
}

/// Classifies μ: ℬ₁ → V₂ as a morphism of ıcrystals and decides strictness,
/// very strictness, equivalence and isomorphism.
pub fn check_icrystal_morphism(src: &ICrystalGraph, tgt: &ICrystalGraph, m: &ICrystalMorphism) -> Result<IMorphismClass> {
    if src.datum_ref() != tgt.datum_ref() {
        return Err(Error::DatumMismatch);
    }
    if m.cols.len() != src.len() || m.cols.iter().any(|c| c.keys().any(|&t| t >= tgt.len())) {
        return Err(Error::InvalidParameter("morphism matrix does not fit the ıcrystals".into()));
    }
    let morphism = morphism_witness(src, tgt, m);
    let strict = morphism.is_ok()
        && src.elements().all(|b| {
            (0..src.datum_ref().rank()).all(|i| m.apply(&src.btil_vec(b, i)) == btil_of(tgt, &m.cols[b], i))
        });
    let basis_cols = m.cols.iter().all(|c| c.is_empty() || as_basis(c).is_some());
    let very_strict = strict && basis_cols;
    let invertible = src.len() == tgt.len()
        && if basis_cols {
            let hits: BTreeSet<usize> = m.cols.iter().filter_map(as_basis).collect();
            hits.len() == tgt.len()
        } else {
            let mut dense = alloc::vec![alloc::vec![Q2::zero(); src.len()]; tgt.len()];
            for (b, col) in m.cols.iter().enumerate() {
                for (&t, &z) in col {
                    dense[t][b] = Q2::from_scalar(z);
                }
            }
            rank(dense) == tgt.len()
        };
    let equivalence = strict && invertible;
    Ok(IMorphismClass { morphism, strict, very_strict, equivalence, isomorphism: equivalence && very_strict })
}

/// An isomorphism a → b when one exists, found by backtracking over
/// elements with equal ı-weight and β, extending along B̃-edges.
pub fn find_isomorphism(a: &ICrystalGraph, b: &ICrystalGraph) -> Result<Option<ICrystalMorphism>> {
    if a.datum_ref() != b.datum_ref() {
        return Err(Error::DatumMismatch);
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let r = a.datum_ref().rank();
    let sig = |g: &ICrystalGraph, x: usize| (g.wti_at(x).clone(), g.data().beta[x].clone(), (0..r).map(|i| g.row(x, i).len()).collect::<Vec<_>>());
    // visit order: each new element is adjacent to an earlier one when possible
    let mut order = Vec::with_capacity(a.len());
    let mut seen = alloc::vec![false; a.len()];
    for start in a.elements() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut k = order.len();
        order.push(start);
        while k < order.len() {
            let x = order[k];
            k += 1;
            for i in 0..r {
                for &(t, _) in a.row(x, i) {
                    if !seen[t] {
                        seen[t] = true;
                        order.push(t);
                    }
                }
            }
        }
    }
    let mut map = alloc::vec![usize::MAX; a.len()];
    let mut used = alloc::vec![false; b.len()];
    let fits = |map: &[usize], x: usize, y: usize| -> bool {
        for i in 0..r {
            for &(t, z) in a.row(x, i) {
                if map[t] != usize::MAX && b.entry(y, i, map[t]) != z {
                    return false;
                }
            }
            for &(t, z) in b.row(y, i) {
                if let Some(s) = map.iter().position(|&m| m == t) {
                    if a.entry(x, i, s) != z {
                        return false;
                    }
                }
            }
        }
        // edges from already mapped elements into x
        for (s, &m) in map.iter().enumerate() {
            if m != usize::MAX {
                for i in 0..r {
                    if a.entry(s, i, x) != b.entry(m, i, y) {
                        return false;
                    }
                }
            }
        }
        true
    };
    fn go(
        k: usize,
        order: &[usize],
        map: &mut [usize],
        used: &mut [bool],
        cand: &dyn Fn(usize) -> Vec<usize>,
        fits: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in cand(x) {
            if used[y] || !fits(map, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(k + 1, order, map, used, cand, fits) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    let sb: Vec<_> = b.elements().map(|y| sig(b, y)).collect();
    let cand = |x: usize| -> Vec<usize> {
        let s = sig(a, x);
        b.elements().filter(|&y| sb[y] == s).collect()
    };
    if !go(0, &order, &mut map, &mut used, &cand, &fits) {
        return Ok(None);
    }
    Ok(Some(ICrystalMorphism { cols: map.iter().map(|&y| [(y, Sqrt2Scalar::ONE)].into_iter().collect()).collect() }))
}
