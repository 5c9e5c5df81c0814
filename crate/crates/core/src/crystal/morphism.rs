use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Crystal, CrystalGraph};

/// A map B1 → B2 ⊔ {0}; `map[b] = None` means b ↦ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalMorphism {
    pub map: Vec<Option<usize>>,
}

impl CrystalMorphism {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).map(Some).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrystalMorphismClass {
    NotAMorphism(String),
    Morphism,
    Strict,
    Isomorphism,
}

/// Classifies a map against the morphism clauses (1)–(3), strictness and bijectivity.
pub fn check_crystal_morphism(src: &CrystalGraph, tgt: &CrystalGraph, m: &CrystalMorphism) -> CrystalMorphismClass {
    let d = src.datum_ref();
    if d != tgt.datum_ref() {
        return CrystalMorphismClass::NotAMorphism("datum mismatch".into());
    }
    if m.map.len() != src.len() || m.map.iter().flatten().any(|&t| t >= tgt.len()) {
        return CrystalMorphismClass::NotAMorphism("map has the wrong shape".into());
    }
    let mu = |b: Option<usize>| b.and_then(|b| m.map[b]);
    let mut strict = true;
    for b in src.elements() {
        if let Some(t) = m.map[b] {
            if tgt.wt(&t) != src.wt(&b) {
                return CrystalMorphismClass::NotAMorphism(format!("(1): wt differs at {}", src.name(&b)));
            }
            for i in 0..d.rank() {
                if tgt.eps(&t, i) != src.eps(&b, i) || tgt.phi(&t, i) != src.phi(&b, i) {
                    return CrystalMorphismClass::NotAMorphism(format!("(1): ε or φ differs at {}", src.name(&b)));
                }
            }
        }
        for i in 0..d.rank() {
            for (clause, op_s, op_t) in [
                ("(2)", src.e(&b, i), m.map[b].and_then(|t| tgt.e(&t, i))),
                ("(3)", src.f(&b, i), m.map[b].and_then(|t| tgt.f(&t, i))),
            ] {
                let image = mu(op_s);
                if op_s.is_some() && m.map[b].is_some() && image.is_some() && image != op_t {
                    return CrystalMorphismClass::NotAMorphism(format!("{clause}: fails at {} for i = {}", src.name(&b), d.label(i)));
                }
                if image != op_t {
                    strict = false;
                }
            }
        }
    }
    if !strict {
        return CrystalMorphismClass::Morphism;
    }
    let mut hit = alloc::vec![false; tgt.len()];
    let bijective = src.len() == tgt.len()
        && m.map.iter().all(|t| match t {
            Some(t) if !hit[*t] => {
                hit[*t] = true;
                true
            }
            _ => false,
        });
    if bijective {
        CrystalMorphismClass::Isomorphism
    } else {
        CrystalMorphismClass::Strict
    }
}
