use alloc::format;
use alloc::string::String;

use super::rule::tensor_icrystal_crystal;
use crate::crystal::{tensor_crystals, CrystalGraph, CrystalMorphism};
use crate::error::Result;
use crate::icrystal::{vec_add, ICrystalGraph, ICrystalMorphism, Vector};

/// The first place where B₁ ⊗ (B₂ ⊗ B₃) and (B₁ ⊗ B₂) ⊗ B₃ disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocWitness {
    pub element: String,
    pub i: usize,
    pub detail: String,
}

/// Compares both bracketings under b₁ ⊗ (b₂ ⊗ b₃) ↦ (b₁ ⊗ b₂) ⊗ b₃. With
/// row-major handles that map is the identity on handles.
pub fn check_associativity(b1: &ICrystalGraph, b2: &CrystalGraph, b3: &CrystalGraph) -> Result<Option<AssocWitness>> {
    let right_first = tensor_icrystal_crystal(b1, &tensor_crystals(b2, b3)?)?;
    let left_first = tensor_icrystal_crystal(&tensor_icrystal_crystal(b1, b2)?, b3)?;
    let d = b1.datum_ref();
    for b in right_first.elements() {
        let name = || right_first.data().names[b].clone();
        if right_first.wti_at(b) != left_first.wti_at(b) {
            return Ok(Some(AssocWitness { element: name(), i: 0, detail: "ı-weight".into() }));
        }
        for i in 0..d.rank() {
            let (x, y) = (right_first.beta_at(b, i), left_first.beta_at(b, i));
            if x != y {
                return Ok(Some(AssocWitness { element: name(), i, detail: format!("β {x} vs {y}") }));
            }
            if right_first.row(b, i) != left_first.row(b, i) {
                return Ok(Some(AssocWitness { element: name(), i, detail: "B̃ column".into() }));
            }
        }
    }
    Ok(None)
}

/// μ₁ ⊗ μ₂ on row-major handles; `tgt2_len` is the size of μ₂'s target.
pub fn tensor_morphisms(m1: &ICrystalMorphism, m2: &CrystalMorphism, tgt2_len: usize) -> ICrystalMorphism {
    let mut cols = alloc::vec::Vec::with_capacity(m1.cols.len() * m2.map.len());
    for c1 in &m1.cols {
        for img in &m2.map {
            let mut col = Vector::new();
            if let Some(y) = img {
                for (&x, &z) in c1 {
                    vec_add(&mut col, x * tgt2_len + y, z);
                }
            }
            cols.push(col);
        }
    }
    ICrystalMorphism { cols }
}
