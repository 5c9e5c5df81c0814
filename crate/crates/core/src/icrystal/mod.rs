//! ıcrystals: the abstract interface, explicit graphs with sparse B̃ over
//! ℤ[1/√2], the axiom checker, the built-in families and morphisms.

mod axioms;
mod families;
mod graph;
mod linalg;
mod morphism;

pub use axioms::check_icrystal_axioms;
pub use families::{
    bi_adjacent, bi_orthogonal, bi_pair, bi_rank1, bi_vee, bi_wedge, builtin_equivalence, make_builtin, t_zeta, trivial,
    BuiltinFamily,
};
pub use graph::{disjoint_union, materialize_icrystal, ICrystalData, ICrystalGraph};
pub use morphism::{check_icrystal_morphism, find_isomorphism, ICrystalMorphism, IMorphismClass, IMorphismKind};

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::error::Result;
use crate::rootdata::{CartanSatakeDatum, IExtInt, IWeight, Sqrt2Scalar};

/// A finite linear combination of basis elements with nonzero coefficients.
pub type Vector<E> = BTreeMap<E, Sqrt2Scalar>;

/// Adds z·e to v, dropping entries that cancel.
pub fn vec_add<E: Ord>(v: &mut Vector<E>, e: E, z: Sqrt2Scalar) {
    if z.is_zero() {
        return;
    }
    match v.entry(e) {
        Entry::Vacant(slot) => {
            slot.insert(z);
        }
        Entry::Occupied(mut slot) => {
            let sum = *slot.get() + z;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

/// The element b when v = b exactly, i.e. v is a basis vector.
pub fn as_basis<E: Clone>(v: &Vector<E>) -> Option<E> {
    if v.len() == 1 {
        let (e, z) = v.iter().next().unwrap();
        if z.is_one() {
            return Some(e.clone());
        }
    }
    None
}

/// Σ |z|² over the entries.
pub fn norm2<E>(v: &Vector<E>) -> Sqrt2Scalar {
    v.values().fold(Sqrt2Scalar::ZERO, |acc, z| acc + *z * *z)
}

/// An ıcrystal given by local rules.
pub trait ICrystal {
    type Elem: Clone + Ord + core::fmt::Debug;

    fn datum(&self) -> &CartanSatakeDatum;
    fn wti(&self, b: &Self::Elem) -> IWeight;
    fn beta(&self, b: &Self::Elem, i: usize) -> Result<IExtInt>;
    fn btil(&self, b: &Self::Elem, i: usize) -> Result<Vector<Self::Elem>>;
    fn name(&self, b: &Self::Elem) -> String;
}

impl<C: ICrystal + ?Sized> ICrystal for &C {
    type Elem = C::Elem;
    fn datum(&self) -> &CartanSatakeDatum {
        (**self).datum()
    }
    fn wti(&self, b: &Self::Elem) -> IWeight {
        (**self).wti(b)
    }
    fn beta(&self, b: &Self::Elem, i: usize) -> Result<IExtInt> {
        (**self).beta(b, i)
    }
    fn btil(&self, b: &Self::Elem, i: usize) -> Result<Vector<Self::Elem>> {
        (**self).btil(b, i)
    }
    fn name(&self, b: &Self::Elem) -> String {
        (**self).name(b)
    }
}
