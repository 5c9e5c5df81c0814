//! Crystals: the abstract interface, explicit graphs, tensor products,
//! built-in families, highest weight components, checkers and morphisms.

mod checks;
mod component;
mod families;
mod graph;
mod morphism;
mod tensor;

pub use checks::{check_crystal_axioms, check_s_conditions, check_s_consequences, check_seminormal, s_condition_pairs};
pub use component::{highest_weight_component, Component};
pub use families::{b_n, fundamental, natural, one_row, t_lambda, BLambda, HighestWeightModel};
pub use graph::{CrystalData, CrystalGraph};
pub use morphism::{check_crystal_morphism, CrystalMorphism, CrystalMorphismClass};
pub use tensor::{materialize, tensor_crystals, TensorPair, TensorPower};

use alloc::string::String;

use crate::rootdata::{CartanSatakeDatum, ExtInt, Weight};

/// A crystal given by local rules on an element type.
pub trait Crystal {
    type Elem: Clone + Ord + core::fmt::Debug;

    fn datum(&self) -> &CartanSatakeDatum;
    fn wt(&self, b: &Self::Elem) -> Weight;
    fn eps(&self, b: &Self::Elem, i: usize) -> ExtInt;
    fn phi(&self, b: &Self::Elem, i: usize) -> ExtInt;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn name(&self, b: &Self::Elem) -> String;

    fn wt_i(&self, b: &Self::Elem, i: usize) -> i64 {
        self.wt(b).get(i)
    }
}

impl<C: Crystal + ?Sized> Crystal for &C {
    type Elem = C::Elem;
    fn datum(&self) -> &CartanSatakeDatum {
        (**self).datum()
    }
    fn wt(&self, b: &Self::Elem) -> Weight {
        (**self).wt(b)
    }
    fn eps(&self, b: &Self::Elem, i: usize) -> ExtInt {
        (**self).eps(b, i)
    }
    fn phi(&self, b: &Self::Elem, i: usize) -> ExtInt {
        (**self).phi(b, i)
    }
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        (**self).e(b, i)
    }
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        (**self).f(b, i)
    }
    fn name(&self, b: &Self::Elem) -> String {
        (**self).name(b)
    }
    fn wt_i(&self, b: &Self::Elem, i: usize) -> i64 {
        (**self).wt_i(b, i)
    }
}
