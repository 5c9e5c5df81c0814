//! The tensor product of an ıcrystal with a crystal, induced ıcrystal
//! structures on crystals, associativity and tensor products of morphisms.

mod assoc;
mod induce;
mod rule;

pub use assoc::{check_associativity, tensor_morphisms, AssocWitness};
pub use induce::{induce_icrystal, InduceMode};
pub use rule::{
    build_tensor, check_column_norms, check_estimate, local_rule, tensor_icrystal_crystal, tensor_stats, Branch, Regime,
    RuleOutcome, TensorBuild, TensorIC, TensorStats,
};
