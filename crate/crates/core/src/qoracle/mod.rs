//! An independent check of the ıcrystal rules: explicit U^ı-modules over
//! ℚ(q) in rank two, their decomposition, and the crystal limit q → ∞ of the
//! normalized bases.

mod laurent;
mod limit;
mod linalg;
mod module;
mod poly;
mod symbols;

pub use laurent::LaurentRational;
pub use limit::{
    decompose, expected_components, expected_fixed_eigenvalues, oracle_adjacent_natural, oracle_crystal_limit,
    oracle_fixed_restriction, OracleComponent, OracleLimit,
};
pub use linalg::{QOperator, QVec};
pub use module::{
    build_rank_two_module, check_contragredient, check_relations, lt_of_norm, lt_table, module_norms, natural_module,
    norm_closed_form, sl2_module, sl2_pair_module, tensor_with, LeadingTerm, ModuleParams, NormEntry, RankTwoModule,
    UModule,
};
pub use symbols::{brace, bracket_k, brace_k, q_arith, q_symbols, qbinom, qfact, qint, QOp, QSymbol};
