//! Combinatorics of crystals and ıcrystals for quasi-split ıquantum groups.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: weights are
//! integer vectors, ıcrystal amplitudes live in ℤ[1/√2], and the q-oracle works
//! over ℚ(q).
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binfty;
pub mod crystal;
pub mod error;
pub mod icrystal;
pub mod itensor;
pub mod projective;
pub mod qoracle;
pub mod report;
pub mod rootdata;

pub use error::Error;
pub use report::Report;
pub use rootdata::{CartanSatakeDatum, ExtInt, IEntry, IExtInt, IWeight, RawDatum, Sqrt2Scalar, Weight};

/// Default bound on the size of generated components.
pub const DEFAULT_CAP: usize = 100_000;
