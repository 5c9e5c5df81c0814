//! Cartan and Satake data, weights, the ı-weight projection, extended integers
//! and the scalar ring ℤ[1/√2].

mod datum;
mod extint;
mod scalar;
mod weight;
pub use weight::fmt_word;

pub use datum::{CartanSatakeDatum, OrbitKind, RawDatum};
pub use extint::{ExtInt, IExtInt};
pub use scalar::Sqrt2Scalar;
pub use weight::{project_weight, IEntry, IWeight, Weight};
