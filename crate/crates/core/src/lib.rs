//! Exact invariants of degree-3 rational maps of the projective line.
//!
//! Coefficient order: a map is stored as `c = (c0, .., c7)` with
//! `f0 = c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3` and
//! `f1 = c4 x^3 + c5 x^2 y + c6 x y^2 + c7 y^3`, so `phi(z) = f0(z, 1) / f1(z, 1)`.
//! Tuples written in ascending powers of `z` are accepted through
//! [`RationalMap3::from_ascending`].

pub mod aut;
pub mod dataset;
mod error;
pub mod forms;
pub mod invariants;
pub mod map;
pub mod rational;
mod tables;
pub mod weighted;

pub use aut::{classify, AutLabel};
pub use error::{Error, Result};
pub use forms::BinaryForm;
pub use invariants::{AbsoluteInvariants, XiTuple};
pub use map::{MobiusMap, RationalMap3};
pub use rational::Q;
pub use weighted::WeightedPoint;
