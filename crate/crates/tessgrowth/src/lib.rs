//! Growth rates of face-homogeneous planar tessellations.
//!
//! A face-homogeneous tessellation is a plane map in which the valences of
//! the vertices around every face read the same cyclic sequence σ (up to
//! rotation and reflection). This crate computes the exponential growth rate
//! γ of such tessellations — the limit of τ(n+1)/τ(n) where τ(n) counts the
//! faces within n coronas of a root — by three independent routes that
//! cross-verify each other:
//!
//! 1. **Spectral**: build the corona transition matrix M (exact rationals),
//!    take the maximum-modulus eigenvalue via its characteristic polynomial
//!    ([`spectral`], [`transition`]).
//! 2. **Closed form**: evaluate the per-family closed-form expressions,
//!    including the palindromic-quartic root formula ([`formulas`]).
//! 3. **Simulation**: grow the actual planar patch corona by corona and
//!    count faces ([`sim`]).
//!
//! The crate also classifies cyclic valence sequences (finite / Euclidean /
//! hyperbolic; monomorphic / polymorphic; concentric / non-concentric) and
//! reproduces the least-growth tables ([`cyclic`], [`classify`]).

pub mod classify;
pub mod cyclic;
pub mod formulas;
pub mod sim;
pub mod spectral;
pub mod transition;

pub use classify::{classify, Classification, Concentricity, Morphism};
pub use cyclic::{
    angle_excess, canonicalize, growth_class, CyclicSequence, GrowthClass, OrderRel,
};
pub use sim::{
    estimate_growth, export_patch, grow, grow_auto, CoronaProfile, ExportFormat, GrowOptions,
    PatchGraph, Root, SimError,
};
pub use spectral::{growth_rate, GrowthRate, RationalPolynomial};
pub use transition::{Rational, TransitionMatrix};
