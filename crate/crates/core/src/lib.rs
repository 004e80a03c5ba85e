//! Exact symbolic verification of twisted symmetric-group action identities:
//! multivariate rational function fields over Q and F_p, permutation actions
//! twisted by a parameter, the named invariant constructions they act on,
//! and a replayable check suite over all of it.

pub mod algebra;
pub mod group;

pub mod frames;

pub use algebra::{AlgebraError, Coef, CoeffField, MultiPoly, Point, RatFunc, VarTable};
