//! Exact computations in HOMFLYPT skein theory: the skein of the annulus and
//! its meridian operators, skein dilogarithms and their recurrences, the
//! Morton-Samuelson torus algebra with pentagon and Seiberg-Witten
//! wall-crossing verifiers, the gl(1) quantum-torus specialization, the
//! combinatorial skein-lift (nonabelianization) map for double covers, and
//! taut/generalized angle structures with an exact effectivity decision.
//!
//! All arithmetic is exact: coefficients live in the field of rational
//! functions in `s = q^(1/2)` tensored with Laurent monomials in the framing
//! variables `a`, `a1`, `a2` and the formal parameter `xi`. No floating
//! point is used anywhere in a verification path.
//!
//! Wall-crossing identities are verified in the enveloping algebra of the
//! bracket `[P_x, P_y] = {det(x,y)} P_{x+y}` with PBW normal ordering.
//! Since that bracket holds in the skein of the torus, equality of normal
//! forms in the enveloping algebra implies the identity in the skein.

pub mod annulus;
pub mod cli;
pub mod dilog;
pub mod lift;
pub mod qtorus;
pub mod reporting;
pub mod scalars;
pub mod symfun;
pub mod torus;
pub mod triangulate;

pub use scalars::{QField, Scalar, Var};
