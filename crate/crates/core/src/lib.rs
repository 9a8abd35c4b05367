//! Exact local invariants of plane holomorphic foliation germs.
//!
//! The engine works over the rationals. A germ `ω = P dx + Q dy` at the
//! origin is stored as two [`Poly`]s; local quotient dimensions such as
//! the Milnor number `dim k{x,y}/(P,Q)` come from standard bases under a
//! local monomial order ([`localalg`]). On top of that sit the curve and
//! foliation invariants ([`germ`]), blow-up reduction ([`blowup`]),
//! projective foliations ([`projective`]) and the verifier suite
//! ([`theorems`]) that turns inequalities and membership statements about
//! second type foliations into exact checks.

pub mod blowup;
pub mod germ;
pub mod localalg;
pub mod poly;
pub mod projective;
pub mod report;
pub mod theorems;

pub use blowup::{ReductionTree, SingularClass};
pub use germ::{BalancedEquation, CurveGerm, FoliationGerm, GermError};
pub use localalg::{MonomialOrder, QuotientDim, StandardBasis};
pub use poly::{parse_poly, Monomial, Poly, PolyError, Rational};
pub use projective::{ProjectiveCurve, ProjectiveFoliation, ProjectivePoint};
pub use report::{CheckReport, Value, Verdict};
pub use theorems::{CheckOptions, SecondTypeMode};
