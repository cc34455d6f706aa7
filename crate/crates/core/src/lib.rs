//! Exact computations for the growth of polynomials on planar and
//! standard-tentacle semialgebraic sets.
//!
//! The crate is organised bottom-up:
//!
//! - exact arithmetic: [`rational`], [`xipoly`], [`series`], [`laurent`],
//!   [`multipoly`], plus the helpers in [`univariate`] and [`linalg`];
//! - [`newton`]: branches at infinity and the generic series of a tentacle;
//! - [`semidegree`]: δ*, δ̄ and δ for single tentacles and unions;
//! - [`keyforms`]: key-form sequences, positivity and classification;
//! - [`cone`]: B_d of standard tentacles and Hilbert bases;
//! - [`witness`]: linear-algebra search for low-growth polynomials;
//! - [`lift`]: transport of B(S) to bounded polynomials one dimension up;
//! - [`sampling`]: floating-point growth estimates used as a cross-check.

pub mod cone;
pub mod error;
pub mod keyforms;
pub mod laurent;
pub mod lift;
pub mod linalg;
pub mod multipoly;
pub mod newton;
pub mod rational;
pub mod sampling;
pub mod semidegree;
pub mod series;
pub mod text;
pub mod univariate;
pub mod witness;
pub mod xipoly;

pub use error::{Error, Result};
pub use keyforms::{Classification, KeyFormSequence, MomentStatus};
pub use laurent::LaurentPoly2;
pub use multipoly::MultiPoly;
pub use newton::SemidegreeSpec;
pub use rational::Rat;
pub use semidegree::{StandardTentacleSpec, Tentacle, TentacleSet};
pub use series::{PuiseuxSeries, SeriesOp};
pub use xipoly::XiPoly;
