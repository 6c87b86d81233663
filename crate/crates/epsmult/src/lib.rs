//! Exact computation of epsilon multiplicities in graded algebras.
//!
//! The library computes the epsilon function `n -> length(saturation(I^n)/I^n)`
//! and the epsilon multiplicity of a homogeneous ideal `I` in a finitely
//! generated graded algebra over QQ, through the Hilbert series of the Rees
//! and saturated Rees algebras, together with mixed-multiplicity formulas in
//! low dimension and an independent brute-force oracle.
//!
//! - [`poly`]: sparse exact polynomials, monomial orders, multigradings
//! - [`ring`]: presented graded rings and ideals with cached Groebner bases
//! - [`groebner`]: Buchberger engine, normal forms, elimination
//! - [`ideal_ops`]: colon, intersection, saturation, minimal generators,
//!   kernels of algebra maps, dimension, analytic spread
//! - [`hilbert`]: multigraded Hilbert series and their expansions
//! - [`fit`]: exact interpolation of Hilbert polynomials on stable regions
//! - [`blowup`]: Rees and saturated-Rees presentations, truncation ideals
//! - [`mixed`]: mixed multiplicities in both normalizations
//! - [`epsilon`]: the epsilon-series pipeline and closed-form routes
//! - [`oracle`]: power-by-power brute-force epsilon tables
//! - [`session`]: the small declarative input language of the CLI

pub mod error;
pub mod poly;
pub mod ring;
pub mod groebner;
pub mod linalg;
pub mod ideal_ops;
pub mod unipoly;
pub mod hilbert;
pub mod fit;
pub mod blowup;
pub mod mixed;
pub mod epsilon;
pub mod oracle;
pub mod session;

pub use error::{Error, Result};
pub use poly::{DegreeVector, Monomial, MonomialOrder, Polynomial, Q, Z};
pub use ring::{GradedRing, Ideal};
