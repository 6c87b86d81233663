//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("polynomial is zero where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous under the ring grading")]
    Inhomogeneous,
    #[error("declared degrees are inconsistent with the map images")]
    DegreeMismatch,
    #[error("colon by the zero element")]
    ColonByZero,
    #[error("saturation bound must be at least 1")]
    ZeroBound,
    #[error("ring must be standard graded for this operation")]
    NotStandardGraded,
    #[error("ideal is not equigenerated: generator degrees {0:?}")]
    NotEquigenerated(Vec<i64>),
    #[error("no stable Hilbert polynomial found at the probed offsets (u0={0}, v0={1})")]
    NoStablePolynomial(i64, i64),
    #[error("a (1-t1) factor survives cancellation; presentation inconsistent (wrong generation bound?)")]
    PoleAtOne,
    #[error("series is not eventually quasi-polynomial")]
    NotEventuallyQuasiPolynomial,
    #[error("pole order {found} at t=1 exceeds the expected bound {bound}")]
    PoleTooHigh { found: usize, bound: usize },
    #[error("quotient has infinite length; the pair is not cofinal")]
    NotCofinal,
    #[error("difference of Hilbert series has a pole; lengths are infinite")]
    InfiniteLength,
    #[error("table too short to detect a stable linear pattern")]
    NotYetStable,
    #[error("denominator vanishes: {0}")]
    ZeroDenominator(String),
    #[error("multiplicity inputs must satisfy e_ring >= e_local >= 1 (got {0}, {1})")]
    BadMultiplicityPair(i64, i64),
    #[error("the analytic spread of the ideal is not maximum")]
    AnalyticSpreadNotMaximal,
    #[error("leading quasi-polynomial coefficient varies with the residue class")]
    NonConstantLeadingCoefficient,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
