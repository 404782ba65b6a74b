//! Exhaustive census of genus-5 hyperelliptic and trigonal curves over F3.
//!
//! The crate enumerates reduced defining equations, counts rational points of
//! the smooth models over GF(3^e), classifies the curves attaining the maximum
//! up to isomorphism and attaches Weil polynomials.

pub mod census;
pub mod cli;
pub mod field;
pub mod forms;
pub mod hyperelliptic;
pub mod trigonal;
pub mod zeta;
