//! Exact coefficients and heights of cyclotomic polynomials `Φ_n`, with a focus
//! on the ternary case `n = pqr`.
//!
//! * [`numtheory`]: modular arithmetic, primality, factorisation, primes in progressions.
//! * [`binary`]: closed-form coefficients of `Φ_pq`.
//! * [`dense`]: brute-force `Φ_n` and `1/Φ_n` used as ground truth.
//! * [`kaplan`]: `O(p)` single coefficients and fast full-height scans of `Φ_pqr`.
//! * [`bounds`]: known upper bounds on ternary heights.
//! * [`beiter`]: residue classes forcing large coefficients, explicit
//!   constructions, and independent certificate verification.
//! * [`fixtures`]: published reference tables.
//! * [`cli`]: the `cyclo` command-line front end.

pub mod beiter;
pub mod binary;
pub mod bounds;
pub mod cli;
pub mod dense;
pub mod error;
pub mod fixtures;
pub mod kaplan;
pub mod numtheory;

pub use binary::{binary_coeff, BinaryCyclo};
pub use dense::{cyclotomic_poly, reciprocal_block, CoeffVec, PeriodicSeries};
pub use error::{Error, Result};
pub use kaplan::{ternary_coeff, ternary_height, HeightReport, OddPrimeTriple, TernaryCyclo};
