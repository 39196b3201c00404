//! Exact tools for the maximal energy of integral circulant graphs
//! `ICG(p^s, D)` with `|D| = r`.
//!
//! The energy of such a graph is `2(p-1)p^(s-1)(r - (p-1) h_p(a))` where `a`
//! lists the exponents of the divisors, so maximizing energy means
//! minimizing `h_p` over admissible exponent tuples. The crate evaluates
//! `h_p` exactly, searches for all minimizers, applies the structural
//! descent moves, analyses delta vectors with the balancing operator and
//! cross-checks energies against spectra computed from Ramanujan sums.

pub mod balancing;
pub mod combinatorics;
mod error;
pub mod exact;
pub mod hp;
mod instance;
pub mod search;
pub mod spectral;

pub use combinatorics::{delta, delta_inv, DeltaVector, StructureFilter};
pub use error::{Error, Result};
pub use exact::{to_decimal, PAdicRational};
pub use hp::{energy_from_hp, hp_eval, reverse_complement};
pub use instance::{is_prime, ExponentTuple, Prime, ProblemInstance};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
