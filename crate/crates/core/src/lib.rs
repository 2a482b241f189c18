//! Decay-rate invariants of Arthur SL2-types, cohomological A-packet
//! combinatorics for `SO_5`, Macdonald-formula integrability thresholds, the
//! exponent ledger for `SO_5`, and a laboratory for non-backtracking random
//! walks on finite regular digraphs.
//!
//! The algebraic modules ([`lie`], [`arthur`], [`packets`], [`spherical`],
//! [`arith`]) are exact: weights are vectors of `i64` rationals and rates are
//! either rationals or infinity. The walk laboratory ([`nbrw`]) works in
//! floating point on explicit digraphs.
//!
//! Runnable tours of each capability live in `examples/`; the
//! `densitometer` binary exposes the same functionality as subcommands.

pub mod error;
pub mod lie;
pub mod arthur;
pub mod packets;
pub mod spherical;
pub mod nbrw;
pub mod arith;
pub mod cli;

pub use error::{Error, Result};
