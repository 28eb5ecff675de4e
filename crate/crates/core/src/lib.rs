//! Zeckendorf and Chung-Graham numeration systems, with a self-contained
//! multi-track finite-automaton engine for building and checking the
//! validity recognizers, representation converters, addition relations and
//! synchronizing automata that connect the two systems.
//!
//! The crate is organized as:
//!
//! - [`automata`]: the engine — deterministic multi-track automata over small
//!   digit alphabets, with Boolean algebra, projection, reversal,
//!   minimization, equivalence and a line-oriented text format.
//! - [`numeration`]: exact big-integer ground truth (Fibonacci numbers,
//!   encode/decode/validate, digit-string valuation, the ⌊φn⌋ oracle).
//! - [`recognizers`]: the small named recognizer automata (cgval, zeckval,
//!   cg0, cgeq, cgsplit) built directly from their predicates.
//! - [`synthesis`]: relation synthesis — a bounded-residual builder for
//!   linear value relations over Fibonacci weights, and the composition
//!   pipelines for fibcg, cgadd, fibrep, cgrep, phin and cgphin.
//! - [`verify`]: mechanical re-checks of every claim, emitting a
//!   line-delimited report.

pub mod automata;
pub mod error;
pub mod format;
pub mod numeration;
pub mod recognizers;
pub mod synthesis;
pub mod verify;

pub use automata::{DigitWord, MultiTrackAutomaton, TrackAlphabet};
pub use error::{Error, Result};
pub use numeration::Nat;
