//! Language tables, complexity and automorphism groups of low-complexity subshifts.

pub mod aut_search;
pub mod block_code;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod models;
pub mod periodic_aut;
pub mod spec_file;
pub mod verify;
pub mod words;

pub use block_code::{compose, shift_power_code, BlockCode, EndoVerdict};
pub use error::{Error, Result};
pub use models::ShiftSpec;
pub use words::{Alphabet, LanguageTable, Sym, Word};
