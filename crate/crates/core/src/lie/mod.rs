//! Lie algebras of operators on `E = C^m`.
//!
//! # Convention
//!
//! Matrices act on column vectors from the left and the bracket is the
//! commutator of the opposite product, `[a, b] = b a - a b`. Everything else
//! in the crate (structure constants, the Koszul differential, extension
//! operators) is written against this convention; swapping the order flips
//! the sign of every structure constant and moves spectra.

mod character;
mod flag;
mod rep;

pub use character::{check_character, is_character, Character, CharacterSet};
pub use flag::{
    character_space, flag_residual, ideal_chain, ideal_residual, is_nilpotent, jordan_holder_flag, lower_central_series,
    restrict_to_ideal, restrict_to_span, solvable_chain, FlagKind, IdealFlag, Restriction,
};
pub use rep::{bracket, LieRep};
