//! Reduced words of permutations and their commutation classes.
//!
//! The crate works with the symmetric group `S_{n+1}` generated by the adjacent
//! transpositions `s_1, ..., s_n`, and with the hyperoctahedral group `B_n`.
//! Its focus is on *one-element commutation classes* ("atoms"): reduced words
//! in which no pair of adjacent letters commutes.
//!
//! * [`perm`]: permutations in one-line form, parsing, length, word evaluation.
//! * [`words`]: reduced-word enumeration and counting, commutation and braid
//!   moves, commutation classes, shift and reversal.
//! * [`diagram`]: words formed by consecutive integers, spikes, line diagrams,
//!   wedge/vee shapes and the forbidden segment factors.
//! * [`atoms`]: atom sets computed by brute force and by pruned search, the
//!   structure of an atom and the length-reducing map used to bound `|A(σ)|`.
//! * [`coxeter_b`]: signed permutations, their reduced words and atoms.
//!
//! Positions, values and generator indices are 1-based in type A.
//!
//! ```
//! use commclass_core::{atoms, words, Permutation};
//!
//! let sigma: Permutation = "3,4,2,1".parse().unwrap();
//! assert_eq!(sigma.length(), 5);
//! assert_eq!(words::reduced_words(&sigma).unwrap().len(), 5);
//! let found = atoms::atoms_characterized(&sigma);
//! assert_eq!(found[0].to_string(), "21232");
//! ```
#![no_std]

extern crate alloc;

pub mod atoms;
pub mod coxeter_b;
pub mod diagram;
mod error;
pub mod perm;
mod unionfind;
pub mod words;

pub use error::{Error, ParseErrorKind, Result};
pub use perm::{parse_permutation, NonFixedBounds, Permutation};
pub use words::{Letter, Word};
