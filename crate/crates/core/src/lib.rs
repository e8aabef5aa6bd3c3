//! Exact computations in the braid shelf `(B_∞, ▷)` and its relatives.
//!
//! * [`words`]: braid words and their purely syntactic transformations.
//! * [`engine`]: braid equality (Artin representation), fingerprints, handle
//!   reduction, subword reversing and the braid order.
//! * [`shelf`]: the operation `▷`, division, `B_n` membership and colorings.
//! * [`special`]: special braids, their recognition, decompositions and terms.
//! * [`quotient`]: permutation, injection and Burau shelves.
//! * [`laver`]: Laver tables.
//! * [`extended`]: extended braids with their monoid and shelf operations.

pub mod engine;
pub mod error;
pub mod extended;
pub mod laver;
pub mod quotient;
pub mod shelf;
pub mod special;
pub mod words;

pub use engine::{Braid, SigmaClass};
pub use error::{Error, Result};
pub use extended::{Distance, ExtBraid};
pub use laver::LaverTable;
pub use quotient::{BurauMatrix, Injection, LaurentPoly, Perm};
pub use shelf::{ColorSeq, Shelf};
pub use special::Term;
pub use words::{BraidWord, Letter};
