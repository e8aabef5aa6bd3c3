//! Quotients and relatives of the braid shelf: permutations, injections and
//! Burau matrices, each with its own shifted conjugation.

pub mod burau;
pub mod injection;
pub mod laurent;
pub mod perm;

pub use burau::{burau_of, burau_shelf_op, BurauMatrix};
pub use injection::{inj_embed, inj_shelf_op, Injection};
pub use laurent::LaurentPoly;
pub use perm::{braid_class, perm_of, perm_shelf_op, small_class_quotient, Perm};
