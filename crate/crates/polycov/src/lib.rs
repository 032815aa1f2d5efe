//! Monodromy groups, string C-groups, and finite regular covers of
//! finite abstract polytopes.
//!
//! The library models abstract polytopes as ranked posets, computes their
//! monodromy groups as permutation groups on the flag set, certifies or
//! refutes the string C-group property, and drives the iterative
//! mix / wreath-extension construction that produces a finite regular cover
//! of any finite polytope, reporting exact factored group orders even when
//! the cover group is far too large to write down.

pub mod constructors;
pub mod covers;
pub mod error;
pub mod factored;
pub mod group;
pub mod monodromy;
pub mod perm;
pub mod poset;
pub mod reconstruct;
pub mod sggi;

pub mod cli;

pub use error::{Error, Result};
pub use factored::FactoredInteger;
pub use group::PermGroup;
pub use perm::Perm;
pub use poset::{Flag, Polytope, ValidationReport};
pub use sggi::{SchlafliType, Sggi};
