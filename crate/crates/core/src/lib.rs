//! Finite groups, strongly central filtrations, actions, co-induction and
//! finite topological groups, with exhaustive checkers for all of them.

pub mod action;
pub mod budget;
pub mod coinduction;
pub mod error;
pub mod filtration;
pub mod group;
pub mod harness;
pub mod topology;

pub use budget::Budget;
pub use error::{Error, Result};
