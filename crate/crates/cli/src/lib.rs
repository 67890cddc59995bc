//! Report builders and output rendering behind the `casselman` binary,
//! exposed as a library so integration tests drive the same code paths.

pub mod output;
pub mod reference;
pub mod reports;
