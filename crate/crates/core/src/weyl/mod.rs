//! Root systems, Weyl groups, the Bruhat order, and the root sets
//! attached to Bruhat pairs.

mod root;
mod group;
mod sets;

pub use group::{parse_word, ElemIdx, WeylElt, WeylGroup};
pub use root::{CartanType, RootSystem, RootVec, SignedRoot, MAX_RANK};
pub use sets::{ad_min, s_prime_set, s_set, s_sets};
