//! Exact symbolic engine for Casselman transition matrices on finite Weyl groups.
//!
//! The crate computes, over the function field in `q` and a torus variable
//! `z = (z_1, ..., z_n)`:
//!
//! * the deformed R-polynomials `r_{u,v}(z)` and their inverse family `r'_{u,v}(z)`,
//! * the transition matrices `m_{u,v}` and `m'_{u,v}` between the
//!   Casselman basis and the partial-sum basis of Iwahori fixed vectors,
//! * the classical Kazhdan-Lusztig families `R`, `P`, `Q` and the
//!   correction coefficients `c_{u,v}`,
//!
//! together with machinery to verify the identities these families satisfy:
//! an independent Hecke-algebra oracle in the T-basis, a Yang-Baxter basis
//! `mu_z(w)`, exact rational-function arithmetic with factored denominators,
//! and a modular (Schwartz-Zippel) backend for identity testing at scale.

pub mod error;
pub mod weyl;
pub mod symbolics;
pub mod klpoly;
pub mod hecke;
pub mod casselman;

pub use error::Error;
