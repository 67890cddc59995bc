//! Exact arithmetic: Laurent polynomials in q and z, rational functions
//! with factored denominators, univariate q-polynomials, and the modular
//! evaluation backend.

mod laurent;
mod qpoly;
mod ratfn;
mod modular;
mod ring;

pub use laurent::QZLaurent;
pub use modular::{Fp, FpRat, ModCtx, DEFAULT_PRIME};
pub use qpoly::{QLaurent, QPoly};
pub use ratfn::RatFn;
pub use ring::{q_laurent_in, CoeffRing, FpTRing, ModRing, SymbolicRing};
