//! Coefficient rings shared by the recursion engines.
//!
//! All recursions in this crate (deformed R-polynomials, Casselman
//! matrices, the Hecke oracle) only ever need ring operations together
//! with three constructors: powers of q, monomials z^beta, and inverses
//! `1/(1 - z^beta)` for beta a root. Abstracting those lets the same
//! recursion code run symbolically over [`RatFn`] or numerically over F_p,
//! where each ring instance is pinned to one evaluation point.
//!
//! The involution q -> q^{-1} and the substitution z -> z^{-1} are not ring
//! operations on modular values; they are repointings. Each ring exposes a
//! "variant" constructor so a table of values of bar(f) at a point is just a
//! table of f over the repointed ring.

use crate::symbolics::modular::{Fp, FpRat, ModCtx};
use crate::symbolics::qpoly::QLaurent;
use crate::symbolics::ratfn::RatFn;

pub trait CoeffRing {
    type Elt: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn from_int(&self, n: i64) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    /// q^k.
    fn q_pow(&self, k: i64) -> Self::Elt;
    /// z^beta for an arbitrary integer exponent vector.
    fn z_mono(&self, beta: &[i32]) -> Self::Elt;
    /// `1/(1 - z^beta)`; beta is (plus or minus) a root, never mixed-sign.
    fn inv_one_minus_z(&self, beta: &[i32]) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;

    /// The ring evaluating bar(f), i.e. f with q -> q^{-1}.
    fn bar_variant(&self) -> Self;
    /// The ring evaluating f(z^{-1}).
    fn zinv_variant(&self) -> Self;
}

/// Evaluates a Laurent polynomial in q inside any coefficient ring.
pub fn q_laurent_in<R: CoeffRing>(ring: &R, p: &QLaurent) -> R::Elt {
    let mut acc = ring.zero();
    for (&e, &c) in &p.0 {
        acc = ring.add(&acc, &ring.mul(&ring.from_int(c), &ring.q_pow(e as i64)));
    }
    acc
}

/// Exact symbolic coefficients: rational functions of q and z.
#[derive(Clone, Debug)]
pub struct SymbolicRing {
    rank: usize,
    bar_q: bool,
    inv_z: bool,
}

impl SymbolicRing {
    pub fn new(rank: usize) -> SymbolicRing {
        SymbolicRing { rank, bar_q: false, inv_z: false }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn z_signed(&self, beta: &[i32]) -> Vec<i32> {
        if self.inv_z {
            beta.iter().map(|&c| -c).collect()
        } else {
            beta.to_vec()
        }
    }
}

impl CoeffRing for SymbolicRing {
    type Elt = RatFn;

    fn zero(&self) -> RatFn {
        RatFn::zero(self.rank)
    }
    fn one(&self) -> RatFn {
        RatFn::one(self.rank)
    }
    fn from_int(&self, n: i64) -> RatFn {
        RatFn::int(self.rank, n as i128)
    }
    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.add(b)
    }
    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.sub(b)
    }
    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.mul(b)
    }
    fn neg(&self, a: &RatFn) -> RatFn {
        a.neg()
    }
    fn q_pow(&self, k: i64) -> RatFn {
        let k = if self.bar_q { -k } else { k };
        RatFn::q_pow(self.rank, k as i32)
    }
    fn z_mono(&self, beta: &[i32]) -> RatFn {
        RatFn::z_mono(self.rank, &self.z_signed(beta))
    }
    fn inv_one_minus_z(&self, beta: &[i32]) -> RatFn {
        RatFn::inv_one_minus_z(self.rank, &self.z_signed(beta))
    }
    fn is_zero(&self, a: &RatFn) -> bool {
        a.is_zero()
    }
    fn bar_variant(&self) -> SymbolicRing {
        SymbolicRing { bar_q: !self.bar_q, ..self.clone() }
    }
    fn zinv_variant(&self) -> SymbolicRing {
        SymbolicRing { inv_z: !self.inv_z, ..self.clone() }
    }
}

/// Modular coefficients at one admissible sample point.
///
/// Point admissibility (see [`ModCtx`]) guarantees no `1 - z^beta` vanishes
/// for a root beta, so `inv_one_minus_z` cannot hit zero on recursion paths;
/// it panics rather than returning an error if handed an inadmissible point.
#[derive(Clone, Debug)]
pub struct ModRing {
    fp: Fp,
    q: u64,
    z: Vec<u64>,
}

impl ModRing {
    pub fn at_point(ctx: &ModCtx) -> ModRing {
        ModRing {
            fp: ctx.fp(),
            q: ctx.q(),
            z: ctx.z().to_vec(),
        }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
}

impl CoeffRing for ModRing {
    type Elt = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: i64) -> u64 {
        self.fp.from_i64(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.fp.add(*a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.fp.sub(*a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.fp.mul(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.fp.neg(*a)
    }
    fn q_pow(&self, k: i64) -> u64 {
        self.fp.pow_signed(self.q, k)
    }
    fn z_mono(&self, beta: &[i32]) -> u64 {
        let mut acc = 1u64;
        for (&zi, &e) in self.z.iter().zip(beta) {
            acc = self.fp.mul(acc, self.fp.pow_signed(zi, e as i64));
        }
        acc
    }
    fn inv_one_minus_z(&self, beta: &[i32]) -> u64 {
        let f = self.fp.sub(1, self.z_mono(beta));
        assert!(f != 0, "inadmissible modular point: 1 - z^{beta:?} = 0");
        self.fp.inv(f)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn bar_variant(&self) -> ModRing {
        ModRing {
            fp: self.fp,
            q: self.fp.inv(self.q),
            z: self.z.clone(),
        }
    }
    fn zinv_variant(&self) -> ModRing {
        ModRing {
            fp: self.fp,
            q: self.q,
            z: self.z.iter().map(|&zi| self.fp.inv(zi)).collect(),
        }
    }
}

/// Univariate rational functions over F_p in a growth variable t, with
/// z^lambda |-> t^{height(lambda)} and q pinned to a residue. Limits of the
/// recursions as z -> infinity become leading-coefficient ratios here.
#[derive(Clone, Debug)]
pub struct FpTRing {
    fp: Fp,
    q: u64,
}

impl FpTRing {
    pub fn new(fp: Fp, q: u64) -> FpTRing {
        FpTRing { fp, q }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
}

impl CoeffRing for FpTRing {
    type Elt = FpRat;

    fn zero(&self) -> FpRat {
        FpRat::zero(self.fp)
    }
    fn one(&self) -> FpRat {
        FpRat::constant(self.fp, 1)
    }
    fn from_int(&self, n: i64) -> FpRat {
        FpRat::constant(self.fp, self.fp.from_i64(n))
    }
    fn add(&self, a: &FpRat, b: &FpRat) -> FpRat {
        a.add(b)
    }
    fn sub(&self, a: &FpRat, b: &FpRat) -> FpRat {
        a.sub(b)
    }
    fn mul(&self, a: &FpRat, b: &FpRat) -> FpRat {
        a.mul(b)
    }
    fn neg(&self, a: &FpRat) -> FpRat {
        a.neg()
    }
    fn q_pow(&self, k: i64) -> FpRat {
        FpRat::constant(self.fp, self.fp.pow_signed(self.q, k))
    }
    fn z_mono(&self, beta: &[i32]) -> FpRat {
        let h: i64 = beta.iter().map(|&c| c as i64).sum();
        FpRat::t_pow(self.fp, h)
    }
    fn inv_one_minus_z(&self, beta: &[i32]) -> FpRat {
        self.one().sub(&self.z_mono(beta)).inv()
    }
    fn is_zero(&self, a: &FpRat) -> bool {
        a.is_zero()
    }
    fn bar_variant(&self) -> FpTRing {
        FpTRing {
            fp: self.fp,
            q: self.fp.inv(self.q),
        }
    }
    fn zinv_variant(&self) -> FpTRing {
        // z -> z^{-1} would send t to t^{-1}; limit tables never need it.
        unimplemented!("z-inversion is not used in the limit ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_variants_transform_generators() {
        let ring = SymbolicRing::new(2);
        let barred = ring.bar_variant();
        assert_eq!(barred.q_pow(1), RatFn::q_pow(2, -1));
        assert_eq!(barred.z_mono(&[1, 0]), ring.z_mono(&[1, 0]));
        let zi = ring.zinv_variant();
        assert_eq!(zi.z_mono(&[1, 0]), RatFn::z_mono(2, &[-1, 0]));
        // 1/(1-z^{-beta}) normalizes back to a positive-root denominator
        assert_eq!(
            zi.inv_one_minus_z(&[1, 0]),
            RatFn::inv_one_minus_z(2, &[-1, 0])
        );
    }

    #[test]
    fn modular_engine_matches_symbolic_evaluation_at_20_points() {
        use crate::casselman::{CassEngine, Variant};
        use crate::symbolics::modular::DEFAULT_PRIME;
        use crate::weyl::{CartanType, RootSystem, WeylGroup};

        let g = WeylGroup::build(RootSystem::new(CartanType::A, 2).unwrap());
        let s1 = g.from_word(&[0]).unwrap();
        // (1 - q^{-1} z^{a1})/(1 - z^{a1})
        let sym = SymbolicRing::new(2);
        let expected = sym.mul(
            &sym.sub(&sym.one(), &sym.mul(&sym.q_pow(-1), &sym.z_mono(&[1, 0]))),
            &sym.inv_one_minus_z(&[1, 0]),
        );
        let points =
            ModCtx::sample_points(DEFAULT_PRIME, 11, 20, 2, &g.root_system().positive_roots);
        for ctx in &points {
            let mut engine = CassEngine::new(g.clone(), ModRing::at_point(ctx));
            let via_engine = engine.m(Variant::Plain, g.identity(), s1).unwrap();
            assert_eq!(via_engine, expected.eval_mod(ctx).unwrap());
        }
    }

    #[test]
    fn modular_ring_matches_symbolic_on_a_sample() {
        let ctx = ModCtx::new(101, 3, vec![7, 9]);
        let ring = ModRing::at_point(&ctx);
        let sym = SymbolicRing::new(2);
        let expr_sym = sym.mul(
            &sym.sub(&sym.one(), &sym.q_pow(-1)),
            &sym.inv_one_minus_z(&[1, 1]),
        );
        let expr_mod = ring.mul(
            &ring.sub(&ring.one(), &ring.q_pow(-1)),
            &ring.inv_one_minus_z(&[1, 1]),
        );
        assert_eq!(expr_sym.eval_mod(&ctx).unwrap(), expr_mod);
        // bar variant = evaluation at inverted q
        let barred = ring.bar_variant();
        assert_eq!(
            expr_sym.bar().eval_mod(&ctx).unwrap(),
            barred.mul(
                &barred.sub(&barred.one(), &barred.q_pow(-1)),
                &barred.inv_one_minus_z(&[1, 1]),
            )
        );
    }
}
