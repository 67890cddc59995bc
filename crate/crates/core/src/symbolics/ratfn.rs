//! Rational functions in q, z with factored denominators.
//!
//! A value is `num / prod_beta (1 - z^beta)^mult` where every beta is a
//! nonzero vector of nonnegative coordinates (a positive root everywhere in
//! this crate). The denominator is never expanded except transiently for
//! equality tests; reduction is exact trial division by the binomials, so
//! no multivariate gcd is involved. Equality is cross-multiplied numerator
//! equality, not a canonical form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::symbolics::laurent::QZLaurent;
use crate::symbolics::modular::{Fp, ModCtx};
use crate::symbolics::qpoly::QLaurent;

type DenMultiset = BTreeMap<Vec<i32>, u32>;

#[derive(Clone)]
pub struct RatFn {
    num: QZLaurent,
    den: DenMultiset,
}

impl RatFn {
    pub fn new(num: QZLaurent, den: DenMultiset) -> RatFn {
        debug_assert!(den
            .keys()
            .all(|b| b.iter().all(|&c| c >= 0) && b.iter().any(|&c| c > 0)));
        let mut out = RatFn { num, den };
        out.normalize();
        out
    }

    pub fn from_laurent(num: QZLaurent) -> RatFn {
        RatFn { num, den: BTreeMap::new() }
    }

    pub fn zero(rank: usize) -> RatFn {
        RatFn::from_laurent(QZLaurent::zero(rank))
    }

    pub fn int(rank: usize, n: i128) -> RatFn {
        RatFn::from_laurent(QZLaurent::int(rank, n))
    }

    pub fn one(rank: usize) -> RatFn {
        RatFn::int(rank, 1)
    }

    pub fn q_pow(rank: usize, k: i32) -> RatFn {
        RatFn::from_laurent(QZLaurent::q_pow(rank, k))
    }

    pub fn z_mono(rank: usize, exps: &[i32]) -> RatFn {
        RatFn::from_laurent(QZLaurent::z_mono(rank, exps))
    }

    /// `1 / (1 - z^beta)` for beta with all coordinates of one sign. A
    /// negative beta is rewritten as `-z^{-beta} / (1 - z^{-beta})` so the
    /// denominator invariant is preserved.
    pub fn inv_one_minus_z(rank: usize, beta: &[i32]) -> RatFn {
        assert_eq!(beta.len(), rank);
        if beta.iter().all(|&c| c >= 0) && beta.iter().any(|&c| c > 0) {
            let mut den = BTreeMap::new();
            den.insert(beta.to_vec(), 1);
            RatFn { num: QZLaurent::one(rank), den }
        } else if beta.iter().all(|&c| c <= 0) && beta.iter().any(|&c| c < 0) {
            let gamma: Vec<i32> = beta.iter().map(|&c| -c).collect();
            let mut den = BTreeMap::new();
            den.insert(gamma.clone(), 1);
            RatFn {
                num: QZLaurent::z_mono(rank, &gamma).scale(-1),
                den,
            }
        } else {
            panic!("inv_one_minus_z: mixed-sign exponent vector {beta:?}");
        }
    }

    pub fn from_qlaurent(rank: usize, p: &QLaurent) -> RatFn {
        let mut num = QZLaurent::zero(rank);
        for (&e, &c) in &p.0 {
            num = num.add(&QZLaurent::q_pow(rank, e).scale(c as i128));
        }
        RatFn::from_laurent(num)
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &QZLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &DenMultiset {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num == QZLaurent::one(self.num.rank())
    }

    /// Removes every denominator factor that exactly divides the numerator.
    /// Reapplies until a full pass makes no progress, so the reduced
    /// invariant holds factor by factor.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        loop {
            let mut progress = false;
            let betas: Vec<Vec<i32>> = self.den.keys().cloned().collect();
            for beta in betas {
                while self.den.contains_key(&beta) {
                    match self.num.div_one_minus_z(&beta) {
                        Some(q) => {
                            self.num = q;
                            progress = true;
                            let m = self.den.get_mut(&beta).unwrap();
                            *m -= 1;
                            if *m == 0 {
                                self.den.remove(&beta);
                            }
                        }
                        None => break,
                    }
                }
            }
            if !progress {
                break;
            }
        }
    }

    /// Public form of the reduction; idempotent.
    pub fn reduce(&self) -> RatFn {
        let mut out = self.clone();
        out.normalize();
        out
    }

    fn expand_den(rank: usize, den: &DenMultiset) -> QZLaurent {
        let mut acc = QZLaurent::one(rank);
        for (beta, &m) in den {
            let factor = QZLaurent::one(rank).sub(&QZLaurent::z_mono(rank, beta));
            for _ in 0..m {
                acc = acc.mul(&factor);
            }
        }
        acc
    }

    /// Multiset difference `self.den - other.den` (saturating per key).
    fn den_diff(a: &DenMultiset, b: &DenMultiset) -> DenMultiset {
        let mut out = DenMultiset::new();
        for (beta, &m) in a {
            let n = b.get(beta).copied().unwrap_or(0);
            if m > n {
                out.insert(beta.clone(), m - n);
            }
        }
        out
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        let rank = self.rank();
        let extra_a = Self::den_diff(&other.den, &self.den);
        let extra_b = Self::den_diff(&self.den, &other.den);
        let num = self
            .num
            .mul(&Self::expand_den(rank, &extra_a))
            .add(&other.num.mul(&Self::expand_den(rank, &extra_b)));
        let mut den = DenMultiset::new();
        for (beta, &m) in self.den.iter().chain(&extra_a) {
            *den.entry(beta.clone()).or_insert(0) += m;
        }
        RatFn::new(num, den)
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        let mut den = self.den.clone();
        for (beta, &m) in &other.den {
            *den.entry(beta.clone()).or_insert(0) += m;
        }
        RatFn::new(self.num.mul(&other.num), den)
    }

    pub fn scale(&self, c: i128) -> RatFn {
        RatFn::new(self.num.scale(c), self.den.clone())
    }

    /// q -> q^{-1}, z fixed.
    pub fn bar(&self) -> RatFn {
        RatFn {
            num: self.num.bar(),
            den: self.den.clone(),
        }
    }

    /// z -> z^{-1}: each denominator factor is rewritten
    /// `1/(1 - z^{-beta}) = -z^beta/(1 - z^beta)`, keeping factors indexed
    /// by positive roots.
    pub fn invert_z(&self) -> RatFn {
        let rank = self.rank();
        let mut num = self.num.invert_z();
        let mut total_shift = vec![0i32; rank];
        let mut sign = 1i128;
        for (beta, &m) in &self.den {
            for (t, &b) in total_shift.iter_mut().zip(beta) {
                *t += m as i32 * b;
            }
            if m % 2 == 1 {
                sign = -sign;
            }
        }
        num = num.shift(0, &total_shift).scale(sign);
        RatFn {
            num,
            den: self.den.clone(),
        }
    }

    /// Limit as z -> infinity along z^alpha -> infinity for positive alpha,
    /// computed by substituting z^lambda -> t^{<weights,lambda>} and taking
    /// the leading coefficient ratio in t. Default weights are all 1.
    pub fn limit_z_infinity(&self, weights: Option<&[i64]>) -> Result<QLaurent, Error> {
        let rank = self.rank();
        let default: Vec<i64> = vec![1; rank];
        let w = weights.unwrap_or(&default);
        assert!(w.len() == rank && w.iter().all(|&x| x > 0));

        if self.num.is_zero() {
            return Ok(QLaurent::zero());
        }
        let slices = self.num.height_collect(w);
        let (&num_deg, top) = slices.iter().next_back().expect("nonzero numerator");
        let mut den_deg = 0i64;
        let mut den_sign = 1i64;
        for (beta, &m) in &self.den {
            let h: i64 = beta.iter().zip(w).map(|(&b, &wi)| b as i64 * wi).sum();
            den_deg += m as i64 * h;
            if m % 2 == 1 {
                den_sign = -den_sign;
            }
        }
        if num_deg > den_deg {
            return Err(Error::NoLimit);
        }
        if num_deg < den_deg {
            return Ok(QLaurent::zero());
        }
        let mut out = QLaurent::zero();
        for (&e, &c) in top {
            let c64: i64 = c.try_into().expect("limit coefficient fits i64");
            out.add_term(e, c64 * den_sign);
        }
        Ok(out)
    }

    /// Homomorphic evaluation at a modular point.
    pub fn eval_mod(&self, ctx: &ModCtx) -> Result<u64, Error> {
        let fp = ctx.fp();
        let mut den = 1u64;
        for (beta, &m) in &self.den {
            let f = fp.sub(1, ctx.z_pow(beta));
            if f == 0 {
                return Err(Error::BadSample);
            }
            den = fp.mul(den, fp.pow(f, m as u64));
        }
        Ok(fp.mul(self.num.eval_mod(ctx), fp.inv(den)))
    }

    pub fn eval_fp(&self, fp: Fp, q: u64, z: &[u64]) -> Result<u64, Error> {
        let mut den = 1u64;
        for (beta, &m) in &self.den {
            let mut zp = 1u64;
            for (&zi, &e) in z.iter().zip(beta) {
                zp = fp.mul(zp, fp.pow_signed(zi, e as i64));
            }
            let f = fp.sub(1, zp);
            if f == 0 {
                return Err(Error::BadSample);
            }
            den = fp.mul(den, fp.pow(f, m as u64));
        }
        Ok(fp.mul(self.num.eval_fp(fp, q, z), fp.inv(den)))
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        let rank = self.rank();
        let extra_a = Self::den_diff(&other.den, &self.den);
        let extra_b = Self::den_diff(&self.den, &other.den);
        self.num.mul(&Self::expand_den(rank, &extra_a))
            == other.num.mul(&Self::expand_den(rank, &extra_b))
    }
}
impl Eq for RatFn {}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ", self.num)?;
        for (beta, &m) in &self.den {
            let b = beta
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            if m == 1 {
                write!(f, "(1 - z^[{b}])")?;
            } else {
                write!(f, "(1 - z^[{b}])^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct DenFactorRepr {
    root: Vec<i32>,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct RatFnRepr {
    num: QZLaurent,
    den: Vec<DenFactorRepr>,
}

impl Serialize for RatFn {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFnRepr {
            num: self.num.clone(),
            den: self
                .den
                .iter()
                .map(|(root, &mult)| DenFactorRepr { root: root.clone(), mult })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RatFnRepr::deserialize(deserializer)?;
        let mut den = DenMultiset::new();
        for f in repr.den {
            *den.entry(f.root).or_insert(0) += f.mult;
        }
        Ok(RatFn { num: repr.num, den })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1_m() -> RatFn {
        // (1 - q^{-1} z)/(1 - z) in rank 1
        let num = QZLaurent::one(1).sub(&QZLaurent::monomial(1, -1, &[1], 1));
        RatFn::new(num, [(vec![1], 1)].into_iter().collect())
    }

    #[test]
    fn add_example() {
        // (1-q) z/(1-z) + 1 = (1 - q z)/(1 - z)
        let rank = 1;
        let r = RatFn::from_laurent(
            QZLaurent::z_mono(rank, &[1]).sub(&QZLaurent::monomial(rank, 1, &[1], 1)),
        )
        .mul(&RatFn::inv_one_minus_z(rank, &[1]));
        let lhs = r.add(&RatFn::one(rank));
        let expected = RatFn::new(
            QZLaurent::one(rank).sub(&QZLaurent::monomial(rank, 1, &[1], 1)),
            [(vec![1], 1)].into_iter().collect(),
        );
        assert_eq!(lhs, expected);
        // x * (1/x) = 1
        let inv = RatFn::inv_one_minus_z(rank, &[1]);
        let back = inv.mul(&RatFn::from_laurent(
            QZLaurent::one(rank).sub(&QZLaurent::z_mono(rank, &[1])),
        ));
        assert!(back.is_one());
    }

    #[test]
    fn reduce_cancels_exact_factors() {
        let rank = 2;
        let beta = vec![0, 1];
        // ((1-q) + (q-1) z^beta)/(1 - z^beta) = q - 1 ... times -1: (1-q)(1-z)/(1-z)
        let num = QZLaurent::int(rank, 1)
            .sub(&QZLaurent::q_pow(rank, 1))
            .add(&QZLaurent::monomial(rank, 1, &beta, 1))
            .sub(&QZLaurent::monomial(rank, 0, &beta, 1));
        let f = RatFn::new(num, [(beta.clone(), 1)].into_iter().collect());
        assert!(f.denominator().is_empty());
        assert_eq!(
            f,
            RatFn::from_laurent(QZLaurent::int(rank, 1).sub(&QZLaurent::q_pow(rank, 1)))
        );
        // idempotent
        assert_eq!(f.reduce(), f);
    }

    #[test]
    fn bar_and_invert_z() {
        let m = a1_m();
        let barred = m.bar();
        assert_eq!(barred.bar(), m);
        let inv = m.invert_z();
        assert_eq!(inv.invert_z(), m);
        // 1/(1-z) inverted is -z/(1-z)
        let f = RatFn::inv_one_minus_z(1, &[1]);
        let expected = RatFn::new(
            QZLaurent::z_mono(1, &[1]).scale(-1),
            [(vec![1], 1)].into_iter().collect(),
        );
        assert_eq!(f.invert_z(), expected);
        // and matches the negative-exponent constructor
        assert_eq!(RatFn::inv_one_minus_z(1, &[-1]), expected);
        // bar and invert_z commute
        assert_eq!(m.bar().invert_z(), m.invert_z().bar());
    }

    #[test]
    fn limits() {
        assert_eq!(
            RatFn::one(2).limit_z_infinity(None).unwrap(),
            QLaurent::one()
        );
        // (1-q) z/(1-z) -> q - 1
        let r = RatFn::from_laurent(
            QZLaurent::z_mono(1, &[1]).sub(&QZLaurent::monomial(1, 1, &[1], 1)),
        )
        .mul(&RatFn::inv_one_minus_z(1, &[1]));
        let lim = r.limit_z_infinity(None).unwrap();
        assert_eq!(lim, QLaurent::monomial(1, 1).add(&QLaurent::monomial(-1, 0)));
        // (1 - q^{-1} z)/(1 - z) -> q^{-1}
        assert_eq!(
            a1_m().limit_z_infinity(None).unwrap(),
            QLaurent::monomial(1, -1)
        );
        // z alone has no limit
        assert_eq!(
            RatFn::z_mono(1, &[1]).limit_z_infinity(None),
            Err(Error::NoLimit)
        );
    }

    #[test]
    fn modular_evaluation() {
        let ctx = ModCtx::new(101, 2, vec![5]);
        assert_eq!(RatFn::one(1).eval_mod(&ctx).unwrap(), 1);
        assert_eq!(RatFn::q_pow(1, 1).eval_mod(&ctx).unwrap(), 2);
        let fp = ctx.fp();
        let expected = fp.mul(fp.sub(1, fp.mul(fp.inv(2), 5)), fp.inv(fp.sub(1, 5)));
        assert_eq!(a1_m().eval_mod(&ctx).unwrap(), expected);
        let bad = ModCtx::new(101, 2, vec![1]);
        assert_eq!(a1_m().eval_mod(&bad), Err(Error::BadSample));
    }

    #[test]
    fn serde_round_trip() {
        let m = a1_m();
        let s = serde_json::to_string(&m).unwrap();
        let back: RatFn = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);
        assert_eq!(s, serde_json::to_string(&back).unwrap());
    }
}
