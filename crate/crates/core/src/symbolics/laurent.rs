//! Laurent polynomials over Z in q and the torus coordinates z_1..z_n.
//!
//! Terms are keyed by fixed-length exponent vectors `[q_exp, z_1, .., z_n]`
//! held in a BTreeMap, so iteration order (and hence display and
//! serialization) is deterministic. No zero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symbolics::modular::{Fp, ModCtx};

/// Exponent key: `[q_exp, z_1, ..., z_n]`.
pub type ExpKey = Vec<i32>;

#[derive(Clone, PartialEq, Eq)]
pub struct QZLaurent {
    rank: usize,
    terms: BTreeMap<ExpKey, i128>,
}

impl QZLaurent {
    pub fn zero(rank: usize) -> QZLaurent {
        QZLaurent {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn int(rank: usize, n: i128) -> QZLaurent {
        let mut p = QZLaurent::zero(rank);
        if n != 0 {
            p.terms.insert(vec![0; rank + 1], n);
        }
        p
    }

    pub fn one(rank: usize) -> QZLaurent {
        QZLaurent::int(rank, 1)
    }

    pub fn monomial(rank: usize, q_exp: i32, z_exp: &[i32], coeff: i128) -> QZLaurent {
        assert_eq!(z_exp.len(), rank);
        let mut p = QZLaurent::zero(rank);
        if coeff != 0 {
            let mut key = Vec::with_capacity(rank + 1);
            key.push(q_exp);
            key.extend_from_slice(z_exp);
            p.terms.insert(key, coeff);
        }
        p
    }

    pub fn q_pow(rank: usize, k: i32) -> QZLaurent {
        QZLaurent::monomial(rank, k, &vec![0; rank], 1)
    }

    pub fn z_mono(rank: usize, exps: &[i32]) -> QZLaurent {
        QZLaurent::monomial(rank, 0, exps, 1)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpKey, &i128)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: ExpKey, coeff: i128) {
        debug_assert_eq!(key.len(), self.rank + 1);
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &QZLaurent) -> QZLaurent {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            let entry = out.terms.entry(k.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn neg(&self) -> QZLaurent {
        QZLaurent {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, &c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &QZLaurent) -> QZLaurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QZLaurent) -> QZLaurent {
        assert_eq!(self.rank, other.rank);
        let mut out = QZLaurent::zero(self.rank);
        for (ka, &ca) in &self.terms {
            for (kb, &cb) in &other.terms {
                let key: ExpKey = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(key.clone()).or_insert(0);
                *entry += ca * cb;
                if *entry == 0 {
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: i128) -> QZLaurent {
        if c == 0 {
            return QZLaurent::zero(self.rank);
        }
        QZLaurent {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, &x)| (k.clone(), x * c)).collect(),
        }
    }

    /// Multiply by the monomial `q^dq z^dz`.
    pub fn shift(&self, dq: i32, dz: &[i32]) -> QZLaurent {
        QZLaurent {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| {
                    let mut key = k.clone();
                    key[0] += dq;
                    for (t, d) in key[1..].iter_mut().zip(dz) {
                        *t += d;
                    }
                    (key, c)
                })
                .collect(),
        }
    }

    /// The involution q -> q^{-1}, z fixed.
    pub fn bar(&self) -> QZLaurent {
        QZLaurent {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| {
                    let mut key = k.clone();
                    key[0] = -key[0];
                    (key, c)
                })
                .collect(),
        }
    }

    /// The substitution z -> z^{-1}, q fixed.
    pub fn invert_z(&self) -> QZLaurent {
        QZLaurent {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| {
                    let mut key = k.clone();
                    for t in key[1..].iter_mut() {
                        *t = -*t;
                    }
                    (key, c)
                })
                .collect(),
        }
    }

    /// Exact division by the binomial `1 - z^beta` (beta a nonzero vector of
    /// nonnegative coordinates). Returns None when the division is not exact.
    pub fn div_one_minus_z(&self, beta: &[i32]) -> Option<QZLaurent> {
        debug_assert!(beta.iter().all(|&c| c >= 0) && beta.iter().any(|&c| c > 0));
        if self.is_zero() {
            return Some(self.clone());
        }
        let zh = |k: &ExpKey| -> i64 { k[1..].iter().map(|&c| c as i64).sum() };
        let max_h = self.terms.keys().map(zh).max().unwrap();

        let mut quotient = QZLaurent::zero(self.rank);
        let mut rem = self.clone();
        while !rem.is_zero() {
            let min_h = rem.terms.keys().map(zh).min().unwrap();
            if min_h > max_h {
                return None;
            }
            // All minimal-grade terms of the remainder belong to the quotient.
            let heads: Vec<(ExpKey, i128)> = rem
                .terms
                .iter()
                .filter(|(k, _)| zh(k) == min_h)
                .map(|(k, &c)| (k.clone(), c))
                .collect();
            for (k, c) in heads {
                quotient.add_term(k.clone(), c);
                rem.terms.remove(&k);
                let mut shifted = k;
                for (t, b) in shifted[1..].iter_mut().zip(beta) {
                    *t += b;
                }
                rem.add_term(shifted, c);
            }
        }
        Some(quotient)
    }

    /// Evaluation as a ring homomorphism into F_p at the point of `ctx`.
    pub fn eval_mod(&self, ctx: &ModCtx) -> u64 {
        let fp = ctx.fp();
        let mut acc = 0u64;
        for (k, &c) in &self.terms {
            let mut t = fp.from_i128(c);
            t = fp.mul(t, fp.pow_signed(ctx.q(), k[0] as i64));
            for (zi, &e) in ctx.z().iter().zip(&k[1..]) {
                t = fp.mul(t, fp.pow_signed(*zi, e as i64));
            }
            acc = fp.add(acc, t);
        }
        acc
    }

    /// Substitute `z^lambda -> t^{<weights, lambda>}` and collect, per power
    /// of t, the q-Laurent coefficient. Weights must be strictly positive.
    pub fn height_collect(&self, weights: &[i64]) -> BTreeMap<i64, BTreeMap<i32, i128>> {
        let mut out: BTreeMap<i64, BTreeMap<i32, i128>> = BTreeMap::new();
        for (k, &c) in &self.terms {
            let deg: i64 = k[1..]
                .iter()
                .zip(weights)
                .map(|(&e, &w)| e as i64 * w)
                .sum();
            let slice = out.entry(deg).or_default();
            let entry = slice.entry(k[0]).or_insert(0);
            *entry += c;
            if *entry == 0 {
                slice.remove(&k[0]);
            }
        }
        out.retain(|_, slice| !slice.is_empty());
        out
    }

    pub fn eval_fp(&self, fp: Fp, q: u64, z: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (k, &c) in &self.terms {
            let mut t = fp.from_i128(c);
            t = fp.mul(t, fp.pow_signed(q, k[0] as i64));
            for (zi, &e) in z.iter().zip(&k[1..]) {
                t = fp.mul(t, fp.pow_signed(*zi, e as i64));
            }
            acc = fp.add(acc, t);
        }
        acc
    }
}

impl fmt::Debug for QZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in &self.terms {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if k[0] != 0 {
                parts.push(if k[0] == 1 {
                    "q".to_string()
                } else {
                    format!("q^{}", k[0])
                });
            }
            if k[1..].iter().any(|&e| e != 0) {
                parts.push(format!(
                    "z^[{}]",
                    k[1..]
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            }
            if parts.is_empty() || mag != 1 {
                parts.insert(0, mag.to_string());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    q_exp: i32,
    z_exp: Vec<i32>,
    coeff: String,
}

impl Serialize for QZLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(k, c)| TermRepr {
                q_exp: k[0],
                z_exp: k[1..].to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        (self.rank, reprs).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QZLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (rank, reprs): (usize, Vec<TermRepr>) = Deserialize::deserialize(deserializer)?;
        let mut p = QZLaurent::zero(rank);
        for r in reprs {
            if r.z_exp.len() != rank {
                return Err(D::Error::custom("z exponent length mismatch"));
            }
            let coeff: i128 = r.coeff.parse().map_err(D::Error::custom)?;
            let mut key = Vec::with_capacity(rank + 1);
            key.push(r.q_exp);
            key.extend_from_slice(&r.z_exp);
            p.add_term(key, coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let one = QZLaurent::one(2);
        let q = QZLaurent::q_pow(2, 1);
        let z = QZLaurent::z_mono(2, &[1, 0]);
        let p = one.add(&q.mul(&z));
        assert_eq!(p.num_terms(), 2);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul(&one), p);
        assert_eq!(q.bar(), QZLaurent::q_pow(2, -1));
        assert_eq!(z.invert_z(), QZLaurent::z_mono(2, &[-1, 0]));
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn binomial_division() {
        let rank = 2;
        let beta = vec![1, 1];
        let factor = QZLaurent::one(rank).sub(&QZLaurent::z_mono(rank, &beta));
        let g = QZLaurent::one(rank)
            .add(&QZLaurent::q_pow(rank, -2).scale(3))
            .sub(&QZLaurent::z_mono(rank, &[2, 0]));
        let f = factor.mul(&g);
        assert_eq!(f.div_one_minus_z(&beta).unwrap(), g);
        // not divisible
        assert!(QZLaurent::one(rank).div_one_minus_z(&beta).is_none());
    }

    #[test]
    fn json_round_trip() {
        let p = QZLaurent::monomial(2, -3, &[1, -2], 7).add(&QZLaurent::one(2));
        let s = serde_json::to_string(&p).unwrap();
        let back: QZLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
        assert_eq!(s, serde_json::to_string(&back).unwrap());
    }
}
