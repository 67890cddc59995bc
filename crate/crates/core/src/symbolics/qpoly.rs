//! Univariate polynomials and Laurent polynomials in q over Z.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symbolics::modular::Fp;

/// Dense polynomial in q; coefficient of q^i at index i. Empty means zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(pub Vec<i64>);

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly(Vec::new())
    }

    pub fn one() -> QPoly {
        QPoly(vec![1])
    }

    pub fn monomial(coeff: i64, exp: usize) -> QPoly {
        if coeff == 0 {
            return QPoly::zero();
        }
        let mut v = vec![0; exp + 1];
        v[exp] = coeff;
        QPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// Degree; zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.0.get(exp).copied().unwrap_or(0)
    }

    fn trim(mut self) -> QPoly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = vec![0i64; self.0.len().max(other.0.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(i) + other.coeff(i);
        }
        QPoly(out).trim()
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|&c| -c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }

    pub fn scale(&self, c: i64) -> QPoly {
        if c == 0 {
            return QPoly::zero();
        }
        QPoly(self.0.iter().map(|&x| x * c).collect())
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![0i64; k];
        v.extend_from_slice(&self.0);
        QPoly(v)
    }

    pub fn eval_fp(&self, fp: Fp, q: u64) -> u64 {
        // Horner
        let mut acc = 0u64;
        for &c in self.0.iter().rev() {
            acc = fp.add(fp.mul(acc, q), fp.from_i64(c));
        }
        acc
    }

    pub fn to_laurent(&self) -> QLaurent {
        let mut out = QLaurent::zero();
        for (i, &c) in self.0.iter().enumerate() {
            out.add_term(i as i32, c);
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

/// Sparse Laurent polynomial in q.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QLaurent(pub BTreeMap<i32, i64>);

impl QLaurent {
    pub fn zero() -> QLaurent {
        QLaurent(BTreeMap::new())
    }

    pub fn one() -> QLaurent {
        QLaurent::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> QLaurent {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        QLaurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&0) == Some(&1)
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.0.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn add(&self, other: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, -c);
        }
        out
    }

    pub fn neg(&self) -> QLaurent {
        QLaurent(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn mul(&self, other: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&ea, &ca) in &self.0 {
            for (&eb, &cb) in &other.0 {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> QLaurent {
        if c == 0 {
            return QLaurent::zero();
        }
        QLaurent(self.0.iter().map(|(&e, &x)| (e, x * c)).collect())
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i32) -> QLaurent {
        QLaurent(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    /// q -> q^{-1}.
    pub fn bar(&self) -> QLaurent {
        QLaurent(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn eval_fp(&self, fp: Fp, q: u64) -> u64 {
        let mut acc = 0u64;
        for (&e, &c) in &self.0 {
            acc = fp.add(acc, fp.mul(fp.from_i64(c), fp.pow_signed(q, e as i64)));
        }
        acc
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.0.iter().rev() {
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
            let mag = c.unsigned_abs();
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}*q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, m) => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self
            .0
            .iter()
            .map(|(&e, &c)| (e.to_string(), c))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map: BTreeMap<String, i64> = Deserialize::deserialize(deserializer)?;
        let mut out = QLaurent::zero();
        for (e, c) in map {
            out.add_term(e.parse().map_err(D::Error::custom)?, c);
        }
        Ok(out)
    }
}
