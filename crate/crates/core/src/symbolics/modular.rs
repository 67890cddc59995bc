//! Prime-field arithmetic and modular sample points for identity testing.
//!
//! A sample point assigns nonzero residues to q and z_1..z_n, rejecting any
//! assignment that kills a factor `1 - z^beta` for a positive root beta (or
//! sets q to 0 or 1). With the default prime near 2^61, twenty independent
//! samples make the false-accept probability of a polynomial identity of
//! total degree d at most (d/p)^20.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};



/// Default modulus: the Mersenne prime 2^61 - 1.
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_693_951;

/// Arithmetic in F_p for p < 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!(p >= 2 && p < 1 << 62, "modulus out of range");
        Fp { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_p");
        self.pow(a, self.p - 2)
    }

    pub fn pow_signed(self, base: u64, exp: i64) -> u64 {
        if exp >= 0 {
            self.pow(base, exp as u64)
        } else {
            self.inv(self.pow(base, (-exp) as u64))
        }
    }

    pub fn from_i64(self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_i128(self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

/// A modular evaluation point: residues for q and each z_i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModCtx {
    fp: Fp,
    q: u64,
    z: Vec<u64>,
}

impl ModCtx {
    pub fn new(p: u64, q: u64, z: Vec<u64>) -> ModCtx {
        ModCtx { fp: Fp::new(p), q, z }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn z(&self) -> &[u64] {
        &self.z
    }

    /// `z^beta` for an integer exponent vector.
    pub fn z_pow(&self, beta: &[i32]) -> u64 {
        let mut acc = 1u64;
        for (&zi, &e) in self.z.iter().zip(beta) {
            acc = self.fp.mul(acc, self.fp.pow_signed(zi, e as i64));
        }
        acc
    }

    /// Whether the point is admissible for the given positive roots: q is
    /// neither 0 nor 1 and no factor `1 - z^beta` vanishes.
    pub fn admissible(&self, positive_roots: &[Vec<i32>]) -> bool {
        if self.q == 0 || self.q == 1 || self.z.iter().any(|&zi| zi == 0) {
            return false;
        }
        positive_roots.iter().all(|beta| self.z_pow(beta) != 1)
    }

    /// Deterministic sequence of admissible sample points for a seed.
    pub fn sample_points(
        p: u64,
        seed: u64,
        count: usize,
        rank: usize,
        positive_roots: &[Vec<i32>],
    ) -> Vec<ModCtx> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let q = rng.gen_range(2..p);
            let z: Vec<u64> = (0..rank).map(|_| rng.gen_range(1..p)).collect();
            let ctx = ModCtx::new(p, q, z);
            if ctx.admissible(positive_roots) {
                out.push(ctx);
            }
        }
        out
    }
}

/// A univariate rational function over F_p, kept normalized (gcd removed,
/// monic denominator). Used for z -> infinity limits of the recursions: the
/// substitution z^lambda -> t^{height(lambda)} lands here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpRat {
    fp: Fp,
    /// Coefficients in ascending order; empty means zero.
    num: Vec<u64>,
    den: Vec<u64>,
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn padd(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = fp.add(x, y);
    }
    trim(&mut out);
    out
}

fn pneg(fp: Fp, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&c| fp.neg(c)).collect()
}

fn pmul(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

fn pscale(fp: Fp, a: &[u64], c: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| fp.mul(x, c)).collect();
    trim(&mut out);
    out
}

/// Remainder of a by b (b nonzero).
fn prem(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead_inv = fp.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = fp.mul(*r.last().unwrap(), lead_inv);
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = fp.sub(r[shift + i], fp.mul(c, bc));
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn pgcd(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = prem(fp, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        a = pscale(fp, &a, fp.inv(lead));
    }
    a
}

/// Exact quotient a / b; panics if not exact (internal use only).
fn pdiv_exact(fp: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - b.len() + 1];
    let lead_inv = fp.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = fp.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = fp.sub(r[shift + i], fp.mul(c, bc));
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

impl FpRat {
    pub fn zero(fp: Fp) -> FpRat {
        FpRat { fp, num: Vec::new(), den: vec![1] }
    }

    pub fn constant(fp: Fp, c: u64) -> FpRat {
        let c = c % fp.p;
        FpRat {
            fp,
            num: if c == 0 { Vec::new() } else { vec![c] },
            den: vec![1],
        }
    }

    /// `t^k` for integer k.
    pub fn t_pow(fp: Fp, k: i64) -> FpRat {
        let mono = |d: usize| {
            let mut v = vec![0u64; d + 1];
            v[d] = 1;
            v
        };
        if k >= 0 {
            FpRat { fp, num: mono(k as usize), den: vec![1] }
        } else {
            FpRat { fp, num: vec![1], den: mono((-k) as usize) }
        }
    }

    fn normalize(mut self) -> FpRat {
        trim(&mut self.num);
        trim(&mut self.den);
        assert!(!self.den.is_empty(), "zero denominator");
        if self.num.is_empty() {
            self.den = vec![1];
            return self;
        }
        let g = pgcd(self.fp, &self.num, &self.den);
        if g.len() > 1 {
            self.num = pdiv_exact(self.fp, &self.num, &g);
            self.den = pdiv_exact(self.fp, &self.den, &g);
        }
        let lead_inv = self.fp.inv(*self.den.last().unwrap());
        self.num = pscale(self.fp, &self.num, lead_inv);
        self.den = pscale(self.fp, &self.den, lead_inv);
        self
    }

    pub fn add(&self, other: &FpRat) -> FpRat {
        let fp = self.fp;
        FpRat {
            fp,
            num: padd(
                fp,
                &pmul(fp, &self.num, &other.den),
                &pmul(fp, &other.num, &self.den),
            ),
            den: pmul(fp, &self.den, &other.den),
        }
        .normalize()
    }

    pub fn neg(&self) -> FpRat {
        FpRat {
            fp: self.fp,
            num: pneg(self.fp, &self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &FpRat) -> FpRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FpRat) -> FpRat {
        let fp = self.fp;
        FpRat {
            fp,
            num: pmul(fp, &self.num, &other.num),
            den: pmul(fp, &self.den, &other.den),
        }
        .normalize()
    }

    pub fn inv(&self) -> FpRat {
        assert!(!self.num.is_empty(), "inverse of zero rational function");
        FpRat {
            fp: self.fp,
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalize()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Value at t -> infinity: 0 if deg num < deg den, the leading
    /// coefficient ratio at equality, None if the limit diverges.
    pub fn limit_at_infinity(&self) -> Option<u64> {
        if self.num.is_empty() {
            return Some(0);
        }
        match self.num.len().cmp(&self.den.len()) {
            std::cmp::Ordering::Less => Some(0),
            std::cmp::Ordering::Equal => Some(
                self.fp
                    .mul(*self.num.last().unwrap(), self.fp.inv(*self.den.last().unwrap())),
            ),
            std::cmp::Ordering::Greater => None,
        }
    }
}
