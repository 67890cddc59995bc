//! Weyl group enumeration, dense indexing, and the Bruhat order.
//!
//! Elements are identified by their canonical form: the tuple of images of
//! the simple roots as signed root indices. The whole group is enumerated
//! breadth-first by length, each layer sorted by canonical form, so dense
//! indices are deterministic and ordered by (length, canonical form).
//!
//! The Bruhat order is computed by the lifting-property recursion, one row
//! per element, rather than by subword search.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::Error;
use crate::weyl::root::{RootSystem, RootVec, SignedRoot};

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Dense element index within a [`WeylGroup`].
pub type ElemIdx = u32;

/// The enumerated Weyl group of a root system.
pub struct WeylGroup {
    id: u64,
    rs: RootSystem,
    size: usize,
    /// Signed images of every positive root under each element.
    perm: Vec<Box<[SignedRoot]>>,
    length: Vec<u32>,
    /// `right[w][i]` = index of `w * s_i`.
    right: Vec<Box<[ElemIdx]>>,
    /// `left[w][i]` = index of `s_i * w`.
    left: Vec<Box<[ElemIdx]>>,
    inv: Vec<ElemIdx>,
    /// Reflection element `r_beta` for each positive root.
    refl_of_root: Vec<ElemIdx>,
    index_by_key: HashMap<Vec<SignedRoot>, ElemIdx>,
    zeta: OnceLock<Zeta>,
}

fn apply(perm: &[SignedRoot], s: SignedRoot) -> SignedRoot {
    if s > 0 {
        perm[(s - 1) as usize]
    } else {
        -perm[(-s - 1) as usize]
    }
}

impl WeylGroup {
    /// Enumerates the full group of a root system.
    pub fn build(rs: RootSystem) -> Arc<WeylGroup> {
        let rank = rs.rank;
        let n_pos = rs.num_positive_roots();

        let identity: Box<[SignedRoot]> = (1..=n_pos as SignedRoot).collect();
        let mut perms: Vec<Box<[SignedRoot]>> = vec![identity];
        let mut index_by_key: HashMap<Vec<SignedRoot>, ElemIdx> = HashMap::new();
        index_by_key.insert(perms[0][..rank].to_vec(), 0);
        let mut parent: Vec<(ElemIdx, u8)> = vec![(0, 0)];

        let mut layer: Vec<ElemIdx> = vec![0];
        while !layer.is_empty() {
            let mut fresh: Vec<(Vec<SignedRoot>, Box<[SignedRoot]>, ElemIdx, u8)> = Vec::new();
            for &w in &layer {
                for i in 0..rank {
                    // ascent: w(alpha_i) > 0 means l(w s_i) = l(w) + 1
                    if perms[w as usize][i] < 0 {
                        continue;
                    }
                    let image: Box<[SignedRoot]> = (0..n_pos)
                        .map(|k| apply(&perms[w as usize], rs.reflect_signed(i, k as SignedRoot + 1)))
                        .collect();
                    let key = image[..rank].to_vec();
                    if !index_by_key.contains_key(&key)
                        && !fresh.iter().any(|(k, ..)| *k == key)
                    {
                        fresh.push((key, image, w, i as u8));
                    }
                }
            }
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            layer = Vec::with_capacity(fresh.len());
            for (key, image, par, letter) in fresh {
                let idx = perms.len() as ElemIdx;
                index_by_key.insert(key, idx);
                perms.push(image);
                parent.push((par, letter));
                layer.push(idx);
            }
        }

        let size = perms.len();
        let length: Vec<u32> = perms
            .iter()
            .map(|p| p.iter().filter(|&&s| s < 0).count() as u32)
            .collect();

        let mut right = Vec::with_capacity(size);
        let mut left = Vec::with_capacity(size);
        for w in 0..size {
            let r_row: Box<[ElemIdx]> = (0..rank)
                .map(|i| {
                    let key: Vec<SignedRoot> = (0..rank)
                        .map(|j| apply(&perms[w], rs.reflect_signed(i, j as SignedRoot + 1)))
                        .collect();
                    index_by_key[&key]
                })
                .collect();
            let l_row: Box<[ElemIdx]> = (0..rank)
                .map(|i| {
                    let key: Vec<SignedRoot> = (0..rank)
                        .map(|j| rs.reflect_signed(i, perms[w][j]))
                        .collect();
                    index_by_key[&key]
                })
                .collect();
            right.push(r_row);
            left.push(l_row);
        }

        // Inverses: fold the reversed reduced word read off the BFS tree.
        let mut inv = vec![0 as ElemIdx; size];
        for w in 0..size {
            let mut acc: ElemIdx = 0;
            let mut cur = w as ElemIdx;
            while cur != 0 {
                let (par, letter) = parent[cur as usize];
                acc = right[acc as usize][letter as usize];
                cur = par;
            }
            inv[w] = acc;
        }

        // Reflections: r_{alpha_i} = s_i, and r_{s_i(beta)} = s_i r_beta s_i.
        let mut refl_of_root = vec![ElemIdx::MAX; n_pos];
        let mut pending: Vec<usize> = Vec::new();
        for i in 0..rank {
            refl_of_root[i] = right[0][i];
            pending.push(i);
        }
        while let Some(k) = pending.pop() {
            for i in 0..rank {
                let image = rs.reflect_signed(i, k as SignedRoot + 1);
                if image > 0 {
                    let k2 = (image - 1) as usize;
                    if refl_of_root[k2] == ElemIdx::MAX {
                        let t = refl_of_root[k];
                        refl_of_root[k2] = left[right[t as usize][i] as usize][i];
                        pending.push(k2);
                    }
                }
            }
        }
        debug_assert!(refl_of_root.iter().all(|&t| t != ElemIdx::MAX));

        Arc::new(WeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            rs,
            size,
            perm: perms,
            length,
            right,
            left,
            inv,
            refl_of_root,
            index_by_key,
            zeta: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn identity(&self) -> ElemIdx {
        0
    }

    /// The longest element; it is the last element in dense order.
    pub fn w0(&self) -> ElemIdx {
        (self.size - 1) as ElemIdx
    }

    pub fn length(&self, w: ElemIdx) -> u32 {
        self.length[w as usize]
    }

    /// `(-1)^{l(w)}`.
    pub fn sign(&self, w: ElemIdx) -> i64 {
        if self.length[w as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self, w: ElemIdx) -> ElemIdx {
        self.inv[w as usize]
    }

    pub fn right_mul_s(&self, w: ElemIdx, i: usize) -> ElemIdx {
        self.right[w as usize][i]
    }

    pub fn left_mul_s(&self, w: ElemIdx, i: usize) -> ElemIdx {
        self.left[w as usize][i]
    }

    /// Product of two elements by composing canonical forms.
    pub fn mul(&self, a: ElemIdx, b: ElemIdx) -> ElemIdx {
        let key: Vec<SignedRoot> = (0..self.rs.rank)
            .map(|j| apply(&self.perm[a as usize], self.perm[b as usize][j]))
            .collect();
        self.index_by_key[&key]
    }

    /// Signed image of a positive root index under `w`.
    pub fn image_of_root(&self, w: ElemIdx, root: usize) -> SignedRoot {
        self.perm[w as usize][root]
    }

    /// Whether `s_i` is a right descent, i.e. `w s_i < w`.
    pub fn is_right_descent(&self, w: ElemIdx, i: usize) -> bool {
        self.perm[w as usize][i] < 0
    }

    /// Whether `s_i` is a left descent, i.e. `s_i w < w`.
    pub fn is_left_descent(&self, w: ElemIdx, i: usize) -> bool {
        self.perm[self.inv[w as usize] as usize][i] < 0
    }

    /// Lowest-index left descent of `w`, if any.
    pub fn first_left_descent(&self, w: ElemIdx) -> Option<usize> {
        (0..self.rs.rank).find(|&i| self.is_left_descent(w, i))
    }

    /// Linear action of `w` on a coordinate vector in the simple-root basis.
    pub fn act_vec(&self, w: ElemIdx, v: &[i32]) -> RootVec {
        let mut out = vec![0i32; self.rs.rank];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let image = self.rs.root_vec(self.perm[w as usize][j]);
            for (o, &x) in out.iter_mut().zip(&image) {
                *o += c * x;
            }
        }
        out
    }

    /// The reflection `r_beta` for the k-th positive root.
    pub fn reflection(&self, root: usize) -> ElemIdx {
        self.refl_of_root[root]
    }

    /// Builds an element from a word of 0-based simple-reflection indices.
    pub fn from_word(&self, word: &[usize]) -> Result<ElemIdx, Error> {
        let mut w = 0 as ElemIdx;
        for &i in word {
            if i >= self.rs.rank {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: self.rs.rank,
                });
            }
            w = self.right[w as usize][i];
        }
        Ok(w)
    }

    /// Builds an element handle from a word of 1-based indices, the list
    /// form used by the serialization interface.
    pub fn element_from_word(self: &Arc<Self>, word: &[usize]) -> Result<WeylElt, Error> {
        let mut w = 0 as ElemIdx;
        for &i in word {
            if i == 0 || i > self.rs.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rs.rank,
                });
            }
            w = self.right[w as usize][i - 1];
        }
        Ok(WeylElt {
            group: self.clone(),
            idx: w,
        })
    }

    /// Lexicographically minimal reduced word (0-based letters).
    pub fn reduced_word(&self, w: ElemIdx) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length[w as usize] as usize);
        let mut cur = w;
        while let Some(i) = self.first_left_descent(cur) {
            word.push(i);
            cur = self.left[cur as usize][i];
        }
        word
    }

    /// Reduced-word string with 1-based letters, e.g. `"s3*s2"`; `"e"` for
    /// the identity.
    pub fn word_string(&self, w: ElemIdx) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }

    fn zeta(&self) -> &Zeta {
        self.zeta.get_or_init(|| Zeta::build(self))
    }

    /// Bruhat order comparison `u <= v`.
    pub fn bruhat_leq(&self, u: ElemIdx, v: ElemIdx) -> bool {
        self.zeta().le(u, v)
    }

    /// The Bruhat interval `[u, v]` in dense-index order (length, then
    /// canonical form).
    pub fn interval(&self, u: ElemIdx, v: ElemIdx) -> Result<Vec<ElemIdx>, Error> {
        if !self.bruhat_leq(u, v) {
            return Err(Error::NotComparable);
        }
        let z = self.zeta();
        let (lu, lv) = (self.length[u as usize], self.length[v as usize]);
        Ok((0..self.size as ElemIdx)
            .filter(|&x| {
                let lx = self.length[x as usize];
                lu <= lx && lx <= lv && z.le(u, x) && z.le(x, v)
            })
            .collect())
    }

    /// All pairs `(u, v)` with `u <= v`, in dense order.
    pub fn comparable_pairs(&self) -> Vec<(ElemIdx, ElemIdx)> {
        let z = self.zeta();
        let mut out = Vec::new();
        for v in 0..self.size as ElemIdx {
            for u in 0..self.size as ElemIdx {
                if z.le(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All pairs with `u < v`.
    pub fn strict_pairs(&self) -> Vec<(ElemIdx, ElemIdx)> {
        self.comparable_pairs()
            .into_iter()
            .filter(|&(u, v)| u != v)
            .collect()
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeylGroup({}{}, |W|={})",
            self.rs.cartan_type, self.rs.rank, self.size
        )
    }
}

/// Dense bit matrix of the Bruhat order, row per `v`, bit per `u`.
struct Zeta {
    words: usize,
    bits: Vec<u64>,
}

impl Zeta {
    fn build(g: &WeylGroup) -> Zeta {
        let n = g.size;
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; words * n];
        bits[0] |= 1; // e <= e
        for v in 1..n as ElemIdx {
            let s = g
                .first_left_descent(v)
                .expect("non-identity element has a descent");
            let sv = g.left[v as usize][s];
            for u in 0..n as ElemIdx {
                if g.length[u as usize] > g.length[v as usize] {
                    continue;
                }
                let su = g.left[u as usize][s];
                let probe = if g.length[su as usize] < g.length[u as usize] {
                    su
                } else {
                    u
                };
                let set = bits[sv as usize * words + (probe / 64) as usize]
                    >> (probe % 64)
                    & 1;
                if set == 1 {
                    bits[v as usize * words + (u / 64) as usize] |= 1 << (u % 64);
                }
            }
        }
        Zeta { words, bits }
    }

    #[inline]
    fn le(&self, u: ElemIdx, v: ElemIdx) -> bool {
        self.bits[v as usize * self.words + (u / 64) as usize] >> (u % 64) & 1 == 1
    }
}

/// A group element handle carrying its group, for the user-facing API.
#[derive(Clone)]
pub struct WeylElt {
    pub group: Arc<WeylGroup>,
    pub idx: ElemIdx,
}

impl WeylElt {
    pub fn length(&self) -> u32 {
        self.group.length(self.idx)
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt {
            group: self.group.clone(),
            idx: self.group.inverse(self.idx),
        }
    }

    pub fn multiply(&self, other: &WeylElt) -> Result<WeylElt, Error> {
        if self.group.id() != other.group.id() {
            return Err(Error::MixedRootSystems);
        }
        Ok(WeylElt {
            group: self.group.clone(),
            idx: self.group.mul(self.idx, other.idx),
        })
    }

    pub fn bruhat_leq(&self, other: &WeylElt) -> Result<bool, Error> {
        if self.group.id() != other.group.id() {
            return Err(Error::MixedRootSystems);
        }
        Ok(self.group.bruhat_leq(self.idx, other.idx))
    }

    pub fn word(&self) -> Vec<usize> {
        self.group.reduced_word(self.idx).iter().map(|i| i + 1).collect()
    }
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.group.id() == other.group.id() && self.idx == other.idx
    }
}
impl Eq for WeylElt {}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group.word_string(self.idx))
    }
}

/// Parses `"s3*s2"` (or `"e"`) into 0-based letters.
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|part| {
            let part = part.trim();
            let digits = part.strip_prefix('s').unwrap_or(part);
            digits
                .parse::<usize>()
                .ok()
                .and_then(|i| i.checked_sub(1))
                .ok_or(Error::IndexOutOfRange { index: 0, rank: 0 })
        })
        .collect()
}
