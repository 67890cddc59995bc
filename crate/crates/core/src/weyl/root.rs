//! Finite crystallographic root systems in the simple-root basis.
//!
//! Roots are stored as integer coordinate vectors with respect to the simple
//! roots, so every positive root has all coordinates >= 0 and every root is
//! either all-nonnegative or all-nonpositive. The Cartan matrix follows the
//! Bourbaki numbering; entry `a[i][j] = <alpha_j, alpha_i^vee>`, so the
//! simple reflection acts by `s_i(alpha_j) = alpha_j - a[i][j] alpha_i`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Maximum supported rank. Group enumeration is factorial in the rank, so
/// anything larger needs a different representation.
pub const MAX_RANK: usize = 8;

/// Integer coordinate vector in the simple-root basis.
pub type RootVec = Vec<i32>;

/// Signed index of a root: `k+1` for the k-th positive root, `-(k+1)` for
/// its negative.
pub type SignedRoot = i32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn parse(s: &str) -> Result<CartanType, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A => write!(f, "A"),
            CartanType::B => write!(f, "B"),
            CartanType::C => write!(f, "C"),
            CartanType::D => write!(f, "D"),
        }
    }
}

/// A finite root system: Cartan datum, the positive roots, and the action of
/// each simple reflection on them.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i32>>,
    /// Positive roots in (height, lex) order; the first `rank` entries are
    /// the simple roots alpha_1..alpha_rank.
    pub positive_roots: Vec<RootVec>,
    /// `reflection[i][k]` = signed index of `s_i(beta_k)` for positive beta_k.
    reflection: Vec<Vec<SignedRoot>>,
    index_of: HashMap<RootVec, usize>,
}

fn cartan_matrix(ct: CartanType, rank: usize) -> Result<Vec<Vec<i32>>, Error> {
    let unsupported = || Error::UnsupportedType(format!("{ct}{rank}"));
    let min_rank = match ct {
        CartanType::A => 1,
        CartanType::B | CartanType::C => 2,
        CartanType::D => 3,
    };
    if rank < min_rank || rank > MAX_RANK {
        return Err(unsupported());
    }
    let mut a = vec![vec![0i32; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
        if i + 1 < rank {
            row[i + 1] = -1;
        }
        if i > 0 {
            row[i - 1] = -1;
        }
    }
    match ct {
        CartanType::A => {}
        // Bourbaki: alpha_rank is the short root in type B.
        CartanType::B => a[rank - 1][rank - 2] = -2,
        CartanType::C => a[rank - 2][rank - 1] = -2,
        CartanType::D => {
            a[rank - 1][rank - 2] = 0;
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 3] = -1;
            a[rank - 3][rank - 1] = -1;
        }
    }
    Ok(a)
}

impl RootSystem {
    /// Builds the validated root system for the given type and rank.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<RootSystem, Error> {
        let cartan = cartan_matrix(cartan_type, rank)?;

        // Close the simple roots under all simple reflections, keeping the
        // positive ones. Sort by (height, lex) so indexing is deterministic
        // and the simple roots come first.
        let mut roots: Vec<RootVec> = Vec::new();
        for i in 0..rank {
            let mut alpha = vec![0i32; rank];
            alpha[i] = 1;
            roots.push(alpha);
        }
        let mut seen: HashMap<RootVec, ()> = roots.iter().cloned().map(|r| (r, ())).collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..rank {
                    let image = reflect_simple(&cartan, i, beta);
                    if image.iter().all(|&c| c >= 0) && !seen.contains_key(&image) {
                        seen.insert(image.clone(), ());
                        roots.push(image.clone());
                        next.push(image);
                    }
                }
            }
            frontier = next;
        }
        // (height, reversed-lex) puts the simple roots first as alpha_1..alpha_rank.
        roots.sort_by_key(|r| {
            let mut rev = r.clone();
            rev.reverse();
            (r.iter().map(|&c| c as i64).sum::<i64>(), rev)
        });
        for (i, r) in roots.iter().take(rank).enumerate() {
            debug_assert!(r[i] == 1 && RootSystem::height(r) == 1);
        }

        let expected = match cartan_type {
            CartanType::A => rank * (rank + 1) / 2,
            CartanType::B | CartanType::C => rank * rank,
            CartanType::D => rank * (rank - 1),
        };
        assert_eq!(
            roots.len(),
            expected,
            "positive root count mismatch for {cartan_type}{rank}"
        );

        let index_of: HashMap<RootVec, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();

        let mut reflection = vec![vec![0; roots.len()]; rank];
        for i in 0..rank {
            for (k, beta) in roots.iter().enumerate() {
                let image = reflect_simple(&cartan, i, beta);
                reflection[i][k] = signed_index(&index_of, &image);
            }
        }

        Ok(RootSystem {
            cartan_type,
            rank,
            cartan,
            positive_roots: roots,
            reflection,
            index_of,
        })
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan_type.is_simply_laced()
    }

    /// Signed index of `s_i(root)` where `root` is a signed index.
    pub fn reflect_signed(&self, i: usize, root: SignedRoot) -> SignedRoot {
        if root > 0 {
            self.reflection[i][(root - 1) as usize]
        } else {
            -self.reflection[i][(-root - 1) as usize]
        }
    }

    /// Coordinate vector of a signed root index.
    pub fn root_vec(&self, root: SignedRoot) -> RootVec {
        if root > 0 {
            self.positive_roots[(root - 1) as usize].clone()
        } else {
            self.positive_roots[(-root - 1) as usize]
                .iter()
                .map(|&c| -c)
                .collect()
        }
    }

    /// Signed index of a coordinate vector, if it is a root.
    pub fn index_of_vec(&self, v: &[i32]) -> Option<SignedRoot> {
        if let Some(&k) = self.index_of.get(v) {
            return Some(k as SignedRoot + 1);
        }
        let neg: RootVec = v.iter().map(|&c| -c).collect();
        self.index_of.get(&neg).map(|&k| -(k as SignedRoot + 1))
    }

    /// Height of a root vector: the sum of its coordinates.
    pub fn height(v: &[i32]) -> i64 {
        v.iter().map(|&c| c as i64).sum()
    }
}

fn reflect_simple(cartan: &[Vec<i32>], i: usize, v: &[i32]) -> RootVec {
    // s_i(v) = v - <v, alpha_i^vee> alpha_i
    let pairing: i32 = v.iter().zip(&cartan[i]).map(|(&c, &a)| c * a).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

fn signed_index(index_of: &HashMap<RootVec, usize>, v: &RootVec) -> SignedRoot {
    if let Some(&k) = index_of.get(v) {
        return k as SignedRoot + 1;
    }
    let neg: RootVec = v.iter().map(|&c| -c).collect();
    let k = index_of[&neg];
    -(k as SignedRoot + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(rs.positive_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn a4_has_ten_positive_roots() {
        let rs = RootSystem::new(CartanType::A, 4).unwrap();
        assert_eq!(rs.num_positive_roots(), 10);
    }

    #[test]
    fn b2_positive_roots() {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        assert_eq!(rs.num_positive_roots(), 4);
        assert!(rs.positive_roots.contains(&vec![1, 2]));
        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        assert!(c2.positive_roots.contains(&vec![2, 1]));
    }

    #[test]
    fn d4_count() {
        let rs = RootSystem::new(CartanType::D, 4).unwrap();
        assert_eq!(rs.num_positive_roots(), 12);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(RootSystem::new(CartanType::D, 2).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::new(CartanType::A, 9).is_err());
    }

    #[test]
    fn simple_reflection_permutes_other_positives() {
        for (ct, rank) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::D, 4)] {
            let rs = RootSystem::new(ct, rank).unwrap();
            for i in 0..rank {
                let mut negatives = 0;
                for k in 0..rs.num_positive_roots() {
                    let image = rs.reflection[i][k];
                    if image < 0 {
                        negatives += 1;
                        assert_eq!((-image - 1) as usize, i, "s_i only negates alpha_i");
                    }
                }
                assert_eq!(negatives, 1);
            }
        }
    }
}
