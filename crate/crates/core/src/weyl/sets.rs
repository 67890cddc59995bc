//! The combinatorial root sets attached to a Bruhat pair:
//! S(u,v), S'(u,v), and AD(u,v) with its minimal elements.

use crate::error::Error;
use crate::weyl::group::{ElemIdx, WeylGroup};
use crate::weyl::root::RootVec;

/// `S(u,v) = { alpha in Phi+ : u <= v r_alpha < v }` as positive-root
/// indices, in root order.
pub fn s_set(g: &WeylGroup, u: ElemIdx, v: ElemIdx) -> Result<Vec<usize>, Error> {
    if !g.bruhat_leq(u, v) {
        return Err(Error::NotComparable);
    }
    let n = g.root_system().num_positive_roots();
    Ok((0..n)
        .filter(|&k| {
            // v r_alpha < v  iff  v(alpha) < 0
            g.image_of_root(v, k) < 0 && g.bruhat_leq(u, g.mul(v, g.reflection(k)))
        })
        .collect())
}

/// `S'(u,v) = { alpha in Phi+ : u < u r_alpha <= v }` as positive-root
/// indices.
pub fn s_prime_set(g: &WeylGroup, u: ElemIdx, v: ElemIdx) -> Result<Vec<usize>, Error> {
    if !g.bruhat_leq(u, v) {
        return Err(Error::NotComparable);
    }
    let n = g.root_system().num_positive_roots();
    Ok((0..n)
        .filter(|&k| {
            // u r_alpha > u  iff  u(alpha) > 0
            g.image_of_root(u, k) > 0 && g.bruhat_leq(g.mul(u, g.reflection(k)), v)
        })
        .collect())
}

/// Both sets as coordinate vectors.
pub fn s_sets(
    g: &WeylGroup,
    u: ElemIdx,
    v: ElemIdx,
) -> Result<(Vec<RootVec>, Vec<RootVec>), Error> {
    let rs = g.root_system();
    let s = s_set(g, u, v)?
        .into_iter()
        .map(|k| rs.positive_roots[k].clone())
        .collect();
    let sp = s_prime_set(g, u, v)?
        .into_iter()
        .map(|k| rs.positive_roots[k].clone())
        .collect();
    Ok((s, sp))
}

/// `AD(u,v) = { r_alpha : r_alpha u > u, r_alpha v < v }` as positive-root
/// indices, together with its minimal elements under the root order
/// (`alpha >= beta` iff `alpha - beta` has nonnegative coordinates).
pub fn ad_min(
    g: &WeylGroup,
    u: ElemIdx,
    v: ElemIdx,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    if u == v || !g.bruhat_leq(u, v) {
        return Err(Error::NotComparable);
    }
    let rs = g.root_system();
    let n = rs.num_positive_roots();
    let (ui, vi) = (g.inverse(u), g.inverse(v));
    // r_alpha w > w (left multiplication) iff w^{-1}(alpha) > 0
    let ad: Vec<usize> = (0..n)
        .filter(|&k| g.image_of_root(ui, k) > 0 && g.image_of_root(vi, k) < 0)
        .collect();
    let dominates = |a: &[i32], b: &[i32]| a.iter().zip(b).all(|(x, y)| x >= y);
    let minimal: Vec<usize> = ad
        .iter()
        .copied()
        .filter(|&k| {
            !ad.iter().any(|&j| {
                j != k && dominates(&rs.positive_roots[k], &rs.positive_roots[j])
            })
        })
        .collect();
    Ok((ad, minimal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::root::{CartanType, RootSystem};
    use std::sync::Arc;

    fn group(ct: CartanType, rank: usize) -> Arc<WeylGroup> {
        WeylGroup::build(RootSystem::new(ct, rank).unwrap())
    }

    #[test]
    fn s_set_examples() {
        let g = group(CartanType::A, 2);
        let s1 = g.from_word(&[0]).unwrap();
        assert!(s_set(&g, s1, s1).unwrap().is_empty());
        assert_eq!(s_set(&g, g.identity(), s1).unwrap(), vec![0]);
        // brute force over Phi+: every reflection lowers w0
        assert_eq!(s_set(&g, g.identity(), g.w0()).unwrap(), vec![0, 1, 2]);
        let s2 = g.from_word(&[1]).unwrap();
        assert_eq!(s_set(&g, s1, s2).unwrap_err(), Error::NotComparable);
    }

    #[test]
    fn s_prime_top_interval() {
        let g = group(CartanType::A, 2);
        assert_eq!(s_prime_set(&g, g.identity(), g.w0()).unwrap().len(), 3);
        let s1 = g.from_word(&[0]).unwrap();
        assert_eq!(s_prime_set(&g, g.identity(), s1).unwrap(), vec![0]);
    }

    #[test]
    fn cardinality_lower_bound() {
        for (ct, rank) in [(CartanType::A, 3), (CartanType::B, 2)] {
            let g = group(ct, rank);
            for (u, v) in g.comparable_pairs() {
                let gap = (g.length(v) - g.length(u)) as usize;
                assert!(s_set(&g, u, v).unwrap().len() >= gap);
                assert!(s_prime_set(&g, u, v).unwrap().len() >= gap);
            }
        }
    }

    #[test]
    fn ad_examples() {
        let g = group(CartanType::A, 3);
        let s1 = g.from_word(&[0]).unwrap();
        let (ad, min) = ad_min(&g, g.identity(), s1).unwrap();
        assert_eq!(ad, vec![0]);
        assert_eq!(min, vec![0]);
        assert_eq!(ad_min(&g, s1, s1).unwrap_err(), Error::NotComparable);

        // u = s1, v = s1 s2 s3 s2 s1: s1 s2 s1 = r_{alpha_1+alpha_2} is minimal
        let v = g.from_word(&[0, 1, 2, 1, 0]).unwrap();
        let (_, min) = ad_min(&g, s1, v).unwrap();
        let t = g.from_word(&[0, 1, 0]).unwrap();
        assert!(min
            .iter()
            .any(|&k| g.reflection(k) == t));
    }

    #[test]
    fn ad_minimal_elements_are_covers_simply_laced() {
        for (ct, rank) in [(CartanType::A, 3), (CartanType::D, 4)] {
            let g = group(ct, rank);
            for (u, v) in g.strict_pairs() {
                let (ad, min) = ad_min(&g, u, v).unwrap();
                assert!(!ad.is_empty());
                for &k in &min {
                    let t = g.reflection(k);
                    let (tu, tv) = (g.mul(t, u), g.mul(t, v));
                    assert_eq!(g.length(tu), g.length(u) + 1);
                    assert!(g.bruhat_leq(tu, v));
                    assert_eq!(g.length(tv) + 1, g.length(v));
                    assert!(g.bruhat_leq(u, tv));
                }
            }
        }
    }
}
