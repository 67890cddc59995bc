//! Property tests for the rational-function arithmetic.

use casselman::symbolics::{QZLaurent, RatFn};
use proptest::prelude::*;

fn arb_laurent() -> impl Strategy<Value = QZLaurent> {
    prop::collection::vec(
        ((-3i32..=3), (-2i32..=2), (-2i32..=2), (-5i128..=5)),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = QZLaurent::zero(2);
        for (qe, z1, z2, c) in terms {
            p.add_term(vec![qe, z1, z2], c);
        }
        p
    })
}

fn arb_ratfn() -> impl Strategy<Value = RatFn> {
    let den = prop::collection::btree_map(
        prop::sample::select(vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        1u32..=2,
        0..3,
    );
    (arb_laurent(), den).prop_map(|(num, den)| RatFn::new(num, den))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributivity(a in arb_ratfn(), b in arb_ratfn(), c in arb_ratfn()) {
        let lhs = a.add(&b).mul(&c);
        let rhs = a.mul(&c).add(&b.mul(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn add_commutes_and_associates(a in arb_ratfn(), b in arb_ratfn(), c in arb_ratfn()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn involutions_commute(a in arb_ratfn()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.invert_z().invert_z(), a.clone());
        prop_assert_eq!(a.bar().invert_z(), a.invert_z().bar());
    }

    #[test]
    fn reduce_is_idempotent_and_neutral(a in arb_ratfn()) {
        let r = a.reduce();
        prop_assert_eq!(r.clone(), a.clone());
        prop_assert_eq!(r.reduce(), r);
    }

    #[test]
    fn serde_round_trip(a in arb_ratfn()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: RatFn = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
