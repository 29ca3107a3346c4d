mod support;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qimatch_core::JointState;
use support::instance;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pipeline_invariants(inst in instance(3, 4)) {
        let (a, b) = inst.encode();
        let dims = inst.dims();
        let branch_count = 1usize << (2 * dims.n + 2 * dims.m);

        let s0 = JointState::prepare_initial(&a, &b).unwrap();
        let s1 = s0.clone().apply_u1().unwrap();
        let s2 = s1.clone().apply_u2().unwrap();
        for s in [&s0, &s1, &s2] {
            prop_assert_eq!(s.branches().len(), branch_count);
            prop_assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        }
        let amp = 1.0 / (1u64 << (dims.n + dims.m)) as f64;
        prop_assert!(s0.branches().iter().all(|b| b.amplitude == amp && !b.f));

        for ((b0, b1), b2) in s0.branches().iter().zip(s1.branches()).zip(s2.branches()) {
            // comparison only rewrites i_a, and is its own inverse
            prop_assert_eq!(b1.i_a, b0.i_a ^ b0.i_b);
            prop_assert_eq!(b1.i_a ^ b1.i_b, b0.i_a);
            prop_assert_eq!((b1.k_a, b1.i_b, b1.k_b, b1.f), (b0.k_a, b0.i_b, b0.k_b, b0.f));
            // marking only touches f, and only where both conditions hold
            prop_assert_eq!((b2.i_a, b2.k_a, b2.i_b, b2.k_b), (b1.i_a, b1.k_a, b1.i_b, b1.k_b));
            prop_assert_eq!(b2.amplitude, b1.amplitude);
            prop_assert_eq!(b2.f, b1.i_a == 0 && b1.k_b == 0);
        }

        let scan: BTreeSet<usize> = inst.anchor_scan().into_iter().collect();
        prop_assert_eq!(s2.marked_set().unwrap(), scan);
    }
}
