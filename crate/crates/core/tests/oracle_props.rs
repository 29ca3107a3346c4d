mod support;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qimatch_core::oracle::{
    classical_match, dense_simulate_steps12, dense_simulate_steps12_with_cap,
    full_block_comparisons, measure_dense_marked, MatchMode,
};
use qimatch_core::{encode_gqir, validate_pair, Error, Image, JointState};
use support::instance;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dense_joint_and_scan_agree(inst in instance(2, 3)) {
        let (a, b) = inst.encode();
        let dense = dense_simulate_steps12(&a, &b).unwrap();
        let joint = JointState::prepare_initial(&a, &b).unwrap()
            .apply_u1().unwrap()
            .apply_u2().unwrap();
        let scan: BTreeSet<usize> = inst.anchor_scan().into_iter().collect();
        prop_assert_eq!(&measure_dense_marked(&dense), &scan);
        prop_assert_eq!(&joint.marked_set().unwrap(), &scan);
        prop_assert!((dense.norm_sqr() - 1.0).abs() < 1e-12);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        for br in joint.branches() {
            let lo = dense.amplitude_at(false, br.f, br.i_a, br.k_a, br.i_b, br.k_b);
            let hi = dense.amplitude_at(true, br.f, br.i_a, br.k_a, br.i_b, br.k_b);
            prop_assert!((lo - br.amplitude * h).abs() < 1e-12);
            prop_assert!((hi + br.amplitude * h).abs() < 1e-12);
        }
        let weight: f64 = dense.amplitudes().iter().map(|x| x * x).sum();
        let covered = 2.0 * joint.branches().len() as f64
            * (joint.branches()[0].amplitude * h).powi(2);
        prop_assert!((weight - covered).abs() < 1e-12);
    }

    #[test]
    fn full_block_is_subset_of_anchor(inst in instance(3, 2)) {
        let dims = inst.dims();
        let full = classical_match(&inst.big, &inst.small, MatchMode::FullBlock).unwrap();
        let anchor = classical_match(&inst.big, &inst.small, MatchMode::AnchorPixel).unwrap();
        for loc in &full.locations {
            prop_assert!(anchor.locations.contains(loc));
        }
        prop_assert_eq!(full.comparisons, full_block_comparisons(dims.n, dims.m));
        prop_assert_eq!(anchor.comparisons, 1u64 << (2 * dims.n));
    }
}

#[test]
fn two_bit_example_marks_position_two() {
    let big = Image::new(2, 2, 2, vec![1, 2, 3, 0]).unwrap();
    let small = Image::new(1, 1, 2, vec![3]).unwrap();
    let dims = validate_pair(&big, &small).unwrap();
    let a = encode_gqir(&big, &dims).unwrap();
    let b = encode_gqir(&small, &dims).unwrap();
    let dense = dense_simulate_steps12(&a, &b).unwrap();
    assert_eq!(measure_dense_marked(&dense), BTreeSet::from([2]));
    assert!(dense.max_norm_drift() < 1e-12);
}

#[test]
fn dense_respects_qubit_cap() {
    let big = Image::new(4, 4, 8, vec![0; 16]).unwrap();
    let small = Image::new(2, 2, 8, vec![0; 4]).unwrap();
    let dims = validate_pair(&big, &small).unwrap();
    let a = encode_gqir(&big, &dims).unwrap();
    let b = encode_gqir(&small, &dims).unwrap();
    // 2 + 2q + 2n + 2m = 24 qubits
    assert_eq!(
        dense_simulate_steps12_with_cap(&a, &b, 22).unwrap_err(),
        Error::QubitCapExceeded {
            required: 24,
            cap: 22
        }
    );
}
