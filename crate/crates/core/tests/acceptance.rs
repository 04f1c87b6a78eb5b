//! Acceptance suite: every identity the library claims, exercised
//! exhaustively on the small-instance sweeps where desk-scale verification
//! is possible. All equalities are exact; there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use num_bigint::BigUint;
use weylchar::basisenum::{
    check_recursion, count_basis, count_basis_by_enumeration, count_v_basis, enum_basis,
};
use weylchar::charring::{
    character_from_basis, classical_character, fermionic_character, verify_demazure_factorization,
    verify_kostka, weyl_dim, KostkaReading,
};
use weylchar::fusion::{fusion_graded_character, point_independence, FusionSpec};
use weylchar::lattice::{weight_to_partition, DominantWeight};
use weylchar::qpoly::qbinom;

fn dom(coeffs: &[i64]) -> DominantWeight {
    DominantWeight::new(coeffs.to_vec()).unwrap()
}

fn all_weights(rank: usize, max_level: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; rank];
    loop {
        if coeffs.iter().sum::<i64>() <= max_level {
            out.push(DominantWeight::new(coeffs.clone()).unwrap());
        }
        let mut k = 0;
        loop {
            if k == rank {
                out.sort();
                return out;
            }
            coeffs[k] += 1;
            if coeffs[k] <= max_level {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// The sweep of criterion 1: rank <= 2 up to level 4, rank 3 up to level 3.
fn main_sweep() -> Vec<DominantWeight> {
    let mut sweep = Vec::new();
    for rank in 1..=3usize {
        let max_level = if rank <= 2 { 4 } else { 3 };
        sweep.extend(all_weights(rank, max_level));
    }
    sweep
}

/// Fundamental fusion configurations: all multisets for rank <= 2 with at
/// most three factors, plus rank-3 two-factor cases within ambient 36.
fn fusion_configs() -> Vec<FusionSpec> {
    let mut configs = Vec::new();
    let mut push = |rank: usize, indices: &[usize]| {
        configs.push(FusionSpec {
            rank,
            factors: indices
                .iter()
                .enumerate()
                .map(|(pos, &i)| (i, pos as i64))
                .collect(),
        });
    };
    for k in 1..=3usize {
        push(1, &vec![1; k]);
    }
    for k in 1..=3usize {
        // weakly increasing multisets over {1, 2} of size k
        let mut multiset = vec![1usize; k];
        loop {
            push(2, &multiset);
            let mut pos = k;
            while pos > 0 && multiset[pos - 1] == 2 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            let bumped = multiset[pos - 1] + 1;
            for v in multiset.iter_mut().skip(pos - 1) {
                *v = bumped;
            }
        }
    }
    push(3, &[1, 3]); // ambient 16
    push(3, &[2, 2]); // ambient 36
    configs
}

#[test]
fn criterion_01_dimension_product_formula() {
    for lambda in main_sweep() {
        let enumerated = count_basis_by_enumeration(&lambda, false);
        let closed = count_basis(&lambda);
        assert_eq!(
            enumerated, closed,
            "criterion 1: FAIL at rank {} weight {lambda}",
            lambda.rank()
        );
    }
    println!("criterion 1 (dimension product formula over the full sweep): PASS");
}

#[test]
fn criterion_02_sl2_base_case() {
    for n in 0..=12i64 {
        let lambda = dom(&[n]);
        let basis = enum_basis(&lambda);
        assert_eq!(
            basis.len() as u64,
            1u64 << n,
            "criterion 2: FAIL cardinality at n = {n}"
        );
        let ch = fermionic_character(&lambda);
        for l in 0..=n {
            let mu = weylchar::lattice::WeightVector::new(vec![n - 2 * l]);
            assert_eq!(
                ch.get(&mu),
                qbinom(n, l),
                "criterion 2: FAIL graded structure at n = {n}, l = {l}"
            );
        }
    }
    println!("criterion 2 (rank-1 base case, 2^n basis and Gaussian grading): PASS");
}

#[test]
fn criterion_03_fermionic_self_consistency() {
    for lambda in main_sweep() {
        assert_eq!(
            fermionic_character(&lambda),
            character_from_basis(&lambda, false),
            "criterion 3: FAIL at {lambda}"
        );
    }
    println!("criterion 3 (fermionic formula equals basis aggregation): PASS");
}

#[test]
fn criterion_04_grade_zero_slice_and_v_basis() {
    for lambda in main_sweep() {
        let ch = fermionic_character(&lambda);
        assert_eq!(
            ch.degree_slice(0),
            classical_character(&lambda),
            "criterion 4: FAIL slice at {lambda}"
        );
        assert_eq!(
            count_v_basis(&lambda),
            weyl_dim(&lambda),
            "criterion 4: FAIL exponent-array count at {lambda}"
        );
    }
    assert_eq!(count_v_basis(&dom(&[1, 1])), BigUint::from(8u32));
    println!("criterion 4 (grade-zero slice is the irreducible character; exponent arrays count dim V): PASS");
}

#[test]
fn criterion_05_demazure_factorization() {
    for lambda in main_sweep() {
        let rep = verify_demazure_factorization(&lambda);
        assert!(
            rep.pass,
            "criterion 5: FAIL at {lambda}: {:?}",
            rep.mismatch
        );
    }
    println!("criterion 5 (t = 1 character factors into fundamental tensor powers): PASS");
}

#[test]
fn criterion_06_kostka_decomposition() {
    let mut selected = None;
    for rank in 1..=2usize {
        for lambda in all_weights(rank, 3) {
            let rep = verify_kostka(&lambda);
            assert!(
                rep.pass(),
                "criterion 6: FAIL at {lambda}: no reading matches"
            );
            assert!(
                rep.leading_coefficient_is_one,
                "criterion 6: FAIL leading coefficient at {lambda}"
            );
            if lambda.level() > 0 {
                match selected {
                    None => selected = rep.selected,
                    Some(s) => assert_eq!(
                        Some(s),
                        rep.selected,
                        "criterion 6: FAIL inconsistent reading at {lambda}"
                    ),
                }
            }
        }
    }
    assert_eq!(selected, Some(KostkaReading::TransposedCharge));
    println!(
        "criterion 6 (Kostka decomposition under the resolved reading {:?}): PASS",
        selected.unwrap().name()
    );
}

#[test]
fn criterion_07_fusion_oracle_equality() {
    for spec in fusion_configs() {
        let outcome = fusion_graded_character(spec.build().unwrap(), 100).unwrap();
        let lambda = spec.lambda();
        assert_eq!(
            outcome.character,
            fermionic_character(&lambda),
            "criterion 7: FAIL at rank {} lambda {lambda}",
            spec.rank
        );
    }
    println!("criterion 7 (fusion oracle equals fermionic character on all fundamental configurations): PASS");
}

#[test]
fn criterion_08_point_independence() {
    for spec in fusion_configs() {
        let k = spec.factors.len();
        let alt: Vec<i64> = (0..k as i64).map(|t| -2 - 5 * t).collect();
        let rep = point_independence(spec.build().unwrap(), &alt, 100).unwrap();
        assert!(
            rep.pass,
            "criterion 8: FAIL at rank {} points {:?} vs {:?}",
            spec.rank,
            rep.points,
            rep.alt_points
        );
    }
    println!("criterion 8 (graded characters independent of the evaluation points): PASS");
}

#[test]
fn criterion_09_weyl_symmetry() {
    for lambda in main_sweep() {
        assert!(
            fermionic_character(&lambda).is_weyl_symmetric(),
            "criterion 9: FAIL at {lambda}"
        );
    }
    for spec in fusion_configs() {
        let outcome = fusion_graded_character(spec.build().unwrap(), 100).unwrap();
        assert!(
            outcome.character.is_weyl_symmetric(),
            "criterion 9: FAIL for fusion at rank {}",
            spec.rank
        );
    }
    println!("criterion 9 (every degree slice of every computed character is reflection-invariant): PASS");
}

#[test]
fn criterion_10_column_recursion() {
    for rank in 2..=3usize {
        for lambda in all_weights(rank, 3) {
            let rep = check_recursion(&lambda);
            assert!(
                rep.holds && rep.column_multiplicities_ok,
                "criterion 10: FAIL at {lambda}: {:?}",
                rep.counterexample
            );
        }
    }
    println!("criterion 10 (strip-last-column decomposition is a disjoint exhaustive cover): PASS");
}

#[test]
fn kostka_example_partitions_present() {
    // spot check: the decomposition of W(2w) for rank 1 is keyed by the
    // partitions (2) and (1,1) with coefficients 1 and t
    let rep = verify_kostka(&dom(&[2]));
    let xi_top = weight_to_partition(&dom(&[2])).normalized();
    let top = rep.decomposition.terms.get(&xi_top).unwrap();
    assert!(top.is_one());
    assert_eq!(rep.decomposition.terms.len(), 2);
    assert_eq!(rep.top_grade, 1);
}
