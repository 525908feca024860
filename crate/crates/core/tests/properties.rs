//! Property tests: algebraic identities of the shift engine, agreement of
//! the two independent shift algorithms, and agreement of the mode scanner
//! with a brute-force oracle that enumerates the chain definition directly.

use proptest::prelude::*;

use num::{One, Zero};
use shiftmodes::rational::{int, rat, Rational};
use shiftmodes::sequence::{analyze, CoeffSeq};
use shiftmodes::shift::{difference_identity, horner_shift, q_coeffs, q_difference, shift};
use shiftmodes::{m_bar, m_under, ClaimId};

/// Brute-force chain oracle: every index `t` whose full rise/fall chain
/// condition holds. Independent of the scanner under test.
fn chain_modes(seq: &[Rational]) -> Vec<usize> {
    (0..seq.len())
        .filter(|&t| {
            (1..=t).all(|i| seq[i - 1] <= seq[i])
                && (t + 1..seq.len()).all(|i| seq[i - 1] >= seq[i])
        })
        .collect()
}

/// Brute-force shift oracle: expand `sum a_i (x + d)^i` with nothing but
/// linear multiplications, entirely bypassing both shift algorithms.
fn brute_shift(a: &CoeffSeq, d: &Rational) -> Vec<Rational> {
    let m = a.degree();
    let mut acc = vec![Rational::zero(); m + 1];
    let mut power = CoeffSeq::from_integers(&[1]).unwrap(); // (x+d)^0
    for i in 0..=m {
        if i > 0 {
            power = power.multiply_by_linear(d).unwrap();
        }
        for (j, c) in power.coeffs().iter().enumerate() {
            acc[j] += &a.coeffs()[i] * c;
        }
    }
    acc
}

fn coeff() -> impl Strategy<Value = Rational> {
    (0i64..=24, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn shift_param() -> impl Strategy<Value = Rational> {
    (1i64..=2000, 1i64..=2000).prop_map(|(n, d)| rat(n, d))
}

/// Nonnegative non-decreasing polynomial of degree 1..=max_m.
fn nondecreasing_poly(max_m: usize) -> impl Strategy<Value = CoeffSeq> {
    proptest::collection::vec(coeff(), 2..=max_m + 1).prop_map(|steps| {
        let mut acc = Rational::zero();
        let mut coeffs: Vec<Rational> = steps
            .into_iter()
            .map(|s| {
                acc += s;
                acc.clone()
            })
            .collect();
        let last = coeffs.last_mut().unwrap();
        if last.is_zero() {
            *last = Rational::one();
        }
        CoeffSeq::new(coeffs).unwrap()
    })
}

/// Nonnegative polynomial (no monotonicity) of degree 1..=max_m.
fn nonneg_poly(max_m: usize) -> impl Strategy<Value = CoeffSeq> {
    proptest::collection::vec(coeff(), 2..=max_m + 1).prop_map(|mut coeffs| {
        let last = coeffs.last_mut().unwrap();
        if last.is_zero() {
            *last = Rational::one();
        }
        CoeffSeq::new(coeffs).unwrap()
    })
}

/// Unimodal polynomial with positive entries: sorted values ascending to a
/// random peak position, then descending.
fn unimodal_poly(max_m: usize) -> impl Strategy<Value = CoeffSeq> {
    (
        proptest::collection::vec((1i64..=24, 1i64..=8).prop_map(|(n, d)| rat(n, d)), 2..=max_m + 1),
        any::<proptest::sample::Index>(),
    )
        .prop_map(|(mut values, peak_at)| {
            values.sort();
            let peak = values.pop().unwrap();
            let t = peak_at.index(values.len() + 1);
            let mut out = values[..t].to_vec();
            out.push(peak);
            let mut right = values[t..].to_vec();
            right.reverse();
            out.extend(right);
            CoeffSeq::new(out).unwrap()
        })
}

/// Sequences over the alphabet {0, 1, 2, 3}, any shape.
fn small_alphabet_seq() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((0i64..=3).prop_map(int), 1..=13)
}

proptest! {
    #[test]
    fn shift_algorithms_agree(a in nondecreasing_poly(24), d in shift_param()) {
        prop_assert_eq!(shift(&a, &d).unwrap(), horner_shift(&a, &d).unwrap());
    }

    #[test]
    fn shift_agrees_with_linear_expansion(a in nonneg_poly(10), d in shift_param()) {
        let b = shift(&a, &d).unwrap();
        prop_assert_eq!(b.coeffs(), &brute_shift(&a, &d)[..]);
    }

    #[test]
    fn shift_composes_additively(
        a in nondecreasing_poly(12),
        d1 in shift_param(),
        d2 in shift_param(),
    ) {
        let once = shift(&shift(&a, &d1).unwrap(), &d2).unwrap();
        let both = shift(&a, &(d1 + d2)).unwrap();
        prop_assert_eq!(once, both);
    }

    #[test]
    fn shift_preserves_leading_and_evaluation(
        a in nonneg_poly(12),
        d in shift_param(),
        x_num in -20i64..=20,
        x_den in 1i64..=6,
    ) {
        let b = shift(&a, &d).unwrap();
        prop_assert_eq!(b.leading(), a.leading());
        let x = rat(x_num, x_den);
        prop_assert_eq!(b.evaluate(&x), a.evaluate(&(x.clone() + &d)));
    }

    #[test]
    fn difference_identity_matches_direct_differences(
        a in nonneg_poly(12),
        d in shift_param(),
    ) {
        let m = a.degree();
        let b = shift(&a, &d).unwrap();
        for j in 0..m {
            let closed = difference_identity(&a, &d, j).unwrap();
            let direct = (&b[j + 1] - &b[j]) * int(j as i64 + 1) * d.pow(j as i32 + 1);
            prop_assert_eq!(closed, direct, "j = {}", j);
        }
    }

    #[test]
    fn q_difference_matches_direct_differences(m in 1usize..=24, d in shift_param()) {
        let q = q_coeffs(m, &d).unwrap();
        for j in 1..=m {
            prop_assert_eq!(q_difference(m, &d, j).unwrap(), &q[j] - &q[j - 1], "j = {}", j);
        }
        prop_assert_eq!(q_coeffs(m, &d).unwrap(), shift(&CoeffSeq::all_ones(m), &d).unwrap());
    }

    #[test]
    fn scanner_agrees_with_chain_oracle(seq in small_alphabet_seq()) {
        let analysis = analyze(&seq).unwrap();
        let oracle = chain_modes(&seq);
        prop_assert_eq!(analysis.is_unimodal, !oracle.is_empty());
        match analysis.mode_set {
            Some(iv) => {
                let got: Vec<usize> = iv.iter().collect();
                prop_assert_eq!(got, oracle);
            }
            None => prop_assert!(oracle.is_empty()),
        }
    }

    #[test]
    fn mode_set_is_the_contiguous_argmax_plateau(seq in small_alphabet_seq()) {
        let analysis = analyze(&seq).unwrap();
        if let Some(iv) = analysis.mode_set {
            let max = seq.iter().max().unwrap();
            let argmax: Vec<usize> =
                (0..seq.len()).filter(|&i| &seq[i] == max).collect();
            let got: Vec<usize> = iv.iter().collect();
            prop_assert_eq!(got, argmax);
        }
    }

    #[test]
    fn log_concave_without_internal_zeros_implies_unimodal(seq in small_alphabet_seq()) {
        let analysis = analyze(&seq).unwrap();
        if analysis.is_log_concave && !analysis.has_internal_zeros {
            prop_assert!(analysis.is_unimodal);
        }
    }

    #[test]
    fn linear_factor_moves_smallest_mode_by_at_most_one(
        f in unimodal_poly(16),
        d in shift_param(),
    ) {
        let t = f.analyze().min_mode().expect("construction is unimodal");
        let g = f.multiply_by_linear(&d).unwrap();
        let ga = g.analyze();
        prop_assert!(ga.is_unimodal, "product {} not unimodal", g);
        let s = ga.min_mode().unwrap();
        prop_assert!(s == t || s == t + 1, "smallest mode moved {} -> {}", t, s);
    }

    #[test]
    fn shifted_nondecreasing_sequences_are_unimodal(
        a in nondecreasing_poly(20),
        d in shift_param(),
    ) {
        let b = shift(&a, &d).unwrap();
        prop_assert!(b.analyze().is_unimodal, "{} not unimodal", b);
    }

    #[test]
    fn anchors_coincide_for_integer_shifts(m in 1usize..=60, d in 1i64..=70) {
        let d = int(d);
        prop_assert_eq!(m_bar(m, &d).unwrap(), m_under(m, &d).unwrap());
    }

    #[test]
    fn anchor_inequality_holds(m in 1usize..=60, d in shift_param()) {
        prop_assert!(shiftmodes::check_basic_inequality(m, &d).unwrap());
    }
}

#[test]
fn claim_catalog_is_complete_and_unique() {
    use std::collections::HashSet;
    let names: HashSet<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
    assert_eq!(names.len(), ClaimId::ALL.len());
    for c in ClaimId::ALL {
        assert!(!c.description().is_empty());
    }
}
