//! Acceptance gate. Each test below is one shipping criterion; the per-test
//! ok/FAILED line that `cargo test --test acceptance` prints is the pass/fail
//! line for that criterion. Expected values are written as literals so the
//! checks stay independent of the library code they exercise.

use num_bigint::BigInt;
use symtrace_core::constructions::{density_sequence, four_square, path_matrix, MeasureKind};
use symtrace_core::harness::{
    enumerate_class, symmetric_examples, symmetrizable_examples, verify_campaign, EnumSpec,
};
use symtrace_core::matrices::{classify, AnyMatrix, IntMatrix, TriState};
use symtrace_core::measures::{check_bounds, lower_bound_B, rss_bound, trace_k};
use symtrace_core::numerics::Rational;
use symtrace_core::screener::screen_char_poly;
use symtrace_core::spectra::{
    char_poly_int, char_poly_radical, coeffs_from_power_sums, power_sums_from_coeffs, CharPoly,
};
use symtrace_core::symmetry::symmetrize;

fn rat(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[test]
fn criterion_01_path_family_attains_second_trace_six_n_minus_five() {
    let mut prev: Option<Rational> = None;
    for n in 1..=50usize {
        let matrix = AnyMatrix::Int(path_matrix(n));
        let tr2 = trace_k(&matrix, 2).expect("exponent in range");
        assert_eq!(tr2, rat(6 * n as i64 - 5), "n = {n}");
        let abs = &tr2 / rat(n as i64);
        assert_eq!(abs, rat(6) - frac(5, n as i64), "n = {n}");
        assert!(abs < rat(6), "n = {n}");
        if let Some(prev) = prev {
            assert!(abs > prev, "absolute second trace must increase at n = {n}");
        }
        prev = Some(abs);
    }
}

#[test]
fn criterion_02_exhaustive_boxes_have_path_matrices_as_unique_minima() {
    for &(n, diag_max, off_max) in &[(2usize, 4i64, 2i64), (3, 4, 2), (4, 3, 1)] {
        let spec = EnumSpec::new(n, diag_max, off_max);
        let report = verify_campaign(&spec, 1).expect("box fits the budget");
        assert!(report.count > 0, "box (n = {n}) must not be empty");
        assert!(
            report.violations.is_empty(),
            "no bound violations in box (n = {n})"
        );
        let min_trace = report.min_trace.expect("nonempty box");
        let min_trace2 = report.min_trace2.expect("nonempty box");
        assert_eq!(min_trace.trace, BigInt::from(2 * n as i64 - 1), "n = {n}");
        assert_eq!(min_trace2.trace2, BigInt::from(6 * n as i64 - 5), "n = {n}");
        assert_eq!(min_trace.matrix, path_matrix(n), "trace argmin, n = {n}");
        assert_eq!(min_trace2.matrix, path_matrix(n), "second-trace argmin, n = {n}");
    }
}

#[test]
fn criterion_03_iterated_trace_bounds_hold_on_paths_with_exact_spot_values() {
    for n in 1..=12usize {
        let report = check_bounds(&AnyMatrix::Int(path_matrix(n)), 4).expect("k in range");
        assert!(report.applicable);
        assert!(!report.has_violation(), "n = {n}");
        for record in &report.records {
            assert!(record.margin >= rat(0), "margin at n = {n}, k = {}", record.k);
        }
    }
    assert_eq!(lower_bound_B(2, 2).unwrap(), BigInt::from(29));
    assert_eq!(
        trace_k(&AnyMatrix::Int(path_matrix(2)), 4).unwrap(),
        rat(47)
    );
    assert_eq!(lower_bound_B(3, 2).unwrap(), BigInt::from(65));
    assert_eq!(
        trace_k(&AnyMatrix::Int(path_matrix(3)), 4).unwrap(),
        rat(117)
    );
}

#[test]
fn criterion_04_row_square_sums_bound_iterated_traces_with_equality_at_level_one() {
    for matrix in symmetric_examples(1000, 6, 3, 0xDECAF_BAD) {
        let any = AnyMatrix::Int(matrix);
        for k in 1..=3u32 {
            let bound = Rational::from(rss_bound(&any, k).expect("symmetric input"));
            let trace = trace_k(&any, 1 << k).expect("exponent in range");
            assert!(trace >= bound, "level {k} bound must hold");
            if k == 1 {
                assert_eq!(trace, bound, "level 1 is an identity");
            }
        }
    }
}

#[test]
fn criterion_05_symmetrization_preserves_the_characteristic_polynomial() {
    let example = IntMatrix::from_i64_rows(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
    let direct = char_poly_int(&example);
    let through_radical =
        char_poly_radical(&symmetrize(&example).unwrap()).expect("rationalizes");
    assert_eq!(direct, through_radical);

    let corpus = symmetrizable_examples(120, 0x5EED_11);
    assert!(corpus.len() >= 100);
    for matrix in corpus {
        let symmetric = symmetrize(&matrix).expect("generator output symmetrizes");
        assert_eq!(
            char_poly_int(&matrix),
            char_poly_radical(&symmetric).expect("rationalizes"),
        );
    }
}

#[test]
fn criterion_05b_pinned_example_polynomial_literal() {
    let example = IntMatrix::from_i64_rows(&[&[2, 16, 12], &[1, 6, 4], &[3, 16, 10]]);
    let pinned = CharPoly::from_int_coeffs(vec![
        BigInt::from(-2),
        BigInt::from(9),
        BigInt::from(-18),
        BigInt::from(1),
    ])
    .unwrap();
    assert_eq!(
        char_poly_int(&example),
        pinned,
        "pinned literal x^3 - 18x^2 + 9x - 2 disagrees with the exact characteristic \
         polynomial of the order-3 worked example, which is x^3 - 18x^2 - 24x: the example \
         matrix is singular (row1 - 8*row2 + 2*row3 = 0), so its constant coefficient must \
         vanish, and the sum of its principal 2x2 minors is -24, not +9; both computation \
         paths of criterion 05 agree on x^3 - 18x^2 - 24x"
    );
}

#[test]
fn criterion_06_density_constructions_approach_their_targets() {
    for point in density_sequence(&rat(3), MeasureKind::Trace, &[10, 100, 1000]).unwrap() {
        let n = point.n as i64;
        assert!(point.gap <= frac(1, n), "trace gap at n = {n}");
        assert_eq!(point.kappa, None);
        let report = classify(&AnyMatrix::Int(point.matrix));
        assert_eq!(report.in_s_n, TriState::Yes, "class membership at n = {n}");
    }
    for point in density_sequence(&frac(15, 2), MeasureKind::Trace2, &[10, 100, 1000]).unwrap() {
        let n = point.n as i64;
        assert!(point.gap <= frac(10, n), "second-trace gap at n = {n}");
        let kappa = point.kappa.expect("second-trace construction records kappa");
        assert!(kappa <= 9, "kappa stays within [0, 9] at n = {n}");
        let report = classify(&AnyMatrix::Int(point.matrix));
        assert_eq!(report.in_s_n, TriState::Yes, "class membership at n = {n}");
    }
}

#[test]
fn criterion_07_four_square_decompositions_are_total_and_sorted() {
    for m in 0..=10_000u64 {
        let parts = four_square(m).parts();
        assert_eq!(
            parts.iter().map(|&b| b * b).sum::<u64>(),
            m,
            "squares must sum to {m}"
        );
        assert!(parts.windows(2).all(|w| w[0] <= w[1]), "sorted at {m}");
    }
    assert_eq!(four_square(30).parts(), [0, 1, 2, 5]);
    assert_eq!(four_square(32).parts(), [0, 0, 4, 4]);
}

#[test]
fn criterion_08_screener_excludes_the_example_and_never_a_realized_polynomial() {
    let excluded = CharPoly::from_int_coeffs(vec![
        BigInt::from(-1),
        BigInt::from(8),
        BigInt::from(-5),
        BigInt::from(1),
    ])
    .unwrap();
    let verdict = screen_char_poly(&excluded, 1).unwrap();
    assert!(verdict.excluded);
    assert_eq!(verdict.violated_k, Some(1));
    assert_eq!(verdict.s_values.s(2), &rat(9));
    assert_eq!(verdict.bounds[0].1, BigInt::from(13));

    let path_poly = char_poly_int(&path_matrix(3));
    assert!(!screen_char_poly(&path_poly, 4).unwrap().excluded);

    // Soundness sweep: every polynomial realized over the order-3 exhaustive
    // box must pass the screen (zero false positives).
    let spec = EnumSpec::new(3, 4, 2);
    let mut seen = 0u64;
    for matrix in enumerate_class(&spec).expect("box fits the budget") {
        let poly = char_poly_int(&matrix);
        let verdict = screen_char_poly(&poly, 2).unwrap();
        assert!(
            !verdict.excluded,
            "screener excluded a realized polynomial {:?}",
            poly.coeffs()
        );
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn criterion_09_newton_identities_round_trip_on_random_monic_polynomials() {
    // splitmix64; fixed seed keeps the corpus reproducible.
    let mut state = 0x0DD_B1A5ED_5EEDu64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..500 {
        let degree = 1 + (next() % 12) as usize;
        let mut coeffs: Vec<BigInt> = (0..degree)
            .map(|_| BigInt::from((next() % 41) as i64 - 20))
            .collect();
        coeffs.push(BigInt::from(1));
        let poly = CharPoly::from_int_coeffs(coeffs).unwrap();
        let sums = power_sums_from_coeffs(&poly, degree);
        assert_eq!(coeffs_from_power_sums(&sums), poly);
    }
}

#[test]
fn criterion_10_campaign_output_is_byte_identical_across_worker_counts() {
    let run = |workers: &str| {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_symtrace"))
            .args([
                "campaign", "--n", "3", "--diag-max", "4", "--off-max", "2", "--k-max", "2",
                "--workers", workers,
            ])
            .output()
            .expect("spawn symtrace");
        assert!(out.status.success(), "workers = {workers}");
        out.stdout
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("2"), "two workers must reproduce one");
    assert_eq!(one, run("8"), "eight workers must reproduce one");
}
