//! The acceptance gate: ten numbered criteria, one test per criterion, each
//! ending in a single `criterion NN: PASS` line (visible with --nocapture).
//! Stated runtime budgets are asserted inside the tests that carry one.
//!
//! Criterion 08 is an expected red: the 1% target for the momentum moment at
//! alpha = 2.5 sits half a unit from the validity-window edge, so the
//! deviation decays like n^(-1/2) and has not reached 1% by n = 500. The
//! test asserts the target as stated and the failure message carries the
//! measured decay; relaxing the tolerance would hide a real convergence rate.

use std::time::Instant;

use num_bigint::BigInt;

use hydromoments::entropy::{
    bound_renyi_upper, bound_shannon_upper, bound_tsallis_lower, entropy_quadrature, EntropyKind,
    MomentSign,
};
use hydromoments::hydrogenic::{
    momentum_expectation, position_closed_forms, position_expectation,
    position_expectation_rational,
};
use hydromoments::largedim::{
    fk_direct_rational, fk_prop1_rational, momentum_large_d, momentum_large_d_refined,
    pochhammer_shift_identity, position_large_d, position_large_d_refined,
};
use hydromoments::oracle::{
    quad_momentum_moment, quad_position_moment, rational_replay, Integrand, ReplayExpression,
};
use hydromoments::rydberg::{
    equilibrium_momentum, equilibrium_position, euler_f1_integral, limiting_integrals,
    mom_rydberg_fixed_d, pos_rydberg_fixed_d, position_moment_closed, RatioLambda,
};
use hydromoments::specfun::appell_f1;
use hydromoments::uncertainty::{
    check_heisenberg_bound, log_uncertainty_margins, product22_closed_rational,
};
use hydromoments::verify::{run_suite, Status, Suite};
use hydromoments::{rel_dev, Error, HydrogenicState, Rational, Space};

fn state(n: u32, l: u32, d: u32, z: f64) -> HydrogenicState {
    HydrogenicState::new(n, l, d, z).unwrap()
}

fn big(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn fmt_seq(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:.3e}")).collect();
    format!("[{}]", parts.join(", "))
}

fn suite_status(suite: Suite, id: &str) -> Status {
    run_suite(suite)
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("check {id} missing from its suite"))
        .status
}

/// Criterion 01: the printed exact momentum column at (n = 2, l = 0, Z = 1)
/// is reproduced to relative 5e-6, and the printed asymptotic momentum
/// column consists of exact decimals of the product formula. Budget: < 1 s.
#[test]
fn criterion_01_momentum_table_reproduction() {
    let clock = Instant::now();

    let exact_cells: [(u32, f64, f64); 9] = [
        (50, 1.0, 0.0380789),
        (250, 1.0, 0.00792065),
        (500, 1.0, 0.00398008),
        (50, 2.0, 0.00153787),
        (250, 2.0, 0.0000634911),
        (500, 2.0, 0.0000159362),
        (50, -1.0, 27.7927),
        (250, -1.0, 127.758),
        (500, -1.0, 252.754),
    ];
    for (d, alpha, printed) in exact_cells {
        let v = momentum_expectation(&state(2, 0, d, 1.0), alpha).unwrap().value;
        let dev = rel_dev(v, printed);
        assert!(
            dev <= 5e-6,
            "exact momentum cell D = {d}, alpha = {alpha}: computed {v:.12e} vs printed {printed} (rel {dev:.3e})"
        );
    }

    // The asymptotic column is exact decimal arithmetic of
    // (2Z/D)^alpha (1 + alpha(alpha-2)(2n-2l-1)/(2D)); only float parse and
    // evaluation rounding separate the printed numbers from the formula.
    let asymp_cells: [(u32, f64, f64); 9] = [
        (50, 1.0, 0.0388),
        (250, 1.0, 0.007952),
        (500, 1.0, 0.003988),
        (50, 2.0, 0.0016),
        (250, 2.0, 0.000064),
        (500, 2.0, 0.000016),
        (50, -1.0, 27.25),
        (250, -1.0, 127.25),
        (500, -1.0, 252.25),
    ];
    for (d, alpha, printed) in asymp_cells {
        let v = momentum_large_d(&state(2, 0, d, 1.0), alpha).unwrap().value;
        let dev = rel_dev(v, printed);
        assert!(
            dev <= 1e-12,
            "asymptotic momentum cell D = {d}, alpha = {alpha}: formula gives {v:.16e}, printed {printed} (rel {dev:.3e})"
        );
    }

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "budget: took {elapsed:?}, required < 1 s");
    println!("criterion 01: PASS — 9 exact momentum cells within 5e-6, 9 asymptotic cells exact, {elapsed:?}");
}

/// Criterion 02: the printed asymptotic position column is reproduced to its
/// printed precision; the exact position column is computed through three
/// independent routes agreeing to 1e-9 (terminating series, closed form,
/// quadrature), and its divergence from the printed exact column (612.5
/// against the computed 687.5, and so on) is reported as a WARN by the
/// verification harness rather than silently matched.
#[test]
fn criterion_02_position_table_reproduction() {
    // (D, alpha, printed asymptotic value, printed significant digits)
    let asymp_cells: [(u32, f64, f64, i32); 9] = [
        (50, 1.0, 686.0, 3),
        (250, 1.0, 15936.0, 5),
        (500, 1.0, 63123.5, 6),
        (50, 2.0, 484375.0, 6),
        (250, 2.0, 2.55859e8, 6),
        (500, 2.0, 4e9, 1),
        (50, -1.0, 0.0016, 2),
        (250, -1.0, 0.000064, 2),
        (500, -1.0, 0.000016, 2),
    ];
    for (d, alpha, printed, sig) in asymp_cells {
        let v = position_large_d(&state(2, 0, d, 1.0), alpha).unwrap().value;
        // Half a unit in the last printed digit.
        let tol = 0.5 * 10f64.powi(printed.abs().log10().floor() as i32 - (sig - 1));
        assert!(
            (v - printed).abs() <= tol,
            "asymptotic position cell D = {d}, alpha = {alpha}: formula gives {v:.10e}, printed {printed} (tol {tol:.1e})"
        );
    }

    // Exact column, three routes pairwise within 1e-9.
    for d in [50u32, 250, 500] {
        for alpha in [1.0f64, 2.0, -1.0] {
            let st = state(2, 0, d, 1.0);
            let series = position_expectation(&st, alpha).unwrap().value;
            let closed = position_closed_forms(&st, alpha as i64).unwrap().value;
            let quad = quad_position_moment(&st, Integrand::Power(alpha)).unwrap().value;
            assert!(
                rel_dev(series, closed) <= 1e-9 && rel_dev(series, quad) <= 1e-9,
                "exact position routes disagree at D = {d}, alpha = {alpha}: series {series:.12e}, closed {closed:.12e}, quad {quad:.12e}"
            );
        }
    }

    // The flagship cell is exactly 1375/2 = 687.5 in rational arithmetic.
    let flagship = position_expectation_rational(&state(2, 0, 50, 1.0), 1).unwrap();
    assert_eq!(flagship, Rational::new(BigInt::from(1375), BigInt::from(2)));

    // The printed exact column disagrees with every computed route (687.5
    // vs 612.5 is 12%); the harness must report that as a WARN.
    assert!(rel_dev(687.5, 612.5) > 0.1);
    assert_eq!(
        suite_status(Suite::Exact, "exact.position_table_printed_column"),
        Status::Warn,
        "the printed exact position column must be reported as a WARN, not matched or failed"
    );
    println!("criterion 02: PASS — asymptotic column at printed precision, exact column triple-checked, printed divergence reported as WARN");
}

/// Criterion 03: exact moments agree with the quadrature oracle to 1e-9 and
/// with the exact-rational replay to 1e-12 over the full validity-filtered
/// sweep n <= 5, l < n, D in {3, 10, 50, 200},
/// alpha in {-3, -2, -1, -0.5, 0.5, 1, 2, 3}. Budget: < 10 s.
#[test]
fn criterion_03_oracle_equivalence_sweep() {
    let clock = Instant::now();
    let alphas = [-3.0f64, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0];
    let mut quad_cells = 0usize;
    let mut replay_cells = 0usize;
    let mut worst_quad = 0.0f64;
    let mut worst_replay = 0.0f64;

    for n in 1u32..=5 {
        for l in 0..n {
            for d in [3u32, 10, 50, 200] {
                let st = state(n, l, d, 1.0);
                for &alpha in &alphas {
                    for space in [Space::Position, Space::Momentum] {
                        let exact = match space {
                            Space::Position => position_expectation(&st, alpha),
                            Space::Momentum => momentum_expectation(&st, alpha),
                        };
                        let exact = match exact {
                            Ok(e) => e.value,
                            Err(Error::Validity(_)) => continue,
                            Err(e) => panic!("({n},{l},{d}) alpha {alpha} {space:?}: {e}"),
                        };
                        let quad = match space {
                            Space::Position => {
                                quad_position_moment(&st, Integrand::Power(alpha))
                            }
                            Space::Momentum => {
                                quad_momentum_moment(&st, Integrand::Power(alpha))
                            }
                        }
                        .unwrap()
                        .value;
                        let dq = rel_dev(exact, quad);
                        worst_quad = worst_quad.max(dq);
                        quad_cells += 1;
                        assert!(
                            dq <= 1e-9,
                            "quadrature disagrees at ({n},{l},{d}) alpha {alpha} {space:?}: exact {exact:.12e} vs quad {quad:.12e} (rel {dq:.3e})"
                        );

                        if alpha.fract() != 0.0 {
                            continue;
                        }
                        let expr = match space {
                            Space::Position => ReplayExpression::PositionMoment,
                            Space::Momentum => ReplayExpression::MomentumMoment,
                        };
                        match rational_replay(expr, &st, &big(alpha as i64)) {
                            Ok(r) => {
                                let rf = hydromoments::rational_to_f64(&r);
                                let dr = rel_dev(exact, rf);
                                worst_replay = worst_replay.max(dr);
                                replay_cells += 1;
                                assert!(
                                    dr <= 1e-12,
                                    "rational replay disagrees at ({n},{l},{d}) alpha {alpha} {space:?}: float {exact:.15e} vs exact {rf:.15e} (rel {dr:.3e})"
                                );
                            }
                            // Odd momentum powers carry a bare pi and have no
                            // rational value; that is a filter, not a failure.
                            Err(Error::Domain(_)) | Err(Error::Validity(_)) => {}
                            Err(e) => panic!("replay ({n},{l},{d}) alpha {alpha}: {e}"),
                        }
                    }
                }
            }
        }
    }

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "budget: took {elapsed:?}, required < 10 s");
    println!(
        "criterion 03: PASS — {quad_cells} cells vs quadrature (worst {worst_quad:.2e}), {replay_cells} cells vs rational replay (worst {worst_replay:.2e}), {elapsed:?}"
    );
}

/// Criterion 04: for non-degenerate (alpha, n, l) the refined large-D
/// residual R(D) = |asymptotic/exact - 1| shrinks like 1/D^2: every doubling
/// ratio R(D)/R(2D) over D in {100, 200, 400} lies in [3.0, 5.5], in both
/// spaces.
#[test]
fn criterion_04_convergence_order() {
    let position_alphas = [0.5f64, 2.0, 3.0];
    let momentum_alphas = [-1.0f64, 0.5, 1.0, 3.0];
    let states = [(2u32, 0u32), (2, 1), (3, 1)];
    let mut ratios = Vec::new();

    for &(n, l) in &states {
        for (space, alphas) in [
            (Space::Position, &position_alphas[..]),
            (Space::Momentum, &momentum_alphas[..]),
        ] {
            for &alpha in alphas {
                let residual = |d: u32| -> f64 {
                    let st = state(n, l, d, 1.0);
                    let (asym, exact) = match space {
                        Space::Position => (
                            position_large_d_refined(&st, alpha).unwrap().value,
                            position_expectation(&st, alpha).unwrap().value,
                        ),
                        Space::Momentum => (
                            momentum_large_d_refined(&st, alpha).unwrap().value,
                            momentum_expectation(&st, alpha).unwrap().value,
                        ),
                    };
                    (asym / exact - 1.0).abs()
                };
                let (r100, r200, r400) = (residual(100), residual(200), residual(400));
                assert!(
                    r400 > 1e-13,
                    "degenerate cell ({n},{l}) alpha {alpha} {space:?}: residual {r400:.3e} at D = 400 is below resolution"
                );
                for (hi, lo, pair) in [(r100, r200, "100/200"), (r200, r400, "200/400")] {
                    let ratio = hi / lo;
                    assert!(
                        (3.0..=5.5).contains(&ratio),
                        "({n},{l}) alpha {alpha} {space:?}: R({pair}) = {ratio:.3} outside [3.0, 5.5]"
                    );
                    ratios.push(ratio);
                }
            }
        }
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    println!(
        "criterion 04: PASS — {} doubling ratios all in [3.0, 5.5], mean {mean:.3} (O(1/D^2))",
        ratios.len()
    );
}

/// Criterion 05: the two series-coefficient routes agree exactly in rational
/// arithmetic over k <= 8, nu in {5, 10, 20, 50}, alpha in {-1, 0, 1, 2, 3};
/// the nu^2-scaled remainder of the two-term large-nu expansion stays bounded
/// as nu doubles from 50 to 800; and the Pochhammer shift identity is exact
/// on its half-integer grid.
#[test]
fn criterion_05_coefficient_identities() {
    for k in 0..=8usize {
        for nu in [5i64, 10, 20, 50] {
            for alpha in [-1i64, 0, 1, 2, 3] {
                let nu_r = big(nu);
                let al_r = big(alpha);
                let direct = fk_direct_rational(k, &nu_r, &al_r).unwrap();
                let recast = fk_prop1_rational(k, &nu_r, &al_r).unwrap();
                assert_eq!(direct, recast, "routes split at k = {k}, nu = {nu}, alpha = {alpha}");
            }
        }
    }

    // Remainder after the two printed terms, relative to the leading term
    // k!/(2 nu)^k, scaled by nu^2. Evaluated in exact rationals: the direct
    // alternating sum is a k-th finite difference, so its float form loses
    // the remainder to cancellation long before nu = 800. An O(1/nu^2)
    // remainder makes the scaled sequence converge: its consecutive
    // increments must at least halve, and the whole run stays within a
    // fixed factor of its first entry.
    for k in [2usize, 5] {
        for alpha_i in [-1i64, 1, 3] {
            let al = big(alpha_i);
            let scaled = |nu_i: i64| -> f64 {
                let nu = big(nu_i);
                let fk = fk_direct_rational(k, &nu, &al).unwrap();
                let mut leading = big(1);
                for i in 1..=k {
                    leading = leading * big(i as i64) / (big(2) * nu.clone());
                }
                let kf = big(k as i64);
                let two_terms = big(1)
                    - kf.clone() * (kf + big(3) + big(2) * al.clone() * (big(2) - al.clone()))
                        / (big(4) * nu.clone());
                let rem = fk / leading - two_terms;
                hydromoments::rational_to_f64(&(nu.clone() * nu * rem)).abs()
            };
            let series: Vec<f64> = [50i64, 100, 200, 400, 800].map(scaled).to_vec();
            let s0 = series[0].max(f64::EPSILON);
            let mut prev_step = f64::INFINITY;
            for (i, s) in series.iter().enumerate() {
                assert!(
                    *s <= 2.0 * s0,
                    "k = {k}, alpha = {alpha_i}: nu^2-scaled remainder unbounded: {}",
                    fmt_seq(&series)
                );
                if i > 0 {
                    let step = (s - series[i - 1]).abs();
                    assert!(
                        step <= 0.7 * prev_step,
                        "k = {k}, alpha = {alpha_i}: scaled remainder not converging: {}",
                        fmt_seq(&series)
                    );
                    prev_step = step;
                }
            }
        }
    }

    for a_num in [3i64, 7, 11] {
        for j in 0..=4usize {
            for k in 0..=4usize {
                let a = Rational::new(BigInt::from(a_num), BigInt::from(2));
                let (lhs, rhs) = pochhammer_shift_identity(&a, j, k);
                assert_eq!(lhs, rhs, "shift identity broke at a = {a_num}/2, j = {j}, k = {k}");
            }
        }
    }
    println!("criterion 05: PASS — 180 exact coefficient equalities, bounded nu^2 remainders, exact shift identity");
}

/// Criterion 06: the refined variance bound holds on the full sweep
/// (n <= 6, D <= 100, Z in {1, 2, 10}); the ground-state product equals
/// D^2/4 (1 + 1/D) exactly in rational mode; the refined logarithmic floor
/// holds everywhere it is defined; the logarithmic sum is Z-invariant to
/// 1e-13; and the (1, 0, 3, 1) logarithmic margin equals its derived value
/// 7/6 + log 2 - pi/2, with the published 0.2890232 reported as a WARN
/// because it misses that value by 5.7e-6, outside its own 1e-6 window.
#[test]
fn criterion_06_uncertainty_relations() {
    for n in 1u32..=6 {
        for l in 0..n {
            for d in 2u32..=100 {
                let mut sums = Vec::new();
                for z in [1.0f64, 2.0, 10.0] {
                    let st = state(n, l, d, z);
                    let rec = check_heisenberg_bound(&st);
                    assert!(
                        rec.satisfied,
                        "refined bound violated at ({n},{l},{d},{z}): product {} < bound {}",
                        rec.product_value, rec.bound
                    );
                    match log_uncertainty_margins(&st) {
                        Ok((refined, _)) => {
                            assert!(
                                refined.satisfied,
                                "log floor violated at ({n},{l},{d},{z}): sum {} < bound {}",
                                rec.product_value, refined.bound
                            );
                            sums.push(refined.product_value);
                        }
                        // (2n + D - 3)^2 = 1 makes the momentum log moment
                        // degenerate; the only such cell in the sweep.
                        Err(Error::Validity(_)) => assert_eq!((n, d), (1, 2)),
                        Err(e) => panic!("({n},{l},{d},{z}): {e}"),
                    }
                }
                for s in &sums {
                    assert!(
                        (s - sums[0]).abs() <= 1e-13 * sums[0].abs().max(1.0),
                        "log sum depends on Z at ({n},{l},{d}): {sums:?}"
                    );
                }
            }
        }
    }

    // Ground-state product D^2/4 (1 + 1/D) = D(D+1)/4, exact and Z-free.
    for d in 2u32..=100 {
        let expected = Rational::new(BigInt::from(d) * BigInt::from(d + 1), BigInt::from(4));
        assert_eq!(product22_closed_rational(&state(1, 0, d, 1.0)), expected);
        assert_eq!(product22_closed_rational(&state(1, 0, d, 10.0)), expected);
    }

    let margin = log_uncertainty_margins(&state(1, 0, 3, 1.0)).unwrap().0.margin;
    let derived = 7.0 / 6.0 + std::f64::consts::LN_2 - std::f64::consts::FRAC_PI_2;
    assert!(
        (margin - derived).abs() <= 1e-12,
        "margin {margin:.17} differs from 7/6 + log 2 - pi/2 = {derived:.17}"
    );
    // The published reference 0.2890232 misses the derived value by 5.7e-6,
    // outside its own +-1e-6 window; the harness reports that as a WARN and
    // this gate asserts the derivation instead of the misprint.
    let slip = (margin - 0.2890232).abs();
    assert!(
        slip > 1e-6 && slip < 1e-5,
        "published-margin slip changed: |{margin:.10} - 0.2890232| = {slip:.3e}"
    );
    assert_eq!(suite_status(Suite::Uncertainty, "uncertainty.printed_margin_constant"), Status::Warn);
    println!("criterion 06: PASS — bounds hold on 6237 cells, ground product exact, Z-invariant, margin = 7/6 + log 2 - pi/2 (published constant reported as WARN)");
}

/// Criterion 07: entropy values and bounds at D = 3, Z = 1, ground state.
/// S(1s) = 4.1447299 by quadrature; the alpha = 2 Shannon bound is
/// satisfied (its derived value is 4.2568156; the published 4.2569797
/// carries a constant slip reported as a WARN); the alpha = 1 bound is
/// saturated within 1e-4; R_2 = 3.2241714 under its 3.9946 bound;
/// W_2 = 0.0397887 over its 0.0184152 floor; momentum mirrors hold.
#[test]
fn criterion_07_entropy_bounds() {
    let st = state(1, 0, 3, 1.0);

    let s_pos = entropy_quadrature(&st, EntropyKind::Shannon, 1.0, Space::Position).unwrap().value;
    assert!((s_pos - 4.1447299).abs() <= 1e-6, "S(1s) = {s_pos:.9}");

    let sh2 = bound_shannon_upper(&st, 2.0, Space::Position).unwrap();
    assert_eq!(sh2.satisfied, Some(true), "alpha = 2 Shannon bound not satisfied");
    assert!(
        (sh2.bound_value - 4.2568155996140182).abs() <= 1e-9,
        "alpha = 2 bound moved: {:.12}",
        sh2.bound_value
    );
    // The published 4.2569797 differs from the derived bound by 1.6e-4; the
    // bound is satisfied either way, and the harness carries the WARN.
    assert!((sh2.bound_value - 4.2569797).abs() > 1e-5);
    assert_eq!(suite_status(Suite::Entropy, "entropy.printed_a0_constant"), Status::Warn);

    let sh1 = bound_shannon_upper(&st, 1.0, Space::Position).unwrap();
    assert_eq!(sh1.satisfied, Some(true));
    assert!(
        (sh1.bound_value - s_pos).abs() <= 1e-4,
        "alpha = 1 bound not saturated: gap {:.3e}",
        sh1.bound_value - s_pos
    );

    let r2 = entropy_quadrature(&st, EntropyKind::Renyi, 2.0, Space::Position).unwrap().value;
    assert!((r2 - 3.2241714).abs() <= 1e-6, "R_2 = {r2:.9}");
    let rb = bound_renyi_upper(&st, 2.0, 2, MomentSign::Plus, Space::Position).unwrap();
    assert_eq!(rb.satisfied, Some(true));
    assert!((rb.bound_value - 3.9946).abs() <= 1e-3, "R_2 bound = {:.6}", rb.bound_value);

    let ts = bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, Space::Position).unwrap();
    assert_eq!(ts.satisfied, Some(true));
    let w2 = 1.0 - ts.entropy.unwrap().value; // W_q = 1 + (1-q) T_q at q = 2
    assert!((w2 - 0.0397887).abs() <= 1e-6, "W_2 = {w2:.9}");
    assert!((ts.bound_value - 0.0184152).abs() <= 1e-6, "W_2 floor = {:.9}", ts.bound_value);

    // Momentum-space mirrors: the same bound set holds for the momentum
    // density of the same state.
    let s_mom = entropy_quadrature(&st, EntropyKind::Shannon, 1.0, Space::Momentum).unwrap().value;
    assert!(s_mom.is_finite());
    for alpha in [1u32, 2] {
        let b = bound_shannon_upper(&st, f64::from(alpha), Space::Momentum).unwrap();
        assert_eq!(b.satisfied, Some(true), "momentum Shannon bound alpha = {alpha}");
    }
    let rbm = bound_renyi_upper(&st, 2.0, 2, MomentSign::Plus, Space::Momentum).unwrap();
    assert_eq!(rbm.satisfied, Some(true), "momentum Renyi bound");
    let tsm = bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, Space::Momentum).unwrap();
    assert_eq!(tsm.satisfied, Some(true), "momentum Tsallis floor");

    println!("criterion 07: PASS — S = {s_pos:.7}, R_2 = {r2:.7}, W_2 = {w2:.7}, all bounds satisfied in both spaces (published A0 constant reported as WARN)");
}

/// Criterion 08: fixed-D Rydberg laws at D = 3, Z = 1, l = 0 reach 1%
/// agreement by n = 500 for position alpha in {-1, 0.5, 1, 2} and momentum
/// alpha in {0.5, 1, 1.5, 2.5}, with monotone decay along
/// n in {50, 100, 200, 500}.
///
/// Expected red: the momentum law converges like n^(alpha - 3) inside its
/// window, which degrades to n^(-1/2) at alpha = 2.5; the measured
/// deviation is still about 1.7e-2 at n = 500. The assertion states the 1%
/// target as written and the message carries the measured decay.
#[test]
fn criterion_08_rydberg_fixed_d() {
    let ns = [50u32, 100, 200, 500];
    let mut violations = Vec::new();

    for (space, alphas) in [
        (Space::Position, [-1.0f64, 0.5, 1.0, 2.0]),
        (Space::Momentum, [0.5f64, 1.0, 1.5, 2.5]),
    ] {
        for alpha in alphas {
            let devs: Vec<f64> = ns
                .iter()
                .map(|&n| {
                    let st = state(n, 0, 3, 1.0);
                    let (asym, exact) = match space {
                        Space::Position => (
                            pos_rydberg_fixed_d(&st, alpha).unwrap().value,
                            position_expectation(&st, alpha).unwrap().value,
                        ),
                        Space::Momentum => (
                            mom_rydberg_fixed_d(&st, alpha).unwrap().value,
                            momentum_expectation(&st, alpha).unwrap().value,
                        ),
                    };
                    rel_dev(exact, asym)
                })
                .collect();

            if devs[0] <= 1e-11 {
                // The law reproduces these moments exactly (position
                // alpha in {-1, 1} at l = 0); only rounding noise remains
                // and decay is vacuous.
                assert!(
                    devs.iter().all(|d| *d <= 1e-11),
                    "{space:?} alpha = {alpha}: exact cell left rounding scale: {}", fmt_seq(&devs)
                );
            } else {
                for w in devs.windows(2) {
                    assert!(
                        w[1] < w[0],
                        "{space:?} alpha = {alpha}: deviation not monotone along n = {ns:?}: {}", fmt_seq(&devs)
                    );
                }
            }
            if devs[3] > 1e-2 {
                violations.push(format!(
                    "{space:?} alpha = {alpha}: |exact/asymptotic - 1| along n = {ns:?} is {}", fmt_seq(&devs)
                ));
            }
        }
    }

    assert!(
        violations.is_empty(),
        "1% not reached at n = 500 for: {}. The deviation decays monotonically like n^(-1/2) at the window edge, so the stated target is not reachable by n = 500; tolerances were not relaxed to mask it.",
        violations.join("; ")
    );
    println!("criterion 08: PASS — all eight fixed-D cells within 1% at n = 500 with monotone decay");
}

/// Criterion 09: limiting-measure identities. Both equilibrium measures
/// normalize to 1 +- 1e-8 for lambda in {0, 0.5, 1, 2, 10}; the
/// quadrature-vs-closed-form moment identities hold to 1e-8 (position
/// measure against its Gauss closed form, momentum chain against its Appell
/// reduction); and the verbatim final formulas' failed alpha = 0 self-tests
/// are reported as WARNs. This criterion passes by reporting, not by
/// pretending those formulas normalize.
#[test]
fn criterion_09_limiting_measure_identities() {
    for lam in [0.0f64, 0.5, 1.0, 2.0, 10.0] {
        let ratio = RatioLambda::new(lam).unwrap();
        let mp = equilibrium_position(ratio).total_mass().unwrap();
        let mm = equilibrium_momentum(ratio).total_mass().unwrap();
        assert!((mp - 1.0).abs() <= 1e-8, "position mass at lambda = {lam}: {mp:.12}");
        assert!((mm - 1.0).abs() <= 1e-8, "momentum mass at lambda = {lam}: {mm:.12}");
    }

    for lam in [0.5f64, 1.0, 2.0] {
        let ratio = RatioLambda::new(lam).unwrap();
        for alpha in [-1.0f64, 0.0, 1.0, 2.0] {
            let (j_quad, _) = limiting_integrals(alpha, ratio).unwrap();
            let closed = position_moment_closed(alpha, ratio).unwrap();
            let dev = rel_dev(j_quad, closed);
            assert!(
                dev <= 1e-8,
                "position moment identity at lambda = {lam}, alpha = {alpha}: {dev:.3e}"
            );
        }
        // J(-1) = 1 exactly, since the support endpoints satisfy ab = lambda^2.
        let (j_m1, _) = limiting_integrals(-1.0, ratio).unwrap();
        assert!((j_m1 - 1.0).abs() <= 1e-8, "J(-1) at lambda = {lam}: {j_m1:.12}");

        let xi = equilibrium_momentum(ratio).support_high;
        let u = 2.0 * xi / (1.0 + xi);
        for alpha in [0.0f64, 1.0, 2.0] {
            let lhs = euler_f1_integral(alpha, u).unwrap();
            let rhs = std::f64::consts::PI / 8.0
                * appell_f1(1.5, 1.0 - alpha / 2.0, alpha / 2.0, 3.0, u, -u).unwrap();
            let dev = rel_dev(lhs, rhs);
            assert!(
                dev <= 1e-8,
                "momentum chain identity at lambda = {lam}, alpha = {alpha}: {dev:.3e}"
            );
        }
        // T(0) = 1: the momentum measure is normalized along the same route.
        let (_, t0) = limiting_integrals(0.0, ratio).unwrap();
        assert!((t0 - 1.0).abs() <= 1e-8, "T(0) at lambda = {lam}: {t0:.12}");
    }

    // The verbatim final formulas fail their own alpha = 0 self-tests; the
    // harness must carry them as WARNs (reported, not corrected and not
    // escalated to FAIL, since the measure-route normalization above holds).
    let rydberg = run_suite(Suite::Rydberg);
    for id in [
        "rydberg.printed_position_self_test",
        "rydberg.printed_momentum_gamma_factor",
        "rydberg.nl_gap_self_test",
    ] {
        let check = rydberg.iter().find(|c| c.id == id).unwrap();
        assert_eq!(check.status, Status::Warn, "{id} should be a WARN: {}", check.observed);
    }
    println!("criterion 09: PASS — measures normalize, both moment identities within 1e-8, printed-formula self-tests reported as WARNs");
}

/// Criterion 10: the infinite-D limits themselves are not finite
/// computations; they are accepted through rate probes. Three direct probes
/// stand in here (the full distributions live in the property suite):
/// the refined residual keeps its 1/D^2 order through D = 1600, the relative
/// Kennard margin vanishes exactly like 1/D on the ground state, and the
/// refined variance bound saturates like 1/eta on circular states.
#[test]
fn criterion_10_substituted_limit_probes() {
    // Order of convergence persists beyond the criterion-04 window.
    let residual = |d: u32| -> f64 {
        let st = state(2, 0, d, 1.0);
        (position_large_d_refined(&st, 2.0).unwrap().value
            / position_expectation(&st, 2.0).unwrap().value
            - 1.0)
            .abs()
    };
    let r = residual(800) / residual(1600);
    assert!((3.4..=4.6).contains(&r), "refined order drifts at large D: ratio {r:.3}");

    // Ground-state relative Kennard margin is exactly 1/D, vanishing.
    for d in [100u32, 400, 1600] {
        let st = state(1, 0, d, 1.0);
        let margin = hydromoments::rational_to_f64(&product22_closed_rational(&st))
            / (f64::from(d) * f64::from(d) / 4.0)
            - 1.0;
        assert!(
            (margin - 1.0 / f64::from(d)).abs() <= 1e-12,
            "relative Kennard margin at D = {d}: {margin:.3e}"
        );
    }

    // Circular states saturate the refined bound: product/bound - 1 ~ 1/(2 eta).
    let sat = |d: u32| -> f64 {
        let st = state(3, 2, d, 1.0);
        let rec = check_heisenberg_bound(&st);
        rec.product_value / rec.bound - 1.0
    };
    let (s400, s800, s1600) = (sat(400), sat(800), sat(1600));
    assert!(s400 > s800 && s800 > s1600, "saturation not monotone: {s400:.3e} {s800:.3e} {s1600:.3e}");
    let halving = s800 / s1600;
    assert!(
        (1.8..=2.2).contains(&halving),
        "saturation rate is not 1/eta: halving ratio {halving:.3}"
    );

    // The logarithmic floor saturates at the same 1/D order.
    let log_gap = |d: u32| -> f64 {
        log_uncertainty_margins(&state(1, 0, d, 1.0)).unwrap().0.margin
    };
    let (g200, g400, g800) = (log_gap(200), log_gap(400), log_gap(800));
    assert!(g200 > g400 && g400 > g800, "log margin not vanishing: {g200:.3e} {g400:.3e} {g800:.3e}");
    let log_halving = g400 / g800;
    assert!(
        (1.7..=2.3).contains(&log_halving),
        "log margin rate is not 1/D: halving ratio {log_halving:.3}"
    );

    println!("criterion 10: PASS — 1/D^2 order persists to D = 1600, margins vanish at their 1/D and 1/eta rates");
}
