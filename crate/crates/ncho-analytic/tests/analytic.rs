use ncho_analytic::{
    barnes_b, default_period_points, default_target, dg_transform_check, eval_series, f21, f21_real,
    g1_period_check, lambert_dg, mahler_reference, mahler_u, period_poly, r1s_closed_form, ramanujan_check, ve,
    ve0_check, ve_integral_check, vodd_spot_check, AnalyticError, MahlerFamily, McConfig, UhpPoint,
};
use ncho_numcore::rational::binomial;
use ncho_numcore::{bernoulli_number, rat, BigComplex, Precision, Rat};
use ncho_qseries::{dg, tmod, wtilde2, RatSeries};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::f64::consts::PI;

fn prec() -> Precision {
    Precision::new(256).unwrap()
}

fn point(re: f64, im: f64) -> UhpPoint {
    UhpPoint::from_f64(re, im, prec()).unwrap()
}

/// Ten points with `Im tau` and `Im(-1/tau)` both at least 0.3.
fn grid() -> Vec<UhpPoint> {
    [
        (0.0, 1.3),
        (1.0, 2.0),
        (0.3, 0.9),
        (-0.4, 1.1),
        (0.2, 2.7),
        (0.5, 0.8),
        (-0.25, 1.6),
        (0.1, 1.0),
        (-0.6, 0.95),
        (0.35, 1.45),
    ]
    .iter()
    .map(|&(x, y)| point(x, y))
    .collect()
}

#[test]
fn constant_series_evaluates_to_one() {
    let one = RatSeries::one(1, 8);
    let v = eval_series(&one, &point(0.0, 1.0), 1e-30).unwrap();
    assert!((v.value.re_f64() - 1.0).abs() < 1e-30 && v.value.im_f64().abs() < 1e-30);
}

#[test]
fn modular_function_matches_direct_theta_sums() {
    let x = (-PI).exp();
    let theta2: f64 = (0..20).map(|n| 2.0 * x.powf((n as f64 + 0.5).powi(2))).sum();
    let theta4: f64 = 1.0 + (1..20).map(|n| 2.0 * (-1f64).powi(n) * x.powi(n * n)).sum::<f64>();
    let oracle = -(theta2 / theta4).powi(4);
    let v = eval_series(&tmod(60).unwrap(), &point(0.0, 1.0), 1e-25).unwrap().value;
    assert!(((v.re_f64() - oracle) / oracle).abs() < 1e-13, "{v} vs {oracle}");
    assert!(eval_series(&tmod(3).unwrap(), &point(0.0, 1.0), 1e-25).is_err());
}

#[test]
fn weight_one_form_matches_eta_product() {
    // at tau = 2i the shifted point (tau+1)/2 has nome -e^{-2 pi}
    let q = -(-2.0 * PI).exp();
    let prod = |m: i32| (1..40).map(|n| 1.0 - q.powi(m * n)).product::<f64>();
    let oracle = prod(2).powi(22) / (prod(1).powi(12) * prod(4).powi(8));
    let v = eval_series(&wtilde2(30).unwrap(), &point(0.0, 2.0), 1e-30).unwrap().value;
    assert!((v.re_f64() - oracle).abs() < 1e-14, "{v} vs {oracle}");
}

#[test]
fn lambert_and_fourier_routes_agree() {
    for k in 1..=3 {
        let series = dg(k, 120).unwrap();
        for tau in grid() {
            let lambert = lambert_dg(k, &tau, prec());
            let fourier = eval_series(&series, &tau, 1e-30).unwrap().value;
            assert!((&lambert - &fourier).abs_f64() < 1e-15, "k = {k}");
        }
    }
}

#[test]
fn lambert_limit_is_the_constant_term() {
    let v = lambert_dg(1, &point(0.0, 10.0), prec()).re_f64();
    let zeta3 = 1.202_056_903_159_594_2;
    assert!((v + zeta3 / (2.0 * PI * PI)).abs() < 1e-15);
}

/// `B_n(x) = sum_j C(n, j) B_j x^{n-j}`.
fn bernoulli_poly(n: usize, x: &Rat) -> Rat {
    (0..=n).fold(Rat::from_integer(0.into()), |acc, j| {
        let c = Rat::from_integer(BigInt::from(binomial(n as u64, j as u64)));
        acc + c * bernoulli_number(j) * (0..n - j).fold(rat(1, 1), |pw, _| pw * x)
    })
}

#[test]
fn double_bernoulli_special_values() {
    // with periods (1, 1): zeta_2(s, z) = zeta_H(s - 1, z) + (1 - z) zeta_H(s, z) and
    // zeta_H(-n, z) = -B_{n+1}(z)/(n+1), so zeta_2(1 - m, z) = B_{2,m+1}(z)/(m(m+1)) is exact
    let p = prec();
    let one = BigComplex::one(p);
    for m in 1..=6usize {
        for z in [rat(2, 1), rat(5, 2), rat(3, 1), rat(1, 3)] {
            let s = 1 - m as i64;
            let hurwitz = |s: i64| {
                let n = (-s) as usize;
                -bernoulli_poly(n + 1, &z) / rat(n as i64 + 1, 1)
            };
            let exact = hurwitz(s - 1) + (rat(1, 1) - &z) * hurwitz(s);
            let b = barnes_b(m + 1, &BigComplex::from_rat(&z, p), &one, &one);
            let value = b.scale_rat(&rat(1, (m * (m + 1)) as i64));
            let diff = &value - &BigComplex::from_rat(&exact, p);
            assert!(diff.abs_f64() < 1e-60, "m = {m}, z = {z}");
        }
    }
    let b = barnes_b(4, &BigComplex::from_int(2, p), &one, &one);
    assert!((b.re_f64() - 0.1).abs() < 1e-60);
}

#[test]
fn transformation_law_with_corrected_coefficient() {
    for k in 1..=3 {
        for tau in grid() {
            let r = dg_transform_check(k, &tau);
            assert!(r.corrected <= 1e-10, "k = {k}: {r:?}");
        }
    }
    // at tau = i both sides coincide under S
    let r = dg_transform_check(1, &point(0.0, 1.0));
    assert!(r.corrected <= 1e-30);
}

/// The coefficient `-4 k pi i` leaves a defect of order one on the same grid.
#[test]
fn stated_transformation_coefficient_leaves_defect() {
    let r = dg_transform_check(1, &point(0.0, 1.3));
    assert!(r.stated > 1e-3, "{r:?}");
}

#[test]
fn g1_transformation_rule() {
    for (x, y) in [(0.0, 1.0), (0.0, 2.0), (1.0, 1.0)] {
        let r = g1_period_check(&point(x, y)).unwrap();
        assert!(r <= 1e-8, "tau = {x} + {y}i: {r}");
    }
}

#[test]
fn period_polynomials() {
    let p = prec();
    let poly = period_poly(1, &default_period_points(1, p)).unwrap();
    for (j, e) in poly.relative_errors(&r1s_closed_form(p)).iter().enumerate() {
        assert!(*e <= 1e-6, "coefficient {j}: {e}");
    }
    assert!(poly.heldout_residual <= 1e-6);
    let poly2 = period_poly(2, &default_period_points(2, p)).unwrap();
    assert_eq!(poly2.coeffs.len(), 7);
    assert!(poly2.heldout_residual <= 1e-6, "{}", poly2.heldout_residual);
    assert!(matches!(period_poly(2, &default_period_points(1, p)), Err(AnalyticError::Domain(_))));
}

#[test]
fn ramanujan_type_values() {
    for k in [1, 3] {
        let r = ramanujan_check(k, prec()).unwrap();
        assert!(r.corrected <= 1e-12, "k = {k}: {r:?}");
        assert!(r.stated > 1e-3, "k = {k}: {r:?}");
    }
    assert!((ramanujan_check(1, prec()).unwrap().lhs - 1.203_93).abs() < 1e-4);
    assert!(matches!(ramanujan_check(2, prec()), Err(AnalyticError::EvenK(2))));
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..60 {
        let (x, y) = ((a + b) / 2.0, (a * b).sqrt());
        a = x;
        b = y;
    }
    a
}

#[test]
fn hypergeometric_against_elliptic_integral() {
    let p = prec();
    for j in 0..20 {
        let m = -0.9 + 1.8 * j as f64 / 19.0;
        let oracle = 1.0 / agm(1.0, (1.0 - m).sqrt());
        let v = f21_real(0.5, 0.5, 1.0, m, p).unwrap();
        assert!((v - oracle).abs() <= 1e-14, "m = {m}: {v} vs {oracle}");
    }
    assert!((f21_real(0.5, 0.5, 1.0, 0.5, p).unwrap() - 1.180_340_599_016_096).abs() < 1e-14);
    let z: f64 = 0.25;
    let closed = z.sqrt().asin() / (z.sqrt() * (1.0 - z).sqrt());
    assert!((f21_real(1.0, 1.0, 1.5, z, p).unwrap() - closed).abs() < 1e-15);
    assert_eq!(f21_real(0.3, 0.7, 1.2, 0.0, p).unwrap(), 1.0);
    let big = BigComplex::from_f64(0.96, 0.0, p);
    let one = BigComplex::one(p);
    assert!(f21(&one, &one, &one, &big).is_err());
    assert!(f21_real(1.0, 1.0, -2.0, 0.1, p).is_err());
}

#[test]
fn even_meta_generating_function() {
    let p = prec();
    assert!((ve(0.0, 0.0, p).unwrap() - PI * PI / 2.0).abs() < 1e-14);
    for t in [0.1, -0.4, 0.7] {
        let expected = PI * PI / 2.0 * f21_real(0.5, 0.5, 1.0, t, p).unwrap();
        assert!((ve(t, 0.0, p).unwrap() - expected).abs() < 1e-13);
    }
    assert!(ve0_check(0.3, p).unwrap() <= 1e-10);
    assert!(ve0_check(0.0, p).unwrap() <= 1e-60);
    assert!(ve(0.1, 0.6, p).is_err());
}

#[test]
fn odd_meta_structure() {
    for t in [0.3, -0.2, 0.45] {
        assert!(vodd_spot_check(t, prec()).unwrap() < 1e-12, "t = {t}");
    }
}

#[test]
fn torus_averages_match_hypergeometric_values() {
    let p = prec();
    let cfg = McConfig::default();
    let zero = mahler_u(MahlerFamily::L2, 0.0, cfg).unwrap();
    assert!((zero.mean - 1.0).abs() < 1e-15);
    for (l, lambda) in [(2, 0.1), (3, 0.05), (4, 0.05), (6, 0.02)] {
        let family = MahlerFamily::try_from(l).unwrap();
        let est = mahler_u(family, lambda, cfg).unwrap();
        let reference = mahler_reference(family, lambda, p).unwrap();
        assert!(est.within_three_sigma(reference), "l = {l}: {est:?} vs {reference}");
    }
    // direct series sum ((2n)!/(n!^2 4^n))^2 0.16^n
    let mut term = 1.0;
    let mut series = 1.0;
    for n in 1..60 {
        let r = (2.0 * n as f64 - 1.0) / (2.0 * n as f64);
        term *= r * r * 0.16;
        series += term;
    }
    assert!((mahler_reference(MahlerFamily::L2, 0.1, p).unwrap() - series).abs() < 1e-15);
    assert!(mahler_u(MahlerFamily::L2, 0.3, cfg).is_err());
    assert!(MahlerFamily::try_from(5).is_err());
}

#[test]
fn torus_average_coverage_over_seeds() {
    let p = prec();
    let reference = mahler_reference(MahlerFamily::L2, 0.1, p).unwrap();
    let hits = (0..20)
        .filter(|&seed| {
            let cfg = McConfig { samples: 1024, seed, replicates: 8 };
            mahler_u(MahlerFamily::L2, 0.1, cfg).unwrap().within_three_sigma(reference)
        })
        .count();
    assert!(hits >= 19, "{hits} of 20");
}

#[test]
fn monte_carlo_is_deterministic() {
    let cfg = McConfig { samples: 500, seed: 7, replicates: 4 };
    let a = mahler_u(MahlerFamily::L3, 0.05, cfg).unwrap();
    let b = mahler_u(MahlerFamily::L3, 0.05, cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn double_integral_representation() {
    let p = prec();
    let zero = ve_integral_check(0.0, MahlerFamily::L2, p).unwrap();
    assert!((zero.closed_form - PI * PI / 2.0).abs() < 1e-14);
    assert!(zero.residual <= 1e-6, "{zero:?}");
    for (t, l) in [(0.2, 2), (0.1, 4), (0.25, 3), (-0.2, 6)] {
        let r = ve_integral_check(t, MahlerFamily::try_from(l).unwrap(), p).unwrap();
        assert!(r.residual <= 1e-3, "T = {t}, l = {l}: {r:?}");
    }
    assert!(ve_integral_check(0.5, MahlerFamily::L2, p).is_err());
}

#[test]
fn default_target_scales_with_precision() {
    assert!(default_target(prec()) < 1e-35);
    assert!(UhpPoint::from_f64(0.0, -1.0, prec()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn barnes_is_symmetric_in_periods(m in 0usize..7, zr in -2.0f64..2.0, zi in -1.0f64..1.0, w in 0.2f64..2.0) {
        let p = Precision::new(128).unwrap();
        let z = BigComplex::from_f64(zr, zi, p);
        let w1 = BigComplex::from_f64(-1.0, 0.0, p);
        let w2 = BigComplex::from_f64(0.3, w, p);
        let a = barnes_b(m, &z, &w1, &w2);
        let b = barnes_b(m, &z, &w2, &w1);
        prop_assert!((&a - &b).abs_f64() <= 1e-25 * (1.0 + a.abs_f64()));
    }
}
