use ncho_apery::{
    descent_relation_holds, j_explicit_small_l, j_formal, j_numeric_integral, j_numeric_series, jtilde,
    jtilde_cascade, jtilde_explicit, recurrence_defect, zsum, AperyError, AperyTables, Parity, SpectralParams,
};
use ncho_numcore::{binom_neg_half, eval_formal, parse_rat, rat, FormalNumber, Precision, Rat};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Published normalized values, `k = 1..=8`, `n = 0..=8`.
const PUBLISHED: [&[&str]; 8] = [
    &["1", "2/3", "8/15", "16/35", "128/315", "256/693", "1024/3003", "2048/6435", "32768/109395"],
    &["1", "3/4", "41/64", "147/256", "8649/16384", "32307/65536", "487889/1048576", "1856307/4194304", "454689481/1073741824"],
    &["0", "1", "65/48", "13247/8640", "704707/430080", "660278641/387072000", "357852111131/204374016000", "309349386395887/173581664256000"],
    &["0", "1", "11/8", "907/576", "1739/1024", "6567221/3686400", "54281321/29491200", "7260544493/3853516800", "709180003579/369937612800"],
    &["0", "0", "1/4", "109/216", "101717/138240", "4557449/4838400", "15689290781/13934592000", "131932666373/102187008000", "144010453389429161/99983038611456000"],
    &["0", "0", "1/4", "73/144", "3419/4608", "29273/30720", "151587391/132710400", "232347221/176947200", "2444144299823/1664719257600"],
    &["0", "0", "0", "1/36", "515/6912", "76667/576000", "115560397/580608000", "1051251017/3901685760", "18813135818903/54935735500800"],
    &["0", "0", "0", "1/36", "43/576", "15389/115200", "1659311/8294400", "251914357/928972800", "10258433947/29727129600"],
];

#[test]
fn tables_match_published_data() {
    let tables = jtilde_cascade(8, 8);
    for (row, k) in PUBLISHED.iter().zip(1..) {
        for (n, s) in row.iter().enumerate() {
            assert_eq!(tables[k].values()[n], parse_rat(s).unwrap(), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn jtilde_examples() {
    let v = |k, n| jtilde(k, n).unwrap().values().to_vec();
    assert_eq!(v(2, 3), vec![rat(1, 1), rat(3, 4), rat(41, 64), rat(147, 256)]);
    assert_eq!(v(4, 3), vec![rat(0, 1), rat(1, 1), rat(11, 8), rat(907, 576)]);
    assert_eq!(v(7, 4), vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 36), rat(515, 6912)]);
    assert!(matches!(jtilde(0, 3), Err(AperyError::KOutOfRange { .. })));
}

/// Brute-force nested sum over strictly decreasing chains below `k`.
fn chains(parity: Parity, s: usize, k: usize) -> Rat {
    fn walk(parity: Parity, depth: usize, s: usize, bound: usize, acc: Rat, out: &mut Rat) {
        if depth == s {
            *out += acc;
            return;
        }
        for j in 0..bound {
            let x = rat(2 * j as i64 + 1, 2);
            let w = if depth + 1 == s && parity == Parity::Odd {
                let b = binom_neg_half(j as u64);
                Rat::one() / (&x * &x * &x * &b * &b)
            } else {
                Rat::one() / (&x * &x)
            };
            walk(parity, depth + 1, s, j, &acc * w, out);
        }
    }
    let mut out = Rat::zero();
    walk(parity, 0, s, k, Rat::one(), &mut out);
    let sign = if s % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
    match parity {
        Parity::Even => out * sign,
        Parity::Odd => out * sign / rat(2, 1),
    }
}

#[test]
fn zsum_matches_brute_force_chains() {
    for s in 0..=4 {
        for k in 0..=7 {
            assert_eq!(zsum(Parity::Even, s, k).unwrap(), chains(Parity::Even, s, k), "even s={s} k={k}");
            if s >= 1 {
                assert_eq!(zsum(Parity::Odd, s, k).unwrap(), chains(Parity::Odd, s, k), "odd s={s} k={k}");
            }
        }
    }
    assert_eq!(zsum(Parity::Even, 0, 5).unwrap(), rat(1, 1));
    assert_eq!(zsum(Parity::Even, 1, 1).unwrap(), rat(-4, 1));
    assert_eq!(zsum(Parity::Even, 3, 2).unwrap(), Rat::zero());
    assert!(zsum(Parity::Odd, 0, 2).is_err());
}

#[test]
fn explicit_route_examples() {
    assert_eq!(jtilde_explicit(4, 2).unwrap(), rat(11, 8));
    assert_eq!(jtilde_explicit(3, 1).unwrap(), rat(1, 1));
    assert_eq!(jtilde_explicit(6, 2).unwrap(), rat(1, 4));
}

#[test]
fn explicit_route_equals_recurrence() {
    let tables = jtilde_cascade(10, 30);
    for k in 3..=10 {
        for n in 0..=30 {
            assert_eq!(jtilde_explicit(k, n).unwrap(), tables[k].values()[n], "k = {k}, n = {n}");
        }
    }
}

#[test]
fn vanishing_and_leading_pattern() {
    let tables = jtilde_cascade(12, 6);
    let mut fact = Rat::one();
    for s in 1..=5usize {
        fact *= rat(s as i64, 1);
        let lead = Rat::one() / (&fact * &fact);
        for k in [2 * s + 1, 2 * s + 2] {
            for n in 0..s {
                assert!(tables[k].values()[n].is_zero(), "k = {k}, n = {n}");
            }
            assert_eq!(tables[k].values()[s], lead, "k = {k}");
        }
    }
}

#[test]
fn recurrence_closure_for_formal_values() {
    let tables = AperyTables::new(8, 20);
    for k in 2..=8 {
        for n in 2..=20 {
            assert!(recurrence_defect(&tables, k, n).unwrap().is_zero(), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn formal_examples() {
    let pi2 = FormalNumber::pi2_pow(1);
    assert_eq!(j_formal(2, 0).unwrap().value, pi2.scale(&rat(1, 2)));
    assert_eq!(
        j_formal(3, 1).unwrap().value,
        FormalNumber::one() + FormalNumber::zeta_odd(3).scale(&rat(21, 2))
    );
    assert_eq!(j_formal(4, 0).unwrap().value, FormalNumber::pi2_pow(2).scale(&rat(1, 2)));
    // J_1(n) = 2^n n! / (2n+1)!!
    assert_eq!(j_formal(1, 3).unwrap().value, FormalNumber::from_rat(rat(16, 35)));
    // J_k(1) = J_{k-2}(0) + (3/4) J_k(0)
    for k in 4..=9 {
        let lhs = j_formal(k, 1).unwrap().value;
        let rhs = j_formal(k - 2, 0).unwrap().value + j_formal(k, 0).unwrap().value.scale(&rat(3, 4));
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

#[test]
fn formal_values_stay_within_weight() {
    for k in 1..=9 {
        for n in 0..=5 {
            let v = j_formal(k, n).unwrap().value;
            assert!(v.max_weight().unwrap_or(0) <= k as i64, "k = {k}, n = {n}");
            for m in v.terms().keys() {
                assert!(m.pi2_exponent() >= 0);
                assert!(m.zeta_exponents().values().sum::<u32>() <= 1);
            }
        }
    }
}

#[test]
fn small_l_formulas_agree_with_normalization() {
    for l in 2..=4 {
        for n in 0..=15 {
            assert_eq!(j_explicit_small_l(l, n).unwrap(), j_formal(l, n).unwrap().value, "l = {l}, n = {n}");
        }
    }
    assert_eq!(
        j_explicit_small_l(2, 1).unwrap(),
        FormalNumber::pi2_pow(1).scale(&rat(3, 8))
    );
    assert_eq!(j_explicit_small_l(3, 0).unwrap(), FormalNumber::zeta_odd(3).scale(&rat(14, 1)));
    assert!(matches!(j_explicit_small_l(5, 0), Err(AperyError::UnsupportedSmallL(5))));
}

#[test]
fn descent_relation_for_z_sums() {
    for parity in [Parity::Even, Parity::Odd] {
        for cutoff in [9, 15] {
            assert!(descent_relation_holds(parity, 3, 8, cutoff), "{parity:?} cutoff {cutoff}");
        }
    }
}

fn formal_f64(k: usize, n: usize) -> f64 {
    eval_formal(&j_formal(k, n).unwrap().value, Precision::new(128).unwrap()).re_f64()
}

#[test]
fn integral_route_matches_formal_values() {
    for k in 2..=5 {
        for n in 0..=3 {
            let numeric = j_numeric_integral(k, n).unwrap();
            let exact = formal_f64(k, n);
            assert!(((numeric - exact) / exact).abs() <= 1e-6, "k = {k}, n = {n}: {numeric} vs {exact}");
        }
    }
    assert!((j_numeric_integral(2, 0).unwrap() - 4.934_802_2).abs() < 1e-7);
    assert!((j_numeric_integral(3, 0).unwrap() - 16.828_796_6).abs() < 1e-6);
}

#[test]
fn series_route_matches_formal_values() {
    assert!((j_numeric_series(2, 0, 20_000).unwrap().accelerated - 4.934_802_2).abs() < 1e-6);
    assert!((j_numeric_series(3, 0, 4_000).unwrap().accelerated - 16.828_796_6).abs() < 1e-6);
    for (k, n) in [(3, 1), (4, 1), (4, 2), (5, 2), (6, 3)] {
        let est = j_numeric_series(k, n, 4_000).unwrap();
        let exact = formal_f64(k, n);
        assert!(((est.accelerated - exact) / exact).abs() < 1e-6, "k = {k}, n = {n}: {est:?} vs {exact}");
        assert!((est.partial - exact).abs() <= 2.0 * est.tail_bound, "k = {k}, n = {n}: {est:?} vs {exact}");
    }
    assert!(matches!(j_numeric_series(2, 0, 0), Err(AperyError::EmptySeries)));
}

#[test]
fn tables_export_exact_strings() {
    let t = jtilde(4, 3).unwrap();
    let csv = t.to_csv();
    assert!(csv.contains("907/576"), "{csv}");
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(json["values"][3], "907/576");
}

#[test]
fn spectral_params_validation() {
    assert!(SpectralParams::new(0.5, 1.0).is_err());
    let p = SpectralParams::new(3.0, 2.0).unwrap();
    assert!(p.epsilon() > 0.0 && p.epsilon() < 1.0 && p.kappa() > 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree_on_random_indices(k in 3usize..=10, n in 0usize..=30) {
        let table = jtilde(k, n.max(1)).unwrap();
        prop_assert_eq!(jtilde_explicit(k, n).unwrap(), table.values()[n].clone());
    }

    #[test]
    fn normalized_recurrence_holds(k in 2usize..=9, n in 2usize..=25) {
        let t = jtilde_cascade(k, n);
        let ni = n as i64;
        let lhs = rat(4 * ni * ni, 1) * &t[k].values()[n]
            - rat(8 * ni * ni - 8 * ni + 3, 1) * &t[k].values()[n - 1]
            + rat(4 * (ni - 1) * (ni - 1), 1) * &t[k].values()[n - 2];
        prop_assert_eq!(lhs, rat(4, 1) * &t[k - 2].values()[n - 1]);
    }
}
