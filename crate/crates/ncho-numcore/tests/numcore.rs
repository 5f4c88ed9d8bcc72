use ncho_numcore::bigcomplex::bigfloat_to_f64;
use ncho_numcore::rational::{binomial, central_binomial};
use ncho_numcore::{
    bernoulli_number, eval_formal, formal_arith, rat, zeta_half, BigComplex, ConstMonomial, FormalNumber,
    FormalOp, NumError, Precision, Rat,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// pi by Machin's formula in exact rationals, accurate to about 2^-(3*terms).
fn machin_pi(terms: usize) -> Rat {
    let arctan_inv = |x: i64| {
        let mut acc = Rat::zero();
        let x2 = rat(x * x, 1);
        let mut power = rat(1, x);
        for k in 0..terms {
            let term = &power / rat(2 * k as i64 + 1, 1);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            power /= &x2;
        }
        acc
    };
    rat(16, 1) * arctan_inv(5) - rat(4, 1) * arctan_inv(239)
}

/// zeta(3) = (5/2) sum (-1)^(n+1) / (n^3 C(2n, n)), exact partial sum.
fn zeta3_fast(terms: u64) -> Rat {
    let mut acc = Rat::zero();
    for n in 1..=terms {
        let den = BigInt::from(n * n * n) * BigInt::from(central_binomial(n));
        let term = Rat::new(BigInt::one(), den);
        if n % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc * rat(5, 2)
}

fn prec(bits: usize) -> Precision {
    Precision::new(bits).unwrap()
}

fn rel_close(a: &BigComplex, b: &Rat, rel: f64) -> bool {
    let diff = a - &BigComplex::from_rat(b, a.precision());
    let scale = BigComplex::from_rat(b, a.precision()).abs_f64().max(1e-300);
    diff.abs_f64() / scale <= rel
}

#[test]
fn bernoulli_examples() {
    assert_eq!(bernoulli_number(0), rat(1, 1));
    assert_eq!(bernoulli_number(1), rat(-1, 2));
    assert_eq!(bernoulli_number(2), rat(1, 6));
    assert_eq!(bernoulli_number(4), rat(-1, 30));
    assert_eq!(bernoulli_number(12), rat(-691, 2730));
}

#[test]
fn bernoulli_recurrence_holds() {
    for n in 1..40u64 {
        let mut acc = Rat::zero();
        for j in 0..=n {
            acc += Rat::from_integer(BigInt::from(binomial(n + 1, j))) * bernoulli_number(j as usize);
        }
        assert!(acc.is_zero(), "recurrence fails at n = {n}");
    }
}

#[test]
fn zeta_half_examples() {
    assert_eq!(
        zeta_half(2).unwrap(),
        FormalNumber::monomial(rat(1, 2), ConstMonomial::pi2_pow(1))
    );
    assert_eq!(
        zeta_half(3).unwrap(),
        FormalNumber::monomial(rat(7, 1), ConstMonomial::zeta(3))
    );
    assert_eq!(
        zeta_half(4).unwrap(),
        FormalNumber::monomial(rat(1, 6), ConstMonomial::pi2_pow(2))
    );
    assert_eq!(zeta_half(1), Err(NumError::ZetaArgument(1)));
}

#[test]
fn zeta_half_has_single_term_of_expected_shape() {
    for k in 2..=16i64 {
        let z = zeta_half(k).unwrap();
        assert_eq!(z.len(), 1);
        let (m, _) = z.terms().iter().next().unwrap();
        if k % 2 == 0 {
            assert_eq!(*m, ConstMonomial::pi2_pow(k as i32 / 2));
        } else {
            assert_eq!(*m, ConstMonomial::zeta(k as u32));
        }
    }
}

#[test]
fn formal_arith_examples() {
    let pi2 = FormalNumber::pi2_pow(1);
    let a = &pi2 + &FormalNumber::from_int(2);
    let sum = formal_arith(&a, &(-&pi2), FormalOp::Add).unwrap();
    assert_eq!(sum, FormalNumber::from_int(2));

    let half_pi2 = pi2.scale(&rat(1, 2));
    let prod = formal_arith(&half_pi2, &half_pi2, FormalOp::Mul).unwrap();
    assert_eq!(prod, FormalNumber::pi2_pow(2).scale(&rat(1, 4)));

    let half_pi4 = FormalNumber::pi2_pow(2).scale(&rat(1, 2));
    let quotient = formal_arith(&half_pi4, &half_pi2, FormalOp::DivByMonomial).unwrap();
    assert_eq!(quotient, pi2);

    let two_terms = &pi2 + &FormalNumber::one();
    assert_eq!(
        formal_arith(&pi2, &two_terms, FormalOp::DivByMonomial),
        Err(NumError::NonMonomialDivisor(2))
    );
}

#[test]
fn eval_formal_examples() {
    let p = prec(256);
    let one = eval_formal(&FormalNumber::one(), p);
    assert!(rel_close(&one, &rat(1, 1), 1e-70));

    let pi = machin_pi(80);
    let half_pi2 = eval_formal(&zeta_half(2).unwrap(), p);
    assert!(rel_close(&half_pi2, &(&pi * &pi / rat(2, 1)), 1e-70));
    assert!((half_pi2.re_f64() - 4.934_802_200_544_679).abs() < 1e-14);

    let seven_zeta3 = eval_formal(&zeta_half(3).unwrap(), p);
    assert!(rel_close(&seven_zeta3, &(zeta3_fast(130) * rat(7, 1)), 1e-70));
    assert!((seven_zeta3.re_f64() - 8.414_398_322_117_16).abs() < 1e-12);
}

#[test]
fn eval_formal_meets_precision_contract() {
    // relative error 2^(8 - bits) against the exact-series oracle
    for bits in [64usize, 128, 200, 320] {
        let value = eval_formal(&FormalNumber::zeta_odd(3), prec(bits));
        let tol = 2f64.powi(8 - bits as i32);
        assert!(rel_close(&value, &zeta3_fast(200), tol), "bits = {bits}");
    }
}

#[test]
fn eval_zeta_half_matches_direct_sums() {
    // f64 oracle: partial sum plus Euler-Maclaurin tail with N = 2000
    for k in 2..=12i32 {
        let n_cut = 2000.0f64;
        let mut s = 0.0;
        for n in (1..2000).rev() {
            s += (n as f64).powi(-k);
        }
        s += n_cut.powi(1 - k) / (k as f64 - 1.0) + 0.5 * n_cut.powi(-k) + k as f64 / 12.0 * n_cut.powi(-k - 1);
        let oracle = (2f64.powi(k) - 1.0) * s;
        let value = eval_formal(&zeta_half(k as i64).unwrap(), prec(128)).re_f64();
        assert!((value - oracle).abs() / oracle < 1e-13, "k = {k}");
    }
}

#[test]
fn numeric_zeta_cache_is_deterministic() {
    let a = ncho_numcore::riemann_zeta_numeric(5, 192);
    let b = ncho_numcore::riemann_zeta_numeric(5, 192);
    assert_eq!(bigfloat_to_f64(&a), bigfloat_to_f64(&b));
    assert!((bigfloat_to_f64(&a) - 1.036_927_755_143_37).abs() < 1e-14);
}

fn small_formal() -> impl Strategy<Value = FormalNumber> {
    let term = (-6i64..6, 1i64..5, -2i32..3, 0u32..3).prop_map(|(n, d, a, z)| {
        let mut m = FormalNumber::pi2_pow(a);
        if z > 0 {
            m = &m * &FormalNumber::zeta_odd(2 * z + 1);
        }
        m.scale(&rat(n, d))
    });
    prop::collection::vec(term, 0..4).prop_map(|ts| ts.iter().fold(FormalNumber::zero(), |acc, t| &acc + t))
}

proptest! {
    #[test]
    fn ring_laws_hold(a in small_formal(), b in small_formal(), c in small_formal()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn no_zero_coefficients_survive(a in small_formal(), b in small_formal()) {
        let s = &a + &b;
        prop_assert!(s.terms().values().all(|c| !c.is_zero()));
    }

    #[test]
    fn division_inverts_pi_monomials(a in small_formal(), n in 1i64..7, d in 1i64..7, e in -3i32..4) {
        let m = FormalNumber::pi2_pow(e).scale(&rat(n, d));
        let q = (&a * &m).div_by_monomial(&m).unwrap();
        prop_assert_eq!(q, a);
    }
}
