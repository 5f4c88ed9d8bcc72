use ncho_apery::{jtilde_cascade, Parity};
use ncho_congruence::{
    binom_lemma_check, central_binom_experiment, congruence_sweep, conjecture_report, odd_congruence, ordp,
    ordp_bound_check, residue, weak_congruence, CongruenceError, DEFAULT_SIZE_CAP,
};
use ncho_numcore::{rat, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

const PRIMES: [u64; 14] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[test]
fn ordp_examples() {
    assert_eq!(ordp(&rat(41, 64), 3).unwrap(), 0);
    assert_eq!(ordp(&rat(907, 576), 3).unwrap(), -2);
    assert_eq!(ordp(&rat(9, 4), 3).unwrap(), 2);
    assert_eq!(ordp(&Rat::zero(), 3), Err(CongruenceError::ZeroValuation));
    assert_eq!(ordp(&rat(1, 1), 9), Err(CongruenceError::NotOddPrime(9)));
}

#[test]
fn residue_examples() {
    assert_eq!(residue(&rat(3, 4), 5, 1).unwrap(), 2);
    assert_eq!(residue(&rat(1, 1), 7, 2).unwrap(), 1);
    // brute force: the x in [0, 9) with 64 x = 41 mod 9
    let brute = (0..9u64).find(|x| (64 * x) % 9 == 41 % 9).unwrap();
    assert_eq!(residue(&rat(41, 64), 3, 2).unwrap(), brute);
    assert!(matches!(
        residue(&rat(1, 3), 3, 1),
        Err(CongruenceError::NotPIntegral { p: 3, ordp: -1 })
    ));
}

#[test]
fn weak_congruence_examples() {
    assert!(weak_congruence(5, 1, 1, 1).unwrap().holds);
    assert!(weak_congruence(7, 2, 1, 2).unwrap().holds);
    assert!(weak_congruence(3, 1, 2, 1).unwrap().holds);
    assert!(matches!(weak_congruence(5, 3, 1, 1), Err(CongruenceError::Hypothesis(_))));
}

/// Exact rational oracle: residues of the scaled table values for small indices.
#[test]
fn weak_congruence_residues_match_exact_tables() {
    let tables = jtilde_cascade(8, 75);
    for (p, m, n) in [(3u64, 1u64, 1u32), (3, 1, 2), (5, 1, 2), (5, 2, 1), (7, 3, 1), (5, 2, 2)] {
        let big = m * p.pow(n);
        let small = big / p;
        if big > 75 {
            continue;
        }
        for s in 1..=3usize {
            let k = 2 * s + 2;
            let scale = |e: u32| Rat::from_integer(BigInt::from(p).pow(2 * s as u32 * e));
            let lhs = residue(&(scale(n) * &tables[k].values()[big as usize]), p, n).unwrap();
            let rhs = residue(&(scale(n - 1) * &tables[k].values()[small as usize]), p, n).unwrap();
            let check = weak_congruence(p, m, s, n).unwrap();
            assert_eq!((check.lhs_residue, check.rhs_residue), (lhs, rhs), "p={p} m={m} n={n} s={s}");
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn proved_congruence_holds_on_full_sweep() {
    let report = congruence_sweep(&PRIMES, 3, 3, Parity::Even, DEFAULT_SIZE_CAP).unwrap();
    assert!(report.all_hold(), "failures: {:?}", report.failures);
    assert!(report.checked > 1000);
    for (p, m, n) in &report.skipped {
        assert!(m * p.pow(*n) > DEFAULT_SIZE_CAP);
    }
}

#[test]
fn odd_analogue_is_reported() {
    let check = odd_congruence(5, 1, 1, 2).unwrap();
    assert_eq!(check.parity, Parity::Odd);
    assert_eq!(check.holds, check.lhs_residue == check.rhs_residue);
}

#[test]
fn conjecture_examples() {
    assert!(conjecture_report(5, 1, 1, 2, Parity::Even).unwrap().all_pass());
    assert!(conjecture_report(3, 1, 1, 2, Parity::Odd).unwrap().all_pass());
    assert!(matches!(
        conjecture_report(3, 1, 4, 2, Parity::Even),
        Err(CongruenceError::Hypothesis(_))
    ));
}

#[test]
fn conjecture_report_is_decided_on_evidence_grid() {
    for p in [3u64, 5, 7, 11, 13] {
        for m in 1..=2 {
            for s in 1..=2 {
                for parity in [Parity::Even, Parity::Odd] {
                    let report = conjecture_report(p, m, s, 3, parity).unwrap();
                    assert_eq!(report.rows.len(), 2);
                    for row in &report.rows {
                        assert!(row.holds.is_some(), "undecided: {report:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn binomial_lemmas_hold_exhaustively() {
    for p in [3u64, 5, 7, 11, 13] {
        for m in 1..=6 {
            for n in 1..=3 {
                for j in 1..=30 {
                    assert!(binom_lemma_check(p, m, n, j).unwrap(), "p={p} m={m} n={n} j={j}");
                }
            }
        }
        for m in [7u64, 30] {
            for n in [4u32, 30] {
                for j in [1u64, 2, 3, 30] {
                    assert!(binom_lemma_check(p, m, n, j).unwrap(), "p={p} m={m} n={n} j={j}");
                }
            }
        }
    }
    assert!(binom_lemma_check(5, 1, 2, 1).unwrap());
    assert!(binom_lemma_check(7, 1, 1, 2).unwrap());
    assert!(binom_lemma_check(3, 2, 2, 3).unwrap());
}

#[test]
fn ordp_bound_holds_exhaustively() {
    for p in [3u64, 5, 7, 11, 13] {
        for n in 1..=4u32 {
            let limit = (p.pow(n + 1) - 1) / 2;
            for j in 0..limit.min(3000) {
                assert!(ordp_bound_check(p, n, j).unwrap(), "p={p} n={n} j={j}");
            }
        }
    }
    assert!(ordp_bound_check(3, 1, 1).unwrap());
    assert!(ordp_bound_check(5, 2, 12).unwrap());
    assert!(ordp_bound_check(7, 1, 3).unwrap());
    assert!(ordp_bound_check(3, 1, 4).is_err());
}

#[test]
fn central_binomial_proved_part() {
    assert!(central_binom_experiment(3, 10).unwrap().proved_all());
    assert!(central_binom_experiment(5, 10).unwrap().proved_all());
    let report = central_binom_experiment(7, 5).unwrap();
    assert!(report.proved_all());
    assert_eq!(report.rows.len(), 6);
    assert_eq!(report.rows[3].j_prime, 24);
}

proptest! {
    #[test]
    fn residue_round_trips(num in -10_000i64..10_000, den in 1i64..10_000, pi in 0usize..5, n in 1u32..5) {
        let p = [3u64, 5, 7, 11, 13][pi];
        let x = rat(num, den);
        prop_assume!(x.is_zero() || ordp(&x, p).unwrap() >= 0);
        let r = residue(&x, p, n).unwrap();
        let modulus = BigInt::from(p.pow(n));
        prop_assert!(BigInt::from(r) < modulus);
        let diff = x - Rat::from_integer(BigInt::from(r));
        prop_assert!(diff.is_zero() || ordp(&diff, p).unwrap() >= n as i64);
    }
}

