//! p-adic evaluation of `J~_k(N)` for large `N` via the explicit Z-sum
//! formula, without forming the exact rationals.

use ncho_apery::Parity;

use crate::padic::PAdic;

/// Exact zero for the p-adic accumulators.
fn exact_zero(p: u64) -> PAdic {
    PAdic::zero(p, i64::MAX / 4)
}

/// `u / v` for small integers, at relative precision `precision`.
fn ratio(p: u64, u: i64, v: i64, precision: u32) -> PAdic {
    PAdic::from_i64(p, u, precision).mul(&PAdic::from_i64(p, v, precision).inverse().expect("non-zero"))
}

/// `J~_{2s+2}(N)` (even) or `J~_{2s+1}(N)` (odd) for `s = 0..=s_max`.
///
/// The binomial weights `(-1)^k C(-1/2, k)^2 C(N, k)` and the Z-sums are
/// advanced together in one pass over `k = 0..=N`, so the cost is
/// `O(N s_max)` p-adic operations.
pub fn jtilde_padic(p: u64, parity: Parity, s_max: usize, big_n: u64, precision: u32) -> Vec<PAdic> {
    let one = PAdic::from_i64(p, 1, precision);
    let mut neg_half_sq = one; // C(-1/2, k)^2
    let mut binom = one; // C(N, k)
    let mut z: Vec<PAdic> = (0..=s_max)
        .map(|s| if s == 0 && parity == Parity::Even { one } else { exact_zero(p) })
        .collect();
    let mut acc = vec![exact_zero(p); s_max + 1];
    for k in 0..=big_n {
        let mut weight = neg_half_sq.mul(&binom);
        if k % 2 == 1 {
            weight = weight.neg();
        }
        for (a, zs) in acc.iter_mut().zip(&z) {
            if !zs.is_zero() {
                *a = a.add(&weight.mul(zs));
            }
        }
        if k == big_n {
            break;
        }
        let odd = 2 * k as i64 + 1;
        let inv_half_sq = ratio(p, 4, odd * odd, precision);
        match parity {
            Parity::Even => {
                for s in (1..=s_max).rev() {
                    let step = z[s - 1].mul(&inv_half_sq);
                    z[s] = z[s].sub(&step);
                }
            }
            Parity::Odd => {
                for s in (2..=s_max).rev() {
                    let step = z[s - 1].mul(&inv_half_sq);
                    z[s] = z[s].sub(&step);
                }
                if s_max >= 1 {
                    // 4 / ((2k+1)^3 C(-1/2, k)^2)
                    let base = ratio(p, 4, odd * odd * odd, precision).mul(&neg_half_sq.inverse().expect("non-zero"));
                    z[1] = z[1].sub(&base);
                }
            }
        }
        let step = ratio(p, odd, 2 * (k as i64 + 1), precision);
        neg_half_sq = neg_half_sq.mul(&step).mul(&step);
        binom = binom.mul(&ratio(p, (big_n - k) as i64, k as i64 + 1, precision));
    }
    if parity == Parity::Odd {
        // J~_1(N) = prod_{i<=N} 2i / (2i+1)
        acc[0] = (1..=big_n as i64).fold(one, |a, i| a.mul(&ratio(p, 2 * i, 2 * i + 1, precision)));
    }
    acc
}
