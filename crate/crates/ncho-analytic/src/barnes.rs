//! Barnes double Bernoulli polynomials from their generating function
//! `t^2 e^{z t} / ((e^{w1 t} - 1)(e^{w2 t} - 1))`.

use ncho_numcore::rational::factorial;
use ncho_numcore::{BigComplex, Rat};
use num_bigint::BigInt;

fn fact(n: usize) -> Rat {
    Rat::from_integer(BigInt::from(factorial(n as u64)))
}

/// Taylor coefficients of `e^{z t}` up to `t^{len-1}`.
fn exp_series(z: &BigComplex, len: usize) -> Vec<BigComplex> {
    let prec = z.precision();
    let mut out = Vec::with_capacity(len);
    let mut power = BigComplex::one(prec);
    for j in 0..len {
        out.push(power.scale_rat(&fact(j).recip()));
        power = &power * z;
    }
    out
}

/// Taylor coefficients of `(e^{w t} - 1) / t`.
fn divided_exp_series(w: &BigComplex, len: usize) -> Vec<BigComplex> {
    let mut out = Vec::with_capacity(len);
    let mut power = w.clone();
    for j in 0..len {
        out.push(power.scale_rat(&fact(j + 1).recip()));
        power = &power * w;
    }
    out
}

fn convolve(a: &[BigComplex], b: &[BigComplex]) -> Vec<BigComplex> {
    let prec = a[0].precision();
    (0..a.len())
        .map(|j| {
            (0..=j).fold(BigComplex::zero(prec), |acc, i| &acc + &(&a[i] * &b[j - i]))
        })
        .collect()
}

/// `B_{2,m}(z | (w1, w2))` by power-series division.
pub fn barnes_b(m: usize, z: &BigComplex, w1: &BigComplex, w2: &BigComplex) -> BigComplex {
    let len = m + 1;
    let numer = exp_series(z, len);
    let denom = convolve(&divided_exp_series(w1, len), &divided_exp_series(w2, len));
    let lead = denom[0].recip();
    let mut quotient: Vec<BigComplex> = Vec::with_capacity(len);
    for j in 0..len {
        let mut acc = numer[j].clone();
        for i in 1..=j {
            acc = &acc - &(&denom[i] * &quotient[j - i]);
        }
        quotient.push(&acc * &lead);
    }
    quotient[m].scale_rat(&fact(m))
}
