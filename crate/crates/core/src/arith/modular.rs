//! Reduction of cyclotomic integers modulo a prime `l = 1 mod n` and exact
//! recovery from the images under all embeddings `zeta_n -> w^a`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::cyclo::{cyclotomic_coeffs, Cyc};
use super::fp::mulm;
use super::ntheory::{inv_mod, is_prime, pow_mod, prime_factors, totient, units};
use crate::error::{Error, Result};

/// Bound on the power-basis coordinates of an algebraic integer of
/// `Q(zeta_n)` whose conjugates all have absolute value at most `emb`.
///
/// Coordinates are recovered from the conjugates by Lagrange interpolation
/// at the roots of `Phi_n`; the bound multiplies out the sizes of the
/// Lagrange basis using `Phi_n'(z) * G(z) = n z^(n-1)` with
/// `G = (X^n - 1) / Phi_n`.
pub fn coefficient_bound(n: u64, emb: &BigUint) -> BigUint {
    let phi_coeffs = cyclotomic_coeffs(n);
    let phi_l1: u64 = phi_coeffs.iter().map(|c| c.unsigned_abs()).sum();
    // coefficients of G = prod_{d | n, d < n} Phi_d
    let mut g: Vec<BigInt> = vec![BigInt::from(1)];
    for d in 1..n {
        if n.is_multiple_of(d) {
            let f = cyclotomic_coeffs(d);
            let mut out = vec![BigInt::zero(); g.len() + f.len() - 1];
            for (i, a) in g.iter().enumerate() {
                for (j, &b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            g = out;
        }
    }
    let g_l1: BigUint = g.iter().map(|c| c.magnitude().clone()).sum();
    let num = emb * BigUint::from(totient(n)) * BigUint::from(phi_l1) * g_l1;
    (num + BigUint::from(n - 1)) / BigUint::from(n)
}

/// Least prime `l = 1 mod n` with `l > min` accepted by `accept`.
pub fn prime_above(n: u64, min: &BigUint, accept: impl Fn(u64) -> bool) -> Result<u64> {
    let limit = 1u64 << 62;
    let Some(min) = min.to_u64().filter(|&m| m < limit) else {
        return Err(Error::SearchBudgetExhausted(
            "modular bound exceeds the 62-bit prime range".into(),
        ));
    };
    let mut l = (min / n + 1) * n + 1;
    while l < limit {
        if is_prime(l) && accept(l) {
            return Ok(l);
        }
        l += n;
    }
    Err(Error::SearchBudgetExhausted("no admissible prime".into()))
}

/// A primitive `n`-th root of unity mod `l`, `l = 1 mod n`: the first
/// `x^((l-1)/n)`, `x = 2, 3, ...`, of exact order `n`.
pub fn root_of_unity_mod(n: u64, l: u64) -> u64 {
    let fs = prime_factors(n);
    (2..l)
        .map(|x| pow_mod(x, (l - 1) / n, l))
        .find(|&w| fs.iter().all(|&r| pow_mod(w, n / r, l) != 1))
        .expect("l = 1 mod n")
}

/// Image of `c` under `zeta_n -> w^a` in `GF(l)`; `None` if a denominator
/// is divisible by `l`.
pub fn embed(c: &Cyc, l: u64, w: u64, a: u64) -> Option<u64> {
    let n = c.order();
    let x = pow_mod(w, a % n, l);
    let big_l = BigInt::from(l);
    let mut acc = 0u64;
    let mut xp = 1u64;
    for coef in c.coeffs() {
        if !coef.is_zero() {
            let num = (coef.numer() % &big_l + &big_l) % &big_l;
            let den = (coef.denom() % &big_l + &big_l) % &big_l;
            let num = num.to_u64().unwrap();
            let den = inv_mod(den.to_u64().unwrap(), l)?;
            acc = (acc + mulm(mulm(num, den, l), xp, l)) % l;
        }
        xp = mulm(xp, x, l);
    }
    Some(acc)
}

/// The element of `Z[zeta_n]` whose image under `zeta_n -> w^a` is
/// `values[i]` for `a = units(n)[i]`, assuming its coordinates lie in
/// `(-l/2, l/2)`.
pub fn interpolate(n: u64, l: u64, w: u64, values: &[u64]) -> Cyc {
    let us = units(n);
    assert_eq!(us.len(), values.len());
    let phi = us.len();
    let m: Vec<u64> = cyclotomic_coeffs(n)
        .iter()
        .map(|&c| c.rem_euclid(l as i64) as u64)
        .collect();
    let mut coords = vec![0u64; phi];
    for (&a, &v) in us.iter().zip(values) {
        if v == 0 {
            continue;
        }
        let x = pow_mod(w, a, l);
        // q = m / (X - x)
        let mut q = vec![0u64; phi];
        let mut carry = 0u64;
        for i in (0..phi).rev() {
            carry = (m[i + 1] + mulm(carry, x, l)) % l;
            q[i] = carry;
        }
        let qx = q.iter().rev().fold(0u64, |acc, &c| (mulm(acc, x, l) + c) % l);
        let f = mulm(v, inv_mod(qx, l).expect("distinct interpolation points"), l);
        for (c, &qi) in coords.iter_mut().zip(&q) {
            *c = (*c + mulm(f, qi, l)) % l;
        }
    }
    let half = l / 2;
    let ints = coords
        .into_iter()
        .map(|c| {
            let c = c as i64;
            let c = if c as u64 > half { c - l as i64 } else { c };
            num_rational::BigRational::from_integer(BigInt::from(c))
        })
        .collect();
    Cyc::from_coeffs(n, ints)
}
