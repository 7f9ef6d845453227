//! Small integer number theory used throughout: gcd/lcm, totients, primes,
//! multiplicative orders and unit groups of `Z/nZ`.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// If `q = l^r` for a prime `l`, returns `(l, r)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let l = f[0];
    let mut r = 0;
    let mut m = q;
    while m.is_multiple_of(l) {
        m /= l;
        r += 1;
    }
    Some((l, r))
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m` (`gcd(a, m) = 1` required).
pub fn mult_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    debug_assert_eq!(gcd(a, m), 1);
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

/// Units of `Z/nZ` in increasing order. For `n = 1` this is `[1]`, the
/// residue of the identity automorphism.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// Least primitive root modulo a prime `l`.
pub fn primitive_root(l: u64) -> u64 {
    if l == 2 {
        return 1;
    }
    let fs = prime_factors(l - 1);
    (2..l)
        .find(|&g| fs.iter().all(|&f| pow_mod(g, (l - 1) / f, l) != 1))
        .expect("prime modulus has a primitive root")
}

/// Subgroup of `Z_n^*` generated by the given residues, sorted.
pub fn generated_subgroup(gens: &[u64], n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    let mut seen = vec![false; n as usize];
    seen[1] = true;
    let mut out = vec![1u64];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &g in gens {
            let y = (x as u128 * g as u128 % n as u128) as u64;
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Integer `k`-th root of `n`, rounded down.
pub fn iroot_floor(n: &num_bigint::BigUint, k: u32) -> num_bigint::BigUint {
    n.nth_root(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(1), 1);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(units(7), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(generated_subgroup(&[2], 7), vec![1, 2, 4]);
        assert!(is_prime(2) && is_prime(97) && !is_prime(91) && !is_prime(1));
        assert!(is_prime((1 << 61) - 1) && !is_prime(3215031751));
    }
}
