//! Dense polynomials over a prime field `GF(l)`, coefficients as `u64`
//! residues, constant term first. Used to build extension fields and by the
//! modular routines.

use super::ntheory::{inv_mod, prime_factors};

#[inline]
pub fn mulm(a: u64, b: u64, l: u64) -> u64 {
    (a as u128 * b as u128 % l as u128) as u64
}

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % l)
        .collect();
    trim(out)
}

pub fn sub(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + l - b.get(i).copied().unwrap_or(0)) % l)
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, l)) % l;
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` non-zero.
pub fn divrem(a: &[u64], b: &[u64], l: u64) -> (Vec<u64>, Vec<u64>) {
    let db = deg(b).expect("division by the zero polynomial");
    let inv_lead = inv_mod(b[db], l).expect("leading coefficient invertible");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = mulm(r[i + db], inv_lead, l);
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + l - mulm(c, bj, l)) % l;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    divrem(a, b, l).1
}

pub fn monic(a: &[u64], l: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = inv_mod(lead, l).unwrap();
            a.iter().map(|&c| mulm(c, inv, l)).collect()
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, l);
        x = y;
        y = r;
    }
    monic(&x, l)
}

pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], l: u64) -> Vec<u64> {
    rem(&mul(a, b, l), m, l)
}

/// `base^e mod m`.
pub fn powmod(base: &[u64], mut e: u128, m: &[u64], l: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, l);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, l);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(&b, &b, m, l);
        }
    }
    rem(&acc, m, l)
}

/// Coefficients `c` with `target = sum c_i cols_i` mod `l`, if any.
pub fn solve(cols: &[Vec<u64>], target: &[u64], l: u64) -> Option<Vec<u64>> {
    let rows = target.len();
    let n = cols.len();
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = super::ntheory::inv_mod(m[r][c], l)?;
        for x in m[r].iter_mut() {
            *x = mulm(*x, inv, l);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..=n {
                    m[i][j] = (m[i][j] + l - mulm(f, m[r][j], l)) % l;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[n] != 0) {
        return None;
    }
    let mut x = vec![0u64; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n];
    }
    Some(x)
}

/// Rabin's irreducibility test for a monic `f` of degree `s >= 1`.
pub fn is_irreducible(f: &[u64], l: u64) -> bool {
    let s = match deg(f) {
        Some(s) if s >= 1 => s,
        _ => return false,
    };
    let x = vec![0u64, 1];
    let frob_pow = |k: usize| -> Vec<u64> {
        let mut y = x.clone();
        for _ in 0..k {
            y = powmod(&y, l as u128, f, l);
        }
        y
    };
    if sub(&frob_pow(s), &x, l).iter().any(|&c| c != 0) {
        return false;
    }
    for d in prime_factors(s as u64) {
        let y = frob_pow(s / d as usize);
        let g = gcd(&sub(&y, &x, l), f, l);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Monic irreducible polynomial of degree `s` over `GF(l)` whose coefficient
/// vector, read as base-`b` digits with the constant term least significant,
/// is least, where `b = min(l, 256)`. Capping the digits keeps large `l`
/// away from families like `X^4 + c` that may contain no irreducible member.
pub fn least_irreducible(l: u64, s: usize) -> Vec<u64> {
    if s == 1 {
        return vec![0, 1];
    }
    let b = l.min(256);
    let total = (b as u128).saturating_pow(s as u32);
    for k in 0..total {
        let mut f = vec![0u64; s + 1];
        let mut t = k;
        for c in f.iter_mut().take(s) {
            *c = (t % b as u128) as u64;
            t /= b as u128;
        }
        f[s] = 1;
        if f[0] == 0 {
            continue;
        }
        if is_irreducible(&f, l) {
            return f;
        }
    }
    unreachable!("a monic irreducible with small coefficients exists")
}

pub fn eval(a: &[u64], x: u64, l: u64) -> u64 {
    a.iter().rev().fold(0u64, |acc, &c| (mulm(acc, x, l) + c) % l)
}

/// Distinct roots of `f` in `GF(l)`, sorted; randomized splitting drawn
/// from `rng`.
pub fn roots<R: rand::Rng>(f: &[u64], l: u64, rng: &mut R) -> Vec<u64> {
    let f = trim(f.to_vec());
    if deg(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let f = monic(&f, l);
    if l < 64 {
        return (0..l).filter(|&x| eval(&f, x, l) == 0).collect();
    }
    let x = vec![0u64, 1];
    let xl = powmod(&x, l as u128, &f, l);
    let g = gcd(&f, &sub(&xl, &x, l), l);
    let mut out = Vec::new();
    split_linear(&g, l, rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear<R: rand::Rng>(g: &[u64], l: u64, rng: &mut R, out: &mut Vec<u64>) {
    match deg(g) {
        None | Some(0) => {}
        Some(1) => out.push((l - g[0] % l) % l),
        Some(d) => loop {
            let shift = rng.gen_range(0..l);
            let h = powmod(&[shift, 1], ((l - 1) / 2) as u128, g, l);
            let h = gcd(g, &sub(&h, &[1], l), l);
            let dh = deg(&h).unwrap_or(0);
            if dh > 0 && dh < d {
                split_linear(&h, l, rng, out);
                split_linear(&divrem(g, &h, l).0, l, rng, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn division() {
        let a = vec![1, 2, 3, 4];
        let b = vec![1, 1];
        let (q, r) = divrem(&a, &b, 7);
        assert_eq!(add(&mul(&q, &b, 7), &r, 7), a);
    }

    #[test]
    fn roots_large_prime() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let l = 1_000_003;
        // (X - 5)(X - 77)(X^2 + 1), and -1 is a non-residue mod l
        let f = mul(&mul(&[l - 5, 1], &[l - 77, 1], l), &[1, 0, 1], l);
        assert_eq!(roots(&f, l, &mut rng), vec![5, 77]);
        assert_eq!(roots(&[1, 0, 1], 7, &mut rng), Vec::<u64>::new());
        assert_eq!(roots(&[3, 0, 1], 7, &mut rng), vec![2, 5]);
    }
}
