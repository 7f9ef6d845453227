//! Factorization of polynomials over a subfield `GF(S)` of the ambient
//! finite field: distinct-degree followed by randomized equal-degree
//! splitting (Cantor-Zassenhaus).

use rand::Rng;

use super::field::Subfield;
use super::gf::Gf;
use super::poly::Poly;
use super::scalar::Scalar;

struct Sub {
    s: u128,
    char2: bool,
    /// `log2 S` in characteristic 2.
    bits: usize,
    gen: Gf,
}

impl Sub {
    fn new(sub: &Subfield) -> Sub {
        let Subfield::Ff { field, j } = sub else {
            panic!("finite subfield expected")
        };
        let l = field.characteristic();
        let s = (l as u128).pow(*j as u32);
        let gen = field.primitive_element().pow((field.size() - 1) / (s - 1));
        Sub {
            s,
            char2: l == 2,
            bits: *j,
            gen,
        }
    }

    fn random<R: Rng>(&self, rng: &mut R) -> Scalar {
        let k = rng.gen_range(0..self.s);
        if k == 0 {
            Scalar::Ff(Gf::zero(self.gen.field()))
        } else {
            Scalar::Ff(self.gen.pow(k - 1))
        }
    }
}

/// A uniformly random element of the finite subfield `sub`.
pub fn random_element<R: Rng>(sub: &Subfield, rng: &mut R) -> Scalar {
    Sub::new(sub).random(rng)
}

/// Monic irreducible factors of a squarefree polynomial with coefficients
/// in `sub`, sorted by degree and then coefficients.
pub fn factor_squarefree<R: Rng>(f: &Poly, sub: &Subfield, rng: &mut R) -> Vec<Poly> {
    let sub = Sub::new(sub);
    let mut out = Vec::new();
    let mut f = f.monic();
    let zero = f.scalar_zero().clone();
    let x = Poly::monomial(zero.one_like(), 1);
    let mut h = x.clone();
    let mut i = 0;
    while f.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(sub.s, &f);
        let g = f.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            equal_degree(&g, i, &sub, rng, &mut out);
            f = f.exact_div(&g).expect("gcd divides");
            h = h.rem(&f).expect("non-zero modulus");
        }
    }
    if f.degree().unwrap_or(0) > 0 {
        out.push(f);
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

fn equal_degree<R: Rng>(g: &Poly, d: usize, sub: &Sub, rng: &mut R, out: &mut Vec<Poly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.monic());
        return;
    }
    let zero = g.scalar_zero().clone();
    loop {
        let a = Poly::new((0..n).map(|_| sub.random(rng)).collect(), zero.clone());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if sub.char2 {
            // absolute trace from GF(S^d) to GF(2)
            let mut t = a.rem(g).unwrap();
            let mut acc = t.clone();
            for _ in 1..sub.bits * d {
                t = t.mul(&t).rem(g).unwrap();
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((S^d - 1)/2) as the product of the S^k-th powers of a^((S-1)/2)
            let c = a.powmod((sub.s - 1) / 2, g);
            let mut acc = c.clone();
            let mut t = c;
            for _ in 1..d {
                t = t.powmod(sub.s, g);
                acc = acc.mul(&t).rem(g).unwrap();
            }
            acc.sub(&Poly::constant(zero.one_like()))
        };
        let h = g.gcd(&b);
        let dh = h.degree().unwrap_or(0);
        if !h.is_zero() && dh > 0 && dh < n {
            equal_degree(&h, d, sub, rng, out);
            equal_degree(&g.exact_div(&h).unwrap(), d, sub, rng, out);
            return;
        }
    }
}

/// Distinct roots of `f` in `sub`, sorted.
pub fn roots<R: Rng>(f: &Poly, sub: &Subfield, rng: &mut R) -> Vec<Scalar> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let s = Sub::new(sub);
    let f = f.monic();
    let zero = f.scalar_zero().clone();
    let x = Poly::monomial(zero.one_like(), 1);
    let g = f.gcd(&x.powmod(s.s, &f).sub(&x));
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut lin = Vec::new();
    equal_degree(&g, 1, &s, rng, &mut lin);
    let mut r: Vec<Scalar> = lin.iter().map(|p| p.coeff(0).neg()).collect();
    r.sort();
    r
}
