//! Cyclotomic polynomials over the supported base fields: factorization by
//! Galois orbits of exponents, Newton power sums of the factors, and `p`-th
//! roots inside a subfield of the ambient field.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cyclo::{cyclotomic_coeffs, Cyc};
use super::ffactor;
use super::field::{AmbientKind, Base, FieldSpec};
use super::fp;
use super::modular::coefficient_bound;
use super::ntheory::{gcd, generated_subgroup, is_prime, mult_order, prime_factors, units};
use super::poly::{power_sums, Poly};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `Phi_n` over `Q`.
pub fn cyclotomic_poly(n: u64) -> Poly {
    let zero = Scalar::Cyc(Cyc::zero(1));
    Poly::new(cyclotomic_coeffs(n).iter().map(|&c| zero.int_like(c)).collect(), zero)
}

/// The subgroup `A` of `Z_u^*` induced by `Gal(F(omega)/F)`.
pub fn galois_subgroup(field: &FieldSpec, u: u64) -> Result<Vec<u64>> {
    let u = u.max(1);
    if u == 1 {
        return Ok(vec![1]);
    }
    match field {
        FieldSpec::Rationals => Ok(units(u)),
        FieldSpec::Cyclotomic(m) => {
            let g = gcd(*m, u);
            Ok(units(u).into_iter().filter(|a| a % g == 1 % g).collect())
        }
        FieldSpec::Finite { q, l, .. } => {
            if gcd(*q, u) != 1 {
                return Err(Error::NonCoprime(*l, u));
            }
            Ok(generated_subgroup(&[q % u], u))
        }
    }
}

#[derive(Clone, Debug)]
pub struct CycFactorization {
    pub n: u64,
    /// Monic irreducible factors over the base, one per orbit of exponents,
    /// ordered by least exponent.
    pub factors: Vec<Poly>,
    /// Exponent orbit of each factor; `orbits[0]` is the orbit of 1.
    pub orbits: Vec<Vec<u64>>,
    pub d: usize,
    /// `r_1 = 1, ..., r_d`: the orbit of the exponent 1.
    pub r_sequence: Vec<u64>,
}

impl CycFactorization {
    pub fn k(&self) -> usize {
        self.factors.len()
    }
}

/// Orbit of `j` under multiplication by the residues `a` (mod `n`), listed
/// by successive powers of the generators in the order first reached.
fn exponent_orbit(j: u64, a: &[u64], n: u64) -> Vec<u64> {
    let mut orbit = vec![j % n];
    let mut i = 0;
    while i < orbit.len() {
        for &g in a {
            let y = orbit[i] * g % n;
            if !orbit.contains(&y) {
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

/// Factors `Phi_n` over `base`; `n` must divide the exponent of the
/// ambient field. Each factor is the product of `X - zeta_n^j` over one
/// orbit and its coefficients are checked to lie in the base.
pub fn factor_cyclotomic(n: u64, base: &Base) -> Result<CycFactorization> {
    let amb = &base.amb;
    if !amb.u.is_multiple_of(n) {
        return Err(Error::BadParams(format!("ambient field lacks {n}-th roots of unity")));
    }
    if n == 1 {
        return Ok(CycFactorization {
            n,
            factors: vec![Poly::linear(&amb.one())],
            orbits: vec![vec![1]],
            d: 1,
            r_sequence: vec![1],
        });
    }
    let residues = base.residues(n);
    // successive powers of one generator per cyclic factor give a natural
    // order (1, q, q^2, ...) in the finite case
    let gens: Vec<u64> = match amb.kind {
        AmbientKind::Ff { .. } => base
            .gal
            .iter()
            .map(|g| g.au % n)
            .find(|&a| generated_subgroup(&[a], n.max(1)).len() == residues.len())
            .into_iter()
            .collect(),
        AmbientKind::Cyc { .. } => residues.clone(),
    };
    let mut covered = vec![false; n as usize];
    let mut orbits = Vec::new();
    for j in units(n) {
        if covered[(j % n) as usize] {
            continue;
        }
        let mut orbit = exponent_orbit(j, &gens, n);
        if matches!(amb.kind, AmbientKind::Cyc { .. }) {
            orbit.sort_unstable();
        }
        for &e in &orbit {
            covered[e as usize] = true;
        }
        orbits.push(orbit);
    }
    let zero = amb.zero();
    let mut factors = Vec::new();
    for orbit in &orbits {
        let roots: Vec<Scalar> = orbit
            .iter()
            .map(|&e| amb.root_of_unity((e * (amb.u / n)) as i64))
            .collect();
        let f = Poly::from_roots(&roots, &zero);
        if !f.coeffs().iter().all(|c| base.contains(c)) {
            return Err(Error::CoercionFailed(format!("factor of Phi_{n}")));
        }
        factors.push(f);
    }
    let d = orbits[0].len();
    if orbits.iter().any(|o| o.len() != d) {
        return Err(Error::VerificationFailed(format!("unequal factor degrees for Phi_{n}")));
    }
    let r_sequence = orbits[0].clone();
    Ok(CycFactorization {
        n,
        factors,
        orbits,
        d,
        r_sequence,
    })
}

/// `(P_0, ..., P_(p-1))`, `P_t` the sum of the `t`-th powers of the roots
/// of the monic `f`, by Newton's identities.
pub fn power_sums_from_factor(f: &Poly, p: u64) -> Result<Vec<Scalar>> {
    power_sums(f, p as usize)
}

/// All `mu` in `base` with `mu^p = lambda`, sorted. The count is 0, 1 or
/// `p`.
pub fn pth_roots_in_field(lambda: &Scalar, p: u64, base: &Base, seed: u64) -> Result<Vec<Scalar>> {
    if lambda.is_zero() {
        return Err(Error::ZeroInput);
    }
    let roots = match lambda {
        Scalar::Ff(_) => {
            let mut c = vec![lambda.zero_like(); p as usize + 1];
            c[0] = lambda.neg();
            c[p as usize] = lambda.one_like();
            let f = Poly::new(c, lambda.zero_like());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ffactor::roots(&f, &base.subfield(), &mut rng)
        }
        Scalar::Cyc(c) => cyclotomic_pth_roots(c, p, base)?,
    };
    for r in &roots {
        if &r.pow(p) != lambda || !base.contains(r) {
            return Err(Error::VerificationFailed(format!("{r} is not a {p}-th root")));
        }
    }
    if !(roots.len() <= 1 || roots.len() as u64 == p) {
        return Err(Error::VerificationFailed(format!("{} {p}-th roots", roots.len())));
    }
    Ok(roots)
}

const MAX_COMBINATIONS: usize = 200_000;

/// Primes scanned when looking for one of small splitting number.
const PRIME_CANDIDATES: usize = 64;

/// `GF(l^f) = GF(l)[Y]/(m)`.
struct Ext {
    l: u64,
    m: Vec<u64>,
    /// `l^f - 1`
    q1: BigUint,
}

impl Ext {
    fn new(l: u64, f: usize) -> Ext {
        Ext {
            l,
            m: fp::least_irreducible(l, f),
            q1: BigUint::from(l).pow(f as u32) - 1u32,
        }
    }

    fn norm(&self, a: &[u64]) -> Vec<u64> {
        fp::trim(fp::rem(a, &self.m, self.l))
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.norm(&fp::mul(a, b, self.l))
    }

    fn pow(&self, a: &[u64], e: &BigUint) -> Vec<u64> {
        let mut acc = vec![1u64];
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        self.norm(&acc)
    }

    fn is_one(&self, a: &[u64]) -> bool {
        a == [1]
    }

    fn inv(&self, a: &[u64]) -> Vec<u64> {
        self.pow(a, &(&self.q1 - 1u32))
    }

    /// `Y + k`, `k = 1, 2, ...`, reduced and non-zero.
    fn candidates(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (1..self.l).map(|k| self.norm(&[k, 1])).filter(|x| !x.is_empty())
    }

    /// All `p`-th roots of the non-zero `c`.
    fn pth_roots(&self, c: &[u64], p: u64) -> Vec<Vec<u64>> {
        let pb = BigUint::from(p);
        if (&self.q1 % &pb).is_zero() {
            if !self.is_one(&self.pow(c, &(&self.q1 / &pb))) {
                return Vec::new();
            }
        } else {
            let e = mod_inverse(&pb, &self.q1);
            return vec![self.pow(c, &e)];
        }
        // q1 = p^s t; r1 = c^(1/p mod t) satisfies r1^p / c in the p-Sylow
        // subgroup P = <y>, and is corrected there by a discrete logarithm.
        let mut s = 0u32;
        let mut t = self.q1.clone();
        while (&t % &pb).is_zero() {
            t /= &pb;
            s += 1;
        }
        let r1 = if t.is_one() {
            vec![1]
        } else {
            self.pow(c, &mod_inverse(&pb, &t))
        };
        let h = self.mul(&self.pow(&r1, &pb), &self.inv(c));
        let target = self.inv(&h);
        let z = self
            .candidates()
            .find(|x| !self.is_one(&self.pow(x, &(&self.q1 / &pb))))
            .expect("non-residues exist");
        let y = self.pow(&z, &t);
        let y_inv = self.inv(&y);
        let gamma = self.pow(&y, &pb.pow(s - 1));
        let mut e = BigUint::zero();
        let mut scale = BigUint::one();
        for i in 0..s {
            let rest = self.mul(&target, &self.pow(&y_inv, &e));
            let delta = self.pow(&rest, &pb.pow(s - 1 - i));
            let d = (0..p)
                .find(|&d| self.pow(&gamma, &BigUint::from(d)) == delta)
                .expect("element of the p-Sylow subgroup");
            e += &scale * d;
            scale *= &pb;
        }
        debug_assert!((&e % &pb).is_zero());
        let root = self.mul(&r1, &self.pow(&y, &(e / &pb)));
        let mut out = Vec::with_capacity(p as usize);
        let mut cur = root;
        for _ in 0..p {
            out.push(cur.clone());
            cur = self.mul(&cur, &gamma);
        }
        out
    }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    use num_integer::Integer;
    let (a, m) = (BigInt::from(a.clone()), BigInt::from(m.clone()));
    let g = a.extended_gcd(&m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(&m).to_biguint().unwrap()
}

fn reduce_mod(x: &BigInt, l: u64) -> u64 {
    use num_integer::Integer;
    x.mod_floor(&BigInt::from(l)).to_u64().unwrap()
}

/// Least `d` with `d^p` divisible by `den`, as far as trial division
/// factors `den`; an unfactored cofactor is kept whole.
fn root_denominator(den: &BigInt, p: u64) -> BigInt {
    let mut rest = den.clone();
    let mut d = BigInt::one();
    let mut q = 2u64;
    while q < 1 << 20 && BigInt::from(q) * BigInt::from(q) <= rest {
        let bq = BigInt::from(q);
        let mut e = 0u64;
        while (&rest % &bq).is_zero() {
            rest /= &bq;
            e += 1;
        }
        d *= bq.pow(e.div_ceil(p) as u32);
        q += 1;
    }
    d * rest
}

/// Characteristic 0: with `D` the least integer making `D^p lambda`
/// integral, `beta = D mu` is an algebraic integer with `beta^p = D^p lambda`. Its conjugates are
/// bounded, hence so are its coordinates, and it is recovered from its
/// images in `GF(l^f)` for a prime `l` above twice that bound with
/// `f = ord_n(l)`. An image is a root of `X^p - lambda`; it is constant on
/// cosets of the group fixing the subfield and Frobenius relates the images
/// along powers of `l`, so one choice per coset of `<l, fixing>` remains.
fn cyclotomic_pth_roots(lambda: &Cyc, p: u64, base: &Base) -> Result<Vec<Scalar>> {
    let n = lambda.order();
    let den = root_denominator(&lambda.denominator(), p);
    let big = lambda.scale(&BigRational::from_integer(den.pow(p as u32)));
    let l1 = big.l1_norm().to_integer();
    let emb = BigUint::try_from(l1.abs()).unwrap().nth_root(p as u32) + BigUint::one();
    let bound = coefficient_bound(n, &emb);
    let fixing = match &base.subfield() {
        super::field::Subfield::Cyc { group, .. } => group.clone(),
        _ => unreachable!(),
    };
    let us = units(n);
    let phi = us.len();
    let min = (bound * 2u32 + 2u32)
        .to_u64()
        .filter(|&m| m < 1 << 62)
        .ok_or_else(|| Error::SearchBudgetExhausted("modular bound exceeds the 62-bit prime range".into()))?;
    // primes by the number of cosets of <l, fixing> in Z_n^*
    let mut primes = Vec::new();
    let mut l = min.max(3);
    while primes.len() < PRIME_CANDIDATES {
        if is_prime(l) && !n.is_multiple_of(l) && !(&den % BigInt::from(l)).is_zero() {
            let mut gens = fixing.clone();
            gens.push(l % n.max(1));
            let cosets = phi / generated_subgroup(&gens, n).len().max(1);
            primes.push((cosets, l));
            if cosets == 1 {
                break;
            }
        }
        l += 1;
    }
    primes.sort_unstable();
    for &(_, l) in &primes {
        if let Some(found) = roots_via_prime(lambda, &big, &den, p, base, &fixing, l)? {
            return Ok(found);
        }
    }
    Err(Error::SearchBudgetExhausted(
        "no prime with non-vanishing images".into(),
    ))
}

/// `None` when some image of `beta` vanishes mod `l`.
fn roots_via_prime(
    lambda: &Cyc,
    big: &Cyc,
    den: &BigInt,
    p: u64,
    base: &Base,
    fixing: &[u64],
    l: u64,
) -> Result<Option<Vec<Scalar>>> {
    let n = lambda.order();
    let us = units(n);
    let phi = us.len();
    let f = if n <= 2 { 1 } else { mult_order(l % n, n) as usize };
    let ext = Ext::new(l, f);
    let nb = BigUint::from(n);
    let fs = prime_factors(n);
    let w = ext
        .candidates()
        .map(|x| ext.pow(&x, &(&ext.q1 / &nb)))
        .find(|w| fs.iter().all(|&r| !ext.is_one(&ext.pow(w, &BigUint::from(n / r)))))
        .expect("GF(l^f) contains the n-th roots of unity");
    // coordinates of w^(a j), j < phi, for every unit a
    let mut wpow: Vec<Vec<Vec<u64>>> = Vec::with_capacity(phi);
    for &a in &us {
        let wa = ext.pow(&w, &BigUint::from(a));
        let mut row = Vec::with_capacity(phi);
        let mut cur = vec![1u64];
        for _ in 0..phi {
            row.push(cur.clone());
            cur = ext.mul(&cur, &wa);
        }
        wpow.push(row);
    }
    let beta: Vec<u64> = big.coeffs().iter().map(|c| reduce_mod(&c.to_integer(), l)).collect();
    let image = |ai: usize, v: &[u64]| -> Vec<u64> {
        let mut acc: Vec<u64> = Vec::new();
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                acc = fp::add(
                    &acc,
                    &wpow[ai][j].iter().map(|&x| fp::mulm(x, c, l)).collect::<Vec<_>>(),
                    l,
                );
            }
        }
        fp::trim(acc)
    };
    // unit index -> (coset, Frobenius power)
    let index_of = |a: u64| us.iter().position(|&b| b == a % n.max(1)).unwrap();
    let mut place: Vec<Option<(usize, usize)>> = vec![None; phi];
    let mut reps = Vec::new();
    for ai in 0..phi {
        if place[ai].is_some() {
            continue;
        }
        let r = reps.len();
        reps.push(ai);
        let mut x = us[ai];
        for j in 0..f {
            for &b in fixing {
                let k = index_of(x * b);
                if place[k].is_none() {
                    place[k] = Some((r, j));
                }
            }
            x = x * l % n.max(1);
        }
    }
    let mut choices = Vec::with_capacity(reps.len());
    for &ai in &reps {
        let c = image(ai, &beta);
        if c.is_empty() {
            return Ok(None);
        }
        let roots = ext.pth_roots(&c, p);
        if roots.is_empty() {
            return Ok(Some(Vec::new()));
        }
        choices.push(roots);
    }
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    if total.is_none_or(|t| t > MAX_COMBINATIONS) {
        return Err(Error::SearchBudgetExhausted("too many local root combinations".into()));
    }
    // linear system: sum_j x_j w^(a j) = value_a, coordinatewise over GF(l)
    let cols: Vec<Vec<u64>> = (0..phi)
        .map(|j| (0..phi).flat_map(|ai| padded(&wpow[ai][j], f)).collect())
        .collect();
    let frob = |v: &[u64], j: usize| -> Vec<u64> { ext.pow(v, &BigUint::from(l).pow(j as u32)) };
    let inv_den = BigRational::new(BigInt::one(), den.clone());
    let half = l / 2;
    let mut found: Vec<Scalar> = Vec::new();
    let mut idx = vec![0usize; reps.len()];
    loop {
        let target: Vec<u64> = (0..phi)
            .flat_map(|ai| {
                let (r, j) = place[ai].unwrap();
                padded(&frob(&choices[r][idx[r]], j), f)
            })
            .collect();
        if let Some(x) = fp::solve(&cols, &target, l) {
            let ints = x
                .into_iter()
                .map(|c| {
                    let c = if c > half { c as i128 - l as i128 } else { c as i128 };
                    BigRational::from_integer(BigInt::from(c))
                })
                .collect();
            let mu = Cyc::from_coeffs(n, ints).scale(&inv_den);
            if mu.pow(p) == *lambda {
                let s = Scalar::Cyc(mu);
                if base.contains(&s) && !found.contains(&s) {
                    found.push(s);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == idx.len() {
                found.sort();
                return Ok(Some(found));
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn padded(v: &[u64], f: usize) -> Vec<u64> {
    let mut out = v.to_vec();
    out.resize(f, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::Ambient;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn cyclotomic_polys() {
        let z = Scalar::Cyc(Cyc::zero(1));
        let ints = |v: &[i64]| Poly::new(v.iter().map(|&c| z.int_like(c)).collect(), z.clone());
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(5), ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn galois_subgroups() {
        assert_eq!(galois_subgroup(&q(), 7).unwrap(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(
            galois_subgroup(&FieldSpec::finite(2).unwrap(), 7).unwrap(),
            vec![1, 2, 4]
        );
        assert_eq!(galois_subgroup(&FieldSpec::Cyclotomic(12), 12).unwrap(), vec![1]);
        assert!(galois_subgroup(&FieldSpec::finite(7).unwrap(), 21).is_err());
        for (f, u) in [
            (q(), 12),
            (FieldSpec::Cyclotomic(3), 12),
            (FieldSpec::finite(5).unwrap(), 12),
        ] {
            let amb = Ambient::new(&f, u).unwrap();
            assert_eq!(amb.residues(), galois_subgroup(&f, u).unwrap());
        }
    }

    #[test]
    fn factorizations() {
        let b = Base::of(&FieldSpec::finite(2).unwrap(), 7).unwrap();
        let f = factor_cyclotomic(7, &b).unwrap();
        assert_eq!((f.d, f.k()), (3, 2));
        assert_eq!(f.r_sequence, vec![1, 2, 4]);
        let b = Base::of(&q(), 3).unwrap();
        let f = factor_cyclotomic(3, &b).unwrap();
        assert_eq!((f.d, f.k()), (2, 1));
        let sums = power_sums_from_factor(&f.factors[0], 3).unwrap();
        let expect: Vec<Scalar> = [2, -1, -1].iter().map(|&k| b.amb.int(k)).collect();
        assert_eq!(sums, expect);
    }

    #[test]
    fn pth_roots() {
        let b = Base::of(&FieldSpec::Cyclotomic(5), 5).unwrap();
        assert_eq!(pth_roots_in_field(&b.one(), 5, &b, 0).unwrap().len(), 5);
        let b = Base::of(&q(), 2).unwrap();
        assert!(pth_roots_in_field(&b.amb.int(-1), 2, &b, 0).unwrap().is_empty());
        let b = Base::of(&q(), 12).unwrap();
        let r = pth_roots_in_field(&b.amb.int(-8), 3, &b, 0).unwrap();
        assert_eq!(r, vec![b.amb.int(-2)]);
        let r = pth_roots_in_field(&b.amb.ratio(9, 4), 2, &b, 0).unwrap();
        assert_eq!(r, vec![b.amb.ratio(-3, 2), b.amb.ratio(3, 2)]);
        assert!(pth_roots_in_field(&b.amb.int(2), 2, &b, 0).unwrap().is_empty());
        // sqrt(3) lies in Q(zeta_12) but not in Q
        let full = b.restrict(|g| g.raw == 1);
        assert_eq!(pth_roots_in_field(&b.amb.int(3), 2, &full, 0).unwrap().len(), 2);
        let bp = Base::of(&FieldSpec::Cyclotomic(5), 5).unwrap();
        let zeta = bp.amb.root_of_unity(1);
        assert!(pth_roots_in_field(&zeta, 5, &bp, 0).unwrap().is_empty());
        assert_eq!(pth_roots_in_field(&b.zero(), 2, &b, 0), Err(Error::ZeroInput));
    }
}
