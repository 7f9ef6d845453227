use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use wedderburn::arith::cyclotomic::{cyclotomic_poly, factor_cyclotomic, power_sums_from_factor, pth_roots_in_field};
use wedderburn::arith::ntheory::{gcd, is_prime, totient};
use wedderburn::arith::{Base, Cyc, FieldSpec, Gf, GfField, Poly, Scalar};

fn cyc(n: u64, coords: &[(i64, i64)]) -> Cyc {
    let phi = totient(n) as usize;
    let v = (0..phi)
        .map(|i| {
            let (a, b) = coords[i % coords.len()];
            BigRational::new(BigInt::from(a), BigInt::from(b))
        })
        .collect();
    Cyc::from_coeffs(n, v)
}

fn coords() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-50i64..50, 1i64..12), 1..8)
}

fn unit(n: u64, a: u64) -> u64 {
    (a..a + n).find(|&b| gcd(b % n, n) == 1).unwrap() % n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_axioms(n in 1u64..40, a in coords(), b in coords(), c in coords()) {
        let (a, b, c) = (cyc(n, &a), cyc(n, &b), cyc(n, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_maps_compose(n in 3u64..40, x in coords(), y in coords(), a in 1u64..40, b in 1u64..40) {
        let (a, b) = (unit(n, a), unit(n, b));
        let (x, y) = (cyc(n, &x), cyc(n, &y));
        prop_assert_eq!(x.galois(b).galois(a), x.galois(a * b % n));
        prop_assert_eq!(x.mul(&y).galois(a), x.galois(a).mul(&y.galois(a)));
        prop_assert_eq!(x.add(&y).galois(a), x.galois(a).add(&y.galois(a)));
    }

    #[test]
    fn promotion_preserves_products(n in 1u64..16, k in 1u64..4, x in coords(), y in coords()) {
        let (x, y) = (cyc(n, &x), cyc(n, &y));
        prop_assert_eq!(x.mul(&y).promote(n * k), x.promote(n * k).mul(&y.promote(n * k)));
    }

    #[test]
    fn finite_field_axioms(pick in 0usize..6, a in 0u128..10_000, b in 0u128..10_000, c in 0u128..10_000) {
        let (l, s) = [(2, 3), (3, 2), (5, 1), (7, 2), (11, 2), (2, 6)][pick];
        let f = GfField::get(l, s);
        let q = f.size();
        let (a, b, c) = (f.element(a % q), f.element(b % q), f.element(c % q));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).frobenius(1), a.frobenius(1).mul(&b.frobenius(1)));
        prop_assert_eq!(a.pow(q), a.clone());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn pth_roots_contain_the_root(m in prop::sample::select(vec![1u64, 3, 4, 5, 7, 8, 12]), p in prop::sample::select(vec![2u64, 3, 5]), x in coords()) {
        let u = m * p;
        let base = Base::of(&FieldSpec::Cyclotomic(m), u).unwrap();
        let mu = base.amb.from_cyc(&cyc(m, &x));
        prop_assume!(!mu.is_zero());
        let lambda = mu.pow(p);
        let roots = pth_roots_in_field(&lambda, p, &base, 0).unwrap();
        prop_assert!(roots.contains(&mu));
        prop_assert!(roots.len() == 1 || roots.len() == p as usize);
        prop_assert!(roots.iter().all(|r| r.pow(p) == lambda));
    }
}

fn bases(n: u64) -> Vec<Base> {
    let mut specs = vec![
        FieldSpec::Rationals,
        FieldSpec::Cyclotomic(3),
        FieldSpec::Cyclotomic(4),
        FieldSpec::Cyclotomic(n),
    ];
    for q in [2u64, 3, 4, 5, 7, 9, 11, 13, 25, 49] {
        if gcd(q, n) == 1 {
            specs.push(FieldSpec::finite(q).unwrap());
        }
    }
    specs.iter().map(|s| Base::of(s, n).unwrap()).collect()
}

fn in_ambient(f: &Poly, base: &Base) -> Poly {
    f.map(|c| base.amb.from_cyc(c.as_cyc()))
}

#[test]
fn cyclotomic_factorizations_multiply_back() {
    for n in 1..=30u64 {
        for base in bases(n) {
            let fac = factor_cyclotomic(n, &base).unwrap();
            let one = Poly::constant(base.one());
            let prod = fac.factors.iter().fold(one, |acc, f| acc.mul(f));
            assert_eq!(prod, in_ambient(&cyclotomic_poly(n), &base), "n={n}");
            assert!(fac.factors.iter().all(|f| f.degree() == Some(fac.d) && f.is_monic()));
            assert_eq!(fac.d * fac.k(), totient(n) as usize);
            assert!(fac.factors.iter().all(|f| f.coeffs().iter().all(|c| base.contains(c))));
        }
    }
}

#[test]
fn newton_sums_match_root_sums() {
    for p in (2..=13u64).filter(|&p| is_prime(p)) {
        for m in [1u64, 3, 4, 5] {
            let spec = FieldSpec::Cyclotomic(m);
            let base = Base::of(&spec, p * m).unwrap();
            let u = base.amb.u;
            let fac = factor_cyclotomic(p, &base).unwrap();
            for (f, orbit) in fac.factors.iter().zip(&fac.orbits) {
                let sums = power_sums_from_factor(f, p).unwrap();
                for (t, s) in sums.iter().enumerate() {
                    let direct = orbit.iter().fold(base.zero(), |acc, &j| {
                        acc.add(&base.amb.root_of_unity((j * t as u64 * (u / p)) as i64))
                    });
                    assert_eq!(*s, direct, "p={p} m={m} t={t}");
                }
            }
        }
    }
}

#[test]
fn phi7_over_gf2_has_two_cubic_factors() {
    let base = Base::of(&FieldSpec::finite(2).unwrap(), 7).unwrap();
    let fac = factor_cyclotomic(7, &base).unwrap();
    assert_eq!((fac.d, fac.k(), fac.r_sequence.clone()), (3, 2, vec![1, 2, 4]));
    // GF(2)-coefficients: X^3+X+1 and X^3+X^2+1 in some order
    let bits: Vec<Vec<bool>> = fac
        .factors
        .iter()
        .map(|f| f.coeffs().iter().map(|c| !c.is_zero()).collect())
        .collect();
    let mut bits = bits;
    bits.sort();
    assert_eq!(bits, vec![vec![true, false, true, true], vec![true, true, false, true]]);
}

#[test]
fn cube_roots_of_one_in_gf4() {
    let f = GfField::get(2, 2);
    let cubes: Vec<Gf> = (1..4).map(|k| f.element(k)).filter(|x| x.pow(3).is_one()).collect();
    assert_eq!(cubes.len(), 3);
    let base = Base::of(&FieldSpec::finite(4).unwrap(), 3).unwrap();
    let roots = pth_roots_in_field(&base.one(), 3, &base, 0).unwrap();
    assert_eq!(roots.len(), 3);
    assert!(roots.iter().all(|r| matches!(r, Scalar::Ff(_))));
}
