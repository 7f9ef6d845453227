//! Primitive central idempotents found without characters, by splitting
//! the identity in the center `Z(F[G])` through minimal polynomials of
//! central elements.
//!
//! Over `GF(q)` the splitting happens in `Z(GF(q)[G])` itself, certified
//! field by field. In characteristic 0 the center of `GF(l)[G]` is split
//! completely for a large prime `l = 1 mod u`, the resulting idempotents are
//! lifted to `Q(zeta_u)` from their images under all embeddings, and the
//! `F`-idempotents are the sums over `Gal`-orbits.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::ClassAlgebra;
use crate::arith::cyclo::Cyc;
use crate::arith::ffactor::{factor_squarefree, random_element};
use crate::arith::field::AmbientKind;
use crate::arith::fp;
use crate::arith::linalg::rank;
use crate::arith::modular::{coefficient_bound, interpolate, prime_above, root_of_unity_mod};
use crate::arith::ntheory::{inv_mod, units};
use crate::arith::scalar::Scalar;
use crate::error::{Error, Result};
use crate::ftheory::{trace_character, Context};

const RETRIES: usize = 200;

/// Class coefficients of the pcis of `F[G]`, sorted.
pub fn center_split(ctx: &Context, seed: u64) -> Result<Vec<Vec<Scalar>>> {
    let mut out = match ctx.base.amb.kind {
        AmbientKind::Ff { .. } => split_finite(ctx, seed)?,
        AmbientKind::Cyc { .. } => split_char0(ctx, seed)?,
    };
    out.sort();
    Ok(out)
}

/// Class of `g_k^a` for every class `k`, from the group directly.
fn power_class(ctx: &Context, k: usize, a: u64) -> usize {
    let cl = ctx.classes();
    cl.class_of[ctx.group.pow(cl.representatives[k], a as i64)]
}

fn mul_mod(alg: &ClassAlgebra, a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let xy = fp::mulm(x, y, l);
            for &(k, c) in &alg.consts[i][j] {
                out[k] = (out[k] + fp::mulm(xy, c % l, l)) % l;
            }
        }
    }
    out
}

/// Primitive idempotents of the split algebra `Z(GF(l)[G])`.
fn split_mod(alg: &ClassAlgebra, l: u64, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u64>>> {
    let r = alg.dim();
    let mut one = vec![0u64; r];
    one[0] = 1;
    for _ in 0..RETRIES {
        let z: Vec<u64> = (0..r).map(|_| rng.gen_range(0..l)).collect();
        let mut powers = vec![one.clone()];
        while powers.len() < r {
            let next = mul_mod(alg, powers.last().unwrap(), &z, l);
            powers.push(next);
        }
        let top = mul_mod(alg, powers.last().unwrap(), &z, l);
        // z generates the algebra exactly when 1, z, ..., z^(r-1) are independent
        let Some(c) = fp::solve(&powers, &top, l) else {
            continue;
        };
        if (0..r).any(|i| {
            let mut t = one.clone();
            t.iter_mut().for_each(|x| *x = 0);
            t[i] = 1;
            fp::solve(&powers, &t, l).is_none()
        }) {
            continue;
        }
        // minimal polynomial X^r - sum c_i X^i
        let mut minpoly: Vec<u64> = c.iter().map(|&x| (l - x) % l).collect();
        minpoly.push(1);
        let roots = fp::roots(&minpoly, l, rng);
        if roots.len() != r {
            continue;
        }
        let mut idems = Vec::with_capacity(r);
        for (i, &li) in roots.iter().enumerate() {
            let mut e = one.clone();
            for (j, &lj) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let inv = inv_mod((li + l - lj) % l, l).unwrap();
                let mut factor: Vec<u64> = z.iter().map(|&x| fp::mulm(x, inv, l)).collect();
                factor[0] = (factor[0] + l - fp::mulm(lj, inv, l)) % l;
                e = mul_mod(alg, &e, &factor, l);
            }
            idems.push(e);
        }
        return Ok(idems);
    }
    Err(Error::SearchBudgetExhausted(
        "no generating central element found".into(),
    ))
}

fn split_char0(ctx: &Context, seed: u64) -> Result<Vec<Vec<Scalar>>> {
    let u = ctx.table.u;
    let order = ctx.order() as u64;
    let r = ctx.classes().len();
    let bound = coefficient_bound(u, &BigUint::from(order));
    let l = prime_above(u, &(bound * 2u32 + 1u32), |l| l > order)?;
    let w = root_of_unity_mod(u, l);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let idems = split_mod(&ctx.algebra, l, &mut rng)?;
    let us = units(u);
    let pc: Vec<Vec<usize>> = (0..r)
        .map(|k| us.iter().map(|&a| power_class(ctx, k, a)).collect())
        .collect();
    let inv_order = crate::chartable::rat(1, order as i64);
    let mut lifted: Vec<Vec<Cyc>> = Vec::with_capacity(idems.len());
    for e in &idems {
        let row = (0..r)
            .map(|k| {
                let vals: Vec<u64> = pc[k].iter().map(|&kk| fp::mulm(e[kk], order % l, l)).collect();
                interpolate(u, l, w, &vals).scale(&inv_order)
            })
            .collect();
        lifted.push(row);
    }
    // Exact check of the absolute idempotents. Over a splitting field each
    // idempotent of the center is a 0/1 vector; in characteristic 0 a sum
    // equal to 1 forces disjoint supports, so squares and the sum suffice.
    let as_scalars = |row: &Vec<Cyc>| -> Vec<Scalar> { row.iter().cloned().map(Scalar::Cyc).collect() };
    let mut sum = vec![Scalar::Cyc(Cyc::zero(u)); r];
    for a in &lifted {
        let sa = as_scalars(a);
        if sa.iter().all(|c| c.is_zero()) || ctx.algebra.mul(&sa, &sa) != sa {
            return Err(Error::VerificationFailed(
                "lifted element is not a non-zero idempotent".into(),
            ));
        }
        for (s, c) in sum.iter_mut().zip(&sa) {
            *s = s.add(c);
        }
    }
    if !sum[0].is_one() || sum[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::VerificationFailed("lifted idempotents do not sum to 1".into()));
    }
    // orbits under A: sigma_a moves the coefficient on C_k to C(g_k^a)
    let a = ctx.residues();
    let mut seen = vec![false; lifted.len()];
    let mut out = Vec::new();
    for i in 0..lifted.len() {
        if seen[i] {
            continue;
        }
        let mut acc = vec![ctx.zero(); r];
        let mut members = Vec::new();
        for &s in &a {
            let img: Vec<Cyc> = (0..r).map(|k| lifted[i][power_class(ctx, k, s)].clone()).collect();
            let j = lifted
                .iter()
                .position(|row| *row == img)
                .ok_or_else(|| Error::VerificationFailed("Galois image is not an idempotent".into()))?;
            if !members.contains(&j) {
                members.push(j);
            }
        }
        for &j in &members {
            seen[j] = true;
            for (x, c) in acc.iter_mut().zip(&lifted[j]) {
                *x = x.add(&ctx.value(c));
            }
        }
        if !acc.iter().all(|c| ctx.base.contains(c)) {
            return Err(Error::CoercionFailed("orbit sum outside F".into()));
        }
        out.push(acc);
    }
    Ok(out)
}

fn split_finite(ctx: &Context, seed: u64) -> Result<Vec<Vec<Scalar>>> {
    let alg = &ctx.algebra;
    let r = alg.dim();
    let sub = ctx.base.subfield();
    let zero = ctx.zero();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut one = vec![zero.clone(); r];
    one[0] = ctx.base.one();
    let mut queue = vec![one];
    let mut done = Vec::new();
    let basis = |e: &[Scalar]| -> Vec<Vec<Scalar>> {
        (0..r)
            .map(|k| {
                let mut c = vec![zero.clone(); r];
                c[k] = zero.one_like();
                alg.mul(&c, e)
            })
            .collect()
    };
    while let Some(e) = queue.pop() {
        let dim = rank(&basis(&e), &zero);
        let mut tries = 0;
        loop {
            tries += 1;
            if tries > RETRIES {
                return Err(Error::SearchBudgetExhausted(
                    "central splitting did not converge".into(),
                ));
            }
            let z: Vec<Scalar> = (0..r).map(|_| random_element(&sub, &mut rng)).collect();
            let y = alg.mul(&z, &e);
            let mu = alg.minpoly(&e, &y);
            let factors = factor_squarefree(&mu, &sub, &mut rng);
            if factors.len() == 1 {
                if mu.degree() == Some(dim) {
                    // e Z = F[y] is a field
                    done.push(e);
                    break;
                }
                continue;
            }
            for f in &factors {
                let cofactor = mu.exact_div(f)?;
                let inv = cofactor
                    .inv_mod(f)
                    .ok_or_else(|| Error::VerificationFailed("minimal polynomial is not squarefree".into()))?;
                let p = cofactor.mul(&inv).rem(&mu)?;
                queue.push(alg.eval(&p, &e, &y));
            }
            break;
        }
    }
    Ok(done)
}

/// Classes grouped by equality of all `F`-character values, each group
/// sorted, ordered by least class.
pub fn value_classes(ctx: &Context) -> Result<Vec<Vec<usize>>> {
    let taus = ctx
        .char_orbits()
        .iter()
        .map(|o| trace_character(ctx, o))
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<(Vec<Scalar>, Vec<usize>)> = Vec::new();
    for k in 0..ctx.classes().len() {
        let key: Vec<Scalar> = taus.iter().map(|t| t[k].clone()).collect();
        match out.iter_mut().find(|(v, _)| *v == key) {
            Some((_, ks)) => ks.push(k),
            None => out.push((key, vec![k])),
        }
    }
    Ok(out.into_iter().map(|(_, ks)| ks).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::ftheory::pcis;

    #[test]
    fn agrees_with_character_formula() {
        for (name, params, field) in [
            ("Q8", vec![], "Q"),
            ("C", vec![6], "Q"),
            ("SL23", vec![], "Q"),
            ("C7:C3", vec![], "GF(2)"),
            ("C7:C3", vec![], "Q(zeta_3)"),
            ("Q8oC4", vec![], "GF(3)"),
        ] {
            let g = catalog(name, &params).unwrap();
            let c = Context::new(g, &field.parse().unwrap(), 0).unwrap();
            let mut want: Vec<Vec<Scalar>> = pcis(&c).unwrap().into_iter().map(|e| e.class_coeffs).collect();
            want.sort();
            assert_eq!(center_split(&c, 7).unwrap(), want, "{name} over {field}");
        }
    }
}
