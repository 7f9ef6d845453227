//! Wedderburn data of a single component `I = F[G]e`: its center, the
//! simple module `V`, the commutant `D`, the reduced dimension `n` and the
//! Schur index `m`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgElem;
use crate::arith::ffactor::{factor_squarefree, random_element};
use crate::arith::field::{AmbientKind, Base};
use crate::arith::linalg::{rank, solve, Echelon};
use crate::arith::poly::Poly;
use crate::arith::scalar::Scalar;
use crate::error::{Error, Result};
use crate::ftheory::{orbit_idempotent, reduced_dimension_check, CentralIdempotent, Context};
use crate::group::Group;

const PRIMITIVE_ELEMENT_BUDGET: usize = 1000;
const REFINE_BUDGET: usize = 200;
const ZERO_DIVISOR_SAMPLES: usize = 50;

/// The center `Z e` of a component, presented by a primitive element.
#[derive(Clone, Debug)]
pub struct RealizedCenter {
    /// Class coefficients of a basis of `Z e`.
    pub basis: Vec<Vec<Scalar>>,
    pub theta: Vec<Scalar>,
    /// Minimal polynomial of `theta` over `F`.
    pub minpoly: Poly,
    pub delta: usize,
    /// The character whose central character embeds `Z` in the ambient field.
    pub psi: usize,
    /// Image of `theta` under that embedding.
    pub embedding: Scalar,
}

impl RealizedCenter {
    /// Image of a central element of `I` in the ambient field.
    pub fn embed(&self, ctx: &Context, z: &[Scalar]) -> Scalar {
        central_character(ctx, self.psi, z)
    }

    /// Class coefficients of the element of `Z e` whose image is `value`,
    /// as a polynomial in `theta` with coefficients in `F`.
    pub fn preimage(&self, ctx: &Context, e: &[Scalar], value: &Scalar) -> Result<Vec<Scalar>> {
        let amb = &ctx.base.amb;
        let mut conj: Vec<(Scalar, Scalar)> = Vec::new();
        for s in &ctx.base.gal {
            let t = amb.apply(s, &self.embedding);
            if !conj.iter().any(|(c, _)| *c == t) {
                conj.push((t, amb.apply(s, value)));
            }
        }
        let zero = ctx.zero();
        let cols: Vec<Vec<Scalar>> = (0..self.delta)
            .map(|i| conj.iter().map(|(t, _)| t.pow(i as u64)).collect())
            .collect();
        let target: Vec<Scalar> = conj.iter().map(|(_, v)| v.clone()).collect();
        let h = solve(&cols, &target, &zero)
            .filter(|h| h.iter().all(|c| ctx.base.contains(c)))
            .ok_or_else(|| Error::CoercionFailed("value does not lie in the center".into()))?;
        let poly = Poly::new(h, zero);
        let out = ctx.algebra.eval(&poly, e, &self.theta);
        if self.embed(ctx, &out) != *value {
            return Err(Error::VerificationFailed("center preimage does not embed back".into()));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnComponent {
    pub pci: usize,
    pub dim_i: usize,
    pub delta: usize,
    pub n: usize,
    pub m: usize,
    pub dim_v: usize,
    pub center: RealizedCenter,
    /// Primitive idempotent `f` with `V = F[G] f`.
    pub idempotent: AlgElem,
    /// `dim_F D`, computed as `dim_F fIf`.
    pub commutant_dim: usize,
}

/// `omega_psi(z) = sum_k z_k |C_k| psi(g_k) / psi(1)`.
pub fn central_character(ctx: &Context, psi: usize, z: &[Scalar]) -> Scalar {
    let t = &ctx.table;
    let deg = t.degrees[psi] as i64;
    let mut acc = ctx.zero();
    for (k, c) in z.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = ctx.value(&t.chars[psi][k]).scale_int(t.classes.sizes[k] as i64);
        acc = acc.add(&c.mul(&v));
    }
    acc.div_int(deg)
}

pub fn center_of_component(ctx: &Context, e: &CentralIdempotent) -> Result<RealizedCenter> {
    let zero = ctx.zero();
    let r = ctx.classes().len();
    let mut ech = Echelon::new(&zero, false);
    let mut basis = Vec::new();
    for k in 0..r {
        let mut c = vec![zero.clone(); r];
        c[k] = zero.one_like();
        let v = ctx.algebra.mul(&c, &e.class_coeffs);
        if ech.insert(&v) {
            basis.push(v);
        }
    }
    let delta = basis.len();
    if delta != e.orbit.len() {
        return Err(Error::VerificationFailed(format!(
            "center of pci {} has dimension {delta}, orbit has {}",
            e.id,
            e.orbit.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for t in 0..PRIMITIVE_ELEMENT_BUDGET {
        let coeffs: Vec<i64> = if t < delta {
            (0..delta).map(|i| (i == t) as i64).collect()
        } else {
            (0..delta).map(|_| rng.gen_range(-3..=3)).collect()
        };
        let mut theta = vec![zero.clone(); r];
        for (b, &c) in basis.iter().zip(&coeffs) {
            if c != 0 {
                for (x, y) in theta.iter_mut().zip(b) {
                    *x = x.add(&y.scale_int(c));
                }
            }
        }
        let minpoly = ctx.algebra.minpoly(&e.class_coeffs, &theta);
        if minpoly.degree() != Some(delta) {
            continue;
        }
        if minpoly.gcd(&minpoly.derivative()).degree() != Some(0) {
            return Err(Error::VerificationFailed(format!(
                "center of pci {} is not reduced",
                e.id
            )));
        }
        let (embedding, psi) = e
            .orbit
            .iter()
            .map(|&psi| (central_character(ctx, psi, &theta), psi))
            .min()
            .unwrap();
        if !minpoly.eval(&embedding).is_zero() {
            return Err(Error::VerificationFailed("embedding is not a root".into()));
        }
        return Ok(RealizedCenter {
            basis,
            theta,
            minpoly,
            delta,
            psi,
            embedding,
        });
    }
    Err(Error::PrimitiveElementSearchExhausted(PRIMITIVE_ELEMENT_BUDGET))
}

fn span_dim(vectors: Vec<AlgElem>, zero: &Scalar) -> usize {
    let v: Vec<Vec<Scalar>> = vectors.into_iter().map(|a| a.coeffs).collect();
    rank(&v, zero)
}

/// `dim_F F[G] f`.
fn left_ideal_dim(g: &Group, f: &AlgElem) -> usize {
    span_dim((0..g.order()).map(|t| f.left_by(t, g)).collect(), &f.zero_scalar())
}

/// Spanning set `{f t f}` of `fIf` for `f <= e`.
fn corner_span(g: &Group, f: &AlgElem) -> Vec<AlgElem> {
    let zero = f.zero_scalar();
    let mut ech = Echelon::new(&zero, false);
    let mut out = Vec::new();
    for t in 0..g.order() {
        let v = f.right_by(t, g).mul(f, g);
        if ech.insert(&v.coeffs) {
            out.push(v);
        }
    }
    out
}

/// Idempotents of `F[<x>]` for every cyclic subgroup `<x>`.
fn cyclic_idempotents(ctx: &Context) -> Vec<AlgElem> {
    let g = &ctx.group;
    let amb = &ctx.base.amb;
    let zero = ctx.zero();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for x in 1..g.order() {
        let d = g.element_order(x);
        let mut members: Vec<usize> = (0..d).map(|i| g.pow(x, i as i64)).collect();
        members.sort_unstable();
        if seen.contains(&members) {
            continue;
        }
        seen.push(members);
        let a = ctx.base.residues(d);
        let step = (amb.u / d) as i64;
        let mut done = vec![false; d as usize];
        for j in 0..d {
            if done[j as usize] {
                continue;
            }
            let mut orbit: Vec<u64> = a.iter().map(|&s| s * j % d).collect();
            orbit.sort_unstable();
            orbit.dedup();
            let mut eps = AlgElem::zero(g.order(), &zero);
            for i in 0..d {
                let mut c = zero.clone();
                for &jj in &orbit {
                    done[jj as usize] = true;
                    c = c.add(&amb.root_of_unity(-((i * jj) as i64) * step));
                }
                eps.coeffs[g.pow(x, i as i64)] = c.div_int(d as i64);
            }
            out.push(eps);
        }
    }
    out
}

fn elem_minpoly(g: &Group, f: &AlgElem, a: &AlgElem) -> Poly {
    let zero = f.zero_scalar();
    let mut powers = vec![f.coeffs.clone()];
    let mut cur = f.clone();
    loop {
        cur = cur.mul(a, g);
        if let Some(c) = solve(&powers, &cur.coeffs, &zero) {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| x.neg()).collect();
            coeffs.push(zero.one_like());
            return Poly::new(coeffs, zero);
        }
        powers.push(cur.coeffs.clone());
    }
}

fn elem_eval(g: &Group, p: &Poly, f: &AlgElem, a: &AlgElem) -> AlgElem {
    let mut acc = AlgElem::zero(f.len(), &f.zero_scalar());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a, g).add(&f.scale(c));
    }
    acc
}

fn random_in_base(ctx: &Context, rng: &mut ChaCha8Rng) -> Scalar {
    match ctx.base.amb.kind {
        AmbientKind::Ff { .. } => random_element(&ctx.base.subfield(), rng),
        AmbientKind::Cyc { .. } => ctx.base.amb.int(rng.gen_range(-3..=3)),
    }
}

fn random_corner(ctx: &Context, f: &AlgElem, span: &[AlgElem], rng: &mut ChaCha8Rng) -> AlgElem {
    let mut a = AlgElem::zero(f.len(), &f.zero_scalar());
    for b in span {
        a = a.add(&b.scale(&random_in_base(ctx, rng)));
    }
    a
}

/// Splits `f` over a finite field until `F[G] f` is simple.
fn refine_finite(ctx: &Context, mut f: AlgElem, target: usize, rng: &mut ChaCha8Rng) -> Result<AlgElem> {
    let g = &ctx.group;
    let sub = ctx.base.subfield();
    let mut dim = left_ideal_dim(g, &f);
    for _ in 0..REFINE_BUDGET {
        if dim == target {
            return Ok(f);
        }
        let span = corner_span(g, &f);
        let a = random_corner(ctx, &f, &span, rng);
        let mu = elem_minpoly(g, &f, &a);
        if mu.gcd(&mu.derivative()).degree() != Some(0) {
            continue;
        }
        let factors = factor_squarefree(&mu, &sub, rng);
        if factors.len() < 2 {
            continue;
        }
        let mut best: Option<(usize, AlgElem)> = None;
        for p in &factors {
            let cof = mu.exact_div(p)?;
            let inv = cof.inv_mod(p).expect("coprime factors");
            let poly = cof.mul(&inv).rem(&mu)?;
            let h = elem_eval(g, &poly, &f, &a);
            let d = left_ideal_dim(g, &h);
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, h));
            }
        }
        let (d, h) = best.unwrap();
        dim = d;
        f = h;
    }
    Err(Error::SearchBudgetExhausted("simple module not isolated".into()))
}

pub fn simple_module_and_commutant(ctx: &Context, e: &CentralIdempotent, seed: u64) -> Result<WedderburnComponent> {
    let g = &ctx.group;
    let zero = ctx.zero();
    let center = center_of_component(ctx, e)?;
    let delta = center.delta;
    let psi1 = e.psi_degree(ctx) as usize;
    let dim_i = left_ideal_dim(g, &e.element);
    if dim_i != psi1 * psi1 * delta {
        return Err(Error::VerificationFailed(format!(
            "dim F[G]e = {dim_i} for pci {}, expected {}",
            e.id,
            psi1 * psi1 * delta
        )));
    }
    // smallest left ideal I e eps over the idempotents eps of cyclic subgroups
    let mut f = e.element.clone();
    let mut dim_f = dim_i;
    for eps in cyclic_idempotents(ctx) {
        let h = e.element.mul(&eps, g);
        if h.is_zero() {
            continue;
        }
        let d = left_ideal_dim(g, &h);
        if d < dim_f {
            dim_f = d;
            f = h;
        }
    }
    let unit = psi1 * delta;
    if !dim_f.is_multiple_of(unit) {
        return Err(Error::VerificationFailed(format!(
            "dim F[G]f = {dim_f} is not a multiple of {unit}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (e.id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    // dim F[G] f = (number of simple summands) * m * psi(1) * delta
    let m = if ctx.base.amb.is_finite() {
        f = refine_finite(ctx, f, unit, &mut rng)?;
        dim_f = unit;
        1
    } else {
        match dim_f / unit {
            1 => 1,
            // a real field and a character of indicator -1 force m even
            2 if ctx.base.is_real() && ctx.table.indicator(e.orbit[0]) == -1 => 2,
            k => {
                return Err(Error::SearchBudgetExhausted(format!(
                    "left ideal of rank {k} could not be certified simple"
                )))
            }
        }
    };
    let dim_v = dim_f;
    let span = corner_span(g, &f);
    let commutant_dim = span.len();
    if commutant_dim != m * m * delta {
        return Err(Error::ConsistencyCheckFailed(format!(
            "dim D = {commutant_dim}, expected m^2 delta = {}",
            m * m * delta
        )));
    }
    // D has no zero divisors
    for _ in 0..ZERO_DIVISOR_SAMPLES {
        let d = random_corner(ctx, &f, &span, &mut rng);
        if d.is_zero() {
            continue;
        }
        if span_dim(span.iter().map(|b| d.mul(b, g)).collect(), &zero) != commutant_dim {
            return Err(Error::ConsistencyCheckFailed("commutant has zero divisors".into()));
        }
    }
    if !dim_i.is_multiple_of(dim_v) {
        return Err(Error::ConsistencyCheckFailed("dim V does not divide dim I".into()));
    }
    let n = dim_i / dim_v;
    if dim_i != n * n * m * m * delta || dim_v != n * m * m * delta {
        return Err(Error::ConsistencyCheckFailed("dimension identities fail".into()));
    }
    if ctx.base.amb.is_finite() && m != 1 {
        return Err(Error::ConsistencyCheckFailed(
            "non-trivial Schur index over a finite field".into(),
        ));
    }
    let n_check = reduced_dimension_check(ctx, e, m as u64)?;
    if n_check as usize != n {
        return Err(Error::ConsistencyCheckFailed(format!(
            "reduced dimension {n} disagrees with e''^2 test ({n_check})"
        )));
    }
    Ok(WedderburnComponent {
        pci: e.id,
        dim_i,
        delta,
        n,
        m,
        dim_v,
        center,
        idempotent: f,
        commutant_dim,
    })
}

/// The fixed field of the stabilizer of `psi` in `A`: the center's image in
/// the ambient field.
pub fn character_field(ctx: &Context, psi: usize) -> Base {
    let u = ctx.table.u;
    let t = &ctx.table;
    ctx.base.restrict(|g| t.galois_row(psi, g.au % u.max(1)) == psi)
}

/// The pcis of `Z[G]` below `e`, one per character in the orbit, checked
/// to sum to `e` and to be permuted simply transitively by `Gal(Z/F)`.
pub fn base_change_split(ctx: &Context, e: &CentralIdempotent, z: &RealizedCenter) -> Result<Vec<CentralIdempotent>> {
    let ext = character_field(ctx, z.psi);
    let zctx = ctx.over(ext);
    let mut below = Vec::new();
    for (id, orbit) in zctx.char_orbits().into_iter().enumerate() {
        if orbit.iter().all(|i| e.orbit.contains(i)) {
            let c = orbit_idempotent(&zctx, &orbit)?;
            below.push(CentralIdempotent {
                id,
                element: zctx.element(&c),
                orbit,
                class_coeffs: c,
            });
        }
    }
    if below.len() != z.delta {
        return Err(Error::ConsistencyCheckFailed(format!(
            "{} pcis over Z below pci {}, expected {}",
            below.len(),
            e.id,
            z.delta
        )));
    }
    let mut sum = vec![ctx.zero(); e.class_coeffs.len()];
    for p in &below {
        for (s, c) in sum.iter_mut().zip(&p.class_coeffs) {
            *s = s.add(c);
        }
    }
    if sum != e.class_coeffs {
        return Err(Error::ConsistencyCheckFailed(
            "base-changed pcis do not sum to e".into(),
        ));
    }
    for (i, p) in below.iter().enumerate() {
        for q in &below[i..] {
            let prod = zctx.algebra.mul(&p.class_coeffs, &q.class_coeffs);
            let ok = if p.id == q.id {
                prod == p.class_coeffs
            } else {
                prod.iter().all(|c| c.is_zero())
            };
            if !ok || !p.class_coeffs.iter().all(|c| zctx.base.contains(c)) {
                return Err(Error::ConsistencyCheckFailed(format!(
                    "base-changed pcis {} and {} fail e_i e_j = delta_ij e_i",
                    p.id, q.id
                )));
            }
        }
    }
    // Gal(Z/F) as permutations of the pcis
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for s in &ctx.base.gal {
        let perm = below
            .iter()
            .map(|p| {
                let img: Vec<Scalar> = p.class_coeffs.iter().map(|c| ctx.base.amb.apply(s, c)).collect();
                below.iter().position(|q| q.class_coeffs == img)
            })
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::ConsistencyCheckFailed("Galois image is not a pci".into()))?;
        if !perms.contains(&perm) {
            perms.push(perm);
        }
    }
    let regular = perms.len() == z.delta
        && perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &j)| i == j) || p.iter().enumerate().all(|(i, &j)| i != j));
    if !regular {
        return Err(Error::ConsistencyCheckFailed(
            "Galois action is not simply transitive".into(),
        ));
    }
    Ok(below)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::ftheory::pcis;

    fn ctx(name: &str, params: &[i64], field: &str) -> Context {
        Context::new(catalog(name, params).unwrap(), &field.parse().unwrap(), 0).unwrap()
    }

    #[test]
    fn quaternion_component() {
        let c = ctx("Q8", &[], "Q");
        let e = pcis(&c).unwrap();
        let last = e.iter().find(|e| e.psi_degree(&c) == 2).unwrap();
        let w = simple_module_and_commutant(&c, last, 0).unwrap();
        assert_eq!(
            (w.dim_i, w.delta, w.n, w.m, w.dim_v, w.commutant_dim),
            (4, 1, 1, 2, 4, 4)
        );
    }

    #[test]
    fn cyclic_centers() {
        let c = ctx("C", &[4], "Q");
        let e = pcis(&c).unwrap();
        let faithful = e.iter().find(|e| e.orbit.len() == 2).unwrap();
        let z = center_of_component(&c, faithful).unwrap();
        assert_eq!(z.delta, 2);
        assert_eq!(base_change_split(&c, faithful, &z).unwrap().len(), 2);
        let c = ctx("C", &[7], "Q");
        let e = pcis(&c).unwrap();
        let faithful = e.iter().find(|e| e.orbit.len() == 6).unwrap();
        let z = center_of_component(&c, faithful).unwrap();
        assert_eq!(z.delta, 6);
        assert_eq!(base_change_split(&c, faithful, &z).unwrap().len(), 6);
    }

    #[test]
    fn identities_across_fields() {
        for (name, params) in [("SL23", vec![]), ("C7:C3", vec![]), ("Q8oC4", vec![]), ("Q8", vec![])] {
            for field in ["Q", "Q(zeta_12)", "GF(5)", "GF(7)", "GF(25)"] {
                let g = catalog(name, &params).unwrap();
                let Ok(c) = Context::new(g, &field.parse().unwrap(), 0) else {
                    continue;
                };
                let mut total = 0;
                for e in pcis(&c).unwrap() {
                    let w = simple_module_and_commutant(&c, &e, 1)
                        .unwrap_or_else(|err| panic!("{name} {field} {}: {err}", e.id));
                    total += w.dim_i;
                    let z = &w.center;
                    assert_eq!(base_change_split(&c, &e, z).unwrap().len(), w.delta);
                }
                assert_eq!(total, c.order(), "{name} over {field}");
            }
        }
    }
}
