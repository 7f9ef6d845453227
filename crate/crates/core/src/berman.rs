//! Splitting of the pcis of `F[H]` in `F[G]` for a normal subgroup `H` of
//! prime index `p`, and the decomposition of the induced representations.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::algebra::AlgElem;
use crate::arith::cyclo::Cyc;
use crate::arith::cyclotomic::{factor_cyclotomic, power_sums_from_factor, pth_roots_in_field};
use crate::arith::scalar::Scalar;
use crate::chartable::{induce, CharacterTable};
use crate::error::{Error, Result};
use crate::ftheory::{pcis, CentralIdempotent, Context};
use crate::group::{Group, Subgroup};
use crate::oracle::center_split;
use crate::structure::{
    base_change_split, center_of_component, character_field, simple_module_and_commutant, RealizedCenter,
    WedderburnComponent,
};

/// Extra lifts tried when checking that the case does not depend on the lift.
const ALTERNATIVE_LIFTS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// `eta^x` is not `eta`: the orbit sum is one pci of `F[G]`.
    Unstable,
    /// `eta_1^x` is not `eta_1`.
    One,
    A,
    B,
    C,
    /// `eta_1` is stable but every lift gives `lambda = 0`.
    Vanishing,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Unstable => "unstable",
            Case::One => "1",
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::Vanishing => "vanishing",
        }
    }
}

/// `F[G]` together with a normal subgroup of prime index and `F[H]`.
#[derive(Clone, Debug)]
pub struct Setting {
    pub g: Context,
    pub h: Context,
    pub sub: Subgroup,
    pub p: u64,
    /// Element of `H` (as a group) to element of `G`.
    pub embed: Vec<usize>,
    pub g_pcis: Vec<CentralIdempotent>,
    pub h_pcis: Vec<CentralIdempotent>,
    /// Class coefficients of the pcis of `F[G]` from the center-splitting oracle.
    pub oracle: Vec<Vec<Scalar>>,
    pub seed: u64,
}

/// The subgroup generated by the longest proper prefix of the generators
/// that is normal of prime index; otherwise the first normal subgroup of
/// least prime index.
pub fn auto_subgroup(g: &Group) -> Option<(u64, Subgroup)> {
    let n = g.order();
    let gens = g.generators();
    let candidates = |p: u64| g.prime_index_normal_subgroups(p);
    for len in (1..gens.len()).rev() {
        let members = g.closure_of(&gens[..len]);
        let index = n / members.len();
        if members.len() * index == n && index > 1 && crate::arith::ntheory::is_prime(index as u64) {
            if let Some(s) = candidates(index as u64).into_iter().find(|s| s.members == members) {
                return Some((index as u64, s));
            }
        }
    }
    crate::arith::ntheory::prime_factors(n as u64)
        .into_iter()
        .find_map(|p| candidates(p).into_iter().next().map(|s| (p, s)))
}

/// Normal subgroups of prime index, ordered by prime and then members.
pub fn prime_index_subgroups(g: &Group) -> Vec<(u64, Subgroup)> {
    crate::arith::ntheory::prime_factors(g.order() as u64)
        .into_iter()
        .flat_map(|p| g.prime_index_normal_subgroups(p).into_iter().map(move |s| (p, s)))
        .collect()
}

impl Setting {
    pub fn new(ctx: &Context, p: u64, sub: Subgroup, seed: u64) -> Result<Setting> {
        if !sub.is_normal(&ctx.group) || sub.order() as u64 * p != ctx.order() as u64 {
            return Err(Error::BadParams("subgroup is not normal of index p".into()));
        }
        let (hg, embed) = sub.as_group(&ctx.group);
        let table = CharacterTable::compute(&hg, seed)?;
        let h = Context::with_base(hg, table, ctx.base.clone());
        Ok(Setting {
            g_pcis: pcis(ctx)?,
            h_pcis: pcis(&h)?,
            oracle: center_split(ctx, seed)?,
            g: ctx.clone(),
            h,
            sub,
            p,
            embed,
            seed,
        })
    }

    pub fn lift(&self) -> usize {
        self.sub.lift.expect("prime-index subgroup has a lift")
    }

    fn push(&self, a: &AlgElem) -> AlgElem {
        a.push_forward(&self.embed, self.g.order())
    }

    fn pull(&self, a: &AlgElem) -> Option<AlgElem> {
        a.pull_back(&self.embed)
    }

    /// Class coefficients of a central element of `F[G]`.
    fn g_class_coeffs(&self, a: &AlgElem) -> Vec<Scalar> {
        self.g
            .classes()
            .representatives
            .iter()
            .map(|&r| a.coeffs[r].clone())
            .collect()
    }

    fn h_class_coeffs(&self, a: &AlgElem) -> Vec<Scalar> {
        self.h
            .classes()
            .representatives
            .iter()
            .map(|&r| a.coeffs[r].clone())
            .collect()
    }

    /// Index of a pci of `F[G]` given as an element, after checking that
    /// the oracle produced it too.
    fn g_pci_of(&self, a: &AlgElem) -> Result<usize> {
        let c = self.g_class_coeffs(a);
        if self.g.element(&c) != *a {
            return Err(Error::NotAPci("element is not central".into()));
        }
        if !self.oracle.contains(&c) {
            return Err(Error::NotAPci(
                "idempotent not produced by the center-splitting oracle".into(),
            ));
        }
        self.g_pcis
            .iter()
            .position(|e| e.class_coeffs == c)
            .ok_or_else(|| Error::NotAPci("idempotent is not a pci of F[G]".into()))
    }
}

/// `x e x^-1` as a pci of `F[H]`.
pub fn conjugate_pci(s: &Setting, e: &CentralIdempotent, x: usize) -> Result<usize> {
    let img = s.push(&e.element).conjugate_by(x, &s.g.group);
    let back = s
        .pull(&img)
        .ok_or_else(|| Error::NotAPci("conjugate leaves F[H]".into()))?;
    s.h_pcis
        .iter()
        .position(|f| f.element == back)
        .ok_or_else(|| Error::NotAPci(format!("conjugate of pci {} is not a pci of F[H]", e.id)))
}

/// `lambda` with `C(x)^p e = lambda e`, as class coefficients in `Z e`.
pub fn lambda_element(s: &Setting, e: &CentralIdempotent, z: &RealizedCenter, x: usize) -> Result<Vec<Scalar>> {
    let g = &s.g.group;
    let cl = s.g.classes();
    let zero = s.g.zero();
    let class = AlgElem::sum_of(g.order(), &cl.classes[cl.class_of[x]], &zero);
    let ce = class.mul(&s.push(&e.element), g);
    let mut acc = ce.clone();
    for _ in 1..s.p {
        acc = acc.mul(&ce, g);
    }
    let back = s
        .pull(&acc)
        .ok_or_else(|| Error::NotInCenter("C(x)^p e leaves F[H]".into()))?;
    let coeffs = s.h_class_coeffs(&back);
    if s.h.element(&coeffs) != back {
        return Err(Error::NotInCenter("C(x)^p e is not central in F[H]".into()));
    }
    if crate::arith::linalg::solve(&z.basis, &coeffs, &zero).is_none() {
        return Err(Error::NotInCenter("C(x)^p e is not in Z e".into()));
    }
    Ok(coeffs)
}

/// Lifts to try: `x`, then `xH` and then the rest of `G - H`, in element order.
fn lift_order(s: &Setting, x: usize) -> Vec<usize> {
    let g = &s.g.group;
    let mut coset: Vec<usize> = s.sub.members.iter().map(|&h| g.mul(x, h)).collect();
    coset.sort_unstable();
    let mut out = vec![x];
    out.extend(coset.iter().copied().filter(|&y| y != x));
    out.extend((0..g.order()).filter(|&y| !s.sub.contains(y) && !coset.contains(&y)));
    out
}

/// Constituent of the induced representation.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub pci: usize,
    pub multiplicity: u64,
    /// `dim_F` of the irreducible `F`-representation.
    pub degree: u64,
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug)]
pub struct Induction {
    pub eta_degree: u64,
    pub eta_m: usize,
    pub eta_n: usize,
    pub constituents: Vec<Constituent>,
    /// Cases 1 and A: whether the induced representation is irreducible.
    pub irreducible: Option<bool>,
    pub s: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct BermanReport {
    pub eta: usize,
    pub stable: bool,
    pub case: Case,
    pub lift: usize,
    /// Image of `lambda` in the ambient field.
    pub lambda: Option<Scalar>,
    pub roots: Vec<Scalar>,
    pub d: Option<usize>,
    pub k: Option<usize>,
    /// pcis of `F[G]` into which the idempotent splits.
    pub split: Vec<usize>,
    pub induction: Induction,
    pub checks: BTreeMap<String, bool>,
}

struct Split {
    case: Case,
    lift: usize,
    lambda: Option<Scalar>,
    roots: Vec<Scalar>,
    d: Option<usize>,
    k: Option<usize>,
    elements: Vec<AlgElem>,
    /// Index into `elements` of `e_c e` in case C.
    extension: Option<usize>,
}

fn powers_sum(g: &Group, c: &AlgElem, e: &AlgElem, coeffs: &[Scalar], p: u64) -> AlgElem {
    let mut acc = e.scale(&coeffs[0]);
    let mut ct = e.clone();
    for co in coeffs.iter().take(p as usize).skip(1) {
        ct = ct.mul(c, g);
        acc = acc.add(&ct.scale(co));
    }
    acc.scale(&e.zero_scalar().one_like().div_int(p as i64))
}

/// The splitting of a stable `eta` with `eta_1` stable, using the lift `x`.
fn split_with_lift(s: &Setting, e: &CentralIdempotent, z: &RealizedCenter, x: usize, lam: &[Scalar]) -> Result<Split> {
    let g = &s.g.group;
    let p = s.p;
    let zbase = character_field(&s.h, z.psi);
    let lambda = z.embed(&s.h, lam);
    let roots = pth_roots_in_field(&lambda, p, &zbase, s.seed)?;
    let eg = s.push(&e.element);
    let cl = s.g.classes();
    let class = AlgElem::sum_of(g.order(), &cl.classes[cl.class_of[x]], &s.g.zero());
    let ce = class.mul(&eg, g);
    // C(x) e / mu
    let c_of = |mu: &Scalar| -> Result<AlgElem> {
        let inv = mu.inv().ok_or(Error::DivisionByZero)?;
        let pre = z.preimage(&s.h, &e.class_coeffs, &inv)?;
        Ok(ce.mul(&s.push(&s.h.element(&pre)), g))
    };
    let one = s.g.zero().one_like();
    let ones = vec![one; p as usize];
    let mut out = Split {
        case: Case::A,
        lift: x,
        lambda: Some(lambda.clone()),
        roots: roots.clone(),
        d: None,
        k: None,
        elements: vec![eg.clone()],
        extension: None,
    };
    match roots.len() {
        0 => {}
        1 => {
            let c = c_of(&roots[0])?;
            let fac = factor_cyclotomic(p, &zbase)?;
            let mut elements = vec![powers_sum(g, &c, &eg, &ones, p)];
            for f in &fac.factors {
                let ps = power_sums_from_factor(f, p)?;
                let coeffs = (0..p as usize)
                    .map(|t| {
                        let v = &ps[(p as usize - t) % p as usize];
                        z.preimage(&s.h, &e.class_coeffs, v).map(|c| s.push(&s.h.element(&c)))
                    })
                    .collect::<Result<Vec<AlgElem>>>()?;
                // sum_t P_{-t}(f) c^t / p
                let mut acc = coeffs[0].mul(&eg, g);
                let mut ct = eg.clone();
                for co in coeffs.iter().skip(1) {
                    ct = ct.mul(&c, g);
                    acc = acc.add(&co.mul(&ct, g));
                }
                elements.push(acc.scale(&s.g.zero().one_like().div_int(p as i64)));
            }
            out.case = Case::C;
            out.d = Some(fac.d);
            out.k = Some(fac.factors.len());
            out.elements = elements;
            out.extension = Some(0);
        }
        n if n as u64 == p => {
            out.case = Case::B;
            out.elements = roots
                .iter()
                .map(|mu| c_of(mu).map(|c| powers_sum(g, &c, &eg, &ones, p)))
                .collect::<Result<Vec<_>>>()?;
        }
        n => return Err(Error::VerificationFailed(format!("{n} p-th roots of lambda"))),
    }
    Ok(out)
}

/// Checks that the elements are orthogonal central idempotents summing to `total`.
fn verify_decomposition(g: &Group, parts: &[AlgElem], total: &AlgElem) -> Result<()> {
    let mut sum = AlgElem::zero(total.len(), &total.zero_scalar());
    for (i, a) in parts.iter().enumerate() {
        if a.is_zero() || !a.is_central(g) {
            return Err(Error::VerificationFailed(
                "split idempotent is zero or not central".into(),
            ));
        }
        for (j, b) in parts.iter().enumerate() {
            let prod = a.mul(b, g);
            let ok = if i == j { prod == *a } else { prod.is_zero() };
            if !ok {
                return Err(Error::VerificationFailed(
                    "split idempotents are not orthogonal idempotents".into(),
                ));
            }
        }
        sum = sum.add(a);
    }
    if sum != *total {
        return Err(Error::VerificationFailed("split idempotents do not sum to e".into()));
    }
    Ok(())
}

/// The full analysis of one pci of `F[H]`.
pub fn split(s: &Setting, eta: usize) -> Result<BermanReport> {
    let g = &s.g.group;
    let e = &s.h_pcis[eta];
    let x = s.lift();
    let mut checks = BTreeMap::new();
    let eta_struct = simple_module_and_commutant(&s.h, e, s.seed)?;
    let z = &eta_struct.center;
    let conj = conjugate_pci(s, e, x)?;
    let eg = s.push(&e.element);
    let sp = if conj != eta {
        // orbit sum under conjugation by x
        let mut orbit = vec![eta];
        let mut cur = conj;
        while cur != eta {
            orbit.push(cur);
            cur = conjugate_pci(s, &s.h_pcis[cur], x)?;
        }
        checks.insert("orbit_length_p".into(), orbit.len() as u64 == s.p);
        let mut total = AlgElem::zero(g.order(), &s.g.zero());
        for &i in &orbit {
            total = total.add(&s.push(&s.h_pcis[i].element));
        }
        Split {
            case: Case::Unstable,
            lift: x,
            lambda: None,
            roots: Vec::new(),
            d: None,
            k: None,
            elements: vec![total],
            extension: None,
        }
    } else {
        let below = base_change_split(&s.h, e, z)?;
        let eta1 = below
            .iter()
            .find(|b| b.orbit.contains(&z.psi))
            .expect("base change covers psi");
        let img = s.pull(&s.push(&eta1.element).conjugate_by(x, g)).expect("H is normal");
        if img != eta1.element {
            checks.insert("delta_multiple_of_p".into(), (z.delta as u64).is_multiple_of(s.p));
            Split {
                case: Case::One,
                lift: x,
                lambda: None,
                roots: Vec::new(),
                d: None,
                k: None,
                elements: vec![eg.clone()],
                extension: None,
            }
        } else {
            let mut good = Vec::new();
            for y in lift_order(s, x) {
                let lam = lambda_element(s, e, z, y)?;
                if lam.iter().any(|c| !c.is_zero()) {
                    good.push((y, lam));
                    if good.len() > ALTERNATIVE_LIFTS {
                        break;
                    }
                }
            }
            match good.first() {
                None => {
                    let elements: Vec<AlgElem> = s
                        .g_pcis
                        .iter()
                        .filter(|f| f.element.mul(&eg, g) == f.element)
                        .map(|f| f.element.clone())
                        .collect();
                    Split {
                        case: Case::Vanishing,
                        lift: x,
                        lambda: Some(s.g.zero()),
                        roots: Vec::new(),
                        d: None,
                        k: None,
                        elements,
                        extension: None,
                    }
                }
                Some((y, lam)) => {
                    let first = split_with_lift(s, e, z, *y, lam)?;
                    let ids = |sp: &Split| -> Result<Vec<usize>> {
                        let mut v = sp.elements.iter().map(|a| s.g_pci_of(a)).collect::<Result<Vec<_>>>()?;
                        v.sort_unstable();
                        Ok(v)
                    };
                    let want = ids(&first)?;
                    let mut same = true;
                    for (y2, lam2) in good.iter().skip(1) {
                        let other = split_with_lift(s, e, z, *y2, lam2)?;
                        same &= other.case == first.case && ids(&other)? == want;
                    }
                    checks.insert("lift_invariant".into(), same);
                    if first.case == Case::B {
                        checks.insert(
                            "zeta_p_in_Z".into(),
                            character_field(&s.h, z.psi).subfield().has_roots_of_unity(s.p),
                        );
                    }
                    first
                }
            }
        }
    };
    let total = if sp.case == Case::Unstable {
        sp.elements[0].clone()
    } else {
        eg.clone()
    };
    verify_decomposition(g, &sp.elements, &total)?;
    let split_ids = sp.elements.iter().map(|a| s.g_pci_of(a)).collect::<Result<Vec<_>>>()?;
    let expected = match sp.case {
        Case::Unstable | Case::One | Case::A => Some(1),
        Case::B => Some(s.p as usize),
        Case::C => sp.k.map(|k| k + 1),
        Case::Vanishing => None,
    };
    checks.insert("split_count".into(), expected.is_none_or(|n| n == split_ids.len()));
    let induction = induced_decomposition(s, e, &eta_struct, &sp, &split_ids, &mut checks)?;
    let failed: Vec<&String> = checks.iter().filter(|(_, v)| !**v).map(|(k, _)| k).collect();
    if !failed.is_empty() {
        return Err(Error::ConsistencyCheckFailed(format!("pci {eta}: failed {failed:?}")));
    }
    Ok(BermanReport {
        eta,
        stable: sp.case != Case::Unstable,
        case: sp.case,
        lift: sp.lift,
        lambda: sp.lambda,
        roots: sp.roots,
        d: sp.d,
        k: sp.k,
        split: split_ids,
        induction,
        checks,
    })
}

fn trace_values(t: &CharacterTable, orbit: &[usize], level: u64) -> Vec<Cyc> {
    (0..t.len())
        .map(|k| {
            orbit
                .iter()
                .fold(Cyc::zero(level), |acc, &i| acc.add(&t.chars[i][k].promote(level)))
        })
        .collect()
}

fn induced_decomposition(
    s: &Setting,
    e: &CentralIdempotent,
    eta: &WedderburnComponent,
    sp: &Split,
    split_ids: &[usize],
    checks: &mut BTreeMap<String, bool>,
) -> Result<Induction> {
    let gt = &s.g.table;
    let ht = &s.h.table;
    let u = gt.u;
    let tau_eta = trace_values(ht, &e.orbit, u);
    let chi_eta: Vec<Cyc> = tau_eta
        .iter()
        .map(|v| v.scale(&crate::chartable::rat(eta.m as i64, 1)))
        .collect();
    let ind = induce(&chi_eta, &ht.classes, s.h.order(), &s.embed, &s.g.group, &gt.classes);
    let eta_degree = chi_eta[0].as_rational().unwrap().to_integer().to_u64().unwrap();
    let mut constituents = Vec::new();
    for pci in &s.g_pcis {
        let tau = trace_values(gt, &pci.orbit, u);
        let ip = gt.inner_product(&ind, &tau);
        let q = ip
            .as_rational()
            .ok_or_else(|| Error::ConsistencyCheckFailed("inner product is irrational".into()))?
            .clone();
        if num_traits::Zero::is_zero(&q) {
            continue;
        }
        let w = simple_module_and_commutant(&s.g, pci, s.seed)?;
        let den = (w.m * pci.orbit.len()) as i64;
        let mult = q / crate::chartable::rat(den, 1);
        if !mult.is_integer() {
            return Err(Error::ConsistencyCheckFailed(format!(
                "multiplicity of pci {} is {mult}",
                pci.id
            )));
        }
        constituents.push(Constituent {
            pci: pci.id,
            multiplicity: mult.to_integer().to_u64().unwrap(),
            degree: (w.m as u64) * pci.psi_degree(&s.g) * pci.orbit.len() as u64,
            m: w.m,
            n: w.n,
        });
    }
    let mut ids: Vec<usize> = constituents.iter().map(|c| c.pci).collect();
    ids.sort_unstable();
    let mut want = split_ids.to_vec();
    want.sort_unstable();
    checks.insert("constituents_match_split".into(), ids == want);
    let total: u64 = constituents.iter().map(|c| c.multiplicity * c.degree).sum();
    checks.insert("induced_degree".into(), total == eta_degree * s.p);
    let p = s.p as usize;
    let m = eta.m;
    let mut irreducible = None;
    let mut s_value = None;
    match sp.case {
        Case::Unstable => {
            let c = &constituents[0];
            checks.insert(
                "induced_irreducible".into(),
                constituents.len() == 1 && c.multiplicity == 1,
            );
            checks.insert("schur_m".into(), c.m == m);
            checks.insert("reduced_dimension_np".into(), c.n == eta.n * p);
        }
        Case::One | Case::A => {
            let c = &constituents[0];
            let irr = c.multiplicity == 1;
            irreducible = Some(irr);
            checks.insert(
                "irreducible_or_p_rho".into(),
                constituents.len() == 1 && (irr || c.multiplicity == s.p),
            );
            let want_m = match (sp.case, irr) {
                (Case::One, true) => m * p,
                (Case::One, false) => m,
                (_, true) => m,
                (_, false) => m / p,
            };
            checks.insert(
                "schur_bookkeeping".into(),
                c.m == want_m && (irr || sp.case == Case::One || m.is_multiple_of(p)),
            );
        }
        Case::B => {
            checks.insert(
                "multiplicity_free".into(),
                constituents.iter().all(|c| c.multiplicity == 1),
            );
            checks.insert("schur_bookkeeping".into(), constituents.iter().all(|c| c.m == m));
        }
        Case::C => {
            let ext = split_ids[sp.extension.unwrap()];
            let (d, k) = (sp.d.unwrap(), sp.k.unwrap());
            let rho0 = constituents.iter().find(|c| c.pci == ext);
            let rest: Vec<&Constituent> = constituents.iter().filter(|c| c.pci != ext).collect();
            let sv = rest.first().map(|c| c.multiplicity).unwrap_or(0);
            s_value = Some(sv);
            checks.insert("rho0_once".into(), rho0.is_some_and(|c| c.multiplicity == 1));
            checks.insert("common_multiplicity".into(), rest.iter().all(|c| c.multiplicity == sv));
            checks.insert("dk_eq_p_minus_1".into(), d * k == p - 1);
            let g = (m as u64).gcd(&(d as u64));
            checks.insert("s_divides_gcd_m_d".into(), sv > 0 && g.is_multiple_of(sv));
            checks.insert(
                "degree_ratio".into(),
                sv > 0 && rest.iter().all(|c| c.degree * sv == d as u64 * eta_degree),
            );
            checks.insert(
                "schur_bookkeeping".into(),
                rho0.is_some_and(|c| c.m == m) && sv > 0 && rest.iter().all(|c| c.m as u64 * sv == m as u64),
            );
        }
        Case::Vanishing => {}
    }
    Ok(Induction {
        eta_degree,
        eta_m: eta.m,
        eta_n: eta.n,
        constituents,
        irreducible,
        s: s_value,
    })
}

/// Reports for every pci of `F[H]`.
pub fn split_all(s: &Setting) -> Result<Vec<BermanReport>> {
    (0..s.h_pcis.len()).map(|i| split(s, i)).collect()
}

/// The center of the component of `e` in `F[H]`.
pub fn eta_center(s: &Setting, eta: usize) -> Result<RealizedCenter> {
    center_of_component(&s.h, &s.h_pcis[eta])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn setting(name: &str, params: &[i64], field: &str) -> Setting {
        let g = catalog(name, params).unwrap();
        let (p, sub) = auto_subgroup(&g).unwrap();
        let c = Context::new(g, &field.parse().unwrap(), 0).unwrap();
        Setting::new(&c, p, sub, 0).unwrap()
    }

    fn faithful(s: &Setting) -> usize {
        let one = s.h.zero().one_like();
        // 1 - e_x: the pci with coefficient 1/2 or (p-1)/p at the identity and largest orbit
        (0..s.h_pcis.len())
            .filter(|&i| s.h_pcis[i].class_coeffs[0] != one)
            .max_by_key(|&i| (s.h_pcis[i].orbit.len() * s.h_pcis[i].psi_degree(&s.h) as usize, i))
            .unwrap()
    }

    #[test]
    fn sl23_case_c() {
        let s = setting("SL23", &[], "Q");
        let r = split(&s, faithful(&s)).unwrap();
        assert_eq!(r.case, Case::C);
        assert_eq!((r.d, r.k, r.induction.s), (Some(2), Some(1), Some(2)));
        assert_eq!(r.split.len(), 2);
    }

    #[test]
    fn cp_x_cp_case_b() {
        let s = setting("CxC", &[3], "Q");
        let r = split(&s, faithful(&s)).unwrap();
        assert_eq!(r.case, Case::B);
        assert_eq!(r.split.len(), 3);
    }

    #[test]
    fn small_cases() {
        let s = setting("Q8", &[], "Q");
        assert_eq!(split(&s, faithful(&s)).unwrap().case, Case::One);
        let s = setting("Q8oC4", &[], "Q");
        let r = split(&s, faithful(&s)).unwrap();
        assert_eq!(r.case, Case::A);
        assert_eq!(r.lambda, Some(s.g.base.amb.int(-1)));
        let s = setting("Cp2", &[3], "Q");
        assert_eq!(split(&s, faithful(&s)).unwrap().case, Case::A);
        let s = setting("C7:C3", &[], "Q");
        assert_eq!(split(&s, faithful(&s)).unwrap().case, Case::One);
    }
}
