//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use wedderburn::algebra::AlgElem;
use wedderburn::arith::cyclotomic::factor_cyclotomic;
use wedderburn::arith::ntheory::{gcd, is_prime, units};
use wedderburn::arith::{Cyc, FieldSpec, Scalar};
use wedderburn::berman::{eta_center, prime_index_subgroups, split, BermanReport, Case, Setting};
use wedderburn::catalog::catalog;
use wedderburn::ftheory::{f_char_table, f_classes, pcis, verify_pcis, CentralIdempotent, Context};
use wedderburn::group::Group;
use wedderburn::oracle::center_split;
use wedderburn::structure::{base_change_split, simple_module_and_commutant, WedderburnComponent};

const SEED: u64 = 0;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: wedderburn::Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

const CATALOG: &[(&str, &[i64])] = &[
    ("C", &[6]),
    ("C", &[12]),
    ("CxC", &[2]),
    ("CxC", &[3]),
    ("CxC", &[5]),
    ("D", &[3]),
    ("D", &[4]),
    ("Q8", &[]),
    ("C7:C3", &[]),
    ("Cp2", &[2]),
    ("Cp2", &[3]),
    ("Cp2", &[5]),
    ("Q8oC4", &[]),
    ("SL23", &[]),
];

fn group_name(name: &str, params: &[i64]) -> String {
    let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    if ps.is_empty() {
        name.to_string()
    } else {
        format!("{name} {}", ps.join(" "))
    }
}

/// The first `count` primes not dividing `order`.
fn coprime_primes(order: u64, count: usize) -> Vec<u64> {
    (2..)
        .filter(|&l| is_prime(l) && !order.is_multiple_of(l))
        .take(count)
        .collect()
}

/// `Q`, `Q(zeta_u)` and three finite fields of order prime to `|G|`.
fn matrix_fields(g: &Group) -> Vec<String> {
    let ls = coprime_primes(g.order() as u64, 2);
    vec![
        "Q".into(),
        format!("Q(zeta_{})", g.exponent()),
        format!("GF({})", ls[0]),
        format!("GF({})", ls[1]),
        format!("GF({})", ls[0] * ls[0]),
    ]
}

/// The least prime `q = 1 (mod u)`.
fn splitting_prime(u: u64) -> u64 {
    (1..).map(|k| k * u + 1).find(|&q| is_prime(q)).unwrap()
}

struct Entry {
    label: String,
    field: String,
    ctx: Context,
}

fn build(name: &str, params: &[i64], field: &str) -> std::result::Result<Entry, String> {
    let g = ok(catalog(name, params), "catalog")?;
    let spec: FieldSpec = ok(field.parse(), "field")?;
    Ok(Entry {
        label: group_name(name, params),
        field: field.to_string(),
        ctx: ok(Context::new(g, &spec, SEED), "context")?,
    })
}

fn matrix() -> std::result::Result<Vec<Entry>, String> {
    let mut out = Vec::new();
    for (name, params) in CATALOG {
        let g = ok(catalog(name, params), "catalog")?;
        for f in matrix_fields(&g) {
            out.push(build(name, params, &f)?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- oracles

/// Image of `Gal(F(zeta_u)/F)` in `Z_u^*`, from the field description alone.
fn galois_residues(field: &str, u: u64) -> Vec<u64> {
    let spec: FieldSpec = field.parse().unwrap();
    let all = units(u.max(1));
    let mut a: Vec<u64> = match spec {
        FieldSpec::Rationals => all,
        FieldSpec::Cyclotomic(m) => {
            let c = gcd(m, u);
            all.into_iter().filter(|a| a % c == 1 % c).collect()
        }
        FieldSpec::Finite { q, .. } => {
            let mut v = vec![1 % u.max(1)];
            let mut x = q % u.max(1);
            while !v.contains(&x) {
                v.push(x);
                x = x * q % u;
            }
            v
        }
    };
    if u == 1 {
        a = vec![1];
    }
    a.sort_unstable();
    a
}

/// Element partition `y ~ x` iff `y` is conjugate to some `x^a`, `a` in `A`.
fn definition_partition(g: &Group, a: &[u64]) -> BTreeSet<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for x in 0..g.order() {
        let mut set = BTreeSet::new();
        for &r in a {
            let xr = g.pow(x, r as i64);
            for t in 0..g.order() {
                set.insert(g.conj(xr, t));
            }
        }
        out.insert(set);
    }
    out
}

/// Elements grouped by the values of all traces `sum_a chi(x^a)`.
fn value_partition(ctx: &Context, a: &[u64]) -> BTreeSet<BTreeSet<usize>> {
    let g = &ctx.group;
    let t = &ctx.table;
    let cl = &t.classes;
    let mut by: HashMap<Vec<Cyc>, BTreeSet<usize>> = HashMap::new();
    for x in 0..g.order() {
        let key: Vec<Cyc> = (0..t.len())
            .map(|i| {
                a.iter().fold(Cyc::zero(t.u), |acc, &r| {
                    acc.add(&t.chars[i][cl.class_of[g.pow(x, r as i64)]])
                })
            })
            .collect();
        by.entry(key).or_default().insert(x);
    }
    by.into_values().collect()
}

/// Orbits of the absolutely irreducible characters under `chi -> chi^a`.
fn character_orbit_count(ctx: &Context, a: &[u64]) -> usize {
    let t = &ctx.table;
    let rows: Vec<Vec<Cyc>> = (0..t.len())
        .map(|i| {
            let mut orbit: Vec<Vec<Cyc>> = a
                .iter()
                .map(|&r| {
                    (0..t.len())
                        .map(|k| t.chars[i][t.power[k][r as usize % t.u as usize]].clone())
                        .collect()
                })
                .collect();
            orbit.sort();
            orbit.swap_remove(0)
        })
        .collect();
    rows.into_iter().collect::<BTreeSet<_>>().len()
}

/// `e_g = (1/|g|) sum_j g^j`.
fn e_of(ctx: &Context, x: usize) -> AlgElem {
    let g = &ctx.group;
    let k = g.element_order(x) as i64;
    let zero = ctx.zero();
    let powers: Vec<usize> = (0..k).map(|j| g.pow(x, j)).collect();
    AlgElem::sum_of(g.order(), &powers, &zero).scale(&ctx.base.amb.ratio(1, k))
}

fn generator(g: &Group, name: &str) -> usize {
    let i = g.generator_names().iter().position(|n| n == name).unwrap();
    g.generators()[i]
}

fn one(ctx: &Context) -> AlgElem {
    AlgElem::one(ctx.order(), &ctx.zero())
}

/// Index of the pci of `F[H]` whose image in `F[G]` is `target`.
fn h_pci(s: &Setting, target: &AlgElem) -> std::result::Result<usize, String> {
    s.h_pcis
        .iter()
        .position(|e| e.element.push_forward(&s.embed, s.g.order()) == *target)
        .ok_or_else(|| "no pci of F[H] equals the expected idempotent".to_string())
}

fn conj_cyc(c: &Cyc) -> Cyc {
    let n = c.order();
    if n <= 2 {
        c.clone()
    } else {
        c.galois(n - 1)
    }
}

/// Multiplicity of the `F`-representation of `rho` in the induced `F`-representation
/// of `eta`, by Frobenius reciprocity on the absolute characters.
fn induced_multiplicity(
    s: &Setting,
    eta: &CentralIdempotent,
    m_eta: usize,
    rho: &CentralIdempotent,
    m_rho: usize,
) -> BigRational {
    let (ht, gt) = (&s.h.table, &s.g.table);
    let u = gt.u;
    let mut acc = Cyc::zero(u);
    for h in 0..s.h.order() {
        let a = eta.orbit.iter().fold(Cyc::zero(u), |z, &i| {
            z.add(&ht.chars[i][ht.classes.class_of[h]].promote(u))
        });
        let b = rho.orbit.iter().fold(Cyc::zero(u), |z, &j| {
            z.add(&gt.chars[j][gt.classes.class_of[s.embed[h]]])
        });
        acc = acc.add(&a.mul(&conj_cyc(&b)));
    }
    let ip = acc.as_rational().expect("rational inner product") / BigRational::from_integer(s.h.order().into());
    ip * BigRational::from_integer(m_eta.into()) / BigRational::from_integer((m_rho * rho.orbit.len()).into())
}

fn component(ctx: &Context, e: &CentralIdempotent) -> std::result::Result<WedderburnComponent, String> {
    ok(simple_module_and_commutant(ctx, e, SEED), "structure")
}

/// `dim_F` of the irreducible `F`-representation of a pci.
fn f_degree(ctx: &Context, e: &CentralIdempotent, m: usize) -> u64 {
    m as u64 * e.psi_degree(ctx) * e.orbit.len() as u64
}

fn setting_for(ctx: &Context, generated_by: &[&str]) -> std::result::Result<Setting, String> {
    let g = &ctx.group;
    let gens: Vec<usize> = generated_by.iter().map(|n| generator(g, n)).collect();
    let members = g.closure_of(&gens);
    let (p, sub) = prime_index_subgroups(g)
        .into_iter()
        .find(|(_, s)| s.members == members)
        .ok_or("subgroup is not normal of prime index")?;
    ok(Setting::new(ctx, p, sub, SEED), "setting")
}

fn report(s: &Setting, eta: usize) -> std::result::Result<BermanReport, String> {
    ok(split(s, eta), "berman")
}

// ---------------------------------------------------------------- examples

fn criterion_1() -> Outcome {
    let q8 = build("Q8", &[], "Q")?.ctx;
    let s = setting_for(&q8, &["x", "y"])?;
    let (x, y) = (generator(&q8.group, "x"), generator(&q8.group, "y"));
    let target = one(&q8).sub(&e_of(&q8, x));
    let eta = h_pci(&s, &target)?;

    // (y - y^-1)/2 squares to -e in Q[H], so Z contains Q(i)
    let g = &q8.group;
    let w = AlgElem::basis(8, y, &q8.zero())
        .sub(&AlgElem::basis(8, g.inv(y), &q8.zero()))
        .scale(&q8.base.amb.ratio(1, 2));
    ensure!(
        w.mul(&target, g) == w && w.mul(&w, g) == target.neg(),
        "no square root of -e_eta in e_eta Q[H]"
    );
    let z = ok(eta_center(&s, eta), "center")?;
    ensure!(z.delta == 2, "delta(Z) = {}", z.delta);
    let f = &z.minpoly;
    let (b, c) = (f.coeff(1), f.coeff(0));
    // X^2 + bX + c defines Q(i) iff 4c - b^2 is a nonzero rational square
    let minus_disc = c.scale_int(4).sub(&b.mul(&b));
    let q = minus_disc.as_cyc().as_rational().ok_or("discriminant is irrational")?;
    let is_square = q > BigRational::zero() && {
        let (n, d) = (q.numer(), q.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        &rn * &rn == *n && &rd * &rd == *d
    };
    ensure!(is_square, "minimal polynomial {} does not define Q(i)", f.pretty());

    let r = report(&s, eta)?;
    ensure!(r.case == Case::One, "case {}", r.case.name());
    ensure!(r.split.len() == 1, "e_eta split into {}", r.split.len());
    let e_eta = &s.h_pcis[eta];
    let m_eta = component(&s.h, e_eta)?.m;
    let rho = &s.g_pcis[r.split[0]];
    let mult = induced_multiplicity(&s, e_eta, m_eta, rho, component(&q8, rho)?.m);
    ensure!(mult.is_one(), "eta induced has multiplicity {mult}");
    let w = component(&q8, rho)?;
    ensure!(
        (w.delta, w.m, w.n) == (1, 2, 1),
        "rho: delta={} m={} n={}",
        w.delta,
        w.m,
        w.n
    );
    // H_Q has dimension 4; 16 would exceed dim Q[Q8] = 8
    ensure!(
        w.dim_i == 4 && w.dim_i == w.n * w.n * w.m * w.m * w.delta,
        "dim_I = {}",
        w.dim_i
    );
    let mut degrees: Vec<usize> = Vec::new();
    for e in ok(pcis(&q8), "pcis")? {
        degrees.push(component(&q8, &e)?.dim_v);
    }
    degrees.sort_unstable();
    ensure!(degrees == vec![1, 1, 1, 1, 4], "rational degrees {degrees:?}");
    Ok(format!(
        "Q8/C4 over Q: Z = Q(i), case 1, eta induced irreducible, rho has delta=1 m=2 n=1 dim_I=4 (H_Q), degrees {degrees:?}"
    ))
}

fn criterion_2() -> Outcome {
    let ctx = build("C7:C3", &[], "Q")?.ctx;
    let s = setting_for(&ctx, &["x"])?;
    let x = generator(&ctx.group, "x");
    let eta = h_pci(&s, &one(&ctx).sub(&e_of(&ctx, x)))?;
    let r = report(&s, eta)?;
    ensure!(r.case == Case::One, "case {}", r.case.name());
    ensure!(r.split.len() == 1, "e_eta split into {}", r.split.len());
    let e_eta = &s.h_pcis[eta];
    let m_eta = component(&s.h, e_eta)?.m;
    let rho = &s.g_pcis[r.split[0]];
    let w = component(&ctx, rho)?;
    let mult = induced_multiplicity(&s, e_eta, m_eta, rho, w.m);
    ensure!(mult == BigRational::from_integer(3.into()), "eta induced = {mult} rho");
    ensure!(
        (w.n, w.delta, w.m) == (3, 2, 1),
        "rho: n={} delta={} m={}",
        w.n,
        w.delta,
        w.m
    );
    Ok("C7:C3/C7 over Q: case 1, eta induced = 3 rho, rho has n=3 delta=2 m=1".into())
}

fn criterion_3() -> Outcome {
    for p in [2i64, 3, 5] {
        let ctx = build("Cp2", &[p], "Q")?.ctx;
        let s = setting_for(&ctx, &["x"])?;
        let x = generator(&ctx.group, "x");
        let eta = h_pci(&s, &one(&ctx).sub(&e_of(&ctx, x)))?;
        let z = ok(eta_center(&s, eta), "center")?;
        ensure!(z.delta == p as usize - 1, "p={p}: Z has degree {}", z.delta);
        let r = report(&s, eta)?;
        let lam = r.lambda.clone().ok_or("no lambda")?;
        ensure!(
            lam.pow(p as u64).is_one() && !lam.is_one(),
            "p={p}: lambda {} is not a primitive p-th root",
            lam.pretty()
        );
        ensure!(r.roots.is_empty(), "p={p}: {} p-th roots of lambda", r.roots.len());
        ensure!(r.case == Case::A, "p={p}: case {}", r.case.name());
        let e_eta = &s.h_pcis[eta];
        let rho = &s.g_pcis[r.split[0]];
        let w = component(&ctx, rho)?;
        let mult = induced_multiplicity(&s, e_eta, component(&s.h, e_eta)?.m, rho, w.m);
        ensure!(
            r.split.len() == 1 && mult.is_one(),
            "p={p}: eta induced is not irreducible"
        );
        ensure!(w.delta == (p * (p - 1)) as usize, "p={p}: delta(rho) = {}", w.delta);
    }
    Ok("C_{p^2}/C_p over Q, p in {2,3,5}: lambda primitive p-th root, no p-th roots, case A, rho irreducible with delta = p(p-1)".into())
}

fn criterion_4() -> Outcome {
    let ctx = build("Q8oC4", &[], "Q")?.ctx;
    let s = setting_for(&ctx, &["x", "y", "z"])?;
    let x = generator(&ctx.group, "x");
    let eta = h_pci(&s, &one(&ctx).sub(&e_of(&ctx, x)))?;
    let r = report(&s, eta)?;
    ensure!(
        r.lambda == Some(ctx.base.amb.int(-1)),
        "lambda = {:?}",
        r.lambda.map(|l| l.pretty())
    );
    ensure!(r.case == Case::A, "case {}", r.case.name());
    ensure!(r.split.len() == 1, "e_eta split into {}", r.split.len());
    let e_eta = &s.h_pcis[eta];
    let rho = &s.g_pcis[r.split[0]];
    let w = component(&ctx, rho)?;
    let mult = induced_multiplicity(&s, e_eta, component(&s.h, e_eta)?.m, rho, w.m);
    ensure!(mult == BigRational::from_integer(2.into()), "eta induced = {mult} rho");
    ensure!(
        (w.delta, w.m, w.n) == (2, 1, 2),
        "rho: delta={} m={} n={}",
        w.delta,
        w.m,
        w.n
    );
    Ok("Q8oC4/Q8 over Q: lambda = -1, case A, eta induced = 2 rho, rho has delta=2 m=1 n=2".into())
}

fn criterion_5() -> Outcome {
    for p in [2i64, 3, 5] {
        let ctx = build("CxC", &[p], "Q")?.ctx;
        let g = &ctx.group;
        let s = setting_for(&ctx, &["x"])?;
        let (x, y) = (generator(g, "x"), generator(g, "y"));
        let not_x = one(&ctx).sub(&e_of(&ctx, x));
        let eta = h_pci(&s, &not_x)?;
        let r = report(&s, eta)?;
        ensure!(r.lambda.as_ref().is_some_and(|l| l.is_one()), "p={p}: lambda is not 1");
        ensure!(r.roots.len() == p as usize, "p={p}: {} p-th roots", r.roots.len());
        ensure!(r.case == Case::B, "p={p}: case {}", r.case.name());
        let want: BTreeSet<Vec<Scalar>> = (0..p)
            .map(|i| e_of(&ctx, g.mul(g.pow(x, i), y)).mul(&not_x, g).coeffs)
            .collect();
        let got: BTreeSet<Vec<Scalar>> = r.split.iter().map(|&j| s.g_pcis[j].element.coeffs.clone()).collect();
        ensure!(
            r.split.len() == p as usize && want == got,
            "p={p}: split pcis differ from e_(x^i y)(1 - e_x)"
        );
    }
    Ok("C_p x C_p/C_p over Q, p in {2,3,5}: lambda = 1, p roots, case B, split = {e_(x^i y)(1 - e_x)}".into())
}

fn criterion_6() -> Outcome {
    let ctx = build("SL23", &[], "Q")?.ctx;
    let s = setting_for(&ctx, &["x", "y", "z"])?;
    let x = generator(&ctx.group, "x");
    let eta = h_pci(&s, &one(&ctx).sub(&e_of(&ctx, x)))?;
    let r = report(&s, eta)?;
    ensure!(r.case == Case::C, "case {}", r.case.name());
    ensure!((r.d, r.k) == (Some(2), Some(1)), "d={:?} k={:?}", r.d, r.k);
    ensure!(r.split.len() == 2, "e_eta split into {}", r.split.len());
    let e_eta = &s.h_pcis[eta];
    let m_eta = component(&s.h, e_eta)?.m;
    let mut by_mult = BTreeMap::new();
    for &j in &r.split {
        let rho = &s.g_pcis[j];
        let w = component(&ctx, rho)?;
        let mult = induced_multiplicity(&s, e_eta, m_eta, rho, w.m);
        by_mult.insert(mult.to_integer().to_string(), w.m);
    }
    let want: BTreeMap<String, usize> = [("1".to_string(), 2), ("2".to_string(), 1)].into();
    ensure!(by_mult == want, "multiplicity -> Schur index: {by_mult:?}");
    ensure!(
        m_eta == 2 && r.induction.s == Some(2) && gcd(m_eta as u64, 2).is_multiple_of(2),
        "m(eta)={m_eta} s={:?}",
        r.induction.s
    );
    Ok(
        "SL2(3)/Q8 over Q: case C, d=2 k=1, 2 pcis, eta induced = rho0 + 2 rho1, m(rho0)=2 m(rho1)=1, s=2 | gcd(m,d)=2"
            .into(),
    )
}

// ---------------------------------------------------------------- matrix

fn criterion_7(mx: &[Entry]) -> Outcome {
    for en in mx {
        let ctx = &en.ctx;
        let a = galois_residues(&en.field, ctx.table.u);
        let fc = ok(f_classes(ctx), "f_classes")?;
        let table = ok(f_char_table(ctx, &fc), "f_char_table")?;
        let here = format!("{} over {}", en.label, en.field);
        ensure!(
            table.len() == fc.len(),
            "{here}: {} rows, {} F-classes",
            table.len(),
            fc.len()
        );
        ensure!(
            character_orbit_count(ctx, &a) == fc.len(),
            "{here}: character orbits differ from F-class count"
        );
        let from_orbits: BTreeSet<BTreeSet<usize>> = fc
            .fclasses
            .iter()
            .map(|c| c.members.iter().copied().collect())
            .collect();
        ensure!(
            value_partition(ctx, &a) == from_orbits,
            "{here}: character values disagree with the orbit partition"
        );
        ensure!(
            definition_partition(&ctx.group, &a) == from_orbits,
            "{here}: definition disagrees with the orbit partition"
        );
    }
    Ok(format!(
        "{} (group, field) pairs: rows = F-classes, value and definition partitions match",
        mx.len()
    ))
}

fn criterion_8(mx: &[Entry]) -> Outcome {
    let mut count = 0;
    for en in mx.iter().filter(|e| e.field == "Q" || e.field.starts_with("GF")) {
        let ctx = &en.ctx;
        let g = &ctx.group;
        let cl = ctx.classes();
        let a = galois_residues(&en.field, ctx.table.u);
        let mut by_order: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for x in 0..g.order() {
            let n = g.element_order(x);
            if let std::collections::btree_map::Entry::Vacant(v) = by_order.entry(n) {
                v.insert(ok(factor_cyclotomic(n, &ctx.base), "factor_cyclotomic")?.r_sequence);
            }
            let mut def = BTreeSet::new();
            for &r in &a {
                let xr = g.pow(x, r as i64);
                def.extend((0..g.order()).map(|t| g.conj(xr, t)));
            }
            let union: BTreeSet<usize> = by_order[&n]
                .iter()
                .flat_map(|&r| cl.classes[cl.class_of[g.pow(x, r as i64)]].iter().copied())
                .collect();
            ensure!(
                def == union,
                "{} over {}: F-class of element {} is not the union",
                en.label,
                en.field,
                g.label(x)
            );
            count += 1;
        }
    }
    Ok(format!("{count} elements over Q and GF(q): C_F(x) = union of C(x^r_t)"))
}

fn criterion_9(mx: &[Entry]) -> Outcome {
    for en in mx {
        let ctx = &en.ctx;
        let g = &ctx.group;
        let here = format!("{} over {}", en.label, en.field);
        let list = ok(pcis(ctx), "pcis")?;
        let formula: BTreeSet<Vec<Scalar>> = list.iter().map(|e| e.class_coeffs.clone()).collect();
        let oracle: BTreeSet<Vec<Scalar>> = ok(center_split(ctx, SEED), "oracle")?.into_iter().collect();
        ensure!(
            formula.len() == list.len() && formula == oracle,
            "{here}: formula and oracle pcis differ"
        );
        ok(verify_pcis(ctx, &list), &here)?;
        let mut sum = AlgElem::zero(g.order(), &ctx.zero());
        for (i, e) in list.iter().enumerate() {
            ensure!(
                e.element.is_central(g) && !e.element.is_zero(),
                "{here}: pci {i} is zero or not central"
            );
            for (j, f) in list.iter().enumerate() {
                let prod = e.element.mul(&f.element, g);
                ensure!(
                    if i == j { prod == e.element } else { prod.is_zero() },
                    "{here}: e_{i} e_{j} is wrong"
                );
            }
            sum = sum.add(&e.element);
        }
        ensure!(sum == one(ctx), "{here}: pcis do not sum to 1");
    }
    Ok(format!(
        "{} (group, field) pairs: formula pcis = oracle pcis, idempotent, orthogonal, central, sum 1",
        mx.len()
    ))
}

fn criterion_10(mx: &[Entry]) -> Outcome {
    let mut comps = 0;
    for en in mx {
        let ctx = &en.ctx;
        let amb = &ctx.base.amb;
        let here = format!("{} over {}", en.label, en.field);
        let mut total = 0;
        for e in ok(pcis(ctx), "pcis")? {
            let w = component(ctx, &e)?;
            let (n, m, d) = (w.n, w.m, w.delta);
            ensure!(
                w.dim_i == n * n * m * m * d,
                "{here}: dim_I = {} for n={n} m={m} delta={d}",
                w.dim_i
            );
            ensure!(
                w.dim_v == n * m * m * d,
                "{here}: dim_V = {} for n={n} m={m} delta={d}",
                w.dim_v
            );
            total += w.dim_i;
            let below = ok(base_change_split(ctx, &e, &w.center), "base change")?;
            let elems: Vec<Vec<Scalar>> = below.iter().map(|b| b.element.coeffs.clone()).collect();
            ensure!(
                elems.len() == d,
                "{here}: {} idempotents after base change, delta={d}",
                elems.len()
            );
            let mut perms = BTreeSet::new();
            for sigma in &ctx.base.gal {
                let perm = elems
                    .iter()
                    .map(|c| {
                        let img: Vec<Scalar> = c.iter().map(|v| amb.apply(sigma, v)).collect();
                        elems.iter().position(|o| *o == img)
                    })
                    .collect::<Option<Vec<usize>>>()
                    .ok_or(format!("{here}: Galois image is not a base-changed pci"))?;
                perms.insert(perm);
            }
            let orbit: BTreeSet<usize> = perms.iter().map(|p| p[0]).collect();
            ensure!(
                orbit.len() == d && perms.len() == d,
                "{here}: action on {d} pcis is not simply transitive"
            );
            comps += 1;
        }
        ensure!(total == ctx.order(), "{here}: sum of dim_I = {total}");
    }
    Ok(format!(
        "{comps} components: dim_I = n^2 m^2 delta, dim_V = n m^2 delta, sum = |G|, Galois action regular"
    ))
}

/// Conjugates of a pci of `F[H]` under powers of the lift, in `F[G]`.
fn conjugate_orbit(s: &Setting, eta: usize) -> Vec<AlgElem> {
    let g = &s.g.group;
    let x = s.lift();
    let e = s.h_pcis[eta].element.push_forward(&s.embed, g.order());
    let mut orbit = vec![e.clone()];
    let mut cur = e.conjugate_by(x, g);
    while cur != e {
        orbit.push(cur.clone());
        cur = cur.conjugate_by(x, g);
    }
    orbit
}

fn criterion_11() -> Outcome {
    let mut runs = 0;
    for (name, params) in CATALOG {
        let g = ok(catalog(name, params), "catalog")?;
        let u = g.exponent();
        for field in [format!("Q(zeta_{u})"), format!("GF({})", splitting_prime(u))] {
            let en = build(name, params, &field)?;
            let ctx = &en.ctx;
            for (p, sub) in prime_index_subgroups(&ctx.group) {
                let s = ok(Setting::new(ctx, p, sub, SEED), "setting")?;
                for eta in 0..s.h_pcis.len() {
                    let here = format!("{} over {field}, index {p}, pci {eta}", en.label);
                    let r = report(&s, eta)?;
                    let orbit = conjugate_orbit(&s, eta);
                    let mut sum = AlgElem::zero(ctx.order(), &ctx.zero());
                    for &j in &r.split {
                        sum = sum.add(&s.g_pcis[j].element);
                    }
                    if orbit.len() == 1 {
                        ensure!(
                            r.case == Case::B && r.split.len() == p as usize,
                            "{here}: stable pci gave case {} with {} pcis",
                            r.case.name(),
                            r.split.len()
                        );
                        ensure!(sum == orbit[0], "{here}: split pcis do not sum to e_eta");
                    } else {
                        ensure!(orbit.len() == p as usize, "{here}: orbit of size {}", orbit.len());
                        let total = orbit
                            .iter()
                            .fold(AlgElem::zero(ctx.order(), &ctx.zero()), |a, b| a.add(b));
                        ensure!(
                            r.split.len() == 1 && sum == total,
                            "{here}: unstable orbit does not give one pci"
                        );
                    }
                    runs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{runs} pcis over Q(zeta_u) and GF(q = 1 mod u): stable -> p pcis, unstable orbit -> 1 pci"
    ))
}

fn criterion_12(mx: &[Entry]) -> Outcome {
    let mut runs = 0;
    for en in mx {
        let (ctx, field) = (&en.ctx, &en.field);
        for (p, sub) in prime_index_subgroups(&ctx.group) {
            let s = ok(Setting::new(ctx, p, sub, SEED), "setting")?;
            let pu = p as usize;
            for eta in 0..s.h_pcis.len() {
                let here = format!("{} over {field}, index {p}, pci {eta}", en.label);
                let r = report(&s, eta)?;
                let e_eta = &s.h_pcis[eta];
                let m = component(&s.h, e_eta)?.m;
                let mut outs = Vec::new();
                for &j in &r.split {
                    let rho = &s.g_pcis[j];
                    let mr = component(ctx, rho)?.m;
                    let mult = induced_multiplicity(&s, e_eta, m, rho, mr);
                    ensure!(mult.is_integer() && !mult.is_zero(), "{here}: multiplicity {mult}");
                    let mult: u64 = mult.to_integer().try_into().unwrap();
                    outs.push((mr, mult, f_degree(ctx, rho, mr)));
                }
                let deg_eta = f_degree(&s.h, e_eta, m);
                let total: u64 = outs.iter().map(|(_, k, d)| k * d).sum();
                ensure!(total == p * deg_eta, "{here}: induced degree {total} != p deg eta");
                let good = match r.case {
                    Case::Unstable => outs.len() == 1 && outs[0].0 == m,
                    Case::One => outs.len() == 1 && outs[0].0 == if outs[0].1 == 1 { m * pu } else { m },
                    Case::A => outs.len() == 1 && outs[0].0 == if outs[0].1 == 1 { m } else { m / pu },
                    Case::B => outs.iter().all(|o| o.0 == m && o.1 == 1),
                    Case::C => {
                        let (d, k) = (r.d.unwrap(), r.k.unwrap());
                        let base = wedderburn::structure::character_field(
                            &s.h,
                            eta_center(&s, eta).map_err(|e| e.to_string())?.psi,
                        );
                        let d_here = base.residues(p).len();
                        // rho0 is the extension of eta; when s = 1 it is not singled out by its multiplicity
                        let fits = |i0: usize| {
                            let rho0 = outs[i0];
                            let rest: Vec<_> = outs
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| *i != i0)
                                .map(|(_, o)| o)
                                .collect();
                            let sv = rest.first().map_or(0, |o| o.1);
                            rho0.1 == 1
                                && rho0.0 == m
                                && rest.len() == k
                                && sv > 0
                                && (m as u64).gcd(&(d as u64)).is_multiple_of(sv)
                                && rest
                                    .iter()
                                    .all(|o| o.1 == sv && o.0 as u64 * sv == m as u64 && o.2 * sv == d as u64 * deg_eta)
                        };
                        d * k == pu - 1 && d == d_here && (0..outs.len()).any(fits)
                    }
                    Case::Vanishing => false,
                };
                ensure!(
                    good,
                    "{here}: case {} bookkeeping fails: m(eta)={m}, (m, mult, deg) = {outs:?}",
                    r.case.name()
                );
                runs += 1;
            }
        }
    }
    Ok(format!(
        "{runs} Berman runs: Schur indices and degrees match the case bookkeeping"
    ))
}

fn criterion_13() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_wedderburn");
    for (group, field) in [(&["SL23"][..], "Q"), (&["C", "12"][..], "GF(5)")] {
        let run = || {
            Command::new(exe)
                .arg("verify")
                .arg("--catalog")
                .args(group)
                .args(["--field", field, "--seed", "7"])
                .env_remove("WEDDERBURN_SEED")
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure!(
            a.status.success(),
            "verify {group:?} over {field} failed: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        ensure!(
            a.stdout == b.stdout && !a.stdout.is_empty(),
            "verify {group:?} over {field}: outputs differ"
        );
    }
    Ok("verify output is byte-identical across runs (SL23/Q, C12/GF(5))".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mx = matrix();
    let mx = &mx;
    let with = |f: fn(&[Entry]) -> Outcome| -> Box<dyn Fn() -> Outcome + '_> {
        Box::new(move || match mx {
            Ok(m) => f(m),
            Err(e) => Err(format!("matrix: {e}")),
        })
    };
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "Q8 over Q", Box::new(criterion_1)),
        (2, "C7:C3 over Q", Box::new(criterion_2)),
        (3, "C_{p^2} over Q", Box::new(criterion_3)),
        (4, "Q8oC4 over Q", Box::new(criterion_4)),
        (5, "C_p x C_p over Q", Box::new(criterion_5)),
        (6, "SL2(3) over Q", Box::new(criterion_6)),
        (7, "F-class count and partition", with(criterion_7)),
        (8, "F-classes as unions of classes", with(criterion_8)),
        (9, "pci formula against the oracle", with(criterion_9)),
        (10, "dimension identities", with(criterion_10)),
        (11, "splitting fields", Box::new(criterion_11)),
        (12, "Schur index bookkeeping", with(criterion_12)),
        (13, "determinism", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (n, title, f) in &criteria {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {n:>2} {title}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n:>2} {title}: {why} [{secs:.1}s]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
