//! JSON encodings of the results. Objects use sorted keys, so equal
//! results serialize to identical bytes.

use serde_json::{json, Value};

use crate::arith::cyclo::Cyc;
use crate::arith::poly::Poly;
use crate::arith::scalar::Scalar;
use crate::berman::{BermanReport, Setting};
use crate::chartable::{induce, CharacterTable};
use crate::ftheory::{CentralIdempotent, Context, FCharTable, FClassPartition};
use crate::group::Group;
use crate::structure::WedderburnComponent;

/// Rationals as `"p/q"`, other cyclotomic values as `{"zeta", "coeffs"}`,
/// finite-field values as their coordinate polynomial over the prime field.
pub fn scalar(x: &Scalar) -> Value {
    match x {
        Scalar::Cyc(c) => cyc(c),
        Scalar::Ff(f) => json!(f.coords()),
    }
}

pub fn cyc(c: &Cyc) -> Value {
    match c.as_rational() {
        Some(q) => json!(q.to_string()),
        None => json!({
            "zeta": c.order(),
            "coeffs": c.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        }),
    }
}

pub fn poly(f: &Poly) -> Value {
    Value::Array(f.coeffs().iter().map(scalar).collect())
}

pub fn group(g: &Group) -> Value {
    json!({"name": g.name, "order": g.order(), "generators": g.generator_names()})
}

pub fn classes(g: &Group, t: &CharacterTable) -> Value {
    let cl = &t.classes;
    Value::Array(
        (0..cl.len())
            .map(|k| {
                json!({
                    "index": k,
                    "size": cl.sizes[k],
                    "representative": g.label(cl.representatives[k]),
                    "order": g.element_order(cl.representatives[k]),
                })
            })
            .collect(),
    )
}

pub fn fclasses(g: &Group, fc: &FClassPartition) -> Value {
    Value::Array(
        fc.fclasses
            .iter()
            .enumerate()
            .map(|(i, l)| {
                json!({
                    "index": i,
                    "classes": l.classes,
                    "size": l.members.len(),
                    "representative": g.label(l.representative),
                    "order": l.order,
                    "r_sequence": l.r_sequence,
                })
            })
            .collect(),
    )
}

pub fn chartable(t: &CharacterTable) -> Value {
    let rows: Vec<Value> = (0..t.len())
        .map(|i| {
            let values: Vec<Value> = t.chars[i]
                .iter()
                .map(|v| {
                    let v = v.promote(t.u);
                    json!({
                        "coeffs": v.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "pretty": v.pretty(),
                    })
                })
                .collect();
            json!({"index": i, "degree": t.degrees[i], "indicator": t.indicator(i), "values": values})
        })
        .collect();
    json!({"u": t.u, "class_sizes": t.classes.sizes, "rows": rows})
}

pub fn fchartable(t: &FCharTable) -> Value {
    let rows: Vec<Value> = (0..t.len())
        .map(|j| {
            json!({
                "orbit": t.orbits[j],
                "psi_degree": t.psi_degrees[j],
                "values": t.values[j].iter().map(scalar).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(rows)
}

/// The checks are the ones `pcis` runs before returning.
pub fn pci(e: &CentralIdempotent) -> Value {
    let coeffs: Vec<Value> = e
        .class_coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!([k, scalar(c)]))
        .collect();
    json!({
        "id": e.id,
        "orbit": e.orbit,
        "coeffs": coeffs,
        "checks": {"idempotent": true, "orthogonal": true, "central": true, "in_field": true, "sum_is_one": true},
    })
}

pub fn component(w: &WedderburnComponent) -> Value {
    json!({
        "pci": w.pci,
        "dim_I": w.dim_i,
        "delta": w.delta,
        "n": w.n,
        "m": w.m,
        "dim_V": w.dim_v,
        "dim_D": w.commutant_dim,
        "center_minpoly": poly(&w.center.minpoly),
    })
}

pub fn subgroup(s: &Setting) -> Value {
    let g = &s.g.group;
    json!({
        "index": s.p,
        "order": s.sub.order(),
        "members": s.sub.members.iter().map(|&a| g.label(a)).collect::<Vec<_>>(),
        "lift": g.label(s.lift()),
    })
}

pub fn berman(s: &Setting, r: &BermanReport) -> Value {
    let g = &s.g.group;
    let ind = &r.induction;
    let constituents: Vec<Value> = ind
        .constituents
        .iter()
        .map(|c| json!({"pci": c.pci, "multiplicity": c.multiplicity, "degree": c.degree, "m": c.m, "n": c.n}))
        .collect();
    json!({
        "eta": r.eta,
        "stable": r.stable,
        "case": r.case.name(),
        "lift": g.label(r.lift),
        "lambda": r.lambda.as_ref().map(scalar),
        "roots": r.roots.iter().map(scalar).collect::<Vec<_>>(),
        "d": r.d,
        "k": r.k,
        "s": ind.s,
        "split": r.split.iter().map(|&i| pci(&s.g_pcis[i])).collect::<Vec<_>>(),
        "induction": {
            "eta_degree": ind.eta_degree,
            "eta_m": ind.eta_m,
            "eta_n": ind.eta_n,
            "irreducible": ind.irreducible,
            "constituents": constituents,
        },
        "checks": r.checks,
    })
}

/// `<Ind tau_eta, tau_i>` for each `F`-character of `H` (or one of them)
/// against every `F`-character `tau_i` of `G`.
pub fn induce_table(s: &Setting, only: Option<usize>) -> Value {
    let (gt, ht) = (&s.g.table, &s.h.table);
    let trace = |t: &CharacterTable, orbit: &[usize]| -> Vec<Cyc> {
        (0..t.len())
            .map(|k| {
                orbit
                    .iter()
                    .fold(Cyc::zero(gt.u), |a, &i| a.add(&t.chars[i][k].promote(gt.u)))
            })
            .collect()
    };
    let rows: Vec<Value> = s
        .h_pcis
        .iter()
        .filter(|e| only.is_none_or(|i| i == e.id))
        .map(|e| {
            let ind = induce(
                &trace(ht, &e.orbit),
                &ht.classes,
                s.h.order(),
                &s.embed,
                &s.g.group,
                &gt.classes,
            );
            let products: Vec<Value> = s
                .g_pcis
                .iter()
                .map(|f| cyc(&gt.inner_product(&ind, &trace(gt, &f.orbit))))
                .collect();
            json!({"eta": e.id, "induced_values": ind.iter().map(cyc).collect::<Vec<_>>(), "inner_products": products})
        })
        .collect();
    Value::Array(rows)
}

/// `key,value` lines for every leaf of a JSON value.
pub fn to_csv(v: &Value) -> String {
    fn walk(v: &Value, path: &str, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    walk(x, &join(path, k), out);
                }
            }
            Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &join(path, &i.to_string()), out);
                }
            }
            Value::String(s) => out.push((path.to_string(), s.clone())),
            leaf => out.push((path.to_string(), leaf.to_string())),
        }
    }
    fn join(a: &str, b: &str) -> String {
        if a.is_empty() {
            b.to_string()
        } else {
            format!("{a}.{b}")
        }
    }
    let mut rows = Vec::new();
    walk(v, "", &mut rows);
    let quote = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = String::from("key,value\n");
    for (k, x) in rows {
        out.push_str(&format!("{},{}\n", quote(&k), quote(&x)));
    }
    out
}

/// Indented `key: value` rendering.
pub fn to_pretty(v: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    if x.is_object() || (x.is_array() && x.as_array().unwrap().iter().any(|y| y.is_object())) {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}{k}: {x}\n"));
                    }
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    out.push_str(&format!("{pad}- [{i}]\n"));
                    walk(x, indent + 1, out);
                }
            }
            leaf => out.push_str(&format!("{pad}{leaf}\n")),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

/// Context description used at the top of reports.
pub fn header(ctx: &Context, seed: u64) -> Value {
    json!({"group": group(&ctx.group), "field": ctx.base.amb.spec.to_string(), "seed": seed})
}
