//! End-to-end verification: independent oracles against the main
//! constructions, plus the dimension and splitting invariants.

use serde_json::{json, Value};

use crate::arith::scalar::Scalar;
use crate::berman::{prime_index_subgroups, split_all, Case, Setting};
use crate::error::Result;
use crate::ftheory::{f_char_table, f_classes, pcis, Context};
use crate::group::Group;
use crate::oracle::{center_split, value_classes};
use crate::report;
use crate::structure::{base_change_split, simple_module_and_commutant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Oracles and dimension audit.
    Fast,
    /// Also the prime-index splitting of every normal subgroup.
    Full,
}

/// Element-level `F`-classes straight from the definition: `y ~ x` when `y`
/// is conjugate to `x^a` for some `a` in `A`. Sorted sets, sorted.
pub fn brute_force_fclasses(g: &Group, residues: &[u64]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut set = Vec::new();
        for &a in residues {
            let xa = g.pow(x, a as i64);
            for t in 0..n {
                set.push(g.conj(xa, t));
            }
        }
        set.sort_unstable();
        set.dedup();
        for &y in &set {
            seen[y] = true;
        }
        out.push(set);
    }
    out.sort();
    out
}

/// Runs every check; the flag is true when all of them pass.
pub fn verify_all(ctx: &Context, seed: u64, level: Level) -> Result<(Value, bool)> {
    let mut ok = true;
    let cl = ctx.classes();

    // F-classes: cyclotomic construction, character values, definition
    let fc = f_classes(ctx)?;
    let mut from_orbits: Vec<Vec<usize>> = fc.fclasses.iter().map(|l| l.classes.clone()).collect();
    from_orbits.sort();
    let mut by_values = value_classes(ctx)?;
    by_values.sort();
    let mut members: Vec<Vec<usize>> = fc.fclasses.iter().map(|l| l.members.clone()).collect();
    members.sort();
    let brute = brute_force_fclasses(&ctx.group, &ctx.residues());
    let rows = ctx.char_orbits().len();
    let table = f_char_table(ctx, &fc);
    let fclass_ok = from_orbits == by_values && members == brute && rows == fc.len() && table.is_ok();
    ok &= fclass_ok;
    let fclass_report = json!({
        "count": fc.len(),
        "character_rows": rows,
        "value_partition_match": from_orbits == by_values,
        "definition_match": members == brute,
        "pass": fclass_ok,
    });

    // pcis: character formula against the center-splitting oracle
    let list = pcis(ctx)?;
    let mut formula: Vec<Vec<Scalar>> = list.iter().map(|e| e.class_coeffs.clone()).collect();
    formula.sort();
    let oracle = center_split(ctx, seed)?;
    let pci_ok = formula == oracle;
    ok &= pci_ok;
    let mut pci_report = json!({
        "formula": formula.len(),
        "oracle": oracle.len(),
        "pass": pci_ok,
    });
    if !pci_ok {
        let only = |a: &[Vec<Scalar>], b: &[Vec<Scalar>]| -> Vec<Value> {
            a.iter()
                .filter(|x| !b.contains(x))
                .map(|x| Value::Array(x.iter().map(report::scalar).collect()))
                .collect()
        };
        pci_report["only_formula"] = json!(only(&formula, &oracle));
        pci_report["only_oracle"] = json!(only(&oracle, &formula));
    }

    // Wedderburn data and the regular-module audit
    let mut components = Vec::new();
    let mut total = 0;
    let mut galois_ok = true;
    for e in &list {
        let w = simple_module_and_commutant(ctx, e, seed)?;
        total += w.dim_i;
        let below = base_change_split(ctx, e, &w.center)?;
        galois_ok &= below.len() == w.delta;
        components.push(report::component(&w));
    }
    let dim_ok = total == ctx.order() && cl.sizes.iter().sum::<usize>() == ctx.order();
    ok &= dim_ok && galois_ok;

    let mut out = report::header(ctx, seed);
    out["fclasses"] = fclass_report;
    out["pcis"] = pci_report;
    out["components"] = Value::Array(components);
    out["dimension_audit"] = json!({"sum_dim_I": total, "order": ctx.order(), "pass": dim_ok});
    out["galois_action"] = json!({"pass": galois_ok});

    if level == Level::Full {
        // over a splitting field every stable pci splits into p pcis
        let splitting = ctx.residues() == vec![1];
        let mut runs = Vec::new();
        for (p, sub) in prime_index_subgroups(&ctx.group) {
            let s = Setting::new(ctx, p, sub, seed)?;
            let reports = split_all(&s)?;
            let cases: Vec<&str> = reports.iter().map(|r| r.case.name()).collect();
            let splitting_ok = !splitting
                || reports.iter().all(|r| match r.case {
                    Case::Unstable => r.split.len() == 1,
                    Case::B => r.split.len() == p as usize,
                    _ => false,
                });
            ok &= splitting_ok;
            runs.push(json!({
                "subgroup": report::subgroup(&s),
                "cases": cases,
                "splitting_field_check": splitting_ok,
            }));
        }
        out["berman"] = Value::Array(runs);
    }
    out["pass"] = json!(ok);
    Ok((out, ok))
}
