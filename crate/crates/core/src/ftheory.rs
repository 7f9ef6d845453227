//! `F`-conjugacy classes, the `F`-character table and the primitive central
//! idempotents of `F[G]`, all driven by the action of `A <= Z_u^*` on
//! classes (`C(x) -> C(x^a)`) and on characters (`psi -> psi^sigma_a`).

use crate::algebra::{AlgElem, ClassAlgebra};
use crate::arith::cyclo::Cyc;
use crate::arith::cyclotomic::factor_cyclotomic;
use crate::arith::field::{Base, FieldSpec};
use crate::arith::ntheory::divisors;
use crate::arith::scalar::Scalar;
use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};

/// A group with its character table, class algebra and a base field.
#[derive(Clone, Debug)]
pub struct Context {
    pub group: Group,
    pub table: CharacterTable,
    pub algebra: ClassAlgebra,
    pub base: Base,
}

impl Context {
    pub fn new(group: Group, field: &FieldSpec, seed: u64) -> Result<Context> {
        field.check_coprime(group.order() as u64)?;
        let table = CharacterTable::compute(&group, seed)?;
        let base = Base::of(field, table.u)?;
        Ok(Context::with_base(group, table, base))
    }

    /// `base` may live in a larger ambient field; its exponent must be a
    /// multiple of the group's.
    pub fn with_base(group: Group, table: CharacterTable, base: Base) -> Context {
        assert_eq!(base.amb.u % table.u, 0, "ambient field too small");
        let algebra = ClassAlgebra::new(&group, &table.classes);
        Context {
            group,
            table,
            algebra,
            base,
        }
    }

    /// The same group over another base field in the same ambient field.
    pub fn over(&self, base: Base) -> Context {
        Context {
            group: self.group.clone(),
            table: self.table.clone(),
            algebra: self.algebra.clone(),
            base,
        }
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.table.classes
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> Scalar {
        self.base.zero()
    }

    /// `A` as residues modulo the group exponent.
    pub fn residues(&self) -> Vec<u64> {
        self.base.residues(self.table.u)
    }

    /// A character value as an element of the ambient field.
    pub fn value(&self, c: &Cyc) -> Scalar {
        self.base.amb.from_cyc(c)
    }

    /// Orbits of `A` on the rows of the character table, each sorted,
    /// ordered by least row.
    pub fn char_orbits(&self) -> Vec<Vec<usize>> {
        let a = self.residues();
        let mut seen = vec![false; self.table.len()];
        let mut out = Vec::new();
        for i in 0..self.table.len() {
            if seen[i] {
                continue;
            }
            let mut orbit: Vec<usize> = a.iter().map(|&r| self.table.galois_row(i, r)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &j in &orbit {
                seen[j] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Orbits of `A` on the conjugacy classes, ordered by least class.
    pub fn class_orbits(&self) -> Vec<Vec<usize>> {
        let a = self.residues();
        let r = self.classes().len();
        let mut seen = vec![false; r];
        let mut out = Vec::new();
        for k in 0..r {
            if seen[k] {
                continue;
            }
            let mut orbit: Vec<usize> = a
                .iter()
                .map(|&e| self.table.power[k][(e % self.table.u) as usize])
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &j in &orbit {
                seen[j] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Class coefficients of `sum_g f(g^-1) g` for a class function `f`.
    pub fn dual_element(&self, values: &[Scalar]) -> Vec<Scalar> {
        (0..values.len())
            .map(|k| values[self.table.inverse_class[k]].clone())
            .collect()
    }

    pub fn element(&self, class_coeffs: &[Scalar]) -> AlgElem {
        AlgElem::from_class_values(self.classes(), class_coeffs)
    }
}

#[derive(Clone, Debug)]
pub struct FClass {
    /// Constituent conjugacy classes, sorted.
    pub classes: Vec<usize>,
    /// Member elements, sorted.
    pub members: Vec<usize>,
    pub representative: usize,
    /// Order of the representative.
    pub order: u64,
    /// Exponents `r_t` with `L = union_t C(x^r_t)`.
    pub r_sequence: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct FClassPartition {
    pub fclasses: Vec<FClass>,
    /// F-class containing each conjugacy class.
    pub of_class: Vec<usize>,
    /// F-class of the inverses of each F-class.
    pub inverse: Vec<usize>,
}

impl FClassPartition {
    pub fn len(&self) -> usize {
        self.fclasses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fclasses.is_empty()
    }

    /// F-class of each element.
    pub fn of_element(&self, classes: &ConjugacyClasses) -> Vec<usize> {
        classes.class_of.iter().map(|&k| self.of_class[k]).collect()
    }
}

pub fn f_classes(ctx: &Context) -> Result<FClassPartition> {
    let g = &ctx.group;
    let cl = ctx.classes();
    let orbits = ctx.class_orbits();
    let mut of_class = vec![0; cl.len()];
    for (i, o) in orbits.iter().enumerate() {
        for &k in o {
            of_class[k] = i;
        }
    }
    let mut fclasses = Vec::with_capacity(orbits.len());
    for o in &orbits {
        let x = cl.representatives[o[0]];
        let n = g.element_order(x);
        let fact = factor_cyclotomic(n, &ctx.base)?;
        let mut union: Vec<usize> = fact
            .r_sequence
            .iter()
            .map(|&r| cl.class_of[g.pow(x, r as i64)])
            .collect();
        union.sort_unstable();
        union.dedup();
        if &union != o {
            return Err(Error::VerificationFailed(format!(
                "F-class of {} is not the union of the classes of its r-powers",
                g.label(x)
            )));
        }
        let mut members: Vec<usize> = o.iter().flat_map(|&k| cl.classes[k].iter().copied()).collect();
        members.sort_unstable();
        fclasses.push(FClass {
            classes: o.clone(),
            members,
            representative: x,
            order: n,
            r_sequence: fact.r_sequence,
        });
    }
    let inverse = orbits.iter().map(|o| of_class[ctx.table.inverse_class[o[0]]]).collect();
    Ok(FClassPartition {
        fclasses,
        of_class,
        inverse,
    })
}

#[derive(Clone, Debug)]
pub struct FCharTable {
    /// Character rows making up each trace character, ordered by least row.
    pub orbits: Vec<Vec<usize>>,
    /// `values[j][i] = tau_j(L_i)`, in the base field.
    pub values: Vec<Vec<Scalar>>,
    /// Degree `psi(1)` of the absolutely irreducible constituents.
    pub psi_degrees: Vec<u64>,
    /// Schur indices, when known; then `chi_j = m_j tau_j`.
    pub schur: Vec<Option<u64>>,
}

impl FCharTable {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Trace character `tau = sum_{psi in orbit} psi` on the conjugacy classes,
/// coerced into the base field.
pub fn trace_character(ctx: &Context, orbit: &[usize]) -> Result<Vec<Scalar>> {
    let r = ctx.classes().len();
    (0..r)
        .map(|k| {
            let mut acc = Cyc::zero(ctx.table.u);
            for &i in orbit {
                acc = acc.add(&ctx.table.chars[i][k]);
            }
            let v = ctx.value(&acc);
            if ctx.base.contains(&v) {
                Ok(v)
            } else {
                Err(Error::CoercionFailed(format!("trace character value {v}")))
            }
        })
        .collect()
}

pub fn f_char_table(ctx: &Context, fc: &FClassPartition) -> Result<FCharTable> {
    let orbits = ctx.char_orbits();
    if orbits.len() != fc.len() {
        return Err(Error::CountMismatch(format!(
            "{} character orbits, {} F-classes",
            orbits.len(),
            fc.len()
        )));
    }
    let mut values = Vec::with_capacity(orbits.len());
    for o in &orbits {
        let tau = trace_character(ctx, o)?;
        let row: Vec<Scalar> = fc.fclasses.iter().map(|l| tau[l.classes[0]].clone()).collect();
        for l in &fc.fclasses {
            if l.classes.iter().any(|&k| tau[k] != tau[l.classes[0]]) {
                return Err(Error::VerificationFailed(
                    "trace character not constant on an F-class".into(),
                ));
            }
        }
        values.push(row);
    }
    let psi_degrees = orbits.iter().map(|o| ctx.table.degrees[o[0]]).collect();
    Ok(FCharTable {
        schur: vec![None; orbits.len()],
        orbits,
        values,
        psi_degrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotent {
    pub id: usize,
    /// Character rows covered.
    pub orbit: Vec<usize>,
    /// Coefficient on each conjugacy class.
    pub class_coeffs: Vec<Scalar>,
    pub element: AlgElem,
}

impl CentralIdempotent {
    pub fn psi_degree(&self, ctx: &Context) -> u64 {
        ctx.table.degrees[self.orbit[0]]
    }
}

/// Class coefficients `(psi(1)/|G|) tau(g^-1)` of the idempotent of an
/// orbit of characters.
pub fn orbit_idempotent(ctx: &Context, orbit: &[usize]) -> Result<Vec<Scalar>> {
    let tau = trace_character(ctx, orbit)?;
    let deg = ctx.table.degrees[orbit[0]] as i64;
    let n = ctx.order() as i64;
    Ok(ctx
        .dual_element(&tau)
        .iter()
        .map(|v| v.scale_int(deg).div_int(n))
        .collect())
}

/// The pcis of `F[G]`, one per orbit of characters, verified.
pub fn pcis(ctx: &Context) -> Result<Vec<CentralIdempotent>> {
    let mut out = Vec::new();
    for (id, orbit) in ctx.char_orbits().into_iter().enumerate() {
        let c = orbit_idempotent(ctx, &orbit)?;
        out.push(CentralIdempotent {
            id,
            element: ctx.element(&c),
            orbit,
            class_coeffs: c,
        });
    }
    verify_pcis(ctx, &out)?;
    Ok(out)
}

/// Checks `e_i e_j = delta_ij e_i`, `sum e_i = 1`, centrality and that all
/// coefficients lie in the base field.
pub fn verify_pcis(ctx: &Context, list: &[CentralIdempotent]) -> Result<()> {
    let zero = ctx.zero();
    let r = ctx.classes().len();
    let mut sum = vec![zero.clone(); r];
    for (i, e) in list.iter().enumerate() {
        if !e.class_coeffs.iter().all(|c| ctx.base.contains(c)) {
            return Err(Error::CoercionFailed(format!(
                "pci {} has coefficients outside F",
                e.id
            )));
        }
        if !e.element.is_central(&ctx.group) {
            return Err(Error::VerificationFailed(format!("pci {} is not central", e.id)));
        }
        if e.class_coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::VerificationFailed(format!("pci {} is zero", e.id)));
        }
        for (j, f) in list.iter().enumerate().skip(i) {
            let prod = ctx.algebra.mul(&e.class_coeffs, &f.class_coeffs);
            let ok = if i == j {
                prod == e.class_coeffs
            } else {
                prod.iter().all(|c| c.is_zero())
            };
            if !ok {
                return Err(Error::VerificationFailed(format!(
                    "pcis {} and {} fail e_i e_j = delta_ij e_i",
                    e.id, f.id
                )));
            }
        }
        for (s, c) in sum.iter_mut().zip(&e.class_coeffs) {
            *s = s.add(c);
        }
    }
    let mut one = vec![zero; r];
    one[0] = ctx.base.one();
    if sum != one {
        return Err(Error::VerificationFailed("pcis do not sum to 1".into()));
    }
    Ok(())
}

/// Reduced dimension `n` of the component of `e` from
/// `e''^2 = (|G|/n) e''`, `e'' = sum_x chi(x^-1) x`, `chi = m tau`.
pub fn reduced_dimension_check(ctx: &Context, e: &CentralIdempotent, m: u64) -> Result<u64> {
    let tau = trace_character(ctx, &e.orbit)?;
    let chi: Vec<Scalar> = tau.iter().map(|v| v.scale_int(m as i64)).collect();
    let dd = ctx.dual_element(&chi);
    let sq = ctx.algebra.mul(&dd, &dd);
    let k = dd
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::NotScalarMultiple("e'' vanishes".into()))?;
    let ratio = sq[k].div(&dd[k]).unwrap();
    if dd.iter().zip(&sq).any(|(a, b)| a.mul(&ratio) != *b) {
        return Err(Error::NotScalarMultiple("e''^2 is not a multiple of e''".into()));
    }
    let order = ctx.order() as u64;
    let candidates: Vec<u64> = divisors(order)
        .into_iter()
        .filter(|&n| ratio == ratio.int_like((order / n) as i64))
        .collect();
    let expected = e.psi_degree(ctx) / m.max(1);
    match candidates.as_slice() {
        [n] => Ok(*n),
        [] => Err(Error::NotScalarMultiple(format!("ratio {ratio} is not |G|/n"))),
        many if many.contains(&expected) => Ok(expected),
        _ => Err(Error::NotScalarMultiple(format!(
            "ratio {ratio} is ambiguous modulo the characteristic"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn ctx(name: &str, params: &[i64], field: &str) -> Context {
        Context::new(catalog(name, params).unwrap(), &field.parse().unwrap(), 0).unwrap()
    }

    #[test]
    fn cyclic_classes() {
        let c = ctx("C", &[5], "Q");
        let fc = f_classes(&c).unwrap();
        assert_eq!(fc.len(), 2);
        assert_eq!(fc.fclasses[1].members, vec![1, 2, 3, 4]);
        let c = ctx("C", &[7], "GF(2)");
        let fc = f_classes(&c).unwrap();
        assert_eq!(fc.len(), 3);
        let x = 1;
        let g = &c.group;
        let l = fc.fclasses.iter().find(|l| l.members.contains(&x)).unwrap();
        let mut want = vec![x, g.pow(x, 2), g.pow(x, 4)];
        want.sort();
        assert_eq!(l.members, want);
        assert_eq!(l.r_sequence, vec![1, 2, 4]);
    }

    #[test]
    fn q8_rational() {
        let c = ctx("Q8", &[], "Q");
        let fc = f_classes(&c).unwrap();
        let t = f_char_table(&c, &fc).unwrap();
        assert_eq!(t.len(), 5);
        let e = pcis(&c).unwrap();
        assert_eq!(e.len(), 5);
        let last = e.iter().find(|e| e.psi_degree(&c) == 2).unwrap();
        assert_eq!(reduced_dimension_check(&c, last, 2).unwrap(), 1);
        assert_eq!(reduced_dimension_check(&c, &e[0], 1).unwrap(), 1);
        // element-level check of one product
        let sq = last.element.mul(&last.element, &c.group);
        assert_eq!(sq, last.element);
    }

    #[test]
    fn c4_pcis() {
        let c = ctx("C", &[4], "Q");
        let e = pcis(&c).unwrap();
        assert_eq!(e.len(), 3);
        let q = |a: i64, b: i64| c.base.amb.ratio(a, b);
        let y = 1;
        let y2 = c.group.pow(y, 2);
        let y3 = c.group.pow(y, 3);
        let mut want_last = vec![q(0, 1); 4];
        want_last[0] = q(1, 2);
        want_last[y2] = q(-1, 2);
        assert!(e.iter().any(|e| e.element.coeffs == want_last));
        let mut alt = vec![q(1, 4); 4];
        alt[y] = q(-1, 4);
        alt[y3] = q(-1, 4);
        assert!(e.iter().any(|e| e.element.coeffs == alt));
        let faithful = e.iter().find(|e| e.element.coeffs == want_last).unwrap();
        assert_eq!(reduced_dimension_check(&c, faithful, 1).unwrap(), 1);
    }

    #[test]
    fn counts_match_over_fields() {
        for (name, params) in [("SL23", vec![]), ("C7:C3", vec![]), ("Q8oC4", vec![]), ("Cp2", vec![3])] {
            for field in ["Q", "Q(zeta_12)", "GF(5)", "GF(25)", "GF(13)"] {
                let g = catalog(name, &params).unwrap();
                let spec: FieldSpec = field.parse().unwrap();
                if spec.check_coprime(g.order() as u64).is_err() {
                    continue;
                }
                let c = Context::new(g, &spec, 0).unwrap();
                let fc = f_classes(&c).unwrap();
                let t = f_char_table(&c, &fc).unwrap();
                assert_eq!(t.len(), fc.len());
                let e = pcis(&c).unwrap();
                assert_eq!(e.len(), fc.len());
            }
        }
    }
}
