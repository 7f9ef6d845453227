//! Base field descriptors and the ambient field in which a computation over
//! `F[G]` takes place.
//!
//! In characteristic 0 the ambient field is `Q(zeta_N)` with
//! `N = lcm(u, m)`, `u` the group exponent and `F = Q(zeta_m)` (`m = 1` for
//! `Q`). For `F = GF(q)` it is `GF(q^t)` with `t` the order of `q` mod `u`.
//! Galois elements are recorded both as automorphisms of the ambient field
//! and by their residue `a` mod `u` (the action `omega -> omega^a`).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::cyclo::Cyc;
use super::gf::{Gf, GfField};
use super::ntheory::{gcd, generated_subgroup, lcm, mult_order, pow_mod, prime_power, units};
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u64),
    Finite { q: u64, l: u64, r: u32 },
}

impl FieldSpec {
    pub fn finite(q: u64) -> Result<FieldSpec> {
        match prime_power(q) {
            Some((l, r)) => Ok(FieldSpec::Finite { q, l, r }),
            None => Err(Error::Parse(format!("{q} is not a prime power"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Finite { l, .. } => *l,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Finite { .. })
    }

    /// Errors unless the characteristic is 0 or prime to `order`.
    pub fn check_coprime(&self, order: u64) -> Result<()> {
        if let FieldSpec::Finite { l, .. } = self {
            if order.is_multiple_of(*l) {
                return Err(Error::NonCoprime(*l, order));
            }
        }
        Ok(())
    }

    /// Whether `F` is contained in the real numbers.
    pub fn is_real(&self) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Cyclotomic(m) => *m <= 2,
            FieldSpec::Finite { .. } => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
            FieldSpec::Finite { q, .. } => write!(f, "GF({q})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = |prefix: &str| -> Option<&str> { t.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) };
        if let Some(m) = inner("Q(zeta_").or_else(|| inner("Q(zeta")) {
            let m: u64 = m.parse().map_err(|_| Error::Parse(format!("bad field `{s}`")))?;
            if m == 0 {
                return Err(Error::Parse(format!("bad field `{s}`")));
            }
            return Ok(if m <= 2 {
                FieldSpec::Rationals
            } else {
                FieldSpec::Cyclotomic(m)
            });
        }
        if let Some(q) = inner("GF(") {
            let q: u64 = q.parse().map_err(|_| Error::Parse(format!("bad field `{s}`")))?;
            return FieldSpec::finite(q);
        }
        Err(Error::Parse(format!("unrecognised field `{s}`")))
    }
}

/// A Galois automorphism of the ambient field together with its residue
/// mod `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gal {
    /// Residue mod `u`: the automorphism sends `omega` to `omega^au`.
    pub au: u64,
    /// Characteristic 0: the exponent mod `N`. Finite: the Frobenius
    /// exponent `j` of `x -> x^(l^j)`.
    pub raw: u64,
}

#[derive(Clone, Debug)]
pub enum AmbientKind {
    Cyc { n: u64 },
    Ff { field: Arc<GfField>, omega: Gf },
}

/// The ambient field of a computation with a fixed base field and exponent.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub spec: FieldSpec,
    pub u: u64,
    pub kind: AmbientKind,
}

impl Ambient {
    pub fn new(spec: &FieldSpec, u: u64) -> Result<Ambient> {
        let kind = match spec {
            FieldSpec::Rationals => AmbientKind::Cyc { n: u.max(1) },
            FieldSpec::Cyclotomic(m) => AmbientKind::Cyc { n: lcm(u.max(1), *m) },
            FieldSpec::Finite { q, l, r } => {
                if gcd(*q, u) != 1 {
                    return Err(Error::NonCoprime(*l, u));
                }
                let t = mult_order(*q % u.max(1), u.max(1)) as usize;
                let field = GfField::get(*l, *r as usize * t);
                let gamma = field.primitive_element();
                let omega = gamma.pow((field.size() - 1) / u.max(1) as u128);
                AmbientKind::Ff { field, omega }
            }
        };
        Ok(Ambient {
            spec: spec.clone(),
            u: u.max(1),
            kind,
        })
    }

    /// Ambient over `spec` able to hold `u`-th roots of unity; the order of
    /// the ambient cyclotomic field is forced to be a multiple of `n_min`.
    pub fn with_level(spec: &FieldSpec, u: u64, n_min: u64) -> Result<Ambient> {
        let mut amb = Ambient::new(spec, u)?;
        if let AmbientKind::Cyc { n } = &mut amb.kind {
            *n = lcm(*n, n_min.max(1));
        }
        Ok(amb)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, AmbientKind::Ff { .. })
    }

    /// Order `N` of the ambient cyclotomic field (characteristic 0 only).
    pub fn level(&self) -> u64 {
        match &self.kind {
            AmbientKind::Cyc { n } => *n,
            AmbientKind::Ff { .. } => panic!("finite ambient has no cyclotomic level"),
        }
    }

    pub fn gf(&self) -> &Arc<GfField> {
        match &self.kind {
            AmbientKind::Ff { field, .. } => field,
            AmbientKind::Cyc { .. } => panic!("cyclotomic ambient"),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, k: i64) -> Scalar {
        match &self.kind {
            AmbientKind::Cyc { n } => Scalar::Cyc(Cyc::from_int(*n, k)),
            AmbientKind::Ff { field, .. } => Scalar::Ff(Gf::from_int(field, k)),
        }
    }

    /// `num / den`; `den` must be invertible.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        self.int(num).div_int(den)
    }

    /// `omega^k` where `omega` is the fixed primitive `u`-th root of unity.
    pub fn root_of_unity(&self, k: i64) -> Scalar {
        let k = k.rem_euclid(self.u as i64) as u64;
        match &self.kind {
            AmbientKind::Cyc { n } => Scalar::Cyc(Cyc::zeta_pow(*n, (k * (*n / self.u)) as i64)),
            AmbientKind::Ff { omega, .. } => Scalar::Ff(omega.pow(k as u128)),
        }
    }

    /// Lifts a cyclotomic value in `Q(zeta_u)` (or a divisor level) into the
    /// ambient field; in the finite case `zeta_u` maps to `omega`.
    pub fn from_cyc(&self, c: &Cyc) -> Scalar {
        match &self.kind {
            AmbientKind::Cyc { n } => Scalar::Cyc(c.promote(*n)),
            AmbientKind::Ff { field, .. } => {
                let k = c.order();
                assert_eq!(self.u % k, 0, "value level must divide the exponent");
                let mut acc = Gf::zero(field);
                for (j, coef) in c.coeffs().iter().enumerate() {
                    if num_traits::Zero::is_zero(coef) {
                        continue;
                    }
                    let (num, den) = (coef.numer(), coef.denom());
                    let l = field.characteristic() as i64;
                    let to_ff = |b: &num_bigint::BigInt| -> Gf {
                        let r: i64 = (b % num_bigint::BigInt::from(l)).try_into().unwrap();
                        Gf::from_int(field, r)
                    };
                    let val = to_ff(num).mul(&to_ff(den).inv().expect("denominator prime to l"));
                    let root = self.root_of_unity((j as u64 * (self.u / k)) as i64);
                    acc = acc.add(&val.mul(root.as_ff()));
                }
                Scalar::Ff(acc)
            }
        }
    }

    /// The Galois group of the ambient field over `F`, identity first.
    pub fn galois_group(&self) -> Vec<Gal> {
        match (&self.spec, &self.kind) {
            (FieldSpec::Rationals, AmbientKind::Cyc { n }) => {
                units(*n).into_iter().map(|a| Gal { au: a % self.u, raw: a }).collect()
            }
            (FieldSpec::Cyclotomic(m), AmbientKind::Cyc { n }) => units(*n)
                .into_iter()
                .filter(|a| a % m == 1 % m)
                .map(|a| Gal { au: a % self.u, raw: a })
                .collect(),
            (FieldSpec::Finite { q, r, .. }, AmbientKind::Ff { field, .. }) => {
                let s = field.degree() as u64;
                let t = s / *r as u64;
                (0..t)
                    .map(|i| Gal {
                        au: pow_mod(*q, i, self.u),
                        raw: i * *r as u64,
                    })
                    .collect()
            }
            _ => unreachable!(),
        }
    }

    /// Distinct residues mod `u` of the Galois group: the subgroup `A` of
    /// `Z_u^*`.
    pub fn residues(&self) -> Vec<u64> {
        let mut a: Vec<u64> = self.galois_group().iter().map(|g| g.au % self.u).collect();
        if self.u == 1 {
            a = vec![1];
        }
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn apply(&self, g: &Gal, x: &Scalar) -> Scalar {
        match x {
            Scalar::Cyc(c) => Scalar::Cyc(c.galois(g.raw)),
            Scalar::Ff(f) => Scalar::Ff(f.frobenius(g.raw as usize)),
        }
    }

    /// Whether `x` lies in the base field `F`.
    pub fn in_base(&self, x: &Scalar) -> bool {
        self.base_subfield().contains(x)
    }

    pub fn base_subfield(&self) -> Subfield {
        self.fixed_subfield(&self.galois_group())
    }

    /// The subfield fixed by a subgroup of the Galois group over `F`.
    pub fn fixed_subfield(&self, group: &[Gal]) -> Subfield {
        match &self.kind {
            AmbientKind::Cyc { n } => {
                let raw: Vec<u64> = group.iter().map(|g| g.raw).collect();
                Subfield::Cyc {
                    n: *n,
                    group: generated_subgroup(&raw, *n),
                }
            }
            AmbientKind::Ff { field, .. } => {
                // the subgroup of <frob> is generated by its least positive exponent
                let s = field.degree() as u64;
                let j = group.iter().map(|g| g.raw % s).filter(|&j| j > 0).fold(s, gcd);
                Subfield::Ff {
                    field: field.clone(),
                    j: j as usize,
                }
            }
        }
    }

    /// Degree of the ambient field over `F`.
    pub fn degree_over_base(&self) -> usize {
        self.galois_group().len()
    }
}

/// A subfield of the ambient field, given as a fixed field.
#[derive(Clone, Debug)]
pub enum Subfield {
    /// Fixed field of `group` (a subgroup of `Z_n^*`) inside `Q(zeta_n)`.
    Cyc { n: u64, group: Vec<u64> },
    /// `GF(l^j)` inside the ambient finite field.
    Ff { field: Arc<GfField>, j: usize },
}

impl Subfield {
    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (Subfield::Cyc { group, .. }, Scalar::Cyc(c)) => group.iter().all(|&a| &c.galois(a) == c),
            (Subfield::Ff { j, .. }, Scalar::Ff(f)) => &f.frobenius(*j) == f,
            _ => false,
        }
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> usize {
        match self {
            Subfield::Cyc { n, group } => units(*n).len() / group.len(),
            Subfield::Ff { j, .. } => *j,
        }
    }

    /// Whether this field contains a primitive `p`-th root of unity.
    pub fn has_roots_of_unity(&self, p: u64) -> bool {
        match self {
            Subfield::Cyc { n, group } => {
                if p == 2 {
                    return true;
                }
                *n % p == 0 && group.iter().all(|&a| a % p == 1)
            }
            Subfield::Ff { field, j } => {
                let size = (field.characteristic() as u128).pow(*j as u32);
                (size - 1).is_multiple_of(p as u128)
            }
        }
    }

    /// Relative automorphisms of the ambient field over this subfield, as
    /// raw exponents.
    pub fn group(&self) -> Vec<u64> {
        match self {
            Subfield::Cyc { group, .. } => group.clone(),
            Subfield::Ff { field, j } => (0..field.degree() / j).map(|i| (i * j) as u64).collect(),
        }
    }
}

/// A base field presented inside an ambient field as the fixed field of a
/// subgroup of the ambient Galois group over `F`.
///
/// `Base::new` gives `F` itself; restricting the group gives extensions of
/// `F` such as the center of a Wedderburn component.
#[derive(Clone, Debug)]
pub struct Base {
    pub amb: Ambient,
    pub gal: Vec<Gal>,
}

impl Base {
    pub fn new(amb: &Ambient) -> Base {
        Base {
            amb: amb.clone(),
            gal: amb.galois_group(),
        }
    }

    /// Base field of the given spec with room for `u`-th roots of unity.
    pub fn of(spec: &FieldSpec, u: u64) -> Result<Base> {
        Ok(Base::new(&Ambient::new(spec, u)?))
    }

    /// The fixed field of the elements of the group satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&Gal) -> bool) -> Base {
        Base {
            amb: self.amb.clone(),
            gal: self.gal.iter().copied().filter(|g| keep(g)).collect(),
        }
    }

    /// The image `A` of the group in `Z_n^*` for `n | u`, sorted.
    pub fn residues(&self, n: u64) -> Vec<u64> {
        if n <= 1 {
            return vec![1];
        }
        let mut a: Vec<u64> = self.gal.iter().map(|g| g.au % n).collect();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn subfield(&self) -> Subfield {
        self.amb.fixed_subfield(&self.gal)
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        self.gal.iter().all(|g| &self.amb.apply(g, x) == x)
    }

    /// Degree of the ambient field over this base.
    pub fn codegree(&self) -> usize {
        self.gal.len()
    }

    pub fn zero(&self) -> Scalar {
        self.amb.zero()
    }

    pub fn one(&self) -> Scalar {
        self.amb.one()
    }

    /// Whether the base field lies inside the real numbers.
    pub fn is_real(&self) -> bool {
        match &self.amb.kind {
            AmbientKind::Cyc { n } => {
                let conj = n - 1;
                *n <= 2 || self.gal.iter().any(|g| g.raw % n == conj % n)
            }
            AmbientKind::Ff { .. } => false,
        }
    }
}
