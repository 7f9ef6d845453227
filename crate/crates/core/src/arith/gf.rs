//! Finite fields `GF(l^s)` as `GF(l)[X]/(f)` with `f` the least irreducible
//! polynomial of degree `s` (see [`fp::least_irreducible`]).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::fp;
use super::ntheory::{inv_mod, prime_factors};

#[derive(Debug)]
pub struct GfField {
    l: u64,
    s: usize,
    modulus: Vec<u64>,
    /// Coordinates of the primitive element, found on first use.
    primitive: OnceLock<Vec<u64>>,
}

impl GfField {
    pub fn get(l: u64, s: usize) -> Arc<GfField> {
        static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<GfField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry((l, s))
            .or_insert_with(|| {
                Arc::new(GfField {
                    l,
                    s,
                    modulus: fp::least_irreducible(l, s),
                    primitive: OnceLock::new(),
                })
            })
            .clone()
    }

    pub fn characteristic(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    pub fn size(&self) -> u128 {
        (self.l as u128).pow(self.s as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Element with index `k` in base-`l` digit order (constant term least
    /// significant). Index 0 is zero, index 1 is one.
    pub fn element(self: &Arc<Self>, mut k: u128) -> Gf {
        let mut c = vec![0u64; self.s];
        for ci in c.iter_mut() {
            *ci = (k % self.l as u128) as u64;
            k /= self.l as u128;
        }
        Gf { field: self.clone(), c }
    }

    /// A generator of the multiplicative group: the element of least index
    /// whose order is `size - 1`.
    pub fn primitive_element(self: &Arc<Self>) -> Gf {
        let c = self.primitive.get_or_init(|| {
            let n = self.size() - 1;
            let fs = prime_factors_u128(n);
            (1..self.size())
                .map(|k| self.element(k))
                .find(|g| fs.iter().all(|&f| !g.pow(n / f).is_one()))
                .expect("finite fields have cyclic unit groups")
                .c
        });
        Gf {
            field: self.clone(),
            c: c.clone(),
        }
    }
}

fn prime_factors_u128(n: u128) -> Vec<u128> {
    if n <= u64::MAX as u128 {
        return prime_factors(n as u64).into_iter().map(|x| x as u128).collect();
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2u128;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// An element of a [`GfField`]; coordinates in the power basis of the
/// defining root, always of length `s`.
#[derive(Clone)]
pub struct Gf {
    field: Arc<GfField>,
    c: Vec<u64>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.field.l == other.field.l && self.field.s == other.field.s && self.c == other.c
    }
}

impl Eq for Gf {}

impl std::hash::Hash for Gf {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.l.hash(state);
        self.c.hash(state);
    }
}

impl PartialOrd for Gf {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gf {
    /// Compares by element index (most significant coordinate first).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c.iter().rev().cmp(other.c.iter().rev())
    }
}

impl Gf {
    pub fn zero(field: &Arc<GfField>) -> Gf {
        Gf {
            field: field.clone(),
            c: vec![0; field.s],
        }
    }

    pub fn from_int(field: &Arc<GfField>, k: i64) -> Gf {
        let mut g = Gf::zero(field);
        g.c[0] = k.rem_euclid(field.l as i64) as u64;
        g
    }

    pub fn from_coords(field: &Arc<GfField>, coords: &[u64]) -> Gf {
        let reduced = fp::rem(
            &fp::trim(coords.iter().map(|&x| x % field.l).collect()),
            &field.modulus,
            field.l,
        );
        let mut c = vec![0u64; field.s];
        c[..reduced.len()].copy_from_slice(&reduced);
        Gf {
            field: field.clone(),
            c,
        }
    }

    pub fn field(&self) -> &Arc<GfField> {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.c
    }

    pub fn index(&self) -> u128 {
        self.c
            .iter()
            .rev()
            .fold(0u128, |acc, &x| acc * self.field.l as u128 + x as u128)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&x| x == 0)
    }

    /// The value as an element of the prime field, if it lies there.
    pub fn as_prime(&self) -> Option<u64> {
        if self.c[1..].iter().all(|&x| x == 0) {
            Some(self.c[0])
        } else {
            None
        }
    }

    fn same(&self, other: &Gf) {
        debug_assert!(self.field.l == other.field.l && self.field.s == other.field.s);
    }

    pub fn add(&self, other: &Gf) -> Gf {
        self.same(other);
        let l = self.field.l;
        Gf {
            field: self.field.clone(),
            c: self.c.iter().zip(&other.c).map(|(a, b)| (a + b) % l).collect(),
        }
    }

    pub fn sub(&self, other: &Gf) -> Gf {
        self.same(other);
        let l = self.field.l;
        Gf {
            field: self.field.clone(),
            c: self.c.iter().zip(&other.c).map(|(a, b)| (a + l - b) % l).collect(),
        }
    }

    pub fn neg(&self) -> Gf {
        let l = self.field.l;
        Gf {
            field: self.field.clone(),
            c: self.c.iter().map(|a| (l - a) % l).collect(),
        }
    }

    pub fn mul(&self, other: &Gf) -> Gf {
        self.same(other);
        let l = self.field.l;
        if self.field.s == 1 {
            return Gf {
                field: self.field.clone(),
                c: vec![fp::mulm(self.c[0], other.c[0], l)],
            };
        }
        let prod = fp::mul(&fp::trim(self.c.clone()), &fp::trim(other.c.clone()), l);
        Gf::from_coords(&self.field, &prod)
    }

    pub fn pow(&self, mut e: u128) -> Gf {
        let mut acc = Gf::from_int(&self.field, 1);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn inv(&self) -> Option<Gf> {
        if self.is_zero() {
            return None;
        }
        if self.field.s == 1 {
            return Some(Gf {
                field: self.field.clone(),
                c: vec![inv_mod(self.c[0], self.field.l).unwrap()],
            });
        }
        Some(self.pow(self.field.size() - 2))
    }

    /// `x -> x^(l^i)`.
    pub fn frobenius(&self, i: usize) -> Gf {
        let mut y = self.clone();
        for _ in 0..(i % self.field.s) {
            y = y.pow(self.field.l as u128);
        }
        y
    }

    /// Multiplicative order; `self` non-zero.
    pub fn order(&self) -> u128 {
        let n = self.field.size() - 1;
        let mut ord = n;
        for f in prime_factors_u128(n) {
            while ord.is_multiple_of(f) && self.pow(ord / f).is_one() {
                ord /= f;
            }
        }
        ord
    }

    pub fn pretty(&self) -> String {
        if let Some(x) = self.as_prime() {
            return x.to_string();
        }
        let mut terms = Vec::new();
        for (i, &x) in self.c.iter().enumerate().rev() {
            if x == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            terms.push(match (x, i) {
                (_, 0) => x.to_string(),
                (1, _) => mono,
                _ => format!("{x}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}
