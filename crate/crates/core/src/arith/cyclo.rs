//! Exact arithmetic in the cyclotomic field `Q(zeta_n)`, power basis modulo
//! the `n`-th cyclotomic polynomial.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ntheory::{totient, units};

/// Integer coefficients of `Phi_n`, constant term first, by exact division
/// of `X^n - 1` by `Phi_d` for the proper divisors `d` of `n`.
pub fn cyclotomic_coeffs(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    assert!(n >= 1);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_coeffs(d);
            num = exact_div_monic(&num, &den);
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Context for `Q(zeta_n)`: the reduction of every power `zeta^j`, `0 <= j < n`,
/// to the power basis `1, zeta, ..., zeta^(phi-1)`.
#[derive(Debug)]
pub struct CycField {
    n: u64,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

impl CycField {
    fn build(n: u64) -> Self {
        let phi = totient(n) as usize;
        let modulus = cyclotomic_coeffs(n);
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by zeta and reduce with the monic modulus
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for (k, nk) in next.iter_mut().enumerate() {
                    *nk -= top * modulus[k];
                }
            }
            cur = next;
        }
        CycField { n, phi, powers }
    }

    pub fn get(n: u64) -> Arc<CycField> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard.entry(n).or_insert_with(|| Arc::new(CycField::build(n))).clone()
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Power-basis coordinates of `zeta^j`, `0 <= j < n`.
    pub fn power(&self, j: usize) -> &[i64] {
        &self.powers[j]
    }

    pub fn max_power_coeff(&self) -> i64 {
        self.powers
            .iter()
            .flat_map(|v| v.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or(1)
    }
}

/// Power-basis coordinates: machine integers over a common denominator
/// while they fit, arbitrary precision otherwise. The small form is used
/// whenever it exists, so equal elements have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Coords {
    /// `num / den` with `den > 0` and `gcd(num, den) = 1`.
    Small {
        num: Vec<i64>,
        den: i64,
    },
    Big(Vec<BigRational>),
}

impl Coords {
    /// Canonical form of `num / den`, or `None` when the reduced values do
    /// not fit in `i64`.
    fn small(num: Vec<i128>, den: i128) -> Option<Coords> {
        if den == 0 || den == i128::MIN || num.contains(&i128::MIN) {
            return None;
        }
        let mut g = den.abs();
        for x in &num {
            if g == 1 {
                break;
            }
            g = g.gcd(x);
        }
        let g = if den < 0 { -g } else { g };
        let den = i64::try_from(den / g).ok()?;
        let num = num
            .into_iter()
            .map(|x| i64::try_from(x / g).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Coords::Small { num, den })
    }

    fn from_big(v: Vec<BigRational>) -> Coords {
        let den = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        if let Some(d) = den.to_i64() {
            let num: Option<Vec<i64>> = v.iter().map(|q| (q.numer() * (&den / q.denom())).to_i64()).collect();
            if let Some(num) = num {
                return Coords::Small { num, den: d };
            }
        }
        Coords::Big(v)
    }

    fn big(&self) -> Vec<BigRational> {
        match self {
            Coords::Small { num, den } => num
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(*den)))
                .collect(),
            Coords::Big(v) => v.clone(),
        }
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct Cyc {
    field: Arc<CycField>,
    c: Coords,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.c == other.c
    }
}
impl Eq for Cyc {}

impl std::hash::Hash for Cyc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.c.hash(state);
    }
}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on power-basis coordinates; a fixed total order used only
/// for deterministic tie-breaking.
impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .n
            .cmp(&other.field.n)
            .then_with(|| match (&self.c, &other.c) {
                (Coords::Small { num: a, den: da }, Coords::Small { num: b, den: db }) => a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| (x as i128 * *db as i128).cmp(&(y as i128 * *da as i128)))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal),
                _ => self.c.big().cmp(&other.c.big()),
            })
    }
}

impl Cyc {
    pub fn zero(n: u64) -> Self {
        let field = CycField::get(n);
        let c = Coords::Small {
            num: vec![0; field.phi],
            den: 1,
        };
        Cyc { field, c }
    }

    pub fn from_rational(n: u64, q: BigRational) -> Self {
        let field = CycField::get(n);
        let mut v = vec![BigRational::zero(); field.phi];
        v[0] = q;
        Cyc {
            field,
            c: Coords::from_big(v),
        }
    }

    pub fn from_int(n: u64, k: i64) -> Self {
        let mut z = Cyc::zero(n);
        if let Coords::Small { num, .. } = &mut z.c {
            num[0] = k;
        }
        z
    }

    pub fn one(n: u64) -> Self {
        Cyc::from_int(n, 1)
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let field = CycField::get(n);
        let j = k.rem_euclid(n as i64) as usize;
        let c = Coords::Small {
            num: field.powers[j].clone(),
            den: 1,
        };
        Cyc { field, c }
    }

    /// Element from integer multiplicities of powers of `zeta_n`.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> Self {
        let field = CycField::get(n);
        let mut acc = vec![0i64; field.phi];
        for (j, &m) in counts.iter().enumerate() {
            if m != 0 {
                for (a, &c) in acc.iter_mut().zip(&field.powers[j % n as usize]) {
                    *a += m * c;
                }
            }
        }
        Cyc {
            field,
            c: Coords::Small { num: acc, den: 1 },
        }
    }

    pub fn from_coeffs(n: u64, coeffs: Vec<BigRational>) -> Self {
        let field = CycField::get(n);
        assert_eq!(coeffs.len(), field.phi, "coordinate vector has wrong length");
        Cyc {
            field,
            c: Coords::from_big(coeffs),
        }
    }

    fn with(&self, c: Coords) -> Cyc {
        Cyc {
            field: self.field.clone(),
            c,
        }
    }

    pub fn order(&self) -> u64 {
        self.field.n
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.c.big()
    }

    pub fn is_zero(&self) -> bool {
        match &self.c {
            Coords::Small { num, .. } => num.iter().all(|&x| x == 0),
            Coords::Big(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.c {
            Coords::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|&x| x == 0),
            Coords::Big(v) => v[0].is_one() && v[1..].iter().all(Zero::is_zero),
        }
    }

    /// `(num, den)` when the element is a rational with a small form.
    fn small_rational(&self) -> Option<(i64, i64)> {
        match &self.c {
            Coords::Small { num, den } if num[1..].iter().all(|&x| x == 0) => Some((num[0], *den)),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let v = self.c.big();
        if v[1..].iter().all(Zero::is_zero) {
            Some(v[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Cyc) {
        assert_eq!(
            self.field.n, other.field.n,
            "mixing elements of different cyclotomic fields"
        );
    }

    fn combine(&self, other: &Cyc, sign: i128) -> Cyc {
        self.check(other);
        if let (Coords::Small { num: a, den: da }, Coords::Small { num: b, den: db }) = (&self.c, &other.c) {
            let (da, db) = (*da as i128, *db as i128);
            let g = da.gcd(&db);
            let (fa, fb) = (db / g, da / g);
            let num = a
                .iter()
                .zip(b)
                .map(|(&x, &y)| x as i128 * fa + sign * (y as i128 * fb))
                .collect();
            if let Some(c) = Coords::small(num, da * fa) {
                return self.with(c);
            }
        }
        let (a, b) = (self.c.big(), other.c.big());
        let v = a
            .iter()
            .zip(&b)
            .map(|(x, y)| if sign > 0 { x + y } else { x - y })
            .collect();
        self.with(Coords::from_big(v))
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> Cyc {
        self.scale_ratio(-1, 1)
    }

    /// Multiplication by `n / d`, `d != 0`.
    pub fn scale_ratio(&self, n: i64, d: i64) -> Cyc {
        assert!(d != 0, "zero denominator");
        if let Coords::Small { num, den } = &self.c {
            let v = num.iter().map(|&x| x as i128 * n as i128).collect();
            if let Some(c) = Coords::small(v, *den as i128 * d as i128) {
                return self.with(c);
            }
        }
        self.scale_big(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn scale(&self, q: &BigRational) -> Cyc {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => self.scale_ratio(n, d),
            _ => self.scale_big(q),
        }
    }

    fn scale_big(&self, q: &BigRational) -> Cyc {
        self.with(Coords::from_big(self.c.big().iter().map(|a| a * q).collect()))
    }

    fn mul_small(&self, a: &[i64], da: i64, b: &[i64], db: i64) -> Option<Coords> {
        let phi = self.field.phi;
        let n = self.field.n as usize;
        let mut raw = vec![0i128; 2 * phi - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    raw[i + j] = raw[i + j].checked_add(x as i128 * y as i128)?;
                }
            }
        }
        let mut out = vec![0i128; phi];
        for (e, c) in raw.into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            if e < phi {
                out[e] = out[e].checked_add(c)?;
            } else {
                for (k, &t) in self.field.powers[e % n].iter().enumerate() {
                    if t != 0 {
                        out[k] = out[k].checked_add(c.checked_mul(t as i128)?)?;
                    }
                }
            }
        }
        Coords::small(out, da as i128 * db as i128)
    }

    fn mul_big(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let phi = self.field.phi;
        let n = self.field.n as usize;
        // raw product, exponents < 2 phi - 1 <= 2n
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let mut coeffs = vec![BigRational::zero(); phi];
        for (e, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < phi {
                coeffs[e] += c;
            } else {
                for (k, &t) in self.field.powers[e % n].iter().enumerate() {
                    if t != 0 {
                        coeffs[k] += &c * BigInt::from(t);
                    }
                }
            }
        }
        coeffs
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        self.check(other);
        if let Some((n, d)) = other.small_rational() {
            return self.scale_ratio(n, d);
        }
        if let Some((n, d)) = self.small_rational() {
            return other.scale_ratio(n, d);
        }
        if let (Coords::Small { num: a, den: da }, Coords::Small { num: b, den: db }) = (&self.c, &other.c) {
            if let Some(c) = self.mul_small(a, *da, b, *db) {
                return self.with(c);
            }
        }
        self.with(Coords::from_big(self.mul_big(&self.c.big(), &other.c.big())))
    }

    /// Image under the linear map sending the coordinate `j` to `zeta^index(j)`
    /// of `target`.
    fn remap(&self, target: Arc<CycField>, index: impl Fn(usize) -> usize) -> Cyc {
        if let Coords::Small { num, den } = &self.c {
            let small = || -> Option<Vec<i128>> {
                let mut acc = vec![0i128; target.phi];
                for (j, &c) in num.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for (k, &t) in target.powers[index(j)].iter().enumerate() {
                        if t != 0 {
                            acc[k] = acc[k].checked_add((c as i128).checked_mul(t as i128)?)?;
                        }
                    }
                }
                Some(acc)
            };
            if let Some(c) = small().and_then(|v| Coords::small(v, *den as i128)) {
                return Cyc { field: target, c };
            }
        }
        let mut coeffs = vec![BigRational::zero(); target.phi];
        for (j, c) in self.c.big().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, &t) in target.powers[index(j)].iter().enumerate() {
                if t != 0 {
                    coeffs[k] += c * BigInt::from(t);
                }
            }
        }
        Cyc {
            field: target,
            c: Coords::from_big(coeffs),
        }
    }

    /// The automorphism `zeta_n -> zeta_n^a`; `a` must be a unit mod `n`.
    pub fn galois(&self, a: u64) -> Cyc {
        let n = self.field.n;
        self.remap(self.field.clone(), |j| ((j as u128 * a as u128) % n as u128) as usize)
    }

    pub fn inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Cyc::from_rational(self.field.n, q.recip()));
        }
        // product of the non-trivial conjugates times self is the norm
        let mut acc = Cyc::one(self.field.n);
        for a in units(self.field.n).into_iter().skip(1) {
            acc = acc.mul(&self.galois(a));
        }
        let norm = self.mul(&acc);
        let q = norm.as_rational().expect("norm of a cyclotomic number is rational");
        Some(acc.scale(&q.recip()))
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::one(self.field.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Image under `Q(zeta_n) -> Q(zeta_m)`, `zeta_n -> zeta_m^(m/n)`; `n | m`.
    pub fn promote(&self, m: u64) -> Cyc {
        let n = self.field.n;
        if m == n {
            return self.clone();
        }
        assert_eq!(m % n, 0, "promotion target must be a multiple");
        let step = m / n;
        self.remap(CycField::get(m), |j| (j as u64 * step % m) as usize)
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        match &self.c {
            Coords::Small { den, .. } => BigInt::from(*den),
            Coords::Big(v) => v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom())),
        }
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1_norm(&self) -> BigRational {
        self.c.big().iter().fold(BigRational::zero(), |acc, c| acc + c.abs())
    }

    /// Symbolic form such as `2 - zeta12^3`.
    pub fn pretty(&self) -> String {
        let n = self.field.n;
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (j, c) in self.c.big().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if j == 0 {
                mag.to_string()
            } else {
                let sym = format!("zeta{}^{}", n, j);
                if mag.is_one() {
                    sym
                } else {
                    format!("{}*{}", mag, sym)
                }
            };
            parts.push((neg, body));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(5), vec![1, 1, 1, 1, 1]);
        // first n with a coefficient of absolute value 2
        assert!(cyclotomic_coeffs(105).contains(&-2));
    }

    #[test]
    fn zeta_relations() {
        let z = Cyc::zeta_pow(4, 1);
        assert_eq!(z.mul(&z), Cyc::from_int(4, -1));
        let w = Cyc::zeta_pow(3, 1);
        let s = Cyc::one(3).add(&w).add(&w.mul(&w));
        assert!(s.is_zero());
        assert!(Cyc::zeta_pow(12, 1).pow(12).is_one());
    }

    #[test]
    fn inverse_and_galois() {
        let z = Cyc::zeta_pow(7, 1);
        let x = Cyc::from_int(7, 2).add(&z).add(&z.pow(3).scale(&q(1, 3)));
        let xi = x.inv().unwrap();
        assert!(x.mul(&xi).is_one());
        // sigma_2 o sigma_3 = sigma_6
        assert_eq!(x.galois(3).galois(2), x.galois(6));
        let i = Cyc::zeta_pow(4, 1);
        assert_eq!(i.galois(3), i.neg());
    }

    #[test]
    fn promotion_is_a_homomorphism() {
        let a = Cyc::zeta_pow(3, 1).add(&Cyc::from_int(3, 2));
        let b = Cyc::zeta_pow(3, 2).scale(&q(-1, 2));
        let lhs = a.mul(&b).promote(12);
        let rhs = a.promote(12).mul(&b.promote(12));
        assert_eq!(lhs, rhs);
        assert_eq!(Cyc::zeta_pow(4, 1).promote(12), Cyc::zeta_pow(12, 3));
    }
}
