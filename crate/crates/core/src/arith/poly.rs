//! Dense univariate polynomials over [`Scalar`], constant term first.

use std::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<Scalar>,
    zero: Scalar,
}

impl Poly {
    pub fn new(mut c: Vec<Scalar>, zero: Scalar) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c, zero }
    }

    pub fn zero(zero: &Scalar) -> Poly {
        Poly::new(Vec::new(), zero.clone())
    }

    pub fn constant(a: Scalar) -> Poly {
        let z = a.zero_like();
        Poly::new(vec![a], z)
    }

    /// `X - a`.
    pub fn linear(a: &Scalar) -> Poly {
        Poly::new(vec![a.neg(), a.one_like()], a.zero_like())
    }

    pub fn monomial(coef: Scalar, k: usize) -> Poly {
        let z = coef.zero_like();
        let mut c = vec![z.clone(); k + 1];
        c[k] = coef;
        Poly::new(c, z)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.c.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn scalar_zero(&self) -> &Scalar {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|l| l.is_one())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new(
            (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect(),
            self.zero.clone(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new(
            (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect(),
            self.zero.clone(),
        )
    }

    pub fn scale(&self, a: &Scalar) -> Poly {
        Poly::new(self.c.iter().map(|x| x.mul(a)).collect(), self.zero.clone())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.zero);
        }
        let mut out = vec![self.zero.clone(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out, self.zero.clone())
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.c[dd].inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(&self.zero), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul(&inv);
            if !c.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[i + j] = r[i + j].sub(&c.mul(dj));
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q, self.zero.clone()), Poly::new(r, self.zero.clone())))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::VerificationFailed("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (mut r0, mut r1) = (m.clone(), self.rem(m).ok()?);
        let (mut s0, mut s1) = (Poly::zero(&self.zero), Poly::constant(self.zero.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).ok()?;
            let s = s0.sub(&q.mul(&s1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeff(0).inv()?;
        s0.scale(&c).rem(m).ok()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.c.iter().rev().fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_int(i as i64))
                .collect(),
            self.zero.clone(),
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut acc = Poly::constant(self.zero.one_like()).rem(m).unwrap();
        let mut b = self.rem(m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m).unwrap();
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b).rem(m).unwrap();
            }
        }
        acc
    }

    /// `prod (X - r)` over the given roots.
    pub fn from_roots(roots: &[Scalar], zero: &Scalar) -> Poly {
        roots
            .iter()
            .fold(Poly::constant(zero.one_like()), |acc, r| acc.mul(&Poly::linear(r)))
    }

    /// Applies a coefficient map.
    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        let z = f(&self.zero);
        Poly::new(self.c.iter().map(f).collect(), z)
    }

    pub fn pretty(&self) -> String {
        if self.c.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{i}"),
            };
            let cs = c.pretty();
            let simple = !cs.contains(' ');
            terms.push(if i == 0 {
                cs
            } else if c.is_one() {
                mono
            } else if simple {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            });
        }
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// Power sums `P_t = sum r^t` over the roots of a monic `f`, for
/// `t = 0..count`, by Newton's identities.
pub fn power_sums(f: &Poly, count: usize) -> Result<Vec<Scalar>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = f.degree().unwrap();
    let zero = f.scalar_zero().clone();
    // elementary symmetric functions: f = X^d - e1 X^(d-1) + e2 X^(d-2) - ...
    let e: Vec<Scalar> = (0..=d)
        .map(|k| {
            let c = f.coeff(d - k);
            if k % 2 == 0 {
                c
            } else {
                c.neg()
            }
        })
        .collect();
    let mut p: Vec<Scalar> = Vec::with_capacity(count);
    for t in 0..count {
        if t == 0 {
            p.push(zero.int_like(d as i64));
            continue;
        }
        // P_t = sum_{i=1}^{min(t,d)-1 ...} Newton recurrence
        let mut acc = zero.clone();
        for i in 1..=t.min(d) {
            let term = if i == t {
                e[i].scale_int(i as i64)
            } else {
                e[i].mul(&p[t - i])
            };
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        p.push(acc);
    }
    Ok(p)
}
