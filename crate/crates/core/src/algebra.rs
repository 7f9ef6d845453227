//! Elements of the group algebra `K[G]` as dense coefficient vectors.

use crate::arith::linalg::solve;
use crate::arith::poly::Poly;
use crate::arith::scalar::Scalar;
use crate::group::{ConjugacyClasses, Group};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElem {
    pub coeffs: Vec<Scalar>,
}

impl AlgElem {
    pub fn zero(n: usize, zero: &Scalar) -> AlgElem {
        AlgElem {
            coeffs: vec![zero.clone(); n],
        }
    }

    pub fn basis(n: usize, g: usize, zero: &Scalar) -> AlgElem {
        let mut e = AlgElem::zero(n, zero);
        e.coeffs[g] = zero.one_like();
        e
    }

    pub fn one(n: usize, zero: &Scalar) -> AlgElem {
        AlgElem::basis(n, 0, zero)
    }

    /// Sum of the elements of `set`.
    pub fn sum_of(n: usize, set: &[usize], zero: &Scalar) -> AlgElem {
        let mut e = AlgElem::zero(n, zero);
        for &g in set {
            e.coeffs[g] = e.coeffs[g].add(&zero.one_like());
        }
        e
    }

    /// Element constant on conjugacy classes with the given class values.
    pub fn from_class_values(classes: &ConjugacyClasses, vals: &[Scalar]) -> AlgElem {
        AlgElem {
            coeffs: classes.class_of.iter().map(|&k| vals[k].clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn zero_scalar(&self) -> Scalar {
        self.coeffs[0].zero_like()
    }

    pub fn add(&self, o: &AlgElem) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &AlgElem) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul(&self, o: &AlgElem, g: &Group) -> AlgElem {
        let zero = self.zero_scalar();
        let mut out = vec![zero; self.len()];
        let right: Vec<(usize, &Scalar)> = o.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let one = ca.is_one();
            for &(b, cb) in &right {
                let ab = g.mul(a, b);
                out[ab] = if one { out[ab].add(cb) } else { out[ab].add(&ca.mul(cb)) };
            }
        }
        AlgElem { coeffs: out }
    }

    /// `g * self`: a permutation of coefficients.
    pub fn left_by(&self, t: usize, g: &Group) -> AlgElem {
        let mut out = vec![self.zero_scalar(); self.len()];
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[g.mul(t, a)] = c.clone();
            }
        }
        AlgElem { coeffs: out }
    }

    /// `self * g`.
    pub fn right_by(&self, t: usize, g: &Group) -> AlgElem {
        let mut out = vec![self.zero_scalar(); self.len()];
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[g.mul(a, t)] = c.clone();
            }
        }
        AlgElem { coeffs: out }
    }

    /// `t * self * t^-1`.
    pub fn conjugate_by(&self, t: usize, g: &Group) -> AlgElem {
        let mut out = vec![self.zero_scalar(); self.len()];
        let ti = g.inv(t);
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[g.mul(g.mul(t, a), ti)] = c.clone();
            }
        }
        AlgElem { coeffs: out }
    }

    pub fn is_central(&self, g: &Group) -> bool {
        g.generators()
            .iter()
            .all(|&t| self.left_by(t, g) == self.right_by(t, g))
    }

    pub fn pow(&self, k: u64, g: &Group) -> AlgElem {
        let mut acc = AlgElem::one(self.len(), &self.zero_scalar());
        for _ in 0..k {
            acc = acc.mul(self, g);
        }
        acc
    }

    /// Applies a map to every coefficient.
    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The image of an element of `K[H]` under an embedding `H -> G`.
    pub fn push_forward(&self, embed: &[usize], n: usize) -> AlgElem {
        let mut out = AlgElem::zero(n, &self.zero_scalar());
        for (a, c) in self.coeffs.iter().enumerate() {
            out.coeffs[embed[a]] = c.clone();
        }
        out
    }

    /// Restriction of an element supported on the image of `embed`.
    pub fn pull_back(&self, embed: &[usize]) -> Option<AlgElem> {
        let mut inside = vec![false; self.len()];
        for &b in embed {
            inside[b] = true;
        }
        if self.coeffs.iter().enumerate().any(|(a, c)| !inside[a] && !c.is_zero()) {
            return None;
        }
        Some(AlgElem {
            coeffs: embed.iter().map(|&b| self.coeffs[b].clone()).collect(),
        })
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !self.coeffs[a].is_zero()).collect()
    }
}

/// Structure constants of the center: `C_i C_j = sum_k a_ijk C_k` for the
/// class sums `C_k`.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    /// `consts[i][j]`: the non-zero `(k, a_ijk)`.
    pub consts: Vec<Vec<Vec<(usize, u64)>>>,
}

impl ClassAlgebra {
    pub fn new(g: &Group, classes: &ConjugacyClasses) -> ClassAlgebra {
        let r = classes.len();
        let mut consts = vec![vec![Vec::new(); r]; r];
        let mut counts = vec![0u64; r];
        for i in 0..r {
            for j in 0..r {
                counts.iter_mut().for_each(|c| *c = 0);
                for &x in &classes.classes[i] {
                    for &y in &classes.classes[j] {
                        counts[classes.class_of[g.mul(x, y)]] += 1;
                    }
                }
                consts[i][j] = (0..r)
                    .filter(|&k| counts[k] > 0)
                    .map(|k| (k, counts[k] / classes.sizes[k] as u64))
                    .collect();
            }
        }
        ClassAlgebra { consts }
    }

    pub fn dim(&self) -> usize {
        self.consts.len()
    }

    /// Product of central elements given by their class coefficients.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let zero = a[0].zero_like();
        let mut out = vec![zero; a.len()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai.mul(bj);
                for &(k, c) in &self.consts[i][j] {
                    out[k] = out[k].add(&ab.scale_int(c as i64));
                }
            }
        }
        out
    }

    /// Minimal polynomial of `y` in the algebra with identity `e`, from the
    /// first linear dependence among `e, y, y^2, ...`.
    pub fn minpoly(&self, e: &[Scalar], y: &[Scalar]) -> Poly {
        let zero = e[0].zero_like();
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), y);
            if let Some(c) = solve(&powers, &next, &zero) {
                let mut coeffs: Vec<Scalar> = c.iter().map(|x| x.neg()).collect();
                coeffs.push(zero.one_like());
                return Poly::new(coeffs, zero);
            }
            powers.push(next);
        }
    }

    /// `f(y)` with `e` as the identity.
    pub fn eval(&self, f: &Poly, e: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let zero = e[0].zero_like();
        let mut acc = vec![zero; e.len()];
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, y);
            for (a, x) in acc.iter_mut().zip(e) {
                *a = a.add(&x.mul(c));
            }
        }
        acc
    }

    /// Matrix of multiplication by `a` on the class-sum basis, as rows:
    /// `m[k][j]` is the `C_k`-coefficient of `a C_j`.
    pub fn mul_matrix(&self, a: &[Scalar]) -> Vec<Vec<Scalar>> {
        let r = self.dim();
        let zero = a[0].zero_like();
        let mut m = vec![vec![zero; r]; r];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..r {
                for &(k, c) in &self.consts[i][j] {
                    m[k][j] = m[k][j].add(&ai.scale_int(c as i64));
                }
            }
        }
        m
    }
}
