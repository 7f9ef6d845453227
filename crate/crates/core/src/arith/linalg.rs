//! Exact linear algebra over [`Scalar`]: incremental echelon bases, rank,
//! coordinates and null spaces.

use super::scalar::Scalar;

/// An incrementally built echelon basis of a subspace of `K^n`.
///
/// Rows are kept with a unit pivot and zeros in the pivot columns of all
/// earlier rows, so a vector is reduced by a single pass in insertion order.
/// Optionally tracks how each row is combined from the independent vectors
/// that were inserted, which makes coordinates available.
#[derive(Clone, Debug)]
pub struct Echelon {
    zero: Scalar,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vec<Scalar>>>,
}

impl Echelon {
    pub fn new(zero: &Scalar, track: bool) -> Echelon {
        Echelon {
            zero: zero.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: if track { Some(Vec::new()) } else { None },
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the residual and the
    /// multipliers used for each row.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut w = v.to_vec();
        let mut mult = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                for (wi, ri) in w.iter_mut().zip(row).skip(p) {
                    if !ri.is_zero() {
                        *wi = wi.sub(&c.mul(ri));
                    }
                }
            }
            mult.push(c);
        }
        (w, mult)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether it was independent of the current basis.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let (mut w, mult) = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        if let Some(combos) = &mut self.combos {
            let k = combos.len();
            let mut combo = vec![self.zero.clone(); k + 1];
            combo[k] = self.zero.one_like();
            for (c, prev) in mult.iter().zip(combos.iter()) {
                if c.is_zero() {
                    continue;
                }
                for (ci, pi) in combo.iter_mut().zip(prev) {
                    if !pi.is_zero() {
                        *ci = ci.sub(&c.mul(pi));
                    }
                }
            }
            for ci in combo.iter_mut() {
                *ci = ci.mul(&inv);
            }
            combos.push(combo);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` with respect to the independent vectors inserted so
    /// far (in insertion order), or `None` if `v` is outside the span.
    /// Requires tracking.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let combos = self.combos.as_ref().expect("coordinate tracking disabled");
        let (w, mult) = self.reduce(v);
        if w.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let k = combos.len();
        let mut out = vec![self.zero.clone(); k];
        for (c, combo) in mult.iter().zip(combos) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(combo) {
                if !x.is_zero() {
                    *o = o.add(&c.mul(x));
                }
            }
        }
        Some(out)
    }
}

pub fn rank(vectors: &[Vec<Scalar>], zero: &Scalar) -> usize {
    let mut e = Echelon::new(zero, false);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : M x = 0}` for the matrix given by its rows.
pub fn nullspace(m: &[Vec<Scalar>], cols: usize, zero: &Scalar) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![zero.clone(); cols];
            x[f] = zero.one_like();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = a[i][f].neg();
            }
            x
        })
        .collect()
}

/// Solves `sum_i x_i columns[i] = target`; `None` if inconsistent.
pub fn solve(columns: &[Vec<Scalar>], target: &[Scalar], zero: &Scalar) -> Option<Vec<Scalar>> {
    let mut e = Echelon::new(zero, true);
    let mut used = Vec::new();
    for (i, c) in columns.iter().enumerate() {
        if e.insert(c) {
            used.push(i);
        }
    }
    let coords = e.coordinates(target)?;
    let mut x = vec![zero.clone(); columns.len()];
    for (i, c) in used.into_iter().zip(coords) {
        x[i] = c;
    }
    Some(x)
}
