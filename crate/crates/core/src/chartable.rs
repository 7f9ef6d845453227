//! Ordinary character tables by the modular (Dixon) method.
//!
//! Central characters are common eigenvectors of the class multiplication
//! matrices over `GF(l)` with `l = 1 mod u`; values are lifted to `Z[zeta_u]`
//! through eigenvalue multiplicities and checked by exact orthogonality.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::cyclo::Cyc;
use crate::arith::ntheory::{inv_mod, is_prime, pow_mod, primitive_root};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub u: u64,
    pub order: usize,
    pub classes: ConjugacyClasses,
    /// `chars[i][k]`: value of the `i`-th character on class `k`, in `Q(zeta_u)`.
    pub chars: Vec<Vec<Cyc>>,
    pub degrees: Vec<u64>,
    /// Class of the inverses of class `k`.
    pub inverse_class: Vec<usize>,
    /// `power[k][a]`: class of `g_k^a` for `0 <= a < u`.
    pub power: Vec<Vec<usize>>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

// ---- small dense linear algebra mod a prime ----

fn rref_mod(m: &mut [Vec<u64>], l: u64) -> Vec<usize> {
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
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], l).unwrap();
        for x in m[r].iter_mut() {
            *x = *x * inv % l;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + l - f * m[r][j] % l) % l;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn nullspace_mod(m: &[Vec<u64>], cols: usize, l: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = rref_mod(&mut a, l);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut x = vec![0u64; cols];
            x[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = (l - a[i][f]) % l;
            }
            x
        })
        .collect()
}

/// Characteristic polynomial (ascending, monic) via Hessenberg reduction.
fn charpoly_mod(a: &[Vec<u64>], l: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], l).unwrap();
        for i in (m + 1)..n {
            let t = h[i][m - 1] * inv % l;
            if t == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + l - t * h[m][j] % l) % l;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + t * row[i]) % l;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} prod_j h_{j,j-1} p_{k-i-1}
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &p[k - 1];
        let mut next = vec![0u64; k + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % l;
            next[d] = (next[d] + l - c * h[k - 1][k - 1] % l) % l;
        }
        let mut prod = 1u64;
        for i in 1..k {
            prod = prod * h[k - i][k - i - 1] % l;
            let coef = h[k - i - 1][k - 1] * prod % l;
            if coef == 0 {
                continue;
            }
            for (d, &c) in p[k - i - 1].iter().enumerate() {
                next[d] = (next[d] + l - coef * c % l) % l;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn eval_mod(poly: &[u64], x: u64, l: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % l)
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], l: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % l))
        .collect()
}

/// Splits the subspace spanned by `basis` into eigenspaces of `m`, which
/// must leave it invariant.
fn split_subspace(basis: &[Vec<u64>], m: &[Vec<u64>], l: u64) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    if d == 1 {
        return vec![basis.to_vec()];
    }
    let r = basis[0].len();
    // coordinates of m*b_i in the basis: solve via rref of [basis^T | images^T]
    let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(m, b, l)).collect();
    let mut aug: Vec<Vec<u64>> = (0..r)
        .map(|k| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[k]).collect();
            row.extend(images.iter().map(|im| im[k]));
            row
        })
        .collect();
    rref_mod(&mut aug, l);
    // restricted[i][j] = coordinate i of image j
    let restricted: Vec<Vec<u64>> = (0..d).map(|i| aug[i][d..].to_vec()).collect();
    let cp = charpoly_mod(&restricted, l);
    let mut out = Vec::new();
    for lambda in 0..l {
        if eval_mod(&cp, lambda, l) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { (x + l - lambda) % l } else { x })
                    .collect()
            })
            .collect();
        let ns = nullspace_mod(&shifted, d, l);
        let vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                (0..r)
                    .map(|k| c.iter().zip(basis).fold(0, |acc, (ci, b)| (acc + ci * b[k]) % l))
                    .collect()
            })
            .collect();
        out.push(vecs);
    }
    out
}

/// Least prime `l = 1 mod u` not dividing `order` with `l > 2 sqrt(order)`.
pub fn dixon_prime(u: u64, order: u64) -> u64 {
    let mut l = u + 1;
    loop {
        if is_prime(l) && !order.is_multiple_of(l) && l * l > 4 * order {
            return l;
        }
        l += u;
    }
}

impl CharacterTable {
    pub fn compute(g: &Group, seed: u64) -> Result<CharacterTable> {
        let u = g.exponent();
        let l = dixon_prime(u, g.order() as u64);
        CharacterTable::compute_with_prime(g, seed, l)
    }

    pub fn compute_with_prime(g: &Group, seed: u64, l: u64) -> Result<CharacterTable> {
        let u = g.exponent();
        let n = g.order();
        let cc = g.conjugacy_classes();
        let r = cc.len();
        let inverse_class: Vec<usize> = cc.representatives.iter().map(|&a| cc.class_of[g.inv(a)]).collect();
        let power: Vec<Vec<usize>> = cc
            .representatives
            .iter()
            .map(|&a| {
                let mut out = Vec::with_capacity(u as usize);
                let mut x = 0;
                for _ in 0..u {
                    out.push(cc.class_of[x]);
                    x = g.mul(x, a);
                }
                out
            })
            .collect();

        // class multiplication coefficients: m[j][k][c] = #{x in C_j : x^-1 g_c in C_k}
        let mut mats = vec![vec![vec![0u64; r]; r]; r];
        for (j, cj) in cc.classes.iter().enumerate() {
            for (c, &gc) in cc.representatives.iter().enumerate() {
                for &x in cj {
                    let y = g.mul(g.inv(x), gc);
                    mats[j][cc.class_of[y]][c] += 1;
                }
            }
        }
        for m in mats.iter_mut() {
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x %= l;
                }
            }
        }

        // common eigenvectors: a random combination first, then each matrix
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut combo = vec![vec![0u64; r]; r];
        for m in &mats {
            let c: u64 = rng.gen_range(0..l);
            for (crow, mrow) in combo.iter_mut().zip(m) {
                for (x, y) in crow.iter_mut().zip(mrow) {
                    *x = (*x + c * y) % l;
                }
            }
        }
        let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
        let mut spaces = split_subspace(&identity, &combo, l);
        for m in &mats {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            spaces = spaces.into_iter().flat_map(|s| split_subspace(&s, m, l)).collect();
        }
        if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
            return Err(Error::LiftVerificationFailed(format!(
                "class algebra did not split into {r} eigenlines mod {l}"
            )));
        }

        let z = pow_mod(primitive_root(l), (l - 1) / u, l);
        let z_inv = inv_mod(z, l).unwrap();
        let mut rows: Vec<(u64, Vec<Cyc>)> = Vec::with_capacity(r);
        for s in spaces {
            let w0 = &s[0];
            let inv0 = inv_mod(w0[0], l)
                .ok_or_else(|| Error::LiftVerificationFailed("eigenvector vanishes at the identity".into()))?;
            let w: Vec<u64> = w0.iter().map(|x| x * inv0 % l).collect();
            // psi(1)^2 = |G| / sum_k w_k w_k' / h_k
            let mut sum = 0u64;
            for k in 0..r {
                let h_inv = inv_mod(cc.sizes[k] as u64 % l, l).unwrap();
                sum = (sum + w[k] * w[inverse_class[k]] % l * h_inv) % l;
            }
            let sq = (n as u64 % l)
                * inv_mod(sum, l).ok_or_else(|| Error::LiftVerificationFailed("degenerate degree equation".into()))?
                % l;
            let deg = (1..=((n as f64).sqrt() as u64 + 1))
                .find(|d| d * d % l == sq && (n as u64).is_multiple_of(*d))
                .ok_or_else(|| Error::LiftVerificationFailed("no admissible degree".into()))?;
            let vals_mod: Vec<u64> = (0..r)
                .map(|k| w[k] * (deg % l) % l * inv_mod(cc.sizes[k] as u64 % l, l).unwrap() % l)
                .collect();
            let mut vals = Vec::with_capacity(r);
            for k in 0..r {
                // multiplicity of eigenvalue zeta_o^j of rho(g_k), o the element order
                let o = (1..=u as usize)
                    .find(|&t| power[k][t % u as usize] == 0 && t > 0)
                    .unwrap();
                let zo_inv = pow_mod(z_inv, u / o as u64, l);
                let o_inv = inv_mod(o as u64 % l, l).unwrap();
                let mut counts = vec![0i64; u as usize];
                for j in 0..o {
                    let mut acc = 0u64;
                    let step = pow_mod(zo_inv, j as u64, l);
                    let mut zt = 1u64;
                    for t in 0..o {
                        acc = (acc + vals_mod[power[k][t]] * zt) % l;
                        zt = zt * step % l;
                    }
                    let m = acc * o_inv % l;
                    if m > deg {
                        return Err(Error::LiftVerificationFailed(format!(
                            "eigenvalue multiplicity {m} exceeds degree {deg}"
                        )));
                    }
                    counts[j * (u as usize / o)] = m as i64;
                }
                if counts.iter().sum::<i64>() != deg as i64 {
                    return Err(Error::LiftVerificationFailed(
                        "multiplicities do not sum to the degree".into(),
                    ));
                }
                vals.push(Cyc::from_exponent_counts(u, &counts));
            }
            rows.push((deg, vals));
        }

        rows.sort_by(|a, b| {
            let triv_a = a.1.iter().all(|v| v.is_one());
            let triv_b = b.1.iter().all(|v| v.is_one());
            a.0.cmp(&b.0).then(triv_b.cmp(&triv_a)).then_with(|| b.1.cmp(&a.1))
        });
        let table = CharacterTable {
            u,
            order: n,
            classes: cc,
            degrees: rows.iter().map(|r| r.0).collect(),
            chars: rows.into_iter().map(|r| r.1).collect(),
            inverse_class,
            power,
            prime: l,
        };
        table.verify_orthogonality()?;
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Exact row orthogonality.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let r = self.len();
        let conj: Vec<Vec<Cyc>> = self
            .chars
            .iter()
            .map(|row| (0..r).map(|k| row[self.inverse_class[k]].clone()).collect())
            .collect();
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product_raw(&self.chars[i], &conj[j]);
                let ok = if i == j { ip.is_one() } else { ip.is_zero() };
                if !ok {
                    return Err(Error::LiftVerificationFailed(format!(
                        "rows {i} and {j} are not orthonormal"
                    )));
                }
            }
        }
        let s: u64 = self.degrees.iter().map(|d| d * d).sum();
        if s != self.order as u64 {
            return Err(Error::LiftVerificationFailed(
                "sum of squared degrees differs from |G|".into(),
            ));
        }
        Ok(())
    }

    /// `(1/|G|) sum_k h_k a(g_k) b_conj(g_k)` where `b_conj` is already
    /// evaluated at inverses.
    fn inner_product_raw(&self, a: &[Cyc], b_conj: &[Cyc]) -> Cyc {
        let mut acc = Cyc::zero(self.u);
        for k in 0..a.len() {
            acc = acc.add(&a[k].mul(&b_conj[k]).scale(&rat(self.classes.sizes[k] as i64, 1)));
        }
        acc.scale(&rat(1, self.order as i64))
    }

    /// `<a, b> = (1/|G|) sum_k h_k a(g_k) b(g_k^-1)`.
    pub fn inner_product(&self, a: &[Cyc], b: &[Cyc]) -> Cyc {
        let b_conj: Vec<Cyc> = (0..a.len()).map(|k| b[self.inverse_class[k]].clone()).collect();
        self.inner_product_raw(a, &b_conj)
    }

    /// Row index of `psi^sigma_a`, `psi^sigma_a(g) = psi(g^a)`.
    pub fn galois_row(&self, i: usize, a: u64) -> usize {
        let target = self.galois_values(i, a);
        self.chars
            .iter()
            .position(|row| *row == target)
            .expect("Galois conjugate of a character is a character")
    }

    pub fn galois_values(&self, i: usize, a: u64) -> Vec<Cyc> {
        let a = (a % self.u) as usize;
        (0..self.len())
            .map(|k| self.chars[i][self.power[k][a]].clone())
            .collect()
    }

    /// Frobenius-Schur indicator `(1/|G|) sum_g psi(g^2)`.
    pub fn indicator(&self, i: usize) -> i64 {
        let mut acc = Cyc::zero(self.u);
        for k in 0..self.len() {
            let sq = self.power[k][2 % self.u as usize];
            acc = acc.add(&self.chars[i][sq].scale(&rat(self.classes.sizes[k] as i64, 1)));
        }
        let v = acc.scale(&rat(1, self.order as i64));
        let q = v.as_rational().expect("indicator is rational");
        q.to_integer().try_into().unwrap()
    }

    /// Values of row `i` on every element of the group.
    pub fn on_elements(&self, i: usize) -> Vec<Cyc> {
        self.classes
            .class_of
            .iter()
            .map(|&k| self.chars[i][k].clone())
            .collect()
    }

    pub fn index_of_values(&self) -> HashMap<Vec<Cyc>, usize> {
        self.chars.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect()
    }
}

pub fn rat(a: i64, b: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(a.into(), b.into())
}

/// A class function of `g` given per class of `classes`.
pub type ClassFunction = Vec<Cyc>;

/// Values of a class function of `g` on the classes of a subgroup `h`
/// embedded by `embed`.
pub fn restrict(
    values: &[Cyc],
    g_classes: &ConjugacyClasses,
    h_classes: &ConjugacyClasses,
    embed: &[usize],
) -> ClassFunction {
    h_classes
        .representatives
        .iter()
        .map(|&a| values[g_classes.class_of[embed[a]]].clone())
        .collect()
}

/// The induced class function `(1/|H|) sum_{t in G} psi°(t g t^-1)`.
pub fn induce(
    values: &[Cyc],
    h_classes: &ConjugacyClasses,
    h_order: usize,
    embed: &[usize],
    g: &Group,
    g_classes: &ConjugacyClasses,
) -> ClassFunction {
    let mut back = vec![usize::MAX; g.order()];
    for (a, &b) in embed.iter().enumerate() {
        back[b] = a;
    }
    let level = values.first().map(|v| v.order()).unwrap_or(1);
    g_classes
        .representatives
        .iter()
        .map(|&x| {
            let mut acc = Cyc::zero(level);
            for t in 0..g.order() {
                let y = g.mul(g.mul(t, x), g.inv(t));
                let a = back[y];
                if a != usize::MAX {
                    acc = acc.add(&values[h_classes.class_of[a]]);
                }
            }
            acc.scale(&rat(1, h_order as i64))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn charpoly_small() {
        // [[2,1],[1,2]] has char poly x^2 - 4x + 3
        let cp = charpoly_mod(&[vec![2, 1], vec![1, 2]], 7);
        assert_eq!(cp, vec![3, 3, 1]);
    }

    #[test]
    fn q8_degrees() {
        let g = catalog("Q8", &[]).unwrap();
        let t = CharacterTable::compute(&g, 0).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(t.indicator(4), -1);
        assert!(t.chars[0].iter().all(|v| v.is_one()));
    }

    #[test]
    fn sl23_degrees() {
        let g = catalog("SL23", &[]).unwrap();
        let t = CharacterTable::compute(&g, 0).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn cyclic_four() {
        let g = catalog("C", &[4]).unwrap();
        let t = CharacterTable::compute(&g, 3).unwrap();
        assert_eq!(t.len(), 4);
        for row in &t.chars {
            for v in row {
                assert!((0..4).any(|k| *v == Cyc::zeta_pow(4, k)));
            }
        }
    }
}
