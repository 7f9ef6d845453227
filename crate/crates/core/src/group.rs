//! Finite groups as dense Cayley tables.
//!
//! Elements are numbered breadth-first over words in the generators
//! (right multiplication, generators tried in order), so index 0 is the
//! identity and every label is a shortest word.

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::ntheory::lcm;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_BOUND: usize = 5000;

#[derive(Clone, Debug)]
pub struct Group {
    pub name: String,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<usize>,
    gen_names: Vec<String>,
}

/// Breadth-first closure of `gens` under right multiplication. Returns the
/// elements, and for each non-identity element its parent and generator.
fn closure<T: Clone + Eq + Hash>(
    gens: &[T],
    identity: T,
    mul: &impl Fn(&T, &T) -> T,
    bound: usize,
) -> Result<(Vec<T>, Vec<(usize, usize)>, Vec<Vec<usize>>)> {
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut parent = vec![(0usize, usize::MAX)];
    let mut right: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < elems.len() {
        for (j, g) in gens.iter().enumerate() {
            let prod = mul(&elems[i], g);
            let k = match index.get(&prod) {
                Some(&k) => k,
                None => {
                    if elems.len() >= bound {
                        return Err(Error::OrderBoundExceeded(bound));
                    }
                    let k = elems.len();
                    index.insert(prod.clone(), k);
                    elems.push(prod);
                    parent.push((i, j));
                    k
                }
            };
            right[j].push(k);
        }
        i += 1;
    }
    Ok((elems, parent, right))
}

fn word_label(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = &names[word[i]];
        parts.push(if j - i == 1 {
            name.clone()
        } else {
            format!("{name}^{}", j - i)
        });
        i = j;
    }
    parts.join("*")
}

impl Group {
    /// Builds the group generated by `gens` inside any structure with an
    /// associative multiplication.
    pub fn generate<T: Clone + Eq + Hash>(
        name: &str,
        gens: Vec<(String, T)>,
        identity: T,
        mul: impl Fn(&T, &T) -> T,
        bound: usize,
    ) -> Result<Group> {
        let (names, gvals): (Vec<String>, Vec<T>) = gens.into_iter().unzip();
        let (elems, parent, right) = closure(&gvals, identity, &mul, bound)?;
        let n = elems.len();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        for k in 1..n {
            let (p, j) = parent[k];
            let mut w = words[p].clone();
            w.push(j);
            words[k] = w;
        }
        let labels = words.iter().map(|w| word_label(w, &names)).collect();
        // a * b = right[gen(b)][a * parent(b)], filled in breadth-first order of b
        let mut mul_t = vec![0u32; n * n];
        for a in 0..n {
            mul_t[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, j) = parent[b];
            for a in 0..n {
                let ap = mul_t[a * n + p] as usize;
                mul_t[a * n + b] = right[j][ap] as u32;
            }
        }
        let generators = (0..gvals.len()).map(|j| right[j][0]).collect();
        Group::from_table(name, n, mul_t, labels, generators, names)
    }

    fn from_table(
        name: &str,
        n: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<usize>,
        gen_names: Vec<String>,
    ) -> Result<Group> {
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
            if inv[a] == usize::MAX {
                return Err(Error::VerificationFailed(format!("element {a} has no inverse")));
            }
        }
        let g = Group {
            name: name.to_string(),
            n,
            mul,
            inv,
            labels,
            generators,
            gen_names,
        };
        g.check_associative()?;
        Ok(g)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let bad = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::VerificationFailed("multiplication is not associative".into()));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..10_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::VerificationFailed("multiplication is not associative".into()));
                }
            }
        }
        Ok(())
    }

    /// The group generated by permutations of `{1..degree}`, each given as
    /// an image list (`perm[i-1]` is the image of `i`). Permutations act on
    /// the right: `(a*b)(i) = b(a(i))`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], bound: usize) -> Result<Group> {
        for (j, g) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::NonBijective(j));
            }
            for &x in g {
                if x == 0 || x > degree || seen[x - 1] {
                    return Err(Error::NonBijective(j));
                }
                seen[x - 1] = true;
            }
        }
        let gens0: Vec<(String, Vec<usize>)> = gens
            .iter()
            .enumerate()
            .map(|(j, g)| (format!("g{}", j + 1), g.iter().map(|x| x - 1).collect()))
            .collect();
        let id: Vec<usize> = (0..degree).collect();
        Group::generate(
            "perm",
            gens0,
            id,
            |a: &Vec<usize>, b: &Vec<usize>| a.iter().map(|&i| b[i]).collect(),
            bound,
        )
    }

    /// Permutations from disjoint cycle notation (1-based).
    pub fn cycles_to_perm(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
        let mut p: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a == 0 || a > degree || touched[a] {
                    return Err(Error::NonBijective(0));
                }
                touched[a] = true;
                p[a - 1] = c[(k + 1) % c.len()];
            }
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conj(&self, a: usize, g: usize) -> usize {
        // g^-1 a g
        self.mul(self.mul(self.inv[g], a), g)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv[a] } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.n).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let mut class_id = vec![usize::MAX; self.n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.n {
            if class_id[a] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut orbit = vec![a];
            class_id[a] = id;
            let mut i = 0;
            while i < orbit.len() {
                for &g in &self.generators {
                    let b = self.conj(orbit[i], g);
                    if class_id[b] == usize::MAX {
                        class_id[b] = id;
                        orbit.push(b);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        raw.sort_by_key(|c| (c.len(), c[0]));
        let mut class_of = vec![0; self.n];
        for (k, c) in raw.iter().enumerate() {
            for &a in c {
                class_of[a] = k;
            }
        }
        ConjugacyClasses {
            representatives: raw.iter().map(|c| c[0]).collect(),
            sizes: raw.iter().map(|c| c.len()).collect(),
            classes: raw,
            class_of,
        }
    }

    /// Whether every element is a product of the generators; always true for
    /// groups built here, kept as an explicit invariant check.
    pub fn is_generated(&self) -> bool {
        self.closure_of(&self.generators).len() == self.n
    }

    /// Sorted element indices of the subgroup generated by `elems`.
    pub fn closure_of(&self, elems: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            for &g in elems {
                let b = self.mul(out[i], g);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// All normal subgroups of index `p`, via the surjections onto `Z_p`.
    pub fn prime_index_normal_subgroups(&self, p: u64) -> Vec<Subgroup> {
        if p < 2 || !(self.n as u64).is_multiple_of(p) {
            return Vec::new();
        }
        let gens = &self.generators;
        let k = gens.len();
        // element -> (parent, generator) along the breadth-first tree
        let mut tree = vec![(0usize, 0usize); self.n];
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut order = vec![0usize];
        let mut i = 0;
        while i < order.len() {
            for (j, &g) in gens.iter().enumerate() {
                let b = self.mul(order[i], g);
                if !seen[b] {
                    seen[b] = true;
                    tree[b] = (order[i], j);
                    order.push(b);
                }
            }
            i += 1;
        }
        let mut kernels: Vec<Vec<usize>> = Vec::new();
        let total = (p as u128).pow(k as u32);
        for code in 1..total {
            let mut vals = vec![0u64; k];
            let mut c = code;
            for v in vals.iter_mut() {
                *v = (c % p as u128) as u64;
                c /= p as u128;
            }
            let mut f = vec![0u64; self.n];
            for &b in order.iter().skip(1) {
                let (a, j) = tree[b];
                f[b] = (f[a] + vals[j]) % p;
            }
            let hom = (0..self.n).all(|a| {
                gens.iter()
                    .enumerate()
                    .all(|(j, &g)| f[self.mul(a, g)] == (f[a] + vals[j]) % p)
            });
            if !hom {
                continue;
            }
            let kernel: Vec<usize> = (0..self.n).filter(|&a| f[a] == 0).collect();
            if !kernels.contains(&kernel) {
                kernels.push(kernel);
            }
        }
        kernels.sort();
        kernels
            .into_iter()
            .map(|members| Subgroup::with_cyclic_transversal(self, members, p as usize))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// A subgroup, with a transversal of its right cosets.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub members: Vec<usize>,
    pub transversal: Vec<usize>,
    /// The chosen lift `x` for a normal subgroup of prime index.
    pub lift: Option<usize>,
}

impl Subgroup {
    fn with_cyclic_transversal(g: &Group, members: Vec<usize>, p: usize) -> Subgroup {
        let mut inside = vec![false; g.order()];
        for &a in &members {
            inside[a] = true;
        }
        let x = (0..g.order()).find(|&a| !inside[a]).expect("proper subgroup");
        let transversal = (0..p).map(|i| g.pow(x, i as i64)).collect();
        Subgroup {
            members,
            transversal,
            lift: Some(x),
        }
    }

    pub fn from_members(g: &Group, members: Vec<usize>) -> Subgroup {
        let mut inside = vec![false; g.order()];
        for &a in &members {
            inside[a] = true;
        }
        let mut covered = vec![false; g.order()];
        let mut transversal = Vec::new();
        for t in 0..g.order() {
            if covered[t] {
                continue;
            }
            transversal.push(t);
            for &h in &members {
                covered[g.mul(h, t)] = true;
            }
        }
        Subgroup {
            members,
            transversal,
            lift: None,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        g.generators()
            .iter()
            .all(|&t| self.members.iter().all(|&h| self.contains(g.conj(h, t))))
    }

    /// The subgroup as a group in its own right, together with the map from
    /// its element indices to those of `g`.
    pub fn as_group(&self, g: &Group) -> (Group, Vec<usize>) {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &h in &self.members {
            if span.binary_search(&h).is_err() {
                gens.push(h);
                span = g.closure_of(&gens);
            }
        }
        let named: Vec<(String, usize)> = gens.iter().map(|&h| (g.label(h).to_string(), h)).collect();
        let sub = Group::generate(
            &format!("{}-sub", g.name),
            named,
            0usize,
            |a: &usize, b: &usize| g.mul(*a, *b),
            usize::MAX,
        )
        .expect("subgroup of a valid group");
        let mut embed = vec![0usize; sub.order()];
        // relabel with parent labels; recover the embedding by replaying words
        let mut labels = Vec::with_capacity(sub.order());
        let mut img = vec![usize::MAX; sub.order()];
        img[0] = 0;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let a = queue[i];
            for (j, &s) in sub.generators.iter().enumerate() {
                let b = sub.mul(a, s);
                if img[b] == usize::MAX {
                    img[b] = g.mul(img[a], gens[j]);
                    queue.push(b);
                }
            }
            i += 1;
        }
        for a in 0..sub.order() {
            embed[a] = img[a];
            labels.push(g.label(img[a]).to_string());
        }
        let mut sub = sub;
        sub.labels = labels;
        (sub, embed)
    }
}
