//! Named groups given by small presentations, realised through normal forms.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_BOUND};

pub const NAMES: [&str; 8] = ["C", "CxC", "D", "Q8", "C7:C3", "Cp2", "Q8oC4", "SL23"];

/// Unit quaternion `+-1, +-i, +-j, +-k` as (negated, unit index 0..4).
type Quat = (bool, u8);

fn quat_mul(a: Quat, b: Quat) -> Quat {
    // unit products: table[a][b] = (sign flip, unit)
    const T: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let (s, u) = T[a.1 as usize][b.1 as usize];
    (a.0 ^ b.0 ^ s, u)
}

const MINUS_ONE: Quat = (true, 0);
const QI: Quat = (false, 1);
const QJ: Quat = (false, 2);
const ONE: Quat = (false, 0);

/// `i -> j -> k -> i`.
fn rotate(q: Quat, times: u8) -> Quat {
    let mut q = q;
    for _ in 0..times % 3 {
        q = (q.0, if q.1 == 0 { 0 } else { q.1 % 3 + 1 });
    }
    q
}

fn param(name: &str, params: &[i64], count: usize) -> Result<Vec<u64>> {
    if params.len() != count {
        return Err(Error::BadParams(format!(
            "{name} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    params
        .iter()
        .map(|&p| {
            if p >= 1 {
                Ok(p as u64)
            } else {
                Err(Error::BadParams(format!("{name}: parameters must be positive")))
            }
        })
        .collect()
}

fn prime_param(name: &str, params: &[i64]) -> Result<u64> {
    let p = param(name, params, 1)?[0];
    if !crate::arith::ntheory::is_prime(p) {
        return Err(Error::BadParams(format!("{name}: {p} is not prime")));
    }
    Ok(p)
}

fn named<T>(pairs: Vec<(&str, T)>) -> Vec<(String, T)> {
    pairs.into_iter().map(|(s, t)| (s.to_string(), t)).collect()
}

pub fn catalog(name: &str, params: &[i64]) -> Result<Group> {
    let bound = DEFAULT_ORDER_BOUND;
    match name {
        "C" => {
            let n = param(name, params, 1)?[0];
            Group::generate(
                &format!("C{n}"),
                named(vec![("x", 1 % n)]),
                0u64,
                move |a, b| (a + b) % n,
                bound,
            )
        }
        "CxC" => {
            let p = param(name, params, 1)?[0];
            Group::generate(
                &format!("C{p}xC{p}"),
                named(vec![("x", (1 % p, 0)), ("y", (0, 1 % p))]),
                (0u64, 0u64),
                move |a, b| ((a.0 + b.0) % p, (a.1 + b.1) % p),
                bound,
            )
        }
        "D" => {
            // r^k s^e; s r s = r^-1
            let n = param(name, params, 1)?[0];
            Group::generate(
                &format!("D{}", 2 * n),
                named(vec![("r", (1 % n, 0u8)), ("s", (0, 1))]),
                (0u64, 0u8),
                move |a, b| {
                    let k = if a.1 == 0 { a.0 + b.0 } else { a.0 + n - b.0 };
                    (k % n, a.1 ^ b.1)
                },
                bound,
            )
        }
        "Q8" => {
            param(name, params, 0)?;
            Group::generate(
                "Q8",
                named(vec![("x", MINUS_ONE), ("y", QI), ("z", QJ)]),
                ONE,
                |a, b| quat_mul(*a, *b),
                bound,
            )
        }
        "C7:C3" => {
            // x^a y^b, with y x y^-1 = x^4
            param(name, params, 0)?;
            Group::generate(
                "C7:C3",
                named(vec![("x", (1u64, 0u64)), ("y", (0, 1))]),
                (0u64, 0u64),
                |a, b| {
                    let twist = 4u64.pow(a.1 as u32) % 7;
                    ((a.0 + twist * b.0) % 7, (a.1 + b.1) % 3)
                },
                bound,
            )
        }
        "Cp2" => {
            let p = prime_param(name, params)?;
            let n = p * p;
            Group::generate(
                &format!("C{n}"),
                named(vec![("x", p % n), ("y", 1 % n)]),
                0u64,
                move |a, b| (a + b) % n,
                bound,
            )
        }
        "Q8oC4" => {
            // q t^b with t central and t^2 = x = -1
            param(name, params, 0)?;
            Group::generate(
                "Q8oC4",
                named(vec![
                    ("x", (MINUS_ONE, 0u8)),
                    ("y", (QI, 0)),
                    ("z", (QJ, 0)),
                    ("t", (ONE, 1)),
                ]),
                (ONE, 0u8),
                |a, b| {
                    let mut q = quat_mul(a.0, b.0);
                    if a.1 + b.1 == 2 {
                        q = quat_mul(q, MINUS_ONE);
                    }
                    (q, (a.1 + b.1) % 2)
                },
                bound,
            )
        }
        "SL23" => {
            // q t^c with t^-1 q t = rot(q), so t^c q t^-c = rot^-c(q)
            param(name, params, 0)?;
            Group::generate(
                "SL2(3)",
                named(vec![
                    ("x", (MINUS_ONE, 0u8)),
                    ("y", (QI, 0)),
                    ("z", (QJ, 0)),
                    ("t", (ONE, 1)),
                ]),
                (ONE, 0u8),
                |a, b| {
                    let twisted = rotate(b.0, (3 - a.1) % 3);
                    (quat_mul(a.0, twisted), (a.1 + b.1) % 3)
                },
                bound,
            )
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum GroupFile {
    Permutations {
        name: String,
        permutations: Vec<Vec<Vec<usize>>>,
        degree: usize,
    },
    Catalog {
        catalog: String,
        #[serde(default)]
        params: Vec<i64>,
    },
}

/// A group from its JSON description: permutation generators in 1-based
/// cycle notation, or a catalog entry.
pub fn from_json(text: &str) -> Result<Group> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("group file: {e}")))?;
    match file {
        GroupFile::Catalog { catalog: name, params } => catalog(&name, &params),
        GroupFile::Permutations {
            name,
            permutations,
            degree,
        } => {
            let gens = permutations
                .iter()
                .enumerate()
                .map(|(j, c)| Group::cycles_to_perm(degree, c).map_err(|_| Error::NonBijective(j)))
                .collect::<Result<Vec<_>>>()?;
            let mut g = Group::from_permutations(degree, &gens, DEFAULT_ORDER_BOUND)?;
            g.name = name;
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(g: &Group, label: &str) -> usize {
        g.labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn q8_relations() {
        let g = catalog("Q8", &[]).unwrap();
        let (x, y, z) = (find(&g, "x"), find(&g, "y"), find(&g, "z"));
        assert_eq!(g.mul(x, x), 0);
        assert_eq!(g.mul(y, y), x);
        assert_eq!(g.mul(z, z), g.mul(y, y));
        assert_eq!(g.conj(y, z), g.mul(x, y));
    }

    #[test]
    fn sl23_relations() {
        let g = catalog("SL23", &[]).unwrap();
        assert_eq!(g.order(), 24);
        let (y, z, t) = (find(&g, "y"), find(&g, "z"), find(&g, "t"));
        assert_eq!(g.pow(t, 3), 0);
        assert_eq!(g.conj(y, t), z);
        assert_eq!(g.conj(z, t), g.mul(y, z));
    }

    #[test]
    fn metacyclic_relations() {
        let g = catalog("C7:C3", &[]).unwrap();
        let (x, y) = (find(&g, "x"), find(&g, "y"));
        assert_eq!(g.conj(x, y), g.pow(x, 2));
        let c = catalog("Q8oC4", &[]).unwrap();
        let (x, t) = (find(&c, "x"), find(&c, "t"));
        assert_eq!(c.mul(t, t), x);
        assert_eq!(c.order(), 16);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(catalog("S4", &[]), Err(Error::UnknownName(_))));
        assert!(matches!(catalog("C", &[]), Err(Error::BadParams(_))));
        assert!(matches!(catalog("Cp2", &[4]), Err(Error::BadParams(_))));
        assert_eq!(catalog("C", &[1]).unwrap().order(), 1);
    }
}
