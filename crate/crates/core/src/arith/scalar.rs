//! A single scalar type covering both ambient fields used by the library:
//! cyclotomic fields `Q(zeta_N)` and finite fields `GF(l^s)`.

use std::fmt;

use super::cyclo::Cyc;
use super::gf::Gf;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Cyc(Cyc),
    Ff(Gf),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Cyc(c) => c.is_zero(),
            Scalar::Ff(g) => g.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Cyc(c) => c.is_one(),
            Scalar::Ff(g) => g.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Cyc(c) => Scalar::Cyc(Cyc::zero(c.order())),
            Scalar::Ff(g) => Scalar::Ff(Gf::zero(g.field())),
        }
    }

    pub fn one_like(&self) -> Scalar {
        self.int_like(1)
    }

    pub fn int_like(&self, k: i64) -> Scalar {
        match self {
            Scalar::Cyc(c) => Scalar::Cyc(Cyc::from_int(c.order(), k)),
            Scalar::Ff(g) => Scalar::Ff(Gf::from_int(g.field(), k)),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.add(b)),
            (Scalar::Ff(a), Scalar::Ff(b)) => Scalar::Ff(a.add(b)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.sub(b)),
            (Scalar::Ff(a), Scalar::Ff(b)) => Scalar::Ff(a.sub(b)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.mul(b)),
            (Scalar::Ff(a), Scalar::Ff(b)) => Scalar::Ff(a.mul(b)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
            Scalar::Ff(a) => Scalar::Ff(a.neg()),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Cyc(a) => a.inv().map(Scalar::Cyc),
            Scalar::Ff(a) => a.inv().map(Scalar::Ff),
        }
    }

    pub fn div(&self, o: &Scalar) -> Option<Scalar> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Cyc(a) => Scalar::Cyc(a.pow(e)),
            Scalar::Ff(a) => Scalar::Ff(a.pow(e as u128)),
        }
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, k: i64) -> Scalar {
        match self {
            Scalar::Cyc(a) => Scalar::Cyc(a.scale_ratio(k, 1)),
            Scalar::Ff(_) => self.mul(&self.int_like(k)),
        }
    }

    /// Division by a non-zero integer (invertible in the field).
    pub fn div_int(&self, k: i64) -> Scalar {
        match self {
            Scalar::Cyc(a) => Scalar::Cyc(a.scale_ratio(1, k)),
            Scalar::Ff(_) => self.mul(&self.int_like(k).inv().expect("integer invertible in field")),
        }
    }

    pub fn as_cyc(&self) -> &Cyc {
        match self {
            Scalar::Cyc(c) => c,
            Scalar::Ff(_) => panic!("expected a cyclotomic scalar"),
        }
    }

    pub fn as_ff(&self) -> &Gf {
        match self {
            Scalar::Ff(g) => g,
            Scalar::Cyc(_) => panic!("expected a finite field scalar"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Scalar::Ff(_))
    }

    pub fn pretty(&self) -> String {
        match self {
            Scalar::Cyc(c) => c.pretty(),
            Scalar::Ff(g) => g.pretty(),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}
