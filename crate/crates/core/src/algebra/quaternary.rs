use std::fmt;

use super::BinaryVector;
use crate::error::{Error, Result};

/// Vector over GF(4) written as `e = u + ωv` with binary `u` (z-part) and
/// `v` (x-part).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuaternaryVector {
    pub u: BinaryVector,
    pub v: BinaryVector,
}

impl QuaternaryVector {
    pub fn new(u: BinaryVector, v: BinaryVector) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch(u.len(), v.len()));
        }
        Ok(QuaternaryVector { u, v })
    }

    pub fn zeros(n: usize) -> Self {
        QuaternaryVector {
            u: BinaryVector::zeros(n),
            v: BinaryVector::zeros(n),
        }
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// Number of positions with `(u_i, v_i) != (0, 0)`.
    pub fn weight(&self) -> usize {
        self.u.or(&self.v).weight()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        QuaternaryVector {
            u: &self.u ^ &other.u,
            v: &self.v ^ &other.v,
        }
    }

    /// Trace inner product `e1·ē2 + ē1·e2`, which reduces to the symplectic
    /// form `v1·u2 + u1·v2 (mod 2)`.
    pub fn trace_inner_product(&self, other: &Self) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.v.dot(&other.u) ^ self.u.dot(&other.v))
    }

    /// Concatenation `(u | v)` of length `2n`, used for linear algebra.
    pub fn to_concat(&self) -> BinaryVector {
        let n = self.len();
        BinaryVector::from_indices(
            2 * n,
            self.u.ones_iter().chain(self.v.ones_iter().map(|i| i + n)),
        )
    }

    pub fn from_concat(x: &BinaryVector) -> Self {
        let n = x.len() / 2;
        let mut u = BinaryVector::zeros(n);
        let mut v = BinaryVector::zeros(n);
        for i in x.ones_iter() {
            if i < n {
                u.set(i, true);
            } else {
                v.set(i - n, true);
            }
        }
        QuaternaryVector { u, v }
    }

    /// Cyclic shift of both parts.
    pub fn rotate(&self, s: usize) -> Self {
        QuaternaryVector {
            u: self.u.rotate(s),
            v: self.v.rotate(s),
        }
    }
}

/// Symbols `0, 1, w, W` where `1 = (u=1,v=0)`, `w = ω`, `W = ω̄ = 1 + ω`.
impl fmt::Display for QuaternaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            let c = match (self.u.get(i), self.v.get(i)) {
                (false, false) => '0',
                (true, false) => '1',
                (false, true) => 'w',
                (true, true) => 'W',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuaternaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuaternaryVector({self})")
    }
}
