use std::fmt;

use serde::{Serialize, Serializer};

use crate::pauli::PauliOperator;

/// A distance value that may only be known as a lower bound when an
/// enumeration stopped at its weight cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Exact(usize),
    AtLeast(usize),
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }

    /// Smallest value consistent with what is known.
    pub fn lower(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, "≥{d}"),
        }
    }
}

/// Exact values serialize as integers, partial ones as `"≥d"` strings.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Exact(d) => s.serialize_u64(*d as u64),
            Distance::AtLeast(_) => s.serialize_str(&self.to_string()),
        }
    }
}

/// Parameters `[[n, k, d]]` of a quantum code, with `k = log2 K`.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeParams {
    pub n: usize,
    pub k: f64,
    pub d: Distance,
    /// No nontrivial stabilizer element of weight below `d`.
    pub pure: bool,
    /// Minimal-weight undetectable error (or, for `K = 1`, minimal-weight
    /// nontrivial stabilizer element).
    pub witness: Option<PauliOperator>,
}

impl CodeParams {
    pub fn degenerate(&self) -> bool {
        !self.pure
    }

    /// `k` as an integer when `K` is a power of two.
    pub fn k_int(&self) -> Option<usize> {
        (self.k.fract() == 0.0).then_some(self.k as usize)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let k = match self.k_int() {
            Some(k) => serde_json::json!(k),
            None => serde_json::json!(self.k),
        };
        serde_json::json!({
            "n": self.n,
            "k": k,
            "d": self.d,
            "pure": self.pure,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
        })
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k_int() {
            Some(k) => write!(f, "[[{},{},{}]]", self.n, k, self.d),
            None => write!(f, "(({},{:.3},{}))", self.n, self.k, self.d),
        }
    }
}
