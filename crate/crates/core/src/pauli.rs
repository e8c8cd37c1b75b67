//! Pauli operators `i^m X^v Z^u` on `n` qubits.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{BinaryVector, QuaternaryVector};
use crate::error::{Error, Result};

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `(v, u)` bits: x-part and z-part.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn from_bits(v: bool, u: bool) -> Self {
        match (v, u) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `i^phase X^v Z^u`. Phases are tracked mod 4 but never enter distance
/// computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    v: BinaryVector,
    u: BinaryVector,
    phase: u8,
}

impl PauliOperator {
    /// Operator with the Hermitian phase convention `m' = v·u` (count of Y's).
    pub fn new(v: BinaryVector, u: BinaryVector) -> Result<Self> {
        if v.len() != u.len() {
            return Err(Error::LengthMismatch(v.len(), u.len()));
        }
        let phase = (v.overlap(&u) % 4) as u8;
        Ok(PauliOperator { v, u, phase })
    }

    pub fn with_phase(v: BinaryVector, u: BinaryVector, phase: u8) -> Result<Self> {
        let mut p = Self::new(v, u)?;
        p.phase = phase % 4;
        Ok(p)
    }

    pub fn identity(n: usize) -> Self {
        PauliOperator {
            v: BinaryVector::zeros(n),
            u: BinaryVector::zeros(n),
            phase: 0,
        }
    }

    /// A single letter on qubit `i`, identity elsewhere.
    pub fn single(n: usize, i: usize, p: Pauli) -> Self {
        let (v, u) = p.bits();
        let mut vv = BinaryVector::zeros(n);
        let mut uu = BinaryVector::zeros(n);
        vv.set(i, v);
        uu.set(i, u);
        Self::new(vv, uu).expect("equal lengths")
    }

    pub fn z_type(c: &BinaryVector) -> Self {
        Self::new(BinaryVector::zeros(c.len()), c.clone()).expect("equal lengths")
    }

    pub fn x_type(c: &BinaryVector) -> Self {
        Self::new(c.clone(), BinaryVector::zeros(c.len())).expect("equal lengths")
    }

    pub fn from_letters(letters: &[Pauli]) -> Self {
        let n = letters.len();
        let mut v = BinaryVector::zeros(n);
        let mut u = BinaryVector::zeros(n);
        for (i, p) in letters.iter().enumerate() {
            let (a, b) = p.bits();
            v.set(i, a);
            u.set(i, b);
        }
        Self::new(v, u).expect("equal lengths")
    }

    pub fn num_qubits(&self) -> usize {
        self.v.len()
    }

    pub fn x_part(&self) -> &BinaryVector {
        &self.v
    }

    pub fn z_part(&self) -> &BinaryVector {
        &self.u
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn letter(&self, i: usize) -> Pauli {
        Pauli::from_bits(self.v.get(i), self.u.get(i))
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        self.v.or(&self.u).weight()
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_zero() && self.u.is_zero()
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(!(self.v.dot(&other.u) ^ self.u.dot(&other.v)))
    }

    /// Product `self * other`, including the reordering sign from moving
    /// `Z^{u_a}` past `X^{v_b}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let swap = 2 * (self.u.overlap(&other.v) % 2) as u8;
        Ok(PauliOperator {
            v: &self.v ^ &other.v,
            u: &self.u ^ &other.u,
            phase: (self.phase + other.phase + swap) % 4,
        })
    }

    /// Drops the phase: `e = u + ωv`.
    pub fn phi(&self) -> QuaternaryVector {
        QuaternaryVector {
            u: self.u.clone(),
            v: self.v.clone(),
        }
    }

    /// Inverse of [`phi`](Self::phi) with the Hermitian phase convention.
    pub fn phi_inv(e: &QuaternaryVector) -> Self {
        Self::new(e.v.clone(), e.u.clone()).expect("quaternary parts have equal lengths")
    }

    /// Phase relative to the Hermitian convention: 0 for `+P`, 2 for `-P`.
    pub fn relative_phase(&self) -> u8 {
        (self.phase + 4 - (self.v.overlap(&self.u) % 4) as u8) % 4
    }

    pub fn equal_up_to_phase(&self, other: &Self) -> bool {
        self.v == other.v && self.u == other.u
    }

    /// Cyclic shift of qubit labels by `s`.
    pub fn rotate(&self, s: usize) -> Self {
        PauliOperator {
            v: self.v.rotate(s),
            u: self.u.rotate(s),
            phase: self.phase,
        }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::LengthMismatch(self.num_qubits(), other.num_qubits()));
        }
        Ok(())
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.relative_phase() {
            0 => {}
            1 => f.write_str("+i")?,
            2 => f.write_str("-")?,
            _ => f.write_str("-i")?,
        }
        for i in 0..self.num_qubits() {
            write!(f, "{}", self.letter(i).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOperator({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Grammar `^[+-]?[IXYZ]*$`.
    fn from_str(s: &str) -> Result<Self> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => (false, s),
        };
        let letters = body
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::Parse(format!("illegal Pauli character {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut p = Self::from_letters(&letters);
        if negative {
            p.phase = (p.phase + 2) % 4;
        }
        Ok(p)
    }
}
