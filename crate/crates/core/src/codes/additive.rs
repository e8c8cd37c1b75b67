use crate::algebra::{BinaryMatrix, QuaternaryVector, RowBasis};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// Additive code over GF(4): the GF(2)-span of its generator rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveF4Code {
    n: usize,
    rows: Vec<QuaternaryVector>,
}

impl AdditiveF4Code {
    pub fn new(n: usize, rows: Vec<QuaternaryVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch(r.len(), n));
        }
        Ok(AdditiveF4Code { n, rows })
    }

    pub fn from_paulis(n: usize, ops: &[PauliOperator]) -> Result<Self> {
        Self::new(n, ops.iter().map(PauliOperator::phi).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[QuaternaryVector] {
        &self.rows
    }

    pub fn to_paulis(&self) -> Vec<PauliOperator> {
        self.rows.iter().map(PauliOperator::phi_inv).collect()
    }

    /// Echelon basis of the span in the concatenated `(u | v)` form.
    pub fn basis(&self) -> RowBasis {
        RowBasis::from_rows(2 * self.n, &self.rows.iter().map(|r| r.to_concat()).collect::<Vec<_>>())
    }

    /// Independent generators spanning the same code.
    pub fn reduced(&self) -> Self {
        AdditiveF4Code {
            n: self.n,
            rows: self.basis().basis().map(QuaternaryVector::from_concat).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis().rank()
    }

    pub fn contains(&self, e: &QuaternaryVector) -> bool {
        e.len() == self.n && self.basis().contains(&e.to_concat())
    }

    pub fn span_equals(&self, other: &Self) -> bool {
        let a = self.basis();
        let b = other.basis();
        self.n == other.n
            && a.rank() == b.rank()
            && other.rows.iter().all(|r| a.contains(&r.to_concat()))
    }

    /// All `e` with vanishing trace inner product against every row.
    pub fn f4_dual(&self) -> Self {
        // tr(e, r) = u_e·v_r + v_e·u_r = (u_e | v_e)·(v_r | u_r).
        let swapped = self
            .rows
            .iter()
            .map(|r| QuaternaryVector { u: r.v.clone(), v: r.u.clone() }.to_concat())
            .collect();
        let m = BinaryMatrix::new(2 * self.n, swapped).expect("rows have length 2n");
        AdditiveF4Code {
            n: self.n,
            rows: m.nullspace().rows().iter().map(QuaternaryVector::from_concat).collect(),
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows[i + 1..]
                .iter()
                .all(|b| !a.trace_inner_product(b).expect("equal lengths"))
        })
    }

    /// Number of encoded qubits `n - rank` of a self-orthogonal code.
    pub fn num_logical(&self) -> Result<usize> {
        if !self.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        Ok(self.n - self.rank())
    }

    /// Whether the cyclic shift of every row stays in the span.
    pub fn is_cyclic(&self) -> bool {
        let b = self.basis();
        self.rows.iter().all(|r| b.contains(&r.rotate(1).to_concat()))
    }

    pub fn weights(&self) -> Vec<usize> {
        self.rows.iter().map(QuaternaryVector::weight).collect()
    }
}

pub fn f4_dual(c: &AdditiveF4Code) -> AdditiveF4Code {
    c.f4_dual()
}

pub fn is_self_orthogonal(c: &AdditiveF4Code) -> bool {
    c.is_self_orthogonal()
}
