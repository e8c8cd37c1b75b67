use crate::algebra::{BinaryVector, QuaternaryVector};
use crate::codes::additive::AdditiveF4Code;
use crate::codes::classical::ClassicalCode;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::pauli::PauliOperator;

/// CWS code in standard form: a graph state together with the classical
/// code selecting the word operators `Z^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwsCode {
    graph: Graph,
    classical: ClassicalCode,
}

impl CwsCode {
    pub fn new(graph: Graph, classical: ClassicalCode) -> Result<Self> {
        if graph.n() != classical.n() {
            return Err(Error::LengthMismatch(graph.n(), classical.n()));
        }
        Ok(CwsCode { graph, classical })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn classical(&self) -> &ClassicalCode {
        &self.classical
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `log2 K`.
    pub fn k(&self) -> f64 {
        self.classical.log2_size()
    }

    /// Stabilizer rows `p_i (ω𝟙 + R)` for the parity checks `p_i` of a
    /// linear classical code: x-part `p_i`, z-part `p_i R`.
    pub fn stabilizer(&self) -> Result<AdditiveF4Code> {
        let lin = self.classical.as_linear().ok_or(Error::NonlinearCode)?;
        let adj = self.graph.adjacency();
        let rows = lin
            .parity_check()
            .rows()
            .iter()
            .map(|p| QuaternaryVector {
                u: adj.vec_mul(p),
                v: p.clone(),
            })
            .collect();
        AdditiveF4Code::new(self.n(), rows)
    }

    /// Error detection through the graph image: a nonzero image must avoid
    /// all codeword differences, a zero image must commute with every
    /// word operator relative to the first codeword.
    pub fn detectable(&self, e: &PauliOperator) -> Result<bool> {
        let cl = self.graph.cl(e)?;
        let v = e.x_part();
        match &self.classical {
            ClassicalCode::Linear(c) => {
                if !cl.is_zero() {
                    Ok(!c.contains(&cl))
                } else {
                    Ok(c.generator().rows().iter().all(|g| !v.dot(g)))
                }
            }
            ClassicalCode::Set(s) => {
                let words = s.words();
                if !cl.is_zero() {
                    let hit = words
                        .iter()
                        .enumerate()
                        .any(|(i, a)| words[i + 1..].iter().any(|b| (a ^ b) == cl));
                    Ok(!hit)
                } else {
                    let c0 = &words[0];
                    Ok(words.iter().all(|c| !v.dot(&(c ^ c0))))
                }
            }
        }
    }

    /// Nontrivial error that acts trivially on the code: zero graph image
    /// and commuting with every word operator.
    pub fn is_degenerate_error(&self, e: &PauliOperator) -> Result<bool> {
        Ok(!e.is_identity() && self.graph.cl(e)?.is_zero() && self.detectable(e)?)
    }

    /// The standard-form code obtained after local complementation at `a`:
    /// the graph becomes `G * a` and each codeword `c` becomes `c + c_a r_a`.
    pub fn local_complement(&self, a: usize) -> Result<Self> {
        let graph = self.graph.local_complement(a)?;
        let classical = self.classical.shear(a, self.graph.row(a));
        Ok(CwsCode { graph, classical })
    }
}

pub fn cws_stabilizer(q: &CwsCode) -> Result<AdditiveF4Code> {
    q.stabilizer()
}

pub fn cws_detectable(q: &CwsCode, e: &PauliOperator) -> Result<bool> {
    q.detectable(e)
}

/// The word operator `Z^c` as a Pauli operator.
pub fn word_operator(c: &BinaryVector) -> PauliOperator {
    PauliOperator::z_type(c)
}
