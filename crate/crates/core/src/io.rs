//! JSON descriptors for graphs and codes. Unknown fields are ignored, so
//! emitted descriptors may carry extra annotations.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{BinaryPolynomial, BinaryVector};
use crate::codes::{additive_distance, cws_distance, AdditiveF4Code, BinaryCodeSet, BinaryLinearCode, ClassicalCode, CwsCode};
use crate::cyclic::CyclicQuantumCode;
use crate::error::{Error, Result};
use crate::graphs::{Graph, LatticeSpec};
use crate::params::CodeParams;
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphJson {
    Adjacency {
        n: usize,
        adjacency: Vec<String>,
    },
    Kind {
        n: usize,
        kind: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        offsets: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lx: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ly: Option<usize>,
    },
}

fn square_side(n: usize) -> Result<usize> {
    let l = (n as f64).sqrt().round() as usize;
    if l * l != n {
        return Err(Error::Parse(format!("{n} vertices do not form a square lattice; give lx and ly")));
    }
    Ok(l)
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            GraphJson::Adjacency { n, adjacency } => {
                let g = Graph::from_rows(adjacency)?;
                if g.n() != *n {
                    return Err(Error::LengthMismatch(g.n(), *n));
                }
                Ok(g)
            }
            GraphJson::Kind { n, kind, offsets, lx, ly } => {
                let dims = || -> Result<(usize, usize)> {
                    match (lx, ly) {
                        (Some(x), Some(y)) if x * y == *n => Ok((*x, *y)),
                        (Some(_), Some(_)) => Err(Error::Parse(format!("lx * ly differs from n = {n}"))),
                        _ => square_side(*n).map(|l| (l, l)),
                    }
                };
                let spec = match kind.as_str() {
                    "ring" => LatticeSpec::Ring { n: *n },
                    "edgeless" => LatticeSpec::Edgeless { n: *n },
                    "circulant" => LatticeSpec::Circulant {
                        n: *n,
                        offsets: offsets.clone(),
                    },
                    "square-torus" => {
                        let (lx, ly) = dims()?;
                        LatticeSpec::SquareTorus { lx, ly }
                    }
                    "triangular-torus" => {
                        let (lx, ly) = dims()?;
                        LatticeSpec::TriangularTorus { lx, ly }
                    }
                    "square-fragment" => {
                        let (lx, ly) = dims()?;
                        LatticeSpec::SquareFragment { lx, ly }
                    }
                    other => return Err(Error::Parse(format!("unknown graph kind {other:?}"))),
                };
                spec.build()
            }
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson::Adjacency {
            n: g.n(),
            adjacency: g.adjacency().rows().iter().map(|r| r.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassicalJson {
    Generators { generators: Vec<String> },
    Codewords { codewords: Vec<String> },
    CyclicCheck { cyclic_check_poly: String },
}

impl ClassicalJson {
    pub fn to_code(&self, n: usize) -> Result<ClassicalCode> {
        let vectors = |words: &[String]| -> Result<Vec<BinaryVector>> {
            words
                .iter()
                .map(|w| {
                    let v: BinaryVector = w.parse()?;
                    if v.len() != n {
                        return Err(Error::LengthMismatch(v.len(), n));
                    }
                    Ok(v)
                })
                .collect()
        };
        match self {
            ClassicalJson::Generators { generators } => {
                Ok(ClassicalCode::Linear(BinaryLinearCode::from_generators(n, vectors(generators)?)?))
            }
            ClassicalJson::Codewords { codewords } => Ok(ClassicalCode::Set(BinaryCodeSet::new(n, vectors(codewords)?)?)),
            ClassicalJson::CyclicCheck { cyclic_check_poly } => {
                let p: BinaryPolynomial = cyclic_check_poly.parse()?;
                Ok(ClassicalCode::Linear(BinaryLinearCode::cyclic_from_check(n, &p)?))
            }
        }
    }

    pub fn from_code(c: &ClassicalCode) -> Self {
        match c {
            ClassicalCode::Linear(l) => ClassicalJson::Generators {
                generators: l.generator().rows().iter().map(|r| r.to_string()).collect(),
            },
            ClassicalCode::Set(s) => ClassicalJson::Codewords {
                codewords: s.words().iter().map(|w| w.to_string()).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodeJson {
    Cws { graph: GraphJson, classical: ClassicalJson },
    Cyclic { n: usize, p: String, r: String },
    Stabilizer { stabilizers: Vec<String> },
}

/// A code read from a descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedCode {
    Cws(CwsCode),
    Cyclic(CyclicQuantumCode),
    Additive(AdditiveF4Code),
}

impl LoadedCode {
    pub fn n(&self) -> usize {
        match self {
            LoadedCode::Cws(q) => q.n(),
            LoadedCode::Cyclic(c) => c.n(),
            LoadedCode::Additive(a) => a.n(),
        }
    }

    pub fn distance(&self, cap: Option<usize>) -> Result<CodeParams> {
        match self {
            LoadedCode::Cws(q) => cws_distance(q, cap),
            LoadedCode::Cyclic(c) => c.distance(cap),
            LoadedCode::Additive(a) => additive_distance(a, cap),
        }
    }

    /// The CWS form, when the code has one.
    pub fn as_cws(&self) -> Option<CwsCode> {
        match self {
            LoadedCode::Cws(q) => Some(q.clone()),
            LoadedCode::Cyclic(c) => c.cws(),
            LoadedCode::Additive(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            LoadedCode::Cws(q) => cws_to_json(q),
            LoadedCode::Cyclic(c) => c.to_json(),
            LoadedCode::Additive(a) => json!({
                "stabilizers": a.to_paulis().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
        }
    }
}

impl CodeJson {
    pub fn load(&self) -> Result<LoadedCode> {
        match self {
            CodeJson::Cws { graph, classical } => {
                let g = graph.to_graph()?;
                let c = classical.to_code(g.n())?;
                Ok(LoadedCode::Cws(CwsCode::new(g, c)?))
            }
            CodeJson::Cyclic { n, p, r } => Ok(LoadedCode::Cyclic(CyclicQuantumCode::new(*n, p.parse()?, r.parse()?)?)),
            CodeJson::Stabilizer { stabilizers } => {
                let ops: Vec<PauliOperator> = stabilizers.iter().map(|s| s.parse()).collect::<Result<_>>()?;
                let n = ops.first().map(|o| o.num_qubits()).ok_or_else(|| Error::Parse("no stabilizers".into()))?;
                Ok(LoadedCode::Additive(AdditiveF4Code::from_paulis(n, &ops)?))
            }
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let g: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    g.to_graph()
}

pub fn parse_code(text: &str) -> Result<LoadedCode> {
    let c: CodeJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    c.load()
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson::from_graph(g)).expect("serializable")
}

pub fn cws_to_json(q: &CwsCode) -> serde_json::Value {
    serde_json::to_value(CodeJson::Cws {
        graph: GraphJson::from_graph(q.graph()),
        classical: ClassicalJson::from_code(q.classical()),
    })
    .expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Distance;

    #[test]
    fn graph_forms() {
        let ring = parse_graph(r#"{"n": 5, "kind": "ring"}"#).unwrap();
        assert_eq!(ring, Graph::ring(5).unwrap());
        let adj = parse_graph(r#"{"n": 3, "adjacency": ["011", "101", "110"]}"#).unwrap();
        assert_eq!(adj.num_edges(), 3);
        let circ = parse_graph(r#"{"n": 21, "kind": "circulant", "offsets": [1, 4, 17, 20]}"#).unwrap();
        assert_eq!(circ.regular_degree(), Some(4));
        assert_eq!(parse_graph(r#"{"n": 25, "kind": "square-torus"}"#).unwrap().regular_degree(), Some(4));
        assert!(parse_graph(r#"{"n": 7, "kind": "square-torus"}"#).is_err());
        assert!(parse_graph(r#"{"n": 4, "kind": "mystery"}"#).is_err());
        assert_eq!(parse_graph(&graph_to_json(&circ).to_string()).unwrap(), circ);
    }

    #[test]
    fn code_forms() {
        let five = parse_code(r#"{"graph": {"n": 5, "kind": "ring"}, "classical": {"codewords": ["00000", "11111"]}}"#).unwrap();
        assert_eq!(five.distance(None).unwrap().d, Distance::Exact(3));
        let lin = parse_code(r#"{"graph": {"n": 5, "kind": "ring"}, "classical": {"generators": ["11111"]}}"#).unwrap();
        assert_eq!(parse_code(&lin.to_json().to_string()).unwrap(), lin);
        let cyc = parse_code(r#"{"n": 5, "p": "11", "r": "01001", "label": "x"}"#).unwrap();
        assert!(matches!(cyc, LoadedCode::Cyclic(_)));
        assert_eq!(parse_code(&cyc.to_json().to_string()).unwrap(), cyc);
        let check = parse_code(r#"{"graph": {"n": 5, "kind": "ring"}, "classical": {"cyclic_check_poly": "11"}}"#).unwrap();
        assert_eq!(check.distance(None).unwrap().d, Distance::Exact(3));
        let stab = parse_code(r#"{"stabilizers": ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]}"#).unwrap();
        assert_eq!(stab.distance(None).unwrap().d, Distance::Exact(3));
        assert_eq!(parse_code(&stab.to_json().to_string()).unwrap(), stab);
        assert!(parse_code("{").is_err());
        assert!(parse_code(r#"{"n": 5, "p": "111", "r": "0"}"#).is_err());
    }
}
