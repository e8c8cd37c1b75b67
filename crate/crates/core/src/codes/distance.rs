use std::collections::HashSet;

use crate::algebra::{BinaryVector, RowBasis};
use crate::codes::additive::AdditiveF4Code;
use crate::codes::classical::ClassicalCode;
use crate::codes::cws::CwsCode;
use crate::codes::sweep::{sweep, ErrorModel, Hit, SweepOutcome};
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::pauli::PauliOperator;

fn check_len(n: usize) -> Result<()> {
    if n > 128 {
        return Err(Error::TooLarge(format!("{n} qubits exceeds the 128-qubit enumeration limit")));
    }
    Ok(())
}

fn to_pauli(n: usize, (v, u): (u128, u128)) -> PauliOperator {
    PauliOperator::new(BinaryVector::from_u128(n, v), BinaryVector::from_u128(n, u)).expect("equal lengths")
}

fn params(n: usize, k: f64, out: SweepOutcome, single: bool) -> CodeParams {
    CodeParams {
        n,
        k,
        d: out.distance,
        pure: single || out.low_stabilizer.is_none(),
        witness: out.witness.map(|w| to_pauli(n, w)),
    }
}

fn stabilizer_hit(single: bool) -> Hit {
    if single {
        Hit::Target
    } else {
        Hit::Stabilizer
    }
}

/// Syndromes against an independent generating set of `C`; membership in
/// `C` is decided against a reduced basis.
struct AdditiveModel {
    n: usize,
    /// `(u, v)` masks of the basis rows.
    rows: Vec<(u128, u128)>,
    basis: RowBasis,
    single: bool,
}

impl ErrorModel for AdditiveModel {
    fn contributions(&self, pos: usize) -> [u128; 3] {
        let mut z = 0;
        let mut x = 0;
        for (j, &(u, v)) in self.rows.iter().enumerate() {
            z |= (v >> pos & 1) << j;
            x |= (u >> pos & 1) << j;
        }
        [z, x, z ^ x]
    }

    fn passes(&self, sig: u128) -> bool {
        sig == 0
    }

    fn classify(&self, _sig: u128, v: u128, u: u128) -> Hit {
        let mut e = BinaryVector::zeros(2 * self.n);
        for i in 0..self.n {
            e.set(i, u >> i & 1 == 1);
            e.set(self.n + i, v >> i & 1 == 1);
        }
        match (self.basis.contains(&e), self.single) {
            (true, s) => stabilizer_hit(s),
            (false, true) => Hit::Ignore,
            (false, false) => Hit::Target,
        }
    }
}

/// Distance as the minimum weight of `C⊥ \ C`. For a code of full rank
/// (a stabilizer state) the minimum weight of `C` itself is reported and
/// the code counts as pure.
pub fn additive_distance(c: &AdditiveF4Code, cap: Option<usize>) -> Result<CodeParams> {
    let n = c.n();
    check_len(n)?;
    if !c.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let basis = c.basis();
    let rank = basis.rank();
    if rank > 128 {
        return Err(Error::TooLarge(format!("rank {rank} exceeds 128 syndrome bits")));
    }
    let rows = basis
        .basis()
        .map(|r| {
            let mut u = 0u128;
            let mut v = 0u128;
            for i in r.ones_iter() {
                if i < n {
                    u |= 1 << i;
                } else {
                    v |= 1 << (i - n);
                }
            }
            (u, v)
        })
        .collect();
    let single = rank == n;
    let model = AdditiveModel {
        n,
        rows,
        basis,
        single,
    };
    let out = sweep(&model, n, cap.unwrap_or(n));
    Ok(params(n, (n - rank) as f64, out, single))
}

/// Filters on `H · Cl(e) = 0`, i.e. graph images inside the classical code.
struct CwsLinearModel {
    graph_rows: Vec<u128>,
    /// Parity-check syndromes of `e_p` and of `r_p`.
    columns: Vec<(u128, u128)>,
    generators: Vec<u128>,
    single: bool,
}

impl ErrorModel for CwsLinearModel {
    fn contributions(&self, pos: usize) -> [u128; 3] {
        let (z, x) = self.columns[pos];
        [z, x, z ^ x]
    }

    fn passes(&self, sig: u128) -> bool {
        sig == 0
    }

    fn classify(&self, _sig: u128, v: u128, u: u128) -> Hit {
        let cl = (0..self.graph_rows.len())
            .filter(|&p| v >> p & 1 == 1)
            .fold(u, |acc, p| acc ^ self.graph_rows[p]);
        if cl != 0 || self.generators.iter().any(|g| (v & g).count_ones() % 2 == 1) {
            Hit::Target
        } else {
            stabilizer_hit(self.single)
        }
    }
}

/// The signature is the graph image itself; it passes when it is zero or a
/// difference of two codewords.
struct CwsSetModel {
    graph_rows: Vec<u128>,
    differences: HashSet<u128>,
    /// Codewords relative to the first one.
    shifted: Vec<u128>,
    single: bool,
}

impl ErrorModel for CwsSetModel {
    fn contributions(&self, pos: usize) -> [u128; 3] {
        let z = 1u128 << pos;
        let x = self.graph_rows[pos];
        [z, x, z ^ x]
    }

    fn passes(&self, sig: u128) -> bool {
        sig == 0 || self.differences.contains(&sig)
    }

    fn classify(&self, sig: u128, v: u128, _u: u128) -> Hit {
        if sig != 0 || self.shifted.iter().any(|c| (v & c).count_ones() % 2 == 1) {
            Hit::Target
        } else {
            stabilizer_hit(self.single)
        }
    }
}

/// Distance of a CWS code as the minimum weight of an undetectable error,
/// enumerated directly from the graph image. A code with a single codeword
/// reports the distance of its stabilizer state and counts as pure.
pub fn cws_distance(q: &CwsCode, cap: Option<usize>) -> Result<CodeParams> {
    let n = q.n();
    check_len(n)?;
    let graph_rows = q.graph().rows_u128()?;
    let single = q.classical().is_single_word();
    let cap = cap.unwrap_or(n);
    let out = match q.classical() {
        ClassicalCode::Linear(c) => {
            let h = c.parity_check();
            if h.num_rows() > 128 {
                return Err(Error::TooLarge(format!("{} parity checks exceed 128", h.num_rows())));
            }
            let syndrome = |x: u128| -> u128 {
                h.rows()
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| (r.to_u128() & x).count_ones() % 2 == 1)
                    .fold(0, |acc, (j, _)| acc | 1 << j)
            };
            let columns = (0..n).map(|p| (syndrome(1 << p), syndrome(graph_rows[p]))).collect();
            let model = CwsLinearModel {
                graph_rows,
                columns,
                generators: c.generator().rows().iter().map(|g| g.to_u128()).collect(),
                single,
            };
            sweep(&model, n, cap)
        }
        ClassicalCode::Set(s) => {
            let words: Vec<u128> = s.words().iter().map(|w| w.to_u128()).collect();
            let differences = words
                .iter()
                .enumerate()
                .flat_map(|(i, a)| words[i + 1..].iter().map(move |b| a ^ b))
                .collect();
            let model = CwsSetModel {
                graph_rows,
                differences,
                shifted: words.iter().map(|c| c ^ words[0]).collect(),
                single,
            };
            sweep(&model, n, cap)
        }
    };
    Ok(params(n, q.k(), out, single))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::classical::{BinaryCodeSet, BinaryLinearCode};
    use crate::graphs::Graph;
    use crate::params::Distance;

    fn set_code(g: Graph, words: &[&str]) -> CwsCode {
        CwsCode::new(g, ClassicalCode::Set(BinaryCodeSet::from_strs(words).unwrap())).unwrap()
    }

    #[test]
    fn five_qubit_code_both_routes() {
        let q = set_code(Graph::ring(5).unwrap(), &["00000", "11111"]);
        let p = cws_distance(&q, None).unwrap();
        assert_eq!((p.d, p.pure, p.k), (Distance::Exact(3), true, 1.0));
        assert!(!q.detectable(p.witness.as_ref().unwrap()).unwrap());
        let lin = CwsCode::new(q.graph().clone(), ClassicalCode::Linear(q.classical().as_linear().unwrap())).unwrap();
        assert_eq!(cws_distance(&lin, None).unwrap(), p);
        let a = additive_distance(&q.stabilizer().unwrap(), None).unwrap();
        assert_eq!((a.d, a.pure), (Distance::Exact(3), true));
        assert_eq!(a.witness, p.witness);
    }

    #[test]
    fn six_qubit_degenerate_code() {
        let q = set_code(Graph::ring(5).unwrap().with_isolated(1), &["000000", "111110"]);
        let p = cws_distance(&q, None).unwrap();
        assert_eq!((p.d, p.pure), (Distance::Exact(3), false));
        let a = additive_distance(&q.stabilizer().unwrap(), None).unwrap();
        assert_eq!((a.d, a.pure), (Distance::Exact(3), false));
    }

    #[test]
    fn empty_code_and_states() {
        let empty = AdditiveF4Code::new(1, vec![]).unwrap();
        let p = additive_distance(&empty, None).unwrap();
        assert_eq!((p.d, p.k), (Distance::Exact(1), 1.0));
        let ring = Graph::ring(5).unwrap();
        let state = AdditiveF4Code::from_paulis(5, &ring.generators()).unwrap();
        let s = additive_distance(&state, None).unwrap();
        assert_eq!((s.d, s.pure, s.k), (Distance::Exact(3), true, 0.0));
        let zero = ClassicalCode::Linear(BinaryLinearCode::from_generators(5, vec![]).unwrap());
        let c = cws_distance(&CwsCode::new(ring, zero).unwrap(), None).unwrap();
        assert_eq!((c.d, c.pure), (Distance::Exact(3), true));
    }

    #[test]
    fn cap_gives_lower_bound() {
        let q = set_code(Graph::ring(5).unwrap(), &["00000", "11111"]);
        let p = cws_distance(&q, Some(2)).unwrap();
        assert_eq!(p.d, Distance::AtLeast(3));
        assert!(p.witness.is_none());
        let nonadditive = AdditiveF4Code::from_paulis(2, &["XX".parse().unwrap(), "ZI".parse().unwrap()]).unwrap();
        assert_eq!(additive_distance(&nonadditive, None), Err(Error::NotSelfOrthogonal));
    }
}
