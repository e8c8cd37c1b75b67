//! Fixed instances shared by the benchmarks.

use cws_core::cyclic::{generator_from_check, toric_family, CyclicQuantumCode, REPETITION_TABLE};
use cws_core::{BinaryCodeSet, BinaryPolynomial, ClassicalCode, CwsCode, Graph};

/// Ring of five with the repetition code.
pub fn five_qubit() -> CwsCode {
    let c = BinaryCodeSet::from_strs(&["00000", "11111"]).expect("valid words");
    CwsCode::new(Graph::ring(5).expect("ring"), ClassicalCode::Set(c)).expect("matching lengths")
}

/// The `[[21,15,3]]` cyclic code on the circulant with offsets 1, 4, 17, 20.
pub fn code_21() -> CyclicQuantumCode {
    let q: BinaryPolynomial = "1110101".parse().expect("coefficients");
    let p = generator_from_check(21, &q).expect("divides x^21 - 1");
    CyclicQuantumCode::new(21, p, BinaryPolynomial::from_exponents([1, 4, 17, 20])).expect("self-orthogonal")
}

pub fn toric(t: usize) -> CyclicQuantumCode {
    toric_family(t).expect("positive t")
}

/// The repetition-table row with `n` qubits.
pub fn repetition_row(n: usize) -> CyclicQuantumCode {
    REPETITION_TABLE
        .iter()
        .find(|r| r.n == n)
        .expect("listed length")
        .build()
        .expect("valid row")
}
