//! Single-generator cyclic additive codes `g(x) = p(x) [ω + r(x)]`.

mod code;
mod families;
mod sieve;

pub use code::{
    check_from_generator, check_orthogonality_poly, cyclic_build, generator_from_check, CyclicQuantumCode,
    Orthogonality,
};
pub use families::{
    bch_designed_search, generator_pattern, pattern_cyclic_code, pauli_cyclic_code, prime_set, repetition_check,
    repetition_family, toric_family, toric_pattern, FamilyResult, RepetitionRow, REPETITION_TABLE,
};
pub use sieve::{
    admits_symmetric_reduction, gv_sieve_search, solve_r_for_error, symmetric_representative, SieveReport,
    GENERAL_FAMILY_MAX_DEGREE, SYMMETRIC_FAMILY_MAX_BITS,
};
