//! Codeword-stabilized (CWS) quantum codes and single-generator cyclic
//! additive codes: construction, exact distance computation, searches and
//! Gilbert-Varshamov style existence bounds.

pub mod algebra;
pub mod bounds;
pub mod codes;
pub mod cyclic;
pub mod error;
pub mod graphs;
pub mod io;
pub mod params;
pub mod pauli;

pub use algebra::{BinaryMatrix, BinaryPolynomial, BinaryVector, QuaternaryVector};
pub use codes::{AdditiveF4Code, BinaryCodeSet, BinaryLinearCode, ClassicalCode, CwsCode};
pub use error::{Error, Result};
pub use graphs::{Graph, LatticeSpec};
pub use params::{CodeParams, Distance};
pub use pauli::{Pauli, PauliOperator};
