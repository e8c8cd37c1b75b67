//! Classical codes, additive GF(4) codes and CWS codes, with exact distance
//! computation and upper bounds.

mod additive;
mod classical;
mod cws;
mod distance;
mod fragment;
pub(crate) mod sweep;
mod upper;

pub use additive::{f4_dual, is_self_orthogonal, AdditiveF4Code};
pub use classical::{binary_distance, BinaryCodeSet, BinaryDistance, BinaryLinearCode, ClassicalCode};
pub use cws::{cws_detectable, cws_stabilizer, word_operator, CwsCode};
pub use distance::{additive_distance, cws_distance};
pub use fragment::{square_fragment_search, translation_code, FragmentCode};
pub use upper::{cws_lc_orbit, max_weight_value, upper_bounds, UpperBounds};
