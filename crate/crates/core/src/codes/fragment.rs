//! Translation-pattern codes on open square-lattice fragments.

use crate::algebra::BinaryVector;
use crate::codes::classical::{BinaryLinearCode, ClassicalCode};
use crate::codes::cws::CwsCode;
use crate::codes::distance::cws_distance;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::params::{CodeParams, Distance};

/// A pattern inside a `bx x by` box together with the code spanned by all
/// its translations inside the `lx x ly` fragment.
#[derive(Clone, Debug)]
pub struct FragmentCode {
    pub lx: usize,
    pub ly: usize,
    /// Cells `(x, y)` of the pattern relative to the box corner.
    pub pattern: Vec<(usize, usize)>,
    pub code: CwsCode,
    pub params: CodeParams,
}

/// Classical code spanned by the translations of `pattern` that fit in the
/// fragment. Vertices are indexed row-major.
pub fn translation_code(lx: usize, ly: usize, pattern: &[(usize, usize)]) -> Result<BinaryLinearCode> {
    let w = pattern.iter().map(|p| p.0).max().unwrap_or(0) + 1;
    let h = pattern.iter().map(|p| p.1).max().unwrap_or(0) + 1;
    if w > lx || h > ly {
        return Err(Error::InvalidArgument("pattern does not fit in the fragment".into()));
    }
    let rows = (0..=ly - h)
        .flat_map(|dy| (0..=lx - w).map(move |dx| (dx, dy)))
        .map(|(dx, dy)| BinaryVector::from_indices(lx * ly, pattern.iter().map(|&(x, y)| (y + dy) * lx + x + dx)))
        .collect();
    BinaryLinearCode::from_generators(lx * ly, rows)
}

/// Searches patterns inside a `box_size x box_size` box on the `l x l`
/// fragment in order of weight, then lexicographic cell mask, and returns
/// the first code with exactly `[[l^2, k, d]]`. Patterns lighter than `d`
/// are skipped since the classical distance bounds the quantum one.
pub fn square_fragment_search(l: usize, box_size: usize, k: usize, d: usize) -> Result<Option<FragmentCode>> {
    let cells = box_size * box_size;
    if cells > 24 || box_size > l {
        return Err(Error::InvalidArgument(format!("box {box_size} unsupported on a {l}x{l} fragment")));
    }
    let graph = Graph::square_fragment(l, l)?;
    let mut masks: Vec<u32> = (1u32..1 << cells).filter(|m| m.count_ones() as usize >= d).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let pattern: Vec<(usize, usize)> = (0..cells)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i % box_size, i / box_size))
            .collect();
        // Patterns must touch the box's first row and column so that every
        // translation class is visited once.
        if !pattern.iter().any(|p| p.0 == 0) || !pattern.iter().any(|p| p.1 == 0) {
            continue;
        }
        let classical = translation_code(l, l, &pattern)?;
        if classical.k() != k || classical.min_distance()?.unwrap_or(0) < d {
            continue;
        }
        let code = CwsCode::new(graph.clone(), ClassicalCode::Linear(classical))?;
        let params = cws_distance(&code, Some(d))?;
        if params.d == Distance::Exact(d) {
            return Ok(Some(FragmentCode {
                lx: l,
                ly: l,
                pattern,
                code,
                params,
            }));
        }
    }
    Ok(None)
}
