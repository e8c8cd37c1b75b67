use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::codes::classical::binary_distance;
use crate::codes::cws::CwsCode;
use crate::error::{Error, Result};
use crate::graphs::{graph_state_distance, Graph};
use crate::params::Distance;

/// Upper bounds on the distance of a CWS code from its graph and classical
/// code.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperBounds {
    /// Distance of the classical code.
    pub binary_bound: usize,
    /// The classical code has a single word; `binary_bound` is then `n`.
    pub binary_trivial: bool,
    /// Distance of the graph state. Bounds the code distance only when the
    /// code is nondegenerate.
    pub graph_bound: Distance,
    /// Minimum over the explored LC orbit of the largest `d` with
    /// `d <= w_d`, the `d`-th largest generator weight. Needs `K > 1`.
    pub max_weight_bound: Option<usize>,
    /// Minimum generator weight over the orbit members whose transformed
    /// classical code involves every bit. Absent when there is none.
    pub all_bit_bound: Option<usize>,
    /// `r + 1` for an `r`-regular graph.
    pub regular_bound: Option<usize>,
    pub orbit_size: usize,
    pub orbit_truncated: bool,
}

/// Largest `d` with `d <= w_d` for weights sorted in decreasing order.
pub fn max_weight_value(weights: &[usize]) -> usize {
    let mut w = weights.to_vec();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w.iter()
        .enumerate()
        .take_while(|&(i, &wd)| i < wd)
        .count()
}

/// The LC orbit of the code's graph with the classical code carried along.
pub fn cws_lc_orbit(q: &CwsCode, cap: usize) -> Result<(Vec<CwsCode>, bool)> {
    if cap == 0 {
        return Err(Error::InvalidArgument("orbit cap must be at least 1".into()));
    }
    let mut seen: HashSet<Graph> = HashSet::from([q.graph().clone()]);
    let mut members = vec![q.clone()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let cur = members[i].clone();
        for a in 0..cur.n() {
            let next = cur.local_complement(a)?;
            if seen.contains(next.graph()) {
                continue;
            }
            if members.len() == cap {
                return Ok((members, true));
            }
            seen.insert(next.graph().clone());
            queue.push_back(members.len());
            members.push(next);
        }
    }
    Ok((members, false))
}

pub fn upper_bounds(q: &CwsCode, orbit_cap: usize) -> Result<UpperBounds> {
    let bd = binary_distance(q.classical())?;
    let graph_bound = graph_state_distance(q.graph(), None)?;
    let (orbit, orbit_truncated) = cws_lc_orbit(q, orbit_cap)?;
    let multi = !q.classical().is_single_word();
    let max_weight_bound = multi
        .then(|| {
            orbit
                .iter()
                .map(|m| max_weight_value(&m.graph().generator_weights()))
                .min()
        })
        .flatten();
    let all_bit_bound = orbit
        .iter()
        .filter(|m| m.classical().involved_bits().weight() == m.n())
        .filter_map(|m| m.graph().generator_weights().into_iter().min())
        .min();
    Ok(UpperBounds {
        binary_bound: bd.d,
        binary_trivial: bd.trivial,
        graph_bound,
        max_weight_bound,
        all_bit_bound,
        regular_bound: q.graph().regular_degree().map(|r| r + 1),
        orbit_size: orbit.len(),
        orbit_truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::classical::{BinaryCodeSet, ClassicalCode};
    use crate::codes::distance::cws_distance;

    #[test]
    fn max_weight_examples() {
        assert_eq!(max_weight_value(&[3, 3, 3, 3, 3]), 3);
        assert_eq!(max_weight_value(&[5, 1, 1]), 1);
        assert_eq!(max_weight_value(&[4, 4, 2, 2]), 2);
        assert_eq!(max_weight_value(&[]), 0);
    }

    #[test]
    fn five_qubit_bounds() {
        let c = BinaryCodeSet::from_strs(&["00000", "11111"]).unwrap();
        let q = CwsCode::new(Graph::ring(5).unwrap(), ClassicalCode::Set(c)).unwrap();
        let b = upper_bounds(&q, 1000).unwrap();
        assert_eq!(b.binary_bound, 5);
        assert_eq!(b.max_weight_bound, Some(3));
        assert_eq!(b.regular_bound, Some(3));
        assert_eq!(b.graph_bound, Distance::Exact(3));
        let d = cws_distance(&q, None).unwrap().d.exact().unwrap();
        assert!(d <= b.max_weight_bound.unwrap() && d <= b.all_bit_bound.unwrap() && d <= b.binary_bound);
    }

    #[test]
    fn regular_bounds() {
        let c = BinaryCodeSet::from_strs(&["000000", "111111"]).unwrap();
        let q = CwsCode::new(Graph::ring(6).unwrap(), ClassicalCode::Set(c)).unwrap();
        assert_eq!(upper_bounds(&q, 10).unwrap().regular_bound, Some(3));
        let t = Graph::torus(5, 5, false).unwrap();
        assert_eq!(t.regular_degree().map(|r| r + 1), Some(5));
    }
}
