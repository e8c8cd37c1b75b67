#![allow(dead_code)]

use cws_core::algebra::{BinaryPolynomial, BinaryVector, QuaternaryVector};
use cws_core::codes::{BinaryCodeSet, BinaryLinearCode, ClassicalCode, CwsCode};
use cws_core::graphs::Graph;
use rand::Rng;

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> BinaryVector {
    BinaryVector::from_bools(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_linear<R: Rng>(rng: &mut R, n: usize) -> BinaryLinearCode {
    let rows = rng.gen_range(0..=n.min(4));
    BinaryLinearCode::from_generators(n, (0..rows).map(|_| random_vector(rng, n)).collect()).unwrap()
}

pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> BinaryCodeSet {
    let size = rng.gen_range(1..=4);
    let mut words: Vec<BinaryVector> = Vec::new();
    while words.len() < size {
        let w = random_vector(rng, n);
        if !words.contains(&w) {
            words.push(w);
        }
    }
    BinaryCodeSet::new(n, words).unwrap()
}

pub fn random_cws<R: Rng>(rng: &mut R, n: usize, linear: bool) -> CwsCode {
    let g = random_graph(rng, n, 0.4);
    let c = if linear {
        ClassicalCode::Linear(random_linear(rng, n))
    } else {
        ClassicalCode::Set(random_set(rng, n))
    };
    CwsCode::new(g, c).unwrap()
}

pub fn random_quaternary<R: Rng>(rng: &mut R, n: usize) -> QuaternaryVector {
    QuaternaryVector {
        u: random_vector(rng, n),
        v: random_vector(rng, n),
    }
}

pub fn random_poly<R: Rng>(rng: &mut R, max_len: usize) -> BinaryPolynomial {
    let len = rng.gen_range(0..=max_len);
    BinaryPolynomial::from_exponents((0..len).filter(|_| rng.gen_bool(0.5)))
}

/// Calls `f` on every quaternary vector of length `n` and weight `1..=w`.
pub fn for_each_error(n: usize, w: usize, f: &mut dyn FnMut(&QuaternaryVector)) {
    fn rec(n: usize, w: usize, start: usize, e: &mut QuaternaryVector, depth: usize, f: &mut dyn FnMut(&QuaternaryVector)) {
        if depth > 0 {
            f(e);
        }
        if depth == w {
            return;
        }
        for pos in start..n {
            for (u, v) in [(true, false), (false, true), (true, true)] {
                e.u.set(pos, u);
                e.v.set(pos, v);
                rec(n, w, pos + 1, e, depth + 1, f);
            }
            e.u.set(pos, false);
            e.v.set(pos, false);
        }
    }
    let mut e = QuaternaryVector::zeros(n);
    rec(n, w, 0, &mut e, 0, f);
}

/// Membership in the trace dual by direct products with every row.
pub fn in_dual(rows: &[QuaternaryVector], e: &QuaternaryVector) -> bool {
    rows.iter().all(|r| !r.trace_inner_product(e).unwrap())
}
