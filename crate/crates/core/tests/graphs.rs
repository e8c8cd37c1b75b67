mod common;

use cws_core::algebra::BinaryVector;
use cws_core::graphs::{graph_state_distance, lc_orbit, Graph};
use cws_core::pauli::PauliOperator;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliOperator {
    PauliOperator::new(common::random_vector(rng, n), common::random_vector(rng, n)).unwrap()
}

proptest! {
    #[test]
    fn generators_commute(seed in any::<u64>(), n in 1usize..=16) {
        let g = common::random_graph(&mut rng(seed), n, 0.5);
        let gens = g.generators();
        for a in &gens {
            for b in &gens {
                prop_assert!(a.commutes(b).unwrap());
            }
        }
        prop_assert!(g.adjacency().is_symmetric());
        prop_assert!((0..n).all(|i| !g.has_edge(i, i)));
    }

    #[test]
    fn graph_image_is_linear(seed in any::<u64>(), n in 1usize..=20) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, 0.4);
        let (a, b) = (pauli(&mut r, n), pauli(&mut r, n));
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(g.cl(&ab).unwrap(), &g.cl(&a).unwrap() ^ &g.cl(&b).unwrap());
    }

    #[test]
    fn zero_image_means_stabilizer_member(seed in any::<u64>(), n in 1usize..=12) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, 0.4);
        let e = if r.gen_bool(0.5) {
            g.stabilizer_element(&common::random_vector(&mut r, n))
        } else {
            pauli(&mut r, n)
        };
        let member = g.stabilizer_element(e.x_part()).equal_up_to_phase(&e);
        prop_assert_eq!(g.cl(&e).unwrap().is_zero(), member);
    }

    #[test]
    fn distance_ignores_relabeling(seed in any::<u64>(), n in 2usize..=12) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, 0.4);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(graph_state_distance(&g, None).unwrap(), graph_state_distance(&h, None).unwrap());
    }

    #[test]
    fn orbit_is_the_same_from_any_member(seed in any::<u64>(), n in 2usize..=7) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        let orbit = lc_orbit(&g, 1 << 20).unwrap();
        prop_assert!(!orbit.truncated);
        let h = orbit.graphs[r.gen_range(0..orbit.graphs.len())].clone();
        let back = lc_orbit(&h, 1 << 20).unwrap();
        prop_assert_eq!(back.graphs.len(), orbit.graphs.len());
        prop_assert!(back.graphs.contains(&g));
    }

    #[test]
    fn local_complement_is_an_involution(seed in any::<u64>(), n in 1usize..=14) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        let a = r.gen_range(0..n);
        prop_assert_eq!(g.local_complement(a).unwrap().local_complement(a).unwrap(), g);
    }
}

#[test]
fn lattice_degrees() {
    assert_eq!(Graph::torus(5, 5, false).unwrap().regular_degree(), Some(4));
    assert_eq!(Graph::torus(6, 6, true).unwrap().regular_degree(), Some(6));
    let frag = Graph::square_fragment(5, 5).unwrap();
    assert_eq!(frag.num_edges(), 2 * 5 * 4);
    assert_eq!(Graph::circulant(21, &[1, 4, 17, 20]).unwrap().regular_degree(), Some(4));
    assert!(Graph::circulant(21, &[1, 4]).is_err());
    assert_eq!(graph_state_distance(&Graph::ring(5).unwrap(), None).unwrap().exact(), Some(3));
    let edgeless = Graph::edgeless(3);
    assert!(edgeless.cl(&PauliOperator::z_type(&BinaryVector::ones(3))).unwrap().weight() == 3);
}
