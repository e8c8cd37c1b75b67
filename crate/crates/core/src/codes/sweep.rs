//! Weight-ordered enumeration of phaseless Pauli errors.
//!
//! Errors are visited weight-major, then by lexicographic support, and each
//! error carries a linear signature updated incrementally with a ternary
//! Gray code over the letters of its support. Only errors whose signature
//! passes the model's filter are classified, which keeps the inner loop to
//! one XOR and one comparison.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::params::Distance;

/// Letter indices in enumeration order `Z < X < Y`.
pub(crate) const LETTER_BITS: [(u128, u128); 3] = [(0, 1), (1, 0), (1, 1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Hit {
    Ignore,
    /// Nontrivial element of the code stabilizer.
    Stabilizer,
    /// The sought error (undetectable, or a stabilizer element when looking
    /// for the distance of a stabilizer state).
    Target,
}

pub(crate) trait ErrorModel: Sync {
    /// Signature contributions of `Z`, `X`, `Y` on qubit `pos`.
    fn contributions(&self, pos: usize) -> [u128; 3];
    fn passes(&self, sig: u128) -> bool;
    /// `v` and `u` are the x- and z-parts as bit masks.
    fn classify(&self, sig: u128, v: u128, u: u128) -> Hit;
}

#[derive(Clone, Debug)]
pub(crate) struct SweepOutcome {
    pub distance: Distance,
    /// First target in enumeration order, as `(v, u)` masks.
    pub witness: Option<(u128, u128)>,
    /// Lowest-weight stabilizer element seen below the reported distance.
    pub low_stabilizer: Option<(u128, u128)>,
}

struct UnitResult {
    target: Option<(u128, u128)>,
    stabilizer: Option<(u128, u128)>,
}

struct Stratum<'a, M> {
    model: &'a M,
    contrib: &'a [[u128; 3]],
    w: usize,
}

impl<M: ErrorModel> Stratum<'_, M> {
    fn masks(&self, support: &[usize], letters: &[u8]) -> (u128, u128) {
        support.iter().zip(letters).fold((0, 0), |(v, u), (&p, &l)| {
            let (bv, bu) = LETTER_BITS[l as usize];
            (v | bv << p, u | bu << p)
        })
    }

    /// Gray-code pass over all `3^w` letter assignments on `support`.
    /// Returns whether a target exists and the first stabilizer hit.
    fn scan(&self, support: &[usize], letters: &mut [u8], counter: &mut [u8]) -> (bool, Option<(u128, u128)>) {
        let w = self.w;
        letters.fill(0);
        counter.fill(0);
        let mut sig = support.iter().fold(0u128, |acc, &p| acc ^ self.contrib[p][0]);
        let mut stab = None;
        loop {
            if self.model.passes(sig) {
                let (v, u) = self.masks(support, letters);
                match self.model.classify(sig, v, u) {
                    Hit::Target => return (true, stab),
                    Hit::Stabilizer => {
                        stab.get_or_insert((v, u));
                    }
                    Hit::Ignore => {}
                }
            }
            let mut j = 0;
            while j < w && counter[j] == 2 {
                counter[j] = 0;
                j += 1;
            }
            if j == w {
                return (false, stab);
            }
            counter[j] += 1;
            let a = letters[j] as usize;
            // Z->X toggles Y's contribution, X->Y toggles Z's, Y->Z toggles X's.
            sig ^= self.contrib[support[j]][(a + 2) % 3];
            letters[j] = ((a + 1) % 3) as u8;
        }
    }

    /// Lexicographically first target on `support` (first position most
    /// significant, letters ordered `Z < X < Y`).
    fn first_target(&self, support: &[usize]) -> Option<(u128, u128)> {
        let w = self.w;
        let mut letters = vec![0u8; w];
        loop {
            let sig = support
                .iter()
                .zip(&letters)
                .fold(0u128, |acc, (&p, &l)| acc ^ self.contrib[p][l as usize]);
            if self.model.passes(sig) {
                let (v, u) = self.masks(support, &letters);
                if self.model.classify(sig, v, u) == Hit::Target {
                    return Some((v, u));
                }
            }
            let mut j = w;
            loop {
                if j == 0 {
                    return None;
                }
                j -= 1;
                if letters[j] < 2 {
                    letters[j] += 1;
                    break;
                }
                letters[j] = 0;
            }
        }
    }

    /// All supports beginning with `prefix`, in lexicographic order.
    fn unit(&self, n: usize, prefix: &[usize], index: usize, best: &AtomicUsize) -> UnitResult {
        let w = self.w;
        let mut support: Vec<usize> = prefix.to_vec();
        let start = prefix.last().map_or(0, |&p| p + 1);
        support.extend(start..start + (w - prefix.len()));
        let mut letters = vec![0u8; w];
        let mut counter = vec![0u8; w];
        let mut stabilizer = None;
        loop {
            if best.load(Ordering::Relaxed) < index {
                return UnitResult {
                    target: None,
                    stabilizer,
                };
            }
            let (found, stab) = self.scan(&support, &mut letters, &mut counter);
            if stabilizer.is_none() {
                stabilizer = stab;
            }
            if found {
                best.fetch_min(index, Ordering::Relaxed);
                return UnitResult {
                    target: self.first_target(&support),
                    stabilizer,
                };
            }
            // Advance the free tail of the combination.
            let fixed = prefix.len();
            let mut j = w;
            loop {
                if j == fixed {
                    return UnitResult {
                        target: None,
                        stabilizer,
                    };
                }
                j -= 1;
                if support[j] < n - (w - j) {
                    support[j] += 1;
                    for t in j + 1..w {
                        support[t] = support[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// Runs strata `1..=cap` until one contains a target.
pub(crate) fn sweep<M: ErrorModel>(model: &M, n: usize, cap: usize) -> SweepOutcome {
    assert!(n <= 128, "sweep works on at most 128 qubits");
    let contrib: Vec<[u128; 3]> = (0..n).map(|p| model.contributions(p)).collect();
    debug_assert!(contrib.iter().all(|c| c[2] == c[0] ^ c[1]), "signature must be linear");
    let mut low_stabilizer = None;
    let top = cap.min(n);
    for w in 1..=top {
        let stratum = Stratum {
            model,
            contrib: &contrib,
            w,
        };
        let prefixes: Vec<Vec<usize>> = if w == 1 {
            (0..n).map(|i| vec![i]).collect()
        } else {
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| vec![i, j]))
                .filter(|p| n - p[1] > w - 2)
                .collect()
        };
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<UnitResult> = prefixes
            .par_iter()
            .enumerate()
            .map(|(i, p)| stratum.unit(n, p, i, &best))
            .collect();
        if let Some(t) = results.iter().find_map(|r| r.target) {
            return SweepOutcome {
                distance: Distance::Exact(w),
                witness: Some(t),
                low_stabilizer,
            };
        }
        if low_stabilizer.is_none() {
            low_stabilizer = results.iter().find_map(|r| r.stabilizer);
        }
    }
    SweepOutcome {
        distance: Distance::AtLeast(top + 1),
        witness: None,
        low_stabilizer,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every error is a target once its weight reaches `t`; used to check
    /// ordering and counting.
    struct Threshold {
        t: u32,
    }

    impl ErrorModel for Threshold {
        fn contributions(&self, _pos: usize) -> [u128; 3] {
            [0; 3]
        }
        fn passes(&self, _sig: u128) -> bool {
            true
        }
        fn classify(&self, _sig: u128, v: u128, u: u128) -> Hit {
            if (v | u).count_ones() >= self.t {
                Hit::Target
            } else {
                Hit::Stabilizer
            }
        }
    }

    #[test]
    fn first_target_is_lexicographic() {
        let out = sweep(&Threshold { t: 3 }, 6, 6);
        assert_eq!(out.distance, Distance::Exact(3));
        // Support {0,1,2}, all Z.
        assert_eq!(out.witness, Some((0, 0b111)));
        assert_eq!(out.low_stabilizer, Some((0, 1)));
        let capped = sweep(&Threshold { t: 5 }, 6, 3);
        assert_eq!(capped.distance, Distance::AtLeast(4));
        assert!(capped.witness.is_none());
    }

    /// Flags one specific error; its signature is the error itself with the
    /// z-part shifted into the upper half.
    struct Single {
        v: u128,
        u: u128,
    }

    impl ErrorModel for Single {
        fn contributions(&self, pos: usize) -> [u128; 3] {
            let z = 1u128 << (pos + 64);
            let x = 1u128 << pos;
            [z, x, z ^ x]
        }
        fn passes(&self, sig: u128) -> bool {
            sig == self.v | self.u << 64
        }
        fn classify(&self, _sig: u128, v: u128, u: u128) -> Hit {
            assert_eq!((v, u), (self.v, self.u));
            Hit::Target
        }
    }

    #[test]
    fn gray_code_reaches_every_error() {
        // Y X at qubits 1, 3 and Z at 4 on five qubits.
        let m = Single {
            v: 0b01010,
            u: 0b10010,
        };
        let out = sweep(&m, 5, 5);
        assert_eq!(out.distance, Distance::Exact(3));
        assert_eq!(out.witness, Some((m.v, m.u)));
    }
}
