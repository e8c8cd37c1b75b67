//! Exclusion sieve over the residues `r mod q`: every low-weight error
//! lands in the dual of at most one residue class, so whatever survives
//! gives a code without undetectable errors below the target.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{BinaryPolynomial, BinaryVector, QuaternaryVector};
use crate::cyclic::code::{check_from_generator, check_orthogonality_poly};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// Largest `deg q` for which the unrestricted residue family is searched.
pub const GENERAL_FAMILY_MAX_DEGREE: usize = 28;
/// Largest free-coefficient count of the symmetric family.
pub const SYMMETRIC_FAMILY_MAX_BITS: usize = 30;

/// Residues modulo `q` packed little-endian into a word.
#[derive(Clone, Copy, Debug)]
struct Modulus {
    q: u64,
    deg: u32,
}

impl Modulus {
    fn new(q: &BinaryPolynomial) -> Result<Self> {
        let deg = q.degree().filter(|&d| (1..64).contains(&d)).ok_or_else(|| {
            Error::TooLarge(format!("deg q must lie in 1..64, got {:?}", q.degree()))
        })?;
        Ok(Modulus {
            q: q.to_u64(),
            deg: deg as u32,
        })
    }

    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let top = 1u64 << self.deg;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.q;
            }
        }
        acc
    }

    /// Inverse of a nonzero residue by the extended Euclidean algorithm.
    fn inv(&self, a: u64) -> Option<u64> {
        let deg = |x: u64| 63 - x.leading_zeros() as i32;
        let (mut r0, mut r1) = (self.q, a);
        let (mut s0, mut s1) = (0u64, 1u64);
        while r1 != 0 {
            while r0 != 0 && deg(r0) >= deg(r1) {
                let shift = deg(r0) - deg(r1);
                r0 ^= r1 << shift;
                s0 ^= s1 << shift;
            }
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut s0, &mut s1);
        }
        // r0 = gcd; s0 * a ≡ r0 (mod q), with s0 of degree below deg q.
        (r0 == 1).then_some(s0)
    }

    fn reduce(&self, p: &BinaryPolynomial) -> u64 {
        p.rem(&BinaryPolynomial::from_u64(self.q)).expect("nonzero modulus").to_u64()
    }
}

/// The residues under consideration, indexed by `bits`-bit integers whose
/// bit `j` is a coefficient of the reported polynomial, lowest exponent in
/// bit 0, so bit reversal orders indices like coefficient strings.
#[derive(Clone, Debug)]
enum Family {
    /// Every residue of degree below `deg q`; the index is the residue.
    General { bits: usize },
    /// `r_0 + Σ r_j (x^j + x^{n-j})` for `1 <= j < deg q / 2`. `pivots`
    /// holds an echelon form of the basis residues with their index masks.
    Symmetric { bits: usize, pivots: Vec<(u64, u64)> },
}

impl Family {
    fn bits(&self) -> usize {
        match self {
            Family::General { bits } | Family::Symmetric { bits, .. } => *bits,
        }
    }

    fn symmetric(n: usize, m: &Modulus) -> Result<Self> {
        let bits = m.deg as usize / 2;
        if bits > SYMMETRIC_FAMILY_MAX_BITS {
            return Err(Error::TooLarge(format!("symmetric family with 2^{bits} residues")));
        }
        let mut pivots: Vec<(u64, u64)> = Vec::new();
        for j in 0..bits {
            let b = symmetric_basis(n, j);
            let mut res = m.reduce(&b);
            let mut mask = 1u64 << j;
            for &(pv, pm) in &pivots {
                if res & top_bit(pv) != 0 {
                    res ^= pv;
                    mask ^= pm;
                }
            }
            if res == 0 {
                return Err(Error::Precondition("symmetric residues are dependent modulo q".into()));
            }
            for p in pivots.iter_mut() {
                if p.0 & top_bit(res) != 0 {
                    p.0 ^= res;
                    p.1 ^= mask;
                }
            }
            pivots.push((res, mask));
        }
        Ok(Family::Symmetric { bits, pivots })
    }

    /// Index of residue `s`, if it belongs to the family.
    fn index_of(&self, s: u64) -> Option<u64> {
        match self {
            Family::General { .. } => Some(s),
            Family::Symmetric { pivots, .. } => {
                let mut s = s;
                let mut idx = 0;
                for &(pv, pm) in pivots {
                    if s & top_bit(pv) != 0 {
                        s ^= pv;
                        idx ^= pm;
                    }
                }
                (s == 0).then_some(idx)
            }
        }
    }

    fn polynomial(&self, n: usize, idx: u64) -> BinaryPolynomial {
        match self {
            Family::General { .. } => BinaryPolynomial::from_u64(idx),
            Family::Symmetric { bits, .. } => (0..*bits)
                .filter(|j| idx >> j & 1 == 1)
                .fold(BinaryPolynomial::zero(), |acc, j| &acc + &symmetric_basis(n, j)),
        }
    }
}

fn top_bit(x: u64) -> u64 {
    1u64 << (63 - x.leading_zeros())
}

fn symmetric_basis(n: usize, j: usize) -> BinaryPolynomial {
    if j == 0 {
        BinaryPolynomial::one()
    } else {
        BinaryPolynomial::from_exponents([j, n - j])
    }
}

/// Sort key placing indices in coefficient-string order.
fn lex_key(idx: u64, bits: usize) -> u64 {
    if bits == 0 {
        0
    } else {
        idx.reverse_bits() >> (64 - bits)
    }
}

fn validate_q(n: usize, q: &BinaryPolynomial) -> Result<Modulus> {
    check_from_generator(n, q)?;
    if !q.is_irreducible() {
        return Err(Error::ReducibleGenerator);
    }
    Modulus::new(q)
}

/// `q` is palindromic with `q(1) = 1` and divides `x^n - 1` only once,
/// which forces symmetric residues. A repeated factor (even `n`) leaves
/// room for self-orthogonal residues without a symmetric form.
pub fn admits_symmetric_reduction(n: usize, q: &BinaryPolynomial) -> bool {
    q.is_palindromic()
        && q.eval_one()
        && BinaryPolynomial::xn_minus_1(n)
            .rem(&(q * q))
            .is_ok_and(|r| !r.is_zero())
}

/// Residue `r mod q` with `ũ + r ṽ ≡ 0 (mod q)`, where `ũ(x) = u(x^{n-1})`;
/// exactly the residue for which `e` lies in the dual of the cyclic code.
pub fn solve_r_for_error(n: usize, q: &BinaryPolynomial, e: &QuaternaryVector) -> Result<BinaryPolynomial> {
    if e.len() != n {
        return Err(Error::LengthMismatch(e.len(), n));
    }
    check_from_generator(n, q)?;
    if !q.is_irreducible() {
        return Err(Error::ReducibleGenerator);
    }
    let u = BinaryPolynomial::from_vector(&e.u).negate_exponents(n)?.rem(q)?;
    let v = BinaryPolynomial::from_vector(&e.v).negate_exponents(n)?.rem(q)?;
    match (u.is_zero(), v.is_zero()) {
        (true, true) => Err(Error::Unavoidable),
        (false, true) => Err(Error::NoSolution),
        _ => (&u * &v.inverse_mod(q)?).rem(q),
    }
}

/// The symmetric zero-set polynomial congruent to `r` modulo `q`, when
/// there is one. The family residues are independent for any `q`, since a
/// nonzero difference has degree below `deg q` after a shift.
pub fn symmetric_representative(n: usize, q: &BinaryPolynomial, r: &BinaryPolynomial) -> Result<Option<BinaryPolynomial>> {
    check_from_generator(n, q)?;
    let m = Modulus::new(q)?;
    let family = Family::symmetric(n, &m)?;
    Ok(family.index_of(m.reduce(r)).map(|i| family.polynomial(n, i)))
}

/// Outcome of [`gv_sieve_search`].
#[derive(Clone, Debug, PartialEq)]
pub struct SieveReport {
    pub n: usize,
    pub q: BinaryPolynomial,
    pub d_target: usize,
    /// The symmetric residue family was searched.
    pub symmetric: bool,
    /// Residues in the family that satisfy the orthogonality condition.
    pub residues: u64,
    pub survivors: u64,
    pub excluded: u64,
    /// Surviving `r` with the lexicographically smallest coefficient string.
    pub representative: Option<BinaryPolynomial>,
    /// An error below the target lying in the dual for every `r`.
    pub unavoidable: Option<PauliOperator>,
    /// Errors enumerated (supports through position 0 only).
    pub errors_checked: u64,
}

impl SieveReport {
    pub fn feasible(&self) -> bool {
        self.unavoidable.is_none() && self.survivors > 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "q": self.q.to_string(),
            "d_target": self.d_target,
            "symmetric": self.symmetric,
            "residues": self.residues,
            "survivors": self.survivors,
            "excluded": self.excluded,
            "representative": self.representative.as_ref().map(|r| r.to_string()),
            "unavoidable": self.unavoidable.as_ref().map(|e| e.to_string()),
            "errors_checked": self.errors_checked,
        })
    }
}

struct Bitset(Vec<AtomicU64>);

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset((0..(1usize << bits).div_ceil(64)).map(|_| AtomicU64::new(0)).collect())
    }

    fn set(&self, i: u64) {
        self.0[(i / 64) as usize].fetch_or(1 << (i % 64), Ordering::Relaxed);
    }

    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize].load(Ordering::Relaxed) >> (i % 64) & 1 == 1
    }
}

/// Enumerates the quaternary errors of weight below `d_target` whose
/// support contains position 0 (a cyclic shift excludes the same residue)
/// and marks the residue each one forces. With `symmetric_only`, or when
/// `q` is palindromic with `q(1) = 1` (where only symmetric residues can be
/// self-orthogonal), the symmetric zero-set family is searched.
pub fn gv_sieve_search(n: usize, q: &BinaryPolynomial, d_target: usize, symmetric_only: bool) -> Result<SieveReport> {
    if n > 128 {
        return Err(Error::TooLarge(format!("{n} qubits")));
    }
    let m = validate_q(n, q)?;
    let forced = admits_symmetric_reduction(n, q);
    if symmetric_only && !forced {
        return Err(Error::Precondition(
            "symmetric search needs a palindromic q with q(1) = 1 dividing x^n - 1 once".into(),
        ));
    }
    let family = if forced {
        Family::symmetric(n, &m)?
    } else {
        if m.deg as usize > GENERAL_FAMILY_MAX_DEGREE {
            return Err(Error::TooLarge(format!("2^{} residues", m.deg)));
        }
        Family::General { bits: m.deg as usize }
    };
    let bits = family.bits();
    let p = check_from_generator(n, q)?;
    let valid = valid_residues(n, &p, &family)?;

    // x^{-j} mod q for each position.
    let t: Vec<u64> = (0..n).map(|j| m.reduce(&BinaryPolynomial::monomial((n - j) % n))).collect();
    let excluded = Bitset::new(bits);
    let unavoidable: std::sync::Mutex<Option<(u128, u128)>> = std::sync::Mutex::new(None);
    let found_unavoidable = AtomicBool::new(false);
    let checked = AtomicU64::new(0);

    let mark = |mask_v: u128, mask_u: u128, vt: u64, ut: u64| {
        if vt == 0 {
            if ut == 0 && mask_v != 0 {
                found_unavoidable.store(true, Ordering::Relaxed);
                let mut slot = unavoidable.lock().expect("lock");
                let cand = (mask_v, mask_u);
                if slot.is_none_or(|cur| error_order(n, cand) < error_order(n, cur)) {
                    *slot = Some(cand);
                }
            }
            return;
        }
        let r = m.mul(ut, m.inv(vt).expect("q irreducible"));
        if let Some(idx) = family.index_of(r) {
            excluded.set(idx);
        }
    };

    for w in 1..d_target.min(n + 1) {
        let seconds: Vec<usize> = if w == 1 { vec![0] } else { (1..n).collect() };
        seconds.par_iter().for_each(|&second| {
            let mut support = vec![0usize];
            if w > 1 {
                support.push(second);
            }
            let mut local = 0u64;
            for_each_extension(n, w, &mut support, &mut |s| {
                local += enumerate_letters(s, &t, &mark);
            });
            checked.fetch_add(local, Ordering::Relaxed);
        });
    }

    let mut survivors = 0u64;
    let mut excluded_count = 0u64;
    let mut best: Option<u64> = None;
    for idx in 0..(1u64 << bits) {
        if !valid(idx) {
            continue;
        }
        if excluded.get(idx) {
            excluded_count += 1;
        } else {
            survivors += 1;
            if best.is_none_or(|b| lex_key(idx, bits) < lex_key(b, bits)) {
                best = Some(idx);
            }
        }
    }
    let unavoidable = unavoidable.into_inner().expect("lock").map(|(v, u)| {
        PauliOperator::new(BinaryVector::from_u128(n, v), BinaryVector::from_u128(n, u)).expect("lengths")
    });
    Ok(SieveReport {
        n,
        q: q.clone(),
        d_target,
        symmetric: forced,
        residues: survivors + excluded_count,
        survivors,
        excluded: excluded_count,
        representative: best.map(|i| family.polynomial(n, i)),
        unavoidable,
        errors_checked: checked.into_inner(),
    })
}

/// Deterministic order on `(v, u)` masks: weight, then support, then
/// letters with Z < X < Y.
fn error_order(n: usize, (v, u): (u128, u128)) -> (u32, Vec<usize>, Vec<u8>) {
    let s = v | u;
    let support: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
    let letters = support
        .iter()
        .map(|&i| match (v >> i & 1, u >> i & 1) {
            (0, _) => 0,
            (1, 0) => 1,
            _ => 2,
        })
        .collect();
    (s.count_ones(), support, letters)
}

/// Calls `f` for every increasing extension of `support` to `w` positions.
fn for_each_extension(n: usize, w: usize, support: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if support.len() == w {
        f(support);
        return;
    }
    let start = support.last().map_or(0, |&l| l + 1);
    let remaining = w - support.len();
    for pos in start..=n.saturating_sub(remaining) {
        if pos >= n {
            break;
        }
        support.push(pos);
        for_each_extension(n, w, support, f);
        support.pop();
    }
}

/// All `3^w` letter assignments on a support; returns how many were seen.
fn enumerate_letters(support: &[usize], t: &[u64], mark: &(dyn Fn(u128, u128, u64, u64) + Sync)) -> u64 {
    let w = support.len();
    let total = 3u64.pow(w as u32);
    for code in 0..total {
        let (mut mv, mut mu, mut vt, mut ut) = (0u128, 0u128, 0u64, 0u64);
        let mut c = code;
        for &pos in support {
            let letter = c % 3;
            c /= 3;
            // 0 = Z, 1 = X, 2 = Y.
            if letter != 1 {
                mu |= 1 << pos;
                ut ^= t[pos];
            }
            if letter != 0 {
                mv |= 1 << pos;
                vt ^= t[pos];
            }
        }
        if mv != 0 {
            mark(mv, mu, vt, ut);
        }
    }
    total
}

/// Predicate selecting the family indices whose residue satisfies the
/// orthogonality condition. The condition is GF(2)-linear in `r`.
fn valid_residues(n: usize, p: &BinaryPolynomial, family: &Family) -> Result<Box<dyn Fn(u64) -> bool + Sync>> {
    let zero = BinaryPolynomial::zero();
    if check_orthogonality_poly(n, p, &zero)?.guaranteed {
        return Ok(Box::new(|_| true));
    }
    let bits = family.bits();
    let mut images = Vec::with_capacity(bits);
    for j in 0..bits {
        let r = family.polynomial(n, 1 << j);
        let pp = BinaryPolynomial::mul_mod(p, &p.negate_exponents(n)?, n)?;
        let img = BinaryPolynomial::mul_mod(&pp, &(&r + &r.negate_exponents(n)?), n)?;
        images.push(img.to_vector(n).to_u128());
    }
    if images.iter().all(|&i| i == 0) {
        return Ok(Box::new(|_| true));
    }
    Ok(Box::new(move |idx| {
        images
            .iter()
            .enumerate()
            .filter(|(j, _)| idx >> j & 1 == 1)
            .fold(0u128, |acc, (_, &i)| acc ^ i)
            == 0
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::code::CyclicQuantumCode;
    use crate::params::Distance;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn residue_arithmetic() {
        let m = Modulus::new(&poly("1101")).unwrap();
        for a in 1..8 {
            let inv = m.inv(a).unwrap();
            assert_eq!(m.mul(a, inv), 1);
        }
        assert_eq!(m.inv(0b10), Some(0b101));
    }

    #[test]
    fn solve_examples() {
        let q = poly("1101");
        let v = BinaryVector::from_indices(7, [2]);
        let zero = QuaternaryVector { u: BinaryVector::zeros(7), v: v.clone() };
        assert!(solve_r_for_error(7, &q, &zero).unwrap().is_zero());
        let same = QuaternaryVector { u: v.clone(), v };
        assert!(solve_r_for_error(7, &q, &same).unwrap().is_one());
        let z = QuaternaryVector { u: BinaryVector::from_indices(7, [0]), v: BinaryVector::zeros(7) };
        assert_eq!(solve_r_for_error(7, &q, &z), Err(Error::NoSolution));
        let word = BinaryPolynomial::mul_mod(&q, &poly("1"), 7).unwrap().negate_exponents(7).unwrap().to_vector(7);
        let both = QuaternaryVector { u: word.clone(), v: word };
        assert_eq!(solve_r_for_error(7, &q, &both), Err(Error::Unavoidable));
        assert_eq!(solve_r_for_error(9, &poly("1001"), &QuaternaryVector::zeros(9)), Err(Error::ReducibleGenerator));
    }

    #[test]
    fn solved_residue_puts_error_in_dual() {
        let q = poly("1101");
        let p = check_from_generator(7, &q).unwrap();
        for mask in 1u32..1 << 14 {
            let e = QuaternaryVector {
                u: BinaryVector::from_u128(7, (mask & 127) as u128),
                v: BinaryVector::from_u128(7, (mask >> 7) as u128),
            };
            let Ok(r) = solve_r_for_error(7, &q, &e) else { continue };
            let in_dual = |r: &BinaryPolynomial| {
                let c = CyclicQuantumCode::new(7, p.clone(), r.clone()).unwrap();
                c.additive().rows().iter().all(|row| !row.trace_inner_product(&e).unwrap())
            };
            for s in 0u64..8 {
                let cand = BinaryPolynomial::from_u64(s);
                assert_eq!(in_dual(&cand), cand == r, "mask {mask} residue {s}");
            }
        }
    }

    #[test]
    fn sieve_21() {
        let rep = gv_sieve_search(21, &poly("1110101"), 3, false).unwrap();
        assert!(!rep.symmetric);
        assert_eq!(rep.residues, 64);
        assert!(rep.excluded <= 60 + 2);
        assert!(rep.survivors >= 1);
        let r = rep.representative.unwrap();
        let p = check_from_generator(21, &poly("1110101")).unwrap();
        let c = CyclicQuantumCode::new(21, p, r).unwrap();
        assert_eq!(c.distance(None).unwrap().d, Distance::Exact(3));
    }

    #[test]
    fn sieve_five_qubit_symmetric() {
        let rep = gv_sieve_search(5, &poly("11111"), 3, true).unwrap();
        assert!(rep.symmetric);
        assert_eq!(rep.residues, 4);
        assert_eq!(rep.representative, Some(BinaryPolynomial::from_exponents([1, 4])));
        let rep2 = gv_sieve_search(5, &poly("11111"), 2, true).unwrap();
        assert!(rep2.survivors > 0);
    }

    #[test]
    fn sieve_preconditions() {
        assert_eq!(gv_sieve_search(7, &poly("11"), 3, true).unwrap_err(), Error::Precondition(
            "symmetric search needs a palindromic q with q(1) = 1 dividing x^n - 1 once".into()
        ));
        assert_eq!(gv_sieve_search(9, &poly("1001"), 3, false), Err(Error::ReducibleGenerator));
    }

    #[test]
    fn sieve_thirteen() {
        let q = check_from_generator(13, &poly("11")).unwrap();
        let rep = gv_sieve_search(13, &q, 5, true).unwrap();
        assert!(rep.feasible());
        let c = CyclicQuantumCode::new(13, poly("11"), rep.representative.unwrap()).unwrap();
        assert_eq!(c.distance(None).unwrap().d, Distance::Exact(5));
    }
}
