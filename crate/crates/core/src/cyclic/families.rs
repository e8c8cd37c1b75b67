//! Named families of cyclic codes and the number-theoretic length sets.

use rayon::prelude::*;

use crate::algebra::{cyclotomic_coset, gcd, multiplicative_order, BinaryPolynomial, QuaternaryVector};
use crate::codes::AdditiveF4Code;
use crate::cyclic::code::{generator_from_check, CyclicQuantumCode};
use crate::cyclic::sieve::symmetric_representative;
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::pauli::{Pauli, PauliOperator};

/// Cyclic toric analog with `n = t^2 + (t+1)^2`, `k = 1`, `d = 2t + 1`,
/// spanned by the shifts of `ZX I^{2t-1} XZ`. The returned `r` is the
/// symmetric zero-set representative; when its constant term is set the
/// circulant graph belongs to the `X <-> Y` swapped code.
pub fn toric_family(t: usize) -> Result<CyclicQuantumCode> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let n = t * t + (t + 1) * (t + 1);
    let p = BinaryPolynomial::from_exponents([0, 1]);
    let q = generator_from_check(n, &p)?;
    // Up to the unit x^t A^{-1}, the pattern is (1 + x)[x^{-1} B A^{-1} + ω]
    // with A = 1 + ... + x^{2t-1} and B = 1 + ... + x^{2t+1}.
    let a = BinaryPolynomial::from_exponents(0..2 * t);
    let b = BinaryPolynomial::from_exponents(0..2 * t + 2);
    let x_inv = BinaryPolynomial::monomial(n - 1);
    let r = (&(&x_inv * &b) * &a.inverse_mod(&q)?).rem(&q)?;
    let r = symmetric_representative(n, &q, &r)?
        .ok_or_else(|| Error::Precondition("no symmetric representative".into()))?;
    CyclicQuantumCode::new(n, p, r)
}

/// The Pauli string `ZX I^{2t-1} XZ`.
pub fn toric_pattern(t: usize) -> String {
    format!("ZX{}XZ", "I".repeat(2 * t - 1))
}

/// Offset at which a pattern is embedded: its unique `X`, else 0.
fn pattern_center(s: &PauliOperator) -> usize {
    let xs: Vec<usize> = (0..s.num_qubits()).filter(|&i| s.letter(i) == Pauli::X).collect();
    match xs.as_slice() {
        [c] => *c,
        _ => 0,
    }
}

/// The pattern placed cyclically in length `n` with its centre at 0.
fn embed(s: &PauliOperator, n: usize) -> Result<QuaternaryVector> {
    let len = s.num_qubits();
    if len > n || len == 0 {
        return Err(Error::InvalidArgument(format!("pattern of length {len} does not fit in {n}")));
    }
    let c = pattern_center(s);
    let mut e = QuaternaryVector::zeros(n);
    for i in 0..len {
        let (v, u) = s.letter(i).bits();
        let pos = (i + n - c) % n;
        e.v.set(pos, v);
        e.u.set(pos, u);
    }
    Ok(e)
}

/// Additive code spanned by the `n` cyclic shifts of `p(x) s(x)`, where `s`
/// is the pattern embedded with its `X` at position 0. Without `p` the
/// shifts of the pattern itself are used (a graph state when the pattern
/// is a graph generator).
pub fn pauli_cyclic_code(pattern: &str, n: usize, p: Option<&BinaryPolynomial>) -> Result<AdditiveF4Code> {
    let s: PauliOperator = pattern.parse()?;
    let e = embed(&s, n)?;
    let g = match p {
        None => e,
        Some(p) => {
            generator_from_check(n, p)?;
            let mul = |x: &crate::algebra::BinaryVector| {
                BinaryPolynomial::mul_mod(p, &BinaryPolynomial::from_vector(x), n).map(|r| r.to_vector(n))
            };
            QuaternaryVector { u: mul(&e.u)?, v: mul(&e.v)? }
        }
    };
    AdditiveF4Code::new(n, (0..n).map(|i| g.rotate(i)).collect())
}

/// The cyclic code `p [ω + r]` whose graph generator is `pattern`: the
/// pattern must hold a single `X` and otherwise only `Z` and `I`.
pub fn pattern_cyclic_code(pattern: &str, n: usize, p: &BinaryPolynomial) -> Result<CyclicQuantumCode> {
    let s: PauliOperator = pattern.parse()?;
    let e = embed(&s, n)?;
    if e.v.weight() != 1 || !e.v.get(0) || e.u.get(0) {
        return Err(Error::InvalidArgument(format!("{pattern} is not a graph generator")));
    }
    CyclicQuantumCode::new(n, p.clone(), BinaryPolynomial::from_vector(&e.u))
}

/// Graph generator `X_0 Z^r` written centred on the `X`, trimmed to the
/// outermost `Z`.
pub fn generator_pattern(n: usize, r: &BinaryPolynomial) -> String {
    let reach = r.exponents().map(|e| e.min(n - e)).max().unwrap_or(0);
    (0..=2 * reach)
        .map(|i| {
            let off = (i + n - reach) % n;
            if i == reach {
                'X'
            } else if r.coeff(off) {
                'Z'
            } else {
                'I'
            }
        })
        .collect()
}

/// One row of the table of codes built from `k` interleaved copies of the
/// length-`m` repetition code, `p = x^k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepetitionRow {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub generator: &'static str,
}

pub const REPETITION_TABLE: [RepetitionRow; 12] = [
    RepetitionRow { m: 3, n: 6, k: 2, d: 2, generator: "ZXZ" },
    RepetitionRow { m: 3, n: 9, k: 3, d: 3, generator: "ZXZ" },
    RepetitionRow { m: 3, n: 12, k: 3, d: 3, generator: "ZXZ" },
    RepetitionRow { m: 5, n: 5, k: 1, d: 3, generator: "ZXZ" },
    RepetitionRow { m: 5, n: 10, k: 2, d: 3, generator: "ZXZ" },
    RepetitionRow { m: 5, n: 15, k: 3, d: 5, generator: "ZIZIIXIIZIZ" },
    RepetitionRow { m: 5, n: 20, k: 4, d: 5, generator: "ZIZZXZZIZ" },
    RepetitionRow { m: 5, n: 25, k: 5, d: 5, generator: "ZIZZXZZIZ" },
    RepetitionRow { m: 7, n: 7, k: 1, d: 3, generator: "ZXZ" },
    RepetitionRow { m: 7, n: 14, k: 2, d: 5, generator: "ZZIXIZZ" },
    RepetitionRow { m: 7, n: 21, k: 3, d: 6, generator: "ZIZZXZZIZ" },
    RepetitionRow { m: 7, n: 28, k: 4, d: 7, generator: "ZIZZIXIZZIZ" },
];

/// `x^k - 1`.
pub fn repetition_check(k: usize) -> BinaryPolynomial {
    BinaryPolynomial::from_exponents([0, k])
}

impl RepetitionRow {
    pub fn build(&self) -> Result<CyclicQuantumCode> {
        pattern_cyclic_code(self.generator, self.n, &repetition_check(self.k))
    }
}

/// Best code found for a repetition-copies instance.
#[derive(Clone, Debug)]
pub struct FamilyResult {
    pub code: CyclicQuantumCode,
    pub params: CodeParams,
    /// Candidates whose distance was computed.
    pub evaluated: usize,
}

/// Multipliers `x -> x^a` that map the ideal of `p` onto itself; they carry
/// a code to an equivalent one (a qubit permutation).
fn ideal_multipliers(n: usize, p: &BinaryPolynomial) -> Result<Vec<usize>> {
    let modulus = BinaryPolynomial::xn_minus_1(n);
    let mut out = Vec::new();
    for a in 2..n {
        if gcd(a, n) != 1 || a > n - a {
            continue;
        }
        let pa = BinaryPolynomial::from_exponents(p.exponents().map(|e| e * a % n));
        if pa.gcd(&modulus) == *p {
            out.push(a);
        }
    }
    Ok(out)
}

/// Searches circulant graphs for `n = k m`, `p = x^k - 1`, in order of
/// degree and then coefficient string, keeping one graph per multiplier
/// class. Stops once `d = m`, the distance of the classical code.
pub fn repetition_family(m: usize, k: usize) -> Result<FamilyResult> {
    if m < 2 || k < 1 {
        return Err(Error::InvalidArgument("need m >= 2 and k >= 1".into()));
    }
    let n = k * m;
    if n > 40 {
        return Err(Error::TooLarge(format!("circulant search on {n} qubits")));
    }
    let p = repetition_check(k);
    let half = n / 2;
    let multipliers = ideal_multipliers(n, &p)?;
    let poly = |idx: u64| {
        BinaryPolynomial::from_exponents(
            (1..=half)
                .filter(|j| idx >> (j - 1) & 1 == 1)
                .flat_map(|j| if 2 * j == n { vec![j] } else { vec![j, n - j] }),
        )
    };
    let text = |r: &BinaryPolynomial| r.to_vector(n).to_string();
    let mut candidates: Vec<(usize, String, BinaryPolynomial)> = (1u64..1 << half)
        .into_par_iter()
        .filter_map(|idx| {
            let r = poly(idx);
            let s = text(&r);
            let canonical = multipliers.iter().all(|&a| {
                let ra = BinaryPolynomial::from_exponents(r.exponents().map(|e| e * a % n));
                s <= text(&ra)
            });
            canonical.then(|| (r.weight(), s, r))
        })
        .collect();
    candidates.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let mut best: Option<(CyclicQuantumCode, CodeParams)> = None;
    let mut evaluated = 0;
    for (deg, _, r) in candidates {
        let best_d = best.as_ref().map_or(0, |b| b.1.d.lower());
        if best_d >= m {
            break;
        }
        // An r-regular graph limits the distance to r + 1.
        if deg < best_d {
            continue;
        }
        let code = CyclicQuantumCode::new(n, p.clone(), r)?;
        let params = code.distance(Some(m))?;
        evaluated += 1;
        if params.d.lower() > best_d {
            best = Some((code, params));
        }
    }
    let (code, params) = best.ok_or_else(|| Error::InvalidArgument("no circulant graph".into()))?;
    Ok(FamilyResult { code, params, evaluated })
}

/// Odd `n <= n_max` whose cyclotomic coset of 1 contains the run `1..=r`
/// with `r >= 4` and does not contain `-1`, labelled with the designed
/// distance `r + 1`.
pub fn bch_designed_search(n_max: usize) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for n in (3..=n_max).step_by(2) {
        let coset = cyclotomic_coset(n, 1)?;
        if coset.contains(&(n - 1)) {
            continue;
        }
        let run = (1..n).take_while(|i| coset.contains(i)).count();
        if run >= 4 {
            out.push((n, run + 1));
        }
    }
    Ok(out)
}

/// `2` together with every `2 < n <= n_max` where 2 has multiplicative
/// order `n - 1`, i.e. `1 + x + ... + x^{n-1}` is irreducible.
pub fn prime_set(n_max: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (n_max >= 2).then_some(2).into_iter().collect();
    out.extend((3..=n_max).filter(|&n| n % 2 == 1 && multiplicative_order(2, n).is_ok_and(|o| o == n - 1)));
    out
}
