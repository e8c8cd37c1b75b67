//! Polynomials over GF(2).
//!
//! Coefficients are little-endian: bit `i` is the coefficient of `x^i`. The
//! text form follows the same order, so `"1101001"` is `1 + x + x^3 + x^6`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::{BinaryMatrix, BinaryVector};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    // No trailing zero words; the zero polynomial has no words.
    words: Vec<u64>,
}

fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    let need = src.len() + ws + 1;
    if acc.len() < need {
        acc.resize(need, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        acc[i + ws] ^= w << bs;
        if bs != 0 {
            acc[i + ws + 1] ^= w >> (64 - bs);
        }
    }
}

impl BinaryPolynomial {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        BinaryPolynomial { words }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(k: usize) -> Self {
        Self::from_exponents([k])
    }

    /// Sum of `x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut words = Vec::new();
        for e in exps {
            if words.len() <= e / 64 {
                words.resize(e / 64 + 1, 0);
            }
            words[e / 64] ^= 1u64 << (e % 64);
        }
        Self::from_words(words)
    }

    /// `x^n - 1` (equal to `x^n + 1` over GF(2)).
    pub fn xn_minus_1(n: usize) -> Self {
        Self::from_exponents([0, n])
    }

    pub fn from_vector(v: &BinaryVector) -> Self {
        Self::from_words(v.words().to_vec())
    }

    /// Coefficients `0..n` as a vector; higher terms must already be reduced.
    pub fn to_vector(&self, n: usize) -> BinaryVector {
        debug_assert!(self.degree().is_none_or(|d| d < n));
        BinaryVector::from_indices(n, self.exponents())
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    /// Packs a polynomial of degree < 64.
    pub fn to_u64(&self) -> u64 {
        assert!(self.words.len() <= 1, "polynomial does not fit in 64 bits");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn shl(&self, k: usize) -> Self {
        let mut acc = Vec::new();
        xor_shifted(&mut acc, &self.words, k);
        Self::from_words(acc)
    }

    pub fn derivative(&self) -> Self {
        Self::from_exponents(self.exponents().filter(|e| e % 2 == 1).map(|e| e - 1))
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot: Vec<u64> = Vec::new();
        loop {
            while rem.last() == Some(&0) {
                rem.pop();
            }
            let Some(&top) = rem.last() else { break };
            let dr = (rem.len() - 1) * 64 + 63 - top.leading_zeros() as usize;
            if dr < db {
                break;
            }
            let s = dr - db;
            xor_shifted(&mut rem, &divisor.words, s);
            if quot.len() <= s / 64 {
                quot.resize(s / 64 + 1, 0);
            }
            quot[s / 64] ^= 1u64 << (s % 64);
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// Extended Euclid: returns `(g, s)` with `s * self ≡ g (mod m)`.
    fn ext_gcd_left(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("r1 nonzero");
            let s = &s0 + &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        (r0, s0)
    }

    /// `w` with `self * w ≡ 1 (mod q)`.
    pub fn inverse_mod(&self, q: &Self) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if q.degree() == Some(0) {
            return Ok(Self::zero());
        }
        let v = self.rem(q)?;
        let (g, s) = v.ext_gcd_left(q);
        if !g.is_one() {
            return Err(Error::NotCoprime);
        }
        s.rem(q)
    }

    /// Reduction modulo `x^n - 1` by folding exponents mod `n`.
    pub fn reduce_cyclic(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if self.degree().is_none_or(|d| d < n) {
            return Ok(self.clone());
        }
        Ok(Self::from_exponents(self.exponents().map(|e| e % n)))
    }

    /// `a * b mod (x^n - 1)`.
    pub fn mul_mod(a: &Self, b: &Self, n: usize) -> Result<Self> {
        let a = a.reduce_cyclic(n)?;
        let b = b.reduce_cyclic(n)?;
        (&a * &b).reduce_cyclic(n)
    }

    /// `r(x^{n-1}) mod (x^n - 1)`: exponent `i` maps to `(n - i) mod n`.
    pub fn negate_exponents(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        Ok(Self::from_exponents(self.exponents().map(|e| (n - e % n) % n)))
    }

    /// `x^{deg q} q(1/x)`; the zero polynomial maps to itself.
    pub fn reciprocal(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Self::from_exponents(self.exponents().map(|e| d - e)),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.reciprocal() == *self
    }

    /// Exponent set closed under `i -> n - i (mod n)`, i.e. a symmetric circulant.
    pub fn is_symmetric_circulant(&self, n: usize) -> Result<bool> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if self.degree().is_some_and(|d| d >= n) {
            return Err(Error::InvalidArgument(format!(
                "degree must be below n = {n} for the circulant test"
            )));
        }
        Ok(self.negate_exponents(n)? == *self)
    }

    /// Ben-Or test: no factor of degree `i <= deg/2` divides, i.e.
    /// `gcd(x^{2^i} - x, f) = 1` for all such `i`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let x = Self::monomial(1);
        let mut power = x.clone();
        for _ in 1..=d / 2 {
            power = (&power * &power).rem(self).expect("nonzero modulus");
            let g = self.gcd(&(&power + &x));
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Irreducible factors of `x^n - 1` with multiplicity, sorted by degree
    /// then by coefficient string.
    pub fn factor_xn_minus_1(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        let mut odd = n;
        let mut reps = 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            reps *= 2;
        }
        let base = berlekamp(&Self::xn_minus_1(odd));
        let mut out = Vec::with_capacity(base.len() * reps);
        for f in base {
            for _ in 0..reps {
                out.push(f.clone());
            }
        }
        out.sort_by(poly_order);
        Ok(out)
    }
}

fn poly_order(a: &BinaryPolynomial, b: &BinaryPolynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.to_string().cmp(&b.to_string()))
}

/// Berlekamp splitting of a squarefree polynomial over GF(2).
fn berlekamp(f: &BinaryPolynomial) -> Vec<BinaryPolynomial> {
    let d = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        Some(d) => d,
    };
    // Column j of the map g -> g^2 - g on coefficient vectors.
    let mut cols = Vec::with_capacity(d);
    for j in 0..d {
        let sq = BinaryPolynomial::monomial(2 * j).rem(f).expect("nonzero");
        let col = &sq + &BinaryPolynomial::monomial(j);
        cols.push(col.to_vector(d));
    }
    let map = BinaryMatrix::new(d, cols).expect("square").transpose();
    let kernel = map.nullspace();
    let count = kernel.num_rows();
    let mut factors = vec![f.clone()];
    for g in kernel.rows() {
        if factors.len() == count {
            break;
        }
        let g = BinaryPolynomial::from_vector(g);
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g1 = &g + &BinaryPolynomial::one();
        let mut next = Vec::with_capacity(factors.len() * 2);
        for h in factors {
            if h.degree() == Some(1) {
                next.push(h);
                continue;
            }
            let a = h.gcd(&g);
            let b = h.gcd(&g1);
            if a.degree().unwrap_or(0) > 0 && b.degree().unwrap_or(0) > 0 {
                next.push(a);
                next.push(b);
            } else {
                next.push(h);
            }
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), count);
    factors
}

impl Add for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn add(self, rhs: &BinaryPolynomial) -> BinaryPolynomial {
        let n = self.words.len().max(rhs.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).unwrap_or(&0) ^ rhs.words.get(i).unwrap_or(&0))
            .collect();
        BinaryPolynomial::from_words(words)
    }
}

impl Mul for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn mul(self, rhs: &BinaryPolynomial) -> BinaryPolynomial {
        let (small, big) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = Vec::new();
        for e in small.exponents() {
            xor_shifted(&mut acc, &big.words, e);
        }
        BinaryPolynomial::from_words(acc)
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => f.write_str("0"),
            Some(d) => {
                let s: String = (0..=d).map(|i| if self.coeff(i) { '1' } else { '0' }).collect();
                f.write_str(&s)
            }
        }
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl FromStr for BinaryPolynomial {
    type Err = Error;

    /// Coefficient string, trailing zeros allowed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial string".into()));
        }
        let v: BinaryVector = s.parse()?;
        Ok(Self::from_vector(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn exps(e: &[usize]) -> BinaryPolynomial {
        BinaryPolynomial::from_exponents(e.iter().copied())
    }

    /// Schoolbook convolution with explicit index arithmetic.
    fn naive_mul_mod(a: &BinaryPolynomial, b: &BinaryPolynomial, n: usize) -> BinaryPolynomial {
        let mut c = vec![false; n];
        for i in a.exponents() {
            for j in b.exponents() {
                c[(i + j) % n] ^= true;
            }
        }
        BinaryPolynomial::from_exponents((0..n).filter(|&i| c[i]))
    }

    #[test]
    fn mul_mod_examples() {
        let q = exps(&[0, 1, 3]);
        assert_eq!(BinaryPolynomial::mul_mod(&BinaryPolynomial::one(), &q, 7).unwrap(), q);
        assert_eq!(
            BinaryPolynomial::mul_mod(&exps(&[4]), &exps(&[3]), 5).unwrap(),
            exps(&[2])
        );
        let h = exps(&[0, 1]);
        let g = exps(&[0, 1, 2, 3, 4]);
        assert_eq!(naive_mul_mod(&h, &g, 5), BinaryPolynomial::zero());
        assert!(BinaryPolynomial::mul_mod(&h, &g, 5).unwrap().is_zero());
        assert_eq!(
            BinaryPolynomial::mul_mod(&h, &g, 0),
            Err(Error::InvalidModulus)
        );
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = exps(&[0, 7]).divrem(&exps(&[0, 1, 3])).unwrap();
        assert_eq!(q, exps(&[0, 1, 2, 4]));
        assert!(r.is_zero());
        let b = exps(&[0, 2]);
        assert_eq!(b.divrem(&b).unwrap(), (BinaryPolynomial::one(), BinaryPolynomial::zero()));
        assert_eq!(exps(&[1]).divrem(&b).unwrap(), (BinaryPolynomial::zero(), exps(&[1])));
        assert_eq!(b.divrem(&BinaryPolynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_examples() {
        let q = exps(&[0, 1, 3]);
        assert_eq!(BinaryPolynomial::one().inverse_mod(&q).unwrap(), BinaryPolynomial::one());
        // Exhaustive scan over the 8 residues.
        let x = exps(&[1]);
        let scanned: Vec<_> = (0u64..8)
            .map(BinaryPolynomial::from_u64)
            .filter(|w| (&x * w).rem(&q).unwrap().is_one())
            .collect();
        assert_eq!(scanned, vec![exps(&[0, 2])]);
        assert_eq!(x.inverse_mod(&q).unwrap(), exps(&[0, 2]));
        let q2 = &exps(&[0, 1]) * &exps(&[0, 1, 2]);
        assert_eq!(exps(&[0, 1]).inverse_mod(&q2), Err(Error::NotCoprime));
    }

    /// Trial division by every polynomial of degree 1..=max_deg.
    fn trial_factor(mut f: BinaryPolynomial, max_deg: usize) -> Vec<BinaryPolynomial> {
        let mut out = Vec::new();
        for bits in 2u64..(1 << (max_deg + 1)) {
            let d = BinaryPolynomial::from_u64(bits);
            while f.degree().unwrap_or(0) > 0 {
                let (q, r) = f.divrem(&d).unwrap();
                if !r.is_zero() {
                    break;
                }
                out.push(d.clone());
                f = q;
            }
        }
        out
    }

    #[test]
    fn factor_small_examples() {
        let f7 = BinaryPolynomial::factor_xn_minus_1(7).unwrap();
        assert_eq!(f7, vec![p("11"), p("1011"), p("1101")]);
        let mut oracle = trial_factor(BinaryPolynomial::xn_minus_1(7), 3);
        oracle.sort_by(poly_order);
        assert_eq!(f7, oracle);
        let f5 = BinaryPolynomial::factor_xn_minus_1(5).unwrap();
        assert_eq!(f5, vec![p("11"), p("11111")]);
        let mut oracle = trial_factor(BinaryPolynomial::xn_minus_1(5), 4);
        oracle.sort_by(poly_order);
        assert_eq!(f5, oracle);
        let f21 = BinaryPolynomial::factor_xn_minus_1(21).unwrap();
        assert!(f21.contains(&exps(&[0, 1, 2, 4, 6])));
    }

    #[test]
    fn factor_products_up_to_64() {
        for n in 1..=64 {
            let fs = BinaryPolynomial::factor_xn_minus_1(n).unwrap();
            let prod = fs.iter().fold(BinaryPolynomial::one(), |acc, f| &acc * f);
            assert_eq!(prod, BinaryPolynomial::xn_minus_1(n), "n = {n}");
            assert!(fs.iter().all(|f| f.is_irreducible()), "n = {n}");
        }
    }

    #[test]
    fn predicates() {
        assert!(exps(&[0, 1, 2]).is_palindromic());
        let q = exps(&[0, 1, 2, 4, 6]);
        assert!(!q.is_palindromic());
        assert!(q.is_irreducible());
        assert!(!exps(&[0, 2]).is_irreducible());
        let r = exps(&[1, 4, 17, 20]);
        assert!(r.is_symmetric_circulant(21).unwrap());
        assert!(!exps(&[1]).is_symmetric_circulant(5).unwrap());
        assert_eq!(q.reciprocal(), exps(&[0, 2, 4, 5, 6]));
    }

    #[test]
    fn text_form() {
        assert_eq!(p("1101001"), exps(&[0, 1, 3, 6]));
        assert_eq!(exps(&[0, 1, 3, 6]).to_string(), "1101001");
        assert_eq!(p("0100"), exps(&[1]));
        assert_eq!(BinaryPolynomial::zero().to_string(), "0");
        assert!("12".parse::<BinaryPolynomial>().is_err());
    }
}
