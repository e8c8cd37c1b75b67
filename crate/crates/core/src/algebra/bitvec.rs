use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::Error;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `len` in the last word are always zero, so word-wise equality,
/// hashing and population counts need no masking.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        BinaryVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = !0;
        }
        v.trim();
        v
    }

    /// Unit vector with a single one at `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    /// Builds a vector of length `len <= 128` from the low bits of `mask`.
    pub fn from_u128(len: usize, mask: u128) -> Self {
        assert!(len <= 128);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask as u64;
        }
        if len > 64 {
            v.words[1] = (mask >> 64) as u64;
        }
        v.trim();
        v
    }

    /// Low 128 bits packed into an integer; panics for `len > 128`.
    pub fn to_u128(&self) -> u128 {
        assert!(self.len <= 128, "vector too long for u128 packing");
        let lo = self.words.first().copied().unwrap_or(0) as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        lo | (hi << 64)
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if bit {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Number of positions where both vectors are one (integer, not reduced).
    pub fn overlap(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn or(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len);
        BinaryVector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.ones_iter().next()
    }

    /// Cyclic shift towards higher indices: bit `i` moves to `(i + s) mod len`.
    pub fn rotate(&self, s: usize) -> Self {
        if self.len == 0 {
            return self.clone();
        }
        let s = s % self.len;
        Self::from_indices(self.len, self.ones_iter().map(|i| (i + s) % self.len))
    }

    /// Applies `perm`: bit `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len);
        Self::from_indices(self.len, self.ones_iter().map(|i| perm[i]))
    }
}

impl BitXorAssign<&BinaryVector> for BinaryVector {
    fn bitxor_assign(&mut self, rhs: &BinaryVector) {
        assert_eq!(self.len, rhs.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BinaryVector {
    type Output = BinaryVector;
    fn bitxor(self, rhs: &BinaryVector) -> BinaryVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl BitAnd for &BinaryVector {
    type Output = BinaryVector;
    fn bitand(self, rhs: &BinaryVector) -> BinaryVector {
        assert_eq!(self.len, rhs.len);
        BinaryVector {
            len: self.len,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect(),
        }
    }
}

/// Bit strings: character `k` is bit `k`.
impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut v = BinaryVector::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(Error::Parse(format!("illegal bit character {other:?} in {s:?}"))),
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let v: BinaryVector = "0110001".parse().unwrap();
        assert_eq!(v.len(), 7);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.to_string(), "0110001");
        assert!("01a".parse::<BinaryVector>().is_err());
    }

    #[test]
    fn multiword_trim() {
        let v = BinaryVector::ones(70);
        assert_eq!(v.weight(), 70);
        assert_eq!(v.rotate(3), v);
        let u = BinaryVector::from_u128(100, u128::MAX);
        assert_eq!(u.weight(), 100);
        assert_eq!(u.to_u128().count_ones(), 100);
    }

    #[test]
    fn dot_and_overlap() {
        let a: BinaryVector = "1101".parse().unwrap();
        let b: BinaryVector = "1011".parse().unwrap();
        assert_eq!(a.overlap(&b), 2);
        assert!(!a.dot(&b));
        assert_eq!((&a ^ &b).to_string(), "0110");
    }

    #[test]
    fn rotate_moves_up() {
        let a: BinaryVector = "10010".parse().unwrap();
        assert_eq!(a.rotate(1).to_string(), "01001");
        assert_eq!(a.rotate(2).to_string(), "10100");
    }
}
