use std::collections::HashSet;

use crate::algebra::{BinaryMatrix, BinaryPolynomial, BinaryVector, RowBasis};
use crate::error::{Error, Result};

/// Binary linear code `[n, k]` held as a reduced generator matrix together
/// with a parity-check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLinearCode {
    n: usize,
    generator: BinaryMatrix,
    parity_check: BinaryMatrix,
}

impl BinaryLinearCode {
    /// Code spanned by `rows`; dependent rows are dropped.
    pub fn from_generators(n: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        let generator = BinaryMatrix::new(n, rows)?.rref().0;
        let parity_check = generator.nullspace();
        Ok(BinaryLinearCode {
            n,
            generator,
            parity_check,
        })
    }

    pub fn from_parity_check(h: &BinaryMatrix) -> Self {
        let generator = h.nullspace();
        let parity_check = generator.nullspace();
        BinaryLinearCode {
            n: h.num_cols(),
            generator,
            parity_check,
        }
    }

    /// Cyclic code whose parity checks are the `n` cyclic shifts of `p`.
    pub fn cyclic_from_check(n: usize, p: &BinaryPolynomial) -> Result<Self> {
        let p = p.reduce_cyclic(n)?;
        let base = p.to_vector(n);
        let rows = (0..n).map(|i| base.rotate(i)).collect();
        Ok(Self::from_parity_check(&BinaryMatrix::new(n, rows)?))
    }

    pub fn repetition(n: usize) -> Self {
        Self::from_generators(n, vec![BinaryVector::ones(n)]).expect("row has length n")
    }

    /// The whole space `GF(2)^n`.
    pub fn full(n: usize) -> Self {
        Self::from_generators(n, BinaryMatrix::identity(n).rows().to_vec()).expect("identity rows")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.num_rows()
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &BinaryMatrix {
        &self.parity_check
    }

    pub fn contains(&self, c: &BinaryVector) -> bool {
        c.len() == self.n && self.parity_check.mul_vec(c).is_zero()
    }

    /// Positions where some codeword is nonzero.
    pub fn involved_bits(&self) -> BinaryVector {
        self.generator
            .rows()
            .iter()
            .fold(BinaryVector::zeros(self.n), |acc, r| acc.or(r))
    }

    /// All `2^k` codewords; refuses `k > 20`.
    pub fn codewords(&self) -> Result<Vec<BinaryVector>> {
        let k = self.k();
        if k > 20 {
            return Err(Error::TooLarge(format!("2^{k} codewords")));
        }
        Ok((0u64..1 << k)
            .map(|m| self.generator.vec_mul(&BinaryVector::from_u128(k, m as u128)))
            .collect())
    }

    /// Minimum weight of a nonzero codeword, `None` when `k = 0`.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        let k = self.k();
        if k == 0 {
            return Ok(None);
        }
        if self.n > 128 {
            return Err(Error::TooLarge(format!("length {} exceeds 128", self.n)));
        }
        if k <= 26 || self.n - k > 128 {
            Ok(Some(self.distance_by_codewords()))
        } else {
            Ok(Some(self.distance_by_syndromes()))
        }
    }

    fn distance_by_codewords(&self) -> usize {
        let rows: Vec<u128> = self.generator.rows().iter().map(|r| r.to_u128()).collect();
        let mut c = 0u128;
        let mut best = usize::MAX;
        for step in 1u64..1 << rows.len() {
            c ^= rows[step.trailing_zeros() as usize];
            best = best.min(c.count_ones() as usize);
        }
        best
    }

    /// Smallest set of parity-check columns summing to zero.
    fn distance_by_syndromes(&self) -> usize {
        let ht = self.parity_check.transpose();
        let cols: Vec<u128> = ht.rows().iter().map(|r| r.to_u128()).collect();
        fn search(cols: &[u128], start: usize, left: usize, acc: u128) -> bool {
            if left == 0 {
                return acc == 0;
            }
            (start..=cols.len() - left).any(|i| search(cols, i + 1, left - 1, acc ^ cols[i]))
        }
        (1..=self.n)
            .find(|&w| search(&cols, 0, w, 0))
            .unwrap_or(self.n)
    }

    /// Applies `c -> c + c_a r` to every codeword.
    pub fn shear(&self, a: usize, r: &BinaryVector) -> Self {
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|c| if c.get(a) { c ^ r } else { c.clone() })
            .collect();
        Self::from_generators(self.n, rows).expect("lengths preserved")
    }
}

/// A classical code given by an explicit list of distinct codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCodeSet {
    n: usize,
    words: Vec<BinaryVector>,
}

impl BinaryCodeSet {
    pub fn new(n: usize, words: Vec<BinaryVector>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::InvalidArgument("a code needs at least one codeword".into()));
        }
        let mut seen = HashSet::new();
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch(w.len(), n));
            }
            if !seen.insert(w) {
                return Err(Error::InvalidArgument(format!("duplicate codeword {w}")));
            }
        }
        Ok(BinaryCodeSet { n, words })
    }

    pub fn from_strs<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let parsed = words
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<BinaryVector>>>()?;
        let n = parsed.first().map_or(0, |w| w.len());
        Self::new(n, parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[BinaryVector] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, c: &BinaryVector) -> bool {
        self.words.contains(c)
    }

    /// Bits on which two codewords differ.
    pub fn involved_bits(&self) -> BinaryVector {
        let first = &self.words[0];
        self.words
            .iter()
            .fold(BinaryVector::zeros(self.n), |acc, w| acc.or(&(w ^ first)))
    }

    /// Minimum pairwise Hamming distance, `None` when `K = 1`.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = (a ^ b).weight();
                best = Some(best.map_or(d, |x: usize| x.min(d)));
            }
        }
        best
    }

    /// The same set as a linear code, if it is one.
    pub fn as_linear(&self) -> Option<BinaryLinearCode> {
        if !self.words.iter().any(|w| w.is_zero()) || !self.size().is_power_of_two() {
            return None;
        }
        let basis = RowBasis::from_rows(self.n, &self.words);
        if 1usize.checked_shl(basis.rank() as u32) != Some(self.size()) {
            return None;
        }
        BinaryLinearCode::from_generators(self.n, basis.basis().cloned().collect()).ok()
    }

    pub fn shear(&self, a: usize, r: &BinaryVector) -> Self {
        let words = self
            .words
            .iter()
            .map(|c| if c.get(a) { c ^ r } else { c.clone() })
            .collect();
        BinaryCodeSet { n: self.n, words }
    }
}

/// The classical half of a CWS code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalCode {
    Linear(BinaryLinearCode),
    Set(BinaryCodeSet),
}

/// Distance of a classical code. `trivial` marks a single-codeword code,
/// whose distance is `n` by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryDistance {
    pub d: usize,
    pub trivial: bool,
}

impl ClassicalCode {
    pub fn n(&self) -> usize {
        match self {
            ClassicalCode::Linear(c) => c.n(),
            ClassicalCode::Set(c) => c.n(),
        }
    }

    /// `log2 K`.
    pub fn log2_size(&self) -> f64 {
        match self {
            ClassicalCode::Linear(c) => c.k() as f64,
            ClassicalCode::Set(c) => (c.size() as f64).log2(),
        }
    }

    pub fn is_single_word(&self) -> bool {
        match self {
            ClassicalCode::Linear(c) => c.k() == 0,
            ClassicalCode::Set(c) => c.size() == 1,
        }
    }

    pub fn involved_bits(&self) -> BinaryVector {
        match self {
            ClassicalCode::Linear(c) => c.involved_bits(),
            ClassicalCode::Set(c) => c.involved_bits(),
        }
    }

    pub fn as_linear(&self) -> Option<BinaryLinearCode> {
        match self {
            ClassicalCode::Linear(c) => Some(c.clone()),
            ClassicalCode::Set(c) => c.as_linear(),
        }
    }

    pub fn shear(&self, a: usize, r: &BinaryVector) -> Self {
        match self {
            ClassicalCode::Linear(c) => ClassicalCode::Linear(c.shear(a, r)),
            ClassicalCode::Set(c) => ClassicalCode::Set(c.shear(a, r)),
        }
    }
}

pub fn binary_distance(c: &ClassicalCode) -> Result<BinaryDistance> {
    let d = match c {
        ClassicalCode::Linear(l) => l.min_distance()?,
        ClassicalCode::Set(s) => s.min_distance(),
    };
    Ok(match d {
        Some(d) => BinaryDistance { d, trivial: false },
        None => BinaryDistance { d: c.n(), trivial: true },
    })
}
