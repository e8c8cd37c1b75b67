use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Smallest set containing `i mod n` that is closed under doubling mod `n`.
pub fn cyclotomic_coset(n: usize, i: usize) -> Result<BTreeSet<usize>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let start = i % n;
    let mut out = BTreeSet::new();
    let mut x = start;
    loop {
        if !out.insert(x) {
            break;
        }
        x = (2 * x) % n;
    }
    Ok(out)
}

/// All distinct cyclotomic cosets mod odd `n`, ordered by smallest element.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<BTreeSet<usize>>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let c = cyclotomic_coset(n, i)?;
        for &j in &c {
            seen[j] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Least `s >= 1` with `a^s ≡ 1 (mod m)`.
pub fn multiplicative_order(a: usize, m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("modulus {m} must be at least 2")));
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::InvalidArgument(format!("{a} and {m} are not coprime")));
    }
    let a = (a % m) as u128;
    let m128 = m as u128;
    let mut x = a;
    let mut s = 1;
    while x != 1 {
        x = (x * a) % m128;
        s += 1;
    }
    Ok(s)
}
