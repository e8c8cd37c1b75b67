use serde_json::json;

use crate::algebra::{BinaryPolynomial, QuaternaryVector};
use crate::codes::{additive_distance, cws_distance, AdditiveF4Code, BinaryLinearCode, ClassicalCode, CwsCode};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::params::CodeParams;
use crate::pauli::PauliOperator;

/// `q = (x^n - 1) / p`, failing unless `p` divides `x^n - 1`.
pub fn generator_from_check(n: usize, p: &BinaryPolynomial) -> Result<BinaryPolynomial> {
    if n == 0 {
        return Err(Error::InvalidModulus);
    }
    if p.is_zero() {
        return Err(Error::NotADivisor(n));
    }
    let (q, rem) = BinaryPolynomial::xn_minus_1(n).divrem(p)?;
    if !rem.is_zero() {
        return Err(Error::NotADivisor(n));
    }
    Ok(q)
}

/// `p = (x^n - 1) / q`.
pub fn check_from_generator(n: usize, q: &BinaryPolynomial) -> Result<BinaryPolynomial> {
    generator_from_check(n, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Orthogonality {
    /// `p p̄ (r + r̄) ≡ 0 (mod x^n - 1)`, bars denoting `x -> x^{n-1}`.
    pub holds: bool,
    /// `p p̄ ≡ 0`, so the condition holds for every `r`.
    pub guaranteed: bool,
}

pub fn check_orthogonality_poly(n: usize, p: &BinaryPolynomial, r: &BinaryPolynomial) -> Result<Orthogonality> {
    generator_from_check(n, p)?;
    let pp = BinaryPolynomial::mul_mod(p, &p.negate_exponents(n)?, n)?;
    let r = r.reduce_cyclic(n)?;
    let sym = &r + &r.negate_exponents(n)?;
    Ok(Orthogonality {
        holds: BinaryPolynomial::mul_mod(&pp, &sym, n)?.is_zero(),
        guaranteed: pp.is_zero(),
    })
}

/// Single-generator cyclic additive code spanned by the shifts of
/// `g(x) = p(x) [ω + r(x)]`. It encodes `k = deg p` qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuantumCode {
    n: usize,
    p: BinaryPolynomial,
    r: BinaryPolynomial,
}

impl CyclicQuantumCode {
    pub fn new(n: usize, p: BinaryPolynomial, r: BinaryPolynomial) -> Result<Self> {
        let r = r.reduce_cyclic(n)?;
        if !check_orthogonality_poly(n, &p, &r)?.holds {
            return Err(Error::NotSelfOrthogonal);
        }
        Ok(CyclicQuantumCode { n, p, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> &BinaryPolynomial {
        &self.p
    }

    pub fn r(&self) -> &BinaryPolynomial {
        &self.r
    }

    pub fn q(&self) -> BinaryPolynomial {
        generator_from_check(self.n, &self.p).expect("checked at construction")
    }

    pub fn k(&self) -> usize {
        self.p.degree().expect("nonzero check polynomial")
    }

    /// `g = p r + ω p` as a quaternary vector.
    pub fn generator(&self) -> QuaternaryVector {
        let u = BinaryPolynomial::mul_mod(&self.p, &self.r, self.n).expect("n > 0");
        let v = self.p.reduce_cyclic(self.n).expect("n > 0");
        QuaternaryVector {
            u: u.to_vector(self.n),
            v: v.to_vector(self.n),
        }
    }

    /// The code spanned by all `n` cyclic shifts of the generator.
    pub fn additive(&self) -> AdditiveF4Code {
        let g = self.generator();
        AdditiveF4Code::new(self.n, (0..self.n).map(|i| g.rotate(i)).collect()).expect("rows have length n")
    }

    /// `r` is a symmetric circulant with zero constant term, so it is the
    /// adjacency polynomial of a circulant graph.
    pub fn is_cws_form(&self) -> bool {
        !self.r.coeff(0) && self.r.is_symmetric_circulant(self.n).unwrap_or(false)
    }

    /// The equivalent CWS code: circulant graph from `r` and the cyclic
    /// classical code whose checks are the shifts of `p`.
    pub fn cws(&self) -> Option<CwsCode> {
        if !self.is_cws_form() {
            return None;
        }
        let offsets: Vec<usize> = self.r.exponents().collect();
        let graph = Graph::circulant(self.n, &offsets).ok()?;
        let classical = BinaryLinearCode::cyclic_from_check(self.n, &self.p).ok()?;
        CwsCode::new(graph, ClassicalCode::Linear(classical)).ok()
    }

    /// A CWS code equivalent under `X <-> Y` on every qubit. When `r` is
    /// symmetric with `r_0 = 1`, that swap turns `ω + r` into `ω + r + 1`;
    /// the flag reports whether it was applied.
    pub fn cws_equivalent(&self) -> Option<(CwsCode, bool)> {
        if let Some(q) = self.cws() {
            return Some((q, false));
        }
        let shifted = CyclicQuantumCode {
            n: self.n,
            p: self.p.clone(),
            r: &self.r + &BinaryPolynomial::one(),
        };
        shifted.cws().map(|q| (q, true))
    }

    /// Exact distance through the CWS graph image when available (mapping
    /// the witness back if `X` and `Y` were swapped), otherwise through
    /// the additive code.
    pub fn distance(&self, cap: Option<usize>) -> Result<CodeParams> {
        match self.cws_equivalent() {
            Some((q, false)) => cws_distance(&q, cap),
            Some((q, true)) => {
                let mut params = cws_distance(&q, cap)?;
                params.witness = params.witness.map(|w| swap_x_y(&w));
                Ok(params)
            }
            None => additive_distance(&self.additive(), cap),
        }
    }

    /// `{"n", "p", "r"}` with coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "p": self.p.to_string(),
            "r": self.r.to_string(),
        })
    }
}

/// Exchanges `X` and `Y` at every position.
fn swap_x_y(e: &PauliOperator) -> PauliOperator {
    let v = e.x_part().clone();
    let u = e.z_part() ^ &v;
    PauliOperator::new(v, u).expect("equal lengths")
}

/// The additive code of `g = p [ω + r]` and, when `r` is a symmetric
/// circulant without constant term, the matching CWS code.
pub fn cyclic_build(n: usize, p: &BinaryPolynomial, r: &BinaryPolynomial) -> Result<(AdditiveF4Code, Option<CwsCode>)> {
    let c = CyclicQuantumCode::new(n, p.clone(), r.clone())?;
    Ok((c.additive(), c.cws()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Distance;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn check_21() -> BinaryPolynomial {
        generator_from_check(21, &poly("1110101")).unwrap()
    }

    #[test]
    fn code_21_15_3() {
        let p = check_21();
        let r = BinaryPolynomial::from_exponents([1, 4, 17, 20]);
        assert_eq!(p.degree(), Some(15));
        let o = check_orthogonality_poly(21, &p, &r).unwrap();
        assert!(o.holds && o.guaranteed);
        let (add, cws) = cyclic_build(21, &p, &r).unwrap();
        assert!(add.is_self_orthogonal());
        assert_eq!(add.rank(), 6);
        assert!(add.is_cyclic());
        let cws = cws.unwrap();
        assert!(cws.stabilizer().unwrap().span_equals(&add));
        let d = cws_distance(&cws, None).unwrap();
        assert_eq!((d.d, d.k), (Distance::Exact(3), 15.0));
    }

    #[test]
    fn five_qubit_code_from_ring() {
        let c = CyclicQuantumCode::new(5, poly("11"), BinaryPolynomial::from_exponents([1, 4])).unwrap();
        assert_eq!(c.k(), 1);
        let cws = c.cws().unwrap();
        assert_eq!(cws.graph(), &Graph::ring(5).unwrap());
        let shifts: Vec<PauliOperator> = (0..5).map(|i| "XZZXI".parse::<PauliOperator>().unwrap().rotate(i)).collect();
        assert!(c.additive().span_equals(&AdditiveF4Code::from_paulis(5, &shifts).unwrap()));
        assert_eq!(c.distance(None).unwrap().d, Distance::Exact(3));
    }

    #[test]
    fn orthogonality_examples() {
        let p = poly("11");
        let o = check_orthogonality_poly(5, &p, &poly("01")).unwrap();
        assert_eq!(o, Orthogonality { holds: false, guaranteed: false });
        assert_eq!(
            CyclicQuantumCode::new(5, p.clone(), poly("01")),
            Err(Error::NotSelfOrthogonal)
        );
        for r in ["1", "01001", "00110", "11111"] {
            assert!(check_orthogonality_poly(5, &p, &poly(r)).unwrap().holds);
        }
        assert_eq!(check_orthogonality_poly(5, &poly("111"), &poly("1")), Err(Error::NotADivisor(5)));
    }

    #[test]
    fn equivalent_residues_give_the_same_span() {
        let p = check_21();
        let q = poly("1110101");
        let r = BinaryPolynomial::from_exponents([1, 4, 17, 20]);
        let r2 = BinaryPolynomial::mul_mod(&q, &poly("1011"), 21).unwrap();
        let r2 = &r + &r2;
        let a = CyclicQuantumCode::new(21, p.clone(), r).unwrap().additive();
        let b = CyclicQuantumCode::new(21, p, r2).unwrap().additive();
        assert!(a.span_equals(&b));
    }

    #[test]
    fn rank_is_degree_of_q() {
        for n in [5usize, 7, 9, 15] {
            for f in BinaryPolynomial::factor_xn_minus_1(n).unwrap() {
                let p = generator_from_check(n, &f).unwrap();
                let c = CyclicQuantumCode::new(n, p.clone(), BinaryPolynomial::zero()).unwrap();
                assert_eq!(c.additive().rank(), f.degree().unwrap());
                assert_eq!(c.k(), p.degree().unwrap());
            }
        }
    }
}
