//! Graded cohomology dimensions of (generalized) moment-angle complexes.
//!
//! For pairs `(D_i, S_i)` with `D_i` acyclic and `S_i` a homology sphere of
//! dimension `κ_i`, the Betti entry `β_{i,a}` contributes to degree
//! `-i + sum_{k in a} (κ_k + 1)`. `κ = (1, ..., 1)` gives `Z_K` and
//! `κ = (0, ..., 0)` gives the real moment-angle complex.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::{betti_table, BettiTable};
use crate::linalg::FieldTag;

/// Per-vertex sphere dimensions `κ_1, ..., κ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(kappa: Vec<u32>) -> Self {
        DegreeVector(kappa)
    }

    pub fn constant(m: usize, kappa: u32) -> Self {
        DegreeVector(vec![kappa; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// `dim H^n` for each degree `n` with a nonzero group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: BTreeMap<usize, u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeDim {
    pub degree: usize,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PoincareReport {
    pub terms: Vec<DegreeDim>,
    pub total: u64,
}

impl PoincarePolynomial {
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut p = PoincarePolynomial::default();
        for (n, d) in coeffs {
            p.add(n, d);
        }
        p
    }

    pub fn add(&mut self, degree: usize, dim: u64) {
        if dim > 0 {
            *self.coeffs.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&n, &d)| (n, d))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum of all coefficients.
    pub fn total_dim(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// `sum_n (-1)^n dim H^n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms()
            .map(|(n, d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn report(&self) -> PoincareReport {
        PoincareReport {
            terms: self.terms().map(|(degree, dim)| DegreeDim { degree, dim }).collect(),
            total: self.total_dim(),
        }
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (n, d)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match (n, d) {
                (0, d) => write!(f, "{d}")?,
                (1, 1) => f.write_str("t")?,
                (1, d) => write!(f, "{d}t")?,
                (n, 1) => write!(f, "t^{n}")?,
                (n, d) => write!(f, "{d}t^{n}")?,
            }
        }
        Ok(())
    }
}

pub fn poincare_generalized(t: &BettiTable, kappa: &DegreeVector) -> Result<PoincarePolynomial> {
    if kappa.len() != t.ground_set() {
        return Err(Error::DimensionMismatch {
            what: "degree vector length",
            expected: t.ground_set(),
            got: kappa.len(),
        });
    }
    let mut p = PoincarePolynomial::default();
    for (i, a, beta) in t.entries() {
        let shift: usize = a.iter().map(|k| kappa.0[k - 1] as usize + 1).sum();
        // i <= |a| <= shift, so the degree is nonnegative.
        p.add(shift - i, beta);
    }
    Ok(p)
}

/// Cohomology of the moment-angle complex `Z_K`.
pub fn poincare_zk(k: &SimplicialComplex, field: FieldTag) -> PoincarePolynomial {
    let t = betti_table(k, field);
    poincare_generalized(&t, &DegreeVector::constant(k.ground_set(), 1)).expect("lengths agree")
}

/// Cohomology of the real moment-angle complex.
pub fn poincare_rzk(k: &SimplicialComplex, field: FieldTag) -> PoincarePolynomial {
    let t = betti_table(k, field);
    poincare_generalized(&t, &DegreeVector::constant(k.ground_set(), 0)).expect("lengths agree")
}

pub fn total_dim(p: &PoincarePolynomial) -> u64 {
    p.total_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_complexes;
    use crate::hochster::total_betti_sum;

    #[test]
    fn sphere_examples() {
        for m in 2..=6 {
            let k = SimplicialComplex::simplex_boundary(m).unwrap();
            for field in FieldTag::ALL {
                let zk = poincare_zk(&k, field);
                assert_eq!(zk, PoincarePolynomial::from_coeffs([(0, 1), (2 * m - 1, 1)]));
                let rzk = poincare_rzk(&k, field);
                assert_eq!(rzk, PoincarePolynomial::from_coeffs([(0, 1), (m - 1, 1)]));
                assert_eq!(total_dim(&zk), 2);
            }
        }
        let k = SimplicialComplex::simplex_boundary(3).unwrap();
        assert_eq!(poincare_zk(&k, FieldTag::Gf2).to_string(), "1 + t^5");
    }

    #[test]
    fn contractible_and_discrete() {
        for m in 1..=5 {
            let full = SimplicialComplex::simplex(m).unwrap();
            let t = betti_table(&full, FieldTag::Gf2);
            let p = poincare_generalized(&t, &DegreeVector::new((0..m as u32).collect())).unwrap();
            assert_eq!(p, PoincarePolynomial::from_coeffs([(0, 1)]));
            let e = SimplicialComplex::empty_face_only(m).unwrap();
            let rzk = poincare_rzk(&e, FieldTag::Rational);
            assert_eq!(total_dim(&rzk), 1 << m);
            assert_eq!(rzk, PoincarePolynomial::from_coeffs([(0, 1 << m)]));
        }
    }

    #[test]
    fn heterogeneous_kappa() {
        // ∂Δ^1 with spheres of dimension 2 and 4: the join S^2 * S^4 = S^7.
        let k = SimplicialComplex::simplex_boundary(2).unwrap();
        let t = betti_table(&k, FieldTag::Gf2);
        let p = poincare_generalized(&t, &DegreeVector::new(vec![2, 4])).unwrap();
        assert_eq!(p, PoincarePolynomial::from_coeffs([(0, 1), (7, 1)]));
        assert!(poincare_generalized(&t, &DegreeVector::new(vec![1])).is_err());
    }

    #[test]
    fn totals_agree_and_degrees_bounded() {
        for m in 1..=4 {
            for k in enumerate_complexes(m).unwrap() {
                for field in FieldTag::ALL {
                    let t = betti_table(&k, field);
                    let zk = poincare_zk(&k, field);
                    let rzk = poincare_rzk(&k, field);
                    assert_eq!(zk.total_dim(), rzk.total_dim());
                    assert_eq!(zk.total_dim(), total_betti_sum(&t));
                    assert_eq!(zk.coeff(0), 1);
                    if k != SimplicialComplex::simplex(m).unwrap() {
                        assert!(zk.degree().unwrap() <= 2 * m - 1);
                    }
                    for (i, a, _) in t.entries() {
                        assert!(zk.coeff(2 * a.len() - i) > 0);
                    }
                }
            }
        }
    }
}
