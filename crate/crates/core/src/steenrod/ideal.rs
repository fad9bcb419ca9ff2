//! Homogeneous ideals in the Stiefel–Whitney polynomial ring, decided
//! degree by degree with F2 row reduction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::algebra::sq;
use super::linalg::{rank, BitRow, Echelon};
use super::poly::{monomials_of_degree, F2Polynomial, Gen, Monomial};
use super::SteenrodError;
use crate::exec::Execution;

/// Default degree cap for ideal computations.
pub const DEFAULT_DEGREE_CAP: u32 = 24;

/// The polynomial ring the ideal lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    gens: Vec<Gen>,
}

impl Ambient {
    /// `F2[w_2, w_3, ..., w_cap]`, the cohomology of BSO below `cap`.
    pub fn bso(cap: u32) -> Self {
        Ambient { gens: (2..=cap as u16).map(Gen::w).collect() }
    }

    /// Adds the BSO(3) classes `w'_2, w'_3`.
    pub fn bso_times_bso3(cap: u32) -> Self {
        let mut gens = Self::bso(cap).gens;
        gens.extend([Gen::w_prime(2), Gen::w_prime(3)]);
        Ambient { gens }
    }

    pub fn generators(&self) -> &[Gen] {
        &self.gens
    }
}

/// One degree of an ideal: the monomial basis of the ambient ring and a
/// reduced basis of the ideal's elements in that degree.
#[derive(Debug)]
struct Slice {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// spanning products `multiplier · generators[k]`
    products: Vec<(Monomial, usize)>,
    echelon: Echelon,
}

impl Slice {
    fn vector(&self, p: &F2Polynomial) -> Result<BitRow, SteenrodError> {
        let mut v = BitRow::zeros(self.monomials.len());
        for m in p.monomials() {
            let i = self.index.get(m).ok_or_else(|| SteenrodError::OutsideAmbient(m.to_string()))?;
            v.flip(*i);
        }
        Ok(v)
    }

    fn polynomial(&self, v: &BitRow) -> F2Polynomial {
        F2Polynomial::from_monomials(v.ones().map(|i| self.monomials[i].clone()))
    }
}

/// Proof that a polynomial lies in an ideal: `p = Σ multiplier · generator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub terms: Vec<(String, usize)>,
}

/// Answer of [`ideal_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// `(multiplier, generator index)` pairs summing to the polynomial.
    pub certificate: Option<Vec<(Monomial, usize)>>,
}

/// A homogeneous ideal with a lazily filled, thread-safe per-degree cache.
#[derive(Debug)]
pub struct GradedIdeal {
    ambient: Ambient,
    generators: Vec<F2Polynomial>,
    cap: u32,
    cache: Mutex<HashMap<u32, Arc<Slice>>>,
}

impl GradedIdeal {
    /// Generators must be homogeneous; zero generators are dropped.
    pub fn new(ambient: Ambient, generators: Vec<F2Polynomial>, cap: u32) -> Result<Self, SteenrodError> {
        let mut kept = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            if g.degree().is_none() {
                return Err(SteenrodError::Inhomogeneous(g.to_string()));
            }
            if let Some(m) = g.monomials().find(|m| m.factors().iter().any(|(x, _)| !ambient.gens.contains(x))) {
                return Err(SteenrodError::OutsideAmbient(m.to_string()));
            }
            kept.push(g);
        }
        Ok(GradedIdeal { ambient, generators: kept, cap, cache: Mutex::new(HashMap::new()) })
    }

    pub fn generators(&self) -> &[F2Polynomial] {
        &self.generators
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    fn check_cap(&self, d: u32) -> Result<(), SteenrodError> {
        if d > self.cap {
            return Err(SteenrodError::DegreeCap { degree: d, cap: self.cap });
        }
        Ok(())
    }

    fn slice(&self, d: u32) -> Result<Arc<Slice>, SteenrodError> {
        self.check_cap(d)?;
        if let Some(s) = self.cache.lock().expect("ideal cache poisoned").get(&d) {
            return Ok(Arc::clone(s));
        }
        let slice = Arc::new(self.build_slice(d));
        let mut cache = self.cache.lock().expect("ideal cache poisoned");
        Ok(Arc::clone(cache.entry(d).or_insert(slice)))
    }

    fn build_slice(&self, d: u32) -> Slice {
        let monomials = monomials_of_degree(&self.ambient.gens, d);
        let index: HashMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut products = Vec::new();
        for (k, g) in self.generators.iter().enumerate() {
            let gd = g.degree().expect("homogeneous");
            if gd <= d {
                for m in monomials_of_degree(&self.ambient.gens, d - gd) {
                    products.push((m, k));
                }
            }
        }
        let mut slice = Slice { monomials, index, products, echelon: Echelon::new(0) };
        let mut echelon = Echelon::new(slice.products.len());
        for (tag, (m, k)) in slice.products.iter().enumerate() {
            let v = slice
                .vector(&self.generators[*k].mul_monomial(m))
                .expect("generators are checked against the ambient ring");
            echelon.insert(v, tag);
        }
        slice.echelon = echelon;
        slice
    }

    /// Computes the slices for `degrees` up front, possibly in parallel.
    pub fn prefill(&self, degrees: impl IntoIterator<Item = u32>, exec: Execution) -> Result<(), SteenrodError> {
        let degrees: Vec<u32> = degrees.into_iter().collect();
        for r in exec.map(degrees, |d| self.slice(d).map(|_| ())) {
            r?;
        }
        Ok(())
    }

    /// `dim_F2` of the degree-`d` part of the ambient ring.
    pub fn ambient_dimension(&self, d: u32) -> Result<usize, SteenrodError> {
        Ok(self.slice(d)?.monomials.len())
    }

    /// `dim_F2` of the degree-`d` part of the ideal.
    pub fn dimension(&self, d: u32) -> Result<usize, SteenrodError> {
        Ok(self.slice(d)?.echelon.rank())
    }

    /// Canonical representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &F2Polynomial) -> Result<F2Polynomial, SteenrodError> {
        let mut out = F2Polynomial::zero();
        for d in degrees_of(p) {
            let slice = self.slice(d)?;
            let mut v = slice.vector(&p.component(d))?;
            slice.echelon.reduce(&mut v);
            out.add_assign(&slice.polynomial(&v));
        }
        Ok(out)
    }

    /// Membership with a certificate `p = Σ m_i g_{k_i}`.
    pub fn contains(&self, p: &F2Polynomial) -> Result<Membership, SteenrodError> {
        let mut certificate = Vec::new();
        for d in degrees_of(p) {
            let slice = self.slice(d)?;
            let mut v = slice.vector(&p.component(d))?;
            let combo = slice.echelon.reduce(&mut v);
            if !v.is_zero() {
                return Ok(Membership { member: false, certificate: None });
            }
            certificate.extend(combo.ones().map(|t| slice.products[t].clone()));
        }
        Ok(Membership { member: true, certificate: Some(certificate) })
    }

    /// Recomputes `Σ m · g` for a certificate.
    pub fn evaluate_certificate(&self, certificate: &[(Monomial, usize)]) -> F2Polynomial {
        let mut out = F2Polynomial::zero();
        for (m, k) in certificate {
            out.add_assign(&self.generators[*k].mul_monomial(m));
        }
        out
    }
}

fn degrees_of(p: &F2Polynomial) -> Vec<u32> {
    let mut ds: Vec<u32> = p.monomials().map(Monomial::degree).collect();
    ds.dedup();
    ds.sort_unstable();
    ds.dedup();
    ds
}

/// Free-function form of [`GradedIdeal::contains`].
pub fn ideal_membership(p: &F2Polynomial, ideal: &GradedIdeal) -> Result<Membership, SteenrodError> {
    ideal.contains(p)
}

/// `dim (ambient / I)_d` for `d = 0..=max_degree`.
pub fn quotient_poincare_series(
    ideal: &GradedIdeal,
    max_degree: u32,
    exec: Execution,
) -> Result<Vec<usize>, SteenrodError> {
    ideal.prefill(0..=max_degree, exec)?;
    (0..=max_degree)
        .map(|d| Ok(ideal.ambient_dimension(d)? - ideal.dimension(d)?))
        .collect()
}

/// Rank of `Sq^1 : (ambient / I)_d -> (ambient / I)_{d+1}`.
fn sq1_rank(ideal: &GradedIdeal, d: u32) -> Result<usize, SteenrodError> {
    let here = ideal.slice(d)?;
    let next = ideal.slice(d + 1)?;
    let pivots: std::collections::HashSet<usize> = here.echelon.pivots().collect();
    let rows = (0..here.monomials.len()).filter(|i| !pivots.contains(i)).map(|i| {
        let image = sq(1, &F2Polynomial::from_monomial(here.monomials[i].clone()));
        let mut v = next.vector(&image)?;
        next.echelon.reduce(&mut v);
        Ok(v)
    });
    let rows: Vec<BitRow> = rows.collect::<Result<_, SteenrodError>>()?;
    Ok(rank(rows))
}

/// Dimensions of `ker Sq^1 / im Sq^1` on the quotient ring in degrees
/// `0..=max_degree`. The ideal must be stable under `Sq^1` and have a cap of
/// at least `max_degree + 1`.
pub fn sq1_homology_series(
    ideal: &GradedIdeal,
    max_degree: u32,
    exec: Execution,
) -> Result<Vec<usize>, SteenrodError> {
    ideal.check_cap(max_degree + 1)?;
    let quotient = quotient_poincare_series(ideal, max_degree + 1, exec)?;
    let ranks: Vec<usize> = exec
        .map((0..=max_degree).collect(), |d| sq1_rank(ideal, d))
        .into_iter()
        .collect::<Result<_, _>>()?;
    Ok((0..=max_degree as usize)
        .map(|d| quotient[d] - ranks[d] - if d > 0 { ranks[d - 1] } else { 0 })
        .collect())
}

/// `Π_{i in degrees} 1/(1 - t^i)` through `t^max_degree`, by the
/// coin-change recurrence.
pub fn free_algebra_series(degrees: &[u32], max_degree: u32) -> Vec<usize> {
    let mut series = vec![0usize; max_degree as usize + 1];
    series[0] = 1;
    for &g in degrees {
        let g = g as usize;
        if g == 0 || g > max_degree as usize {
            continue;
        }
        for d in g..=max_degree as usize {
            series[d] += series[d - g];
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> F2Polynomial {
        F2Polynomial::parse(s).unwrap()
    }

    #[test]
    fn membership_examples() {
        let ideal = GradedIdeal::new(Ambient::bso(12), vec![p("w5")], 12).unwrap();
        let m = ideal.contains(&p("w5")).unwrap();
        assert!(m.member);
        assert!(!ideal.contains(&p("w2")).unwrap().member);
        let m = ideal.contains(&p("w2*w5 + w3*w5")).unwrap();
        assert_eq!(ideal.evaluate_certificate(&m.certificate.unwrap()), p("w2*w5 + w3*w5"));
        assert!(matches!(ideal.contains(&p("w13")), Err(SteenrodError::DegreeCap { degree: 13, cap: 12 })));
        assert_eq!(ideal.normal_form(&p("w2 + w2*w5")).unwrap(), p("w2"));
    }

    #[test]
    fn coin_change() {
        assert_eq!(free_algebra_series(&[2, 3], 6), vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert!(GradedIdeal::new(Ambient::bso(6), vec![p("w2 + w3")], 6).is_err());
    }
}
