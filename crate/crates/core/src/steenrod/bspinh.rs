//! Checks of the quotient presentations of `H^*(BSpin^h; Z2)`,
//! `H^*(BSpin; Z2)` and `H^*(BSpin^c; Z2)` and of the `Sq^1`-homology.

use std::fmt;

use serde::Serialize;

use super::algebra::{sq, wu_classes, SteenrodMonomial};
use super::ideal::{free_algebra_series, quotient_poincare_series, sq1_homology_series, Ambient, GradedIdeal};
use super::poly::F2Polynomial;
use super::SteenrodError;
use crate::exec::Execution;

/// The structure group whose classifying space is presented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StructureGroup {
    Spin,
    SpinC,
    SpinH,
}

impl fmt::Display for StructureGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureGroup::Spin => "BSpin",
            StructureGroup::SpinC => "BSpinc",
            StructureGroup::SpinH => "BSpinh",
        })
    }
}

fn powers_of_two_from(start: u32, limit: u32) -> impl Iterator<Item = u32> {
    std::iter::successors(Some(start), |p| p.checked_mul(2)).take_while(move |p| *p <= limit)
}

impl StructureGroup {
    /// Generator degrees `i` of `F2[w_i]` that are killed (made decomposable).
    pub fn excluded_degrees(self, max_degree: u32) -> Vec<u32> {
        let mut out: Vec<u32> = match self {
            StructureGroup::Spin => vec![2, 3],
            StructureGroup::SpinC => vec![3],
            StructureGroup::SpinH => vec![],
        };
        out.extend(powers_of_two_from(4, max_degree).map(|p| p + 1).filter(|d| *d <= max_degree));
        out
    }

    /// Generator degrees of the free subalgebra mapping isomorphically
    /// onto the quotient.
    pub fn free_generator_degrees(self, max_degree: u32) -> Vec<u32> {
        let excluded = self.excluded_degrees(max_degree);
        (2..=max_degree).filter(|d| !excluded.contains(d)).collect()
    }
}

/// The ideal `(Sq^1 ν_{2^{r+1}})` (plus `ν_2`, `Sq^1 ν_2` as appropriate)
/// in `F2[w_2, ..., w_cap]`, keeping generators of degree at most `cap`.
pub fn structure_ideal(group: StructureGroup, cap: u32) -> Result<GradedIdeal, SteenrodError> {
    let nu = wu_classes(cap.max(2));
    let mut gens = Vec::new();
    if group == StructureGroup::Spin {
        gens.push(nu[2].clone());
    }
    let first = if group == StructureGroup::SpinH { 4 } else { 2 };
    for p in powers_of_two_from(first, cap.saturating_sub(1)) {
        gens.push(sq(1, &nu[p as usize]));
    }
    GradedIdeal::new(Ambient::bso(cap), gens, cap)
}

/// Quotient series against the free-subalgebra series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub group: StructureGroup,
    pub max_degree: u32,
    pub ideal_generators: Vec<String>,
    pub quotient_series: Vec<usize>,
    pub free_subalgebra_series: Vec<usize>,
    pub matches: bool,
}

pub fn verify_structure(
    group: StructureGroup,
    max_degree: u32,
    exec: Execution,
) -> Result<QuotientReport, SteenrodError> {
    let ideal = structure_ideal(group, max_degree)?;
    let quotient_series = quotient_poincare_series(&ideal, max_degree, exec)?;
    let free_subalgebra_series = free_algebra_series(&group.free_generator_degrees(max_degree), max_degree);
    Ok(QuotientReport {
        group,
        max_degree,
        ideal_generators: ideal.generators().iter().map(ToString::to_string).collect(),
        matches: quotient_series == free_subalgebra_series,
        quotient_series,
        free_subalgebra_series,
    })
}

/// Poincaré series of `F2[w_2^2, w_{2k}^2 (k != 2^j), ν_{2^{r+1}} (r >= 1)]`.
pub fn expected_sq1_homology(max_degree: u32) -> Vec<usize> {
    let mut degrees = vec![4];
    degrees.extend(powers_of_two_from(4, max_degree));
    degrees.extend((3..).map(|k| 4 * k).take_while(|d| *d <= max_degree).filter(|d| !(d / 4).is_power_of_two()));
    free_algebra_series(&degrees, max_degree)
}

/// `Sq^I (w_2 + w'_2)` for `I = (2^r, ..., 2, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonicityRow {
    pub operation: String,
    pub degree: u32,
    pub value: String,
    pub indecomposable_part: String,
    pub expected_indecomposable: String,
    pub ok: bool,
}

/// Applies `1, Sq^1, Sq^2 Sq^1, ..., Sq^{2^max_r} ... Sq^1` to `w_2 + w'_2`
/// in `F2[w_i; w'_2, w'_3]` and checks the indecomposable parts.
pub fn monicity_battery(max_r: u32) -> Vec<MonicityRow> {
    let x = F2Polynomial::w(2).add(&F2Polynomial::w_prime(2));
    let mut ops = vec![(SteenrodMonomial::identity(), x.clone())];
    ops.push((SteenrodMonomial::new([1]), F2Polynomial::w(3).add(&F2Polynomial::w_prime(3))));
    for r in 1..=max_r {
        let indices: Vec<u32> = (0..=r).rev().map(|t| 1 << t).collect();
        ops.push((SteenrodMonomial::new(indices), F2Polynomial::w((1 << (r + 1)) as u16 + 1)));
    }
    ops.into_iter()
        .map(|(op, expected)| {
            let value = op.apply(&x);
            let indecomposable = value.indecomposable_part();
            MonicityRow {
                operation: op.to_string(),
                degree: 2 + op.degree(),
                value: value.to_string(),
                indecomposable_part: indecomposable.to_string(),
                expected_indecomposable: expected.to_string(),
                ok: indecomposable == expected,
            }
        })
        .collect()
}

/// Everything checked about `BSpin^h` up to a degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BspinhReport {
    pub max_degree: u32,
    pub quotient: QuotientReport,
    pub sq1_homology: Vec<usize>,
    pub expected_sq1_homology: Vec<usize>,
    pub homology_matches: bool,
    pub odd_homology_vanishes: bool,
    /// `Sq^1` maps every ideal generator back into the ideal.
    pub ideal_sq1_stable: bool,
    pub nu4: String,
    pub sq1_nu4: String,
    /// `w_9 + w_2 w_7 + w_3 w_6 ∈ (Sq^1 ν_4, Sq^1 ν_8)`, when in range.
    pub w9_relation_certified: Option<bool>,
    pub monicity: Vec<MonicityRow>,
}

impl BspinhReport {
    pub fn passed(&self) -> bool {
        self.quotient.matches
            && self.homology_matches
            && self.odd_homology_vanishes
            && self.ideal_sq1_stable
            && self.w9_relation_certified != Some(false)
            && self.monicity.iter().all(|r| r.ok)
    }
}

/// Checks the quotient series and the `Sq^1`-homology through `max_degree`.
pub fn verify_bspinh(max_degree: u32, exec: Execution) -> Result<BspinhReport, SteenrodError> {
    let quotient = verify_structure(StructureGroup::SpinH, max_degree, exec)?;
    let ideal = structure_ideal(StructureGroup::SpinH, max_degree + 1)?;
    let sq1_homology = sq1_homology_series(&ideal, max_degree, exec)?;
    let expected = expected_sq1_homology(max_degree);

    let mut stable = true;
    for g in ideal.generators() {
        let image = sq(1, g);
        if !image.is_zero() && image.degree().is_some_and(|d| d <= ideal.cap()) {
            stable &= ideal.contains(&image)?.member;
        }
    }

    let nu = wu_classes(4);
    let w9_relation_certified = if max_degree >= 9 {
        let nu8 = wu_classes(8).pop().expect("nonempty");
        let small = GradedIdeal::new(Ambient::bso(9), vec![sq(1, &nu[4]), sq(1, &nu8)], 9)?;
        let target = F2Polynomial::parse("w9 + w2*w7 + w3*w6")?;
        let m = small.contains(&target)?;
        Some(m.member && m.certificate.is_some_and(|c| small.evaluate_certificate(&c) == target))
    } else {
        None
    };

    Ok(BspinhReport {
        max_degree,
        odd_homology_vanishes: sq1_homology.iter().skip(1).step_by(2).all(|&h| h == 0),
        homology_matches: sq1_homology == expected,
        sq1_homology,
        expected_sq1_homology: expected,
        quotient,
        ideal_sq1_stable: stable,
        nu4: nu[4].to_string(),
        sq1_nu4: sq(1, &nu[4]).to_string(),
        w9_relation_certified,
        monicity: monicity_battery(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quotients() {
        let r = verify_structure(StructureGroup::SpinH, 8, Execution::Sequential).unwrap();
        assert_eq!(r.quotient_series[..6], [1, 0, 1, 1, 2, 1]);
        assert!(r.matches);
        for g in [StructureGroup::Spin, StructureGroup::SpinC] {
            assert!(verify_structure(g, 12, Execution::Sequential).unwrap().matches, "{g}");
        }
    }

    #[test]
    fn homology_low_degrees() {
        let r = verify_bspinh(10, Execution::Sequential).unwrap();
        assert_eq!(r.sq1_homology[..9], [1, 0, 0, 0, 2, 0, 0, 0, 4]);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.nu4, "w2^2 + w4");
        assert_eq!(r.sq1_nu4, "w5");
    }

    #[test]
    fn monicity_leading_terms() {
        let rows = monicity_battery(2);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.ok), "{rows:?}");
        assert_eq!(rows[3].expected_indecomposable, "w9");
    }
}
