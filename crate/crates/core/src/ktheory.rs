//! Coefficient groups of real, complex and symplectic K-theory, the
//! K-groups of `Z_k`-spheres, the `ε`-divided mod-`k` index and algebraic
//! Pontryagin duality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::clifford::Field;
use crate::exec::Execution;
use crate::groups::{AbGroupExpr, CoefficientRing, FGAbelianGroup, Summand};
use crate::modules::{scalar_change, ModuleLabel, ScalarFunctor};
use crate::Rational;

/// Default bound on `|torsion(A)|` for duality enumeration.
pub const DEFAULT_DUALITY_BOUND: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KTheoryError {
    #[error("modulus k must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("Z_k-spheres need m >= 2, got {0}")]
    SphereDimension(u32),
    #[error("the index formula needs n divisible by 4, got n = {0}")]
    NotMultipleOfFour(u32),
    #[error("(integral - eta)/epsilon = {0} is not an integer")]
    NonIntegralIndex(Rational),
    #[error("n = {n} needs the {input}")]
    MissingInput { n: u32, input: &'static str },
    #[error("genus {0} must be an integer here")]
    NonIntegralGenus(Rational),
    #[error("genus {0} must be even when n is divisible by 8")]
    OddGenus(Rational),
    #[error("duality enumeration bound exceeded: |torsion| = {order}, rank = {rank}")]
    BoundExceeded { order: u64, rank: u32 },
    #[error("Ind_R^C on Z_k-spheres is tabulated for m divisible by 4, got {0}")]
    NoComparison(u32),
    #[error("unknown theory '{0}' (expected KO, KU or KSp)")]
    UnknownTheory(String),
}

/// A Bott-periodic cohomology theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theory {
    KO,
    KU,
    KSp,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::KO => "KO",
            Theory::KU => "KU",
            Theory::KSp => "KSp",
        })
    }
}

impl FromStr for Theory {
    type Err = KTheoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ko" => Ok(Theory::KO),
            "ku" => Ok(Theory::KU),
            "ksp" => Ok(Theory::KSp),
            other => Err(KTheoryError::UnknownTheory(other.to_string())),
        }
    }
}

const KO_TABLE: [u8; 8] = [1, 2, 2, 0, 1, 0, 0, 0];

fn code(c: u8) -> AbGroupExpr {
    match c {
        0 => AbGroupExpr::zero(),
        1 => AbGroupExpr::z(),
        m => AbGroupExpr::cyclic(m as u64),
    }
}

/// `h_n(pt) = h^{-n}(pt)` with integer coefficients, any `n ∈ Z`.
pub fn coefficient_group(theory: Theory, n: i64) -> AbGroupExpr {
    match theory {
        Theory::KO => code(KO_TABLE[n.rem_euclid(8) as usize]),
        Theory::KSp => code(KO_TABLE[(n + 4).rem_euclid(8) as usize]),
        Theory::KU => {
            if n.rem_euclid(2) == 0 {
                AbGroupExpr::z()
            } else {
                AbGroupExpr::zero()
            }
        }
    }
}

/// `h_n(pt; Λ) = h_n ⊗ Λ ⊕ Tor(h_{n-1}, Λ)`.
pub fn k_coefficients(theory: Theory, n: i64, ring: CoefficientRing) -> AbGroupExpr {
    coefficient_group(theory, n)
        .tensor(ring)
        .direct_sum(&coefficient_group(theory, n - 1).tor(ring))
}

/// `h_n(pt; Q/Z)` from the long exact sequence of `Z -> Q -> Q/Z`: the
/// cokernel of `h_n -> h_n ⊗ Q` is `(Q/Z)^rank`, the kernel of
/// `h_{n-1} -> h_{n-1} ⊗ Q` is the torsion, and the extension splits since
/// `Q/Z` is divisible.
pub fn k_coefficients_qmodz_les(theory: Theory, n: i64) -> AbGroupExpr {
    let cokernel = AbGroupExpr::from_summands([Summand::QmodZ]).power(coefficient_group(theory, n).rank());
    cokernel.direct_sum(&coefficient_group(theory, n - 1).torsion_part())
}

/// One row per degree of a coefficient table, possibly in parallel.
pub fn k_table(
    theory: Theory,
    ring: CoefficientRing,
    degrees: std::ops::RangeInclusive<i64>,
    exec: Execution,
) -> Vec<(i64, AbGroupExpr)> {
    exec.map(degrees.collect(), |n| (n, k_coefficients(theory, n, ring)))
}

/// The short exact sequence for `h̃^*(S̄^m)` in a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZkSphereReport {
    pub theory: Theory,
    pub m: u32,
    pub k: u64,
    pub degree: i64,
    /// `h^{*-1}(pt)^{k-1}`
    pub boundary_part: AbGroupExpr,
    /// `h^{*-m}(pt) ⊗ Z_k`, carried by the top cell
    pub top_cell_part: AbGroupExpr,
    /// `Tor(h^{*-m+1}(pt), Z_k)`
    pub quotient: AbGroupExpr,
    /// The middle group when the quotient vanishes.
    pub group: Option<AbGroupExpr>,
    pub extension_undetermined: bool,
}

/// `h̃^degree(S̄^m)` for the `Z_k`-sphere, assembled from coefficients.
/// Extensions with a nonzero quotient are flagged, not resolved.
pub fn zk_sphere_group(theory: Theory, m: u32, k: u64, degree: i64) -> Result<ZkSphereReport, KTheoryError> {
    if k < 2 {
        return Err(KTheoryError::BadModulus(k));
    }
    if m < 2 {
        return Err(KTheoryError::SphereDimension(m));
    }
    let zk = CoefficientRing::Zk(k);
    let h_up = |d: i64| coefficient_group(theory, -d);
    let boundary_part = h_up(degree - 1).power((k - 1) as usize);
    let top_cell_part = h_up(degree - m as i64).tensor(zk);
    let quotient = h_up(degree - m as i64 + 1).tor(zk);
    let determined = quotient.is_zero();
    Ok(ZkSphereReport {
        theory,
        m,
        k,
        degree,
        group: determined.then(|| boundary_part.direct_sum(&top_cell_part)),
        boundary_part,
        top_cell_part,
        quotient,
        extension_undetermined: !determined,
    })
}

/// Effect of `Ind_R^C : K̃O(S̄^m) -> K̃U(S̄^m)` on the top-cell generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IndComparison {
    Isomorphism,
    MultiplicationBy(u64),
}

impl fmt::Display for IndComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndComparison::Isomorphism => f.write_str("iso"),
            IndComparison::MultiplicationBy(d) => write!(f, "x{d}"),
        }
    }
}

/// The top cell is generated by the fundamental module of `Cl_m`, so the
/// comparison is the multiplicity of `C ⊗ Δ_m` over the complex one.
pub fn zk_sphere_ind_comparison(m: u32) -> Result<IndComparison, KTheoryError> {
    if m == 0 || m % 4 != 0 {
        return Err(KTheoryError::NoComparison(m));
    }
    let real = ModuleLabel::bold(m, Field::R).expect("m is a positive multiple of 4");
    let image = scalar_change(real, ScalarFunctor::IndRC).expect("Ind_R^C applies to real modules");
    Ok(match image.multiplicity {
        1 => IndComparison::Isomorphism,
        d => IndComparison::MultiplicationBy(d),
    })
}

/// Data entering the mod-`k` index formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkIndexInput {
    pub n: u32,
    pub k: u64,
    pub integral_term: Rational,
    pub eta_term: Rational,
}

/// `1` for `n ≡ 4 (mod 8)`, `2` for `n ≡ 0 (mod 8)`.
pub fn epsilon(n: u32) -> Result<u32, KTheoryError> {
    match n % 8 {
        4 => Ok(1),
        0 => Ok(2),
        _ => Err(KTheoryError::NotMultipleOfFour(n)),
    }
}

/// `((integral - eta) / ε) mod k`.
pub fn zk_index(input: &ZkIndexInput) -> Result<u64, KTheoryError> {
    if input.k < 2 {
        return Err(KTheoryError::BadModulus(input.k));
    }
    let eps = epsilon(input.n)?;
    let q = (&input.integral_term - &input.eta_term) / Rational::from_integer(eps.into());
    if !q.is_integer() {
        return Err(KTheoryError::NonIntegralIndex(q));
    }
    let r = q.to_integer().mod_floor(&BigInt::from(input.k));
    Ok(r.to_u64().expect("residue below k"))
}

/// An element of `KSp^{-n}(pt)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AindValue {
    Integer(BigInt),
    Parity(u8),
    /// The group itself is zero.
    ZeroGroup,
}

impl fmt::Display for AindValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AindValue::Integer(v) => write!(f, "{v}"),
            AindValue::Parity(p) => write!(f, "{p}"),
            AindValue::ZeroGroup => f.write_str("0"),
        }
    }
}

impl Serialize for AindValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn integral_genus(n: u32, genus: Option<&Rational>) -> Result<BigInt, KTheoryError> {
    let g = genus.ok_or(KTheoryError::MissingInput { n, input: "genus value" })?;
    if !g.is_integer() {
        return Err(KTheoryError::NonIntegralGenus(g.clone()));
    }
    Ok(g.to_integer())
}

/// The analytic index in `KSp^{-n}(pt)` from the `Â^h`-genus
/// (`n ≡ 0, 4 mod 8`) or the harmonic-space dimension (`n ≡ 5, 6 mod 8`).
pub fn aind_classify(
    n: u32,
    genus: Option<&Rational>,
    harmonic_dim: Option<u64>,
) -> Result<AindValue, KTheoryError> {
    match n % 8 {
        0 => {
            let g = integral_genus(n, genus)?;
            if g.is_odd() {
                return Err(KTheoryError::OddGenus(genus.cloned().unwrap_or_default()));
            }
            Ok(AindValue::Integer(g / 2))
        }
        4 => Ok(AindValue::Integer(integral_genus(n, genus)?)),
        5 | 6 => {
            let h = harmonic_dim.ok_or(KTheoryError::MissingInput { n, input: "harmonic dimension" })?;
            Ok(AindValue::Parity((h % 2) as u8))
        }
        _ => Ok(AindValue::ZeroGroup),
    }
}

/// `q` mod 1, in `[0, 1)`.
fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

/// Whether multiplication by `q` on `Q` descends to `Q/Z`, i.e. `qZ ⊂ Z`.
pub fn descends_to_qmodz(q: &Rational) -> bool {
    // Z is generated by 1, so qZ ⊂ Z iff q·1 ∈ Z
    (q * Rational::one()).is_integer()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRow {
    pub q: String,
    pub descends: bool,
    pub is_integer: bool,
}

/// Evaluation-map check `A -> Hom(Hom(A, Q/Z), Q/Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub group: FGAbelianGroup,
    pub double_dual: FGAbelianGroup,
    /// Size of the enumeration grid for the torsion part.
    pub candidates: u64,
    /// Candidates that are homomorphisms.
    pub valid: u64,
    pub evaluation_injective: bool,
    pub evaluation_surjective: bool,
    pub evaluation_homomorphism: bool,
    pub free_witnesses: Vec<WitnessRow>,
}

impl DualityReport {
    pub fn verified(&self) -> bool {
        self.double_dual == self.group
            && self.evaluation_injective
            && self.evaluation_surjective
            && self.evaluation_homomorphism
            && self.free_witnesses.iter().all(|w| w.descends == w.is_integer)
    }
}

fn default_witnesses() -> Vec<Rational> {
    [(3, 1), (-2, 1), (0, 1), (1, 2), (2, 3), (-5, 4), (7, 1), (9, 3)]
        .into_iter()
        .map(|(a, b)| Rational::new(a.into(), b.into()))
        .collect()
}

/// Mixed-radix enumeration of tuples with `0 <= t_i < radices[i]`.
fn tuples(radices: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    let total: u64 = radices.iter().product();
    (0..total).map(move |mut idx| {
        radices
            .iter()
            .map(|&r| {
                let t = idx % r;
                idx /= r;
                t
            })
            .collect()
    })
}

/// Verifies `A ≅ Hom(Hom(A, Q/Z), Q/Z)` via evaluation.
///
/// With torsion `Z_{n_1} ⊕ ... ⊕ Z_{n_s}`, the dual characters `χ_i` send
/// the `j`-th generator to `δ_ij / n_i`. A map on the dual is determined by
/// its values on the `χ_i`; these are searched in `(1/n_i^2) Z / Z` and
/// kept when `n_i` kills them. Free summands are checked on witnesses `q`
/// for the lifting criterion `qZ ⊂ Z`.
pub fn dual_group(a: &FGAbelianGroup, bound: u64) -> Result<DualityReport, KTheoryError> {
    let order = a.torsion_order();
    if order > bound || a.rank() > 2 {
        return Err(KTheoryError::BoundExceeded { order, rank: a.rank() });
    }
    let n: Vec<u64> = a.torsion().to_vec();
    let grid: Vec<u64> = n.iter().map(|x| x * x).collect();
    let candidates: u64 = grid.iter().product();

    // valid maps, stored by their values (numerators over n_i^2)
    let valid: std::collections::HashSet<Vec<u64>> = tuples(&grid)
        .filter(|t| t.iter().zip(&n).all(|(v, ni)| (v * ni) % (ni * ni) == 0))
        .collect();

    // ev(a)(χ_i) = a_i / n_i = a_i n_i / n_i^2
    let ev = |elem: &[u64]| -> Vec<u64> {
        elem.iter().zip(&n).map(|(ai, ni)| (ai * ni) % (ni * ni)).collect()
    };
    let elements: Vec<Vec<u64>> = tuples(&n).collect();
    let images: Vec<Vec<u64>> = elements.iter().map(|e| ev(e)).collect();
    let distinct: std::collections::HashSet<&Vec<u64>> = images.iter().collect();
    let evaluation_injective = distinct.len() == elements.len();
    let evaluation_surjective =
        images.iter().all(|im| valid.contains(im)) && distinct.len() == valid.len();

    let mut evaluation_homomorphism = true;
    for (e, im) in elements.iter().zip(&images) {
        for j in 0..n.len() {
            let mut sum = e.clone();
            sum[j] = (sum[j] + 1) % n[j];
            let mut unit = vec![0; n.len()];
            unit[j] = 1;
            let expected: Vec<u64> = im
                .iter()
                .zip(ev(&unit))
                .zip(&grid)
                .map(|((x, y), g)| (x + y) % g)
                .collect();
            evaluation_homomorphism &= ev(&sum) == expected;
        }
    }

    let free_witnesses = if a.rank() > 0 {
        default_witnesses()
            .iter()
            .map(|q| WitnessRow { q: q.to_string(), descends: descends_to_qmodz(q), is_integer: frac(q).is_zero() })
            .collect()
    } else {
        Vec::new()
    };

    Ok(DualityReport {
        group: a.clone(),
        double_dual: FGAbelianGroup::new(a.rank(), structure_of(&valid, &grid)),
        candidates,
        valid: valid.len() as u64,
        evaluation_injective,
        evaluation_surjective,
        evaluation_homomorphism,
        free_witnesses,
    })
}

/// Invariant structure of a finite subgroup of `⊕ Z_{g_i}` (given as a set
/// of tuples), recovered from the sizes of its `p^j`-torsion subgroups.
fn structure_of(set: &std::collections::HashSet<Vec<u64>>, grid: &[u64]) -> Vec<u64> {
    let killed_by = |d: u64| -> usize {
        set.iter()
            .filter(|x| x.iter().zip(grid).all(|(v, g)| (v * d) % g == 0))
            .count()
    };
    let order = set.len() as u64;
    let mut factors = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            // number of cyclic summands of order >= p^j is log_p(|A[p^j]| / |A[p^{j-1}]|)
            let mut prev = 1usize;
            let mut pj = 1u64;
            let mut ge_counts = Vec::new();
            loop {
                pj *= p;
                let now = killed_by(pj);
                if now == prev {
                    break;
                }
                let mut ratio = now / prev;
                let mut c = 0;
                while ratio > 1 {
                    ratio /= p as usize;
                    c += 1;
                }
                ge_counts.push(c);
                prev = now;
            }
            for (j, &c) in ge_counts.iter().enumerate() {
                let next = ge_counts.get(j + 1).copied().unwrap_or(0);
                for _ in 0..(c - next) {
                    factors.push(p.pow(j as u32 + 1));
                }
            }
        }
        p += 1;
    }
    factors
}

/// Duality checks for `Z_n (n <= max_cyclic)` and `Z_a × Z_b (a, b <= max_pair)`.
pub fn dual_battery(max_cyclic: u64, max_pair: u64, exec: Execution) -> Vec<Result<DualityReport, KTheoryError>> {
    let mut groups: Vec<FGAbelianGroup> = (1..=max_cyclic).map(FGAbelianGroup::cyclic).collect();
    for x in 1..=max_pair {
        for y in x..=max_pair {
            groups.push(FGAbelianGroup::new(0, [x, y]));
        }
    }
    groups.push(FGAbelianGroup::free(1));
    groups.push(FGAbelianGroup::new(1, [6]));
    exec.map(groups, |g| dual_group(&g, DEFAULT_DUALITY_BOUND))
}
