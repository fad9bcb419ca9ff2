//! Z2-graded Clifford modules: fundamental dimensions, the groups
//! `N̂_n(K)`, scalar change between R, C and H, and graded tensor identities.
//!
//! Modules are tracked as labels plus real dimensions only.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clifford::{classify, AlgebraDescriptor, Field, Variant};
use crate::groups::AbGroupExpr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("graded fundamental modules are indexed from n = 1")]
    ZeroIndex,
    #[error("sign {sign:?} is not allowed for the {field} module with n = {n}")]
    BadSign { n: u32, field: Field, sign: Option<Sign> },
    #[error("{functor} does not apply to a module over {field}")]
    InapplicableFunctor { functor: ScalarFunctor, field: Field },
    #[error("scalar change is only tabulated for n divisible by 4, got n = {0}")]
    NotMultipleOfFour(u32),
    #[error("no graded tensor identity matches {0} and {1}")]
    UnmatchedProduct(ModuleLabel, ModuleLabel),
    #[error("bigraded groups are tabulated over R and H only, got {0}")]
    BigradedField(Field),
    #[error("bimodule decompositions exist for n mod 8 in {{0, 4, 5, 6}}, got n = {0}")]
    NoBimoduleDecomposition(u32),
}

/// Eigenvalue of the volume element on the degree-0 part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Whether the fundamental graded module over `field` at level `n` splits
/// into a `±` pair.
pub fn has_sign(n: u32, field: Field) -> bool {
    match field {
        Field::R | Field::H => n % 4 == 0,
        Field::C => n % 2 == 0,
    }
}

/// A fundamental Z2-graded module `Δ_{n,K}` or `Δ^±_{n,K}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub n: u32,
    pub field: Field,
    pub graded: bool,
    pub sign: Option<Sign>,
}

impl ModuleLabel {
    pub fn new(n: u32, field: Field, sign: Option<Sign>) -> Result<Self, ModuleError> {
        if n == 0 {
            return Err(ModuleError::ZeroIndex);
        }
        if sign.is_some() != has_sign(n, field) {
            return Err(ModuleError::BadSign { n, field, sign });
        }
        Ok(Self { n, field, graded: true, sign })
    }

    /// The distinguished choice among `Δ^±`: `+` for `n ≡ 0 (8)` and for
    /// complex modules, `-` for `n ≡ 4 (8)`.
    pub fn bold(n: u32, field: Field) -> Result<Self, ModuleError> {
        let sign = has_sign(n, field).then(|| match field {
            Field::C => Sign::Plus,
            _ if n % 8 == 0 => Sign::Plus,
            _ => Sign::Minus,
        });
        Self::new(n, field, sign)
    }

    pub fn real_dimension(&self) -> u64 {
        fundamental_dimension(self.n, self.field).expect("labels have n >= 1")
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            None => "",
            Some(Sign::Plus) => "+",
            Some(Sign::Minus) => "-",
        };
        write!(f, "Delta{sign}_{{{},{}}}", self.n, self.field)
    }
}

const BASE_DIMS: [[u64; 8]; 3] = [
    [2, 4, 8, 8, 16, 16, 16, 16],
    [4, 4, 8, 8, 16, 16, 32, 32],
    [8, 8, 8, 8, 16, 32, 64, 64],
];

fn field_row(field: Field) -> usize {
    match field {
        Field::R => 0,
        Field::C => 1,
        Field::H => 2,
    }
}

/// Real dimension `d_{n,K}` of the fundamental graded `K`-module over `Cl_n`.
pub fn fundamental_dimension(n: u32, field: Field) -> Result<u64, ModuleError> {
    if n == 0 {
        return Err(ModuleError::ZeroIndex);
    }
    let (periods, rem) = ((n - 1) / 8, (n - 1) % 8);
    Ok(BASE_DIMS[field_row(field)][rem as usize] * 16u64.pow(periods))
}

/// The algebra whose ungraded modules are the graded `K`-modules over `Cl_n`.
fn ungraded_model(n: u32, field: Field) -> AlgebraDescriptor {
    let variant = match field {
        Field::R => Variant::Cl,
        Field::C => Variant::CCl,
        Field::H => Variant::Clh,
    };
    classify(n - 1, variant)
}

/// Real dimension of an irreducible ungraded module of a descriptor.
fn irreducible_dimension(a: &AlgebraDescriptor) -> u64 {
    a.size * a.field.real_dimension()
}

/// `d_{n,K}` recomputed as twice the irreducible ungraded dimension over
/// `Cl_{n-1}` with `K`-structure, read off the algebra classification.
pub fn fundamental_dimension_from_classification(n: u32, field: Field) -> Result<u64, ModuleError> {
    if n == 0 {
        return Err(ModuleError::ZeroIndex);
    }
    Ok(2 * irreducible_dimension(&ungraded_model(n, field)))
}

const NHAT_R: [u8; 8] = [2, 2, 0, 1, 0, 0, 0, 1];
const NHAT_H: [u8; 8] = [0, 0, 0, 1, 2, 2, 0, 1];

fn code_to_group(code: u8) -> AbGroupExpr {
    match code {
        0 => AbGroupExpr::zero(),
        1 => AbGroupExpr::z(),
        m => AbGroupExpr::cyclic(m as u64),
    }
}

/// `N̂_n(K) = M̂_n(K) / i* M̂_{n+1}(K)`, period 8 over R and H, 2 over C.
pub fn ngroup(n: u32, field: Field) -> AbGroupExpr {
    // column j of the table is n ≡ j + 1 (mod 8)
    let col = ((n + 7) % 8) as usize;
    match field {
        Field::R => code_to_group(NHAT_R[col]),
        Field::H => code_to_group(NHAT_H[col]),
        Field::C => {
            if n % 2 == 0 {
                AbGroupExpr::z()
            } else {
                AbGroupExpr::zero()
            }
        }
    }
}

/// Module families whose Grothendieck groups can be recomputed from the
/// algebra classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleFamily {
    Real,
    Complex,
    Quaternionic,
    /// Complex modules over `Cl^h_n`.
    ComplexH,
}

impl ModuleFamily {
    fn variant(self) -> Variant {
        match self {
            ModuleFamily::Real => Variant::Cl,
            ModuleFamily::Complex => Variant::CCl,
            ModuleFamily::Quaternionic => Variant::Clh,
            ModuleFamily::ComplexH => Variant::CClh,
        }
    }

    /// (number of irreducible graded modules, their real dimension)
    fn level(self, n: u32) -> (u64, u64) {
        if n == 0 {
            // Cl_0 is concentrated in degree 0: the graded irreducibles are
            // the ungraded irreducibles placed in degree 0 or 1.
            let a = classify(0, self.variant());
            return (2 * a.blocks(), irreducible_dimension(&a));
        }
        let a = classify(n - 1, self.variant());
        (a.blocks(), 2 * irreducible_dimension(&a))
    }
}

/// `N̂_n` recomputed from the semisimple structure of the algebras at
/// levels `n` and `n + 1`: the cokernel of restriction along
/// `Cl_n ⊂ Cl_{n+1}`.
pub fn ngroup_from_classification(n: u32, family: ModuleFamily) -> AbGroupExpr {
    let (count, dim) = family.level(n);
    let (_, upper_dim) = family.level(n + 1);
    if n == 0 {
        // M̂_0 = Z+Z (degree-0 and degree-1 copies); restriction from level 1
        // hits their sum.
        return AbGroupExpr::z().power((count / 2) as usize);
    }
    match count {
        // one irreducible: the image is generated by upper_dim / dim times it
        1 => {
            let ratio = upper_dim / dim;
            if ratio == 1 {
                AbGroupExpr::zero()
            } else {
                AbGroupExpr::cyclic(ratio)
            }
        }
        // two irreducibles Δ^±: an irreducible from above restricts to Δ^+ + Δ^-
        _ => AbGroupExpr::z(),
    }
}

/// The group `M̂_0(K) = Z+Z`.
pub fn mgroup_zero() -> AbGroupExpr {
    AbGroupExpr::z().power(2)
}

/// Index `(r, s)` for `N̂_{r,s}(K)` with `K` in `{R, H}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BigradedIndex {
    pub r: u32,
    pub s: u32,
    pub field: Field,
}

/// `N̂_{r,s}(K)`, reduced by `(1,1)`-periodicity and, over H, by the shift
/// `N̂_{r+4,s}(H) = N̂_{r,s}(R)`.
pub fn ngroup_bigraded(idx: BigradedIndex) -> Result<AbGroupExpr, ModuleError> {
    let diff = idx.r as i64 - idx.s as i64;
    let level = match idx.field {
        Field::R => diff,
        Field::H => diff - 4,
        Field::C => return Err(ModuleError::BigradedField(Field::C)),
    };
    Ok(ngroup(level.rem_euclid(8) as u32, Field::R))
}

/// Restriction and induction of scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarFunctor {
    /// `C ⊗_R -`
    IndRC,
    /// underlying C-module of an H-module
    ResCH,
    /// underlying R-module of a C-module
    ResRC,
    /// `H ⊗_C -`
    IndCH,
}

impl ScalarFunctor {
    fn endpoints(self) -> (Field, Field) {
        match self {
            ScalarFunctor::IndRC => (Field::R, Field::C),
            ScalarFunctor::ResCH => (Field::H, Field::C),
            ScalarFunctor::ResRC => (Field::C, Field::R),
            ScalarFunctor::IndCH => (Field::C, Field::H),
        }
    }

    fn is_induction(self) -> bool {
        matches!(self, ScalarFunctor::IndRC | ScalarFunctor::IndCH)
    }
}

impl fmt::Display for ScalarFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarFunctor::IndRC => "Ind_R^C",
            ScalarFunctor::ResCH => "Res_C^H",
            ScalarFunctor::ResRC => "Res_R^C",
            ScalarFunctor::IndCH => "Ind_C^H",
        })
    }
}

/// `multiplicity` copies of `label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModuleClass {
    pub label: ModuleLabel,
    pub multiplicity: u64,
}

impl ModuleClass {
    pub fn real_dimension(&self) -> u64 {
        self.multiplicity * self.label.real_dimension()
    }
}

/// Image of a signed fundamental module under a change of scalars, for
/// `n ≡ 0 (mod 4)`.
///
/// The sign flips exactly when `n ≡ 4 (mod 8)`. When the real dimensions
/// of source and target fundamental modules do not match the functor's
/// effect, the image is a multiple of a fundamental module.
pub fn scalar_change(label: ModuleLabel, functor: ScalarFunctor) -> Result<ModuleClass, ModuleError> {
    let (from, to) = functor.endpoints();
    if label.field != from {
        return Err(ModuleError::InapplicableFunctor { functor, field: label.field });
    }
    if label.n % 4 != 0 {
        return Err(ModuleError::NotMultipleOfFour(label.n));
    }
    let sign = label.sign.expect("labels with n divisible by 4 carry a sign");
    let sign = if label.n % 8 == 4 { sign.flip() } else { sign };
    let target = ModuleLabel::new(label.n, to, Some(sign))?;
    let source_dim = label.real_dimension();
    let image_dim = if functor.is_induction() {
        source_dim * to.real_dimension() / from.real_dimension()
    } else {
        source_dim
    };
    Ok(ModuleClass { label: target, multiplicity: image_dim / target.real_dimension() })
}

/// Which graded tensor identity produced a [`graded_product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductFamily {
    /// `Δ^+_{8,R} ⊗̂ Δ_{n,K} = Δ_{n+8,K}`
    EightfoldPeriodicity,
    /// `Δ_{n,R} ⊗̂ Δ^+_{4,H} = Δ_{n+4,H}`
    RealTimesQuaternionic,
    /// `Δ_{n,H} ⊗̂ Δ^+_{4,H} = Δ_{n+4,R} ⊗ R^4`
    QuaternionicTimesQuaternionic,
}

fn product_sign(n: u32, field: Field, a: Option<Sign>, b: Option<Sign>) -> Option<Sign> {
    // the volume element of the product is the product of volume elements
    has_sign(n, field).then(|| a.unwrap_or(Sign::Plus).times(b.unwrap_or(Sign::Plus)))
}

/// Graded tensor product over R of two fundamental modules, when one of
/// the identities with `Δ^+_{8,R}` or `Δ^+_{4,H}` applies.
pub fn graded_product(
    a: ModuleLabel,
    b: ModuleLabel,
) -> Result<(ModuleClass, ProductFamily), ModuleError> {
    let plus = Some(Sign::Plus);
    let build = |n: u32, field: Field, mult: u64, family| -> Result<_, ModuleError> {
        let label = ModuleLabel::new(n, field, product_sign(n, field, a.sign, b.sign))?;
        Ok((ModuleClass { label, multiplicity: mult }, family))
    };
    if a.n == 8 && a.field == Field::R && a.sign == plus && b.field != Field::C {
        return build(b.n + 8, b.field, 1, ProductFamily::EightfoldPeriodicity);
    }
    if b.n == 4 && b.field == Field::H && b.sign == plus {
        match a.field {
            Field::R => return build(a.n + 4, Field::H, 1, ProductFamily::RealTimesQuaternionic),
            Field::H => {
                return build(a.n + 4, Field::R, 4, ProductFamily::QuaternionicTimesQuaternionic)
            }
            Field::C => {}
        }
    }
    Err(ModuleError::UnmatchedProduct(a, b))
}

/// Factorization `Cl^h_n ≅ (1/2 if n ≡ 0) Δ ⊗_K Δ̃` of `Cl^h_n` as a bimodule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BimoduleReport {
    pub n: u32,
    /// Field the tensor product is taken over.
    pub tensor_field: Field,
    /// Whether the 1/2 prefactor appears.
    pub half: bool,
    pub left_dimension: u64,
    pub right_dimension: u64,
    pub algebra_dimension: u64,
    /// `factor · left · right / dim_R(tensor_field)`
    pub tensor_dimension: u64,
    /// The fundamental module dimension agrees with the tabulated value.
    pub module_dimension_consistent: bool,
}

impl BimoduleReport {
    pub fn verified(&self) -> bool {
        self.module_dimension_consistent && self.tensor_dimension == self.algebra_dimension
    }
}

/// Dimension audit of the bimodule decomposition of `Cl^h_n`.
pub fn bimodule_decomposition(n: u32) -> Result<BimoduleReport, ModuleError> {
    let (tensor_field, half) = match n % 8 {
        0 => (Field::C, true),
        4 => (Field::R, false),
        5 => (Field::C, false),
        6 => (Field::H, false),
        _ => return Err(ModuleError::NoBimoduleDecomposition(n)),
    };
    let (module_dim, consistent) = if half {
        // complex graded module over Cl^h_n
        if n == 0 {
            (irreducible_dimension(&classify(0, Variant::CClh)), true)
        } else {
            let d = 2 * irreducible_dimension(&classify(n - 1, Variant::CClh));
            (d, d == 2 * fundamental_dimension(n, Field::C)?)
        }
    } else {
        let d = 2 * irreducible_dimension(&classify(n - 1, Variant::Clh));
        (d, d == fundamental_dimension(n, Field::H)?)
    };
    let product = module_dim * module_dim / tensor_field.real_dimension();
    let tensor_dimension = if half { product / 2 } else { product };
    Ok(BimoduleReport {
        n,
        tensor_field,
        half,
        left_dimension: module_dim,
        right_dimension: module_dim,
        algebra_dimension: classify(n, Variant::Clh).real_dimension(),
        tensor_dimension,
        module_dimension_consistent: consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Field::*;

    fn label(n: u32, field: Field, sign: Option<Sign>) -> ModuleLabel {
        ModuleLabel::new(n, field, sign).unwrap()
    }

    #[test]
    fn table_three() {
        assert_eq!(fundamental_dimension(3, H).unwrap(), 8);
        assert_eq!(fundamental_dimension(7, C).unwrap(), 32);
        assert_eq!(fundamental_dimension(12, C).unwrap(), 128);
        assert!(fundamental_dimension(0, R).is_err());
        for n in 1..=32 {
            for k in [R, C, H] {
                assert_eq!(
                    fundamental_dimension(n, k).unwrap(),
                    fundamental_dimension_from_classification(n, k).unwrap(),
                    "n={n} {k}"
                );
            }
        }
    }

    #[test]
    fn table_two() {
        assert_eq!(ngroup(5, H).to_string(), "Z2");
        assert_eq!(ngroup(7, H).to_string(), "0");
        assert_eq!(ngroup(20, R).to_string(), "Z");
        assert_eq!(ngroup(0, R).to_string(), "Z");
        assert_eq!(mgroup_zero().to_string(), "Z+Z");
        for n in 0..24 {
            assert_eq!(ngroup(n, R), ngroup_from_classification(n, ModuleFamily::Real), "R n={n}");
            assert_eq!(ngroup(n, H), ngroup_from_classification(n, ModuleFamily::Quaternionic), "H n={n}");
            assert_eq!(ngroup(n, C), ngroup_from_classification(n, ModuleFamily::Complex), "C n={n}");
            assert_eq!(ngroup(n, C), ngroup_from_classification(n, ModuleFamily::ComplexH), "Ch n={n}");
        }
    }

    #[test]
    fn bigraded() {
        let g = |r, s, field| ngroup_bigraded(BigradedIndex { r, s, field }).unwrap().to_string();
        assert_eq!(g(1, 1, R), "Z");
        assert_eq!(g(5, 1, R), "Z");
        assert_eq!(g(4, 0, H), "Z");
        assert_eq!(g(1, 0, R), "Z2");
        assert!(ngroup_bigraded(BigradedIndex { r: 0, s: 0, field: C }).is_err());
    }

    #[test]
    fn scalar_change_examples() {
        let r = scalar_change(label(4, H, Some(Sign::Plus)), ScalarFunctor::ResCH).unwrap();
        assert_eq!((r.label, r.multiplicity), (label(4, C, Some(Sign::Minus)), 1));
        let r = scalar_change(label(8, R, Some(Sign::Plus)), ScalarFunctor::IndRC).unwrap();
        assert_eq!((r.label, r.multiplicity), (label(8, C, Some(Sign::Plus)), 1));
        let r = scalar_change(label(12, H, Some(Sign::Minus)), ScalarFunctor::ResCH).unwrap();
        assert_eq!(r.label, label(12, C, Some(Sign::Plus)));
        let r = scalar_change(label(4, C, Some(Sign::Minus)), ScalarFunctor::ResRC).unwrap();
        assert_eq!((r.label, r.multiplicity), (label(4, R, Some(Sign::Plus)), 1));
        assert!(scalar_change(label(4, R, Some(Sign::Plus)), ScalarFunctor::ResCH).is_err());
        assert!(matches!(
            scalar_change(label(2, C, Some(Sign::Plus)), ScalarFunctor::ResRC),
            Err(ModuleError::NotMultipleOfFour(2))
        ));
    }

    #[test]
    fn res_after_ind_doubles() {
        for n in (4..=32).step_by(4) {
            for sign in [Sign::Plus, Sign::Minus] {
                let x = label(n, R, Some(sign));
                let up = scalar_change(x, ScalarFunctor::IndRC).unwrap();
                let down = scalar_change(up.label, ScalarFunctor::ResRC).unwrap();
                assert_eq!(up.multiplicity * down.real_dimension(), 2 * x.real_dimension());
            }
        }
    }

    #[test]
    fn products() {
        let (p, fam) = graded_product(label(8, R, Some(Sign::Plus)), label(5, H, None)).unwrap();
        assert_eq!((p.label, fam), (label(13, H, None), ProductFamily::EightfoldPeriodicity));
        let (p, _) = graded_product(label(3, R, None), label(4, H, Some(Sign::Plus))).unwrap();
        assert_eq!(p.label, label(7, H, None));
        assert_eq!(8 * 8, p.real_dimension());
        let (p, _) = graded_product(label(1, H, None), label(4, H, Some(Sign::Plus))).unwrap();
        assert_eq!((p.label, p.multiplicity), (label(5, R, None), 4));
        let (p, _) = graded_product(label(8, R, Some(Sign::Plus)), label(4, R, Some(Sign::Minus))).unwrap();
        assert_eq!(p.label, label(12, R, Some(Sign::Minus)));
        assert!(graded_product(label(3, R, None), label(3, R, None)).is_err());
    }

    #[test]
    fn product_dimensions_multiply() {
        for n in 1..=16 {
            let mut pairs = Vec::new();
            for k in [R, H] {
                pairs.push((label(8, R, Some(Sign::Plus)), ModuleLabel::bold(n, k).unwrap()));
                pairs.push((ModuleLabel::bold(n, k).unwrap(), label(4, H, Some(Sign::Plus))));
            }
            for (a, b) in pairs {
                let (p, _) = graded_product(a, b).unwrap();
                assert_eq!(a.real_dimension() * b.real_dimension(), p.real_dimension(), "{a} {b}");
            }
        }
    }

    #[test]
    fn bimodules() {
        let r = bimodule_decomposition(4).unwrap();
        assert!(r.verified());
        assert_eq!((r.algebra_dimension, r.left_dimension, r.tensor_field), (64, 8, R));
        let r = bimodule_decomposition(5).unwrap();
        assert!(r.verified());
        assert_eq!((r.algebra_dimension, r.left_dimension), (128, 16));
        let r = bimodule_decomposition(8).unwrap();
        assert!(r.verified() && r.half);
        assert_eq!(r.algebra_dimension, 1024);
        for n in (0..40).filter(|n| [0, 4, 5, 6].contains(&(n % 8))) {
            assert!(bimodule_decomposition(n).unwrap().verified(), "n={n}");
        }
        assert!(bimodule_decomposition(3).is_err());
    }

    #[test]
    fn bad_labels() {
        assert!(ModuleLabel::new(4, R, None).is_err());
        assert!(ModuleLabel::new(3, R, Some(Sign::Plus)).is_err());
        assert!(ModuleLabel::new(2, C, None).is_err());
        assert_eq!(ModuleLabel::bold(4, H).unwrap().sign, Some(Sign::Minus));
    }
}
