//! Mod-2 cohomology computations: Stiefel–Whitney polynomials with the
//! Steenrod action, Wu classes, the Adem relations and the presentation
//! of `H^*(BSpin^h; Z2)` as a quotient of `H^*(BSO; Z2)`.

mod algebra;
mod bspinh;
mod ideal;
mod linalg;
mod poly;

pub use algebra::{
    adem_battery, adem_reduce, apply_sum, cartan_battery, chi_sq, sq, wu_class, wu_classes, BatteryReport, SteenrodMonomial, SteenrodSum,
};
pub use bspinh::{
    expected_sq1_homology, monicity_battery, structure_ideal, verify_bspinh, verify_structure,
    BspinhReport, MonicityRow, QuotientReport, StructureGroup,
};
pub use ideal::{
    free_algebra_series, ideal_membership, quotient_poincare_series, sq1_homology_series, Ambient,
    Certificate, GradedIdeal, Membership, DEFAULT_DEGREE_CAP,
};
pub use poly::{monomials_of_degree, F2Polynomial, Gen, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SteenrodError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("ideal generator {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("monomial {0} is not in the ambient polynomial ring")]
    OutsideAmbient(String),
}
