//! Exact arithmetic in the real Clifford algebras `Cl_{r,s}` and the
//! matrix-algebra classification of the Clifford-type algebras.
//!
//! Generators `e_1, ..., e_r` square to `-1` and `e_{r+1}, ..., e_{r+s}`
//! square to `+1` (the convention `v^2 = -q(v)` for `q = |x|^2 - |y|^2`).
//! `Cl_n` is `Cl_{n,0}`.

mod classify;
mod graded;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

pub use classify::{classify, classify_indefinite, AlgebraDescriptor, Field, Variant};
pub use graded::{
    graded_tensor_check, graded_tensor_check_with_cap, GradedTensorReport,
    DEFAULT_GRADED_TENSOR_CAP,
};

/// Largest number of generators a [`Signature`] may have.
pub const MAX_GENERATORS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("signature mismatch: Cl_{{{},{}}} vs Cl_{{{},{}}}", .left.r, .left.s, .right.r, .right.s)]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("at most {MAX_GENERATORS} generators are supported, got {0}")]
    TooManyGenerators(u32),
    #[error("generator index {index} out of range for Cl_{{{},{}}}", .signature.r, .signature.s)]
    IndexOutOfRange { index: usize, signature: Signature },
    #[error("blade indices must be strictly ascending")]
    UnorderedIndices,
    #[error("m + n = {total} exceeds the enumeration cap {cap}")]
    TooLarge { total: u32, cap: u32 },
}

/// Signature `(r, s)` of the quadratic form `|x|^2 - |y|^2` on `R^r × R^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub r: u32,
    pub s: u32,
}

impl Signature {
    pub fn new(r: u32, s: u32) -> Result<Self, CliffordError> {
        if r + s > MAX_GENERATORS {
            return Err(CliffordError::TooManyGenerators(r + s));
        }
        Ok(Self { r, s })
    }

    /// The positive definite signature `(n, 0)`.
    pub fn definite(n: u32) -> Result<Self, CliffordError> {
        Self::new(n, 0)
    }

    pub fn generators(&self) -> u32 {
        self.r + self.s
    }

    /// Real dimension `2^(r+s)` of `Cl_{r,s}`.
    pub fn algebra_dimension(&self) -> u64 {
        1u64 << self.generators()
    }

    fn full_mask(&self) -> u32 {
        if self.generators() == 32 {
            u32::MAX
        } else {
            (1u32 << self.generators()) - 1
        }
    }

    /// Mask of the generators squaring to `+1`.
    fn positive_mask(&self) -> u32 {
        self.full_mask() & !((1u64 << self.r) as u32).wrapping_sub(1)
    }
}

/// Basis element `e_{i1} ... e_{ik}` with `i1 < ... < ik`, stored as a bit
/// mask (bit `i-1` set for `e_i`). The empty blade is the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// Builds a blade from strictly ascending 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self, CliffordError> {
        let mut mask = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i <= last {
                return Err(CliffordError::UnorderedIndices);
            }
            if i > MAX_GENERATORS as usize {
                return Err(CliffordError::TooManyGenerators(i as u32));
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Ok(Blade(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Z2-degree: parity of the number of generators.
    pub fn parity(self) -> u32 {
        self.grade() & 1
    }

    /// 1-based ascending index list.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// Product of two blades: the sign and the resulting blade.
    pub fn product(self, other: Blade, signature: &Signature) -> (i8, Blade) {
        let mut sign = reorder_sign(self.0, other.0);
        let common = self.0 & other.0;
        // e_i^2 = -1 for the first r generators
        if (common & !signature.positive_mask()).count_ones() & 1 == 1 {
            sign = -sign;
        }
        (sign, Blade(self.0 ^ other.0))
    }

    /// Sign picked up by reversing the order of the generators,
    /// `(-1)^{k(k-1)/2}`.
    pub fn reversal_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sign from moving every generator of `b` past the larger generators of
/// `a` so the concatenation `a b` is sorted.
fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut swaps = 0u32;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// An exact linear combination of blades in `Cl_{r,s}`.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    signature: Signature,
    terms: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero(signature: Signature) -> Self {
        Self { signature, terms: BTreeMap::new() }
    }

    pub fn scalar(signature: Signature, value: Rational) -> Self {
        Self::from_terms(signature, [(Blade::UNIT, value)])
            .expect("the unit blade is valid in every signature")
    }

    pub fn one(signature: Signature) -> Self {
        Self::scalar(signature, Rational::one())
    }

    /// The generator `e_i`, `1 <= i <= r + s`.
    pub fn generator(signature: Signature, i: usize) -> Result<Self, CliffordError> {
        if i == 0 || i > signature.generators() as usize {
            return Err(CliffordError::IndexOutOfRange { index: i, signature });
        }
        Self::from_terms(signature, [(Blade(1 << (i - 1)), Rational::one())])
    }

    /// The basis element `e_{i1} ... e_{ik}` for ascending indices.
    pub fn blade(signature: Signature, indices: &[usize]) -> Result<Self, CliffordError> {
        let blade = Blade::from_indices(indices)?;
        Self::from_terms(signature, [(blade, Rational::one())])
    }

    pub fn from_terms(
        signature: Signature,
        terms: impl IntoIterator<Item = (Blade, Rational)>,
    ) -> Result<Self, CliffordError> {
        let mut out = Self::zero(signature);
        for (blade, c) in terms {
            if blade.0 & !signature.full_mask() != 0 {
                let index = 32 - blade.0.leading_zeros() as usize;
                return Err(CliffordError::IndexOutOfRange { index, signature });
            }
            out.add_term(blade, c);
        }
        Ok(out)
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(parity)` when every stored blade has the same Z2-degree.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|b| b.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    fn add_term(&mut self, blade: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), CliffordError> {
        if self.signature != other.signature {
            return Err(CliffordError::SignatureMismatch {
                left: self.signature,
                right: other.signature,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.signature);
        for (b, c) in &self.terms {
            out.add_term(*b, c * k);
        }
        out
    }

    /// Clifford product `self · other`.
    pub fn product(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let mut out = Self::zero(self.signature);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, blade) = a.product(*b, &self.signature);
                let c = ca * cb;
                out.add_term(blade, if sign < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    /// Anti-automorphism reversing the order of generators in every blade.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.signature);
        for (b, c) in &self.terms {
            out.add_term(*b, if b.reversal_sign() < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// The Z2-grading automorphism (`e_i -> -e_i`).
    pub fn grade_involution(&self) -> Self {
        let mut out = Self::zero(self.signature);
        for (b, c) in &self.terms {
            out.add_term(*b, if b.parity() == 1 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Projection onto the Z2-degree `parity` part.
    pub fn graded_part(&self, parity: u32) -> Self {
        let mut out = Self::zero(self.signature);
        for (b, c) in &self.terms {
            if b.parity() == parity & 1 {
                out.add_term(*b, c.clone());
            }
        }
        out
    }

    /// `Some(q)` when the element is the scalar `q`.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Blade::UNIT).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if *b == Blade::UNIT {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{abs}*{b}")?;
            }
        }
        Ok(())
    }
}

/// Clifford product; free-function form of [`CliffordElement::product`].
pub fn blade_mul(a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement, CliffordError> {
    a.product(b)
}

/// The oriented volume element `ω_{r,s} = e_1 e_2 ... e_{r+s}`.
pub fn volume_element(signature: Signature) -> CliffordElement {
    CliffordElement::from_terms(signature, [(Blade(signature.full_mask()), Rational::one())])
        .expect("the top blade lies in the signature")
}

/// Closed-form sign of `ω_{r,s}^2`: `(-1)^{((r+s)^2 + (r-s))/2}`.
pub fn volume_square_sign(signature: Signature) -> i8 {
    let r = signature.r as i64;
    let s = signature.s as i64;
    let exponent = ((r + s) * (r + s) + (r - s)) / 2;
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
