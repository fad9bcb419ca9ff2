//! Truncated power series with exact rational coefficients, and the
//! characteristic-class computations built from them: the Â and
//! `2cosh(√p/2)` series, the genus of 4-manifolds and the pairing matrix on
//! quaternionic projective spaces.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exec::Execution;
use crate::Rational;

/// Default cohomological degree up to which series are kept.
pub const DEFAULT_TRUNCATION_DEGREE: u32 = 48;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series variables have different degrees ({0} vs {1})")]
    DegreeMismatch(u32, u32),
    #[error("series truncations differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("constant term {0} is not invertible")]
    NonUnitConstant(Rational),
    #[error("substituted series must have zero constant term")]
    NonZeroConstant,
    #[error("extracted coefficient {0} is not an integer")]
    NonIntegral(Rational),
    #[error("variable degree must be positive")]
    ZeroDegree,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// `Σ_{k<=trunc} c_k t^k` where `t` has cohomological degree
/// `variable_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    variable_degree: u32,
    coeffs: Vec<Rational>,
}

impl GradedSeries {
    /// The zero series keeping powers `0..=trunc`.
    pub fn zero(variable_degree: u32, trunc: usize) -> Result<Self, SeriesError> {
        if variable_degree == 0 {
            return Err(SeriesError::ZeroDegree);
        }
        Ok(Self { variable_degree, coeffs: vec![Rational::zero(); trunc + 1] })
    }

    /// Takes the given coefficients, padding with zeros or dropping terms
    /// beyond `trunc`.
    pub fn from_coeffs(
        variable_degree: u32,
        coeffs: impl IntoIterator<Item = Rational>,
        trunc: usize,
    ) -> Result<Self, SeriesError> {
        let mut out = Self::zero(variable_degree, trunc)?;
        for (slot, c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        Ok(out)
    }

    fn from_fn(variable_degree: u32, trunc: usize, f: impl Fn(usize) -> Rational) -> Self {
        Self { variable_degree, coeffs: (0..=trunc).map(f).collect() }
    }

    pub fn constant(variable_degree: u32, c: Rational, trunc: usize) -> Result<Self, SeriesError> {
        Self::from_coeffs(variable_degree, [c], trunc)
    }

    pub fn variable_degree(&self) -> u32 {
        self.variable_degree
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn like(&self, other: &Self) -> Result<(), SeriesError> {
        if self.variable_degree != other.variable_degree {
            return Err(SeriesError::DegreeMismatch(self.variable_degree, other.variable_degree));
        }
        if self.trunc() != other.trunc() {
            return Err(SeriesError::TruncationMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    /// Same series with a different number of stored powers.
    pub fn retruncate(&self, trunc: usize) -> Self {
        Self::from_fn(self.variable_degree, trunc, |k| self.coeff(k))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.like(other)?;
        Ok(Self::from_fn(self.variable_degree, self.trunc(), |k| &self.coeffs[k] + &other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_fn(self.variable_degree, self.trunc(), |i| &self.coeffs[i] * k)
    }

    /// `t -> λ t`.
    pub fn rescale_variable(&self, lambda: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= lambda;
        }
        Self { variable_degree: self.variable_degree, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.like(other)?;
        let n = self.trunc();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { variable_degree: self.variable_degree, coeffs })
    }

    pub fn pow(&self, e: u32) -> Result<Self, SeriesError> {
        let mut acc = Self::constant(self.variable_degree, Rational::one(), self.trunc())?;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { variable_degree: self.variable_degree, coeffs: out })
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let trunc = inner.trunc();
        let mut acc = Self::zero(inner.variable_degree, trunc)?;
        let mut power = Self::constant(inner.variable_degree, Rational::one(), trunc)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > trunc {
                break;
            }
            if !c.is_zero() {
                acc = acc.add(&power.scale(c))?;
            }
            power = power.mul(inner)?;
        }
        Ok(acc)
    }

    /// For an even series `f(t) = Σ a_{2k} t^{2k}`, the series
    /// `Σ a_{2k} s^k`, that is `f(√s)`, without forming a square root.
    pub fn compose_even(&self, inner: &Self) -> Result<Self, SeriesError> {
        let halved: Vec<Rational> = self.coeffs.iter().step_by(2).cloned().collect();
        let outer = Self {
            variable_degree: 2 * self.variable_degree,
            coeffs: halved,
        };
        outer.compose(inner)
    }

    /// Whether every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

impl std::fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `sinh(a t)/t = Σ a^{2k+1} t^{2k} / (2k+1)!` in a degree-2 variable.
fn sinh_over_t(a: i64, trunc: usize) -> GradedSeries {
    GradedSeries::from_fn(2, trunc, |k| {
        if k % 2 == 1 {
            return Rational::zero();
        }
        Rational::new(BigInt::from(a).pow(k as u32 + 1), factorial(k as u32 + 1))
    })
}

/// `F(x) = x / (2 sinh(x/2))`, the Â-factor of one Chern root `x`.
pub fn a_hat_series(trunc: usize) -> GradedSeries {
    // sinh(x/2)/(x/2) = Σ x^{2k} / (4^k (2k+1)!)
    let s = GradedSeries::from_fn(2, trunc, |k| {
        if k % 2 == 1 {
            return Rational::zero();
        }
        Rational::new(BigInt::one(), BigInt::from(2).pow(k as u32) * factorial(k as u32 + 1))
    });
    s.reciprocal().expect("constant term is 1")
}

/// `2cosh(√p/2) = 2 Σ p^k / (4^k (2k)!)` in the degree-4 variable `p`.
pub fn cosh_sqrt_series(trunc: usize) -> GradedSeries {
    GradedSeries::from_fn(4, trunc, |k| {
        Rational::new(BigInt::from(2), BigInt::from(4).pow(k as u32) * factorial(2 * k as u32))
    })
}

/// Orientation of the auxiliary bundle `Λ^±` on a 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    fn sign(self) -> i64 {
        match self {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        }
    }
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+" | "plus" => Ok(Orientation::Plus),
            "-" | "minus" => Ok(Orientation::Minus),
            other => Err(format!("orientation must be + or -, got '{other}'")),
        }
    }
}

/// How top-degree classes are evaluated on a model manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Integration {
    /// Point: degree-0 part.
    Point,
    /// `HP^j` inside `CP^{2j+1}`: coefficient of `x^{2j}`.
    QuaternionicProjective { j: u32 },
    /// Degree-4 class `a p_1 + b e` evaluates to `3 a σ + b χ`.
    FourManifold { signature: i64, euler: i64 },
}

/// A closed manifold together with its integration functional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedManifoldModel {
    pub name: String,
    pub dim: u32,
    pub integration: Integration,
}

/// A degree-4 class `p1 · p_1 + e · e` on a 4-manifold.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FourClass {
    pub p1: Rational,
    pub e: Rational,
}

impl ClosedManifoldModel {
    pub fn point() -> Self {
        Self { name: "pt".into(), dim: 0, integration: Integration::Point }
    }

    pub fn quaternionic_projective(j: u32) -> Self {
        Self { name: format!("HP{j}"), dim: 4 * j, integration: Integration::QuaternionicProjective { j } }
    }

    pub fn four_manifold(name: impl Into<String>, signature: i64, euler: i64) -> Self {
        Self { name: name.into(), dim: 4, integration: Integration::FourManifold { signature, euler } }
    }

    /// Evaluates a series in a degree-2 root variable (point or `HP^j`).
    pub fn integrate_series(&self, class: &GradedSeries) -> Option<Rational> {
        match self.integration {
            Integration::Point => Some(class.coeff(0)),
            Integration::QuaternionicProjective { j } => Some(class.coeff(2 * j as usize)),
            Integration::FourManifold { .. } => None,
        }
    }

    /// Evaluates a degree-4 class on a 4-manifold.
    pub fn integrate_four_class(&self, class: &FourClass) -> Option<Rational> {
        match self.integration {
            Integration::FourManifold { signature, euler } => {
                Some(&class.p1 * rat(3 * signature) + &class.e * rat(euler))
            }
            _ => None,
        }
    }
}

/// `Â^h(M^±) = (σ ± χ)/2`.
pub fn genus_4manifold(signature: i64, euler: i64, orientation: Orientation) -> Rational {
    Rational::new(BigInt::from(signature + orientation.sign() * euler), BigInt::from(2))
}

/// The same genus computed by multiplying `2cosh(√p/2)` with
/// `p = p_1 ± 2e` against `Â(M)` and integrating the degree-4 part.
pub fn genus_4manifold_series(signature: i64, euler: i64, orientation: Orientation) -> Rational {
    let cosh = cosh_sqrt_series(1);
    // degree-4 part of Â(M) = F(x_1)F(x_2) is c·(x_1² + x_2²) = c·p_1
    let a_hat = a_hat_series(2);
    let top = FourClass {
        p1: &cosh.coeff(0) * a_hat.coeff(2) + cosh.coeff(1),
        e: cosh.coeff(1) * rat(2 * orientation.sign()),
    };
    ClosedManifoldModel::four_manifold("M", signature, euler)
        .integrate_four_class(&top)
        .expect("four-manifold model")
}

/// `∫_{HP^j} Â(HP^j) ch(ξ_i) = C(i+j+1, i-j)`.
pub fn hp_pairing_binomial(i: u32, j: u32) -> BigInt {
    binomial(i as i64 + j as i64 + 1, i as i64 - j as i64)
}

/// The pairing as the `x^{2j}` coefficient of
/// `sinh((i+1)x)/sinh(x) · F(x)^{2j+2} / F(2x)`.
pub fn hp_pairing_residue(i: u32, j: u32) -> Result<BigInt, SeriesError> {
    let trunc = 2 * j as usize;
    let ch = sinh_over_t(i as i64 + 1, trunc).mul(&sinh_over_t(1, trunc).reciprocal()?)?;
    let f = a_hat_series(trunc);
    let f2 = f.rescale_variable(&rat(2));
    let a_hat_hp = f.pow(2 * j + 2)?.mul(&f2.reciprocal()?)?;
    let value = ClosedManifoldModel::quaternionic_projective(j)
        .integrate_series(&ch.mul(&a_hat_hp)?)
        .expect("HP model integrates series");
    if !value.is_integer() {
        return Err(SeriesError::NonIntegral(value));
    }
    Ok(value.to_integer())
}

/// `Θ_i(y) = U_i(1 + y²/2)` for the Chebyshev polynomials of the second kind.
pub fn chebyshev_theta(i: u32, trunc: usize) -> GradedSeries {
    let z = GradedSeries::from_fn(2, trunc, |k| match k {
        0 => Rational::one(),
        2 => Rational::new(1.into(), 2.into()),
        _ => Rational::zero(),
    });
    let one = GradedSeries::from_fn(2, trunc, |k| if k == 0 { Rational::one() } else { Rational::zero() });
    let two_z = z.scale(&rat(2));
    let (mut prev, mut cur) = (one.clone(), two_z.clone());
    if i == 0 {
        return one;
    }
    for _ in 1..i {
        let next = two_z.mul(&cur).and_then(|t| t.sub(&prev)).expect("same shape");
        prev = cur;
        cur = next;
    }
    cur
}

/// Which of the three formulas evaluates the HP pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HpMethod {
    Binomial,
    Residue,
    Chebyshev,
}

/// One entry of the pairing matrix by the chosen method.
pub fn hp_pairing(i: u32, j: u32, method: HpMethod) -> Result<BigInt, SeriesError> {
    match method {
        HpMethod::Binomial => Ok(hp_pairing_binomial(i, j)),
        HpMethod::Residue => hp_pairing_residue(i, j),
        HpMethod::Chebyshev => {
            let c = chebyshev_theta(i, 2 * j as usize).coeff(2 * j as usize);
            if !c.is_integer() {
                return Err(SeriesError::NonIntegral(c));
            }
            Ok(c.to_integer())
        }
    }
}

/// Rows `i = 0..=max_i`, columns `j = 0..=max_j`.
pub fn hp_pairing_matrix(
    max_i: u32,
    max_j: u32,
    method: HpMethod,
    exec: Execution,
) -> Result<Vec<Vec<BigInt>>, SeriesError> {
    let cells: Vec<(u32, u32)> =
        (0..=max_i).flat_map(|i| (0..=max_j).map(move |j| (i, j))).collect();
    let values = exec.map(cells, |(i, j)| hp_pairing(i, j, method));
    let mut flat = values.into_iter();
    let mut rows = Vec::with_capacity(max_i as usize + 1);
    for _ in 0..=max_i {
        let row: Result<Vec<BigInt>, SeriesError> =
            flat.by_ref().take(max_j as usize + 1).collect();
        rows.push(row?);
    }
    Ok(rows)
}

/// The factor multiplying the Thom class in the Chern character of the
/// complex spinor Thom class of a rank-`2n` spin^h bundle:
/// `(-1)^n · 2cosh(√p_1(h)/2) · Π_roots F(x)^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakThomFactor {
    pub half_rank: u32,
    pub sign: i8,
    /// `2cosh(√p/2)` in the degree-4 variable `p = p_1(h)`.
    pub cosh_factor: GradedSeries,
    /// `F(x)^{-1}`, one factor per Chern root.
    pub root_factor: GradedSeries,
}

impl WeakThomFactor {
    /// Value with every characteristic class set to zero.
    pub fn constant(&self) -> Rational {
        rat(self.sign as i64) * self.cosh_factor.coeff(0) * self.root_factor.coeff(0)
    }

    /// The factor as a series in a single root `x`, with `p_1(h) = 0`.
    pub fn single_root(&self) -> GradedSeries {
        self.root_factor.scale(&(rat(self.sign as i64) * self.cosh_factor.coeff(0)))
    }
}

/// `trunc` is the cohomological degree kept.
pub fn weak_thom_chern_character(n: u32, trunc_degree: u32) -> WeakThomFactor {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    WeakThomFactor {
        half_rank: n,
        sign,
        cosh_factor: cosh_sqrt_series((trunc_degree / 4) as usize),
        root_factor: a_hat_series((trunc_degree / 2) as usize).reciprocal().expect("unit constant"),
    }
}

/// `Â^h` of a point: the constant term of `2cosh(√p/2)`.
pub fn a_hat_h_point() -> Rational {
    cosh_sqrt_series(0).coeff(0)
}

/// Whether `m[i][j] = 0` for `i < j` and `m[i][i] = 1`, i.e. the pairing
/// matrix vanishes on one side of a unit diagonal.
pub fn is_unit_triangular(m: &[Vec<BigInt>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, v)| match i.cmp(&j) {
            std::cmp::Ordering::Less => v.is_zero(),
            std::cmp::Ordering::Equal => v.is_one(),
            std::cmp::Ordering::Greater => true,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_basics() {
        let one_minus_t = GradedSeries::from_coeffs(2, [q(1, 1), q(-1, 1)], 5).unwrap();
        let inv = one_minus_t.reciprocal().unwrap();
        assert!(inv.coeffs().iter().all(|c| c.is_one()));
        let one_plus_t = GradedSeries::from_coeffs(2, [q(1, 1), q(1, 1)], 5).unwrap();
        let prod = one_plus_t.mul(&one_minus_t).unwrap();
        assert_eq!(prod, GradedSeries::from_coeffs(2, [q(1, 1), q(0, 1), q(-1, 1)], 5).unwrap());
        assert!(matches!(
            GradedSeries::zero(2, 3).unwrap().reciprocal(),
            Err(SeriesError::NonUnitConstant(_))
        ));
        let other = GradedSeries::zero(4, 5).unwrap();
        assert!(matches!(one_plus_t.add(&other), Err(SeriesError::DegreeMismatch(2, 4))));
        let short = GradedSeries::zero(2, 3).unwrap();
        assert!(matches!(one_plus_t.mul(&short), Err(SeriesError::TruncationMismatch(5, 3))));
    }

    #[test]
    fn a_hat_coefficients() {
        let f = a_hat_series(8);
        assert_eq!(f.coeff(0), q(1, 1));
        assert_eq!(f.coeff(2), q(-1, 24));
        assert_eq!(f.coeff(4), q(7, 5760));
        assert!(f.is_even());
        let back = f.reciprocal().unwrap().mul(&f).unwrap();
        assert_eq!(back, GradedSeries::constant(2, q(1, 1), 8).unwrap());
    }

    #[test]
    fn cosh_coefficients() {
        let c = cosh_sqrt_series(3);
        assert_eq!(c.coeff(0), q(2, 1));
        assert_eq!(c.coeff(1), q(1, 4));
        assert_eq!(c.coeff(2), q(1, 192));
        assert_eq!(a_hat_h_point(), q(2, 1));
    }

    #[test]
    fn compose_even_matches_direct() {
        // 2cosh(x/2) as an even series in x, then x² -> p
        let x_series = GradedSeries::from_fn(2, 8, |k| {
            if k % 2 == 1 {
                Rational::zero()
            } else {
                Rational::new(2.into(), BigInt::from(2).pow(k as u32) * factorial(k as u32))
            }
        });
        let p = GradedSeries::from_coeffs(4, [q(0, 1), q(1, 1)], 4).unwrap();
        assert_eq!(x_series.compose_even(&p).unwrap(), cosh_sqrt_series(4));
        let not_nilpotent = GradedSeries::constant(4, q(1, 1), 4).unwrap();
        assert!(x_series.compose_even(&not_nilpotent).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_4manifold(0, 2, Orientation::Plus), q(1, 1));
        assert_eq!(genus_4manifold(1, 3, Orientation::Plus), q(2, 1));
        assert_eq!(genus_4manifold(1, 3, Orientation::Minus), q(-1, 1));
        for s in -20..=20 {
            for e in -20..=20 {
                for o in [Orientation::Plus, Orientation::Minus] {
                    assert_eq!(genus_4manifold(s, e, o), genus_4manifold_series(s, e, o));
                }
            }
        }
    }

    #[test]
    fn hp_examples() {
        assert_eq!(hp_pairing_binomial(2, 2), 1.into());
        assert_eq!(hp_pairing_binomial(1, 3), 0.into());
        assert_eq!(hp_pairing_binomial(2, 1), 4.into());
        assert_eq!(hp_pairing_residue(0, 0).unwrap(), 1.into());
        assert_eq!(hp_pairing_residue(1, 1).unwrap(), 1.into());
        assert_eq!(hp_pairing_residue(3, 1).unwrap(), 10.into());
        assert_eq!(hp_pairing_residue(1, 3).unwrap(), 0.into());
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_theta(0, 4), GradedSeries::constant(2, q(1, 1), 4).unwrap());
        let t2 = chebyshev_theta(2, 4);
        assert_eq!(t2.coeffs(), &[q(3, 1), q(0, 1), q(4, 1), q(0, 1), q(1, 1)]);
        assert_eq!(chebyshev_theta(1, 2).coeff(2), q(1, 1));
    }

    #[test]
    fn matrix_modes_agree() {
        let a = hp_pairing_matrix(6, 6, HpMethod::Residue, Execution::Sequential).unwrap();
        let b = hp_pairing_matrix(6, 6, HpMethod::Residue, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(is_unit_triangular(&a));
        let mut broken = a.clone();
        broken[1][2] = 1.into();
        assert!(!is_unit_triangular(&broken));
    }

    #[test]
    fn weak_thom() {
        let even = weak_thom_chern_character(2, 8);
        assert_eq!(even.constant(), q(2, 1));
        assert_eq!(weak_thom_chern_character(3, 8).constant(), q(-2, 1));
        assert_eq!(even.single_root().coeff(2), q(1, 12));
    }
}
