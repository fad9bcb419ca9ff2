//! Explicit check that `Cl_{m+n}` and the graded tensor product
//! `Cl_m ⊗̂ Cl_n` agree as Z2-graded algebras.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Blade, CliffordError, Signature};

/// Default bound on `m + n` for the blade enumeration.
pub const DEFAULT_GRADED_TENSOR_CAP: u32 = 12;

/// A signed basis tensor `± a ⊗̂ b`.
type Term = (i8, Blade, Blade);

/// Outcome of [`graded_tensor_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedTensorReport {
    pub m: u32,
    pub n: u32,
    /// `f(e_i)^2 = -1` and `f(e_i) f(e_j) + f(e_j) f(e_i) = 0` for `i != j`.
    pub relations_hold: bool,
    /// Every `e'_i ⊗̂ 1` and `1 ⊗̂ e''_j` is the image of a generator.
    pub generators_hit: bool,
    /// Images of the `2^(m+n)` blades are distinct basis tensors up to sign.
    pub basis_bijective: bool,
    /// The Z2-degree of every blade equals the total degree of its image.
    pub parity_preserved: bool,
    pub domain_dimension: u64,
    pub codomain_dimension: u64,
}

impl GradedTensorReport {
    pub fn passed(&self) -> bool {
        self.relations_hold
            && self.generators_hit
            && self.basis_bijective
            && self.parity_preserved
            && self.domain_dimension == self.codomain_dimension
    }
}

/// Koszul product `(a ⊗̂ b)(a' ⊗̂ b') = (-1)^{|b||a'|} aa' ⊗̂ bb'`.
fn koszul_mul(x: Term, y: Term, left: &Signature, right: &Signature) -> Term {
    let (sx, a, b) = x;
    let (sy, a2, b2) = y;
    let koszul: i8 = if b.parity() * a2.parity() == 1 { -1 } else { 1 };
    let (s1, aa) = a.product(a2, left);
    let (s2, bb) = b.product(b2, right);
    (sx * sy * koszul * s1 * s2, aa, bb)
}

/// Runs the check with the default cap of 12 generators.
pub fn graded_tensor_check(m: u32, n: u32) -> Result<GradedTensorReport, CliffordError> {
    graded_tensor_check_with_cap(m, n, DEFAULT_GRADED_TENSOR_CAP)
}

/// Sends `e_i` to `e'_i ⊗̂ 1` for `i <= m` and to `1 ⊗̂ e''_{i-m}` otherwise,
/// then verifies the Clifford relations and the induced map on blades.
pub fn graded_tensor_check_with_cap(
    m: u32,
    n: u32,
    cap: u32,
) -> Result<GradedTensorReport, CliffordError> {
    let total = m + n;
    if total > cap {
        return Err(CliffordError::TooLarge { total, cap });
    }
    let left = Signature::new(m, 0)?;
    let right = Signature::new(n, 0)?;
    let image = |i: u32| -> Term {
        if i < m {
            (1, Blade::from_mask(1 << i), Blade::UNIT)
        } else {
            (1, Blade::UNIT, Blade::from_mask(1 << (i - m)))
        }
    };

    let mut relations_hold = true;
    for i in 0..total {
        for j in 0..total {
            let ij = koszul_mul(image(i), image(j), &left, &right);
            if i == j {
                relations_hold &= ij == (-1, Blade::UNIT, Blade::UNIT);
            } else {
                let ji = koszul_mul(image(j), image(i), &left, &right);
                // anticommuting: same basis tensor, opposite signs
                relations_hold &= ij.1 == ji.1 && ij.2 == ji.2 && ij.0 == -ji.0;
            }
        }
    }

    let hit: BTreeSet<(Blade, Blade)> = (0..total).map(|i| (image(i).1, image(i).2)).collect();
    let generators_hit = (0..m).all(|i| hit.contains(&(Blade::from_mask(1 << i), Blade::UNIT)))
        && (0..n).all(|j| hit.contains(&(Blade::UNIT, Blade::from_mask(1 << j))));

    let mut seen: BTreeMap<(Blade, Blade), u64> = BTreeMap::new();
    let mut parity_preserved = true;
    for mask in 0u64..(1u64 << total) {
        let mut acc: Term = (1, Blade::UNIT, Blade::UNIT);
        for i in 0..total {
            if mask >> i & 1 == 1 {
                acc = koszul_mul(acc, image(i), &left, &right);
            }
        }
        let degree = (mask.count_ones() & 1) as u32;
        parity_preserved &= (acc.1.parity() + acc.2.parity()) % 2 == degree;
        seen.insert((acc.1, acc.2), mask);
    }
    let domain_dimension = 1u64 << total;
    let codomain_dimension = left.algebra_dimension() * right.algebra_dimension();

    Ok(GradedTensorReport {
        m,
        n,
        relations_hold,
        generators_hit,
        basis_bijective: seen.len() as u64 == codomain_dimension,
        parity_preserved,
        domain_dimension,
        codomain_dimension,
    })
}
