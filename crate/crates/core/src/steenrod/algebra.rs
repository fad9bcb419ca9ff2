//! Steenrod squares on Stiefel–Whitney polynomials, Wu classes, Adem
//! reduction and the antipode.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::poly::{monomials_of_degree, F2Polynomial, Gen, Monomial};
use crate::exec::Execution;

/// `C(n, k) mod 2` by Lucas: odd iff the bits of `k` are a subset of `n`'s.
fn binom_mod2(n: i64, k: i64) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    (n & k) == k
}

/// `Sq^i w_j` by Wu's formula `Σ_t C(j-i+t-1, t) w_{i-t} w_{j+t}`.
fn sq_generator(i: u32, g: Gen) -> F2Polynomial {
    let j = g.degree();
    if i == 0 {
        return F2Polynomial::gen(g);
    }
    if i > j {
        return F2Polynomial::zero();
    }
    if i == j {
        return F2Polynomial::gen(g).pow(2);
    }
    let family = |index: u32| F2Polynomial::gen(Gen { family: g.family, index: index as u16 });
    let mut out = F2Polynomial::zero();
    for t in 0..=i {
        if binom_mod2(j as i64 - i as i64 + t as i64 - 1, t as i64) {
            out.add_assign(&family(i - t).mul(&family(j + t)));
        }
    }
    out
}

type SqCache = Mutex<HashMap<(u32, Monomial), F2Polynomial>>;

fn cache() -> &'static SqCache {
    static CACHE: OnceLock<SqCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Sq^k` of a monomial via the Cartan formula, memoized.
fn sq_monomial(k: u32, m: &Monomial) -> F2Polynomial {
    if k == 0 {
        return F2Polynomial::from_monomial(m.clone());
    }
    if k > m.degree() {
        return F2Polynomial::zero();
    }
    if let Some(hit) = cache().lock().expect("sq cache poisoned").get(&(k, m.clone())) {
        return hit.clone();
    }
    let (g, rest) = m.split_first().expect("k <= degree implies a nonempty monomial");
    let out = if rest.is_one() {
        sq_generator(k, g)
    } else {
        let mut acc = F2Polynomial::zero();
        for i in 0..=k.min(g.degree()) {
            let left = sq_generator(i, g);
            if left.is_zero() {
                continue;
            }
            let right = sq_monomial(k - i, &rest);
            if !right.is_zero() {
                acc.add_assign(&left.mul(&right));
            }
        }
        acc
    };
    cache().lock().expect("sq cache poisoned").insert((k, m.clone()), out.clone());
    out
}

/// The Steenrod square `Sq^k` on the polynomial ring of oriented
/// Stiefel–Whitney classes (with `w_1 = 0`).
pub fn sq(k: u32, p: &F2Polynomial) -> F2Polynomial {
    let mut out = F2Polynomial::zero();
    for m in p.monomials() {
        out.add_assign(&sq_monomial(k, m));
    }
    out
}

/// Wu classes `ν_0, ..., ν_max` solving `Σ_i Sq^i ν_{k-i} = w_k`.
pub fn wu_classes(max_degree: u32) -> Vec<F2Polynomial> {
    let mut nu: Vec<F2Polynomial> = Vec::with_capacity(max_degree as usize + 1);
    for k in 0..=max_degree {
        let mut v = F2Polynomial::w(k as u16);
        for i in 1..=k / 2 {
            v.add_assign(&sq(i, &nu[(k - i) as usize]));
        }
        nu.push(v);
    }
    nu
}

/// The single Wu class `ν_k`.
pub fn wu_class(k: u32) -> F2Polynomial {
    wu_classes(k).pop().expect("nonempty")
}

/// A composite `Sq^{i_1} Sq^{i_2} ... Sq^{i_k}` (applied right to left).
/// Zero entries are dropped since `Sq^0` is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SteenrodMonomial(Vec<u32>);

impl SteenrodMonomial {
    pub fn new(indices: impl IntoIterator<Item = u32>) -> Self {
        SteenrodMonomial(indices.into_iter().filter(|&i| i != 0).collect())
    }

    pub fn identity() -> Self {
        SteenrodMonomial(Vec::new())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `i_t >= 2 i_{t+1}` for every adjacent pair.
    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= 2 * w[1])
    }

    /// Composition `self ∘ other`.
    pub fn then(&self, other: &SteenrodMonomial) -> SteenrodMonomial {
        SteenrodMonomial(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn apply(&self, p: &F2Polynomial) -> F2Polynomial {
        self.0.iter().rev().fold(p.clone(), |acc, &i| sq(i, &acc))
    }
}

impl fmt::Display for SteenrodMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for i in &self.0 {
            write!(f, "Sq^{i}")?;
        }
        Ok(())
    }
}

/// An F2-linear combination of Steenrod monomials.
pub type SteenrodSum = BTreeSet<SteenrodMonomial>;

fn toggle(set: &mut SteenrodSum, m: SteenrodMonomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

/// Rewrites a composite as a sum of admissible monomials using
/// `Sq^a Sq^b = Σ_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c` for `a < 2b`.
pub fn adem_reduce(m: &SteenrodMonomial) -> SteenrodSum {
    let mut out = SteenrodSum::new();
    let mut work = vec![m.clone()];
    while let Some(cur) = work.pop() {
        let Some(t) = cur.0.windows(2).position(|w| w[0] < 2 * w[1]) else {
            toggle(&mut out, cur);
            continue;
        };
        let (a, b) = (cur.0[t], cur.0[t + 1]);
        for c in 0..=a / 2 {
            if binom_mod2(b as i64 - c as i64 - 1, a as i64 - 2 * c as i64) {
                let mut next: Vec<u32> = cur.0[..t].to_vec();
                next.push(a + b - c);
                next.push(c);
                next.extend_from_slice(&cur.0[t + 2..]);
                work.push(SteenrodMonomial::new(next));
            }
        }
    }
    out
}

/// Applies a sum of operations to a polynomial.
pub fn apply_sum(sum: &SteenrodSum, p: &F2Polynomial) -> F2Polynomial {
    let mut out = F2Polynomial::zero();
    for m in sum {
        out.add_assign(&m.apply(p));
    }
    out
}

/// The antipode `χ(Sq^k)` in the admissible basis, from
/// `χ(Sq^k) = Σ_{i=1..k} Sq^i χ(Sq^{k-i})`.
pub fn chi_sq(k: u32) -> SteenrodSum {
    let mut table: Vec<SteenrodSum> = vec![[SteenrodMonomial::identity()].into_iter().collect()];
    for n in 1..=k {
        let mut acc = SteenrodSum::new();
        for i in 1..=n {
            for m in &table[(n - i) as usize] {
                for r in adem_reduce(&SteenrodMonomial::new([i]).then(m)) {
                    toggle(&mut acc, r);
                }
            }
        }
        table.push(acc);
    }
    table.pop().expect("nonempty")
}

/// Outcome of a consistency battery.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks > 0 && self.failures.is_empty()
    }

    fn merge(parts: Vec<BatteryReport>) -> BatteryReport {
        parts.into_iter().fold(BatteryReport::default(), |mut acc, p| {
            acc.checks += p.checks;
            acc.failures.extend(p.failures);
            acc
        })
    }
}

fn bso_monomials(d: u32) -> Vec<Monomial> {
    let gens: Vec<Gen> = (2..=d.max(2) as u16).map(Gen::w).collect();
    monomials_of_degree(&gens, d)
}

/// Checks `Sq^k(xy) = Σ_i Sq^i x · Sq^{k-i} y` for all monomials `x, y` in
/// `H^*(BSO)` with `deg x + deg y <= max_degree` and every `k`.
pub fn cartan_battery(max_degree: u32, exec: Execution) -> BatteryReport {
    let mut pairs = Vec::new();
    for dx in 2..=max_degree {
        for dy in dx..=max_degree.saturating_sub(dx) {
            pairs.push((dx, dy));
        }
    }
    let parts = exec.map(pairs, |(dx, dy)| {
        let mut report = BatteryReport::default();
        for x in bso_monomials(dx) {
            let px = F2Polynomial::from_monomial(x.clone());
            let sx: Vec<F2Polynomial> = (0..=dx).map(|i| sq(i, &px)).collect();
            for y in bso_monomials(dy) {
                let py = F2Polynomial::from_monomial(y.clone());
                let product = px.mul(&py);
                for k in 0..=dx + dy {
                    let mut rhs = F2Polynomial::zero();
                    for i in k.saturating_sub(dy)..=k.min(dx) {
                        rhs.add_assign(&sx[i as usize].mul(&sq(k - i, &py)));
                    }
                    report.checks += 1;
                    if sq(k, &product) != rhs {
                        report.failures.push(format!("Sq^{k}({x} * {y})"));
                    }
                }
            }
        }
        report
    });
    BatteryReport::merge(parts)
}

/// Checks that every `Sq^a Sq^b` with `a < 2b` and `a + b <= max_degree`
/// reduces to admissible monomials that act identically on all monomials
/// of `H^*(BSO)` up to degree `test_degree`.
pub fn adem_battery(max_degree: u32, test_degree: u32, exec: Execution) -> BatteryReport {
    let mut ops = Vec::new();
    for b in 1..max_degree {
        for a in 1..(2 * b).min(max_degree - b + 1) {
            ops.push((a, b));
        }
    }
    let tests: Vec<F2Polynomial> =
        (2..=test_degree).flat_map(bso_monomials).map(F2Polynomial::from_monomial).collect();
    let parts = exec.map(ops, |(a, b)| {
        let mut report = BatteryReport::default();
        let composite = SteenrodMonomial::new([a, b]);
        let reduced = adem_reduce(&composite);
        report.checks += 1;
        if !reduced.iter().all(SteenrodMonomial::is_admissible) {
            report.failures.push(format!("{composite} has inadmissible terms"));
        }
        for x in &tests {
            report.checks += 1;
            if composite.apply(x) != apply_sum(&reduced, x) {
                report.failures.push(format!("{composite} on {x}"));
            }
        }
        report
    });
    BatteryReport::merge(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> F2Polynomial {
        F2Polynomial::parse(s).unwrap()
    }

    #[test]
    fn generator_squares() {
        assert_eq!(sq(1, &p("w2")), p("w3"));
        assert_eq!(sq(2, &p("w2")), p("w2^2"));
        assert_eq!(sq(3, &p("w2")), F2Polynomial::zero());
        assert_eq!(sq(2, &p("w3")), p("w2*w3 + w5"));
        assert_eq!(sq(1, &p("w4")), p("w5"));
        assert_eq!(sq(3, &p("w4")), sq(1, &sq(2, &p("w4"))));
        assert_eq!(sq(1, &p("w2'")), p("w3'"));
        assert_eq!(sq(2, &p("w3'")), p("w2'*w3'"));
    }

    #[test]
    fn wu_examples() {
        let nu = wu_classes(8);
        assert_eq!(nu[2], p("w2"));
        assert_eq!(nu[3], F2Polynomial::zero());
        assert_eq!(nu[4], p("w4 + w2^2"));
        assert_eq!(sq(1, &nu[4]), p("w5"));
    }

    #[test]
    fn adem_examples() {
        assert!(adem_reduce(&SteenrodMonomial::new([1, 1])).is_empty());
        let r = adem_reduce(&SteenrodMonomial::new([2, 3]));
        let expected: SteenrodSum =
            [SteenrodMonomial::new([5]), SteenrodMonomial::new([4, 1])].into_iter().collect();
        assert_eq!(r, expected);
        let r = adem_reduce(&SteenrodMonomial::new([2, 7]));
        assert!(r.contains(&SteenrodMonomial::new([8, 1])));
    }

    #[test]
    fn antipode_examples() {
        let one = |v: &[u32]| -> SteenrodSum { [SteenrodMonomial::new(v.to_vec())].into_iter().collect() };
        assert_eq!(chi_sq(1), one(&[1]));
        assert_eq!(chi_sq(3), one(&[2, 1]));
        assert_eq!(chi_sq(7), one(&[4, 2, 1]));
        assert_eq!(chi_sq(15), one(&[8, 4, 2, 1]));
    }
}
