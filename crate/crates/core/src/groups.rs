//! Abelian group expressions used for Grothendieck groups and K-theory
//! coefficient groups.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One direct summand of an [`AbGroupExpr`].
///
/// Ordering is the canonical display order: free summands, then the
/// divisible groups, then finite cyclic groups by ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    Z,
    Q,
    QmodZ,
    /// `Z/m` with `m >= 2`.
    Cyclic(u64),
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Z => f.write_str("Z"),
            Summand::Q => f.write_str("Q"),
            Summand::QmodZ => f.write_str("Q/Z"),
            Summand::Cyclic(m) => write!(f, "Z{m}"),
        }
    }
}

/// Coefficient ring for homology/K-theory with coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Z,
    Q,
    QmodZ,
    /// `Z/k`, `k >= 2`.
    Zk(u64),
}

impl CoefficientRing {
    pub fn zk(k: u64) -> Result<Self, GroupParseError> {
        if k < 2 {
            return Err(GroupParseError(format!("Z_k needs k >= 2, got {k}")));
        }
        Ok(CoefficientRing::Zk(k))
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Z => f.write_str("Z"),
            CoefficientRing::Q => f.write_str("Q"),
            CoefficientRing::QmodZ => f.write_str("Q/Z"),
            CoefficientRing::Zk(k) => write!(f, "Z{k}"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = GroupParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Z),
            "Q" => Ok(CoefficientRing::Q),
            "Q/Z" => Ok(CoefficientRing::QmodZ),
            other => {
                let digits = other
                    .strip_prefix("Z_")
                    .or_else(|| other.strip_prefix('Z'))
                    .ok_or_else(|| GroupParseError(format!("unknown coefficient ring {other:?}")))?;
                let k: u64 = digits
                    .parse()
                    .map_err(|_| GroupParseError(format!("unknown coefficient ring {other:?}")))?;
                CoefficientRing::zk(k)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct GroupParseError(pub String);

/// A finite direct sum of `Z`, `Q`, `Q/Z` and `Z/m` summands in canonical
/// order. Displays as `0`, `Z`, `Z2`, `Z+Z`, `Q/Z+Z2`, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroupExpr {
    summands: Vec<Summand>,
}

impl AbGroupExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn z() -> Self {
        Self::from_summands([Summand::Z])
    }

    pub fn cyclic(m: u64) -> Self {
        Self::from_summands([Summand::Cyclic(m)])
    }

    /// Builds a canonical expression; `Z/1` summands are dropped and
    /// `Z/0` is read as `Z`.
    pub fn from_summands(summands: impl IntoIterator<Item = Summand>) -> Self {
        let mut summands: Vec<Summand> = summands
            .into_iter()
            .filter_map(|s| match s {
                Summand::Cyclic(0) => Some(Summand::Z),
                Summand::Cyclic(1) => None,
                other => Some(other),
            })
            .collect();
        summands.sort();
        Self { summands }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Number of `Z` summands.
    pub fn rank(&self) -> usize {
        self.summands.iter().filter(|s| **s == Summand::Z).count()
    }

    /// Orders of the finite cyclic summands, ascending.
    pub fn torsion(&self) -> Vec<u64> {
        self.summands
            .iter()
            .filter_map(|s| match s {
                Summand::Cyclic(m) => Some(*m),
                _ => None,
            })
            .collect()
    }

    /// The torsion subgroup as an expression.
    pub fn torsion_part(&self) -> Self {
        Self::from_summands(self.torsion().into_iter().map(Summand::Cyclic))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_summands(self.summands.iter().chain(&other.summands).copied())
    }

    /// `n`-fold direct sum of `self`.
    pub fn power(&self, n: usize) -> Self {
        Self::from_summands((0..n).flat_map(|_| self.summands.iter().copied()))
    }

    /// `self ⊗_Z Λ`.
    pub fn tensor(&self, ring: CoefficientRing) -> Self {
        use CoefficientRing as R;
        Self::from_summands(self.summands.iter().filter_map(|s| match (*s, ring) {
            (Summand::Z, R::Z) => Some(Summand::Z),
            (Summand::Z, R::Q) => Some(Summand::Q),
            (Summand::Z, R::QmodZ) => Some(Summand::QmodZ),
            (Summand::Z, R::Zk(k)) => Some(Summand::Cyclic(k)),
            (Summand::Q, R::Z) | (Summand::Q, R::Q) => Some(Summand::Q),
            (Summand::Q, _) => None,
            (Summand::QmodZ, R::Z) => Some(Summand::QmodZ),
            (Summand::QmodZ, _) => None,
            (Summand::Cyclic(m), R::Z) => Some(Summand::Cyclic(m)),
            (Summand::Cyclic(_), R::Q) | (Summand::Cyclic(_), R::QmodZ) => None,
            (Summand::Cyclic(m), R::Zk(k)) => Some(Summand::Cyclic(m.gcd(&k))),
        }))
    }

    /// `Tor_1^Z(self, Λ)`.
    pub fn tor(&self, ring: CoefficientRing) -> Self {
        use CoefficientRing as R;
        Self::from_summands(self.summands.iter().filter_map(|s| match (*s, ring) {
            (Summand::Z, _) | (Summand::Q, _) => None,
            (_, R::Z) | (_, R::Q) => None,
            (Summand::Cyclic(m), R::QmodZ) => Some(Summand::Cyclic(m)),
            (Summand::Cyclic(m), R::Zk(k)) => Some(Summand::Cyclic(m.gcd(&k))),
            (Summand::QmodZ, R::QmodZ) => Some(Summand::QmodZ),
            (Summand::QmodZ, R::Zk(k)) => Some(Summand::Cyclic(k)),
        }))
    }
}

impl fmt::Display for AbGroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for AbGroupExpr {
    type Err = GroupParseError;

    /// Parses the compact grammar, also accepting `Z^2` for `Z+Z`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let (base, mult) = match part.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<usize>()
                        .map_err(|_| GroupParseError(format!("bad exponent in {part:?}")))?,
                ),
                None => (part, 1),
            };
            let summand = match base {
                "Z" => Summand::Z,
                "Q" => Summand::Q,
                "Q/Z" => Summand::QmodZ,
                "0" => continue,
                other => {
                    let m: u64 = other
                        .strip_prefix("Z_")
                        .or_else(|| other.strip_prefix('Z'))
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| GroupParseError(format!("bad summand {other:?}")))?;
                    Summand::Cyclic(m)
                }
            };
            out.extend(std::iter::repeat_n(summand, mult));
        }
        Ok(Self::from_summands(out))
    }
}

impl Serialize for AbGroupExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AbGroupExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finitely generated abelian group `Z^rank ⊕ Z/n_1 ⊕ ... ⊕ Z/n_k` in
/// invariant-factor form: every `n_i >= 2` and `n_i | n_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    rank: u32,
    torsion: Vec<u64>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: u32) -> Self {
        Self { rank, torsion: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(0, [n])
    }

    /// Normalises an arbitrary list of cyclic orders to invariant factors.
    /// Orders `0` count as free summands and `1` is dropped.
    pub fn new(rank: u32, cyclic_orders: impl IntoIterator<Item = u64>) -> Self {
        let mut rank = rank;
        // prime -> exponents of the prime-power parts
        let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
        for n in cyclic_orders {
            if n == 0 {
                rank += 1;
                continue;
            }
            for (p, e) in factorize(n) {
                match primary.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, es)) => es.push(e),
                    None => primary.push((p, vec![e])),
                }
            }
        }
        let len = primary.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut es) in primary {
            es.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in es.into_iter().enumerate() {
                // largest exponents go to the last invariant factor
                torsion[len - 1 - slot] *= p.pow(e);
            }
        }
        Self { rank, torsion }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// Exponent of the torsion subgroup (1 for torsion-free groups).
    pub fn torsion_exponent(&self) -> u64 {
        self.torsion.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn to_expr(&self) -> AbGroupExpr {
        AbGroupExpr::from_summands(
            std::iter::repeat_n(Summand::Z, self.rank as usize)
                .chain(self.torsion.iter().map(|&n| Summand::Cyclic(n))),
        )
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let g = AbGroupExpr::from_summands([Summand::Cyclic(2), Summand::Z, Summand::Z]);
        assert_eq!(g.to_string(), "Z+Z+Z2");
        assert_eq!("Z^2+Z2".parse::<AbGroupExpr>().unwrap(), g);
        assert_eq!(AbGroupExpr::zero().to_string(), "0");
        assert_eq!("0".parse::<AbGroupExpr>().unwrap(), AbGroupExpr::zero());
        assert_eq!("Q/Z".parse::<AbGroupExpr>().unwrap().to_string(), "Q/Z");
        assert!("Zx".parse::<AbGroupExpr>().is_err());
    }

    #[test]
    fn universal_coefficient_pieces() {
        let z2 = AbGroupExpr::cyclic(2);
        assert!(z2.tensor(CoefficientRing::QmodZ).is_zero());
        assert_eq!(z2.tor(CoefficientRing::QmodZ), z2);
        assert_eq!(AbGroupExpr::z().tensor(CoefficientRing::QmodZ).to_string(), "Q/Z");
        assert_eq!(z2.tensor(CoefficientRing::Zk(6)), z2);
        assert!(z2.tensor(CoefficientRing::Zk(5)).is_zero());
        assert!(AbGroupExpr::z().tor(CoefficientRing::Zk(5)).is_zero());
    }

    #[test]
    fn invariant_factors() {
        let g = FGAbelianGroup::new(1, [2, 3, 4]);
        assert_eq!(g.torsion(), &[2, 12]);
        assert_eq!(g.rank(), 1);
        assert_eq!(FGAbelianGroup::new(0, [6, 1]).torsion(), &[6]);
        assert_eq!(FGAbelianGroup::new(0, [4, 6]).torsion(), &[2, 12]);
        assert!(FGAbelianGroup::new(0, [1, 1]).is_trivial());
        assert_eq!(FGAbelianGroup::new(0, [0]).rank(), 1);
    }

    #[test]
    fn coefficient_ring_parse() {
        assert_eq!("Q/Z".parse::<CoefficientRing>().unwrap(), CoefficientRing::QmodZ);
        assert_eq!("Z5".parse::<CoefficientRing>().unwrap(), CoefficientRing::Zk(5));
        assert_eq!("Z_7".parse::<CoefficientRing>().unwrap(), CoefficientRing::Zk(7));
        assert!("Z1".parse::<CoefficientRing>().is_err());
    }
}
