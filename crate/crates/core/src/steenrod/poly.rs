//! Polynomials over F2 in Stiefel–Whitney generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::SteenrodError;

/// A generator `w_i` (family 0) or `w'_i` (family 1, the BSO(3) classes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub family: u8,
    pub index: u16,
}

impl Gen {
    pub const fn w(index: u16) -> Self {
        Gen { family: 0, index }
    }

    pub const fn w_prime(index: u16) -> Self {
        Gen { family: 1, index }
    }

    pub fn degree(self) -> u32 {
        self.index as u32
    }

    /// Largest index that is not identically zero in this family.
    pub fn family_top(self) -> Option<u16> {
        (self.family == 1).then_some(3)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.index)?;
        if self.family == 1 {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A monomial `Π g^e`, stored sorted by generator with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Gen, u16)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(g: Gen) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Gen, u16)>) -> Self {
        let mut out = Monomial::one();
        for (g, e) in factors {
            out = out.mul(&Monomial(vec![(g, e)]));
        }
        out
    }

    pub fn factors(&self) -> &[(Gen, u16)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.degree() * *e as u32).sum()
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits off one copy of the first generator.
    pub(crate) fn split_first(&self) -> Option<(Gen, Monomial)> {
        let (g, e) = *self.0.first()?;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(0);
        } else {
            rest[0].1 -= 1;
        }
        Some((g, Monomial(rest)))
    }
}

/// Graded lexicographic: by degree, then by the generator/exponent list.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `F2[w_2, w_3, ...; w'_2, w'_3]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Polynomial(BTreeSet<Monomial>);

impl F2Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut s = BTreeSet::new();
        s.insert(m);
        F2Polynomial(s)
    }

    /// `w_i`, with `w_0 = 1` and `w_1 = 0` for oriented bundles.
    pub fn w(i: u16) -> Self {
        Self::gen(Gen::w(i))
    }

    /// `w'_i` of the BSO(3) factor, zero above degree 3.
    pub fn w_prime(i: u16) -> Self {
        Self::gen(Gen::w_prime(i))
    }

    pub fn gen(g: Gen) -> Self {
        match g.index {
            0 => Self::one(),
            1 => Self::zero(),
            i if g.family_top().is_some_and(|top| i > top) => Self::zero(),
            _ => Self::from_monomial(Monomial::generator(g)),
        }
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut out = Self::zero();
        for m in ms {
            out.toggle(m);
        }
        out
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some(d)` when every monomial has degree `d`; `None` for zero or
    /// inhomogeneous polynomials.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.0.iter().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.0.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.0.contains(m)
    }

    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for m in &other.0 {
            self.toggle(m.clone());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        F2Polynomial(self.0.iter().map(|a| a.mul(m)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        F2Polynomial(self.0.iter().filter(|m| m.degree() == d).cloned().collect())
    }

    /// Monomials consisting of a single generator to the first power.
    pub fn indecomposable_part(&self) -> Self {
        F2Polynomial(self.0.iter().filter(|m| m.length() == 1).cloned().collect())
    }

    /// Parses `w<i>`, `w<i>'`, `v<i>` (Wu classes), `0`, `1`, `+`, `*`, `^`
    /// and parentheses.
    pub fn parse(text: &str) -> Result<Self, SteenrodError> {
        Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }.parse()
    }
}

impl fmt::Display for F2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for F2Polynomial {
    type Err = SteenrodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> SteenrodError {
        SteenrodError::Parse { position: self.pos, message: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<F2Polynomial, SteenrodError> {
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let p = self.sum()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<F2Polynomial, SteenrodError> {
        let mut acc = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            acc.add_assign(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<F2Polynomial, SteenrodError> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<F2Polynomial, SteenrodError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<u32, SteenrodError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<F2Polynomial, SteenrodError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('w') | Some('v') => {
                let kind = self.peek().unwrap();
                self.pos += 1;
                let i = self.number()?;
                let i = u16::try_from(i).map_err(|_| self.err("generator index too large"))?;
                if kind == 'v' {
                    return Ok(super::wu_class(i as u32));
                }
                if self.peek() == Some('\'') {
                    self.pos += 1;
                    return Ok(F2Polynomial::w_prime(i));
                }
                Ok(F2Polynomial::w(i))
            }
            Some(c) if c.is_ascii_digit() => match self.number()? {
                0 => Ok(F2Polynomial::zero()),
                1 => Ok(F2Polynomial::one()),
                n if n % 2 == 0 => Ok(F2Polynomial::zero()),
                _ => Ok(F2Polynomial::one()),
            },
            _ => Err(self.err("expected w<i>, v<i>, a constant or '('")),
        }
    }
}

/// All monomials of degree `d` in the given generators.
pub fn monomials_of_degree(gens: &[Gen], d: u32) -> Vec<Monomial> {
    fn go(gens: &[Gen], d: u32, acc: &mut Vec<(Gen, u16)>, out: &mut Vec<Monomial>) {
        let Some((&g, rest)) = gens.split_first() else {
            if d == 0 {
                out.push(Monomial(acc.clone()));
            }
            return;
        };
        let gd = g.degree();
        let mut e = 0u16;
        loop {
            if e > 0 {
                acc.push((g, e));
            }
            go(rest, d - e as u32 * gd, acc, out);
            if e > 0 {
                acc.pop();
            }
            e += 1;
            if e as u32 * gd > d {
                break;
            }
        }
    }
    let mut out = Vec::new();
    go(gens, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = F2Polynomial::parse("w2*w4 + w3^2").unwrap();
        assert_eq!(p.to_string(), "w2*w4 + w3^2");
        assert_eq!(p.degree(), Some(6));
        assert_eq!(F2Polynomial::parse("w2 + w2").unwrap(), F2Polynomial::zero());
        assert_eq!(F2Polynomial::parse("w1*w5").unwrap(), F2Polynomial::zero());
        assert_eq!(F2Polynomial::parse("(w2+w3)^2").unwrap().to_string(), "w2^2 + w3^2");
        assert_eq!(F2Polynomial::parse("w2'+w4'").unwrap().to_string(), "w2'");
        assert_eq!(F2Polynomial::parse("v4").unwrap().to_string(), "w2^2 + w4");
        assert!(F2Polynomial::parse("w2 +").is_err());
        assert!(F2Polynomial::parse("x3").is_err());
        assert!(F2Polynomial::parse("").is_err());
    }

    #[test]
    fn monomial_counts() {
        let gens: Vec<Gen> = (2..=24).map(Gen::w).collect();
        let counts: Vec<usize> = (0..=8).map(|d| monomials_of_degree(&gens, d).len()).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 2, 2, 4, 4, 7]);
        assert_eq!(monomials_of_degree(&gens, 24).len(), 320);
    }
}
