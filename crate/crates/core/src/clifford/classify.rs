//! Matrix-algebra descriptors `K(N)` and `K(N) ⊕ K(N)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The real division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    pub fn real_dimension(self) -> u64 {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }

    /// `K ⊗_R K'` as `(field, matrix factor, number of blocks)`.
    fn tensor(self, other: Field) -> (Field, u64, u64) {
        use Field::*;
        match (self, other) {
            (R, k) | (k, R) => (k, 1, 1),
            (C, C) => (C, 1, 2),
            (C, H) | (H, C) => (C, 2, 1),
            (H, H) => (R, 4, 1),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "R" | "r" | "ℝ" => Ok(Field::R),
            "C" | "c" | "ℂ" => Ok(Field::C),
            "H" | "h" | "ℍ" => Ok(Field::H),
            other => Err(format!("unknown field '{other}' (expected R, C or H)")),
        }
    }
}

/// Which Clifford-type algebra to classify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `Cl_n`
    Cl,
    /// `Cl_n ⊗ C`
    CCl,
    /// `Cl_n ⊗ H`
    Clh,
    /// `Cl_n ⊗ H ⊗ C`
    CClh,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Cl, Variant::CCl, Variant::Clh, Variant::CClh];

    /// Extra real-dimension factor relative to `Cl_n`.
    pub fn dimension_factor(self) -> u64 {
        match self {
            Variant::Cl => 1,
            Variant::CCl => 2,
            Variant::Clh => 4,
            Variant::CClh => 8,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Cl => "Cl",
            Variant::CCl => "CCl",
            Variant::Clh => "Clh",
            Variant::CClh => "CClh",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cl" => Ok(Variant::Cl),
            "ccl" => Ok(Variant::CCl),
            "clh" | "cl^h" => Ok(Variant::Clh),
            "cclh" | "ccl^h" => Ok(Variant::CClh),
            other => Err(format!("unknown variant '{other}' (expected Cl, CCl, Clh or CClh)")),
        }
    }
}

/// `K(N)` when `simple`, otherwise `K(N) ⊕ K(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub field: Field,
    pub size: u64,
    pub simple: bool,
}

impl AlgebraDescriptor {
    pub const fn new(field: Field, size: u64, simple: bool) -> Self {
        Self { field, size, simple }
    }

    pub fn blocks(&self) -> u64 {
        if self.simple {
            1
        } else {
            2
        }
    }

    pub fn real_dimension(&self) -> u64 {
        self.size * self.size * self.field.real_dimension() * self.blocks()
    }

    /// Tensor product over `R`. Returns `None` if the result would have
    /// more than two simple summands.
    pub fn tensor(&self, other: &AlgebraDescriptor) -> Option<AlgebraDescriptor> {
        let (field, factor, blocks) = self.field.tensor(other.field);
        let blocks = blocks * self.blocks() * other.blocks();
        (blocks <= 2).then(|| AlgebraDescriptor {
            field,
            size: self.size * other.size * factor,
            simple: blocks == 1,
        })
    }

    /// `self ⊗_R R(m)`.
    pub fn with_matrix_factor(&self, m: u64) -> AlgebraDescriptor {
        AlgebraDescriptor { size: self.size * m, ..*self }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = if self.size == 1 {
            self.field.to_string()
        } else {
            format!("{}({})", self.field, self.size)
        };
        if self.simple {
            f.write_str(&one)
        } else {
            write!(f, "{one}+{one}")
        }
    }
}

const fn d(field: Field, size: u64, simple: bool) -> AlgebraDescriptor {
    AlgebraDescriptor::new(field, size, simple)
}

/// `Cl_n` for `0 <= n < 8`.
const BASE: [AlgebraDescriptor; 8] = [
    d(Field::R, 1, true),
    d(Field::C, 1, true),
    d(Field::H, 1, true),
    d(Field::H, 1, false),
    d(Field::H, 2, true),
    d(Field::C, 4, true),
    d(Field::R, 8, true),
    d(Field::R, 8, false),
];

fn field_descriptor(field: Field) -> AlgebraDescriptor {
    d(field, 1, true)
}

/// Matrix-algebra type of `Cl_n`, `CCl_n`, `Cl^h_n` or `CCl^h_n`.
///
/// Reduces `n` mod 8 and tensors with `R(16)` once per period; the
/// complex and quaternionic variants are `⊗ C`, `⊗ H` of the real one.
pub fn classify(n: u32, variant: Variant) -> AlgebraDescriptor {
    let mut out = BASE[(n % 8) as usize].with_matrix_factor(16u64.pow(n / 8));
    let tensor = |a: AlgebraDescriptor, k: Field| {
        a.tensor(&field_descriptor(k)).expect("Clifford-type algebras have at most two summands")
    };
    if matches!(variant, Variant::Clh | Variant::CClh) {
        out = tensor(out, Field::H);
    }
    if matches!(variant, Variant::CCl | Variant::CClh) {
        out = tensor(out, Field::C);
    }
    out
}

/// Matrix-algebra type of `Cl_{r,s}` (or `Cl_{r,s} ⊗ H`).
///
/// Strips `min(r, s)` hyperbolic pairs, each contributing `R(2)`. The
/// remaining definite algebra has the type of the row `(r - s) mod 8`;
/// its matrix size is then fixed by the real dimension.
pub fn classify_indefinite(r: u32, s: u32, quaternionic: bool) -> AlgebraDescriptor {
    let pairs = r.min(s);
    let variant = if quaternionic { Variant::Clh } else { Variant::Cl };
    let core = if r >= s {
        classify(r - s, variant)
    } else {
        let t = s - r;
        let row = (8 - t % 8) % 8;
        let shape = classify(row, variant);
        let dim = (1u64 << t) * variant.dimension_factor();
        let per_block = dim / (shape.field.real_dimension() * shape.blocks());
        let size = (per_block as f64).sqrt().round() as u64;
        debug_assert_eq!(size * size, per_block);
        AlgebraDescriptor { size, ..shape }
    };
    core.with_matrix_factor(1u64 << pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Field::*;

    #[test]
    fn small_table() {
        let rows = [
            ["R", "C", "H", "C(2)"],
            ["C", "C+C", "C(2)", "C(2)+C(2)"],
            ["H", "C(2)", "R(4)", "C(4)"],
            ["H+H", "C(2)+C(2)", "R(4)+R(4)", "C(4)+C(4)"],
            ["H(2)", "C(4)", "R(8)", "C(8)"],
            ["C(4)", "C(4)+C(4)", "C(8)", "C(8)+C(8)"],
            ["R(8)", "C(8)", "H(8)", "C(16)"],
            ["R(8)+R(8)", "C(8)+C(8)", "H(8)+H(8)", "C(16)+C(16)"],
            ["R(16)", "C(16)", "H(16)", "C(32)"],
        ];
        for (n, row) in rows.iter().enumerate() {
            for (v, expected) in Variant::ALL.iter().zip(row) {
                assert_eq!(classify(n as u32, *v).to_string(), *expected, "n={n} {v}");
            }
        }
    }

    #[test]
    fn periodic_rows() {
        assert_eq!(classify(14, Variant::Cl), d(R, 128, true));
        assert_eq!(classify(6, Variant::Clh), d(H, 8, true));
        assert_eq!(classify(0, Variant::CClh), d(C, 2, true));
    }

    #[test]
    fn indefinite_examples() {
        assert_eq!(classify_indefinite(1, 1, false), d(R, 2, true));
        assert_eq!(classify_indefinite(5, 1, false), d(H, 4, true));
        assert_eq!(classify_indefinite(4, 0, true), d(R, 8, true));
        assert_eq!(classify_indefinite(0, 1, false), d(R, 1, false));
        assert_eq!(classify_indefinite(0, 2, false), d(R, 2, true));
        assert_eq!(classify_indefinite(0, 3, false), d(C, 2, true));
        assert_eq!(classify_indefinite(0, 4, false), d(H, 2, true));
        assert_eq!(classify_indefinite(0, 8, false), d(R, 16, true));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&classify(6, Variant::Clh)).unwrap();
        assert_eq!(json, r#"{"field":"H","size":8,"simple":true}"#);
    }

    #[test]
    fn parse_names() {
        assert_eq!("Cl^h".parse::<Variant>().unwrap(), Variant::Clh);
        assert_eq!("ℍ".parse::<Field>().unwrap(), H);
        assert!("X".parse::<Field>().is_err());
    }
}
