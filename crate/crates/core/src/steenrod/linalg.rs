//! Dense row reduction over F2 with rows packed into `u64` words.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)] }
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn first_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// Echelon basis where every row's lowest set bit is its pivot and no two
/// rows share a pivot. Each row carries the combination of input vectors
/// that produced it.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    tags: usize,
    rows: Vec<(usize, BitRow, BitRow)>,
}

impl Echelon {
    pub fn new(tags: usize) -> Self {
        Echelon { tags, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _, _)| *p)
    }

    /// Reduces `v` to normal form (zero at every pivot) and returns the
    /// combination of input vectors that was subtracted.
    pub fn reduce(&self, v: &mut BitRow) -> BitRow {
        let mut combo = BitRow::zeros(self.tags);
        for (pivot, row, tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_with(row);
                combo.xor_with(tag);
            }
        }
        combo
    }

    /// Adds input vector number `tag`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: BitRow, tag: usize) -> bool {
        let mut combo = self.reduce(&mut v);
        combo.flip(tag);
        let Some(pivot) = v.first_set() else {
            return false;
        };
        let at = self.rows.partition_point(|(p, _, _)| *p < pivot);
        self.rows.insert(at, (pivot, v, combo));
        true
    }
}

/// Rank of a list of rows.
pub(crate) fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut e = Echelon::new(1);
    for r in rows {
        e.insert(r, 0);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(bits: &[usize], len: usize) -> BitRow {
        let mut r = BitRow::zeros(len);
        for &b in bits {
            r.flip(b);
        }
        r
    }

    #[test]
    fn reduction_and_certificates() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[1, 65], 70), 0));
        assert!(e.insert(row(&[65, 66], 70), 1));
        assert!(!e.insert(row(&[1, 66], 70), 2));
        let mut v = row(&[1, 66], 70);
        let combo = e.reduce(&mut v);
        assert!(v.is_zero());
        assert_eq!(combo.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(rank([row(&[0], 3), row(&[0], 3), row(&[2], 3)]), 2);
    }
}
