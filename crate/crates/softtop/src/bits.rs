//! Fixed-width bit vector backing the canonical cell encoding of soft sets.
//!
//! Equality and ordering are bit-exact: `cmp` treats the vector as one large
//! unsigned integer (cell 0 is the least significant bit), which is the
//! canonical order used everywhere a deterministic listing is required.

use std::cmp::Ordering;

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    nbits: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn empty(nbits: usize) -> Self {
        Bits {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut b = Bits::empty(nbits);
        for w in &mut b.words {
            *w = u64::MAX;
        }
        b.trim();
        b
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn get(&self, bit: usize) -> bool {
        debug_assert!(bit < self.nbits);
        self.words[bit / WORD_BITS] & (1 << (bit % WORD_BITS)) != 0
    }

    pub fn set(&mut self, bit: usize, value: bool) {
        debug_assert!(bit < self.nbits);
        let mask = 1u64 << (bit % WORD_BITS);
        if value {
            self.words[bit / WORD_BITS] |= mask;
        } else {
            self.words[bit / WORD_BITS] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty_set(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full_set(&self) -> bool {
        self.count_ones() == self.nbits
    }

    pub fn union(&self, other: &Bits) -> Bits {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Bits) -> Bits {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Bits {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + bit)
                }
            })
        })
    }

    /// Low 64 bits as a raw mask; valid only for widths <= 64.
    pub fn as_mask(&self) -> u64 {
        debug_assert!(self.nbits <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn from_mask(nbits: usize, mask: u64) -> Bits {
        debug_assert!(nbits <= WORD_BITS);
        let mut b = Bits::empty(nbits);
        if !b.words.is_empty() {
            b.words[0] = mask;
        }
        b.trim();
        b
    }

    fn zip_with(&self, other: &Bits, f: impl Fn(u64, u64) -> u64) -> Bits {
        debug_assert_eq!(self.nbits, other.nbits);
        Bits {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.nbits == 0 {
            self.words.clear();
        }
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involution() {
        for nbits in [1, 3, 64, 65, 130] {
            let mut b = Bits::empty(nbits);
            b.set(0, true);
            b.set(nbits - 1, true);
            assert_eq!(b.complement().complement(), b);
            assert!(b.complement().is_disjoint(&b));
            assert_eq!(b.complement().union(&b), Bits::full(nbits));
        }
    }

    #[test]
    fn ordering_is_numeric() {
        let a = Bits::from_mask(4, 0b0011);
        let b = Bits::from_mask(4, 0b0100);
        assert!(a < b);
        let mut hi = Bits::empty(70);
        hi.set(69, true);
        let mut lo = Bits::full(70);
        lo.set(69, false);
        assert!(lo < hi);
    }

    #[test]
    fn ones_iterates_ascending() {
        let b = Bits::from_mask(8, 0b1010_0110);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![1, 2, 5, 7]);
    }
}
