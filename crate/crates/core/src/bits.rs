//! A growable triangular bit array with one bit per unordered pair.

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriangleBits {
    words: Vec<u64>,
}

#[inline]
fn index(a: usize, b: usize) -> usize {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    j * (j - 1) / 2 + i
}

impl TriangleBits {
    pub fn new() -> Self {
        Self::default()
    }

    /// Bit for the pair `{a, b}`, `a != b`.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        debug_assert_ne!(a, b);
        let k = index(a, b);
        self.words.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1)
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        let k = index(a, b);
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] |= 1 << (k % 64);
    }

    /// Bytes of backing storage.
    pub fn bytes(&self) -> usize {
        self.words.len() * 8
    }

    pub fn clear(&mut self) {
        self.words = Vec::new();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_distinct() {
        let mut t = TriangleBits::new();
        t.set(3, 7);
        assert!(t.get(7, 3));
        for j in 1..20 {
            for i in 0..j {
                assert_eq!(t.get(i, j), (i, j) == (3, 7));
            }
        }
    }
}
