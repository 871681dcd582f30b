//! Open-addressing coefficient table keyed by monomial, used by hashed
//! queues to fold like terms before they reach the priority structure.

use crate::field::PrimeField;
use crate::monomial::Monomial;

const EMPTY: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct CoeffTable {
    slots: Vec<u32>,
    vals: Vec<(Monomial, u32)>,
    free: Vec<u32>,
    len: usize,
}

impl Default for CoeffTable {
    fn default() -> Self {
        CoeffTable {
            slots: vec![EMPTY; 16],
            vals: Vec::new(),
            free: Vec::new(),
            len: 0,
        }
    }
}

impl CoeffTable {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn mask(&self) -> usize {
        self.slots.len() - 1
    }

    fn find(&self, m: &Monomial) -> (usize, bool) {
        let mut i = m.hash_value() as usize & self.mask();
        loop {
            match self.slots[i] {
                EMPTY => return (i, false),
                v if self.vals[v as usize].0 == *m => return (i, true),
                _ => i = (i + 1) & self.mask(),
            }
        }
    }

    /// Adds `coeff` to the entry for `m`. Returns true if `m` was new.
    pub fn add(&mut self, field: &PrimeField, m: &Monomial, coeff: u32) -> bool {
        let (i, found) = self.find(m);
        if found {
            let v = &mut self.vals[self.slots[i] as usize].1;
            *v = field.add(*v, coeff);
            return false;
        }
        let v = match self.free.pop() {
            Some(v) => {
                self.vals[v as usize] = (m.clone(), coeff);
                v
            }
            None => {
                self.vals.push((m.clone(), coeff));
                (self.vals.len() - 1) as u32
            }
        };
        self.slots[i] = v;
        self.len += 1;
        if 2 * self.len > self.slots.len() {
            self.grow();
        }
        true
    }

    /// Removes the entry for `m`, returning its folded coefficient.
    pub fn remove(&mut self, m: &Monomial) -> Option<u32> {
        let (mut i, found) = self.find(m);
        if !found {
            return None;
        }
        let v = self.slots[i];
        self.free.push(v);
        self.len -= 1;
        // Backward-shift deletion keeps probe sequences intact without
        // tombstones.
        let mask = self.mask();
        let mut j = i;
        loop {
            j = (j + 1) & mask;
            let s = self.slots[j];
            if s == EMPTY {
                break;
            }
            let home = self.vals[s as usize].0.hash_value() as usize & mask;
            let between = if i <= j {
                i < home && home <= j
            } else {
                i < home || home <= j
            };
            if !between {
                self.slots[i] = s;
                i = j;
            }
        }
        self.slots[i] = EMPTY;
        Some(self.vals[v as usize].1)
    }

    fn grow(&mut self) {
        let doubled = vec![EMPTY; self.slots.len() * 2];
        let old = std::mem::replace(&mut self.slots, doubled);
        for v in old.into_iter().filter(|&v| v != EMPTY) {
            let (i, _) = self.find(&self.vals[v as usize].0);
            self.slots[i] = v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_and_removes() {
        let f = PrimeField::new(101).unwrap();
        let mut t = CoeffTable::default();
        let ms: Vec<Monomial> = (0..100u32).map(|i| Monomial::new(vec![i % 7, i / 7])).collect();
        for m in &ms {
            assert!(t.add(&f, m, 3));
        }
        assert!(!t.add(&f, &ms[5], 98));
        assert_eq!(t.remove(&ms[5]), Some(0));
        assert_eq!(t.remove(&ms[5]), None);
        for m in ms.iter().skip(6) {
            assert_eq!(t.remove(m), Some(3));
        }
        assert_eq!(t.len(), 5);
    }
}
