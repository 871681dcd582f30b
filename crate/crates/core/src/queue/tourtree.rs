//! Tournament tree: a complete binary tree over an array of leaf slots,
//! where every interior node records the index of the winning (maximal)
//! leaf below it.

use std::cmp::Ordering;

use super::Keyed;
use crate::error::QueueError;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct TourTree<T> {
    leaves: Vec<Option<T>>,
    // Node k in 1..cap holds the winning leaf index; node cap + l is leaf l.
    winners: Vec<u32>,
    free: Vec<u32>,
    len: usize,
}

impl<T> Default for TourTree<T> {
    fn default() -> Self {
        Self::with_capacity(2)
    }
}

impl<T> TourTree<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(cap: usize) -> Self {
        let cap = cap.next_power_of_two().max(2);
        TourTree {
            leaves: (0..cap).map(|_| None).collect(),
            winners: vec![NONE; cap],
            free: (0..cap as u32).rev().collect(),
            len: 0,
        }
    }

    fn cap(&self) -> usize {
        self.leaves.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn clear(&mut self) {
        *self = Self::with_capacity(self.cap());
    }

    pub fn peek(&self) -> Option<&T> {
        match self.winners[1] {
            NONE => None,
            w => self.leaves[w as usize].as_ref(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.leaves.iter().flatten()
    }

    fn winner_of(&self, node: usize) -> u32 {
        let cap = self.cap();
        if node >= cap {
            let l = node - cap;
            if self.leaves[l].is_some() {
                l as u32
            } else {
                NONE
            }
        } else {
            self.winners[node]
        }
    }

    // Recomputes winners on the path from leaf `l` to the root. With dedup,
    // returns the leaf whose key equals that of `l` if the two meet.
    fn update_path<K: Keyed<T>>(&mut self, l: usize, ops: &K, dedup: bool) -> Option<u32> {
        let mut node = (self.cap() + l) / 2;
        while node >= 1 {
            let a = self.winner_of(2 * node);
            let b = self.winner_of(2 * node + 1);
            let w = match (a, b) {
                (NONE, x) | (x, NONE) => x,
                (a, b) => {
                    let va = self.leaves[a as usize].as_ref().unwrap();
                    let vb = self.leaves[b as usize].as_ref().unwrap();
                    match ops.cmp(va, vb) {
                        Ordering::Less => b,
                        Ordering::Greater => a,
                        Ordering::Equal => {
                            if dedup && (a as usize == l || b as usize == l) {
                                return Some(if a as usize == l { b } else { a });
                            }
                            a
                        }
                    }
                }
            };
            self.winners[node] = w;
            node /= 2;
        }
        None
    }

    fn grow<K: Keyed<T>>(&mut self, ops: &K) {
        let old = self.cap();
        let cap = old * 2;
        self.leaves.resize_with(cap, || None);
        self.winners = vec![NONE; cap];
        self.free.extend((old as u32..cap as u32).rev());
        for node in (1..cap).rev() {
            let a = self.winner_of(2 * node);
            let b = self.winner_of(2 * node + 1);
            self.winners[node] = match (a, b) {
                (NONE, x) | (x, NONE) => x,
                (a, b) => {
                    let va = self.leaves[a as usize].as_ref().unwrap();
                    let vb = self.leaves[b as usize].as_ref().unwrap();
                    if ops.cmp(va, vb) == Ordering::Less {
                        b
                    } else {
                        a
                    }
                }
            };
        }
    }

    /// Inserts `item`. With `dedup`, an equal key met on the way to the root
    /// absorbs the item via [`Keyed::merge`] and the item is handed back.
    pub fn push<K: Keyed<T>>(&mut self, item: T, ops: &K, dedup: bool) -> Option<T> {
        if self.free.is_empty() {
            self.grow(ops);
        }
        let l = self.free.pop().unwrap() as usize;
        self.leaves[l] = Some(item);
        self.len += 1;
        if let Some(other) = self.update_path(l, ops, dedup) {
            let item = self.leaves[l].take().unwrap();
            ops.merge(self.leaves[other as usize].as_mut().unwrap(), &item);
            self.free.push(l as u32);
            self.len -= 1;
            self.update_path(l, ops, false);
            return Some(item);
        }
        None
    }

    pub fn pop<K: Keyed<T>>(&mut self, ops: &K) -> Option<T> {
        let w = self.winners[1];
        if w == NONE {
            return None;
        }
        let item = self.leaves[w as usize].take();
        self.free.push(w);
        self.len -= 1;
        self.update_path(w as usize, ops, false);
        item
    }

    /// Replaces the maximum by `item`, whose key must not exceed it.
    pub fn replace_top<K: Keyed<T>>(&mut self, item: T, ops: &K) -> Result<T, QueueError> {
        let w = self.winners[1];
        if w == NONE {
            return Err(QueueError::Empty);
        }
        let slot = self.leaves[w as usize].as_mut().unwrap();
        if ops.cmp(&item, slot) == Ordering::Greater {
            return Err(QueueError::KeyAboveMax);
        }
        let old = std::mem::replace(slot, item);
        self.update_path(w as usize, ops, false);
        Ok(old)
    }

    /// Checks that every interior node holds the maximum of its children.
    pub fn audit<K: Keyed<T>>(&self, ops: &K) -> bool {
        (1..self.cap()).all(|node| {
            let w = self.winners[node];
            let a = self.winner_of(2 * node);
            let b = self.winner_of(2 * node + 1);
            let get = |x: u32| self.leaves[x as usize].as_ref().unwrap();
            match (a, b) {
                (NONE, NONE) => w == NONE,
                (NONE, x) | (x, NONE) => w == x,
                (a, b) => {
                    (w == a || w == b)
                        && ops.cmp(get(w), get(a)) != Ordering::Less
                        && ops.cmp(get(w), get(b)) != Ordering::Less
                }
            }
        }) && self.len == self.leaves.iter().flatten().count()
    }
}

#[cfg(test)]
mod tests {
    use super::super::NaturalOrder;
    use super::*;

    #[test]
    fn replace_top_examples() {
        let ops = NaturalOrder;
        let mut t = TourTree::new();
        for x in [8, 5, 3, 1] {
            t.push(x, &ops, false);
        }
        assert_eq!(t.replace_top(2, &ops), Ok(8));
        assert_eq!(t.peek(), Some(&5));
        assert_eq!(t.replace_top(5, &ops), Ok(5));
        assert_eq!(t.peek(), Some(&5));
        assert_eq!(t.replace_top(6, &ops), Err(QueueError::KeyAboveMax));
        assert!(t.audit(&ops));
    }

    #[test]
    fn pops_in_order_across_growth() {
        let ops = NaturalOrder;
        let mut t = TourTree::new();
        let xs = [4, 9, 1, 7, 7, 3, 0, 12, 5, 5, 11];
        for x in xs {
            t.push(x, &ops, false);
            assert!(t.audit(&ops));
        }
        let mut out = Vec::new();
        while let Some(x) = t.pop(&ops) {
            assert!(t.audit(&ops));
            out.push(x);
        }
        let mut want = xs.to_vec();
        want.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(out, want);
    }
}
