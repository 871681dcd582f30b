//! Binary max-heap with a caller-supplied comparison.

use std::cmp::Ordering;

use super::Keyed;
use crate::error::QueueError;

#[derive(Debug, Clone)]
pub struct Heap<T> {
    data: Vec<T>,
}

impl<T> Default for Heap<T> {
    fn default() -> Self {
        Heap { data: Vec::new() }
    }
}

impl<T> Heap<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn peek(&self) -> Option<&T> {
        self.data.first()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn clear(&mut self) {
        self.data.clear();
    }

    /// Inserts `item`. With `dedup`, an equal key met on the way up absorbs
    /// the item via [`Keyed::merge`] and the item is handed back.
    pub fn push<K: Keyed<T>>(&mut self, item: T, ops: &K, dedup: bool) -> Option<T> {
        if dedup {
            let mut i = self.data.len();
            while i > 0 {
                let p = (i - 1) / 2;
                match ops.cmp(&item, &self.data[p]) {
                    Ordering::Greater => i = p,
                    Ordering::Equal => {
                        ops.merge(&mut self.data[p], &item);
                        return Some(item);
                    }
                    Ordering::Less => break,
                }
            }
        }
        self.data.push(item);
        self.sift_up(self.data.len() - 1, ops);
        None
    }

    pub fn pop<K: Keyed<T>>(&mut self, ops: &K) -> Option<T> {
        let last = self.data.pop()?;
        if self.data.is_empty() {
            return Some(last);
        }
        let top = std::mem::replace(&mut self.data[0], last);
        self.sift_hole(ops);
        Some(top)
    }

    /// Replaces the maximum by `item`, whose key must not exceed it.
    pub fn replace_top<K: Keyed<T>>(&mut self, item: T, ops: &K) -> Result<T, QueueError> {
        let top = self.data.first().ok_or(QueueError::Empty)?;
        if ops.cmp(&item, top) == Ordering::Greater {
            return Err(QueueError::KeyAboveMax);
        }
        let old = std::mem::replace(&mut self.data[0], item);
        self.sift_down(0, ops);
        Ok(old)
    }

    fn sift_up<K: Keyed<T>>(&mut self, mut i: usize, ops: &K) {
        while i > 0 {
            let p = (i - 1) / 2;
            if ops.cmp(&self.data[i], &self.data[p]) != Ordering::Greater {
                break;
            }
            self.data.swap(i, p);
            i = p;
        }
    }

    fn sift_down<K: Keyed<T>>(&mut self, mut i: usize, ops: &K) {
        let n = self.data.len();
        loop {
            let l = 2 * i + 1;
            if l >= n {
                return;
            }
            let r = l + 1;
            let c = if r < n && ops.cmp(&self.data[r], &self.data[l]) == Ordering::Greater {
                r
            } else {
                l
            };
            if ops.cmp(&self.data[c], &self.data[i]) != Ordering::Greater {
                return;
            }
            self.data.swap(i, c);
            i = c;
        }
    }

    // Pop with the hole technique: the element moved to the root is pushed
    // all the way down along the larger children, one comparison per level,
    // then sifted back up, which is usually a short distance.
    fn sift_hole<K: Keyed<T>>(&mut self, ops: &K) {
        let n = self.data.len();
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let c = if r < n && ops.cmp(&self.data[r], &self.data[l]) == Ordering::Greater {
                r
            } else {
                l
            };
            self.data.swap(i, c);
            i = c;
        }
        self.sift_up(i, ops);
    }

    /// Checks the heap property.
    pub fn audit<K: Keyed<T>>(&self, ops: &K) -> bool {
        (1..self.data.len()).all(|i| ops.cmp(&self.data[i], &self.data[(i - 1) / 2]) != Ordering::Greater)
    }
}
