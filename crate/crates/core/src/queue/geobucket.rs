//! Geobucket: bucket `i` is a sorted run of at most `4 * 4^i` items.
//! Insertions land in the smallest bucket that can hold them and overflow
//! cascades upward by merging.

use std::cmp::Ordering;

use super::Keyed;
use crate::error::QueueError;

pub const GROWTH: usize = 4;
pub const FIRST_CAPACITY: usize = 4;

pub fn bucket_capacity(i: usize) -> usize {
    FIRST_CAPACITY * GROWTH.pow(i as u32)
}

#[derive(Debug, Clone)]
pub struct Geobucket<T> {
    // Each bucket sorted ascending so the bucket maximum sits at the end.
    buckets: Vec<Vec<T>>,
    len: usize,
}

impl<T> Default for Geobucket<T> {
    fn default() -> Self {
        Geobucket {
            buckets: Vec::new(),
            len: 0,
        }
    }
}

impl<T> Geobucket<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn clear(&mut self) {
        self.buckets.clear();
        self.len = 0;
    }

    pub fn bucket_sizes(&self) -> Vec<usize> {
        self.buckets.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.buckets.iter().flatten()
    }

    fn max_bucket<K: Keyed<T>>(&self, ops: &K) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, b) in self.buckets.iter().enumerate() {
            let Some(x) = b.last() else { continue };
            match best {
                Some(j) if ops.cmp(x, self.buckets[j].last().unwrap()) != Ordering::Greater => {}
                _ => best = Some(i),
            }
        }
        best
    }

    pub fn peek<K: Keyed<T>>(&self, ops: &K) -> Option<&T> {
        self.max_bucket(ops).and_then(|i| self.buckets[i].last())
    }

    pub fn pop<K: Keyed<T>>(&mut self, ops: &K) -> Option<T> {
        let i = self.max_bucket(ops)?;
        self.len -= 1;
        self.buckets[i].pop()
    }

    /// Replaces the maximum by `item`, whose key must not exceed it. Items
    /// absorbed by dedup merging are appended to `displaced`.
    pub fn replace_top<K: Keyed<T>>(
        &mut self,
        item: T,
        ops: &K,
        dedup: bool,
        displaced: &mut Vec<T>,
    ) -> Result<T, QueueError> {
        let i = self.max_bucket(ops).ok_or(QueueError::Empty)?;
        if ops.cmp(&item, self.buckets[i].last().unwrap()) == Ordering::Greater {
            return Err(QueueError::KeyAboveMax);
        }
        let old = self.buckets[i].pop().unwrap();
        self.len -= 1;
        self.push_run(vec![item], ops, dedup, displaced);
        Ok(old)
    }

    /// Inserts one item.
    pub fn push<K: Keyed<T>>(&mut self, item: T, ops: &K, dedup: bool, displaced: &mut Vec<T>) {
        self.push_run(vec![item], ops, dedup, displaced);
    }

    /// Inserts a run of items sorted ascending.
    pub fn push_run<K: Keyed<T>>(
        &mut self,
        run: Vec<T>,
        ops: &K,
        dedup: bool,
        displaced: &mut Vec<T>,
    ) {
        if run.is_empty() {
            return;
        }
        let mut i = 0;
        while bucket_capacity(i) < run.len() {
            i += 1;
        }
        self.len += run.len();
        let mut carry = run;
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let here = std::mem::take(&mut self.buckets[i]);
            let before = here.len() + carry.len();
            let merged = merge_runs(here, carry, ops, dedup, displaced);
            self.len -= before - merged.len();
            if merged.len() <= bucket_capacity(i) {
                self.buckets[i] = merged;
                return;
            }
            carry = merged;
            i += 1;
        }
    }

    /// Checks bucket sortedness and capacities.
    pub fn audit<K: Keyed<T>>(&self, ops: &K) -> bool {
        self.buckets.iter().enumerate().all(|(i, b)| {
            b.len() <= bucket_capacity(i)
                && b.windows(2).all(|w| ops.cmp(&w[0], &w[1]) != Ordering::Greater)
        }) && self.len == self.buckets.iter().map(Vec::len).sum::<usize>()
    }
}

fn merge_runs<T, K: Keyed<T>>(
    a: Vec<T>,
    b: Vec<T>,
    ops: &K,
    dedup: bool,
    displaced: &mut Vec<T>,
) -> Vec<T> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out: Vec<T> = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => {
                if ops.cmp(x, y) == Ordering::Greater {
                    b.next()
                } else {
                    a.next()
                }
            }
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (None, None) => break,
        };
        let next = next.unwrap();
        if dedup {
            if let Some(last) = out.last_mut() {
                if ops.cmp(last, &next) == Ordering::Equal {
                    ops.merge(last, &next);
                    displaced.push(next);
                    continue;
                }
            }
        }
        out.push(next);
    }
    out
}
