//! S-pair queues.
//!
//! The [`PairTriangle`] stores, for each basis element `j`, the rows `i < j`
//! of its queued pairs sorted by key, as 16-bit integers while `j < 2^16`
//! and 32-bit integers beyond. Only the minimal key of each column is kept;
//! the next one is recomputed from `(i, j)` when the column advances. A
//! small front queue orders the column minima.
//!
//! The flat variants keep every key in one heap or tournament tree and
//! exist for comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::queue::{Heap, Keyed, TourTree};

/// Supplies the order on S-pairs. `key` must be deterministic, since the
/// triangle recomputes keys it has thrown away.
pub trait PairKeys {
    type Key: Clone;

    fn key(&self, i: usize, j: usize) -> Self::Key;

    fn cmp(&self, a: &Self::Key, b: &Self::Key) -> Ordering;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum SPairQueueKind {
    #[default]
    TriangleTourTree,
    TriangleHeap,
    Heap,
    TourTree,
}

impl SPairQueueKind {
    pub const ALL: [SPairQueueKind; 4] = [
        SPairQueueKind::TriangleTourTree,
        SPairQueueKind::TriangleHeap,
        SPairQueueKind::Heap,
        SPairQueueKind::TourTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SPairQueueKind::TriangleTourTree => "triangle-tt",
            SPairQueueKind::TriangleHeap => "triangle-heap",
            SPairQueueKind::Heap => "heap",
            SPairQueueKind::TourTree => "tourtree",
        }
    }
}


impl fmt::Display for SPairQueueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SPairQueueKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SPairQueueKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown S-pair queue '{s}'"))
    }
}

/// A queued pair with its materialized key.
#[derive(Debug, Clone)]
pub struct KeyedPair<K> {
    pub key: K,
    pub i: u32,
    pub j: u32,
}

// Turns the max-queues into min-queues on (key, j, i).
struct MinFirst<'k, P>(&'k P);

impl<P: PairKeys> Keyed<KeyedPair<P::Key>> for MinFirst<'_, P> {
    fn cmp(&self, a: &KeyedPair<P::Key>, b: &KeyedPair<P::Key>) -> Ordering {
        self.0
            .cmp(&a.key, &b.key)
            .then(a.j.cmp(&b.j))
            .then(a.i.cmp(&b.i))
            .reverse()
    }
}

#[derive(Debug, Clone)]
enum Front<K> {
    Heap(Heap<KeyedPair<K>>),
    TourTree(TourTree<KeyedPair<K>>),
}

impl<K: Clone> Front<K> {
    fn new(tourtree: bool) -> Self {
        if tourtree {
            Front::TourTree(TourTree::new())
        } else {
            Front::Heap(Heap::new())
        }
    }

    fn len(&self) -> usize {
        match self {
            Front::Heap(h) => h.len(),
            Front::TourTree(t) => t.len(),
        }
    }

    fn peek(&self) -> Option<&KeyedPair<K>> {
        match self {
            Front::Heap(h) => h.peek(),
            Front::TourTree(t) => t.peek(),
        }
    }

    fn push<P: PairKeys<Key = K>>(&mut self, item: KeyedPair<K>, keys: &P) {
        let ops = MinFirst(keys);
        match self {
            Front::Heap(h) => h.push(item, &ops, false),
            Front::TourTree(t) => t.push(item, &ops, false),
        };
    }

    fn pop<P: PairKeys<Key = K>>(&mut self, keys: &P) -> Option<KeyedPair<K>> {
        let ops = MinFirst(keys);
        match self {
            Front::Heap(h) => h.pop(&ops),
            Front::TourTree(t) => t.pop(&ops),
        }
    }

    fn replace_top<P: PairKeys<Key = K>>(&mut self, item: KeyedPair<K>, keys: &P) {
        let ops = MinFirst(keys);
        let r = match self {
            Front::Heap(h) => h.replace_top(item, &ops),
            Front::TourTree(t) => t.replace_top(item, &ops),
        };
        debug_assert!(r.is_ok(), "column keys must be non-decreasing");
    }
}

#[derive(Debug, Clone)]
enum Column {
    Narrow(Vec<u16>),
    Wide(Vec<u32>),
}

impl Column {
    fn width(&self) -> usize {
        match self {
            Column::Narrow(_) => 2,
            Column::Wide(_) => 4,
        }
    }

    fn pop(&mut self) -> Option<u32> {
        match self {
            Column::Narrow(v) => v.pop().map(u32::from),
            Column::Wide(v) => v.pop(),
        }
    }

    fn last(&self) -> Option<u32> {
        match self {
            Column::Narrow(v) => v.last().map(|&x| u32::from(x)),
            Column::Wide(v) => v.last().copied(),
        }
    }
}

/// Memory bookkeeping of a [`PairTriangle`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriangleMemory {
    /// Bytes of row indices currently stored.
    pub bytes: usize,
    pub narrow_pairs: usize,
    pub wide_pairs: usize,
    /// Keys held by the front queue.
    pub front_keys: usize,
    pub nonempty_columns: usize,
}

impl TriangleMemory {
    /// The bound the triangle promises: one 2- or 4-byte integer per pair.
    pub fn within_bound(&self) -> bool {
        self.bytes <= 2 * self.narrow_pairs + 4 * self.wide_pairs && self.front_keys <= self.nonempty_columns
    }
}

/// The S-pair triangle.
#[derive(Debug, Clone)]
pub struct PairTriangle<K> {
    // Rows stored sorted by descending key, so the column minimum is last.
    columns: Vec<Option<Column>>,
    front: Front<K>,
    mem: TriangleMemory,
}

impl<K: Clone> PairTriangle<K> {
    pub fn new(tourtree_front: bool) -> Self {
        PairTriangle {
            columns: Vec::new(),
            front: Front::new(tourtree_front),
            mem: TriangleMemory::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.mem.narrow_pairs + self.mem.wide_pairs
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn memory(&self) -> TriangleMemory {
        self.mem
    }

    /// Queues the pairs `(i, j)` for one new column `j`.
    pub fn add_column<P: PairKeys<Key = K>>(&mut self, j: usize, mut pairs: Vec<(usize, K)>, keys: &P) {
        if pairs.is_empty() {
            return;
        }
        debug_assert!(pairs.iter().all(|&(i, _)| i < j));
        pairs.sort_by(|a, b| keys.cmp(&b.1, &a.1).then(b.0.cmp(&a.0)));
        let (min_i, min_key) = pairs.pop().unwrap();
        let n = pairs.len() + 1;
        let mut rows: Vec<usize> = pairs.into_iter().map(|(i, _)| i).collect();
        rows.push(min_i);
        let col = if j < 1 << 16 {
            self.mem.narrow_pairs += n;
            Column::Narrow(rows.into_iter().map(|i| i as u16).collect())
        } else {
            self.mem.wide_pairs += n;
            Column::Wide(rows.into_iter().map(|i| i as u32).collect())
        };
        self.mem.bytes += n * col.width();
        if self.columns.len() <= j {
            self.columns.resize_with(j + 1, || None);
        }
        debug_assert!(self.columns[j].is_none(), "column {j} added twice");
        self.columns[j] = Some(col);
        self.mem.nonempty_columns += 1;
        self.front.push(
            KeyedPair {
                key: min_key,
                i: min_i as u32,
                j: j as u32,
            },
            keys,
        );
        self.mem.front_keys = self.front.len();
    }

    pub fn peek_min(&self) -> Option<&KeyedPair<K>> {
        self.front.peek()
    }

    pub fn peek_min_key(&self) -> Option<&K> {
        self.front.peek().map(|p| &p.key)
    }

    /// Removes and returns the pair with the smallest key.
    pub fn pop_min<P: PairKeys<Key = K>>(&mut self, keys: &P) -> Option<(usize, usize, K)> {
        let top = self.front.peek()?;
        let (i, j) = (top.i, top.j as usize);
        let col = self.columns[j].as_mut().expect("front names a live column");
        let popped = col.pop();
        debug_assert_eq!(popped, Some(i));
        let width = col.width();
        self.mem.bytes -= width;
        if width == 2 {
            self.mem.narrow_pairs -= 1;
        } else {
            self.mem.wide_pairs -= 1;
        }
        let out = match col.last() {
            Some(next) => {
                let key = keys.key(next as usize, j);
                let item = KeyedPair {
                    key,
                    i: next,
                    j: j as u32,
                };
                let old = self.front.peek().unwrap().key.clone();
                self.front.replace_top(item, keys);
                old
            }
            None => {
                self.columns[j] = None;
                self.mem.nonempty_columns -= 1;
                self.front.pop(keys).unwrap().key
            }
        };
        self.mem.front_keys = self.front.len();
        Some((i as usize, j, out))
    }

    /// Drops every queued pair.
    pub fn clear(&mut self) {
        let tt = matches!(self.front, Front::TourTree(_));
        *self = PairTriangle::new(tt);
    }
}

/// One flat priority queue holding every pair with its key.
#[derive(Debug, Clone)]
pub struct FlatPairQueue<K> {
    queue: Front<K>,
}

impl<K: Clone> FlatPairQueue<K> {
    pub fn new(tourtree: bool) -> Self {
        FlatPairQueue {
            queue: Front::new(tourtree),
        }
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.len() == 0
    }

    pub fn add_column<P: PairKeys<Key = K>>(&mut self, j: usize, pairs: Vec<(usize, K)>, keys: &P) {
        for (i, key) in pairs {
            self.queue.push(
                KeyedPair {
                    key,
                    i: i as u32,
                    j: j as u32,
                },
                keys,
            );
        }
    }

    pub fn peek_min_key(&self) -> Option<&K> {
        self.queue.peek().map(|p| &p.key)
    }

    pub fn pop_min<P: PairKeys<Key = K>>(&mut self, keys: &P) -> Option<(usize, usize, K)> {
        self.queue
            .pop(keys)
            .map(|p| (p.i as usize, p.j as usize, p.key))
    }
}

/// Any of the four S-pair queue variants.
#[derive(Debug, Clone)]
pub enum SPairQueue<K> {
    Triangle(PairTriangle<K>),
    Flat(FlatPairQueue<K>),
}

impl<K: Clone> SPairQueue<K> {
    pub fn new(kind: SPairQueueKind) -> Self {
        match kind {
            SPairQueueKind::TriangleTourTree => SPairQueue::Triangle(PairTriangle::new(true)),
            SPairQueueKind::TriangleHeap => SPairQueue::Triangle(PairTriangle::new(false)),
            SPairQueueKind::Heap => SPairQueue::Flat(FlatPairQueue::new(false)),
            SPairQueueKind::TourTree => SPairQueue::Flat(FlatPairQueue::new(true)),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SPairQueue::Triangle(t) => t.len(),
            SPairQueue::Flat(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn add_column<P: PairKeys<Key = K>>(&mut self, j: usize, pairs: Vec<(usize, K)>, keys: &P) {
        match self {
            SPairQueue::Triangle(t) => t.add_column(j, pairs, keys),
            SPairQueue::Flat(f) => f.add_column(j, pairs, keys),
        }
    }

    pub fn peek_min_key(&self) -> Option<&K> {
        match self {
            SPairQueue::Triangle(t) => t.peek_min_key(),
            SPairQueue::Flat(f) => f.peek_min_key(),
        }
    }

    pub fn pop_min<P: PairKeys<Key = K>>(&mut self, keys: &P) -> Option<(usize, usize, K)> {
        match self {
            SPairQueue::Triangle(t) => t.pop_min(keys),
            SPairQueue::Flat(f) => f.pop_min(keys),
        }
    }

    /// Memory bookkeeping, for the triangle variants.
    pub fn memory(&self) -> Option<TriangleMemory> {
        match self {
            SPairQueue::Triangle(t) => Some(t.memory()),
            SPairQueue::Flat(_) => None,
        }
    }
}
