//! Priority queues for the terms of a polynomial under reduction.
//!
//! A [`TermQueue`] holds a sum of products `c * m * g` and hands out its
//! terms in decreasing monomial order with like terms folded. The backing
//! structure (heap, geobucket, tournament tree) and the three options
//! (hashed, dedup, compressed) are chosen by a [`QueueConfig`]; every
//! configuration produces the same sequence of popped terms.

mod geobucket;
mod heap;
mod table;
mod tourtree;

pub use geobucket::{bucket_capacity, Geobucket};
pub use heap::Heap;
pub use table::CoeffTable;
pub use tourtree::TourTree;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::QueueError;
use crate::field::PrimeField;
use crate::monomial::{Monomial, RingOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Comparison (and optional merge) used by the generic max-queues.
pub trait Keyed<T> {
    fn cmp(&self, a: &T, b: &T) -> Ordering;

    /// Folds `from` into `into` when dedup meets two equal keys.
    fn merge(&self, _into: &mut T, _from: &T) {}
}

/// `Ord` order on plain values, handy for tests and examples.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalOrder;

impl<T: Ord> Keyed<T> for NaturalOrder {
    fn cmp(&self, a: &T, b: &T) -> Ordering {
        a.cmp(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueueBackend {
    Heap,
    Geobucket,
    TourTree,
}

impl QueueBackend {
    pub const ALL: [QueueBackend; 3] = [QueueBackend::Heap, QueueBackend::Geobucket, QueueBackend::TourTree];

    pub fn name(self) -> &'static str {
        match self {
            QueueBackend::Heap => "heap",
            QueueBackend::Geobucket => "geobucket",
            QueueBackend::TourTree => "tourtree",
        }
    }
}

impl FromStr for QueueBackend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        QueueBackend::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown reducer queue '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueueConfig {
    pub backend: QueueBackend,
    pub hashed: bool,
    pub dedup: bool,
    pub compressed: bool,
}

impl Default for QueueConfig {
    fn default() -> Self {
        QueueConfig {
            backend: QueueBackend::Heap,
            hashed: false,
            dedup: false,
            compressed: false,
        }
    }
}

impl QueueConfig {
    pub fn new(backend: QueueBackend) -> Self {
        QueueConfig {
            backend,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), QueueError> {
        if self.hashed && self.dedup {
            Err(QueueError::HashedWithDedup)
        } else {
            Ok(())
        }
    }

    /// Every legal combination: 3 backends, at most one of hashed/dedup,
    /// compressed on or off.
    pub fn all_legal() -> Vec<QueueConfig> {
        let mut out = Vec::new();
        for backend in QueueBackend::ALL {
            for (hashed, dedup) in [(false, false), (true, false), (false, true)] {
                for compressed in [false, true] {
                    out.push(QueueConfig {
                        backend,
                        hashed,
                        dedup,
                        compressed,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for QueueConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.backend.name())?;
        for (on, tag) in [(self.hashed, "hashed"), (self.dedup, "dedup"), (self.compressed, "compressed")] {
            if on {
                write!(f, "+{tag}")?;
            }
        }
        Ok(())
    }
}

const NO_STREAM: u32 = u32::MAX;

/// A queued term. In compressed mode `stream` names the product whose
/// largest un-emitted term this is.
#[derive(Debug, Clone)]
pub struct QueueItem {
    pub mono: Monomial,
    pub coeff: u32,
    stream: u32,
}

#[derive(Debug, Clone, Copy)]
struct ItemOps {
    order: RingOrder,
    field: PrimeField,
}

impl Keyed<QueueItem> for ItemOps {
    #[inline]
    fn cmp(&self, a: &QueueItem, b: &QueueItem) -> Ordering {
        self.order.cmp(&a.mono, &b.mono)
    }

    fn merge(&self, into: &mut QueueItem, from: &QueueItem) {
        into.coeff = self.field.add(into.coeff, from.coeff);
    }
}

#[derive(Debug, Clone)]
enum Backend {
    Heap(Heap<QueueItem>),
    Geobucket(Geobucket<QueueItem>),
    TourTree(TourTree<QueueItem>),
}

impl Backend {
    fn len(&self) -> usize {
        match self {
            Backend::Heap(h) => h.len(),
            Backend::Geobucket(g) => g.len(),
            Backend::TourTree(t) => t.len(),
        }
    }

    fn peek(&self, ops: &ItemOps) -> Option<&QueueItem> {
        match self {
            Backend::Heap(h) => h.peek(),
            Backend::Geobucket(g) => g.peek(ops),
            Backend::TourTree(t) => t.peek(),
        }
    }

    fn pop(&mut self, ops: &ItemOps) -> Option<QueueItem> {
        match self {
            Backend::Heap(h) => h.pop(ops),
            Backend::Geobucket(g) => g.pop(ops),
            Backend::TourTree(t) => t.pop(ops),
        }
    }

    fn push(&mut self, item: QueueItem, ops: &ItemOps, dedup: bool, displaced: &mut Vec<QueueItem>) {
        let merged = match self {
            Backend::Heap(h) => h.push(item, ops, dedup),
            Backend::TourTree(t) => t.push(item, ops, dedup),
            Backend::Geobucket(g) => {
                g.push(item, ops, dedup, displaced);
                None
            }
        };
        displaced.extend(merged);
    }

    fn replace_top(&mut self, item: QueueItem, ops: &ItemOps, dedup: bool, displaced: &mut Vec<QueueItem>) {
        let r = match self {
            Backend::Heap(h) => h.replace_top(item, ops),
            Backend::TourTree(t) => t.replace_top(item, ops),
            Backend::Geobucket(g) => g.replace_top(item, ops, dedup, displaced),
        };
        debug_assert!(r.is_ok());
    }
}

#[derive(Debug, Clone)]
struct Stream<'a> {
    poly: &'a Polynomial,
    coeff: u32,
    mono: Monomial,
    next: usize,
}

/// The reducer queue.
#[derive(Debug, Clone)]
pub struct TermQueue<'a> {
    cfg: QueueConfig,
    ops: ItemOps,
    backend: Backend,
    streams: Vec<Stream<'a>>,
    free_streams: Vec<u32>,
    table: CoeffTable,
    displaced: Vec<QueueItem>,
    pending: Vec<QueueItem>,
}

impl<'a> TermQueue<'a> {
    pub fn new(ring: &Ring, cfg: QueueConfig) -> Result<Self, QueueError> {
        cfg.validate()?;
        let backend = match cfg.backend {
            QueueBackend::Heap => Backend::Heap(Heap::new()),
            QueueBackend::Geobucket => Backend::Geobucket(Geobucket::new()),
            QueueBackend::TourTree => Backend::TourTree(TourTree::new()),
        };
        Ok(TermQueue {
            cfg,
            ops: ItemOps {
                order: ring.order(),
                field: *ring.field(),
            },
            backend,
            streams: Vec::new(),
            free_streams: Vec::new(),
            table: CoeffTable::default(),
            displaced: Vec::new(),
            pending: Vec::new(),
        })
    }

    pub fn config(&self) -> QueueConfig {
        self.cfg
    }

    /// Number of physical entries (not logical terms).
    pub fn entries(&self) -> usize {
        self.backend.len()
    }

    pub fn is_empty(&self) -> bool {
        self.backend.len() == 0
    }

    /// Adds `coeff * mono * g`.
    pub fn push_product(&mut self, coeff: u32, mono: &Monomial, g: &'a Polynomial) {
        self.push_product_from(coeff, mono, g, 0);
    }

    /// Adds `coeff * mono * (g - hd g)`, the part left after the lead term
    /// has cancelled.
    pub fn push_product_tail(&mut self, coeff: u32, mono: &Monomial, g: &'a Polynomial) {
        self.push_product_from(coeff, mono, g, 1);
    }

    fn push_product_from(&mut self, coeff: u32, mono: &Monomial, g: &'a Polynomial, start: usize) {
        if start >= g.len() || coeff == 0 {
            return;
        }
        let f = self.ops.field;
        if self.cfg.compressed {
            let stream = Stream {
                poly: g,
                coeff,
                mono: mono.clone(),
                next: start,
            };
            let s = match self.free_streams.pop() {
                Some(s) => {
                    self.streams[s as usize] = stream;
                    s
                }
                None => {
                    self.streams.push(stream);
                    (self.streams.len() - 1) as u32
                }
            };
            if let Some(item) = self.advance(s) {
                self.pending.push(item);
                self.drain_pending();
            }
            return;
        }
        let terms = &g.terms()[start..];
        if let Backend::Geobucket(gb) = &mut self.backend {
            let mut run: Vec<QueueItem> = Vec::with_capacity(terms.len());
            for t in terms.iter().rev() {
                let item = QueueItem {
                    mono: t.mono.mul(mono),
                    coeff: f.mul(t.coeff, coeff),
                    stream: NO_STREAM,
                };
                if self.cfg.hashed && !self.table.add(&f, &item.mono, item.coeff) {
                    continue;
                }
                run.push(item);
            }
            gb.push_run(run, &self.ops, self.cfg.dedup, &mut self.displaced);
            self.displaced.clear();
            return;
        }
        for t in terms {
            self.pending.push(QueueItem {
                mono: t.mono.mul(mono),
                coeff: f.mul(t.coeff, coeff),
                stream: NO_STREAM,
            });
            self.drain_pending();
        }
    }

    /// Adds a single term.
    pub fn push_term(&mut self, term: Term) {
        self.pending.push(QueueItem {
            mono: term.mono,
            coeff: term.coeff,
            stream: NO_STREAM,
        });
        self.drain_pending();
    }

    // Next term of stream `s`, releasing the stream when it runs out.
    fn advance(&mut self, s: u32) -> Option<QueueItem> {
        let f = self.ops.field;
        let st = &mut self.streams[s as usize];
        match st.poly.terms().get(st.next) {
            Some(t) => {
                st.next += 1;
                Some(QueueItem {
                    mono: t.mono.mul(&st.mono),
                    coeff: f.mul(t.coeff, st.coeff),
                    stream: s,
                })
            }
            None => {
                self.free_streams.push(s);
                None
            }
        }
    }

    // Folds `item` into the hash table; returns the item to enqueue, if any.
    // A folded stream head is replaced by its successor and retried.
    fn through_table(&mut self, mut item: QueueItem) -> Option<QueueItem> {
        if !self.cfg.hashed {
            return Some(item);
        }
        loop {
            if self.table.add(&self.ops.field, &item.mono, item.coeff) {
                return Some(item);
            }
            if item.stream == NO_STREAM {
                return None;
            }
            item = self.advance(item.stream)?;
        }
    }

    fn drain_pending(&mut self) {
        while let Some(item) = self.pending.pop() {
            let Some(item) = self.through_table(item) else {
                continue;
            };
            self.backend.push(item, &self.ops, self.cfg.dedup, &mut self.displaced);
            self.requeue_displaced();
        }
    }

    // Items absorbed by a dedup merge are gone, but a compressed stream
    // behind one still has terms to emit.
    fn requeue_displaced(&mut self) {
        while let Some(d) = self.displaced.pop() {
            if d.stream != NO_STREAM {
                if let Some(next) = self.advance(d.stream) {
                    self.pending.push(next);
                }
            }
        }
    }

    /// Removes and returns the largest term with all contributions summed.
    /// Monomials whose contributions cancel are skipped.
    pub fn pop_max(&mut self) -> Option<Term> {
        let f = self.ops.field;
        loop {
            let mono = self.backend.peek(&self.ops)?.mono.clone();
            let mut acc = if self.cfg.hashed {
                self.table.remove(&mono).expect("queued monomial in table")
            } else {
                0
            };
            while let Some(top) = self.backend.peek(&self.ops) {
                if top.mono != mono {
                    break;
                }
                if !self.cfg.hashed {
                    acc = f.add(acc, top.coeff);
                }
                let s = top.stream;
                let succ = if s == NO_STREAM {
                    None
                } else {
                    self.advance(s).and_then(|n| self.through_table(n))
                };
                match succ {
                    Some(n) => {
                        self.backend.replace_top(n, &self.ops, self.cfg.dedup, &mut self.displaced);
                    }
                    None => {
                        self.backend.pop(&self.ops);
                    }
                }
                self.requeue_displaced();
                self.drain_pending();
            }
            if acc != 0 {
                return Some(Term::new(acc, mono));
            }
        }
    }

    /// Pops everything that is left into a polynomial.
    pub fn drain_to_polynomial(&mut self) -> Polynomial {
        let mut terms = Vec::new();
        while let Some(t) = self.pop_max() {
            terms.push(t);
        }
        Polynomial::from_sorted_terms(terms)
    }
}
