//! Divisor queries over a dynamic set of monomials.
//!
//! All four structures share one implementation: a kd-tree whose list
//! variants are a single leaf that never splits. Entries carry a payload id
//! chosen by the caller. Removal is by tombstone; [`MonomialLookup::maybe_rebuild`]
//! purges tombstones and recalibrates the divmap once enough churn has
//! accumulated.

mod divmask;

pub use divmask::{may_divide, DivMap, Divmask, MASK_BITS};

use std::cell::Cell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::LookupError;
use crate::monomial::Monomial;

pub const DEFAULT_LEAF_CAPACITY: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LookupKind {
    List,
    DivList,
    KdTree,
    #[default]
    DivKdTree,
}

impl LookupKind {
    pub const ALL: [LookupKind; 4] = [
        LookupKind::List,
        LookupKind::DivList,
        LookupKind::KdTree,
        LookupKind::DivKdTree,
    ];

    pub fn uses_masks(self) -> bool {
        matches!(self, LookupKind::DivList | LookupKind::DivKdTree)
    }

    pub fn is_tree(self) -> bool {
        matches!(self, LookupKind::KdTree | LookupKind::DivKdTree)
    }

    pub fn name(self) -> &'static str {
        match self {
            LookupKind::List => "list",
            LookupKind::DivList => "divlist",
            LookupKind::KdTree => "kdtree",
            LookupKind::DivKdTree => "divkdtree",
        }
    }
}

impl fmt::Display for LookupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for LookupKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LookupKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown lookup structure '{s}'"))
    }
}

/// Divmask accounting. Every entry-level mask test lands in exactly one of
/// `hits` (mask proved non-divisibility), `misses` (mask passed but the
/// monomial does not divide) or `divisibilities` (mask passed and it does).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LookupStats {
    pub queries: u64,
    pub hits: u64,
    pub misses: u64,
    pub divisibilities: u64,
    pub node_prunes: u64,
    pub rebuilds: u64,
}

impl LookupStats {
    pub fn consultations(&self) -> u64 {
        self.hits + self.misses + self.divisibilities
    }

    /// Fraction of consultations that the mask answered on its own.
    pub fn hit_rate(&self) -> f64 {
        ratio(self.hits, self.consultations())
    }

    /// Hit rate among the cases where the monomial did not divide, i.e. how
    /// often the mask caught a non-divisor.
    pub fn effective_hit_rate(&self) -> f64 {
        ratio(self.hits, self.hits + self.misses)
    }

    pub fn merge(&mut self, other: &LookupStats) {
        self.queries += other.queries;
        self.hits += other.hits;
        self.misses += other.misses;
        self.divisibilities += other.divisibilities;
        self.node_prunes += other.node_prunes;
        self.rebuilds += other.rebuilds;
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

#[derive(Debug, Clone)]
struct Entry {
    mono: Monomial,
    id: usize,
    mask: Divmask,
    live: bool,
}

#[derive(Debug, Clone)]
enum Node {
    Leaf { slots: Vec<u32>, next_var: usize },
    Inner { var: usize, exp: u32, left: u32, right: u32 },
}

/// A monomial set supporting divisor queries, in one of four flavors.
#[derive(Debug, Clone)]
pub struct MonomialLookup {
    kind: LookupKind,
    num_vars: usize,
    leaf_capacity: usize,
    entries: Vec<Entry>,
    slot_of: HashMap<usize, usize>,
    nodes: Vec<Node>,
    node_masks: Vec<Divmask>,
    divmap: DivMap,
    live: usize,
    changes: usize,
    stats: Cell<LookupStats>,
}

impl MonomialLookup {
    pub fn new(kind: LookupKind, num_vars: usize) -> Self {
        Self::with_leaf_capacity(kind, num_vars, DEFAULT_LEAF_CAPACITY)
    }

    pub fn with_leaf_capacity(kind: LookupKind, num_vars: usize, leaf_capacity: usize) -> Self {
        MonomialLookup {
            kind,
            num_vars,
            leaf_capacity: leaf_capacity.max(1),
            entries: Vec::new(),
            slot_of: HashMap::new(),
            nodes: vec![Node::Leaf {
                slots: Vec::new(),
                next_var: 0,
            }],
            node_masks: vec![u32::MAX],
            divmap: DivMap::empty(),
            live: 0,
            changes: 0,
            stats: Cell::new(LookupStats::default()),
        }
    }

    pub fn kind(&self) -> LookupKind {
        self.kind
    }

    /// Number of live entries.
    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// Number of stored entries including tombstones.
    pub fn physical_len(&self) -> usize {
        self.entries.len()
    }

    pub fn stats(&self) -> LookupStats {
        self.stats.get()
    }

    pub fn divmap(&self) -> &DivMap {
        &self.divmap
    }

    pub fn contains(&self, id: usize) -> bool {
        self.slot_of.get(&id).is_some_and(|&s| self.entries[s].live)
    }

    pub fn monomial(&self, id: usize) -> Option<&Monomial> {
        let s = *self.slot_of.get(&id)?;
        self.entries[s].live.then(|| &self.entries[s].mono)
    }

    /// Live `(id, monomial)` pairs in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial)> + '_ {
        self.entries.iter().filter(|e| e.live).map(|e| (e.id, &e.mono))
    }

    pub fn insert(&mut self, mono: Monomial, id: usize) {
        debug_assert_eq!(mono.num_vars(), self.num_vars);
        debug_assert!(!self.slot_of.contains_key(&id), "payload id {id} reused");
        let mask = self.divmap.mask(&mono);
        let slot = self.entries.len();
        self.entries.push(Entry {
            mono,
            id,
            mask,
            live: true,
        });
        self.slot_of.insert(id, slot);
        self.live += 1;
        self.changes += 1;

        let mut node = 0usize;
        while let Node::Inner { var, exp, left, right } = self.nodes[node] {
            self.node_masks[node] &= mask;
            let e = self.entries[slot].mono.exp(var);
            node = if e >= exp { right } else { left } as usize;
        }
        self.node_masks[node] &= mask;
        let Node::Leaf { slots, .. } = &mut self.nodes[node] else {
            unreachable!()
        };
        slots.push(slot as u32);
        if slots.len() > self.leaf_capacity && self.kind.is_tree() {
            self.split(node);
        }
    }

    /// Removes `id` from all future query answers.
    pub fn retire(&mut self, id: usize) -> Result<(), LookupError> {
        let slot = *self.slot_of.get(&id).ok_or(LookupError::UnknownId(id))?;
        let e = &mut self.entries[slot];
        if !e.live {
            return Err(LookupError::UnknownId(id));
        }
        e.live = false;
        self.live -= 1;
        self.changes += 1;
        Ok(())
    }

    /// Rebuilds when insertions plus retirements since the last rebuild
    /// exceed half the live size.
    pub fn maybe_rebuild(&mut self) -> bool {
        if self.changes > 0 && 2 * self.changes > self.live {
            self.rebuild();
            true
        } else {
            false
        }
    }

    /// Drops tombstones, recalibrates the divmap from the live monomials and
    /// rebuilds the tree from scratch.
    pub fn rebuild(&mut self) {
        self.entries.retain(|e| e.live);
        self.divmap = if self.entries.is_empty() {
            DivMap::empty()
        } else {
            DivMap::calibrate(self.entries.iter().map(|e| &e.mono))
                .expect("nonempty calibration set")
        };
        self.slot_of.clear();
        let mut root_mask = u32::MAX;
        for (s, e) in self.entries.iter_mut().enumerate() {
            e.mask = self.divmap.mask(&e.mono);
            root_mask &= e.mask;
            self.slot_of.insert(e.id, s);
        }
        self.nodes = vec![Node::Leaf {
            slots: (0..self.entries.len() as u32).collect(),
            next_var: 0,
        }];
        self.node_masks = vec![root_mask];
        if self.kind.is_tree() && self.entries.len() > self.leaf_capacity {
            self.split(0);
        }
        self.live = self.entries.len();
        self.changes = 0;
        let mut st = self.stats.get();
        st.rebuilds += 1;
        self.stats.set(st);
        debug_assert!(self.audit());
    }

    // Splits an over-full leaf on the first variable, cycling from the
    // parent's, whose exponents differ within the leaf. A leaf of identical
    // monomials stays as it is.
    fn split(&mut self, node: usize) {
        let Node::Leaf { slots, next_var } = &self.nodes[node] else {
            return;
        };
        let n = self.num_vars;
        let start = *next_var;
        let mut choice = None;
        for k in 0..n {
            let v = (start + k) % n;
            let mut lo = u32::MAX;
            let mut hi = 0;
            for &s in slots {
                let e = self.entries[s as usize].mono.exp(v);
                lo = lo.min(e);
                hi = hi.max(e);
            }
            if lo < hi {
                choice = Some((v, (lo + hi).div_ceil(2)));
                break;
            }
        }
        let Some((var, exp)) = choice else {
            return;
        };
        let slots = match std::mem::replace(
            &mut self.nodes[node],
            Node::Inner {
                var,
                exp,
                left: 0,
                right: 0,
            },
        ) {
            Node::Leaf { slots, .. } => slots,
            Node::Inner { .. } => unreachable!(),
        };
        let (r, l): (Vec<u32>, Vec<u32>) = slots
            .into_iter()
            .partition(|&s| self.entries[s as usize].mono.exp(var) >= exp);
        let mask_of = |v: &[u32]| {
            v.iter()
                .fold(u32::MAX, |m, &s| m & self.entries[s as usize].mask)
        };
        let (lm, rm) = (mask_of(&l), mask_of(&r));
        let (ll, rl) = (l.len(), r.len());
        let left = self.nodes.len();
        self.nodes.push(Node::Leaf {
            slots: l,
            next_var: (var + 1) % n,
        });
        self.node_masks.push(lm);
        let right = self.nodes.len();
        self.nodes.push(Node::Leaf {
            slots: r,
            next_var: (var + 1) % n,
        });
        self.node_masks.push(rm);
        if let Node::Inner {
            left: lref,
            right: rref,
            ..
        } = &mut self.nodes[node]
        {
            *lref = left as u32;
            *rref = right as u32;
        }
        if ll > self.leaf_capacity {
            self.split(left);
        }
        if rl > self.leaf_capacity {
            self.split(right);
        }
    }

    // Walks every live entry that may divide `q`; `f` returns true to stop.
    fn visit(&self, q: &Monomial, mut f: impl FnMut(&Entry) -> bool) {
        let masks = self.kind.uses_masks();
        let tree_masks = masks && self.kind.is_tree();
        let qmask = if masks { self.divmap.mask(q) } else { 0 };
        let mut st = self.stats.get();
        st.queries += 1;
        let mut stack: Vec<u32> = vec![0];
        'outer: while let Some(node) = stack.pop() {
            let node = node as usize;
            if tree_masks && !may_divide(self.node_masks[node], qmask) {
                st.node_prunes += 1;
                continue;
            }
            match &self.nodes[node] {
                Node::Inner { var, exp, left, right } => {
                    stack.push(*left);
                    if q.exp(*var) >= *exp {
                        stack.push(*right);
                    }
                }
                Node::Leaf { slots, .. } => {
                    for &s in slots {
                        let e = &self.entries[s as usize];
                        if !e.live {
                            continue;
                        }
                        if masks {
                            if !may_divide(e.mask, qmask) {
                                st.hits += 1;
                                continue;
                            }
                            if e.mono.divides(q) {
                                st.divisibilities += 1;
                            } else {
                                st.misses += 1;
                                continue;
                            }
                        } else if !e.mono.divides(q) {
                            continue;
                        }
                        if f(e) {
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.stats.set(st);
    }

    /// Some live id whose monomial divides `q`.
    pub fn find_divisor(&self, q: &Monomial) -> Option<usize> {
        self.find_divisor_by(q, |_, _| true)
    }

    /// Some live id whose monomial divides `q` and satisfies `pred`.
    pub fn find_divisor_by(
        &self,
        q: &Monomial,
        mut pred: impl FnMut(usize, &Monomial) -> bool,
    ) -> Option<usize> {
        let mut found = None;
        self.visit(q, |e| {
            if pred(e.id, &e.mono) {
                found = Some(e.id);
                true
            } else {
                false
            }
        });
        found
    }

    /// Every live id whose monomial divides `q`, each once.
    pub fn find_all_divisors(&self, q: &Monomial) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_divisor(q, |id, _| out.push(id));
        out
    }

    pub fn for_each_divisor(&self, q: &Monomial, mut f: impl FnMut(usize, &Monomial)) {
        self.visit(q, |e| {
            f(e.id, &e.mono);
            false
        });
    }

    /// Checks the kd-tree routing invariant and node-mask soundness.
    pub fn audit(&self) -> bool {
        let mut seen = 0usize;
        let ok = self.audit_node(0, &mut Vec::new(), &mut seen);
        ok && seen == self.entries.len()
    }

    fn audit_node(&self, node: usize, path: &mut Vec<(usize, u32, bool)>, seen: &mut usize) -> bool {
        match &self.nodes[node] {
            Node::Leaf { slots, .. } => {
                *seen += slots.len();
                slots.iter().all(|&s| {
                    let e = &self.entries[s as usize];
                    let routed = path
                        .iter()
                        .all(|&(v, x, right)| (e.mono.exp(v) >= x) == right);
                    let masked = !e.live || self.node_masks[node] & !e.mask == 0;
                    routed && masked && e.mask == self.divmap.mask(&e.mono)
                })
            }
            Node::Inner { var, exp, left, right } => {
                let (var, exp, left, right) = (*var, *exp, *left as usize, *right as usize);
                let parent = self.node_masks[node];
                let under = |c: usize| parent & !self.node_masks[c] == 0;
                if !under(left) || !under(right) {
                    return false;
                }
                path.push((var, exp, false));
                let l = self.audit_node(left, path, seen);
                path.pop();
                path.push((var, exp, true));
                let r = self.audit_node(right, path, seen);
                path.pop();
                l && r
            }
        }
    }
}
