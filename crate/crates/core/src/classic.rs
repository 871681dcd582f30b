//! Classic Buchberger algorithm with the relatively prime criterion, the
//! lcm criterion (cached, with the anti-circularity rule) and the graph
//! criterion.

use std::cmp::Ordering;
use std::time::Instant;

use crate::bits::TriangleBits;
use crate::division::{classic_reduce, reduce_seeded, ReduceOptions};
use crate::lookup::{LookupKind, LookupStats, MonomialLookup};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::queue::QueueConfig;
use crate::ring::Ring;
use crate::spair::{PairKeys, SPairQueue, SPairQueueKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicConfig {
    pub queue: QueueConfig,
    pub lookup: LookupKind,
    pub spair_queue: SPairQueueKind,
    pub relprime: bool,
    pub lcm: bool,
    pub graph: bool,
    /// Keep the list of pairs that reached reduction.
    pub record_pairs: bool,
}

impl Default for ClassicConfig {
    fn default() -> Self {
        ClassicConfig {
            queue: QueueConfig::default(),
            lookup: LookupKind::DivKdTree,
            spair_queue: SPairQueueKind::TriangleTourTree,
            relprime: true,
            lcm: true,
            graph: true,
            record_pairs: false,
        }
    }
}

/// Where each constructed S-pair went.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ClassicStats {
    pub spairs: u64,
    pub relprime: u64,
    pub lcm_cache_hits: u64,
    pub lcm_simple_hits: u64,
    pub graph_hits: u64,
    pub reductions: u64,
    pub zero_reductions: u64,
    pub basis_size: usize,
    /// Largest byte count of the S-pair triangle during the run.
    pub pair_bytes_peak: usize,
    /// Times the triangle was seen above its memory bound.
    pub pair_bound_violations: u64,
    pub lookup: LookupStats,
    pub seconds: f64,
}

impl ClassicStats {
    /// Every constructed pair is counted in exactly one category.
    pub fn accounting_holds(&self) -> bool {
        self.lcm_cache_hits + self.lcm_simple_hits + self.graph_hits + self.relprime + self.reductions
            == self.spairs
    }
}

#[derive(Debug, Clone)]
pub struct ClassicResult {
    /// The reduced Gröbner basis, sorted by decreasing lead monomial.
    pub basis: Vec<Polynomial>,
    pub stats: ClassicStats,
    /// Pairs `(i, j)` of intermediate basis indices that were reduced, when
    /// recording was requested.
    pub reduced_pairs: Vec<(usize, usize)>,
}

/// True iff the lead monomials share no variable.
pub fn relprime_check(a: &Monomial, b: &Monomial) -> bool {
    a.relatively_prime(b)
}

/// The lcm criterion for the pair `(a, b)` via `c`, with the
/// anti-circularity rule: a pair `(a, c)` whose lcm equals that of `(a, b)`
/// may only be relied on if it has itself already been dealt with.
pub fn lcm_criterion(heads: &[Monomial], a: usize, b: usize, c: usize, tri: &TriangleBits) -> bool {
    if c == a || c == b {
        return false;
    }
    let l = heads[a].lcm(&heads[b]);
    if !heads[c].divides(&l) {
        return false;
    }
    let ok_a = heads[a].lcm(&heads[c]) != l || tri.get(a, c);
    let ok_b = heads[b].lcm(&heads[c]) != l || tri.get(b, c);
    ok_a && ok_b
}

/// The graph criterion: with `m = lcm(hd a, hd b)`, join every two vertices
/// among `a`, `b` and `others` (lead monomials dividing `m`) whose lcm is a
/// proper divisor of `m` or whose pair is already dealt with. The pair
/// `(a, b)` is redundant iff that connects `a` and `b`.
pub fn graph_criterion(heads: &[Monomial], a: usize, b: usize, others: &[usize], tri: &TriangleBits) -> bool {
    graph_criterion_where(heads, a, b, others, tri, |_, _| true)
}

/// [`graph_criterion`] where only pairs accepted by `exists` may form
/// edges, for bases from which elements have been retired.
pub fn graph_criterion_where(
    heads: &[Monomial],
    a: usize,
    b: usize,
    others: &[usize],
    tri: &TriangleBits,
    exists: impl Fn(usize, usize) -> bool,
) -> bool {
    let m = heads[a].lcm(&heads[b]);
    let mut verts: Vec<usize> = vec![a, b];
    verts.extend(others.iter().copied().filter(|&c| c != a && c != b && heads[c].divides(&m)));
    let n = verts.len();
    if n == 2 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if (u, v) == (0, 1) {
                continue;
            }
            let (x, y) = (verts[u], verts[v]);
            if exists(x, y) && (heads[x].lcm(&heads[y]) != m || tri.get(x, y)) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
    }
    find(&mut parent, 0) == find(&mut parent, 1)
}

// Pairs ordered by their lcm in the ring order, which for grevlex is lcm
// degree first; the queue breaks remaining ties by (j, i).
struct LcmKeys<'b> {
    ring: &'b Ring,
    heads: &'b [Monomial],
}

impl PairKeys for LcmKeys<'_> {
    type Key = Monomial;

    fn key(&self, i: usize, j: usize) -> Monomial {
        self.heads[i].lcm(&self.heads[j])
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ring.cmp(a, b)
    }
}

struct Engine<'r> {
    ring: &'r Ring,
    cfg: ClassicConfig,
    basis: Vec<Polynomial>,
    heads: Vec<Monomial>,
    live: Vec<bool>,
    retired_by: Vec<Option<usize>>,
    lookup: MonomialLookup,
    tri: TriangleBits,
    cache: Vec<Option<usize>>,
    pairs: SPairQueue<Monomial>,
    stats: ClassicStats,
    reduced_pairs: Vec<(usize, usize)>,
}

impl<'r> Engine<'r> {
    fn new(ring: &'r Ring, cfg: ClassicConfig) -> Self {
        Engine {
            ring,
            cfg,
            basis: Vec::new(),
            heads: Vec::new(),
            live: Vec::new(),
            retired_by: Vec::new(),
            lookup: MonomialLookup::new(cfg.lookup, ring.num_vars()),
            tri: TriangleBits::new(),
            cache: Vec::new(),
            pairs: SPairQueue::new(cfg.spair_queue),
            stats: ClassicStats::default(),
            reduced_pairs: Vec::new(),
        }
    }

    fn opts(&self) -> ReduceOptions {
        ReduceOptions {
            top_only: false,
            monic: true,
            queue: self.cfg.queue,
        }
    }

    fn lcm_sweep(&mut self, a: usize, b: usize) -> bool {
        for c in [self.cache[a], self.cache[b]].into_iter().flatten() {
            if self.live[c] && lcm_criterion(&self.heads, a, b, c, &self.tri) {
                self.stats.lcm_cache_hits += 1;
                self.cache[a] = Some(c);
                self.cache[b] = Some(c);
                return true;
            }
        }
        let l = self.heads[a].lcm(&self.heads[b]);
        let mut cands = self.lookup.find_all_divisors(&l);
        cands.sort_unstable();
        for c in cands {
            if lcm_criterion(&self.heads, a, b, c, &self.tri) {
                self.stats.lcm_simple_hits += 1;
                self.cache[a] = Some(c);
                self.cache[b] = Some(c);
                return true;
            }
        }
        false
    }

    // Pairs with every live element come first; only then are the elements
    // whose leads the new one divides retired. Their pair with the new
    // element is what accounts for them from then on.
    fn add(&mut self, g: Polynomial) {
        let k = self.basis.len();
        let hd = g.lead_mono().clone();
        let doomed: Vec<usize> = self
            .lookup
            .iter()
            .filter(|(_, m)| hd.divides(m))
            .map(|(id, _)| id)
            .collect();
        self.basis.push(g);
        self.heads.push(hd.clone());
        self.live.push(true);
        self.retired_by.push(None);
        self.cache.push(None);
        self.lookup.insert(hd.clone(), k);

        let mut survivors = Vec::new();
        for i in 0..k {
            if !self.live[i] {
                continue;
            }
            self.stats.spairs += 1;
            if self.cfg.relprime && relprime_check(&self.heads[i], &hd) {
                self.stats.relprime += 1;
                self.tri.set(i, k);
                continue;
            }
            if self.cfg.lcm && self.lcm_sweep(i, k) {
                self.tri.set(i, k);
                continue;
            }
            survivors.push(i);
        }
        let keys = LcmKeys {
            ring: self.ring,
            heads: &self.heads,
        };
        let pairs = survivors.into_iter().map(|i| (i, keys.key(i, k))).collect();
        self.pairs.add_column(k, pairs, &keys);
        self.audit_pairs();

        for id in doomed {
            self.live[id] = false;
            self.retired_by[id] = Some(k);
            self.lookup.retire(id).expect("live entry");
        }
        self.lookup.maybe_rebuild();
    }

    fn audit_pairs(&mut self) {
        if let Some(m) = self.pairs.memory() {
            debug_assert!(m.within_bound());
            self.stats.pair_bytes_peak = self.stats.pair_bytes_peak.max(m.bytes);
            if !m.within_bound() {
                self.stats.pair_bound_violations += 1;
            }
        }
    }

    /// Whether the pair `{x, y}` was ever created: both were live when the
    /// later one arrived.
    fn pair_exists(&self, x: usize, y: usize) -> bool {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        self.retired_by[x].is_none_or(|r| r >= y)
    }

    fn run(&mut self, input: &[Polynomial]) {
        for f in input {
            let r = classic_reduce(self.ring, f, &self.basis, &self.lookup, &self.opts()).remainder;
            if !r.is_zero() {
                self.add(r);
            }
        }
        loop {
            let keys = LcmKeys {
                ring: self.ring,
                heads: &self.heads,
            };
            let Some((i, j, _)) = self.pairs.pop_min(&keys) else {
                break;
            };
            self.audit_pairs();
            if self.cfg.graph {
                let m = self.heads[i].lcm(&self.heads[j]);
                let others = self.lookup.find_all_divisors(&m);
                let known = |x: usize, y: usize| self.pair_exists(x, y);
                if graph_criterion_where(&self.heads, i, j, &others, &self.tri, known) {
                    self.stats.graph_hits += 1;
                    self.tri.set(i, j);
                    continue;
                }
            }
            self.stats.reductions += 1;
            if self.cfg.record_pairs {
                self.reduced_pairs.push((i, j));
            }
            let (a, b) = (&self.basis[i], &self.basis[j]);
            let seeds = [
                (1, self.heads[i].lcm_cofactor(&self.heads[j]), a, true),
                (
                    self.ring.field().neg(1),
                    self.heads[j].lcm_cofactor(&self.heads[i]),
                    b,
                    true,
                ),
            ];
            let r = reduce_seeded(self.ring, &seeds, &self.basis, &self.lookup, &self.opts()).remainder;
            self.tri.set(i, j);
            if r.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.add(r);
            }
        }
    }
}

/// Computes the reduced Gröbner basis of `input`.
pub fn buchberger_run(ring: &Ring, input: &[Polynomial], cfg: &ClassicConfig) -> ClassicResult {
    let start = Instant::now();
    let mut eng = Engine::new(ring, *cfg);
    eng.run(input);
    let live: Vec<Polynomial> = (0..eng.basis.len())
        .filter(|&i| eng.live[i])
        .map(|i| eng.basis[i].clone())
        .collect();
    let basis = interreduce(ring, &live, cfg.queue, cfg.lookup);
    let mut stats = eng.stats;
    stats.basis_size = basis.len();
    stats.lookup = eng.lookup.stats();
    stats.seconds = start.elapsed().as_secs_f64();
    ClassicResult {
        basis,
        stats,
        reduced_pairs: eng.reduced_pairs,
    }
}

/// Turns a Gröbner basis into the reduced Gröbner basis: drops elements
/// with non-minimal lead monomials, reduces every tail and makes everything
/// monic. The result is sorted by decreasing lead monomial.
pub fn interreduce(ring: &Ring, gb: &[Polynomial], queue: QueueConfig, lookup: LookupKind) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = gb
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.clone().monic(ring))
        .collect();
    polys.sort_by(|a, b| ring.cmp(a.lead_mono(), b.lead_mono()));
    let mut min: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !min.iter().any(|q| q.lead_mono().divides(p.lead_mono())) {
            min.push(p);
        }
    }
    let mut look = MonomialLookup::new(lookup, ring.num_vars());
    for (i, p) in min.iter().enumerate() {
        look.insert(p.lead_mono().clone(), i);
    }
    let opts = ReduceOptions {
        top_only: false,
        monic: false,
        queue,
    };
    let mut out: Vec<Polynomial> = min
        .iter()
        .map(|p| {
            let lead = p.lead().unwrap().clone();
            let tail = Polynomial::from_sorted_terms(p.terms()[1..].to_vec());
            let r = classic_reduce(ring, &tail, &min, &look, &opts).remainder;
            let mut terms = vec![lead];
            terms.extend(r.into_terms());
            Polynomial::from_sorted_terms(terms)
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(b.lead_mono(), a.lead_mono()));
    out
}

/// Interreduces a generating set that need not be a Gröbner basis: each
/// generator is fully reduced by the others until nothing changes. Zeros
/// are dropped; the result is monic and sorted by decreasing lead monomial.
pub fn autoreduce(ring: &Ring, gens: &[Polynomial], queue: QueueConfig, lookup: LookupKind) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().monic(ring))
        .collect();
    let opts = ReduceOptions {
        top_only: false,
        monic: true,
        queue,
    };
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..gens.len() {
            let others: Vec<Polynomial> = gens
                .iter()
                .enumerate()
                .filter(|&(j, g)| j != i && !g.is_zero())
                .map(|(_, g)| g.clone())
                .collect();
            let mut look = MonomialLookup::new(lookup, ring.num_vars());
            for (k, g) in others.iter().enumerate() {
                look.insert(g.lead_mono().clone(), k);
            }
            let r = classic_reduce(ring, &gens[i], &others, &look, &opts).remainder;
            if r != gens[i] {
                gens[i] = r;
                changed = true;
            }
        }
        gens.retain(|g| !g.is_zero());
    }
    gens.sort_by(|a, b| ring.cmp(b.lead_mono(), a.lead_mono()));
    gens
}

/// Runs the pair-selection machinery on a monomial ideal: every S-pair of
/// monomials reduces to zero, so the pairs that reach reduction show which
/// syzygies the lcm and graph criteria consider necessary. The relatively
/// prime criterion is off, since it is about reductions, not syzygies.
pub fn monomial_pair_selection(ring: &Ring, gens: &[Monomial], lookup: LookupKind) -> ClassicResult {
    let input: Vec<Polynomial> = gens
        .iter()
        .map(|m| Polynomial::from_sorted_terms(vec![crate::poly::Term::new(1, m.clone())]))
        .collect();
    let cfg = ClassicConfig {
        lookup,
        relprime: false,
        record_pairs: true,
        ..Default::default()
    };
    buchberger_run(ring, &input, &cfg)
}
