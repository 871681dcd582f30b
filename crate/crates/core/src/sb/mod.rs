//! The signature-based algorithm.
//!
//! Entries carry a signature over the input generators, a monic polynomial
//! and an integer id for their sig-lead ratio. S-pairs are processed in
//! increasing signature order; every pair is either eliminated by one of
//! the criteria or regular reduced, and each reduction yields exactly one
//! new entry or one new syzygy signature.

mod basediv;
mod order;

use std::cmp::Ordering;
use std::time::Instant;

pub use basediv::{high_base_divisor_eliminates, low_base_divisor_bound, low_bound_from_exponents, ExpBound};
pub use order::{Assigned, ModuleOrder, ModuleOrderKind, ModuleTerm, Ratio, RatioIds, SchreyerTiebreak, RATIO_ID_SPACING};

use crate::bits::TriangleBits;
use crate::classic::interreduce;
use crate::lookup::{LookupKind, LookupStats, MonomialLookup};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::queue::{Heap, Keyed, QueueConfig, TermQueue};
use crate::ring::Ring;
use crate::spair::{PairKeys, SPairQueue, SPairQueueKind};

/// A signature basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigEntry {
    pub sig: ModuleTerm,
    /// Monic and nonzero.
    pub poly: Polynomial,
    pub ratio: Ratio,
    pub ratio_id: i64,
}

impl SigEntry {
    pub fn lead(&self) -> &Monomial {
        self.poly.lead_mono()
    }
}

/// Signature of `S(a, b)` and whether the pair is regular. The candidate
/// from the element with the larger ratio wins; equal ratios make the two
/// candidates equal and the pair singular.
pub fn spair_signature(a: &SigEntry, b: &SigEntry) -> (ModuleTerm, bool) {
    let (w, o) = if a.ratio_id >= b.ratio_id { (a, b) } else { (b, a) };
    let sig = w.sig.mul(&w.lead().lcm_cofactor(o.lead()));
    (sig, a.ratio_id != b.ratio_id)
}

/// Signature of the Koszul syzygy `g_b e_a - g_a e_b`.
pub fn koszul_signature(a: &SigEntry, b: &SigEntry) -> ModuleTerm {
    if a.ratio_id >= b.ratio_id {
        a.sig.mul(b.lead())
    } else {
        b.sig.mul(a.lead())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SbConfig {
    pub queue: QueueConfig,
    pub lookup: LookupKind,
    pub spair_queue: SPairQueueKind,
    pub module_order: ModuleOrderKind,
    pub tiebreak: SchreyerTiebreak,
    /// 0 disables base divisors, 1 uses the high-ratio one, 2 both.
    pub base_divisors: usize,
    pub early_singular: bool,
    pub signature_criterion: bool,
    pub koszul: bool,
    pub relprime: bool,
    pub singular: bool,
    /// The triangle of syzygy bits is dropped, and base divisors turned
    /// off, once it would need more than this many bytes.
    pub tri_bytes_cap: usize,
}

impl Default for SbConfig {
    fn default() -> Self {
        SbConfig {
            queue: QueueConfig::default(),
            lookup: LookupKind::DivKdTree,
            spair_queue: SPairQueueKind::default(),
            module_order: ModuleOrderKind::Schreyer,
            tiebreak: SchreyerTiebreak::LowerGreater,
            base_divisors: 2,
            early_singular: false,
            signature_criterion: true,
            koszul: true,
            relprime: true,
            singular: true,
            tri_bytes_cap: 1 << 30,
        }
    }
}

/// S-pair accounting. Every constructed pair ends in exactly one bucket.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SbStats {
    pub spairs: u64,
    pub non_regular: u64,
    pub base_divisor: u64,
    pub signature_early: u64,
    pub singular_early: u64,
    pub queued: u64,
    pub duplicate: u64,
    pub signature_late: u64,
    pub koszul: u64,
    pub relprime: u64,
    pub singular_late: u64,
    pub need_reduction: u64,
    pub to_basis: u64,
    pub to_syzygy: u64,
    /// Reductions whose result was singular top reducible; only possible
    /// with the singular criterion switched off.
    pub to_singular: u64,
    pub basis_size: usize,
    pub syzygies: usize,
    /// Terms over all basis polynomials.
    pub monomials: usize,
    pub ratio_rebuilds: usize,
    pub tri_dropped: bool,
    /// Largest byte count of the S-pair triangle during the run.
    pub pair_bytes_peak: usize,
    /// Times the triangle was seen above its memory bound.
    pub pair_bound_violations: u64,
    pub lookup: LookupStats,
    pub seconds: f64,
}

impl SbStats {
    /// The column arithmetic: constructed pairs split into early
    /// eliminations and queued ones, queued ones into late eliminations
    /// and reductions, reductions into outcomes.
    pub fn accounting_holds(&self) -> bool {
        self.queued == self.spairs - self.non_regular - self.base_divisor - self.signature_early - self.singular_early
            && self.need_reduction
                == self.queued - self.duplicate - self.signature_late - self.koszul - self.relprime - self.singular_late
            && self.need_reduction == self.to_basis + self.to_syzygy + self.to_singular
    }
}

#[derive(Debug, Clone)]
pub struct SbResult {
    pub entries: Vec<SigEntry>,
    /// Minimal generators of the initial syzygy module, ascending.
    pub syzygies: Vec<ModuleTerm>,
    pub order: ModuleOrder,
    pub stats: SbStats,
}

impl SbResult {
    /// The reduced Gröbner basis of the input ideal.
    pub fn reduced_gb(&self, ring: &Ring, queue: QueueConfig, lookup: LookupKind) -> Vec<Polynomial> {
        let polys: Vec<Polynomial> = self.entries.iter().map(|e| e.poly.clone()).collect();
        interreduce(ring, &polys, queue, lookup)
    }
}

/// Outcome of [`regular_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularReduction {
    /// Monic, or zero.
    pub remainder: Polynomial,
    pub sig: ModuleTerm,
    pub steps: usize,
}

impl RegularReduction {
    pub fn is_syzygy(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Picks one of several admissible reducers (given as ascending basis
/// indices). Used to check that the remainder does not depend on it.
pub type ReducerChoice<'c> = &'c mut dyn FnMut(&[usize]) -> usize;

/// Fully regular reduces `mult * basis[seed]`, whose signature is `sig`.
/// A term `t` is reduced by `b` only when `(t / hd b) sig b < sig`, that is
/// when the ratio of `b` is below `sig / t`.
#[allow(clippy::too_many_arguments)]
pub fn regular_reduce(
    ring: &Ring,
    order: &ModuleOrder,
    basis: &[SigEntry],
    leads: &MonomialLookup,
    seed: usize,
    mult: &Monomial,
    sig: &ModuleTerm,
    queue: QueueConfig,
    mut choose: Option<ReducerChoice<'_>>,
) -> RegularReduction {
    debug_assert_eq!(basis[seed].sig.mul(mult), *sig);
    let field = ring.field();
    let mut q = TermQueue::new(ring, queue).expect("valid queue config");
    q.push_product(1, mult, &basis[seed].poly);
    let mut rem = Vec::new();
    let mut steps = 0;
    let mut cands = Vec::new();
    while let Some(t) = q.pop_max() {
        let regular = |id: usize| order.cmp_ratio_to(&basis[id].ratio, sig, &t.mono) == Ordering::Less;
        let reducer = match choose.as_mut() {
            None => leads.find_divisor_by(&t.mono, |id, _| regular(id)),
            Some(pick) => {
                cands.clear();
                leads.for_each_divisor(&t.mono, |id, _| {
                    if regular(id) {
                        cands.push(id)
                    }
                });
                cands.sort_unstable();
                (!cands.is_empty()).then(|| cands[pick(&cands)])
            }
        };
        match reducer {
            Some(id) => {
                let g = &basis[id].poly;
                let m = t.mono.div(g.lead_mono()).expect("lookup returned a divisor");
                q.push_product_tail(field.neg(t.coeff), &m, g);
                steps += 1;
            }
            None => rem.push(t),
        }
    }
    let mut remainder = Polynomial::from_sorted_terms(rem);
    remainder.make_monic(ring);
    RegularReduction {
        remainder,
        sig: sig.clone(),
        steps,
    }
}

struct SigKeys<'e> {
    order: &'e ModuleOrder,
    entries: &'e [SigEntry],
}

impl PairKeys for SigKeys<'_> {
    type Key = ModuleTerm;

    fn key(&self, i: usize, j: usize) -> ModuleTerm {
        spair_signature(&self.entries[i], &self.entries[j]).0
    }

    fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.order.cmp(a, b)
    }
}

// Min-first order for the Koszul queue.
struct KoszulOrder<'o>(&'o ModuleOrder);

impl Keyed<ModuleTerm> for KoszulOrder<'_> {
    fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.0.cmp(b, a)
    }
}

/// How a group of same-signature pairs was handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Disposition {
    Signature,
    Koszul,
    RelPrime,
    Singular,
    Reduce { champion: usize },
}

struct Engine<'r> {
    ring: &'r Ring,
    cfg: SbConfig,
    order: ModuleOrder,
    entries: Vec<SigEntry>,
    leads: MonomialLookup,
    sigs: Vec<MonomialLookup>,
    syz: Vec<MonomialLookup>,
    syz_terms: Vec<ModuleTerm>,
    tri: TriangleBits,
    tri_enabled: bool,
    ratio_ids: RatioIds,
    pairs: SPairQueue<ModuleTerm>,
    koszul: Heap<ModuleTerm>,
    last: Option<ModuleTerm>,
    stats: SbStats,
}

impl<'r> Engine<'r> {
    fn new(ring: &'r Ring, cfg: SbConfig, order: ModuleOrder) -> Self {
        let n = ring.num_vars();
        let m = order.rank();
        Engine {
            ring,
            cfg,
            entries: Vec::new(),
            leads: MonomialLookup::new(cfg.lookup, n),
            sigs: (0..m).map(|_| MonomialLookup::new(cfg.lookup, n)).collect(),
            syz: (0..m).map(|_| MonomialLookup::new(cfg.lookup, n)).collect(),
            syz_terms: Vec::new(),
            tri: TriangleBits::new(),
            tri_enabled: true,
            ratio_ids: RatioIds::new(),
            pairs: SPairQueue::new(cfg.spair_queue),
            koszul: Heap::new(),
            last: None,
            stats: SbStats::default(),
            order,
        }
    }

    fn set_tri(&mut self, a: usize, b: usize) {
        if self.tri_enabled {
            self.tri.set(a, b);
        }
    }

    fn syzygy_divides(&self, t: &ModuleTerm) -> bool {
        self.syz[t.comp].find_divisor(&t.mono).is_some()
    }

    /// Adds a syzygy signature, keeping the set minimal.
    fn insert_syzygy(&mut self, t: ModuleTerm) {
        let lookup = &mut self.syz[t.comp];
        if lookup.find_divisor(&t.mono).is_some() {
            return;
        }
        let stale: Vec<usize> = lookup
            .iter()
            .filter(|(_, m)| t.mono.divides(m))
            .map(|(id, _)| id)
            .collect();
        for id in stale {
            lookup.retire(id).expect("live syzygy");
        }
        lookup.insert(t.mono.clone(), self.syz_terms.len());
        lookup.maybe_rebuild();
        self.syz_terms.push(t);
        debug_assert!(self.syzygies_minimal_sampled());
    }

    // Checks minimality of the component just touched, but only while the
    // set is small so that debug builds stay fast.
    fn syzygies_minimal_sampled(&self) -> bool {
        self.syz.iter().all(|l| {
            l.len() > 64
                || l.iter()
                    .all(|(a, ma)| l.iter().all(|(b, mb)| a == b || !ma.divides(mb)))
        })
    }

    /// The entry `a` maximizing the ratio among those with `sig a | t`
    /// (ties to the lowest index): `(t / sig a) a` has the smallest lead
    /// term among all multiples of basis entries with signature `t`.
    fn champion(&self, t: &ModuleTerm) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.sigs[t.comp].for_each_divisor(&t.mono, |id, _| {
            let better = match best {
                None => true,
                Some(b) => {
                    let (ri, rb) = (self.entries[id].ratio_id, self.entries[b].ratio_id);
                    ri > rb || (ri == rb && id < b)
                }
            };
            if better {
                best = Some(id);
            }
        });
        best
    }

    /// Whether `(t / sig a) a` is regular top reducible.
    fn champion_reducible(&self, a: usize, t: &ModuleTerm) -> bool {
        let e = &self.entries[a];
        let lead = t.mono.div(&e.sig.mono).expect("champion divides").mul(e.lead());
        let rid = e.ratio_id;
        self.leads
            .find_divisor_by(&lead, |id, _| self.entries[id].ratio_id < rid)
            .is_some()
    }

    fn base_divisors(&self, beta: &SigEntry) -> (Option<usize>, Option<(usize, ExpBound)>) {
        if !self.tri_enabled || self.cfg.base_divisors == 0 {
            return (None, None);
        }
        let best = |lookup: &MonomialLookup, m: &Monomial| {
            let mut best: Option<usize> = None;
            lookup.for_each_divisor(m, |id, _| {
                let better = best.is_none_or(|b| {
                    let (ri, rb) = (self.entries[id].ratio_id, self.entries[b].ratio_id);
                    ri > rb || (ri == rb && id < b)
                });
                if better {
                    best = Some(id);
                }
            });
            best
        };
        let high = best(&self.leads, beta.lead());
        let low = if self.cfg.base_divisors >= 2 {
            best(&self.sigs[beta.sig.comp], &beta.sig.mono).map(|a| {
                let v = low_base_divisor_bound(&self.entries[a], beta).expect("signature divides");
                (a, v)
            })
        } else {
            None
        };
        (high, low)
    }

    fn add_entry(&mut self, sig: ModuleTerm, poly: Polynomial) {
        debug_assert!(poly.is_monic());
        let ratio = self.order.ratio(&sig, poly.lead_mono());
        let Assigned { id, remap } = self.ratio_ids.assign(&ratio, &self.order);
        if let Some(map) = remap {
            for e in &mut self.entries {
                let k = map.binary_search_by_key(&e.ratio_id, |p| p.0).expect("known id");
                e.ratio_id = map[k].1;
            }
        }
        let beta = SigEntry {
            sig,
            poly,
            ratio,
            ratio_id: id,
        };
        let (high, low) = self.base_divisors(&beta);
        let k = self.entries.len();

        let mut survivors = Vec::new();
        for g in 0..k {
            self.stats.spairs += 1;
            let gamma = &self.entries[g];
            if gamma.ratio_id == beta.ratio_id {
                self.stats.non_regular += 1;
                continue;
            }
            if self.tri_enabled {
                let by_high = high.is_some_and(|a| {
                    a != g
                        && gamma.ratio_id > self.entries[a].ratio_id
                        && gamma.ratio_id > beta.ratio_id
                        && self.tri.get(a, g)
                });
                let by_low = !by_high
                    && low.as_ref().is_some_and(|(a, v)| {
                        *a != g
                            && gamma.ratio_id < self.entries[*a].ratio_id
                            && gamma.ratio_id < beta.ratio_id
                            && v.admits(gamma.lead())
                            && self.tri.get(*a, g)
                    });
                if by_high || by_low {
                    self.stats.base_divisor += 1;
                    self.tri.set(g, k);
                    continue;
                }
            }
            let (t, _) = spair_signature(&beta, gamma);
            if self.cfg.signature_criterion && self.syzygy_divides(&t) {
                self.stats.signature_early += 1;
                self.set_tri(g, k);
                continue;
            }
            if self.cfg.early_singular {
                let winner = beta.ratio_id.max(gamma.ratio_id);
                // beta is not in the signature lookup yet; as a candidate
                // it could only tie with the winner.
                if self.champion(&t).is_some_and(|c| self.entries[c].ratio_id > winner) {
                    self.stats.singular_early += 1;
                    continue;
                }
            }
            survivors.push((g, t));
        }
        self.stats.queued += survivors.len() as u64;

        self.leads.insert(beta.lead().clone(), k);
        self.leads.maybe_rebuild();
        let comp = beta.sig.comp;
        self.sigs[comp].insert(beta.sig.mono.clone(), k);
        self.sigs[comp].maybe_rebuild();
        self.entries.push(beta);

        let keys = SigKeys {
            order: &self.order,
            entries: &self.entries,
        };
        self.pairs.add_column(k, survivors, &keys);
        self.audit_pairs();

        if self.tri_enabled && (k + 1) * k / 16 > self.cfg.tri_bytes_cap {
            self.tri.clear();
            self.tri_enabled = false;
            self.stats.tri_dropped = true;
        }
    }

    fn pop_group(&mut self) -> Option<(ModuleTerm, Vec<(usize, usize)>)> {
        let keys = SigKeys {
            order: &self.order,
            entries: &self.entries,
        };
        let (i, j, t) = self.pairs.pop_min(&keys)?;
        let mut group = vec![(i, j)];
        while self
            .pairs
            .peek_min_key()
            .is_some_and(|k| self.order.cmp(k, &t) == Ordering::Equal)
        {
            let (i, j, _) = self.pairs.pop_min(&keys).expect("peeked");
            group.push((i, j));
        }
        self.audit_pairs();
        Some((t, group))
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

    fn classify(&mut self, t: &ModuleTerm, group: &[(usize, usize)]) -> Disposition {
        if self.cfg.signature_criterion && self.syzygy_divides(t) {
            return Disposition::Signature;
        }
        if self.cfg.koszul {
            let ops = KoszulOrder(&self.order);
            let mut hit = false;
            while let Some(k) = self.koszul.peek() {
                match self.order.cmp(k, t) {
                    Ordering::Less => {
                        self.koszul.pop(&ops);
                    }
                    Ordering::Equal => {
                        hit = true;
                        break;
                    }
                    Ordering::Greater => break,
                }
            }
            if hit {
                return Disposition::Koszul;
            }
        }
        if self.cfg.relprime
            && group
                .iter()
                .any(|&(i, j)| self.entries[i].lead().relatively_prime(self.entries[j].lead()))
        {
            return Disposition::RelPrime;
        }
        let champion = self.champion(t).expect("pair winner divides the signature");
        if self.cfg.singular && !self.champion_reducible(champion, t) {
            return Disposition::Singular;
        }
        Disposition::Reduce { champion }
    }

    /// Queues the Koszul signatures of every pair in a group that was not
    /// settled as a syzygy. Pairs settled as syzygies need none: their
    /// signature, which divides the Koszul one, is in the syzygy set.
    fn push_koszul(&mut self, t: &ModuleTerm, group: &[(usize, usize)]) {
        if !self.cfg.koszul {
            return;
        }
        for &(i, j) in group {
            let k = koszul_signature(&self.entries[i], &self.entries[j]);
            if self.order.cmp(&k, t) == Ordering::Greater {
                self.koszul.push(k, &KoszulOrder(&self.order), false);
            }
        }
    }

    fn step(&mut self, mut tracer: Option<&mut Tracer<'_>>) -> bool {
        let Some((t, group)) = self.pop_group() else {
            return false;
        };
        if let Some(last) = &self.last {
            assert!(
                self.order.cmp(last, &t) == Ordering::Less,
                "signatures processed out of order"
            );
        }
        self.last = Some(t.clone());
        self.stats.duplicate += group.len() as u64 - 1;
        let syzygy_group = |eng: &mut Self| {
            for &(i, j) in &group {
                eng.set_tri(i, j);
            }
        };
        match self.classify(&t, &group) {
            Disposition::Signature => {
                self.stats.signature_late += 1;
                syzygy_group(self);
            }
            Disposition::Koszul => {
                self.stats.koszul += 1;
                syzygy_group(self);
                self.insert_syzygy(t);
            }
            Disposition::RelPrime => {
                self.stats.relprime += 1;
                syzygy_group(self);
                self.insert_syzygy(t);
            }
            Disposition::Singular => {
                self.stats.singular_late += 1;
                self.push_koszul(&t, &group);
            }
            Disposition::Reduce { champion } => {
                self.stats.need_reduction += 1;
                let mult = t.mono.div(&self.entries[champion].sig.mono).expect("champion divides");
                let r = regular_reduce(
                    self.ring,
                    &self.order,
                    &self.entries,
                    &self.leads,
                    champion,
                    &mult,
                    &t,
                    self.cfg.queue,
                    tracer.as_mut().and_then(|tr| tr.choose.as_mut().map(|c| &mut **c as ReducerChoice<'_>)),
                );
                if let Some(tr) = tracer {
                    tr.reductions.push(r.clone());
                }
                if r.is_syzygy() {
                    self.stats.to_syzygy += 1;
                    syzygy_group(self);
                    self.insert_syzygy(t);
                } else if !self.cfg.singular && self.singular_top_reducible(&r.remainder, &t) {
                    self.stats.to_singular += 1;
                    self.push_koszul(&t, &group);
                } else {
                    self.stats.to_basis += 1;
                    self.push_koszul(&t, &group);
                    self.add_entry(t, r.remainder);
                }
            }
        }
        true
    }

    fn singular_top_reducible(&self, f: &Polynomial, t: &ModuleTerm) -> bool {
        let lead = f.lead_mono();
        self.leads
            .find_divisor_by(lead, |id, _| {
                self.order.cmp_ratio_to(&self.entries[id].ratio, t, lead) == Ordering::Equal
            })
            .is_some()
    }
}

/// Hooks into a run: an optional reducer choice used by every regular
/// reduction, and the log of all reduction results in processing order.
#[derive(Default)]
pub struct Tracer<'c> {
    pub choose: Option<ReducerChoice<'c>>,
    pub reductions: Vec<RegularReduction>,
}

/// Runs the signature algorithm on `input`; zero polynomials are dropped
/// and the remaining generators, made monic, become `e_1, e_2, ...`.
pub fn sb_run(ring: &Ring, input: &[Polynomial], cfg: &SbConfig) -> SbResult {
    run(ring, input, cfg, None)
}

/// [`sb_run`] with a [`Tracer`] attached.
pub fn sb_run_traced(ring: &Ring, input: &[Polynomial], cfg: &SbConfig, tracer: &mut Tracer<'_>) -> SbResult {
    run(ring, input, cfg, Some(tracer))
}

fn run(ring: &Ring, input: &[Polynomial], cfg: &SbConfig, mut tracer: Option<&mut Tracer<'_>>) -> SbResult {
    let start = Instant::now();
    let gens: Vec<Polynomial> = input
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.clone().monic(ring))
        .collect();
    assert!(!gens.is_empty(), "input must contain a nonzero polynomial");
    let order = ModuleOrder::new(
        cfg.module_order,
        cfg.tiebreak,
        ring.order(),
        gens.iter().map(|g| g.lead_mono().clone()).collect(),
    );
    let mut eng = Engine::new(ring, *cfg, order);
    for (k, g) in gens.into_iter().enumerate() {
        eng.add_entry(ModuleTerm::new(ring.one(), k), g);
    }
    while eng.step(tracer.as_deref_mut()) {}

    let mut syzygies: Vec<ModuleTerm> = eng
        .syz
        .iter()
        .flat_map(|l| l.iter().map(|(id, _)| eng.syz_terms[id].clone()))
        .collect();
    syzygies.sort_by(|a, b| eng.order.cmp(a, b));
    let mut stats = eng.stats;
    stats.basis_size = eng.entries.len();
    stats.syzygies = syzygies.len();
    stats.monomials = eng.entries.iter().map(|e| e.poly.len()).sum();
    stats.ratio_rebuilds = eng.ratio_ids.rebuilds();
    stats.lookup = eng.leads.stats();
    stats.seconds = start.elapsed().as_secs_f64();
    debug_assert!(stats.accounting_holds());
    SbResult {
        entries: eng.entries,
        syzygies,
        order: eng.order,
        stats,
    }
}

/// The signatures of `S(a, b)` candidates, both computed: the winner of
/// [`spair_signature`] must be their maximum.
pub fn spair_candidates(a: &SigEntry, b: &SigEntry) -> (ModuleTerm, ModuleTerm) {
    (
        a.sig.mul(&a.lead().lcm_cofactor(b.lead())),
        b.sig.mul(&b.lead().lcm_cofactor(a.lead())),
    )
}

/// Builds an entry with a fresh ratio id; for tests and examples that
/// assemble small bases by hand.
pub fn make_entry(order: &ModuleOrder, ids: &mut RatioIds, sig: ModuleTerm, poly: Polynomial) -> SigEntry {
    let ratio = order.ratio(&sig, poly.lead_mono());
    let a = ids.assign(&ratio, order);
    assert!(a.remap.is_none(), "hand-built bases must not trigger a renumbering");
    SigEntry {
        sig,
        poly,
        ratio,
        ratio_id: a.id,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingOrder;
    use crate::poly::Term;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn example() -> (Ring, Vec<Polynomial>) {
        let r = Ring::new(101, 3, RingOrder::Grevlex).unwrap();
        let p = |terms: &[(i64, [u32; 3])]| {
            Polynomial::normalize(
                &r,
                terms
                    .iter()
                    .map(|(c, e)| Term::new(r.field().from_i64(*c), m(e)))
                    .collect(),
            )
        };
        let g1 = p(&[(1, [2, 0, 0]), (-1, [0, 1, 0])]);
        let g2 = p(&[(1, [1, 1, 0]), (-1, [0, 0, 1])]);
        (r, vec![g1, g2])
    }

    fn entries(r: &Ring, gens: &[Polynomial]) -> (ModuleOrder, Vec<SigEntry>) {
        let order = ModuleOrder::new(
            ModuleOrderKind::Schreyer,
            SchreyerTiebreak::LowerGreater,
            r.order(),
            gens.iter().map(|g| g.lead_mono().clone()).collect(),
        );
        let mut ids = RatioIds::new();
        let es = gens
            .iter()
            .enumerate()
            .map(|(k, g)| make_entry(&order, &mut ids, ModuleTerm::new(r.one(), k), g.clone()))
            .collect();
        (order, es)
    }

    #[test]
    fn pair_and_koszul_signatures() {
        let (r, gens) = example();
        let (_, es) = entries(&r, &gens);
        let (sig, regular) = spair_signature(&es[0], &es[1]);
        assert!(regular);
        assert_eq!(sig, ModuleTerm::new(m(&[0, 1, 0]), 0));
        assert_eq!(koszul_signature(&es[0], &es[1]), ModuleTerm::new(m(&[1, 1, 0]), 0));
        assert!(!spair_signature(&es[0], &es[0]).1);
        assert!(sig.divides(&koszul_signature(&es[0], &es[1])));
    }

    #[test]
    fn regular_reduce_example() {
        let (r, gens) = example();
        let (order, es) = entries(&r, &gens);
        let mut leads = MonomialLookup::new(LookupKind::List, 3);
        for (k, e) in es.iter().enumerate() {
            leads.insert(e.lead().clone(), k);
        }
        let sig = ModuleTerm::new(m(&[0, 1, 0]), 0);
        let out = regular_reduce(&r, &order, &es, &leads, 0, &m(&[0, 1, 0]), &sig, QueueConfig::default(), None);
        // -y^2 + xz, made monic.
        let expected = Polynomial::normalize(
            &r,
            vec![Term::new(1, m(&[0, 2, 0])), Term::new(r.field().neg(1), m(&[1, 0, 1]))],
        );
        assert_eq!(out.remainder, expected);
        assert!(!out.is_syzygy());
        assert_eq!(out.steps, 1);
    }

    #[test]
    fn small_run() {
        let (r, gens) = example();
        let res = sb_run(&r, &gens, &SbConfig::default());
        assert!(res.stats.accounting_holds());
        let gb = res.reduced_gb(&r, QueueConfig::default(), LookupKind::List);
        let leads: Vec<_> = gb.iter().map(|g| g.lead_mono().clone()).collect();
        assert_eq!(leads, vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0])]);
    }
}
