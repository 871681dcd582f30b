#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigbasis::cli::{execute, Cli};
use sigbasis::division::{classic_reduce, ReduceOptions};
use sigbasis::gen::KatsuraNaming;
use sigbasis::lookup::{LookupKind, MonomialLookup};
use sigbasis::poly::{Polynomial, Term};
use sigbasis::queue::{QueueConfig, TermQueue};
use sigbasis::sb::{
    low_base_divisor_bound, make_entry, spair_candidates, ModuleOrder, ModuleOrderKind, ModuleTerm, RatioIds,
    SchreyerTiebreak, SigEntry,
};
use sigbasis::{Monomial, Ring, RingOrder};

use clap::Parser;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(p: u32, n: usize, order: RingOrder) -> Ring {
    Ring::new(p, n, order).unwrap()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn random_mono(rng: &mut impl Rng, n: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>())
}

pub fn random_poly(rng: &mut impl Rng, ring: &Ring, terms: usize, max_exp: u32) -> Polynomial {
    let p = ring.characteristic();
    let raw = (0..terms)
        .map(|_| Term::new(rng.gen_range(1..p), random_mono(rng, ring.num_vars(), max_exp)))
        .collect();
    Polynomial::normalize(ring, raw)
}

/// Divides `f` by `basis` with a plain list lookup.
pub fn remainder(ring: &Ring, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut look = MonomialLookup::new(LookupKind::List, ring.num_vars());
    for (i, g) in basis.iter().enumerate() {
        look.insert(g.lead_mono().clone(), i);
    }
    classic_reduce(ring, f, basis, &look, &ReduceOptions::default()).remainder
}

/// Buchberger's test: every S-polynomial reduces to zero.
pub fn is_groebner(ring: &Ring, basis: &[Polynomial]) -> bool {
    (0..basis.len()).all(|j| {
        (0..j).all(|i| {
            let s = Polynomial::s_polynomial(ring, &basis[i], &basis[j]);
            remainder(ring, &s, basis).is_zero()
        })
    })
}

/// Reduced: monic, no term of any element divisible by another's lead.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.is_monic()
            && basis.iter().enumerate().all(|(j, h)| {
                i == j || g.terms().iter().all(|t| !h.lead_mono().divides(&t.mono))
            })
    })
}

/// Runs the CLI in-process.
pub fn cli(args: &[&str]) -> String {
    let cli = Cli::try_parse_from(std::iter::once("sigbasis").chain(args.iter().copied())).unwrap();
    execute(&cli).unwrap()
}

/// Runs one random script of pushes and pops against `cfg` and against a
/// sort-and-fold oracle; returns a description of the first disagreement.
pub fn queue_script(ring: &Ring, cfg: QueueConfig, rng: &mut impl Rng, ops: usize) -> Result<(), String> {
    let f = ring.field();
    let n = ring.num_vars();
    let pool: Vec<Polynomial> = (0..4).map(|_| random_poly(rng, ring, 6, 2)).collect();
    let mut q = TermQueue::new(ring, cfg).map_err(|e| e.to_string())?;
    let mut oracle: Vec<(Monomial, u32)> = Vec::new();
    let add = |oracle: &mut Vec<(Monomial, u32)>, c: u32, m: Monomial| match oracle.iter_mut().find(|(o, _)| *o == m) {
        Some(e) => e.1 = f.add(e.1, c),
        None => oracle.push((m, c)),
    };
    for step in 0..ops {
        match rng.gen_range(0..10) {
            0..=3 => {
                let t = Term::new(rng.gen_range(1..ring.characteristic()), random_mono(rng, n, 3));
                add(&mut oracle, t.coeff, t.mono.clone());
                q.push_term(t);
            }
            4..=6 => {
                let g = &pool[rng.gen_range(0..pool.len())];
                let c = rng.gen_range(1..ring.characteristic());
                let m = random_mono(rng, n, 1);
                let tail = rng.gen_bool(0.3);
                for t in &g.terms()[usize::from(tail).min(g.len())..] {
                    add(&mut oracle, f.mul(c, t.coeff), t.mono.mul(&m));
                }
                if tail {
                    q.push_product_tail(c, &m, g);
                } else {
                    q.push_product(c, &m, g);
                }
            }
            _ => {
                oracle.retain(|(_, c)| *c != 0);
                let want = oracle
                    .iter()
                    .enumerate()
                    .max_by(|a, b| ring.cmp(&a.1 .0, &b.1 .0))
                    .map(|(i, _)| i)
                    .map(|i| oracle.swap_remove(i));
                let got = q.pop_max().map(|t| (t.mono, t.coeff));
                if got != want {
                    return Err(format!("{cfg} step {step}: got {got:?}, want {want:?}"));
                }
            }
        }
    }
    oracle.retain(|(_, c)| *c != 0);
    oracle.sort_by(|a, b| ring.cmp(&b.0, &a.0));
    let rest: Vec<(Monomial, u32)> = q.drain_to_polynomial().into_terms().into_iter().map(|t| (t.mono, t.coeff)).collect();
    if rest != oracle {
        return Err(format!("{cfg}: final drain differs"));
    }
    Ok(())
}

/// Random monomials with the non-minimal ones removed.
pub fn random_minimal_monomials(rng: &mut impl Rng, n: usize, max_gens: usize, max_exp: u32) -> Vec<Monomial> {
    let k = rng.gen_range(2..=max_gens);
    let raw: Vec<Monomial> = (0..k).map(|_| random_mono(rng, n, max_exp)).collect();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in raw.iter().enumerate() {
        let redundant = raw
            .iter()
            .enumerate()
            .any(|(j, o)| (o.divides(m) && o != m) || (o == m && j < i));
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Checks that the pair syzygies `pairs` form a minimal generating set of
/// the syzygy module of the monomials `gens`, one multidegree at a time.
/// In degree `a` the module has dimension `|V| - 1` (`V` the generators
/// dividing `a`), the part coming from lower degrees is spanned by the
/// zero-sum vectors on the sets `S_v` of generators dividing `a / x_v`, so
/// `a` needs exactly (components of the `S_v` hypergraph) - 1 new
/// generators, and the pairs of lcm `a` must connect those components.
pub fn check_minimal_syzygies(gens: &[Monomial], pairs: &[(usize, usize)]) -> Result<(), String> {
    let k = gens.len();
    let mut degrees: Vec<Monomial> = Vec::new();
    for j in 0..k {
        for i in 0..j {
            let l = gens[i].lcm(&gens[j]);
            if !degrees.contains(&l) {
                degrees.push(l);
            }
        }
    }
    let mut needed_total = 0;
    for a in &degrees {
        let mut parent: Vec<usize> = (0..k).collect();
        let in_v: Vec<bool> = gens.iter().map(|m| m.divides(a)).collect();
        for v in 0..a.num_vars() {
            if a.exp(v) == 0 {
                continue;
            }
            let mut e = a.exps().to_vec();
            e[v] -= 1;
            let lower = Monomial::new(e);
            let s: Vec<usize> = (0..k).filter(|&i| gens[i].divides(&lower)).collect();
            for w in s.windows(2) {
                let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[x] = y;
            }
        }
        let components = |parent: &mut Vec<usize>| {
            let mut roots: Vec<usize> = (0..k).filter(|&i| in_v[i]).map(|i| find(parent, i)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len()
        };
        let needed = components(&mut parent) - 1;
        needed_total += needed;
        let here: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(i, j)| gens[i].lcm(&gens[j]) == *a).collect();
        if here.len() != needed {
            return Err(format!("degree {a}: {} pairs kept, {needed} needed", here.len()));
        }
        for (i, j) in here {
            let (x, y) = (find(&mut parent, i), find(&mut parent, j));
            parent[x] = y;
        }
        if components(&mut parent) != 1 {
            return Err(format!("degree {a}: kept pairs do not generate"));
        }
    }
    if pairs.len() != needed_total {
        return Err(format!("{} pairs kept, {needed_total} needed", pairs.len()));
    }
    Ok(())
}

/// A built-in benchmark ideal over F_101 in grevlex.
pub fn benchmark(name: &str) -> (Ring, Vec<Polynomial>) {
    let id = sigbasis::cli::builtin(name, 101, RingOrder::Grevlex, KatsuraNaming::VarCount)
        .expect("known benchmark name")
        .unwrap();
    (id.ring, id.gens)
}

/// Signature of `S(a, b)` computed from scratch: the larger of the two
/// candidate module terms.
pub fn direct_signature(order: &ModuleOrder, a: &SigEntry, b: &SigEntry) -> ModuleTerm {
    let (x, y) = spair_candidates(a, b);
    if order.cmp(&x, &y).is_ge() {
        x
    } else {
        y
    }
}

fn random_order(rng: &mut impl Rng, n: usize, rank: usize) -> ModuleOrder {
    let kind = if rng.gen_bool(0.7) {
        ModuleOrderKind::Schreyer
    } else {
        ModuleOrderKind::PositionOverTerm
    };
    let tie = if rng.gen_bool(0.5) {
        SchreyerTiebreak::LowerGreater
    } else {
        SchreyerTiebreak::HigherGreater
    };
    let ring_order = match rng.gen_range(0..3) {
        0 => RingOrder::Grevlex,
        1 => RingOrder::Lex,
        _ => RingOrder::Elimination(1),
    };
    let leads = (0..rank).map(|_| random_mono(rng, n, 2)).collect();
    ModuleOrder::new(kind, tie, ring_order, leads)
}

fn entries(order: &ModuleOrder, parts: [(ModuleTerm, Monomial); 3]) -> [SigEntry; 3] {
    let mut ids = RatioIds::new();
    parts.map(|(sig, lead)| make_entry(order, &mut ids, sig, Polynomial::from_sorted_terms(vec![Term::new(1, lead)])))
}

/// Outcome counts of [`base_divisor_trials`].
#[derive(Debug, Default)]
pub struct BaseDivisorTally {
    pub high: usize,
    pub low_divides: usize,
    pub low_not_divides: usize,
}

/// Checks both base-divisor theorems on `count` random instances each.
/// High ratio: `hd a | hd b` and `c` of larger ratio than both give
/// `sig S(a, c) | sig S(b, c)`. Low ratio: `sig a | sig b` and `c` of
/// smaller ratio than both give `sig S(a, c) | sig S(b, c)` exactly when
/// `hd c` divides the bound. Signatures come from [`direct_signature`],
/// hypotheses from ratio comparisons.
pub fn base_divisor_trials(seed: u64, count: usize) -> Result<BaseDivisorTally, String> {
    let mut g = rng(seed);
    let mut tally = BaseDivisorTally::default();
    let n = 3;
    while tally.high < count {
        let order = random_order(&mut g, n, 3);
        let ha = random_mono(&mut g, n, 3);
        let hb = ha.mul(&random_mono(&mut g, n, 2));
        let sig = |g: &mut ChaCha8Rng| ModuleTerm::new(random_mono(g, n, 3), g.gen_range(0..3));
        let parts = [
            (sig(&mut g), ha),
            (sig(&mut g), hb),
            (sig(&mut g), random_mono(&mut g, n, 4)),
        ];
        let [a, b, c] = entries(&order, parts);
        if !(order.cmp_ratio(&c.ratio, &a.ratio).is_gt() && order.cmp_ratio(&c.ratio, &b.ratio).is_gt()) {
            continue;
        }
        let (sa, sb) = (direct_signature(&order, &a, &c), direct_signature(&order, &b, &c));
        if !sa.divides(&sb) {
            return Err(format!("high ratio: {sa} does not divide {sb}"));
        }
        tally.high += 1;
    }
    while tally.low_divides + tally.low_not_divides < count {
        let order = random_order(&mut g, n, 3);
        let comp = g.gen_range(0..3);
        let sa = random_mono(&mut g, n, 2);
        let sb = sa.mul(&random_mono(&mut g, n, 2));
        let parts = [
            (ModuleTerm::new(sa, comp), random_mono(&mut g, n, 3)),
            (ModuleTerm::new(sb, comp), random_mono(&mut g, n, 3)),
            (ModuleTerm::new(random_mono(&mut g, n, 2), g.gen_range(0..3)), random_mono(&mut g, n, 4)),
        ];
        let [a, b, c] = entries(&order, parts);
        if !(order.cmp_ratio(&c.ratio, &a.ratio).is_lt() && order.cmp_ratio(&c.ratio, &b.ratio).is_lt()) {
            continue;
        }
        let v = low_base_divisor_bound(&a, &b).map_err(|e| e.to_string())?;
        let (x, y) = (direct_signature(&order, &a, &c), direct_signature(&order, &b, &c));
        let predicted = v.admits(c.lead());
        if x.divides(&y) != predicted {
            return Err(format!("low ratio: bound {:?} says {predicted} for {x} | {y}", v.0));
        }
        if predicted {
            tally.low_divides += 1;
        } else {
            tally.low_not_divides += 1;
        }
    }
    Ok(tally)
}
