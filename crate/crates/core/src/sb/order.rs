//! Module terms, module orders and sig-lead ratios.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::monomial::{Monomial, RingOrder};

/// The term `mono * e_comp` of the free module over the input generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub mono: Monomial,
    pub comp: usize,
}

impl ModuleTerm {
    pub fn new(mono: Monomial, comp: usize) -> Self {
        ModuleTerm { mono, comp }
    }

    /// `self` divides `other` (same component, monomial divides).
    pub fn divides(&self, other: &ModuleTerm) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }

    pub fn mul(&self, m: &Monomial) -> ModuleTerm {
        ModuleTerm::new(self.mono.mul(m), self.comp)
    }
}

/// Components are printed 1-based.
impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e_{}", self.mono, self.comp + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ModuleOrderKind {
    /// `a e_i` vs `b e_j` by `a hd(g_i)` vs `b hd(g_j)`, then component.
    #[default]
    Schreyer,
    /// Higher component is greater; ties by the Schreyer weight.
    PositionOverTerm,
}

impl FromStr for ModuleOrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "schreyer" => Ok(ModuleOrderKind::Schreyer),
            "potop" | "pot" => Ok(ModuleOrderKind::PositionOverTerm),
            _ => Err(format!("unknown module order '{s}'")),
        }
    }
}

/// Which component wins when two Schreyer weights tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SchreyerTiebreak {
    #[default]
    LowerGreater,
    HigherGreater,
}

impl FromStr for SchreyerTiebreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "low-gt" => Ok(SchreyerTiebreak::LowerGreater),
            "high-gt" => Ok(SchreyerTiebreak::HigherGreater),
            _ => Err(format!("unknown tie-break '{s}'")),
        }
    }
}

/// The formal quotient `sig / hd` stored as its Schreyer weight
/// `sig.mono * hd(g_comp) / hd`, which may have negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub weight: Box<[i32]>,
    pub comp: usize,
}

/// A module order over fixed input leading monomials.
#[derive(Debug, Clone)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    tiebreak: SchreyerTiebreak,
    ring_order: RingOrder,
    leads: Vec<Monomial>,
}

impl ModuleOrder {
    /// `leads[i]` is the leading monomial of input generator `i`.
    pub fn new(
        kind: ModuleOrderKind,
        tiebreak: SchreyerTiebreak,
        ring_order: RingOrder,
        leads: Vec<Monomial>,
    ) -> Self {
        assert!(!leads.is_empty(), "module order needs at least one generator");
        ModuleOrder {
            kind,
            tiebreak,
            ring_order,
            leads,
        }
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn tiebreak(&self) -> SchreyerTiebreak {
        self.tiebreak
    }

    pub fn rank(&self) -> usize {
        self.leads.len()
    }

    pub fn num_vars(&self) -> usize {
        self.leads[0].num_vars()
    }

    pub fn lead(&self, comp: usize) -> &Monomial {
        &self.leads[comp]
    }

    fn tie(&self, a: usize, b: usize) -> Ordering {
        match self.tiebreak {
            SchreyerTiebreak::LowerGreater => b.cmp(&a),
            SchreyerTiebreak::HigherGreater => a.cmp(&b),
        }
    }

    /// Combines a weight comparison (given as a difference vector) with the
    /// component rule of the order.
    #[inline]
    fn combine(&self, ca: usize, cb: usize, diff: impl Fn(usize) -> i64) -> Ordering {
        let n = self.num_vars();
        match self.kind {
            ModuleOrderKind::Schreyer => self
                .ring_order
                .cmp_diff(n, diff)
                .then_with(|| self.tie(ca, cb)),
            ModuleOrderKind::PositionOverTerm => ca
                .cmp(&cb)
                .then_with(|| self.ring_order.cmp_diff(n, diff)),
        }
    }

    pub fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        let (la, lb) = (&self.leads[a.comp], &self.leads[b.comp]);
        self.combine(a.comp, b.comp, |i| {
            (a.mono.exp(i) as i64 + la.exp(i) as i64) - (b.mono.exp(i) as i64 + lb.exp(i) as i64)
        })
    }

    /// The ratio `sig / lead`.
    pub fn ratio(&self, sig: &ModuleTerm, lead: &Monomial) -> Ratio {
        let l = &self.leads[sig.comp];
        let weight = (0..self.num_vars())
            .map(|i| (sig.mono.exp(i) + l.exp(i)) as i32 - lead.exp(i) as i32)
            .collect();
        Ratio {
            weight,
            comp: sig.comp,
        }
    }

    pub fn cmp_ratio(&self, a: &Ratio, b: &Ratio) -> Ordering {
        self.combine(a.comp, b.comp, |i| a.weight[i] as i64 - b.weight[i] as i64)
    }

    /// Compares `ratio` with the ratio `sig / t` without building the latter.
    #[inline]
    pub fn cmp_ratio_to(&self, ratio: &Ratio, sig: &ModuleTerm, t: &Monomial) -> Ordering {
        let l = &self.leads[sig.comp];
        self.combine(ratio.comp, sig.comp, |i| {
            ratio.weight[i] as i64 - (sig.mono.exp(i) as i64 + l.exp(i) as i64 - t.exp(i) as i64)
        })
    }
}

/// Gap between consecutive ids after a rebuild, and between a new extreme
/// ratio and the previous extreme.
pub const RATIO_ID_SPACING: i64 = 1 << 20;

/// Integer ids that embed the order on the distinct ratios seen so far.
#[derive(Debug, Clone, Default)]
pub struct RatioIds {
    sorted: Vec<(Ratio, i64)>,
    rebuilds: usize,
}

/// Result of [`RatioIds::assign`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assigned {
    pub id: i64,
    /// Set when every id was renumbered: sorted `(old, new)` pairs.
    pub remap: Option<Vec<(i64, i64)>>,
}

impl RatioIds {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn rebuilds(&self) -> usize {
        self.rebuilds
    }

    /// Returns the id for `r`, creating one if `r` is new.
    pub fn assign(&mut self, r: &Ratio, order: &ModuleOrder) -> Assigned {
        let pos = self.sorted.binary_search_by(|(x, _)| order.cmp_ratio(x, r));
        let pos = match pos {
            Ok(p) => {
                return Assigned {
                    id: self.sorted[p].1,
                    remap: None,
                }
            }
            Err(p) => p,
        };
        let lo = pos.checked_sub(1).map(|p| self.sorted[p].1);
        let hi = self.sorted.get(pos).map(|e| e.1);
        let id = match (lo, hi) {
            (None, None) => Some(0),
            (Some(l), None) => Some(l + RATIO_ID_SPACING),
            (None, Some(h)) => Some(h - RATIO_ID_SPACING),
            (Some(l), Some(h)) if h - l >= 2 => Some(l + (h - l) / 2),
            _ => None,
        };
        match id {
            Some(id) => {
                self.sorted.insert(pos, (r.clone(), id));
                Assigned { id, remap: None }
            }
            None => {
                self.sorted.insert(pos, (r.clone(), 0));
                self.rebuilds += 1;
                let mut remap = Vec::with_capacity(self.sorted.len() - 1);
                for (k, (_, id)) in self.sorted.iter_mut().enumerate() {
                    let new = k as i64 * RATIO_ID_SPACING;
                    if k != pos {
                        remap.push((*id, new));
                    }
                    *id = new;
                }
                Assigned {
                    id: pos as i64 * RATIO_ID_SPACING,
                    remap: Some(remap),
                }
            }
        }
    }
}
