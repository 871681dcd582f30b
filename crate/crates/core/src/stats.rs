//! Human-readable run statistics as `name: value` lines.

use std::fmt;

use crate::classic::ClassicStats;
use crate::lookup::LookupStats;
use crate::sb::SbStats;

#[derive(Debug, Clone, PartialEq)]
struct Row {
    name: &'static str,
    value: String,
    /// Depends on the chosen data structures or on timing.
    volatile: bool,
}

/// The counters of one run in print order: algorithm tag, S-pair counters,
/// basis sizes, divmask counters, time.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    rows: Vec<Row>,
}

impl StatsReport {
    fn new(algorithm: &str) -> Self {
        let mut r = StatsReport { rows: Vec::new() };
        r.push("algorithm", algorithm);
        r
    }

    fn push(&mut self, name: &'static str, value: impl ToString) {
        self.rows.push(Row {
            name,
            value: value.to_string(),
            volatile: false,
        });
    }

    fn push_volatile(&mut self, name: &'static str, value: impl ToString) {
        self.rows.push(Row {
            name,
            value: value.to_string(),
            volatile: true,
        });
    }

    /// `early_singular` adds the row for the optional early singular
    /// criterion.
    pub fn from_sb(s: &SbStats, early_singular: bool) -> Self {
        let mut r = StatsReport::new("sb");
        r.push("#spairs", s.spairs);
        r.push("elim via non-regular criterion", s.non_regular);
        r.push("elim via base divisor criterion", s.base_divisor);
        r.push("elim via signature criterion", s.signature_early);
        if early_singular {
            r.push("elim via singular criterion(early)", s.singular_early);
        }
        r.push("#spairs queued", s.queued);
        r.push("elim via duplicate signature", s.duplicate);
        r.push("elim via signature criterion(late)", s.signature_late);
        r.push("elim via Koszul criterion", s.koszul);
        r.push("elim via rel. prime criterion", s.relprime);
        r.push("elim via singular criterion(late)", s.singular_late);
        r.push("#spairs which need reduction", s.need_reduction);
        r.push("reduce to SB elements", s.to_basis);
        r.push("reduce to new syzygy signatures", s.to_syzygy);
        if s.to_singular > 0 {
            r.push("reduce to singular elements", s.to_singular);
        }
        r.push("#SB", s.basis_size);
        r.push("#syzygies", s.syzygies);
        r.push("#monomials", s.monomials);
        r.push_lookup(&s.lookup);
        r.push_volatile("time", format!("{:.3} s", s.seconds));
        r
    }

    /// `monomials` is the term count of the printed basis.
    pub fn from_classic(s: &ClassicStats, monomials: usize) -> Self {
        let mut r = StatsReport::new("classic");
        r.push("#S-pairs", s.spairs);
        r.push("rel prime", s.relprime);
        r.push("lcm cache hits", s.lcm_cache_hits);
        r.push("lcm simple hits", s.lcm_simple_hits);
        r.push("lcm graph hits", s.graph_hits);
        r.push("#reductions", s.reductions);
        r.push("0-reductions", s.zero_reductions);
        r.push("#GB", s.basis_size);
        r.push("#monomials", monomials);
        r.push_lookup(&s.lookup);
        r.push_volatile("time", format!("{:.3} s", s.seconds));
        r
    }

    fn push_lookup(&mut self, l: &LookupStats) {
        self.push_volatile("# divmask hits", l.hits);
        self.push_volatile("# divmask misses", l.misses);
        self.push_volatile("# divisibilities", l.divisibilities);
        self.push_volatile("hit rate", format!("{:.1}%", 100.0 * l.hit_rate()));
        self.push_volatile("effective hit rate", format!("{:.1}%", 100.0 * l.effective_hit_rate()));
    }

    /// The value printed for `name`, if present.
    pub fn get(&self, name: &str) -> Option<&str> {
        self.rows.iter().find(|r| r.name == name).map(|r| r.value.as_str())
    }

    /// Only the rows that do not depend on data-structure choices or timing.
    pub fn deterministic(&self) -> String {
        self.rows
            .iter()
            .filter(|r| !r.volatile)
            .map(|r| format!("{}: {}\n", r.name, r.value))
            .collect()
    }
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}: {}", r.name, r.value)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sb_rows_in_order() {
        let s = SbStats {
            spairs: 10,
            need_reduction: 3,
            ..Default::default()
        };
        let r = StatsReport::from_sb(&s, false);
        let text = r.to_string();
        assert!(text.starts_with("algorithm: sb\n#spairs: 10\nelim via non-regular criterion: 0\n"));
        assert_eq!(r.get("#spairs which need reduction"), Some("3"));
        assert!(r.get("elim via singular criterion(early)").is_none());
        assert!(!r.deterministic().contains("time"));
        assert!(text.contains("hit rate: 0.0%\n"));
    }
}
