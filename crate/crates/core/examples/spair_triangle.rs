//! The S-pair triangle: one small integer per queued pair, a single key per
//! column, pairs popped in key order.
//!
//! cargo run --example spair_triangle

use std::cmp::Ordering;

use sigbasis::spair::{PairKeys, SPairQueue, SPairQueueKind};
use sigbasis::Monomial;

// Keys are lcm degrees of the leads.
struct LcmDegree(Vec<Monomial>);

impl PairKeys for LcmDegree {
    type Key = u32;

    fn key(&self, i: usize, j: usize) -> u32 {
        self.0[i].lcm(&self.0[j]).degree()
    }

    fn cmp(&self, a: &u32, b: &u32) -> Ordering {
        a.cmp(b)
    }
}

fn main() {
    let leads: Vec<Monomial> = [[3, 0, 0], [1, 1, 0], [0, 2, 1], [0, 0, 4], [2, 2, 2]]
        .iter()
        .map(|e| Monomial::new(e.to_vec()))
        .collect();
    let keys = LcmDegree(leads.clone());

    for kind in SPairQueueKind::ALL {
        let mut q = SPairQueue::new(kind);
        for j in 1..leads.len() {
            let pairs = (0..j).map(|i| (i, keys.key(i, j))).collect();
            q.add_column(j, pairs, &keys);
        }
        if let Some(m) = q.memory() {
            println!("{kind}: {} pairs in {} bytes, {} front keys", m.narrow_pairs, m.bytes, m.front_keys);
        }
        let mut order = Vec::new();
        while let Some((i, j, k)) = q.pop_min(&keys) {
            order.push(format!("({i},{j}):{k}"));
        }
        println!("{kind}: {}", order.join(" "));
    }
}
