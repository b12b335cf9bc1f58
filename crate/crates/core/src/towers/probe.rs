//! Exhaustive tower enumeration for small groups, over all prime-power
//! subgroups, on a multiplication table.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::arith::is_power_of;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Largest group order the probe runs on by default.
pub const DEFAULT_PROBE_ORDER: u128 = 500;

#[derive(Clone, Copy, Debug)]
pub struct ProbeLimits {
    pub max_order: u128,
    /// DFS nodes before giving up.
    pub node_budget: u64,
}

impl Default for ProbeLimits {
    fn default() -> Self {
        ProbeLimits {
            max_order: DEFAULT_PROBE_ORDER,
            node_budget: 20_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    /// False when the group was too large or the budget ran out.
    pub complete: bool,
    pub target_height: usize,
    pub tallest: usize,
    /// Generators and primes of a tower of the target height, top first.
    pub taller: Option<Vec<(u64, Vec<String>)>>,
    pub towers_seen: u64,
    pub p3_checked: u64,
    /// Towers with a cyclic stage at position 3 or later.
    pub p3_violations: Vec<Vec<(u64, Vec<String>)>>,
    pub subgroups: usize,
}

struct Table {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    fn new(g: &FiniteGroup) -> Result<Table> {
        let els = g.elements()?;
        let n = els.len();
        let mut mul = vec![0u32; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                mul[i * n + j] = g.idx(&a.mul(b)) as u32;
            }
        }
        let inv = els.iter().map(|a| g.idx(&a.inverse()) as u32).collect();
        Ok(Table { n, mul, inv })
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn conj(&self, x: usize, g: usize) -> usize {
        self.m(self.m(self.inv[g] as usize, x), g)
    }

    fn comm(&self, x: usize, y: usize) -> usize {
        let xi = self.inv[x] as usize;
        let yi = self.inv[y] as usize;
        self.m(self.m(xi, yi), self.m(x, y))
    }
}

struct PSub {
    prime: u64,
    set: FixedBitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
    cyclic: bool,
}

/// Every nontrivial `p`-subgroup, grown one normalising element at a time.
fn p_subgroups(g: &FiniteGroup, t: &Table) -> Result<Vec<PSub>> {
    let orders = g.element_orders()?;
    let mut out = Vec::new();
    for p in g.prime_divisors() {
        let pel: Vec<usize> = (1..t.n)
            .filter(|&i| is_power_of(orders[i] as u128, p))
            .collect();
        let mut seen: FxHashSet<FixedBitSet> = FxHashSet::default();
        let mut frontier: Vec<(FixedBitSet, Vec<usize>, Vec<usize>)> = Vec::new();
        let mut trivial = FixedBitSet::with_capacity(t.n);
        trivial.insert(0);
        frontier.push((trivial, vec![0], Vec::new()));
        while let Some((set, members, gens)) = frontier.pop() {
            for &x in &pel {
                if set.contains(x) {
                    continue;
                }
                if !gens.iter().all(|&s| set.contains(t.conj(s, x))) {
                    continue;
                }
                // x normalises S; grow to S⟨x⟩ once x^p ∈ S.
                let mut xp = x;
                for _ in 1..p {
                    xp = t.m(xp, x);
                }
                if !set.contains(xp) {
                    continue;
                }
                let mut nset = set.clone();
                let mut nmem = members.clone();
                let mut power = x;
                for _ in 1..p {
                    for &s in &members {
                        let e = t.m(s, power);
                        if !nset.contains(e) {
                            nset.insert(e);
                            nmem.push(e);
                        }
                    }
                    power = t.m(power, x);
                }
                if seen.contains(&nset) {
                    continue;
                }
                seen.insert(nset.clone());
                let mut ngens = gens.clone();
                ngens.push(x);
                let cyclic = nmem.iter().any(|&e| orders[e] as usize == nmem.len());
                out.push(PSub {
                    prime: p,
                    set: nset.clone(),
                    members: nmem.clone(),
                    gens: ngens.clone(),
                    cyclic,
                });
                frontier.push((nset, nmem, ngens));
            }
        }
    }
    Ok(out)
}

struct Search<'t> {
    t: &'t Table,
    subs: Vec<PSub>,
    /// `normalises[a]` holds `b` when subgroup `a` normalises subgroup `b`.
    normalises: Vec<FixedBitSet>,
    target: usize,
    stop_at_target: bool,
    nodes: u64,
    budget: u64,
    tallest: usize,
    towers_seen: u64,
    p3_checked: u64,
    p3_violations: Vec<Vec<usize>>,
    found: Option<Vec<usize>>,
    exhausted: bool,
}

impl Search<'_> {
    /// `chain` is bottom-first; `kernels[i]` belongs to `chain[i]`.
    fn dfs(&mut self, chain: &mut Vec<usize>, kernels: &mut Vec<FixedBitSet>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        self.towers_seen += 1;
        let depth = chain.len();
        self.tallest = self.tallest.max(depth);
        if depth >= 3 {
            self.p3_checked += 1;
            // The new top is position 1; bottom-first index depth-3 is position 3.
            if self.subs[chain[depth - 3]].cyclic {
                self.p3_violations.push(chain.iter().rev().cloned().collect());
            }
        }
        if depth == self.target {
            if self.found.is_none() {
                self.found = Some(chain.iter().rev().cloned().collect());
            }
            return;
        }
        let below = *chain.last().unwrap();
        let below_prime = self.subs[below].prime;
        for a in 0..self.subs.len() {
            if self.exhausted || (self.stop_at_target && self.found.is_some()) {
                return;
            }
            if self.subs[a].prime == below_prime || !chain.iter().all(|&b| self.normalises[a].contains(b)) {
                continue;
            }
            let kb = kernels.last().unwrap();
            let bgens = &self.subs[below].gens;
            let t = self.t;
            let mut k = FixedBitSet::with_capacity(t.n);
            for &x in &self.subs[a].members {
                if bgens.iter().all(|&y| kb.contains(t.comm(y, x))) {
                    k.insert(x);
                }
            }
            if k.count_ones(..) == self.subs[a].members.len() {
                continue;
            }
            chain.push(a);
            kernels.push(k);
            self.dfs(chain, kernels);
            chain.pop();
            kernels.pop();
        }
    }
}

fn describe(g: &FiniteGroup, subs: &[PSub], chain: &[usize]) -> Vec<(u64, Vec<String>)> {
    chain
        .iter()
        .map(|&i| (subs[i].prime, subs[i].gens.iter().map(|&e| g.element(e).to_string()).collect()))
        .collect()
}

/// Enumerates every tower of height at most `target` with stages among the
/// prime-power subgroups, recording the tallest and checking that no
/// stage at position 3 or later is cyclic.
pub fn probe_towers(g: &FiniteGroup, target: usize, limits: ProbeLimits) -> Result<ProbeReport> {
    let mut report = ProbeReport {
        complete: false,
        target_height: target,
        tallest: 0,
        taller: None,
        towers_seen: 0,
        p3_checked: 0,
        p3_violations: Vec::new(),
        subgroups: 0,
    };
    if g.order() > limits.max_order {
        return Ok(report);
    }
    let table = Table::new(g)?;
    let mut s = searcher(g, &table, target, false, limits)?;
    s.start();
    report.complete = !s.exhausted;
    report.tallest = s.tallest;
    report.taller = s.found.as_ref().map(|c| describe(g, &s.subs, c));
    report.towers_seen = s.towers_seen;
    report.p3_checked = s.p3_checked;
    report.p3_violations = s.p3_violations.iter().map(|c| describe(g, &s.subs, c)).collect();
    report.subgroups = s.subs.len();
    Ok(report)
}

/// A tower of exactly `height` stages, top first, by exhaustive search.
pub(crate) fn find_tower_exhaustive(g: &FiniteGroup, height: usize, limits: ProbeLimits) -> Result<Option<Vec<(u64, Vec<Permutation>)>>> {
    if g.order() > limits.max_order {
        return Ok(None);
    }
    let table = Table::new(g)?;
    let mut s = searcher(g, &table, height, true, limits)?;
    s.start();
    Ok(s.found.map(|c| {
        c.iter()
            .map(|&i| (s.subs[i].prime, s.subs[i].gens.iter().map(|&e| g.element(e).clone()).collect()))
            .collect()
    }))
}

fn searcher<'t>(g: &FiniteGroup, t: &'t Table, target: usize, stop: bool, limits: ProbeLimits) -> Result<Search<'t>> {
    let subs = p_subgroups(g, t)?;
    let m = subs.len();
    let mut normalises = vec![FixedBitSet::with_capacity(m); m];
    for (a, sa) in subs.iter().enumerate() {
        for (b, sb) in subs.iter().enumerate() {
            if sa.gens.iter().all(|&x| sb.gens.iter().all(|&y| sb.set.contains(t.conj(y, x)))) {
                normalises[a].insert(b);
            }
        }
    }
    Ok(Search {
        t,
        subs,
        normalises,
        target,
        stop_at_target: stop,
        nodes: 0,
        budget: limits.node_budget,
        tallest: 0,
        towers_seen: 0,
        p3_checked: 0,
        p3_violations: Vec::new(),
        found: None,
        exhausted: false,
    })
}

impl Search<'_> {
    fn start(&mut self) {
        if self.target == 0 {
            return;
        }
        for b in 0..self.subs.len() {
            if self.exhausted || (self.stop_at_target && self.found.is_some()) {
                return;
            }
            let mut k = FixedBitSet::with_capacity(self.t.n);
            k.insert(0);
            self.dfs(&mut vec![b], &mut vec![k]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::small::{cyclic, sym};

    #[test]
    fn s4_has_no_tower_of_height_four() {
        let s4 = sym(4).unwrap();
        let r = probe_towers(&s4, 4, ProbeLimits::default()).unwrap();
        assert!(r.complete);
        assert_eq!(r.tallest, 3);
        assert!(r.taller.is_none());
        assert!(r.p3_checked > 0 && r.p3_violations.is_empty());
        // Subgroups of 2-power order in S4: 9 of order 2, 7 of order 4, 3 of order 8; four of order 3.
        assert_eq!(r.subgroups, 23);
        let t = find_tower_exhaustive(&s4, 3, ProbeLimits::default()).unwrap().unwrap();
        assert_eq!(t.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 3, 2]);
    }

    #[test]
    fn nilpotent_towers_have_height_one() {
        let c6 = cyclic(6).unwrap();
        let r = probe_towers(&c6, 2, ProbeLimits::default()).unwrap();
        assert_eq!((r.tallest, r.taller.is_none()), (1, true));
    }
}
