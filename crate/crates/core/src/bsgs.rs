//! Deterministic Schreier–Sims: base and strong generating set.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[β] = (u, u⁻¹)` with `base^u = β`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        let id = Permutation::identity(degree);
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let img = s.image(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.mul(s);
                    let uinv = u.inverse();
                    self.transversal[img] = Some((u, uinv));
                    self.orbit.push(img);
                }
            }
        }
    }
}

/// Stabiliser chain `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ … ≥ 1` with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if g.is_identity() {
                continue;
            }
            let (residue, _) = chain.sift(g, 0);
            if !residue.is_identity() {
                chain.insert(residue);
            }
        }
        chain
    }

    /// Order of the group: the product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (r, _) = self.sift(g, 0);
            r.is_identity()
        }
    }

    /// Adds a generator, returning false if it was already a member.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (residue, _) = self.sift(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.insert(residue);
        true
    }

    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(level.base);
            match &level.transversal[b] {
                None => return (h, i),
                Some((_, uinv)) => h = h.mul(uinv),
            }
        }
        (h, self.levels.len())
    }

    /// Adds a non-member and restores the Schreier–Sims criterion.
    fn insert(&mut self, g: Permutation) {
        let top = self.add_strong(g, 0);
        self.complete(top);
    }

    /// Adds `g` (which fixes the first `from` base points) to every level
    /// `from..=j`, extending the base if `g` fixes all existing base points.
    /// Returns the deepest level touched.
    fn add_strong(&mut self, g: Permutation, from: usize) -> usize {
        let mut j = from;
        while j < self.levels.len() && g.image(self.levels[j].base) == self.levels[j].base {
            j += 1;
        }
        if j == self.levels.len() {
            let b = g.first_moved().expect("identity cannot be a strong generator");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=j {
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild_orbit();
        }
        j
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let ngens = self.levels[lvl].gens.len();
            for &beta in &orbit {
                for gi in 0..ngens {
                    let level = &self.levels[lvl];
                    let s = &level.gens[gi];
                    let img = s.image(beta);
                    let u = &level.transversal[beta].as_ref().unwrap().0;
                    let vinv = &level.transversal[img].as_ref().unwrap().1;
                    let schreier = u.mul(s).mul(vinv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, _) = self.sift(&schreier, lvl + 1);
                    if !residue.is_identity() {
                        let j = self.add_strong(residue, lvl + 1);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Every element, each exactly once (unsorted).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for &beta in &level.orbit {
                let u = &level.transversal[beta].as_ref().unwrap().0;
                for h in &elems {
                    next.push(h.mul(u));
                }
            }
            elems = next;
        }
        elems
    }

    /// Strong generators (level-0 generating set).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..=7usize {
            let cyc: Vec<usize> = (0..n).collect();
            let gens = vec![
                Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(n, &[cyc]).unwrap(),
            ];
            let chain = StabChain::new(n, &gens);
            assert_eq!(chain.order(), (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn membership_and_enumeration() {
        let c4 = StabChain::new(4, &[p("(1 2 3 4)", 4)]);
        assert_eq!(c4.order(), 4);
        assert!(c4.contains(&p("(1 3)(2 4)", 4)));
        assert!(!c4.contains(&p("(1 2)", 4)));
        let a4 = StabChain::new(4, &[p("(1 2 3)", 4), p("(2 3 4)", 4)]);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p("(1 2)", 4)));
        let mut els = a4.elements();
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 12);
        assert!(els.iter().all(|g| a4.contains(g)));
    }

    #[test]
    fn trivial_group() {
        let t = StabChain::new(3, &[p("()", 3)]);
        assert_eq!(t.order(), 1);
        assert_eq!(t.elements().len(), 1);
    }
}
