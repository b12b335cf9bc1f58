//! Quotients as permutation actions on right cosets.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Cosets beyond this count are not located by sifting (quadratic).
const SIFT_COSET_LIMIT: usize = 4096;

#[derive(Clone, Debug)]
enum Locator {
    /// Element index in the parent → coset number.
    Table(Vec<u32>),
    /// Coset found by testing `g·r⁻¹ ∈ N` against every representative.
    Sift,
}

/// `G/N` acting on the right cosets `Nr`, with the projection `G → G/N`.
#[derive(Clone, Debug)]
pub struct Quotient<'a> {
    parent: &'a FiniteGroup,
    kernel: FiniteGroup,
    group: FiniteGroup,
    reps: Vec<Permutation>,
    locator: Locator,
}

impl<'a> Quotient<'a> {
    pub fn parent(&self) -> &'a FiniteGroup {
        self.parent
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    /// The quotient as a permutation group of degree `|G:N|`.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Coset representatives; coset 0 is `N` itself.
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn coset_of(&self, g: &Permutation) -> usize {
        match &self.locator {
            Locator::Table(t) => t[self.parent.idx(g)] as usize,
            Locator::Sift => self
                .reps
                .iter()
                .position(|r| self.kernel.has(&g.mul(&r.inverse())))
                .expect("element of the parent lies in some coset"),
        }
    }

    /// Image of `g ∈ G` in `G/N`.
    pub fn project(&self, g: &Permutation) -> Permutation {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.mul(g)) as u32)
            .collect();
        Permutation::from_images_unchecked(images)
    }

    pub fn checked_project(&self, g: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(g)? {
            return Err(Error::NotMember(g.to_string()));
        }
        Ok(self.project(g))
    }

    /// A preimage of a quotient element: the representative of `N·q`.
    pub fn lift(&self, q: &Permutation) -> Permutation {
        self.reps[q.image(0)].clone()
    }

    /// Preimage of a subgroup of the quotient: `⟨N, lifts⟩`.
    pub fn preimage(&self, sub: &FiniteGroup) -> FiniteGroup {
        let mut gens: Vec<Permutation> = self.kernel.generators().to_vec();
        gens.extend(sub.generators().iter().map(|q| self.lift(q)));
        self.parent.sub(gens)
    }
}

/// `G/N` by the coset action. `N` must be normal in `G`.
pub fn quotient_by_normal<'a>(g: &'a FiniteGroup, n: &FiniteGroup) -> Result<Quotient<'a>> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotMember("normal subgroup generator".into()));
    }
    if !n.is_normalized_by(g.generators()) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    if index > g.cap() as u128 {
        return Err(Error::TooLarge {
            order: index,
            cap: g.cap(),
        });
    }
    let kernel = n.clone();
    let (reps, locator) = if g.order() <= g.cap() as u128 {
        table_cosets(g, &kernel)?
    } else if (index as usize) <= SIFT_COSET_LIMIT {
        (sift_cosets(g, &kernel), Locator::Sift)
    } else {
        return Err(Error::TooLarge {
            order: g.order(),
            cap: g.cap(),
        });
    };
    let mut q = Quotient {
        parent: g,
        kernel,
        group: FiniteGroup::trivial(reps.len()),
        reps,
        locator,
    };
    let gens: Vec<Permutation> = g.generators().iter().map(|s| q.project(s)).collect();
    q.group = FiniteGroup::from_parts(q.reps.len(), gens).with_cap(g.cap());
    Ok(q)
}

fn table_cosets(g: &FiniteGroup, n: &FiniteGroup) -> Result<(Vec<Permutation>, Locator)> {
    let elements = g.elements()?;
    let n_elements = n.chain().elements();
    let mut table = vec![u32::MAX; elements.len()];
    let mut reps = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        if table[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        for m in &n_elements {
            table[g.idx(&m.mul(x))] = c;
        }
        reps.push(x.clone());
    }
    Ok((reps, Locator::Table(table)))
}

fn sift_cosets(g: &FiniteGroup, n: &FiniteGroup) -> Vec<Permutation> {
    let mut reps = vec![g.identity()];
    let mut inverses = vec![g.identity()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for s in g.generators() {
            let x = r.mul(s);
            if !inverses.iter().any(|ri| n.has(&x.mul(ri))) {
                inverses.push(x.inverse());
                reps.push(x);
            }
        }
    }
    reps
}

/// Either `G/N`, or `G` itself when `N` is trivial (avoids a regular
/// representation of `G`).
pub enum QuotientOrSelf<'a> {
    Quotient(Quotient<'a>),
    Same(&'a FiniteGroup),
}

impl<'a> QuotientOrSelf<'a> {
    pub fn new(g: &'a FiniteGroup, n: &FiniteGroup) -> Result<Self> {
        if n.is_trivial() {
            Ok(QuotientOrSelf::Same(g))
        } else {
            Ok(QuotientOrSelf::Quotient(quotient_by_normal(g, n)?))
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        match self {
            QuotientOrSelf::Quotient(q) => q.group(),
            QuotientOrSelf::Same(g) => g,
        }
    }

    pub fn project(&self, x: &Permutation) -> Permutation {
        match self {
            QuotientOrSelf::Quotient(q) => q.project(x),
            QuotientOrSelf::Same(_) => x.clone(),
        }
    }

    pub fn preimage(&self, sub: &FiniteGroup) -> FiniteGroup {
        match self {
            QuotientOrSelf::Quotient(q) => q.preimage(sub),
            QuotientOrSelf::Same(g) => g.sub(sub.generators().to_vec()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn grp(gens: &[&str], n: usize) -> FiniteGroup {
        FiniteGroup::new(gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    #[test]
    fn s4_mod_v4() {
        let s4 = grp(&["(1 2)", "(1 2 3 4)"], 4);
        let v4 = grp(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        let q = quotient_by_normal(&s4, &v4).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.group().is_abelian());
        assert_eq!(q.index(), 6);
        for x in s4.elements().unwrap() {
            let img = q.project(x);
            assert_eq!(img.is_identity(), v4.contains(x).unwrap());
            assert!(q.group().contains(&img).unwrap());
            assert_eq!(q.project(&q.lift(&img)), img);
            for y in s4.elements().unwrap() {
                assert_eq!(q.project(&x.mul(y)), img.mul(&q.project(y)));
            }
        }
    }

    #[test]
    fn whole_and_not_normal() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let q = quotient_by_normal(&s3, &s3).unwrap();
        assert!(q.group().is_trivial());
        let c2 = grp(&["(1 2)"], 3);
        assert_eq!(quotient_by_normal(&s3, &c2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn sift_path_matches_table_path() {
        let s5 = grp(&["(1 2)", "(1 2 3 4 5)"], 5);
        let a5 = grp(&["(1 2 3)", "(1 2 3 4 5)"], 5);
        let big = s5.clone().with_cap(50);
        let q_sift = quotient_by_normal(&big, &a5).unwrap();
        let q_tab = quotient_by_normal(&s5, &a5).unwrap();
        assert_eq!(q_sift.group().order(), 2);
        assert_eq!(q_tab.group().order(), 2);
        let t = p("(1 2)", 5);
        assert!(!q_sift.project(&t).is_identity());
        assert!(q_sift.project(&t.mul(&t)).is_identity());
    }
}
