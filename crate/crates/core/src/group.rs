//! Generator-defined permutation groups with lazily cached structure.

use std::cell::OnceCell;
use std::ops::Deref;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::arith::{is_power_of, is_prime_power, prime_divisors};
use crate::bsgs::StabChain;
use crate::error::{Error, Result};
use crate::perm::{check_degrees, commutator_unchecked, Permutation};

/// Default bound on the number of elements any operation will materialise.
pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;

/// Element set of an enumerated group, indexed by position in
/// [`FiniteGroup::elements`].
pub type ElementSet = FixedBitSet;

#[derive(Clone, Debug)]
struct Enumeration {
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
}

/// One conjugacy class. `members` are indices into the group's element list,
/// ascending; the representative is the least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<u32>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A commutator `[x, y]` together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub x: Permutation,
    pub y: Permutation,
    pub commutator: Permutation,
    pub order: u64,
}

/// A permutation group given by generators.
///
/// Order, stabiliser chain, element list, element orders and conjugacy
/// classes are computed on first use and cached, so a value should be used
/// from one thread at a time (it is `Send` but not `Sync`).
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    chain: OnceCell<StabChain>,
    enumeration: OnceCell<Enumeration>,
    orders: OnceCell<Vec<u64>>,
    classes: OnceCell<Vec<ConjugacyClass>>,
}

impl FiniteGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        for g in &generators {
            check_degrees(first, g)?;
        }
        Ok(Self::from_parts(first.degree(), generators))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, vec![Permutation::identity(degree)])
    }

    /// Group generated by `generators`, all of degree `degree`; an empty list
    /// gives the trivial group.
    pub fn generated(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if generators.is_empty() {
            return Ok(Self::trivial(degree));
        }
        let g = Self::new(generators)?;
        if g.degree != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree,
            });
        }
        Ok(g)
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>) -> Self {
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        FiniteGroup {
            degree,
            generators,
            cap: DEFAULT_ENUMERATION_CAP,
            chain: OnceCell::new(),
            enumeration: OnceCell::new(),
            orders: OnceCell::new(),
            classes: OnceCell::new(),
        }
    }

    fn from_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain, cap: usize) -> Self {
        let g = Self::from_parts(degree, generators).with_cap(cap);
        let _ = g.chain.set(chain);
        g
    }

    /// Copy sharing generators and stabiliser chain but no enumeration.
    pub fn shallow(&self) -> FiniteGroup {
        let g = Self::from_parts(self.degree, self.generators.clone()).with_cap(self.cap);
        if let Some(c) = self.chain.get() {
            let _ = g.chain.set(c.clone());
        }
        g
    }

    /// Sets the enumeration cap. Cached data is kept.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    /// Exact order, from the stabiliser chain.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_divisors(self.order())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(self.chain().contains(g))
    }

    pub(crate) fn has(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Generators with redundant ones dropped (each one enlarges the group
    /// generated by its predecessors).
    pub fn reduced_generators(&self) -> Vec<Permutation> {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut out = Vec::new();
        for g in &self.generators {
            if chain.add_generator(g) {
                out.push(g.clone());
            }
            if chain.order() == self.order() {
                break;
            }
        }
        if out.is_empty() {
            out.push(self.identity());
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.reduced_generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Same underlying set of permutations.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// True iff `self` is normalised by every generator of `by`.
    pub fn is_normalized_by(&self, by: &[Permutation]) -> bool {
        let gens = self.reduced_generators();
        by.iter()
            .all(|s| gens.iter().all(|n| self.has(&n.conjugate(s))))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.is_subgroup_of(g) && self.is_normalized_by(g.generators())
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order(), p)
    }

    /// The prime `p` if this is a nontrivial `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        match self.prime_divisors().as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    fn check_cap(&self) -> Result<()> {
        let order = self.order();
        if order > self.cap as u128 {
            return Err(Error::TooLarge {
                order,
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        if let Some(e) = self.enumeration.get() {
            return Ok(e);
        }
        self.check_cap()?;
        let mut elements = self.chain().elements();
        elements.sort_unstable();
        let mut index = FxHashMap::default();
        index.reserve(elements.len());
        for (i, g) in elements.iter().enumerate() {
            index.insert(g.clone(), i as u32);
        }
        let _ = self.enumeration.set(Enumeration { elements, index });
        Ok(self.enumeration.get().unwrap())
    }

    /// All elements, sorted lexicographically by image table.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.enumeration()?.elements)
    }

    /// Position of `g` in [`Self::elements`], `None` if not a member.
    pub fn index_of(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self.enumeration()?.index.get(g).map(|&i| i as usize))
    }

    pub(crate) fn idx(&self, g: &Permutation) -> usize {
        *self
            .enumeration
            .get()
            .expect("enumerate before indexing")
            .index
            .get(g)
            .expect("element of the group") as usize
    }

    pub(crate) fn element(&self, i: usize) -> &Permutation {
        &self.enumeration.get().expect("enumerated").elements[i]
    }

    pub fn element_orders(&self) -> Result<&[u64]> {
        if let Some(o) = self.orders.get() {
            return Ok(o);
        }
        let orders = self.elements()?.iter().map(|g| g.order()).collect();
        let _ = self.orders.set(orders);
        Ok(self.orders.get().unwrap())
    }

    /// Conjugacy classes sorted by `(size, representative)`.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass]> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let elements = self.elements()?;
        let gens = self.reduced_generators();
        let n = elements.len();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start as u32];
            let mut head = 0;
            while head < members.len() {
                let x = &elements[members[head] as usize];
                head += 1;
                for s in &gens {
                    let j = self.idx(&x.conjugate(s));
                    if !assigned[j] {
                        assigned[j] = true;
                        members.push(j as u32);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: elements[start].clone(),
                members,
            });
        }
        classes.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| a.representative.cmp(&b.representative))
        });
        let _ = self.classes.set(classes);
        Ok(self.classes.get().unwrap())
    }

    /// The set `{ [x,y] : x, y ∈ G }` in element order.
    ///
    /// Since `[x,y] = x⁻¹·x^y`, every commutator is conjugate to some
    /// `r⁻¹·c` with `r` a class representative and `c` in its class; those
    /// products are collected and closed under conjugation.
    pub fn commutator_set(&self) -> Result<Vec<Permutation>> {
        let set = self.commutator_index_set()?;
        Ok(set.ones().map(|i| self.element(i).clone()).collect())
    }

    pub(crate) fn commutator_index_set(&self) -> Result<ElementSet> {
        let classes = self.conjugacy_classes()?;
        let elements = self.elements()?;
        let mut set = FixedBitSet::with_capacity(elements.len());
        let mut queue = Vec::new();
        for class in classes {
            let rinv = class.representative.inverse();
            for &c in &class.members {
                let k = self.idx(&rinv.mul(&elements[c as usize]));
                if !set.put(k) {
                    queue.push(k);
                }
            }
        }
        let gens = self.reduced_generators();
        while let Some(k) = queue.pop() {
            for s in &gens {
                let j = self.idx(&elements[k].conjugate(s));
                if !set.put(j) {
                    queue.push(j);
                }
            }
        }
        Ok(set)
    }

    /// A commutator whose order is not a prime power, if one exists.
    ///
    /// Order is a class function, so the products `r⁻¹·c` need no closure.
    pub fn cppo_witness(&self) -> Result<Option<CommutatorWitness>> {
        let classes = self.conjugacy_classes()?;
        let elements = self.elements()?;
        for class in classes {
            let rinv = class.representative.inverse();
            for &c in &class.members {
                let comm = rinv.mul(&elements[c as usize]);
                let order = comm.order();
                if !is_prime_power(order) {
                    let r = &class.representative;
                    let target = &elements[c as usize];
                    let y = elements
                        .iter()
                        .find(|g| &r.conjugate(g) == target)
                        .expect("class member is a conjugate")
                        .clone();
                    return Ok(Some(CommutatorWitness {
                        x: r.clone(),
                        commutator: commutator_unchecked(r, &y),
                        y,
                        order,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_cppo(&self) -> Result<bool> {
        Ok(self.cppo_witness()?.is_none())
    }

    /// An element whose order is not a prime power, if one exists.
    pub fn eppo_witness(&self) -> Result<Option<(Permutation, u64)>> {
        for class in self.conjugacy_classes()? {
            let o = class.representative.order();
            if !is_prime_power(o) {
                return Ok(Some((class.representative.clone(), o)));
            }
        }
        Ok(None)
    }

    pub fn is_eppo(&self) -> Result<bool> {
        Ok(self.eppo_witness()?.is_none())
    }

    /// Subgroup generated by the given elements of `self` (not checked).
    pub(crate) fn sub(&self, gens: Vec<Permutation>) -> FiniteGroup {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut chain = StabChain::new(self.degree, &[]);
        let mut kept = Vec::new();
        for g in gens {
            if chain.add_generator(&g) {
                kept.push(g);
            }
        }
        FiniteGroup::from_chain(self.degree, kept, chain, self.cap)
    }

    /// Subgroup on an element set of the enumerated group, with generators
    /// picked greedily in element order.
    pub(crate) fn sub_from_set(&self, set: &ElementSet) -> FiniteGroup {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut kept = Vec::new();
        let target = set.count_ones(..) as u128;
        for i in set.ones() {
            if chain.order() == target {
                break;
            }
            let g = self.element(i);
            if chain.add_generator(g) {
                kept.push(g.clone());
            }
        }
        FiniteGroup::from_chain(self.degree, kept, chain, self.cap)
    }

    fn check_members(&self, s: &[Permutation]) -> Result<()> {
        for g in s {
            if !self.contains(g)? {
                return Err(Error::NotMember(g.to_string()));
            }
        }
        Ok(())
    }

    /// Smallest subgroup containing `s` and normalised by `self`.
    pub fn normal_closure(&self, s: &[Permutation]) -> Result<Subgroup<'_>> {
        self.check_members(s)?;
        Ok(Subgroup::new(self, self.normal_closure_unchecked(s)))
    }

    pub(crate) fn normal_closure_unchecked(&self, s: &[Permutation]) -> FiniteGroup {
        let by = self.reduced_generators();
        normal_closure_under(self.degree, s, &by).with_cap(self.cap)
    }

    /// `G′`, the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let gens = self.reduced_generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = commutator_unchecked(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        Subgroup::new(self, self.normal_closure_unchecked(&comms))
    }

    /// `C_G(S)` by filtering the element list.
    pub fn centralizer(&self, s: &[Permutation]) -> Result<Subgroup<'_>> {
        for g in s {
            check_degrees(&self.identity(), g)?;
        }
        let elements = self.elements()?;
        let mut set = FixedBitSet::with_capacity(elements.len());
        for (i, g) in elements.iter().enumerate() {
            if s.iter().all(|x| x.mul(g) == g.mul(x)) {
                set.insert(i);
            }
        }
        Ok(Subgroup::new(self, self.sub_from_set(&set)))
    }

    pub fn center(&self) -> Result<Subgroup<'_>> {
        let gens = self.reduced_generators();
        self.centralizer(&gens)
    }

    /// `N_G(H)` by filtering the element list.
    pub fn normalizer(&self, h: &FiniteGroup) -> Result<Subgroup<'_>> {
        let hg = h.reduced_generators();
        let elements = self.elements()?;
        let mut set = FixedBitSet::with_capacity(elements.len());
        for (i, g) in elements.iter().enumerate() {
            if hg.iter().all(|x| h.has(&x.conjugate(g))) {
                set.insert(i);
            }
        }
        Ok(Subgroup::new(self, self.sub_from_set(&set)))
    }

    /// `[A, B]` for subgroups generated inside a common group: the normal
    /// closure in `⟨A, B⟩` of commutators of generators.
    pub fn commutator_subgroup(&self, a: &FiniteGroup, b: &FiniteGroup) -> Subgroup<'_> {
        let ag = a.reduced_generators();
        let bg = b.reduced_generators();
        let mut comms = Vec::new();
        for x in &ag {
            for y in &bg {
                let c = commutator_unchecked(x, y);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let mut by = ag;
        by.extend(bg);
        Subgroup::new(self, normal_closure_under(self.degree, &comms, &by).with_cap(self.cap))
    }

    /// Exponent: lcm of the element orders.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self
            .conjugacy_classes()?
            .iter()
            .map(|c| c.representative.order())
            .fold(1, crate::arith::lcm))
    }

    /// Multiset of class-representative orders, ascending.
    pub fn class_orders(&self) -> Result<Vec<u64>> {
        let mut v: Vec<u64> = self
            .conjugacy_classes()?
            .iter()
            .map(|c| c.representative.order())
            .collect();
        v.sort_unstable();
        Ok(v)
    }
}

/// Smallest group containing `s` and closed under conjugation by `by`.
pub(crate) fn normal_closure_under(degree: usize, s: &[Permutation], by: &[Permutation]) -> FiniteGroup {
    let mut chain = StabChain::new(degree, &[]);
    let mut gens = Vec::new();
    let mut queue = Vec::new();
    for x in s {
        if !x.is_identity() && chain.add_generator(x) {
            gens.push(x.clone());
            queue.push(x.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for g in by {
            let y = x.conjugate(g);
            if chain.add_generator(&y) {
                gens.push(y.clone());
                queue.push(y);
            }
        }
    }
    FiniteGroup::from_chain(degree, gens, chain, DEFAULT_ENUMERATION_CAP)
}

/// A subgroup together with the group it was computed in.
#[derive(Clone, Debug)]
pub struct Subgroup<'a> {
    parent: &'a FiniteGroup,
    group: FiniteGroup,
}

impl<'a> Subgroup<'a> {
    pub(crate) fn new(parent: &'a FiniteGroup, group: FiniteGroup) -> Self {
        Subgroup { parent, group }
    }

    /// Wraps `group` after checking that its generators lie in `parent`.
    pub fn checked(parent: &'a FiniteGroup, group: FiniteGroup) -> Result<Self> {
        for g in group.generators() {
            if !parent.contains(g)? {
                return Err(Error::NotMember(g.to_string()));
            }
        }
        Ok(Subgroup { parent, group })
    }

    pub fn parent(&self) -> &'a FiniteGroup {
        self.parent
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn is_normal(&self) -> bool {
        self.group.is_normalized_by(self.parent.generators())
    }
}

impl Deref for Subgroup<'_> {
    type Target = FiniteGroup;
    fn deref(&self) -> &FiniteGroup {
        &self.group
    }
}
