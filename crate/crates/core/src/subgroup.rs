//! Subgroups as bitsets, and the element-level subgroup operations.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;

/// A subgroup of some parent group, stored as the set of member indices.
///
/// Subgroups do not hold a reference to their parent; every operation takes
/// the parent explicitly. Ordering is by order, then lexicographically by
/// member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_bits(members: BitSet) -> Self {
        let order = members.count();
        Subgroup { members, order }
    }

    /// Checks closure before accepting `elements` as a subgroup of `g`.
    pub fn from_elements(g: &Group, elements: &[usize]) -> Option<Self> {
        if elements.iter().any(|&x| x >= g.order()) {
            return None;
        }
        let s = Subgroup::from_bits(BitSet::from_indices(g.order(), elements.iter().copied()));
        let closed = s.contains(0)
            && s.iter()
                .all(|a| s.contains(g.inv(a)) && s.iter().all(|b| s.contains(g.mul(a, b))));
        closed.then_some(s)
    }

    pub fn trivial(g: &Group) -> Self {
        Self::trivial_of_order(g.order())
    }

    pub(crate) fn trivial_of_order(n: usize) -> Self {
        Subgroup::from_bits(BitSet::from_indices(n, [0]))
    }

    pub fn whole(g: &Group) -> Self {
        Subgroup::from_bits(BitSet::full(g.order()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Size of the parent group.
    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.members.universe()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn iter(&self) -> crate::bitset::Iter<'_> {
        self.members.iter()
    }

    /// Sorted member indices.
    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits(self.members.intersection(&other.members))
    }

    /// `|AB| = |A||B|/|A∩B|`
    pub fn product_size(&self, other: &Subgroup) -> usize {
        self.order * other.order / self.members.intersection_count(&other.members)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}

/// Incremental subgroup closure using Dimino's coset method.
pub(crate) struct Closure<'g> {
    g: &'g Group,
    bits: BitSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub fn new(g: &'g Group) -> Self {
        Closure {
            g,
            bits: BitSet::from_indices(g.order(), [0]),
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    /// Starts from a known subgroup with a known generating set.
    pub fn from_subgroup(g: &'g Group, s: &Subgroup, gens: &[usize]) -> Self {
        Closure {
            g,
            bits: s.members.clone(),
            elems: s.elements(),
            gens: gens.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Adjoins `x`; returns `true` if the subgroup grew.
    pub fn add(&mut self, x: usize) -> bool {
        if self.bits.contains(x) {
            return false;
        }
        let base = self.elems.len();
        self.gens.push(x);
        let mut reps = vec![0usize, x];
        self.add_coset(base, x);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for k in 0..self.gens.len() {
                let y = self.g.mul(r, self.gens[k]);
                if !self.bits.contains(y) {
                    self.add_coset(base, y);
                    reps.push(y);
                }
            }
            i += 1;
        }
        true
    }

    fn add_coset(&mut self, base: usize, y: usize) {
        for j in 0..base {
            let z = self.g.mul(self.elems[j], y);
            self.bits.insert(z);
            self.elems.push(z);
        }
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn finish(self) -> Subgroup {
        Subgroup {
            order: self.elems.len(),
            members: self.bits,
        }
    }

    pub fn finish_with_gens(self) -> (Subgroup, Vec<usize>) {
        let gens = self.gens;
        (
            Subgroup {
                order: self.elems.len(),
                members: self.bits,
            },
            gens,
        )
    }
}

/// The smallest subgroup containing `elements`.
pub fn subgroup_generated(g: &Group, elements: &[usize]) -> Subgroup {
    let mut c = Closure::new(g);
    for &x in elements {
        c.add(x);
    }
    c.finish()
}

/// A small generating set, chosen greedily from high-order elements first.
pub fn generating_set(g: &Group, s: &Subgroup) -> Vec<usize> {
    let mut elems = s.elements();
    elems.sort_by_key(|&x| (core::cmp::Reverse(g.elt_order(x)), x));
    let mut c = Closure::new(g);
    for x in elems {
        c.add(x);
        if c.len() == s.order() {
            break;
        }
    }
    c.finish_with_gens().1
}

/// `⟨A, B⟩` given generating sets of both.
pub fn join_with_gens(g: &Group, a: &Subgroup, a_gens: &[usize], b_gens: &[usize]) -> (Subgroup, Vec<usize>) {
    let mut c = Closure::from_subgroup(g, a, a_gens);
    for &x in b_gens {
        c.add(x);
    }
    c.finish_with_gens()
}

pub fn join(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if b.is_subgroup_of(a) {
        return a.clone();
    }
    if a.is_subgroup_of(b) {
        return b.clone();
    }
    let ga = generating_set(g, a);
    let gb = generating_set(g, b);
    join_with_gens(g, a, &ga, &gb).0
}

/// `A^x = x⁻¹ A x`
pub fn conjugate(g: &Group, a: &Subgroup, x: usize) -> Subgroup {
    Subgroup::from_bits(BitSet::from_indices(g.order(), a.iter().map(|y| g.conj(y, x))))
}

/// `{x ∈ G : A^x = A}`
pub fn normalizer(g: &Group, a: &Subgroup) -> Subgroup {
    let gens = generating_set(g, a);
    normalizer_with_gens(g, a, &gens)
}

pub fn normalizer_with_gens(g: &Group, a: &Subgroup, a_gens: &[usize]) -> Subgroup {
    if a.is_trivial() || a.is_whole() {
        return Subgroup::whole(g);
    }
    Subgroup::from_bits(BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| a_gens.iter().all(|&s| a.contains(g.conj(s, x)))),
    ))
}

/// `{x ∈ G : x commutes with every element of A}`
pub fn centralizer(g: &Group, a: &Subgroup) -> Subgroup {
    let gens = generating_set(g, a);
    Subgroup::from_bits(BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x))),
    ))
}

pub fn center(g: &Group) -> Subgroup {
    Subgroup::from_bits(BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| g.generators().iter().all(|&s| g.mul(x, s) == g.mul(s, x))),
    ))
}

/// `C_G(H/K) = {g : [g, h] ∈ K for all h ∈ H}` for `K ≤ H`, both normal in G.
pub fn centralizer_of_section(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !k.is_subgroup_of(h) {
        return Err(Error::PreconditionViolated("section requires K ≤ H"));
    }
    if !is_normal(g, h) || !is_normal(g, k) {
        return Err(Error::PreconditionViolated("section requires H and K normal in G"));
    }
    Ok(section_centralizer_unchecked(g, h, k))
}

pub(crate) fn section_centralizer_unchecked(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    if h == k {
        return Subgroup::whole(g);
    }
    let gens = generating_set(g, h);
    Subgroup::from_bits(BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| gens.iter().all(|&s| k.contains(g.commutator(x, s)))),
    ))
}

pub fn is_normal(g: &Group, a: &Subgroup) -> bool {
    if a.is_trivial() || a.is_whole() {
        return true;
    }
    let gens = generating_set(g, a);
    gens.iter()
        .all(|&s| g.generators().iter().all(|&x| a.contains(g.conj(s, x))))
}

/// Whether every element of `m` normalizes `a`.
pub fn normalizes(g: &Group, m_gens: &[usize], a: &Subgroup, a_gens: &[usize]) -> bool {
    a_gens.iter().all(|&s| m_gens.iter().all(|&x| a.contains(g.conj(s, x))))
}

/// `A^M`, the normal closure of `A` in `M` (given generators of both).
pub fn normal_closure_in(g: &Group, a_gens: &[usize], m_gens: &[usize]) -> (Subgroup, Vec<usize>) {
    let mut c = Closure::new(g);
    for &s in a_gens {
        c.add(s);
    }
    let mut i = 0;
    while i < c.gens().len() {
        let s = c.gens()[i];
        for &x in m_gens {
            c.add(g.conj(s, x));
        }
        i += 1;
    }
    c.finish_with_gens()
}

pub fn normal_closure(g: &Group, a: &Subgroup) -> Subgroup {
    let gens = generating_set(g, a);
    normal_closure_in(g, &gens, g.generators()).0
}

/// `A_G`: the members of `A` whose whole conjugacy class lies in `A`.
pub fn core(g: &Group, a: &Subgroup) -> Subgroup {
    let mut bits = BitSet::new(g.order());
    for x in a.iter() {
        if g.class(x).all(|y| a.contains(y)) {
            bits.insert(x);
        }
    }
    Subgroup::from_bits(bits)
}

/// `A_M`, the largest subgroup of `A` normal in `M`.
pub fn core_in(g: &Group, a: &Subgroup, m_gens: &[usize]) -> Subgroup {
    let mut cur = a.clone();
    loop {
        let mut next = cur.clone();
        for &x in m_gens {
            next = next.intersection(&conjugate(g, &next, x));
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `(A^G, A_G)`
pub fn normal_closure_core(g: &Group, a: &Subgroup) -> (Subgroup, Subgroup) {
    (normal_closure(g, a), core(g, a))
}

/// Iterated normal closures `M ⊵ A^M ⊵ A^{A^M} ⊵ …`; `A` is subnormal in `M`
/// iff the chain reaches `A`.
pub fn is_subnormal_in(g: &Group, a: &Subgroup, m: &Subgroup) -> bool {
    if !a.is_subgroup_of(m) {
        return false;
    }
    let a_gens = generating_set(g, a);
    let mut cur = m.clone();
    let mut cur_gens = generating_set(g, m);
    loop {
        if cur == *a {
            return true;
        }
        let (next, next_gens) = normal_closure_in(g, &a_gens, &cur_gens);
        if next == cur {
            return false;
        }
        cur = next;
        cur_gens = next_gens;
    }
}

pub fn is_subnormal(g: &Group, a: &Subgroup) -> bool {
    is_subnormal_in(g, a, &Subgroup::whole(g))
}

/// `G'`
pub fn derived_subgroup(g: &Group, m: &Subgroup) -> Subgroup {
    let gens = generating_set(g, m);
    let comms: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    normal_closure_in(g, &comms, &gens).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, Limits};

    fn s3() -> Group {
        Group::symmetric(3, &Limits::default()).unwrap()
    }

    fn involution(g: &Group) -> usize {
        (0..g.order()).find(|&x| g.elt_order(x) == 2).unwrap()
    }

    #[test]
    fn generation() {
        let g = s3();
        assert!(subgroup_generated(&g, &[]).is_trivial());
        let c6 = Group::cyclic(6);
        assert!(subgroup_generated(&c6, &[1]).is_whole());
        let t = involution(&g);
        let c = (0..6).find(|&x| g.elt_order(x) == 3).unwrap();
        assert!(subgroup_generated(&g, &[t, c]).is_whole());
    }

    #[test]
    fn normalizers() {
        let g = s3();
        let c2 = subgroup_generated(&g, &[involution(&g)]);
        assert_eq!(normalizer(&g, &c2), c2);
        let c3 = subgroup_generated(&g, &[(0..6).find(|&x| g.elt_order(x) == 3).unwrap()]);
        assert!(normalizer(&g, &c3).is_whole());
    }

    #[test]
    fn closure_and_core() {
        let g = s3();
        let c2 = subgroup_generated(&g, &[involution(&g)]);
        let (cl, co) = normal_closure_core(&g, &c2);
        assert!(cl.is_whole());
        assert!(co.is_trivial());
        let w = Subgroup::whole(&g);
        assert_eq!(normal_closure_core(&g, &w), (w.clone(), w));
        assert!(!is_subnormal(&g, &c2));
    }

    #[test]
    fn subnormal_in_q8() {
        let q8 = Group::quaternion(8).unwrap();
        let c2 = subgroup_generated(&q8, &[2]);
        assert!(is_subnormal(&q8, &c2));
        let d8 = Group::dihedral(8).unwrap();
        // a reflection: subnormal (through a Klein four-group) but not normal
        let s = subgroup_generated(&d8, &[4]);
        assert!(!is_normal(&d8, &s));
        assert!(is_subnormal(&d8, &s));
    }

    #[test]
    fn section_centralizers() {
        let g = Group::symmetric(4, &Limits::default()).unwrap();
        let v4 = Subgroup::from_bits(crate::bitset::BitSet::from_indices(
            24,
            (0..24).filter(|&x| g.elt_order(x) == 1 || (g.elt_order(x) == 2 && g.class(x).count() == 3)),
        ));
        assert_eq!(v4.order(), 4);
        let one = Subgroup::trivial(&g);
        assert_eq!(centralizer_of_section(&g, &v4, &one).unwrap(), v4);
        assert!(centralizer_of_section(&g, &v4, &v4).unwrap().is_whole());
        let z = center(&g);
        assert!(centralizer_of_section(&g, &z, &one).unwrap().is_whole());
        let t = subgroup_generated(&g, &[involution(&g)]);
        assert!(centralizer_of_section(&g, &t, &one).is_err());
    }
}
