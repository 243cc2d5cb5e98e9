//! Subgroup and normal-subgroup lattices, maximal subgroups and chief series.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::{self, Closure, Subgroup};

/// Every subgroup of a group, sorted by order and then lexicographically.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    gens: Vec<Vec<usize>>,
    normal: Vec<bool>,
    index: BTreeMap<Subgroup, usize>,
    /// Joins computed during enumeration.
    pub generated_count: usize,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn gens(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Subgroup)> {
        self.subgroups.iter().enumerate()
    }

    /// Indices of members strictly contained in member `i`.
    pub fn proper_subgroups_of(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let s = &self.subgroups[i];
        (0..i).filter(move |&j| self.subgroups[j].order() < s.order() && self.subgroups[j].is_subgroup_of(s))
    }

    /// Indices of members containing member `i` (including `i`).
    pub fn supergroups_of(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let s = &self.subgroups[i];
        (i..self.subgroups.len()).filter(move |&j| s.is_subgroup_of(&self.subgroups[j]))
    }

    /// Maximal members of the proper-subgroup poset of member `i`.
    pub fn maximal_subgroups_of(&self, i: usize) -> Vec<usize> {
        let below: Vec<usize> = self.proper_subgroups_of(i).collect();
        below
            .iter()
            .copied()
            .filter(|&j| {
                !below.iter().any(|&k| {
                    k != j
                        && self.subgroups[k].order() > self.subgroups[j].order()
                        && self.subgroups[j].is_subgroup_of(&self.subgroups[k])
                })
            })
            .collect()
    }
}

/// Enumerates every subgroup by seeding with cyclic subgroups of prime-power
/// order and closing under joins with those seeds.
pub fn all_subgroups(g: &Group, max_joins: usize) -> Result<SubgroupLattice> {
    all_subgroups_capped(g, max_joins, usize::MAX)
}

/// [`all_subgroups`] that also fails once more than `max_subgroups` members
/// have been found.
pub fn all_subgroups_capped(g: &Group, max_joins: usize, max_subgroups: usize) -> Result<SubgroupLattice> {
    // cyclic subgroups of prime-power order generate everything
    let mut seeds: BTreeMap<Subgroup, usize> = BTreeMap::new();
    for x in 1..g.order() {
        if crate::arith::is_prime_power(g.elt_order(x) as u64) {
            let c = subgroup::subgroup_generated(g, &[x]);
            seeds.entry(c).or_insert(x);
        }
    }
    let seeds: Vec<usize> = seeds.into_values().collect();

    let mut found: BTreeMap<Subgroup, Vec<usize>> = BTreeMap::new();
    found.insert(Subgroup::trivial(g), Vec::new());
    let mut queue: Vec<(Subgroup, Vec<usize>)> = alloc::vec![(Subgroup::trivial(g), Vec::new())];
    let mut joins = 0usize;
    let mut i = 0;
    while i < queue.len() {
        let (h, h_gens) = queue[i].clone();
        i += 1;
        for &x in &seeds {
            if h.contains(x) {
                continue;
            }
            joins += 1;
            if joins > max_joins {
                return Err(Error::CapExceeded {
                    what: "subgroup joins",
                    limit: max_joins,
                    reached: found.len(),
                });
            }
            let mut cl = Closure::from_subgroup(g, &h, &h_gens);
            cl.add(x);
            let (k, k_gens) = cl.finish_with_gens();
            if !found.contains_key(&k) {
                found.insert(k.clone(), k_gens.clone());
                queue.push((k, k_gens));
                if found.len() > max_subgroups {
                    return Err(Error::CapExceeded {
                        what: "subgroups",
                        limit: max_subgroups,
                        reached: found.len(),
                    });
                }
            }
        }
    }
    let mut subgroups = Vec::with_capacity(found.len());
    let mut gens = Vec::with_capacity(found.len());
    for (s, gs) in found {
        subgroups.push(s);
        gens.push(gs);
    }
    let normal = subgroups
        .iter()
        .zip(&gens)
        .map(|(s, gs)| s.is_trivial() || s.is_whole() || subgroup::normalizes(g, g.generators(), s, gs))
        .collect();
    let index = subgroups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    Ok(SubgroupLattice {
        subgroups,
        gens,
        normal,
        index,
        generated_count: joins,
    })
}

/// The normal subgroups of a group, sorted like lattice members.
#[derive(Debug, Clone)]
pub struct NormalSubgroups {
    pub list: Vec<Subgroup>,
    gens: Vec<Vec<usize>>,
    /// Minimal among nontrivial normal subgroups.
    pub minimal: Vec<bool>,
    /// Maximal among proper normal subgroups.
    pub maximal: Vec<bool>,
}

impl NormalSubgroups {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn gens(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.list.binary_search(s).ok()
    }

    /// Normal subgroups `M > K` with no normal subgroup strictly between.
    pub fn covers_of(&self, k: &Subgroup) -> Vec<usize> {
        let above: Vec<usize> = (0..self.list.len())
            .filter(|&i| self.list[i].order() > k.order() && k.is_subgroup_of(&self.list[i]))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&i| {
                !above
                    .iter()
                    .any(|&j| self.list[j].order() < self.list[i].order() && self.list[j].is_subgroup_of(&self.list[i]))
            })
            .collect()
    }

    /// Join of the listed members (a product of normal subgroups).
    pub fn join_all<'a>(&self, g: &Group, members: impl IntoIterator<Item = &'a Subgroup>) -> Subgroup {
        let mut c = Closure::new(g);
        for m in members {
            if let Some(i) = self.position(m) {
                for &x in &self.gens[i] {
                    c.add(x);
                }
            } else {
                for x in subgroup::generating_set(g, m) {
                    c.add(x);
                }
            }
        }
        c.finish()
    }
}

/// All normal subgroups, as joins of normal closures of single elements.
pub fn normal_subgroups(g: &Group) -> NormalSubgroups {
    // normal closure of each conjugacy class
    let mut seeds: BTreeMap<Subgroup, Vec<usize>> = BTreeMap::new();
    for class in g.classes() {
        let reps: Vec<usize> = class.collect();
        let x = reps[0];
        if x == 0 {
            continue;
        }
        let (n, ngens) = subgroup::normal_closure_in(g, &[x], g.generators());
        seeds.entry(n).or_insert(ngens);
    }
    let seeds: Vec<(Subgroup, Vec<usize>)> = seeds.into_iter().collect();
    let mut found: BTreeMap<Subgroup, Vec<usize>> = BTreeMap::new();
    found.insert(Subgroup::trivial(g), Vec::new());
    let mut queue = alloc::vec![(Subgroup::trivial(g), Vec::<usize>::new())];
    let mut i = 0;
    while i < queue.len() {
        let (h, h_gens) = queue[i].clone();
        i += 1;
        for (s, s_gens) in &seeds {
            if s.is_subgroup_of(&h) {
                continue;
            }
            let (k, k_gens) = subgroup::join_with_gens(g, &h, &h_gens, s_gens);
            if !found.contains_key(&k) {
                found.insert(k.clone(), k_gens.clone());
                queue.push((k, k_gens));
            }
        }
    }
    let (list, gens): (Vec<Subgroup>, Vec<Vec<usize>>) = found.into_iter().unzip();
    let n = list.len();
    let between = |lo: &Subgroup, hi: &Subgroup| {
        list.iter()
            .any(|m| m.order() > lo.order() && m.order() < hi.order() && lo.is_subgroup_of(m) && m.is_subgroup_of(hi))
    };
    let one = &list[0];
    let top = &list[n - 1];
    let minimal = list.iter().map(|m| !m.is_trivial() && !between(one, m)).collect();
    let maximal = list.iter().map(|m| !m.is_whole() && !between(m, top)).collect();
    NormalSubgroups {
        list,
        gens,
        minimal,
        maximal,
    }
}

pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<Subgroup> {
    lattice
        .maximal_subgroups_of(lattice.top())
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect()
}

/// A chief factor `H/K` with its centralizer `C_G(H/K)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefFactor {
    pub lower: Subgroup,
    pub upper: Subgroup,
    pub centralizer: Subgroup,
    pub factor_order: usize,
}

#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub group_order: usize,
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.factor_order).collect()
    }
}

/// Ascending chief series through successive minimal normal subgroups of the
/// quotients; ties go to the lexicographically smallest member list.
pub fn chief_series(g: &Group) -> ChiefSeries {
    chief_series_with(g, &normal_subgroups(g))
}

pub fn chief_series_with(g: &Group, normals: &NormalSubgroups) -> ChiefSeries {
    let mut factors = Vec::new();
    let mut cur = normals.list[0].clone();
    while !cur.is_whole() {
        let covers = normals.covers_of(&cur);
        let next = covers
            .iter()
            .map(|&i| &normals.list[i])
            .min_by(|a, b| a.members().cmp(b.members()))
            .expect("a proper normal subgroup has a cover")
            .clone();
        let centralizer = subgroup::section_centralizer_unchecked(g, &next, &cur);
        factors.push(ChiefFactor {
            factor_order: next.order() / cur.order(),
            lower: cur,
            upper: next.clone(),
            centralizer,
        });
        cur = next;
    }
    ChiefSeries {
        group_order: g.order(),
        factors,
    }
}
