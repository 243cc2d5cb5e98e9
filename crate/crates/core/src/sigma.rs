//! σ-dependent predicates and subgroups: σ-nilpotency, σ-solubility, complete
//! Hall σ-sets, `F_σ`, `Z_σ` and the σ-nilpotent residual.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::classical;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::lattice::{self, ChiefFactor, NormalSubgroups, SubgroupLattice};
use crate::partition::{BlockId, PrimePartition};
use crate::subgroup::{self, Closure, Subgroup};

pub fn is_sigma_primary(order: usize, sigma: &PrimePartition) -> bool {
    sigma.is_primary_number(order as u64)
}

/// `H/K` is σ-central iff one block holds the primes of `|H/K|` and of
/// `|G : C_G(H/K)|`.
pub fn is_sigma_central(g: &Group, factor: &ChiefFactor, sigma: &PrimePartition) -> bool {
    let index = g.order() / factor.centralizer.order();
    sigma.is_primary_number((factor.factor_order * index) as u64)
}

/// Order of `xN` in `H/N`.
pub(crate) fn coset_order(g: &Group, x: usize, n: &Subgroup) -> usize {
    if n.is_trivial() {
        return g.elt_order(x);
    }
    let mut y = x;
    let mut k = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Whether `H/N` is σ-nilpotent (`N ⊴ H`): for every block in σ(|H/N|) the
/// elements of σ_i-order generate a subgroup of exactly the σ_i-part of
/// `|H/N|`, i.e. `H/N` is the direct product of normal Hall σ_i-subgroups.
pub fn is_sigma_nilpotent_section(g: &Group, h: &Subgroup, n: &Subgroup, sigma: &PrimePartition) -> bool {
    let q = (h.order() / n.order()) as u64;
    let blocks = sigma.sigma_of(q);
    if blocks.len() <= 1 {
        return true;
    }
    let orders: Vec<(usize, usize)> = h
        .iter()
        .filter(|&x| !n.contains(x))
        .map(|x| (x, coset_order(g, x, n)))
        .collect();
    let n_gens = subgroup::generating_set(g, n);
    blocks.into_iter().all(|b| {
        let target = n.order() * sigma.part(q, b) as usize;
        let mut c = Closure::from_subgroup(g, n, &n_gens);
        for &(x, o) in &orders {
            if sigma.sigma_of(o as u64).iter().all(|&ob| ob == b) {
                c.add(x);
                if c.len() > target {
                    return false;
                }
            }
        }
        c.len() == target
    })
}

pub fn is_sigma_nilpotent(g: &Group, h: &Subgroup, sigma: &PrimePartition) -> bool {
    is_sigma_nilpotent_section(g, h, &Subgroup::trivial(g), sigma)
}

pub fn is_sigma_nilpotent_group(g: &Group, sigma: &PrimePartition) -> bool {
    is_sigma_nilpotent(g, &Subgroup::whole(g), sigma)
}

/// The defining test: every chief factor of `G` is σ-central.
pub fn is_sigma_nilpotent_by_chief_factors(g: &Group, sigma: &PrimePartition) -> bool {
    lattice::chief_series(g)
        .factors
        .iter()
        .all(|f| is_sigma_central(g, f, sigma))
}

/// Every chief factor has σ-primary order.
pub fn is_sigma_soluble(g: &Group, normals: &NormalSubgroups, sigma: &PrimePartition) -> bool {
    lattice::chief_series_with(g, normals)
        .factors
        .iter()
        .all(|f| sigma.is_primary_number(f.factor_order as u64))
}

/// One Hall σ_i-subgroup per block of σ(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallSigmaSet {
    pub members: Vec<HallMember>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallMember {
    pub block: BlockId,
    pub subgroup: Subgroup,
    pub normal: bool,
}

impl HallSigmaSet {
    /// Members normal in G first (in block order), then the rest.
    pub fn normal_first(&self) -> (Vec<&HallMember>, Vec<&HallMember>) {
        self.members.iter().partition(|m| m.normal)
    }
}

pub fn complete_hall_sigma_set(
    g: &Group,
    sigma: &PrimePartition,
    lattice: Option<&SubgroupLattice>,
    limits: &Limits,
) -> Result<Option<HallSigmaSet>> {
    let mut members = Vec::new();
    for b in sigma.sigma_of(g.order() as u64) {
        let primes = sigma.primes_in(g.order() as u64, b);
        match classical::hall_subgroup(g, &primes, lattice, limits)? {
            None => return Ok(None),
            Some(h) => {
                let normal = subgroup::is_normal(g, &h);
                members.push(HallMember {
                    block: b,
                    subgroup: h,
                    normal,
                });
            }
        }
    }
    Ok(Some(HallSigmaSet { members }))
}

/// `F_σ(G)`: the join of all σ-nilpotent normal subgroups.
pub fn sigma_fitting(g: &Group, normals: &NormalSubgroups, sigma: &PrimePartition) -> Result<Subgroup> {
    let nil: Vec<&Subgroup> = normals
        .list
        .iter()
        .filter(|n| is_sigma_nilpotent(g, n, sigma))
        .collect();
    let f = normals.join_all(g, nil);
    if !is_sigma_nilpotent(g, &f, sigma) {
        return Err(Error::InternalInconsistency("F_σ(G) is not σ-nilpotent".into()));
    }
    Ok(f)
}

/// `Z_σ(G)` by the ascending series: adjoin every σ-central minimal normal
/// subgroup of the current quotient until nothing changes.
pub fn sigma_hypercentre(g: &Group, normals: &NormalSubgroups, sigma: &PrimePartition) -> Subgroup {
    let mut z = normals.list[0].clone();
    loop {
        let central: Vec<&Subgroup> = normals
            .covers_of(&z)
            .into_iter()
            .map(|i| &normals.list[i])
            .filter(|m| {
                let c = subgroup::section_centralizer_unchecked(g, m, &z);
                let factor = ChiefFactor {
                    lower: z.clone(),
                    upper: (*m).clone(),
                    centralizer: c,
                    factor_order: m.order() / z.order(),
                };
                is_sigma_central(g, &factor, sigma)
            })
            .collect();
        if central.is_empty() {
            return z;
        }
        let next = normals.join_all(g, core::iter::once(&z).chain(central));
        if next == z {
            return z;
        }
        z = next;
    }
}

/// `G^{𝔑_σ}`: the intersection of all normal `N` with `G/N` σ-nilpotent.
pub fn sigma_residual(g: &Group, normals: &NormalSubgroups, sigma: &PrimePartition) -> Result<Subgroup> {
    let whole = Subgroup::whole(g);
    let r = normals
        .list
        .iter()
        .filter(|n| is_sigma_nilpotent_section(g, &whole, n, sigma))
        .fold(whole.clone(), |acc, n| acc.intersection(n));
    if !is_sigma_nilpotent_section(g, &whole, &r, sigma) {
        return Err(Error::InternalInconsistency("G/G^𝔑σ is not σ-nilpotent".into()));
    }
    Ok(r)
}

/// Blocks of σ(G) whose Hall subgroup is normal, for reports.
pub fn normal_blocks(set: &HallSigmaSet) -> BTreeSet<BlockId> {
    set.members.iter().filter(|m| m.normal).map(|m| m.block).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::normal_subgroups;
    use crate::partition::Remainder;

    fn lim() -> Limits {
        Limits::default()
    }

    fn s1() -> PrimePartition {
        PrimePartition::singletons()
    }

    fn pi23() -> PrimePartition {
        PrimePartition::pi(&[2, 3]).unwrap()
    }

    #[test]
    fn nilpotency_examples() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        assert!(!is_sigma_nilpotent_group(&s3, &s1()));
        assert!(is_sigma_nilpotent_group(&s3, &pi23()));
        assert!(!is_sigma_nilpotent_by_chief_factors(&s3, &s1()));
        assert!(is_sigma_nilpotent_by_chief_factors(&s3, &pi23()));
        let ab = Group::direct_product(&Group::cyclic(6), &Group::cyclic(10), &lim()).unwrap();
        assert!(is_sigma_nilpotent_group(&ab, &s1()));
    }

    #[test]
    fn central_factors() {
        let s4 = Group::symmetric(4, &lim()).unwrap();
        let cs = lattice::chief_series(&s4);
        assert_eq!(cs.factors[0].factor_order, 4);
        assert_eq!(cs.factors[0].centralizer.order(), 4);
        assert!(!is_sigma_central(&s4, &cs.factors[0], &s1()));
        let f21 = Group::semidirect_product(
            &Group::cyclic(7),
            &Group::cyclic(3),
            &crate::group::Action {
                generator_maps: alloc::vec![(1, alloc::vec![0, 2, 4, 6, 1, 3, 5])],
            },
            &lim(),
        )
        .unwrap();
        let cs = lattice::chief_series(&f21);
        assert!(!is_sigma_central(&f21, &cs.factors[0], &s1()));
        assert!(is_sigma_central(
            &f21,
            &cs.factors[0],
            &PrimePartition::pi(&[3, 7]).unwrap()
        ));
    }

    #[test]
    fn soluble() {
        let a5 = Group::alternating(5, &lim()).unwrap();
        let ns = normal_subgroups(&a5);
        assert!(!is_sigma_soluble(&a5, &ns, &s1()));
        assert!(is_sigma_soluble(&a5, &ns, &PrimePartition::pi(&[2, 3, 5]).unwrap()));
        let s4 = Group::symmetric(4, &lim()).unwrap();
        assert!(is_sigma_soluble(&s4, &normal_subgroups(&s4), &s1()));
    }

    #[test]
    fn hall_sets() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let h = complete_hall_sigma_set(&s3, &s1(), None, &lim()).unwrap().unwrap();
        let mut orders: Vec<(usize, bool)> = h.members.iter().map(|m| (m.subgroup.order(), m.normal)).collect();
        orders.sort();
        assert_eq!(orders, [(2, false), (3, true)]);
        let a5 = Group::alternating(5, &lim()).unwrap();
        let s35 = PrimePartition::pi(&[3, 5]).unwrap();
        assert_eq!(complete_hall_sigma_set(&a5, &s35, None, &lim()).unwrap(), None);
        let q8 = Group::quaternion(8).unwrap();
        let h = complete_hall_sigma_set(&q8, &s1(), None, &lim()).unwrap().unwrap();
        assert_eq!(h.members.len(), 1);
        assert!(h.members[0].subgroup.is_whole());
    }

    #[test]
    fn fitting_hypercentre_residual() {
        let s4 = Group::symmetric(4, &lim()).unwrap();
        let ns = normal_subgroups(&s4);
        assert_eq!(sigma_fitting(&s4, &ns, &s1()).unwrap().order(), 4);
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let ns3 = normal_subgroups(&s3);
        assert!(sigma_fitting(&s3, &ns3, &pi23()).unwrap().is_whole());
        assert!(sigma_hypercentre(&s3, &ns3, &s1()).is_trivial());
        assert!(sigma_hypercentre(&s3, &ns3, &pi23()).is_whole());
        assert_eq!(sigma_residual(&s3, &ns3, &s1()).unwrap().order(), 3);
        assert!(sigma_residual(&s3, &ns3, &pi23()).unwrap().is_trivial());
        let q8 = Group::quaternion(8).unwrap();
        assert!(sigma_residual(&q8, &normal_subgroups(&q8), &s1()).unwrap().is_trivial());
        let ex = PrimePartition::new(alloc::vec![alloc::vec![2]], Remainder::Singletons).unwrap();
        assert_eq!(sigma_hypercentre(&s4, &ns, &ex).order(), 1);
    }
}
