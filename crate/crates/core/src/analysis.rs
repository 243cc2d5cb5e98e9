//! A group together with a prime partition and its subgroup lattice, plus
//! lazily filled per-lattice-member caches (normalizers, σ-nilpotency,
//! subnormality tables, residuals). Everything σ-dependent that needs the
//! whole lattice lives here.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::bitset::BitSet;
use crate::classical;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::lattice::{self, NormalSubgroups, SubgroupLattice};
use crate::partition::PrimePartition;
use crate::sigma::{self, HallSigmaSet};
use crate::subgroup::{self, Subgroup};

/// Which step is allowed in a subnormal chain `A_{i-1} ≤ A_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SubnormalVariant {
    /// `A_{i-1} ⊴ A_i`.
    #[default]
    Classic,
    /// `A_{i-1} ⊴ A_i` or `A_i / core_{A_i}(A_{i-1})` is σ-primary.
    Sigma,
}

impl SubnormalVariant {
    pub fn other(self) -> Self {
        match self {
            SubnormalVariant::Classic => SubnormalVariant::Sigma,
            SubnormalVariant::Sigma => SubnormalVariant::Classic,
        }
    }
}

/// For each lattice member `M`, the set of lattice members subnormal in `M`
/// (for one variant), filled on demand.
#[derive(Debug)]
struct SubnormalTable {
    sets: Vec<OnceCell<BitSet>>,
}

impl SubnormalTable {
    fn new(n: usize) -> Self {
        SubnormalTable {
            sets: (0..n).map(|_| OnceCell::new()).collect(),
        }
    }
}

pub struct Analysis<'g> {
    group: &'g Group,
    sigma: PrimePartition,
    limits: Limits,
    lattice: Arc<SubgroupLattice>,
    normals: OnceCell<NormalSubgroups>,
    sigma_nilpotent: OnceCell<Vec<bool>>,
    normalizers: OnceCell<Vec<usize>>,
    classic: SubnormalTable,
    sigma_sub: SubnormalTable,
    residuals: Vec<OnceCell<usize>>,
    fitting: OnceCell<Subgroup>,
    hypercentre: OnceCell<Subgroup>,
    residual: OnceCell<Subgroup>,
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g Group, sigma: PrimePartition, limits: Limits) -> Result<Self> {
        limits.check_order(group.order())?;
        let lattice = Arc::new(lattice::all_subgroups_capped(
            group,
            limits.max_joins,
            limits.max_subgroups,
        )?);
        Ok(Self::with_lattice(group, sigma, limits, lattice))
    }

    /// Reuses an already enumerated lattice of `group` (e.g. across σ-modes).
    pub fn with_lattice(
        group: &'g Group,
        sigma: PrimePartition,
        limits: Limits,
        lattice: Arc<SubgroupLattice>,
    ) -> Self {
        let n = lattice.len();
        Analysis {
            group,
            sigma,
            limits,
            lattice,
            normals: OnceCell::new(),
            sigma_nilpotent: OnceCell::new(),
            normalizers: OnceCell::new(),
            classic: SubnormalTable::new(n),
            sigma_sub: SubnormalTable::new(n),
            residuals: (0..n).map(|_| OnceCell::new()).collect(),
            fitting: OnceCell::new(),
            hypercentre: OnceCell::new(),
            residual: OnceCell::new(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn sigma(&self) -> &PrimePartition {
        &self.sigma
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn shared_lattice(&self) -> Arc<SubgroupLattice> {
        self.lattice.clone()
    }

    pub fn normals(&self) -> &NormalSubgroups {
        self.normals.get_or_init(|| lattice::normal_subgroups(self.group))
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        self.lattice.get(i)
    }

    /// Lattice index of `s`; every subgroup of the group is in the lattice.
    pub fn index(&self, s: &Subgroup) -> usize {
        self.lattice.index_of(s).expect("subgroup missing from lattice")
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn is_sigma_primary(&self, i: usize) -> bool {
        sigma::is_sigma_primary(self.subgroup(i).order(), &self.sigma)
    }

    pub fn is_sigma_nilpotent(&self, i: usize) -> bool {
        self.sigma_nilpotent.get_or_init(|| {
            self.lattice
                .subgroups()
                .iter()
                .map(|s| sigma::is_sigma_nilpotent(self.group, s, &self.sigma))
                .collect()
        })[i]
    }

    pub fn is_group_sigma_nilpotent(&self) -> bool {
        self.is_sigma_nilpotent(self.top())
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.lattice.is_normal(i)
    }

    /// Lattice index of `N_G(A)` for member `i`.
    pub fn normalizer(&self, i: usize) -> usize {
        self.normalizers.get_or_init(|| {
            (0..self.lattice.len())
                .map(|j| {
                    if self.lattice.is_normal(j) {
                        return self.top();
                    }
                    let n = subgroup::normalizer_with_gens(self.group, self.subgroup(j), self.lattice.gens(j));
                    self.index(&n)
                })
                .collect()
        })[i]
    }

    fn step(&self, lower: usize, upper: usize, variant: SubnormalVariant) -> bool {
        let (a, m) = (self.subgroup(lower), self.subgroup(upper));
        if subgroup::normalizes(self.group, self.lattice.gens(upper), a, self.lattice.gens(lower)) {
            return true;
        }
        if variant == SubnormalVariant::Classic {
            return false;
        }
        // |M : core| is a multiple of |M : A|
        if !self.sigma.is_primary_number((m.order() / a.order()) as u64) {
            return false;
        }
        let core = subgroup::core_in(self.group, a, self.lattice.gens(upper));
        self.sigma.is_primary_number((m.order() / core.order()) as u64)
    }

    /// Lattice members (as a bitset of indices) that are subnormal in member
    /// `m` for the given variant, by the recursion
    /// `S(M) = {M} ∪ ⋃ { S(M') : M' < M, step(M', M) }`.
    pub fn subnormal_in(&self, m: usize, variant: SubnormalVariant) -> &BitSet {
        let table = match variant {
            SubnormalVariant::Classic => &self.classic,
            SubnormalVariant::Sigma => &self.sigma_sub,
        };
        if let Some(s) = table.sets[m].get() {
            return s;
        }
        let mut set = BitSet::new(self.lattice.len());
        set.insert(m);
        if variant == SubnormalVariant::Sigma && self.is_sigma_nilpotent(m) {
            // every subgroup of a σ-nilpotent group is σ-subnormal
            for j in self.lattice.proper_subgroups_of(m) {
                set.insert(j);
            }
        } else {
            let below: Vec<usize> = self.lattice.proper_subgroups_of(m).collect();
            for &j in below.iter().rev() {
                if set.contains(j) && table.sets[j].get().is_some() {
                    // already covered through a larger intermediate member
                    let sub = table.sets[j].get().expect("checked");
                    if sub.is_subset(&set) {
                        continue;
                    }
                }
                if self.step(j, m, variant) {
                    set.union_with(self.subnormal_in(j, variant));
                }
            }
        }
        let _ = table.sets[m].set(set);
        table.sets[m].get().expect("just set")
    }

    pub fn is_subnormal_in(&self, a: usize, m: usize, variant: SubnormalVariant) -> bool {
        self.subnormal_in(m, variant).contains(a)
    }

    /// Subnormality in the whole group. The classic variant uses iterated
    /// normal closures; the σ variant uses the lattice recursion.
    pub fn is_subnormal(&self, a: usize, variant: SubnormalVariant) -> bool {
        match variant {
            SubnormalVariant::Classic => self.is_normal(a) || subgroup::is_subnormal(self.group, self.subgroup(a)),
            SubnormalVariant::Sigma => {
                self.is_normal(a) || self.is_group_sigma_nilpotent() || self.is_subnormal_in(a, self.top(), variant)
            }
        }
    }

    /// Lattice index of `U^{𝔑_σ}` for member `u`: the intersection of the
    /// members `N ⊴ U` with `U/N` σ-nilpotent.
    pub fn residual_of(&self, u: usize) -> usize {
        *self.residuals[u].get_or_init(|| {
            let us = self.subgroup(u);
            if self.is_sigma_nilpotent(u) {
                return 0;
            }
            let mut r = us.clone();
            for j in self.lattice.proper_subgroups_of(u) {
                let n = self.subgroup(j);
                if r.is_subgroup_of(n) {
                    continue;
                }
                if subgroup::normalizes(self.group, self.lattice.gens(u), n, self.lattice.gens(j))
                    && sigma::is_sigma_nilpotent_section(self.group, us, n, &self.sigma)
                {
                    r = r.intersection(n);
                }
            }
            self.index(&r)
        })
    }

    pub fn sigma_fitting(&self) -> Result<&Subgroup> {
        if let Some(f) = self.fitting.get() {
            return Ok(f);
        }
        let f = sigma::sigma_fitting(self.group, self.normals(), &self.sigma)?;
        Ok(self.fitting.get_or_init(|| f))
    }

    pub fn sigma_hypercentre(&self) -> &Subgroup {
        self.hypercentre
            .get_or_init(|| sigma::sigma_hypercentre(self.group, self.normals(), &self.sigma))
    }

    pub fn sigma_residual(&self) -> Result<&Subgroup> {
        if let Some(r) = self.residual.get() {
            return Ok(r);
        }
        let r = sigma::sigma_residual(self.group, self.normals(), &self.sigma)?;
        let u = self.residual_of(self.top());
        if *self.subgroup(u) != r {
            return Err(Error::InternalInconsistency(
                "residual from lattice disagrees with normal list".into(),
            ));
        }
        Ok(self.residual.get_or_init(|| r))
    }

    pub fn is_sigma_soluble(&self) -> bool {
        sigma::is_sigma_soluble(self.group, self.normals(), &self.sigma)
    }

    pub fn hall_set(&self) -> Result<Option<HallSigmaSet>> {
        sigma::complete_hall_sigma_set(self.group, &self.sigma, Some(&self.lattice), &self.limits)
    }

    /// Lattice members of order `order` (Hall subgroups when `order` is a
    /// Hall number).
    pub fn members_of_order(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        self.lattice
            .iter()
            .filter(move |(_, s)| s.order() == order)
            .map(|(i, _)| i)
    }

    /// Whether member `h` is a σ-Carter subgroup: σ-nilpotent and
    /// `U^{𝔑_σ} H = U` for every member `U ⊇ H`.
    pub fn is_sigma_carter(&self, h: usize) -> bool {
        if !self.is_sigma_nilpotent(h) {
            return false;
        }
        let hs = self.subgroup(h);
        self.lattice.supergroups_of(h).all(|u| {
            let r = self.subgroup(self.residual_of(u));
            r.product_size(hs) == self.subgroup(u).order()
        })
    }

    /// All σ-Carter subgroups, in lattice order.
    pub fn sigma_carter_subgroups(&self) -> Vec<usize> {
        (0..self.lattice.len()).filter(|&h| self.is_sigma_carter(h)).collect()
    }

    /// σ-nilpotent members not properly contained in a σ-nilpotent member.
    pub fn maximal_sigma_nilpotent(&self) -> Vec<usize> {
        (0..self.lattice.len())
            .filter(|&i| self.is_sigma_nilpotent(i) && self.is_maximal_sigma_nilpotent(i))
            .collect()
    }

    pub fn is_maximal_sigma_nilpotent(&self, i: usize) -> bool {
        self.is_sigma_nilpotent(i)
            && self
                .lattice
                .supergroups_of(i)
                .all(|j| j == i || !self.is_sigma_nilpotent(j))
    }

    pub fn fitting(&self) -> Result<Subgroup> {
        classical::fitting(self.group, self.normals())
    }
}

/// Whether `a` is σ-subnormal in `g`.
pub fn is_sigma_subnormal(g: &Group, a: &Subgroup, sigma: &PrimePartition, limits: &Limits) -> Result<bool> {
    if sigma::is_sigma_nilpotent_group(g, sigma) || subgroup::is_normal(g, a) {
        return Ok(true);
    }
    let an = Analysis::new(g, sigma.clone(), *limits)?;
    Ok(an.is_subnormal(an.index(a), SubnormalVariant::Sigma))
}

/// Whether `h` is a σ-Carter subgroup of `g`.
pub fn sigma_carter(g: &Group, h: &Subgroup, sigma: &PrimePartition, limits: &Limits) -> Result<bool> {
    let an = Analysis::new(g, sigma.clone(), *limits)?;
    Ok(an.is_sigma_carter(an.index(h)))
}

/// Every σ-Carter subgroup of `g` (conjugates included), in lattice order.
pub fn find_sigma_carter(g: &Group, sigma: &PrimePartition, limits: &Limits) -> Result<Vec<Subgroup>> {
    let an = Analysis::new(g, sigma.clone(), *limits)?;
    Ok(an
        .sigma_carter_subgroups()
        .into_iter()
        .map(|i| an.subgroup(i).clone())
        .collect())
}
