//! Schmidt and 𝔑_σ-critical subgroups, and the semi / weakly
//! semi-σ-nilpotent classification.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::Analysis;
pub use crate::analysis::SubnormalVariant;
use crate::arith;
use crate::classical;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::lattice::{self, SubgroupLattice};
use crate::partition::PrimePartition;
use crate::sigma;
use crate::subgroup::{self, Subgroup};

/// `G = P ⋊ Q` with `P = G' = G^𝔑` a normal Sylow `p`-subgroup and
/// `Q = ⟨x⟩` a cyclic Sylow `q`-subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchmidtStructure {
    pub p: u64,
    pub q: u64,
    pub p_subgroup: Subgroup,
    pub q_subgroup: Subgroup,
    /// A generator `x` of `Q`.
    pub generator: usize,
}

/// Present iff `g` is non-nilpotent with every proper subgroup nilpotent.
pub fn is_schmidt(g: &Group, limits: &Limits) -> Result<Option<SchmidtStructure>> {
    let lat = lattice::all_subgroups_capped(g, limits.max_joins, limits.max_subgroups)?;
    is_schmidt_with(g, &lat)
}

pub fn is_schmidt_with(g: &Group, lat: &SubgroupLattice) -> Result<Option<SchmidtStructure>> {
    let whole = Subgroup::whole(g);
    if classical::is_nilpotent_subgroup(g, &whole) {
        return Ok(None);
    }
    for &m in &lat.maximal_subgroups_of(lat.top()) {
        if !classical::is_nilpotent_subgroup(g, lat.get(m)) {
            return Ok(None);
        }
    }
    schmidt_shape(g, lat).map(Some)
}

fn schmidt_shape(g: &Group, lat: &SubgroupLattice) -> Result<SchmidtStructure> {
    let bad = |what: &str| Error::InternalInconsistency(alloc::format!("Schmidt group {}: {what}", g.name()));
    let n = g.order() as u64;
    let primes = arith::prime_divisors(n);
    if primes.len() != 2 {
        return Err(bad("order is not divisible by exactly two primes"));
    }
    let whole = Subgroup::whole(g);
    let p_sub = subgroup::derived_subgroup(g, &whole);
    let p_primes = arith::prime_divisors(p_sub.order() as u64);
    if p_primes.len() != 1 {
        return Err(bad("derived subgroup is not a p-group"));
    }
    let p = p_primes[0];
    if p_sub.order() as u64 != arith::part_where(n, |r| r == p) {
        return Err(bad("derived subgroup is not a Sylow subgroup"));
    }
    let normals = lattice::normal_subgroups(g);
    if sigma::sigma_residual(g, &normals, &PrimePartition::singletons())? != p_sub {
        return Err(bad("derived subgroup differs from the nilpotent residual"));
    }
    let q = if primes[0] == p { primes[1] } else { primes[0] };
    let q_sub = classical::sylow(g, q);
    let x = q_sub
        .iter()
        .find(|&x| g.elt_order(x) == q_sub.order())
        .ok_or_else(|| bad("Sylow q-subgroup is not cyclic"))?;
    let xq = g.pow(x, q as usize);
    if !subgroup::center(g).contains(xq) || !classical::frattini(lat).contains(xq) {
        return Err(bad("x^q is not in Z(G) ∩ Φ(G)"));
    }
    if !subgroup::normal_closure(g, &q_sub).is_whole() {
        return Err(bad("Q^G is proper"));
    }
    Ok(SchmidtStructure {
        p,
        q,
        p_subgroup: p_sub,
        q_subgroup: q_sub,
        generator: x,
    })
}

/// Nilpotency of every lattice member.
pub fn nilpotent_flags(an: &Analysis<'_>) -> Vec<bool> {
    an.lattice()
        .subgroups()
        .iter()
        .map(|s| classical::is_nilpotent_subgroup(an.group(), s))
        .collect()
}

/// Lattice members that are Schmidt groups, given [`nilpotent_flags`].
pub fn schmidt_members(an: &Analysis<'_>, nilpotent: &[bool]) -> Vec<usize> {
    let lat = an.lattice();
    (0..lat.len())
        .filter(|&i| !nilpotent[i] && lat.proper_subgroups_of(i).all(|j| nilpotent[j]))
        .collect()
}

/// The Schmidt structure of member `i`, in the parent group's indices.
pub fn member_schmidt(an: &Analysis<'_>, i: usize) -> Result<Option<SchmidtStructure>> {
    let g = an.group();
    let (h, emb) = g.induced(an.subgroup(i));
    let lat = lattice::all_subgroups_capped(&h, an.limits().max_joins, an.limits().max_subgroups)?;
    let Some(s) = is_schmidt_with(&h, &lat)? else {
        return Ok(None);
    };
    let lift = |t: &Subgroup| -> Subgroup {
        let elems: Vec<usize> = t.iter().map(|x| emb[x]).collect();
        Subgroup::from_elements(g, &elems).expect("image of a subgroup")
    };
    Ok(Some(SchmidtStructure {
        p: s.p,
        q: s.q,
        p_subgroup: lift(&s.p_subgroup),
        q_subgroup: lift(&s.q_subgroup),
        generator: emb[s.generator],
    }))
}

/// Members that are not σ-nilpotent while all their proper subgroups are.
pub fn critical_subgroups(an: &Analysis<'_>) -> Vec<usize> {
    let lat = an.lattice();
    (0..lat.len())
        .filter(|&i| !an.is_sigma_nilpotent(i) && lat.proper_subgroups_of(i).all(|j| an.is_sigma_nilpotent(j)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessReason {
    NonNormal,
    NonSubnormal(SubnormalVariant),
}

impl fmt::Display for WitnessReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessReason::NonNormal => write!(f, "non-normal σ-nilpotent subgroup with non-σ-nilpotent normalizer"),
            WitnessReason::NonSubnormal(SubnormalVariant::Classic) => {
                write!(f, "non-subnormal σ-nilpotent subgroup with non-σ-nilpotent normalizer")
            }
            WitnessReason::NonSubnormal(SubnormalVariant::Sigma) => {
                write!(
                    f,
                    "non-σ-subnormal σ-nilpotent subgroup with non-σ-nilpotent normalizer"
                )
            }
        }
    }
}

/// A subgroup `A` whose normalizer `N_G(A)` is not σ-nilpotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subgroup: Subgroup,
    pub normalizer: Subgroup,
    pub reason: WitnessReason,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub group_name: String,
    pub group_order: usize,
    pub sigma: PrimePartition,
    pub variant: SubnormalVariant,
    pub sigma_nilpotent: bool,
    pub nilpotent: bool,
    pub semi: bool,
    pub weak: bool,
    pub witness_semi: Option<Witness>,
    pub witness_weak: Option<Witness>,
    /// The weak flag under the other subnormality variant.
    pub weak_other_variant: bool,
    pub witness_weak_other: Option<Witness>,
    pub lattice_size: usize,
    pub joins: usize,
}

impl ClassificationReport {
    /// Whether the two subnormality variants disagree on the weak flag.
    pub fn variants_differ(&self) -> bool {
        self.weak != self.weak_other_variant
    }
}

fn first_failure(an: &Analysis<'_>, candidates: impl Iterator<Item = usize>, reason: WitnessReason) -> Option<Witness> {
    for a in candidates {
        let skip = match reason {
            WitnessReason::NonNormal => an.is_normal(a),
            WitnessReason::NonSubnormal(v) => an.is_subnormal(a, v),
        };
        if skip {
            continue;
        }
        let n = an.normalizer(a);
        if !an.is_sigma_nilpotent(n) {
            return Some(Witness {
                subgroup: an.subgroup(a).clone(),
                normalizer: an.subgroup(n).clone(),
                reason,
            });
        }
    }
    None
}

fn sigma_primary_members<'a>(an: &'a Analysis<'_>) -> impl Iterator<Item = usize> + 'a {
    (1..an.lattice().len()).filter(move |&i| an.is_sigma_primary(i))
}

/// Semi / weak flags through the σ-primary reduction: it suffices to test
/// normalizers of σ-primary subgroups.
pub fn classify_sigma(an: &Analysis<'_>, variant: SubnormalVariant) -> ClassificationReport {
    let g = an.group();
    let sigma_nilpotent = an.is_group_sigma_nilpotent();
    let (witness_semi, witness_weak, witness_weak_other) = if sigma_nilpotent {
        (None, None, None)
    } else {
        (
            first_failure(an, sigma_primary_members(an), WitnessReason::NonNormal),
            first_failure(an, sigma_primary_members(an), WitnessReason::NonSubnormal(variant)),
            first_failure(
                an,
                sigma_primary_members(an),
                WitnessReason::NonSubnormal(variant.other()),
            ),
        )
    };
    ClassificationReport {
        group_name: g.name().into(),
        group_order: g.order(),
        sigma: an.sigma().clone(),
        variant,
        sigma_nilpotent,
        nilpotent: classical::is_nilpotent_subgroup(g, &Subgroup::whole(g)),
        semi: witness_semi.is_none(),
        weak: witness_weak.is_none(),
        witness_semi,
        witness_weak,
        weak_other_variant: witness_weak_other.is_none(),
        witness_weak_other,
        lattice_size: an.lattice().len(),
        joins: an.lattice().generated_count,
    }
}

/// `(semi, weak)` straight from the definition, quantifying over every
/// σ-nilpotent subgroup.
pub fn classify_full_definition(an: &Analysis<'_>, variant: SubnormalVariant) -> (bool, bool) {
    let nil = || (0..an.lattice().len()).filter(move |&i| an.is_sigma_nilpotent(i));
    let semi = first_failure(an, nil(), WitnessReason::NonNormal).is_none();
    let weak = first_failure(an, nil(), WitnessReason::NonSubnormal(variant)).is_none();
    (semi, weak)
}

/// Semi flag of the lattice member `s` viewed as a group, using the parent
/// lattice: subgroups of `S`, normality in `S`, and `N_S(A) = N_G(A) ∩ S`.
pub fn member_is_semi(an: &Analysis<'_>, s: usize) -> bool {
    let g = an.group();
    let lat = an.lattice();
    let ss = an.subgroup(s);
    if an.is_sigma_nilpotent(s) {
        return true;
    }
    lat.proper_subgroups_of(s)
        .filter(|&a| a != 0 && an.is_sigma_primary(a))
        .all(|a| {
            if subgroup::normalizes(g, lat.gens(s), an.subgroup(a), lat.gens(a)) {
                return true;
            }
            let n = an.subgroup(an.normalizer(a)).intersection(ss);
            an.is_sigma_nilpotent(an.index(&n))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Action;

    fn lim() -> Limits {
        Limits::default()
    }

    fn sd(n: Group, h: Group, maps: Vec<(usize, Vec<usize>)>) -> Group {
        Group::semidirect_product(&n, &h, &Action { generator_maps: maps }, &lim()).unwrap()
    }

    #[test]
    fn schmidt_examples() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let s = is_schmidt(&s3, &lim()).unwrap().unwrap();
        assert_eq!((s.p, s.q), (3, 2));
        assert_eq!(s.p_subgroup.order(), 3);
        assert!(is_schmidt(&Group::cyclic(6), &lim()).unwrap().is_none());
        let q8 = Group::quaternion(8).unwrap();
        let sl23 = sd(
            q8,
            Group::cyclic(3),
            alloc::vec![(1, alloc::vec![0, 4, 2, 6, 5, 1, 7, 3])],
        );
        assert_eq!(sl23.order(), 24);
        let s = is_schmidt(&sl23, &lim()).unwrap().unwrap();
        assert_eq!((s.p, s.q, s.p_subgroup.order(), s.q_subgroup.order()), (2, 3, 8, 3));
        assert!(is_schmidt(&Group::symmetric(4, &lim()).unwrap(), &lim())
            .unwrap()
            .is_none());
        let f20 = sd(
            Group::cyclic(5),
            Group::cyclic(4),
            alloc::vec![(1, alloc::vec![0, 2, 4, 1, 3])],
        );
        assert!(is_schmidt(&f20, &lim()).unwrap().is_none());
        let dic20 = sd(
            Group::cyclic(5),
            Group::cyclic(4),
            alloc::vec![(1, alloc::vec![0, 4, 3, 2, 1])],
        );
        let s = is_schmidt(&dic20, &lim()).unwrap().unwrap();
        assert_eq!((s.p, s.q, s.q_subgroup.order()), (5, 2, 4));
    }

    #[test]
    fn critical_in_s3() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let an = Analysis::new(&s3, PrimePartition::singletons(), lim()).unwrap();
        assert_eq!(critical_subgroups(&an), [an.top()]);
        let an = Analysis::new(&s3, PrimePartition::pi(&[2, 3]).unwrap(), lim()).unwrap();
        assert!(critical_subgroups(&an).is_empty());
    }

    #[test]
    fn s3_is_semi() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let an = Analysis::new(&s3, PrimePartition::singletons(), lim()).unwrap();
        let r = classify_sigma(&an, SubnormalVariant::Classic);
        assert!(!r.sigma_nilpotent && r.semi && r.weak);
        assert_eq!(classify_full_definition(&an, SubnormalVariant::Classic), (true, true));
    }

    #[test]
    fn s4_is_not_weak() {
        let s4 = Group::symmetric(4, &lim()).unwrap();
        let an = Analysis::new(&s4, PrimePartition::singletons(), lim()).unwrap();
        let r = classify_sigma(&an, SubnormalVariant::Classic);
        assert!(!r.semi && !r.weak);
        let w = r.witness_weak.unwrap();
        assert!(!an.is_sigma_nilpotent(an.index(&w.normalizer)));
        assert_eq!(classify_full_definition(&an, SubnormalVariant::Classic), (false, false));
    }
}
