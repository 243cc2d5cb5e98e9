//! Random small groups and partitions for the property suites.
#![allow(dead_code)]

use proptest::prelude::*;

use sigmanil::{Action, Group, Limits, PrimePartition, Remainder, Subgroup};

#[derive(Debug, Clone)]
pub enum Spec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Sym(usize),
    Alt(usize),
    /// `C_p ⋊ C_m` with the generator of `C_m` acting as `x ↦ x^k`.
    Metacyclic(usize, usize, usize),
    Direct(Box<Spec>, Box<Spec>),
}

impl Spec {
    pub fn build(&self) -> Group {
        let limits = Limits::default();
        match self {
            Spec::Cyclic(n) => Group::cyclic(*n),
            Spec::Dihedral(n) => Group::dihedral(*n).unwrap(),
            Spec::Quaternion(n) => Group::quaternion(*n).unwrap(),
            Spec::Sym(n) => Group::symmetric(*n, &limits).unwrap(),
            Spec::Alt(n) => Group::alternating(*n, &limits).unwrap(),
            Spec::Metacyclic(p, m, k) => {
                let n = Group::cyclic(*p);
                let h = Group::cyclic(*m);
                let images = (0..*p).map(|i| i * k % p).collect();
                Group::semidirect_product(
                    &n,
                    &h,
                    &Action {
                        generator_maps: vec![(1, images)],
                    },
                    &limits,
                )
                .unwrap()
            }
            Spec::Direct(a, b) => Group::direct_product(&a.build(), &b.build(), &limits).unwrap(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Spec::Cyclic(n) | Spec::Dihedral(n) | Spec::Quaternion(n) => *n,
            Spec::Sym(n) => (1..=*n).product(),
            Spec::Alt(n) => (1..=*n).product::<usize>() / 2,
            Spec::Metacyclic(p, m, _) => p * m,
            Spec::Direct(a, b) => a.order() * b.order(),
        }
    }
}

/// `(p, m, k)` with `k` of multiplicative order dividing `m` modulo `p`.
const METACYCLIC: &[(usize, usize, usize)] = &[
    (3, 2, 2),
    (3, 4, 2),
    (5, 2, 4),
    (5, 4, 2),
    (5, 4, 4),
    (7, 3, 2),
    (7, 6, 3),
    (7, 2, 6),
    (11, 5, 3),
    (13, 3, 3),
    (3, 6, 2),
    (5, 3, 1),
];

pub fn atom() -> impl Strategy<Value = Spec> {
    prop_oneof![
        (1usize..=12).prop_map(Spec::Cyclic),
        prop::sample::select(vec![4usize, 6, 8, 10, 12, 14, 16]).prop_map(Spec::Dihedral),
        prop::sample::select(vec![8usize, 16]).prop_map(Spec::Quaternion),
        (2usize..=4).prop_map(Spec::Sym),
        (3usize..=4).prop_map(Spec::Alt),
        prop::sample::select(METACYCLIC.to_vec()).prop_map(|(p, m, k)| Spec::Metacyclic(p, m, k)),
    ]
}

/// Groups of order at most `max`.
pub fn group_spec(max: usize) -> impl Strategy<Value = Spec> {
    prop_oneof![
        atom(),
        (atom(), atom()).prop_map(|(a, b)| Spec::Direct(Box::new(a), Box::new(b))),
    ]
    .prop_filter("order cap", move |s| s.order() <= max)
}

/// A partition of the primes up to 13 into explicit blocks, plus a remainder
/// rule.
pub fn partition() -> impl Strategy<Value = PrimePartition> {
    (prop::collection::vec(0usize..4, 6), any::<bool>()).prop_map(|(labels, coblock)| {
        let primes = [2u64, 3, 5, 7, 11, 13];
        let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); 4];
        for (p, l) in primes.iter().zip(labels) {
            // label 3 leaves the prime to the remainder rule
            if l < 3 {
                blocks[l].push(*p);
            }
        }
        blocks.retain(|b| !b.is_empty());
        let rest = if coblock {
            Remainder::CoBlock
        } else {
            Remainder::Singletons
        };
        PrimePartition::new(blocks, rest).unwrap()
    })
}

pub fn bf_normal(g: &Group, a: &Subgroup) -> bool {
    (0..g.order()).all(|y| a.iter().all(|x| a.contains(g.conj(x, y))))
}

pub fn bf_nilpotent(g: &Group, h: &Subgroup) -> bool {
    // elements of coprime order commute
    let els: Vec<usize> = h.iter().collect();
    els.iter().all(|&x| {
        els.iter().all(|&y| {
            let (a, b) = (g.elt_order(x), g.elt_order(y));
            gcd(a, b) != 1 || g.mul(x, y) == g.mul(y, x)
        })
    })
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
