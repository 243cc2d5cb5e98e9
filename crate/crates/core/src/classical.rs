//! Sylow and Hall subgroups and the classical characteristic subgroups.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::lattice::{self, NormalSubgroups, SubgroupLattice};
use crate::subgroup::{self, Closure, Subgroup};

/// All conjugates of `s`, sorted.
pub fn conjugates(g: &Group, s: &Subgroup) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    seen.insert(s.clone());
    let mut stack = alloc::vec![s.clone()];
    while let Some(cur) = stack.pop() {
        for &x in g.generators() {
            let c = subgroup::conjugate(g, &cur, x);
            if !seen.contains(&c) {
                seen.insert(c.clone());
                stack.push(c);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn are_conjugate(g: &Group, a: &Subgroup, b: &Subgroup) -> bool {
    a.order() == b.order() && conjugates(g, a).binary_search(b).is_ok()
}

/// A Sylow `p`-subgroup: grow a `p`-subgroup `P` by an element of
/// `N_G(P) \ P` whose `p`-th power lies in `P` until the order is full.
pub fn sylow(g: &Group, p: u64) -> Subgroup {
    let target = arith::part_where(g.order() as u64, |q| q == p) as usize;
    let mut c = Closure::new(g);
    while c.len() < target {
        let (cur, gens) = Closure::finish_with_gens(c);
        let norm = subgroup::normalizer_with_gens(g, &cur, &gens);
        let x = norm
            .iter()
            .find(|&x| !cur.contains(x) && cur.contains(g.pow(x, p as usize)))
            .expect("Cauchy's theorem in N(P)/P");
        c = Closure::from_subgroup(g, &cur, &gens);
        c.add(x);
    }
    c.finish()
}

/// Sylow `p`-subgroups as the conjugacy class of one of them.
pub fn sylow_subgroups(g: &Group, p: u64) -> Vec<Subgroup> {
    conjugates(g, &sylow(g, p))
}

pub fn is_pi_number(n: usize, primes: &[u64]) -> bool {
    arith::prime_divisors(n as u64).iter().all(|p| primes.contains(p))
}

/// A subgroup of order `|G|_π`, or `None` when none exists.
///
/// Searches joins of Sylow subgroups first (one fixed Sylow for the smallest
/// prime, conjugates for the rest, pruned by divisibility), and falls back to
/// filtering the full lattice when that search exceeds `limits.max_families`.
pub fn hall_subgroup(
    g: &Group,
    primes: &[u64],
    lattice: Option<&SubgroupLattice>,
    limits: &Limits,
) -> Result<Option<Subgroup>> {
    let n = g.order() as u64;
    let relevant: Vec<u64> = arith::prime_divisors(n)
        .into_iter()
        .filter(|p| primes.contains(p))
        .collect();
    let target = arith::part_where(n, |p| relevant.contains(&p)) as usize;
    if target == 1 {
        return Ok(Some(Subgroup::trivial(g)));
    }
    if target == g.order() {
        return Ok(Some(Subgroup::whole(g)));
    }
    if relevant.len() == 1 {
        return Ok(Some(sylow(g, relevant[0])));
    }
    let first = sylow(g, relevant[0]);
    let orbits: Vec<Vec<(Subgroup, Vec<usize>)>> = relevant[1..]
        .iter()
        .map(|&p| {
            sylow_subgroups(g, p)
                .into_iter()
                .map(|s| {
                    let gens = subgroup::generating_set(g, &s);
                    (s, gens)
                })
                .collect()
        })
        .collect();
    let first_gens = subgroup::generating_set(g, &first);
    let mut budget = limits.max_families;
    match hall_dfs(g, &first, &first_gens, &orbits, target, &mut budget) {
        Some(h) => return Ok(Some(h)),
        None if budget > 0 => return Ok(None),
        None => {}
    }
    let owned;
    let lat = match lattice {
        Some(l) => l,
        None => {
            owned = lattice::all_subgroups_capped(g, limits.max_joins, limits.max_subgroups)?;
            &owned
        }
    };
    Ok(lat.subgroups().iter().find(|s| s.order() == target).cloned())
}

fn hall_dfs(
    g: &Group,
    cur: &Subgroup,
    cur_gens: &[usize],
    orbits: &[Vec<(Subgroup, Vec<usize>)>],
    target: usize,
    budget: &mut usize,
) -> Option<Subgroup> {
    let Some((orbit, rest)) = orbits.split_first() else {
        return (cur.order() == target).then(|| cur.clone());
    };
    for (_, q_gens) in orbit {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let mut c = Closure::from_subgroup(g, cur, cur_gens);
        for &x in q_gens {
            c.add(x);
            if !target.is_multiple_of(c.len()) {
                break;
            }
        }
        if !target.is_multiple_of(c.len()) {
            continue;
        }
        let (k, k_gens) = c.finish_with_gens();
        if let Some(h) = hall_dfs(g, &k, &k_gens, rest, target, budget) {
            return Some(h);
        }
    }
    None
}

/// `O_π(G)`, the largest normal π-subgroup.
pub fn o_pi(g: &Group, normals: &NormalSubgroups, primes: &[u64]) -> Subgroup {
    let best = normals
        .list
        .iter()
        .filter(|n| is_pi_number(n.order(), primes))
        .collect::<Vec<_>>();
    normals.join_all(g, best)
}

/// `Φ(G)`, the intersection of all maximal subgroups.
pub fn frattini(lattice: &SubgroupLattice) -> Subgroup {
    let mut it = lattice::maximal_subgroups(lattice).into_iter();
    match it.next() {
        None => lattice.get(lattice.top()).clone(),
        Some(first) => it.fold(first, |acc, m| acc.intersection(&m)),
    }
}

/// `F(G) = ∏ O_p(G)`.
pub fn fitting(g: &Group, normals: &NormalSubgroups) -> Result<Subgroup> {
    let parts: Vec<Subgroup> = arith::prime_divisors(g.order() as u64)
        .into_iter()
        .map(|p| o_pi(g, normals, &[p]))
        .collect();
    let f = normals.join_all(g, parts.iter());
    if !is_nilpotent_subgroup(g, &f) {
        return Err(Error::InternalInconsistency("Fitting subgroup is not nilpotent".into()));
    }
    Ok(f)
}

/// `Z_∞(G)`: iterate `Z_{k+1}/Z_k = Z(G/Z_k)` through quotient groups.
pub fn hypercentre(g: &Group) -> Subgroup {
    let mut z = subgroup::center(g);
    loop {
        if z.is_whole() {
            return z;
        }
        let (q, hom) = g.quotient(&z).expect("terms of the upper central series are normal");
        let next = hom.preimage_of(&subgroup::center(&q));
        if next == z {
            return z;
        }
        z = next;
    }
}

pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = alloc::vec![Subgroup::whole(g)];
    loop {
        let last = series.last().expect("nonempty");
        let next = subgroup::derived_subgroup(g, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

/// `(nilpotent, soluble)`: nilpotent iff every Sylow subgroup is normal;
/// soluble iff the derived series reaches 1.
pub fn nilpotency_solubility(g: &Group) -> (bool, bool) {
    let nilpotent = arith::prime_divisors(g.order() as u64)
        .into_iter()
        .all(|p| subgroup::is_normal(g, &sylow(g, p)));
    let soluble = derived_series(g).last().is_some_and(Subgroup::is_trivial);
    (nilpotent, soluble)
}

/// Nilpotency of a subgroup: for every prime the `p`-elements of `H` form a
/// subgroup of order `|H|_p`.
pub fn is_nilpotent_subgroup(g: &Group, h: &Subgroup) -> bool {
    arith::factorize(h.order() as u64).into_iter().all(|(p, k)| {
        let target = p.pow(k) as usize;
        let mut c = Closure::new(g);
        for x in h.iter() {
            if arith::is_prime_power(g.elt_order(x) as u64) && (g.elt_order(x) as u64).is_multiple_of(p) {
                c.add(x);
                if c.len() > target {
                    return false;
                }
            }
        }
        c.len() == target
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::normal_subgroups;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn hall_examples() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        assert_eq!(hall_subgroup(&s3, &[3], None, &lim()).unwrap().unwrap().order(), 3);
        assert!(hall_subgroup(&s3, &[2, 3], None, &lim()).unwrap().unwrap().is_whole());
        let a5 = Group::alternating(5, &lim()).unwrap();
        assert_eq!(hall_subgroup(&a5, &[3, 5], None, &lim()).unwrap(), None);
        assert_eq!(hall_subgroup(&a5, &[2, 3], None, &lim()).unwrap().unwrap().order(), 12);
        for p in [2, 3, 5] {
            let s = sylow(&a5, p);
            assert_eq!(s.order() as u64, arith::part_where(60, |q| q == p));
        }
        assert_eq!(sylow_subgroups(&a5, 5).len(), 6);
    }

    #[test]
    fn o_pi_fitting() {
        let s4 = Group::symmetric(4, &lim()).unwrap();
        let ns = normal_subgroups(&s4);
        assert_eq!(o_pi(&s4, &ns, &[2]).order(), 4);
        assert_eq!(fitting(&s4, &ns).unwrap().order(), 4);
        let s3 = Group::symmetric(3, &lim()).unwrap();
        let ns3 = normal_subgroups(&s3);
        assert_eq!(o_pi(&s3, &ns3, &[3]).order(), 3);
        assert_eq!(fitting(&s3, &ns3).unwrap().order(), 3);
        let q8 = Group::quaternion(8).unwrap();
        assert!(o_pi(&q8, &normal_subgroups(&q8), &[2]).is_whole());
    }

    #[test]
    fn frattini_examples() {
        let f = |g: &Group| frattini(&lattice::all_subgroups(g, 10_000).unwrap()).order();
        assert_eq!(f(&Group::cyclic(4)), 2);
        assert_eq!(f(&Group::symmetric(3, &lim()).unwrap()), 1);
        assert_eq!(f(&Group::cyclic(7)), 1);
    }

    #[test]
    fn hypercentre_examples() {
        assert!(hypercentre(&Group::quaternion(8).unwrap()).is_whole());
        assert!(hypercentre(&Group::symmetric(3, &lim()).unwrap()).is_trivial());
        let g = Group::direct_product(
            &Group::quaternion(8).unwrap(),
            &Group::symmetric(3, &lim()).unwrap(),
            &lim(),
        )
        .unwrap();
        let z = hypercentre(&g);
        assert_eq!(z.order(), 8);
        // the Q8 factor sits at indices a·6
        assert!(z.iter().all(|x| x % 6 == 0));
    }

    #[test]
    fn nilpotency() {
        assert_eq!(nilpotency_solubility(&Group::cyclic(12)), (true, true));
        assert_eq!(
            nilpotency_solubility(&Group::symmetric(3, &lim()).unwrap()),
            (false, true)
        );
        assert_eq!(
            nilpotency_solubility(&Group::alternating(5, &lim()).unwrap()),
            (false, false)
        );
    }
}
