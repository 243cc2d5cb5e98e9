//! Corpus loading and brute-force oracles shared by the integration suites.
//! The oracles work from element tables only and never call the library's
//! own σ-machinery.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;

use sigmanil::{lattice, Analysis, Group, Limits, PrimePartition, Subgroup, SubgroupLattice};
use sigmanil_cli::{dsl, sigma_spec};

pub const SIGMA_MODES: &[&str] = &[
    "singletons",
    "pi:2",
    "pi:3",
    "pi:2,3",
    "pi1:2,3",
    "blocks:{5}{3};rest:coblock",
    "blocks:{23}{11};rest:coblock",
];

pub const EXAMPLE_SIGMA: &str = "blocks:{23}{11};rest:coblock";

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn sigma(spec: &str) -> PrimePartition {
    sigma_spec::parse(spec).expect("valid σ-spec")
}

pub struct Fixture {
    pub name: String,
    pub path: PathBuf,
    pub group: Group,
    pub lattice: Arc<SubgroupLattice>,
}

impl Fixture {
    pub fn load(path: &Path) -> Fixture {
        let limits = Limits::default();
        let group = dsl::load_group(path, &limits).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let lattice = lattice::all_subgroups_capped(&group, limits.max_joins, limits.max_subgroups)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        Fixture {
            name: path.file_stem().unwrap().to_string_lossy().into_owned(),
            path: path.to_path_buf(),
            group,
            lattice: Arc::new(lattice),
        }
    }

    pub fn analysis(&self, sigma: &PrimePartition) -> Analysis<'_> {
        Analysis::with_lattice(&self.group, sigma.clone(), Limits::default(), self.lattice.clone())
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

pub fn fixture(name: &str) -> Fixture {
    let dir = corpus_dir();
    let gdsl = dir.join(format!("{name}.gdsl"));
    let path = if gdsl.exists() {
        gdsl
    } else {
        dir.join(format!("{name}.cayley"))
    };
    Fixture::load(&path)
}

/// Every fixture in the corpus, sorted by path.
pub fn corpus() -> Vec<Fixture> {
    let files = sigmanil_cli::corpus_files(&corpus_dir()).expect("corpus directory");
    files.par_iter().map(|p| Fixture::load(p)).collect()
}

pub fn lift(g: &Group, emb: &[usize], t: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = t.iter().map(|x| emb[x]).collect();
    Subgroup::from_elements(g, &elems).expect("image of a subgroup")
}

// ---------------------------------------------------------------------------
// oracles

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All prime divisors of `n` lie in one block.
pub fn primary_number(n: u64, sigma: &PrimePartition) -> bool {
    let ps = primes_of(n);
    ps.iter().all(|&p| sigma.same_block(p, ps[0]))
}

pub fn bf_normalizes(g: &Group, m: &Subgroup, a: &Subgroup) -> bool {
    m.iter().all(|y| a.iter().all(|x| a.contains(g.conj(x, y))))
}

pub fn bf_normal(g: &Group, a: &Subgroup) -> bool {
    bf_normalizes(g, &Subgroup::whole(g), a)
}

pub fn bf_normalizer(g: &Group, a: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = (0..g.order())
        .filter(|&y| a.iter().all(|x| a.contains(g.conj(x, y))))
        .collect();
    Subgroup::from_elements(g, &elems).expect("normalizer is a subgroup")
}

pub fn bf_center(g: &Group, h: &Subgroup) -> Vec<usize> {
    h.iter()
        .filter(|&z| h.iter().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

/// σ-nilpotency straight from the definition of a direct product of Hall
/// subgroups: for every block the σ_i-elements form a set of exactly the
/// σ_i-part of `|H|` that is closed under multiplication, and elements from
/// different blocks commute.
pub fn bf_sigma_nilpotent(g: &Group, h: &Subgroup, sigma: &PrimePartition) -> bool {
    let n = h.order() as u64;
    let primes = primes_of(n);
    let mut blocks: Vec<Vec<u64>> = Vec::new();
    for &p in &primes {
        match blocks.iter_mut().find(|b| sigma.same_block(b[0], p)) {
            Some(b) => b.push(p),
            None => blocks.push(vec![p]),
        }
    }
    if blocks.len() <= 1 {
        return true;
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for b in &blocks {
        let part: u64 = primes_of(n)
            .into_iter()
            .filter(|p| b.contains(p))
            .map(|p| {
                let mut k = 1;
                let mut m = n;
                while m.is_multiple_of(p) {
                    m /= p;
                    k *= p;
                }
                k
            })
            .product();
        let elems: Vec<usize> = h
            .iter()
            .filter(|&x| primes_of(g.elt_order(x) as u64).iter().all(|p| b.contains(p)))
            .collect();
        if elems.len() as u64 != part {
            return false;
        }
        let mut member = vec![false; g.order()];
        for &x in &elems {
            member[x] = true;
        }
        if !elems.iter().all(|&x| elems.iter().all(|&y| member[g.mul(x, y)])) {
            return false;
        }
        parts.push(elems);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &x in &parts[i] {
                for &y in &parts[j] {
                    if g.mul(x, y) != g.mul(y, x) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn bf_core_order(g: &Group, a: &Subgroup, m: &Subgroup) -> usize {
    a.iter().filter(|&x| m.iter().all(|y| a.contains(g.conj(x, y)))).count()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Normal,
    Sigma,
}

/// Exhaustive search for subnormal chains through the lattice.
pub struct ChainOracle {
    /// `step[x][m]`: `x < m` and the chain may go from `x` to `m`.
    step: Vec<Vec<bool>>,
    by_order_desc: Vec<usize>,
    orders: Vec<usize>,
}

impl ChainOracle {
    pub fn new(g: &Group, lat: &SubgroupLattice, kind: Step, sigma: &PrimePartition) -> Self {
        let n = lat.len();
        let subs = lat.subgroups();
        let step: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|x| {
                (0..n)
                    .map(|m| {
                        let (a, b) = (&subs[x], &subs[m]);
                        if a.order() >= b.order() || !a.is_subgroup_of(b) {
                            return false;
                        }
                        if bf_normalizes(g, b, a) {
                            return true;
                        }
                        kind == Step::Sigma && primary_number((b.order() / bf_core_order(g, a, b)) as u64, sigma)
                    })
                    .collect()
            })
            .collect();
        let mut by_order_desc: Vec<usize> = (0..n).collect();
        by_order_desc.sort_by_key(|&i| std::cmp::Reverse(subs[i].order()));
        ChainOracle {
            step,
            by_order_desc,
            orders: subs.iter().map(Subgroup::order).collect(),
        }
    }

    /// Members from which a chain reaches `target`.
    pub fn reaching(&self, target: usize) -> Vec<bool> {
        let mut ok = vec![false; self.step.len()];
        ok[target] = true;
        for &x in &self.by_order_desc {
            if self.orders[x] < self.orders[target] && !ok[x] {
                ok[x] = (0..ok.len()).any(|m| ok[m] && self.step[x][m]);
            }
        }
        ok
    }
}

/// The largest normal subgroup all of whose chief factors below it are
/// σ-central, found by testing every normal subgroup. `Err` if the good
/// normal subgroups have no largest member.
pub fn bf_sigma_hypercentre(g: &Group, lat: &SubgroupLattice, sigma: &PrimePartition) -> Result<Subgroup, String> {
    let normals: Vec<&Subgroup> = lat.subgroups().iter().filter(|s| bf_normal(g, s)).collect();
    let mut factors: Vec<(usize, bool)> = Vec::new();
    for (hi, h) in normals.iter().enumerate() {
        for k in &normals {
            if k.order() >= h.order() || !k.is_subgroup_of(h) {
                continue;
            }
            let between = normals
                .iter()
                .any(|m| m.order() > k.order() && m.order() < h.order() && k.is_subgroup_of(m) && m.is_subgroup_of(h));
            if between {
                continue;
            }
            let c = (0..g.order())
                .filter(|&x| h.iter().all(|y| k.contains(g.commutator(x, y))))
                .count();
            let central = primary_number((h.order() / k.order() * (g.order() / c)) as u64, sigma);
            factors.push((hi, central));
        }
    }
    let good: Vec<&Subgroup> = normals
        .iter()
        .filter(|n| {
            factors
                .iter()
                .all(|&(h, central)| central || !normals[h].is_subgroup_of(n))
        })
        .copied()
        .collect();
    let top = good
        .iter()
        .max_by_key(|n| n.order())
        .expect("trivial subgroup qualifies");
    if good.iter().all(|n| n.is_subgroup_of(top)) {
        Ok((*top).clone())
    } else {
        Err("σ-hypercentral normal subgroups have no largest member".into())
    }
}

/// `(semi, weak)` quantified over every σ-nilpotent subgroup, with
/// subnormality decided by chain search.
pub fn bf_classify(g: &Group, lat: &SubgroupLattice, sigma: &PrimePartition, kind: Step) -> (bool, bool) {
    let chains = ChainOracle::new(g, lat, kind, sigma);
    let subnormal = chains.reaching(lat.top());
    let mut semi = true;
    let mut weak = true;
    for (i, a) in lat.iter() {
        if !bf_sigma_nilpotent(g, a, sigma) {
            continue;
        }
        let normal = bf_normal(g, a);
        if normal && subnormal[i] {
            continue;
        }
        let ok = bf_sigma_nilpotent(g, &bf_normalizer(g, a), sigma);
        if !normal && !ok {
            semi = false;
        }
        if !subnormal[i] && !ok {
            weak = false;
        }
    }
    (semi, weak)
}
