//! Finite groups as dense multiplication tables, and the ways to build them.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::subgroup::{self, Subgroup};

/// Hard ceiling imposed by the 16-bit element indices.
pub const ABSOLUTE_MAX_ORDER: usize = 8192;

/// Tables up to this order get the full O(n³) associativity check.
pub const FULL_CHECK_MAX_ORDER: usize = 512;

/// Random triples sampled for tables above [`FULL_CHECK_MAX_ORDER`].
pub const SAMPLED_TRIPLES: usize = 100_000;

/// Resource caps shared by constructions and lattice searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Pairwise joins attempted while enumerating a subgroup lattice.
    pub max_joins: usize,
    /// Members of a subgroup lattice.
    pub max_subgroups: usize,
    /// Candidate conjugate families tried when searching Hall systems.
    pub max_families: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: ABSOLUTE_MAX_ORDER,
            max_joins: 200_000,
            max_subgroups: 100_000,
            max_families: 10_000,
        }
    }
}

impl Limits {
    pub fn check_order(&self, order: usize) -> Result<()> {
        let limit = self.max_order.min(ABSOLUTE_MAX_ORDER);
        if order > limit {
            return Err(Error::CapExceeded {
                what: "group order",
                limit,
                reached: order,
            });
        }
        Ok(())
    }
}

/// How associativity of the table was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    /// Every triple checked.
    Full,
    /// Light's test over a generating set (exact), plus `triples` random
    /// triples as a second screen.
    Sampled { triples: usize },
    /// Light's test over the recorded generators. Exact.
    Generators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Table,
    Permutation { degree: usize, generators: Vec<Vec<usize>> },
    Product { left: String, right: String },
    Semidirect { normal: String, acting: String },
    Quotient { parent: String, kernel_order: usize },
    Subgroup { parent: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Table => write!(f, "table"),
            Provenance::Permutation { degree, generators } => {
                write!(f, "permutation(degree {degree}, {} generators)", generators.len())
            }
            Provenance::Product { left, right } => write!(f, "product({left}, {right})"),
            Provenance::Semidirect { normal, acting } => {
                write!(f, "semidirect({normal}, {acting})")
            }
            Provenance::Quotient { parent, kernel_order } => write!(f, "quotient({parent} by order {kernel_order})"),
            Provenance::Subgroup { parent } => write!(f, "subgroup of {parent}"),
        }
    }
}

/// A finite group with identity at index 0.
///
/// Immutable after construction. Element orders and conjugacy classes are
/// computed once when the group is built.
#[derive(Clone)]
pub struct Group {
    name: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elt_order: Vec<u32>,
    generators: Vec<usize>,
    provenance: Provenance,
    verification: Verification,
    class_of: Vec<u32>,
    classes: Vec<Vec<u16>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// A map between element indices of two groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    pub source_order: usize,
    pub target_order: usize,
    pub image: Vec<usize>,
}

impl Homomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_of(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(self.target_order, s.iter().map(|x| self.image[x])))
    }

    pub fn preimage_of(&self, t: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(
            self.source_order,
            (0..self.source_order).filter(|&x| t.contains(self.image[x])),
        ))
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage_of(&Subgroup::trivial_of_order(self.target_order))
    }

    pub fn is_homomorphism(&self, source: &Group, target: &Group) -> bool {
        self.image.len() == source.order()
            && self.image[0] == 0
            && (0..source.order()).all(|a| {
                source
                    .generators()
                    .iter()
                    .all(|&b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
            })
    }
}

/// Automorphisms of the normal part attached to elements of the acting part.
///
/// Each map is `(element of H, permutation of N's element indices)`; the
/// listed elements must generate H.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Action {
    pub generator_maps: Vec<(usize, Vec<usize>)>,
}

impl Action {
    pub fn trivial(normal: &Group, acting: &Group) -> Self {
        let id: Vec<usize> = (0..normal.order()).collect();
        Action {
            generator_maps: acting.generators().iter().map(|&h| (h, id.clone())).collect(),
        }
    }
}

impl Group {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    /// `x⁻¹ a x`
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut r = 0;
        for _ in 0..k % self.elt_order(a) {
            r = self.mul(r, a);
        }
        r
    }

    /// A generating set. For constructed groups this is the declared one
    /// (used to name generators in semidirect actions).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn verification(&self) -> &Verification {
        &self.verification
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    pub fn classes(&self) -> impl Iterator<Item = impl Iterator<Item = usize> + '_> + '_ {
        self.classes.iter().map(|c| c.iter().map(|&x| x as usize))
    }

    pub fn class(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.classes[self.class_of(a)].iter().map(|&x| x as usize)
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Builds a group from a raw table; the identity is relocated to index 0.
    pub fn from_cayley_table(order: usize, table: &[Vec<usize>]) -> Result<Group> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be at least 1".into()));
        }
        Limits::default().check_order(order)?;
        if table.len() != order {
            return Err(Error::MalformedTable(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(Error::MalformedTable(format!("entry {bad} in row {i} out of range")));
            }
        }
        let e = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                mul[relabel(a) * order + relabel(b)] = relabel(table[a][b]) as u16;
            }
        }
        let mode = if order <= FULL_CHECK_MAX_ORDER {
            Verification::Full
        } else {
            Verification::Sampled {
                triples: SAMPLED_TRIPLES,
            }
        };
        Group::assemble(format!("table({order})"), order, mul, None, Provenance::Table, mode)
    }

    /// Closure of a set of permutations of `0..degree`, composed left to right
    /// (`(p*q)(i) = q(p(i))`).
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], limits: &Limits) -> Result<Group> {
        for (k, p) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&i| i >= degree || core::mem::replace(&mut seen[i], true)) {
                return Err(Error::NotBijection(k));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        // parent[y] = (x, k) with y = x * gen_k
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < elems.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (k, gperm) in generators.iter().enumerate() {
                let prod: Vec<usize> = elems[i].iter().map(|&x| gperm[x]).collect();
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len();
                        limits.check_order(j + 1)?;
                        index.insert(prod.clone(), j);
                        elems.push(prod);
                        parent.push((i, k));
                        j
                    }
                };
                row.push(j);
            }
            right.push(row);
            i += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            mul[x * n] = x as u16;
            for y in 1..n {
                let (py, k) = parent[y];
                mul[x * n + y] = right[mul[x * n + py] as usize][k] as u16;
            }
        }
        let gens: Vec<usize> = generators.iter().map(|p| index[p]).collect();
        Group::assemble(
            format!("perm({degree})"),
            n,
            mul,
            Some(gens),
            Provenance::Permutation {
                degree,
                generators: generators.to_vec(),
            },
            Verification::Generators,
        )
    }

    /// Builds a group from a multiplication function on `0..order` with
    /// identity 0 and the given generators.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        generators: Vec<usize>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Group> {
        Limits::default().check_order(order)?;
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let c = f(a, b);
                if c >= order {
                    return Err(Error::MalformedTable(format!("product {a}*{b} out of range")));
                }
                mul[a * order + b] = c as u16;
            }
        }
        Group::assemble(
            name.into(),
            order,
            mul,
            Some(generators),
            Provenance::Table,
            Verification::Generators,
        )
    }

    pub fn trivial() -> Group {
        Group::cyclic(1)
    }

    /// `C(n)`: element `k` is the `k`-th power of the generator 1.
    pub fn cyclic(n: usize) -> Group {
        assert!(n >= 1);
        let gens = if n == 1 { vec![] } else { vec![1] };
        Group::from_fn(format!("C({n})"), n, gens, |a, b| (a + b) % n).expect("cyclic group table is valid")
    }

    /// Dihedral group of order `n` (`n` even, at least 4): `r^i s^j` at index
    /// `i + (n/2) j`, generators `[r, s]`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::PreconditionViolated(
                "dihedral order must be even and at least 4",
            ));
        }
        let m = n / 2;
        Group::from_fn(format!("D({n})"), n, vec![1, m], move |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let i2 = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            i2 + m * ((j + l) % 2)
        })
    }

    /// Generalized quaternion group of order `n = 2^k ≥ 8`:
    /// `⟨a, b | a^{n/2} = 1, b² = a^{n/4}, b a b⁻¹ = a⁻¹⟩`, with `a^i b^j` at
    /// index `i + (n/2) j` and generators `[a, b]`. `Q(8)` is the quaternion group.
    pub fn quaternion(n: usize) -> Result<Group> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::PreconditionViolated(
                "quaternion order must be a power of two, at least 8",
            ));
        }
        let big = n / 2;
        let m = n / 4;
        Group::from_fn(format!("Q({n})"), n, vec![1, big], move |x, y| {
            let (i, j) = (x % big, x / big);
            let (k, l) = (y % big, y / big);
            match (j, l) {
                (0, _) => (i + k) % big + big * l,
                (_, 0) => (i + big - k) % big + big,
                _ => (i + big - k + m) % big,
            }
        })
        .map(|g| if n == 8 { g.with_name("Q8") } else { g })
    }

    /// `S(n)` on points `0..n`, generated by `(0 1)` and `(0 1 … n-1)`.
    pub fn symmetric(n: usize, limits: &Limits) -> Result<Group> {
        let gens = if n < 2 {
            vec![]
        } else {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            if n == 2 {
                vec![t]
            } else {
                vec![t, c]
            }
        };
        Ok(Group::from_permutations(n.max(1), &gens, limits)?.with_name(format!("S({n})")))
    }

    /// `A(n)` generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(n: usize, limits: &Limits) -> Result<Group> {
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Ok(Group::from_permutations(n.max(1), &gens, limits)?.with_name(format!("A({n})")))
    }

    /// `A × B` with `(a, b)` at index `a·|B| + b`.
    pub fn direct_product(a: &Group, b: &Group, limits: &Limits) -> Result<Group> {
        let nb = b.order();
        let n = a.order() * nb;
        limits.check_order(n)?;
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                mul[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16;
            }
        }
        let gens = a
            .generators()
            .iter()
            .map(|&g| g * nb)
            .chain(b.generators().iter().copied())
            .collect();
        Group::assemble(
            format!("{} x {}", a.name(), b.name()),
            n,
            mul,
            Some(gens),
            Provenance::Product {
                left: a.name().to_string(),
                right: b.name().to_string(),
            },
            Verification::Generators,
        )
    }

    /// `N ⋊ H` with `(n, h)` at index `n·|H| + h` and
    /// `(n₁,h₁)(n₂,h₂) = (n₁·φ(h₁)(n₂), h₁h₂)`, where `φ(h₁h₂) = φ(h₁)∘φ(h₂)`.
    pub fn semidirect_product(normal: &Group, acting: &Group, action: &Action, limits: &Limits) -> Result<Group> {
        let nn = normal.order();
        let nh = acting.order();
        limits.check_order(nn * nh)?;
        for (k, (h, perm)) in action.generator_maps.iter().enumerate() {
            if *h >= nh {
                return Err(Error::NotHomomorphism(format!("acting element {h} out of range")));
            }
            let mut seen = vec![false; nn];
            if perm.len() != nn || perm.iter().any(|&i| i >= nn || core::mem::replace(&mut seen[i], true)) {
                return Err(Error::NotBijection(k));
            }
            let hom = perm[0] == 0
                && (0..nn).all(|x| {
                    normal
                        .generators()
                        .iter()
                        .all(|&s| perm[normal.mul(x, s)] == normal.mul(perm[x], perm[s]))
                });
            if !hom {
                return Err(Error::NotAutomorphism(k));
            }
        }
        // extend to φ: H → Aut(N) along the Cayley graph of H
        let mut phi: Vec<Option<Vec<u16>>> = vec![None; nh];
        phi[0] = Some((0..nn as u16).collect());
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for (g, perm) in &action.generator_maps {
                let x = acting.mul(h, *g);
                let cur = phi[h].as_ref().expect("visited");
                let v: Vec<u16> = perm.iter().map(|&n| cur[n]).collect();
                match &phi[x] {
                    Some(existing) if *existing != v => {
                        return Err(Error::NotHomomorphism(format!(
                            "two words for element {x} of the acting group give different automorphisms"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        phi[x] = Some(v);
                        queue.push_back(x);
                    }
                }
            }
        }
        if phi.iter().any(Option::is_none) {
            return Err(Error::NotHomomorphism(
                "action generators do not generate the acting group".into(),
            ));
        }
        let phi: Vec<Vec<u16>> = phi.into_iter().map(Option::unwrap).collect();
        let n = nn * nh;
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            let (n1, h1) = (x / nh, x % nh);
            let act = &phi[h1];
            for y in 0..n {
                let (n2, h2) = (y / nh, y % nh);
                let nprod = normal.mul(n1, act[n2] as usize);
                mul[x * n + y] = (nprod * nh + acting.mul(h1, h2)) as u16;
            }
        }
        let gens = normal
            .generators()
            .iter()
            .map(|&s| s * nh)
            .chain(acting.generators().iter().copied())
            .collect();
        Group::assemble(
            format!("sd({}, {})", normal.name(), acting.name()),
            n,
            mul,
            Some(gens),
            Provenance::Semidirect {
                normal: normal.name().to_string(),
                acting: acting.name().to_string(),
            },
            Verification::Generators,
        )
    }

    /// `G/N` with its canonical projection. Coset ids follow the smallest
    /// element of each coset, so the identity coset is 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, Homomorphism)> {
        if !subgroup::is_normal(self, n) {
            return Err(Error::NotNormal);
        }
        let mut label = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if label[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for k in n.iter() {
                    label[self.mul(k, x)] = c;
                }
            }
        }
        let q = reps.len();
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                mul[a * q + b] = label[self.mul(reps[a], reps[b])] as u16;
            }
        }
        let mut gens: Vec<usize> = self.generators.iter().map(|&s| label[s]).collect();
        gens.dedup();
        let group = Group::assemble(
            format!("{}/N{}", self.name, n.order()),
            q,
            mul,
            Some(gens),
            Provenance::Quotient {
                parent: self.name.clone(),
                kernel_order: n.order(),
            },
            Verification::Generators,
        )?;
        let hom = Homomorphism {
            source_order: self.order,
            target_order: q,
            image: label,
        };
        Ok((group, hom))
    }

    /// The subgroup `s` as a group in its own right; element `i` of the result
    /// is `embedding[i]` in `self` (sorted, so the identity stays at 0).
    pub fn induced(&self, s: &Subgroup) -> (Group, Vec<usize>) {
        let elems = s.elements();
        let m = elems.len();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let mut mul = vec![0u16; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = pos[self.mul(elems[a], elems[b])] as u16;
            }
        }
        let gens = subgroup::generating_set(self, s).into_iter().map(|x| pos[x]).collect();
        let g = Group::assemble(
            format!("{}[{}]", self.name, m),
            m,
            mul,
            Some(gens),
            Provenance::Subgroup {
                parent: self.name.clone(),
            },
            Verification::Generators,
        )
        .expect("a subgroup of a group is a group");
        (g, elems)
    }

    fn assemble(
        name: String,
        order: usize,
        mul: Vec<u16>,
        generators: Option<Vec<usize>>,
        provenance: Provenance,
        verification: Verification,
    ) -> Result<Group> {
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::NoIdentity);
            }
        }
        let mut inv = vec![0u16; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..order).find(|&y| at(x, y) == 0).ok_or(Error::NoInverse(x))?;
            if at(y, x) != 0 {
                return Err(Error::NoInverse(x));
            }
            *slot = y as u16;
        }
        let generators = match generators {
            Some(g) => g,
            None => greedy_generators(order, &at),
        };
        check_generation(order, &generators, &at)?;
        match verification {
            Verification::Full => check_all_triples(order, &at)?,
            Verification::Generators => light_test(order, &generators, &at)?,
            Verification::Sampled { triples } => {
                light_test(order, &generators, &at)?;
                let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
                for _ in 0..triples {
                    let (a, b, c) = (
                        rng.gen_range(0..order),
                        rng.gen_range(0..order),
                        rng.gen_range(0..order),
                    );
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut elt_order = vec![0u32; order];
        for (x, slot) in elt_order.iter_mut().enumerate() {
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                y = at(y, x);
                k += 1;
                if k > order {
                    return Err(Error::InternalInconsistency(format!("element {x} has no finite order")));
                }
            }
            *slot = k as u32;
        }
        let mut class_of = vec![u32::MAX; order];
        let mut classes: Vec<Vec<u16>> = Vec::new();
        for x in 0..order {
            if class_of[x] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut class = vec![x as u16];
            class_of[x] = id;
            let mut i = 0;
            while i < class.len() {
                let y = class[i] as usize;
                for &s in &generators {
                    let c = at(at(inv[s] as usize, y), s);
                    if class_of[c] == u32::MAX {
                        class_of[c] = id;
                        class.push(c as u16);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        Ok(Group {
            name,
            order,
            mul,
            inv,
            elt_order,
            generators,
            provenance,
            verification,
            class_of,
            classes,
        })
    }

    /// Re-runs the exhaustive associativity check regardless of how the group
    /// was verified at construction.
    pub fn check_associativity_exhaustive(&self) -> Result<()> {
        check_all_triples(self.order, &|a, b| self.mul(a, b))
    }
}

fn right_closure(order: usize, gens: &[usize], at: &impl Fn(usize, usize) -> usize) -> BitSet {
    let mut seen = BitSet::new(order);
    seen.insert(0);
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = at(x, g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

fn greedy_generators(order: usize, at: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = right_closure(order, &gens, at);
    while let Some(x) = (0..order).find(|&x| !reached.contains(x)) {
        gens.push(x);
        reached = right_closure(order, &gens, at);
    }
    gens
}

fn check_generation(order: usize, gens: &[usize], at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    if gens.iter().any(|&g| g >= order) {
        return Err(Error::MalformedTable("generator out of range".into()));
    }
    let reached = right_closure(order, gens, at).count();
    if reached != order {
        return Err(Error::InternalInconsistency(format!(
            "declared generators reach {reached} of {order} elements"
        )));
    }
    Ok(())
}

/// Light's associativity test: the elements `g` with `(xg)y = x(gy)` for all
/// `x, y` form a submagma, so checking a generating set suffices.
fn light_test(order: usize, gens: &[usize], at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    for &g in gens {
        for x in 0..order {
            let xg = at(x, g);
            for y in 0..order {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(Error::NotAssociative(x, g, y));
                }
            }
        }
    }
    Ok(())
}

fn check_all_triples(order: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    for a in 0..order {
        for b in 0..order {
            let ab = at(a, b);
            for c in 0..order {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    Ok(())
}
