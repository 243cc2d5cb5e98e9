//! Clause-by-clause verification of the structure theorems for weakly semi-
//! and semi-σ-nilpotent groups on concrete instances.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{Analysis, SubnormalVariant};
use crate::classify::{self, ClassificationReport};
use crate::error::{Error, Result};
use crate::partition::BlockId;
use crate::sigma;
use crate::subgroup::{self, Subgroup};

/// Upper bound on candidate Hall families tried for clause A(i).
pub const MAX_HALL_FAMILIES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    A,
    B,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::A => write!(f, "A"),
            Theorem::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// The clause's premise is empty on this instance.
    Vacuous,
    /// A search cap was hit before the clause could be decided.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub id: &'static str,
    pub verdict: Verdict,
    pub detail: String,
    /// Subgroups backing the verdict (Hall members, Carter subgroups,
    /// counterexamples).
    pub witness: Vec<Subgroup>,
}

impl ClauseResult {
    fn new(id: &'static str, verdict: Verdict, detail: impl Into<String>, witness: Vec<Subgroup>) -> Self {
        ClauseResult {
            id,
            verdict,
            detail: detail.into(),
            witness,
        }
    }

    fn check(id: &'static str, ok: bool, detail: impl Into<String>, witness: Vec<Subgroup>) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Self::new(id, verdict, detail, witness)
    }
}

/// A complete Hall σ-set with the normal members first: `members[..r]` are
/// normal in G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallSystem {
    pub members: Vec<(BlockId, Subgroup)>,
    pub r: usize,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub hypothesis_holds: bool,
    pub hypothesis_reason: String,
    pub classification: ClassificationReport,
    pub hall_system: Option<HallSystem>,
    /// Empty when the hypothesis fails.
    pub clauses: Vec<ClauseResult>,
}

impl TheoremReport {
    pub fn any_failure(&self) -> bool {
        self.clauses.iter().any(|c| c.verdict.is_failure())
    }

    pub fn all_pass_or_vacuous(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| matches!(c.verdict, Verdict::Pass | Verdict::Vacuous))
    }
}

enum HallSearch {
    Found(HallSystem),
    Missing(String),
    Capped,
}

fn commute(an: &Analysis<'_>, a: usize, b: usize) -> bool {
    let g = an.group();
    let lat = an.lattice();
    lat.gens(a)
        .iter()
        .all(|&x| lat.gens(b).iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// Normal Hall members are unique; for the non-normal blocks backtrack over
/// the Hall σ_i-subgroups until a pairwise-commuting family appears.
fn find_hall_system(an: &Analysis<'_>) -> HallSearch {
    let n = an.group().order() as u64;
    let sigma = an.sigma();
    let mut normal = Vec::new();
    let mut open: Vec<(BlockId, Vec<usize>)> = Vec::new();
    for b in sigma.sigma_of(n) {
        let order = sigma.part(n, b) as usize;
        let cands: Vec<usize> = an.members_of_order(order).collect();
        if cands.is_empty() {
            return HallSearch::Missing(alloc::format!("no Hall {}-subgroup", sigma.block_label(b)));
        }
        match cands.iter().find(|&&i| an.is_normal(i)) {
            Some(&i) => normal.push((b, i)),
            None => open.push((b, cands)),
        }
    }
    if normal.is_empty() && !open.is_empty() {
        return HallSearch::Missing("no Hall σ_i-subgroup is normal".into());
    }
    let mut chosen = Vec::new();
    let mut budget = MAX_HALL_FAMILIES;
    if !backtrack(an, &open, &mut chosen, &mut budget) {
        return if budget == 0 {
            HallSearch::Capped
        } else {
            HallSearch::Missing("no pairwise-commuting family of non-normal Hall members".into())
        };
    }
    let r = normal.len();
    let members = normal
        .into_iter()
        .chain(open.iter().map(|(b, _)| *b).zip(chosen))
        .map(|(b, i)| (b, an.subgroup(i).clone()))
        .collect();
    HallSearch::Found(HallSystem { members, r })
}

fn backtrack(an: &Analysis<'_>, open: &[(BlockId, Vec<usize>)], chosen: &mut Vec<usize>, budget: &mut usize) -> bool {
    let Some((_, cands)) = open.get(chosen.len()) else {
        return true;
    };
    for &c in cands {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if chosen.iter().all(|&d| commute(an, c, d)) {
            chosen.push(c);
            if backtrack(an, open, chosen, budget) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn join(an: &Analysis<'_>, parts: &[&Subgroup]) -> Subgroup {
    an.normals().join_all(an.group(), parts.iter().copied())
}

/// Theorem A on this instance. The hypothesis is the weak flag under
/// `variant`.
pub fn verify_theorem_a(an: &Analysis<'_>, variant: SubnormalVariant) -> Result<TheoremReport> {
    let classification = classify::classify_sigma(an, variant);
    if !classification.weak {
        return Ok(TheoremReport {
            theorem: Theorem::A,
            hypothesis_holds: false,
            hypothesis_reason: "not weakly semi-σ-nilpotent".into(),
            classification,
            hall_system: None,
            clauses: Vec::new(),
        });
    }
    let g = an.group();
    let sigma = an.sigma();
    let whole = Subgroup::whole(g);
    let sigma_nilpotent = classification.sigma_nilpotent;
    let f_sigma = an.sigma_fitting()?.clone();
    let z_sigma = an.sigma_hypercentre().clone();
    let mut clauses = Vec::new();

    let search = find_hall_system(an);
    let system = match &search {
        HallSearch::Found(s) => Some(s.clone()),
        _ => None,
    };
    clauses.push(match &search {
        // {1} is a complete Hall σ-set of the trivial group, with t = r = 1
        HallSearch::Found(_) if g.order() == 1 => {
            ClauseResult::new("A(i)", Verdict::Pass, "G = 1, Hall set {1}", alloc::vec![whole.clone()])
        }
        HallSearch::Found(s) => ClauseResult::check(
            "A(i)",
            s.r >= 1,
            alloc::format!("t = {}, r = {}", s.members.len(), s.r),
            s.members.iter().map(|(_, h)| h.clone()).collect(),
        ),
        HallSearch::Missing(why) => ClauseResult::new("A(i)", Verdict::Fail, why.clone(), Vec::new()),
        HallSearch::Capped => ClauseResult::new(
            "A(i)",
            Verdict::Inconclusive,
            alloc::format!("capped after {MAX_HALL_FAMILIES} candidate families"),
            Vec::new(),
        ),
    });

    clauses.push(match &system {
        _ if sigma_nilpotent => ClauseResult::new("A(ii)", Verdict::Vacuous, "G is σ-nilpotent", Vec::new()),
        None => ClauseResult::new("A(ii)", Verdict::Inconclusive, "no Hall system", Vec::new()),
        Some(s) if s.r == s.members.len() => ClauseResult::new(
            "A(ii)",
            Verdict::Vacuous,
            "every Hall member is normal (r = t)",
            Vec::new(),
        ),
        Some(s) => {
            let norms: Vec<usize> = s.members[s.r..]
                .iter()
                .map(|(_, h)| an.normalizer(an.index(h)))
                .collect();
            let bad = norms.iter().find(|&&n| !an.is_sigma_carter(n));
            ClauseResult::check(
                "A(ii)",
                bad.is_none(),
                match bad {
                    None => "every N_G(H_i), i > r, is σ-Carter".into(),
                    Some(_) => String::from("normalizer of a non-normal Hall member is not σ-Carter"),
                },
                norms.iter().map(|&n| an.subgroup(n).clone()).collect(),
            )
        }
    });

    clauses.push(match &system {
        None => ClauseResult::new("A(iii)", Verdict::Inconclusive, "no Hall system", Vec::new()),
        Some(s) => {
            let normal: Vec<&Subgroup> = s.members[..s.r].iter().map(|(_, h)| h).collect();
            let f0 = join(an, &normal);
            let maximal = an.is_maximal_sigma_nilpotent(an.index(&f_sigma));
            let product = join(an, &[&f0, &z_sigma]);
            ClauseResult::check(
                "A(iii)",
                maximal && product == f_sigma,
                alloc::format!(
                    "|F_σ| = {}, |F_0σ| = {}, |Z_σ| = {}, maximal = {maximal}",
                    f_sigma.order(),
                    f0.order(),
                    z_sigma.order()
                ),
                alloc::vec![f_sigma.clone(), f0, z_sigma.clone()],
            )
        }
    });

    let vs: Vec<usize> = an
        .maximal_sigma_nilpotent()
        .into_iter()
        .filter(|&v| f_sigma.product_size(an.subgroup(v)) == g.order())
        .collect();
    clauses.push(if vs.is_empty() {
        ClauseResult::new(
            "A(iv)",
            Verdict::Vacuous,
            "no maximal σ-nilpotent V with G = F_σ V",
            Vec::new(),
        )
    } else {
        let bad = vs
            .iter()
            .copied()
            .find(|&v| subgroup::core(g, an.subgroup(v)) != z_sigma);
        ClauseResult::check(
            "A(iv)",
            bad.is_none(),
            alloc::format!("{} subgroups V checked", vs.len()),
            match bad {
                Some(v) => alloc::vec![an.subgroup(v).clone()],
                None => Vec::new(),
            },
        )
    });

    let fit = an.fitting()?;
    clauses.push(ClauseResult::check(
        "A(v)",
        sigma::is_sigma_nilpotent_section(g, &whole, &fit, sigma),
        alloc::format!("|F(G)| = {}", fit.order()),
        alloc::vec![fit],
    ));

    Ok(TheoremReport {
        theorem: Theorem::A,
        hypothesis_holds: true,
        hypothesis_reason: "weakly semi-σ-nilpotent".into(),
        classification,
        hall_system: system,
        clauses,
    })
}

/// The side condition of Theorem B: for every non-normal Hall member `H_i`
/// and every Schmidt subgroup `A ≤ H_i`, the non-normal Sylow subgroups of
/// `A` have prime order. Returns a violating `A` if there is one.
pub fn check_theorem_b_hypothesis(an: &Analysis<'_>) -> Result<Option<Subgroup>> {
    let n = an.group().order() as u64;
    let sigma = an.sigma();
    let mut halls: Vec<usize> = Vec::new();
    for b in sigma.sigma_of(n) {
        let cands: Vec<usize> = an.members_of_order(sigma.part(n, b) as usize).collect();
        if !cands.iter().any(|&i| an.is_normal(i)) {
            halls.extend(cands);
        }
    }
    if halls.is_empty() {
        return Ok(None);
    }
    let nil = classify::nilpotent_flags(an);
    for a in classify::schmidt_members(an, &nil) {
        let sa = an.subgroup(a);
        if !halls.iter().any(|&h| sa.is_subgroup_of(an.subgroup(h))) {
            continue;
        }
        let s = classify::member_schmidt(an, a)?
            .ok_or_else(|| Error::InternalInconsistency("Schmidt member failed the Schmidt test".into()))?;
        // P is normal in A; the Sylow q-subgroups are not
        if !crate::arith::is_prime(s.q_subgroup.order() as u64) {
            return Ok(Some(sa.clone()));
        }
    }
    Ok(None)
}

fn is_abelian_quotient(an: &Analysis<'_>, n: &Subgroup) -> bool {
    let g = an.group();
    subgroup::derived_subgroup(g, &Subgroup::whole(g)).is_subgroup_of(n)
}

fn is_cyclic_quotient(an: &Analysis<'_>, n: &Subgroup) -> bool {
    let g = an.group();
    let index = g.order() / n.order();
    index == 1 || (0..g.order()).any(|x| sigma::coset_order(g, x, n) == index)
}

/// Theorem B on this instance. The hypothesis is the semi flag plus
/// [`check_theorem_b_hypothesis`].
pub fn verify_theorem_b(an: &Analysis<'_>) -> Result<TheoremReport> {
    let classification = classify::classify_sigma(an, SubnormalVariant::Classic);
    let fail = |reason: String, classification| {
        Ok(TheoremReport {
            theorem: Theorem::B,
            hypothesis_holds: false,
            hypothesis_reason: reason,
            classification,
            hall_system: None,
            clauses: Vec::new(),
        })
    };
    if !classification.semi {
        return fail("not semi-σ-nilpotent".into(), classification);
    }
    if let Some(a) = check_theorem_b_hypothesis(an)? {
        return fail(
            alloc::format!(
                "Schmidt subgroup of order {} in a non-normal Hall member has a non-normal Sylow subgroup of non-prime order",
                a.order()
            ),
            classification,
        );
    }
    let g = an.group();
    let f_sigma = an.sigma_fitting()?.clone();
    let z_sigma = an.sigma_hypercentre().clone();
    let system = match find_hall_system(an) {
        HallSearch::Found(s) => Some(s),
        _ => None,
    };
    let mut clauses = Vec::new();

    clauses.push(ClauseResult::check(
        "B(i)",
        is_abelian_quotient(an, &f_sigma),
        alloc::format!("|G/F_σ| = {}", g.order() / f_sigma.order()),
        alloc::vec![f_sigma.clone()],
    ));

    let us: Vec<usize> = an
        .maximal_sigma_nilpotent()
        .into_iter()
        .filter(|&u| !an.is_normal(u))
        .collect();
    clauses.push(if us.is_empty() {
        ClauseResult::new(
            "B(ii)",
            Verdict::Vacuous,
            "no maximal σ-nilpotent non-normal subgroup",
            Vec::new(),
        )
    } else {
        let bad = us
            .iter()
            .copied()
            .find(|&u| !an.is_sigma_carter(u) || subgroup::core(g, an.subgroup(u)) != z_sigma);
        ClauseResult::check(
            "B(ii)",
            bad.is_none(),
            alloc::format!("{} subgroups U checked", us.len()),
            match bad {
                Some(u) => alloc::vec![an.subgroup(u).clone()],
                None => us.iter().map(|&u| an.subgroup(u).clone()).collect(),
            },
        )
    });

    let normal_halls: Vec<Subgroup> = match &system {
        Some(s) => s.members[..s.r].iter().map(|(_, h)| h.clone()).collect(),
        None => {
            let n = g.order() as u64;
            an.sigma()
                .sigma_of(n)
                .into_iter()
                .filter_map(|b| {
                    an.members_of_order(an.sigma().part(n, b) as usize)
                        .find(|&i| an.is_normal(i))
                        .map(|i| an.subgroup(i).clone())
                })
                .collect()
        }
    };
    clauses.push(
        if normal_halls
            .iter()
            .all(|h| crate::classical::is_nilpotent_subgroup(g, h))
        {
            ClauseResult::check(
                "B(iii)",
                is_cyclic_quotient(an, &f_sigma),
                alloc::format!("|G/F_σ| = {}", g.order() / f_sigma.order()),
                Vec::new(),
            )
        } else {
            ClauseResult::new(
                "B(iii)",
                Verdict::Vacuous,
                "a normal Hall member is not nilpotent",
                normal_halls,
            )
        },
    );

    clauses.push(heredity(an)?);

    Ok(TheoremReport {
        theorem: Theorem::B,
        hypothesis_holds: true,
        hypothesis_reason:
            "semi-σ-nilpotent and Schmidt subgroups of non-normal Hall members have prime-order non-normal Sylows"
                .into(),
        classification,
        hall_system: system,
        clauses,
    })
}

/// Clause B(iv): every subgroup and every quotient is semi-σ-nilpotent.
fn heredity(an: &Analysis<'_>) -> Result<ClauseResult> {
    let g = an.group();
    for s in 1..an.top() {
        if !classify::member_is_semi(an, s) {
            return Ok(ClauseResult::check(
                "B(iv)",
                false,
                "a subgroup is not semi-σ-nilpotent",
                alloc::vec![an.subgroup(s).clone()],
            ));
        }
    }
    let normals = an.normals();
    for n in normals.list.iter().filter(|n| !n.is_trivial() && !n.is_whole()) {
        let (q, _) = g.quotient(n)?;
        let qa = Analysis::new(&q, an.sigma().clone(), *an.limits())?;
        if !classify::classify_sigma(&qa, SubnormalVariant::Classic).semi {
            return Ok(ClauseResult::check(
                "B(iv)",
                false,
                "a quotient is not semi-σ-nilpotent",
                alloc::vec![n.clone()],
            ));
        }
    }
    Ok(ClauseResult::check(
        "B(iv)",
        true,
        alloc::format!(
            "{} subgroups and {} quotients checked",
            an.lattice().len(),
            normals.len()
        ),
        Vec::new(),
    ))
}

pub fn verify(an: &Analysis<'_>, theorem: Theorem, variant: SubnormalVariant) -> Result<TheoremReport> {
    match theorem {
        Theorem::A => verify_theorem_a(an, variant),
        Theorem::B => verify_theorem_b(an),
    }
}
