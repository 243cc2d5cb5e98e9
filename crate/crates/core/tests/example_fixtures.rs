//! The three large fixtures: `B×R`, `B×C` and `G360`.

use sigmanil::analysis::Analysis;
use sigmanil::classify::{self, SubnormalVariant};
use sigmanil::theorems::{self, Verdict};
use sigmanil::{Action, Group, Limits, PrimePartition, Remainder};

fn lim() -> Limits {
    Limits::default()
}

fn sd(n: &Group, h: &Group, maps: Vec<(usize, Vec<usize>)>) -> Group {
    Group::semidirect_product(n, h, &Action { generator_maps: maps }, &lim()).unwrap()
}

fn b() -> Group {
    let mul2: Vec<usize> = (0..23).map(|i| 2 * i % 23).collect();
    sd(&Group::cyclic(23), &Group::cyclic(11), vec![(1, mul2)])
}

fn c() -> Group {
    sd(
        &Group::cyclic(7),
        &Group::cyclic(3),
        vec![(1, vec![0, 2, 4, 6, 1, 3, 5])],
    )
}

fn g360() -> Group {
    let v = Group::direct_product(&Group::cyclic(3), &Group::cyclic(3), &lim()).unwrap();
    let q8 = Group::quaternion(8).unwrap();
    let m = sd(
        &v,
        &q8,
        vec![
            (1, vec![0, 6, 3, 1, 7, 4, 2, 8, 5]),
            (4, vec![0, 5, 7, 4, 6, 2, 8, 1, 3]),
        ],
    );
    Group::direct_product(&Group::cyclic(5), &m, &lim()).unwrap()
}

fn sigma(blocks: &[u64]) -> PrimePartition {
    PrimePartition::new(blocks.iter().map(|&p| vec![p]).collect(), Remainder::CoBlock).unwrap()
}

#[test]
fn b_times_r() {
    let g = Group::direct_product(&b(), &Group::quaternion(8).unwrap(), &lim()).unwrap();
    assert_eq!(g.order(), 2024);
    let an = Analysis::new(&g, sigma(&[23, 11]), lim()).unwrap();
    let r = classify::classify_sigma(&an, SubnormalVariant::Classic);
    assert!(!r.sigma_nilpotent);
    assert!(r.semi && r.weak);
    let a = theorems::verify_theorem_a(&an, SubnormalVariant::Classic).unwrap();
    assert!(a.hypothesis_holds);
    assert!(a.all_pass_or_vacuous(), "{:?}", a.clauses);
    let bt = theorems::verify_theorem_b(&an).unwrap();
    assert!(bt.hypothesis_holds, "{}", bt.hypothesis_reason);
    assert!(
        bt.clauses.iter().all(|c| c.verdict == Verdict::Pass),
        "{:?}",
        bt.clauses
    );
}

#[test]
fn b_times_c() {
    let g = Group::direct_product(&b(), &c(), &lim()).unwrap();
    assert_eq!(g.order(), 5313);
    let an = Analysis::new(&g, sigma(&[23, 11]), lim()).unwrap();
    let r = classify::classify_sigma(&an, SubnormalVariant::Classic);
    assert!(!r.semi);
    let w = r.witness_semi.unwrap();
    assert!(!an.is_sigma_nilpotent(an.index(&w.normalizer)));
}

#[test]
fn g360_is_weak_not_semi() {
    let g = g360();
    assert_eq!(g.order(), 360);
    let an = Analysis::new(&g, sigma(&[5, 3]), lim()).unwrap();
    let r = classify::classify_sigma(&an, SubnormalVariant::Classic);
    assert!(r.weak && !r.semi);
    assert_eq!(
        classify::classify_full_definition(&an, SubnormalVariant::Classic),
        (false, true)
    );
}
