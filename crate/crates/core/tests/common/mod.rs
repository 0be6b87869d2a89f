//! Shared instances and brute-force oracles for the integration tests.
#![allow(dead_code)]

use bergman::{GroundSubset, Matroid};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `set("1234")` is `{1,2,3,4}` in 1-based labels; `""` is empty.
pub fn set(labels: &str) -> GroundSubset {
    GroundSubset::from_indices(labels.chars().map(|c| c.to_digit(10).unwrap() as usize - 1))
}

pub fn sets(list: &[&str]) -> Vec<GroundSubset> {
    list.iter().map(|l| set(l)).collect()
}

/// Six elements, circuits 1234, 1256, 3456.
pub fn six_element() -> Matroid {
    Matroid::from_circuits(6, sets(&["1234", "1256", "3456"])).unwrap()
}

pub fn k4() -> Matroid {
    Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn instances() -> Vec<(&'static str, Matroid)> {
    vec![
        ("six-element", six_element()),
        ("U(2,4)", Matroid::uniform(2, 4).unwrap()),
        ("U(2,5)", Matroid::uniform(2, 5).unwrap()),
        ("U(3,5)", Matroid::uniform(3, 5).unwrap()),
        ("K4", k4()),
    ]
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = GroundSubset> {
    (0u32..(1 << n)).map(GroundSubset::from_bits)
}

pub fn brute_independent(m: &Matroid, a: GroundSubset) -> bool {
    m.bases().iter().any(|b| a.is_subset(*b))
}

/// Size of a largest independent subset.
pub fn brute_rank(m: &Matroid, a: GroundSubset) -> usize {
    a.subsets()
        .filter(|s| brute_independent(m, *s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_is_flat(m: &Matroid, a: GroundSubset) -> bool {
    let r = brute_rank(m, a);
    (0..m.n())
        .filter(|&x| !a.contains(x))
        .all(|x| brute_rank(m, a.with(x)) > r)
}

pub fn brute_flats(m: &Matroid) -> Vec<GroundSubset> {
    all_subsets(m.n())
        .filter(|&a| brute_is_flat(m, a))
        .collect()
}

/// Minimal dependent sets.
pub fn brute_circuits(m: &Matroid) -> Vec<GroundSubset> {
    all_subsets(m.n())
        .filter(|&c| {
            !brute_independent(m, c) && c.iter().all(|x| brute_independent(m, c.without(x)))
        })
        .collect()
}

/// Bases of `(M | upper) / lower` as maximal sets `I ⊆ upper ∖ lower` with
/// `I ∪ B_lower` independent for one fixed basis `B_lower` of `lower`.
pub fn brute_minor_bases(
    m: &Matroid,
    lower: GroundSubset,
    upper: GroundSubset,
) -> Vec<GroundSubset> {
    let b_lower = lower
        .subsets()
        .filter(|s| brute_independent(m, *s))
        .max_by_key(|s| s.len())
        .unwrap();
    let rest = upper.difference(lower);
    let indep: Vec<GroundSubset> = rest
        .subsets()
        .filter(|s| brute_independent(m, s.union(b_lower)))
        .collect();
    let top = indep.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out: Vec<GroundSubset> = indep.into_iter().filter(|s| s.len() == top).collect();
    out.sort();
    out
}

/// Components of the restriction to `a` under "share a circuit inside `a`".
pub fn brute_components(m: &Matroid, a: GroundSubset) -> Vec<GroundSubset> {
    let circuits: Vec<GroundSubset> = brute_circuits(m)
        .into_iter()
        .filter(|c| c.is_subset(a))
        .collect();
    let mut comps: Vec<GroundSubset> = a.iter().map(GroundSubset::singleton).collect();
    loop {
        let mut merged = false;
        'outer: for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                let linked = circuits
                    .iter()
                    .any(|c| !c.is_disjoint(comps[i]) && !c.is_disjoint(comps[j]));
                if linked {
                    comps[i] = comps[i].union(comps[j]);
                    comps.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    comps.sort();
    comps
}

/// Argmax of `Σ w_i` over bases by direct summation.
pub fn brute_argmax(m: &Matroid, w: &[i64]) -> Vec<GroundSubset> {
    let value =
        |b: &GroundSubset| -> i64 { (0..m.n()).filter(|&i| b.contains(i)).map(|i| w[i]).sum() };
    let best = m.bases().iter().map(value).max().unwrap();
    let mut out: Vec<GroundSubset> = m
        .bases()
        .iter()
        .copied()
        .filter(|b| value(b) == best)
        .collect();
    out.sort();
    out
}

/// `Σ λ_F e_F` with `λ_F` drawn from `1..=5`.
pub fn random_flat_weights(rng: &mut StdRng, n: usize, gamma: &[GroundSubset]) -> Vec<i64> {
    let mut w = vec![0i64; n];
    for f in gamma {
        let lambda = rng.gen_range(1..=5);
        for x in f.iter() {
            w[x] += lambda;
        }
    }
    w
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Flat, `∅ ≠ F ≠ E`, with connected restriction and contraction.
pub fn brute_is_flacet(m: &Matroid, f: GroundSubset) -> bool {
    let e = m.ground_set();
    if f.is_empty() || f == e || !brute_is_flat(m, f) {
        return false;
    }
    let contraction = Matroid::from_bases(m.n(), brute_minor_bases(m, f, e)).unwrap();
    brute_components(m, f).len() == 1 && brute_components(&contraction, e.difference(f)).len() == 1
}

/// Column matroid over GF(2); each column is a bit vector.
pub fn binary_matroid(columns: &[u32]) -> Matroid {
    let n = columns.len();
    let independent = |s: GroundSubset| {
        let mut basis: Vec<u32> = Vec::new();
        for i in s.iter() {
            let mut v = columns[i];
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v == 0 {
                return false;
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        true
    };
    let indep: Vec<GroundSubset> = all_subsets(n).filter(|&s| independent(s)).collect();
    let r = indep.iter().map(|s| s.len()).max().unwrap_or(0);
    let bases = indep.into_iter().filter(|s| s.len() == r).collect();
    Matroid::from_bases(n, bases).unwrap()
}

/// Random matroids on at most seven elements: binary, graphic and uniform.
pub fn arb_matroid() -> impl proptest::strategy::Strategy<Value = Matroid> {
    use proptest::prelude::*;
    let binary = proptest::collection::vec(0u32..16, 1..=7).prop_map(|c| binary_matroid(&c));
    let graphic = proptest::collection::vec((0usize..5, 0usize..5), 1..=7)
        .prop_map(|edges| Matroid::graphic(5, &edges).unwrap());
    let uniform = (1usize..=7)
        .prop_flat_map(|n| (0..=n, Just(n)))
        .prop_map(|(r, n)| Matroid::uniform(r, n).unwrap());
    prop_oneof![binary, graphic, uniform]
}

/// Connected loopless matroids with at least two elements.
pub fn arb_connected() -> impl proptest::strategy::Strategy<Value = Matroid> {
    use proptest::prelude::*;
    arb_matroid().prop_filter("connected and loopless", |m| {
        m.n() >= 2 && m.is_connected() && m.is_loopless()
    })
}
