//! Matroids given by an explicit, validated basis family.
//!
//! Every query (rank, closure, circuits, minors) is a scan over the basis
//! list. This is intended for small ground sets where exactness matters more
//! than asymptotics.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::subset::{k_subsets, GroundSubset, MAX_GROUND};
use crate::union_find::UnionFind;

/// Largest ground set accepted by [`Matroid::from_circuits`], which walks
/// every subset of the ground set.
pub const MAX_CIRCUIT_GROUND: usize = 24;

/// A matroid on `{0, .., n-1}` stored as its sorted basis list.
///
/// `labels[i]` is the external 1-based label of element `i`. For matroids
/// built directly these are `1..=n`; minors keep the labels of the parent
/// elements they were cut from. Equality ignores labels.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<GroundSubset>,
    labels: Vec<usize>,
}

/// Bounds `F ⊆ G` of the minor `M[F, G]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    pub lower: GroundSubset,
    pub upper: GroundSubset,
}

impl MinorSpec {
    pub fn new(lower: GroundSubset, upper: GroundSubset) -> Self {
        MinorSpec { lower, upper }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

/// First witness `(b1, b2, x)` of a failure of basis exchange, if any.
///
/// `bases` must be sorted.
pub fn exchange_violation(bases: &[GroundSubset]) -> Option<(GroundSubset, GroundSubset, usize)> {
    for &b1 in bases {
        for &b2 in bases {
            if b1 == b2 {
                continue;
            }
            let only_in_b2 = b2.difference(b1);
            for x in b1.difference(b2).iter() {
                let base = b1.without(x);
                let ok = only_in_b2
                    .iter()
                    .any(|y| bases.binary_search(&base.with(y)).is_ok());
                if !ok {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

impl Matroid {
    /// Validates and canonicalizes an explicit basis family.
    pub fn from_bases(n: usize, bases: Vec<GroundSubset>) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = bases;
        if bases.is_empty() {
            if n > 0 {
                return Err(Error::EmptyBasisList(n));
            }
            bases.push(GroundSubset::EMPTY);
        }
        let full = GroundSubset::full(n);
        for b in &bases {
            if let Some(x) = b.difference(full).min_element() {
                return Err(Error::ElementOutOfRange { label: x + 1, n });
            }
        }
        let rank = bases[0].len();
        if let Some(&bad) = bases.iter().find(|b| b.len() != rank) {
            return Err(Error::UnequalCardinalities {
                basis: bad,
                expected: rank,
                found: bad.len(),
            });
        }
        bases.sort_unstable();
        bases.dedup();
        if let Some((b1, b2, x)) = exchange_violation(&bases) {
            return Err(Error::ExchangeAxiomViolated { b1, b2, x });
        }
        Ok(Matroid::from_canonical(n, rank, bases))
    }

    /// Builds from a sorted, deduplicated family already known to be a matroid.
    pub(crate) fn from_canonical(n: usize, rank: usize, bases: Vec<GroundSubset>) -> Matroid {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        Matroid {
            n,
            rank,
            bases,
            labels: (1..=n).collect(),
        }
    }

    /// Bases are the maximal subsets containing no listed circuit.
    pub fn from_circuits(n: usize, circuits: Vec<GroundSubset>) -> Result<Matroid> {
        if n > MAX_CIRCUIT_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        let full = GroundSubset::full(n);
        let mut circuits = circuits;
        for c in &circuits {
            if let Some(x) = c.difference(full).min_element() {
                return Err(Error::ElementOutOfRange { label: x + 1, n });
            }
            if c.is_empty() {
                return Err(Error::InconsistentCircuits(
                    "the empty set cannot be a circuit".into(),
                ));
            }
        }
        circuits.sort_unstable();
        circuits.dedup();
        for &a in &circuits {
            for &b in &circuits {
                if a.is_proper_subset(b) {
                    return Err(Error::NotAnAntichain {
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }

        let independent = |s: GroundSubset| circuits.iter().all(|c| !c.is_subset(s));
        let mut bases = Vec::new();
        for s in full.subsets() {
            if !independent(s) {
                continue;
            }
            let maximal = full.difference(s).iter().all(|x| !independent(s.with(x)));
            if maximal {
                bases.push(s);
            }
        }
        let m = Matroid::from_bases(n, bases).map_err(|e| match e {
            Error::UnequalCardinalities {
                basis, expected, ..
            } => Error::InconsistentCircuits(format!(
                "maximal independent sets {basis} and one of size {expected} differ in size"
            )),
            Error::ExchangeAxiomViolated { b1, b2, x } => Error::InconsistentCircuits(format!(
                "maximal independent sets {b1}, {b2} violate exchange at {}",
                x + 1
            )),
            other => other,
        })?;
        let derived = m.circuits();
        if derived != circuits {
            return Err(Error::InconsistentCircuits(format!(
                "circuit family {circuits:?} is not closed under elimination; \
                 the induced matroid has circuits {derived:?}"
            )));
        }
        Ok(m)
    }

    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        if r > n {
            return Err(Error::InvalidRank { r, n });
        }
        let bases: Vec<_> = k_subsets(n, r).collect();
        Ok(Matroid::from_canonical(n, r, bases))
    }

    /// Cycle matroid of a multigraph; ground set = edges in input order,
    /// vertices are 0-based. Bases are the spanning forests.
    pub fn graphic(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        let n = edges.len();
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= vertex_count || v >= vertex_count)
        {
            return Err(Error::ElementOutOfRange {
                label: u.max(v) + 1,
                n: vertex_count,
            });
        }
        let mut uf = UnionFind::new(vertex_count);
        let rank = edges.iter().filter(|&&(u, v)| uf.union(u, v)).count();
        let acyclic = |s: &GroundSubset| {
            let mut uf = UnionFind::new(vertex_count);
            s.iter().all(|e| uf.union(edges[e].0, edges[e].1))
        };
        let bases: Vec<_> = k_subsets(n, rank).filter(acyclic).collect();
        Ok(Matroid::from_canonical(n, rank, bases))
    }

    /// The matroid on the empty ground set.
    pub fn empty() -> Matroid {
        Matroid::from_canonical(0, 0, vec![GroundSubset::EMPTY])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn ground_set(&self) -> GroundSubset {
        GroundSubset::full(self.n)
    }

    /// Replaces the external labels. `labels` must be distinct and one per element.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Matroid {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn is_basis(&self, s: GroundSubset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_independent(&self, s: GroundSubset) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    pub fn rank_of(&self, a: GroundSubset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(a).len())
            .max()
            .unwrap_or(0)
    }

    pub fn closure(&self, a: GroundSubset) -> GroundSubset {
        let r = self.rank_of(a);
        self.ground_set()
            .difference(a)
            .iter()
            .filter(|&x| self.rank_of(a.with(x)) == r)
            .fold(a, GroundSubset::with)
    }

    pub fn is_flat(&self, a: GroundSubset) -> bool {
        self.closure(a) == a
    }

    /// Flats grouped by rank; within a rank, in increasing bit order.
    pub fn flats_by_rank(&self) -> Vec<Vec<GroundSubset>> {
        let mut layers = vec![vec![self.closure(GroundSubset::EMPTY)]];
        for _ in 0..self.rank {
            let prev = layers.last().unwrap();
            let mut next = BTreeSet::new();
            for &f in prev {
                for x in self.ground_set().difference(f).iter() {
                    next.insert(self.closure(f.with(x)));
                }
            }
            layers.push(next.into_iter().collect());
        }
        layers
    }

    /// All flats, ordered by rank and then bit pattern.
    pub fn flats(&self) -> Vec<GroundSubset> {
        self.flats_by_rank().into_iter().flatten().collect()
    }

    /// All circuits in increasing bit order.
    ///
    /// Every circuit is the fundamental circuit of some basis and outside
    /// element, so scanning `(b, x)` pairs finds them all.
    pub fn circuits(&self) -> Vec<GroundSubset> {
        let mut out = BTreeSet::new();
        for &b in &self.bases {
            for x in self.ground_set().difference(b).iter() {
                let c = b
                    .iter()
                    .filter(|&y| self.is_basis(b.without(y).with(x)))
                    .fold(GroundSubset::singleton(x), GroundSubset::with);
                out.insert(c);
            }
        }
        out.into_iter().collect()
    }

    /// `M[F, G]` on the ground set `G ∖ F`, relabeled to consecutive indices
    /// in increasing order and carrying the parent labels.
    pub fn minor(&self, spec: MinorSpec) -> Result<Matroid> {
        let MinorSpec { lower, upper } = spec;
        if !lower.is_subset(upper) {
            return Err(Error::SpecNotNested { lower, upper });
        }
        let full = self.ground_set();
        if let Some(x) = upper.difference(full).min_element() {
            return Err(Error::ElementOutOfRange {
                label: x + 1,
                n: self.n,
            });
        }
        let (rl, ru) = (self.rank_of(lower), self.rank_of(upper));
        let kept: Vec<usize> = upper.difference(lower).iter().collect();
        let compress = |s: GroundSubset| {
            GroundSubset::from_indices(
                kept.iter()
                    .enumerate()
                    .filter(|(_, &e)| s.contains(e))
                    .map(|(i, _)| i),
            )
        };
        let bases: BTreeSet<GroundSubset> = self
            .bases
            .iter()
            .filter(|b| b.intersection(lower).len() == rl && b.intersection(upper).len() == ru)
            .map(|b| compress(*b))
            .collect();
        let labels = kept.iter().map(|&e| self.labels[e]).collect();
        Ok(
            Matroid::from_canonical(kept.len(), ru - rl, bases.into_iter().collect())
                .with_labels(labels),
        )
    }

    /// `M[∅, F]`.
    pub fn restriction(&self, f: GroundSubset) -> Result<Matroid> {
        self.minor(MinorSpec::new(GroundSubset::EMPTY, f))
    }

    /// `M[F, E]`.
    pub fn contraction(&self, f: GroundSubset) -> Result<Matroid> {
        self.minor(MinorSpec::new(f, self.ground_set()))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn loops(&self) -> GroundSubset {
        let covered = self
            .bases
            .iter()
            .fold(GroundSubset::EMPTY, |acc, b| acc.union(*b));
        self.ground_set().difference(covered)
    }

    /// Classes of the "lie on a common circuit" relation, by smallest element.
    pub fn connected_components(&self) -> Vec<GroundSubset> {
        let mut uf = UnionFind::new(self.n);
        for c in self.circuits() {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for y in it {
                    uf.union(first, y);
                }
            }
        }
        uf.classes()
            .into_iter()
            .map(GroundSubset::from_indices)
            .collect()
    }

    /// Connected components of `M[F, G]`, as subsets of this matroid's
    /// ground set.
    pub fn minor_components(&self, spec: MinorSpec) -> Result<Vec<GroundSubset>> {
        let kept: Vec<usize> = spec.upper.difference(spec.lower).iter().collect();
        Ok(self
            .minor(spec)?
            .connected_components()
            .into_iter()
            .map(|c| GroundSubset::from_indices(c.iter().map(|i| kept[i])))
            .collect())
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Flats `∅ ⊊ F ⊊ E` whose restriction and contraction are both connected.
    pub fn flacets(&self) -> Result<Vec<GroundSubset>> {
        self.require_connected()?;
        let e = self.ground_set();
        let mut out = Vec::new();
        for f in self.flats() {
            if f.is_empty() || f == e {
                continue;
            }
            if self.restriction(f)?.is_connected() && self.contraction(f)?.is_connected() {
                out.push(f);
            }
        }
        Ok(out)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let components = self.component_count();
        if components > 1 {
            return Err(Error::NotConnected { components });
        }
        Ok(())
    }

    /// Inequalities `Σ_{i∈F} x_i ≤ rank(F)` for the flacets, which together
    /// with the simplex constraints cut out the matroid polytope.
    pub fn polytope_inequalities(&self) -> Result<Vec<(GroundSubset, usize)>> {
        Ok(self
            .flacets()?
            .into_iter()
            .map(|f| (f, self.rank_of(f)))
            .collect())
    }

    /// The redundant description with one inequality per flat.
    pub fn flat_inequalities(&self) -> Result<Vec<(GroundSubset, usize)>> {
        self.require_connected()?;
        Ok(self
            .flats()
            .into_iter()
            .map(|f| (f, self.rank_of(f)))
            .collect())
    }

    /// Dimension of the affine hull of the basis incidence vectors, computed
    /// exactly from the differences `e_b - e_{b0}`.
    pub fn polytope_dimension(&self) -> usize {
        let b0 = self.bases[0];
        let rows: Vec<Vec<i64>> = self.bases[1..]
            .iter()
            .map(|b| {
                (0..self.n)
                    .map(|i| b.contains(i) as i64 - b0.contains(i) as i64)
                    .collect()
            })
            .collect();
        integer_rank(&rows)
    }
}

/// Direct sum with the summands' ground sets laid out one after another.
/// Labels of the result are `1..=n`.
pub fn direct_sum(ms: &[Matroid]) -> Matroid {
    let n: usize = ms.iter().map(Matroid::n).sum();
    assert!(n <= MAX_GROUND, "direct sum exceeds {MAX_GROUND} elements");
    let rank = ms.iter().map(Matroid::rank).sum();
    let mut bases = vec![GroundSubset::EMPTY];
    let mut offset = 0;
    for m in ms {
        let shifted: Vec<GroundSubset> = m
            .bases()
            .iter()
            .map(|b| GroundSubset::from_indices(b.iter().map(|i| i + offset)))
            .collect();
        bases = bases
            .iter()
            .flat_map(|acc| shifted.iter().map(move |s| acc.union(*s)))
            .collect();
        offset += m.n();
    }
    bases.sort_unstable();
    Matroid::from_canonical(n, rank, bases)
}

/// Direct sum placed on a ground set of size `n`: the `i`-th element of a
/// summand goes to the `i`-th smallest element of its block.
///
/// Panics if blocks overlap or a block's size differs from its summand's.
pub fn direct_sum_on(n: usize, parts: &[(GroundSubset, &Matroid)]) -> Matroid {
    let mut seen = GroundSubset::EMPTY;
    let mut bases = vec![GroundSubset::EMPTY];
    let mut rank = 0;
    for &(block, m) in parts {
        assert_eq!(block.len(), m.n(), "block size differs from summand");
        assert!(seen.is_disjoint(block), "blocks overlap");
        seen = seen.union(block);
        let place: Vec<usize> = block.iter().collect();
        let mapped: Vec<GroundSubset> = m
            .bases()
            .iter()
            .map(|b| GroundSubset::from_indices(b.iter().map(|i| place[i])))
            .collect();
        bases = bases
            .iter()
            .flat_map(|acc| mapped.iter().map(move |s| acc.union(*s)))
            .collect();
        rank += m.rank();
    }
    bases.sort_unstable();
    bases.dedup();
    Matroid::from_canonical(n, rank, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(labels: &[usize]) -> GroundSubset {
        GroundSubset::from_labels(32, labels).unwrap()
    }

    fn six_element() -> Matroid {
        Matroid::from_circuits(
            6,
            vec![s(&[1, 2, 3, 4]), s(&[1, 2, 5, 6]), s(&[3, 4, 5, 6])],
        )
        .unwrap()
    }

    #[test]
    fn from_bases_accepts_u12() {
        let m = Matroid::from_bases(2, vec![s(&[1]), s(&[2])]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m, Matroid::uniform(1, 2).unwrap());
    }

    #[test]
    fn from_bases_two_parallel_elements() {
        // 2 and 3 parallel: exchange holds since {1,2} and {1,3} differ by a swap.
        assert!(exchange_violation(&[s(&[1, 2]), s(&[1, 3])]).is_none());
        let m = Matroid::from_bases(3, vec![s(&[1, 2]), s(&[1, 3])]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.circuits(), vec![s(&[2, 3])]);
    }

    #[test]
    fn from_bases_errors() {
        assert_eq!(
            Matroid::from_bases(2, vec![]),
            Err(Error::EmptyBasisList(2))
        );
        assert!(matches!(
            Matroid::from_bases(3, vec![s(&[1]), s(&[2, 3])]),
            Err(Error::UnequalCardinalities { .. })
        ));
        // {1,2}, {3,4}: removing 1 from {1,2} admits neither 3 nor 4.
        assert_eq!(
            Matroid::from_bases(4, vec![s(&[1, 2]), s(&[3, 4])]),
            Err(Error::ExchangeAxiomViolated {
                b1: s(&[1, 2]),
                b2: s(&[3, 4]),
                x: 0
            })
        );
        assert!(matches!(
            Matroid::from_bases(2, vec![s(&[3])]),
            Err(Error::ElementOutOfRange { label: 3, n: 2 })
        ));
    }

    #[test]
    fn empty_matroid() {
        let m = Matroid::from_bases(0, vec![]).unwrap();
        assert_eq!(m, Matroid::empty());
        assert_eq!(m.rank(), 0);
        assert_eq!(m.bases(), &[GroundSubset::EMPTY]);
        assert_eq!(m.component_count(), 0);
        assert!(m.is_connected());
        assert_eq!(m.polytope_dimension(), 0);
    }

    #[test]
    fn six_element_has_twelve_bases() {
        let m = six_element();
        assert_eq!(m.bases().len(), 12);
        assert_eq!(m.rank(), 4);
        let circuits = [s(&[1, 2, 3, 4]), s(&[1, 2, 5, 6]), s(&[3, 4, 5, 6])];
        let bases: Vec<_> = k_subsets(6, 4).filter(|b| !circuits.contains(b)).collect();
        assert_eq!(Matroid::from_bases(6, bases).unwrap(), m);
        assert_eq!(m.circuits(), circuits.to_vec());
    }

    #[test]
    fn from_circuits_small_cases() {
        let free = Matroid::from_circuits(3, vec![]).unwrap();
        assert_eq!(free.bases(), &[s(&[1, 2, 3])]);
        let looped = Matroid::from_circuits(3, vec![s(&[1])]).unwrap();
        assert_eq!(looped.bases(), &[s(&[2, 3])]);
        assert!(!looped.is_loopless());
    }

    #[test]
    fn from_circuits_errors() {
        assert!(matches!(
            Matroid::from_circuits(3, vec![s(&[1]), s(&[1, 2])]),
            Err(Error::NotAnAntichain { .. })
        ));
        // {1,2} and {1,3} without {2,3} breaks circuit elimination.
        assert!(matches!(
            Matroid::from_circuits(3, vec![s(&[1, 2]), s(&[1, 3])]),
            Err(Error::InconsistentCircuits(_))
        ));
        // {1,2,3} and {3,4,5}: elimination forces a circuit inside {1,2,4,5}.
        assert!(matches!(
            Matroid::from_circuits(5, vec![s(&[1, 2, 3]), s(&[3, 4, 5])]),
            Err(Error::InconsistentCircuits(_))
        ));
    }

    #[test]
    fn generators() {
        assert_eq!(Matroid::uniform(1, 2).unwrap().bases(), &[s(&[1]), s(&[2])]);
        assert_eq!(Matroid::uniform(4, 6).unwrap().bases().len(), 15);
        assert_eq!(
            Matroid::uniform(3, 2),
            Err(Error::InvalidRank { r: 3, n: 2 })
        );
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let m = Matroid::graphic(4, &k4).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 16);
        // parallel edge and self-loop
        let g = Matroid::graphic(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(g.bases(), &[s(&[1]), s(&[2])]);
        assert_eq!(g.loops(), s(&[3]));
    }

    #[test]
    fn rank_and_closure_on_six_element() {
        let m = six_element();
        assert_eq!(m.rank_of(s(&[1, 2, 3, 4])), 3);
        assert_eq!(m.rank_of(GroundSubset::EMPTY), 0);
        assert_eq!(m.rank_of(s(&[1, 2, 3])), 3);
        assert_eq!(m.closure(s(&[1, 2, 3])), s(&[1, 2, 3, 4]));
        assert_eq!(m.closure(s(&[1, 2])), s(&[1, 2]));
        assert_eq!(m.closure(m.ground_set()), m.ground_set());
        assert_eq!(m.closure(GroundSubset::EMPTY), GroundSubset::EMPTY);
    }

    #[test]
    fn flats_match_brute_force() {
        let m = six_element();
        let brute: Vec<GroundSubset> = {
            let mut v: Vec<_> = m
                .ground_set()
                .subsets()
                .filter(|&a| m.closure(a) == a)
                .collect();
            v.sort_by_key(|f| (m.rank_of(*f), *f));
            v
        };
        assert_eq!(m.flats(), brute);
        let layers = m.flats_by_rank();
        assert_eq!(layers[1], (1..=6).map(|i| s(&[i])).collect::<Vec<_>>());
        // brute-force count: 1 + 6 + 15 + (3 circuit flats + 8 other rank-3 flats) + 1
        assert_eq!(brute.len(), 34);
    }

    #[test]
    fn minors_of_six_element() {
        let m = six_element();
        assert_eq!(
            m.minor(MinorSpec::new(GroundSubset::EMPTY, m.ground_set()))
                .unwrap(),
            m
        );
        let c = m
            .minor(MinorSpec::new(s(&[1, 2]), s(&[1, 2, 3, 4])))
            .unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.labels(), &[3, 4]);
        assert_eq!(c, Matroid::uniform(1, 2).unwrap());
        let r = m.restriction(s(&[1, 2, 3, 4])).unwrap();
        assert_eq!(r, Matroid::uniform(3, 4).unwrap());
        assert!(matches!(
            m.minor(MinorSpec::new(s(&[5]), s(&[1, 2]))),
            Err(Error::SpecNotNested { .. })
        ));
    }

    #[test]
    fn direct_sums() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        assert_eq!(direct_sum(std::slice::from_ref(&u11)), u11);
        let u12 = Matroid::uniform(1, 2).unwrap();
        let d = direct_sum(&[u12.clone(), u12]);
        assert_eq!(d.bases().len(), 4);
        assert_eq!(d.connected_components(), vec![s(&[1, 2]), s(&[3, 4])]);
        assert_eq!(d.polytope_dimension(), 2);
    }

    #[test]
    fn connectivity() {
        assert!(six_element().is_connected());
        let u22 = Matroid::uniform(2, 2).unwrap();
        assert_eq!(u22.component_count(), 2);
        assert_eq!(u22.polytope_dimension(), 0);
        assert_eq!(six_element().polytope_dimension(), 5);
        let tri = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.circuits(), vec![s(&[1, 2, 3])]);
        assert_eq!(
            Matroid::uniform(2, 3).unwrap().circuits(),
            vec![s(&[1, 2, 3])]
        );
    }

    #[test]
    fn inequalities() {
        let m = six_element();
        let ineq = m.polytope_inequalities().unwrap();
        assert_eq!(ineq.len(), 9);
        assert_eq!(
            ineq.iter().filter(|(f, r)| f.len() == 1 && *r == 1).count(),
            6
        );
        assert_eq!(
            ineq.iter().filter(|(f, r)| f.len() == 4 && *r == 3).count(),
            3
        );
        // 1 and 2 are parallel, so no singleton is a flat; only E remains.
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(u12.polytope_inequalities().unwrap().is_empty());
        assert_eq!(
            u12.flat_inequalities().unwrap(),
            vec![(GroundSubset::EMPTY, 0), (s(&[1, 2]), 1)]
        );
        assert!(matches!(
            Matroid::uniform(2, 2).unwrap().polytope_inequalities(),
            Err(Error::NotConnected { components: 2 })
        ));
    }
}
