//! Direct-sum decomposition of the matroid type of a face.
//!
//! For a vertex set `Γ`, the ground set splits into blocks of elements with
//! the same membership pattern across `Γ`. With `Γ_α` the vertices containing
//! block `α`, the type is the direct sum over blocks of the minors
//! `M[⋂Γ_α ∖ α, ⋂Γ_α]` (where `⋂∅ = E`).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complexes::{matroid_type_from_flats, BergmanFace};
use crate::error::{Error, Result};
use crate::lattice::FlatLattice;
use crate::matroid::{direct_sum_on, Matroid, MinorSpec};
use crate::subset::GroundSubset;

/// A set partition of the ground set, blocks ordered by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    blocks: Vec<GroundSubset>,
}

impl BlockPartition {
    /// Panics unless `blocks` are nonempty, pairwise disjoint, and cover `{0, .., n-1}`.
    pub fn new(n: usize, blocks: Vec<GroundSubset>) -> Self {
        let mut blocks = blocks;
        let mut seen = GroundSubset::EMPTY;
        for b in &blocks {
            assert!(!b.is_empty(), "empty block");
            assert!(seen.is_disjoint(*b), "blocks overlap");
            seen = seen.union(*b);
        }
        assert_eq!(
            seen,
            GroundSubset::full(n),
            "blocks do not cover the ground set"
        );
        blocks.sort_by_key(|b| b.min_element());
        BlockPartition { blocks }
    }

    pub fn blocks(&self) -> &[GroundSubset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &BlockPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset(*c)))
    }

    /// Compact notation, e.g. `1|2|34|56`.
    pub fn compact(&self) -> String {
        self.blocks
            .iter()
            .map(|b| b.compact())
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Common refinement of the two-block partitions `(F | E ∖ F)` for `F ∈ Γ`,
/// computed by grouping elements with identical membership patterns.
pub fn partition_from_vertices(n: usize, gamma: &[GroundSubset]) -> BlockPartition {
    let mut groups: BTreeMap<Vec<bool>, GroundSubset> = BTreeMap::new();
    for x in 0..n {
        let pattern = gamma.iter().map(|f| f.contains(x)).collect();
        let block = groups.entry(pattern).or_default();
        *block = block.with(x);
    }
    BlockPartition::new(n, groups.into_values().collect())
}

/// One summand `M[lower, upper]` of a decomposition, living on `block`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub block: GroundSubset,
    pub spec: MinorSpec,
    pub matroid: Matroid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub partition: BlockPartition,
    pub summands: Vec<Summand>,
    /// Direct sum of the summands, placed back on the parent ground set.
    pub reassembled: Matroid,
}

impl Decomposition {
    pub fn all_summands_connected(&self) -> bool {
        self.summands.iter().all(|s| s.matroid.is_connected())
    }
}

/// Decomposes the type of the face with vertex set `Γ` and checks that the
/// direct sum reproduces it basis for basis.
pub fn decompose_face(m: &Matroid, gamma: &[GroundSubset]) -> Result<Decomposition> {
    let matroid_type = matroid_type_from_flats(m, gamma)?;
    let e = m.ground_set();
    let partition = partition_from_vertices(m.n(), gamma);
    let mut summands = Vec::with_capacity(partition.len());
    for &block in partition.blocks() {
        let upper = gamma
            .iter()
            .filter(|f| block.is_subset(**f))
            .fold(e, |acc, f| acc.intersection(*f));
        let spec = MinorSpec::new(upper.difference(block), upper);
        summands.push(Summand {
            block,
            spec,
            matroid: m.minor(spec)?,
        });
    }
    let parts: Vec<(GroundSubset, &Matroid)> =
        summands.iter().map(|s| (s.block, &s.matroid)).collect();
    let reassembled = direct_sum_on(m.n(), &parts);
    if matroid_type.is_empty() || reassembled.bases() != matroid_type.bases() {
        return Err(Error::ReassemblyMismatch(gamma.to_vec()));
    }
    Ok(Decomposition {
        partition,
        summands,
        reassembled,
    })
}

/// Whether every summand of the face's decomposition is connected.
pub fn verify_finest(m: &Matroid, face: &BergmanFace<'_>) -> Result<bool> {
    Ok(decompose_face(m, &face.vertices)?.all_summands_connected())
}

/// Decompositions of a chain, its supporting nested set, and its supporting
/// Bergman face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarsenessReport {
    pub chain: Vec<GroundSubset>,
    pub nested_set: Vec<GroundSubset>,
    pub bergman_vertices: Vec<GroundSubset>,
    pub chain_level: Decomposition,
    pub nested_level: Decomposition,
    pub bergman_level: Decomposition,
}

impl CoarsenessReport {
    /// All three partitions coincide.
    pub fn is_flat(&self) -> bool {
        self.chain_level.partition == self.nested_level.partition
            && self.nested_level.partition == self.bergman_level.partition
    }
}

/// Checks that passing from a chain to its nested set and then to its
/// Bergman face only refines the block partition.
pub fn coarseness_chain(m: &Matroid, chain: &[GroundSubset]) -> Result<CoarsenessReport> {
    let lattice = FlatLattice::new(m);
    let flacets = m.flacets()?;
    coarseness_chain_in(m, &lattice, &flacets, chain)
}

/// Coarseness reports for every nonempty chain of proper flats.
pub fn coarseness_all(m: &Matroid) -> Result<Vec<CoarsenessReport>> {
    let lattice = FlatLattice::new(m);
    let flacets = m.flacets()?;
    lattice
        .chains()
        .par_iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let chain: Vec<GroundSubset> = c.iter().map(|&i| lattice.flat(i)).collect();
            coarseness_chain_in(m, &lattice, &flacets, &chain)
        })
        .collect()
}

pub(crate) fn coarseness_chain_in(
    m: &Matroid,
    lattice: &FlatLattice,
    flacets: &[GroundSubset],
    chain: &[GroundSubset],
) -> Result<CoarsenessReport> {
    let mut idx: Vec<usize> = chain
        .iter()
        .map(|&f| lattice.require(f))
        .collect::<Result<_>>()?;
    idx.sort_unstable();
    let proper = idx
        .iter()
        .all(|&i| i != lattice.bottom() && i != lattice.top());
    if !proper
        || idx
            .windows(2)
            .any(|w| !lattice.flat(w[0]).is_proper_subset(lattice.flat(w[1])))
    {
        return Err(Error::NotAChain(chain.to_vec()));
    }
    let chain: Vec<GroundSubset> = idx.iter().map(|&i| lattice.flat(i)).collect();
    let nested_set: Vec<GroundSubset> = lattice
        .support_nested_set(&idx)
        .into_iter()
        .map(|i| lattice.flat(i))
        .collect();
    let matroid_type = matroid_type_from_flats(m, &chain)?;
    let bergman_vertices: Vec<GroundSubset> = flacets
        .iter()
        .copied()
        .filter(|&f| matroid_type.has_full_omega_rank(f))
        .collect();

    let chain_level = decompose_face(m, &chain)?;
    let nested_level = decompose_face(m, &nested_set)?;
    let bergman_level = decompose_face(m, &bergman_vertices)?;
    let violation = |finer_level, coarser_level| Error::RefinementViolation {
        chain: chain.clone(),
        finer_level,
        coarser_level,
    };
    if !nested_level.partition.refines(&chain_level.partition) {
        return Err(violation("nested set", "chain"));
    }
    if !bergman_level.partition.refines(&nested_level.partition) {
        return Err(violation("Bergman face", "nested set"));
    }
    Ok(CoarsenessReport {
        chain,
        nested_set,
        bergman_vertices,
        chain_level,
        nested_level,
        bergman_level,
    })
}
