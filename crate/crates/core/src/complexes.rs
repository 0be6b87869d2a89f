//! Matroid types of faces and the Bergman complex.
//!
//! A weight vector `ω` selects the bases maximizing `Σ_{i∈b} ω_i`; that
//! sub-family is the matroid type `M_ω`. The Bergman complex is the poset of
//! loopless matroid types ordered by reverse inclusion of basis families.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::decomposition::partition_from_vertices;
use crate::error::{Error, Result};
use crate::lattice::FlatLattice;
use crate::linalg::integer_rank;
use crate::matroid::Matroid;
use crate::subset::GroundSubset;

/// Integer weights, one per ground element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    /// `Σ λ_F e_F`.
    pub fn from_flats(n: usize, terms: &[(GroundSubset, i64)]) -> Self {
        let mut w = vec![0; n];
        for &(f, lambda) in terms {
            for i in f.iter() {
                w[i] += lambda;
            }
        }
        WeightVector(w)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, b: GroundSubset) -> i64 {
        b.iter().map(|i| self.0[i]).sum()
    }
}

/// A sub-family of the bases of `parent`, in canonical order.
#[derive(Debug, Clone)]
pub struct MatroidType<'m> {
    parent: &'m Matroid,
    bases: Vec<GroundSubset>,
    loopless: bool,
}

impl PartialEq for MatroidType<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.bases == other.bases
    }
}

impl Eq for MatroidType<'_> {}

impl<'m> MatroidType<'m> {
    fn new(parent: &'m Matroid, bases: Vec<GroundSubset>) -> Self {
        let covered = bases.iter().fold(GroundSubset::EMPTY, |a, b| a.union(*b));
        let loopless = !bases.is_empty() && covered == parent.ground_set();
        MatroidType {
            parent,
            bases,
            loopless,
        }
    }

    pub fn parent(&self) -> &'m Matroid {
        self.parent
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    pub fn into_bases(self) -> Vec<GroundSubset> {
        self.bases
    }

    /// True when no basis of the parent satisfies the constraints.
    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn is_loopless(&self) -> bool {
        self.loopless
    }

    /// The type as a matroid on the parent's ground set.
    ///
    /// Panics on an empty type.
    pub fn to_matroid(&self) -> Matroid {
        assert!(!self.bases.is_empty(), "empty matroid type");
        Matroid::from_bases(self.parent.n(), self.bases.clone())
            .expect("faces of a matroid polytope are matroid polytopes")
    }

    pub fn component_count(&self) -> usize {
        self.to_matroid().component_count()
    }

    /// `|A ∩ b| = rank(A)` for every basis `b` of the type.
    pub fn has_full_omega_rank(&self, a: GroundSubset) -> bool {
        let r = self.parent.rank_of(a);
        self.bases.iter().all(|b| b.intersection(a).len() == r)
    }
}

/// Exact argmax of the linear functional over the explicit basis list.
pub fn matroid_type_oracle<'m>(m: &'m Matroid, w: &WeightVector) -> Result<MatroidType<'m>> {
    if w.len() != m.n() {
        return Err(Error::WeightLength {
            expected: m.n(),
            found: w.len(),
        });
    }
    let best = m.bases().iter().map(|&b| w.evaluate(b)).max().unwrap_or(0);
    let bases = m
        .bases()
        .iter()
        .copied()
        .filter(|&b| w.evaluate(b) == best)
        .collect();
    Ok(MatroidType::new(m, bases))
}

/// `{b ∈ M : |b ∩ F| = rank(F) for all F ∈ Γ}`. May be empty.
pub fn matroid_type_from_flats<'m>(
    m: &'m Matroid,
    gamma: &[GroundSubset],
) -> Result<MatroidType<'m>> {
    if let Some(&f) = gamma.iter().find(|&&f| !f.fits(m.n()) || !m.is_flat(f)) {
        return Err(Error::NotAFlat(f));
    }
    Ok(tight_type(m, gamma))
}

fn tight_type<'m>(m: &'m Matroid, gamma: &[GroundSubset]) -> MatroidType<'m> {
    let ranks: Vec<(GroundSubset, usize)> = gamma.iter().map(|&f| (f, m.rank_of(f))).collect();
    let bases = m
        .bases()
        .iter()
        .copied()
        .filter(|b| ranks.iter().all(|&(f, r)| b.intersection(f).len() == r))
        .collect();
    MatroidType::new(m, bases)
}

pub fn has_full_omega_rank(t: &MatroidType<'_>, a: GroundSubset) -> bool {
    t.has_full_omega_rank(a)
}

/// Flats that are connected and co-connected.
pub fn flacets(m: &Matroid) -> Result<Vec<GroundSubset>> {
    m.flacets()
}

/// A face of the Bergman complex: a loopless matroid type and the flacets
/// that have full rank on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergmanFace<'m> {
    pub matroid_type: MatroidType<'m>,
    pub vertices: Vec<GroundSubset>,
    /// `c(M_ω) - 2`; `-1` for the empty face.
    pub dimension: isize,
}

impl<'m> BergmanFace<'m> {
    fn from_type(matroid_type: MatroidType<'m>, flacets: &[GroundSubset]) -> Self {
        let vertices = flacets
            .iter()
            .copied()
            .filter(|&f| matroid_type.has_full_omega_rank(f))
            .collect();
        let dimension = matroid_type.component_count() as isize - 2;
        BergmanFace {
            matroid_type,
            vertices,
            dimension,
        }
    }

    pub fn is_empty_face(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Face poset of the Bergman complex. `faces[0]` is the empty face (type `M`).
#[derive(Debug, Clone)]
pub struct BergmanComplex<'m> {
    pub matroid: &'m Matroid,
    pub flacets: Vec<GroundSubset>,
    pub faces: Vec<BergmanFace<'m>>,
    /// `(i, j)` when face `i` is a facet of face `j`.
    pub covers: Vec<(usize, usize)>,
    by_type: HashMap<Vec<GroundSubset>, usize>,
}

impl<'m> BergmanComplex<'m> {
    pub fn face_with_type(&self, bases: &[GroundSubset]) -> Option<usize> {
        self.by_type.get(bases).copied()
    }

    pub fn face_with_vertices(&self, vertices: &[GroundSubset]) -> Option<usize> {
        let mut v = vertices.to_vec();
        v.sort_unstable_by_key(|f| self.flacets.iter().position(|g| g == f));
        self.faces.iter().position(|f| f.vertices == v)
    }

    /// Faces contained in no larger face.
    pub fn maximal_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| !self.covers.iter().any(|&(a, _)| a == i))
            .collect()
    }

    /// Number of maximal faces per vertex count.
    pub fn facet_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for i in self.maximal_faces() {
            *census.entry(self.faces[i].vertices.len()).or_insert(0) += 1;
        }
        census
    }

    /// Nonempty faces of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.dimension).max().unwrap_or(-1);
        let mut f = vec![0; (top + 1).max(0) as usize];
        for face in self.faces.iter().filter(|f| f.dimension >= 0) {
            f[face.dimension as usize] += 1;
        }
        f
    }

    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|f| f.dimension).max().unwrap_or(-1)
    }
}

fn require_loopless(m: &Matroid) -> Result<()> {
    match m.loops().min_element() {
        Some(x) => Err(Error::NotLoopless(x)),
        None => Ok(()),
    }
}

/// Enumerates every chain of flats, groups chains by their matroid type and
/// keeps the loopless types. Face order is by dimension, then vertex list.
pub fn bergman_complex(m: &Matroid) -> Result<BergmanComplex<'_>> {
    m.require_connected()?;
    require_loopless(m)?;
    let flacets = m.flacets()?;
    let lattice = FlatLattice::new(m);
    bergman_complex_with(m, &lattice, flacets)
}

fn bergman_complex_with<'m>(
    m: &'m Matroid,
    lattice: &FlatLattice,
    flacets: Vec<GroundSubset>,
) -> Result<BergmanComplex<'m>> {
    let chains = lattice.chains();
    let types: Vec<Vec<GroundSubset>> = chains
        .par_iter()
        .map(|chain| {
            let flats: Vec<GroundSubset> = chain.iter().map(|&i| lattice.flat(i)).collect();
            tight_type(m, &flats)
        })
        .filter(MatroidType::is_loopless)
        .map(MatroidType::into_bases)
        .collect();
    let mut distinct = types;
    distinct.sort_unstable();
    distinct.dedup();

    let mut faces: Vec<BergmanFace<'m>> = distinct
        .into_par_iter()
        .map(|bases| BergmanFace::from_type(MatroidType::new(m, bases), &flacets))
        .collect();
    let position = |f: &GroundSubset| flacets.iter().position(|g| g == f).unwrap();
    faces.sort_by(|a, b| {
        a.dimension.cmp(&b.dimension).then_with(|| {
            let ka: Vec<usize> = a.vertices.iter().map(position).collect();
            let kb: Vec<usize> = b.vertices.iter().map(position).collect();
            ka.cmp(&kb)
        })
    });

    let contains = |a: &BergmanFace<'_>, b: &BergmanFace<'_>| {
        // a ≤ b in the face poset iff M_b ⊆ M_a
        let sa = a.matroid_type.bases();
        b.matroid_type
            .bases()
            .iter()
            .all(|x| sa.binary_search(x).is_ok())
    };
    let k = faces.len();
    let below: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i != j && contains(&faces[i], &faces[j]))
                .collect()
        })
        .collect();
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if below[i][j] && !(0..k).any(|c| below[i][c] && below[c][j]) {
                covers.push((i, j));
            }
        }
    }
    let by_type = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.matroid_type.bases().to_vec(), i))
        .collect();
    Ok(BergmanComplex {
        matroid: m,
        flacets,
        faces,
        covers,
        by_type,
    })
}

/// Why a set of flacets fails to be the vertex set of a Bergman face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceRejection {
    /// The element lies in no basis of its block's summand.
    ElementUncovered { element: usize, block: GroundSubset },
    /// No basis is tight on every member of Γ.
    NoCommonBasis,
    /// This flacet outside Γ is tight on every basis tight on Γ.
    ExtraFlacet(GroundSubset),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceCheck<'m> {
    IsFace(BergmanFace<'m>),
    NotAFace(FaceRejection),
}

/// Decides whether a set of flacets is the full vertex set of a Bergman face
/// using the three combinatorial conditions on the block partition.
pub fn face_vertex_set_check<'m>(m: &'m Matroid, gamma: &[GroundSubset]) -> Result<FaceCheck<'m>> {
    let flacets = m.flacets()?;
    if let Some(&f) = gamma.iter().find(|f| !flacets.contains(f)) {
        return Err(Error::NotAFlacet(f));
    }
    let e = m.ground_set();
    let partition = partition_from_vertices(m.n(), gamma);
    for &alpha in partition.blocks() {
        let upper = gamma
            .iter()
            .filter(|f| alpha.is_subset(**f))
            .fold(e, |acc, f| acc.intersection(*f));
        let lower = upper.difference(alpha);
        let (ru, rl) = (m.rank_of(upper), m.rank_of(lower));
        for x in alpha.iter() {
            let covered = m.bases().iter().any(|b| {
                b.contains(x)
                    && b.intersection(upper).len() == ru
                    && b.intersection(lower).len() == rl
            });
            if !covered {
                return Ok(FaceCheck::NotAFace(FaceRejection::ElementUncovered {
                    element: x,
                    block: alpha,
                }));
            }
        }
    }
    let t = tight_type(m, gamma);
    if t.is_empty() {
        return Ok(FaceCheck::NotAFace(FaceRejection::NoCommonBasis));
    }
    if let Some(&extra) = flacets
        .iter()
        .find(|f| !gamma.contains(f) && t.has_full_omega_rank(**f))
    {
        return Ok(FaceCheck::NotAFace(FaceRejection::ExtraFlacet(extra)));
    }
    Ok(FaceCheck::IsFace(BergmanFace::from_type(t, &flacets)))
}

/// Face dimension from the cone spanned by the vertex incidence vectors,
/// modulo the all-ones direction.
pub fn cone_dimension(n: usize, vertices: &[GroundSubset]) -> isize {
    let mut rows: Vec<Vec<i64>> = vertices
        .iter()
        .map(|f| (0..n).map(|i| f.contains(i) as i64).collect())
        .collect();
    rows.push(vec![1; n]);
    integer_rank(&rows) as isize - 2
}

/// Outcome of a full refinement audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub chains: usize,
    pub nested_faces: usize,
    pub bergman_faces: usize,
}

/// For every chain of flats: the chain, its support nested set in the
/// minimal building set, and the Bergman face with the same type must all
/// induce the same matroid type. Every Bergman face must be reached.
pub fn refinement_audit(m: &Matroid) -> Result<AuditReport> {
    m.require_connected()?;
    require_loopless(m)?;
    let lattice = FlatLattice::new(m);
    let complex = bergman_complex_with(m, &lattice, m.flacets()?)?;
    let gmin = lattice.minimal_building_set();
    let chains = lattice.chains();

    let hits: Vec<(Vec<usize>, usize)> = chains
        .par_iter()
        .map(|chain| -> Result<(Vec<usize>, usize)> {
            let chain_flats: Vec<GroundSubset> = chain.iter().map(|&i| lattice.flat(i)).collect();
            let fail = |reason: String| Error::AuditFailure {
                chain: chain_flats.clone(),
                reason,
            };
            let support = lattice.support_nested_set(chain);
            if !lattice.is_nested(&gmin, &support)? {
                return Err(fail("support is not nested".into()));
            }
            let support_flats: Vec<GroundSubset> =
                support.iter().map(|&i| lattice.flat(i)).collect();
            let chain_type = tight_type(m, &chain_flats);
            let nested_type = tight_type(m, &support_flats);
            if chain_type != nested_type {
                return Err(fail("chain and nested set induce different types".into()));
            }
            let face = complex
                .face_with_type(chain_type.bases())
                .ok_or_else(|| fail("no Bergman face carries the chain's type".into()))?;
            let vertices = &complex.faces[face].vertices;
            let missing = chain_flats
                .iter()
                .chain(&support_flats)
                .find(|f| complex.flacets.contains(f) && !vertices.contains(f));
            if let Some(f) = missing {
                return Err(fail(format!(
                    "flacet {f} is not a vertex of the supporting face"
                )));
            }
            Ok((support, face))
        })
        .collect::<Result<_>>()?;

    let mut nested: Vec<&Vec<usize>> = hits.iter().map(|(s, _)| s).collect();
    nested.sort_unstable();
    nested.dedup();
    let mut reached = vec![false; complex.faces.len()];
    for (_, f) in &hits {
        reached[*f] = true;
    }
    if let Some(i) = reached.iter().position(|r| !r) {
        return Err(Error::AuditFailure {
            chain: complex.faces[i].vertices.clone(),
            reason: "Bergman face not supported by any chain".into(),
        });
    }
    Ok(AuditReport {
        chains: chains.len(),
        nested_faces: nested.len(),
        bergman_faces: complex.faces.len(),
    })
}
