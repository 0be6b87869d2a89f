//! The geometric lattice of flats, building sets, nested sets, and the
//! simplicial complexes built from them.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MinorSpec};
use crate::subset::GroundSubset;

/// All flats of a matroid ordered by inclusion.
///
/// Flats are indexed by rank and then bit pattern, so index order is a linear
/// extension of the lattice order.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    matroid: Matroid,
    flats: Vec<GroundSubset>,
    ranks: Vec<usize>,
    by_rank: Vec<Vec<usize>>,
    covers: Vec<(usize, usize)>,
    connected: Vec<bool>,
    index: HashMap<GroundSubset, usize>,
}

impl FlatLattice {
    pub fn new(matroid: &Matroid) -> FlatLattice {
        let layers = matroid.flats_by_rank();
        let mut flats: Vec<GroundSubset> = Vec::new();
        let mut ranks = Vec::new();
        let mut by_rank: Vec<Vec<usize>> = Vec::new();
        for (r, layer) in layers.iter().enumerate() {
            by_rank.push((flats.len()..flats.len() + layer.len()).collect());
            flats.extend_from_slice(layer);
            ranks.extend(std::iter::repeat_n(r, layer.len()));
        }
        let index: HashMap<_, _> = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect();

        // In a geometric lattice F ⋖ G iff F ⊂ G and rank(G) = rank(F) + 1.
        let mut covers = Vec::new();
        for r in 1..by_rank.len() {
            for &g in &by_rank[r] {
                for &f in &by_rank[r - 1] {
                    if flats[f].is_subset(flats[g]) {
                        covers.push((f, g));
                    }
                }
            }
        }

        let bottom = flats[0];
        let connected = flats
            .iter()
            .map(|&f| {
                matroid
                    .minor(MinorSpec::new(bottom, f))
                    .expect("bottom lies below every flat")
                    .is_connected()
            })
            .collect();

        FlatLattice {
            matroid: matroid.clone(),
            flats,
            ranks,
            by_rank,
            covers,
            connected,
            index,
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[GroundSubset] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> GroundSubset {
        self.flats[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn by_rank(&self) -> &[Vec<usize>] {
        &self.by_rank
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn index_of(&self, f: GroundSubset) -> Option<usize> {
        self.index.get(&f).copied()
    }

    /// Index of `f`, or `NotAFlat`.
    pub fn require(&self, f: GroundSubset) -> Result<usize> {
        self.index_of(f).ok_or(Error::NotAFlat(f))
    }

    /// Whether the interval `[0̂, F]` is connected, i.e. the restriction to
    /// `F` (with the loops contracted) is a connected matroid.
    pub fn is_connected_flat(&self, i: usize) -> bool {
        self.connected[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.flats[a].is_subset(self.flats[b])
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn atoms(&self) -> &[usize] {
        self.by_rank.get(1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Flats other than `0̂` and `1̂`.
    pub fn proper_part(&self) -> Vec<usize> {
        if self.len() < 2 {
            return Vec::new();
        }
        (1..self.top()).collect()
    }

    /// Closure of the union; the empty join is `0̂`.
    pub fn join(&self, xs: &[usize]) -> usize {
        let union = xs.iter().fold(self.flats[self.bottom()], |acc, &i| {
            acc.union(self.flats[i])
        });
        self.index[&self.matroid.closure(union)]
    }

    /// Intersection; the empty meet is `1̂`.
    pub fn meet(&self, xs: &[usize]) -> usize {
        let inter = xs.iter().fold(self.flats[self.top()], |acc, &i| {
            acc.intersection(self.flats[i])
        });
        self.index[&inter]
    }

    /// `[0̂, X]` in index order.
    pub fn interval_below(&self, x: usize) -> Vec<usize> {
        (0..=x).filter(|&i| self.leq(i, x)).collect()
    }

    pub fn incidence_vector(&self, i: usize) -> Vec<i64> {
        incidence_vector(self.matroid.n(), self.flats[i])
    }

    /// Connected components of `F`, each as a flat index. These are the
    /// connected flats whose join-decomposition gives `F`.
    pub fn components_of(&self, i: usize) -> Vec<usize> {
        let spec = MinorSpec::new(self.flats[self.bottom()], self.flats[i]);
        let loops = self.flats[self.bottom()];
        self.matroid
            .minor_components(spec)
            .expect("bottom lies below every flat")
            .into_iter()
            .map(|c| self.index[&self.matroid.closure(c.union(loops))])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Connected components of every chain element, i.e. the nested set of the
    /// minimal building set supporting the chain.
    pub fn support_nested_set(&self, chain: &[usize]) -> Vec<usize> {
        chain
            .iter()
            .flat_map(|&f| self.components_of(f))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// The literal test of the building-set definition. Returns the first
    /// `X > 0̂` (in index order) where the join map from the product of lower
    /// intervals fails to be a poset isomorphism.
    pub fn building_set_counterexample(&self, members: &[usize]) -> Option<usize> {
        if let Some(&m) = members.iter().find(|&&m| m == self.bottom()) {
            return Some(m);
        }
        (1..self.len()).find(|&x| !self.factors_as_product(members, x))
    }

    pub fn is_building_set(&self, members: &[usize]) -> bool {
        self.building_set_counterexample(members).is_none()
    }

    fn factors_as_product(&self, members: &[usize], x: usize) -> bool {
        let below: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&g| self.leq(g, x))
            .collect();
        let maxes: Vec<usize> = below
            .iter()
            .copied()
            .filter(|&g| !below.iter().any(|&h| h != g && self.leq(g, h)))
            .collect();
        let factors: Vec<Vec<usize>> = maxes.iter().map(|&g| self.interval_below(g)).collect();
        let target = self.interval_below(x);
        let product_size: usize = factors.iter().map(Vec::len).product();
        if product_size != target.len() {
            return false;
        }

        let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(product_size);
        let mut images = Vec::with_capacity(product_size);
        let mut seen = HashSet::new();
        let mut odometer = vec![0usize; factors.len()];
        loop {
            let tuple: Vec<usize> = odometer.iter().zip(&factors).map(|(&k, f)| f[k]).collect();
            let image = self.join(&tuple);
            if !seen.insert(image) {
                return false;
            }
            tuples.push(tuple);
            images.push(image);
            let mut pos = 0;
            while pos < factors.len() {
                odometer[pos] += 1;
                if odometer[pos] < factors[pos].len() {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
            if pos == factors.len() {
                break;
            }
        }

        // Injective with equal sizes, hence bijective. Joins are monotone, so
        // the map preserves order; check that it reflects order too.
        for (s, &is) in tuples.iter().zip(&images) {
            for (t, &it) in tuples.iter().zip(&images) {
                let tuple_leq = s.iter().zip(t).all(|(&a, &b)| self.leq(a, b));
                if self.leq(is, it) != tuple_leq {
                    return false;
                }
            }
        }
        true
    }

    /// `L ∖ {0̂}`.
    pub fn maximal_building_set(&self) -> BuildingSet {
        BuildingSet {
            members: (1..self.len()).collect(),
            top: self.top(),
        }
    }

    /// Connected flats above `0̂`, plus `1̂`.
    pub fn minimal_building_set(&self) -> BuildingSet {
        let mut members: Vec<usize> = (1..self.len()).filter(|&i| self.connected[i]).collect();
        if self.len() > 1 && members.last() != Some(&self.top()) {
            members.push(self.top());
        }
        BuildingSet {
            members,
            top: self.top(),
        }
    }

    /// Checks an arbitrary member list against the definition.
    pub fn building_set(&self, members: Vec<usize>) -> Result<BuildingSet> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if let Some(x) = self.building_set_counterexample(&members) {
            return Err(Error::NotABuildingSet(self.flats[x]));
        }
        Ok(BuildingSet {
            members,
            top: self.top(),
        })
    }

    /// Whether every antichain of two or more members of `s` has its join
    /// outside the building set.
    pub fn is_nested(&self, g: &BuildingSet, s: &[usize]) -> Result<bool> {
        if let Some(&x) = s.iter().find(|&&x| !g.contains(x)) {
            return Err(Error::MemberNotInBuildingSet(self.flats[x]));
        }
        let k = s.len();
        if k > 24 {
            return Err(Error::GroundSetTooLarge(k));
        }
        for mask in 1u32..(1 << k) {
            if mask.count_ones() < 2 {
                continue;
            }
            let picked: Vec<usize> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| s[i])
                .collect();
            let antichain = picked
                .iter()
                .enumerate()
                .all(|(i, &a)| picked[i + 1..].iter().all(|&b| !self.comparable(a, b)));
            if antichain && g.contains(self.join(&picked)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Nested subsets of `G ∖ {1̂}` (the link of the cone apex `1̂`).
    pub fn nested_set_complex(&self, g: &BuildingSet) -> Result<SimplicialComplex> {
        if !g.contains(self.top()) {
            return Err(Error::TopMissing);
        }
        let vertices: Vec<usize> = g
            .members
            .iter()
            .copied()
            .filter(|&v| v != self.top())
            .collect();
        let mut faces = Vec::new();
        let mut current = Vec::new();
        self.extend_nested(g, &vertices, 0, &mut current, &mut faces);
        Ok(SimplicialComplex::new(
            vertices.iter().map(|&v| self.flats[v]).collect(),
            faces,
        ))
    }

    fn extend_nested(
        &self,
        g: &BuildingSet,
        vertices: &[usize],
        start: usize,
        current: &mut Vec<usize>,
        faces: &mut Vec<Vec<usize>>,
    ) {
        for pos in start..vertices.len() {
            let v = vertices[pos];
            let chosen: Vec<usize> = current.iter().map(|&p| vertices[p]).collect();
            if !self.compatible(g, &chosen, v) {
                continue;
            }
            current.push(pos);
            faces.push(current.clone());
            self.extend_nested(g, vertices, pos + 1, current, faces);
            current.pop();
        }
    }

    /// Whether `S ∪ {v}` stays nested given that `S` is. Only antichains that
    /// contain `v` need checking.
    fn compatible(&self, g: &BuildingSet, nested: &[usize], v: usize) -> bool {
        let incomparable: Vec<usize> = nested
            .iter()
            .copied()
            .filter(|&x| !self.comparable(x, v))
            .collect();
        let k = incomparable.len();
        for mask in 1u32..(1 << k) {
            let mut picked: Vec<usize> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| incomparable[i])
                .collect();
            let antichain = picked
                .iter()
                .enumerate()
                .all(|(i, &a)| picked[i + 1..].iter().all(|&b| !self.comparable(a, b)));
            if !antichain {
                continue;
            }
            picked.push(v);
            if g.contains(self.join(&picked)) {
                return false;
            }
        }
        true
    }

    /// Chains in the proper part `L ∖ {0̂, 1̂}`.
    pub fn order_complex(&self) -> SimplicialComplex {
        let vertices = self.proper_part();
        let mut faces = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        fn grow(
            lattice: &FlatLattice,
            vertices: &[usize],
            current: &mut Vec<usize>,
            faces: &mut Vec<Vec<usize>>,
        ) {
            let start = current.last().map_or(0, |&p| p + 1);
            for pos in start..vertices.len() {
                if let Some(&last) = current.last() {
                    if !lattice.flats[vertices[last]].is_proper_subset(lattice.flats[vertices[pos]])
                    {
                        continue;
                    }
                }
                current.push(pos);
                faces.push(current.clone());
                grow(lattice, vertices, current, faces);
                current.pop();
            }
        }
        grow(self, &vertices, &mut current, &mut faces);
        SimplicialComplex::new(vertices.iter().map(|&v| self.flats[v]).collect(), faces)
    }

    /// Every chain of the proper part as flat indices (bottom to top),
    /// including the empty chain.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let oc = self.order_complex();
        let mut out = vec![Vec::new()];
        out.extend(oc.faces.iter().map(|f| {
            f.iter()
                .map(|&v| self.index[&oc.vertices[v]])
                .collect::<Vec<_>>()
        }));
        out
    }
}

/// `lattice_of_flats(M)`.
pub fn lattice_of_flats(matroid: &Matroid) -> FlatLattice {
    FlatLattice::new(matroid)
}

/// 0/1 indicator of `f` in `{0, .., n-1}`.
pub fn incidence_vector(n: usize, f: GroundSubset) -> Vec<i64> {
    (0..n).map(|i| f.contains(i) as i64).collect()
}

/// A building set of a flat lattice, as sorted flat indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildingSet {
    members: Vec<usize>,
    top: usize,
}

impl BuildingSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn contains_top(&self) -> bool {
        self.contains(self.top)
    }
}

/// A simplicial complex stored as its nonempty faces.
///
/// `faces` hold sorted indices into `vertices`; faces are listed by size and
/// then lexicographically. `maximal` indexes into `faces`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<GroundSubset>,
    pub faces: Vec<Vec<usize>>,
    pub maximal: Vec<usize>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<GroundSubset>, faces: Vec<Vec<usize>>) -> SimplicialComplex {
        let mut faces = faces;
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let set: HashSet<&[usize]> = faces.iter().map(Vec::as_slice).collect();
        let maximal = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                (0..vertices.len()).filter(|v| !f.contains(v)).all(|v| {
                    let mut g = (*f).clone();
                    g.push(v);
                    g.sort_unstable();
                    !set.contains(g.as_slice())
                })
            })
            .map(|(i, _)| i)
            .collect();
        SimplicialComplex {
            vertices,
            faces,
            maximal,
        }
    }

    /// Faces as vertex flats.
    pub fn face_sets(&self) -> Vec<Vec<GroundSubset>> {
        self.faces
            .iter()
            .map(|f| f.iter().map(|&v| self.vertices[v]).collect())
            .collect()
    }

    pub fn facets(&self) -> Vec<Vec<GroundSubset>> {
        self.maximal
            .iter()
            .map(|&i| self.faces[i].iter().map(|&v| self.vertices[v]).collect())
            .collect()
    }

    /// Largest face size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }

    /// `f[k]` = number of faces with `k + 1` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dimension() + 1).max(0) as usize];
        for face in &self.faces {
            f[face.len() - 1] += 1;
        }
        f
    }

    /// Incidence vectors of a face's vertices: the ray generators of its cone.
    pub fn generators(&self, n: usize, face: usize) -> Vec<Vec<i64>> {
        self.faces[face]
            .iter()
            .map(|&v| incidence_vector(n, self.vertices[v]))
            .collect()
    }
}
