//! Simplicial complexes over signed vertex labels.
//!
//! A complex is stored by its facets; every face is enumerated once at
//! construction so that membership and per-dimension listings are cheap at
//! the sizes this crate targets. Vertices are nonzero integers and the
//! central involution is fixed to `v -> -v`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A nonzero signed vertex label.
///
/// Vertices are ordered by absolute value first, with `+k` before `-k`:
/// `1 < -1 < 2 < -2 < ...`. Faces, monomials and matrix columns all inherit
/// this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex(i32);

impl Vertex {
    pub fn new(label: i32) -> Result<Self> {
        if label == 0 {
            Err(Error::ZeroVertex)
        } else {
            Ok(Vertex(label))
        }
    }

    pub fn label(self) -> i32 {
        self.0
    }

    pub fn antipode(self) -> Vertex {
        Vertex(-self.0)
    }

    /// Index of the antipodal pair this vertex belongs to.
    pub fn pair(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    fn key(self) -> (u32, bool) {
        (self.0.unsigned_abs(), self.0 < 0)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A sorted, duplicate-free vertex set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Face {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort();
        v.dedup();
        Face(v)
    }

    pub fn from_labels(labels: &[i32]) -> Result<Face> {
        let vs = labels.iter().map(|&l| Vertex::new(l)).collect::<Result<Vec<_>>>()?;
        Ok(Face::new(vs))
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn labels(&self) -> Vec<i32> {
        self.0.iter().map(|v| v.label()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn antipode(&self) -> Face {
        Face::new(self.0.iter().map(|v| v.antipode()))
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().copied().powerset().map(Face)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// A finite simplicial complex given by its facets.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    ground_set: Vec<Vertex>,
    cs: bool,
    /// `faces[k]` holds the faces with exactly `k` vertices, sorted.
    faces: Vec<Vec<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from its facets. When `expect_cs` is set, central
    /// symmetry is validated on every nonempty face.
    pub fn from_facets(facets: Vec<Face>, expect_cs: bool) -> Result<Self> {
        Self::with_ground_set(facets, None, expect_cs)
    }

    /// Like [`from_facets`](Self::from_facets), but the ground set may be
    /// declared larger than the vertex set.
    pub fn with_ground_set(facets: Vec<Face>, ground_set: Option<Vec<Vertex>>, expect_cs: bool) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let mut facets = facets;
        facets.sort();
        for (a, b) in facets.iter().tuple_combinations() {
            if a.is_subset_of(b) {
                return Err(Error::RedundantFacet { inner: a.clone(), outer: b.clone() });
            }
            if b.is_subset_of(a) {
                return Err(Error::RedundantFacet { inner: b.clone(), outer: a.clone() });
            }
        }
        let complex = Self::build(facets, ground_set)?;
        if expect_cs {
            complex.check_cs()?;
            Ok(SimplicialComplex { cs: true, ..complex })
        } else {
            Ok(complex)
        }
    }

    /// Builds from an arbitrary generating set of faces, keeping only the
    /// maximal ones. The cs flag is set when the result validates as cs.
    pub fn generated_by(generators: impl IntoIterator<Item = Face>, ground_set: Option<Vec<Vertex>>) -> Result<Self> {
        let facets = maximal_faces(generators);
        if facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let mut complex = Self::build(facets, ground_set)?;
        complex.cs = complex.check_cs().is_ok();
        Ok(complex)
    }

    fn build(facets: Vec<Face>, ground_set: Option<Vec<Vertex>>) -> Result<Self> {
        let dim_plus_one = facets.iter().map(Face::len).max().unwrap_or(0);
        let mut layers: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); dim_plus_one + 1];
        for facet in &facets {
            for sub in facet.subfaces() {
                layers[sub.len()].insert(sub);
            }
        }
        let faces: Vec<Vec<Face>> = layers.into_iter().map(|s| s.into_iter().collect()).collect();
        let vertices: Vec<Vertex> =
            faces.get(1).map(|vs| vs.iter().map(|f| f.vertices()[0]).collect()).unwrap_or_default();
        let ground_set = match ground_set {
            None => vertices,
            Some(mut g) => {
                g.sort();
                g.dedup();
                if let Some(v) = vertices.iter().find(|v| g.binary_search(v).is_err()) {
                    return Err(Error::GroundSetMissing(v.label()));
                }
                g
            }
        };
        Ok(SimplicialComplex { facets, ground_set, cs: false, faces })
    }

    fn check_cs(&self) -> Result<()> {
        if let Some(v) = self.ground_set.iter().find(|v| self.ground_set.binary_search(&v.antipode()).is_err()) {
            return Err(Error::CsViolation(Face::new([*v])));
        }
        for layer in self.faces.iter().skip(1) {
            for face in layer {
                let anti = face.antipode();
                if anti == *face || !self.contains_face(&anti) {
                    return Err(Error::CsViolation(face.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn ground_set(&self) -> &[Vertex] {
        &self.ground_set
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.faces_of_dim(0).iter().map(|f| f.vertices()[0]).collect()
    }

    pub fn is_cs(&self) -> bool {
        self.cs
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// `d = dim + 1`, the Krull dimension of the face ring.
    pub fn krull_dim(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Face::len).all_equal()
    }

    /// All faces of dimension `i`, sorted. Empty when `i` is out of range.
    pub fn faces_of_dim(&self, i: isize) -> &[Face] {
        if i < -1 {
            return &[];
        }
        self.faces.get((i + 1) as usize).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.faces.get(face.len()).is_some_and(|layer| layer.binary_search(face).is_ok())
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.contains_face(&Face::new([v]))
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// The first face of `self` that is missing from `other`, if any.
    pub fn first_face_missing_from(&self, other: &SimplicialComplex) -> Option<Face> {
        self.facets.iter().find(|f| !other.contains_face(f)).cloned()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.first_face_missing_from(other).is_none()
    }

    pub fn fhg_vectors(&self) -> Result<FhgVectors> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let f: Vec<i64> = self.faces.iter().map(|l| l.len() as i64).collect();
        Ok(FhgVectors::from_f(f))
    }

    /// `st(τ) = {σ : σ ∪ τ ∈ Δ}`, on the same ground set.
    pub fn star(&self, tau: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(tau) {
            return Err(Error::NotAFace(tau.clone()));
        }
        let facets = self.facets.iter().filter(|f| tau.is_subset_of(f)).cloned();
        Self::generated_by(facets, Some(self.ground_set.clone()))
    }

    /// `lk(τ) = {σ : σ ∪ τ ∈ Δ, σ ∩ τ = ∅}`, on the same ground set.
    pub fn link(&self, tau: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(tau) {
            return Err(Error::NotAFace(tau.clone()));
        }
        let facets = self.facets.iter().filter(|f| tau.is_subset_of(f)).map(|f| f.difference(tau));
        Self::generated_by(facets, Some(self.ground_set.clone()))
    }

    /// Faces common to both complexes, on the ground set of `self`.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let gens = self.facets.iter().cartesian_product(other.facets.iter()).map(|(a, b)| a.intersection(b));
        Self::generated_by(gens, Some(self.ground_set.clone())).expect("intersection always contains the empty face")
    }

    /// Induced subcomplex on a vertex set.
    pub fn induced(&self, vertices: &Face) -> SimplicialComplex {
        let gens = self.facets.iter().map(|f| f.intersection(vertices));
        Self::generated_by(gens, Some(self.ground_set.clone()))
            .expect("induced subcomplex always contains the empty face")
    }

    /// Applies a relabeling to every vertex. The map must be injective on the
    /// ground set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<SimplicialComplex> {
        let ground: Vec<Vertex> = self.ground_set.iter().map(|&v| map(v)).collect();
        let distinct: BTreeSet<Vertex> = ground.iter().copied().collect();
        if distinct.len() != ground.len() {
            return Err(Error::InvalidParameter("relabeling is not injective".into()));
        }
        let facets = self.facets.iter().map(|f| Face::new(f.vertices().iter().map(|&v| map(v)))).collect();
        Self::with_ground_set(facets, Some(ground), self.cs)
    }
}

fn maximal_faces(generators: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut gens: Vec<Face> = generators.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    // longer faces first, so a face is dropped iff an already-kept face contains it
    gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Face> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| g.is_subset_of(k)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Face numbers together with the derived h- and g-numbers.
///
/// `f[k]` is `f_{k-1}` (so `f[0] = 1` counts the empty face).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FhgVectors {
    pub d: usize,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
}

impl FhgVectors {
    /// Computes h and g from `f = (f_{-1}, ..., f_{d-1})`.
    pub fn from_f(f: Vec<i64>) -> Self {
        let d = f.len() - 1;
        let h: Vec<i64> = (0..=d)
            .map(|i| {
                (0..=i)
                    .map(|k| {
                        let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d - k, i - k) * f[k]
                    })
                    .sum()
            })
            .collect();
        let g = (0..=d / 2).map(|i| if i == 0 { 1 } else { h[i] - h[i - 1] }).collect();
        FhgVectors { d, f, h, g }
    }
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// `C(n, k)` extended by zero to negative `k`.
pub fn binomial_signed(n: usize, k: isize) -> i64 {
    if k < 0 {
        0
    } else {
        binomial(n, k as usize)
    }
}

/// Boundary of the `d`-dimensional cross-polytope on `±1..±d`: every subset
/// free of antipodal pairs is a face.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    cross_polytope_on(&(1..=d as u32).collect::<Vec<_>>())
}

/// Cross-polytope boundary on the given antipodal pairs.
pub fn cross_polytope_on(pairs: &[u32]) -> Result<SimplicialComplex> {
    if pairs.is_empty() {
        return Err(Error::InvalidParameter("cross-polytope needs d >= 1".into()));
    }
    let facets = pairs
        .iter()
        .map(|&k| [k as i32, -(k as i32)])
        .multi_cartesian_product()
        .map(|labels| Face::new(labels.into_iter().map(Vertex)))
        .collect();
    SimplicialComplex::from_facets(facets, true)
}

/// Join of two complexes on disjoint ground sets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    if let Some(v) = a.ground_set().iter().find(|v| b.ground_set().binary_search(v).is_ok()) {
        return Err(Error::GroundSetOverlap(v.label()));
    }
    let facets = a.facets().iter().cartesian_product(b.facets()).map(|(x, y)| x.union(y)).collect();
    let ground = a.ground_set().iter().chain(b.ground_set()).copied().collect();
    SimplicialComplex::with_ground_set(facets, Some(ground), a.is_cs() && b.is_cs())
}

/// Positive labels `k` such that both `k` and `-k` are vertices.
pub fn antipodal_pairs(complex: &SimplicialComplex) -> Vec<u32> {
    complex
        .vertices()
        .into_iter()
        .filter(|v| v.is_positive() && complex.contains_vertex(v.antipode()))
        .map(Vertex::pair)
        .collect()
}

/// All `j`-sets of antipodal pairs on which the boundary of the
/// `j`-cross-polytope is a subcomplex, in lexicographic order.
pub fn detect_cross_polytope_subcomplexes(complex: &SimplicialComplex, j: usize) -> Result<Vec<Vec<u32>>> {
    if !complex.is_cs() {
        return Err(Error::NotCs);
    }
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    let pairs = antipodal_pairs(complex);
    Ok(pairs
        .into_iter()
        .combinations(j)
        .filter(|sigma| {
            sigma
                .iter()
                .map(|&k| [k as i32, -(k as i32)])
                .multi_cartesian_product()
                .all(|labels| complex.contains_face(&Face::new(labels.into_iter().map(Vertex))))
        })
        .collect())
}
