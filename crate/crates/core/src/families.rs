//! Named complexes and polytopes used by the corpus, the CLI generator and
//! the tests.

use std::collections::BTreeMap;

use crate::algebra::{rational, Rational};
use crate::complex::{cross_polytope_boundary, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::polytope::Polytope;

fn vertex(label: i32) -> Vertex {
    Vertex::new(label).expect("nonzero label")
}

fn with_antipodes(coords: Vec<(i32, Vec<Rational>)>) -> BTreeMap<Vertex, Vec<Rational>> {
    let mut out = BTreeMap::new();
    for (l, c) in coords {
        out.insert(vertex(-l), c.iter().map(|x| -x).collect());
        out.insert(vertex(l), c);
    }
    out
}

/// The cross-polytope `C*_d` with vertices `±e_k` labelled `±k`.
pub fn cross_polytope(d: usize) -> Result<Polytope> {
    let boundary = cross_polytope_boundary(d)?;
    let coords = (1..=d).map(|k| (k as i32, (1..=d).map(|j| rational((j == k) as i64)).collect())).collect();
    Polytope::new(with_antipodes(coords), boundary.facets().to_vec())
}

/// Boundary of the cs `2m`-gon with cycle order `1, 2, ..., m, -1, ..., -m`.
pub fn cs_polygon_boundary(m: usize) -> Result<SimplicialComplex> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("polygon needs m >= 2, got {m}")));
    }
    let cycle: Vec<i32> = (1..=m as i32).chain((1..=m as i32).map(|k| -k)).collect();
    let facets = (0..cycle.len())
        .map(|i| Face::from_labels(&[cycle[i], cycle[(i + 1) % cycle.len()]]))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(facets, true)
}

/// A cs `2m`-gon whose vertices are rational points on the unit circle.
///
/// Vertex `k+1` is the image of `t = k/(m-k)` under the rational
/// parametrisation `t ↦ ((1-t²)/(1+t²), 2t/(1+t²))`; the `m` points lie in
/// the open upper half circle in counterclockwise order, starting at `(1,0)`.
pub fn cs_polygon(m: usize) -> Result<Polytope> {
    let boundary = cs_polygon_boundary(m)?;
    let coords = (0..m)
        .map(|k| {
            let t = Rational::new((k as i64).into(), ((m - k) as i64).into());
            let denom = rational(1) + &t * &t;
            let x = (rational(1) - &t * &t) / &denom;
            let y = (rational(2) * &t) / &denom;
            (k as i32 + 1, vec![x, y])
        })
        .collect();
    Polytope::new(with_antipodes(coords), boundary.facets().to_vec())
}

/// Bipyramid over the cs `2m`-gon: the polygon at height 0 and apexes
/// `±(m+1)` at `(0, 0, ±1)`.
pub fn bipyramid(m: usize) -> Result<Polytope> {
    let polygon = cs_polygon(m)?;
    let apex = m as i32 + 1;
    let mut coords = BTreeMap::new();
    for (v, c) in polygon.coordinates() {
        let mut c = c.clone();
        c.push(rational(0));
        coords.insert(*v, c);
    }
    coords.insert(vertex(apex), vec![rational(0), rational(0), rational(1)]);
    coords.insert(vertex(-apex), vec![rational(0), rational(0), rational(-1)]);
    let mut facets = Vec::new();
    for edge in polygon.boundary().facets() {
        for a in [apex, -apex] {
            facets.push(edge.union(&Face::new([vertex(a)])));
        }
    }
    Polytope::new(coords, facets)
}

/// `∂C*_d` with an antipodal pair of `d`-simplices glued along the ridges
/// `{1, ..., d-1}` and `{-1, ..., -(d-1)}`, using new vertices `±(d+1)`.
///
/// The result is cs and Cohen-Macaulay but not a sphere. For `d ≥ 3` it has
/// `h_j = C(d,j)` for `j ≥ 2` while `h_1 = d + 2`.
pub fn cross_polytope_with_fins(d: usize) -> Result<SimplicialComplex> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("fins need d >= 2, got {d}")));
    }
    let base = cross_polytope_boundary(d)?;
    let fin: Vec<i32> = (1..d as i32).chain([d as i32 + 1]).collect();
    let mut facets = base.facets().to_vec();
    facets.push(Face::from_labels(&fin)?);
    facets.push(Face::from_labels(&fin.iter().map(|l| -l).collect::<Vec<_>>())?);
    SimplicialComplex::from_facets(facets, true)
}

/// Two disjoint triangle boundaries `{1,2,3}` and `{-1,-2,-3}`: cs, pure of
/// dimension 1, disconnected and therefore not Cohen-Macaulay.
pub fn antipodal_triangles() -> Result<SimplicialComplex> {
    let facets = [[1, 2], [2, 3], [1, 3]]
        .iter()
        .flat_map(|e| [Face::from_labels(e), Face::from_labels(&[-e[0], -e[1]])])
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(facets, true)
}

/// Boundary of the `n`-simplex on vertices `1..=n+1`.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("simplex boundary needs n >= 1".into()));
    }
    let all: Vec<i32> = (1..=n as i32 + 1).collect();
    let facets = (0..all.len())
        .map(|skip| {
            let labels: Vec<i32> = all.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &l)| l).collect();
            Face::from_labels(&labels)
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(facets, false)
}

/// The instances shipped in `corpus/`, with their own face numbers recorded
/// as expectations.
pub fn standard_corpus() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push(Instance::from_polytope(format!("crosspoly-{d}"), cross_polytope(d)?));
    }
    for m in 3..=4 {
        out.push(Instance::from_polytope(format!("polygon-{m}"), cs_polygon(m)?));
    }
    for m in 3..=5 {
        out.push(Instance::from_polytope(format!("bipyramid-{m}"), bipyramid(m)?));
    }
    for d in 3..=4 {
        out.push(Instance::from_complex(format!("crosspoly-{d}-fins"), cross_polytope_with_fins(d)?));
    }
    out.push(Instance::from_complex("antipodal-triangles", antipodal_triangles()?));
    out.push(Instance::from_complex("simplex-2-boundary", simplex_boundary(2)?));
    out.into_iter().map(Instance::with_computed_expectations).collect()
}
