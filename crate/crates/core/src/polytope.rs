//! Centrally symmetric simplicial polytopes with rational vertex coordinates.
//!
//! Convexity is assumed, not verified: the boundary complex is supplied by
//! the caller together with the coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::Rational;
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};

#[derive(Clone, Debug)]
pub struct Polytope {
    coordinates: BTreeMap<Vertex, Vec<Rational>>,
    boundary: SimplicialComplex,
    dim: usize,
}

impl Polytope {
    pub fn new(coordinates: BTreeMap<Vertex, Vec<Rational>>, facets: Vec<Face>) -> Result<Self> {
        let dim = coordinates
            .values()
            .next()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidParameter("polytope has no vertices".into()))?;
        if coordinates.values().any(|c| c.len() != dim) {
            return Err(Error::InvalidParameter("coordinate vectors differ in length".into()));
        }
        for (v, c) in &coordinates {
            let anti = coordinates.get(&v.antipode()).ok_or(Error::NotCs)?;
            if anti.iter().zip(c).any(|(a, b)| *a != -b) {
                return Err(Error::NotCs);
            }
        }
        let ground: Vec<Vertex> = coordinates.keys().copied().collect();
        let boundary = SimplicialComplex::with_ground_set(facets, Some(ground), true).map_err(|e| match e {
            Error::GroundSetMissing(l) => Error::InvalidParameter(format!("vertex {l} has no coordinates")),
            other => other,
        })?;
        if boundary.krull_dim() != dim || !boundary.is_pure() {
            return Err(Error::InvalidParameter(format!(
                "boundary complex must be pure of dimension {}",
                dim as isize - 1
            )));
        }
        for facet in boundary.facets() {
            if !affinely_independent(facet, &coordinates) {
                return Err(Error::NotSimplicial(facet.clone()));
            }
        }
        Ok(Polytope { coordinates, boundary, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boundary(&self) -> &SimplicialComplex {
        &self.boundary
    }

    pub fn coordinates(&self) -> &BTreeMap<Vertex, Vec<Rational>> {
        &self.coordinates
    }

    pub fn coordinate(&self, v: Vertex) -> Option<&[Rational]> {
        self.coordinates.get(&v).map(Vec::as_slice)
    }
}

fn affinely_independent(facet: &Face, coords: &BTreeMap<Vertex, Vec<Rational>>) -> bool {
    let vs = facet.vertices();
    let Some(base) = vs.first().map(|v| &coords[v]) else { return true };
    let dim = base.len();
    let mut m = SparseMatrix::new(vs.len() - 1, dim);
    for (r, v) in vs[1..].iter().enumerate() {
        for (c, (x, y)) in coords[v].iter().zip(base).enumerate() {
            let diff = x - y;
            if !diff.is_zero() {
                m.set(r, c, diff);
            }
        }
    }
    rank(&m) == vs.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn v(l: i32) -> Vertex {
        Vertex::new(l).unwrap()
    }

    fn square(coords: [(i32, [i64; 2]); 4]) -> BTreeMap<Vertex, Vec<Rational>> {
        coords.iter().map(|(l, c)| (v(*l), c.iter().map(|&x| rational(x)).collect())).collect()
    }

    fn square_facets() -> Vec<Face> {
        [[1, 2], [2, -1], [-1, -2], [-2, 1]].iter().map(|f| Face::from_labels(f).unwrap()).collect()
    }

    #[test]
    fn cs_square() {
        let p =
            Polytope::new(square([(1, [1, 0]), (-1, [-1, 0]), (2, [0, 1]), (-2, [0, -1])]), square_facets()).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.boundary().is_cs());
    }

    #[test]
    fn asymmetric_coordinates_rejected() {
        let r = Polytope::new(square([(1, [1, 0]), (-1, [-1, 1]), (2, [0, 1]), (-2, [0, -1])]), square_facets());
        assert_eq!(r.unwrap_err(), Error::NotCs);
    }

    #[test]
    fn degenerate_facet_rejected() {
        // vertices 1 and 2 coincide, so edge {1,2} is a point
        let r = Polytope::new(square([(1, [1, 0]), (-1, [-1, 0]), (2, [1, 0]), (-2, [-1, 0])]), square_facets());
        assert_eq!(r.unwrap_err(), Error::NotSimplicial(Face::from_labels(&[1, 2]).unwrap()));
    }
}
