//! Homogeneous polynomials over vertex variables with exact rational
//! coefficients, and the handful of operations stress theory needs:
//! directional derivatives, the involution `x_v -> x_{-v}`, the ± split, and
//! recognition of squarefree polynomials in `y_k = x_k + x_{-k}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A monomial, stored as the sorted multiset of its variables.
///
/// Monomials are ordered by degree, then lexicographically on that sorted
/// multiset (graded-lex over the vertex order `1 < -1 < 2 < -2 < ...`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Vertex>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vs.into_iter().collect();
        v.sort();
        Monomial(v)
    }

    /// Squarefree monomial of a face.
    pub fn of_face(face: &Face) -> Self {
        Monomial(face.vertices().to_vec())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn variables(&self) -> &[Vertex] {
        &self.0
    }

    pub fn exponent(&self, v: Vertex) -> u32 {
        self.0.iter().filter(|&&w| w == v).count() as u32
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn exponents(&self) -> Vec<(Vertex, u32)> {
        self.0.iter().dedup_with_count().map(|(n, &v)| (v, n as u32)).collect()
    }

    pub fn support(&self) -> Face {
        Face::new(self.0.iter().copied())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// `∂/∂x_v` of this monomial as `(multiplicity, quotient)`.
    pub fn derivative(&self, v: Vertex) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|&w| w == v)?;
        let mult = self.exponent(v);
        let mut rest = self.0.clone();
        rest.remove(pos);
        Some((mult, Monomial(rest)))
    }

    pub fn times(&self, v: Vertex) -> Monomial {
        let mut m = self.0.clone();
        let pos = m.partition_point(|&w| w <= v);
        m.insert(pos, v);
        Monomial(m)
    }

    pub fn involution(&self) -> Monomial {
        Monomial::from_vertices(self.0.iter().map(|v| v.antipode()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts =
            self.exponents().into_iter().map(
                |(v, e)| {
                    if e == 1 {
                        format!("x_{{{v}}}")
                    } else {
                        format!("x_{{{v}}}^{e}")
                    }
                },
            );
        write!(f, "{}", parts.format(" "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All degree-`i` monomials whose support is a face of `complex`, in
/// canonical order.
pub fn delta_monomials(complex: &SimplicialComplex, i: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for size in 0..=i.min(complex.krull_dim()) {
        if size == 0 {
            if i == 0 {
                out.push(Monomial::one());
            }
            continue;
        }
        for face in complex.faces_of_dim(size as isize - 1) {
            // every vertex once, plus a multiset of i - size more from the face
            for extra in face.vertices().iter().copied().combinations_with_replacement(i - size) {
                out.push(Monomial::from_vertices(face.vertices().iter().copied().chain(extra)));
            }
        }
    }
    out.sort();
    out
}

/// Parity of a linear form under the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `c_{-v} = -c_v` for all `v`.
    Minus,
    /// `c_{-v} = c_v` for all `v`.
    Plus,
    #[serde(rename = "none")]
    Mixed,
}

/// A linear form `Σ c_v x_v`. The parity tag is derived from the
/// coefficients; the zero form is tagged `Minus`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: BTreeMap<Vertex, Rational>,
    parity: Parity,
}

impl LinearForm {
    pub fn new(coefficients: impl IntoIterator<Item = (Vertex, Rational)>) -> Self {
        let mut map: BTreeMap<Vertex, Rational> = BTreeMap::new();
        for (v, c) in coefficients {
            *map.entry(v).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let zero = Rational::zero();
        let coeff = |v: &Vertex| map.get(v).unwrap_or(&zero);
        let parity = if map.iter().all(|(v, c)| *coeff(&v.antipode()) == -c) {
            Parity::Minus
        } else if map.iter().all(|(v, c)| coeff(&v.antipode()) == c) {
            Parity::Plus
        } else {
            Parity::Mixed
        };
        LinearForm { coefficients: map, parity }
    }

    pub fn variable(v: Vertex) -> Self {
        Self::new([(v, Rational::one())])
    }

    /// `y_k = x_k + x_{-k}`.
    pub fn y(k: u32) -> Self {
        let v = Vertex::new(k as i32).expect("pair index is positive");
        Self::new([(v, Rational::one()), (v.antipode(), Rational::one())])
    }

    /// `Σ_{v ∈ vertices} x_v`.
    pub fn sum_of(vertices: &[Vertex]) -> Self {
        Self::new(vertices.iter().map(|&v| (v, Rational::one())))
    }

    pub fn coefficient(&self, v: Vertex) -> Rational {
        self.coefficients.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &BTreeMap<Vertex, Rational> {
        &self.coefficients
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(1, self.coefficients.iter().map(|(&v, c)| (Monomial::from_vertices([v]), c.clone())))
            .expect("linear terms are homogeneous")
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_polynomial(), f)
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{:?}]", self, self.parity)
    }
}

/// A homogeneous polynomial. Zero coefficients are never stored; equality
/// compares terms only, so zero polynomials of different degrees are equal.
#[derive(Clone)]
pub struct Polynomial {
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(degree: usize) -> Self {
        Polynomial { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Monomial::one(), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let degree = m.degree();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { degree, terms }
    }

    /// Sums the given terms; every monomial must have degree `degree`.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::NotHomogeneous);
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { degree, terms: map })
    }

    /// Product `Π_{k ∈ pairs} y_k`, expanded.
    pub fn y_product(pairs: &[u32]) -> Self {
        pairs.iter().fold(Polynomial::one(), |acc, &k| acc.mul_linear(&LinearForm::y(k)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.degree);
        }
        Polynomial { degree: self.degree, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// `∂/∂x_v`.
    pub fn partial(&self, v: Vertex) -> Polynomial {
        let degree = self.degree.saturating_sub(1);
        let terms =
            self.terms.iter().filter_map(|(m, c)| m.derivative(v).map(|(mult, q)| (q, c * rational(mult as i64))));
        Polynomial::from_terms(degree, terms).expect("derivative is homogeneous")
    }

    /// `∂_c w = Σ_v c_v ∂w/∂x_v`. A constant maps to zero.
    pub fn derivative(&self, form: &LinearForm) -> Polynomial {
        let degree = self.degree.saturating_sub(1);
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            for (v, e) in m.exponents() {
                let cv = form.coefficient(v);
                if cv.is_zero() {
                    continue;
                }
                let (_, q) = m.derivative(v).expect("v divides m");
                terms.push((q, c * &cv * rational(e as i64)));
            }
        }
        Polynomial::from_terms(degree, terms).expect("derivative is homogeneous")
    }

    pub fn mul_linear(&self, form: &LinearForm) -> Polynomial {
        let terms =
            self.terms.iter().flat_map(|(m, c)| form.coefficients().iter().map(move |(&v, a)| (m.times(v), c * a)));
        Polynomial::from_terms(self.degree + 1, terms).expect("product is homogeneous")
    }

    /// `α(w)`: every `x_v` replaced by `x_{-v}`.
    pub fn involution(&self) -> Polynomial {
        Polynomial { degree: self.degree, terms: self.terms.iter().map(|(m, c)| (m.involution(), c.clone())).collect() }
    }

    /// `(w⁺, w⁻) = ((w + αw)/2, (w - αw)/2)`.
    pub fn pm_split(&self) -> (Polynomial, Polynomial) {
        let alpha = self.involution();
        let half = Rational::new(1.into(), 2.into());
        ((self + &alpha).scale(&half), (self - &alpha).scale(&half))
    }

    pub fn is_symmetric(&self) -> bool {
        self.involution() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.involution() == -self
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.keys().all(Monomial::is_squarefree)
    }

    /// Supports of all terms.
    pub fn term_supports(&self) -> BTreeSet<Face> {
        self.terms.keys().map(Monomial::support).collect()
    }

    /// The complex generated by the supports of the terms.
    pub fn support(&self) -> Result<SimplicialComplex> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        SimplicialComplex::generated_by(self.term_supports(), None)
    }

    /// Whether every term is supported on a face of `complex`.
    pub fn lives_on(&self, complex: &SimplicialComplex) -> bool {
        self.terms.keys().all(|m| complex.contains_face(&m.support()))
    }

    /// Pair indices `k` such that `x_k` or `x_{-k}` occurs.
    pub fn pairs(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.variables().iter().map(|v| v.pair())).collect()
    }

    /// Writes `w` as `Σ c_τ Π_{k∈τ} y_k` when possible.
    ///
    /// A squarefree polynomial is of that form exactly when
    /// `∂w/∂x_k = ∂w/∂x_{-k}` for every pair `k`; `c_τ` is then the
    /// coefficient of `Π_{k∈τ} x_k`.
    pub fn y_representation(&self) -> Result<YRepresentation> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        for k in self.pairs() {
            let v = Vertex::new(k as i32).expect("pair index is positive");
            if self.partial(v) != self.partial(v.antipode()) {
                return Ok(YRepresentation::NotRepresentable { pair: k });
            }
        }
        let coefficients: BTreeMap<Vec<u32>, Rational> = self
            .terms
            .iter()
            .filter(|(m, _)| m.variables().iter().all(|v| v.is_positive()))
            .map(|(m, c)| (m.variables().iter().map(|v| v.pair()).collect(), c.clone()))
            .collect();
        let rep = YRepresentation::Represented(coefficients);
        if rep.expand(self.degree).as_ref() != Some(self) {
            return Err(Error::Invariant("y-representation does not reproduce the polynomial".into()));
        }
        Ok(rep)
    }
}

/// Outcome of [`Polynomial::y_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YRepresentation {
    /// Coefficients `c_τ` keyed by the sorted pair set `τ`.
    Represented(BTreeMap<Vec<u32>, Rational>),
    /// The derivative criterion fails at this pair.
    NotRepresentable { pair: u32 },
}

impl YRepresentation {
    pub fn is_represented(&self) -> bool {
        matches!(self, YRepresentation::Represented(_))
    }

    /// Expands `Σ c_τ Π y_k` back into the `x` variables.
    pub fn expand(&self, degree: usize) -> Option<Polynomial> {
        match self {
            YRepresentation::Represented(coeffs) => Some(
                coeffs
                    .iter()
                    .fold(Polynomial::zero(degree), |acc, (tau, c)| &acc + &Polynomial::y_product(tau).scale(c)),
            ),
            YRepresentation::NotRepresentable { .. } => None,
        }
    }
}

fn combine(a: &Polynomial, b: &Polynomial, sign: i64) -> Polynomial {
    assert!(
        a.is_zero() || b.is_zero() || a.degree == b.degree,
        "adding polynomials of degrees {} and {}",
        a.degree,
        b.degree
    );
    let degree = if a.is_zero() { b.degree } else { a.degree };
    let mut terms = a.terms.clone();
    for (m, c) in &b.terms {
        let e = terms.entry(m.clone()).or_insert_with(Rational::zero);
        if sign > 0 {
            *e += c;
        } else {
            *e -= c;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Polynomial { degree, terms }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, 1)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, -1)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { degree: self.degree, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// Text format: `coef * x_{v}^e ...` terms joined by ` + ` in canonical
/// order, rationals as `p/q`; the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(m, c)| if m.degree() == 0 { format!("{c}") } else { format!("{c} * {m}") });
        write!(f, "{}", parts.format(" + "))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
