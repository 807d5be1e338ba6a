//! Stress spaces: degree-`i` polynomials supported on faces and annihilated
//! by `∂_θ` for every form `θ` of a sequence `Θ`, computed as exact
//! nullspaces of the derivative matrix.
//!
//! Generic linear systems of parameters are sampled from a seeded PRNG and
//! certified exactly with the facet-rank criterion, so every reported
//! dimension is a certificate for the recorded seed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{delta_monomials, rational, LinearForm, Monomial, Parity, Polynomial, Rational};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{intersect, nullspace, rank, Basis, SparseMatrix};
use crate::polytope::Polytope;

/// Sampled coefficients are uniform integers in `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 1_000_000;
/// Resamples allowed after the first failed attempt.
pub const MAX_RETRIES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    SpecialLsop,
    CanonicalPolytope,
    Custom,
}

#[derive(Clone, Debug)]
pub struct FormSequence {
    forms: Vec<LinearForm>,
    kind: FormKind,
}

impl FormSequence {
    pub fn custom(forms: Vec<LinearForm>) -> Self {
        FormSequence { forms, kind: FormKind::Custom }
    }

    /// `d` forms, all of minus parity.
    pub fn special(forms: Vec<LinearForm>) -> Result<Self> {
        if let Some(f) = forms.iter().find(|f| f.parity() != Parity::Minus) {
            return Err(Error::HypothesisUnmet(format!("form {f} is not odd")));
        }
        Ok(FormSequence { forms, kind: FormKind::SpecialLsop })
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Every form is even or odd, so the involution acts on stresses.
    pub fn is_parity_homogeneous(&self) -> bool {
        self.forms.iter().all(|f| f.parity() != Parity::Mixed)
    }

    /// All forms but the last are odd; the last is odd or `Σ_{v ∈ V} x_v`.
    pub fn meets_propagation_hypothesis(&self, ground_set: &[Vertex]) -> bool {
        let Some((last, rest)) = self.forms.split_last() else { return false };
        rest.iter().all(|f| f.parity() == Parity::Minus)
            && (last.parity() == Parity::Minus || *last == LinearForm::sum_of(ground_set))
    }
}

/// A sampled l.s.o.p. together with its provenance.
#[derive(Clone, Debug)]
pub struct LsopSample {
    pub forms: FormSequence,
    pub seed: u64,
    /// Number of draws made, including the accepted one.
    pub attempts: usize,
    /// One line per rejected draw.
    pub retry_log: Vec<String>,
}

fn pure_dim(complex: &SimplicialComplex) -> Result<usize> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(complex.krull_dim())
}

fn sample_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
}

fn sample_until_lsop(
    complex: &SimplicialComplex,
    seed: u64,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Result<FormSequence>,
) -> Result<LsopSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut retry_log = Vec::new();
    for attempt in 1..=MAX_RETRIES + 1 {
        let forms = draw(&mut rng)?;
        if lsop_check(complex, &forms)? {
            return Ok(LsopSample { forms, seed, attempts: attempt, retry_log });
        }
        retry_log.push(format!("attempt {attempt}: facet-rank check failed"));
    }
    Err(Error::LsopNotFound { attempts: MAX_RETRIES + 1, retry_log })
}

/// Samples `d` odd forms `θ_k = Σ_{v>0} c_{v,k}(x_v − x_{−v})` and certifies
/// them as an l.s.o.p.
pub fn special_lsop(complex: &SimplicialComplex, seed: u64) -> Result<LsopSample> {
    if !complex.is_cs() {
        return Err(Error::NotCs);
    }
    let d = pure_dim(complex)?;
    let positive: Vec<Vertex> = complex.ground_set().iter().copied().filter(|v| v.is_positive()).collect();
    sample_until_lsop(complex, seed, |rng| {
        let forms = (0..d)
            .map(|_| {
                LinearForm::new(positive.iter().flat_map(|&v| {
                    let c = sample_coefficient(rng);
                    [(v, c.clone()), (v.antipode(), -c)]
                }))
            })
            .collect();
        FormSequence::special(forms)
    })
}

/// Samples `d` forms with independent coefficients on every ground-set
/// variable and certifies them as an l.s.o.p.
pub fn generic_lsop(complex: &SimplicialComplex, seed: u64) -> Result<LsopSample> {
    let d = pure_dim(complex)?;
    let ground = complex.ground_set().to_vec();
    sample_until_lsop(complex, seed, |rng| {
        let forms = (0..d).map(|_| LinearForm::new(ground.iter().map(|&v| (v, sample_coefficient(rng))))).collect();
        Ok(FormSequence::custom(forms))
    })
}

/// `θ_1..θ_d` from the vertex coordinates, followed by `Σ_v x_v`.
pub fn canonical_forms(polytope: &Polytope) -> Result<FormSequence> {
    let d = polytope.dim();
    let mut forms: Vec<LinearForm> =
        (0..d).map(|k| LinearForm::new(polytope.coordinates().iter().map(|(&v, c)| (v, c[k].clone())))).collect();
    if forms.iter().any(|f| f.parity() != Parity::Minus) {
        return Err(Error::NotCs);
    }
    for facet in polytope.boundary().facets() {
        // affine independence of a facet ⇔ rank of the (d+1)×d lifted block is d
        let lifted = restriction_rank(&forms, facet, true);
        if lifted != facet.len() {
            return Err(Error::NotSimplicial(facet.clone()));
        }
    }
    forms.push(LinearForm::sum_of(polytope.boundary().ground_set()));
    Ok(FormSequence { forms, kind: FormKind::CanonicalPolytope })
}

fn restriction_rank(forms: &[LinearForm], facet: &Face, with_ones: bool) -> usize {
    let rows = forms.len() + with_ones as usize;
    let mut m = SparseMatrix::new(rows, facet.len());
    for (c, &v) in facet.vertices().iter().enumerate() {
        for (r, f) in forms.iter().enumerate() {
            m.set(r, c, f.coefficient(v));
        }
        if with_ones {
            m.set(forms.len(), c, rational(1));
        }
    }
    rank(&m)
}

/// Facet-rank criterion: `Θ` is an l.s.o.p. iff for every facet `F` the
/// coefficient block of `Θ` on the variables of `F` has rank `|F|`.
pub fn lsop_check(complex: &SimplicialComplex, forms: &FormSequence) -> Result<bool> {
    Ok(first_degenerate_facet(complex, forms)?.is_none())
}

/// The first facet on which the coefficient block of `Θ` is rank deficient.
pub fn first_degenerate_facet(complex: &SimplicialComplex, forms: &FormSequence) -> Result<Option<Face>> {
    let d = complex.krull_dim();
    if forms.len() != d {
        return Err(Error::LengthMismatch { expected: d, got: forms.len() });
    }
    Ok(complex.facets().iter().find(|f| restriction_rank(forms.forms(), f, false) != f.len()).cloned())
}

/// A basis of `Stress(Δ, Θ)_i`, with its ± split when the involution acts.
#[derive(Clone, Debug)]
pub struct StressSpace {
    degree: usize,
    complex: Arc<SimplicialComplex>,
    columns: Arc<Vec<Monomial>>,
    basis: Basis,
    split: Option<(Basis, Basis)>,
}

/// Derivative matrix: one column per Δ-supported degree-`i` monomial, one
/// row per `(k, ν)` with `ν` of degree `i − 1`; the entry is the coefficient
/// of `ν` in `∂_{θ_k}` of the column monomial.
pub fn derivative_matrix(columns: &[Monomial], forms: &FormSequence) -> SparseMatrix {
    let mut entries: Vec<((usize, Monomial), usize, Rational)> = Vec::new();
    for (col, mono) in columns.iter().enumerate() {
        for (k, form) in forms.forms().iter().enumerate() {
            for (v, e) in mono.exponents() {
                let c = form.coefficient(v);
                if c.is_zero() {
                    continue;
                }
                let (_, quotient) = mono.derivative(v).expect("v divides the monomial");
                entries.push(((k, quotient), col, c * rational(e as i64)));
            }
        }
    }
    // rows in canonical (k, ν) order
    let rows: BTreeMap<(usize, Monomial), usize> = entries
        .iter()
        .map(|(key, _, _)| key.clone())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let mut m = SparseMatrix::new(rows.len(), columns.len());
    for (key, c, x) in entries {
        m.add_to(rows[&key], c, &x);
    }
    m
}

/// Computes `Stress(Δ, Θ)_i`.
pub fn stress_space(complex: &SimplicialComplex, forms: &FormSequence, i: usize) -> Result<StressSpace> {
    stress_space_shared(Arc::new(complex.clone()), forms, i)
}

/// Computes the stress spaces for every degree in `degrees`, in parallel.
pub fn stress_spaces(
    complex: &SimplicialComplex,
    forms: &FormSequence,
    degrees: impl IntoIterator<Item = usize>,
) -> Result<Vec<StressSpace>> {
    let shared = Arc::new(complex.clone());
    let degrees: Vec<usize> = degrees.into_iter().collect();
    degrees.into_par_iter().map(|i| stress_space_shared(shared.clone(), forms, i)).collect()
}

fn stress_space_shared(complex: Arc<SimplicialComplex>, forms: &FormSequence, i: usize) -> Result<StressSpace> {
    let columns = Arc::new(delta_monomials(&complex, i));
    let basis = if i == 0 {
        Basis::coordinate(columns.len(), 0..columns.len())
    } else {
        nullspace(&derivative_matrix(&columns, forms))
    };
    let split =
        if complex.is_cs() && forms.is_parity_homogeneous() { Some(split_basis(&columns, &basis)?) } else { None };
    Ok(StressSpace { degree: i, complex, columns, basis, split })
}

fn involution_permutation(columns: &[Monomial]) -> Result<Vec<usize>> {
    columns
        .iter()
        .map(|m| {
            columns
                .binary_search(&m.involution())
                .map_err(|_| Error::Invariant(format!("antipode of {m} is not a column")))
        })
        .collect()
}

fn split_basis(columns: &[Monomial], basis: &Basis) -> Result<(Basis, Basis)> {
    let perm = involution_permutation(columns)?;
    let half = Rational::new(1.into(), 2.into());
    let mut plus = Vec::with_capacity(basis.dim());
    let mut minus = Vec::with_capacity(basis.dim());
    for v in basis.vectors() {
        let mut alpha = vec![Rational::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            alpha[perm[j]] = x.clone();
        }
        plus.push(v.iter().zip(&alpha).map(|(a, b)| (a + b) * &half).collect());
        minus.push(v.iter().zip(&alpha).map(|(a, b)| (a - b) * &half).collect());
    }
    let plus = Basis::from_vectors(columns.len(), plus)?;
    let minus = Basis::from_vectors(columns.len(), minus)?;
    if plus.dim() + minus.dim() != basis.dim() {
        return Err(Error::Invariant(format!(
            "± split has dimensions {} + {} but the space has dimension {}",
            plus.dim(),
            minus.dim(),
            basis.dim()
        )));
    }
    Ok((plus, minus))
}

impl StressSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn has_split(&self) -> bool {
        self.split.is_some()
    }

    pub fn plus_dim(&self) -> Option<usize> {
        self.split.as_ref().map(|(p, _)| p.dim())
    }

    pub fn minus_dim(&self) -> Option<usize> {
        self.split.as_ref().map(|(_, m)| m.dim())
    }

    pub fn plus_basis(&self) -> Option<&Basis> {
        self.split.as_ref().map(|(p, _)| p)
    }

    pub fn minus_basis(&self) -> Option<&Basis> {
        self.split.as_ref().map(|(_, m)| m)
    }

    pub fn to_polynomial(&self, coords: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            self.degree,
            self.columns.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())),
        )
        .expect("columns share one degree")
    }

    fn polys(&self, b: &Basis) -> Vec<Polynomial> {
        b.vectors().iter().map(|v| self.to_polynomial(v)).collect()
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.polys(&self.basis)
    }

    pub fn plus_polynomials(&self) -> Vec<Polynomial> {
        self.plus_basis().map(|b| self.polys(b)).unwrap_or_default()
    }

    pub fn minus_polynomials(&self) -> Vec<Polynomial> {
        self.minus_basis().map(|b| self.polys(b)).unwrap_or_default()
    }

    /// Column coordinates of `w`, or `None` when some term is not a column.
    pub fn column_vector(&self, w: &Polynomial) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.columns.len()];
        if w.is_zero() {
            return Some(v);
        }
        if w.degree() != self.degree {
            return None;
        }
        for (m, c) in w.terms() {
            let idx = self.columns.binary_search(m).ok()?;
            v[idx] = c.clone();
        }
        Some(v)
    }

    pub fn contains(&self, w: &Polynomial) -> bool {
        self.column_vector(w).is_some_and(|v| self.basis.contains(&v))
    }

    /// Membership decided by comparing ranks of the basis with and without `w`.
    pub fn contains_by_rank(&self, w: &Polynomial) -> bool {
        let Some(v) = self.column_vector(w) else { return false };
        let base = self.basis.to_row_matrix();
        let mut rows: Vec<Vec<Rational>> = self.basis.vectors().to_vec();
        rows.push(v);
        let extended = SparseMatrix::from_dense(&rows, self.columns.len());
        rank(&extended) == rank(&base)
    }

    /// The symmetric stresses, as a space of their own.
    pub fn symmetric_part(&self) -> Option<StressSpace> {
        let (plus, _) = self.split.as_ref()?;
        Some(StressSpace {
            degree: self.degree,
            complex: self.complex.clone(),
            columns: self.columns.clone(),
            basis: plus.clone(),
            split: Some((plus.clone(), Basis::zero(self.columns.len()))),
        })
    }

    /// Stresses in this space that live on the subcomplex `sub`.
    pub fn restrict(&self, sub: &SimplicialComplex) -> Result<StressSpace> {
        if let Some(f) = sub.first_face_missing_from(&self.complex) {
            return Err(Error::NotSubcomplex(f));
        }
        let axes = self.columns.iter().enumerate().filter(|(_, m)| sub.contains_face(&m.support())).map(|(j, _)| j);
        let coordinate = Basis::coordinate(self.columns.len(), axes);
        let basis = intersect(&self.basis, &coordinate)?;
        let split = if self.split.is_some() && sub.is_cs() { Some(split_basis(&self.columns, &basis)?) } else { None };
        Ok(StressSpace {
            degree: self.degree,
            complex: self.complex.clone(),
            columns: self.columns.clone(),
            basis,
            split,
        })
    }
}

/// Stresses of `space` living on `sub`.
pub fn restrict_stress_space(space: &StressSpace, sub: &SimplicialComplex) -> Result<StressSpace> {
    space.restrict(sub)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmStatus {
    /// Stress dimensions equal the h-vector for a certified l.s.o.p.
    Witnessed,
    /// Dimensions differ from h for a certified l.s.o.p., which rules out CM.
    NotCm,
}

#[derive(Clone, Debug, Serialize)]
pub struct CmCertificate {
    pub seed: u64,
    pub attempts: usize,
    pub retry_log: Vec<String>,
    pub dims: Vec<usize>,
    pub h: Vec<i64>,
    pub status: CmStatus,
}

impl CmCertificate {
    pub fn is_cm_witnessed(&self) -> bool {
        self.status == CmStatus::Witnessed
    }
}

/// The l.s.o.p. used for linear stresses: special when `Δ` is cs, generic
/// otherwise.
pub fn default_lsop(complex: &SimplicialComplex, seed: u64) -> Result<LsopSample> {
    if complex.is_cs() {
        special_lsop(complex, seed)
    } else {
        generic_lsop(complex, seed)
    }
}

/// Compares `dim Stress(Δ,Θ)_i` with `h_i` for `0 ≤ i ≤ d` and a sampled
/// l.s.o.p. `Θ`.
pub fn cm_certificate(complex: &SimplicialComplex, seed: u64) -> Result<CmCertificate> {
    let h = complex.fhg_vectors()?.h;
    let lsop = default_lsop(complex, seed)?;
    let spaces = stress_spaces(complex, &lsop.forms, 0..=complex.krull_dim())?;
    Ok(certificate_from(&lsop, &spaces, h))
}

pub(crate) fn certificate_from(lsop: &LsopSample, spaces: &[StressSpace], h: Vec<i64>) -> CmCertificate {
    let dims: Vec<usize> = spaces.iter().map(StressSpace::dim).collect();
    let status = if dims.iter().zip(&h).all(|(&a, &b)| a as i64 == b) { CmStatus::Witnessed } else { CmStatus::NotCm };
    CmCertificate { seed: lsop.seed, attempts: lsop.attempts, retry_log: lsop.retry_log.clone(), dims, h, status }
}
