//! Runnable checks of the lower bound theorems, their equality cases and the
//! lemmas behind them, on concrete instances.
//!
//! Each check yields a [`VerificationReport`]. When a claim's hypothesis does
//! not hold the verdict is [`Verdict::HypothesisUnmet`]; it is never folded
//! into `Pass` or `Fail`. A `Fail` always carries a [`Witness`].

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{rational, LinearForm, Polynomial, Rational, YRepresentation};
use crate::complex::{
    antipodal_pairs, binomial, binomial_signed, cross_polytope_boundary, cross_polytope_on,
    detect_cross_polytope_subcomplexes, Face, FhgVectors, SimplicialComplex, Vertex,
};
use crate::error::{Error, Result};
use crate::instance::{Expectations, Instance};
use crate::linalg::Basis;
use crate::polytope::Polytope;
use crate::stress::{
    canonical_forms, certificate_from, default_lsop, first_degenerate_facet, stress_spaces, CmCertificate, FormKind,
    FormSequence, LsopSample, StressSpace, MAX_RETRIES,
};

/// Claim identifiers. Affine variants use canonical polytope forms instead
/// of a special l.s.o.p.
pub mod claim {
    pub const EXPECT: &str = "expect";
    pub const LSOP: &str = "lsop";
    pub const LBT: &str = "lbt";
    pub const LBT_AFFINE: &str = "lbt-affine";
    pub const SYMMETRY: &str = "symmetry-equivalence";
    pub const SYMMETRY_AFFINE: &str = "symmetry-equivalence-affine";
    pub const CLOSURE: &str = "derivative-closure";
    pub const CLOSURE_AFFINE: &str = "derivative-closure-affine";
    pub const LINK_SUPPORT: &str = "link-support";
    pub const LINK_SUPPORT_AFFINE: &str = "link-support-affine";
    pub const SQUAREFREE: &str = "squarefree-lift";
    pub const SQUAREFREE_AFFINE: &str = "squarefree-lift-affine";
    pub const PROPAGATION: &str = "stress-propagation";
    pub const PROPAGATION_AFFINE: &str = "stress-propagation-affine";
    pub const H_PROPAGATION: &str = "h-propagation";
    pub const H_SCAN: &str = "h-propagation-scan";
    pub const G_PROPAGATION: &str = "g-propagation";
    pub const G_SCAN: &str = "g-propagation-scan";
    pub const CROSS_SUBCOMPLEX: &str = "cross-subcomplex";
    pub const CROSS_SUBCOMPLEX_AFFINE: &str = "cross-subcomplex-affine";

    pub const ALL: &[&str] = &[
        EXPECT,
        LSOP,
        LBT,
        LBT_AFFINE,
        SYMMETRY,
        SYMMETRY_AFFINE,
        CLOSURE,
        CLOSURE_AFFINE,
        LINK_SUPPORT,
        LINK_SUPPORT_AFFINE,
        SQUAREFREE,
        SQUAREFREE_AFFINE,
        PROPAGATION,
        PROPAGATION_AFFINE,
        H_PROPAGATION,
        H_SCAN,
        G_PROPAGATION,
        G_SCAN,
        CROSS_SUBCOMPLEX,
        CROSS_SUBCOMPLEX_AFFINE,
    ];
}

/// Random combinations drawn per degree in addition to the basis.
pub const COMBINATIONS_PER_DEGREE: usize = 5;
/// `(c, w)` pairs drawn per instance and form sequence by the closure check.
pub const CLOSURE_PAIRS: usize = 10;
/// Edges of `supp(w)` tried per sampled `w` in the propagation check.
const EDGES_PER_STRESS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisUnmet,
    NoInstance,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Dimension { quantity: String, degree: usize, expected: i64, computed: i64 },
    Vector { quantity: String, expected: Vec<i64>, computed: Vec<i64> },
    Polynomial { polynomial: String, reason: String },
    Faces { faces: Vec<Vec<i32>>, reason: String },
}

impl Witness {
    fn polynomial(w: &Polynomial, reason: impl Into<String>) -> Self {
        Witness::Polynomial { polynomial: w.to_string(), reason: reason.into() }
    }

    fn faces<'a>(faces: impl IntoIterator<Item = &'a Face>, reason: impl Into<String>) -> Self {
        Witness::Faces { faces: faces.into_iter().map(Face::labels).collect(), reason: reason.into() }
    }

    fn dimension(quantity: &str, degree: usize, expected: i64, computed: i64) -> Self {
        Witness::Dimension { quantity: quantity.into(), degree, expected, computed }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: Verdict,
    pub expected: Value,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl VerificationReport {
    fn new(instance: &str, claim: &str, degree: Option<usize>, seed: Option<u64>) -> Self {
        VerificationReport {
            instance: instance.to_string(),
            claim: claim.to_string(),
            degree,
            seed,
            verdict: Verdict::Pass,
            expected: Value::Null,
            computed: Value::Null,
            witness: None,
            note: String::new(),
        }
    }

    fn values(mut self, expected: Value, computed: Value) -> Self {
        self.expected = expected;
        self.computed = computed;
        self
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    fn unmet(mut self, note: impl Into<String>) -> Self {
        self.verdict = Verdict::HypothesisUnmet;
        self.note = note.into();
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    fn sort_key(&self) -> (&str, &str, Option<usize>) {
        (&self.instance, &self.claim, self.degree)
    }
}

/// Seeds a sampler from the run seed and what it is sampling for.
fn sub_rng(seed: u64, tag: &str, degree: usize) -> ChaCha8Rng {
    let mixed = tag
        .bytes()
        .chain(degree.to_le_bytes())
        .fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    ChaCha8Rng::seed_from_u64(mixed)
}

fn small_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-9..=9))
}

/// A nonzero combination of `basis` with small integer coefficients.
pub fn random_element(space: &StressSpace, basis: &Basis, rng: &mut ChaCha8Rng) -> Polynomial {
    if basis.dim() == 0 {
        return Polynomial::zero(space.degree());
    }
    let mut coeffs: Vec<Rational> = (0..basis.dim()).map(|_| small_coefficient(rng)).collect();
    if coeffs.iter().all(Zero::is_zero) {
        coeffs[0] = rational(rng.gen_range(1..=9));
    }
    space.to_polynomial(&basis.combination(&coeffs))
}

/// Basis polynomials followed by `extra` random combinations.
fn samples(space: &StressSpace, basis: &Basis, rng: &mut ChaCha8Rng, extra: usize) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = basis.vectors().iter().map(|v| space.to_polynomial(v)).collect();
    if basis.dim() > 0 {
        out.extend((0..extra).map(|_| random_element(space, basis, rng)));
    }
    out
}

fn half(x: i64) -> Value {
    if x % 2 == 0 {
        json!(x / 2)
    } else {
        json!(format!("{x}/2"))
    }
}

fn is_stress(w: &Polynomial, complex: &SimplicialComplex, forms: &FormSequence) -> bool {
    w.lives_on(complex) && forms.forms().iter().all(|f| w.derivative(f).is_zero())
}

/// Stress spaces of one complex for one form sequence, in degrees
/// `0..spaces.len()`.
#[derive(Clone, Debug)]
pub struct StressTable {
    pub forms: FormSequence,
    pub spaces: Vec<StressSpace>,
}

impl StressTable {
    pub fn top_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.spaces[i].dim()
    }

    pub fn minus_dim(&self, i: usize) -> Option<usize> {
        self.spaces[i].minus_dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(StressSpace::dim).collect()
    }

    pub fn minus_dims(&self) -> Option<Vec<usize>> {
        self.spaces.iter().map(StressSpace::minus_dim).collect()
    }
}

/// One sampled `(c, w)` pair of the closure check.
#[derive(Clone, Debug)]
pub struct ClosureSample {
    pub form: LinearForm,
    pub stress: Polynomial,
    pub derivative: Polynomial,
    pub holds: bool,
}

/// Draws `n` pairs of a random linear form `c` on `ground` and a random
/// stress `w` of positive degree, and tests `∂_c w ∈ Stress_{i−1}` by rank.
pub fn sample_closure_pairs(
    table: &StressTable,
    ground: &[Vertex],
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<ClosureSample> {
    let degrees: Vec<usize> = (1..=table.top_degree()).filter(|&i| table.dim(i) > 0).collect();
    if degrees.is_empty() {
        return Vec::new();
    }
    (0..n)
        .map(|_| {
            let i = degrees[rng.gen_range(0..degrees.len())];
            let space = &table.spaces[i];
            let stress = random_element(space, space.basis(), rng);
            let form = LinearForm::new(ground.iter().map(|&v| (v, small_coefficient(rng))));
            let derivative = stress.derivative(&form);
            let holds = table.spaces[i - 1].contains_by_rank(&derivative);
            ClosureSample { form, stress, derivative, holds }
        })
        .collect()
}

/// Checks that a symmetric stress living on `st(v)` lives on
/// `lk(v) ∩ lk(−v)`.
pub fn verify_symmetric_link_support(
    instance: &str,
    complex: &SimplicialComplex,
    forms: &FormSequence,
    w: &Polynomial,
    v: Vertex,
) -> VerificationReport {
    let r = VerificationReport::new(instance, claim::LINK_SUPPORT, Some(w.degree()), None);
    if !complex.is_cs() {
        return r.unmet("complex is not centrally symmetric");
    }
    if !forms.is_parity_homogeneous() {
        return r.unmet("forms are not parity homogeneous");
    }
    if !is_stress(w, complex, forms) {
        return r.unmet("w is not a stress");
    }
    if !w.is_symmetric() {
        return r.unmet("w is not symmetric");
    }
    let vf = Face::new([v]);
    let (Ok(star), Ok(link), Ok(anti_link)) =
        (complex.star(&vf), complex.link(&vf), complex.link(&Face::new([v.antipode()])))
    else {
        return r.unmet(format!("{v} is not a vertex"));
    };
    if !w.lives_on(&star) {
        return r.unmet(format!("w does not live on st({v})"));
    }
    let target = link.intersection(&anti_link);
    let outside: Vec<Face> = w.term_supports().into_iter().filter(|f| !target.contains_face(f)).collect();
    let r = r.values(json!({"lives_on": format!("lk({v}) ∩ lk({})", v.antipode())}), json!({"terms": w.terms().len()}));
    if outside.is_empty() {
        r
    } else {
        r.fail(Witness::faces(&outside, format!("term supports of {w} outside lk({v}) ∩ lk({})", v.antipode())))
    }
}

fn link_support_check(
    r: VerificationReport,
    complex: &SimplicialComplex,
    table: &StressTable,
    i: usize,
    rng: &mut ChaCha8Rng,
) -> Result<VerificationReport> {
    if !complex.is_cs() {
        return Ok(r.unmet("complex is not centrally symmetric"));
    }
    let Some(symmetric) = table.spaces[i].symmetric_part() else {
        return Ok(r.unmet("forms are not parity homogeneous"));
    };
    let (mut checked, mut nonzero, mut vertices_with_stresses) = (0usize, 0usize, 0usize);
    for v in complex.vertices() {
        let star = complex.star(&Face::new([v]))?;
        let on_star = symmetric.restrict(&star)?;
        if on_star.dim() > 0 {
            vertices_with_stresses += 1;
        }
        for w in samples(&on_star, on_star.basis(), rng, COMBINATIONS_PER_DEGREE) {
            let single = verify_symmetric_link_support(&r.instance, complex, &table.forms, &w, v);
            match single.verdict {
                Verdict::Fail => {
                    return Ok(r.fail(single.witness.expect("failures carry witnesses")));
                }
                Verdict::HypothesisUnmet => {
                    return Err(Error::Invariant(format!("sampled stress on st({v}) rejected: {}", single.note)));
                }
                _ => {}
            }
            checked += 1;
            nonzero += !w.is_zero() as usize;
        }
    }
    let r = r.values(
        json!({"symmetric_star_stresses_live_on": "lk(v) ∩ lk(-v)"}),
        json!({"checked": checked, "nonzero": nonzero, "vertices_with_star_stresses": vertices_with_stresses}),
    );
    Ok(if checked == 0 { r.unmet("no symmetric stress lives on the star of any vertex") } else { r })
}

fn squarefree_check(
    r: VerificationReport,
    ground: &[Vertex],
    space: &StressSpace,
    rng: &mut ChaCha8Rng,
) -> VerificationReport {
    let ws = samples(space, space.basis(), rng, COMBINATIONS_PER_DEGREE);
    let (mut filtered, mut symmetric, mut lifted) = (0usize, 0usize, 0usize);
    for w in &ws {
        if w.is_zero() {
            continue;
        }
        let derivatives: Vec<Polynomial> = ground.iter().map(|&v| w.partial(v)).collect();
        if !derivatives.iter().all(Polynomial::is_symmetric) {
            continue;
        }
        filtered += 1;
        if !w.is_squarefree() {
            return r.fail(Witness::polynomial(w, "all vertex derivatives are symmetric but w is not squarefree"));
        }
        if w.is_symmetric() {
            symmetric += 1;
            match w.y_representation() {
                Ok(rep @ YRepresentation::Represented(_)) => {
                    if rep.expand(w.degree()).as_ref() != Some(w) {
                        return r.fail(Witness::polynomial(w, "y-representation does not expand back to w"));
                    }
                }
                Ok(YRepresentation::NotRepresentable { pair }) => {
                    return r.fail(Witness::polynomial(
                        w,
                        format!("symmetric squarefree stress is not a polynomial in y (pair {pair})"),
                    ));
                }
                Err(e) => return r.fail(Witness::polynomial(w, format!("y-representation failed: {e}"))),
            }
        }
        let derivatives_in_y =
            derivatives.iter().all(|d| matches!(d.y_representation(), Ok(YRepresentation::Represented(_))));
        if w.degree() >= 2 && derivatives_in_y {
            lifted += 1;
            if !matches!(w.y_representation(), Ok(YRepresentation::Represented(_))) || !w.is_symmetric() {
                return r.fail(Witness::polynomial(w, "every vertex derivative is a polynomial in y but w is not"));
            }
        }
    }
    let r = r.values(
        json!({"squarefree": "when all vertex derivatives are symmetric"}),
        json!({"sampled": ws.len(), "derivatives_symmetric": filtered, "symmetric": symmetric, "derivatives_in_y": lifted}),
    );
    if filtered == 0 {
        r.unmet("no sampled stress has symmetric vertex derivatives")
    } else {
        r
    }
}

fn edges_of(w: &Polynomial) -> Vec<(Vertex, Vertex)> {
    let mut edges = BTreeSet::new();
    for f in w.term_supports() {
        let vs = f.vertices();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                edges.insert((vs[a], vs[b]));
            }
        }
    }
    edges.into_iter().take(EDGES_PER_STRESS).collect()
}

/// `w′ = (y_{u1} − y_{u2}) · ∂_{u2}∂_{u1} w`.
pub fn w_prime(w: &Polynomial, u1: Vertex, u2: Vertex) -> Polynomial {
    let one = rational(1);
    let factor = LinearForm::new([(u1, one.clone()), (u1.antipode(), one.clone()), (u2, -&one), (u2.antipode(), -one)]);
    w.partial(u1).partial(u2).mul_linear(&factor)
}

/// Builds `w′` for sampled `w ∈ Stress_{i+1}` and edges of `supp(w)`, and
/// checks it is annihilated by `Θ`. When all `i`-stresses are symmetric it
/// must also be a symmetric `i`-stress.
fn w_prime_check(
    complex: &SimplicialComplex,
    table: &StressTable,
    i: usize,
    symmetric_below: bool,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<usize, Witness> {
    if i + 1 > table.top_degree() {
        return Ok(0);
    }
    let space = &table.spaces[i + 1];
    let mut built = 0;
    for w in samples(space, space.basis(), rng, COMBINATIONS_PER_DEGREE) {
        for (u1, u2) in edges_of(&w) {
            let wp = w_prime(&w, u1, u2);
            built += 1;
            if let Some(theta) = table.forms.forms().iter().find(|t| !wp.derivative(t).is_zero()) {
                return Err(Witness::polynomial(
                    &wp,
                    format!("w' from {w} at edge {{{u1},{u2}}} is not annihilated by {theta}"),
                ));
            }
            if symmetric_below {
                if !wp.lives_on(complex) {
                    return Err(Witness::polynomial(
                        &wp,
                        format!("w' from edge {{{u1},{u2}}} does not live on the complex"),
                    ));
                }
                if !wp.is_symmetric() {
                    return Err(Witness::polynomial(&wp, format!("w' from edge {{{u1},{u2}}} is not symmetric")));
                }
            }
        }
    }
    Ok(built)
}

fn propagation_check(
    r: VerificationReport,
    complex: &SimplicialComplex,
    table: &StressTable,
    i: usize,
    rng: &mut ChaCha8Rng,
) -> Result<VerificationReport> {
    if !complex.is_cs() {
        return Ok(r.unmet("complex is not centrally symmetric"));
    }
    if !table.forms.meets_propagation_hypothesis(complex.ground_set()) {
        return Ok(r.unmet("forms do not meet the parity hypothesis"));
    }
    let minus = table.minus_dims().ok_or_else(|| Error::Invariant("parity forms without ± split".into()))?;
    let top = table.top_degree();
    let symmetric_below = minus[i] == 0;
    let built = match w_prime_check(complex, table, i, symmetric_below, rng) {
        Ok(n) => n,
        Err(witness) => return Ok(r.fail(witness)),
    };
    let r = r.values(
        json!({"minus_dims_from_degree": vec![0; top + 1 - i]}),
        json!({"minus_dims_from_degree": minus[i..], "dims_from_degree": table.dims()[i..], "w_prime_samples": built}),
    );
    if !symmetric_below {
        return Ok(r.unmet(format!(
            "hypothesis not satisfied (minus dim {} in degree {i}); nothing to check beyond w' annihilation",
            minus[i]
        )));
    }
    for (j, &m) in minus.iter().enumerate().take(top + 1).skip(i) {
        if m != 0 {
            return Ok(r.fail(Witness::dimension("minus dim", j, 0, m as i64)));
        }
    }
    let mut detected = Vec::new();
    for j in i + 1..=top {
        let space = &table.spaces[j];
        if space.dim() == 0 {
            continue;
        }
        let found = detect_cross_polytope_subcomplexes(complex, j)?;
        if found.is_empty() {
            return Ok(
                r.fail(Witness::faces([], format!("nonzero {j}-stresses but no boundary of a {j}-cross-polytope")))
            );
        }
        detected.push(j);
        for w in space.basis_polynomials() {
            let Ok(YRepresentation::Represented(coeffs)) = w.y_representation() else {
                return Ok(
                    r.fail(Witness::polynomial(&w, "stress above the symmetric degree is not a polynomial in y"))
                );
            };
            for (tau, c) in coeffs.iter().filter(|(_, c)| !c.is_zero()) {
                let gamma = cross_polytope_on(tau)?;
                if let Some(missing) = gamma.first_face_missing_from(complex) {
                    return Ok(r.fail(Witness::faces(
                        [&missing],
                        format!("y-monomial {tau:?} with coefficient {c} needs a cross-polytope not in the complex"),
                    )));
                }
            }
        }
    }
    let mut r = r;
    r.computed["cross_polytopes_detected_in_degrees"] = json!(detected);
    Ok(r)
}

fn cross_polytope_isomorphism(complex: &SimplicialComplex, d: usize) -> Result<Option<Witness>> {
    let pairs = antipodal_pairs(complex);
    let found = detect_cross_polytope_subcomplexes(complex, d)?;
    if found != vec![pairs] {
        let missing = cross_polytope_boundary(d)?.first_face_missing_from(complex);
        return Ok(Some(Witness::faces(
            missing.iter(),
            format!("complex on {} vertices is not contained in a d-cross-polytope boundary of its pairs", 2 * d),
        )));
    }
    let f = complex.fhg_vectors()?.f;
    let target = FhgVectors::from_f(cross_polytope_face_numbers(d)).f;
    if f != target {
        return Ok(Some(Witness::Vector { quantity: "f".into(), expected: target, computed: f }));
    }
    Ok(None)
}

fn cross_polytope_face_numbers(d: usize) -> Vec<i64> {
    (0..=d).map(|k| binomial(d, k) << k).collect()
}

/// Linear stresses of a complex for a sampled l.s.o.p., in degrees
/// `0..=d+1`.
pub struct LinearRun {
    pub instance: String,
    pub complex: SimplicialComplex,
    pub fhg: FhgVectors,
    pub lsop: LsopSample,
    pub table: StressTable,
    pub certificate: CmCertificate,
}

impl LinearRun {
    pub fn new(instance: impl Into<String>, complex: SimplicialComplex, seed: u64) -> Result<Self> {
        let fhg = complex.fhg_vectors()?;
        let lsop = default_lsop(&complex, seed)?;
        let d = complex.krull_dim();
        let spaces = stress_spaces(&complex, &lsop.forms, 0..=d + 1)?;
        let certificate = certificate_from(&lsop, &spaces[..=d], fhg.h.clone());
        let table = StressTable { forms: lsop.forms.clone(), spaces };
        Ok(LinearRun { instance: instance.into(), complex, fhg, lsop, table, certificate })
    }

    pub fn d(&self) -> usize {
        self.complex.krull_dim()
    }

    fn report(&self, claim: &str, degree: Option<usize>) -> VerificationReport {
        VerificationReport::new(&self.instance, claim, degree, Some(self.lsop.seed))
    }

    fn rng(&self, claim: &str, degree: usize) -> ChaCha8Rng {
        sub_rng(self.lsop.seed, claim, degree)
    }

    /// Why the cs Cohen-Macaulay hypothesis fails, if it does.
    fn cs_cm_gap(&self) -> Option<String> {
        if !self.complex.is_cs() {
            return Some("complex is not centrally symmetric".into());
        }
        if !self.certificate.is_cm_witnessed() {
            return Some(format!(
                "not Cohen-Macaulay: stress dimensions {:?} differ from h {:?} for a certified l.s.o.p.",
                self.certificate.dims, self.certificate.h
            ));
        }
        None
    }

    fn minus(&self, i: usize) -> i64 {
        self.table.minus_dim(i).expect("special l.s.o.p. on a cs complex splits") as i64
    }

    /// The l.s.o.p. passes the facet-rank check within the retry budget, a
    /// sequence with a repeated form fails it, and on Cohen-Macaulay
    /// instances there are no stresses above degree `d`.
    pub fn verify_lsop(&self) -> Result<VerificationReport> {
        let d = self.d();
        let top = self.table.dim(d + 1);
        let r = self.report(claim::LSOP, None).values(
            json!({"max_attempts": MAX_RETRIES + 1, "dim_above_d": if self.certificate.is_cm_witnessed() { json!(0) } else { Value::Null }}),
            json!({
                "attempts": self.lsop.attempts,
                "retry_log": self.lsop.retry_log,
                "special": self.lsop.forms.kind() == FormKind::SpecialLsop,
                "cm": self.certificate.status,
                "dims": self.certificate.dims,
                "h": self.certificate.h,
                "dim_above_d": top,
            }),
        );
        if let Some(f) = first_degenerate_facet(&self.complex, &self.lsop.forms)? {
            return Ok(r.fail(Witness::faces([&f], "facet block of the sampled forms is rank deficient")));
        }
        if d >= 2 {
            let mut repeated = self.lsop.forms.forms().to_vec();
            repeated[1] = repeated[0].clone();
            if first_degenerate_facet(&self.complex, &FormSequence::custom(repeated))?.is_none() {
                return Ok(r.fail(Witness::polynomial(
                    &self.lsop.forms.forms()[0].to_polynomial(),
                    "sequence repeating this form passed the facet-rank check",
                )));
            }
        }
        if self.certificate.is_cm_witnessed() && top != 0 {
            return Ok(r.fail(Witness::dimension("stress dim", d + 1, 0, top as i64)));
        }
        Ok(r)
    }

    /// `h_i ≥ C(d,i)` and `dim Stress⁻_i = (h_i − C(d,i))/2` for `1 ≤ i ≤ d`.
    pub fn verify_lbt(&self) -> VerificationReport {
        let r = self.report(claim::LBT, None);
        if let Some(gap) = self.cs_cm_gap() {
            return r.unmet(gap);
        }
        let d = self.d();
        let h = &self.fhg.h;
        let minus: Vec<i64> = (1..=d).map(|i| self.minus(i)).collect();
        let r = r.values(
            json!({
                "h_lower_bound": (1..=d).map(|i| binomial(d, i)).collect::<Vec<_>>(),
                "minus_dims": (1..=d).map(|i| half(h[i] - binomial(d, i))).collect::<Vec<_>>(),
            }),
            json!({"h": h[1..], "minus_dims": minus}),
        );
        for i in 1..=d {
            let c = binomial(d, i);
            if h[i] < c {
                return r.fail(Witness::dimension("h (lower bound)", i, c, h[i]));
            }
            if 2 * minus[i - 1] != h[i] - c {
                return r.fail(Witness::dimension("2 * minus dim", i, h[i] - c, 2 * minus[i - 1]));
            }
        }
        r
    }

    /// `h_i = C(d,i)` exactly when every linear `i`-stress is symmetric.
    pub fn verify_symmetry_equivalence(&self, i: usize) -> VerificationReport {
        let r = self.report(claim::SYMMETRY, Some(i));
        if let Some(gap) = self.cs_cm_gap() {
            return r.unmet(gap);
        }
        let d = self.d();
        if i < 1 || i > d {
            return r.unmet(format!("degree must lie in 1..={d}"));
        }
        let (h, c, m) = (self.fhg.h[i], binomial(d, i), self.minus(i));
        symmetry_report(r, i, h, c, m)
    }

    pub fn verify_closure(&self, pairs: usize) -> VerificationReport {
        closure_report(
            self.report(claim::CLOSURE, None),
            &self.table,
            self.complex.ground_set(),
            pairs,
            &mut self.rng(claim::CLOSURE, 0),
        )
    }

    pub fn verify_link_support(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::LINK_SUPPORT, Some(i));
        link_support_check(r, &self.complex, &self.table, i, &mut self.rng(claim::LINK_SUPPORT, i))
    }

    pub fn verify_squarefree_lift(&self, i: usize) -> VerificationReport {
        let r = self.report(claim::SQUAREFREE, Some(i));
        squarefree_check(r, self.complex.ground_set(), &self.table.spaces[i], &mut self.rng(claim::SQUAREFREE, i))
    }

    pub fn verify_stress_propagation(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::PROPAGATION, Some(i));
        if i < 2 {
            return Ok(r.unmet("propagation starts in degree 2"));
        }
        if let Some(gap) = self.cs_cm_gap() {
            return Ok(r.unmet(gap));
        }
        propagation_check(r, &self.complex, &self.table, i, &mut self.rng(claim::PROPAGATION, i))
    }

    /// `h_i = C(d,i)` forces `h_j = C(d,j)` for `i ≤ j ≤ d`; for `i = 1` the
    /// complex is the boundary of the `d`-cross-polytope.
    pub fn verify_propagation(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::H_PROPAGATION, Some(i));
        if let Some(gap) = self.cs_cm_gap() {
            return Ok(r.unmet(gap));
        }
        let d = self.d();
        if i < 1 || i >= d {
            return Ok(r.unmet(format!("degree must lie in 1..{d}")));
        }
        let h = &self.fhg.h;
        let r = r.values(
            json!({"h_from_degree": (i..=d).map(|j| binomial(d, j)).collect::<Vec<_>>()}),
            json!({"h_from_degree": h[i..]}),
        );
        if h[i] != binomial(d, i) {
            return Ok(r.unmet(format!("h_{i} = {} differs from C({d},{i}) = {}", h[i], binomial(d, i))));
        }
        for (j, &hj) in h.iter().enumerate().take(d + 1).skip(i) {
            if hj != binomial(d, j) {
                return Ok(r.fail(Witness::dimension("h", j, binomial(d, j), hj)));
            }
        }
        if i == 1 {
            if let Some(w) = cross_polytope_isomorphism(&self.complex, d)? {
                return Ok(r.fail(w));
            }
            return Ok(r.with_note("isomorphic to the boundary of the d-cross-polytope"));
        }
        Ok(r)
    }

    /// No `i < j` with `h_i = C(d,i)` and `h_j > C(d,j)`.
    pub fn verify_h_scan(&self) -> VerificationReport {
        let r = self.report(claim::H_SCAN, None);
        if let Some(gap) = self.cs_cm_gap() {
            return r.unmet(gap);
        }
        let d = self.d();
        let bounds: Vec<i64> = (0..=d).map(|j| binomial(d, j)).collect();
        scan_report(r, &self.fhg.h[..=d], &bounds, 1..=d)
    }

    /// Locates `Γ ≅ ∂C*_d` and checks `Stress(Δ)_j = Stress(Γ)_j` for `j ≥ i`.
    pub fn verify_cross_subcomplex(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::CROSS_SUBCOMPLEX, Some(i));
        if let Some(gap) = self.cs_cm_gap() {
            return Ok(r.unmet(gap));
        }
        let d = self.d();
        if i < 1 || i >= d {
            return Ok(r.unmet(format!("degree must lie in 1..{d}")));
        }
        if self.fhg.h[i] != binomial(d, i) {
            return Ok(r.unmet(format!("h_{i} = {} differs from C({d},{i})", self.fhg.h[i])));
        }
        let found = detect_cross_polytope_subcomplexes(&self.complex, d)?;
        let Some(pairs) = found.first() else {
            return Ok(r.fail(Witness::faces(
                [],
                format!("no subcomplex isomorphic to the boundary of the {d}-cross-polytope"),
            )));
        };
        let gamma = cross_polytope_on(pairs)?;
        let whole = gamma.num_faces() == self.complex.num_faces();
        let dims: Vec<usize> = (i..=d).map(|j| self.table.dim(j)).collect();
        let mut restricted = Vec::new();
        for j in i..=d {
            restricted.push(self.table.spaces[j].restrict(&gamma)?.dim());
        }
        let r = r.values(
            json!({"restricted_dims_from_degree": dims}),
            json!({"gamma_pairs": pairs, "gamma_is_whole_complex": whole, "restricted_dims_from_degree": restricted}),
        );
        for (k, (a, b)) in dims.iter().zip(&restricted).enumerate() {
            if a != b {
                return Ok(r.fail(Witness::dimension("stress dim on Γ", i + k, *a as i64, *b as i64)));
            }
        }
        Ok(r)
    }
}

fn symmetry_report(r: VerificationReport, i: usize, value: i64, bound: i64, minus: i64) -> VerificationReport {
    let equality = value == bound;
    let symmetric = minus == 0;
    let r = r.values(
        json!({"equality": equality, "value": value, "bound": bound}),
        json!({"all_symmetric": symmetric, "minus_dim": minus}),
    );
    if equality == symmetric {
        r
    } else {
        let expected = if equality { 0 } else { (value - bound).max(1) };
        r.fail(Witness::dimension("minus dim", i, expected, minus))
    }
}

fn closure_report(
    r: VerificationReport,
    table: &StressTable,
    ground: &[Vertex],
    pairs: usize,
    rng: &mut ChaCha8Rng,
) -> VerificationReport {
    let drawn = sample_closure_pairs(table, ground, pairs, rng);
    let r = r.values(
        json!({"failures": 0}),
        json!({"pairs": drawn.len(), "failures": drawn.iter().filter(|s| !s.holds).count()}),
    );
    if let Some(bad) = drawn.iter().find(|s| !s.holds) {
        return r.fail(Witness::polynomial(
            &bad.derivative,
            format!("∂_c w with c = {} and w = {} is not a stress", bad.form, bad.stress),
        ));
    }
    if drawn.is_empty() {
        r.unmet("no stresses of positive degree")
    } else {
        r
    }
}

fn scan_report(
    r: VerificationReport,
    values: &[i64],
    bounds: &[i64],
    range: std::ops::RangeInclusive<usize>,
) -> VerificationReport {
    let vals: Vec<i64> = range.clone().map(|j| values[j]).collect();
    let bds: Vec<i64> = range.clone().map(|j| bounds[j]).collect();
    let r = r.values(json!({"bounds": bds}), json!({"values": vals}));
    for j in range.clone() {
        if values[j] > bounds[j] {
            if let Some(i) = (*range.start()..j).find(|&i| values[i] == bounds[i]) {
                return r.fail(Witness::Vector {
                    quantity: format!("equality at {i} but strict inequality at {j}"),
                    expected: bds,
                    computed: vals,
                });
            }
        }
    }
    r
}

/// Affine stresses of a polytope boundary for its canonical forms, in
/// degrees `0..=⌊d/2⌋+1`.
pub struct AffineRun {
    pub instance: String,
    pub polytope: Polytope,
    pub fhg: FhgVectors,
    pub seed: u64,
    pub table: StressTable,
}

impl AffineRun {
    pub fn new(instance: impl Into<String>, polytope: Polytope, seed: u64) -> Result<Self> {
        let fhg = polytope.boundary().fhg_vectors()?;
        let forms = canonical_forms(&polytope)?;
        let spaces = stress_spaces(polytope.boundary(), &forms, 0..=polytope.dim() / 2 + 1)?;
        let table = StressTable { forms, spaces };
        Ok(AffineRun { instance: instance.into(), polytope, fhg, seed, table })
    }

    pub fn d(&self) -> usize {
        self.polytope.dim()
    }

    fn complex(&self) -> &SimplicialComplex {
        self.polytope.boundary()
    }

    fn report(&self, claim: &str, degree: Option<usize>) -> VerificationReport {
        VerificationReport::new(&self.instance, claim, degree, Some(self.seed))
    }

    fn rng(&self, claim: &str, degree: usize) -> ChaCha8Rng {
        sub_rng(self.seed, claim, degree)
    }

    /// `C(d,i) − C(d,i−1)`.
    fn g_bound(&self, i: usize) -> i64 {
        binomial(self.d(), i) - binomial_signed(self.d(), i as isize - 1)
    }

    fn minus(&self, i: usize) -> i64 {
        self.table.minus_dim(i).expect("canonical forms split") as i64
    }

    /// `g_i ≥ C(d,i) − C(d,i−1)`, `dim = g_i` and
    /// `dim Stress⁻_i = (g_i − C(d,i) + C(d,i−1))/2` for `1 ≤ i ≤ d/2`.
    pub fn verify_polytope_lbt(&self) -> VerificationReport {
        let d = self.d();
        let g = &self.fhg.g;
        let range = 1..=d / 2;
        let r = self.report(claim::LBT_AFFINE, None).values(
            json!({
                "g_lower_bound": range.clone().map(|i| self.g_bound(i)).collect::<Vec<_>>(),
                "dims": g[1..],
                "minus_dims": range.clone().map(|i| half(g[i] - self.g_bound(i))).collect::<Vec<_>>(),
            }),
            json!({
                "g": g[1..],
                "dims": range.clone().map(|i| self.table.dim(i)).collect::<Vec<_>>(),
                "minus_dims": range.clone().map(|i| self.minus(i)).collect::<Vec<_>>(),
                "dims_above": (d / 2 + 1..=self.table.top_degree()).map(|i| self.table.dim(i)).collect::<Vec<_>>(),
            }),
        );
        if self.table.dim(0) != 1 {
            return r.fail(Witness::dimension("affine stress dim", 0, 1, self.table.dim(0) as i64));
        }
        for i in range {
            let b = self.g_bound(i);
            if g[i] < b {
                return r.fail(Witness::dimension("g (lower bound)", i, b, g[i]));
            }
            if self.table.dim(i) as i64 != g[i] {
                return r.fail(Witness::dimension("affine stress dim", i, g[i], self.table.dim(i) as i64));
            }
            if 2 * self.minus(i) != g[i] - b {
                return r.fail(Witness::dimension("2 * minus dim", i, g[i] - b, 2 * self.minus(i)));
            }
        }
        r.with_note("convexity of the polytope is assumed")
    }

    pub fn verify_symmetry_equivalence(&self, i: usize) -> VerificationReport {
        let r = self.report(claim::SYMMETRY_AFFINE, Some(i));
        if i < 1 || 2 * i > self.d() {
            return r.unmet(format!("degree must lie in 1..={}", self.d() / 2));
        }
        symmetry_report(r, i, self.fhg.g[i], self.g_bound(i), self.minus(i))
    }

    pub fn verify_closure(&self, pairs: usize) -> VerificationReport {
        let r = self.report(claim::CLOSURE_AFFINE, None);
        closure_report(r, &self.table, self.complex().ground_set(), pairs, &mut self.rng(claim::CLOSURE_AFFINE, 0))
    }

    pub fn verify_link_support(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::LINK_SUPPORT_AFFINE, Some(i));
        link_support_check(r, self.complex(), &self.table, i, &mut self.rng(claim::LINK_SUPPORT_AFFINE, i))
    }

    pub fn verify_squarefree_lift(&self, i: usize) -> VerificationReport {
        let r = self.report(claim::SQUAREFREE_AFFINE, Some(i));
        squarefree_check(
            r,
            self.complex().ground_set(),
            &self.table.spaces[i],
            &mut self.rng(claim::SQUAREFREE_AFFINE, i),
        )
    }

    pub fn verify_stress_propagation(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::PROPAGATION_AFFINE, Some(i));
        if i < 2 {
            return Ok(r.unmet("propagation starts in degree 2"));
        }
        propagation_check(r, self.complex(), &self.table, i, &mut self.rng(claim::PROPAGATION_AFFINE, i))
    }

    /// g-equality at `i < d/2` propagates up to `d/2`; for `i = 1` the
    /// boundary is that of the `d`-cross-polytope.
    pub fn verify_propagation(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::G_PROPAGATION, Some(i));
        let d = self.d();
        if i < 1 || 2 * i >= d {
            return Ok(r.unmet("degree must satisfy 1 <= i < d/2"));
        }
        let g = &self.fhg.g;
        let r = r.values(
            json!({"g_from_degree": (i..=d / 2).map(|j| self.g_bound(j)).collect::<Vec<_>>()}),
            json!({"g_from_degree": g[i..]}),
        );
        if g[i] != self.g_bound(i) {
            return Ok(r.unmet(format!("g_{i} = {} differs from {}", g[i], self.g_bound(i))));
        }
        for (j, &gj) in g.iter().enumerate().take(d / 2 + 1).skip(i) {
            if gj != self.g_bound(j) {
                return Ok(r.fail(Witness::dimension("g", j, self.g_bound(j), gj)));
            }
        }
        if i == 1 {
            if let Some(w) = cross_polytope_isomorphism(self.complex(), d)? {
                return Ok(r.fail(w));
            }
            return Ok(r.with_note("isomorphic to the boundary of the d-cross-polytope"));
        }
        Ok(r)
    }

    pub fn verify_g_scan(&self) -> VerificationReport {
        let d = self.d();
        let bounds: Vec<i64> = (0..=d / 2).map(|j| self.g_bound(j)).collect();
        let r = self.report(claim::G_SCAN, None);
        if d < 2 {
            return r.unmet("no g-numbers in range");
        }
        scan_report(r, &self.fhg.g, &bounds, 1..=d / 2)
    }

    /// g-equality at some `i ≤ (d−2)/2` yields `∂C*_{⌊d/2⌋}` inside the
    /// boundary.
    pub fn verify_cross_subcomplex(&self, i: usize) -> Result<VerificationReport> {
        let r = self.report(claim::CROSS_SUBCOMPLEX_AFFINE, Some(i));
        let d = self.d();
        if i < 1 || 2 * i + 2 > d {
            return Ok(r.unmet("degree must satisfy 1 <= i <= (d-2)/2"));
        }
        if self.fhg.g[i] != self.g_bound(i) {
            return Ok(r.unmet(format!("g_{i} = {} differs from {}", self.fhg.g[i], self.g_bound(i))));
        }
        let found = detect_cross_polytope_subcomplexes(self.complex(), d / 2)?;
        let r = r.values(
            json!({"subcomplexes": "at least one"}),
            json!({"subcomplexes": found.len(), "first": found.first()}),
        );
        if found.is_empty() {
            return Ok(r.fail(Witness::faces([], format!("no boundary of the {}-cross-polytope", d / 2))));
        }
        Ok(r)
    }
}

/// Selects claims by identifier. An entry matches its own id and every id
/// extending it by `-suffix`, so `lbt` selects `lbt` and `lbt-affine`.
#[derive(Clone, Debug, Default)]
pub struct ClaimFilter(Vec<String>);

impl ClaimFilter {
    pub fn all() -> Self {
        ClaimFilter(Vec::new())
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let entries: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        for e in &entries {
            if !claim::ALL.iter().any(|c| Self::matches_one(e, c)) {
                return Err(Error::InvalidParameter(format!("unknown claim {e:?}")));
            }
        }
        Ok(ClaimFilter(entries))
    }

    fn matches_one(entry: &str, claim: &str) -> bool {
        claim == entry || claim.strip_prefix(entry).is_some_and(|rest| rest.starts_with('-'))
    }

    pub fn wants(&self, claim: &str) -> bool {
        self.0.is_empty() || self.0.iter().any(|e| Self::matches_one(e, claim))
    }

    fn wants_any(&self, claims: &[&str]) -> bool {
        claims.iter().any(|c| self.wants(c))
    }
}

fn verify_expectations(inst: &Instance, expect: &Expectations, fhg: &FhgVectors) -> VerificationReport {
    let r = VerificationReport::new(&inst.name, claim::EXPECT, None, None);
    let checks = [("f", &expect.f, &fhg.f), ("h", &expect.h, &fhg.h), ("g", &expect.g, &fhg.g)];
    let mut exp = serde_json::Map::new();
    let mut got = serde_json::Map::new();
    let mut witness = None;
    for (name, wanted, actual) in checks {
        let Some(wanted) = wanted else { continue };
        exp.insert(name.into(), json!(wanted));
        got.insert(name.into(), json!(actual));
        if witness.is_none() && wanted != actual {
            witness =
                Some(Witness::Vector { quantity: name.into(), expected: wanted.clone(), computed: actual.clone() });
        }
    }
    let r = r.values(Value::Object(exp), Value::Object(got));
    match witness {
        Some(w) => r.fail(w),
        None => r,
    }
}

/// Runs every claim selected by `filter` that applies to `inst`.
pub fn verify_instance(inst: &Instance, seed: u64, filter: &ClaimFilter) -> Result<Vec<VerificationReport>> {
    use claim::*;
    let mut out = Vec::new();
    let complex = &inst.complex;
    if !complex.is_pure() {
        if filter.wants(LSOP) {
            out.push(VerificationReport::new(&inst.name, LSOP, None, Some(seed)).unmet("complex is not pure"));
        }
        return Ok(out);
    }
    if let Some(expect) = &inst.expect {
        if filter.wants(EXPECT) {
            out.push(verify_expectations(inst, expect, &complex.fhg_vectors()?));
        }
    }
    let linear_claims =
        [LSOP, LBT, SYMMETRY, CLOSURE, LINK_SUPPORT, SQUAREFREE, PROPAGATION, H_PROPAGATION, H_SCAN, CROSS_SUBCOMPLEX];
    if filter.wants_any(&linear_claims) {
        let run = LinearRun::new(inst.name.clone(), complex.clone(), seed)?;
        let d = run.d();
        if filter.wants(LSOP) {
            out.push(run.verify_lsop()?);
        }
        if filter.wants(LBT) {
            out.push(run.verify_lbt());
        }
        for i in 1..=d {
            if filter.wants(SYMMETRY) {
                out.push(run.verify_symmetry_equivalence(i));
            }
            if filter.wants(LINK_SUPPORT) {
                out.push(run.verify_link_support(i)?);
            }
            if filter.wants(SQUAREFREE) {
                out.push(run.verify_squarefree_lift(i));
            }
            if filter.wants(PROPAGATION) && i >= 2 {
                out.push(run.verify_stress_propagation(i)?);
            }
            if i < d {
                if filter.wants(H_PROPAGATION) {
                    out.push(run.verify_propagation(i)?);
                }
                if filter.wants(CROSS_SUBCOMPLEX) {
                    out.push(run.verify_cross_subcomplex(i)?);
                }
            }
        }
        if filter.wants(CLOSURE) {
            out.push(run.verify_closure(CLOSURE_PAIRS));
        }
        if filter.wants(H_SCAN) {
            out.push(run.verify_h_scan());
        }
    }
    let affine_claims = [
        LBT_AFFINE,
        SYMMETRY_AFFINE,
        CLOSURE_AFFINE,
        LINK_SUPPORT_AFFINE,
        SQUAREFREE_AFFINE,
        PROPAGATION_AFFINE,
        G_PROPAGATION,
        G_SCAN,
        CROSS_SUBCOMPLEX_AFFINE,
    ];
    if let Some(polytope) = inst.polytope.as_ref().filter(|_| filter.wants_any(&affine_claims)) {
        let run = AffineRun::new(inst.name.clone(), polytope.clone(), seed)?;
        let (d, top) = (run.d(), run.table.top_degree());
        if filter.wants(LBT_AFFINE) {
            out.push(run.verify_polytope_lbt());
        }
        for i in 1..=top {
            if filter.wants(SYMMETRY_AFFINE) && 2 * i <= d {
                out.push(run.verify_symmetry_equivalence(i));
            }
            if filter.wants(LINK_SUPPORT_AFFINE) {
                out.push(run.verify_link_support(i)?);
            }
            if filter.wants(SQUAREFREE_AFFINE) {
                out.push(run.verify_squarefree_lift(i));
            }
            if filter.wants(PROPAGATION_AFFINE) && i >= 2 {
                out.push(run.verify_stress_propagation(i)?);
            }
            if filter.wants(G_PROPAGATION) && 2 * i < d {
                out.push(run.verify_propagation(i)?);
            }
            if filter.wants(CROSS_SUBCOMPLEX_AFFINE) && 2 * i + 2 <= d {
                out.push(run.verify_cross_subcomplex(i)?);
            }
        }
        if filter.wants(CLOSURE_AFFINE) {
            out.push(run.verify_closure(CLOSURE_PAIRS));
        }
        if filter.wants(G_SCAN) {
            out.push(run.verify_g_scan());
        }
    }
    Ok(out)
}

/// Verifies every instance in parallel and returns the reports sorted by
/// `(instance, claim, degree)`.
///
/// When no instance exercises the cross-subcomplex claim with a subcomplex
/// strictly smaller than the whole complex, a `no_instance` record says so.
pub fn verify_corpus(instances: &[Instance], seed: u64, filter: &ClaimFilter) -> Result<Vec<VerificationReport>> {
    let per_instance: Vec<Vec<VerificationReport>> =
        instances.par_iter().map(|inst| verify_instance(inst, seed, filter)).collect::<Result<_>>()?;
    let mut reports: Vec<VerificationReport> = per_instance.into_iter().flatten().collect();
    if filter.wants(claim::CROSS_SUBCOMPLEX) {
        let nontrivial = reports.iter().any(|r| {
            r.claim == claim::CROSS_SUBCOMPLEX
                && r.verdict == Verdict::Pass
                && r.computed.get("gamma_is_whole_complex") == Some(&Value::Bool(false))
        });
        if !nontrivial {
            let mut r = VerificationReport::new("corpus", claim::CROSS_SUBCOMPLEX, None, Some(seed)).with_note(
                "no nontrivial instance available: no equality case with a proper cross-polytope subcomplex",
            );
            r.verdict = Verdict::NoInstance;
            reports.push(r);
        }
    }
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(reports)
}
