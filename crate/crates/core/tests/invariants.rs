use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use symstress::algebra::{rational, LinearForm, Monomial, Polynomial, Rational, YRepresentation};
use symstress::complex::{binomial, cross_polytope_boundary, Face, FhgVectors, SimplicialComplex, Vertex};
use symstress::families::bipyramid;
use symstress::instance::Instance;
use symstress::linalg::{nullspace, rank, SparseMatrix};
use symstress::stress::{special_lsop, stress_spaces};

fn v(l: i32) -> Vertex {
    Vertex::new(l).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn label() -> impl Strategy<Value = i32> {
    (1i32..=4, any::<bool>()).prop_map(|(k, neg)| if neg { -k } else { k })
}

fn polynomial(degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(label(), degree), small_rational()), 0..8).prop_map(move |terms| {
        Polynomial::from_terms(
            degree,
            terms.into_iter().map(|(ls, c)| (Monomial::from_vertices(ls.into_iter().map(v)), c)),
        )
        .unwrap()
    })
}

fn form() -> impl Strategy<Value = LinearForm> {
    prop::collection::vec((label(), small_rational()), 0..6)
        .prop_map(|cs| LinearForm::new(cs.into_iter().map(|(l, c)| (v(l), c))))
}

fn sum_forms(a: &LinearForm, b: &LinearForm) -> LinearForm {
    let keys: Vec<Vertex> = a.coefficients().keys().chain(b.coefficients().keys()).copied().collect();
    LinearForm::new(
        keys.into_iter()
            .map(|k| (k, a.coefficient(k) + b.coefficient(k)))
            .collect::<std::collections::BTreeMap<_, _>>(),
    )
}

fn antipodal_form(a: &LinearForm) -> LinearForm {
    LinearForm::new(a.coefficients().iter().map(|(k, c)| (k.antipode(), c.clone())))
}

proptest! {
    #[test]
    fn involution_is_an_involution(w in (1usize..=3).prop_flat_map(polynomial)) {
        prop_assert_eq!(w.involution().involution(), w.clone());
        prop_assert_eq!(w.involution().degree(), w.degree());
    }

    #[test]
    fn pm_split_recombines(w in (1usize..=3).prop_flat_map(polynomial)) {
        let (plus, minus) = w.pm_split();
        prop_assert!(plus.is_symmetric());
        prop_assert!(minus.is_antisymmetric());
        prop_assert_eq!(&plus + &minus, w);
    }

    #[test]
    fn derivatives_commute(w in (2usize..=4).prop_flat_map(polynomial), a in form(), b in form()) {
        prop_assert_eq!(w.derivative(&a).derivative(&b), w.derivative(&b).derivative(&a));
    }

    #[test]
    fn derivative_is_linear(w in polynomial(3), u in polynomial(3), a in form(), b in form(), c in small_rational()) {
        prop_assert_eq!(w.derivative(&sum_forms(&a, &b)), &w.derivative(&a) + &w.derivative(&b));
        prop_assert_eq!((&w + &u.scale(&c)).derivative(&a), &w.derivative(&a) + &u.derivative(&a).scale(&c));
    }

    #[test]
    fn involution_intertwines_derivatives(w in polynomial(3), a in form()) {
        prop_assert_eq!(w.derivative(&a).involution(), w.involution().derivative(&antipodal_form(&a)));
    }

    #[test]
    fn y_representation_round_trips(
        coeffs in prop::collection::btree_map(prop::sample::subsequence(vec![1u32, 2, 3, 4], 2), small_rational(), 0..6)
    ) {
        let coeffs: std::collections::BTreeMap<Vec<u32>, Rational> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let rep = YRepresentation::Represented(coeffs.clone());
        let w = rep.expand(2).unwrap();
        prop_assert!(w.is_squarefree());
        prop_assert!(w.is_symmetric());
        prop_assert_eq!(w.y_representation().unwrap(), rep);
    }

    #[test]
    fn lone_antipodal_term_is_not_a_y_polynomial(k in 1u32..=4, c in small_rational()) {
        prop_assume!(!c.is_zero());
        let w = Polynomial::term(Monomial::from_vertices([v(k as i32)]), c);
        prop_assert_eq!(w.y_representation().unwrap(), YRepresentation::NotRepresentable { pair: k });
    }

    #[test]
    fn nullspace_and_rank_nullity(
        rows in 1usize..8,
        cols in 1usize..10,
        entries in prop::collection::vec(small_rational(), 80)
    ) {
        let dense: Vec<Vec<Rational>> = (0..rows).map(|r| entries[r * cols..(r + 1) * cols].to_vec()).collect();
        let m = SparseMatrix::from_dense(&dense, cols);
        let ns = nullspace(&m);
        prop_assert_eq!(rank(&m) + ns.dim(), cols);
        for x in ns.vectors() {
            for row in &dense {
                prop_assert!(row.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>().is_zero());
            }
        }
    }

    #[test]
    fn fhg_round_trip(d in 1usize..7, h in prop::collection::vec(1i64..20, 7)) {
        let mut h = h[..=d].to_vec();
        h[0] = 1;
        // f_{k-1} = Σ_{i≤k} C(d-i, k-i) h_i
        let f: Vec<i64> = (0..=d).map(|k| (0..=k).map(|i| binomial(d - i, k - i) * h[i]).sum()).collect();
        let fhg = FhgVectors::from_f(f.clone());
        prop_assert_eq!(&fhg.f, &f);
        prop_assert_eq!(&fhg.h, &h);
        for i in 1..fhg.g.len() {
            prop_assert_eq!(fhg.g[i], h[i] - h[i - 1]);
        }
    }
}

proptest! {
    #[test]
    fn random_cs_complexes_round_trip(picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let facets = cross_polytope_boundary(4).unwrap().facets().to_vec();
        let chosen: std::collections::BTreeSet<Face> = picks.iter().flat_map(|i| {
            let f = facets[i.index(facets.len())].clone();
            [f.antipode(), f]
        }).collect();
        let c = SimplicialComplex::from_facets(chosen.into_iter().collect(), true).unwrap();
        let f = c.fhg_vectors().unwrap().f;
        let counted: Vec<i64> = (-1..=3).map(|k| c.faces_of_dim(k).len() as i64).collect();
        prop_assert_eq!(f, counted);
        let inst = Instance::from_complex("random", c.clone()).with_computed_expectations().unwrap();
        let back = Instance::parse(&inst.to_json()).unwrap();
        prop_assert_eq!(&back.complex, &c);
        prop_assert_eq!(back.to_json(), inst.to_json());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn stress_dimensions_do_not_depend_on_the_seed(seed in any::<u64>()) {
        for c in [cross_polytope_boundary(3).unwrap(), bipyramid(3).unwrap().boundary().clone()] {
            let h = c.fhg_vectors().unwrap().h;
            let lsop = special_lsop(&c, seed).unwrap();
            let spaces = stress_spaces(&c, &lsop.forms, 0..=3).unwrap();
            let dims: Vec<i64> = spaces.iter().map(|s| s.dim() as i64).collect();
            prop_assert_eq!(dims, h.clone());
            let minus: Vec<i64> = spaces.iter().map(|s| s.minus_dim().unwrap() as i64).collect();
            let want: Vec<i64> = (0..=3).map(|i| (h[i] - binomial(3, i)) / 2).collect();
            prop_assert_eq!(minus, want);
        }
    }
}

#[test]
fn polynomial_text_is_stable() {
    let w = Polynomial::from_terms(
        2,
        [
            (Monomial::from_vertices([v(1), v(2)]), rational(1)),
            (Monomial::from_vertices([v(-1), v(-1)]), Rational::new(BigInt::from(-3), BigInt::from(2))),
            (Monomial::from_vertices([v(2), v(-2)]), rational(4)),
        ],
    )
    .unwrap();
    assert_eq!(w.to_string(), "1 * x_{1} x_{2} + -3/2 * x_{-1}^2 + 4 * x_{2} x_{-2}");
    assert_eq!(Polynomial::y_product(&[1]).to_string(), "1 * x_{1} + 1 * x_{-1}");
    assert_eq!(Polynomial::zero(3).to_string(), "0");
}
