//! Acceptance criteria, one line each. Run with
//! `cargo test -p symstress --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symstress::algebra::{Polynomial, Rational};
use symstress::complex::{
    antipodal_pairs, cross_polytope_boundary, detect_cross_polytope_subcomplexes, SimplicialComplex, Vertex,
};
use symstress::families::{bipyramid, cross_polytope, cs_polygon, standard_corpus};
use symstress::instance::Instance;
use symstress::linalg::{nullspace, rank, SparseMatrix};
use symstress::stress::{default_lsop, first_degenerate_facet, lsop_check, FormKind, FormSequence, MAX_RETRIES};
use symstress::theorems::{
    sample_closure_pairs, verify_corpus, AffineRun, ClaimFilter, LinearRun, StressTable, Verdict, VerificationReport,
};

const SEED: u64 = 1;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn corpus() -> Vec<Instance> {
    standard_corpus().expect("corpus builds")
}

// Face-enumeration oracles: work from the facet list only, with vertices
// encoded as bits.

fn facet_masks(c: &SimplicialComplex, vertices: &[Vertex]) -> Vec<u64> {
    c.facets()
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|v| 1u64 << vertices.iter().position(|u| u == v).expect("facet vertex listed"))
                .fold(0, |a, b| a | b)
        })
        .collect()
}

fn is_face(mask: u64, facets: &[u64]) -> bool {
    facets.iter().any(|&f| mask & !f == 0)
}

fn brute_force_h(c: &SimplicialComplex) -> Vec<i64> {
    let vertices = c.vertices();
    assert!(vertices.len() < 24, "oracle is exponential");
    let facets = facet_masks(c, &vertices);
    let d = facets.iter().map(|f| f.count_ones()).max().unwrap_or(0) as i64;
    // f[k] counts faces with k vertices
    let mut f = vec![0i64; d as usize + 1];
    for mask in 0u64..(1 << vertices.len()) {
        if is_face(mask, &facets) {
            f[mask.count_ones() as usize] += 1;
        }
    }
    (0..=d).map(|k| (0..=k).map(|i| (-1i64).pow((k - i) as u32) * choose(d - i, k - i) * f[i as usize]).sum()).collect()
}

/// `∂C*` on the pairs in `sigma` is a subcomplex of `c` iff the faces of `c`
/// inside `±sigma` number `3^j`.
fn cross_subcomplex_by_count(c: &SimplicialComplex, sigma: &[u32]) -> bool {
    let vertices = c.vertices();
    let facets = facet_masks(c, &vertices);
    let bits: Vec<u64> = sigma
        .iter()
        .flat_map(|&k| [k as i32, -(k as i32)])
        .map(|l| 1u64 << vertices.iter().position(|v| v.label() == l).expect("pair is present"))
        .collect();
    let mut count = 0u64;
    for sub in 0u64..(1 << bits.len()) {
        let mask = (0..bits.len()).filter(|&b| sub >> b & 1 == 1).map(|b| bits[b]).fold(0, |a, b| a | b);
        if is_face(mask, &facets) {
            count += 1;
        }
    }
    count == 3u64.pow(sigma.len() as u32)
}

fn subsets(n: u32, j: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == j {
            out.push((0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect());
        }
    }
    out.sort();
    out
}

/// Stress by definition: every term on a face and every form kills it.
fn is_stress_by_definition(w: &Polynomial, c: &SimplicialComplex, forms: &FormSequence) -> bool {
    w.lives_on(c) && forms.forms().iter().all(|t| w.derivative(t).is_zero())
}

fn failures(reports: &[VerificationReport]) -> Vec<String> {
    reports.iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.to_json_line()).collect()
}

fn count(reports: &[VerificationReport], claim: &str, verdict: Verdict) -> usize {
    reports.iter().filter(|r| r.claim == claim && r.verdict == verdict).count()
}

struct CrossRuns(Vec<(usize, LinearRun, Duration)>);

impl CrossRuns {
    fn build() -> Self {
        CrossRuns(
            (2..=5)
                .map(|d| {
                    let start = Instant::now();
                    let run = LinearRun::new(format!("crosspoly-{d}"), cross_polytope_boundary(d).unwrap(), SEED)
                        .expect("cross-polytope run");
                    (d, run, start.elapsed())
                })
                .collect(),
        )
    }
}

fn cross_polytope_table(runs: &CrossRuns) -> Outcome {
    let mut elapsed5 = Duration::ZERO;
    for (d, run, t) in &runs.0 {
        let d = *d;
        check(run.lsop.forms.kind() == FormKind::SpecialLsop, || format!("d={d}: l.s.o.p. is not special"))?;
        for i in 0..=d {
            let dim = run.table.dim(i) as i64;
            check(dim == choose(d as i64, i as i64), || format!("d={d} i={i}: dim {dim}, want C({d},{i})"))?;
            let minus = run.table.minus_dim(i);
            check(minus == Some(0), || format!("d={d} i={i}: minus dim {minus:?}"))?;
        }
        if d == 5 {
            elapsed5 = *t;
        }
    }
    check(elapsed5 < Duration::from_secs(30), || format!("d=5 took {elapsed5:?}"))?;
    Ok(format!("d=2..5 exact, d=5 in {:.2}s", elapsed5.as_secs_f64()))
}

fn minus_dimension_formula() -> Outcome {
    let mut seen = Vec::new();
    for m in 3..=5usize {
        let p = bipyramid(m).unwrap();
        let k = 2 * m as i64 - 1;
        let oracle = brute_force_h(p.boundary());
        check(oracle == vec![1, k, k, 1], || format!("m={m}: oracle h {oracle:?}"))?;
        let h = p.boundary().fhg_vectors().unwrap().h;
        check(h == oracle, || format!("m={m}: engine h {h:?} vs oracle {oracle:?}"))?;
        let run = LinearRun::new(format!("bipyramid-{m}"), p.boundary().clone(), SEED).unwrap();
        for (i, &hi) in oracle.iter().enumerate().take(3).skip(1) {
            let minus = run.table.minus_dim(i).map(|x| x as i64);
            let want = (hi - choose(3, i as i64)) / 2;
            check(want == m as i64 - 2, || format!("m={m}: formula gives {want}"))?;
            check(minus == Some(want), || format!("m={m} i={i}: minus {minus:?}, want {want}"))?;
        }
        seen.push(m as i64 - 2);
    }
    Ok(format!("minus dims {seen:?} in degrees 1 and 2, h confirmed by enumeration"))
}

fn affine_stresses() -> Outcome {
    for m in 2..=4usize {
        let run = AffineRun::new(format!("polygon-{m}"), cs_polygon(m).unwrap(), SEED).unwrap();
        let (dim, minus) = (run.table.dim(1) as i64, run.table.minus_dim(1).map(|x| x as i64));
        let g1 = run.fhg.g[1];
        check(g1 == 2 * m as i64 - 3, || format!("m={m}: g_1 = {g1}"))?;
        check(dim == g1, || format!("m={m}: affine dim {dim}, want {g1}"))?;
        check(minus == Some(m as i64 - 2), || format!("m={m}: minus {minus:?}"))?;
    }
    for d in 2..=4usize {
        let run = AffineRun::new(format!("crosspoly-{d}"), cross_polytope(d).unwrap(), SEED).unwrap();
        for i in 1..=d / 2 {
            let want = choose(d as i64, i as i64) - choose(d as i64, i as i64 - 1);
            let dim = run.table.dim(i) as i64;
            check(dim == want, || format!("C*_{d} i={i}: dim {dim}, want {want}"))?;
            let minus = run.table.minus_dim(i);
            check(minus == Some(0), || format!("C*_{d} i={i}: minus {minus:?}"))?;
        }
    }
    Ok("polygons m=2..4 and cross-polytopes d=2..4 exact".into())
}

fn derivative_closure() -> Outcome {
    const TOTAL: usize = 100;
    let mut tables: Vec<(String, SimplicialComplex, StressTable)> = Vec::new();
    for inst in corpus() {
        let run = LinearRun::new(&inst.name, inst.complex.clone(), SEED).map_err(|e| format!("{}: {e}", inst.name))?;
        tables.push((inst.name.clone(), inst.complex.clone(), run.table));
        if let Some(p) = &inst.polytope {
            let run = AffineRun::new(&inst.name, p.clone(), SEED).map_err(|e| format!("{}: {e}", inst.name))?;
            tables.push((format!("{} affine", inst.name), inst.complex.clone(), run.table));
        }
    }
    tables.retain(|(_, _, t)| (1..=t.top_degree()).any(|i| t.dim(i) > 0));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut drawn = 0;
    for (k, (name, complex, table)) in tables.iter().enumerate() {
        let n = TOTAL / tables.len() + usize::from(k < TOTAL % tables.len());
        for s in sample_closure_pairs(table, complex.ground_set(), n, &mut rng) {
            check(s.holds, || {
                format!("{name}: derivative of {} along {} left the space", s.stress, s.form.to_polynomial())
            })?;
            check(is_stress_by_definition(&s.stress, complex, &table.forms), || {
                format!("{name}: sampled w is not a stress")
            })?;
            check(is_stress_by_definition(&s.derivative, complex, &table.forms), || {
                format!("{name}: rank test and definition disagree on {}", s.derivative)
            })?;
            drawn += 1;
        }
    }
    check(drawn == TOTAL, || format!("only {drawn} pairs drawn"))?;
    Ok(format!("{drawn} pairs over {} stress tables, zero failures", tables.len()))
}

fn lemma_suite(reports: &[VerificationReport]) -> Outcome {
    let filtered: Vec<VerificationReport> = reports
        .iter()
        .filter(|r| r.claim.starts_with("link-support") || r.claim.starts_with("squarefree-lift"))
        .cloned()
        .collect();
    let bad = failures(&filtered);
    check(bad.is_empty(), || bad.join(" | "))?;
    let links =
        count(&filtered, "link-support", Verdict::Pass) + count(&filtered, "link-support-affine", Verdict::Pass);
    let squarefree =
        count(&filtered, "squarefree-lift", Verdict::Pass) + count(&filtered, "squarefree-lift-affine", Verdict::Pass);
    check(links > 0 && squarefree > 0, || "no check ran with its hypotheses met".into())?;
    Ok(format!("{links} support and {squarefree} squarefree/y-representation passes, zero failures"))
}

fn propagation(reports: &[VerificationReport], runs: &CrossRuns) -> Outcome {
    let filtered: Vec<VerificationReport> = reports
        .iter()
        .filter(|r| r.claim.starts_with("h-propagation") || r.claim.starts_with("g-propagation"))
        .cloned()
        .collect();
    let bad = failures(&filtered);
    check(bad.is_empty(), || bad.join(" | "))?;
    let scans =
        count(&filtered, "h-propagation-scan", Verdict::Pass) + count(&filtered, "g-propagation-scan", Verdict::Pass);
    check(scans > 0, || "no scan ran".into())?;
    for (d, run, _) in &runs.0 {
        let d = *d;
        for i in 1..d {
            let r = run.verify_propagation(i).map_err(|e| e.to_string())?;
            check(r.verdict == Verdict::Pass, || r.to_json_line())?;
        }
        for j in 0..=d {
            check(run.fhg.h[j] == choose(d as i64, j as i64), || format!("∂C*_{d}: h_{j} = {}", run.fhg.h[j]))?;
        }
    }
    Ok(format!("{scans} scans clean, ∂C*_2..5 equal at every degree"))
}

fn cross_polytope_detection() -> Outcome {
    for d in 2..=5usize {
        let c = cross_polytope_boundary(d).unwrap();
        for j in 1..=d {
            let found = detect_cross_polytope_subcomplexes(&c, j).unwrap();
            let want = subsets(d as u32, j);
            check(found == want, || format!("∂C*_{d} j={j}: {} sets, want {}", found.len(), want.len()))?;
        }
    }
    for m in 3..=5 {
        let c = bipyramid(m).unwrap().boundary().clone();
        let found = detect_cross_polytope_subcomplexes(&c, 3).unwrap();
        check(found.is_empty(), || format!("bipyramid-{m}: found {found:?}"))?;
    }
    let mut compared = 0;
    for inst in corpus().into_iter().filter(|i| i.complex.is_cs()) {
        let pairs = antipodal_pairs(&inst.complex);
        if pairs.len() > 6 {
            continue;
        }
        for j in 1..=pairs.len() {
            let found = detect_cross_polytope_subcomplexes(&inst.complex, j).unwrap();
            let oracle: Vec<Vec<u32>> = subsets(pairs.len() as u32, j)
                .into_iter()
                .map(|idx| idx.iter().map(|&k| pairs[k as usize - 1]).collect::<Vec<u32>>())
                .filter(|sigma| cross_subcomplex_by_count(&inst.complex, sigma))
                .collect();
            check(found == oracle, || format!("{} j={j}: {found:?} vs oracle {oracle:?}", inst.name))?;
            compared += 1;
        }
    }
    Ok(format!("exact on ∂C*_2..5, empty on bipyramids, {compared} oracle comparisons"))
}

fn lsop_certification() -> Outcome {
    let mut max_attempts = 0;
    let mut instances = 0;
    for inst in corpus() {
        let c = &inst.complex;
        for seed in 1..=5 {
            let s = default_lsop(c, seed).map_err(|e| format!("{} seed {seed}: {e}", inst.name))?;
            check(s.attempts <= MAX_RETRIES + 1, || format!("{}: {} attempts", inst.name, s.attempts))?;
            check(c.is_cs() == (s.forms.kind() == FormKind::SpecialLsop), || {
                format!("{}: wrong form kind", inst.name)
            })?;
            check(lsop_check(c, &s.forms).unwrap(), || format!("{}: sample fails the check", inst.name))?;
            max_attempts = max_attempts.max(s.attempts);
            if c.krull_dim() >= 2 {
                let mut forms = s.forms.forms().to_vec();
                forms[1] = forms[0].clone();
                let degenerate = first_degenerate_facet(c, &FormSequence::custom(forms)).unwrap();
                check(degenerate.is_some(), || format!("{}: repeated form accepted", inst.name))?;
            }
        }
        let run = LinearRun::new(&inst.name, c.clone(), SEED).unwrap();
        if run.certificate.is_cm_witnessed() {
            let d = run.d();
            let extra = symstress::stress::stress_space(c, &run.lsop.forms, d + 2).unwrap().dim();
            check(run.table.dim(d + 1) == 0 && extra == 0, || format!("{}: stresses above degree d", inst.name))?;
        }
        instances += 1;
    }
    Ok(format!("{instances} instances x 5 seeds, at most {max_attempts} draw(s); special forms on every cs instance"))
}

// Independent dense Gauss-Jordan over BigRational.

fn rref(mut rows: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x = &*x * &inv);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn oracle_nullspace(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let (reduced, pivots) = rref(rows.to_vec(), cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<BigRational>> {
    let rows = rng.gen_range(1..=40);
    let cols = rng.gen_range(1..=60);
    let entry = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.35) {
            BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=6)))
        } else {
            BigRational::zero()
        }
    };
    if rng.gen_bool(0.5) {
        (0..rows).map(|_| (0..cols).map(|_| entry(rng)).collect()).collect()
    } else {
        // low rank product
        let k = rng.gen_range(1..=rows.min(cols));
        let a: Vec<Vec<BigRational>> = (0..rows)
            .map(|_| (0..k).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3)))).collect())
            .collect();
        let b: Vec<Vec<BigRational>> = (0..k).map(|_| (0..cols).map(|_| entry(rng)).collect()).collect();
        a.iter().map(|ar| (0..cols).map(|c| ar.iter().zip(&b).map(|(x, br)| x * &br[c]).sum()).collect()).collect()
    }
}

fn linear_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ranks = Vec::new();
    for t in 0..50 {
        let dense = random_matrix(&mut rng);
        let cols = dense[0].len();
        let m = SparseMatrix::from_dense(&dense, cols);
        let (_, oracle_pivots) = rref(dense.clone(), cols);
        let r = rank(&m);
        check(r == oracle_pivots.len(), || format!("matrix {t}: rank {r}, oracle {}", oracle_pivots.len()))?;
        let ns = nullspace(&m);
        check(r + ns.dim() == cols, || format!("matrix {t}: rank-nullity {r} + {} != {cols}", ns.dim()))?;
        for v in ns.vectors() {
            let zero = dense.iter().all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>().is_zero());
            check(zero, || format!("matrix {t}: nullspace vector not annihilated"))?;
        }
        // both bases are reduced on the free columns, which pins them down
        let free: Vec<usize> = (0..cols).filter(|c| !oracle_pivots.contains(c)).collect();
        check(ns.pivots() == free.as_slice(), || format!("matrix {t}: free columns differ"))?;
        check(ns.vectors() == oracle_nullspace(&dense, cols).as_slice(), || {
            format!("matrix {t}: nullspace bases differ")
        })?;
        let again = nullspace(&m);
        check(again == ns && rank(&m) == r, || format!("matrix {t}: rerun differs"))?;
        check(format!("{:?}", again.vectors()) == format!("{:?}", ns.vectors()), || {
            format!("matrix {t}: rerun not bit-identical")
        })?;
        ranks.push(r);
    }
    let full = ranks.iter().filter(|&&r| r > 0).count();
    Ok(format!("50 matrices, ranks {}..{}, {full} nonzero", ranks.iter().min().unwrap(), ranks.iter().max().unwrap()))
}

fn main() -> ExitCode {
    let runs = CrossRuns::build();
    let reports = verify_corpus(&corpus(), SEED, &ClaimFilter::all()).expect("corpus verification runs");
    let criteria: Vec<Criterion> = vec![
        ("cross-polytope dimension table", Box::new(|| cross_polytope_table(&runs))),
        ("minus-dimension formula on bipyramids", Box::new(minus_dimension_formula)),
        ("affine stresses of polygons and cross-polytopes", Box::new(affine_stresses)),
        ("derivative closure", Box::new(derivative_closure)),
        ("lemma suite", Box::new(|| lemma_suite(&reports))),
        ("propagation", Box::new(|| propagation(&reports, &runs))),
        ("cross-polytope detection", Box::new(cross_polytope_detection)),
        ("l.s.o.p. certification", Box::new(lsop_certification)),
        ("linear algebra substrate", Box::new(linear_algebra)),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
