//! `symstress`: face numbers, stress dimension tables and theorem checks for
//! complexes and polytopes stored as JSON instance files.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symstress::families;
use symstress::instance::Instance;
use symstress::stress::{canonical_forms, default_lsop, stress_spaces, FormKind, StressSpace};
use symstress::theorems::{verify_corpus, ClaimFilter, Verdict, VerificationReport};
use symstress::Error;

const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(name = "symstress", version, about = "Stress spaces of centrally symmetric complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Crosspoly,
    Bipyramid,
    Polygon,
    Fins,
    Triangles,
    Simplex,
    /// Every instance of the standard corpus, one file each.
    Corpus,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, f-, h- and g-vectors and central symmetry of a complex.
    Info {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Stress dimensions per degree with the split into symmetric and
    /// antisymmetric parts.
    Stress {
        input: PathBuf,
        /// Use the canonical forms of the polytope instead of an l.s.o.p.
        #[arg(long)]
        affine: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Only this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Highest degree to compute (default d, or d/2 + 1 with --affine).
        #[arg(long, conflicts_with = "degree")]
        max_degree: Option<usize>,
        /// Print basis polynomials.
        #[arg(long)]
        basis: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check every applicable claim on a directory of instance files.
    Verify {
        /// Directories (every *.json inside) or single instance files.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Comma-separated claim ids; `lbt` also selects `lbt-affine`.
        #[arg(long)]
        claims: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write a canonical instance file for a named family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// d for crosspoly and fins, m for bipyramid and polygon, n for simplex.
        param: Option<usize>,
        /// Output file (directory for `corpus`); stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LsopNotFound { ref retry_log, .. } => {
                let mut msg = e.to_string();
                for line in retry_log {
                    msg.push_str("\n  ");
                    msg.push_str(line);
                }
                Failure::Engine(msg)
            }
            Error::Invariant(_) => Failure::Engine(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut inst = Instance::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if inst.name.is_empty() {
        inst.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    }
    Ok(inst)
}

fn tuple(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn cmd_info(input: &Path, format: Format) -> Result<String, Failure> {
    let inst = read_instance(input)?;
    let c = &inst.complex;
    let cs = if c.is_cs() { "yes" } else { "no" };
    let fhg = if c.is_pure() { Some(c.fhg_vectors()?) } else { None };
    if format == Format::Json {
        let v = json!({
            "name": inst.name,
            "d": c.krull_dim(),
            "dim": c.dim(),
            "pure": c.is_pure(),
            "cs": c.is_cs(),
            "polytope": inst.polytope.is_some(),
            "vertices": c.vertices().len(),
            "facets": c.facets().len(),
            "f": fhg.as_ref().map(|x| &x.f),
            "h": fhg.as_ref().map(|x| &x.h),
            "g": fhg.as_ref().map(|x| &x.g),
        });
        return Ok(format!("{v}\n"));
    }
    let Some(fhg) = fhg else {
        return Ok(format!("d={}, pure=no, cs={cs}\n", c.krull_dim()));
    };
    Ok(format!("d={}, f={}, h={}, cs={cs}\ng={}\n", fhg.d, tuple(&fhg.f), tuple(&fhg.h), tuple(&fhg.g)))
}

fn split_cell(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

struct StressArgs {
    affine: bool,
    seed: u64,
    degree: Option<usize>,
    max_degree: Option<usize>,
    basis: bool,
    format: Format,
}

fn cmd_stress(input: &Path, args: StressArgs) -> Result<String, Failure> {
    let inst = read_instance(input)?;
    let d = inst.complex.krull_dim();
    let (forms, header) = if args.affine {
        let p = inst
            .polytope
            .as_ref()
            .ok_or_else(|| Failure::Input("--affine needs an instance with coordinates".into()))?;
        (
            canonical_forms(p)?,
            json!({"forms": FormKind::CanonicalPolytope, "assumption": "convexity of the polytope is not verified"}),
        )
    } else {
        let lsop = default_lsop(&inst.complex, args.seed)?;
        let header = json!({
            "forms": lsop.forms.kind(),
            "seed": lsop.seed,
            "attempts": lsop.attempts,
            "retry_log": lsop.retry_log,
        });
        (lsop.forms, header)
    };
    let degrees: Vec<usize> = match (args.degree, args.max_degree) {
        (Some(i), _) => vec![i],
        (None, Some(m)) => (0..=m).collect(),
        (None, None) => (0..=if args.affine { d / 2 + 1 } else { d }).collect(),
    };
    let spaces = stress_spaces(&inst.complex, &forms, degrees)?;
    if args.format == Format::Json {
        let rows: Vec<Value> = spaces.iter().map(|s| stress_row(s, args.basis)).collect();
        let mut v = header;
        v["instance"] = json!(inst.name);
        v["degrees"] = json!(rows);
        return Ok(format!("{v}\n"));
    }
    let mut out = String::new();
    let kind = if args.affine { "canonical polytope forms (convexity assumed)" } else { "l.s.o.p." };
    writeln!(out, "instance: {}", inst.name).unwrap();
    if args.affine {
        writeln!(out, "forms: {kind}").unwrap();
    } else {
        let special = if header["forms"] == json!("special_lsop") { "special " } else { "generic " };
        writeln!(out, "forms: {special}{kind}, seed {}, attempts {}", args.seed, header["attempts"]).unwrap();
        for line in header["retry_log"].as_array().into_iter().flatten() {
            writeln!(out, "  {}", line.as_str().unwrap_or_default()).unwrap();
        }
    }
    writeln!(out, "{:>6} {:>6} {:>6} {:>6}", "degree", "dim", "plus", "minus").unwrap();
    for s in &spaces {
        writeln!(
            out,
            "{:>6} {:>6} {:>6} {:>6}",
            s.degree(),
            s.dim(),
            split_cell(s.plus_dim()),
            split_cell(s.minus_dim())
        )
        .unwrap();
    }
    if args.basis {
        for s in &spaces {
            writeln!(out, "\ndegree {} basis:", s.degree()).unwrap();
            for p in s.basis_polynomials() {
                writeln!(out, "  {p}").unwrap();
            }
        }
    }
    Ok(out)
}

fn stress_row(s: &StressSpace, basis: bool) -> Value {
    let mut row = json!({"degree": s.degree(), "dim": s.dim(), "plus": s.plus_dim(), "minus": s.minus_dim()});
    if basis {
        let polys: Vec<String> = s.basis_polynomials().iter().map(ToString::to_string).collect();
        row["basis"] = json!(polys);
    }
    row
}

fn collect_instances(inputs: &[PathBuf]) -> Result<Vec<Instance>, Failure> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let entries = fs::read_dir(input).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(input.clone());
        }
    }
    let mut instances = files.iter().map(|p| read_instance(p)).collect::<Result<Vec<_>, _>>()?;
    instances.sort_by(|a, b| a.name.cmp(&b.name));
    if let Some(w) = instances.windows(2).find(|w| w[0].name == w[1].name) {
        return Err(Failure::Input(format!("two instances are named {:?}", w[0].name)));
    }
    Ok(instances)
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::HypothesisUnmet => "hypothesis unmet",
        Verdict::NoInstance => "no instance",
    }
}

fn summary_table(reports: &[VerificationReport], seed: u64) -> String {
    let mut out = String::new();
    writeln!(out, "seed: {seed}").unwrap();
    let width = reports.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
    writeln!(out, "{:<width$}  {:<28} {:>6}  verdict", "instance", "claim", "degree").unwrap();
    for r in reports {
        let degree = r.degree.map_or_else(|| "-".to_string(), |d| d.to_string());
        writeln!(out, "{:<width$}  {:<28} {:>6}  {}", r.instance, r.claim, degree, verdict_name(r.verdict)).unwrap();
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    writeln!(
        out,
        "\n{} records: {} pass, {} fail, {} hypothesis unmet, {} no instance",
        reports.len(),
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::HypothesisUnmet),
        count(Verdict::NoInstance)
    )
    .unwrap();
    for r in reports.iter().filter(|r| r.is_failure()) {
        writeln!(out, "failure {} {}: {}", r.instance, r.claim, serde_json::to_string(&r.witness).unwrap()).unwrap();
    }
    out
}

fn cmd_verify(inputs: &[PathBuf], claims: Option<&str>, seed: u64, format: Format) -> Result<(String, bool), Failure> {
    let filter = match claims {
        Some(c) => ClaimFilter::parse(c)?,
        None => ClaimFilter::all(),
    };
    let instances = collect_instances(inputs)?;
    let reports = verify_corpus(&instances, seed, &filter)?;
    let failed = reports.iter().any(VerificationReport::is_failure);
    let out = match format {
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Table => summary_table(&reports, seed),
    };
    Ok((out, failed))
}

fn generated(family: Family, param: Option<usize>) -> Result<Instance, Failure> {
    let need = |name: &str| param.ok_or_else(|| Failure::Input(format!("{name} needs a size parameter")));
    let inst = match family {
        Family::Crosspoly => {
            let d = need("crosspoly")?;
            Instance::from_polytope(format!("crosspoly-{d}"), families::cross_polytope(d)?)
        }
        Family::Bipyramid => {
            let m = need("bipyramid")?;
            Instance::from_polytope(format!("bipyramid-{m}"), families::bipyramid(m)?)
        }
        Family::Polygon => {
            let m = need("polygon")?;
            Instance::from_polytope(format!("polygon-{m}"), families::cs_polygon(m)?)
        }
        Family::Fins => {
            let d = need("fins")?;
            Instance::from_complex(format!("crosspoly-{d}-fins"), families::cross_polytope_with_fins(d)?)
        }
        Family::Triangles => Instance::from_complex("antipodal-triangles", families::antipodal_triangles()?),
        Family::Simplex => {
            let n = need("simplex")?;
            Instance::from_complex(format!("simplex-{n}-boundary"), families::simplex_boundary(n)?)
        }
        Family::Corpus => unreachable!("handled by the caller"),
    };
    Ok(inst.with_computed_expectations()?)
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_generate(family: Family, param: Option<usize>, out: Option<&Path>) -> Result<String, Failure> {
    if family == Family::Corpus {
        let dir = out.ok_or_else(|| Failure::Input("corpus needs --out DIR".into()))?;
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        let mut listing = String::new();
        for inst in families::standard_corpus()? {
            let path = dir.join(format!("{}.json", inst.name));
            write_out(&path, &inst.to_json())?;
            writeln!(listing, "{}", path.display()).unwrap();
        }
        return Ok(listing);
    }
    let text = generated(family, param)?.to_json();
    match out {
        Some(path) => {
            write_out(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Info { input, format } => cmd_info(&input, format).map(|s| (s, false)),
        Command::Stress { input, affine, seed, degree, max_degree, basis, format } => {
            cmd_stress(&input, StressArgs { affine, seed, degree, max_degree, basis, format }).map(|s| (s, false))
        }
        Command::Verify { inputs, claims, seed, format } => cmd_verify(&inputs, claims.as_deref(), seed, format),
        Command::Generate { family, param, out } => cmd_generate(family, param, out.as_deref()).map(|s| (s, false)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, failed)) => {
            print!("{out}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lsop_exhaustion_is_an_engine_failure_with_its_log() {
        let e = Error::LsopNotFound { attempts: 9, retry_log: vec!["attempt 1: facet-rank check failed".into()] };
        match Failure::from(e) {
            Failure::Engine(msg) => assert!(msg.ends_with("\n  attempt 1: facet-rank check failed"), "{msg}"),
            Failure::Input(_) => panic!("wrong exit class"),
        }
        assert!(matches!(Failure::from(Error::NotCs), Failure::Input(_)));
    }
}
