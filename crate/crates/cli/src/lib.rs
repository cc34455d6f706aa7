//! Batch front end: reads a JSON job, runs one computation, and reports JSON
//! or text. Exit codes: 0 success, 2 invalid input, 3 computational error.

mod schema;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use log::{debug, info};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use semigrowth::cone::{bd_monomial_basis, generator_names, hilbert_basis, ConeSemigroup};
use semigrowth::keyforms::{classify, keyforms_of_spec, Plan, PlanTail};
use semigrowth::lift::{coefficient_bound, lift_element, lifted_set_description, GradedElement};
use semigrowth::newton::{expand_at_infinity, generic_series_retrying, BranchChoice, BranchKind};
use semigrowth::rational::{fmt_rat, parse_rat, to_f64};
use semigrowth::sampling::{exact_grid, growth_exponent, is_degenerate_t};
use semigrowth::semidegree::delta_star;
use semigrowth::text::parse_multipoly;
use semigrowth::witness::{counterexample_witness, low_degree_space, Grading};
use semigrowth::{
    Error, KeyFormSequence, MultiPoly, PuiseuxSeries, Rat, SemidegreeSpec, StandardTentacleSpec,
    Tentacle, TentacleSet,
};

use schema::{
    ConeJson, ExpandJson, LiftJson, OracleJson, PlanJson, SeriesTermJson, TentacleJson,
    TentacleSetJson,
};

/// Doublings of the term limit tried after an insufficient-precision result.
const PRECISION_RETRIES: u32 = 3;
/// Tolerance of the sampling oracle on growth exponents.
const ORACLE_TOLERANCE: f64 = 0.1;

#[derive(Debug, Parser)]
#[command(
    name = "semigrowth",
    version,
    about = "Growth of polynomials on semialgebraic tentacles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Initial number of terms when expanding boundary branches.
    #[arg(long, global = true, default_value_t = semigrowth::newton::DEFAULT_TERM_LIMIT)]
    pub term_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Puiseux branches at infinity of {"poly": …}.
    Expand { input: PathBuf },
    /// Generic series of a tentacle.
    Spec { input: PathBuf },
    /// Key forms of a tentacle.
    Keyforms { input: PathBuf },
    /// Finite-generation and moment-problem verdicts for a single tentacle.
    Classify {
        input: PathBuf,
        /// Genus of the generic fiber, when known.
        #[arg(long)]
        genus: Option<u32>,
    },
    /// δ* per tentacle, δ̄_S and δ_S of a polynomial on a tentacle set.
    Eval {
        input: PathBuf,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Monomial basis of B_d for a union of standard tentacles.
    Basis {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long, default_value_t = 8)]
        degree_cap: u64,
    },
    /// Hilbert basis and algebra generators for a union of standard tentacles.
    Hilbert {
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        search_bound: u64,
    },
    /// Low-degree subspaces of B_d and counterexample witnesses.
    Witness {
        input: PathBuf,
        #[arg(long, default_value = "0")]
        d: String,
        #[arg(long = "Dmin")]
        dmin: Option<u64>,
        #[arg(long = "Dmax")]
        dmax: u64,
        /// Weights "wx,wy" for a weighted grading instead of total degree.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Lift p·t^d to the higher-dimensional set.
    Lift { input: PathBuf },
    /// Sampled growth exponent compared with the exact δ*.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    Input(String),
    /// The computation could not complete.
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Compute(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::ZeroPolynomial
            | Error::NoBranch
            | Error::DegenerateTentacle
            | Error::InvalidPlan(_)
            | Error::NotRepresentable { .. }
            | Error::DegenerateRegion
            | Error::InvalidInput(_)
            | Error::Parse { .. } => CliError::Input(m),
            Error::NoLeadingTerm
            | Error::InsufficientPrecision { .. }
            | Error::NonRationalBranch
            | Error::BoundTooSmall { .. }
            | Error::DegenerateSample
            | Error::Unsupported(_) => CliError::Compute(m),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Runs the command and renders its report.
pub fn execute(cli: &Cli) -> CliResult<String> {
    let report = run(cli)?;
    Ok(match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(&report),
    })
}

/// Runs the command and returns its report.
pub fn run(cli: &Cli) -> CliResult<Value> {
    let limit = cli.term_limit;
    match &cli.command {
        Command::Expand { input } => {
            let job: ExpandJson = read_json(input)?;
            expand(&job, limit)
        }
        Command::Spec { input } => {
            let t: TentacleJson = read_json(input)?;
            Ok(spec_json(&resolve_spec(&t, limit)?))
        }
        Command::Keyforms { input } => keyforms(&read_json(input)?, limit),
        Command::Classify { input, genus } => classify_cmd(&read_json(input)?, *genus, limit),
        Command::Eval { input, poly } => eval(&read_json(input)?, poly.as_deref(), limit),
        Command::Basis {
            input,
            d,
            degree_cap,
        } => {
            let cs = cone(&read_json(input)?)?;
            let names = generator_names(cs.n());
            let monomials = bd_monomial_basis(&cs, *d, *degree_cap);
            let rendered: Vec<String> = monomials
                .iter()
                .map(|a| monomial(a).display_with(&names[..cs.n()]).to_string())
                .collect();
            Ok(json!({
                "d": d,
                "degree_cap": degree_cap,
                "monomials": monomials,
                "polynomials": rendered,
            }))
        }
        Command::Hilbert {
            input,
            search_bound,
        } => {
            let cs = cone(&read_json(input)?)?;
            let hb = hilbert_basis(&cs, *search_bound)?;
            let names = generator_names(cs.n());
            let rendered: Vec<String> = hb
                .generators
                .iter()
                .map(|g| monomial(g).display_with(&names).to_string())
                .collect();
            Ok(json!({
                "generators": hb.generators,
                "algebra_generators": rendered,
                "extreme_rays": hb.extreme_rays,
                "search_bound": hb.search_bound,
                "complete": hb.complete,
            }))
        }
        Command::Witness {
            input,
            d,
            dmin,
            dmax,
            weights,
        } => witness(
            &read_json(input)?,
            d,
            *dmin,
            *dmax,
            weights.as_deref(),
            limit,
        ),
        Command::Lift { input } => lift(&read_json(input)?),
        Command::Oracle { input, seed } => oracle(&read_json(input)?, *seed, limit),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    info!("reading {}", path.display());
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        let field = e.path().to_string();
        if field == "." {
            CliError::Input(format!("{}: {inner}", path.display()))
        } else {
            CliError::Input(format!("{}: at `{field}`: {inner}", path.display()))
        }
    })
}

fn rat(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

fn rats(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat).collect())
}

fn series_terms(s: &PuiseuxSeries) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(e, c)| {
                let c = c
                    .as_constant()
                    .map_or_else(|| Value::String(c.to_string()), |c| rat(&c));
                json!({ "c": c, "e": rat(e) })
            })
            .collect(),
    )
}

fn spec_json(spec: &SemidegreeSpec) -> Value {
    if spec.is_total_degree() {
        return json!({ "total_degree": true, "series": spec.to_string() });
    }
    json!({
        "total_degree": false,
        "phi": series_terms(spec.phi()),
        "omega": rat(spec.omega()),
        "series": spec.to_string(),
    })
}

fn seq_json(seq: &KeyFormSequence) -> Value {
    json!({
        "forms": seq.forms().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "values": rats(seq.values()),
        "periods": seq.periods(),
        "digits": seq.digits(),
        "consts": rats(seq.consts()),
        "closed": seq.is_closed(),
        "is_positive": seq.is_positive(),
        "is_nonnegative": seq.is_nonnegative(),
    })
}

fn monomial(a: &[u64]) -> MultiPoly {
    MultiPoly::monomial(
        Rat::from_integer(1.into()),
        a.iter().map(|&c| c as u32).collect(),
    )
}

fn plan_of(p: &PlanJson) -> Plan {
    let tail = &p.tail;
    Plan {
        steps: p
            .steps
            .iter()
            .map(|s| (s.omega.0.clone(), s.c.0.clone()))
            .collect(),
        tail: PlanTail {
            omega: tail.omega.0.clone(),
            c1: tail.c1.0.clone(),
            c2: tail.c2.0.clone(),
        },
    }
}

fn series_of(phi: &[SeriesTermJson]) -> PuiseuxSeries {
    PuiseuxSeries::from_rat_terms(phi.iter().map(|t| (t.c.0.clone(), t.e.0.clone())))
}

fn spec_from_boundaries(
    f1: &semigrowth::LaurentPoly2,
    f2: &semigrowth::LaurentPoly2,
    b1: Option<usize>,
    b2: Option<usize>,
    limit: usize,
) -> CliResult<SemidegreeSpec> {
    let choice = |b: Option<usize>| b.map_or(BranchChoice::Top, BranchChoice::Index);
    debug!("comparing boundary branches from {limit} terms");
    Ok(generic_series_retrying(
        f1,
        f2,
        choice(b1),
        choice(b2),
        limit,
        limit << PRECISION_RETRIES,
    )?)
}

/// The semidegree of a planar tentacle description.
fn resolve_spec(t: &TentacleJson, limit: usize) -> CliResult<SemidegreeSpec> {
    match t {
        TentacleJson::Puiseux(p) => Ok(SemidegreeSpec::new(series_of(&p.phi), p.omega.0.clone())?),
        TentacleJson::TotalDegree(_) => Ok(SemidegreeSpec::total_degree()),
        TentacleJson::Boundaries(b) => {
            spec_from_boundaries(&b.f1.0, &b.f2.0, b.branch1, b.branch2, limit)
        }
        TentacleJson::Plan(p) => {
            let b = plan_of(p).boundaries()?;
            spec_from_boundaries(&b.f1, &b.f2, None, None, limit)
        }
        TentacleJson::Standard(_) => Err(CliError::Input(
            "a standard tentacle has no generic Puiseux series".into(),
        )),
    }
}

fn tentacle(t: &TentacleJson, limit: usize) -> CliResult<Tentacle> {
    match t {
        TentacleJson::Standard(s) => {
            Ok(Tentacle::Standard(StandardTentacleSpec::new(s.z.clone())?))
        }
        _ => Ok(Tentacle::Puiseux(resolve_spec(t, limit)?)),
    }
}

fn expand(job: &ExpandJson, limit: usize) -> CliResult<Value> {
    let branches = expand_at_infinity(&job.poly.0, limit)?;
    let out: Vec<Value> = branches
        .iter()
        .map(|b| {
            let mut v = json!({
                "series": b.series.to_string(),
                "terms": series_terms(&b.series),
                "exact": b.exact,
            });
            match &b.kind {
                BranchKind::Real => v["kind"] = json!("real"),
                BranchKind::ComplexPairs { exponent, pairs } => {
                    v["kind"] = json!("complex_pairs");
                    v["exponent"] = rat(exponent);
                    v["pairs"] = json!(pairs);
                }
            }
            v
        })
        .collect();
    Ok(json!({ "poly": job.poly.0.to_string(), "branches": out }))
}

fn keyforms(t: &TentacleJson, limit: usize) -> CliResult<Value> {
    let spec = resolve_spec(t, limit)?;
    let seq = keyforms_of_spec(&spec)?;
    let mut report = json!({ "spec": spec_json(&spec), "keyforms": seq_json(&seq) });
    if let TentacleJson::Plan(p) = t {
        let plan = plan_of(p);
        let b = plan.boundaries()?;
        report["boundaries"] = json!({
            "f1": b.f1.to_string(),
            "f2": b.f2.to_string(),
            "region": b.region.to_string(),
        });
        report["matches_plan"] = json!(plan.expected_keyforms()? == seq);
    }
    Ok(report)
}

fn classify_cmd(t: &TentacleJson, genus: Option<u32>, limit: usize) -> CliResult<Value> {
    let (seq, c) = match t {
        TentacleJson::Plan(p) => {
            let plan = plan_of(p);
            (plan.sequence()?, plan.classify(genus)?)
        }
        _ => {
            let seq = keyforms_of_spec(&resolve_spec(t, limit)?)?;
            let w = seq
                .omega_last()
                .expect("recovered sequences are closed")
                .clone();
            let c = classify(&seq, &w, genus);
            (seq, c)
        }
    };
    Ok(json!({
        "b0_trivial": c.b0_trivial,
        "b_fg": c.b_fg,
        "bd_all_finite": c.bd_all_finite,
        "some_bd_infinite": c.some_bd_infinite,
        "last_form_polynomial": c.last_form_polynomial,
        "omega_last": rat(&c.omega_last),
        "moment_status": c.moment_status.as_str(),
        "keyforms": seq.forms().iter().map(ToString::to_string).collect::<Vec<_>>(),
    }))
}

fn variable_names(dim: usize) -> Vec<String> {
    if dim == 2 {
        vec!["x".into(), "y".into()]
    } else {
        MultiPoly::default_names(dim)
    }
}

fn eval(job: &TentacleSetJson, poly: Option<&str>, limit: usize) -> CliResult<Value> {
    let tentacles = job
        .tentacles
        .iter()
        .map(|t| tentacle(t, limit))
        .collect::<CliResult<Vec<_>>>()?;
    let set = TentacleSet::new(tentacles)?;
    let src = poly.or(job.poly.as_deref()).ok_or_else(|| {
        CliError::Input("no polynomial: pass --poly or give \"poly\" in the input".into())
    })?;
    let names = variable_names(set.ambient_dim());
    let f = parse_multipoly(src, &names)?;
    let per = set
        .tentacles()
        .iter()
        .map(|t| t.value(&f))
        .collect::<Result<Vec<_>, _>>()?;
    let ds = set.delta_s(&f)?;
    Ok(json!({
        "poly": f.display_with(&names).to_string(),
        "delta_star": rats(&per),
        "delta_bar": rat(&set.delta_bar(&f)?),
        "delta_S": ds.to_i64().map_or_else(|| Value::String(ds.to_string()), Value::from),
    }))
}

fn cone(job: &ConeJson) -> CliResult<ConeSemigroup> {
    let dirs = match (&job.directions, &job.tentacles) {
        (Some(d), None) => d.clone(),
        (None, Some(ts)) => ts
            .iter()
            .map(|t| match t {
                TentacleJson::Standard(s) => Ok(s.z.clone()),
                _ => Err(CliError::Input(
                    "only standard tentacles describe a lattice cone".into(),
                )),
            })
            .collect::<CliResult<_>>()?,
        _ => {
            return Err(CliError::Input(
                "give exactly one of \"directions\" and \"tentacles\"".into(),
            ))
        }
    };
    Ok(match job.n {
        Some(n) => ConeSemigroup::new(n, dirs)?,
        None => ConeSemigroup::from_directions(dirs)?,
    })
}

fn parse_weights(s: &str) -> CliResult<Grading> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("weights {s:?}: {e}")))?;
    match parts[..] {
        [wx, wy] if wx > 0 && wy > 0 => Ok(Grading::Weighted(wx, wy)),
        _ => Err(CliError::Input(format!(
            "weights {s:?}: expected two positive integers \"wx,wy\""
        ))),
    }
}

fn witness(
    job: &TentacleSetJson,
    d: &str,
    dmin: Option<u64>,
    dmax: u64,
    weights: Option<&str>,
    limit: usize,
) -> CliResult<Value> {
    let d = parse_rat(d)?;
    let grading = weights.map_or(Ok(Grading::Total), parse_weights)?;
    let specs = job
        .tentacles
        .iter()
        .map(|t| resolve_spec(t, limit))
        .collect::<CliResult<Vec<_>>>()?;
    let grading_json = match grading {
        Grading::Total => json!("total"),
        Grading::Weighted(wx, wy) => json!([wx, wy]),
    };
    let mut report = json!({ "d": rat(&d), "grading": grading_json, "max_degree": dmax });
    match dmin {
        None => {
            let basis = low_degree_space(&specs, &d, dmax, grading)?;
            report["dimension"] = json!(basis.len());
            report["basis"] = json!(basis.iter().map(ToString::to_string).collect::<Vec<_>>());
        }
        Some(dmin) => {
            report["min_degree"] = json!(dmin);
            report["witness"] = match counterexample_witness(&specs, &d, dmin, dmax, grading)? {
                None => Value::Null,
                Some(w) => json!({
                    "poly": w.to_string(),
                    "degree": grading.degree_of(&w),
                    "y_degree": w.y_degree(),
                    "leading_form": grading.leading_form(&w).to_string(),
                    "delta_star": rats(&specs.iter().map(|s| delta_star(s, &w)).collect::<Result<Vec<_>, _>>()?),
                }),
            };
        }
    }
    Ok(report)
}

fn lift(job: &LiftJson) -> CliResult<Value> {
    let p = parse_multipoly(&job.poly, &job.names)?;
    let lifted = lift_element(&GradedElement {
        poly: p,
        level: job.level,
    });
    let mut names = job.names.clone();
    names.push("t".into());
    let mut report = json!({
        "lifted": lifted.display_with(&names).to_string(),
        "names": names,
        "constraints": lifted_set_description(&job.constraints, &job.names),
    });
    if let Some(b) = &job.coefficient_bound {
        report["coefficient_bound"] = rats(&coefficient_bound(b.d, &b.c.0)?);
    }
    Ok(report)
}

fn oracle(job: &OracleJson, seed: u64, limit: usize) -> CliResult<Value> {
    let spec = resolve_spec(&job.tentacle, limit)?;
    let f = &job.poly.0;
    let exact = delta_star(&spec, f)?;
    let expected = to_f64(&exact).max(0.0);
    let ram = spec.generic_series().ram();
    let grid = exact_grid(ram, 10, 14, 9);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ts = Vec::new();
    for _ in 0..2 {
        let t = (0..5)
            .map(|_| Rat::new(rng.gen_range(1..20).into(), 20.into()))
            .find(|t| !is_degenerate_t(&spec, f, t).unwrap_or(true))
            .ok_or_else(|| CliError::Compute("five degenerate curve parameters in a row".into()))?;
        ts.push(t);
    }
    let g = growth_exponent(&spec, f, &grid, &ts)?;
    Ok(json!({
        "poly": f.to_string(),
        "delta_star": rat(&exact),
        "expected": expected,
        "growth_exponent": g,
        "t": rats(&ts),
        "x_max": rat(grid.last().expect("nonempty grid")),
        "tolerance": ORACLE_TOLERANCE,
        "agrees": (g - expected).abs() <= ORACLE_TOLERANCE,
    }))
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) => a
            .iter()
            .map(scalar)
            .collect::<Option<Vec<_>>>()
            .map(|items| format!("[{}]", items.join(", "))),
        Value::Object(_) => None,
    }
}

fn render_object(out: &mut String, m: &Map<String, Value>, indent: usize) {
    for (k, v) in m {
        let pad = "  ".repeat(indent);
        if let Some(s) = scalar(v) {
            let _ = writeln!(out, "{pad}{k}: {s}");
            continue;
        }
        let _ = writeln!(out, "{pad}{k}:");
        match v {
            Value::Object(inner) => render_object(out, inner, indent + 1),
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    let _ = writeln!(out, "{pad}  [{i}]");
                    match item {
                        Value::Object(inner) => render_object(out, inner, indent + 2),
                        other => {
                            let _ = writeln!(out, "{pad}    {}", scalar(other).unwrap_or_default());
                        }
                    }
                }
            }
            _ => unreachable!("scalars are handled above"),
        }
    }
}

/// Indented `key: value` lines, keys sorted.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(m) => render_object(&mut out, m, 0),
        other => {
            let _ = writeln!(out, "{}", scalar(other).unwrap_or_default());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(parse_weights("1,3"), Ok(Grading::Weighted(1, 3)));
        assert!(parse_weights("0,3").is_err());
        assert!(parse_weights("1").is_err());
        assert!(parse_weights("a,b").is_err());
    }

    #[test]
    fn text_rendering() {
        let v = json!({"b": [1, 2], "a": {"c": null, "d": [{"e": "1/2"}]}});
        assert_eq!(
            render_text(&v),
            "a:\n  c: none\n  d:\n    [0]\n      e: 1/2\nb: [1, 2]\n"
        );
    }

    #[test]
    fn error_classes() {
        assert_eq!(CliError::from(Error::DegenerateRegion).exit_code(), 2);
        assert_eq!(
            CliError::from(Error::BoundTooSmall {
                needed: 3,
                bound: 2
            })
            .exit_code(),
            3
        );
        assert_eq!(
            CliError::from(Error::InsufficientPrecision {
                term_limit: 8,
                suggested: 16
            })
            .exit_code(),
            3
        );
    }
}
