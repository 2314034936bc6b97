use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use topzeta::algebra::ratfunc::integer_parts;
use topzeta::algebra::rational::parse_rational;
use topzeta::family::{
    cancellation_holds_at, end_to_end_instance_check, jq_equivalent_at, sweep, verify_cancellation,
    verify_jq_equivalence, CandidatePole, FamilyParams, InstanceReport,
};
use topzeta::nondeg::NondegReport;
use topzeta::polytope::{NewtonPolytope, SupportedPoly};
use topzeta::verify::{fan_independence, two_pole_identity, CheckOutcome};
use topzeta::{
    parse_polynomial, parse_polynomial_with_vars, pole_table, zeta_combine, zeta_local_checked, Certification, Error,
    LocalZeta, NormalizedRatFunc, PoleTable, Rational,
};

const PARSE_ERROR: u8 = 2;
const DOMAIN_ERROR: u8 = 3;
const VERIFICATION_FAILED: u8 = 4;
const DEGENERATE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "topzeta",
    version,
    about = "Exact local topological zeta functions from Newton polyhedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta function of a polynomial at the origin
    Zeta(PolyArgs),
    /// Pole table of the zeta function
    Poles(PolyArgs),
    /// Newton nondegeneracy verdict for every compact face
    Nondeg(PolyArgs),
    /// Check the identities behind the cancellation of the pole -3/d
    VerifyPaper(VerifyArgs),
    /// Check one instance of the two-vertex family, or a sweep of instances
    Family(FamilyArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// e.g. "x^2*y^3 + z^5"
    polynomial: String,
    /// Variable names in coordinate order, e.g. "u,v,w"
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[arg(long)]
    json: bool,
    /// Exit with status 5 unless nondegeneracy is certified
    #[arg(long)]
    require_nondegenerate: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify over the free parameters (default)
    #[arg(long, conflicts_with = "numeric")]
    symbolic: bool,
    /// Verify at every family instance with a, b, r <= 3 instead
    #[arg(long)]
    numeric: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, required_unless_present = "sweep")]
    a: Option<i64>,
    #[arg(long, required_unless_present = "sweep")]
    b: Option<i64>,
    #[arg(long, required_unless_present = "sweep")]
    r: Option<i64>,
    #[arg(long, default_value_t = 0)]
    i: i64,
    #[arg(long, default_value_t = 0)]
    j: i64,
    #[arg(long, default_value_t = 0)]
    k: i64,
    /// Root ratios, e.g. "1,-2,1/3" (default 1,2,...,r)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambdas: Option<Vec<String>>,
    /// All instances with a <= AMAX, b <= BMAX, r <= RMAX and i, j, k in {0, 1}
    #[arg(long, num_args = 3, value_names = ["AMAX", "BMAX", "RMAX"], conflicts_with_all = ["a", "b", "r", "lambdas"])]
    sweep: Option<Vec<i64>>,
    #[arg(long)]
    json: bool,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Syntax { .. } => PARSE_ERROR,
        _ => DOMAIN_ERROR,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(&err))
}

fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn parse(args: &PolyArgs) -> Result<SupportedPoly, Error> {
    match &args.vars {
        Some(vars) => {
            let names: Vec<&str> = vars.iter().map(|v| v.trim()).collect();
            parse_polynomial_with_vars(&args.polynomial, &names)
        }
        None => parse_polynomial(&args.polynomial),
    }
}

fn names_for(f: &SupportedPoly, args: &PolyArgs) -> Vec<String> {
    match &args.vars {
        Some(v) => v.iter().map(|s| s.trim().to_string()).collect(),
        None => ["x", "y", "z"][..f.dim()].iter().map(|s| s.to_string()).collect(),
    }
}

fn poles_json(poles: &PoleTable) -> Value {
    Value::Array(
        poles
            .entries()
            .iter()
            .map(|e| json!({"pole": e.pole.to_string(), "order": e.order}))
            .collect(),
    )
}

fn zeta_json(z: &LocalZeta, combined: &NormalizedRatFunc, poles: &PoleTable) -> Value {
    let numerator = combined
        .numerator_univariate()
        .map(|u| u.coeffs().iter().map(rational_json).collect::<Vec<_>>())
        .unwrap_or_default();
    let factors: Vec<Value> = combined
        .denominator()
        .map(|(f, m)| match integer_parts(f) {
            Some((n, nu)) => json!([n.to_string().parse::<i64>().ok(), nu.to_string().parse::<i64>().ok(), m]),
            None => json!([f.to_string(), Value::Null, m]),
        })
        .collect();
    json!({
        "zeta_terms": z.expr.terms().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "numerator": if numerator.is_empty() { vec![json!("0")] } else { numerator },
        "denominator_factors": factors,
        "poles": poles_json(poles),
        "nondegenerate": z.certification.as_str(),
    })
}

fn certification_gate(cert: Certification, require: bool) -> ExitCode {
    match cert {
        Certification::Certified => ExitCode::SUCCESS,
        _ if require => {
            eprintln!("error: nondegeneracy not certified ({cert})");
            ExitCode::from(DEGENERATE)
        }
        _ => {
            eprintln!("warning: nondegeneracy {cert}; the formula value may not be the zeta function");
            ExitCode::SUCCESS
        }
    }
}

fn run_zeta(args: &PolyArgs, poles_only: bool) -> ExitCode {
    let f = match parse(args) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let z = match zeta_local_checked(&f, true) {
        Ok(z) => z,
        Err(e) => return fail(e),
    };
    let combined = zeta_combine(&z.expr);
    let poles = match pole_table(&combined) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    if args.json {
        println!("{}", zeta_json(&z, &combined, &poles));
    } else {
        let names = names_for(&f, args);
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        println!("f = {}", f.display_with(&names));
        if !poles_only {
            println!("terms: {}", z.expr);
            println!("Z(s) = {combined}");
        }
        println!("poles: {poles}");
        println!("nondegenerate: {}", z.certification);
    }
    certification_gate(z.certification, args.require_nondegenerate)
}

fn face_label(poly: &NewtonPolytope, idx: usize) -> (usize, Vec<Vec<i64>>) {
    let face = &poly.compact_faces()[idx];
    (face.dim, face.vertices.iter().map(|v| v.coords().to_vec()).collect())
}

fn run_nondeg(args: &PolyArgs) -> ExitCode {
    let f = match parse(args) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let z = match zeta_local_checked(&f, true) {
        Ok(z) => z,
        Err(e) => return fail(e),
    };
    let report: &NondegReport = z.report.as_ref().expect("checked");
    if args.json {
        let faces: Vec<Value> = report
            .faces
            .iter()
            .map(|v| {
                let (dim, vertices) = face_label(&z.polytope, v.face);
                json!({
                    "dim": dim,
                    "vertices": vertices,
                    "verdict": v.check.verdict.to_string(),
                    "witness": v.check.witness.as_ref().map(|w| w.to_string()),
                })
            })
            .collect();
        println!(
            "{}",
            json!({"faces": faces, "overall": report.overall.to_string(), "nondegenerate": z.certification.as_str()})
        );
    } else {
        for v in &report.faces {
            let (dim, vertices) = face_label(&z.polytope, v.face);
            let pts: Vec<String> = vertices
                .iter()
                .map(|p| format!("({})", p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            let kind = ["vertex", "edge", "2-face"][dim];
            match &v.check.witness {
                Some(w) => println!("{kind} {}: {} (witness {w})", pts.join("-"), v.check.verdict),
                None => println!("{kind} {}: {}", pts.join("-"), v.check.verdict),
            }
        }
        println!("overall: {}", report.overall);
    }
    certification_gate(z.certification, args.require_nondegenerate)
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let instances = if args.numeric { sweep(3, 3, 3) } else { Vec::new() };
    let over_instances = |check: fn(&FamilyParams) -> topzeta::Result<bool>| {
        let bad: Vec<String> = instances
            .par_iter()
            .filter(|p| !check(p).unwrap_or(false))
            .map(|p| p.to_string())
            .collect();
        CheckOutcome {
            pass: bad.is_empty(),
            detail: format!("{} instances, failures {bad:?}", instances.len()),
        }
    };
    let cancellation = if args.numeric {
        over_instances(cancellation_holds_at)
    } else {
        let ok = verify_cancellation();
        CheckOutcome {
            pass: ok,
            detail: "Z1+Z2+R divisible by d*s+3 with quotient Z over Q[a,b,i,j,k,r]".into(),
        }
    };
    let jq = if args.numeric {
        over_instances(jq_equivalent_at)
    } else {
        let ok = verify_jq_equivalence();
        CheckOutcome {
            pass: ok,
            detail: "both fan triangulations at Q agree over Q[a,b,i,j,k,r]".into(),
        }
    };
    let fan = fan_independence(20, 7).unwrap_or_else(|e| CheckOutcome {
        pass: false,
        detail: e.to_string(),
    });
    let checks = [
        ("cancellation of -3/d", cancellation),
        ("alternative J at Q", jq),
        ("difference of simple poles", two_pole_identity(100, 11)),
        ("fan triangulation independence", fan),
    ];
    if args.json {
        let out: Vec<Value> = checks
            .iter()
            .map(|(name, o)| json!({"check": name, "pass": o.pass, "detail": o.detail}))
            .collect();
        println!("{}", json!({ "checks": out }));
    } else {
        for (name, o) in &checks {
            println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        }
    }
    if checks.iter().all(|(_, o)| o.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_FAILED)
    }
}

fn candidate_name(c: CandidatePole) -> &'static str {
    match c {
        CandidatePole::Absent => "absent",
        CandidatePole::CoincidesWithChartPole => "coincides with singular-point pole",
        CandidatePole::Present => "present",
    }
}

fn report_json(rep: &InstanceReport) -> Value {
    let p = &rep.params;
    json!({
        "a": p.a(), "b": p.b(), "r": p.r(), "i": p.i(), "j": p.j(), "k": p.k(),
        "lambdas": p.lambdas().iter().map(rational_json).collect::<Vec<_>>(),
        "facet_table": rep.facet_table,
        "zeta_matches": rep.zeta_matches,
        "charts_match": rep.charts_match,
        "poles_explained": rep.poles_explained,
        "candidate_pole": rep.candidate_pole().to_string(),
        "candidate": candidate_name(rep.candidate),
        "poles": poles_json(&rep.poles),
        "passed": rep.passed(),
    })
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_report(rep: &InstanceReport) {
    println!("{}", rep.params);
    println!("{} facet table", mark(rep.facet_table));
    println!("{} zeta function equals the closed form Z", mark(rep.zeta_matches));
    println!("{} singular points match Z1, Z2", mark(rep.charts_match));
    println!(
        "{} every pole is -1 or a pole of a singular point",
        mark(rep.poles_explained)
    );
    println!("poles: {}", rep.poles);
    println!("{}", rep.candidate_line());
}

fn family_params(args: &FamilyArgs) -> Result<FamilyParams, Error> {
    let (a, b, r) = (args.a.unwrap_or(0), args.b.unwrap_or(0), args.r.unwrap_or(0));
    match &args.lambdas {
        None => FamilyParams::with_default_roots(a, b, r, args.i, args.j, args.k),
        Some(ls) => {
            let mut lambdas = Vec::with_capacity(ls.len());
            for l in ls {
                lambdas.push(parse_rational(l).ok_or_else(|| Error::InvalidParams(format!("bad root ratio {l:?}")))?);
            }
            FamilyParams::new(a, b, r, args.i, args.j, args.k, lambdas)
        }
    }
}

fn run_family(args: &FamilyArgs) -> ExitCode {
    let instances = match &args.sweep {
        Some(bounds) => sweep(bounds[0], bounds[1], bounds[2]),
        None => match family_params(args) {
            Ok(p) => vec![p],
            Err(e) => return fail(e),
        },
    };
    let reports: Result<Vec<InstanceReport>, Error> = instances.par_iter().map(end_to_end_instance_check).collect();
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let passed = reports.iter().filter(|r| r.passed()).count();
    if args.json {
        let count = |c: CandidatePole| reports.iter().filter(|r| r.candidate == c).count();
        println!(
            "{}",
            json!({
                "instances": reports.iter().map(report_json).collect::<Vec<_>>(),
                "total": reports.len(),
                "passed": passed,
                "candidate_absent": count(CandidatePole::Absent),
                "candidate_coincides": count(CandidatePole::CoincidesWithChartPole),
                "candidate_present": count(CandidatePole::Present),
            })
        );
    } else if args.sweep.is_none() {
        print_report(&reports[0]);
    } else {
        for rep in &reports {
            println!(
                "{} {}: {}",
                mark(rep.passed()),
                rep.params,
                candidate_name(rep.candidate)
            );
        }
        let count = |c: CandidatePole| reports.iter().filter(|r| r.candidate == c).count();
        println!(
            "{passed}/{} instances passed; -3/d absent {}, coincides with a singular-point pole {}, new pole {}",
            reports.len(),
            count(CandidatePole::Absent),
            count(CandidatePole::CoincidesWithChartPole),
            count(CandidatePole::Present)
        );
    }
    if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Zeta(args) => run_zeta(args, false),
        Command::Poles(args) => run_zeta(args, true),
        Command::Nondeg(args) => run_nondeg(args),
        Command::VerifyPaper(args) => run_verify(args),
        Command::Family(args) => run_family(args),
    }
}
