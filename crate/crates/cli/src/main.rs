//! `mckay`: command-line front end for the exact McKay computations.
//!
//! Exit status is 0 on success, 1 on a usage or input error and 2 when a
//! mathematical identity fails to hold.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mckay_core::coxeter::{bicolored_reflections, char_polys, coxeter_charpoly, coxeter_number, ebeling_quotient};
use mckay_core::diagram::build;
use mckay_core::exact::series_expand_integral;
use mckay_core::kostant::generating_function;
use mckay_core::molien::{enumerate, molien_coeffs};
use mckay_core::orbit::{assembling_vectors, render_grid};
use mckay_core::suite::{bpg_catalog, molien_report, run_diagram_check, verify_all, verify_quotient_coincidences};
use mckay_core::{BpgId, CheckName, DiagramId, Error, IntMatrix, Report, RootVector};
use serde::Serialize;
use serde_json::json;

const MAX_TERMS: usize = 2000;

#[derive(Debug, Parser)]
#[command(name = "mckay", version, about = "Exact Coxeter, Kostant and McKay computations on Dynkin diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of series terms, or the series order for verifications.
    #[arg(long, global = true, default_value_t = 40, value_parser = parse_terms)]
    terms: usize,

    /// Conjugacy index for the affine A polynomial.
    #[arg(long, global = true)]
    k: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, vertex labels and bipartition.
    Cartan { diagram: String },
    /// Bicolored involutions, Coxeter transformation and Coxeter number.
    Coxeter { diagram: String },
    /// Characteristic polynomials of the Coxeter and affine Coxeter transformations.
    Charpoly { diagram: String },
    /// Reduced quotient chi / chi_affine.
    Quotient { diagram: String },
    /// Generating function component and its series coefficients.
    Poincare {
        diagram: String,
        /// Vertex label; defaults to the affine vertex.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Orbit of the highest root and the assembling vectors.
    Orbit { diagram: String },
    /// Assembling polynomials z(t) per vertex.
    Zpoly { diagram: String },
    /// Runs a named identity check.
    Verify {
        /// One of ebeling, kostant-closed-form, kostant-relation, kostant-form,
        /// z-recurrence, mckay-observation, molien, quotient-coincidence, all.
        check: String,
        /// Diagram id, or a group id for `molien`.
        target: Option<String>,
    },
    /// Molien series of a binary polyhedral group.
    Molien { group: String },
}

fn parse_terms(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a count: {s}"))?;
    if n == 0 || n > MAX_TERMS {
        return Err(format!("terms must lie in 1..={MAX_TERMS}"));
    }
    Ok(n)
}

/// Rendered output plus whether every identity held.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn diagram_id(s: &str) -> Result<DiagramId, Error> {
    s.parse()
}

fn json_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows()
}

fn render_matrix(labels: &[String], m: &IntMatrix) -> String {
    let rows: Vec<RootVector> = m.to_rows().into_iter().map(RootVector::new).collect();
    let named: Vec<(String, &RootVector)> = labels.iter().cloned().zip(rows.iter()).collect();
    render_grid(labels, &named)
}

fn cartan(cli: &Cli, s: &str) -> Result<Output, Error> {
    let d = build(diagram_id(s)?)?;
    if cli.format == Format::Json {
        return Ok(Output::ok(json_string(&d.to_record())));
    }
    let mut out = render_matrix(&d.labels, &d.cartan);
    if let Some(b) = &d.bipartition {
        let names = |part: &[usize]| part.iter().map(|&i| d.labels[i].as_str()).collect::<Vec<_>>().join(" ");
        writeln!(out, "x: {}", names(&b.x)).unwrap();
        writeln!(out, "y: {}", names(&b.y)).unwrap();
    } else {
        writeln!(out, "no bipartition").unwrap();
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct CoxeterJson {
    diagram: String,
    w1: Vec<Vec<i64>>,
    w2: Vec<Vec<i64>>,
    coxeter: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coxeter_number: Option<usize>,
}

fn coxeter(cli: &Cli, s: &str) -> Result<Output, Error> {
    let d = build(diagram_id(s)?)?;
    let pair = bicolored_reflections(&d)?;
    let c = &pair.w2 * &pair.w1;
    let h = if d.is_extended() { None } else { Some(coxeter_number(&d)?) };
    if cli.format == Format::Json {
        return Ok(Output::ok(json_string(&CoxeterJson {
            diagram: d.id.to_string(),
            w1: matrix_rows(&pair.w1),
            w2: matrix_rows(&pair.w2),
            coxeter: matrix_rows(&c),
            coxeter_number: h,
        })));
    }
    let mut out = String::new();
    for (name, m) in [("w1", &pair.w1), ("w2", &pair.w2), ("C = w2 w1", &c)] {
        writeln!(out, "{name}").unwrap();
        out.push_str(&render_matrix(&d.labels, m));
        out.push('\n');
    }
    if let Some(h) = h {
        writeln!(out, "h = {h}").unwrap();
    }
    Ok(Output::ok(out))
}

fn charpoly(cli: &Cli, s: &str) -> Result<Output, Error> {
    let id = diagram_id(s)?;
    let (chi, chi_affine) = if id.extended {
        (None, coxeter_charpoly(&build(id)?)?)
    } else {
        let p = char_polys(id, cli.k)?;
        (Some(p.chi), p.chi_affine)
    };
    let chi = chi.map(|p| p.render('L'));
    let chi_affine = chi_affine.render('L');
    if cli.format == Format::Json {
        let v = match chi {
            Some(c) => json!({ "chi": c, "chi_affine": chi_affine }),
            None => json!({ "chi_affine": chi_affine }),
        };
        return Ok(Output::ok(json_string(&v)));
    }
    let mut out = String::new();
    if let Some(c) = chi {
        writeln!(out, "chi = {c}").unwrap();
    }
    writeln!(out, "chi_affine = {chi_affine}").unwrap();
    Ok(Output::ok(out))
}

fn quotient(cli: &Cli, s: &str) -> Result<Output, Error> {
    let q = ebeling_quotient(diagram_id(s)?, cli.k)?;
    if cli.format == Format::Json {
        return Ok(Output::ok(json_string(&json!({
            "numerator": q.num().render('L'),
            "denominator": q.den().render('L'),
        }))));
    }
    Ok(Output::ok(format!("p(L) = {}\n", q.render('L'))))
}

fn poincare(cli: &Cli, s: &str, vertex: Option<&str>) -> Result<Output, Error> {
    let d = build(diagram_id(s)?.to_extended())?;
    let i = match vertex {
        None => 0,
        Some(l) => d
            .index_of(l)
            .ok_or_else(|| Error::Parse(format!("{} has no vertex {l:?}", d.id)))?,
    };
    let gf = generating_function(&d)?;
    let f = gf.component(i);
    let coeffs = series_expand_integral(f, cli.terms)?;
    let coeffs: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
    if cli.format == Format::Json {
        return Ok(Output::ok(json_string(&json!({
            "diagram": d.id.to_string(),
            "vertex": d.labels[i],
            "numerator": f.num().render('t'),
            "denominator": f.den().render('t'),
            "coefficients": coeffs,
        }))));
    }
    Ok(Output::ok(format!(
        "P_{}(t) = {}\n{}\n",
        d.labels[i],
        f.render('t'),
        coeffs.join(",")
    )))
}

fn orbit(cli: &Cli, s: &str) -> Result<Output, Error> {
    let t = assembling_vectors(&build(diagram_id(s)?.to_finite()?)?)?;
    if cli.format == Format::Json {
        let rows = |vs: &[RootVector]| vs.iter().map(RootVector::to_i64).collect::<Vec<_>>();
        return Ok(Output::ok(json_string(&json!({
            "diagram": t.diagram.id.to_string(),
            "h": t.h,
            "labels": t.diagram.labels,
            "extended_labels": t.extended_labels,
            "tau": rows(&t.tau_beta),
            "z": rows(&t.z),
        }))));
    }
    Ok(Output::ok(format!("{}\n{}", t.render_tau(), t.render_z())))
}

fn zpoly(cli: &Cli, s: &str) -> Result<Output, Error> {
    let t = assembling_vectors(&build(diagram_id(s)?.to_finite()?)?)?;
    if cli.format == Format::Json {
        let entries: Vec<_> = t
            .z_polynomials()
            .iter()
            .zip(&t.extended_labels)
            .skip(1)
            .map(|(p, l)| json!({ "vertex": l, "z": p.render('t') }))
            .collect();
        return Ok(Output::ok(json_string(&entries)));
    }
    Ok(Output::ok(t.render_zpoly()))
}

fn verify(cli: &Cli, check: &str, target: Option<&str>) -> Result<Output, Error> {
    let check: CheckName = check.parse()?;
    let order = cli.terms;
    let reports: Vec<Report> = match (check, target) {
        (CheckName::All, None) => verify_all(order)?,
        (CheckName::QuotientCoincidence, None) => vec![verify_quotient_coincidences()?],
        (CheckName::Molien, None) => bpg_catalog()
            .into_iter()
            .map(|g| molien_report(g, order))
            .collect::<Result<_, _>>()?,
        (CheckName::Molien, Some(g)) => vec![molien_report(g.parse()?, order)?],
        (CheckName::All | CheckName::QuotientCoincidence, Some(t)) => {
            return Err(Error::Parse(format!("{check} takes no target, got {t:?}")));
        }
        (_, None) => return Err(Error::MissingParameter("target")),
        (_, Some(t)) => vec![run_diagram_check(check, diagram_id(t)?, order)?],
    };
    let passed = reports.iter().all(Report::passed);
    if cli.format == Format::Json {
        return Ok(Output {
            text: json_string(&reports),
            passed,
        });
    }
    let mut text = String::new();
    let single = reports.len() == 1;
    for r in &reports {
        text.push_str(&r.to_string());
        if single {
            for c in r.checks.iter().filter(|c| c.passed) {
                writeln!(text, "  ok: {}", c.label).unwrap();
            }
        }
    }
    if !single {
        let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
        let status = if passed { "PASS" } else { "FAIL" };
        writeln!(text, "{status} {check} ({} reports, {checks} checks)", reports.len()).unwrap();
    }
    Ok(Output { text, passed })
}

fn molien(cli: &Cli, s: &str) -> Result<Output, Error> {
    let id: BpgId = s.parse()?;
    let group = enumerate(id)?;
    let m = molien_coeffs(&group, cli.terms - 1)?;
    let diagram = id.paired_diagram()?.to_extended();
    let coeffs: Vec<String> = m.coeffs.iter().map(ToString::to_string).collect();
    if cli.format == Format::Json {
        return Ok(Output::ok(json_string(&json!({
            "group": id.to_string(),
            "order": group.order(),
            "diagram": diagram.to_string(),
            "coefficients": coeffs,
            "max_deviation": m.max_deviation,
        }))));
    }
    Ok(Output::ok(format!(
        "{id}: |G| = {}, diagram {diagram}\n{}\nmax rounding deviation {:.1e}\n",
        group.order(),
        coeffs.join(","),
        m.max_deviation
    )))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Cartan { diagram } => cartan(cli, diagram),
        Command::Coxeter { diagram } => coxeter(cli, diagram),
        Command::Charpoly { diagram } => charpoly(cli, diagram),
        Command::Quotient { diagram } => quotient(cli, diagram),
        Command::Poincare { diagram, vertex } => poincare(cli, diagram, vertex.as_deref()),
        Command::Orbit { diagram } => orbit(cli, diagram),
        Command::Zpoly { diagram } => zpoly(cli, diagram),
        Command::Verify { check, target } => verify(cli, check, target.as_deref()),
        Command::Molien { group } => molien(cli, group),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IdentityViolation(_) | Error::NumericalDrift { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
