//! Subcommands and their dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use mpweyl::algebra::{verify_presentation, WeylAlgebra};
use mpweyl::classify::{detect_breaks, enumerate_simples, skeleton, IdealCoordinates};
use mpweyl::modules::{
    act_element, check_module_relations, cyclicity_probe, BasisBox, ModuleRelationReport, ModuleSpec, ModuleVector,
    Sign,
};
use mpweyl::scalars::RationalScalar;
use mpweyl::uqrs::{specialize_equal_parameters, verify_u_relations};
use serde_json::{json, Value};

use crate::error::{CliError, ErrorKind};
use crate::expr::{eval, parse};
use crate::json::{element_json, scalar_json, spec_json, vector_json};

#[derive(Parser, Debug)]
#[command(name = "mpweyl", version, about = "Exact computation in multiparameter Weyl algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Poly,
    Verma,
    Weight,
    WeightBroken,
    Whittaker,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of an expression.
    Normalize {
        #[arg(short = 'n')]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Act on a basis vector of a module.
    Act {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum)]
        module: ModuleKind,
        /// Comma-separated lambda_i (Verma).
        #[arg(long)]
        lambda: Option<String>,
        /// Comma-separated signs of rho_i, e.g. "+,-" (Verma).
        #[arg(long, allow_hyphen_values = true)]
        zeta_rho: Option<String>,
        /// Comma-separated signs of sigma_i (Verma).
        #[arg(long, allow_hyphen_values = true)]
        zeta_sigma: Option<String>,
        /// Comma-separated mu_i (weight modules).
        #[arg(long)]
        mu: Option<String>,
        /// Comma-separated nu_i (weight modules).
        #[arg(long)]
        nu: Option<String>,
        /// Comma-separated break indices (broken weight modules).
        #[arg(long)]
        breaks: Option<String>,
        /// Comma-separated 0/1 per break (broken weight modules).
        #[arg(long)]
        alpha: Option<String>,
        /// Comma-separated xi_i (Whittaker).
        #[arg(long)]
        xi: Option<String>,
        /// Basis index, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Break set, designated ideal and simple modules of an orbit.
    Classify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Skeleton quiver of a break set.
    Skeleton {
        /// Comma-separated break indices; empty for no breaks.
        #[arg(short = 'J', default_value = "")]
        breaks: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Relation check and cyclicity probe for the universal Whittaker module.
    Whittaker {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        xi: String,
        #[arg(long, default_value_t = 2)]
        radius: i64,
    },
    /// The presentation and the module relation suites.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 2)]
        radius: i64,
    },
    /// Relations of the quantum group under its map into the algebra.
    UqrsVerify {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Parse an expression and print its canonical form.
    ParseCheck {
        #[arg(short = 'n')]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Result of a successful command: a payload and whether every check it
/// ran passed.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, ok: true }
    }
}

fn check_rank(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::usage("-n must be at least 1"));
    }
    Ok(())
}

fn scalar_list(text: &str, n: usize, what: &str) -> Result<Vec<RationalScalar>, CliError> {
    let a = WeylAlgebra::new(n);
    let out = text
        .split(',')
        .map(|piece| {
            let e = eval(&a, &parse(piece, n)?)?;
            e.as_scalar().ok_or_else(|| CliError::domain(format!("{what} entries must be scalars, got {piece:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.len() != n {
        return Err(CliError::usage(format!("{what} needs {n} entries, got {}", out.len())));
    }
    Ok(out)
}

fn int_list(text: &str, what: &str) -> Result<Vec<i64>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| CliError::usage(format!("{what}: {p:?} is not an integer"))))
        .collect()
}

fn sign_list(text: &str, n: usize, what: &str) -> Result<Vec<Sign>, CliError> {
    let out = text
        .split(',')
        .map(|p| match p.trim() {
            "+" | "1" | "+1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(CliError::usage(format!("{what}: {other:?} is not a sign"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.len() != n {
        return Err(CliError::usage(format!("{what} needs {n} entries, got {}", out.len())));
    }
    Ok(out)
}

fn required<'a>(v: &'a Option<String>, flag: &str, module: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::usage(format!("--module {module} needs --{flag}")))
}

fn domain_err(e: impl std::fmt::Display) -> CliError {
    CliError::domain(e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn build_module(
    n: usize,
    kind: ModuleKind,
    lambda: &Option<String>,
    zeta_rho: &Option<String>,
    zeta_sigma: &Option<String>,
    mu: &Option<String>,
    nu: &Option<String>,
    breaks: &Option<String>,
    alpha: &Option<String>,
    xi: &Option<String>,
) -> Result<ModuleSpec, CliError> {
    match kind {
        ModuleKind::Poly => Ok(ModuleSpec::polynomial(n)),
        ModuleKind::Verma => {
            let lambda = scalar_list(required(lambda, "lambda", "verma")?, n, "--lambda")?;
            let zr = sign_list(zeta_rho.as_deref().unwrap_or(&vec!["+"; n].join(",")), n, "--zeta-rho")?;
            let zs = sign_list(zeta_sigma.as_deref().unwrap_or(&vec!["+"; n].join(",")), n, "--zeta-sigma")?;
            ModuleSpec::verma(lambda, zr, zs).map_err(domain_err)
        }
        ModuleKind::Weight => {
            let mu = scalar_list(required(mu, "mu", "weight")?, n, "--mu")?;
            let nu = scalar_list(required(nu, "nu", "weight")?, n, "--nu")?;
            ModuleSpec::weight_no_break(mu, nu).map_err(domain_err)
        }
        ModuleKind::WeightBroken => {
            let mu = scalar_list(required(mu, "mu", "weight-broken")?, n, "--mu")?;
            let nu = scalar_list(required(nu, "nu", "weight-broken")?, n, "--nu")?;
            let breaks = int_list(required(breaks, "breaks", "weight-broken")?, "--breaks")?;
            let alpha = int_list(required(alpha, "alpha", "weight-broken")?, "--alpha")?;
            if breaks.iter().any(|&j| j < 1) || alpha.iter().any(|&a| a != 0 && a != 1) {
                return Err(CliError::usage("--breaks are positive indices and --alpha entries are 0 or 1"));
            }
            let breaks = breaks.into_iter().map(|j| j as usize).collect();
            let alpha = alpha.into_iter().map(|a| a == 1).collect();
            ModuleSpec::weight_broken(mu, nu, breaks, alpha).map_err(domain_err)
        }
        ModuleKind::Whittaker => {
            let xi = scalar_list(required(xi, "xi", "whittaker")?, n, "--xi")?;
            ModuleSpec::whittaker(xi).map_err(domain_err)
        }
    }
}

fn relation_report_json(rep: &ModuleRelationReport) -> Value {
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|f| json!({ "relation": f.label, "index": f.index, "residual": vector_json(&f.residual) }))
        .collect();
    json!({
        "module": rep.module,
        "relations": rep.relations,
        "vectors": rep.vectors,
        "passed": rep.passed(),
        "failures": failures,
    })
}

/// Run one parsed command.
pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Normalize { n, expr } => {
            check_rank(*n)?;
            let a = WeylAlgebra::new(*n);
            let e = eval(&a, &parse(expr, *n)?)?;
            Ok(Report::ok(element_json(&e, *n), e.to_string()))
        }
        Command::ParseCheck { n, expr } => {
            check_rank(*n)?;
            let formatted = parse(expr, *n)?.to_string();
            Ok(Report::ok(json!({ "ok": true, "expr": formatted }), formatted))
        }
        Command::Act { n, module, lambda, zeta_rho, zeta_sigma, mu, nu, breaks, alpha, xi, vector, expr } => {
            check_rank(*n)?;
            let spec = build_module(*n, *module, lambda, zeta_rho, zeta_sigma, mu, nu, breaks, alpha, xi)?;
            let k = int_list(vector, "--vector")?;
            let v = ModuleVector::basis(k);
            let a = WeylAlgebra::new(*n);
            let e = eval(&a, &parse(expr, *n)?)?;
            let out = act_element(&spec, &e, &v).map_err(domain_err)?;
            let json = json!({ "module": spec_json(&spec), "vector": vector_json(&v), "result": vector_json(&out) });
            Ok(Report::ok(json, out.to_string()))
        }
        Command::Classify { n, mu, nu } => {
            check_rank(*n)?;
            let c = IdealCoordinates::new(scalar_list(mu, *n, "--mu")?, scalar_list(nu, *n, "--nu")?)
                .map_err(domain_err)?;
            let rep = detect_breaks(&c);
            let simples = enumerate_simples(&rep).map_err(domain_err)?;
            let breaks: Vec<Value> = rep
                .breaks
                .iter()
                .map(|b| json!({ "index": b.index, "shift": b.shift, "sign": b.sign }))
                .collect();
            let modules: Vec<Value> =
                simples.iter().map(|d| json!({ "alpha": d.alpha_label(), "module": spec_json(&d.spec) })).collect();
            let json = json!({
                "n": n,
                "J": rep.set(),
                "breaks": breaks,
                "designated": {
                    "mu": rep.designated.mu().iter().map(scalar_json).collect::<Vec<_>>(),
                    "nu": rep.designated.nu().iter().map(scalar_json).collect::<Vec<_>>(),
                },
                "simples": simples.len(),
                "modules": modules,
            });
            let mut text = format!("J = {:?}\nsimples: {}\n", rep.set(), simples.len());
            for b in &rep.breaks {
                text.push_str(&format!("break {}: shift {}, sign {}\n", b.index, b.shift, b.sign));
            }
            Ok(Report::ok(json, text.trim_end().to_string()))
        }
        Command::Skeleton { breaks, dot, json } => {
            let j = int_list(breaks, "-J")?;
            if j.iter().any(|&x| x < 1) {
                return Err(CliError::usage("-J takes positive indices"));
            }
            let pres = skeleton(&j.into_iter().map(|x| x as usize).collect::<Vec<_>>());
            let dot_text = pres.to_dot().trim_end().to_string();
            let mut rep = Report::ok(pres.to_json(), dot_text.clone());
            if *dot {
                rep.json = Value::String(dot_text);
            } else if *json {
                rep.text = serde_json::to_string_pretty(&rep.json).expect("serializable");
            }
            Ok(rep)
        }
        Command::Whittaker { n, xi, radius } => {
            check_rank(*n)?;
            let spec = ModuleSpec::whittaker(scalar_list(xi, *n, "--xi")?).map_err(domain_err)?;
            let window = BasisBox::cube(2 * n, *radius);
            let rel = check_module_relations(&spec, &window).map_err(domain_err)?;
            let cyc = cyclicity_probe(&spec, &vec![0; 2 * n], &window).map_err(domain_err)?;
            let ok = rel.passed() && cyc.complete();
            let json = json!({
                "n": n,
                "radius": radius,
                "relations": relation_report_json(&rel),
                "cyclicity": { "reached": cyc.reached.len(), "target": cyc.target.len(), "complete": cyc.complete() },
                "ok": ok,
            });
            let text = format!(
                "relations: {} on {} vectors, {} failures\ncyclicity: {}/{}",
                rel.relations,
                rel.vectors,
                rel.failures.len(),
                cyc.reached.len(),
                cyc.target.len()
            );
            Ok(Report { json, text, ok })
        }
        Command::Verify { n, radius } => {
            check_rank(*n)?;
            let pres = verify_presentation(*n);
            let failures: Vec<Value> =
                pres.failures().map(|o| json!({ "relation": o.label, "residual": element_json(&o.residual, *n) })).collect();
            let one = RationalScalar::one;
            let generic = |i: usize| one() + RationalScalar::r(i) * RationalScalar::s(i);
            let modules = [
                (ModuleSpec::polynomial(*n), BasisBox::cube(*n, *radius)),
                (
                    ModuleSpec::verma((1..=*n).map(generic).collect(), vec![Sign::Plus; *n], vec![Sign::Minus; *n])
                        .expect("valid"),
                    BasisBox::cube(*n, *radius),
                ),
                (ModuleSpec::whittaker((1..=*n).map(generic).collect()).expect("valid"), BasisBox::cube(2 * n, 1)),
            ];
            let mut ok = pres.all_zero();
            let mut reports = Vec::new();
            let mut text = format!("presentation: {} relations, {} nonzero", pres.outcomes.len(), failures.len());
            for (spec, window) in &modules {
                let rep = check_module_relations(spec, window).map_err(domain_err)?;
                ok &= rep.passed();
                text.push_str(&format!("\n{}: {} vectors, {} failures", rep.module, rep.vectors, rep.failures.len()));
                reports.push(relation_report_json(&rep));
            }
            let json = json!({
                "n": n,
                "presentation": { "relations": pres.outcomes.len(), "nonzero": failures.len(), "failures": failures },
                "modules": reports,
                "ok": ok,
            });
            Ok(Report { json, text, ok })
        }
        Command::UqrsVerify { n } => {
            let rep = verify_u_relations(*n).map_err(domain_err)?;
            let failures: Vec<Value> = rep
                .failures()
                .map(|o| {
                    json!({
                        "family": format!("{:?}", o.family),
                        "relation": o.label,
                        "residual": element_json(&o.residual, *n),
                        "zero_with_equal_parameters": specialize_equal_parameters(&o.residual).is_zero(),
                    })
                })
                .collect();
            let ok = rep.all_zero();
            let json = json!({ "n": n, "relations": rep.outcomes.len(), "nonzero": failures.len(), "failures": failures, "ok": ok });
            Ok(Report { json, text: rep.to_string().trim_end().to_string(), ok })
        }
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render_error(err: &CliError, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&err.to_json()).expect("serializable") + "\n",
        Format::Text => err.to_text() + "\n",
    }
}

/// Parse arguments (including the program name) and run. `format` is the
/// value of `MPWEYL_FORMAT`, if set.
pub fn run<I, T>(args: I, format: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let format = match format {
        None | Some("json") => Format::Json,
        Some("text") => Format::Text,
        Some(other) => {
            let err = CliError::usage(format!("MPWEYL_FORMAT must be json or text, got {other:?}"));
            return Outcome { code: 2, stdout: String::new(), stderr: render_error(&err, Format::Json) };
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand) {
                let code = if e.kind() == K::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 };
                return Outcome { code, stdout: e.to_string(), stderr: String::new() };
            }
            let first = e.to_string().lines().next().unwrap_or("invalid arguments").to_string();
            let msg = first.trim_start_matches("error: ").to_string();
            let err = CliError::new(ErrorKind::Usage, msg);
            return Outcome { code: 2, stdout: String::new(), stderr: render_error(&err, format) };
        }
    };
    match execute(&cli.command) {
        Ok(rep) => {
            let stdout = match format {
                Format::Json => match &rep.json {
                    Value::String(s) => s.clone() + "\n",
                    v => serde_json::to_string_pretty(v).expect("serializable") + "\n",
                },
                Format::Text => rep.text + "\n",
            };
            Outcome { code: if rep.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(err) => Outcome { code: err.kind.exit_code(), stdout: String::new(), stderr: render_error(&err, format) },
    }
}
