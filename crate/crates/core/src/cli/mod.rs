//! Command-line front end. [`run_with`] is the whole program; `main` only
//! wires it to the process streams.

mod parser;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::exactalg::{parse_rat, FieldCtx, FieldElem, Point, Rat, RatFunc};
use crate::kovacic::{
    self, second_solution, verify, ClosedFormSolution, KovacicError, KovacicVerdict, Omega, Origin, Sign,
};
use crate::schrodinger::{
    self, enumerate_integrable_a, integrable_zero_energy, lj_normal_form, martinet_ramis, radial_solution,
    whittaker_r, LJParams, Method, SchrodingerError, WhittakerParams,
};
use crate::statmech::{
    self, parse_grid, potential_curve, temperature_grid, virial_csv, virial_table, wavefunction_curve, Family,
    PotentialSpec, QuadratureConfig, StatmechError,
};
use crate::susyqm::{ground_state, partner_potentials, superpotential_from_lj, SusyError};

pub use parser::{parse_ast, parse_expression, parse_expression_in, ExprAst, ParseError};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 1,
    Undecided = 2,
    Internal = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    fn usage(m: impl ToString) -> Self {
        CliError {
            exit: Exit::Usage,
            message: m.to_string(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        let exit = match &e {
            ParseError::Alg(crate::exactalg::AlgError::UnsupportedExtension { .. })
            | ParseError::Alg(crate::exactalg::AlgError::UnsupportedPoles { .. }) => Exit::Undecided,
            _ => Exit::Usage,
        };
        CliError {
            exit,
            message: e.to_string(),
        }
    }
}

impl From<KovacicError> for CliError {
    fn from(e: KovacicError) -> Self {
        let exit = match e {
            KovacicError::UnableToDecide(_) => Exit::Undecided,
            KovacicError::NotClosedForm(_) => Exit::Usage,
            KovacicError::Internal(_) => Exit::Internal,
        };
        CliError {
            exit,
            message: e.to_string(),
        }
    }
}

impl From<SchrodingerError> for CliError {
    fn from(e: SchrodingerError) -> Self {
        match e {
            SchrodingerError::Kovacic(k) => k.into(),
            SchrodingerError::Alg(ref a) => {
                let exit = match a {
                    crate::exactalg::AlgError::UnsupportedExtension { .. }
                    | crate::exactalg::AlgError::UnsupportedPoles { .. } => Exit::Undecided,
                    _ => Exit::Internal,
                };
                CliError {
                    exit,
                    message: e.to_string(),
                }
            }
            SchrodingerError::MethodDisagreement(_) => CliError {
                exit: Exit::Internal,
                message: e.to_string(),
            },
            other => CliError::usage(other),
        }
    }
}

impl From<SusyError> for CliError {
    fn from(e: SusyError) -> Self {
        match e {
            SusyError::Alg(_) => CliError {
                exit: Exit::Undecided,
                message: e.to_string(),
            },
            other => CliError::usage(other),
        }
    }
}

impl From<StatmechError> for CliError {
    fn from(e: StatmechError) -> Self {
        match e {
            StatmechError::Susy(s) => s.into(),
            StatmechError::NoConvergence { .. } => CliError {
                exit: Exit::Internal,
                message: e.to_string(),
            },
            other => CliError::usage(other),
        }
    }
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s.trim()).ok_or_else(|| format!("expected an integer or p/q, got {s:?}"))
}

#[derive(Parser, Debug)]
#[command(name = "ljgalois", version, about = "Liouvillian integrability of Lennard-Jones Schrödinger equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kovacic's algorithm for y'' = r(x) y.
    Kovacic {
        /// Rational function in x, e.g. "(-3*x^5-4*x^3+4)/(16*x^7)".
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Lennard-Jones radial equations.
    Lj {
        #[command(subcommand)]
        command: LjCommand,
    },
    /// Superpotential, partner potentials and ground state.
    Susy {
        #[arg(long)]
        nu: u32,
        #[arg(long = "A", value_parser = rat_arg, allow_hyphen_values = true)]
        a: Rat,
        #[arg(long = "B", value_parser = rat_arg, allow_hyphen_values = true)]
        b: Rat,
        /// Sample the ground state on rmin:rmax:n.
        #[arg(long)]
        grid: Option<String>,
        /// Use the +√B̄ branch of the superpotential.
        #[arg(long)]
        mirror: bool,
    },
    /// Second virial coefficients of two potentials, as CSV.
    Virial {
        #[arg(long, default_value = "12-6")]
        family1: String,
        #[arg(long, default_value = "10-6")]
        family2: String,
        #[arg(long, default_value_t = 0.3)]
        tmin: f64,
        #[arg(long, default_value_t = 10.0)]
        tmax: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Log-spaced temperatures.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 1e-9)]
        rel_tol: f64,
    },
    /// Sampled potential or wavefunction curves, as CSV.
    Curves {
        #[command(subcommand)]
        command: CurveCommand,
    },
    /// Whittaker integrability (Martinet–Ramis) with a Kovacic cross-check.
    Whittaker {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        kappa: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        mu: Rat,
    },
    /// Bessel integrability: n ∈ 1/2 + Z.
    Bessel {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        n: Rat,
    },
}

#[derive(Args, Debug)]
struct LjArgs {
    #[arg(long)]
    nu: u32,
    #[arg(long)]
    delta: u32,
    #[arg(long = "A", value_parser = rat_arg, allow_hyphen_values = true)]
    a: Rat,
    #[arg(long = "B", value_parser = rat_arg, allow_hyphen_values = true)]
    b: Rat,
    #[arg(long = "C", value_parser = rat_arg, allow_hyphen_values = true, default_value = "0")]
    c: Rat,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "0")]
    energy: Rat,
    /// Lift the sign conditions on Ā, B̄, C̄.
    #[arg(long)]
    formal: bool,
    /// Largest |m| reported among the witnesses.
    #[arg(long, default_value_t = schrodinger::DEFAULT_WITNESS_RANGE)]
    m_range: i64,
}

#[derive(Subcommand, Debug)]
enum LjCommand {
    /// Integrability verdict and closed forms for one parameter set.
    Analyze(LjArgs),
    /// Values of Ā that make the zero-energy problem integrable.
    Parametric {
        #[arg(long)]
        nu: u32,
        #[arg(long = "B", value_parser = rat_arg)]
        b: Rat,
        #[arg(long = "C", value_parser = rat_arg, default_value = "0")]
        c: Rat,
        #[arg(long, allow_hyphen_values = true)]
        m_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        m_max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    /// V(r)/ε against r/σ.
    Potential {
        #[arg(long, default_value = "12-6")]
        family: String,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Zero-energy ground state ψ₀(r).
    Wavefunction {
        #[arg(long)]
        nu: u32,
        #[arg(long = "A", value_parser = rat_arg)]
        a: Rat,
        #[arg(long = "B", value_parser = rat_arg)]
        b: Rat,
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: Option<String>,
    },
}

/// Runs the program on `argv` (program name first). Returns the exit code.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    Exit::Ok as i32
                }
                _ => {
                    let _ = write!(err, "{text}");
                    Exit::Usage as i32
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            Exit::Ok as i32
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.exit as i32
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn write_or_return(csv: String, out: Option<String>, summary: Value) -> Result<String, CliError> {
    match out {
        Some(path) => {
            std::fs::write(&path, csv).map_err(|e| CliError::usage(format!("{path}: {e}")))?;
            Ok(pretty(&summary))
        }
        None => Ok(csv),
    }
}

fn dispatch(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Kovacic { r, text, .. } => {
            let mut ctx = FieldCtx::new();
            let rf = parse_expression_in(&r, &mut ctx)?;
            let v = kovacic::solve_in(&rf, &mut ctx)?;
            let j = verdict_json(&rf, &v, "x");
            Ok(if text { text_form(&j) } else { pretty(&j) })
        }
        Command::Lj { command } => match command {
            LjCommand::Analyze(a) => lj_analyze(a),
            LjCommand::Parametric { nu, b, c, m_min, m_max } => {
                if m_min > m_max {
                    return Err(CliError::usage("need m-min ≤ m-max"));
                }
                let vals = enumerate_integrable_a(&b, &c, nu, m_min, m_max)?;
                Ok(pretty(&Value::Array(vals.iter().map(field_json).collect())))
            }
        },
        Command::Susy { nu, a, b, grid, mirror } => {
            let w = superpotential_from_lj(nu, &a, &b, mirror)?;
            let pp = partner_potentials(&w);
            let mut m = Map::new();
            m.insert("superpotential".into(), json!(w.render()));
            m.insert("v_minus".into(), json!(pp.v_minus.render("r")));
            m.insert("v_plus".into(), json!(pp.v_plus.render("r")));
            m.insert("variable".into(), json!("r"));
            if !mirror {
                let p = LJParams::new(nu, 2 * nu - 2, a, b, Rat::from_integer(0.into()), Rat::from_integer(0.into()), false)
                    .map_err(CliError::from)?;
                let g = ground_state(&p)?;
                m.insert("ground_state".into(), json!(g.render()));
                if let Some(grid) = grid {
                    let pts = parse_grid(&grid)?;
                    let samples: Vec<Value> = pts.iter().map(|r| json!([r, g.eval(*r)])).collect();
                    m.insert("samples".into(), Value::Array(samples));
                }
            }
            Ok(pretty(&Value::Object(m)))
        }
        Command::Virial {
            family1,
            family2,
            tmin,
            tmax,
            steps,
            log,
            out,
            jobs,
            rel_tol,
        } => {
            let f1: Family = family1.parse()?;
            let f2: Family = family2.parse()?;
            let s1 = PotentialSpec::new(f1, 1.0, 1.0)?;
            let s2 = PotentialSpec::new(f2, 1.0, 1.0)?;
            let grid = temperature_grid(tmin, tmax, steps, log)?;
            let cfg = QuadratureConfig {
                rel_tol,
                ..QuadratureConfig::default()
            };
            let rows = virial_table(&s1, &s2, &grid, &cfg, jobs)?;
            let summary = json!({"rows": rows.len(), "family1": f1.to_string(), "family2": f2.to_string(), "out": out});
            write_or_return(virial_csv(&rows), out, summary)
        }
        Command::Curves { command } => match command {
            CurveCommand::Potential {
                family,
                sigma,
                eps,
                grid,
                out,
            } => {
                let spec = PotentialSpec::new(family.parse()?, sigma, eps)?;
                let s = potential_curve(&spec, &parse_grid(&grid)?)?;
                let summary = json!({"rows": s.len(), "out": out});
                write_or_return(statmech::curve_csv("r_over_sigma,V_over_eps", &s), out, summary)
            }
            CurveCommand::Wavefunction { nu, a, b, grid, out } => {
                let zero = Rat::from_integer(0.into());
                let p = LJParams::new(nu, 2 * nu - 2, a, b, zero.clone(), zero, false)?;
                let s = wavefunction_curve(&p, &parse_grid(&grid)?)?;
                let summary = json!({"rows": s.len(), "out": out});
                write_or_return(statmech::curve_csv("r,psi0", &s), out, summary)
            }
        },
        Command::Whittaker { kappa, mu } => {
            let w = WhittakerParams {
                kappa: FieldElem::from_rat(kappa),
                mu: FieldElem::from_rat(mu),
            };
            let r = whittaker_r(&w);
            let mr = martinet_ramis(&w);
            let mut m = Map::new();
            m.insert("kappa".into(), json!(w.kappa.render(false)));
            m.insert("mu".into(), json!(w.mu.render(false)));
            m.insert("r".into(), json!(r.render("x")));
            m.insert("martinet_ramis".into(), json!(mr));
            let v = kovacic::solve(&r)?;
            if v.is_integrable() != mr {
                return Err(CliError {
                    exit: Exit::Internal,
                    message: format!("Martinet–Ramis says {mr}, Kovacic returned case {}", v.case()),
                });
            }
            m.insert("kovacic".into(), verdict_json(&r, &v, "x"));
            m.insert("integrable".into(), json!(mr));
            Ok(pretty(&Value::Object(m)))
        }
        Command::Bessel { n } => {
            let ok = schrodinger::bessel_integrable(&n);
            Ok(pretty(&json!({"n": crate::exactalg::FieldElem::from_rat(n).render(false), "integrable": ok})))
        }
    }
}

fn lj_analyze(a: LjArgs) -> Result<String, CliError> {
    let p = LJParams::new(a.nu, a.delta, a.a, a.b, a.c, a.energy, a.formal)?;
    let mut m = Map::new();
    m.insert(
        "params".into(),
        json!({
            "nu": p.nu, "delta": p.delta,
            "A": rat_text(&p.a_bar), "B": rat_text(&p.b_bar), "C": rat_text(&p.c_bar),
            "energy": rat_text(&p.energy), "formal": p.formal,
        }),
    );
    m.insert(
        "effective_potential".into(),
        json!(schrodinger::effective_potential(&p).render("r")),
    );
    let family = p.energy == Rat::from_integer(0.into()) && p.delta == 2 * p.nu - 2;
    if family {
        let v = integrable_zero_energy(&p, a.m_range)?;
        m.insert("integrable".into(), json!(v.integrable));
        m.insert(
            "methods".into(),
            json!(match v.method {
                Method::Both => "both",
                Method::MartinetRamis => "martinet-ramis",
                Method::Kovacic => "kovacic",
            }),
        );
        m.insert(
            "whittaker".into(),
            json!({"kappa": v.whittaker.kappa.render(false), "mu": v.whittaker.mu.render(false)}),
        );
        let ws: Vec<Value> = v
            .witnesses
            .iter()
            .map(|w| {
                json!({"m": w.m, "outer": if w.outer_plus {"+"} else {"-"}, "inner": if w.inner_plus {"+"} else {"-"}})
            })
            .collect();
        m.insert("witnesses".into(), Value::Array(ws));
        if let Some(k) = &v.kovacic {
            let r = lj_normal_form(&p)?;
            m.insert("normal_form".into(), json!(r.render("z")));
            m.insert("kovacic".into(), verdict_json(&r, k, "z"));
        }
        if let Some(u) = &v.radial {
            m.insert("radial_solution".into(), json!(u.render("r")));
        }
        match ground_state(&p) {
            Ok(g) => {
                m.insert("superpotential".into(), json!(g.w.render()));
                m.insert("ground_state".into(), json!(g.render()));
            }
            Err(e) => {
                m.insert("ground_state".into(), Value::Null);
                m.insert("susy_note".into(), json!(e.to_string()));
            }
        }
    } else {
        let (v, u) = radial_solution(&p)?;
        let r = lj_normal_form(&p)?;
        m.insert("integrable".into(), json!(v.is_integrable()));
        m.insert("methods".into(), json!("kovacic"));
        m.insert("normal_form".into(), json!(r.render("z")));
        m.insert("kovacic".into(), verdict_json(&r, &v, "z"));
        if let Some(u) = u {
            m.insert("radial_solution".into(), json!(u.render("r")));
        }
    }
    Ok(pretty(&Value::Object(m)))
}

fn rat_text(q: &Rat) -> String {
    FieldElem::from_rat(q.clone()).render(false)
}

fn field_json(x: &FieldElem) -> Value {
    match x.as_i64() {
        Some(n) => json!(n),
        None => json!(x.render(false)),
    }
}

fn point_text(p: &Point) -> String {
    match p {
        Point::Finite(c) => c.render(false),
        Point::Infinity => "inf".into(),
    }
}

fn omega_text(o: &Omega, var: &str) -> String {
    let poly = |coeffs: &[RatFunc]| {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let w = match i {
                0 => String::new(),
                1 => "*w".into(),
                _ => format!("*w^{i}"),
            };
            terms.push(format!("({}){w}", c.render(var)));
        }
        format!("root of {} = 0", terms.join(" + "))
    };
    match o {
        Omega::Rational(w) => w.render(var),
        Omega::Quadratic { b, c } => poly(&[c.clone(), b.clone(), RatFunc::one()]),
        Omega::Minimal { coeffs } => poly(coeffs),
    }
}

fn solution_json(r: &RatFunc, s: &ClosedFormSolution, var: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("case".into(), json!(s.case));
    m.insert("n".into(), json!(s.n));
    m.insert("omega".into(), json!(omega_text(&s.omega, var)));
    let ps: Vec<String> = if s.p_chain.is_empty() {
        vec![s.prefactor.render(var)]
    } else {
        s.p_chain.iter().map(|p| p.render(var)).collect()
    };
    m.insert("P".into(), json!(ps));
    if let Some(t) = &s.theta {
        m.insert("theta".into(), json!(t.render(var)));
    }
    if let Some(k) = s.m {
        m.insert("m".into(), json!(k));
    }
    match &s.zeta {
        Some(z) => {
            m.insert("solution".into(), json!(z.render(var)));
            let second = if s.origin == Origin::Zero {
                var.to_string()
            } else {
                second_solution(s).map(|q| q.render(var)).unwrap_or_default()
            };
            m.insert("second_solution".into(), json!(second));
        }
        None => {
            m.insert("solution".into(), Value::Null);
        }
    }
    let origin = match &s.origin {
        Origin::Zero => json!("r = 0"),
        Origin::Signs(v) => Value::Array(
            v.iter()
                .map(|(p, sg)| json!({"point": point_text(p), "sign": match sg { Sign::Plus => "+", Sign::Minus => "-" }}))
                .collect(),
        ),
        Origin::ETuple(v) => Value::Array(
            v.iter()
                .map(|(p, e)| json!({"point": point_text(p), "e": e.render(false)}))
                .collect(),
        ),
    };
    m.insert("origin".into(), origin);
    m.insert("verified".into(), json!(verify(r, s)));
    m
}

/// JSON verdict: `case`, and either the solution data or a per-case
/// `witness` of failure.
pub fn verdict_json(r: &RatFunc, v: &KovacicVerdict, var: &str) -> Value {
    let mut m = match v {
        KovacicVerdict::Integrable(s) => solution_json(r, s, var),
        KovacicVerdict::NotIntegrable(w) => {
            let mut m = Map::new();
            m.insert("case".into(), json!(4));
            m.insert(
                "witness".into(),
                json!({"case1": w.case1.to_string(), "case2": w.case2.to_string(), "case3": w.case3.to_string()}),
            );
            m
        }
    };
    m.insert("integrable".into(), json!(v.is_integrable()));
    m.insert("r".into(), json!(r.render(var)));
    m.insert("variable".into(), json!(var));
    Value::Object(m)
}

fn text_form(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(m) = v {
        for (k, val) in m {
            let t = match val {
                Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("{k}: {t}\n"));
        }
    }
    s
}
