//! The `superschur` command line. [`run`] parses arguments and returns the
//! exit code with the text for stdout and stderr, so the binary is a thin
//! wrapper and the surface is testable in-process.
//!
//! Exit codes: 0 success, 1 selfcheck failure, 2 bad arguments or violated
//! preconditions, 3 size bound refused, 4 a linear system with no solution.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::Limits;
use crate::error::Error;
use crate::fractions::{frac_solve_full, MatMorphism, MorphismJson, Object};
use crate::ideals::{check_closure, enumerate_prime_sequences, is_prime, jmn_sequence, member_by_eval, IdealSequence};
use crate::partitions::{lr_coeff, Partition};
use crate::rational::to_wire;
use crate::schurweyl::{
    hook_square_sum, p_square_closed_form, rectangle_scan, schur_dim, schur_vanishes, square, tau_rho_product,
    tau_weyl,
};
use crate::selfcheck;
use crate::supereval::{commutant_dim, perm_span_dim, SuperSpace};
use crate::symgroup::{primitive_idempotent, young_symmetrizer, ElementJson, GroupAlgebraElement, TermJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_UNSOLVABLE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "superschur", version, about = "Exact Schur-Weyl and tensor-ideal computations over Q")]
pub struct Cli {
    /// Degree bound; also the truncation degree for `jmn` and `classify`.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Even dimension.
    #[arg(long)]
    pub m: usize,
    /// Odd dimension.
    #[arg(long)]
    pub n: usize,
}

impl SpaceArgs {
    fn space(&self) -> SuperSpace {
        SuperSpace::new(self.m, self.n)
    }
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    /// Element as JSON: a term list `[{"perm":[..],"coeff":"p/q"}]` or an
    /// object `{"degree":d,"terms":[..]}`.
    #[arg(long, conflicts_with_all = ["element_file", "lambda"])]
    pub element: Option<String>,
    /// File holding the element JSON.
    #[arg(long, conflicts_with = "lambda")]
    pub element_file: Option<PathBuf>,
    /// Use the Young symmetrizer of this partition (`trace-poly` uses the
    /// primitive idempotent instead).
    #[arg(long)]
    pub lambda: Option<Partition>,
    /// Degree of a term list; inferred from the first term when omitted.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even and odd dimension of S^lambda(k^{m|n}).
    SchurDim {
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Whether S^lambda(k^{m|n}) vanishes, by rectangle containment.
    Vanishes {
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Whether an element of Q[S_d] acts as zero on (k^{m|n})^{(x)d}.
    IdealMember {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// The truncated kernel ideal J_{m|n} with its closure and primality.
    Jmn {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// All closed prime truncated ideals of the given rank.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
    },
    /// Dimension of the gl(m|n) commutant on the d-th tensor power.
    Commutant {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        degree: usize,
    },
    /// Trace polynomial of an element.
    TracePoly {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Closed-form trace polynomial of the square idempotent.
    PSquare {
        #[arg(long)]
        m0: usize,
    },
    /// Both product forms of the dimension of the square Schur module.
    Tau {
        #[arg(long)]
        m0: usize,
        #[arg(long)]
        m: usize,
    },
    /// Rectangle-criterion scan as CSV (or JSON).
    RectangleScan {
        /// Largest even and largest odd dimension scanned.
        #[arg(long, default_value_t = 3)]
        max_each: usize,
    },
    /// Littlewood-Richardson coefficient c^lambda_{mu nu}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Solve f (x) l = h for l.
    FracSolve {
        /// Problem JSON `{"h":..,"f":..,"c":[..],"c_prime":[..]}`.
        #[arg(long, conflicts_with = "input_file")]
        input: Option<String>,
        #[arg(long)]
        input_file: Option<PathBuf>,
    },
    /// Run the built-in consistency checks.
    Selfcheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: String) -> Self {
        Outcome { code, stdout: String::new(), stderr: message }
    }
}

#[derive(Debug, Deserialize, Serialize)]
pub struct FracProblem {
    pub h: MorphismJson,
    pub f: MorphismJson,
    #[serde(default)]
    pub c: Object,
    #[serde(default)]
    pub c_prime: Object,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeBound { .. } => EXIT_BOUND,
        Error::Unsolvable(_) => EXIT_UNSOLVABLE,
        _ => EXIT_USAGE,
    }
}

fn json_line(v: &Value) -> String {
    // serde_json maps keep keys sorted, so output is canonical
    format!("{v}\n")
}

fn read_element(args: &ElementArgs, idempotent: bool) -> Result<GroupAlgebraElement, Error> {
    if let Some(lambda) = &args.lambda {
        return if idempotent { primitive_idempotent(lambda) } else { young_symmetrizer(lambda) };
    }
    let text = match (&args.element, &args.element_file) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        (None, None) => return Err(Error::Parse("one of --element, --element-file, --lambda is required".into())),
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("element JSON: {e}")))?;
    if value.is_array() {
        let terms: Vec<TermJson> =
            serde_json::from_value(value).map_err(|e| Error::Parse(format!("element terms: {e}")))?;
        let degree = match (args.degree, terms.first()) {
            (Some(d), _) => d,
            (None, Some(t)) => t.perm.len(),
            (None, None) => return Err(Error::Parse("an empty term list needs --degree".into())),
        };
        GroupAlgebraElement::terms_from_json(degree, &terms)
    } else {
        let json: ElementJson = serde_json::from_value(value).map_err(|e| Error::Parse(format!("element: {e}")))?;
        if let Some(d) = args.degree {
            if d != json.degree {
                return Err(Error::DegreeMismatch { left: d, right: json.degree });
            }
        }
        GroupAlgebraElement::from_json(&json)
    }
}

fn ideal_label(seq: &IdealSequence, limits: &Limits) -> Result<String, Error> {
    if seq.is_zero() {
        return Ok("zero".into());
    }
    if seq.kills_unit() {
        return Ok("full".into());
    }
    for n in 0..=seq.max_degree {
        let m = n as i64 + seq.rank;
        if m < 0 {
            continue;
        }
        if jmn_sequence(m as usize, n, seq.max_degree, limits)? == *seq {
            return Ok(format!("J_{{{m}|{n}}}"));
        }
    }
    Ok("other".into())
}

fn ideal_value(seq: &IdealSequence) -> Value {
    serde_json::to_value(seq.to_json()).expect("ideal JSON")
}

fn execute(cli: &Cli, limits: &Limits) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::SchurDim { lambda, space } => {
            let d = schur_dim(lambda, space.space(), limits)?;
            Ok(Outcome::ok(json_line(&json!({"even": d.even, "odd": d.odd}))))
        }
        Command::Vanishes { lambda, space } => {
            let v = schur_vanishes(lambda, space.space());
            Ok(Outcome::ok(json_line(&json!({
                "lambda": lambda.to_wire(), "m": space.m, "n": space.n, "vanishes": v
            }))))
        }
        Command::IdealMember { element, space } => {
            let x = read_element(element, false)?;
            let member = member_by_eval(&x, space.m, space.n, limits)?;
            Ok(Outcome::ok(json_line(&json!({"m": space.m, "n": space.n, "member": member}))))
        }
        Command::Jmn { space } => {
            let d = cli.max_degree.unwrap_or(6);
            let seq = jmn_sequence(space.m, space.n, d, limits)?;
            let closure = check_closure(&seq, limits)?;
            let prime = if d <= limits.max_classify_degree { Some(is_prime(&seq, cli.seed, limits)?) } else { None };
            Ok(Outcome::ok(json_line(&json!({
                "ideal": ideal_value(&seq),
                "induction_ok": closure.induction_ok,
                "contraction_ok": closure.contraction_ok,
                "prime": prime,
            }))))
        }
        Command::Classify { rank } => {
            let d = cli.max_degree.unwrap_or(limits.max_classify_degree);
            let found = enumerate_prime_sequences(*rank, d, cli.seed, limits)?;
            let sequences = found
                .iter()
                .map(|s| Ok(json!({"label": ideal_label(s, limits)?, "ideal": ideal_value(s)})))
                .collect::<Result<Vec<Value>, Error>>()?;
            Ok(Outcome::ok(json_line(&json!({"rank": rank, "max_degree": d, "sequences": sequences}))))
        }
        Command::Commutant { space, degree } => {
            let v = space.space();
            let dim = commutant_dim(v, *degree, limits)?;
            let span = perm_span_dim(v, *degree, limits)?;
            Ok(Outcome::ok(json_line(&json!({
                "commutant_dim": dim,
                "perm_span_dim": span,
                "hook_square_sum": hook_square_sum(v, *degree),
            }))))
        }
        Command::TracePoly { element } => {
            let x = read_element(element, true)?;
            Ok(Outcome::ok(json_line(&Value::String(x.trace_poly().to_string()))))
        }
        Command::PSquare { m0 } => {
            let p = p_square_closed_form(*m0)?;
            Ok(Outcome::ok(json_line(&Value::String(p.to_string()))))
        }
        Command::Tau { m0, m } => {
            let rho = match tau_rho_product(*m0, *m) {
                Ok(v) => Value::String(to_wire(&v)),
                Err(Error::OutsideValidityRange { .. }) => Value::Null,
                Err(e) => return Err(e),
            };
            let weyl = match tau_weyl(&square(*m0), *m) {
                Ok(v) => Value::String(to_wire(&v)),
                Err(Error::Precondition(_)) => Value::Null,
                Err(e) => return Err(e),
            };
            let closed = p_square_closed_form(*m0)?.eval_int(*m as i64);
            Ok(Outcome::ok(json_line(&json!({
                "m0": m0, "m": m, "tau_rho": rho, "tau_weyl": weyl, "p_square": to_wire(&closed)
            }))))
        }
        Command::RectangleScan { max_each } => {
            let d = cli.max_degree.unwrap_or(6);
            limits.check_degree(d)?;
            let rows = rectangle_scan(1..=d, *max_each, limits)?;
            if format == Some(Format::Json) {
                let v = serde_json::to_value(&rows).expect("scan rows");
                return Ok(Outcome::ok(json_line(&v)));
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| Error::Parse(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Outcome::ok(String::from_utf8(bytes).expect("csv is utf-8")))
        }
        Command::Lr { lambda, mu, nu } => {
            Ok(Outcome::ok(json_line(&json!({"coefficient": lr_coeff(lambda, mu, nu)}))))
        }
        Command::FracSolve { input, input_file } => {
            let text = match (input, input_file) {
                (Some(s), _) => s.clone(),
                (None, Some(p)) => {
                    std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?
                }
                (None, None) => return Err(Error::Parse("one of --input, --input-file is required".into())),
            };
            let problem: FracProblem =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("problem JSON: {e}")))?;
            let h = MatMorphism::from_json(&problem.h)?;
            let f = MatMorphism::from_json(&problem.f)?;
            let sol = frac_solve_full(&h, &f, &problem.c, &problem.c_prime)?;
            let l = serde_json::to_value(sol.l.to_json()).expect("morphism JSON");
            Ok(Outcome::ok(json_line(&json!({"l": l, "nullity": sol.nullity}))))
        }
        Command::Selfcheck => {
            let results = selfcheck::run_all(cli.seed, limits);
            let passed = results.iter().all(|r| r.passed);
            let mut text = String::new();
            if format == Some(Format::Json) {
                let v = json!({"passed": passed, "checks": serde_json::to_value(&results).expect("checks")});
                text = json_line(&v);
            } else {
                for r in &results {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(text, "{status} {} {}", r.name, r.detail);
                }
            }
            let code = if passed { EXIT_OK } else { EXIT_SELFCHECK };
            Ok(Outcome { code, stdout: text, stderr: String::new() })
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    let mut limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    if let Some(d) = cli.max_degree {
        limits.max_degree = limits.max_degree.max(d);
    } else {
        limits.max_degree = 6;
    }
    match execute(&cli, &limits) {
        Ok(o) => o,
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}
