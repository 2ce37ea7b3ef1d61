use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use concord_core::algebra::rational::{self, Rational};
use concord_core::algebra::LaurentPolynomial;
use concord_core::certificate::Certificate;
use concord_core::coprimality::{self, Relation};
use concord_core::family::{self, KnotExpr};
use concord_core::obstruction::{self, CGBoundTable, IndependenceOptions, TupleSpec};
use concord_core::seifert::{self, SeifertMatrix};
use concord_core::Error;

const GRAMMAR: &str = "\
Polynomial grammar (variable t, whitespace ignored):
  expr    := term (('+' | '-') term)*
  term    := unary (('*' | '/' | <implicit>) unary)*
  unary   := ('+' | '-') unary | power
  power   := primary ('^' ['+' | '-'] integer)?
  primary := integer | t | '(' expr ')'
Division only by non-zero constants; negative powers only of monomials.
Examples: \"6*t^2-13*t+6\", \"4t^2 - 9t + 4\", \"t^-1 - 1 + t\".

Inputs named FILE may also be given inline as a JSON literal starting with '{' or '['.
Cheeger-Gromov bounds are user inputs (JSON map name -> decimal string) with no defaults.

Exit codes: 0 pass, 1 fail, 2 undecidable, 3 usage or input error.";

#[derive(Parser)]
#[command(name = "concord", version, about = "Exact invariants and certificates for doubling-operator knot families", after_long_help = GRAMMAR)]
struct Cli {
    /// Width bound for numeric rho_0 enclosures.
    #[arg(long, global = true, default_value = "1e-9")]
    tol: String,
    /// Write JSON here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, Arf invariant, signature profile and rho_0 of a Seifert matrix.
    Invariants {
        #[arg(long, value_name = "FILE")]
        seifert: String,
        /// Also emit the signature step function over theta/pi in [0, 1].
        #[arg(long)]
        dump_profile: bool,
    },
    /// Recursive family constructions.
    Family {
        #[command(subcommand)]
        action: FamilyCommand,
    },
    /// Coprimality of two Laurent polynomials.
    Coprime {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// Decide strong coprimality.
        #[arg(long)]
        strong: bool,
        /// Also run the brute-force check with 1 <= |n|, |k| <= B.
        #[arg(long, value_name = "B")]
        oracle: Option<u64>,
        /// Treat --p and --q as ';'-separated sequences.
        #[arg(long)]
        sequence: bool,
    },
    /// Certificates for hypotheses of the independence results.
    Certify {
        #[command(subcommand)]
        what: CertifyCommand,
    },
    /// Exact check of the t* cone argument.
    Tstar {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        kmax: u32,
    },
    /// Number of trefoils whose sum has |rho_0| above a threshold.
    Budget {
        #[arg(long)]
        threshold: String,
    },
    /// Irreducibility of Delta_m for 1 <= m <= MMAX.
    Scan {
        #[arg(long)]
        mmax: u64,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Build K^n(m_1, ..., m_n, K0) and report its derived data.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        twists: Vec<i64>,
        #[arg(long, value_name = "FILE")]
        k0: String,
    },
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Pairwise strong coprimality, main hypotheses and order-two data for a list of tuples.
    Independence {
        #[arg(long, value_name = "FILE")]
        tuples: String,
        #[arg(long, value_name = "FILE")]
        bounds: String,
        /// Worker threads for the pairwise matrix.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Hypotheses for a single family member.
    Main {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        twists: Vec<i64>,
        #[arg(long, value_name = "FILE")]
        k0: String,
        #[arg(long, value_name = "FILE")]
        bounds: String,
    },
    /// Strong coprimality of a sequence P against the operator sequence.
    Membership {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        twists: Vec<i64>,
        #[arg(long, value_name = "FILE")]
        k0: String,
        /// ';'-separated polynomials p_1; ...; p_n.
        #[arg(long)]
        p: String,
    },
    /// Order-two data for a certified negative-amphichiral expression.
    OrderTwo {
        #[arg(long, value_name = "FILE")]
        expr: String,
    },
}

struct Outcome {
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, code: 0 }
    }

    fn certificate(c: &Certificate) -> Self {
        Outcome { json: c.to_json(), code: c.verdict.exit_code() as u8 }
    }
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn load_json(arg: &str, what: &str) -> CliResult<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError(format!("--{what}: cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError(format!("--{what}: invalid JSON: {e}")))
}

fn parse_poly(s: &str, what: &str) -> CliResult<LaurentPolynomial> {
    s.parse().map_err(|e: Error| CliError(format!("--{what} {s:?}: {e}")))
}

fn parse_polys(s: &str, what: &str) -> CliResult<Vec<LaurentPolynomial>> {
    s.split(';').map(|p| parse_poly(p, what)).collect()
}

fn parse_rational(s: &str, what: &str) -> CliResult<Rational> {
    rational::parse(s).map_err(|e| CliError(format!("--{what} {s:?}: {e}")))
}

/// Bits of precision for enclosures at tolerance `tol`.
fn precision(tol: &Rational) -> u32 {
    (tol.denom().bits() as i64 - tol.numer().bits() as i64).max(0) as u32 + 8
}

fn relation_code(r: Relation) -> u8 {
    match r {
        Relation::Coprime | Relation::StronglyCoprime => 0,
        Relation::NotCoprime | Relation::NotStronglyCoprime => 1,
        Relation::Undecidable => 2,
    }
}

fn family_member(n: usize, twists: &[i64], k0: &str) -> CliResult<KnotExpr> {
    let k0 = KnotExpr::from_json(&load_json(k0, "k0")?)?;
    Ok(family::build_K(n, twists, &k0)?)
}

fn invariants(path: &str, dump: bool, tol: &Rational) -> CliResult<Outcome> {
    let v = SeifertMatrix::from_json(&load_json(path, "seifert")?)?;
    let prec = precision(tol);
    let profile = seifert::signature_profile(&v);
    let rho = seifert::rho_zero_with_tol(&v, tol);
    let delta = seifert::alexander(&v);
    let mut out = json!({
        "seifert": v.to_json(),
        "alexander": delta.to_string(),
        "arf": seifert::arf_from_alexander(&delta),
        "signature_profile": profile.to_json(prec),
        "rho_zero": rho.to_json(),
    });
    if dump {
        let mut edges = vec![(rational::int(0), rational::int(0))];
        edges.extend(profile.jumps.iter().map(|j| {
            let iv = j.theta_over_pi(prec);
            (iv.lo, iv.hi)
        }));
        edges.push((rational::int(1), rational::int(1)));
        let steps: Vec<Value> = profile
            .arc_values
            .iter()
            .enumerate()
            .map(|(i, s)| {
                json!({
                    "from": rational::to_decimal(&edges[i].0, 15, false),
                    "to": rational::to_decimal(&edges[i + 1].1, 15, true),
                    "value": s,
                })
            })
            .collect();
        out["step_function"] = json!({"variable": "theta/pi", "arcs": steps});
    }
    Ok(Outcome::ok(out))
}

fn family_build(n: usize, twists: &[i64], k0: &str, tol: &Rational) -> CliResult<Outcome> {
    let e = family_member(n, twists, k0)?;
    let mut report = family::family_report(&e, tol)?;
    report["order_two_certificate"] = family::order_two_certificate(&e)?.to_json();
    Ok(Outcome::ok(report))
}

fn coprime(p: &str, q: &str, strong: bool, oracle: Option<u64>, sequence: bool) -> CliResult<Outcome> {
    if sequence {
        let ps = parse_polys(p, "p")?;
        let qs = parse_polys(q, "q")?;
        let v = coprimality::sequence_strongly_coprime(&ps, &qs)?;
        return Ok(Outcome { code: relation_code(v.relation), json: v.to_json() });
    }
    let p = parse_poly(p, "p")?;
    let q = parse_poly(q, "q")?;
    let mut out = Value::Object(Default::default());
    let mut code = 0;
    if strong || oracle.is_none() {
        let v = if strong { coprimality::strongly_coprime(&p, &q)? } else { coprimality::coprime(&p, &q)? };
        code = relation_code(v.relation);
        out = v.to_json();
    }
    if let Some(b) = oracle {
        let ok = coprimality::strongly_coprime_oracle(&p, &q, b)?;
        out["oracle"] = json!({"bound": b, "strongly_coprime": ok});
        if !strong {
            code = if ok { 0 } else { 1 };
        }
    }
    Ok(Outcome { json: out, code })
}

fn certify(what: CertifyCommand, tol: &Rational) -> CliResult<Outcome> {
    let c = match what {
        CertifyCommand::Independence { tuples, bounds, jobs } => {
            let tuples = TupleSpec::list_from_json(&load_json(&tuples, "tuples")?)?;
            let bounds = CGBoundTable::from_json(&load_json(&bounds, "bounds")?)?;
            let opts = IndependenceOptions { jobs, tolerance: Some(tol.clone()) };
            obstruction::independence_certificate_with(&tuples, &bounds, &opts)?
        }
        CertifyCommand::Main { n, twists, k0, bounds } => {
            let e = family_member(n, &twists, &k0)?;
            let bounds = CGBoundTable::from_json(&load_json(&bounds, "bounds")?)?;
            obstruction::check_main_hypotheses_with_tol(&e, &bounds, tol)?
        }
        CertifyCommand::Membership { n, twists, k0, p } => {
            let e = family_member(n, &twists, &k0)?;
            obstruction::membership_hint(&e, &parse_polys(&p, "p")?)?
        }
        CertifyCommand::OrderTwo { expr } => {
            let e = KnotExpr::from_json(&load_json(&expr, "expr")?)?;
            family::order_two_certificate(&e)?
        }
    };
    Ok(Outcome::certificate(&c))
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let tol = parse_rational(&cli.tol, "tol")?;
    if tol <= rational::int(0) {
        return Err(CliError("--tol must be positive".into()));
    }
    match cli.command {
        Command::Invariants { seifert, dump_profile } => invariants(&seifert, dump_profile, &tol),
        Command::Family { action: FamilyCommand::Build { n, twists, k0 } } => family_build(n, &twists, &k0, &tol),
        Command::Coprime { p, q, strong, oracle, sequence } => coprime(&p, &q, strong, oracle, sequence),
        Command::Certify { what } => certify(what, &tol),
        Command::Tstar { m, kmax } => Ok(Outcome::certificate(&obstruction::tstar_check(m, kmax)?)),
        Command::Budget { threshold } => {
            let t = parse_rational(&threshold, "threshold")?;
            Ok(Outcome::ok(json!({"N": obstruction::trefoil_budget(&t)?})))
        }
        Command::Scan { mmax } => Ok(Outcome::certificate(&obstruction::irreducibility_scan(mmax)?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = cli.output.clone();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => {
            let text = if pretty { serde_json::to_string_pretty(&out.json) } else { serde_json::to_string(&out.json) };
            let text = text.expect("JSON values serialize") + "\n";
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(3);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(out.code)
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
