use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use affschur::expr::{self, Context, Value};
use affschur::hall;
use affschur::schur::{Report, Status};
use affschur::suites::{self, SuiteConfig};
use affschur::Error;

const GRAMMAR: &str = "\
Elements:
  [M], br[M]        basis element [A]          e[M]     basis element e_A
  M(j,r)            BLM element A(j, r)        M[j,r]   classical A[j, r] at v = 1
  c[M]              classical basis [A]_1
  gen:E1 gen:F2 gen:K1 gen:K1^-1 gen:z1+ gen:z1-   generator images in the Schur algebra
  s1 rho rho^2 Tw[2,1,3]                           affine Hecke algebra, T_w
  u[M]                                             Hall algebra basis u_A
  (laurent)*X, X*Y, X + Y, X - Y                   coefficients, products, sums
Matrices M:
  {(1,2):1,(2,2):3}  diag(1,1)  E12  E{1,-2}  S1[2] (= E{1,3})  S2  2S1+S2  0
  j is 0 or (j_1,...,j_n); r is r or an integer.

Examples:
  affschur mult --n 2 --r 2 \"[diag(1,1)]\" \"[diag(1,1)]\"
  affschur mult \"E12(0,r)\" \"0(0,r)\"
  affschur mult --r 2 s1 s1
  affschur hallpoly --n 2 \"S1[2]\" S1 S2
  affschur verify polyidentity --n 3 --max 2

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse error.";

#[derive(Parser)]
#[command(name = "affschur", version, about = "Hall algebras, affine Hecke algebras and affine q-Schur algebras", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Number of vertices of the cyclic quiver.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Degree r.
    #[arg(long, global = true, default_value_t = 2)]
    r: i32,
    /// Bandwidth bound for suites that enumerate matrices.
    #[arg(long, global = true)]
    bandwidth: Option<i32>,
    /// Size bound for suites (component bound, dimension or degree).
    #[arg(long, global = true)]
    max: Option<i32>,
    /// Largest module dimension for Hall polynomial counting (at most 6).
    #[arg(long, global = true, env = "AFFSCHUR_CAP")]
    cap: Option<i32>,
    /// Interpolation primes, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Number of random samples in sampled suites.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two elements.
    Mult { x: String, y: String },
    /// Hall polynomial φ^C_{A,B} in q.
    Hallpoly { c: String, a: String, b: String },
    /// Run a verification suite.
    Verify { suite: String },
}

fn element_json(v: &Value, ctx: &Context) -> serde_json::Value {
    let terms: Vec<_> = expr::terms(v).into_iter().map(|(b, c)| json!({"basis": b, "coeff": c})).collect();
    json!({
        "algebra": v.algebra(),
        "n": ctx.n,
        "r": ctx.r,
        "expr": expr::render(v, ctx),
        "terms": terms,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn mult(opts: &Opts, x: &str, y: &str) -> Result<String, Error> {
    let ctx = Context { n: opts.n, r: opts.r };
    let a = expr::parse_expr(x, &ctx)?;
    let b = expr::parse_expr(y, &ctx)?;
    let v = expr::multiply(a, b, &ctx)?;
    Ok(match opts.format {
        Format::Text => expr::render(&v, &ctx),
        Format::Json => serde_json::to_string_pretty(&element_json(&v, &ctx)).unwrap(),
        Format::Csv => {
            let mut s = String::from("basis,coeff");
            for (b, c) in expr::terms(&v) {
                s.push_str(&format!("\n{},{}", csv_field(&b), csv_field(&c)));
            }
            s
        }
    })
}

fn hallpoly(opts: &Opts, c: &str, a: &str, b: &str) -> Result<String, Error> {
    let m = |s: &str| expr::parse_matrix(opts.n, s);
    let (mc, ma, mb) = (m(c)?, m(a)?, m(b)?);
    for x in [&mc, &ma, &mb] {
        if !x.is_upper() || !x.is_nonneg() {
            return Err(Error::WrongShape(format!("{} is not a module", expr::matrix_text(x))));
        }
    }
    let p = hall::hall_poly(&mc, &ma, &mb)?;
    let q = hall::q_string(&p);
    Ok(match opts.format {
        Format::Text => q,
        Format::Json => serde_json::to_string_pretty(&json!({
            "C": expr::matrix_text(&mc),
            "A": expr::matrix_text(&ma),
            "B": expr::matrix_text(&mb),
            "q": q,
            "v": p.to_string(),
        }))
        .unwrap(),
        Format::Csv => format!("C,A,B,q\n{},{},{},{}", csv_field(c), csv_field(a), csv_field(b), csv_field(&q)),
    })
}

fn status_text(s: &Status) -> String {
    match s {
        Status::Pass => "PASS".into(),
        Status::Fail => "FAIL".into(),
        Status::Skipped(why) => format!("SKIP ({})", why),
    }
}

fn report_text(suite: &str, rep: &Report, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            for (name, st) in &rep.items {
                s.push_str(&format!("{:<4} {}\n", status_text(st), name));
            }
            let fails = rep.failures().len();
            s.push_str(&format!("{}: {} checks, {} failed", suite, rep.items.len(), fails));
            s
        }
        Format::Json => {
            let items: Vec<_> = rep.items.iter().map(|(n, st)| json!({"name": n, "status": status_text(st)})).collect();
            serde_json::to_string_pretty(&json!({"suite": suite, "passed": rep.passed(), "items": items})).unwrap()
        }
        Format::Csv => {
            let mut s = String::from("name,status");
            for (n, st) in &rep.items {
                s.push_str(&format!("\n{},{}", csv_field(n), csv_field(&status_text(st))));
            }
            s
        }
    }
}

// a closed pipe (`| head`) is not an error
fn out(s: &str) {
    let _ = writeln!(std::io::stdout(), "{}", s);
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let o = &cli.opts;
    if o.n < 2 {
        return Err(Error::PreconditionViolated("--n must be at least 2".into()));
    }
    if o.r < 1 {
        return Err(Error::PreconditionViolated("--r must be at least 1".into()));
    }
    if let Some(c) = o.cap {
        if !(1..=6).contains(&c) {
            return Err(Error::PreconditionViolated(format!("--cap must be between 1 and 6, got {}", c)));
        }
        hall::set_desk_cap(c);
    }
    if let Some(p) = &o.primes {
        if p.len() < 2 {
            return Err(Error::PreconditionViolated("--primes needs at least two primes".into()));
        }
        hall::set_sample_primes(Some(p.clone()));
    }
    match &cli.cmd {
        Cmd::Mult { x, y } => out(&mult(o, x, y)?),
        Cmd::Hallpoly { c, a, b } => out(&hallpoly(o, c, a, b)?),
        Cmd::Verify { suite } => {
            let cfg = SuiteConfig { n: o.n, r: o.r, bandwidth: o.bandwidth, max: o.max, samples: o.samples, seed: o.seed };
            let rep = suites::run_suite(suite, &cfg)?;
            out(&report_text(suite, &rep, o.format));
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
