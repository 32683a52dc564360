//! The `entire` binary: an exact arithmetic calculator for `Z`, `Z[i]`,
//! `Z[j]`, and prime cyclotomic rings.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use entire::arith::{divides, factor, gcd_bezout, lcm};
use entire::axioms::{run_suite, suite_passes, SuiteConfig};
use entire::cyclo::{basis_indices, family_rank, freeness_check, real_roots, RootIndex};
use entire::ideals::{quotient_kind, residues, PrincipalIdeal, Residue};
use entire::liealg::{check_star_antisymmetry, degeneracy_report, shift_constants, ShiftVector, StructureConstants};
use entire::star::unit_group;
use entire::{Element, Ring};

use entire_cli::eval::{eval as eval_expr, parse_ring};
use entire_cli::expr::parse;
use entire_cli::lie_io;
use entire_cli::output::{Failure, Report};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "entire",
    version,
    about = "Exact arithmetic in Z, Z[i], Z[j], and prime cyclotomic rings",
    after_help = "Expressions use integers, the symbols i / j / zeta(n,k), +, -, *, ^, and juxtaposition (3i). Division does not exist; see inverse-mod and unitpart."
)]
struct Cli {
    /// Ring to work in: z, gaussian, eisenstein, or cyclo<p> (prime p >= 5)
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Read expressions one per line from standard input
    #[arg(long, global = true)]
    stdin: bool,

    /// Residue enumeration bound on norm_sq(z)
    #[arg(long, global = true, default_value_t = 10_000)]
    bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to a canonical element
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Exact norm square and float magnitude
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Conjugate of an element
    Conj {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Unit part as the exact pair (numerator, norm square)
    Unitpart {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Doubled real part x + conj(x) and the float real part
    Re {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Doubled imaginary part x - conj(x) and the float imaginary part
    Im {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Does the first element divide the second? Prints the witness
    Divides {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Greatest common divisor with a Bezout certificate
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical least common multiple
    Lcm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Factor into canonical irreducibles
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// List the unit group
    Units,
    /// Sum of principal ideals (gcd of generators)
    IdealSum {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Intersection of principal ideals (lcm of generators)
    IdealIntersect {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Product of principal ideals
    IdealProduct {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Classify the quotient by a principal ideal
    Quotient {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Enumerate the residue classes modulo an element
    Residues {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Invert an element modulo another
    InverseMod {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        modulus: String,
    },
    /// Multiplication/star/basis tables of the n-th roots of unity
    CycloTable { n: u32 },
    /// Exact linear-independence audit of the root generating family
    CycloFree { n: u32 },
    /// Shift Lie structure constants by e'_i = e_i - v_i e_0
    LieShift {
        /// JSON file with the n^3 array `c[i][j][k]`
        #[arg(long)]
        constants: PathBuf,
        /// JSON file with the length-n shift vector (default: zero)
        #[arg(long)]
        shift: Option<PathBuf>,
    },
    /// Check star-antisymmetry and magnitude degeneracy of constants
    LieCheck {
        #[arg(long)]
        constants: PathBuf,
        #[arg(long)]
        shift: Option<PathBuf>,
    },
    /// Run the seeded property suite against the chosen ring
    Axioms {
        /// Random samples per property
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

/// Writes a line to stdout; a broken pipe (e.g. piping into `head`) ends
/// the program quietly instead of panicking.
fn emit(line: &str) -> bool {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}") {
        Ok(()) => true,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => false,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: cannot write output: {e}");
            false
        }
    }
}

fn run(cli: Cli) -> i32 {
    let format = cli.format;
    match dispatch(&cli) {
        Ok(reports) => {
            for report in &reports {
                let line = match format {
                    Format::Text => report.text.clone(),
                    Format::Json => report.json.to_string(),
                };
                if !emit(&line) {
                    return 0;
                }
            }
            // the axioms command signals property failures via exit code
            if let Command::Axioms { .. } = cli.command {
                let failed = reports
                    .iter()
                    .any(|r| r.json.get("all_pass") == Some(&Value::Bool(false)));
                if failed {
                    return 1;
                }
            }
            0
        }
        Err(failure) => {
            use std::io::Write;
            let rendered = match format {
                Format::Text => failure.to_text(),
                Format::Json => failure.to_json().to_string(),
            };
            let _ = writeln!(std::io::stderr(), "{rendered}");
            failure.exit
        }
    }
}

fn require_ring(cli: &Cli) -> Result<Ring, Failure> {
    match &cli.ring {
        Some(name) => parse_ring(name),
        None => Err(Failure::usage("this command needs --ring (z, gaussian, eisenstein, cyclo<p>)")),
    }
}

/// The expression inputs for a single-expression command: the positional
/// argument, or each line of standard input under `--stdin`.
fn expression_inputs(cli: &Cli, arg: &Option<String>) -> Result<Vec<String>, Failure> {
    if cli.stdin {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        Ok(buffer.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
    } else {
        match arg {
            Some(text) => Ok(vec![text.clone()]),
            None => Err(Failure::usage("expected an expression argument (or --stdin)")),
        }
    }
}

fn element_of(text: &str, ring: Ring) -> Result<Element, Failure> {
    eval_expr(&parse(text)?, ring)
}

fn dispatch(cli: &Cli) -> Result<Vec<Report>, Failure> {
    match &cli.command {
        Command::Eval { expr } => for_each_input(cli, expr, |x, ring| {
            Ok(Report::new(
                x.to_string(),
                json!({
                    "ring": ring.name(),
                    "coeffs": coeff_strings(&x),
                    "pretty": x.to_string(),
                }),
            ))
        }),
        Command::Norm { expr } => for_each_input(cli, expr, |x, _| {
            let ns = x.norm_sq().map_err(Failure::domain)?;
            let magnitude = x.magnitude_approx();
            Ok(Report::new(
                format!("norm_sq = {ns}, magnitude = {magnitude}"),
                json!({ "norm_sq": ns.to_string(), "magnitude": magnitude }),
            ))
        }),
        Command::Conj { expr } => for_each_input(cli, expr, |x, _| {
            let c = x.conj();
            Ok(Report::new(
                c.to_string(),
                json!({ "coeffs": coeff_strings(&c), "pretty": c.to_string() }),
            ))
        }),
        Command::Unitpart { expr } => for_each_input(cli, expr, |x, _| {
            let up = x.unit_part().map_err(Failure::domain)?;
            let e = up.embedding();
            Ok(Report::new(
                format!(
                    "numerator = {}, norm_sq = {}, embedding = ({}, {})",
                    up.numerator(),
                    up.norm_square(),
                    e.re,
                    e.im
                ),
                json!({
                    "numerator": up.numerator().to_string(),
                    "norm_sq": up.norm_square().to_string(),
                    "embedding": [e.re, e.im],
                }),
            ))
        }),
        Command::Re { expr } => for_each_input(cli, expr, |x, _| {
            let re2 = x.re2();
            Ok(Report::new(
                format!("re2 = {}, re_approx = {}", re2, x.re_approx()),
                json!({ "re2": re2.to_string(), "re_approx": x.re_approx() }),
            ))
        }),
        Command::Im { expr } => for_each_input(cli, expr, |x, _| {
            let im2i = x.im2i();
            Ok(Report::new(
                format!("im2i = {}, im_approx = {}", im2i, x.im_approx()),
                json!({ "im2i": im2i.to_string(), "im_approx": x.im_approx() }),
            ))
        }),
        Command::Divides { a, b } => {
            let ring = require_ring(cli)?;
            let a = element_of(a, ring)?;
            let b = element_of(b, ring)?;
            let witness = divides(&a, &b).map_err(Failure::domain)?;
            let report = match &witness {
                Some(w) => Report::new(
                    format!("yes: ({a}) * ({w}) = {b}"),
                    json!({ "divides": true, "witness": w.to_string() }),
                ),
                None => Report::new("no".to_string(), json!({ "divides": false, "witness": null })),
            };
            Ok(vec![report])
        }
        Command::Gcd { a, b } => {
            let ring = require_ring(cli)?;
            let a = element_of(a, ring)?;
            let b = element_of(b, ring)?;
            let cert = gcd_bezout(&a, &b).map_err(Failure::domain)?;
            Ok(vec![Report::new(
                format!("gcd = {}, x = {}, y = {}", cert.g, cert.x, cert.y),
                json!({
                    "gcd": cert.g.to_string(),
                    "x": cert.x.to_string(),
                    "y": cert.y.to_string(),
                }),
            )])
        }
        Command::Lcm { a, b } => {
            let ring = require_ring(cli)?;
            let a = element_of(a, ring)?;
            let b = element_of(b, ring)?;
            let l = lcm(&a, &b).map_err(Failure::domain)?;
            Ok(vec![Report::new(l.to_string(), json!({ "lcm": l.to_string() }))])
        }
        Command::Factor { expr } => for_each_input(cli, expr, |x, _| {
            let f = factor(&x).map_err(Failure::domain)?;
            let text_factors: Vec<String> =
                f.factors.iter().map(|(p, e)| format!("({p})^{e}")).collect();
            let json_factors: Vec<Value> =
                f.factors.iter().map(|(p, e)| json!([p.to_string(), e])).collect();
            Ok(Report::new(
                format!("unit = {}, factors = {}", f.unit, text_factors.join(" * ")),
                json!({ "unit": f.unit.to_string(), "factors": json_factors }),
            ))
        }),
        Command::Units => {
            let ring = require_ring(cli)?;
            let units = unit_group(ring).map_err(Failure::domain)?;
            let strings: Vec<String> = units.iter().map(|u| u.to_string()).collect();
            Ok(vec![Report::new(strings.join(", "), json!({ "units": strings }))])
        }
        Command::IdealSum { a, b } => ideal_binop(cli, a, b, |x, y| x.sum(y)),
        Command::IdealIntersect { a, b } => ideal_binop(cli, a, b, |x, y| x.intersect(y)),
        Command::IdealProduct { a, b } => ideal_binop(cli, a, b, |x, y| x.product(y)),
        Command::Quotient { expr } => for_each_input(cli, expr, |z, _| {
            let kind = quotient_kind(&z).map_err(Failure::domain)?;
            Ok(Report::new(kind.code().to_string(), json!({ "kind": kind.code() })))
        }),
        Command::Residues { expr } => {
            let bound = cli.bound;
            for_each_input(cli, expr, move |z, _| {
                let classes = residues(&z, bound).map_err(Failure::domain)?;
                let reps: Vec<String> =
                    classes.iter().map(|r| r.representative().to_string()).collect();
                Ok(Report::new(
                    format!("{} residues mod {}: {}", reps.len(), z, reps.join(", ")),
                    json!({ "count": reps.len(), "residues": reps }),
                ))
            })
        }
        Command::InverseMod { x, modulus } => {
            let ring = require_ring(cli)?;
            let x = element_of(x, ring)?;
            let modulus = element_of(modulus, ring)?;
            let ideal = PrincipalIdeal::new(&modulus).map_err(Failure::domain)?;
            let class = Residue::new(&x, &ideal).map_err(Failure::domain)?;
            let inverse = class.inverse().map_err(Failure::domain)?;
            Ok(vec![Report::new(
                inverse.representative().to_string(),
                json!({ "inverse": inverse.representative().to_string() }),
            )])
        }
        Command::CycloTable { n } => {
            let n = *n;
            if n == 0 {
                return Err(Failure::usage("group order must be positive"));
            }
            let mul_table: Vec<Vec<u32>> = (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| {
                            RootIndex::new(n, a as i64)
                                .mul(&RootIndex::new(n, b as i64))
                                .expect("same order")
                                .index()
                        })
                        .collect()
                })
                .collect();
            let star: Vec<u32> = (0..n).map(|k| RootIndex::new(n, k as i64).star().index()).collect();
            let reals: Vec<u32> = real_roots(n).iter().map(|r| r.index()).collect();
            let basis: Vec<u32> = basis_indices(n).iter().map(|r| r.index()).collect();
            let mut text = format!("U_{n}: star = {star:?}, real = {reals:?}, basis = {basis:?}");
            for (k, row) in mul_table.iter().enumerate() {
                text.push_str(&format!("\nrow {k}: {row:?}"));
            }
            Ok(vec![Report::new(
                text,
                json!({
                    "n": n,
                    "mul_table": mul_table,
                    "star": star,
                    "real_roots": reals,
                    "basis_indices": basis,
                }),
            )])
        }
        Command::CycloFree { n } => {
            let free = freeness_check(*n).map_err(Failure::domain)?;
            let rank = family_rank(*n).map_err(Failure::domain)?;
            let family = basis_indices(*n).len();
            Ok(vec![Report::new(
                format!("n = {n}: family size {family}, rank {rank}, free = {free}"),
                json!({ "n": n, "family_size": family, "rank": rank, "free": free }),
            )])
        }
        Command::LieShift { constants, shift } => {
            let ring = require_ring(cli)?;
            let c = load_constants(constants, ring)?;
            let v = load_shift(shift.as_deref(), ring, c.dim())?;
            let d = shift_constants(&c, &v).map_err(Failure::domain)?;
            let cube = constants_to_json(&d);
            let doc = json!({ "n": d.dim(), "ring": ring.name(), "constants": cube });
            Ok(vec![Report::new(serde_json::to_string_pretty(&doc).expect("serializable"), doc)])
        }
        Command::LieCheck { constants, shift } => {
            let ring = require_ring(cli)?;
            let c = load_constants(constants, ring)?;
            let v = load_shift(shift.as_deref(), ring, c.dim())?;
            let report = degeneracy_report(&c, &v).map_err(Failure::domain)?;
            let star_ok = check_star_antisymmetry(&c);
            let doc = json!({
                "real_entries": c.is_conj_fixed(),
                "antisymmetric": c.is_lower_antisymmetric(),
                "star_antisymmetric": star_ok,
                "well_defined": report.well_defined,
                "degenerate_witnesses": report.degenerate_witnesses,
                "offending": report.offending,
            });
            Ok(vec![Report::new(
                format!(
                    "star_antisymmetric = {}, well_defined = {}, witnesses = {:?}, offending = {:?}",
                    star_ok, report.well_defined, report.degenerate_witnesses, report.offending
                ),
                doc,
            )])
        }
        Command::Axioms { samples, seed } => {
            let ring = require_ring(cli)?;
            if *samples == 0 {
                return Err(Failure::usage("--samples must be at least 1"));
            }
            let outcomes = run_suite(ring, &SuiteConfig { samples: *samples, seed: *seed });
            let mut text = String::new();
            for o in &outcomes {
                if o.pass {
                    text.push_str(&format!("PASS {} ({} cases)\n", o.name, o.cases));
                } else {
                    text.push_str(&format!(
                        "FAIL {} ({} cases): counterexample {}\n",
                        o.name,
                        o.cases,
                        o.counterexample.as_deref().unwrap_or("unknown")
                    ));
                }
            }
            let all_pass = suite_passes(&outcomes);
            text.push_str(&format!(
                "{}: {} properties on {} with {} samples (seed {})",
                if all_pass { "all passed" } else { "FAILURES" },
                outcomes.len(),
                ring.name(),
                samples,
                seed
            ));
            let results: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "name": o.name,
                        "pass": o.pass,
                        "cases": o.cases,
                        "counterexample": o.counterexample,
                    })
                })
                .collect();
            Ok(vec![Report::new(
                text,
                json!({
                    "ring": ring.name(),
                    "samples": samples,
                    "seed": seed,
                    "results": results,
                    "all_pass": all_pass,
                }),
            )])
        }
    }
}

fn for_each_input(
    cli: &Cli,
    arg: &Option<String>,
    f: impl Fn(Element, Ring) -> Result<Report, Failure>,
) -> Result<Vec<Report>, Failure> {
    let ring = require_ring(cli)?;
    let inputs = expression_inputs(cli, arg)?;
    inputs.iter().map(|text| f(element_of(text, ring)?, ring)).collect()
}

fn ideal_binop(
    cli: &Cli,
    a: &str,
    b: &str,
    op: impl Fn(&PrincipalIdeal, &PrincipalIdeal) -> entire::Result<PrincipalIdeal>,
) -> Result<Vec<Report>, Failure> {
    let ring = require_ring(cli)?;
    let a = PrincipalIdeal::new(&element_of(a, ring)?).map_err(Failure::domain)?;
    let b = PrincipalIdeal::new(&element_of(b, ring)?).map_err(Failure::domain)?;
    let result = op(&a, &b).map_err(Failure::domain)?;
    Ok(vec![Report::new(
        result.to_string(),
        json!({ "generator": result.generator().to_string() }),
    )])
}

fn coeff_strings(x: &Element) -> Vec<String> {
    x.coeffs().iter().map(|c| c.to_string()).collect()
}

fn constants_to_json(c: &StructureConstants) -> Value {
    let n = c.dim();
    let cube: Vec<Vec<Vec<String>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| c.get(i, j, k).to_string()).collect())
                .collect()
        })
        .collect();
    json!(cube)
}

fn load_json(path: &std::path::Path) -> Result<Value, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("invalid JSON in {}: {e}", path.display())))
}

fn load_constants(path: &std::path::Path, ring: Ring) -> Result<StructureConstants, Failure> {
    lie_io::constants_from_json(&load_json(path)?, ring)
}

fn load_shift(
    path: Option<&std::path::Path>,
    ring: Ring,
    n: usize,
) -> Result<ShiftVector, Failure> {
    match path {
        Some(p) => lie_io::shift_from_json(&load_json(p)?, ring, n),
        None => Ok(ShiftVector::zero(ring, n)),
    }
}
