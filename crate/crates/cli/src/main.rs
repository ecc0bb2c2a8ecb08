//! `partperm`: class products, structure constants, fillings, character
//! evaluations and verification suites from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! errors (malformed input or an exceeded size bound).

mod json;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use partperm::characters::{f_eval, p_sharp, s_star};
use partperm::class_algebra::{
    convolve_c_classes, f_constant, g_constant, oracle_convolve, q_polynomial, ClassVector,
    DEFAULT_ORACLE_BOUND,
};
use partperm::fillings::enumerate_f;
use partperm::numbers::format_rational;
use partperm::verify::{self, Suite};
use partperm::{Error, Filling, Partition};
use serde_json::{json, Value};

const G_SCAN_DEFAULT: usize = 5;
const G_SCAN_MAX: usize = 8;
const FILLINGS_DEFAULT: usize = 4;
const FILLINGS_MAX: usize = 5;
const ORACLE_MAX: usize = 8;

#[derive(Parser)]
#[command(
    name = "partperm",
    version,
    about = "Exact computations with partial permutations"
)]
struct Cli {
    /// Print one JSON document instead of plain lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Bound {
    /// Largest factor size to accept; raising it above the default prints a
    /// cost warning.
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args)]
struct Triple {
    #[arg(long)]
    sigma: Partition,
    #[arg(long)]
    tau: Partition,
    #[arg(long)]
    rho: Partition,
    #[command(flatten)]
    bound: Bound,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Basis {
    Classes,
    Scaled,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    match s {
        "A" => Ok(Basis::Classes),
        "a" => Ok(Basis::Scaled),
        _ => Err(format!("unknown basis {s:?}, expected A or a")),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {s:?}, expected one of {}", names.join(", "))
    })
}

#[derive(Subcommand)]
enum Command {
    /// Product of two basis elements, optionally truncated to level n.
    Mult {
        /// `A` for class sums, `a` for the rescaled basis.
        #[arg(long, value_parser = parse_basis, default_value = "A")]
        basis: Basis,
        #[arg(long)]
        lhs: Partition,
        #[arg(long)]
        rhs: Partition,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        bound: Bound,
    },
    /// Structure constant g in the class-sum basis.
    Gconst(Triple),
    /// Structure constant f in the rescaled basis.
    Fconst(Triple),
    /// Coefficient of C_rho in C_sigma C_tau as a polynomial in n.
    Qpoly(Triple),
    /// Product of proper class sums in the centre of the group algebra of S_n.
    CsnMult {
        #[arg(long)]
        sigma: Partition,
        #[arg(long)]
        tau: Partition,
        #[arg(long)]
        n: usize,
        /// Cross-check against brute-force multiplication in the group algebra.
        #[arg(long)]
        oracle: bool,
        /// Largest n for the brute-force check.
        #[arg(long)]
        oracle_bound: Option<usize>,
        #[command(flatten)]
        bound: Bound,
    },
    /// Convolution of two fillings, rows separated by `;`.
    FillingsConv {
        #[arg(long)]
        left: Filling,
        #[arg(long)]
        right: Filling,
    },
    /// Number of filling pairs convolving to the canonical filling of rho,
    /// compared with f.
    FillingsCount(Triple),
    /// Shifted power sum p#_rho at lambda.
    Peval {
        #[arg(long)]
        rho: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Shifted Schur function s*_mu at lambda.
    Sstar {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Evaluation of A_sigma, and of A_sigma A_tau when tau is given, at lambda.
    Feval {
        #[arg(long)]
        sigma: Partition,
        #[arg(long)]
        tau: Option<Partition>,
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        bound: Bound,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_size: Option<usize>,
    },
}

struct Output {
    lines: Vec<String>,
    doc: Value,
    passed: bool,
}

fn limit(given: Option<usize>, default: usize, max: usize) -> Result<usize, Error> {
    match given {
        Some(v) if v > max => Err(Error::BoundExceeded {
            what: "--max-size",
            value: v,
            max,
        }),
        Some(v) if v > default => {
            eprintln!("warning: size bound {v} exceeds the default {default}; this may take a long time");
            Ok(v)
        }
        Some(v) => Ok(v),
        None => Ok(default),
    }
}

fn check_factors(factors: &[&Partition], bound: &Bound, default: usize, max: usize) -> Result<(), Error> {
    let limit = limit(bound.max_size, default, max)?;
    for p in factors {
        if p.size() > limit {
            return Err(Error::BoundExceeded {
                what: "factor size",
                value: p.size(),
                max: limit,
            });
        }
    }
    Ok(())
}

fn class_label(basis: &str, p: &Partition) -> String {
    format!("{basis}{p:?}")
}

fn term_lines(basis: &str, terms: &[(Partition, BigRational)]) -> Vec<String> {
    terms
        .iter()
        .map(|(p, c)| format!("{} {}", format_rational(c), class_label(basis, p)))
        .collect()
}

fn run(command: Command) -> Result<Output, Error> {
    let out = match command {
        Command::Mult {
            basis,
            lhs,
            rhs,
            n,
            bound,
        } => {
            check_factors(&[&lhs, &rhs], &bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let (name, terms) = match basis {
                Basis::Classes => {
                    let product =
                        ClassVector::basis(lhs.clone()).multiply(&ClassVector::basis(rhs.clone()), n);
                    let terms: Vec<_> = product.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
                    ("A", terms)
                }
                Basis::Scaled => {
                    let product =
                        ClassVector::a_basis(lhs.clone()).multiply(&ClassVector::a_basis(rhs.clone()), n);
                    ("a", product.a_terms())
                }
            };
            let inputs = json!({
                "basis": name,
                "lhs": json::partition(&lhs),
                "rhs": json::partition(&rhs),
                "n": n,
            });
            Output {
                lines: term_lines(name, &terms),
                doc: json::document(
                    "mult",
                    inputs,
                    json::terms(terms.iter().map(|(p, c)| (p, c))),
                    None,
                ),
                passed: true,
            }
        }
        Command::Gconst(t) => {
            check_factors(&[&t.sigma, &t.tau], &t.bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let g = g_constant(&t.sigma, &t.tau, &t.rho);
            Output {
                lines: vec![g.to_string()],
                doc: json::document("gconst", triple_inputs(&t), json!({ "g": g }), None),
                passed: true,
            }
        }
        Command::Fconst(t) => {
            check_factors(&[&t.sigma, &t.tau], &t.bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let f = f_constant(&t.sigma, &t.tau, &t.rho)?;
            Output {
                lines: vec![f.to_string()],
                doc: json::document(
                    "fconst",
                    triple_inputs(&t),
                    json!({ "f": json::integer(&f.into()) }),
                    None,
                ),
                passed: true,
            }
        }
        Command::Qpoly(t) => {
            check_factors(&[&t.sigma, &t.tau], &t.bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let q = q_polynomial(&t.sigma, &t.tau, &t.rho)?;
            let binomial: Vec<Value> = q.coeffs().iter().map(json::integer).collect();
            let monomial: Vec<Value> = q.monomial_coeffs().iter().map(json::rational).collect();
            let results = json!({
                "binomial": binomial,
                "monomial": monomial,
                "text": q.monomial_string(),
            });
            Output {
                lines: vec![q.to_string(), q.monomial_string()],
                doc: json::document("qpoly", triple_inputs(&t), results, None),
                passed: true,
            }
        }
        Command::CsnMult {
            sigma,
            tau,
            n,
            oracle,
            oracle_bound,
            bound,
        } => {
            check_factors(&[&sigma, &tau], &bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let product = convolve_c_classes(&sigma, &tau, n)?;
            let terms: Vec<_> = product.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
            let mut lines = term_lines("C", &terms);
            let mut violations = None;
            let mut passed = true;
            if oracle {
                let bound = match oracle_bound {
                    Some(b) if b > ORACLE_MAX => {
                        return Err(Error::BoundExceeded {
                            what: "--oracle-bound",
                            value: b,
                            max: ORACLE_MAX,
                        })
                    }
                    Some(b) => {
                        if b > DEFAULT_ORACLE_BOUND {
                            eprintln!(
                                "warning: oracle bound {b} exceeds the default {DEFAULT_ORACLE_BOUND}; this may take a long time"
                            );
                        }
                        b
                    }
                    None => DEFAULT_ORACLE_BOUND,
                };
                let brute = oracle_convolve(&sigma, &tau, n, bound)?;
                let mut diffs = Vec::new();
                for (full, c) in brute.terms() {
                    let proper = full.strip_ones();
                    if product.coefficient(&proper) != *c {
                        diffs.push((proper, c.clone()));
                    }
                }
                passed = diffs.is_empty() && brute.len() == product.len();
                lines.push(if passed {
                    "oracle agrees".into()
                } else {
                    "oracle DISAGREES".into()
                });
                violations = Some(json::terms(diffs.iter().map(|(p, c)| (p, c))));
            }
            let inputs = json!({
                "sigma": json::partition(&sigma),
                "tau": json::partition(&tau),
                "n": n,
                "oracle": oracle,
            });
            Output {
                lines,
                doc: json::document(
                    "csn-mult",
                    inputs,
                    json::terms(terms.iter().map(|(p, c)| (p, c))),
                    violations,
                ),
                passed,
            }
        }
        Command::FillingsConv { left, right } => {
            let product = left.convolve(&right);
            let inputs = json!({ "left": left.rows(), "right": right.rows() });
            let results = json!({
                "filling": product.rows(),
                "shape": json::partition(&product.shape()),
            });
            Output {
                lines: vec![product.to_string()],
                doc: json::document("fillings-conv", inputs, results, None),
                passed: true,
            }
        }
        Command::FillingsCount(t) => {
            check_factors(&[&t.sigma, &t.tau], &t.bound, FILLINGS_DEFAULT, FILLINGS_MAX)?;
            let count = enumerate_f(&t.sigma, &t.tau, &t.rho).len();
            let f = f_constant(&t.sigma, &t.tau, &t.rho)?;
            let passed = f == count.into();
            let violations =
                (!passed).then(|| json!([{ "count": count, "f": json::integer(&f.clone().into()) }]));
            Output {
                lines: vec![format!("fillings {count}"), format!("f {f}")],
                doc: json::document(
                    "fillings-count",
                    triple_inputs(&t),
                    json!({ "count": count, "f": json::integer(&f.into()) }),
                    violations,
                ),
                passed,
            }
        }
        Command::Peval { rho, lambda } => {
            let v = p_sharp(&rho, &lambda);
            let inputs = json!({ "rho": json::partition(&rho), "lambda": json::partition(&lambda) });
            Output {
                lines: vec![format_rational(&v)],
                doc: json::document("peval", inputs, json!({ "value": json::rational(&v) }), None),
                passed: true,
            }
        }
        Command::Sstar { mu, lambda } => {
            let v = s_star(&mu, &lambda);
            let inputs = json!({ "mu": json::partition(&mu), "lambda": json::partition(&lambda) });
            Output {
                lines: vec![format_rational(&v)],
                doc: json::document("sstar", inputs, json!({ "value": json::rational(&v) }), None),
                passed: true,
            }
        }
        Command::Feval {
            sigma,
            tau,
            lambda,
            bound,
        } => {
            let factors: Vec<&Partition> = std::iter::once(&sigma).chain(tau.as_ref()).collect();
            check_factors(&factors, &bound, G_SCAN_DEFAULT, G_SCAN_MAX)?;
            let left = f_eval(&ClassVector::basis(sigma.clone()), &lambda);
            let mut lines = vec![format!("{} {}", class_label("A", &sigma), format_rational(&left))];
            let mut results = json!({ "sigma": json::rational(&left) });
            let mut passed = true;
            let mut violations = None;
            if let Some(tau) = &tau {
                let right = f_eval(&ClassVector::basis(tau.clone()), &lambda);
                let product =
                    ClassVector::basis(sigma.clone()).multiply(&ClassVector::basis(tau.clone()), None);
                let joint = f_eval(&product, &lambda);
                passed = joint == &left * &right;
                lines.push(format!("{} {}", class_label("A", tau), format_rational(&right)));
                lines.push(format!(
                    "{}{} {}",
                    class_label("A", &sigma),
                    class_label("A", tau),
                    format_rational(&joint)
                ));
                results["tau"] = json::rational(&right);
                results["product"] = json::rational(&joint);
                if !passed {
                    lines.push("evaluation is NOT multiplicative here".into());
                    violations = Some(
                        json!([{ "product": json::rational(&joint), "expected": json::rational(&(&left * &right)) }]),
                    );
                }
            }
            let inputs = json!({
                "sigma": json::partition(&sigma),
                "tau": tau.as_ref().map(json::partition),
                "lambda": json::partition(&lambda),
            });
            Output {
                lines,
                doc: json::document("feval", inputs, results, violations),
                passed,
            }
        }
        Command::Verify { suite, max_size } => {
            if let (Some(s), Some(default)) = (max_size, suite.default_size()) {
                if s > default && suite.max_size().is_some_and(|m| s <= m) {
                    eprintln!("warning: size {s} exceeds the default {default}; this may take a long time");
                }
            }
            let report = verify::run(suite, max_size)?;
            let check = |c: &verify::Check| json!({ "name": c.name, "passed": c.passed, "detail": c.detail });
            let inputs = json!({ "suite": suite.name(), "size": report.size });
            let results: Vec<Value> = report.checks.iter().map(check).collect();
            let violations: Vec<Value> = report.failures().map(check).collect();
            Output {
                lines: report.to_string().lines().map(String::from).collect(),
                doc: json::document(
                    "verify",
                    inputs,
                    Value::Array(results),
                    Some(Value::Array(violations)),
                ),
                passed: report.passed(),
            }
        }
    };
    Ok(out)
}

fn triple_inputs(t: &Triple) -> Value {
    json!({
        "sigma": json::partition(&t.sigma),
        "tau": json::partition(&t.tau),
        "rho": json::partition(&t.rho),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.doc).expect("serializable")
                );
            } else {
                for line in &out.lines {
                    println!("{line}");
                }
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
