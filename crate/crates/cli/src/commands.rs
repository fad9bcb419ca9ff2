use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use spinh_core::clifford::{classify, classify_indefinite, Field, Variant};
use spinh_core::groups::CoefficientRing;
use spinh_core::ktheory::{
    dual_group, epsilon, k_table, zk_index, KTheoryError, Theory, ZkIndexInput,
    DEFAULT_DUALITY_BOUND,
};
use spinh_core::modules::{fundamental_dimension, ngroup, ngroup_bigraded, BigradedIndex};
use spinh_core::series::{
    genus_4manifold, genus_4manifold_series, hp_pairing_matrix, HpMethod, Orientation,
    DEFAULT_TRUNCATION_DEGREE,
};
use spinh_core::steenrod::{sq, verify_bspinh, wu_classes, F2Polynomial, DEFAULT_DEGREE_CAP};
use spinh_core::{AbGroupExpr, Execution, FGAbelianGroup, Rational, Summand};

use crate::output::{Format, Output};

#[derive(Debug, Parser)]
#[command(name = "spinh", version, about = "Exact computations for Clifford algebras, spin^h characteristic classes and K-theory tables")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Override the series truncation degree or the Steenrod degree cap.
    #[arg(long, global = true)]
    pub trunc: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrix-algebra type of Cl_n, CCl_n, Cl^h_n or CCl^h_n (or Cl_{r,s}).
    Classify {
        #[arg(long, required_unless_present = "r")]
        n: Option<u32>,
        #[arg(long, default_value = "Cl")]
        variant: Variant,
        /// Indefinite signature: generators squaring to -1.
        #[arg(long, requires = "s", conflicts_with = "n")]
        r: Option<u32>,
        /// Indefinite signature: generators squaring to +1.
        #[arg(long, requires = "r")]
        s: Option<u32>,
    },
    /// Real dimension of the fundamental graded module over Cl_n.
    Dims {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        field: Field,
    },
    /// Grothendieck group of graded modules modulo restrictions.
    Ngroup {
        #[arg(long, required_unless_present = "r")]
        n: Option<u32>,
        #[arg(long)]
        field: Field,
        #[arg(long, requires = "s", conflicts_with = "n")]
        r: Option<u32>,
        #[arg(long, requires = "r")]
        s: Option<u32>,
    },
    /// The spin^h genus of a 4-manifold with an oriented auxiliary bundle.
    Genus {
        #[arg(long = "sig", allow_hyphen_values = true)]
        signature: i64,
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        #[arg(long, allow_hyphen_values = true)]
        orientation: Orientation,
    },
    /// Pairing matrix of the bundles xi_i against HP^j (rows i, columns j).
    HpTable {
        #[arg(long)]
        max_i: u32,
        #[arg(long)]
        max_j: u32,
        #[arg(long, value_enum, default_value_t = Method::Binomial)]
        method: Method,
        #[arg(long)]
        sequential: bool,
    },
    /// Mod-2 characteristic class computations.
    Steenrod {
        #[command(subcommand)]
        command: SteenrodCommand,
    },
    /// KO/KU/KSp coefficient groups with coefficients.
    Ktable {
        #[arg(long)]
        theory: Theory,
        #[arg(long, default_value = "Z")]
        coeff: CoefficientRing,
        /// `a..b` (end excluded) or `a..=b`.
        #[arg(long, default_value = "0..8", value_parser = parse_range, allow_hyphen_values = true)]
        range: RangeInclusive<i64>,
    },
    /// The mod-k index ((integral - eta)/epsilon) mod k.
    ZkIndex {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        integral: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        eta: Rational,
    },
    /// Double dual of a finitely generated abelian group, verified by enumeration.
    Dual {
        /// Group in the compact grammar, e.g. `Z+Z6` or `Z2+Z4`.
        #[arg(long)]
        group: AbGroupExpr,
    },
}

#[derive(Debug, Subcommand)]
pub enum SteenrodCommand {
    /// Sq^k of a polynomial in w_i, w_i' and Wu classes v_i.
    Sq {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        poly: String,
    },
    /// Wu classes of an oriented bundle.
    Wu {
        #[arg(long)]
        max_degree: u32,
    },
    /// Checks the presentation of H^*(BSpin^h; Z2).
    VerifyBspinh {
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Binomial,
    Residue,
    Chebyshev,
}

impl From<Method> for HpMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Binomial => HpMethod::Binomial,
            Method::Residue => HpMethod::Residue,
            Method::Chebyshev => HpMethod::Chebyshev,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] spinh_core::Error),
    #[error("{what} {value} exceeds the cap {cap} (raise it with --trunc)")]
    Cap { what: &'static str, value: u32, cap: u32 },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => e.category(),
            CliError::Cap { .. } => "cap",
            CliError::Verification(_) => "verification",
        }
    }
}

fn domain(e: impl Into<spinh_core::Error>) -> CliError {
    CliError::Domain(e.into())
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected a..b or a..=b, got '{s}'");
    let (a, b, inclusive) = if let Some((a, b)) = s.split_once("..=") {
        (a, b, true)
    } else {
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        (a, b, false)
    };
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    let end = if inclusive { b } else { b - 1 };
    if end < a {
        return Err(format!("empty range '{s}'"));
    }
    if end - a > 10_000 {
        return Err(format!("range '{s}' is too long"));
    }
    Ok(a..=end)
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| format!("not a rational number: '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse(b)?;
            if den == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            Ok(Rational::new(parse(a)?, den))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn fg_group(expr: &AbGroupExpr) -> Result<FGAbelianGroup, CliError> {
    let mut rank = 0;
    let mut torsion = Vec::new();
    for s in expr.summands() {
        match s {
            Summand::Z => rank += 1,
            Summand::Cyclic(m) => torsion.push(*m),
            other => return Err(CliError::Usage(format!("{other} is not finitely generated"))),
        }
    }
    Ok(FGAbelianGroup::new(rank, torsion))
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let out = match &cli.command {
        Command::Classify { n, variant, r, s } => {
            let (desc, label) = match (n, r, s) {
                (Some(n), _, _) => (classify(*n, *variant), format!("{variant}_{n}")),
                (None, Some(r), Some(s)) => {
                    let quaternionic = match variant {
                        Variant::Cl => false,
                        Variant::Clh => true,
                        other => {
                            return Err(CliError::Usage(format!(
                                "indefinite signatures support Cl and Clh, not {other}"
                            )))
                        }
                    };
                    (classify_indefinite(*r, *s, quaternionic), format!("{variant}_{{{r},{s}}}"))
                }
                _ => return Err(CliError::Usage("give --n or both --r and --s".into())),
            };
            Output::new(desc.to_string(), json!({ "algebra": label, "descriptor": desc, "display": desc.to_string() }))
                .table(
                    vec!["algebra", "field", "size", "simple", "display"],
                    vec![vec![label, desc.field.to_string(), desc.size.to_string(), desc.simple.to_string(), desc.to_string()]],
                )
        }
        Command::Dims { n, field } => {
            let d = fundamental_dimension(*n, *field).map_err(domain)?;
            Output::new(d.to_string(), json!({ "n": n, "field": field, "real_dimension": d }))
                .table(vec!["n", "field", "real_dimension"], vec![vec![n.to_string(), field.to_string(), d.to_string()]])
        }
        Command::Ngroup { n, field, r, s } => {
            let (group, index) = match (n, r, s) {
                (Some(n), _, _) => (ngroup(*n, *field), n.to_string()),
                (None, Some(r), Some(s)) => (
                    ngroup_bigraded(BigradedIndex { r: *r, s: *s, field: *field }).map_err(domain)?,
                    format!("{r},{s}"),
                ),
                _ => return Err(CliError::Usage("give --n or both --r and --s".into())),
            };
            Output::new(group.to_string(), json!({ "index": index, "field": field, "group": group }))
                .table(vec!["index", "field", "group"], vec![vec![index, field.to_string(), group.to_string()]])
        }
        Command::Genus { signature, euler, orientation } => {
            let closed = genus_4manifold(*signature, *euler, *orientation);
            let series = genus_4manifold_series(*signature, *euler, *orientation);
            if closed != series {
                return Err(CliError::Verification(format!("closed form {closed} != series {series}")));
            }
            let o = match orientation {
                Orientation::Plus => "+",
                Orientation::Minus => "-",
            };
            Output::new(closed.to_string(), json!({
                "signature": signature, "euler": euler, "orientation": o, "genus": closed.to_string(),
            }))
            .table(
                vec!["signature", "euler", "orientation", "genus"],
                vec![vec![signature.to_string(), euler.to_string(), o.into(), closed.to_string()]],
            )
        }
        Command::HpTable { max_i, max_j, method, sequential } => {
            let cap = cli.trunc.unwrap_or(DEFAULT_TRUNCATION_DEGREE);
            if 2 * max_j > cap {
                return Err(CliError::Cap { what: "series degree 2*max_j =", value: 2 * max_j, cap });
            }
            let m = hp_pairing_matrix(*max_i, *max_j, (*method).into(), exec(*sequential)).map_err(domain)?;
            let text = m
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            let matrix: Vec<Vec<Value>> = m.iter().map(|row| row.iter().map(bigint_json).collect()).collect();
            let method_name = format!("{method:?}").to_lowercase();
            let rows = m
                .iter()
                .enumerate()
                .map(|(i, row)| std::iter::once(i.to_string()).chain(row.iter().map(ToString::to_string)).collect())
                .collect();
            let header: Vec<String> = std::iter::once("i\\j".to_string()).chain((0..=*max_j).map(|j| j.to_string())).collect();
            Output::new(text, json!({
                "rows": "i", "columns": "j", "max_i": max_i, "max_j": max_j, "method": method_name, "matrix": matrix,
            }))
            .table(header, rows)
        }
        Command::Steenrod { command } => steenrod(command, cli.trunc.unwrap_or(DEFAULT_DEGREE_CAP))?,
        Command::Ktable { theory, coeff, range } => {
            let rows = k_table(*theory, *coeff, range.clone(), Execution::Sequential);
            let text = rows.iter().map(|(n, g)| format!("{n}\t{g}")).collect::<Vec<_>>().join("\n");
            let json_rows: Vec<Value> = rows.iter().map(|(n, g)| json!({ "n": n, "group": g })).collect();
            Output::new(text, json!({ "theory": theory, "coefficients": coeff.to_string(), "rows": json_rows }))
                .table(vec!["n", "group"], rows.iter().map(|(n, g)| vec![n.to_string(), g.to_string()]).collect())
        }
        Command::ZkIndex { n, k, integral, eta } => {
            let input = ZkIndexInput { n: *n, k: *k, integral_term: integral.clone(), eta_term: eta.clone() };
            let value = zk_index(&input).map_err(domain)?;
            let eps = epsilon(*n).map_err(domain)?;
            Output::new(value.to_string(), json!({
                "n": n, "k": k, "epsilon": eps, "integral": integral.to_string(), "eta": eta.to_string(), "index": value,
            }))
            .table(
                vec!["n", "k", "epsilon", "integral", "eta", "index"],
                vec![vec![n.to_string(), k.to_string(), eps.to_string(), integral.to_string(), eta.to_string(), value.to_string()]],
            )
        }
        Command::Dual { group } => {
            let g = fg_group(group)?;
            let report = dual_group(&g, DEFAULT_DUALITY_BOUND).map_err(|e: KTheoryError| domain(e))?;
            if !report.verified() {
                return Err(CliError::Verification(format!("duality check failed for {g}")));
            }
            let dd = report.double_dual.to_string();
            Output::new(
                format!("{dd}\t(verified: {} of {} candidate maps are homomorphisms)", report.valid, report.candidates),
                json!({ "group": g.to_string(), "double_dual": dd, "verified": true, "report": report }),
            )
            .table(
                vec!["group", "double_dual", "candidates", "valid", "verified"],
                vec![vec![g.to_string(), dd, report.candidates.to_string(), report.valid.to_string(), "true".into()]],
            )
        }
    };
    Ok(out.render(cli.format))
}

fn steenrod(command: &SteenrodCommand, cap: u32) -> Result<Output, CliError> {
    Ok(match command {
        SteenrodCommand::Sq { k, poly } => {
            let p = F2Polynomial::parse(poly).map_err(domain)?;
            let degree = p.max_degree().unwrap_or(0) + k;
            if degree > cap {
                return Err(CliError::Cap { what: "result degree", value: degree, cap });
            }
            let result = sq(*k, &p);
            Output::new(result.to_string(), json!({
                "k": k, "input": p.to_string(), "result": result.to_string(), "degree": result.degree(),
            }))
            .table(vec!["k", "input", "result"], vec![vec![k.to_string(), p.to_string(), result.to_string()]])
        }
        SteenrodCommand::Wu { max_degree } => {
            if *max_degree > cap {
                return Err(CliError::Cap { what: "degree", value: *max_degree, cap });
            }
            let nu = wu_classes(*max_degree);
            let rows: Vec<Vec<String>> = nu.iter().enumerate().map(|(k, v)| vec![k.to_string(), v.to_string()]).collect();
            let text = rows.iter().map(|r| format!("v{} = {}", r[0], r[1])).collect::<Vec<_>>().join("\n");
            let classes: Vec<Value> = rows.iter().map(|r| json!({ "k": r[0].parse::<u32>().unwrap_or(0), "class": r[1] })).collect();
            Output::new(text, json!({ "max_degree": max_degree, "classes": classes })).table(vec!["k", "class"], rows)
        }
        SteenrodCommand::VerifyBspinh { max_degree, sequential } => {
            if *max_degree + 1 > cap {
                return Err(CliError::Cap { what: "degree + 1", value: max_degree + 1, cap });
            }
            let report = verify_bspinh(*max_degree, exec(*sequential)).map_err(domain)?;
            let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            let certified = match report.w9_relation_certified {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "out of range",
            };
            let text = [
                format!("quotient series      {}", join(&report.quotient.quotient_series)),
                format!("free subalgebra      {}", join(&report.quotient.free_subalgebra_series)),
                format!("Sq1 homology         {}", join(&report.sq1_homology)),
                format!("expected homology    {}", join(&report.expected_sq1_homology)),
                format!("nu4 = {}, Sq1 nu4 = {}", report.nu4, report.sq1_nu4),
                format!("w9 + w2*w7 + w3*w6 certified: {certified}"),
                format!("passed: {}", report.passed()),
            ]
            .join("\n");
            if !report.passed() {
                return Err(CliError::Verification(text));
            }
            let rows = (0..=*max_degree as usize)
                .map(|d| {
                    vec![
                        d.to_string(),
                        report.quotient.quotient_series[d].to_string(),
                        report.quotient.free_subalgebra_series[d].to_string(),
                        report.sq1_homology[d].to_string(),
                        report.expected_sq1_homology[d].to_string(),
                    ]
                })
                .collect();
            Output::new(text, json!({ "passed": report.passed(), "report": report }))
                .table(vec!["degree", "quotient", "free", "sq1_homology", "expected"], rows)
        }
    })
}
