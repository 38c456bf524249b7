//! `approxroot` command-line tool. Results are written to stdout as one line
//! of JSON (or DOT text for `resolve --dot`); errors go to stderr.
//!
//! Exit codes: 0 on success, 1 for usage and syntax errors, 2 when the
//! input is well formed but the computation rejects it.

mod output;

use std::io::Read;
use std::process::ExitCode;

use approxroot::adic::{approx_root_direct, approx_root_iterated_counted, approx_root_meromorphic};
use approxroot::branch::{char_sequence, implicitize, invert_coordinates, truncated_semiroot, CharData};
use approxroot::char_roots::{char_approx_roots, intersection_via_expansion, is_semiroot, semiroot_expand};
use approxroot::embedding::{epimorphism_check, implicit_curve, merom_char_sequence, merom_param_at_infinity, strict_expand, PolyPair};
use approxroot::resolution::{resolve, resolve_with_semiroots, to_dot};
use approxroot::series::intersection_number;
use approxroot::{expr, Error, YPoly};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::*;

#[derive(Parser)]
#[command(name = "approxroot", version, about = "Approximate roots and characteristic data of plane branches")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Iterated,
    Meromorphic,
}

#[derive(Subcommand)]
enum Command {
    /// The p-th approximate root of a polynomial monic in Y.
    ApproxRoot {
        #[arg(long)]
        p: usize,
        /// Polynomial in X, Y; read from stdin when omitted.
        curve: Option<String>,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        /// Starting polynomial for the iterated method (default Y^(n/p)).
        #[arg(long)]
        seed: Option<String>,
    },
    /// Characteristic sequences of a branch, from its equation or from a
    /// parameterization "n; y(T)".
    CharData {
        curve: Option<String>,
        #[arg(long, conflicts_with = "curve")]
        param: Option<String>,
    },
    /// Equation of a parameterized branch or of the image of a polynomial map.
    Implicitize {
        #[arg(long, conflicts_with_all = ["big_p", "big_q"])]
        param: Option<String>,
        #[arg(long = "P", id = "big_p", requires = "big_q")]
        p: Option<String>,
        #[arg(long = "Q", id = "big_q", requires = "big_p")]
        q: Option<String>,
    },
    /// The k-th characteristic approximate root (the k-th truncated
    /// semiroot for --param), or with --test whether a polynomial is a
    /// k-semiroot.
    Semiroot {
        #[arg(long)]
        k: usize,
        curve: Option<String>,
        #[arg(long, conflicts_with = "curve")]
        param: Option<String>,
        #[arg(long)]
        test: Option<String>,
    },
    /// Expansion of PHI in the characteristic approximate roots of a curve,
    /// or in an explicit list of roots.
    Expand {
        phi: String,
        #[arg(long, required_unless_present = "roots")]
        curve: Option<String>,
        #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "curve")]
        roots: Option<Vec<String>>,
    },
    /// Dual graph of the minimal embedded resolution of a branch.
    Resolve {
        #[arg(long)]
        param: String,
        /// Print Graphviz text instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Add arrowheads for the semiroots f_0 .. f_(g-1).
        #[arg(long)]
        semiroots: bool,
    },
    /// Characteristic sequence in coordinates with first exponent B0, from
    /// a branch in generic coordinates.
    Invert {
        #[arg(long)]
        b0: i64,
        #[arg(long, required_unless_present = "b", conflicts_with = "b")]
        param: Option<String>,
        /// Generic sequence, e.g. "2,7".
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        b: Option<Vec<i64>>,
    },
    /// Whether X -> P(T), Y -> Q(T) is onto Q[T], with a straightening chain.
    EpiCheck {
        #[arg(long = "P")]
        p: String,
        #[arg(long = "Q")]
        q: String,
    },
    /// Characteristic data of the branch at infinity of T -> (P, Q).
    MeromChar {
        #[arg(long = "P")]
        p: String,
        #[arg(long = "Q")]
        q: String,
        /// Exponent of tau below which the expansion is computed.
        #[arg(long, default_value_t = 16)]
        prec: i64,
        /// Values to write in the strict generators.
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_hyphen_values = true)]
        expand: Option<Vec<i64>>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::IrrationalLiteral { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn input(arg: Option<String>) -> Result<String, Failure> {
    match arg {
        Some(text) if text != "-" => Ok(text),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(buf.trim().to_string())
        }
    }
}

fn curve(arg: Option<String>) -> Result<YPoly, Failure> {
    Ok(expr::parse_curve(&input(arg)?)?)
}

fn pair(p: &str, q: &str) -> Result<PolyPair, Failure> {
    Ok(PolyPair::new(expr::parse_poly(p, "T")?, expr::parse_poly(q, "T")?))
}

fn json<T: Serialize>(value: &T, pretty: bool) -> Outcome {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    text.map_err(|e| Failure::Domain(e.to_string()))
}

fn run(cli: Cli) -> Outcome {
    let pretty = cli.pretty;
    match cli.command {
        Command::ApproxRoot { p, curve: text, method, seed } => {
            let f = curve(text)?;
            let (root, iterations) = match method {
                Method::Direct => (approx_root_direct(&f, p)?, None),
                Method::Meromorphic => (approx_root_meromorphic(&f, p)?, None),
                Method::Iterated => {
                    let seed = match seed {
                        Some(s) => expr::parse_curve(&s)?,
                        None => YPoly::y_pow(f.degree().unwrap_or(0) / p.max(1)),
                    };
                    let (root, steps) = approx_root_iterated_counted(&f, p, &seed)?;
                    (root, Some(steps))
                }
            };
            json(&RootOut { p, root: root.to_string(), iterations }, pretty)
        }
        Command::CharData { curve: text, param } => match param {
            Some(param) => {
                let p = expr::parse_param(&param)?;
                json(&CharOut::new(&char_sequence(&p)?, None), pretty)
            }
            None => {
                let report = char_approx_roots(&curve(text)?)?;
                json(&CharOut::new(&report.char_data, Some(&report)), pretty)
            }
        },
        Command::Implicitize { param, p, q } => {
            let f = match (param, p, q) {
                (Some(param), _, _) => implicitize(&expr::parse_param(&param)?),
                (None, Some(p), Some(q)) => implicit_curve(&pair(&p, &q)?)?,
                _ => return Err(Failure::Usage("give --param or both --P and --Q".into())),
            };
            json(&CurveOut { curve: f.to_string() }, pretty)
        }
        Command::Semiroot { k, curve: text, param, test } => {
            let param = param.map(|p| expr::parse_param(&p)).transpose()?;
            let f = match &param {
                Some(p) => implicitize(p),
                None => curve(text)?,
            };
            match test {
                Some(q) => {
                    let q = expr::parse_curve(&q)?;
                    let semiroot = is_semiroot(&f, &q, k)?;
                    let intersection = ext(intersection_number(&f, &q));
                    json(&SemirootTestOut { k, semiroot, intersection }, pretty)
                }
                None if param.is_some() => {
                    let q = truncated_semiroot(param.as_ref().unwrap(), k)?;
                    json(&SemirootOut { k, intersection: ext(intersection_number(&f, &q)), semiroot: q.to_string() }, pretty)
                }
                None => {
                    let report = char_approx_roots(&f)?;
                    let max = report.char_data.genus;
                    let root = report.roots.get(k).ok_or(Error::IndexOutOfRange { index: k, max })?;
                    json(&SemirootOut { k, semiroot: root.to_string(), intersection: ext(report.intersections[k]) }, pretty)
                }
            }
        }
        Command::Expand { phi, curve: text, roots } => {
            let phi = expr::parse_curve(&phi)?;
            let (roots, intersection) = match roots {
                Some(list) => (list.iter().map(|r| expr::parse_curve(r)).collect::<Result<Vec<_>, _>>()?, None),
                None => {
                    let f = expr::parse_curve(&text.unwrap_or_default())?;
                    let report = char_approx_roots(&f)?;
                    (report.roots, Some(ext(intersection_via_expansion(&f, &phi)?)))
                }
            };
            let expansion = semiroot_expand(&phi, &roots)?;
            let terms = expansion.iter().map(|(d, c)| TermOut { digits: d.clone(), coeff: c.display_in("X") }).collect();
            json(&ExpandOut { roots: roots.iter().map(|r| r.to_string()).collect(), terms, intersection }, pretty)
        }
        Command::Resolve { param, dot, semiroots } => {
            let p = expr::parse_param(&param)?;
            let graph = if semiroots { resolve_with_semiroots(&p)? } else { resolve(&p)? };
            if dot {
                Ok(to_dot(&graph).trim_end().to_string())
            } else {
                json(&GraphOut::new(&graph), pretty)
            }
        }
        Command::Invert { b0, param, b } => {
            let generic = match (param, b) {
                (Some(param), _) => char_sequence(&expr::parse_param(&param)?)?,
                (None, Some(b)) => CharData::from_b(b)?,
                _ => return Err(Failure::Usage("give --param or --b".into())),
            };
            json(&CharOut::new(&invert_coordinates(&generic, b0)?, None), pretty)
        }
        Command::EpiCheck { p, q } => {
            let r = epimorphism_check(&pair(&p, &q)?);
            let chain = r.epimorphism.then(|| r.chain.steps.iter().map(|s| s.to_string()).collect());
            json(&EpiOut { epimorphism: r.epimorphism, chain }, pretty)
        }
        Command::MeromChar { p, q, prec, expand } => {
            let pp = pair(&p, &q)?;
            let (n, y) = merom_param_at_infinity(&pp, prec)?;
            let md = merom_char_sequence(n, &y)?;
            let expansions = expand.map(|gammas| {
                gammas.into_iter().map(|gamma| StrictOut { gamma, digits: strict_expand(gamma, &md).ok() }).collect()
            });
            json(&MeromOut { n, y: y.display_in("t"), data: CharOut::new(&md, None), expansions }, pretty)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
