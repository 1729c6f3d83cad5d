//! The `shinsym` command line.
//!
//! Every subcommand prints plain text by default and JSON with `--json`.
//! Exit status is 0 on success, 1 on a domain error or a failed verification
//! and 2 on a usage error (bad flags, unknown basis, malformed literal,
//! operands from different algebras, unknown identity).

pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    antipode, convert, coproduct, involution, multiply, pair, transition_matrix, Basis, Element, Involution,
};
use crate::composition::{Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::schur::{
    beth, chi, coproduct_formula, jacobi_trudi, pieri, qsym_basis, ribbon_multiply, schur_detect, skew, skew_ii,
    structure_coeffs, CoproductVariant, Generator, Side, SymBasis,
};
use crate::tableau::{
    count_k_shape, enumerate_standard, enumerate_tableaux, maximal_chains, strip_extensions, Family, Shape,
};

#[derive(Parser, Debug)]
#[command(name = "shinsym", version, about = "Exact computations with shin functions and their relatives in NSym and QSym")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Skew,
    Skew2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an element in another basis of the same algebra.
    Expand {
        #[arg(long)]
        basis: Basis,
        #[arg(allow_hyphen_values = true)]
        element: Element,
    },
    /// Same as `expand`, with the target given by `--to`.
    Convert {
        #[arg(long)]
        to: Basis,
        #[arg(allow_hyphen_values = true)]
        element: Element,
    },
    /// Multiply two or more elements of one algebra, left to right.
    Multiply {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        elements: Vec<Element>,
        /// Basis of the result (defaults to the first factor's basis); give it before the factors.
        #[arg(long)]
        basis: Option<Basis>,
    },
    /// Pair an NSym element with a QSym element.
    Pair {
        #[arg(allow_hyphen_values = true)]
        nsym: Element,
        #[arg(allow_hyphen_values = true)]
        qsym: Element,
    },
    /// Apply psi, rho or omega.
    Involute {
        which: Involution,
        #[arg(allow_hyphen_values = true)]
        element: Element,
        #[arg(long)]
        basis: Option<Basis>,
    },
    /// Apply the antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        element: Element,
        #[arg(long)]
        basis: Option<Basis>,
    },
    /// Multiply a Schur-like basis element by H_r or E_r with a Pieri rule.
    Pieri {
        #[arg(long, default_value = "sh")]
        family: Family,
        alpha: Composition,
        r: usize,
        /// left or right (defaults to the side the family supports).
        #[arg(long)]
        side: Option<Side>,
        /// H or E (defaults to the generator the family supports).
        #[arg(long)]
        generator: Option<Generator>,
    },
    /// Apply the creation operator beth_m, prepending m to shin indices.
    Beth {
        m: usize,
        #[arg(allow_hyphen_values = true)]
        element: Element,
    },
    /// Determinantal expansion for a monotone index.
    JacobiTrudi {
        #[arg(long, default_value = "sh")]
        family: Family,
        beta: Composition,
    },
    /// Multiply a Schur-like element by a ribbon R_beta using tableaux.
    RibbonMult {
        #[arg(long, default_value = "sh")]
        family: Family,
        alpha: Composition,
        beta: Composition,
    },
    /// Skew function X*_{alpha/beta}.
    Skew {
        #[arg(long, default_value = "sh")]
        family: Family,
        alpha: Composition,
        beta: Composition,
        #[arg(long, default_value = "M")]
        basis: Basis,
    },
    /// Skew-II function X*_{alpha//beta}.
    Skew2 {
        #[arg(long, default_value = "sh")]
        family: Family,
        alpha: Composition,
        beta: Composition,
        #[arg(long, default_value = "M")]
        basis: Basis,
    },
    /// Coproduct of an element, or of X*_alpha assembled from skew functions.
    Coproduct {
        #[arg(allow_hyphen_values = true, required_unless_present = "index")]
        element: Option<Element>,
        /// Assemble from skew (`skew`) or skew-II (`skew2`) functions.
        #[arg(long, value_enum, requires = "index")]
        formula: Option<Variant>,
        #[arg(long, default_value = "sh")]
        family: Family,
        #[arg(long, conflicts_with = "element")]
        index: Option<Composition>,
        /// Basis for both tensor legs.
        #[arg(long)]
        basis: Option<Basis>,
    },
    /// Structure coefficients of X_beta X_gamma.
    StructCoeffs {
        #[arg(long, default_value = "sh")]
        family: Family,
        beta: Composition,
        gamma: Composition,
    },
    /// Image of an NSym element in Sym.
    Chi {
        #[arg(allow_hyphen_values = true)]
        element: Element,
        /// s, h or m.
        #[arg(long, default_value = "s")]
        sym_basis: SymBasis,
    },
    /// Decide whether a QSym element is symmetric and expand it in Schur functions.
    SchurDetect {
        #[arg(allow_hyphen_values = true)]
        element: Element,
    },
    /// Enumerate or count tableaux of a shape such as [3,4], [3,4]/[2,1] or [4,3]//[1,2].
    Tableaux {
        shape: Shape,
        #[arg(long, default_value = "sh")]
        family: Family,
        /// Content as a weak composition; required unless --standard.
        #[arg(long, required_unless_present = "standard")]
        content: Option<WeakComposition>,
        #[arg(long)]
        standard: bool,
        #[arg(long)]
        count: bool,
    },
    /// Compositions obtained from alpha by adding a horizontal strip of size r.
    Strips { alpha: Composition, r: usize },
    /// Maximal chains from beta to alpha in the shin poset.
    PosetChains { beta: Composition, alpha: Composition },
    /// Transition matrix between two bases in one degree.
    TransitionMatrix {
        #[arg(long)]
        from: Basis,
        #[arg(long)]
        to: Basis,
        #[arg(long)]
        degree: usize,
    },
    /// Run identity checks.
    Verify {
        /// Identity name, or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// List the registered identities.
        #[arg(long)]
        list: bool,
    },
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownBasis(_)
            | Error::MalformedComposition(_)
            | Error::MalformedElement(_)
            | Error::CrossAlgebra(..)
            | Error::UnknownIdentity(_)
    )
}

/// Parses `args` (including the program name), writes output to `out` and
/// diagnostics to `err`, and returns the exit status.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command, cli.json) {
        Ok(Output { text, json, ok }) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable output"))
            } else {
                write!(out, "{text}")
            };
            if written.is_err() {
                return 1;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn of<T: std::fmt::Display + Serialize>(x: &T) -> Self {
        Output {
            text: format!("{x}\n"),
            json: serde_json::to_value(x).expect("serializable output"),
            ok: true,
        }
    }

    fn lines(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn comp_json(c: &Composition) -> Value {
    json!(c.parts())
}

fn in_basis(x: Element, basis: Option<Basis>) -> Result<Element> {
    match basis {
        Some(b) => convert(&x, b),
        None => Ok(x),
    }
}

fn execute(command: Command, json_requested: bool) -> Result<Output> {
    Ok(match command {
        Command::Expand { basis, element } | Command::Convert { to: basis, element } => {
            Output::of(&convert(&element, basis)?)
        }
        Command::Multiply { elements, basis } => {
            let target = basis.unwrap_or_else(|| elements[0].primary_basis());
            let mut acc = elements[0].clone();
            for x in &elements[1..] {
                acc = multiply(&acc, x)?;
            }
            Output::of(&convert(&acc, target)?)
        }
        Command::Pair { nsym, qsym } => {
            let k = pair(&nsym, &qsym)?;
            Output::lines(format!("{k}\n"), json!({ "value": k.to_string() }))
        }
        Command::Involute { which, element, basis } => Output::of(&in_basis(involution(which, &element)?, basis)?),
        Command::Antipode { element, basis } => Output::of(&in_basis(antipode(&element)?, basis)?),
        Command::Pieri { family, alpha, r, side, generator } => {
            let side = side.unwrap_or(if family.increasing_rows() { Side::Right } else { Side::Left });
            let generator = generator.unwrap_or(if family.strict_rows() { Generator::E } else { Generator::H });
            Output::of(&pieri(family, &alpha, r, side, generator)?)
        }
        Command::Beth { m, element } => Output::of(&beth(m, &element)?),
        Command::JacobiTrudi { family, beta } => Output::of(&jacobi_trudi(family, &beta)?),
        Command::RibbonMult { family, alpha, beta } => Output::of(&ribbon_multiply(family, &alpha, &beta)?),
        Command::Skew { family, alpha, beta, basis } => Output::of(&convert(&skew(family, &alpha, &beta)?, basis)?),
        Command::Skew2 { family, alpha, beta, basis } => {
            Output::of(&convert(&skew_ii(family, &alpha, &beta)?, basis)?)
        }
        Command::Coproduct { element, formula, family, index, basis } => match (element, index) {
            (Some(x), _) => {
                let t = coproduct(&x)?;
                let t = match basis {
                    Some(b) => t.convert(b, b)?,
                    None => t,
                };
                Output::of(&t)
            }
            (None, Some(alpha)) => {
                let star = Basis::qsym_of(family);
                let target = basis.unwrap_or(star);
                let (tensor, uncontained) = match formula {
                    None => (coproduct(&qsym_basis(family, alpha.clone()))?, Vec::new()),
                    Some(v) => {
                        let v = match v {
                            Variant::Skew => CoproductVariant::Skew,
                            Variant::Skew2 => CoproductVariant::SkewII,
                        };
                        let f = coproduct_formula(family, &alpha, v)?;
                        (f.tensor, f.uncontained)
                    }
                };
                let tensor = tensor.convert(target, target)?;
                let mut text = format!("{tensor}\n");
                for b in &uncontained {
                    text.push_str(&format!("note: nonzero term for uncontained index {b}\n"));
                }
                let uncontained_json: Vec<Value> = uncontained.iter().map(comp_json).collect();
                Output::lines(
                    text,
                    json!({ "coproduct": tensor, "uncontained": uncontained_json }),
                )
            }
            (None, None) => return Err(Error::Precondition("coproduct needs an element or --index".into())),
        },
        Command::StructCoeffs { family, beta, gamma } => {
            let coeffs = structure_coeffs(family, &beta, &gamma)?;
            let basis = Basis::nsym_of(family);
            let text: String = coeffs
                .iter()
                .map(|c| format!("{basis}{} {}\n", c.alpha, c.value))
                .collect();
            Output::lines(text, serde_json::to_value(&coeffs).expect("serializable output"))
        }
        Command::Chi { element, sym_basis } => Output::of(&chi(&element)?.to_basis(sym_basis)),
        Command::SchurDetect { element } => match schur_detect(&element)? {
            Some(s) => Output::lines(format!("{s}\n"), json!({ "symmetric": true, "schur": s })),
            None => Output::lines("not symmetric\n".into(), json!({ "symmetric": false })),
        },
        Command::Tableaux { shape, family, content, standard, count } => {
            let list = if standard {
                enumerate_standard(&shape, family)
            } else {
                let content = content.expect("clap enforces --content");
                if count {
                    let n = count_k_shape(family, &shape, &content)?;
                    return Ok(Output::lines(format!("{n}\n"), json!({ "count": n })));
                }
                enumerate_tableaux(&shape, family, &content)?
            };
            if count {
                let n = list.len();
                Output::lines(format!("{n}\n"), json!({ "count": n }))
            } else {
                let text = list.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n\n") + "\n";
                let text = if json_requested { String::new() } else { text };
                Output::lines(text, serde_json::to_value(&list).expect("serializable output"))
            }
        }
        Command::Strips { alpha, r } => {
            let list = strip_extensions(&alpha, r);
            let text: String = list.iter().map(|c| format!("{c}\n")).collect();
            Output::lines(text, Value::Array(list.iter().map(comp_json).collect()))
        }
        Command::PosetChains { beta, alpha } => {
            let chains = maximal_chains(&beta, &alpha)?;
            let text: String = chains
                .iter()
                .map(|ch| ch.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" < ") + "\n")
                .collect();
            let js = chains
                .iter()
                .map(|ch| Value::Array(ch.iter().map(comp_json).collect()))
                .collect();
            Output::lines(text, Value::Array(js))
        }
        Command::TransitionMatrix { from, to, degree } => Output::of(&transition_matrix(from, to, degree)?),
        Command::Verify { identity, max_degree, seed, list } => {
            if list {
                let all = verify::identities();
                let text: String = all.iter().map(|i| format!("{}: {}\n", i.name, i.description)).collect();
                let js = all
                    .iter()
                    .map(|i| json!({ "name": i.name, "description": i.description, "default_max_degree": i.default_max_degree }))
                    .collect();
                return Ok(Output::lines(text, Value::Array(js)));
            }
            let selected = if identity == "all" {
                verify::identities()
            } else {
                vec![verify::find(&identity)?]
            };
            let reports: Vec<verify::VerifyReport> = std::thread::scope(|s| {
                let handles: Vec<_> = selected
                    .iter()
                    .map(|id| s.spawn(move || verify::run_identity(id, max_degree, seed)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
            });
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut text: String = reports.iter().map(|r| r.to_string()).collect();
            text.push_str(&format!("{} identities, {} failed\n", reports.len(), failed));
            Output {
                text,
                json: serde_json::to_value(&reports).expect("serializable output"),
                ok: failed == 0,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("shinsym").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_remark_example() {
        let (code, out, _) = run_str(&["expand", "--basis", "H", "sh[3,2]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "H[3,2] - H[4,1]\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["expand", "--basis", "Q", "sh[3,2]"]).0, 2);
        assert_eq!(run_str(&["expand", "--basis", "H", "sh[3,x]"]).0, 2);
        assert_eq!(run_str(&["expand", "--basis", "M", "sh[3,2]"]).0, 2);
        assert_eq!(run_str(&["verify", "--identity", "nope"]).0, 2);
    }

    #[test]
    fn domain_error_exits_one() {
        let (code, _, err) = run_str(&["jacobi-trudi", "--family", "sh", "2,2,4"]);
        assert_eq!(code, 1);
        assert!(err.contains("precondition"));
    }
}
