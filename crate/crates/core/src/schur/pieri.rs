use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{Algebra, Basis, Coeffs, Element};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableau::{strip_extensions, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    H,
    E,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Precondition(format!("unknown side `{other}`"))),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(Generator::H),
            "E" => Ok(Generator::E),
            other => Err(Error::Precondition(format!("unknown generator `{other}`"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::H => "H",
            Generator::E => "E",
        })
    }
}

/// Multiplies `X_α` by `H_r` or `E_r` on the given side, using the overhang rule.
///
/// Supported: `sh_α H_r`, `rsh_α E_r`, `H_r fsh_α` and `E_r bsh_α`. The first two
/// sum `X_β` over `β` obtained from `α` by a shin-horizontal `r`-strip; the last
/// two sum `X_β` over `β` with `β^r` obtained from `α^r` in the same way.
pub fn pieri(family: Family, alpha: &Composition, r: usize, side: Side, generator: Generator) -> Result<Element> {
    let sanctioned = matches!(
        (family, side, generator),
        (Family::Shin, Side::Right, Generator::H)
            | (Family::RowStrict, Side::Right, Generator::E)
            | (Family::Flipped, Side::Left, Generator::H)
            | (Family::Backward, Side::Left, Generator::E)
    );
    if !sanctioned {
        return Err(Error::Unsupported(format!(
            "no Pieri rule for {family} with {generator} on the {side}"
        )));
    }
    if r == 0 {
        return Err(Error::Precondition("Pieri rule needs r ≥ 1".into()));
    }
    let basis = Basis::nsym_of(family);
    let reversed = side == Side::Left;
    let start = if reversed { alpha.reverse() } else { alpha.clone() };
    let terms = strip_extensions(&start, r)
        .into_iter()
        .map(|b| (basis, if reversed { b.reverse() } else { b }, 1));
    Element::from_terms(Algebra::NSym, terms)
}

/// Expands `sh_α` in `H` by peeling off the last part:
/// `sh_α = sh_{ᾱ} H_{α_k} − Σ sh_β` over the other strip extensions `β` of
/// `ᾱ = (α_1, …, α_{k−1})`. Each `β` strictly dominates `α` in partial sums, so the
/// recursion terminates. Results are memoized per instance.
#[derive(Default)]
pub struct PieriRecursion {
    memo: HashMap<Composition, Coeffs>,
}

impl PieriRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shin(&mut self, alpha: &Composition) -> Element {
        let coeffs = self.coeffs(alpha);
        Element::from_terms(
            Algebra::NSym,
            coeffs.into_iter().map(|(c, k)| (Basis::H, c, k)),
        )
        .expect("H terms")
    }

    fn coeffs(&mut self, alpha: &Composition) -> Coeffs {
        if let Some(c) = self.memo.get(alpha) {
            return c.clone();
        }
        let mut out = Coeffs::new();
        match alpha.parts().split_last() {
            None => {
                out.insert(Composition::empty(), BigInt::from(1));
            }
            Some((&last, init)) => {
                let head = Composition::new(init.to_vec()).expect("parts stay positive");
                for (c, k) in self.coeffs(&head) {
                    add(&mut out, c.append(last), k);
                }
                for beta in strip_extensions(&head, last) {
                    if &beta == alpha {
                        continue;
                    }
                    for (c, k) in self.coeffs(&beta) {
                        add(&mut out, c, -k);
                    }
                }
            }
        }
        self.memo.insert(alpha.clone(), out.clone());
        out
    }
}

fn add(map: &mut Coeffs, c: Composition, k: BigInt) {
    let entry = map.entry(c.clone()).or_default();
    *entry += k;
    if *entry == BigInt::from(0) {
        map.remove(&c);
    }
}
