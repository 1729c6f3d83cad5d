//! Text and JSON forms of elements.
//!
//! Text form: `H[3,2] - 2 H[4,1]`, terms in canonical order, unit coefficients
//! omitted, the zero element written `0`. Parsing accepts the same grammar with
//! arbitrary whitespace and an optional `*` between coefficient and basis.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::basis::{Algebra, Basis};
use super::element::{Element, TensorElement, Term};
use crate::composition::Composition;
use crate::error::{Error, Result};

fn write_signed<W: fmt::Write>(f: &mut W, first: bool, k: &BigInt, body: &str) -> fmt::Result {
    let neg = k.sign() == Sign::Minus;
    match (first, neg) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    let abs = k.abs();
    if abs.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{abs} {body}")
    }
}

fn term_str((b, c): &Term) -> String {
    format!("{b}{c}")
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c, k)) in self.terms().enumerate() {
            write_signed(f, i == 0, k, &term_str(&(*b, c.clone())))?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, r, k)) in self.terms().enumerate() {
            let body = format!("{} ⊗ {}", term_str(l), term_str(r));
            write_signed(f, i == 0, k, &body)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii input")
    }
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if !cleaned.is_ascii() {
            return Err(Error::MalformedElement(input.to_string()));
        }
        let bad = |why: &str| Error::MalformedElement(format!("{why} in `{input}`"));
        let mut cur = Cursor {
            s: cleaned.as_bytes(),
            pos: 0,
        };
        let mut terms: Vec<(Basis, Composition, BigInt)> = Vec::new();
        let mut first = true;
        while cur.peek().is_some() {
            let mut negative = false;
            match cur.peek() {
                Some(b'+') => cur.pos += 1,
                Some(b'-') => {
                    negative = true;
                    cur.pos += 1;
                }
                _ if first => {}
                _ => return Err(bad("expected `+` or `-`")),
            }
            first = false;
            let digits = cur.take_while(|c| c.is_ascii_digit()).to_string();
            let mut coeff = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            };
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            }
            let mut token = cur.take_while(|c| c.is_ascii_alphabetic()).to_string();
            if token.is_empty() {
                return Err(bad("missing basis token"));
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
                token.push('*');
            }
            let basis: Basis = token.parse()?;
            if cur.peek() != Some(b'[') {
                return Err(bad("missing `[`"));
            }
            let index = cur.take_while(|c| c != b']').to_string() + "]";
            if cur.peek() != Some(b']') {
                return Err(bad("missing `]`"));
            }
            cur.pos += 1;
            let comp: Composition = index.parse()?;
            if negative {
                coeff = -coeff;
            }
            terms.push((basis, comp, coeff));
        }
        let algebra = match terms.first() {
            Some((b, _, _)) => b.algebra(),
            None => return Err(bad("no terms")),
        };
        if let Some((b, _, _)) = terms.iter().find(|(b, _, _)| b.algebra() != algebra) {
            return Err(Error::CrossAlgebra(algebra, b.algebra()));
        }
        Element::from_terms(algebra, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    basis: Basis,
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    algebra: Algebra,
    terms: Vec<TermJson>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            algebra: self.algebra(),
            terms: self
                .terms()
                .map(|(b, c, k)| TermJson {
                    basis: *b,
                    index: c.parts().to_vec(),
                    coeff: k.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ElementJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = Composition::new(t.index).map_err(D::Error::custom)?;
            let k: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            terms.push((t.basis, c, k));
        }
        Element::from_terms(raw.algebra, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct TensorTermJson {
    left: TermJson,
    right: TermJson,
    coeff: String,
}

#[derive(Serialize)]
struct TensorJson {
    algebra: Algebra,
    terms: Vec<TensorTermJson>,
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let leg = |(b, c): &Term| TermJson {
            basis: *b,
            index: c.parts().to_vec(),
            coeff: "1".into(),
        };
        TensorJson {
            algebra: self.algebra(),
            terms: self
                .terms()
                .map(|(l, r, k)| TensorTermJson {
                    left: leg(l),
                    right: leg(r),
                    coeff: k.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn text_round_trip() {
        let e: Element = "H[3,2] - H[4,1]".parse().unwrap();
        assert_eq!(e.to_string(), "H[3,2] - H[4,1]");
        let e: Element = " -2 sh*[2,1] + 3*F[1,1,1] ".parse().unwrap();
        assert_eq!(e.to_string(), "3 F[1,1,1] - 2 sh*[2,1]");
        let e: Element = "H[4,1] + H[3,2] - H[4,1]".parse().unwrap();
        assert_eq!(e.to_string(), "H[3,2]");
        let e: Element = "H[1] - H[1]".parse().unwrap();
        assert_eq!(e.to_string(), "0");
        assert_eq!("E[]".parse::<Element>().unwrap().to_string(), "E[]");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("X[1]".parse::<Element>(), Err(Error::UnknownBasis(_))));
        assert!(matches!("H[1,0]".parse::<Element>(), Err(Error::MalformedComposition(_))));
        assert!(matches!("H[1] + M[1]".parse::<Element>(), Err(Error::CrossAlgebra(..))));
        assert!("H[1] H[2]".parse::<Element>().is_err());
        assert!("".parse::<Element>().is_err());
        assert!("H[1".parse::<Element>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = Element::term(Basis::H, comp![3, 2], 1) - Element::term(Basis::H, comp![4, 1], 1);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"algebra":"NSym","terms":[{"basis":"H","index":[3,2],"coeff":"1"},{"basis":"H","index":[4,1],"coeff":"-1"}]}"#
        );
        let back: Element = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }
}
