use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableau::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algebra {
    NSym,
    QSym,
}

impl Algebra {
    /// The basis used internally for products and coproducts.
    pub fn canonical(self) -> Basis {
        match self {
            Algebra::NSym => Basis::H,
            Algebra::QSym => Basis::M,
        }
    }

    pub fn bases(self) -> &'static [Basis] {
        match self {
            Algebra::NSym => &Basis::NSYM,
            Algebra::QSym => &Basis::QSYM,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::NSym => "NSym",
            Algebra::QSym => "QSym",
        })
    }
}

/// A basis of NSym or QSym. The starred variants are the QSym duals of the
/// four Schur-like NSym bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    H,
    E,
    R,
    Sh,
    Rsh,
    Fsh,
    Bsh,
    M,
    F,
    ShStar,
    RshStar,
    FshStar,
    BshStar,
}

impl Basis {
    pub const NSYM: [Basis; 7] = [
        Basis::H,
        Basis::E,
        Basis::R,
        Basis::Sh,
        Basis::Rsh,
        Basis::Fsh,
        Basis::Bsh,
    ];
    pub const QSYM: [Basis; 6] = [
        Basis::M,
        Basis::F,
        Basis::ShStar,
        Basis::RshStar,
        Basis::FshStar,
        Basis::BshStar,
    ];

    pub fn algebra(self) -> Algebra {
        match self {
            Basis::H | Basis::E | Basis::R | Basis::Sh | Basis::Rsh | Basis::Fsh | Basis::Bsh => {
                Algebra::NSym
            }
            _ => Algebra::QSym,
        }
    }

    /// The tableau family behind a Schur-like basis.
    pub fn family(self) -> Option<Family> {
        match self {
            Basis::Sh | Basis::ShStar => Some(Family::Shin),
            Basis::Rsh | Basis::RshStar => Some(Family::RowStrict),
            Basis::Fsh | Basis::FshStar => Some(Family::Flipped),
            Basis::Bsh | Basis::BshStar => Some(Family::Backward),
            _ => None,
        }
    }

    pub fn nsym_of(family: Family) -> Basis {
        match family {
            Family::Shin => Basis::Sh,
            Family::RowStrict => Basis::Rsh,
            Family::Flipped => Basis::Fsh,
            Family::Backward => Basis::Bsh,
        }
    }

    pub fn qsym_of(family: Family) -> Basis {
        Basis::nsym_of(family).dual().expect("Schur-like bases have duals")
    }

    /// The dual basis under the pairing, where one is registered.
    pub fn dual(self) -> Option<Basis> {
        Some(match self {
            Basis::H => Basis::M,
            Basis::M => Basis::H,
            Basis::R => Basis::F,
            Basis::F => Basis::R,
            Basis::Sh => Basis::ShStar,
            Basis::ShStar => Basis::Sh,
            Basis::Rsh => Basis::RshStar,
            Basis::RshStar => Basis::Rsh,
            Basis::Fsh => Basis::FshStar,
            Basis::FshStar => Basis::Fsh,
            Basis::Bsh => Basis::BshStar,
            Basis::BshStar => Basis::Bsh,
            Basis::E => return None,
        })
    }

    pub fn token(self) -> &'static str {
        match self {
            Basis::H => "H",
            Basis::E => "E",
            Basis::R => "R",
            Basis::Sh => "sh",
            Basis::Rsh => "rsh",
            Basis::Fsh => "fsh",
            Basis::Bsh => "bsh",
            Basis::M => "M",
            Basis::F => "F",
            Basis::ShStar => "sh*",
            Basis::RshStar => "rsh*",
            Basis::FshStar => "fsh*",
            Basis::BshStar => "bsh*",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::NSYM
            .iter()
            .chain(Basis::QSYM.iter())
            .copied()
            .find(|b| b.token() == s.trim())
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

impl<'de> Deserialize<'de> for Basis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for b in Basis::NSYM.iter().chain(Basis::QSYM.iter()) {
            assert_eq!(b.token().parse::<Basis>().unwrap(), *b);
        }
        assert!("S".parse::<Basis>().is_err());
    }

    #[test]
    fn every_basis_lives_in_one_algebra() {
        assert!(Basis::NSYM.iter().all(|b| b.algebra() == Algebra::NSym));
        assert!(Basis::QSYM.iter().all(|b| b.algebra() == Algebra::QSym));
        for fam in Family::ALL {
            assert_eq!(Basis::nsym_of(fam).family(), Some(fam));
            assert_eq!(Basis::qsym_of(fam).family(), Some(fam));
        }
    }
}
