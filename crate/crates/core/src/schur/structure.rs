use num_bigint::BigInt;
use serde::Serialize;

use super::nsym_basis;
use crate::algebra::{convert, multiply, Basis};
use crate::composition::Composition;
use crate::error::Result;
use crate::tableau::Family;

/// `C^α_{β,γ} = ⟨X_β X_γ, X*_α⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCoefficient {
    #[serde(serialize_with = "ser_comp")]
    pub alpha: Composition,
    #[serde(serialize_with = "ser_comp")]
    pub beta: Composition,
    #[serde(serialize_with = "ser_comp")]
    pub gamma: Composition,
    #[serde(serialize_with = "ser_int")]
    pub value: BigInt,
}

fn ser_comp<S: serde::Serializer>(c: &Composition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(c.parts())
}

fn ser_int<S: serde::Serializer>(k: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&k.to_string())
}

/// All nonzero `C^α_{β,γ}`, read off the product `X_β X_γ` in the family basis,
/// in canonical order of `α`.
pub fn structure_coeffs(family: Family, beta: &Composition, gamma: &Composition) -> Result<Vec<StructureCoefficient>> {
    let basis = Basis::nsym_of(family);
    let product = multiply(&nsym_basis(family, beta.clone()), &nsym_basis(family, gamma.clone()))?;
    let product = convert(&product, basis)?;
    Ok(product
        .terms()
        .map(|(_, alpha, k)| StructureCoefficient {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            value: k.clone(),
        })
        .collect())
}
